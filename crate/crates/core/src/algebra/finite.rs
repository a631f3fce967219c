use crate::linalg::{add_scaled, kernel_basis, Echelon, Field, Matrix, SparseVec};

use super::element::AlgebraElement;

/// A finite-dimensional algebra given by structure constants on a fixed basis, together
/// with its Jacobson radical and a complete set of primitive orthogonal idempotents.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra<K> {
    labels: Vec<String>,
    table: Vec<Vec<SparseVec<K>>>,
    unit: SparseVec<K>,
    radical: Vec<SparseVec<K>>,
    idempotents: Vec<(String, SparseVec<K>)>,
}

impl<K: Field> FiniteAlgebra<K> {
    /// `table[a][b]` is the product of basis elements `a` and `b`.
    pub fn new(
        labels: Vec<String>,
        table: Vec<Vec<SparseVec<K>>>,
        unit: SparseVec<K>,
        radical: Vec<SparseVec<K>>,
        idempotents: Vec<(String, SparseVec<K>)>,
    ) -> Self {
        let n = labels.len();
        assert_eq!(table.len(), n);
        assert!(table.iter().all(|r| r.len() == n));
        FiniteAlgebra {
            labels,
            table,
            unit,
            radical,
            idempotents,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> AlgebraElement<K> {
        AlgebraElement::from_sparse(self.unit.clone())
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> &SparseVec<K> {
        &self.table[a][b]
    }

    pub fn mul_sparse(&self, a: &[(usize, K)], b: &[(usize, K)]) -> SparseVec<K> {
        let mut acc = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let t = &self.table[*i][*j];
                if !t.is_empty() {
                    acc = add_scaled(&acc, &(x.clone() * y.clone()), t);
                }
            }
        }
        acc
    }

    pub fn multiply(&self, a: &AlgebraElement<K>, b: &AlgebraElement<K>) -> AlgebraElement<K> {
        AlgebraElement::from_sparse(self.mul_sparse(a.terms(), b.terms()))
    }

    pub fn radical_basis(&self) -> &[SparseVec<K>] {
        &self.radical
    }

    pub fn idempotents(&self) -> &[(String, SparseVec<K>)] {
        &self.idempotents
    }

    pub fn display(&self, x: &AlgebraElement<K>) -> String {
        x.display_with(&self.labels)
    }

    /// Checks `(ab)c = a(bc)` on every triple of basis elements.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    let left = self.mul_sparse(&self.table[a][b], &[(c, K::one())]);
                    let right = self.mul_sparse(&[(a, K::one())], &self.table[b][c]);
                    left == right
                })
            })
        })
    }

    /// Checks that the unit is a two-sided identity on the basis.
    pub fn unit_acts_as_identity(&self) -> bool {
        (0..self.dim()).all(|a| {
            let basis = vec![(a, K::one())];
            self.mul_sparse(&self.unit, &basis) == basis && self.mul_sparse(&basis, &self.unit) == basis
        })
    }

    /// Basis of the center, obtained as the solution space of `z b = b z` for all basis `b`.
    pub fn center(&self) -> Vec<AlgebraElement<K>> {
        let n = self.dim();
        let columns: Vec<SparseVec<K>> = (0..n)
            .map(|k| {
                let mut col = Vec::new();
                for l in 0..n {
                    let comm = add_scaled(&self.table[k][l], &(-K::one()), &self.table[l][k]);
                    col.extend(comm.into_iter().map(|(m, x)| (l * n + m, x)));
                }
                col
            })
            .collect();
        let m = Matrix::from_sparse_columns(n * n, &columns);
        kernel_basis(&m)
            .into_iter()
            .map(|v| AlgebraElement::from_sparse(crate::linalg::to_sparse(&v)))
            .collect()
    }

    /// Echelon basis of the span of all products `u v` with `u` in `left`, `v` in `right`.
    pub fn span_products(&self, left: &[SparseVec<K>], right: &[SparseVec<K>]) -> Echelon<K> {
        let mut e = Echelon::new(self.dim());
        for u in left {
            for v in right {
                let p = self.mul_sparse(u, v);
                if !p.is_empty() {
                    e.insert(p);
                }
            }
        }
        e
    }

    /// Basis of the `power`-th power of the radical. `power` must be at least 1.
    pub fn radical_power(&self, power: usize) -> Vec<AlgebraElement<K>> {
        assert!(power >= 1, "radical power must be at least 1");
        let mut current: Vec<SparseVec<K>> = Echelon::from_rows(self.dim(), self.radical.iter().cloned())
            .rows()
            .to_vec();
        for _ in 1..power {
            current = self.span_products(&current, &self.radical).rows().to_vec();
        }
        current.into_iter().map(AlgebraElement::from_sparse).collect()
    }

    /// The two-sided ideal `A g A` generated by the given elements.
    pub fn ideal(&self, generators: &[AlgebraElement<K>]) -> TwoSidedIdeal<K> {
        let n = self.dim();
        let basis: Vec<SparseVec<K>> = (0..n).map(|i| vec![(i, K::one())]).collect();
        let mut e = Echelon::new(n);
        for g in generators {
            let left = self.span_products(&basis, &[g.terms().to_vec()]);
            for r in self.span_products(left.rows(), &basis).rows() {
                e.insert(r.clone());
            }
        }
        TwoSidedIdeal {
            generators: generators.to_vec(),
            span: e,
        }
    }

    /// Ideal generated by the sum of the named idempotents (by index into [`Self::idempotents`]).
    pub fn idempotent_ideal(&self, which: &[usize]) -> TwoSidedIdeal<K> {
        let eps = which.iter().fold(Vec::new(), |acc, &i| {
            add_scaled(&acc, &K::one(), &self.idempotents[i].1)
        });
        self.ideal(&[AlgebraElement::from_sparse(eps)])
    }

    /// Quotient by an ideal, on the complement basis of non-pivot coordinates.
    pub fn quotient(&self, ideal: &TwoSidedIdeal<K>) -> Quotient<K> {
        let free = ideal.span.free_columns();
        let mut position = vec![None; self.dim()];
        for (k, &c) in free.iter().enumerate() {
            position[c] = Some(k);
        }
        let project = |v: &SparseVec<K>| -> SparseVec<K> {
            ideal
                .span
                .reduce(v)
                .into_iter()
                .map(|(c, x)| (position[c].expect("reduced vector lives on free columns"), x))
                .collect()
        };
        let table = free
            .iter()
            .map(|&a| free.iter().map(|&b| project(&self.table[a][b])).collect())
            .collect();
        let radical = Echelon::from_rows(free.len(), self.radical.iter().map(&project))
            .rows()
            .to_vec();
        let idempotents = self
            .idempotents
            .iter()
            .map(|(name, x)| (name.clone(), project(x)))
            .filter(|(_, x)| !x.is_empty())
            .collect();
        let algebra = FiniteAlgebra {
            labels: free.iter().map(|&c| self.labels[c].clone()).collect(),
            table,
            unit: project(&self.unit),
            radical,
            idempotents,
        };
        Quotient {
            algebra,
            kept: free,
            ideal_span: ideal.span.clone(),
        }
    }
}

/// Two-sided ideal with its generators and an echelon basis of the closure.
#[derive(Clone, Debug)]
pub struct TwoSidedIdeal<K> {
    generators: Vec<AlgebraElement<K>>,
    span: Echelon<K>,
}

impl<K: Field> TwoSidedIdeal<K> {
    pub fn zero(dim: usize) -> Self {
        TwoSidedIdeal {
            generators: Vec::new(),
            span: Echelon::new(dim),
        }
    }

    pub fn generators(&self) -> &[AlgebraElement<K>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.span.rank() == 0
    }

    pub fn basis(&self) -> Vec<AlgebraElement<K>> {
        self.span
            .rows()
            .iter()
            .cloned()
            .map(AlgebraElement::from_sparse)
            .collect()
    }

    pub fn echelon(&self) -> &Echelon<K> {
        &self.span
    }

    pub fn contains(&self, x: &AlgebraElement<K>) -> bool {
        self.span.contains(x.terms())
    }
}

/// Quotient algebra `A/I` with the data needed to push elements of `A` down.
#[derive(Clone, Debug)]
pub struct Quotient<K> {
    pub algebra: FiniteAlgebra<K>,
    /// Basis indices of `A` that survive as the quotient basis, in order.
    pub kept: Vec<usize>,
    ideal_span: Echelon<K>,
}

impl<K: Field> Quotient<K> {
    pub fn project(&self, x: &AlgebraElement<K>) -> AlgebraElement<K> {
        let reduced = self.ideal_span.reduce(x.terms());
        AlgebraElement::from_terms(reduced.into_iter().map(|(c, v)| {
            let k = self
                .kept
                .binary_search(&c)
                .expect("reduced vector lives on kept columns");
            (k, v)
        }))
    }
}
