use crate::algebra::{AlgebraElement, BoundQuiverAlgebra};
use crate::graded::GradedDims;
use crate::linalg::{kernel_basis, rank, solve, to_sparse, Echelon, Field, Matrix, SparseVec};
use crate::resolution::{BimoduleComplex, BimoduleElement, FreeBimodule};

/// A cochain in `Hom(R_n, A)`: one algebra element per generator `(i,j)` of `R_n`, lying in
/// `e_i A e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain<K> {
    pub degree: usize,
    pub components: Vec<AlgebraElement<K>>,
}

impl<K: Field> Cochain<K> {
    /// `f(x)` for an element of the free bimodule the cochain is defined on.
    pub fn evaluate(&self, alg: &BoundQuiverAlgebra<K>, x: &BimoduleElement<K>) -> AlgebraElement<K> {
        let a = alg.structure();
        let mut acc = Vec::new();
        for (&(g, p, q), c) in x.terms() {
            let left = a.mul_sparse(&[(p, c.clone())], self.components[g].terms());
            let full = a.mul_sparse(&left, &[(q, K::one())]);
            acc = crate::linalg::add_scaled(&acc, &K::one(), &full);
        }
        AlgebraElement::from_sparse(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(AlgebraElement::is_zero)
    }

    pub fn display(&self, alg: &BoundQuiverAlgebra<K>, module: &FreeBimodule) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(g, x)| {
                let (i, j) = module.generators[g];
                format!("({i},{j}) ↦ {}", alg.display(x))
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(", ")
        }
    }
}

/// Coordinates for `Hom(R_n, A)`: generator `g` contributes the basis elements of
/// `e_i A e_j`.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    pub module: FreeBimodule,
    /// `(generator, algebra basis index)` per coordinate.
    pub coords: Vec<(usize, usize)>,
}

impl CochainSpace {
    pub fn new<K: Field>(alg: &BoundQuiverAlgebra<K>, module: &FreeBimodule) -> Self {
        let mut coords = Vec::new();
        for (g, &(i, j)) in module.generators.iter().enumerate() {
            for x in 0..alg.dim() {
                if alg.target(x) == i && alg.source(x) == j {
                    coords.push((g, x));
                }
            }
        }
        CochainSpace {
            module: module.clone(),
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn to_cochain<K: Field>(&self, degree: usize, v: &[(usize, K)]) -> Cochain<K> {
        let mut components = vec![AlgebraElement::zero(); self.module.rank()];
        for (k, c) in v {
            let (g, x) = self.coords[*k];
            components[g] = components[g].add(&AlgebraElement::from_terms([(x, c.clone())]));
        }
        Cochain { degree, components }
    }

    pub fn to_vector<K: Field>(&self, f: &Cochain<K>) -> SparseVec<K> {
        let mut v = Vec::new();
        for (k, &(g, x)) in self.coords.iter().enumerate() {
            let c = f.components[g].coeff(x);
            if !c.is_zero() {
                v.push((k, c));
            }
        }
        v
    }
}

/// `Hom(R_•, A)` with its differentials and a chosen basis of cohomology in each degree.
#[derive(Clone, Debug)]
pub struct CochainComplex<K> {
    pub spaces: Vec<CochainSpace>,
    /// `deltas[n] : C^n -> C^{n+1}`, rows indexed by `C^{n+1}`.
    pub deltas: Vec<Matrix<K>>,
    coboundaries: Vec<Echelon<K>>,
    /// Cocycles reduced modulo coboundaries, one per basis class.
    class_reps: Vec<Vec<SparseVec<K>>>,
}

impl<K: Field> CochainComplex<K> {
    pub fn new(alg: &BoundQuiverAlgebra<K>, complex: &BimoduleComplex<K>) -> Self {
        let spaces: Vec<CochainSpace> = complex.terms.iter().map(|t| CochainSpace::new(alg, t)).collect();
        let top = spaces.len() - 1;
        let mut deltas = Vec::new();
        for n in 0..top {
            let d = &complex.maps[n];
            let columns: Vec<SparseVec<K>> = spaces[n]
                .coords
                .iter()
                .map(|&(g, x)| {
                    let mut f = Cochain {
                        degree: n,
                        components: vec![AlgebraElement::zero(); spaces[n].module.rank()],
                    };
                    f.components[g] = AlgebraElement::basis(x);
                    let img = Cochain {
                        degree: n + 1,
                        components: d.images.iter().map(|im| f.evaluate(alg, im)).collect(),
                    };
                    spaces[n + 1].to_vector(&img)
                })
                .collect();
            deltas.push(Matrix::from_sparse_columns(spaces[n + 1].dim(), &columns));
        }
        let mut coboundaries = Vec::new();
        let mut class_reps = Vec::new();
        for n in 0..=top {
            let b = if n == 0 {
                Echelon::new(spaces[0].dim())
            } else {
                let t = deltas[n - 1].transpose();
                Echelon::from_rows(spaces[n].dim(), (0..t.rows()).map(|r| t.row(r).to_vec()))
            };
            let cocycles: Vec<SparseVec<K>> = if n < top {
                kernel_basis(&deltas[n]).iter().map(|v| to_sparse(v)).collect()
            } else {
                (0..spaces[n].dim()).map(|k| vec![(k, K::one())]).collect()
            };
            let mut span = b.clone();
            let mut reps = Vec::new();
            for z in cocycles {
                if span.insert(z.clone()).is_some() {
                    reps.push(b.reduce(&z));
                }
            }
            coboundaries.push(b);
            class_reps.push(reps);
        }
        CochainComplex {
            spaces,
            deltas,
            coboundaries,
            class_reps,
        }
    }

    pub fn top(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, n: usize) -> Option<&CochainSpace> {
        self.spaces.get(n)
    }

    /// `dim Hom(R_n, A)`.
    pub fn hom_dims(&self) -> Vec<usize> {
        self.spaces.iter().map(CochainSpace::dim).collect()
    }

    /// `dim ker δ^n`, with `δ^N = 0`.
    pub fn cocycle_dim(&self, n: usize) -> usize {
        match self.deltas.get(n) {
            Some(d) => self.spaces[n].dim() - rank(d),
            None => self.spaces.get(n).map_or(0, CochainSpace::dim),
        }
    }

    pub fn hh_dims(&self) -> GradedDims {
        GradedDims::new(self.class_reps.iter().map(Vec::len).collect())
    }

    /// `dim Hom(Ker d_n, A)` for `n >= 1`. By exactness `Ker d_n ≅ R_{n+1} / Im d_{n+2}`, so
    /// this is `dim ker δ^{n+1}`; it vanishes at the top degree where `d_N` is injective.
    pub fn kernel_hom_dim(&self, n: usize) -> usize {
        if n >= self.top() {
            0
        } else {
            self.cocycle_dim(n + 1)
        }
    }

    pub fn is_cocycle(&self, f: &Cochain<K>) -> bool {
        match self.deltas.get(f.degree) {
            Some(d) => d.mul_sparse(&self.spaces[f.degree].to_vector(f)).is_empty(),
            None => true,
        }
    }

    pub fn is_coboundary(&self, f: &Cochain<K>) -> bool {
        match self.spaces.get(f.degree) {
            Some(s) => self.coboundaries[f.degree].contains(&s.to_vector(f)),
            None => f.is_zero(),
        }
    }

    /// Basis of `HH^n` as cocycle representatives.
    pub fn class_basis(&self, n: usize) -> Vec<Cochain<K>> {
        match self.class_reps.get(n) {
            Some(reps) => reps.iter().map(|v| self.spaces[n].to_cochain(n, v)).collect(),
            None => Vec::new(),
        }
    }

    /// Coordinates of the class of a cocycle in [`Self::class_basis`].
    pub fn class_coordinates(&self, f: &Cochain<K>) -> Option<Vec<K>> {
        let n = f.degree;
        let Some(space) = self.spaces.get(n) else {
            return Some(Vec::new());
        };
        let b = &self.coboundaries[n];
        let reps = &self.class_reps[n];
        let columns: Vec<SparseVec<K>> = b.rows().iter().chain(reps.iter()).cloned().collect();
        let m = Matrix::from_sparse_columns(space.dim(), &columns);
        let rhs = crate::linalg::to_dense(&space.to_vector(f), space.dim());
        solve(&m, &rhs).map(|x| x[b.rank()..].to_vec())
    }

    pub fn zero(&self, degree: usize) -> Cochain<K> {
        Cochain {
            degree,
            components: vec![AlgebraElement::zero(); self.spaces.get(degree).map_or(0, |s| s.module.rank())],
        }
    }
}
