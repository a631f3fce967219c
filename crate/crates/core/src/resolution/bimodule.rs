use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, BoundQuiverAlgebra};
use crate::linalg::{Field, Matrix, SparseVec};

/// A finite direct sum of projective bimodules `P(i,j) = A e_i ⊗ e_j A`, one per generator.
/// Vertices are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeBimodule {
    pub generators: Vec<(usize, usize)>,
}

impl FreeBimodule {
    pub fn new(generators: Vec<(usize, usize)>) -> Self {
        FreeBimodule { generators }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn position(&self, g: (usize, usize)) -> Option<usize> {
        self.generators.iter().position(|&h| h == g)
    }

    /// Generator pairs with multiplicities.
    pub fn multiset(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for g in &self.generators {
            *m.entry(*g).or_insert(0) += 1;
        }
        m
    }
}

/// Basis of a free bimodule: triples `(generator, p, q)` standing for `p ⊗ q` in the
/// generator's summand, with `p` a basis path starting at the generator's `i` and `q` a
/// basis path ending at its `j`.
#[derive(Clone, Debug)]
pub struct BimoduleBasis {
    entries: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize, usize), usize>,
}

impl BimoduleBasis {
    pub fn new<K: Field>(alg: &BoundQuiverAlgebra<K>, module: &FreeBimodule) -> Self {
        let mut entries = Vec::new();
        for (g, &(i, j)) in module.generators.iter().enumerate() {
            for p in (0..alg.dim()).filter(|&p| alg.source(p) == i) {
                for q in (0..alg.dim()).filter(|&q| alg.target(q) == j) {
                    entries.push((g, p, q));
                }
            }
        }
        let index = entries.iter().enumerate().map(|(k, &t)| (t, k)).collect();
        BimoduleBasis { entries, index }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, k: usize) -> (usize, usize, usize) {
        self.entries[k]
    }

    pub fn entries(&self) -> &[(usize, usize, usize)] {
        &self.entries
    }

    pub fn index(&self, g: usize, p: usize, q: usize) -> Option<usize> {
        self.index.get(&(g, p, q)).copied()
    }

    /// Index of the generator `e_i ⊗ e_j` itself.
    pub fn generator_index<K: Field>(&self, alg: &BoundQuiverAlgebra<K>, module: &FreeBimodule, g: usize) -> usize {
        let (i, j) = module.generators[g];
        self.index(g, alg.vertex_idempotent(i), alg.vertex_idempotent(j))
            .expect("generator lies in the basis")
    }
}

/// Element of a free bimodule: coefficients on `(generator, left path, right path)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BimoduleElement<K> {
    terms: BTreeMap<(usize, usize, usize), K>,
}

impl<K: Field> BimoduleElement<K> {
    pub fn zero() -> Self {
        BimoduleElement { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, g: usize, p: usize, q: usize, c: K) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((g, p, q)).or_insert_with(K::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&(g, p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `x · self · y` for algebra elements given as sparse vectors.
    pub fn sandwich(&self, alg: &BoundQuiverAlgebra<K>, x: &[(usize, K)], y: &[(usize, K)]) -> Self {
        let mut out = Self::zero();
        for (&(g, p, q), c) in &self.terms {
            for (xi, xc) in x {
                let left = alg.mul_basis(*xi, p);
                if left.is_empty() {
                    continue;
                }
                for (yi, yc) in y {
                    let right = alg.mul_basis(q, *yi);
                    for (l, lc) in left {
                        for (r, rc) in right {
                            out.add_term(g, *l, *r, c.clone() * xc.clone() * yc.clone() * lc.clone() * rc.clone());
                        }
                    }
                }
            }
        }
        out
    }

    pub fn to_vector(&self, basis: &BimoduleBasis) -> SparseVec<K> {
        let mut v: SparseVec<K> = self
            .terms
            .iter()
            .map(|(&(g, p, q), c)| (basis.index(g, p, q).expect("term lies in the basis"), c.clone()))
            .collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    pub fn from_vector(basis: &BimoduleBasis, v: &[(usize, K)]) -> Self {
        let mut out = Self::zero();
        for (k, c) in v {
            let (g, p, q) = basis.entry(*k);
            out.add_term(g, p, q, c.clone());
        }
        out
    }

    pub fn display(&self, alg: &BoundQuiverAlgebra<K>, module: &FreeBimodule) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(&(g, p, q), c)| {
                let (i, j) = module.generators[g];
                let coeff = if c.is_one() {
                    String::new()
                } else if (-c.clone()).is_one() {
                    "-".into()
                } else {
                    format!("{c}*")
                };
                format!("{coeff}{}⊗{}[{i},{j}]", alg.label(p), alg.label(q))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Bimodule map between free bimodules, given by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMap<K> {
    pub source: FreeBimodule,
    pub target: FreeBimodule,
    pub images: Vec<BimoduleElement<K>>,
}

impl<K: Field> BimoduleMap<K> {
    /// Image of an arbitrary element of the source.
    pub fn apply(&self, alg: &BoundQuiverAlgebra<K>, x: &BimoduleElement<K>) -> BimoduleElement<K> {
        let mut out = BimoduleElement::zero();
        for (&(g, p, q), c) in x.terms() {
            let part = self.images[g].sandwich(alg, &[(p, c.clone())], &[(q, K::one())]);
            for (&(h, l, r), d) in part.terms() {
                out.add_term(h, l, r, d.clone());
            }
        }
        out
    }

    /// Matrix with columns indexed by the source basis and rows by the target basis.
    pub fn matrix(&self, alg: &BoundQuiverAlgebra<K>, source: &BimoduleBasis, target: &BimoduleBasis) -> Matrix<K> {
        let columns: Vec<SparseVec<K>> = source
            .entries()
            .iter()
            .map(|&(g, p, q)| {
                self.images[g]
                    .sandwich(alg, &[(p, K::one())], &[(q, K::one())])
                    .to_vector(target)
            })
            .collect();
        Matrix::from_sparse_columns(target.dim(), &columns)
    }

    /// Checks that the image of each generator `(i,j)` lies in `e_i · target · e_j`.
    pub fn respects_vertices(&self, alg: &BoundQuiverAlgebra<K>) -> Result<(), usize> {
        for (g, img) in self.images.iter().enumerate() {
            let (i, j) = self.source.generators[g];
            for (&(_, p, q), _) in img.terms() {
                if alg.target(p) != i || alg.source(q) != j {
                    return Err(g);
                }
            }
        }
        Ok(())
    }
}

/// The multiplication map `R_0 -> A` on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation<K> {
    pub images: Vec<AlgebraElement<K>>,
}

impl<K: Field> Augmentation<K> {
    pub fn apply(&self, alg: &BoundQuiverAlgebra<K>, x: &BimoduleElement<K>) -> AlgebraElement<K> {
        let mut acc = AlgebraElement::zero();
        for (&(g, p, q), c) in x.terms() {
            let left = alg.structure().mul_sparse(&[(p, c.clone())], self.images[g].terms());
            let full = alg.structure().mul_sparse(&left, &[(q, K::one())]);
            acc = acc.add(&AlgebraElement::from_sparse(full));
        }
        acc
    }

    pub fn matrix(&self, alg: &BoundQuiverAlgebra<K>, source: &BimoduleBasis) -> Matrix<K> {
        let columns: Vec<SparseVec<K>> = source
            .entries()
            .iter()
            .map(|&(g, p, q)| {
                let mut x = BimoduleElement::zero();
                x.add_term(g, p, q, K::one());
                self.apply(alg, &x).into_sparse()
            })
            .collect();
        Matrix::from_sparse_columns(alg.dim(), &columns)
    }
}

/// A complex of free bimodules `R_N -> ... -> R_0 -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleComplex<K> {
    /// `terms[n]` is `R_n`.
    pub terms: Vec<FreeBimodule>,
    /// `maps[n - 1]` is `d_n : R_n -> R_{n-1}`.
    pub maps: Vec<BimoduleMap<K>>,
    pub augmentation: Augmentation<K>,
}

impl<K: Field> BimoduleComplex<K> {
    /// Index of the top degree `N`.
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn term(&self, n: usize) -> FreeBimodule {
        self.terms.get(n).cloned().unwrap_or_default()
    }

    /// `d_n` for `n >= 1`.
    pub fn differential(&self, n: usize) -> Option<&BimoduleMap<K>> {
        if n == 0 {
            return None;
        }
        self.maps.get(n - 1)
    }

    /// Drops every degree above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        BimoduleComplex {
            terms: self.terms.iter().take(n + 1).cloned().collect(),
            maps: self.maps.iter().take(n).cloned().collect(),
            augmentation: self.augmentation.clone(),
        }
    }
}
