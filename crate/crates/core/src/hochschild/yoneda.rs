//! Yoneda products on `HH*` computed on the minimal resolution.
//!
//! For cocycles `α` of degree `m` and `β` of degree `n`, `β` is lifted to a chain map
//! `σ_t : R_{n+t} -> R_t` with `ε σ_0 = β` and `d_t σ_t = σ_{t-1} d_{n+t}`, and
//! `α ⋆ β = α ∘ σ_m`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::linalg::{kernel_basis, solve, to_dense, Field, Matrix, SparseVec};
use crate::resolution::{BimoduleBasis, BimoduleComplex, BimoduleElement, BimoduleMap};

use super::cochain::{Cochain, CochainComplex};
use super::HochschildError;

/// How each lift equation is solved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftStrategy {
    /// The particular solution returned by the eliminator.
    Canonical,
    /// The canonical solution plus a seeded random element of the solution space, so a
    /// second computation uses genuinely different lifts.
    Perturbed { seed: u64 },
}

/// Shared data for products on one resolution.
pub struct YonedaContext<'a, K> {
    pub alg: &'a BoundQuiverAlgebra<K>,
    pub complex: &'a BimoduleComplex<K>,
    pub cochains: &'a CochainComplex<K>,
    bases: Vec<BimoduleBasis>,
    /// Matrix of `d_t` (augmentation at `t = 0`) and its transpose.
    matrices: Vec<(Matrix<K>, Matrix<K>)>,
}

impl<'a, K: Field> YonedaContext<'a, K> {
    pub fn new(
        alg: &'a BoundQuiverAlgebra<K>,
        complex: &'a BimoduleComplex<K>,
        cochains: &'a CochainComplex<K>,
    ) -> Self {
        let bases: Vec<BimoduleBasis> = complex.terms.iter().map(|t| BimoduleBasis::new(alg, t)).collect();
        let matrices = (0..bases.len())
            .map(|t| {
                let m = if t == 0 {
                    complex.augmentation.matrix(alg, &bases[0])
                } else {
                    complex.maps[t - 1].matrix(alg, &bases[t], &bases[t - 1])
                };
                let tr = m.transpose();
                (m, tr)
            })
            .collect();
        YonedaContext {
            alg,
            complex,
            cochains,
            bases,
            matrices,
        }
    }

    /// Columns of `basis` lying in `e_i · R · e_j`.
    fn corner(&self, t: usize, i: usize, j: usize) -> Vec<usize> {
        self.bases[t]
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, &(_, p, q))| self.alg.target(p) == i && self.alg.source(q) == j)
            .map(|(k, _)| k)
            .collect()
    }

    /// Solves `D x = rhs` for `x` supported on `cols`, adding a random kernel element under
    /// the perturbed strategy.
    fn solve_corner(
        &self,
        t: usize,
        cols: &[usize],
        rhs: &SparseVec<K>,
        strategy: LiftStrategy,
        rng: &mut Option<ChaCha8Rng>,
    ) -> Option<SparseVec<K>> {
        let (full, tr) = &self.matrices[t];
        let restricted: Vec<SparseVec<K>> = cols.iter().map(|&c| tr.row(c).to_vec()).collect();
        let m = Matrix::from_sparse_columns(full.rows(), &restricted);
        let mut x = solve(&m, &to_dense(rhs, full.rows()))?;
        if let (LiftStrategy::Perturbed { .. }, Some(rng)) = (strategy, rng.as_mut()) {
            for v in kernel_basis(&m) {
                let c = K::from_i64(rng.gen_range(-3..=3));
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi = xi.clone() + c.clone() * vi;
                }
            }
        }
        Some(
            x.into_iter()
                .zip(cols)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, &k)| (k, c))
                .collect(),
        )
    }

    /// Lifts `β` to `σ_0, ..., σ_upto`.
    pub fn lift(
        &self,
        beta: &Cochain<K>,
        upto: usize,
        strategy: LiftStrategy,
    ) -> Result<Vec<BimoduleMap<K>>, HochschildError> {
        let n = beta.degree;
        let mut rng = match strategy {
            LiftStrategy::Canonical => None,
            LiftStrategy::Perturbed { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        };
        let mut sigmas: Vec<BimoduleMap<K>> = Vec::new();
        for t in 0..=upto {
            let source = self.complex.term(n + t);
            let target = self.complex.term(t);
            if source.is_zero() || target.is_zero() {
                sigmas.push(BimoduleMap {
                    source: source.clone(),
                    target,
                    images: vec![BimoduleElement::zero(); source.rank()],
                });
                continue;
            }
            let mut images = Vec::with_capacity(source.rank());
            for (g, &(i, j)) in source.generators.iter().enumerate() {
                let rhs: SparseVec<K> = if t == 0 {
                    beta.components[g].terms().to_vec()
                } else {
                    let dg = &self.complex.maps[n + t - 1].images[g];
                    let img = sigmas[t - 1].apply(self.alg, dg);
                    img.to_vector(&self.bases[t - 1])
                };
                let cols = self.corner(t, i, j);
                let x = self
                    .solve_corner(t, &cols, &rhs, strategy, &mut rng)
                    .ok_or(HochschildError::LiftInconsistent { step: t, generator: g })?;
                images.push(BimoduleElement::from_vector(&self.bases[t], &x));
            }
            sigmas.push(BimoduleMap { source, target, images });
        }
        Ok(sigmas)
    }

    /// `α ⋆ β = α ∘ σ_m` where `m = deg α`.
    pub fn product_with(
        &self,
        alpha: &Cochain<K>,
        beta: &Cochain<K>,
        strategy: LiftStrategy,
    ) -> Result<Cochain<K>, HochschildError> {
        if !self.cochains.is_cocycle(alpha) {
            return Err(HochschildError::NotCocycle(alpha.degree));
        }
        if !self.cochains.is_cocycle(beta) {
            return Err(HochschildError::NotCocycle(beta.degree));
        }
        let m = alpha.degree;
        let deg = m + beta.degree;
        if deg > self.cochains.top() {
            return Ok(self.cochains.zero(deg));
        }
        let sigmas = self.lift(beta, m, strategy)?;
        let sigma = &sigmas[m];
        Ok(Cochain {
            degree: deg,
            components: sigma.images.iter().map(|x| alpha.evaluate(self.alg, x)).collect(),
        })
    }

    pub fn product(&self, alpha: &Cochain<K>, beta: &Cochain<K>) -> Result<Cochain<K>, HochschildError> {
        self.product_with(alpha, beta, LiftStrategy::Canonical)
    }

    /// Do two cocycles of the same degree define the same class?
    pub fn cohomologous(&self, a: &Cochain<K>, b: &Cochain<K>) -> bool {
        if a.degree != b.degree {
            return false;
        }
        let diff = Cochain {
            degree: a.degree,
            components: a.components.iter().zip(&b.components).map(|(x, y)| x.sub(y)).collect(),
        };
        self.cochains.is_coboundary(&diff)
    }

    pub fn scale(&self, a: &Cochain<K>, c: &K) -> Cochain<K> {
        Cochain {
            degree: a.degree,
            components: a.components.iter().map(|x| x.scale(c)).collect(),
        }
    }
}
