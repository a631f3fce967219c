use serde::{Deserialize, Serialize};

use crate::algebra::BoundQuiverAlgebra;
use crate::linalg::{rank, Field, Matrix};

use super::bimodule::{BimoduleBasis, BimoduleComplex, BimoduleElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub passed: bool,
    /// First failure found, if any.
    pub witness: Option<String>,
}

impl Check {
    fn pass() -> Self {
        Check {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Check {
            passed: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub degree: usize,
    pub generators: usize,
    pub dim: usize,
    /// Rank of `d_n` (of the augmentation for `n = 0`).
    pub rank: usize,
    pub kernel: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub squares_to_zero: Check,
    pub exact: Check,
    pub minimal: Check,
    pub degrees: Vec<DegreeStats>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.squares_to_zero.passed && self.exact.passed && self.minimal.passed
    }

    pub fn first_failure(&self) -> Option<String> {
        [
            ("d∘d = 0", &self.squares_to_zero),
            ("exactness", &self.exact),
            ("minimality", &self.minimal),
        ]
        .iter()
        .find(|(_, c)| !c.passed)
        .map(|(name, c)| format!("{name}: {}", c.witness.clone().unwrap_or_default()))
    }
}

/// Checks that `c` is a complex, that it is exact with homology `A` in degree 0 (the top
/// differential must be injective), and that every differential lands in
/// `rad·R + R·rad`.
pub fn verify_complex<K: Field>(alg: &BoundQuiverAlgebra<K>, c: &BimoduleComplex<K>) -> VerificationReport {
    let bases: Vec<BimoduleBasis> = c.terms.iter().map(|t| BimoduleBasis::new(alg, t)).collect();
    let mut matrices: Vec<Matrix<K>> = Vec::with_capacity(c.terms.len());
    matrices.push(c.augmentation.matrix(alg, &bases[0]));
    for (n, d) in c.maps.iter().enumerate() {
        matrices.push(d.matrix(alg, &bases[n + 1], &bases[n]));
    }

    let mut squares = Check::pass();
    'outer: for n in 1..=c.length() {
        let d = &c.maps[n - 1];
        for (g, img) in d.images.iter().enumerate() {
            let (comp, zero) = if n == 1 {
                let x = c.augmentation.apply(alg, img);
                (alg.display(&x), x.is_zero())
            } else {
                let x = c.maps[n - 2].apply(alg, img);
                (x.display(alg, &c.maps[n - 2].target), x.is_zero())
            };
            if !zero {
                let (i, j) = d.source.generators[g];
                squares = Check::fail(format!("d_{}(d_{n}(generator {g} = ({i},{j}))) = {comp}", n - 1));
                break 'outer;
            }
        }
    }
    if squares.passed {
        for (n, d) in c.maps.iter().enumerate() {
            if let Err(g) = d.respects_vertices(alg) {
                squares = Check::fail(format!("d_{} sends generator {g} outside its vertex component", n + 1));
                break;
            }
        }
    }

    let ranks: Vec<usize> = matrices.iter().map(rank).collect();
    let degrees: Vec<DegreeStats> = (0..c.terms.len())
        .map(|n| DegreeStats {
            degree: n,
            generators: c.terms[n].rank(),
            dim: bases[n].dim(),
            rank: ranks[n],
            kernel: bases[n].dim() - ranks[n],
        })
        .collect();

    let mut exact = Check::pass();
    if ranks[0] != alg.dim() {
        exact = Check::fail(format!("augmentation has rank {} < dim A = {}", ranks[0], alg.dim()));
    } else {
        for n in 0..c.terms.len() {
            let next = ranks.get(n + 1).copied().unwrap_or(0);
            if degrees[n].kernel != next {
                exact = Check::fail(format!(
                    "degree {n}: dim ker = {} but rank of incoming differential = {next}",
                    degrees[n].kernel
                ));
                break;
            }
        }
    }

    let mut minimal = Check::pass();
    'min: for (n, d) in c.maps.iter().enumerate() {
        for (g, img) in d.images.iter().enumerate() {
            for (&(h, p, q), _) in img.terms() {
                if alg.basis_path(p).is_trivial() && alg.basis_path(q).is_trivial() {
                    let mut x = BimoduleElement::zero();
                    x.add_term(h, p, q, K::one());
                    minimal = Check::fail(format!(
                        "d_{}(generator {g}) has a component on the generator {}",
                        n + 1,
                        x.display(alg, &d.target)
                    ));
                    break 'min;
                }
            }
        }
    }

    VerificationReport {
        squares_to_zero: squares,
        exact,
        minimal,
        degrees,
    }
}
