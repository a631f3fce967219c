//! The explicit resolution `(R_•, d_•)` of `A_e` in closed form.
//!
//! The printed formulas contain a few inconsistencies. Each independent reading is a
//! [`RepairChoice`]; [`search_repairs`] builds every candidate and keeps the ones that
//! verify. Two token-level misprints (a doubled tensor sign and an upper-case index) have
//! only one sensible reading and are always fixed; they are listed in [`TOKEN_FIXES`].

use serde::{Deserialize, Serialize};

use crate::algebra::{build_a_e, down_arrow, up_arrow, AlgebraElement, BoundQuiverAlgebra};
use crate::linalg::Field;

use super::bimodule::{Augmentation, BimoduleComplex, BimoduleElement, BimoduleMap, FreeBimodule};
use super::verify::{verify_complex, VerificationReport};
use super::ResolutionError;

pub const TOKEN_FIXES: [&str; 2] = [
    "doubled tensor sign in the d_{4s+1} formula read as a single tensor",
    "upper-case index J in the d_{4s+2} formula read as j",
];

/// Where the diagonal generators `(i,i)` in the domain of a differential start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalStart {
    /// The range printed with the differential (`i >= 2s+1`).
    Printed,
    /// The range of the module `R_n` itself.
    Module,
}

/// Which `n` takes the two-term branch for generators `(j, j+2n)` in `d_{4s+4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShortBranch {
    /// `n = 2s+1`, as printed (leaves `n = 2s+2` without a formula).
    Printed,
    /// `n = 2s+2`, the value not covered by the neighbouring `n < 2s+2` branch.
    Shifted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepairChoice {
    pub d4s2_diagonal: DiagonalStart,
    pub d4s4_diagonal: DiagonalStart,
    pub d4s4_short_branch: ShortBranch,
}

impl RepairChoice {
    pub const LITERAL: RepairChoice = RepairChoice {
        d4s2_diagonal: DiagonalStart::Printed,
        d4s4_diagonal: DiagonalStart::Printed,
        d4s4_short_branch: ShortBranch::Printed,
    };

    /// All readings, literal first, then in order of increasing number of changes.
    pub fn all() -> Vec<RepairChoice> {
        let mut v = Vec::new();
        for d2 in [DiagonalStart::Printed, DiagonalStart::Module] {
            for d4 in [DiagonalStart::Printed, DiagonalStart::Module] {
                for br in [ShortBranch::Printed, ShortBranch::Shifted] {
                    v.push(RepairChoice {
                        d4s2_diagonal: d2,
                        d4s4_diagonal: d4,
                        d4s4_short_branch: br,
                    });
                }
            }
        }
        v.sort_by_key(|c| c.changes());
        v
    }

    pub fn changes(&self) -> usize {
        (self.d4s2_diagonal == DiagonalStart::Module) as usize
            + (self.d4s4_diagonal == DiagonalStart::Module) as usize
            + (self.d4s4_short_branch == ShortBranch::Shifted) as usize
    }

    pub fn describe(&self) -> String {
        let d = |x: DiagonalStart, printed: &str, module: &str| match x {
            DiagonalStart::Printed => format!("i >= {printed}"),
            DiagonalStart::Module => format!("i >= {module}"),
        };
        format!(
            "d_(4s+2) diagonal {}; d_(4s+4) diagonal {}; d_(4s+4) short branch at {}",
            d(self.d4s2_diagonal, "2s+1", "2s+2"),
            d(self.d4s4_diagonal, "2s+1", "2s+3"),
            match self.d4s4_short_branch {
                ShortBranch::Printed => "n = 2s+1",
                ShortBranch::Shifted => "n = 2s+2",
            }
        )
    }
}

/// Generators of `R_n` in summation order: for `n = 2s` the diagonal `(i,i)`,
/// `s+1 <= i <= e`, then the pairs `(j, j+2m)`, `(j+2m, j)`; for `n = 2s+1` the pairs
/// `(t, t+2m-1)`, `(t+2m-1, t)`. Empty for `n > 2(e-1)`.
pub fn paper_resolution_term(e: usize, n: usize) -> Vec<(usize, usize)> {
    let mut g = Vec::new();
    if n % 2 == 0 {
        let s = n / 2;
        for i in s + 1..=e {
            g.push((i, i));
        }
        for m in 1..=s {
            let lo = s - m + 1;
            if e < 2 * m {
                continue;
            }
            for j in lo..=e - 2 * m {
                g.push((j, j + 2 * m));
                g.push((j + 2 * m, j));
            }
        }
    } else {
        let s = (n - 1) / 2;
        for m in 1..=s + 1 {
            let lo = s + 2 - m;
            if e < 2 * m - 1 {
                continue;
            }
            for t in lo..=e - (2 * m - 1) {
                g.push((t, t + 2 * m - 1));
                g.push((t + 2 * m - 1, t));
            }
        }
    }
    g
}

/// Domain of `d_n` under a repair choice: `R_n`, plus the extra diagonal generator the
/// printed range would add.
pub fn paper_domain(e: usize, n: usize, choice: &RepairChoice) -> Vec<(usize, usize)> {
    let mut g = paper_resolution_term(e, n);
    if n == 0 {
        return g;
    }
    let s = (n - 1) / 4;
    let extra = match (n - 1) % 4 {
        1 if choice.d4s2_diagonal == DiagonalStart::Printed => Some(2 * s + 1),
        3 if choice.d4s4_diagonal == DiagonalStart::Printed => Some(2 * s + 1),
        _ => None,
    };
    if let Some(first) = extra {
        let module_first = if (n - 1) % 4 == 1 { 2 * s + 2 } else { 2 * s + 3 };
        let missing: Vec<(usize, usize)> = (first..module_first).filter(|&i| i <= e).map(|i| (i, i)).collect();
        if !missing.is_empty() && !g.is_empty() {
            let mut v = missing;
            v.extend(g);
            g = v;
        }
    }
    g
}

fn sign<K: Field>(k: usize) -> K {
    if k % 2 == 0 {
        K::one()
    } else {
        -K::one()
    }
}

struct Builder<'a, K: Field> {
    alg: &'a BoundQuiverAlgebra<K>,
    e: usize,
    target: &'a FreeBimodule,
    n: usize,
}

impl<K: Field> Builder<'_, K> {
    fn up(&self, i: usize) -> Option<usize> {
        (1..self.e)
            .contains(&i)
            .then(|| self.alg.arrow_basis_index(&up_arrow(i)).expect("arrow"))
    }

    fn down(&self, i: usize) -> Option<usize> {
        (1..self.e)
            .contains(&i)
            .then(|| self.alg.arrow_basis_index(&down_arrow(i)).expect("arrow"))
    }

    fn vertex(&self, i: usize) -> Option<usize> {
        (1..=self.e).contains(&i).then(|| self.alg.vertex_idempotent(i))
    }

    /// Adds `c · l ⊗ r`; terms mentioning arrows outside the quiver are dropped.
    fn add(
        &self,
        out: &mut BimoduleElement<K>,
        c: K,
        l: Option<usize>,
        r: Option<usize>,
    ) -> Result<(), ResolutionError> {
        let (Some(l), Some(r)) = (l, r) else {
            return Ok(());
        };
        let g = (self.alg.source(l), self.alg.target(r));
        let idx = self.target.position(g).ok_or(ResolutionError::TermOutsideTarget {
            degree: self.n,
            generator: g,
        })?;
        out.add_term(idx, l, r, c);
        Ok(())
    }
}

/// `d_n : R_n -> R_{n-1}` from the closed formulas, for `1 <= n`.
pub fn paper_differential<K: Field>(
    alg: &BoundQuiverAlgebra<K>,
    e: usize,
    n: usize,
    choice: &RepairChoice,
) -> Result<BimoduleMap<K>, ResolutionError> {
    assert!(n >= 1, "d_0 is the augmentation");
    let source = FreeBimodule::new(paper_domain(e, n, choice));
    let target = FreeBimodule::new(paper_domain(e, n - 1, choice));
    let b = Builder {
        alg,
        e,
        target: &target,
        n,
    };
    let s = (n - 1) / 4;
    let one = K::one;
    let neg = || -K::one();
    let mut images = Vec::with_capacity(source.rank());
    for &(i, j) in &source.generators {
        let mut x = BimoduleElement::zero();
        let (a, bb, v) = (|k| b.up(k), |k| b.down(k), |k| b.vertex(k));
        match (n - 1) % 4 {
            // d_{4s+1} and d_{4s+3} differ only in the sign pattern and the branch bound.
            r @ (0 | 2) => {
                let (bound, flip) = if r == 0 { (2 * s + 1, 1) } else { (2 * s + 2, 0) };
                let (t, m) = if j > i {
                    (i, (j - i).div_ceil(2))
                } else {
                    (j, (i - j).div_ceil(2))
                };
                let hi = t + 2 * m - 1;
                if j > i {
                    if m < bound {
                        b.add(&mut x, sign(m + flip), a(t.wrapping_sub(1)), v(hi))?;
                        b.add(&mut x, sign(m + 1 - flip), v(t), bb(t + 2 * m - 2))?;
                        b.add(&mut x, one(), v(t), a(hi))?;
                        b.add(&mut x, one(), bb(t), v(hi))?;
                    } else {
                        b.add(&mut x, neg(), v(t), bb(t + 2 * m - 2))?;
                        b.add(&mut x, one(), bb(t), v(hi))?;
                    }
                } else if m < bound {
                    b.add(&mut x, sign(m + flip), v(hi), bb(t.wrapping_sub(1)))?;
                    b.add(&mut x, sign(m + 1 - flip), a(t + 2 * m - 2), v(t))?;
                    b.add(&mut x, one(), v(hi), a(t))?;
                    b.add(&mut x, one(), bb(hi), v(t))?;
                } else {
                    b.add(&mut x, one(), v(hi), a(t))?;
                    b.add(&mut x, neg(), a(t + 2 * m - 2), v(t))?;
                }
            }
            1 => {
                if i == j {
                    b.add(&mut x, one(), a(i - 1), v(i))?;
                    b.add(&mut x, neg(), v(i), bb(i - 1))?;
                    b.add(&mut x, neg(), v(i), a(i))?;
                    b.add(&mut x, one(), bb(i), v(i))?;
                } else if j > i {
                    let (j, m) = (i, (j - i) / 2);
                    let hi = j + 2 * m;
                    if m < 2 * s + 1 {
                        b.add(&mut x, sign(m), a(j.wrapping_sub(1)), v(hi))?;
                        b.add(&mut x, sign(m + 1), v(j), bb(hi - 1))?;
                        b.add(&mut x, one(), bb(j), v(hi))?;
                        b.add(&mut x, neg(), v(j), a(hi))?;
                    } else {
                        b.add(&mut x, one(), v(j), bb(hi - 1))?;
                        b.add(&mut x, one(), bb(j), v(hi))?;
                    }
                } else {
                    let m = (i - j) / 2;
                    let hi = j + 2 * m;
                    if m < 2 * s + 1 {
                        b.add(&mut x, sign(m), a(hi - 1), v(j))?;
                        b.add(&mut x, sign(m + 1), v(hi), bb(j.wrapping_sub(1)))?;
                        b.add(&mut x, one(), bb(hi), v(j))?;
                        b.add(&mut x, neg(), v(hi), a(j))?;
                    } else {
                        b.add(&mut x, neg(), a(hi - 1), v(j))?;
                        b.add(&mut x, neg(), v(hi), a(j))?;
                    }
                }
            }
            _ => {
                if i == j {
                    b.add(&mut x, neg(), a(i - 1), v(i))?;
                    b.add(&mut x, one(), v(i), bb(i - 1))?;
                    b.add(&mut x, neg(), v(i), a(i))?;
                    b.add(&mut x, one(), bb(i), v(i))?;
                } else if j > i {
                    let (j, m) = (i, (j - i) / 2);
                    let hi = j + 2 * m;
                    let short = match choice.d4s4_short_branch {
                        ShortBranch::Printed => 2 * s + 1,
                        ShortBranch::Shifted => 2 * s + 2,
                    };
                    if m == short {
                        b.add(&mut x, one(), v(j), bb(hi - 1))?;
                        b.add(&mut x, one(), bb(j), v(hi))?;
                    } else if m < 2 * s + 2 {
                        b.add(&mut x, sign(m + 1), a(j.wrapping_sub(1)), v(hi))?;
                        b.add(&mut x, sign(m), v(j), bb(hi - 1))?;
                        b.add(&mut x, one(), bb(j), v(hi))?;
                        b.add(&mut x, neg(), v(j), a(hi))?;
                    }
                } else {
                    let m = (i - j) / 2;
                    let hi = j + 2 * m;
                    if m < 2 * s + 2 {
                        b.add(&mut x, sign(m + 1), a(hi - 1), v(j))?;
                        b.add(&mut x, sign(m), v(hi), bb(j.wrapping_sub(1)))?;
                        b.add(&mut x, one(), bb(hi), v(j))?;
                        b.add(&mut x, neg(), v(hi), a(j))?;
                    } else {
                        b.add(&mut x, neg(), v(hi), a(j))?;
                        b.add(&mut x, neg(), a(hi - 1), v(j))?;
                    }
                }
            }
        }
        images.push(x);
    }
    Ok(BimoduleMap { source, target, images })
}

/// `d_0 : R_0 -> A`, `e_i ⊗ e_i ↦ e_i`.
pub fn paper_augmentation<K: Field>(alg: &BoundQuiverAlgebra<K>, e: usize) -> Augmentation<K> {
    Augmentation {
        images: paper_resolution_term(e, 0)
            .into_iter()
            .map(|(i, _)| AlgebraElement::basis(alg.vertex_idempotent(i)))
            .collect(),
    }
}

/// The complex `R_{2(e-1)} -> ... -> R_0 -> A_e` under one repair choice.
pub fn paper_complex<K: Field>(
    alg: &BoundQuiverAlgebra<K>,
    e: usize,
    choice: &RepairChoice,
) -> Result<BimoduleComplex<K>, ResolutionError> {
    let top = 2 * (e - 1);
    let mut terms = vec![FreeBimodule::new(paper_domain(e, 0, choice))];
    let mut maps = Vec::new();
    for n in 1..=top {
        let d = paper_differential(alg, e, n, choice)?;
        terms.push(d.source.clone());
        maps.push(d);
    }
    Ok(BimoduleComplex {
        terms,
        maps,
        augmentation: paper_augmentation(alg, e),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateOutcome {
    pub choice: RepairChoice,
    pub description: String,
    /// Per algebra size checked: `Ok(())` or the first failure.
    pub results: Vec<(usize, Result<(), String>)>,
    pub passed: bool,
}

/// Result of trying every repair choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairSearch {
    pub token_fixes: Vec<String>,
    /// Sizes `e` each candidate was checked at.
    pub sizes: Vec<usize>,
    pub candidates: Vec<CandidateOutcome>,
    /// First passing candidate in [`RepairChoice::all`] order.
    pub selected: Option<RepairChoice>,
    /// Whether every passing candidate gives the same complex at the requested size.
    pub passing_agree: bool,
}

/// Sizes at which candidates are checked besides the requested one: every branch of
/// every choice is exercised once `e >= 6`.
pub const CALIBRATION_SIZES: [usize; 1] = [6];

fn check<K: Field>(e: usize, choice: &RepairChoice) -> Result<(BimoduleComplex<K>, VerificationReport), String> {
    let alg = build_a_e::<K>(e).map_err(|x| x.to_string())?;
    let c = paper_complex(&alg, e, choice).map_err(|x| x.to_string())?;
    let report = verify_complex(&alg, &c);
    if report.passed() {
        Ok((c, report))
    } else {
        Err(report.first_failure().unwrap_or_default())
    }
}

/// Tries every repair choice at `e` and at [`CALIBRATION_SIZES`].
pub fn search_repairs<K: Field>(e: usize) -> RepairSearch {
    let mut sizes: Vec<usize> = CALIBRATION_SIZES.iter().copied().chain([e]).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut candidates = Vec::new();
    let mut at_e = Vec::new();
    for choice in RepairChoice::all() {
        let mut results = Vec::new();
        let mut complex = None;
        for &size in &sizes {
            match check::<K>(size, &choice) {
                Ok((c, _)) => {
                    if size == e {
                        complex = Some(c);
                    }
                    results.push((size, Ok(())));
                }
                Err(msg) => results.push((size, Err(msg))),
            }
        }
        let passed = results.iter().all(|(_, r)| r.is_ok());
        if passed {
            at_e.extend(complex);
        }
        candidates.push(CandidateOutcome {
            choice,
            description: choice.describe(),
            results,
            passed,
        });
    }
    let selected = candidates.iter().find(|c| c.passed).map(|c| c.choice);
    let passing_agree = at_e.windows(2).all(|w| w[0] == w[1]);
    RepairSearch {
        token_fixes: TOKEN_FIXES.iter().map(|s| s.to_string()).collect(),
        sizes,
        candidates,
        selected,
        passing_agree,
    }
}

/// The verified resolution of `A_e` together with the repair search that produced it.
pub fn paper_resolution<K: Field>(
    alg: &BoundQuiverAlgebra<K>,
    e: usize,
) -> Result<(BimoduleComplex<K>, RepairSearch), ResolutionError> {
    let search = search_repairs::<K>(e);
    let choice = search.selected.ok_or(ResolutionError::NoRepair(e))?;
    Ok((paper_complex(alg, e, &choice)?, search))
}
