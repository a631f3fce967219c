//! Heredity ideals and heredity chains of finite-dimensional algebras.

use serde::{Deserialize, Serialize};

use crate::linalg::{rank, Field, Matrix, SparseVec};

use super::element::AlgebraElement;
use super::finite::{FiniteAlgebra, TwoSidedIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub holds: bool,
    pub detail: String,
}

/// Outcome of testing the three heredity conditions `HH = H`, `Hom_S(H, S/H) = 0` and
/// `H J(S) H = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeredityVerdict {
    pub holds: bool,
    /// The zero ideal satisfies all three conditions vacuously; flagged so reports can say so.
    pub zero_ideal: bool,
    pub idempotent: Condition,
    pub no_homs_to_quotient: Condition,
    pub radical_sandwich_vanishes: Condition,
}

impl HeredityVerdict {
    pub fn reason(&self) -> String {
        if self.zero_ideal {
            return "zero ideal: all conditions hold vacuously".into();
        }
        let failures: Vec<&str> = [
            &self.idempotent,
            &self.no_homs_to_quotient,
            &self.radical_sandwich_vanishes,
        ]
        .iter()
        .filter(|c| !c.holds)
        .map(|c| c.detail.as_str())
        .collect();
        if failures.is_empty() {
            "heredity ideal".into()
        } else {
            failures.join("; ")
        }
    }
}

pub fn is_heredity_ideal<K: Field>(a: &FiniteAlgebra<K>, h: &TwoSidedIdeal<K>) -> HeredityVerdict {
    let hb: Vec<SparseVec<K>> = h.echelon().rows().to_vec();

    let hh = a.span_products(&hb, &hb);
    let idempotent = Condition {
        holds: hh.rank() == h.dim(),
        detail: format!("dim HH = {}, dim H = {}", hh.rank(), h.dim()),
    };

    let homs = hom_dim_to_quotient(a, h);
    let no_homs_to_quotient = Condition {
        holds: homs == 0,
        detail: format!("dim Hom(H, S/H) = {homs}"),
    };

    let radical_sandwich_vanishes = match sandwich_witness(a, &hb) {
        None => Condition {
            holds: true,
            detail: "HJH = 0".into(),
        },
        Some(w) => Condition {
            holds: false,
            detail: format!("HJH contains {} != 0", a.display(&AlgebraElement::from_sparse(w))),
        },
    };

    HeredityVerdict {
        holds: idempotent.holds && no_homs_to_quotient.holds && radical_sandwich_vanishes.holds,
        zero_ideal: h.is_zero(),
        idempotent,
        no_homs_to_quotient,
        radical_sandwich_vanishes,
    }
}

fn sandwich_witness<K: Field>(a: &FiniteAlgebra<K>, hb: &[SparseVec<K>]) -> Option<SparseVec<K>> {
    for x in hb {
        for j in a.radical_basis() {
            let xj = a.mul_sparse(x, j);
            if xj.is_empty() {
                continue;
            }
            for y in hb {
                let p = a.mul_sparse(&xj, y);
                if !p.is_empty() {
                    return Some(p);
                }
            }
        }
    }
    None
}

/// Dimension of the space of left `S`-module maps `H -> S/H`, found as the solution space
/// of `F L_s^H = L_s^Q F` over all basis elements `s`.
fn hom_dim_to_quotient<K: Field>(a: &FiniteAlgebra<K>, h: &TwoSidedIdeal<K>) -> usize {
    let r = h.dim();
    let ech = h.echelon();
    let free = ech.free_columns();
    let q = free.len();
    if r == 0 || q == 0 {
        return 0;
    }
    let qpos = |c: usize| free.binary_search(&c).expect("free column");
    let project =
        |v: &SparseVec<K>| -> Vec<(usize, K)> { ech.reduce(v).into_iter().map(|(c, x)| (qpos(c), x)).collect() };
    let hb = ech.rows();
    let var = |t: usize, m: usize| t * r + m;
    let mut rows: Vec<Vec<(usize, K)>> = Vec::new();
    for s in 0..a.dim() {
        let sv = vec![(s, K::one())];
        // left multiplication by s on H, in H coordinates: column m
        let lh: Vec<Vec<K>> = hb
            .iter()
            .map(|hm| ech.coordinates(&a.mul_sparse(&sv, hm)).expect("H is a left ideal"))
            .collect();
        // left multiplication by s on S/H: column t'
        let lq: Vec<Vec<(usize, K)>> = free
            .iter()
            .map(|&c| project(&a.mul_sparse(&sv, &[(c, K::one())])))
            .collect();
        for t in 0..q {
            for m in 0..r {
                let mut eq: Vec<(usize, K)> = Vec::new();
                for (mp, col) in lh[m].iter().enumerate() {
                    if !col.is_zero() {
                        eq.push((var(t, mp), col.clone()));
                    }
                }
                for (tp, col) in lq.iter().enumerate() {
                    for (row, x) in col {
                        if *row == t {
                            eq.push((var(tp, m), -x.clone()));
                        }
                    }
                }
                let eq = crate::linalg::collect_sparse(eq);
                if !eq.is_empty() {
                    rows.push(eq);
                }
            }
        }
    }
    let m = Matrix::from_sparse_rows(q * r, rows);
    q * r - rank(&m)
}

/// One step of a heredity chain, recorded as the vertices whose idempotents generate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub vertices: Vec<String>,
    pub dim: usize,
}

/// Chain `S = H_0 > H_1 > ... > H_n = 0`, listed from the top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeredityChain {
    pub steps: Vec<ChainStep>,
}

/// Searches idempotent-generated ideals `S e S` for a heredity chain.
///
/// Builds the chain from the bottom: at each stage a new set of idempotents is added and the
/// enlarged ideal must be a heredity ideal modulo the previous one. Candidate sets are tried
/// smallest first; dead ends are memoised by the set of idempotents used so far.
pub fn heredity_chain_search<K: Field>(a: &FiniteAlgebra<K>) -> Option<HeredityChain> {
    let n = a.idempotents().len();
    if n > 20 {
        return None;
    }
    let mut dead = std::collections::HashSet::new();
    let mut stack = Vec::new();
    if search(a, 0u32, &TwoSidedIdeal::zero(a.dim()), &mut stack, &mut dead) {
        let mut steps: Vec<ChainStep> = stack
            .iter()
            .map(|(mask, dim)| ChainStep {
                vertices: (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| a.idempotents()[i].0.clone())
                    .collect(),
                dim: *dim,
            })
            .collect();
        steps.reverse();
        steps.push(ChainStep {
            vertices: Vec::new(),
            dim: 0,
        });
        Some(HeredityChain { steps })
    } else {
        None
    }
}

fn search<K: Field>(
    a: &FiniteAlgebra<K>,
    used: u32,
    current: &TwoSidedIdeal<K>,
    stack: &mut Vec<(u32, usize)>,
    dead: &mut std::collections::HashSet<u32>,
) -> bool {
    if current.dim() == a.dim() {
        return true;
    }
    if dead.contains(&used) {
        return false;
    }
    let n = a.idempotents().len();
    let remaining: Vec<usize> = (0..n).filter(|i| used & (1 << i) == 0).collect();
    let mut candidates: Vec<u32> = (1u32..(1 << remaining.len()))
        .map(|bits| {
            remaining
                .iter()
                .enumerate()
                .filter(|(k, _)| bits & (1 << k) != 0)
                .fold(0u32, |m, (_, &i)| m | (1 << i))
        })
        .collect();
    candidates.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    let quotient = a.quotient(current);
    for add in candidates {
        let mask = used | add;
        let which: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let bigger = a.idempotent_ideal(&which);
        if bigger.dim() <= current.dim() {
            continue;
        }
        let image_gens: Vec<AlgebraElement<K>> = bigger.basis().iter().map(|x| quotient.project(x)).collect();
        let image = quotient.algebra.ideal(&image_gens);
        if !is_heredity_ideal(&quotient.algebra, &image).holds {
            continue;
        }
        stack.push((mask, bigger.dim()));
        if search(a, mask, &bigger, stack, dead) {
            return true;
        }
        stack.pop();
    }
    dead.insert(used);
    false
}
