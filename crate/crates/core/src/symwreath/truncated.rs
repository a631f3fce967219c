//! The map `π : Λ_w -> (k[y_1..y_w]/⟨y_i^e⟩)^{𝔖_w}` sending each `x_i` to `y_i`, its kernel,
//! and Hilbert functions of quotients of `Λ_w`. Degrees here are `y`-degrees.

use serde::{Deserialize, Serialize};

use crate::graded::GradedDims;
use crate::linalg::{kernel_basis, rank, to_sparse, Echelon, Field, Matrix, Rational, SparseVec};
use crate::partition::{partitions_bounded, Partition};

use super::sympoly::{power_sum_in_e, SymPoly};
use super::SymError;

/// Monomial basis `e_λ` of `Λ_{w,d}`: partitions of `d` with parts at most `w`.
pub fn lambda_basis(w: usize, d: usize) -> Vec<Partition> {
    partitions_bounded(d, w, usize::MAX)
}

/// Coordinates of a homogeneous degree-`d` polynomial in [`lambda_basis`].
fn lambda_coords(f: &SymPoly, basis: &[Partition]) -> SparseVec<Rational> {
    let mut v: SparseVec<Rational> = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let p = SymPoly::monomial_partition(m);
            let k = basis
                .iter()
                .position(|b| *b == p)
                .expect("monomial of the right degree");
            (k, c.clone())
        })
        .collect();
    v.sort_by_key(|(k, _)| *k);
    v
}

fn lambda_poly(w: usize, basis: &[Partition], v: &[Rational]) -> SymPoly {
    let mut acc = SymPoly::zero(w);
    for (p, c) in basis.iter().zip(v) {
        if !c.is_zero() {
            acc = acc.add(&SymPoly::from_partition(p, w).scale(c)).expect("same width");
        }
    }
    acc
}

/// `(k[y_1..y_w]/⟨y_1^e..y_w^e⟩)^{𝔖_w}` with the orbit-sum basis `m_μ`, where `μ` runs over
/// partitions with at most `w` parts, each at most `e-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncatedInvariantRing {
    pub e: usize,
    pub w: usize,
}

impl TruncatedInvariantRing {
    pub fn new(e: usize, w: usize) -> Self {
        TruncatedInvariantRing { e, w }
    }

    pub fn top_degree(&self) -> usize {
        self.w * self.e.saturating_sub(1)
    }

    pub fn basis(&self, d: usize) -> Vec<Partition> {
        partitions_bounded(d, self.e.saturating_sub(1), self.w)
    }

    pub fn dims(&self) -> GradedDims {
        GradedDims::new((0..=self.top_degree()).map(|d| self.basis(d).len()).collect())
    }

    /// `π(f)` for homogeneous `f` of degree `d`, in the orbit basis of degree `d`. The
    /// coefficient of `m_μ` is the coefficient of the sorted monomial `y^μ`.
    pub fn pi(&self, f: &SymPoly, d: usize) -> Vec<Rational> {
        let basis = self.basis(d);
        let image = f.expand_truncated(Some(self.e));
        basis
            .iter()
            .map(|mu| {
                let mut m = vec![0; self.w];
                for (i, &p) in mu.parts().iter().enumerate() {
                    m[i] = p;
                }
                image.get(&m).cloned().unwrap_or_else(Rational::zero)
            })
            .collect()
    }

    /// Matrix of `π` in degree `d`: rows indexed by the orbit basis, columns by `e_λ`.
    pub fn pi_matrix(&self, d: usize) -> Matrix<Rational> {
        let source = lambda_basis(self.w, d);
        let rows = self.basis(d).len();
        let columns: Vec<SparseVec<Rational>> = source
            .iter()
            .map(|l| to_sparse(&self.pi(&SymPoly::from_partition(l, self.w), d)))
            .collect();
        Matrix::from_sparse_columns(rows, &columns)
    }

    /// A basis of `Ker π` in degree `d`.
    pub fn kernel(&self, d: usize) -> Vec<SymPoly> {
        let basis = lambda_basis(self.w, d);
        kernel_basis(&self.pi_matrix(d))
            .iter()
            .map(|v| lambda_poly(self.w, &basis, v))
            .collect()
    }
}

/// Degree pieces of the ideal of `Λ_w` generated by homogeneous `generators`, as echelon
/// forms over [`lambda_basis`].
fn ideal_pieces(w: usize, generators: &[SymPoly], max_degree: usize) -> Result<Vec<Echelon<Rational>>, SymError> {
    let mut gens = Vec::new();
    for g in generators {
        if g.w() != w {
            return Err(SymError::WidthMismatch {
                expected: w,
                found: g.w(),
            });
        }
        if g.is_zero() {
            continue;
        }
        let d = g
            .homogeneous_degree()
            .ok_or_else(|| SymError::NotHomogeneous(g.to_string()))?;
        gens.push((g, d));
    }
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let basis = lambda_basis(w, d);
        let mut ech = Echelon::new(basis.len());
        for (g, dg) in &gens {
            if *dg > d {
                continue;
            }
            for m in lambda_basis(w, d - dg) {
                let prod = g.mul(&SymPoly::from_partition(&m, w))?;
                ech.insert(lambda_coords(&prod, &basis));
            }
        }
        out.push(ech);
    }
    Ok(out)
}

/// Graded dimensions of `Λ_w / ⟨generators⟩` in degrees `0..=max_degree`.
pub fn quotient_hilbert(w: usize, generators: &[SymPoly], max_degree: usize) -> Result<GradedDims, SymError> {
    let pieces = ideal_pieces(w, generators, max_degree)?;
    Ok(GradedDims::new(
        pieces
            .iter()
            .enumerate()
            .map(|(d, ech)| lambda_basis(w, d).len() - ech.rank())
            .collect(),
    ))
}

/// `p_{e+1}, ..., p_{e+w+1}`, the generator list compared against `Ker π`.
pub fn listed_generators(e: usize, w: usize) -> Vec<(String, SymPoly)> {
    (e + 1..=e + w + 1)
        .map(|k| (format!("p{k}"), power_sum_in_e(k, w)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelDegree {
    pub degree: usize,
    pub lambda_dim: usize,
    pub image_dim: usize,
    pub kernel_dim: usize,
    pub ideal_dim: usize,
    pub ideal_in_kernel: bool,
    pub kernel_in_ideal: bool,
    /// Kernel elements completing the ideal piece to the whole kernel, power sums first.
    pub kernel_outside_ideal: Vec<String>,
    /// Ideal elements outside the kernel.
    pub ideal_outside_kernel: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelPiReport {
    pub e: usize,
    pub w: usize,
    pub max_degree: usize,
    pub degree_convention: String,
    pub listed_generators: Vec<String>,
    /// False when some listed generator has degree above `max_degree`.
    pub listed_generators_in_range: bool,
    /// `k <= max_degree` with `p_k ∈ Ker π`.
    pub power_sums_in_kernel: Vec<usize>,
    pub degrees: Vec<KernelDegree>,
    /// Degrees where the brute-force kernel and the listed ideal differ.
    pub discrepancy_degrees: Vec<usize>,
    pub quotient_by_kernel: GradedDims,
    pub quotient_by_listed: GradedDims,
    pub truncated_invariant_dims: GradedDims,
}

impl KernelPiReport {
    pub fn agrees(&self) -> bool {
        self.discrepancy_degrees.is_empty()
    }

    /// `Λ_w / Ker π` has the dimensions of the target ring, as it must since `π` is onto.
    pub fn image_matches_target(&self) -> bool {
        self.quotient_by_kernel == self.truncated_invariant_dims.truncate(self.max_degree)
    }
}

/// All homogeneous kernel basis elements of degree at most `max_degree`.
pub fn kernel_generators(e: usize, w: usize, max_degree: usize) -> Vec<SymPoly> {
    let ring = TruncatedInvariantRing::new(e, w);
    (0..=max_degree).flat_map(|d| ring.kernel(d)).collect()
}

/// Compares `Ker π` with `⟨p_{e+1}, ..., p_{e+w+1}⟩` degree by degree.
pub fn kernel_pi_report(e: usize, w: usize, max_degree: usize) -> Result<KernelPiReport, SymError> {
    if e < 1 || w < 1 {
        return Err(SymError::BadParameters(format!(
            "need e >= 1 and w >= 1, got e={e}, w={w}"
        )));
    }
    let ring = TruncatedInvariantRing::new(e, w);
    let listed = listed_generators(e, w);
    let listed_polys: Vec<SymPoly> = listed.iter().map(|(_, p)| p.clone()).collect();
    let pieces = ideal_pieces(w, &listed_polys, max_degree)?;
    let mut degrees = Vec::new();
    let mut power_sums_in_kernel = Vec::new();
    let mut kernel_all = Vec::new();
    for (d, ideal) in pieces.iter().enumerate() {
        let basis = lambda_basis(w, d);
        let pi = ring.pi_matrix(d);
        let image_dim = rank(&pi);
        let kernel = ring.kernel(d);
        let kernel_ech = Echelon::from_rows(basis.len(), kernel.iter().map(|k| lambda_coords(k, &basis)));
        let mut ideal_outside_kernel = Vec::new();
        for row in ideal.rows() {
            if !kernel_ech.contains(row) {
                let dense = crate::linalg::to_dense(row, basis.len());
                ideal_outside_kernel.push(lambda_poly(w, &basis, &dense).to_string());
            }
        }
        let mut candidates = Vec::new();
        if d >= 1 {
            let pd = power_sum_in_e(d, w);
            if pi.mul_sparse(&lambda_coords(&pd, &basis)).is_empty() {
                power_sums_in_kernel.push(d);
                candidates.push((format!("p{d} = {pd}"), lambda_coords(&pd, &basis)));
            }
        }
        for k in &kernel {
            candidates.push((k.to_string(), lambda_coords(k, &basis)));
        }
        let mut span = ideal.clone();
        let mut kernel_outside_ideal = Vec::new();
        for (label, v) in candidates {
            if span.insert(v).is_some() {
                kernel_outside_ideal.push(label);
            }
        }
        let entry = KernelDegree {
            degree: d,
            lambda_dim: basis.len(),
            image_dim,
            kernel_dim: kernel.len(),
            ideal_dim: ideal.rank(),
            ideal_in_kernel: ideal_outside_kernel.is_empty(),
            kernel_in_ideal: kernel_outside_ideal.is_empty(),
            kernel_outside_ideal,
            ideal_outside_kernel,
        };
        degrees.push(entry);
        kernel_all.extend(kernel);
    }
    let discrepancy_degrees = degrees
        .iter()
        .filter(|d| !d.ideal_in_kernel || !d.kernel_in_ideal)
        .map(|d| d.degree)
        .collect();
    Ok(KernelPiReport {
        e,
        w,
        max_degree,
        degree_convention: "y-degree (cohomological degree is twice this)".into(),
        listed_generators: listed.iter().map(|(n, _)| n.clone()).collect(),
        listed_generators_in_range: e + w + 1 <= max_degree,
        power_sums_in_kernel,
        degrees,
        discrepancy_degrees,
        quotient_by_kernel: quotient_hilbert(w, &kernel_all, max_degree)?,
        quotient_by_listed: quotient_hilbert(w, &listed_polys, max_degree)?,
        truncated_invariant_dims: ring.dims(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_small() {
        assert_eq!(TruncatedInvariantRing::new(2, 2).dims(), GradedDims::new(vec![1, 1, 1]));
        assert_eq!(TruncatedInvariantRing::new(1, 3).dims(), GradedDims::new(vec![1]));
    }

    #[test]
    fn quotients_of_lambda_2() {
        let p = |k| power_sum_in_e(k, 2);
        assert_eq!(
            quotient_hilbert(2, &[], 6).unwrap(),
            GradedDims::new(vec![1, 1, 2, 2, 3, 3, 4])
        );
        assert_eq!(
            quotient_hilbert(2, &[p(2), p(3)], 8).unwrap(),
            GradedDims::new(vec![1, 1, 1])
        );
        assert_eq!(quotient_hilbert(2, &[p(3), p(4), p(5)], 8).unwrap().get(2), 2);
        let mixed = SymPoly::one(2).add(&p(1)).unwrap();
        assert!(quotient_hilbert(2, &[mixed], 3).is_err());
    }

    #[test]
    fn p2_witness_at_e2_w2() {
        let r = kernel_pi_report(2, 2, 6).unwrap();
        assert_eq!(r.listed_generators, vec!["p3", "p4", "p5"]);
        assert!(r.power_sums_in_kernel.contains(&2));
        let d2 = &r.degrees[2];
        assert_eq!(d2.ideal_dim, 0);
        assert_eq!(d2.kernel_dim, 1);
        assert!(d2.kernel_outside_ideal[0].starts_with("p2 = "));
        assert!(r.discrepancy_degrees.contains(&2));
        assert!(r.image_matches_target());
    }
}
