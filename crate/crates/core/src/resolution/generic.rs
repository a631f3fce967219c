//! Minimal bimodule resolutions built from scratch by iterated projective covers.

use crate::algebra::{AlgebraElement, BoundQuiverAlgebra};
use crate::linalg::{kernel_basis, to_sparse, Echelon, Field, Matrix, SparseVec};

use super::bimodule::{Augmentation, BimoduleBasis, BimoduleComplex, BimoduleElement, BimoduleMap, FreeBimodule};

/// Multiplies every basis coordinate `p ⊗ q` of `v` by `x` on the left (`left = true`) or on
/// the right.
fn act<K: Field>(
    alg: &BoundQuiverAlgebra<K>,
    basis: &BimoduleBasis,
    v: &[(usize, K)],
    x: usize,
    left: bool,
) -> SparseVec<K> {
    let mut el = BimoduleElement::zero();
    for (k, c) in v {
        let (g, p, q) = basis.entry(*k);
        let prod = if left { alg.mul_basis(x, p) } else { alg.mul_basis(q, x) };
        for (r, rc) in prod {
            if left {
                el.add_term(g, *r, q, c.clone() * rc.clone());
            } else {
                el.add_term(g, p, *r, c.clone() * rc.clone());
            }
        }
    }
    el.to_vector(basis)
}

/// Generators of a projective cover of the sub-bimodule spanned by `kernel`: for each
/// vertex pair `(i,j)`, a complement of `e_i (JK + KJ) e_j` inside `e_i K e_j`.
fn cover<K: Field>(
    alg: &BoundQuiverAlgebra<K>,
    basis: &BimoduleBasis,
    kernel: &[SparseVec<K>],
) -> Vec<((usize, usize), SparseVec<K>)> {
    let n = alg.quiver().vertex_count();
    let arrows: Vec<usize> = (0..alg.quiver().arrows().len())
        .map(|a| alg.arrow_basis_index(&alg.quiver().arrow(a).name).expect("arrow"))
        .collect();
    let mut radical = Vec::new();
    for k in kernel {
        for &a in &arrows {
            for left in [true, false] {
                let v = act(alg, basis, k, a, left);
                if !v.is_empty() {
                    radical.push(v);
                }
            }
        }
    }
    // coordinate (g, p, q) lies in e_{target p} R e_{source q}
    let pair_of = |k: usize| {
        let (_, p, q) = basis.entry(k);
        (alg.target(p), alg.source(q))
    };
    let project = |v: &SparseVec<K>, pair: (usize, usize)| -> SparseVec<K> {
        v.iter().filter(|(k, _)| pair_of(*k) == pair).cloned().collect()
    };
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut ech = Echelon::new(basis.dim());
            for r in &radical {
                let p = project(r, (i, j));
                if !p.is_empty() {
                    ech.insert(p);
                }
            }
            for k in kernel {
                let p = project(k, (i, j));
                if !p.is_empty() && ech.insert(p.clone()).is_some() {
                    out.push(((i, j), p));
                }
            }
        }
    }
    out
}

/// A minimal projective bimodule resolution of `alg`, computed without reference to any
/// closed formula. Stops when a kernel vanishes or after `max_degree`.
pub fn generic_minimal_resolution<K: Field>(alg: &BoundQuiverAlgebra<K>, max_degree: usize) -> BimoduleComplex<K> {
    let r0 = FreeBimodule::new(alg.quiver().vertices().map(|v| (v, v)).collect());
    let augmentation = Augmentation {
        images: r0
            .generators
            .iter()
            .map(|&(v, _)| AlgebraElement::basis(alg.vertex_idempotent(v)))
            .collect(),
    };
    let mut basis = BimoduleBasis::new(alg, &r0);
    let mut matrix = augmentation.matrix(alg, &basis);
    let mut terms = vec![r0];
    let mut maps = Vec::new();
    for _ in 0..max_degree {
        let kernel: Vec<SparseVec<K>> = kernel_basis(&matrix).iter().map(|v| to_sparse(v)).collect();
        if kernel.is_empty() {
            break;
        }
        let gens = cover(alg, &basis, &kernel);
        let target = terms.last().expect("nonempty").clone();
        let source = FreeBimodule::new(gens.iter().map(|(g, _)| *g).collect());
        let images = gens
            .iter()
            .map(|(_, v)| BimoduleElement::from_vector(&basis, v))
            .collect();
        let d = BimoduleMap {
            source: source.clone(),
            target,
            images,
        };
        let new_basis = BimoduleBasis::new(alg, &source);
        matrix = d.matrix(alg, &new_basis, &basis);
        basis = new_basis;
        terms.push(source);
        maps.push(d);
    }
    BimoduleComplex {
        terms,
        maps,
        augmentation,
    }
}

/// Left-module basis of `⊕ A e_v`: pairs `(generator, p)` with `p` starting at the
/// generator's vertex.
struct LeftBasis {
    entries: Vec<(usize, usize)>,
    index: std::collections::HashMap<(usize, usize), usize>,
}

impl LeftBasis {
    fn new<K: Field>(alg: &BoundQuiverAlgebra<K>, gens: &[usize]) -> Self {
        let mut entries = Vec::new();
        for (g, &v) in gens.iter().enumerate() {
            for p in (0..alg.dim()).filter(|&p| alg.source(p) == v) {
                entries.push((g, p));
            }
        }
        let index = entries.iter().enumerate().map(|(k, &t)| (t, k)).collect();
        LeftBasis { entries, index }
    }
}

/// Vertex of each generator in the terms `P_0, P_1, ...` of a minimal projective resolution
/// of the simple left module at `vertex`, up to `max_degree`.
pub fn simple_resolution<K: Field>(alg: &BoundQuiverAlgebra<K>, vertex: usize, max_degree: usize) -> Vec<Vec<usize>> {
    let arrows: Vec<usize> = (0..alg.quiver().arrows().len())
        .map(|a| alg.arrow_basis_index(&alg.quiver().arrow(a).name).expect("arrow"))
        .collect();
    let mut gens = vec![vertex];
    let mut terms = vec![gens.clone()];
    let mut basis = LeftBasis::new(alg, &gens);
    // P_0 -> S: kill the radical
    let mut kernel: Vec<SparseVec<K>> = basis
        .entries
        .iter()
        .enumerate()
        .filter(|(_, &(_, p))| !alg.basis_path(p).is_trivial())
        .map(|(k, _)| vec![(k, K::one())])
        .collect();
    for _ in 0..max_degree {
        if kernel.is_empty() {
            break;
        }
        let act = |v: &SparseVec<K>, x: usize| -> SparseVec<K> {
            let mut acc: SparseVec<K> = Vec::new();
            for (k, c) in v {
                let (g, p) = basis.entries[*k];
                for (r, rc) in alg.mul_basis(x, p) {
                    acc.push((basis.index[&(g, *r)], c.clone() * rc.clone()));
                }
            }
            crate::linalg::collect_sparse(acc)
        };
        let radical: Vec<SparseVec<K>> = kernel
            .iter()
            .flat_map(|k| arrows.iter().map(move |&a| (k, a)))
            .map(|(k, a)| act(k, a))
            .filter(|v| !v.is_empty())
            .collect();
        let mut new_gens = Vec::new();
        let mut images = Vec::new();
        for v in alg.quiver().vertices() {
            let project = |x: &SparseVec<K>| -> SparseVec<K> {
                x.iter()
                    .filter(|(k, _)| alg.target(basis.entries[*k].1) == v)
                    .cloned()
                    .collect()
            };
            let mut ech = Echelon::new(basis.entries.len());
            for r in &radical {
                let p = project(r);
                if !p.is_empty() {
                    ech.insert(p);
                }
            }
            for k in &kernel {
                let p = project(k);
                if !p.is_empty() && ech.insert(p.clone()).is_some() {
                    new_gens.push(v);
                    images.push(p);
                }
            }
        }
        let new_basis = LeftBasis::new(alg, &new_gens);
        let columns: Vec<SparseVec<K>> = new_basis
            .entries
            .iter()
            .map(|&(g, p)| {
                let mut acc = Vec::new();
                for (k, c) in &images[g] {
                    let (h, l) = basis.entries[*k];
                    for (r, rc) in alg.mul_basis(p, l) {
                        acc.push((basis.index[&(h, *r)], c.clone() * rc.clone()));
                    }
                }
                crate::linalg::collect_sparse(acc)
            })
            .collect();
        let m = Matrix::from_sparse_columns(basis.entries.len(), &columns);
        kernel = kernel_basis(&m).iter().map(|v| to_sparse(v)).collect();
        gens = new_gens;
        basis = new_basis;
        terms.push(gens.clone());
    }
    terms
}

/// `dim Ext^n(S_i, S_j)`: the multiplicity of `P_j` in degree `n` of the minimal projective
/// resolution of `S_i`.
pub fn ext_simple_dims<K: Field>(alg: &BoundQuiverAlgebra<K>, i: usize, j: usize, n: usize) -> usize {
    simple_resolution(alg, i, n)
        .get(n)
        .map(|t| t.iter().filter(|&&v| v == j).count())
        .unwrap_or(0)
}
