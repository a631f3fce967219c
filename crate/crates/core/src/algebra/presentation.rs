//! Versioned JSON description of a bound quiver algebra.
//!
//! The file stores the quiver, the relations and the resulting basis and structure constants.
//! Loading rebuilds the algebra from quiver and relations and rejects the file if the stored
//! basis or structure constants disagree with the rebuilt ones.

use serde::{Deserialize, Serialize};

use crate::linalg::{Field, FieldDescriptor, ScalarParts};

use super::bound::{BoundQuiverAlgebra, Relation};
use super::quiver::{Arrow, Path, Quiver};
use super::AlgebraError;

pub const PRESENTATION_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coefficient: ScalarParts,
    /// Arrow names in product order; the last one is applied first.
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstant {
    pub left: usize,
    pub right: usize,
    pub result: Vec<(usize, ScalarParts)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraPresentation {
    pub version: u32,
    pub field: FieldDescriptor,
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<RelationTerm>>,
    pub basis: Vec<BasisEntry>,
    /// Nonzero products of basis elements only.
    pub structure: Vec<StructureConstant>,
}

fn path_names(q: &Quiver, p: &Path) -> Vec<String> {
    p.arrows.iter().map(|&a| q.arrow(a).name.clone()).collect()
}

impl AlgebraPresentation {
    pub fn from_algebra<K: Field>(alg: &BoundQuiverAlgebra<K>) -> Result<Self, AlgebraError> {
        let q = alg.quiver();
        let relations = alg
            .relations()
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(c, p)| {
                        Ok(RelationTerm {
                            coefficient: c.to_parts()?,
                            path: path_names(q, p),
                        })
                    })
                    .collect::<Result<Vec<_>, AlgebraError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let basis = alg
            .basis()
            .iter()
            .enumerate()
            .map(|(i, p)| BasisEntry {
                label: alg.label(i).to_string(),
                source: p.source,
                target: p.target,
                path: path_names(q, p),
            })
            .collect();
        let mut structure = Vec::new();
        for l in 0..alg.dim() {
            for r in 0..alg.dim() {
                let prod = alg.mul_basis(l, r);
                if prod.is_empty() {
                    continue;
                }
                let result = prod
                    .iter()
                    .map(|(k, c)| Ok((*k, c.to_parts()?)))
                    .collect::<Result<Vec<_>, AlgebraError>>()?;
                structure.push(StructureConstant {
                    left: l,
                    right: r,
                    result,
                });
            }
        }
        Ok(AlgebraPresentation {
            version: PRESENTATION_VERSION,
            field: K::descriptor(),
            vertices: q.vertex_count(),
            arrows: q.arrows().to_vec(),
            relations,
            basis,
            structure,
        })
    }

    /// Rebuilds the algebra and checks it against the stored basis and structure constants.
    pub fn to_algebra<K: Field>(&self) -> Result<BoundQuiverAlgebra<K>, AlgebraError> {
        if self.version != PRESENTATION_VERSION {
            return Err(AlgebraError::Presentation(format!(
                "unsupported version {} (expected {PRESENTATION_VERSION})",
                self.version
            )));
        }
        if self.field != K::descriptor() {
            return Err(AlgebraError::Presentation(format!(
                "file is over {} but {} was requested",
                self.field,
                K::descriptor()
            )));
        }
        let q = Quiver::new(self.vertices, self.arrows.clone())?;
        let path = |names: &[String], s: usize| -> Result<Path, AlgebraError> {
            if names.is_empty() {
                return Ok(Path::trivial(s));
            }
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            q.path_from_names(&refs)
        };
        let relations = self
            .relations
            .iter()
            .map(|terms| {
                let terms = terms
                    .iter()
                    .map(|t| Ok((K::from_parts(&t.coefficient)?, path(&t.path, 0)?)))
                    .collect::<Result<Vec<_>, AlgebraError>>()?;
                Ok(Relation { terms })
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        let mut aliases = std::collections::HashMap::new();
        for b in &self.basis {
            let p = path(&b.path, b.source)?;
            if p.source != b.source || p.target != b.target {
                return Err(AlgebraError::Presentation(format!(
                    "basis element {} has inconsistent endpoints",
                    b.label
                )));
            }
            aliases.insert(p, b.label.clone());
        }
        let alg = BoundQuiverAlgebra::with_aliases(q.clone(), relations, &aliases)?;

        if alg.dim() != self.basis.len() {
            return Err(AlgebraError::Presentation(format!(
                "stored basis has {} elements, relations give {}",
                self.basis.len(),
                alg.dim()
            )));
        }
        // stored basis order may differ from the canonical one
        let mut perm = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            let p = path(&b.path, b.source)?;
            let idx = alg.basis_index(&p).ok_or_else(|| {
                AlgebraError::Presentation(format!("stored basis element {} is not a normal form", b.label))
            })?;
            perm.push(idx);
        }
        let mut expected = vec![vec![Vec::new(); alg.dim()]; alg.dim()];
        for s in &self.structure {
            if s.left >= perm.len() || s.right >= perm.len() {
                return Err(AlgebraError::Presentation(
                    "structure constant index out of range".into(),
                ));
            }
            let mut v = Vec::new();
            for (k, c) in &s.result {
                let k = *perm
                    .get(*k)
                    .ok_or_else(|| AlgebraError::Presentation("structure constant index out of range".into()))?;
                v.push((k, K::from_parts(c)?));
            }
            v.sort_by_key(|(k, _)| *k);
            expected[perm[s.left]][perm[s.right]] = v;
        }
        for l in 0..alg.dim() {
            for r in 0..alg.dim() {
                if alg.mul_basis(l, r) != &expected[l][r] {
                    return Err(AlgebraError::Presentation(format!(
                        "structure constant {} * {} disagrees with the relations",
                        alg.label(l),
                        alg.label(r)
                    )));
                }
            }
        }
        Ok(alg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(s).map_err(|e| AlgebraError::Presentation(e.to_string()))
    }
}
