//! On-disk cache of a verified resolution.
//!
//! The file is JSON: format version, `e`, field, the algebra presentation, per-degree
//! generator lists, and sparse differential matrices as `[row, col, num, den]` (rationals)
//! or `[row, col, residue]` (prime fields), plus the verification report and the repair
//! search that selected the differentials.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{build_a_e, AlgebraElement, AlgebraPresentation, BoundQuiverAlgebra};
use crate::linalg::{Field, FieldDescriptor, Matrix, ScalarParts};

use super::bimodule::{Augmentation, BimoduleBasis, BimoduleComplex, BimoduleElement, BimoduleMap, FreeBimodule};
use super::paper::{paper_resolution, RepairSearch};
use super::verify::{verify_complex, VerificationReport};
use super::ResolutionError;

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntry {
    Fraction(usize, usize, i64, i64),
    Residue(usize, usize, u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedDegree {
    pub degree: usize,
    pub generators: Vec<(usize, usize)>,
    /// Matrix of `d_degree` (of the augmentation in degree 0), rows = target basis.
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<MatrixEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionCache {
    pub version: u32,
    pub tool_version: String,
    pub e: usize,
    pub field: FieldDescriptor,
    pub algebra: AlgebraPresentation,
    pub degrees: Vec<CachedDegree>,
    pub verification: VerificationReport,
    pub repair: RepairSearch,
}

/// A resolution of `A_e` that has passed [`verify_complex`].
#[derive(Clone, Debug)]
pub struct VerifiedResolution<K> {
    pub e: usize,
    pub algebra: BoundQuiverAlgebra<K>,
    pub complex: BimoduleComplex<K>,
    pub verification: VerificationReport,
    pub repair: RepairSearch,
}

fn encode<K: Field>(m: &Matrix<K>) -> Result<Vec<MatrixEntry>, ResolutionError> {
    let mut out = Vec::with_capacity(m.nnz());
    for (r, c, x) in m.triplets() {
        out.push(match x.to_parts().map_err(|e| ResolutionError::Cache(e.to_string()))? {
            ScalarParts::Fraction(n, d) => MatrixEntry::Fraction(r, c, n, d),
            ScalarParts::Residue(v) => MatrixEntry::Residue(r, c, v),
        });
    }
    Ok(out)
}

fn decode<K: Field>(rows: usize, cols: usize, entries: &[MatrixEntry]) -> Result<Matrix<K>, ResolutionError> {
    let mut triplets = Vec::with_capacity(entries.len());
    for e in entries {
        let (r, c, parts) = match e {
            MatrixEntry::Fraction(r, c, n, d) => (*r, *c, ScalarParts::Fraction(*n, *d)),
            MatrixEntry::Residue(r, c, v) => (*r, *c, ScalarParts::Residue(*v)),
        };
        if r >= rows || c >= cols {
            return Err(ResolutionError::Cache(format!(
                "entry ({r}, {c}) outside a {rows}x{cols} matrix"
            )));
        }
        triplets.push((
            r,
            c,
            K::from_parts(&parts).map_err(|e| ResolutionError::Cache(e.to_string()))?,
        ));
    }
    Ok(Matrix::from_triplets(rows, cols, triplets))
}

impl<K: Field> VerifiedResolution<K> {
    /// Builds the closed-form resolution, searching repairs, and verifies it.
    pub fn compute(e: usize) -> Result<Self, ResolutionError> {
        let algebra = build_a_e::<K>(e)?;
        let (complex, repair) = paper_resolution(&algebra, e)?;
        let verification = verify_complex(&algebra, &complex);
        if !verification.passed() {
            return Err(ResolutionError::Verification(
                verification.first_failure().unwrap_or_default(),
            ));
        }
        Ok(VerifiedResolution {
            e,
            algebra,
            complex,
            verification,
            repair,
        })
    }

    pub fn to_cache(&self) -> Result<ResolutionCache, ResolutionError> {
        let bases: Vec<BimoduleBasis> = self
            .complex
            .terms
            .iter()
            .map(|t| BimoduleBasis::new(&self.algebra, t))
            .collect();
        let mut degrees = Vec::new();
        for (n, term) in self.complex.terms.iter().enumerate() {
            let m = if n == 0 {
                self.complex.augmentation.matrix(&self.algebra, &bases[0])
            } else {
                self.complex.maps[n - 1].matrix(&self.algebra, &bases[n], &bases[n - 1])
            };
            degrees.push(CachedDegree {
                degree: n,
                generators: term.generators.clone(),
                rows: m.rows(),
                cols: m.cols(),
                entries: encode(&m)?,
            });
        }
        Ok(ResolutionCache {
            version: CACHE_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            e: self.e,
            field: K::descriptor(),
            algebra: AlgebraPresentation::from_algebra(&self.algebra)?,
            degrees,
            verification: self.verification.clone(),
            repair: self.repair.clone(),
        })
    }

    /// Rebuilds from a cache file written for the same `e`, field and tool version.
    pub fn from_cache(cache: &ResolutionCache) -> Result<Self, ResolutionError> {
        if cache.version != CACHE_VERSION || cache.tool_version != env!("CARGO_PKG_VERSION") {
            return Err(ResolutionError::Cache("version mismatch".into()));
        }
        if cache.field != K::descriptor() {
            return Err(ResolutionError::Cache(format!(
                "cache is over {}, requested {}",
                cache.field,
                K::descriptor()
            )));
        }
        let algebra: BoundQuiverAlgebra<K> = cache.algebra.to_algebra()?;
        if cache.algebra != AlgebraPresentation::from_algebra(&build_a_e::<K>(cache.e)?)? {
            return Err(ResolutionError::Cache(format!("stored algebra is not A_{}", cache.e)));
        }
        let terms: Vec<FreeBimodule> = cache
            .degrees
            .iter()
            .map(|d| FreeBimodule::new(d.generators.clone()))
            .collect();
        if terms.is_empty() {
            return Err(ResolutionError::Cache("no degrees stored".into()));
        }
        let bases: Vec<BimoduleBasis> = terms.iter().map(|t| BimoduleBasis::new(&algebra, t)).collect();
        let mut maps = Vec::new();
        let mut augmentation = None;
        for (n, d) in cache.degrees.iter().enumerate() {
            let expected_rows = if n == 0 { algebra.dim() } else { bases[n - 1].dim() };
            if d.degree != n || d.rows != expected_rows || d.cols != bases[n].dim() {
                return Err(ResolutionError::Cache(format!("degree {n} has inconsistent shape")));
            }
            let cols = decode::<K>(d.rows, d.cols, &d.entries)?.transpose();
            if n == 0 {
                let images = (0..terms[0].rank())
                    .map(|g| {
                        let k = bases[0].generator_index(&algebra, &terms[0], g);
                        AlgebraElement::from_sparse(cols.row(k).to_vec())
                    })
                    .collect();
                augmentation = Some(Augmentation { images });
            } else {
                let images = (0..terms[n].rank())
                    .map(|g| {
                        let k = bases[n].generator_index(&algebra, &terms[n], g);
                        BimoduleElement::from_vector(&bases[n - 1], cols.row(k))
                    })
                    .collect();
                maps.push(BimoduleMap {
                    source: terms[n].clone(),
                    target: terms[n - 1].clone(),
                    images,
                });
            }
        }
        let complex = BimoduleComplex {
            terms,
            maps,
            augmentation: augmentation.expect("degree 0 present"),
        };
        Ok(VerifiedResolution {
            e: cache.e,
            algebra,
            complex,
            verification: cache.verification.clone(),
            repair: cache.repair.clone(),
        })
    }

    /// Loads the cache at `path` if it matches `e` and the field, otherwise computes the
    /// resolution and writes the cache. The flag reports a cache hit. A loaded cache is
    /// re-verified and a failing one is an error, not silently replaced.
    pub fn load_or_compute(e: usize, path: &Path) -> Result<(Self, bool), ResolutionError> {
        if let Ok(text) = std::fs::read_to_string(path) {
            if let Ok(cache) = serde_json::from_str::<ResolutionCache>(&text) {
                if cache.e == e && cache.field == K::descriptor() {
                    if let Ok(r) = Self::from_cache(&cache) {
                        // a well-formed file can still hold wrong differentials
                        let check = verify_complex(&r.algebra, &r.complex);
                        if let Some(f) = check.first_failure() {
                            return Err(ResolutionError::Verification(format!(
                                "cached resolution at {}: {f}",
                                path.display()
                            )));
                        }
                        return Ok((r, true));
                    }
                }
            }
        }
        let r = Self::compute(e)?;
        r.to_cache()?.save(path)?;
        Ok((r, false))
    }
}

impl ResolutionCache {
    /// Writes through a temporary file and renames, so readers never see a partial file.
    pub fn save(&self, path: &Path) -> Result<(), ResolutionError> {
        let text = serde_json::to_string(self).map_err(|e| ResolutionError::Cache(e.to_string()))?;
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, text).map_err(|e| ResolutionError::Io(e.to_string()))?;
        std::fs::rename(&tmp, path).map_err(|e| ResolutionError::Io(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, ResolutionError> {
        let text = std::fs::read_to_string(path).map_err(|e| ResolutionError::Io(e.to_string()))?;
        serde_json::from_str(&text).map_err(|e| ResolutionError::Cache(e.to_string()))
    }
}
