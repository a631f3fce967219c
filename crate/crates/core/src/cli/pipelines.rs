use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{build_a_e, heredity_chain_search, is_heredity_ideal, HeredityChain, HeredityVerdict};
use crate::blockcomb::{
    abacus_from_partition, block_label, blocks_of, rouquier_bead_bound, rouquier_presentation, AbacusConfig, BlockLabel,
};
use crate::graded::GradedDims;
use crate::hochschild::{verify_ring_presentation_with, CochainComplex, TABLE_LIMIT};
use crate::linalg::{Field, FieldDescriptor};
use crate::partition::Partition;
use crate::resolution::{
    paper_resolution_term, verify_complex, RepairSearch, ResolutionError, VerificationReport, VerifiedResolution,
};
use crate::symwreath::{
    kernel_pi_report, listed_generators, parse_generator, quotient_hilbert, truncated_invariant_dims, wreath_hh_dims,
    wreath_terms, SignConvention,
};
use crate::with_field;

use super::{CliError, CommandKind, ConventionChoice, ReportBody, RunConfig};

/// Largest `e` for which `algebra` runs the heredity chain search.
pub const CHAIN_SEARCH_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisInfo {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraResult {
    pub e: usize,
    pub dim: usize,
    pub center_dim: usize,
    pub basis: Vec<BasisInfo>,
    /// `dim rad^k` for `k = 0, 1, ...` until it vanishes.
    pub radical_dims: Vec<usize>,
    /// Test of the ideal generated by the last vertex idempotent.
    pub top_heredity_ideal: HeredityVerdict,
    /// `None` when no chain exists or `e` exceeds [`CHAIN_SEARCH_LIMIT`].
    pub heredity_chain: Option<HeredityChain>,
    pub chain_searched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDegree {
    pub degree: usize,
    pub generators: Vec<(usize, usize)>,
    pub bimodule_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionResult {
    pub e: usize,
    pub length: usize,
    pub degrees: Vec<ResolutionDegree>,
    pub matches_closed_form_terms: bool,
    pub repair: RepairSearch,
    /// Present with `--verify`; recomputed from the complex even on a cache hit.
    pub verification: Option<VerificationReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HhResult {
    pub e: usize,
    pub degree_convention: String,
    pub hh_dims: GradedDims,
    /// `dim Hom(R_n, A)` for `n = 0..=N`.
    pub hom_dims: Vec<usize>,
    /// `dim Hom(Ker d_n, A)` for `n = 1..=N`.
    pub kernel_hom_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathTerm {
    pub partition: Partition,
    pub dims: GradedDims,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathConventionResult {
    pub convention: SignConvention,
    pub dims: GradedDims,
    pub terms: Vec<WreathTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathResult {
    pub e: usize,
    pub w: usize,
    pub degree_convention: String,
    /// `HH*(A_e)`, the input graded space.
    pub factor_dims: GradedDims,
    pub results: Vec<WreathConventionResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientGenerator {
    pub token: String,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientResult {
    pub w: usize,
    pub max_degree: usize,
    pub degree_convention: String,
    pub generators: Vec<QuotientGenerator>,
    pub dims: GradedDims,
    /// Dimensions of the truncated invariant ring when `--e` is given.
    pub truncated_invariant_dims: Option<GradedDims>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockGroup {
    pub label: BlockLabel,
    pub partitions: Vec<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouquierInfo {
    pub w: usize,
    pub core: Partition,
    pub is_rouquier: bool,
    pub presentation: Option<AbacusConfig>,
    pub bead_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionInfo {
    pub partition: Partition,
    pub label: BlockLabel,
    pub abacus: AbacusConfig,
    pub rouquier: Option<RouquierInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlocksResult {
    pub e: usize,
    pub n: Option<usize>,
    pub groups: Vec<BlockGroup>,
    pub partition: Option<PartitionInfo>,
}

fn need(value: Option<usize>, flag: &str, min: usize) -> Result<usize, CliError> {
    match value {
        None => Err(CliError::Usage(format!("--{flag} is required"))),
        Some(v) if v < min => Err(CliError::Usage(format!("--{flag} must be at least {min}, got {v}"))),
        Some(v) => Ok(v),
    }
}

fn rational_only(config: &RunConfig) -> Result<(), CliError> {
    if config.field != FieldDescriptor::Rational {
        return Err(CliError::Usage(format!(
            "{:?} works over the rationals only",
            config.command
        )));
    }
    Ok(())
}

fn resolution_error(e: ResolutionError) -> CliError {
    match e {
        ResolutionError::Verification(msg) => CliError::Verification(msg),
        ResolutionError::NoRepair(e) => {
            CliError::Verification(format!("no repair of the closed-form differentials verifies at e={e}"))
        }
        other => CliError::Runtime(other.to_string()),
    }
}

fn load_resolution<K: Field>(e: usize, cache: Option<&Path>) -> Result<(VerifiedResolution<K>, bool), CliError> {
    match cache {
        Some(path) => VerifiedResolution::<K>::load_or_compute(e, path).map_err(resolution_error),
        None => VerifiedResolution::<K>::compute(e)
            .map(|r| (r, false))
            .map_err(resolution_error),
    }
}

type Dispatched = (ReportBody, bool, Option<CliError>);

pub(super) fn dispatch(config: &RunConfig) -> Result<Dispatched, CliError> {
    config.field.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let cache = config.cache_path.as_deref();
    match config.command {
        CommandKind::Algebra => {
            let e = need(config.e, "e", 2)?;
            with_field!(config.field, K => algebra::<K>(e)).map(|r| (ReportBody::Algebra(r), false, None))
        }
        CommandKind::Resolution => {
            let e = need(config.e, "e", 2)?;
            with_field!(config.field, K => resolution::<K>(e, config.verify, cache))
        }
        CommandKind::Hh => {
            let e = need(config.e, "e", 2)?;
            with_field!(config.field, K => hh::<K>(e, cache))
        }
        CommandKind::Ring => {
            let e = need(config.e, "e", 2)?;
            with_field!(config.field, K => ring::<K>(e, cache))
        }
        CommandKind::Wreath => {
            let e = need(config.e, "e", 2)?;
            let w = need(config.w, "w", 1)?;
            let choice = config.convention.unwrap_or(ConventionChoice::Both);
            with_field!(config.field, K => wreath::<K>(e, w, choice, cache))
        }
        CommandKind::KernelPi => {
            rational_only(config)?;
            let e = need(config.e, "e", 1)?;
            let w = need(config.w, "w", 1)?;
            let d = need(config.max_degree, "max-degree", e + w + 1)?;
            let report = kernel_pi_report(e, w, d).map_err(|x| CliError::Usage(x.to_string()))?;
            Ok((ReportBody::KernelPi(report), false, None))
        }
        CommandKind::Quotient => {
            rational_only(config)?;
            let w = need(config.w, "w", 1)?;
            let d = need(config.max_degree, "max-degree", 0)?;
            quotient(config.e, w, d, config.generators.as_deref()).map(|r| (ReportBody::Quotient(r), false, None))
        }
        CommandKind::Blocks => {
            let e = need(config.e, "e", 2)?;
            blocks(e, config.n, config.partition.as_deref(), config.w).map(|r| (ReportBody::Blocks(r), false, None))
        }
    }
}

fn algebra<K: Field>(e: usize) -> Result<AlgebraResult, CliError> {
    let alg = build_a_e::<K>(e).map_err(|x| CliError::Usage(x.to_string()))?;
    let s = alg.structure();
    let basis = (0..alg.dim())
        .map(|i| BasisInfo {
            label: alg.label(i).to_string(),
            source: alg.source(i),
            target: alg.target(i),
        })
        .collect();
    let mut radical_dims = vec![alg.dim()];
    for k in 1.. {
        let d = alg.radical(k).len();
        radical_dims.push(d);
        if d == 0 {
            break;
        }
    }
    let top = s.idempotent_ideal(&[e - 1]);
    let chain_searched = e <= CHAIN_SEARCH_LIMIT;
    Ok(AlgebraResult {
        e,
        dim: alg.dim(),
        center_dim: alg.center().len(),
        basis,
        radical_dims,
        top_heredity_ideal: is_heredity_ideal(s, &top),
        heredity_chain: if chain_searched { heredity_chain_search(s) } else { None },
        chain_searched,
    })
}

fn resolution<K: Field>(e: usize, verify: bool, cache: Option<&Path>) -> Result<Dispatched, CliError> {
    let (res, hit) = load_resolution::<K>(e, cache)?;
    let degrees: Vec<ResolutionDegree> = res
        .complex
        .terms
        .iter()
        .enumerate()
        .map(|(n, t)| ResolutionDegree {
            degree: n,
            generators: t.generators.clone(),
            bimodule_dim: crate::resolution::BimoduleBasis::new(&res.algebra, t).dim(),
        })
        .collect();
    let matches = (0..=res.complex.length() + 1).all(|n| {
        let mut a = res.complex.term(n).generators;
        let mut b = paper_resolution_term(e, n);
        a.sort_unstable();
        b.sort_unstable();
        a == b
    });
    let verification = verify.then(|| verify_complex(&res.algebra, &res.complex));
    let failure = verification
        .as_ref()
        .and_then(|v| v.first_failure())
        .map(CliError::Verification);
    let body = ResolutionResult {
        e,
        length: res.complex.length(),
        degrees,
        matches_closed_form_terms: matches,
        repair: res.repair.clone(),
        verification,
    };
    Ok((ReportBody::Resolution(body), hit, failure))
}

fn hh_result<K: Field>(res: &VerifiedResolution<K>) -> HhResult {
    let c = CochainComplex::new(&res.algebra, &res.complex);
    HhResult {
        e: res.e,
        degree_convention: "cohomological".into(),
        hh_dims: c.hh_dims(),
        hom_dims: c.hom_dims(),
        kernel_hom_dims: (1..=c.top()).map(|n| c.kernel_hom_dim(n)).collect(),
    }
}

fn hh<K: Field>(e: usize, cache: Option<&Path>) -> Result<Dispatched, CliError> {
    let (res, hit) = load_resolution::<K>(e, cache)?;
    Ok((ReportBody::Hh(hh_result(&res)), hit, None))
}

fn ring<K: Field>(e: usize, cache: Option<&Path>) -> Result<Dispatched, CliError> {
    let (res, hit) = load_resolution::<K>(e, cache)?;
    let report = verify_ring_presentation_with(&res, e <= TABLE_LIMIT).map_err(|x| CliError::Runtime(x.to_string()))?;
    let failure = (!report.passed).then(|| CliError::Verification(report.failures().join("; ")));
    Ok((ReportBody::Ring(report), hit, failure))
}

fn wreath<K: Field>(
    e: usize,
    w: usize,
    choice: ConventionChoice,
    cache: Option<&Path>,
) -> Result<Dispatched, CliError> {
    let (res, hit) = load_resolution::<K>(e, cache)?;
    let v = hh_result(&res).hh_dims;
    let conventions: Vec<SignConvention> = match choice {
        ConventionChoice::Unsigned => vec![SignConvention::Unsigned],
        ConventionChoice::Signed => vec![SignConvention::Signed],
        ConventionChoice::Both => SignConvention::ALL.to_vec(),
    };
    let results = conventions
        .into_iter()
        .map(|c| WreathConventionResult {
            convention: c,
            dims: wreath_hh_dims(&v, w, c),
            terms: wreath_terms(&v, w, c)
                .into_iter()
                .map(|(partition, dims)| WreathTerm { partition, dims })
                .collect(),
        })
        .collect();
    let body = WreathResult {
        e,
        w,
        degree_convention: "cohomological".into(),
        factor_dims: v,
        results,
    };
    Ok((ReportBody::Wreath(body), hit, None))
}

fn quotient(
    e: Option<usize>,
    w: usize,
    max_degree: usize,
    tokens: Option<&[String]>,
) -> Result<QuotientResult, CliError> {
    let generators: Vec<(String, crate::symwreath::SymPoly)> = match (tokens, e) {
        (Some(t), _) => t
            .iter()
            .map(|tok| parse_generator(tok, w).map(|p| (tok.trim().to_string(), p)))
            .collect::<Result<_, _>>()
            .map_err(|x| CliError::Usage(x.to_string()))?,
        (None, Some(e)) => listed_generators(e, w),
        (None, None) => Vec::new(),
    };
    let polys: Vec<_> = generators.iter().map(|(_, p)| p.clone()).collect();
    let dims = quotient_hilbert(w, &polys, max_degree).map_err(|x| CliError::Usage(x.to_string()))?;
    Ok(QuotientResult {
        w,
        max_degree,
        degree_convention: "y-degree (cohomological degree is twice this)".into(),
        generators: generators
            .iter()
            .map(|(t, p)| QuotientGenerator {
                token: t.clone(),
                polynomial: p.to_string(),
            })
            .collect(),
        dims,
        truncated_invariant_dims: e.map(|e| truncated_invariant_dims(e, w)),
    })
}

fn blocks(e: usize, n: Option<usize>, partition: Option<&str>, w: Option<usize>) -> Result<BlocksResult, CliError> {
    if n.is_none() && partition.is_none() {
        return Err(CliError::Usage("blocks needs --n or --partition".into()));
    }
    let groups = n
        .map(|n| {
            blocks_of(n, e)
                .into_iter()
                .map(|(label, partitions)| BlockGroup { label, partitions })
                .collect()
        })
        .unwrap_or_default();
    let partition = match partition {
        None => None,
        Some(text) => {
            let p: Partition = text.parse().map_err(CliError::Usage)?;
            let label = block_label(&p, e);
            let abacus = abacus_from_partition(&p, e, p.len()).map_err(|x| CliError::Usage(x.to_string()))?;
            let rouquier = match w {
                None => None,
                Some(w) => {
                    let presentation =
                        rouquier_presentation(&label.core, e, w).map_err(|x| CliError::Runtime(x.to_string()))?;
                    Some(RouquierInfo {
                        w,
                        core: label.core.clone(),
                        is_rouquier: presentation.is_some(),
                        presentation,
                        bead_bound: rouquier_bead_bound(&label.core, e, w),
                    })
                }
            };
            Some(PartitionInfo {
                partition: p,
                label,
                abacus,
                rouquier,
            })
        }
    };
    Ok(BlocksResult {
        e,
        n,
        groups,
        partition,
    })
}
