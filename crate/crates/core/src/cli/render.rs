use std::fmt::Write;

use super::{CliError, Format, Report, ReportBody};
use crate::hochschild::{PresentationReport, RingCheck};

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Runtime(e.to_string());
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(&r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Runtime(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Runtime(e.to_string()))
}

fn gens(g: &[(usize, usize)]) -> String {
    g.iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn ring_groups(r: &PresentationReport) -> Vec<(&'static str, &Vec<RingCheck>)> {
    vec![
        ("relation", &r.relations),
        ("nonvanishing", &r.nonvanishing),
        ("commutativity", &r.commutativity),
        ("lift-independence", &r.lift_independence),
        ("unit-and-center", &r.unit_and_center),
    ]
}

pub fn render(report: &Report) -> Result<String, CliError> {
    match report.config.format {
        Format::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| CliError::Runtime(e.to_string())),
        Format::Csv => render_csv(&report.result),
        Format::Table => Ok(render_table(report)),
    }
}

fn render_csv(body: &ReportBody) -> Result<String, CliError> {
    match body {
        ReportBody::Algebra(a) => csv_text(
            &["index", "label", "source", "target"],
            a.basis
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    vec![
                        i.to_string(),
                        b.label.clone(),
                        b.source.to_string(),
                        b.target.to_string(),
                    ]
                })
                .collect(),
        ),
        ReportBody::Resolution(r) => csv_text(
            &["degree", "generators", "rank", "bimodule_dim"],
            r.degrees
                .iter()
                .map(|d| {
                    vec![
                        d.degree.to_string(),
                        gens(&d.generators),
                        d.generators.len().to_string(),
                        d.bimodule_dim.to_string(),
                    ]
                })
                .collect(),
        ),
        ReportBody::Hh(h) => csv_text(
            &["degree_convention", "degree", "hh_dim", "hom_dim", "kernel_hom_dim"],
            (0..h.hom_dims.len())
                .map(|n| {
                    vec![
                        h.degree_convention.clone(),
                        n.to_string(),
                        h.hh_dims.get(n).to_string(),
                        h.hom_dims[n].to_string(),
                        if n == 0 {
                            String::new()
                        } else {
                            h.kernel_hom_dims[n - 1].to_string()
                        },
                    ]
                })
                .collect(),
        ),
        ReportBody::Ring(r) => {
            let mut rows = Vec::new();
            for (group, checks) in ring_groups(r) {
                for c in checks {
                    rows.push(vec![
                        group.to_string(),
                        c.name.clone(),
                        c.passed.to_string(),
                        c.witness.clone().unwrap_or_default(),
                    ]);
                }
            }
            csv_text(&["group", "check", "passed", "witness"], rows)
        }
        ReportBody::Wreath(w) => {
            let mut rows = Vec::new();
            for r in &w.results {
                for (d, x) in r.dims.as_slice().iter().enumerate() {
                    rows.push(vec![
                        w.degree_convention.clone(),
                        r.convention.to_string(),
                        d.to_string(),
                        x.to_string(),
                    ]);
                }
            }
            csv_text(&["degree_convention", "convention", "degree", "dim"], rows)
        }
        ReportBody::KernelPi(k) => csv_text(
            &[
                "degree_convention",
                "degree",
                "lambda_dim",
                "image_dim",
                "kernel_dim",
                "ideal_dim",
                "ideal_in_kernel",
                "kernel_in_ideal",
                "kernel_outside_ideal",
            ],
            k.degrees
                .iter()
                .map(|d| {
                    vec![
                        "y-degree".to_string(),
                        d.degree.to_string(),
                        d.lambda_dim.to_string(),
                        d.image_dim.to_string(),
                        d.kernel_dim.to_string(),
                        d.ideal_dim.to_string(),
                        d.ideal_in_kernel.to_string(),
                        d.kernel_in_ideal.to_string(),
                        d.kernel_outside_ideal.join("; "),
                    ]
                })
                .collect(),
        ),
        ReportBody::Quotient(q) => csv_text(
            &["degree_convention", "degree", "dim"],
            (0..=q.max_degree)
                .map(|d| vec!["y-degree".to_string(), d.to_string(), q.dims.get(d).to_string()])
                .collect(),
        ),
        ReportBody::Blocks(b) => {
            let mut rows = Vec::new();
            for g in &b.groups {
                for p in &g.partitions {
                    rows.push(vec![
                        g.label.weight.to_string(),
                        g.label.core.to_string(),
                        p.to_string(),
                    ]);
                }
            }
            if let Some(p) = &b.partition {
                rows.push(vec![
                    p.label.weight.to_string(),
                    p.label.core.to_string(),
                    p.partition.to_string(),
                ]);
            }
            csv_text(&["weight", "core", "partition"], rows)
        }
    }
}

fn render_table(report: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {} ({})", report.tool, report.version, report.config.field);
    let _ = match &report.result {
        ReportBody::Algebra(a) => table_algebra(&mut s, a),
        ReportBody::Resolution(r) => table_resolution(&mut s, r),
        ReportBody::Hh(h) => table_hh(&mut s, h),
        ReportBody::Ring(r) => table_ring(&mut s, r),
        ReportBody::Wreath(w) => table_wreath(&mut s, w),
        ReportBody::KernelPi(k) => table_kernel(&mut s, k),
        ReportBody::Quotient(q) => table_quotient(&mut s, q),
        ReportBody::Blocks(b) => table_blocks(&mut s, b),
    };
    s
}

type Out = std::fmt::Result;

fn table_algebra(s: &mut String, a: &super::AlgebraResult) -> Out {
    writeln!(s, "A_{}: dim {}, centre dim {}", a.e, a.dim, a.center_dim)?;
    let labels: Vec<&str> = a.basis.iter().map(|b| b.label.as_str()).collect();
    writeln!(s, "basis: {}", labels.join(" "))?;
    writeln!(s, "dim rad^k: {:?}", a.radical_dims)?;
    writeln!(
        s,
        "A e{} A heredity ideal: {} ({})",
        a.e,
        a.top_heredity_ideal.holds,
        a.top_heredity_ideal.reason()
    )?;
    match (&a.heredity_chain, a.chain_searched) {
        (Some(c), _) => {
            let steps: Vec<String> = c
                .steps
                .iter()
                .map(|st| format!("<{}> dim {}", st.vertices.join(","), st.dim))
                .collect();
            writeln!(s, "heredity chain: {}", steps.join(" > "))
        }
        (None, true) => writeln!(s, "heredity chain: none found"),
        (None, false) => writeln!(s, "heredity chain: not searched for e > {}", super::CHAIN_SEARCH_LIMIT),
    }
}

fn table_resolution(s: &mut String, r: &super::ResolutionResult) -> Out {
    writeln!(s, "minimal bimodule resolution of A_{}, length {}", r.e, r.length)?;
    writeln!(s, "{:>6}  {:>5}  {:>6}  generators", "degree", "rank", "dim")?;
    for d in &r.degrees {
        writeln!(
            s,
            "{:>6}  {:>5}  {:>6}  {}",
            d.degree,
            d.generators.len(),
            d.bimodule_dim,
            gens(&d.generators)
        )?;
    }
    writeln!(s, "terms match the closed form: {}", r.matches_closed_form_terms)?;
    writeln!(s, "repair candidates (checked at e in {:?}):", r.repair.sizes)?;
    for c in &r.repair.candidates {
        let status = if c.passed {
            "pass".to_string()
        } else {
            let first = c
                .results
                .iter()
                .find_map(|(size, res)| res.as_ref().err().map(|m| format!("e={size}: {m}")))
                .unwrap_or_default();
            format!("fail ({first})")
        };
        writeln!(s, "  {}: {}", c.description, status)?;
    }
    if let Some(sel) = &r.repair.selected {
        writeln!(s, "selected: {}", sel.describe())?;
    }
    if let Some(v) = &r.verification {
        writeln!(s, "d∘d = 0: {}", mark(v.squares_to_zero.passed))?;
        writeln!(s, "exactness: {}", mark(v.exact.passed))?;
        writeln!(s, "minimality: {}", mark(v.minimal.passed))?;
        if let Some(f) = v.first_failure() {
            writeln!(s, "first failure: {f}")?;
        }
    }
    Ok(())
}

fn table_hh(s: &mut String, h: &super::HhResult) -> Out {
    writeln!(s, "HH*(A_{}) = {}", h.e, h.hh_dims)?;
    writeln!(
        s,
        "{:>6}  {:>5}  {:>11}  {:>16}",
        "degree", "HH^n", "Hom(R_n,A)", "Hom(Ker d_n,A)"
    )?;
    for n in 0..h.hom_dims.len() {
        let k = if n == 0 {
            "-".to_string()
        } else {
            h.kernel_hom_dims[n - 1].to_string()
        };
        writeln!(s, "{:>6}  {:>5}  {:>11}  {:>16}", n, h.hh_dims.get(n), h.hom_dims[n], k)?;
    }
    Ok(())
}

fn table_ring(s: &mut String, r: &PresentationReport) -> Out {
    writeln!(s, "HH*(A_{}) = {}; presented ring {}", r.e, r.hh_dims, r.presented_dims)?;
    for g in &r.generators {
        writeln!(s, "  {} (degree {}): {}", g.name, g.degree, g.representative)?;
    }
    for (group, checks) in ring_groups(r) {
        let failed: Vec<&RingCheck> = checks.iter().filter(|c| !c.passed).collect();
        writeln!(s, "{group}: {}/{} pass", checks.len() - failed.len(), checks.len())?;
        for c in failed {
            writeln!(s, "  FAIL {}: {}", c.name, c.witness.clone().unwrap_or_default())?;
        }
    }
    if !r.relations.is_empty() {
        let names: Vec<&str> = r.relations.iter().map(|c| c.name.as_str()).collect();
        writeln!(s, "relations checked: {}", names.join(", "))?;
    }
    if let Some(t) = &r.multiplication_table {
        writeln!(
            s,
            "multiplication table on {}: {} products, {} mismatches, basis {}",
            t.basis.join(" "),
            t.products_checked,
            t.mismatches.len(),
            mark(t.representatives_form_basis)
        )?;
    }
    writeln!(s, "presentation: {}", mark(r.passed))
}

fn table_wreath(s: &mut String, w: &super::WreathResult) -> Out {
    writeln!(
        s,
        "HH* of A_{}^(⊗{}) ⋊ kS_{} from HH*(A_{}) = {}",
        w.e, w.w, w.w, w.e, w.factor_dims
    )?;
    for r in &w.results {
        writeln!(s, "{}: {} (total {})", r.convention, r.dims, r.dims.total())?;
        for t in &r.terms {
            writeln!(s, "  {}: {}", t.partition, t.dims)?;
        }
    }
    Ok(())
}

fn table_kernel(s: &mut String, k: &crate::symwreath::KernelPiReport) -> Out {
    writeln!(
        s,
        "Ker π for e={}, w={} against <{}>, {}",
        k.e,
        k.w,
        k.listed_generators.join(", "),
        k.degree_convention
    )?;
    writeln!(
        s,
        "{:>6}  {:>6}  {:>5}  {:>6}  {:>5}  kernel elements outside the ideal",
        "degree", "Λ_w,d", "image", "kernel", "ideal"
    )?;
    for d in &k.degrees {
        writeln!(
            s,
            "{:>6}  {:>6}  {:>5}  {:>6}  {:>5}  {}",
            d.degree,
            d.lambda_dim,
            d.image_dim,
            d.kernel_dim,
            d.ideal_dim,
            d.kernel_outside_ideal.join("; ")
        )?;
        for x in &d.ideal_outside_kernel {
            writeln!(s, "        ideal element outside the kernel: {x}")?;
        }
    }
    writeln!(s, "power sums in the kernel: {:?}", k.power_sums_in_kernel)?;
    writeln!(s, "discrepancy degrees: {:?}", k.discrepancy_degrees)?;
    writeln!(s, "Λ_w / Ker π: {}", k.quotient_by_kernel)?;
    writeln!(s, "Λ_w / <listed>: {}", k.quotient_by_listed)?;
    writeln!(s, "truncated invariants: {}", k.truncated_invariant_dims)
}

fn table_quotient(s: &mut String, q: &super::QuotientResult) -> Out {
    let g: Vec<String> = q
        .generators
        .iter()
        .map(|g| format!("{} = {}", g.token, g.polynomial))
        .collect();
    writeln!(
        s,
        "Λ_{} / <{}> up to degree {} ({})",
        q.w,
        g.join(", "),
        q.max_degree,
        q.degree_convention
    )?;
    writeln!(s, "dims: {}", q.dims)?;
    if let Some(t) = &q.truncated_invariant_dims {
        writeln!(s, "truncated invariants: {t}")?;
    }
    Ok(())
}

fn table_blocks(s: &mut String, b: &super::BlocksResult) -> Out {
    if let Some(n) = b.n {
        writeln!(s, "partitions of {n} by {}-block", b.e)?;
        for g in &b.groups {
            let ps: Vec<String> = g.partitions.iter().map(|p| p.to_string()).collect();
            writeln!(
                s,
                "  weight {}, core {}: {}",
                g.label.weight,
                g.label.core,
                ps.join(" ")
            )?;
        }
    }
    if let Some(p) = &b.partition {
        writeln!(
            s,
            "{}: {}-core {}, weight {}, β-numbers {:?}, runner counts {:?}",
            p.partition, b.e, p.label.core, p.label.weight, p.abacus.beta_numbers, p.abacus.runner_counts
        )?;
        if let Some(r) = &p.rouquier {
            match &r.presentation {
                Some(ab) => writeln!(
                    s,
                    "core {} is Rouquier for w={} (runner counts {:?})",
                    r.core, r.w, ab.runner_counts
                )?,
                None => writeln!(
                    s,
                    "core {} is not Rouquier for w={} (bead counts below {} searched)",
                    r.core, r.w, r.bead_bound
                )?,
            }
        }
    }
    Ok(())
}
