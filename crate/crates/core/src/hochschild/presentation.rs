//! Checks `HH*(A_e) ≅ k[z_1..z_{e-1}, x, y] / ⟨z_i z_j, z_i x, z_i y, x², x y^{e-1}, y^e⟩`
//! by explicit Yoneda products of chosen representatives.

use serde::{Deserialize, Serialize};

use crate::algebra::{loop_index, AlgebraElement};
use crate::graded::GradedDims;
use crate::linalg::{rank, Field, FieldDescriptor, Matrix};
use crate::resolution::VerifiedResolution;

use super::cochain::{Cochain, CochainComplex};
use super::monomial::presented_ring;
use super::yoneda::{LiftStrategy, YonedaContext};
use super::HochschildError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRep {
    pub name: String,
    pub degree: usize,
    pub representative: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCheck {
    /// Monomial basis of the presented ring, in the order used for the table.
    pub basis: Vec<String>,
    pub products_checked: usize,
    pub mismatches: Vec<String>,
    /// Whether the monomial representatives form a basis of `HH*` in every degree.
    pub representatives_form_basis: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub e: usize,
    pub field: FieldDescriptor,
    pub hh_dims: GradedDims,
    pub presented_dims: GradedDims,
    pub dims_match: bool,
    pub generators: Vec<GeneratorRep>,
    pub relations: Vec<RingCheck>,
    pub nonvanishing: Vec<RingCheck>,
    pub commutativity: Vec<RingCheck>,
    pub lift_independence: Vec<RingCheck>,
    pub unit_and_center: Vec<RingCheck>,
    pub multiplication_table: Option<TableCheck>,
    pub passed: bool,
}

impl PresentationReport {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.dims_match {
            out.push(format!(
                "graded dimensions {} differ from the presented ring {}",
                self.hh_dims, self.presented_dims
            ));
        }
        for c in self
            .relations
            .iter()
            .chain(&self.nonvanishing)
            .chain(&self.commutativity)
            .chain(&self.lift_independence)
            .chain(&self.unit_and_center)
        {
            if !c.passed {
                out.push(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
            }
        }
        if let Some(t) = &self.multiplication_table {
            out.extend(t.mismatches.iter().cloned());
            if !t.representatives_form_basis {
                out.push("monomial representatives do not form a basis of HH*".into());
            }
        }
        out
    }
}

/// Largest `e` for which the full multiplication table is checked by default.
pub const TABLE_LIMIT: usize = 4;

struct Ring<'a, K: Field> {
    ctx: YonedaContext<'a, K>,
    cochains: &'a CochainComplex<K>,
}

impl<K: Field> Ring<'_, K> {
    fn mul(&self, a: &Cochain<K>, b: &Cochain<K>) -> Result<Cochain<K>, HochschildError> {
        self.ctx.product(a, b)
    }

    fn witness(&self, f: &Cochain<K>) -> String {
        let coords = self
            .cochains
            .class_coordinates(f)
            .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
            .unwrap_or_else(|| "not a cocycle".into());
        let module = &self.cochains.spaces[f.degree].module;
        format!(
            "class coordinates [{coords}], representative {}",
            f.display(self.ctx.alg, module)
        )
    }

    fn vanishes(&self, name: String, f: &Cochain<K>) -> RingCheck {
        let passed = self.cochains.is_coboundary(f);
        RingCheck {
            witness: (!passed).then(|| self.witness(f)),
            name,
            passed,
        }
    }

    fn nonzero(&self, name: String, f: &Cochain<K>) -> RingCheck {
        let passed = !self.cochains.is_coboundary(f);
        RingCheck {
            witness: (!passed).then(|| "class is zero".to_string()),
            name,
            passed,
        }
    }

    fn same(&self, name: String, a: &Cochain<K>, b: &Cochain<K>) -> RingCheck {
        let passed = self.ctx.cohomologous(a, b);
        RingCheck {
            witness: (!passed).then(|| format!("left {}; right {}", self.witness(a), self.witness(b))),
            name,
            passed,
        }
    }
}

fn power_name(base: &str, s: usize) -> String {
    match s {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{s}"),
    }
}

/// Runs every check of the presentation on a verified resolution.
pub fn verify_ring_presentation_with<K: Field>(
    res: &VerifiedResolution<K>,
    with_table: bool,
) -> Result<PresentationReport, HochschildError> {
    let e = res.e;
    let alg = &res.algebra;
    let cochains = CochainComplex::new(alg, &res.complex);
    let ring = Ring {
        ctx: YonedaContext::new(alg, &res.complex, &cochains),
        cochains: &cochains,
    };
    let r0 = &res.complex.terms[0];
    let degree0 = |x: &dyn Fn(usize) -> AlgebraElement<K>| Cochain {
        degree: 0,
        components: r0.generators.iter().map(|&(v, _)| x(v)).collect(),
    };
    let one = degree0(&|v| AlgebraElement::basis(alg.vertex_idempotent(v)));
    let z: Vec<Cochain<K>> = (1..e)
        .map(|i| {
            let c = loop_index(alg, i).expect("loop c_i");
            degree0(&|v| {
                if v == i {
                    AlgebraElement::basis(c)
                } else {
                    AlgebraElement::zero()
                }
            })
        })
        .collect();
    let x = cochains
        .class_basis(1)
        .into_iter()
        .next()
        .ok_or(HochschildError::MissingClass(1))?;
    let y = cochains
        .class_basis(2)
        .into_iter()
        .next()
        .ok_or(HochschildError::MissingClass(2))?;

    let mut ypow = vec![one.clone(), y.clone()];
    for s in 2..=e {
        let next = ring.mul(&y, &ypow[s - 1])?;
        ypow.push(next);
    }
    let mut xypow = Vec::new();
    for p in ypow.iter().take(e) {
        xypow.push(ring.mul(&x, p)?);
    }

    let module = |n: usize| &cochains.spaces[n].module;
    let mut generators = vec![GeneratorRep {
        name: "1".into(),
        degree: 0,
        representative: one.display(alg, module(0)),
    }];
    for (i, zi) in z.iter().enumerate() {
        generators.push(GeneratorRep {
            name: format!("z{}", i + 1),
            degree: 0,
            representative: zi.display(alg, module(0)),
        });
    }
    generators.push(GeneratorRep {
        name: "x".into(),
        degree: 1,
        representative: x.display(alg, module(1)),
    });
    generators.push(GeneratorRep {
        name: "y".into(),
        degree: 2,
        representative: y.display(alg, module(2)),
    });

    let mut relations = Vec::new();
    for i in 0..z.len() {
        for j in i..z.len() {
            relations.push(ring.vanishes(format!("z{}*z{}", i + 1, j + 1), &ring.mul(&z[i], &z[j])?));
        }
        relations.push(ring.vanishes(format!("z{}*x", i + 1), &ring.mul(&z[i], &x)?));
        relations.push(ring.vanishes(format!("z{}*y", i + 1), &ring.mul(&z[i], &y)?));
    }
    relations.push(ring.vanishes("x^2".into(), &ring.mul(&x, &x)?));
    relations.push(ring.vanishes(format!("x*{}", power_name("y", e - 1)), &ring.mul(&x, &ypow[e - 1])?));
    relations.push(ring.vanishes(power_name("y", e), &ypow[e]));

    let mut nonvanishing = Vec::new();
    for (s, p) in ypow.iter().enumerate().take(e).skip(1) {
        nonvanishing.push(ring.nonzero(power_name("y", s), p));
    }
    for (s, p) in xypow.iter().enumerate().take(e - 1) {
        let name = if s == 0 {
            "x".to_string()
        } else {
            format!("x*{}", power_name("y", s))
        };
        nonvanishing.push(ring.nonzero(name, p));
    }

    // graded commutativity on a spread of classes
    let mut samples: Vec<(String, Cochain<K>)> = vec![("1".into(), one.clone())];
    if let Some(z1) = z.first() {
        samples.push(("z1".into(), z1.clone()));
    }
    samples.push(("x".into(), x.clone()));
    samples.push(("y".into(), y.clone()));
    if e >= 3 {
        samples.push(("y^2".into(), ypow[2].clone()));
        samples.push(("x*y".into(), xypow[1].clone()));
    }
    let mut commutativity = Vec::new();
    for a in 0..samples.len() {
        for b in a..samples.len() {
            let (na, fa) = &samples[a];
            let (nb, fb) = &samples[b];
            let ab = ring.mul(fa, fb)?;
            let ba = ring.mul(fb, fa)?;
            let sign = if (fa.degree * fb.degree) % 2 == 0 {
                K::one()
            } else {
                -K::one()
            };
            commutativity.push(ring.same(
                format!("{na}*{nb} = (-1)^({}*{}) {nb}*{na}", fa.degree, fb.degree),
                &ab,
                &ring.ctx.scale(&ba, &sign),
            ));
        }
    }

    let mut lift_independence = Vec::new();
    for (a, b) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3), (1, 3)] {
        if a >= samples.len() || b >= samples.len() {
            continue;
        }
        let (na, fa) = &samples[a];
        let (nb, fb) = &samples[b];
        let canonical = ring.mul(fa, fb)?;
        for seed in [1u64, 2] {
            let other = ring.ctx.product_with(fa, fb, LiftStrategy::Perturbed { seed })?;
            lift_independence.push(ring.same(
                format!("{na}*{nb} with perturbed lifts (seed {seed})"),
                &canonical,
                &other,
            ));
        }
    }

    let mut unit_and_center = Vec::new();
    for (n, f) in samples.iter().skip(1) {
        unit_and_center.push(ring.same(format!("1*{n} = {n}"), &ring.mul(&one, f)?, f));
        unit_and_center.push(ring.same(format!("{n}*1 = {n}"), &ring.mul(f, &one)?, f));
    }
    for (i, zi) in z.iter().enumerate() {
        for (j, zj) in z.iter().enumerate() {
            let ci = alg.element(loop_index(alg, i + 1).expect("loop"));
            let cj = alg.element(loop_index(alg, j + 1).expect("loop"));
            let prod = alg.multiply(&ci, &cj);
            let expected = degree0(&|v| {
                let ev = AlgebraElement::basis(alg.vertex_idempotent(v));
                alg.multiply(&alg.multiply(&ev, &prod), &ev)
            });
            unit_and_center.push(ring.same(
                format!("z{}*z{} matches c{}*c{} in the centre", i + 1, j + 1, i + 1, j + 1),
                &ring.mul(zi, zj)?,
                &expected,
            ));
        }
    }

    let presented = presented_ring(e);
    let presented_dims = presented.hilbert(4 * e).expect("presented ring is finite");
    let hh = cochains.hh_dims();
    let dims_match = presented_dims == hh;

    let multiplication_table = if with_table {
        // monomials 1, z_i, y^s, x y^s with representatives built from the generators
        let mut basis: Vec<(Vec<usize>, Cochain<K>)> = Vec::new();
        let nv = e + 1;
        let mono = |zi: Option<usize>, xe: usize, ye: usize| {
            let mut m = vec![0; nv];
            if let Some(i) = zi {
                m[i] = 1;
            }
            m[e - 1] = xe;
            m[e] = ye;
            m
        };
        basis.push((mono(None, 0, 0), one.clone()));
        for (i, zi) in z.iter().enumerate() {
            basis.push((mono(Some(i), 0, 0), zi.clone()));
        }
        for (s, p) in ypow.iter().enumerate().take(e).skip(1) {
            basis.push((mono(None, 0, s), p.clone()));
        }
        for (s, p) in xypow.iter().enumerate().take(e - 1) {
            basis.push((mono(None, 1, s), p.clone()));
        }
        let mut mismatches = Vec::new();
        let mut checked = 0;
        for (mu, fu) in &basis {
            for (mv, fv) in &basis {
                let prod = ring.mul(fu, fv)?;
                let m: Vec<usize> = mu.iter().zip(mv).map(|(a, b)| a + b).collect();
                let expected = if presented.is_standard(&m) {
                    basis.iter().find(|(b, _)| *b == m).map(|(_, f)| f.clone())
                } else {
                    Some(cochains.zero(prod.degree))
                };
                checked += 1;
                let ok = match &expected {
                    Some(f) => ring.ctx.cohomologous(&prod, f),
                    None => false,
                };
                if !ok {
                    mismatches.push(format!(
                        "{} * {}: expected {}, got {}",
                        presented.display(mu),
                        presented.display(mv),
                        if presented.is_standard(&m) {
                            presented.display(&m)
                        } else {
                            "0".into()
                        },
                        ring.witness(&prod)
                    ));
                }
            }
        }
        let mut forms_basis = true;
        for n in 0..=cochains.top() {
            let coords: Vec<Vec<K>> = basis
                .iter()
                .filter(|(_, f)| f.degree == n)
                .map(|(_, f)| cochains.class_coordinates(f).unwrap_or_default())
                .collect();
            let dim = hh.get(n);
            let independent = if coords.is_empty() {
                dim == 0
            } else {
                coords.len() == dim && rank(&Matrix::from_dense(coords)) == dim
            };
            forms_basis &= independent;
        }
        Some(TableCheck {
            basis: basis.iter().map(|(m, _)| presented.display(m)).collect(),
            products_checked: checked,
            passed: mismatches.is_empty() && forms_basis,
            mismatches,
            representatives_form_basis: forms_basis,
        })
    } else {
        None
    };

    let passed = dims_match
        && relations
            .iter()
            .chain(&nonvanishing)
            .chain(&commutativity)
            .chain(&lift_independence)
            .chain(&unit_and_center)
            .all(|c| c.passed)
        && multiplication_table.as_ref().is_none_or(|t| t.passed);

    Ok(PresentationReport {
        e,
        field: K::descriptor(),
        hh_dims: hh,
        presented_dims,
        dims_match,
        generators,
        relations,
        nonvanishing,
        commutativity,
        lift_independence,
        unit_and_center,
        multiplication_table,
        passed,
    })
}

/// Builds and verifies the resolution of `A_e`, then checks the presentation. The full
/// multiplication table is included for `e <= TABLE_LIMIT`.
pub fn verify_ring_presentation<K: Field>(e: usize) -> Result<PresentationReport, HochschildError> {
    let res = VerifiedResolution::<K>::compute(e)?;
    verify_ring_presentation_with(&res, e <= TABLE_LIMIT)
}
