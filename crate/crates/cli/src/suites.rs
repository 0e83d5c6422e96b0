use std::sync::Arc;
use std::time::Instant;

use pseudofn::groupalg::{
    circulant_norm, cyclic_shift, fp_lambda_norm, involution, regular_rep, subgroup_embed, to_gelfand,
    CirculantElement, CosetDecomposition, FiniteGroup, GroupAlgebraElement, GroupHom,
};
use pseudofn::laurent::{
    folner_average, folner_defect, fpz_norm, quotient_gap, theta_l1, theta_p_bound, ThetaOperator, TruncationWindow,
};
use pseudofn::pnorm::pnorm;
use pseudofn::{CertifiedInterval, Complex64, ComplexMatrix, PExponent, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{CheckRecord, Provenance, SuiteReport};

pub const SUITES: [&str; 9] = ["gamma", "shift", "subgroup", "duality", "monotone", "folner", "theta", "quotient", "all"];

pub const GAMMA_EXPONENTS: [f64; 8] = [1.0, 1.2, 4.0 / 3.0, 1.5, 1.8, 2.0, 3.0, 6.0];

#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub seed: u64,
    /// Width and closed-form tolerance.
    pub tol: f64,
    /// Overlap tolerance for isometry checks.
    pub overlap_tol: f64,
    pub timings: bool,
}

impl Ctx {
    fn check(&self, rec: CheckRecord, body: impl FnOnce(CheckRecord) -> Result<CheckRecord>) -> CheckRecord {
        let start = Instant::now();
        let fallback = rec.clone();
        let mut out = body(rec).unwrap_or_else(|e| fallback.failed_with(e));
        if self.timings {
            out.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        out
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

fn p(v: f64) -> PExponent {
    PExponent::new(v).expect("valid exponent")
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_coeffs(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect()
}

fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n))
}

/// `2^|1/r - 1/2|`.
pub fn gamma_closed_form(r: PExponent) -> f64 {
    2f64.powf((r.reciprocal() - 0.5).abs())
}

/// Norm of the element with Gelfand coordinates `(1, i)` on `Z_2`.
pub fn gamma_interval(r: PExponent) -> Result<CertifiedInterval> {
    circulant_norm(&CirculantElement::new(vec![c(1.0, 0.0), c(0.0, 1.0)])?, r)
}

/// Interval contains the closed form within `tol` and is at most `tol` wide.
pub fn gamma_row_ok(iv: &CertifiedInterval, value: f64, tol: f64) -> bool {
    iv.contains(value, tol) && iv.width() <= tol
}

pub fn run(suite: &str, ctx: &Ctx) -> Option<SuiteReport> {
    let checks = match suite {
        "gamma" => gamma(ctx),
        "shift" => shift(ctx),
        "subgroup" => subgroup(ctx),
        "duality" => duality(ctx),
        "monotone" => monotone(ctx),
        "folner" => folner(ctx),
        "theta" => theta(ctx),
        "quotient" => quotient(ctx),
        "all" => SUITES[..SUITES.len() - 1]
            .iter()
            .flat_map(|s| run(s, ctx).expect("known suite").checks)
            .collect(),
        _ => return None,
    };
    Some(SuiteReport::new(suite, ctx.seed, checks))
}

fn gamma(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut out: Vec<CheckRecord> = GAMMA_EXPONENTS
        .iter()
        .map(|&r| {
            let r = p(r);
            let value = gamma_closed_form(r);
            let rec = CheckRecord::new(
                format!("gamma/r={:.6}", r.value()),
                json!({"r": r, "closed_form": value}),
                "interval contains 2^|1/r - 1/2| and is narrower than tol",
                Provenance::Reference,
            );
            ctx.check(rec, |rec| {
                let iv = gamma_interval(r)?;
                Ok(rec.verdict(gamma_row_ok(&iv, value, ctx.tol)).interval(&iv))
            })
        })
        .collect();
    let rec = CheckRecord::new(
        "gamma/conjugate/r=1.200000",
        json!({"r": p(1.2), "conjugate": p(1.2).conjugate()}),
        "conjugate exponents share the closed form and the intervals overlap",
        Provenance::Derived,
    );
    out.push(ctx.check(rec, |rec| {
        let (a, b) = (gamma_interval(p(1.2))?, gamma_interval(p(6.0))?);
        let same = (gamma_closed_form(p(1.2)) - gamma_closed_form(p(6.0))).abs() < 1e-15;
        Ok(rec.verdict(same && a.overlaps(&b, ctx.overlap_tol)).interval(&a).interval(&b))
    }));
    out
}

fn shift(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut rng = ctx.rng(1);
    let mut out = Vec::new();
    for i in 0..100 {
        let n = 2 + i % 7;
        let xi = random_coeffs(&mut rng, n);
        for e in [1.3, 1.7, 2.5] {
            let rec = CheckRecord::new(
                format!("shift/sample={i:03}/p={e}"),
                json!({"n": n, "p": e, "gelfand": xi.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()}),
                "shifted Gelfand coordinates give an overlapping interval",
                Provenance::Derived,
            );
            out.push(ctx.check(rec, |rec| {
                let x = CirculantElement::new(xi.clone())?;
                let a = circulant_norm(&x, p(e))?;
                let b = circulant_norm(&cyclic_shift(&x), p(e))?;
                Ok(rec.verdict(a.overlaps(&b, ctx.overlap_tol)).interval(&a).interval(&b))
            }));
        }
    }
    out
}

fn subgroup(ctx: &Ctx) -> Vec<CheckRecord> {
    let s3 = Arc::new(FiniteGroup::symmetric(3));
    let three_cycle = (0..6).find(|&g| s3.element_order(g) == 3).expect("S3 has a 3-cycle");
    let homs = [
        ("Z2<Z4", GroupHom::cyclic_inclusion(2, 4)),
        ("Z2<Z6", GroupHom::cyclic_inclusion(2, 6)),
        ("Z3<S3", GroupHom::from_generator(cyclic(3), s3, three_cycle)),
    ];
    let mut rng = ctx.rng(2);
    let mut out = Vec::new();
    for (name, iota) in homs {
        let iota = iota.expect("corpus embedding");
        for i in 0..20 {
            let coeffs = random_coeffs(&mut rng, iota.source().order());
            let inputs = json!({"embedding": name, "f": coeffs.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()});
            let f = GroupAlgebraElement::new(iota.source().clone(), coeffs).expect("matching order");
            let rec = CheckRecord::new(
                format!("subgroup/{name}/f={i:02}/blocks"),
                inputs.clone(),
                "coset reordering turns the big representation into diagonal blocks exactly",
                Provenance::Reference,
            );
            out.push(ctx.check(rec, |rec| {
                let dec = CosetDecomposition::new(&iota)?;
                let small = regular_rep(&f);
                let blocks: Vec<&ComplexMatrix> = (0..dec.index()).map(|_| &small).collect();
                let big = regular_rep(&subgroup_embed(&f, &iota)?);
                Ok(rec.verdict(dec.conjugate(&big) == ComplexMatrix::direct_sum(&blocks)))
            }));
            for e in [1.4, 2.0, 2.6] {
                let rec = CheckRecord::new(
                    format!("subgroup/{name}/f={i:02}/p={e}"),
                    inputs.clone(),
                    "norm in the subgroup equals the norm of the embedded element",
                    Provenance::Reference,
                );
                out.push(ctx.check(rec, |rec| {
                    let a = fp_lambda_norm(&f, p(e))?;
                    let b = fp_lambda_norm(&subgroup_embed(&f, &iota)?, p(e))?;
                    Ok(rec.verdict(a.overlaps(&b, ctx.overlap_tol)).interval(&a).interval(&b))
                }));
            }
        }
    }
    out
}

fn duality(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut rng = ctx.rng(3);
    let exps = [1.3, 1.6, 2.5, 4.0];
    (0..50)
        .map(|i| {
            let n = 1 + i % 6;
            let coeffs = random_coeffs(&mut rng, n);
            let e = p(exps[i % exps.len()]);
            let rec = CheckRecord::new(
                format!("duality/sample={i:02}"),
                json!({"n": n, "p": e, "f": coeffs.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()}),
                "norm at p equals the norm of the involution at the conjugate exponent",
                Provenance::Derived,
            );
            ctx.check(rec, |rec| {
                let f = GroupAlgebraElement::new(cyclic(n), coeffs)?;
                let a = fp_lambda_norm(&f, e)?;
                let b = fp_lambda_norm(&involution(&f), e.conjugate())?;
                Ok(rec.verdict(a.overlaps(&b, 1e-6)).interval(&a).interval(&b))
            })
        })
        .collect()
}

fn monotone(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut rng = ctx.rng(4);
    let grid = [1.0, 1.25, 1.5, 1.75, 2.0];
    (0..50)
        .map(|i| {
            let n = 1 + i % 6;
            let coeffs = random_coeffs(&mut rng, n);
            let rec = CheckRecord::new(
                format!("monotone/sample={i:02}"),
                json!({"n": n, "exponents": grid, "f": coeffs.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()}),
                "lower(q) <= upper(p) + 1e-8 for p <= q <= 2, and lower(2) >= sup of the Gelfand coordinates",
                Provenance::Derived,
            );
            ctx.check(rec, |mut rec| {
                let f = GroupAlgebraElement::new(cyclic(n), coeffs)?;
                let ivs = grid.iter().map(|&x| fp_lambda_norm(&f, p(x))).collect::<Result<Vec<_>>>()?;
                let ordered = ivs
                    .iter()
                    .enumerate()
                    .all(|(a, lo)| ivs[a..].iter().all(|hi| hi.lower <= lo.upper + 1e-8));
                let sup = to_gelfand(&f)?.sup_norm();
                for iv in &ivs {
                    rec = rec.interval(iv);
                }
                Ok(rec.verdict(ordered && ivs[4].lower >= sup - 1e-8))
            })
        })
        .collect()
}

fn folner(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for e in [1.5, 3.0] {
        for k in [1usize, 2, 4, 8, 16] {
            for l in [64usize, 512] {
                let provenance = if k == 1 { Provenance::Trivial } else { Provenance::Reference };
                let rec = CheckRecord::new(
                    format!("folner/p={e}/k={k:02}/L={l:04}"),
                    json!({"m": 2, "k": k, "L": l, "p": e}),
                    "upper certificate is exactly 1, lower <= 1 + 1e-9 (and >= 0.95 at k = 8, L = 512)",
                    provenance,
                );
                out.push(ctx.check(rec, |rec| {
                    let iv = fpz_norm(&folner_average(k, 2)?, p(e), TruncationWindow::new(l)?)?;
                    let mut ok = iv.upper == 1.0 && iv.lower <= 1.0 + 1e-9;
                    if k == 8 && l == 512 {
                        ok &= iv.lower >= 0.95;
                    }
                    Ok(rec.verdict(ok).interval(&iv))
                }));
            }
        }
    }
    out
}

fn theta(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for m in [2u32, 3] {
        for k in 1..=32usize {
            for s in 0..m {
                let rec = CheckRecord::new(
                    format!("theta/m={m}/k={k:02}/s={s}"),
                    json!({"m": m, "k": k, "s": s}),
                    "windowed l1 norm equals the symmetric-difference formula exactly (2/k for s != 0)",
                    Provenance::Derived,
                );
                out.push(ctx.check(rec, |rec| {
                    let op = ThetaOperator::new(k, m, s)?;
                    let windowed = op.window_l1_norm(op.covering_window());
                    let formula = theta_l1(k, m, s)?;
                    let defect = folner_defect(k, m)?;
                    let expected = if s == 0 { 0.into() } else { defect };
                    let ok = windowed == formula && formula == expected && *defect.numer() * k as i64 == 2 * *defect.denom();
                    Ok(rec
                        .details(json!({"windowed": windowed.to_string(), "formula": formula.to_string(), "sup_image": defect.to_string()}))
                        .verdict(ok))
                }));
            }
        }
    }
    for (k, m) in [(1usize, 2u32), (4, 2), (3, 3)] {
        for e in [1.5, 2.0, 3.0] {
            let rec = CheckRecord::new(
                format!("theta/bound/m={m}/k={k:02}/p={e}"),
                json!({"m": m, "k": k, "p": e}),
                "section lower bound of every theta operator stays below 2 (2/k)^(1/p) + 1e-8",
                Provenance::Derived,
            );
            out.push(ctx.check(rec, |mut rec| {
                let bound = theta_p_bound(k, m, p(e))?;
                let mut ok = true;
                for s in 0..m {
                    let op = ThetaOperator::new(k, m, s)?;
                    let iv = pnorm(&op.section(op.covering_window()), p(e))?;
                    ok &= iv.lower <= bound + 1e-8;
                    rec = rec.interval(&iv);
                }
                Ok(rec.details(json!({"bound": bound})).verdict(ok))
            }));
        }
    }
    out
}

fn quotient(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let unit = GroupAlgebraElement::delta(cyclic(2), 0);
    let rec = CheckRecord::new(
        "quotient/delta0/p=2/k=04",
        json!({"m": 2, "f": [[1.0, 0.0], [0.0, 0.0]], "p": 2.0, "k": 4}),
        "unit lifts to the Folner average: target and lift lower bound equal 1 within 1e-6",
        Provenance::Trivial,
    );
    out.push(ctx.check(rec, |rec| {
        let g = quotient_gap(&unit, PExponent::TWO, 4, None, ctx.seed)?;
        let ok = [g.target.lower, g.target.upper, g.lift_lower].iter().all(|v| (v - 1.0).abs() < 1e-6)
            && g.sandwich_holds(1e-6);
        Ok(rec.details(serde_json::to_value(g.to_record())?).verdict(ok))
    }));
    let f = GroupAlgebraElement::new(cyclic(2), vec![c(1.0, 0.0), c(0.0, 1.0)]).expect("order 2");
    for e in [1.5, 3.0] {
        let mut gaps = Vec::new();
        for k in [4usize, 16, 64] {
            let rec = CheckRecord::new(
                format!("quotient/one_i/p={e}/k={k:02}"),
                json!({"m": 2, "f": [[1.0, 0.0], [0.0, 1.0]], "p": e, "k": k}),
                "target.lower - 1e-6 <= lift_lower <= lift_upper_apriori and gap <= 2 sum|f| (2/k)^(1/p)",
                Provenance::Derived,
            );
            out.push(ctx.check(rec, |rec| {
                let g = quotient_gap(&f, p(e), k, None, ctx.seed)?;
                gaps.push(g.apriori_gap());
                let ok = g.sandwich_holds(1e-6) && g.apriori_gap() <= g.gap_bound() + 1e-12;
                Ok(rec
                    .details(json!({"record": g.to_record(), "gap": g.apriori_gap(), "gap_bound": g.gap_bound()}))
                    .interval(&g.target)
                    .interval(&g.lift)
                    .verdict(ok))
            }));
        }
        let rec = CheckRecord::new(
            format!("quotient/one_i/p={e}/nonincreasing"),
            json!({"p": e, "k": [4, 16, 64]}),
            "a priori gap is nonincreasing in k",
            Provenance::Derived,
        );
        let ok = gaps.len() == 3 && gaps.windows(2).all(|w| w[1] <= w[0]);
        out.push(rec.details(json!({"gaps": gaps})).verdict(ok));
    }
    out
}
