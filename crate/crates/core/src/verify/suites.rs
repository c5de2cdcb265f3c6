use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Pow;
use rand::seq::SliceRandom;
use rand::Rng;

use super::corpus::{generate_corpus, random_polynomial, stream, GeneratorSpec};
use super::{load_problem_files, run_instances, Ctx, Source, Suite, SuiteConfig};
use crate::error::{Error, Result};
use crate::groebner::{macaulay_member, Ideal};
use crate::monomial::{
    check_brianconskoda, check_degree_bound, check_local_nullstellensatz, check_skoda,
    closure_power_witness, distinguished_data, newton_polyhedron,
    projective_radical_power_exponent, symbolic_power_member, symbolic_power_member_by_derivatives,
    MonomialIdeal,
};
use crate::nullstellensatz::{
    gb_trace_certificate, homogenization_bridge, minimal_certificate_degree, CertificateProblem,
};
use crate::parse::report::{tags, CheckRecord, Expectation, SuiteReport};
use crate::parse::{parse_polynomial, ProblemInstance};
use crate::poly::{Monomial, PolyRing, Polynomial};

pub(super) fn run(cfg: &SuiteConfig, ctx: Ctx, report: &mut SuiteReport) -> Result<()> {
    match cfg.suite {
        Suite::Example23 => example_2_3(ctx, report),
        Suite::SkodaRandom => {
            let corpus = monomial_source(cfg)?;
            run_instances(report, &corpus, ctx, |inst, ctx| {
                let j = MonomialIdeal::from_polynomials(&inst.generators)?;
                let p = min_mn(&j);
                (1..=3)
                    .map(|k| ctx.timed(|| check_skoda(&j, p + k - 1, k)))
                    .collect()
            })
        }
        Suite::LocalNullstellensatz => {
            let corpus = monomial_source(cfg)?;
            run_instances(report, &corpus, ctx, |inst, ctx| {
                let j = MonomialIdeal::from_polynomials(&inst.generators)?;
                ctx.timed(|| check_local_nullstellensatz(&j, min_mn(&j), &[]))
            })
        }
        Suite::Lemma21 => {
            let corpus = monomial_source(cfg)?;
            run_instances(report, &corpus, ctx, |inst, ctx| {
                let j = MonomialIdeal::from_polynomials(&inst.generators)?;
                let mut recs =
                    ctx.timed(|| check_local_nullstellensatz(&j, min_mn(&j), &[1, 2, 3, 4]))?;
                recs.remove(0);
                Ok(recs)
            })
        }
        Suite::BrianconSkoda => {
            let corpus = monomial_source(cfg)?;
            run_instances(report, &corpus, ctx, |inst, ctx| {
                let j = MonomialIdeal::from_polynomials(&inst.generators)?;
                Ok(vec![ctx.timed(|| check_brianconskoda(&j))?])
            })
        }
        Suite::DegreeBound => {
            let mut corpus = Vec::new();
            if cfg.source == Source::Seeded {
                corpus.extend(divisor_anchors()?);
            }
            corpus.extend(projective_source(cfg)?);
            run_instances(report, &corpus, ctx, degree_bound_instance)
        }
        Suite::CertAudit => {
            let corpus = match &cfg.source {
                Source::Files(p) => load_problem_files(p)?,
                Source::Seeded => cert_audit_corpus(),
                Source::Generated(_) => {
                    return Err(Error::InvalidInput(
                        "the certificate audit uses a fixed corpus or problem files".into(),
                    ))
                }
            };
            run_instances(report, &corpus, ctx, cert_audit_instance)
        }
        Suite::OracleClosure => {
            let corpus = monomial_source(cfg)?;
            run_instances(report, &corpus, ctx, closure_oracle_instance)
        }
        Suite::OracleMembership => membership_oracle(cfg, ctx, report),
        Suite::OracleSymbolic => symbolic_oracle(cfg, ctx, report),
        Suite::CorAProbe => cor_a_probe(cfg, report),
    }
}

fn min_mn(j: &MonomialIdeal) -> u32 {
    j.generators().len().min(j.arity()) as u32
}

fn monomial_source(cfg: &SuiteConfig) -> Result<Vec<ProblemInstance>> {
    match &cfg.source {
        Source::Seeded => generate_corpus(&GeneratorSpec::monomial(
            cfg.suite.default_count(),
            cfg.seed,
        )),
        Source::Generated(spec) => generate_corpus(spec),
        Source::Files(p) => load_problem_files(p),
    }
}

fn projective_source(cfg: &SuiteConfig) -> Result<Vec<ProblemInstance>> {
    match &cfg.source {
        Source::Seeded => generate_corpus(&GeneratorSpec::projective(
            cfg.suite.default_count(),
            cfg.seed,
        )),
        Source::Generated(spec) => generate_corpus(&GeneratorSpec {
            homogeneous: spec.homogeneous.or(Some(4)),
            ..spec.clone()
        }),
        Source::Files(p) => load_problem_files(p),
    }
}

fn show(ring_names: &[String], m: &Monomial) -> String {
    m.display_with(ring_names).to_string()
}

/// `(x^a, y^a)` for `a = 2, ..., 5`.
pub fn example_instances() -> Vec<ProblemInstance> {
    (2..=5)
        .map(|a| {
            let ring = PolyRing::new(&["x", "y"]).expect("valid names");
            let j = MonomialIdeal::new(
                &ring,
                vec![Monomial::new(vec![a, 0]), Monomial::new(vec![0, a])],
            )
            .expect("non-empty");
            let mut meta = BTreeMap::new();
            meta.insert("name".to_string(), format!("a={a}"));
            meta.insert("a".to_string(), a.to_string());
            ProblemInstance::new(ring, j.to_polynomials(), meta).expect("valid instance")
        })
        .collect()
}

/// Membership of every generator of `(x, y)^e` in `J`, decided by
/// Gröbner reduction; returns the first non-member.
fn first_outside(ideal: &Ideal, e: u32) -> Result<Option<Monomial>> {
    let ring = ideal.ring();
    let maximal = MonomialIdeal::new(
        ring,
        (0..ring.arity())
            .map(|i| Monomial::variable(ring.arity(), i))
            .collect(),
    )?;
    for g in maximal.power(e).generators() {
        if !ideal.contains(&Polynomial::monomial(ring, g.clone()))? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

fn example_2_3(ctx: Ctx, report: &mut SuiteReport) -> Result<()> {
    let corpus = example_instances();
    for inst in &corpus {
        let a: u32 = inst.metadata["a"].parse().expect("numeric");
        let j = MonomialIdeal::from_polynomials(&inst.generators)?;
        let data = distinguished_data(&j)?;
        let rows: Vec<String> = data
            .iter()
            .map(|d| {
                format!(
                    "support={:?} r={} dim={}",
                    d.support, d.coefficient, d.dimension
                )
            })
            .collect();
        report
            .statistics
            .insert(format!("distinguished.a={a}"), rows.join("; "));
    }
    run_instances(report, &corpus, ctx, |inst, ctx| {
        let a: u32 = inst.metadata["a"].parse().expect("numeric");
        let names = inst.ring.names();
        let ideal = Ideal::new(&inst.ring, inst.generators.clone())?
            .with_pair_budget(ctx.budgets.max_pairs);
        let expected = Monomial::new(vec![a - 1, 1]);
        let non_inclusion = ctx.timed(|| {
            let detail = format!("(x, y)^{a} in (x^{a}, y^{a})");
            Ok(match first_outside(&ideal, a)? {
                Some(w) if w == expected => {
                    CheckRecord::fail("power_of_maximal_ideal", tags::EXAMPLE_2_3, show(names, &w))
                        .expecting(Expectation::ExpectedFail)
                }
                Some(w) => {
                    CheckRecord::fail("power_of_maximal_ideal", tags::EXAMPLE_2_3, show(names, &w))
                        .with_detail(format!("{detail}: unexpected witness"))
                }
                None => CheckRecord::fail(
                    "power_of_maximal_ideal",
                    tags::EXAMPLE_2_3,
                    "inclusion holds",
                ),
            }
            .with_detail(detail))
        })?;
        let inclusion = ctx.timed(|| {
            let detail = format!("(x, y)^{} in (x^{a}, y^{a})", 2 * a);
            Ok(match first_outside(&ideal, 2 * a)? {
                None => CheckRecord::pass("power_of_maximal_ideal", tags::EXAMPLE_2_3),
                Some(w) => {
                    CheckRecord::fail("power_of_maximal_ideal", tags::EXAMPLE_2_3, show(names, &w))
                }
            }
            .with_detail(detail))
        })?;
        Ok(vec![non_inclusion, inclusion])
    })
}

/// `(T1)` in `P^2` and `P^3` at `d = 1`, where the degree bound is an
/// equality.
fn divisor_anchors() -> Result<Vec<ProblemInstance>> {
    [3usize, 4]
        .into_iter()
        .map(|n| {
            let names: Vec<String> = (0..n).map(|i| format!("T{i}")).collect();
            let ring = PolyRing::new(&names)?;
            let mut meta = BTreeMap::new();
            meta.insert("name".to_string(), format!("anchor-T1-P{}", n - 1));
            meta.insert("degree".to_string(), "1".to_string());
            meta.insert("equality".to_string(), "true".to_string());
            ProblemInstance::new(ring.clone(), vec![Polynomial::variable(&ring, 1)?], meta)
        })
        .collect()
}

fn degree_bound_instance(inst: &ProblemInstance, ctx: Ctx) -> Result<Vec<CheckRecord>> {
    let j = MonomialIdeal::from_polynomials(&inst.generators)?;
    let d = match inst.metadata.get("degree") {
        Some(s) => s
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad degree `{s}`")))?,
        None => j.max_degree().max(1),
    };
    let start = ctx.start();
    let rep = check_degree_bound(&j, d)?;
    let record = ctx.stamp(rep.record.clone(), start);
    let mut out = vec![record];
    if inst.metadata.get("equality").map(String::as_str) == Some("true") {
        let detail = format!("lhs={} rhs={}", rep.lhs, rep.rhs);
        out.push(if rep.is_equality() {
            CheckRecord::pass("equality_anchor", tags::PROP_3_1).with_detail(detail)
        } else {
            CheckRecord::fail("equality_anchor", tags::PROP_3_1, detail)
        });
    }
    Ok(out)
}

fn problem(vars: &[&str], gens: &[&str], name: &str) -> ProblemInstance {
    let ring = PolyRing::new(vars).expect("valid names");
    let gens = gens
        .iter()
        .map(|s| parse_polynomial(s, &ring).expect("valid polynomial"))
        .collect();
    let mut meta = BTreeMap::new();
    meta.insert("name".to_string(), name.to_string());
    ProblemInstance::new(ring, gens, meta).expect("valid instance")
}

/// Zero-free systems with `n <= 2`. Those of equal degree `d` in
/// `{1, 3}` carry the asserted bound; the rest document exceptions.
pub fn cert_audit_corpus() -> Vec<ProblemInstance> {
    let x = &["x"][..];
    let xy = &["x", "y"][..];
    vec![
        problem(x, &["x", "1 - x"], "c01-linear-pair"),
        problem(x, &["x", "x + 1"], "c02-linear-shift"),
        problem(x, &["2*x - 1", "3*x"], "c03-linear-scaled"),
        problem(xy, &["x", "y", "x + y - 1"], "c04-three-lines"),
        problem(xy, &["x", "y - 1", "x - y"], "c05-triangle"),
        problem(xy, &["x + y", "x + y - 1"], "c06-parallel-lines"),
        problem(x, &["x^3 - x", "x^3 - x - 1"], "c07-cubic-difference"),
        problem(x, &["x^3", "x^3 + 1"], "c08-cubic-shift"),
        problem(xy, &["x^3", "y^3", "x^3 + y^3 - 1"], "c09-cubic-triple"),
        problem(xy, &["x^3", "x*y^2 - 1"], "c10-nested-cubic"),
        problem(xy, &["x^2*y - 1", "y^3"], "c11-nested-cubic-swapped"),
        problem(xy, &["x^3 + y^3", "x^3 + y^3 - 1"], "c12-cubic-levels"),
        problem(x, &["x^2", "(1 - x)^2"], "c13-quadratic-exception"),
        problem(x, &["x^3", "(1 - x)^3"], "c14-univariate-sharpness"),
        problem(xy, &["x*y - 1", "x"], "c15-mixed-degrees"),
    ]
}

fn cert_audit_instance(inst: &ProblemInstance, ctx: Ctx) -> Result<Vec<CheckRecord>> {
    let p = CertificateProblem::new(inst.clone()).with_pair_budget(ctx.budgets.max_pairs);
    let n = p.arity();
    let d = p.degree;
    let start = ctx.start();
    let report = match minimal_certificate_degree(&p, p.default_cap(), ctx.budgets.max_columns) {
        Err(Error::NotZeroFree) => {
            return Ok(vec![CheckRecord::skipped(
                "minimal_certificate_degree",
                tags::KOLLAR_K1,
                "common zero exists",
            )])
        }
        other => other?,
    };
    let solvable: Vec<String> = report
        .solvable
        .iter()
        .map(|(deg, ok)| format!("{deg}:{}", if *ok { "yes" } else { "no" }))
        .collect();
    let Some(found) = report.minimal_degree else {
        let reason = match report.aborted_at {
            Some(at) => format!("aborted at D={at}"),
            None => format!("not found <= {}", report.cap),
        };
        return Err(Error::Resource(reason));
    };
    let cert = report.certificate.clone().expect("found certificate");
    let mut out = Vec::new();

    let detail = format!(
        "n={n} d={d} D={found} bound={} solvable=[{}]",
        report.bound_kollar,
        solvable.join(",")
    );
    let check = "minimal_certificate_degree";
    let rec = if !p.equal_degrees() {
        CheckRecord::skipped(
            check,
            tags::KOLLAR_K1,
            format!("{detail}: mixed degrees, not asserted"),
        )
    } else if report.within_kollar == Some(true) {
        CheckRecord::pass(check, tags::KOLLAR_K1).with_detail(detail)
    } else {
        let witness = format!("{found} > {}", report.bound_kollar);
        let rec = CheckRecord::fail(check, tags::KOLLAR_K1, witness);
        if d == 2 {
            rec.expecting(Expectation::ExpectedExceed)
                .with_detail(format!("{detail}: bound excludes d = 2"))
        } else if n == 1 {
            rec.expecting(Expectation::ExpectedExceed)
                .with_detail(format!(
                    "{detail}: one variable, sharp bound 2d - 1 = {}",
                    2 * d - 1
                ))
        } else {
            rec.with_detail(detail)
        }
    };
    out.push(ctx.stamp(rec, start));

    if let Some(sparse) = &report.bound_sparse {
        let detail = format!("D={found} bound={sparse}");
        out.push(if report.within_sparse == Some(true) {
            CheckRecord::pass("sparse_bound", tags::SPARSE_BOUND).with_detail(detail)
        } else {
            CheckRecord::fail(
                "sparse_bound",
                tags::SPARSE_BOUND,
                format!("{found} > {sparse}"),
            )
        });
    }

    // independent re-expansion of the certificate
    let mut sum = Polynomial::zero(&inst.ring);
    for (g, f) in cert.cofactors.iter().zip(&inst.generators) {
        sum = sum.checked_add(&g.checked_mul(f)?)?;
    }
    out.push(if sum.is_one() {
        CheckRecord::pass("certificate_expansion", tags::KOLLAR_K1)
            .with_detail(format!("cofactors=[{}]", cert.to_strings().join(", ")))
    } else {
        CheckRecord::fail("certificate_expansion", tags::KOLLAR_K1, sum.to_string())
    });

    let trace = gb_trace_certificate(&p)?;
    let detail = format!("trace degree {} vs minimal {found}", trace.achieved_degree);
    out.push(if trace.achieved_degree >= found {
        CheckRecord::pass("trace_degree_agreement", tags::ORACLE).with_detail(detail)
    } else {
        CheckRecord::fail("trace_degree_agreement", tags::ORACLE, detail)
    });

    let bridge = homogenization_bridge(&p, found, ctx.budgets.max_columns)?;
    out.push(match bridge {
        Some(c) => CheckRecord::pass("homogenization_bridge", tags::KOLLAR_K1).with_detail(
            format!("T0^{found} in (F_j), affine degree {}", c.achieved_degree),
        ),
        None => CheckRecord::fail(
            "homogenization_bridge",
            tags::KOLLAR_K1,
            format!("T0^{found} not in (F_j)"),
        ),
    });
    Ok(out)
}

/// Largest exponent examined by the closure oracle.
const ORACLE_BOX: u32 = 8;

fn closure_oracle_instance(inst: &ProblemInstance, ctx: Ctx) -> Result<Vec<CheckRecord>> {
    let j = MonomialIdeal::from_polynomials(&inst.generators)?;
    let n = j.arity();
    let np = newton_polyhedron(&j)?;
    let mut out = Vec::new();
    for level in 1..=2u32 {
        let start = ctx.start();
        let mut u = vec![0u32; n];
        let mut checked = 0usize;
        let mut disagreement = None;
        'points: loop {
            let m = Monomial::new(u.clone());
            let facet = np.contains_scaled(m.exponents(), level as u64);
            let power = closure_power_witness(&m, &j, level)?.is_some();
            checked += 1;
            if facet != power {
                disagreement = Some(format!(
                    "{} facet={facet} power={power}",
                    show(j.ring().names(), &m)
                ));
                break;
            }
            for i in (0..n).rev() {
                if u[i] < ORACLE_BOX {
                    u[i] += 1;
                    continue 'points;
                }
                u[i] = 0;
            }
            break;
        }
        let detail = format!("level={level} points={checked}");
        let rec = match disagreement {
            None => CheckRecord::pass("closure_facet_vs_power", tags::ORACLE).with_detail(detail),
            Some(w) => {
                CheckRecord::fail("closure_facet_vs_power", tags::ORACLE, w).with_detail(detail)
            }
        };
        out.push(ctx.stamp(rec, start));
    }
    Ok(out)
}

fn named(
    ring: &std::sync::Arc<PolyRing>,
    gens: Vec<Polynomial>,
    meta: &[(&str, String)],
) -> Result<ProblemInstance> {
    let meta = meta
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect();
    ProblemInstance::new(ring.clone(), gens, meta)
}

fn membership_oracle(cfg: &SuiteConfig, ctx: Ctx, report: &mut SuiteReport) -> Result<()> {
    let mut rng = stream(cfg.seed, 1);
    let ring = PolyRing::new(&["x", "y"])?;
    let mut corpus = Vec::new();
    for index in 0..cfg.suite.default_count() {
        let m = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..m)
            .map(|_| random_polynomial(&mut rng, &ring, 2, 3, 3))
            .collect();
        let target = if rng.gen_bool(0.5) {
            let mut t = Polynomial::zero(&ring);
            for g in &gens {
                let h = random_polynomial(&mut rng, &ring, 1, 2, 2);
                t = t.checked_add(&h.checked_mul(g)?)?;
            }
            t
        } else {
            random_polynomial(&mut rng, &ring, 3, 3, 3)
        };
        corpus.push(named(
            &ring,
            gens,
            &[
                ("name", format!("m-{index:03}")),
                ("target", target.to_string()),
            ],
        )?);
    }
    run_instances(report, &corpus, ctx, |inst, ctx| {
        let start = ctx.start();
        let target = parse_polynomial(&inst.metadata["target"], &inst.ring)?;
        let ideal = Ideal::new(&inst.ring, inst.generators.clone())?
            .with_pair_budget(ctx.budgets.max_pairs);
        let (member, cofactors) = ideal.member(&target)?;
        let top = inst
            .generators
            .iter()
            .map(Polynomial::total_degree)
            .max()
            .unwrap_or(0);
        // the Gröbner cofactors show that their own degree suffices
        let cap = match &cofactors {
            Some(cof) => cof
                .iter()
                .zip(&inst.generators)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, g)| c.total_degree() + g.total_degree())
                .max()
                .unwrap_or(0)
                .max(target.total_degree()),
            None => target.total_degree().max(top) + 1,
        };
        let linear = macaulay_member(&target, &ideal, cap)?;
        let detail = format!("target={target} cap={cap} member={member}");
        let rec = if member == linear {
            CheckRecord::pass("groebner_vs_macaulay", tags::ORACLE).with_detail(detail)
        } else {
            CheckRecord::fail(
                "groebner_vs_macaulay",
                tags::ORACLE,
                format!("macaulay={linear}"),
            )
            .with_detail(detail)
        };
        Ok(vec![ctx.stamp(rec, start)])
    })
}

fn symbolic_oracle(cfg: &SuiteConfig, ctx: Ctx, report: &mut SuiteReport) -> Result<()> {
    let mut rng = stream(cfg.seed, 2);
    let mut corpus = Vec::new();
    for index in 0..cfg.suite.default_count() {
        let n = rng.gen_range(2..=3usize);
        let ring = PolyRing::with_arity(n)?;
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(&mut rng);
        let support: Vec<usize> = {
            let mut s = vars[..rng.gen_range(1..=n)].to_vec();
            s.sort_unstable();
            s
        };
        let r = rng.gen_range(1..=3u32);
        let mut p = random_polynomial(&mut rng, &ring, 3, 4, 3);
        if rng.gen_bool(0.5) {
            // push every term to order >= r along the support
            let mut e = vec![0; n];
            for _ in 0..r {
                e[*support.choose(&mut rng).expect("non-empty")] += 1;
            }
            p = p.mul_term(&Monomial::new(e), &crate::poly::rat(1, 1));
        }
        corpus.push(named(
            &ring,
            vec![p],
            &[
                ("name", format!("s-{index:03}")),
                ("support", format!("{support:?}")),
                ("r", r.to_string()),
            ],
        )?);
    }
    run_instances(report, &corpus, ctx, |inst, ctx| {
        let start = ctx.start();
        let p = &inst.generators[0];
        let support: Vec<usize> = inst.metadata["support"]
            .trim_matches(['[', ']'])
            .split(", ")
            .map(|s| s.parse().expect("index"))
            .collect();
        let r: u32 = inst.metadata["r"].parse().expect("numeric");
        let by_order = symbolic_power_member(p, &support, r);
        let by_derivatives = symbolic_power_member_by_derivatives(p, &support, r)?;
        let detail = format!("p={p} support={support:?} r={r} member={by_order}");
        let rec = if by_order == by_derivatives {
            CheckRecord::pass("symbolic_order_vs_derivatives", tags::ORACLE).with_detail(detail)
        } else {
            CheckRecord::fail(
                "symbolic_order_vs_derivatives",
                tags::ORACLE,
                format!("derivatives={by_derivatives}"),
            )
            .with_detail(detail)
        };
        Ok(vec![ctx.stamp(rec, start)])
    })
}

/// Compares the smallest `e` with `(sqrt J)^e ⊆ J` against `d^n` and
/// `n d^n`. Only statistics are emitted.
fn cor_a_probe(cfg: &SuiteConfig, report: &mut SuiteReport) -> Result<()> {
    use rayon::prelude::*;
    let corpus = projective_source(cfg)?;
    let results: Vec<Result<(String, u64, BigInt, usize)>> = corpus
        .par_iter()
        .enumerate()
        .map(|(index, inst)| {
            let j = MonomialIdeal::from_polynomials(&inst.generators)?;
            let d = match inst.metadata.get("degree") {
                Some(s) => s
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad degree `{s}`")))?,
                None => j.max_degree().max(1),
            };
            let n = j.arity() - 1;
            let e = projective_radical_power_exponent(&j, d)?;
            let name = inst
                .name()
                .map_or_else(|| format!("instance-{index:03}"), str::to_string);
            Ok((name, e, Pow::pow(&BigInt::from(d), n), n))
        })
        .collect();
    let mut total = 0usize;
    let mut deg_ok = 0usize;
    let mut n_deg_ok = 0usize;
    let mut trivial = 0usize;
    let mut max_e = 0u64;
    let mut misses = Vec::new();
    for res in results {
        let (name, e, deg, n) = match res {
            Err(Error::Resource(_)) => {
                report.summary.resource_errors += 1;
                continue;
            }
            other => other?,
        };
        total += 1;
        max_e = max_e.max(e);
        let eb = BigInt::from(e);
        if e <= 1 {
            trivial += 1;
        }
        if eb <= deg {
            deg_ok += 1;
        } else {
            misses.push(name);
        }
        if eb <= deg * BigInt::from(n) {
            n_deg_ok += 1;
        }
    }
    let stats = &mut report.statistics;
    stats.insert("cor-a.instances".into(), total.to_string());
    stats.insert("cor-a.deg_suffices".into(), deg_ok.to_string());
    stats.insert("cor-a.n_deg_suffices".into(), n_deg_ok.to_string());
    stats.insert("cor-a.radical_ideals".into(), trivial.to_string());
    stats.insert("cor-a.max_exponent".into(), max_e.to_string());
    stats.insert("cor-a.deg_insufficient".into(), misses.join(","));
    Ok(())
}
