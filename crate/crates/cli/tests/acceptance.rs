//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. All comparisons are exact.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use vfilt::limits::Limits;
use vfilt::verify::{verify, CaseId, TheoremCase, Value, VerifyReport};
use vfilt_core::asymptotics::{find_fit, slope_limit, v_series};
use vfilt_core::closure::closure_power;
use vfilt_core::filtration::svd_detect;
use vfilt_core::graph::fakhari;
use vfilt_core::lp::rational;
use vfilt_core::{cover_ideal, FamilyTag, FiltrationSpec, MonomialIdeal, RingContext};

type Check = Result<(), String>;

/// Name, time budget in seconds, and the check.
type Criterion = (&'static str, u64, fn() -> Check);

fn case(id: CaseId, params: &[(&str, i64)], range: (u64, u64)) -> TheoremCase {
    TheoremCase::new(id, params, range).expect("valid case")
}

fn run(c: &TheoremCase) -> Result<VerifyReport, String> {
    let report = verify(c, &Limits::default()).map_err(|e| format!("{c}: {e}"))?;
    if !report.pass {
        return Err(report.render());
    }
    Ok(report)
}

fn run_all(cases: &[TheoremCase]) -> Result<Vec<VerifyReport>, String> {
    cases.iter().map(run).collect()
}

fn rows_named<'a>(report: &'a VerifyReport, quantity: &str) -> Vec<&'a vfilt::verify::Row> {
    report
        .rows
        .iter()
        .filter(|r| r.quantity == quantity)
        .collect()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn complete_bipartite() -> Check {
    let cases: Vec<TheoremCase> = [(2, 2), (2, 3), (3, 3), (2, 4)]
        .iter()
        .map(|&(p1, p2)| case(CaseId::CompleteBipartite, &[("p1", p1), ("p2", p2)], (1, 5)))
        .collect();
    for r in run_all(&cases)? {
        ensure(
            rows_named(&r, "reg - v").len() == 5,
            format!("{}: missing reg - v rows", r.case),
        )?;
        ensure(
            rows_named(&r, "v").len() == 5,
            format!("{}: missing v rows", r.case),
        )?;
    }
    Ok(())
}

fn complete() -> Check {
    for m in 3..=5 {
        let r = run(&case(CaseId::Complete, &[("m", m)], (1, 6)))?;
        let gaps = rows_named(&r, "reg - v");
        let gap = |n: u64| {
            gaps.iter()
                .find(|row| row.n == n)
                .map(|row| row.computed.clone())
        };
        ensure(
            gap(1) == Some(Value::int(0)),
            format!("K({m}): reg - v at n=1 is not 0"),
        )?;
        ensure(
            gap(2) == Some(Value::int(0)),
            format!("K({m}): reg - v at n=2 is not 0"),
        )?;
        match gap(3) {
            Some(Value::Number(q)) if q > rational(0) => {}
            other => return Err(format!("K({m}): reg - v at n=3 is {other:?}")),
        }
    }
    Ok(())
}

fn cycles() -> Check {
    for u in 4..=7i64 {
        let r = run(&case(CaseId::Cycle, &[("u", u)], (1, 5)))?;
        // u edge primes plus the global value, for each n
        ensure(
            r.rows.len() == 5 * (u as usize + 1),
            format!("C({u}): {} rows", r.rows.len()),
        )?;
    }
    Ok(())
}

fn pendants() -> Check {
    for (m, s) in [(2i64, 2i64), (3, 2), (2, 3)] {
        let r = run(&case(CaseId::Pendant, &[("m", m), ("s", s)], (1, 4)))?;
        let local = r
            .rows
            .iter()
            .filter(|row| row.quantity.starts_with("v_"))
            .count();
        let pendant = r
            .rows
            .iter()
            .filter(|row| row.quantity.starts_with("v_(") && row.quantity[3..].contains('_'))
            .count();
        let edges = (m * (m - 1) / 2 + m * s) as usize;
        ensure(
            local == 4 * edges,
            format!("Kpend({m},{s}): {local} local rows"),
        )?;
        ensure(
            pendant == 4 * (m * s) as usize,
            format!("Kpend({m},{s}): {pendant} pendant rows"),
        )?;
    }
    Ok(())
}

fn three_primes() -> Check {
    let r = run(&case(CaseId::ThreePrimes, &[], (1, 6)))?;
    for n in 1..=6 {
        let local = r
            .rows
            .iter()
            .filter(|row| row.n == n && row.quantity.starts_with("v_"))
            .count();
        ensure(local == 3, format!("n={n}: {local} primes"))?;
    }
    Ok(())
}

fn non_noetherian_examples() -> Check {
    let squares = run(&case(CaseId::Squares, &[], (1, 5)))?;
    for period in 1..=4 {
        let rows = rows_named(&squares, &format!("fit period {period}"));
        ensure(
            rows.len() == 1 && rows[0].computed == Value::NoFit,
            format!("period {period} fits"),
        )?;
    }
    let sqrt2 = run(&case(CaseId::Sqrt2, &[], (1, 5)))?;
    let values: Vec<String> = rows_named(&sqrt2, "v")
        .iter()
        .map(|r| r.computed.to_string())
        .collect();
    ensure(
        values == ["1", "2", "4", "5", "7"],
        format!("sqrt2 values {values:?}"),
    )
}

fn hbip() -> Check {
    for p in 2..=3 {
        let r = run(&case(CaseId::Hbip, &[("p", p)], (1, 1)))?;
        ensure(
            rows_named(&r, "v - bight")[0].computed == Value::int(p - 2),
            "difference",
        )?;
        if p == 2 {
            ensure(
                !rows_named(&r, "multipartite partition found").is_empty(),
                "no partition search",
            )?;
        }
    }
    Ok(())
}

fn reg_gap() -> Check {
    let h = fakhari(
        &FamilyTag::CompleteBipartite(2, 3)
            .build()
            .map_err(|e| e.to_string())?,
        2,
    )
    .map_err(|e| e.to_string())?;
    ensure(
        h.vertex_count() == 10,
        format!("{} vertices", h.vertex_count()),
    )?;
    run(&case(CaseId::RegGap, &[("m", 2), ("k", 1)], (1, 1))).map(|_| ())
}

fn slope_gap() -> Check {
    for t in 1..=2 {
        let r = run(&case(CaseId::SlopeGap, &[("m", 2), ("t", t)], (1, 6)))?;
        let gap = r
            .rows
            .iter()
            .find(|row| row.quantity.starts_with("slope gap"));
        ensure(
            gap.is_some_and(|g| g.computed == Value::int(t)),
            format!("t={t}: gap row {gap:?}"),
        )?;
    }
    Ok(())
}

fn polarization() -> Check {
    run(&case(CaseId::Polarization, &[("m", 3), ("k", 2)], (1, 1)))?;
    run(&case(CaseId::Polarization, &[("u", 5), ("k", 2)], (1, 1)))?;
    Ok(())
}

fn cover(tag: &str) -> Result<MonomialIdeal, String> {
    let g = tag
        .parse::<FamilyTag>()
        .and_then(|t| t.build())
        .map_err(|e| e.to_string())?;
    cover_ideal(&g).map_err(|e| e.to_string())
}

fn veronese() -> Check {
    for (tag, expected) in [("K(3)", 2), ("C(5)", 2), ("Kb(2,3)", 1)] {
        let spec = FiltrationSpec::symbolic(cover(tag)?);
        let cert = svd_detect(&spec, 4, 4).map_err(|e| e.to_string())?;
        ensure(
            cert.map(|c| c.e) == Some(expected),
            format!("{tag}: svd {cert:?}"),
        )?;
    }
    for (tag, end) in [("K(3)", 6), ("C(5)", 6), ("Kpend(3,2)", 6)] {
        let spec = FiltrationSpec::symbolic(cover(tag)?);
        let series = v_series(&spec, 1, end, None).map_err(|e| e.to_string())?;
        let alpha2 = spec
            .evaluate(2)
            .and_then(|i| i.alpha())
            .map_err(|e| e.to_string())?;
        let expected = rational(alpha2 as i64) / rational(2);
        let slope = slope_limit(&series, 6).slope().cloned();
        ensure(
            slope.as_ref() == Some(&expected),
            format!("{tag}: slope {slope:?}, want {expected}"),
        )?;
    }
    Ok(())
}

fn closure() -> Check {
    let r = RingContext::new(["x", "y"]).map_err(|e| e.to_string())?;
    for gens in [
        vec![vec![2, 0], vec![0, 2]],
        vec![vec![3, 0], vec![1, 1], vec![0, 3]],
    ] {
        let i = MonomialIdeal::from_exponents(r.clone(), gens).map_err(|e| e.to_string())?;
        let degrees: BTreeSet<i64> = i.generators().iter().map(|g| g.degree() as i64).collect();
        let series =
            v_series(&FiltrationSpec::closure(i.clone()), 1, 6, None).map_err(|e| e.to_string())?;
        let fit = find_fit(&series.values(), 1).ok_or_else(|| format!("{i}: no linear tail"))?;
        let slope = &fit.lines[0].slope;
        ensure(
            degrees.iter().any(|&d| &rational(d) == slope),
            format!("{i}: slope {slope} not in {degrees:?}"),
        )?;
        let bar = closure_power(&i, 1);
        ensure(i.is_subset_of(&bar), format!("{i} not inside its closure"))?;
        for n in 1..=4u32 {
            ensure(
                bar.power(n).is_subset_of(&closure_power(&i, n)),
                format!("{i}: closure^{n} containment"),
            )?;
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let r = run(&case(
        CaseId::Oracle,
        &[("count", 200), ("seed", vfilt::corpus::DEFAULT_SEED as i64)],
        (1, 1),
    ))?;
    ensure(
        r.oracle.len() >= 200,
        format!("only {} primes checked", r.oracle.len()),
    )
}

fn identities() -> Check {
    run(&case(
        CaseId::Identities,
        &[("count", 200), ("seed", vfilt::corpus::DEFAULT_SEED as i64)],
        (1, 1),
    ))
    .map(|_| ())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("complete bipartite cover ideals", 30, complete_bipartite),
        ("complete graph cover ideals", 60, complete),
        ("cycle cover ideals, every local value", 60, cycles),
        ("pendant graphs, both prime types", 120, pendants),
        ("three-prime example", 10, three_primes),
        (
            "non-Noetherian examples and no fit",
            5,
            non_noetherian_examples,
        ),
        ("bipartite unmixed counterexamples", 60, hbip),
        ("regularity gap of the doubled graph", 120, reg_gap),
        ("local slope gap equals t", 120, slope_gap),
        ("polarization of symbolic powers", 60, polarization),
        ("standard Veronese degree and slopes", 120, veronese),
        ("integral closure filtration", 60, closure),
        (
            "quotient method against the oracle",
            300,
            oracle_equivalence,
        ),
        ("algebra identities on the corpus", 120, identities),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = check();
        let elapsed = started.elapsed();
        let result = result.and_then(|()| {
            ensure(
                elapsed <= Duration::from_secs(*budget),
                format!("took {:.1} s, budget {budget} s", elapsed.as_secs_f64()),
            )
        });
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({:.2} s)", k + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!(
                    "FAIL {:>2} {name} ({:.2} s)\n{msg}",
                    k + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
