//! One line per acceptance criterion; exits non-zero if any fails.

use std::time::{Duration, Instant};

use qcycle::parallel::enumerate_threaded;
use qcycle::sample::{check_samples, SampleMode};
use qcycle_core::analysis::{retract, retract_matches_lambda_rho};
use qcycle_core::enumeration::{enumerate_qcs, enumerate_solutions, frozen, oracle, Caps, EnumFilter};
use qcycle_core::extensions::{
    build_extension, enumerate_congruences, factor_covering, is_simple, CongruencePartition, CoveringMap,
};
use qcycle_core::fixtures::fixture_catalog;
use qcycle_core::iso::are_isomorphic;
use qcycle_core::QCycleSet;

type Outcome = Result<String, String>;

fn all(n: usize, f: EnumFilter) -> Vec<QCycleSet> {
    enumerate_qcs(n, f).expect("within caps").structures
}

fn regular() -> EnumFilter {
    EnumFilter {
        regular: true,
        ..EnumFilter::default()
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixtures_regression() -> Outcome {
    let mut claims = 0;
    for f in fixture_catalog() {
        for o in f.check() {
            claims += 1;
            ensure(o.passed(), || format!("{}: {o}", f.name))?;
        }
    }
    Ok(format!("{claims} claims"))
}

fn regular_is_nondegenerate() -> Outcome {
    let mut total = 0;
    for n in 1..=4 {
        let f = EnumFilter {
            up_to_iso: true,
            ..regular()
        };
        for x in all(n, f) {
            total += 1;
            ensure(x.is_nondegenerate(), || format!("counterexample {x:?}"))?;
        }
    }
    Ok(format!("{total} classes, all non-degenerate"))
}

fn bijective_solutions_right_nondegenerate() -> Outcome {
    let mut total = 0;
    for n in 1..=3 {
        for s in enumerate_solutions(n, true).map_err(|e| e.to_string())?.solutions {
            total += 1;
            ensure(s.is_right_nondegenerate(), || format!("counterexample {s:?}"))?;
        }
    }
    Ok(format!("{total} solutions"))
}

fn consequence_identity() -> Outcome {
    let holds = |x: &QCycleSet| {
        (0..x.n()).all(|a| {
            (0..x.n()).all(|b| {
                let c = x.colon(x.dot_inv(a, b), a);
                x.colon(c, c) == x.colon(b, x.colon(a, a))
            })
        })
    };
    let mut total = 0;
    for n in 1..=3 {
        for x in all(n, EnumFilter::default()) {
            total += 1;
            ensure(holds(&x), || format!("fails on {x:?}"))?;
        }
    }
    for f in fixture_catalog() {
        if let Some(x) = f.qcycle_set() {
            total += 1;
            ensure(holds(&x), || format!("fails on fixture {}", f.name))?;
        }
    }
    Ok(format!("{total} structures"))
}

fn retract_congruence() -> Outcome {
    let mut total = 0;
    for n in 1..=4 {
        for x in all(n, regular()) {
            total += 1;
            let r = retract(&x).map_err(|e| format!("{x:?}: {e}"))?;
            ensure(CongruencePartition::from_labels(&r.class_of).is_compatible(&x), || {
                format!("not a congruence on {x:?}")
            })?;
            ensure(x.is_nondegenerate() == r.quotient.is_nondegenerate(), || {
                format!("non-degeneracy differs on {x:?}")
            })?;
        }
    }
    let mut solutions = 0;
    for n in 1..=3 {
        for x in all(n, EnumFilter::default()) {
            if x.is_nondegenerate() {
                solutions += 1;
                let ok = retract_matches_lambda_rho(&x.to_solution()).map_err(|e| e.to_string())?;
                ensure(ok, || format!("solution retract differs on {x:?}"))?;
            }
        }
    }
    Ok(format!("{total} regular structures, {solutions} solutions"))
}

fn extension_equivalence() -> Outcome {
    let s = check_samples(2024, 600, SampleMode::Mixed, 3, 3);
    ensure(s.samples >= 200, || String::from("too few samples"))?;
    ensure(s.ok(), || format!("{s:?}"))?;
    ensure(s.valid_pairs > 0 && s.valid_pairs < s.samples, || format!("degenerate sample mix {s:?}"))?;
    Ok(format!(
        "{} samples, {} valid pairs, {} regular extensions",
        s.samples, s.valid_pairs, s.regular_extensions
    ))
}

fn factorization() -> Outcome {
    let mut sources = 0;
    let mut covers = 0;
    for x in all(4, EnumFilter::up_to_iso()) {
        if is_simple(&x).map_err(|e| e.to_string())? {
            continue;
        }
        sources += 1;
        for c in enumerate_congruences(&x).map_err(|e| e.to_string())? {
            if !c.is_uniform() || c.is_discrete() || c.is_total() {
                continue;
            }
            covers += 1;
            let cover = CoveringMap::from_congruence(&x, &c).ok_or("quotient failed")?;
            let fac = factor_covering(&cover).map_err(|e| e.to_string())?;
            let e = build_extension(&fac.pair).map_err(|e| e.to_string())?;
            ensure(are_isomorphic(&x, &e).is_some(), || format!("not isomorphic: {x:?}"))?;
            ensure(x.relabel(&fac.phi) == e, || format!("phi is not an isomorphism: {x:?}"))?;
        }
    }
    ensure(covers > 0, || String::from("no coverings found"))?;
    Ok(format!("{sources} non-simple classes, {covers} coverings"))
}

fn oracle_counts() -> Outcome {
    for row in frozen::QCS_COUNTS {
        let c = oracle::naive_count(row.n, &row.filter(false)).map_err(|e| e.to_string())?;
        let labeled = enumerate_qcs(row.n, row.filter(false)).map_err(|e| e.to_string())?.count();
        let iso = enumerate_qcs(row.n, row.filter(true)).map_err(|e| e.to_string())?.count();
        ensure(
            (c.labeled, c.up_to_iso) == (row.labeled, row.up_to_iso) && (labeled, iso) == (row.labeled, row.up_to_iso),
            || format!("{row:?}: oracle {c:?}, search ({labeled}, {iso})"),
        )?;
    }
    for row in frozen::SOLUTION_COUNTS {
        let direct = oracle::naive_solutions(row.n, row.require_bijective).map_err(|e| e.to_string())?;
        let via = enumerate_solutions(row.n, row.require_bijective).map_err(|e| e.to_string())?;
        ensure(direct.len() == row.count && via.solutions == direct, || format!("{row:?}"))?;
    }
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qcycle::run(["qcycle", "enumerate", "--oracle", "--frozen"], &mut out, &mut err);
    ensure(code == 0, || {
        format!(
            "--oracle --frozen exited {code}: {}{}",
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        )
    })?;
    Ok(format!(
        "{} count rows, {} solution rows",
        frozen::QCS_COUNTS.len(),
        frozen::SOLUTION_COUNTS.len()
    ))
}

fn roundtrip_and_determinism() -> Outcome {
    let mut total = 0;
    for n in 1..=4 {
        for x in all(n, EnumFilter::default()) {
            total += 1;
            let s = x.to_solution();
            let back = s.to_qcycle_set().map_err(|e| format!("{x:?}: {e}"))?;
            ensure(back == x && back.to_solution() == s, || format!("roundtrip fails on {x:?}"))?;
        }
    }
    let f = EnumFilter::up_to_iso();
    let one = enumerate_threaded(4, f, &Caps::default(), 1).map_err(|e| e.to_string())?;
    for k in [2, 8] {
        ensure(enumerate_threaded(4, f, &Caps::default(), k).map_err(|e| e.to_string())? == one, || {
            format!("{k} threads differ")
        })?;
    }
    let cli = |k: &str| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        qcycle::run(["qcycle", "enumerate", "--n", "4", "--threads", k], &mut out, &mut err);
        out
    };
    let base = cli("1");
    for k in ["2", "8"] {
        ensure(cli(k) == base, || format!("CLI output differs with {k} threads"))?;
    }
    Ok(format!("{total} roundtrips, {} bytes identical at 1/2/8 threads", base.len()))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("fixture regression", Duration::from_secs(10), fixtures_regression),
        ("regular implies non-degenerate (n <= 4)", Duration::from_secs(300), regular_is_nondegenerate),
        (
            "bijective solutions are right non-degenerate (n <= 3)",
            Duration::from_secs(60),
            bijective_solutions_right_nondegenerate,
        ),
        ("consequence identity", Duration::from_secs(60), consequence_identity),
        ("retract congruence and non-degeneracy", Duration::from_secs(300), retract_congruence),
        ("pair/product equivalence and regularity", Duration::from_secs(60), extension_equivalence),
        ("covering factorization (n = 4)", Duration::from_secs(120), factorization),
        ("oracle count equivalence", Duration::from_secs(600), oracle_counts),
        ("roundtrip and thread determinism", Duration::from_secs(300), roundtrip_and_determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if took <= *limit {
                Ok(detail)
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
