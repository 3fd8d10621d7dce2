//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{a, brute_force_restriction, prod, sum};
use ogmirror::{
    delta, m_sets, n_sets, superpotential, Diagram, DiagramPair, PluckerRestrictions, Polynomial,
    Rank,
};
use serde_json::{json, Value};

type Check = Result<(), String>;
type Criterion = (u32, &'static str, fn() -> Check);

const SWEEP: std::ops::RangeInclusive<u32> = 2..=8;

fn rank(n: u32) -> Rank {
    Rank::new(n).unwrap()
}

fn d(rows: &[u32]) -> Diagram {
    Diagram::new(rank(4), rows).unwrap()
}

fn p(rows: &[u32]) -> Polynomial {
    Polynomial::plucker(&d(rows))
}

fn pp(x: &[u32], y: &[u32]) -> Polynomial {
    &p(x) * &p(y)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

/// The six terms displayed for n = 4, as (numerator, denominator, quantum).
fn golden_n4() -> Vec<(Polynomial, Polynomial, bool)> {
    vec![
        (p(&[1]), p(&[]), false),
        (p(&[1, 2, 1, 1]), p(&[1, 1, 1, 1]), false),
        (
            &pp(&[1, 1], &[1, 2, 2, 2]) - &pp(&[], &[1, 2, 3, 3]),
            &pp(&[1], &[1, 2, 2, 2]) - &pp(&[], &[1, 2, 3, 2]),
            false,
        ),
        (
            &pp(&[1, 2, 1], &[1, 2, 3, 3]) - &pp(&[1, 1, 1], &[1, 2, 3, 4]),
            &pp(&[1, 2], &[1, 2, 3, 3]) - &pp(&[1, 1], &[1, 2, 3, 4]),
            false,
        ),
        (p(&[1, 2, 3, 1]), p(&[1, 2, 3]), false),
        (&Polynomial::quantum() * &p(&[1, 2]), p(&[1, 2, 3, 4]), true),
    ]
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ogmirror"))
        .args(["potential", "--n", "4", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit {:?}", out.status))?;
    let doc: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let expect: Vec<Value> = golden_n4()
        .into_iter()
        .enumerate()
        .map(|(i, (num, den, quantum))| {
            json!({
                "index": i,
                "quantum": quantum,
                "numerator": num.to_json(),
                "denominator": den.to_json(),
            })
        })
        .collect();
    ensure(doc["terms"] == json!(expect), || {
        format!("got {}", doc["terms"])
    })?;

    // Pair sets and signs behind the two middle terms.
    let m3 = m_sets(rank(4), 3).map_err(|e| e.to_string())?;
    let n3 = n_sets(rank(4), 3, &m3).map_err(|e| e.to_string())?;
    let pair = |x: &[u32], y: &[u32]| DiagramPair::new(d(x), d(y)).unwrap();
    ensure(
        m3.iter().map(|l| l.pairs.clone()).collect::<Vec<_>>()
            == vec![
                BTreeSet::from([pair(&[1, 2], &[1, 2, 3, 3])]),
                BTreeSet::from([pair(&[1, 1], &[1, 2, 3, 4])]),
            ],
        || "M_(3,j) mismatch".into(),
    )?;
    ensure(
        n3.iter().map(|l| l.pairs.clone()).collect::<Vec<_>>()
            == vec![
                BTreeSet::from([pair(&[1, 2, 1], &[1, 2, 3, 3])]),
                BTreeSet::from([pair(&[1, 1, 1], &[1, 2, 3, 4])]),
            ],
        || "N_(3,j) mismatch".into(),
    )?;
    within(Duration::from_secs(1), start)
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let table = PluckerRestrictions::compute(rank(4)).map_err(|e| e.to_string())?;
    let golden = [
        (
            vec![1, 2],
            &(&a(5, 1)
                * &(&(&(&prod(&[(3, 1), (4, 2)]) + &prod(&[(3, 1), (4, 4)]))
                    + &prod(&[(3, 2), (4, 4)]))
                    + &prod(&[(3, 3), (4, 4)])))
                + &prod(&[(5, 3), (3, 3), (4, 4)]),
        ),
        (
            vec![1, 2, 3, 3],
            prod(&[
                (5, 1),
                (3, 1),
                (4, 2),
                (2, 1),
                (3, 2),
                (5, 3),
                (1, 1),
                (2, 2),
                (3, 3),
            ]),
        ),
        (
            vec![1, 1],
            &(&a(5, 1) * &sum(&[(3, 1), (3, 2), (3, 3)])) + &prod(&[(5, 3), (3, 3)]),
        ),
        (
            vec![1, 2, 3, 4],
            prod(&[
                (5, 1),
                (3, 1),
                (4, 2),
                (2, 1),
                (3, 2),
                (5, 3),
                (1, 1),
                (2, 2),
                (3, 3),
                (4, 4),
            ]),
        ),
    ];
    for (rows, expect) in golden {
        let got = table.plucker(&d(&rows)).map_err(|e| e.to_string())?;
        ensure(*got == expect, || {
            format!("p{rows:?}: got {got}, expected {expect}")
        })?;
    }
    within(Duration::from_secs(1), start)
}

fn eq2() -> Polynomial {
    &prod(&[(5, 1), (3, 1), (4, 2)]).pow(2)
        * &prod(&[(2, 1), (3, 2), (5, 3), (1, 1), (2, 2), (3, 3)])
}

fn phi3() -> Polynomial {
    &pp(&[1, 2], &[1, 2, 3, 3]) - &pp(&[1, 1], &[1, 2, 3, 4])
}

fn criterion_3() -> Check {
    let table = PluckerRestrictions::compute(rank(4)).map_err(|e| e.to_string())?;
    let got = table.restrict(&phi3()).map_err(|e| e.to_string())?;
    ensure(got == eq2(), || format!("phi_3 restricts to {got}"))?;
    let closed = table.expected_phi(3).map_err(|e| e.to_string())?;
    ensure(closed == eq2(), || format!("closed form gives {closed}"))
}

fn criterion_4() -> Check {
    let r = rank(4);
    let table = PluckerRestrictions::compute(r).map_err(|e| e.to_string())?;
    let num = delta(r, 3, &phi3()).map_err(|e| e.to_string())?;
    let got = table.restrict(&num).map_err(|e| e.to_string())?;
    let expect = &eq2() * &sum(&[(2, 1), (2, 2)]);
    ensure(got == expect, || {
        format!("delta_3(phi_3) restricts to {got}")
    })
}

fn criterion_5() -> Check {
    let start = Instant::now();
    for n in SWEEP {
        let r = rank(n);
        let table = PluckerRestrictions::compute(r).map_err(|e| e.to_string())?;
        let terms = superpotential(r).map_err(|e| e.to_string())?;
        for t in terms.iter().filter(|t| t.index <= n) {
            let c = table.check_term(t).map_err(|e| e.to_string())?;
            ensure(c.passed, || {
                format!("n={n} i={}: residual {}", t.index, c.residual)
            })?;
        }
    }
    within(Duration::from_secs(60), start)
}

fn criterion_6() -> Check {
    for n in SWEEP {
        let table = PluckerRestrictions::compute(rank(n)).map_err(|e| e.to_string())?;
        let terms = superpotential(rank(n)).map_err(|e| e.to_string())?;
        let lhs = table.restricted_sum(&terms).map_err(|e| e.to_string())?;
        let rhs = table.laurent_potential().map_err(|e| e.to_string())?;
        ensure(lhs.rational_equals(&rhs), || {
            format!("n={n}: sum of W_i|X differs")
        })?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    for n in SWEEP {
        let r = rank(n);
        let diagrams = r.enumerate_diagrams();
        ensure(diagrams.len() == 1 << n, || {
            format!("n={n}: {} diagrams", diagrams.len())
        })?;
        for x in &diagrams {
            for label in r.labels() {
                ensure(
                    x.addable_positions(label).len() <= 1
                        && x.removable_positions(label).len() <= 1,
                    || format!("n={n}: {x} label {label} not unique"),
                )?;
            }
        }
        for i in 2..n {
            let m = m_sets(r, i).map_err(|e| e.to_string())?;
            let bound = (i * (i - 1) / 2) as usize + 1;
            ensure(m.len() <= bound, || {
                format!("n={n} i={i}: {} M-levels", m.len())
            })?;
            let nl = n_sets(r, i, &m).map_err(|e| e.to_string())?;
            let first = DiagramPair::new(
                r.mu(i - 1)
                    .unwrap()
                    .unique_plus()
                    .map_err(|e| e.to_string())?,
                r.lambda(i).unwrap(),
            )
            .unwrap();
            ensure(nl[0].pairs == BTreeSet::from([first]), || {
                format!("n={n} i={i}: N_(i,0)")
            })?;
        }
        let terms = superpotential(r).map_err(|e| e.to_string())?;
        let mut degree_sum = 0;
        for t in &terms {
            if t.index <= n {
                let dd = delta(r, t.index, t.denominator()).map_err(|e| e.to_string())?;
                ensure(dd == *t.numerator(), || {
                    format!("n={n} i={}: numerator != delta", t.index)
                })?;
            }
            degree_sum += t
                .denominator()
                .degree_in_pluckers()
                .map_err(|e| e.to_string())?;
        }
        ensure(degree_sum == 2 * n, || {
            format!("n={n}: degree sum {degree_sum}")
        })?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let start = Instant::now();
    for n in 2..=4 {
        let table = PluckerRestrictions::compute(rank(n)).map_err(|e| e.to_string())?;
        for x in rank(n).enumerate_diagrams() {
            let fast = table.plucker(&x).map_err(|e| e.to_string())?;
            let slow = brute_force_restriction(n, &x);
            ensure(*fast == slow, || format!("n={n} {x}: {fast} vs {slow}"))?;
        }
    }
    within(Duration::from_secs(5), start)
}

fn criterion_9() -> Check {
    let got: Vec<Vec<u32>> = rank(3)
        .enumerate_diagrams()
        .iter()
        .map(|x| x.rows().to_vec())
        .collect();
    let listed: BTreeSet<Vec<u32>> = [
        vec![0, 0, 0],
        vec![1, 0, 0],
        vec![1, 1, 0],
        vec![1, 2, 0],
        vec![1, 1, 1],
        vec![1, 2, 1],
        vec![1, 2, 2],
        vec![1, 2, 3],
    ]
    .into_iter()
    .collect();
    ensure(
        got.len() == 8 && got.iter().cloned().collect::<BTreeSet<_>>() == listed,
        || format!("got {got:?}"),
    )?;
    ensure(!ogmirror::is_valid(&[1, 1, 2], rank(3)), || {
        "(1,1,2) accepted".into()
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "n=4 golden potential", criterion_1),
        (2, "n=4 golden Plücker restrictions", criterion_2),
        (3, "phi_3 restricts to a monomial", criterion_3),
        (4, "delta_3(phi_3) factorization", criterion_4),
        (5, "per-term restriction identity, n=2..8", criterion_5),
        (6, "Laurent assembly, n=2..8", criterion_6),
        (7, "structural suites, n=2..8", criterion_7),
        (8, "path sum vs brute-force oracle, n<=4", criterion_8),
        (9, "n=3 enumeration", criterion_9),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(()) => println!("criterion {id}: PASS  {title} ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id}: FAIL  {title} ({took:.2?}): {why}");
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
