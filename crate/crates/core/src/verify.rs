//! Machine checks of the structural and torus-restriction identities for a
//! single rank, plus the text and JSON report formats.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::diagram::Rank;
use crate::error::{Error, Result};
use crate::potential::{self, delta, SuperpotentialTerm};
use crate::torus::PluckerRestrictions;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: &'static str,
    pub n: u32,
    pub i: Option<u32>,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckRecord {
    pub fn line(&self) -> String {
        let i = self.i.map_or_else(|| "-".to_string(), |i| i.to_string());
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("CHECK {} n={} i={} {}", self.name, self.n, i, status)
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "n": self.n,
            "i": self.i,
            "status": if self.passed { "PASS" } else { "FAIL" },
            "detail": self.detail,
        })
    }
}

struct Recorder {
    n: u32,
    records: Vec<CheckRecord>,
}

impl Recorder {
    /// Record a check; an `Err` from the check body counts as a failure.
    fn check(
        &mut self,
        name: &'static str,
        i: Option<u32>,
        body: impl FnOnce() -> Result<Option<String>>,
    ) {
        let (passed, detail) = match body() {
            Ok(None) => (true, None),
            Ok(Some(why)) => (false, Some(why)),
            Err(e) => (false, Some(e.to_string())),
        };
        self.records.push(CheckRecord {
            name,
            n: self.n,
            i,
            passed,
            detail,
        });
    }
}

fn fail_if(cond: bool, why: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(cond.then(why))
}

/// Coefficient of the `i`-th simple root in the highest root of `D_{n+1}`.
pub fn expected_degree(rank: Rank, i: u32) -> u32 {
    if i == 0 || i == 1 || i >= rank.get() {
        1
    } else {
        2
    }
}

/// Run every check for one rank. Never fails; problems become FAIL records.
pub fn verify_rank(rank: Rank) -> Vec<CheckRecord> {
    let n = rank.get();
    let mut rec = Recorder {
        n,
        records: Vec::new(),
    };
    let diagrams = rank.enumerate_diagrams();

    rec.check("diagram_count", None, || {
        fail_if(diagrams.len() != 1usize << n, || {
            format!("{} diagrams, expected {}", diagrams.len(), 1usize << n)
        })
    });

    rec.check("unique_positions", None, || {
        for d in &diagrams {
            for label in rank.labels() {
                let add = d.addable_positions(label).len();
                let rem = d.removable_positions(label).len();
                if add > 1 || rem > 1 {
                    return Ok(Some(format!(
                        "{d} label {label}: {add} addable, {rem} removable"
                    )));
                }
            }
        }
        Ok(None)
    });

    rec.check("add_remove_inverse", None, || {
        for d in &diagrams {
            for label in rank.labels() {
                if let Some(up) = d.add_box(label)? {
                    if up.remove_box(label)?.as_ref() != Some(d) {
                        return Ok(Some(format!("add/remove {label} on {d}")));
                    }
                }
                if let Some(down) = d.remove_box(label)? {
                    if down.add_box(label)?.as_ref() != Some(d) {
                        return Ok(Some(format!("remove/add {label} on {d}")));
                    }
                }
            }
        }
        Ok(None)
    });

    rec.check("hasse_graded_connected", None, || {
        let edges = rank.hasse_edges()?;
        if let Some(e) = edges.iter().find(|e| e.upper.size() != e.lower.size() + 1) {
            return Ok(Some(format!("edge {} -> {} not graded", e.lower, e.upper)));
        }
        let mut seen = BTreeSet::from([rank.empty()]);
        let mut queue = VecDeque::from([rank.empty()]);
        while let Some(d) = queue.pop_front() {
            for e in edges.iter().filter(|e| e.lower == d) {
                if seen.insert(e.upper.clone()) {
                    queue.push_back(e.upper.clone());
                }
            }
        }
        fail_if(seen.len() != diagrams.len(), || {
            format!("{} of {} diagrams reachable", seen.len(), diagrams.len())
        })
    });

    for i in 1..n {
        rec.check("unique_plus", Some(i), || {
            rank.lambda(i)?.unique_plus()?;
            rank.mu(i)?.unique_plus()?;
            Ok(None)
        });
    }

    for i in 2..n {
        rec.check("m_levels_bound", Some(i), || {
            let m = potential::m_sets(rank, i)?;
            let bound = (i * (i - 1) / 2) as usize + 1;
            fail_if(m.len() > bound, || format!("{} levels > {bound}", m.len()))
        });
        rec.check("n_first_level", Some(i), || {
            let m = potential::m_sets(rank, i)?;
            let nl = potential::n_sets(rank, i, &m)?;
            let expect =
                crate::diagram::DiagramPair::new(rank.mu(i - 1)?.unique_plus()?, rank.lambda(i)?)?;
            fail_if(nl[0].pairs != BTreeSet::from([expect]), || {
                format!("N_(i,0) = {:?}", nl[0].pairs)
            })
        });
    }

    let terms = match potential::superpotential(rank) {
        Ok(t) => t,
        Err(e) => {
            rec.check("superpotential", None, || Err(e));
            return rec.records;
        }
    };

    for t in terms.iter().filter(|t| t.index <= n) {
        rec.check("delta_identity", Some(t.index), || {
            let d = delta(rank, t.index, t.denominator())?;
            fail_if(d != *t.numerator(), || format!("delta gives {d}"))
        });
    }

    for t in &terms {
        rec.check("term_degree", Some(t.index), || term_degree(rank, t));
    }

    rec.check("degree_sum", None, || {
        let mut sum = 0;
        for t in &terms {
            sum += t.denominator().degree_in_pluckers()?;
        }
        fail_if(sum != 2 * n, || format!("sum {sum} != {}", 2 * n))
    });

    let table = match PluckerRestrictions::compute(rank) {
        Ok(t) => t,
        Err(e) => {
            rec.check("plucker_restrictions", None, || Err(e));
            return rec.records;
        }
    };

    rec.check("restriction_shape", None, || {
        for (d, p) in table.iter() {
            if p.is_zero() {
                return Ok(Some(format!("p[{d}] restricts to 0")));
            }
            let bad = p.terms().any(|(m, c)| {
                c.sign() != num_bigint::Sign::Plus || m.total_degree() as usize != d.size()
            });
            if bad {
                return Ok(Some(format!("p[{d}] has a malformed term")));
            }
        }
        Ok(None)
    });

    for t in &terms {
        rec.check("phi_monomial", Some(t.index), || {
            let got = table.restrict(t.denominator())?;
            let expect = table.expected_phi(t.index)?;
            fail_if(got != expect, || format!("phi restricts to {got}"))
        });
    }

    for t in terms.iter().filter(|t| t.index <= n) {
        rec.check("term_restriction", Some(t.index), || {
            let c = table.check_term(t)?;
            fail_if(!c.passed, || format!("residual {}", c.residual))
        });
    }

    rec.check("laurent_assembly", None, || {
        let lhs = table.restricted_sum(&terms)?;
        let rhs = table.laurent_potential()?;
        fail_if(!lhs.rational_equals(&rhs), || {
            "sum of restricted terms differs".into()
        })
    });

    rec.records
}

fn term_degree(rank: Rank, t: &SuperpotentialTerm) -> Result<Option<String>> {
    let num = t.numerator().degree_in_pluckers()?;
    let den = t.denominator().degree_in_pluckers()?;
    let want = expected_degree(rank, t.index);
    fail_if(num != den || den != want, || {
        format!("degrees {num}/{den}, expected {want}")
    })
}

/// Result of verifying one or more ranks.
#[derive(Debug, Clone)]
pub struct Report {
    pub ranks: Vec<(u32, Vec<CheckRecord>)>,
}

impl Report {
    pub fn run(from: u32, to: u32) -> Result<Report> {
        let mut ranks = Vec::new();
        for n in from..=to {
            ranks.push((n, verify_rank(Rank::new(n)?)));
        }
        if ranks.is_empty() {
            return Err(Error::IndexOutOfRange {
                what: "verify range end",
                index: to as i64,
                n: from,
            });
        }
        Ok(Report { ranks })
    }

    pub fn failures(&self) -> usize {
        self.ranks
            .iter()
            .flat_map(|(_, r)| r)
            .filter(|c| !c.passed)
            .count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (n, records) in &self.ranks {
            for c in records {
                writeln!(s, "{}", c.line()).unwrap();
            }
            let failed = records.iter().filter(|c| !c.passed).count();
            if failed == 0 {
                writeln!(s, "VERIFIED n={n}").unwrap();
            } else {
                writeln!(s, "FAILED {failed} checks").unwrap();
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let ranks: Vec<Value> = self
            .ranks
            .iter()
            .map(|(n, records)| {
                let failed = records.iter().filter(|c| !c.passed).count();
                json!({
                    "n": n,
                    "checks": records.iter().map(CheckRecord::to_json).collect::<Vec<_>>(),
                    "verified": failed == 0,
                    "failed": failed,
                })
            })
            .collect();
        json!({ "ranks": ranks, "verified": self.passed() })
    }
}
