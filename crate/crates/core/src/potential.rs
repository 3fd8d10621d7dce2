//! The canonical superpotential `W_can = W_0 + … + W_{n+1}`.
//!
//! The boundary terms `W_0`, `W_1`, `W_n`, `W_{n+1}` are single Plücker
//! ratios. Each middle term `W_i`, `2 ≤ i ≤ n-1`, is a ratio of signed sums
//! over the pair sets `N_{i,j}` (numerator) and `M_{i,j}` (denominator),
//! where `M_{i,0} = {(μ_{i-1}, λ_i)}` and `M_{i,j}` collects every pair
//! reached from `M_{i,j-1}` by moving one box from the first diagram to the
//! second. `N_{i,j}` adds a box labeled `n+1-i` to whichever component of an
//! `M_{i,j}` pair accepts it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::diagram::{Diagram, DiagramPair, Rank};
use crate::error::{Error, Result};
use crate::poly::{push_signed, Monomial, Polynomial, RationalExpression, Variable};

/// One level `j` of the `M` or `N` recursion for term `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLevel {
    pub index: u32,
    pub level: usize,
    pub pairs: BTreeSet<DiagramPair>,
}

impl PairLevel {
    fn sign(&self) -> i64 {
        if self.level.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn check_middle(rank: Rank, i: u32) -> Result<()> {
    if i < 2 || i + 1 > rank.get() {
        return Err(Error::IndexOutOfRange {
            what: "middle term",
            index: i as i64,
            n: rank.get(),
        });
    }
    Ok(())
}

/// `M_{i,0}, M_{i,1}, …` up to the last nonempty level.
pub fn m_sets(rank: Rank, i: u32) -> Result<Vec<PairLevel>> {
    check_middle(rank, i)?;
    let start = DiagramPair::new(rank.mu(i - 1)?, rank.lambda(i)?)?;
    // μ_{i-1} has binom(i, 2) boxes, and every move removes one of them.
    let max_levels = (i * (i - 1) / 2) as usize + 1;
    let mut levels = vec![PairLevel {
        index: i,
        level: 0,
        pairs: BTreeSet::from([start]),
    }];
    loop {
        let mut next = BTreeSet::new();
        for pair in &levels.last().unwrap().pairs {
            next.extend(pair.moves()?);
        }
        if next.is_empty() {
            break;
        }
        if levels.len() == max_levels {
            return Err(Error::StructuralFault(format!(
                "M-recursion for i={i} exceeds {max_levels} levels"
            )));
        }
        levels.push(PairLevel {
            index: i,
            level: levels.len(),
            pairs: next,
        });
    }
    Ok(levels)
}

/// `N_{i,j}` for each level of `m`. Levels stay aligned with `m` and may be
/// empty.
pub fn n_sets(rank: Rank, i: u32, m: &[PairLevel]) -> Result<Vec<PairLevel>> {
    check_middle(rank, i)?;
    let label = rank.get() + 1 - i;
    m.iter()
        .map(|lvl| {
            let mut pairs = BTreeSet::new();
            for pair in &lvl.pairs {
                let first = pair.first.add_box(label)?;
                let second = pair.second.add_box(label)?;
                match (first, second) {
                    (Some(_), Some(_)) => {
                        return Err(Error::StructuralFault(format!(
                            "label {label} addable to both components of {pair}"
                        )))
                    }
                    (Some(f), None) => {
                        pairs.insert(DiagramPair::new(f, pair.second.clone())?);
                    }
                    (None, Some(s)) => {
                        pairs.insert(DiagramPair::new(pair.first.clone(), s)?);
                    }
                    (None, None) => {}
                }
            }
            Ok(PairLevel {
                index: i,
                level: lvl.level,
                pairs,
            })
        })
        .collect()
}

/// `Σ_j (-1)^j Σ_{(τ,τ') ∈ level j} p_τ p_τ'`.
pub fn signed_pair_sum(levels: &[PairLevel]) -> Polynomial {
    Polynomial::from_terms(levels.iter().flat_map(|lvl| {
        let sign = BigInt::from(lvl.sign());
        lvl.pairs.iter().map(move |pair| {
            let m = Monomial::from_powers([
                (Variable::Plucker(pair.first.clone()), 1),
                (Variable::Plucker(pair.second.clone()), 1),
            ]);
            (sign.clone(), m)
        })
    }))
}

/// The derivation `δ_i`: on `p_τ` it adds a box labeled `n+1-i` to `τ` (zero
/// if impossible), extended by the Leibniz rule and linearity.
pub fn delta(rank: Rank, i: u32, p: &Polynomial) -> Result<Polynomial> {
    if i > rank.get() {
        return Err(Error::IndexOutOfRange {
            what: "delta",
            index: i as i64,
            n: rank.get(),
        });
    }
    p.check_variables(Variable::is_plucker)?;
    let label = rank.get() + 1 - i;
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        for (k, (v, e)) in m.powers().iter().enumerate() {
            let Variable::Plucker(d) = v else {
                unreachable!()
            };
            if d.rank() != rank {
                return Err(Error::RankMismatch(d.rank().get(), rank.get()));
            }
            let Some(up) = d.add_box(label)? else {
                continue;
            };
            let powers = m
                .powers()
                .iter()
                .enumerate()
                .map(|(l, (w, f))| (w.clone(), if l == k { f - 1 } else { *f }))
                .chain([(Variable::Plucker(up), 1)]);
            terms.push((c * BigInt::from(*e), Monomial::from_powers(powers)));
        }
    }
    Ok(Polynomial::from_terms(terms))
}

/// One summand `W_i` of the superpotential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperpotentialTerm {
    pub index: u32,
    pub quantum: bool,
    pub expression: RationalExpression,
    /// `M_{i,j}` levels; empty for boundary terms.
    pub m_levels: Vec<PairLevel>,
    /// `N_{i,j}` levels; empty for boundary terms.
    pub n_levels: Vec<PairLevel>,
}

impl SuperpotentialTerm {
    pub fn numerator(&self) -> &Polynomial {
        self.expression.numerator()
    }

    pub fn denominator(&self) -> &Polynomial {
        self.expression.denominator()
    }

    fn boundary(index: u32, numerator: Polynomial, denominator: &Diagram) -> Result<Self> {
        Ok(SuperpotentialTerm {
            index,
            quantum: false,
            expression: RationalExpression::new(numerator, Polynomial::plucker(denominator))?,
            m_levels: Vec::new(),
            n_levels: Vec::new(),
        })
    }

    pub fn to_latex(&self) -> String {
        let (num, den) = if self.m_levels.is_empty() {
            let num = if self.quantum {
                // Pull q out in front of the fraction.
                self.numerator()
                    .substitute(|v| Ok(matches!(v, Variable::Quantum).then(Polynomial::one)))
                    .expect("substitution is total")
                    .to_latex()
            } else {
                self.numerator().to_latex()
            };
            (num, self.denominator().to_latex())
        } else {
            (levels_latex(&self.n_levels), levels_latex(&self.m_levels))
        };
        let q = if self.quantum { "q" } else { "" };
        format!("{q}\\frac{{{num}}}{{{den}}}")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "index": self.index,
            "quantum": self.quantum,
            "numerator": self.numerator().to_json(),
            "denominator": self.denominator().to_json(),
        })
    }
}

fn levels_latex(levels: &[PairLevel]) -> String {
    let mut s = String::new();
    let mut first = true;
    for lvl in levels {
        for pair in &lvl.pairs {
            push_signed(&mut s, first, lvl.sign() < 0);
            first = false;
            s.push_str(&Variable::Plucker(pair.first.clone()).to_latex());
            s.push_str(&Variable::Plucker(pair.second.clone()).to_latex());
        }
    }
    s
}

/// The term `W_i`, `0 ≤ i ≤ n+1`.
pub fn term(rank: Rank, i: u32) -> Result<SuperpotentialTerm> {
    let n = rank.get();
    match i {
        0 => {
            let empty = rank.empty();
            let one_box = empty.add_box(n + 1)?.ok_or_else(|| {
                Error::StructuralFault("top box not addable to the empty diagram".into())
            })?;
            SuperpotentialTerm::boundary(0, Polynomial::plucker(&one_box), &empty)
        }
        1 => {
            let lambda1 = rank.lambda(1)?;
            let plus = lambda1.unique_plus()?;
            SuperpotentialTerm::boundary(1, Polynomial::plucker(&plus), &lambda1)
        }
        i if i == n => {
            let mu = rank.mu(n - 1)?;
            let plus = mu.unique_plus()?;
            SuperpotentialTerm::boundary(n, Polynomial::plucker(&plus), &mu)
        }
        i if i == n + 1 => {
            let numerator = &Polynomial::quantum() * &Polynomial::plucker(&rank.mu(n - 2)?);
            let mut t = SuperpotentialTerm::boundary(n + 1, numerator, &rank.staircase())?;
            t.quantum = true;
            Ok(t)
        }
        i if i <= n => {
            let m_levels = m_sets(rank, i)?;
            let n_levels = n_sets(rank, i, &m_levels)?;
            let expression =
                RationalExpression::new(signed_pair_sum(&n_levels), signed_pair_sum(&m_levels))?;
            Ok(SuperpotentialTerm {
                index: i,
                quantum: false,
                expression,
                m_levels,
                n_levels,
            })
        }
        _ => Err(Error::IndexOutOfRange {
            what: "term",
            index: i as i64,
            n,
        }),
    }
}

/// All `n + 2` terms in index order.
pub fn superpotential(rank: Rank) -> Result<Vec<SuperpotentialTerm>> {
    (0..=rank.get() + 1).map(|i| term(rank, i)).collect()
}

pub fn potential_text(terms: &[SuperpotentialTerm]) -> String {
    let mut s = String::new();
    for t in terms {
        writeln!(s, "W_{} = {}", t.index, t.expression).unwrap();
    }
    s
}

pub fn potential_json(rank: Rank, terms: &[SuperpotentialTerm]) -> Value {
    json!({
        "n": rank.get(),
        "terms": terms.iter().map(SuperpotentialTerm::to_json).collect::<Vec<_>>(),
    })
}

pub fn potential_latex(terms: &[SuperpotentialTerm]) -> String {
    let body: Vec<String> = terms.iter().map(SuperpotentialTerm::to_latex).collect();
    format!("\\mathcal{{W}}_{{\\text{{can}}}} = {}\n", body.join("\n+ "))
}
