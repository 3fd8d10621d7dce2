//! Restriction of Plücker coordinates to the torus chart.
//!
//! Reading the labels of the staircase row by row, left to right, gives the
//! word `(i_t, j_t)`, `t = 1…ℓ`, with `j_t` the column of the box read at
//! step `t`. The restriction of `p_τ` is the weighted count of ways to build
//! `τ` from the empty diagram by scanning the word once and, at each step,
//! either skipping or adding a box labeled `i_t` (weight `a_{i_t,j_t}`).
//! A forward dynamic program over all `2^n` diagrams computes every
//! restriction in one pass.

use std::collections::{BTreeMap, HashMap};

use crate::diagram::{Diagram, Rank};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RationalExpression, Variable};
use crate::potential::SuperpotentialTerm;

/// `((i_1, j_1), …, (i_ℓ, j_ℓ))`: label and column of each staircase box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    entries: Vec<(u32, u32)>,
}

impl ReducedWord {
    pub fn new(rank: Rank) -> Self {
        let n = rank.get();
        let entries = (1..=n)
            .flat_map(|r| (1..=r).map(move |c| (r, c)))
            .map(|(r, c)| (rank.label(r, c).expect("box inside staircase"), c))
            .collect();
        ReducedWord { entries }
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn variable(&self, t: usize) -> Variable {
        let (i, j) = self.entries[t];
        Variable::torus(i, j)
    }

    /// Product of `a_{i_t,j_t}` over the selected steps.
    pub fn product<F: Fn(usize, (u32, u32)) -> bool>(&self, select: F) -> Polynomial {
        let powers = self
            .entries
            .iter()
            .enumerate()
            .filter(|&(t, &e)| select(t, e))
            .map(|(t, _)| (self.variable(t), 1));
        Polynomial::from_monomial(Monomial::from_powers(powers))
    }

    /// `Σ_t a_{i_t,j_t}`.
    pub fn sum(&self) -> Polynomial {
        (0..self.len())
            .map(|t| Polynomial::var(self.variable(t)))
            .sum()
    }

    /// `Σ_j a_{label,j}` over the distinct columns where `label` occurs.
    pub fn label_sum(&self, label: u32) -> Polynomial {
        let columns: std::collections::BTreeSet<u32> = self
            .entries
            .iter()
            .filter(|&&(i, _)| i == label)
            .map(|&(_, j)| j)
            .collect();
        columns
            .into_iter()
            .map(|j| Polynomial::torus(label, j))
            .sum()
    }
}

pub fn reduced_word(rank: Rank) -> ReducedWord {
    ReducedWord::new(rank)
}

/// Restrictions of every Plücker coordinate for one rank.
#[derive(Debug, Clone)]
pub struct PluckerRestrictions {
    rank: Rank,
    word: ReducedWord,
    table: BTreeMap<Diagram, Polynomial>,
}

impl PluckerRestrictions {
    pub fn compute(rank: Rank) -> Result<Self> {
        let word = ReducedWord::new(rank);
        let diagrams = rank.enumerate_diagrams();
        let index: HashMap<&Diagram, usize> =
            diagrams.iter().enumerate().map(|(k, d)| (d, k)).collect();

        // successor[label][k]: index of diagrams[k] plus a box with that label.
        let mut successor = vec![vec![None; diagrams.len()]; rank.get() as usize + 2];
        for label in rank.labels() {
            for (k, d) in diagrams.iter().enumerate() {
                successor[label as usize][k] = d.add_box(label)?.map(|up| index[&up]);
            }
        }

        let mut states = vec![Polynomial::zero(); diagrams.len()];
        states[index[&rank.empty()]] = Polynomial::one();
        for (t, &(label, _)) in word.entries().iter().enumerate() {
            let step = Monomial::var(word.variable(t));
            let moves: Vec<(usize, Polynomial)> = successor[label as usize]
                .iter()
                .enumerate()
                .filter_map(|(k, up)| up.map(|u| (k, u)))
                .filter(|&(k, _)| !states[k].is_zero())
                .map(|(k, u)| (u, states[k].mul_monomial(&step)))
                .collect();
            for (u, contribution) in moves {
                states[u] = &states[u] + &contribution;
            }
        }

        Ok(PluckerRestrictions {
            rank,
            word,
            table: diagrams.into_iter().zip(states).collect(),
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn plucker(&self, d: &Diagram) -> Result<&Polynomial> {
        self.table.get(d).ok_or_else(|| Error::InvalidDiagram {
            rows: d.rows().to_vec(),
            n: self.rank.get(),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &Polynomial)> {
        self.table.iter()
    }

    /// Substitute every Plücker variable by its restriction; `q` passes
    /// through unchanged.
    pub fn restrict(&self, p: &Polynomial) -> Result<Polynomial> {
        p.check_variables(|v| !matches!(v, Variable::Torus { .. }))?;
        p.substitute(|v| match v {
            Variable::Plucker(d) => self.plucker(d).map(|r| Some(r.clone())),
            _ => Ok(None),
        })
    }

    pub fn restrict_rational(&self, f: &RationalExpression) -> Result<RationalExpression> {
        RationalExpression::new(
            self.restrict(f.numerator())?,
            self.restrict(f.denominator())?,
        )
    }

    /// The closed-form monomial expected for `φ_i|_{X°}`.
    pub fn expected_phi(&self, i: u32) -> Result<Polynomial> {
        let n = self.rank.get();
        let prefix = |k: u32| (k * (k + 1) / 2) as usize;
        let w = &self.word;
        Ok(match i {
            0 => Polynomial::one(),
            1 => w.product(|_, (_, j)| j == 1),
            i if i == n => w.product(|t, _| t < prefix(n - 1)),
            i if i == n + 1 => w.product(|_, _| true),
            i if i < n => &w.product(|t, _| t < prefix(i - 1)) * &w.product(|_, (_, j)| j <= i),
            _ => {
                return Err(Error::IndexOutOfRange {
                    what: "phi",
                    index: i as i64,
                    n,
                })
            }
        })
    }

    /// Check `restrict(numerator) = restrict(denominator) · Σ_j a_{n+1-i,j}`.
    pub fn check_term(&self, term: &SuperpotentialTerm) -> Result<TermRestrictionCheck> {
        let n = self.rank.get();
        let i = term.index;
        if i > n {
            return Err(Error::IndexOutOfRange {
                what: "restriction check",
                index: i as i64,
                n,
            });
        }
        let factor = self.word.label_sum(n + 1 - i);
        let numerator = self.restrict(term.numerator())?;
        let denominator = self.restrict(term.denominator())?;
        let residual = &numerator - &(&denominator * &factor);
        Ok(TermRestrictionCheck {
            index: i,
            passed: residual.is_zero(),
            factor,
            denominator,
            residual,
        })
    }

    /// `Σ_t a_{i_t,j_t} + q · p_{μ_{n-2}}|_{X°} / p_{μ_n}|_{X°}`.
    pub fn laurent_potential(&self) -> Result<RationalExpression> {
        let n = self.rank.get();
        let full = self.plucker(&self.rank.staircase())?.clone();
        let quantum = &Polynomial::quantum() * self.plucker(&self.rank.mu(n - 2)?)?;
        RationalExpression::new(&(&self.word.sum() * &full) + &quantum, full)
    }

    /// `Σ_i W_i|_{X°}` as a single unreduced fraction.
    pub fn restricted_sum(&self, terms: &[SuperpotentialTerm]) -> Result<RationalExpression> {
        let mut acc = RationalExpression::from_polynomial(Polynomial::zero());
        for t in terms {
            acc = acc.add(&self.restrict_rational(&t.expression)?);
        }
        Ok(acc)
    }
}

/// Outcome of the per-term restriction identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermRestrictionCheck {
    pub index: u32,
    pub passed: bool,
    /// `Σ_j a_{n+1-i,j}`
    pub factor: Polynomial,
    pub denominator: Polynomial,
    /// Numerator minus denominator times factor; zero on success.
    pub residual: Polynomial,
}

pub fn restrict_plucker(rank: Rank, d: &Diagram) -> Result<Polynomial> {
    PluckerRestrictions::compute(rank)?.plucker(d).cloned()
}

pub fn restrict_polynomial(rank: Rank, p: &Polynomial) -> Result<Polynomial> {
    PluckerRestrictions::compute(rank)?.restrict(p)
}

pub fn expected_phi_restriction(rank: Rank, i: u32) -> Result<Polynomial> {
    PluckerRestrictions::compute(rank)?.expected_phi(i)
}

pub fn verify_term_restriction(rank: Rank, i: u32) -> Result<TermRestrictionCheck> {
    let term = crate::potential::term(rank, i)?;
    PluckerRestrictions::compute(rank)?.check_term(&term)
}

pub fn laurent_potential(rank: Rank) -> Result<RationalExpression> {
    PluckerRestrictions::compute(rank)?.laurent_potential()
}
