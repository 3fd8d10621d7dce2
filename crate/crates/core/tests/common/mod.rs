//! Independent brute-force oracle for torus restrictions.
//!
//! Works on explicit cell sets with its own labeling and order-filter test,
//! and enumerates every increasing subset of word positions directly; it
//! shares nothing with the dynamic program except the polynomial type.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use ogmirror::{Diagram, Monomial, Polynomial, Variable};

type Cells = BTreeSet<(u32, u32)>;

fn cell_label(n: u32, r: u32, c: u32) -> u32 {
    match (c < r, r % 2) {
        (true, _) => n - r + c,
        (false, 1) => n + 1,
        (false, _) => n,
    }
}

fn is_filter(cells: &Cells) -> bool {
    cells.iter().all(|&(r, c)| {
        (c == 1 || cells.contains(&(r, c - 1))) && (c > r - 1 || cells.contains(&(r - 1, c)))
    })
}

/// The word read off the staircase row by row: (label, column).
pub fn word(n: u32) -> Vec<(u32, u32)> {
    let mut w = Vec::new();
    for r in 1..=n {
        for c in 1..=r {
            w.push((cell_label(n, r, c), c));
        }
    }
    w
}

fn cells_of(d: &Diagram) -> Cells {
    d.rows()
        .iter()
        .enumerate()
        .flat_map(|(k, &len)| (1..=len).map(move |c| (k as u32 + 1, c)))
        .collect()
}

/// All cell sets obtainable from `start` by adding one cell labeled
/// `label` that keeps the set an order filter.
fn additions(n: u32, start: &Cells, label: u32) -> Vec<Cells> {
    let mut out = Vec::new();
    for r in 1..=n {
        for c in 1..=r {
            if start.contains(&(r, c)) || cell_label(n, r, c) != label {
                continue;
            }
            let mut next = start.clone();
            next.insert((r, c));
            if is_filter(&next) {
                out.push(next);
            }
        }
    }
    out
}

fn subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in start..len {
            cur.push(t);
            rec(t + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Sum over increasing position subsets that build `d` from the empty
/// diagram of the product of their torus variables.
pub fn brute_force_restriction(n: u32, d: &Diagram) -> Polynomial {
    let w = word(n);
    let target = cells_of(d);
    let mut terms = Vec::new();
    for subset in subsets(w.len(), target.len()) {
        let mut frontier = vec![Cells::new()];
        for &t in &subset {
            frontier = frontier
                .iter()
                .flat_map(|cells| additions(n, cells, w[t].0))
                .collect();
        }
        let hits = frontier.iter().filter(|c| **c == target).count();
        if hits > 0 {
            let m =
                Monomial::from_powers(subset.iter().map(|&t| (Variable::torus(w[t].0, w[t].1), 1)));
            terms.push((BigInt::from(hits), m));
        }
    }
    Polynomial::from_terms(terms)
}

pub fn a(i: u32, j: u32) -> Polynomial {
    Polynomial::torus(i, j)
}

pub fn prod(vars: &[(u32, u32)]) -> Polynomial {
    vars.iter().map(|&(i, j)| a(i, j)).product()
}

pub fn sum(vars: &[(u32, u32)]) -> Polynomial {
    vars.iter().map(|&(i, j)| a(i, j)).sum()
}
