//! Young diagrams inside the flipped staircase `μ_n = (1, 2, …, n)`.
//!
//! A diagram is stored as its full row-length vector `(c_1, …, c_n)`, top row
//! first. Boxes carry simple-root labels: `n - r + c` off the last diagonal,
//! and alternately `n + 1` / `n` along it, starting with `n + 1` at the top.
//! Valid diagrams are the order filters of the minuscule poset of the spin
//! representation, so there are exactly `2^n` of them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The rank parameter `n` of `OG(n+1, 2n+2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        Ok(Rank(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of boxes of the staircase, `binom(n+1, 2)`.
    pub fn staircase_size(self) -> usize {
        let n = self.0 as usize;
        n * (n + 1) / 2
    }

    /// Label of the box in row `r`, column `c` (both 1-based).
    pub fn label(self, r: u32, c: u32) -> Result<u32> {
        if r == 0 || r > self.0 {
            return Err(self.out_of_range("row", r));
        }
        if c == 0 || c > r {
            return Err(self.out_of_range("column", c));
        }
        Ok(label_unchecked(self.0, r, c))
    }

    /// Labels `1..=n+1` that may appear on boxes.
    pub fn labels(self) -> std::ops::RangeInclusive<u32> {
        1..=self.0 + 1
    }

    pub fn empty(self) -> Diagram {
        Diagram {
            rows: vec![0; self.0 as usize],
        }
    }

    pub fn staircase(self) -> Diagram {
        Diagram {
            rows: (1..=self.0).collect(),
        }
    }

    /// `μ_i`: the first `i` rows of the staircase.
    pub fn mu(self, i: u32) -> Result<Diagram> {
        if i > self.0 {
            return Err(self.out_of_range("mu", i));
        }
        Ok(Diagram {
            rows: (1..=self.0).map(|r| if r <= i { r } else { 0 }).collect(),
        })
    }

    /// `λ_i`: the first `i` columns of the staircase, each at full length.
    pub fn lambda(self, i: u32) -> Result<Diagram> {
        if i == 0 || i > self.0 {
            return Err(self.out_of_range("lambda", i));
        }
        Ok(Diagram {
            rows: (1..=self.0).map(|r| r.min(i)).collect(),
        })
    }

    /// All valid diagrams in lexicographic order of their row vectors.
    pub fn enumerate_diagrams(self) -> Vec<Diagram> {
        let n = self.0 as usize;
        let mut out = Vec::with_capacity(1 << n);
        let mut rows = Vec::with_capacity(n);
        extend_rows(n, &mut rows, &mut out);
        out
    }

    /// Covering relations `D -> D ∪ {box}` of the weight poset, each with the
    /// label of the added box. Sorted by source, then target.
    pub fn hasse_edges(self) -> Result<Vec<HasseEdge>> {
        let mut edges = Vec::new();
        for d in self.enumerate_diagrams() {
            for label in self.labels() {
                if let Some(up) = d.add_box(label)? {
                    edges.push(HasseEdge {
                        lower: d.clone(),
                        upper: up,
                        label,
                    });
                }
            }
        }
        edges.sort();
        Ok(edges)
    }

    /// Parse the text form of a diagram ("1,2,1", "1,2,1,0", "empty") and
    /// zero-pad it to length `n`.
    pub fn parse_diagram(self, text: &str) -> Result<Diagram> {
        let raw: RawRows = text.parse()?;
        Diagram::new(self, &raw.0)
    }

    fn out_of_range(self, what: &'static str, index: u32) -> Error {
        Error::IndexOutOfRange {
            what,
            index: index as i64,
            n: self.0,
        }
    }
}

fn label_unchecked(n: u32, r: u32, c: u32) -> u32 {
    if c < r {
        n - r + c
    } else if r % 2 == 1 {
        n + 1
    } else {
        n
    }
}

fn extend_rows(n: usize, rows: &mut Vec<u32>, out: &mut Vec<Diagram>) {
    let r = rows.len() + 1;
    if r > n {
        out.push(Diagram { rows: rows.clone() });
        return;
    }
    let above = if r == 1 { 1 } else { rows[r - 2] };
    for c in 0..=r as u32 {
        if r == 1 || above >= c.min(r as u32 - 1) {
            rows.push(c);
            extend_rows(n, rows, out);
            rows.pop();
        }
    }
}

/// True iff `rows`, zero-padded to length `n`, is a valid diagram.
pub fn is_valid(rows: &[u32], rank: Rank) -> bool {
    let n = rank.get() as usize;
    if rows.len() > n {
        return false;
    }
    let at = |r: usize| rows.get(r - 1).copied().unwrap_or(0);
    (1..=n).all(|r| at(r) <= r as u32) && (2..=n).all(|r| at(r - 1) >= at(r).min(r as u32 - 1))
}

/// A valid Young diagram for the dual spin representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    rows: Vec<u32>,
}

/// One box of the staircase together with its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledBox {
    pub row: u32,
    pub col: u32,
    pub label: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HasseEdge {
    pub lower: Diagram,
    pub upper: Diagram,
    pub label: u32,
}

impl Diagram {
    /// Build a diagram from a possibly truncated row vector.
    pub fn new(rank: Rank, rows: &[u32]) -> Result<Self> {
        if !is_valid(rows, rank) {
            return Err(Error::InvalidDiagram {
                rows: rows.to_vec(),
                n: rank.get(),
            });
        }
        let mut rows = rows.to_vec();
        rows.resize(rank.get() as usize, 0);
        Ok(Diagram { rows })
    }

    pub fn rank(&self) -> Rank {
        Rank(self.rows.len() as u32)
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&c| c == 0)
    }

    /// Row vector with trailing zero rows dropped, as written in small examples.
    pub fn trimmed_rows(&self) -> &[u32] {
        let len = self.rows.iter().rposition(|&c| c > 0).map_or(0, |p| p + 1);
        &self.rows[..len]
    }

    fn n(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Boxes with `label` not in the diagram whose addition keeps it valid.
    pub fn addable_positions(&self, label: u32) -> Vec<LabeledBox> {
        let n = self.n();
        let mut out = Vec::new();
        for (idx, &len) in self.rows.iter().enumerate() {
            let r = idx as u32 + 1;
            let c = len + 1;
            if c > r || label_unchecked(n, r, c) != label {
                continue;
            }
            // Row-length encoding keeps the left neighbor; only the box above matters.
            if r == 1 || c > r - 1 || self.rows[idx - 1] >= c {
                out.push(LabeledBox {
                    row: r,
                    col: c,
                    label,
                });
            }
        }
        out
    }

    /// Boxes with `label` that have no box to their right and none below.
    pub fn removable_positions(&self, label: u32) -> Vec<LabeledBox> {
        let n = self.n();
        let mut out = Vec::new();
        for (idx, &len) in self.rows.iter().enumerate() {
            if len == 0 {
                continue;
            }
            let r = idx as u32 + 1;
            let c = len;
            if label_unchecked(n, r, c) != label {
                continue;
            }
            let below = self.rows.get(idx + 1).is_some_and(|&b| b >= c);
            if !below {
                out.push(LabeledBox {
                    row: r,
                    col: c,
                    label,
                });
            }
        }
        out
    }

    /// The diagram with one box labeled `label` added, if possible.
    pub fn add_box(&self, label: u32) -> Result<Option<Diagram>> {
        let pos = self.unique_position(self.addable_positions(label), "addable", label)?;
        Ok(pos.map(|b| {
            let mut rows = self.rows.clone();
            rows[b.row as usize - 1] += 1;
            Diagram { rows }
        }))
    }

    /// The diagram with one box labeled `label` removed, if possible.
    pub fn remove_box(&self, label: u32) -> Result<Option<Diagram>> {
        let pos = self.unique_position(self.removable_positions(label), "removable", label)?;
        Ok(pos.map(|b| {
            let mut rows = self.rows.clone();
            rows[b.row as usize - 1] -= 1;
            Diagram { rows }
        }))
    }

    fn unique_position(
        &self,
        mut positions: Vec<LabeledBox>,
        kind: &str,
        label: u32,
    ) -> Result<Option<LabeledBox>> {
        if positions.len() > 1 {
            return Err(Error::StructuralFault(format!(
                "{} {kind} positions for label {label} on {self}",
                positions.len()
            )));
        }
        Ok(positions.pop())
    }

    /// The one-box extension, when exactly one label can be added.
    pub fn unique_plus(&self) -> Result<Diagram> {
        let mut found = Vec::new();
        for label in 1..=self.n() + 1 {
            if let Some(d) = self.add_box(label)? {
                found.push(d);
            }
        }
        match found.len() {
            1 => Ok(found.pop().unwrap()),
            k => Err(Error::StructuralFault(format!(
                "{k} labels addable to {self}, expected exactly one"
            ))),
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Comma-separated row lengths before rank-dependent validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRows(pub Vec<u32>);

impl FromStr for RawRows {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("empty") {
            return Ok(RawRows(Vec::new()));
        }
        s.split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(RawRows)
            .map_err(|_| Error::DiagramSyntax(s.to_string()))
    }
}

/// An ordered pair `(τ, τ')` of diagrams of the same rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramPair {
    pub first: Diagram,
    pub second: Diagram,
}

impl DiagramPair {
    pub fn new(first: Diagram, second: Diagram) -> Result<Self> {
        if first.n() != second.n() {
            return Err(Error::RankMismatch(first.n(), second.n()));
        }
        Ok(DiagramPair { first, second })
    }

    /// All pairs reachable by moving one box from the first diagram to the
    /// second.
    pub fn moves(&self) -> Result<BTreeSet<DiagramPair>> {
        let mut out = BTreeSet::new();
        for label in 1..=self.first.n() + 1 {
            let Some(first) = self.first.remove_box(label)? else {
                continue;
            };
            if let Some(second) = self.second.add_box(label)? {
                out.insert(DiagramPair { first, second });
            }
        }
        Ok(out)
    }
}

impl fmt::Display for DiagramPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.first, self.second)
    }
}
