//! Young diagrams and constrained partition enumeration.
//!
//! A diagram lists block sizes in non-increasing order. Enumeration walks
//! partitions in reverse-lexicographic order (`[n]`, `[n-1,1]`, `[n-2,2]`,
//! `[n-2,1,1]`, ...) and prunes any branch that cannot satisfy the supplied
//! [`Constraint`], so every branch that is explored yields at least one
//! partition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `n` particles into entangled blocks, drawn as rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDiagram("no rows".into()));
        }
        if rows.contains(&0) {
            return Err(Error::InvalidDiagram("rows must be positive".into()));
        }
        if rows.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidDiagram(format!(
                "rows must be non-increasing: {rows:?}"
            )));
        }
        rows.iter()
            .try_fold(0u32, |acc, &r| acc.checked_add(r))
            .ok_or(Error::Overflow("diagram size"))?;
        Ok(Self { rows })
    }

    /// Sorts arbitrary positive block sizes into diagram order.
    pub fn from_blocks(mut blocks: Vec<u32>) -> Result<Self> {
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(blocks)
    }

    /// The all-singleton diagram of `n` rows.
    pub fn singletons(n: u32) -> Result<Self> {
        Self::new(vec![1; n as usize])
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Total particle count.
    pub fn n(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Size of the largest block (entanglement depth).
    pub fn width(&self) -> u32 {
        self.rows[0]
    }

    /// Number of blocks (separability).
    pub fn height(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Dyson's rank: width minus height.
    pub fn rank(&self) -> i32 {
        self.width() as i32 - self.height() as i32
    }

    /// Sum of squared row lengths, the maximal QFI of a state separable
    /// in this partition.
    pub fn sum_of_squares(&self) -> u64 {
        self.rows.iter().map(|&r| u64::from(r) * u64::from(r)).sum()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for r in &self.rows {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(',')
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidDiagram(format!("bad row {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;

    fn try_from(rows: Vec<u32>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Self {
        d.rows
    }
}

/// Optional bounds on width, height and rank applied while enumerating.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraint {
    pub max_width: Option<u32>,
    pub min_height: Option<u32>,
    pub max_rank: Option<i32>,
}

impl Constraint {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn max_width(w: u32) -> Self {
        Self {
            max_width: Some(w),
            ..Self::default()
        }
    }

    pub fn min_height(h: u32) -> Self {
        Self {
            min_height: Some(h),
            ..Self::default()
        }
    }

    pub fn max_rank(r: i32) -> Self {
        Self {
            max_rank: Some(r),
            ..Self::default()
        }
    }

    pub fn width_height(w: u32, h: u32) -> Self {
        Self {
            max_width: Some(w),
            min_height: Some(h),
            max_rank: None,
        }
    }

    pub fn matches(&self, d: &YoungDiagram) -> bool {
        self.max_width.is_none_or(|w| d.width() <= w)
            && self.min_height.is_none_or(|h| d.height() >= h)
            && self.max_rank.is_none_or(|r| d.rank() <= r)
    }

    /// Minimal final height once the first row is known.
    fn required_height(&self, first: u32) -> i64 {
        let by_height = self.min_height.map_or(0, i64::from);
        let by_rank = self
            .max_rank
            .map_or(0, |r| i64::from(first) - i64::from(r));
        by_height.max(by_rank)
    }
}

/// Streams the partitions of `n` that satisfy `constraint`.
pub fn enumerate(n: u32, constraint: Constraint) -> Partitions {
    Partitions::new(n, constraint)
}

/// Iterator over constrained partitions in reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    n: u32,
    constraint: Constraint,
    rows: Vec<u32>,
    remaining: u32,
    started: bool,
    done: bool,
}

impl Partitions {
    fn new(n: u32, constraint: Constraint) -> Self {
        Self {
            n,
            constraint,
            rows: Vec::new(),
            remaining: n,
            started: false,
            done: n == 0,
        }
    }

    /// Whether placing `part` next keeps at least one completion valid.
    /// Completing with singletons maximizes height, so it is the witness.
    fn feasible(&self, part: u32) -> bool {
        let first = self.rows.first().copied().unwrap_or(part);
        let height_after = self.rows.len() as i64 + 1 + i64::from(self.remaining - part);
        height_after >= self.constraint.required_height(first)
    }

    /// Largest feasible part not exceeding `cap`.
    fn largest_feasible(&self, cap: u32) -> Option<u32> {
        (1..=cap.min(self.remaining)).rev().find(|&p| self.feasible(p))
    }

    /// Greedily extends the prefix to the first leaf below it.
    fn descend(&mut self) {
        while self.remaining > 0 {
            let cap = self
                .rows
                .last()
                .copied()
                .unwrap_or_else(|| self.constraint.max_width.unwrap_or(self.n));
            // feasible() is monotone in the part size and singletons always
            // complete a feasible prefix, so this cannot fail here.
            let p = self
                .largest_feasible(cap)
                .expect("pruned prefix has no completion");
            self.rows.push(p);
            self.remaining -= p;
        }
    }

    /// Moves to the next prefix in DFS order, returning false when exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(p) = self.rows.pop() {
            self.remaining += p;
            if p > 1 {
                if let Some(q) = self.largest_feasible(p - 1) {
                    self.rows.push(q);
                    self.remaining -= q;
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = YoungDiagram;

    fn next(&mut self) -> Option<YoungDiagram> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            let cap = self.constraint.max_width.unwrap_or(self.n);
            match self.largest_feasible(cap) {
                Some(p) => {
                    self.rows.push(p);
                    self.remaining -= p;
                }
                None => {
                    self.done = true;
                    return None;
                }
            }
        } else if !self.backtrack() {
            self.done = true;
            return None;
        }
        self.descend();
        Some(YoungDiagram {
            rows: self.rows.clone(),
        })
    }
}
