//! Partitions, dominant weights and the box combinatorics built on them.
//!
//! A [`Partition`] is stored in canonical form: parts weakly decreasing,
//! trailing zeros removed. The zero partition is the empty sequence and is a
//! perfectly ordinary value (it indexes the unit ideal and pairs like
//! `((0), l)`).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Rejects sequences that
    /// are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn zero() -> Self {
        Partition::default()
    }

    /// The `rows x cols` rectangle `(cols^rows)`.
    pub fn rect(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            return Partition::zero();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based); missing parts read as zero.
    pub fn get(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Same as [`Partition::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Transpose of the Young diagram: part `i` counts boxes in column `i`.
    pub fn conjugate(&self) -> Partition {
        let width = self.get(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Height of column `c` (1-based), i.e. `x'_c`. Column 0 and columns past
    /// the first row have height zero in the sense used by the saturation and
    /// Z-set rules.
    pub fn column_height(&self, c: u32) -> usize {
        if c == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    /// Containment of Young diagrams: `x_i <= y_i` for all `i`.
    pub fn leq(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// `x(c)`: the first `c` columns, `x(c)_i = min(x_i, c)`.
    pub fn truncate_columns(&self, c: u32) -> Partition {
        let parts = self
            .parts
            .iter()
            .map(|&p| p.min(c))
            .take_while(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// Parts padded with zeros to exactly `len` entries. Panics if the
    /// partition has more than `len` parts.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        assert!(self.parts.len() <= len, "{self} does not fit in {len} rows");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn conjugate(x: &Partition) -> Partition {
    x.conjugate()
}

pub fn leq(x: &Partition, y: &Partition) -> bool {
    x.leq(y)
}

pub fn truncate_columns(x: &Partition, c: u32) -> Partition {
    x.truncate_columns(c)
}

/// Minimal elements of `xs` under containment, deduplicated and sorted in
/// descending lexicographic order.
pub fn minimalize<'a, I>(xs: I) -> Vec<Partition>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let mut all: Vec<Partition> = xs.into_iter().cloned().collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.dedup();
    let mut out: Vec<Partition> = all
        .iter()
        .filter(|x| !all.iter().any(|y| y != *x && y.leq(x)))
        .cloned()
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// All partitions with at most `rows` parts, each at most `cols`.
///
/// Order: by size, then descending lexicographic within a size. There are
/// `binomial(rows + cols, rows)` of them.
pub fn enumerate_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fill_box(rows, cols, &mut cur, &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
    out
}

fn fill_box(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if cur.len() == rows {
        out.push(Partition::new(cur.clone()).expect("generated weakly decreasing"));
        return;
    }
    for v in 0..=max {
        cur.push(v);
        fill_box(rows, v, cur, out);
        cur.pop();
    }
}

/// Partitions `y` in `P_rows` with `lower <= y` and `|y| <= max_size`.
pub(crate) fn enumerate_above(lower: &Partition, rows: usize, max_size: u64) -> Vec<Partition> {
    fn go(
        lower: &[u32],
        i: usize,
        cap: u32,
        budget: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == lower.len() {
            out.push(Partition::new(cur.clone()).expect("weakly decreasing"));
            return;
        }
        let lo = lower[i];
        if lo > cap {
            return;
        }
        let rest_min: u64 = lower[i + 1..].iter().map(|&v| v as u64).sum();
        for v in lo..=cap {
            let used = v as u64 + rest_min;
            if used > budget {
                break;
            }
            cur.push(v);
            go(lower, i + 1, v, budget - v as u64, cur, out);
            cur.pop();
        }
    }
    if lower.len() > rows || lower.size() > max_size {
        return Vec::new();
    }
    let lower_parts = lower.padded(rows);
    let cap = u32::try_from(max_size).unwrap_or(u32::MAX);
    let mut out = Vec::new();
    go(&lower_parts, 0, cap, max_size, &mut Vec::new(), &mut out);
    out
}

/// `(s + a_1, ..., s + a_r, b_1, b_2, ...)`: an `r x s` rectangle with `a`
/// glued on the right and `b` underneath.
pub fn attach(r: usize, s: u32, a: &Partition, b: &Partition) -> Result<Partition> {
    if r == 0 || s == 0 || a.len() > r || b.get(0) > s {
        return Err(Error::AttachPrecondition {
            r,
            s: s as usize,
            a: a.clone(),
            b: b.clone(),
        });
    }
    let mut parts: Vec<u32> = (0..r).map(|i| s + a.get(i)).collect();
    parts.extend_from_slice(b.parts());
    Partition::new(parts)
}

/// One text line per row, one `#` per box, rows left-aligned.
pub fn young_diagram(x: &Partition) -> String {
    if x.is_zero() {
        return "(empty)".to_string();
    }
    x.parts()
        .iter()
        .map(|&p| "#".repeat(p as usize))
        .collect::<Vec<_>>()
        .join("\n")
}

/// A weakly decreasing integer vector of fixed length; indexes an
/// irreducible `GL_N` representation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(entries));
        }
        Ok(DominantWeight { entries })
    }

    /// `x` padded with zeros to length `len`.
    pub fn from_partition(x: &Partition, len: usize) -> Result<Self> {
        if x.len() > len {
            return Err(Error::TooManyParts {
                partition: x.clone(),
                parts: x.len(),
                max: len,
            });
        }
        Ok(DominantWeight {
            entries: x.padded(len).into_iter().map(i64::from).collect(),
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// `(-l_N, ..., -l_1)`.
    pub fn dual(&self) -> DominantWeight {
        DominantWeight {
            entries: self.entries.iter().rev().map(|&v| -v).collect(),
        }
    }

    /// Adds `k` to every entry (a twist by `det^k`).
    pub fn shifted(&self, k: i64) -> DominantWeight {
        DominantWeight {
            entries: self.entries.iter().map(|&v| v + k).collect(),
        }
    }

    /// The underlying partition when every entry is nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        let parts: Option<Vec<u32>> = self
            .entries
            .iter()
            .map(|&v| u32::try_from(v).ok())
            .collect();
        Partition::new(parts?).ok()
    }
}

pub fn dual_weight(l: &DominantWeight) -> DominantWeight {
    l.dual()
}

impl PartialOrd for DominantWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DominantWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        DominantWeight::new(v)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Vec<i64> {
        w.entries
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
pub(crate) fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}
