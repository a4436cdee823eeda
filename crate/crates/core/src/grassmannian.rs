//! Index sets of Schubert varieties: tuples of `I(r, n)`, their partition
//! shapes, the componentwise Bruhat order and interval enumeration.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A validated pair `(r, n)` with `1 <= r < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grassmannian {
    r: usize,
    n: usize,
    coprime: bool,
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Grassmannian {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r < 1 || n <= r {
            return Err(Error::InvalidContext { r, n });
        }
        Ok(Grassmannian {
            r,
            n,
            coprime: gcd(r, n) == 1,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_coprime(&self) -> bool {
        self.coprime
    }

    /// Fails with [`Error::NotCoprime`] unless `gcd(r, n) = 1`.
    pub fn require_coprime(&self) -> Result<()> {
        if self.coprime {
            Ok(())
        } else {
            Err(Error::NotCoprime {
                r: self.r,
                n: self.n,
            })
        }
    }

    /// The identity coset `(1, 2, ..., r)`, the point Schubert variety.
    pub fn bottom(&self) -> ColumnTuple {
        ColumnTuple {
            entries: (1..=self.r).collect(),
            n: self.n,
        }
    }

    /// `(n - r + 1, ..., n)`, indexing the whole Grassmannian.
    pub fn top(&self) -> ColumnTuple {
        ColumnTuple {
            entries: (self.n - self.r + 1..=self.n).collect(),
            n: self.n,
        }
    }

    /// Every tuple of `I(r, n)` in lexicographic order.
    pub fn tuples(&self) -> Interval {
        Interval::new(self.bottom(), self.top())
    }

    pub fn tuple(&self, entries: Vec<usize>) -> Result<ColumnTuple> {
        ColumnTuple::new(self, entries)
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.r, self.n)
    }
}

/// A strictly increasing tuple `b_1 < ... < b_r` with entries in `[1, n]`.
///
/// The derived `Ord` is lexicographic and is only used for deterministic
/// ordering of collections; the Bruhat order is [`ColumnTuple::is_below`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnTuple {
    entries: Vec<usize>,
    n: usize,
}

impl ColumnTuple {
    pub fn new(ctx: &Grassmannian, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != ctx.r {
            return Err(Error::MalformedTuple(format!(
                "expected {} entries, got {}",
                ctx.r,
                entries.len()
            )));
        }
        if let Some(&e) = entries.iter().find(|&&e| e < 1 || e > ctx.n) {
            return Err(Error::MalformedTuple(format!(
                "entry {e} is outside [1, {}]",
                ctx.n
            )));
        }
        if let Some(w) = entries.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::MalformedTuple(format!(
                "entries must be strictly increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(ColumnTuple { entries, n: ctx.n })
    }

    // Callers guarantee the invariants.
    pub(crate) fn from_raw(entries: Vec<usize>, n: usize) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(entries.iter().all(|&e| 1 <= e && e <= n));
        ColumnTuple { entries, n }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn context(&self) -> Grassmannian {
        Grassmannian::new(self.r(), self.n).expect("tuple carries a valid context")
    }

    /// `b_i` with `i` counted from 1.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn contains(&self, value: usize) -> bool {
        self.entries.binary_search(&value).is_ok()
    }

    pub fn same_context(&self, other: &ColumnTuple) -> bool {
        self.n == other.n && self.r() == other.r()
    }

    /// Componentwise `self <= other`. Both tuples must come from the same
    /// Grassmannian.
    pub fn is_below(&self, other: &ColumnTuple) -> bool {
        debug_assert!(self.same_context(other));
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for ColumnTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Bruhat order on minimal coset representatives: `u <= v` componentwise.
pub fn bruhat_leq(u: &ColumnTuple, v: &ColumnTuple) -> Result<bool> {
    if !u.same_context(v) {
        return Err(Error::ContextMismatch);
    }
    Ok(u.is_below(v))
}

/// Young diagram of a Schubert variety, rows stored bottom to top:
/// `0 <= parts[0] <= ... <= parts[r-1] <= n - r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionShape {
    parts: Vec<usize>,
    n: usize,
}

impl PartitionShape {
    pub fn new(ctx: &Grassmannian, parts: Vec<usize>) -> Result<Self> {
        if parts.len() != ctx.r {
            return Err(Error::MalformedShape(format!(
                "expected {} rows, got {}",
                ctx.r,
                parts.len()
            )));
        }
        let width = ctx.n - ctx.r;
        if let Some(&p) = parts.iter().find(|&&p| p > width) {
            return Err(Error::MalformedShape(format!(
                "row of length {p} exceeds the box width {width}"
            )));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::MalformedShape("rows must be non-decreasing".into()));
        }
        Ok(PartitionShape { parts, n: ctx.n })
    }

    pub(crate) fn from_raw(parts: Vec<usize>, n: usize) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p + parts.len() <= n));
        PartitionShape { parts, n }
    }

    /// Row lengths, row 1 (the shortest) first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }
}

/// Nonzero parts of a shape grouped as `(part, multiplicity)` with strictly
/// increasing parts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunEncoding {
    runs: Vec<(usize, usize)>,
}

impl RunEncoding {
    pub fn runs(&self) -> &[(usize, usize)] {
        &self.runs
    }

    /// Number of distinct nonzero parts.
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}

/// `λ_i = b_i - i`.
pub fn to_partition(w: &ColumnTuple) -> PartitionShape {
    let parts = w
        .entries
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (i + 1))
        .collect();
    PartitionShape::from_raw(parts, w.n)
}

/// `b_i = λ_i + i`.
pub fn from_partition(shape: &PartitionShape) -> ColumnTuple {
    let entries = shape
        .parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + i + 1)
        .collect();
    ColumnTuple::from_raw(entries, shape.n)
}

pub fn run_length(shape: &PartitionShape) -> RunEncoding {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for &p in shape.parts.iter().filter(|&&p| p > 0) {
        match runs.last_mut() {
            Some((last, count)) if *last == p => *count += 1,
            _ => runs.push((p, 1)),
        }
    }
    RunEncoding { runs }
}

/// All tuples `v` of `I(r, n)` with `lo <= v <= hi` componentwise, in
/// lexicographic order.
pub fn enumerate_interval(lo: &ColumnTuple, hi: &ColumnTuple) -> Result<Interval> {
    if !lo.same_context(hi) {
        return Err(Error::ContextMismatch);
    }
    Ok(Interval::new(lo.clone(), hi.clone()))
}

/// Iterator over a Bruhat interval. See [`enumerate_interval`].
#[derive(Clone, Debug)]
pub struct Interval {
    lo: Vec<usize>,
    hi: Vec<usize>,
    n: usize,
    next: Option<Vec<usize>>,
}

impl Interval {
    fn new(lo: ColumnTuple, hi: ColumnTuple) -> Self {
        let next = lo.is_below(&hi).then(|| lo.entries.clone());
        Interval {
            lo: lo.entries,
            hi: hi.entries,
            n: lo.n,
            next,
        }
    }

    pub(crate) fn from_bounds(lo: &ColumnTuple, hi: &ColumnTuple) -> Self {
        Interval::new(lo.clone(), hi.clone())
    }

    // Lexicographic successor. With `lo` and `hi` strictly increasing, once
    // position `i` can be bumped the greedy fill of the suffix always stays
    // below `hi`.
    fn advance(&self, cur: &[usize]) -> Option<Vec<usize>> {
        let i = (0..cur.len()).rev().find(|&i| cur[i] < self.hi[i])?;
        let mut out = cur.to_vec();
        out[i] += 1;
        for k in i + 1..out.len() {
            out[k] = self.lo[k].max(out[k - 1] + 1);
            debug_assert!(out[k] <= self.hi[k]);
        }
        Some(out)
    }
}

impl Iterator for Interval {
    type Item = ColumnTuple;

    fn next(&mut self) -> Option<ColumnTuple> {
        let cur = self.next.take()?;
        self.next = self.advance(&cur);
        Some(ColumnTuple::from_raw(cur, self.n))
    }
}
