//! Smoothness of the torus quotient of `X(w)` for coprime `(r, n)`.
//!
//! For `w >= w_{r,n}` the quotient is smooth iff every semistable point of
//! `X(w)` is a smooth point, i.e. iff no singular component `v_i` of `X(w)`
//! satisfies `v_i >= w_{r,n}`. The same condition reads off the tuple
//! directly: whenever `b_j >= b_{j-1} + 2`, we need `a_j >= b_{j-1} + 1`.
//! [`analyze`] evaluates both and refuses to report if they disagree.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::grassmannian::{ColumnTuple, Grassmannian};
use crate::semistable::{is_semistable_nonempty, minimal_semistable};
use crate::singular::singular_components;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Smooth,
    NotSmooth,
    /// `X(w)` has no semistable points, so the quotient is empty.
    NoSemistablePoints,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Smooth => "smooth",
            Verdict::NotSmooth => "not_smooth",
            Verdict::NoSemistablePoints => "no_semistable_points",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "smooth" => Some(Verdict::Smooth),
            "not_smooth" => Some(Verdict::NotSmooth),
            "no_semistable_points" => Some(Verdict::NoSemistablePoints),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one criterion together with the evidence against it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion<T> {
    pub holds: bool,
    pub witnesses: Vec<T>,
}

impl<T> Criterion<T> {
    fn from_witnesses(witnesses: Vec<T>) -> Self {
        Criterion {
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

fn check_context(w: &ColumnTuple, ctx: &Grassmannian) -> Result<()> {
    if w.r() != ctx.r() || w.n() != ctx.n() {
        return Err(Error::ContextMismatch);
    }
    ctx.require_coprime()
}

/// No singular component of `X(w)` contains `X(w_{r,n})`. Witnesses are the
/// components that do.
pub fn criterion_components(w: &ColumnTuple, ctx: &Grassmannian) -> Result<Criterion<ColumnTuple>> {
    check_context(w, ctx)?;
    let minimal = minimal_semistable(ctx)?;
    let dominating = singular_components(w)
        .components
        .into_iter()
        .filter(|v| minimal.is_below(v))
        .collect();
    Ok(Criterion::from_witnesses(dominating))
}

/// Every row `j` (with `b_0 = 0`) where `b_j >= b_{j-1} + 2` has
/// `a_j >= b_{j-1} + 1`. Witnesses are the violating rows.
pub fn criterion_runs(w: &ColumnTuple, ctx: &Grassmannian) -> Result<Criterion<usize>> {
    check_context(w, ctx)?;
    let minimal = minimal_semistable(ctx)?;
    let (b, a) = (w.entries(), minimal.entries());
    let violations = (0..b.len())
        .filter(|&i| {
            let prev = if i == 0 { 0 } else { b[i - 1] };
            b[i] >= prev + 2 && a[i] < prev + 1
        })
        .map(|i| i + 1)
        .collect();
    Ok(Criterion::from_witnesses(violations))
}

/// Everything [`analyze`] found out about one Schubert variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub w: ColumnTuple,
    pub minimal: ColumnTuple,
    pub semistable_nonempty: bool,
    pub verdict: Verdict,
    pub components: Vec<ColumnTuple>,
    pub criterion_components: Criterion<ColumnTuple>,
    pub criterion_runs: Criterion<usize>,
}

pub fn analyze(w: &ColumnTuple, ctx: &Grassmannian) -> Result<SmoothnessReport> {
    check_context(w, ctx)?;
    let minimal = minimal_semistable(ctx)?;
    let semistable_nonempty = is_semistable_nonempty(w, ctx)?;
    let by_components = criterion_components(w, ctx)?;
    let by_runs = criterion_runs(w, ctx)?;

    let verdict = if !semistable_nonempty {
        Verdict::NoSemistablePoints
    } else if by_components.holds != by_runs.holds {
        return Err(Error::CriteriaDisagreement(format!(
            "w = {w}: components criterion {} but row criterion {}",
            by_components.holds, by_runs.holds
        )));
    } else if by_components.holds {
        Verdict::Smooth
    } else {
        Verdict::NotSmooth
    };

    Ok(SmoothnessReport {
        w: w.clone(),
        minimal,
        semistable_nonempty,
        verdict,
        components: singular_components(w).components,
        criterion_components: by_components,
        criterion_runs: by_runs,
    })
}
