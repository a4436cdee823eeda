//! Semistable points of Schubert varieties for the torus action with respect
//! to `L(n ω_r)`, `gcd(r, n) = 1`.
//!
//! The minimal Schubert variety with semistable points is indexed by
//! `a_i = ceil(i n / r)`, and `X(w)` has semistable points exactly when
//! `w >= (a_1, ..., a_r)`. [`semistable_witness`] checks the same property
//! from the definition: a torus-invariant standard monomial of degree `d` in
//! the Plücker coordinates is a weakly increasing chain of `d n` tuples below
//! `w` in which every value of `[1, n]` occurs exactly `d r` times.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::grassmannian::{ColumnTuple, Grassmannian, Interval};
use crate::{Error, Result};

/// `w_{r,n} = (a_1, ..., a_r)` with `a_i` the least integer such that
/// `a_i r >= i n`.
pub fn minimal_semistable(ctx: &Grassmannian) -> Result<ColumnTuple> {
    ctx.require_coprime()?;
    let (r, n) = (ctx.r(), ctx.n());
    let entries = (1..=r).map(|i| (i * n).div_ceil(r)).collect();
    Ok(ColumnTuple::from_raw(entries, n))
}

/// Whether `X(w)` contains semistable points.
pub fn is_semistable_nonempty(w: &ColumnTuple, ctx: &Grassmannian) -> Result<bool> {
    check_context(w, ctx)?;
    let minimal = minimal_semistable(ctx)?;
    Ok(minimal.is_below(w))
}

fn check_context(w: &ColumnTuple, ctx: &Grassmannian) -> Result<()> {
    if w.r() != ctx.r() || w.n() != ctx.n() {
        return Err(Error::ContextMismatch);
    }
    Ok(())
}

/// A torus-invariant standard monomial that does not vanish on `X(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistableWitness {
    chain: Vec<ColumnTuple>,
    degree: usize,
}

impl SemistableWitness {
    pub fn chain(&self) -> &[ColumnTuple] {
        &self.chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Re-checks every witness invariant against the target `w`.
    pub fn certifies(&self, w: &ColumnTuple) -> bool {
        let n = w.n();
        if self.degree == 0 || self.chain.len() != self.degree * n {
            return false;
        }
        if !self
            .chain
            .iter()
            .all(|u| u.same_context(w) && u.is_below(w))
        {
            return false;
        }
        if !self.chain.windows(2).all(|p| p[0].is_below(&p[1])) {
            return false;
        }
        let mut counts = vec![0usize; n + 1];
        for u in &self.chain {
            for &v in u.entries() {
                counts[v] += 1;
            }
        }
        counts[1..].iter().all(|&c| c == self.degree * w.r())
    }
}

/// Searches for a degree-`degree` witness that `X(w)` has semistable points.
///
/// Candidates are tried in lexicographic order, so the returned chain is
/// deterministic. `None` means no such chain exists in this degree.
pub fn semistable_witness(
    w: &ColumnTuple,
    ctx: &Grassmannian,
    degree: usize,
) -> Result<Option<SemistableWitness>> {
    check_context(w, ctx)?;
    ctx.require_coprime()?;
    if degree == 0 {
        return Ok(None);
    }
    let mut search = WitnessSearch {
        target: w,
        length: degree * ctx.n(),
        per_value: degree * ctx.r(),
        counts: vec![0; ctx.n() + 1],
        chain: Vec::with_capacity(degree * ctx.n()),
        dead: BTreeSet::new(),
    };
    let bottom = ctx.bottom();
    if !bottom.is_below(w) {
        return Ok(None);
    }
    Ok(search.extend(&bottom).then_some(SemistableWitness {
        chain: search.chain,
        degree,
    }))
}

struct WitnessSearch<'a> {
    target: &'a ColumnTuple,
    length: usize,
    per_value: usize,
    // counts[v] = occurrences of v so far; index 0 unused
    counts: Vec<usize>,
    chain: Vec<ColumnTuple>,
    // (lower bound, counts) states already shown to be dead ends
    dead: BTreeSet<(Vec<usize>, Vec<usize>)>,
}

impl WitnessSearch<'_> {
    fn extend(&mut self, floor: &ColumnTuple) -> bool {
        if self.chain.len() == self.length {
            return true;
        }
        if !self.feasible(floor) {
            return false;
        }
        let key = (floor.entries().to_vec(), self.counts.clone());
        if self.dead.contains(&key) {
            return false;
        }
        let candidates = Interval::from_bounds(floor, self.target);
        for next in candidates {
            if next
                .entries()
                .iter()
                .any(|&v| self.counts[v] == self.per_value)
            {
                continue;
            }
            for &v in next.entries() {
                self.counts[v] += 1;
            }
            self.chain.push(next.clone());
            if self.extend(&next) {
                return true;
            }
            self.chain.pop();
            for &v in next.entries() {
                self.counts[v] -= 1;
            }
        }
        self.dead.insert(key);
        false
    }

    // Every remaining tuple lies between `floor` and the target, holds each
    // value at most once, and holds values <= x only in positions whose floor
    // is <= x (values >= x only where the target is >= x).
    fn feasible(&self, floor: &ColumnTuple) -> bool {
        let slots = self.length - self.chain.len();
        let n = self.target.n();
        let need = |v: usize| self.per_value - self.counts[v];
        if (1..=n).any(|v| need(v) > slots) {
            return false;
        }
        let mut below = 0;
        for x in 1..=n {
            below += need(x);
            let open = floor.entries().iter().filter(|&&f| f <= x).count();
            if below > slots * open {
                return false;
            }
        }
        let mut above = 0;
        for x in (1..=n).rev() {
            above += need(x);
            let open = self.target.entries().iter().filter(|&&b| b >= x).count();
            if above > slots * open {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: usize, n: usize) -> Grassmannian {
        Grassmannian::new(r, n).unwrap()
    }

    #[test]
    fn minimal_elements() {
        assert_eq!(
            minimal_semistable(&g(4, 9)).unwrap().entries(),
            &[3, 5, 7, 9]
        );
        assert_eq!(minimal_semistable(&g(1, 6)).unwrap().entries(), &[6]);
        assert_eq!(minimal_semistable(&g(2, 5)).unwrap().entries(), &[3, 5]);
        assert_eq!(minimal_semistable(&g(3, 7)).unwrap().entries(), &[3, 5, 7]);
        assert_eq!(
            minimal_semistable(&g(2, 4)),
            Err(Error::NotCoprime { r: 2, n: 4 })
        );
    }

    #[test]
    fn semistability() {
        let ctx = g(4, 9);
        let t = |e: &[usize]| ctx.tuple(e.to_vec()).unwrap();
        assert!(is_semistable_nonempty(&t(&[3, 5, 8, 9]), &ctx).unwrap());
        assert!(!is_semistable_nonempty(&t(&[2, 3, 8, 9]), &ctx).unwrap());
        assert!(is_semistable_nonempty(&t(&[3, 5, 7, 9]), &ctx).unwrap());
        let non = g(2, 4);
        assert!(is_semistable_nonempty(&non.top(), &non).is_err());
        assert_eq!(
            is_semistable_nonempty(&g(4, 11).top(), &ctx),
            Err(Error::ContextMismatch)
        );
    }

    #[test]
    fn witnesses_g25() {
        let ctx = g(2, 5);
        let w = ctx.tuple(vec![3, 5]).unwrap();
        let witness = semistable_witness(&w, &ctx, 1).unwrap().unwrap();
        assert!(witness.certifies(&w));
        assert_eq!(witness.chain().len(), 5);

        let w = ctx.tuple(vec![2, 5]).unwrap();
        assert!(semistable_witness(&w, &ctx, 1).unwrap().is_none());
        assert!(semistable_witness(&w, &ctx, 2).unwrap().is_none());
    }

    #[test]
    fn witness_is_deterministic() {
        let ctx = g(3, 7);
        let a = semistable_witness(&ctx.top(), &ctx, 1).unwrap();
        let b = semistable_witness(&ctx.top(), &ctx, 1).unwrap();
        assert_eq!(a, b);
        assert!(a.unwrap().certifies(&ctx.top()));
    }

    #[test]
    fn certifies_rejects_bad_chains() {
        let ctx = g(2, 5);
        let w = ctx.top();
        let t = |e: &[usize]| ctx.tuple(e.to_vec()).unwrap();
        let witness = SemistableWitness {
            chain: vec![t(&[1, 3]), t(&[2, 4]), t(&[1, 4]), t(&[2, 5]), t(&[3, 5])],
            degree: 1,
        };
        assert!(!witness.certifies(&w));
        let witness = SemistableWitness {
            chain: vec![t(&[1, 2]), t(&[1, 2]), t(&[1, 4]), t(&[3, 5]), t(&[4, 5])],
            degree: 1,
        };
        assert!(!witness.certifies(&w));
    }
}
