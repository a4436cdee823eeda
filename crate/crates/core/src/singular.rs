//! Singular loci of Schubert varieties in the Grassmannian.
//!
//! The irreducible components of `Sing X(w)` are the Schubert varieties
//! obtained from the Young diagram of `w` by removing the hook between two
//! consecutive inner corners. Two independent routes compute them:
//!
//! - [`singular_components`] works on the run-length encoding of the shape;
//! - [`singular_components_via_runs`] edits the tuple directly, one hook row
//!   at a time.
//!
//! [`singular_components_oracle`] ignores both and goes through the
//! stabilizer of `X(w)`: the smooth locus is the `P_w`-orbit of `e_w`, so its
//! torus-fixed points are the `W_J`-orbit of `w`, and the components are the
//! maximal fixed points outside that orbit.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::grassmannian::PartitionShape;
use crate::grassmannian::{from_partition, run_length, to_partition, ColumnTuple, Interval};
use crate::words::parabolic_orbit;

/// The descent set `J'(w)` and its complement `J(w)` in `[1, n - 1]`.
/// `P_w = P_J` is the stabilizer of `X(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerSet {
    pub j_prime: BTreeSet<usize>,
    pub j: BTreeSet<usize>,
}

/// `j ∈ J'(w)` iff `j = b_m` and `b_{m+1} != j + 1`, with `b_{r+1} = n + 1`.
pub fn stabilizer_descents(w: &ColumnTuple) -> StabilizerSet {
    let n = w.n();
    let b = w.entries();
    let j_prime: BTreeSet<usize> = b
        .iter()
        .enumerate()
        .filter(|&(m, &bm)| bm < n && b.get(m + 1).copied().unwrap_or(n + 1) != bm + 1)
        .map(|(_, &bm)| bm)
        .collect();
    let j = (1..n).filter(|i| !j_prime.contains(i)).collect();
    StabilizerSet { j_prime, j }
}

/// Components of the singular locus, each tagged with the row `j` whose hook
/// was removed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularLocusReport {
    pub components: Vec<ColumnTuple>,
    pub hook_rows: Vec<usize>,
}

impl SingularLocusReport {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_set(&self) -> BTreeSet<ColumnTuple> {
        self.components.iter().cloned().collect()
    }
}

/// Hook removal on the run-length encoding `(p_1^{q_1}, ..., p_k^{q_k})`:
/// the `i`-th component replaces `p_i^{q_i}, p_{i+1}^{q_{i+1}}` by
/// `(p_i - 1)^{q_i + 1}, p_{i+1}^{q_{i+1} - 1}`, for `1 <= i <= k - 1`.
pub fn singular_components(w: &ColumnTuple) -> SingularLocusReport {
    let shape = to_partition(w);
    let runs = run_length(&shape);
    let runs = runs.runs();
    let zeros = shape.parts().iter().take_while(|&&p| p == 0).count();

    let mut report = SingularLocusReport::default();
    let mut rows_before = zeros;
    for i in 0..runs.len().saturating_sub(1) {
        let (p, q) = runs[i];
        let (p_next, q_next) = runs[i + 1];
        let mut parts = Vec::with_capacity(w.r());
        parts.resize(zeros, 0);
        for &(pl, ql) in &runs[..i] {
            parts.extend(core::iter::repeat_n(pl, ql));
        }
        parts.extend(core::iter::repeat_n(p - 1, q + 1));
        parts.extend(core::iter::repeat_n(p_next, q_next - 1));
        for &(pl, ql) in &runs[i + 2..] {
            parts.extend(core::iter::repeat_n(pl, ql));
        }
        debug_assert_eq!(parts.len(), w.r());

        rows_before += q;
        report
            .components
            .push(from_partition(&PartitionShape::from_raw(parts, w.n())));
        report.hook_rows.push(rows_before + 1);
    }
    report
}

/// Hook removal directly on the tuple. A hook row is `j >= 2` with
/// `b_j >= b_{j-1} + 2` and `b_{j-1} > j - 1`. With `t` the start of the
/// consecutive run ending at `b_{j-1}`, the component is
/// `(b_1, ..., b_{t-1}, b_t - 1, ..., b_{j-1} - 1, b_{j-1}, b_{j+1}, ..., b_r)`.
pub fn singular_components_via_runs(w: &ColumnTuple) -> SingularLocusReport {
    let b = w.entries();
    let mut report = SingularLocusReport::default();
    // 0-based: rows j-1 and j become indices j-2 and j-1
    for j in 2..=b.len() {
        let (below, here) = (b[j - 2], b[j - 1]);
        if here < below + 2 || below < j {
            continue;
        }
        let mut t = j - 1;
        while t > 1 && b[t - 1] == b[t - 2] + 1 {
            t -= 1;
        }
        let mut entries = b.to_vec();
        for e in &mut entries[t - 1..j - 1] {
            *e -= 1;
        }
        entries[j - 1] = below;
        report
            .components
            .push(ColumnTuple::from_raw(entries, w.n()));
        report.hook_rows.push(j);
    }
    report
}

/// Torus-fixed points of the smooth locus of `X(w)`: the orbit of `w` under
/// the parabolic subgroup `W_{J(w)}`.
pub fn smooth_fixed_points_oracle(w: &ColumnTuple) -> BTreeSet<ColumnTuple> {
    let stabilizer = stabilizer_descents(w);
    parabolic_orbit(&stabilizer.j, w).expect("J(w) lies in [1, n - 1]")
}

/// Maximal torus-fixed points of `X(w)` outside its smooth locus.
pub fn singular_components_oracle(w: &ColumnTuple) -> BTreeSet<ColumnTuple> {
    let smooth = smooth_fixed_points_oracle(w);
    let bottom = w.context().bottom();
    let singular: Vec<ColumnTuple> = Interval::from_bounds(&bottom, w)
        .filter(|v| !smooth.contains(v))
        .collect();
    singular
        .iter()
        .filter(|v| !singular.iter().any(|u| u != *v && v.is_below(u)))
        .cloned()
        .collect()
}
