//! Weyl group side of `I(r, n)`: reduced words, one-line permutations and the
//! action of simple reflections on `r`-subsets.
//!
//! `s_j` is the adjacent transposition `(j, j+1)` of `S_n`. Left
//! multiplication by `s_j` swaps the values `j` and `j + 1` in one-line
//! notation, so on the `r`-subset `{w(1), ..., w(r)}` it swaps membership of
//! `j` and `j + 1`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::grassmannian::ColumnTuple;
use crate::{Error, Result};

/// A word in the simple reflections, stored as indices `j` of `s_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{j}")?;
        }
        Ok(())
    }
}

/// A permutation of `[1, n]` in one-line notation `(w(1), ..., w(n))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// The first `r` images, sorted: the point of `I(r, n)` this permutation
    /// maps to modulo `S_r x S_{n-r}`.
    pub fn sorted_prefix(&self, r: usize) -> Vec<usize> {
        let mut prefix = self.0[..r].to_vec();
        prefix.sort_unstable();
        prefix
    }
}

/// `(s_{b_1-1} ... s_1)(s_{b_2-1} ... s_2) ... (s_{b_r-1} ... s_r)`, with a
/// block empty whenever `b_i - 1 < i`.
pub fn canonical_reduced_word(w: &ColumnTuple) -> ReducedWord {
    let mut letters = Vec::new();
    for (i, &b) in w.entries().iter().enumerate() {
        let row = i + 1;
        letters.extend((row..b).rev());
    }
    ReducedWord(letters)
}

/// The product of the letters read left to right, as a permutation of `[1, n]`.
pub fn word_to_permutation(word: &ReducedWord, n: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = (1..=n).collect();
    for &j in &word.0 {
        if j < 1 || j >= n {
            return Err(Error::ReflectionOutOfRange { index: j, n });
        }
        // right multiplication by s_j swaps positions j and j+1
        images.swap(j - 1, j);
    }
    Ok(Permutation(images))
}

/// The minimal length coset representative of `w`: the tuple followed by its
/// complement, both increasing.
pub fn tuple_to_min_coset_perm(w: &ColumnTuple) -> Permutation {
    let mut images = w.entries().to_vec();
    images.extend((1..=w.n()).filter(|v| !w.contains(*v)));
    Permutation(images)
}

/// Left multiplication by `s_j` on the `r`-subset underlying `w`.
pub fn reflect_subset(j: usize, w: &ColumnTuple) -> Result<ColumnTuple> {
    let n = w.n();
    if j < 1 || j >= n {
        return Err(Error::ReflectionOutOfRange { index: j, n });
    }
    Ok(reflect_unchecked(j, w))
}

fn reflect_unchecked(j: usize, w: &ColumnTuple) -> ColumnTuple {
    match (w.contains(j), w.contains(j + 1)) {
        (true, false) | (false, true) => {
            let mut entries: Vec<usize> = w
                .entries()
                .iter()
                .map(|&b| match b {
                    b if b == j => j + 1,
                    b if b == j + 1 => j,
                    b => b,
                })
                .collect();
            entries.sort_unstable();
            ColumnTuple::from_raw(entries, w.n())
        }
        _ => w.clone(),
    }
}

/// Orbit of `w` under the parabolic subgroup generated by `{s_j : j ∈ J}`.
pub fn parabolic_orbit(
    generators: &BTreeSet<usize>,
    w: &ColumnTuple,
) -> Result<BTreeSet<ColumnTuple>> {
    if let Some(&j) = generators.iter().find(|&&j| j < 1 || j >= w.n()) {
        return Err(Error::ReflectionOutOfRange { index: j, n: w.n() });
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        for &j in generators {
            let next = reflect_unchecked(j, &v);
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}
