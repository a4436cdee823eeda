//! Brute-force oracles for the values the library computes more cleverly.

use gitquot_core::*;

fn g(r: usize, n: usize) -> Grassmannian {
    Grassmannian::new(r, n).unwrap()
}

/// All strictly increasing r-subsets of [1, n], by plain recursion.
fn all_subsets(r: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, r, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, r, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn interval_count_g49() {
    let mut count = 0;
    for b1 in 3..=6 {
        for b2 in 5..=7 {
            for b3 in 7..=8 {
                for b4 in 9..=9 {
                    if b1 < b2 && b2 < b3 && b3 < b4 {
                        count += 1;
                    }
                }
            }
        }
    }
    assert_eq!(count, 14);

    let ctx = g(4, 9);
    let lo = ctx.tuple(vec![3, 5, 7, 9]).unwrap();
    let hi = ctx.tuple(vec![6, 7, 8, 9]).unwrap();
    assert_eq!(enumerate_interval(&lo, &hi).unwrap().count(), 14);
}

#[test]
fn interval_matches_filtered_subsets() {
    for n in 2..=9 {
        for r in 1..n {
            let ctx = g(r, n);
            let subsets = all_subsets(r, n);
            assert_eq!(
                ctx.tuples()
                    .map(|t| t.entries().to_vec())
                    .collect::<Vec<_>>(),
                subsets
            );
            // a handful of intervals with nontrivial bounds
            for lo in subsets.iter().step_by(5) {
                for hi in subsets.iter().step_by(7) {
                    let expected: Vec<_> = subsets
                        .iter()
                        .filter(|v| {
                            v.iter().zip(lo).all(|(a, b)| a >= b)
                                && v.iter().zip(hi).all(|(a, b)| a <= b)
                        })
                        .cloned()
                        .collect();
                    let lo_t = ctx.tuple(lo.clone()).unwrap();
                    let hi_t = ctx.tuple(hi.clone()).unwrap();
                    let got: Vec<_> = enumerate_interval(&lo_t, &hi_t)
                        .unwrap()
                        .map(|t| t.entries().to_vec())
                        .collect();
                    assert_eq!(got, expected, "G({r},{n}) [{lo:?}, {hi:?}]");
                }
            }
        }
    }
}

#[test]
fn minimal_semistable_by_linear_search() {
    for n in 2..=15 {
        for r in 1..n {
            let ctx = g(r, n);
            if !ctx.is_coprime() {
                continue;
            }
            let expected: Vec<usize> = (1..=r)
                .map(|i| (1..).find(|&a| a * r >= i * n).unwrap())
                .collect();
            let minimal = minimal_semistable(&ctx).unwrap();
            assert_eq!(minimal.entries(), &expected[..], "G({r},{n})");
            assert_eq!(minimal.get(r), n);
            for (i, &a) in expected.iter().enumerate() {
                assert!(a >= i + 2);
            }
        }
    }
    assert_eq!(minimal_semistable(&g(2, 5)).unwrap().entries(), &[3, 5]);
    assert_eq!(minimal_semistable(&g(3, 7)).unwrap().entries(), &[3, 5, 7]);
}

/// Every weakly increasing chain of `len` tuples below `w`, without pruning.
fn exists_chain(w: &[usize], n: usize, len: usize, per_value: usize) -> bool {
    let r = w.len();
    let below: Vec<Vec<usize>> = all_subsets(r, n)
        .into_iter()
        .filter(|v| v.iter().zip(w).all(|(a, b)| a <= b))
        .collect();
    fn go(
        below: &[Vec<usize>],
        prev: Option<&Vec<usize>>,
        left: usize,
        counts: &mut Vec<usize>,
        per_value: usize,
    ) -> bool {
        if left == 0 {
            return counts[1..].iter().all(|&c| c == per_value);
        }
        for u in below {
            if let Some(p) = prev {
                if !p.iter().zip(u).all(|(a, b)| a <= b) {
                    continue;
                }
            }
            for &v in u {
                counts[v] += 1;
            }
            let ok = go(below, Some(u), left - 1, counts, per_value);
            for &v in u {
                counts[v] -= 1;
            }
            if ok {
                return true;
            }
        }
        false
    }
    go(&below, None, len, &mut vec![0; n + 1], per_value)
}

#[test]
fn witness_search_matches_unpruned_search() {
    for (r, n) in [(1, 2), (1, 3), (2, 3), (2, 5), (3, 4), (3, 5)] {
        let ctx = g(r, n);
        for w in ctx.tuples() {
            let expected = exists_chain(w.entries(), n, n, r);
            let found = semistable_witness(&w, &ctx, 1).unwrap();
            assert_eq!(found.is_some(), expected, "G({r},{n}) w = {w}");
            if let Some(witness) = found {
                assert!(witness.certifies(&w));
            }
        }
    }
}

#[test]
fn witness_example_g25() {
    let ctx = g(2, 5);
    let w = ctx.tuple(vec![3, 5]).unwrap();
    let witness = semistable_witness(&w, &ctx, 1).unwrap().unwrap();
    let mut counts = [0usize; 6];
    for u in witness.chain() {
        assert!(u.is_below(&w));
        for &v in u.entries() {
            counts[v] += 1;
        }
    }
    assert_eq!(&counts[1..], &[2, 2, 2, 2, 2]);
    for pair in witness.chain().windows(2) {
        assert!(pair[0].is_below(&pair[1]));
    }

    let w = ctx.tuple(vec![2, 5]).unwrap();
    assert!(!exists_chain(w.entries(), 5, 5, 2));
    assert!(semistable_witness(&w, &ctx, 1).unwrap().is_none());
}

#[test]
fn witness_degree_two_chain_length() {
    let ctx = g(2, 5);
    let w = ctx.top();
    let witness = semistable_witness(&w, &ctx, 2).unwrap().unwrap();
    assert_eq!(witness.chain().len(), 10);
    assert_eq!(witness.degree(), 2);
    assert!(witness.certifies(&w));
}

/// The labelled diagram: row i holds s_i, s_{i+1}, ... from the left; reading
/// each row right to left, bottom row first, spells the element of W^P.
fn filling_word(w: &ColumnTuple) -> Vec<usize> {
    let shape = to_partition(w);
    let mut word = Vec::new();
    for (row, &len) in shape.parts().iter().enumerate() {
        let labels: Vec<usize> = (0..len).map(|c| row + 1 + c).collect();
        word.extend(labels.into_iter().rev());
    }
    word
}

#[test]
fn diagram_filling_spells_canonical_word() {
    let ctx = g(4, 9);
    let w = ctx.tuple(vec![3, 5, 7, 9]).unwrap();
    assert_eq!(
        filling_word(&w),
        vec![2, 1, 4, 3, 2, 6, 5, 4, 3, 8, 7, 6, 5, 4]
    );
    for n in 2..=10 {
        for r in 1..n {
            for w in g(r, n).tuples() {
                assert_eq!(canonical_reduced_word(&w).letters(), &filling_word(&w)[..]);
            }
        }
    }
}

#[test]
fn example_component_words() {
    // the words of the three components of Sing X(3,5,7,9)
    let ctx = g(4, 9);
    let t = |e: &[usize]| ctx.tuple(e.to_vec()).unwrap();
    assert_eq!(
        canonical_reduced_word(&t(&[2, 3, 7, 9])).letters(),
        &[1, 2, 6, 5, 4, 3, 8, 7, 6, 5, 4]
    );
    assert_eq!(
        canonical_reduced_word(&t(&[3, 4, 5, 9])).letters(),
        &[2, 1, 3, 2, 4, 3, 8, 7, 6, 5, 4]
    );
    assert_eq!(
        canonical_reduced_word(&t(&[3, 5, 6, 7])).letters(),
        &[2, 1, 4, 3, 2, 5, 4, 3, 6, 5, 4]
    );
}
