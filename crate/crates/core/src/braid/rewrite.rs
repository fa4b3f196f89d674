//! Rewriting a coloured braid so that no crossing involves two equal labels.
//!
//! An offending generator `σ_i^{±1}` acting on strands labelled `(t, t)` is
//! replaced by an equal braid in which a third strand, whose label shares one
//! point with `t`, is pulled through the crossing:
//!
//! 1. conjugate by `Q`, a run of crossings that brings the nearest such strand
//!    next to positions `i, i+1` (`Q` commutes with `σ_i`);
//! 2. replace `σ_i^{±1}` by the shortest 3-strand word that equals it in `B_3`
//!    and has distinct labels at each of its crossings;
//! 3. undo `Q`.
//!
//! Every crossing of the result joins strands with distinct labels. Word
//! equality in step 2 is decided by the Artin representation.

use std::collections::{HashMap, HashSet, VecDeque};

use super::artin;
use super::{hurwitz_step_in_place, BraidGenerator, BraidWord, ColoredBraid, Sign};
use crate::error::{Error, Result};
use crate::perm::Transposition;
use crate::word::Letter;

/// Longest local 3-strand replacement the search will consider.
pub const MAX_LOCAL_REWRITE_LEN: usize = 12;

const LOCAL_GENS: [BraidGenerator; 4] = [
    BraidGenerator {
        index: 1,
        sign: Sign::Pos,
    },
    BraidGenerator {
        index: 1,
        sign: Sign::Neg,
    },
    BraidGenerator {
        index: 2,
        sign: Sign::Pos,
    },
    BraidGenerator {
        index: 2,
        sign: Sign::Neg,
    },
];

/// Whether some crossing of `b` joins two strands carrying the same label.
pub fn has_same_label_crossing(b: &ColoredBraid) -> bool {
    let mut labels = b.initial().labels().to_vec();
    for g in b.word().iter() {
        if labels[g.index - 1] == labels[g.index] {
            return true;
        }
        hurwitz_step_in_place(&mut labels, g.index, g.sign);
    }
    false
}

/// Returns an equal coloured braid (same initial labels, same element of `B_n`)
/// whose crossings all join differently-labelled strands.
pub fn remove_same_label_crossings(b: &ColoredBraid) -> Result<ColoredBraid> {
    let gens = rewrite_labels(b.initial().labels(), b.word().gens())?;
    ColoredBraid::new(b.initial().clone(), BraidWord::new(gens))
}

type LocalKey = ([Transposition; 3], BraidGenerator);

pub(crate) fn rewrite_labels(
    initial: &[Transposition],
    word: &[BraidGenerator],
) -> Result<Vec<BraidGenerator>> {
    let mut labels = initial.to_vec();
    let mut out = Vec::with_capacity(word.len());
    let mut cache: HashMap<LocalKey, Vec<BraidGenerator>> = HashMap::new();
    for &g in word {
        if labels[g.index - 1] != labels[g.index] {
            out.push(g);
            hurwitz_step_in_place(&mut labels, g.index, g.sign);
            continue;
        }
        let replacement = replace_crossing(&labels, g, &mut cache)?;
        let mut expected = labels.clone();
        hurwitz_step_in_place(&mut expected, g.index, g.sign);
        for h in replacement {
            debug_assert_ne!(labels[h.index - 1], labels[h.index]);
            hurwitz_step_in_place(&mut labels, h.index, h.sign);
            out.push(h);
        }
        debug_assert_eq!(labels, expected);
    }
    Ok(out)
}

fn replace_crossing(
    labels: &[Transposition],
    g: BraidGenerator,
    cache: &mut HashMap<LocalKey, Vec<BraidGenerator>>,
) -> Result<Vec<BraidGenerator>> {
    let n = labels.len();
    let i = g.index;
    let t = labels[i - 1];
    let helps = |k: usize| labels[k - 1].shared_points(&t) == 1;
    let right = (i + 2..=n).find(|&k| helps(k));
    let left = (1..i).rev().find(|&k| helps(k));
    let pick_right = match (left, right) {
        (None, None) => {
            return Err(Error::Rewrite(format!(
                "no strand with a label overlapping {t} can be pulled through the crossing at position {i}"
            )))
        }
        (Some(_), None) => false,
        (None, Some(_)) => true,
        (Some(l), Some(r)) => r - (i + 1) <= i - l,
    };

    // Q: bring the helper strand adjacent; its own label is kept along the way.
    let (q, offset, local_target) = if pick_right {
        let k = right.expect("checked");
        let q: Vec<BraidGenerator> = (i + 2..k).rev().map(BraidGenerator::neg).collect();
        (
            q,
            i - 1,
            BraidGenerator {
                index: 1,
                sign: g.sign,
            },
        )
    } else {
        let k = left.expect("checked");
        let q: Vec<BraidGenerator> = (k..i - 1).map(BraidGenerator::pos).collect();
        (
            q,
            i - 2,
            BraidGenerator {
                index: 2,
                sign: g.sign,
            },
        )
    };

    let mut moved = labels.to_vec();
    for h in &q {
        hurwitz_step_in_place(&mut moved, h.index, h.sign);
    }
    let window = [moved[offset], moved[offset + 1], moved[offset + 2]];
    let key = (window, local_target);
    let local = match cache.get(&key) {
        Some(w) => w.clone(),
        None => {
            let w = search_local(window, local_target).ok_or_else(|| {
                Error::Rewrite(format!(
                    "no local rewrite of length <= {MAX_LOCAL_REWRITE_LEN} for {}",
                    window
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ))
            })?;
            cache.insert(key, w.clone());
            w
        }
    };

    let mut out = q.clone();
    out.extend(local.iter().map(|h| BraidGenerator {
        index: h.index + offset,
        sign: h.sign,
    }));
    out.extend(q.iter().rev().map(|h| h.inverse()));
    Ok(out)
}

/// Shortest word on 3 strands equal to `target` in `B_3` whose crossings, read
/// against the labels `window`, never join equal labels.
fn search_local(window: [Transposition; 3], target: BraidGenerator) -> Option<Vec<BraidGenerator>> {
    let goal = artin::artin_tuple(&BraidWord::new(vec![target]), 3);
    let start = artin::artin_tuple(&BraidWord::empty(), 3);

    struct Node {
        labels: [Transposition; 3],
        element: Vec<Vec<Letter>>,
        word: Vec<BraidGenerator>,
    }

    let mut seen: HashSet<Vec<Vec<Letter>>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([Node {
        labels: window,
        element: start,
        word: Vec::new(),
    }]);
    while let Some(node) = queue.pop_front() {
        if node.word.len() >= MAX_LOCAL_REWRITE_LEN {
            continue;
        }
        for g in LOCAL_GENS {
            if node.labels[g.index - 1] == node.labels[g.index] {
                continue;
            }
            let mut element = node.element.clone();
            artin::act(&mut element, g);
            if !seen.insert(element.clone()) {
                continue;
            }
            let mut labels = node.labels;
            hurwitz_step_in_place(&mut labels, g.index, g.sign);
            let mut word = node.word.clone();
            word.push(g);
            if element == goal {
                return Some(word);
            }
            queue.push_back(Node {
                labels,
                element,
                word,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::LabelTuple;

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    #[test]
    fn untouched_when_clean() {
        let tau = LabelTuple::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        let b = ColoredBraid::new(tau, "s1 s1 s1^-1".parse().unwrap()).unwrap();
        assert!(!has_same_label_crossing(&b));
        assert_eq!(remove_same_label_crossings(&b).unwrap(), b);
    }

    #[test]
    fn equal_crossing_is_replaced() {
        let tau = LabelTuple::from_pairs(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
        for text in ["s1", "s1^-1", "s2 s1 s1"] {
            let b = ColoredBraid::new(tau.clone(), text.parse().unwrap()).unwrap();
            let r = remove_same_label_crossings(&b).unwrap();
            assert!(!has_same_label_crossing(&r), "{text}: {}", r.word());
            assert!(artin::braids_equal(b.word(), r.word(), 3), "{text}");
            assert_eq!(r.terminal(), b.terminal());
        }
    }

    #[test]
    fn helper_strand_far_away() {
        // helper (2 3) sits two positions to the right of the equal pair
        let tau = LabelTuple::from_pairs(3, &[(1, 2), (1, 2), (1, 2), (2, 3)]).unwrap();
        let b = ColoredBraid::new(tau.clone(), "s1 s2^-1".parse().unwrap()).unwrap();
        let r = remove_same_label_crossings(&b).unwrap();
        assert!(!has_same_label_crossing(&r));
        assert!(artin::braids_equal(b.word(), r.word(), 4));

        // and to the left
        let tau = LabelTuple::from_pairs(3, &[(2, 3), (1, 2), (1, 2), (1, 2)]).unwrap();
        let b = ColoredBraid::new(tau, "s3".parse().unwrap()).unwrap();
        let r = remove_same_label_crossings(&b).unwrap();
        assert!(!has_same_label_crossing(&r));
        assert!(artin::braids_equal(b.word(), r.word(), 4));
    }

    #[test]
    fn no_overlapping_strand_is_an_error() {
        // raw labels a valid tuple can never have: nothing to pull through
        let labels = [t(1, 2), t(1, 2)];
        let err = rewrite_labels(&labels, &[BraidGenerator::pos(1)]).unwrap_err();
        assert!(matches!(err, Error::Rewrite(_)));
        let labels = [t(1, 2), t(1, 2), t(3, 4)];
        assert!(rewrite_labels(&labels, &[BraidGenerator::pos(1)]).is_err());
    }
}
