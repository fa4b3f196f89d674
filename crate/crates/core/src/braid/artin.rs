//! Artin representation of `B_n` on the free group `F_n = <x_1, …, x_n>`.
//!
//! A braid acts on the tuple `(x_1, …, x_n)` by the same Hurwitz rule used on
//! labels: `σ_i` sends `(…, w_i, w_{i+1}, …)` to `(…, w_i w_{i+1} w_i⁻¹, w_i, …)`.
//! The action is faithful, so two braid words are equal in `B_n` exactly when
//! they send the standard tuple to the same tuple of reduced words.

use crate::braid::{BraidGenerator, BraidWord, Sign};
use crate::word::{self, Letter};

/// Applies one generator to a tuple of free-group words.
pub fn act(tuple: &mut [Vec<Letter>], g: BraidGenerator) {
    let i = g.index - 1;
    let (a, b) = (&tuple[i], &tuple[i + 1]);
    match g.sign {
        Sign::Pos => {
            let new_i = word::concat(&[a, b, &word::inverse(a)]);
            let new_next = a.clone();
            tuple[i] = new_i;
            tuple[i + 1] = new_next;
        }
        Sign::Neg => {
            let new_next = word::concat(&[&word::inverse(b), a, b]);
            let new_i = b.clone();
            tuple[i] = new_i;
            tuple[i + 1] = new_next;
        }
    }
}

/// Image of the standard generating tuple under `braid` on `n` strands.
pub fn artin_tuple(braid: &BraidWord, n: usize) -> Vec<Vec<Letter>> {
    let mut tuple: Vec<Vec<Letter>> = (1..=n as Letter).map(|k| vec![k]).collect();
    for &g in braid.iter() {
        act(&mut tuple, g);
    }
    tuple
}

/// Whether two words represent the same element of `B_n`.
pub fn braids_equal(a: &BraidWord, b: &BraidWord, n: usize) -> bool {
    artin_tuple(a, n) == artin_tuple(b, n)
}
