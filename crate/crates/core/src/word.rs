//! Freely reduced words over signed letters.
//!
//! A letter `k > 0` is the generator (or edge) `k` traversed forwards and `-k`
//! the same generator traversed backwards. Used both for free-group words in
//! the Artin representation and for paths in the free groupoid of a spine.

pub type Letter = i32;

/// Appends `letter`, cancelling against the last letter if they are inverse.
#[inline]
pub fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last() == Some(&-letter) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

pub fn extend_reduced(buf: &mut Vec<Letter>, letters: impl IntoIterator<Item = Letter>) {
    for l in letters {
        push_reduced(buf, l);
    }
}

pub fn reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(letters.len());
    extend_reduced(&mut out, letters.iter().copied());
    out
}

pub fn is_reduced(letters: &[Letter]) -> bool {
    letters.iter().all(|&l| l != 0) && letters.windows(2).all(|w| w[0] != -w[1])
}

pub fn inverse(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|&l| -l).collect()
}

/// Reduced concatenation of several words.
pub fn concat(parts: &[&[Letter]]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        extend_reduced(&mut out, p.iter().copied());
    }
    out
}
