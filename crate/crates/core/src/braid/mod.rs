//! The coloured braid groupoid.
//!
//! Objects are [`LabelTuple`]s (one transposition per branch value), morphisms
//! are [`ColoredBraid`]s. Braid words are stored in application order: the
//! first generator in a [`BraidWord`] acts first. This is the reverse of the
//! usual right-to-left product notation `σ_{i_m} … σ_{i_1}`.

pub mod artin;
mod orbit;
mod rewrite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{self, conjugate, Permutation, Transposition};

pub use orbit::{orbit, orbit_with_edges, HurwitzEdge, Orbit};
pub use rewrite::{has_same_label_crossing, remove_same_label_crossings, MAX_LOCAL_REWRITE_LEN};

/// Monodromy labels of the branch values `p_1..p_n` of a simple `d`-fold cover.
///
/// Always has `n >= 2`, `d >= 3` and transitive labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLabelTuple")]
pub struct LabelTuple {
    d: usize,
    labels: Vec<Transposition>,
}

#[derive(Deserialize)]
struct RawLabelTuple {
    d: usize,
    labels: Vec<Transposition>,
}

impl TryFrom<RawLabelTuple> for LabelTuple {
    type Error = Error;
    fn try_from(raw: RawLabelTuple) -> Result<Self> {
        LabelTuple::new(raw.d, raw.labels)
    }
}

impl LabelTuple {
    pub fn new(d: usize, labels: Vec<Transposition>) -> Result<Self> {
        if d < 3 {
            return Err(Error::DegreeTooSmall(d));
        }
        if labels.len() < 2 {
            return Err(Error::TooFewBranchValues(labels.len()));
        }
        if let Some(bad) = labels.iter().find(|t| t.max_point() > d) {
            return Err(Error::InvalidTransposition(bad.a(), bad.b(), d));
        }
        if !perm::is_transitive(&labels, d) {
            return Err(Error::NotTransitive(d));
        }
        Ok(Self { d, labels })
    }

    /// Convenience constructor from index pairs.
    pub fn from_pairs(d: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let labels = pairs
            .iter()
            .map(|&(a, b)| Transposition::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(d, labels)
    }

    /// Parses `"(1 2),(2 3)"`, optionally preceded by a `d=<int>` header
    /// (separated by `:`, `;` or whitespace). When the header is absent,
    /// `degree` must be supplied; when both are given they must agree.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let (header, body) = match text.strip_prefix("d=") {
            Some(rest) => {
                let end = rest
                    .find(|c: char| !c.is_ascii_digit())
                    .unwrap_or(rest.len());
                let d = rest[..end]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad degree header in {text:?}")))?;
                let body = rest[end..].trim_start_matches([':', ';', ' ', '\t']);
                (Some(d), body)
            }
            None => (None, text),
        };
        let d = match (header, degree) {
            (Some(h), Some(g)) if h != g => return Err(Error::DegreeMismatch(h, g)),
            (Some(h), _) => h,
            (None, Some(g)) => g,
            (None, None) => return Err(Error::Parse("missing degree (d=<int>)".into())),
        };
        let labels = split_items(body)?
            .into_iter()
            .map(str::parse)
            .collect::<Result<Vec<Transposition>>>()?;
        Self::new(d, labels)
    }

    /// Builds a tuple without the transitivity check. Only for internal use on
    /// tuples that are known to be Hurwitz-equivalent to a valid one.
    pub(crate) fn from_trusted(d: usize, labels: Vec<Transposition>) -> Self {
        debug_assert!(perm::is_transitive(&labels, d));
        Self { d, labels }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Transposition] {
        &self.labels
    }

    /// Label of branch value `i` (1-based).
    pub fn label(&self, i: usize) -> Transposition {
        self.labels[i - 1]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.len() - 1,
            });
        }
        Ok(())
    }
}

fn split_items(body: &str) -> Result<Vec<&str>> {
    let mut items = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (k, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced ')' in {body:?}")))?
            }
            ',' if depth == 0 => {
                items.push(body[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '(' in {body:?}")));
    }
    let last = body[start..].trim();
    if !last.is_empty() || !items.is_empty() {
        items.push(last);
    }
    Ok(items)
}

impl fmt::Display for LabelTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.labels.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// `σ_i` or `σ_i^{-1}`, with 1-based strand position `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidGenerator {
    pub index: usize,
    pub sign: Sign,
}

impl BraidGenerator {
    pub fn pos(index: usize) -> Self {
        Self {
            index,
            sign: Sign::Pos,
        }
    }

    pub fn neg(index: usize) -> Self {
        Self {
            index,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for BraidGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "s{}", self.index),
            Sign::Neg => write!(f, "s{}^-1", self.index),
        }
    }
}

/// A braid word in application order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord(pub Vec<BraidGenerator>);

impl BraidWord {
    pub fn new(gens: Vec<BraidGenerator>) -> Self {
        Self(gens)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Parses `GEN (SPACE GEN)*` with `GEN := "s" INT ["^" ["-"] INT]`, checking
    /// every index against the strand count `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let word: BraidWord = text.parse()?;
        word.check_strands(n)?;
        Ok(word)
    }

    pub fn gens(&self) -> &[BraidGenerator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BraidGenerator> {
        self.0.iter()
    }

    /// The inverse braid: reversed, with every sign flipped.
    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &BraidWord) -> Self {
        let mut gens = self.0.clone();
        gens.extend_from_slice(&then.0);
        Self(gens)
    }

    pub fn power(&self, k: usize) -> Self {
        Self(
            self.0
                .iter()
                .copied()
                .cycle()
                .take(self.0.len() * k)
                .collect(),
        )
    }

    pub fn check_strands(&self, n: usize) -> Result<()> {
        for g in &self.0 {
            if g.index == 0 || g.index >= n {
                return Err(Error::IndexOutOfRange {
                    index: g.index,
                    max: n.saturating_sub(1),
                });
            }
        }
        Ok(())
    }
}

impl FromIterator<BraidGenerator> for BraidWord {
    fn from_iter<I: IntoIterator<Item = BraidGenerator>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for token in text.split_whitespace() {
            let bad = || Error::Parse(format!("bad braid generator {token:?}"));
            let body = token.strip_prefix('s').ok_or_else(bad)?;
            let (idx, exp) = match body.split_once('^') {
                Some((idx, exp)) => (idx, Some(exp)),
                None => (body, None),
            };
            if idx.is_empty() || !idx.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let index: usize = idx.parse().map_err(|_| bad())?;
            let exponent: i64 = match exp {
                None => 1,
                Some(e) => {
                    let digits = e.strip_prefix('-').unwrap_or(e);
                    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
                        return Err(bad());
                    }
                    e.parse().map_err(|_| bad())?
                }
            };
            let sign = if exponent < 0 { Sign::Neg } else { Sign::Pos };
            for _ in 0..exponent.unsigned_abs() {
                gens.push(BraidGenerator { index, sign });
            }
        }
        Ok(Self(gens))
    }
}

/// A braid word together with the labels of its initial strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredBraid {
    initial: LabelTuple,
    word: BraidWord,
}

impl ColoredBraid {
    pub fn new(initial: LabelTuple, word: BraidWord) -> Result<Self> {
        word.check_strands(initial.len())?;
        Ok(Self { initial, word })
    }

    pub fn initial(&self) -> &LabelTuple {
        &self.initial
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn terminal(&self) -> LabelTuple {
        hurwitz_apply(&self.initial, &self.word).expect("indices validated at construction")
    }

    /// The inverse morphism, starting at the terminal labels.
    pub fn inverse(&self) -> ColoredBraid {
        ColoredBraid {
            initial: self.terminal(),
            word: self.word.inverse(),
        }
    }

    /// `self` followed by `next`; fails unless `next` starts where `self` ends.
    pub fn then(&self, next: &ColoredBraid) -> Result<ColoredBraid> {
        let end = self.terminal();
        if end != next.initial {
            return Err(Error::LabelMismatch {
                expected: end.to_string(),
                found: next.initial.to_string(),
            });
        }
        Ok(ColoredBraid {
            initial: self.initial.clone(),
            word: self.word.then(&next.word),
        })
    }
}

/// One Hurwitz move on a raw label slice. `i` is 1-based and assumed valid.
pub(crate) fn hurwitz_step_in_place(labels: &mut [Transposition], i: usize, sign: Sign) {
    let (a, b) = (labels[i - 1], labels[i]);
    match sign {
        Sign::Pos => {
            labels[i - 1] = conjugate(b, a);
            labels[i] = a;
        }
        Sign::Neg => {
            labels[i - 1] = b;
            labels[i] = conjugate(a, b);
        }
    }
}

/// `σ_i^{±1} · τ`.
pub fn hurwitz_step(tau: &LabelTuple, i: usize, sign: Sign) -> Result<LabelTuple> {
    tau.check_index(i)?;
    let mut labels = tau.labels.clone();
    hurwitz_step_in_place(&mut labels, i, sign);
    Ok(LabelTuple::from_trusted(tau.d, labels))
}

/// Hurwitz action of a whole word, generators applied in order.
pub fn hurwitz_apply(tau: &LabelTuple, word: &BraidWord) -> Result<LabelTuple> {
    word.check_strands(tau.len())?;
    let mut labels = tau.labels.clone();
    for g in word.iter() {
        hurwitz_step_in_place(&mut labels, g.index, g.sign);
    }
    Ok(LabelTuple::from_trusted(tau.d, labels))
}

pub fn is_liftable(b: &ColoredBraid) -> bool {
    b.terminal() == b.initial
}

/// Left-to-right product `t_1 t_2 … t_n`.
pub fn total_monodromy(tau: &LabelTuple) -> Permutation {
    product(tau.labels(), tau.degree())
}

pub(crate) fn product(labels: &[Transposition], d: usize) -> Permutation {
    let mut image: Vec<usize> = (1..=d).collect();
    // image[x-1] tracks where x has been sent so far
    for x in image.iter_mut() {
        for t in labels {
            *x = t.apply(*x);
        }
    }
    Permutation::from_image(image).expect("product of transpositions is a permutation")
}

/// Copy counts `(c_1, …, c_{d-1})` of the canonical tuples of length `n`, in
/// search order: `c_j ∈ {1, 2}` for `j ≤ d-2`, lexicographically ascending,
/// and `c_{d-1}` odd, taking up the remaining length.
pub fn canonical_patterns(n: usize, d: usize) -> Vec<Vec<usize>> {
    let free = d - 2;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free) {
        // bit (free-1-j) set means c_{j+1} = 2; this makes the mask order lexicographic
        let mut counts: Vec<usize> = (0..free)
            .map(|j| 1 + ((mask >> (free - 1 - j)) & 1) as usize)
            .collect();
        let used: usize = counts.iter().sum();
        if n <= used {
            continue;
        }
        let last = n - used;
        if last % 2 == 1 {
            counts.push(last);
            out.push(counts);
        }
    }
    out
}

fn tuple_from_pattern(counts: &[usize]) -> Vec<Transposition> {
    counts
        .iter()
        .enumerate()
        .flat_map(|(j, &c)| {
            std::iter::repeat_n(Transposition::new(j + 1, j + 2).expect("j+1 < j+2"), c)
        })
        .collect()
}

/// The distinguished tuple `(12)((12))(23)((23))…(d-1 d)^{odd}` of length `n`
/// whose total monodromy is conjugate to that of `tau`. When several copy-count
/// patterns qualify, the first in [`canonical_patterns`] order is returned.
pub fn canonical_label(tau: &LabelTuple) -> Result<LabelTuple> {
    let (n, d) = (tau.len(), tau.degree());
    let target = total_monodromy(tau).cycle_type();
    for counts in canonical_patterns(n, d) {
        let labels = tuple_from_pattern(&counts);
        if product(&labels, d).cycle_type() == target {
            return LabelTuple::new(d, labels);
        }
    }
    Err(Error::NoCanonicalLabel { n, d })
}

/// Covers are equivalent iff their total monodromies are conjugate in `S_d`.
pub fn equivalent_covers(a: &LabelTuple, b: &LabelTuple) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    if a.len() != b.len() {
        return Err(Error::StrandMismatch(a.len(), b.len()));
    }
    perm::conjugate_in_sd(&total_monodromy(a), &total_monodromy(b))
}
