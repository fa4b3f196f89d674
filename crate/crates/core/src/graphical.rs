//! Graphical objects: indexed arc systems on a fixed covering surface.
//!
//! Arcs are recorded up to isotopy rel boundary as reduced paths in the free
//! groupoid of the reference spine. Embedded arcs with endpoints on the
//! boundary are isotopic iff they are homotopic rel endpoints, and the
//! surface retracts onto the spine, so a reduced edge path is a complete
//! invariant of an arc.
//!
//! Arcs are unoriented; every [`ArcWord`] is stored running from its smaller
//! endpoint to its larger one, which makes equality up to reversal plain
//! equality.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braid::{BraidWord, LabelTuple, Sign};
use crate::cover::{spine, Spine};
use crate::error::{Error, Result};
use crate::perm::Transposition;
use crate::word::{self, Letter};

/// A reduced edge path between two distinct basepoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcWord {
    letters: Vec<Letter>,
    start: usize,
    end: usize,
}

impl ArcWord {
    /// The single edge `e_index` of `spine`.
    pub fn edge(spine: &Spine, index: usize) -> Self {
        let e = spine.edge(index);
        Self {
            letters: vec![index as Letter],
            start: e.a,
            end: e.b,
        }
    }

    /// Validates `letters` as a reduced path on `spine` joining distinct
    /// basepoints.
    pub fn from_letters(spine: &Spine, letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty arc".into()));
        }
        let n = spine.edges.len() as Letter;
        if let Some(bad) = letters.iter().find(|l| **l == 0 || l.abs() > n) {
            return Err(Error::InvalidWord(format!("no spine edge {bad}")));
        }
        if !word::is_reduced(&letters) {
            return Err(Error::InvalidWord("word is not freely reduced".into()));
        }
        for w in letters.windows(2) {
            if spine.letter_ends(w[0]).1 != spine.letter_ends(w[1]).0 {
                return Err(Error::InvalidWord(format!(
                    "letters {} and {} do not meet",
                    letter_name(w[0]),
                    letter_name(w[1])
                )));
            }
        }
        let start = spine.letter_ends(letters[0]).0;
        let end = spine.letter_ends(*letters.last().expect("non-empty")).1;
        if start == end {
            return Err(Error::InvalidWord("arc endpoints coincide".into()));
        }
        Ok(Self::oriented(letters, start, end))
    }

    /// Parses `"e3 E1 e2"` (capital letter = edge traversed backwards).
    pub fn parse(spine: &Spine, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let (sign, digits) = match tok.strip_prefix('e') {
                    Some(rest) => (1, rest),
                    None => (
                        -1,
                        tok.strip_prefix('E')
                            .ok_or_else(|| Error::Parse(format!("bad edge letter {tok:?}")))?,
                    ),
                };
                let k: Letter = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad edge letter {tok:?}")))?;
                Ok(sign * k)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_letters(spine, letters)
    }

    /// Puts the arc in canonical orientation (smaller endpoint first).
    fn oriented(letters: Vec<Letter>, start: usize, end: usize) -> Self {
        if start < end {
            Self {
                letters,
                start,
                end,
            }
        } else {
            Self {
                letters: word::inverse(&letters),
                start: end,
                end: start,
            }
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.start, self.end)
    }

    pub fn label(&self) -> Transposition {
        Transposition::new(self.start, self.end).expect("arc endpoints are distinct")
    }

    /// The letters of this arc read from endpoint `from`.
    pub fn letters_from(&self, from: usize) -> Vec<Letter> {
        if from == self.start {
            self.letters.clone()
        } else {
            debug_assert_eq!(from, self.end);
            word::inverse(&self.letters)
        }
    }

    pub(crate) fn from_path(letters: Vec<Letter>, start: usize, end: usize) -> Self {
        debug_assert!(start != end && !letters.is_empty());
        Self::oriented(letters, start, end)
    }
}

fn letter_name(l: Letter) -> String {
    if l > 0 {
        format!("e{l}")
    } else {
        format!("E{}", -l)
    }
}

pub(crate) fn format_letters(letters: &[Letter]) -> String {
    letters
        .iter()
        .map(|&l| letter_name(l))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for ArcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

impl Serialize for ArcWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ArcWord", 2)?;
        s.serialize_field("word", &self.to_string())?;
        s.serialize_field("endpoints", &[self.start, self.end])?;
        s.end()
    }
}

/// An indexed arc system on the surface of `reference`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GraphicalObject {
    reference: LabelTuple,
    arcs: Vec<ArcWord>,
}

impl GraphicalObject {
    /// Builds an object, rejecting it unless every check of [`validate_object`] passes.
    pub fn new(reference: LabelTuple, arcs: Vec<ArcWord>) -> Result<Self> {
        let object = Self { reference, arcs };
        let report = validate_object(&object);
        if report.all_passed() {
            Ok(object)
        } else {
            Err(Error::InvalidWord(report.failures.join("; ")))
        }
    }

    /// Builds an object without validation, e.g. to inspect it with [`validate_object`].
    pub fn new_unchecked(reference: LabelTuple, arcs: Vec<ArcWord>) -> Self {
        Self { reference, arcs }
    }

    pub fn reference(&self) -> &LabelTuple {
        &self.reference
    }

    pub fn arcs(&self) -> &[ArcWord] {
        &self.arcs
    }

    pub fn arc(&self, j: usize) -> &ArcWord {
        &self.arcs[j - 1]
    }

    pub fn spine(&self) -> Spine {
        spine(&self.reference)
    }

    /// Sum of arc word lengths.
    pub fn total_length(&self) -> usize {
        self.arcs.iter().map(ArcWord::len).sum()
    }

    pub(crate) fn into_arcs(self) -> Vec<ArcWord> {
        self.arcs
    }
}

impl fmt::Display for GraphicalObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.arcs.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// The arc system given by the spine itself: arc `j` is the edge `e_j`.
pub fn canonical_object(tau: &LabelTuple) -> GraphicalObject {
    let sp = spine(tau);
    GraphicalObject {
        reference: tau.clone(),
        arcs: (1..=tau.len()).map(|j| ArcWord::edge(&sp, j)).collect(),
    }
}

/// Reads a label tuple off the endpoints of the arcs.
pub fn label_of(o: &GraphicalObject) -> LabelTuple {
    LabelTuple::from_trusted(
        o.reference.degree(),
        o.arcs.iter().map(ArcWord::label).collect(),
    )
}

/// The arcslide move for `σ̃_i^{±1}`.
///
/// With `a = γ̃_i`, `b = γ̃_{i+1}`:
/// * disjoint endpoints: the arcs swap indices;
/// * one shared endpoint `v`: `b` slides along `a` (`σ̃_i`: new arcs `(a·b, a)`
///   through `v`; `σ̃_i⁻¹`: `(b, b·a)`);
/// * both endpoints shared, both read `u → v`: `σ̃_i` gives `(a·b̄·a, a)` and
///   `σ̃_i⁻¹` gives `(b, b·ā·b)`.
pub fn apply_generator(o: &GraphicalObject, i: usize, sign: Sign) -> Result<GraphicalObject> {
    let n = o.arcs.len();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n - 1,
        });
    }
    let mut arcs = o.arcs.clone();
    let (new_i, new_next) = slide(&o.arcs[i - 1], &o.arcs[i], sign);
    arcs[i - 1] = new_i;
    arcs[i] = new_next;
    Ok(GraphicalObject {
        reference: o.reference.clone(),
        arcs,
    })
}

fn slide(a: &ArcWord, b: &ArcWord, sign: Sign) -> (ArcWord, ArcWord) {
    let shared: Vec<usize> = [b.start, b.end]
        .into_iter()
        .filter(|&x| x == a.start || x == a.end)
        .collect();
    match shared.as_slice() {
        [] => (b.clone(), a.clone()),
        [v] => {
            let v = *v;
            let a_free = if a.start == v { a.end } else { a.start };
            let b_free = if b.start == v { b.end } else { b.start };
            match sign {
                Sign::Pos => {
                    let path = word::concat(&[&a.letters_from(a_free), &b.letters_from(v)]);
                    (ArcWord::from_path(path, a_free, b_free), a.clone())
                }
                Sign::Neg => {
                    let path = word::concat(&[&b.letters_from(b_free), &a.letters_from(v)]);
                    (b.clone(), ArcWord::from_path(path, b_free, a_free))
                }
            }
        }
        _ => {
            // both read start -> end, since both are stored smaller endpoint first
            let (u, v) = (a.start, a.end);
            match sign {
                Sign::Pos => {
                    let path = word::concat(&[&a.letters, &word::inverse(&b.letters), &a.letters]);
                    (ArcWord::from_path(path, u, v), a.clone())
                }
                Sign::Neg => {
                    let path = word::concat(&[&b.letters, &word::inverse(&a.letters), &b.letters]);
                    (b.clone(), ArcWord::from_path(path, u, v))
                }
            }
        }
    }
}

/// Applies the generators of `w` in order.
pub fn apply_morphism(o: &GraphicalObject, w: &BraidWord) -> Result<GraphicalObject> {
    w.check_strands(o.arcs.len())?;
    let mut arcs = o.arcs.clone();
    for g in w.iter() {
        let (x, y) = slide(&arcs[g.index - 1], &arcs[g.index], g.sign);
        arcs[g.index - 1] = x;
        arcs[g.index] = y;
    }
    Ok(GraphicalObject {
        reference: o.reference.clone(),
        arcs,
    })
}

/// Same reference surface and the same arcs up to reversal.
pub fn objects_equal(a: &GraphicalObject, b: &GraphicalObject) -> bool {
    a.reference == b.reference && a.arcs == b.arcs
}

/// Outcome of checking the graphical-object axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Each word is a reduced path on the reference spine between its recorded endpoints.
    pub paths_valid: bool,
    /// Every arc joins two distinct basepoints.
    pub distinct_endpoints: bool,
    /// Every basepoint is an endpoint of some arc.
    pub covers_basepoints: bool,
    /// The arcs, as edges between basepoints, form a connected graph.
    pub arcs_connected: bool,
    /// Determinant of the abelianized arc-to-edge matrix.
    pub determinant: Option<i128>,
    /// Vertex order at basepoints is index order by construction.
    pub vertex_order: bool,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the endpoint and covering axioms exactly, and necessary conditions
/// (connectivity, unimodular abelianization) for the arcs cutting the surface into discs.
pub fn validate_object(o: &GraphicalObject) -> ValidationReport {
    let sp = o.spine();
    let n = o.reference.len();
    let d = o.reference.degree();
    let mut failures = Vec::new();

    if o.arcs.len() != n {
        failures.push(format!("expected {n} arcs, found {}", o.arcs.len()));
    }

    let mut paths_valid = true;
    for (k, a) in o.arcs.iter().enumerate() {
        match ArcWord::from_letters(&sp, a.letters.clone()) {
            Ok(checked) if checked.endpoints() == a.endpoints() => {}
            Ok(_) => {
                paths_valid = false;
                failures.push(format!(
                    "arc {}: recorded endpoints do not match its path",
                    k + 1
                ));
            }
            Err(Error::InvalidWord(msg)) if msg.contains("coincide") => {}
            Err(e) => {
                paths_valid = false;
                failures.push(format!("arc {}: {e}", k + 1));
            }
        }
    }

    let distinct_endpoints = o.arcs.iter().all(|a| a.start != a.end);
    if !distinct_endpoints {
        failures.push("condition 1: an arc has equal endpoints".into());
    }

    let mut covered = vec![false; d + 1];
    for a in &o.arcs {
        for x in [a.start, a.end] {
            if x <= d {
                covered[x] = true;
            }
        }
    }
    let covers_basepoints = covered[1..].iter().all(|&c| c);
    if !covers_basepoints {
        let missing: Vec<String> = (1..=d)
            .filter(|&x| !covered[x])
            .map(|x| format!("x{x}"))
            .collect();
        failures.push(format!(
            "condition 2: basepoints {} are not arc endpoints",
            missing.join(", ")
        ));
    }

    let pairs: Vec<Transposition> = o
        .arcs
        .iter()
        .filter_map(|a| Transposition::new(a.start, a.end).ok())
        .collect();
    let arcs_connected = crate::perm::is_transitive(&pairs, d);
    if !arcs_connected {
        failures.push("condition 3: arcs do not form a connected graph".into());
    }

    let determinant = if paths_valid && o.arcs.len() == n {
        let matrix: Vec<Vec<i128>> = o
            .arcs
            .iter()
            .map(|a| {
                let mut row = vec![0i128; n];
                for &l in &a.letters {
                    row[l.unsigned_abs() as usize - 1] += l.signum() as i128;
                }
                row
            })
            .collect();
        Some(crate::lift::determinant(matrix))
    } else {
        None
    };
    if let Some(det) = determinant {
        if det.abs() != 1 {
            failures.push(format!(
                "condition 3: abelianized substitution has determinant {det}"
            ));
        }
    }

    ValidationReport {
        paths_valid,
        distinct_endpoints,
        covers_basepoints,
        arcs_connected,
        determinant,
        vertex_order: true,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::hurwitz_step;
    use proptest::prelude::*;

    fn lt(d: usize, pairs: &[(usize, usize)]) -> LabelTuple {
        LabelTuple::from_pairs(d, pairs).unwrap()
    }

    fn arcs(o: &GraphicalObject) -> Vec<String> {
        o.arcs().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn canonical_examples() {
        let tau = lt(3, &[(1, 2), (2, 3)]);
        let o = canonical_object(&tau);
        assert_eq!(arcs(&o), vec!["e1", "e2"]);
        assert_eq!(label_of(&o), tau);
        let tau = lt(3, &[(1, 2), (1, 2), (2, 3)]);
        assert_eq!(arcs(&canonical_object(&tau)), vec!["e1", "e2", "e3"]);
        assert_eq!(label_of(&canonical_object(&tau)), tau);
    }

    #[test]
    fn one_shared_endpoint_slide() {
        let o = canonical_object(&lt(3, &[(1, 2), (2, 3)]));
        let s = apply_generator(&o, 1, Sign::Pos).unwrap();
        assert_eq!(arcs(&s), vec!["e1 e2", "e1"]);
        assert_eq!(label_of(&s), lt(3, &[(1, 3), (1, 2)]));
        let s3 = apply_morphism(&o, &"s1^3".parse().unwrap()).unwrap();
        assert!(objects_equal(&s3, &o));
        let back = apply_generator(&s, 1, Sign::Neg).unwrap();
        assert!(objects_equal(&back, &o));
    }

    #[test]
    fn equal_labels_twist() {
        let o = canonical_object(&lt(3, &[(1, 2), (1, 2), (2, 3)]));
        let s = apply_generator(&o, 1, Sign::Pos).unwrap();
        assert_eq!(arcs(&s), vec!["e1 E2 e1", "e1", "e3"]);
        let s_inv = apply_generator(&o, 1, Sign::Neg).unwrap();
        assert_eq!(arcs(&s_inv), vec!["e2", "e2 E1 e2", "e3"]);
        let mut cur = o.clone();
        for k in 1..=6 {
            cur = apply_generator(&cur, 1, Sign::Pos).unwrap();
            assert_eq!(cur.arc(1).len(), 2 * k + 1);
            assert!(!objects_equal(&cur, &o));
        }
    }

    #[test]
    fn disjoint_swap() {
        let o = canonical_object(&lt(4, &[(1, 2), (3, 4), (2, 3)]));
        let s = apply_generator(&o, 1, Sign::Pos).unwrap();
        assert_eq!(arcs(&s), vec!["e2", "e1", "e3"]);
        assert_eq!(apply_generator(&o, 1, Sign::Neg).unwrap(), s);
        assert!(objects_equal(
            &apply_generator(&s, 1, Sign::Pos).unwrap(),
            &o
        ));
        assert!(apply_generator(&o, 3, Sign::Pos).is_err());
    }

    #[test]
    fn equality_examples() {
        let tau = lt(3, &[(1, 2), (2, 3)]);
        let sp = spine(&tau);
        let o = canonical_object(&tau);
        assert!(objects_equal(&o, &o));
        let reversed = GraphicalObject::new(
            tau.clone(),
            vec![
                ArcWord::parse(&sp, "E1").unwrap(),
                ArcWord::parse(&sp, "e2").unwrap(),
            ],
        )
        .unwrap();
        assert!(objects_equal(&o, &reversed));
        let moved = GraphicalObject::new_unchecked(
            tau,
            vec![
                ArcWord::parse(&sp, "e1 e2").unwrap(),
                ArcWord::parse(&sp, "e1").unwrap(),
            ],
        );
        assert!(!objects_equal(&o, &moved));
    }

    #[test]
    fn word_parsing() {
        let sp = spine(&lt(3, &[(1, 2), (1, 2), (2, 3)]));
        let w = ArcWord::parse(&sp, "e3 E2 e1 e3").unwrap_err();
        assert!(matches!(w, Error::InvalidWord(_)));
        let w = ArcWord::parse(&sp, "E3 E1").unwrap();
        assert_eq!(w.endpoints(), (1, 3));
        assert_eq!(w.to_string(), "e1 e3");
        assert!(ArcWord::parse(&sp, "e1 E2").is_err()); // closed loop
        assert!(ArcWord::parse(&sp, "e1 E1 e1").is_err()); // not reduced
        assert!(ArcWord::parse(&sp, "e9").is_err());
        assert!(ArcWord::parse(&sp, "x1").is_err());
    }

    #[test]
    fn validation_reports() {
        let tau = lt(3, &[(1, 2), (2, 3)]);
        let sp = spine(&tau);
        assert!(validate_object(&canonical_object(&tau)).all_passed());

        let missing = GraphicalObject::new_unchecked(
            tau.clone(),
            vec![ArcWord::edge(&sp, 1), ArcWord::edge(&sp, 1)],
        );
        let r = validate_object(&missing);
        assert!(!r.covers_basepoints);
        assert!(r.failures.iter().any(|f| f.starts_with("condition 2")));

        let degenerate = GraphicalObject::new_unchecked(
            tau.clone(),
            vec![
                ArcWord {
                    letters: vec![1, -1],
                    start: 1,
                    end: 1,
                },
                ArcWord::edge(&sp, 2),
            ],
        );
        let r = validate_object(&degenerate);
        assert!(!r.distinct_endpoints);
        assert!(r.failures.iter().any(|f| f.starts_with("condition 1")));
        assert!(GraphicalObject::new(tau, degenerate.arcs).is_err());
    }

    fn object_with_word() -> impl Strategy<Value = (GraphicalObject, BraidWord)> {
        let tuples = prop_oneof![
            Just(vec![(1, 2), (1, 2), (2, 3)]),
            Just(vec![(1, 2), (2, 3), (2, 3), (2, 3)]),
            Just(vec![(1, 2), (3, 4), (2, 3), (2, 3)]),
        ];
        tuples.prop_flat_map(|pairs| {
            let n = pairs.len();
            let d = pairs.iter().map(|p: &(usize, usize)| p.1).max().unwrap();
            let tau = LabelTuple::from_pairs(d, &pairs).unwrap();
            let gen = (1..n, any::<bool>()).prop_map(|(i, pos)| crate::braid::BraidGenerator {
                index: i,
                sign: if pos { Sign::Pos } else { Sign::Neg },
            });
            (
                Just(canonical_object(&tau)),
                prop::collection::vec(gen, 0..8).prop_map(BraidWord::new),
            )
        })
    }

    proptest! {
        #[test]
        fn labels_follow_hurwitz((o, w) in object_with_word(), i in 1usize..4, pos in any::<bool>()) {
            let o = apply_morphism(&o, &w).unwrap();
            prop_assume!(i < o.arcs().len());
            let sign = if pos { Sign::Pos } else { Sign::Neg };
            let moved = apply_generator(&o, i, sign).unwrap();
            prop_assert_eq!(label_of(&moved), hurwitz_step(&label_of(&o), i, sign).unwrap());
            prop_assert!(validate_object(&moved).all_passed());
            prop_assert!(objects_equal(&apply_generator(&moved, i, sign.flip()).unwrap(), &o));
        }
    }
}
