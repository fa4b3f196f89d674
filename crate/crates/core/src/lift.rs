//! Lifts of coloured braids as substitutions on spine edges.
//!
//! For a coloured braid `β: τ → τ'` the arcs of `φ(β)·O_τ` are reduced words
//! over the spine of `τ` whose endpoints are those of the spine edges of `τ'`.
//! The lift `Φ(β)` carries these arcs back to the spine of `τ'`, so the words
//! are the images of the target edges under `Φ(β)⁻¹`. Two homeomorphisms
//! fixing the basepoints and agreeing on a disc-cutting arc system are
//! isotopic, which makes exact word comparison a complete identity test.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::braid::{hurwitz_apply, BraidGenerator, BraidWord, ColoredBraid, LabelTuple, Sign};
use crate::cover::spine;
use crate::error::{Error, Result};
use crate::graphical::{apply_morphism, canonical_object, ArcWord};
use crate::word::{self, Letter};

/// A mapping class between two covers, stored in both directions.
///
/// `images[j-1]` is the arc `Φ⁻¹(f_j)` over the source spine and
/// `inverse[j-1]` is `Φ(e_j)` over the target spine.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpineSubstitution {
    source: LabelTuple,
    target: LabelTuple,
    images: Vec<ArcWord>,
    inverse: Vec<ArcWord>,
}

impl SpineSubstitution {
    pub fn source(&self) -> &LabelTuple {
        &self.source
    }

    pub fn target(&self) -> &LabelTuple {
        &self.target
    }

    /// `Φ⁻¹(f_j)` for each target edge `f_j`, as words over the source spine.
    pub fn images(&self) -> &[ArcWord] {
        &self.images
    }

    /// `Φ(e_j)` for each source edge `e_j`, as words over the target spine.
    pub fn inverse_images(&self) -> &[ArcWord] {
        &self.inverse
    }

    pub fn identity(tau: &LabelTuple) -> Self {
        let arcs = canonical_object(tau).into_arcs();
        Self {
            source: tau.clone(),
            target: tau.clone(),
            images: arcs.clone(),
            inverse: arcs,
        }
    }

    pub fn is_liftable(&self) -> bool {
        self.source == self.target
    }

    /// Total letters over all images.
    pub fn total_length(&self) -> usize {
        self.images.iter().map(ArcWord::len).sum()
    }
}

impl Serialize for SpineSubstitution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Image {
            edge: usize,
            word: String,
        }
        let images: Vec<Image> = self
            .images
            .iter()
            .enumerate()
            .map(|(k, a)| Image {
                edge: k + 1,
                word: a.to_string(),
            })
            .collect();
        let mut s = serializer.serialize_struct("SpineSubstitution", 3)?;
        s.serialize_field("source", &self.source)?;
        s.serialize_field("target", &self.target)?;
        s.serialize_field("images", &images)?;
        s.end()
    }
}

/// `Φ(β)` for a coloured braid `β`.
pub fn compute_lift(b: &ColoredBraid) -> SpineSubstitution {
    let source = b.initial().clone();
    let target = b.terminal();
    let images = apply_morphism(&canonical_object(&source), b.word())
        .expect("coloured braid indices are validated")
        .into_arcs();
    let inverse = apply_morphism(&canonical_object(&target), &b.word().inverse())
        .expect("coloured braid indices are validated")
        .into_arcs();
    SpineSubstitution {
        source,
        target,
        images,
        inverse,
    }
}

fn substitute(images: &[ArcWord], arc: &ArcWord) -> ArcWord {
    let mut out: Vec<Letter> = Vec::new();
    for &l in arc.letters() {
        let img = images[l.unsigned_abs() as usize - 1].letters();
        if l > 0 {
            word::extend_reduced(&mut out, img.iter().copied());
        } else {
            word::extend_reduced(&mut out, img.iter().rev().map(|x| -x));
        }
    }
    let (s, e) = arc.endpoints();
    ArcWord::from_path(out, s, e)
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose_lifts(g: &SpineSubstitution, f: &SpineSubstitution) -> Result<SpineSubstitution> {
    if f.target != g.source {
        return Err(Error::LabelMismatch {
            expected: g.source.to_string(),
            found: f.target.to_string(),
        });
    }
    Ok(SpineSubstitution {
        source: f.source.clone(),
        target: g.target.clone(),
        images: g.images.iter().map(|a| substitute(&f.images, a)).collect(),
        inverse: f
            .inverse
            .iter()
            .map(|a| substitute(&g.inverse, a))
            .collect(),
    })
}

pub fn invert_lift(f: &SpineSubstitution) -> SpineSubstitution {
    SpineSubstitution {
        source: f.target.clone(),
        target: f.source.clone(),
        images: f.inverse.clone(),
        inverse: f.images.clone(),
    }
}

/// `f` composed with itself `k` times.
pub fn lift_power(f: &SpineSubstitution, k: usize) -> Result<SpineSubstitution> {
    let mut acc = SpineSubstitution::identity(&f.source);
    for _ in 0..k {
        acc = compose_lifts(f, &acc)?;
    }
    Ok(acc)
}

fn require_self_map(f: &SpineSubstitution) -> Result<()> {
    if f.source == f.target {
        Ok(())
    } else {
        Err(Error::LabelMismatch {
            expected: f.source.to_string(),
            found: f.target.to_string(),
        })
    }
}

pub fn is_identity(f: &SpineSubstitution) -> Result<bool> {
    require_self_map(f)?;
    Ok(f.images
        .iter()
        .enumerate()
        .all(|(k, a)| a.letters() == [k as Letter + 1]))
}

/// Action of `Φ` on `H_1` of the cover.
///
/// The basis is one loop per edge outside the lowest-index spanning tree;
/// column `c` holds the coordinates of the image of loop `c`.
pub fn h1_action(f: &SpineSubstitution) -> Result<Vec<Vec<i64>>> {
    require_self_map(f)?;
    let sp = spine(&f.source);
    let in_tree = sp.spanning_tree();
    let paths = sp.tree_paths();
    let loops: Vec<usize> = (1..=sp.edges.len()).filter(|&k| !in_tree[k - 1]).collect();
    let coordinate = |edge: usize| loops.iter().position(|&k| k == edge);

    let mut m = vec![vec![0i64; loops.len()]; loops.len()];
    for (c, &k) in loops.iter().enumerate() {
        let e = sp.edge(k);
        // loop = T_a e_k T_b⁻¹; tree edges carry no coordinate, so only images count
        let letters = word::concat(&[&paths[e.a], &[k as Letter], &word::inverse(&paths[e.b])]);
        for l in letters {
            let img = f.inverse[l.unsigned_abs() as usize - 1].letters();
            for &x in img {
                if let Some(r) = coordinate(x.unsigned_abs() as usize) {
                    m[r][c] += (l.signum() * x.signum()) as i64;
                }
            }
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LiftFlags {
    pub is_identity: bool,
    pub h1_trivial: bool,
    pub transvection_shape: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub liftable: bool,
    pub pi1_rank: usize,
    pub h1_matrix: Option<Vec<Vec<i64>>>,
    pub flags: Option<LiftFlags>,
}

pub fn classify(f: &SpineSubstitution) -> Result<LiftFlags> {
    let id = is_identity(f)?;
    let m = h1_action(f)?;
    let k = m.len();
    let m_minus_i: Vec<Vec<i128>> = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| m[r][c] as i128 - i128::from(r == c))
                .collect()
        })
        .collect();
    let h1_trivial = m_minus_i.iter().flatten().all(|&x| x == 0);
    let squared_zero = (0..k).all(|r| {
        (0..k).all(|c| {
            (0..k)
                .map(|j| m_minus_i[r][j] * m_minus_i[j][c])
                .sum::<i128>()
                == 0
        })
    });
    Ok(LiftFlags {
        is_identity: id,
        h1_trivial,
        transvection_shape: squared_zero && rank(m_minus_i) <= 1,
    })
}

/// Classification when liftable; only the rank otherwise.
pub fn lift_report(f: &SpineSubstitution) -> LiftReport {
    let pi1_rank = spine(&f.source).betti_number();
    if !f.is_liftable() {
        return LiftReport {
            liftable: false,
            pi1_rank,
            h1_matrix: None,
            flags: None,
        };
    }
    LiftReport {
        liftable: true,
        pi1_rank,
        h1_matrix: Some(h1_action(f).expect("liftable")),
        flags: Some(classify(f).expect("liftable")),
    }
}

/// Fraction-free Gaussian elimination (Bareiss).
pub fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            let b = row[c];
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x = *x * pivot[c] - p * b;
            }
        }
        r += 1;
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArcType {
    #[serde(rename = "type")]
    pub arc_type: u8,
    pub min_liftable_power: u8,
}

/// Type of the arc `C` on the disc labelled `tau` that `conj` carries to the
/// elementary arc between branch values `i` and `i + 1`.
pub fn arc_type(tau: &LabelTuple, conj: &BraidWord, i: usize) -> Result<ArcType> {
    let n = tau.len();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n - 1,
        });
    }
    let moved = hurwitz_apply(tau, conj)?;
    let (s, t) = (moved.label(i), moved.label(i + 1));
    let k: u8 = if s == t {
        1
    } else if s.is_disjoint(&t) {
        2
    } else {
        3
    };
    let power = BraidWord::new(vec![BraidGenerator {
        index: i,
        sign: Sign::Pos,
    }])
    .power(k as usize);
    let loop_word = conj.then(&power).then(&conj.inverse());
    debug_assert_eq!(&hurwitz_apply(tau, &loop_word)?, tau);
    Ok(ArcType {
        arc_type: k,
        min_liftable_power: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(d: usize, pairs: &[(usize, usize)]) -> LabelTuple {
        LabelTuple::from_pairs(d, pairs).unwrap()
    }

    fn lift(tau: &LabelTuple, w: &str) -> SpineSubstitution {
        compute_lift(&ColoredBraid::new(tau.clone(), w.parse().unwrap()).unwrap())
    }

    #[test]
    fn cube_on_disc_is_identity() {
        let tau = lt(3, &[(1, 2), (2, 3)]);
        let f = lift(&tau, "s1^3");
        assert!(is_identity(&f).unwrap());
        assert_eq!(
            classify(&f).unwrap(),
            LiftFlags {
                is_identity: true,
                h1_trivial: true,
                transvection_shape: true
            }
        );
    }

    #[test]
    fn single_slide_is_not_liftable() {
        let tau = lt(3, &[(1, 2), (2, 3)]);
        let f = lift(&tau, "s1");
        assert_eq!(f.target(), &lt(3, &[(1, 3), (1, 2)]));
        assert!(is_identity(&f).is_err());
        let r = lift_report(&f);
        assert!(!r.liftable && r.flags.is_none());
    }

    #[test]
    fn annulus_twist() {
        let tau = lt(3, &[(1, 2), (1, 2), (2, 3)]);
        let f = lift(&tau, "s1");
        let lens: Vec<usize> = f.images().iter().map(ArcWord::len).collect();
        assert_eq!(lens, vec![3, 1, 1]);
        assert_eq!(h1_action(&f).unwrap(), vec![vec![1]]);
        let flags = classify(&f).unwrap();
        assert!(!flags.is_identity && flags.h1_trivial && flags.transvection_shape);
        assert_eq!(lift(&tau, "s1 s2^3"), f);
        assert_eq!(lift(&tau, "s2^3 s1"), f);
    }

    #[test]
    fn torus_twist_is_transvection() {
        let tau = lt(3, &[(1, 2), (2, 3), (2, 3), (2, 3)]);
        let f = lift(&tau, "s3");
        let m = h1_action(&f).unwrap();
        assert_ne!(m, vec![vec![1, 0], vec![0, 1]]);
        let flags = classify(&f).unwrap();
        assert!(flags.transvection_shape && !flags.is_identity && !flags.h1_trivial);
        let det = determinant(
            m.iter()
                .map(|r| r.iter().map(|&x| x as i128).collect())
                .collect(),
        );
        assert_eq!(det, 1);
    }

    #[test]
    fn composition_and_inverse() {
        let tau = lt(3, &[(1, 2), (1, 2), (2, 3)]);
        let f = lift(&tau, "s1 s2");
        let g = lift(f.target(), "s2^-1 s1");
        assert_eq!(compose_lifts(&g, &f).unwrap(), lift(&tau, "s1 s2 s2^-1 s1"));
        assert_eq!(
            compose_lifts(&invert_lift(&f), &f).unwrap(),
            SpineSubstitution::identity(&tau)
        );
        assert_eq!(invert_lift(&f), lift(f.target(), "s2^-1 s1^-1"));
        assert_eq!(invert_lift(&invert_lift(&f)), f);
        assert!(compose_lifts(&f, &f).is_err());
        let id = SpineSubstitution::identity(&tau);
        assert_eq!(invert_lift(&id), id);
    }

    #[test]
    fn bareiss() {
        assert_eq!(determinant(vec![vec![2, 1], vec![1, 1]]), 1);
        assert_eq!(determinant(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(
            determinant(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]),
            -3
        );
        assert_eq!(determinant(vec![vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]]), 1);
    }

    #[test]
    fn arc_types() {
        let a = arc_type(&lt(3, &[(1, 2), (1, 2), (2, 3)]), &BraidWord::empty(), 1).unwrap();
        assert_eq!(a.arc_type, 1);
        let a = arc_type(&lt(4, &[(1, 2), (3, 4), (2, 3)]), &BraidWord::empty(), 1).unwrap();
        assert_eq!(a.arc_type, 2);
        let a = arc_type(&lt(3, &[(1, 2), (2, 3)]), &BraidWord::empty(), 1).unwrap();
        assert_eq!((a.arc_type, a.min_liftable_power), (3, 3));
        let a = arc_type(&lt(3, &[(1, 2), (2, 3), (2, 3)]), &"s1".parse().unwrap(), 2).unwrap();
        assert_eq!(a.arc_type, 3);
        assert!(arc_type(&lt(3, &[(1, 2), (2, 3)]), &BraidWord::empty(), 2).is_err());
    }
}
