//! Permutations of `{1..d}` and the transpositions that label branch values.
//!
//! Composition is left-to-right: `compose(p, q)` applies `p` first, then `q`.
//! All indices exposed by this module are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A transposition `(a b)` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Transposition {
    a: usize,
    b: usize,
}

impl Transposition {
    /// Builds `(a b)`; the pair is normalized so that `a < b`.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::InvalidTransposition(a, b, 0));
        }
        Ok(Self {
            a: a.min(b),
            b: a.max(b),
        })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn max_point(&self) -> usize {
        self.b
    }

    /// Image of `x` under the transposition.
    pub fn apply(&self, x: usize) -> usize {
        if x == self.a {
            self.b
        } else if x == self.b {
            self.a
        } else {
            x
        }
    }

    pub fn moves(&self, x: usize) -> bool {
        x == self.a || x == self.b
    }

    /// Given one endpoint, returns the other one.
    pub fn other(&self, x: usize) -> Option<usize> {
        if x == self.a {
            Some(self.b)
        } else if x == self.b {
            Some(self.a)
        } else {
            None
        }
    }

    pub fn is_disjoint(&self, other: &Transposition) -> bool {
        !self.moves(other.a) && !self.moves(other.b)
    }

    /// Number of points shared with `other` (0, 1 or 2).
    pub fn shared_points(&self, other: &Transposition) -> usize {
        usize::from(self.moves(other.a)) + usize::from(self.moves(other.b))
    }

    pub fn to_permutation(&self, d: usize) -> Result<Permutation> {
        if self.b > d {
            return Err(Error::InvalidTransposition(self.a, self.b, d));
        }
        let mut image: Vec<usize> = (1..=d).collect();
        image.swap(self.a - 1, self.b - 1);
        Ok(Permutation { image })
    }
}

impl TryFrom<[usize; 2]> for Transposition {
    type Error = Error;
    fn try_from(v: [usize; 2]) -> Result<Self> {
        Transposition::new(v[0], v[1])
    }
}

impl From<Transposition> for [usize; 2] {
    fn from(t: Transposition) -> Self {
        [t.a, t.b]
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

impl FromStr for Transposition {
    type Err = Error;

    /// Accepts `(a b)`, and the compact `(ab)` when both indices are single digits.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected \"(a b)\", got {s:?}")))?;
        let parts: Vec<&str> = inner.split_whitespace().collect();
        let (a, b) = match parts.as_slice() {
            [a, b] => (*a, *b),
            [ab] if ab.len() == 2 && ab.chars().all(|c| c.is_ascii_digit()) => ab.split_at(1),
            _ => return Err(Error::Parse(format!("expected two indices in {s:?}"))),
        };
        let parse = |x: &str| {
            x.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad sheet index {x:?}")))
        };
        Transposition::new(parse(a)?, parse(b)?)
    }
}

/// Conjugate of `t` by the transposition `s`, i.e. `s t s`.
pub fn conjugate(t: Transposition, s: Transposition) -> Transposition {
    Transposition {
        a: s.apply(t.a).min(s.apply(t.b)),
        b: s.apply(t.a).max(s.apply(t.b)),
    }
}

/// A bijection of `{1..d}`, stored as the image of `1..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Self {
            image: (1..=d).collect(),
        }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let d = image.len();
        let mut seen = vec![false; d];
        for &x in &image {
            if x == 0 || x > d || seen[x - 1] {
                return Err(Error::InvalidPermutation(d));
            }
            seen[x - 1] = true;
        }
        Ok(Self { image })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`; `()` or an empty string is the identity.
    pub fn parse_cycles(text: &str, d: usize) -> Result<Self> {
        let mut image: Vec<usize> = (1..=d).collect();
        let mut rest = text.trim();
        let mut seen = vec![false; d];
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {text:?}")))?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            for (k, &x) in points.iter().enumerate() {
                if x == 0 || x > d || seen[x - 1] {
                    return Err(Error::InvalidPermutation(d));
                }
                seen[x - 1] = true;
                image[x - 1] = points[(k + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Self { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (k, &x) in self.image.iter().enumerate() {
            image[x - 1] = k + 1;
        }
        Self { image }
    }

    /// Disjoint cycles including fixed points; each starts at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 1..=d {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// `p` then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree(), q.degree()));
    }
    Ok(Permutation {
        image: p.image.iter().map(|&x| q.apply(x)).collect(),
    })
}

/// Disjoint cycles of `p`; see [`Permutation::cycles`].
pub fn cycles(p: &Permutation) -> Vec<Vec<usize>> {
    p.cycles()
}

/// Two permutations are conjugate in `S_d` iff they have the same cycle type.
pub fn conjugate_in_sd(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree(), q.degree()));
    }
    Ok(p.cycle_type() == q.cycle_type())
}

/// Whether the graph on `{1..d}` with one edge per transposition is connected.
pub fn is_transitive(ts: &[Transposition], d: usize) -> bool {
    if d == 0 {
        return false;
    }
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = d;
    for t in ts {
        if t.b() > d {
            return false;
        }
        let (ra, rb) = (find(&mut parent, t.a() - 1), find(&mut parent, t.b() - 1));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(3);
        let q = t(2, 3).to_permutation(3).unwrap();
        assert_eq!(compose(&id, &q).unwrap(), q);

        // (12) then (23): 1->2->3, 2->1->1, 3->3->2
        let r = compose(&t(1, 2).to_permutation(3).unwrap(), &q).unwrap();
        assert_eq!(r.image(), &[3, 1, 2]);
        assert_eq!(r.cycles(), vec![vec![1, 3, 2]]);

        let p = Permutation::from_image(vec![2, 3, 1]).unwrap();
        assert!(compose(&p, &p.inverse()).unwrap().is_identity());

        assert_eq!(
            compose(&Permutation::identity(3), &Permutation::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(t(2, 3), t(1, 2)), t(1, 3));
        assert_eq!(conjugate(t(1, 2), t(1, 2)), t(1, 2));
        assert_eq!(conjugate(t(1, 2), t(3, 4)), t(1, 2));
    }

    #[test]
    fn cycles_examples() {
        assert_eq!(
            Permutation::identity(3).cycles(),
            vec![vec![1], vec![2], vec![3]]
        );
        let p = t(2, 3).to_permutation(3).unwrap();
        assert_eq!(p.cycles(), vec![vec![1], vec![2, 3]]);
        let c = Permutation::from_image(vec![2, 3, 1]).unwrap();
        assert_eq!(c.cycles(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn conjugacy_examples() {
        let a = t(1, 2).to_permutation(3).unwrap();
        let b = t(2, 3).to_permutation(3).unwrap();
        let c = Permutation::from_image(vec![2, 3, 1]).unwrap();
        assert!(conjugate_in_sd(&a, &b).unwrap());
        assert!(!conjugate_in_sd(&a, &c).unwrap());
        assert!(conjugate_in_sd(&Permutation::identity(3), &Permutation::identity(3)).unwrap());
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_transitive(&[t(1, 2), t(2, 3)], 3));
        assert!(!is_transitive(&[t(1, 2)], 3));
        assert!(is_transitive(&[t(1, 2), t(1, 2), t(2, 3)], 3));
    }

    #[test]
    fn text_forms() {
        assert_eq!("(1 2)".parse::<Transposition>().unwrap(), t(1, 2));
        assert_eq!("(3 1)".parse::<Transposition>().unwrap(), t(1, 3));
        assert_eq!("(23)".parse::<Transposition>().unwrap(), t(2, 3));
        assert!("(1 1)".parse::<Transposition>().is_err());
        assert!("1 2".parse::<Transposition>().is_err());
        assert_eq!(t(2, 5).to_string(), "(2 5)");

        let p = Permutation::parse_cycles("(1 3 2)(4 5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 3 2)(4 5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
    }

    fn perm(d: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=d).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_image(v).unwrap())
    }

    proptest! {
        #[test]
        fn compose_is_associative(p in perm(6), q in perm(6), r in perm(6)) {
            let left = compose(&compose(&p, &q).unwrap(), &r).unwrap();
            let right = compose(&p, &compose(&q, &r).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn conjugation_is_involutive(a in 1usize..=6, b in 1usize..=6, c in 1usize..=6, e in 1usize..=6) {
            prop_assume!(a != b && c != e);
            let (x, s) = (t(a, b), t(c, e));
            prop_assert_eq!(conjugate(conjugate(x, s), s), x);
        }

        #[test]
        fn cycle_count_matches_rank(p in perm(7)) {
            // d minus the rank of the functional graph's edge set (spanning-forest size).
            let d = p.degree();
            let edges: Vec<Transposition> = (1..=d)
                .filter(|&x| p.apply(x) != x)
                .map(|x| t(x, p.apply(x)))
                .collect();
            let mut parent: Vec<usize> = (0..d).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x { x = p[x]; }
                x
            }
            let mut rank = 0;
            for e in edges {
                let (u, v) = (find(&mut parent, e.a() - 1), find(&mut parent, e.b() - 1));
                if u != v { parent[u] = v; rank += 1; }
            }
            prop_assert_eq!(p.cycles().len(), d - rank);
        }
    }
}
