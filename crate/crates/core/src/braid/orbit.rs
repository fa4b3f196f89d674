use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{hurwitz_step_in_place, LabelTuple, Sign};

/// A Hurwitz move `source --σ_index^sign--> target`, by vertex position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HurwitzEdge {
    pub source: usize,
    pub index: usize,
    pub sign: Sign,
    pub target: usize,
}

/// A Hurwitz orbit with vertices in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub vertices: Vec<LabelTuple>,
    pub edges: Vec<HurwitzEdge>,
}

impl Orbit {
    pub fn position(&self, tau: &LabelTuple) -> Option<usize> {
        self.vertices.binary_search(tau).ok()
    }
}

/// All tuples reachable from `tau` by Hurwitz moves, sorted.
pub fn orbit(tau: &LabelTuple) -> Vec<LabelTuple> {
    orbit_with_edges(tau).vertices
}

/// The orbit of `tau` together with every Hurwitz move between its members.
pub fn orbit_with_edges(tau: &LabelTuple) -> Orbit {
    let n = tau.len();
    let mut seen: BTreeSet<LabelTuple> = BTreeSet::new();
    let mut queue = VecDeque::from([tau.clone()]);
    seen.insert(tau.clone());
    while let Some(current) = queue.pop_front() {
        for i in 1..n {
            for sign in [Sign::Pos, Sign::Neg] {
                let mut labels = current.labels().to_vec();
                hurwitz_step_in_place(&mut labels, i, sign);
                let next = LabelTuple::from_trusted(tau.degree(), labels);
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    let vertices: Vec<LabelTuple> = seen.into_iter().collect();
    let mut edges = Vec::with_capacity(vertices.len() * 2 * (n - 1));
    for (source, v) in vertices.iter().enumerate() {
        for index in 1..n {
            for sign in [Sign::Pos, Sign::Neg] {
                let mut labels = v.labels().to_vec();
                hurwitz_step_in_place(&mut labels, index, sign);
                let next = LabelTuple::from_trusted(tau.degree(), labels);
                let target = vertices
                    .binary_search(&next)
                    .expect("orbit is closed under Hurwitz moves");
                edges.push(HurwitzEdge {
                    source,
                    index,
                    sign,
                    target,
                });
            }
        }
    }
    Orbit { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::total_monodromy;

    fn lt(d: usize, pairs: &[(usize, usize)]) -> LabelTuple {
        LabelTuple::from_pairs(d, pairs).unwrap()
    }

    #[test]
    fn three_cycle_orbit() {
        let o = orbit(&lt(3, &[(1, 2), (2, 3)]));
        assert_eq!(
            o,
            vec![
                lt(3, &[(1, 2), (2, 3)]),
                lt(3, &[(1, 3), (1, 2)]),
                lt(3, &[(2, 3), (1, 3)]),
            ]
        );
    }

    #[test]
    fn annulus_orbit_preserves_monodromy() {
        let tau = lt(3, &[(1, 2), (1, 2), (2, 3)]);
        let o = orbit_with_edges(&tau);
        assert!(o.position(&tau).is_some());
        let mu = total_monodromy(&tau);
        assert!(o.vertices.iter().all(|v| total_monodromy(v) == mu));
        assert_eq!(o.edges.len(), o.vertices.len() * 4);
        for e in &o.edges {
            let mut labels = o.vertices[e.source].labels().to_vec();
            hurwitz_step_in_place(&mut labels, e.index, e.sign);
            assert_eq!(labels, o.vertices[e.target].labels());
        }
    }
}
