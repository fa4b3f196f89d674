//! Combinatorial construction of the branched cover of a labelled disc.
//!
//! The disc is cut along `n` arcs, one from each branch value to the
//! boundary, and `d` copies are glued: across cut `i` sheet `j` continues
//! into sheet `t_i(j)`. The cover retracts onto its [`Spine`], which has a
//! vertex per sheet basepoint `x_j` and an edge `e_i` joining the two sheets
//! swapped by `t_i`.

use serde::Serialize;

use crate::braid::{total_monodromy, LabelTuple};
use crate::perm::Transposition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverPresentation {
    pub d: usize,
    pub n: usize,
    pub labels: LabelTuple,
    /// `gluings[i-1]` is the pair of sheets exchanged across cut `i`.
    pub gluings: Vec<Transposition>,
    /// Indices of the basepoint lifts `x_1..x_d`.
    pub basepoints: Vec<usize>,
}

/// Edge `e_index` of a spine, oriented from `a` to `b` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpineEdge {
    pub index: usize,
    pub a: usize,
    pub b: usize,
}

/// The ribbon graph the cover retracts onto. Edge ends at each vertex are
/// ordered by edge index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spine {
    pub d: usize,
    pub edges: Vec<SpineEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverTopology {
    pub euler_characteristic: i64,
    /// Basepoints on each boundary circle, in traversal order starting at the smallest.
    pub boundary_components: Vec<Vec<usize>>,
    pub genus: usize,
}

pub fn build_cover(tau: &LabelTuple) -> CoverPresentation {
    CoverPresentation {
        d: tau.degree(),
        n: tau.len(),
        labels: tau.clone(),
        gluings: tau.labels().to_vec(),
        basepoints: (1..=tau.degree()).collect(),
    }
}

impl CoverPresentation {
    /// Walks the boundary of the glued sheets.
    ///
    /// On each sheet the boundary splits into `n + 1` segments: segment `k < n`
    /// runs up to the foot of cut `n - k`, segment `n` runs from the foot of
    /// cut 1 back to the basepoint. Crossing the foot of cut `c` continues on
    /// sheet `t_c(j)`. Each boundary circle is the set of basepoints met.
    pub fn boundary_traversal(&self) -> Vec<Vec<usize>> {
        let segments = self.n + 1;
        let mut used = vec![false; self.d * segments];
        let mut components = Vec::new();
        for start in 1..=self.d {
            if used[(start - 1) * segments] {
                continue;
            }
            let mut component = Vec::new();
            let (mut sheet, mut segment) = (start, 0usize);
            loop {
                let slot = (sheet - 1) * segments + segment;
                if used[slot] {
                    break;
                }
                used[slot] = true;
                if segment == 0 {
                    component.push(sheet);
                }
                if segment < self.n {
                    let cut = self.n - segment;
                    sheet = self.gluings[cut - 1].apply(sheet);
                    segment += 1;
                } else {
                    segment = 0;
                }
            }
            components.push(component);
        }
        debug_assert!(
            used.iter().all(|&u| u),
            "every boundary segment is traversed once"
        );
        components
    }
}

/// Euler characteristic, boundary circles and genus of the cover.
///
/// Boundary circles come from walking the glued sheets and must agree, as
/// sets of basepoints, with the cycles of the total monodromy.
pub fn topology(c: &CoverPresentation) -> CoverTopology {
    let euler = c.d as i64 - c.n as i64;
    let walked = c.boundary_traversal();

    let mut walked_sets: Vec<Vec<usize>> = walked
        .iter()
        .map(|comp| {
            let mut s = comp.clone();
            s.sort_unstable();
            s
        })
        .collect();
    walked_sets.sort();
    let mut cycle_sets: Vec<Vec<usize>> = total_monodromy(&c.labels)
        .cycles()
        .into_iter()
        .map(|mut cyc| {
            cyc.sort_unstable();
            cyc
        })
        .collect();
    cycle_sets.sort();
    assert_eq!(
        walked_sets, cycle_sets,
        "boundary traversal disagrees with the cycles of the total monodromy"
    );

    let boundaries = walked.len() as i64;
    let twice_genus = 2 - euler - boundaries;
    debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
    CoverTopology {
        euler_characteristic: euler,
        boundary_components: walked,
        genus: (twice_genus / 2) as usize,
    }
}

pub fn spine(tau: &LabelTuple) -> Spine {
    Spine {
        d: tau.degree(),
        edges: tau
            .labels()
            .iter()
            .enumerate()
            .map(|(k, t)| SpineEdge {
                index: k + 1,
                a: t.a(),
                b: t.b(),
            })
            .collect(),
    }
}

impl Spine {
    pub fn edge(&self, index: usize) -> SpineEdge {
        self.edges[index - 1]
    }

    /// `(tail, head)` of a signed edge letter.
    pub fn letter_ends(&self, letter: i32) -> (usize, usize) {
        let e = self.edge(letter.unsigned_abs() as usize);
        if letter > 0 {
            (e.a, e.b)
        } else {
            (e.b, e.a)
        }
    }

    /// Edge ends at vertex `v` in index order; the flag is true for the tail end.
    pub fn vertex_order(&self, v: usize) -> Vec<(usize, bool)> {
        let mut ends = Vec::new();
        for e in &self.edges {
            if e.a == v {
                ends.push((e.index, true));
            }
            if e.b == v {
                ends.push((e.index, false));
            }
        }
        ends
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.d as i64 - self.edges.len() as i64
    }

    pub fn is_connected(&self) -> bool {
        let ts: Vec<Transposition> = self
            .edges
            .iter()
            .map(|e| Transposition::new(e.a, e.b).expect("spine edges join distinct sheets"))
            .collect();
        crate::perm::is_transitive(&ts, self.d)
    }

    pub fn betti_number(&self) -> usize {
        (1 - self.euler_characteristic()) as usize
    }

    /// Greedy spanning tree taking the lowest-index edges first. Returns a
    /// tree/non-tree flag per edge.
    pub fn spanning_tree(&self) -> Vec<bool> {
        let mut parent: Vec<usize> = (0..=self.d).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        self.edges
            .iter()
            .map(|e| {
                let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
                if ra != rb {
                    parent[ra] = rb;
                    true
                } else {
                    false
                }
            })
            .collect()
    }

    /// For each vertex, the tree path from `x_1` as a word of signed edges.
    pub fn tree_paths(&self) -> Vec<Vec<i32>> {
        let in_tree = self.spanning_tree();
        let mut paths: Vec<Option<Vec<i32>>> = vec![None; self.d + 1];
        paths[1] = Some(Vec::new());
        let mut frontier = vec![1usize];
        while let Some(v) = frontier.pop() {
            let here = paths[v].clone().expect("visited");
            for e in self.edges.iter().filter(|e| in_tree[e.index - 1]) {
                let (next, letter) = if e.a == v {
                    (e.b, e.index as i32)
                } else if e.b == v {
                    (e.a, -(e.index as i32))
                } else {
                    continue;
                };
                if paths[next].is_none() {
                    let mut p = here.clone();
                    p.push(letter);
                    paths[next] = Some(p);
                    frontier.push(next);
                }
            }
        }
        paths.into_iter().map(Option::unwrap_or_default).collect()
    }
}
