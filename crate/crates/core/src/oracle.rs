//! Reference distances by breadth-first search over the explicit graph.
//!
//! Shares nothing with the path-class machinery beyond [`CirculantParams`],
//! which makes it usable as ground truth for the rest of the crate.

use std::collections::VecDeque;

use crate::diameter::{DiameterResult, Method};
use crate::params::CirculantParams;
use crate::{Error, Result};

/// `C_n(1, s)` with adjacency given by the offsets `{+1, -1, +s, -s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExplicitGraph {
    n: u64,
    offsets: [u64; 4],
}

impl ExplicitGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Sorted, deduplicated neighbors of `v`.
    pub fn neighbors(&self, v: u64) -> Vec<u64> {
        let mut out: Vec<u64> = self.offsets.iter().map(|o| (v + o) % self.n).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn degree(&self, v: u64) -> usize {
        self.neighbors(v).len()
    }
}

pub fn build_adjacency(p: &CirculantParams) -> ExplicitGraph {
    let (n, s) = (p.n(), p.s());
    ExplicitGraph { n, offsets: [1, n - 1, s, n - s] }
}

pub fn bfs_distances(g: &ExplicitGraph, source: u64) -> Result<Vec<u64>> {
    if source >= g.n {
        return Err(Error::VertexOutOfRange { n: g.n, vertex: source });
    }
    let n = g.n as usize;
    let mut dist = vec![u64::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u as usize] + 1;
        for o in g.offsets {
            let v = (u + o) % g.n;
            if dist[v as usize] == u64::MAX {
                dist[v as usize] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// Eccentricity of vertex `0`, which is the diameter by vertex-transitivity.
pub fn oracle_diameter(p: &CirculantParams) -> DiameterResult {
    let g = build_adjacency(p);
    let dist = bfs_distances(&g, 0).expect("0 is a vertex");
    let value = dist.iter().copied().max().unwrap_or(0);
    let witnesses = (2..=p.half()).filter(|&i| dist[i as usize] == value).collect();
    DiameterResult { value, witnesses, method: Method::Oracle }
}

/// Maximum eccentricity over every source. Quadratic; only for cross-checking
/// the single-source shortcut on small graphs.
pub fn oracle_diameter_all_sources(p: &CirculantParams) -> u64 {
    let g = build_adjacency(p);
    (0..p.n())
        .map(|src| bfs_distances(&g, src).unwrap().into_iter().max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}
