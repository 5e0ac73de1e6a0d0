//! Geometric operations on curves seen through their dual graphs: blow-up,
//! normalisation and smoothing of nodes, and the subset-sum formula for the
//! complexity of an iterated blow-up.
//!
//! Blowing up an edge k times replaces it by a path of k new genus-0
//! vertices between its endpoints; for a loop the two endpoints coincide,
//! so k blow-ups of a loop yield a (k+1)-cycle through its vertex. Both
//! cases preserve the arithmetic genus.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::dcg::complexity_mtt;
use crate::graph::{EdgeId, GraphError, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveOpsError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0} in the blow-up support is a loop; the subset formula needs non-loop nodes")]
    LoopInSupport(EdgeId),
}

/// Per-edge blow-up multiplicities `k_e >= 0`. Iteration order is by edge
/// id, so every consumer is independent of insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BlowUpVector {
    counts: BTreeMap<EdgeId, u64>,
}

impl BlowUpVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, edge: EdgeId, count: u64) {
        if count == 0 {
            self.counts.remove(&edge);
        } else {
            self.counts.insert(edge, count);
        }
    }

    pub fn get(&self, edge: EdgeId) -> u64 {
        self.counts.get(&edge).copied().unwrap_or(0)
    }

    /// Edges with a positive count, ascending by id.
    pub fn support(&self) -> impl Iterator<Item = (EdgeId, u64)> + '_ {
        self.counts.iter().map(|(&e, &k)| (e, k))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl FromIterator<(EdgeId, u64)> for BlowUpVector {
    fn from_iter<I: IntoIterator<Item = (EdgeId, u64)>>(iter: I) -> Self {
        let mut v = BlowUpVector::new();
        for (e, k) in iter {
            v.set(e, v.get(e) + k);
        }
        v
    }
}

/// Blows up edge `e` exactly `k >= 1` times: `e` is replaced by a path of
/// `k` new genus-0 vertices (appended after the existing indices) and `k+1`
/// fresh edges between its endpoints.
pub fn blow_up(g: &Multigraph, e: EdgeId, k: u64) -> Result<Multigraph, GraphError> {
    assert!(k >= 1, "a blow-up subdivides at least once");
    let edge = g.edge(e).ok_or(GraphError::UnknownEdge(e))?;
    let mut out = g.delete_edge(e)?;
    let mut prev = edge.u;
    for _ in 0..k {
        let w = out.add_vertex();
        out.add_edge(prev, w)?;
        prev = w;
    }
    out.add_edge(prev, edge.v)?;
    Ok(out)
}

/// Normalising the curve in the node of `e` deletes the edge.
pub fn normalise(g: &Multigraph, e: EdgeId) -> Result<Multigraph, GraphError> {
    g.delete_edge(e)
}

/// Normalisation in every node of `t` at once: all listed edges deleted.
pub fn normalisation_subset(g: &Multigraph, t: &[EdgeId]) -> Result<Multigraph, GraphError> {
    for &e in t {
        if g.edge(e).is_none() {
            return Err(GraphError::UnknownEdge(e));
        }
    }
    let mut out = g.clone();
    for &e in t {
        out = out.delete_edge(e)?;
    }
    Ok(out)
}

/// Smoothing the curve in the node of `e` contracts the (non-loop) edge.
pub fn smooth(g: &Multigraph, e: EdgeId) -> Result<Multigraph, GraphError> {
    g.contract_edge(e)
}

/// Applies `blow_up` with multiplicity `k_e` to every edge in the support,
/// in ascending edge-id order. New vertices are appended chain by chain, so
/// the output labelling is a function of the graph and the vector alone.
pub fn multi_blow_up(g: &Multigraph, k: &BlowUpVector) -> Result<Multigraph, GraphError> {
    for (e, _) in k.support() {
        if g.edge(e).is_none() {
            return Err(GraphError::UnknownEdge(e));
        }
    }
    let mut out = g.clone();
    for (e, count) in k.support() {
        out = blow_up(&out, e, count)?;
    }
    Ok(out)
}

/// Right-hand side of the blow-up complexity formula
/// `c(B_k C) = sum over T of S of (prod_{i in T} k_i) c(N_T C)`,
/// where S is the support of `k`. Every support edge must be a non-loop
/// edge.
pub fn blow_up_complexity_formula(g: &Multigraph, k: &BlowUpVector) -> Result<BigInt, CurveOpsError> {
    let support: Vec<(EdgeId, u64)> = k.support().collect();
    for &(e, _) in &support {
        let edge = g.edge(e).ok_or(GraphError::UnknownEdge(e))?;
        if edge.is_loop() {
            return Err(CurveOpsError::LoopInSupport(e));
        }
    }
    let mut total = BigInt::zero();
    // subsets of the support by binary counter
    for mask in 0u64..(1u64 << support.len()) {
        let mut coefficient = BigInt::from(1u8);
        let mut t = Vec::new();
        for (bit, &(e, count)) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                coefficient *= count;
                t.push(e);
            }
        }
        let normalised = normalisation_subset(g, &t)?;
        total += coefficient * complexity_mtt(&normalised);
    }
    Ok(total)
}
