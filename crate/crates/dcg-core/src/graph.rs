//! Multigraphs with loops, parallel edges and per-vertex genus weights.
//!
//! Vertices are dense 0-based indices. Edges carry stable identifiers so that
//! deletion/contraction recursions can name a specific edge of a specific
//! graph value. Every operation returns a new graph; values are immutable
//! once built.

use std::fmt;

use thiserror::Error;

/// Errors from graph construction and the elementary operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a multigraph needs at least one vertex")]
    NoVertices,
    #[error("vertex index {index} out of range for a graph on {vertex_count} vertices")]
    InvalidVertex { index: usize, vertex_count: usize },
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {0} is a loop and cannot be contracted")]
    LoopContraction(EdgeId),
    #[error("graph is not connected")]
    Disconnected,
}

/// Stable identifier of an edge within one graph value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered edge `{u, v}`; `u == v` is a loop. Endpoints are stored with
/// `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint other than `w` (for a loop, `w` itself).
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A finite multigraph with loops and genus weights (the dual graph of a
/// nodal curve: one vertex per irreducible component, one edge per node).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    genus: Vec<u64>,
    next_id: u32,
}

impl Multigraph {
    /// An edgeless graph on `vertex_count >= 1` vertices, all of genus 0.
    pub fn new(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Multigraph {
            vertex_count,
            edges: Vec::new(),
            genus: vec![0; vertex_count],
            next_id: 0,
        })
    }

    /// Builds a graph from an endpoint list; edge ids are assigned 0, 1, ...
    /// in list order.
    pub fn from_edges(vertex_count: usize, endpoints: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Multigraph::new(vertex_count)?;
        for &(u, v) in endpoints {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, index: usize) -> Result<(), GraphError> {
        if index < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                index,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Appends an edge and returns its fresh id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let id = EdgeId(self.next_id);
        self.next_id += 1;
        self.edges.push(Edge {
            id,
            u: u.min(v),
            v: u.max(v),
        });
        Ok(id)
    }

    /// Appends a new isolated vertex of genus 0 and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.genus.push(0);
        self.vertex_count - 1
    }

    pub fn set_genus(&mut self, vertex: usize, genus: u64) -> Result<(), GraphError> {
        self.check_vertex(vertex)?;
        self.genus[vertex] = genus;
        Ok(())
    }

    /// Number of vertices, written gamma for the dual graph of a curve.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges including loops, written delta.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<Edge> {
        self.edges.iter().copied().find(|e| e.id == id)
    }

    pub fn genus(&self, vertex: usize) -> u64 {
        self.genus[vertex]
    }

    pub fn genus_weights(&self) -> &[u64] {
        &self.genus
    }

    pub fn genus_sum(&self) -> u64 {
        self.genus.iter().sum()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Half-edge degree: a loop contributes 2 at its vertex.
    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == vertex) as usize + (e.v == vertex) as usize)
            .sum()
    }

    /// Degree ignoring loops entirely.
    pub fn loopless_degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| (e.u == vertex) as usize + (e.v == vertex) as usize)
            .sum()
    }

    /// Number of non-loop edges between the distinct vertices `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let (a, b) = (u.min(v), u.max(v));
        self.edges
            .iter()
            .filter(|e| !e.is_loop() && e.u == a && e.v == b)
            .count()
    }

    /// The same graph with every loop removed. Idempotent.
    pub fn loopless_reduction(&self) -> Multigraph {
        let mut out = self.clone();
        out.edges.retain(|e| !e.is_loop());
        out
    }

    /// Connectivity of the underlying graph; loops are irrelevant and a
    /// single-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                let w = if e.u == v {
                    e.v
                } else if e.v == v {
                    e.u
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// First Betti number delta - gamma + 1 of a connected graph. Loops
    /// count towards delta.
    pub fn first_betti(&self) -> Result<u64, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        // delta >= gamma - 1 for a connected graph, so add 1 first
        Ok(self.edge_count() as u64 + 1 - self.vertex_count as u64)
    }

    /// Arithmetic genus sum(g_v) + delta - gamma + 1 of a connected graph.
    pub fn arithmetic_genus(&self) -> Result<u64, GraphError> {
        Ok(self.genus_sum() + self.first_betti()?)
    }

    /// Removes edge `e`; vertices and weights are unchanged, the result may
    /// be disconnected. Corresponds to normalising the curve in the node.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Multigraph, GraphError> {
        if self.edge(e).is_none() {
            return Err(GraphError::UnknownEdge(e));
        }
        let mut out = self.clone();
        out.edges.retain(|edge| edge.id != e);
        Ok(out)
    }

    /// Contracts the non-loop edge `e`: its endpoints merge into the vertex
    /// `min(u, v)`, parallel copies of `e` become loops there, and the merged
    /// vertex carries the sum of the two genus weights. Corresponds to
    /// smoothing the curve in the node.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Multigraph, GraphError> {
        let edge = self.edge(e).ok_or(GraphError::UnknownEdge(e))?;
        if edge.is_loop() {
            return Err(GraphError::LoopContraction(e));
        }
        let (keep, drop) = (edge.u, edge.v); // keep < drop
        let relabel = |w: usize| {
            if w == drop {
                keep
            } else if w > drop {
                w - 1
            } else {
                w
            }
        };
        let mut genus = self.genus.clone();
        genus[keep] += genus[drop];
        genus.remove(drop);
        let edges = self
            .edges
            .iter()
            .filter(|other| other.id != e)
            .map(|other| {
                let (a, b) = (relabel(other.u), relabel(other.v));
                Edge {
                    id: other.id,
                    u: a.min(b),
                    v: a.max(b),
                }
            })
            .collect();
        Ok(Multigraph {
            vertex_count: self.vertex_count - 1,
            edges,
            genus,
            next_id: self.next_id,
        })
    }

    /// Attaches `other` to `self` by identifying `other`'s vertex `v2` with
    /// `self`'s vertex `v1`. The merged vertex carries the sum of the two
    /// genus weights; edge ids are reassigned 0, 1, ... with `self`'s edges
    /// first.
    pub fn wedge_sum(&self, other: &Multigraph, v1: usize, v2: usize) -> Result<Multigraph, GraphError> {
        self.check_vertex(v1)?;
        other.check_vertex(v2)?;
        let base = self.vertex_count;
        let relabel = |w: usize| {
            if w == v2 {
                v1
            } else if w > v2 {
                base + w - 1
            } else {
                base + w
            }
        };
        let mut out = Multigraph::new(self.vertex_count + other.vertex_count - 1)?;
        out.genus[..base].copy_from_slice(&self.genus);
        out.genus[v1] += other.genus[v2];
        for (w, &g) in other.genus.iter().enumerate() {
            if w != v2 {
                out.genus[relabel(w)] = g;
            }
        }
        for e in &self.edges {
            out.add_edge(e.u, e.v)?;
        }
        for e in &other.edges {
            out.add_edge(relabel(e.u), relabel(e.v))?;
        }
        Ok(out)
    }

    /// Relabels vertices by `perm`, where `perm[old] = new`. Edge ids are
    /// preserved. `perm` must be a permutation of `0..vertex_count`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Multigraph, GraphError> {
        if perm.len() != self.vertex_count {
            return Err(GraphError::InvalidVertex {
                index: perm.len(),
                vertex_count: self.vertex_count,
            });
        }
        let mut seen = vec![false; self.vertex_count];
        for &p in perm {
            self.check_vertex(p)?;
            if seen[p] {
                return Err(GraphError::InvalidVertex {
                    index: p,
                    vertex_count: self.vertex_count,
                });
            }
            seen[p] = true;
        }
        let mut genus = vec![0; self.vertex_count];
        for (old, &new) in perm.iter().enumerate() {
            genus[new] = self.genus[old];
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (perm[e.u], perm[e.v]);
                Edge {
                    id: e.id,
                    u: a.min(b),
                    v: a.max(b),
                }
            })
            .collect();
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges,
            genus,
            next_id: self.next_id,
        })
    }
}
