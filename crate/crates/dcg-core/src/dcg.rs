//! Spanning-tree complexity by three independent engines and the degree
//! class group of a multigraph.
//!
//! The engines: the matrix-tree determinant (the workhorse), the
//! deletion/contraction recursion, and brute-force enumeration of edge
//! subsets. The latter two exist as oracles for small graphs; every
//! property suite checks that all three agree.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{Edge, Multigraph};
use crate::linalg::{minor_determinant, smith_normal_form, GroupStructure, IntMatrix};

/// Edge-count cap for the enumeration engine.
pub const ENUMERATION_EDGE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DcgError {
    #[error("graph is not connected; the degree class group is defined for connected graphs")]
    Disconnected,
    #[error("{edges} non-loop edges exceed the enumeration limit of {limit}; use the matrix-tree engine")]
    EnumerationLimit { edges: usize, limit: usize },
}

/// The intersection matrix M of the loopless reduction: off-diagonal entry
/// (i, j) counts the non-loop edges between v_i and v_j, the diagonal holds
/// the negated loopless degrees. Every row and column sums to zero.
pub fn intersection_matrix(g: &Multigraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut m = vec![0i64; n * n];
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        m[e.u * n + e.v] += 1;
        m[e.v * n + e.u] += 1;
        m[e.u * n + e.u] -= 1;
        m[e.v * n + e.v] -= 1;
    }
    IntMatrix::from_fn(n, n, |i, j| BigInt::from(m[i * n + j]))
}

/// Number of spanning trees via the matrix-tree theorem:
/// `c = (-1)^(s+t+gamma-1) det(M^s_t)` with the last row and column removed.
/// Returns 0 exactly when the graph is disconnected, 1 for a single vertex.
pub fn complexity_mtt(g: &Multigraph) -> BigInt {
    let m = intersection_matrix(g);
    let n = g.vertex_count();
    let det = minor_determinant(&m, n - 1, n - 1).expect("intersection matrix is square");
    // 1-based s = t = gamma, so the sign is (-1)^(gamma - 1)
    let c = if (n - 1) % 2 == 0 { det } else { -det };
    debug_assert!(!c.is_negative(), "matrix-tree count must be non-negative");
    c
}

/// Number of spanning trees via `c(G) = c(G - e) + c(G . e)`, recursing on
/// the lexicographically smallest non-loop edge. No memoisation: this is an
/// oracle for small graphs.
pub fn complexity_deletion_contraction(g: &Multigraph) -> BigInt {
    let g = g.loopless_reduction();
    if g.vertex_count() == 1 {
        return BigInt::one();
    }
    if !g.is_connected() {
        return BigInt::zero();
    }
    let e = g
        .edges()
        .iter()
        .min_by_key(|e| (e.u, e.v, e.id))
        .expect("connected graph on >= 2 vertices has an edge")
        .id;
    let deleted = g.delete_edge(e).expect("edge taken from the graph");
    let contracted = g.contract_edge(e).expect("chosen edge is not a loop");
    complexity_deletion_contraction(&deleted) + complexity_deletion_contraction(&contracted)
}

/// Number of spanning trees by enumerating subsets of `gamma - 1` non-loop
/// edges; parallel edges count as distinct trees. Errors out above the edge
/// limit.
pub fn complexity_enumeration(g: &Multigraph) -> Result<BigInt, DcgError> {
    complexity_enumeration_with_limit(g, ENUMERATION_EDGE_LIMIT)
}

pub fn complexity_enumeration_with_limit(g: &Multigraph, limit: usize) -> Result<BigInt, DcgError> {
    let edges: Vec<Edge> = g.edges().iter().filter(|e| !e.is_loop()).copied().collect();
    if edges.len() > limit {
        return Err(DcgError::EnumerationLimit {
            edges: edges.len(),
            limit,
        });
    }
    let needed = g.vertex_count() - 1;
    if edges.len() < needed {
        return Ok(BigInt::zero());
    }
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    let count = count_forests(&edges, 0, needed, &mut parent);
    Ok(BigInt::from(count))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Counts extensions of the current forest by `needed` more edges chosen
/// from `edges[from..]` without creating a cycle. A cycle-free selection of
/// `gamma - 1` edges is exactly a spanning tree.
fn count_forests(edges: &[Edge], from: usize, needed: usize, parent: &mut Vec<usize>) -> u64 {
    if needed == 0 {
        return 1;
    }
    if edges.len() - from < needed {
        return 0;
    }
    let mut total = 0;
    for i in from..=edges.len() - needed {
        let ru = find(parent, edges[i].u);
        let rv = find(parent, edges[i].v);
        if ru == rv {
            continue;
        }
        let mut next = parent.clone();
        next[ru] = rv;
        total += count_forests(edges, i + 1, needed - 1, &mut next);
    }
    total
}

/// Invariant factors of the degree class group: the cokernel of the reduced
/// intersection matrix M* (last row and last column deleted, a convention
/// the row/column-invariance properties justify).
pub fn degree_class_group(g: &Multigraph) -> Result<GroupStructure, DcgError> {
    if !g.is_connected() {
        return Err(DcgError::Disconnected);
    }
    let m = intersection_matrix(g);
    let n = g.vertex_count();
    let reduced = m.minor_matrix(n - 1, n - 1);
    let snf = smith_normal_form(&reduced);
    let group = GroupStructure::from_snf_diagonal(&snf.diagonal, n - 1);
    debug_assert_eq!(group.free_rank(), 0, "connected graph has finite DCG");
    Ok(group)
}

/// Combined complexity/group report for a connected multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DcgReport {
    pub gamma: usize,
    pub delta: usize,
    pub loops: usize,
    pub complexity: BigInt,
    pub group: GroupStructure,
}

/// Bundles the matrix-tree complexity with the group structure and the
/// vertex/edge/loop counts, asserting that the group order equals the
/// complexity.
pub fn dcg_report(g: &Multigraph) -> Result<DcgReport, DcgError> {
    let group = degree_class_group(g)?;
    let complexity = complexity_mtt(g);
    assert_eq!(
        group.order().as_ref(),
        Some(&complexity),
        "invariant factor product must equal the spanning tree count"
    );
    Ok(DcgReport {
        gamma: g.vertex_count(),
        delta: g.edge_count(),
        loops: g.loop_count(),
        complexity,
        group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{banana_graph, cycle_graph};
    use crate::graph::Multigraph;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn intersection_matrix_examples() {
        for k in 1..5 {
            let m = intersection_matrix(&banana_graph(k as u64));
            assert_eq!(m[(0, 0)], big(-k));
            assert_eq!(m[(0, 1)], big(k));
            assert_eq!(m[(1, 0)], big(k));
            assert_eq!(m[(1, 1)], big(-k));
        }

        let m = intersection_matrix(&cycle_graph(3));
        let expected = IntMatrix::from_rows(&[vec![-2, 1, 1], vec![1, -2, 1], vec![1, 1, -2]]);
        assert_eq!(m, expected);

        let lonely = Multigraph::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        let m = intersection_matrix(&lonely);
        assert_eq!(m.rows(), 1);
        assert!(m[(0, 0)].is_zero());
    }

    #[test]
    fn intersection_matrix_rows_sum_to_zero() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (2, 2)]).unwrap();
        let m = intersection_matrix(&g);
        for i in 0..4 {
            let row: BigInt = (0..4).map(|j| m[(i, j)].clone()).sum();
            let col: BigInt = (0..4).map(|j| m[(j, i)].clone()).sum();
            assert!(row.is_zero() && col.is_zero());
        }
    }

    #[test]
    fn mtt_examples() {
        for k in 1..7u64 {
            assert_eq!(complexity_mtt(&cycle_graph(k)), big(k as i64));
            assert_eq!(complexity_mtt(&banana_graph(k)), big(k as i64));
        }
        let k4 = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(complexity_mtt(&k4), big(16));
        assert_eq!(complexity_mtt(&Multigraph::new(1).unwrap()), big(1));
        assert_eq!(complexity_mtt(&Multigraph::new(3).unwrap()), big(0));
    }

    #[test]
    fn deletion_contraction_examples() {
        assert_eq!(complexity_deletion_contraction(&banana_graph(3)), big(3));

        let wedge = cycle_graph(3).wedge_sum(&cycle_graph(3), 0, 0).unwrap();
        assert_eq!(complexity_deletion_contraction(&wedge), big(9));

        let split = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(complexity_deletion_contraction(&split), big(0));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(complexity_enumeration(&banana_graph(3)).unwrap(), big(3));

        let path = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(complexity_enumeration(&path).unwrap(), big(1));

        // 4-cycle with two opposite edges doubled
        let doubled =
            Multigraph::from_edges(4, &[(0, 1), (1, 2), (1, 2), (2, 3), (3, 0), (3, 0)]).unwrap();
        assert_eq!(complexity_enumeration(&doubled).unwrap(), big(12));
    }

    #[test]
    fn enumeration_limit() {
        let big_banana = banana_graph(25);
        assert_eq!(
            complexity_enumeration(&big_banana),
            Err(DcgError::EnumerationLimit { edges: 25, limit: 24 })
        );
        assert_eq!(
            complexity_enumeration_with_limit(&big_banana, 25).unwrap(),
            big(25)
        );
    }

    #[test]
    fn degree_class_group_examples() {
        assert_eq!(degree_class_group(&banana_graph(4)).unwrap(), GroupStructure::cyclic(4));

        let k4 = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let g = degree_class_group(&k4).unwrap();
        assert_eq!(g.invariant_factors(), &[big(4), big(4)]);

        let doubled =
            Multigraph::from_edges(4, &[(0, 1), (1, 2), (1, 2), (2, 3), (3, 0), (3, 0)]).unwrap();
        let g = degree_class_group(&doubled).unwrap();
        assert_eq!(g.invariant_factors(), &[big(2), big(6)]);

        assert_eq!(
            degree_class_group(&Multigraph::new(2).unwrap()),
            Err(DcgError::Disconnected)
        );
    }

    #[test]
    fn report_examples() {
        let tree = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r = dcg_report(&tree).unwrap();
        assert_eq!(r.complexity, big(1));
        assert!(r.group.is_trivial());

        let r = dcg_report(&cycle_graph(5)).unwrap();
        assert_eq!(r.complexity, big(5));
        assert_eq!(r.group, GroupStructure::cyclic(5));
        assert_eq!((r.gamma, r.delta, r.loops), (5, 5, 0));
    }

    #[test]
    fn loops_do_not_change_complexity_or_group() {
        let mut g = cycle_graph(4);
        g.add_edge(1, 1).unwrap();
        g.add_edge(3, 3).unwrap();
        assert_eq!(complexity_mtt(&g), big(4));
        assert_eq!(degree_class_group(&g).unwrap(), GroupStructure::cyclic(4));
        let r = dcg_report(&g).unwrap();
        assert_eq!((r.delta, r.loops), (6, 2));
    }
}
