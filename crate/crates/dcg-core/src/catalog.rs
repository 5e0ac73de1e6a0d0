//! Embedded tables of all stable dual graphs of genus 2 and 3, with their
//! expected complexity and degree class group, plus recomputation-based
//! verification. The graphs are transcribed as vertex/edge lists; the
//! verification recomputes every column from the stored graph.

use std::fmt;

use num_bigint::BigInt;

use crate::dcg::{complexity_mtt, degree_class_group};
use crate::graph::Multigraph;
use crate::linalg::GroupStructure;

/// One table row: a stable graph with its expected invariants.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub label: &'static str,
    pub graph: Multigraph,
    pub genus: u64,
    pub nodes: usize,
    pub components: usize,
    pub expected_complexity: u64,
    pub expected_group: GroupStructure,
}

fn entry(
    label: &'static str,
    genus: u64,
    vertices: usize,
    weights: &[(usize, u64)],
    edges: &[(usize, usize)],
    expected_complexity: u64,
    factors: &[u64],
) -> CatalogEntry {
    let mut graph = Multigraph::from_edges(vertices, edges).expect("catalog graph is well formed");
    for &(v, g) in weights {
        graph.set_genus(v, g).expect("catalog weight is well formed");
    }
    CatalogEntry {
        label,
        graph,
        genus,
        nodes: edges.len(),
        components: vertices,
        expected_complexity,
        expected_group: GroupStructure::new(factors.iter().map(|&f| BigInt::from(f)).collect(), 0),
    }
}

/// The seven stable dual graphs of genus 2.
pub fn genus2_table() -> Vec<CatalogEntry> {
    vec![
        entry("g2_01_smooth", 2, 1, &[(0, 2)], &[], 1, &[]),
        entry("g2_02_irreducible_one_node", 2, 1, &[(0, 1)], &[(0, 0)], 1, &[]),
        entry("g2_03_two_elliptic_one_node", 2, 2, &[(0, 1), (1, 1)], &[(0, 1)], 1, &[]),
        entry("g2_04_irreducible_two_nodes", 2, 1, &[], &[(0, 0), (0, 0)], 1, &[]),
        entry("g2_05_nodal_plus_elliptic", 2, 2, &[(1, 1)], &[(0, 0), (0, 1)], 1, &[]),
        entry("g2_06_two_nodal_joined", 2, 2, &[], &[(0, 0), (0, 1), (1, 1)], 1, &[]),
        entry("g2_07_theta", 2, 2, &[], &[(0, 1), (0, 1), (0, 1)], 3, &[3]),
    ]
}

/// The thirty-nine stable dual graphs of genus 3.
pub fn genus3_table() -> Vec<CatalogEntry> {
    vec![
        entry("g3_01_smooth", 3, 1, &[(0, 3)], &[], 1, &[]),
        entry("g3_02_genus2_loop", 3, 1, &[(0, 2)], &[(0, 0)], 1, &[]),
        entry("g3_03_genus2_genus1_edge", 3, 2, &[(0, 2), (1, 1)], &[(0, 1)], 1, &[]),
        entry("g3_04_elliptic_two_loops", 3, 1, &[(0, 1)], &[(0, 0), (0, 0)], 1, &[]),
        entry("g3_05_elliptic_loop_edge_elliptic", 3, 2, &[(0, 1), (1, 1)], &[(0, 0), (0, 1)], 1, &[]),
        entry("g3_06_loop_edge_genus2", 3, 2, &[(1, 2)], &[(0, 0), (0, 1)], 1, &[]),
        entry("g3_07_elliptic_banana2", 3, 2, &[(0, 1), (1, 1)], &[(0, 1), (0, 1)], 2, &[2]),
        entry(
            "g3_08_elliptic_path",
            3,
            3,
            &[(0, 1), (1, 1), (2, 1)],
            &[(0, 1), (1, 2)],
            1,
            &[],
        ),
        entry("g3_09_three_loops", 3, 1, &[], &[(0, 0), (0, 0), (0, 0)], 1, &[]),
        entry(
            "g3_10_two_loops_edge_elliptic",
            3,
            2,
            &[(1, 1)],
            &[(0, 0), (0, 0), (0, 1)],
            1,
            &[],
        ),
        entry(
            "g3_11_elliptic_loop_edge_loop",
            3,
            2,
            &[(0, 1)],
            &[(0, 0), (0, 1), (1, 1)],
            1,
            &[],
        ),
        entry(
            "g3_12_loop_banana2_elliptic",
            3,
            2,
            &[(1, 1)],
            &[(0, 0), (0, 1), (0, 1)],
            2,
            &[2],
        ),
        entry(
            "g3_13_theta_elliptic",
            3,
            2,
            &[(0, 1)],
            &[(0, 1), (0, 1), (0, 1)],
            3,
            &[3],
        ),
        entry(
            "g3_14_loop_edge_elliptic_edge_elliptic",
            3,
            3,
            &[(1, 1), (2, 1)],
            &[(0, 0), (0, 1), (1, 2)],
            1,
            &[],
        ),
        entry(
            "g3_15_elliptic_edge_loop_edge_elliptic",
            3,
            3,
            &[(0, 1), (2, 1)],
            &[(0, 1), (1, 1), (1, 2)],
            1,
            &[],
        ),
        entry(
            "g3_16_elliptic_edge_banana2_elliptic",
            3,
            3,
            &[(0, 1), (2, 1)],
            &[(0, 1), (1, 2), (1, 2)],
            2,
            &[2],
        ),
        entry(
            "g3_17_two_loops_edge_loop",
            3,
            2,
            &[],
            &[(0, 0), (0, 0), (0, 1), (1, 1)],
            1,
            &[],
        ),
        entry(
            "g3_18_loop_banana2_loop",
            3,
            2,
            &[],
            &[(0, 0), (0, 1), (0, 1), (1, 1)],
            2,
            &[2],
        ),
        entry(
            "g3_19_loop_theta",
            3,
            2,
            &[],
            &[(0, 0), (0, 1), (0, 1), (0, 1)],
            3,
            &[3],
        ),
        entry("g3_20_banana4", 3, 2, &[], &[(0, 1), (0, 1), (0, 1), (0, 1)], 4, &[4]),
        entry(
            "g3_21_loop_edge_elliptic_edge_loop",
            3,
            3,
            &[(1, 1)],
            &[(0, 0), (0, 1), (1, 2), (2, 2)],
            1,
            &[],
        ),
        entry(
            "g3_22_loop_edge_loop_edge_elliptic",
            3,
            3,
            &[(2, 1)],
            &[(0, 0), (0, 1), (1, 1), (1, 2)],
            1,
            &[],
        ),
        entry(
            "g3_23_loop_edge_banana2_elliptic",
            3,
            3,
            &[(2, 1)],
            &[(0, 0), (0, 1), (1, 2), (1, 2)],
            2,
            &[2],
        ),
        entry(
            "g3_24_doubled_triangle_elliptic_apex",
            3,
            3,
            &[(0, 1)],
            &[(0, 1), (0, 2), (1, 2), (1, 2)],
            5,
            &[5],
        ),
        entry(
            "g3_25_elliptic_edge_theta",
            3,
            3,
            &[(0, 1)],
            &[(0, 1), (1, 2), (1, 2), (1, 2)],
            3,
            &[3],
        ),
        entry(
            "g3_26_two_elliptic_tails_edge_loop",
            3,
            4,
            &[(0, 1), (1, 1)],
            &[(0, 2), (1, 2), (2, 3), (3, 3)],
            1,
            &[],
        ),
        entry(
            "g3_27_three_loops_path",
            3,
            3,
            &[],
            &[(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)],
            1,
            &[],
        ),
        entry(
            "g3_28_loop_edge_banana2_loop",
            3,
            3,
            &[],
            &[(0, 0), (0, 1), (1, 2), (1, 2), (2, 2)],
            2,
            &[2],
        ),
        entry(
            "g3_29_loop_edge_theta",
            3,
            3,
            &[],
            &[(0, 0), (0, 1), (1, 2), (1, 2), (1, 2)],
            3,
            &[3],
        ),
        entry(
            "g3_30_twice_doubled_triangle",
            3,
            3,
            &[],
            &[(0, 1), (0, 1), (0, 2), (0, 2), (1, 2)],
            8,
            &[8],
        ),
        entry(
            "g3_31_doubled_triangle_loop_apex",
            3,
            3,
            &[],
            &[(0, 0), (0, 1), (0, 2), (1, 2), (1, 2)],
            5,
            &[5],
        ),
        entry(
            "g3_32_doubled_triangle_elliptic_tail",
            3,
            4,
            &[(0, 1)],
            &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 3)],
            5,
            &[5],
        ),
        entry(
            "g3_33_loop_edge_banana2_edge_elliptic",
            3,
            4,
            &[(3, 1)],
            &[(0, 0), (0, 1), (1, 2), (1, 2), (2, 3)],
            2,
            &[2],
        ),
        entry(
            "g3_34_elliptic_tail_two_loop_branches",
            3,
            4,
            &[(0, 1)],
            &[(0, 1), (1, 2), (1, 3), (2, 2), (3, 3)],
            1,
            &[],
        ),
        entry(
            "g3_35_loop_edge_banana2_edge_loop",
            3,
            4,
            &[],
            &[(0, 0), (0, 1), (1, 2), (1, 2), (2, 3), (3, 3)],
            2,
            &[2],
        ),
        entry(
            "g3_36_doubled_triangle_loop_tail",
            3,
            4,
            &[],
            &[(0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 3)],
            5,
            &[5],
        ),
        entry(
            "g3_37_three_loop_branches",
            3,
            4,
            &[],
            &[(0, 0), (0, 1), (1, 2), (1, 3), (2, 2), (3, 3)],
            1,
            &[],
        ),
        entry(
            "g3_38_four_cycle_opposite_doubled",
            3,
            4,
            &[],
            &[(0, 1), (1, 2), (1, 2), (2, 3), (3, 0), (3, 0)],
            12,
            &[2, 6],
        ),
        entry(
            "g3_39_complete_four",
            3,
            4,
            &[],
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            16,
            &[4, 4],
        ),
    ]
}

/// Stability in the half-edge convention: every genus-0 vertex must carry
/// at least 3 half-edges (a loop counts twice at its vertex). Meaningful
/// for graphs of arithmetic genus >= 2.
pub fn is_stable(g: &Multigraph) -> bool {
    (0..g.vertex_count()).all(|v| g.genus(v) > 0 || g.degree(v) >= 3)
}

/// Result of re-deriving one catalog row from its stored graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCheck {
    pub label: &'static str,
    pub passed: bool,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for EntryCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} expected={} got={}",
            self.label,
            if self.passed { "PASS" } else { "FAIL" },
            self.expected,
            self.got
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<EntryCheck>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{}", check)?;
        }
        write!(f, "{}/{} entries verified", self.passed_count(), self.checks.len())
    }
}

fn describe(nodes: usize, components: usize, genus: String, complexity: String, group: String) -> String {
    format!(
        "nodes={};components={};genus={};complexity={};group={}",
        nodes, components, genus, complexity, group
    )
}

/// Recomputes nodes, components, genus, complexity and group for each entry
/// and compares with the stored expectations.
pub fn verify_entries(entries: &[CatalogEntry]) -> VerifyReport {
    let checks = entries
        .iter()
        .map(|e| {
            let expected = describe(
                e.nodes,
                e.components,
                e.genus.to_string(),
                e.expected_complexity.to_string(),
                e.expected_group.to_string(),
            );
            let genus = e
                .graph
                .arithmetic_genus()
                .map(|g| g.to_string())
                .unwrap_or_else(|err| err.to_string());
            let group = degree_class_group(&e.graph)
                .map(|g| g.to_string())
                .unwrap_or_else(|err| err.to_string());
            let got = describe(
                e.graph.edge_count(),
                e.graph.vertex_count(),
                genus,
                complexity_mtt(&e.graph).to_string(),
                group,
            );
            EntryCheck {
                label: e.label,
                passed: expected == got,
                expected,
                got,
            }
        })
        .collect();
    VerifyReport { checks }
}

/// Verifies the full genus-2 and genus-3 catalog.
pub fn verify_catalog() -> VerifyReport {
    let mut entries = genus2_table();
    entries.extend(genus3_table());
    verify_entries(&entries)
}
