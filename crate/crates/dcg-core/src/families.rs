//! Graph families with known degree class groups: banana graphs `D_k`,
//! cycles `C_k`, chains of cycles `CS^n(k; h)`, and blown-up vine curves
//! `D_N(m)` — together with exact evaluators for the closed-form order and
//! structure formulas attached to each family.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::curve_ops::{multi_blow_up, BlowUpVector};
use crate::graph::{EdgeId, Multigraph};
use crate::linalg::{smith_normal_form, GroupStructure, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("chain of cycles needs equally long k and h with k_i >= 2 and 1 <= h_i < k_i")]
    InvalidChainParams,
    #[error("a vine needs at least two positive multiplicities")]
    InvalidVineParams,
    #[error("the dollar-sign structure is defined for exactly 3 multiplicities, got {0}")]
    NotDollar(usize),
}

/// Two vertices joined by `k >= 1` parallel edges (the dual graph of a vine
/// curve with k nodes; `D_3` is the dollar-sign curve).
pub fn banana_graph(k: u64) -> Multigraph {
    assert!(k >= 1);
    let mut g = Multigraph::new(2).expect("two vertices");
    for _ in 0..k {
        g.add_edge(0, 1).expect("valid endpoints");
    }
    g
}

/// The k-cycle; `k = 1` is a single loop and `k = 2` a doubled edge.
pub fn cycle_graph(k: u64) -> Multigraph {
    assert!(k >= 1);
    let k = k as usize;
    let mut g = Multigraph::new(k).expect("at least one vertex");
    for i in 0..k {
        g.add_edge(i, (i + 1) % k).expect("valid endpoints");
    }
    g
}

/// Cycle lengths `k_i >= 2` and gluing positions `1 <= h_i < k_i` for the
/// chain of cycles `CS^n(k; h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainOfCyclesParams {
    k: Vec<u64>,
    h: Vec<u64>,
}

impl ChainOfCyclesParams {
    pub fn new(k: Vec<u64>, h: Vec<u64>) -> Result<Self, FamilyError> {
        if k.is_empty() || k.len() != h.len() {
            return Err(FamilyError::InvalidChainParams);
        }
        for (&ki, &hi) in k.iter().zip(&h) {
            if ki < 2 || hi < 1 || hi >= ki {
                return Err(FamilyError::InvalidChainParams);
            }
        }
        Ok(ChainOfCyclesParams { k, h })
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    pub fn k(&self) -> &[u64] {
        &self.k
    }

    pub fn h(&self) -> &[u64] {
        &self.h
    }
}

/// The chain of cycles `CS^n(k; h)`: cycle j+1 is glued to cycle j along the
/// single edge `(v^j_{h_j}, v^j_{h_j+1})`, the glued edge shared. Vertices
/// are labelled cycle by cycle in construction order.
pub fn chain_of_cycles(p: &ChainOfCyclesParams) -> Multigraph {
    let k1 = p.k[0] as usize;
    let mut g = Multigraph::new(k1).expect("cycle length >= 2");
    // vertices of the current cycle, in cyclic order v_1 ... v_k
    let mut ring: Vec<usize> = (0..k1).collect();
    for i in 0..k1 {
        g.add_edge(i, (i + 1) % k1).expect("valid endpoints");
    }
    for j in 1..p.n() {
        let kj = p.k[j] as usize;
        let hj = p.h[j - 1] as usize;
        let a = ring[hj - 1];
        let b = ring[hj];
        // the closing edge of the new cycle is identified with the glued
        // edge (a, b); only the path from a to b through k_j - 2 new
        // vertices is added
        let mut next_ring = vec![a];
        let mut prev = a;
        for _ in 0..kj - 2 {
            let w = g.add_vertex();
            g.add_edge(prev, w).expect("valid endpoints");
            next_ring.push(w);
            prev = w;
        }
        g.add_edge(prev, b).expect("valid endpoints");
        next_ring.push(b);
        ring = next_ring;
    }
    g
}

/// Complexity of `CS^n(k; h)` by the recursion
/// `c_n = k_n c_{n-1} - c_{n-2}` with `c_1 = k_1` and `c_2 = k_1 k_2 - 1`.
/// Independent of the gluing positions h.
pub fn cs_complexity(kvec: &[u64]) -> BigInt {
    assert!(!kvec.is_empty() && kvec.iter().all(|&k| k >= 2));
    let mut prev = BigInt::one(); // c_0 := 1 makes the n = 2 base a step
    let mut current = BigInt::from(kvec[0]);
    for &kn in &kvec[1..] {
        let next = kn * &current - &prev;
        prev = std::mem::replace(&mut current, next);
    }
    current
}

/// Integer polynomial stored as coefficients indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        IntPolynomial { coefficients }
    }

    /// Coefficient list, index = degree of the monomial.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coefficients.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// The equal-length complexity polynomial
/// `P_n(k) = sum_{i=0}^{[n/2]} (-1)^i a^i_{n-2i} k^{n-2i}` with
/// `a^0_l = 1` and `a^m_l = sum_{t<=l} a^{m-1}_t`, so that
/// `P_n(k) = c(CS^n((k,...,k); h))`.
pub fn cs_equal_k_polynomial(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    // a[m][l] for 0 <= m <= n/2, 0 <= l <= n, by prefix sums
    let mut row: Vec<BigInt> = vec![BigInt::one(); n + 1];
    let mut coefficients = vec![BigInt::zero(); n + 1];
    coefficients[n] = BigInt::one();
    for i in 1..=n / 2 {
        let mut acc = BigInt::zero();
        let next: Vec<BigInt> = row
            .iter()
            .map(|a| {
                acc += a;
                acc.clone()
            })
            .collect();
        row = next;
        let l = n - 2 * i;
        coefficients[l] = if i % 2 == 0 { row[l].clone() } else { -row[l].clone() };
    }
    IntPolynomial::new(coefficients)
}

/// Multiplicities `m_1 >= m_2 >= ... >= m_N >= 1`, `N >= 2`, normalised to
/// non-increasing order on construction. `D_N(m)` is the vine `D_N` blown
/// up `m_i - 1` times in its i-th node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VineParams {
    m: Vec<u64>,
}

impl VineParams {
    pub fn new(mut m: Vec<u64>) -> Result<Self, FamilyError> {
        if m.len() < 2 || m.iter().any(|&x| x == 0) {
            return Err(FamilyError::InvalidVineParams);
        }
        m.sort_unstable_by(|a, b| b.cmp(a));
        Ok(VineParams { m })
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self) -> &[u64] {
        &self.m
    }

    /// gcd of all multiplicities.
    pub fn gcd(&self) -> u64 {
        self.m.iter().fold(0u64, |acc, &x| acc.gcd(&x))
    }
}

/// The dual graph of `D_N(m)`: N internally disjoint paths of lengths
/// `m_1, ..., m_N` joining two vertices, built as
/// `multi_blow_up(D_N, m - 1)`.
pub fn vine_graph(p: &VineParams) -> Multigraph {
    let d_n = banana_graph(p.n() as u64);
    let k: BlowUpVector = p
        .m
        .iter()
        .enumerate()
        .filter(|&(_, &mi)| mi > 1)
        .map(|(i, &mi)| (EdgeId(i as u32), mi - 1))
        .collect();
    multi_blow_up(&d_n, &k).expect("edge ids taken from D_N")
}

/// Complexity `c_N(m) = sum_k prod_{i != k} m_i` of the vine graph.
pub fn vine_complexity(p: &VineParams) -> BigInt {
    (0..p.n())
        .map(|k| {
            p.m.iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &mi)| BigInt::from(mi))
                .product::<BigInt>()
        })
        .sum()
}

/// Order of the generator class `[t_k]` (1-based `k`):
/// `c_N(m) * M_k / prod_{j != k} m_j` with `M_k` the lcm of the other
/// multiplicities.
pub fn vine_generator_order(p: &VineParams, k: usize) -> BigInt {
    assert!(k >= 1 && k <= p.n(), "generator index out of range");
    let others: Vec<u64> = p
        .m
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k - 1)
        .map(|(_, &mi)| mi)
        .collect();
    let lcm = others.iter().fold(BigInt::one(), |acc, &x| acc.lcm(&BigInt::from(x)));
    let product: BigInt = others.iter().map(|&x| BigInt::from(x)).product();
    vine_complexity(p) * lcm / product
}

/// Whether `[t_k]` generates the whole group: true iff the multiplicities
/// other than `m_k` are pairwise coprime.
pub fn vine_cyclic_by_tk(p: &VineParams, k: usize) -> bool {
    assert!(k >= 1 && k <= p.n(), "generator index out of range");
    let others: Vec<u64> = p
        .m
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k - 1)
        .map(|(_, &mi)| mi)
        .collect();
    for (a, &x) in others.iter().enumerate() {
        for &y in &others[a + 1..] {
            if x.gcd(&y) != 1 {
                return false;
            }
        }
    }
    true
}

/// The (N-1)x(N-1) presentation matrix of the vine group with entries
/// `a_ij = m_N + delta_ij m_i`.
pub fn vine_presentation(p: &VineParams) -> IntMatrix {
    let n = p.n();
    let last = p.m[n - 1];
    IntMatrix::from_fn(n - 1, n - 1, |i, j| {
        let base = BigInt::from(last);
        if i == j {
            base + BigInt::from(p.m[i])
        } else {
            base
        }
    })
}

/// The full N-generator relation matrix
/// `<t_1, ..., t_N | {m_i t_i - m_j t_j}, sum t_i>`: one column per pair
/// `i < j` plus the all-ones column.
pub fn vine_relation_matrix(p: &VineParams) -> IntMatrix {
    let n = p.n();
    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut col = vec![BigInt::zero(); n];
            col[i] = BigInt::from(p.m[i]);
            col[j] = -BigInt::from(p.m[j]);
            columns.push(col);
        }
    }
    columns.push(vec![BigInt::one(); n]);
    IntMatrix::from_fn(n, columns.len(), |i, j| columns[j][i].clone())
}

/// Structure of the vine group: divide out `d = gcd(m)`, take the SNF of
/// the reduced presentation, and rescale every diagonal entry by `d`.
pub fn vine_structure(p: &VineParams) -> GroupStructure {
    let d = p.gcd();
    let reduced = VineParams::new(p.m.iter().map(|&x| x / d).collect()).expect("same length, positive");
    let snf = smith_normal_form(&vine_presentation(&reduced));
    let factors = snf.diagonal.iter().map(|e| e * BigInt::from(d)).collect();
    GroupStructure::new(factors, 0)
}

/// Closed-form structure for equal multiplicities `D_N(k^m)` (`m` at the
/// first `k` nodes, 1 elsewhere): `Z/(1 + m(N-1))` for `k = 1`, and
/// `Z/(m(k + m(N-k))) + (Z/m)^(k-2)` for `k >= 2`.
pub fn vine_structure_equal_m(n: usize, k: usize, m: u64) -> GroupStructure {
    assert!(n >= 2 && k >= 1 && k <= n && m >= 1);
    let n_big = n as u64;
    let k_big = k as u64;
    if k == 1 {
        return GroupStructure::cyclic(1 + m * (n_big - 1));
    }
    let mut factors = vec![BigInt::from(m); k - 2];
    factors.push(BigInt::from(m * (k_big + m * (n_big - k_big))));
    GroupStructure::new(factors, 0)
}

/// Structure of the dollar-sign group (`N = 3`):
/// `Z/d + Z/(c_3(m)/d)` with `d = gcd(m)`; cyclic whenever `d = 1`.
pub fn dollar_structure(p: &VineParams) -> Result<GroupStructure, FamilyError> {
    if p.n() != 3 {
        return Err(FamilyError::NotDollar(p.n()));
    }
    let d = BigInt::from(p.gcd());
    let complexity = vine_complexity(p);
    let quotient = &complexity / &d;
    Ok(GroupStructure::new(vec![d, quotient], 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dcg::{complexity_enumeration, complexity_mtt, degree_class_group};
    use crate::linalg::element_order;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn chain(k: &[u64], h: &[u64]) -> Multigraph {
        chain_of_cycles(&ChainOfCyclesParams::new(k.to_vec(), h.to_vec()).unwrap())
    }

    fn vine(m: &[u64]) -> VineParams {
        VineParams::new(m.to_vec()).unwrap()
    }

    #[test]
    fn banana_and_cycle_basics() {
        let single = banana_graph(1);
        assert_eq!((single.vertex_count(), single.edge_count()), (2, 1));
        let d3 = banana_graph(3);
        assert_eq!(d3.multiplicity(0, 1), 3);
        for k in 1..6 {
            assert_eq!(degree_class_group(&banana_graph(k)).unwrap().order(), Some(big(k as i64)));
            assert_eq!(degree_class_group(&cycle_graph(k)).unwrap().order(), Some(big(k as i64)));
        }
        let loop_graph = cycle_graph(1);
        assert_eq!(loop_graph.loop_count(), 1);
        assert_eq!(complexity_mtt(&loop_graph), big(1));
        assert_eq!(cycle_graph(2), banana_graph(2));
    }

    #[test]
    fn chain_params_validation() {
        assert!(ChainOfCyclesParams::new(vec![], vec![]).is_err());
        assert!(ChainOfCyclesParams::new(vec![3, 4], vec![2]).is_err());
        assert!(ChainOfCyclesParams::new(vec![1], vec![1]).is_err());
        assert!(ChainOfCyclesParams::new(vec![3], vec![3]).is_err());
        assert!(ChainOfCyclesParams::new(vec![3, 4, 5], vec![2, 2, 2]).is_ok());
    }

    #[test]
    fn chain_with_one_cycle_is_the_cycle() {
        for k in 2..6 {
            assert_eq!(chain(&[k], &[1]), cycle_graph(k));
        }
    }

    #[test]
    fn chain_of_two_cycles_counts() {
        let g = chain(&[3, 4], &[2, 1]);
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        assert_eq!(g.first_betti().unwrap(), 2);
        assert_eq!(complexity_mtt(&g), big(11));
        assert_eq!(complexity_enumeration(&g).unwrap(), big(11));
    }

    #[test]
    fn chain_of_twos_is_a_banana() {
        for e in 2..7u64 {
            let params = ChainOfCyclesParams::new(vec![2; e as usize - 1], vec![1; e as usize - 1]).unwrap();
            let g = chain_of_cycles(&params);
            let d_e = banana_graph(e);
            assert_eq!((g.vertex_count(), g.edge_count()), (d_e.vertex_count(), d_e.edge_count()));
            assert_eq!(complexity_mtt(&g), complexity_mtt(&d_e));
            assert_eq!(degree_class_group(&g).unwrap(), degree_class_group(&d_e).unwrap());
        }
    }

    #[test]
    fn chain_matches_figure_counts() {
        // gamma = k_1 + sum (k_j - 2), delta = k_1 + sum (k_j - 1)
        let g = chain(&[3, 4, 5, 6, 3, 2], &[2, 2, 2, 3, 1, 1]);
        assert_eq!((g.vertex_count(), g.edge_count()), (13, 18));
        assert_eq!(g.first_betti().unwrap(), 6);
    }

    #[test]
    fn cs_complexity_small_cases() {
        assert_eq!(cs_complexity(&[7]), big(7));
        for k1 in 2..6 {
            for k2 in 2..6 {
                assert_eq!(cs_complexity(&[k1, k2]), big((k1 * k2 - 1) as i64));
                for k3 in 2..6 {
                    assert_eq!(
                        cs_complexity(&[k1, k2, k3]),
                        big((k1 * k2 * k3 - k1 - k3) as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn equal_k_polynomial_coefficients() {
        assert_eq!(cs_equal_k_polynomial(1).coefficients(), &[big(0), big(1)]);
        assert_eq!(cs_equal_k_polynomial(2).coefficients(), &[big(-1), big(0), big(1)]);
        assert_eq!(
            cs_equal_k_polynomial(3).coefficients(),
            &[big(0), big(-2), big(0), big(1)]
        );
    }

    #[test]
    fn equal_k_polynomial_matches_recursion() {
        for n in 1..=6usize {
            let p = cs_equal_k_polynomial(n);
            assert_eq!(p.degree(), n);
            for k in 2..=6u64 {
                assert_eq!(p.evaluate(&big(k as i64)), cs_complexity(&vec![k; n]));
            }
        }
    }

    #[test]
    fn vine_params_normalise() {
        let p = vine(&[2, 3, 5]);
        assert_eq!(p.m(), &[5, 3, 2]);
        assert_eq!(p.gcd(), 1);
        assert!(VineParams::new(vec![3]).is_err());
        assert!(VineParams::new(vec![2, 0]).is_err());
    }

    #[test]
    fn vine_graph_counts() {
        assert_eq!(vine_graph(&vine(&[1, 1, 1])), banana_graph(3));

        let g = vine_graph(&vine(&[2, 1, 1]));
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 4));

        for m in [[2u64, 3, 5], [4, 4, 2]] {
            let p = vine(&m);
            let g = vine_graph(&p);
            let total: u64 = m.iter().sum();
            assert_eq!(g.vertex_count() as u64, 2 + total - 3);
            assert_eq!(g.edge_count() as u64, total);
        }
    }

    #[test]
    fn vine_complexity_cases() {
        assert_eq!(vine_complexity(&vine(&[1, 1, 1])), big(3));
        let p = vine(&[2, 3, 5]);
        assert_eq!(vine_complexity(&p), big(31));
        assert_eq!(complexity_enumeration(&vine_graph(&p)).unwrap(), big(31));
        for n in 2..5usize {
            for m in 1..5u64 {
                let p = vine(&vec![m; n]);
                assert_eq!(
                    vine_complexity(&p),
                    big(n as i64) * big(m as i64).pow(n as u32 - 1)
                );
            }
        }
    }

    #[test]
    fn vine_generator_orders() {
        for n in 2..6usize {
            let p = vine(&vec![1; n]);
            for k in 1..=n {
                assert_eq!(vine_generator_order(&p, k), big(n as i64));
            }
        }
        assert_eq!(vine_generator_order(&vine(&[2, 3, 5]), 1), big(31));
        assert_eq!(vine_generator_order(&vine(&[2, 2, 2, 2]), 1), big(8));
    }

    #[test]
    fn generator_order_matches_element_order_in_the_relation_lattice() {
        for m in [[2u64, 3, 5], [2, 2, 2], [4, 6, 2], [5, 5, 3]] {
            let p = vine(&m);
            let relations = vine_relation_matrix(&p);
            for k in 1..=p.n() {
                let mut v = vec![BigInt::zero(); p.n()];
                v[k - 1] = BigInt::one();
                assert_eq!(
                    element_order(&relations, &v).unwrap(),
                    vine_generator_order(&p, k),
                    "m = {:?}, k = {}",
                    m,
                    k
                );
            }
        }
    }

    #[test]
    fn cyclicity_predicate() {
        assert!(vine_cyclic_by_tk(&vine(&[6, 2, 3]), 1));
        assert!(!vine_cyclic_by_tk(&vine(&[6, 2, 3]), 3));
        for k in 1..=4 {
            assert!(!vine_cyclic_by_tk(&vine(&[2, 2, 2, 2]), k));
        }
        for k in 1..=3 {
            assert!(vine_cyclic_by_tk(&vine(&[2, 3, 5]), k));
        }
    }

    #[test]
    fn cyclicity_predicate_matches_order_count() {
        for m in [[2u64, 3, 5], [2, 2, 2], [6, 2, 3], [4, 3, 2]] {
            let p = vine(&m);
            for k in 1..=p.n() {
                assert_eq!(
                    vine_cyclic_by_tk(&p, k),
                    vine_generator_order(&p, k) == vine_complexity(&p)
                );
            }
        }
    }

    #[test]
    fn presentation_matrix() {
        let p = vine(&[4, 7]); // normalised (7, 4)
        let m = vine_presentation(&p);
        assert_eq!(m.rows(), 1);
        assert_eq!(m[(0, 0)], big(11));

        let p = vine(&[5, 3, 2]);
        let m = vine_presentation(&p);
        assert_eq!(m, IntMatrix::from_rows(&[vec![7, 2], vec![2, 5]]));
        assert_eq!(m.determinant().unwrap(), vine_complexity(&p));
    }

    #[test]
    fn presentation_determinant_is_the_complexity() {
        for m in [
            vec![2u64, 3, 5],
            vec![2, 2, 2, 2],
            vec![1, 4, 2],
            vec![3, 3, 3, 2, 2],
        ] {
            let p = vine(&m);
            assert_eq!(vine_presentation(&p).determinant().unwrap(), vine_complexity(&p));
        }
    }

    #[test]
    fn vine_structure_cases() {
        assert_eq!(vine_structure(&vine(&[1, 1, 1])), GroupStructure::cyclic(3));
        assert_eq!(vine_structure(&vine(&[2, 3, 5])), GroupStructure::cyclic(31));
        let g = vine_structure(&vine(&[2, 2, 2, 2]));
        assert_eq!(g.invariant_factors(), &[big(2), big(2), big(8)]);
    }

    #[test]
    fn vine_structure_matches_the_graph() {
        for m in [
            vec![2u64, 3, 5],
            vec![2, 2, 2, 2],
            vec![4, 2],
            vec![6, 4, 2],
            vec![3, 3, 2, 1],
        ] {
            let p = vine(&m);
            assert_eq!(
                vine_structure(&p),
                degree_class_group(&vine_graph(&p)).unwrap(),
                "m = {:?}",
                m
            );
        }
    }

    #[test]
    fn equal_m_closed_forms() {
        assert_eq!(vine_structure_equal_m(4, 1, 3), GroupStructure::cyclic(10));

        let g = vine_structure_equal_m(4, 4, 2);
        assert_eq!(g.invariant_factors(), &[big(2), big(2), big(8)]);

        assert_eq!(vine_structure_equal_m(3, 2, 2), GroupStructure::cyclic(8));

        // cross-check both branches against the generic SNF route
        for n in 2..=5usize {
            for k in 1..=n {
                for m in 1..=4u64 {
                    let mut vector = vec![m; k];
                    vector.extend(std::iter::repeat(1).take(n - k));
                    assert_eq!(
                        vine_structure_equal_m(n, k, m),
                        vine_structure(&vine(&vector)),
                        "n = {n}, k = {k}, m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn dollar_structure_cases() {
        assert_eq!(dollar_structure(&vine(&[1, 1, 1])).unwrap(), GroupStructure::cyclic(3));
        assert_eq!(dollar_structure(&vine(&[2, 3, 5])).unwrap(), GroupStructure::cyclic(31));

        let g = dollar_structure(&vine(&[2, 2, 4])).unwrap();
        assert_eq!(g.invariant_factors(), &[big(2), big(10)]);

        assert_eq!(
            dollar_structure(&vine(&[1, 1, 1, 1])),
            Err(FamilyError::NotDollar(4))
        );
    }

    #[test]
    fn dollar_agrees_with_vine_structure() {
        for a in 1..=8u64 {
            for b in a..=8 {
                for c in b..=8 {
                    let p = vine(&[a, b, c]);
                    assert_eq!(
                        dollar_structure(&p).unwrap(),
                        vine_structure(&p),
                        "m = ({a}, {b}, {c})"
                    );
                }
            }
        }
    }
}
