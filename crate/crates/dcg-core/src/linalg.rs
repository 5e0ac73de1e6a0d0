//! Exact integer linear algebra: dense arbitrary-precision matrices, minor
//! determinants by fraction-free elimination, Smith normal form with
//! unimodular transforms, and element orders in integer-lattice quotients.
//!
//! Determinants run on machine integers (i64, then i128) whenever a Hadamard
//! bound proves the Bareiss intermediates cannot overflow, and fall back to
//! `BigInt` otherwise. The Smith normal form always works over `BigInt` with
//! a least-absolute-value pivot rule, which keeps coefficient growth tame
//! and output deterministic.

use std::cmp::min;
use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element has infinite order modulo the column lattice")]
    InfiniteOrder,
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    /// Convenience constructor from machine-integer rows; all rows must have
    /// equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Copy of the matrix without `drop_row` and `drop_col`.
    pub fn minor_matrix(&self, drop_row: usize, drop_col: usize) -> IntMatrix {
        assert!(drop_row < self.rows && drop_col < self.cols, "minor index out of range");
        IntMatrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < drop_row { i } else { i + 1 };
            let sj = if j < drop_col { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }

    /// Exact determinant of a square matrix; the empty 0x0 matrix has
    /// determinant 1.
    pub fn determinant(&self) -> Result<BigInt, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(det_dispatch(self.rows, &self.entries))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Determinant of the minor of `a` with `drop_row` and `drop_col` removed,
/// by fraction-free elimination. Dropping from a 1x1 matrix leaves the 0x0
/// matrix, whose determinant is 1 by convention.
pub fn minor_determinant(a: &IntMatrix, drop_row: usize, drop_col: usize) -> Result<BigInt, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NonSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    assert!(a.rows >= 1, "minor of an empty matrix");
    a.minor_matrix(drop_row, drop_col).determinant()
}

// --- determinant engines -------------------------------------------------

/// Sum over rows of log2 of the row norm, a bound on the bit length of every
/// minor of the matrix (and hence of every Bareiss intermediate). Rows of
/// norm < 1 are counted as 1 so the product only grows.
fn hadamard_bits(n: usize, entries: &[i64]) -> f64 {
    let mut bits = 0.0;
    for i in 0..n {
        let norm2: f64 = entries[i * n..(i + 1) * n]
            .iter()
            .map(|&x| {
                let x = x as f64;
                x * x
            })
            .sum();
        bits += 0.5 * norm2.max(1.0).log2();
    }
    bits
}

fn det_dispatch(n: usize, entries: &[BigInt]) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    if let Some(small) = entries.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<i64>>>() {
        let bits = hadamard_bits(n, &small);
        // a Bareiss step multiplies two intermediates before the exact
        // division, so the working type needs 2*bits plus a couple of
        // guard bits
        if 2.0 * bits + 4.0 < 63.0 {
            return BigInt::from(det_bareiss_machine::<i64>(small, n));
        }
        if 2.0 * bits + 4.0 < 127.0 {
            let wide: Vec<i128> = small.into_iter().map(i128::from).collect();
            return BigInt::from(det_bareiss_machine::<i128>(wide, n));
        }
    }
    det_bareiss_bigint(entries.to_vec(), n)
}

trait BareissInt: Copy + PartialEq + Default {
    fn is_zero(self) -> bool;
    fn mul(self, rhs: Self) -> Self;
    fn sub(self, rhs: Self) -> Self;
    fn exact_div(self, rhs: Self) -> Self;
    fn neg(self) -> Self;
    fn one() -> Self;
}

macro_rules! impl_bareiss_int {
    ($($t:ty),*) => {$(
        impl BareissInt for $t {
            fn is_zero(self) -> bool { self == 0 }
            fn mul(self, rhs: Self) -> Self { self * rhs }
            fn sub(self, rhs: Self) -> Self { self - rhs }
            fn exact_div(self, rhs: Self) -> Self { self / rhs }
            fn neg(self) -> Self { -self }
            fn one() -> Self { 1 }
        }
    )*};
}

impl_bareiss_int!(i64, i128);

/// Bareiss fraction-free elimination over a machine integer type. The caller
/// must have checked (via the Hadamard bound) that no intermediate can
/// overflow.
fn det_bareiss_machine<T: BareissInt>(mut m: Vec<T>, n: usize) -> T {
    let mut sign_negative = false;
    let mut prev = T::one();
    for k in 0..n.saturating_sub(1) {
        if m[k * n + k].is_zero() {
            // partial pivoting on nonzero entries: first nonzero row below
            let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return T::default();
            };
            for j in k..n {
                m.swap(k * n + j, r * n + j);
            }
            sign_negative = !sign_negative;
        }
        let pivot = m[k * n + k];
        for i in k + 1..n {
            let head = m[i * n + k];
            for j in k + 1..n {
                let t = m[i * n + j].mul(pivot).sub(head.mul(m[k * n + j]));
                m[i * n + j] = t.exact_div(prev);
            }
            m[i * n + k] = T::default();
        }
        prev = pivot;
    }
    let d = m[(n - 1) * n + (n - 1)];
    if sign_negative {
        d.neg()
    } else {
        d
    }
}

fn det_bareiss_bigint(mut m: Vec<BigInt>, n: usize) -> BigInt {
    let mut sign_negative = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in k..n {
                m.swap(k * n + j, r * n + j);
            }
            sign_negative = !sign_negative;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            let head = m[i * n + k].clone();
            for j in k + 1..n {
                let t = &m[i * n + j] * &pivot - &head * &m[k * n + j];
                m[i * n + j] = t / &prev;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = m[(n - 1) * n + (n - 1)].clone();
    if sign_negative {
        -d
    } else {
        d
    }
}

// --- Smith normal form ----------------------------------------------------

/// Smith normal form `U * A * V = D` with unimodular `U`, `V`.
///
/// `diagonal` holds the non-negative diagonal of `D` (length
/// `min(rows, cols)`): each entry divides the next, trailing zeros last. The
/// entries greater than 1 are the invariant factors of the cokernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfResult {
    /// Rank of the original matrix: the number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

struct SnfCalc {
    rows: usize,
    cols: usize,
    d: Vec<BigInt>,
    u: IntMatrix,
    v: IntMatrix,
}

impl SnfCalc {
    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.d[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.d.swap(a * self.cols + j, b * self.cols + j);
        }
        for j in 0..self.u.cols() {
            let t = self.u[(a, j)].clone();
            self.u[(a, j)] = self.u[(b, j)].clone();
            self.u[(b, j)] = t;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.d.swap(i * self.cols + a, i * self.cols + b);
        }
        for i in 0..self.v.rows() {
            let t = self.v[(i, a)].clone();
            self.v[(i, a)] = self.v[(i, b)].clone();
            self.v[(i, b)] = t;
        }
    }

    /// row[a] += q * row[b]
    fn row_axpy(&mut self, q: &BigInt, a: usize, b: usize) {
        for j in 0..self.cols {
            let t = q * &self.d[b * self.cols + j];
            self.d[a * self.cols + j] += t;
        }
        for j in 0..self.u.cols() {
            let t = q * &self.u[(b, j)];
            self.u[(a, j)] += t;
        }
    }

    /// col[a] += q * col[b]
    fn col_axpy(&mut self, q: &BigInt, a: usize, b: usize) {
        for i in 0..self.rows {
            let t = q * &self.d[i * self.cols + b];
            self.d[i * self.cols + a] += t;
        }
        for i in 0..self.v.rows() {
            let t = q * &self.v[(i, b)];
            self.v[(i, a)] += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let t = -self.d[a * self.cols + j].clone();
            self.d[a * self.cols + j] = t;
        }
        for j in 0..self.u.cols() {
            let t = -self.u[(a, j)].clone();
            self.u[(a, j)] = t;
        }
    }

    /// Nonzero entry of least absolute value in the submatrix starting at
    /// `(t, t)`, ties broken by row then column index.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let e = self.at(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some(b) => {
                        if e.magnitude() < self.at(b.0, b.1).magnitude() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }

    fn reduce_step(&mut self, t: usize) {
        loop {
            let Some((pi, pj)) = self.pivot(t) else { return };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..self.rows {
                if !self.at(i, t).is_zero() {
                    let q = -(self.at(i, t) / self.at(t, t));
                    if !q.is_zero() {
                        self.row_axpy(&q, i, t);
                    }
                    if !self.at(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..self.cols {
                if !self.at(t, j).is_zero() {
                    let q = -(self.at(t, j) / self.at(t, t));
                    if !q.is_zero() {
                        self.col_axpy(&q, j, t);
                    }
                    if !self.at(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // leftover remainders are smaller than the pivot; re-pivot
                continue;
            }
            // enforce the divisibility chain: the pivot must divide every
            // entry of the remaining submatrix
            let mut offender = None;
            'scan: for i in t + 1..self.rows {
                for j in t + 1..self.cols {
                    if !(self.at(i, j) % self.at(t, t)).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => self.row_axpy(&BigInt::one(), t, i),
                None => return,
            }
        }
    }
}

/// Smith normal form of any integer matrix (any shape, including empty).
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let mut calc = SnfCalc {
        rows: a.rows,
        cols: a.cols,
        d: a.entries.clone(),
        u: IntMatrix::identity(a.rows),
        v: IntMatrix::identity(a.cols),
    };
    let n = min(a.rows, a.cols);
    for t in 0..n {
        calc.reduce_step(t);
    }
    for t in 0..n {
        if calc.at(t, t).is_negative() {
            calc.negate_row(t);
        }
    }
    let diagonal = (0..n).map(|t| calc.at(t, t).clone()).collect();
    SnfResult {
        diagonal,
        left: calc.u,
        right: calc.v,
    }
}

// --- finite abelian groups ------------------------------------------------

/// A finitely generated abelian group in invariant-factor form: cyclic
/// factors `Z/d1 x Z/d2 x ...` with `2 <= d1 | d2 | ...`, plus a free part
/// `Z^free_rank`. The trivial group is the empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl GroupStructure {
    /// Builds a group from factors that already form a divisibility chain;
    /// factors equal to 1 are dropped.
    pub fn new(factors: Vec<BigInt>, free_rank: usize) -> Self {
        let invariant_factors: Vec<BigInt> = factors.into_iter().filter(|f| !f.is_one()).collect();
        for w in invariant_factors.windows(2) {
            debug_assert!((&w[1] % &w[0]).is_zero(), "factors must form a divisibility chain");
        }
        debug_assert!(invariant_factors.iter().all(|f| *f >= BigInt::from(2)));
        GroupStructure {
            invariant_factors,
            free_rank,
        }
    }

    pub fn trivial() -> Self {
        GroupStructure {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        GroupStructure::new(vec![order.into()], 0)
    }

    /// Reads the factors off an SNF diagonal: entries > 1 become invariant
    /// factors, zeros contribute to the free rank.
    pub fn from_snf_diagonal(diagonal: &[BigInt], ambient_rank: usize) -> Self {
        let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
        let factors = diagonal.iter().filter(|d| !d.is_zero()).cloned().collect();
        GroupStructure::new(factors, ambient_rank - rank)
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Order of the group; `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// A finite group with at most one invariant factor is cyclic.
    pub fn is_cyclic(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.len() <= 1
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{}", d))
            .collect();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Structure of `Z^ambient_rank / (column lattice of A)`. `ambient_rank`
/// must equal the number of rows of `A`.
pub fn invariant_factors_of_cokernel(a: &IntMatrix, ambient_rank: usize) -> GroupStructure {
    assert_eq!(ambient_rank, a.rows(), "ambient rank must match the matrix rows");
    let snf = smith_normal_form(a);
    GroupStructure::from_snf_diagonal(&snf.diagonal, ambient_rank)
}

/// Smallest `d >= 1` such that `d * v` lies in the column lattice of `A`.
///
/// With `U * A * V = D` and `w = U * v`, the order is
/// `lcm_i(D_ii / gcd(D_ii, w_i))` over the nonzero diagonal entries; any
/// nonzero `w_i` against a zero diagonal entry means the order is infinite.
pub fn element_order(a: &IntMatrix, v: &[BigInt]) -> Result<BigInt, LinalgError> {
    if v.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: a.rows(),
            got: v.len(),
        });
    }
    let snf = smith_normal_form(a);
    let w = snf.left.mul_vec(v);
    let mut order = BigInt::one();
    for (i, wi) in w.iter().enumerate() {
        let di = snf.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !wi.is_zero() {
                return Err(LinalgError::InfiniteOrder);
            }
            continue;
        }
        let step = &di / di.gcd(wi);
        order = order.lcm(&step);
    }
    Ok(order)
}
