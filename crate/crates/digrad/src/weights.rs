//! Consensus weight matrices and Perron eigenvector utilities.
//!
//! Row-stochastic weights are assignable locally by each receiving agent;
//! column-stochastic weights require each sender to split weight over its
//! out-neighbors (and hence to know its out-degree). Both kinds built from a
//! strongly-connected digraph with self-loops are primitive, so their Perron
//! vectors are strictly positive and power iteration converges.

use ndarray::{Array1, Array2};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Digraph;
use crate::Result;

/// Tolerance on row/column sums accepted by validation.
pub const STOCHASTIC_SUM_TOL: f64 = 1e-12;

/// Iteration cap for power iteration before declaring non-convergence.
const POWER_ITERATION_CAP: usize = 1_000_000;

/// Which side a matrix's sums are normalized on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StochasticKind {
    /// Rows sum to 1.
    RowStochastic,
    /// Columns sum to 1.
    ColumnStochastic,
}

/// Which Perron eigenvector to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `w` with `w^T M = w^T`.
    Left,
    /// `v` with `M v = v`.
    Right,
}

/// Dense nonnegative square matrix tagged with its stochasticity kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StochasticMatrix {
    entries: Array2<f64>,
    kind: StochasticKind,
}

impl StochasticMatrix {
    /// Wrap a dense matrix after checking nonnegativity and the kind's sum
    /// invariant.
    pub fn new(entries: Array2<f64>, kind: StochasticKind) -> Result<Self> {
        let m = StochasticMatrix { entries, kind };
        m.validate()?;
        Ok(m)
    }

    /// Dimension `n` of the square matrix.
    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    /// Stochasticity kind.
    pub fn kind(&self) -> StochasticKind {
        self.kind
    }

    /// Dense entries.
    pub fn entries(&self) -> &Array2<f64> {
        &self.entries
    }

    /// Re-check nonnegativity, squareness, and the sum invariant.
    pub fn validate(&self) -> Result<()> {
        let n = self.entries.nrows();
        if n == 0 || self.entries.ncols() != n {
            return Err(Error::Structure(format!(
                "weight matrix must be square and nonempty, got {}x{}",
                n,
                self.entries.ncols()
            )));
        }
        if let Some(bad) = self.entries.iter().find(|e| !e.is_finite() || **e < 0.0) {
            return Err(Error::Structure(format!(
                "weight entries must be finite and nonnegative, found {bad}"
            )));
        }
        for idx in 0..n {
            let sum: f64 = match self.kind {
                StochasticKind::RowStochastic => self.entries.row(idx).sum(),
                StochasticKind::ColumnStochastic => self.entries.column(idx).sum(),
            };
            if (sum - 1.0).abs() > STOCHASTIC_SUM_TOL {
                let what = match self.kind {
                    StochasticKind::RowStochastic => "row",
                    StochasticKind::ColumnStochastic => "column",
                };
                return Err(Error::Structure(format!(
                    "{what} {idx} sums to {sum}, expected 1 within {STOCHASTIC_SUM_TOL:e}"
                )));
            }
        }
        Ok(())
    }

    /// Check that the support matches the graph exactly (positive entry iff
    /// edge) and that the diagonal is strictly positive.
    pub fn validate_against(&self, g: &Digraph) -> Result<()> {
        self.validate()?;
        let n = self.n();
        if g.n() != n {
            return Err(Error::Structure(format!(
                "matrix is {}x{} but graph has {} nodes",
                n,
                n,
                g.n()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                // a_ij couples (receiver i, sender j) for RS; b_ij couples
                // (receiver i, sender j) for CS as well, support is the same
                // edge set j -> i in both conventions.
                let has = g.has_edge(j, i);
                let positive = self.entries[(i, j)] > 0.0;
                if has != positive {
                    return Err(Error::Structure(format!(
                        "support mismatch at ({i},{j}): edge={has}, entry={}",
                        self.entries[(i, j)]
                    )));
                }
            }
            if self.entries[(i, i)] <= 0.0 {
                return Err(Error::Structure(format!(
                    "diagonal entry ({i},{i}) must be positive (self-loop weight)"
                )));
            }
        }
        Ok(())
    }

    /// Write the entries as row-major CSV at full float precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.entries.rows() {
            let line: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Uniform row-stochastic weights: `a_ij = 1/|N_i^in|` for senders `j` of
/// `i`, zero elsewhere.
pub fn uniform_row_stochastic(g: &Digraph) -> StochasticMatrix {
    let n = g.n();
    let mut entries = Array2::zeros((n, n));
    for i in 0..n {
        let w = 1.0 / g.in_degree(i) as f64;
        for &j in g.in_neighbors(i) {
            entries[(i, j)] = w;
        }
    }
    StochasticMatrix {
        entries,
        kind: StochasticKind::RowStochastic,
    }
}

/// Uniform column-stochastic weights: `b_ij = 1/|N_j^out|` for receivers `i`
/// of `j`, zero elsewhere. Each sender splits unit mass over its
/// out-neighbors.
pub fn uniform_column_stochastic(g: &Digraph) -> StochasticMatrix {
    let n = g.n();
    let out_degrees = g.out_degrees();
    let mut entries = Array2::zeros((n, n));
    for i in 0..n {
        for &j in g.in_neighbors(i) {
            entries[(i, j)] = 1.0 / out_degrees[j] as f64;
        }
    }
    StochasticMatrix {
        entries,
        kind: StochasticKind::ColumnStochastic,
    }
}

/// Perron eigenvector of a primitive stochastic matrix, normalized to sum 1.
///
/// Power iteration on `M` (right) or `M^T` (left) until the successive
/// max-norm change drops to `tol`; errors out at the iteration cap, which
/// signals a non-primitive input.
pub fn perron_vector(m: &StochasticMatrix, side: Side, tol: f64) -> Result<Array1<f64>> {
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.n();
    let mut v = Array1::from_elem(n, 1.0 / n as f64);
    for _ in 0..POWER_ITERATION_CAP {
        let mut next = match side {
            Side::Right => m.entries().dot(&v),
            Side::Left => m.entries().t().dot(&v),
        };
        let sum = next.sum();
        if !(sum > 0.0) || !sum.is_finite() {
            return Err(Error::Numerical(
                "power iteration produced a non-positive iterate; matrix is not primitive".into(),
            ));
        }
        next.mapv_inplace(|x| x / sum);
        let change = v
            .iter()
            .zip(next.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        v = next;
        if change <= tol {
            if v.iter().any(|&x| x <= 0.0) {
                return Err(Error::Numerical(
                    "Perron vector has a non-positive entry; matrix is not primitive".into(),
                ));
            }
            return Ok(v);
        }
    }
    Err(Error::Numerical(format!(
        "power iteration did not reach tol {tol:e} within {POWER_ITERATION_CAP} iterations"
    )))
}

/// Left and right Perron eigenvectors of a stochastic matrix, both
/// normalized to sum 1.
///
/// The trivial side of a stochastic matrix (right for row-stochastic, left
/// for column-stochastic) is the uniform vector, set exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronPair {
    pub left: Array1<f64>,
    pub right: Array1<f64>,
}

impl PerronPair {
    /// Compute both vectors at tolerance `tol` and check the fixed-point
    /// residuals.
    pub fn compute(m: &StochasticMatrix, tol: f64) -> Result<Self> {
        let n = m.n();
        let uniform = Array1::from_elem(n, 1.0 / n as f64);
        let (left, right) = match m.kind() {
            StochasticKind::RowStochastic => (perron_vector(m, Side::Left, tol)?, uniform),
            StochasticKind::ColumnStochastic => (uniform, perron_vector(m, Side::Right, tol)?),
        };
        let pair = PerronPair { left, right };
        let rl = pair.left_residual(m);
        let rr = pair.right_residual(m);
        if rl > 1e-10 || rr > 1e-10 {
            return Err(Error::Numerical(format!(
                "Perron fixed-point residuals too large: left {rl:e}, right {rr:e}"
            )));
        }
        Ok(pair)
    }

    /// `max |M^T w - w|`.
    pub fn left_residual(&self, m: &StochasticMatrix) -> f64 {
        let mw = m.entries().t().dot(&self.left);
        max_abs_diff(&mw, &self.left)
    }

    /// `max |M v - v|`.
    pub fn right_residual(&self, m: &StochasticMatrix) -> f64 {
        let mv = m.entries().dot(&self.right);
        max_abs_diff(&mv, &self.right)
    }
}

fn max_abs_diff(a: &Array1<f64>, b: &Array1<f64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Similarity transform `A~ = V^-1 B V` with `V = diag(v)`, entrywise
/// `a~_ij = b_ij v_j / v_i`.
///
/// When `v` is the right Perron vector of a column-stochastic `b`, the
/// result is row-stochastic; the returned matrix is validated as such. This
/// relates the two-weight iteration to its row-stochastic-only rewriting and
/// serves as a test oracle, not as a runtime step.
pub fn similarity_transform_check(
    b: &StochasticMatrix,
    v: &Array1<f64>,
) -> Result<StochasticMatrix> {
    let n = b.n();
    if b.kind() != StochasticKind::ColumnStochastic {
        return Err(Error::Parameter(
            "similarity transform expects a column-stochastic input".into(),
        ));
    }
    if v.len() != n {
        return Err(Error::Structure(format!(
            "vector length {} does not match matrix dimension {n}",
            v.len()
        )));
    }
    if let Some(&bad) = v.iter().find(|&&x| !(x > 1e-15) || !x.is_finite()) {
        return Err(Error::Numerical(format!(
            "singular transform: diagonal entry {bad} too close to zero"
        )));
    }
    let mut entries = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            entries[(i, j)] = b.entries()[(i, j)] * v[j] / v[i];
        }
    }
    StochasticMatrix::new(entries, StochasticKind::RowStochastic)
}

/// `max |M^k - L|` where `L` is the Perron-Frobenius limit of the powers:
/// `1 w^T` for a row-stochastic matrix, `v 1^T` for a column-stochastic one.
///
/// Trends to zero as `k` grows for primitive matrices; used as a mixing
/// diagnostic and test utility.
pub fn power_limit_residual(m: &StochasticMatrix, k: usize) -> Result<f64> {
    let n = m.n();
    let pair = PerronPair::compute(m, 1e-14)?;
    let limit = match m.kind() {
        StochasticKind::RowStochastic => {
            // rows all equal w^T, scaled so each row sums to 1 (w sums to 1)
            Array2::from_shape_fn((n, n), |(_, j)| pair.left[j])
        }
        StochasticKind::ColumnStochastic => Array2::from_shape_fn((n, n), |(i, _)| pair.right[i]),
    };
    let mut power = Array2::eye(n);
    for _ in 0..k {
        power = power.dot(m.entries());
    }
    Ok(power
        .iter()
        .zip(limit.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}
