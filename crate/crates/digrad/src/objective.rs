//! Per-agent objective functions.
//!
//! An [`ObjectiveSet`] bundles `n` differentiable local functions
//! `f_i: R^p -> R` with optional smoothness (`L`) and strong-convexity
//! (`mu`) constants. The global objective is `F(x) = (1/n) sum_i f_i(x)`.
//!
//! Three constructions are provided: regularized logistic loss on synthetic
//! classification data, a piecewise-quartic convex-but-not-strongly-convex
//! family, and a quadratic fixture with a closed-form minimizer for tests.

use std::sync::Arc;

use ndarray::{Array1, Array2, ArrayView1};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rng::{component_rng, Component};
use crate::Result;

/// A single agent's differentiable function.
pub trait LocalObjective: Send + Sync {
    fn value(&self, x: ArrayView1<f64>) -> f64;
    fn gradient(&self, x: ArrayView1<f64>) -> Array1<f64>;
}

/// Bundle of `n` local objectives over a common decision space.
#[derive(Clone)]
pub struct ObjectiveSet {
    decision_dim: usize,
    agents: Vec<Arc<dyn LocalObjective>>,
    smoothness: Option<f64>,
    strong_convexity: Option<f64>,
}

impl ObjectiveSet {
    /// Assemble a set, checking `mu <= L` when both constants are present.
    pub fn new(
        decision_dim: usize,
        agents: Vec<Arc<dyn LocalObjective>>,
        smoothness: Option<f64>,
        strong_convexity: Option<f64>,
    ) -> Result<Self> {
        if agents.is_empty() {
            return Err(Error::Parameter("objective set needs at least one agent".into()));
        }
        if decision_dim == 0 {
            return Err(Error::Parameter("decision dimension must be positive".into()));
        }
        if let (Some(l), Some(mu)) = (smoothness, strong_convexity) {
            if mu > l {
                return Err(Error::Parameter(format!(
                    "strong convexity mu={mu} exceeds smoothness L={l}"
                )));
            }
        }
        Ok(ObjectiveSet {
            decision_dim,
            agents,
            smoothness,
            strong_convexity,
        })
    }

    /// Number of agents.
    pub fn n(&self) -> usize {
        self.agents.len()
    }

    /// Decision-variable dimension `p`.
    pub fn p(&self) -> usize {
        self.decision_dim
    }

    /// Smoothness constant `L`, when known.
    pub fn smoothness(&self) -> Option<f64> {
        self.smoothness
    }

    /// Strong-convexity constant `mu`; zero marks the merely-convex class.
    pub fn strong_convexity(&self) -> Option<f64> {
        self.strong_convexity
    }

    /// `f_i(x)`.
    pub fn value(&self, agent: usize, x: ArrayView1<f64>) -> f64 {
        self.agents[agent].value(x)
    }

    /// `grad f_i(x)`.
    pub fn gradient(&self, agent: usize, x: ArrayView1<f64>) -> Array1<f64> {
        self.agents[agent].gradient(x)
    }

    /// Global objective `F(x) = (1/n) sum_i f_i(x)`.
    pub fn global_value(&self, x: ArrayView1<f64>) -> f64 {
        let mut total = 0.0;
        for agent in &self.agents {
            total += agent.value(x);
        }
        total / self.n() as f64
    }

    /// Global gradient `(1/n) sum_i grad f_i(x)`, accumulated in agent
    /// order.
    pub fn global_gradient(&self, x: ArrayView1<f64>) -> Array1<f64> {
        let mut total = Array1::zeros(self.decision_dim);
        for agent in &self.agents {
            total += &agent.gradient(x);
        }
        total / self.n() as f64
    }

    /// Stack of local gradients: row `i` is `grad f_i(x_i)` for row `x_i` of
    /// the `n x p` iterate block.
    pub fn gradient_matrix(&self, x: &Array2<f64>) -> Array2<f64> {
        let mut out = Array2::zeros((self.n(), self.decision_dim));
        for (i, agent) in self.agents.iter().enumerate() {
            out.row_mut(i).assign(&agent.gradient(x.row(i)));
        }
        out
    }
}

impl std::fmt::Debug for ObjectiveSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ObjectiveSet")
            .field("n", &self.n())
            .field("p", &self.decision_dim)
            .field("smoothness", &self.smoothness)
            .field("strong_convexity", &self.strong_convexity)
            .finish()
    }
}

/// Central finite-difference approximation of `grad f_i` at `x`, used by the
/// invariant suite as an oracle independent of the analytic gradients.
pub fn finite_difference_gradient(
    set: &ObjectiveSet,
    agent: usize,
    x: ArrayView1<f64>,
    h: f64,
) -> Array1<f64> {
    let p = x.len();
    let mut grad = Array1::zeros(p);
    let mut probe = x.to_owned();
    for d in 0..p {
        let orig = probe[d];
        probe[d] = orig + h;
        let plus = set.value(agent, probe.view());
        probe[d] = orig - h;
        let minus = set.value(agent, probe.view());
        probe[d] = orig;
        grad[d] = (plus - minus) / (2.0 * h);
    }
    grad
}

// ---------------------------------------------------------------------------
// Logistic regression
// ---------------------------------------------------------------------------

/// Per-agent binary classification data with an L2 regularizer.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LogisticData {
    /// `features[i]` is the `m_i x p` sample block of agent `i`.
    pub features: Vec<Array2<f64>>,
    /// `labels[i]` holds the matching `m_i` labels in `{-1, +1}`.
    pub labels: Vec<Array1<f64>>,
    /// Regularization strength, strictly positive.
    pub lambda: f64,
}

impl LogisticData {
    /// Check label values, regularizer sign, and shape consistency.
    pub fn validate(&self) -> Result<()> {
        if self.features.is_empty() || self.features.len() != self.labels.len() {
            return Err(Error::Structure(
                "features and labels must cover the same nonempty agent set".into(),
            ));
        }
        if !(self.lambda > 0.0) {
            return Err(Error::Parameter(format!(
                "regularizer lambda must be positive, got {}",
                self.lambda
            )));
        }
        let p = self.features[0].ncols();
        for (i, (f, y)) in self.features.iter().zip(self.labels.iter()).enumerate() {
            if f.nrows() == 0 {
                return Err(Error::Structure(format!("agent {i} has no samples")));
            }
            if f.ncols() != p || f.nrows() != y.len() {
                return Err(Error::Structure(format!(
                    "agent {i} has inconsistent sample shapes"
                )));
            }
            if y.iter().any(|&l| l != 1.0 && l != -1.0) {
                return Err(Error::Structure(format!(
                    "agent {i} has labels outside {{-1, +1}}"
                )));
            }
        }
        Ok(())
    }

    /// Feature dimension `p` (decision space is `p + 1` with the intercept).
    pub fn feature_dim(&self) -> usize {
        self.features[0].ncols()
    }

    /// Serialize the dataset for reproducible run configs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("dataset serialization cannot fail")
    }

    /// Parse and re-validate a dataset.
    pub fn from_json(text: &str) -> Result<Self> {
        let data: LogisticData = serde_json::from_str(text)?;
        data.validate()?;
        Ok(data)
    }
}

struct LogisticAgent {
    features: Array2<f64>,
    labels: Array1<f64>,
    lambda: f64,
}

/// Numerically stable `ln(1 + e^t)`.
fn ln_one_plus_exp(t: f64) -> f64 {
    if t > 0.0 {
        t + (-t).exp().ln_1p()
    } else {
        t.exp().ln_1p()
    }
}

/// Numerically stable logistic sigmoid `1 / (1 + e^-t)`.
fn sigmoid(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}

impl LocalObjective for LogisticAgent {
    fn value(&self, x: ArrayView1<f64>) -> f64 {
        let p = self.features.ncols();
        let (b, c) = (x.slice(ndarray::s![..p]), x[p]);
        let mut total = 0.0;
        for (row, &y) in self.features.rows().into_iter().zip(self.labels.iter()) {
            let margin = (row.dot(&b) + c) * y;
            total += ln_one_plus_exp(-margin);
        }
        total + 0.5 * self.lambda * (b.dot(&b) + c * c)
    }

    fn gradient(&self, x: ArrayView1<f64>) -> Array1<f64> {
        let p = self.features.ncols();
        let (b, c) = (x.slice(ndarray::s![..p]), x[p]);
        let mut grad = Array1::zeros(p + 1);
        for (row, &y) in self.features.rows().into_iter().zip(self.labels.iter()) {
            let margin = (row.dot(&b) + c) * y;
            // d/dm ln(1+e^-m) = -sigmoid(-m)
            let coeff = -y * sigmoid(-margin);
            for d in 0..p {
                grad[d] += coeff * row[d];
            }
            grad[p] += coeff;
        }
        for d in 0..p {
            grad[d] += self.lambda * b[d];
        }
        grad[p] += self.lambda * c;
        grad
    }
}

/// Regularized logistic loss objectives over `(b, c) in R^{p+1}`:
/// `f_i(b, c) = sum_j ln(1 + exp(-(b.c_ij + c) y_ij)) + (lambda/2)(|b|^2 + c^2)`.
///
/// Each `f_i` is `lambda`-strongly convex and `L`-smooth with
/// `L = lambda + (1/4) max_i sum_j |(c_ij, 1)|^2`, the standard bound on the
/// logistic Hessian.
pub fn logistic_objective(data: &LogisticData) -> Result<ObjectiveSet> {
    data.validate()?;
    let p = data.feature_dim();
    let mut hessian_bound: f64 = 0.0;
    let agents: Vec<Arc<dyn LocalObjective>> = data
        .features
        .iter()
        .zip(data.labels.iter())
        .map(|(f, y)| {
            let agent_sum: f64 = f.rows().into_iter().map(|r| r.dot(&r) + 1.0).sum();
            hessian_bound = hessian_bound.max(agent_sum);
            Arc::new(LogisticAgent {
                features: f.clone(),
                labels: y.clone(),
                lambda: data.lambda,
            }) as Arc<dyn LocalObjective>
        })
        .collect();
    let l = data.lambda + 0.25 * hessian_bound;
    ObjectiveSet::new(p + 1, agents, Some(l), Some(data.lambda))
}

/// Synthetic classification data: features i.i.d. standard normal, labels
/// `+1` or `-1` with probability 1/2 each, independent of the features.
///
/// Draw order per agent and sample: `p` feature coordinates, then the label.
pub fn generate_logistic_data(
    n: usize,
    p: usize,
    m_per_agent: usize,
    lambda: f64,
    seed: u64,
) -> Result<LogisticData> {
    if n == 0 || p == 0 || m_per_agent == 0 {
        return Err(Error::Parameter(
            "agent count, feature dimension, and samples per agent must be positive".into(),
        ));
    }
    if !(lambda > 0.0) {
        return Err(Error::Parameter(format!(
            "regularizer lambda must be positive, got {lambda}"
        )));
    }
    let mut rng = component_rng(seed, Component::Data);
    let mut features = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for _ in 0..n {
        let mut f = Array2::zeros((m_per_agent, p));
        let mut y = Array1::zeros(m_per_agent);
        for j in 0..m_per_agent {
            for d in 0..p {
                f[(j, d)] = rng.sample::<f64, _>(StandardNormal);
            }
            y[j] = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        }
        features.push(f);
        labels.push(y);
    }
    Ok(LogisticData {
        features,
        labels,
        lambda,
    })
}

// ---------------------------------------------------------------------------
// Piecewise quartic
// ---------------------------------------------------------------------------

/// The hinge-smoothed quartic `u(x) = x^4/4` on `|x| <= 1`, `|x| - 3/4`
/// outside. Convex with continuous derivative.
pub fn piecewise_quartic(x: f64) -> f64 {
    if x.abs() <= 1.0 {
        0.25 * x.powi(4)
    } else {
        x.abs() - 0.75
    }
}

/// Derivative of [`piecewise_quartic`]: `x^3` on `|x| <= 1`, `sign(x)`
/// outside; continuous at the breakpoints.
pub fn piecewise_quartic_deriv(x: f64) -> f64 {
    if x.abs() <= 1.0 {
        x.powi(3)
    } else {
        x.signum()
    }
}

struct QuarticAgent {
    offset: f64,
}

impl LocalObjective for QuarticAgent {
    fn value(&self, x: ArrayView1<f64>) -> f64 {
        piecewise_quartic(x[0]) + self.offset * x[0]
    }

    fn gradient(&self, x: ArrayView1<f64>) -> Array1<f64> {
        Array1::from_elem(1, piecewise_quartic_deriv(x[0]) + self.offset)
    }
}

/// Scalar objectives `f_i(x) = u(x) + b_i x` with `u` the piecewise quartic.
///
/// The `b_i` are i.i.d. standard normal except the last, which is the
/// negated running sum of the others, so the offsets cancel exactly and the
/// global objective is `u` itself: smooth (`L = 3`) and convex but not
/// strongly convex (`F''(0) = 0`), with minimizer 0.
pub fn quartic_objective(n: usize, seed: u64) -> Result<ObjectiveSet> {
    if n == 0 {
        return Err(Error::Parameter("agent count must be positive".into()));
    }
    let mut rng = component_rng(seed, Component::Data);
    let mut offsets: Vec<f64> = (0..n - 1)
        .map(|_| rng.sample::<f64, _>(StandardNormal))
        .collect();
    // left-to-right accumulation; global gradients cancel bit-exactly when
    // summed in the same order
    let mut partial = 0.0;
    for &b in &offsets {
        partial += b;
    }
    offsets.push(-partial);
    let agents = offsets
        .into_iter()
        .map(|offset| Arc::new(QuarticAgent { offset }) as Arc<dyn LocalObjective>)
        .collect();
    ObjectiveSet::new(1, agents, Some(3.0), Some(0.0))
}

// ---------------------------------------------------------------------------
// Quadratic fixture
// ---------------------------------------------------------------------------

struct QuadraticAgent {
    target: Array1<f64>,
}

impl LocalObjective for QuadraticAgent {
    fn value(&self, x: ArrayView1<f64>) -> f64 {
        let diff = &x - &self.target;
        0.5 * diff.dot(&diff)
    }

    fn gradient(&self, x: ArrayView1<f64>) -> Array1<f64> {
        &x - &self.target
    }
}

/// Quadratics `f_i(x) = 1/2 |x - t_i|^2` with explicit targets; the exact
/// global minimizer is the mean target. `mu = L = 1`.
pub fn quadratic_objective_with_targets(targets: Vec<Array1<f64>>) -> Result<ObjectiveSet> {
    if targets.is_empty() {
        return Err(Error::Parameter("need at least one target".into()));
    }
    let p = targets[0].len();
    if p == 0 || targets.iter().any(|t| t.len() != p) {
        return Err(Error::Structure(
            "targets must be nonempty and share one dimension".into(),
        ));
    }
    let agents = targets
        .into_iter()
        .map(|target| Arc::new(QuadraticAgent { target }) as Arc<dyn LocalObjective>)
        .collect();
    ObjectiveSet::new(p, agents, Some(1.0), Some(1.0))
}

/// Seeded quadratic fixture with standard-normal targets.
pub fn quadratic_objective(n: usize, p: usize, seed: u64) -> Result<ObjectiveSet> {
    if n == 0 || p == 0 {
        return Err(Error::Parameter(
            "agent count and dimension must be positive".into(),
        ));
    }
    let mut rng = component_rng(seed, Component::Data);
    let targets: Vec<Array1<f64>> = (0..n)
        .map(|_| Array1::from_iter((0..p).map(|_| rng.sample::<f64, _>(StandardNormal))))
        .collect();
    quadratic_objective_with_targets(targets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn single_sample_logistic() -> ObjectiveSet {
        // one agent, one sample with zero features and label +1, lambda = 1
        let data = LogisticData {
            features: vec![Array2::zeros((1, 1))],
            labels: vec![array![1.0]],
            lambda: 1.0,
        };
        logistic_objective(&data).unwrap()
    }

    #[test]
    fn logistic_value_and_gradient_at_origin() {
        let obj = single_sample_logistic();
        let x = array![0.0, 0.0];
        assert!((obj.value(0, x.view()) - 2.0_f64.ln()).abs() <= 1e-15);
        let g = obj.gradient(0, x.view());
        assert_eq!(g[0], 0.0);
        assert!((g[1] - (-0.5)).abs() <= 1e-15);
    }

    #[test]
    fn logistic_evaluation_is_deterministic() {
        let data = generate_logistic_data(3, 4, 2, 0.01, 5).unwrap();
        let obj = logistic_objective(&data).unwrap();
        let x = Array1::from_iter((0..5).map(|i| 0.3 * i as f64 - 0.7));
        let v1 = obj.value(1, x.view());
        let v2 = obj.value(1, x.view());
        assert_eq!(v1.to_bits(), v2.to_bits());
    }

    #[test]
    fn gradients_match_finite_differences() {
        let data = generate_logistic_data(4, 6, 3, 0.01, 9).unwrap();
        let logistic = logistic_objective(&data).unwrap();
        let quartic = quartic_objective(5, 11).unwrap();
        let quadratic = quadratic_objective(3, 4, 13).unwrap();
        let mut rng = component_rng(17, Component::Init);
        for set in [&logistic, &quartic, &quadratic] {
            for _ in 0..20 {
                let agent = rng.gen_range(0..set.n());
                let x = Array1::from_iter(
                    (0..set.p()).map(|_| rng.sample::<f64, _>(StandardNormal)),
                );
                let analytic = set.gradient(agent, x.view());
                let numeric = finite_difference_gradient(set, agent, x.view(), 1e-6);
                let scale = 1.0_f64.max(analytic.iter().fold(0.0f64, |m, g| m.max(g.abs())));
                for (a, b) in analytic.iter().zip(numeric.iter()) {
                    assert!(
                        (a - b).abs() <= 1e-5 * scale,
                        "gradient mismatch: analytic {a}, numeric {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn generated_data_shapes_and_reproducibility() {
        let d1 = generate_logistic_data(30, 10, 5, 0.01, 42).unwrap();
        assert_eq!(d1.features.len(), 30);
        let total: usize = d1.features.iter().map(|f| f.nrows()).sum();
        assert_eq!(total, 150);
        assert!(d1.features.iter().all(|f| f.ncols() == 10));

        let d2 = generate_logistic_data(30, 10, 5, 0.01, 42).unwrap();
        for (a, b) in d1.features.iter().zip(d2.features.iter()) {
            assert_eq!(a, b);
        }
        for (a, b) in d1.labels.iter().zip(d2.labels.iter()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn label_distribution_is_symmetric() {
        // 100_000 draws; mean of a fair +-1 coin concentrates within 0.02
        let d = generate_logistic_data(100, 1, 1000, 0.01, 2024).unwrap();
        let sum: f64 = d.labels.iter().map(|y| y.sum()).sum();
        let mean = sum / 100_000.0;
        assert!(mean.abs() <= 0.02, "empirical label mean {mean}");
    }

    #[test]
    fn dataset_json_roundtrip() {
        let d = generate_logistic_data(3, 2, 2, 0.5, 8).unwrap();
        let back = LogisticData::from_json(&d.to_json()).unwrap();
        assert_eq!(d.features, back.features);
        assert_eq!(d.labels, back.labels);
        assert_eq!(d.lambda, back.lambda);
    }

    #[test]
    fn dataset_validation_rejects_bad_labels() {
        let d = LogisticData {
            features: vec![Array2::zeros((1, 2))],
            labels: vec![array![0.5]],
            lambda: 1.0,
        };
        assert!(d.validate().is_err());
    }

    #[test]
    fn quartic_hinge_values() {
        assert_eq!(piecewise_quartic(1.0), 0.25);
        assert_eq!(piecewise_quartic(2.0), 1.25);
        assert_eq!(piecewise_quartic(-2.0), 1.25);
        assert_eq!(piecewise_quartic(0.0), 0.0);
    }

    #[test]
    fn quartic_derivative_is_continuous_at_breakpoints() {
        for eps in [1e-4, 1e-6, 1e-8] {
            let gap = (piecewise_quartic_deriv(1.0 - eps) - piecewise_quartic_deriv(1.0 + eps))
                .abs();
            assert!(gap <= 4.0 * eps, "derivative gap {gap} at eps {eps}");
            let gap_neg = (piecewise_quartic_deriv(-1.0 + eps)
                - piecewise_quartic_deriv(-1.0 - eps))
            .abs();
            assert!(gap_neg <= 4.0 * eps);
        }
    }

    #[test]
    fn quartic_derivative_is_monotone() {
        let grid: Vec<f64> = (-300..=300).map(|k| k as f64 / 100.0).collect();
        for pair in grid.windows(2) {
            assert!(piecewise_quartic_deriv(pair[0]) <= piecewise_quartic_deriv(pair[1]));
        }
    }

    #[test]
    fn quartic_offsets_cancel_exactly() {
        let obj = quartic_objective(30, 77).unwrap();
        // each agent's gradient at 0 is exactly its offset b_i; their
        // ordered sum cancels bit-exactly by construction
        let g = obj.global_gradient(array![0.0].view());
        assert_eq!(g[0], 0.0);
    }

    #[test]
    fn quartic_global_minimizer_is_zero() {
        // Independent oracle: bisection on the derivative of u, which is the
        // exact global gradient since the linear offsets cancel.
        let (mut lo, mut hi) = (-2.0f64, 2.0f64);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if piecewise_quartic_deriv(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert!(root.abs() <= 1e-10, "oracle minimizer {root}");

        // and the objective agrees with u at sampled points
        let obj = quartic_objective(12, 3).unwrap();
        for x in [-1.7, -0.4, 0.0, 0.9, 1.3] {
            let f = obj.global_value(array![x].view());
            assert!((f - piecewise_quartic(x)).abs() <= 1e-13);
        }
    }

    #[test]
    fn quartic_single_agent_has_zero_offset() {
        let obj = quartic_objective(1, 5).unwrap();
        let g = obj.gradient(0, array![0.0].view());
        assert_eq!(g[0], 0.0);
    }

    #[test]
    fn logistic_strong_convexity_inequality_holds() {
        let data = generate_logistic_data(5, 4, 3, 0.05, 21).unwrap();
        let obj = logistic_objective(&data).unwrap();
        let mu = obj.strong_convexity().unwrap();
        let mut rng = component_rng(31, Component::Init);
        for _ in 0..50 {
            let x = Array1::from_iter((0..5).map(|_| rng.sample::<f64, _>(StandardNormal)));
            let y = Array1::from_iter((0..5).map(|_| rng.sample::<f64, _>(StandardNormal)));
            let fy = obj.global_value(y.view());
            let fx = obj.global_value(x.view());
            let gx = obj.global_gradient(x.view());
            let diff = &y - &x;
            let lower = fx + gx.dot(&diff) + 0.5 * mu * diff.dot(&diff);
            assert!(fy >= lower - 1e-10, "strong convexity violated: {fy} < {lower}");
        }
    }

    #[test]
    fn quadratic_minimizer_is_target_mean() {
        let obj =
            quadratic_objective_with_targets(vec![array![0.0], array![2.0]]).unwrap();
        // x* = mean of targets = 1; recover it as x - grad F(x) at x = 0
        let g = obj.global_gradient(array![0.0].view());
        assert_eq!(-g[0], 1.0);
        // grad f_i(t_i) = 0
        assert_eq!(obj.gradient(0, array![0.0].view())[0], 0.0);
        assert_eq!(obj.gradient(1, array![2.0].view())[0], 0.0);
    }

    #[test]
    fn quadratic_value_matches_grid_minimum() {
        let obj = quadratic_objective(4, 1, 19).unwrap();
        let x_star = -obj.global_gradient(array![0.0].view())[0];
        let f_star = obj.global_value(array![x_star].view());
        // brute-force 1-D grid oracle
        let grid_min = (-4000..=4000)
            .map(|k| obj.global_value(array![k as f64 / 1000.0].view()))
            .fold(f64::INFINITY, f64::min);
        assert!(f_star <= grid_min + 1e-6);
    }

    #[test]
    fn mu_greater_than_l_is_rejected() {
        let err = ObjectiveSet::new(
            1,
            vec![Arc::new(QuadraticAgent {
                target: array![0.0],
            }) as Arc<dyn LocalObjective>],
            Some(1.0),
            Some(2.0),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Parameter(_)));
    }
}
