//! Graph matrices, a dense symmetric eigensolver and the Rényi system
//! entropy of the normalized Laplacian.
//!
//! For a graph without isolated vertices the normalized Laplacian
//! `Lⁿ = I − D^(−1/2) A D^(−1/2)` is symmetric positive semidefinite with
//! spectrum in `[0, 2]` and trace `n`. The system entropy of order `α` is
//!
//! ```text
//! H_α(Lⁿ) = log₂(Σ λᵢ^α) / (1 − α)
//! ```
//!
//! with `α = 0.5` the default. Non-negativity and the concavity-type
//! inequality over convex blends are only guaranteed at `α = 0.5`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// Default Rényi order.
pub const DEFAULT_ALPHA: f64 = 0.5;

/// Per-eigenvalue iteration budget of the QL sweep.
pub const QL_MAX_ITERATIONS: usize = 60;

/// Default clamping tolerance, `1e-9 · n`.
pub fn default_tolerance(n: usize) -> f64 {
    1e-9 * n.max(1) as f64
}

/// Dense symmetric matrix, row-major with both triangles stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_diagonal(diagonal: &[f64]) -> Self {
        let mut m = Self::zeros(diagonal.len());
        for (i, &d) in diagonal.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds from row-major entries; fails unless the input is square and
    /// exactly symmetric.
    pub fn from_rows(order: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::DimensionMismatch(entries.len(), order * order));
        }
        for i in 0..order {
            for j in 0..i {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::InvalidParameter(format!(
                        "matrix not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Writes `(i, j)` and its mirror `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `xᵀ M x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        self.mul_vec(x).iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// `β·self + (1 − β)·other`.
    pub fn blend(&self, other: &SymMatrix, beta: f64) -> Result<SymMatrix> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch(self.order, other.order));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| beta * a + (1.0 - beta) * b)
            .collect();
        Ok(SymMatrix {
            order: self.order,
            entries,
        })
    }
}

pub fn degree_matrix(g: &Graph) -> SymMatrix {
    let degrees: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    SymMatrix::from_diagonal(&degrees)
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, 1.0);
    }
    m
}

/// Combinatorial Laplacian `D − A`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let mut m = degree_matrix(g);
    for (u, v) in g.edges() {
        m.set(u, v, -1.0);
    }
    m
}

/// `I − D^(−1/2) A D^(−1/2)`; every vertex needs degree at least 1.
pub fn normalized_laplacian(g: &Graph) -> Result<SymMatrix> {
    let degrees = g.degrees();
    if let Some(v) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let inv_sqrt: Vec<f64> = degrees
        .iter()
        .map(|&d| 1.0 / libm::sqrt(d as f64))
        .collect();
    let mut m = SymMatrix::identity(g.n());
    for (u, v) in g.edges() {
        m.set(u, v, -inv_sqrt[u] * inv_sqrt[v]);
    }
    Ok(m)
}

/// Eigenvalues of a symmetric matrix in ascending order.
///
/// Householder reduction to tridiagonal form followed by implicit QL with
/// Wilkinson shifts. Off-diagonal entries are deflated at machine
/// precision relative to the running matrix norm, so results are accurate
/// to a small multiple of `n · ε · ‖M‖₂`; `tol` only has to be positive.
/// Fails with [`Error::EigensolverFailure`] if a single eigenvalue needs
/// more than [`QL_MAX_ITERATIONS`] QL steps.
pub fn sym_eigenvalues(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance {tol} must be positive")));
    }
    let (mut diag, mut off) = tridiagonalize(m);
    implicit_ql(&mut diag, &mut off)?;
    diag.sort_by(f64::total_cmp);
    Ok(diag)
}

/// Returns the diagonal and the sub-diagonal (`off[i]` couples `i` and
/// `i + 1`; `off[n − 1]` is zero).
fn tridiagonalize(m: &SymMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.order;
    let mut a = m.entries.clone();
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let norm = libm::sqrt((k + 1..n).map(|i| a[i * n + k] * a[i * n + k]).sum());
        diag[k] = a[k * n + k];
        if norm == 0.0 {
            off[k] = 0.0;
            continue;
        }
        let x0 = a[(k + 1) * n + k];
        let alpha = if x0 >= 0.0 { -norm } else { norm };
        for i in k + 1..n {
            v[i] = a[i * n + k];
        }
        v[k + 1] -= alpha;
        let vnorm = libm::sqrt((k + 1..n).map(|i| v[i] * v[i]).sum());
        off[k] = alpha;
        if vnorm == 0.0 {
            continue;
        }
        for i in k + 1..n {
            v[i] /= vnorm;
        }
        // A ← H A H with H = I − 2vvᵀ, restricted to the trailing block.
        for i in k + 1..n {
            p[i] = (k + 1..n).map(|j| a[i * n + j] * v[j]).sum();
        }
        let c: f64 = (k + 1..n).map(|i| v[i] * p[i]).sum();
        for i in k + 1..n {
            p[i] -= c * v[i];
        }
        for i in k + 1..n {
            for j in k + 1..=i {
                let updated = a[i * n + j] - 2.0 * (v[i] * p[j] + p[i] * v[j]);
                a[i * n + j] = updated;
                a[j * n + i] = updated;
            }
        }
    }
    if n >= 2 {
        diag[n - 2] = a[(n - 2) * n + (n - 2)];
        off[n - 2] = a[(n - 1) * n + (n - 2)];
    }
    if n >= 1 {
        diag[n - 1] = a[(n - 1) * n + (n - 1)];
        off[n - 1] = 0.0;
    }
    (diag, off)
}

fn implicit_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    let eps = f64::EPSILON;
    let mut shift_total = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iterations = 0;
            loop {
                iterations += 1;
                if iterations > QL_MAX_ITERATIONS {
                    return Err(Error::EigensolverFailure(QL_MAX_ITERATIONS));
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = libm::hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                shift_total += h;

                p = d[m];
                let (mut c, mut c2, mut c3) = (1.0, 1.0, 1.0);
                let el1 = e[l + 1];
                let (mut s, mut s2) = (0.0, 0.0);
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = libm::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += shift_total;
        e[l] = 0.0;
    }
    Ok(())
}

/// Spectrum and entropy of one graph's normalized Laplacian.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpectralSummary {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// In bits.
    pub entropy: f64,
    pub alpha: f64,
    /// `tr((Lⁿ)^α)`.
    pub trace_alpha: f64,
    pub bipartite: bool,
    pub lambda_max: f64,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 && alpha != 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "Rényi order {alpha} must be positive, finite and different from 1"
        )))
    }
}

/// `(tr(M^α), H_α)` from the eigenvalues of a positive semidefinite `M`.
/// Eigenvalues in `[−tol, tol]` count as exactly zero, since a fractional
/// power turns round-off of order `ε` into an error of order `ε^α`.
/// Anything below `−tol` is rejected.
pub fn renyi_entropy(eigenvalues: &[f64], alpha: f64, tol: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let mut trace = 0.0;
    for &lambda in eigenvalues {
        if lambda < -tol {
            return Err(Error::Indefinite(lambda));
        }
        if lambda > tol {
            trace += libm::pow(lambda, alpha);
        }
    }
    if trace == 0.0 {
        return Err(Error::UndefinedMetric("entropy needs a nonzero eigenvalue"));
    }
    Ok((trace, libm::log2(trace) / (1.0 - alpha)))
}

/// System entropy of `g`. Requires minimum degree 1; the graph may be
/// disconnected.
pub fn system_entropy(g: &Graph, alpha: f64, tol: f64) -> Result<SpectralSummary> {
    check_alpha(alpha)?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let lap = normalized_laplacian(g)?;
    let eigenvalues = sym_eigenvalues(&lap, tol)?;
    let (trace_alpha, entropy) = renyi_entropy(&eigenvalues, alpha, tol)?;
    let lambda_max = eigenvalues.last().copied().unwrap_or(0.0);
    Ok(SpectralSummary {
        eigenvalues,
        entropy,
        alpha,
        trace_alpha,
        bipartite: g.is_bipartite(),
        lambda_max,
    })
}

/// Entropy of `β·l1 + (1 − β)·l2`.
pub fn entropy_of_convex_combination(
    l1: &SymMatrix,
    l2: &SymMatrix,
    beta: f64,
    alpha: f64,
    tol: f64,
) -> Result<f64> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::InvalidParameter(format!("blend weight {beta} outside [0, 1]")));
    }
    let blended = l1.blend(l2, beta)?;
    let eigenvalues = sym_eigenvalues(&blended, tol)?;
    Ok(renyi_entropy(&eigenvalues, alpha, tol)?.1)
}

/// Relabels vertices: edge `(u, v)` becomes `(perm[u], perm[v])`.
pub fn permute_vertices(g: &Graph, perm: &[VertexId]) -> Result<Graph> {
    let n = g.n();
    if perm.len() != n {
        return Err(Error::InvalidPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidPermutation(n));
        }
        seen[p] = true;
    }
    Graph::new(n, g.edges().map(|(u, v)| (perm[u], perm[v])))
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundCheck {
    pub name: String,
    pub value: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub eigenvalue_sum: f64,
    /// `n / (n − 1)`.
    pub lambda_max_lower: f64,
    pub checks: Vec<BoundCheck>,
}

/// Checks the normalized-Laplacian spectrum against its known bounds.
///
/// Always: `λ_min ∈ [−tol, tol]` and `Σλ = n ± n·tol`. For connected
/// graphs additionally `λ_max ≥ n/(n − 1) − tol`, and either
/// `|λ_max − 2| ≤ tol` (bipartite) or `λ_max < 2 + tol`.
pub fn check_eigenvalue_bounds(
    s: &SpectralSummary,
    n: usize,
    connected: bool,
    tol: f64,
) -> Result<BoundReport> {
    if n < 2 || s.eigenvalues.len() != n {
        return Err(Error::InvalidParameter(format!(
            "bound check needs n >= 2 eigenvalues, got n = {n} with {} values",
            s.eigenvalues.len()
        )));
    }
    let lambda_min = s.eigenvalues[0];
    let lambda_max = s.eigenvalues[n - 1];
    let eigenvalue_sum: f64 = s.eigenvalues.iter().sum();
    let lower = n as f64 / (n - 1) as f64;
    let mut checks = Vec::new();
    let mut push = |name: &str, value: f64, passed: bool| {
        checks.push(BoundCheck {
            name: name.into(),
            value,
            passed,
        })
    };
    push("lambda_min_zero", lambda_min, lambda_min.abs() <= tol);
    push(
        "trace_equals_n",
        eigenvalue_sum,
        (eigenvalue_sum - n as f64).abs() <= n as f64 * tol,
    );
    if connected {
        push("lambda_max_lower", lambda_max, lambda_max >= lower - tol);
        if s.bipartite {
            push("lambda_max_bipartite_two", lambda_max, (lambda_max - 2.0).abs() <= tol);
        } else {
            push("lambda_max_below_two", lambda_max, lambda_max < 2.0 + tol);
        }
    }
    if let Some(failed) = checks.iter().find(|c| !c.passed) {
        return Err(Error::BoundViolation(format!("{} (value {})", failed.name, failed.value)));
    }
    Ok(BoundReport {
        lambda_min,
        lambda_max,
        eigenvalue_sum,
        lambda_max_lower: lower,
        checks,
    })
}
