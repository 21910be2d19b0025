//! Signless Laplacian construction, largest-eigenvalue computation with the
//! Perron vector, equitable quotient matrices, characteristic polynomials up
//! to order 4, and real-root extraction.
//!
//! The eigensolver runs shifted power iteration with a Rayleigh-quotient
//! stopping rule and falls back to a full Householder tridiagonalization with
//! implicit-shift QL when the iteration stalls on near-degenerate spectra.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("matrix must have positive order")]
    EmptyMatrix,
    #[error("matrix entries are not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("eigensolver did not converge: residual {residual:.3e} after {iterations} iterations")]
    NonConvergence { residual: f64, iterations: u64 },
    #[error("partition is invalid: {0}")]
    InvalidPartition(String),
    #[error("characteristic polynomial order {order} exceeds the cap {cap}")]
    OrderAboveCap { order: usize, cap: usize },
    #[error("no sign change in bracket [{lo}, {hi}]; no root found")]
    NoRootInBracket { lo: f64, hi: f64 },
    #[error("polynomial must be monic with degree >= 1")]
    BadPolynomial,
}

/// Dense symmetric real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn from_rows(order: usize, entries: Vec<f64>) -> Result<Self, SpectralError> {
        assert_eq!(entries.len(), order * order, "entry count mismatch");
        for i in 0..order {
            for j in (i + 1)..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(SpectralError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Max absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.order)
            .map(|i| {
                (0..self.order)
                    .map(|j| self.get(i, j).abs())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    /// All entries integral (exactly representable integers).
    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|&x| x == x.trunc() && x.abs() < 2f64.powi(53))
    }

    fn matvec(&self, v: &[f64], out: &mut [f64]) {
        let n = self.order;
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
    }
}

/// Q(G) = D(G) + A(G).
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    let n = g.vertex_count();
    let mut entries = vec![0.0; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as f64;
        for u in g.neighbors(v) {
            entries[v * n + u] = 1.0;
        }
    }
    SymMatrix { order: n, entries }
}

/// A(G), the 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let n = g.vertex_count();
    let mut entries = vec![0.0; n * n];
    for v in 0..n {
        for u in g.neighbors(v) {
            entries[v * n + u] = 1.0;
        }
    }
    SymMatrix { order: n, entries }
}

/// Largest eigenvalue with its unit eigenvector and the achieved residual
/// max-norm of M v - value v.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralResult {
    pub value: f64,
    #[serde(skip)]
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: u64,
}

/// Eigensolver knobs. The stopping rule uses
/// `max(residual_tol, 8 eps sqrt(n) ||M||_inf)` so the target stays above the
/// rounding floor of the matrix at hand.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub residual_tol: f64,
    pub max_iterations: u64,
    /// Extra diagonal shift applied during iteration (the solver always adds
    /// enough shift to make the top eigenvalue dominant in magnitude).
    pub shift: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            residual_tol: 1e-12,
            max_iterations: 1_000_000,
            shift: 0.0,
        }
    }
}

pub fn largest_eigenvalue(m: &SymMatrix) -> Result<SpectralResult, SpectralError> {
    largest_eigenvalue_with(m, &SolverConfig::default())
}

pub fn largest_eigenvalue_with(
    m: &SymMatrix,
    cfg: &SolverConfig,
) -> Result<SpectralResult, SpectralError> {
    let n = m.order;
    if n == 0 {
        return Err(SpectralError::EmptyMatrix);
    }
    let norm = m.inf_norm();
    let eff_tol = cfg
        .residual_tol
        .max(8.0 * f64::EPSILON * (n as f64).sqrt() * norm.max(1.0));

    // Gershgorin lower bound; shift so every eigenvalue of M + shift I is
    // nonnegative and the algebraically largest one dominates in magnitude.
    let gersh_lo = (0..n)
        .map(|i| {
            let offdiag: f64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| m.get(i, j).abs())
                .sum();
            m.get(i, i) - offdiag
        })
        .fold(f64::INFINITY, f64::min);
    let shift = cfg.shift + (-gersh_lo).max(0.0);

    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut mv = vec![0.0; n];
    let mut iterations = 0u64;
    let mut best_residual = f64::INFINITY;
    let mut last_checkpoint = f64::INFINITY;

    loop {
        m.matvec(&v, &mut mv);
        iterations += 1;
        // Rayleigh quotient and residual on the unshifted matrix.
        let value: f64 = v.iter().zip(&mv).map(|(a, b)| a * b).sum();
        let residual = v
            .iter()
            .zip(&mv)
            .map(|(vi, mvi)| (mvi - value * vi).abs())
            .fold(0.0, f64::max);
        best_residual = best_residual.min(residual);
        if residual <= eff_tol {
            return Ok(finish(m, value, v, iterations));
        }
        if iterations >= cfg.max_iterations {
            break;
        }
        // Stall detection: residual not shrinking by at least 2x per window.
        if iterations % 256 == 0 {
            if residual > last_checkpoint * 0.5 && n <= 2048 {
                break;
            }
            last_checkpoint = residual;
        }
        // Next iterate: w = (M + shift I) v, normalized.
        let mut norm2 = 0.0;
        for i in 0..n {
            mv[i] += shift * v[i];
            norm2 += mv[i] * mv[i];
        }
        let norm2 = norm2.sqrt();
        if norm2 == 0.0 {
            // (M + shift I) annihilates a positive vector: M + shift I = 0 on
            // its support, so the matrix is -shift I restricted; the largest
            // eigenvalue is -shift and v is already an eigenvector.
            return Ok(finish(m, -shift, v, iterations));
        }
        for i in 0..n {
            v[i] = mv[i] / norm2;
        }
    }

    // Fallback: full symmetric solve, then polish the top eigenvector.
    match full_symmetric_eigen(m) {
        Some((eigenvalues, vectors)) => {
            let top = eigenvalues.len() - 1;
            let mut v: Vec<f64> = (0..n).map(|i| vectors[i * n + top]).collect();
            // Two power-iteration polish steps to clean residual rounding.
            for _ in 0..2 {
                m.matvec(&v, &mut mv);
                for i in 0..n {
                    mv[i] += shift * v[i];
                }
                let norm2: f64 = mv.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm2 > 0.0 {
                    for i in 0..n {
                        v[i] = mv[i] / norm2;
                    }
                }
                iterations += 1;
            }
            m.matvec(&v, &mut mv);
            let value: f64 = v.iter().zip(&mv).map(|(a, b)| a * b).sum();
            let residual = v
                .iter()
                .zip(&mv)
                .map(|(vi, mvi)| (mvi - value * vi).abs())
                .fold(0.0, f64::max);
            if residual <= eff_tol.max(64.0 * f64::EPSILON * norm.max(1.0) * n as f64) {
                Ok(finish(m, value, v, iterations))
            } else {
                Err(SpectralError::NonConvergence {
                    residual,
                    iterations,
                })
            }
        }
        None => Err(SpectralError::NonConvergence {
            residual: best_residual,
            iterations,
        }),
    }
}

fn finish(m: &SymMatrix, value: f64, mut v: Vec<f64>, iterations: u64) -> SpectralResult {
    // Sign convention: orient the eigenvector so its largest-magnitude entry
    // is positive; for connected nonnegative matrices this is the Perron
    // vector, entrywise positive.
    let mut max_abs = 0.0;
    let mut sign = 1.0;
    for &x in &v {
        if x.abs() > max_abs {
            max_abs = x.abs();
            sign = if x < 0.0 { -1.0 } else { 1.0 };
        }
    }
    if sign < 0.0 {
        for x in &mut v {
            *x = -*x;
        }
    }
    let mut mv = vec![0.0; m.order];
    m.matvec(&v, &mut mv);
    let residual = v
        .iter()
        .zip(&mv)
        .map(|(vi, mvi)| (mvi - value * vi).abs())
        .fold(0.0, f64::max);
    SpectralResult {
        value,
        vector: v,
        residual,
        iterations,
    }
}

/// q(G): the signless Laplacian spectral radius.
pub fn q_spectral_radius(g: &Graph) -> Result<SpectralResult, SpectralError> {
    largest_eigenvalue(&signless_laplacian(g))
}

pub fn q_spectral_radius_with(
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<SpectralResult, SpectralError> {
    largest_eigenvalue_with(&signless_laplacian(g), cfg)
}

/// rho(G): the adjacency spectral radius.
pub fn adjacency_spectral_radius(g: &Graph) -> Result<SpectralResult, SpectralError> {
    largest_eigenvalue(&adjacency_matrix(g))
}

/// Full spectrum (ascending) via the tridiagonal path. Used for trace checks
/// and as the eigensolver fallback.
pub fn symmetric_eigenvalues(m: &SymMatrix) -> Result<Vec<f64>, SpectralError> {
    if m.order == 0 {
        return Err(SpectralError::EmptyMatrix);
    }
    full_symmetric_eigen(m)
        .map(|(vals, _)| vals)
        .ok_or(SpectralError::NonConvergence {
            residual: f64::NAN,
            iterations: 0,
        })
}

/// Householder tridiagonalization + implicit-shift QL with accumulated
/// eigenvectors (the classic tred2/tql2 pair). Returns eigenvalues ascending
/// and eigenvectors as matrix columns.
fn full_symmetric_eigen(m: &SymMatrix) -> Option<(Vec<f64>, Vec<f64>)> {
    let n = m.order;
    let mut v = m.entries.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    if n == 1 {
        return Some((vec![m.get(0, 0)], vec![1.0]));
    }
    tred2(&mut v, &mut d, &mut e, n);
    if !tql2(&mut d, &mut e, &mut v, n) {
        return None;
    }
    // Sort ascending, permuting eigenvector columns.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap());
    let sorted_d: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let mut sorted_v = vec![0.0; n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            sorted_v[row * n + new_col] = v[row * n + old_col];
        }
    }
    Some((sorted_d, sorted_v))
}

fn tred2(v: &mut [f64], d: &mut [f64], e: &mut [f64], n: usize) {
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
                v[j * n + i] = 0.0;
            }
        } else {
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[j * n + i] = f;
                g = e[j] + v[j * n + j] * f;
                for k in (j + 1)..i {
                    g += v[k * n + j] * d[k];
                    e[k] += v[k * n + j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k * n + j] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
            }
        }
        d[i] = h;
    }
    for i in 0..n - 1 {
        v[(n - 1) * n + i] = v[i * n + i];
        v[i * n + i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k * n + i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k * n + i + 1] * v[k * n + j];
                }
                for k in 0..=i {
                    v[k * n + j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k * n + i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
        v[(n - 1) * n + j] = 0.0;
    }
    v[(n - 1) * n + (n - 1)] = 1.0;
    e[0] = 0.0;
}

fn tql2(d: &mut [f64], e: &mut [f64], v: &mut [f64], n: usize) -> bool {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m >= n {
            m = n - 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 64 {
                    return false;
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g2 = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g2;
                    d[i + 1] = h + s * (c * g2 + s * d[i]);
                    for k in 0..n {
                        h = v[k * n + i + 1];
                        v[k * n + i + 1] = s * v[k * n + i] + c * h;
                        v[k * n + i] = c * v[k * n + i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    true
}

// --- quotient matrices -------------------------------------------------------

/// Block-averaged matrix over an ordered vertex partition, with the exact
/// equitability verdict. Integer source matrices keep an exact integer copy
/// of the entries when the averages are integral.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientMatrix {
    pub order: usize,
    pub entries: Vec<f64>,
    #[serde(skip)]
    pub int_entries: Option<Vec<i64>>,
    pub block_sizes: Vec<usize>,
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }
}

pub fn quotient_matrix(
    m: &SymMatrix,
    partition: &[VertexSet],
) -> Result<QuotientMatrix, SpectralError> {
    quotient_matrix_with_tol(m, partition, 1e-9)
}

pub fn quotient_matrix_with_tol(
    m: &SymMatrix,
    partition: &[VertexSet],
    equitable_tol: f64,
) -> Result<QuotientMatrix, SpectralError> {
    let n = m.order;
    if partition.is_empty() {
        return Err(SpectralError::InvalidPartition("no blocks".into()));
    }
    let mut seen = vec![false; n];
    for (bi, block) in partition.iter().enumerate() {
        if block.universe() != n {
            return Err(SpectralError::InvalidPartition(format!(
                "block {bi} is over a universe of size {} (matrix order {n})",
                block.universe()
            )));
        }
        if block.is_empty() {
            return Err(SpectralError::InvalidPartition(format!("block {bi} is empty")));
        }
        for v in block.iter() {
            if seen[v] {
                return Err(SpectralError::InvalidPartition(format!(
                    "vertex {v} appears in more than one block"
                )));
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(SpectralError::InvalidPartition(
            "blocks do not cover all indices".into(),
        ));
    }

    let r = partition.len();
    let block_sizes: Vec<usize> = partition.iter().map(|b| b.len()).collect();
    let integral = m.is_integer();
    let mut entries = vec![0.0; r * r];
    let mut int_entries: Option<Vec<i64>> = if integral { Some(vec![0; r * r]) } else { None };
    let mut equitable = true;

    for i in 0..r {
        for j in 0..r {
            if integral {
                let mut first_row_sum: Option<i64> = None;
                let mut total: i64 = 0;
                for v in partition[i].iter() {
                    let row_sum: i64 = partition[j].iter().map(|u| m.get(v, u) as i64).sum();
                    total += row_sum;
                    match first_row_sum {
                        None => first_row_sum = Some(row_sum),
                        Some(fr) => {
                            if fr != row_sum {
                                equitable = false;
                            }
                        }
                    }
                }
                let ni = block_sizes[i] as i64;
                entries[i * r + j] = total as f64 / ni as f64;
                if let Some(ints) = int_entries.as_mut() {
                    if total % ni == 0 {
                        ints[i * r + j] = total / ni;
                    } else {
                        int_entries = None;
                    }
                }
            } else {
                let mut first_row_sum: Option<f64> = None;
                let mut total = 0.0;
                for v in partition[i].iter() {
                    let row_sum: f64 = partition[j].iter().map(|u| m.get(v, u)).sum();
                    total += row_sum;
                    match first_row_sum {
                        None => first_row_sum = Some(row_sum),
                        Some(fr) => {
                            if (fr - row_sum).abs() > equitable_tol {
                                equitable = false;
                            }
                        }
                    }
                }
                entries[i * r + j] = total / block_sizes[i] as f64;
            }
        }
    }

    Ok(QuotientMatrix {
        order: r,
        entries,
        int_entries,
        block_sizes,
        equitable,
    })
}

// --- polynomials -------------------------------------------------------------

/// Monic real polynomial, coefficients ascending by degree (last entry 1).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Coefficients ascending; the leading coefficient must be exactly 1.
    pub fn monic(coeffs: Vec<f64>) -> Result<Self, SpectralError> {
        if coeffs.len() < 2 || *coeffs.last().unwrap() != 1.0 {
            return Err(SpectralError::BadPolynomial);
        }
        Ok(Polynomial { coeffs })
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Result<Self, SpectralError> {
        Self::monic(coeffs.iter().map(|&c| c as f64).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_derivative(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for (k, &c) in self.coeffs.iter().enumerate().rev().take(self.coeffs.len() - 1) {
            acc = acc * x + c * k as f64;
        }
        acc
    }
}

/// Cap on the quotient-matrix order accepted by `char_poly`.
pub const CHAR_POLY_ORDER_CAP: usize = 4;

/// Characteristic polynomial det(xI - B), exact over integers when the
/// quotient entries are integral.
pub fn char_poly(b: &QuotientMatrix) -> Result<Polynomial, SpectralError> {
    let r = b.order;
    if r > CHAR_POLY_ORDER_CAP {
        return Err(SpectralError::OrderAboveCap {
            order: r,
            cap: CHAR_POLY_ORDER_CAP,
        });
    }
    if r == 0 {
        return Err(SpectralError::EmptyMatrix);
    }
    match &b.int_entries {
        Some(ints) => {
            let coeffs = char_poly_int(ints, r);
            Polynomial::monic(coeffs.iter().map(|&c| c as f64).collect())
        }
        None => {
            let coeffs = char_poly_float(&b.entries, r);
            Polynomial::monic(coeffs)
        }
    }
}

fn poly_mul_i128(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_det_i128(rows: &[usize], cols: &[usize], m: &[i64], r: usize) -> Vec<i128> {
    // Entries of xI - B as degree <= 1 polynomials; Laplace along first row.
    if rows.len() == 1 {
        let (i, j) = (rows[0], cols[0]);
        return if i == j {
            vec![-(m[i * r + j] as i128), 1]
        } else {
            vec![-(m[i * r + j] as i128)]
        };
    }
    let mut acc = vec![0i128];
    for (col_pos, &j) in cols.iter().enumerate() {
        let i = rows[0];
        let entry: Vec<i128> = if i == j {
            vec![-(m[i * r + j] as i128), 1]
        } else {
            vec![-(m[i * r + j] as i128)]
        };
        let sub_rows = &rows[1..];
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != col_pos)
            .map(|(_, &c)| c)
            .collect();
        let minor = poly_det_i128(sub_rows, &sub_cols, m, r);
        let term = poly_mul_i128(&entry, &minor);
        let sign: i128 = if col_pos % 2 == 0 { 1 } else { -1 };
        if acc.len() < term.len() {
            acc.resize(term.len(), 0);
        }
        for (k, &t) in term.iter().enumerate() {
            acc[k] += sign * t;
        }
    }
    acc
}

fn char_poly_int(m: &[i64], r: usize) -> Vec<i128> {
    let idx: Vec<usize> = (0..r).collect();
    let mut coeffs = poly_det_i128(&idx, &idx, m, r);
    coeffs.resize(r + 1, 0);
    coeffs
}

fn poly_mul_f64(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_det_f64(rows: &[usize], cols: &[usize], m: &[f64], r: usize) -> Vec<f64> {
    if rows.len() == 1 {
        let (i, j) = (rows[0], cols[0]);
        return if i == j {
            vec![-m[i * r + j], 1.0]
        } else {
            vec![-m[i * r + j]]
        };
    }
    let mut acc = vec![0.0];
    for (col_pos, &j) in cols.iter().enumerate() {
        let i = rows[0];
        let entry: Vec<f64> = if i == j {
            vec![-m[i * r + j], 1.0]
        } else {
            vec![-m[i * r + j]]
        };
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != col_pos)
            .map(|(_, &c)| c)
            .collect();
        let minor = poly_det_f64(&rows[1..], &sub_cols, m, r);
        let term = poly_mul_f64(&entry, &minor);
        let sign = if col_pos % 2 == 0 { 1.0 } else { -1.0 };
        if acc.len() < term.len() {
            acc.resize(term.len(), 0.0);
        }
        for (k, &t) in term.iter().enumerate() {
            acc[k] += sign * t;
        }
    }
    acc
}

fn char_poly_float(m: &[f64], r: usize) -> Vec<f64> {
    let idx: Vec<usize> = (0..r).collect();
    let mut coeffs = poly_det_f64(&idx, &idx, m, r);
    coeffs.resize(r + 1, 0.0);
    // Force an exact monic lead against accumulated rounding.
    let lead = *coeffs.last().unwrap();
    if lead != 1.0 && lead != 0.0 {
        for c in coeffs.iter_mut() {
            *c /= lead;
        }
    }
    coeffs
}

// --- root finding --------------------------------------------------------------

/// Largest real root of `p` inside `[lo, hi]`: integer-step bracket scan from
/// the top, bisection to 1e-13, then two Newton polish steps.
pub fn largest_real_root(p: &Polynomial, lo: f64, hi: f64) -> Result<f64, SpectralError> {
    assert!(lo <= hi, "empty bracket");
    let polish = |x: f64| -> f64 {
        let mut y = x;
        for _ in 0..2 {
            let d = p.eval_derivative(y);
            if d == 0.0 {
                break;
            }
            let step = p.eval(y) / d;
            let next = y - step;
            if next < lo || next > hi || !next.is_finite() {
                break;
            }
            y = next;
        }
        y
    };

    let mut upper = hi;
    let mut f_upper = p.eval(upper);
    if f_upper == 0.0 {
        return Ok(polish(upper));
    }
    loop {
        let lower = (upper - 1.0).max(lo);
        let f_lower = p.eval(lower);
        if f_lower == 0.0 {
            return Ok(polish(lower));
        }
        if f_lower.signum() != f_upper.signum() {
            // Bisection on [lower, upper].
            let (mut a, mut b) = (lower, upper);
            let mut fa = f_lower;
            while b - a > 1e-13 {
                let mid = 0.5 * (a + b);
                let fm = p.eval(mid);
                if fm == 0.0 {
                    return Ok(polish(mid));
                }
                if fm.signum() == fa.signum() {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return Ok(polish(0.5 * (a + b)));
        }
        if lower <= lo {
            return Err(SpectralError::NoRootInBracket { lo, hi });
        }
        upper = lower;
        f_upper = f_lower;
    }
}

/// q(K_s v (n-s) K_1) in closed form:
/// (n + 2s - 2 + sqrt((n + 2s - 2)^2 - 8 s (s - 1))) / 2.
pub fn closed_form_split_join(s: usize, n: usize) -> f64 {
    assert!(s >= 1 && s <= n - 1, "requires 1 <= s <= n - 1");
    let a = (n + 2 * s - 2) as f64;
    let disc = a * a - 8.0 * (s as f64) * (s as f64 - 1.0);
    (a + disc.sqrt()) / 2.0
}
