//! Symmetric banded matrices with an LDLᵀ factorization, inertia counts, and
//! a deterministic smallest-eigenvalue solver for the generalized pencil
//! `A x = λ M x` (M positive definite).
//!
//! The eigenvalue route is spectrum slicing: Sylvester's law gives the number
//! of pencil eigenvalues below a shift from the factorization inertia, a short
//! bisection localizes the smallest one, and shift-and-invert iteration from a
//! deterministic start vector polishes it. Everything is dense within the
//! band, so the cost is `O(n·bw²)` per factorization.

use crate::error::{Error, Result};

/// Symmetric matrix stored by its lower band: entry `(i, j)` with
/// `0 <= i - j <= bw` lives at `data[i*(bw+1) + (i-j)]`.
#[derive(Debug, Clone)]
pub struct SymBanded {
    n: usize,
    bw: usize,
    data: Vec<f64>,
}

impl SymBanded {
    pub fn zeros(n: usize, bw: usize) -> Self {
        SymBanded {
            n,
            bw,
            data: vec![0.0; n * (bw + 1)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bandwidth(&self) -> usize {
        self.bw
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        if hi - lo > self.bw {
            0.0
        } else {
            self.data[hi * (self.bw + 1) + (hi - lo)]
        }
    }

    /// Add `v` to entry `(i, j)` (and by symmetry `(j, i)`).
    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        assert!(hi - lo <= self.bw, "entry ({i},{j}) outside band {}", self.bw);
        self.data[hi * (self.bw + 1) + (hi - lo)] += v;
    }

    /// `y = A x`.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        y.fill(0.0);
        for i in 0..self.n {
            let lo = i.saturating_sub(self.bw);
            let row = &self.data[i * (self.bw + 1)..];
            let mut acc = row[0] * x[i];
            for j in lo..i {
                let a = row[i - j];
                acc += a * x[j];
                y[j] += a * x[i];
            }
            y[i] += acc;
        }
    }

    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let mut y = vec![0.0; self.n];
        self.matvec(x, &mut y);
        dot(x, &y)
    }

    /// `self + scale * other`, entrywise over the union band.
    pub fn add_scaled(&self, other: &SymBanded, scale: f64) -> SymBanded {
        assert_eq!(self.n, other.n);
        let bw = self.bw.max(other.bw);
        let mut out = SymBanded::zeros(self.n, bw);
        for i in 0..self.n {
            for d in 0..=bw.min(i) {
                let v = self.get(i, i - d) + scale * other.get(i, i - d);
                if v != 0.0 {
                    out.add(i, i - d, v);
                }
            }
        }
        out
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// LDLᵀ factorization of a symmetric banded matrix, without pivoting; zero
/// pivots are perturbed to a signed floor so the factorization always exists
/// (the standard device for spectrum slicing at a shift that happens to hit
/// an eigenvalue).
pub struct BandedLdlt {
    n: usize,
    bw: usize,
    /// Unit lower factor within the band; diagonal slot holds D.
    f: Vec<f64>,
    negative_pivots: usize,
}

impl BandedLdlt {
    pub fn factor(a: &SymBanded) -> Self {
        let n = a.n;
        let bw = a.bw;
        let w = bw + 1;
        let mut f = a.data.clone();
        let scale = a
            .data
            .iter()
            .fold(0.0f64, |m, &v| m.max(v.abs()))
            .max(f64::MIN_POSITIVE);
        let floor = scale * 1e-300_f64.max(f64::EPSILON * f64::EPSILON);
        let mut negative = 0usize;
        for j in 0..n {
            let lo = j.saturating_sub(bw);
            // d_j = a_jj - sum_k L_jk^2 d_k
            let mut d = f[j * w];
            for k in lo..j {
                let l = f[j * w + (j - k)];
                d -= l * l * f[k * w];
            }
            if d == 0.0 {
                d = floor;
            }
            if d < 0.0 {
                negative += 1;
            }
            f[j * w] = d;
            let imax = (j + bw).min(n - 1);
            for i in (j + 1)..=imax {
                let klo = i.saturating_sub(bw).max(lo);
                let mut v = f[i * w + (i - j)];
                for k in klo..j {
                    v -= f[i * w + (i - k)] * f[j * w + (j - k)] * f[k * w];
                }
                f[i * w + (i - j)] = v / d;
            }
        }
        BandedLdlt {
            n,
            bw,
            f,
            negative_pivots: negative,
        }
    }

    /// Number of negative pivots = number of eigenvalues below the shift at
    /// which the factored matrix was formed (Sylvester's law of inertia).
    pub fn negative_pivots(&self) -> usize {
        self.negative_pivots
    }

    /// Solve `A x = b` in place.
    pub fn solve(&self, b: &mut [f64]) {
        let w = self.bw + 1;
        // forward: L y = b
        for i in 0..self.n {
            let lo = i.saturating_sub(self.bw);
            let mut v = b[i];
            for k in lo..i {
                v -= self.f[i * w + (i - k)] * b[k];
            }
            b[i] = v;
        }
        // diagonal
        for i in 0..self.n {
            b[i] /= self.f[i * w];
        }
        // backward: L^T x = z
        for i in (0..self.n).rev() {
            let hi = (i + self.bw).min(self.n - 1);
            let mut v = b[i];
            for k in (i + 1)..=hi {
                v -= self.f[k * w + (k - i)] * b[k];
            }
            b[i] = v;
        }
    }
}

/// Number of pencil eigenvalues of `(A, M)` strictly below `shift`.
pub fn eigenvalues_below(a: &SymBanded, m: &SymBanded, shift: f64) -> usize {
    BandedLdlt::factor(&a.add_scaled(m, -shift)).negative_pivots()
}

#[derive(Debug, Clone)]
pub struct SmallestEigen {
    pub value: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
}

/// Smallest eigenvalue of `A x = λ M x` with `M` positive definite.
///
/// `x0` seeds the inverse iteration (all-ones when `None`); `tol` is a
/// relative tolerance on the eigenvalue.
pub fn smallest_eigenpair(
    a: &SymBanded,
    m: &SymBanded,
    x0: Option<&[f64]>,
    tol: f64,
    max_iter: usize,
) -> Result<SmallestEigen> {
    let n = a.n;
    assert_eq!(n, m.n());
    let mut x: Vec<f64> = match x0 {
        Some(v) => v.to_vec(),
        None => vec![1.0; n],
    };
    let mnorm = m.quadratic_form(&x).sqrt();
    if !(mnorm > 0.0) {
        return Err(Error::solver("start vector has zero M-norm"));
    }
    x.iter_mut().for_each(|v| *v /= mnorm);
    let mut rho = a.quadratic_form(&x);

    // Find a shift certified below the smallest eigenvalue.
    let mut gap = 1.0 + 0.5 * rho.abs();
    let mut lo = rho - gap;
    let mut expansions = 0;
    while eigenvalues_below(a, m, lo) > 0 {
        gap *= 4.0;
        lo = rho - gap;
        expansions += 1;
        if expansions > 60 {
            return Err(Error::solver("could not bracket the smallest eigenvalue"));
        }
    }
    // Localize to ~1% by inertia bisection, keeping `lo` certified below.
    let mut hi = rho + f64::EPSILON * (1.0 + rho.abs());
    for _ in 0..40 {
        if hi - lo <= 0.01 * (1.0 + lo.abs().max(hi.abs())) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if eigenvalues_below(a, m, mid) == 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Shift-and-invert iteration at a shift just below the localized value.
    let sigma = lo - 0.05 * (hi - lo) - f64::EPSILON * (1.0 + lo.abs());
    let fact = BandedLdlt::factor(&a.add_scaled(m, -sigma));
    let mut work = vec![0.0; n];
    let scale = sigma.abs().max(rho.abs()).max(1e-30);
    let mut prev_drift = f64::INFINITY;
    for it in 0..max_iter {
        m.matvec(&x, &mut work);
        fact.solve(&mut work);
        let mn = m.quadratic_form(&work).sqrt();
        if !(mn > 0.0) || !mn.is_finite() {
            return Err(Error::solver("inverse iteration produced a degenerate vector"));
        }
        work.iter_mut().for_each(|v| *v /= mn);
        std::mem::swap(&mut x, &mut work);
        let new_rho = a.quadratic_form(&x);
        let drift = (new_rho - rho).abs();
        rho = new_rho;
        // Relative test, plus an absolute clause for eigenvalues at or near
        // zero and a stagnation backstop once the drift reaches the roundoff
        // floor of the quadratic form.
        let converged = drift <= tol * rho.abs().max(1e-30)
            || drift <= 1e-13 * scale
            || (it >= 10 && drift >= prev_drift && drift <= 1e-9 * scale);
        prev_drift = drift;
        if converged && it > 0 {
            return Ok(SmallestEigen {
                value: rho,
                vector: x,
                iterations: it + 1,
            });
        }
    }
    Err(Error::solver(format!(
        "inverse iteration did not converge in {max_iter} steps (last value {rho})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// -1/2/-1 Toeplitz tridiagonal: eigenvalues 2 - 2 cos(kπ/(n+1)).
    fn toeplitz(n: usize) -> SymBanded {
        let mut a = SymBanded::zeros(n, 1);
        for i in 0..n {
            a.add(i, i, 2.0);
            if i > 0 {
                a.add(i, i - 1, -1.0);
            }
        }
        a
    }

    fn identity(n: usize) -> SymBanded {
        let mut m = SymBanded::zeros(n, 0);
        for i in 0..n {
            m.add(i, i, 1.0);
        }
        m
    }

    #[test]
    fn inertia_counts_toeplitz_eigenvalues() {
        let n = 50;
        let a = toeplitz(n);
        let m = identity(n);
        for &shift in &[0.5, 1.0, 2.0, 3.5] {
            let expect = (1..=n)
                .filter(|&k| 2.0 - 2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos() < shift)
                .count();
            assert_eq!(eigenvalues_below(&a, &m, shift), expect, "shift {shift}");
        }
    }

    #[test]
    fn smallest_eigenvalue_toeplitz() {
        let n = 200;
        let a = toeplitz(n);
        let m = identity(n);
        let exact = 2.0 - 2.0 * (PI / (n as f64 + 1.0)).cos();
        let got = smallest_eigenpair(&a, &m, None, 1e-13, 400).unwrap();
        assert!(
            (got.value - exact).abs() < 1e-11 * exact,
            "{} vs {exact}",
            got.value
        );
        // Residual check: ||A x - λ M x|| small.
        let mut ax = vec![0.0; n];
        a.matvec(&got.vector, &mut ax);
        let mut mx = vec![0.0; n];
        m.matvec(&got.vector, &mut mx);
        let res: f64 = ax
            .iter()
            .zip(&mx)
            .map(|(p, q)| (p - got.value * q).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!(res < 1e-9);
    }

    #[test]
    fn generalized_pencil_with_diagonal_mass() {
        // A = diag(3, -5, 7), M = diag(1, 2, 4): eigenvalues 3, -2.5, 1.75.
        let mut a = SymBanded::zeros(3, 0);
        a.add(0, 0, 3.0);
        a.add(1, 1, -5.0);
        a.add(2, 2, 7.0);
        let mut m = SymBanded::zeros(3, 0);
        m.add(0, 0, 1.0);
        m.add(1, 1, 2.0);
        m.add(2, 2, 4.0);
        let got = smallest_eigenpair(&a, &m, None, 1e-14, 200).unwrap();
        assert!((got.value + 2.5).abs() < 1e-12);
        assert_eq!(eigenvalues_below(&a, &m, 0.0), 1);
        assert_eq!(eigenvalues_below(&a, &m, 2.0), 2);
    }

    #[test]
    fn solve_round_trip() {
        let n = 60;
        let a = toeplitz(n);
        let fact = BandedLdlt::factor(&a);
        let b: Vec<f64> = (0..n).map(|i| ((i * 7 + 3) % 11) as f64 - 5.0).collect();
        let mut x = b.clone();
        fact.solve(&mut x);
        let mut ax = vec![0.0; n];
        a.matvec(&x, &mut ax);
        for i in 0..n {
            assert!((ax[i] - b[i]).abs() < 1e-9, "component {i}");
        }
    }
}
