//! Lowest eigenpairs of real symmetric tridiagonal matrices.
//!
//! Eigenvalues come from Sturm-sequence bisection, eigenvectors from inverse
//! iteration with a pivoted tridiagonal LU solve.

/// Symmetric tridiagonal matrix: `diagonal[0..n]`, `off_diagonal[0..n-1]`.
#[derive(Debug, Clone)]
pub struct SymTridiagonal {
    diagonal: Vec<f64>,
    off_diagonal: Vec<f64>,
    pivot_guard: f64,
}

impl SymTridiagonal {
    pub fn new(diagonal: Vec<f64>, off_diagonal: Vec<f64>) -> Self {
        assert!(
            diagonal.len() == off_diagonal.len() + 1 || (diagonal.is_empty() && off_diagonal.is_empty()),
            "off-diagonal must have n-1 entries"
        );
        let d = diagonal.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let e = off_diagonal.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let pivot_guard = f64::EPSILON * (d + 2.0 * e).max(f64::MIN_POSITIVE);
        Self {
            diagonal,
            off_diagonal,
            pivot_guard,
        }
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.off_diagonal
    }

    pub fn len(&self) -> usize {
        self.diagonal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonal.is_empty()
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 {
                self.off_diagonal[i - 1].abs()
            } else {
                0.0
            };
            let right = if i + 1 < n {
                self.off_diagonal[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diagonal[i] - left - right);
            hi = hi.max(self.diagonal[i] + left + right);
        }
        (lo, hi)
    }

    fn norm_bound(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE)
    }

    /// Number of eigenvalues strictly below `lambda` (negative LDLᵀ pivots).
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        let guard = self.pivot_guard;
        let mut count = 0;
        let mut q = self.diagonal[0] - lambda;
        for i in 0..n {
            if i > 0 {
                let e = self.off_diagonal[i - 1];
                q = (self.diagonal[i] - lambda) - e * e / q;
            }
            if q.abs() < guard {
                q = -guard;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based) inside `[lo, hi]`, which must
    /// bracket it: `sturm_count(lo) <= k < sturm_count(hi)`.
    pub fn bisect_eigenvalue(&self, k: usize, mut lo: f64, mut hi: f64) -> f64 {
        let guard = self.pivot_guard;
        for _ in 0..256 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if hi - lo <= 2.0 * f64::EPSILON * (lo.abs().max(hi.abs())) + f64::MIN_POSITIVE {
                break;
            }
            // Below the rounding floor of the Sturm count there is nothing to gain.
            if hi - lo < 1e-3 * guard {
                break;
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Ascending eigenvalues `0..count` that lie strictly below `ceiling`.
    pub fn lowest_eigenvalues_below(&self, count: usize, ceiling: f64) -> Vec<f64> {
        if self.is_empty() {
            return Vec::new();
        }
        let (lo, hi) = self.gershgorin();
        let top = ceiling.min(hi + 1.0);
        let available = self.sturm_count(top).min(count);
        let mut out = Vec::with_capacity(available);
        // sturm_count(previous eigenvalue) <= k, so it is a valid floor.
        let mut floor = lo - 1.0;
        for k in 0..available {
            let value = self.bisect_eigenvalue(k, floor, top);
            out.push(value);
            floor = value;
        }
        out
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut acc = self.diagonal[i] * x[i];
                if i > 0 {
                    acc += self.off_diagonal[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    acc += self.off_diagonal[i] * x[i + 1];
                }
                acc
            })
            .collect()
    }

    /// Eigenvector for the eigenvalue `lambda`, unit 2-norm, orthogonal to
    /// each vector in `deflate`. Returns `None` if inverse iteration does not
    /// settle.
    pub fn inverse_iteration(&self, lambda: f64, deflate: &[Vec<f64>]) -> Option<Vec<f64>> {
        let n = self.len();
        if n == 0 {
            return None;
        }
        if n == 1 {
            return Some(vec![1.0]);
        }
        let norm = self.norm_bound();
        // Shift slightly off the eigenvalue so the factorization stays regular.
        let shift = lambda + 4.0 * f64::EPSILON * norm.max(lambda.abs());
        let lu = TridiagonalLu::factor(self, shift, norm);

        let mut x: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.5 * ((i as f64) * 0.618_033_988_749_894_9).fract())
            .collect();
        orthogonalize(&mut x, deflate);
        normalize(&mut x);

        for _ in 0..12 {
            let mut y = x.clone();
            lu.solve(&mut y);
            orthogonalize(&mut y, deflate);
            if !normalize(&mut y) {
                return None;
            }
            let overlap: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
            if overlap < 0.0 {
                y.iter_mut().for_each(|v| *v = -*v);
            }
            let change = x
                .iter()
                .zip(&y)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            x = y;
            if change < 1e-13 * (n as f64).sqrt().max(1.0) {
                return Some(x);
            }
        }
        // Accept if the residual is at the rounding level anyway.
        let r = self.matvec(&x);
        let residual = r
            .iter()
            .zip(&x)
            .map(|(ri, xi)| (ri - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        (residual <= 1e-10 * norm).then_some(x)
    }
}

fn orthogonalize(x: &mut [f64], basis: &[Vec<f64>]) {
    for b in basis {
        let dot: f64 = x.iter().zip(b).map(|(a, c)| a * c).sum();
        x.iter_mut().zip(b).for_each(|(a, c)| *a -= dot * c);
    }
}

fn normalize(x: &mut [f64]) -> bool {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if !norm.is_finite() || norm == 0.0 {
        return false;
    }
    x.iter_mut().for_each(|v| *v /= norm);
    true
}

/// LU factorization with partial pivoting of `T - shift·I`.
struct TridiagonalLu {
    u0: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
    multipliers: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagonalLu {
    fn factor(t: &SymTridiagonal, shift: f64, norm: f64) -> Self {
        let n = t.len();
        let tiny = f64::EPSILON * norm;
        let mut u0: Vec<f64> = t.diagonal.iter().map(|d| d - shift).collect();
        let mut u1 = t.off_diagonal.clone();
        let mut sub = t.off_diagonal.clone();
        let mut u2 = vec![0.0; n.saturating_sub(2)];
        let mut multipliers = vec![0.0; n - 1];
        let mut swapped = vec![false; n - 1];

        for i in 0..n - 1 {
            if u0[i].abs() >= sub[i].abs() {
                let pivot = if u0[i] == 0.0 { tiny } else { u0[i] };
                u0[i] = pivot;
                let l = sub[i] / pivot;
                multipliers[i] = l;
                u0[i + 1] -= l * u1[i];
            } else {
                let l = u0[i] / sub[i];
                multipliers[i] = l;
                u0[i] = sub[i];
                let tmp = u0[i + 1];
                u0[i + 1] = u1[i] - l * tmp;
                if i + 2 < n {
                    u2[i] = u1[i + 1];
                    u1[i + 1] = -l * u2[i];
                }
                u1[i] = tmp;
                swapped[i] = true;
            }
            sub[i] = 0.0;
        }
        if u0[n - 1] == 0.0 {
            u0[n - 1] = tiny;
        }
        Self {
            u0,
            u1,
            u2,
            multipliers,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.u0.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let tmp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tmp - self.multipliers[i] * b[i];
            } else {
                b[i + 1] -= self.multipliers[i] * b[i];
            }
        }
        b[n - 1] /= self.u0[n - 1];
        if n >= 2 {
            b[n - 2] = (b[n - 2] - self.u1[n - 2] * b[n - 1]) / self.u0[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.u1[i] * b[i + 1] - self.u2[i] * b[i + 2]) / self.u0[i];
        }
    }
}
