//! Minimal dense linear algebra for the tiny systems this crate solves:
//! determinants of at most 8x8 complex matrices and LU solves on the
//! evaluation matrix (at most ~10x10). Partial pivoting throughout.

use num::complex::Complex64;

/// Determinant of a row-major n x n complex matrix via in-place LU with
/// partial pivoting.
pub(crate) fn det_complex(mut a: Vec<Complex64>, n: usize) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                a[i * n + col]
                    .norm_sqr()
                    .partial_cmp(&a[j * n + col].norm_sqr())
                    .expect("finite entries")
            })
            .expect("nonempty range");
        if a[pivot * n + col].norm_sqr() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
            }
            det = -det;
        }
        let diag = a[col * n + col];
        det *= diag;
        for row in col + 1..n {
            let factor = a[row * n + col] / diag;
            for k in col..n {
                let sub = factor * a[col * n + k];
                a[row * n + k] -= sub;
            }
        }
    }
    det
}

/// LU factorization with partial pivoting of a real square matrix, kept
/// around for repeated solves against the same matrix.
pub(crate) struct LuReal {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
    det: f64,
}

impl LuReal {
    pub(crate) fn factor(mut a: Vec<f64>, n: usize) -> Self {
        assert_eq!(a.len(), n * n);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut det = 1.0;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| {
                    a[i * n + col]
                        .abs()
                        .partial_cmp(&a[j * n + col].abs())
                        .expect("finite entries")
                })
                .expect("nonempty range");
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                perm.swap(col, pivot);
                det = -det;
            }
            let diag = a[col * n + col];
            det *= diag;
            if diag == 0.0 {
                continue;
            }
            for row in col + 1..n {
                let factor = a[row * n + col] / diag;
                a[row * n + col] = factor;
                for k in col + 1..n {
                    a[row * n + k] -= factor * a[col * n + k];
                }
            }
        }
        LuReal {
            n,
            lu: a,
            perm,
            det,
        }
    }

    pub(crate) fn det(&self) -> f64 {
        self.det
    }

    /// Solve A x = b.
    pub(crate) fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        assert_eq!(b.len(), n);
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        for col in 0..n {
            for row in col + 1..n {
                x[row] -= self.lu[row * n + col] * x[col];
            }
        }
        for col in (0..n).rev() {
            x[col] /= self.lu[col * n + col];
            for row in 0..col {
                x[row] -= self.lu[row * n + col] * x[col];
            }
        }
        x
    }

    /// Columns of the inverse, by solving against unit vectors.
    pub(crate) fn inverse(&self) -> Vec<f64> {
        let n = self.n;
        let mut inv = vec![0.0; n * n];
        let mut unit = vec![0.0; n];
        for col in 0..n {
            unit[col] = 1.0;
            let x = self.solve(&unit);
            unit[col] = 0.0;
            for row in 0..n {
                inv[row * n + col] = x[row];
            }
        }
        inv
    }
}

/// Infinity norm (maximum absolute row sum) of a row-major matrix.
pub(crate) fn inf_norm(a: &[f64], n: usize) -> f64 {
    (0..n)
        .map(|r| (0..n).map(|c| a[r * n + c].abs()).sum::<f64>())
        .fold(0.0, f64::max)
}
