//! Dense symmetric eigensolver and power iteration, generic over the scalar.
//!
//! Cyclic Jacobi is the workhorse: for the matrix orders this toolkit sees
//! (dozens of vertices) it is simple, deterministic, and accurate to near
//! machine precision. The crate pins the scalar to `f64` via [`crate::Real`];
//! the kernels stay generic so the same code runs at other precisions.

use num_traits::Float;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("jacobi sweep cap {0} reached before convergence")]
    NoConvergence(usize),
    #[error("power iteration failed to converge in {0} iterations")]
    PowerNoConvergence(usize),
    #[error("matrix dimension mismatch")]
    Dimension,
}

/// Row-major dense symmetric matrix.
#[derive(Clone, Debug)]
pub struct SymMatrix<F> {
    pub n: usize,
    pub a: Vec<F>,
}

impl<F: Float> SymMatrix<F> {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, a: vec![F::zero(); n * n] }
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.a[i * self.n + j]
    }

    pub fn set_sym(&mut self, i: usize, j: usize, v: F) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = v;
    }

    fn off_diagonal_norm(&self) -> F {
        let mut s = F::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    let x = self.get(i, j);
                    s = s + x * x;
                }
            }
        }
        s.sqrt()
    }
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, sorted
/// non-increasing. Converged when the off-diagonal Frobenius norm drops
/// below `tol`; errors after `max_sweeps` full sweeps.
pub fn jacobi_eigenvalues<F: Float>(m: &SymMatrix<F>, tol: F, max_sweeps: usize) -> Result<Vec<F>, LinalgError> {
    let n = m.n;
    let mut a = m.clone();
    if n == 1 {
        return Ok(vec![a.get(0, 0)]);
    }
    let half = F::from(0.5).unwrap();
    for _ in 0..max_sweeps {
        if a.off_diagonal_norm() <= tol {
            let mut vals: Vec<F> = (0..n).map(|i| a.get(i, i)).collect();
            vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
            return Ok(vals);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == F::zero() {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = half * (aqq - app) / apq;
                // Numerically stable tangent of the rotation angle.
                let t = if theta == F::zero() {
                    F::one()
                } else {
                    let s = theta.signum();
                    s / (theta.abs() + (F::one() + theta * theta).sqrt())
                };
                let c = F::one() / (F::one() + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set_sym(k, p, c * akp - s * akq);
                    a.set_sym(k, q, s * akp + c * akq);
                }
                a.set_sym(p, p, app - t * apq);
                a.set_sym(q, q, aqq + t * apq);
                a.set_sym(p, q, F::zero());
            }
        }
    }
    if a.off_diagonal_norm() <= tol {
        let mut vals: Vec<F> = (0..n).map(|i| a.get(i, i)).collect();
        vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
        return Ok(vals);
    }
    Err(LinalgError::NoConvergence(max_sweeps))
}

/// Dominant eigenpair of a nonnegative symmetric operator by shifted power
/// iteration with Rayleigh-quotient estimates.
///
/// `matvec(x, y)` must write `A x` into `y`. The iteration runs on `A + I`,
/// which makes the Perron root strictly dominant for connected graphs even
/// when the spectrum is symmetric. Converged when the residual
/// `||A v - lambda v||_inf` falls below `tol`.
pub fn power_iteration<F: Float, M: Fn(&[F], &mut [F])>(
    n: usize,
    matvec: M,
    tol: F,
    max_iters: usize,
) -> Result<(F, Vec<F>), LinalgError> {
    let mut v = vec![F::one() / F::from(n).unwrap().sqrt(); n];
    let mut av = vec![F::zero(); n];
    let mut lambda = F::zero();
    for it in 0..max_iters {
        matvec(&v, &mut av);
        // Rayleigh quotient of A (v stays unit).
        lambda = dot(&v, &av);
        let mut resid = F::zero();
        for i in 0..n {
            let r = (av[i] - lambda * v[i]).abs();
            if r > resid {
                resid = r;
            }
        }
        if resid <= tol && it > 0 {
            return Ok((lambda, v));
        }
        // Shift: w = (A + I) v, then normalize.
        let mut norm = F::zero();
        for i in 0..n {
            av[i] = av[i] + v[i];
            norm = norm + av[i] * av[i];
        }
        let norm = norm.sqrt();
        if norm == F::zero() {
            // Zero operator: eigenvalue 0, any unit vector works.
            return Ok((F::zero(), v));
        }
        for i in 0..n {
            v[i] = av[i] / norm;
        }
    }
    let _ = lambda;
    Err(LinalgError::PowerNoConvergence(max_iters))
}

fn dot<F: Float>(x: &[F], y: &[F]) -> F {
    x.iter().zip(y).fold(F::zero(), |s, (&a, &b)| s + a * b)
}
