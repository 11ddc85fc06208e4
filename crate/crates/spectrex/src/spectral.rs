//! Adjacency spectra, Perron pairs, Cauchy interlacing, and the
//! eigenvalue-side triangle counting identities.

use crate::graph::Graph;
use crate::linalg::{jacobi_eigenvalues, power_iteration, LinalgError, SymMatrix};
use crate::Real;
use serde::Serialize;
use thiserror::Error;

/// Off-diagonal Frobenius norm at which Jacobi is declared converged.
pub const JACOBI_TOL: Real = 1e-12;
/// Full-sweep cap; never reached for the orders in scope.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Residual bound for the Perron pair: ||A v - lambda v||_inf.
pub const PERRON_TOL: Real = 1e-12;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("eigensolver failure: {0}")]
    Linalg(#[from] LinalgError),
    #[error("edge count {given} does not match the spectrum's source graph ({expected})")]
    EdgeCountMismatch { given: usize, expected: usize },
    #[error("{0}")]
    BadArgument(String),
    #[error("spectrum failed a sanity identity: {0}")]
    Inconsistent(String),
}

/// Non-increasing adjacency eigenvalues together with the source edge count.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub values: Vec<Real>,
    pub m: usize,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn lambda1(&self) -> Real {
        self.values[0]
    }
}

/// Largest adjacency eigenvalue with its positive unit eigenvector.
#[derive(Clone, Debug, Serialize)]
pub struct PerronPair {
    pub radius: Real,
    pub vector: Vec<Real>,
    /// False when the input was disconnected; the pair then belongs to the
    /// component of maximum radius and the vector is zero elsewhere.
    pub connected: bool,
    /// Achieved ||A v - lambda v||_inf.
    pub residual: Real,
}

fn adjacency_matrix(g: &Graph) -> SymMatrix<Real> {
    let mut m = SymMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        m.set_sym(u, v, 1.0);
    }
    m
}

/// Full real spectrum via cyclic Jacobi, sorted non-increasing. Verifies the
/// trace identities (sum ~ 0, sum of squares ~ 2m) before returning.
pub fn spectrum(g: &Graph) -> Result<Spectrum, SpectralError> {
    let a = adjacency_matrix(g);
    let values = jacobi_eigenvalues(&a, JACOBI_TOL, JACOBI_MAX_SWEEPS)?;
    let n = g.n() as Real;
    let trace: Real = values.iter().sum();
    if trace.abs() > 1e-8 * n {
        return Err(SpectralError::Inconsistent(format!("trace {trace} not ~ 0")));
    }
    let sq: Real = values.iter().map(|v| v * v).sum();
    if (sq - 2.0 * g.m() as Real).abs() > 1e-6 * n {
        return Err(SpectralError::Inconsistent(format!("sum of squares {sq} not ~ 2m = {}", 2 * g.m())));
    }
    Ok(Spectrum { values, m: g.m() })
}

/// Perron pair by shifted power iteration. Disconnected inputs are handled
/// per component (the one with the largest radius wins) and flagged. For
/// orders where the full eigendecomposition is cheap, the radius is
/// cross-checked against Jacobi's largest eigenvalue.
pub fn spectral_radius(g: &Graph) -> Result<PerronPair, SpectralError> {
    let comps = g.components();
    let mut best: Option<PerronPair> = None;
    for comp in &comps {
        let vs: Vec<usize> = comp.iter().collect();
        let sub = if comps.len() == 1 { g.clone() } else { g.induced_subgraph(comp).map_err(|e| SpectralError::BadArgument(e.to_string()))? };
        let rows: Vec<Vec<usize>> = (0..sub.n()).map(|v| sub.neighbors(v).collect()).collect();
        let (lam, vec) = power_iteration(
            sub.n(),
            |x: &[Real], y: &mut [Real]| {
                for (i, nbrs) in rows.iter().enumerate() {
                    y[i] = nbrs.iter().map(|&j| x[j]).sum();
                }
            },
            PERRON_TOL,
            500_000,
        )?;
        let mut resid: Real = 0.0;
        for (i, nbrs) in rows.iter().enumerate() {
            let av: Real = nbrs.iter().map(|&j| vec[j]).sum();
            resid = resid.max((av - lam * vec[i]).abs());
        }
        if best.as_ref().is_none_or(|b| lam > b.radius) {
            let mut full = vec![0.0; g.n()];
            for (i, &v) in vs.iter().enumerate() {
                full[v] = vec[i];
            }
            best = Some(PerronPair { radius: lam, vector: full, connected: comps.len() == 1, residual: resid });
        }
    }
    let pair = best.expect("graph has at least one component");
    if g.n() <= 64 {
        let lam1 = spectrum(g)?.lambda1();
        if (pair.radius - lam1).abs() > 1e-9 {
            return Err(SpectralError::Inconsistent(format!(
                "power iteration {} vs jacobi {} disagree beyond 1e-9",
                pair.radius, lam1
            )));
        }
    }
    Ok(pair)
}

/// Triangle count from the trace of A^3: (1/6) sum lambda_i^3.
pub fn triangles_from_spectrum(spec: &Spectrum) -> Real {
    spec.values.iter().map(|v| v * v * v).sum::<Real>() / 6.0
}

/// Triangle count through the size-aware identity
/// t = (1/6) sum_{i>=2} (l1 + l_i) l_i^2 + (1/3)(l1^2 - m) l1,
/// algebraically equal to the trace formula given sum l_i^2 = 2m.
pub fn triangles_lemma21(spec: &Spectrum, m: usize) -> Result<Real, SpectralError> {
    if m != spec.m {
        return Err(SpectralError::EdgeCountMismatch { given: m, expected: spec.m });
    }
    let l1 = spec.lambda1();
    let tail: Real = spec.values[1..].iter().map(|&li| (l1 + li) * li * li).sum();
    Ok(tail / 6.0 + (l1 * l1 - m as Real) * l1 / 3.0)
}

/// Cauchy interlacing check: with |H| = s and |G| = n,
/// lambda_{n-s+i}(G) <= lambda_i(H) <= lambda_i(G) for all i, with 1e-9 slack.
pub fn interlace_ok(spec_g: &Spectrum, spec_h: &Spectrum) -> bool {
    let (n, s) = (spec_g.n(), spec_h.n());
    if s > n {
        return false;
    }
    const SLACK: Real = 1e-9;
    (0..s).all(|i| {
        let hi = spec_h.values[i];
        spec_g.values[n - s + i] <= hi + SLACK && hi <= spec_g.values[i] + SLACK
    })
}

/// Lower bound for f(x) = (sqrt(m - 2.5) + x) x^2 over [a, b] with b <= 0:
/// f is increasing left of -(2/3)sqrt(m-2.5) and decreasing from there to 0,
/// so the minimum over the interval sits at an endpoint.
pub fn f_interval_min(a: Real, b: Real, m: usize) -> Result<Real, SpectralError> {
    if a > b {
        return Err(SpectralError::BadArgument(format!("empty interval: a = {a} > b = {b}")));
    }
    if b > 0.0 {
        return Err(SpectralError::BadArgument(format!("b = {b} must be <= 0")));
    }
    if m < 3 {
        return Err(SpectralError::BadArgument(format!("f(x) needs m >= 3, got {m}")));
    }
    Ok(f_eval(a, m).min(f_eval(b, m)))
}

pub(crate) fn f_eval(x: Real, m: usize) -> Real {
    ((m as Real - 2.5).sqrt() + x) * x * x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn cycle_spectra_are_cosines() {
        for s in [5usize, 7, 9] {
            let spec = spectrum(&Graph::cycle(s).unwrap()).unwrap();
            let mut expect: Vec<Real> =
                (0..s).map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as Real / s as Real).cos()).collect();
            expect.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for (got, want) in spec.values.iter().zip(&expect) {
                assert!((got - want).abs() < 1e-10, "C_{s}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn star_spectrum() {
        // K_{1,3}: sqrt(3), 0, 0, -sqrt(3).
        let spec = spectrum(&Graph::complete_bipartite(1, 3).unwrap()).unwrap();
        assert!((spec.values[0] - 3f64.sqrt()).abs() < 1e-10);
        assert!(spec.values[1].abs() < 1e-10);
        assert!(spec.values[2].abs() < 1e-10);
        assert!((spec.values[3] + 3f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn complete_bipartite_radius_exact() {
        for (s, t) in [(2, 3), (3, 4), (2, 9)] {
            let g = Graph::complete_bipartite(s, t).unwrap();
            let p = spectral_radius(&g).unwrap();
            assert!((p.radius - ((s * t) as Real).sqrt()).abs() < 1e-9);
            assert!(p.connected);
            assert!(p.vector.iter().all(|&x| x > 0.0));
        }
    }

    #[test]
    fn disconnected_flagged() {
        // C5 plus an isolated edge: radius 2 from the cycle.
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)]).unwrap();
        let p = spectral_radius(&g).unwrap();
        assert!(!p.connected);
        assert!((p.radius - 2.0).abs() < 1e-9);
        assert_eq!(p.vector[5], 0.0);
    }

    #[test]
    fn triangle_identities_on_small_graphs() {
        let k3 = Graph::cycle(3).unwrap();
        let spec = spectrum(&k3).unwrap();
        assert!((triangles_from_spectrum(&spec) - 1.0).abs() < 1e-9);
        assert!((triangles_lemma21(&spec, 3).unwrap() - 1.0).abs() < 1e-9);

        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let spec = spectrum(&k4).unwrap();
        assert!((triangles_from_spectrum(&spec) - 4.0).abs() < 1e-9);

        let c5 = spectrum(&Graph::cycle(5).unwrap()).unwrap();
        assert!(triangles_from_spectrum(&c5).abs() < 1e-9);
        assert!(triangles_lemma21(&c5, 5).unwrap().abs() < 1e-9);
        assert!(triangles_lemma21(&c5, 4).is_err());

        let bip = spectrum(&Graph::complete_bipartite(3, 3).unwrap()).unwrap();
        assert!(triangles_from_spectrum(&bip).abs() < 1e-9);
    }

    #[test]
    fn interlacing_basics() {
        let g = spectrum(&Graph::cycle(7).unwrap()).unwrap();
        assert!(interlace_ok(&g, &g));
        let violation_h = Spectrum { values: vec![2.0], m: 0 };
        let violation_g = Spectrum { values: vec![1.0, -1.0], m: 1 };
        assert!(!interlace_ok(&violation_g, &violation_h));
    }

    #[test]
    fn f_min_contract() {
        assert_eq!(f_interval_min(0.0, 0.0, 258).unwrap(), 0.0);
        assert!(f_interval_min(-1.0, 0.5, 258).is_err());
        assert!(f_interval_min(0.0, -1.0, 258).is_err());
        // Paper instance: m >= 258, a = -sqrt(m-4.244), b = -1.801 gives a
        // bound exceeding 0.8 sqrt(m-2.5).
        for m in [258usize, 1000, 5000] {
            let a = -((m as Real) - 4.244).sqrt();
            let v = f_interval_min(a, -1.801, m).unwrap();
            assert!(v > 0.8 * ((m as Real) - 2.5).sqrt(), "m={m}: {v}");
        }
        // Second paper instance: a = -sqrt((m-1.001)/2), b = -1.801.
        for m in [258usize, 1000] {
            let a = -(((m as Real) - 1.001) / 2.0).sqrt();
            let v = f_interval_min(a, -1.801, m).unwrap();
            assert!(v > 3.243 * ((m as Real) - 2.5).sqrt() - 5.841, "m={m}");
        }
    }
}
