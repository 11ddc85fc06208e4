//! Exact rational univariate polynomials with Sturm-chain root counting and
//! certified largest-root extraction.
//!
//! Coefficients are arbitrary-precision rationals, so every sign decision
//! below — including signs at points of the form sqrt(s) with s rational —
//! is exact. Bisection runs over f64-representable endpoints, which convert
//! to rationals losslessly; the bracket signs are therefore certificates,
//! not float estimates.

use crate::Real;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

pub const ROOT_BRACKET_WIDTH: Real = 1e-10;

#[derive(Debug, Error)]
pub enum RootError {
    #[error("zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("could not certify a sign-change bracket for the largest root: {0}")]
    NoSignChange(String),
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense polynomial, ascending coefficients, no trailing zeros. The zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    c: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RatPoly { c }
    }

    pub fn zero() -> Self {
        RatPoly { c: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.c.last()
    }

    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: Real) -> Real {
        let mut acc = 0.0;
        for c in self.c.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(Real::NAN);
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i32 {
        sign_of(&self.eval_exact(x))
    }

    pub fn derivative(&self) -> RatPoly {
        if self.c.len() <= 1 {
            return RatPoly::zero();
        }
        let c = self.c.iter().enumerate().skip(1).map(|(i, v)| v * rat(i as i64)).collect();
        RatPoly::new(c)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.c.iter().map(|v| -v).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let len = self.c.len().max(other.c.len());
        let mut c = vec![BigRational::zero(); len];
        for (i, v) in self.c.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.c.iter().enumerate() {
            c[i] -= v;
        }
        RatPoly::new(c)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RatPoly::new(c)
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.c.iter().cloned());
        RatPoly::new(c)
    }

    /// Remainder of self / divisor under exact rational division.
    pub fn rem(&self, divisor: &RatPoly) -> RatPoly {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut r = self.c.clone();
        while r.len() > d {
            let k = r.len() - 1;
            let factor = r[k].clone() / &lead;
            if !factor.is_zero() {
                for i in 0..=d {
                    let t = &divisor.c[i] * &factor;
                    r[k - d + i] -= t;
                }
            }
            r.pop();
        }
        RatPoly::new(r)
    }

    /// Splits p(x) = E(x^2) + x * O(x^2); returns (E, O) as polynomials in
    /// s = x^2. Evaluating both at rational s gives the exact pair (a, b)
    /// with p(sqrt(s)) = a + b sqrt(s).
    pub fn even_odd_split(&self) -> (RatPoly, RatPoly) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, c) in self.c.iter().enumerate() {
            if i % 2 == 0 {
                even.push(c.clone());
            } else {
                odd.push(c.clone());
            }
        }
        (RatPoly::new(even), RatPoly::new(odd))
    }

    /// Exact sign of p(sqrt(s)) for rational s >= 0.
    pub fn sign_at_sqrt(&self, s: &BigRational) -> i32 {
        assert!(!s.is_negative(), "sqrt of negative rational");
        let (e, o) = self.even_odd_split();
        let a = e.eval_exact(s);
        let b = o.eval_exact(s);
        sign_of_sqrt_combination(&a, &b, s)
    }

    /// Cauchy root bound: 1 + max |c_i| / |c_lead|. Every real root lies
    /// strictly inside (-B, B).
    pub fn cauchy_bound(&self) -> BigRational {
        let lead = self.leading().expect("zero polynomial").abs();
        let mut best = BigRational::zero();
        for c in &self.c[..self.c.len() - 1] {
            let r = c.abs() / &lead;
            if r > best {
                best = r;
            }
        }
        best + rat(1)
    }
}

fn sign_of(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact sign of a + b sqrt(s), all rational, s >= 0.
pub fn sign_of_sqrt_combination(a: &BigRational, b: &BigRational, s: &BigRational) -> i32 {
    let (sa, sb) = (sign_of(a), sign_of(b));
    if sb == 0 || s.is_zero() {
        return sa;
    }
    if sa == 0 {
        return sb;
    }
    if sa == sb {
        return sa;
    }
    // Opposite signs: compare a^2 against b^2 s.
    let lhs = a * a;
    let rhs = b * b * s;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Canonical Sturm chain: p, p', then negated remainders down to a constant.
pub struct SturmChain {
    polys: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Result<Self, RootError> {
        if p.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            polys.push(d);
            loop {
                let k = polys.len();
                let r = polys[k - 2].rem(&polys[k - 1]).neg();
                if r.is_zero() {
                    break;
                }
                polys.push(r);
            }
        }
        Ok(SturmChain { polys })
    }

    fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::count_variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_sqrt(&self, s: &BigRational) -> usize {
        Self::count_variations(self.polys.iter().map(|p| p.sign_at_sqrt(s)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::count_variations(self.polys.iter().map(|p| p.leading().map_or(0, sign_of)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::count_variations(self.polys.iter().map(|p| {
            let s = p.leading().map_or(0, sign_of);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in (x, +inf); requires p(x) != 0.
    pub fn roots_above(&self, x: &BigRational) -> usize {
        self.variations_at(x) - self.variations_at_pos_inf()
    }

    /// Number of distinct real roots in (sqrt(s), +inf); requires
    /// p(sqrt(s)) != 0.
    pub fn roots_above_sqrt(&self, s: &BigRational) -> usize {
        self.variations_at_sqrt(s) - self.variations_at_pos_inf()
    }

    /// Number of distinct real roots in (sqrt(s_lo), sqrt(s_hi)]; requires
    /// p(sqrt(s_lo)) != 0.
    pub fn roots_between_sqrt(&self, s_lo: &BigRational, s_hi: &BigRational) -> usize {
        self.variations_at_sqrt(s_lo) - self.variations_at_sqrt(s_hi)
    }

    pub fn total_real_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Certifies p(x) > 0 for every x >= x0: positive at x0 and no real root to
/// the right.
pub fn positive_on_ray(p: &RatPoly, x0: &BigRational) -> Result<bool, RootError> {
    if p.sign_at(x0) <= 0 {
        return Ok(false);
    }
    Ok(SturmChain::new(p)?.roots_above(x0) == 0)
}

/// Certifies p(x) > 0 for every x >= sqrt(s).
pub fn positive_on_sqrt_ray(p: &RatPoly, s: &BigRational) -> Result<bool, RootError> {
    if p.sign_at_sqrt(s) <= 0 {
        return Ok(false);
    }
    Ok(SturmChain::new(p)?.roots_above_sqrt(s) == 0)
}

/// Largest real root with a sign-change bracket of width <= 1e-10 and a
/// root-count certificate that nothing lies above the bracket.
#[derive(Clone, Debug, Serialize)]
pub struct CertifiedRoot {
    pub value: Real,
    pub lo: Real,
    pub hi: Real,
}

impl CertifiedRoot {
    pub fn width(&self) -> Real {
        self.hi - self.lo
    }
}

/// Isolates the largest real root by Sturm-guided bisection from the Cauchy
/// bound. All interval decisions are exact; the returned bracket satisfies
/// sign(p(lo)) != sign(p(hi)) and contains no other root, and no real root
/// exceeds hi.
pub fn largest_real_root(p: &RatPoly) -> Result<CertifiedRoot, RootError> {
    let chain = SturmChain::new(p)?;
    if p.degree() == Some(0) || chain.total_real_roots() == 0 {
        return Err(RootError::NoRealRoot);
    }
    let bound = chain.polys[0].cauchy_bound();
    let bound_f = bound.to_f64().unwrap().max(1.0) * 1.000001 + 1e-9;
    let (mut lo, mut hi) = (-bound_f, bound_f);
    // Invariant: at least one root in (lo, +inf), none in (hi, +inf).
    debug_assert!(chain.roots_above(&BigRational::from_float(lo).unwrap()) >= 1);
    while hi - lo > ROOT_BRACKET_WIDTH {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        let mid_q = BigRational::from_float(mid).unwrap();
        if p.eval_exact(&mid_q).is_zero() {
            // Exact hit. If nothing lies above, certify a tiny bracket
            // around mid; otherwise keep hunting to the right.
            if chain.roots_above(&mid_q) == 0 {
                return bracket_exact_hit(p, mid);
            }
            lo = mid;
        } else if chain.roots_above(&mid_q) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lo_q = BigRational::from_float(lo).unwrap();
    let hi_q = BigRational::from_float(hi).unwrap();
    let (slo, shi) = (p.sign_at(&lo_q), p.sign_at(&hi_q));
    if slo == 0 || shi == 0 || slo == shi {
        return Err(RootError::NoSignChange(format!(
            "bracket [{lo}, {hi}] has signs ({slo}, {shi}); largest root may have even multiplicity"
        )));
    }
    Ok(CertifiedRoot { value: lo + (hi - lo) / 2.0, lo, hi })
}

fn bracket_exact_hit(p: &RatPoly, root: Real) -> Result<CertifiedRoot, RootError> {
    let mut delta = ROOT_BRACKET_WIDTH / 4.0;
    for _ in 0..8 {
        let lo = root - delta;
        let hi = root + delta;
        let slo = p.sign_at(&BigRational::from_float(lo).unwrap());
        let shi = p.sign_at(&BigRational::from_float(hi).unwrap());
        if slo != 0 && shi != 0 && slo != shi {
            return Ok(CertifiedRoot { value: root, lo, hi });
        }
        delta /= 4.0;
    }
    Err(RootError::NoSignChange(format!("even-order or ill-conditioned root at {root}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(c.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn sqrt_two() {
        // x^2 - 2
        let p = poly(&[(-2, 1), (0, 1), (1, 1)]);
        let r = largest_real_root(&p).unwrap();
        assert!((r.value - 2f64.sqrt()).abs() < 1e-10);
        assert!(r.width() <= ROOT_BRACKET_WIDTH * 1.01);
    }

    #[test]
    fn exact_integer_root() {
        // (x - 2)(x + 3) = x^2 + x - 6; largest root exactly 2.
        let p = poly(&[(-6, 1), (1, 1), (1, 1)]);
        let r = largest_real_root(&p).unwrap();
        assert!((r.value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn picks_largest_not_first() {
        // (x+5)(x-1)(x-3) = x^3 + x^2 - 17x + 15.
        let p = poly(&[(15, 1), (-17, 1), (1, 1), (1, 1)]);
        let r = largest_real_root(&p).unwrap();
        assert!((r.value - 3.0).abs() < 1e-10);
    }

    #[test]
    fn no_real_root() {
        let p = poly(&[(1, 1), (0, 1), (1, 1)]); // x^2 + 1
        assert!(matches!(largest_real_root(&p), Err(RootError::NoRealRoot)));
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x-3)
        let p = poly(&[(-6, 1), (11, 1), (-6, 1), (1, 1)]);
        let chain = SturmChain::new(&p).unwrap();
        assert_eq!(chain.total_real_roots(), 3);
        assert_eq!(chain.roots_above(&ratio(5, 2)), 1);
        assert_eq!(chain.roots_above(&rat(4)), 0);
        assert_eq!(chain.roots_above(&rat(0)), 3);
    }

    #[test]
    fn sqrt_sign_logic() {
        // q(x) = x - 3/2 at sqrt(s): negative for s = 2, zero for s = 9/4,
        // positive for s = 3.
        let q = RatPoly::new(vec![ratio(-3, 2), rat(1)]);
        assert_eq!(q.sign_at_sqrt(&rat(2)), -1);
        assert_eq!(q.sign_at_sqrt(&rat(3)), 1);
        assert_eq!(q.sign_at_sqrt(&ratio(9, 4)), 0);
    }

    #[test]
    fn ray_positivity() {
        // x^2 - 2 is positive on [3/2, inf)? No: sqrt(2) < 3/2 means yes.
        let p = poly(&[(-2, 1), (0, 1), (1, 1)]);
        assert!(positive_on_ray(&p, &ratio(3, 2)).unwrap());
        assert!(!positive_on_ray(&p, &rat(1)).unwrap());
        // Positive on [sqrt(3), inf), not on [sqrt(1), inf).
        assert!(positive_on_sqrt_ray(&p, &rat(3)).unwrap());
        assert!(!positive_on_sqrt_ray(&p, &rat(1)).unwrap());
    }
}
