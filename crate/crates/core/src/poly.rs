//! Complex polynomial arithmetic, companion-matrix root extraction and Schur
//! stability decisions.
//!
//! Coefficients are stored lowest-degree-first so Horner evaluation and
//! convolution stay index-stable; the closed-loop characteristic polynomials
//! are written highest-first in the usual control notation, so the
//! constructors [`char_poly_linear`] and [`char_poly_nonlinear`] do the flip
//! in one place.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{CoreError, Result};
use crate::{BOUNDARY_TOL, DEGREE_TRIM_TOL};

/// Dense univariate polynomial over complex scalars.
///
/// `coeffs[k]` is the coefficient of `z^k`. Trailing coefficients whose
/// magnitude is below `DEGREE_TRIM_TOL` relative to the largest one are
/// trimmed at construction, so `degree()` always points at a nonzero leading
/// coefficient (the zero polynomial keeps a single zero coefficient).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        let max = coeffs
            .iter()
            .map(|c| c.norm())
            .fold(0.0_f64, f64::max);
        let tol = DEGREE_TRIM_TOL * max;
        while coeffs.len() > 1 {
            if coeffs.last().map_or(false, |c| c.norm() <= tol) {
                coeffs.pop();
            } else {
                break;
            }
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Horner evaluation of `sum coeffs[k] z^k`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Monic coefficients in descending degree order: `[1, c_1, ..., c_n]`
    /// for `lambda^n + c_1 lambda^{n-1} + ... + c_n`.
    fn monic_descending(&self) -> Result<Vec<Complex64>> {
        let n = self.degree();
        if n == 0 {
            return Err(CoreError::DegreeZero);
        }
        let lead = self.coeffs[n];
        let mut out = Vec::with_capacity(n + 1);
        for k in (0..=n).rev() {
            out.push(self.coeffs[k] / lead);
        }
        Ok(out)
    }

    /// All `degree` roots with multiplicity, as eigenvalues of the companion
    /// matrix of the monic-normalized polynomial.
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        let monic = self.monic_descending()?;
        companion_eigenvalues(&monic)
    }

    /// Decide Schur stability from the root moduli (strict interior
    /// convention: stable iff every modulus is below `1 - BOUNDARY_TOL`).
    pub fn is_schur_stable(&self) -> Result<StabilityVerdict> {
        let roots = self.roots()?;
        let max_root_modulus = roots.iter().map(|r| r.norm()).fold(0.0_f64, f64::max);
        Ok(StabilityVerdict {
            stable: max_root_modulus < 1.0 - BOUNDARY_TOL,
            max_root_modulus,
            margin: 1.0 - max_root_modulus,
            roots,
        })
    }

    /// Schur–Cohn step-down recursion, kept as an independent cross-check of
    /// the companion-eigenvalue verdict. Returns `None` when a reflection
    /// coefficient lands within tolerance of the unit circle and the verdict
    /// is numerically indeterminate.
    pub fn is_schur_stable_schur_cohn(&self) -> Result<Option<bool>> {
        let mut c = self.monic_descending()?;
        let mut m = c.len() - 1;
        while m > 0 {
            let k = c[m];
            let kk = k.norm_sqr();
            if (kk - 1.0).abs() <= 4.0 * BOUNDARY_TOL {
                return Ok(None);
            }
            if kk > 1.0 {
                return Ok(Some(false));
            }
            let denom = 1.0 - kk;
            let mut next = vec![Complex64::new(0.0, 0.0); m];
            next[0] = Complex64::new(1.0, 0.0);
            for j in 1..m {
                next[j] = (c[j] - k * c[m - j].conj()) / denom;
            }
            c = next;
            m -= 1;
        }
        Ok(Some(true))
    }
}

/// Outcome of a stability decision. `roots` is empty when a reduced path
/// (pure Schur–Cohn) produced the verdict.
#[derive(Debug, Clone)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub max_root_modulus: f64,
    pub roots: Vec<Complex64>,
    /// `1 - max_root_modulus`; negative for unstable polynomials.
    pub margin: f64,
}

/// `lambda^N + (-mu + a_1) lambda^{N-1} + a_2 lambda^{N-2} + ... + a_N`,
/// the closed-loop characteristic factor of the linear difference control.
pub fn char_poly_linear(mu: Complex64, a: &[f64]) -> Result<ComplexPolynomial> {
    if a.is_empty() {
        return Err(CoreError::EmptyCoeffs);
    }
    let n = a.len();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    coeffs[n - 1] = Complex64::new(a[0], 0.0) - mu;
    for j in 2..=n {
        coeffs[n - j] = Complex64::new(a[j - 1], 0.0);
    }
    Ok(ComplexPolynomial::new(coeffs))
}

/// `lambda^N - mu (alpha_1 lambda^{N-1} + ... + alpha_N)`, the closed-loop
/// characteristic factor of the non-linear (map-value) control.
pub fn char_poly_nonlinear(mu: Complex64, alpha: &[f64]) -> Result<ComplexPolynomial> {
    if alpha.is_empty() {
        return Err(CoreError::EmptyCoeffs);
    }
    let n = alpha.len();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    for j in 1..=n {
        coeffs[n - j] = -mu * alpha[j - 1];
    }
    Ok(ComplexPolynomial::new(coeffs))
}

/// Eigenvalues of the companion matrix of a monic polynomial given in
/// descending coefficient order `[1, c_1, ..., c_n]`.
fn companion_eigenvalues(monic_desc: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = monic_desc.len() - 1;
    debug_assert!(n >= 1);
    if n == 1 {
        return Ok(vec![-monic_desc[1]]);
    }
    if n == 2 {
        // closed-form eigenvalues of the 2x2 companion block
        let b = monic_desc[1];
        let c = monic_desc[2];
        let disc = (b * b - 4.0 * c).sqrt();
        return Ok(vec![(-b + disc) / 2.0, (-b - disc) / 2.0]);
    }
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 0..n {
        m[(i, n - 1)] = -monic_desc[n - i];
    }
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    let schur = m.try_schur(1e-14, 200 * n).ok_or(CoreError::IllConditioned)?;
    let t = schur.unpack().1;
    Ok((0..n).map(|i| t[(i, i)]).collect())
}
