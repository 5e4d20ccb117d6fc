use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// Polynomial with rational coefficients, ascending degree, no trailing
/// zeros. Used only for Sturm chains and root isolation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly { coeffs: vec![] };
        }
        RatPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from(BigInt::from(i as u64 + 1)))
                .collect(),
        )
    }

    /// Remainder of self divided by d.
    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let dl = d.coeffs.last().unwrap().clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let shift = r.degree() - d.degree();
            let f = r.coeffs.last().unwrap() / &dl;
            let mut coeffs = r.coeffs.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                coeffs[i + shift] -= &f * dc;
            }
            // the leading term cancels exactly
            coeffs.pop();
            r = RatPoly::new(coeffs);
        }
        r
    }
}

/// Sturm chain of a polynomial (intended squarefree for exact root counts).
pub fn sturm_chain(p: &IntPoly) -> Vec<RatPoly> {
    let p0 = RatPoly::from_int(p);
    let p1 = p0.derivative();
    let mut chain = vec![p0];
    if p1.is_zero() {
        return chain;
    }
    chain.push(p1);
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(RatPoly {
            coeffs: r.coeffs.iter().map(|c| -c).collect(),
        });
    }
    chain
}

fn sign_variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut count = 0usize;
    let mut last: Option<bool> = None; // true = positive
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Number of distinct real roots of the chain's polynomial in (a, b].
pub fn count_roots_in(chain: &[RatPoly], a: &BigRational, b: &BigRational) -> usize {
    assert!(a < b, "empty interval");
    let va = sign_variations(chain, a);
    let vb = sign_variations(chain, b);
    va.saturating_sub(vb)
}

/// Cauchy bound: all complex roots of p have |z| < bound.
pub fn cauchy_root_bound(p: &IntPoly) -> BigRational {
    assert!(!p.is_zero() && p.degree() >= 1);
    let lc = p.leading_coeff().abs();
    let mut maxc = BigInt::zero();
    for c in &p.coeffs()[..p.degree()] {
        let a = c.abs();
        if a > maxc {
            maxc = a;
        }
    }
    BigRational::from(BigInt::one()) + BigRational::new(maxc, lc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_roots_of_quadratic() {
        // x^2 - 3x + 1: roots (3±√5)/2 ≈ 0.382, 2.618
        let p = IntPoly::from_i64(&[1, -3, 1]);
        let ch = sturm_chain(&p);
        assert_eq!(count_roots_in(&ch, &rat(0, 1), &rat(3, 1)), 2);
        assert_eq!(count_roots_in(&ch, &rat(1, 1), &rat(3, 1)), 1);
        assert_eq!(count_roots_in(&ch, &rat(5, 2), &rat(3, 1)), 1);
        assert_eq!(count_roots_in(&ch, &rat(1, 1), &rat(2, 1)), 0);
    }

    #[test]
    fn counts_roots_of_quartic() {
        // (x^2-2)(x^2-3): four real roots
        let p = IntPoly::from_i64(&[6, 0, -5, 0, 1]);
        let ch = sturm_chain(&p);
        let bound = cauchy_root_bound(&p);
        assert_eq!(count_roots_in(&ch, &(-bound.clone()), &bound), 4);
        assert_eq!(count_roots_in(&ch, &rat(0, 1), &bound), 2);
        assert_eq!(count_roots_in(&ch, &rat(3, 2), &rat(8, 5)), 0);
    }

    #[test]
    fn no_real_roots() {
        let p = IntPoly::from_i64(&[1, 0, 1]);
        let ch = sturm_chain(&p);
        assert_eq!(count_roots_in(&ch, &rat(-10, 1), &rat(10, 1)), 0);
    }
}
