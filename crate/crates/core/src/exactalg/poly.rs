use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial; panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPoly::new(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        IntPoly::new(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as u64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// gcd of coefficients, sign matching the leading coefficient
    /// (so primitive_part has positive leading coefficient after dividing
    /// when content carries the sign).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading_coeff().is_negative() {
            -g
        } else {
            g
        }
    }

    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact division over the integers; None if the division has a
    /// non-integer quotient coefficient or a nonzero remainder.
    pub fn try_div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let dl = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        let qn = self.degree() - d.degree() + 1;
        let mut q = vec![BigInt::zero(); qn];
        for k in (0..qn).rev() {
            let top = rem[k + d.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (quot, r) = top.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            q[k] = quot.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &quot * dc;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    /// Pseudo-remainder: prem(f, g) with f scaled by lc(g)^(deg f − deg g + 1).
    pub fn pseudo_rem(&self, g: &IntPoly) -> IntPoly {
        assert!(!g.is_zero());
        if self.is_zero() || self.degree() < g.degree() {
            return self.clone();
        }
        let gl = g.leading_coeff();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= g.degree() {
            let shift = r.degree() - g.degree();
            let rl = r.leading_coeff();
            r = r.scale(&gl).sub(&g.scale(&rl).shift(shift));
        }
        r
    }

    /// Primitive gcd over the integers (primitive PRS), positive leading
    /// coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b.abs_lc();
        }
        if b.is_zero() {
            return a.abs_lc();
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        let g = a.abs_lc();
        let ca = self.content().abs().gcd(&other.content().abs());
        g.scale(&ca)
    }

    fn abs_lc(&self) -> IntPoly {
        if self.leading_coeff().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Yun's squarefree decomposition of the primitive part: returns
    /// (squarefree factor, multiplicity) pairs with multiplicities ≥ 1,
    /// skipping trivial (constant) parts.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, u32)> {
        assert!(!self.is_zero());
        let f = self.primitive_part().abs_lc();
        if f.degree() == 0 {
            return vec![];
        }
        let fp = f.derivative();
        let d = f.gcd(&fp);
        if d.degree() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.try_div_exact(&d).expect("gcd divides");
        let mut c = fp.try_div_exact(&d).expect("gcd divides derivative");
        let mut i = 1u32;
        loop {
            let w = c.sub(&b.derivative());
            if w.is_zero() {
                if b.degree() > 0 {
                    out.push((b, i));
                }
                break;
            }
            let a = b.gcd(&w);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.try_div_exact(&a).expect("squarefree step divides");
            c = w.try_div_exact(&a).expect("squarefree step divides");
            i += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }

    /// Largest squarefree divisor (radical) of the primitive part.
    pub fn squarefree_part(&self) -> IntPoly {
        let mut out = IntPoly::one();
        for (f, _) in self.squarefree_decomposition() {
            out = out.mul(&f);
        }
        out
    }

    /// Coefficients as decimal strings (ascending degree), for JSON reports.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}
