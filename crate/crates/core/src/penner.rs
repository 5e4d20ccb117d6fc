//! Exact transition matrices of twist words on the nonnegative weight space
//! indexed by A ∪ B.
//!
//! Convention: a twist T_c^{±q} (positive on A, negative on B) updates only
//! the c-coordinate of a weight vector, adding q·Σ_x i(c,x)·w_x over the
//! opposite-family curves x. On the one-intersection torus pair this gives
//! the classical matrices [[1, m], [0, 1]] and [[1, 0], [m, 1]] in basis
//! (a, b).
//!
//! A word T_{c₁}^{k₁} ⋯ T_{c_n}^{k_n} acts on curves rightmost-first; its
//! transition matrix is the product E_{c₁}·E_{c₂}⋯E_{c_n}, so that
//! transition_matrix(f) · weights(γ) = weights(f(γ)). Torus check:
//! a^m b^{−m} ↦ [[1+m², m], [m, 1]].

use num_bigint::BigInt;
use num_traits::One;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::chains::{ChainConfig, CurveRef, TwistWord};
use crate::exactalg::{perron_degree, IntMatrix, IntPoly, PerronError};
use crate::ribbon::CurveClass;

#[derive(Debug, Error)]
pub enum PennerError {
    #[error("sign convention violated: {curve} twisted with exponent {exponent} (A-curves take positive twists, B-curves negative)")]
    Sign { curve: String, exponent: i64 },
    #[error("curve {0} not in the configuration")]
    UnknownCurve(String),
    #[error("empty sweep range")]
    EmptyRange,
}

/// Transition matrix of a twist word in the fixed basis a_1..a_r, b_1..b_r.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub matrix: IntMatrix,
    pub basis: Vec<CurveRef>,
    pub word: TwistWord,
    /// set when the word was empty (the matrix is the identity)
    pub empty_word: bool,
}

/// One row of a degree sweep.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub m: i64,
    pub primitive: bool,
    /// algebraic degree of λ; None when not primitive
    pub degree: Option<usize>,
    /// λ to 30 significant digits; None when not primitive
    pub lambda: Option<String>,
    /// SHA-256 of the characteristic polynomial's coefficient list
    pub charpoly_hash: String,
    /// observational: whether the minimal polynomial of λ is reciprocal
    pub reciprocal: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    /// least m in range from which the degree equals the target 2r through
    /// the end of the range; None when never reached
    pub stabilization_onset: Option<i64>,
    pub target_degree: usize,
}

fn basis_of(cfg: &ChainConfig) -> Vec<CurveRef> {
    let mut v: Vec<CurveRef> = (0..cfg.r).map(CurveRef::a).collect();
    v.extend((0..cfg.r).map(CurveRef::b));
    v
}

fn basis_index(cfg: &ChainConfig, c: CurveRef) -> Result<usize, PennerError> {
    if c.index >= cfg.r {
        return Err(PennerError::UnknownCurve(c.to_string()));
    }
    Ok(match c.class {
        CurveClass::A => c.index,
        CurveClass::B => cfg.r + c.index,
    })
}

/// Elementary matrix of a single twist T_c^exponent under the Penner sign
/// convention. Exponent 0 yields the identity.
pub fn elementary_matrix(
    c: CurveRef,
    exponent: i64,
    cfg: &ChainConfig,
) -> Result<IntMatrix, PennerError> {
    let sign_ok = match c.class {
        CurveClass::A => exponent >= 0,
        CurveClass::B => exponent <= 0,
    };
    if !sign_ok {
        return Err(PennerError::Sign {
            curve: c.to_string(),
            exponent,
        });
    }
    let row = basis_index(cfg, c)?;
    let basis = basis_of(cfg);
    let mut m = IntMatrix::identity(2 * cfg.r);
    let q = BigInt::from(exponent.unsigned_abs());
    for (col, &x) in basis.iter().enumerate() {
        if x.class == c.class {
            continue;
        }
        let inc = &q * cfg.intersection(c, x);
        let v = m.get(row, col) + inc;
        m.set(row, col, v);
    }
    debug_assert!(is_unipotent(&m), "elementary twist matrix must be unipotent");
    Ok(m)
}

fn is_unipotent(m: &IntMatrix) -> bool {
    // char poly must be (x-1)^dim
    let dim = m.rows();
    let mut target = IntPoly::one();
    let xm1 = IntPoly::from_i64(&[-1, 1]);
    for _ in 0..dim {
        target = target.mul(&xm1);
    }
    m.char_poly() == target
}

/// Ordered product of elementary matrices for the word, with det = 1
/// asserted.
pub fn transition_matrix(w: &TwistWord, cfg: &ChainConfig) -> Result<TransitionMatrix, PennerError> {
    let mut m = IntMatrix::identity(2 * cfg.r);
    for j in 1..=w.n() as i64 {
        let (c, _) = w.letter(j);
        let e = elementary_matrix(c, w.exponent(j), cfg)?;
        m = m.mul(&e);
    }
    assert!(m.det().is_one(), "transition matrix must have determinant 1");
    Ok(TransitionMatrix {
        matrix: m,
        basis: basis_of(cfg),
        word: w.clone(),
        empty_word: w.n() == 0,
    })
}

pub fn charpoly_digest(p: &IntPoly) -> String {
    let mut h = Sha256::new();
    h.update(p.to_coeff_strings().join(","));
    format!("{:x}", h.finalize())
}

/// Degree/stretch data for one word: primitivity check, exact algebraic
/// degree of the dominant eigenvalue, λ to 30 significant digits.
pub fn stretch_report(w: &TwistWord, cfg: &ChainConfig) -> Result<SweepRow, PennerError> {
    let t = transition_matrix(w, cfg)?;
    let cp = t.matrix.char_poly();
    let hash = charpoly_digest(&cp);
    match perron_degree(&t.matrix) {
        Ok(cert) => Ok(SweepRow {
            m: w.m,
            primitive: true,
            degree: Some(cert.degree),
            lambda: Some(cert.lambda_decimal(30)),
            charpoly_hash: hash,
            reciprocal: Some(cert.perron_factor_reciprocal()),
        }),
        Err(PerronError::NotPrimitive) => Ok(SweepRow {
            m: w.m,
            primitive: false,
            degree: None,
            lambda: None,
            charpoly_hash: hash,
            reciprocal: None,
        }),
        Err(e) => panic!("transition matrix violated Perron preconditions: {}", e),
    }
}

/// Sweeps the exponent magnitude over an inclusive range, reporting the
/// empirical onset of degree stabilization at 2r.
pub fn sweep(cfg: &ChainConfig, m_lo: i64, m_hi: i64) -> Result<SweepResult, PennerError> {
    if m_lo > m_hi || m_lo < 1 {
        return Err(PennerError::EmptyRange);
    }
    let target_degree = 2 * cfg.r;
    let mut rows = Vec::new();
    for m in m_lo..=m_hi {
        let w = crate::chains::family_word(cfg, m).expect("m >= 1");
        rows.push(stretch_report(&w, cfg)?);
    }
    let mut onset = None;
    for row in rows.iter().rev() {
        if row.degree == Some(target_degree) {
            onset = Some(row.m);
        } else {
            break;
        }
    }
    Ok(SweepResult {
        rows,
        stabilization_onset: onset,
        target_degree,
    })
}

impl SweepResult {
    /// CSV with the fixed column set `m, primitive, degree,
    /// lambda_30digits, charpoly_hash`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("m,primitive,degree,lambda_30digits,charpoly_hash\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{},{}\n",
                r.m,
                r.primitive,
                r.degree.map(|d| d.to_string()).unwrap_or_default(),
                r.lambda.clone().unwrap_or_default(),
                r.charpoly_hash
            ));
        }
        s
    }
}
