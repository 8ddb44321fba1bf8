//! Exact scalars for the quantum-sphere calculus: rational functions in
//! s = q^(1/2) with Gaussian-rational coefficients, kept in canonical form so
//! that equality of values is equality of representations.
//!
//! The deformation parameter enters only through q = s^2; the half power is
//! carried internally because weight actions produce q^(N/2) and the q-number
//! [x] is needed at half-integer x. Callers construct powers of q through
//! [`QScalar::q_pow`] and never see s directly unless they ask for it.

mod gauss;
mod poly;

pub use gauss::GaussRat;
pub use poly::SPoly;

use num_complex::Complex64;
use num_rational::BigRational;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q0 = {0}")]
    PoleAtQ0(f64),
    #[error("evaluation produced a non-finite value")]
    NonFinite,
    #[error("q0 must lie in (0, 1], got {0}")]
    QOutOfRange(f64),
}

/// Canonical rational function num/den in s = q^(1/2):
/// gcd(num, den) = 1 and den is monic, so equal values have equal
/// representations and `==` decides equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: SPoly,
    den: SPoly,
}

/// A complex double obtained by evaluating a [`QScalar`] at a numeric q0.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct NumericValue {
    pub re: f64,
    pub im: f64,
}

impl NumericValue {
    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl QScalar {
    fn canonical(num: SPoly, den: SPoly) -> Self {
        assert!(!den.is_zero(), "QScalar with zero denominator");
        if num.is_zero() {
            return QScalar { num: SPoly::zero(), den: SPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().inv();
        QScalar { num: num.scale(&lead), den: den.scale(&lead).make_monic() }
    }

    pub fn zero() -> Self {
        QScalar { num: SPoly::zero(), den: SPoly::one() }
    }

    pub fn one() -> Self {
        QScalar { num: SPoly::one(), den: SPoly::one() }
    }

    pub fn i() -> Self {
        QScalar { num: SPoly::constant(GaussRat::i()), den: SPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        QScalar { num: SPoly::constant(GaussRat::from_int(n)), den: SPoly::one() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        QScalar::from_gauss(GaussRat::from_ratio(num, den))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        if c.is_zero() {
            return QScalar::zero();
        }
        QScalar { num: SPoly::constant(c), den: SPoly::one() }
    }

    pub fn from_parts(num: SPoly, den: SPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QScalar::canonical(num, den))
    }

    /// s^k for k of either sign (s = q^(1/2)).
    pub fn s_pow(k: i64) -> Self {
        if k >= 0 {
            QScalar { num: SPoly::monomial(GaussRat::one(), k as usize), den: SPoly::one() }
        } else {
            QScalar {
                num: SPoly::one(),
                den: SPoly::monomial(GaussRat::one(), (-k) as usize),
            }
        }
    }

    /// q^k; equal to s^(2k).
    pub fn q_pow(k: i64) -> Self {
        QScalar::s_pow(2 * k)
    }

    /// q^(half/2), i.e. an arbitrary half-integer power of q.
    pub fn q_half_pow(half: i64) -> Self {
        QScalar::s_pow(half)
    }

    /// The quantum number [x] = (q^x - q^(-x)) / (q - q^(-1)) for the
    /// half-integer x = two_x/2. Odd two_x genuinely needs s = q^(1/2).
    pub fn qnum(two_x: i64) -> Self {
        let x = QScalar::s_pow(two_x) - QScalar::s_pow(-two_x);
        let d = QScalar::s_pow(2) - QScalar::s_pow(-2);
        x.checked_div(&d).expect("q - q^-1 is not the zero function")
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &QScalar::one()
    }

    pub fn numerator(&self) -> &SPoly {
        &self.num
    }

    pub fn denominator(&self) -> &SPoly {
        &self.den
    }

    pub fn inv(&self) -> Result<QScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QScalar::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QScalar) -> Result<QScalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(QScalar::canonical(self.num.mul(&rhs.den), self.den.mul(&rhs.num)))
    }

    /// Complex conjugation for real s in (0, 1]: conjugate the coefficients.
    pub fn conj(&self) -> QScalar {
        QScalar::canonical(self.num.conj(), self.den.conj())
    }

    /// True when all coefficients are real.
    pub fn is_real(&self) -> bool {
        self == &self.conj()
    }

    pub fn pow(&self, k: u32) -> QScalar {
        let mut acc = QScalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at q = q0 in (0, 1] through s0 = sqrt(q0).
    pub fn eval(&self, q0: f64) -> Result<NumericValue, ScalarError> {
        if !(q0 > 0.0 && q0 <= 1.0) {
            return Err(ScalarError::QOutOfRange(q0));
        }
        let s0 = Complex64::new(q0.sqrt(), 0.0);
        let d = self.den.eval(s0);
        // Canonical form already cancelled removable singularities, so a tiny
        // denominator is a genuine pole.
        let scale: f64 = self
            .den
            .coeffs
            .iter()
            .map(|c| {
                let (re, im) = c.to_f64_pair();
                re.abs() + im.abs()
            })
            .sum::<f64>()
            .max(1.0);
        if d.norm() < 1e-250 * scale {
            return Err(ScalarError::PoleAtQ0(q0));
        }
        let v = self.num.eval(s0) / d;
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(ScalarError::NonFinite);
        }
        Ok(NumericValue { re: v.re, im: v.im })
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        QScalar::canonical(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        QScalar::canonical(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Div for &QScalar {
    type Output = QScalar;
    fn div(self, rhs: &QScalar) -> QScalar {
        self.checked_div(rhs).expect("division by zero QScalar")
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                $trait::$method(&self, &rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

// -------------------------------------------------------------------------
// Display: integer-coefficient Laurent expression in q^(1/2).
// -------------------------------------------------------------------------

fn coeff_lcm_den(p: &SPoly) -> BigRational {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut l = BigInt::from(1);
    for c in &p.coeffs {
        l = l.lcm(c.re.denom());
        l = l.lcm(c.im.denom());
    }
    BigRational::from_integer(l)
}

fn fmt_terms(p: &SPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = c.to_string();
        let (sign, body) = match cs.strip_prefix('-') {
            Some(rest) if !cs.starts_with("(-") => ("-", rest.to_string()),
            _ => ("+", cs),
        };
        if first {
            if sign == "-" {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, "{}", sign)?;
        }
        let power = if k == 0 {
            String::new()
        } else if k % 2 == 0 {
            if k == 2 { "q".to_string() } else { format!("q^{}", k / 2) }
        } else {
            format!("q^({}/2)", k)
        };
        if power.is_empty() {
            write!(f, "{}", body)?;
        } else if body == "1" {
            write!(f, "{}", power)?;
        } else {
            write!(f, "{}*{}", body, power)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Clear coefficient denominators so both polynomials print with
        // Gaussian-integer coefficients; this rescales num and den together.
        let scale = {
            let ln = coeff_lcm_den(&self.num);
            let ld = coeff_lcm_den(&self.den);
            GaussRat::new(if ln > ld { ln } else { ld }, BigRational::from_integer(0.into()))
        };
        let num = self.num.scale(&scale);
        let den = self.den.scale(&scale);
        let den_is_one = den == SPoly::one();
        // a polynomial prints bare only when it is a single term that needs
        // no '*': a constant or a pure power of q
        let simple = |p: &SPoly| {
            let nonzero: Vec<_> = p
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            match nonzero.as_slice() {
                [] => true,
                [(k, c)] => *k == 0 || **c == GaussRat::one(),
                _ => false,
            }
        };
        if den_is_one {
            fmt_terms(&num, f)
        } else {
            if simple(&num) {
                fmt_terms(&num, f)?;
            } else {
                write!(f, "(")?;
                fmt_terms(&num, f)?;
                write!(f, ")")?;
            }
            write!(f, "/")?;
            if simple(&den) {
                fmt_terms(&den, f)
            } else {
                write!(f, "(")?;
                fmt_terms(&den, f)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
