//! Action engine for U_q(su(2)) on the abstract Peter-Weyl weight basis
//! f_m(J, N).
//!
//! Only the left action matters here: the right-action degeneracy index m
//! commutes with everything we apply and the spectrum does not depend on it,
//! so a basis vector is labelled by the weight (J, N) alone. The generator
//! conventions are
//!
//!   K f(J,N) = q^(N/2) f(J,N)
//!   E f(J,N) = phi(J,N) f(J,N+2)      phi(J,N) = [J-N/2][J+N/2+1]
//!   F f(J,N) = f(J,N-2)
//!
//! with out-of-range targets mapped to zero. The gauge c+ = phi, c- = 1 keeps
//! every matrix element rational in q; eigenvalues of all reduced problems
//! are gauge invariant but eigenvector component ratios are not, so any
//! eigenvector comparison elsewhere in the crate is stated against this
//! gauge. N runs over -2J, -2J+2, ..., 2J: the weight string has step 2 and
//! N carries the parity of 2J, which is what the monomial realisation
//! c^(J-N/2) a*^(J+N/2) forces.

use crate::qscalar::QScalar;
use std::collections::BTreeMap;
use std::fmt;

/// Weight label (J, N), stored as 2J to keep half-integers exact.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    pub two_j: i64,
    pub n: i64,
}

impl Weight {
    /// Checked constructor: J >= 0, |N| <= 2J, N = 2J (mod 2).
    pub fn new(two_j: i64, n: i64) -> Option<Weight> {
        if two_j >= 0 && n.abs() <= two_j && (n - two_j) % 2 == 0 {
            Some(Weight { two_j, n })
        } else {
            None
        }
    }

    pub fn is_valid(two_j: i64, n: i64) -> bool {
        Weight::new(two_j, n).is_some()
    }

    /// All weights of the spin-J string, lowest N first.
    pub fn string(two_j: i64) -> Vec<Weight> {
        (0..=two_j)
            .map(|k| Weight { two_j, n: -two_j + 2 * k })
            .collect()
    }

    pub fn j_string(&self) -> String {
        if self.two_j % 2 == 0 {
            format!("{}", self.two_j / 2)
        } else {
            format!("{}/2", self.two_j)
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(J={}, N={})", self.j_string(), self.n)
    }
}

/// EF acts on f(J,N) as eps(J,N) = [J+1/2]^2 - [(1-N)/2]^2 and FE as
/// phi(J,N) = [J+1/2]^2 - [(N+1)/2]^2. Returned in the factorised forms
/// eps = [J+N/2][J-N/2+1], phi = [J-N/2][J+N/2+1]; the quadratic and the
/// factorised expressions agree exactly (difference-of-squares identity).
pub fn casimir_scalars(w: Weight) -> (QScalar, QScalar) {
    let eps = &QScalar::qnum(w.two_j + w.n) * &QScalar::qnum(w.two_j - w.n + 2);
    let phi = &QScalar::qnum(w.two_j - w.n) * &QScalar::qnum(w.two_j + w.n + 2);
    (eps, phi)
}

/// phi(J,N) = [J-N/2][J+N/2+1]: the E matrix element in our gauge.
pub fn phi(w: Weight) -> QScalar {
    casimir_scalars(w).1
}

/// eps(J,N) = [J+N/2][J-N/2+1].
pub fn eps(w: Weight) -> QScalar {
    casimir_scalars(w).0
}

/// Diagonal value of X_z on f(J,N): (i/2)(q^-N - 1)/(1 - q).
pub fn x_z_eigenvalue(n: i64) -> QScalar {
    let num = &QScalar::q_pow(-n) - &QScalar::one();
    let den = &QScalar::one() - &QScalar::q_pow(1);
    let half_i = &QScalar::i() * &QScalar::from_ratio(1, 2);
    &half_i * &(&num / &den)
}

// -------------------------------------------------------------------------
// Scalars with a 1/sqrt(2) part.
//
// The tangent-space ladder operators carry a 1/sqrt(2) normalisation that is
// not a rational function of q. Products of two ladder steps fold back into
// QScalar, so one extra component suffices: a + b/sqrt(2).
// -------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LScalar {
    /// Rational part.
    pub a: QScalar,
    /// Coefficient of 1/sqrt(2).
    pub b: QScalar,
}

impl LScalar {
    pub fn zero() -> Self {
        LScalar { a: QScalar::zero(), b: QScalar::zero() }
    }

    pub fn rational(a: QScalar) -> Self {
        LScalar { a, b: QScalar::zero() }
    }

    /// b / sqrt(2).
    pub fn over_sqrt2(b: QScalar) -> Self {
        LScalar { a: QScalar::zero(), b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &LScalar) -> LScalar {
        LScalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }

    pub fn mul(&self, rhs: &LScalar) -> LScalar {
        // (a1 + b1 r)(a2 + b2 r) with r^2 = 1/2
        let half = QScalar::from_ratio(1, 2);
        LScalar {
            a: &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &half),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }

    pub fn scale(&self, c: &QScalar) -> LScalar {
        LScalar { a: &self.a * c, b: &self.b * c }
    }

    /// Exact ratio self/rhs when the two live in the same pure component.
    pub fn ratio_to(&self, rhs: &LScalar) -> Option<QScalar> {
        if rhs.is_zero() {
            return None;
        }
        if rhs.a.is_zero() && self.a.is_zero() {
            return self.b.checked_div(&rhs.b).ok();
        }
        if rhs.b.is_zero() && self.b.is_zero() {
            return self.a.checked_div(&rhs.a).ok();
        }
        None
    }
}

/// Finite linear combination of weight vectors at fixed J.
#[derive(Clone, PartialEq, Debug)]
pub struct ModuleVector {
    pub two_j: i64,
    coeffs: BTreeMap<i64, LScalar>,
}

impl ModuleVector {
    pub fn zero(two_j: i64) -> Self {
        ModuleVector { two_j, coeffs: BTreeMap::new() }
    }

    pub fn basis(w: Weight) -> Self {
        let mut v = ModuleVector::zero(w.two_j);
        v.set(w.n, LScalar::rational(QScalar::one()));
        v
    }

    pub fn set(&mut self, n: i64, c: LScalar) {
        if c.is_zero() {
            self.coeffs.remove(&n);
        } else {
            self.coeffs.insert(n, c);
        }
    }

    pub fn coeff(&self, n: i64) -> LScalar {
        self.coeffs.get(&n).cloned().unwrap_or_else(LScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&i64, &LScalar)> {
        self.coeffs.iter()
    }

    pub fn add(&self, rhs: &ModuleVector) -> ModuleVector {
        assert_eq!(self.two_j, rhs.two_j, "mixed J in module arithmetic");
        let mut out = self.clone();
        for (&n, c) in &rhs.coeffs {
            out.set(n, out.coeff(n).add(c));
        }
        out
    }

    pub fn scale_l(&self, c: &LScalar) -> ModuleVector {
        let mut out = ModuleVector::zero(self.two_j);
        for (&n, v) in &self.coeffs {
            out.set(n, v.mul(c));
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> ModuleVector {
        self.scale_l(&LScalar::rational(c.clone()))
    }
}

/// The four U_q(su(2)) generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

/// One word c * g1 g2 ... gk; the empty word is the unit.
#[derive(Clone, Debug)]
pub struct GeneratorWord {
    pub coeff: QScalar,
    pub letters: Vec<Generator>,
}

impl GeneratorWord {
    pub fn unit(coeff: QScalar) -> Self {
        GeneratorWord { coeff, letters: Vec::new() }
    }

    pub fn new(coeff: QScalar, letters: Vec<Generator>) -> Self {
        GeneratorWord { coeff, letters }
    }
}

/// Apply one generator. Weights outside |N| <= 2J give the zero vector, which
/// is exactly annihilation at the ends of the weight string.
pub fn act_generator(g: Generator, v: &ModuleVector) -> ModuleVector {
    let two_j = v.two_j;
    let mut out = ModuleVector::zero(two_j);
    for (&n, c) in v.support() {
        match g {
            Generator::K => {
                out.set(n, out.coeff(n).add(&c.scale(&QScalar::s_pow(n))));
            }
            Generator::KInv => {
                out.set(n, out.coeff(n).add(&c.scale(&QScalar::s_pow(-n))));
            }
            Generator::E => {
                if n + 2 <= two_j {
                    let t = c.scale(&phi(Weight { two_j, n }));
                    out.set(n + 2, out.coeff(n + 2).add(&t));
                }
            }
            Generator::F => {
                if n - 2 >= -two_j {
                    out.set(n - 2, out.coeff(n - 2).add(c));
                }
            }
        }
    }
    out
}

/// Apply a sum of words; inside a word the rightmost letter acts first, so
/// the word [g1, g2] is the operator product g1 g2.
pub fn act_word(words: &[GeneratorWord], v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero(v.two_j);
    for w in words {
        let mut cur = v.clone();
        for g in w.letters.iter().rev() {
            cur = act_generator(*g, &cur);
        }
        out = out.add(&cur.scale(&w.coeff));
    }
    out
}

/// The three quantum tangent-space directions dual to the 1-forms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum XDir {
    Minus,
    Plus,
    Z,
}

/// Left action of the tangent-space basis:
///   X_z = (i/2)(K^-2 - 1)/(1 - q)         (diagonal)
///   X_- = -(i/sqrt2) q^(-1/2) E K^-1      (N -> N+2)
///   X_+ = -(i/sqrt2) q^(1/2)  F K^-1      (N -> N-2)
pub fn x_action(dir: XDir, v: &ModuleVector) -> ModuleVector {
    let two_j = v.two_j;
    let mut out = ModuleVector::zero(two_j);
    let minus_i = -QScalar::i();
    for (&n, c) in v.support() {
        match dir {
            XDir::Z => {
                let t = c.scale(&x_z_eigenvalue(n));
                out.set(n, out.coeff(n).add(&t));
            }
            XDir::Minus => {
                if n + 2 <= two_j {
                    let coeff = &(&minus_i * &QScalar::s_pow(-1 - n)) * &phi(Weight { two_j, n });
                    let t = c.mul(&LScalar::over_sqrt2(coeff));
                    out.set(n + 2, out.coeff(n + 2).add(&t));
                }
            }
            XDir::Plus => {
                if n - 2 >= -two_j {
                    let coeff = &minus_i * &QScalar::s_pow(1 - n);
                    let t = c.mul(&LScalar::over_sqrt2(coeff));
                    out.set(n - 2, out.coeff(n - 2).add(&t));
                }
            }
        }
    }
    out
}

/// Scalar of the diagonal composite X_+ X_- on f(J,N):
/// -(1/2) q^(-1-N) phi(J,N).
pub fn x_plus_x_minus(w: Weight) -> QScalar {
    let pref = &QScalar::from_ratio(-1, 2) * &QScalar::s_pow(-2 - 2 * w.n);
    &pref * &phi(w)
}

/// Scalar of the diagonal composite X_- X_+ on f(J,N):
/// -(1/2) q^(1-N) eps(J,N).
pub fn x_minus_x_plus(w: Weight) -> QScalar {
    let pref = &QScalar::from_ratio(-1, 2) * &QScalar::s_pow(2 - 2 * w.n);
    &pref * &eps(w)
}
