//! Dense univariate polynomials in s = q^(1/2) over the Gaussian rationals.

use super::gauss::GaussRat;
use num_complex::Complex64;

/// Polynomial sum c_k s^k, coefficients ascending, no trailing zeros.
/// The zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SPoly {
    pub coeffs: Vec<GaussRat>,
}

impl SPoly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SPoly { coeffs }
    }

    pub fn zero() -> Self {
        SPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        SPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        SPoly::new(vec![c])
    }

    /// The monomial c * s^k.
    pub fn monomial(c: GaussRat, k: usize) -> Self {
        let mut v = vec![GaussRat::zero(); k + 1];
        v[k] = c;
        SPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of callers
    /// that check is_zero first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> GaussRat {
        self.coeffs.last().cloned().unwrap_or_else(GaussRat::zero)
    }

    /// Order of vanishing at s = 0 (index of lowest nonzero coefficient).
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn add(&self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(GaussRat::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(GaussRat::zero);
            v.push(&a + &b);
        }
        SPoly::new(v)
    }

    pub fn sub(&self, rhs: &SPoly) -> SPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> SPoly {
        SPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &SPoly) -> SPoly {
        if self.is_zero() || rhs.is_zero() {
            return SPoly::zero();
        }
        let mut v = vec![GaussRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        SPoly::new(v)
    }

    pub fn scale(&self, c: &GaussRat) -> SPoly {
        SPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: self = q*rhs + r with deg r < deg rhs.
    pub fn div_rem(&self, rhs: &SPoly) -> (SPoly, SPoly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let dr = rhs.degree();
        let lead_inv = rhs.leading().inv();
        if rem.is_zero() || rem.degree() < dr {
            return (SPoly::zero(), rem);
        }
        let mut quot = vec![GaussRat::zero(); rem.degree() - dr + 1];
        while !rem.is_zero() && rem.degree() >= dr {
            let k = rem.degree() - dr;
            let c = &rem.leading() * &lead_inv;
            quot[k] = c.clone();
            let sub = rhs.mul(&SPoly::monomial(c, k));
            rem = rem.sub(&sub);
        }
        (SPoly::new(quot), rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &SPoly) -> SPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        a.make_monic()
    }

    pub fn make_monic(&self) -> SPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv())
    }

    /// Complex-conjugate the coefficients (s itself is real).
    pub fn conj(&self) -> SPoly {
        SPoly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn eval(&self, s0: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            let (re, im) = c.to_f64_pair();
            acc = acc * s0 + Complex64::new(re, im);
        }
        acc
    }
}
