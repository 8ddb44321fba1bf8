//! The bilinear contraction g on left-invariant forms, the duality operator
//! S(w) = (1/lambda_k) g(w, tau), the quantum Cartan-Killing constraint
//! S(w_a) = xi d(w_a), the normalised Hodge star with star(tau) = 1, the
//! left-invariant inner product and the codifferential.
//!
//! In star-normalised mode the volume scale delta satisfies
//! delta^2 = lambda3 / (6 q^4 alpha beta gamma), which is never a perfect
//! square of a rational function, so the whole normalised layer works in the
//! quadratic extension QScalar[u] with u = delta and u^2 rational ([`Rad`]).
//! That keeps every identity in this module exact for any rational gamma.

use crate::excalc::{Calculus, FormElement, TensorElement, LAMBDA_DIMS};
use crate::qscalar::{NumericValue, QScalar, ScalarError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum HodgeError {
    #[error("contraction degree mismatch: first argument must not exceed second ({0} > {1})")]
    DegreeMismatch(usize, usize),
    #[error("gamma must be nonzero")]
    ZeroGamma,
    #[error("metric is degenerate: alpha*beta*gamma = 0")]
    Degenerate,
    #[error("operation requires the star-normalised Cartan-Killing configuration")]
    NonCartanKilling,
    #[error("scalar error: {0}")]
    Scalar(#[from] ScalarError),
}

/// The metric family g(w-, w+) = alpha, g(w+, w-) = beta, g(wz, wz) = gamma.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricParams {
    pub alpha: QScalar,
    pub beta: QScalar,
    pub gamma: QScalar,
}

impl MetricParams {
    pub fn new(alpha: QScalar, beta: QScalar, gamma: QScalar) -> Result<Self, HodgeError> {
        if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
            return Err(HodgeError::Degenerate);
        }
        Ok(MetricParams { alpha, beta, gamma })
    }

    pub fn is_real(&self) -> bool {
        self.alpha.is_real() && self.beta.is_real() && self.gamma.is_real()
    }

    /// g value on a pair of 1-form basis indices (minus, plus, z) = (0,1,2).
    pub fn pair(&self, a: usize, b: usize) -> QScalar {
        match (a, b) {
            (0, 1) => self.alpha.clone(),
            (1, 0) => self.beta.clone(),
            (2, 2) => self.gamma.clone(),
            _ => QScalar::zero(),
        }
    }
}

/// The unique member of the metric family solving S(w_a) = xi d(w_a):
/// alpha = beta = ((1+q)/(2q))^2 gamma.
///
/// The literature closed form elsewhere carries ((1+q)/(2q^2))^2; that value is
/// not a solution of the constraint with this calculus' S table and exterior
/// derivative, which the verification suite demonstrates by exhibiting the
/// common factor xi for this family and the absence of one otherwise.
pub fn ck_solve(gamma: &QScalar) -> Result<MetricParams, HodgeError> {
    if gamma.is_zero() {
        return Err(HodgeError::ZeroGamma);
    }
    let ratio = (&QScalar::one() + &QScalar::q_pow(1))
        / (&QScalar::from_int(2) * &QScalar::q_half_pow(2));
    let alpha = &ratio.pow(2) * gamma;
    MetricParams::new(alpha.clone(), alpha, gamma.clone())
}

/// Cartan-Killing family pinned by alpha instead of gamma.
pub fn ck_solve_by_alpha(alpha: &QScalar) -> Result<MetricParams, HodgeError> {
    if alpha.is_zero() {
        return Err(HodgeError::ZeroGamma);
    }
    let ratio = (&QScalar::from_int(2) * &QScalar::q_half_pow(2))
        / (&QScalar::one() + &QScalar::q_pow(1));
    let gamma = &ratio.pow(2) * alpha;
    MetricParams::new(alpha.clone(), alpha.clone(), gamma)
}

// -------------------------------------------------------------------------
// Contraction machinery
// -------------------------------------------------------------------------

/// Pair the factors of `a` in order against the leading factors of `b`:
/// g(a1 (x) ... (x) as, b1 (x) ... (x) bj) =
/// g(a1,b1) ... g(as,bs) b_{s+1} (x) ... (x) bj.
pub fn contract(
    params: &MetricParams,
    a: &TensorElement,
    b: &TensorElement,
) -> Result<TensorElement, HodgeError> {
    let s = a.degree;
    let j = b.degree;
    if s > j {
        return Err(HodgeError::DegreeMismatch(s, j));
    }
    let mut out = TensorElement::zero(j - s);
    let tail_dim = 3usize.pow((j - s) as u32);
    for (&wa, ca) in a.support() {
        let awords = crate::excalc::index_word(wa, s);
        for (&wb, cb) in b.support() {
            let head = wb / tail_dim;
            let tail = wb % tail_dim;
            let bwords = crate::excalc::index_word(head, s);
            let mut coeff = ca * cb;
            for k in 0..s {
                if coeff.is_zero() {
                    break;
                }
                coeff = &coeff * &params.pair(awords[k], bwords[k]);
            }
            if !coeff.is_zero() {
                out.set(tail, &out.coeff(tail) + &coeff);
            }
        }
    }
    Ok(out)
}

/// g on exterior forms: lift both arguments through the antisymmetrisers,
/// contract, and expand the remainder back over the antisymmetric basis.
/// For equal degrees the result is a degree-0 form (a scalar).
pub fn g_on_forms(
    calc: &Calculus,
    params: &MetricParams,
    a: &FormElement,
    b: &FormElement,
) -> Result<FormElement, HodgeError> {
    let ta = calc.lift_antisym(a);
    let tb = calc.lift_antisym(b);
    let t = contract(params, &ta, &tb)?;
    calc.expand_antisym(&t)
        .ok_or(HodgeError::DegreeMismatch(a.degree, b.degree))
}

/// g(theta, theta): must equal 6 q^4 alpha beta gamma; derived, not stored.
pub fn g_theta_theta(calc: &Calculus, params: &MetricParams) -> QScalar {
    let th = calc.theta_form();
    g_on_forms(calc, params, &th, &th)
        .expect("theta contracts against itself")
        .coeff(0)
}

/// det_theta g = g(theta, theta) / lambda3.
pub fn det_theta(calc: &Calculus, params: &MetricParams) -> QScalar {
    &g_theta_theta(calc, params) / &calc.lambda3()
}

/// The duality operator in raw mode, tau = delta * theta with delta an
/// explicit rational scale: S(w) = (1/lambda_k) g(w, tau).
pub fn s_operator(
    calc: &Calculus,
    params: &MetricParams,
    delta: &QScalar,
    f: &FormElement,
) -> Result<FormElement, HodgeError> {
    let tau = calc.theta_form().scale(delta);
    let g = g_on_forms(calc, params, f, &tau)?;
    Ok(g.scale(&QScalar::one().checked_div(&calc.lambda_scalar(f.degree))?))
}

// -------------------------------------------------------------------------
// Quadratic extension scalars a + b u, u^2 = r2
// -------------------------------------------------------------------------

/// Element a + b*u of the quadratic extension by u = delta; the radicand
/// u^2 lives in the owning [`Hodge`] context.
#[derive(Clone, PartialEq, Debug)]
pub struct Rad {
    pub a: QScalar,
    pub b: QScalar,
}

impl Rad {
    pub fn zero() -> Self {
        Rad { a: QScalar::zero(), b: QScalar::zero() }
    }

    pub fn one() -> Self {
        Rad::rational(QScalar::one())
    }

    pub fn rational(a: QScalar) -> Self {
        Rad { a, b: QScalar::zero() }
    }

    /// b * u.
    pub fn radical(b: QScalar) -> Self {
        Rad { a: QScalar::zero(), b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &Rad) -> Rad {
        Rad { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }

    pub fn sub(&self, rhs: &Rad) -> Rad {
        Rad { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }

    pub fn neg(&self) -> Rad {
        Rad { a: -self.a.clone(), b: -self.b.clone() }
    }

    pub fn scale(&self, c: &QScalar) -> Rad {
        Rad { a: &self.a * c, b: &self.b * c }
    }

    pub fn mul(&self, rhs: &Rad, r2: &QScalar) -> Rad {
        Rad {
            a: &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * r2),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }

    pub fn inv(&self, r2: &QScalar) -> Result<Rad, ScalarError> {
        // (a + bu)^-1 = (a - bu)/(a^2 - b^2 r2)
        let norm = &(&self.a * &self.a) - &(&(&self.b * &self.b) * r2);
        let ninv = norm.inv()?;
        Ok(Rad { a: &self.a * &ninv, b: -(&self.b * &ninv) })
    }

    pub fn conj(&self) -> Rad {
        // u = delta is real positive, so conjugation acts on coefficients.
        Rad { a: self.a.conj(), b: self.b.conj() }
    }

    /// Evaluate with the positive square root of r2(q0).
    pub fn eval(&self, q0: f64, r2: &QScalar) -> Result<NumericValue, ScalarError> {
        let av = self.a.eval(q0)?.to_complex();
        let bv = self.b.eval(q0)?.to_complex();
        let rv = r2.eval(q0)?;
        if rv.re < 0.0 || rv.im.abs() > 1e-12 * (1.0 + rv.re.abs()) {
            return Err(ScalarError::NonFinite);
        }
        let u = rv.re.sqrt();
        let v = av + bv * u;
        Ok(NumericValue { re: v.re, im: v.im })
    }

    pub fn to_string_with(&self, r2: &QScalar) -> String {
        if self.b.is_zero() {
            return self.a.to_string();
        }
        let rad = format!("({})*sqrt({})", self.b, r2);
        if self.a.is_zero() {
            rad
        } else {
            format!("{} + {}", self.a, rad)
        }
    }
}

/// Form with coefficients in the quadratic extension: base + u * rad, both
/// components of the same exterior degree.
#[derive(Clone, PartialEq, Debug)]
pub struct RadForm {
    pub base: FormElement,
    pub rad: FormElement,
}

impl RadForm {
    pub fn zero(degree: usize) -> Self {
        RadForm { base: FormElement::zero(degree), rad: FormElement::zero(degree) }
    }

    pub fn rational(f: FormElement) -> Self {
        let d = f.degree;
        RadForm { base: f, rad: FormElement::zero(d) }
    }

    pub fn radical(f: FormElement) -> Self {
        let d = f.degree;
        RadForm { base: FormElement::zero(d), rad: f }
    }

    pub fn degree(&self) -> usize {
        self.base.degree
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.rad.is_zero()
    }

    pub fn add(&self, rhs: &RadForm) -> RadForm {
        RadForm { base: self.base.add(&rhs.base), rad: self.rad.add(&rhs.rad) }
    }

    pub fn sub(&self, rhs: &RadForm) -> RadForm {
        RadForm { base: self.base.sub(&rhs.base), rad: self.rad.sub(&rhs.rad) }
    }

    pub fn scale(&self, c: &Rad, r2: &QScalar) -> RadForm {
        // (A + uB)(a + ub) = (aA + r2 b B) + u(bA + aB)
        let base = self.base.scale(&c.a).add(&self.rad.scale(&(&c.b * r2)));
        let rad = self.base.scale(&c.b).add(&self.rad.scale(&c.a));
        RadForm { base, rad }
    }

    pub fn coeff(&self, idx: usize) -> Rad {
        Rad { a: self.base.coeff(idx), b: self.rad.coeff(idx) }
    }
}

// -------------------------------------------------------------------------
// The normalised Hodge structure
// -------------------------------------------------------------------------

/// Star-normalised Hodge duality for a Cartan-Killing metric: tau = u*theta
/// with u^2 = lambda3/(6 q^4 alpha beta gamma), so star(tau) = 1 exactly and
/// star^2 = A on 1- and 2-forms.
pub struct Hodge<'a> {
    pub calc: &'a Calculus,
    pub params: MetricParams,
    /// u^2, the square of the positive volume scale delta.
    r2: QScalar,
    /// S with delta = 1 on each degree: columns of the duality map.
    table: [Vec<FormElement>; 4],
}

impl<'a> Hodge<'a> {
    /// Build from the Cartan-Killing family member with the given gamma.
    pub fn new(calc: &'a Calculus, gamma: &QScalar) -> Result<Self, HodgeError> {
        let params = ck_solve(gamma)?;
        Hodge::with_params(calc, params)
    }

    /// Build with alpha = 1 style normalisations: pins alpha instead.
    pub fn with_alpha(calc: &'a Calculus, alpha: &QScalar) -> Result<Self, HodgeError> {
        let params = ck_solve_by_alpha(alpha)?;
        Hodge::with_params(calc, params)
    }

    /// Accepts any Cartan-Killing member; rejects non-members.
    pub fn with_params(calc: &'a Calculus, params: MetricParams) -> Result<Self, HodgeError> {
        let expect = ck_solve(&params.gamma)?;
        if expect != params {
            return Err(HodgeError::NonCartanKilling);
        }
        let six_q4 = &QScalar::from_int(6) * &QScalar::q_pow(4);
        let abg = &(&params.alpha * &params.beta) * &params.gamma;
        let r2 = calc.lambda3().checked_div(&(&six_q4 * &abg))?;
        let table = build_s_table(calc, &params)?;
        Ok(Hodge { calc, params, r2, table })
    }

    /// u^2 = delta^2, the exact radicand of the volume scale.
    pub fn r2(&self) -> &QScalar {
        &self.r2
    }

    /// delta as an extension element (the positive root under evaluation).
    pub fn delta(&self) -> Rad {
        Rad::radical(QScalar::one())
    }

    /// tau = u * theta as a degree-3 extension form.
    pub fn tau(&self) -> RadForm {
        RadForm::radical(self.calc.theta_form())
    }

    /// A = (2/lambda2)(lambda3/6); simplifies to (1 + q^2 + q^4)/3.
    pub fn coefficient_a(&self) -> QScalar {
        let two_over = QScalar::from_int(2) / self.calc.lambda2();
        let third = self.calc.lambda3() / QScalar::from_int(6);
        &two_over * &third
    }

    /// xi with S(w_a) = xi d(w_a): xi = -(2 q^2 alpha/(1+q)) u.
    pub fn xi(&self) -> Rad {
        let c = &(&QScalar::from_int(-2) * &(&QScalar::q_pow(2) * &self.params.alpha))
            / &(&QScalar::one() + &QScalar::q_pow(1));
        Rad::radical(c)
    }

    pub fn xi_inv(&self) -> Rad {
        self.xi().inv(&self.r2).expect("xi is invertible")
    }

    /// A * xi^-1, the combination appearing throughout the Dirac matrix.
    pub fn a_xi_inv(&self) -> Rad {
        self.xi_inv().scale(&self.coefficient_a())
    }

    /// (A, xi).
    pub fn coefficients(&self) -> (QScalar, Rad) {
        (self.coefficient_a(), self.xi())
    }

    /// The delta = 1 duality table entry: S_1(basis k, idx).
    pub fn s_unit(&self, degree: usize, idx: usize) -> &FormElement {
        &self.table[degree][idx]
    }

    /// Normalised star on a rational form: u times the delta = 1 table.
    pub fn star_form(&self, f: &FormElement) -> RadForm {
        let mut acc = FormElement::zero(3 - f.degree);
        for (&i, c) in f.support() {
            acc = acc.add(&self.table[f.degree][i].scale(c));
        }
        RadForm::radical(acc)
    }

    /// Normalised star on an extension form.
    pub fn star(&self, f: &RadForm) -> RadForm {
        let sb = self.star_form(&f.base);
        let sr = self.star_form(&f.rad);
        // star(A + uB) = u T(A) + u^2 T(B) = r2 T(B) + u T(A)
        RadForm {
            base: sr.rad.scale(&self.r2),
            rad: sb.rad,
        }
    }

    /// Inverse of the normalised star, mapping degree 3-k back to k.
    pub fn star_inv(&self, f: &RadForm) -> RadForm {
        let out_deg = 3 - f.degree();
        // invert the 3x3 (or 1x1) rational table T_k: star^-1 = (1/u) T^-1
        let t = &self.table[out_deg];
        let dim_in = LAMBDA_DIMS[f.degree()];
        let dim_out = LAMBDA_DIMS[out_deg];
        let mat: crate::linalg::Matrix = (0..dim_in)
            .map(|r| (0..dim_out).map(|c| t[c].coeff(r)).collect())
            .collect();
        let solve_component = |comp: &FormElement| -> FormElement {
            let rhs: Vec<QScalar> = (0..dim_in).map(|r| comp.coeff(r)).collect();
            let x = crate::linalg::solve(&mat, &rhs).expect("duality table invertible");
            let mut out = FormElement::zero(out_deg);
            for (i, c) in x.into_iter().enumerate() {
                out.set(i, c);
            }
            out
        };
        // (A + uB) = star(C + uD) = r2 T(D) + u T(C)
        let d_part = solve_component(&f.base.scale(&QScalar::one().checked_div(&self.r2).unwrap()));
        let c_part = solve_component(&f.rad);
        RadForm { base: c_part, rad: d_part }
    }

    /// Exterior derivative extended over the radical component.
    pub fn d(&self, f: &RadForm) -> RadForm {
        RadForm {
            base: self.calc.exterior_d(&f.base),
            rad: self.calc.exterior_d(&f.rad),
        }
    }

    /// Hermitian involution extended over the radical component (u real).
    pub fn involution(&self, f: &RadForm) -> RadForm {
        RadForm {
            base: self.calc.star_involution(&f.base),
            rad: self.calc.star_involution(&f.rad),
        }
    }

    /// Integral against tau: the coefficient c with w = c tau for a
    /// left-invariant 3-form; zero on lower degrees.
    pub fn integral_tau(&self, f: &RadForm) -> Rad {
        if f.degree() != 3 {
            return Rad::zero();
        }
        // tau = u * i * W, so c = coeff_W(f) / (i u).
        let c = f.coeff(0);
        let iu = Rad::radical(QScalar::i());
        c.mul(&iu.inv(&self.r2).expect("i*u invertible"), &self.r2)
    }

    /// Left-invariant inner product <w | w'> = integral_tau(w'* ^ S w).
    /// Forms of different degree are orthogonal by definition.
    pub fn inner_product(&self, w: &RadForm, wp: &RadForm) -> Rad {
        if w.degree() != wp.degree() {
            return Rad::zero();
        }
        let sw = self.star(w);
        let wps = self.involution(wp);
        let prod = self.wedge_rad(&wps, &sw);
        self.integral_tau(&prod)
    }

    /// Wedge extended bilinearly over the extension components.
    pub fn wedge_rad(&self, x: &RadForm, y: &RadForm) -> RadForm {
        let bb = self.calc.wedge(&x.base, &y.base);
        let br = self.calc.wedge(&x.base, &y.rad);
        let rb = self.calc.wedge(&x.rad, &y.base);
        let rr = self.calc.wedge(&x.rad, &y.rad);
        RadForm {
            base: bb.add(&rr.scale(&self.r2)),
            rad: br.add(&rb),
        }
    }

    /// Codifferential d-dagger = (-1)^k S^-1 d S on degree-k forms.
    pub fn codifferential(&self, f: &RadForm) -> RadForm {
        let k = f.degree();
        if k == 0 {
            return RadForm::zero(0);
        }
        let sf = self.star(f);
        let dsf = self.d(&sf);
        let out = self.star_inv(&dsf);
        if k % 2 == 0 {
            out
        } else {
            out.scale(&Rad::rational(-QScalar::one()), &self.r2)
        }
    }
}

fn build_s_table(
    calc: &Calculus,
    params: &MetricParams,
) -> Result<[Vec<FormElement>; 4], HodgeError> {
    let one = QScalar::one();
    let mut table: [Vec<FormElement>; 4] = [vec![], vec![], vec![], vec![]];
    for (deg, entry) in table.iter_mut().enumerate() {
        for idx in 0..LAMBDA_DIMS[deg] {
            let f = FormElement::basis(deg, idx);
            entry.push(s_operator(calc, params, &one, &f)?);
        }
    }
    Ok(table)
}
