//! The full invariant suite behind `qhodge verify`: every structural
//! identity the library guarantees, run end to end with one pass/fail line
//! per check, plus informational notes on the places where the literature
//! closed forms in the source tables disagree with the machinery by a fixed
//! factor (reported, never silently corrected).

use num_complex::Complex64;
use qhodge::dirac::{
    char_poly, classical_limit_sweep, classical_spectrum, expected_matrix, generic_radicand,
    highest_radicand, highest_trace_eigenvalue, lowest_radicand, lowest_trace_eigenvalue,
    matrix_det, matrix_trace, spectrum_numeric, DiracOp, DiracParams, Reducer,
};
use qhodge::excalc::{Calculus, FormElement, TensorOp, LAMBDA_DIMS};
use qhodge::hodge::{ck_solve, g_theta_theta, s_operator, Hodge, MetricParams, Rad, RadForm};
use qhodge::linalg;
use qhodge::qscalar::QScalar;
use qhodge::uqsu2::{self, Weight};
use serde::Serialize;

pub struct Overrides {
    pub beta_scale: f64,
    pub eps1: Option<QScalar>,
    pub eps3: Option<QScalar>,
    pub kappa_plus: bool,
}

#[derive(Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Outcome {
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
}

fn qi(n: i64) -> QScalar {
    QScalar::from_int(n)
}

fn q() -> QScalar {
    QScalar::q_pow(1)
}

pub fn run_all(gamma: &QScalar, tol: f64, ov: &Overrides) -> Outcome {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let calc = Calculus::new();

    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(CheckResult { name: name.to_string(), passed, detail });
    };

    // -- braided algebra ---------------------------------------------------
    {
        let s1 = calc.sigma_at(3, 1);
        let s2 = calc.sigma_at(3, 2);
        let ok = s2.compose(&s1).compose(&s2).sub(&s1.compose(&s2).compose(&s1)).is_zero();
        push("braid equation", ok, "27x27 exact".into());
    }
    {
        let s = calc.sigma_op();
        let id = TensorOp::identity(2);
        let zero = id.sub(s).compose(&id.scale(&QScalar::q_pow(2)).add(s)).is_zero();
        let k1 = linalg::kernel_dim(&id.sub(s).to_matrix());
        let k2 = linalg::kernel_dim(&id.scale(&QScalar::q_pow(2)).add(s).to_matrix());
        push(
            "braiding spectral identity",
            zero && k1 == 6 && k2 == 3,
            format!("(1-s)(q^2+s)=0, dim ker(1-s)={k1}, dim ker(q^2+s)={k2}"),
        );
    }
    {
        let a2 = calc.antisymmetrizer(2);
        let a3 = calc.antisymmetrizer(3);
        let p2 = a2.compose(a2).sub(&a2.scale(&calc.lambda2())).is_zero();
        let p3 = a3.compose(a3).sub(&a3.scale(&calc.lambda3())).is_zero();
        let r3 = linalg::rank(&a3.to_matrix());
        let z4 = calc.antisymmetrizer(4).is_zero();
        push(
            "antisymmetrizer spectra",
            p2 && p3 && r3 == 1 && z4,
            format!("A2^2=l2 A2, A3^2=l3 A3, rank A3={r3}, A4=0"),
        );
    }
    {
        let w = |a: usize, b: usize| {
            calc.wedge(&FormElement::basis(1, a), &FormElement::basis(1, b))
        };
        let mut ok = w(1, 0).coeff(0) == -QScalar::q_pow(2) && w(0, 0).is_zero();
        ok &= w(2, 1).coeff(1) == -QScalar::q_pow(-2);
        let zz_coef = &(&qi(2) * &(&QScalar::q_pow(2) * &(&q() - &QScalar::one())))
            / &(&q() + &QScalar::one());
        ok &= w(2, 2).coeff(0) == zz_coef;
        push("wedge relations", ok, "hermitian table + braided zz relation".into());
    }
    {
        let theta = calc.volume_theta();
        let ok = calc.antisymmetrizer(3).apply(&theta) == theta.scale(&calc.lambda3());
        let mpz = theta.coeff(qhodge::excalc::word_index(&[0, 1, 2]));
        let ok = ok && mpz == &QScalar::i() * &QScalar::q_pow(2);
        push("volume form", ok, "theta = A3(i -+z), top eigenspace".into());
    }
    {
        // braided-commutator oracle through the weight modules, J <= 2
        let sig = calc.braiding();
        let dirs = [uqsu2::XDir::Minus, uqsu2::XDir::Plus, uqsu2::XDir::Z];
        let mut ok = true;
        for a in 0..3 {
            for b in 0..3 {
                let bracket = calc.quantum_commutator(
                    qhodge::excalc::BASIS[a],
                    qhodge::excalc::BASIS[b],
                );
                for two_j in 0..=4i64 {
                    for w in Weight::string(two_j) {
                        let v = uqsu2::ModuleVector::basis(w);
                        let mut lhs =
                            uqsu2::x_action(dirs[a], &uqsu2::x_action(dirs[b], &v));
                        for k in 0..3 {
                            for s in 0..3 {
                                let coeff = &sig[qhodge::excalc::word_index(&[a, b])]
                                    [qhodge::excalc::word_index(&[k, s])];
                                if coeff.is_zero() {
                                    continue;
                                }
                                let term = uqsu2::x_action(
                                    dirs[k],
                                    &uqsu2::x_action(dirs[s], &v),
                                );
                                lhs = lhs.add(&term.scale(&-coeff.clone()));
                            }
                        }
                        let mut rhs = uqsu2::ModuleVector::zero(two_j);
                        for (ci, coeff) in bracket.iter().enumerate() {
                            if !coeff.is_zero() {
                                rhs = rhs.add(&uqsu2::x_action(dirs[ci], &v).scale(coeff));
                            }
                        }
                        ok &= lhs == rhs;
                    }
                }
            }
        }
        push("quantum commutator (braided oracle)", ok, "m(1 - sigma^T) on J <= 2".into());
    }
    {
        let mut ok = true;
        for deg in 0..=3usize {
            for i in 0..LAMBDA_DIMS[deg] {
                ok &= calc.exterior_d(&calc.exterior_d(&FormElement::basis(deg, i))).is_zero();
            }
        }
        // graded Leibniz on all basis pairs
        for da in 0..=3usize {
            for db in 0..=3usize {
                if da + db > 3 {
                    continue;
                }
                for i in 0..LAMBDA_DIMS[da] {
                    for j in 0..LAMBDA_DIMS[db] {
                        let a = FormElement::basis(da, i);
                        let b = FormElement::basis(db, j);
                        let lhs = calc.exterior_d(&calc.wedge(&a, &b));
                        let sign = if da % 2 == 0 { QScalar::one() } else { -QScalar::one() };
                        let rhs = calc
                            .wedge(&calc.exterior_d(&a), &b)
                            .add(&calc.wedge(&a, &calc.exterior_d(&b)).scale(&sign));
                        ok &= lhs == rhs;
                    }
                }
            }
        }
        push("exterior derivative", ok, "d^2 = 0 and graded Leibniz".into());
    }

    // -- metric and duality ------------------------------------------------
    let params = match ck_solve(gamma) {
        Ok(p) => p,
        Err(e) => {
            push("cartan-killing solve", false, format!("{e}"));
            return Outcome { checks, notes };
        }
    };
    {
        let expect = &(&(&qi(6) * &QScalar::q_pow(4)) * &(&params.alpha * &params.beta))
            * &params.gamma;
        let got = g_theta_theta(&calc, &params);
        push(
            "metric contraction",
            got == expect,
            "g(theta,theta) = 6 q^4 alpha beta gamma, derived".into(),
        );
    }
    {
        // duality table against the closed forms on a small parameter grid
        let vals = [qi(2), &QScalar::one() + &q()];
        let mut ok = true;
        for a in &vals {
            for b in &vals {
                for g in &vals {
                    let p = MetricParams::new(a.clone(), b.clone(), g.clone()).unwrap();
                    // S(w-) = i d alpha wz^w-; S(wz^w-) = -2i q^4 (d/l2) a c w-
                    let s = s_operator(&calc, &p, &QScalar::one(), &FormElement::basis(1, 0))
                        .unwrap();
                    ok &= s.coeff(2) == &QScalar::i() * &p.alpha;
                    let s2 = s_operator(&calc, &p, &QScalar::one(), &FormElement::basis(2, 2))
                        .unwrap();
                    let expect = &(&(&qi(-2) * &QScalar::i()) * &QScalar::q_pow(4))
                        * &(&(&p.alpha * &p.gamma) / &calc.lambda2());
                    ok &= s2.coeff(0) == expect;
                }
            }
        }
        push("duality table", ok, "against closed forms on a parameter grid".into());
    }
    {
        // S^2 degeneracy: scalar on 1-forms iff alpha = beta. The optional
        // beta-scale injection demonstrates the failure direction.
        let scale = QScalar::from_ratio((ov.beta_scale * 1000.0).round() as i64, 1000);
        let p = MetricParams::new(
            params.alpha.clone(),
            &params.beta * &scale,
            params.gamma.clone(),
        )
        .unwrap();
        let s2 = |i: usize| {
            s_operator(
                &calc,
                &p,
                &QScalar::one(),
                &s_operator(&calc, &p, &QScalar::one(), &FormElement::basis(1, i)).unwrap(),
            )
            .unwrap()
            .coeff(i)
        };
        let ok = s2(0) == s2(1) && s2(0) == s2(2);
        push(
            "S^2 degeneracy",
            ok,
            format!("S^2 scalar on 1-forms (beta scale {})", ov.beta_scale),
        );
    }
    {
        let real = MetricParams::new(qi(2), qi(2), qi(5)).unwrap();
        let complexp = MetricParams::new(&qi(2) + &QScalar::i(), &qi(2) + &QScalar::i(), qi(5)).unwrap();
        let check = |p: &MetricParams| -> bool {
            (0..3).all(|i| {
                let f = FormElement::basis(1, i);
                s_operator(&calc, p, &QScalar::one(), &calc.star_involution(&f)).unwrap()
                    == calc.star_involution(
                        &s_operator(&calc, p, &QScalar::one(), &f).unwrap(),
                    )
            })
        };
        push(
            "reality criterion",
            check(&real) && !check(&complexp),
            "real symmetric passes, imaginary perturbation fails".into(),
        );
    }

    let hodge = match Hodge::with_params(&calc, params.clone()) {
        Ok(h) => h,
        Err(e) => {
            push("cartan-killing solve", false, format!("{e}"));
            return Outcome { checks, notes };
        }
    };
    {
        // S(w_a) = xi d(w_a) with one common xi; and no common factor off
        // the family
        let xi = hodge.xi();
        let mut ok = true;
        for i in 0..3 {
            let s = hodge.star_form(&FormElement::basis(1, i));
            let d = RadForm::rational(calc.exterior_d(&FormElement::basis(1, i)));
            ok &= s.sub(&d.scale(&xi, hodge.r2())).is_zero();
        }
        let perturbed = MetricParams::new(
            params.alpha.clone(),
            &params.beta * &qi(2),
            params.gamma.clone(),
        )
        .unwrap();
        let ratio = |i: usize, p: &MetricParams| {
            let s = s_operator(&calc, p, &QScalar::one(), &FormElement::basis(1, i)).unwrap();
            let d = calc.exterior_d(&FormElement::basis(1, i));
            let (&idx, sc) = s.support().next().unwrap();
            &sc.clone() / &d.coeff(idx)
        };
        ok &= ratio(0, &perturbed) != ratio(1, &perturbed);
        let a = hodge.coefficient_a();
        ok &= a == (&(&QScalar::one() + &QScalar::q_pow(2)) + &QScalar::q_pow(4)) / qi(3);
        let av = a.eval(1.0).unwrap();
        ok &= (av.re - 1.0).abs() < 1e-12;
        push("cartan-killing solve", ok, "unique common xi; A = (1+q^2+q^4)/3 -> 1".into());
    }
    {
        let one = RadForm::rational(FormElement::unit());
        let mut ok = hodge.star(&one) == hodge.tau();
        let stau = hodge.star(&hodge.tau());
        ok &= stau.base.coeff(0) == QScalar::one() && stau.rad.is_zero();
        let a = hodge.coefficient_a();
        for deg in 1..=2usize {
            for i in 0..LAMBDA_DIMS[deg] {
                let f = RadForm::rational(FormElement::basis(deg, i));
                ok &= hodge.star(&hodge.star(&f))
                    == f.scale(&Rad::rational(a.clone()), hodge.r2());
            }
        }
        push("hodge star normalisation", ok, "star 1 = tau, star tau = 1, star^2 = A".into());
    }
    {
        let mut ok = true;
        let one = RadForm::rational(FormElement::unit());
        ok &= hodge.inner_product(&one, &one) == Rad::one();
        for i in 0..3 {
            for j in 0..3 {
                let v = hodge.inner_product(
                    &RadForm::rational(FormElement::basis(1, i)),
                    &RadForm::rational(FormElement::basis(1, j)),
                );
                if i == j {
                    ok &= !v.is_zero();
                } else {
                    ok &= v.is_zero();
                }
            }
        }
        ok &= hodge
            .inner_product(&one, &RadForm::rational(FormElement::basis(1, 0)))
            .is_zero();
        push("inner product", ok, "gram diagonal, degree orthogonality".into());
    }
    {
        let mut ok = true;
        for k in 1..=3usize {
            for i in 0..LAMBDA_DIMS[k] {
                for j in 0..LAMBDA_DIMS[k - 1] {
                    let w = RadForm::rational(FormElement::basis(k, i));
                    let wp = RadForm::rational(FormElement::basis(k - 1, j));
                    ok &= hodge.inner_product(&hodge.codifferential(&w), &wp)
                        == hodge.inner_product(&w, &hodge.d(&wp));
                }
            }
        }
        for k in 2..=3usize {
            for i in 0..LAMBDA_DIMS[k] {
                let w = RadForm::rational(FormElement::basis(k, i));
                ok &= hodge.codifferential(&hodge.codifferential(&w)).is_zero();
            }
        }
        push("codifferential adjointness", ok, "<d+ w|w'> = <w|d w'>; (d+)^2 = 0".into());
    }

    // -- Dirac operator ----------------------------------------------------
    {
        let got = DiracOp::standard(&hodge).matrix();
        let ok = match got {
            Ok(m) => m == expected_matrix(&hodge),
            Err(_) => false,
        };
        push("dirac matrix identity", ok, "assembled = closed form, 13 entries".into());
    }
    {
        // closure for the (possibly overridden) parameters
        let mut p = if ov.kappa_plus {
            DiracParams::standard_plus(&hodge)
        } else {
            DiracParams::standard(&hodge)
        };
        if let Some(e1) = &ov.eps1 {
            p.eps1 = Rad::rational(e1.clone());
        }
        if let Some(e3) = &ov.eps3 {
            p.eps3 = Rad::rational(e3.clone());
        }
        let a = DiracOp::new(&hodge, p).assemble();
        // violating parameter sets must produce nonzero residuals
        let mut bad_ok = true;
        for mutate in 0..3 {
            let mut vp = DiracParams::standard(&hodge);
            match mutate {
                0 => vp.eps3 = Rad::rational(qi(2)),
                1 => vp.eps2 = Rad::one(),
                _ => vp.kappa = vp.kappa.scale(&qi(2)),
            }
            bad_ok &= !DiracOp::new(&hodge, vp).assemble().closes();
        }
        push(
            "closure",
            a.closes() && bad_ok,
            format!("{} residual entries; violating sets rejected", a.residuals.len()),
        );
    }

    let reducer = match Reducer::new(&hodge) {
        Ok(r) => r,
        Err(e) => {
            push("reduced matrices", false, format!("{e}"));
            return Outcome { checks, notes };
        }
    };
    {
        let mut ok = true;
        // spot values at J = 1, N = 0
        let m = reducer.generic(2, 0).unwrap();
        ok &= m[1][0] == Rad::one();
        ok &= m[0][2].is_zero();
        ok &= m[2][2] == hodge.a_xi_inv().scale(&QScalar::i());
        // boundary examples: highest (3,2) entry and lowest (1,2) entry
        for two_j in 1..=4i64 {
            let hi = reducer.highest(two_j).unwrap();
            let expect = hodge.a_xi_inv().scale(&-(
                &(&qi(2) * &QScalar::q_pow(2)) / &(&QScalar::one() + &q())
            ));
            ok &= hi[2][1] == expect;
            let lo = reducer.lowest(two_j).unwrap();
            let expect = Rad::rational(-(
                &(&QScalar::from_ratio(1, 2) * &hodge.params.alpha)
                    * &(&QScalar::s_pow(6 + 2 * two_j) * &QScalar::qnum(2 * two_j))
            ));
            ok &= lo[0][1] == expect;
        }
        push("reduced matrices", ok, "literature entries at J <= 2".into());
    }
    {
        // exact characteristic factorisation, J <= 2
        let mut ok = true;
        let r2 = hodge.r2();
        for two_j in 1..=4i64 {
            for w in Weight::string(two_j) {
                if w.n.abs() < two_j {
                    let m = reducer.generic(two_j, w.n).unwrap();
                    let coeffs = char_poly(&m, r2);
                    let rad = generic_radicand(&hodge, w);
                    let tr = matrix_trace(&m);
                    let det = matrix_det(&m, r2);
                    let prod = det.mul(&Rad::rational(rad.clone()).inv(r2).unwrap(), r2);
                    ok &= coeffs[3] == tr.neg();
                    ok &= coeffs[2] == prod.add(&Rad::rational(rad.clone()));
                    ok &= coeffs[1] == tr.mul(&Rad::rational(rad.clone()), r2).neg();
                    ok &= coeffs[0] == Rad::rational(rad).mul(&prod, r2);
                }
            }
            let m = reducer.highest(two_j).unwrap();
            let coeffs = char_poly(&m, r2);
            let rad = Rad::rational(highest_radicand(&hodge, two_j));
            let t = highest_trace_eigenvalue(&hodge, two_j);
            ok &= coeffs[2] == t.neg() && coeffs[1] == rad && coeffs[0] == {
                let r = Rad::rational(highest_radicand(&hodge, two_j));
                r.mul(&t, r2).neg()
            };
            let m = reducer.lowest(two_j).unwrap();
            let coeffs = char_poly(&m, r2);
            let rad = Rad::rational(lowest_radicand(&hodge, two_j));
            let t = lowest_trace_eigenvalue(&hodge, two_j);
            ok &= coeffs[2] == t.neg() && coeffs[1] == rad && coeffs[0] == {
                let r = Rad::rational(lowest_radicand(&hodge, two_j));
                r.mul(&t, r2).neg()
            };
        }
        push("characteristic factorisation", ok, "closed families are exact roots".into());
    }
    {
        let mut ok = true;
        let mut worst: f64 = 0.0;
        let mut worst_res: f64 = 0.0;
        for two_j in 1..=4i64 {
            for w in Weight::string(two_j) {
                for q0 in [0.3, 0.5, 0.9] {
                    match spectrum_numeric(&reducer, two_j, w.n, q0) {
                        Ok(recs) => {
                            let dim = if w.n.abs() == two_j { 3 } else { 4 };
                            ok &= recs.len() == dim;
                            for r in &recs {
                                worst = worst.max(r.abs_err);
                                worst_res = worst_res.max(r.residual);
                            }
                        }
                        Err(_) => ok = false,
                    }
                }
            }
        }
        ok &= worst <= tol && worst_res <= 1e-10;
        push(
            "spectra closed vs numeric",
            ok,
            format!("max |closed - numeric| = {worst:.2e}, max eigen residual = {worst_res:.2e}"),
        );
    }
    {
        let mut ok = true;
        for two_j in 1..=6i64 {
            let hiw = Weight::new(two_j, two_j).unwrap();
            ok &= generic_radicand(&hodge, hiw) == highest_radicand(&hodge, two_j);
            let low = Weight::new(two_j, -two_j).unwrap();
            ok &= generic_radicand(&hodge, low) == lowest_radicand(&hodge, two_j);
        }
        push("specialisation at N = 2J", ok, "generic radicand collapses to boundary".into());
    }
    {
        let recs = classical_spectrum(2, 0).unwrap();
        let mut ims: Vec<f64> = recs.iter().map(|r| r.lambda.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut expect = [2f64.sqrt(), -(2f64.sqrt()), 1.0, -2.0];
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let ok = ims
            .iter()
            .zip(expect.iter())
            .all(|(a, b)| (a - b).abs() < 1e-12);
        push("classical oracle", ok, "J=1 N=0 spectrum {+-i sqrt2, i, -2i}".into());
    }
    {
        let grid: Vec<f64> = (0..6).map(|k| 0.9 + 0.0198 * k as f64).collect();
        let mut ok = true;
        for (two_j, n) in [(1i64, 1i64), (2, 0), (2, -2)] {
            match classical_limit_sweep(&reducer, two_j, n, &grid) {
                Ok(rep) => {
                    for row in rep.rows {
                        ok &= row.monotone;
                        if *row.abs_err.last().unwrap() > 1e-13 {
                            ok &= row.fitted_order >= 0.9;
                        }
                    }
                }
                Err(_) => ok = false,
            }
        }
        push("classical limit", ok, "monotone, fitted order >= 0.9".into());
    }
    {
        // eigenvector checks: oracle eigenpairs satisfy (M - lambda)v = 0 to
        // 1e-10; the literature boundary eigenvector component formulas are
        // compared and their deviation reported as a note.
        let mut ok = true;
        for two_j in 1..=4i64 {
            for q0 in [0.3, 0.5, 0.9] {
                for n in [two_j, -two_j] {
                    let recs = spectrum_numeric(&reducer, two_j, n, q0).unwrap();
                    for r in &recs {
                        ok &= r.residual <= 1e-10;
                    }
                }
            }
        }
        push("eigenvector residuals", ok, "oracle (M - lambda)v = 0 to 1e-10".into());

        let dev = literature_eigvec_deviation(&hodge, &reducer, 4, 0.5);
        notes.push(format!(
            "literature boundary eigenvector components (trace family, 2J=4, q=0.5) vs the matrix \
             oracle, normalised on the ladder slot: highest {}; lowest {}. The oracle vector's \
             sigma component vanishes identically while the literature one does not; reported, not \
             asserted.",
            dev.0, dev.1
        ));
    }

    notes.push(
        "literature-table deviations verified and reported: (a) the [X-,X+] bracket carries the \
         opposite sign from the literature table (braided-definition oracle fixes +i 2q^2/(1+q) X_z); \
         (b) the Cartan-Killing member is alpha = beta = ((1+q)/(2q))^2 gamma, a factor q^2 away \
         from the literature ((1+q)/(2q^2))^2; (c) the generic reduced matrix entry (1,3) and the \
         lambda+- radicand term 2q[N/2]^2 differ from the literature q^5 / 2q^3 forms by the same q^2."
            .to_string(),
    );

    Outcome { checks, notes }
}

/// Compare the literature trace-family eigenvector components against the
/// numeric matrix oracle at a boundary weight; returns printable summaries.
fn literature_eigvec_deviation(
    hodge: &Hodge,
    reducer: &Reducer,
    two_j: i64,
    q0: f64,
) -> (String, String) {
    let alpha = hodge.params.alpha.eval(q0).unwrap().re;
    let qq = q0;
    let n = two_j as f64;

    // highest: components (sigma, rho, mutilde) normalised to mutilde = 1
    let hi_dev = {
        let recs = spectrum_numeric(reducer, two_j, two_j, q0).unwrap();
        let rec = recs.iter().find(|r| r.family == "trace").unwrap();
        let v = &rec.eigvec;
        let mt = v[2];
        let sigma = v[0] / mt;
        let rho = v[1] / mt;
        let root = ((qq.powi(4) + qq * qq + 1.0) / (qq * qq + 1.0)).sqrt();
        let den = 5.0 * qq.powf(n + 2.0) + 3.0 * qq.powf(n + 4.0) + 4.0 * qq.powf(n)
            - qq.powi(4)
            - 3.0 * qq * qq
            - 2.0;
        let sigma_lit = Complex64::new(0.0, 1.0)
            * (1.5f64.sqrt() * alpha.sqrt() * (qq * qq + 1.0) * root
                * qq.powf(-n)
                * (qq.powf(2.0 * n) - 1.0))
            / den;
        let rho_lit = Complex64::new(0.0, -1.0) * (qq + 1.0) * qq.powf(-n - 4.0)
            * (3.0 * qq.powf(2.0 * n)
                + 2.0 * qq.powf(n + 2.0)
                + 2.0 * qq.powf(n + 4.0)
                + 2.0 * qq.powf(n + 6.0)
                + 7.0 * qq.powf(2.0 * n + 2.0)
                + 5.0 * qq.powf(2.0 * n + 4.0)
                + 3.0 * qq.powf(2.0 * n + 6.0)
                - qq.powi(6)
                - 3.0 * qq.powi(4)
                - 5.0 * qq * qq
                - 3.0)
            / (4.0 * den);
        format!(
            "sigma oracle {:.3e}{:+.3e}i vs literature {:.3e}{:+.3e}i, rho oracle {:.3e}{:+.3e}i vs literature {:.3e}{:+.3e}i",
            sigma.re, sigma.im, sigma_lit.re, sigma_lit.im,
            rho.re, rho.im, rho_lit.re, rho_lit.im
        )
    };

    // lowest: components (sigma, mu, rho) normalised to rho = 1
    let lo_dev = {
        let recs = spectrum_numeric(reducer, two_j, -two_j, q0).unwrap();
        let rec = recs.iter().find(|r| r.family == "trace").unwrap();
        let v = &rec.eigvec;
        let rho = v[2];
        let sigma = v[0] / rho;
        let mu = v[1] / rho;
        let tj = two_j as f64;
        let root = ((qq.powi(4) + qq * qq + 1.0) / (qq * qq + 1.0)).sqrt();
        let den1 = (qq + 1.0)
            * (3.0 * qq.powf(tj + 2.0) + qq.powf(tj + 4.0) + 2.0 * qq.powf(tj) + qq.powi(4)
                - qq * qq);
        let sigma_lit = Complex64::new(
            2.0 * 6f64.sqrt() * alpha.sqrt() * qq * qq * (qq * qq + 1.0) * root
                * (qq.powf(tj) - 1.0)
                / den1,
            0.0,
        );
        let den2 = (qq + 1.0)
            * (2.0 * qq.powf(2.0 * tj)
                + 2.0 * qq.powf(tj + 2.0)
                + 2.0 * qq.powf(tj + 4.0)
                + 3.0 * qq.powf(2.0 * tj + 2.0)
                + qq.powf(2.0 * tj + 4.0)
                + 2.0 * qq.powf(tj)
                + qq.powi(4)
                - qq * qq);
        let mu_lit = Complex64::new(0.0, -4.0)
            * (qq.powf(tj + 4.0) - qq.powf(tj) + qq.powi(4) + 2.0 * qq * qq + 3.0)
            / den2;
        format!(
            "sigma oracle {:.3e}{:+.3e}i vs literature {:.3e}{:+.3e}i, mu oracle {:.3e}{:+.3e}i vs literature {:.3e}{:+.3e}i",
            sigma.re, sigma.im, sigma_lit.re, sigma_lit.im,
            mu.re, mu.im, mu_lit.re, mu_lit.im
        )
    };

    (hi_dev, lo_dev)
}
