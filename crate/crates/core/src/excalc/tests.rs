use super::*;
use crate::linalg::{self, Matrix};
use crate::qscalar::QScalar;
use crate::uqsu2::{x_action, ModuleVector, Weight, XDir};

fn calc() -> Calculus {
    Calculus::new()
}

fn q() -> QScalar {
    QScalar::q_pow(1)
}

fn one_form(i: usize) -> FormElement {
    FormElement::basis(1, i)
}

#[test]
fn braiding_fixes_diagonal_ladder_words() {
    let c = calc();
    let m = c.braiding();
    // sigma(w- (x) w-) = w- (x) w-
    let mm = word_index(&[0, 0]);
    for i in 0..9 {
        let expect = if i == mm { QScalar::one() } else { QScalar::zero() };
        assert_eq!(m[i][mm], expect);
    }
}

#[test]
fn braiding_on_zz_matches_table() {
    let c = calc();
    let m = c.braiding();
    let zz = word_index(&[2, 2]);
    let coef = &(&QScalar::from_int(2) * &(&q() * &(&q() - &QScalar::one())))
        / &(&QScalar::one() + &QScalar::q_pow(-1));
    assert_eq!(m[zz][zz], QScalar::one());
    assert_eq!(m[word_index(&[1, 0])][zz], coef);
    assert_eq!(m[word_index(&[0, 1])][zz], -coef);
}

#[test]
fn braiding_at_q_one_is_the_flip() {
    let c = calc();
    let m = c.braiding();
    for j in 0..9 {
        let w = index_word(j, 2);
        let flip = word_index(&[w[1], w[0]]);
        for i in 0..9 {
            let v = m[i][j].eval(1.0).unwrap();
            let expect = if i == flip { 1.0 } else { 0.0 };
            assert!(
                (v.re - expect).abs() < 1e-12 && v.im.abs() < 1e-12,
                "entry ({i},{j})"
            );
        }
    }
}

#[test]
fn braiding_is_invertible() {
    let c = calc();
    assert_eq!(linalg::rank(&c.braiding()), 9);
}

#[test]
fn braid_equation_holds_exactly() {
    let c = calc();
    let s1 = c.sigma_at(3, 1);
    let s2 = c.sigma_at(3, 2);
    let lhs = s2.compose(&s1).compose(&s2);
    let rhs = s1.compose(&s2).compose(&s1);
    assert!(lhs.sub(&rhs).is_zero(), "(1x s)(s x1)(1x s) = (s x1)(1x s)(s x1)");
}

#[test]
fn spectral_identity_and_kernel_dimensions() {
    let c = calc();
    let s = c.sigma_op();
    let id = TensorOp::identity(2);
    let lhs = id.sub(s).compose(&id.scale(&QScalar::q_pow(2)).add(s));
    assert!(lhs.is_zero(), "(1 - sigma)(q^2 + sigma) = 0");

    let one_minus = id.sub(s).to_matrix();
    assert_eq!(linalg::kernel_dim(&one_minus), 6);
    let q2_plus = id.scale(&QScalar::q_pow(2)).add(s).to_matrix();
    assert_eq!(linalg::kernel_dim(&q2_plus), 3);
}

#[test]
fn antisymmetrizer_spectra() {
    let c = calc();
    // A(2)^2 = lambda2 A(2): projector up to scale (matrix arithmetic oracle)
    let a2 = c.antisymmetrizer(2);
    let sq = a2.compose(a2);
    assert!(sq.sub(&a2.scale(&c.lambda2())).is_zero());
    assert_eq!(linalg::rank(&a2.to_matrix()), 3);
    assert_eq!(linalg::kernel_dim(&a2.to_matrix()), 6);

    // A(3) acts as lambda3 on its image and has rank one
    let a3 = c.antisymmetrizer(3);
    let sq3 = a3.compose(a3);
    assert!(sq3.sub(&a3.scale(&c.lambda3())).is_zero());
    assert_eq!(linalg::rank(&a3.to_matrix()), 1);

    // A(4) vanishes identically on the 81-dimensional space
    assert!(c.antisymmetrizer(4).is_zero());
}

#[test]
fn lambda_values() {
    let c = calc();
    assert_eq!(c.lambda2(), &QScalar::one() + &QScalar::q_pow(2));
    let expect = &(&QScalar::one() + &QScalar::q_pow(2))
        * &(&(&QScalar::one() + &QScalar::q_pow(2)) + &QScalar::q_pow(4));
    assert_eq!(c.lambda3(), expect);
}

#[test]
fn wedge_relations_match_hermitian_table() {
    let c = calc();
    // w+ ^ w- = -q^2 w- ^ w+
    let pm = c.wedge(&one_form(1), &one_form(0));
    let mut expect = FormElement::zero(2);
    expect.set(0, -QScalar::q_pow(2));
    assert_eq!(pm, expect);

    // wz ^ w+ = -q^-2 w+ ^ wz
    let zp = c.wedge(&one_form(2), &one_form(1));
    let mut expect = FormElement::zero(2);
    expect.set(1, -QScalar::q_pow(-2));
    assert_eq!(zp, expect);

    // w- ^ wz = -q^-2 wz ^ w-
    let mz = c.wedge(&one_form(0), &one_form(2));
    let mut expect = FormElement::zero(2);
    expect.set(2, -QScalar::q_pow(-2));
    assert_eq!(mz, expect);

    // squares: w- ^ w- = w+ ^ w+ = 0, while wz ^ wz is the genuinely
    // braided relation (2q^2(q-1)/(q+1)) w- ^ w+
    assert!(c.wedge(&one_form(0), &one_form(0)).is_zero());
    assert!(c.wedge(&one_form(1), &one_form(1)).is_zero());
    let zz = c.wedge(&one_form(2), &one_form(2));
    let coef = &(&QScalar::from_int(2) * &(&QScalar::q_pow(2) * &(&q() - &QScalar::one())))
        / &(&q() + &QScalar::one());
    let mut expect = FormElement::zero(2);
    expect.set(0, coef);
    assert_eq!(zz, expect);

    // unit acts as identity
    let u = FormElement::unit();
    for i in 0..3 {
        assert_eq!(c.wedge(&u, &one_form(i)), one_form(i));
        assert_eq!(c.wedge(&one_form(i), &u), one_form(i));
    }
}

#[test]
fn wedge_associativity_on_basis_triples() {
    let c = calc();
    for a in 0..3 {
        for b in 0..3 {
            for d in 0..3 {
                let ab = c.wedge(&one_form(a), &one_form(b));
                let bd = c.wedge(&one_form(b), &one_form(d));
                let left = c.wedge(&ab, &one_form(d));
                let right = c.wedge(&one_form(a), &bd);
                assert_eq!(left, right, "({a},{b},{d})");
            }
        }
    }
}

#[test]
fn triple_wedge_class_values() {
    let c = calc();
    // Classes needed by the duality tables: -+z |-> 1, z-+ |-> 1, +z- |-> q^4
    let w = |word: &[usize]| c.project(&TensorElement::word(word, QScalar::one())).coeff(0);
    assert_eq!(w(&[0, 1, 2]), QScalar::one());
    assert_eq!(w(&[2, 0, 1]), QScalar::one());
    assert_eq!(w(&[1, 2, 0]), QScalar::q_pow(4));
    // words with a repeated ladder letter die in the quotient
    assert!(w(&[0, 2, 0]).is_zero());
    assert!(w(&[1, 0, 1]).is_zero());
}

#[test]
fn volume_tensor_is_q2_times_alternating_sum() {
    let c = calc();
    let theta = c.volume_theta_real();
    // q^2 ( -+z - -z+ - +-z + +z- + z-+ - z+- )
    let q2 = QScalar::q_pow(2);
    let signs: [(usize, i64); 6] = [
        (word_index(&[0, 1, 2]), 1),
        (word_index(&[0, 2, 1]), -1),
        (word_index(&[1, 0, 2]), -1),
        (word_index(&[1, 2, 0]), 1),
        (word_index(&[2, 0, 1]), 1),
        (word_index(&[2, 1, 0]), -1),
    ];
    let mut expect = TensorElement::zero(3);
    for (idx, s) in signs {
        expect.set(idx, &q2 * &QScalar::from_int(s));
    }
    assert_eq!(theta, expect);

    // The duality-normalised volume carries an extra overall i.
    assert_eq!(c.volume_theta(), expect.scale(&QScalar::i()));

    // At q = 1 the real pattern is the classical alternating sum with
    // coefficients +-1.
    for (idx, s) in signs {
        let v = theta.coeff(idx).eval(1.0).unwrap();
        assert!((v.re - s as f64).abs() < 1e-12 && v.im.abs() < 1e-12);
    }
}

#[test]
fn volume_lies_in_top_eigenspace() {
    let c = calc();
    let theta = c.volume_theta();
    let image = c.antisymmetrizer(3).apply(&theta);
    assert_eq!(image, theta.scale(&c.lambda3()), "A(3) theta = lambda3 theta");
}

/// First-principles oracle for the commutator table: the braided definition
/// [X_a, X_b] = m((1 - sigma-transpose)(X_a (x) X_b)) evaluated through the
/// weight-module action, where sigma-transpose carries the matrix of sigma
/// with upper and lower index pairs exchanged.
#[test]
fn quantum_commutator_matches_braided_definition() {
    let c = calc();
    let sig = c.braiding();
    let dirs = [XDir::Minus, XDir::Plus, XDir::Z];

    let apply_pair = |k: usize, s: usize, v: &ModuleVector| -> ModuleVector {
        x_action(dirs[k], &x_action(dirs[s], v))
    };

    for a in 0..3 {
        for b in 0..3 {
            let bracket = c.quantum_commutator(BASIS[a], BASIS[b]);
            for two_j in 0..=4 {
                for w in Weight::string(two_j) {
                    let v = ModuleVector::basis(w);
                    // X_a X_b
                    let mut lhs = apply_pair(a, b, &v);
                    // minus sum over (k,s) of sigma_{ks}^{ab} X_k X_s
                    for k in 0..3 {
                        for s in 0..3 {
                            let coeff = &sig[word_index(&[a, b])][word_index(&[k, s])];
                            if coeff.is_zero() {
                                continue;
                            }
                            lhs = lhs.add(&apply_pair(k, s, &v).scale(&-coeff.clone()));
                        }
                    }
                    let mut rhs = ModuleVector::zero(two_j);
                    for (ci, coeff) in bracket.iter().enumerate() {
                        if !coeff.is_zero() {
                            rhs = rhs.add(&x_action(dirs[ci], &v).scale(coeff));
                        }
                    }
                    assert_eq!(lhs, rhs, "[X_{a}, X_{b}] at {w}");
                }
            }
        }
    }
}

#[test]
fn commutator_table_values() {
    let c = calc();
    // [X_a, X_a] = 0
    for a in BASIS {
        assert!(c.quantum_commutator(a, a).iter().all(|x| x.is_zero()));
    }
    // [X-, X+] = i (2q^2/(1+q)) X_z; the braided oracle above fixes the sign.
    let mp = c.quantum_commutator(BasisIndex::Minus, BasisIndex::Plus);
    let expect = &(&QScalar::i() * &(&QScalar::from_int(2) * &QScalar::q_pow(2)))
        / &(&QScalar::one() + &q());
    assert!(mp[0].is_zero() && mp[1].is_zero());
    assert_eq!(mp[2], expect);
    let pm = c.quantum_commutator(BasisIndex::Plus, BasisIndex::Minus);
    assert_eq!(pm[2], -expect);

    // [X_z, X-] = -[X-, X_z] = i ((1+q)/2) X-
    let zm = c.quantum_commutator(BasisIndex::Z, BasisIndex::Minus);
    let half = &(&QScalar::i() * &(&QScalar::one() + &q())) * &QScalar::from_ratio(1, 2);
    assert_eq!(zm[0], half);
    let mz = c.quantum_commutator(BasisIndex::Minus, BasisIndex::Z);
    assert_eq!(mz[0], -half.clone());
    // [X+, X_z] = -[X_z, X+] = i ((1+q)/2) X+
    let pz = c.quantum_commutator(BasisIndex::Plus, BasisIndex::Z);
    assert_eq!(pz[1], half);

    // classical limit: [X-, X+] -> i X_z, [X_z, X-] -> i X-, [X+, X_z] -> i X+
    for (val, _lbl) in [(&mp[2], "mp"), (&zm[0], "zm"), (&pz[1], "pz")] {
        let v = val.eval(1.0).unwrap();
        assert!(v.re.abs() < 1e-12 && (v.im - 1.0).abs() < 1e-12);
    }
}

#[test]
fn commutator_annihilates_braided_symmetric_pairs() {
    // The bracket map factors through 1 - sigma-transpose, so it must kill
    // ker(1 - sigma-transpose).
    let c = calc();
    let sig = c.braiding();
    let n = 9;
    let mut one_minus_sig_t: Matrix = vec![vec![QScalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let d = if i == j { QScalar::one() } else { QScalar::zero() };
            one_minus_sig_t[i][j] = &d - &sig[j][i];
        }
    }
    let kernel = {
        let rank = linalg::rank(&one_minus_sig_t);
        assert_eq!(n - rank, 6);
        // reuse rref-based nullspace via solve on each free direction:
        // simplest here is to check the bracket on a spanning set of the
        // kernel obtained from sigma fixed vectors transposed.
        crate::excalc::tests::nullspace_of(&one_minus_sig_t)
    };
    for v in kernel {
        let mut out = [QScalar::zero(), QScalar::zero(), QScalar::zero()];
        for (idx, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let w = index_word(idx, 2);
            let br = c.quantum_commutator(BASIS[w[0]], BASIS[w[1]]);
            for k in 0..3 {
                out[k] = &out[k] + &(&br[k] * coeff);
            }
        }
        assert!(out.iter().all(|x| x.is_zero()), "bracket vanishes on braided-symmetric pairs");
    }
}

pub(super) fn nullspace_of(m: &Matrix) -> Vec<Vec<QScalar>> {
    super::nullspace(m)
}

#[test]
fn exterior_d_frozen_values() {
    let c = calc();
    // d w- = -i (1+q)/(2q^2) wz^w-
    let dm = c.exterior_d(&one_form(0));
    let coeff = &(&(-QScalar::i()) * &(&QScalar::one() + &q()))
        / &(&QScalar::from_int(2) * &QScalar::q_pow(2));
    let mut expect = FormElement::zero(2);
    expect.set(2, coeff.clone());
    assert_eq!(dm, expect);

    // d w+ = -i (1+q)/(2q^2) w+^wz
    let dp = c.exterior_d(&one_form(1));
    let mut expect = FormElement::zero(2);
    expect.set(1, coeff);
    assert_eq!(dp, expect);

    // d wz = -i (2q^2/(1+q)) w-^w+. The sign is pinned by the braided
    // commutator oracle together with the duality cross-check
    // d w_a = xi^-1 star(w_a) exercised in the hodge tests.
    let dz = c.exterior_d(&one_form(2));
    let coeff_z = &(&(-QScalar::i()) * &(&QScalar::from_int(2) * &QScalar::q_pow(2)))
        / &(&QScalar::one() + &q());
    let mut expect = FormElement::zero(2);
    expect.set(0, coeff_z);
    assert_eq!(dz, expect);

    // d(1) = 0
    assert!(c.exterior_d(&FormElement::unit()).is_zero());
}

#[test]
fn d_squared_vanishes_everywhere() {
    let c = calc();
    for deg in 0..=3 {
        for i in 0..LAMBDA_DIMS[deg] {
            let f = FormElement::basis(deg, i);
            let ddf = c.exterior_d(&c.exterior_d(&f));
            assert!(ddf.is_zero(), "d^2 on deg {deg} basis {i}");
        }
    }
}

#[test]
fn graded_leibniz_on_basis_pairs() {
    let c = calc();
    for da in 0..=3usize {
        for db in 0..=3usize {
            if da + db > 3 {
                continue;
            }
            for i in 0..LAMBDA_DIMS[da] {
                for j in 0..LAMBDA_DIMS[db] {
                    let a = FormElement::basis(da, i);
                    let b = FormElement::basis(db, j);
                    let lhs = c.exterior_d(&c.wedge(&a, &b));
                    let sign = if da % 2 == 0 { QScalar::one() } else { -QScalar::one() };
                    let rhs = c
                        .wedge(&c.exterior_d(&a), &b)
                        .add(&c.wedge(&a, &c.exterior_d(&b)).scale(&sign));
                    assert_eq!(lhs, rhs, "Leibniz deg ({da},{db}) basis ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn leibniz_consistent_across_rewrites() {
    // d(w+ ^ w-) computed by Leibniz on the product must match
    // -q^2 d(w- ^ w+): the quotient relations commute with d.
    let c = calc();
    let via_product = {
        let left = c.wedge(&c.exterior_d(&one_form(1)), &one_form(0));
        let right = c.wedge(&one_form(1), &c.exterior_d(&one_form(0)));
        left.sub(&right)
    };
    let via_rewrite = c
        .exterior_d(&c.wedge(&one_form(1), &one_form(0)));
    assert_eq!(via_product, via_rewrite);
}

#[test]
fn star_involution_table() {
    let c = calc();
    // (w-)* = w+
    assert_eq!(c.star_involution(&one_form(0)), one_form(1));
    // (w-^w+)* = -w-^w+
    let b0 = FormElement::basis(2, 0);
    assert_eq!(c.star_involution(&b0), b0.scale(&-QScalar::one()));
    // (w+^wz)* = -wz^w-, (wz^w-)* = -w+^wz
    assert_eq!(
        c.star_involution(&FormElement::basis(2, 1)),
        FormElement::basis(2, 2).scale(&-QScalar::one())
    );
    assert_eq!(
        c.star_involution(&FormElement::basis(2, 2)),
        FormElement::basis(2, 1).scale(&-QScalar::one())
    );
    // theta* = theta: the volume form is hermitian
    assert_eq!(c.star_involution(&c.theta_form()), c.theta_form());
}

#[test]
fn star_involution_squares_to_identity() {
    let c = calc();
    // antilinear involution on a dense element with complex coefficients
    for deg in 0..=3usize {
        let mut f = FormElement::zero(deg);
        for i in 0..LAMBDA_DIMS[deg] {
            let coeff = &(&QScalar::from_int(2 + i as i64) + &(&QScalar::i() * &q()))
                * &QScalar::q_half_pow(i as i64 - 1);
            f.set(i, coeff);
        }
        assert_eq!(c.star_involution(&c.star_involution(&f)), f, "deg {deg}");
    }
}

#[test]
fn expand_antisym_round_trips() {
    let c = calc();
    for deg in 1..=3usize {
        for i in 0..LAMBDA_DIMS[deg] {
            let f = FormElement::basis(deg, i);
            let lifted = c.lift_antisym(&f);
            let back = c.expand_antisym(&lifted).unwrap();
            assert_eq!(back, f);
        }
    }
}

#[test]
fn wedge_beyond_top_degree_is_zero() {
    let c = calc();
    let w2 = FormElement::basis(2, 0);
    let w3 = FormElement::basis(3, 0);
    assert!(c.wedge(&w2, &w2).is_zero());
    assert!(c.wedge(&w3, &one_form(0)).is_zero());
    assert!(c.wedge(&w3, &w3).is_zero());
}

#[test]
fn form_json_serialisation() {
    let c = calc();
    let dz = c.exterior_d(&one_form(2));
    let v = dz.to_json();
    assert_eq!(v["degree"], 2);
    let coeffs = v["coeffs"].as_object().unwrap();
    assert_eq!(coeffs.len(), 1);
    assert!(coeffs.contains_key("-+"), "basis-word keys");
    let s = coeffs["-+"].as_str().unwrap();
    assert_eq!(s, QScalar::to_string(&dz.coeff(0)));
}
