//! The Hodge-de Rham Dirac operator D(w) = dw + eps(k) star d(star w) on the
//! quantum sphere, its closure on the spinor module spanned by
//! psi0 = 1 + kappa tau and phi_a = w_a + eps3 kappa star(w_a), the reduced
//! weight-space eigenproblems and their spectra, closed-form and numeric,
//! together with the classical q = 1 operator used as the limit oracle.

mod classical;
mod numeric;
mod reduce;
mod report;

pub use classical::{
    classical_operator_entries, classical_partner, classical_spectrum, ClassicalRecord,
};
pub use numeric::{
    char_poly, char_poly_numeric, polynomial_roots, spectrum_numeric, NumericError, NumericRecord,
};
pub use reduce::{
    diagonal_highest_eigenvalue, diagonal_lowest_eigenvalue, generic_radicand,
    generic_rho_over_mu, highest_radicand, highest_trace_eigenvalue, lowest_radicand,
    lowest_trace_eigenvalue, matrix_det, matrix_trace, reduce_generic, reduce_highest,
    reduce_lowest, reduced_matrix, spectrum_closed_form, CaseTag, ClosedKind, ClosedRecord,
    Reducer, ReduceError,
};
pub use report::{LimitReport, LimitRow, RecordRow, ResolvedParams, SpectrumReport};

use crate::excalc::{BasisIndex, FormElement};
use crate::hodge::{Hodge, Rad, RadForm};
use crate::qscalar::QScalar;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DiracError {
    #[error("operator does not close on the spinor module; {0} residual entries")]
    ClosureViolation(usize),
}

/// Degree-dependent coefficients of D and the spinor-module scale kappa.
/// Closure requires eps1 = eps3 and eps2 eps3^2 kappa^2 A^2 = 1.
#[derive(Clone, Debug)]
pub struct DiracParams {
    pub eps1: Rad,
    pub eps2: Rad,
    pub eps3: Rad,
    pub kappa: Rad,
}

impl DiracParams {
    /// The closing choice eps1 = eps3 = 1, eps2 = -1, kappa = -i A^-1.
    pub fn standard(hodge: &Hodge) -> Self {
        let a = hodge.coefficient_a();
        let kappa = Rad::rational(&(-QScalar::i()) / &a);
        DiracParams {
            eps1: Rad::one(),
            eps2: Rad::rational(-QScalar::one()),
            eps3: Rad::one(),
            kappa,
        }
    }

    /// The other closing root kappa = +i A^-1.
    pub fn standard_plus(hodge: &Hodge) -> Self {
        let mut p = DiracParams::standard(hodge);
        p.kappa = p.kappa.neg();
        p
    }

    fn eps(&self, k: usize) -> Rad {
        match k {
            1 => self.eps1.clone(),
            2 => self.eps2.clone(),
            3 => self.eps3.clone(),
            // the star-d-star term on functions lands in degree 4 and dies
            _ => Rad::zero(),
        }
    }
}

/// Symbols an operator-matrix entry can multiply: the unit and the three
/// tangent directions.
pub const SYMBOLS: usize = 4;
pub const SYM_UNIT: usize = 0;
pub const SYM_XM: usize = 1;
pub const SYM_XZ: usize = 2;
pub const SYM_XP: usize = 3;

pub fn symbol_name(s: usize) -> &'static str {
    ["1", "X-", "Xz", "X+"][s]
}

/// One matrix entry c0 + c1 X- + c2 Xz + c3 X+ with extension coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct OpEntry {
    pub coeffs: [Rad; 4],
}

impl OpEntry {
    pub fn zero() -> Self {
        OpEntry { coeffs: [Rad::zero(), Rad::zero(), Rad::zero(), Rad::zero()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// 4x4 matrix of generator-linear entries along (psi0, phi-, phi_z, phi+).
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    pub entries: Vec<Vec<OpEntry>>,
}

impl OperatorMatrix {
    pub fn zero(dim: usize) -> Self {
        OperatorMatrix { entries: vec![vec![OpEntry::zero(); dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }
}

/// Mixed-degree exterior element: one extension form per degree.
#[derive(Clone, Debug)]
pub struct MixedForm {
    pub parts: [RadForm; 4],
}

impl MixedForm {
    pub fn zero() -> Self {
        MixedForm {
            parts: [RadForm::zero(0), RadForm::zero(1), RadForm::zero(2), RadForm::zero(3)],
        }
    }

    pub fn from_part(f: RadForm) -> Self {
        let mut m = MixedForm::zero();
        m.add_part(&f);
        m
    }

    pub fn add_part(&mut self, f: &RadForm) {
        if f.is_zero() {
            return;
        }
        let d = f.degree();
        self.parts[d] = self.parts[d].add(f);
    }
}

/// Residual of one D-image outside the spinor module.
#[derive(Clone, Debug)]
pub struct ResidualEntry {
    pub column: usize,
    pub symbol: usize,
    pub degree: usize,
    pub basis_idx: usize,
    pub value: Rad,
}

/// Outcome of assembling D on the spinor basis: the matrix plus whatever
/// failed to close.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub matrix: OperatorMatrix,
    pub residuals: Vec<ResidualEntry>,
}

impl Assembly {
    pub fn closes(&self) -> bool {
        self.residuals.is_empty()
    }
}

pub struct DiracOp<'a> {
    pub hodge: &'a Hodge<'a>,
    pub params: DiracParams,
}

impl<'a> DiracOp<'a> {
    pub fn new(hodge: &'a Hodge<'a>, params: DiracParams) -> Self {
        DiracOp { hodge, params }
    }

    pub fn standard(hodge: &'a Hodge<'a>) -> Self {
        let params = DiracParams::standard(hodge);
        DiracOp { hodge, params }
    }

    /// The spinor basis as mixed forms: psi0 = 1 + kappa tau, then
    /// phi_a = w_a + eps3 kappa star(w_a) for a = -, z, +.
    pub fn spinor_basis(&self) -> Vec<MixedForm> {
        let h = self.hodge;
        let r2 = h.r2();
        let mut basis = Vec::with_capacity(4);
        let mut psi0 = MixedForm::zero();
        psi0.add_part(&RadForm::rational(FormElement::unit()));
        psi0.add_part(&h.tau().scale(&self.params.kappa, r2));
        basis.push(psi0);
        for a in [BasisIndex::Minus, BasisIndex::Z, BasisIndex::Plus] {
            let w = FormElement::one_form(a);
            let mut phi = MixedForm::zero();
            phi.add_part(&RadForm::rational(w.clone()));
            let scale = self.params.eps3.mul(&self.params.kappa, r2);
            phi.add_part(&h.star_form(&w).scale(&scale, r2));
            basis.push(phi);
        }
        basis
    }

    /// D(f * part) decomposed over the function symbols:
    /// the unit slot carries d(part) + eps(k) star d star(part), the X_a
    /// slot carries w_a ^ part + eps(k) star(w_a ^ star part).
    fn apply_to_part(&self, part: &RadForm) -> [MixedForm; SYMBOLS] {
        let h = self.hodge;
        let r2 = h.r2();
        let k = part.degree();
        let eps = self.params.eps(k);

        let mut out = [MixedForm::zero(), MixedForm::zero(), MixedForm::zero(), MixedForm::zero()];

        // unit symbol
        let d_part = h.d(part);
        let sds = h.star(&h.d(&h.star(part)));
        out[SYM_UNIT].add_part(&d_part);
        out[SYM_UNIT].add_part(&sds.scale(&eps, r2));

        // tangent symbols; BasisIndex order (-, +, z) maps to slots 1, 3, 2
        for (slot, a) in [(SYM_XM, BasisIndex::Minus), (SYM_XP, BasisIndex::Plus), (SYM_XZ, BasisIndex::Z)] {
            let wa = RadForm::rational(FormElement::one_form(a));
            let wedge = h.wedge_rad(&wa, part);
            out[slot].add_part(&wedge);
            let spart = h.star(part);
            let inner = h.wedge_rad(&wa, &spart);
            if !inner.is_zero() {
                let starred = h.star(&inner);
                out[slot].add_part(&starred.scale(&eps, r2));
            }
        }
        out
    }

    /// Decompose a mixed form over the spinor basis; returns the four
    /// coordinates and pushes anything unaccounted for into `residuals`.
    fn decompose(
        &self,
        m: &MixedForm,
        column: usize,
        symbol: usize,
        residuals: &mut Vec<ResidualEntry>,
    ) -> [Rad; 4] {
        let h = self.hodge;
        let r2 = h.r2();
        let kappa_iu = self.params.kappa.mul(&Rad::radical(QScalar::i()), r2);

        // psi0 coordinate from degree 0; residual in degree 3
        let c0 = m.parts[0].coeff(0);
        let c3 = m.parts[3].coeff(0);
        let expect3 = c0.mul(&kappa_iu, r2);
        let r3 = c3.sub(&expect3);
        if !r3.is_zero() {
            residuals.push(ResidualEntry { column, symbol, degree: 3, basis_idx: 0, value: r3 });
        }

        // phi coordinates from degree 1; residual in degree 2
        let v = [
            m.parts[1].coeff(0),
            m.parts[1].coeff(1),
            m.parts[1].coeff(2),
        ];
        let e3k = self.params.eps3.mul(&self.params.kappa, r2);
        let mut expect2 = RadForm::zero(2);
        for (ai, val) in v.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            let sw = h.star_form(&FormElement::basis(1, ai));
            expect2 = expect2.add(&sw.scale(&val.mul(&e3k, r2), r2));
        }
        let diff = m.parts[2].sub(&expect2);
        for idx in 0..3 {
            let rv = diff.coeff(idx);
            if !rv.is_zero() {
                residuals.push(ResidualEntry {
                    column,
                    symbol,
                    degree: 2,
                    basis_idx: idx,
                    value: rv,
                });
            }
        }

        // spinor coordinate order: psi0, phi-, phi_z, phi+
        [c0, v[0].clone(), v[2].clone(), v[1].clone()]
    }

    /// Assemble D on the spinor module from first principles.
    pub fn assemble(&self) -> Assembly {
        let mut matrix = OperatorMatrix::zero(4);
        let mut residuals = Vec::new();
        for (col, basis) in self.spinor_basis().iter().enumerate() {
            // accumulate the action over the column's homogeneous parts
            let mut per_symbol = [
                MixedForm::zero(),
                MixedForm::zero(),
                MixedForm::zero(),
                MixedForm::zero(),
            ];
            for part in &basis.parts {
                if part.is_zero() {
                    continue;
                }
                let acted = self.apply_to_part(part);
                for (s, mf) in acted.into_iter().enumerate() {
                    for p in mf.parts {
                        per_symbol[s].add_part(&p);
                    }
                }
            }
            for (s, mf) in per_symbol.iter().enumerate() {
                let coords = self.decompose(mf, col, s, &mut residuals);
                for (row, c) in coords.into_iter().enumerate() {
                    matrix.entries[row][col].coeffs[s] = c;
                }
            }
        }
        Assembly { matrix, residuals }
    }

    /// Assemble, requiring closure.
    pub fn matrix(&self) -> Result<OperatorMatrix, DiracError> {
        let a = self.assemble();
        if a.closes() {
            Ok(a.matrix)
        } else {
            Err(DiracError::ClosureViolation(a.residuals.len()))
        }
    }
}

/// Symbolic closure residual of D on the spinor module for the given
/// parameters: empty iff eps1 = eps3 and eps2 eps3^2 kappa^2 A^2 = 1.
pub fn closure_check(hodge: &Hodge, params: DiracParams) -> Vec<ResidualEntry> {
    DiracOp::new(hodge, params).assemble().residuals
}

/// The closing matrix in its literature closed form, for comparison with the
/// assembled one: first column (0, X-, Xz, X+), first row
/// (0, q^4 a X+, q^2 c Xz, b X-), and the lower-right block proportional to
/// A xi^-1.
pub fn expected_matrix(hodge: &Hodge) -> OperatorMatrix {
    let r2 = hodge.r2();
    let axi = hodge.a_xi_inv();
    let p = &hodge.params;
    let one = QScalar::one();
    let q = QScalar::q_pow(1);
    let i = QScalar::i();
    let two = QScalar::from_int(2);
    let opq = &one + &q; // 1 + q

    let rat = |x: QScalar| Rad::rational(x);
    let mut m = OperatorMatrix::zero(4);
    let mut set = |r: usize, c: usize, s: usize, v: Rad| {
        m.entries[r][c].coeffs[s] = v;
    };

    // row psi0
    set(0, 1, SYM_XP, rat(&QScalar::q_pow(4) * &p.alpha));
    set(0, 2, SYM_XZ, rat(&QScalar::q_pow(2) * &p.gamma));
    set(0, 3, SYM_XM, rat(p.beta.clone()));
    // row phi-
    set(1, 0, SYM_XM, Rad::one());
    set(1, 1, SYM_UNIT, axi.scale(&i));
    set(1, 1, SYM_XZ, axi.scale(&-(&(&two * &QScalar::q_pow(2)) / &opq)));
    set(1, 2, SYM_XM, axi.scale(&(&two / &opq)));
    // row phi_z
    set(2, 0, SYM_XZ, Rad::one());
    set(2, 1, SYM_XP, axi.scale(&(&opq / &two)));
    set(2, 2, SYM_UNIT, axi.scale(&i));
    set(2, 2, SYM_XZ, axi.scale(&(&one - &q)));
    set(
        2,
        3,
        SYM_XM,
        axi.scale(&-(&opq / &(&two * &QScalar::q_pow(2)))),
    );
    // row phi+
    set(3, 0, SYM_XP, Rad::one());
    set(3, 2, SYM_XP, axi.scale(&-(&(&two * &QScalar::q_pow(2)) / &opq)));
    set(3, 3, SYM_UNIT, axi.scale(&i));
    set(3, 3, SYM_XZ, axi.scale(&(&two / &opq)));
    let _ = r2;
    m
}

/// Convergence of every closed-form eigenvalue at a weight towards its
/// classical partner over a grid in (0, 1).
pub fn classical_limit_sweep(
    reducer: &Reducer,
    two_j: i64,
    n: i64,
    grid: &[f64],
) -> Result<LimitReport, NumericError> {
    let r2 = reducer.hodge.r2();
    let closed = spectrum_closed_form(reducer, two_j, n)
        .map_err(|_| NumericError::InvalidWeight(two_j, n))?;
    let mut rows = Vec::new();
    let q_hint = grid.iter().cloned().fold(0.5, f64::max);
    for rec in &closed {
        let hint = rec.kind.eval(q_hint, r2)?.im;
        let Some(classical) = classical_partner(two_j, n, rec.case, rec.family, hint) else {
            continue;
        };
        let mut errs = Vec::with_capacity(grid.len());
        for &q0 in grid {
            let v = rec.kind.eval(q0, r2)?;
            errs.push((v - classical).norm());
        }
        // least-squares slope of ln(err) against ln(1 - q)
        let pts: Vec<(f64, f64)> = grid
            .iter()
            .zip(&errs)
            .filter(|(&q0, &e)| e > 1e-14 && q0 < 1.0)
            .map(|(&q0, &e)| ((1.0 - q0).ln(), e.ln()))
            .collect();
        let fitted_order = if pts.len() < 2 {
            f64::INFINITY
        } else {
            let nn = pts.len() as f64;
            let sx: f64 = pts.iter().map(|p| p.0).sum();
            let sy: f64 = pts.iter().map(|p| p.1).sum();
            let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
            let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
            (nn * sxy - sx * sy) / (nn * sxx - sx * sx)
        };
        // monotone vanishing as the grid marches towards q = 1
        let mut sorted: Vec<(f64, f64)> = grid.iter().cloned().zip(errs.iter().cloned()).collect();
        sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let monotone = sorted.windows(2).all(|w| w[1].1 <= w[0].1 + 1e-12);
        rows.push(LimitRow {
            family: rec.family.to_string(),
            case: rec.case.name().to_string(),
            lambda_classical: [classical.re, classical.im],
            q_grid: grid.to_vec(),
            abs_err: errs,
            fitted_order,
            monotone,
        });
    }
    Ok(LimitReport {
        resolved: Some(ResolvedParams::from_hodge(reducer.hodge)),
        j: crate::uqsu2::Weight::new(two_j, n)
            .map(|w| w.j_string())
            .unwrap_or_default(),
        n,
        rows,
    })
}
