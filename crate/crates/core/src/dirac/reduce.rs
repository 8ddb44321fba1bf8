//! Weight-space reduction of the Dirac operator and the closed-form spectra.
//!
//! On the spinor ansatz (sigma f, mu X- f, rho f, mutilde X+ f) the operator
//! matrix collapses to a scalar matrix per weight (J, N): 4x4 on the generic
//! stratum |N| < 2J and 3x3 at the highest/lowest weights, where one ladder
//! component is absent. Entries are formal in the literature sense: ladder
//! composites enter through the casimir scalars, which vanish automatically
//! at the ends of the weight string.

use super::{DiracError, DiracOp, OperatorMatrix, SYM_UNIT, SYM_XM, SYM_XP, SYM_XZ};
use crate::hodge::{Hodge, Rad};
use crate::qscalar::QScalar;
use crate::uqsu2::{self, Weight};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ReduceError {
    #[error("invalid weight: J = {0}/2, N = {1}")]
    InvalidWeight(i64, i64),
    #[error("boundary weight N = {0}; use the highest/lowest reduction")]
    BoundaryWeight(i64),
    #[error("weight is not on the requested boundary")]
    NotBoundary,
    #[error("dirac: {0}")]
    Dirac(#[from] DiracError),
}

/// Which stratum a spectrum record belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseTag {
    Generic,
    Highest,
    Lowest,
    /// The extra one-dimensional families on which the operator is already
    /// diagonal (the bare phi+ / phi- spinors at the boundary weights).
    Diagonal,
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::Generic => "generic",
            CaseTag::Highest => "highest",
            CaseTag::Lowest => "lowest",
            CaseTag::Diagonal => "diagonal",
        }
    }
}

/// Function content of an ansatz slot: f, X- f or X+ f.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Content {
    F,
    XmF,
    XpF,
}

/// Formal action of an entry symbol on slot content over the base weight w.
/// Returns the target content and the scalar; None marks a composite that
/// leaves the ansatz space (never produced by the closing operator).
fn reduced_action(symbol: usize, content: Content, w: Weight) -> Option<(Content, QScalar)> {
    use Content::*;
    match symbol {
        SYM_UNIT => Some((content, QScalar::one())),
        SYM_XZ => match content {
            F => Some((F, uqsu2::x_z_eigenvalue(w.n))),
            XmF => Some((XmF, uqsu2::x_z_eigenvalue(w.n + 2))),
            XpF => Some((XpF, uqsu2::x_z_eigenvalue(w.n - 2))),
        },
        SYM_XM => match content {
            F => Some((XmF, QScalar::one())),
            XpF => Some((F, uqsu2::x_minus_x_plus(w))),
            XmF => None,
        },
        SYM_XP => match content {
            F => Some((XpF, QScalar::one())),
            XmF => Some((F, uqsu2::x_plus_x_minus(w))),
            XpF => None,
        },
        _ => unreachable!(),
    }
}

/// Reduction driver holding the assembled operator.
pub struct Reducer<'a> {
    pub hodge: &'a Hodge<'a>,
    pub matrix: OperatorMatrix,
}

impl<'a> Reducer<'a> {
    pub fn new(hodge: &'a Hodge<'a>) -> Result<Self, DiracError> {
        let matrix = DiracOp::standard(hodge).matrix()?;
        Ok(Reducer { hodge, matrix })
    }

    pub fn from_matrix(hodge: &'a Hodge<'a>, matrix: OperatorMatrix) -> Self {
        Reducer { hodge, matrix }
    }

    fn reduce(&self, w: Weight, slots: &[(usize, Content)]) -> Vec<Vec<Rad>> {
        let n = slots.len();
        let mut out = vec![vec![Rad::zero(); n]; n];
        for (ri, &(rrow, rcontent)) in slots.iter().enumerate() {
            for (ci, &(ccol, ccontent)) in slots.iter().enumerate() {
                let entry = &self.matrix.entries[rrow][ccol];
                let mut acc = Rad::zero();
                for (sym, coeff) in entry.coeffs.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (target, scalar) = reduced_action(sym, ccontent, w)
                        .expect("operator entry leaves the ansatz space");
                    if scalar.is_zero() {
                        continue;
                    }
                    assert_eq!(
                        target, rcontent,
                        "entry ({rrow},{ccol}) symbol {sym} maps into the wrong slot"
                    );
                    acc = acc.add(&coeff.scale(&scalar));
                }
                out[ri][ci] = acc;
            }
        }
        out
    }

    /// 4x4 reduction on the generic stratum |N| < 2J along the ansatz
    /// (sigma f, mu X- f, rho f, mutilde X+ f).
    pub fn generic(&self, two_j: i64, n: i64) -> Result<Vec<Vec<Rad>>, ReduceError> {
        let w = Weight::new(two_j, n).ok_or(ReduceError::InvalidWeight(two_j, n))?;
        if n.abs() == two_j {
            return Err(ReduceError::BoundaryWeight(n));
        }
        use Content::*;
        Ok(self.reduce(w, &[(0, F), (1, XmF), (2, F), (3, XpF)]))
    }

    /// 3x3 reduction at N = 2J along (sigma f, rho f, mutilde X+ f).
    pub fn highest(&self, two_j: i64) -> Result<Vec<Vec<Rad>>, ReduceError> {
        let w = Weight::new(two_j, two_j).ok_or(ReduceError::InvalidWeight(two_j, two_j))?;
        use Content::*;
        Ok(self.reduce(w, &[(0, F), (2, F), (3, XpF)]))
    }

    /// 3x3 reduction at N = -2J along (sigma f, mu X- f, rho f).
    pub fn lowest(&self, two_j: i64) -> Result<Vec<Vec<Rad>>, ReduceError> {
        let w = Weight::new(two_j, -two_j).ok_or(ReduceError::InvalidWeight(two_j, -two_j))?;
        use Content::*;
        Ok(self.reduce(w, &[(0, F), (1, XmF), (2, F)]))
    }

    /// Case dispatch for a valid weight.
    pub fn auto(&self, two_j: i64, n: i64) -> Result<(CaseTag, Vec<Vec<Rad>>), ReduceError> {
        if !Weight::is_valid(two_j, n) {
            return Err(ReduceError::InvalidWeight(two_j, n));
        }
        if n == two_j && two_j > 0 {
            Ok((CaseTag::Highest, self.highest(two_j)?))
        } else if n == -two_j && two_j > 0 {
            Ok((CaseTag::Lowest, self.lowest(two_j)?))
        } else if two_j == 0 {
            Ok((CaseTag::Highest, self.highest(0)?))
        } else {
            Ok((CaseTag::Generic, self.generic(two_j, n)?))
        }
    }
}

pub fn reduced_matrix<'a>(
    hodge: &'a Hodge<'a>,
    two_j: i64,
    n: i64,
) -> Result<(CaseTag, Vec<Vec<Rad>>), ReduceError> {
    let r = Reducer::new(hodge)?;
    r.auto(two_j, n)
}

pub fn reduce_generic<'a>(hodge: &'a Hodge<'a>, two_j: i64, n: i64) -> Result<Vec<Vec<Rad>>, ReduceError> {
    Reducer::new(hodge)?.generic(two_j, n)
}

pub fn reduce_highest<'a>(hodge: &'a Hodge<'a>, two_j: i64) -> Result<Vec<Vec<Rad>>, ReduceError> {
    Reducer::new(hodge)?.highest(two_j)
}

pub fn reduce_lowest<'a>(hodge: &'a Hodge<'a>, two_j: i64) -> Result<Vec<Vec<Rad>>, ReduceError> {
    Reducer::new(hodge)?.lowest(two_j)
}

// -------------------------------------------------------------------------
// Closed-form spectra
// -------------------------------------------------------------------------

/// A closed-form eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub enum ClosedKind {
    /// Exactly representable in the extension field (the trace and diagonal
    /// families, all purely imaginary under evaluation).
    Exact(Rad),
    /// sign * i * sqrt(radicand) with rational radicand.
    ImagSqrt { sign: i8, radicand: QScalar },
    /// Root of x^2 - tr x + prod with tr in the extension, prod rational:
    /// (tr + sign sqrt(tr^2 - 4 prod))/2.
    Quad { sign: i8, tr: Rad, prod: QScalar },
}

#[derive(Clone, Debug)]
pub struct ClosedRecord {
    pub case: CaseTag,
    pub kind: ClosedKind,
    /// Short printable name of the family.
    pub family: &'static str,
    /// Ansatz components (sigma, mu, rho, mutilde) where the closed form
    /// pins them; None for the families verified only through the matrix.
    pub eigvec: Option<[ClosedKind; 4]>,
}

impl ClosedKind {
    pub fn exact_rad(&self) -> Option<&Rad> {
        match self {
            ClosedKind::Exact(r) => Some(r),
            _ => None,
        }
    }

    pub fn eval(&self, q0: f64, r2: &QScalar) -> Result<num_complex::Complex64, crate::qscalar::ScalarError> {
        use num_complex::Complex64;
        match self {
            ClosedKind::Exact(r) => Ok(r.eval(q0, r2)?.to_complex()),
            ClosedKind::ImagSqrt { sign, radicand } => {
                let v = radicand.eval(q0)?.to_complex();
                Ok(Complex64::i() * v.sqrt() * (*sign as f64))
            }
            ClosedKind::Quad { sign, tr, prod } => {
                let t = tr.eval(q0, r2)?.to_complex();
                let p = prod.eval(q0)?.to_complex();
                let disc = (t * t - 4.0 * p).sqrt();
                Ok((t + disc * (*sign as f64)) / 2.0)
            }
        }
    }

    pub fn label(&self, r2: &QScalar) -> String {
        match self {
            ClosedKind::Exact(r) => r.to_string_with(r2),
            ClosedKind::ImagSqrt { sign, radicand } => {
                format!("{}i*sqrt({})", if *sign >= 0 { "+" } else { "-" }, radicand)
            }
            ClosedKind::Quad { sign, tr, prod } => format!(
                "(({}) {} sqrt(({})^2 - 4*({})))/2",
                tr.to_string_with(r2),
                if *sign >= 0 { "+" } else { "-" },
                tr.to_string_with(r2),
                prod
            ),
        }
    }
}

fn half(x: QScalar) -> QScalar {
    &x * &QScalar::from_ratio(1, 2)
}

/// Radicand of the generic lambda+- family:
/// (alpha/2) q^(1-N) { q^2 phi(J,N) + eps(J,N) + 2 q [N/2]^2 }.
pub fn generic_radicand(hodge: &Hodge, w: Weight) -> QScalar {
    let (eps, phi) = uqsu2::casimir_scalars(w);
    let brace = &(&(&QScalar::q_pow(2) * &phi) + &eps)
        + &(&(&QScalar::from_int(2) * &QScalar::q_pow(1)) * &QScalar::qnum(w.n).pow(2));
    &half(hodge.params.alpha.clone()) * &(&QScalar::s_pow(2 - 2 * w.n) * &brace)
}

/// Boundary radicand at N = 2J: (alpha/2) q^(1-2J) { [2J] + 2 q [J]^2 }.
pub fn highest_radicand(hodge: &Hodge, two_j: i64) -> QScalar {
    let brace = &QScalar::qnum(2 * two_j)
        + &(&(&QScalar::from_int(2) * &QScalar::q_pow(1)) * &QScalar::qnum(two_j).pow(2));
    &half(hodge.params.alpha.clone()) * &(&QScalar::s_pow(2 - 2 * two_j) * &brace)
}

/// Boundary radicand at N = -2J: (alpha/2) q^(1+2J) { q^2 [2J] + 2 q [J]^2 }.
pub fn lowest_radicand(hodge: &Hodge, two_j: i64) -> QScalar {
    let brace = &(&QScalar::q_pow(2) * &QScalar::qnum(2 * two_j))
        + &(&(&QScalar::from_int(2) * &QScalar::q_pow(1)) * &QScalar::qnum(two_j).pow(2));
    &half(hodge.params.alpha.clone()) * &(&QScalar::s_pow(2 + 2 * two_j) * &brace)
}

/// i A xi^-1 (1/2 (1 + q^-2J) + q^2 (q^-2J - 1)/(1 - q^2)): the trace
/// eigenvalue of the highest-weight reduction.
pub fn highest_trace_eigenvalue(hodge: &Hodge, two_j: i64) -> Rad {
    let one = QScalar::one();
    let t = &half(&one + &QScalar::q_pow(-two_j))
        + &(&QScalar::q_pow(2)
            * &(&(&QScalar::q_pow(-two_j) - &one) / &(&one - &QScalar::q_pow(2))));
    hodge.a_xi_inv().scale(&(&QScalar::i() * &t))
}

/// i A xi^-1 (1/2 (1 + q^2J) + (1 - q^2J)/(1 - q^2)): the trace eigenvalue
/// of the lowest-weight reduction.
pub fn lowest_trace_eigenvalue(hodge: &Hodge, two_j: i64) -> Rad {
    let one = QScalar::one();
    let t = &half(&one + &QScalar::q_pow(two_j))
        + &(&(&one - &QScalar::q_pow(two_j)) / &(&one - &QScalar::q_pow(2)));
    hodge.a_xi_inv().scale(&(&QScalar::i() * &t))
}

/// i A xi^-1 q^-J [1 + J]: the diagonal eigenvalue on the bare phi+ spinor
/// at N = 2J.
pub fn diagonal_highest_eigenvalue(hodge: &Hodge, two_j: i64) -> Rad {
    let v = &QScalar::s_pow(-two_j) * &QScalar::qnum(two_j + 2);
    hodge.a_xi_inv().scale(&(&QScalar::i() * &v))
}

/// i A xi^-1 {1 + q^(J+1) [J]}: the diagonal eigenvalue on the bare phi-
/// spinor at N = -2J.
pub fn diagonal_lowest_eigenvalue(hodge: &Hodge, two_j: i64) -> Rad {
    let v = &QScalar::one() + &(&QScalar::s_pow(two_j + 2) * &QScalar::qnum(two_j));
    hodge.a_xi_inv().scale(&(&QScalar::i() * &v))
}

/// rho/mu of the generic lambda+- eigenvectors:
/// (i/2)[N/2](1 + q^-1) q^(-N/2).
pub fn generic_rho_over_mu(n: i64) -> QScalar {
    uqsu2::x_z_eigenvalue(n)
}

/// Exact trace of a reduced matrix.
pub fn matrix_trace(m: &[Vec<Rad>]) -> Rad {
    let mut acc = Rad::zero();
    for (i, row) in m.iter().enumerate() {
        acc = acc.add(&row[i]);
    }
    acc
}

/// Exact determinant by cofactor expansion (dims 1..4).
pub fn matrix_det(m: &[Vec<Rad>], r2: &QScalar) -> Rad {
    let n = m.len();
    match n {
        0 => Rad::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Rad::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Rad>> = (1..n)
                    .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
                    .collect();
                let term = m[0][j].mul(&matrix_det(&minor, r2), r2);
                if j % 2 == 0 {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
            }
            acc
        }
    }
}

/// Closed-form spectrum for a weight, every family for its case, with the
/// diagonal families appended at the boundary strata.
pub fn spectrum_closed_form(
    reducer: &Reducer,
    two_j: i64,
    n: i64,
) -> Result<Vec<ClosedRecord>, ReduceError> {
    let h = reducer.hodge;
    let r2 = h.r2();
    if !Weight::is_valid(two_j, n) {
        return Err(ReduceError::InvalidWeight(two_j, n));
    }
    let w = Weight::new(two_j, n).unwrap();
    let zero = || ClosedKind::Exact(Rad::zero());
    let one = || ClosedKind::Exact(Rad::one());

    let mut out = Vec::new();
    if n.abs() < two_j {
        let rad = generic_radicand(h, w);
        let rho = ClosedKind::Exact(Rad::rational(generic_rho_over_mu(n)));
        for sign in [1i8, -1] {
            out.push(ClosedRecord {
                case: CaseTag::Generic,
                kind: ClosedKind::ImagSqrt { sign, radicand: rad.clone() },
                family: "lambda_pm",
                eigvec: Some([
                    ClosedKind::ImagSqrt { sign, radicand: rad.clone() },
                    one(),
                    rho.clone(),
                    one(),
                ]),
            });
        }
        // the remaining quadratic factor: x^2 - tr x + prod with
        // tr = tr(M) (lambda+ + lambda- = 0) and prod = det(M)/radicand
        let m = reducer.generic(two_j, n)?;
        let tr = matrix_trace(&m);
        let det = matrix_det(&m, r2);
        let prod_rad = det.mul(&Rad::rational(rad.clone()).inv(r2).expect("radicand nonzero"), r2);
        assert!(prod_rad.b.is_zero(), "quadratic-factor product must be rational");
        for sign in [1i8, -1] {
            out.push(ClosedRecord {
                case: CaseTag::Generic,
                kind: ClosedKind::Quad { sign, tr: tr.clone(), prod: prod_rad.a.clone() },
                family: "lambda_prime_pm",
                eigvec: None,
            });
        }
    } else if n == two_j {
        if two_j > 0 {
            let rad = highest_radicand(h, two_j);
            let rho = ClosedKind::Exact(Rad::rational(generic_rho_over_mu(n)));
            for sign in [1i8, -1] {
                out.push(ClosedRecord {
                    case: CaseTag::Highest,
                    kind: ClosedKind::ImagSqrt { sign, radicand: rad.clone() },
                    family: "lambda_pm",
                    eigvec: Some([
                        ClosedKind::ImagSqrt { sign, radicand: rad.clone() },
                        zero(),
                        rho.clone(),
                        one(),
                    ]),
                });
            }
        } else {
            // J = 0: the lambda+- pair degenerates to a double zero
            for _ in 0..2 {
                out.push(ClosedRecord {
                    case: CaseTag::Highest,
                    kind: ClosedKind::Exact(Rad::zero()),
                    family: "lambda_pm",
                    eigvec: None,
                });
            }
        }
        out.push(ClosedRecord {
            case: CaseTag::Highest,
            kind: ClosedKind::Exact(highest_trace_eigenvalue(h, two_j)),
            family: "trace",
            eigvec: None,
        });
        out.push(ClosedRecord {
            case: CaseTag::Diagonal,
            kind: ClosedKind::Exact(diagonal_highest_eigenvalue(h, two_j)),
            family: "diagonal_plus",
            eigvec: Some([zero(), zero(), zero(), one()]),
        });
    } else {
        // n == -two_j, two_j > 0
        let rad = lowest_radicand(h, two_j);
        let rho_over_mu = {
            // rho = -(i/2) mu [J](1+q^-1) q^J: the X_z eigenvalue at N = -2J
            ClosedKind::Exact(Rad::rational(uqsu2::x_z_eigenvalue(-two_j)))
        };
        for sign in [1i8, -1] {
            out.push(ClosedRecord {
                case: CaseTag::Lowest,
                kind: ClosedKind::ImagSqrt { sign, radicand: rad.clone() },
                family: "lambda_pm",
                eigvec: Some([
                    ClosedKind::ImagSqrt { sign, radicand: rad.clone() },
                    one(),
                    rho_over_mu.clone(),
                    zero(),
                ]),
            });
        }
        out.push(ClosedRecord {
            case: CaseTag::Lowest,
            kind: ClosedKind::Exact(lowest_trace_eigenvalue(h, two_j)),
            family: "trace",
            eigvec: None,
        });
        out.push(ClosedRecord {
            case: CaseTag::Diagonal,
            kind: ClosedKind::Exact(diagonal_lowest_eigenvalue(h, two_j)),
            family: "diagonal_minus",
            eigvec: Some([zero(), one(), zero(), zero()]),
        });
    }
    Ok(out)
}
