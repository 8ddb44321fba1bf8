//! The classical q = 1 Hodge-de Rham operator on the round 3-sphere and its
//! spectrum, used as the limit oracle for the quantum families.
//!
//! In the ladder basis (L-, L+, L_z) the operator acts on the spinor
//! components (psi0, psi-, psi_z, psi+) with the matrix
//!
//!   (   0     L+     L_z     L-   )
//!   (  L-   L_z - i  -L-     0    )
//!   (  L_z   -L+     -i      L-   )
//!   (  L+     0      L+   -i-L_z  )
//!
//! and the spectrum, for J = s + |N|/2, is lambda = +-i sqrt(J(J+1)) along
//! the full four-component ansatz, iJ and -i(J+1) on the generic stratum,
//! and -i(J+1) twice at the boundary strata.

use super::reduce::CaseTag;
use crate::uqsu2::Weight;
use num_complex::Complex64;

/// Coefficients of (1, L-, L_z, L+) for each entry of the classical matrix.
pub fn classical_operator_entries() -> [[[Complex64; 4]; 4]; 4] {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mi = Complex64::new(0.0, -1.0);
    let mut m = [[[z; 4]; 4]; 4];
    // row psi0: 0, L+, L_z, L-
    m[0][1][3] = one;
    m[0][2][2] = one;
    m[0][3][1] = one;
    // row psi-: L-, L_z - i, -L-, 0
    m[1][0][1] = one;
    m[1][1][2] = one;
    m[1][1][0] = mi;
    m[1][2][1] = -one;
    // row psi_z: L_z, -L+, -i, L-
    m[2][0][2] = one;
    m[2][1][3] = -one;
    m[2][2][0] = mi;
    m[2][3][1] = one;
    // row psi+: L+, 0, L+, -i - L_z
    m[3][0][3] = one;
    m[3][2][3] = one;
    m[3][3][0] = mi;
    m[3][3][2] = -one;
    m
}

/// One classical eigenvalue with its eigenspinor shape.
#[derive(Clone, Debug)]
pub struct ClassicalRecord {
    pub case: CaseTag,
    pub family: &'static str,
    pub lambda: Complex64,
    /// Which of the four spinor components vanish identically.
    pub zero_components: [bool; 4],
    pub description: &'static str,
}

/// sqrt(J(J+1)) for 2J stored exactly as an integer.
fn j_j_plus_one(two_j: i64) -> f64 {
    (two_j as f64) * (two_j as f64 + 2.0) / 4.0
}

/// The classical spectrum at a weight (J, N); J = s + |N|/2 with natural s
/// is exactly the quantum weight constraint.
pub fn classical_spectrum(two_j: i64, n: i64) -> Option<Vec<ClassicalRecord>> {
    Weight::new(two_j, n)?;
    let j = two_j as f64 / 2.0;
    let sq = j_j_plus_one(two_j).sqrt();
    let lam_plus = Complex64::new(0.0, sq);
    let lam_minus = Complex64::new(0.0, -sq);
    let minus_i_j1 = Complex64::new(0.0, -(j + 1.0));
    let i_j = Complex64::new(0.0, j);

    let mut out = Vec::new();
    if n.abs() < two_j {
        out.push(ClassicalRecord {
            case: CaseTag::Generic,
            family: "lambda_pm",
            lambda: lam_plus,
            zero_components: [false, false, false, false],
            description: "(lambda f, L- f, L_z f, L+ f)",
        });
        out.push(ClassicalRecord {
            case: CaseTag::Generic,
            family: "lambda_pm",
            lambda: lam_minus,
            zero_components: [false, false, false, false],
            description: "(lambda f, L- f, L_z f, L+ f)",
        });
        out.push(ClassicalRecord {
            case: CaseTag::Generic,
            family: "i_j",
            lambda: i_j,
            zero_components: [true, false, false, false],
            description: "(0, i/(J-N/2) L- f, f, -i/(J+N/2) L+ f)",
        });
        out.push(ClassicalRecord {
            case: CaseTag::Generic,
            family: "minus_i_j_plus_1",
            lambda: minus_i_j1,
            zero_components: [true, false, false, false],
            description: "(0, -i/(1+J+N/2) L- f, f, i/(1+J-N/2) L+ f)",
        });
    } else if n == two_j {
        if two_j > 0 {
            out.push(ClassicalRecord {
                case: CaseTag::Highest,
                family: "lambda_pm",
                lambda: lam_plus,
                zero_components: [false, true, false, false],
                description: "(lambda f, 0, L_z f, L+ f)",
            });
            out.push(ClassicalRecord {
                case: CaseTag::Highest,
                family: "lambda_pm",
                lambda: lam_minus,
                zero_components: [false, true, false, false],
                description: "(lambda f, 0, L_z f, L+ f)",
            });
        } else {
            // J = 0: the pair collapses onto the constants
            out.push(ClassicalRecord {
                case: CaseTag::Highest,
                family: "lambda_pm",
                lambda: Complex64::new(0.0, 0.0),
                zero_components: [false, true, true, true],
                description: "constant",
            });
            out.push(ClassicalRecord {
                case: CaseTag::Highest,
                family: "lambda_pm",
                lambda: Complex64::new(0.0, 0.0),
                zero_components: [false, true, true, true],
                description: "constant",
            });
        }
        out.push(ClassicalRecord {
            case: CaseTag::Highest,
            family: "trace",
            lambda: minus_i_j1,
            zero_components: [true, true, false, false],
            description: "(0, 0, -i f, L+ f)",
        });
        out.push(ClassicalRecord {
            case: CaseTag::Diagonal,
            family: "diagonal_plus",
            lambda: minus_i_j1,
            zero_components: [true, true, true, false],
            description: "(0, 0, 0, f)",
        });
    } else {
        out.push(ClassicalRecord {
            case: CaseTag::Lowest,
            family: "lambda_pm",
            lambda: lam_plus,
            zero_components: [false, false, false, true],
            description: "(lambda f, L- f, L_z f, 0)",
        });
        out.push(ClassicalRecord {
            case: CaseTag::Lowest,
            family: "lambda_pm",
            lambda: lam_minus,
            zero_components: [false, false, false, true],
            description: "(lambda f, L- f, L_z f, 0)",
        });
        out.push(ClassicalRecord {
            case: CaseTag::Lowest,
            family: "trace",
            lambda: minus_i_j1,
            zero_components: [true, false, false, true],
            description: "(0, L- f, -i f, 0)",
        });
        out.push(ClassicalRecord {
            case: CaseTag::Diagonal,
            family: "diagonal_minus",
            lambda: minus_i_j1,
            zero_components: [true, false, true, true],
            description: "(0, f, 0, 0)",
        });
    }
    Some(out)
}

/// Classical partner of a quantum closed-form family at a weight, for the
/// q -> 1 sweeps: same case, same family name.
pub fn classical_partner(
    two_j: i64,
    n: i64,
    case: CaseTag,
    family: &str,
    lambda_sign_hint: f64,
) -> Option<Complex64> {
    let records = classical_spectrum(two_j, n)?;
    let matches: Vec<&ClassicalRecord> = records
        .iter()
        .filter(|r| r.case == case && r.family == family)
        .collect();
    match matches.len() {
        0 => {
            // the quantum lambda'_pm family limits onto the two classical
            // generic singles iJ and -i(J+1)
            if family == "lambda_prime_pm" {
                let hit = records
                    .iter()
                    .filter(|r| r.case == CaseTag::Generic && r.family != "lambda_pm")
                    .min_by(|a, b| {
                        let da = (a.lambda.im - lambda_sign_hint).abs();
                        let db = (b.lambda.im - lambda_sign_hint).abs();
                        da.partial_cmp(&db).unwrap()
                    })?;
                Some(hit.lambda)
            } else {
                None
            }
        }
        1 => Some(matches[0].lambda),
        _ => {
            // lambda_pm: choose by sign of the imaginary part
            let hit = matches
                .into_iter()
                .min_by(|a, b| {
                    let da = (a.lambda.im - lambda_sign_hint).abs();
                    let db = (b.lambda.im - lambda_sign_hint).abs();
                    da.partial_cmp(&db).unwrap()
                })?;
            Some(hit.lambda)
        }
    }
}
