//! Numeric spectra of the reduced matrices: exact characteristic polynomial
//! coefficients evaluated at a numeric q, rooted with Durand-Kerner, paired
//! against the closed forms, and equipped with explicit eigenvectors.

use super::reduce::{CaseTag, ClosedRecord, Reducer};
use crate::hodge::Rad;
use crate::qscalar::{QScalar, ScalarError};
use crate::uqsu2::Weight;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum NumericError {
    #[error("root finder failed to converge; matrix: {0}")]
    NoConvergence(String),
    #[error("invalid weight: J = {0}/2, N = {1}")]
    InvalidWeight(i64, i64),
    #[error("q0 must lie in (0, 1], got {0}")]
    QOutOfRange(f64),
    #[error("scalar: {0}")]
    Scalar(#[from] ScalarError),
}

/// Exact characteristic polynomial of a reduced matrix by Faddeev-LeVerrier:
/// returns [c0, c1, ..., c_{n-1}, 1] with p(x) = sum c_k x^k.
pub fn char_poly(m: &[Vec<Rad>], r2: &QScalar) -> Vec<Rad> {
    let n = m.len();
    let mut coeffs = vec![Rad::zero(); n + 1];
    coeffs[n] = Rad::one();
    // M_1 = A; c_{n-k} = -tr(M_k)/k; M_{k+1} = A (M_k + c_{n-k} I)
    let mut mk = m.to_vec();
    for k in 1..=n {
        let mut tr = Rad::zero();
        for i in 0..n {
            tr = tr.add(&mk[i][i]);
        }
        let ck = tr.scale(&QScalar::from_ratio(-1, k as i64));
        coeffs[n - k] = ck.clone();
        if k == n {
            break;
        }
        // mk <- A (mk + ck I)
        let mut shifted = mk.clone();
        for i in 0..n {
            shifted[i][i] = shifted[i][i].add(&ck);
        }
        let mut next = vec![vec![Rad::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rad::zero();
                for l in 0..n {
                    if m[i][l].is_zero() || shifted[l][j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&m[i][l].mul(&shifted[l][j], r2));
                }
                next[i][j] = acc;
            }
        }
        mk = next;
    }
    coeffs
}

/// Durand-Kerner on a monic polynomial given by ascending coefficients
/// [c0, ..., c_{n-1}, 1].
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, NumericError> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    // scale-aware starting points on a slightly irrational spiral
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 0.4 + 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
            Complex64::from_polar(radius.powf(1.0 / n as f64).max(0.5), ang)
        })
        .collect();
    let deriv_eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * x + c * (k as f64);
        }
        acc
    };
    let mut converged = false;
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                denom = Complex64::new(1e-300, 0.0);
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-13 * radius.max(1.0) {
            converged = true;
            break;
        }
    }
    if !converged {
        // accept anyway when the polynomial residuals are already tiny
        // (clusters slow Durand-Kerner to a crawl near the end)
        let scale = coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max);
        if roots.iter().any(|&r| eval(r).norm() > 1e-10 * scale) {
            return Err(NumericError::NoConvergence(format!("{coeffs:?}")));
        }
    }
    // Newton polish: quadratic convergence on simple roots recovers full
    // double precision after the loosened stop above.
    for r in roots.iter_mut() {
        for _ in 0..8 {
            let d = deriv_eval(*r);
            if d.norm() < 1e-280 {
                break;
            }
            let step = eval(*r) / d;
            *r -= step;
            if step.norm() < 1e-16 * (1.0 + r.norm()) {
                break;
            }
        }
    }
    let mut sorted = roots;
    sorted.sort_by(|a, b| {
        (a.im, a.re)
            .partial_cmp(&(b.im, b.re))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(sorted)
}

/// One numeric spectrum record, paired with a closed-form partner.
#[derive(Clone, Debug)]
pub struct NumericRecord {
    pub case: CaseTag,
    pub family: &'static str,
    pub lambda_closed: Complex64,
    pub lambda_closed_label: String,
    pub lambda_numeric: Complex64,
    pub abs_err: f64,
    /// Eigenvector in the ansatz coordinates, largest component normalised
    /// to one; dimension matches the reduced matrix.
    pub eigvec: Vec<Complex64>,
    /// Residual |(M - lambda) v|_inf of the numeric eigenpair.
    pub residual: f64,
}

fn eval_matrix(m: &[Vec<Rad>], q0: f64, r2: &QScalar) -> Result<Vec<Vec<Complex64>>, ScalarError> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|e| e.eval(q0, r2).map(|v| v.to_complex()))
                .collect()
        })
        .collect()
}

/// Null vector of (M - lambda I) via column-pivoted elimination; the vector
/// is normalised so its largest-magnitude component is 1.
fn eigenvector(m: &[Vec<Complex64>], lambda: Complex64) -> Vec<Complex64> {
    let n = m.len();
    let mut a: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m[i][j] - if i == j { lambda } else { Complex64::new(0.0, 0.0) })
                .collect()
        })
        .collect();
    let mut piv_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        let (best, mag) = (r..n)
            .map(|i| (i, a[i][c].norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap_or((r, 0.0));
        if mag < 1e-8 {
            continue;
        }
        a.swap(r, best);
        let inv = Complex64::new(1.0, 0.0) / a[r][c];
        for j in 0..n {
            a[r][j] *= inv;
        }
        for i in 0..n {
            if i != r {
                let f = a[i][c];
                if f.norm() > 0.0 {
                    for j in 0..n {
                        let t = a[r][j] * f;
                        a[i][j] -= t;
                    }
                }
            }
        }
        piv_cols.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    // free column: first non-pivot
    let free = (0..n).find(|c| !piv_cols.contains(c)).unwrap_or(n - 1);
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    v[free] = Complex64::new(1.0, 0.0);
    for (row, &pc) in piv_cols.iter().enumerate() {
        v[pc] = -a[row][free];
    }
    let (bi, bm) = v
        .iter()
        .enumerate()
        .map(|(i, x)| (i, x.norm()))
        .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
        .unwrap();
    if bm > 0.0 {
        let inv = Complex64::new(1.0, 0.0) / v[bi];
        for x in &mut v {
            *x *= inv;
        }
    }
    v
}

fn residual(m: &[Vec<Complex64>], lambda: Complex64, v: &[Complex64]) -> f64 {
    let n = m.len();
    let mut worst = 0.0f64;
    for i in 0..n {
        let mut acc = -lambda * v[i];
        for j in 0..n {
            acc += m[i][j] * v[j];
        }
        worst = worst.max(acc.norm());
    }
    worst
}

/// Minimal-total-distance assignment of numeric roots to closed values;
/// sizes are at most 4, so full permutation search is exact.
fn assign(closed: &[Complex64], numeric: &[Complex64]) -> Vec<usize> {
    let n = closed.len();
    let mut best: (f64, Vec<usize>) = (f64::INFINITY, (0..n).collect());
    let mut idx: Vec<usize> = (0..n).collect();
    permute(&mut idx, 0, &mut |perm| {
        let cost: f64 = (0..n).map(|i| (closed[i] - numeric[perm[i]]).norm()).sum();
        if cost < best.0 {
            best = (cost, perm.to_vec());
        }
    });
    best.1
}

fn permute(idx: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == idx.len() {
        f(idx);
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, f);
        idx.swap(k, i);
    }
}

/// Characteristic polynomial of a complex matrix by Faddeev-LeVerrier,
/// ascending coefficients with leading 1.
pub fn char_poly_numeric(m: &[Vec<Complex64>]) -> Vec<Complex64> {
    let n = m.len();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut mk = m.to_vec();
    for k in 1..=n {
        let tr: Complex64 = (0..n).map(|i| mk[i][i]).sum();
        let ck = -tr / (k as f64);
        coeffs[n - k] = ck;
        if k == n {
            break;
        }
        let mut shifted = mk.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += ck;
        }
        let mut next = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| m[i][l] * shifted[l][j]).sum();
            }
        }
        mk = next;
    }
    coeffs
}

/// Numeric spectrum at q0 for a weight: evaluate the reduced matrix, root
/// its numeric characteristic polynomial, and pair by minimal distance
/// against the closed forms from [`spectrum_closed_form`].
pub fn spectrum_numeric(
    reducer: &Reducer,
    two_j: i64,
    n: i64,
    q0: f64,
) -> Result<Vec<NumericRecord>, NumericError> {
    if !(q0 > 0.0 && q0 <= 1.0) {
        return Err(NumericError::QOutOfRange(q0));
    }
    if !Weight::is_valid(two_j, n) {
        return Err(NumericError::InvalidWeight(two_j, n));
    }
    let h = reducer.hodge;
    let r2 = h.r2();
    let (_case, m) = reducer
        .auto(two_j, n)
        .map_err(|_| NumericError::InvalidWeight(two_j, n))?;
    let closed_all = super::reduce::spectrum_closed_form(reducer, two_j, n)
        .map_err(|_| NumericError::InvalidWeight(two_j, n))?;
    // the matrix-borne records exclude the extra diagonal family
    let closed: Vec<&ClosedRecord> =
        closed_all.iter().filter(|r| r.case != CaseTag::Diagonal).collect();

    let mnum = eval_matrix(&m, q0, r2)?;
    let cnum = char_poly_numeric(&mnum);
    let roots = polynomial_roots(&cnum)?;
    assert_eq!(roots.len(), closed.len(), "record count equals matrix dimension");

    let closed_vals: Vec<Complex64> = closed
        .iter()
        .map(|c| c.kind.eval(q0, r2).map_err(NumericError::from))
        .collect::<Result<_, _>>()?;
    let perm = assign(&closed_vals, &roots);

    let mut out = Vec::new();
    for (i, rec) in closed.iter().enumerate() {
        let lam_num = roots[perm[i]];
        let v = eigenvector(&mnum, lam_num);
        let res = residual(&mnum, lam_num, &v);
        out.push(NumericRecord {
            case: rec.case,
            family: rec.family,
            lambda_closed: closed_vals[i],
            lambda_closed_label: rec.kind.label(r2),
            lambda_numeric: lam_num,
            abs_err: (closed_vals[i] - lam_num).norm(),
            eigvec: v,
            residual: res,
        });
    }
    Ok(out)
}
