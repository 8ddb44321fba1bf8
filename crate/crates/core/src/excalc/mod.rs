//! The braided exterior algebra over the three left-invariant 1-forms of the
//! quantum sphere calculus: braiding, antisymmetrisers, the wedge quotient,
//! exterior derivative, hermitian involution and the quantum commutator of
//! the tangent-space basis.
//!
//! Degree-2 rewrite rules come out of ker(1 - sigma) at construction time
//! rather than being hard-coded; the familiar relations
//! w+^w- = -q^2 w-^w+ etc. are then theorems checked by the test suite, as
//! is the one genuinely quantum relation wz^wz = (2q^2(q-1)/(q+1)) w-^w+.

mod forms;

pub use forms::{
    basis2_symbol, index_word, word_index, word_symbol, BasisIndex, FormElement, TensorElement,
    TensorOp, BASIS, BASIS2_WORDS, BASIS3_WORD, LAMBDA_DIMS,
};

use crate::linalg;
use crate::qscalar::QScalar;

/// Structure constants of the quantum commutator [X_a, X_b] = f_ab^c X_c.
/// Entry `table[a][b][c]` is f_ab^c.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub table: [[[QScalar; 3]; 3]; 3],
}

impl StructureConstants {
    pub fn f(&self, a: BasisIndex, b: BasisIndex, c: BasisIndex) -> &QScalar {
        &self.table[a as usize][b as usize][c as usize]
    }

    /// [X_a, X_b] as coefficients over (X_-, X_+, X_z).
    pub fn bracket(&self, a: BasisIndex, b: BasisIndex) -> [QScalar; 3] {
        self.table[a as usize][b as usize].clone()
    }
}

/// All precomputed tables of the calculus: built once, immutable afterwards.
pub struct Calculus {
    /// sigma as an operator on degree-2 tensors.
    sigma: TensorOp,
    /// Antisymmetrisers A(2), A(3), A(4).
    a2: TensorOp,
    a3: TensorOp,
    a4: TensorOp,
    /// Class of every degree-2 word in the quotient basis.
    class2: Vec<Vec<(usize, QScalar)>>,
    /// Class of every degree-3 word as a multiple of the volume class.
    class3: Vec<QScalar>,
    /// A(2) applied to the three basis-2 words; the antisymmetric lift basis.
    lift2: Vec<TensorElement>,
    /// A(3) applied to the word -+z.
    lift3: TensorElement,
    structure: StructureConstants,
    d1: Vec<FormElement>,
    d2: Vec<FormElement>,
}

impl Calculus {
    pub fn new() -> Self {
        let sigma = build_sigma();
        let a2 = TensorOp::identity(2).sub(&sigma);
        let a3 = build_a3(&sigma);
        let a4 = build_a4(&sigma);

        let class2 = build_class2(&a2);
        let class3 = build_class3(&a3);

        let lift2: Vec<TensorElement> = BASIS2_WORDS
            .iter()
            .map(|w| a2.apply(&TensorElement::word(w, QScalar::one())))
            .collect();
        let lift3 = a3.apply(&TensorElement::word(&BASIS3_WORD, QScalar::one()));

        let structure = build_structure_constants();

        let mut calc = Calculus {
            sigma,
            a2,
            a3,
            a4,
            class2,
            class3,
            lift2,
            lift3,
            structure,
            d1: Vec::new(),
            d2: Vec::new(),
        };
        calc.d1 = (0..3).map(|a| calc.compute_d1(a)).collect();
        calc.d2 = (0..3).map(|i| calc.compute_d2(i)).collect();
        calc
    }

    pub fn lambda2(&self) -> QScalar {
        &QScalar::one() + &QScalar::q_pow(2)
    }

    pub fn lambda3(&self) -> QScalar {
        let a = &QScalar::one() + &QScalar::q_pow(2);
        let b = &(&QScalar::one() + &QScalar::q_pow(2)) + &QScalar::q_pow(4);
        &a * &b
    }

    pub fn lambda_scalar(&self, k: usize) -> QScalar {
        match k {
            0 | 1 => QScalar::one(),
            2 => self.lambda2(),
            3 => self.lambda3(),
            _ => QScalar::zero(),
        }
    }

    /// The braiding as a 9x9 matrix, M[i][j] = coefficient of word i in
    /// sigma(word j), lexicographic word order.
    pub fn braiding(&self) -> linalg::Matrix {
        self.sigma.to_matrix()
    }

    pub fn sigma_op(&self) -> &TensorOp {
        &self.sigma
    }

    /// sigma acting on slots (slot, slot+1) of a degree-k tensor, slot >= 1.
    pub fn sigma_at(&self, degree: usize, slot: usize) -> TensorOp {
        sigma_slot(&self.sigma, degree, slot)
    }

    /// The antisymmetriser A(k) for k = 2, 3, 4.
    pub fn antisymmetrizer(&self, k: usize) -> &TensorOp {
        match k {
            2 => &self.a2,
            3 => &self.a3,
            4 => &self.a4,
            _ => panic!("antisymmetrizer defined for k = 2, 3, 4"),
        }
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.structure
    }

    /// Quantum commutator [X_a, X_b] as coefficients over (X_-, X_+, X_z).
    pub fn quantum_commutator(&self, a: BasisIndex, b: BasisIndex) -> [QScalar; 3] {
        self.structure.bracket(a, b)
    }

    // ---------------------------------------------------------------------
    // Quotient projection and antisymmetric lift
    // ---------------------------------------------------------------------

    /// Class of a tensor in the exterior quotient, expressed in the fixed
    /// Lambda basis.
    pub fn project(&self, t: &TensorElement) -> FormElement {
        match t.degree {
            0 | 1 => {
                let mut f = FormElement::zero(t.degree);
                for (&i, c) in t.support() {
                    f.set(i, &f.coeff(i) + c);
                }
                f
            }
            2 => {
                let mut f = FormElement::zero(2);
                for (&w, c) in t.support() {
                    for (b, r) in &self.class2[w] {
                        f.set(*b, &f.coeff(*b) + &(r * c));
                    }
                }
                f
            }
            3 => {
                let mut f = FormElement::zero(3);
                let mut acc = QScalar::zero();
                for (&w, c) in t.support() {
                    acc = &acc + &(&self.class3[w] * c);
                }
                f.set(0, acc);
                f
            }
            _ => FormElement::zero(3),
        }
    }

    /// Representative tensor of a form: each basis class is represented by
    /// its defining word, extended by linearity.
    pub fn representative(&self, f: &FormElement) -> TensorElement {
        let mut t = TensorElement::zero(f.degree);
        for (&i, c) in f.support() {
            let w: Vec<usize> = match f.degree {
                0 => Vec::new(),
                1 => vec![i],
                2 => BASIS2_WORDS[i].to_vec(),
                _ => BASIS3_WORD.to_vec(),
            };
            let idx = word_index(&w);
            t.set(idx, &t.coeff(idx) + c);
        }
        t
    }

    /// Antisymmetric lift used by the metric machinery: basis words are sent
    /// through A(k) instead of staying bare representatives.
    pub fn lift_antisym(&self, f: &FormElement) -> TensorElement {
        let mut t = TensorElement::zero(f.degree);
        for (&i, c) in f.support() {
            let contrib = match f.degree {
                0 | 1 => self.representative(&FormElement::basis(f.degree, i)),
                2 => self.lift2[i].clone(),
                _ => self.lift3.clone(),
            };
            t = t.add(&contrib.scale(c));
        }
        t
    }

    /// Inverse of [`Self::lift_antisym`]: expand a tensor lying in the image
    /// of A(k) over the lifted basis. None when the tensor is not in the
    /// antisymmetric image.
    pub fn expand_antisym(&self, t: &TensorElement) -> Option<FormElement> {
        match t.degree {
            0 | 1 => Some(self.project(t)),
            2 => {
                let dense = t.to_dense();
                let cols: Vec<Vec<QScalar>> = self.lift2.iter().map(|l| l.to_dense()).collect();
                let a: linalg::Matrix = (0..9)
                    .map(|r| (0..3).map(|c| cols[c][r].clone()).collect())
                    .collect();
                let x = linalg::solve(&a, &dense)?;
                let mut f = FormElement::zero(2);
                for (i, c) in x.into_iter().enumerate() {
                    f.set(i, c);
                }
                Some(f)
            }
            3 => {
                if t.is_zero() {
                    return Some(FormElement::zero(3));
                }
                let base = &self.lift3;
                let (&pivot, pc) = base.support().next().expect("nonzero lift");
                let ratio = t.coeff(pivot).checked_div(pc).ok()?;
                if t.add(&base.scale(&-ratio.clone())).is_zero() {
                    let mut f = FormElement::zero(3);
                    f.set(0, ratio);
                    Some(f)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    // ---------------------------------------------------------------------
    // Wedge product
    // ---------------------------------------------------------------------

    /// Bilinear wedge: concatenate class representatives and project back to
    /// the quotient basis. Total degree beyond 3 is zero.
    pub fn wedge(&self, a: &FormElement, b: &FormElement) -> FormElement {
        let total = a.degree + b.degree;
        if total > 3 {
            return FormElement::zero(3);
        }
        let t = self.representative(a).tensor(&self.representative(b));
        self.project(&t)
    }

    // ---------------------------------------------------------------------
    // Volume element
    // ---------------------------------------------------------------------

    /// theta = A(3)(i w- (x) w+ (x) wz), the left-invariant volume tensor.
    pub fn volume_theta(&self) -> TensorElement {
        self.lift3.scale(&QScalar::i())
    }

    /// The same without the overall i: q^2 times the classical alternating
    /// sum. The duality section's tables require the factor i, so all
    /// downstream machinery uses [`Self::volume_theta`] / [`Self::theta_form`].
    pub fn volume_theta_real(&self) -> TensorElement {
        self.lift3.clone()
    }

    /// theta as an exterior form: i times the volume class, so that its
    /// antisymmetric lift is exactly [`Self::volume_theta`].
    pub fn theta_form(&self) -> FormElement {
        let mut f = FormElement::zero(3);
        f.set(0, QScalar::i());
        f
    }

    // ---------------------------------------------------------------------
    // Exterior derivative and star involution
    // ---------------------------------------------------------------------

    fn compute_d1(&self, a: usize) -> FormElement {
        // d w_a = -(1/lambda2) f_bc^a  w_b ^ w_c, summed over all b, c.
        let mut acc = FormElement::zero(2);
        for b in 0..3 {
            for c in 0..3 {
                let f = &self.structure.table[b][c][a];
                if f.is_zero() {
                    continue;
                }
                let w = self.wedge(&FormElement::basis(1, b), &FormElement::basis(1, c));
                acc = acc.add(&w.scale(f));
            }
        }
        acc.scale(&-(QScalar::one() / self.lambda2()))
    }

    fn compute_d2(&self, i: usize) -> FormElement {
        // Graded Leibniz on the representative word of the basis 2-form.
        let [a, b] = BASIS2_WORDS[i];
        let left = self.wedge(&self.d1[a], &FormElement::basis(1, b));
        let right = self.wedge(&FormElement::basis(1, a), &self.d1[b]);
        left.sub(&right)
    }

    /// Exterior derivative on the quotient: Maurer-Cartan on 1-forms,
    /// graded Leibniz on 2-forms, zero on constants and 3-forms.
    pub fn exterior_d(&self, f: &FormElement) -> FormElement {
        match f.degree {
            0 => FormElement::zero(1),
            1 => {
                let mut acc = FormElement::zero(2);
                for (&i, c) in f.support() {
                    acc = acc.add(&self.d1[i].scale(c));
                }
                acc
            }
            2 => {
                let mut acc = FormElement::zero(3);
                for (&i, c) in f.support() {
                    acc = acc.add(&self.d2[i].scale(c));
                }
                acc
            }
            // Degree 4 and above is zero; reported as the degree-3 zero form,
            // the same convention as wedge overflow.
            _ => FormElement::zero(3),
        }
    }

    /// Antilinear hermitian involution: w-* = w+, wz* = wz, on 2-forms
    /// (w-^w+)* = -w-^w+, (w+^wz)* = -wz^w-, (wz^w-)* = -w+^wz, and on the
    /// volume class (w-^w+^wz)* = -(w-^w+^wz).
    pub fn star_involution(&self, f: &FormElement) -> FormElement {
        let mut out = FormElement::zero(f.degree);
        for (&i, c) in f.support() {
            let cc = c.conj();
            match f.degree {
                0 => out.set(0, &out.coeff(0) + &cc),
                1 => {
                    let j = match i {
                        0 => 1,
                        1 => 0,
                        _ => 2,
                    };
                    out.set(j, &out.coeff(j) + &cc);
                }
                2 => {
                    let j = match i {
                        0 => 0,
                        1 => 2,
                        _ => 1,
                    };
                    out.set(j, &out.coeff(j) - &cc);
                }
                _ => out.set(0, &out.coeff(0) - &cc),
            }
        }
        out
    }
}

impl Default for Calculus {
    fn default() -> Self {
        Calculus::new()
    }
}

// -------------------------------------------------------------------------
// Construction helpers
// -------------------------------------------------------------------------

const M: usize = 0;
const P: usize = 1;
const Z: usize = 2;

fn build_sigma() -> TensorOp {
    let one = QScalar::one();
    let q2 = QScalar::q_pow(2);
    let one_minus_q2 = &one - &q2;
    // 2q(q-1)/(1+q^-1) = 2q^2(q-1)/(q+1)
    let c = &(&QScalar::from_int(2) * &(&q2 * &(&QScalar::q_pow(1) - &one)))
        / &(&QScalar::q_pow(1) + &one);

    let mut op = TensorOp::zero(2);
    let mut set = |from: [usize; 2], to: Vec<([usize; 2], QScalar)>| {
        op.cols[word_index(&from)] = to
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (word_index(&w), c))
            .collect();
    };

    set([M, M], vec![([M, M], one.clone())]);
    set([P, P], vec![([P, P], one.clone())]);
    set(
        [Z, Z],
        vec![([Z, Z], one.clone()), ([P, M], c.clone()), ([M, P], -c.clone())],
    );
    set([P, M], vec![([M, P], q2.clone()), ([P, M], one_minus_q2.clone())]);
    set([M, P], vec![([P, M], one.clone())]);
    set([Z, M], vec![([M, Z], q2.clone()), ([Z, M], one_minus_q2.clone())]);
    set([M, Z], vec![([Z, M], one.clone())]);
    set([P, Z], vec![([Z, P], q2.clone()), ([P, Z], one_minus_q2.clone())]);
    set([Z, P], vec![([P, Z], one.clone())]);
    op
}

/// sigma on slots (slot, slot+1) of a degree-k tensor power, slot 1-based.
fn sigma_slot(sigma: &TensorOp, degree: usize, slot: usize) -> TensorOp {
    assert!(slot >= 1 && slot + 1 <= degree);
    let dim = 3usize.pow(degree as u32);
    let mut op = TensorOp::zero(degree);
    for j in 0..dim {
        let word = index_word(j, degree);
        let pair = [word[slot - 1], word[slot]];
        let mut out = Vec::new();
        for (img, c) in &sigma.cols[word_index(&pair)] {
            let iw = index_word(*img, 2);
            let mut nw = word.clone();
            nw[slot - 1] = iw[0];
            nw[slot] = iw[1];
            out.push((word_index(&nw), c.clone()));
        }
        op.cols[j] = out;
    }
    op
}

fn build_a3(sigma: &TensorOp) -> TensorOp {
    let s1 = sigma_slot(sigma, 3, 1);
    let s2 = sigma_slot(sigma, 3, 2);
    let id = TensorOp::identity(3);
    // (1 - s2)(1 - s1 + s1 s2)
    let inner = id.sub(&s1).add(&s1.compose(&s2));
    id.sub(&s2).compose(&inner)
}

fn build_a4(sigma: &TensorOp) -> TensorOp {
    // Inductive extension of the degree-3 pattern:
    // A(4) = (1 (x) A(3)) o (1 - s1 + s1 s2 - s1 s2 s3).
    let s1 = sigma_slot(sigma, 4, 1);
    let s2 = sigma_slot(sigma, 4, 2);
    let s3 = sigma_slot(sigma, 4, 3);
    let id = TensorOp::identity(4);
    let shifted_a3 = {
        // A(3) on slots 2..4: (1 - s3)(1 - s2 + s2 s3)
        let inner = id.sub(&s2).add(&s2.compose(&s3));
        id.sub(&s3).compose(&inner)
    };
    let tail = id
        .sub(&s1)
        .add(&s1.compose(&s2))
        .sub(&s1.compose(&s2).compose(&s3));
    shifted_a3.compose(&tail)
}

/// Derive the degree-2 rewrite table from ker(1 - sigma): every word's class
/// is expanded over the classes of the three basis words.
fn build_class2(a2: &TensorOp) -> Vec<Vec<(usize, QScalar)>> {
    let a2m = a2.to_matrix();
    let kernel = nullspace(&a2m);
    assert_eq!(kernel.len(), 6, "dim ker(1 - sigma) must be 6");
    let mut cols: Vec<Vec<QScalar>> = kernel;
    for w in BASIS2_WORDS {
        let mut e = vec![QScalar::zero(); 9];
        e[word_index(&w)] = QScalar::one();
        cols.push(e);
    }
    let a: linalg::Matrix = (0..9)
        .map(|r| (0..9).map(|c| cols[c][r].clone()).collect())
        .collect();
    (0..9)
        .map(|wi| {
            let mut b = vec![QScalar::zero(); 9];
            b[wi] = QScalar::one();
            let x = linalg::solve(&a, &b).expect("kernel + basis spans degree 2");
            (0..3)
                .filter(|&k| !x[6 + k].is_zero())
                .map(|k| (k, x[6 + k].clone()))
                .collect()
        })
        .collect()
}

/// Degree-3 classes: A(3) has rank one, so A(3)(w) = kappa_w A(3)(-+z) and
/// the class of w is kappa_w times the volume class.
fn build_class3(a3: &TensorOp) -> Vec<QScalar> {
    let base = a3.apply_column(word_index(&BASIS3_WORD));
    let (&pivot, pc) = base.support().next().expect("A(3)(-+z) is nonzero");
    (0..27)
        .map(|w| {
            let img = a3.apply_column(w);
            if img.is_zero() {
                return QScalar::zero();
            }
            let ratio = &img.coeff(pivot) / pc;
            debug_assert!(
                img.add(&base.scale(&-ratio.clone())).is_zero(),
                "A(3) image not proportional to the volume pattern"
            );
            ratio
        })
        .collect()
}

fn nullspace(m: &linalg::Matrix) -> Vec<Vec<QScalar>> {
    // Reduced row echelon, then one basis vector per free column.
    let rows = m.len();
    let cols = m[0].len();
    let mut a = m.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for j in 0..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &a[r][j] * &f;
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
        if r == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![QScalar::zero(); cols];
            v[free] = QScalar::one();
            for &(pr, pc) in &pivots {
                v[pc] = -a[pr][free].clone();
            }
            v
        })
        .collect()
}

/// The quantum commutator table, normalised so that it coincides with the
/// braided definition [X_a, X_b] = m o (1 - sigma-transpose)(X_a (x) X_b)
/// computed in U_q(su(2)); the test suite re-derives every entry from that
/// definition through the weight-module action.
fn build_structure_constants() -> StructureConstants {
    let zero3 = || [QScalar::zero(), QScalar::zero(), QScalar::zero()];
    let mut t = [
        [zero3(), zero3(), zero3()],
        [zero3(), zero3(), zero3()],
        [zero3(), zero3(), zero3()],
    ];
    let i = QScalar::i();
    let one = QScalar::one();
    let q = QScalar::q_pow(1);
    let half_1q = &(&i * &(&one + &q)) * &QScalar::from_ratio(1, 2);
    let two_q2 = &(&i * &(&QScalar::from_int(2) * &QScalar::q_pow(2))) / &(&one + &q);

    // [X-, X+] = i (2q^2/(1+q)) X_z and the antisymmetric partner
    t[M][P][Z] = two_q2.clone();
    t[P][M][Z] = -two_q2;
    // [X_z, X-] = i ((1+q)/2) X-
    t[Z][M][M] = half_1q.clone();
    t[M][Z][M] = -half_1q.clone();
    // [X+, X_z] = i ((1+q)/2) X+
    t[P][Z][P] = half_1q.clone();
    t[Z][P][P] = -half_1q;
    StructureConstants { table: t }
}

#[cfg(test)]
mod tests;
