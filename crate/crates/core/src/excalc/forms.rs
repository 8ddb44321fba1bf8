//! Tensor and exterior-form elements over the left-invariant 1-form basis.

use crate::qscalar::QScalar;
use std::collections::BTreeMap;
use std::fmt;

/// The three left-invariant 1-forms, with the fixed global ordering
/// minus < plus < z; every matrix layout in the crate derives from it
/// lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum BasisIndex {
    Minus = 0,
    Plus = 1,
    Z = 2,
}

pub const BASIS: [BasisIndex; 3] = [BasisIndex::Minus, BasisIndex::Plus, BasisIndex::Z];

impl BasisIndex {
    pub fn from_usize(i: usize) -> BasisIndex {
        BASIS[i]
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BasisIndex::Minus => "-",
            BasisIndex::Plus => "+",
            BasisIndex::Z => "z",
        }
    }
}

/// Lexicographic index of a word over {-,+,z}: the first tensor factor is
/// the most significant digit base 3.
pub fn word_index(word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &d| acc * 3 + d)
}

pub fn index_word(mut idx: usize, degree: usize) -> Vec<usize> {
    let mut w = vec![0; degree];
    for slot in (0..degree).rev() {
        w[slot] = idx % 3;
        idx /= 3;
    }
    w
}

pub fn word_symbol(word: &[usize]) -> String {
    word.iter().map(|&d| BasisIndex::from_usize(d).symbol()).collect()
}

/// Homogeneous element of the k-th tensor power of the 1-form module,
/// 0 <= k <= 4, finite support over word indices.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElement {
    pub degree: usize,
    coeffs: BTreeMap<usize, QScalar>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= 4, "tensor degree beyond 4 is not modelled");
        TensorElement { degree, coeffs: BTreeMap::new() }
    }

    pub fn word(word: &[usize], c: QScalar) -> Self {
        let mut t = TensorElement::zero(word.len());
        t.set(word_index(word), c);
        t
    }

    pub fn set(&mut self, idx: usize, c: QScalar) {
        if c.is_zero() {
            self.coeffs.remove(&idx);
        } else {
            self.coeffs.insert(idx, c);
        }
    }

    pub fn coeff(&self, idx: usize) -> QScalar {
        self.coeffs.get(&idx).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&usize, &QScalar)> {
        self.coeffs.iter()
    }

    pub fn dim(&self) -> usize {
        3usize.pow(self.degree as u32)
    }

    pub fn add(&self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.degree, rhs.degree, "mixed tensor degrees");
        let mut out = self.clone();
        for (&i, c) in &rhs.coeffs {
            out.set(i, &out.coeff(i) + c);
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> TensorElement {
        let mut out = TensorElement::zero(self.degree);
        for (&i, v) in &self.coeffs {
            out.set(i, v * c);
        }
        out
    }

    /// Concatenation (the tensor product of elements).
    pub fn tensor(&self, rhs: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.degree + rhs.degree);
        let shift = 3usize.pow(rhs.degree as u32);
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                let idx = i * shift + j;
                out.set(idx, &out.coeff(idx) + &(a * b));
            }
        }
        out
    }

    pub fn conj(&self) -> TensorElement {
        let mut out = TensorElement::zero(self.degree);
        for (&i, v) in &self.coeffs {
            out.set(i, v.conj());
        }
        out
    }

    pub fn to_dense(&self) -> Vec<QScalar> {
        let mut v = vec![QScalar::zero(); self.dim()];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }
}

/// Linear operator on a fixed tensor power, stored column-sparse:
/// `cols[j]` is the image of basis word j.
#[derive(Clone, Debug)]
pub struct TensorOp {
    pub degree: usize,
    pub cols: Vec<Vec<(usize, QScalar)>>,
}

impl TensorOp {
    pub fn identity(degree: usize) -> Self {
        let dim = 3usize.pow(degree as u32);
        TensorOp {
            degree,
            cols: (0..dim).map(|j| vec![(j, QScalar::one())]).collect(),
        }
    }

    pub fn zero(degree: usize) -> Self {
        let dim = 3usize.pow(degree as u32);
        TensorOp { degree, cols: vec![Vec::new(); dim] }
    }

    pub fn apply(&self, t: &TensorElement) -> TensorElement {
        assert_eq!(t.degree, self.degree);
        let mut out = TensorElement::zero(self.degree);
        for (&j, c) in t.support() {
            for (i, a) in &self.cols[j] {
                out.set(*i, &out.coeff(*i) + &(a * c));
            }
        }
        out
    }

    pub fn apply_column(&self, j: usize) -> TensorElement {
        let mut out = TensorElement::zero(self.degree);
        for (i, a) in &self.cols[j] {
            out.set(*i, a.clone());
        }
        out
    }

    /// self o rhs (rhs applied first).
    pub fn compose(&self, rhs: &TensorOp) -> TensorOp {
        assert_eq!(self.degree, rhs.degree);
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, QScalar> = BTreeMap::new();
                for (mid, c) in col {
                    for (i, a) in &self.cols[*mid] {
                        let e = acc.entry(*i).or_insert_with(QScalar::zero);
                        *e = &*e + &(a * c);
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        TensorOp { degree: self.degree, cols }
    }

    pub fn add(&self, rhs: &TensorOp) -> TensorOp {
        assert_eq!(self.degree, rhs.degree);
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, QScalar> = BTreeMap::new();
                for (i, c) in a.iter().chain(b) {
                    let e = acc.entry(*i).or_insert_with(QScalar::zero);
                    *e = &*e + c;
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        TensorOp { degree: self.degree, cols }
    }

    pub fn sub(&self, rhs: &TensorOp) -> TensorOp {
        self.add(&rhs.scale(&-QScalar::one()))
    }

    pub fn scale(&self, c: &QScalar) -> TensorOp {
        TensorOp {
            degree: self.degree,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, a)| (*i, a * c)).collect())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Dense matrix M with M[i][j] = coefficient of word i in the image of
    /// word j.
    pub fn to_matrix(&self) -> crate::linalg::Matrix {
        let dim = self.cols.len();
        let mut m = vec![vec![QScalar::zero(); dim]; dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                m[*i][j] = c.clone();
            }
        }
        m
    }
}

/// Number of basis elements of the exterior quotient in each degree.
pub const LAMBDA_DIMS: [usize; 4] = [1, 3, 3, 1];

/// Representative tensor word for each exterior basis element: degree-2
/// classes are the classes of the listed words, the volume class is the
/// class of the word -+z.
pub const BASIS2_WORDS: [[usize; 2]; 3] = [[0, 1], [1, 2], [2, 0]];
pub const BASIS3_WORD: [usize; 3] = [0, 1, 2];

pub fn basis2_symbol(i: usize) -> &'static str {
    ["-+", "+z", "z-"][i]
}

/// Element of the exterior quotient Lambda^k, k = 0..3, over the fixed basis
/// 1; w-, w+, wz; w-^w+, w+^wz, wz^w-; w-^w+^wz.
#[derive(Clone, PartialEq, Debug)]
pub struct FormElement {
    pub degree: usize,
    coeffs: BTreeMap<usize, QScalar>,
}

impl FormElement {
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= 3, "exterior degree beyond 3");
        FormElement { degree, coeffs: BTreeMap::new() }
    }

    pub fn unit() -> Self {
        FormElement::basis(0, 0)
    }

    pub fn one_form(b: BasisIndex) -> Self {
        FormElement::basis(1, b as usize)
    }

    pub fn basis(degree: usize, idx: usize) -> Self {
        assert!(idx < LAMBDA_DIMS[degree]);
        let mut f = FormElement::zero(degree);
        f.set(idx, QScalar::one());
        f
    }

    pub fn set(&mut self, idx: usize, c: QScalar) {
        assert!(idx < LAMBDA_DIMS[self.degree]);
        if c.is_zero() {
            self.coeffs.remove(&idx);
        } else {
            self.coeffs.insert(idx, c);
        }
    }

    pub fn coeff(&self, idx: usize) -> QScalar {
        self.coeffs.get(&idx).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&usize, &QScalar)> {
        self.coeffs.iter()
    }

    pub fn add(&self, rhs: &FormElement) -> FormElement {
        assert_eq!(self.degree, rhs.degree, "mixed form degrees");
        let mut out = self.clone();
        for (&i, c) in &rhs.coeffs {
            out.set(i, &out.coeff(i) + c);
        }
        out
    }

    pub fn sub(&self, rhs: &FormElement) -> FormElement {
        self.add(&rhs.scale(&-QScalar::one()))
    }

    pub fn scale(&self, c: &QScalar) -> FormElement {
        let mut out = FormElement::zero(self.degree);
        for (&i, v) in &self.coeffs {
            out.set(i, v * c);
        }
        out
    }

    pub fn basis_symbol(degree: usize, idx: usize) -> String {
        match degree {
            0 => "1".to_string(),
            1 => BasisIndex::from_usize(idx).symbol().to_string(),
            2 => basis2_symbol(idx).to_string(),
            _ => "-+z".to_string(),
        }
    }

    /// JSON value {"degree": k, "coeffs": {"basis-word": "qscalar"}}.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (&i, c) in &self.coeffs {
            map.insert(
                FormElement::basis_symbol(self.degree, i),
                serde_json::Value::String(c.to_string()),
            );
        }
        serde_json::json!({ "degree": self.degree, "coeffs": map })
    }
}

impl fmt::Display for FormElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&i, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) {}", c, FormElement::basis_symbol(self.degree, i))?;
        }
        Ok(())
    }
}
