//! The finite dimensional algebra `A = k<X,Y> / (X^a, XY - qYX, Y^b)` with
//! its monomial basis `{y^i x^j : 0 <= i < b, 0 <= j < a}`, diagonal
//! automorphisms, the Frobenius form, and the center.
//!
//! The basis ordering `(i, j) -> i*a + j` is fixed here once and inherited by
//! every matrix in every other module.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::Matrix;
use crate::scalar::{q_power, FieldDescriptor, FieldError, Scalar};

/// Parameters `(a, b, q)` of the algebra, together with its coefficient field.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraParams {
    a: usize,
    b: usize,
    q: Scalar,
    field: FieldDescriptor,
    // nonnegative powers of q up to (a-1)(b-1), the largest exponent
    // multiplication can produce
    q_powers: Vec<Scalar>,
}

/// Errors from invalid algebra parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamError {
    ExponentTooSmall(usize),
    ZeroCommutator,
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::ExponentTooSmall(e) => {
                write!(f, "exponents a, b must be at least 2, got {e}")
            }
            ParamError::ZeroCommutator => write!(f, "the commutator q must be nonzero"),
        }
    }
}

impl AlgebraParams {
    pub fn new(a: usize, b: usize, q: Scalar) -> Result<AlgebraParams, ParamError> {
        if a < 2 {
            return Err(ParamError::ExponentTooSmall(a));
        }
        if b < 2 {
            return Err(ParamError::ExponentTooSmall(b));
        }
        if q.is_zero() {
            return Err(ParamError::ZeroCommutator);
        }
        let field = q.descriptor();
        let mut q_powers = Vec::with_capacity((a - 1) * (b - 1) + 1);
        q_powers.push(Scalar::one(&field));
        for _ in 0..(a - 1) * (b - 1) {
            q_powers.push(&q_powers[q_powers.len() - 1] * &q);
        }
        Ok(AlgebraParams {
            a,
            b,
            q,
            field,
            q_powers,
        })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    /// `dim_k A = ab`.
    pub fn dim(&self) -> usize {
        self.a * self.b
    }

    /// `q^e` for any integer `e` (small nonnegative exponents hit a table).
    pub fn q_pow(&self, e: i64) -> Scalar {
        if e >= 0 && (e as usize) < self.q_powers.len() {
            return self.q_powers[e as usize].clone();
        }
        q_power(&self.q, e).expect("q is nonzero by construction")
    }

    /// Index of the basis monomial `y^i x^j`.
    pub fn basis_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.b && j < self.a);
        i * self.a + j
    }

    /// Inverse of [`AlgebraParams::basis_index`]: the `(i, j)` of `y^i x^j`.
    pub fn basis_exponents(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.dim());
        (index / self.a, index % self.a)
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement {
            coeffs: vec![Scalar::zero(&self.field); self.dim()],
        }
    }

    pub fn one_element(&self) -> AlgebraElement {
        self.basis_element(0, 0)
    }

    /// The monomial `y^i x^j` as an element.
    pub fn basis_element(&self, i: usize, j: usize) -> AlgebraElement {
        let mut e = self.zero_element();
        e.coeffs[self.basis_index(i, j)] = Scalar::one(&self.field);
        e
    }

    /// `y^{b-1} x^{a-1}`, the socle generator.
    pub fn socle_element(&self) -> AlgebraElement {
        self.basis_element(self.b - 1, self.a - 1)
    }

    /// Product of two basis monomials:
    /// `(y^i x^j)(y^u x^v) = q^{j*u} y^{i+u} x^{j+v}`, or `None` when a power
    /// of `x` or `y` overflows and the product is zero.
    pub fn monomial_product(
        &self,
        (i, j): (usize, usize),
        (u, v): (usize, usize),
    ) -> Option<((usize, usize), Scalar)> {
        if i + u >= self.b || j + v >= self.a {
            return None;
        }
        Some(((i + u, j + v), self.q_pow((j * u) as i64)))
    }

    /// Bilinear extension of the monomial product.
    pub fn multiply(&self, lhs: &AlgebraElement, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(lhs.coeffs.len(), self.dim(), "algebra parameter mismatch");
        assert_eq!(rhs.coeffs.len(), self.dim(), "algebra parameter mismatch");
        let mut out = self.zero_element();
        for (li, lc) in lhs.coeffs.iter().enumerate() {
            if lc.is_zero() {
                continue;
            }
            let lm = self.basis_exponents(li);
            for (ri, rc) in rhs.coeffs.iter().enumerate() {
                if rc.is_zero() {
                    continue;
                }
                let rm = self.basis_exponents(ri);
                if let Some(((i, j), scale)) = self.monomial_product(lm, rm) {
                    let idx = self.basis_index(i, j);
                    out.coeffs[idx] = &out.coeffs[idx] + &(&(lc * rc) * &scale);
                }
            }
        }
        out
    }

    /// Applies a diagonal automorphism: the coefficient of `y^i x^j` is
    /// scaled by `beta^i alpha^j`.
    pub fn apply_automorphism(
        &self,
        psi: &DiagonalAutomorphism,
        u: &AlgebraElement,
    ) -> AlgebraElement {
        let mut out = self.zero_element();
        for (idx, c) in u.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = self.basis_exponents(idx);
            out.coeffs[idx] = c * &psi.monomial_scale(i, j);
        }
        out
    }

    /// The coefficient of `y^{b-1} x^{a-1}`, i.e. the Frobenius form
    /// evaluated at the element.
    pub fn frobenius_coefficient(&self, u: &AlgebraElement) -> Scalar {
        u.coeffs[self.basis_index(self.b - 1, self.a - 1)].clone()
    }

    /// The Nakayama automorphism `x -> q^{1-b} x`, `y -> q^{a-1} y`.
    pub fn nakayama(&self) -> DiagonalAutomorphism {
        DiagonalAutomorphism::new(self.q_pow(1 - self.b as i64), self.q_pow(self.a as i64 - 1))
            .expect("powers of a nonzero scalar are nonzero")
    }

    /// A basis of the center `{w : wz = zw for all z}`, computed by solving
    /// the commutation system over the coefficient field.
    pub fn center_basis(&self) -> Vec<AlgebraElement> {
        let dim = self.dim();
        // rows: (basis element z, output coordinate); columns: coefficients of w
        let mut m = Matrix::zeros(dim * dim, dim, &self.field);
        for z_idx in 0..dim {
            let zm = self.basis_exponents(z_idx);
            for w_idx in 0..dim {
                let wm = self.basis_exponents(w_idx);
                if let Some(((i, j), c)) = self.monomial_product(wm, zm) {
                    let row = z_idx * dim + self.basis_index(i, j);
                    let updated = m.at(row, w_idx) + &c;
                    *m.at_mut(row, w_idx) = updated;
                }
                if let Some(((i, j), c)) = self.monomial_product(zm, wm) {
                    let row = z_idx * dim + self.basis_index(i, j);
                    let updated = m.at(row, w_idx) - &c;
                    *m.at_mut(row, w_idx) = updated;
                }
            }
        }
        m.kernel_basis()
            .into_iter()
            .map(|coeffs| AlgebraElement { coeffs })
            .collect()
    }

    /// Renders an element in the textual format `c + c*y^i*x^j + ...`,
    /// in basis order.
    pub fn format_element(&self, u: &AlgebraElement) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (idx, c) in u.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i, j) = self.basis_exponents(idx);
            let mut term = c.to_string();
            if term.contains('/') || term.contains(' ') {
                term = alloc::format!("({term})");
            }
            if i > 0 {
                term.push_str(&alloc::format!("*y^{i}"));
            }
            if j > 0 {
                term.push_str(&alloc::format!("*x^{j}"));
            }
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Exhaustive basis-pair check of the Nakayama identity
/// `frob(z*w) = frob(nu(w)*z)` (the elementwise form of
/// `w.phi(1) = phi(1).nu(w)`), plus nondegeneracy of the Frobenius pairing.
pub fn verify_nakayama_frobenius(params: &AlgebraParams) -> crate::check::CheckReport {
    use crate::check::{Check, CheckReport};
    let mut report = CheckReport::new();
    let ab = params.dim();
    let nu = params.nakayama();
    let mut pairing = Matrix::zeros(ab, ab, params.field());
    let mut identity_holds = true;
    for wi in 0..ab {
        let (i, j) = params.basis_exponents(wi);
        let w = params.basis_element(i, j);
        let nu_w = params.apply_automorphism(&nu, &w);
        for zi in 0..ab {
            let (i, j) = params.basis_exponents(zi);
            let z = params.basis_element(i, j);
            let lhs = params.frobenius_coefficient(&params.multiply(&z, &w));
            let rhs = params.frobenius_coefficient(&params.multiply(&nu_w, &z));
            identity_holds &= lhs == rhs;
            *pairing.at_mut(zi, wi) = lhs;
        }
    }
    report.push(Check::boolean(
        "Nakayama identity frob(zw) = frob(nu(w)z) on all basis pairs",
        identity_holds,
    ));
    report.push(Check::compare("Frobenius pairing rank", ab, pairing.rank()));
    report
}

/// An element of `A` as a dense coefficient vector over the monomial basis.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> AlgebraElement {
        AlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &Scalar {
        &self.coeffs[index]
    }

    pub fn set_coeff(&mut self, index: usize, value: Scalar) {
        self.coeffs[index] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        AlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        AlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// The automorphism `x -> alpha*x`, `y -> beta*y`. The Nakayama automorphism
/// is the instance `(q^{1-b}, q^{a-1})`; the identity is `(1, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalAutomorphism {
    alpha: Scalar,
    beta: Scalar,
}

impl DiagonalAutomorphism {
    pub fn new(alpha: Scalar, beta: Scalar) -> Result<DiagonalAutomorphism, FieldError> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(FieldError::ZeroBase);
        }
        Ok(DiagonalAutomorphism { alpha, beta })
    }

    pub fn identity(field: &FieldDescriptor) -> DiagonalAutomorphism {
        DiagonalAutomorphism {
            alpha: Scalar::one(field),
            beta: Scalar::one(field),
        }
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_one()
    }

    /// `psi(y^i x^j) = beta^i alpha^j y^i x^j`; this is that scalar.
    pub fn monomial_scale(&self, i: usize, j: usize) -> Scalar {
        let bi = self.beta.pow(i as i64).expect("beta nonzero");
        let aj = self.alpha.pow(j as i64).expect("alpha nonzero");
        &bi * &aj
    }
}
