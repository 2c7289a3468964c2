//! Tensors the resolution with coefficient modules, produces induced
//! matrices over the coefficient field, and assembles Hochschild homology
//! and cohomology dimension tables from exact rank computations.
//!
//! Two independent routes produce the twisted complexes: [`induce`] tensors
//! the actual differential matrices, while [`delta_formula`] builds the maps
//! from their closed-form action on basis vectors (the scalars `K_1..K_4`).
//! [`cross_check`] compares the two entrywise.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraParams, DiagonalAutomorphism};
use crate::check::{Check, CheckReport};
use crate::matrix::Matrix;
use crate::resolution::differential;
use crate::scalar::Scalar;

/// Which coefficient module the resolution is tensored with.
#[derive(Debug, Clone, PartialEq)]
pub enum TwistSpec {
    /// `P (x)_A k`: the right `A^op` factor dies under the augmentation.
    TrivialK,
    /// `psi_A_1 (x)_{A^e} P` with the action `u.(w1 (x) w2) = psi(w2) u w1`.
    /// The identity computes homology; the Nakayama twist computes
    /// cohomology dimensions.
    Bimodule(DiagonalAutomorphism),
    /// `Hom_{A^e}(P, A)` with the action `u -> w1 u w2`, stored transposed
    /// so that every variant shares one matrix shape.
    HomIntoA,
}

impl TwistSpec {
    pub fn name(&self, params: &AlgebraParams) -> String {
        match self {
            TwistSpec::TrivialK => String::from("trivial_k"),
            TwistSpec::Bimodule(psi) => {
                if psi.is_identity() {
                    String::from("bimodule(identity)")
                } else if *psi == params.nakayama() {
                    String::from("bimodule(nakayama)")
                } else {
                    format!("bimodule({},{})", psi.alpha(), psi.beta())
                }
            }
            TwistSpec::HomIntoA => String::from("hom_into_A"),
        }
    }
}

/// A differential after tensoring with a coefficient module: a dense matrix
/// over the field with `ab*n` rows and `ab*(n+1)` columns. Coordinates are
/// `(generator index, algebra basis index)`, column-major by generator.
#[derive(Debug, Clone)]
pub struct InducedMap {
    degree: usize,
    matrix: Matrix,
    block: usize,
}

impl InducedMap {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Splits a column index into `(generator index, algebra basis index)`.
    pub fn col_label(&self, col: usize) -> (usize, usize) {
        (col / self.block, col % self.block)
    }

    /// Exact rank by Gaussian elimination over the coefficient field.
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `dim ker = ab*(n+1) - rank`, by rank-nullity on the stored shape.
    pub fn kernel_dim(&self) -> usize {
        self.matrix.cols() - self.rank()
    }
}

/// Tensors `d_n` with the coefficient module named by `twist`.
pub fn induce(params: &AlgebraParams, twist: &TwistSpec, n: usize) -> InducedMap {
    assert!(n >= 1);
    let ab = params.dim();
    let d = differential(params, n);
    let mut m = Matrix::zeros(ab * n, ab * (n + 1), params.field());
    for col_gen in 0..=n {
        for row_gen in 0..n {
            let entry = d.entry(row_gen, col_gen);
            if entry.is_zero() {
                continue;
            }
            // for trivial_k the whole entry collapses to one algebra element
            // acting by left multiplication
            let collapsed = match twist {
                TwistSpec::TrivialK => Some(entry.augment_right(params)),
                _ => None,
            };
            for p in 0..ab {
                let (i, j) = params.basis_exponents(p);
                let basis = params.basis_element(i, j);
                let image = match twist {
                    TwistSpec::TrivialK => params.multiply(collapsed.as_ref().unwrap(), &basis),
                    TwistSpec::Bimodule(psi) => entry.act_twisted(params, psi, &basis),
                    TwistSpec::HomIntoA => entry.act_left(params, &basis),
                };
                for (target, c) in image.coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    match twist {
                        // chain direction: rows are target coordinates
                        TwistSpec::TrivialK | TwistSpec::Bimodule(_) => {
                            let row = row_gen * ab + target;
                            let col = col_gen * ab + p;
                            let updated = m.at(row, col) + c;
                            *m.at_mut(row, col) = updated;
                        }
                        // cochain direction, stored transposed: the source
                        // coordinate (row_gen, p) indexes the row
                        TwistSpec::HomIntoA => {
                            let row = row_gen * ab + p;
                            let col = col_gen * ab + target;
                            let updated = m.at(row, col) + c;
                            *m.at_mut(row, col) = updated;
                        }
                    }
                }
            }
        }
    }
    InducedMap {
        degree: n,
        matrix: m,
        block: ab,
    }
}

/// The geometric-type scalars `K_1..K_4` of the twisted complexes.
///
/// Panics when the parity constraints are violated (a non-integral exponent
/// signals a parity bug upstream).
pub fn k_scalar(
    params: &AlgebraParams,
    index: u8,
    psi: &DiagonalAutomorphism,
    t: i64,
    i: i64,
    u: i64,
    v: i64,
) -> Scalar {
    let (a, b) = (params.a() as i64, params.b() as i64);
    let field = params.field();
    let half = |num: i64| -> i64 {
        assert!(num % 2 == 0, "K_{index} exponent {num}/2 is not integral");
        num / 2
    };
    let mut acc = Scalar::zero(field);
    match index {
        1 => {
            let m = half(a * i + 2 * v);
            for j in 0..b {
                let term = &params.q_pow(j * m) * &psi.beta().pow(b - 1 - j).unwrap();
                acc = &acc + &term;
            }
        }
        2 => {
            let m = half(2 * b * t - b * i + 2 * u);
            for j in 0..a {
                let term = &params.q_pow(j * m) * &psi.alpha().pow(j).unwrap();
                acc = &acc + &term;
            }
        }
        3 => {
            let m = half(2 * b * t - b * i + 2 + 2 * u);
            for j in 0..a {
                let term = &params.q_pow(j * m) * &psi.alpha().pow(j).unwrap();
                acc = &acc + &term;
            }
        }
        4 => {
            let m = half(a * i - a + 2 + 2 * v);
            for j in 0..b {
                let term = &params.q_pow(j * m) * &psi.beta().pow(b - 1 - j).unwrap();
                acc = &acc + &term;
            }
        }
        _ => panic!("K index must be 1..=4"),
    }
    acc
}

/// Builds `delta^psi_n` directly from its closed-form action on the basis
/// vectors `y^u x^v e^n_i`, independently of [`differential`].
///
/// The minus sign on the `K_4` term carries over from the `-gamma_2` term of
/// the odd total differential.
pub fn delta_formula(params: &AlgebraParams, psi: &DiagonalAutomorphism, n: usize) -> InducedMap {
    assert!(n >= 1);
    let ab = params.dim();
    let (a, b) = (params.a() as i64, params.b() as i64);
    let field = params.field();
    let mut m = Matrix::zeros(ab * n, ab * (n + 1), field);
    let add_term = |mat: &mut Matrix, gen: usize, uu: i64, vv: i64, col: usize, coeff: &Scalar| {
        if coeff.is_zero() || uu >= b || vv >= a {
            return;
        }
        let row = gen * ab + params.basis_index(uu as usize, vv as usize);
        let updated = mat.at(row, col) + coeff;
        *mat.at_mut(row, col) = updated;
    };
    for i in 0..=n {
        let ii = i as i64;
        for u in 0..b {
            for v in 0..a {
                let col = i * ab + params.basis_index(u as usize, v as usize);
                if n.is_multiple_of(2) {
                    let t = (n / 2) as i64;
                    if i % 2 == 0 {
                        if i < n {
                            let k1 = k_scalar(params, 1, psi, t, ii, u, v);
                            add_term(&mut m, i, u + b - 1, v, col, &k1);
                        }
                        if i >= 1 {
                            let k2 = k_scalar(params, 2, psi, t, ii, u, v);
                            add_term(&mut m, i - 1, u, v + a - 1, col, &k2);
                        }
                    } else {
                        let e1 = (a * ii - a + 2 + 2 * v) / 2;
                        let c1 = &params.q_pow(e1) - psi.beta();
                        add_term(&mut m, i, u + 1, v, col, &c1);
                        let e2 = (2 * b * t - b * ii - b + 2 + 2 * u) / 2;
                        let c2 = &(psi.alpha() * &params.q_pow(e2)) - &Scalar::one(field);
                        add_term(&mut m, i - 1, u, v + 1, col, &c2);
                    }
                } else {
                    let t = ((n - 1) / 2) as i64;
                    if i % 2 == 0 {
                        let e1 = (a * ii + 2 * v) / 2;
                        let c1 = psi.beta() - &params.q_pow(e1);
                        add_term(&mut m, i, u + 1, v, col, &c1);
                        if i >= 1 {
                            let k3 = k_scalar(params, 3, psi, t, ii, u, v);
                            add_term(&mut m, i - 1, u, v + a - 1, col, &k3);
                        }
                    } else {
                        if i < n {
                            let k4 = k_scalar(params, 4, psi, t, ii, u, v);
                            add_term(&mut m, i, u + b - 1, v, col, &(-&k4));
                        }
                        let e2 = (2 * b * t - b * ii + b + 2 * u) / 2;
                        let c2 = &(psi.alpha() * &params.q_pow(e2)) - &Scalar::one(field);
                        add_term(&mut m, i - 1, u, v + 1, col, &c2);
                    }
                }
            }
        }
    }
    InducedMap {
        degree: n,
        matrix: m,
        block: ab,
    }
}

/// Per-degree record of a dimension table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRecord {
    pub n: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub homology_dim: usize,
}

/// Homology (or cohomology) dimensions per degree for one twist.
#[derive(Debug, Clone)]
pub struct DimensionReport {
    pub twist: TwistSpec,
    pub degrees: Vec<DegreeRecord>,
}

impl DimensionReport {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.homology_dim).collect()
    }
}

/// Assembles the dimension table for degrees `0..=n_max`.
///
/// With `twist = Bimodule(identity)` the table is `dim HH_n(A)`; with
/// `Bimodule(nakayama)` or `HomIntoA` it is `dim HH^n(A)`.
pub fn homology_dims(params: &AlgebraParams, twist: &TwistSpec, n_max: usize) -> DimensionReport {
    let ranks: Vec<usize> = (1..=n_max + 1)
        .map(|n| induce(params, twist, n).rank())
        .collect();
    dims_from_ranks(params, twist, &ranks)
}

/// Builds the table from precomputed ranks, `ranks[i]` being the rank of the
/// induced map at degree `i + 1`. Degrees are independent, so callers may
/// compute the ranks concurrently.
pub fn dims_from_ranks(
    params: &AlgebraParams,
    twist: &TwistSpec,
    ranks: &[usize],
) -> DimensionReport {
    assert!(!ranks.is_empty());
    let n_max = ranks.len() - 1;
    let ab = params.dim();
    let rank_at = |n: usize| ranks[n - 1];
    let mut degrees = Vec::with_capacity(n_max + 1);
    degrees.push(DegreeRecord {
        n: 0,
        kernel_dim: ab,
        image_dim: 0,
        homology_dim: ab - rank_at(1),
    });
    for n in 1..=n_max {
        let kernel_dim = ab * (n + 1) - rank_at(n);
        degrees.push(DegreeRecord {
            n,
            kernel_dim,
            image_dim: rank_at(n),
            homology_dim: kernel_dim - rank_at(n + 1),
        });
    }
    DimensionReport {
        twist: twist.clone(),
        degrees,
    }
}

/// Compares computed kernel dimensions with the closed forms from both
/// theorem proofs, for the identity and Nakayama twists, degrees `1..=n_max`.
/// The closed forms presuppose that `q` is not a root of unity.
pub fn verify_kernel_ledger(params: &AlgebraParams, n_max: usize) -> CheckReport {
    let mut report = CheckReport::new();
    let identity = TwistSpec::Bimodule(DiagonalAutomorphism::identity(params.field()));
    let nakayama = TwistSpec::Bimodule(params.nakayama());
    for n in 1..=n_max {
        report.push(Check::compare(
            format!("dim ker delta^1_{n}"),
            expected_kernel_dim_identity(params, n),
            induce(params, &identity, n).kernel_dim(),
        ));
        report.push(Check::compare(
            format!("dim ker delta^nu_{n}"),
            expected_kernel_dim_nakayama(params, n),
            induce(params, &nakayama, n).kernel_dim(),
        ));
    }
    report
}

/// The closed-form image dimension of `\hat d_n` (the trivial coefficients):
/// `t*ab + 1` for `n = 2t` and `(t+1)*ab - 1` for `n = 2t+1`.
pub fn expected_trivial_image_dim(params: &AlgebraParams, n: usize) -> usize {
    let ab = params.dim();
    let t = n / 2;
    if n.is_multiple_of(2) {
        t * ab + 1
    } else {
        (t + 1) * ab - 1
    }
}

/// Closed-form cohomology dimensions (q not a root of unity): 2, 2, 1, 0, ...
pub fn expected_cohomology_dim(n: usize) -> usize {
    match n {
        0 | 1 => 2,
        2 => 1,
        _ => 0,
    }
}

/// Closed-form homology dimensions (q not a root of unity), by whether the
/// characteristic divides `a` and/or `b`.
pub fn expected_homology_dim(params: &AlgebraParams, n: usize) -> usize {
    let (a, b) = (params.a(), params.b());
    if n == 0 {
        return a + b - 1;
    }
    let p = params.field().characteristic() as usize;
    let div_a = p != 0 && a % p == 0;
    let div_b = p != 0 && b % p == 0;
    match (div_a, div_b) {
        (true, true) => a + b,
        (false, false) => a + b - 2,
        _ => a + b - 1,
    }
}

/// Closed-form `dim ker delta^1_n` (identity twist, q not a root of unity).
pub fn expected_kernel_dim_identity(params: &AlgebraParams, n: usize) -> usize {
    let (a, b) = (params.a(), params.b());
    let ab = a * b;
    let p = params.field().characteristic() as usize;
    let div_a = p != 0 && a % p == 0;
    let div_b = p != 0 && b % p == 0;
    let t = n / 2;
    if n.is_multiple_of(2) {
        match (div_a, div_b) {
            (false, false) => ab * t + ab - 1,
            (true, true) => ab * t + ab + 1,
            _ => ab * t + ab,
        }
    } else {
        ab * t + ab + a + b - 1
    }
}

/// Closed-form `dim ker delta^nu_n` (Nakayama twist, q not a root of unity);
/// independent of the characteristic.
pub fn expected_kernel_dim_nakayama(params: &AlgebraParams, n: usize) -> usize {
    let ab = params.dim();
    let t = n / 2;
    if n.is_multiple_of(2) {
        if t == 1 {
            2 * ab
        } else {
            ab * t + ab - 1
        }
    } else if t == 0 {
        ab + 2
    } else {
        ab * t + ab + 1
    }
}

/// Checks exactness of `P (x)_A k`: consecutive ranks are complementary and
/// every rank matches the closed-form image dimension.
pub fn verify_exactness(params: &AlgebraParams, n_max: usize) -> CheckReport {
    assert!(n_max >= 2);
    let ab = params.dim();
    let ranks: Vec<usize> = (1..=n_max)
        .map(|n| induce(params, &TwistSpec::TrivialK, n).rank())
        .collect();
    let mut report = CheckReport::new();
    for n in 1..n_max {
        report.push(Check::compare(
            format!(
                "exactness: rank(d_{}) + rank(d_{}) = {}*{}",
                n + 1,
                n,
                ab,
                n + 1
            ),
            ab * (n + 1),
            ranks[n] + ranks[n - 1],
        ));
    }
    for n in 1..=n_max {
        report.push(Check::compare(
            format!("image dimension of d_{n} over k"),
            expected_trivial_image_dim(params, n),
            ranks[n - 1],
        ));
    }
    report
}

/// Compares the tensored-resolution route with the closed-form route for a
/// diagonal twist: equal ranks, equal kernel dimensions, and entrywise
/// equality under the fixed identification of `psi_A_1 (x) A^e f^n_i` with
/// `A e^n_i`.
pub fn cross_check(
    params: &AlgebraParams,
    psi: &DiagonalAutomorphism,
    n_max: usize,
) -> CheckReport {
    let mut report = CheckReport::new();
    for n in 1..=n_max {
        let via_resolution = induce(params, &TwistSpec::Bimodule(psi.clone()), n);
        let via_formula = delta_formula(params, psi, n);
        report.push(Check::compare(
            format!("rank agreement at degree {n}"),
            via_formula.rank(),
            via_resolution.rank(),
        ));
        report.push(Check::compare(
            format!("kernel agreement at degree {n}"),
            via_formula.kernel_dim(),
            via_resolution.kernel_dim(),
        ));
        let mut mismatch = None;
        'outer: for r in 0..via_resolution.matrix().rows() {
            for c in 0..via_resolution.matrix().cols() {
                if via_resolution.matrix().at(r, c) != via_formula.matrix().at(r, c) {
                    let (gen, basis) = via_resolution.col_label(c);
                    let (bu, bv) = params.basis_exponents(basis);
                    mismatch = Some(format!(
                        "degree {n}, generator e_{gen}, basis y^{bu}x^{bv}: \
                         resolution gives {}, formula gives {}",
                        via_resolution.matrix().at(r, c),
                        via_formula.matrix().at(r, c)
                    ));
                    break 'outer;
                }
            }
        }
        report.push(Check {
            name: format!("entrywise agreement at degree {n}"),
            pass: mismatch.is_none(),
            expected: String::from("identical matrices"),
            actual: mismatch.unwrap_or_else(|| String::from("identical matrices")),
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{FieldDescriptor, Scalar};

    const Q: FieldDescriptor = FieldDescriptor::Rational;

    fn params(a: usize, b: usize, q: i64) -> AlgebraParams {
        AlgebraParams::new(a, b, Scalar::from_i64(q, &Q)).unwrap()
    }

    fn f2t_params(a: usize, b: usize) -> AlgebraParams {
        let f2t = FieldDescriptor::RationalFunctionsPrime(2);
        AlgebraParams::new(a, b, Scalar::variable(&f2t).unwrap()).unwrap()
    }

    #[test]
    fn trivial_k_degree_one() {
        let p = params(2, 2, 2);
        let m = induce(&p, &TwistSpec::TrivialK, 1);
        // \hat d_1 sends e_0 to -y.e'_0 and e_1 to -x.e'_0; its image is the
        // radical of A, of dimension ab - 1 = (t+1)ab - 1 at t = 0
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank(), expected_trivial_image_dim(&p, 1));
    }

    #[test]
    fn identity_twist_degree_one() {
        let p = params(2, 2, 2);
        let m = induce(
            &p,
            &TwistSpec::Bimodule(DiagonalAutomorphism::identity(&Q)),
            1,
        );
        // ker delta^1_1 = ab + a + b - 1 (the t = 0 case of the odd formula);
        // the image is the commutator subspace [A, A]
        assert_eq!(m.kernel_dim(), 7);
        assert_eq!(m.kernel_dim(), expected_kernel_dim_identity(&p, 1));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nakayama_twist_degree_one() {
        for (a, b) in [(2usize, 2usize), (2, 3), (3, 3)] {
            let p = params(a, b, 2);
            let m = induce(&p, &TwistSpec::Bimodule(p.nakayama()), 1);
            assert_eq!(m.kernel_dim(), a * b + 2);
        }
    }

    #[test]
    fn k_scalar_values() {
        let p = params(2, 3, 2);
        let id = DiagonalAutomorphism::identity(&Q);
        // K_1^1 with i = 0, v = 0 degenerates to b summands of 1
        assert_eq!(k_scalar(&p, 1, &id, 1, 0, 0, 0), Scalar::from_i64(3, &Q));
        // generic arguments: geometric sums in powers of q are nonzero
        assert!(!k_scalar(&p, 1, &id, 1, 2, 0, 1).is_zero());
        assert!(!k_scalar(&p, 2, &id, 1, 2, 1, 0).is_zero());
    }

    #[test]
    #[should_panic(expected = "not integral")]
    fn k_scalar_rejects_parity_violations() {
        // K_1 needs a*i + 2*v even; an odd generator index breaks it when a
        // is odd
        let p = params(3, 2, 2);
        let id = DiagonalAutomorphism::identity(&Q);
        k_scalar(&p, 1, &id, 1, 1, 0, 0);
    }

    #[test]
    fn k1_vanishing_characterization() {
        // over F_2(t) with b = 2: K_1^1 = 0 exactly when i = 0 and v = 0
        let p = f2t_params(3, 2);
        let id = DiagonalAutomorphism::identity(p.field());
        for t in 1..3 {
            for i in (0..=2 * t).step_by(2) {
                for u in 0..2 {
                    for v in 0..3 {
                        let k1 = k_scalar(&p, 1, &id, t, i, u, v);
                        assert_eq!(k1.is_zero(), i == 0 && v == 0, "t={t} i={i} u={u} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn k3_nakayama_nonzero_away_from_characteristic() {
        // K_3^nu never vanishes when char k does not divide a
        let p = params(3, 2, 2);
        let nu = p.nakayama();
        for t in 0..3i64 {
            for i in (0..=2 * t + 1).step_by(2) {
                for u in 0..2 {
                    for v in 0..3 {
                        assert!(!k_scalar(&p, 3, &nu, t, i, u, v).is_zero());
                    }
                }
            }
        }
        // but in char p | a it vanishes at i = 2t, u = b-2: the sum
        // degenerates to a summands of 1. The kernel dimensions are
        // unaffected (that basis vector still maps to a nonzero single
        // term), which the kernel-ledger tests confirm.
        let p = f2t_params(2, 3);
        let nu = p.nakayama();
        assert!(k_scalar(&p, 3, &nu, 1, 2, 1, 0).is_zero());
    }

    #[test]
    fn delta_formula_coefficients() {
        // identity twist, even degree, odd column: first coefficient is
        // q^{(ai-a+2+2v)/2} - 1
        let p = params(2, 2, 2);
        let ab = p.dim();
        let id = DiagonalAutomorphism::identity(&Q);
        let m = delta_formula(&p, &id, 2);
        // i = 1, u = 0, v = 0: target y^1 x^0 at generator 1, coefficient
        // q^{(a-a+2)/2} - 1 = q - 1 = 1
        let col = ab + p.basis_index(0, 0);
        let row = ab + p.basis_index(1, 0);
        assert_eq!(*m.matrix().at(row, col), Scalar::from_i64(1, &Q));

        // nu twist, odd degree, even column: first coefficient is
        // q^{a-1} - q^{(ai+2v)/2}
        let nu = p.nakayama();
        let m = delta_formula(&p, &nu, 3);
        // n = 3, i = 2, u = 0, v = 0: coefficient q^{a-1} - q^{ai/2} = 2 - 4
        let col = 2 * ab + p.basis_index(0, 0);
        let row = 2 * ab + p.basis_index(1, 0);
        assert_eq!(*m.matrix().at(row, col), Scalar::from_i64(-2, &Q));
    }

    #[test]
    fn boundary_convention_respected() {
        // no term may target a generator outside 0..n-1
        let p = params(2, 3, 2);
        let id = DiagonalAutomorphism::identity(&Q);
        for n in 1..=4 {
            let m = delta_formula(&p, &id, n);
            assert_eq!(m.matrix().rows(), p.dim() * n);
            assert_eq!(m.matrix().cols(), p.dim() * (n + 1));
        }
    }

    #[test]
    fn homology_table_rationals() {
        let p = params(2, 2, 2);
        let id = TwistSpec::Bimodule(DiagonalAutomorphism::identity(&Q));
        let report = homology_dims(&p, &id, 5);
        assert_eq!(report.dims(), [3, 2, 2, 2, 2, 2]);
        for rec in &report.degrees {
            assert_eq!(rec.kernel_dim + rec.image_dim, p.dim() * (rec.n + 1));
        }
    }

    #[test]
    fn cohomology_table_rationals() {
        let p = params(2, 2, 2);
        let nu = TwistSpec::Bimodule(p.nakayama());
        let report = homology_dims(&p, &nu, 5);
        assert_eq!(report.dims(), [2, 2, 1, 0, 0, 0]);
    }

    #[test]
    fn homology_table_char_two() {
        let p = f2t_params(2, 2);
        let id = TwistSpec::Bimodule(DiagonalAutomorphism::identity(p.field()));
        let report = homology_dims(&p, &id, 4);
        assert_eq!(report.dims(), [3, 4, 4, 4, 4]);
    }

    #[test]
    fn hom_route_matches_nakayama_route() {
        let p = params(2, 3, 2);
        let via_hom = homology_dims(&p, &TwistSpec::HomIntoA, 4);
        let via_nu = homology_dims(&p, &TwistSpec::Bimodule(p.nakayama()), 4);
        assert_eq!(via_hom.dims(), via_nu.dims());
        assert_eq!(via_hom.dims()[0], p.center_basis().len());
    }

    #[test]
    fn exactness_small_cases() {
        let p = params(2, 2, 2);
        let report = verify_exactness(&p, 8);
        assert!(report.all_pass());
        let ranks: Vec<usize> = (1..=8)
            .map(|n| induce(&p, &TwistSpec::TrivialK, n).rank())
            .collect();
        assert_eq!(ranks, [3, 5, 7, 9, 11, 13, 15, 17]);

        let p = params(2, 3, 2);
        let report = verify_exactness(&p, 6);
        assert!(report.all_pass());
        let ranks: Vec<usize> = (1..=6)
            .map(|n| induce(&p, &TwistSpec::TrivialK, n).rank())
            .collect();
        assert_eq!(ranks, [5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn exactness_at_root_of_unity() {
        // no generic closed-form guarantee at roots of unity; the ranks are
        // verified numerically and stay complementary
        let p = params(2, 2, -1);
        let report = verify_exactness(&p, 6);
        for check in &report.checks {
            if check.name.starts_with("exactness") {
                assert!(check.pass, "{}: {}", check.name, check.actual);
            }
        }
    }

    #[test]
    fn cross_check_identity() {
        let p = params(2, 2, 2);
        let id = DiagonalAutomorphism::identity(&Q);
        assert!(cross_check(&p, &id, 6).all_pass());
    }

    #[test]
    fn cross_check_nakayama() {
        let p = params(2, 3, 2);
        assert!(cross_check(&p, &p.nakayama(), 6).all_pass());
    }

    #[test]
    fn kernel_ledger_char_zero() {
        let p = params(2, 3, 2);
        let id = TwistSpec::Bimodule(DiagonalAutomorphism::identity(&Q));
        let nu = TwistSpec::Bimodule(p.nakayama());
        for n in 1..=6 {
            assert_eq!(
                induce(&p, &id, n).kernel_dim(),
                expected_kernel_dim_identity(&p, n),
                "identity kernel at degree {n}"
            );
            assert_eq!(
                induce(&p, &nu, n).kernel_dim(),
                expected_kernel_dim_nakayama(&p, n),
                "nakayama kernel at degree {n}"
            );
        }
    }
}
