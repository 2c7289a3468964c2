//! Exact field arithmetic for the three kinds of coefficient fields used by
//! the engine: the rationals, prime fields `F_p`, and the rational function
//! fields `Q(t)` and `F_p(t)`.
//!
//! A [`Scalar`] carries its field with it at runtime; the CLI picks the field
//! dynamically, so homogeneity of arithmetic is checked per operation rather
//! than by the type system. Rational functions keep a canonical form
//! (numerator and denominator coprime, denominator monic), which makes
//! equality and zero tests structural.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Identifies which field a [`Scalar`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldDescriptor {
    /// The rational numbers, CLI name `q`.
    Rational,
    /// The prime field `F_p`, CLI name `fp:P`.
    Prime(u64),
    /// The rational function field `Q(t)`, CLI name `qt`.
    RationalFunctionsQ,
    /// The rational function field `F_p(t)`, CLI name `fpq:P`.
    RationalFunctionsPrime(u64),
}

impl FieldDescriptor {
    /// Parses the CLI grammar `q | fp:P | fpq:P | qt`.
    pub fn parse(s: &str) -> Result<FieldDescriptor, FieldError> {
        if s == "q" {
            return Ok(FieldDescriptor::Rational);
        }
        if s == "qt" {
            return Ok(FieldDescriptor::RationalFunctionsQ);
        }
        let (kind, modulus) = match s.split_once(':') {
            Some(parts) => parts,
            None => return Err(FieldError::BadDescriptor(s.to_string())),
        };
        let p: u64 = modulus
            .parse()
            .map_err(|_| FieldError::BadDescriptor(s.to_string()))?;
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        match kind {
            "fp" => Ok(FieldDescriptor::Prime(p)),
            "fpq" => Ok(FieldDescriptor::RationalFunctionsPrime(p)),
            _ => Err(FieldError::BadDescriptor(s.to_string())),
        }
    }

    /// The characteristic of the field (0 or p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rational | FieldDescriptor::RationalFunctionsQ => 0,
            FieldDescriptor::Prime(p) | FieldDescriptor::RationalFunctionsPrime(p) => *p,
        }
    }

    /// The base field of a rational function field; identity otherwise.
    pub fn base(&self) -> FieldDescriptor {
        match self {
            FieldDescriptor::RationalFunctionsQ => FieldDescriptor::Rational,
            FieldDescriptor::RationalFunctionsPrime(p) => FieldDescriptor::Prime(*p),
            other => *other,
        }
    }

    /// True for `Q(t)` and `F_p(t)`.
    pub fn has_variable(&self) -> bool {
        matches!(
            self,
            FieldDescriptor::RationalFunctionsQ | FieldDescriptor::RationalFunctionsPrime(_)
        )
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "q"),
            FieldDescriptor::Prime(p) => write!(f, "fp:{p}"),
            FieldDescriptor::RationalFunctionsQ => write!(f, "qt"),
            FieldDescriptor::RationalFunctionsPrime(p) => write!(f, "fpq:{p}"),
        }
    }
}

/// Errors from scalar construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    DivisionByZero,
    /// Operands live in different fields.
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    /// The operation requires a nonzero element (powers, root-of-unity test).
    ZeroBase,
    BadDescriptor(String),
    NotPrime(u64),
    BadLiteral(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::FieldMismatch(a, b) => write!(f, "field mismatch: {a} vs {b}"),
            FieldError::ZeroBase => write!(f, "operation requires a nonzero element"),
            FieldError::BadDescriptor(s) => write!(f, "unrecognized field descriptor `{s}`"),
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::BadLiteral(s) => write!(f, "cannot parse scalar literal `{s}`"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p`, reduced to `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeScalar {
    residue: u64,
    modulus: u64,
}

impl PrimeScalar {
    pub fn new(value: i64, modulus: u64) -> PrimeScalar {
        let p = modulus as i128;
        let r = ((value as i128 % p) + p) % p;
        PrimeScalar {
            residue: r as u64,
            modulus,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn add(&self, other: &PrimeScalar) -> PrimeScalar {
        let s = (self.residue as u128 + other.residue as u128) % self.modulus as u128;
        PrimeScalar {
            residue: s as u64,
            modulus: self.modulus,
        }
    }

    fn sub(&self, other: &PrimeScalar) -> PrimeScalar {
        let p = self.modulus as u128;
        let s = (self.residue as u128 + p - other.residue as u128) % p;
        PrimeScalar {
            residue: s as u64,
            modulus: self.modulus,
        }
    }

    fn mul(&self, other: &PrimeScalar) -> PrimeScalar {
        let s = (self.residue as u128 * other.residue as u128) % self.modulus as u128;
        PrimeScalar {
            residue: s as u64,
            modulus: self.modulus,
        }
    }

    fn inverse(&self) -> Result<PrimeScalar, FieldError> {
        if self.residue == 0 {
            return Err(FieldError::DivisionByZero);
        }
        // extended Euclid
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (self.modulus as i128, self.residue as i128);
        while new_r != 0 {
            let quot = r / new_r;
            (t, new_t) = (new_t, t - quot * new_t);
            (r, new_r) = (new_r, r - quot * new_r);
        }
        debug_assert_eq!(r, 1, "modulus must be prime");
        let p = self.modulus as i128;
        let inv = ((t % p) + p) % p;
        Ok(PrimeScalar {
            residue: inv as u64,
            modulus: self.modulus,
        })
    }
}

/// Dense univariate polynomial over a base field, as a coefficient vector
/// with no trailing zeros (so the empty vector is the zero polynomial).
/// Coefficients are base-field scalars (`Rational` or `Prime` variants only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    fn from_coeffs(mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    fn constant(c: Scalar) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    fn variable(base: &FieldDescriptor) -> Poly {
        Poly {
            coeffs: vec![Scalar::zero(base), Scalar::one(base)],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let c = match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly::from_coeffs(out)
    }

    fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let base = self.coeffs[0].descriptor();
        let mut out = vec![Scalar::zero(&base); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }

    fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; `other` must be nonzero.
    fn divmod(&self, other: &Poly) -> (Poly, Poly) {
        assert!(!other.is_zero(), "polynomial division by zero");
        let d = other.degree().unwrap();
        if self.degree().is_none_or(|n| n < d) {
            return (Poly::zero(), self.clone());
        }
        let base = other.lead().unwrap().descriptor();
        let lead_inv = other.lead().unwrap().inverse().unwrap();
        let mut rem = self.coeffs.clone();
        let n = self.degree().unwrap();
        let mut quot = vec![Scalar::zero(&base); n - d + 1];
        for k in (d..=n).rev() {
            let c = &rem[k] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for j in 0..=d {
                rem[k - d + j] = &rem[k - d + j] - &(&c * &other.coeffs[j]);
            }
            quot[k - d] = c;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead_inv = a.lead().unwrap().inverse().unwrap();
        a.scale(&lead_inv)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let needs_parens = k > 0 && (cs.contains('/') || cs.starts_with('-'));
            match (k, c.is_one()) {
                (0, _) => write!(f, "{cs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) if needs_parens => write!(f, "({cs})*t")?,
                (1, false) => write!(f, "{cs}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) if needs_parens => write!(f, "({cs})*t^{k}")?,
                (_, false) => write!(f, "{cs}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// A quotient of polynomials in canonical form: numerator and denominator
/// coprime, denominator monic and nonzero. A nonconstant element of this
/// field is never a root of unity, which is how "q not a root of unity" is
/// realized in positive characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    fn new(num: Poly, den: Poly) -> RationalFunction {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            let base = den.lead().unwrap().descriptor();
            return RationalFunction {
                num: Poly::zero(),
                den: Poly::constant(Scalar::one(&base)),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divmod(&g);
        let (den, _) = den.divmod(&g);
        let lead_inv = den.lead().unwrap().inverse().unwrap();
        RationalFunction {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    fn base(&self) -> FieldDescriptor {
        self.den.lead().unwrap().descriptor()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the base-field value when the element is constant.
    fn as_constant(&self) -> Option<&Scalar> {
        if self.den.degree() == Some(0) && self.num.degree().is_none_or(|d| d == 0) {
            if self.num.is_zero() {
                None // zero handled by callers via is_zero
            } else {
                Some(&self.num.coeffs[0])
            }
        } else {
            None
        }
    }
}

/// An element of one of the supported exact fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Prime(PrimeScalar),
    RatFn(Box<RationalFunction>),
}

/// The four binary field operations, for the checked entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn zero(desc: &FieldDescriptor) -> Scalar {
        Scalar::from_i64(0, desc)
    }

    pub fn one(desc: &FieldDescriptor) -> Scalar {
        Scalar::from_i64(1, desc)
    }

    pub fn from_i64(value: i64, desc: &FieldDescriptor) -> Scalar {
        match desc {
            FieldDescriptor::Rational => Scalar::Rational(BigRational::from(BigInt::from(value))),
            FieldDescriptor::Prime(p) => Scalar::Prime(PrimeScalar::new(value, *p)),
            FieldDescriptor::RationalFunctionsQ | FieldDescriptor::RationalFunctionsPrime(_) => {
                let base = desc.base();
                Scalar::RatFn(Box::new(RationalFunction {
                    num: Poly::constant(Scalar::from_i64(value, &base)),
                    den: Poly::constant(Scalar::one(&base)),
                }))
            }
        }
    }

    /// The fraction `n/d`; fails when `d` vanishes in the field.
    pub fn fraction(n: i64, d: i64, desc: &FieldDescriptor) -> Result<Scalar, FieldError> {
        let num = Scalar::from_i64(n, desc);
        let den = Scalar::from_i64(d, desc);
        num.arith(&den, ArithOp::Div)
    }

    /// The generator `t` of a rational function field.
    pub fn variable(desc: &FieldDescriptor) -> Result<Scalar, FieldError> {
        if !desc.has_variable() {
            return Err(FieldError::BadLiteral("t".to_string()));
        }
        let base = desc.base();
        Ok(Scalar::RatFn(Box::new(RationalFunction {
            num: Poly::variable(&base),
            den: Poly::constant(Scalar::one(&base)),
        })))
    }

    /// Parses the CLI literal grammar: integers, fractions `n/d`, and `t`.
    pub fn parse(lit: &str, desc: &FieldDescriptor) -> Result<Scalar, FieldError> {
        if lit == "t" {
            return Scalar::variable(desc);
        }
        if let Some((n, d)) = lit.split_once('/') {
            let n: i64 = n
                .trim()
                .parse()
                .map_err(|_| FieldError::BadLiteral(lit.to_string()))?;
            let d: i64 = d
                .trim()
                .parse()
                .map_err(|_| FieldError::BadLiteral(lit.to_string()))?;
            return Scalar::fraction(n, d, desc);
        }
        let n: i64 = lit
            .trim()
            .parse()
            .map_err(|_| FieldError::BadLiteral(lit.to_string()))?;
        Ok(Scalar::from_i64(n, desc))
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rational,
            Scalar::Prime(p) => FieldDescriptor::Prime(p.modulus()),
            Scalar::RatFn(r) => match r.base() {
                FieldDescriptor::Prime(p) => FieldDescriptor::RationalFunctionsPrime(p),
                _ => FieldDescriptor::RationalFunctionsQ,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime(p) => p.residue() == 0,
            Scalar::RatFn(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime(p) => p.residue() == 1,
            Scalar::RatFn(r) => r.as_constant().is_some_and(Scalar::is_one),
        }
    }

    /// Checked binary operation; rejects operands from different fields.
    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar, FieldError> {
        let (da, db) = (self.descriptor(), other.descriptor());
        if da != db {
            return Err(FieldError::FieldMismatch(da, db));
        }
        match op {
            ArithOp::Add => Ok(self.add_unchecked(other)),
            ArithOp::Sub => Ok(self.add_unchecked(&other.neg_value())),
            ArithOp::Mul => Ok(self.mul_unchecked(other)),
            ArithOp::Div => {
                if other.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(self.mul_unchecked(&other.inverse()?))
            }
        }
    }

    pub fn inverse(&self) -> Result<Scalar, FieldError> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(FieldError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Prime(p) => Ok(Scalar::Prime(p.inverse()?)),
            Scalar::RatFn(r) => {
                if r.is_zero() {
                    Err(FieldError::DivisionByZero)
                } else {
                    Ok(Scalar::RatFn(Box::new(RationalFunction::new(
                        r.den.clone(),
                        r.num.clone(),
                    ))))
                }
            }
        }
    }

    fn neg_value(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Prime(p) => Scalar::Prime(PrimeScalar::new(0, p.modulus()).sub(p)),
            Scalar::RatFn(r) => Scalar::RatFn(Box::new(RationalFunction {
                num: r.num.neg(),
                den: r.den.clone(),
            })),
        }
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(a.add(b)),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => {
                let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
                let den = a.den.mul(&b.den);
                Scalar::RatFn(Box::new(RationalFunction::new(num, den)))
            }
            _ => panic!(
                "field mismatch: {} vs {}",
                self.descriptor(),
                other.descriptor()
            ),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime(a), Scalar::Prime(b)) => Scalar::Prime(a.mul(b)),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => Scalar::RatFn(Box::new(RationalFunction::new(
                a.num.mul(&b.num),
                a.den.mul(&b.den),
            ))),
            _ => panic!(
                "field mismatch: {} vs {}",
                self.descriptor(),
                other.descriptor()
            ),
        }
    }

    /// `self^s` by repeated squaring; negative exponents invert first.
    pub fn pow(&self, s: i64) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            if s > 0 {
                return Ok(self.clone());
            }
            return Err(FieldError::ZeroBase);
        }
        let base = if s < 0 { self.inverse()? } else { self.clone() };
        let mut exp = s.unsigned_abs();
        let mut acc = Scalar::one(&self.descriptor());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }
}

/// `q^s` for nonzero `q`; the resolution needs arbitrary integer powers
/// (the Nakayama automorphism uses `q^{1-b}`).
pub fn q_power(q: &Scalar, s: i64) -> Result<Scalar, FieldError> {
    if q.is_zero() {
        return Err(FieldError::ZeroBase);
    }
    q.pow(s)
}

/// Decides whether `q^n = 1` for some `n >= 1`.
///
/// Over the rationals only `1` and `-1` qualify; every nonzero element of a
/// prime field does; a nonconstant rational function never does, and a
/// constant one defers to its base field.
pub fn is_root_of_unity(q: &Scalar) -> Result<bool, FieldError> {
    if q.is_zero() {
        return Err(FieldError::ZeroBase);
    }
    Ok(match q {
        Scalar::Rational(r) => r.is_one() || (-r).is_one(),
        Scalar::Prime(_) => true,
        Scalar::RatFn(r) => match r.as_constant() {
            Some(c) => is_root_of_unity(c)?,
            None => false,
        },
    })
}

/// Checked form of the four field operations (the CLI-facing contract).
pub fn field_arithmetic(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar, FieldError> {
    x.arith(y, op)
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl core::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.arith(rhs, $op).unwrap()
            }
        }
    };
}

scalar_binop!(Add, add, ArithOp::Add);
scalar_binop!(Sub, sub, ArithOp::Sub);
scalar_binop!(Mul, mul, ArithOp::Mul);
scalar_binop!(Div, div, ArithOp::Div);

impl core::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_value()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime(p) => write!(f, "{}", p.residue()),
            Scalar::RatFn(r) => {
                if r.den.degree() == Some(0) {
                    r.num.fmt_with(f)
                } else {
                    write!(f, "(")?;
                    r.num.fmt_with(f)?;
                    write!(f, ")/(")?;
                    r.den.fmt_with(f)?;
                    write!(f, ")")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldDescriptor = FieldDescriptor::Rational;
    const F5: FieldDescriptor = FieldDescriptor::Prime(5);
    const F2T: FieldDescriptor = FieldDescriptor::RationalFunctionsPrime(2);

    #[test]
    fn descriptor_grammar_round_trips() {
        for s in ["q", "fp:5", "fpq:2", "qt"] {
            let d = FieldDescriptor::parse(s).unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!(matches!(
            FieldDescriptor::parse("fp:4"),
            Err(FieldError::NotPrime(4))
        ));
        assert!(FieldDescriptor::parse("zz").is_err());
        assert!(FieldDescriptor::parse("fp:x").is_err());
    }

    #[test]
    fn rational_addition() {
        let x = Scalar::fraction(1, 2, &Q).unwrap();
        let y = Scalar::fraction(1, 3, &Q).unwrap();
        let sum = field_arithmetic(&x, &y, ArithOp::Add).unwrap();
        assert_eq!(sum, Scalar::fraction(5, 6, &Q).unwrap());
    }

    #[test]
    fn prime_field_multiplication() {
        let two = Scalar::from_i64(2, &F5);
        let three = Scalar::from_i64(3, &F5);
        assert_eq!(&two * &three, Scalar::one(&F5));
    }

    #[test]
    fn ratfn_inverse_pair() {
        let t = Scalar::variable(&F2T).unwrap();
        let t_inv = t.inverse().unwrap();
        assert_eq!(&t * &t_inv, Scalar::one(&F2T));
    }

    #[test]
    fn mismatch_is_rejected() {
        let x = Scalar::one(&Q);
        let y = Scalar::one(&F5);
        assert!(matches!(
            field_arithmetic(&x, &y, ArithOp::Add),
            Err(FieldError::FieldMismatch(_, _))
        ));
    }

    #[test]
    fn division_by_zero_is_rejected() {
        let x = Scalar::one(&Q);
        let z = Scalar::zero(&Q);
        assert_eq!(
            field_arithmetic(&x, &z, ArithOp::Div),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn q_power_examples() {
        let two = Scalar::from_i64(2, &Q);
        assert_eq!(
            q_power(&two, -1).unwrap(),
            Scalar::fraction(1, 2, &Q).unwrap()
        );
        assert_eq!(q_power(&two, 0).unwrap(), Scalar::one(&Q));
        let t = Scalar::variable(&F2T).unwrap();
        let t3 = q_power(&t, 3).unwrap();
        assert_eq!(t3, (&(&t * &t) * &t));
        assert!(q_power(&Scalar::zero(&Q), 2).is_err());
    }

    #[test]
    fn root_of_unity_rules() {
        assert!(!is_root_of_unity(&Scalar::from_i64(2, &Q)).unwrap());
        assert!(is_root_of_unity(&Scalar::from_i64(-1, &Q)).unwrap());
        assert!(is_root_of_unity(&Scalar::from_i64(2, &F5)).unwrap());
        assert!(!is_root_of_unity(&Scalar::variable(&F2T).unwrap()).unwrap());
        // constant in F_2(t) defers to the base field
        assert!(is_root_of_unity(&Scalar::one(&F2T)).unwrap());
        assert!(is_root_of_unity(&Scalar::zero(&Q)).is_err());
    }

    #[test]
    fn prime_root_of_unity_matches_enumeration() {
        // independent oracle: enumerate q^n for n <= p-1
        let p = 5u64;
        for r in 1..p {
            let q = Scalar::from_i64(r as i64, &FieldDescriptor::Prime(p));
            let mut pow = q.clone();
            let mut hits_one = false;
            for _ in 1..p {
                if pow.is_one() {
                    hits_one = true;
                    break;
                }
                pow = &pow * &q;
            }
            assert_eq!(is_root_of_unity(&q).unwrap(), hits_one);
        }
        // worked case: 2 has order 4 in F_5
        let two = Scalar::from_i64(2, &F5);
        let powers: Vec<u64> = (1..=4)
            .map(|n| match two.pow(n).unwrap() {
                Scalar::Prime(p) => p.residue(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(powers, [2, 4, 3, 1]);
    }

    #[test]
    fn ratfn_canonical_form() {
        // (t^2 - 1)/(t - 1) reduces to t + 1 over Q(t)
        let qt = FieldDescriptor::RationalFunctionsQ;
        let t = Scalar::variable(&qt).unwrap();
        let one = Scalar::one(&qt);
        let num = &(&t * &t) - &one;
        let den = &t - &one;
        let r = &num / &den;
        assert_eq!(r, &t + &one);
        // canonical: re-dividing by 1 is the identity
        assert_eq!(&r / &Scalar::one(&qt), r);
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(Scalar::parse("2", &Q).unwrap(), Scalar::from_i64(2, &Q));
        assert_eq!(
            Scalar::parse("-1/2", &Q).unwrap(),
            Scalar::fraction(-1, 2, &Q).unwrap()
        );
        assert_eq!(
            Scalar::parse("t", &F2T).unwrap(),
            Scalar::variable(&F2T).unwrap()
        );
        assert!(Scalar::parse("t", &Q).is_err());
        assert!(Scalar::parse("x+1", &Q).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::fraction(3, 4, &Q).unwrap().to_string(), "3/4");
        assert_eq!(Scalar::from_i64(7, &F5).to_string(), "2");
        let t = Scalar::variable(&F2T).unwrap();
        assert_eq!(t.to_string(), "t");
        let inv = t.inverse().unwrap();
        assert_eq!(inv.to_string(), "(1)/(t)");
        let qt = FieldDescriptor::RationalFunctionsQ;
        let t = Scalar::variable(&qt).unwrap();
        let e = &(&t * &t) + &Scalar::from_i64(3, &qt);
        assert_eq!(e.to_string(), "t^2 + 3");
    }
}
