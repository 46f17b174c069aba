//! Exact coefficient arithmetic over the rationals and over prime fields F_p.
//!
//! Polynomial code is generic over a [`Field`] descriptor. The descriptor is a
//! small copyable value carrying whatever a computation needs (for `F_p`, the
//! modulus), so elements themselves can stay compact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest admissible prime modulus (exclusive). Products of residues below
/// this bound fit in 64-bit intermediates.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} out of range (need 2 <= p < 2^31)")]
    OutOfRange(u64),
    #[error("unrecognized field {0:?} (expected Q or F<p>)")]
    UnknownField(String),
}

/// A coefficient field. All arithmetic is exact; no operation may lose
/// information. Implementations are immutable descriptors, safe to copy and
/// share between threads.
pub trait Field: Copy + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, CoeffError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, CoeffError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    // the field descriptor is the constructor context, so these do take self
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// 0 for the rationals, p for F_p.
    fn characteristic(&self) -> u64;

    /// Whether the element renders with a leading minus sign. Residues in F_p
    /// are canonical representatives in `[0, p)`, so this is always false there.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    /// Scalar that turns the coefficient list into its integer-primitive
    /// display form (denominators cleared, content 1). `None` when the
    /// canonical representatives are already integral, as in F_p.
    fn primitive_scale(&self, coeffs: &[&Self::Elem]) -> Option<Self::Elem>;

    /// Field selection string as accepted by [`FieldSpec::parse`].
    fn name(&self) -> String;
}

/// The field of rational numbers with arbitrary-precision representation.
///
/// Elements are `BigRational` values, which are kept in lowest terms with a
/// positive denominator and a unique zero, so polynomial equality reduces to
/// structural comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, CoeffError> {
        if a.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn primitive_scale(&self, coeffs: &[&BigRational]) -> Option<BigRational> {
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for c in coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
            numer_gcd = numer_gcd.gcd(c.numer());
        }
        if numer_gcd.is_zero() {
            return None;
        }
        Some(BigRational::new(denom_lcm, numer_gcd))
    }

    fn name(&self) -> String {
        "Q".to_string()
    }
}

/// A prime field F_p with 2 <= p < 2^31, elements stored as canonical
/// residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Validates the modulus: range check first, then a deterministic
    /// Miller-Rabin primality test.
    pub fn new(p: u64) -> Result<Self, CoeffError> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(CoeffError::OutOfRange(p));
        }
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // both operands < 2^31, so the product fits in u64
        (a * b) % self.p
    }

    fn inv(&self, a: &u64) -> Result<u64, CoeffError> {
        if *a == 0 {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(pow_mod(*a, self.p - 2, self.p))
    }

    fn from_int(&self, n: i64) -> u64 {
        let p = self.p as i128;
        let r = (n as i128).rem_euclid(p);
        r as u64
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits u64")
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn is_negative(&self, _a: &u64) -> bool {
        false
    }

    fn primitive_scale(&self, _coeffs: &[&u64]) -> Option<u64> {
        None
    }

    fn name(&self) -> String {
        format!("F{}", self.p)
    }
}

/// Builds the prime field F_p, rejecting composite or out-of-range moduli.
pub fn make_prime_field(p: u64) -> Result<PrimeField, CoeffError> {
    PrimeField::new(p)
}

/// Runtime field selection, as written on the command line: `Q` or `F<p>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self, CoeffError> {
        if s == "Q" {
            return Ok(FieldSpec::Q);
        }
        if let Some(digits) = s.strip_prefix('F') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let p: u64 = digits
                    .parse()
                    .map_err(|_| CoeffError::OutOfRange(u64::MAX))?;
                return Ok(FieldSpec::Fp(p));
            }
        }
        Err(CoeffError::UnknownField(s.to_string()))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "F{p}"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin. The witness set {2, 7, 61} is exact for all
/// n < 4_759_123_141, which covers the full modulus range.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 61] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
