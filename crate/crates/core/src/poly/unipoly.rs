//! Univariate polynomials over a coefficient field.
//!
//! The variable is written `t` for parametrization inputs; the same type also
//! carries polynomials in `s` alone (derivatives on the diagonal, content of a
//! bivariate polynomial viewed in t). Values are immutable: every operation
//! builds a new polynomial.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Field;
use crate::poly::PolyError;

/// A sparse univariate polynomial. Stored coefficients are never zero; the
/// zero polynomial has empty support and no degree.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: BTreeMap<u32, F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn zero(field: F) -> Self {
        UniPoly {
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        let mut poly = UniPoly::zero(field);
        poly.insert_add(0, c);
        poly
    }

    pub fn one(field: F) -> Self {
        Self::constant(field, field.one())
    }

    /// c * t^exp
    pub fn monomial(field: F, exp: u32, c: F::Elem) -> Self {
        let mut poly = UniPoly::zero(field);
        poly.insert_add(exp, c);
        poly
    }

    /// The variable itself.
    pub fn var(field: F) -> Self {
        Self::monomial(field, 1, field.one())
    }

    pub fn from_coeffs(field: F, coeffs: impl IntoIterator<Item = (u32, F::Elem)>) -> Self {
        let mut poly = UniPoly::zero(field);
        for (exp, c) in coeffs {
            poly.insert_add(exp, c);
        }
        poly
    }

    /// Convenience constructor from small integer coefficients, lowest degree
    /// first, reduced into the field.
    pub fn from_ints(field: F, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            field,
            coeffs
                .iter()
                .enumerate()
                .map(|(exp, &c)| (exp as u32, field.from_int(c))),
        )
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    /// `None` encodes the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> F::Elem {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.coeffs.values().next_back()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &F::Elem)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub(crate) fn insert_add(&mut self, exp: u32, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.coeffs.remove(&exp) {
            None => {
                self.coeffs.insert(exp, c);
            }
            Some(old) => {
                let sum = self.field.add(&old, &c);
                if !self.field.is_zero(&sum) {
                    self.coeffs.insert(exp, sum);
                }
            }
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "univariate operands belong to different fields"
        );
    }

    pub fn scalar_mul(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return UniPoly::zero(self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, a)| (e, self.field.mul(a, c)))
            .collect();
        UniPoly {
            field: self.field,
            coeffs,
        }
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                if self.field.is_one(lc) {
                    self.clone()
                } else {
                    let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                    self.scalar_mul(&inv)
                }
            }
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one(self.field);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Formal derivative. In characteristic p the terms with p | exponent
    /// vanish.
    pub fn derivative(&self) -> Self {
        let field = self.field;
        UniPoly::from_coeffs(
            field,
            self.coeffs
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e - 1, field.mul(&field.from_int(e as i64), c))),
        )
    }

    /// Substitution f(g), computed by Horner steps over the sparse support.
    pub fn compose(&self, g: &Self) -> Self {
        self.assert_same_field(g);
        let field = self.field;
        let mut acc = UniPoly::zero(field);
        let mut prev_exp: Option<u32> = None;
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(prev) = prev_exp {
                acc = &acc * &g.pow(prev - e);
            }
            acc.insert_add(0, c.clone());
            prev_exp = Some(*e);
        }
        if let Some(prev) = prev_exp {
            if prev > 0 {
                acc = &acc * &g.pow(prev);
            }
        }
        acc
    }

    /// Euclidean division by a nonzero divisor: `self = q * divisor + r` with
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.assert_same_field(divisor);
        let field = self.field;
        let d_deg = divisor.degree().ok_or(PolyError::ZeroPolynomial)?;
        let d_lc_inv = field
            .inv(divisor.leading_coeff().expect("nonzero divisor"))
            .expect("nonzero leading coefficient");
        let mut quotient = UniPoly::zero(field);
        let mut rem = self.clone();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = field.mul(rem.leading_coeff().expect("nonzero"), &d_lc_inv);
            let shift = r_deg - d_deg;
            quotient.insert_add(shift, factor.clone());
            for (e, c) in divisor.coeffs.iter() {
                rem.insert_add(e + shift, field.neg(&field.mul(c, &factor)));
            }
        }
        Ok((quotient, rem))
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn neg(self) -> UniPoly<F> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e, self.field.neg(c)))
            .collect();
        UniPoly {
            field: self.field,
            coeffs,
        }
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn add(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        self.assert_same_field(rhs);
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.insert_add(e, c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn sub(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        self.assert_same_field(rhs);
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.insert_add(e, self.field.neg(c));
        }
        out
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;

    // exponents add when terms multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        self.assert_same_field(rhs);
        let field = self.field;
        let mut out = UniPoly::zero(field);
        for (&ea, ca) in self.coeffs.iter() {
            for (&eb, cb) in rhs.coeffs.iter() {
                out.insert_add(ea + eb, field.mul(ca, cb));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{make_prime_field, Rationals};

    #[test]
    fn derivative_examples() {
        let q = Rationals;
        let t3 = UniPoly::from_ints(q, &[0, 0, 0, 1]);
        assert_eq!(t3.derivative(), UniPoly::from_ints(q, &[0, 0, 3]));
        let five = UniPoly::from_ints(q, &[5]);
        assert!(five.derivative().is_zero());

        // characteristic kills the term
        let f2 = make_prime_field(2).unwrap();
        let t2 = UniPoly::from_ints(f2, &[0, 0, 1]);
        assert!(t2.derivative().is_zero());
    }

    #[test]
    fn zero_degree_is_sentinel() {
        let q = Rationals;
        assert_eq!(UniPoly::zero(q).degree(), None);
        assert_eq!(UniPoly::one(q).degree(), Some(0));
        assert_eq!(UniPoly::var(q).degree(), Some(1));
    }

    #[test]
    fn div_rem_roundtrip() {
        let q = Rationals;
        let f = UniPoly::from_ints(q, &[2, 0, -3, 1]); // t^3 - 3t^2 + 2
        let d = UniPoly::from_ints(q, &[-1, 1]); // t - 1
        let (quot, rem) = f.div_rem(&d).unwrap();
        assert_eq!(&(&quot * &d) + &rem, f);
        assert!(rem.is_constant());
        assert!(f.div_rem(&UniPoly::zero(q)).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        let q = Rationals;
        let a = UniPoly::from_ints(q, &[-2, 0, 2]); // 2t^2 - 2
        let b = UniPoly::from_ints(q, &[-3, 3]); // 3t - 3
        assert_eq!(a.gcd(&b), UniPoly::from_ints(q, &[-1, 1]));
        assert!(UniPoly::zero(q).gcd(&UniPoly::zero(q)).is_zero());
        assert_eq!(UniPoly::zero(q).gcd(&a), a.monic());
    }

    #[test]
    fn compose_linear() {
        let q = Rationals;
        let f = UniPoly::from_ints(q, &[1, 0, 1]); // t^2 + 1
        let g = UniPoly::from_ints(q, &[3, 2]); // 2t + 3
                                                // (2t+3)^2 + 1 = 4t^2 + 12t + 10
        assert_eq!(f.compose(&g), UniPoly::from_ints(q, &[10, 12, 4]));
        assert_eq!(UniPoly::zero(q).compose(&g), UniPoly::zero(q));
    }
}
