//! Sparse bivariate polynomials in (s, t), the divided-difference
//! construction, and supporting ring arithmetic.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Field;
use crate::poly::monomial::{Monomial, TermOrder};
use crate::poly::unipoly::UniPoly;
use crate::poly::PolyError;

/// A sparse polynomial of k[s,t] as a canonical term map. No stored
/// coefficient is zero, so equality is structural. Order-dependent queries
/// (leading term, display) take the [`TermOrder`] explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly<F: Field> {
    field: F,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> BiPoly<F> {
    pub fn zero(field: F) -> Self {
        BiPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        let mut poly = BiPoly::zero(field);
        poly.insert_add(Monomial::ONE, c);
        poly
    }

    pub fn one(field: F) -> Self {
        Self::constant(field, field.one())
    }

    /// c * m
    pub fn term(field: F, m: Monomial, c: F::Elem) -> Self {
        let mut poly = BiPoly::zero(field);
        poly.insert_add(m, c);
        poly
    }

    pub fn from_terms(field: F, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut poly = BiPoly::zero(field);
        for (m, c) in terms {
            poly.insert_add(m, c);
        }
        poly
    }

    /// Embeds a univariate polynomial read in the variable t.
    pub fn from_uni_in_t(p: &UniPoly<F>) -> Self {
        Self::from_terms(
            p.field(),
            p.terms().map(|(e, c)| (Monomial::t(e), c.clone())),
        )
    }

    /// Embeds a univariate polynomial read in the variable s.
    pub fn from_uni_in_s(p: &UniPoly<F>) -> Self {
        Self::from_terms(
            p.field(),
            p.terms().map(|(e, c)| (Monomial::s(e), c.clone())),
        )
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .is_some_and(|c| self.field.is_one(c))
    }

    /// The constant value when the polynomial is constant (zero included).
    pub fn constant_value(&self) -> Option<F::Elem> {
        if self.is_zero() {
            Some(self.field.zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::ONE).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Largest exponent of t appearing; `None` for the zero polynomial.
    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.exp_t).max()
    }

    /// The coefficient of t^j, a polynomial in s.
    pub fn t_slice(&self, j: u32) -> UniPoly<F> {
        UniPoly::from_coeffs(
            self.field,
            self.terms
                .iter()
                .filter(|(m, _)| m.exp_t == j)
                .map(|(m, c)| (m.exp_s, c.clone())),
        )
    }

    /// The term that is maximal under the given order.
    pub fn leading_term(&self, ord: &TermOrder) -> Result<(Monomial, &F::Elem), PolyError> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
            .map(|(m, c)| (*m, c))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: &TermOrder) -> Result<Monomial, PolyError> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    pub(crate) fn insert_add(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = self.field.add(&old, &c);
                if !self.field.is_zero(&sum) {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) {
        self.terms.remove(m);
    }

    fn same_field(&self, other: &Self) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "bivariate operands belong to different fields"
        );
    }

    /// Checked addition; fails when the operands live in different fields.
    pub fn try_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.same_field(rhs)?;
        Ok(self + rhs)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.same_field(rhs)?;
        Ok(self - rhs)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.same_field(rhs)?;
        Ok(self * rhs)
    }

    pub fn scalar_mul(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return BiPoly::zero(self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(&m, a)| (m, self.field.mul(a, c)))
            .collect();
        BiPoly {
            field: self.field,
            terms,
        }
    }

    pub fn monomial_mul(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| (a.mul(m), c.clone()))
            .collect();
        BiPoly {
            field: self.field,
            terms,
        }
    }

    /// Multiplication by the single term c * m, the workhorse of division.
    pub fn term_mul(&self, c: &F::Elem, m: &Monomial) -> Self {
        if self.field.is_zero(c) {
            return BiPoly::zero(self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, b)| (a.mul(m), self.field.mul(b, c)))
            .collect();
        BiPoly {
            field: self.field,
            terms,
        }
    }

    /// Scaled to leading coefficient 1 under the given order; zero stays zero.
    pub fn monic(&self, ord: &TermOrder) -> Self {
        match self.leading_term(ord) {
            Err(_) => self.clone(),
            Ok((_, lc)) => {
                if self.field.is_one(lc) {
                    self.clone()
                } else {
                    let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                    self.scalar_mul(&inv)
                }
            }
        }
    }

    /// Exact division in k[s,t], performed as division in t over the fraction
    /// field k(s). Returns `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.assert_same_field(divisor);
        let d_deg = divisor.degree_t()?;
        let d_lc = divisor.t_slice(d_deg);
        let mut rem = self.clone();
        let mut quot = BiPoly::zero(self.field);
        loop {
            let Some(r_deg) = rem.degree_t() else {
                return Some(quot);
            };
            if r_deg < d_deg {
                return None;
            }
            let r_lc = rem.t_slice(r_deg);
            let (q, r) = r_lc.div_rem(&d_lc).expect("nonzero divisor slice");
            if !r.is_zero() {
                return None;
            }
            let q_term = Self::from_uni_in_s(&q).monomial_mul(&Monomial::t(r_deg - d_deg));
            rem = &rem - &(&q_term * divisor);
            quot = &quot + &q_term;
        }
    }
}

impl<F: Field> Neg for &BiPoly<F> {
    type Output = BiPoly<F>;

    fn neg(self) -> BiPoly<F> {
        let terms = self
            .terms
            .iter()
            .map(|(&m, c)| (m, self.field.neg(c)))
            .collect();
        BiPoly {
            field: self.field,
            terms,
        }
    }
}

impl<F: Field> Add for &BiPoly<F> {
    type Output = BiPoly<F>;

    fn add(self, rhs: &BiPoly<F>) -> BiPoly<F> {
        self.assert_same_field(rhs);
        let mut out = self.clone();
        for (&m, c) in rhs.terms.iter() {
            out.insert_add(m, c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &BiPoly<F> {
    type Output = BiPoly<F>;

    fn sub(self, rhs: &BiPoly<F>) -> BiPoly<F> {
        self.assert_same_field(rhs);
        let mut out = self.clone();
        for (&m, c) in rhs.terms.iter() {
            out.insert_add(m, self.field.neg(c));
        }
        out
    }
}

impl<F: Field> Mul for &BiPoly<F> {
    type Output = BiPoly<F>;

    fn mul(self, rhs: &BiPoly<F>) -> BiPoly<F> {
        self.assert_same_field(rhs);
        let field = self.field;
        let mut out = BiPoly::zero(field);
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                out.insert_add(ma.mul(mb), field.mul(ca, cb));
            }
        }
        out
    }
}

/// The divided difference g(s,t) = (f(t) - f(s)) / (t - s), built term by
/// term from (t^j - s^j)/(t - s) = sum of t^a s^b over a + b = j - 1.
/// Constants map to zero.
pub fn divided_difference<F: Field>(f: &UniPoly<F>) -> BiPoly<F> {
    let mut g = BiPoly::zero(f.field());
    for (j, c) in f.terms() {
        for a in 0..j {
            g.insert_add(Monomial::new(j - 1 - a, a), c.clone());
        }
    }
    g
}

/// g(s,s), a univariate polynomial in the single remaining variable.
pub fn substitute_diagonal<F: Field>(g: &BiPoly<F>) -> UniPoly<F> {
    UniPoly::from_coeffs(
        g.field(),
        g.terms().map(|(m, c)| (m.total_degree(), c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{make_prime_field, Rationals};

    fn q_poly(coeffs: &[i64]) -> UniPoly<Rationals> {
        UniPoly::from_ints(Rationals, coeffs)
    }

    fn q_bi(terms: &[(i64, u32, u32)]) -> BiPoly<Rationals> {
        BiPoly::from_terms(
            Rationals,
            terms
                .iter()
                .map(|&(c, es, et)| (Monomial::new(es, et), Rationals.from_int(c))),
        )
    }

    #[test]
    fn divided_difference_cubic() {
        // t^3 gives t^2 + ts + s^2
        let g = divided_difference(&q_poly(&[0, 0, 0, 1]));
        assert_eq!(g, q_bi(&[(1, 0, 2), (1, 1, 1), (1, 2, 0)]));
    }

    #[test]
    fn divided_difference_quartic() {
        // t^4 - 2t^2 + 2 gives (t^3 + t^2 s + t s^2 + s^3) - 2(t + s)
        let g = divided_difference(&q_poly(&[2, 0, -2, 0, 1]));
        let expect = q_bi(&[
            (1, 0, 3),
            (1, 1, 2),
            (1, 2, 1),
            (1, 3, 0),
            (-2, 0, 1),
            (-2, 1, 0),
        ]);
        assert_eq!(g, expect);
    }

    #[test]
    fn divided_difference_constant_is_zero() {
        assert!(divided_difference(&q_poly(&[7])).is_zero());
        assert!(divided_difference(&UniPoly::zero(Rationals)).is_zero());
    }

    #[test]
    fn diagonal_examples() {
        let g = q_bi(&[(1, 0, 2), (1, 1, 1), (1, 2, 0)]);
        assert_eq!(substitute_diagonal(&g), q_poly(&[0, 0, 3]));
        let h = q_bi(&[(1, 0, 1), (1, 1, 0), (1, 0, 0)]);
        assert_eq!(substitute_diagonal(&h), q_poly(&[1, 2]));
        assert!(substitute_diagonal(&BiPoly::zero(Rationals)).is_zero());
    }

    #[test]
    fn product_telescopes() {
        // (t - s)(t^2 + ts + s^2) = t^3 - s^3
        let t_minus_s = q_bi(&[(1, 0, 1), (-1, 1, 0)]);
        let g = q_bi(&[(1, 0, 2), (1, 1, 1), (1, 2, 0)]);
        assert_eq!(&t_minus_s * &g, q_bi(&[(1, 0, 3), (-1, 3, 0)]));
    }

    #[test]
    fn additive_inverse_and_unit() {
        let g = q_bi(&[(3, 1, 2), (-1, 0, 1)]);
        assert!((&g + &(-&g)).is_zero());
        assert_eq!(&BiPoly::one(Rationals) * &g, g);
    }

    #[test]
    fn leading_term_of_zero_fails() {
        let ord = TermOrder::degrevlex();
        let zero = BiPoly::<Rationals>::zero(Rationals);
        assert_eq!(
            zero.leading_term(&ord).unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn leading_term_examples() {
        let ord = TermOrder::degrevlex();
        let g = q_bi(&[(1, 0, 2), (1, 1, 1), (1, 2, 0)]);
        assert_eq!(g.leading_monomial(&ord).unwrap(), Monomial::t(2));
        let h = q_bi(&[(1, 0, 1), (1, 1, 0), (1, 0, 0)]);
        assert_eq!(h.leading_monomial(&ord).unwrap(), Monomial::t(1));
    }

    #[test]
    fn field_mismatch_is_checked() {
        let f5 = make_prime_field(5).unwrap();
        let f7 = make_prime_field(7).unwrap();
        let a = BiPoly::term(f5, Monomial::t(1), 1);
        let b = BiPoly::term(f7, Monomial::t(1), 1);
        assert_eq!(a.try_add(&b).unwrap_err(), PolyError::FieldMismatch);
        assert_eq!(a.try_mul(&b).unwrap_err(), PolyError::FieldMismatch);
        assert!(a.try_sub(&a.clone()).unwrap().is_zero());
    }

    #[test]
    fn exact_division() {
        let t_plus_s = q_bi(&[(1, 0, 1), (1, 1, 0)]);
        let t_minus_s = q_bi(&[(1, 0, 1), (-1, 1, 0)]);
        let prod = &t_plus_s * &t_minus_s;
        assert_eq!(prod.div_exact(&t_plus_s), Some(t_minus_s.clone()));
        assert_eq!(prod.div_exact(&t_minus_s), Some(t_plus_s.clone()));
        let off = &prod + &BiPoly::one(Rationals);
        assert_eq!(off.div_exact(&t_plus_s), None);
    }
}
