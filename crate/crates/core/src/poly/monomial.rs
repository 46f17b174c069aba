//! Monomials of the bivariate ring k[s,t] and the admissible term orders on them.

use std::cmp::Ordering;

/// A monomial s^i t^j. The derived `Ord` is a fixed storage order used for
/// canonical term maps; order-sensitive comparisons go through [`TermOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exp_s: u32,
    pub exp_t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exp_s: 0, exp_t: 0 };

    pub fn new(exp_s: u32, exp_t: u32) -> Self {
        Monomial { exp_s, exp_t }
    }

    /// s^e
    pub fn s(e: u32) -> Self {
        Monomial { exp_s: e, exp_t: 0 }
    }

    /// t^e
    pub fn t(e: u32) -> Self {
        Monomial { exp_s: 0, exp_t: e }
    }

    pub fn total_degree(&self) -> u32 {
        self.exp_s + self.exp_t
    }

    pub fn is_unit(&self) -> bool {
        self.exp_s == 0 && self.exp_t == 0
    }

    /// A pure power of s (s^p with p >= 0; includes the unit monomial).
    pub fn is_pure_s(&self) -> bool {
        self.exp_t == 0
    }

    /// A pure power of t (t^q with q >= 0; includes the unit monomial).
    pub fn is_pure_t(&self) -> bool {
        self.exp_s == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exp_s <= other.exp_s && self.exp_t <= other.exp_t
    }

    /// Exact quotient `self / other`, when it exists.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exp_s: self.exp_s - other.exp_s,
                exp_t: self.exp_t - other.exp_t,
            })
        } else {
            None
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exp_s: self.exp_s + other.exp_s,
            exp_t: self.exp_t + other.exp_t,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exp_s: self.exp_s.max(other.exp_s),
            exp_t: self.exp_t.max(other.exp_t),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    S,
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Total degree first, ties broken reverse-lexicographically (the
    /// monomial with the smaller exponent in the least variable wins).
    DegRevLex,
    /// Exponent of the greater variable first, then the other.
    Lex,
}

/// A term order on k[s,t]: an order kind plus the variable precedence.
/// All admissible here: total, multiplicative, with 1 as minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    top: Var,
}

impl TermOrder {
    /// Degree reverse lexicographic with s < t, the default throughout.
    pub fn degrevlex() -> Self {
        TermOrder {
            kind: OrderKind::DegRevLex,
            top: Var::T,
        }
    }

    /// Lexicographic with s < t.
    pub fn lex() -> Self {
        TermOrder {
            kind: OrderKind::Lex,
            top: Var::T,
        }
    }

    /// Same kind, with `top` as the greater variable.
    pub fn with_top(self, top: Var) -> Self {
        TermOrder { top, ..self }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::Lex => "lex",
        }
    }

    fn split(&self, m: &Monomial) -> (u32, u32) {
        match self.top {
            Var::T => (m.exp_t, m.exp_s),
            Var::S => (m.exp_s, m.exp_t),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a_top, a_low) = self.split(a);
        let (b_top, b_low) = self.split(b);
        match self.kind {
            OrderKind::Lex => a_top.cmp(&b_top).then(a_low.cmp(&b_low)),
            OrderKind::DegRevLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then(b_low.cmp(&a_low)),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_tiebreak() {
        let ord = TermOrder::degrevlex();
        // t*s^4 beats s^5: equal total degree, smaller s-exponent wins
        assert_eq!(
            ord.compare(&Monomial::new(4, 1), &Monomial::new(5, 0)),
            Ordering::Greater
        );
        // among the degree-2 monomials: t^2 > t*s > s^2
        assert_eq!(
            ord.compare(&Monomial::new(0, 2), &Monomial::new(1, 1)),
            Ordering::Greater
        );
        assert_eq!(
            ord.compare(&Monomial::new(1, 1), &Monomial::new(2, 0)),
            Ordering::Greater
        );
    }

    #[test]
    fn one_is_minimal() {
        for ord in [TermOrder::degrevlex(), TermOrder::lex()] {
            assert_eq!(ord.compare(&Monomial::ONE, &Monomial::s(1)), Ordering::Less);
            assert_eq!(ord.compare(&Monomial::ONE, &Monomial::t(1)), Ordering::Less);
        }
    }

    #[test]
    fn lex_ignores_total_degree() {
        let ord = TermOrder::lex();
        assert_eq!(
            ord.compare(&Monomial::t(1), &Monomial::s(9)),
            Ordering::Greater
        );
    }

    #[test]
    fn precedence_flip() {
        let ord = TermOrder::lex().with_top(Var::S);
        assert_eq!(
            ord.compare(&Monomial::t(9), &Monomial::s(1)),
            Ordering::Less
        );
    }

    #[test]
    fn monomial_division() {
        let a = Monomial::new(2, 3);
        let b = Monomial::new(1, 1);
        assert_eq!(a.div(&b), Some(Monomial::new(1, 2)));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.lcm(&b), a);
        assert_eq!(Monomial::s(2).lcm(&Monomial::t(3)), Monomial::new(2, 3));
    }
}
