//! Bivariate gcd via content/primitive-part splitting.
//!
//! Polynomials are viewed in t with coefficients in k[s]; the primitive parts
//! go through a pseudo-remainder sequence, the contents through the univariate
//! Euclidean algorithm. The gcd serves as an independent check on
//! zero-dimensionality: a family of bivariate polynomials has an infinite
//! common zero set over the algebraic closure exactly when it shares a
//! nonconstant factor.

use crate::coeff::Field;
use crate::poly::bipoly::BiPoly;
use crate::poly::monomial::Monomial;
use crate::poly::unipoly::UniPoly;
use crate::poly::PolyError;

/// Gcd of the nonzero members of `polys`, normalized so that the leading
/// coefficient in t is a monic polynomial in s; constant gcds collapse to 1.
pub fn bivariate_gcd<F: Field>(polys: &[BiPoly<F>]) -> Result<BiPoly<F>, PolyError> {
    let nonzero: Vec<&BiPoly<F>> = polys.iter().filter(|g| !g.is_zero()).collect();
    let first = *nonzero.first().ok_or(PolyError::AllZero)?;
    for g in &nonzero {
        if g.field() != first.field() {
            return Err(PolyError::FieldMismatch);
        }
    }

    let mut acc = first.clone();
    for g in &nonzero[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd_pair(&acc, g);
    }
    Ok(normalize(&acc))
}

fn gcd_pair<F: Field>(a: &BiPoly<F>, b: &BiPoly<F>) -> BiPoly<F> {
    let ca = content_t(a);
    let cb = content_t(b);
    let pa = a
        .div_exact(&BiPoly::from_uni_in_s(&ca))
        .expect("content divides");
    let pb = b
        .div_exact(&BiPoly::from_uni_in_s(&cb))
        .expect("content divides");
    let content_gcd = BiPoly::from_uni_in_s(&ca.gcd(&cb));
    &content_gcd * &primitive_gcd(pa, pb)
}

/// Gcd of two t-primitive polynomials, up to content, via the subresultant
/// pseudo-remainder sequence. Each pseudo-remainder is divided by the exact
/// Brown-Traub factor g h^delta, which keeps coefficient growth polynomial;
/// the classical primitive sequence recomputes contents of badly swollen
/// intermediates and is far too slow already at moderate degrees.
fn primitive_gcd<F: Field>(a: BiPoly<F>, b: BiPoly<F>) -> BiPoly<F> {
    let field = a.field();
    let (mut u, mut v) = if a.degree_t() >= b.degree_t() {
        (a, b)
    } else {
        (b, a)
    };
    let mut g = UniPoly::one(field);
    let mut h = UniPoly::one(field);
    loop {
        if v.is_zero() {
            return primitive_part_t(&u);
        }
        if v.degree_t() == Some(0) {
            // a nonzero element of t-degree 0 is a unit of k(s)[t], so the
            // gcd of the primitive inputs is 1
            return BiPoly::one(field);
        }
        let delta = u.degree_t().expect("nonzero") - v.degree_t().expect("nonzero");
        let r = pseudo_rem(&u, &v);
        let divisor = BiPoly::from_uni_in_s(&(&g * &h.pow(delta)));
        let next = if r.is_zero() {
            r
        } else {
            // any nonzero k[s] divisor keeps the sequence proportional to the
            // remainder sequence over k(s), so falling back to the primitive
            // part stays correct if the subresultant factor ever misses
            r.div_exact(&divisor)
                .unwrap_or_else(|| primitive_part_t(&r))
        };
        u = v;
        g = u.t_slice(u.degree_t().expect("nonzero"));
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => {
                let (q, rem) = g.pow(d).div_rem(&h.pow(d - 1)).expect("nonzero divisor");
                debug_assert!(rem.is_zero());
                q
            }
        };
        v = next;
    }
}

/// Pseudo-remainder of a by b in the variable t: repeatedly scales by the
/// leading t-coefficient of b so every cancellation stays in k[s,t]. The
/// result agrees with the true remainder over k(s) up to a factor in k[s].
fn pseudo_rem<F: Field>(a: &BiPoly<F>, b: &BiPoly<F>) -> BiPoly<F> {
    let b_deg = b.degree_t().expect("nonzero pseudo-divisor");
    let b_lc = BiPoly::from_uni_in_s(&b.t_slice(b_deg));
    let mut r = a.clone();
    while let Some(r_deg) = r.degree_t() {
        if r_deg < b_deg {
            break;
        }
        let r_lc = BiPoly::from_uni_in_s(&r.t_slice(r_deg));
        let shifted = b.monomial_mul(&Monomial::t(r_deg - b_deg));
        r = &(&b_lc * &r) - &(&r_lc * &shifted);
    }
    r
}

/// Monic gcd in k[s] of all t-slice coefficients.
pub(crate) fn content_t<F: Field>(g: &BiPoly<F>) -> UniPoly<F> {
    let mut content = UniPoly::zero(g.field());
    for j in 0..=g.degree_t().unwrap_or(0) {
        let slice = g.t_slice(j);
        if !slice.is_zero() {
            content = content.gcd(&slice);
        }
        if content.degree() == Some(0) {
            break;
        }
    }
    content
}

fn primitive_part_t<F: Field>(g: &BiPoly<F>) -> BiPoly<F> {
    if g.is_zero() {
        return g.clone();
    }
    let content = BiPoly::from_uni_in_s(&content_t(g));
    g.div_exact(&content).expect("content divides")
}

fn normalize<F: Field>(g: &BiPoly<F>) -> BiPoly<F> {
    if g.is_constant() {
        return BiPoly::one(g.field());
    }
    let lc_t = g.t_slice(g.degree_t().expect("nonzero"));
    let scale = g
        .field()
        .inv(lc_t.leading_coeff().expect("nonzero slice"))
        .expect("nonzero leading coefficient");
    g.scalar_mul(&scale)
}
