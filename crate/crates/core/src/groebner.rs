//! Buchberger engine for ideals of k[s,t]: multivariate division,
//! S-polynomials, the completion loop with the coprime and chain criteria,
//! and auto-reduction to the unique monic reduced basis.
//!
//! The computed basis depends only on the coefficients of the generators, so
//! it does not change under extension of the coefficient field; decisions
//! read off the basis over Q therefore hold over every extension. Reduction
//! of the coefficients modulo a prime is a different matter and can change
//! the basis.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coeff::Field;
use crate::poly::{BiPoly, Monomial, TermOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("ideal has no nonzero generators")]
    AllZeroGenerators,
    #[error("generators belong to different fields")]
    FieldMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Generators of an ideal of k[s,t] together with the term order the
/// computation will use.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealSpec<F: Field> {
    generators: Vec<BiPoly<F>>,
    order: TermOrder,
}

impl<F: Field> IdealSpec<F> {
    pub fn new(generators: Vec<BiPoly<F>>, order: TermOrder) -> Result<Self, GroebnerError> {
        if let Some(first) = generators.first() {
            if generators.iter().any(|g| g.field() != first.field()) {
                return Err(GroebnerError::FieldMismatch);
            }
        }
        Ok(IdealSpec { generators, order })
    }

    pub fn generators(&self) -> &[BiPoly<F>] {
        &self.generators
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }
}

/// A Groebner basis. Elements are nonzero and monic; after [`reduce_basis`]
/// they are also fully auto-reduced and sorted ascending by leading monomial,
/// which makes the basis unique for the ideal and order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    elements: Vec<BiPoly<F>>,
    order: TermOrder,
    reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn elements(&self) -> &[BiPoly<F>] {
        &self.elements
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the basis is exactly {1}, i.e. the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|h| {
                h.leading_monomial(&self.order)
                    .expect("basis elements are nonzero")
            })
            .collect()
    }
}

/// Division with remainder by a list of nonzero reducers. Returns the
/// remainder and the quotients aligned with `basis`, satisfying
/// `f = sum(q_i * basis_i) + r` with no term of `r` divisible by any
/// reducer's leading monomial. Reducers are tried in list order and the
/// leading term is always reduced first, so the result is deterministic.
pub fn normal_form<F: Field>(
    f: &BiPoly<F>,
    basis: &[BiPoly<F>],
    ord: &TermOrder,
) -> (BiPoly<F>, Vec<BiPoly<F>>) {
    let refs: Vec<&BiPoly<F>> = basis.iter().collect();
    normal_form_refs(f, &refs, ord)
}

fn normal_form_refs<F: Field>(
    f: &BiPoly<F>,
    basis: &[&BiPoly<F>],
    ord: &TermOrder,
) -> (BiPoly<F>, Vec<BiPoly<F>>) {
    let field = f.field();
    let leads: Vec<Option<(Monomial, F::Elem)>> = basis
        .iter()
        .map(|b| b.leading_term(ord).ok().map(|(m, c)| (m, c.clone())))
        .collect();
    let mut work = f.clone();
    let mut remainder = BiPoly::zero(field);
    let mut quotients: Vec<BiPoly<F>> = basis.iter().map(|_| BiPoly::zero(field)).collect();

    'outer: while let Ok((wm, wc)) = work.leading_term(ord) {
        let wc = wc.clone();
        for (i, lead) in leads.iter().enumerate() {
            let Some((bm, bc)) = lead else { continue };
            if let Some(m) = wm.div(bm) {
                let c = field
                    .div(&wc, bc)
                    .expect("leading coefficients are nonzero");
                work = &work - &basis[i].term_mul(&c, &m);
                quotients[i].insert_add(m, c);
                continue 'outer;
            }
        }
        // no reducer applies: the leading term joins the remainder
        remainder.insert_add(wm, wc);
        work.remove_term(&wm);
    }
    (remainder, quotients)
}

/// S(f, g) = (L / in(f)) f - (L / in(g)) g where L is the monic lcm of the
/// leading monomials. The leading terms cancel by construction.
pub fn s_polynomial<F: Field>(
    f: &BiPoly<F>,
    g: &BiPoly<F>,
    ord: &TermOrder,
) -> Result<BiPoly<F>, GroebnerError> {
    let field = f.field();
    let (fm, fc) = f
        .leading_term(ord)
        .map_err(|_| GroebnerError::ZeroPolynomial)?;
    let (gm, gc) = g
        .leading_term(ord)
        .map_err(|_| GroebnerError::ZeroPolynomial)?;
    let lcm = fm.lcm(&gm);
    let fc_inv = field.inv(fc).expect("nonzero leading coefficient");
    let gc_inv = field.inv(gc).expect("nonzero leading coefficient");
    let left = f.term_mul(&fc_inv, &lcm.div(&fm).expect("lcm is a multiple"));
    let right = g.term_mul(&gc_inv, &lcm.div(&gm).expect("lcm is a multiple"));
    Ok(&left - &right)
}

/// Pair queue entry: indices into the working basis and the lcm of the two
/// leading monomials.
#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger completion. The output generates the same ideal and satisfies
/// Buchberger's criterion; it is not yet auto-reduced. Pairs are selected by
/// the normal strategy (smallest lcm total degree, then the term order on the
/// lcm, then indices), and the coprime-lcm and chain criteria prune the queue.
/// A normal form that is a nonzero constant short-circuits to the basis {1}.
pub fn buchberger<F: Field>(ideal: &IdealSpec<F>) -> Result<GroebnerBasis<F>, GroebnerError> {
    let ord = ideal.order();
    let mut basis: Vec<BiPoly<F>> = Vec::new();
    for g in ideal.generators() {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return Ok(unit_basis(g.field(), ord));
        }
        basis.push(g.monic(&ord));
    }
    if basis.is_empty() {
        return Err(GroebnerError::AllZeroGenerators);
    }

    let lm = |b: &BiPoly<F>| b.leading_monomial(&ord).expect("nonzero basis element");
    let mut pending: BTreeMap<(usize, usize), Pair> = BTreeMap::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let lcm = lm(&basis[i]).lcm(&lm(&basis[j]));
            pending.insert((i, j), Pair { i, j, lcm });
        }
    }

    while !pending.is_empty() {
        let pair = *pending
            .values()
            .min_by(|a, b| {
                a.lcm
                    .total_degree()
                    .cmp(&b.lcm.total_degree())
                    .then_with(|| ord.compare(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .expect("nonempty queue");
        pending.remove(&(pair.i, pair.j));
        let (i, j) = (pair.i, pair.j);

        // coprime-lcm criterion
        if pair.lcm == lm(&basis[i]).mul(&lm(&basis[j])) {
            continue;
        }
        // chain criterion: some other element divides the lcm and both
        // side pairs have already left the queue
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&pair.lcm)
                && !pending.contains_key(&pair_key(i, k))
                && !pending.contains_key(&pair_key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], &ord)?;
        let (r, _) = normal_form_refs(&s, &sorted_view(&basis, &ord), &ord);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit_basis(r.field(), ord));
        }
        let r = r.monic(&ord);
        let new = basis.len();
        let new_lm = lm(&r);
        for (k, b) in basis.iter().enumerate() {
            let lcm = lm(b).lcm(&new_lm);
            pending.insert((k, new), Pair { i: k, j: new, lcm });
        }
        basis.push(r);
    }

    Ok(GroebnerBasis {
        elements: basis,
        order: ord,
        reduced: false,
    })
}

fn pair_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn unit_basis<F: Field>(field: F, order: TermOrder) -> GroebnerBasis<F> {
    GroebnerBasis {
        elements: vec![BiPoly::one(field)],
        order,
        reduced: false,
    }
}

/// Reducers sorted ascending by leading monomial (ties by position), per the
/// deterministic division contract.
fn sorted_view<'a, F: Field>(basis: &'a [BiPoly<F>], ord: &TermOrder) -> Vec<&'a BiPoly<F>> {
    let mut view: Vec<(Monomial, usize)> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.leading_monomial(ord).expect("nonzero"), i))
        .collect();
    view.sort_by(|(ma, ia), (mb, ib)| ord.compare(ma, mb).then(ia.cmp(ib)));
    view.into_iter().map(|(_, i)| &basis[i]).collect()
}

/// Auto-reduction to the unique monic reduced basis: elements whose leading
/// monomial another element's divides are discarded, every surviving tail is
/// fully reduced against the rest, and the result is sorted ascending by
/// leading monomial.
pub fn reduce_basis<F: Field>(basis: GroebnerBasis<F>) -> GroebnerBasis<F> {
    let ord = basis.order;
    let mut ordered: Vec<BiPoly<F>> = basis.elements;
    ordered.sort_by(|a, b| {
        let ma = a.leading_monomial(&ord).expect("nonzero");
        let mb = b.leading_monomial(&ord).expect("nonzero");
        ord.compare(&ma, &mb)
    });

    // a leading monomial divisible by an earlier one is redundant; equal
    // leading monomials keep the first occurrence
    let mut minimal: Vec<BiPoly<F>> = Vec::new();
    for h in ordered {
        let hm = h.leading_monomial(&ord).expect("nonzero");
        if !minimal
            .iter()
            .any(|m| m.leading_monomial(&ord).expect("nonzero").divides(&hm))
        {
            minimal.push(h);
        }
    }

    for i in 0..minimal.len() {
        let others: Vec<&BiPoly<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, b)| b)
            .collect();
        let (r, _) = normal_form_refs(&minimal[i], &others, &ord);
        minimal[i] = r.monic(&ord);
    }

    GroebnerBasis {
        elements: minimal,
        order: ord,
        reduced: true,
    }
}

/// The composition used everywhere downstream: completion then auto-reduction.
pub fn reduced_groebner_basis<F: Field>(
    ideal: &IdealSpec<F>,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    Ok(reduce_basis(buchberger(ideal)?))
}

/// Count-or-infinite result of the staircase inspection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Staircase {
    Finite(u64),
    Infinite,
}

impl Staircase {
    pub fn is_finite(&self) -> bool {
        matches!(self, Staircase::Finite(_))
    }
}

/// Zero-dimensionality test on a reduced basis: the ideal is zero-dimensional
/// exactly when the leading monomials include a pure power of s and a pure
/// power of t (exponent zero allowed, so the basis {1} passes with count 0).
/// In the finite case the count of standard monomials, the dimension of the
/// quotient ring, bounds the number of common zeros.
pub fn staircase_dimension<F: Field>(basis: &GroebnerBasis<F>) -> Staircase {
    let lms = basis.leading_monomials();
    let s_bound = lms.iter().filter(|m| m.is_pure_s()).map(|m| m.exp_s).min();
    let t_bound = lms.iter().filter(|m| m.is_pure_t()).map(|m| m.exp_t).min();
    let (Some(p), Some(q)) = (s_bound, t_bound) else {
        return Staircase::Infinite;
    };
    let mut count = 0u64;
    for exp_s in 0..p {
        for exp_t in 0..q {
            let m = Monomial::new(exp_s, exp_t);
            if !lms.iter().any(|lm| lm.divides(&m)) {
                count += 1;
            }
        }
    }
    Staircase::Finite(count)
}
