//! Decision procedures on a parametrization (f_1, ..., f_n) of an affine
//! curve: birationality, isomorphism onto the image, the Abhyankar-Moh degree
//! pre-check, and a combined classifier.
//!
//! Every decision reduces to one reduced Groebner basis of the ideal spanned
//! by the divided differences g_i = (f_i(t) - f_i(s)) / (t - s): the basis is
//! {1} exactly when the map is an isomorphism (over the algebraic closure),
//! and the ideal is zero-dimensional exactly when the map is birational onto
//! its image.

use thiserror::Error;

use crate::coeff::Field;
use crate::groebner::{
    reduced_groebner_basis, staircase_dimension, GroebnerBasis, GroebnerError, IdealSpec, Staircase,
};
use crate::poly::{divided_difference, BiPoly, TermOrder, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("instance has no polynomials")]
    EmptyInstance,
    #[error("polynomials belong to different fields")]
    FieldMismatch,
    #[error("degenerate image (point)")]
    DegenerateImage,
    #[error("inseparable instance: every derivative vanishes")]
    Inseparable,
    #[error("expected exactly 2 polynomials, got {0}")]
    WrongArity(usize),
    #[error("degree pre-check needs nonconstant polynomials")]
    ConstantInput,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Guard over the hypotheses the decision theorems need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    /// At least one derivative is nonzero.
    Pass,
    /// Every polynomial is constant; the image is a point, not a curve.
    DegenerateImage,
    /// Some polynomial is nonconstant but every derivative vanishes. Possible
    /// only in characteristic p, when all inputs lie in k[t^p].
    Inseparable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    NotBirational,
    BirationalNotIsomorphism,
    Isomorphism,
}

/// Outcome of the Abhyankar-Moh necessary condition for two polynomials:
/// with m <= n their degrees and the characteristic not dividing gcd(m, n),
/// an isomorphism forces m | n. Necessary, never sufficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmCheck {
    Satisfied,
    Violated,
    /// The characteristic divides gcd(m, n), so the theorem does not apply.
    Inapplicable,
}

/// Machine-readable reason codes attached to verdicts.
pub mod reasons {
    pub const INSEPARABLE: &str = "inseparable";
    pub const UNIT_IDEAL: &str = "unit-ideal";
    pub const ZERO_DIMENSIONAL: &str = "zero-dimensional";
    pub const NONEMPTY_VARIETY: &str = "nonempty-variety";
    pub const POSITIVE_DIMENSIONAL: &str = "positive-dimensional";
    pub const AM_VIOLATED: &str = "am-violated";
}

/// A parametrization instance: the polynomials f_1, ..., f_n and the term
/// order for the bivariate computation.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance<F: Field> {
    polys: Vec<UniPoly<F>>,
    order: TermOrder,
}

impl<F: Field> ProblemInstance<F> {
    pub fn new(polys: Vec<UniPoly<F>>, order: TermOrder) -> Result<Self, DecideError> {
        let first = polys.first().ok_or(DecideError::EmptyInstance)?;
        if polys.iter().any(|f| f.field() != first.field()) {
            return Err(DecideError::FieldMismatch);
        }
        Ok(ProblemInstance { polys, order })
    }

    pub fn polys(&self) -> &[UniPoly<F>] {
        &self.polys
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn field(&self) -> F {
        self.polys[0].field()
    }

    /// The divided differences g_1, ..., g_n, aligned with the inputs
    /// (constant inputs give zero entries).
    pub fn divided_differences(&self) -> Vec<BiPoly<F>> {
        self.polys.iter().map(divided_difference).collect()
    }
}

/// Full verdict: the classification plus the evidence it was read from.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict<F: Field> {
    pub classification: Classification,
    pub basis: GroebnerBasis<F>,
    pub staircase: Staircase,
    pub am_check: Option<AmCheck>,
    pub reason_codes: Vec<&'static str>,
}

/// Checks the hypothesis that not every derivative vanishes.
pub fn check_preconditions<F: Field>(inst: &ProblemInstance<F>) -> Precondition {
    if inst.polys.iter().all(UniPoly::is_constant) {
        return Precondition::DegenerateImage;
    }
    if inst.polys.iter().all(|f| f.derivative().is_zero()) {
        return Precondition::Inseparable;
    }
    Precondition::Pass
}

fn reduced_basis_of<F: Field>(inst: &ProblemInstance<F>) -> Result<GroebnerBasis<F>, DecideError> {
    let gens: Vec<BiPoly<F>> = inst
        .divided_differences()
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    let ideal = IdealSpec::new(gens, inst.order)?;
    Ok(reduced_groebner_basis(&ideal)?)
}

fn guard<F: Field>(inst: &ProblemInstance<F>) -> Result<(), DecideError> {
    match check_preconditions(inst) {
        Precondition::Pass => Ok(()),
        Precondition::DegenerateImage => Err(DecideError::DegenerateImage),
        Precondition::Inseparable => Err(DecideError::Inseparable),
    }
}

/// Whether the parametrization is a birational equivalence onto its image:
/// true exactly when the leading monomials of the reduced basis contain a
/// pure power of s and a pure power of t (exponent zero permitted).
pub fn is_birational<F: Field>(
    inst: &ProblemInstance<F>,
) -> Result<(bool, GroebnerBasis<F>), DecideError> {
    guard(inst)?;
    let basis = reduced_basis_of(inst)?;
    let finite = staircase_dimension(&basis).is_finite();
    Ok((finite, basis))
}

/// Whether the parametrization is an isomorphism onto its image, over the
/// algebraic closure of the coefficient field: true exactly when the reduced
/// basis is {1}.
pub fn is_isomorphism<F: Field>(
    inst: &ProblemInstance<F>,
) -> Result<(bool, GroebnerBasis<F>), DecideError> {
    guard(inst)?;
    let basis = reduced_basis_of(inst)?;
    let unit = basis.is_unit();
    Ok((unit, basis))
}

/// Abhyankar-Moh degree pre-check for exactly two nonconstant polynomials.
/// A `Violated` outcome certifies the map is not an isomorphism without any
/// Groebner computation.
pub fn abhyankar_moh_check<F: Field>(polys: &[UniPoly<F>]) -> Result<AmCheck, DecideError> {
    let [f1, f2] = polys else {
        return Err(DecideError::WrongArity(polys.len()));
    };
    let d1 = f1
        .degree()
        .filter(|&d| d > 0)
        .ok_or(DecideError::ConstantInput)?;
    let d2 = f2
        .degree()
        .filter(|&d| d > 0)
        .ok_or(DecideError::ConstantInput)?;
    let (m, n) = (d1.min(d2) as u64, d1.max(d2) as u64);
    let p = f1.field().characteristic();
    if p > 0 && gcd(m, n).is_multiple_of(p) {
        return Ok(AmCheck::Inapplicable);
    }
    if n.is_multiple_of(m) {
        Ok(AmCheck::Satisfied)
    } else {
        Ok(AmCheck::Violated)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Combined classifier. One Groebner computation answers both questions;
/// inseparable instances get a sound NotBirational verdict (all inputs lie in
/// k[t^p], so the function field sits inside k(t^p)), and an instance of
/// constants only is rejected as a degenerate image.
pub fn classify<F: Field>(inst: &ProblemInstance<F>) -> Result<Verdict<F>, DecideError> {
    let precondition = check_preconditions(inst);
    if precondition == Precondition::DegenerateImage {
        return Err(DecideError::DegenerateImage);
    }

    let basis = reduced_basis_of(inst)?;
    let staircase = staircase_dimension(&basis);

    let mut reason_codes = Vec::new();
    let classification = if precondition == Precondition::Inseparable {
        reason_codes.push(reasons::INSEPARABLE);
        debug_assert_eq!(staircase, Staircase::Infinite);
        Classification::NotBirational
    } else if basis.is_unit() {
        reason_codes.push(reasons::UNIT_IDEAL);
        Classification::Isomorphism
    } else if staircase.is_finite() {
        reason_codes.push(reasons::ZERO_DIMENSIONAL);
        reason_codes.push(reasons::NONEMPTY_VARIETY);
        Classification::BirationalNotIsomorphism
    } else {
        reason_codes.push(reasons::POSITIVE_DIMENSIONAL);
        Classification::NotBirational
    };

    let am_check = if inst.polys.len() == 2 {
        abhyankar_moh_check(&inst.polys).ok()
    } else {
        None
    };
    if am_check == Some(AmCheck::Violated) {
        reason_codes.push(reasons::AM_VIOLATED);
    }

    Ok(Verdict {
        classification,
        basis,
        staircase,
        am_check,
        reason_codes,
    })
}
