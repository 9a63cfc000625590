//! Singularity invariants: lct of the pair ideal (f) + J_f², lct(f), minimal
//! exponents, Milnor numbers, and the rational-singularities classifier.

pub mod bfunction;
pub mod families;
pub mod lct_monomial;
pub mod milnor;
pub mod presentation;
pub mod simplex;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::poly::Polynomial;
use crate::exact::rational::{ExtRat, Rat};

pub use bfunction::{
    determinantal_bfunction_roots, diagonal_bfunction_roots, lct_from_min_exp, min_exp_family,
    min_exp_from_roots, BFunctionRoots,
};
pub use families::{
    lct_determinantal_pair, lct_diagonal_pair, orbit_codimension, orbit_contact_order,
    raw_min_diagonal, recognize, FamilyDescriptor,
};
pub use lct_monomial::{
    lct_monomial, lct_monomial_lp, newton_feasible, weight_search_min, CertifiedLct,
};
pub use milnor::{milnor_number, MilnorMode, MilnorOptions};
pub use presentation::{jacobian_ideal, pair_ideal, partials_ideal, IdealPresentation};

/// How a numeric invariant was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pathway {
    ClosedForm,
    Search,
    Colength,
}

impl Pathway {
    pub fn label(&self) -> &'static str {
        match self {
            Pathway::ClosedForm => "closed-form",
            Pathway::Search => "search",
            Pathway::Colength => "colength",
        }
    }
}

/// One hypersurface's invariants with per-field provenance.
#[derive(Clone, Debug)]
pub struct InvariantBundle {
    pub lct_pair: ExtRat,
    pub lct_pair_pathway: Pathway,
    pub lct_f: ExtRat,
    pub min_exp: Option<ExtRat>,
    pub milnor: Option<u64>,
    pub rational_singularities: bool,
}

/// Resolve lct(f, J_f²) for an explicit polynomial.
///
/// Pathways: the two closed-form families, then the monomial route when
/// every pair-ideal generator is a single term. Anything else is rejected
/// rather than approximated.
pub fn lct_pair_of_polynomial(f: &Polynomial) -> Result<(ExtRat, Pathway)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(desc) = recognize(f) {
        return lct_pair_of_family(&desc);
    }
    let pair = pair_ideal(f)?;
    if let Some(monomial) = pair.as_monomial_ideal() {
        let certified = lct_monomial(&monomial)?;
        return Ok((certified.value, Pathway::Search));
    }
    Err(Error::UnsupportedInput(
        "lct(f, J_f²) needs a diagonal/determinantal shape or a monomial pair ideal".to_string(),
    ))
}

pub fn lct_pair_of_family(fam: &FamilyDescriptor) -> Result<(ExtRat, Pathway)> {
    match *fam {
        FamilyDescriptor::Diagonal { n, d } => Ok((
            ExtRat::Finite(lct_diagonal_pair(n, d)?),
            Pathway::ClosedForm,
        )),
        FamilyDescriptor::Determinantal { n } => Ok((
            ExtRat::Finite(lct_determinantal_pair(n, 4)?.value),
            Pathway::Search,
        )),
    }
}

/// Certificate accompanying a rational-singularities verdict.
#[derive(Clone, Debug)]
pub struct RsCertificate {
    pub rational_singularities: bool,
    pub lct_pair: ExtRat,
    pub pathway: Pathway,
    /// Saito cross-check when the minimal exponent is known: α̃ > 1 must
    /// agree with lct_pair > 1.
    pub min_exp: Option<ExtRat>,
    pub saito_agrees: Option<bool>,
}

fn rs_from_parts(lct_pair: ExtRat, pathway: Pathway, min_exp: Option<ExtRat>) -> RsCertificate {
    let one = ExtRat::Finite(Rat::one());
    let rs = lct_pair > one;
    let saito_agrees = min_exp.as_ref().map(|alpha| (*alpha > one) == rs);
    RsCertificate {
        rational_singularities: rs,
        lct_pair,
        pathway,
        min_exp,
        saito_agrees,
    }
}

/// Rational singularities ⟺ lct(f, J_f²) > 1, for a supported family.
pub fn classify_family(fam: &FamilyDescriptor) -> Result<RsCertificate> {
    let (lct_pair, pathway) = lct_pair_of_family(fam)?;
    let alpha = min_exp_family(fam)?;
    Ok(rs_from_parts(lct_pair, pathway, Some(alpha)))
}

/// Rational singularities ⟺ lct(f, J_f²) > 1, for a polynomial on a
/// supported pathway (the Saito cross-check is included when f is a family
/// member, or trivially when f is smooth).
pub fn classify_polynomial(f: &Polynomial) -> Result<RsCertificate> {
    if let Some(desc) = recognize(f) {
        return classify_family(&desc);
    }
    let (lct_pair, pathway) = lct_pair_of_polynomial(f)?;
    let min_exp = if lct_pair == ExtRat::Infinity {
        Some(ExtRat::Infinity) // smooth convention
    } else {
        None
    };
    Ok(rs_from_parts(lct_pair, pathway, min_exp))
}

/// Full invariant bundle for a family member.
pub fn bundle_for_family(
    fam: &FamilyDescriptor,
    milnor_opts: &MilnorOptions,
) -> Result<InvariantBundle> {
    let (lct_pair, pathway) = lct_pair_of_family(fam)?;
    let alpha = min_exp_family(fam)?;
    let milnor = match *fam {
        FamilyDescriptor::Diagonal { .. } => milnor_number(&fam.polynomial(), milnor_opts).ok(),
        FamilyDescriptor::Determinantal { .. } => None,
    };
    let lct_f = ExtRat::Finite(lct_pair.min_with_one());
    let rs = lct_pair > ExtRat::Finite(Rat::one());
    Ok(InvariantBundle {
        lct_pair,
        lct_pair_pathway: pathway,
        lct_f,
        min_exp: Some(alpha),
        milnor,
        rational_singularities: rs,
    })
}

/// Full invariant bundle for an explicit polynomial on a supported pathway.
pub fn bundle_for_polynomial(
    f: &Polynomial,
    milnor_opts: &MilnorOptions,
) -> Result<InvariantBundle> {
    if let Some(desc) = recognize(f) {
        return bundle_for_family(&desc, milnor_opts);
    }
    let (lct_pair, pathway) = lct_pair_of_polynomial(f)?;
    let lct_f = ExtRat::Finite(lct_pair.min_with_one());
    let rs = lct_pair > ExtRat::Finite(Rat::one());
    let min_exp = (lct_pair == ExtRat::Infinity).then_some(ExtRat::Infinity);
    Ok(InvariantBundle {
        lct_pair,
        lct_pair_pathway: pathway,
        lct_f,
        min_exp,
        milnor: milnor_number(f, milnor_opts).ok(),
        rational_singularities: rs,
    })
}
