//! The standard doubling method: a sum of `k` products `g_i*h_i` gets a
//! factorization of size `2^(k-1)`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{FactorizationError, PolyError};
use crate::factorization::MatrixFactorization;
use crate::matrix::PolyMatrix;
use crate::parse::ExpandedForm;
use crate::poly::{split_monomial, Monomial, Polynomial};

/// Block layout of one doubling step. `V1` swaps the rows of `phi` and the
/// columns of `psi`; `V2` swaps the columns of `phi` and the rows of `psi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub enum StandardVariant {
    #[default]
    Standard,
    V1,
    V2,
}

impl StandardVariant {
    pub const ALL: [StandardVariant; 3] = [
        StandardVariant::Standard,
        StandardVariant::V1,
        StandardVariant::V2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardVariant::Standard => "standard",
            StandardVariant::V1 => "v1",
            StandardVariant::V2 => "v2",
        }
    }
}

impl fmt::Display for StandardVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StandardVariant {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StandardVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| alloc::format!("unknown standard-method variant {s:?}"))
    }
}

/// A nonempty list of pairs `(g_i, h_i)` with every `g_i*h_i` nonzero,
/// standing for `sum g_i*h_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandList {
    pairs: Vec<(Polynomial, Polynomial)>,
}

impl SummandList {
    pub fn new(pairs: Vec<(Polynomial, Polynomial)>) -> Result<Self, FactorizationError> {
        if pairs.is_empty() {
            return Err(FactorizationError::EmptySummands);
        }
        if let Some(index) = pairs.iter().position(|(g, h)| g.is_zero() || h.is_zero()) {
            return Err(FactorizationError::ZeroSummand { index });
        }
        Ok(SummandList { pairs })
    }

    /// Splits each monomial with [`split_monomial`].
    pub fn from_monomials(terms: &[Monomial]) -> Result<Self, FactorizationError> {
        SummandList::new(
            terms
                .iter()
                .map(|m| {
                    let (a, b) = split_monomial(m);
                    (a.to_polynomial(), b.to_polynomial())
                })
                .collect(),
        )
    }

    pub fn pairs(&self) -> &[(Polynomial, Polynomial)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn target(&self) -> Polynomial {
        self.pairs
            .iter()
            .fold(Polynomial::zero(), |acc, (g, h)| &acc + &(g * h))
    }
}

/// Extends a factorization `(C, D)` of `f` to one of `f + g*h` of twice the
/// size.
pub fn standard_step(
    x: &MatrixFactorization,
    g: &Polynomial,
    h: &Polynomial,
    variant: StandardVariant,
) -> MatrixFactorization {
    let n = x.size();
    let (c, d) = (x.phi(), x.psi());
    let gi = PolyMatrix::scalar(g, n);
    let hi = PolyMatrix::scalar(h, n);
    let block = |a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix| {
        PolyMatrix::block2(a, b, c, d).expect("blocks of equal size")
    };
    let (phi, psi) = match variant {
        StandardVariant::Standard => (block(c, &gi.neg(), &hi, d), block(d, &gi, &hi.neg(), c)),
        StandardVariant::V1 => (block(&hi, d, c, &gi.neg()), block(&gi, d, c, &hi.neg())),
        StandardVariant::V2 => (block(&gi.neg(), c, d, &hi), block(&hi.neg(), c, d, &gi)),
    };
    MatrixFactorization::assemble(x.f() + &(g * h), phi, psi)
}

/// Folds [`standard_step`] over the list, seeded with `([g_1], [h_1])`.
pub fn standard_factorize(list: &SummandList, variant: StandardVariant) -> MatrixFactorization {
    let (g1, h1) = &list.pairs[0];
    let seed = MatrixFactorization::trivial(g1.clone(), h1.clone());
    list.pairs[1..]
        .iter()
        .fold(seed, |acc, (g, h)| standard_step(&acc, g, h, variant))
}

/// Standard method on the canonical terms of `p`.
pub fn standard_factorize_polynomial(
    p: &Polynomial,
    variant: StandardVariant,
) -> Result<MatrixFactorization, FactorizationError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    Ok(standard_factorize(
        &SummandList::from_monomials(p.terms())?,
        variant,
    ))
}

/// Standard method on the formal terms of an expansion, one doubling per
/// formal monomial.
pub fn standard_factorize_expanded(
    form: &ExpandedForm,
    variant: StandardVariant,
) -> Result<MatrixFactorization, FactorizationError> {
    crate::parse::count_expanded_monomials(form)?;
    Ok(standard_factorize(
        &SummandList::from_monomials(form.terms())?,
        variant,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn pm(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| p(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_summands_layout() {
        let list = SummandList::new(alloc::vec![(p("x"), p("y")), (p("z"), p("z"))]).unwrap();
        let m = standard_factorize(&list, StandardVariant::Standard);
        assert_eq!(m.phi(), &pm(&[&["x", "-z"], &["z", "y"]]));
        assert_eq!(m.psi(), &pm(&[&["y", "z"], &["-z", "x"]]));
        assert_eq!(m.f(), &p("xy + z^2"));
    }

    #[test]
    fn variants_all_verify() {
        let list = SummandList::new(alloc::vec![
            (p("x"), p("y^2")),
            (p("x^2"), p("z")),
            (p("y"), p("z^2")),
        ])
        .unwrap();
        for v in StandardVariant::ALL {
            let m = standard_factorize(&list, v);
            assert_eq!(m.size(), 4);
            assert_eq!(m.f(), &p("xy^2 + x^2z + yz^2"));
            assert!(m.verify_exact().passed(), "{v}");
        }
    }

    #[test]
    fn monomial_splitting_keeps_sign_on_g() {
        let m = standard_factorize_polynomial(&p("-3x^2 + y"), StandardVariant::Standard).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.phi().get(0, 0), &p("-3x"));
        assert!(m.verify_exact().passed());
    }

    #[test]
    fn empty_and_zero_rejected() {
        assert_eq!(
            SummandList::new(Vec::new()),
            Err(FactorizationError::EmptySummands)
        );
        assert_eq!(
            SummandList::new(alloc::vec![(p("x"), p("y")), (Polynomial::zero(), p("y"))]),
            Err(FactorizationError::ZeroSummand { index: 1 })
        );
        assert!(standard_factorize_polynomial(&Polynomial::zero(), StandardVariant::V1).is_err());
    }

    #[test]
    fn single_monomial_is_one_by_one() {
        let m = standard_factorize_polynomial(&p("x^5y^2"), StandardVariant::Standard).unwrap();
        assert_eq!(m.phi(), &pm(&[&["x^4"]]));
        assert_eq!(m.psi(), &pm(&[&["xy^2"]]));
    }
}
