//! Summand-reduced polynomials and the three factorization pipelines.
//!
//! A summand-reduced polynomial is written
//! `t_1 + ... + t_s + g_11*...*g_1m_1 + ... + g_l1*...*g_lm_l`
//! with monomials `t_i` and product groups of multi-term factors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::PipelineError;
use crate::factorization::{MatrixFactorization, VerifyPolicy};
use crate::parse::{parse_polynomial, ExpandedForm};
use crate::poly::{Exponents, Monomial, Polynomial, Rational};
use crate::standard::{
    standard_factorize, standard_factorize_expanded, standard_factorize_polynomial,
    StandardVariant, SummandList,
};
use crate::tensor::{mult_tensor, reduced_tensor, yoshino, YoshinoVariant};

pub const DEFAULT_MAX_STANDARD_MONOMIALS: usize = 13;
/// Condition 3 is not checked for groups whose expansion could exceed this.
pub const CONDITION3_EXPANSION_LIMIT: usize = 1_000_000;

/// One product `g_j1 * ... * g_jm` with the term count `p_ji` of each factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGroup {
    factors: Vec<Polynomial>,
    monomial_counts: Vec<usize>,
}

impl ProductGroup {
    fn new(group: usize, factors: Vec<Polynomial>) -> Result<Self, PipelineError> {
        if factors.is_empty() {
            return Err(PipelineError::EmptyGroup { group });
        }
        if let Some(factor) = factors.iter().position(Polynomial::is_zero) {
            return Err(PipelineError::ZeroFactor { group, factor });
        }
        let monomial_counts = factors.iter().map(Polynomial::num_terms).collect();
        Ok(ProductGroup {
            factors,
            monomial_counts,
        })
    }

    pub fn factors(&self) -> &[Polynomial] {
        &self.factors
    }

    pub fn monomial_counts(&self) -> &[usize] {
        &self.monomial_counts
    }

    /// `m_j`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::one(), |acc, f| &acc * f)
    }

    /// Monomials in the expansion of the product: formal terms are counted
    /// individually unless their like terms cancel to zero.
    pub fn expanded_count(&self) -> usize {
        let mut like: BTreeMap<&Exponents, (Rational, usize)> = BTreeMap::new();
        let form = ExpandedForm::product(&self.factors);
        for m in form.terms() {
            let slot = like
                .entry(m.exponents())
                .or_insert_with(|| (Rational::from_integer(0.into()), 0));
            slot.0 += m.coeff();
            slot.1 += 1;
        }
        like.values()
            .filter(|(c, _)| *c != Rational::from_integer(0.into()))
            .map(|(_, n)| n)
            .sum()
    }

    fn formal_count(&self) -> Option<usize> {
        self.monomial_counts
            .iter()
            .try_fold(1usize, |acc, &p| acc.checked_mul(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandReducedPoly {
    terms: Vec<Polynomial>,
    products: Vec<ProductGroup>,
}

impl SummandReducedPoly {
    /// Structural checks only: at least one summand, no zero term, no empty
    /// group, no zero factor. The four defining conditions are reported by
    /// [`validate_summand_reduced`].
    pub fn new(
        terms: Vec<Polynomial>,
        products: Vec<Vec<Polynomial>>,
    ) -> Result<Self, PipelineError> {
        if terms.is_empty() && products.is_empty() {
            return Err(PipelineError::Empty);
        }
        if let Some(index) = terms.iter().position(Polynomial::is_zero) {
            return Err(PipelineError::ZeroTerm { index });
        }
        let products = products
            .into_iter()
            .enumerate()
            .map(|(j, fs)| ProductGroup::new(j, fs))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SummandReducedPoly { terms, products })
    }

    pub fn parse<S: AsRef<str>>(terms: &[S], products: &[Vec<S>]) -> Result<Self, PipelineError> {
        let terms = terms
            .iter()
            .map(|t| parse_polynomial(t.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        let products = products
            .iter()
            .map(|g| g.iter().map(|f| parse_polynomial(f.as_ref())).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        SummandReducedPoly::new(terms, products)
    }

    pub fn terms(&self) -> &[Polynomial] {
        &self.terms
    }

    pub fn products(&self) -> &[ProductGroup] {
        &self.products
    }

    pub fn s(&self) -> usize {
        self.terms.len()
    }

    pub fn l(&self) -> usize {
        self.products.len()
    }

    /// The monomials `t_i`, failing if some term is not a single monomial.
    pub fn monomials(&self) -> Result<Vec<Monomial>, PipelineError> {
        self.terms
            .iter()
            .map(|t| {
                t.as_monomial()
                    .cloned()
                    .ok_or(crate::error::PolyError::NotAMonomial(t.num_terms()).into())
            })
            .collect()
    }

    /// The polynomial in canonical form.
    pub fn target(&self) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &self.terms {
            acc = &acc + t;
        }
        for g in &self.products {
            acc = &acc + &g.product();
        }
        acc
    }

    /// Terms first, then each group distributed formally, like terms kept.
    pub fn formal_expansion(&self) -> ExpandedForm {
        let mut form = ExpandedForm::default();
        for t in &self.terms {
            form = form.concat(ExpandedForm::from_polynomial(t));
        }
        for g in &self.products {
            form = form.concat(ExpandedForm::product(&g.factors));
        }
        form
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub condition: u8,
    pub passed: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub conditions: Vec<ConditionResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &ConditionResult> {
        self.conditions.iter().filter(|c| !c.passed)
    }

    pub fn condition(&self, n: u8) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.condition == n)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "condition {} {tag} {}", c.condition, c.reason)?;
        }
        Ok(())
    }
}

pub fn validate_summand_reduced(srp: &SummandReducedPoly) -> ValidationReport {
    let (s, l) = (srp.s(), srp.l());
    let mut conditions = Vec::with_capacity(4);

    let (passed, reason) = if s == 0 {
        (
            l >= 2,
            format!("s = 0 needs at least two products, found l = {l}"),
        )
    } else {
        (
            l >= 1,
            format!("s = {s} needs at least one product, found l = {l}"),
        )
    };
    conditions.push(ConditionResult {
        condition: 1,
        passed,
        reason,
    });

    let bad: Vec<usize> = (0..s)
        .filter(|&i| srp.terms[i].as_monomial().is_none())
        .collect();
    conditions.push(ConditionResult {
        condition: 2,
        passed: bad.is_empty(),
        reason: if bad.is_empty() {
            String::from("every t_i is a single monomial")
        } else {
            format!("terms {bad:?} are not single monomials")
        },
    });

    let mut passed = true;
    let mut notes = Vec::new();
    for (j, g) in srp.products.iter().enumerate() {
        let written: usize = g.monomial_counts.iter().sum();
        match g.formal_count() {
            Some(n) if n <= CONDITION3_EXPANSION_LIMIT => {
                let expanded = g.expanded_count();
                if expanded <= written {
                    passed = false;
                    notes.push(format!(
                        "group {j}: expansion has {expanded} monomials, factor form has {written}"
                    ));
                }
            }
            _ => {
                passed = false;
                notes.push(format!(
                    "group {j}: expansion exceeds {CONDITION3_EXPANSION_LIMIT} monomials, not checked"
                ));
            }
        }
    }
    conditions.push(ConditionResult {
        condition: 3,
        passed,
        reason: if notes.is_empty() {
            String::from("every product expands to more monomials than its factor form")
        } else {
            notes.join("; ")
        },
    });

    let passed = srp.products.iter().any(|g| g.len() >= 2);
    conditions.push(ConditionResult {
        condition: 4,
        passed,
        reason: String::from(if passed {
            "some product has at least two factors"
        } else {
            "no product has two or more factors"
        }),
    });

    ValidationReport { conditions }
}

/// Predicted sizes, stored as powers of two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub s: usize,
    pub l: usize,
    /// `sum m_j`
    pub sum_m: usize,
    /// `sum p_ji`
    pub sum_p: usize,
    /// `sum_j prod_i p_ji`, the formal expansion length of the products.
    pub sum_prod_p: usize,
    pub standard_exp: u32,
    pub improved_exp: u32,
    pub refined_exp: u32,
}

fn pow2(e: u32) -> Option<u64> {
    1u64.checked_shl(e)
}

impl SizeReport {
    pub fn standard_size(&self) -> Option<u64> {
        pow2(self.standard_exp)
    }

    pub fn improved_size(&self) -> Option<u64> {
        pow2(self.improved_exp)
    }

    pub fn refined_size(&self) -> Option<u64> {
        pow2(self.refined_exp)
    }

    pub fn ratio_vs_standard_exp(&self) -> u32 {
        self.standard_exp - self.refined_exp
    }

    pub fn ratio_vs_improved_exp(&self) -> u32 {
        self.improved_exp - self.refined_exp
    }

    pub fn ratio_refined_vs_standard(&self) -> Option<u64> {
        pow2(self.ratio_vs_standard_exp())
    }

    pub fn ratio_refined_vs_improved(&self) -> Option<u64> {
        pow2(self.ratio_vs_improved_exp())
    }

    pub fn exponent(&self, method: Method) -> u32 {
        match method {
            Method::Standard => self.standard_exp,
            Method::Improved => self.improved_exp,
            Method::Refined => self.refined_exp,
        }
    }
}

pub fn predict_sizes(srp: &SummandReducedPoly) -> Result<SizeReport, PipelineError> {
    srp.monomials()?;
    let (s, l) = (srp.s(), srp.l());
    let sum_m: usize = srp.products.iter().map(ProductGroup::len).sum();
    let sum_p: usize = srp
        .products
        .iter()
        .map(|g| g.monomial_counts.iter().sum::<usize>())
        .sum();
    let sum_prod_p = srp
        .products
        .iter()
        .try_fold(0usize, |acc, g| {
            g.formal_count().and_then(|c| acc.checked_add(c))
        })
        .ok_or(PipelineError::SizeOverflow)?;
    let exp = |v: usize| -> Result<u32, PipelineError> {
        // every summand count here is at least 1, so v >= 1
        u32::try_from(v - 1).map_err(|_| PipelineError::SizeOverflow)
    };
    let standard_exp = exp(sum_prod_p + s)?;
    let improved_exp = exp(sum_p + s)?;
    let refined_exp = exp(l + sum_p - sum_m + s)?;
    Ok(SizeReport {
        s,
        l,
        sum_m,
        sum_p,
        sum_prod_p,
        standard_exp,
        improved_exp,
        refined_exp,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub enum Method {
    Standard,
    Improved,
    #[default]
    Refined,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Standard, Method::Improved, Method::Refined];

    pub fn name(self) -> &'static str {
        match self {
            Method::Standard => "standard",
            Method::Improved => "improved",
            Method::Refined => "refined",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub yoshino_variant: YoshinoVariant,
    pub standard_variant: StandardVariant,
    pub verify: VerifyPolicy,
    pub max_standard_monomials: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            yoshino_variant: YoshinoVariant::Standard,
            standard_variant: StandardVariant::Standard,
            verify: VerifyPolicy::Auto,
            max_standard_monomials: DEFAULT_MAX_STANDARD_MONOMIALS,
        }
    }
}

fn finish(
    mf: MatrixFactorization,
    policy: VerifyPolicy,
) -> Result<MatrixFactorization, PipelineError> {
    match mf.verify(policy).failure {
        None => Ok(mf),
        Some(failure) => Err(crate::error::FactorizationError::Verification(failure).into()),
    }
}

/// Shared shape of the refined and improved pipelines; `combine` is the
/// within-group product.
fn grouped_pipeline(
    srp: &SummandReducedPoly,
    opts: &PipelineOptions,
    combine: fn(&MatrixFactorization, &MatrixFactorization) -> MatrixFactorization,
) -> Result<MatrixFactorization, PipelineError> {
    let monomials = srp.monomials()?;
    let mut groups = Vec::with_capacity(srp.l());
    for g in &srp.products {
        let mut acc: Option<MatrixFactorization> = None;
        for f in &g.factors {
            let x = standard_factorize_polynomial(f, opts.standard_variant)?;
            acc = Some(match acc {
                None => x,
                Some(a) => combine(&a, &x),
            });
        }
        groups.extend(acc);
    }
    let products = groups
        .into_iter()
        .reduce(|a, b| yoshino(&a, &b, opts.yoshino_variant));
    let result = if monomials.is_empty() {
        products.ok_or(PipelineError::Empty)?
    } else {
        let a = standard_factorize(
            &SummandList::from_monomials(&monomials)?,
            opts.standard_variant,
        );
        match products {
            Some(c) => yoshino(&a, &c, opts.yoshino_variant),
            None => a,
        }
    };
    Ok(result)
}

fn build_standard(
    srp: &SummandReducedPoly,
    opts: &PipelineOptions,
) -> Result<MatrixFactorization, PipelineError> {
    let report = predict_sizes(srp)?;
    let form = srp.formal_expansion();
    if form.len() > opts.max_standard_monomials {
        return Err(PipelineError::CapExceeded {
            monomials: form.len(),
            cap: opts.max_standard_monomials,
            exponent: report.standard_exp,
        });
    }
    Ok(standard_factorize_expanded(&form, opts.standard_variant)?)
}

/// Runs a pipeline without the final verification, which is left to the
/// caller (`opts.verify` is ignored).
pub fn construct(
    srp: &SummandReducedPoly,
    method: Method,
    opts: &PipelineOptions,
) -> Result<MatrixFactorization, PipelineError> {
    match method {
        Method::Standard => build_standard(srp, opts),
        Method::Improved => grouped_pipeline(srp, opts, mult_tensor),
        Method::Refined => grouped_pipeline(srp, opts, reduced_tensor),
    }
}

pub fn run_refined_with(
    srp: &SummandReducedPoly,
    opts: &PipelineOptions,
) -> Result<MatrixFactorization, PipelineError> {
    run_method(srp, Method::Refined, opts)
}

pub fn run_improved_with(
    srp: &SummandReducedPoly,
    opts: &PipelineOptions,
) -> Result<MatrixFactorization, PipelineError> {
    run_method(srp, Method::Improved, opts)
}

/// Standard method on the formal expansion; refuses when the expansion has
/// more than `opts.max_standard_monomials` terms.
pub fn run_standard_with(
    srp: &SummandReducedPoly,
    opts: &PipelineOptions,
) -> Result<MatrixFactorization, PipelineError> {
    run_method(srp, Method::Standard, opts)
}

pub fn run_refined(
    srp: &SummandReducedPoly,
    yvariant: YoshinoVariant,
) -> Result<MatrixFactorization, PipelineError> {
    run_refined_with(
        srp,
        &PipelineOptions {
            yoshino_variant: yvariant,
            ..Default::default()
        },
    )
}

pub fn run_improved(
    srp: &SummandReducedPoly,
    yvariant: YoshinoVariant,
) -> Result<MatrixFactorization, PipelineError> {
    run_improved_with(
        srp,
        &PipelineOptions {
            yoshino_variant: yvariant,
            ..Default::default()
        },
    )
}

pub fn run_standard(
    srp: &SummandReducedPoly,
    max_monomials: usize,
) -> Result<MatrixFactorization, PipelineError> {
    run_standard_with(
        srp,
        &PipelineOptions {
            max_standard_monomials: max_monomials,
            ..Default::default()
        },
    )
}

/// Runs a pipeline and verifies the result under `opts.verify`.
pub fn run_method(
    srp: &SummandReducedPoly,
    method: Method,
    opts: &PipelineOptions,
) -> Result<MatrixFactorization, PipelineError> {
    finish(construct(srp, method, opts)?, opts.verify)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Confirmation {
    pub method: Method,
    pub predicted_exp: u32,
    /// `None` when the predicted size was above the construction limit.
    pub constructed: Option<usize>,
}

impl Confirmation {
    pub fn matches(&self) -> bool {
        self.constructed
            .is_none_or(|n| pow2(self.predicted_exp) == Some(n as u64))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub sizes: SizeReport,
    pub validation: ValidationReport,
    pub confirmations: Vec<Confirmation>,
}

impl Comparison {
    pub fn all_match(&self) -> bool {
        self.confirmations.iter().all(Confirmation::matches)
    }
}

/// Predicts all three sizes and builds each pipeline whose predicted size is
/// at most `construct_limit`, recording the constructed size.
pub fn compare_report(
    srp: &SummandReducedPoly,
    opts: &PipelineOptions,
    construct_limit: u64,
) -> Result<Comparison, PipelineError> {
    let sizes = predict_sizes(srp)?;
    let mut confirmations = Vec::new();
    for method in Method::ALL {
        let predicted_exp = sizes.exponent(method);
        let build = pow2(predicted_exp).is_some_and(|n| n <= construct_limit);
        let constructed = if build {
            let opts = PipelineOptions {
                max_standard_monomials: usize::MAX,
                ..*opts
            };
            Some(run_method(srp, method, &opts)?.size())
        } else {
            None
        };
        confirmations.push(Confirmation {
            method,
            predicted_exp,
            constructed,
        });
    }
    Ok(Comparison {
        sizes,
        validation: validate_summand_reduced(srp),
        confirmations,
    })
}
