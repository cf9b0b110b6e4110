use alloc::collections::BTreeSet;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::FactorizationError;
use crate::matrix::{PolyMatrix, ShuffleMatrix};
use crate::poly::{rational, EvalPoint, Polynomial, VarId};

/// Largest size verified symbolically under [`VerifyPolicy::Auto`].
pub const EXACT_SIZE_LIMIT: usize = 64;
pub const DEFAULT_TRIALS: usize = 8;
/// Sample coordinates are drawn uniformly from `[-SAMPLE_BOUND, SAMPLE_BOUND]`.
pub const SAMPLE_BOUND: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VerifyPolicy {
    /// Exact up to [`EXACT_SIZE_LIMIT`], randomized with default settings above.
    #[default]
    Auto,
    Exact,
    Randomized {
        trials: usize,
        seed: u64,
    },
    /// Exact up to [`EXACT_SIZE_LIMIT`], randomized with these settings above.
    Threshold {
        trials: usize,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Exact,
    Randomized { trials: usize, seed: u64 },
}

impl VerifyPolicy {
    pub fn resolve(self, size: usize) -> VerifyMode {
        match self {
            VerifyPolicy::Exact => VerifyMode::Exact,
            VerifyPolicy::Randomized { trials, seed } => VerifyMode::Randomized { trials, seed },
            VerifyPolicy::Auto => VerifyPolicy::Threshold {
                trials: DEFAULT_TRIALS,
                seed: 0,
            }
            .resolve(size),
            VerifyPolicy::Threshold { .. } if size <= EXACT_SIZE_LIMIT => VerifyMode::Exact,
            VerifyPolicy::Threshold { trials, seed } => VerifyMode::Randomized { trials, seed },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    PhiPsi,
    PsiPhi,
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Product::PhiPsi => "phi*psi",
            Product::PsiPhi => "psi*phi",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    Entry {
        product: Product,
        row: usize,
        col: usize,
        found: Polynomial,
        expected: Polynomial,
    },
    Sample {
        product: Product,
        trial: usize,
        row: usize,
        col: usize,
    },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::Entry {
                product,
                row,
                col,
                found,
                expected,
            } => write!(
                f,
                "{product} entry ({row}, {col}) is {found}, expected {expected}"
            ),
            VerifyFailure::Sample {
                product,
                trial,
                row,
                col,
            } => write!(
                f,
                "{product} differs from f*I at entry ({row}, {col}) in random trial {trial}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub failure: Option<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn check_shapes(phi: &PolyMatrix, psi: &PolyMatrix) -> Result<usize, FactorizationError> {
    for (which, m) in [("phi", phi), ("psi", psi)] {
        if !m.is_square() {
            return Err(FactorizationError::NotSquare {
                which,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
    }
    if phi.rows() != psi.rows() {
        return Err(FactorizationError::SizeMismatch {
            phi: phi.rows(),
            psi: psi.rows(),
        });
    }
    if phi.rows() == 0 {
        return Err(FactorizationError::NotSquare {
            which: "phi",
            rows: 0,
            cols: 0,
        });
    }
    Ok(phi.rows())
}

/// Symbolic check of `phi*psi = psi*phi = f*I`.
pub fn verify_exact(
    f: &Polynomial,
    phi: &PolyMatrix,
    psi: &PolyMatrix,
) -> Result<VerifyReport, FactorizationError> {
    check_shapes(phi, psi)?;
    let mut failure = None;
    for (product, a, b) in [(Product::PhiPsi, phi, psi), (Product::PsiPhi, psi, phi)] {
        let prod = a.mul(b)?;
        if let Some((row, col)) = prod.scalar_mismatch(f) {
            failure = Some(VerifyFailure::Entry {
                product,
                row,
                col,
                found: prod.get(row, col).clone(),
                expected: if row == col {
                    f.clone()
                } else {
                    Polynomial::zero()
                },
            });
            break;
        }
    }
    Ok(VerifyReport {
        mode: VerifyMode::Exact,
        failure,
    })
}

/// Evaluates at `trials` random integer points (ChaCha8 seeded with `seed`)
/// and checks both products numerically. A pass is probabilistic evidence; a
/// failure is a certificate.
pub fn verify_randomized(
    f: &Polynomial,
    phi: &PolyMatrix,
    psi: &PolyMatrix,
    trials: usize,
    seed: u64,
) -> Result<VerifyReport, FactorizationError> {
    check_shapes(phi, psi)?;
    let mut vars: BTreeSet<VarId> = f.variables();
    vars.extend(phi.variables());
    vars.extend(psi.variables());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mode = VerifyMode::Randomized { trials, seed };
    for trial in 0..trials {
        let mut point = EvalPoint::new();
        for v in &vars {
            point.set(
                v.clone(),
                rational(rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND)),
            );
        }
        let fv = f.evaluate(&point)?;
        let a = phi.evaluate(&point)?;
        let b = psi.evaluate(&point)?;
        for (product, x, y) in [(Product::PhiPsi, &a, &b), (Product::PsiPhi, &b, &a)] {
            if let Some((row, col)) = x.mul(y)?.scalar_mismatch(&fv) {
                return Ok(VerifyReport {
                    mode,
                    failure: Some(VerifyFailure::Sample {
                        product,
                        trial,
                        row,
                        col,
                    }),
                });
            }
        }
    }
    Ok(VerifyReport {
        mode,
        failure: None,
    })
}

pub fn verify_with(
    f: &Polynomial,
    phi: &PolyMatrix,
    psi: &PolyMatrix,
    policy: VerifyPolicy,
) -> Result<VerifyReport, FactorizationError> {
    match policy.resolve(phi.rows()) {
        VerifyMode::Exact => verify_exact(f, phi, psi),
        VerifyMode::Randomized { trials, seed } => verify_randomized(f, phi, psi, trials, seed),
    }
}

/// A pair `(phi, psi)` of `n x n` polynomial matrices with
/// `phi*psi = psi*phi = f*I_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixFactorization {
    f: Polynomial,
    phi: PolyMatrix,
    psi: PolyMatrix,
}

impl MatrixFactorization {
    /// Builds and verifies under [`VerifyPolicy::Auto`].
    pub fn new(
        f: Polynomial,
        phi: PolyMatrix,
        psi: PolyMatrix,
    ) -> Result<Self, FactorizationError> {
        Self::with_policy(f, phi, psi, VerifyPolicy::Auto)
    }

    pub fn with_policy(
        f: Polynomial,
        phi: PolyMatrix,
        psi: PolyMatrix,
        policy: VerifyPolicy,
    ) -> Result<Self, FactorizationError> {
        let report = verify_with(&f, &phi, &psi, policy)?;
        match report.failure {
            Some(failure) => Err(FactorizationError::Verification(failure)),
            None => Ok(MatrixFactorization { f, phi, psi }),
        }
    }

    /// For constructions that are correct by construction; checked only in
    /// debug builds and only when cheap.
    pub(crate) fn assemble(f: Polynomial, phi: PolyMatrix, psi: PolyMatrix) -> Self {
        debug_assert!(check_shapes(&phi, &psi).is_ok());
        debug_assert!(
            phi.rows() > 16 || verify_exact(&f, &phi, &psi).is_ok_and(|r| r.passed()),
            "construction produced an invalid factorization"
        );
        MatrixFactorization { f, phi, psi }
    }

    /// The `1 x 1` factorization `([g], [h])` of `g*h`.
    pub fn trivial(g: Polynomial, h: Polynomial) -> Self {
        let f = &g * &h;
        MatrixFactorization {
            f,
            phi: PolyMatrix::scalar(&g, 1),
            psi: PolyMatrix::scalar(&h, 1),
        }
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn phi(&self) -> &PolyMatrix {
        &self.phi
    }

    pub fn psi(&self) -> &PolyMatrix {
        &self.psi
    }

    pub fn size(&self) -> usize {
        self.phi.rows()
    }

    pub fn into_parts(self) -> (Polynomial, PolyMatrix, PolyMatrix) {
        (self.f, self.phi, self.psi)
    }

    /// `(psi, phi)`, also a factorization of `f`.
    pub fn swapped(&self) -> Self {
        MatrixFactorization {
            f: self.f.clone(),
            phi: self.psi.clone(),
            psi: self.phi.clone(),
        }
    }

    pub fn verify_exact(&self) -> VerifyReport {
        verify_exact(&self.f, &self.phi, &self.psi).expect("shapes checked at construction")
    }

    pub fn verify_randomized(&self, trials: usize, seed: u64) -> VerifyReport {
        verify_randomized(&self.f, &self.phi, &self.psi, trials, seed)
            .expect("shapes checked at construction")
    }

    pub fn verify(&self, policy: VerifyPolicy) -> VerifyReport {
        verify_with(&self.f, &self.phi, &self.psi, policy).expect("shapes checked at construction")
    }

    /// `(phi1 ⊕ phi2, psi1 ⊕ psi2)` for two factorizations of the same `f`.
    pub fn direct_sum(&self, other: &MatrixFactorization) -> Result<Self, FactorizationError> {
        if self.f != other.f {
            return Err(FactorizationError::TargetMismatch);
        }
        Ok(MatrixFactorization {
            f: self.f.clone(),
            phi: self.phi.direct_sum(&other.phi),
            psi: self.psi.direct_sum(&other.psi),
        })
    }
}

impl fmt::Display for MatrixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "f = {}", self.f)?;
        writeln!(f, "size = {}", self.size())?;
        writeln!(f, "phi =")?;
        write!(f, "{}", self.phi)?;
        writeln!(f, "psi =")?;
        write!(f, "{}", self.psi)
    }
}

/// Whether `(alpha, beta)` satisfies `alpha*phi1 = phi2*beta` and
/// `psi2*alpha = beta*psi1`. Shape problems are errors.
pub fn is_morphism(
    domain: &MatrixFactorization,
    codomain: &MatrixFactorization,
    alpha: &PolyMatrix,
    beta: &PolyMatrix,
) -> Result<bool, FactorizationError> {
    if domain.f != codomain.f {
        return Err(FactorizationError::TargetMismatch);
    }
    let shape = (codomain.size(), domain.size());
    for m in [alpha, beta] {
        if m.shape() != shape {
            return Err(crate::error::MatrixError::Shape {
                op: "morphism",
                left: m.shape(),
                right: shape,
            }
            .into());
        }
    }
    Ok(alpha.mul(&domain.phi)? == codomain.phi.mul(beta)?
        && codomain.psi.mul(alpha)? == beta.mul(&domain.psi)?)
}

/// A morphism `(alpha, beta)` between two factorizations of the same `f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    domain: MatrixFactorization,
    codomain: MatrixFactorization,
    alpha: PolyMatrix,
    beta: PolyMatrix,
}

impl Morphism {
    pub fn new(
        domain: MatrixFactorization,
        codomain: MatrixFactorization,
        alpha: PolyMatrix,
        beta: PolyMatrix,
    ) -> Result<Self, FactorizationError> {
        if !is_morphism(&domain, &codomain, &alpha, &beta)? {
            return Err(FactorizationError::NotAMorphism);
        }
        Ok(Morphism {
            domain,
            codomain,
            alpha,
            beta,
        })
    }

    pub(crate) fn assemble(
        domain: MatrixFactorization,
        codomain: MatrixFactorization,
        alpha: PolyMatrix,
        beta: PolyMatrix,
    ) -> Self {
        debug_assert!(
            domain.size() * codomain.size() > 256
                || is_morphism(&domain, &codomain, &alpha, &beta).unwrap_or(false)
        );
        Morphism {
            domain,
            codomain,
            alpha,
            beta,
        }
    }

    pub fn identity(x: &MatrixFactorization) -> Self {
        let id = PolyMatrix::identity(x.size());
        Morphism {
            domain: x.clone(),
            codomain: x.clone(),
            alpha: id.clone(),
            beta: id,
        }
    }

    /// `(h*I, h*I)`, an endomorphism of `x` for any polynomial `h`.
    pub fn scalar(x: &MatrixFactorization, h: &Polynomial) -> Self {
        let m = PolyMatrix::scalar(h, x.size());
        Morphism {
            domain: x.clone(),
            codomain: x.clone(),
            alpha: m.clone(),
            beta: m,
        }
    }

    pub fn domain(&self) -> &MatrixFactorization {
        &self.domain
    }

    pub fn codomain(&self) -> &MatrixFactorization {
        &self.codomain
    }

    pub fn alpha(&self) -> &PolyMatrix {
        &self.alpha
    }

    pub fn beta(&self) -> &PolyMatrix {
        &self.beta
    }

    pub fn is_morphism(&self) -> bool {
        is_morphism(&self.domain, &self.codomain, &self.alpha, &self.beta).unwrap_or(false)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Morphism) -> Result<Morphism, FactorizationError> {
        if first.codomain != self.domain {
            return Err(FactorizationError::NotComposable);
        }
        Ok(Morphism {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            alpha: self.alpha.mul(&first.alpha)?,
            beta: self.beta.mul(&first.beta)?,
        })
    }
}

/// The morphism `X ⊗̄ Y -> Y ⊗̄ X` given by
/// `(phi_Y ⊗ phi_X, phi_X ⊗ phi_Y)`.
pub fn commutativity_morphism(x: &MatrixFactorization, y: &MatrixFactorization) -> Morphism {
    let alpha = y.phi.kron(&x.phi);
    let beta = x.phi.kron(&y.phi);
    Morphism::assemble(
        crate::tensor::reduced_tensor(x, y),
        crate::tensor::reduced_tensor(y, x),
        alpha,
        beta,
    )
}

/// The shuffle pair `(S, S)` with `S = S_{r,p}`, `r = size(x)`,
/// `p = size(y)`, as a morphism `X ⊗̄ Y -> Y ⊗̄ X`.
pub fn shuffle_isomorphism(x: &MatrixFactorization, y: &MatrixFactorization) -> Morphism {
    let s = ShuffleMatrix::new(x.size(), y.size()).to_matrix();
    Morphism::assemble(
        crate::tensor::reduced_tensor(x, y),
        crate::tensor::reduced_tensor(y, x),
        s.clone(),
        s,
    )
}

/// Checks `S (phi_X ⊗ phi_Y) S^T = phi_Y ⊗ phi_X` and the same for `psi`,
/// with `S = S_{r,p}`.
pub fn shuffle_isomorphism_check(x: &MatrixFactorization, y: &MatrixFactorization) -> bool {
    let s = ShuffleMatrix::new(x.size(), y.size()).to_matrix();
    let st = s.transpose();
    let conj = |m: PolyMatrix| s.mul(&m).and_then(|sm| sm.mul(&st));
    let phi_ok = conj(x.phi.kron(&y.phi)).is_ok_and(|m| m == y.phi.kron(&x.phi));
    let psi_ok = conj(x.psi.kron(&y.psi)).is_ok_and(|m| m == y.psi.kron(&x.psi));
    phi_ok && psi_ok
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

    fn x2_plus_4() -> MatrixFactorization {
        MatrixFactorization::new(
            p("x^2 + 4"),
            pm(&[&["x", "-2"], &["2", "x"]]),
            pm(&[&["x", "2"], &["-2", "x"]]),
        )
        .unwrap()
    }

    #[test]
    fn accepts_valid_pair() {
        let x = x2_plus_4();
        assert_eq!(x.size(), 2);
        assert!(x.verify_exact().passed());
        assert!(x.verify_randomized(4, 1).passed());
    }

    #[test]
    fn rejects_wrong_target_with_diagnostics() {
        let err = MatrixFactorization::new(
            p("x^2 - 4"),
            pm(&[&["x", "-2"], &["2", "x"]]),
            pm(&[&["x", "2"], &["-2", "x"]]),
        )
        .unwrap_err();
        match err {
            FactorizationError::Verification(VerifyFailure::Entry {
                product: Product::PhiPsi,
                row: 0,
                col: 0,
                found,
                expected,
            }) => {
                assert_eq!(found, p("x^2 + 4"));
                assert_eq!(expected, p("x^2 - 4"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn randomized_catches_bad_entry() {
        let f = p("x^2 + 4");
        let phi = pm(&[&["x", "-2"], &["2", "x"]]);
        let psi = pm(&[&["x", "2"], &["-2", "x + 1"]]);
        let r = verify_randomized(&f, &phi, &psi, 3, 7).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn shape_errors() {
        let f = p("x");
        let err = verify_exact(&f, &pm(&[&["x", "1"]]), &pm(&[&["1"]])).unwrap_err();
        assert!(matches!(
            err,
            FactorizationError::NotSquare { which: "phi", .. }
        ));
        let err = verify_exact(&f, &pm(&[&["x"]]), &PolyMatrix::identity(2)).unwrap_err();
        assert_eq!(err, FactorizationError::SizeMismatch { phi: 1, psi: 2 });
    }

    #[test]
    fn phi_phi_is_a_morphism_but_phi_psi_is_not() {
        // phi*phi = phi*phi and psi*phi = phi*psi = f*I, so (phi, phi) always intertwines
        let x = x2_plus_4();
        assert_eq!(is_morphism(&x, &x, x.phi(), x.phi()), Ok(true));
        assert_eq!(is_morphism(&x, &x, x.phi(), x.psi()), Ok(false));
        assert!(matches!(
            Morphism::new(x.clone(), x.clone(), x.phi().clone(), x.psi().clone()),
            Err(FactorizationError::NotAMorphism)
        ));
        let zero = PolyMatrix::zeros(2, 2);
        assert_eq!(
            is_morphism(&x, &x, &PolyMatrix::identity(2), &zero),
            Ok(false)
        );
        assert!(is_morphism(&x, &x, &PolyMatrix::identity(3), &zero).is_err());
    }

    #[test]
    fn identity_and_scalar_morphisms() {
        let x = x2_plus_4();
        let id = Morphism::identity(&x);
        assert!(id.is_morphism());
        let s = Morphism::scalar(&x, &p("x + 3y"));
        assert!(s.is_morphism());
        let c = s.compose(&id).unwrap();
        assert_eq!(c.alpha(), s.alpha());
        assert!(c.is_morphism());
    }

    #[test]
    fn composition_requires_matching_ends() {
        let x = x2_plus_4();
        let y = x.swapped();
        let id_x = Morphism::identity(&x);
        let id_y = Morphism::identity(&y);
        assert_eq!(id_y.compose(&id_x), Err(FactorizationError::NotComposable));
    }

    #[test]
    fn direct_sum_needs_same_target() {
        let x = x2_plus_4();
        let s = x.direct_sum(&x.swapped()).unwrap();
        assert_eq!(s.size(), 4);
        assert!(s.verify_exact().passed());
        let other = MatrixFactorization::trivial(p("x"), p("y"));
        assert_eq!(
            x.direct_sum(&other),
            Err(FactorizationError::TargetMismatch)
        );
    }
}
