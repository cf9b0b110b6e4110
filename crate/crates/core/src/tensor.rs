use core::fmt;
use core::str::FromStr;

use crate::factorization::{MatrixFactorization, Morphism};
use crate::matrix::{PolyMatrix, ShuffleMatrix};

/// Block layout of the Yoshino product. All four give factorizations of
/// `f + g` of size `2nm`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub enum YoshinoVariant {
    #[default]
    Standard,
    V1,
    V2,
    V3,
}

impl YoshinoVariant {
    pub const ALL: [YoshinoVariant; 4] = [
        YoshinoVariant::Standard,
        YoshinoVariant::V1,
        YoshinoVariant::V2,
        YoshinoVariant::V3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            YoshinoVariant::Standard => "standard",
            YoshinoVariant::V1 => "v1",
            YoshinoVariant::V2 => "v2",
            YoshinoVariant::V3 => "v3",
        }
    }
}

impl fmt::Display for YoshinoVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for YoshinoVariant {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        YoshinoVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| alloc::format!("unknown Yoshino variant {s:?}"))
    }
}

fn block(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> PolyMatrix {
    PolyMatrix::block2(a, b, c, d).expect("blocks of equal size")
}

/// Yoshino tensor product `X ⊗̂ Y`, a factorization of `f + g` of size `2nm`.
pub fn yoshino(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
    variant: YoshinoVariant,
) -> MatrixFactorization {
    let (n, m) = (x.size(), y.size());
    let a = x.phi().kron(&PolyMatrix::identity(m));
    let b = x.psi().kron(&PolyMatrix::identity(m));
    let c = PolyMatrix::identity(n).kron(y.phi());
    let d = PolyMatrix::identity(n).kron(y.psi());
    let (phi, psi) = match variant {
        YoshinoVariant::Standard => (block(&a, &c, &d.neg(), &b), block(&b, &c.neg(), &d, &a)),
        YoshinoVariant::V1 => (block(&c, &b, &a, &d.neg()), block(&d, &b, &a, &c.neg())),
        YoshinoVariant::V2 => (block(&b, &d.neg(), &c, &a), block(&a, &d, &c.neg(), &b)),
        YoshinoVariant::V3 => (block(&d.neg(), &a, &b, &c), block(&c.neg(), &a, &b, &d)),
    };
    MatrixFactorization::assemble(x.f() + y.f(), phi, psi)
}

/// Multiplicative tensor product `X ⊗̃ Y`: block diagonal copies of the
/// Kronecker products, a factorization of `f*g` of size `2nm`.
pub fn mult_tensor(x: &MatrixFactorization, y: &MatrixFactorization) -> MatrixFactorization {
    let phi = x.phi().kron(y.phi());
    let psi = x.psi().kron(y.psi());
    MatrixFactorization::assemble(x.f() * y.f(), phi.direct_sum(&phi), psi.direct_sum(&psi))
}

/// Anti-diagonal form of [`mult_tensor`].
pub fn mult_tensor_variant(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
) -> MatrixFactorization {
    let phi = x.phi().kron(y.phi());
    let psi = x.psi().kron(y.psi());
    let z = PolyMatrix::zeros(phi.rows(), phi.cols());
    MatrixFactorization::assemble(
        x.f() * y.f(),
        block(&z, &phi, &phi, &z),
        block(&z, &psi, &psi, &z),
    )
}

/// Reduced multiplicative tensor product `X ⊗̄ Y = (phi ⊗ phi', psi ⊗ psi')`,
/// a factorization of `f*g` of size `nm`.
pub fn reduced_tensor(x: &MatrixFactorization, y: &MatrixFactorization) -> MatrixFactorization {
    MatrixFactorization::assemble(x.f() * y.f(), x.phi().kron(y.phi()), x.psi().kron(y.psi()))
}

/// `Z_f ⊗̄ Z_g = (alpha_f ⊗ alpha_g, beta_f ⊗ beta_g)` between the reduced
/// tensor products of the domains and of the codomains.
pub fn tensor_morphisms(zf: &Morphism, zg: &Morphism) -> Morphism {
    Morphism::assemble(
        reduced_tensor(zf.domain(), zg.domain()),
        reduced_tensor(zf.codomain(), zg.codomain()),
        zf.alpha().kron(zg.alpha()),
        zf.beta().kron(zg.beta()),
    )
}

/// Permutation `T = S_{2n,a} (S_{a,n} ⊕ S_{a,n})` relating the two sides of
/// right distributivity: for `X'` of size `a` and `X1`, `X2` of size `n`,
/// `(X' ⊗̄ X1) ⊕ (X' ⊗̄ X2) = T^T (X' ⊗̄ (X1 ⊕ X2)) T` on both matrices.
pub fn distributivity_permutation(a: usize, n: usize) -> PolyMatrix {
    let outer = ShuffleMatrix::new(2 * n, a).to_matrix();
    let inner = ShuffleMatrix::new(a, n).to_matrix();
    outer
        .mul(&inner.direct_sum(&inner))
        .expect("both of size 2an")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::Polynomial;

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

    fn m_xy_z2() -> MatrixFactorization {
        MatrixFactorization::new(
            p("xy + z^2"),
            pm(&[&["x", "-z"], &["z", "y"]]),
            pm(&[&["y", "z"], &["-z", "x"]]),
        )
        .unwrap()
    }

    #[test]
    fn yoshino_variants_factor_the_sum() {
        let x = m_xy_z2();
        let y = MatrixFactorization::trivial(p("x"), p("w"));
        for v in YoshinoVariant::ALL {
            let t = yoshino(&x, &y, v);
            assert_eq!(t.size(), 4);
            assert_eq!(t.f(), &p("xy + z^2 + xw"));
            assert!(t.verify_exact().passed(), "{v}");
        }
    }

    #[test]
    fn yoshino_standard_layout() {
        let x = MatrixFactorization::trivial(p("a"), p("b"));
        let y = MatrixFactorization::trivial(p("c"), p("d"));
        let t = yoshino(&x, &y, YoshinoVariant::Standard);
        assert_eq!(t.phi(), &pm(&[&["a", "c"], &["-d", "b"]]));
        assert_eq!(t.psi(), &pm(&[&["b", "-c"], &["d", "a"]]));
    }

    #[test]
    fn products_factor_the_product() {
        let x = m_xy_z2();
        let y = MatrixFactorization::trivial(p("z"), p("y"));
        for t in [mult_tensor(&x, &y), mult_tensor_variant(&x, &y)] {
            assert_eq!(t.size(), 4);
            assert!(t.verify_exact().passed());
        }
        let r = reduced_tensor(&x, &y);
        assert_eq!(r.size(), 2);
        assert_eq!(r.f(), &p("(xy + z^2) yz"));
        assert!(r.verify_exact().passed());
    }

    #[test]
    fn variant_names_round_trip() {
        for v in YoshinoVariant::ALL {
            assert_eq!(v.name().parse::<YoshinoVariant>(), Ok(v));
        }
        assert!("v4".parse::<YoshinoVariant>().is_err());
    }

    #[test]
    fn distributivity_permutation_is_orthogonal() {
        let t = distributivity_permutation(2, 3);
        assert_eq!(t.mul(&t.transpose()).unwrap(), PolyMatrix::identity(12));
    }
}
