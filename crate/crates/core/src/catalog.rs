//! Worked examples used by the demo, the acceptance suite and the docs.

use alloc::vec;
use alloc::vec::Vec;

use crate::factorization::MatrixFactorization;
use crate::matrix::PolyMatrix;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::refined::SummandReducedPoly;
use crate::standard::{standard_factorize, StandardVariant, SummandList};
use crate::tensor::{reduced_tensor, yoshino, YoshinoVariant};

fn p(s: &str) -> Polynomial {
    parse_polynomial(s).expect("catalog polynomial")
}

fn pm(rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect(),
    )
    .expect("catalog matrix")
}

fn from_pairs(pairs: &[(&str, &str)]) -> MatrixFactorization {
    let list = SummandList::new(pairs.iter().map(|(g, h)| (p(g), p(h))).collect())
        .expect("catalog summands");
    standard_factorize(&list, StandardVariant::Standard)
}

fn srp(terms: &[&str], products: &[&[&str]]) -> SummandReducedPoly {
    let products: Vec<Vec<&str>> = products.iter().map(|g| g.to_vec()).collect();
    SummandReducedPoly::parse(terms, &products).expect("catalog input")
}

/// `([[x, -2], [2, x]], [[x, 2], [-2, x]])` of `x^2 + 4`.
pub fn x2_plus_4() -> MatrixFactorization {
    MatrixFactorization::new(
        p("x^2 + 4"),
        pm(&[&["x", "-2"], &["2", "x"]]),
        pm(&[&["x", "2"], &["-2", "x"]]),
    )
    .expect("valid")
}

/// A 2x2 factorization of `xy + xz^2 + yz^2`.
pub fn xy_xz2_yz2() -> MatrixFactorization {
    MatrixFactorization::new(
        p("xy + xz^2 + yz^2"),
        pm(&[&["z^2", "y"], &["x", "-x - y"]]),
        pm(&[&["x + y", "y"], &["x", "-z^2"]]),
    )
    .expect("valid")
}

/// `M`, the standard-method factorization of `h = xy + z^2`.
pub fn m_factorization() -> MatrixFactorization {
    from_pairs(&[("x", "y"), ("z", "z")])
}

/// `P`, the standard-method factorization of `g = xy^2 + x^2z + yz^2`.
pub fn p_factorization() -> MatrixFactorization {
    from_pairs(&[("x", "y^2"), ("x^2", "z"), ("y", "z^2")])
}

/// `N`, the standard-method factorization of `t = x^2z + y^2 + y^2z`.
pub fn n_factorization() -> MatrixFactorization {
    from_pairs(&[("x^2", "z"), ("y", "y"), ("y^2", "z")])
}

/// `Q = ([z], [y])`.
pub fn q_factorization() -> MatrixFactorization {
    MatrixFactorization::trivial(p("z"), p("y"))
}

/// `L = ([x^5], [y^2])`.
pub fn l_factorization() -> MatrixFactorization {
    MatrixFactorization::trivial(p("x^5"), p("y^2"))
}

/// `M ⊗̄ P`, size 8.
pub fn hg_factorization() -> MatrixFactorization {
    reduced_tensor(&m_factorization(), &p_factorization())
}

/// `P ⊗̄ N`, size 16.
pub fn gt_factorization() -> MatrixFactorization {
    reduced_tensor(&p_factorization(), &n_factorization())
}

/// `Q ⊗̂ (M ⊗̄ P)`, size 16, of `zy + hg`.
pub fn rhg_factorization() -> MatrixFactorization {
    yoshino(
        &q_factorization(),
        &hg_factorization(),
        YoshinoVariant::Standard,
    )
}

/// `L ⊗̂ (P ⊗̄ N)`, size 32, of `x^5y^2 + gt`.
pub fn rgt_factorization() -> MatrixFactorization {
    yoshino(
        &l_factorization(),
        &gt_factorization(),
        YoshinoVariant::Standard,
    )
}

/// `zy + (xy^2 + x^2z + yz^2)(xy + z^2)`.
pub fn srp_zy_gh() -> SummandReducedPoly {
    srp(&["z*y"], &[&["x*y^2 + x^2*z + y*z^2", "x*y + z^2"]])
}

/// `x^5y^2 + (xy^2 + x^2z + yz^2)(x^2z + y^2 + y^2z)`.
pub fn srp_x5y2_gt() -> SummandReducedPoly {
    srp(
        &["x^5*y^2"],
        &[&["x*y^2 + x^2*z + y*z^2", "x^2*z + y^2 + y^2*z"]],
    )
}

/// `zy + (xy^2 + x^2z + yz^2)(xy + z^2) + (yz + xy^2 + x^2)(x^3z^2 + yx + y^2)`.
pub fn srp_two_products() -> SummandReducedPoly {
    srp(
        &["z*y"],
        &[
            &["x*y^2 + x^2*z + y*z^2", "x*y + z^2"],
            &["y*z + x*y^2 + x^2", "x^3*z^2 + y*x + y^2"],
        ],
    )
}

/// `z^5 + (xy + x^2z + yz^2)(x^2 + y^2)`.
pub fn srp_z5() -> SummandReducedPoly {
    srp(&["z^5"], &[&["x*y + x^2*z + y*z^2", "x^2 + y^2"]])
}

/// `x^3 - y^2`: no products at all.
pub fn srp_x3_minus_y2() -> SummandReducedPoly {
    srp(&["x^3", "-y^2"], &[])
}

/// `zx + (x - y)(x^4 + x^3y + x^2y^2 + xy^3 + y^4)`, whose product collapses
/// to `x^5 - y^5`.
pub fn srp_zx_geometric() -> SummandReducedPoly {
    srp(
        &["z*x"],
        &[&["x - y", "x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4"]],
    )
}

/// Two products, no monomial part: `(a + b)(c + d + e) + (f + g)(h + k + m)`.
pub fn srp_no_monomials() -> SummandReducedPoly {
    srp(&[], &[&["a + b", "c + d + e"], &["f + g", "h + k + m"]])
}

/// `(a + b)(c + d) + (e + f)(g + h)`: fails condition 3, since each product
/// of distinct variables has exactly as many monomials as its factors.
pub fn srp_no_monomials_flat() -> SummandReducedPoly {
    srp(&[], &[&["a + b", "c + d"], &["e + f", "g + h"]])
}

/// Every group a single factor, so refined and improved coincide.
pub fn srp_single_factor_groups() -> SummandReducedPoly {
    srp(&["w"], &[&["x + y"], &["y + z + x^2"]])
}

pub fn all_srps() -> Vec<(&'static str, SummandReducedPoly)> {
    vec![
        ("zy+gh", srp_zy_gh()),
        ("x5y2+gt", srp_x5y2_gt()),
        ("two-products", srp_two_products()),
        ("z5", srp_z5()),
        ("no-monomials", srp_no_monomials()),
        ("no-monomials-flat", srp_no_monomials_flat()),
        ("single-factor-groups", srp_single_factor_groups()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn building_blocks_verify() {
        for (x, n) in [
            (x2_plus_4(), 2),
            (xy_xz2_yz2(), 2),
            (m_factorization(), 2),
            (p_factorization(), 4),
            (n_factorization(), 4),
            (hg_factorization(), 8),
            (gt_factorization(), 16),
            (rhg_factorization(), 16),
        ] {
            assert_eq!(x.size(), n);
            assert!(x.verify_exact().passed(), "{x}");
        }
    }

    #[test]
    fn targets() {
        assert_eq!(rhg_factorization().f(), &srp_zy_gh().target());
        assert_eq!(rgt_factorization().f(), &srp_x5y2_gt().target());
        assert_eq!(srp_zx_geometric().products()[0].product(), p("x^5 - y^5"));
    }
}
