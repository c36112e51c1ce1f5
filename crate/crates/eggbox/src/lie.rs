//! The dimension engine: centralizer algebras and orbit dimensions.
//!
//! The unit group `G` of a linearly-defined monoid is open in the span of the
//! monoid, so its tangent space at the identity is the whole span and
//! `dim G = dim M`. The stabilizer groups attached to an idempotent `e` are
//! cut out of `G` by multiplicative conditions; differentiating each
//! condition at the identity turns it into a linear condition on the span,
//! whose exact kernel is the Lie algebra of the stabilizer:
//!
//! * centralizer `u*e*u^-1 = e`, linearized `X*e - e*X = 0`;
//! * left centralizer `e*u*e = e*u`, linearized `e*X*e - e*X = 0`;
//! * right centralizer `e*u*e = u*e`, linearized `e*X*e - X*e = 0`.
//!
//! Each orbit manifold is isomorphic to the acting group modulo the
//! stabilizer, so its dimension is the group dimension minus the stabilizer
//! dimension. That single principle yields every dimension reported here:
//!
//! * idempotents of the D-class of `e` (all of `G` acting by conjugation,
//!   stabilizer the centralizer);
//! * idempotents of the L-class (left centralizer acting, stabilizer the
//!   centralizer), and of the R-class (mirror);
//! * the orbit of the range of `e` in its Grassmannian (stabilizer the left
//!   centralizer) and of the null space (stabilizer the right centralizer).
//!
//! Dimensions are complex dimensions: kernel dimensions over the Gaussian
//! rationals. Two identities tie the report together and are recorded as
//! verdicts: the D-dimension splits as the sum of the L- and R-dimensions,
//! and the L-/R-dimensions match the null-space/range orbit dimensions. Both
//! amount to `dim G + dim C = dim Cl + dim Cr`.

use serde::Serialize;

use crate::error::Error;
use crate::idempotent::IdempotentPoint;
use crate::linalg::Matrix;
use crate::monoid::{MonoidElement, MonoidFamily, DEFAULT_COEFF_BOUND};
use crate::sampling::substream;

/// The linear condition carving a subalgebra out of the monoid span.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraCondition {
    /// No condition: the Lie algebra of the unit group itself.
    FullGroup,
    /// `X*e = e*X`.
    Centralizer,
    /// `e*X*e = e*X`.
    LeftCentralizer,
    /// `e*X*e = X*e`.
    RightCentralizer,
}

/// A Lie subalgebra of the monoid span, with an exact basis.
#[derive(Clone, Debug)]
pub struct LieSubalgebra {
    condition: AlgebraCondition,
    basis: Vec<MonoidElement>,
}

impl LieSubalgebra {
    pub fn condition(&self) -> AlgebraCondition {
        self.condition
    }

    pub fn basis(&self) -> &[MonoidElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All nine dimensions attached to one idempotent, plus the two identity
/// verdicts. The orbit dimensions are derived from the four kernel
/// dimensions by the orbit/stabilizer principle.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub idempotent: IdempotentPoint,
    #[serde(rename = "dim_G")]
    pub group: usize,
    #[serde(rename = "dim_C")]
    pub centralizer: usize,
    #[serde(rename = "dim_Cl")]
    pub left_centralizer: usize,
    #[serde(rename = "dim_Cr")]
    pub right_centralizer: usize,
    #[serde(rename = "dim_E_D")]
    pub d_class_idempotents: usize,
    #[serde(rename = "dim_E_L")]
    pub l_class_idempotents: usize,
    #[serde(rename = "dim_E_R")]
    pub r_class_idempotents: usize,
    #[serde(rename = "dim_Gl")]
    pub range_orbit: usize,
    #[serde(rename = "dim_Gr")]
    pub nullspace_orbit: usize,
    #[serde(rename = "dimension_additivity")]
    pub additivity: bool,
    #[serde(rename = "orbit_correspondence")]
    pub correspondence: bool,
}

impl DimensionReport {
    /// `dim E(D_e) = dim E(L_e) + dim E(R_e)`.
    pub fn additivity_holds(&self) -> bool {
        self.d_class_idempotents == self.l_class_idempotents + self.r_class_idempotents
    }

    /// `dim E(L_e) = dim Gr_e` and `dim E(R_e) = dim Gl_e`: idempotent patch
    /// dimensions match the Grassmannian orbit dimensions.
    pub fn correspondence_holds(&self) -> bool {
        self.l_class_idempotents == self.nullspace_orbit
            && self.r_class_idempotents == self.range_orbit
    }
}

fn check_membership(m: &MonoidFamily, e: &IdempotentPoint) -> Result<(), Error> {
    if m.contains(e.matrix()).is_none() {
        return Err(Error::NotInMonoid);
    }
    Ok(())
}

/// The Lie algebra of the unit group: the whole span of the monoid.
pub fn lie_algebra_of_g(m: &MonoidFamily) -> LieSubalgebra {
    let basis = (0..m.dim())
        .map(|i| {
            let mut coords = vec![crate::exact::Scalar::zero(); m.dim()];
            coords[i] = crate::exact::Scalar::one();
            m.element_from_coordinates(coords)
        })
        .collect();
    LieSubalgebra { condition: AlgebraCondition::FullGroup, basis }
}

/// Kernel of `X -> X*e - e*X` on the span: the Lie algebra of the
/// centralizer group of `e`.
pub fn centralizer_algebra(
    m: &MonoidFamily,
    e: &IdempotentPoint,
) -> Result<LieSubalgebra, Error> {
    check_membership(m, e)?;
    let e_mat = e.matrix().clone();
    let basis = m.condition_kernel(|x| &(x * &e_mat) - &(&e_mat * x));
    Ok(LieSubalgebra { condition: AlgebraCondition::Centralizer, basis })
}

/// Kernel of `X -> e*X*e - e*X`: the Lie algebra of the left centralizer.
/// Contains the centralizer algebra.
pub fn left_centralizer_algebra(
    m: &MonoidFamily,
    e: &IdempotentPoint,
) -> Result<LieSubalgebra, Error> {
    check_membership(m, e)?;
    let e_mat = e.matrix().clone();
    let basis = m.condition_kernel(|x| &(&(&e_mat * x) * &e_mat) - &(&e_mat * x));
    Ok(LieSubalgebra { condition: AlgebraCondition::LeftCentralizer, basis })
}

/// Kernel of `X -> e*X*e - X*e`: the Lie algebra of the right centralizer.
pub fn right_centralizer_algebra(
    m: &MonoidFamily,
    e: &IdempotentPoint,
) -> Result<LieSubalgebra, Error> {
    check_membership(m, e)?;
    let e_mat = e.matrix().clone();
    let basis = m.condition_kernel(|x| &(&(&e_mat * x) * &e_mat) - &(x * &e_mat));
    Ok(LieSubalgebra { condition: AlgebraCondition::RightCentralizer, basis })
}

/// Computes all nine dimensions for `e` and evaluates the two identity
/// verdicts.
pub fn dimension_report(m: &MonoidFamily, e: &IdempotentPoint) -> Result<DimensionReport, Error> {
    let group = m.dim();
    let centralizer = centralizer_algebra(m, e)?.dim();
    let left_centralizer = left_centralizer_algebra(m, e)?.dim();
    let right_centralizer = right_centralizer_algebra(m, e)?.dim();
    let mut report = DimensionReport {
        idempotent: e.clone(),
        group,
        centralizer,
        left_centralizer,
        right_centralizer,
        d_class_idempotents: group - centralizer,
        l_class_idempotents: left_centralizer - centralizer,
        r_class_idempotents: right_centralizer - centralizer,
        range_orbit: group - left_centralizer,
        nullspace_orbit: group - right_centralizer,
        additivity: false,
        correspondence: false,
    };
    report.additivity = report.additivity_holds();
    report.correspondence = report.correspondence_holds();
    Ok(report)
}

/// True iff `dim E(D_e) = dim E(L_e) + dim E(R_e)` holds for `e`.
pub fn verify_dimension_additivity(m: &MonoidFamily, e: &IdempotentPoint) -> Result<bool, Error> {
    Ok(dimension_report(m, e)?.additivity)
}

/// True iff the idempotent orbit dimensions match the subspace orbit
/// dimensions for `e`.
pub fn verify_orbit_correspondence(m: &MonoidFamily, e: &IdempotentPoint) -> Result<bool, Error> {
    Ok(dimension_report(m, e)?.correspondence)
}

/// Which idempotent orbit to linearize in [`empirical_orbit_dim`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentOrbit {
    DClass,
    LClass,
    RClass,
}

/// Independent cross-check of the orbit dimensions: the rank of the
/// linearized orbit map at `e`, estimated from the images `X*e - e*X` of
/// `samples` random directions in the acting group's algebra. The estimate
/// never exceeds the true dimension and equals it generically once
/// `samples` reaches that dimension.
pub fn empirical_orbit_dim(
    m: &MonoidFamily,
    e: &IdempotentPoint,
    orbit: IdempotentOrbit,
    samples: usize,
    seed: u64,
) -> Result<usize, Error> {
    check_membership(m, e)?;
    let domain = match orbit {
        IdempotentOrbit::DClass => lie_algebra_of_g(m),
        IdempotentOrbit::LClass => left_centralizer_algebra(m, e)?,
        IdempotentOrbit::RClass => right_centralizer_algebra(m, e)?,
    };
    let e_mat = e.matrix();
    let mut rng = substream(seed, "orbit_dim");
    let rows: Vec<Vec<crate::exact::Scalar>> = (0..samples)
        .map(|_| {
            let x = m.random_combination(&mut rng, domain.basis(), DEFAULT_COEFF_BOUND);
            (&(x.matrix() * e_mat) - &(e_mat * x.matrix())).flatten()
        })
        .collect();
    Ok(Matrix::from_rows(rows)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempotent::{standard_idempotent, StandardIdempotent};

    fn full(n: usize) -> MonoidFamily {
        MonoidFamily::full(n)
    }

    fn block12() -> MonoidFamily {
        MonoidFamily::block_diagonal(&[1, 2]).unwrap()
    }

    fn full_idempotent(m: &MonoidFamily, k: usize) -> IdempotentPoint {
        standard_idempotent(m, &StandardIdempotent::Rank(k)).unwrap()
    }

    fn block_idempotent(m: &MonoidFamily, ranks: &[usize]) -> IdempotentPoint {
        standard_idempotent(m, &StandardIdempotent::BlockRanks(ranks.to_vec())).unwrap()
    }

    #[test]
    fn group_algebra_dimensions() {
        assert_eq!(lie_algebra_of_g(&full(3)).dim(), 9);
        assert_eq!(lie_algebra_of_g(&block12()).dim(), 5);
        assert_eq!(lie_algebra_of_g(&full(1)).dim(), 1);
    }

    #[test]
    fn centralizer_dimensions_by_hand() {
        let m2 = full(2);
        let e = full_idempotent(&m2, 1);
        assert_eq!(centralizer_algebra(&m2, &e).unwrap().dim(), 2);

        let mb = block12();
        let e = block_idempotent(&mb, &[1, 0]);
        assert_eq!(centralizer_algebra(&mb, &e).unwrap().dim(), 5);
        let f = block_idempotent(&mb, &[0, 1]);
        assert_eq!(centralizer_algebra(&mb, &f).unwrap().dim(), 3);
    }

    #[test]
    fn one_sided_centralizer_dimensions_by_hand() {
        let m2 = full(2);
        let e = full_idempotent(&m2, 1);
        assert_eq!(left_centralizer_algebra(&m2, &e).unwrap().dim(), 3);
        assert_eq!(right_centralizer_algebra(&m2, &e).unwrap().dim(), 3);

        let mb = block12();
        let f = block_idempotent(&mb, &[0, 1]);
        assert_eq!(left_centralizer_algebra(&mb, &f).unwrap().dim(), 4);
        assert_eq!(right_centralizer_algebra(&mb, &f).unwrap().dim(), 4);

        // The identity satisfies every condition vacuously.
        let id = full_idempotent(&m2, 2);
        assert_eq!(right_centralizer_algebra(&m2, &id).unwrap().dim(), 4);
    }

    #[test]
    fn one_sided_kernel_formula_in_full_monoids() {
        for n in 2..=5usize {
            let m = full(n);
            for k in 0..=n {
                let e = full_idempotent(&m, k);
                let expected = n * n - k * (n - k);
                assert_eq!(left_centralizer_algebra(&m, &e).unwrap().dim(), expected);
                assert_eq!(right_centralizer_algebra(&m, &e).unwrap().dim(), expected);
            }
        }
    }

    #[test]
    fn basis_elements_satisfy_their_conditions() {
        let m = block12();
        let f = block_idempotent(&m, &[0, 1]);
        let e_mat = f.matrix();
        let c = centralizer_algebra(&m, &f).unwrap();
        for x in c.basis() {
            let x = x.matrix();
            assert_eq!(&(x * e_mat), &(e_mat * x));
        }
        let l = left_centralizer_algebra(&m, &f).unwrap();
        for x in l.basis() {
            let x = x.matrix();
            assert_eq!(&(&(e_mat * x) * e_mat), &(e_mat * x));
        }
        // Containment: the centralizer sits inside both one-sided ones.
        for x in c.basis() {
            let x = x.matrix();
            assert_eq!(&(&(e_mat * x) * e_mat), &(e_mat * x));
            assert_eq!(&(&(e_mat * x) * e_mat), &(x * e_mat));
        }
    }

    #[test]
    fn block_monoid_worked_reports() {
        let m = block12();
        let e = block_idempotent(&m, &[1, 0]);
        let report = dimension_report(&m, &e).unwrap();
        assert_eq!(report.d_class_idempotents, 0);
        assert!(report.additivity && report.correspondence);

        let f = block_idempotent(&m, &[0, 1]);
        let report = dimension_report(&m, &f).unwrap();
        assert_eq!(report.d_class_idempotents, 2);
        assert_eq!(report.l_class_idempotents, 1);
        assert_eq!(report.r_class_idempotents, 1);
        assert_eq!(report.range_orbit, 1);
        assert_eq!(report.nullspace_orbit, 1);
        assert!(report.additivity && report.correspondence);
    }

    #[test]
    fn full_monoid_dimension_formulas() {
        for n in 2..=4usize {
            let m = full(n);
            for k in 0..=n {
                let report = dimension_report(&m, &full_idempotent(&m, k)).unwrap();
                assert_eq!(report.l_class_idempotents, k * (n - k));
                assert_eq!(report.r_class_idempotents, k * (n - k));
                assert_eq!(report.d_class_idempotents, 2 * k * (n - k));
                assert!(report.additivity && report.correspondence);
            }
        }
    }

    #[test]
    fn identity_sits_alone_in_its_orbits() {
        let m = full(3);
        let report = dimension_report(&m, &full_idempotent(&m, 3)).unwrap();
        assert_eq!(report.l_class_idempotents, 0);
        assert_eq!(report.r_class_idempotents, 0);
        assert_eq!(report.d_class_idempotents, 0);
        assert!(report.additivity);
    }

    #[test]
    fn identity_arithmetic_examples() {
        // Full M_2, rank 1: 4 + 2 = 3 + 3.
        let m2 = full(2);
        let e = full_idempotent(&m2, 1);
        let r = dimension_report(&m2, &e).unwrap();
        assert_eq!(r.group + r.centralizer, r.left_centralizer + r.right_centralizer);
        assert_eq!((r.group, r.centralizer), (4, 2));
        // Block family, second idempotent: 5 + 3 = 4 + 4.
        let mb = block12();
        let f = block_idempotent(&mb, &[0, 1]);
        let r = dimension_report(&mb, &f).unwrap();
        assert_eq!((r.group, r.centralizer), (5, 3));
        assert_eq!((r.left_centralizer, r.right_centralizer), (4, 4));
    }

    #[test]
    fn rank_nullity_of_the_commutator_map() {
        let m = block12();
        for ranks in [[0, 0], [1, 0], [0, 1], [1, 1], [0, 2], [1, 2]] {
            let e = block_idempotent(&m, &ranks);
            let report = dimension_report(&m, &e).unwrap();
            let image = empirical_orbit_dim(&m, &e, IdempotentOrbit::DClass, m.dim() + 4, 9)
                .unwrap();
            assert_eq!(image + report.centralizer, report.group);
        }
    }

    #[test]
    fn empirical_orbit_dims_match_reports() {
        let families: Vec<MonoidFamily> = vec![full(3), block12()];
        for (fi, m) in families.iter().enumerate() {
            let points: Vec<IdempotentPoint> = match m.kind() {
                crate::monoid::FamilyKind::Full => {
                    (0..=3).map(|k| full_idempotent(m, k)).collect()
                }
                _ => vec![block_idempotent(m, &[1, 0]), block_idempotent(m, &[0, 1])],
            };
            for (pi, e) in points.iter().enumerate() {
                let report = dimension_report(m, e).unwrap();
                let seed = 100 + (fi * 10 + pi) as u64;
                let samples = m.dim() + 4;
                assert_eq!(
                    empirical_orbit_dim(m, e, IdempotentOrbit::DClass, samples, seed).unwrap(),
                    report.d_class_idempotents
                );
                assert_eq!(
                    empirical_orbit_dim(m, e, IdempotentOrbit::LClass, samples, seed).unwrap(),
                    report.l_class_idempotents
                );
                assert_eq!(
                    empirical_orbit_dim(m, e, IdempotentOrbit::RClass, samples, seed).unwrap(),
                    report.r_class_idempotents
                );
            }
        }
    }

    #[test]
    fn full_m3_rank_one_conjugation_orbit_dimension() {
        let m = full(3);
        let e = full_idempotent(&m, 1);
        let dim = empirical_orbit_dim(&m, &e, IdempotentOrbit::DClass, m.dim() + 4, 13).unwrap();
        assert_eq!(dim, 4);
    }

    #[test]
    fn reports_are_conjugation_invariant() {
        let m = block12();
        let f = block_idempotent(&m, &[0, 1]);
        let base = dimension_report(&m, &f).unwrap();
        let mut rng = crate::sampling::substream(14, "conj_invariance");
        for _ in 0..20 {
            let u = m.random_unit(&mut rng, 2).unwrap();
            let g = crate::idempotent::conjugate(&m, &u, &f).unwrap();
            let moved = dimension_report(&m, &g).unwrap();
            assert_eq!(moved.group, base.group);
            assert_eq!(moved.centralizer, base.centralizer);
            assert_eq!(moved.left_centralizer, base.left_centralizer);
            assert_eq!(moved.right_centralizer, base.right_centralizer);
            assert_eq!(moved.d_class_idempotents, base.d_class_idempotents);
        }
    }

    #[test]
    fn identities_hold_for_all_built_in_idempotents_up_to_n6() {
        // Full families.
        for n in 1..=6usize {
            let m = full(n);
            for k in 0..=n {
                let e = full_idempotent(&m, k);
                assert!(verify_dimension_additivity(&m, &e).unwrap());
                assert!(verify_orbit_correspondence(&m, &e).unwrap());
            }
        }
        // Block families covering several partitions with n <= 6.
        for blocks in [vec![1, 2], vec![2, 2], vec![1, 1, 2], vec![2, 3], vec![1, 2, 3]] {
            let m = MonoidFamily::block_diagonal(&blocks).unwrap();
            let mut selectors = vec![vec![0; blocks.len()]];
            for (i, &size) in blocks.iter().enumerate() {
                let mut more = Vec::new();
                for sel in &selectors {
                    for r in 1..=size {
                        let mut s = sel.clone();
                        s[i] = r;
                        more.push(s);
                    }
                }
                selectors.extend(more);
            }
            for ranks in selectors {
                let e = block_idempotent(&m, &ranks);
                assert!(verify_dimension_additivity(&m, &e).unwrap());
                assert!(verify_orbit_correspondence(&m, &e).unwrap());
            }
        }
    }

    #[test]
    fn report_json_has_the_nine_fields_and_verdicts() {
        let m = block12();
        let f = block_idempotent(&m, &[0, 1]);
        let report = dimension_report(&m, &f).unwrap();
        let value = serde_json::to_value(&report).unwrap();
        for field in [
            "dim_G", "dim_C", "dim_Cl", "dim_Cr", "dim_E_D", "dim_E_L", "dim_E_R", "dim_Gl",
            "dim_Gr",
        ] {
            assert!(value.get(field).is_some(), "missing {field}");
        }
        assert_eq!(value["dimension_additivity"], serde_json::json!(true));
        assert_eq!(value["orbit_correspondence"], serde_json::json!(true));
        assert_eq!(value["dim_E_D"], serde_json::json!(2));
    }
}
