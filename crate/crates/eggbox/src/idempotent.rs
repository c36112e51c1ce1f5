//! Idempotents and their conjugation orbits.
//!
//! An idempotent `e` is a projection onto its range along its null space,
//! and those two complementary subspaces determine it uniquely. This module
//! constructs idempotents from complementary subspace pairs, validates them,
//! and samples the three conjugation orbits that matter for the dimension
//! theory:
//!
//! * all unit conjugates `u*e*u^-1`, which sweep the idempotents of the
//!   D-class of `e`;
//! * conjugates by units of the left centralizer `{u : e*u*e = e*u}`, which
//!   sweep the idempotents of the L-class;
//! * conjugates by units of the right centralizer `{u : e*u*e = u*e}`, which
//!   sweep the idempotents of the R-class.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::grassmann::{is_direct_sum, nullspace_of, range_of, Subspace};
use crate::linalg::Matrix;
use crate::monoid::{MonoidElement, MonoidFamily, DEFAULT_COEFF_BOUND};
use crate::sampling::substream;

/// A verified idempotent of a monoid with its cached subspace invariants.
///
/// Invariants: the matrix squares to itself, the range and null space are
/// complementary, and the rank equals the range dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentPoint {
    element: MonoidElement,
    rank: usize,
    range: Subspace,
    nullspace: Subspace,
}

/// Serialized form: the matrix plus the cached subspaces. Loading re-runs
/// validation through [`IdempotentPoint::from_data`].
#[derive(Serialize, Deserialize)]
pub struct IdempotentPointData {
    pub matrix: Matrix,
    pub range: Subspace,
    pub nullspace: Subspace,
}

impl IdempotentPoint {
    /// Validates `x` as an idempotent member of `m` and caches its subspaces.
    pub fn new(m: &MonoidFamily, x: Matrix) -> Result<IdempotentPoint, Error> {
        let element = m.element(x)?;
        let x = element.matrix();
        if &(x * x) != x {
            return Err(Error::NotIdempotent);
        }
        let range = range_of(x);
        let nullspace = nullspace_of(x);
        let rank = range.dim();
        debug_assert!(is_direct_sum(&range, &nullspace).unwrap());
        Ok(IdempotentPoint { rank, range, nullspace, element })
    }

    pub fn matrix(&self) -> &Matrix {
        self.element.matrix()
    }

    pub fn element(&self) -> &MonoidElement {
        &self.element
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn range(&self) -> &Subspace {
        &self.range
    }

    pub fn nullspace(&self) -> &Subspace {
        &self.nullspace
    }

    pub fn to_data(&self) -> IdempotentPointData {
        IdempotentPointData {
            matrix: self.matrix().clone(),
            range: self.range.clone(),
            nullspace: self.nullspace.clone(),
        }
    }

    /// Rebuilds a point from its serialized form, re-running validation and
    /// rejecting cached subspaces that disagree with the matrix.
    pub fn from_data(m: &MonoidFamily, data: IdempotentPointData) -> Result<IdempotentPoint, Error> {
        let point = IdempotentPoint::new(m, data.matrix)?;
        if point.range != data.range || point.nullspace != data.nullspace {
            return Err(Error::Parse("cached subspaces disagree with the matrix".into()));
        }
        Ok(point)
    }
}

impl Serialize for IdempotentPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_data().serialize(serializer)
    }
}

/// The unique idempotent with the given range and null space, which must be
/// complementary. With the basis rows of `w` and `nsp` stacked into an
/// invertible matrix `S`, the projection is `S^-1 * [basis of w; 0]`.
pub fn make_projection(
    m: &MonoidFamily,
    w: &Subspace,
    nsp: &Subspace,
) -> Result<IdempotentPoint, Error> {
    if !is_direct_sum(w, nsp)? {
        return Err(Error::NotComplementary);
    }
    let n = w.ambient();
    if n != m.n() {
        return Err(Error::AmbientMismatch { left: n, right: m.n() });
    }
    let stacked = w.basis().vstack(nsp.basis());
    let kept = w.basis().vstack(&Matrix::zero(nsp.dim(), n));
    let projection = &stacked.inverse().expect("complementary bases stack invertibly") * &kept;
    IdempotentPoint::new(m, projection)
}

/// Selector for the canonical idempotents each family carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StandardIdempotent {
    /// `diag(1,...,1,0,...,0)` of the given rank, for the full family.
    Rank(usize),
    /// One rank per diagonal block, for block-diagonal families.
    BlockRanks(Vec<usize>),
}

/// The canonical idempotent selected by `selector`; guaranteed to lie in `m`.
pub fn standard_idempotent(
    m: &MonoidFamily,
    selector: &StandardIdempotent,
) -> Result<IdempotentPoint, Error> {
    use crate::monoid::FamilyKind;
    let matrix = match (m.kind(), selector) {
        (FamilyKind::Full, StandardIdempotent::Rank(k)) => {
            if *k > m.n() {
                return Err(Error::InvalidSelector(format!("rank {k} exceeds n = {}", m.n())));
            }
            let mut e = Matrix::zero(m.n(), m.n());
            for i in 0..*k {
                e.set(i, i, crate::exact::Scalar::one());
            }
            e
        }
        (FamilyKind::BlockDiagonal(blocks), StandardIdempotent::BlockRanks(ranks)) => {
            if ranks.len() != blocks.len() {
                return Err(Error::InvalidSelector(format!(
                    "{} block ranks for {} blocks",
                    ranks.len(),
                    blocks.len()
                )));
            }
            let mut e = Matrix::zero(m.n(), m.n());
            let mut offset = 0;
            for (&size, &rank) in blocks.iter().zip(ranks) {
                if rank > size {
                    return Err(Error::InvalidSelector(format!(
                        "block rank {rank} exceeds block size {size}"
                    )));
                }
                for i in 0..rank {
                    e.set(offset + i, offset + i, crate::exact::Scalar::one());
                }
                offset += size;
            }
            e
        }
        _ => {
            return Err(Error::InvalidSelector(
                "selector does not match the family kind".into(),
            ))
        }
    };
    IdempotentPoint::new(m, matrix)
}

/// Conjugates the idempotent `f` by the unit `u`, staying inside the monoid.
/// Conjugation preserves idempotency and rank, and keeps the result in the
/// D-class of `f`.
pub fn conjugate(
    m: &MonoidFamily,
    u: &MonoidElement,
    f: &IdempotentPoint,
) -> Result<IdempotentPoint, Error> {
    if u.matrix().det().is_zero() {
        return Err(Error::NotAUnit);
    }
    let inverse = u.matrix().inverse().expect("determinant checked nonzero");
    if m.contains(&inverse).is_none() {
        return Err(Error::NotAUnit);
    }
    let conjugated = &(u.matrix() * f.matrix()) * &inverse;
    IdempotentPoint::new(m, conjugated)
}

fn sample_centralizer_conjugates(
    m: &MonoidFamily,
    e: &IdempotentPoint,
    condition: impl Fn(&Matrix) -> Matrix,
    count: usize,
    seed: u64,
    label: &str,
) -> Result<Vec<IdempotentPoint>, Error> {
    let kernel = m.condition_kernel(condition);
    let mut rng = substream(seed, label);
    let mut out = Vec::with_capacity(count);
    let mut budget = count.saturating_mul(64).max(64);
    while out.len() < count {
        if budget == 0 {
            return Err(Error::UnitSamplingFailed);
        }
        budget -= 1;
        let u = m.random_combination(&mut rng, &kernel, DEFAULT_COEFF_BOUND);
        if u.matrix().det().is_zero() {
            continue;
        }
        out.push(conjugate(m, &u, e)?);
    }
    Ok(out)
}

/// Samples idempotents of the L-class of `e`: conjugates of `e` by random
/// units of the left centralizer `{u : e*u*e = e*u}`. Every output shares
/// the range of `e`.
pub fn sample_e_l(
    m: &MonoidFamily,
    e: &IdempotentPoint,
    count: usize,
    seed: u64,
) -> Result<Vec<IdempotentPoint>, Error> {
    let e_mat = e.matrix().clone();
    sample_centralizer_conjugates(
        m,
        e,
        move |x| &(&(&e_mat * x) * &e_mat) - &(&e_mat * x),
        count,
        seed,
        "sample_e_l",
    )
}

/// Mirror of [`sample_e_l`] with the right centralizer `{u : e*u*e = u*e}`;
/// every output shares the null space of `e`.
pub fn sample_e_r(
    m: &MonoidFamily,
    e: &IdempotentPoint,
    count: usize,
    seed: u64,
) -> Result<Vec<IdempotentPoint>, Error> {
    let e_mat = e.matrix().clone();
    sample_centralizer_conjugates(
        m,
        e,
        move |x| &(&(&e_mat * x) * &e_mat) - &(x * &e_mat),
        count,
        seed,
        "sample_e_r",
    )
}

/// Samples idempotents of the D-class of `e`: conjugates by arbitrary random
/// units of the monoid.
pub fn sample_e_d(
    m: &MonoidFamily,
    e: &IdempotentPoint,
    count: usize,
    seed: u64,
) -> Result<Vec<IdempotentPoint>, Error> {
    let mut rng = substream(seed, "sample_e_d");
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let u = m.random_unit(&mut rng, DEFAULT_COEFF_BOUND)?;
        out.push(conjugate(m, &u, e)?);
    }
    Ok(out)
}

/// Conjugates every element of a list by the same unit. Idempotents map to
/// idempotents and relatedness within the list is preserved, so this carries
/// a sampled class onto a parallel class.
pub fn transport_class(
    m: &MonoidFamily,
    u: &MonoidElement,
    xs: &[MonoidElement],
) -> Result<Vec<MonoidElement>, Error> {
    if u.matrix().det().is_zero() {
        return Err(Error::NotAUnit);
    }
    let inverse = u.matrix().inverse().expect("determinant checked nonzero");
    if m.contains(&inverse).is_none() {
        return Err(Error::NotAUnit);
    }
    xs.iter()
        .map(|x| m.element(&(u.matrix() * x.matrix()) * &inverse))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::{l_related, r_related, Relation};
    use crate::sampling::{random_invertible, substream};

    fn mat(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_int_rows(rows)
    }

    fn full3() -> MonoidFamily {
        MonoidFamily::full(3)
    }

    fn block12() -> MonoidFamily {
        MonoidFamily::block_diagonal(&[1, 2]).unwrap()
    }

    #[test]
    fn projection_onto_standard_axes() {
        let m = full3();
        let w = Subspace::from_rows(&mat(&[vec![1, 0, 0], vec![0, 1, 0]]));
        let nsp = Subspace::from_rows(&mat(&[vec![0, 0, 1]]));
        let e = make_projection(&m, &w, &nsp).unwrap();
        assert_eq!(e.matrix(), &mat(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn skew_projection_by_hand() {
        let m = MonoidFamily::full(2);
        let w = Subspace::from_rows(&mat(&[vec![1, 1]]));
        let nsp = Subspace::from_rows(&mat(&[vec![0, 1]]));
        let e = make_projection(&m, &w, &nsp).unwrap();
        assert_eq!(e.matrix(), &mat(&[vec![1, 1], vec![0, 0]]));
    }

    #[test]
    fn projection_rejects_overlapping_spaces() {
        let m = MonoidFamily::full(2);
        let w = Subspace::from_rows(&mat(&[vec![1, 0]]));
        assert!(matches!(make_projection(&m, &w, &w), Err(Error::NotComplementary)));
    }

    #[test]
    fn random_projections_are_idempotent() {
        let m = full3();
        let mut rng = substream(71, "projections");
        let mut built = 0;
        while built < 200 {
            let w_raw = crate::sampling::random_matrix(&mut rng, 2, 3, 2);
            let n_raw = crate::sampling::random_matrix(&mut rng, 1, 3, 2);
            let w = Subspace::from_rows(&w_raw);
            let nsp = Subspace::from_rows(&n_raw);
            if w.dim() != 2 || nsp.dim() != 1 || !is_direct_sum(&w, &nsp).unwrap() {
                continue;
            }
            let e = make_projection(&m, &w, &nsp).unwrap();
            let x = e.matrix();
            assert_eq!(&(x * x), x);
            assert_eq!(e.rank(), w.dim());
            assert_eq!(e.range(), &w);
            assert_eq!(e.nullspace(), &nsp);
            built += 1;
        }
    }

    #[test]
    fn reconstruction_is_the_identity_on_idempotents() {
        let m = full3();
        let mut rng = substream(72, "reconstruction");
        let e = standard_idempotent(&m, &StandardIdempotent::Rank(2)).unwrap();
        for _ in 0..200 {
            let u = m.element(random_invertible(&mut rng, 3, 2)).unwrap();
            let f = conjugate(&m, &u, &e).unwrap();
            let rebuilt = make_projection(&m, f.range(), f.nullspace()).unwrap();
            assert_eq!(rebuilt.matrix(), f.matrix());
        }
    }

    #[test]
    fn standard_idempotents_per_family() {
        let e = standard_idempotent(&full3(), &StandardIdempotent::Rank(2)).unwrap();
        assert_eq!(e.matrix(), &mat(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]));

        let m = block12();
        let e = standard_idempotent(&m, &StandardIdempotent::BlockRanks(vec![1, 0])).unwrap();
        assert_eq!(e.matrix(), &mat(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]));
        let f = standard_idempotent(&m, &StandardIdempotent::BlockRanks(vec![0, 1])).unwrap();
        assert_eq!(f.matrix(), &mat(&[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]));

        assert!(standard_idempotent(&m, &StandardIdempotent::Rank(1)).is_err());
        assert!(standard_idempotent(&m, &StandardIdempotent::BlockRanks(vec![2, 0])).is_err());
    }

    #[test]
    fn conjugation_by_identity_is_trivial() {
        let m = full3();
        let e = standard_idempotent(&m, &StandardIdempotent::Rank(1)).unwrap();
        let id = m.identity_element();
        assert_eq!(conjugate(&m, &id, &e).unwrap(), e);
    }

    #[test]
    fn conjugation_preserves_rank_and_idempotency() {
        let m = full3();
        let e = standard_idempotent(&m, &StandardIdempotent::Rank(2)).unwrap();
        let mut rng = substream(73, "conj_rank");
        for _ in 0..50 {
            let u = m.random_unit(&mut rng, 2).unwrap();
            let f = conjugate(&m, &u, &e).unwrap();
            assert_eq!(f.rank(), 2);
            assert_eq!(&(f.matrix() * f.matrix()), f.matrix());
        }
    }

    #[test]
    fn conjugation_rejects_non_units() {
        let m = full3();
        let e = standard_idempotent(&m, &StandardIdempotent::Rank(1)).unwrap();
        let singular = m.element(mat(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]])).unwrap();
        assert!(matches!(conjugate(&m, &singular, &e), Err(Error::NotAUnit)));
    }

    #[test]
    fn conjugation_is_a_group_action() {
        let m = full3();
        let e = standard_idempotent(&m, &StandardIdempotent::Rank(1)).unwrap();
        let mut rng = substream(74, "action");
        for _ in 0..200 {
            let u = m.random_unit(&mut rng, 2).unwrap();
            let v = m.random_unit(&mut rng, 2).unwrap();
            let uv = m.mul(&u, &v);
            let stepwise = conjugate(&m, &u, &conjugate(&m, &v, &e).unwrap()).unwrap();
            assert_eq!(stepwise, conjugate(&m, &uv, &e).unwrap());
        }
    }

    #[test]
    fn l_samples_share_the_range() {
        let m = full3();
        let e = standard_idempotent(&m, &StandardIdempotent::Rank(1)).unwrap();
        let samples = sample_e_l(&m, &e, 50, 75).unwrap();
        for f in &samples {
            assert_eq!(&(f.matrix() * f.matrix()), f.matrix());
            assert!(l_related(&m, f.matrix(), e.matrix()).unwrap());
            assert_eq!(f.range(), e.range());
        }
    }

    #[test]
    fn r_samples_share_the_nullspace() {
        let m = full3();
        let e = standard_idempotent(&m, &StandardIdempotent::Rank(1)).unwrap();
        let samples = sample_e_r(&m, &e, 50, 76).unwrap();
        for f in &samples {
            assert!(r_related(&m, f.matrix(), e.matrix()).unwrap());
            assert_eq!(f.nullspace(), e.nullspace());
        }
        assert!(sample_e_r(&m, &e, 0, 0).unwrap().is_empty());
    }

    #[test]
    fn block_r_samples_stay_in_the_block() {
        let m = block12();
        let f = standard_idempotent(&m, &StandardIdempotent::BlockRanks(vec![0, 1])).unwrap();
        for g in sample_e_r(&m, &f, 30, 77).unwrap() {
            // Everything stays of the form diag(0, g') for a 2-by-2 block g'.
            let x = g.matrix();
            assert!(x.get(0, 0).is_zero());
            for j in 0..3 {
                assert!(x.get(0, j).is_zero());
                assert!(x.get(j, 0).is_zero());
            }
        }
    }

    #[test]
    fn d_samples_are_rank_preserving_conjugates() {
        let m = full3();
        let e = standard_idempotent(&m, &StandardIdempotent::Rank(2)).unwrap();
        for f in sample_e_d(&m, &e, 30, 78).unwrap() {
            assert_eq!(f.rank(), 2);
            assert_eq!(&(f.matrix() * f.matrix()), f.matrix());
        }
    }

    #[test]
    fn block_d_orbit_of_the_scalar_axis_is_a_single_point() {
        let m = block12();
        let e = standard_idempotent(&m, &StandardIdempotent::BlockRanks(vec![1, 0])).unwrap();
        for f in sample_e_d(&m, &e, 100, 79).unwrap() {
            assert_eq!(&f, &e);
        }
        let mut rng = substream(80, "block_conj");
        for _ in 0..100 {
            let u = m.random_unit(&mut rng, 2).unwrap();
            assert_eq!(conjugate(&m, &u, &e).unwrap(), e);
        }
    }

    #[test]
    fn block_d_orbit_of_the_plane_idempotent_stays_block_shaped() {
        let m = block12();
        let f = standard_idempotent(&m, &StandardIdempotent::BlockRanks(vec![0, 1])).unwrap();
        for g in sample_e_d(&m, &f, 50, 81).unwrap() {
            let x = g.matrix();
            assert_eq!(g.rank(), 1);
            assert!(x.get(0, 0).is_zero(), "scalar block stays zero");
        }
    }

    #[test]
    fn transport_preserves_structure() {
        let m = full3();
        let mut rng = substream(82, "transport");
        let a = m.random_element(&mut rng, 2);
        let class = crate::green::sample_class(&m, &a, Relation::L, 6, 83).unwrap();
        let u = m.random_unit(&mut rng, 2).unwrap();
        let moved = transport_class(&m, &u, &class).unwrap();
        assert_eq!(moved.len(), class.len());
        for i in 0..class.len() {
            for j in 0..class.len() {
                assert_eq!(
                    l_related(&m, class[i].matrix(), class[j].matrix()).unwrap(),
                    l_related(&m, moved[i].matrix(), moved[j].matrix()).unwrap()
                );
            }
        }
        let id = m.identity_element();
        assert_eq!(transport_class(&m, &id, &class).unwrap(), class);

        let e = standard_idempotent(&m, &StandardIdempotent::Rank(1)).unwrap();
        let moved = transport_class(&m, &u, &[e.element().clone()]).unwrap();
        let y = moved[0].matrix();
        assert_eq!(&(y * y), y);
    }

    #[test]
    fn idempotent_json_round_trip_revalidates() {
        let m = block12();
        let e = standard_idempotent(&m, &StandardIdempotent::BlockRanks(vec![0, 1])).unwrap();
        let text = serde_json::to_string(&e).unwrap();
        let data: IdempotentPointData = serde_json::from_str(&text).unwrap();
        let back = IdempotentPoint::from_data(&m, data).unwrap();
        assert_eq!(back, e);

        // Tampered cache is rejected.
        let mut data: IdempotentPointData = serde_json::from_str(&text).unwrap();
        data.range = Subspace::from_rows(&mat(&[vec![1, 0, 0]]));
        assert!(IdempotentPoint::from_data(&m, data).is_err());
    }
}
