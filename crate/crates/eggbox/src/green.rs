//! Decision procedures for Green's relations.
//!
//! In a regular submonoid of the matrix monoid, the L- and R-relations are
//! decided exactly by subspace equality: two members are L-related iff their
//! row spaces agree and R-related iff their left null spaces agree. H is the
//! meet of the two. The D-relation (which coincides with J here) reduces to
//! conjugacy of idempotents: every member `a` has a regularity witness `x`,
//! `e = a*x` is an idempotent R-related to `a`, and `a D b` iff the
//! idempotents of `a` and `b` are conjugate by a unit.
//!
//! Conjugacy is decided by a randomized search: the intertwiners
//! `{u : u*e_a = e_b*u}` form a linear subspace of the monoid, an invertible
//! intertwiner exists iff the determinant is not identically zero on it, and
//! random rational points miss the determinant hypersurface generically. A
//! `true` answer is exact, certified by the returned witness; a `false`
//! answer means no invertible witness was found in the allotted trials, so
//! the error is one-sided. No probabilistic bound is claimed beyond the
//! trial count.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::grassmann::{nullspace_of, range_of};
use crate::linalg::Matrix;
use crate::monoid::{MonoidElement, MonoidFamily, DEFAULT_COEFF_BOUND};
use crate::sampling::substream;

/// One of the four Green's relations handled here. J is not listed
/// separately: it coincides with D in these monoids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    L,
    R,
    H,
    D,
}

/// Which one-sided idempotent to extract from a regularity witness `x` of
/// `a`: the right choice `a*x` is R-related to `a`, the left choice `x*a`
/// is L-related.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessSide {
    Right,
    Left,
}

/// A Green class presented by a representative inside a fixed monoid.
pub struct GreenClass<'a> {
    pub relation: Relation,
    pub representative: MonoidElement,
    pub monoid: &'a MonoidFamily,
}

impl<'a> GreenClass<'a> {
    pub fn new(
        monoid: &'a MonoidFamily,
        relation: Relation,
        representative: MonoidElement,
    ) -> GreenClass<'a> {
        GreenClass { relation, representative, monoid }
    }

    pub fn sample(&self, count: usize, seed: u64) -> Result<Vec<MonoidElement>, Error> {
        sample_class(self.monoid, &self.representative, self.relation, count, seed)
    }
}

fn member(m: &MonoidFamily, x: &Matrix) -> Result<(), Error> {
    if m.contains(x).is_none() {
        return Err(Error::NotInMonoid);
    }
    Ok(())
}

/// L-relatedness: equality of row spaces.
pub fn l_related(m: &MonoidFamily, a: &Matrix, b: &Matrix) -> Result<bool, Error> {
    member(m, a)?;
    member(m, b)?;
    Ok(range_of(a) == range_of(b))
}

/// R-relatedness: equality of left null spaces.
pub fn r_related(m: &MonoidFamily, a: &Matrix, b: &Matrix) -> Result<bool, Error> {
    member(m, a)?;
    member(m, b)?;
    Ok(nullspace_of(a) == nullspace_of(b))
}

/// H-relatedness: both L and R.
pub fn h_related(m: &MonoidFamily, a: &Matrix, b: &Matrix) -> Result<bool, Error> {
    Ok(l_related(m, a, b)? && r_related(m, a, b)?)
}

/// D-relatedness in the ambient full monoid, where D-classes are exactly the
/// rank classes.
pub fn d_related_ambient(a: &Matrix, b: &Matrix) -> bool {
    assert!(
        a.is_square() && b.is_square() && a.rows() == b.rows(),
        "square matrices of equal size"
    );
    a.rank() == b.rank()
}

/// The idempotent attached to `a` through a regularity witness. Errors when
/// no witness exists, i.e. when the standing regularity assumption fails.
pub fn regular_idempotent(
    m: &MonoidFamily,
    a: &MonoidElement,
    side: WitnessSide,
) -> Result<Matrix, Error> {
    let x = m.is_regular_element(a).ok_or(Error::NotRegular)?;
    let e = match side {
        WitnessSide::Right => a.matrix() * x.matrix(),
        WitnessSide::Left => x.matrix() * a.matrix(),
    };
    debug_assert_eq!(&(&e * &e), &e, "witness product is idempotent");
    Ok(e)
}

/// Randomized D-decider returning the conjugating witness on success: a unit
/// `u` with `u * e_a * u^-1 = e_b` exactly, where `e_a`, `e_b` are the
/// idempotents of `a` and `b`. `None` means no invertible witness was found
/// in `trials` samples (one-sided).
pub fn d_related_witness(
    m: &MonoidFamily,
    a: &Matrix,
    b: &Matrix,
    trials: usize,
    seed: u64,
) -> Result<Option<MonoidElement>, Error> {
    let a = m.element(a.clone())?;
    let b = m.element(b.clone())?;
    let e_a = regular_idempotent(m, &a, WitnessSide::Right)?;
    let e_b = regular_idempotent(m, &b, WitnessSide::Right)?;
    // Conjugate idempotents have equal rank, so unequal ranks decide early.
    if e_a.rank() != e_b.rank() {
        return Ok(None);
    }
    let intertwiners = m.condition_kernel(|x| &(x * &e_a) - &(&e_b * x));
    if intertwiners.is_empty() {
        return Ok(None);
    }
    let mut rng = substream(seed, "d_witness");
    for _ in 0..trials {
        let u = m.random_combination(&mut rng, &intertwiners, DEFAULT_COEFF_BOUND);
        if u.matrix().det().is_zero() {
            continue;
        }
        let inverse = u.matrix().inverse().expect("determinant checked nonzero");
        if m.contains(&inverse).is_none() {
            continue;
        }
        let conjugated = &(u.matrix() * &e_a) * &inverse;
        if conjugated == e_b {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// Randomized D-decider; see [`d_related_witness`] for the contract.
pub fn d_related(
    m: &MonoidFamily,
    a: &Matrix,
    b: &Matrix,
    trials: usize,
    seed: u64,
) -> Result<bool, Error> {
    Ok(d_related_witness(m, a, b, trials, seed)?.is_some())
}

/// Random members of the group H-class of an idempotent `e`: the invertible
/// elements of the corner algebra `e*M*e`, which are exactly its members of
/// rank equal to `rank(e)`.
pub fn sample_h_class_units(
    m: &MonoidFamily,
    e: &Matrix,
    count: usize,
    seed: u64,
) -> Result<Vec<Matrix>, Error> {
    member(m, e)?;
    if &(e * e) != e {
        return Err(Error::NotIdempotent);
    }
    let target_rank = e.rank();
    let mut rng = substream(seed, "h_class_units");
    let mut out = Vec::with_capacity(count);
    let mut budget = count.saturating_mul(64).max(64);
    while out.len() < count {
        if budget == 0 {
            return Err(Error::UnitSamplingFailed);
        }
        budget -= 1;
        let x = m.random_element(&mut rng, DEFAULT_COEFF_BOUND);
        let corner = &(e * x.matrix()) * e;
        if corner.rank() == target_rank {
            out.push(corner);
        }
    }
    Ok(out)
}

/// Samples the Green class of `a`: left unit translates for L, right for R,
/// two-sided for D, and local-group translates for H. Every output is
/// related to `a` under the requested relation.
pub fn sample_class(
    m: &MonoidFamily,
    a: &MonoidElement,
    relation: Relation,
    count: usize,
    seed: u64,
) -> Result<Vec<MonoidElement>, Error> {
    let mut rng = substream(seed, "class_sample");
    let mut out = Vec::with_capacity(count);
    match relation {
        Relation::L => {
            for _ in 0..count {
                let u = m.random_unit(&mut rng, DEFAULT_COEFF_BOUND)?;
                out.push(m.mul(&u, a));
            }
        }
        Relation::R => {
            for _ in 0..count {
                let u = m.random_unit(&mut rng, DEFAULT_COEFF_BOUND)?;
                out.push(m.mul(a, &u));
            }
        }
        Relation::D => {
            for _ in 0..count {
                let u = m.random_unit(&mut rng, DEFAULT_COEFF_BOUND)?;
                let v = m.random_unit(&mut rng, DEFAULT_COEFF_BOUND)?;
                out.push(m.mul(&m.mul(&u, a), &v));
            }
        }
        Relation::H => {
            let e = regular_idempotent(m, a, WitnessSide::Right)?;
            let units = sample_h_class_units(m, &e, count, seed)?;
            for h in units {
                out.push(m.element(&h * a.matrix())?);
            }
        }
    }
    Ok(out)
}
