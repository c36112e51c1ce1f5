//! Canonical subspaces of row-vector space.
//!
//! A `Subspace` is a point of the Grassmannian of k-dimensional subspaces of
//! an n-dimensional row-vector space, stored as the unique reduced
//! row-echelon basis of the space. Canonical storage turns subspace equality
//! into structural equality: two spanning matrices describe the same subspace
//! exactly when they canonicalize to the same `Subspace` value.
//!
//! The module also houses the two subspace invariants of a square matrix,
//! its range (row space) and null space (left kernel), and the predicates
//! and samplers built on them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::Scalar;
use crate::linalg::Matrix;
use crate::monoid::MonoidFamily;
use crate::sampling::substream;

/// A k-dimensional subspace of n-dimensional row-vector space, in canonical
/// form: the basis matrix is in reduced row echelon form with no zero rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Canonical subspace spanned by the rows of `p`. Rank-deficient input is
    /// fine; the dimension is the rank of `p`.
    pub fn from_rows(p: &Matrix) -> Subspace {
        let reduced = p.rref();
        let basis = Matrix::from_fn(reduced.rank, p.cols(), |r, c| {
            reduced.matrix.get(r, c).clone()
        });
        Subspace { ambient: p.cols(), basis }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zero(0, ambient) }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical (reduced row echelon) basis, one row per dimension.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Membership test by elimination against the canonical basis.
    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector has wrong ambient dimension");
        let mut v = v.to_vec();
        for r in 0..self.basis.rows() {
            // Pivot column of row r is its first nonzero entry.
            let pivot = (0..self.ambient)
                .find(|&c| !self.basis.get(r, c).is_zero())
                .expect("canonical basis has no zero rows");
            let factor = v[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..self.ambient {
                v[c] = &v[c] - &(&factor * self.basis.get(r, c));
            }
        }
        v.iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && (0..other.basis.rows()).all(|r| self.contains_vector(other.basis.row(r)))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {})\n{}", self.dim(), self.ambient, self.basis)
    }
}

/// The range of a square matrix: the subspace its rows span. Constant on
/// left multiplication by invertible matrices, which is what makes it a
/// complete invariant for the L-relation.
pub fn range_of(x: &Matrix) -> Subspace {
    assert!(x.is_square(), "range is defined for square matrices here");
    Subspace::from_rows(x)
}

/// The null space of a square matrix: its left kernel `{v : v*x = 0}`.
pub fn nullspace_of(x: &Matrix) -> Subspace {
    assert!(x.is_square(), "null space is defined for square matrices here");
    Subspace::from_rows(&x.left_kernel())
}

/// True iff `w` and `n` are complementary: their dimensions add to the
/// ambient dimension and their union spans everything.
pub fn is_direct_sum(w: &Subspace, n: &Subspace) -> Result<bool, Error> {
    if w.ambient != n.ambient {
        return Err(Error::AmbientMismatch { left: w.ambient, right: n.ambient });
    }
    if w.dim() + n.dim() != w.ambient {
        return Ok(false);
    }
    Ok(w.basis.vstack(&n.basis).rank() == w.ambient)
}

/// Dimension of the Grassmannian of k-dimensional subspaces in dimension n.
pub fn grassmann_dim(n: usize, k: usize) -> usize {
    assert!(k <= n, "subspace dimension exceeds ambient dimension");
    k * (n - k)
}

/// Samples ranges over the right translates `b*u` of `b` by random units of
/// the monoid, collapsing duplicates into a canonical set. This walks the
/// orbit of the range of `b` inside its Grassmannian; it is a sampler, not
/// an enumerator, since the orbit is generally infinite.
pub fn sample_orbit_ranges(
    family: &MonoidFamily,
    b: &Matrix,
    trials: usize,
    seed: u64,
) -> Result<BTreeSet<Subspace>, Error> {
    if family.contains(b).is_none() {
        return Err(Error::NotInMonoid);
    }
    let mut rng = substream(seed, "orbit_ranges");
    let mut out = BTreeSet::new();
    for _ in 0..trials {
        let u = family.random_unit(&mut rng, 2)?;
        out.insert(range_of(&(b * u.matrix())));
    }
    Ok(out)
}
