//! Linearly-defined matrix monoids and their unit groups.
//!
//! A family here is a monoid `M` inside the n-by-n matrices whose underlying
//! set is a linear subspace: it is given by a linearly independent basis of
//! matrices whose span contains the identity and is closed under
//! multiplication. This class keeps everything computable by exact linear
//! algebra: membership is a linear solve, the regularity equation
//! `a*x*a = a` is linear in `x`, and the centralizer conditions of the
//! dimension engine are exact kernels on the span.
//!
//! The unit group `G` of such a monoid is simply the set of members with
//! nonzero determinant, and the span, being a unital algebra, contains the
//! inverse of every such member. Built-in constructors cover the full matrix
//! monoid and block-diagonal monoids; arbitrary spans are validated on
//! construction and rejected with the offending product when not closed.

use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::exact::Scalar;
use crate::linalg::{solve_linear, Matrix};
use crate::sampling::{random_scalar, substream};

/// Default retry budget when sampling for an invertible element.
const UNIT_RETRY_BUDGET: usize = 32;

/// Default coefficient bound for random sampling.
pub const DEFAULT_COEFF_BOUND: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// All of `M_n`.
    Full,
    /// Block-diagonal matrices with the given square block sizes.
    BlockDiagonal(Vec<usize>),
    /// An arbitrary validated span.
    Span,
}

/// A linearly-defined submonoid of `M_n`, with its span basis.
#[derive(Clone, Debug)]
pub struct MonoidFamily {
    n: usize,
    kind: FamilyKind,
    basis: Vec<Matrix>,
}

/// A member of a monoid together with its coordinates in the span basis,
/// so that `matrix = sum(coordinates[i] * basis[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidElement {
    matrix: Matrix,
    coordinates: Vec<Scalar>,
}

impl MonoidElement {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn coordinates(&self) -> &[Scalar] {
        &self.coordinates
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

/// Outcome of a regularity spot check; all counts refer to exact checks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegularityReport {
    pub trials: usize,
    /// Samples that admitted a witness `x` with `a*x*a = a`.
    pub regular: usize,
    /// Witnesses that passed the exact product verification.
    pub verified: usize,
}

impl RegularityReport {
    pub fn all_regular(&self) -> bool {
        self.regular == self.trials && self.verified == self.trials
    }
}

impl MonoidFamily {
    /// The full matrix monoid `M_n`.
    pub fn full(n: usize) -> MonoidFamily {
        assert!(n >= 1, "ambient dimension must be positive");
        let mut basis = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut m = Matrix::zero(n, n);
                m.set(r, c, Scalar::one());
                basis.push(m);
            }
        }
        MonoidFamily { n, kind: FamilyKind::Full, basis }
    }

    /// Block-diagonal matrices with the given block sizes, e.g. `[1, 2]` for
    /// matrices `diag(a, A)` with `a` scalar and `A` a 2-by-2 block.
    pub fn block_diagonal(blocks: &[usize]) -> Result<MonoidFamily, Error> {
        if blocks.is_empty() || blocks.iter().any(|&b| b == 0) {
            return Err(Error::DimensionMismatch("block sizes must be positive".into()));
        }
        let n: usize = blocks.iter().sum();
        let mut basis = Vec::new();
        let mut offset = 0;
        for &size in blocks {
            for r in 0..size {
                for c in 0..size {
                    let mut m = Matrix::zero(n, n);
                    m.set(offset + r, offset + c, Scalar::one());
                    basis.push(m);
                }
            }
            offset += size;
        }
        Ok(MonoidFamily { n, kind: FamilyKind::BlockDiagonal(blocks.to_vec()), basis })
    }

    /// A monoid given by an explicit span basis. The basis must be linearly
    /// independent, its span must contain the identity, and products of basis
    /// elements must stay inside the span; violations are rejected, a closure
    /// failure together with the offending product.
    pub fn span(basis: Vec<Matrix>) -> Result<MonoidFamily, Error> {
        let first = basis.first().ok_or(Error::MissingIdentity)?;
        let n = first.rows();
        if basis.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch("span basis matrices must all be n-by-n".into()));
        }
        let stacked = Matrix::from_rows(basis.iter().map(Matrix::flatten).collect())?;
        if stacked.rank() != basis.len() {
            return Err(Error::DependentBasis);
        }
        let family = MonoidFamily { n, kind: FamilyKind::Span, basis };
        if family.contains(&Matrix::identity(n)).is_none() {
            return Err(Error::MissingIdentity);
        }
        for i in 0..family.basis.len() {
            for j in 0..family.basis.len() {
                let product = &family.basis[i] * &family.basis[j];
                if family.contains(&product).is_none() {
                    return Err(Error::NotClosed { i, j, product });
                }
            }
        }
        Ok(family)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The linear dimension of the monoid, which is also the dimension of
    /// its unit group.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn identity_element(&self) -> MonoidElement {
        self.contains(&Matrix::identity(self.n)).expect("identity lies in every family")
    }

    /// Coordinates of `x` in the span basis when `x` belongs to the monoid.
    pub fn contains(&self, x: &Matrix) -> Option<MonoidElement> {
        if x.rows() != self.n || x.cols() != self.n {
            return None;
        }
        let coordinates = match &self.kind {
            FamilyKind::Full => x.flatten(),
            FamilyKind::BlockDiagonal(blocks) => {
                let mut coords = Vec::with_capacity(self.dim());
                let mut offset = 0;
                let mut inside = vec![vec![false; self.n]; self.n];
                for &size in blocks {
                    for r in 0..size {
                        for c in 0..size {
                            inside[offset + r][offset + c] = true;
                            coords.push(x.get(offset + r, offset + c).clone());
                        }
                    }
                    offset += size;
                }
                for r in 0..self.n {
                    for c in 0..self.n {
                        if !inside[r][c] && !x.get(r, c).is_zero() {
                            return None;
                        }
                    }
                }
                coords
            }
            FamilyKind::Span => {
                let columns = Matrix::from_fn(self.n * self.n, self.dim(), |r, c| {
                    self.basis[c].flatten()[r].clone()
                });
                solve_linear(&columns, &x.flatten()).particular?
            }
        };
        Some(MonoidElement { matrix: x.clone(), coordinates })
    }

    /// Like [`contains`](Self::contains) but turns absence into an error.
    pub fn element(&self, x: Matrix) -> Result<MonoidElement, Error> {
        self.contains(&x).ok_or(Error::NotInMonoid)
    }

    /// The member with the given span coordinates.
    pub fn element_from_coordinates(&self, coordinates: Vec<Scalar>) -> MonoidElement {
        assert_eq!(coordinates.len(), self.dim(), "coordinate count mismatch");
        let mut matrix = Matrix::zero(self.n, self.n);
        for (coeff, basis) in coordinates.iter().zip(&self.basis) {
            if coeff.is_zero() {
                continue;
            }
            for r in 0..self.n {
                for c in 0..self.n {
                    let b = basis.get(r, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = matrix.get(r, c) + &(coeff * b);
                    matrix.set(r, c, v);
                }
            }
        }
        MonoidElement { matrix, coordinates }
    }

    /// Unit test: membership plus a nonzero determinant.
    pub fn is_unit(&self, x: &Matrix) -> bool {
        x.is_square() && x.rows() == self.n && self.contains(x).is_some() && !x.det().is_zero()
    }

    /// Product of members, with coordinates recomputed; the span is closed,
    /// so the product always lies back in the monoid.
    pub fn mul(&self, a: &MonoidElement, b: &MonoidElement) -> MonoidElement {
        self.contains(&(a.matrix() * b.matrix()))
            .expect("monoid spans are closed under multiplication")
    }

    /// A random member with coefficients in a small Gaussian-rational box.
    pub fn random_element<R: Rng>(&self, rng: &mut R, bound: u32) -> MonoidElement {
        let coords = (0..self.dim()).map(|_| random_scalar(rng, bound)).collect();
        self.element_from_coordinates(coords)
    }

    /// A random unit, by rejection on the determinant; errors once the retry
    /// budget is exhausted, which signals that invertible elements are thin
    /// in the family.
    pub fn random_unit<R: Rng>(&self, rng: &mut R, bound: u32) -> Result<MonoidElement, Error> {
        for _ in 0..UNIT_RETRY_BUDGET {
            let candidate = self.random_element(rng, bound);
            if !candidate.matrix().det().is_zero() {
                return Ok(candidate);
            }
        }
        Err(Error::UnitSamplingFailed)
    }

    /// A random linear combination of the given members, used to sample
    /// solution spaces of linear conditions.
    pub fn random_combination<R: Rng>(
        &self,
        rng: &mut R,
        elements: &[MonoidElement],
        bound: u32,
    ) -> MonoidElement {
        let mut coordinates = vec![Scalar::zero(); self.dim()];
        let mut matrix = Matrix::zero(self.n, self.n);
        for element in elements {
            let t = random_scalar(rng, bound);
            if t.is_zero() {
                continue;
            }
            matrix = &matrix + &element.matrix().scale(&t);
            for (acc, coord) in coordinates.iter_mut().zip(element.coordinates()) {
                *acc = &*acc + &(&t * coord);
            }
        }
        MonoidElement { matrix, coordinates }
    }

    /// A regularity witness: some `x` in the monoid with `a*x*a = a`, found
    /// by solving the linear system over the span coordinates of `x`.
    pub fn is_regular_element(&self, a: &MonoidElement) -> Option<MonoidElement> {
        let a_mat = a.matrix();
        let images: Vec<Vec<Scalar>> =
            self.basis.iter().map(|b| (&(a_mat * b) * a_mat).flatten()).collect();
        let system = Matrix::from_fn(self.n * self.n, self.dim(), |r, c| images[c][r].clone());
        let coords = solve_linear(&system, &a_mat.flatten()).particular?;
        Some(self.element_from_coordinates(coords))
    }

    /// Samples random members and reports how many are regular, verifying
    /// each witness by the exact product `a*x*a = a`.
    pub fn spot_check_regularity(&self, trials: usize, seed: u64) -> RegularityReport {
        let mut rng = substream(seed, "regularity");
        let mut regular = 0;
        let mut verified = 0;
        for _ in 0..trials {
            let a = self.random_element(&mut rng, DEFAULT_COEFF_BOUND);
            if let Some(x) = self.is_regular_element(&a) {
                regular += 1;
                let product = &(a.matrix() * x.matrix()) * a.matrix();
                if &product == a.matrix() {
                    verified += 1;
                }
            }
        }
        RegularityReport { trials, regular, verified }
    }

    /// Basis of `{X in span(M) : condition(X) = 0}` for a linear matrix map.
    /// Deterministic: the basis comes from a reduced-echelon kernel.
    pub fn condition_kernel(&self, condition: impl Fn(&Matrix) -> Matrix) -> Vec<MonoidElement> {
        let stacked = Matrix::from_rows(self.basis.iter().map(|b| condition(b).flatten()).collect())
            .expect("condition images share dimensions");
        let kernel = stacked.left_kernel();
        (0..kernel.rows())
            .map(|r| self.element_from_coordinates(kernel.row(r).to_vec()))
            .collect()
    }

    /// A particular solution of `condition(X) = rhs` with `X` in the span,
    /// when one exists.
    pub fn solve_in_span(
        &self,
        condition: impl Fn(&Matrix) -> Matrix,
        rhs: &Matrix,
    ) -> Option<MonoidElement> {
        let images: Vec<Vec<Scalar>> = self.basis.iter().map(|b| condition(b).flatten()).collect();
        let system = Matrix::from_fn(self.n * self.n, self.dim(), |r, c| images[c][r].clone());
        let coords = solve_linear(&system, &rhs.flatten()).particular?;
        Some(self.element_from_coordinates(coords))
    }
}

#[derive(Serialize, Deserialize)]
struct FamilySpec {
    family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Matrix>>,
}

/// JSON encoding: `{ "family": "full"|"blocks"|"span", "n": n,
/// "blocks": [...], "basis": [...] }`, with `blocks` only for block
/// families and `basis` only for spans. Construction re-runs validation.
impl Serialize for MonoidFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let spec = match &self.kind {
            FamilyKind::Full => FamilySpec {
                family: "full".into(),
                n: Some(self.n),
                blocks: None,
                basis: None,
            },
            FamilyKind::BlockDiagonal(blocks) => FamilySpec {
                family: "blocks".into(),
                n: Some(self.n),
                blocks: Some(blocks.clone()),
                basis: None,
            },
            FamilyKind::Span => FamilySpec {
                family: "span".into(),
                n: Some(self.n),
                blocks: None,
                basis: Some(self.basis.clone()),
            },
        };
        spec.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonoidFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let spec = FamilySpec::deserialize(deserializer)?;
        let family = match spec.family.as_str() {
            "full" => {
                let n = spec.n.ok_or_else(|| D::Error::custom("full family needs `n`"))?;
                MonoidFamily::full(n)
            }
            "blocks" => {
                let blocks =
                    spec.blocks.ok_or_else(|| D::Error::custom("block family needs `blocks`"))?;
                let family =
                    MonoidFamily::block_diagonal(&blocks).map_err(D::Error::custom)?;
                if let Some(n) = spec.n {
                    if n != family.n() {
                        return Err(D::Error::custom("`n` disagrees with the block sizes"));
                    }
                }
                family
            }
            "span" => {
                let basis =
                    spec.basis.ok_or_else(|| D::Error::custom("span family needs `basis`"))?;
                let family = MonoidFamily::span(basis).map_err(D::Error::custom)?;
                if let Some(n) = spec.n {
                    if n != family.n() {
                        return Err(D::Error::custom("`n` disagrees with the basis size"));
                    }
                }
                family
            }
            other => return Err(D::Error::custom(format!("unknown family `{other}`"))),
        };
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::substream;

    fn mat(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_int_rows(rows)
    }

    #[test]
    fn full_family_dimensions() {
        let m = MonoidFamily::full(3);
        assert_eq!(m.dim(), 9);
        assert_eq!(m.n(), 3);
    }

    #[test]
    fn block_family_dimensions() {
        let m = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
        assert_eq!(m.dim(), 5);
        assert_eq!(m.n(), 3);
    }

    #[test]
    fn span_rejects_open_products() {
        // J is 3-by-3 nilpotent with J*J nonzero and outside span{I, J}.
        let jordan = mat(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        let err = MonoidFamily::span(vec![Matrix::identity(3), jordan]);
        match err {
            Err(Error::NotClosed { i: 1, j: 1, product }) => {
                assert_eq!(product, mat(&[vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]]));
            }
            other => panic!("expected closure violation, got {other:?}"),
        }
    }

    #[test]
    fn span_rejects_missing_identity() {
        let e11 = mat(&[vec![1, 0], vec![0, 0]]);
        assert!(matches!(MonoidFamily::span(vec![e11]), Err(Error::MissingIdentity)));
    }

    #[test]
    fn span_rejects_dependent_basis() {
        let id = Matrix::identity(2);
        let twice = id.scale(&Scalar::from_integer(2));
        assert!(matches!(MonoidFamily::span(vec![id, twice]), Err(Error::DependentBasis)));
    }

    #[test]
    fn span_accepts_upper_triangular() {
        let basis = vec![
            mat(&[vec![1, 0], vec![0, 0]]),
            mat(&[vec![0, 1], vec![0, 0]]),
            mat(&[vec![0, 0], vec![0, 1]]),
        ];
        let m = MonoidFamily::span(basis).unwrap();
        assert_eq!(m.dim(), 3);
        assert!(m.contains(&mat(&[vec![2, 5], vec![0, 3]])).is_some());
        assert!(m.contains(&mat(&[vec![2, 5], vec![1, 3]])).is_none());
    }

    #[test]
    fn membership_in_the_block_family() {
        let m = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
        assert!(m.contains(&Matrix::identity(3)).is_some());
        let leaky = mat(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(m.contains(&leaky).is_none());
    }

    #[test]
    fn coordinates_round_trip() {
        let m = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
        let mut rng = substream(41, "coords");
        for _ in 0..50 {
            let coords: Vec<Scalar> =
                (0..m.dim()).map(|_| random_scalar(&mut rng, 3)).collect();
            let element = m.element_from_coordinates(coords.clone());
            let recovered = m.contains(element.matrix()).unwrap();
            assert_eq!(recovered.coordinates(), &coords[..]);
            assert_eq!(recovered.matrix(), element.matrix());
        }
    }

    #[test]
    fn unit_membership() {
        let m = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
        assert!(m.is_unit(&Matrix::identity(3)));
        assert!(!m.is_unit(&mat(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]])));
        assert!(m.is_unit(&mat(&[vec![2, 0, 0], vec![0, 1, 1], vec![0, 0, 1]])));
    }

    #[test]
    fn random_units_are_units_and_deterministic() {
        let m = MonoidFamily::full(3);
        let mut rng = substream(42, "units");
        for _ in 0..1000 {
            let u = m.random_unit(&mut rng, 2).expect("units are generic in full M_3");
            assert!(!u.matrix().det().is_zero());
        }
        let mut rng_a = substream(43, "replay");
        let mut rng_b = substream(43, "replay");
        for _ in 0..10 {
            assert_eq!(
                m.random_unit(&mut rng_a, 2).unwrap(),
                m.random_unit(&mut rng_b, 2).unwrap()
            );
        }
    }

    #[test]
    fn closure_under_products() {
        let families = [
            MonoidFamily::full(2),
            MonoidFamily::block_diagonal(&[1, 2]).unwrap(),
        ];
        for m in &families {
            let mut rng = substream(44, "closure");
            for _ in 0..500 {
                let a = m.random_element(&mut rng, 2);
                let b = m.random_element(&mut rng, 2);
                assert!(m.contains(&(a.matrix() * b.matrix())).is_some());
            }
        }
    }

    #[test]
    fn units_form_a_group_inside_the_span() {
        let m = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
        let mut rng = substream(45, "group");
        for _ in 0..100 {
            let u = m.random_unit(&mut rng, 2).unwrap();
            let v = m.random_unit(&mut rng, 2).unwrap();
            let product = u.matrix() * v.matrix();
            assert!(m.is_unit(&product));
            let inverse = u.matrix().inverse().unwrap();
            assert!(m.contains(&inverse).is_some(), "inverse stays in the span");
        }
    }

    #[test]
    fn identity_is_regular_with_identity_witness() {
        let m = MonoidFamily::full(2);
        let id = m.identity_element();
        let x = m.is_regular_element(&id).unwrap();
        let product = &(id.matrix() * x.matrix()) * id.matrix();
        assert_eq!(&product, id.matrix());
    }

    #[test]
    fn full_monoid_is_regular_everywhere() {
        let m = MonoidFamily::full(3);
        let mut rng = substream(46, "regular_full");
        for _ in 0..200 {
            let a = m.random_element(&mut rng, 2);
            let x = m.is_regular_element(&a).expect("full matrix monoids are regular");
            let product = &(a.matrix() * x.matrix()) * a.matrix();
            assert_eq!(&product, a.matrix());
        }
    }

    #[test]
    fn singular_block_elements_are_regular() {
        let m = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
        let a = m.element(mat(&[vec![0, 0, 0], vec![0, 1, 1], vec![0, 0, 1]])).unwrap();
        let x = m.is_regular_element(&a).unwrap();
        let product = &(a.matrix() * x.matrix()) * a.matrix();
        assert_eq!(&product, a.matrix());
    }

    #[test]
    fn spot_check_reports_full_regularity_on_builtins() {
        let full = MonoidFamily::full(4);
        let report = full.spot_check_regularity(100, 9);
        assert!(report.all_regular(), "full family: {report:?}");
        let blocks = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
        let report = blocks.spot_check_regularity(100, 9);
        assert!(report.all_regular(), "block family: {report:?}");
    }

    #[test]
    fn family_json_round_trip() {
        let m = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"family":"blocks","n":3,"blocks":[1,2]}"#);
        let back: MonoidFamily = serde_json::from_str(&text).unwrap();
        assert_eq!(back.dim(), 5);
        assert_eq!(back.kind(), m.kind());

        let span = MonoidFamily::span(vec![
            mat(&[vec![1, 0], vec![0, 0]]),
            mat(&[vec![0, 1], vec![0, 0]]),
            mat(&[vec![0, 0], vec![0, 1]]),
        ])
        .unwrap();
        let text = serde_json::to_string(&span).unwrap();
        let back: MonoidFamily = serde_json::from_str(&text).unwrap();
        assert_eq!(back.dim(), 3);
    }

    #[test]
    fn corrupted_span_fails_to_load() {
        let jordan = mat(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        let bad = serde_json::json!({
            "family": "span",
            "basis": [Matrix::identity(3), jordan],
        });
        let parsed: Result<MonoidFamily, _> = serde_json::from_value(bad);
        assert!(parsed.is_err());
    }
}
