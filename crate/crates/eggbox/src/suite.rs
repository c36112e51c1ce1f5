//! The runnable property suite behind the `verify` command.
//!
//! Each property is a seeded randomized check of one module invariant, run
//! at a configurable trial count against a list of monoid families. Results
//! are data, not panics, so the batch front end can emit machine-readable
//! pass/fail lines and an exit code.

use serde::Serialize;

use crate::exact::Scalar;
use crate::grassmann::{is_direct_sum, nullspace_of, range_of, sample_orbit_ranges, Subspace};
use crate::green;
use crate::idempotent::{self, IdempotentPoint, StandardIdempotent};
use crate::lie;
use crate::linalg::{solve_linear, Matrix};
use crate::monoid::{FamilyKind, MonoidFamily};
use crate::sampling::{random_invertible, random_matrix, random_scalar, substream};

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub trials: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl PropertyResult {
    fn pass(name: &str, trials: usize) -> Self {
        PropertyResult { name: name.into(), trials, passed: true, detail: None }
    }

    fn fail(name: &str, trials: usize, detail: String) -> Self {
        PropertyResult { name: name.into(), trials, passed: false, detail: Some(detail) }
    }

    fn vacuous(name: &str) -> Self {
        PropertyResult {
            name: name.into(),
            trials: 0,
            passed: true,
            detail: Some("0 trials: vacuous pass".into()),
        }
    }
}

/// Built-in families the suite runs on when none is supplied.
pub fn builtin_families() -> Vec<MonoidFamily> {
    vec![
        MonoidFamily::full(2),
        MonoidFamily::full(3),
        MonoidFamily::block_diagonal(&[1, 2]).expect("valid blocks"),
        MonoidFamily::block_diagonal(&[2, 2]).expect("valid blocks"),
    ]
}

/// A spread of idempotents in `m`: the canonical ones where the family has
/// them, plus idempotents extracted from random members through regularity
/// witnesses, deduplicated.
pub fn gather_idempotents(m: &MonoidFamily, seed: u64) -> Vec<IdempotentPoint> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |point: IdempotentPoint, out: &mut Vec<IdempotentPoint>| {
        if seen.insert(point.matrix().clone()) {
            out.push(point);
        }
    };
    match m.kind() {
        FamilyKind::Full => {
            for k in 0..=m.n() {
                let e = idempotent::standard_idempotent(m, &StandardIdempotent::Rank(k))
                    .expect("rank selector in range");
                push(e, &mut out);
            }
        }
        FamilyKind::BlockDiagonal(blocks) => {
            let mut selectors = vec![vec![0usize; blocks.len()]];
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
                let e = idempotent::standard_idempotent(m, &StandardIdempotent::BlockRanks(ranks))
                    .expect("block selector in range");
                push(e, &mut out);
            }
        }
        FamilyKind::Span => {
            push(
                IdempotentPoint::new(m, Matrix::identity(m.n())).expect("identity is idempotent"),
                &mut out,
            );
        }
    }
    let mut rng = substream(seed, "gather_idempotents");
    for _ in 0..4 {
        let a = m.random_element(&mut rng, 2);
        if let Ok(e) = green::regular_idempotent(m, &a, green::WitnessSide::Right) {
            if let Ok(point) = IdempotentPoint::new(m, e) {
                push(point, &mut out);
            }
        }
    }
    out
}

fn field_axioms(trials: usize, seed: u64) -> PropertyResult {
    let name = "exact.field_axioms";
    let mut rng = substream(seed, name);
    for t in 0..trials {
        let a = random_scalar(&mut rng, 3);
        let b = random_scalar(&mut rng, 3);
        let c = random_scalar(&mut rng, 3);
        let ok = (&(&a + &b) + &c) == (&a + &(&b + &c))
            && (&(&a * &b) * &c) == (&a * &(&b * &c))
            && (&a * &(&b + &c)) == (&(&a * &b) + &(&a * &c));
        if !ok {
            return PropertyResult::fail(name, trials, format!("axiom failed at trial {t}"));
        }
    }
    PropertyResult::pass(name, trials)
}

fn print_parse_round_trip(trials: usize, seed: u64) -> PropertyResult {
    let name = "exact.print_parse_round_trip";
    let mut rng = substream(seed, name);
    for t in 0..trials {
        let s = random_scalar(&mut rng, 5);
        match s.to_string().parse::<Scalar>() {
            Ok(back) if back == s => {}
            _ => return PropertyResult::fail(name, trials, format!("round trip broke at trial {t}")),
        }
    }
    PropertyResult::pass(name, trials)
}

fn rank_bounds(trials: usize, seed: u64) -> PropertyResult {
    let name = "linalg.rank_bounds";
    let mut rng = substream(seed, name);
    for t in 0..trials {
        let a = random_matrix(&mut rng, 3, 3, 2);
        let b = random_matrix(&mut rng, 3, 3, 2);
        let u = random_invertible(&mut rng, 3, 2);
        if (&a * &b).rank() > a.rank().min(b.rank()) || (&u * &a).rank() != a.rank() {
            return PropertyResult::fail(name, trials, format!("rank bound failed at trial {t}"));
        }
    }
    PropertyResult::pass(name, trials)
}

fn kernel_rank_identity(trials: usize, seed: u64) -> PropertyResult {
    let name = "linalg.kernel_rank_identity";
    let mut rng = substream(seed, name);
    for t in 0..trials {
        let m = random_matrix(&mut rng, 3, 4, 2);
        if m.left_kernel().rows() + m.rank() != m.rows() {
            return PropertyResult::fail(name, trials, format!("identity failed at trial {t}"));
        }
    }
    PropertyResult::pass(name, trials)
}

fn rref_canonicality(trials: usize, seed: u64) -> PropertyResult {
    let name = "linalg.rref_canonicality";
    let mut rng = substream(seed, name);
    let same_row_space = |a: &Matrix, b: &Matrix| {
        let contained = |p: &Matrix, q: &Matrix| {
            let qt = q.transpose();
            (0..p.rows()).all(|r| solve_linear(&qt, p.row(r)).particular.is_some())
        };
        contained(a, b) && contained(b, a)
    };
    for t in 0..trials {
        let a = random_matrix(&mut rng, 2, 3, 1);
        let b = random_matrix(&mut rng, 2, 3, 1);
        let canonical = Subspace::from_rows(&a) == Subspace::from_rows(&b);
        if canonical != same_row_space(&a, &b) {
            return PropertyResult::fail(name, trials, format!("oracle disagreed at trial {t}"));
        }
    }
    PropertyResult::pass(name, trials)
}

fn row_operation_invariance(trials: usize, seed: u64) -> PropertyResult {
    let name = "grassmann.row_operation_invariance";
    let mut rng = substream(seed, name);
    for t in 0..trials {
        let p = random_matrix(&mut rng, 3, 4, 2);
        let u = random_invertible(&mut rng, 3, 2);
        if Subspace::from_rows(&p) != Subspace::from_rows(&(&u * &p)) {
            return PropertyResult::fail(name, trials, format!("invariance failed at trial {t}"));
        }
    }
    PropertyResult::pass(name, trials)
}

fn direct_sum_rank_criterion(trials: usize, seed: u64) -> PropertyResult {
    let name = "grassmann.direct_sum_rank_criterion";
    let mut rng = substream(seed, name);
    for t in 0..trials {
        let x = random_matrix(&mut rng, 3, 3, 1);
        let complementary =
            is_direct_sum(&range_of(&x), &nullspace_of(&x)).expect("same ambient");
        if complementary != ((&x * &x).rank() == x.rank()) {
            return PropertyResult::fail(name, trials, format!("criterion failed at trial {t}"));
        }
    }
    PropertyResult::pass(name, trials)
}

fn orbit_rank_constancy(families: &[MonoidFamily], trials: usize, seed: u64) -> PropertyResult {
    let name = "grassmann.orbit_rank_constancy";
    for m in families {
        for e in gather_idempotents(m, seed) {
            let sampled = match sample_orbit_ranges(m, e.matrix(), trials.min(16), seed) {
                Ok(s) => s,
                Err(err) => return PropertyResult::fail(name, trials, err.to_string()),
            };
            if sampled.iter().any(|s| s.dim() != e.rank()) {
                return PropertyResult::fail(
                    name,
                    trials,
                    format!("orbit dimension drifted in a family of dim {}", m.dim()),
                );
            }
        }
    }
    PropertyResult::pass(name, trials)
}

fn multiplicative_closure(families: &[MonoidFamily], trials: usize, seed: u64) -> PropertyResult {
    let name = "monoid.multiplicative_closure";
    for m in families {
        let mut rng = substream(seed, name);
        for t in 0..trials {
            let a = m.random_element(&mut rng, 2);
            let b = m.random_element(&mut rng, 2);
            if m.contains(&(a.matrix() * b.matrix())).is_none() {
                return PropertyResult::fail(name, trials, format!("closure failed at trial {t}"));
            }
        }
    }
    PropertyResult::pass(name, trials)
}

fn unit_group_closure(families: &[MonoidFamily], trials: usize, seed: u64) -> PropertyResult {
    let name = "monoid.unit_group_closure";
    for m in families {
        let mut rng = substream(seed, name);
        for t in 0..trials {
            let Ok(u) = m.random_unit(&mut rng, 2) else {
                return PropertyResult::fail(name, trials, "unit sampling failed".into());
            };
            let Ok(v) = m.random_unit(&mut rng, 2) else {
                return PropertyResult::fail(name, trials, "unit sampling failed".into());
            };
            let product = u.matrix() * v.matrix();
            let inverse = u.matrix().inverse().expect("unit is invertible");
            if !m.is_unit(&product) || m.contains(&inverse).is_none() {
                return PropertyResult::fail(
                    name,
                    trials,
                    format!("unit group escaped the span at trial {t}"),
                );
            }
        }
    }
    PropertyResult::pass(name, trials)
}

fn regularity(families: &[MonoidFamily], trials: usize, seed: u64) -> PropertyResult {
    let name = "monoid.regularity";
    for m in families {
        let report = m.spot_check_regularity(trials, seed);
        if !report.all_regular() {
            return PropertyResult::fail(
                name,
                trials,
                format!("{}/{} regular in a family of dim {}", report.regular, report.trials, m.dim()),
            );
        }
    }
    PropertyResult::pass(name, trials)
}

fn translate_relatedness(families: &[MonoidFamily], trials: usize, seed: u64) -> PropertyResult {
    let name = "green.translate_relatedness";
    for m in families {
        let mut rng = substream(seed, name);
        for t in 0..trials {
            let a = m.random_element(&mut rng, 2);
            let Ok(u) = m.random_unit(&mut rng, 2) else {
                return PropertyResult::fail(name, trials, "unit sampling failed".into());
            };
            let ua = u.matrix() * a.matrix();
            let au = a.matrix() * u.matrix();
            let ok = green::l_related(m, a.matrix(), &ua).unwrap_or(false)
                && green::r_related(m, a.matrix(), &au).unwrap_or(false);
            if !ok {
                return PropertyResult::fail(name, trials, format!("translate failed at trial {t}"));
            }
        }
    }
    PropertyResult::pass(name, trials)
}

fn ambient_d_agreement(trials: usize, seed: u64) -> PropertyResult {
    let name = "green.ambient_d_agreement";
    let m = MonoidFamily::full(3);
    let mut rng = substream(seed, name);
    for t in 0..trials {
        let rank_element = |rng: &mut rand_chacha::ChaCha8Rng| {
            use rand::Rng;
            let k = rng.gen_range(0..=3usize);
            let mut d = Matrix::zero(3, 3);
            for i in 0..k {
                d.set(i, i, Scalar::one());
            }
            let u = m.random_unit(rng, 2).expect("units are generic");
            let v = m.random_unit(rng, 2).expect("units are generic");
            &(u.matrix() * &d) * v.matrix()
        };
        let a = rank_element(&mut rng);
        let b = rank_element(&mut rng);
        let decided = match green::d_related(&m, &a, &b, 16, seed.wrapping_add(t as u64)) {
            Ok(v) => v,
            Err(err) => return PropertyResult::fail(name, trials, err.to_string()),
        };
        if decided != green::d_related_ambient(&a, &b) {
            return PropertyResult::fail(name, trials, format!("disagreement at trial {t}"));
        }
    }
    PropertyResult::pass(name, trials)
}

fn projection_reconstruction(
    families: &[MonoidFamily],
    trials: usize,
    seed: u64,
) -> PropertyResult {
    let name = "idempotent.projection_reconstruction";
    for m in families {
        let idempotents = gather_idempotents(m, seed);
        let mut rng = substream(seed, name);
        for t in 0..trials {
            let e = &idempotents[t % idempotents.len()];
            let Ok(u) = m.random_unit(&mut rng, 2) else {
                return PropertyResult::fail(name, trials, "unit sampling failed".into());
            };
            let Ok(f) = idempotent::conjugate(m, &u, e) else {
                return PropertyResult::fail(name, trials, "conjugation failed".into());
            };
            match idempotent::make_projection(m, f.range(), f.nullspace()) {
                Ok(rebuilt) if rebuilt.matrix() == f.matrix() => {}
                _ => {
                    return PropertyResult::fail(
                        name,
                        trials,
                        format!("reconstruction failed at trial {t}"),
                    )
                }
            }
        }
    }
    PropertyResult::pass(name, trials)
}

fn conjugation_action(families: &[MonoidFamily], trials: usize, seed: u64) -> PropertyResult {
    let name = "idempotent.conjugation_action";
    for m in families {
        let idempotents = gather_idempotents(m, seed);
        let mut rng = substream(seed, name);
        for t in 0..trials {
            let e = &idempotents[t % idempotents.len()];
            let (Ok(u), Ok(v)) = (m.random_unit(&mut rng, 2), m.random_unit(&mut rng, 2)) else {
                return PropertyResult::fail(name, trials, "unit sampling failed".into());
            };
            let uv = m.mul(&u, &v);
            let stepwise = idempotent::conjugate(m, &v, e)
                .and_then(|f| idempotent::conjugate(m, &u, &f));
            let direct = idempotent::conjugate(m, &uv, e);
            match (stepwise, direct) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => {
                    return PropertyResult::fail(name, trials, format!("action broke at trial {t}"))
                }
            }
        }
    }
    PropertyResult::pass(name, trials)
}

fn centralizer_containment(families: &[MonoidFamily], trials: usize, seed: u64) -> PropertyResult {
    let name = "lie.centralizer_containment";
    for m in families {
        for e in gather_idempotents(m, seed) {
            let Ok(c) = lie::centralizer_algebra(m, &e) else {
                return PropertyResult::fail(name, trials, "centralizer failed".into());
            };
            let e_mat = e.matrix();
            for x in c.basis() {
                let x = x.matrix();
                let exe = &(&(e_mat * x) * e_mat);
                if exe != &(e_mat * x) || exe != &(x * e_mat) {
                    return PropertyResult::fail(name, trials, "containment failed".into());
                }
            }
        }
    }
    PropertyResult::pass(name, trials)
}

fn commutator_rank_nullity(families: &[MonoidFamily], trials: usize, seed: u64) -> PropertyResult {
    let name = "lie.commutator_rank_nullity";
    for m in families {
        for (i, e) in gather_idempotents(m, seed).into_iter().enumerate() {
            let Ok(report) = lie::dimension_report(m, &e) else {
                return PropertyResult::fail(name, trials, "report failed".into());
            };
            let image = match lie::empirical_orbit_dim(
                m,
                &e,
                lie::IdempotentOrbit::DClass,
                m.dim() + 4,
                seed.wrapping_add(i as u64),
            ) {
                Ok(v) => v,
                Err(err) => return PropertyResult::fail(name, trials, err.to_string()),
            };
            if image + report.centralizer != report.group {
                return PropertyResult::fail(name, trials, "rank plus nullity missed".into());
            }
        }
    }
    PropertyResult::pass(name, trials)
}

fn identity_verdicts(
    families: &[MonoidFamily],
    trials: usize,
    seed: u64,
    name: &'static str,
    check: impl Fn(&lie::DimensionReport) -> bool,
) -> PropertyResult {
    for m in families {
        let idempotents = gather_idempotents(m, seed);
        let mut rng = substream(seed, name);
        // Standard idempotents plus a few random conjugates of each.
        for (i, e) in idempotents.iter().enumerate() {
            let mut points = vec![e.clone()];
            for _ in 0..trials.min(3) {
                if let Ok(u) = m.random_unit(&mut rng, 2) {
                    if let Ok(f) = idempotent::conjugate(m, &u, e) {
                        points.push(f);
                    }
                }
            }
            for f in points {
                match lie::dimension_report(m, &f) {
                    Ok(report) if check(&report) => {}
                    Ok(_) => {
                        return PropertyResult::fail(
                            name,
                            trials,
                            format!("identity failed for idempotent {i}"),
                        )
                    }
                    Err(err) => return PropertyResult::fail(name, trials, err.to_string()),
                }
            }
        }
    }
    PropertyResult::pass(name, trials)
}

/// Runs every property at the given trial count. With `trials == 0` each
/// property reports a vacuous pass with a warning detail.
pub fn run_suite(families: &[MonoidFamily], trials: usize, seed: u64) -> Vec<PropertyResult> {
    let names = [
        "exact.field_axioms",
        "exact.print_parse_round_trip",
        "linalg.rank_bounds",
        "linalg.kernel_rank_identity",
        "linalg.rref_canonicality",
        "grassmann.row_operation_invariance",
        "grassmann.direct_sum_rank_criterion",
        "grassmann.orbit_rank_constancy",
        "monoid.multiplicative_closure",
        "monoid.unit_group_closure",
        "monoid.regularity",
        "green.translate_relatedness",
        "green.ambient_d_agreement",
        "idempotent.projection_reconstruction",
        "idempotent.conjugation_action",
        "lie.centralizer_containment",
        "lie.commutator_rank_nullity",
        "lie.dimension_additivity",
        "lie.orbit_correspondence",
    ];
    if trials == 0 {
        return names.iter().map(|n| PropertyResult::vacuous(n)).collect();
    }
    vec![
        field_axioms(trials, seed),
        print_parse_round_trip(trials, seed),
        rank_bounds(trials, seed),
        kernel_rank_identity(trials, seed),
        rref_canonicality(trials, seed),
        row_operation_invariance(trials, seed),
        direct_sum_rank_criterion(trials, seed),
        orbit_rank_constancy(families, trials, seed),
        multiplicative_closure(families, trials, seed),
        unit_group_closure(families, trials, seed),
        regularity(families, trials, seed),
        translate_relatedness(families, trials, seed),
        ambient_d_agreement(trials, seed),
        projection_reconstruction(families, trials, seed),
        conjugation_action(families, trials, seed),
        centralizer_containment(families, trials, seed),
        commutator_rank_nullity(families, trials, seed),
        identity_verdicts(families, trials, seed, "lie.dimension_additivity", |r| r.additivity),
        identity_verdicts(families, trials, seed, "lie.orbit_correspondence", |r| {
            r.correspondence
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_builtins() {
        let families = builtin_families();
        let results = run_suite(&families, 8, 17);
        for r in &results {
            assert!(r.passed, "{} failed: {:?}", r.name, r.detail);
        }
        assert_eq!(results.len(), 19);
    }

    #[test]
    fn zero_trials_is_a_vacuous_pass_with_warning() {
        let results = run_suite(&builtin_families(), 0, 0);
        assert!(results.iter().all(|r| r.passed));
        assert!(results.iter().all(|r| r.detail.as_deref() == Some("0 trials: vacuous pass")));
    }

    #[test]
    fn gathered_idempotents_really_are_idempotent() {
        for m in builtin_families() {
            let points = gather_idempotents(&m, 3);
            assert!(!points.is_empty());
            for e in points {
                let x = e.matrix();
                assert_eq!(&(x * x), x);
            }
        }
    }
}
