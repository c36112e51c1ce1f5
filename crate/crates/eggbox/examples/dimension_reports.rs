//! The dimension engine on its marquee example: the block monoid
//! M = { diag(a, A) : a scalar, A 2x2 }.
//!
//! Its two rank-1 standard idempotents e = diag(1,0,0) and f = diag(0,1,0)
//! have equal rank, so they share one D-class in the ambient M_3. Inside M
//! they separate: the idempotent manifold of the D-class of e is a single
//! point (dimension 0), while that of f has dimension 2.

use eggbox::idempotent::{standard_idempotent, StandardIdempotent};
use eggbox::lie::{
    dimension_report, empirical_orbit_dim, verify_dimension_additivity,
    verify_orbit_correspondence, IdempotentOrbit,
};
use eggbox::MonoidFamily;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = MonoidFamily::block_diagonal(&[1, 2])?;
    println!("monoid dim {} in ambient M_{}\n", m.dim(), m.n());

    for (name, ranks) in [("e = diag(1,0,0)", vec![1, 0]), ("f = diag(0,1,0)", vec![0, 1])] {
        let e = standard_idempotent(&m, &StandardIdempotent::BlockRanks(ranks))?;
        let r = dimension_report(&m, &e)?;
        println!("{name}:");
        println!("  dim G = {}, dim C = {}, dim Cl = {}, dim Cr = {}",
            r.group, r.centralizer, r.left_centralizer, r.right_centralizer);
        println!("  dim E(L) = {}, dim E(R) = {}, dim E(D) = {}",
            r.l_class_idempotents, r.r_class_idempotents, r.d_class_idempotents);
        println!("  dim Gl = {}, dim Gr = {}", r.range_orbit, r.nullspace_orbit);
        println!("  E(D) splits as E(L) + E(R)?        {}", r.additivity);
        println!("  orbit dims match subspace orbits?  {}", r.correspondence);

        // Independent cross-check: the rank of the linearized orbit map.
        let image = empirical_orbit_dim(&m, &e, IdempotentOrbit::DClass, m.dim() + 4, 3)?;
        println!("  linearized conjugation-orbit rank: {image}\n");
    }

    // The same two identities in full matrix monoids, where the idempotent
    // manifolds have the familiar dimensions k(n-k) and 2k(n-k).
    println!("full M_4, all ranks:");
    println!("  k | dim E(L) | dim E(D) | additivity  correspondence");
    let m4 = MonoidFamily::full(4);
    for k in 0..=4 {
        let e = standard_idempotent(&m4, &StandardIdempotent::Rank(k))?;
        let r = dimension_report(&m4, &e)?;
        println!(
            "  {k} | {:8} | {:8} | {:10}  {}",
            r.l_class_idempotents,
            r.d_class_idempotents,
            verify_dimension_additivity(&m4, &e)?,
            verify_orbit_correspondence(&m4, &e)?
        );
    }
    Ok(())
}
