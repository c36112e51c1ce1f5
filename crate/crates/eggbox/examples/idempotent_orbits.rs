//! Idempotents as projections, and their conjugation orbits inside L-, R-,
//! and D-classes.

use eggbox::grassmann::Subspace;
use eggbox::idempotent::{
    conjugate, make_projection, sample_e_d, sample_e_l, sample_e_r, standard_idempotent,
    StandardIdempotent,
};
use eggbox::sampling::substream;
use eggbox::{Matrix, MonoidFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = MonoidFamily::full(2);

    // An idempotent is the projection onto its range along its null space.
    let w = Subspace::from_rows(&Matrix::from_int_rows(&[vec![1, 1]]));
    let n = Subspace::from_rows(&Matrix::from_int_rows(&[vec![0, 1]]));
    let e = make_projection(&m, &w, &n)?;
    println!("projection onto span(1,1) along span(0,1):\n{}", e.matrix());
    println!("rank {}, squares to itself, splits the plane.\n", e.rank());

    // Orbit sampling in M_3 around the standard rank-1 idempotent.
    let m3 = MonoidFamily::full(3);
    let e = standard_idempotent(&m3, &StandardIdempotent::Rank(1))?;

    let l_orbit = sample_e_l(&m3, &e, 3, 5)?;
    println!("three idempotents of the L-class (all share the range):");
    for f in &l_orbit {
        assert_eq!(f.range(), e.range());
        print!("{}", f.matrix());
        println!();
    }

    let r_orbit = sample_e_r(&m3, &e, 3, 6)?;
    println!("three idempotents of the R-class (all share the null space):");
    for f in &r_orbit {
        assert_eq!(f.nullspace(), e.nullspace());
        print!("{}", f.matrix());
        println!();
    }

    let d_orbit = sample_e_d(&m3, &e, 3, 7)?;
    println!("three idempotents of the D-class (rank 1 conjugates):");
    for f in &d_orbit {
        assert_eq!(f.rank(), 1);
        print!("{}", f.matrix());
        println!();
    }

    // In the block monoid diag(a, A) the conjugation orbit of diag(1, 0, 0)
    // is a single point: every unit of the monoid fixes it.
    let blocks = MonoidFamily::block_diagonal(&[1, 2])?;
    let pinned = standard_idempotent(&blocks, &StandardIdempotent::BlockRanks(vec![1, 0]))?;
    let mut rng = substream(8, "pinned");
    let mut fixed = true;
    for _ in 0..50 {
        let u = blocks.random_unit(&mut rng, 2)?;
        fixed &= conjugate(&blocks, &u, &pinned)? == pinned;
    }
    println!("diag(1,0,0) fixed by 50 random unit conjugations? {fixed}");
    Ok(())
}
