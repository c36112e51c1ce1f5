//! Subspaces as Grassmannian points: canonical forms, complements, and
//! orbit sampling under the unit group of a monoid.

use eggbox::grassmann::{grassmann_dim, is_direct_sum, nullspace_of, range_of, sample_orbit_ranges};
use eggbox::{Matrix, MonoidFamily, Subspace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Two spanning matrices with the same row space canonicalize identically.
    let p = Matrix::from_int_rows(&[vec![1, 2, 3], vec![0, 1, 1]]);
    let u = Matrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
    let w = Subspace::from_rows(&p);
    let w2 = Subspace::from_rows(&(&u * &p));
    println!("canonical basis of the plane:\n{}", w.basis());
    println!("same subspace after row operations? {}", w == w2);

    // Range and null space of a projection are complementary.
    let e = Matrix::from_int_rows(&[vec![1, 1, 0], vec![0, 0, 0], vec![0, 0, 1]]);
    let range = range_of(&e);
    let null = nullspace_of(&e);
    println!("\nrange of e (dim {}):\n{}", range.dim(), range.basis());
    println!("null space of e (dim {}):\n{}", null.dim(), null.basis());
    println!("complementary? {}", is_direct_sum(&range, &null)?);

    // The Grassmannian of k-planes in dimension n has dimension k(n-k).
    for (n, k) in [(4, 2), (3, 1), (5, 0)] {
        println!("dim of the {k}-plane Grassmannian in dim {n}: {}", grassmann_dim(n, k));
    }

    // Orbit of a range under right translation by units: in the full monoid
    // a plane moves freely, while the scalar axis of the block monoid
    // diag(a, A) is pinned.
    let full = MonoidFamily::full(3);
    let plane = Matrix::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]);
    let moved = sample_orbit_ranges(&full, &plane, 30, 7)?;
    println!("\ndistinct plane positions after 30 unit translates in M_3: {}", moved.len());

    let blocks = MonoidFamily::block_diagonal(&[1, 2])?;
    let axis = Matrix::from_int_rows(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]);
    let pinned = sample_orbit_ranges(&blocks, &axis, 30, 7)?;
    println!("distinct positions of the scalar axis in the block monoid: {}", pinned.len());
    Ok(())
}
