//! Deciding Green's relations and sampling Green classes.

use eggbox::green::{
    d_related, d_related_ambient, d_related_witness, h_related, l_related, r_related,
    sample_class, Relation,
};
use eggbox::sampling::substream;
use eggbox::{Matrix, MonoidFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = MonoidFamily::full(3);
    let mut rng = substream(2024, "demo");

    // L holds along left unit translates, R along right ones.
    let a = m.random_element(&mut rng, 2);
    let u = m.random_unit(&mut rng, 2)?;
    let ua = u.matrix() * a.matrix();
    let au = a.matrix() * u.matrix();
    println!("a L u*a ? {}", l_related(&m, a.matrix(), &ua)?);
    println!("a R a*u ? {}", r_related(&m, a.matrix(), &au)?);
    println!("a H u*a ? {}", h_related(&m, a.matrix(), &ua)?);

    // In the ambient full monoid, D-classes are rank classes.
    let e1 = Matrix::from_int_rows(&[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]);
    let e2 = Matrix::from_int_rows(&[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]);
    println!("\nrank-1 axes ambient-D-related? {}", d_related_ambient(&e1, &e2));
    println!("decided with a witness in M_3: {}", d_related(&m, &e1, &e2, 16, 1)?);
    if let Some(w) = d_related_witness(&m, &e1, &e2, 16, 1)? {
        println!("conjugating witness:\n{}", w.matrix());
    }

    // The block monoid diag(a, A) separates those same two idempotents:
    // equal ambient rank, but no unit of the monoid conjugates one onto the
    // other, so they lie in different D-classes of the monoid.
    let blocks = MonoidFamily::block_diagonal(&[1, 2])?;
    println!(
        "same pair inside the block monoid: {}",
        d_related(&blocks, &e1, &e2, 32, 1)?
    );

    // Class samplers: every draw passes its decider.
    let rep = m.element(e1)?;
    for relation in [Relation::L, Relation::R, Relation::H, Relation::D] {
        let samples = sample_class(&m, &rep, relation, 5, 9)?;
        let ok = samples.iter().all(|s| match relation {
            Relation::L => l_related(&m, rep.matrix(), s.matrix()).unwrap(),
            Relation::R => r_related(&m, rep.matrix(), s.matrix()).unwrap(),
            Relation::H => h_related(&m, rep.matrix(), s.matrix()).unwrap(),
            Relation::D => d_related(&m, rep.matrix(), s.matrix(), 16, 10).unwrap(),
        });
        println!("{relation:?}-class sample of 5: all verified = {ok}");
    }
    Ok(())
}
