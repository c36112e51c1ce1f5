//! End-to-end run on a user-defined span monoid: upper triangular 3x3
//! matrices with equal diagonal corners.

use eggbox::green::{l_related, r_related};
use eggbox::idempotent::IdempotentPoint;
use eggbox::lie::dimension_report;
use eggbox::sampling::substream;
use eggbox::{Matrix, MonoidFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Upper triangular 2x2 matrices: a 3-dimensional span monoid.
    let m = MonoidFamily::span(vec![
        Matrix::from_int_rows(&[vec![1, 0], vec![0, 0]]),
        Matrix::from_int_rows(&[vec![0, 1], vec![0, 0]]),
        Matrix::from_int_rows(&[vec![0, 0], vec![0, 1]]),
    ])?;
    println!("validated span monoid of dim {}", m.dim());

    // Regularity survives the spot check, so the Green machinery applies.
    let report = m.spot_check_regularity(100, 21);
    println!(
        "regularity: {}/{} with {} verified witnesses",
        report.regular, report.trials, report.verified
    );

    // Green's relations inside the span.
    let mut rng = substream(22, "span_demo");
    let a = m.random_element(&mut rng, 2);
    let u = m.random_unit(&mut rng, 2)?;
    println!("a L u*a ? {}", l_related(&m, a.matrix(), &(u.matrix() * a.matrix()))?);
    println!("a R a*u ? {}", r_related(&m, a.matrix(), &(a.matrix() * u.matrix()))?);

    // Dimension reports for the idempotents diag(1,0) and diag(0,1), which
    // are NOT conjugate inside the triangular monoid.
    for rows in [[vec![1, 0], vec![0, 0]], [vec![0, 0], vec![0, 1]]] {
        let e = IdempotentPoint::new(&m, Matrix::from_int_rows(&rows))?;
        let r = dimension_report(&m, &e)?;
        println!(
            "idempotent\n{}  dims: G={} C={} Cl={} Cr={} E(L)={} E(R)={} E(D)={} ok={}",
            e.matrix(),
            r.group,
            r.centralizer,
            r.left_centralizer,
            r.right_centralizer,
            r.l_class_idempotents,
            r.r_class_idempotents,
            r.d_class_idempotents,
            r.additivity && r.correspondence
        );
    }
    Ok(())
}
