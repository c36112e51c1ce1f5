//! Building monoid families: full, block-diagonal, and validated spans.

use eggbox::{Error, Matrix, MonoidFamily};

fn main() {
    let full = MonoidFamily::full(3);
    println!("full M_3: dim {}", full.dim());

    let blocks = MonoidFamily::block_diagonal(&[1, 2]).unwrap();
    println!("block monoid diag(a, A), A 2x2: dim {}", blocks.dim());

    // Membership comes with coordinates in the span basis.
    let x = Matrix::from_int_rows(&[vec![2, 0, 0], vec![0, 1, 1], vec![0, 0, 1]]);
    let member = blocks.contains(&x).unwrap();
    println!("coordinates of a member: {:?}", member.coordinates());
    println!("is it a unit? {}", blocks.is_unit(&x));

    let leaky = Matrix::from_int_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    println!("matrix with an off-block entry is a member? {}", blocks.contains(&leaky).is_some());

    // Spans are validated: products of basis elements must stay inside.
    // The 3x3 nilpotent Jordan block squares to something outside span{I, J}.
    let jordan = Matrix::from_int_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
    match MonoidFamily::span(vec![Matrix::identity(3), jordan]) {
        Err(Error::NotClosed { i, j, product }) => {
            println!("\nspan rejected: basis product ({i}, {j}) escapes the span:\n{product}");
        }
        other => println!("unexpected: {other:?}"),
    }

    // Upper triangular 2x2 matrices do form a monoid.
    let upper = MonoidFamily::span(vec![
        Matrix::from_int_rows(&[vec![1, 0], vec![0, 0]]),
        Matrix::from_int_rows(&[vec![0, 1], vec![0, 0]]),
        Matrix::from_int_rows(&[vec![0, 0], vec![0, 1]]),
    ])
    .unwrap();
    println!("upper triangular monoid: dim {}", upper.dim());

    // Every sampled member of the built-in families is regular: some x
    // solves a*x*a = a, and the witness is verified exactly.
    for (name, family) in [("full M_4", MonoidFamily::full(4)), ("block [1,2]", blocks)] {
        let report = family.spot_check_regularity(100, 42);
        println!(
            "{name}: {}/{} regular, {} witnesses verified",
            report.regular, report.trials, report.verified
        );
    }
}
