//! Exact scalars and matrices: parsing, arithmetic, and the elimination
//! kernel everything else is built on.

use eggbox::linalg::solve_linear;
use eggbox::{Matrix, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Scalars are Gaussian rationals with a bit-exact textual grammar.
    let a: Scalar = "1/2+3/4*i".parse()?;
    let b: Scalar = "-2/5*i".parse()?;
    println!("a        = {a}");
    println!("b        = {b}");
    println!("a + b    = {}", &a + &b);
    println!("a * b    = {}", &a * &b);
    println!("a / a    = {}", a.checked_div(&a)?);
    println!("i * i    = {}", &Scalar::i() * &Scalar::i());

    // No epsilon anywhere: a billionth is simply not zero.
    let tiny = Scalar::from_rational(1, 1_000_000_000);
    println!("1/10^9 is zero? {}", tiny.is_zero());

    // Dense matrices over the same scalars.
    let m = Matrix::from_rows(vec![
        vec!["1".parse()?, "1*i".parse()?],
        vec!["1*i".parse()?, "-1".parse()?],
    ])?;
    println!("\nm =\n{m}");
    let reduced = m.rref();
    println!("rref(m) has rank {}:\n{}", reduced.rank, reduced.matrix);

    let t = Matrix::from_int_rows(&[vec![1, 1], vec![0, 1]]);
    println!("t =\n{t}");
    println!("det(t) = {}", t.det());
    println!("t^-1 =\n{}", t.inverse()?);

    // Solving A x = b returns a particular solution and the kernel.
    let a = Matrix::from_int_rows(&[vec![1, 1]]);
    let rhs = [Scalar::from_integer(2)];
    let outcome = solve_linear(&a, &rhs);
    println!("particular solution of [1 1] x = [2]: {:?}", outcome.particular.unwrap());
    println!("kernel basis: {:?}", outcome.kernel);
    Ok(())
}
