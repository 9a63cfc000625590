//! Tour of the exact substrate: parsing, printing, derivatives, modular
//! evaluation, and weight valuations.

use singulct::exact::ideal::{MonomialIdeal, WeightVector};
use singulct::exact::monomial::Monomial;
use singulct::exact::parse::parse;

fn main() -> singulct::Result<()> {
    let f = parse("x^2 + y^3", &["x", "y"])?;
    println!("f           = {}", f.to_string_with(&["x", "y"]));
    println!(
        "∂f/∂x       = {}",
        f.partial_derivative(0)?.to_string_with(&["x", "y"])
    );
    println!(
        "∂f/∂y       = {}",
        f.partial_derivative(1)?.to_string_with(&["x", "y"])
    );

    // Exact evaluation mod a prime power: f(2, 1) mod 27 = 4 + 1 = 5.
    let value = f.eval_mod(&[2, 1], 27)?;
    println!("f(2,1) mod 27 = {}", value);

    // Round trip: printing and reparsing is the identity.
    let printed = f.to_string_with(&["x", "y"]);
    let reparsed = parse(&printed, &["x", "y"])?;
    assert_eq!(f, reparsed);
    println!("print/parse round trip holds");

    // Weight valuations: ord_w(x², y³) with w = (3, 2) is min(6, 6) = 6.
    let ideal = MonomialIdeal::new(2, vec![Monomial(vec![2, 0]), Monomial(vec![0, 3])]);
    let w = WeightVector::new(vec![3, 2])?;
    println!(
        "ord_(3,2)({}) = {}   log discrepancy = {}",
        ideal,
        w.ord_ideal(&ideal)?,
        w.log_discrepancy()
    );
    Ok(())
}
