//! Certified log canonical thresholds of monomial ideals.
//!
//! The value is found by a bounded integer weight search and then proved
//! optimal by an exact LP feasibility certificate on the Newton polyhedron;
//! the independent LP maximization route is shown alongside.

use singulct::exact::ideal::MonomialIdeal;
use singulct::exact::monomial::Monomial;
use singulct::invariants::{lct_monomial, lct_monomial_lp};

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|e| Monomial(e.to_vec())).collect())
}

fn main() -> singulct::Result<()> {
    let cases = vec![
        ideal(1, &[&[2]]),                               // (x²)
        ideal(2, &[&[2, 0], &[0, 3]]),                   // (x², y³)
        ideal(2, &[&[1, 0], &[0, 1]]),                   // (x, y)
        ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), // (x, y, z)
        ideal(3, &[&[4, 0, 0], &[0, 3, 2], &[1, 1, 1]]),
        ideal(2, &[&[0, 0]]), // unit ideal
    ];
    for a in cases {
        let certified = lct_monomial(&a)?;
        let lp = lct_monomial_lp(&a)?;
        assert_eq!(certified.value, lp);
        match certified.witness {
            Some(w) => println!(
                "lct{} = {}   witness w = {:?}, search bound {}",
                a,
                certified.value,
                w.weights(),
                certified.search_bound
            ),
            None => println!(
                "lct{} = {}   (unit ideal, flagged infinite)",
                a, certified.value
            ),
        }
    }
    Ok(())
}
