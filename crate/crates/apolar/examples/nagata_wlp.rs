//! WLP for a Nagata idealization of order d1 >= d2, with the canonical
//! witness X0 + ... + Xn and per-degree multiplication ranks.

use apolar::lefschetz::Evidence;
use apolar::{build_nagata, check_wlp, parse_polynomial, LefschetzConfig, Strategy, VariableSplit};

fn main() {
    let split = VariableSplit::new(3, 3).unwrap();
    let gs = ["u1*u2", "u2*u3", "u1*u3"]
        .iter()
        .map(|t| parse_polynomial(t, &split).unwrap())
        .collect();
    let form = build_nagata(3, gs).unwrap();
    println!("f = {}", form.form());

    let rep = check_wlp(form.form(), Strategy::Canonical, &LefschetzConfig::default()).unwrap();
    println!("WLP: {:?} (witness {:?})", rep.verdict, rep.witness);
    for e in &rep.evidence {
        if let Evidence::Rank {
            degree,
            rank,
            required,
            maximal,
            ..
        } = e
        {
            println!("  L: A_{degree} -> A_{}: rank {rank}/{required} (maximal: {maximal})", degree + 1);
        }
    }
}
