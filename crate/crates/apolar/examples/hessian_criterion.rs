//! The higher Hessian criterion for the strong Lefschetz property: a
//! form where every Hessian is nonzero (SLP holds) and one whose first
//! Hessian vanishes identically (SLP fails).

use apolar::{check_slp, hessian_matrix, hessian_vanishes, parse_polynomial, LefschetzConfig,
             Strategy, VariableSplit};

fn main() {
    let cfg = LefschetzConfig::default();

    // SLP holds: both controlled Hessians are nonzero
    let split = VariableSplit::new(2, 2).unwrap();
    let f = parse_polynomial("x0^2*u1^3 + x1^2*u2^3", &split).unwrap();
    for k in [1, 2] {
        let hess = hessian_matrix(&f, k).unwrap();
        let (vanishes, certainty) = hessian_vanishes(&f, k, &cfg).unwrap();
        println!(
            "hess^{k} of {f}: size {}, vanishes = {vanishes} ({certainty:?})",
            hess.size()
        );
    }
    let rep = check_slp(&f, Strategy::Search(20), &cfg).unwrap();
    println!("SLP: {:?} (witness {:?})", rep.verdict, rep.witness);

    // SLP fails: too many summands of low x-degree force hess^1 = 0
    let split = VariableSplit::new(3, 2).unwrap();
    let g = parse_polynomial("x0*u1^2 + x1*u1*u2 + x2*u2^2", &split).unwrap();
    let (vanishes, certainty) = hessian_vanishes(&g, 1, &cfg).unwrap();
    println!("hess^1 of {g}: vanishes = {vanishes} ({certainty:?})");
    let rep = check_slp(&g, Strategy::Canonical, &cfg).unwrap();
    println!("SLP: {:?}", rep.verdict);
}
