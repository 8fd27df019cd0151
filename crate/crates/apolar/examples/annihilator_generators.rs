//! Minimal generators of the annihilator ideal, extracted degree by
//! degree as a complement of Q_1 * I_{k-1} inside I_k.

use apolar::{annihilator, parse_polynomial, VariableSplit};

fn main() {
    let split = VariableSplit::new(2, 2).unwrap();
    let f = parse_polynomial("x0^2*u1^3 + x1^2*u2^3", &split).unwrap();
    let ideal = annihilator(&f).unwrap();

    println!("f = {f}");
    println!("minimal generators of Ann(f):");
    for g in ideal.generators_report() {
        println!("  {g}");
    }
    println!("dim I_k by degree:");
    for k in 1..=ideal.socle_degree() + 1 {
        println!("  k = {k}: {}", ideal.dimension(k));
    }
}
