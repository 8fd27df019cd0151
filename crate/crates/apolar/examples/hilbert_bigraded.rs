//! Hilbert data of A = Q/Ann(f) for f = x0^2 u1^3 + x1^2 u2^3: the
//! socle degree, the Hilbert vector and the bigraded dimension table.

use apolar::{hilbert, parse_polynomial, VariableSplit};

fn main() {
    let split = VariableSplit::new(2, 2).unwrap();
    let f = parse_polynomial("x0^2*u1^3 + x1^2*u2^3", &split).unwrap();
    let hd = hilbert(&f).unwrap();

    println!("f = {f}");
    println!("socle degree: {}", hd.socle_degree);
    println!("h = {:?}", hd.h);
    println!("bigraded dimensions of A:");
    for (i, j, dim) in hd.bigraded.as_ref().unwrap() {
        println!("  dim A_({i},{j}) = {dim}");
    }
}
