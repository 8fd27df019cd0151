//! A single bigraded catalecticant map: rank, kernel elements (the
//! annihilator piece), and a monomial basis of the coset space A_(i,j).

use apolar::{catalecticant_bigraded, parse_polynomial, Polynomial, VariableSplit};
use apolar::ring::rat;

fn main() {
    let split = VariableSplit::new(2, 2).unwrap();
    let f = parse_polynomial("x0^2*u1^3 + x1^2*u2^3", &split).unwrap();

    let cat = catalecticant_bigraded(&f, 1, 1).unwrap();
    println!("f = {f}");
    println!(
        "catalecticant Q_(1,1) -> R_(1,2): {} columns, rank {}",
        cat.source_basis().len(),
        cat.rank()
    );
    println!("kernel (= Ann(f)_(1,1)):");
    for p in cat.kernel_polynomials() {
        println!("  {}", p.render(true));
    }
    println!("coset basis of A_(1,1):");
    for m in cat.pivot_monomials() {
        println!("  {}", Polynomial::monomial(split, m, rat(1)).render(true));
    }
}
