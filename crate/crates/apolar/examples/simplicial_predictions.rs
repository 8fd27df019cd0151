//! Closed-form predictions for the two-pyramid complex: f-vector,
//! bigraded Hilbert table and the generator families of the annihilator.

use apolar::{face_complex, predict_generators, predict_hilbert};

fn main() {
    let cx = face_complex(
        vec![
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 4, 5],
            vec![1, 3, 5],
            vec![2, 3, 6],
            vec![2, 4, 6],
            vec![4, 5, 6],
            vec![3, 5, 6],
        ],
        6,
    )
    .unwrap();
    println!("f-vector: {:?}", cx.f_vector());
    println!("pure of dimension {}", cx.dimension());

    let p = predict_hilbert(&cx, 2).unwrap();
    println!("predicted h = {:?}", p.h);
    println!(
        "h_2 decomposition: {} + {} + {}",
        p.bigraded_dim(2, 0).unwrap(),
        p.bigraded_dim(1, 1).unwrap(),
        p.bigraded_dim(0, 2).unwrap()
    );

    let fam = predict_generators(&cx, 2).unwrap();
    println!("minimal nonfaces (diagonals):");
    for g in &fam.nonfaces {
        println!("  {}", g.render(true));
    }
    println!("a few binomial generators:");
    for g in fam.binomials.iter().take(4) {
        println!("  {}", g.render(true));
    }
    println!(
        "family sizes: power {}, nonface {}, mixed {}, binomial {}, cross {}",
        fam.power.len(),
        fam.nonfaces.len(),
        fam.mixed.len(),
        fam.binomials.len(),
        fam.cross.len()
    );
}
