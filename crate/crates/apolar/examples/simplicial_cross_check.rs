//! Cross-validate the closed-form predictions for the two-pyramid
//! complex (octahedron boundary minus a matching) against the exact
//! catalecticant computation.

use apolar::{face_complex, predict_hilbert, verify_prediction};

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
    let p = predict_hilbert(&cx, 2).unwrap();
    println!("predicted h: {:?}", p.h);
    let report = verify_prediction(&cx, 2).unwrap();
    for c in &report.dimension_checks {
        if !c.pass {
            println!("dim mismatch at ({},{}): predicted {} computed {}", c.i, c.j, c.predicted, c.computed);
        }
    }
    for c in &report.generator_checks {
        if !c.annihilates {
            println!("generator fails to annihilate: {}", c.generator);
        }
    }
    for c in &report.ideal_checks {
        println!(
            "degree {}: ideal {} vs annihilator {} -> {}",
            c.degree,
            c.ideal_dim,
            c.annihilator_dim,
            if c.pass { "ok" } else { "MISMATCH" }
        );
    }
    println!("overall: {}", if report.pass { "pass" } else { "fail" });
}
