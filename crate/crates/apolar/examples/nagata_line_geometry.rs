//! The scroll structure of a Nagata hypersurface: exact restriction of f
//! to a line pencil and seeded sampling of the line family, plus the
//! symbolic singular-locus check.

use apolar::ring::{rat, Rat};
use apolar::{build_nagata, parse_polynomial, restrict_to_line, sample_line_family,
             singular_locus_contains_alpha_space, LinePencil, VariableSplit};
use num_traits::Zero;

fn main() {
    let split = VariableSplit::new(2, 2).unwrap();
    let gs = ["u1^2", "u2^2"]
        .iter()
        .map(|t| parse_polynomial(t, &split).unwrap())
        .collect();
    let form = build_nagata(2, gs).unwrap();
    println!("f = {}", form.form());

    // a line through p_alpha = (0:1) and p_bar = (1:0): g_0 vanishes at
    // p_alpha, so the whole line lies on V(f)
    let pencil = LinePencil {
        p_alpha: vec![rat(0), rat(1)],
        p_bar: vec![rat(1), rat(0)],
    };
    let c: Rat = restrict_to_line(&form, &pencil).unwrap();
    println!("restriction scalar c = {c} (on V(f): {})", c.is_zero());

    let summary = sample_line_family(&form, 10, 42).unwrap();
    println!(
        "sampled {} lines, {} on the hypersurface ({} attempts)",
        summary.trials, summary.on_hypersurface, summary.attempts
    );
    println!(
        "line family parameters: {} (alpha: {}, point: {})",
        summary.line_family_dimension, summary.alpha_parameters, summary.point_parameters
    );
    println!(
        "singular locus contains the alpha-space: {}",
        singular_locus_contains_alpha_space(&form)
    );
}
