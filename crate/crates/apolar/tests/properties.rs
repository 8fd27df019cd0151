//! Property-based invariants: operator composition, parser round-trips,
//! Hilbert symmetry.

use apolar::apolarity::hilbert;
use apolar::parse::parse_polynomial;
use apolar::ring::{graded_basis, rat, Polynomial, VariableSplit};
use proptest::prelude::*;

#[derive(Debug, Clone)]
struct Instance {
    split: VariableSplit,
    f: Polynomial,
}

fn poly_strategy(max_degree: u32) -> impl Strategy<Value = Instance> {
    (1usize..=3, 0usize..=2, 1u32..=max_degree).prop_flat_map(move |(x, u, d)| {
        let split = VariableSplit::new(x, u).unwrap();
        let basis = graded_basis(&split, d);
        let len = basis.len();
        proptest::collection::vec((0..len, -3i64..=3), 1..=4).prop_map(move |terms| {
            let mut f = Polynomial::zero(split);
            for (idx, c) in terms {
                f.add_term(basis[idx].clone(), rat(c));
            }
            if f.is_zero() {
                f.add_term(basis[0].clone(), rat(1));
            }
            Instance { split, f }
        })
    })
}

fn pick_poly(
    split: VariableSplit,
    degree: u32,
    terms: &[(usize, i64)],
) -> Polynomial {
    let basis = graded_basis(&split, degree);
    let mut f = Polynomial::zero(split);
    for &(idx, c) in terms {
        f.add_term(basis[idx % basis.len()].clone(), rat(c));
    }
    if f.is_zero() {
        f.add_term(basis[0].clone(), rat(1));
    }
    f
}

/// Two operators and a target polynomial over one shared split.
fn pair_strategy() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (1usize..=3, 0usize..=2, 1u32..=2, 1u32..=2, 2u32..=4).prop_flat_map(
        |(x, u, d1, d2, df)| {
            let split = VariableSplit::new(x, u).unwrap();
            let term = (0usize..64, -3i64..=3);
            (
                proptest::collection::vec(term.clone(), 1..=3),
                proptest::collection::vec(term.clone(), 1..=3),
                proptest::collection::vec(term, 1..=3),
            )
                .prop_map(move |(t1, t2, t3)| {
                    (
                        pick_poly(split, d1, &t1),
                        pick_poly(split, d2, &t2),
                        pick_poly(split, df, &t3),
                    )
                })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_equals_product(pair in pair_strategy()) {
        // (op1 * op2)(f) = op1(op2(f)) over a shared split
        let (op1, op2, f) = pair;
        let lhs = op1.mul(&op2).unwrap().apply(&f).unwrap();
        let rhs = op1.apply(&op2.apply(&f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn render_parse_round_trip(inst in poly_strategy(4)) {
        let text = inst.f.render(false);
        let back = parse_polynomial(&text, &inst.split).unwrap();
        prop_assert_eq!(back, inst.f);
    }

    #[test]
    fn hilbert_symmetry(inst in poly_strategy(4)) {
        let hd = hilbert(&inst.f).unwrap();
        let d = hd.socle_degree as usize;
        prop_assert_eq!(hd.h[0], 1);
        for k in 0..=d {
            prop_assert_eq!(hd.h[k], hd.h[d - k]);
        }
    }
}
