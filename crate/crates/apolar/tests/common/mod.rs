//! Shared helpers for the integration suites: seeded random instances
//! and a dense brute-force catalecticant oracle that shares no code with
//! the library's sparse echelon path.

use apolar::ring::{graded_basis, monomial_basis, rat, Polynomial, Rat, VariableSplit};
use apolar::simplicial::{face_complex, SimplicialComplex};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random homogeneous polynomial of degree d: 1..=4 terms, small nonzero
/// integer coefficients.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, split: &VariableSplit, d: u32) -> Polynomial {
    let basis = graded_basis(split, d);
    let terms = rng.gen_range(1..=4usize.min(basis.len()));
    let mut f = Polynomial::zero(*split);
    for _ in 0..terms {
        let mono = basis.choose(rng).unwrap().clone();
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        f.add_term(mono, rat(c));
    }
    if f.is_zero() {
        f.add_term(basis[0].clone(), rat(1));
    }
    f
}

/// Random bihomogeneous polynomial of bidegree (d1, d2).
pub fn random_bihomogeneous(
    rng: &mut ChaCha8Rng,
    split: &VariableSplit,
    d1: u32,
    d2: u32,
) -> Polynomial {
    let basis = monomial_basis(split, d1, d2);
    let terms = rng.gen_range(1..=4usize.min(basis.len()));
    let mut f = Polynomial::zero(*split);
    for _ in 0..terms {
        let mono = basis.choose(rng).unwrap().clone();
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        f.add_term(mono, rat(c));
    }
    if f.is_zero() {
        f.add_term(basis[0].clone(), rat(1));
    }
    f
}

/// Row echelon rank of a dense rational matrix; written independently of
/// the library's sparse column echelon.
pub fn dense_rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let pivot = (rank..rows).find(|&r| !m[r][c].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        m.swap(rank, pivot);
        let inv = m[rank][c].clone().recip();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                for cc in 0..cols {
                    let sub = &m[rank][cc] * &factor;
                    m[r][cc] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// The degree-k catalecticant as a dense matrix: rows indexed by the
/// degree-(d-k) monomial basis, columns by the degree-k operator basis.
pub fn dense_catalecticant(f: &Polynomial, k: u32) -> Vec<Vec<Rat>> {
    let split = *f.split();
    let d = f.degree().expect("homogeneous input");
    let source = graded_basis(&split, k);
    let target = graded_basis(&split, d - k);
    let mut m = vec![vec![Rat::zero(); source.len()]; target.len()];
    for (col, op) in source.iter().enumerate() {
        let image = Polynomial::monomial(split, op.clone(), rat(1))
            .apply(f)
            .unwrap();
        for (row, t) in target.iter().enumerate() {
            m[row][col] = image.coeff(t);
        }
    }
    m
}

/// Random pure complex: dimension k, distinct (k+1)-subsets of 1..=m.
pub fn random_pure_complex(rng: &mut ChaCha8Rng) -> (SimplicialComplex, u32) {
    loop {
        let m = rng.gen_range(2..=7usize);
        let k = rng.gen_range(1..=3u32.min(m as u32 - 1));
        let size = k as usize + 1;
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        enumerate_subsets(m, size, &mut subsets);
        subsets.shuffle(rng);
        let count = rng.gen_range(1..=10usize.min(subsets.len()));
        let facets: Vec<Vec<usize>> = subsets.into_iter().take(count).collect();
        let cx = face_complex(facets, m).expect("valid facets");
        if cx.is_pure() && cx.dimension() == k as usize {
            return (cx, k);
        }
    }
}

fn enumerate_subsets(m: usize, size: usize, out: &mut Vec<Vec<usize>>) {
    fn go(start: usize, m: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..=m {
            cur.push(v);
            go(v + 1, m, size, cur, out);
            cur.pop();
        }
    }
    go(1, m, size, &mut Vec::new(), out);
}
