//! Higher Hessian matrices, the Hessian criterion for the strong
//! Lefschetz property, and direct rank verification of WLP/SLP for given
//! or searched Lefschetz elements.

use std::collections::HashMap;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::apolarity::{catalecticant, coset_basis, hilbert};
use crate::error::{Error, Result};
use crate::linalg::{det_dense, ColumnEchelon, SparseVec};
use crate::ring::{rat, DiffOperator, Monomial, Polynomial, Rat};

/// The k-th Hessian matrix of f with respect to the coset basis of A_k:
/// entry (i, j) is alpha_i alpha_j (f), a form of degree d - 2k.
pub struct HessianMatrix {
    pub order: u32,
    pub basis: Vec<Monomial>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl HessianMatrix {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    /// Symbolic determinant (exact polynomial), by Laplace expansion with
    /// memoization over column subsets.
    pub fn symbolic_determinant(&self) -> Polynomial {
        let n = self.size();
        let split = *self.entries[0][0].split();
        let mut memo: HashMap<u32, Polynomial> = HashMap::new();
        memo.insert(0, Polynomial::constant(split, rat(1)));
        self.det_rec(((1u32 << n) - 1) as u32, &mut memo)
    }

    fn det_rec(&self, mask: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let row = mask.count_ones() as usize - 1;
        let split = *self.entries[0][0].split();
        let mut acc = Polynomial::zero(split);
        let mut sign = 1i64;
        for c in 0..self.size() {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &self.entries[row][c];
            if !entry.is_zero() {
                let minor = self.det_rec(mask & !(1 << c), memo);
                let term = entry.mul(&minor).expect("same split").scale(&rat(sign));
                acc = acc.add(&term).expect("same split");
            }
            sign = -sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Evaluate every entry at a point and take the scalar determinant.
    pub fn determinant_at(&self, point: &[Rat]) -> Result<Rat> {
        let n = self.size();
        let mut m = Vec::with_capacity(n);
        for row in &self.entries {
            let mut r = Vec::with_capacity(n);
            for e in row {
                r.push(e.evaluate(point)?);
            }
            m.push(r);
        }
        Ok(det_dense(&m))
    }
}

/// Entries computed with the coset basis of A_k; requires homogeneous
/// nonzero f and 0 <= k <= floor(d/2).
pub fn hessian_matrix(f: &Polynomial, k: u32) -> Result<HessianMatrix> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    if k > d / 2 {
        return Err(Error::contract(format!(
            "Hessian order {k} exceeds floor(d/2) = {}",
            d / 2
        )));
    }
    let basis = coset_basis(f, k)?;
    let split = *f.split();
    let n = basis.len();
    let mut entries = vec![vec![Polynomial::zero(split); n]; n];
    for i in 0..n {
        for j in i..n {
            let op = Polynomial::monomial(split, basis[i].mul(&basis[j]), rat(1));
            let e = op.apply(f)?;
            entries[i][j] = e.clone();
            entries[j][i] = e;
        }
    }
    Ok(HessianMatrix {
        order: k,
        basis,
        entries,
    })
}

/// How a vanishing verdict was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    Certain,
    Probabilistic,
}

/// Tunables for Hessian zero-testing and witness searches.
#[derive(Debug, Clone, Copy)]
pub struct LefschetzConfig {
    /// symbolic determinant expansion up to this matrix size
    pub symbolic_threshold: usize,
    /// evaluation rounds above the threshold, bound doubling each round
    pub zero_test_rounds: u32,
    pub seed: u64,
    pub witness_trials: u32,
}

impl Default for LefschetzConfig {
    fn default() -> Self {
        LefschetzConfig {
            symbolic_threshold: 8,
            zero_test_rounds: 12,
            seed: 0,
            witness_trials: 20,
        }
    }
}

/// Decide whether hess^k is the zero polynomial. Symbolic (certain) for
/// sigma_k within the threshold; otherwise exact evaluation at random
/// integer points, where a nonzero value is a certificate and persistent
/// vanishing is reported as probabilistic only.
pub fn hessian_vanishes(f: &Polynomial, k: u32, cfg: &LefschetzConfig) -> Result<(bool, Certainty)> {
    let hess = hessian_matrix(f, k)?;
    hessian_matrix_vanishes(&hess, cfg)
}

fn hessian_matrix_vanishes(
    hess: &HessianMatrix,
    cfg: &LefschetzConfig,
) -> Result<(bool, Certainty)> {
    if hess.size() <= cfg.symbolic_threshold {
        let det = hess.symbolic_determinant();
        return Ok((det.is_zero(), Certainty::Certain));
    }
    let split = hess.entries[0][0].split();
    let total = split.total();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for round in 0..cfg.zero_test_rounds {
        let bound = 2i64 << round;
        let point: Vec<Rat> = (0..total)
            .map(|_| rat(rng.gen_range(-bound..=bound)))
            .collect();
        if !hess.determinant_at(&point)?.is_zero() {
            return Ok((false, Certainty::Certain));
        }
    }
    Ok((true, Certainty::Probabilistic))
}

/// The matrix of multiplication by L^p from A_i to A_{i+p} in the coset
/// bases.
pub struct MultiplicationMap {
    pub witness: DiffOperator,
    pub power: u32,
    pub source_degree: u32,
    pub source_basis: Vec<Monomial>,
    pub target_basis: Vec<Monomial>,
    pub matrix: Vec<Vec<Rat>>, // target_dim x source_dim
    pub rank: usize,
}

impl MultiplicationMap {
    pub fn is_maximal_rank(&self) -> bool {
        self.rank == self.source_basis.len().min(self.target_basis.len())
    }
}

/// L must be linear (degree 1) in the dual variables; i + p <= d.
pub fn multiplication_map(
    f: &Polynomial,
    witness: &DiffOperator,
    power: u32,
    source_degree: u32,
) -> Result<MultiplicationMap> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    if witness.is_zero() || witness.degree() != Some(1) {
        return Err(Error::contract(
            "Lefschetz element must be a nonzero linear form",
        ));
    }
    if source_degree + power > d {
        return Err(Error::contract(format!(
            "target degree {} exceeds the socle degree {d}",
            source_degree + power
        )));
    }
    let source_basis = coset_basis(f, source_degree)?;
    let cat = catalecticant(f, source_degree + power)?;
    let target_basis = cat.pivot_monomials();
    let l_pow = witness.pow(power)?;
    let tdim = target_basis.len();
    let sdim = source_basis.len();
    let mut matrix = vec![vec![Rat::zero(); sdim]; tdim];
    let mut ech = ColumnEchelon::new();
    for (c, alpha) in source_basis.iter().enumerate() {
        let gamma = l_pow.mul_monomial(alpha);
        let w = gamma.apply(f)?;
        let coords = cat
            .solve_in_image(&w)
            .expect("image of Q lies in the catalecticant image");
        let mut col = SparseVec::new();
        for (r, v) in coords.iter().enumerate() {
            matrix[r][c] = v.clone();
            col.set(r, v.clone());
        }
        ech.push_column(c, col);
    }
    Ok(MultiplicationMap {
        witness: witness.clone(),
        power,
        source_degree,
        source_basis,
        target_basis,
        matrix,
        rank: ech.rank(),
    })
}

/// Which linear forms a WLP/SLP check tries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// the canonical element X0 + ... + Xn only
    Canonical,
    /// canonical plus N random rational linear forms
    Search(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Rank {
        witness: String,
        degree: u32,
        power: u32,
        rank: usize,
        required: usize,
        maximal: bool,
        /// implied by the middle-degree check for standard graded AG
        forced: bool,
    },
    Hessian {
        order: u32,
        size: usize,
        vanishes: bool,
        certainty: Certainty,
    },
    HessianAt {
        witness: String,
        order: u32,
        nonzero: bool,
    },
}

/// Per-degree ranks or per-order Hessian evaluations plus a three-valued
/// conclusion. `fails` is only emitted with a universally valid proof
/// (an identically vanishing Hessian); failed searches yield
/// `inconclusive`.
#[derive(Debug, Clone, Serialize)]
pub struct LefschetzReport {
    pub property: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub evidence: Vec<Evidence>,
    pub seed: u64,
    pub trials: u32,
}

/// The canonical element X0 + ... + Xn of Prop-style WLP statements.
pub fn canonical_element(f: &Polynomial) -> DiffOperator {
    let split = *f.split();
    let mut l = Polynomial::zero(split);
    for v in 0..split.x_count() {
        l = l.add(&Polynomial::variable(split, v)).expect("same split");
    }
    l
}

fn random_linear_form(f: &Polynomial, rng: &mut ChaCha8Rng) -> DiffOperator {
    let split = *f.split();
    loop {
        let mut l = Polynomial::zero(split);
        for v in 0..split.total() {
            let c = rng.gen_range(-5i64..=5);
            if c != 0 {
                l = l
                    .add(&Polynomial::variable(split, v).scale(&rat(c)))
                    .expect("same split");
            }
        }
        if !l.is_zero() {
            return l;
        }
    }
}

fn candidates(f: &Polynomial, strategy: Strategy, seed: u64, first: DiffOperator) -> Vec<DiffOperator> {
    let mut out = vec![first];
    if let Strategy::Search(n) = strategy {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..n {
            out.push(random_linear_form(f, &mut rng));
        }
    }
    out
}

/// All-ones linear form over every dual variable; the first SLP witness
/// candidate, since a point with zero u-coordinates makes every Hessian
/// of a bigraded form with d2 > 0 degenerate.
fn all_variables_element(f: &Polynomial) -> DiffOperator {
    let split = *f.split();
    let mut l = Polynomial::zero(split);
    for v in 0..split.total() {
        l = l.add(&Polynomial::variable(split, v)).expect("same split");
    }
    l
}

/// Weak Lefschetz property check: every map L: A_i -> A_{i+1} must have
/// maximal rank. All degrees are verified; the middle one is the only
/// degree not forced by Gorenstein symmetry.
pub fn check_wlp(f: &Polynomial, strategy: Strategy, cfg: &LefschetzConfig) -> Result<LefschetzReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    let hd = hilbert(f)?;
    let mid = (d - 1) / 2;
    let mut evidence = Vec::new();
    let mut trials = 0u32;
    for l in candidates(f, strategy, cfg.seed, canonical_element(f)) {
        trials += 1;
        let name = l.render(true);
        let mut all_maximal = true;
        let mut this_evidence = Vec::new();
        for i in 0..d {
            let mm = multiplication_map(f, &l, 1, i)?;
            let required = hd.h[i as usize].min(hd.h[i as usize + 1]);
            let maximal = mm.rank == required;
            this_evidence.push(Evidence::Rank {
                witness: name.clone(),
                degree: i,
                power: 1,
                rank: mm.rank,
                required,
                maximal,
                forced: i != mid,
            });
            if !maximal {
                all_maximal = false;
                break;
            }
        }
        evidence.extend(this_evidence);
        if all_maximal {
            return Ok(LefschetzReport {
                property: "WLP".to_string(),
                verdict: Verdict::Holds,
                witness: Some(name),
                evidence,
                seed: cfg.seed,
                trials,
            });
        }
    }
    Ok(LefschetzReport {
        property: "WLP".to_string(),
        verdict: Verdict::Inconclusive,
        witness: None,
        evidence,
        seed: cfg.seed,
        trials,
    })
}

/// Strong Lefschetz property check via the Hessian criterion: fails iff
/// some hess^k is identically zero (certified); holds iff some witness L
/// has hess^k(L) != 0 for every k <= floor(d/2).
pub fn check_slp(f: &Polynomial, strategy: Strategy, cfg: &LefschetzConfig) -> Result<LefschetzReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    let kmax = d / 2;
    let mut evidence = Vec::new();
    let mut hessians = Vec::new();
    for k in 0..=kmax {
        let hess = hessian_matrix(f, k)?;
        let (vanishes, certainty) = hessian_matrix_vanishes(&hess, cfg)?;
        evidence.push(Evidence::Hessian {
            order: k,
            size: hess.size(),
            vanishes,
            certainty,
        });
        if vanishes && certainty == Certainty::Certain {
            return Ok(LefschetzReport {
                property: "SLP".to_string(),
                verdict: Verdict::Fails,
                witness: None,
                evidence,
                seed: cfg.seed,
                trials: 0,
            });
        }
        hessians.push(hess);
    }
    let split = *f.split();
    let mut trials = 0u32;
    for l in candidates(f, strategy, cfg.seed, all_variables_element(f)) {
        trials += 1;
        let name = l.render(true);
        // evaluate each Hessian determinant at the full coefficient
        // vector of L (both X and U coefficients)
        let mut point = vec![Rat::zero(); split.total()];
        for (m, c) in l.terms() {
            let var = m
                .exps()
                .iter()
                .position(|&e| e == 1)
                .expect("linear form");
            point[var] = c.clone();
        }
        let mut all_nonzero = true;
        for hess in &hessians {
            let nonzero = !hess.determinant_at(&point)?.is_zero();
            evidence.push(Evidence::HessianAt {
                witness: name.clone(),
                order: hess.order,
                nonzero,
            });
            if !nonzero {
                all_nonzero = false;
                break;
            }
        }
        if all_nonzero {
            return Ok(LefschetzReport {
                property: "SLP".to_string(),
                verdict: Verdict::Holds,
                witness: Some(name),
                evidence,
                seed: cfg.seed,
                trials,
            });
        }
    }
    Ok(LefschetzReport {
        property: "SLP".to_string(),
        verdict: Verdict::Inconclusive,
        witness: None,
        evidence,
        seed: cfg.seed,
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::VariableSplit;

    fn split(x: usize, u: usize) -> VariableSplit {
        VariableSplit::new(x, u).unwrap()
    }

    #[test]
    fn hessian_order_zero_is_f() {
        let s = split(1, 0);
        let f = parse_polynomial("x0^5", &s).unwrap();
        let hess = hessian_matrix(&f, 0).unwrap();
        assert_eq!(hess.size(), 1);
        assert_eq!(hess.entries[0][0], f);
    }

    #[test]
    fn monomial_chain_hessian_nonzero() {
        let s = split(1, 0);
        let f = parse_polynomial("x0^5", &s).unwrap();
        let cfg = LefschetzConfig::default();
        let (vanishes, cert) = hessian_vanishes(&f, 1, &cfg).unwrap();
        assert!(!vanishes);
        assert_eq!(cert, Certainty::Certain);
    }

    #[test]
    fn hessian_symmetry() {
        let s = split(2, 2);
        let f = parse_polynomial("x0^2*u1^3 + x1^2*u2^3", &s).unwrap();
        let hess = hessian_matrix(&f, 1).unwrap();
        assert_eq!(hess.size(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(hess.entries[i][j], hess.entries[j][i]);
            }
        }
    }

    #[test]
    fn hessian_order_out_of_range() {
        let s = split(1, 0);
        let f = parse_polynomial("x0^5", &s).unwrap();
        assert!(hessian_matrix(&f, 3).is_err());
    }

    #[test]
    fn multiplication_identity_at_power_zero() {
        let s = split(2, 2);
        let f = parse_polynomial("x0^2*u1^3 + x1^2*u2^3", &s).unwrap();
        let l = canonical_element(&f);
        let mm = multiplication_map(&f, &l, 0, 2).unwrap();
        assert_eq!(mm.rank, mm.source_basis.len());
        for (r, row) in mm.matrix.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                assert_eq!(*v, if r == c { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn monomial_chain_multiplication() {
        let s = split(1, 0);
        let f = parse_polynomial("x0^5", &s).unwrap();
        let l = parse_polynomial("X0", &s).unwrap();
        let mm = multiplication_map(&f, &l, 1, 2).unwrap();
        assert_eq!(mm.matrix.len(), 1);
        assert_eq!(mm.matrix[0].len(), 1);
        assert!(!mm.matrix[0][0].is_zero());
        assert_eq!(mm.rank, 1);
    }

    #[test]
    fn nonlinear_witness_rejected() {
        let s = split(1, 0);
        let f = parse_polynomial("x0^5", &s).unwrap();
        let q = parse_polynomial("X0^2", &s).unwrap();
        assert!(multiplication_map(&f, &q, 1, 0).is_err());
    }

    #[test]
    fn slp_for_x0_cubed() {
        let s = split(1, 0);
        let f = parse_polynomial("x0^3", &s).unwrap();
        let rep = check_slp(&f, Strategy::Canonical, &LefschetzConfig::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.witness.as_deref(), Some("X0"));
    }

    #[test]
    fn wlp_for_x0_fifth() {
        let s = split(1, 0);
        let f = parse_polynomial("x0^5", &s).unwrap();
        let rep = check_wlp(&f, Strategy::Canonical, &LefschetzConfig::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.witness.as_deref(), Some("X0"));
    }

    #[test]
    fn prop_2_5_instance_vanishing_hessian() {
        // f = x0 u1^2 + x1 u1 u2 + x2 u2^2: s = 3 summands > C(m-1+d1, d1) = 2
        let s = split(3, 2);
        let f = parse_polynomial("x0*u1^2 + x1*u1*u2 + x2*u2^2", &s).unwrap();
        let cfg = LefschetzConfig::default();
        let (vanishes, cert) = hessian_vanishes(&f, 1, &cfg).unwrap();
        assert!(vanishes);
        assert_eq!(cert, Certainty::Certain);
        let rep = check_slp(&f, Strategy::Canonical, &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
    }
}
