//! Exact sparse multivariate polynomial arithmetic over a bigraded
//! variable split, together with the apolarity (differentiation) action
//! of the dual operator ring.
//!
//! Variables are ordered `x0, ..., x{n}, u1, ..., u{m}`. A polynomial in
//! the dual variables `X0, ..., Xn, U1, ..., Um` uses the same internal
//! representation and acts on the primal ring by iterated partial
//! differentiation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The declared x/u block structure of the ambient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariableSplit {
    x_count: usize,
    u_count: usize,
}

impl VariableSplit {
    pub fn new(x_count: usize, u_count: usize) -> Result<Self> {
        if x_count == 0 {
            return Err(Error::contract("x_count must be at least 1"));
        }
        Ok(VariableSplit { x_count, u_count })
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn u_count(&self) -> usize {
        self.u_count
    }

    pub fn total(&self) -> usize {
        self.x_count + self.u_count
    }

    pub fn is_x(&self, var: usize) -> bool {
        var < self.x_count
    }

    /// `x0..` for the primal ring, `X0..` for the dual operator ring.
    pub fn var_name(&self, var: usize, dual: bool) -> String {
        if var < self.x_count {
            format!("{}{}", if dual { 'X' } else { 'x' }, var)
        } else {
            format!("{}{}", if dual { 'U' } else { 'u' }, var - self.x_count + 1)
        }
    }

    /// Index of `x{k}`.
    pub fn x_var(&self, k: usize) -> usize {
        debug_assert!(k < self.x_count);
        k
    }

    /// Index of `u{k}` (1-based, matching the text grammar).
    pub fn u_var(&self, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.u_count);
        self.x_count + k - 1
    }
}

/// An exponent vector over the split's variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(split: &VariableSplit, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != split.total() {
            return Err(Error::contract(format!(
                "exponent vector has length {}, expected {}",
                exps.len(),
                split.total()
            )));
        }
        Ok(Monomial { exps })
    }

    pub fn one(split: &VariableSplit) -> Self {
        Monomial {
            exps: vec![0; split.total()],
        }
    }

    pub fn var(split: &VariableSplit, var: usize) -> Self {
        let mut exps = vec![0; split.total()];
        exps[var] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn x_degree(&self, split: &VariableSplit) -> u32 {
        self.exps[..split.x_count].iter().sum()
    }

    pub fn u_degree(&self, split: &VariableSplit) -> u32 {
        self.exps[split.x_count..].iter().sum()
    }

    pub fn bidegree(&self, split: &VariableSplit) -> (u32, u32) {
        (self.x_degree(split), self.u_degree(split))
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Quotient `other / self`; caller guarantees divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    /// Falling-factorial factor picked up when this monomial, read as a
    /// differential operator, is applied to `target`: prod_t target_t!/(target_t - self_t)!.
    pub fn diff_factor(&self, target: &Monomial) -> BigInt {
        let mut acc = BigInt::one();
        for (op, tg) in self.exps.iter().zip(&target.exps) {
            for s in 0..*op {
                acc *= BigInt::from(tg - s);
            }
        }
        acc
    }
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // a > b iff the rightmost nonzero entry of a - b is negative
    for (ea, eb) in a.iter().zip(b.iter()).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// The fixed term order: total degree, then x-degree (higher first), then
/// grevlex on the x-block, then grevlex on the u-block. Bases are listed
/// in descending order under this comparison.
pub fn term_cmp(split: &VariableSplit, a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    match a.x_degree(split).cmp(&b.x_degree(split)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let xc = split.x_count;
    match cmp_grevlex(&a.exps[..xc], &b.exps[..xc]) {
        Ordering::Equal => {}
        ord => return ord,
    }
    cmp_grevlex(&a.exps[xc..], &b.exps[xc..])
}

/// All monomials of bidegree `(i, j)`, in the fixed deterministic order
/// (descending under `term_cmp`).
pub fn monomial_basis(split: &VariableSplit, i: u32, j: u32) -> Vec<Monomial> {
    let mut xs: Vec<Vec<u32>> = Vec::new();
    compositions(i, split.x_count(), &mut Vec::new(), &mut xs);
    let mut us: Vec<Vec<u32>> = Vec::new();
    compositions(j, split.u_count(), &mut Vec::new(), &mut us);
    let mut out = Vec::with_capacity(xs.len() * us.len());
    for xe in &xs {
        for ue in &us {
            let mut exps = xe.clone();
            exps.extend_from_slice(ue);
            out.push(Monomial { exps });
        }
    }
    out.sort_by(|a, b| term_cmp(split, b, a));
    out
}

/// All monomials of total degree `k`, bidegree blocks with higher
/// x-degree first.
pub fn graded_basis(split: &VariableSplit, k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in (0..=k).rev() {
        out.extend(monomial_basis(split, i, k - i));
    }
    out
}

fn compositions(total: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 0 {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if parts == 1 {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for e in (0..=total).rev() {
        cur.push(e);
        compositions(total - e, parts - 1, cur, out);
        cur.pop();
    }
}

/// A sparse polynomial with exact rational coefficients. Also used, with
/// the dual reading of the variables, for differential operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    split: VariableSplit,
    terms: BTreeMap<Monomial, Rat>,
}

/// A polynomial read in the dual variables `X0..Xn, U1..Um`.
pub type DiffOperator = Polynomial;

impl Polynomial {
    pub fn zero(split: VariableSplit) -> Self {
        Polynomial {
            split,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(split: VariableSplit, c: Rat) -> Self {
        let mut p = Polynomial::zero(split);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(&split), c);
        }
        p
    }

    pub fn monomial(split: VariableSplit, mono: Monomial, coeff: Rat) -> Self {
        let mut p = Polynomial::zero(split);
        p.add_term(mono, coeff);
        p
    }

    pub fn variable(split: VariableSplit, var: usize) -> Self {
        Polynomial::monomial(split, Monomial::var(&split, var), Rat::one())
    }

    pub fn split(&self) -> &VariableSplit {
        &self.split
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Terms sorted descending in the fixed term order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| term_cmp(&self.split, b.0, a.0));
        v
    }

    pub fn coeff(&self, mono: &Monomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_split(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.split);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.split);
        }
        let mut out = Polynomial::zero(self.split);
        for (m, cf) in &self.terms {
            out.terms.insert(m.clone(), cf * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_split(other)?;
        let mut out = Polynomial::zero(self.split);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.split);
        for (m, c) in &self.terms {
            out.terms.insert(m.mul(mono), c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut out = Polynomial::constant(self.split, Rat::one());
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    fn check_split(&self, other: &Polynomial) -> Result<()> {
        if self.split != other.split {
            return Err(Error::SplitMismatch);
        }
        Ok(())
    }

    /// The common total degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        if it.all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// The common bidegree of all terms, if bihomogeneous and nonzero.
    /// `(0, 0)` for nonzero constants, absent for the zero polynomial.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys();
        let bd = it.next()?.bidegree(&self.split);
        if it.all(|m| m.bidegree(&self.split) == bd) {
            Some(bd)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    /// True when every variable appearing lies in the u-block.
    pub fn is_u_only(&self) -> bool {
        self.terms.keys().all(|m| m.x_degree(&self.split) == 0)
    }

    /// Apolarity action: `self` read as a differential operator applied
    /// to `f` by iterated partial differentiation (with factorials).
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_split(f)?;
        let mut out = Polynomial::zero(self.split);
        for (mo, co) in &self.terms {
            for (mf, cf) in &f.terms {
                if mo.divides(mf) {
                    let factor = mo.diff_factor(mf);
                    out.add_term(mo.quotient_into(mf), co * cf * Rat::from_integer(factor));
                }
            }
        }
        Ok(out)
    }

    /// Single partial derivative with respect to one variable.
    pub fn partial(&self, var: usize) -> Polynomial {
        let op = Polynomial::variable(self.split, var);
        op.apply(self).expect("same split")
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.split.total() {
            return Err(Error::contract(format!(
                "evaluation point has length {}, expected {}",
                point.len(),
                self.split.total()
            )));
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (var, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[var];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute zero for every variable selected by `kill`.
    pub fn substitute_zero(&self, kill: impl Fn(usize) -> bool) -> Polynomial {
        let mut out = Polynomial::zero(self.split);
        for (m, c) in &self.terms {
            let killed = m
                .exps()
                .iter()
                .enumerate()
                .any(|(var, &e)| e > 0 && kill(var));
            if !killed {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Leading term under the fixed order; `None` for zero.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|a, b| term_cmp(&self.split, a.0, b.0))
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Render in the text grammar; dual=true prints `X`/`U` variables.
    pub fn render(&self, dual: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_constant() {
                if mag.denom().is_one() {
                    factors.push(mag.numer().to_string());
                } else {
                    factors.push(format!("{}/{}", mag.numer(), mag.denom()));
                }
            }
            for (var, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.split.var_name(var, dual);
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{}^{}", name, e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// dim of the space of monomials of bidegree `(i, j)`.
pub fn basis_dim(split: &VariableSplit, i: u32, j: u32) -> usize {
    binomial(i as usize + split.x_count() - 1, i as usize)
        * if split.u_count() == 0 {
            if j == 0 {
                1
            } else {
                0
            }
        } else {
            binomial(j as usize + split.u_count() - 1, j as usize)
        }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc as usize
}
