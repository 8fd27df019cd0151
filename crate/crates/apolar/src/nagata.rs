//! Nagata polynomials of order d1 (f = sum x_i^{d1} g_i) and exact
//! verification of the line geometry of the associated hypersurface.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::linalg::SparseVec;
use crate::ring::{rat, Monomial, Polynomial, Rat, VariableSplit};

/// f = x_0^{d1} g_0 + ... + x_n^{d1} g_n with the g_i homogeneous of a
/// common degree d2 in the u-variables.
#[derive(Debug, Clone)]
pub struct NagataForm {
    order: u32,
    g_list: Vec<Polynomial>,
    form: Polynomial,
    warnings: Vec<String>,
}

impl NagataForm {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn g_list(&self) -> &[Polynomial] {
        &self.g_list
    }

    pub fn form(&self) -> &Polynomial {
        &self.form
    }

    /// Side-condition violations of the definition (dependent g_i, unused
    /// u-variable) are reported here rather than rejected.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn split(&self) -> &VariableSplit {
        self.form.split()
    }

    pub fn u_degree(&self) -> u32 {
        self.g_list[0].degree().expect("validated homogeneous")
    }
}

/// Assemble a Nagata form of order d1 from g_0..g_n. The split is shared
/// by the g_i and must have x_count equal to the number of summands.
/// Definition side conditions are checked and reported as warnings, not
/// errors.
pub fn build_nagata(d1: u32, g_list: Vec<Polynomial>) -> Result<NagataForm> {
    if g_list.is_empty() {
        return Err(Error::contract("empty g list"));
    }
    if d1 == 0 {
        return Err(Error::contract("Nagata order d1 must be at least 1"));
    }
    let split = *g_list[0].split();
    if split.x_count() != g_list.len() {
        return Err(Error::contract(format!(
            "split has {} x-variables but {} summands were given",
            split.x_count(),
            g_list.len()
        )));
    }
    let d2 = match g_list[0].degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::contract(
                "each g_i must be homogeneous of a common degree d2 >= 1",
            ))
        }
    };
    for g in &g_list {
        if g.split() != &split {
            return Err(Error::SplitMismatch);
        }
        if g.degree() != Some(d2) {
            return Err(Error::contract(
                "each g_i must be homogeneous of a common degree d2 >= 1",
            ));
        }
        if !g.is_u_only() {
            return Err(Error::contract("each g_i must involve u-variables only"));
        }
    }
    let mut warnings = Vec::new();
    // linear independence of the g_i
    let mut index = std::collections::HashMap::new();
    let mut span = RowSpace::new();
    let mut independent = 0usize;
    for g in &g_list {
        let mut v = SparseVec::new();
        for (m, c) in g.terms() {
            let next = index.len();
            let idx = *index.entry(m.clone()).or_insert(next);
            v.set(idx, c.clone());
        }
        if span.insert(v) {
            independent += 1;
        }
    }
    if independent < g_list.len() {
        warnings.push(format!(
            "the g_i are linearly dependent (rank {} of {})",
            independent,
            g_list.len()
        ));
    }
    for k in 1..=split.u_count() {
        let var = split.u_var(k);
        if g_list.iter().all(|g| g.terms().all(|(m, _)| m.exp(var) == 0)) {
            warnings.push(format!("u{k} does not occur in any g_i"));
        }
    }
    let mut form = Polynomial::zero(split);
    for (i, g) in g_list.iter().enumerate() {
        let mut exps = vec![0u32; split.total()];
        exps[i] = d1;
        let xpow = Monomial::new(&split, exps).unwrap();
        form = form.add(&g.mul_monomial(&xpow))?;
    }
    Ok(NagataForm {
        order: d1,
        g_list,
        form,
        warnings,
    })
}

/// A line joining a point of the u-coordinate space P^{m-1} and a point
/// of the x-coordinate space P^n, parametrized as (lambda xbar, mu a).
#[derive(Debug, Clone)]
pub struct LinePencil {
    pub p_alpha: Vec<Rat>, // a_1..a_m, not all zero
    pub p_bar: Vec<Rat>,   // xbar_0..xbar_n, not all zero
}

/// The scalar c = sum xbar_i^{d1} g_i(a). The restriction of f to the
/// line is c * lambda^{d1} mu^{d2}; the line lies on V(f) iff c = 0.
pub fn restrict_to_line(form: &NagataForm, pencil: &LinePencil) -> Result<Rat> {
    let split = form.split();
    if pencil.p_alpha.len() != split.u_count() || pencil.p_bar.len() != split.x_count() {
        return Err(Error::contract("coordinate tuples of the declared lengths"));
    }
    if pencil.p_alpha.iter().all(Rat::is_zero) || pencil.p_bar.iter().all(Rat::is_zero) {
        return Err(Error::contract("projective points cannot be all-zero"));
    }
    let mut point = vec![Rat::zero(); split.total()];
    for (k, a) in pencil.p_alpha.iter().enumerate() {
        point[split.u_var(k + 1)] = a.clone();
    }
    let mut c = Rat::zero();
    for (i, g) in form.g_list().iter().enumerate() {
        let gi = g.evaluate(&point)?;
        let mut xp = Rat::from_integer(1.into());
        for _ in 0..form.order() {
            xp *= &pencil.p_bar[i];
        }
        c += xp * gi;
    }
    Ok(c)
}

/// All first partials of f vanish on the locus x = 0 (true for d1 >= 2),
/// checked symbolically.
pub fn singular_locus_contains_alpha_space(form: &NagataForm) -> bool {
    let split = *form.split();
    (0..split.total()).all(|v| {
        form.form()
            .partial(v)
            .substitute_zero(|var| split.is_x(var))
            .is_zero()
    })
}

/// Result of the exact line-family sampling of the scroll structure.
#[derive(Debug, Clone, Serialize)]
pub struct IncidenceSummary {
    pub trials: u32,
    pub on_hypersurface: u32,
    pub seed: u64,
    pub singular_locus_check: bool,
    /// independent parameters of p_alpha in P^{m-1}
    pub alpha_parameters: usize,
    /// independent parameters of p_bar in P^n after the c = 0 constraint
    pub point_parameters: usize,
    /// parameter count of the line family: m + n - 1
    pub line_family_dimension: usize,
    pub attempts: u32,
    pub conclusive: bool,
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-10i64..=10);
    let den = rng.gen_range(1i64..=10);
    Rat::new(num.into(), den.into())
}

/// Sample `trials` line pencils with p_alpha in V(f) cap P^{m-1} and
/// p_bar solved to satisfy c = 0, and verify each line lies on V(f) by
/// exact evaluation at d+1 distinct parameter values.
pub fn sample_line_family(form: &NagataForm, trials: u32, seed: u64) -> Result<IncidenceSummary> {
    if trials < 1 {
        return Err(Error::contract("trials must be at least 1"));
    }
    let split = *form.split();
    let m = split.u_count();
    let n_plus_1 = split.x_count();
    if m == 0 {
        return Err(Error::contract("a Nagata form needs at least one u-variable"));
    }
    let d1 = form.order();
    let d = form.form().degree().expect("bihomogeneous form");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut on_hypersurface = 0u32;
    let mut successes = 0u32;
    let mut attempts = 0u32;
    let budget = 10_000u32;
    while successes < trials && attempts < budget {
        attempts += 1;
        // p_alpha: random rational coordinates, a random subset zeroed so
        // that some g_i can vanish when d1 >= 2
        let mut a: Vec<Rat> = (0..m).map(|_| random_rat(&mut rng)).collect();
        if d1 >= 2 {
            for c in a.iter_mut() {
                if rng.gen_bool(0.5) {
                    *c = Rat::zero();
                }
            }
        }
        if a.iter().all(Rat::is_zero) {
            continue;
        }
        // evaluate the g_i at p_alpha
        let mut point = vec![Rat::zero(); split.total()];
        for (k, c) in a.iter().enumerate() {
            point[split.u_var(k + 1)] = c.clone();
        }
        let g_at: Vec<Rat> = form
            .g_list()
            .iter()
            .map(|g| g.evaluate(&point))
            .collect::<Result<_>>()?;
        // p_bar solved to satisfy c = 0
        let xbar: Option<Vec<Rat>> = if g_at.iter().all(Rat::is_zero) {
            let xb: Vec<Rat> = (0..n_plus_1).map(|_| random_rat(&mut rng)).collect();
            if xb.iter().all(Rat::is_zero) {
                None
            } else {
                Some(xb)
            }
        } else if d1 == 1 {
            // c is linear in xbar: solve for one coordinate
            let j = g_at.iter().position(|v| !v.is_zero()).unwrap();
            let mut xb: Vec<Rat> = (0..n_plus_1).map(|_| random_rat(&mut rng)).collect();
            let rest: Rat = xb
                .iter()
                .zip(&g_at)
                .enumerate()
                .filter(|(i, _)| *i != j)
                .map(|(_, (x, g))| x * g)
                .sum();
            xb[j] = -rest / &g_at[j];
            if xb.iter().all(Rat::is_zero) {
                None
            } else {
                Some(xb)
            }
        } else {
            // d1 >= 2: support p_bar on the indices where g_i(a) = 0
            let zero_set: Vec<usize> = g_at
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_zero())
                .map(|(i, _)| i)
                .collect();
            if zero_set.is_empty() {
                None
            } else {
                let mut xb = vec![Rat::zero(); n_plus_1];
                let mut any = false;
                for &i in &zero_set {
                    let v = random_rat(&mut rng);
                    if !v.is_zero() {
                        any = true;
                    }
                    xb[i] = v;
                }
                if !any {
                    xb[zero_set[0]] = rat(1);
                }
                Some(xb)
            }
        };
        let xbar = match xbar {
            Some(xb) => xb,
            None => continue,
        };
        let pencil = LinePencil {
            p_alpha: a.clone(),
            p_bar: xbar.clone(),
        };
        let c = restrict_to_line(form, &pencil)?;
        // the line is on V(f) iff f vanishes at d+1 distinct points of it
        let mut params: Vec<(Rat, Rat)> = vec![(rat(1), rat(0)), (rat(0), rat(1))];
        for t in 1..d as i64 {
            params.push((rat(1), rat(t)));
        }
        let mut all_zero = true;
        for (lambda, mu) in &params {
            let mut p = vec![Rat::zero(); split.total()];
            for (i, x) in xbar.iter().enumerate() {
                p[i] = lambda * x;
            }
            for (k, av) in a.iter().enumerate() {
                p[split.u_var(k + 1)] = mu * av;
            }
            if !form.form().evaluate(&p)?.is_zero() {
                all_zero = false;
                break;
            }
        }
        // containment criterion exactness: c = 0 iff all d+1 points vanish
        debug_assert_eq!(c.is_zero(), all_zero);
        successes += 1;
        if all_zero {
            on_hypersurface += 1;
        }
    }
    Ok(IncidenceSummary {
        trials: successes,
        on_hypersurface,
        seed,
        singular_locus_check: singular_locus_contains_alpha_space(form),
        alpha_parameters: m - 1,
        point_parameters: (n_plus_1 - 1).saturating_sub(1),
        line_family_dimension: m + n_plus_1 - 2,
        attempts,
        conclusive: successes >= trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn split(x: usize, u: usize) -> VariableSplit {
        VariableSplit::new(x, u).unwrap()
    }

    fn gs(s: &VariableSplit, texts: &[&str]) -> Vec<Polynomial> {
        texts
            .iter()
            .map(|t| parse_polynomial(t, s).unwrap())
            .collect()
    }

    #[test]
    fn builds_classical_idealization_shape() {
        let s = split(2, 2);
        let f = build_nagata(1, gs(&s, &["u1", "u2"])).unwrap();
        assert_eq!(f.form().bidegree(), Some((1, 1)));
        assert!(f.warnings().is_empty());
    }

    #[test]
    fn mixed_degrees_rejected() {
        let s = split(2, 2);
        assert!(build_nagata(2, gs(&s, &["u1", "u2^2"])).is_err());
        assert!(build_nagata(2, Vec::new()).is_err());
    }

    #[test]
    fn dependent_g_warns_but_builds() {
        let s = split(2, 2);
        let f = build_nagata(2, gs(&s, &["u1*u2", "2*u1*u2"])).unwrap();
        assert!(!f.warnings().is_empty());
        assert_eq!(f.form().bidegree(), Some((2, 2)));
    }

    #[test]
    fn unused_u_variable_warns() {
        let s = split(1, 2);
        let f = build_nagata(2, gs(&s, &["u1^2"])).unwrap();
        assert!(f.warnings().iter().any(|w| w.contains("u2")));
    }

    #[test]
    fn restrict_vanishing_and_nonvanishing() {
        let s = split(1, 1);
        let f = build_nagata(3, gs(&s, &["u1^2"])).unwrap();
        // g0 = u1^2, a = (1), xbar = (1): c = 1
        let c = restrict_to_line(
            &f,
            &LinePencil {
                p_alpha: vec![rat(1)],
                p_bar: vec![rat(1)],
            },
        )
        .unwrap();
        assert_eq!(c, rat(1));
        // all-zero point tuple rejected
        assert!(restrict_to_line(
            &f,
            &LinePencil {
                p_alpha: vec![rat(0)],
                p_bar: vec![rat(1)],
            }
        )
        .is_err());
    }

    #[test]
    fn degenerate_smallest_case() {
        // f = x0 u1: through a = (1), c = xbar0, so only xbar0 = 0 fails
        // to give a line unless solved; the linear solver forces c = 0
        let s = split(1, 1);
        let f = build_nagata(1, gs(&s, &["u1"])).unwrap();
        let sum = sample_line_family(&f, 3, 7).unwrap();
        assert_eq!(sum.on_hypersurface, sum.trials);
        assert!(!sum.conclusive); // no solvable sample exists here
        assert!(!sum.singular_locus_check); // d1 = 1: partials do not all vanish on x = 0
    }

    #[test]
    fn trials_zero_rejected() {
        let s = split(1, 1);
        let f = build_nagata(2, gs(&s, &["u1^2"])).unwrap();
        assert!(sample_line_family(&f, 0, 0).is_err());
    }

    #[test]
    fn singular_locus_for_order_two() {
        let s = split(2, 2);
        let f = build_nagata(2, gs(&s, &["u1^2", "u2^2"])).unwrap();
        assert!(singular_locus_contains_alpha_space(&f));
    }
}
