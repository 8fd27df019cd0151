//! Simplicial complexes driving square-free Nagata forms: face
//! enumeration, closed-form predictions of the bigraded Hilbert table and
//! the four annihilator generator families, and cross-validation against
//! the catalecticant computations.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::apolarity::hilbert;
use crate::error::{Error, Result};
use crate::linalg::{RowSpace, SparseVec};
use crate::nagata::{build_nagata, NagataForm};
use crate::ring::{
    basis_dim, binomial, monomial_basis, rat, Monomial, Polynomial, VariableSplit,
};

type Face = BTreeSet<usize>;

/// Vertex set {1..m} plus a facet list, with the derived face lattice,
/// f-vector, purity flag and dimension.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Face>,
    faces: BTreeSet<Face>,
    f_vector: Vec<usize>,
    dimension: usize,
    pure: bool,
    warnings: Vec<String>,
}

impl SimplicialComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// f_0 = 1, f_j = number of (j-1)-faces.
    pub fn f_vector(&self) -> &[usize] {
        &self.f_vector
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn is_face(&self, face: &Face) -> bool {
        self.faces.contains(face)
    }

    /// Nonempty faces, smallest first.
    pub fn nonempty_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| !f.is_empty())
    }

    /// Minimal elements of the complement: subsets not in the complex
    /// whose proper subsets all are.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let m = self.vertex_count;
        let mut out = Vec::new();
        for mask in 1u64..(1 << m) {
            let face: Face = (0..m).filter(|v| mask & (1 << v) != 0).map(|v| v + 1).collect();
            if self.faces.contains(&face) {
                continue;
            }
            let minimal = face.iter().all(|v| {
                let mut sub = face.clone();
                sub.remove(v);
                self.faces.contains(&sub)
            });
            if minimal {
                out.push(face);
            }
        }
        out
    }
}

/// Build a complex from its facets (1-based vertices). Facets contained
/// in other facets are dropped with a warning.
pub fn face_complex(facets: Vec<Vec<usize>>, vertex_count: usize) -> Result<SimplicialComplex> {
    if facets.is_empty() {
        return Err(Error::contract("a complex needs at least one facet"));
    }
    if vertex_count > 60 {
        return Err(Error::contract("vertex count too large for enumeration"));
    }
    let mut sets: Vec<Face> = Vec::new();
    for f in &facets {
        let set: Face = f.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::contract("empty facet"));
        }
        for &v in &set {
            if v < 1 || v > vertex_count {
                return Err(Error::contract(format!(
                    "vertex {v} outside 1..={vertex_count}"
                )));
            }
        }
        sets.push(set);
    }
    let mut warnings = Vec::new();
    let mut kept: Vec<Face> = Vec::new();
    for (idx, set) in sets.iter().enumerate() {
        let contained = sets
            .iter()
            .enumerate()
            .any(|(j, other)| j != idx && set.is_subset(other) && (set != other || j < idx));
        if contained {
            warnings.push(format!(
                "facet {:?} is contained in another facet and was dropped",
                set.iter().collect::<Vec<_>>()
            ));
        } else {
            kept.push(set.clone());
        }
    }
    // downward closure
    let mut faces: BTreeSet<Face> = BTreeSet::new();
    for facet in &kept {
        let verts: Vec<usize> = facet.iter().copied().collect();
        for mask in 0u64..(1 << verts.len()) {
            let sub: Face = verts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            faces.insert(sub);
        }
    }
    let dimension = kept.iter().map(|f| f.len()).max().unwrap() - 1;
    let pure = kept.iter().all(|f| f.len() == dimension + 1);
    let mut f_vector = vec![0usize; dimension + 2];
    for face in &faces {
        f_vector[face.len()] += 1;
    }
    Ok(SimplicialComplex {
        vertex_count,
        facets: kept,
        faces,
        f_vector,
        dimension,
        pure,
        warnings,
    })
}

/// JSON input schema: `{"vertices": m, "facets": [[1,2,3], ...]}`.
#[derive(Debug, Deserialize)]
pub struct ComplexInput {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let input: ComplexInput = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        message: e.to_string(),
    })?;
    face_complex(input.facets, input.vertices)
}

fn require_pure(cx: &SimplicialComplex, k: u32) -> Result<()> {
    if !cx.is_pure() || cx.dimension() != k as usize {
        return Err(Error::contract(format!(
            "the complex must be pure of dimension {k} (every facet a {}-set)",
            k + 1
        )));
    }
    if k == 0 {
        return Err(Error::contract("the order k must be at least 1"));
    }
    Ok(())
}

fn face_monomial(split: &VariableSplit, face: &Face) -> Monomial {
    let mut exps = vec![0u32; split.total()];
    for &v in face {
        exps[split.u_var(v)] = 1;
    }
    Monomial::new(split, exps).unwrap()
}

/// One x-variable per facet in facet-list order; g_r is the square-free
/// monomial of facet r. The socle bidegree is (k, k+1).
pub fn complex_to_form(cx: &SimplicialComplex, k: u32) -> Result<NagataForm> {
    require_pure(cx, k)?;
    let split = VariableSplit::new(cx.facets().len(), cx.vertex_count())?;
    let gs: Vec<Polynomial> = cx
        .facets()
        .iter()
        .map(|facet| Polynomial::monomial(split, face_monomial(&split, facet), rat(1)))
        .collect();
    build_nagata(k, gs)
}

/// Predicted bigraded dimension table and Hilbert vector.
#[derive(Debug, Clone, Serialize)]
pub struct Thm37Prediction {
    pub order: u32,
    /// entries (i, j, dim) for 0 <= i <= k, 0 <= j <= k+1, lex sorted
    pub bigraded: Vec<(u32, u32, usize)>,
    pub h: Vec<usize>,
}

impl Thm37Prediction {
    pub fn bigraded_dim(&self, i: u32, j: u32) -> Option<usize> {
        self.bigraded
            .iter()
            .find(|&&(a, b, _)| a == i && b == j)
            .map(|&(_, _, d)| d)
    }
}

fn f_at(cx: &SimplicialComplex, j: usize) -> usize {
    cx.f_vector().get(j).copied().unwrap_or(0)
}

fn predicted_dim(cx: &SimplicialComplex, k: u32, i: u32, j: u32) -> usize {
    let n_plus_1 = cx.facets().len();
    if i == 0 && j == 0 {
        1
    } else if i == 0 {
        f_at(cx, j as usize)
    } else if j == 0 {
        // by Gorenstein duality with the (k - i, k + 1) piece
        predicted_dim(cx, k, k - i, k + 1)
    } else if i == k {
        f_at(cx, (k + 1 - j) as usize)
    } else {
        // 1 <= i < k: purity makes every facet a k-simplex with
        // binom(k+1, j) subfaces of dimension j-1
        n_plus_1 * binomial(k as usize + 1, j as usize)
    }
}

pub fn predict_hilbert(cx: &SimplicialComplex, k: u32) -> Result<Thm37Prediction> {
    require_pure(cx, k)?;
    let d = 2 * k + 1;
    let mut bigraded = Vec::new();
    let mut h = vec![0usize; d as usize + 1];
    for i in 0..=k {
        for j in 0..=k + 1 {
            let dim = predicted_dim(cx, k, i, j);
            bigraded.push((i, j, dim));
            h[(i + j) as usize] += dim;
        }
    }
    Ok(Thm37Prediction {
        order: k,
        bigraded,
        h,
    })
}

/// The four predicted generator families of the annihilator.
#[derive(Debug, Clone)]
pub struct GeneratorFamilies {
    /// (a) <X0..Xn>^{k+1} and U_1^2..U_m^2
    pub power: Vec<Polynomial>,
    /// (b) monomials of the minimal non-faces of the complement
    pub nonfaces: Vec<Polynomial>,
    /// (c) X_r^i P_r for faces P_r outside the facet M_r
    pub mixed: Vec<Polynomial>,
    /// (d) X_r^k G~_r - X_s^k G~_s over shared subfaces
    pub binomials: Vec<Polynomial>,
    /// X_r X_s for r < s (k >= 2 only). Every term of f involves a
    /// single x-variable, so any cross derivative in two of them kills
    /// f; these account for the x-only bidegrees (i, 0) with
    /// 2 <= i <= k, which the closed-form list does not reach.
    pub cross: Vec<Polynomial>,
}

impl GeneratorFamilies {
    pub fn all(&self) -> impl Iterator<Item = (&'static str, &Polynomial)> {
        self.power
            .iter()
            .map(|g| ("power", g))
            .chain(self.nonfaces.iter().map(|g| ("nonface", g)))
            .chain(self.mixed.iter().map(|g| ("mixed", g)))
            .chain(self.binomials.iter().map(|g| ("binomial", g)))
            .chain(self.cross.iter().map(|g| ("cross", g)))
    }
}

/// Emit the generator families of the structure theorem. Family (c) uses
/// the broader set admitted by the proof: subsets that are non-faces, or
/// faces disjoint from the fixed facet.
pub fn predict_generators(cx: &SimplicialComplex, k: u32) -> Result<GeneratorFamilies> {
    require_pure(cx, k)?;
    let split = VariableSplit::new(cx.facets().len(), cx.vertex_count())?;
    let m = cx.vertex_count();

    let mut power = Vec::new();
    for mono in monomial_basis(&split, k + 1, 0) {
        power.push(Polynomial::monomial(split, mono, rat(1)));
    }
    for t in 1..=m {
        let mut exps = vec![0u32; split.total()];
        exps[split.u_var(t)] = 2;
        power.push(Polynomial::monomial(
            split,
            Monomial::new(&split, exps).unwrap(),
            rat(1),
        ));
    }

    let nonfaces: Vec<Polynomial> = cx
        .minimal_nonfaces()
        .iter()
        .map(|face| Polynomial::monomial(split, face_monomial(&split, face), rat(1)))
        .collect();

    let mut mixed = Vec::new();
    for (r, facet) in cx.facets().iter().enumerate() {
        for mask in 1u64..(1 << m) {
            let subset: Face = (0..m)
                .filter(|v| mask & (1 << v) != 0)
                .map(|v| v + 1)
                .collect();
            if subset.len() > k as usize + 1 {
                continue;
            }
            let qualifies = if cx.is_face(&subset) {
                subset.is_disjoint(facet)
            } else {
                true
            };
            if !qualifies {
                continue;
            }
            for i in 1..=k {
                let mut exps = vec![0u32; split.total()];
                exps[r] = i;
                for &v in &subset {
                    exps[split.u_var(v)] = 1;
                }
                mixed.push(Polynomial::monomial(
                    split,
                    Monomial::new(&split, exps).unwrap(),
                    rat(1),
                ));
            }
        }
    }

    let mut binomials = Vec::new();
    for r in 0..cx.facets().len() {
        for s in r + 1..cx.facets().len() {
            let shared: Face = cx.facets()[r]
                .intersection(&cx.facets()[s])
                .copied()
                .collect();
            if shared.is_empty() {
                continue;
            }
            let verts: Vec<usize> = shared.iter().copied().collect();
            for mask in 1u64..(1 << verts.len()) {
                let common: Face = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                let tilde_r: Face = cx.facets()[r].difference(&common).copied().collect();
                let tilde_s: Face = cx.facets()[s].difference(&common).copied().collect();
                let mut exps_r = vec![0u32; split.total()];
                exps_r[r] = k;
                for &v in &tilde_r {
                    exps_r[split.u_var(v)] = 1;
                }
                let mut exps_s = vec![0u32; split.total()];
                exps_s[s] = k;
                for &v in &tilde_s {
                    exps_s[split.u_var(v)] = 1;
                }
                let mut b = Polynomial::monomial(split, Monomial::new(&split, exps_r).unwrap(), rat(1));
                b.add_term(Monomial::new(&split, exps_s).unwrap(), rat(-1));
                binomials.push(b);
            }
        }
    }

    let mut cross = Vec::new();
    if k >= 2 {
        for r in 0..cx.facets().len() {
            for s in r + 1..cx.facets().len() {
                let mut exps = vec![0u32; split.total()];
                exps[r] = 1;
                exps[s] = 1;
                cross.push(Polynomial::monomial(
                    split,
                    Monomial::new(&split, exps).unwrap(),
                    rat(1),
                ));
            }
        }
    }

    Ok(GeneratorFamilies {
        power,
        nonfaces,
        mixed,
        binomials,
        cross,
    })
}

/// Divisibility by some monomial generator of the predicted families,
/// for monomials with x-degree <= k and u-degree <= k+1. Equivalent to
/// testing each monomial generator in turn: U_t^2 divides iff some
/// u-exponent is >= 2; a minimal nonface divides iff the u-support is
/// not a face; a cross quadratic X_r X_s divides iff two x-variables
/// occur (k >= 2); some X_r^i P_r divides iff x_r occurs together with
/// a supported vertex outside M_r (P_r can then be that single vertex).
fn monomial_in_ideal(
    cx: &SimplicialComplex,
    k: u32,
    split: &VariableSplit,
    mono: &Monomial,
) -> bool {
    let u_exps = &mono.exps()[split.x_count()..];
    if u_exps.iter().any(|&e| e >= 2) {
        return true;
    }
    let support: Face = u_exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(idx, _)| idx + 1)
        .collect();
    if !support.is_empty() && !cx.is_face(&support) {
        return true;
    }
    let x_vars: Vec<usize> = (0..split.x_count())
        .filter(|&r| mono.exp(r) > 0)
        .collect();
    if k >= 2 && x_vars.len() >= 2 {
        return true;
    }
    x_vars
        .iter()
        .any(|&r| support.iter().any(|v| !cx.facets()[r].contains(v)))
}

#[derive(Debug, Clone, Serialize)]
pub struct DimCheck {
    pub i: u32,
    pub j: u32,
    pub predicted: usize,
    pub computed: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenCheck {
    pub family: String,
    pub generator: String,
    pub annihilates: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealCheck {
    pub degree: u32,
    pub ideal_dim: usize,
    pub annihilator_dim: usize,
    pub pass: bool,
}

/// Itemized cross-validation of the predictions against the exact
/// catalecticant computations. Discrepancies are itemized, not fatal.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub order: u32,
    pub dimension_checks: Vec<DimCheck>,
    pub generator_checks: Vec<GenCheck>,
    pub ideal_checks: Vec<IdealCheck>,
    pub note: Option<String>,
    pub pass: bool,
}

/// Assemble f, compute its Hilbert data, and verify (i) the predicted
/// bigraded dimensions, (ii) that every predicted generator annihilates
/// f, (iii) that the predicted families generate the annihilator in
/// every degree up to d + 1.
pub fn verify_prediction(cx: &SimplicialComplex, k: u32) -> Result<VerificationReport> {
    let form = complex_to_form(cx, k)?;
    let f = form.form();
    let split = *f.split();
    let prediction = predict_hilbert(cx, k)?;
    let families = predict_generators(cx, k)?;
    let hd = hilbert(f)?;
    let d = 2 * k + 1;

    let mut dimension_checks = Vec::new();
    for &(i, j, predicted) in &prediction.bigraded {
        let computed = hd.bigraded_dim(i, j).unwrap_or(0);
        dimension_checks.push(DimCheck {
            i,
            j,
            predicted,
            computed,
            pass: predicted == computed,
        });
    }

    let mut generator_checks = Vec::new();
    for (family, gen) in families.all() {
        let annihilates = gen.apply(f)?.is_zero();
        generator_checks.push(GenCheck {
            family: family.to_string(),
            generator: gen.render(true),
            annihilates,
        });
    }

    // group the binomial generators by bidegree for the blockwise span
    // computation; monomial generators are handled by divisibility below
    let mut by_bidegree: HashMap<(u32, u32), Vec<&Polynomial>> = HashMap::new();
    for gen in &families.binomials {
        let bd = gen.bidegree().expect("generators are bihomogeneous");
        by_bidegree.entry(bd).or_default().push(gen);
    }

    let mut ideal_checks = Vec::new();
    for degree in 1..=d + 1 {
        let mut ideal_dim = 0usize;
        let mut ann_dim = 0usize;
        for i in (0..=degree).rev() {
            let j = degree - i;
            let q_dim = basis_dim(&split, i, j);
            if q_dim == 0 {
                continue;
            }
            if i > k || j > k + 1 {
                // beyond the socle bidegree the annihilator is everything;
                // x-degree >= k+1 monomials are multiples of family (a),
                // u-degree >= k+2 monomials have a square or a non-face
                // support (the complex has dimension k), so the families
                // cover the whole block
                ideal_dim += q_dim;
                ann_dim += q_dim;
                continue;
            }
            let a_dim = hd.bigraded_dim(k - i, k + 1 - j).unwrap_or(0);
            let target = q_dim - a_dim;
            ann_dim += target;
            let basis = monomial_basis(&split, i, j);
            let index: HashMap<Monomial, usize> = basis
                .iter()
                .enumerate()
                .map(|(idx, mo)| (mo.clone(), idx))
                .collect();
            // monomials divisible by a monomial generator enter the span
            // directly; the divisibility conditions below factor the
            // monomial families: U_t^2, minimal nonfaces (a support not
            // in the complex contains one), the cross quadratics, and
            // X_r^i P_r (a qualifying P_r <= the u-support exists iff
            // some supported vertex lies outside M_r)
            let mut span = RowSpace::new();
            for (idx, mono) in basis.iter().enumerate() {
                if monomial_in_ideal(cx, k, &split, mono) {
                    span.insert(SparseVec::unit(idx));
                }
            }
            'block: for (&(a, b), gens) in by_bidegree.iter() {
                if span.dim() == target {
                    break;
                }
                if a > i || b > j {
                    continue;
                }
                for shift in monomial_basis(&split, i - a, j - b) {
                    for gen in gens {
                        let prod = gen.mul_monomial(&shift);
                        let mut v = SparseVec::new();
                        for (mo, c) in prod.terms() {
                            v.set(index[mo], c.clone());
                        }
                        span.insert(v);
                        if span.dim() == target {
                            break 'block;
                        }
                    }
                }
            }
            ideal_dim += span.dim();
        }
        ideal_checks.push(IdealCheck {
            degree,
            ideal_dim,
            annihilator_dim: ann_dim,
            pass: ideal_dim == ann_dim,
        });
    }

    let note = if families.nonfaces.is_empty() {
        Some("the complement of the complex is empty: family (b) is empty".to_string())
    } else {
        None
    };
    let pass = dimension_checks.iter().all(|c| c.pass)
        && generator_checks.iter().all(|c| c.annihilates)
        && ideal_checks.iter().all(|c| c.pass);
    Ok(VerificationReport {
        order: k,
        dimension_checks,
        generator_checks,
        ideal_checks,
        note,
        pass,
    })
}
