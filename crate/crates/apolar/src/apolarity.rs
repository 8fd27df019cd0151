//! Catalecticant maps, annihilator ideals, Hilbert data and coset bases
//! for the Artinian Gorenstein algebra A = Q/Ann(f).

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ColumnEchelon, RowSpace, SparseVec};
use crate::ring::{
    basis_dim, graded_basis, monomial_basis, term_cmp, DiffOperator, Monomial, Polynomial, Rat,
    VariableSplit,
};

/// The evaluation map Q_(i,j) -> R_(d1-i, d2-j) (or Q_k -> R_{d-k}),
/// alpha |-> alpha(f), as an exact matrix over fixed monomial bases.
pub struct CatalecticantMap {
    source_basis: Vec<Monomial>,
    target_basis: Vec<Monomial>,
    columns: Vec<SparseVec>,
    echelon: ColumnEchelon,
    kernel: Vec<SparseVec>,
    split: VariableSplit,
}

impl CatalecticantMap {
    fn build(f: &Polynomial, source_basis: Vec<Monomial>, target_basis: Vec<Monomial>) -> Self {
        let split = *f.split();
        let target_index: HashMap<&Monomial, usize> = target_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut columns = Vec::with_capacity(source_basis.len());
        let mut echelon = ColumnEchelon::new();
        let mut kernel = Vec::new();
        for (c, mono) in source_basis.iter().enumerate() {
            let op = Polynomial::monomial(split, mono.clone(), Rat::from_integer(1.into()));
            let image = op.apply(f).expect("same split");
            let col: SparseVec = image
                .terms()
                .map(|(m, v)| {
                    let row = *target_index
                        .get(m)
                        .expect("image term lies in the target basis");
                    (row, v.clone())
                })
                .collect();
            columns.push(col.clone());
            if let Some(k) = echelon.push_column(c, col) {
                kernel.push(k);
            }
        }
        CatalecticantMap {
            source_basis,
            target_basis,
            columns,
            echelon,
            kernel,
            split,
        }
    }

    pub fn source_basis(&self) -> &[Monomial] {
        &self.source_basis
    }

    pub fn target_basis(&self) -> &[Monomial] {
        &self.target_basis
    }

    /// Matrix entry (row, col).
    pub fn entry(&self, row: usize, col: usize) -> Rat {
        self.columns[col].get(row)
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }

    /// Kernel vectors as coordinate combinations over the source basis.
    pub fn kernel_vectors(&self) -> &[SparseVec] {
        &self.kernel
    }

    /// Kernel vectors as polynomials in the dual variables, leading
    /// coefficient 1.
    pub fn kernel_polynomials(&self) -> Vec<Polynomial> {
        self.kernel
            .iter()
            .map(|k| self.vector_to_polynomial(k).monic())
            .collect()
    }

    pub fn vector_to_polynomial(&self, v: &SparseVec) -> Polynomial {
        let mut p = Polynomial::zero(self.split);
        for (idx, c) in v.iter() {
            p.add_term(self.source_basis[*idx].clone(), c.clone());
        }
        p
    }

    /// Column-pivot monomials: a deterministic coset basis of the image.
    pub fn pivot_monomials(&self) -> Vec<Monomial> {
        self.echelon
            .pivot_cols()
            .iter()
            .map(|&c| self.source_basis[c].clone())
            .collect()
    }

    /// Express a target-space polynomial in the images of the pivot
    /// monomials; coordinates indexed by pivot position.
    pub fn solve_in_image(&self, w: &Polynomial) -> Option<Vec<Rat>> {
        let target_index: HashMap<&Monomial, usize> = self
            .target_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut v = SparseVec::new();
        for (m, c) in w.terms() {
            let row = *target_index.get(m)?;
            v.set(row, c.clone());
        }
        let sol = self.echelon.solve(&v)?;
        let pos: HashMap<usize, usize> = self
            .echelon
            .pivot_cols()
            .iter()
            .enumerate()
            .map(|(p, &c)| (c, p))
            .collect();
        let mut out = vec![Rat::from_integer(0.into()); self.echelon.pivot_cols().len()];
        for (col, c) in sol.iter() {
            let p = *pos.get(col)?;
            out[p] = c.clone();
        }
        Some(out)
    }
}

/// Bigraded catalecticant at bidegree `(i, j)`; requires bihomogeneous f
/// with i <= d1, j <= d2.
pub fn catalecticant_bigraded(f: &Polynomial, i: u32, j: u32) -> Result<CatalecticantMap> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (d1, d2) = f.bidegree().ok_or(Error::NotBihomogeneous)?;
    if i > d1 || j > d2 {
        return Err(Error::contract(format!(
            "bidegree ({i},{j}) exceeds the socle bidegree ({d1},{d2})"
        )));
    }
    Ok(catalecticant_bigraded_unchecked(f, i, j, d1, d2))
}

fn catalecticant_bigraded_unchecked(
    f: &Polynomial,
    i: u32,
    j: u32,
    d1: u32,
    d2: u32,
) -> CatalecticantMap {
    let split = f.split();
    let source = monomial_basis(split, i, j);
    let target = if i <= d1 && j <= d2 {
        monomial_basis(split, d1 - i, d2 - j)
    } else {
        Vec::new()
    };
    CatalecticantMap::build(f, source, target)
}

/// Single-graded catalecticant at degree `k`, stacking all bidegrees
/// with i + j = k; requires homogeneous nonzero f.
pub fn catalecticant(f: &Polynomial, k: u32) -> Result<CatalecticantMap> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    let split = f.split();
    let source = graded_basis(split, k);
    let target = if k <= d {
        graded_basis(split, d - k)
    } else {
        Vec::new()
    };
    Ok(CatalecticantMap::build(f, source, target))
}

/// True iff op(f) = 0; works for non-homogeneous op by linearity.
pub fn is_annihilated(f: &Polynomial, op: &DiffOperator) -> Result<bool> {
    Ok(op.apply(f)?.is_zero())
}

/// Hilbert vector and, for bihomogeneous f, the bigraded dimension table.
#[derive(Debug, Clone, Serialize)]
pub struct HilbertData {
    pub socle_degree: u32,
    pub h: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bigraded: Option<Vec<(u32, u32, usize)>>,
}

impl HilbertData {
    pub fn bigraded_dim(&self, i: u32, j: u32) -> Option<usize> {
        self.bigraded
            .as_ref()?
            .iter()
            .find(|&&(a, b, _)| a == i && b == j)
            .map(|&(_, _, d)| d)
    }
}

/// h_k = rank of the degree-k catalecticant; bigraded entries are ranks
/// of the bigraded catalecticants (present iff f is bihomogeneous).
pub fn hilbert(f: &Polynomial) -> Result<HilbertData> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    if let Some((d1, d2)) = f.bidegree() {
        let mut table = Vec::new();
        let mut h = vec![0usize; d as usize + 1];
        for i in 0..=d1 {
            for j in 0..=d2 {
                let r = catalecticant_bigraded_unchecked(f, i, j, d1, d2).rank();
                table.push((i, j, r));
                h[(i + j) as usize] += r;
            }
        }
        table.sort();
        Ok(HilbertData {
            socle_degree: d,
            h,
            bigraded: Some(table),
        })
    } else {
        let mut h = Vec::with_capacity(d as usize + 1);
        for k in 0..=d {
            h.push(catalecticant(f, k)?.rank());
        }
        Ok(HilbertData {
            socle_degree: d,
            h,
            bigraded: None,
        })
    }
}

/// A deterministic monomial basis of A_k: the column-pivot monomials of
/// the degree-k catalecticant under the fixed order.
pub fn coset_basis(f: &Polynomial, k: u32) -> Result<Vec<Monomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    if k > d {
        return Err(Error::contract(format!(
            "degree {k} exceeds the socle degree {d}"
        )));
    }
    if let Some((d1, d2)) = f.bidegree() {
        // bidegree blocks are independent, so blockwise pivots agree with
        // the stacked matrix processed in basis order
        let mut out = Vec::new();
        for i in (0..=k).rev() {
            let j = k - i;
            if i > d1 || j > d2 {
                continue;
            }
            out.extend(
                catalecticant_bigraded_unchecked(f, i, j, d1, d2)
                    .pivot_monomials(),
            );
        }
        Ok(out)
    } else {
        Ok(catalecticant(f, k)?.pivot_monomials())
    }
}

/// One graded piece of the annihilator ideal.
struct DegreeComponent {
    dim: usize,
    /// kernel basis elements actually computed (monic polynomials)
    elements: Vec<Polynomial>,
    /// bidegree blocks where I = Q entirely; kept symbolic, not expanded
    full_blocks: Vec<(u32, u32)>,
}

/// Ann(f) stored degree-by-degree with a distinguished set of minimal
/// generators.
pub struct GradedIdeal {
    f: Polynomial,
    socle_degree: u32,
    components: Vec<DegreeComponent>, // index k-1 holds degree k
    minimal_generators: Vec<Polynomial>,
}

impl GradedIdeal {
    pub fn socle_degree(&self) -> u32 {
        self.socle_degree
    }

    pub fn dual_form(&self) -> &Polynomial {
        &self.f
    }

    /// dim I_k for 1 <= k <= d+1.
    pub fn dimension(&self, k: u32) -> usize {
        let split = self.f.split();
        let comp = &self.components[k as usize - 1];
        let full: usize = comp
            .full_blocks
            .iter()
            .map(|&(i, j)| basis_dim(split, i, j))
            .sum();
        comp.dim + full
    }

    /// The computed kernel elements of degree k (excludes full blocks,
    /// which are spanned by every monomial of their bidegree).
    pub fn elements(&self, k: u32) -> &[Polynomial] {
        &self.components[k as usize - 1].elements
    }

    pub fn full_blocks(&self, k: u32) -> &[(u32, u32)] {
        &self.components[k as usize - 1].full_blocks
    }

    pub fn minimal_generators(&self) -> &[Polynomial] {
        &self.minimal_generators
    }

    /// Ideal membership: a homogeneous operator lies in Ann(f) iff it
    /// annihilates f.
    pub fn contains(&self, op: &DiffOperator) -> Result<bool> {
        is_annihilated(&self.f, op)
    }

    /// Generator strings in the dual-variable text grammar.
    pub fn generators_report(&self) -> Vec<String> {
        self.minimal_generators
            .iter()
            .map(|g| g.render(true))
            .collect()
    }
}

fn coords_in(basis_index: &HashMap<Monomial, usize>, p: &Polynomial) -> Option<SparseVec> {
    let mut v = SparseVec::new();
    for (m, c) in p.terms() {
        v.set(*basis_index.get(m)?, c.clone());
    }
    Some(v)
}

/// Candidate order for minimal generators: fewest nonzero terms first,
/// ties broken by leading monomial (greater first).
fn sort_candidates(split: &VariableSplit, cands: &mut [Polynomial]) {
    cands.sort_by(|a, b| {
        a.num_terms().cmp(&b.num_terms()).then_with(|| {
            let la = a.leading().expect("nonzero").0;
            let lb = b.leading().expect("nonzero").0;
            term_cmp(split, lb, la)
        })
    });
}

/// Kernel bases of the catalecticants in every degree 1..d+1 and minimal
/// generators extracted degree-by-degree as a complement of
/// span(Q_1 * I_{k-1}) inside I_k.
pub fn annihilator(f: &Polynomial) -> Result<GradedIdeal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.degree().ok_or(Error::NotHomogeneous)?;
    if f.bidegree().is_some() {
        annihilator_bigraded(f, d)
    } else {
        annihilator_graded(f, d)
    }
}

fn annihilator_graded(f: &Polynomial, d: u32) -> Result<GradedIdeal> {
    let split = *f.split();
    let mut components = Vec::new();
    let mut minimal = Vec::new();
    let mut prev_kernel: Vec<Polynomial> = Vec::new();
    for k in 1..=d + 1 {
        let cat = catalecticant(f, k)?;
        let kernel = cat.kernel_polynomials();
        let basis = graded_basis(&split, k);
        let index: HashMap<Monomial, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut span = RowSpace::new();
        'outer: for g in &prev_kernel {
            for var in 0..split.total() {
                let prod = g.mul(&Polynomial::variable(split, var))?;
                span.insert(coords_in(&index, &prod).expect("degree-k product"));
                if span.dim() == kernel.len() {
                    break 'outer;
                }
            }
        }
        let mut cands = kernel.clone();
        sort_candidates(&split, &mut cands);
        for cand in cands {
            let v = coords_in(&index, &cand).expect("kernel vector");
            if span.insert(v) {
                minimal.push(cand);
            }
        }
        components.push(DegreeComponent {
            dim: kernel.len(),
            elements: kernel,
            full_blocks: Vec::new(),
        });
        prev_kernel = components.last().unwrap().elements.clone();
    }
    Ok(GradedIdeal {
        f: f.clone(),
        socle_degree: d,
        components,
        minimal_generators: minimal,
    })
}

fn annihilator_bigraded(f: &Polynomial, d: u32) -> Result<GradedIdeal> {
    let split = *f.split();
    let (d1, d2) = f.bidegree().expect("bihomogeneous");
    // Minimal generators can only occur in bidegrees (i, j) with
    // i <= d1, j <= d2, plus (d1+1, 0) and (0, d2+1): any block with
    // i >= d1+2 or j >= d2+2, or mixed beyond the socle bidegree, is a
    // variable shift of an already-full block.
    let mut kernels: HashMap<(u32, u32), Vec<Polynomial>> = HashMap::new();
    let mut minimal = Vec::new();
    let mut components = Vec::new();
    for k in 1..=d + 1 {
        let mut elements = Vec::new();
        let mut full_blocks = Vec::new();
        let mut dim = 0usize;
        for i in (0..=k).rev() {
            let j = k - i;
            let special = (i == d1 + 1 && j == 0) || (i == 0 && j == d2 + 1);
            let interior = i <= d1 && j <= d2;
            if !interior && !special {
                if basis_dim(&split, i, j) > 0 {
                    full_blocks.push((i, j));
                }
                continue;
            }
            let basis = monomial_basis(&split, i, j);
            if basis.is_empty() {
                continue;
            }
            let kernel: Vec<Polynomial> = if special {
                basis
                    .iter()
                    .map(|m| {
                        Polynomial::monomial(split, m.clone(), Rat::from_integer(1.into()))
                    })
                    .collect()
            } else {
                catalecticant_bigraded_unchecked(f, i, j, d1, d2).kernel_polynomials()
            };
            let index: HashMap<Monomial, usize> = basis
                .iter()
                .enumerate()
                .map(|(idx, m)| (m.clone(), idx))
                .collect();
            let mut span = RowSpace::new();
            let mut product_sources: Vec<(Vec<Polynomial>, Vec<usize>)> = Vec::new();
            if i >= 1 {
                if let Some(prev) = kernels.get(&(i - 1, j)) {
                    product_sources
                        .push((prev.clone(), (0..split.x_count()).collect()));
                }
            }
            if j >= 1 {
                if let Some(prev) = kernels.get(&(i, j - 1)) {
                    product_sources.push((
                        prev.clone(),
                        (split.x_count()..split.total()).collect(),
                    ));
                }
            }
            'outer: for (prev, vars) in &product_sources {
                for g in prev {
                    for &var in vars {
                        let prod = g.mul(&Polynomial::variable(split, var))?;
                        span.insert(coords_in(&index, &prod).expect("block product"));
                        if span.dim() == kernel.len() {
                            break 'outer;
                        }
                    }
                }
            }
            let mut cands = kernel.clone();
            sort_candidates(&split, &mut cands);
            for cand in cands {
                let v = coords_in(&index, &cand).expect("kernel vector");
                if span.insert(v) {
                    minimal.push(cand);
                }
            }
            dim += kernel.len();
            if special {
                // materialized above; do not double-count as a full block
            }
            elements.extend(kernel.clone());
            kernels.insert((i, j), kernel);
        }
        components.push(DegreeComponent {
            dim,
            elements,
            full_blocks,
        });
    }
    Ok(GradedIdeal {
        f: f.clone(),
        socle_degree: d,
        components,
        minimal_generators: minimal,
    })
}

/// dim Q_k over the declared split.
pub fn ambient_dim(split: &VariableSplit, k: u32) -> usize {
    (0..=k).map(|i| basis_dim(split, i, k - i)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn split(x: usize, u: usize) -> VariableSplit {
        VariableSplit::new(x, u).unwrap()
    }

    #[test]
    fn single_monomial_chain() {
        let s = split(1, 0);
        let f = parse_polynomial("x0^5", &s).unwrap();
        let cat = catalecticant(&f, 2).unwrap();
        assert_eq!(cat.source_basis().len(), 1);
        assert_eq!(cat.rank(), 1);
        let hd = hilbert(&f).unwrap();
        assert_eq!(hd.h, vec![1, 1, 1, 1, 1, 1]);
        let cb = coset_basis(&f, 3).unwrap();
        assert_eq!(cb.len(), 1);
        assert_eq!(cb[0].degree(), 3);
    }

    #[test]
    fn example_2_4_hilbert() {
        // f = x^2 u^3 + y^2 v^3 with x,y as x-block and u,v as u-block
        let s = split(2, 2);
        let f = parse_polynomial("x0^2*u1^3 + x1^2*u2^3", &s).unwrap();
        let hd = hilbert(&f).unwrap();
        assert_eq!(hd.h, vec![1, 4, 6, 6, 4, 1]);
        assert_eq!(catalecticant(&f, 1).unwrap().rank(), 4);
        let cb1 = coset_basis(&f, 1).unwrap();
        assert_eq!(cb1.len(), 4);
    }

    #[test]
    fn bigraded_identity_pattern() {
        let s = split(2, 2);
        let f = parse_polynomial("x0*u1 + x1*u2", &s).unwrap();
        let cat = catalecticant_bigraded(&f, 1, 0).unwrap();
        assert_eq!(cat.source_basis().len(), 2);
        assert_eq!(cat.rank(), 2);
    }

    #[test]
    fn annihilator_of_x0x1() {
        let s = split(2, 0);
        let f = parse_polynomial("x0*x1", &s).unwrap();
        let ideal = annihilator(&f).unwrap();
        let gens = ideal.generators_report();
        assert!(gens.contains(&"X0^2".to_string()), "gens: {gens:?}");
        assert!(gens.contains(&"X1^2".to_string()), "gens: {gens:?}");
        let deg2: Vec<_> = ideal
            .minimal_generators()
            .iter()
            .filter(|g| g.degree() == Some(2))
            .collect();
        assert_eq!(deg2.len(), 2);
        let cb = coset_basis(&f, 1).unwrap();
        assert_eq!(cb.len(), 2);
    }

    #[test]
    fn zero_polynomial_rejected() {
        let s = split(2, 0);
        let z = Polynomial::zero(s);
        assert!(matches!(annihilator(&z), Err(Error::ZeroPolynomial)));
        assert!(matches!(hilbert(&z), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn non_bihomogeneous_bigraded_rejected() {
        let s = split(2, 1);
        let f = parse_polynomial("x0^2 + x1*u1", &s).unwrap();
        assert!(matches!(
            catalecticant_bigraded(&f, 1, 0),
            Err(Error::NotBihomogeneous)
        ));
    }

    #[test]
    fn duality_and_exactness_small() {
        let s = split(2, 2);
        let f = parse_polynomial("x0^2*u1^3 + x1^2*u2^3", &s).unwrap();
        let (d1, d2) = f.bidegree().unwrap();
        let hd = hilbert(&f).unwrap();
        let d = hd.socle_degree as usize;
        for k in 0..=d {
            assert_eq!(hd.h[k], hd.h[d - k]);
        }
        for i in 0..=d1 {
            for j in 0..=d2 {
                let cat = catalecticant_bigraded(&f, i, j).unwrap();
                assert_eq!(
                    cat.kernel_dim() + hd.bigraded_dim(d1 - i, d2 - j).unwrap(),
                    basis_dim(&s, i, j)
                );
            }
        }
    }

    #[test]
    fn minimal_generators_regenerate_small() {
        let s = split(2, 1);
        let f = parse_polynomial("x0^2*u1 + x1^2*u1", &s).unwrap();
        let ideal = annihilator(&f).unwrap();
        // regenerate degree-by-degree from the minimal generators
        let d = ideal.socle_degree();
        let split = *f.split();
        for k in 1..=d + 1 {
            let basis = graded_basis(&split, k);
            let index: HashMap<Monomial, usize> = basis
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            let mut span = RowSpace::new();
            for g in ideal.minimal_generators() {
                let gd = g.degree().unwrap();
                if gd > k {
                    continue;
                }
                for shift in graded_basis(&split, k - gd) {
                    let prod = g.mul_monomial(&shift);
                    span.insert(coords_in(&index, &prod).unwrap());
                }
            }
            assert_eq!(span.dim(), ideal.dimension(k), "degree {k}");
        }
    }
}
