//! A computable calculus of finitely presented FI-modules (functors from
//! finite sets and injections to abelian groups), together with the
//! symplectic side used by the surface machinery.
//!
//! Pointwise values are finitely presented abelian groups; the Smith normal
//! form is the single canonical-form backend, and torsion is always reported.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freelie::FIInjection;
use crate::intmat::{self, IMat};

/// A finitely presented abelian group: ambient free rank and a relation
/// matrix whose rows are relators.
#[derive(Debug, Clone)]
pub struct AbGroupPresentation {
    pub ambient: usize,
    pub relations: IMat,
}

/// Canonical invariants of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbInvariants {
    pub free_rank: usize,
    /// Invariant factors greater than 1, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl AbInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn free(rank: usize) -> AbInvariants {
        AbInvariants { free_rank: rank, torsion: Vec::new() }
    }
}

impl std::fmt::Display for AbInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl AbGroupPresentation {
    pub fn free(rank: usize) -> AbGroupPresentation {
        AbGroupPresentation { ambient: rank, relations: IMat::zero(0, rank) }
    }

    pub fn invariants(&self) -> AbInvariants {
        let diag = intmat::smith_diagonal(&self.relations);
        AbInvariants {
            free_rank: self.ambient - diag.len(),
            torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants().is_trivial()
    }
}

/// A term of an FI-module relation: `coeff` times the image of generator
/// `gen` under the injection `inj` into the relation degree.
#[derive(Debug, Clone)]
pub struct RelationTerm {
    pub gen: usize,
    pub inj: FIInjection,
    pub coeff: BigInt,
}

/// A relation at a fixed degree.
#[derive(Debug, Clone)]
pub struct Relation {
    pub degree: usize,
    pub terms: Vec<RelationTerm>,
}

/// A finitely presented FI-module: a cokernel of a map of free FI-modules,
/// recorded as generator degrees plus relations at their native degrees.
/// Relations are pushed forward on demand when a degree is evaluated.
#[derive(Debug, Clone)]
pub struct FIPresentation {
    pub generators: Vec<usize>,
    pub relations: Vec<Relation>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    gen: usize,
    inj: Vec<usize>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    degree: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<usize>,
    relations: Vec<RelationJson>,
}

impl FIPresentation {
    /// The zero module.
    pub fn zero() -> FIPresentation {
        FIPresentation { generators: vec![], relations: vec![] }
    }

    /// The principal projective generated in one degree.
    pub fn principal(n: usize) -> FIPresentation {
        FIPresentation { generators: vec![n], relations: vec![] }
    }

    pub fn validate(&self) -> Result<()> {
        for r in &self.relations {
            for t in &r.terms {
                let n = *self
                    .generators
                    .get(t.gen)
                    .ok_or_else(|| Error::Invalid(format!("relation names generator {}", t.gen)))?;
                if t.inj.source() != n {
                    return Err(Error::Invalid(format!(
                        "injection source {} does not match generator degree {n}",
                        t.inj.source()
                    )));
                }
                if t.inj.target() != r.degree {
                    return Err(Error::Invalid(format!(
                        "injection target {} does not match relation degree {}",
                        t.inj.target(),
                        r.degree
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn max_generator_degree(&self) -> usize {
        self.generators.iter().copied().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let p = PresentationJson {
            generators: self.generators.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationJson {
                    degree: r.degree,
                    terms: r
                        .terms
                        .iter()
                        .map(|t| TermJson {
                            gen: t.gen,
                            inj: t.inj.values().to_vec(),
                            coeff: i64::try_from(&t.coeff).expect("desk-scale coefficient"),
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_value(p).expect("serialisable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<FIPresentation> {
        let p: PresentationJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("bad FI presentation: {e}")))?;
        let relations = p
            .relations
            .into_iter()
            .map(|r| {
                let terms = r
                    .terms
                    .into_iter()
                    .map(|t| {
                        Ok(RelationTerm {
                            gen: t.gen,
                            inj: FIInjection::new(r.degree, t.inj)?,
                            coeff: BigInt::from(t.coeff),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Relation { degree: r.degree, terms })
            })
            .collect::<Result<Vec<_>>>()?;
        let out = FIPresentation { generators: p.generators, relations };
        out.validate()?;
        Ok(out)
    }

    /// Ambient basis at a degree: pairs (generator index, injection), ordered
    /// by generator then lexicographically by the injection values.
    pub fn basis_at(&self, m: usize) -> Vec<(usize, FIInjection)> {
        let mut out = Vec::new();
        for (i, &n) in self.generators.iter().enumerate() {
            for f in FIInjection::all(n, m) {
                out.push((i, f));
            }
        }
        out
    }

    fn basis_index(basis: &[(usize, FIInjection)], gen: usize, inj: &FIInjection) -> usize {
        basis
            .iter()
            .position(|(g, f)| *g == gen && f == inj)
            .expect("pushforward stays in the ambient basis")
    }

    /// The relation lattice at a degree: every relation pushed forward along
    /// every injection of its native degree, as matrix rows.
    pub fn relation_rows(&self, m: usize) -> IMat {
        let basis = self.basis_at(m);
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for r in &self.relations {
            for h in FIInjection::all(r.degree, m) {
                let mut v = vec![BigInt::zero(); basis.len()];
                for t in &r.terms {
                    let pushed = h.compose(&t.inj).expect("degrees match");
                    let idx = Self::basis_index(&basis, t.gen, &pushed);
                    v[idx] += &t.coeff;
                }
                rows.push(v);
            }
        }
        let mut out = IMat::zero(rows.len(), basis.len());
        for (i, row) in rows.into_iter().enumerate() {
            for (j, c) in row.into_iter().enumerate() {
                out[(i, j)] = c;
            }
        }
        out
    }

    /// Evaluation at a degree, as a presented abelian group.
    pub fn eval(&self, m: usize) -> AbGroupPresentation {
        AbGroupPresentation {
            ambient: self.basis_at(m).len(),
            relations: self.relation_rows(m),
        }
    }

    /// Ambient matrix of the functor applied to an injection `f : m -> m'`:
    /// post-composition on the injection part of each basis element.
    pub fn arrow_matrix(&self, f: &FIInjection, m: usize) -> IMat {
        assert_eq!(f.source(), m);
        let src = self.basis_at(m);
        let dst = self.basis_at(f.target());
        let mut out = IMat::zero(dst.len(), src.len());
        for (j, (g, inj)) in src.iter().enumerate() {
            let pushed = f.compose(inj).expect("degrees match");
            let i = Self::basis_index(&dst, *g, &pushed);
            out[(i, j)] = BigInt::one();
        }
        out
    }
}

/// The order-preserving injection `m -> m + 1` that misses the value `p`.
pub fn insertion(m: usize, p: usize) -> FIInjection {
    assert!(p >= 1 && p <= m + 1);
    FIInjection::new(m + 1, (1..=m).map(|i| if i < p { i } else { i + 1 }).collect())
        .expect("order-preserving insertion")
}

/// Principal projective evaluated at a degree: the free abelian group on all
/// injections, with the indexed basis.
pub fn pp_eval(n: usize, m: usize) -> (AbGroupPresentation, Vec<FIInjection>) {
    let basis = FIInjection::all(n, m);
    (AbGroupPresentation::free(basis.len()), basis)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// `rank P^n_m = n! C(m, n)`.
pub fn pp_rank_formula(n: usize, m: usize) -> BigInt {
    factorial(n) * binomial(m, n)
}

/// Matrix of the suspension comparison map `F_m -> F_{1+m}` (post-composition
/// with `i -> i + 1`) in the ambient presentation bases.
pub fn fi_shift_maps(fi: &FIPresentation, m: usize) -> IMat {
    fi.arrow_matrix(&insertion(m, 1), m)
}

/// Kernel and cokernel of the suspension comparison map at a degree, as
/// presented abelian groups.
pub fn fi_ker_coker(
    fi: &FIPresentation,
    m: usize,
) -> (AbGroupPresentation, AbGroupPresentation) {
    let shift = fi_shift_maps(fi, m);
    let rel_m = fi.relation_rows(m).transpose(); // columns = relators
    let rel_m1 = fi.relation_rows(m + 1).transpose();
    (
        subquotient_kernel(&shift, &rel_m, &rel_m1),
        cokernel_presentation(&shift, &rel_m1),
    )
}

/// Kernel of the induced map `Z^a/R -> Z^b/S` for an ambient matrix mapping
/// `R` into `S`, presented on a lattice basis of the preimage of `S`.
pub fn subquotient_kernel(map: &IMat, r: &IMat, s: &IMat) -> AbGroupPresentation {
    let preimage = preimage_lattice(map, s);
    let basis = intmat::column_basis(&preimage);
    let mut rows = IMat::zero(r.cols, basis.cols);
    for j in 0..r.cols {
        let coords = intmat::solve(&basis, &r.col(j)).expect("relations map into relations");
        for (i, c) in coords.into_iter().enumerate() {
            rows[(j, i)] = c;
        }
    }
    AbGroupPresentation { ambient: basis.cols, relations: rows }
}

/// Cokernel of the induced map: ambient target modulo relations plus image.
pub fn cokernel_presentation(map: &IMat, s: &IMat) -> AbGroupPresentation {
    let combined = map.hcat(s);
    AbGroupPresentation { ambient: map.rows, relations: combined.transpose() }
}

/// Generators of the lattice `{x : map(x) in colspan(s)}`.
pub fn preimage_lattice(map: &IMat, s: &IMat) -> IMat {
    // kernel of [map | s] projected to the first block
    let combined = map.hcat(s);
    let k = intmat::kernel_basis(&combined);
    IMat::from_fn(map.cols, k.cols, |i, j| k[(i, j)].clone())
}

/// Outcome of a bounded degree certification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeVerdict {
    /// All required vanishing held on the evaluated window.
    Certified,
    /// A required group failed to vanish at this evaluation slot.
    RefutedAt(usize),
    /// The window was too small to evaluate anything.
    Inconclusive,
}

/// Bounded certification that an FI-module has degree at most `d`, checked on
/// evaluation degrees up to `n_bound`.
///
/// Unrolling the recursive definition, degree `<= d` means: the suspension
/// kernel of each iterated cokernel (levels 0 through d) eventually vanishes,
/// and the (d+1)-st iterated cokernel eventually vanishes. "Eventually" is
/// interpreted on the window `[d+1, n_bound]` of evaluation slots; the result
/// is an explicitly bounded certification, never a proof for all degrees.
pub fn fi_degree_certify(fi: &FIPresentation, d: i64, n_bound: usize) -> Result<DegreeVerdict> {
    let need = (d.max(-1) + fi.max_generator_degree() as i64 + 1).max(0) as usize;
    if n_bound < need {
        return Err(Error::WindowTooSmall { need, got: n_bound });
    }
    let start = (d + 1).max(0) as usize;

    if d < 0 {
        let mut evaluated = false;
        for m in start..=n_bound {
            evaluated = true;
            if !fi.eval(m).is_trivial() {
                return Ok(DegreeVerdict::RefutedAt(m));
            }
        }
        return Ok(if evaluated { DegreeVerdict::Certified } else { DegreeVerdict::Inconclusive });
    }
    let d = d as usize;

    // Relation lattice of the level-l iterated cokernel at FI-degree j. The
    // suspension of level l is induced by the order-preserving injection
    // missing value l + 1, so passing to the next cokernel adds the image of
    // that insertion to the relations.
    let mut cache: BTreeMap<(usize, usize), IMat> = BTreeMap::new();
    fn rel_of(
        cache: &mut BTreeMap<(usize, usize), IMat>,
        fi: &FIPresentation,
        level: usize,
        j: usize,
    ) -> IMat {
        if let Some(r) = cache.get(&(level, j)) {
            return r.clone();
        }
        let out = if level == 0 {
            fi.relation_rows(j).transpose()
        } else {
            let prev = rel_of(cache, fi, level - 1, j);
            if j == 0 {
                prev
            } else {
                let ins = fi.arrow_matrix(&insertion(j - 1, level), j - 1);
                prev.hcat(&ins)
            }
        };
        cache.insert((level, j), out.clone());
        out
    }

    let mut evaluated = false;
    // the suspension kernel of each iterated cokernel must vanish
    for level in 0..=d {
        for slot in start..=n_bound {
            let j = slot + level;
            if j + 1 > n_bound {
                break;
            }
            evaluated = true;
            let r_j = rel_of(&mut cache, fi, level, j);
            let r_j1 = rel_of(&mut cache, fi, level, j + 1);
            let map = fi.arrow_matrix(&insertion(j, level + 1), j);
            let ker = subquotient_kernel(&map, &r_j, &r_j1);
            if !ker.is_trivial() {
                return Ok(DegreeVerdict::RefutedAt(slot));
            }
        }
    }
    // the (d+1)-st iterated cokernel must vanish
    for slot in start..=n_bound {
        let j = slot + d + 1;
        if j > n_bound {
            break;
        }
        evaluated = true;
        let r_j = rel_of(&mut cache, fi, d + 1, j);
        let ambient = fi.basis_at(j).len();
        let group = AbGroupPresentation { ambient, relations: r_j.transpose() };
        if !group.is_trivial() {
            return Ok(DegreeVerdict::RefutedAt(slot));
        }
    }
    Ok(if evaluated { DegreeVerdict::Certified } else { DegreeVerdict::Inconclusive })
}

/// One summand of the tensor decomposition of a product of principal
/// projectives: a subset of each side plus a matching bijection; the summand
/// is a principal projective of degree `n + m - |overlap|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSummand {
    pub n_subset: Vec<usize>,
    pub m_subset: Vec<usize>,
    /// Pairs `(j in n_subset, sigma(j) in m_subset)`.
    pub bijection: Vec<(usize, usize)>,
    pub degree: usize,
}

fn subsets(n: usize, a: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, a: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == a {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, a, &mut Vec::new(), &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Decomposition of a tensor product of principal projectives into principal
/// projectives, labelled by the overlap data.
pub fn tensor_decompose(n: usize, m: usize) -> Vec<TensorSummand> {
    let mut out = Vec::new();
    for a in 0..=n.min(m) {
        for ns in subsets(n, a) {
            for ms in subsets(m, a) {
                for perm in permutations(&ms) {
                    out.push(TensorSummand {
                        n_subset: ns.clone(),
                        m_subset: ms.clone(),
                        bijection: ns.iter().copied().zip(perm.iter().copied()).collect(),
                        degree: n + m - a,
                    });
                }
            }
        }
    }
    out
}

/// Checks the rank identity
/// `Σ_a a!(n+m-a)! C(n,a) C(m,a) C(k, n+m-a) = n! m! C(k,n) C(k,m)`
/// by exact evaluation, and that the labelled decomposition reproduces it
/// summand by summand.
pub fn tensor_rank_identity(n: usize, m: usize, k: usize) -> bool {
    let mut lhs = BigInt::zero();
    for a in 0..=n.min(m) {
        lhs += factorial(a)
            * factorial(n + m - a)
            * binomial(n, a)
            * binomial(m, a)
            * binomial(k, n + m - a);
    }
    let rhs = factorial(n) * factorial(m) * binomial(k, n) * binomial(k, m);
    let by_summands: BigInt = tensor_decompose(n, m)
        .iter()
        .map(|s| pp_rank_formula(s.degree, k))
        .sum();
    lhs == rhs && by_summands == rhs
}

/// The duplication-functor reduction: factors `f : n -> 2m` (with `m > n`)
/// as `(g ⊔ g) ∘ f'` where `g : m-1 -> m` is order-preserving missing the
/// least index `i` with both `i` and `i + m` outside the image of `f`.
pub fn dup_reduce(f: &FIInjection) -> Result<(FIInjection, FIInjection)> {
    let n = f.source();
    if f.target() % 2 != 0 {
        return Err(Error::Invalid("duplication reduction needs an even target".into()));
    }
    let m = f.target() / 2;
    if m <= n {
        return Err(Error::DuplicationBounds { n, m });
    }
    let i = (1..=m)
        .find(|&i| !f.contains(i) && !f.contains(i + m))
        .expect("pigeonhole: n < m leaves a free pair");
    let g = insertion(m - 1, i);
    let fp_values: Vec<usize> = (1..=n)
        .map(|j| {
            let v = f.value(j);
            if v < i {
                v
            } else if v < i + m {
                v - 1
            } else {
                v - 2
            }
        })
        .collect();
    let fp = FIInjection::new(2 * (m - 1), fp_values)?;
    debug_assert_eq!(g.disjoint_union(&g).compose(&fp)?, *f);
    Ok((g, fp))
}

/// The standard symplectic form matrix on the basis `a_1, b_1, ..., a_g, b_g`.
pub fn form_matrix(g: usize) -> IMat {
    let mut j = IMat::zero(2 * g, 2 * g);
    for i in 0..g {
        j[(2 * i, 2 * i + 1)] = BigInt::one();
        j[(2 * i + 1, 2 * i)] = -BigInt::one();
    }
    j
}

/// A square integer matrix preserving the standard symplectic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpMatrix {
    pub genus: usize,
    pub entries: IMat,
}

impl SpMatrix {
    pub fn new(genus: usize, entries: IMat) -> Result<SpMatrix> {
        if entries.rows != 2 * genus || entries.cols != 2 * genus {
            return Err(Error::Invalid("symplectic matrix has wrong shape".into()));
        }
        let j = form_matrix(genus);
        if entries.transpose().mul(&j).mul(&entries) != j {
            return Err(Error::NotSymplectic);
        }
        Ok(SpMatrix { genus, entries })
    }

    pub fn identity(genus: usize) -> SpMatrix {
        SpMatrix { genus, entries: IMat::identity(2 * genus) }
    }

    pub fn mul(&self, other: &SpMatrix) -> SpMatrix {
        assert_eq!(self.genus, other.genus);
        SpMatrix { genus: self.genus, entries: self.entries.mul(&other.entries) }
    }

    pub fn is_identity(&self) -> bool {
        self.entries == IMat::identity(2 * self.genus)
    }

    /// The transvection `z -> z + ω(z, v) v` along an integer vector.
    pub fn transvection(genus: usize, v: &[BigInt]) -> SpMatrix {
        let j = form_matrix(genus);
        let jv = j.mul_vec(v);
        let mut m = IMat::identity(2 * genus);
        for c in 0..2 * genus {
            // ω(e_c, v) = (J v)_c
            for r in 0..2 * genus {
                let t = &jv[c] * &v[r];
                m[(r, c)] += t;
            }
        }
        SpMatrix::new(genus, m).expect("transvections are symplectic")
    }

    /// Block extension by the identity on extra handles.
    pub fn stabilize(&self, genus: usize) -> SpMatrix {
        assert!(genus >= self.genus);
        let mut m = IMat::identity(2 * genus);
        for i in 0..2 * self.genus {
            for j in 0..2 * self.genus {
                m[(i, j)] = self.entries[(i, j)].clone();
            }
        }
        SpMatrix { genus, entries: m }
    }
}

/// A form-preserving map between symplectic lattices of possibly different
/// genus; the matrix is `2·target × 2·source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpEmbedding {
    pub source: usize,
    pub target: usize,
    pub mat: IMat,
}

impl SpEmbedding {
    pub fn new(source: usize, target: usize, mat: IMat) -> Result<SpEmbedding> {
        if mat.rows != 2 * target || mat.cols != 2 * source {
            return Err(Error::Invalid("embedding matrix has wrong shape".into()));
        }
        if mat.transpose().mul(&form_matrix(target)).mul(&mat) != form_matrix(source) {
            return Err(Error::NotFormPreserving);
        }
        Ok(SpEmbedding { source, target, mat })
    }
}

/// The functor from injections to symplectic maps: `a_i -> a_{f(i)}`,
/// `b_i -> b_{f(i)}`.
pub fn x_functor(f: &FIInjection) -> SpEmbedding {
    let n = f.source();
    let m = f.target();
    let mut mat = IMat::zero(2 * m, 2 * n);
    for i in 1..=n {
        mat[(2 * f.value(i) - 2, 2 * i - 2)] = BigInt::one();
        mat[(2 * f.value(i) - 1, 2 * i - 1)] = BigInt::one();
    }
    SpEmbedding::new(n, m, mat).expect("the functor preserves the form")
}

/// The orthogonal complement of the image of a form-preserving map, with a
/// symplectic basis (columns `a'_1, b'_1, ...`) and a verified direct-sum
/// certificate.
#[derive(Debug, Clone)]
pub struct Complement {
    pub basis: IMat,
}

/// Computes the unique symplectic complement: kernel of the pairing against
/// the image, then integer symplectic Gram-Schmidt splitting off hyperbolic
/// planes one at a time.
pub fn symplectic_complement(emb: &SpEmbedding) -> Result<Complement> {
    let jm = form_matrix(emb.target);
    // v lies in the complement iff matᵀ J v = 0
    let pairing = emb.mat.transpose().mul(&jm);
    let k = intmat::kernel_basis(&pairing);
    let c2 = 2 * (emb.target - emb.source);
    if k.cols != c2 {
        return Err(Error::NotFormPreserving);
    }
    let gram = k.transpose().mul(&jm).mul(&k);
    let t = alternating_symplectic_basis(&gram)?;
    let basis = k.mul(&t);

    if basis.transpose().mul(&jm).mul(&basis) != form_matrix(emb.target - emb.source) {
        return Err(Error::NotFormPreserving);
    }
    if !emb.mat.transpose().mul(&jm).mul(&basis).is_zero() {
        return Err(Error::NotFormPreserving);
    }
    if emb.mat.hcat(&basis).det().abs() != BigInt::one() {
        return Err(Error::NotFormPreserving);
    }
    Ok(Complement { basis })
}

/// Change of basis bringing a unimodular alternating form to the standard
/// symplectic one: returns `T` with `Tᵀ G T` the standard form.
fn alternating_symplectic_basis(g0: &IMat) -> Result<IMat> {
    let n = g0.rows;
    if n % 2 != 0 {
        return Err(Error::NotFormPreserving);
    }
    let mut g = g0.clone();
    let mut t = IMat::identity(n);

    fn swap(g: &mut IMat, t: &mut IMat, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = g.rows;
        for i in 0..n {
            let x = g[(i, a)].clone();
            g[(i, a)] = g[(i, b)].clone();
            g[(i, b)] = x;
        }
        for j in 0..n {
            let x = g[(a, j)].clone();
            g[(a, j)] = g[(b, j)].clone();
            g[(b, j)] = x;
        }
        for i in 0..t.rows {
            let x = t[(i, a)].clone();
            t[(i, a)] = t[(i, b)].clone();
            t[(i, b)] = x;
        }
    }
    // basis change e_dst += c * e_src
    fn axpy(g: &mut IMat, t: &mut IMat, dst: usize, src: usize, c: &BigInt) {
        let n = g.rows;
        for i in 0..n {
            let x = c * &g[(i, src)];
            g[(i, dst)] += x;
        }
        for j in 0..n {
            let x = c * &g[(src, j)];
            g[(dst, j)] += x;
        }
        for i in 0..t.rows {
            let x = c * &t[(i, src)];
            t[(i, dst)] += x;
        }
    }
    fn negate(g: &mut IMat, t: &mut IMat, a: usize) {
        let n = g.rows;
        for i in 0..n {
            let x = -g[(i, a)].clone();
            g[(i, a)] = x;
        }
        for j in 0..n {
            let x = -g[(a, j)].clone();
            g[(a, j)] = x;
        }
        for i in 0..t.rows {
            let x = -t[(i, a)].clone();
            t[(i, a)] = x;
        }
    }

    let mut base = 0usize;
    let mut guard = 0usize;
    while base < n {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::NotFormPreserving);
        }
        // nonzero entry of least absolute value in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in base..n {
            for j in base..n {
                if g[(i, j)].is_zero() {
                    continue;
                }
                if pivot.map_or(true, |(pi, pj)| g[(i, j)].abs() < g[(pi, pj)].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            return Err(Error::NotFormPreserving);
        };
        swap(&mut g, &mut t, base, pi);
        let pj = if pj == base { pi } else { pj };
        swap(&mut g, &mut t, base + 1, pj);
        if g[(base, base + 1)].is_zero() {
            continue;
        }
        // clear the pivot pair against the rest; euclidean descent when the
        // pivot does not divide
        let mut clean = true;
        for r in base + 2..n {
            let d = g[(base, base + 1)].clone();
            let q = &g[(base, r)] / &d;
            if !q.is_zero() {
                let nq = -q;
                axpy(&mut g, &mut t, r, base + 1, &nq);
            }
            if !g[(base, r)].is_zero() {
                swap(&mut g, &mut t, base + 1, r);
                clean = false;
                break;
            }
            let d = g[(base, base + 1)].clone();
            let q = &g[(base + 1, r)] / &d;
            if !q.is_zero() {
                axpy(&mut g, &mut t, r, base, &q);
            }
            if !g[(base + 1, r)].is_zero() {
                swap(&mut g, &mut t, base, r);
                clean = false;
                break;
            }
        }
        if !clean {
            continue;
        }
        if !g[(base, base + 1)].abs().is_one() {
            return Err(Error::NotFormPreserving);
        }
        if g[(base, base + 1)].is_negative() {
            negate(&mut g, &mut t, base);
        }
        base += 2;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pp_eval_ranks() {
        let (p, basis) = pp_eval(2, 4);
        assert_eq!(p.invariants(), AbInvariants::free(12));
        assert_eq!(basis.len(), 12);
        let (p0, b0) = pp_eval(0, 5);
        assert_eq!(p0.invariants(), AbInvariants::free(1));
        assert_eq!(b0.len(), 1);
        let (p3, _) = pp_eval(3, 2);
        assert_eq!(p3.invariants(), AbInvariants::free(0));
    }

    #[test]
    fn fi_eval_examples() {
        // the principal projective on one degree-2 generator is free of rank
        // 6 at degree 3
        let p2 = FIPresentation::principal(2);
        assert_eq!(p2.eval(3).invariants(), AbInvariants::free(6));
        // one degree-1 generator with relation 2·id gives (Z/2)^2 at degree 2
        let tor = FIPresentation {
            generators: vec![1],
            relations: vec![Relation {
                degree: 1,
                terms: vec![RelationTerm {
                    gen: 0,
                    inj: FIInjection::identity(1),
                    coeff: BigInt::from(2),
                }],
            }],
        };
        let inv = tor.eval(2).invariants();
        assert_eq!(inv.free_rank, 0);
        assert_eq!(inv.torsion, vec![BigInt::from(2), BigInt::from(2)]);
        // below all generator degrees the module vanishes
        assert!(p2.eval(1).is_trivial());
        assert!(p2.eval(0).is_trivial());
    }

    #[test]
    fn shift_map_examples() {
        let p0 = FIPresentation::principal(0);
        assert_eq!(fi_shift_maps(&p0, 3), IMat::identity(1));
        // from degree 1, the shift selects the injection 1 -> 2
        let p1 = FIPresentation::principal(1);
        let s = fi_shift_maps(&p1, 1);
        assert_eq!((s.rows, s.cols), (2, 1));
        assert!(s[(0, 0)].is_zero());
        assert!(s[(1, 0)].is_one());
        // shifts compose to the double insertion i -> i + 2
        let lhs = fi_shift_maps(&p1, 2).mul(&fi_shift_maps(&p1, 1));
        let two_step = insertion(2, 1).compose(&insertion(1, 1)).unwrap();
        let rhs = p1.arrow_matrix(&two_step, 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ker_coker_examples() {
        let p0 = FIPresentation::principal(0);
        let (k, c) = fi_ker_coker(&p0, 2);
        assert!(k.is_trivial());
        assert!(c.is_trivial());
        let p1 = FIPresentation::principal(1);
        let (k, c) = fi_ker_coker(&p1, 2);
        assert!(k.is_trivial());
        assert_eq!(c.invariants(), AbInvariants::free(1));
        let (k, c) = fi_ker_coker(&FIPresentation::zero(), 1);
        assert!(k.is_trivial() && c.is_trivial());
    }

    #[test]
    fn degree_certification() {
        assert_eq!(
            fi_degree_certify(&FIPresentation::zero(), -1, 10).unwrap(),
            DegreeVerdict::Certified
        );
        assert_eq!(
            fi_degree_certify(&FIPresentation::principal(0), 0, 10).unwrap(),
            DegreeVerdict::Certified
        );
        assert_eq!(
            fi_degree_certify(&FIPresentation::principal(0), -1, 10).unwrap(),
            DegreeVerdict::RefutedAt(0)
        );
        assert_eq!(
            fi_degree_certify(&FIPresentation::principal(1), 1, 15).unwrap(),
            DegreeVerdict::Certified
        );
        assert_eq!(
            fi_degree_certify(&FIPresentation::principal(1), 0, 15).unwrap(),
            DegreeVerdict::RefutedAt(1)
        );
        assert!(matches!(
            fi_degree_certify(&FIPresentation::principal(1), 1, 1),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn tensor_examples() {
        let d11 = tensor_decompose(1, 1);
        let mut degs: Vec<usize> = d11.iter().map(|s| s.degree).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2]);
        let d0m = tensor_decompose(0, 3);
        assert_eq!(d0m.len(), 1);
        assert_eq!(d0m[0].degree, 3);
        let d21 = tensor_decompose(2, 1);
        let mut degs: Vec<usize> = d21.iter().map(|s| s.degree).collect();
        degs.sort();
        assert_eq!(degs, vec![2, 2, 3]);
        // triple count with overlap size a is a! C(n,a) C(m,a)
        let d33 = tensor_decompose(3, 3);
        for a in 0..=3usize {
            let count = d33.iter().filter(|s| s.n_subset.len() == a).count();
            let expected = factorial(a) * binomial(3, a) * binomial(3, a);
            assert_eq!(BigInt::from(count), expected);
        }
    }

    #[test]
    fn tensor_identity_examples() {
        assert!(tensor_rank_identity(1, 1, 2));
        assert!(tensor_rank_identity(3, 2, 1));
        assert!(tensor_rank_identity(2, 2, 5));
    }

    #[test]
    fn dup_reduce_examples() {
        let f = FIInjection::new(4, vec![1]).unwrap();
        let (g, fp) = dup_reduce(&f).unwrap();
        assert_eq!(g.values(), &[1]);
        assert_eq!(fp.values(), &[1]);
        let empty = FIInjection::new(2, vec![]).unwrap();
        let (g, fp) = dup_reduce(&empty).unwrap();
        assert_eq!(g.source(), 0);
        assert_eq!(fp.source(), 0);
        assert!(dup_reduce(&FIInjection::new(2, vec![1]).unwrap()).is_err());
    }

    #[test]
    fn dup_reduce_round_trip_exhaustive() {
        for n in 0..=2usize {
            for m in (n + 1)..=4usize {
                for f in FIInjection::all(n, 2 * m) {
                    let (g, fp) = dup_reduce(&f).unwrap();
                    assert_eq!(g.disjoint_union(&g).compose(&fp).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn x_functor_examples() {
        let id = x_functor(&FIInjection::identity(2));
        assert_eq!(id.mat, IMat::identity(4));
        let f = FIInjection::new(2, vec![2]).unwrap();
        let e = x_functor(&f);
        assert!(e.mat[(2, 0)].is_one());
        assert!(e.mat[(3, 1)].is_one());
        // functorial
        let g = FIInjection::new(3, vec![3, 1]).unwrap();
        let comp = x_functor(&g.compose(&f).unwrap());
        assert_eq!(comp.mat, x_functor(&g).mat.mul(&x_functor(&f).mat));
    }

    #[test]
    fn complement_examples() {
        // standard inclusion of the first handle: complement is the second
        let incl = x_functor(&FIInjection::new(2, vec![1]).unwrap());
        let c = symplectic_complement(&incl).unwrap();
        assert_eq!(c.basis.cols, 2);
        let mut expected = IMat::zero(4, 2);
        expected[(2, 0)] = BigInt::one();
        expected[(3, 1)] = BigInt::one();
        assert!(intmat::lattice_eq(&c.basis, &expected));
        let emb2 = x_functor(&FIInjection::new(2, vec![2]).unwrap());
        let c2 = symplectic_complement(&emb2).unwrap();
        let mut expected2 = IMat::zero(4, 2);
        expected2[(0, 0)] = BigInt::one();
        expected2[(1, 1)] = BigInt::one();
        assert!(intmat::lattice_eq(&c2.basis, &expected2));
    }

    #[test]
    fn complement_after_randomisation() {
        let one = BigInt::one;
        let v1: Vec<BigInt> = vec![one(), BigInt::zero(), -one(), one()];
        let v2: Vec<BigInt> = vec![BigInt::zero(), one(), one(), BigInt::zero()];
        let s = SpMatrix::transvection(2, &v1).mul(&SpMatrix::transvection(2, &v2));
        let incl = x_functor(&FIInjection::new(2, vec![1]).unwrap());
        let twisted = SpEmbedding::new(1, 2, s.entries.mul(&incl.mat)).unwrap();
        let c = symplectic_complement(&twisted).unwrap();
        let j2 = form_matrix(2);
        assert_eq!(c.basis.transpose().mul(&j2).mul(&c.basis), form_matrix(1));
        assert!(twisted.mat.transpose().mul(&j2).mul(&c.basis).is_zero());
    }

    #[test]
    fn presentation_json_round_trip() {
        let tor = FIPresentation {
            generators: vec![1, 2],
            relations: vec![Relation {
                degree: 2,
                terms: vec![
                    RelationTerm {
                        gen: 0,
                        inj: FIInjection::new(2, vec![2]).unwrap(),
                        coeff: BigInt::from(3),
                    },
                    RelationTerm {
                        gen: 1,
                        inj: FIInjection::identity(2),
                        coeff: BigInt::from(-1),
                    },
                ],
            }],
        };
        let j = tor.to_json();
        let back = FIPresentation::from_json(&j).unwrap();
        assert_eq!(back.generators, tor.generators);
        assert_eq!(back.eval(3).invariants(), tor.eval(3).invariants());
    }

    #[test]
    fn transvections_are_symplectic() {
        let v: Vec<BigInt> = vec![BigInt::one(), BigInt::zero()];
        let t = SpMatrix::transvection(1, &v);
        assert!(SpMatrix::new(1, t.entries.clone()).is_ok());
        assert_eq!(t.stabilize(2).genus, 2);
    }
}
