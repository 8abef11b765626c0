//! Graded pieces of the lower central series of free groups, computed through
//! truncated Magnus expansions and Lyndon bases.
//!
//! The Magnus expansion sends generator `x_i` to `1 + X_i` in the ring of
//! noncommutative power series truncated above a fixed degree. The kernel of
//! the degree-`k` truncation is exactly `γ_{k+1}`, which makes the truncation
//! the single normal form used for every quotient computation in this crate.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intmat::IMat;
use crate::words::Word;

/// A noncommutative monomial: a sequence of letters in `1..=rank`.
pub type Monomial = Vec<u8>;

/// Truncated polynomial in noncommuting variables `X_1..X_n`; monomials of
/// degree above the cutoff are dropped. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncPoly {
    rank: usize,
    cutoff: usize,
    coeffs: BTreeMap<Monomial, BigInt>,
}

impl TruncPoly {
    pub fn zero(rank: usize, cutoff: usize) -> TruncPoly {
        TruncPoly { rank, cutoff, coeffs: BTreeMap::new() }
    }

    pub fn one(rank: usize, cutoff: usize) -> TruncPoly {
        let mut p = TruncPoly::zero(rank, cutoff);
        p.add_term(vec![], BigInt::one());
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coeffs(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, m: &[u8]) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() || m.len() > self.cutoff {
            return;
        }
        debug_assert!(m.iter().all(|&l| l >= 1 && l as usize <= self.rank));
        let entry = self.coeffs.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn add(&self, other: &TruncPoly) -> TruncPoly {
        assert_eq!(self.rank, other.rank);
        assert_eq!(self.cutoff, other.cutoff);
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> TruncPoly {
        let mut out = TruncPoly::zero(self.rank, self.cutoff);
        for (m, c) in &self.coeffs {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TruncPoly) -> TruncPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TruncPoly) -> TruncPoly {
        assert_eq!(self.rank, other.rank);
        assert_eq!(self.cutoff, other.cutoff);
        let mut out = TruncPoly::zero(self.rank, self.cutoff);
        for (m1, c1) in &self.coeffs {
            for (m2, c2) in &other.coeffs {
                if m1.len() + m2.len() > self.cutoff {
                    continue;
                }
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    /// The homogeneous part of a given degree.
    pub fn homogeneous(&self, degree: usize) -> TruncPoly {
        let mut out = TruncPoly::zero(self.rank, self.cutoff);
        for (m, c) in &self.coeffs {
            if m.len() == degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Lowest degree of a nonzero non-constant term, if any.
    pub fn lowest_positive_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|m| m.len()).filter(|&d| d > 0).min()
    }

    /// Drops all terms above a new (smaller or equal) cutoff.
    pub fn truncate(&self, cutoff: usize) -> TruncPoly {
        let mut out = TruncPoly::zero(self.rank, cutoff);
        for (m, c) in &self.coeffs {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Reinterprets with a higher cutoff (no new terms appear).
    pub fn with_cutoff(&self, cutoff: usize) -> TruncPoly {
        assert!(cutoff >= self.cutoff);
        TruncPoly { rank: self.rank, cutoff, coeffs: self.coeffs.clone() }
    }

    /// Applies the algebra map `X_i -> images[i-1]`; every image must have
    /// zero constant term so the filtration is preserved.
    pub fn substitute(&self, images: &[TruncPoly], rank: usize) -> TruncPoly {
        let mut out = TruncPoly::zero(rank, self.cutoff);
        for (m, c) in &self.coeffs {
            let mut term = TruncPoly::one(rank, self.cutoff);
            for &l in m {
                term = term.mul(&images[l as usize - 1]);
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.coeffs {
                out.add_term(tm, tc * c);
            }
        }
        out
    }

    /// Relabels letters through an injection.
    pub fn relabel(&self, f: &FIInjection) -> TruncPoly {
        assert_eq!(self.rank, f.source());
        let mut out = TruncPoly::zero(f.target(), self.cutoff);
        for (m, c) in &self.coeffs {
            let m2: Monomial = m.iter().map(|&l| f.value(l as usize) as u8).collect();
            out.add_term(m2, c.clone());
        }
        out
    }
}

/// Multiplicative inverse of a unit `1 + u` (`u` without constant term),
/// via the truncated geometric series.
pub fn unit_inverse(p: &TruncPoly) -> TruncPoly {
    assert!(p.coeff(&[]).is_one(), "unit_inverse needs constant term 1");
    let u = {
        let mut q = p.clone();
        q.add_term(vec![], -BigInt::one());
        q
    };
    let mut out = TruncPoly::one(p.rank(), p.cutoff());
    let mut pow = TruncPoly::one(p.rank(), p.cutoff());
    for i in 1..=p.cutoff() {
        pow = pow.mul(&u);
        if pow.is_zero() {
            break;
        }
        let term = if i % 2 == 1 { pow.neg() } else { pow.clone() };
        out = out.add(&term);
    }
    out
}

/// Truncated Magnus expansion of a word: `x_i -> 1 + X_i`,
/// `x_i^-1 -> 1 - X_i + X_i^2 - ...`.
pub fn magnus_expand(w: &Word, cutoff: usize) -> TruncPoly {
    let rank = w.rank();
    let mut out = TruncPoly::one(rank, cutoff);
    for &l in w.letters() {
        let i = l.unsigned_abs() as u8;
        let mut gen = TruncPoly::one(rank, cutoff);
        if l > 0 {
            gen.add_term(vec![i], BigInt::one());
        } else {
            let mut sign = -BigInt::one();
            for d in 1..=cutoff {
                gen.add_term(vec![i; d], sign.clone());
                sign = -sign;
            }
        }
        out = out.mul(&gen);
    }
    out
}

/// Where a word sits in the lower central series, as far as a bounded Magnus
/// expansion can see.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcsClass {
    /// The empty word.
    Identity,
    /// Exact class `d`: the word lies in `γ_d` but not `γ_{d+1}`.
    Exactly(usize),
    /// Every term up to the window vanished; the class is at least this.
    AtLeast(usize),
}

impl LcsClass {
    /// True when the witnessed class is `>= c`.
    pub fn at_least(&self, c: usize) -> bool {
        match *self {
            LcsClass::Identity => true,
            LcsClass::Exactly(d) => d >= c,
            LcsClass::AtLeast(d) => d >= c,
        }
    }
}

/// Smallest degree of a nonvanishing term of the Magnus expansion, within the
/// window `1..=kmax`. By exactness of the truncated Magnus map this equals the
/// lower-central-series class whenever it is `<= kmax`.
pub fn lcs_class(w: &Word, kmax: usize) -> LcsClass {
    assert!(kmax >= 1);
    if w.is_empty() {
        return LcsClass::Identity;
    }
    let p = magnus_expand(w, kmax);
    match p.lowest_positive_degree() {
        Some(d) => LcsClass::Exactly(d),
        None => LcsClass::AtLeast(kmax + 1),
    }
}

/// An injection between finite sets `{1..n} -> {1..m}`, an arrow of the
/// category of finite sets and injections.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FIInjection {
    target: usize,
    values: Vec<usize>,
}

impl FIInjection {
    pub fn new(target: usize, values: Vec<usize>) -> Result<FIInjection> {
        let mut seen = vec![false; target];
        for &v in &values {
            if v == 0 || v > target {
                return Err(Error::Invalid(format!(
                    "injection value {v} out of range 1..={target}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::Invalid(format!("injection repeats value {v}")));
            }
            seen[v - 1] = true;
        }
        Ok(FIInjection { target, values })
    }

    pub fn identity(n: usize) -> FIInjection {
        FIInjection { target: n, values: (1..=n).collect() }
    }

    pub fn source(&self) -> usize {
        self.values.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.values.contains(&v)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &FIInjection) -> Result<FIInjection> {
        if other.target() != self.source() {
            return Err(Error::RankMismatch {
                left: other.target(),
                right: self.source(),
            });
        }
        FIInjection::new(
            self.target,
            other.values.iter().map(|&v| self.values[v - 1]).collect(),
        )
    }

    /// All injections `{1..n} -> {1..m}` in lexicographic order of their
    /// value tuples.
    pub fn all(n: usize, m: usize) -> Vec<FIInjection> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; m];
        fn rec(
            n: usize,
            m: usize,
            current: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<FIInjection>,
        ) {
            if current.len() == n {
                out.push(FIInjection { target: m, values: current.clone() });
                return;
            }
            for v in 1..=m {
                if !used[v - 1] {
                    used[v - 1] = true;
                    current.push(v);
                    rec(n, m, current, used, out);
                    current.pop();
                    used[v - 1] = false;
                }
            }
        }
        rec(n, m, &mut current, &mut used, &mut out);
        out
    }

    /// Monoidal product on arrows: `(f ⊔ g)(i) = f(i)` for `i <= n`, and
    /// `g(i - n) + m` for `i > n`, where `f : n -> m`.
    pub fn disjoint_union(&self, g: &FIInjection) -> FIInjection {
        let m = self.target();
        let mut values = self.values.clone();
        values.extend(g.values.iter().map(|&v| v + m));
        FIInjection { target: m + g.target(), values }
    }
}

/// True when `w` is a Lyndon word: strictly smaller than each proper suffix.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of length exactly `k` on letters `1..=n`, sorted.
pub fn lyndon_basis(n: usize, k: usize) -> Vec<Monomial> {
    assert!(n >= 1 && k >= 1);
    {
        let cache = LYNDON_CACHE.read().unwrap();
        if let Some(v) = cache.get(&(n, k)) {
            return v.clone();
        }
    }
    // Duval's generation of Lyndon words of length <= k, filtered to length k
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![1];
    loop {
        if w.len() == k {
            out.push(w.clone());
        }
        let len = w.len();
        let mut next = Vec::with_capacity(k);
        while next.len() < k {
            next.push(w[next.len() % len]);
        }
        while let Some(&last) = next.last() {
            if last == n as u8 {
                next.pop();
            } else {
                break;
            }
        }
        if next.is_empty() {
            break;
        }
        *next.last_mut().unwrap() += 1;
        w = next;
    }
    out.sort();
    let mut cache = LYNDON_CACHE.write().unwrap();
    cache.entry((n, k)).or_insert_with(|| out.clone());
    out
}

static LYNDON_CACHE: RwLock<BTreeMap<(usize, usize), Vec<Monomial>>> =
    RwLock::new(BTreeMap::new());

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Rank of the degree-`k` graded piece of the free Lie ring on `n` letters:
/// `(1/k) Σ_{d|k} μ(d) n^{k/d}`.
pub fn witt_rank(n: usize, k: usize) -> u64 {
    assert!(n >= 1 && k >= 1);
    let mut total: i128 = 0;
    for d in 1..=k as u64 {
        if k as u64 % d != 0 {
            continue;
        }
        let mu = moebius(d) as i128;
        if mu == 0 {
            continue;
        }
        total += mu * (n as i128).pow((k as u64 / d) as u32);
    }
    (total / k as i128) as u64
}

/// Standard factorisation of a Lyndon word `w = uv` with `v` the longest
/// proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (Vec<u8>, Vec<u8>) {
    assert!(w.len() >= 2 && is_lyndon(w));
    for i in 1..w.len() {
        if is_lyndon(&w[i..]) {
            return (w[..i].to_vec(), w[i..].to_vec());
        }
    }
    unreachable!("every Lyndon word of length >= 2 factors");
}

/// Expansion in the tensor algebra of the standard bracketing of a Lyndon
/// word. The result is homogeneous of degree `|w|` with leading monomial `w`.
pub fn bracket_expansion(w: &[u8], rank: usize) -> TruncPoly {
    let k = w.len();
    if k == 1 {
        let mut p = TruncPoly::zero(rank, 1);
        p.add_term(w.to_vec(), BigInt::one());
        return p;
    }
    let (u, v) = standard_factorization(w);
    let pu = bracket_expansion(&u, rank).with_cutoff(k);
    let pv = bracket_expansion(&v, rank).with_cutoff(k);
    pu.mul(&pv).sub(&pv.mul(&pu))
}

/// The group word realising the standard bracketing of a Lyndon word as an
/// iterated commutator: its Magnus expansion is `1 + b(w) + higher`.
pub fn bracket_word(w: &[u8], rank: usize) -> Word {
    if w.len() == 1 {
        return Word::generator(rank, w[0] as usize);
    }
    let (u, v) = standard_factorization(w);
    bracket_word(&u, rank)
        .commutator(&bracket_word(&v, rank))
        .expect("equal ranks")
}

/// Integer combination of Lyndon bracketings of a fixed weight; the concrete
/// basis of a graded piece of the free Lie ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    rank: usize,
    weight: usize,
    coords: BTreeMap<Monomial, BigInt>,
}

impl LieElement {
    pub fn zero(rank: usize, weight: usize) -> LieElement {
        LieElement { rank, weight, coords: BTreeMap::new() }
    }

    pub fn from_coords(
        rank: usize,
        weight: usize,
        coords: BTreeMap<Monomial, BigInt>,
    ) -> Result<LieElement> {
        for (m, _) in &coords {
            if m.len() != weight || !is_lyndon(m) || m.iter().any(|&l| l as usize > rank || l == 0)
            {
                return Err(Error::Invalid(format!("{m:?} is not a weight-{weight} Lyndon word")));
            }
        }
        let coords = coords.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LieElement { rank, weight, coords })
    }

    pub fn single(rank: usize, word: Monomial, coeff: BigInt) -> Result<LieElement> {
        let weight = word.len();
        let mut coords = BTreeMap::new();
        coords.insert(word, coeff);
        LieElement::from_coords(rank, weight, coords)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn coords(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        assert_eq!(self.rank, other.rank);
        assert_eq!(self.weight, other.weight);
        let mut coords = self.coords.clone();
        for (m, c) in &other.coords {
            let e = coords.entry(m.clone()).or_insert_with(BigInt::zero);
            *e += c;
        }
        coords.retain(|_, c| !c.is_zero());
        LieElement { rank: self.rank, weight: self.weight, coords }
    }

    pub fn neg(&self) -> LieElement {
        LieElement {
            rank: self.rank,
            weight: self.weight,
            coords: self.coords.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Expansion in the tensor algebra: sum of coefficient times bracket
    /// expansion.
    pub fn expansion(&self) -> TruncPoly {
        let mut out = TruncPoly::zero(self.rank, self.weight);
        for (m, c) in &self.coords {
            let b = bracket_expansion(m, self.rank);
            for (bm, bc) in b.coeffs() {
                out.add_term(bm.clone(), bc * c);
            }
        }
        out
    }

    /// A group word whose Magnus expansion is `1 + expansion + higher`:
    /// the product of bracket words raised to the coefficients.
    pub fn witness_word(&self) -> Word {
        let mut out = Word::identity(self.rank);
        for (m, c) in &self.coords {
            let w = bracket_word(m, self.rank);
            let e = i64::try_from(c).expect("desk-scale coefficient");
            out = out.mul(&w.pow(e)).expect("equal ranks");
        }
        out
    }

    /// Coordinate vector over the Lyndon basis of this (rank, weight).
    pub fn to_vector(&self) -> Vec<BigInt> {
        lyndon_basis(self.rank, self.weight)
            .iter()
            .map(|m| self.coords.get(m).cloned().unwrap_or_else(BigInt::zero))
            .collect()
    }

    /// JSON form: a list of `[lyndon word as digit string, coefficient]`
    /// pairs. Coefficients are strings so arbitrary precision survives.
    pub fn to_json(&self) -> serde_json::Value {
        let pairs: Vec<serde_json::Value> = self
            .coords
            .iter()
            .map(|(m, c)| {
                let mut s = String::new();
                for &l in m {
                    write!(s, "{l}").unwrap();
                }
                serde_json::json!([s, c.to_string()])
            })
            .collect();
        serde_json::json!({
            "rank": self.rank,
            "weight": self.weight,
            "coords": pairs,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LieElement> {
        let rank = v["rank"].as_u64().ok_or_else(|| Error::Parse("missing rank".into()))? as usize;
        if rank > 9 {
            return Err(Error::Parse("digit-string serialisation supports rank <= 9".into()));
        }
        let weight =
            v["weight"].as_u64().ok_or_else(|| Error::Parse("missing weight".into()))? as usize;
        let mut coords = BTreeMap::new();
        for pair in v["coords"]
            .as_array()
            .ok_or_else(|| Error::Parse("coords must be an array".into()))?
        {
            let s = pair[0]
                .as_str()
                .ok_or_else(|| Error::Parse("lyndon word must be a string".into()))?;
            let mono: Monomial = s
                .bytes()
                .map(|b| {
                    if b.is_ascii_digit() && b > b'0' {
                        Ok(b - b'0')
                    } else {
                        Err(Error::Parse(format!("bad letter {:?}", b as char)))
                    }
                })
                .collect::<Result<_>>()?;
            let c: BigInt = pair[1]
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient must be a string".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad coefficient".into()))?;
            coords.insert(mono, c);
        }
        LieElement::from_coords(rank, weight, coords)
    }
}

/// Rewrites a homogeneous polynomial known to be a Lie element into Lyndon
/// coordinates by triangular back-substitution: the bracket expansion of a
/// Lyndon word is that word plus lexicographically larger monomials.
pub fn lie_rewrite(p: &TruncPoly) -> Result<LieElement> {
    if p.is_zero() {
        return Ok(LieElement::zero(p.rank(), p.cutoff()));
    }
    let degrees: Vec<usize> = p.coeffs().keys().map(|m| m.len()).collect();
    let k = degrees[0];
    if degrees.iter().any(|&d| d != k) || k == 0 {
        return Err(Error::Invalid("lie_rewrite expects a homogeneous polynomial".into()));
    }
    let mut residue = p.clone();
    let mut coords: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    while let Some((lead, c)) = residue.coeffs().iter().next().map(|(m, c)| (m.clone(), c.clone()))
    {
        if !is_lyndon(&lead) {
            return Err(Error::NotALieElement { monomial: format!("{lead:?}") });
        }
        let b = bracket_expansion(&lead, p.rank());
        let mut scaled = TruncPoly::zero(p.rank(), residue.cutoff());
        for (m, bc) in b.coeffs() {
            scaled.add_term(m.clone(), bc * &c);
        }
        residue = residue.sub(&scaled);
        let e = coords.entry(lead).or_insert_with(BigInt::zero);
        *e += c;
    }
    LieElement::from_coords(p.rank(), k, coords)
}

/// Image of a word of class `>= k` in the degree-`k` graded piece, in Lyndon
/// coordinates.
pub fn gr_image(w: &Word, k: usize) -> Result<LieElement> {
    let p = magnus_expand(w, k);
    if let Some(d) = p.lowest_positive_degree() {
        if d < k {
            return Err(Error::NotInLayer { weight: k });
        }
    }
    lie_rewrite(&p.homogeneous(k))
}

/// Functorial pushforward of a Lie element along an injection of letter sets:
/// relabel the tensor expansion and rewrite in the target Lyndon basis.
pub fn lie_pushforward(f: &FIInjection, v: &LieElement) -> Result<LieElement> {
    if f.source() != v.rank() {
        return Err(Error::RankMismatch { left: f.source(), right: v.rank() });
    }
    let relabeled = v.expansion().relabel(f);
    if relabeled.is_zero() {
        return Ok(LieElement::zero(f.target(), v.weight()));
    }
    lie_rewrite(&relabeled)
}

/// Stacks the Lyndon coordinate vectors of the given elements as matrix
/// columns (used for integer rank computations).
pub fn coordinate_matrix(elems: &[LieElement]) -> IMat {
    assert!(!elems.is_empty());
    let dim = lyndon_basis(elems[0].rank(), elems[0].weight()).len();
    IMat::from_fn(dim, elems.len(), |i, j| elems[j].to_vector()[i].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, rank: usize) -> Word {
        Word::parse(text, rank).unwrap()
    }

    #[test]
    fn lyndon_small_cases() {
        assert_eq!(lyndon_basis(2, 1), vec![vec![1], vec![2]]);
        assert_eq!(lyndon_basis(2, 2), vec![vec![1, 2]]);
        assert_eq!(lyndon_basis(2, 3), vec![vec![1, 1, 2], vec![1, 2, 2]]);
    }

    #[test]
    fn witt_matches_enumeration() {
        for n in 1..=4 {
            for k in 1..=8 {
                assert_eq!(
                    witt_rank(n, k),
                    lyndon_basis(n, k).len() as u64,
                    "witt({n},{k})"
                );
            }
        }
        assert_eq!(witt_rank(2, 2), 1);
        assert_eq!(witt_rank(3, 1), 3);
        assert_eq!(witt_rank(2, 4), 3);
    }

    #[test]
    fn magnus_examples() {
        assert_eq!(
            magnus_expand(&Word::identity(2), 3),
            TruncPoly::one(2, 3)
        );
        // commutator expansion at cutoff 2
        let p = magnus_expand(&w("x1 x2 X1 X2", 2), 2);
        let mut expected = TruncPoly::one(2, 2);
        expected.add_term(vec![1, 2], BigInt::one());
        expected.add_term(vec![2, 1], -BigInt::one());
        assert_eq!(p, expected);
        let q = magnus_expand(&w("x1", 2), 3);
        let mut e = TruncPoly::one(2, 3);
        e.add_term(vec![1], BigInt::one());
        assert_eq!(q, e);
    }

    #[test]
    fn magnus_multiplicative() {
        let u = w("x1 X2 x1", 2);
        let v = w("x2 x2 X1", 2);
        let lhs = magnus_expand(&u.mul(&v).unwrap(), 4);
        let rhs = magnus_expand(&u, 4).mul(&magnus_expand(&v, 4));
        assert_eq!(lhs, rhs);
        let winv = magnus_expand(&u.inv(), 4);
        assert_eq!(magnus_expand(&u, 4).mul(&winv), TruncPoly::one(2, 4));
    }

    #[test]
    fn lcs_class_examples() {
        assert_eq!(lcs_class(&w("x1", 2), 3), LcsClass::Exactly(1));
        assert_eq!(lcs_class(&w("x1 x2 X1 X2", 2), 3), LcsClass::Exactly(2));
        let c3 = w("x1 x2 X1 X2", 2)
            .commutator(&Word::generator(2, 1))
            .unwrap();
        assert_eq!(lcs_class(&c3, 4), LcsClass::Exactly(3));
        assert_eq!(lcs_class(&Word::identity(2), 3), LcsClass::Identity);
        assert_eq!(lcs_class(&w("x1", 2), 3).at_least(1), true);
        assert_eq!(lcs_class(&w("x1", 2), 3).at_least(2), false);
    }

    #[test]
    fn gr_image_examples() {
        let v = gr_image(&w("x1 x2 X1 X2", 2), 2).unwrap();
        assert_eq!(
            v,
            LieElement::single(2, vec![1, 2], BigInt::one()).unwrap()
        );
        let u = gr_image(&w("x1", 2), 1).unwrap();
        assert_eq!(u, LieElement::single(2, vec![1], BigInt::one()).unwrap());
        // inverse pair dies in the layer
        let z = w("x1 x2 X1 X2", 2)
            .mul(&w("x2 x1 X2 X1", 2))
            .unwrap();
        assert!(gr_image(&z, 2).unwrap().is_zero());
        // not in the layer
        assert!(matches!(
            gr_image(&w("x1", 2), 2),
            Err(Error::NotInLayer { .. })
        ));
    }

    #[test]
    fn lie_rewrite_examples() {
        let mut p = TruncPoly::zero(2, 2);
        p.add_term(vec![1, 2], BigInt::one());
        p.add_term(vec![2, 1], -BigInt::one());
        assert_eq!(
            lie_rewrite(&p).unwrap(),
            LieElement::single(2, vec![1, 2], BigInt::one()).unwrap()
        );
        assert!(lie_rewrite(&TruncPoly::zero(2, 2)).unwrap().is_zero());
        let mut bad = TruncPoly::zero(2, 2);
        bad.add_term(vec![1, 2], BigInt::one());
        assert!(matches!(
            lie_rewrite(&bad),
            Err(Error::NotALieElement { .. })
        ));
    }

    #[test]
    fn bracket_word_matches_expansion() {
        for word in lyndon_basis(2, 3) {
            let wv = bracket_word(&word, 2);
            let p = magnus_expand(&wv, 3);
            let expected = bracket_expansion(&word, 2);
            assert_eq!(p.homogeneous(3), expected.with_cutoff(3));
            assert!(p.homogeneous(1).is_zero());
            assert!(p.homogeneous(2).is_zero());
        }
    }

    #[test]
    fn pushforward_examples() {
        let v = LieElement::single(1, vec![1], BigInt::one()).unwrap();
        let f = FIInjection::new(2, vec![2]).unwrap();
        assert_eq!(
            lie_pushforward(&f, &v).unwrap(),
            LieElement::single(2, vec![2], BigInt::one()).unwrap()
        );
        // the swap sends [x1,x2] to [x2,x1] = -[x1,x2]
        let swap = FIInjection::new(2, vec![2, 1]).unwrap();
        let b = LieElement::single(2, vec![1, 2], BigInt::one()).unwrap();
        assert_eq!(
            lie_pushforward(&swap, &b).unwrap(),
            LieElement::single(2, vec![1, 2], -BigInt::one()).unwrap()
        );
        let id = FIInjection::identity(2);
        assert_eq!(lie_pushforward(&id, &b).unwrap(), b);
    }

    #[test]
    fn lie_element_json_round_trip() {
        let mut coords = BTreeMap::new();
        coords.insert(vec![1, 2], BigInt::from(-3));
        coords.insert(vec![1, 3], BigInt::from(7));
        let v = LieElement::from_coords(3, 2, coords).unwrap();
        let j = v.to_json();
        assert_eq!(LieElement::from_json(&j).unwrap(), v);
    }
}
