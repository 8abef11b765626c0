//! Enumeration of connected trivalent multigraphs up to isomorphism, and the
//! generating series of the free graded-commutative algebra they span
//! together with the even symplectic classes.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Hard cap on the vertex count for exhaustive enumeration; canonical forms
/// are computed by permutation minimisation, which is only sensible at desk
/// scale.
pub const VERTEX_CAP: usize = 8;

/// A multigraph with every vertex trivalent (a loop counts twice), stored as
/// a loop vector plus a symmetric multiplicity matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrivalentGraph {
    vertices: usize,
    loops: Vec<u8>,
    adj: Vec<Vec<u8>>,
}

impl TrivalentGraph {
    pub fn new(loops: Vec<u8>, adj: Vec<Vec<u8>>) -> Result<TrivalentGraph> {
        let v = loops.len();
        if adj.len() != v || adj.iter().any(|row| row.len() != v) {
            return Err(Error::Invalid("adjacency matrix shape mismatch".into()));
        }
        for i in 0..v {
            if adj[i][i] != 0 {
                return Err(Error::Invalid("loops belong in the loop vector".into()));
            }
            for j in 0..v {
                if adj[i][j] != adj[j][i] {
                    return Err(Error::Invalid("adjacency matrix must be symmetric".into()));
                }
            }
            let deg: u32 =
                2 * loops[i] as u32 + (0..v).map(|j| adj[i][j] as u32).sum::<u32>();
            if deg != 3 {
                return Err(Error::Invalid(format!("vertex {} has valence {deg}", i + 1)));
            }
        }
        let g = TrivalentGraph { vertices: v, loops, adj };
        if !g.is_connected() {
            return Err(Error::Invalid("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn loops(&self) -> &[u8] {
        &self.loops
    }

    pub fn adj(&self) -> &[Vec<u8>] {
        &self.adj
    }

    fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..self.vertices {
                if self.adj[i][j] > 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn encode_under(&self, perm: &[usize]) -> Vec<u8> {
        // per-vertex blocks: loop count, then multiplicities toward the
        // already-placed vertices
        let mut out = Vec::with_capacity(self.vertices * (self.vertices + 1) / 2);
        for (i, &pi) in perm.iter().enumerate() {
            out.push(self.loops[pi]);
            for &pj in &perm[..i] {
                out.push(self.adj[pi][pj]);
            }
        }
        out
    }

    /// Canonical form: the lexicographically minimal encoding over all vertex
    /// permutations. Because the encoding is built block by block, the
    /// minimum is found by choosing, at each level, only the candidates whose
    /// next block is lexicographically minimal (exploring ties), then taking
    /// the least completed encoding.
    pub fn canonical_form(&self) -> Vec<u8> {
        const MAXV: usize = 16;
        assert!(self.vertices <= MAXV);
        struct State<'a> {
            g: &'a TrivalentGraph,
            perm: [usize; MAXV],
            used: [bool; MAXV],
            best: Option<Vec<u8>>,
        }
        fn block_of(g: &TrivalentGraph, cand: usize, perm: &[usize], t: usize, out: &mut [u8]) {
            out[0] = g.loops[cand];
            for (k, &pj) in perm[..t].iter().enumerate() {
                out[k + 1] = g.adj[cand][pj];
            }
        }
        // `tight` tracks whether the encoding of the current prefix equals
        // the incumbent's prefix; only then may the incumbent prune.
        fn dfs(s: &mut State, t: usize, offset: usize, tight: bool) {
            let v = s.g.vertices;
            if t == v {
                let enc = s.g.encode_under(&s.perm[..v]);
                if s.best.as_ref().map_or(true, |b| enc < *b) {
                    s.best = Some(enc);
                }
                return;
            }
            let mut min_block = [u8::MAX; MAXV + 1];
            let mut winners = [0usize; MAXV];
            let mut n_win = 0usize;
            let mut block = [0u8; MAXV + 1];
            for cand in 0..v {
                if s.used[cand] {
                    continue;
                }
                block_of(s.g, cand, &s.perm, t, &mut block);
                match block[..t + 1].cmp(&min_block[..t + 1]) {
                    std::cmp::Ordering::Less => {
                        min_block[..t + 1].copy_from_slice(&block[..t + 1]);
                        winners[0] = cand;
                        n_win = 1;
                    }
                    std::cmp::Ordering::Equal => {
                        winners[n_win] = cand;
                        n_win += 1;
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
            let mut child_tight = false;
            if tight {
                if let Some(b) = s.best.as_ref() {
                    match min_block[..t + 1].cmp(&b[offset..offset + t + 1]) {
                        std::cmp::Ordering::Greater => return,
                        std::cmp::Ordering::Equal => child_tight = true,
                        std::cmp::Ordering::Less => {}
                    }
                } else {
                    child_tight = true;
                }
            }
            for k in 0..n_win {
                let cand = winners[k];
                s.used[cand] = true;
                s.perm[t] = cand;
                dfs(s, t + 1, offset + t + 1, child_tight);
                s.used[cand] = false;
            }
        }
        let mut s = State {
            g: self,
            perm: [0; MAXV],
            used: [false; MAXV],
            best: None,
        };
        dfs(&mut s, 0, 0, true);
        s.best.expect("at least one permutation")
    }

    /// Rebuilds a graph from a canonical encoding.
    pub fn from_encoding(v: usize, enc: &[u8]) -> Result<TrivalentGraph> {
        let mut loops = vec![0u8; v];
        let mut adj = vec![vec![0u8; v]; v];
        let mut pos = 0usize;
        for i in 0..v {
            if pos >= enc.len() {
                return Err(Error::Parse("encoding too short".into()));
            }
            loops[i] = enc[pos];
            pos += 1;
            for j in 0..i {
                if pos >= enc.len() {
                    return Err(Error::Parse("encoding too short".into()));
                }
                adj[i][j] = enc[pos];
                adj[j][i] = enc[pos];
                pos += 1;
            }
        }
        if pos != enc.len() {
            return Err(Error::Parse("encoding too long".into()));
        }
        TrivalentGraph::new(loops, adj)
    }

    /// Text record: `v; loops=[..]; edges=[(i,j,m),..]; canon=<digits>`.
    pub fn to_record(&self) -> String {
        let mut s = String::new();
        write!(s, "{}; loops=[", self.vertices).unwrap();
        for (i, l) in self.loops.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{l}").unwrap();
        }
        s.push_str("]; edges=[");
        let mut first = true;
        for i in 0..self.vertices {
            for j in i + 1..self.vertices {
                if self.adj[i][j] > 0 {
                    if !first {
                        s.push(',');
                    }
                    first = false;
                    write!(s, "({},{},{})", i + 1, j + 1, self.adj[i][j]).unwrap();
                }
            }
        }
        s.push_str("]; canon=");
        for b in self.canonical_form() {
            write!(s, "{b}").unwrap();
        }
        s
    }

    /// Parses the record format (the trailing canonical field is optional and
    /// recomputed, never trusted).
    pub fn parse_record(text: &str) -> Result<TrivalentGraph> {
        let mut parts = text.split(';').map(|p| p.trim());
        let v: usize = parts
            .next()
            .ok_or_else(|| Error::Parse("empty record".into()))?
            .parse()
            .map_err(|_| Error::Parse("bad vertex count".into()))?;
        if v == 0 || v > 64 {
            return Err(Error::Parse("vertex count out of range".into()));
        }
        let loops_part = parts
            .next()
            .ok_or_else(|| Error::Parse("missing loops field".into()))?;
        let loops_body = loops_part
            .strip_prefix("loops=[")
            .and_then(|p| p.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("malformed loops field".into()))?;
        let loops: Vec<u8> = if loops_body.trim().is_empty() {
            vec![]
        } else {
            loops_body
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::Parse("bad loop count".into())))
                .collect::<Result<_>>()?
        };
        if loops.len() != v {
            return Err(Error::Parse("loop vector length mismatch".into()));
        }
        let edges_part = parts
            .next()
            .ok_or_else(|| Error::Parse("missing edges field".into()))?;
        let edges_body = edges_part
            .strip_prefix("edges=[")
            .and_then(|p| p.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("malformed edges field".into()))?;
        let mut adj = vec![vec![0u8; v]; v];
        if !edges_body.trim().is_empty() {
            for tuple in edges_body.split("),") {
                let t = tuple.trim().trim_start_matches('(').trim_end_matches(')');
                let nums: Vec<&str> = t.split(',').collect();
                if nums.len() != 3 {
                    return Err(Error::Parse(format!("malformed edge tuple {tuple:?}")));
                }
                let i: usize =
                    nums[0].trim().parse().map_err(|_| Error::Parse("bad edge endpoint".into()))?;
                let j: usize =
                    nums[1].trim().parse().map_err(|_| Error::Parse("bad edge endpoint".into()))?;
                let m: u8 =
                    nums[2].trim().parse().map_err(|_| Error::Parse("bad multiplicity".into()))?;
                if i == 0 || j == 0 || i > v || j > v || i == j {
                    return Err(Error::Parse("edge endpoint out of range".into()));
                }
                adj[i - 1][j - 1] = m;
                adj[j - 1][i - 1] = m;
            }
        }
        TrivalentGraph::new(loops, adj)
    }
}

/// Exhaustive, duplicate-free list of connected trivalent multigraphs on `v`
/// vertices, canonically labelled. Results are memoised: enumeration feeds
/// several independent series computations.
pub fn enumerate_trivalent(v: usize) -> Result<Vec<TrivalentGraph>> {
    if v == 0 || v % 2 != 0 {
        return Err(Error::OddVertices(v));
    }
    if v > VERTEX_CAP {
        return Err(Error::VertexCap { got: v, cap: VERTEX_CAP });
    }
    {
        let cache = ENUM_CACHE.read().unwrap();
        if let Some(gs) = cache.get(&v) {
            return Ok(gs.clone());
        }
    }
    let out = enumerate_trivalent_uncached(v)?;
    ENUM_CACHE.write().unwrap().entry(v).or_insert_with(|| out.clone());
    Ok(out)
}

static ENUM_CACHE: std::sync::RwLock<std::collections::BTreeMap<usize, Vec<TrivalentGraph>>> =
    std::sync::RwLock::new(std::collections::BTreeMap::new());

fn enumerate_trivalent_uncached(v: usize) -> Result<Vec<TrivalentGraph>> {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut out = Vec::new();
    // loop vectors can be assumed sorted (descending): every class has such a
    // labelling, and the canonical dedupe handles the rest
    for nloops in 0..=v {
        let mut loops = vec![0u8; v];
        for l in loops.iter_mut().take(nloops) {
            *l = 1;
        }
        let residual: Vec<u8> = loops.iter().map(|&l| 3 - 2 * l).collect();
        let mut adj = vec![vec![0u8; v]; v];
        search_adjacency(v, &loops, &residual, &mut adj, 0, 1, &mut |g| {
            let canon = g.canonical_form();
            if seen.insert(canon.clone()) {
                out.push(TrivalentGraph::from_encoding(v, &canon).expect("valid encoding"));
            }
        });
    }
    out.sort();
    Ok(out)
}

fn search_adjacency(
    v: usize,
    loops: &[u8],
    residual: &[u8],
    adj: &mut Vec<Vec<u8>>,
    row: usize,
    col: usize,
    emit: &mut impl FnMut(&TrivalentGraph),
) {
    if row == v {
        let g = TrivalentGraph {
            vertices: v,
            loops: loops.to_vec(),
            adj: adj.clone(),
        };
        if g.is_connected() {
            emit(&g);
        }
        return;
    }
    if col >= v {
        // row must be saturated before moving on
        let used: u8 = (0..v).map(|j| adj[row][j]).sum();
        if used == residual[row] {
            search_adjacency(v, loops, residual, adj, row + 1, row + 2, emit);
        }
        return;
    }
    let used_row: u8 = (0..v).map(|j| adj[row][j]).sum();
    let used_col: u8 = (0..v).map(|j| adj[col][j]).sum();
    let room = (residual[row] - used_row).min(residual[col] - used_col);
    for m in 0..=room {
        adj[row][col] = m;
        adj[col][row] = m;
        search_adjacency(v, loops, residual, adj, row, col + 1, emit);
    }
    adj[row][col] = 0;
    adj[col][row] = 0;
}

/// Independent oracle: counts isomorphism classes of connected trivalent
/// multigraphs by exhausting perfect matchings of `3v` labelled half-edges.
/// Feasible only for very small `v`.
pub fn half_edge_pairing_count(v: usize) -> Result<usize> {
    if v == 0 || v % 2 != 0 {
        return Err(Error::OddVertices(v));
    }
    if v > 4 {
        return Err(Error::VertexCap { got: v, cap: 4 });
    }
    let total = 3 * v;
    let mut partner: Vec<Option<usize>> = vec![None; total];
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();

    fn rec(
        partner: &mut Vec<Option<usize>>,
        v: usize,
        seen: &mut BTreeSet<Vec<u8>>,
    ) {
        let total = 3 * v;
        let Some(first) = (0..total).find(|&h| partner[h].is_none()) else {
            // complete matching: build the multigraph
            let mut loops = vec![0u8; v];
            let mut adj = vec![vec![0u8; v]; v];
            for h in 0..total {
                let p = partner[h].unwrap();
                if p <= h {
                    continue;
                }
                let (a, b) = (h / 3, p / 3);
                if a == b {
                    loops[a] += 1;
                } else {
                    adj[a][b] += 1;
                    adj[b][a] += 1;
                }
            }
            let g = TrivalentGraph { vertices: v, loops, adj };
            if g.is_connected() {
                seen.insert(g.canonical_form());
            }
            return;
        };
        for other in first + 1..total {
            if partner[other].is_some() {
                continue;
            }
            partner[first] = Some(other);
            partner[other] = Some(first);
            rec(partner, v, seen);
            partner[first] = None;
            partner[other] = None;
        }
    }
    rec(&mut partner, v, &mut seen);
    Ok(seen.len())
}

/// Grading convention for graph generators: the generator degree is either
/// the order of the graph or twice the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeConvention {
    Order,
    TwiceOrder,
}

impl DegreeConvention {
    pub fn graph_degree(&self, vertices: usize) -> usize {
        match self {
            DegreeConvention::Order => vertices,
            DegreeConvention::TwiceOrder => 2 * vertices,
        }
    }
}

impl FromStr for DegreeConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<DegreeConvention> {
        match s {
            "order" => Ok(DegreeConvention::Order),
            "twice-order" => Ok(DegreeConvention::TwiceOrder),
            other => Err(Error::UnsupportedConvention(other.into())),
        }
    }
}

/// Coefficientwise dimension series of a graded ring, up to a cutoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    pub cutoff: usize,
    pub coefficients: Vec<BigInt>,
}

impl GradedSeries {
    pub fn one(cutoff: usize) -> GradedSeries {
        let mut coefficients = vec![BigInt::zero(); cutoff + 1];
        coefficients[0] = BigInt::one();
        GradedSeries { cutoff, coefficients }
    }

    /// Multiplies in a geometric factor `1/(1 - t^degree)`.
    fn mul_geometric(&mut self, degree: usize) {
        assert!(degree >= 1);
        for d in degree..=self.cutoff {
            let add = self.coefficients[d - degree].clone();
            self.coefficients[d] += add;
        }
    }

    /// Coefficientwise comparison `self <= other`.
    pub fn le(&self, other: &GradedSeries) -> bool {
        self.cutoff == other.cutoff
            && self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .all(|(a, b)| a <= b)
    }
}

/// Degrees of the even symplectic generators within the cutoff: one class of
/// degree `2i` for each odd `i`.
pub fn sp_class_degrees(cutoff: usize) -> Vec<usize> {
    (1..).step_by(2).map(|i| 2 * i).take_while(|&d| d <= cutoff).collect()
}

/// Degrees of the graph generators within the cutoff, one entry per
/// isomorphism class. Enumeration is capped at [`VERTEX_CAP`] vertices, so
/// with the `order` convention the list is complete for cutoffs up to
/// `VERTEX_CAP + 1` and a sub-list beyond.
pub fn graph_generator_degrees(
    cutoff: usize,
    convention: DegreeConvention,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut v = 2usize;
    while v <= VERTEX_CAP && convention.graph_degree(v) <= cutoff {
        let count = enumerate_trivalent(v)?.len();
        out.extend(std::iter::repeat(convention.graph_degree(v)).take(count));
        v += 2;
    }
    Ok(out)
}

/// The dimension series of the free graded-commutative algebra on the even
/// symplectic classes together with one generator per trivalent graph class,
/// computed by multiplying truncated geometric series.
pub fn poincare_series(cutoff: usize, convention: DegreeConvention) -> Result<GradedSeries> {
    if cutoff > 24 {
        return Err(Error::Invalid(format!("cutoff {cutoff} exceeds the supported bound 24")));
    }
    let mut gens = sp_class_degrees(cutoff);
    gens.extend(graph_generator_degrees(cutoff, convention)?);
    let mut s = GradedSeries::one(cutoff);
    for d in gens {
        s.mul_geometric(d);
    }
    Ok(s)
}

/// The sub-series on the symplectic classes alone.
pub fn sp_only_series(cutoff: usize) -> GradedSeries {
    let mut s = GradedSeries::one(cutoff);
    for d in sp_class_degrees(cutoff) {
        s.mul_geometric(d);
    }
    s
}

/// Independent oracle for series coefficients: counts monomials directly by
/// recursive enumeration of exponent vectors.
pub fn monomial_count_oracle(cutoff: usize, generator_degrees: &[usize]) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); cutoff + 1];
    fn rec(gens: &[usize], remaining: usize, used: usize, counts: &mut Vec<BigInt>) {
        if gens.is_empty() {
            counts[used] += BigInt::one();
            return;
        }
        let d = gens[0];
        let mut e = 0usize;
        while used + e * d <= remaining {
            rec(&gens[1..], remaining, used + e * d, counts);
            e += 1;
        }
    }
    rec(generator_degrees, cutoff, 0, &mut counts);
    counts
}

/// One row of the stable-cohomology comparison table.
#[derive(Debug, Clone)]
pub struct CohomologyRow {
    pub degree: usize,
    pub sp_dim: BigInt,
    pub full_dim: BigInt,
    pub target_dim: BigInt,
    /// For even degrees `2i`: whether some generator maps onto the `i`-th
    /// target class (the odd symplectic class when `i` is odd, a graph of
    /// order `i` otherwise).
    pub hits_target: Option<bool>,
}

/// Per-degree dimensions of the three stable rings plus the surjectivity
/// flags for the target classes of even degree.
pub fn cohomology_maps_table(
    cutoff: usize,
    convention: DegreeConvention,
) -> Result<Vec<CohomologyRow>> {
    let sp = sp_only_series(cutoff);
    let full = poincare_series(cutoff, convention)?;
    // the target is polynomial on one class in each even degree
    let target_gens: Vec<usize> = (1..).map(|i| 2 * i).take_while(|&d| d <= cutoff).collect();
    let mut target = GradedSeries::one(cutoff);
    for d in target_gens {
        target.mul_geometric(d);
    }
    let graph_orders: BTreeSet<usize> = {
        let mut s = BTreeSet::new();
        let mut v = 2usize;
        while v <= VERTEX_CAP && v <= cutoff {
            if !enumerate_trivalent(v)?.is_empty() {
                s.insert(v);
            }
            v += 2;
        }
        s
    };
    let mut rows = Vec::new();
    for degree in 0..=cutoff {
        let hits_target = if degree > 0 && degree % 2 == 0 {
            let i = degree / 2;
            Some(if i % 2 == 1 { true } else { graph_orders.contains(&i) })
        } else {
            None
        };
        rows.push(CohomologyRow {
            degree,
            sp_dim: sp.coefficients[degree].clone(),
            full_dim: full.coefficients[degree].clone(),
            target_dim: target.coefficients[degree].clone(),
            hits_target,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertex_classes() {
        let gs = enumerate_trivalent(2).unwrap();
        assert_eq!(gs.len(), 2);
        // theta: triple edge; dumbbell: two loops joined by an edge
        let theta = TrivalentGraph::new(vec![0, 0], vec![vec![0, 3], vec![3, 0]]).unwrap();
        let dumbbell = TrivalentGraph::new(vec![1, 1], vec![vec![0, 1], vec![1, 0]]).unwrap();
        let canon: BTreeSet<Vec<u8>> = gs.iter().map(|g| g.canonical_form()).collect();
        assert!(canon.contains(&theta.canonical_form()));
        assert!(canon.contains(&dumbbell.canonical_form()));
    }

    #[test]
    fn oracle_agreement() {
        assert_eq!(half_edge_pairing_count(2).unwrap(), 2);
        assert_eq!(
            half_edge_pairing_count(4).unwrap(),
            enumerate_trivalent(4).unwrap().len()
        );
    }

    #[test]
    fn canonical_idempotent_and_stable() {
        for v in [2usize, 4] {
            for g in enumerate_trivalent(v).unwrap() {
                let c = g.canonical_form();
                let rebuilt = TrivalentGraph::from_encoding(v, &c).unwrap();
                assert_eq!(rebuilt.canonical_form(), c);
                // relabelled copies map to the same canonical form
                let perm: Vec<usize> = (0..v).rev().collect();
                let relabelled = TrivalentGraph::new(
                    perm.iter().map(|&p| g.loops()[p]).collect(),
                    (0..v)
                        .map(|i| (0..v).map(|j| g.adj()[perm[i]][perm[j]]).collect())
                        .collect(),
                )
                .unwrap();
                assert_eq!(relabelled.canonical_form(), c);
            }
        }
    }

    #[test]
    fn enumerate_rejects_bad_input() {
        assert!(enumerate_trivalent(3).is_err());
        assert!(enumerate_trivalent(0).is_err());
        assert!(enumerate_trivalent(10).is_err());
    }

    #[test]
    fn record_round_trip() {
        for g in enumerate_trivalent(4).unwrap() {
            let rec = g.to_record();
            let back = TrivalentGraph::parse_record(&rec).unwrap();
            assert_eq!(back.canonical_form(), g.canonical_form());
        }
        assert!(TrivalentGraph::parse_record("nonsense").is_err());
    }

    #[test]
    fn series_degree_two() {
        // degree 0 coefficient is 1; with the order convention the degree-2
        // generators are the first symplectic class plus the two 2-vertex
        // graphs
        let s = poincare_series(10, DegreeConvention::Order).unwrap();
        assert_eq!(s.coefficients[0], BigInt::one());
        assert_eq!(s.coefficients[2], BigInt::from(3));
        // symplectic subseries: degree 2 is one class, degree 6 counts c1^3
        // and c3
        let sp = sp_only_series(10);
        assert_eq!(sp.coefficients[2], BigInt::one());
        assert_eq!(sp.coefficients[6], BigInt::from(2));
    }

    #[test]
    fn series_matches_oracle() {
        for conv in [DegreeConvention::Order, DegreeConvention::TwiceOrder] {
            let s = poincare_series(10, conv).unwrap();
            let mut gens = sp_class_degrees(10);
            gens.extend(graph_generator_degrees(10, conv).unwrap());
            assert_eq!(s.coefficients, monomial_count_oracle(10, &gens));
        }
    }

    #[test]
    fn sp_series_embeds() {
        for conv in [DegreeConvention::Order, DegreeConvention::TwiceOrder] {
            let s = poincare_series(10, conv).unwrap();
            assert!(sp_only_series(10).le(&s));
        }
    }

    #[test]
    fn maps_table() {
        let rows = cohomology_maps_table(8, DegreeConvention::TwiceOrder).unwrap();
        assert_eq!(rows[2].target_dim, BigInt::one());
        assert_eq!(rows[2].hits_target, Some(true));
        assert_eq!(rows[4].hits_target, Some(true)); // theta hits e_2
        // odd degrees vanish everywhere
        for d in [1usize, 3, 5, 7] {
            assert!(rows[d].sp_dim.is_zero());
            assert!(rows[d].full_dim.is_zero());
            assert!(rows[d].target_dim.is_zero());
        }
    }

    #[test]
    fn convention_parsing() {
        assert_eq!("order".parse::<DegreeConvention>().unwrap(), DegreeConvention::Order);
        assert_eq!(
            "twice-order".parse::<DegreeConvention>().unwrap(),
            DegreeConvention::TwiceOrder
        );
        assert!("half-order".parse::<DegreeConvention>().is_err());
    }
}

#[doc(hidden)]
pub fn raw_candidate_count(v: usize) -> usize {
    let mut count = 0usize;
    for nloops in 0..=v {
        let mut loops = vec![0u8; v];
        for l in loops.iter_mut().take(nloops) {
            *l = 1;
        }
        let residual: Vec<u8> = loops.iter().map(|&l| 3 - 2 * l).collect();
        let mut adj = vec![vec![0u8; v]; v];
        search_adjacency(v, &loops, &residual, &mut adj, 0, 1, &mut |_| {
            count += 1;
        });
    }
    count
}
