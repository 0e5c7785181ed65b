//! Red/blue 3-uniform cliques.
//!
//! A red/blue clique is a 2-coloring of all triples of 0..n: red triples are
//! the ones whose three convex sets share a point, blue the ones that do not.
//! Only the blue side is stored; red is the complement. Triples are indexed
//! in the combinatorial number system (colex), so edge bitsets are canonical
//! across runs.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// Binomial coefficient for small arguments.
pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Visit all k-subsets of 0..n in lexicographic order.
pub fn for_each_combination<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k - 1;
        while idx[i] == i + n - k {
            if i == 0 {
                return;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RedBlueError {
    #[error("canonicalForm limited to n <= 10, got {0}")]
    CanonicalFormTooLarge(usize),
    #[error("vertex {0} out of range for n = {1}")]
    VertexOutOfRange(usize, usize),
    #[error("triple vertices must be distinct: {0:?}")]
    DegenerateTriple([usize; 3]),
    #[error("malformed document: {0}")]
    BadDocument(String),
    #[error("red/blue cliques are defined for 3 <= n <= 64, got {0}")]
    BadOrder(usize),
}

/// Three distinct vertices, stored strictly increasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triple(pub [usize; 3]);

impl Triple {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        assert!(v[0] < v[1] && v[1] < v[2], "triple vertices must be distinct");
        Triple(v)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn intersection_size(&self, other: &Triple) -> usize {
        self.0.iter().filter(|v| other.contains(**v)).count()
    }

    /// Colex rank: C(c,3) + C(b,2) + C(a,1).
    pub fn rank(&self) -> usize {
        let [a, b, c] = self.0;
        (binom(c, 3) + binom(b, 2) + binom(a, 1)) as usize
    }

    /// Inverse of [`Triple::rank`].
    pub fn unrank(mut r: usize) -> Self {
        let mut c = 2;
        while binom(c + 1, 3) as usize <= r {
            c += 1;
        }
        r -= binom(c, 3) as usize;
        let mut b = 1;
        while binom(b + 1, 2) as usize <= r {
            b += 1;
        }
        r -= binom(b, 2) as usize;
        Triple([r, b, c])
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Set of triples over a fixed n, as a bitset in colex rank order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleSet {
    n: usize,
    words: Vec<u64>,
}

impl TripleSet {
    pub fn empty(n: usize) -> Self {
        let bits = binom(n, 3) as usize;
        TripleSet {
            n,
            words: vec![0; bits.div_ceil(64).max(1)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, t: Triple) {
        let r = t.rank();
        self.words[r / 64] |= 1u64 << (r % 64);
    }

    pub fn contains(&self, t: &Triple) -> bool {
        let r = t.rank();
        self.words[r / 64] >> (r % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(Triple::unrank(wi * 64 + b))
                }
            })
        })
    }

    /// Lowercase hex of the bitset bytes, least significant rank first.
    pub fn to_hex(&self) -> String {
        let bits = binom(self.n, 3) as usize;
        let nbytes = bits.div_ceil(8);
        let mut s = String::with_capacity(nbytes * 2);
        for i in 0..nbytes {
            let byte = (self.words[i / 8] >> ((i % 8) * 8)) as u8;
            s.push_str(&format!("{byte:02x}"));
        }
        s
    }
}

/// A 3-uniform hypergraph on vertex set 0..n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph3 {
    edges: TripleSet,
}

impl Hypergraph3 {
    pub fn new(n: usize, triples: &[[usize; 3]]) -> Result<Self, RedBlueError> {
        let mut edges = TripleSet::empty(n);
        for t in triples {
            let mut v = *t;
            v.sort_unstable();
            if v[0] == v[1] || v[1] == v[2] {
                return Err(RedBlueError::DegenerateTriple(*t));
            }
            if v[2] >= n {
                return Err(RedBlueError::VertexOutOfRange(v[2], n));
            }
            edges.insert(Triple(v));
        }
        Ok(Hypergraph3 { edges })
    }

    pub fn from_set(edges: TripleSet) -> Self {
        Hypergraph3 { edges }
    }

    pub fn n(&self) -> usize {
        self.edges.n()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &TripleSet {
        &self.edges
    }

    pub fn contains_edge(&self, t: &Triple) -> bool {
        self.edges.contains(t)
    }

    pub fn edge_list(&self) -> Vec<Triple> {
        self.edges.iter().collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|t| t.contains(v)).count()
    }

    /// Some 4 vertices whose 4 triples are all edges, if any.
    pub fn find_k4(&self) -> Option<[usize; 4]> {
        let n = self.n();
        let mut found = None;
        for_each_combination(n, 4, |s| {
            if found.is_some() {
                return;
            }
            let all = [
                Triple::new(s[0], s[1], s[2]),
                Triple::new(s[0], s[1], s[3]),
                Triple::new(s[0], s[2], s[3]),
                Triple::new(s[1], s[2], s[3]),
            ]
            .iter()
            .all(|t| self.contains_edge(t));
            if all {
                found = Some([s[0], s[1], s[2], s[3]]);
            }
        });
        found
    }

    /// Transversal number: least size of a vertex set meeting every edge;
    /// exhaustive over subsets of increasing size.
    pub fn tau(&self) -> usize {
        if self.edges.is_empty() {
            return 0;
        }
        let n = self.n();
        let masks = self.vertex_edge_masks();
        let all: Vec<u64> = self.edges.words.clone();
        for size in 1..=n {
            let mut hit = false;
            for_each_combination(n, size, |s| {
                if hit {
                    return;
                }
                let mut cover = vec![0u64; all.len()];
                for &v in s {
                    for (i, w) in masks[v].iter().enumerate() {
                        cover[i] |= w;
                    }
                }
                if all.iter().zip(&cover).all(|(a, c)| a & !c == 0) {
                    hit = true;
                }
            });
            if hit {
                return size;
            }
        }
        unreachable!("the full vertex set is a transversal")
    }

    /// For each vertex, the bitset of edge ranks containing it.
    fn vertex_edge_masks(&self) -> Vec<Vec<u64>> {
        let n = self.n();
        let mut masks = vec![vec![0u64; self.edges.words.len()]; n];
        for t in self.edges.iter() {
            let r = t.rank();
            for &v in &t.vertices() {
                masks[v][r / 64] |= 1u64 << (r % 64);
            }
        }
        masks
    }

    /// Lexicographically least edge set over all vertex relabelings.
    /// Two hypergraphs are isomorphic iff their canonical forms agree.
    /// Limited to n <= 10 (the catalog's largest member).
    pub fn canonical_form(&self) -> Result<CanonicalForm, RedBlueError> {
        let n = self.n();
        if n > 10 {
            return Err(RedBlueError::CanonicalFormTooLarge(n));
        }
        let best = canonical_u128(n, self.as_u128());
        Ok(CanonicalForm { n, mask: best })
    }

    pub fn as_u128(&self) -> u128 {
        let mut m: u128 = 0;
        for t in self.edges.iter() {
            m |= 1u128 << t.rank();
        }
        m
    }
}

/// Canonical relabeling invariant of a hypergraph on n <= 10 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub mask: u128,
}

impl CanonicalForm {
    /// Lowercase hex of the canonical edge bitset.
    pub fn to_hex(&self) -> String {
        let bits = binom(self.n, 3) as usize;
        let nbytes = bits.div_ceil(8);
        let mut s = String::with_capacity(nbytes * 2);
        for i in 0..nbytes {
            s.push_str(&format!("{:02x}", (self.mask >> (i * 8)) as u8));
        }
        s
    }
}

/// Edge-sequence order: the set whose sorted rank sequence is
/// lexicographically least wins. For sets of equal size that is decided by
/// the lowest differing rank: the set containing it is the smaller one.
pub(crate) fn seq_less(a: u128, b: u128) -> bool {
    if a == b {
        return false;
    }
    let low = (a ^ b).trailing_zeros();
    a >> low & 1 == 1
}

/// Minimum edge mask over all relabelings, by backtracking over label
/// assignments. Labels are assigned in order; the edges induced by the first
/// p labels occupy exactly the ranks below C(p,3) thanks to the colex
/// indexing, so the partial image can be compared against the best known
/// mask and worse branches cut. `cur` carries the partial image down the
/// tree and only the triples through the newest label are added per step.
pub(crate) fn canonical_u128(n: usize, mask: u128) -> u128 {
    #[allow(clippy::too_many_arguments)]
    fn descend(
        n: usize,
        mask: u128,
        assigned: &mut Vec<usize>,
        used: &mut [bool],
        cur: u128,
        best: &mut u128,
    ) {
        let p = assigned.len();
        if p == n {
            if seq_less(cur, *best) {
                *best = cur;
            }
            return;
        }
        for old in 0..n {
            if used[old] {
                continue;
            }
            let mut next = cur;
            for a in 0..p {
                for b in (a + 1)..p {
                    let t_old = Triple::new(assigned[a], assigned[b], old);
                    if mask >> t_old.rank() & 1 == 1 {
                        next |= 1u128 << Triple::new(a, b, p).rank();
                    }
                }
            }
            // next lives entirely below C(p+1,3); compare with best there
            let limit = binom(p + 1, 3) as usize;
            let keep: u128 = if limit >= 128 { !0 } else { (1u128 << limit) - 1 };
            let best_p = *best & keep;
            if next == best_p || seq_less(next, best_p) {
                assigned.push(old);
                used[old] = true;
                descend(n, mask, assigned, used, next, best);
                used[old] = false;
                assigned.pop();
            }
        }
    }
    let mut best = mask;
    let mut assigned = Vec::with_capacity(n);
    let mut used = vec![false; n];
    descend(n, mask, &mut assigned, &mut used, 0, &mut best);
    best
}

/// A 2-coloring of all triples of 0..n; `blue` is stored, red is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedBlueClique {
    blue: Hypergraph3,
}

/// JSON document shared by `RedBlueClique` and `Hypergraph3`.
#[derive(Serialize, Deserialize)]
struct RbDoc {
    n: usize,
    blue: Vec<[usize; 3]>,
}

impl RedBlueClique {
    pub fn new(blue: Hypergraph3) -> Self {
        RedBlueClique { blue }
    }

    pub fn from_triples(n: usize, blue: &[[usize; 3]]) -> Result<Self, RedBlueError> {
        if !(3..=64).contains(&n) {
            return Err(RedBlueError::BadOrder(n));
        }
        Ok(RedBlueClique::new(Hypergraph3::new(n, blue)?))
    }

    pub fn all_red(n: usize) -> Self {
        RedBlueClique::new(Hypergraph3::new(n, &[]).expect("empty edge set"))
    }

    pub fn n(&self) -> usize {
        self.blue.n()
    }

    pub fn blue(&self) -> &Hypergraph3 {
        &self.blue
    }

    pub fn is_blue(&self, t: &Triple) -> bool {
        self.blue.contains_edge(t)
    }

    pub fn is_red(&self, t: &Triple) -> bool {
        !self.is_blue(t)
    }

    /// All triples inside `s` are red.
    pub fn is_red_clique(&self, s: &[usize]) -> bool {
        for i in 0..s.len() {
            for j in (i + 1)..s.len() {
                for k in (j + 1)..s.len() {
                    if self.is_blue(&Triple::new(s[i], s[j], s[k])) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All vertex sets of `size` whose triples are all red, lexicographic.
    pub fn red_cliques(&self, size: usize) -> Vec<Vec<usize>> {
        assert!(size >= 3, "red cliques of interest have size >= 3");
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::with_capacity(size);
        self.red_clique_dfs(&mut cur, size, &mut |s| out.push(s.to_vec()));
        out
    }

    fn red_clique_dfs(&self, cur: &mut Vec<usize>, size: usize, f: &mut impl FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        let start = cur.last().map_or(0, |v| v + 1);
        let remaining = size - cur.len();
        let n = self.n();
        if start + remaining > n {
            return;
        }
        for v in start..=(n - remaining) {
            if self.extends_red(cur, v) {
                cur.push(v);
                self.red_clique_dfs(cur, size, f);
                cur.pop();
            }
        }
    }

    fn extends_red(&self, cur: &[usize], v: usize) -> bool {
        for i in 0..cur.len() {
            for j in (i + 1)..cur.len() {
                if self.is_blue(&Triple::new(cur[i], cur[j], v)) {
                    return false;
                }
            }
        }
        true
    }

    /// A 2-vertex set meeting every red clique of `clique_size`, if one
    /// exists; ties broken lexicographically.
    pub fn find_pair_transversal(&self, clique_size: usize) -> Option<(usize, usize)> {
        let cliques: Vec<u64> = self
            .red_cliques(clique_size)
            .iter()
            .map(|s| s.iter().fold(0u64, |m, v| m | 1 << v))
            .collect();
        let n = self.n();
        for x in 0..n {
            for y in (x + 1)..n {
                let pair = 1u64 << x | 1u64 << y;
                if cliques.iter().all(|c| c & pair != 0) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Re-check helper for transversal certificates.
    pub fn is_pair_transversal(&self, pair: (usize, usize), clique_size: usize) -> bool {
        let pm = 1u64 << pair.0 | 1u64 << pair.1;
        self.red_cliques(clique_size)
            .iter()
            .all(|s| s.iter().fold(0u64, |m, v| m | 1 << v) & pm != 0)
    }

    /// Three pairwise intersecting blue edges on exactly five vertices with
    /// no common vertex: two edges sharing a pair {a,b} with tips x, y plus
    /// a blue edge {x, y, z} for a fifth vertex z.
    pub fn detect_blue_c3(&self) -> Option<Certificate> {
        let blue: Vec<Triple> = self.blue.edge_list();
        for (i, e1) in blue.iter().enumerate() {
            for e2 in blue.iter().skip(i + 1) {
                if e1.intersection_size(e2) != 2 {
                    continue;
                }
                let shared: Vec<usize> = e1
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|v| e2.contains(*v))
                    .collect();
                let x = e1
                    .vertices()
                    .iter()
                    .copied()
                    .find(|v| !e2.contains(*v))
                    .unwrap();
                let y = e2
                    .vertices()
                    .iter()
                    .copied()
                    .find(|v| !e1.contains(*v))
                    .unwrap();
                for z in 0..self.n() {
                    if z == x || z == y || shared.contains(&z) {
                        continue;
                    }
                    let e3 = Triple::new(x, y, z);
                    if self.is_blue(&e3) {
                        return Some(Certificate::BlueC3 {
                            triples: [*e1, *e2, e3],
                        });
                    }
                }
            }
        }
        None
    }

    /// A chordless circular k-cycle: k vertices in circular order whose k
    /// consecutive triples are blue, with no other blue triple inside the
    /// ring's vertex set.
    pub fn detect_blue_circular_cycle(&self, k: usize) -> Option<Certificate> {
        assert!(k >= 6, "circular cycles of interest have k >= 6");
        assert!(k <= self.n());
        let n = self.n();
        let mut result = None;
        for_each_combination(n, k, |subset| {
            if result.is_some() {
                return;
            }
            // chordless demands exactly k blue triples within the subset
            let mut blue_inside = 0;
            for a in 0..k {
                for b in (a + 1)..k {
                    for c in (b + 1)..k {
                        if self.is_blue(&Triple::new(subset[a], subset[b], subset[c])) {
                            blue_inside += 1;
                        }
                    }
                }
            }
            if blue_inside != k {
                return;
            }
            result = self.ring_order(subset, k);
        });
        result
    }

    fn ring_order(&self, subset: &[usize], k: usize) -> Option<Certificate> {
        // fix the least vertex first; quotient reflections by demanding the
        // second entry be smaller than the last
        let rest: Vec<usize> = subset[1..].to_vec();
        let mut perm: Vec<usize> = (0..rest.len()).collect();
        loop {
            if perm[0] < perm[rest.len() - 1] {
                let ring: Vec<usize> = std::iter::once(subset[0])
                    .chain(perm.iter().map(|&i| rest[i]))
                    .collect();
                if (0..k).all(|i| {
                    self.is_blue(&Triple::new(ring[i], ring[(i + 1) % k], ring[(i + 2) % k]))
                }) {
                    return Some(Certificate::BlueCircularCycle { k, ring });
                }
            }
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }

    /// Violation of the shared-vertex exchange property: blue edges e, e'
    /// with e ∩ e' = {c} such that every triple with two vertices in e and
    /// one in e' \ {c} is red. Impossible for a convex clique.
    pub fn check_h2(&self) -> Option<Certificate> {
        let blue: Vec<Triple> = self.blue.edge_list();
        for e in &blue {
            for ep in &blue {
                if e == ep || e.intersection_size(ep) != 1 {
                    continue;
                }
                let c = e.vertices().into_iter().find(|v| ep.contains(*v)).unwrap();
                if self.h2_candidates_all_red(e, ep, c) {
                    return Some(Certificate::H2Violation {
                        e: *e,
                        e_prime: *ep,
                        shared: c,
                    });
                }
            }
        }
        None
    }

    fn h2_candidates_all_red(&self, e: &Triple, ep: &Triple, c: usize) -> bool {
        let ev = e.vertices();
        let others: Vec<usize> = ep.vertices().into_iter().filter(|&v| v != c).collect();
        for i in 0..3 {
            for j in (i + 1)..3 {
                for &w in &others {
                    if self.is_blue(&Triple::new(ev[i], ev[j], w)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Violation of the disjoint exchange property: disjoint blue edges
    /// e, e' such that all 18 triples with two vertices in one edge and one
    /// in the other are red. Impossible for a convex clique.
    pub fn check_h1(&self) -> Option<Certificate> {
        let blue: Vec<Triple> = self.blue.edge_list();
        for (i, e) in blue.iter().enumerate() {
            for ep in blue.iter().skip(i + 1) {
                if e.intersection_size(ep) != 0 {
                    continue;
                }
                if self.h1_candidates_all_red(e, ep) && self.h1_candidates_all_red(ep, e) {
                    return Some(Certificate::H1Violation {
                        e: *e,
                        e_prime: *ep,
                    });
                }
            }
        }
        None
    }

    fn h1_candidates_all_red(&self, e: &Triple, ep: &Triple) -> bool {
        let ev = e.vertices();
        for i in 0..3 {
            for j in (i + 1)..3 {
                for w in ep.vertices() {
                    if self.is_blue(&Triple::new(ev[i], ev[j], w)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// f-vector of the red clique complex: entry j counts the faces with
    /// j+1 vertices (singletons and pairs are always faces).
    pub fn f_vector(&self) -> FVector {
        let mut counts: Vec<u64> = Vec::new();
        let mut cur = Vec::new();
        self.count_red_cliques(&mut cur, &mut counts);
        FVector(counts)
    }

    fn count_red_cliques(&self, cur: &mut Vec<usize>, counts: &mut Vec<u64>) {
        if !cur.is_empty() {
            let idx = cur.len() - 1;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        let start = cur.last().map_or(0, |v| v + 1);
        for v in start..self.n() {
            if self.extends_red(cur, v) {
                cur.push(v);
                self.count_red_cliques(cur, counts);
                cur.pop();
            }
        }
    }

    /// All faces of the red clique complex as vertex bitmasks (n <= 32).
    pub fn red_complex_faces(&self) -> Vec<u32> {
        assert!(self.n() <= 32);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.face_dfs(&mut cur, 0, &mut out);
        out
    }

    fn face_dfs(&self, cur: &mut Vec<usize>, mask: u32, out: &mut Vec<u32>) {
        if mask != 0 {
            out.push(mask);
        }
        let start = cur.last().map_or(0, |v| v + 1);
        for v in start..self.n() {
            if self.extends_red(cur, v) {
                cur.push(v);
                self.face_dfs(cur, mask | 1 << v, out);
                cur.pop();
            }
        }
    }

    /// Deterministic digest of the red clique complex, used to pin
    /// not-2-collapsible certificates to their complex.
    pub fn complex_fingerprint(&self) -> String {
        let mut faces = self.red_complex_faces();
        faces.sort_unstable();
        let mut h: u64 = 0xcbf29ce484222325;
        for f in faces {
            for byte in f.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        format!("{h:016x}")
    }

    /// Whether the red clique complex collapses to nothing by elementary
    /// 2-collapses: repeatedly remove a face of at most 2 vertices contained
    /// in a unique maximal face, together with everything above it.
    /// Exhaustive backtracking over collapse orders, memoized on failed
    /// complex states.
    pub fn is_two_collapsible(&self) -> bool {
        let mut active = self.red_complex_faces();
        active.sort_unstable();
        let n = self.n();
        let mut candidates: Vec<u32> = Vec::new();
        for v in 0..n {
            candidates.push(1u32 << v);
        }
        for a in 0..n {
            for b in (a + 1)..n {
                candidates.push(1u32 << a | 1u32 << b);
            }
        }
        let mut failed: HashSet<Vec<u32>> = HashSet::new();
        collapse_search(&mut active, &candidates, &mut failed)
    }

    /// The certificate battery: detectors in fixed priority order.
    ///
    /// The blue 3-cycle stage deserves a note. A 3-cycle among the blue
    /// edges is NOT a non-convexity witness on its own (convex families can
    /// produce one as a partial hypergraph); what it guarantees, on a
    /// 7-clique, is that the two vertices outside its span form a
    /// transversal. The stage therefore only ever confirms that pair, and
    /// falls through otherwise.
    pub fn certificate_battery(&self, clique_size: usize) -> Certificate {
        if let Some(pair) = self.find_pair_transversal(clique_size) {
            return Certificate::Transversal { pair };
        }
        if let Some(Certificate::BlueC3 { triples }) = self.detect_blue_c3() {
            let span: HashSet<usize> = triples.iter().flat_map(|t| t.vertices()).collect();
            let outside: Vec<usize> = (0..self.n()).filter(|v| !span.contains(v)).collect();
            if outside.len() == 2
                && self.is_pair_transversal((outside[0], outside[1]), clique_size)
            {
                return Certificate::Transversal {
                    pair: (outside[0], outside[1]),
                };
            }
        }
        if let Some(cert) = self.check_h1() {
            return cert;
        }
        if let Some(cert) = self.check_h2() {
            return cert;
        }
        if !self.is_two_collapsible() {
            return Certificate::NotTwoCollapsible {
                fingerprint: self.complex_fingerprint(),
            };
        }
        Certificate::Unresolved
    }

    pub fn to_json(&self) -> String {
        let mut blue: Vec<[usize; 3]> = self.blue.edges.iter().map(|t| t.vertices()).collect();
        blue.sort_unstable();
        serde_json::to_string_pretty(&RbDoc { n: self.n(), blue }).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, RedBlueError> {
        let doc: RbDoc =
            serde_json::from_str(s).map_err(|e| RedBlueError::BadDocument(e.to_string()))?;
        RedBlueClique::from_triples(doc.n, &doc.blue)
    }
}

fn collapse_search(
    active: &mut Vec<u32>,
    candidates: &[u32],
    failed: &mut HashSet<Vec<u32>>,
) -> bool {
    if active.is_empty() {
        return true;
    }
    if failed.contains(active) {
        return false;
    }
    let mut tried_any = false;
    for ci in 0..candidates.len() {
        let sigma = candidates[ci];
        if active.binary_search(&sigma).is_err() {
            continue;
        }
        // union of all faces containing sigma; sigma is free when this union
        // is itself a face, the unique maximal one above it
        let mut union: u32 = 0;
        for &f in active.iter() {
            if f & sigma == sigma {
                union |= f;
            }
        }
        if active.binary_search(&union).is_err() {
            continue;
        }
        tried_any = true;
        let removed: Vec<u32> = active.iter().copied().filter(|f| f & sigma == sigma).collect();
        active.retain(|f| f & sigma != sigma);
        if collapse_search(active, candidates, failed) {
            return true;
        }
        active.extend(removed);
        active.sort_unstable();
    }
    if tried_any {
        failed.insert(active.clone());
    }
    false
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n <= 1 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Face counts of a red clique complex by size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// Compare ignoring trailing zero entries.
    pub fn eq_mod_trailing_zeros(&self, other: &[u64]) -> bool {
        trim(&self.0) == trim(other)
    }

    /// Entries padded with zeros up to `len`.
    pub fn padded(&self, len: usize) -> Vec<u64> {
        let mut v = self.0.clone();
        while v.len() < len {
            v.push(0);
        }
        v
    }
}

fn trim(v: &[u64]) -> &[u64] {
    let mut end = v.len();
    while end > 0 && v[end - 1] == 0 {
        end -= 1;
    }
    &v[..end]
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Machine-checkable outcome of the battery: a transversal pair, a named
/// witness that the coloring cannot come from convex sets, or the pattern
/// findings of the standalone detectors. A blue 3-cycle or circular cycle
/// payload records the pattern found; on its own it does not witness
/// non-convexity (convex families can contain a 3-cycle among their blue
/// triples).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    Transversal {
        pair: (usize, usize),
    },
    BlueC3 {
        triples: [Triple; 3],
    },
    BlueCircularCycle {
        k: usize,
        ring: Vec<usize>,
    },
    H2Violation {
        e: Triple,
        e_prime: Triple,
        shared: usize,
    },
    H1Violation {
        e: Triple,
        e_prime: Triple,
    },
    NotTwoCollapsible {
        fingerprint: String,
    },
    Unresolved,
}

impl Certificate {
    pub fn tag(&self) -> CertificateTag {
        match self {
            Certificate::Transversal { .. } => CertificateTag::Transversal,
            Certificate::BlueC3 { .. } => CertificateTag::BlueC3,
            Certificate::BlueCircularCycle { .. } => CertificateTag::BlueCircularCycle,
            Certificate::H2Violation { .. } => CertificateTag::H2Violation,
            Certificate::H1Violation { .. } => CertificateTag::H1Violation,
            Certificate::NotTwoCollapsible { .. } => CertificateTag::NotTwoCollapsible,
            Certificate::Unresolved => CertificateTag::Unresolved,
        }
    }

    /// Re-derive the certificate's defining condition from the clique.
    pub fn recheck(&self, rb: &RedBlueClique, clique_size: usize) -> bool {
        match self {
            Certificate::Transversal { pair } => rb.is_pair_transversal(*pair, clique_size),
            Certificate::BlueC3 { triples } => {
                let [e1, e2, e3] = triples;
                let span: HashSet<usize> = triples.iter().flat_map(|t| t.vertices()).collect();
                triples.iter().all(|t| rb.is_blue(t))
                    && e1.intersection_size(e2) >= 1
                    && e1.intersection_size(e3) >= 1
                    && e2.intersection_size(e3) >= 1
                    && span.len() == 5
                    && (0..rb.n()).all(|v| !(e1.contains(v) && e2.contains(v) && e3.contains(v)))
            }
            Certificate::BlueCircularCycle { k, ring } => {
                let k = *k;
                if ring.len() != k {
                    return false;
                }
                let consecutive_blue = (0..k).all(|i| {
                    rb.is_blue(&Triple::new(ring[i], ring[(i + 1) % k], ring[(i + 2) % k]))
                });
                let mut blue_inside = 0;
                for a in 0..k {
                    for b in (a + 1)..k {
                        for c in (b + 1)..k {
                            if rb.is_blue(&Triple::new(ring[a], ring[b], ring[c])) {
                                blue_inside += 1;
                            }
                        }
                    }
                }
                consecutive_blue && blue_inside == k
            }
            Certificate::H2Violation { e, e_prime, shared } => {
                rb.is_blue(e)
                    && rb.is_blue(e_prime)
                    && e.intersection_size(e_prime) == 1
                    && e.contains(*shared)
                    && e_prime.contains(*shared)
                    && rb.h2_candidates_all_red(e, e_prime, *shared)
            }
            Certificate::H1Violation { e, e_prime } => {
                rb.is_blue(e)
                    && rb.is_blue(e_prime)
                    && e.intersection_size(e_prime) == 0
                    && rb.h1_candidates_all_red(e, e_prime)
                    && rb.h1_candidates_all_red(e_prime, e)
            }
            Certificate::NotTwoCollapsible { fingerprint } => {
                *fingerprint == rb.complex_fingerprint() && !rb.is_two_collapsible()
            }
            Certificate::Unresolved => false,
        }
    }
}

/// Tag of a [`Certificate`], used in expected-outcome tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateTag {
    Transversal,
    BlueC3,
    BlueCircularCycle,
    H2Violation,
    H1Violation,
    NotTwoCollapsible,
    Unresolved,
}

impl fmt::Display for CertificateTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertificateTag::Transversal => "Transversal",
            CertificateTag::BlueC3 => "BlueC3",
            CertificateTag::BlueCircularCycle => "BlueCircularCycle",
            CertificateTag::H2Violation => "H2Violation",
            CertificateTag::H1Violation => "H1Violation",
            CertificateTag::NotTwoCollapsible => "NotTwoCollapsible",
            CertificateTag::Unresolved => "Unresolved",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Hypergraph3 {
        Hypergraph3::new(
            7,
            &[
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .unwrap()
    }

    /// Blue K4 on {0,1,2,3} plus the blue edge {4,5,6}.
    fn hypergraph_a() -> RedBlueClique {
        RedBlueClique::from_triples(
            7,
            &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3], [4, 5, 6]],
        )
        .unwrap()
    }

    fn c7_ring() -> RedBlueClique {
        let edges: Vec<[usize; 3]> = (0..7)
            .map(|i| {
                let mut t = [i, (i + 1) % 7, (i + 2) % 7];
                t.sort_unstable();
                t
            })
            .collect();
        RedBlueClique::from_triples(7, &edges).unwrap()
    }

    #[test]
    fn triple_rank_round_trip() {
        let n = 9;
        let mut seen = std::collections::HashSet::new();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let t = Triple::new(a, b, c);
                    let r = t.rank();
                    assert!(r < binom(n, 3) as usize);
                    assert_eq!(Triple::unrank(r), t);
                    assert!(seen.insert(r), "ranks are distinct");
                }
            }
        }
    }

    #[test]
    fn tau_of_trivial_hypergraphs() {
        assert_eq!(Hypergraph3::new(5, &[]).unwrap().tau(), 0);
        assert_eq!(Hypergraph3::new(5, &[[0, 1, 2]]).unwrap().tau(), 1);
    }

    #[test]
    fn tau_of_fano_is_three() {
        let f = fano();
        // independent oracle: no pair of points meets all seven lines
        let lines: Vec<Triple> = f.edge_list();
        for x in 0..7 {
            for y in (x + 1)..7 {
                let misses = lines
                    .iter()
                    .any(|l| !l.contains(x) && !l.contains(y));
                assert!(misses, "pair ({x},{y}) would be a 2-transversal");
            }
        }
        assert_eq!(f.tau(), 3);
    }

    #[test]
    fn red_cliques_of_all_red_k7() {
        let rb = RedBlueClique::all_red(7);
        assert_eq!(rb.red_cliques(4).len(), 35);
    }

    #[test]
    fn red_cliques_of_all_blue() {
        let mut blue = Vec::new();
        for a in 0..7 {
            for b in (a + 1)..7 {
                for c in (b + 1)..7 {
                    blue.push([a, b, c]);
                }
            }
        }
        let rb = RedBlueClique::from_triples(7, &blue).unwrap();
        assert!(rb.red_cliques(4).is_empty());
    }

    #[test]
    fn red_cliques_of_hypergraph_a() {
        let rb = hypergraph_a();
        let cliques = rb.red_cliques(4);
        // oracle: brute force over all 35 four-subsets with a direct
        // blue-membership test on the explicit edge list
        let blue: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3], [4, 5, 6]];
        let mut expected = Vec::new();
        for_each_combination(7, 4, |s| {
            let mut ok = true;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    for k in (j + 1)..4 {
                        let t = [s[i], s[j], s[k]];
                        if blue.contains(&t) {
                            ok = false;
                        }
                    }
                }
            }
            if ok {
                expected.push(s.to_vec());
            }
        });
        assert_eq!(expected.len(), 18);
        assert_eq!(cliques, expected);
        // every red 4-clique has two vertices in the blue K4 and two outside
        for c in &cliques {
            let inside = c.iter().filter(|v| **v <= 3).count();
            assert_eq!(inside, 2);
        }
    }

    #[test]
    fn pair_transversal_of_hypergraph_a() {
        let rb = hypergraph_a();
        assert_eq!(rb.find_pair_transversal(4), Some((4, 5)));
    }

    #[test]
    fn pair_transversal_of_all_blue_is_first_pair() {
        let mut blue = Vec::new();
        for a in 0..7 {
            for b in (a + 1)..7 {
                for c in (b + 1)..7 {
                    blue.push([a, b, c]);
                }
            }
        }
        let rb = RedBlueClique::from_triples(7, &blue).unwrap();
        // no red K4 exists, so the condition is vacuous
        assert_eq!(rb.find_pair_transversal(4), Some((0, 1)));
    }

    #[test]
    fn blue_c3_detected_by_definition() {
        // {0,1,2} and {0,1,3} share the pair {0,1}; {2,3,4} closes a 3-cycle
        let rb = RedBlueClique::from_triples(5, &[[0, 1, 2], [0, 1, 3], [2, 3, 4]]).unwrap();
        let cert = rb.detect_blue_c3().expect("definition met");
        assert!(cert.recheck(&rb, 4));
    }

    #[test]
    fn no_blue_c3_in_fano() {
        // any three pairwise intersecting lines of the Fano plane span
        // at least 6 points
        let rb = RedBlueClique::new(fano());
        assert!(rb.detect_blue_c3().is_none());
    }

    #[test]
    fn no_blue_c3_without_edges() {
        let rb = RedBlueClique::all_red(7);
        assert!(rb.detect_blue_c3().is_none());
    }

    #[test]
    fn circular_cycle_detection() {
        let rb = c7_ring();
        let cert = rb.detect_blue_circular_cycle(7).expect("the 7-ring");
        assert!(cert.recheck(&rb, 4));
        // an extra chord breaks chordlessness
        let mut edges: Vec<[usize; 3]> = (0..7)
            .map(|i| {
                let mut t = [i, (i + 1) % 7, (i + 2) % 7];
                t.sort_unstable();
                t
            })
            .collect();
        edges.push([0, 2, 4]);
        let chord = RedBlueClique::from_triples(7, &edges).unwrap();
        assert!(chord.detect_blue_circular_cycle(7).is_none());
        assert!(RedBlueClique::all_red(7).detect_blue_circular_cycle(7).is_none());
    }

    #[test]
    fn h2_violation_on_two_sharing_edges() {
        // blue = {0,1,2}, {2,3,4} sharing c = 2; the 6 candidate triples are
        // all red by construction
        let rb = RedBlueClique::from_triples(5, &[[0, 1, 2], [2, 3, 4]]).unwrap();
        let cert = rb.check_h2().expect("violation");
        assert!(cert.recheck(&rb, 4));
        match cert {
            Certificate::H2Violation { shared, .. } => assert_eq!(shared, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn h2_absent_on_all_red() {
        assert!(RedBlueClique::all_red(6).check_h2().is_none());
    }

    #[test]
    fn h1_violation_on_disjoint_pair() {
        // all 18 candidates red by construction
        let rb = RedBlueClique::from_triples(6, &[[0, 1, 2], [3, 4, 5]]).unwrap();
        let cert = rb.check_h1().expect("violation");
        assert!(cert.recheck(&rb, 4));
    }

    #[test]
    fn h1_not_violated_when_candidate_is_blue() {
        // {0,1,3} has two vertices in {0,1,2} and one in {3,4,5}, so the
        // disjoint pair keeps a blue candidate and is no violation
        let rb = RedBlueClique::from_triples(6, &[[0, 1, 2], [3, 4, 5], [0, 1, 3]]).unwrap();
        assert!(rb.check_h1().is_none());
    }

    #[test]
    fn f_vector_of_blue_fano() {
        let rb = RedBlueClique::new(fano());
        let f = rb.f_vector();
        assert!(f.eq_mod_trailing_zeros(&[7, 21, 28, 7]));
        assert_eq!(f.padded(5), vec![7, 21, 28, 7, 0]);
    }

    #[test]
    fn f_vector_of_all_red_k4() {
        let rb = RedBlueClique::all_red(4);
        assert_eq!(rb.f_vector().0, vec![4, 6, 4, 1]);
    }

    #[test]
    fn f_vector_binomial_row_on_all_red() {
        for n in 4..8 {
            let rb = RedBlueClique::all_red(n);
            let f = rb.f_vector();
            for (j, x) in f.0.iter().enumerate() {
                assert_eq!(*x, binom(n, j + 1));
            }
        }
    }

    #[test]
    fn simplex_is_two_collapsible() {
        assert!(RedBlueClique::all_red(5).is_two_collapsible());
    }

    #[test]
    fn chordless_cycles_are_not_two_collapsible() {
        for k in [6usize, 7] {
            let edges: Vec<[usize; 3]> = (0..k)
                .map(|i| {
                    let mut t = [i, (i + 1) % k, (i + 2) % k];
                    t.sort_unstable();
                    t
                })
                .collect();
            let rb = RedBlueClique::from_triples(k, &edges).unwrap();
            assert!(!rb.is_two_collapsible(), "k = {k}");
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let h = fano();
        let base = h.canonical_form().unwrap();
        // a specific relabeling
        let perm = [3usize, 5, 0, 6, 1, 2, 4];
        let relabeled: Vec<[usize; 3]> = h
            .edge_list()
            .iter()
            .map(|t| {
                let [a, b, c] = t.vertices();
                [perm[a], perm[b], perm[c]]
            })
            .collect();
        let h2 = Hypergraph3::new(7, &relabeled).unwrap();
        assert_eq!(h2.canonical_form().unwrap(), base);
        // removing a line changes the class
        let minus = Hypergraph3::new(7, &h.edge_list()[1..].iter().map(|t| t.vertices()).collect::<Vec<_>>())
            .unwrap();
        assert_ne!(minus.canonical_form().unwrap(), base);
    }

    #[test]
    fn canonical_form_identifies_single_edges() {
        let h1 = Hypergraph3::new(7, &[[0, 1, 2]]).unwrap();
        let h2 = Hypergraph3::new(7, &[[4, 5, 6]]).unwrap();
        assert_eq!(h1.canonical_form().unwrap(), h2.canonical_form().unwrap());
    }

    #[test]
    fn canonical_form_rejects_large_n() {
        let h = Hypergraph3::new(11, &[[0, 1, 2]]).unwrap();
        assert_eq!(
            h.canonical_form().unwrap_err(),
            RedBlueError::CanonicalFormTooLarge(11)
        );
    }

    #[test]
    fn battery_on_hypergraph_a() {
        let rb = hypergraph_a();
        let cert = rb.certificate_battery(4);
        assert_eq!(
            cert,
            Certificate::Transversal { pair: (4, 5) }
        );
        assert!(cert.recheck(&rb, 4));
    }

    #[test]
    fn battery_on_c7_is_not_two_collapsible() {
        let rb = c7_ring();
        let cert = rb.certificate_battery(4);
        assert_eq!(cert.tag(), CertificateTag::NotTwoCollapsible);
        assert!(cert.recheck(&rb, 4));
    }

    #[test]
    fn tau_monotone_under_edge_addition() {
        // random-ish chain built deterministically
        let mut rng = crate::rng::Rng::new(2024);
        for _ in 0..20 {
            let n = 7;
            let total = binom(n, 3) as usize;
            let mut edges: Vec<[usize; 3]> = Vec::new();
            let mut last_tau = 0;
            for _ in 0..12 {
                let r = rng.below(total as u64) as usize;
                let t = Triple::unrank(r).vertices();
                if !edges.contains(&t) {
                    edges.push(t);
                }
                let h = Hypergraph3::new(n, &edges).unwrap();
                let tau = h.tau();
                assert!(tau >= last_tau, "tau dropped after adding an edge");
                last_tau = tau;
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let rb = hypergraph_a();
        let s = rb.to_json();
        let back = RedBlueClique::from_json(&s).unwrap();
        assert_eq!(back, rb);
        assert!(RedBlueClique::from_json("{\"n\": 3}").is_err());
    }

    #[test]
    fn seq_order_prefers_small_ranks() {
        // {0,5} beats {1,2} in sorted-sequence order
        let a: u128 = 1 << 0 | 1 << 5;
        let b: u128 = 1 << 1 | 1 << 2;
        assert!(seq_less(a, b));
        assert!(!seq_less(b, a));
    }
}
