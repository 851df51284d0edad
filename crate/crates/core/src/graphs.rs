//! Quasi-threshold graphs of Dyck words and their decreasing-forest decompositions.
//!
//! Vertices are the D-labels `1..=n`. A decreasing forest stores a parent for every
//! non-root vertex with `parent > child`, so each tree's root is its maximum.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::LaurentPoly;
use crate::words::{height_profile, standard_factorize, Word};
use crate::zpoly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiThresholdGraph {
    n: usize,
    // adj[v] for v in 1..=n; index 0 unused
    adj: Vec<BTreeSet<usize>>,
}

impl QuasiThresholdGraph {
    pub fn empty(n: usize) -> Self {
        QuasiThresholdGraph {
            n,
            adj: vec![BTreeSet::new(); n + 1],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for j in 1..=n {
            for i in 1..j {
                g.add_edge(i, j);
            }
        }
        g
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges as `(j, i)` with `j > i`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|j| self.adj[j].range(..j).map(move |&i| (j, i)))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        (1..=self.n).all(|v| self.adj[v].len() == self.n - 1)
    }

    /// Vertices of the component of `v` in the subgraph induced on `1..=v`.
    fn initial_component(&self, v: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in self.adj[u].range(..=v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for QuasiThresholdGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(j, i)| [i, j]).collect();
        edges.sort();
        GraphJson { n: self.n, edges }.serialize(s)
    }
}

/// `G_w = (G_w' + dominating vertex) ⊔ G_w''` over the standard factorization.
pub fn build_graph(w: &Word) -> Result<QuasiThresholdGraph> {
    w.require_dyck()?;
    let mut g = QuasiThresholdGraph::empty(w.semi_length());
    fill(w, 0, &mut g);
    Ok(g)
}

fn fill(w: &Word, offset: usize, g: &mut QuasiThresholdGraph) {
    if w.is_empty() {
        return;
    }
    let f = standard_factorize(w).expect("Dyck word");
    let m = f.block_semi_length();
    fill(&f.inner, offset, g);
    for v in 1..m {
        g.add_edge(offset + v, offset + m);
    }
    fill(&f.rest, offset + m, g);
}

/// A decreasing forest on a vertex subset: `vertex -> parent` (`None` for roots).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecreasingForest {
    parents: BTreeMap<usize, Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub root: usize,
    pub parent_pairs: Vec<[usize; 2]>,
}

impl DecreasingForest {
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.parents.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.parents.contains_key(&v)
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parents.get(&v).copied().flatten()
    }

    pub fn roots(&self) -> Vec<usize> {
        self.parents
            .iter()
            .filter(|(_, p)| p.is_none())
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn first_root(&self) -> Option<usize> {
        self.roots().into_iter().next()
    }

    /// Edges as `(parent, child)` pairs, parent greater.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.parents
            .iter()
            .filter_map(|(&c, &p)| p.map(|p| (p, c)))
            .collect()
    }

    fn root_of(&self, mut v: usize) -> usize {
        while let Some(p) = self.parent(v) {
            v = p;
        }
        v
    }

    /// Components ordered by root; parent pairs `[child, parent]` ordered by child.
    pub fn components(&self) -> Vec<Component> {
        self.roots()
            .into_iter()
            .map(|root| Component {
                root,
                parent_pairs: self
                    .parents
                    .iter()
                    .filter(|(&c, p)| p.is_some() && self.root_of(c) == root)
                    .map(|(&c, p)| [c, p.unwrap()])
                    .collect(),
            })
            .collect()
    }

    /// The tree rooted at `root` (which must be a root).
    fn subtree(&self, root: usize) -> BTreeSet<usize> {
        self.parents
            .keys()
            .copied()
            .filter(|&v| self.root_of(v) == root)
            .collect()
    }

    fn restricted(&self, keep: &BTreeSet<usize>) -> DecreasingForest {
        DecreasingForest {
            parents: self
                .parents
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(&v, &p)| (v, p.filter(|p| keep.contains(p))))
                .collect(),
        }
    }

    /// Every parent is larger, present, and adjacent in `g`.
    pub fn is_decreasing_in(&self, g: &QuasiThresholdGraph) -> bool {
        self.parents.iter().all(|(&c, &p)| match p {
            None => true,
            Some(p) => p > c && self.contains(p) && g.adjacent(c, p),
        })
    }
}

/// A spanning decreasing forest of `G_w` with `k` components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForestPartition {
    forest: DecreasingForest,
}

impl ForestPartition {
    pub fn forest(&self) -> &DecreasingForest {
        &self.forest
    }

    pub fn num_components(&self) -> usize {
        self.forest.roots().len()
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.forest.edges()
    }
}

impl Serialize for ForestPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct J {
            components: Vec<Component>,
        }
        J {
            components: self.forest.components(),
        }
        .serialize(s)
    }
}

/// Every spanning decreasing forest of `g`, built by inserting `1..=n` in order: vertex `i`
/// adopts any subset of the current roots adjacent to it.
fn all_spanning_forests(g: &QuasiThresholdGraph) -> Vec<DecreasingForest> {
    let mut out = Vec::new();
    let mut parents: BTreeMap<usize, Option<usize>> = BTreeMap::new();
    grow_forest(g, 1, &mut parents, &mut out);
    out
}

fn grow_forest(
    g: &QuasiThresholdGraph,
    v: usize,
    parents: &mut BTreeMap<usize, Option<usize>>,
    out: &mut Vec<DecreasingForest>,
) {
    if v > g.n() {
        out.push(DecreasingForest {
            parents: parents.clone(),
        });
        return;
    }
    let candidates: Vec<usize> = parents
        .iter()
        .filter(|(&r, p)| p.is_none() && g.adjacent(r, v))
        .map(|(&r, _)| r)
        .collect();
    for mask in 0u64..(1 << candidates.len()) {
        let chosen: Vec<usize> = candidates
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &r)| r)
            .collect();
        for &r in &chosen {
            parents.insert(r, Some(v));
        }
        parents.insert(v, None);
        grow_forest(g, v + 1, parents, out);
        parents.remove(&v);
        for &r in &chosen {
            parents.insert(r, None);
        }
    }
}

/// `F(w, k)`: spanning decreasing forests of `g` with exactly `k` components.
pub fn enumerate_forest_partitions(g: &QuasiThresholdGraph, k: usize) -> Vec<ForestPartition> {
    all_spanning_forests(g)
        .into_iter()
        .filter(|f| f.roots().len() == k)
        .map(|forest| ForestPartition { forest })
        .collect()
}

/// `wt(α) = Σ_i t_i(α)`: `t_i` counts components of `α` restricted to `Q*_i`, the component
/// of `i` in the subgraph induced on `1..=i`, with `i` removed.
pub fn forest_partition_weight(g: &QuasiThresholdGraph, alpha: &ForestPartition) -> u64 {
    let f = &alpha.forest;
    (1..=g.n())
        .map(|i| {
            let mut q = g.initial_component(i);
            q.remove(&i);
            q.iter()
                .filter(|&&v| f.parent(v).is_none_or(|p| !q.contains(&p)))
                .count() as u64
        })
        .sum()
}

/// `f_q(w, k) = Σ_α q^-wt(α)` over `F(w, k)`.
pub fn weighted_forest_count(g: &QuasiThresholdGraph, k: usize) -> LaurentPoly {
    enumerate_forest_partitions(g, k)
        .iter()
        .map(|a| LaurentPoly::q_pow(-(forest_partition_weight(g, a) as i64)))
        .sum()
}

/// A partition of the vertex set into `k` groups, each a decreasing forest of the host.
/// Groups are ordered by their least root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForestFamily {
    groups: Vec<DecreasingForest>,
}

impl ForestFamily {
    pub fn new(mut groups: Vec<DecreasingForest>) -> Self {
        groups.retain(|g| !g.is_empty());
        groups.sort_by_key(DecreasingForest::first_root);
        ForestFamily { groups }
    }

    pub fn groups(&self) -> &[DecreasingForest] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

impl Serialize for ForestFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct G {
            components: Vec<Component>,
        }
        #[derive(Serialize)]
        struct J {
            groups: Vec<G>,
        }
        J {
            groups: self
                .groups
                .iter()
                .map(|f| G {
                    components: f.components(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// `H(w, k)`: vertex `v` either opens a new group or joins an existing group, adopting any
/// subset of that group's roots adjacent to `v`.
pub fn enumerate_forest_families(g: &QuasiThresholdGraph, k: usize) -> Vec<ForestFamily> {
    fn go(g: &QuasiThresholdGraph, v: usize, k: usize, groups: &mut Vec<DecreasingForest>, out: &mut Vec<ForestFamily>) {
        if groups.len() > k || groups.len() + (g.n() + 1 - v) < k {
            return;
        }
        if v > g.n() {
            out.push(ForestFamily::new(groups.clone()));
            return;
        }
        for gi in 0..groups.len() {
            let candidates: Vec<usize> = groups[gi]
                .roots()
                .into_iter()
                .filter(|&r| g.adjacent(r, v))
                .collect();
            for mask in 0u64..(1 << candidates.len()) {
                let chosen: Vec<usize> = candidates
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &r)| r)
                    .collect();
                for &r in &chosen {
                    groups[gi].parents.insert(r, Some(v));
                }
                groups[gi].parents.insert(v, None);
                go(g, v + 1, k, groups, out);
                groups[gi].parents.remove(&v);
                for &r in &chosen {
                    groups[gi].parents.insert(r, None);
                }
            }
        }
        groups.push(DecreasingForest {
            parents: BTreeMap::from([(v, None)]),
        });
        go(g, v + 1, k, groups, out);
        groups.pop();
    }
    let mut out = Vec::new();
    go(g, 1, k, &mut Vec::new(), &mut out);
    out
}

/// The q-Lah weight `Σ_m (r_m + s_m)` of a forest family of `K_n`.
///
/// The family is peeled from its largest vertex down. Removing `m` from its group `F`
/// leaves `F - m` when `m` is an isolated root or `F` is the single tree `T(m)`; otherwise
/// `F` splits into `F \ T(m)` and `T*(m)` (the children subtrees of `m`) as two groups.
/// This peeling is what makes `T*(m)` a forest of the restricted family.
pub fn qlah_family_weight(g: &QuasiThresholdGraph, alpha: &ForestFamily) -> Result<u64> {
    if !g.is_complete() {
        return Err(Error::NotCompleteGraph);
    }
    let mut groups: Vec<DecreasingForest> = alpha.groups.clone();
    let mut weight = 0u64;
    for m in (1..=g.n()).rev() {
        groups.sort_by_key(DecreasingForest::first_root);
        let d = groups.len();
        let j = groups
            .iter()
            .position(|f| f.contains(m))
            .ok_or_else(|| Error::Inconsistent(format!("vertex {m} missing from family")))?;
        let group = groups.remove(j);
        let tree = group.subtree(m);
        let single_vertex = tree.len() == 1;
        let alone = group.roots().len() == 1;

        let children: BTreeSet<usize> = tree.iter().copied().filter(|&v| v != m).collect();
        let rest: BTreeSet<usize> = group.vertices().filter(|v| !tree.contains(v)).collect();
        let star = group.restricted(&children);
        if !rest.is_empty() && !children.is_empty() {
            groups.push(group.restricted(&rest));
            groups.push(star.clone());
        } else {
            let remaining: BTreeSet<usize> = group.vertices().filter(|&v| v != m).collect();
            if !remaining.is_empty() {
                groups.push(group.restricted(&remaining));
            }
        }
        groups.sort_by_key(DecreasingForest::first_root);
        let star_index = || groups.iter().position(|f| *f == star).map(|i| i as u64 + 1);

        let (r, s) = if alone {
            let s = if single_vertex { d as u64 - 1 } else { star_index().unwrap() };
            (d as u64 - 1, s)
        } else {
            let s = if single_vertex { d as u64 } else { star_index().unwrap() };
            (j as u64 + 1, s)
        };
        weight += r + s;
    }
    Ok(weight)
}

/// `h_q(n, k) = Σ_α q^-wt(α)` over `H(n, k)` of `K_n`.
pub fn weighted_family_count(n: usize, k: usize) -> LaurentPoly {
    let g = QuasiThresholdGraph::complete(n);
    enumerate_forest_families(&g, k)
        .iter()
        .map(|a| LaurentPoly::q_pow(-(qlah_family_weight(&g, a).expect("complete host") as i64)))
        .sum()
}

/// `χ(z) = ∏_j (z - h_j)` over the east-step heights.
pub fn chromatic_polynomial(w: &Word) -> Result<IntPoly> {
    w.require_dyck()?;
    let h = height_profile(w)?;
    Ok(IntPoly::from_roots(h.east_heights))
}

/// Whether `edges` contains a broken circuit: some edge `e` of `g` whose endpoints are
/// joined by a path of chosen edges all smaller than `e`.
pub fn has_broken_circuit(g: &QuasiThresholdGraph, edges: &BTreeSet<(usize, usize)>) -> bool {
    let mut uf: Vec<usize> = (0..=g.n()).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    // edges ascending; chosen edges below `e` are already merged when `e` is examined
    for e in g.edges() {
        let (a, b) = (find(&mut uf, e.0), find(&mut uf, e.1));
        if a == b {
            return true;
        }
        if edges.contains(&e) {
            uf[a] = b;
        }
    }
    false
}

/// Edge subsets of size `num_edges` with no broken circuit, in lexicographic order of
/// their sorted edge lists.
pub fn enumerate_bcf_subgraphs(g: &QuasiThresholdGraph, num_edges: usize) -> Vec<BTreeSet<(usize, usize)>> {
    let all = g.edges();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(
        g: &QuasiThresholdGraph,
        all: &[(usize, usize)],
        start: usize,
        left: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<BTreeSet<(usize, usize)>>,
    ) {
        if left == 0 {
            let set: BTreeSet<_> = chosen.iter().copied().collect();
            if !has_broken_circuit(g, &set) {
                out.push(set);
            }
            return;
        }
        for i in start..all.len() {
            if all.len() - i < left {
                break;
            }
            chosen.push(all[i]);
            go(g, all, i + 1, left - 1, chosen, out);
            chosen.pop();
        }
    }
    go(g, &all, 0, num_edges, &mut chosen, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub k: usize,
    pub forests: usize,
    pub bcf_subgraphs: usize,
    pub passed: bool,
}

/// Edge sets of `F(w, k)` versus broken-circuit-free subgraphs with `n - k` edges.
pub fn bijection_check(g: &QuasiThresholdGraph, k: usize) -> BijectionReport {
    let forests: BTreeSet<BTreeSet<(usize, usize)>> = enumerate_forest_partitions(g, k)
        .iter()
        .map(ForestPartition::edges)
        .collect();
    let bcf: BTreeSet<BTreeSet<(usize, usize)>> = match g.n().checked_sub(k) {
        Some(e) => enumerate_bcf_subgraphs(g, e).into_iter().collect(),
        None => BTreeSet::new(),
    };
    BijectionReport {
        k,
        forests: forests.len(),
        bcf_subgraphs: bcf.len(),
        passed: forests == bcf,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn graph_examples() {
        let g = build_graph(&w("xD")).unwrap();
        assert_eq!((g.n(), g.edges().len()), (1, 0));
        let g = build_graph(&w("xxxxDDDD")).unwrap();
        assert_eq!(g, QuasiThresholdGraph::complete(4));
        let g = build_graph(&w("xxDxxDDD")).unwrap();
        assert_eq!(g.edges(), vec![(3, 2), (4, 1), (4, 2), (4, 3)]);
        assert!(build_graph(&w("DxxD")).is_err());
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[1,4],[2,3],[2,4],[3,4]]}"#);
    }

    #[test]
    fn graph_matches_tunnel_nesting() {
        use crate::words::{dyck_words, tunnel_matching};
        for n in 1..=6 {
            for word in dyck_words(n) {
                let g = build_graph(&word).unwrap();
                let t = tunnel_matching(&word).unwrap();
                // D position of label j
                let dpos: Vec<usize> = word
                    .letters()
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| **l == crate::words::Letter::D)
                    .map(|(i, _)| i)
                    .collect();
                for &(xi, i) in &t {
                    for &(xj, j) in &t {
                        let inside = |a: (usize, usize), b: (usize, usize)| b.0 < a.0 && dpos[a.1 - 1] < dpos[b.1 - 1];
                        let nested = inside((xi, i), (xj, j)) || inside((xj, j), (xi, i));
                        assert_eq!(g.adjacent(i, j), nested, "{word} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn forest_partition_examples() {
        let g = build_graph(&w("xxDxxDDD")).unwrap();
        assert_eq!(enumerate_forest_partitions(&g, 2).len(), 5);
        let all_isolated = enumerate_forest_partitions(&g, 4);
        assert_eq!(all_isolated.len(), 1);
        assert!(all_isolated[0].edges().is_empty());
        assert_eq!(enumerate_forest_partitions(&QuasiThresholdGraph::complete(4), 2).len(), 11);
        for a in enumerate_forest_partitions(&g, 3) {
            assert!(a.forest.is_decreasing_in(&g));
        }
    }

    #[test]
    fn forest_family_examples() {
        let g = build_graph(&w("xxDxxDDD")).unwrap();
        assert_eq!(enumerate_forest_families(&g, 2).len(), 24);
        assert_eq!(enumerate_forest_families(&QuasiThresholdGraph::complete(4), 3).len(), 12);
        for n in 1..=5 {
            assert_eq!(enumerate_forest_families(&QuasiThresholdGraph::complete(n), n).len(), 1);
        }
        // families are distinct as unordered collections
        let fams = enumerate_forest_families(&g, 2);
        let set: std::collections::HashSet<_> = fams.iter().cloned().collect();
        assert_eq!(set.len(), fams.len());
        for f in &fams {
            assert!(f.groups().iter().all(|grp| grp.is_decreasing_in(&g)));
        }
    }

    #[test]
    fn forest_weight_examples() {
        let g = build_graph(&w("xxDxxDDD")).unwrap();
        assert_eq!(weighted_forest_count(&g, 3), p("3q^-4 + q^-3"));
        assert_eq!(weighted_forest_count(&g, 1), p("q^-4 + q^-3"));
        assert_eq!(weighted_forest_count(&g, 2), p("3q^-4 + 2q^-3"));
        let single = build_graph(&w("xD")).unwrap();
        let alpha = &enumerate_forest_partitions(&single, 1)[0];
        assert_eq!(forest_partition_weight(&single, alpha), 0);
    }

    #[test]
    fn family_weight_examples() {
        assert_eq!(
            weighted_family_count(4, 3),
            p("q^-7 + 2q^-8 + 3q^-9 + 3q^-10 + 2q^-11 + q^-12")
        );
        assert_eq!(weighted_family_count(1, 1), LaurentPoly::one());
        assert_eq!(weighted_family_count(4, 4), p("q^-12"));
        let g = build_graph(&w("xxDxxDDD")).unwrap();
        let fam = &enumerate_forest_families(&g, 2)[0];
        assert_eq!(qlah_family_weight(&g, fam), Err(Error::NotCompleteGraph));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_polynomial(&w("xxDxxDDD")).unwrap().to_string(), "z^4 - 4z^3 + 5z^2 - 2z");
        assert_eq!(chromatic_polynomial(&w("xD")).unwrap().to_string(), "z");
        assert_eq!(chromatic_polynomial(&w("xxDD")).unwrap().to_string(), "z^2 - z");
    }

    #[test]
    fn chromatic_matches_colouring_count() {
        use num_bigint::BigInt;
        fn count(g: &QuasiThresholdGraph, z: usize) -> usize {
            fn go(g: &QuasiThresholdGraph, v: usize, z: usize, col: &mut Vec<usize>) -> usize {
                if v > g.n() {
                    return 1;
                }
                let mut total = 0;
                for c in 0..z {
                    if g.neighbors(v).filter(|&u| u < v).all(|u| col[u] != c) {
                        col[v] = c;
                        total += go(g, v + 1, z, col);
                    }
                }
                total
            }
            go(g, 1, z, &mut vec![usize::MAX; g.n() + 1])
        }
        for n in 1..=5 {
            for word in crate::words::dyck_words(n) {
                let g = build_graph(&word).unwrap();
                let chi = chromatic_polynomial(&word).unwrap();
                for z in 0..=n + 1 {
                    assert_eq!(chi.eval(&BigInt::from(z)), BigInt::from(count(&g, z)), "{word} z={z}");
                }
            }
        }
    }

    #[test]
    fn bcf_examples() {
        let g = build_graph(&w("xxDxxDDD")).unwrap();
        assert_eq!(enumerate_bcf_subgraphs(&g, 2).len(), 5);
        assert_eq!(enumerate_bcf_subgraphs(&g, 0), vec![BTreeSet::new()]);
        assert_eq!(enumerate_bcf_subgraphs(&QuasiThresholdGraph::complete(4), 2).len(), 11);
    }

    #[test]
    fn bijection_examples() {
        for word in ["xxDxxDDD", "xxxxDDDD"] {
            let g = build_graph(&w(word)).unwrap();
            for k in 1..=4 {
                assert!(bijection_check(&g, k).passed, "{word} k={k}");
            }
        }
        let g = build_graph(&w("xD")).unwrap();
        let r = bijection_check(&g, 1);
        assert!(r.passed && r.forests == 1);
    }

    #[test]
    fn forest_partition_json() {
        let g = build_graph(&w("xxDD")).unwrap();
        let a = &enumerate_forest_partitions(&g, 1)[0];
        assert_eq!(
            serde_json::to_string(a).unwrap(),
            r#"{"components":[{"root":2,"parent_pairs":[[1,2]]}]}"#
        );
    }
}
