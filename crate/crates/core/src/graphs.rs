//! Graph of inverses, its bipartite double cover, the ℒ/ℛ incidence graph and
//! the 𝒬-class subgraphs of the cover for transformation monoids.
//!
//! Adjacency lists are sorted by id and graphs are immutable once built.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::{ElementId, Semigroup, TransformationSet};
use crate::transform::{self, QSignature};

/// Undirected graph with optional loops and no multi-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseGraph {
    adj: Vec<Vec<usize>>,
    loops: Vec<bool>,
}

impl InverseGraph {
    /// Edges with `u == v` are loops; duplicates are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut loops = vec![false; n];
        for &(u, v) in edges {
            if u == v {
                loops[u] = true;
            } else {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Self { adj, loops }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Non-loop neighbours, sorted.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.loops[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops[u]
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Degree with a loop counted once.
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len() + usize::from(self.loops[u])
    }

    pub fn loop_count(&self) -> usize {
        self.loops.iter().filter(|&&l| l).count()
    }

    /// `(u, v)` with `u <= v`, loops included, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            if self.loops[u] {
                out.push((u, u));
            }
            out.extend(self.adj[u].iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&u| self.degree(u) == 0).collect()
    }

    pub fn to_dot(&self, name: &str, label: impl Fn(usize) -> String) -> String {
        let mut out = format!("graph {} {{\n", dot_id(name));
        for u in 0..self.vertex_count() {
            writeln!(out, "  v{u} [label=\"{}\"];", escape(&label(u))).unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  v{u} -- v{v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Bipartite graph on `X = 0..left_len` and `Y = 0..right_len`, with per-side payload ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_ids: Vec<usize>,
    right_ids: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left_ids: Vec<usize>, right_ids: Vec<usize>, mut adj: Vec<Vec<usize>>) -> Self {
        assert_eq!(left_ids.len(), adj.len(), "one adjacency list per left vertex");
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            assert!(list.iter().all(|&y| y < right_ids.len()), "right index out of range");
        }
        Self { left_ids, right_ids, adj }
    }

    /// Payload ids are the local indices.
    pub fn from_edges(left: usize, right: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); left];
        for &(x, y) in edges {
            adj[x].push(y);
        }
        Self::new((0..left).collect(), (0..right).collect(), adj)
    }

    pub fn left_len(&self) -> usize {
        self.left_ids.len()
    }

    pub fn right_len(&self) -> usize {
        self.right_ids.len()
    }

    pub fn left_id(&self, x: usize) -> usize {
        self.left_ids[x]
    }

    pub fn right_id(&self, y: usize) -> usize {
        self.right_ids[y]
    }

    pub fn left_ids(&self) -> &[usize] {
        &self.left_ids
    }

    pub fn right_ids(&self) -> &[usize] {
        &self.right_ids
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].binary_search(&y).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.right_len()];
        for list in &self.adj {
            for &y in list {
                deg[y] += 1;
            }
        }
        deg
    }

    /// `N(A)` for a set of left vertices, sorted.
    pub fn neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().flat_map(|&x| self.adj[x].iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The common degree `m` if every vertex on both sides has degree `m`.
    pub fn regular_degree(&self) -> Option<usize> {
        let m = self.adj.first().map(Vec::len)?;
        (self.adj.iter().all(|l| l.len() == m) && self.right_degrees().iter().all(|&d| d == m)).then_some(m)
    }

    pub fn to_dot(
        &self,
        name: &str,
        left_label: impl Fn(usize) -> String,
        right_label: impl Fn(usize) -> String,
        prefixes: (&str, &str),
    ) -> String {
        let (lp, rp) = prefixes;
        let mut out = format!("graph {} {{\n", dot_id(name));
        for x in 0..self.left_len() {
            writeln!(out, "  {lp}{x} [label=\"{}\"];", escape(&left_label(self.left_ids[x]))).unwrap();
        }
        for y in 0..self.right_len() {
            writeln!(out, "  {rp}{y} [label=\"{}\"];", escape(&right_label(self.right_ids[y]))).unwrap();
        }
        for (x, list) in self.adj.iter().enumerate() {
            for &y in list {
                writeln!(out, "  {lp}{x} -- {rp}{y};").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot_id(name: &str) -> String {
    format!("\"{}\"", escape(name))
}

/// `uv` is an edge iff `u` and `v` are mutual inverses; a loop at `a` iff `a = a³`.
pub fn inverse_graph(s: &Semigroup) -> InverseGraph {
    let sets = s.inverse_sets();
    let mut adj = Vec::with_capacity(s.order());
    let mut loops = Vec::with_capacity(s.order());
    for (a, v) in sets.iter().enumerate() {
        loops.push(v.binary_search(&a).is_ok());
        adj.push(v.iter().copied().filter(|&b| b != a).collect());
    }
    InverseGraph { adj, loops }
}

/// `X = V`, `Y = V'`, with `uv'` an edge iff `uv` is; a loop at `u` gives `uu'`.
pub fn double_cover(g: &InverseGraph) -> BipartiteGraph {
    let n = g.vertex_count();
    let adj = (0..n)
        .map(|u| {
            let mut list = g.neighbors(u).to_vec();
            if g.has_loop(u) {
                list.push(u);
            }
            list
        })
        .collect();
    BipartiteGraph::new((0..n).collect(), (0..n).collect(), adj)
}

/// `X` = ℒ-classes, `Y` = ℛ-classes, edge iff `L ∩ R` is a group; payloads are class ids.
pub fn incidence_graph(s: &Semigroup) -> Result<BipartiteGraph> {
    if !s.is_regular() {
        return Err(Error::NotRegular);
    }
    let g = s.greens();
    let mut adj = vec![Vec::new(); g.l_classes.len()];
    for (h, members) in g.h_classes.iter().enumerate() {
        if g.h_group[h] {
            let a = members[0];
            adj[g.l_of[a]].push(g.r_of[a]);
        }
    }
    Ok(BipartiteGraph::new((0..g.l_classes.len()).collect(), (0..g.r_classes.len()).collect(), adj))
}

/// The 𝒟-component of the incidence graph for one 𝒟-class, with class-id payloads.
pub fn d_component(s: &Semigroup, d: usize) -> BipartiteGraph {
    let g = s.greens();
    let egg = &g.eggboxes[d];
    let adj = (0..egg.cols.len()).map(|j| (0..egg.rows.len()).filter(|&i| g.is_group_at(d, i, j)).collect()).collect();
    BipartiteGraph::new(egg.cols.clone(), egg.rows.clone(), adj)
}

pub fn d_components(s: &Semigroup) -> Result<Vec<BipartiteGraph>> {
    if !s.is_regular() {
        return Err(Error::NotRegular);
    }
    Ok((0..s.greens().d_count()).map(|d| d_component(s, d)).collect())
}

/// How 𝒬-classes are keyed for a transformation semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QScheme {
    /// All of `T_n`: ascending kernel-class sizes.
    Full,
    /// The fix-0 copy of `PT_n` in `T_{n+1}`: the size of the class of 0 is kept apart.
    FixZero,
}

/// 𝒬-class key: kernel-class sizes, plus the size of the class of 0 under [`QScheme::FixZero`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QKey {
    pub zero_block: Option<u8>,
    pub signature: QSignature,
}

impl fmt::Display for QKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.zero_block {
            None => write!(f, "{}", self.signature),
            Some(z) => write!(f, "{}|0:{}", self.signature, z),
        }
    }
}

impl From<QSignature> for QKey {
    fn from(signature: QSignature) -> Self {
        Self { zero_block: None, signature }
    }
}

pub fn q_scheme(s: &Semigroup) -> Result<QScheme> {
    let set = s.transformations().ok_or(Error::NotTransformations)?;
    let d = set.degree();
    if set.is_full() {
        Ok(QScheme::Full)
    } else if set.len() == d.pow(d as u32 - 1) && (0..set.len()).all(|a| set.image(a)[0] == 0) {
        Ok(QScheme::FixZero)
    } else {
        Err(Error::NotTransformations)
    }
}

pub fn q_key(scheme: QScheme, image: &[u8]) -> QKey {
    let signature = QSignature::of_image(image);
    let zero_block = match scheme {
        QScheme::Full => None,
        QScheme::FixZero => Some(image.iter().filter(|&&y| y == image[0]).count() as u8),
    };
    QKey { zero_block, signature }
}

/// Partition of `T_n` (or fix-0 `PT_n`) into 𝒬-classes.
pub fn q_classes(s: &Semigroup) -> Result<BTreeMap<QKey, Vec<ElementId>>> {
    let scheme = q_scheme(s)?;
    let set = s.transformations().expect("checked by q_scheme");
    let mut out: BTreeMap<QKey, Vec<ElementId>> = BTreeMap::new();
    for a in 0..s.order() {
        out.entry(q_key(scheme, set.image(a))).or_default().push(a);
    }
    Ok(out)
}

fn q_members<'a>(s: &'a Semigroup, key: &QKey) -> Result<(QScheme, &'a TransformationSet, Vec<ElementId>)> {
    let scheme = q_scheme(s)?;
    let set = s.transformations().expect("checked by q_scheme");
    if key.signature.degree() != set.degree() || (scheme == QScheme::Full) != key.zero_block.is_none() {
        return Err(Error::InvalidSignature(key.to_string()));
    }
    let members: Vec<ElementId> = (0..s.order()).filter(|&a| q_key(scheme, set.image(a)) == *key).collect();
    if members.is_empty() {
        return Err(Error::InvalidSignature(key.to_string()));
    }
    Ok((scheme, set, members))
}

/// `X = Q`, `Y = Q'`, `uv'` an edge iff `v ∈ V(u) ∩ Q`; built by enumerating the
/// inverses of each `u` from kernel/image transversals. Payloads are element ids.
pub fn q_class_bigraph(s: &Semigroup, key: &QKey) -> Result<BipartiteGraph> {
    let (scheme, set, members) = q_members(s, key)?;
    let position = |b: ElementId| members.binary_search(&b).ok();
    let adj = members
        .par_iter()
        .map(|&u| {
            transform::tn_inverses(set.image(u), Some(&key.signature))
                .iter()
                .filter(|img| q_key(scheme, img) == *key)
                .filter_map(|img| set.index_of(img))
                .filter_map(position)
                .collect()
        })
        .collect();
    Ok(BipartiteGraph::new(members.clone(), members, adj))
}

/// Same graph as [`q_class_bigraph`], by filtering `V(u)` down to `Q`.
pub fn q_class_bigraph_by_definition(s: &Semigroup, key: &QKey) -> Result<BipartiteGraph> {
    let (_, _, members) = q_members(s, key)?;
    let adj = members
        .iter()
        .map(|&u| s.inverses_of(u).iter().filter_map(|b| members.binary_search(b).ok()).collect())
        .collect();
    Ok(BipartiteGraph::new(members.clone(), members, adj))
}

/// Degree of every vertex of a `T_n` 𝒬-class graph: `m = l·r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QClassDegree {
    /// Kernel partitions of the class's type that a fixed admissible image set transverses.
    pub l: u64,
    /// Transversals of a kernel with these block sizes: `p_1 p_2 ⋯ p_k`.
    pub r: u64,
    pub m: u64,
}

/// Number of partitions of `[n]` with block sizes `sig` that `image_set` transverses.
pub fn admissible_kernel_count(sig: &QSignature, image_set: &[u8]) -> u64 {
    let n = sig.degree();
    let k = sig.rank();
    if image_set.len() != k {
        return 0;
    }
    let free: Vec<u8> = (0..n as u8).filter(|x| !image_set.contains(x)).collect();
    // blocks are labelled by their point of `image_set`, so each assignment is one partition
    let mut count = 0;
    for code in 0..k.pow(free.len() as u32) {
        let mut sizes = vec![1u8; k];
        let mut c = code;
        for _ in &free {
            sizes[c % k] += 1;
            c /= k;
        }
        sizes.sort_unstable();
        if sizes == sig.0 {
            count += 1;
        }
    }
    count
}

pub fn q_class_degree(n: usize, sig: &QSignature) -> Result<QClassDegree> {
    if sig.degree() != n {
        return Err(Error::InvalidSignature(sig.to_string()));
    }
    let image_set: Vec<u8> = (0..sig.rank() as u8).collect();
    let l = admissible_kernel_count(sig, &image_set);
    let r = sig.transversal_count();
    Ok(QClassDegree { l, r, m: l * r })
}
