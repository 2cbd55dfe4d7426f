use super::bipartite::{hall_certificate, HallCertificate, HallViolator};
use super::blossom::perfect_general_matching;
use super::Matching;
use crate::error::{Error, Result};
use crate::graphs::{double_cover, BipartiteGraph, InverseGraph};

/// Above this many loop vertices the companion clique is replaced by the doubled graph.
pub const CLIQUE_GADGET_LIMIT: usize = 256;

/// How loops are turned into ordinary edges before the blossom search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopGadget {
    /// Each loop vertex `v` gets a companion `v*` joined to `v`, the companions
    /// form a clique, and one dummy joined to every companion is added when the
    /// total vertex count would be odd.
    CompanionClique,
    /// Two disjoint copies of the graph with `v–v'` for every loop vertex `v`.
    /// Matched pairs `v–v'` in the first copy are the loops used.
    Doubled,
}

/// A spanning set of disjoint edges and loops, or `None`.
pub fn perfect_matching_with_loops(g: &InverseGraph) -> Option<Matching> {
    let gadget = if g.loop_count() <= CLIQUE_GADGET_LIMIT { LoopGadget::CompanionClique } else { LoopGadget::Doubled };
    perfect_matching_with_gadget(g, gadget)
}

pub fn perfect_matching_with_gadget(g: &InverseGraph, gadget: LoopGadget) -> Option<Matching> {
    let n = g.vertex_count();
    let loop_vertices: Vec<usize> = (0..n).filter(|&v| g.has_loop(v)).collect();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).to_vec()).collect();
    match gadget {
        LoopGadget::CompanionClique => {
            let c = loop_vertices.len();
            let dummy = (n + c) % 2 == 1;
            for (i, &v) in loop_vertices.iter().enumerate() {
                adj[v].push(n + i);
            }
            for (i, &v) in loop_vertices.iter().enumerate() {
                let mut list = vec![v];
                list.extend((0..c).filter(|&j| j != i).map(|j| n + j));
                if dummy {
                    list.push(n + c);
                }
                adj.push(list);
            }
            if dummy {
                adj.push((n..n + c).collect());
            }
        }
        LoopGadget::Doubled => {
            for u in 0..n {
                adj.push(g.neighbors(u).iter().map(|&v| v + n).collect());
            }
            for &v in &loop_vertices {
                adj[v].push(v + n);
                adj[v + n].push(v);
            }
            for list in &mut adj {
                list.sort_unstable();
            }
        }
    }

    let mate = perfect_general_matching(&adj)?;
    let pairs = (0..n)
        .filter_map(|u| {
            let m = mate[u];
            if m >= n {
                Some((u, u))
            } else {
                (u < m).then_some((u, m))
            }
        })
        .collect();
    Some(Matching::new(pairs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Loop(usize),
    Edge(usize, usize),
    /// At least three vertices; consecutive entries (cyclically) are adjacent.
    Cycle(Vec<usize>),
}

impl Component {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Component::Loop(u) => vec![*u],
            Component::Edge(u, v) => vec![*u, *v],
            Component::Cycle(c) => c.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactorCover {
    pub components: Vec<Component>,
}

impl TwoFactorCover {
    /// The cyclic successor map: loops fix, edges swap, cycles rotate forward.
    pub fn successor(&self, n: usize) -> Vec<usize> {
        let mut next = vec![usize::MAX; n];
        for comp in &self.components {
            let vs = comp.vertices();
            for (i, &v) in vs.iter().enumerate() {
                next[v] = vs[(i + 1) % vs.len()];
            }
        }
        next
    }

    /// Vertex-disjoint, spanning, and every component uses edges or loops of `g`.
    pub fn is_valid_for(&self, g: &InverseGraph) -> bool {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        for comp in &self.components {
            let ok = match comp {
                Component::Loop(u) => g.has_loop(*u),
                Component::Edge(u, v) => u != v && g.has_edge(*u, *v),
                Component::Cycle(c) => {
                    c.len() >= 3
                        && (0..c.len()).all(|i| c[i] != c[(i + 1) % c.len()] && g.has_edge(c[i], c[(i + 1) % c.len()]))
                }
            };
            if !ok {
                return false;
            }
            for v in comp.vertices() {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// A 1,2-factor read off a perfect matching of the double cover, or `None`.
pub fn one_two_factor(g: &InverseGraph) -> Option<TwoFactorCover> {
    one_two_factor_certified(g).ok()
}

/// Like [`one_two_factor`], but a failure carries the Hall violator found in the
/// double cover.
pub fn one_two_factor_certified(g: &InverseGraph) -> std::result::Result<TwoFactorCover, HallViolator> {
    let cover = double_cover(g);
    let matching = match hall_certificate(&cover) {
        HallCertificate::Saturating(m) => m,
        HallCertificate::Violator(v) => return Err(v),
    };
    Ok(cover_from_permutation(
        &matching.left_mates(g.vertex_count()).into_iter().map(|m| m.expect("saturating")).collect::<Vec<_>>(),
    ))
}

/// Components of the walk `u → σ(u)` for a permutation `σ`.
pub fn cover_from_permutation(sigma: &[usize]) -> TwoFactorCover {
    let mut visited = vec![false; sigma.len()];
    let mut components = Vec::new();
    for start in 0..sigma.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut u = start;
        while !visited[u] {
            visited[u] = true;
            cycle.push(u);
            u = sigma[u];
        }
        components.push(match cycle.len() {
            1 => Component::Loop(start),
            2 => Component::Edge(cycle[0], cycle[1]),
            _ => Component::Cycle(cycle),
        });
    }
    TwoFactorCover { components }
}

/// Perfect matching of a disjoint union of regular bipartite parts, found part by
/// part. Pairs are reported in payload ids.
pub fn union_of_regular_perfect_matchings(parts: &[BipartiteGraph]) -> Result<Matching> {
    let mut pairs = Vec::new();
    for (part, g) in parts.iter().enumerate() {
        if g.left_len() != g.right_len() || !matches!(g.regular_degree(), Some(m) if m >= 1) {
            return Err(Error::IrregularPart { part });
        }
        match hall_certificate(g) {
            HallCertificate::Saturating(m) => {
                pairs.extend(m.pairs().iter().map(|&(x, y)| (g.left_id(x), g.right_id(y))));
            }
            HallCertificate::Violator(_) => {
                return Err(Error::Internal(format!("regular part {part} has no perfect matching")));
            }
        }
    }
    Ok(Matching::new(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_cases() {
        let tri = InverseGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(perfect_matching_with_loops(&tri).is_none());
        let looped = InverseGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2), (0, 0)]);
        assert_eq!(perfect_matching_with_loops(&looped).unwrap().pairs(), &[(0, 0), (1, 2)]);
    }

    #[test]
    fn odd_graph_with_even_loop_count() {
        // 3 vertices, two loops: 0 and 1 looped, 2 must pair with one of them
        let g = InverseGraph::from_edges(3, &[(0, 0), (1, 1), (1, 2)]);
        let m = perfect_matching_with_loops(&g).expect("0 loop, 1-2 edge");
        assert_eq!(m.pairs(), &[(0, 0), (1, 2)]);
        assert!(m.is_perfect_on(3));
    }

    #[test]
    fn gadgets_agree_on_small_cases() {
        let cases = [
            InverseGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2), (0, 0)]),
            InverseGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]),
            InverseGraph::from_edges(5, &[(0, 1), (2, 3), (4, 4), (3, 3)]),
            InverseGraph::from_edges(2, &[(0, 0)]),
        ];
        for g in &cases {
            let a = perfect_matching_with_gadget(g, LoopGadget::CompanionClique);
            let b = perfect_matching_with_gadget(g, LoopGadget::Doubled);
            assert_eq!(a.is_some(), b.is_some());
            for m in [a, b].into_iter().flatten() {
                assert!(m.is_perfect_on(g.vertex_count()));
                assert!(m.pairs().iter().all(|&(u, v)| g.has_edge(u, v)));
            }
        }
    }

    #[test]
    fn all_loops() {
        let g = InverseGraph::from_edges(4, &[(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!(perfect_matching_with_loops(&g).unwrap().len(), 4);
        let g = InverseGraph::from_edges(3, &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(perfect_matching_with_loops(&g).unwrap().len(), 3);
    }

    #[test]
    fn one_two_factor_shapes() {
        let single = InverseGraph::from_edges(1, &[(0, 0)]);
        assert_eq!(one_two_factor(&single).unwrap().components, vec![Component::Loop(0)]);
        let tri = InverseGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let cover = one_two_factor(&tri).unwrap();
        assert_eq!(cover.components.len(), 1);
        assert!(matches!(&cover.components[0], Component::Cycle(c) if c.len() == 3));
        assert!(cover.is_valid_for(&tri));
        let path = InverseGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(one_two_factor(&path).is_none());
    }

    #[test]
    fn union_of_parts() {
        let a = BipartiteGraph::new(vec![10], vec![11], vec![vec![0]]);
        let b = BipartiteGraph::new(vec![20, 21], vec![22, 23], vec![vec![1], vec![0]]);
        let m = union_of_regular_perfect_matchings(&[a, b]).unwrap();
        assert_eq!(m.pairs(), &[(10, 11), (20, 23), (21, 22)]);
        let bad = BipartiteGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 0)]);
        assert!(matches!(union_of_regular_perfect_matchings(&[bad]), Err(Error::IrregularPart { part: 0 })));
    }
}
