use std::collections::VecDeque;

use super::Matching;
use crate::graphs::BipartiteGraph;

const NONE: usize = usize::MAX;

/// Maximum matching by layered augmenting paths (Hopcroft–Karp).
pub fn max_bipartite_matching(g: &BipartiteGraph) -> Matching {
    let (mate_left, _) = hopcroft_karp(g);
    Matching::new(mate_left.iter().enumerate().filter(|(_, &y)| y != NONE).map(|(x, &y)| (x, y)).collect())
}

fn hopcroft_karp(g: &BipartiteGraph) -> (Vec<usize>, Vec<usize>) {
    let (nl, nr) = (g.left_len(), g.right_len());
    let mut mate_left = vec![NONE; nl];
    let mut mate_right = vec![NONE; nr];

    // cheap greedy start
    for (x, mate) in mate_left.iter_mut().enumerate() {
        if let Some(&y) = g.neighbors(x).iter().find(|&&y| mate_right[y] == NONE) {
            *mate = y;
            mate_right[y] = x;
        }
    }

    let mut dist = vec![0usize; nl];
    let mut next = vec![0usize; nl];
    let mut stack: Vec<usize> = Vec::new();
    loop {
        // BFS layers from free left vertices
        let mut queue = VecDeque::new();
        for x in 0..nl {
            if mate_left[x] == NONE {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = NONE;
            }
        }
        let mut found = false;
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                let m = mate_right[y];
                if m == NONE {
                    found = true;
                } else if dist[m] == NONE {
                    dist[m] = dist[x] + 1;
                    queue.push_back(m);
                }
            }
        }
        if !found {
            break;
        }

        // iterative DFS along layers
        next.iter_mut().for_each(|p| *p = 0);
        for root in 0..nl {
            if mate_left[root] != NONE {
                continue;
            }
            stack.clear();
            stack.push(root);
            while let Some(&x) = stack.last() {
                let adj = g.neighbors(x);
                if next[x] == adj.len() {
                    dist[x] = NONE;
                    stack.pop();
                    continue;
                }
                let y = adj[next[x]];
                next[x] += 1;
                let m = mate_right[y];
                if m == NONE {
                    // augment along the stack; each stacked vertex took the edge at next-1
                    for &v in stack.iter().rev() {
                        let w = g.neighbors(v)[next[v] - 1];
                        mate_right[w] = v;
                        mate_left[v] = w;
                    }
                    break;
                } else if dist[m] == dist[x] + 1 {
                    stack.push(m);
                }
            }
        }
    }
    (mate_left, mate_right)
}

/// A left-side set `A` with `|N(A)| < |A|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallViolator {
    pub set: Vec<usize>,
    pub neighborhood: Vec<usize>,
}

impl HallViolator {
    /// Recomputes `N(A)` in `g` and checks `|A| > |N(A)|`.
    pub fn is_genuine(&self, g: &BipartiteGraph) -> bool {
        let n = g.neighborhood(&self.set);
        n == self.neighborhood && self.set.len() > n.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallCertificate {
    /// A matching saturating the left side.
    Saturating(Matching),
    Violator(HallViolator),
}

/// A left-saturating matching, or the left side of the alternating-reachability
/// set grown from every unmatched left vertex (a König-style violator).
pub fn hall_certificate(g: &BipartiteGraph) -> HallCertificate {
    let (mate_left, mate_right) = hopcroft_karp(g);
    if mate_left.iter().all(|&y| y != NONE) {
        return HallCertificate::Saturating(Matching::new(mate_left.iter().copied().enumerate().collect()));
    }
    let mut seen_left = vec![false; g.left_len()];
    let mut seen_right = vec![false; g.right_len()];
    let mut queue: VecDeque<usize> = (0..g.left_len()).filter(|&x| mate_left[x] == NONE).collect();
    for &x in &queue {
        seen_left[x] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !seen_right[y] {
                seen_right[y] = true;
                let m = mate_right[y];
                debug_assert!(m != NONE, "maximum matching admits no augmenting path");
                if !seen_left[m] {
                    seen_left[m] = true;
                    queue.push_back(m);
                }
            }
        }
    }
    let set = (0..g.left_len()).filter(|&x| seen_left[x]).collect();
    let neighborhood = (0..g.right_len()).filter(|&y| seen_right[y]).collect();
    HallCertificate::Violator(HallViolator { set, neighborhood })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> BipartiteGraph {
        let edges: Vec<_> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        BipartiteGraph::from_edges(n, n, &edges)
    }

    #[test]
    fn complete_and_star() {
        assert_eq!(max_bipartite_matching(&complete(3)).len(), 3);
        let star = BipartiteGraph::from_edges(3, 1, &[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(max_bipartite_matching(&star).len(), 1);
        match hall_certificate(&star) {
            HallCertificate::Violator(v) => {
                assert_eq!(v.set, vec![0, 1, 2]);
                assert_eq!(v.neighborhood, vec![0]);
                assert!(v.is_genuine(&star));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(hall_certificate(&complete(4)), HallCertificate::Saturating(m) if m.len() == 4));
    }

    #[test]
    fn greedy_start_is_repaired() {
        // greedy takes 0-0, then 1 needs the augmenting path 1-0, 0-1
        let g = BipartiteGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(max_bipartite_matching(&g).pairs(), &[(0, 1), (1, 0)]);
    }

    #[test]
    fn long_augmenting_path() {
        // a path of length 2k-1 where greedy leaves the last vertex free
        let k = 2000;
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, i));
            if i + 1 < k {
                edges.push((i + 1, i));
            }
        }
        let g = BipartiteGraph::from_edges(k, k, &edges);
        assert_eq!(max_bipartite_matching(&g).len(), k);
    }

    #[test]
    fn empty_graph() {
        let g = BipartiteGraph::from_edges(0, 0, &[]);
        assert!(matches!(hall_certificate(&g), HallCertificate::Saturating(m) if m.is_empty()));
    }
}
