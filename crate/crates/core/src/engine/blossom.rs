use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Maximum matching of a loop-free general graph by blossom contraction.
///
/// `adj` must be symmetric, sorted and loop-free. Returns `mate[v]`.
pub fn max_general_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut search = Search::new(adj);
    search.greedy();
    for root in 0..adj.len() {
        if search.mate[root] == NONE {
            search.augment_from(root);
        }
    }
    search.mates()
}

/// A perfect matching of a loop-free general graph, or `None`.
pub fn perfect_general_matching(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    if adj.len() % 2 == 1 {
        return None;
    }
    let mut search = Search::new(adj);
    search.greedy();
    for root in 0..adj.len() {
        // a vertex left exposed once stays exposed in every later maximum matching
        if search.mate[root] == NONE && !search.augment_from(root) {
            return None;
        }
    }
    Some(search.mate)
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Self {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn mates(&self) -> Vec<Option<usize>> {
        self.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
    }

    fn greedy(&mut self) {
        for u in 0..self.adj.len() {
            if self.mate[u] == NONE {
                if let Some(&v) = self.adj[u].iter().find(|&&v| self.mate[v] == NONE && v != u) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                }
            }
        }
    }

    fn augment_from(&mut self, root: usize) -> bool {
        match self.find_path(root) {
            Some(mut v) => {
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
                true
            }
            None => false,
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its exposed far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    fn size(m: &[Option<usize>]) -> usize {
        m.iter().flatten().count() / 2
    }

    #[test]
    fn odd_cycle_with_tail_needs_blossom() {
        // 5-cycle 0..4 plus pendant 5 on vertex 2; greedy pairs 0-1, 2-3, leaving 4 and 5
        let adj = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)]);
        let mate = perfect_general_matching(&adj).expect("perfect");
        for v in 0..6 {
            assert_eq!(mate[mate[v]], v);
            assert!(adj[v].contains(&mate[v]));
        }
    }

    #[test]
    fn triangle_has_no_perfect_matching() {
        let adj = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(perfect_general_matching(&adj).is_none());
        assert_eq!(size(&max_general_matching(&adj)), 1);
    }

    #[test]
    fn petersen_graph_is_perfect() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(perfect_general_matching(&graph(10, &edges)).is_some());
    }

    #[test]
    fn two_triangles_joined_by_a_path() {
        let adj = graph(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]);
        assert!(perfect_general_matching(&adj).is_some());
        let adj = graph(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)]);
        assert_eq!(size(&max_general_matching(&adj)), 3);
    }
}
