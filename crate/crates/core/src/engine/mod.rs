//! Graph-factor algorithms: bipartite matching with Hall certificates, general
//! matching by blossom contraction, 1-factors of graphs with loops, 1,2-factors
//! through the double cover, and unions of regular parts.
//!
//! Every search scans adjacency lists in sorted order, so results are
//! reproducible and ties go to the lowest id.

mod bipartite;
mod blossom;
mod factors;

pub use bipartite::{hall_certificate, max_bipartite_matching, HallCertificate, HallViolator};
pub use blossom::{max_general_matching, perfect_general_matching};
pub use factors::{
    cover_from_permutation, one_two_factor, one_two_factor_certified, perfect_matching_with_gadget,
    perfect_matching_with_loops, union_of_regular_perfect_matchings, Component, LoopGadget, TwoFactorCover,
    CLIQUE_GADGET_LIMIT,
};

/// A set of vertex-disjoint edges, kept sorted.
///
/// For bipartite graphs a pair is `(x, y)` with `x` on the left and `y` on the
/// right. For graphs with loops a pair is `(u, v)` with `u <= v`, and `u == v`
/// is a loop.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `mate[x]` for left vertices of a bipartite matching.
    pub fn left_mates(&self, left: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; left];
        for &(x, y) in &self.pairs {
            mate[x] = Some(y);
        }
        mate
    }

    /// Sorted vertices covered by a matching on a single vertex set.
    pub fn covered(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Pairs share no vertex (single vertex set reading).
    pub fn is_vertex_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.pairs.iter().all(|&(u, v)| if u == v { seen.insert(u) } else { seen.insert(u) && seen.insert(v) })
    }

    /// Covers each of `0..n` exactly once.
    pub fn is_perfect_on(&self, n: usize) -> bool {
        self.is_vertex_disjoint() && self.covered() == (0..n).collect::<Vec<_>>()
    }
}
