//! Semigroup-level matchings: validation, permutation and involution search,
//! ℋ-preserving upgrades, the 𝒬-preserving matching of `T_n` and the explicit
//! involution of `OP_n`.

mod hclass;
mod opn;
mod tn;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::engine::{cover_from_permutation, one_two_factor_certified, perfect_matching_with_loops, Component};
use crate::error::{Error, Result};
use crate::graphs::{inverse_graph, q_key, q_scheme};
use crate::semigroup::{ElementId, Semigroup};

pub use hclass::{
    h_preserving_permutation_matching, theorem16_conditions, theorem24_check, Theorem16Report, Theorem24Report,
    EXHAUSTIVE_H_SEARCH_LIMIT,
};
pub use opn::opn_involution;
pub use tn::{h_classes_mutually_inverse, q_preserving_matching, tn_q_preserving_matching};

/// Properties certified by re-checking a matching against the semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingFlags {
    pub involution: bool,
    pub h_preserving: bool,
    /// Only for `T_n` and fix-0 `PT_n`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q_preserving: Option<bool>,
}

/// A bijection `f` on `S` with `f(a) ∈ V(a)`; flags are computed, never supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationMatching {
    map: Vec<ElementId>,
    flags: MatchingFlags,
}

impl PermutationMatching {
    /// Validates `map` as a permutation matching of `s` and certifies its flags.
    pub fn certify(s: &Semigroup, map: Vec<ElementId>) -> Result<Self> {
        if map.len() != s.order() {
            return Err(Error::Internal(format!("map covers {} of {} elements", map.len(), s.order())));
        }
        let partial: Vec<Option<ElementId>> = map.iter().map(|&b| Some(b)).collect();
        let report = validate_matching(s, &partial);
        match report.flags {
            Some(flags) if report.ok => Ok(Self { map, flags }),
            _ => Err(Error::Internal(format!("not a permutation matching: {report:?}"))),
        }
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    pub fn apply(&self, a: ElementId) -> ElementId {
        self.map[a]
    }

    pub fn flags(&self) -> MatchingFlags {
        self.flags
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `(a, f(a))` in id order.
    pub fn pairs(&self) -> Vec<(ElementId, ElementId)> {
        self.map.iter().copied().enumerate().collect()
    }
}

/// Outcome of checking a partial map against the matching definition.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub ok: bool,
    /// Domain points with `f(a)` out of range or not in `V(a)`.
    pub not_inverse: Vec<ElementId>,
    /// Images hit more than once.
    pub repeated_images: Vec<ElementId>,
    pub total: bool,
    /// Present when the map is a total, valid permutation matching.
    pub flags: Option<MatchingFlags>,
}

/// Checks `f(a) ∈ V(a)` on the domain of `f`; for total maps also bijectivity,
/// and then certifies the involution, ℋ and (where defined) 𝒬 flags.
pub fn validate_matching(s: &Semigroup, f: &[Option<ElementId>]) -> ValidationReport {
    let n = s.order();
    let mut report = ValidationReport { total: f.len() == n && f.iter().all(Option::is_some), ..Default::default() };
    let mut hits: HashMap<ElementId, usize> = HashMap::new();
    for (a, image) in f.iter().enumerate().take(n) {
        if let Some(b) = *image {
            if b >= n || !s.is_inverse(a, b) {
                report.not_inverse.push(a);
            }
            *hits.entry(b).or_default() += 1;
        }
    }
    if f.len() > n {
        report.not_inverse.extend(n..f.len());
    }
    report.repeated_images = hits.into_iter().filter(|&(_, c)| c > 1).map(|(b, _)| b).collect();
    report.repeated_images.sort_unstable();
    report.ok = report.not_inverse.is_empty() && report.repeated_images.is_empty();
    if report.ok && report.total {
        let map: Vec<ElementId> = f.iter().map(|b| b.expect("total")).collect();
        report.flags = Some(certify_flags(s, &map));
    }
    report
}

fn certify_flags(s: &Semigroup, map: &[ElementId]) -> MatchingFlags {
    let involution = (0..map.len()).all(|a| map[map[a]] == a);
    let g = s.greens();
    let h_preserving = g.h_classes.iter().all(|h| h.iter().all(|&a| g.h_of[map[a]] == g.h_of[map[h[0]]]));
    let q_preserving = q_scheme(s).ok().map(|scheme| {
        let set = s.transformations().expect("q scheme implies transformations");
        (0..map.len()).all(|a| q_key(scheme, set.image(a)) == q_key(scheme, set.image(map[a])))
    });
    MatchingFlags { involution, h_preserving, q_preserving }
}

/// A set `A` with `|A| > |V(A)|`, which rules out any permutation matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub set: Vec<ElementId>,
    pub inverses: Vec<ElementId>,
}

impl Obstruction {
    pub fn is_genuine(&self, s: &Semigroup) -> bool {
        s.inverse_set_union(&self.set) == self.inverses && self.set.len() > self.inverses.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchOutcome {
    Matching(PermutationMatching),
    Obstruction(Obstruction),
}

impl MatchOutcome {
    pub fn matching(&self) -> Option<&PermutationMatching> {
        match self {
            MatchOutcome::Matching(m) => Some(m),
            MatchOutcome::Obstruction(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            MatchOutcome::Matching(_) => None,
            MatchOutcome::Obstruction(o) => Some(o),
        }
    }
}

/// A permutation matching read off a 1,2-factor of the graph of inverses, or the
/// Hall violator of the double cover as a set of elements.
pub fn find_permutation_matching(s: &Semigroup) -> Result<MatchOutcome> {
    let g = inverse_graph(s);
    match one_two_factor_certified(&g) {
        Ok(cover) => Ok(MatchOutcome::Matching(PermutationMatching::certify(s, cover.successor(s.order()))?)),
        // the unprimed side of the cover is `S` and `N(A)` is exactly `V(A)`
        Err(v) => Ok(MatchOutcome::Obstruction(Obstruction { set: v.set, inverses: v.neighborhood })),
    }
}

/// An involution matching from a 1-factor (loops allowed) of the graph of inverses.
pub fn find_involution_matching(s: &Semigroup) -> Result<Option<PermutationMatching>> {
    let g = inverse_graph(s);
    let Some(m) = perfect_matching_with_loops(&g) else {
        return Ok(None);
    };
    let mut map: Vec<ElementId> = (0..s.order()).collect();
    for &(u, v) in m.pairs() {
        map[u] = v;
        map[v] = u;
    }
    PermutationMatching::certify(s, map).map(Some)
}

/// An involution built from the cycles of `f`: even cycles split into
/// consecutive pairs, and an odd cycle is split after fixing one member `a`
/// with `a ∈ V(a)` (an idempotent, for instance). `None` when an odd cycle of
/// length at least 3 has no such member.
pub fn derive_involution(s: &Semigroup, f: &PermutationMatching) -> Result<Option<PermutationMatching>> {
    let cover = cover_from_permutation(f.map());
    let mut map: Vec<ElementId> = (0..s.order()).collect();
    for comp in &cover.components {
        let cycle = match comp {
            Component::Loop(_) => continue,
            Component::Edge(u, v) => {
                map[*u] = *v;
                map[*v] = *u;
                continue;
            }
            Component::Cycle(c) => c,
        };
        let start = if cycle.len() % 2 == 0 {
            0
        } else {
            match cycle.iter().position(|&a| s.is_inverse(a, a)) {
                Some(p) => p + 1,
                None => return Ok(None),
            }
        };
        let k = cycle.len();
        // consecutive members are mutual inverses since each follows its predecessor under f
        for i in 0..k / 2 {
            let a = cycle[(start + 2 * i) % k];
            let b = cycle[(start + 2 * i + 1) % k];
            map[a] = b;
            map[b] = a;
        }
    }
    PermutationMatching::certify(s, map).map(Some)
}

/// Green's relation used by [`relation_break`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    L,
    R,
    H,
}

/// First pair `(a, b)` with `a ~ b` but `f(a) ≁ f(b)`.
pub fn relation_break(s: &Semigroup, f: &PermutationMatching, relation: Relation) -> Option<(ElementId, ElementId)> {
    let g = s.greens();
    let class = |a: ElementId| match relation {
        Relation::L => g.l_of[a],
        Relation::R => g.r_of[a],
        Relation::H => g.h_of[a],
    };
    let classes = match relation {
        Relation::L => &g.l_classes,
        Relation::R => &g.r_classes,
        Relation::H => &g.h_classes,
    };
    classes.iter().find_map(|members| {
        let a = members[0];
        members.iter().find(|&&b| class(f.apply(a)) != class(f.apply(b))).map(|&b| (a, b))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, full_transformation_monoid};

    fn labels(s: &Semigroup, ids: &[ElementId]) -> Vec<String> {
        ids.iter().map(|&a| s.label(a)).collect()
    }

    #[test]
    fn identity_on_rectangular_band() {
        let s = catalog("rect-band-2x3").unwrap();
        let id: Vec<_> = (0..s.order()).map(Some).collect();
        let report = validate_matching(&s, &id);
        assert!(report.ok);
        assert!(report.flags.unwrap().involution);
    }

    #[test]
    fn identity_on_t2() {
        let s = full_transformation_monoid(2).unwrap();
        let id: Vec<_> = (0..4).map(Some).collect();
        assert!(validate_matching(&s, &id).ok);
        let t3 = full_transformation_monoid(3).unwrap();
        let id: Vec<_> = (0..27).map(Some).collect();
        assert!(!validate_matching(&t3, &id).ok);
    }

    #[test]
    fn partial_and_bad_maps() {
        let s = catalog("brandt-B2").unwrap();
        let mut f = vec![None; 5];
        f[4] = Some(4);
        let r = validate_matching(&s, &f);
        assert!(r.ok && !r.total && r.flags.is_none());
        f[0] = Some(4);
        let r = validate_matching(&s, &f);
        assert_eq!(r.not_inverse, vec![0]);
        assert_eq!(r.repeated_images, vec![4]);
    }

    #[test]
    fn brandt_unique_matching() {
        let s = catalog("brandt-B2").unwrap();
        let m = find_permutation_matching(&s).unwrap();
        let m = m.matching().unwrap();
        for a in 0..5 {
            assert_eq!(s.inverses_of(a), &[m.apply(a)]);
        }
        assert!(m.flags().involution && m.flags().h_preserving);
        let (a, b) = relation_break(&s, m, Relation::R).expect("ℛ is not preserved");
        let g = s.greens();
        assert_eq!(g.r_of[a], g.r_of[b]);
        assert_ne!(g.r_of[m.apply(a)], g.r_of[m.apply(b)]);
        assert!(relation_break(&s, m, Relation::L).is_some());
        assert!(relation_break(&s, m, Relation::H).is_none());
    }

    #[test]
    fn example_13_obstruction() {
        let s = catalog("example-1.3").unwrap();
        let o = find_permutation_matching(&s).unwrap();
        let o = o.obstruction().unwrap();
        assert!(o.is_genuine(&s));
        assert_eq!(labels(&s, &o.set), vec!["(2,2)", "(2,3)"]);
        assert_eq!(labels(&s, &o.inverses), vec!["(1,1)"]);
        assert!(find_involution_matching(&s).unwrap().is_none());
    }

    #[test]
    fn remarks_25_obstruction() {
        let s = catalog("remarks-2.5").unwrap();
        let o = find_permutation_matching(&s).unwrap();
        let o = o.obstruction().unwrap();
        assert!(o.is_genuine(&s));
        assert_eq!(labels(&s, &o.set), vec!["(2,2)", "(2,3)", "(3,2)", "(3,3)"]);
        assert_eq!(labels(&s, &o.inverses), vec!["(1,1)"]);
    }

    #[test]
    fn prop15_involution() {
        let s = catalog("prop-1.5-T").unwrap();
        let m = find_involution_matching(&s).unwrap().expect("involution");
        assert!(m.flags().involution);
    }

    #[test]
    fn t3_permutation_matching() {
        let s = full_transformation_monoid(3).unwrap();
        let m = find_permutation_matching(&s).unwrap();
        assert_eq!(m.matching().unwrap().len(), 27);
    }

    #[test]
    fn derived_involution_from_three_cycle_with_idempotent() {
        // rectangular band: every pair is mutually inverse and every element is idempotent
        let s = catalog("rect-band-1x3").unwrap();
        let f = PermutationMatching::certify(&s, vec![1, 2, 0]).unwrap();
        assert!(!f.flags().involution);
        let inv = derive_involution(&s, &f).unwrap().unwrap();
        assert!(inv.flags().involution);
    }

    #[test]
    fn certify_rejects_non_inverse_maps() {
        let s = catalog("cyclic-C3").unwrap();
        assert!(PermutationMatching::certify(&s, vec![1, 2, 0]).is_err());
        assert!(PermutationMatching::certify(&s, vec![0, 2, 1]).is_ok());
    }
}
