use std::collections::BTreeMap;

use super::hclass::inverse_in_h_class;
use super::PermutationMatching;
use crate::constructions::full_transformation_monoid;
use crate::engine::union_of_regular_perfect_matchings;
use crate::error::{Error, Result};
use crate::graphs::{q_class_bigraph, q_classes, BipartiteGraph};
use crate::semigroup::{ElementId, Semigroup};
use crate::transform::{is_transversal, KernelRangePair};

/// ℋ-classes `(Π₁, Y₁)` and `(Π₂, Y₂)` of `T_n` are mutually inverse iff
/// `Y₁` is a transversal of `Π₂` and `Y₂` one of `Π₁`.
pub fn h_classes_mutually_inverse(p1: &KernelRangePair, p2: &KernelRangePair) -> Result<bool> {
    if p1.rank() != p2.rank() {
        return Err(Error::RankMismatch(p1.rank(), p2.rank()));
    }
    Ok(is_transversal(&p1.range, &p2.kernel) && is_transversal(&p2.range, &p1.kernel))
}

/// 𝒬-preserving permutation matching of `T_n`, refined to preserve ℋ as well.
pub fn tn_q_preserving_matching(n: usize) -> Result<(Semigroup, PermutationMatching)> {
    if !(1..=5).contains(&n) {
        return Err(Error::UnsupportedSize(format!("T_{n} matching needs 1 <= n <= 5")));
    }
    let s = full_transformation_monoid(n)?;
    let m = q_preserving_matching(&s, true)?;
    Ok((s, m))
}

/// Perfect matching of every 𝒬-class graph, assembled into one permutation.
///
/// With `refine_h`, the matching is taken on ℋ-classes inside each 𝒬-class
/// (an edge joins mutually inverse classes) and each element then goes to its
/// unique inverse in the partner class, so ℋ is preserved too. Both graphs are
/// checked to be regular before matching; a failure is an internal error.
pub fn q_preserving_matching(s: &Semigroup, refine_h: bool) -> Result<PermutationMatching> {
    let classes = q_classes(s)?;
    let map = if refine_h { h_refined_map(s, &classes)? } else { element_map(s, &classes)? };
    PermutationMatching::certify(s, map)
}

fn regularity_error(what: &str, key: impl std::fmt::Display) -> Error {
    Error::Internal(format!("{what} graph of Q-class {key} is not regular"))
}

fn element_map(s: &Semigroup, classes: &BTreeMap<crate::graphs::QKey, Vec<ElementId>>) -> Result<Vec<ElementId>> {
    let mut parts = Vec::with_capacity(classes.len());
    for key in classes.keys() {
        let g = q_class_bigraph(s, key)?;
        if g.regular_degree().is_none() {
            return Err(regularity_error("element", key));
        }
        parts.push(g);
    }
    let matching = union_of_regular_perfect_matchings(&parts)?;
    let mut map = vec![usize::MAX; s.order()];
    for &(a, b) in matching.pairs() {
        map[a] = b;
    }
    Ok(map)
}

fn h_refined_map(s: &Semigroup, classes: &BTreeMap<crate::graphs::QKey, Vec<ElementId>>) -> Result<Vec<ElementId>> {
    let g = s.greens();
    let mut parts = Vec::with_capacity(classes.len());
    for (key, members) in classes {
        let mut hs: Vec<usize> = members.iter().map(|&a| g.h_of[a]).collect();
        hs.sort_unstable();
        hs.dedup();
        let adj =
            hs.iter().map(|&h1| (0..hs.len()).filter(|&y| g.h_classes_mutually_inverse(h1, hs[y])).collect()).collect();
        let part = BipartiteGraph::new(hs.clone(), hs, adj);
        if part.regular_degree().is_none() {
            return Err(regularity_error("ℋ-class", key));
        }
        parts.push(part);
    }
    let matching = union_of_regular_perfect_matchings(&parts)?;
    let mut map = vec![usize::MAX; s.order()];
    for &(h, partner) in matching.pairs() {
        for &a in &g.h_classes[h] {
            map[a] = inverse_in_h_class(s, a, partner)
                .ok_or_else(|| Error::Internal(format!("no inverse of {a} in H{partner}")))?;
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::partial_transformation_monoid;
    use crate::transform::QSignature;

    fn pair(kernel: &[&[u8]], range: &[u8]) -> KernelRangePair {
        KernelRangePair::new(kernel.iter().map(|b| b.to_vec()).collect(), range.to_vec()).unwrap()
    }

    #[test]
    fn transversal_criterion_examples() {
        let p1 = pair(&[&[0], &[1, 2]], &[0, 1]);
        let p2 = pair(&[&[0, 1], &[2]], &[0, 2]);
        assert!(!h_classes_mutually_inverse(&p1, &p2).unwrap());
        let p1 = pair(&[&[0], &[1, 2]], &[0, 2]);
        assert!(h_classes_mutually_inverse(&p1, &p2).unwrap());
        let unit = pair(&[&[0], &[1], &[2]], &[0, 1, 2]);
        assert!(h_classes_mutually_inverse(&unit, &unit).unwrap());
        assert!(matches!(h_classes_mutually_inverse(&unit, &p2), Err(Error::RankMismatch(3, 2))));
    }

    #[test]
    fn transversal_criterion_matches_green_test_in_t4() {
        let s = full_transformation_monoid(4).unwrap();
        let g = s.greens();
        let set = s.transformations().unwrap();
        let reps: Vec<ElementId> = g.h_classes.iter().map(|h| h[0]).collect();
        for (h1, &a) in reps.iter().enumerate() {
            for (h2, &b) in reps.iter().enumerate() {
                let (p, q) = (set.get(a).kernel_range(), set.get(b).kernel_range());
                if p.rank() == q.rank() {
                    assert_eq!(h_classes_mutually_inverse(&p, &q).unwrap(), g.h_classes_mutually_inverse(h1, h2));
                }
            }
        }
    }

    #[test]
    fn small_tn_matchings() {
        for n in 1..=4 {
            let (s, m) = tn_q_preserving_matching(n).unwrap();
            assert_eq!(m.len(), s.order());
            assert_eq!(m.flags().q_preserving, Some(true));
            assert!(m.flags().h_preserving);
            let coarse = q_preserving_matching(&s, false).unwrap();
            assert_eq!(coarse.flags().q_preserving, Some(true));
        }
        assert!(tn_q_preserving_matching(0).is_err());
        assert!(tn_q_preserving_matching(6).is_err());
    }

    #[test]
    fn t3_signatures_are_kept() {
        let (s, m) = tn_q_preserving_matching(3).unwrap();
        let set = s.transformations().unwrap();
        for a in 0..27 {
            assert_eq!(QSignature::of_image(set.image(a)), QSignature::of_image(set.image(m.apply(a))));
        }
    }

    #[test]
    fn partial_transformations_with_zero_marked_classes() {
        for n in 1..=3 {
            let s = partial_transformation_monoid(n).unwrap();
            let m = q_preserving_matching(&s, true).unwrap();
            assert_eq!(m.flags().q_preserving, Some(true));
            assert!(m.flags().h_preserving);
        }
    }
}
