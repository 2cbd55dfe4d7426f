use serde::{Deserialize, Serialize};

use super::{find_permutation_matching, MatchOutcome, PermutationMatching};
use crate::constructions::rees_matrix;
use crate::engine::{hall_certificate, perfect_matching_with_loops, HallCertificate};
use crate::error::{Error, Result};
use crate::graphs::{d_component, InverseGraph};
use crate::green::{principal_factor, zero_rect_band};
use crate::semigroup::{ElementId, Semigroup};

/// Grids with at most this many ℋ-classes get the exhaustive involution search.
pub const EXHAUSTIVE_H_SEARCH_LIMIT: usize = 12;

/// The unique inverse of `a` inside ℋ-class `h`, if `h` and the class of `a` are mutually inverse.
pub(crate) fn inverse_in_h_class(s: &Semigroup, a: ElementId, h: usize) -> Option<ElementId> {
    s.greens().h_classes[h].iter().copied().find(|&b| s.is_inverse(a, b))
}

/// Per 𝒟-class: a permutation matching of the 0-rectangular band gives a
/// bijection `H ↦ H'` of ℋ-classes, and each member of `H` goes to its unique
/// inverse in `H'`. `None` iff some band has no permutation matching.
pub fn h_preserving_permutation_matching(s: &Semigroup) -> Result<Option<PermutationMatching>> {
    if !s.is_regular() {
        return Err(Error::NotRegular);
    }
    let g = s.greens();
    let mut map = vec![usize::MAX; s.order()];
    for d in 0..g.d_count() {
        let spec = zero_rect_band(s, d)?;
        let band = rees_matrix(&spec)?;
        let MatchOutcome::Matching(f) = find_permutation_matching(&band)? else {
            return Ok(None);
        };
        let egg = &g.eggboxes[d];
        // ℋ-classes in sorted id order
        let mut cells: Vec<(usize, usize, usize)> = Vec::new();
        for (i, row) in egg.grid.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                cells.push((h, i, j));
            }
        }
        cells.sort_unstable();
        for (h, i, j) in cells {
            let (k, l) = spec.coords(f.apply(spec.id(i, j))).expect("nonzero maps to nonzero");
            let partner = egg.grid[k][l];
            for &a in &g.h_classes[h] {
                map[a] = inverse_in_h_class(s, a, partner)
                    .ok_or_else(|| Error::Internal(format!("no inverse of {a} in H{partner}")))?;
            }
        }
    }
    PermutationMatching::certify(s, map).map(Some)
}

/// The four conditions whose equivalence is checked on regular semigroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem16Report {
    pub permutation_matching: bool,
    pub h_preserving_matching: bool,
    pub principal_factors_matched: bool,
    pub bands_matched: bool,
}

impl Theorem16Report {
    pub fn consistent(&self) -> bool {
        let v =
            [self.permutation_matching, self.h_preserving_matching, self.principal_factors_matched, self.bands_matched];
        v.iter().all(|&x| x == v[0])
    }
}

/// Each condition is computed on its own; non-regular inputs fail the last three outright.
pub fn theorem16_conditions(s: &Semigroup) -> Result<Theorem16Report> {
    let permutation_matching = find_permutation_matching(s)?.matching().is_some();
    let h_preserving_matching = match h_preserving_permutation_matching(s) {
        Ok(m) => m.is_some(),
        Err(Error::NotRegular) => false,
        Err(e) => return Err(e),
    };
    let g = s.greens();
    let mut principal_factors_matched = true;
    let mut bands_matched = true;
    for d in 0..g.d_count() {
        let factor = principal_factor(s, d)?;
        if find_permutation_matching(&factor)?.matching().is_none() {
            principal_factors_matched = false;
        }
        let band_ok = match zero_rect_band(s, d) {
            Ok(spec) => find_permutation_matching(&rees_matrix(&spec)?)?.matching().is_some(),
            Err(Error::NotRegular) => false,
            Err(e) => return Err(e),
        };
        bands_matched &= band_ok;
    }
    Ok(Theorem16Report { permutation_matching, h_preserving_matching, principal_factors_matched, bands_matched })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem24Report {
    pub square: bool,
    pub gh_perfect_matching: bool,
    pub h_involution_found: bool,
    pub consistent: bool,
    /// The ℋ-involution came from the exhaustive search rather than the loop-gadget matching.
    pub exhaustive: bool,
}

/// Squareness, a perfect matching of the 𝒟-component of the incidence graph, and
/// an ℋ-preserving involution matching of the principal factor, each found
/// independently; `consistent` is `matching ⇔ square ∧ involution`.
pub fn theorem24_check(s: &Semigroup, d: usize) -> Result<Theorem24Report> {
    let g = s.greens();
    if d >= g.d_count() {
        return Err(Error::OutOfRange { id: d, order: g.d_count() });
    }
    let square = g.is_square_class(d);
    let comp = d_component(s, d);
    let gh_perfect_matching =
        comp.left_len() == comp.right_len() && matches!(hall_certificate(&comp), HallCertificate::Saturating(_));

    let egg = &g.eggboxes[d];
    let cells: Vec<usize> = egg.grid.iter().flatten().copied().collect();
    let exhaustive = cells.len() <= EXHAUSTIVE_H_SEARCH_LIMIT;
    let pairing = if exhaustive { h_involution_exhaustive(s, &cells) } else { h_involution_by_matching(s, &cells) };
    let h_involution_found = match pairing {
        Some(partner) => lift_h_involution(s, &cells, &partner)?,
        None => false,
    };
    Ok(Theorem24Report {
        square,
        gh_perfect_matching,
        h_involution_found,
        consistent: gh_perfect_matching == (square && h_involution_found),
        exhaustive,
    })
}

/// Whether cell `x` may be paired with cell `y`: a self-pair needs a group.
fn cells_pairable(s: &Semigroup, cells: &[usize], x: usize, y: usize) -> bool {
    s.greens().h_classes_mutually_inverse(cells[x], cells[y])
}

/// Backtracking over involutions of the grid cells.
fn h_involution_exhaustive(s: &Semigroup, cells: &[usize]) -> Option<Vec<usize>> {
    fn extend(s: &Semigroup, cells: &[usize], partner: &mut Vec<usize>) -> bool {
        let Some(x) = partner.iter().position(|&p| p == usize::MAX) else {
            return true;
        };
        for y in x..cells.len() {
            if partner[y] == usize::MAX && cells_pairable(s, cells, x, y) {
                partner[x] = y;
                partner[y] = x;
                if extend(s, cells, partner) {
                    return true;
                }
                partner[x] = usize::MAX;
                partner[y] = usize::MAX;
            }
        }
        false
    }
    let mut partner = vec![usize::MAX; cells.len()];
    extend(s, cells, &mut partner).then_some(partner)
}

/// 1-factor (loops at groups) of the mutual-inverse graph on the grid cells.
fn h_involution_by_matching(s: &Semigroup, cells: &[usize]) -> Option<Vec<usize>> {
    let mut edges = Vec::new();
    for x in 0..cells.len() {
        for y in x..cells.len() {
            if cells_pairable(s, cells, x, y) {
                edges.push((x, y));
            }
        }
    }
    let m = perfect_matching_with_loops(&InverseGraph::from_edges(cells.len(), &edges))?;
    let mut partner = vec![0; cells.len()];
    for &(x, y) in m.pairs() {
        partner[x] = y;
        partner[y] = x;
    }
    Some(partner)
}

/// Lifts a cell involution to elements (the zero of the principal factor is fixed)
/// and re-checks the result as an involution matching of `D`.
fn lift_h_involution(s: &Semigroup, cells: &[usize], partner: &[usize]) -> Result<bool> {
    let g = s.greens();
    for (x, &h) in cells.iter().enumerate() {
        let target = cells[partner[x]];
        for &a in &g.h_classes[h] {
            let b = inverse_in_h_class(s, a, target)
                .ok_or_else(|| Error::Internal(format!("cells H{h} and H{target} are not mutually inverse")))?;
            if inverse_in_h_class(s, b, h) != Some(a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
