use super::PermutationMatching;
use crate::constructions::{op_triple_compose, op_triple_decompose, orientation_preserving_monoid, OpTriple};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// The involution of `OP_n` sending the triple `(A, P, r)` to `(P, A, (k − r) mod k)`
/// on ranks `k ≥ 2` and fixing every constant map.
pub fn opn_involution(n: usize) -> Result<(Semigroup, PermutationMatching)> {
    if !(3..=8).contains(&n) {
        return Err(Error::UnsupportedSize(format!("OP_{n} involution needs 3 <= n <= 8")));
    }
    let s = orientation_preserving_monoid(n)?;
    let set = s.transformations().expect("transformation realization");
    let mut map = Vec::with_capacity(s.order());
    for a in 0..s.order() {
        let alpha = set.get(a);
        if alpha.rank() == 1 {
            map.push(a);
            continue;
        }
        let t = op_triple_decompose(&alpha)?;
        let k = t.range.len();
        let swapped = OpTriple { range: t.initials, initials: t.range, shift: (k - t.shift) % k };
        let beta = op_triple_compose(n, &swapped)?;
        map.push(set.index_of(beta.image()).ok_or_else(|| Error::Internal(format!("{beta} is not in OP_{n}")))?);
    }
    let m = PermutationMatching::certify(&s, map)?;
    Ok((s, m))
}
