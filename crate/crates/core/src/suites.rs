//! Verification suites behind `invmatch verify`, and the small-semigroup catalog
//! used for the order ≤ 6 involution check.

use std::collections::HashSet;
use std::str::FromStr;

use crate::constructions::{
    adjoin_identity, adjoin_zero, catalog, cyclic_group, direct_product, full_transformation_monoid, prop15_retract,
    rees_matrix, symmetric_group_s3, ReesMatrixSpec,
};
use crate::error::{Error, Result};
use crate::format::{parse_cayley, write_cayley};
use crate::graphs::{q_class_bigraph, q_class_degree, q_classes};
use crate::green::{greens_relations_by_kernel_image, greens_relations_generic};
use crate::matchers::{
    find_involution_matching, find_permutation_matching, opn_involution, relation_break, theorem24_check,
    tn_q_preserving_matching, PermutationMatching, Relation,
};
use crate::report::Claim;
use crate::semigroup::{Associativity, ElementId, Semigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Tn,
    Opn,
    Counterexamples,
    Prop14Catalog,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "core" => Suite::Core,
            "tn" => Suite::Tn,
            "opn" => Suite::Opn,
            "counterexamples" => Suite::Counterexamples,
            "prop14-catalog" => Suite::Prop14Catalog,
            "all" => Suite::All,
            _ => return Err(Error::UnknownCatalog(format!("suite {s}"))),
        })
    }
}

pub const DEFAULT_TN_MAX: usize = 4;
pub const DEFAULT_OPN_MAX: usize = 8;

/// Runs a suite; `max_n` caps `T_n` (at most 5) and `OP_n` (at most 8).
pub fn run_suite(suite: Suite, max_n: Option<usize>) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Core {
        core_suite(&mut claims)?;
    }
    if all || suite == Suite::Tn {
        tn_suite(&mut claims, max_n.unwrap_or(DEFAULT_TN_MAX).min(5))?;
    }
    if all || suite == Suite::Opn {
        opn_suite(&mut claims, max_n.unwrap_or(DEFAULT_OPN_MAX).min(8))?;
    }
    if all || suite == Suite::Counterexamples {
        counterexample_suite(&mut claims)?;
    }
    if all || suite == Suite::Prop14Catalog {
        prop14_suite(&mut claims)?;
    }
    Ok(claims)
}

const CORE_INSTANCES: &[&str] = &[
    "example-1.3",
    "prop-1.5-T",
    "remarks-2.5",
    "brandt-B2",
    "rect-band-2x3",
    "cyclic-C4",
    "left-zero-3",
    "right-zero-3",
    "null-3",
    "symmetric-S3",
];

fn labels(s: &Semigroup, ids: &[ElementId]) -> Vec<String> {
    ids.iter().map(|&a| s.label(a)).collect()
}

fn core_suite(claims: &mut Vec<Claim>) -> Result<()> {
    for name in CORE_INSTANCES {
        let s = catalog(name)?;
        let assoc = matches!(s.verify_associativity(), Associativity::Holds { .. });
        claims.push(Claim::new(format!("associative/{name}"), assoc, format!("order {}", s.order())));
        let symmetric = (0..s.order()).all(|a| s.inverses_of(a).iter().all(|&b| s.inverses_of(b).contains(&a)));
        claims.push(Claim::new(format!("inverse-symmetry/{name}"), symmetric, ""));
        let text = write_cayley(&s);
        let round_trip = parse_cayley(&text).map(|b| write_cayley(&b) == text).unwrap_or(false);
        claims.push(Claim::new(format!("cayley-round-trip/{name}"), round_trip, ""));
    }
    let s = catalog("example-1.3")?;
    let set: Vec<ElementId> = ["(2,2)", "(2,3)"].iter().filter_map(|l| s.element(l)).collect();
    let v = labels(&s, &s.inverse_set_union(&set));
    claims.push(Claim::new("example-1.3/inverse-union", v == ["(1,1)"], format!("{v:?}")));
    for n in 1..=4 {
        let t = full_transformation_monoid(n)?;
        let fast = greens_relations_by_kernel_image(&t)?;
        let slow = greens_relations_generic(&t);
        let same = fast.d_classes == slow.d_classes && fast.h_classes == slow.h_classes;
        claims.push(Claim::new(format!("green-paths-agree/T{n}"), same, format!("{} D-classes", fast.d_count())));
    }
    let t4 = full_transformation_monoid(4)?;
    let agree = (0..t4.order()).all(|a| t4.inverses_by_scan(a) == t4.inverses_by_structure(a));
    claims.push(Claim::new("inverse-paths-agree/T4", agree, ""));
    Ok(())
}

fn tn_suite(claims: &mut Vec<Claim>, max_n: usize) -> Result<()> {
    for n in 1..=max_n {
        let t = full_transformation_monoid(n)?;
        for key in q_classes(&t)?.keys() {
            let degree = q_class_degree(n, &key.signature)?;
            let g = q_class_bigraph(&t, key)?;
            let observed = g.regular_degree();
            claims.push(Claim::new(
                format!("q-class-regular/T{n}/{key}"),
                observed == Some(degree.m as usize),
                format!("l = {}, r = {}, m = {}, observed {:?}", degree.l, degree.r, degree.m, observed),
            ));
        }
        let (_, m) = tn_q_preserving_matching(n)?;
        let f = m.flags();
        claims.push(Claim::new(
            format!("q-preserving-matching/T{n}"),
            f.q_preserving == Some(true) && f.h_preserving,
            format!("{} elements, {f:?}", m.len()),
        ));
    }
    Ok(())
}

fn opn_suite(claims: &mut Vec<Claim>, max_n: usize) -> Result<()> {
    for n in 3..=max_n {
        let (s, m) = opn_involution(n)?;
        let f = m.flags();
        claims.push(Claim::new(
            format!("opn-involution/OP{n}"),
            f.involution && f.h_preserving,
            format!("order {}", s.order()),
        ));
        let g = s.greens();
        let set = s.transformations().expect("transformations");
        for d in 0..g.d_count() {
            let k = set.get(g.d_classes[d][0]).rank();
            if k < 2 {
                continue;
            }
            let r = theorem24_check(&s, d)?;
            let c = binomial(n, k);
            let egg = &g.eggboxes[d];
            claims.push(Claim::new(
                format!("incidence-matching/OP{n}/rank{k}"),
                r.consistent && r.square && egg.rows.len() == c && egg.cols.len() == c && r.gh_perfect_matching,
                format!("{}x{} grid, {r:?}", egg.rows.len(), egg.cols.len()),
            ));
        }
    }
    Ok(())
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn counterexample_suite(claims: &mut Vec<Claim>) -> Result<()> {
    let s = catalog("example-1.3")?;
    let outcome = find_permutation_matching(&s)?;
    let ok = outcome.obstruction().is_some_and(|o| {
        o.is_genuine(&s) && labels(&s, &o.set) == ["(2,2)", "(2,3)"] && labels(&s, &o.inverses) == ["(1,1)"]
    });
    claims.push(Claim::new("no-permutation-matching/example-1.3", ok, format!("{:?}", outcome.obstruction())));

    let s = catalog("remarks-2.5")?;
    let outcome = find_permutation_matching(&s)?;
    let ok = outcome.obstruction().is_some_and(|o| o.is_genuine(&s) && o.set.len() == 4 && o.inverses.len() == 1);
    claims.push(Claim::new("no-permutation-matching/remarks-2.5", ok, format!("{:?}", outcome.obstruction())));

    let retract = prop15_retract()?;
    let whole = find_involution_matching(&retract.whole)?;
    claims.push(Claim::new("involution/prop-1.5-T", whole.is_some(), ""));
    let image = find_permutation_matching(&retract.image)?;
    claims.push(Claim::new(
        "no-permutation-matching/prop-1.5-retract",
        image.obstruction().is_some_and(|o| o.is_genuine(&retract.image)),
        format!("order {}", retract.image.order()),
    ));
    let w = &retract.whole;
    let hom = (0..w.order()).all(|a| {
        (0..w.order()).all(|b| retract.retraction[w.mul(a, b)] == w.mul(retract.retraction[a], retract.retraction[b]))
    });
    let fixes = retract.embedding.iter().all(|&a| retract.retraction[a] == a);
    claims.push(Claim::new("retraction/prop-1.5-T", hom && fixes, ""));

    let a = catalog("brandt-B2")?;
    let b = catalog("cyclic-C3")?;
    let product_ok = match (find_permutation_matching(&a)?.matching(), find_permutation_matching(&b)?.matching()) {
        (Some(f), Some(g)) => product_matching(&a, f, &b, g).is_ok(),
        _ => false,
    };
    claims.push(Claim::new("direct-product-matching/brandt-B2xcyclic-C3", product_ok, ""));

    let m = find_permutation_matching(&a)?;
    let witness = m.matching().and_then(|m| relation_break(&a, m, Relation::R));
    claims.push(Claim::new(
        "r-not-preserved/brandt-B2",
        witness.is_some(),
        witness.map(|(x, y)| format!("{} R {}", a.label(x), a.label(y))).unwrap_or_default(),
    ));

    let rz = catalog("right-zero-3")?;
    let r = theorem24_check(&rz, 0)?;
    claims.push(Claim::new(
        "incidence-matching/right-zero-3",
        r.consistent && !r.square && r.h_involution_found,
        format!("{r:?}"),
    ));
    Ok(())
}

/// `(a, b) ↦ (f(a), g(b))` on `S × T`, certified on the product.
pub fn product_matching(
    s: &Semigroup,
    f: &PermutationMatching,
    t: &Semigroup,
    g: &PermutationMatching,
) -> Result<(Semigroup, PermutationMatching)> {
    let p = direct_product(s, t)?;
    let n = t.order();
    let map = (0..p.order()).map(|x| f.apply(x / n) * n + g.apply(x % n)).collect();
    let m = PermutationMatching::certify(&p, map)?;
    Ok((p, m))
}

fn prop14_suite(claims: &mut Vec<Claim>) -> Result<()> {
    for s in prop14_catalog()? {
        let found = find_involution_matching(&s)?;
        claims.push(Claim::new(format!("involution/{}", s.name()), found.is_some(), format!("order {}", s.order())));
    }
    let s = catalog("example-1.3")?;
    claims.push(Claim::new("no-involution/example-1.3", find_involution_matching(&s)?.is_none(), "order 7"));
    Ok(())
}

/// Regular semigroups of order at most 6: combinatorial Rees matrix semigroups
/// with `|I||Λ| ≤ 5` plus zero, rectangular bands, `C_1..C_6`, `S_3`, small
/// direct products, and closure under adjoining a zero or an identity.
/// Duplicates (same order and Cayley table) are dropped; isomorphic copies are not.
pub fn prop14_catalog() -> Result<Vec<Semigroup>> {
    let mut base: Vec<Semigroup> = Vec::new();
    for rows in 1..=5 {
        for cols in 1..=5 / rows {
            let cells = rows * cols;
            for bits in 0u32..(1 << cells) {
                let structure: Vec<Vec<u8>> =
                    (0..cols).map(|j| (0..rows).map(|i| ((bits >> (j * rows + i)) & 1) as u8).collect()).collect();
                let spec = ReesMatrixSpec::new(rows, cols, structure, true)?;
                if spec.is_regular() {
                    base.push(rees_matrix(&spec)?.with_name(format!("rees0-{rows}x{cols}-{bits:0cells$b}")));
                }
            }
        }
    }
    for rows in 1..=6 {
        for cols in 1..=6 / rows {
            base.push(catalog(&format!("rect-band-{rows}x{cols}"))?);
        }
    }
    for k in 1..=6 {
        base.push(cyclic_group(k)?);
    }
    base.push(symmetric_group_s3()?);
    base.push(catalog("brandt-B2")?);

    let small: Vec<Semigroup> = base.iter().filter(|s| s.order() <= 3).cloned().collect();
    for (i, x) in small.iter().enumerate() {
        for y in &small[i..] {
            if x.order() * y.order() <= 6 && x.order() > 1 && y.order() > 1 {
                base.push(direct_product(x, y)?);
            }
        }
    }

    let mut seen = HashSet::new();
    let mut out: Vec<Semigroup> = Vec::new();
    let mut frontier = base;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in frontier {
            if s.order() > 6 || !seen.insert((s.order(), s.table())) {
                continue;
            }
            if s.order() < 6 {
                next.push(adjoin_zero(&s)?.with_name(format!("{}+0", s.name())));
                next.push(adjoin_identity(&s)?.with_name(format!("{}+1", s.name())));
            }
            out.push(s);
        }
        frontier = next;
    }
    out.retain(|s| s.is_regular());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_regular_small_and_distinct() {
        let cat = prop14_catalog().unwrap();
        assert!(cat.len() > 50, "{}", cat.len());
        let mut tables = HashSet::new();
        for s in &cat {
            assert!(s.order() <= 6 && s.is_regular());
            assert!(matches!(s.verify_associativity(), Associativity::Holds { exhaustive: true }));
            assert!(tables.insert((s.order(), s.table())));
        }
        assert!(cat.iter().any(|s| s.name() == "brandt-B2" || s.name().starts_with("rees0-2x2-1001")));
    }

    #[test]
    fn suites_pass() {
        for suite in [Suite::Core, Suite::Counterexamples, Suite::Prop14Catalog] {
            let claims = run_suite(suite, None).unwrap();
            let failed: Vec<_> = claims.iter().filter(|c| !c.pass).collect();
            assert!(failed.is_empty(), "{failed:?}");
        }
        let claims = run_suite(Suite::Tn, Some(3)).unwrap();
        assert!(claims.iter().all(|c| c.pass));
        let claims = run_suite(Suite::Opn, Some(5)).unwrap();
        assert!(claims.iter().all(|c| c.pass), "{claims:?}");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(5, 0), 1);
    }
}
