//! Finite semigroups with table-backed or rule-backed multiplication, and the
//! element-level algebra on top of them: idempotents, inverse sets, regularity.

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::ReesMatrixSpec;
use crate::error::{Error, Result};
use crate::green::{self, GreensStructure};
use crate::transform::{self, Transformation};

/// Index of an element, `0 <= id < order`.
pub type ElementId = usize;

/// Largest order for which inverse sets are computed by a full pair scan.
pub const PAIR_SCAN_LIMIT: usize = 5000;

/// Largest order a rule-backed construction is materialized into a Cayley table.
pub const TABLE_LIMIT: usize = 1024;

const ASSOCIATIVITY_SAMPLES: usize = 20_000;

/// A set of transformations of `[degree]`, closed under composition, indexed
/// lexicographically by image tuple.
#[derive(Clone)]
pub struct TransformationSet {
    degree: usize,
    images: Vec<u8>,
    codes: Vec<u64>,
    full: bool,
}

impl TransformationSet {
    /// All of `T_n`.
    pub fn full(degree: usize) -> Self {
        let order = degree.pow(degree as u32);
        let mut images = Vec::with_capacity(order * degree);
        for code in 0..order {
            let mut c = code;
            let start = images.len();
            images.resize(start + degree, 0);
            for i in (0..degree).rev() {
                images[start + i] = (c % degree) as u8;
                c /= degree;
            }
        }
        Self { degree, images, codes: (0..order as u64).collect(), full: true }
    }

    /// The given maps, deduplicated and sorted. Closure is not checked here.
    pub fn from_maps(degree: usize, mut maps: Vec<Vec<u8>>) -> Self {
        maps.sort();
        maps.dedup();
        let codes = maps.iter().map(|m| code_of(m, degree)).collect();
        let full = maps.len() == degree.pow(degree as u32);
        Self { degree, images: maps.concat(), codes, full }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn image(&self, id: ElementId) -> &[u8] {
        &self.images[id * self.degree..(id + 1) * self.degree]
    }

    pub fn get(&self, id: ElementId) -> Transformation {
        Transformation::new(self.image(id).to_vec()).expect("stored maps are valid")
    }

    pub fn index_of(&self, image: &[u8]) -> Option<ElementId> {
        if image.len() != self.degree || image.iter().any(|&y| y as usize >= self.degree) {
            return None;
        }
        let code = code_of(image, self.degree);
        if self.full {
            Some(code as usize)
        } else {
            self.codes.binary_search(&code).ok()
        }
    }

    fn compose(&self, a: ElementId, b: ElementId) -> ElementId {
        let (ia, ib) = (self.image(a), self.image(b));
        let mut code = 0u64;
        for &x in ia {
            code = code * self.degree as u64 + ib[x as usize] as u64;
        }
        if self.full {
            code as usize
        } else {
            self.codes.binary_search(&code).expect("transformation set is closed under composition")
        }
    }
}

fn code_of(image: &[u8], degree: usize) -> u64 {
    image.iter().fold(0u64, |c, &y| c * degree as u64 + y as u64)
}

/// What the elements of a semigroup concretely are.
#[derive(Clone)]
pub enum Realization {
    Abstract,
    Transformations(TransformationSet),
    Rees(ReesMatrixSpec),
}

/// Outcome of an associativity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Associativity {
    /// Every triple checked (or every sampled triple, when `exhaustive` is false).
    Holds {
        exhaustive: bool,
    },
    Fails {
        a: ElementId,
        b: ElementId,
        c: ElementId,
    },
}

/// Per-element sorted inverse sets `V(a) = { b : aba = a, bab = b }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSets {
    sets: Vec<Vec<ElementId>>,
}

impl InverseSets {
    pub fn of(&self, a: ElementId) -> &[ElementId] {
        &self.sets[a]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[ElementId]> {
        self.sets.iter().map(|s| s.as_slice())
    }

    pub fn union(&self, set: &[ElementId]) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = set.iter().flat_map(|&a| self.sets[a].iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A finite semigroup on element ids `0..order`.
#[derive(Clone)]
pub struct Semigroup {
    name: String,
    order: usize,
    table: Option<Vec<u32>>,
    realization: Realization,
    labels: Option<Vec<String>>,
    zero: Option<ElementId>,
    inverse_sets: OnceLock<InverseSets>,
    inverse_rows: Vec<OnceLock<Vec<ElementId>>>,
    greens: OnceLock<GreensStructure>,
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Semigroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("table_backed", &self.is_table_backed())
            .field("zero", &self.zero)
            .finish()
    }
}

impl Semigroup {
    fn build(name: String, order: usize, table: Option<Vec<u32>>, realization: Realization) -> Self {
        let inverse_rows =
            if order > PAIR_SCAN_LIMIT { (0..order).map(|_| OnceLock::new()).collect() } else { Vec::new() };
        Self {
            name,
            order,
            table,
            realization,
            labels: None,
            zero: None,
            inverse_sets: OnceLock::new(),
            inverse_rows,
            greens: OnceLock::new(),
        }
    }

    /// Table-backed semigroup; `table[a * order + b]` is `ab`. Associativity is not checked.
    pub fn from_table(order: usize, table: Vec<ElementId>) -> Result<Self> {
        if order == 0 {
            return Err(Error::UnsupportedSize("empty semigroup".into()));
        }
        if table.len() != order * order {
            return Err(Error::UnsupportedSize(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::OutOfRange { id: bad, order });
        }
        let table = table.into_iter().map(|x| x as u32).collect();
        Ok(Self::build(format!("table-{order}"), order, Some(table), Realization::Abstract))
    }

    /// Semigroup of transformations; materialized into a table when `materialize` is set.
    pub fn from_transformations(name: impl Into<String>, set: TransformationSet, materialize: bool) -> Self {
        let order = set.len();
        let s = Self::build(name.into(), order, None, Realization::Transformations(set));
        if materialize {
            s.materialize()
        } else {
            s
        }
    }

    pub(crate) fn from_rule(name: impl Into<String>, order: usize, realization: Realization) -> Self {
        Self::build(name.into(), order, None, realization)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_zero(mut self, zero: ElementId) -> Result<Self> {
        self.check(zero)?;
        if (0..self.order).any(|a| self.mul(zero, a) != zero || self.mul(a, zero) != zero) {
            return Err(Error::NotAZero(zero));
        }
        self.zero = Some(zero);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::UnsupportedSize(format!("{} labels for order {}", labels.len(), self.order)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Same semigroup with an explicit Cayley table; realization and labels are kept.
    pub fn materialize(&self) -> Self {
        let n = self.order;
        let table: Vec<u32> = (0..n * n).into_par_iter().map(|ab| self.mul(ab / n, ab % n) as u32).collect();
        let mut s = Self::build(self.name.clone(), n, Some(table), self.realization.clone());
        s.labels = self.labels.clone();
        s.zero = self.zero;
        s
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Option<ElementId> {
        self.zero
    }

    pub fn is_table_backed(&self) -> bool {
        self.table.is_some()
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn transformations(&self) -> Option<&TransformationSet> {
        match &self.realization {
            Realization::Transformations(t) => Some(t),
            _ => None,
        }
    }

    pub fn has_explicit_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn label(&self, a: ElementId) -> String {
        if let Some(labels) = &self.labels {
            return labels[a].clone();
        }
        match &self.realization {
            Realization::Transformations(t) => t.get(a).to_string(),
            Realization::Rees(spec) => spec.label(a),
            Realization::Abstract => a.to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order).map(|a| self.label(a)).collect()
    }

    /// Looks an element up by label.
    pub fn element(&self, label: &str) -> Option<ElementId> {
        (0..self.order).find(|&a| self.label(a) == label)
    }

    fn check(&self, a: ElementId) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::OutOfRange { id: a, order: self.order })
        }
    }

    pub fn multiply(&self, a: ElementId, b: ElementId) -> Result<ElementId> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Unchecked product; panics on out-of-range ids.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        if let Some(t) = &self.table {
            return t[a * self.order + b] as ElementId;
        }
        match &self.realization {
            Realization::Transformations(set) => set.compose(a, b),
            Realization::Rees(spec) => spec.multiply(a, b),
            Realization::Abstract => unreachable!("abstract semigroups are table-backed"),
        }
    }

    pub fn table(&self) -> Vec<ElementId> {
        match &self.table {
            Some(t) => t.iter().map(|&x| x as ElementId).collect(),
            None => self.materialize().table(),
        }
    }

    /// Exhaustive for table-backed semigroups, seeded sampling otherwise.
    pub fn verify_associativity(&self) -> Associativity {
        let n = self.order;
        let assoc = |a, b, c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if self.is_table_backed() {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Associativity::Fails { a, b, c };
                        }
                    }
                }
            }
            Associativity::Holds { exhaustive: true }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Associativity::Fails { a, b, c };
                }
            }
            Associativity::Holds { exhaustive: false }
        }
    }

    pub fn is_idempotent(&self, e: ElementId) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<ElementId> {
        (0..self.order).filter(|&e| self.is_idempotent(e)).collect()
    }

    /// `aba = a` and `bab = b`.
    #[inline]
    pub fn is_inverse(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(self.mul(a, b), a) == a && self.mul(self.mul(b, a), b) == b
    }

    /// All inverse sets; pair scan up to [`PAIR_SCAN_LIMIT`], otherwise assembled per element.
    pub fn inverse_sets(&self) -> &InverseSets {
        self.inverse_sets.get_or_init(|| {
            let sets = if self.order <= PAIR_SCAN_LIMIT {
                self.pair_scan_inverses()
            } else {
                (0..self.order).into_par_iter().map(|a| self.inverses_of(a).to_vec()).collect()
            };
            InverseSets { sets }
        })
    }

    fn pair_scan_inverses(&self) -> Vec<Vec<ElementId>> {
        let n = self.order;
        (0..n).into_par_iter().map(|a| (0..n).filter(|&b| self.is_inverse(a, b)).collect()).collect()
    }

    /// `V(a)`, sorted.
    pub fn inverses_of(&self, a: ElementId) -> &[ElementId] {
        if self.order <= PAIR_SCAN_LIMIT {
            return self.inverse_sets().of(a);
        }
        if let Some(all) = self.inverse_sets.get() {
            return all.of(a);
        }
        self.inverse_rows[a].get_or_init(|| self.enumerate_inverses(a))
    }

    /// Inverses from the realization's structure rather than a scan over all of `S`.
    fn enumerate_inverses(&self, a: ElementId) -> Vec<ElementId> {
        match &self.realization {
            Realization::Transformations(set) => {
                let mut out: Vec<ElementId> =
                    transform::tn_inverses(set.image(a), None).iter().filter_map(|b| set.index_of(b)).collect();
                out.sort_unstable();
                out
            }
            Realization::Rees(spec) => spec.inverses(a),
            Realization::Abstract => (0..self.order).filter(|&b| self.is_inverse(a, b)).collect(),
        }
    }

    /// Reference path: `{ b : aba = a, bab = b }` by scanning every `b`.
    pub fn inverses_by_scan(&self, a: ElementId) -> Vec<ElementId> {
        (0..self.order).filter(|&b| self.is_inverse(a, b)).collect()
    }

    /// Reference path for large semigroups: inverses derived from the realization.
    pub fn inverses_by_structure(&self, a: ElementId) -> Vec<ElementId> {
        self.enumerate_inverses(a)
    }

    /// `V(A)`.
    pub fn inverse_set_union(&self, set: &[ElementId]) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = set.iter().flat_map(|&a| self.inverses_of(a).iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Every 𝒟-class contains an idempotent (equivalently, every element has an inverse).
    pub fn is_regular(&self) -> bool {
        let g = self.greens();
        (0..g.d_count()).all(|d| g.is_regular_class(d))
    }

    /// `a = a³` for every `a`, i.e. the identity map is a matching.
    pub fn satisfies_x_eq_x3(&self) -> bool {
        (0..self.order).all(|a| self.mul(self.mul(a, a), a) == a)
    }

    pub fn greens(&self) -> &GreensStructure {
        self.greens.get_or_init(|| green::greens_relations(self))
    }

    /// Subsemigroup on `elements` (sorted, deduplicated), with the map from new ids to old.
    pub fn subsemigroup(&self, elements: &[ElementId]) -> Result<(Semigroup, Vec<ElementId>)> {
        let mut members = elements.to_vec();
        members.sort_unstable();
        members.dedup();
        for &a in &members {
            self.check(a)?;
        }
        let mut position = vec![usize::MAX; self.order];
        for (i, &a) in members.iter().enumerate() {
            position[a] = i;
        }
        let m = members.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &members {
            for &b in &members {
                let ab = self.mul(a, b);
                if position[ab] == usize::MAX {
                    return Err(Error::NotClosed(format!(
                        "{} * {} = {}",
                        self.label(a),
                        self.label(b),
                        self.label(ab)
                    )));
                }
                table.push(position[ab]);
            }
        }
        let mut sub = Semigroup::from_table(m, table)?
            .with_name(format!("{}-sub", self.name))
            .with_labels(members.iter().map(|&a| self.label(a)).collect())?;
        if let Some(z) = self.zero.filter(|&z| position[z] != usize::MAX) {
            sub = sub.with_zero(position[z])?;
        }
        Ok((sub, members))
    }

    /// A zero element if one exists.
    pub fn find_zero(&self) -> Option<ElementId> {
        self.zero
            .or_else(|| (0..self.order).find(|&z| (0..self.order).all(|a| self.mul(z, a) == z && self.mul(a, z) == z)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, full_transformation_monoid, null_semigroup};

    #[test]
    fn two_element_non_associative_table() {
        // 0·0=1, everything else 0: (0·0)·1 = 0 but 0·(0·1) = 1
        let s = Semigroup::from_table(2, vec![1, 0, 0, 0]).unwrap();
        assert!(matches!(s.verify_associativity(), Associativity::Fails { .. }));
    }

    #[test]
    fn catalog_tables_are_associative() {
        for name in ["example-1.3", "prop-1.5-T", "remarks-2.5", "brandt-B2", "rect-band-2x3", "cyclic-C5"] {
            let s = catalog(name).unwrap();
            assert_eq!(s.verify_associativity(), Associativity::Holds { exhaustive: true }, "{name}");
        }
    }

    #[test]
    fn rejects_bad_tables_and_ids() {
        assert!(Semigroup::from_table(2, vec![0, 1, 2, 0]).is_err());
        assert!(Semigroup::from_table(2, vec![0, 1, 1]).is_err());
        let s = catalog("brandt-B2").unwrap();
        assert!(matches!(s.multiply(0, 9), Err(Error::OutOfRange { id: 9, order: 5 })));
    }

    #[test]
    fn zero_must_absorb() {
        let s = Semigroup::from_table(2, vec![0, 1, 0, 1]).unwrap();
        assert!(s.clone().with_zero(0).is_err());
        let s = catalog("example-1.3").unwrap();
        let z = s.zero().unwrap();
        for a in 0..s.order() {
            assert_eq!(s.mul(z, a), z);
            assert_eq!(s.mul(a, z), z);
        }
    }

    #[test]
    fn example_13_products_and_idempotents() {
        let s = catalog("example-1.3").unwrap();
        let e = |l: &str| s.element(l).unwrap();
        assert_eq!(s.mul(e("(2,2)"), e("(2,3)")), e("0"));
        let idem: Vec<String> = s.idempotents().into_iter().map(|a| s.label(a)).collect();
        assert_eq!(idem, vec!["(1,2)", "(1,3)", "(2,1)", "0"]);
        assert_eq!(s.inverse_set_union(&[e("(2,2)"), e("(2,3)")]), vec![e("(1,1)")]);
        assert!(s.inverse_set_union(&[]).is_empty());
    }

    #[test]
    fn prop_15_inverse_sets() {
        let t = catalog("prop-1.5-T").unwrap();
        let e = |l: &str| t.element(l).unwrap();
        let idem: Vec<String> = t.idempotents().into_iter().map(|a| t.label(a)).collect();
        assert_eq!(idem, vec!["(1,2)", "(1,3)", "(2,2)", "(2,3)", "(3,1)", "0"]);
        for a in ["(1,1)", "(2,1)"] {
            assert_eq!(t.inverses_of(e(a)), &[e("(3,2)"), e("(3,3)")]);
        }
    }

    #[test]
    fn rectangular_band_inverses_are_everything() {
        let s = catalog("rect-band-2x3").unwrap();
        let all: Vec<ElementId> = (0..6).collect();
        for a in 0..6 {
            assert_eq!(s.inverses_of(a), all.as_slice());
        }
        assert!(s.satisfies_x_eq_x3());
    }

    #[test]
    fn t2_swap_is_self_inverse_only() {
        let t2 = full_transformation_monoid(2).unwrap();
        let swap = t2.transformations().unwrap().index_of(&[1, 0]).unwrap();
        let id = t2.transformations().unwrap().index_of(&[0, 1]).unwrap();
        assert_eq!(t2.mul(swap, swap), id);
        assert_eq!(t2.inverses_of(swap), &[swap]);
    }

    #[test]
    fn regularity() {
        assert!(full_transformation_monoid(3).unwrap().is_regular());
        assert!(catalog("brandt-B2").unwrap().is_regular());
        assert!(!null_semigroup(2).unwrap().is_regular());
        for name in ["example-1.3", "null-3", "remarks-2.5", "cyclic-C4", "left-zero-3", "symmetric-S3"] {
            let s = catalog(name).unwrap();
            assert_eq!(s.is_regular(), (0..s.order()).all(|a| !s.inverses_by_scan(a).is_empty()), "{name}");
        }
    }

    #[test]
    fn groups_have_one_idempotent() {
        for k in 1..=6 {
            assert_eq!(catalog(&format!("cyclic-C{k}")).unwrap().idempotents(), vec![0]);
        }
    }

    #[test]
    fn rule_and_table_inverses_agree_on_t4() {
        let table = full_transformation_monoid(4).unwrap();
        assert!(table.is_table_backed());
        let rule = Semigroup::from_transformations("T4-rule", TransformationSet::full(4), false);
        for a in 0..256 {
            assert_eq!(table.inverses_of(a), rule.inverses_of(a));
            assert_eq!(rule.inverses_by_structure(a), rule.inverses_by_scan(a));
        }
    }

    #[test]
    fn identity_matching_law_matches_cube_law() {
        for name in ["example-1.3", "prop-1.5-T", "brandt-B2", "rect-band-2x2", "cyclic-C3", "cyclic-C2", "left-zero-3"]
        {
            let s = catalog(name).unwrap();
            let self_inverse = (0..s.order()).all(|a| s.inverses_of(a).contains(&a));
            assert_eq!(self_inverse, s.satisfies_x_eq_x3(), "{name}");
        }
    }

    #[test]
    fn subsemigroup_closure() {
        let t = catalog("prop-1.5-T").unwrap();
        let e = |l: &str| t.element(l).unwrap();
        assert!(t.subsemigroup(&[e("(1,1)"), e("(1,2)")]).is_err());
        let (sub, map) = t.subsemigroup(&[e("(1,2)"), e("0")]).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(map, vec![e("(1,2)"), e("0")]);
    }
}
