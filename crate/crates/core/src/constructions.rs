//! Concrete semigroups: transformation monoids, combinatorial Rees matrix
//! semigroups, direct products, and the named catalog.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{ElementId, Realization, Semigroup, TransformationSet, PAIR_SCAN_LIMIT, TABLE_LIMIT};
use crate::transform::Transformation;

/// Combinatorial Rees matrix semigroup `M⁰[I, Λ; P]` (or `M[I, Λ; P]` without zero).
///
/// `structure[j][i]` is `p_ji` for `j ∈ Λ` (columns) and `i ∈ I` (rows). Elements are
/// `(i, j)` pairs numbered row-major, the zero last; `(i,j)(k,l) = (i,l)` when `p_jk = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesMatrixSpec {
    pub rows: usize,
    pub cols: usize,
    pub structure: Vec<Vec<u8>>,
    pub with_zero: bool,
}

impl ReesMatrixSpec {
    pub fn new(rows: usize, cols: usize, structure: Vec<Vec<u8>>, with_zero: bool) -> Result<Self> {
        let spec = Self { rows, cols, structure, with_zero };
        spec.validate()?;
        Ok(spec)
    }

    /// Structure matrix with `p_ji = 1` exactly for the listed 1-based `(i, j)`.
    pub fn from_idempotents(rows: usize, cols: usize, idempotents: &[(usize, usize)]) -> Result<Self> {
        let mut structure = vec![vec![0u8; rows]; cols];
        for &(i, j) in idempotents {
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(Error::InvalidStructure(format!("position ({i},{j}) outside {rows}x{cols}")));
            }
            structure[j - 1][i - 1] = 1;
        }
        Self::new(rows, cols, structure, true)
    }

    pub fn all_ones(rows: usize, cols: usize, with_zero: bool) -> Result<Self> {
        Self::new(rows, cols, vec![vec![1; rows]; cols], with_zero)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::InvalidStructure("empty index set".into()));
        }
        if self.structure.len() != self.cols || self.structure.iter().any(|r| r.len() != self.rows) {
            return Err(Error::InvalidStructure(format!(
                "structure must be {} x {} (columns by rows)",
                self.cols, self.rows
            )));
        }
        if self.structure.iter().flatten().any(|&p| p > 1) {
            return Err(Error::InvalidStructure("entries must be 0 or 1".into()));
        }
        if !self.with_zero && self.structure.iter().flatten().any(|&p| p == 0) {
            return Err(Error::InvalidStructure("zero entries need an adjoined zero".into()));
        }
        Ok(())
    }

    /// Every row and column of `P` has a 1.
    pub fn is_regular(&self) -> bool {
        (0..self.cols).all(|j| self.structure[j].contains(&1))
            && (0..self.rows).all(|i| (0..self.cols).any(|j| self.structure[j][i] == 1))
    }

    pub fn order(&self) -> usize {
        self.rows * self.cols + usize::from(self.with_zero)
    }

    pub fn zero_id(&self) -> Option<ElementId> {
        self.with_zero.then_some(self.rows * self.cols)
    }

    pub fn id(&self, i: usize, j: usize) -> ElementId {
        i * self.cols + j
    }

    /// 0-based `(i, j)`, or `None` for the zero.
    pub fn coords(&self, a: ElementId) -> Option<(usize, usize)> {
        (a < self.rows * self.cols).then(|| (a / self.cols, a % self.cols))
    }

    pub fn p(&self, j: usize, i: usize) -> bool {
        self.structure[j][i] == 1
    }

    pub fn multiply(&self, a: ElementId, b: ElementId) -> ElementId {
        let zero = self.rows * self.cols;
        match (self.coords(a), self.coords(b)) {
            (Some((i, j)), Some((k, l))) if self.p(j, k) => self.id(i, l),
            _ => zero,
        }
    }

    pub fn inverses(&self, a: ElementId) -> Vec<ElementId> {
        match self.coords(a) {
            None => vec![a],
            Some((i, j)) => {
                let mut out = Vec::new();
                for k in (0..self.rows).filter(|&k| self.p(j, k)) {
                    for l in (0..self.cols).filter(|&l| self.p(l, i)) {
                        out.push(self.id(k, l));
                    }
                }
                out
            }
        }
    }

    pub fn label(&self, a: ElementId) -> String {
        match self.coords(a) {
            Some((i, j)) => format!("({},{})", i + 1, j + 1),
            None => "0".into(),
        }
    }
}

pub fn rees_matrix(spec: &ReesMatrixSpec) -> Result<Semigroup> {
    spec.validate()?;
    let name = format!("rees-{}x{}", spec.rows, spec.cols);
    let rule = Semigroup::from_rule(name, spec.order(), Realization::Rees(spec.clone()));
    let s = if spec.order() <= TABLE_LIMIT { rule.materialize() } else { rule };
    match spec.zero_id() {
        Some(z) => s.with_zero(z),
        None => Ok(s),
    }
}

/// `T_n`, `1 <= n <= 6`; table-backed up to `n = 4`.
pub fn full_transformation_monoid(n: usize) -> Result<Semigroup> {
    if !(1..=6).contains(&n) {
        return Err(Error::UnsupportedSize(format!("T_n needs 1 <= n <= 6, got {n}")));
    }
    Ok(Semigroup::from_transformations(format!("T{n}"), TransformationSet::full(n), n <= 4))
}

/// `PT_n` as the maps of `T_{n+1}` on `{0, .., n}` fixing 0; `1 <= n <= 5`.
pub fn partial_transformation_monoid(n: usize) -> Result<Semigroup> {
    if !(1..=5).contains(&n) {
        return Err(Error::UnsupportedSize(format!("PT_n needs 1 <= n <= 5, got {n}")));
    }
    let degree = n + 1;
    let full = TransformationSet::full(degree);
    let maps: Vec<Vec<u8>> = (0..full.len()).map(|a| full.image(a)).filter(|m| m[0] == 0).map(|m| m.to_vec()).collect();
    let set = TransformationSet::from_maps(degree, maps);
    let labels: Vec<String> = (0..set.len()).map(|a| partial_label(set.image(a))).collect();
    let materialize = set.len() <= TABLE_LIMIT;
    Semigroup::from_transformations(format!("PT{n}"), set, materialize).with_labels(labels)
}

fn partial_label(image: &[u8]) -> String {
    let parts: Vec<String> = image[1..].iter().map(|&y| if y == 0 { "-".into() } else { y.to_string() }).collect();
    format!("[{}]", parts.join(","))
}

/// `OP_n`: maps of the `n`-cycle whose image sequence is cyclic; `3 <= n <= 8`.
pub fn orientation_preserving_monoid(n: usize) -> Result<Semigroup> {
    if !(3..=8).contains(&n) {
        return Err(Error::UnsupportedSize(format!("OP_n needs 3 <= n <= 8, got {n}")));
    }
    // every member is a rotation of a non-decreasing sequence
    let mut maps = Vec::new();
    let mut seq = vec![0u8; n];
    loop {
        for shift in 0..n {
            maps.push((0..n).map(|i| seq[(i + shift) % n]).collect::<Vec<u8>>());
        }
        let Some(pos) = (0..n).rev().find(|&i| (seq[i] as usize) < n - 1) else {
            break;
        };
        let v = seq[pos] + 1;
        seq[pos..].iter_mut().for_each(|x| *x = v);
    }
    let set = TransformationSet::from_maps(n, maps);
    let materialize = set.len() <= TABLE_LIMIT;
    Ok(Semigroup::from_transformations(format!("OP{n}"), set, materialize))
}

/// Componentwise product; ids are `a * |T| + b`.
pub fn direct_product(s: &Semigroup, t: &Semigroup) -> Result<Semigroup> {
    let (m, n) = (s.order(), t.order());
    let order = m.checked_mul(n).filter(|&o| o <= PAIR_SCAN_LIMIT).ok_or_else(|| {
        Error::UnsupportedSize(format!("direct product of orders {m} and {n} exceeds {PAIR_SCAN_LIMIT}"))
    })?;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            table.push(s.mul(x / n, y / n) * n + t.mul(x % n, y % n));
        }
    }
    let labels = (0..order).map(|x| format!("({};{})", s.label(x / n), t.label(x % n))).collect();
    let mut p =
        Semigroup::from_table(order, table)?.with_name(format!("{}x{}", s.name(), t.name())).with_labels(labels)?;
    if let (Some(zs), Some(zt)) = (s.zero(), t.zero()) {
        p = p.with_zero(zs * n + zt)?;
    }
    Ok(p)
}

pub fn cyclic_group(k: usize) -> Result<Semigroup> {
    if k == 0 {
        return Err(Error::UnsupportedSize("cyclic group of order 0".into()));
    }
    let table = (0..k * k).map(|ab| (ab / k + ab % k) % k).collect();
    Ok(Semigroup::from_table(k, table)?.with_name(format!("cyclic-C{k}")))
}

pub fn left_zero_semigroup(n: usize) -> Result<Semigroup> {
    let table = (0..n * n).map(|ab| ab / n).collect();
    Ok(Semigroup::from_table(n, table)?.with_name(format!("left-zero-{n}")))
}

pub fn right_zero_semigroup(n: usize) -> Result<Semigroup> {
    let table = (0..n * n).map(|ab| ab % n).collect();
    Ok(Semigroup::from_table(n, table)?.with_name(format!("right-zero-{n}")))
}

/// Every product equals element 0.
pub fn null_semigroup(n: usize) -> Result<Semigroup> {
    Semigroup::from_table(n, vec![0; n * n])?.with_name(format!("null-{n}")).with_zero(0)
}

/// The symmetric group on three points, as the units of `T_3`.
pub fn symmetric_group_s3() -> Result<Semigroup> {
    let t3 = full_transformation_monoid(3)?;
    let units: Vec<ElementId> = (0..t3.order()).filter(|&a| t3.transformations().unwrap().get(a).rank() == 3).collect();
    Ok(t3.subsemigroup(&units)?.0.with_name("symmetric-S3"))
}

/// `S⁰`: a new absorbing element appended last.
pub fn adjoin_zero(s: &Semigroup) -> Result<Semigroup> {
    adjoin(s, true)
}

/// `S¹`: a new identity appended last.
pub fn adjoin_identity(s: &Semigroup) -> Result<Semigroup> {
    adjoin(s, false)
}

fn adjoin(s: &Semigroup, zero: bool) -> Result<Semigroup> {
    let n = s.order();
    let m = n + 1;
    let mut table = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            table.push(match (a == n, b == n) {
                (false, false) => s.mul(a, b),
                (true, true) => n,
                (true, false) => {
                    if zero {
                        n
                    } else {
                        b
                    }
                }
                (false, true) => {
                    if zero {
                        n
                    } else {
                        a
                    }
                }
            });
        }
    }
    let mut labels = s.labels();
    let base = if zero { "0" } else { "1" };
    let mut fresh = base.to_string();
    while labels.contains(&fresh) {
        fresh.push('\'');
    }
    labels.push(fresh);
    let name = format!("{}^{}", s.name(), base);
    let out = Semigroup::from_table(m, table)?.with_name(name).with_labels(labels)?;
    if zero {
        out.with_zero(n)
    } else if let Some(z) = s.zero() {
        out.with_zero(z)
    } else {
        Ok(out)
    }
}

pub const CATALOG_NAMES: &[&str] = &[
    "example-1.3",
    "prop-1.5-T",
    "remarks-2.5",
    "brandt-B2",
    "rect-band-MxN",
    "cyclic-CK",
    "left-zero-N",
    "right-zero-N",
    "null-N",
    "symmetric-S3",
];

/// Named instances; see [`CATALOG_NAMES`] for the accepted patterns.
pub fn catalog(name: &str) -> Result<Semigroup> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    let small =
        |s: &str| -> Result<usize> { s.parse::<usize>().ok().filter(|&v| (1..=64).contains(&v)).ok_or_else(unknown) };
    let s = match name {
        "example-1.3" => rees_matrix(&ReesMatrixSpec::from_idempotents(2, 3, &[(1, 2), (1, 3), (2, 1)])?)?,
        "prop-1.5-T" => {
            rees_matrix(&ReesMatrixSpec::from_idempotents(3, 3, &[(1, 2), (1, 3), (2, 2), (2, 3), (3, 1)])?)?
        }
        "remarks-2.5" => {
            rees_matrix(&ReesMatrixSpec::from_idempotents(3, 3, &[(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)])?)?
        }
        "brandt-B2" => rees_matrix(&ReesMatrixSpec::from_idempotents(2, 2, &[(1, 1), (2, 2)])?)?,
        "symmetric-S3" => symmetric_group_s3()?,
        _ => {
            if let Some(dims) = name.strip_prefix("rect-band-") {
                let (m, n) = dims.split_once('x').ok_or_else(unknown)?;
                rees_matrix(&ReesMatrixSpec::all_ones(small(m)?, small(n)?, false)?)?
            } else if let Some(k) = name.strip_prefix("cyclic-C") {
                cyclic_group(small(k)?)?
            } else if let Some(k) = name.strip_prefix("left-zero-") {
                left_zero_semigroup(small(k)?)?
            } else if let Some(k) = name.strip_prefix("right-zero-") {
                right_zero_semigroup(small(k)?)?
            } else if let Some(k) = name.strip_prefix("null-") {
                null_semigroup(small(k)?)?
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(s.with_name(name))
}

/// `T` from the closure argument together with its 7-element retract.
pub struct Retract {
    pub whole: Semigroup,
    /// The retract image as a subsemigroup of `whole`.
    pub image: Semigroup,
    /// New id in `image` to id in `whole`.
    pub embedding: Vec<ElementId>,
    /// The retraction as a map on `whole`: `(1,j) ↦ (2,j)`, everything else fixed.
    pub retraction: Vec<ElementId>,
}

pub fn prop15_retract() -> Result<Retract> {
    let whole = catalog("prop-1.5-T")?;
    let spec = ReesMatrixSpec::from_idempotents(3, 3, &[(1, 2), (1, 3), (2, 2), (2, 3), (3, 1)])?;
    let members: Vec<ElementId> = (0..whole.order()).filter(|&a| spec.coords(a).is_none_or(|(i, _)| i > 0)).collect();
    let (image, embedding) = whole.subsemigroup(&members)?;
    let retraction = (0..whole.order())
        .map(|a| match spec.coords(a) {
            Some((0, j)) => spec.id(1, j),
            _ => a,
        })
        .collect();
    Ok(Retract { whole, image: image.with_name("prop-1.5-retract"), embedding, retraction })
}

/// `(A, P, r)` coordinates of a rank `k >= 2` member of `OP_n`: `A` the image,
/// `P` the initial points of the convex kernel classes, and `K_i α = a_{(i + r) mod k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpTriple {
    pub range: Vec<u8>,
    pub initials: Vec<u8>,
    pub shift: usize,
}

pub fn op_triple_decompose(alpha: &Transformation) -> Result<OpTriple> {
    if !alpha.is_orientation_preserving() {
        return Err(Error::NotOrientationPreserving);
    }
    let n = alpha.degree();
    let k = alpha.rank();
    if k < 2 {
        return Err(Error::RankTooSmall(k));
    }
    let range = alpha.image_set();
    let img = alpha.image();
    // initial point of a class: its cyclic predecessor lies in another class
    let initials: Vec<u8> = (0..n).filter(|&x| img[(x + n - 1) % n] != img[x]).map(|x| x as u8).collect();
    if initials.len() != k {
        return Err(Error::NotOrientationPreserving);
    }
    let slot = |y: u8| range.iter().position(|&a| a == y).expect("image point");
    let shift = slot(img[initials[0] as usize]);
    for (i, &p) in initials.iter().enumerate() {
        if slot(img[p as usize]) != (i + shift) % k {
            return Err(Error::NotOrientationPreserving);
        }
    }
    Ok(OpTriple { range, initials, shift })
}

pub fn op_triple_compose(n: usize, triple: &OpTriple) -> Result<Transformation> {
    let k = triple.range.len();
    let ascending = |v: &[u8]| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&x| (x as usize) < n);
    if k < 2 {
        return Err(Error::RankTooSmall(k));
    }
    if triple.initials.len() != k || !ascending(&triple.range) || !ascending(&triple.initials) || triple.shift >= k {
        return Err(Error::InvalidPartition(format!("{triple:?}")));
    }
    let mut image = vec![0u8; n];
    for i in 0..k {
        let start = triple.initials[i] as usize;
        let end = triple.initials[(i + 1) % k] as usize;
        let target = triple.range[(i + triple.shift) % k];
        let mut x = start;
        loop {
            image[x] = target;
            x = (x + 1) % n;
            if x == end {
                break;
            }
        }
    }
    Transformation::new(image)
}

/// Whether every kernel class of `alpha` is an interval of the cycle `0 → 1 → .. → n-1 → 0`.
pub fn kernel_classes_convex(alpha: &Transformation) -> bool {
    let n = alpha.degree();
    alpha.kernel().iter().all(|block| {
        block.len() == n || block.iter().filter(|&&x| !block.contains(&(((x as usize + n - 1) % n) as u8))).count() == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transformation_monoid_orders() {
        let orders: Vec<usize> = (1..=5).map(|n| full_transformation_monoid(n).unwrap().order()).collect();
        assert_eq!(orders, vec![1, 4, 27, 256, 3125]);
        assert!(full_transformation_monoid(4).unwrap().is_table_backed());
        assert!(!full_transformation_monoid(5).unwrap().is_table_backed());
        assert!(full_transformation_monoid(0).is_err());
        assert!(full_transformation_monoid(7).is_err());
    }

    #[test]
    fn t3_has_ten_idempotents() {
        // brute force: maps e of {0,1,2} with e∘e = e
        let mut expected = 0;
        for code in 0..27 {
            let e = [code / 9, (code / 3) % 3, code % 3];
            if (0..3).all(|x| e[e[x]] == e[x]) {
                expected += 1;
            }
        }
        assert_eq!(expected, 10);
        assert_eq!(full_transformation_monoid(3).unwrap().idempotents().len(), expected);
    }

    #[test]
    fn partial_transformation_orders() {
        assert_eq!(partial_transformation_monoid(1).unwrap().order(), 2);
        assert_eq!(partial_transformation_monoid(2).unwrap().order(), 9);
        let pt3 = partial_transformation_monoid(3).unwrap();
        assert_eq!(pt3.order(), 64);
        assert!(pt3.is_regular());
        assert!(partial_transformation_monoid(6).is_err());
    }

    #[test]
    fn op_membership() {
        let op3 = orientation_preserving_monoid(3).unwrap();
        let set = op3.transformations().unwrap();
        let constants = (0..op3.order()).filter(|&a| set.get(a).rank() == 1).count();
        assert_eq!(constants, 3);
        assert!(set.index_of(&[0, 2, 1]).is_none());
        for n in 3..=6 {
            let op = orientation_preserving_monoid(n).unwrap();
            let expected = (0..n.pow(n as u32))
                .filter(|&code| {
                    let img: Vec<u8> = (0..n).rev().map(|i| ((code / n.pow(i as u32)) % n) as u8).collect();
                    crate::transform::is_cyclic_sequence(&img)
                })
                .count();
            assert_eq!(op.order(), expected, "n = {n}");
        }
    }

    #[test]
    fn op_closed_under_composition() {
        for n in 3..=6 {
            let op = orientation_preserving_monoid(n).unwrap();
            let set = op.transformations().unwrap();
            for a in 0..op.order() {
                let ta = set.get(a);
                for b in 0..op.order() {
                    assert!(ta.compose(&set.get(b)).is_orientation_preserving());
                }
            }
        }
    }

    #[test]
    fn op4_kernel_classes_are_convex() {
        let op = orientation_preserving_monoid(4).unwrap();
        let set = op.transformations().unwrap();
        for a in 0..op.order() {
            let t = set.get(a);
            if t.rank() >= 2 {
                assert!(kernel_classes_convex(&t), "{t}");
            }
        }
    }

    #[test]
    fn triple_examples() {
        let alpha = Transformation::new(vec![0, 2, 2, 2]).unwrap();
        assert_eq!(
            op_triple_decompose(&alpha).unwrap(),
            OpTriple { range: vec![0, 2], initials: vec![0, 1], shift: 0 }
        );
        let rho = Transformation::new(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(
            op_triple_decompose(&rho).unwrap(),
            OpTriple { range: vec![0, 1, 2, 3], initials: vec![0, 1, 2, 3], shift: 1 }
        );
        assert!(matches!(op_triple_decompose(&Transformation::constant(4, 1)), Err(Error::RankTooSmall(1))));
        assert!(matches!(
            op_triple_decompose(&Transformation::new(vec![0, 2, 1]).unwrap()),
            Err(Error::NotOrientationPreserving)
        ));
    }

    #[test]
    fn triple_round_trip() {
        for n in 3..=6 {
            let op = orientation_preserving_monoid(n).unwrap();
            let set = op.transformations().unwrap();
            for a in 0..op.order() {
                let t = set.get(a);
                if t.rank() < 2 {
                    continue;
                }
                let triple = op_triple_decompose(&t).unwrap();
                assert_eq!(op_triple_compose(n, &triple).unwrap(), t);
            }
        }
    }

    #[test]
    fn rees_idempotent_law() {
        for name in ["example-1.3", "prop-1.5-T", "remarks-2.5", "brandt-B2"] {
            let s = catalog(name).unwrap();
            let Realization::Rees(spec) = s.realization() else { panic!() };
            for a in 0..s.order() {
                let expected = spec.coords(a).is_none_or(|(i, j)| spec.p(j, i));
                assert_eq!(s.is_idempotent(a), expected, "{name} {}", s.label(a));
            }
        }
    }

    #[test]
    fn example_13_structure() {
        let spec = ReesMatrixSpec::from_idempotents(2, 3, &[(1, 2), (1, 3), (2, 1)]).unwrap();
        // p_12 = p_21 = p_31 = 1 (1-based p_ji)
        assert_eq!(spec.structure, vec![vec![0, 1], vec![1, 0], vec![1, 0]]);
        assert!(spec.is_regular());
        assert_eq!(catalog("example-1.3").unwrap().order(), 7);
        assert_eq!(catalog("prop-1.5-T").unwrap().order(), 10);
        assert_eq!(catalog("remarks-2.5").unwrap().order(), 10);
        assert_eq!(catalog("brandt-B2").unwrap().order(), 5);
    }

    #[test]
    fn all_ones_with_zero_is_rectangular_band_plus_zero() {
        let s = rees_matrix(&ReesMatrixSpec::all_ones(2, 2, true).unwrap()).unwrap();
        assert_eq!(s.order(), 5);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(s.mul(a, b), (a / 2) * 2 + b % 2);
            }
        }
    }

    #[test]
    fn rees_rejects_bad_matrices() {
        assert!(ReesMatrixSpec::new(2, 2, vec![vec![1, 2], vec![0, 1]], true).is_err());
        assert!(ReesMatrixSpec::new(2, 2, vec![vec![1, 0], vec![0, 1]], false).is_err());
        assert!(ReesMatrixSpec::new(2, 2, vec![vec![1, 0]], true).is_err());
    }

    #[test]
    fn rect_band_law() {
        let s = catalog("rect-band-2x3").unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(s.mul(a, b), (a / 3) * 3 + b % 3);
            }
        }
    }

    #[test]
    fn direct_products() {
        let t2 = full_transformation_monoid(2).unwrap();
        assert_eq!(direct_product(&t2, &t2).unwrap().order(), 16);
        let trivial = cyclic_group(1).unwrap();
        let p = direct_product(&t2, &trivial).unwrap();
        assert_eq!(p.table(), t2.table());
        let e = catalog("example-1.3").unwrap();
        let ee = direct_product(&e, &e).unwrap();
        assert_eq!(ee.order(), 49);
        // a regular element pair (a', b') is an inverse of (a, b)
        assert!(ee.is_regular());
        assert_eq!(ee.zero(), Some(48));
        let big = full_transformation_monoid(5).unwrap();
        assert!(direct_product(&big, &big).is_err());
    }

    #[test]
    fn unknown_catalog_names() {
        assert!(matches!(catalog("nope"), Err(Error::UnknownCatalog(_))));
        assert!(catalog("rect-band-2").is_err());
        assert!(catalog("cyclic-C0").is_err());
    }

    #[test]
    fn adjunctions() {
        let c2 = cyclic_group(2).unwrap();
        let c2z = adjoin_zero(&c2).unwrap();
        assert_eq!(c2z.order(), 3);
        assert_eq!(c2z.zero(), Some(2));
        let c2one = adjoin_identity(&c2z).unwrap();
        assert_eq!(c2one.order(), 4);
        for a in 0..4 {
            assert_eq!(c2one.mul(3, a), a);
            assert_eq!(c2one.mul(a, 3), a);
        }
        assert!(matches!(c2one.verify_associativity(), crate::semigroup::Associativity::Holds { .. }));
    }

    #[test]
    fn retract_is_a_retraction() {
        let r = prop15_retract().unwrap();
        assert_eq!(r.image.order(), 7);
        let t = &r.whole;
        for a in 0..t.order() {
            for b in 0..t.order() {
                assert_eq!(r.retraction[t.mul(a, b)], t.mul(r.retraction[a], r.retraction[b]));
            }
        }
        for &a in &r.embedding {
            assert_eq!(r.retraction[a], a);
        }
    }
}
