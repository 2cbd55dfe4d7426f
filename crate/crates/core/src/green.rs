//! Green's relations, egg-box grids, principal factors and 0-rectangular bands.
//!
//! Class ids of every relation are assigned in order of least member, and egg-box
//! rows and columns are sorted the same way, so grids are deterministic.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use fixedbitset::FixedBitSet;

use crate::constructions::ReesMatrixSpec;
use crate::error::{Error, Result};
use crate::semigroup::{ElementId, Semigroup};
use crate::transform;

/// One 𝒟-class drawn as rows (ℛ-classes) by columns (ℒ-classes) of ℋ-class ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EggBox {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub grid: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreensStructure {
    pub l_of: Vec<usize>,
    pub r_of: Vec<usize>,
    pub h_of: Vec<usize>,
    pub d_of: Vec<usize>,
    pub l_classes: Vec<Vec<ElementId>>,
    pub r_classes: Vec<Vec<ElementId>>,
    pub h_classes: Vec<Vec<ElementId>>,
    pub d_classes: Vec<Vec<ElementId>>,
    /// ℋ-class contains an idempotent.
    pub h_group: Vec<bool>,
    pub eggboxes: Vec<EggBox>,
    /// `(d, row, col)` of each ℋ-class inside its egg-box.
    pub h_position: Vec<(usize, usize, usize)>,
    pub l_position: Vec<usize>,
    pub r_position: Vec<usize>,
}

impl GreensStructure {
    pub fn d_count(&self) -> usize {
        self.d_classes.len()
    }

    pub fn h_at(&self, d: usize, row: usize, col: usize) -> usize {
        self.eggboxes[d].grid[row][col]
    }

    pub fn is_group_at(&self, d: usize, row: usize, col: usize) -> bool {
        self.h_group[self.h_at(d, row, col)]
    }

    pub fn is_regular_class(&self, d: usize) -> bool {
        self.eggboxes[d].grid.iter().flatten().any(|&h| self.h_group[h])
    }

    pub fn is_square_class(&self, d: usize) -> bool {
        self.eggboxes[d].rows.len() == self.eggboxes[d].cols.len()
    }

    pub fn is_square(&self) -> bool {
        (0..self.d_count()).all(|d| self.is_square_class(d))
    }

    /// ℋ-classes `H1`, `H2` of one 𝒟-class are mutually inverse (each member of
    /// one has a unique inverse in the other) iff `R1 ∩ L2` and `R2 ∩ L1` are groups.
    pub fn h_classes_mutually_inverse(&self, h1: usize, h2: usize) -> bool {
        let (d1, r1, c1) = self.h_position[h1];
        let (d2, r2, c2) = self.h_position[h2];
        d1 == d2 && self.is_group_at(d1, r1, c2) && self.is_group_at(d1, r2, c1)
    }
}

/// Kernel/image keys for transformation realizations, right-ideal comparison otherwise.
pub fn greens_relations(s: &Semigroup) -> GreensStructure {
    greens_relations_by_kernel_image(s).unwrap_or_else(|_| greens_relations_generic(s))
}

/// `a ℛ b` iff each lies in the other's principal right ideal `xS¹`; the right Cayley
/// graph reaches exactly `aS¹` from `a`, so these are its strongly connected components.
pub fn greens_relations_generic(s: &Semigroup) -> GreensStructure {
    let n = s.order();
    let mut right = vec![FixedBitSet::with_capacity(n); n];
    let mut left = vec![FixedBitSet::with_capacity(n); n];
    for a in 0..n {
        right[a].insert(a);
        left[a].insert(a);
        for x in 0..n {
            right[a].insert(s.mul(a, x));
            left[a].insert(s.mul(x, a));
        }
    }
    let classes = |ideals: &[FixedBitSet]| {
        let mut of = vec![usize::MAX; n];
        let mut next = 0;
        for a in 0..n {
            if of[a] != usize::MAX {
                continue;
            }
            for b in ideals[a].ones() {
                if b >= a && ideals[b].contains(a) {
                    of[b] = next;
                }
            }
            next += 1;
        }
        of
    };
    let r_of = classes(&right);
    let l_of = classes(&left);
    assemble(s, l_of, r_of)
}

/// For (regular subsemigroups of) `T_n`: ℒ is equal image, ℛ is equal kernel.
pub fn greens_relations_by_kernel_image(s: &Semigroup) -> Result<GreensStructure> {
    let set = s.transformations().ok_or(Error::NotTransformations)?;
    let l_of = first_seen_ids((0..s.order()).map(|a| transform::image_mask(set.image(a))));
    let r_of = first_seen_ids((0..s.order()).map(|a| transform::kernel_key(set.image(a))));
    Ok(assemble(s, l_of, r_of))
}

fn first_seen_ids<K: Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut ids = HashMap::new();
    keys.map(|k| {
        let next = ids.len();
        *ids.entry(k).or_insert(next)
    })
    .collect()
}

fn group_members(of: &[usize]) -> Vec<Vec<ElementId>> {
    let count = of.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut classes = vec![Vec::new(); count];
    for (a, &c) in of.iter().enumerate() {
        classes[c].push(a);
    }
    classes
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut y = x;
    while parent[y] != root {
        let next = parent[y];
        parent[y] = root;
        y = next;
    }
    root
}

fn assemble(s: &Semigroup, l_of: Vec<usize>, r_of: Vec<usize>) -> GreensStructure {
    let n = s.order();
    let l_classes = group_members(&l_of);
    let r_classes = group_members(&r_of);

    let mut parent: Vec<usize> = (0..n).collect();
    for class in l_classes.iter().chain(&r_classes) {
        let root = find(&mut parent, class[0]);
        for &b in &class[1..] {
            let rb = find(&mut parent, b);
            if rb != root {
                let (lo, hi) = if rb < root { (rb, root) } else { (root, rb) };
                parent[hi] = lo;
            }
        }
    }
    let d_of = first_seen_ids((0..n).map(|a| find(&mut parent, a)));
    let h_of = first_seen_ids((0..n).map(|a| (l_of[a], r_of[a])));
    let d_classes = group_members(&d_of);
    let h_classes = group_members(&h_of);
    let h_group: Vec<bool> = h_classes.iter().map(|h| h.iter().any(|&e| s.is_idempotent(e))).collect();

    let mut eggboxes = Vec::with_capacity(d_classes.len());
    let mut h_position = vec![(0, 0, 0); h_classes.len()];
    let mut l_position = vec![0; l_classes.len()];
    let mut r_position = vec![0; r_classes.len()];
    for (d, members) in d_classes.iter().enumerate() {
        let mut rows: Vec<usize> = members.iter().map(|&a| r_of[a]).collect();
        let mut cols: Vec<usize> = members.iter().map(|&a| l_of[a]).collect();
        // ids already follow least-member order
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        for (i, &r) in rows.iter().enumerate() {
            r_position[r] = i;
        }
        for (j, &l) in cols.iter().enumerate() {
            l_position[l] = j;
        }
        let mut grid = vec![vec![usize::MAX; cols.len()]; rows.len()];
        for &a in members {
            let (i, j) = (r_position[r_of[a]], l_position[l_of[a]]);
            grid[i][j] = h_of[a];
            h_position[h_of[a]] = (d, i, j);
        }
        debug_assert!(grid.iter().flatten().all(|&h| h != usize::MAX));
        eggboxes.push(EggBox { rows, cols, grid });
    }

    GreensStructure {
        l_of,
        r_of,
        h_of,
        d_of,
        l_classes,
        r_classes,
        h_classes,
        d_classes,
        h_group,
        eggboxes,
        h_position,
        l_position,
        r_position,
    }
}

/// `D ∪ {0}` with products leaving `D` sent to the new zero (last id).
pub fn principal_factor(s: &Semigroup, d: usize) -> Result<Semigroup> {
    let g = s.greens();
    let members = g.d_classes.get(d).ok_or(Error::OutOfRange { id: d, order: g.d_count() })?;
    let m = members.len();
    let mut position = HashMap::with_capacity(m);
    for (i, &a) in members.iter().enumerate() {
        position.insert(a, i);
    }
    let mut table = Vec::with_capacity((m + 1) * (m + 1));
    for x in 0..=m {
        for y in 0..=m {
            table.push(if x == m || y == m { m } else { *position.get(&s.mul(members[x], members[y])).unwrap_or(&m) });
        }
    }
    let mut labels: Vec<String> = members.iter().map(|&a| s.label(a)).collect();
    let mut zero = "0".to_string();
    while labels.contains(&zero) {
        zero.push('\'');
    }
    labels.push(zero);
    Semigroup::from_table(m + 1, table)?.with_name(format!("{}-D{d}", s.name())).with_labels(labels)?.with_zero(m)
}

/// Element ids of `D`, in principal-factor order.
pub fn principal_factor_members(s: &Semigroup, d: usize) -> &[ElementId] {
    &s.greens().d_classes[d]
}

/// The quotient `(D ∪ {0}) / ℋ` as a combinatorial Rees matrix spec:
/// rows are ℛ-classes, columns ℒ-classes, `p_ji = 1` iff cell `(i, j)` is a group.
pub fn zero_rect_band(s: &Semigroup, d: usize) -> Result<ReesMatrixSpec> {
    let g = s.greens();
    if d >= g.d_count() {
        return Err(Error::OutOfRange { id: d, order: g.d_count() });
    }
    if !g.is_regular_class(d) {
        return Err(Error::NotRegular);
    }
    let egg = &g.eggboxes[d];
    let structure = (0..egg.cols.len())
        .map(|j| (0..egg.rows.len()).map(|i| u8::from(g.h_group[egg.grid[i][j]])).collect())
        .collect();
    ReesMatrixSpec::new(egg.rows.len(), egg.cols.len(), structure, true)
}

pub fn is_square(s: &Semigroup) -> bool {
    s.greens().is_square()
}

pub fn is_square_class(s: &Semigroup, d: usize) -> bool {
    s.greens().is_square_class(d)
}

/// Text egg-box dump: a `D<id> rows=<r> cols=<c>` header per 𝒟-class followed by its
/// grid of `H<id>(<size>)` cells, `*` marking groups; blocks separated by blank lines.
pub fn eggbox_dump(s: &Semigroup) -> String {
    let g = s.greens();
    let mut out = String::new();
    for (d, egg) in g.eggboxes.iter().enumerate() {
        if d > 0 {
            out.push('\n');
        }
        writeln!(out, "D{d} rows={} cols={}", egg.rows.len(), egg.cols.len()).unwrap();
        for row in &egg.grid {
            let cells: Vec<String> = row
                .iter()
                .map(|&h| format!("H{h}({}){}", g.h_classes[h].len(), if g.h_group[h] { "*" } else { "" }))
                .collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
    }
    out
}
