//! Transformations of `[n] = {0, .., n-1}` and the kernel/image combinatorics
//! used throughout the transformation-monoid constructions.
//!
//! Maps act on the right: `x(αβ) = (xα)β`, so `compose(α, β)` applies `α` first.

use std::fmt;

use crate::error::{Error, Result};

/// A total map on `[n]`, stored as its image tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    image: Vec<u8>,
}

impl Transformation {
    pub fn new(image: Vec<u8>) -> Result<Self> {
        let n = image.len();
        if n == 0 || n > 16 {
            return Err(Error::UnsupportedSize(format!("transformation degree {n}")));
        }
        if let Some(&bad) = image.iter().find(|&&x| x as usize >= n) {
            return Err(Error::OutOfRange { id: bad as usize, order: n });
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n as u8).collect() }
    }

    pub fn constant(n: usize, value: u8) -> Self {
        Self { image: vec![value; n] }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[u8] {
        &self.image
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.image[x as usize]
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Transformation) -> Transformation {
        Transformation { image: self.image.iter().map(|&x| other.image[x as usize]).collect() }
    }

    /// Sorted image set.
    pub fn image_set(&self) -> Vec<u8> {
        let mut set = self.image.clone();
        set.sort_unstable();
        set.dedup();
        set
    }

    pub fn image_mask(&self) -> u32 {
        image_mask(&self.image)
    }

    pub fn rank(&self) -> usize {
        self.image_mask().count_ones() as usize
    }

    /// Kernel classes, each sorted, listed by least member.
    pub fn kernel(&self) -> Vec<Vec<u8>> {
        kernel_blocks(&self.image)
    }

    /// Canonical kernel key: point `i` gets the index of its class in order of first appearance.
    pub fn kernel_key(&self) -> Vec<u8> {
        kernel_key(&self.image)
    }

    pub fn signature(&self) -> QSignature {
        QSignature::of_image(&self.image)
    }

    pub fn kernel_range(&self) -> KernelRangePair {
        KernelRangePair { kernel: self.kernel(), range: self.image_set() }
    }

    /// The sequence `(0α, .., (n-1)α)` is cyclic: at most one strict descent read circularly.
    pub fn is_orientation_preserving(&self) -> bool {
        is_cyclic_sequence(&self.image)
    }

    /// Partial-map view of a member of the fix-0 copy of `PT_n` inside `T_{n+1}`:
    /// points `1..=n` map to `None` when sent to 0, otherwise to their image shifted down by one.
    pub fn to_partial(&self) -> Option<Vec<Option<u8>>> {
        if self.image[0] != 0 {
            return None;
        }
        Some(self.image[1..].iter().map(|&y| y.checked_sub(1)).collect())
    }

    pub fn from_partial(partial: &[Option<u8>]) -> Result<Self> {
        let mut image = Vec::with_capacity(partial.len() + 1);
        image.push(0);
        image.extend(partial.iter().map(|y| y.map_or(0, |v| v + 1)));
        Self::new(image)
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn image_mask(image: &[u8]) -> u32 {
    image.iter().fold(0u32, |m, &y| m | (1 << y))
}

pub(crate) fn kernel_key(image: &[u8]) -> Vec<u8> {
    let mut seen = [u8::MAX; 16];
    let mut next = 0u8;
    image
        .iter()
        .map(|&y| {
            if seen[y as usize] == u8::MAX {
                seen[y as usize] = next;
                next += 1;
            }
            seen[y as usize]
        })
        .collect()
}

pub(crate) fn kernel_blocks(image: &[u8]) -> Vec<Vec<u8>> {
    let key = kernel_key(image);
    let k = key.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); k];
    for (x, &c) in key.iter().enumerate() {
        blocks[c as usize].push(x as u8);
    }
    blocks
}

pub(crate) fn is_cyclic_sequence(seq: &[u8]) -> bool {
    let n = seq.len();
    (0..n).filter(|&i| seq[i] > seq[(i + 1) % n]).count() <= 1
}

/// Ascending kernel-class sizes of a transformation; the sizes sum to the degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QSignature(pub Vec<u8>);

impl QSignature {
    pub fn new(mut sizes: Vec<u8>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidSignature(format!("{sizes:?}")));
        }
        sizes.sort_unstable();
        Ok(Self(sizes))
    }

    pub fn of_image(image: &[u8]) -> Self {
        let mut counts = [0u8; 16];
        for &y in image {
            counts[y as usize] += 1;
        }
        let mut sizes: Vec<u8> = counts.iter().copied().filter(|&c| c > 0).collect();
        sizes.sort_unstable();
        Self(sizes)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of transversals of any partition with these block sizes.
    pub fn transversal_count(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).product()
    }

    /// All integer partitions of `n`, each ascending, in lexicographic order.
    pub fn all(n: usize) -> Vec<QSignature> {
        fn rec(rem: usize, min: usize, cur: &mut Vec<u8>, out: &mut Vec<QSignature>) {
            if rem == 0 {
                out.push(QSignature(cur.clone()));
                return;
            }
            for p in min..=rem {
                cur.push(p as u8);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 1, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for QSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Kernel partition and range of an ℋ-class of `T_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KernelRangePair {
    /// Blocks, each sorted, listed by least member.
    pub kernel: Vec<Vec<u8>>,
    /// Sorted range.
    pub range: Vec<u8>,
}

impl KernelRangePair {
    pub fn new(mut kernel: Vec<Vec<u8>>, mut range: Vec<u8>) -> Result<Self> {
        for block in &mut kernel {
            block.sort_unstable();
        }
        kernel.sort();
        range.sort_unstable();
        range.dedup();
        let mut covered: Vec<u8> = kernel.iter().flatten().copied().collect();
        covered.sort_unstable();
        let n = covered.len();
        if kernel.iter().any(|b| b.is_empty())
            || covered.iter().enumerate().any(|(i, &x)| x as usize != i)
            || kernel.len() != range.len()
            || range.iter().any(|&y| y as usize >= n)
        {
            return Err(Error::InvalidPartition(format!("kernel {kernel:?} range {range:?}")));
        }
        Ok(Self { kernel, range })
    }

    pub fn rank(&self) -> usize {
        self.range.len()
    }
}

/// `set` meets every block of `blocks` in exactly one point.
pub fn is_transversal(set: &[u8], blocks: &[Vec<u8>]) -> bool {
    set.len() == blocks.len() && blocks.iter().all(|b| b.iter().filter(|x| set.contains(x)).count() == 1)
}

/// Every `β ∈ T_n` with `αβα = α` and `βαβ = β`.
///
/// `β` is fixed by its kernel `Π` (which the image of `α` must transverse) and its
/// image `Y` (which must transverse the kernel of `α`): each block of `Π` holds one
/// point `y` of `Xα`, and the block is sent to the unique point of `Y` in `yα⁻¹`.
/// When `kernel_sizes` is given only kernels with that ascending size list are produced.
/// Output is sorted by image tuple.
pub fn tn_inverses(alpha: &[u8], kernel_sizes: Option<&QSignature>) -> Vec<Vec<u8>> {
    let n = alpha.len();
    let range: Vec<u8> = {
        let mut r = alpha.to_vec();
        r.sort_unstable();
        r.dedup();
        r
    };
    let k = range.len();
    let mut slot = [usize::MAX; 16];
    for (i, &y) in range.iter().enumerate() {
        slot[y as usize] = i;
    }
    // fibres[i] = points sent by α to range[i]
    let mut fibres = vec![Vec::new(); k];
    for (x, &y) in alpha.iter().enumerate() {
        fibres[slot[y as usize]].push(x as u8);
    }
    let free: Vec<u8> = (0..n as u8).filter(|&x| slot[x as usize] == usize::MAX).collect();

    // owners[x] = index into `range` of the Π-block containing x
    let mut kernels: Vec<Vec<usize>> = Vec::new();
    let mut owner = vec![0usize; n];
    for (i, &y) in range.iter().enumerate() {
        owner[y as usize] = i;
    }
    let total = k.pow(free.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &x in &free {
            owner[x as usize] = c % k;
            c /= k;
        }
        if let Some(sig) = kernel_sizes {
            let mut sizes = vec![0u8; k];
            for &o in &owner {
                sizes[o] += 1;
            }
            sizes.sort_unstable();
            if sizes != sig.0 {
                continue;
            }
        }
        kernels.push(owner.clone());
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    for kernel in &kernels {
        choice.iter_mut().for_each(|c| *c = 0);
        loop {
            out.push(kernel.iter().map(|&b| fibres[b][choice[b]]).collect());
            // odometer over the transversal choices
            let mut i = 0;
            while i < k {
                choice[i] += 1;
                if choice[i] < fibres[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    out.sort();
    out
}

/// The unique inverse of `alpha` in the ℋ-class `(kernel, range)`, if that class is
/// mutually inverse with the class of `alpha`.
pub fn tn_inverse_in_h_class(alpha: &[u8], target: &KernelRangePair) -> Option<Vec<u8>> {
    let mine = Transformation { image: alpha.to_vec() }.kernel_range();
    if !is_transversal(&mine.range, &target.kernel) || !is_transversal(&target.range, &mine.kernel) {
        return None;
    }
    let n = alpha.len();
    let mut beta = vec![0u8; n];
    for block in &target.kernel {
        let y = *block.iter().find(|x| mine.range.contains(x))?;
        let z = *target.range.iter().find(|&&z| alpha[z as usize] == y)?;
        for &x in block {
            beta[x as usize] = z;
        }
    }
    Some(beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_inverses(alpha: &[u8]) -> Vec<Vec<u8>> {
        let n = alpha.len();
        let a = Transformation::new(alpha.to_vec()).unwrap();
        let mut out = Vec::new();
        for code in 0..n.pow(n as u32) {
            let mut c = code;
            let mut img = vec![0u8; n];
            for i in (0..n).rev() {
                img[i] = (c % n) as u8;
                c /= n;
            }
            let b = Transformation::new(img.clone()).unwrap();
            if a.compose(&b).compose(&a) == a && b.compose(&a).compose(&b) == b {
                out.push(img);
            }
        }
        out
    }

    #[test]
    fn combinatorial_inverses_match_definition_in_t4() {
        for code in 0..256usize {
            let img: Vec<u8> = (0..4).rev().map(|i| ((code >> (2 * i)) & 3) as u8).collect();
            assert_eq!(tn_inverses(&img, None), brute_inverses(&img), "alpha {img:?}");
        }
    }

    #[test]
    fn kernel_and_signature() {
        let t = Transformation::new(vec![0, 2, 2, 2]).unwrap();
        assert_eq!(t.kernel(), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(t.signature(), QSignature(vec![1, 3]));
        assert_eq!(t.rank(), 2);
        assert_eq!(t.image_set(), vec![0, 2]);
    }

    #[test]
    fn cyclic_sequences() {
        assert!(Transformation::new(vec![1, 1, 1]).unwrap().is_orientation_preserving());
        assert!(Transformation::new(vec![1, 2, 0]).unwrap().is_orientation_preserving());
        assert!(!Transformation::new(vec![0, 2, 1]).unwrap().is_orientation_preserving());
    }

    #[test]
    fn partitions_of_small_integers() {
        let p4: Vec<Vec<u8>> = QSignature::all(4).into_iter().map(|q| q.0).collect();
        assert_eq!(p4, vec![vec![1, 1, 1, 1], vec![1, 1, 2], vec![1, 3], vec![2, 2], vec![4]]);
    }

    #[test]
    fn partial_view_round_trips() {
        let t = Transformation::from_partial(&[Some(1), None, Some(0)]).unwrap();
        assert_eq!(t.image(), &[0, 2, 0, 1]);
        assert_eq!(t.to_partial().unwrap(), vec![Some(1), None, Some(0)]);
    }

    #[test]
    fn rejects_out_of_range_points() {
        assert!(Transformation::new(vec![0, 3, 1]).is_err());
        assert!(KernelRangePair::new(vec![vec![0], vec![2]], vec![0, 1]).is_err());
    }
}
