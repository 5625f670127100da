//! Partial partitions of `{1,…,n}`.
//!
//! Points are stored zero-based (`0..n`) and each block is a bitmask; the
//! text form `{1,2|3}` and the JSON form use one-based points. Blocks are
//! kept sorted by their least element so structural equality is semantic
//! equality.

use std::fmt;

use thiserror::Error;

/// Largest ground set supported by the bitmask representation.
pub const MAX_POINTS: usize = 16;

/// Bound for [`enumerate_partial_partitions`].
pub const MAX_ENUMERATION: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),
    #[error("partitions live on ground sets of different size ({0} vs {1})")]
    MismatchedGroundSet(usize, usize),
    #[error("invalid partition: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPartition {
    n: usize,
    blocks: Vec<u32>,
}

#[inline]
pub(crate) fn low_bit(mask: u32) -> usize {
    mask.trailing_zeros() as usize
}

pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = low_bit(m);
            m &= m - 1;
            Some(b)
        }
    })
}

impl PartialPartition {
    /// Builds a partial partition from block bitmasks; blocks must be
    /// nonempty, disjoint and inside `0..n`.
    pub fn from_masks(n: usize, mut blocks: Vec<u32>) -> Result<Self, PartitionError> {
        if n > MAX_POINTS {
            return Err(PartitionError::ArgumentOutOfRange(format!("n = {n}")));
        }
        let full = full_mask(n);
        let mut seen = 0u32;
        for &b in &blocks {
            if b == 0 {
                return Err(PartitionError::Invalid("empty block".into()));
            }
            if b & !full != 0 {
                return Err(PartitionError::Invalid(format!("block outside 1..{n}")));
            }
            if b & seen != 0 {
                return Err(PartitionError::Invalid("blocks overlap".into()));
            }
            seen |= b;
        }
        blocks.sort_unstable_by_key(|&b| low_bit(b));
        Ok(Self { n, blocks })
    }

    pub(crate) fn from_masks_unchecked(n: usize, mut blocks: Vec<u32>) -> Self {
        blocks.sort_unstable_by_key(|&b| low_bit(b));
        Self { n, blocks }
    }

    /// Builds from one-based block lists, e.g. `&[&[1, 2], &[3]]`.
    pub fn from_blocks(n: usize, blocks: &[&[usize]]) -> Result<Self, PartitionError> {
        let mut masks = Vec::with_capacity(blocks.len());
        for b in blocks {
            let mut m = 0u32;
            for &p in *b {
                if p == 0 || p > n {
                    return Err(PartitionError::Invalid(format!("point {p} outside 1..{n}")));
                }
                if m & (1 << (p - 1)) != 0 {
                    return Err(PartitionError::Invalid(format!("point {p} repeated")));
                }
                m |= 1 << (p - 1);
            }
            masks.push(m);
        }
        Self::from_masks(n, masks)
    }

    pub fn empty(n: usize) -> Self {
        Self { n, blocks: Vec::new() }
    }

    /// All of `{1..n}` in singleton blocks (ι).
    pub fn singletons(n: usize) -> Self {
        Self::from_masks_unchecked(n, (0..n).map(|i| 1 << i).collect())
    }

    /// The one-block partition of the points in `mask` (ω on that set).
    pub fn single_block(n: usize, mask: u32) -> Self {
        if mask == 0 {
            Self::empty(n)
        } else {
            Self { n, blocks: vec![mask] }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn domain(&self) -> u32 {
        self.blocks.iter().fold(0, |a, b| a | b)
    }

    pub fn is_full(&self) -> bool {
        self.domain() == full_mask(self.n)
    }

    /// Index of the block holding zero-based point `p`.
    pub fn block_of(&self, p: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b & (1 << p) != 0)
    }

    /// Blocks as one-based point lists.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&b| bits(b).map(|p| p + 1).collect()).collect()
    }

    fn check(&self, other: &Self) -> Result<(), PartitionError> {
        if self.n != other.n {
            Err(PartitionError::MismatchedGroundSet(self.n, other.n))
        } else {
            Ok(())
        }
    }

    /// `self` refines into `other`: domain inclusion and every block of
    /// `self` inside a block of `other`.
    pub fn refines(&self, other: &Self) -> Result<bool, PartitionError> {
        self.check(other)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Self) -> bool {
        self.blocks.iter().all(|&b| other.blocks.iter().any(|&c| b & !c == 0))
    }

    /// Nonempty pairwise block intersections.
    pub fn meet_blocks(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check(other)?;
        let mut out = Vec::new();
        for &b in &self.blocks {
            for &c in &other.blocks {
                if b & c != 0 {
                    out.push(b & c);
                }
            }
        }
        Ok(Self::from_masks_unchecked(self.n, out))
    }

    /// Connected components of the union of the two block relations.
    pub fn join_blocks(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check(other)?;
        let mut merged: Vec<u32> = Vec::new();
        for &b in self.blocks.iter().chain(&other.blocks) {
            // merged blocks stay pairwise disjoint, so absorbing everything
            // that meets `acc` (until stable) yields the new component
            let mut acc = b;
            loop {
                let before = acc;
                merged.retain(|&m| {
                    if m & acc != 0 {
                        acc |= m;
                        false
                    } else {
                        true
                    }
                });
                if acc == before {
                    break;
                }
            }
            merged.push(acc);
        }
        Ok(Self::from_masks_unchecked(self.n, merged))
    }

    /// Parses the text form, e.g. `{1,2|3}`; `∅` or `{}` is the empty
    /// partition.
    pub fn parse(n: usize, text: &str) -> Result<Self, PartitionError> {
        let t = text.trim();
        if t == "∅" || t == "{}" {
            return Ok(Self::empty(n));
        }
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| PartitionError::Invalid(format!("expected braces in {t:?}")))?;
        let mut lists: Vec<Vec<usize>> = Vec::new();
        for block in inner.split('|') {
            let pts: Result<Vec<usize>, _> =
                block.split(',').map(|p| p.trim().parse::<usize>()).collect();
            lists.push(pts.map_err(|e| PartitionError::Invalid(e.to_string()))?);
        }
        let refs: Vec<&[usize]> = lists.iter().map(|v| v.as_slice()).collect();
        Self::from_blocks(n, &refs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.to_lists())
    }
}

impl fmt::Display for PartialPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "∅");
        }
        let blocks: Vec<String> = self
            .to_lists()
            .iter()
            .map(|b| b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Every partial partition of `{1..n}` exactly once, `1 ≤ n ≤ 5`.
pub fn enumerate_partial_partitions(n: usize) -> Result<Vec<PartialPartition>, PartitionError> {
    if n == 0 || n > MAX_ENUMERATION {
        return Err(PartitionError::ArgumentOutOfRange(format!("n = {n}, expected 1..=5")));
    }
    Ok(partial_partitions_unbounded(n))
}

pub(crate) fn partial_partitions_unbounded(n: usize) -> Vec<PartialPartition> {
    fn rec(p: usize, n: usize, blocks: &mut Vec<u32>, out: &mut Vec<PartialPartition>) {
        if p == n {
            out.push(PartialPartition::from_masks_unchecked(n, blocks.clone()));
            return;
        }
        // p left out of the domain
        rec(p + 1, n, blocks, out);
        for i in 0..blocks.len() {
            blocks[i] |= 1 << p;
            rec(p + 1, n, blocks, out);
            blocks[i] &= !(1 << p);
        }
        blocks.push(1 << p);
        rec(p + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// Every full partition of a `m`-point set (points `0..m`).
pub fn enumerate_partitions(m: usize) -> Vec<PartialPartition> {
    fn rec(p: usize, m: usize, blocks: &mut Vec<u32>, out: &mut Vec<PartialPartition>) {
        if p == m {
            out.push(PartialPartition::from_masks_unchecked(m, blocks.clone()));
            return;
        }
        for i in 0..blocks.len() {
            blocks[i] |= 1 << p;
            rec(p + 1, m, blocks, out);
            blocks[i] &= !(1 << p);
        }
        blocks.push(1 << p);
        rec(p + 1, m, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    rec(0, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(n: usize, s: &str) -> PartialPartition {
        PartialPartition::parse(n, s).unwrap()
    }

    #[test]
    fn counts_are_bell_numbers_shifted() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203];
        for n in 1..=5 {
            let all = enumerate_partial_partitions(n).unwrap();
            assert_eq!(all.len(), bell[n + 1], "n = {n}");
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
            assert_eq!(enumerate_partitions(n).len(), bell[n]);
        }
        assert!(enumerate_partial_partitions(0).is_err());
        assert!(enumerate_partial_partitions(6).is_err());
    }

    #[test]
    fn n1_and_n2_listings() {
        let one: Vec<String> =
            enumerate_partial_partitions(1).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(one.len(), 2);
        assert!(one.contains(&"∅".to_string()) && one.contains(&"{1}".to_string()));
        let mut two: Vec<String> =
            enumerate_partial_partitions(2).unwrap().iter().map(|p| p.to_string()).collect();
        two.sort();
        let mut expect = vec!["∅", "{1}", "{2}", "{1|2}", "{1,2}"];
        expect.sort();
        assert_eq!(two, expect);
    }

    #[test]
    fn refinement_examples() {
        assert!(pp(2, "{1}").refines(&pp(2, "{1,2}")).unwrap());
        assert!(!pp(2, "{1,2}").refines(&pp(2, "{1|2}")).unwrap());
        assert!(pp(3, "{1|2}").refines(&pp(3, "{1,3|2}")).unwrap());
        assert!(matches!(
            pp(2, "{1}").refines(&pp(3, "{1}")),
            Err(PartitionError::MismatchedGroundSet(2, 3))
        ));
    }

    #[test]
    fn meet_and_join_examples() {
        let a = pp(3, "{1,2}");
        let b = pp(3, "{2,3}");
        assert_eq!(a.meet_blocks(&b).unwrap(), pp(3, "{2}"));
        assert_eq!(a.join_blocks(&b).unwrap(), pp(3, "{1,2,3}"));
        assert_eq!(a.meet_blocks(&a).unwrap(), a);
        // a block bridging two earlier ones
        let c = pp(4, "{1|3}");
        let d = pp(4, "{1,2,3}");
        assert_eq!(c.join_blocks(&d).unwrap(), pp(4, "{1,2,3}"));
        let e = pp(4, "{1,2|3,4}");
        let f = pp(4, "{2,3}");
        assert_eq!(e.join_blocks(&f).unwrap(), pp(4, "{1,2,3,4}"));
    }

    #[test]
    fn refines_is_a_partial_order_with_meet_and_join() {
        for n in 1..=4 {
            let all = enumerate_partial_partitions(n).unwrap();
            for a in &all {
                assert!(a.refines_unchecked(a));
                for b in &all {
                    if a.refines_unchecked(b) && b.refines_unchecked(a) {
                        assert_eq!(a, b);
                    }
                    let m = a.meet_blocks(b).unwrap();
                    let j = a.join_blocks(b).unwrap();
                    assert!(m.refines_unchecked(a) && m.refines_unchecked(b));
                    assert!(a.refines_unchecked(&j) && b.refines_unchecked(&j));
                    for c in &all {
                        if c.refines_unchecked(a) && c.refines_unchecked(b) {
                            assert!(c.refines_unchecked(&m));
                        }
                        if a.refines_unchecked(c) && b.refines_unchecked(c) {
                            assert!(j.refines_unchecked(c));
                        }
                        if a.refines_unchecked(b) && b.refines_unchecked(c) {
                            assert!(a.refines_unchecked(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn text_form() {
        let p = pp(3, "{3|2,1}");
        assert_eq!(p.to_string(), "{1,2|3}");
        assert_eq!(pp(3, "∅").to_string(), "∅");
        assert!(PartialPartition::parse(3, "{1,1}").is_err());
        assert!(PartialPartition::parse(3, "{4}").is_err());
        assert!(PartialPartition::parse(3, "1,2").is_err());
        assert_eq!(p.to_json(), serde_json::json!([[1, 2], [3]]));
    }
}
