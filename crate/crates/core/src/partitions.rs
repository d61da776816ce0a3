//! Ordered partitions `[k_0, k_1, …, k_r]` of `k` and the block labels they
//! put on the coordinates `e_1, …, e_k`.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// An ordered partition `[k_0, k_1, …, k_r]` with `k_0 ≥ 0` and `k_i > 0`.
///
/// `k_0` is the size of the zero block (the anisotropic Levi factor), the
/// remaining parts are the sizes of the complex blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedPartition {
    parts: Vec<u32>,
}

impl OrderedPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty part list".into()));
        }
        if parts[1..].contains(&0) {
            return Err(Error::InvalidPartition("zero part after the first".into()));
        }
        if parts.iter().map(|&p| p as u64).sum::<u64>() == 0 {
            return Err(Error::InvalidPartition("partition of zero".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Size `k_0` of the zero block.
    pub fn zero_block(&self) -> u32 {
        self.parts[0]
    }

    /// Sizes `k_1, …, k_r` of the non-zero blocks.
    pub fn complex_blocks(&self) -> &[u32] {
        &self.parts[1..]
    }

    /// Number of non-zero blocks `r`.
    pub fn r(&self) -> usize {
        self.parts.len() - 1
    }

    /// `[0, 1, 1, …, 1]`, the tempered shape.
    pub fn tempered(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfDomain("k = 0".into()));
        }
        let mut parts = Vec::with_capacity(k as usize + 1);
        parts.push(0);
        parts.extend(core::iter::repeat_n(1, k as usize));
        Ok(Self { parts })
    }

    /// `[k]`, the partition of the trivial representation.
    pub fn trivial(k: u32) -> Result<Self> {
        Self::new(alloc::vec![k])
    }

    pub fn is_tempered_shape(&self) -> bool {
        self.parts[0] == 0 && self.parts[1..].iter().all(|&p| p == 1)
    }

    /// Multiplies every part by two (`n_i = 2 k_i`).
    pub fn doubled(&self) -> Self {
        Self { parts: self.parts.iter().map(|&p| 2 * p).collect() }
    }

    /// Halves every part; fails on an odd part.
    pub fn halved(&self) -> Result<Self> {
        if let Some(&part) = self.parts.iter().find(|&&p| p % 2 != 0) {
            return Err(Error::OddPart { part });
        }
        Ok(Self { parts: self.parts.iter().map(|&p| p / 2).collect() })
    }

    pub fn block_assignment(&self) -> BlockAssignment {
        block_assignment(self)
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Block labels `b: {1,…,k} → {0,…,r}`, indexed by the `e`-coordinates.
///
/// The vector is non-increasing: coordinate 1 carries the largest label `r`
/// and the last `k_0` coordinates carry label 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockAssignment {
    values: Vec<u32>,
}

impl BlockAssignment {
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Label of coordinate `i` (0-based).
    pub fn label(&self, i: usize) -> u32 {
        self.values[i]
    }

    /// Recovers the part sizes `[k_0, …, k_r]`.
    pub fn to_partition(&self) -> Result<OrderedPartition> {
        let r = self.values.first().copied().unwrap_or(0) as usize;
        let mut parts = alloc::vec![0u32; r + 1];
        for &v in &self.values {
            parts[v as usize] += 1;
        }
        OrderedPartition::new(parts)
    }
}

/// Every ordered partition of `k`, sorted lexicographically by parts.
pub fn enumerate_partitions(k: u32) -> Result<Vec<OrderedPartition>> {
    if k == 0 {
        return Err(Error::OutOfDomain("k must be positive".into()));
    }
    let mut out = Vec::with_capacity(1usize << k.min(30));
    for k0 in 0..=k {
        let rest = k - k0;
        if rest == 0 {
            out.push(OrderedPartition { parts: alloc::vec![k0] });
            continue;
        }
        for comp in compositions(rest) {
            let mut parts = Vec::with_capacity(comp.len() + 1);
            parts.push(k0);
            parts.extend(comp);
            out.push(OrderedPartition { parts });
        }
    }
    out.sort();
    Ok(out)
}

/// Compositions of `n ≥ 1` (ordered tuples of positive integers summing to
/// `n`), in lexicographic order.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            go(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn block_assignment(p: &OrderedPartition) -> BlockAssignment {
    // x = (0^{k_0}, 1^{k_1}, …, r^{k_r}); the j-th entry of x pairs with e_{k-j+1}.
    let mut values = Vec::with_capacity(p.total() as usize);
    for (label, &size) in p.parts.iter().enumerate().rev() {
        values.extend(core::iter::repeat_n(label as u32, size as usize));
    }
    BlockAssignment { values }
}

/// Partner of `p` under `[0,1,k_2,…,k_r] ∼ [1,k_2,…,k_r]`, if any.
///
/// Only meaningful on the quaternionic side; on the split side the relation
/// is equality.
pub fn equivalent_partition(p: &OrderedPartition) -> Option<OrderedPartition> {
    let parts = p.parts();
    if parts.len() >= 2 && parts[0] == 0 && parts[1] == 1 {
        Some(OrderedPartition { parts: parts[1..].to_vec() })
    } else if parts[0] == 1 {
        let mut out = Vec::with_capacity(parts.len() + 1);
        out.push(0);
        out.extend_from_slice(parts);
        Some(OrderedPartition { parts: out })
    } else {
        None
    }
}

/// The `[0,1,…]`-shaped member of an equivalence pair, or `p` itself.
pub fn canonical_representative(p: &OrderedPartition) -> OrderedPartition {
    if p.parts()[0] == 1 {
        equivalent_partition(p).expect("[1,…] always has a partner")
    } else {
        p.clone()
    }
}

/// Orders partitions of `k` the way the classification tables list them:
/// for each composition `c` of `k` in lexicographic order, `[0, c…]` followed
/// by `[c_1, c_2, …]`.
pub fn table_order(k: u32) -> Result<Vec<OrderedPartition>> {
    if k == 0 {
        return Err(Error::OutOfDomain("k must be positive".into()));
    }
    let mut out = Vec::with_capacity(1usize << k.min(30));
    for c in compositions(k) {
        let mut with_zero = Vec::with_capacity(c.len() + 1);
        with_zero.push(0);
        with_zero.extend_from_slice(&c);
        out.push(OrderedPartition { parts: with_zero });
        out.push(OrderedPartition { parts: c });
    }
    Ok(out)
}
