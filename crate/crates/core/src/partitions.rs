//! Set partitions of `{1..n}`: enumeration by kind, the lattice join, the
//! composition `π(σ)` of a partition of blocks with an interval partition, and
//! the `τ_B` / `ι_B` / `φ_B` expansion maps used when products of variables
//! are fed into a cumulant.
//!
//! Partitions are always stored in canonical form: every block sorted, blocks
//! ordered by their least element. Elements are 1-based throughout.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds a partition of `{1..n}`, validating and canonicalizing `blocks`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::Domain("partition contains an empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::Domain(format!("element {e} outside 1..={n}")));
                }
                if seen[e] {
                    return Err(Error::Domain(format!("element {e} appears twice")));
                }
                seen[e] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::Domain(format!(
                "blocks cover {count} elements, expected {n}"
            )));
        }
        Ok(Self::canonical(n, blocks))
    }

    /// Builds a partition whose ground set is inferred from the total block size.
    pub fn from_blocks(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().map(Vec::len).sum();
        Self::new(n, blocks)
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { n, blocks }
    }

    /// Builds a partition from a label per element (`labels[i]` for element `i+1`).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = std::collections::HashMap::new();
        for (i, &label) in labels.iter().enumerate() {
            let idx = *slot.entry(label).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(i + 1);
        }
        Self::canonical(labels.len(), blocks)
    }

    /// The one-block partition `1_n`.
    pub fn one(n: usize) -> Self {
        Self {
            n,
            blocks: if n == 0 {
                vec![]
            } else {
                vec![(1..=n).collect()]
            },
        }
    }

    /// The partition into singletons `0_n`.
    pub fn singletons(n: usize) -> Self {
        Self {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// 0-based block index for every element, in element order.
    pub fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                labels[e - 1] = b;
            }
        }
        labels
    }

    /// The block containing element `e`.
    pub fn block_of(&self, e: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&e).is_ok())
            .map(Vec::as_slice)
    }

    pub fn is_noncrossing(&self) -> bool {
        is_noncrossing(self)
    }

    /// Every block is a run of consecutive integers.
    pub fn is_interval(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.windows(2).all(|w| w[1] == w[0] + 1))
    }

    pub fn is_kind(&self, kind: PartitionKind) -> bool {
        match kind {
            PartitionKind::All => true,
            PartitionKind::NonCrossing => self.is_noncrossing(),
            PartitionKind::Interval => self.is_interval(),
            PartitionKind::IntervalMin2 => {
                self.is_interval() && self.blocks.iter().all(|b| b.len() >= 2)
            }
            PartitionKind::NonCrossingIrreducible => {
                self.is_noncrossing() && self.n >= 1 && self.blocks[0].last() == Some(&self.n)
            }
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Partition::from_blocks(blocks).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    All,
    NonCrossing,
    Interval,
    /// Interval partitions whose blocks all have at least two elements.
    IntervalMin2,
    /// Non-crossing partitions with `1` and `n` in the same block.
    NonCrossingIrreducible,
}

impl std::str::FromStr for PartitionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "all" => Ok(Self::All),
            "nc" | "non-crossing" | "noncrossing" => Ok(Self::NonCrossing),
            "interval" | "int" => Ok(Self::Interval),
            "interval-min2" | "int-min2" => Ok(Self::IntervalMin2),
            "nc-irreducible" | "nc-irr" | "irreducible" => Ok(Self::NonCrossingIrreducible),
            other => Err(Error::Domain(format!("unknown partition kind {other:?}"))),
        }
    }
}

/// Upper bounds on `n` for materializing enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub all: usize,
    pub noncrossing: usize,
    pub interval: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            all: 13,
            noncrossing: 16,
            interval: 24,
        }
    }
}

impl EnumerationLimits {
    fn limit_for(&self, kind: PartitionKind) -> usize {
        match kind {
            PartitionKind::All => self.all,
            PartitionKind::NonCrossing | PartitionKind::NonCrossingIrreducible => self.noncrossing,
            PartitionKind::Interval | PartitionKind::IntervalMin2 => self.interval,
        }
    }
}

/// Every partition of `{1..n}` of the given kind, each exactly once, in a
/// deterministic order.
pub fn enumerate(n: usize, kind: PartitionKind) -> Result<Vec<Partition>> {
    enumerate_with_limits(n, kind, &EnumerationLimits::default())
}

pub fn enumerate_with_limits(
    n: usize,
    kind: PartitionKind,
    limits: &EnumerationLimits,
) -> Result<Vec<Partition>> {
    let limit = limits.limit_for(kind);
    if n == 0 || n > limit {
        return Err(Error::SizeLimit {
            what: "partition enumeration",
            requested: n,
            limit,
        });
    }
    let mut out = Vec::new();
    match kind {
        PartitionKind::All => for_each_set_partition(n, |p| out.push(p)),
        PartitionKind::NonCrossing => for_each_noncrossing(n, false, |p| out.push(p)),
        PartitionKind::NonCrossingIrreducible => for_each_noncrossing(n, true, |p| out.push(p)),
        PartitionKind::Interval => for_each_composition(n, 1, |p| out.push(p)),
        PartitionKind::IntervalMin2 => for_each_composition(n, 2, |p| out.push(p)),
    }
    Ok(out)
}

/// Reference route: enumerates all set partitions and filters by kind. Bell-number
/// cost; kept to cross-check the direct generators.
pub fn enumerate_by_filter(n: usize, kind: PartitionKind) -> Result<Vec<Partition>> {
    let mut all = enumerate(n, PartitionKind::All)?;
    all.retain(|p| p.is_kind(kind));
    Ok(all)
}

/// Visits every set partition of `{1..n}` via restricted growth strings.
pub fn for_each_set_partition<F: FnMut(Partition)>(n: usize, mut f: F) {
    fn rec<F: FnMut(Partition)>(labels: &mut Vec<usize>, n: usize, max: usize, f: &mut F) {
        if labels.len() == n {
            f(Partition::from_labels(labels));
            return;
        }
        for label in 0..=max + 1 {
            labels.push(label);
            rec(labels, n, max.max(label), f);
            labels.pop();
        }
    }
    if n == 0 {
        return;
    }
    let mut labels = vec![0];
    rec(&mut labels, n, 0, &mut f);
}

/// Visits interval partitions of `{1..n}` whose blocks have size `>= min_block`,
/// larger leading blocks first.
pub fn for_each_composition<F: FnMut(Partition)>(n: usize, min_block: usize, mut f: F) {
    fn rec<F: FnMut(Partition)>(
        start: usize,
        n: usize,
        min_block: usize,
        blocks: &mut Vec<Vec<usize>>,
        f: &mut F,
    ) {
        let remaining = n + 1 - start;
        if remaining == 0 {
            f(Partition {
                n,
                blocks: blocks.clone(),
            });
            return;
        }
        for size in (min_block..=remaining).rev() {
            if remaining - size != 0 && remaining - size < min_block {
                continue;
            }
            blocks.push((start..start + size).collect());
            rec(start + size, n, min_block, blocks, f);
            blocks.pop();
        }
    }
    let min_block = min_block.max(1);
    if n == 0 {
        return;
    }
    rec(1, n, min_block, &mut Vec::new(), &mut f);
}

/// Visits non-crossing partitions of `{1..n}` directly: the block of the least
/// open element is chosen element by element, and every gap it leaves is filled
/// recursively. With `irreducible`, the outermost block must contain `n`.
pub fn for_each_noncrossing<F: FnMut(Partition)>(n: usize, irreducible: bool, mut f: F) {
    struct Gen<'f, F> {
        n: usize,
        blocks: Vec<Vec<usize>>,
        pending: Vec<(usize, usize)>,
        f: &'f mut F,
    }

    impl<F: FnMut(Partition)> Gen<'_, F> {
        fn fill(&mut self) {
            match self.pending.pop() {
                None => {
                    let p = Partition::canonical(self.n, self.blocks.clone());
                    (self.f)(p);
                }
                Some((lo, hi)) => {
                    if lo > hi {
                        self.fill();
                    } else {
                        let mut block = vec![lo];
                        self.grow(&mut block, hi, false);
                    }
                    self.pending.push((lo, hi));
                }
            }
        }

        fn grow(&mut self, block: &mut Vec<usize>, hi: usize, must_reach_hi: bool) {
            let last = *block.last().expect("block is nonempty");
            for next in last + 1..=hi {
                self.pending.push((last + 1, next - 1));
                block.push(next);
                self.grow(block, hi, must_reach_hi);
                block.pop();
                self.pending.pop();
            }
            if must_reach_hi && last != hi {
                return;
            }
            self.pending.push((last + 1, hi));
            self.blocks.push(block.clone());
            self.fill();
            self.blocks.pop();
            self.pending.pop();
        }
    }

    if n == 0 {
        return;
    }
    let mut gen = Gen {
        n,
        blocks: Vec::new(),
        pending: Vec::new(),
        f: &mut f,
    };
    let mut first = vec![1];
    gen.grow(&mut first, n, irreducible);
}

/// `true` iff there is no `a < b < c < d` with `a, c` in one block and `b, d`
/// in another.
pub fn is_noncrossing(p: &Partition) -> bool {
    let labels = p.block_labels();
    // For consecutive elements i < j of the same block, everything strictly
    // between them must lie in blocks contained in (i, j).
    for block in &p.blocks {
        for w in block.windows(2) {
            let (i, j) = (w[0], w[1]);
            for k in i + 1..j {
                let other = &p.blocks[labels[k - 1]];
                if other[0] < i || *other.last().unwrap() > j {
                    return false;
                }
            }
        }
    }
    true
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.components -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

fn union_blocks(sets: &mut DisjointSets, p: &Partition) {
    for block in &p.blocks {
        for w in block.windows(2) {
            sets.union(w[0] - 1, w[1] - 1);
        }
    }
}

fn check_same_ground(p: &Partition, q: &Partition) -> Result<()> {
    if p.n != q.n {
        return Err(Error::Dimension {
            expected: p.n,
            found: q.n,
        });
    }
    Ok(())
}

/// The lattice join `p ∨ q` in the full partition lattice.
pub fn join(p: &Partition, q: &Partition) -> Result<Partition> {
    check_same_ground(p, q)?;
    let mut sets = DisjointSets::new(p.n);
    union_blocks(&mut sets, p);
    union_blocks(&mut sets, q);
    let labels: Vec<usize> = (0..p.n).map(|i| sets.find(i)).collect();
    Ok(Partition::from_labels(&labels))
}

/// `join(p, q) == 1_n`, without materializing the join.
pub fn joins_to_full(p: &Partition, q: &Partition) -> Result<bool> {
    check_same_ground(p, q)?;
    let mut sets = DisjointSets::new(p.n);
    for block in p.blocks.iter().chain(q.blocks.iter()) {
        for w in block.windows(2) {
            if sets.union(w[0] - 1, w[1] - 1) && sets.components() == 1 {
                return Ok(true);
            }
        }
    }
    Ok(sets.components() <= 1)
}

/// `π(σ)`: for an interval partition `sigma` with `k` blocks and a partition `pi`
/// of `{1..k}`, merges the blocks of `sigma` whose indices share a block of `pi`.
pub fn compose_interval(pi: &Partition, sigma: &Partition) -> Result<Partition> {
    if !sigma.is_interval() {
        return Err(Error::Kind("sigma is not an interval partition".into()));
    }
    if sigma.num_blocks() != pi.n {
        return Err(Error::Dimension {
            expected: sigma.num_blocks(),
            found: pi.n,
        });
    }
    if !pi.is_noncrossing() {
        return Err(Error::Kind("pi must be non-crossing".into()));
    }
    let blocks: Vec<Vec<usize>> = pi
        .blocks
        .iter()
        .map(|v| {
            v.iter()
                .flat_map(|&j| sigma.blocks[j - 1].iter().copied())
                .collect()
        })
        .collect();
    let rho = Partition::canonical(sigma.n, blocks);
    debug_assert!(rho.is_noncrossing(), "π(σ) must be non-crossing");
    Ok(rho)
}

/// The maps expanding `{1..n}` into `{1..n+|B|}` by doubling every element of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMaps {
    n: usize,
    doubled: BTreeSet<usize>,
    tau: Partition,
    /// `phi[t - 1]` is the image of `t`.
    phi: Vec<usize>,
}

impl ExpansionMaps {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn doubled(&self) -> &BTreeSet<usize> {
        &self.doubled
    }

    /// The interval partition `τ_B` of `{1..n+|B|}`.
    pub fn tau(&self) -> &Partition {
        &self.tau
    }

    /// The collapsing surjection `φ_B`.
    pub fn phi(&self, t: usize) -> usize {
        self.phi[t - 1]
    }

    pub fn expanded_len(&self) -> usize {
        self.phi.len()
    }

    /// `ι_B(S) = φ_B⁻¹(S)`.
    pub fn iota(&self, subset: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.phi
            .iter()
            .enumerate()
            .filter(|(_, j)| subset.contains(j))
            .map(|(t, _)| t + 1)
            .collect()
    }
}

/// Builds `τ_B`, `ι_B` and `φ_B` for `B ⊆ {1..n}`.
pub fn expansion_maps(n: usize, doubled: &BTreeSet<usize>) -> Result<ExpansionMaps> {
    if let Some(&bad) = doubled.iter().find(|&&j| j == 0 || j > n) {
        return Err(Error::Domain(format!("element {bad} of B outside 1..={n}")));
    }
    let mut phi = Vec::with_capacity(n + doubled.len());
    let mut blocks = Vec::with_capacity(n);
    for j in 1..=n {
        let t = phi.len() + 1;
        phi.push(j);
        if doubled.contains(&j) {
            phi.push(j);
            blocks.push(vec![t, t + 1]);
        } else {
            blocks.push(vec![t]);
        }
    }
    let tau = Partition::canonical(phi.len(), blocks);
    Ok(ExpansionMaps {
        n,
        doubled: doubled.clone(),
        tau,
        phi,
    })
}

/// Fills an `n`-tuple so that the `v`-th smallest element of each block takes
/// that block's symbols in cyclic order.
pub fn assign_by_blocks<T: Clone>(assignments: &[(Vec<usize>, Vec<T>)]) -> Result<Vec<T>> {
    let n: usize = assignments.iter().map(|(b, _)| b.len()).sum();
    let mut slots: Vec<Option<T>> = vec![None; n];
    for (block, symbols) in assignments {
        if symbols.is_empty() {
            return Err(Error::Domain("empty symbol list".into()));
        }
        let mut sorted = block.clone();
        sorted.sort_unstable();
        for (v, &e) in sorted.iter().enumerate() {
            if e == 0 || e > n {
                return Err(Error::Domain(format!(
                    "element {e} outside 1..={n}; blocks do not form a partition"
                )));
            }
            if slots[e - 1].is_some() {
                return Err(Error::Domain(format!(
                    "element {e} appears twice; blocks do not form a partition"
                )));
            }
            slots[e - 1] = Some(symbols[v % symbols.len()].clone());
        }
    }
    slots
        .into_iter()
        .map(|s| s.ok_or_else(|| Error::Domain("blocks do not cover 1..=n".into())))
        .collect()
}
