//! Set partitions of `[n]` and integer partitions of `n`.
//!
//! A [`SetPartition`] is stored as its restricted growth string: element `i`
//! carries the index of its block, blocks being numbered in order of their
//! minimum element. That string is unique per partition, so derived equality,
//! hashing and ordering are all canonical.
//!
//! Elements are `0`-based internally and `1`-based in the textual form
//! (`"1 2 4|3|5 6"`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<u8>,
    blocks: Vec<Vec<u8>>,
}

impl SetPartition {
    /// Builds a partition from arbitrary blocks of `0..n`.
    pub fn from_blocks<I, B>(n: usize, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        let mut label = vec![usize::MAX; n];
        for (b, block) in blocks.into_iter().enumerate() {
            let mut empty = true;
            for i in block {
                empty = false;
                if i >= n {
                    return Err(Error::InvalidSetPartition(format!("element {} outside [{}]", i + 1, n)));
                }
                if label[i] != usize::MAX {
                    return Err(Error::InvalidSetPartition(format!("element {} repeated", i + 1)));
                }
                label[i] = b;
            }
            if empty {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
        }
        if let Some(i) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidSetPartition(format!("element {} not covered", i + 1)));
        }
        Ok(Self::from_labels(&label))
    }

    /// Builds a partition from any block labelling of `0..n`: elements with
    /// equal labels share a block.
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(labels: &[L]) -> Self {
        let mut renumber: HashMap<L, u8> = HashMap::new();
        let mut rgs = Vec::with_capacity(labels.len());
        let mut blocks: Vec<Vec<u8>> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            let next = renumber.len() as u8;
            let b = *renumber.entry(*l).or_insert(next);
            if b as usize == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b as usize].push(i as u8);
            rgs.push(b);
        }
        SetPartition { rgs, blocks }
    }

    /// The partition with a single block.
    pub fn full(n: usize) -> Self {
        Self::from_labels(&vec![0u8; n])
    }

    /// The partition into singletons.
    pub fn minimal(n: usize) -> Self {
        Self::from_labels(&(0..n).collect_vec())
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks sorted by minimum element, each sorted ascending.
    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Index of the block containing `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.rgs[i] as usize
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.rgs[i] == self.rgs[j]
    }

    fn check_n(&self, other: &SetPartition) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(())
    }

    /// Coarsest common refinement: blocks are the nonempty pairwise intersections.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_n(other)?;
        let pairs = self.rgs.iter().zip(&other.rgs).map(|(&a, &b)| (a, b)).collect_vec();
        Ok(Self::from_labels(&pairs))
    }

    /// `true` iff every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        self.check_n(other)?;
        Ok(self.blocks.iter().all(|b| b.iter().all(|&i| other.same_block(i as usize, b[0] as usize))))
    }

    /// Comparability in the refinement order.
    pub fn comparable(&self, other: &SetPartition) -> Result<bool> {
        Ok(self.refines(other)? || other.refines(self)?)
    }

    /// Image under `w`: the blocks of `w·λ` are `w(B)` for `B ∈ λ`.
    pub fn act(&self, w: &Permutation) -> Result<SetPartition> {
        if w.n() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: w.n() });
        }
        let mut labels = vec![0u8; self.n()];
        for (i, &b) in self.rgs.iter().enumerate() {
            labels[w.apply(i)] = b;
        }
        Ok(Self::from_labels(&labels))
    }

    /// For each block of `self`, the index of the block `w(B)` in `w·self`.
    pub fn block_image_indices(&self, w: &Permutation) -> Vec<usize> {
        let image = self.act(w).expect("size checked by caller");
        self.blocks.iter().map(|b| image.block_of(w.apply(b[0] as usize))).collect()
    }

    /// Block sizes sorted decreasingly.
    pub fn hat(&self) -> IntegerPartition {
        IntegerPartition::from_unsorted(self.block_sizes())
    }

    /// Every set partition of `[n]`, in restricted-growth-string order.
    pub fn all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0u8; n];
        fn rec(i: usize, max: u8, rgs: &mut Vec<u8>, out: &mut Vec<SetPartition>) {
            if i == rgs.len() {
                out.push(SetPartition::from_labels(rgs));
                return;
            }
            for b in 0..=max {
                rgs[i] = b;
                rec(i + 1, if b == max { max + 1 } else { max }, rgs, out);
            }
        }
        if n == 0 {
            return vec![SetPartition::from_labels::<u8>(&[])];
        }
        rec(1, 1, &mut rgs, &mut out);
        out
    }

    /// Every set partition refining `self`.
    pub fn refinements(&self) -> Vec<SetPartition> {
        if self.blocks.is_empty() {
            return vec![self.clone()];
        }
        let per_block = self
            .blocks
            .iter()
            .map(|b| SetPartition::all(b.len()))
            .collect_vec();
        per_block
            .iter()
            .map(|v| v.iter())
            .multi_cartesian_product()
            .map(|choice| self.assemble(&choice))
            .collect()
    }

    /// Builds the refinement of `self` given one partition of each block (by
    /// position inside the sorted block).
    fn assemble(&self, parts: &[&SetPartition]) -> SetPartition {
        let mut labels = vec![(0usize, 0usize); self.n()];
        for (bi, (block, p)) in self.blocks.iter().zip(parts).enumerate() {
            for (pos, &i) in block.iter().enumerate() {
                labels[i as usize] = (bi, p.block_of(pos));
            }
        }
        Self::from_labels(&labels)
    }

    /// One representative per `S_self`-orbit on the interval `[(1^n), self]`.
    ///
    /// Orbits are labelled by an integer partition of each block; the
    /// representative cuts each sorted block into consecutive runs of
    /// decreasing length.
    pub fn refinement_orbit_reps(&self) -> Vec<(RefinementOrbitLabel, SetPartition)> {
        self.orbit_labels()
            .into_iter()
            .map(|label| {
                let rep = self.orbit_rep(&label).expect("label generated from blocks");
                (label, rep)
            })
            .collect()
    }

    /// All orbit labels for the refinement interval below `self`.
    pub fn orbit_labels(&self) -> Vec<RefinementOrbitLabel> {
        if self.blocks.is_empty() {
            return vec![RefinementOrbitLabel(Vec::new())];
        }
        self.blocks
            .iter()
            .map(|b| IntegerPartition::all(b.len()))
            .multi_cartesian_product()
            .map(RefinementOrbitLabel)
            .collect()
    }

    /// Canonical representative of a refinement orbit.
    pub fn orbit_rep(&self, label: &RefinementOrbitLabel) -> Result<SetPartition> {
        self.check_label(label)?;
        let mut labels = vec![(0usize, 0usize); self.n()];
        for (bi, (block, part)) in self.blocks.iter().zip(&label.0).enumerate() {
            let mut pos = 0;
            for (ri, &len) in part.parts().iter().enumerate() {
                for &i in &block[pos..pos + len] {
                    labels[i as usize] = (bi, ri);
                }
                pos += len;
            }
        }
        Ok(Self::from_labels(&labels))
    }

    /// The orbit label of a refinement `mu ≤ self`.
    pub fn orbit_label_of(&self, mu: &SetPartition) -> Result<RefinementOrbitLabel> {
        if !mu.refines(self)? {
            return Err(Error::NotRefinement(mu.to_string(), self.to_string()));
        }
        let mut per_block = vec![Vec::new(); self.num_blocks()];
        for b in mu.blocks() {
            per_block[self.block_of(b[0] as usize)].push(b.len());
        }
        Ok(RefinementOrbitLabel(per_block.into_iter().map(IntegerPartition::from_unsorted).collect()))
    }

    pub fn check_label(&self, label: &RefinementOrbitLabel) -> Result<()> {
        let ok = label.0.len() == self.num_blocks()
            && label.0.iter().zip(&self.blocks).all(|(p, b)| p.size() == b.len());
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidIntegerPartition(format!("label {label} does not fit blocks of {self}")))
        }
    }

    /// `true` iff the blocks are consecutive intervals in `[n]`.
    pub fn is_interval_partition(&self) -> bool {
        self.blocks.iter().all(|b| b.windows(2).all(|w| w[1] == w[0] + 1))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| (i as usize + 1).to_string()).join(" "))
            .join("|");
        f.write_str(&s)
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses `"1 2 4|3|5 6"`; the ground set is the union of all elements.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SetPartition::from_labels::<u8>(&[]));
        }
        let mut blocks = Vec::new();
        for block in s.split('|') {
            let elems = block
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .ok()
                        .filter(|&v| v >= 1)
                        .map(|v| v - 1)
                        .ok_or_else(|| Error::Parse(format!("bad element {t:?} in set partition")))
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(elems);
        }
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::from_blocks(n, blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition(Vec<usize>);

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidIntegerPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidIntegerPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(IntegerPartition(parts))
    }

    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The one-part partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        IntegerPartition(vec![1; n])
    }

    /// All partitions of `n`, lexicographically decreasing: `(n), (n-1,1), …, (1^n)`.
    pub fn all(n: usize) -> Vec<IntegerPartition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
            if rem == 0 {
                out.push(IntegerPartition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Consecutive intervals, largest parts first.
    pub fn canonical_section(&self) -> SetPartition {
        let labels = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| std::iter::repeat(b).take(len))
            .collect_vec();
        SetPartition::from_labels(&labels)
    }

    /// `true` iff `other` arises from `self` by merging parts.
    pub fn preceq(&self, other: &IntegerPartition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { expected: self.size(), found: other.size() });
        }
        // Pack the parts of `self`, largest first, into bins of the sizes of `other`.
        fn pack(items: &[usize], bins: &mut Vec<usize>) -> bool {
            let Some((&first, rest)) = items.split_first() else {
                return bins.iter().all(|&b| b == 0);
            };
            let mut tried = Vec::new();
            for i in 0..bins.len() {
                if bins[i] >= first && !tried.contains(&bins[i]) {
                    tried.push(bins[i]);
                    bins[i] -= first;
                    let ok = pack(rest, bins);
                    bins[i] += first;
                    if ok {
                        return true;
                    }
                }
            }
            false
        }
        Ok(pack(&self.0, &mut other.0.clone()))
    }

    /// Dominance order: every partial sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &IntegerPartition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicity vector `m_i` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Centralizer order `z = ∏ i^{m_i} m_i!` of a permutation of this cycle type.
    pub fn centralizer_order(&self) -> u64 {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &m)| (i as u64).pow(m as u32) * factorial(m))
            .product()
    }

    /// Sorted concatenation of several partitions.
    pub fn concat<'a, I: IntoIterator<Item = &'a IntegerPartition>>(parts: I) -> IntegerPartition {
        IntegerPartition::from_unsorted(parts.into_iter().flat_map(|p| p.0.iter().copied()).collect())
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().join(","))
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(IntegerPartition(Vec::new()));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        IntegerPartition::new(parts)
    }
}

impl Serialize for IntegerPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntegerPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One integer partition per block of a host set partition. Used both as the
/// label of a refinement orbit and, in the character ring, for irreducibles
/// and conjugacy classes of the Young subgroup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RefinementOrbitLabel(pub Vec<IntegerPartition>);

impl RefinementOrbitLabel {
    /// The label `((|B_1|), (|B_2|), …)` of the orbit `{κ}` itself.
    pub fn top(kappa: &SetPartition) -> Self {
        RefinementOrbitLabel(kappa.block_sizes().into_iter().map(IntegerPartition::row).collect())
    }

    /// The label of the minimal partition.
    pub fn bottom(kappa: &SetPartition) -> Self {
        RefinementOrbitLabel(kappa.block_sizes().into_iter().map(IntegerPartition::column).collect())
    }

    pub fn parts(&self) -> &[IntegerPartition] {
        &self.0
    }
}

impl fmt::Display for RefinementOrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().join("|"))
    }
}

impl fmt::Debug for RefinementOrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for RefinementOrbitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(RefinementOrbitLabel(Vec::new()));
        }
        Ok(RefinementOrbitLabel(s.split('|').map(str::parse).collect::<Result<_>>()?))
    }
}

impl Serialize for RefinementOrbitLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RefinementOrbitLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k)).expect("factorial overflow")
}

/// Number of integer partitions of `n`, by memoized recursion on the largest part.
pub fn partition_count(n: usize) -> u64 {
    static MEMO: OnceLock<Mutex<HashMap<(usize, usize), u64>>> = OnceLock::new();
    fn count(n: usize, max: usize, memo: &mut HashMap<(usize, usize), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(n, max)) {
            return v;
        }
        let v = (1..=max.min(n)).map(|k| count(n - k, k, memo)).sum();
        memo.insert((n, max), v);
        v
    }
    let mut memo = MEMO.get_or_init(Default::default).lock().expect("partition memo poisoned");
    count(n, n, &mut memo)
}
