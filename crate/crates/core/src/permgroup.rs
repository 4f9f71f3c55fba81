//! Symmetric-group arithmetic, Young subgroups and parabolic double cosets.
//!
//! Permutations are stored in one-line notation, `0`-based internally and
//! `1`-based in text (`"2,3,1"`). Double-coset tables are built once per
//! `(left, right, ambient)` triple and shared through a global cache.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::SetPartition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From `0`-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 0..{n}")));
            }
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u8).collect() })
    }

    /// From `1`-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?} contains 0")));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// The transposition of `a` and `b` (`0`-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    /// Product of disjoint cycles given `0`-based.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images = (0..n).collect_vec();
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                images[i] = c[(k + 1) % c.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `(self ∘ other)(i) = self(other(i))`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(self.mul(other))
    }

    /// Unchecked composition, `self ∘ other`.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Number of pairs `i < j` with `w(i) > w(j)`; the Coxeter length.
    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// Cycle type as block-restricted integer partitions: the cycle lengths
    /// of `self` on each block of `host`. Requires `self ∈ S_host`.
    pub fn cycle_type_on(&self, host: &SetPartition) -> Vec<crate::partitions::IntegerPartition> {
        let mut seen = vec![false; self.n()];
        let mut lens = vec![Vec::new(); host.num_blocks()];
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lens[host.block_of(start)].push(len);
        }
        lens.into_iter().map(crate::partitions::IntegerPartition::from_unsorted).collect()
    }

    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `true` iff `self` maps every block of `lambda` to itself.
    pub fn in_young(&self, lambda: &SetPartition) -> bool {
        (0..self.n()).all(|i| lambda.same_block(i, self.apply(i)))
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        enumerate_young(&SetPartition::full(n))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.images.iter().map(|&i| i as usize + 1).join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let v = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&v)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The subgroup `S_λ` of permutations fixing every block of `λ` setwise.
#[derive(Clone, Debug)]
pub struct YoungSubgroup {
    partition: SetPartition,
    elements: OnceLock<Vec<Permutation>>,
}

impl YoungSubgroup {
    pub fn new(partition: SetPartition) -> Self {
        YoungSubgroup { partition, elements: OnceLock::new() }
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// `∏ |B|!` over blocks.
    pub fn order(&self) -> u64 {
        young_order(&self.partition)
    }

    pub fn elements(&self) -> &[Permutation] {
        self.elements.get_or_init(|| enumerate_young(&self.partition))
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        w.in_young(&self.partition)
    }

    /// Adjacent transpositions inside each (sorted) block; they generate `S_λ`.
    pub fn generators(&self) -> Vec<Permutation> {
        young_generators(&self.partition)
    }
}

pub fn young_order(lambda: &SetPartition) -> u64 {
    lambda.block_sizes().into_iter().map(crate::partitions::factorial).product()
}

pub(crate) fn young_generators(lambda: &SetPartition) -> Vec<Permutation> {
    lambda
        .blocks()
        .iter()
        .flat_map(|b| b.windows(2).map(|w| Permutation::transposition(lambda.n(), w[0] as usize, w[1] as usize)))
        .collect()
}

/// Every element of `S_λ`, sorted by one-line notation.
pub fn enumerate_young(lambda: &SetPartition) -> Vec<Permutation> {
    let n = lambda.n();
    let mut out = vec![Permutation::identity(n)];
    for block in lambda.blocks() {
        let block = block.iter().map(|&i| i as usize).collect_vec();
        let mut next = Vec::with_capacity(out.len() * crate::partitions::factorial(block.len()) as usize);
        for arrangement in block.iter().copied().permutations(block.len()) {
            for base in &out {
                let mut p = base.clone();
                for (&src, &dst) in block.iter().zip(&arrangement) {
                    p.images[src] = dst as u8;
                }
                next.push(p);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// One `S_ν`–`S_λ` double coset with its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub left: SetPartition,
    pub right: SetPartition,
    pub canonical_rep: Permutation,
    pub size: usize,
    /// Whether more than one element attains the minimal inversion count.
    pub tie_broken: bool,
}

/// Double cosets `S_ν \ S_τ / S_λ` inside an ambient Young subgroup `S_τ`,
/// with a lookup from every element to its coset and a left factor.
#[derive(Debug)]
pub struct DoubleCosetTable {
    pub ambient: SetPartition,
    pub cosets: Vec<DoubleCoset>,
    lookup: HashMap<Permutation, (u32, Permutation)>,
}

impl DoubleCosetTable {
    fn build(left: &SetPartition, right: &SetPartition, ambient: &SetPartition) -> Result<Self> {
        let n = ambient.n();
        for p in [left, right] {
            if p.n() != n {
                return Err(Error::SizeMismatch { expected: n, found: p.n() });
            }
            if !p.refines(ambient)? {
                return Err(Error::NotRefinement(p.to_string(), ambient.to_string()));
            }
        }
        let elements = enumerate_young(ambient);
        let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let lgens = young_generators(left);
        let rgens = young_generators(right);

        // Orbit decomposition; each orbit is explored breadth-first.
        let mut orbit_of = vec![usize::MAX; elements.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..elements.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let e = &elements[u];
                let nbrs = lgens.iter().map(|s| s.mul(e)).chain(rgens.iter().map(|t| e.mul(t)));
                for v in nbrs {
                    let vi = index[&v];
                    if orbit_of[vi] == usize::MAX {
                        orbit_of[vi] = id;
                        members.push(vi);
                        queue.push_back(vi);
                    }
                }
            }
            orbits.push(members);
        }

        let mut cosets = Vec::with_capacity(orbits.len());
        for members in &orbits {
            let min_len = members.iter().map(|&i| elements[i].inversions()).min().expect("nonempty orbit");
            let minimal = members.iter().filter(|&&i| elements[i].inversions() == min_len).collect_vec();
            let rep = minimal.iter().map(|&&i| &elements[i]).min().expect("nonempty").clone();
            cosets.push(DoubleCoset {
                left: left.clone(),
                right: right.clone(),
                canonical_rep: rep,
                size: members.len(),
                tie_broken: minimal.len() > 1,
            });
        }
        cosets.sort_by(|a, b| a.canonical_rep.cmp(&b.canonical_rep));

        // Left factors: u = x · rep · y with x ∈ S_ν, recorded along a BFS from rep.
        let mut lookup = HashMap::with_capacity(elements.len());
        for (ci, coset) in cosets.iter().enumerate() {
            let rep = coset.canonical_rep.clone();
            let mut queue = VecDeque::from([(rep.clone(), Permutation::identity(n))]);
            lookup.insert(rep, (ci as u32, Permutation::identity(n)));
            while let Some((u, x)) = queue.pop_front() {
                for s in &lgens {
                    let v = s.mul(&u);
                    if !lookup.contains_key(&v) {
                        let sx = s.mul(&x);
                        lookup.insert(v.clone(), (ci as u32, sx.clone()));
                        queue.push_back((v, sx));
                    }
                }
                for t in &rgens {
                    let v = u.mul(t);
                    if !lookup.contains_key(&v) {
                        lookup.insert(v.clone(), (ci as u32, x.clone()));
                        queue.push_back((v, x.clone()));
                    }
                }
            }
        }
        Ok(DoubleCosetTable { ambient: ambient.clone(), cosets, lookup })
    }

    /// Index of the coset containing `u`, or `None` if `u ∉ S_τ`.
    pub fn coset_index(&self, u: &Permutation) -> Option<usize> {
        self.lookup.get(u).map(|&(c, _)| c as usize)
    }

    /// Canonical representative of the coset of `u`, and some `x ∈ S_ν` with
    /// `u ∈ x · rep · S_λ`.
    pub fn locate(&self, u: &Permutation) -> Option<(&Permutation, &Permutation)> {
        self.lookup.get(u).map(|(c, x)| (&self.cosets[*c as usize].canonical_rep, x))
    }

    pub fn reps(&self) -> impl Iterator<Item = &Permutation> {
        self.cosets.iter().map(|c| &c.canonical_rep)
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

type TableKey = (SetPartition, SetPartition, SetPartition);

fn table_cache() -> &'static RwLock<HashMap<TableKey, Arc<DoubleCosetTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<TableKey, Arc<DoubleCosetTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared double-coset table for `S_ν \ S_τ / S_λ`.
pub fn double_coset_table(
    left: &SetPartition,
    right: &SetPartition,
    ambient: &SetPartition,
) -> Result<Arc<DoubleCosetTable>> {
    let key = (left.clone(), right.clone(), ambient.clone());
    if let Some(t) = table_cache().read().expect("double coset cache poisoned").get(&key) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(DoubleCosetTable::build(left, right, ambient)?);
    let mut cache = table_cache().write().expect("double coset cache poisoned");
    Ok(Arc::clone(cache.entry(key).or_insert(table)))
}

/// Double cosets `S_ν \ S_n / S_λ`, sorted by canonical representative.
///
/// The representative has minimal inversion count; when the Young subgroups
/// are not generated by simple reflections several elements can share that
/// minimum, and the lexicographically smallest one-line word is taken.
pub fn double_cosets(left: &SetPartition, right: &SetPartition) -> Result<Vec<DoubleCoset>> {
    let full = SetPartition::full(left.n());
    Ok(double_coset_table(left, right, &full)?.cosets.clone())
}

/// As [`double_cosets`], but fails if any coset has more than one
/// minimal-length element.
pub fn double_cosets_strict(left: &SetPartition, right: &SetPartition) -> Result<Vec<DoubleCoset>> {
    let cosets = double_cosets(left, right)?;
    if let Some(c) = cosets.iter().find(|c| c.tie_broken) {
        return Err(Error::NonUniqueMinimum(c.canonical_rep.to_string()));
    }
    Ok(cosets)
}
