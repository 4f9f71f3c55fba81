//! Character data of a single symmetric group `S_m`, memoized globally.
//!
//! Irreducibles and conjugacy classes are both indexed by the partitions of
//! `m` in the order of [`IntegerPartition::all`]. Restriction coefficients to
//! Young subgroups are computed by class fusion against the tables, and
//! everything else (induction, Kostka numbers, Kronecker products) is derived
//! from those sums.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use itertools::Itertools;

use crate::partitions::{factorial, IntegerPartition};

/// Character table and class data of `S_m`.
#[derive(Debug)]
pub struct SymmetricData {
    pub m: usize,
    pub partitions: Vec<IntegerPartition>,
    index: HashMap<IntegerPartition, usize>,
    /// `table[irr][class]`.
    pub table: Vec<Vec<i64>>,
    /// `z_μ` for each class.
    pub centralizers: Vec<u64>,
}

impl SymmetricData {
    fn build(m: usize) -> Self {
        let partitions = IntegerPartition::all(m);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let table = partitions
            .iter()
            .map(|irr| partitions.iter().map(|cls| murnaghan_nakayama(irr, cls.parts(), &mut memo)).collect())
            .collect();
        let centralizers = partitions.iter().map(IntegerPartition::centralizer_order).collect();
        SymmetricData { m, partitions, index, table, centralizers }
    }

    pub fn index_of(&self, p: &IntegerPartition) -> usize {
        self.index[p]
    }

    pub fn value(&self, irr: &IntegerPartition, class: &IntegerPartition) -> i64 {
        self.table[self.index_of(irr)][self.index_of(class)]
    }

    pub fn order(&self) -> u64 {
        factorial(self.m)
    }

    pub fn class_size(&self, class: usize) -> u64 {
        self.order() / self.centralizers[class]
    }

    pub fn dimension(&self, irr: &IntegerPartition) -> i64 {
        self.value(irr, &IntegerPartition::column(self.m))
    }
}

/// `χ_λ` evaluated at cycle type `μ` by rim-hook removal on beta-sets.
fn murnaghan_nakayama(
    lambda: &IntegerPartition,
    mu: &[usize],
    memo: &mut HashMap<(IntegerPartition, Vec<usize>), i64>,
) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = lambda.len();
    let beta = lambda.parts().iter().enumerate().map(|(i, &p)| p + (k - 1 - i)).collect_vec();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let len = nb.len();
        let parts = nb.iter().enumerate().map(|(j, &c)| c - (len - 1 - j)).collect_vec();
        let smaller = IntegerPartition::from_unsorted(parts);
        total += sign * murnaghan_nakayama(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

fn data_cache() -> &'static RwLock<HashMap<usize, Arc<SymmetricData>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<SymmetricData>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized character data of `S_m`.
pub fn symmetric(m: usize) -> Arc<SymmetricData> {
    if let Some(d) = data_cache().read().expect("character cache poisoned").get(&m) {
        return Arc::clone(d);
    }
    let d = Arc::new(SymmetricData::build(m));
    Arc::clone(data_cache().write().expect("character cache poisoned").entry(m).or_insert(d))
}

/// `Res^{S_m}_{S_{a_1} × … × S_{a_k}}` and its adjoint, for one composition.
#[derive(Debug)]
pub struct Branching {
    /// For each irreducible of `S_m` (by index), its restriction as
    /// `(tuple of irreducibles, multiplicity)`.
    pub restrict: Vec<Vec<(Vec<IntegerPartition>, i64)>>,
    /// For each tuple, the irreducibles of `S_m` in its induction.
    pub induce: HashMap<Vec<IntegerPartition>, Vec<(IntegerPartition, i64)>>,
}

impl Branching {
    fn build(composition: &[usize]) -> Self {
        let m: usize = composition.iter().sum();
        let big = symmetric(m);
        let smalls = composition.iter().map(|&a| symmetric(a)).collect_vec();
        let order: u64 = composition.iter().map(|&a| factorial(a)).product();
        let class_tuples = smalls.iter().map(|d| 0..d.partitions.len()).multi_cartesian_product().collect_vec();
        let irr_tuples = class_tuples.clone();
        // Class fusion: the subgroup class with cycle types (c_1, …, c_k) lies
        // in the S_m-class of their concatenation.
        let fused = class_tuples
            .iter()
            .map(|ct| {
                let cycle = IntegerPartition::concat(ct.iter().zip(&smalls).map(|(&c, d)| &d.partitions[c]));
                let size: u64 = ct.iter().zip(&smalls).map(|(&c, d)| d.class_size(c)).product();
                (big.index_of(&cycle), size as i128)
            })
            .collect_vec();
        let sub_values = irr_tuples
            .iter()
            .map(|it| {
                class_tuples
                    .iter()
                    .map(|ct| it.iter().zip(ct).zip(&smalls).map(|((&i, &c), d)| d.table[i][c] as i128).product::<i128>())
                    .collect_vec()
            })
            .collect_vec();
        let mut restrict = Vec::with_capacity(big.partitions.len());
        let mut induce: HashMap<Vec<IntegerPartition>, Vec<(IntegerPartition, i64)>> = HashMap::new();
        for (ri, rho) in big.partitions.iter().enumerate() {
            let mut row = Vec::new();
            for (ti, it) in irr_tuples.iter().enumerate() {
                let sum: i128 = fused
                    .iter()
                    .zip(&sub_values[ti])
                    .map(|(&(cls, size), &v)| size * big.table[ri][cls] as i128 * v)
                    .sum();
                assert_eq!(sum % order as i128, 0, "non-integral restriction multiplicity");
                let mult = (sum / order as i128) as i64;
                if mult != 0 {
                    let labels = it.iter().zip(&smalls).map(|(&i, d)| d.partitions[i].clone()).collect_vec();
                    induce.entry(labels.clone()).or_default().push((rho.clone(), mult));
                    row.push((labels, mult));
                }
            }
            restrict.push(row);
        }
        Branching { restrict, induce }
    }
}

fn branching_cache() -> &'static RwLock<HashMap<Vec<usize>, Arc<Branching>>> {
    static CACHE: OnceLock<RwLock<HashMap<Vec<usize>, Arc<Branching>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized branching data for a composition (order of parts matters).
pub fn branching(composition: &[usize]) -> Arc<Branching> {
    if let Some(b) = branching_cache().read().expect("branching cache poisoned").get(composition) {
        return Arc::clone(b);
    }
    let b = Arc::new(Branching::build(composition));
    Arc::clone(branching_cache().write().expect("branching cache poisoned").entry(composition.to_vec()).or_insert(b))
}

/// Tensor-product multiplicities of `S_m`: `(α, β) ↦ [(γ, g_{αβγ})]`.
#[derive(Debug)]
pub struct Kronecker {
    pub products: HashMap<(IntegerPartition, IntegerPartition), Vec<(IntegerPartition, i64)>>,
}

fn kronecker_cache() -> &'static RwLock<HashMap<usize, Arc<Kronecker>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Kronecker>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn kronecker(m: usize) -> Arc<Kronecker> {
    if let Some(k) = kronecker_cache().read().expect("kronecker cache poisoned").get(&m) {
        return Arc::clone(k);
    }
    let d = symmetric(m);
    let order = d.order() as i128;
    let count = d.partitions.len();
    let mut products = HashMap::new();
    for a in 0..count {
        for b in 0..count {
            let mut out = Vec::new();
            for c in 0..count {
                let sum: i128 = (0..count)
                    .map(|cl| d.class_size(cl) as i128 * (d.table[a][cl] * d.table[b][cl] * d.table[c][cl]) as i128)
                    .sum();
                assert_eq!(sum % order, 0, "non-integral Kronecker coefficient");
                if sum != 0 {
                    out.push((d.partitions[c].clone(), (sum / order) as i64));
                }
            }
            products.insert((d.partitions[a].clone(), d.partitions[b].clone()), out);
        }
    }
    let k = Arc::new(Kronecker { products });
    Arc::clone(kronecker_cache().write().expect("kronecker cache poisoned").entry(m).or_insert(k))
}

/// Kostka matrix `K[ρ][λ]` = multiplicity of `χ_λ` in `Ind_{S_ρ}^{S_m} 1`,
/// and its integer inverse.
#[derive(Debug)]
pub struct Kostka {
    pub matrix: Vec<Vec<i64>>,
    pub inverse: Vec<Vec<i64>>,
}

fn kostka_cache() -> &'static RwLock<HashMap<usize, Arc<Kostka>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Kostka>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn kostka(m: usize) -> Arc<Kostka> {
    if let Some(k) = kostka_cache().read().expect("kostka cache poisoned").get(&m) {
        return Arc::clone(k);
    }
    let d = symmetric(m);
    let count = d.partitions.len();
    let mut matrix = vec![vec![0i64; count]; count];
    for (ri, rho) in d.partitions.iter().enumerate() {
        let b = branching(rho.parts());
        let trivial = rho.parts().iter().map(|&a| IntegerPartition::row(a)).collect_vec();
        for &(ref lambda, mult) in b.induce.get(&trivial).map(Vec::as_slice).unwrap_or(&[]) {
            matrix[ri][d.index_of(lambda)] = mult;
        }
    }
    // Rows and columns are in lexicographically decreasing order, a linear
    // extension of dominance, so the matrix is lower unitriangular.
    for i in 0..count {
        assert_eq!(matrix[i][i], 1, "Kostka diagonal");
        assert!(matrix[i][i + 1..].iter().all(|&v| v == 0), "Kostka matrix not triangular");
    }
    // Forward substitution for the inverse of a lower unitriangular matrix.
    let mut inverse = vec![vec![0i64; count]; count];
    for i in 0..count {
        inverse[i][i] = 1;
        for j in (0..i).rev() {
            let s: i64 = (j..i).map(|k| matrix[i][k] * inverse[k][j]).sum();
            inverse[i][j] = -s;
        }
    }
    let k = Arc::new(Kostka { matrix, inverse });
    Arc::clone(kostka_cache().write().expect("kostka cache poisoned").entry(m).or_insert(k))
}
