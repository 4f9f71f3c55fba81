//! Exact character theory of Young subgroups `S_κ = ∏_B S_B`.
//!
//! Irreducibles and classes of `S_κ` are tuples of integer partitions, one
//! per block of `κ` in canonical block order. Virtual characters are kept in
//! the irreducible basis; the induced-trivial ("permutation") basis is
//! reached through [`VirtualCharacter::to_permutation_basis`].

pub mod symmetric;

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{IntegerPartition, RefinementOrbitLabel, SetPartition};
use crate::permgroup::{young_order, Permutation};
use crate::scalar::{Field, Ring};

pub use symmetric::{symmetric, SymmetricData};

/// An irreducible character of a Young subgroup: one partition per block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrLabel(pub Vec<IntegerPartition>);

impl IrrLabel {
    pub fn trivial(host: &SetPartition) -> Self {
        IrrLabel(host.block_sizes().into_iter().map(IntegerPartition::row).collect())
    }

    pub fn sign(host: &SetPartition) -> Self {
        IrrLabel(host.block_sizes().into_iter().map(IntegerPartition::column).collect())
    }

    fn fits(&self, host: &SetPartition) -> bool {
        self.0.len() == host.num_blocks() && self.0.iter().zip(host.block_sizes()).all(|(p, b)| p.size() == b)
    }

    /// Degree of the irreducible.
    pub fn dimension(&self) -> i64 {
        self.0.iter().map(|p| symmetric(p.size()).dimension(p)).product()
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.iter().join("|"))
    }
}

impl fmt::Debug for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ[{self}]")
    }
}

impl std::str::FromStr for IrrLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let l: RefinementOrbitLabel = s.parse()?;
        Ok(IrrLabel(l.0))
    }
}

/// A conjugacy class of `S_κ`: the cycle type on each block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClassLabel {
    pub host: SetPartition,
    pub cycle_types: Vec<IntegerPartition>,
}

impl ClassLabel {
    pub fn new(host: SetPartition, cycle_types: Vec<IntegerPartition>) -> Result<Self> {
        let ok = cycle_types.len() == host.num_blocks()
            && cycle_types.iter().zip(host.block_sizes()).all(|(p, b)| p.size() == b);
        if !ok {
            return Err(Error::InvalidIntegerPartition(format!("cycle types {cycle_types:?} do not fit {host}")));
        }
        Ok(ClassLabel { host, cycle_types })
    }

    /// The class of `w ∈ S_κ`.
    pub fn of(host: &SetPartition, w: &Permutation) -> Result<Self> {
        if !w.in_young(host) {
            return Err(Error::SupportEscapes(format!("{w} is not in S_{{{host}}}")));
        }
        Ok(ClassLabel { host: host.clone(), cycle_types: w.cycle_type_on(host) })
    }

    /// Every class of `S_κ`.
    pub fn all(host: &SetPartition) -> Vec<ClassLabel> {
        if host.num_blocks() == 0 {
            return vec![ClassLabel { host: host.clone(), cycle_types: Vec::new() }];
        }
        host.block_sizes()
            .into_iter()
            .map(IntegerPartition::all)
            .multi_cartesian_product()
            .map(|cycle_types| ClassLabel { host: host.clone(), cycle_types })
            .collect()
    }

    /// `|S_κ| / ∏ z(cycle type)`.
    pub fn size(&self) -> u64 {
        young_order(&self.host) / self.centralizer_order()
    }

    pub fn centralizer_order(&self) -> u64 {
        self.cycle_types.iter().map(IntegerPartition::centralizer_order).product()
    }

    /// A permutation in this class: cycles laid on consecutive elements of each sorted block.
    pub fn representative(&self) -> Permutation {
        let mut cycles = Vec::new();
        for (block, ct) in self.host.blocks().iter().zip(&self.cycle_types) {
            let mut pos = 0;
            for &len in ct.parts() {
                cycles.push(block[pos..pos + len].iter().map(|&i| i as usize).collect_vec());
                pos += len;
            }
        }
        Permutation::from_cycles(self.host.n(), &cycles).expect("disjoint cycles")
    }
}

/// A `ℤ`-linear (or `R`-linear) combination of irreducible characters of `S_κ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VirtualCharacter<R: Ring> {
    host: SetPartition,
    coords: BTreeMap<IrrLabel, R>,
}

impl<R: Ring> fmt::Debug for VirtualCharacter<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VirtualCharacter({}; ", self.host)?;
        f.debug_map().entries(self.coords.iter().map(|(k, v)| (k, v.to_string()))).finish()?;
        f.write_str(")")
    }
}

impl<R: Ring> VirtualCharacter<R> {
    pub fn zero(host: &SetPartition) -> Self {
        VirtualCharacter { host: host.clone(), coords: BTreeMap::new() }
    }

    pub fn irreducible(host: &SetPartition, label: IrrLabel) -> Result<Self> {
        Self::from_coords(host, [(label, R::one())])
    }

    pub fn trivial(host: &SetPartition) -> Self {
        Self::irreducible(host, IrrLabel::trivial(host)).expect("trivial label fits")
    }

    pub fn sign(host: &SetPartition) -> Self {
        Self::irreducible(host, IrrLabel::sign(host)).expect("sign label fits")
    }

    /// Builds from `(label, coefficient)` pairs; repeated labels add up.
    pub fn from_coords<I: IntoIterator<Item = (IrrLabel, R)>>(host: &SetPartition, coords: I) -> Result<Self> {
        let mut out = Self::zero(host);
        for (label, c) in coords {
            if !label.fits(host) {
                return Err(Error::InvalidIntegerPartition(format!("label {label} does not fit host {host}")));
            }
            out.add_term(label, &c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, label: IrrLabel, c: &R) {
        if c.is_zero() {
            return;
        }
        match self.coords.entry(label) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = Ring::add(e.get(), c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn host(&self) -> &SetPartition {
        &self.host
    }

    /// Nonzero coordinates in the irreducible basis, in label order.
    pub fn coords(&self) -> &BTreeMap<IrrLabel, R> {
        &self.coords
    }

    pub fn coeff(&self, label: &IrrLabel) -> R {
        self.coords.get(label).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// `true` iff no irreducible occurs with negative multiplicity.
    pub fn is_honest(&self) -> bool {
        self.coords.values().all(|c| !c.is_negative())
    }

    fn check_host(&self, other: &SetPartition) -> Result<()> {
        if &self.host != other {
            return Err(Error::HostMismatch(self.host.to_string(), other.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_host(&other.host)?;
        let mut out = self.clone();
        for (l, c) in &other.coords {
            out.add_term(l.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&R::one().neg()))
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut out = Self::zero(&self.host);
        for (l, c) in &self.coords {
            out.add_term(l.clone(), &Ring::mul(c, k));
        }
        out
    }

    /// Virtual degree `χ(e)`.
    pub fn dimension(&self) -> R {
        self.coords.iter().fold(R::zero(), |acc, (l, c)| Ring::add(&acc, &c.mul_i64(l.dimension())))
    }

    /// `Σ coeff · ∏_blocks χ_block(cycle type)`.
    pub fn evaluate(&self, class: &ClassLabel) -> Result<R> {
        self.check_host(&class.host)?;
        Ok(self.coords.iter().fold(R::zero(), |acc, (l, c)| Ring::add(&acc, &c.mul_i64(irr_value(l, class)))))
    }

    /// The values of `self` as a class function over a field.
    pub fn class_function<F: Field>(&self) -> ClassFunction<F> {
        let values = ClassLabel::all(&self.host)
            .into_iter()
            .map(|cl| {
                let v = self.coords.iter().fold(F::zero(), |acc, (l, c)| {
                    let c = F::from_i64(c.to_i64().expect("coefficient fits i64"));
                    Ring::add(&acc, &Ring::mul(&c, &F::from_i64(irr_value(l, &cl))))
                });
                (cl.cycle_types, v)
            })
            .collect();
        ClassFunction { host: self.host.clone(), values }
    }

    /// Applies a blockwise linear map, label by label: block `i` of every
    /// label is sent to the given combination of new block labels.
    fn map_blockwise<F>(&self, new_host: &SetPartition, mut per_block: F) -> Self
    where
        F: FnMut(usize, &IntegerPartition) -> Vec<(IntegerPartition, i64)>,
    {
        let mut out = Self::zero(new_host);
        for (label, c) in &self.coords {
            let images = label.0.iter().enumerate().map(|(i, p)| per_block(i, p)).collect_vec();
            if images.is_empty() {
                out.add_term(IrrLabel(Vec::new()), c);
                continue;
            }
            for combo in images.iter().map(|v| v.iter()).multi_cartesian_product() {
                let k = combo.iter().map(|(_, k)| *k).product::<i64>();
                out.add_term(IrrLabel(combo.iter().map(|(p, _)| p.clone()).collect()), &c.mul_i64(k));
            }
        }
        out
    }

    /// Restriction from `S_κ` to `S_λ` for `λ ≤ κ`, blockwise by class fusion.
    pub fn restrict(&self, lambda: &SetPartition) -> Result<Self> {
        if !lambda.refines(&self.host)? {
            return Err(Error::NotRefinement(lambda.to_string(), self.host.to_string()));
        }
        if lambda == &self.host {
            return Ok(self.clone());
        }
        // λ-blocks inside each κ-block, in λ's canonical order.
        let mut inside: Vec<Vec<usize>> = vec![Vec::new(); self.host.num_blocks()];
        for (j, b) in lambda.blocks().iter().enumerate() {
            inside[self.host.block_of(b[0] as usize)].push(j);
        }
        let tables = inside
            .iter()
            .map(|js| symmetric::branching(&js.iter().map(|&j| lambda.blocks()[j].len()).collect_vec()))
            .collect_vec();
        let mut out = Self::zero(lambda);
        for (label, c) in &self.coords {
            let per_block = label
                .0
                .iter()
                .enumerate()
                .map(|(i, rho)| &tables[i].restrict[symmetric(rho.size()).index_of(rho)])
                .collect_vec();
            for combo in per_block.iter().map(|v| v.iter()).multi_cartesian_product() {
                let mut new_label = vec![IntegerPartition::row(0); lambda.num_blocks()];
                let mut k = 1i64;
                for (i, (parts, mult)) in combo.iter().enumerate() {
                    k *= mult;
                    for (&j, p) in inside[i].iter().zip(parts) {
                        new_label[j] = p.clone();
                    }
                }
                out.add_term(IrrLabel(new_label), &c.mul_i64(k));
            }
        }
        Ok(out)
    }

    /// Induction from `S_κ` to `S_μ` for `κ ≤ μ`.
    ///
    /// The multiplicity of each irreducible `ψ` of `S_μ` is the reciprocity
    /// sum `⟨χ, Res ψ⟩` over the classes of `S_κ`, taken blockwise.
    pub fn induce(&self, mu: &SetPartition) -> Result<Self> {
        if !self.host.refines(mu)? {
            return Err(Error::NotRefinement(self.host.to_string(), mu.to_string()));
        }
        if mu == &self.host {
            return Ok(self.clone());
        }
        let mut inside: Vec<Vec<usize>> = vec![Vec::new(); mu.num_blocks()];
        for (j, b) in self.host.blocks().iter().enumerate() {
            inside[mu.block_of(b[0] as usize)].push(j);
        }
        let tables = inside
            .iter()
            .map(|js| symmetric::branching(&js.iter().map(|&j| self.host.blocks()[j].len()).collect_vec()))
            .collect_vec();
        let mut out = Self::zero(mu);
        for (label, c) in &self.coords {
            let per_block = inside
                .iter()
                .zip(&tables)
                .map(|(js, t)| {
                    let sub = js.iter().map(|&j| label.0[j].clone()).collect_vec();
                    t.induce.get(&sub).map(Vec::as_slice).unwrap_or(&[])
                })
                .collect_vec();
            if per_block.iter().any(|v| v.is_empty()) {
                continue;
            }
            for combo in per_block.iter().map(|v| v.iter()).multi_cartesian_product() {
                let k = combo.iter().map(|(_, m)| *m).product::<i64>();
                out.add_term(IrrLabel(combo.iter().map(|(p, _)| p.clone()).collect()), &c.mul_i64(k));
            }
        }
        Ok(out)
    }

    /// Pointwise product, decomposed blockwise through Kronecker coefficients.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_host(&other.host)?;
        let mut out = Self::zero(&self.host);
        for (a, ca) in &self.coords {
            for (b, cb) in &other.coords {
                let c = Ring::mul(ca, cb);
                let per_block = a
                    .0
                    .iter()
                    .zip(&b.0)
                    .map(|(pa, pb)| symmetric::kronecker(pa.size()).products[&(pa.clone(), pb.clone())].clone())
                    .collect_vec();
                if per_block.is_empty() {
                    out.add_term(IrrLabel(Vec::new()), &c);
                    continue;
                }
                for combo in per_block.iter().map(|v| v.iter()).multi_cartesian_product() {
                    let k = combo.iter().map(|(_, m)| *m).product::<i64>();
                    out.add_term(IrrLabel(combo.iter().map(|(p, _)| p.clone()).collect()), &c.mul_i64(k));
                }
            }
        }
        Ok(out)
    }

    /// The pullback `^wχ` along conjugation `S_{wκ} → S_κ`, `g ↦ w⁻¹gw`:
    /// a character of `S_{wκ}` obtained by relabelling blocks.
    pub fn twist(&self, w: &Permutation) -> Result<Self> {
        let new_host = self.host.act(w)?;
        let image = self.host.block_image_indices(w);
        let mut out = Self::zero(&new_host);
        for (label, c) in &self.coords {
            let mut new_label = vec![IntegerPartition::row(0); label.0.len()];
            for (i, p) in label.0.iter().enumerate() {
                new_label[image[i]] = p.clone();
            }
            out.add_term(IrrLabel(new_label), c);
        }
        Ok(out)
    }

    /// Coordinates in the basis `{Ind_{S_μ}^{S_κ} 1}` indexed by refinement
    /// orbit labels of `κ`.
    pub fn to_permutation_basis(&self) -> BTreeMap<RefinementOrbitLabel, R> {
        let inv = self.host.block_sizes().into_iter().map(symmetric::kostka).collect_vec();
        let converted = self.map_blockwise(&self.host, |i, lambda| {
            let d = symmetric(lambda.size());
            let li = d.index_of(lambda);
            d.partitions.iter().enumerate().map(|(ri, rho)| (rho.clone(), inv[i].inverse[li][ri])).filter(|(_, k)| *k != 0).collect()
        });
        converted.coords.into_iter().map(|(l, c)| (RefinementOrbitLabel(l.0), c)).collect()
    }

    /// Inverse of [`Self::to_permutation_basis`].
    pub fn from_permutation_basis(host: &SetPartition, coords: &BTreeMap<RefinementOrbitLabel, R>) -> Result<Self> {
        for l in coords.keys() {
            host.check_label(l)?;
        }
        let kost = host.block_sizes().into_iter().map(symmetric::kostka).collect_vec();
        let raw = VirtualCharacter {
            host: host.clone(),
            coords: coords.iter().filter(|(_, c)| !c.is_zero()).map(|(l, c)| (IrrLabel(l.0.clone()), c.clone())).collect(),
        };
        Ok(raw.map_blockwise(host, |i, rho| {
            let d = symmetric(rho.size());
            let ri = d.index_of(rho);
            d.partitions.iter().enumerate().map(|(li, l)| (l.clone(), kost[i].matrix[ri][li])).filter(|(_, k)| *k != 0).collect()
        }))
    }

    /// `Ind_{S_μ}^{S_κ} 1` for an orbit label `μ` of the host.
    pub fn permutation_character(host: &SetPartition, label: &RefinementOrbitLabel) -> Result<Self> {
        Self::from_permutation_basis(host, &BTreeMap::from([(label.clone(), R::one())]))
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> VirtualCharacter<S> {
        let mut out = VirtualCharacter::zero(&self.host);
        for (l, c) in &self.coords {
            out.add_term(l.clone(), &f(c));
        }
        out
    }

    /// Sorted `(label, coefficient)` pairs.
    pub fn to_pairs(&self) -> Vec<(IrrLabel, R)> {
        self.coords.iter().map(|(l, c)| (l.clone(), c.clone())).collect()
    }
}

/// Value of an irreducible of `S_κ` at a class.
pub fn irr_value(label: &IrrLabel, class: &ClassLabel) -> i64 {
    label
        .0
        .iter()
        .zip(&class.cycle_types)
        .map(|(irr, ct)| symmetric(irr.size()).value(irr, ct))
        .product()
}

/// A class function on `S_κ` with values in a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction<F: Field> {
    pub host: SetPartition,
    pub values: BTreeMap<Vec<IntegerPartition>, F>,
}

impl<F: Field> ClassFunction<F> {
    /// Values given per class; missing classes are zero.
    pub fn new(host: &SetPartition, values: impl IntoIterator<Item = (ClassLabel, F)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (cl, v) in values {
            if &cl.host != host {
                return Err(Error::HostMismatch(cl.host.to_string(), host.to_string()));
            }
            map.insert(cl.cycle_types, v);
        }
        Ok(ClassFunction { host: host.clone(), values: map })
    }

    pub fn value(&self, class: &ClassLabel) -> F {
        self.values.get(&class.cycle_types).cloned().unwrap_or_else(F::zero)
    }

    /// `(1/|S_κ|) Σ_classes |class| f(c) g(c)`; characters of `S_κ` are real,
    /// so no conjugation is needed.
    pub fn inner_product(&self, other: &Self) -> Result<F> {
        if self.host != other.host {
            return Err(Error::HostMismatch(self.host.to_string(), other.host.to_string()));
        }
        let total = ClassLabel::all(&self.host).into_iter().fold(F::zero(), |acc, cl| {
            let term = Ring::mul(&Ring::mul(&self.value(&cl), &other.value(&cl)), &F::from_i64(cl.size() as i64));
            Ring::add(&acc, &term)
        });
        Ok(Field::div(&total, &F::from_i64(young_order(&self.host) as i64)))
    }

    /// Multiplicities `⟨f, χ_ι⟩`; fails unless all are integers.
    pub fn decompose(&self) -> Result<VirtualCharacter<i64>> {
        let mut out = VirtualCharacter::zero(&self.host);
        for label in irr_labels(&self.host) {
            let chi = VirtualCharacter::<i64>::irreducible(&self.host, label.clone())?.class_function::<F>();
            let m = self.inner_product(&chi)?;
            let k = m.to_integer().ok_or_else(|| Error::NotVirtualCharacter(format!("multiplicity {m} of {label}")))?;
            out.add_term(label, &k);
        }
        Ok(out)
    }
}

/// Every irreducible label of `S_κ`.
pub fn irr_labels(host: &SetPartition) -> Vec<IrrLabel> {
    host.orbit_labels().into_iter().map(|l| IrrLabel(l.0)).collect()
}

/// Character table of `S_m`: `χ_λ(μ)` for all `λ, μ ⊢ m`.
pub fn character_table(m: usize) -> BTreeMap<(IntegerPartition, IntegerPartition), i64> {
    let d = symmetric(m);
    let mut out = BTreeMap::new();
    for (i, irr) in d.partitions.iter().enumerate() {
        for (j, cl) in d.partitions.iter().enumerate() {
            out.insert((irr.clone(), cl.clone()), d.table[i][j]);
        }
    }
    out
}

/// Serialized form: sorted `(label, coefficient)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord(pub Vec<(String, i64)>);

impl VirtualCharacter<i64> {
    pub fn to_record(&self) -> CharacterRecord {
        CharacterRecord(self.coords.iter().map(|(l, c)| (l.to_string(), *c)).collect())
    }

    pub fn from_record(host: &SetPartition, rec: &CharacterRecord) -> Result<Self> {
        let pairs = rec.0.iter().map(|(l, c)| Ok((l.parse::<IrrLabel>()?, *c))).collect::<Result<Vec<_>>>()?;
        Self::from_coords(host, pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;
    type Chi = VirtualCharacter<i64>;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn irr(s: &str) -> IrrLabel {
        s.parse().unwrap()
    }

    fn class(host: &str, s: &str) -> ClassLabel {
        ClassLabel::new(sp(host), s.parse::<RefinementOrbitLabel>().unwrap().0).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let host = sp("1 2 3");
        let triv = Chi::trivial(&host);
        for c in ClassLabel::all(&host) {
            assert_eq!(triv.evaluate(&c).unwrap(), 1);
        }
        assert_eq!(Chi::sign(&host).evaluate(&class("1 2 3", "2,1")).unwrap(), -1);
        let mixed = Chi::from_coords(&host, [(irr("2,1"), 3), (irr("3"), -2)]).unwrap();
        let c = class("1 2 3", "3");
        assert_eq!(mixed.evaluate(&c).unwrap(), 3 * -1 - 2);
        assert!(mixed.evaluate(&class("1 2|3", "2|1")).is_err());
    }

    #[test]
    fn inner_product_examples() {
        for n in 1..=6 {
            for host in SetPartition::all(n).into_iter().filter(|p| p.num_blocks() <= 2) {
                let labels = irr_labels(&host);
                for a in &labels {
                    let fa = Chi::irreducible(&host, a.clone()).unwrap().class_function::<Q>();
                    for b in &labels {
                        let fb = Chi::irreducible(&host, b.clone()).unwrap().class_function::<Q>();
                        let expect = if a == b { Q::from_i64(1) } else { Q::from_i64(0) };
                        assert_eq!(fa.inner_product(&fb).unwrap(), expect);
                    }
                }
            }
        }
        let s3 = sp("1 2 3");
        let ip = Chi::trivial(&s3).class_function::<Q>().inner_product(&Chi::sign(&s3).class_function()).unwrap();
        assert_eq!(ip, Q::from_i64(0));
        let ind = Chi::trivial(&sp("1 2|3")).induce(&s3).unwrap();
        let ip = ind.class_function::<Q>().inner_product(&Chi::trivial(&s3).class_function()).unwrap();
        assert_eq!(ip, Q::from_i64(1));
    }

    #[test]
    fn decompose_examples() {
        let s3 = sp("1 2 3");
        // regular character: 6 at the identity, 0 elsewhere.
        let reg = ClassFunction::new(&s3, [(class("1 2 3", "1,1,1"), Q::from_i64(6))]).unwrap();
        let got = reg.decompose().unwrap();
        assert_eq!(got, Chi::from_coords(&s3, [(irr("3"), 1), (irr("2,1"), 2), (irr("1,1,1"), 1)]).unwrap());

        let chi = Chi::irreducible(&s3, irr("2,1")).unwrap();
        assert_eq!(chi.class_function::<Q>().decompose().unwrap(), chi);

        let perm = ClassFunction::new(
            &s3,
            [(class("1 2 3", "1,1,1"), Q::from_i64(3)), (class("1 2 3", "2,1"), Q::from_i64(1)), (class("1 2 3", "3"), Q::from_i64(0))],
        )
        .unwrap();
        assert_eq!(perm.decompose().unwrap(), Chi::from_coords(&s3, [(irr("3"), 1), (irr("2,1"), 1)]).unwrap());

        let bad = ClassFunction::new(&s3, [(class("1 2 3", "1,1,1"), Q::from_i64(1))]).unwrap();
        assert!(matches!(bad.decompose(), Err(Error::NotVirtualCharacter(_))));
    }

    #[test]
    fn induce_examples() {
        let l = sp("1 2|3");
        let s3 = sp("1 2 3");
        let chi = Chi::from_coords(&l, [(irr("1,1|1"), 2), (irr("2|1"), -1)]).unwrap();
        assert_eq!(chi.induce(&l).unwrap(), chi);
        let ind = Chi::trivial(&l).induce(&s3).unwrap();
        assert_eq!(ind, Chi::from_coords(&s3, [(irr("3"), 1), (irr("2,1"), 1)]).unwrap());
        assert_eq!(ind.dimension(), 3);
        assert!(Chi::trivial(&s3).induce(&l).is_err());
    }

    #[test]
    fn restrict_examples() {
        let l = sp("1 2|3");
        let s3 = sp("1 2 3");
        assert_eq!(Chi::trivial(&s3).restrict(&l).unwrap(), Chi::trivial(&l));
        let res = Chi::irreducible(&s3, irr("2,1")).unwrap().restrict(&l).unwrap();
        assert_eq!(res, Chi::from_coords(&l, [(irr("2|1"), 1), (irr("1,1|1"), 1)]).unwrap());
        assert!(Chi::trivial(&l).restrict(&s3).is_err());
    }

    #[test]
    fn restrict_to_non_interval_blocks() {
        // S_{13|24} inside S_{1234}: the trivial character of S_4 restricts to trivial.
        let host = sp("1 2 3 4");
        let lam = sp("1 3|2 4");
        assert_eq!(Chi::trivial(&host).restrict(&lam).unwrap(), Chi::trivial(&lam));
        let chi = Chi::irreducible(&host, irr("3,1")).unwrap();
        let res = chi.restrict(&lam).unwrap();
        assert_eq!(res.dimension(), 3);
    }

    #[test]
    fn tensor_examples() {
        let s3 = sp("1 2 3");
        let psi = Chi::from_coords(&s3, [(irr("2,1"), 2), (irr("1,1,1"), -1)]).unwrap();
        assert_eq!(Chi::trivial(&s3).tensor(&psi).unwrap(), psi);
        for m in 1..=5 {
            let h = SetPartition::full(m);
            assert_eq!(Chi::sign(&h).tensor(&Chi::sign(&h)).unwrap(), Chi::trivial(&h));
        }
        let std = Chi::irreducible(&s3, irr("2,1")).unwrap();
        let sq = std.tensor(&std).unwrap();
        assert_eq!(sq, Chi::from_coords(&s3, [(irr("3"), 1), (irr("2,1"), 1), (irr("1,1,1"), 1)]).unwrap());
    }

    #[test]
    fn twist_examples() {
        let host = sp("1 2|3");
        let chi = Chi::from_coords(&host, [(irr("1,1|1"), 1), (irr("2|1"), 4)]).unwrap();
        assert_eq!(chi.twist(&Permutation::identity(3)).unwrap(), chi);
        // (1 2) lies in S_host.
        assert_eq!(chi.twist(&"2,1,3".parse().unwrap()).unwrap(), chi);

        // (1 3) sends {1,2},{3} to {3,2},{1} = {1},{2,3}: block labels swap.
        let w: Permutation = "3,2,1".parse().unwrap();
        let tw = chi.twist(&w).unwrap();
        assert_eq!(tw.host(), &sp("1|2 3"));
        assert_eq!(tw, Chi::from_coords(&sp("1|2 3"), [(irr("1|1,1"), 1), (irr("1|2"), 4)]).unwrap());
        // ^wχ(g) = χ(w⁻¹ g w) on every element of S_{wκ}.
        for g in crate::permgroup::enumerate_young(tw.host()) {
            let back = w.inverse().mul(&g).mul(&w);
            let lhs = tw.evaluate(&ClassLabel::of(tw.host(), &g).unwrap()).unwrap();
            let rhs = chi.evaluate(&ClassLabel::of(&host, &back).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn permutation_basis_examples() {
        let s3 = sp("1 2 3");
        let triv = Chi::trivial(&s3).to_permutation_basis();
        assert_eq!(triv, BTreeMap::from([(RefinementOrbitLabel::top(&s3), 1)]));

        let s2 = sp("1 2");
        let reg = Chi::from_coords(&s2, [(irr("2"), 1), (irr("1,1"), 1)]).unwrap();
        assert_eq!(reg.to_permutation_basis(), BTreeMap::from([(RefinementOrbitLabel::bottom(&s2), 1)]));

        // sign = Ind_{1³} − 2·Ind_{(2,1)} + Ind_{(3)}; degrees 6 − 6 + 1 = 1.
        let sign = Chi::sign(&s3).to_permutation_basis();
        let expect = BTreeMap::from([
            ("1,1,1".parse().unwrap(), 1),
            ("2,1".parse().unwrap(), -2),
            ("3".parse().unwrap(), 1),
        ]);
        assert_eq!(sign, expect);
        assert_eq!(Chi::from_permutation_basis(&s3, &sign).unwrap(), Chi::sign(&s3));
    }

    #[test]
    fn class_representatives() {
        for host in SetPartition::all(4) {
            for cl in ClassLabel::all(&host) {
                let r = cl.representative();
                assert_eq!(ClassLabel::of(&host, &r).unwrap(), cl);
            }
            let total: u64 = ClassLabel::all(&host).iter().map(ClassLabel::size).sum();
            assert_eq!(total, young_order(&host));
        }
    }

    #[test]
    fn record_round_trip() {
        let host = sp("1 3|2");
        let chi = Chi::from_coords(&host, [(irr("1,1|1"), -3), (irr("2|1"), 5)]).unwrap();
        let rec = chi.to_record();
        assert_eq!(rec.0, vec![("1,1|1".to_string(), -3), ("2|1".to_string(), 5)]);
        assert_eq!(Chi::from_record(&host, &rec).unwrap(), chi);
    }

    #[test]
    fn character_table_entries() {
        let t = character_table(3);
        assert_eq!(t[&("2,1".parse().unwrap(), "1,1,1".parse().unwrap())], 2);
        assert_eq!(character_table(1).len(), 1);
    }

    #[test]
    fn frobenius_reciprocity_exhaustive() {
        for n in 1..=5 {
            let parts = SetPartition::all(n);
            for mu in &parts {
                for lam in mu.refinements() {
                    for a in irr_labels(&lam) {
                        let chi = Chi::irreducible(&lam, a).unwrap();
                        let ind = chi.induce(mu).unwrap();
                        for b in irr_labels(mu) {
                            let psi = Chi::irreducible(mu, b).unwrap();
                            let lhs = ind.coeff(&psi.coords().keys().next().unwrap().clone());
                            let rhs = chi.class_function::<Q>().inner_product(&psi.restrict(&lam).unwrap().class_function()).unwrap();
                            assert_eq!(Q::from_i64(lhs), rhs);
                        }
                    }
                    let perm = Chi::trivial(&lam).induce(mu).unwrap();
                    assert_eq!(perm.dimension() as u64, young_order(mu) / young_order(&lam));
                }
            }
        }
    }

    /// Induced class function from the definition `(1/|H|) Σ_{g ∈ G} χ°(g⁻¹xg)`.
    fn induced_by_definition(chi: &Chi, mu: &SetPartition) -> ClassFunction<Q> {
        let g = crate::permgroup::enumerate_young(mu);
        let h_order = young_order(chi.host()) as i64;
        let values = ClassLabel::all(mu).into_iter().map(|cl| {
            let x = cl.representative();
            let total: i64 = g
                .iter()
                .map(|y| y.inverse().mul(&x).mul(y))
                .filter(|c| c.in_young(chi.host()))
                .map(|c| chi.evaluate(&ClassLabel::of(chi.host(), &c).unwrap()).unwrap())
                .sum();
            (cl, Q::new(total, h_order))
        });
        ClassFunction::new(mu, values.collect_vec()).unwrap()
    }

    #[test]
    fn induction_matches_definition() {
        for n in 1..=4 {
            for mu in SetPartition::all(n) {
                for lam in mu.refinements() {
                    for a in irr_labels(&lam) {
                        let chi = Chi::irreducible(&lam, a).unwrap();
                        let expect = induced_by_definition(&chi, &mu).decompose().unwrap();
                        assert_eq!(chi.induce(&mu).unwrap(), expect, "{lam} -> {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_and_tensor_match_pointwise_values() {
        for n in 1..=5 {
            for mu in SetPartition::all(n).into_iter().filter(|p| p.num_blocks() <= 2) {
                let labels = irr_labels(&mu);
                for lam in mu.refinements() {
                    for a in &labels {
                        let chi = Chi::irreducible(&mu, a.clone()).unwrap();
                        let res = chi.restrict(&lam).unwrap();
                        for cl in ClassLabel::all(&lam) {
                            let r = cl.representative();
                            let big = ClassLabel::of(&mu, &r).unwrap();
                            assert_eq!(res.evaluate(&cl).unwrap(), chi.evaluate(&big).unwrap());
                        }
                    }
                }
                for a in &labels {
                    for b in &labels {
                        let x = Chi::irreducible(&mu, a.clone()).unwrap();
                        let y = Chi::irreducible(&mu, b.clone()).unwrap();
                        let t = x.tensor(&y).unwrap();
                        for cl in ClassLabel::all(&mu) {
                            assert_eq!(t.evaluate(&cl).unwrap(), x.evaluate(&cl).unwrap() * y.evaluate(&cl).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_basis_round_trip() {
        for n in 1..=5 {
            for host in SetPartition::all(n) {
                for a in irr_labels(&host) {
                    let chi = Chi::irreducible(&host, a).unwrap().scale(&-3);
                    let coords = chi.to_permutation_basis();
                    assert_eq!(Chi::from_permutation_basis(&host, &coords).unwrap(), chi);
                }
                for l in host.orbit_labels() {
                    let p = Chi::permutation_character(&host, &l).unwrap();
                    let mu = host.orbit_rep(&l).unwrap();
                    assert_eq!(p, Chi::trivial(&mu).induce(&host).unwrap());
                    assert_eq!(p.to_permutation_basis(), BTreeMap::from([(l, 1)]));
                }
            }
        }
    }
}
