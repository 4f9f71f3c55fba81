//! Elements of `_νR_λ`: a virtual character of the stabilizer `S_{ν∧wλ}`
//! for every double coset `S_ν w S_λ`.
//!
//! Stalks are stored at canonical double-coset representatives, in the
//! irreducible basis. The ℤ-basis of induced-trivial stalks is a view given
//! by [`KClass::to_basis_coords`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::charring::{CharacterRecord, VirtualCharacter};
use crate::error::{Error, Result};
use crate::partitions::{RefinementOrbitLabel, SetPartition};
use crate::permgroup::{double_coset_table, Permutation};
use crate::scalar::Ring;

/// A K-class in `_νR_λ` (`target = ν`, `source = λ`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KClass<R: Ring> {
    target: SetPartition,
    source: SetPartition,
    stalks: BTreeMap<Permutation, VirtualCharacter<R>>,
}

impl<R: Ring> fmt::Debug for KClass<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KClass({} <- {}; ", self.target, self.source)?;
        f.debug_map().entries(self.stalks.iter().map(|(w, c)| (w.to_string(), c))).finish()?;
        f.write_str(")")
    }
}

/// One element `_ν1_μ · _μ1_{wλ} · w_*` of the ℤ-basis of `_νR_λ`; `label`
/// names the `S_{ν∧wλ}`-orbit of `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisIndex {
    pub target: SetPartition,
    pub source: SetPartition,
    pub rep: Permutation,
    pub label: RefinementOrbitLabel,
}

impl BasisIndex {
    /// `ν ∧ wλ`, the stabilizer the label refers to.
    pub fn host(&self) -> SetPartition {
        stalk_host(&self.target, &self.rep, &self.source)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} <- {} @ {} : {}]", self.target, self.source, self.rep, self.label)
    }
}

pub(crate) fn stalk_host(target: &SetPartition, w: &Permutation, source: &SetPartition) -> SetPartition {
    target.meet(&source.act(w).expect("sizes checked")).expect("sizes checked")
}

/// Every basis index of `_νR_λ`: canonical representatives × orbit labels.
pub fn basis(target: &SetPartition, source: &SetPartition) -> Result<Vec<BasisIndex>> {
    basis_in(target, source, &SetPartition::full(target.n()))
}

/// Basis of `_νR_λ` inside the parabolic subalgebra `R_τ ⊂ R_[n]`: only
/// double cosets meeting `S_τ`.
pub fn basis_in(target: &SetPartition, source: &SetPartition, ambient: &SetPartition) -> Result<Vec<BasisIndex>> {
    let table = double_coset_table(target, source, ambient)?;
    let mut out = Vec::new();
    for rep in table.reps() {
        let host = stalk_host(target, rep, source);
        for label in host.orbit_labels() {
            out.push(BasisIndex { target: target.clone(), source: source.clone(), rep: rep.clone(), label });
        }
    }
    Ok(out)
}

impl<R: Ring> KClass<R> {
    pub fn zero(target: &SetPartition, source: &SetPartition) -> Result<Self> {
        if target.n() != source.n() {
            return Err(Error::SizeMismatch { expected: target.n(), found: source.n() });
        }
        Ok(KClass { target: target.clone(), source: source.clone(), stalks: BTreeMap::new() })
    }

    pub fn target(&self) -> &SetPartition {
        &self.target
    }

    pub fn source(&self) -> &SetPartition {
        &self.source
    }

    pub fn n(&self) -> usize {
        self.target.n()
    }

    /// Nonzero stalks keyed by canonical representative.
    pub fn stalks(&self) -> &BTreeMap<Permutation, VirtualCharacter<R>> {
        &self.stalks
    }

    pub fn stalk(&self, w: &Permutation) -> Option<&VirtualCharacter<R>> {
        self.stalks.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.stalks.is_empty()
    }

    /// `_ν1_μ` for comparable `ν, μ`: trivial stalk of `S_{ν∧μ}` on `[e]`.
    pub fn gen_one(target: &SetPartition, source: &SetPartition) -> Result<Self> {
        if !target.comparable(source)? {
            return Err(Error::NotComparable(target.to_string(), source.to_string()));
        }
        let mut out = Self::zero(target, source)?;
        let host = target.meet(source)?;
        out.stalks.insert(Permutation::identity(target.n()), VirtualCharacter::trivial(&host));
        Ok(out)
    }

    /// The idempotent `e_λ`.
    pub fn idempotent(lambda: &SetPartition) -> Self {
        Self::gen_one(lambda, lambda).expect("a partition is comparable to itself")
    }

    /// `_{wλ}(w_*)_λ`: trivial stalk of `S_{wλ}` on the coset `S_{wλ}w`.
    pub fn gen_perm(w: &Permutation, source: &SetPartition) -> Result<Self> {
        let target = source.act(w)?;
        let mut out = Self::zero(&target, source)?;
        out.insert_any(w.clone(), VirtualCharacter::trivial(&target))?;
        Ok(out)
    }

    /// `⟨V⟩ ∈ _λR_λ` for a virtual character `V` of `S_λ`.
    pub fn gen_rep(v: &VirtualCharacter<R>) -> Self {
        let lambda = v.host();
        let mut out = Self::zero(lambda, lambda).expect("same size");
        if !v.is_zero() {
            out.stalks.insert(Permutation::identity(lambda.n()), v.clone());
        }
        out
    }

    /// Builds a class from stalks at arbitrary (not necessarily canonical) points.
    pub fn from_stalks<I>(target: &SetPartition, source: &SetPartition, stalks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, VirtualCharacter<R>)>,
    {
        let mut out = Self::zero(target, source)?;
        for (w, chi) in stalks {
            out.insert_any(w, chi)?;
        }
        Ok(out)
    }

    /// Adds the stalk `chi` (a character of `S_{ν∧uλ}`) at an arbitrary point `u`,
    /// transporting it to the canonical representative of `S_ν u S_λ`.
    pub(crate) fn insert_any(&mut self, u: Permutation, chi: VirtualCharacter<R>) -> Result<()> {
        if chi.is_zero() {
            return Ok(());
        }
        let host = stalk_host(&self.target, &u, &self.source);
        if chi.host() != &host {
            return Err(Error::HostMismatch(chi.host().to_string(), host.to_string()));
        }
        let table = double_coset_table(&self.target, &self.source, &SetPartition::full(self.n()))?;
        let (rep, x) = table.locate(&u).ok_or_else(|| Error::InvalidPermutation(u.to_string()))?;
        // u = x·rep·y: the stalk at rep is the stalk at u pulled back along x.
        let moved = if x.is_identity() { chi } else { chi.twist(&x.inverse())? };
        self.add_stalk(rep.clone(), &moved);
        Ok(())
    }

    fn add_stalk(&mut self, rep: Permutation, chi: &VirtualCharacter<R>) {
        use std::collections::btree_map::Entry;
        match self.stalks.entry(rep) {
            Entry::Occupied(mut e) => {
                let sum = e.get().add(chi).expect("hosts agree at a canonical representative");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                if !chi.is_zero() {
                    e.insert(chi.clone());
                }
            }
        }
    }

    fn check_grading(&self, other: &Self) -> Result<()> {
        if self.target != other.target || self.source != other.source {
            return Err(Error::GradingMismatch(format!(
                "{} <- {} vs {} <- {}",
                self.target, self.source, other.target, other.source
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_grading(other)?;
        let mut out = self.clone();
        for (w, chi) in &other.stalks {
            out.add_stalk(w.clone(), chi);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&R::one().neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(&self.target, &self.source).expect("same sizes");
        for (w, chi) in &self.stalks {
            out.add_stalk(w.clone(), &chi.scale(c));
        }
        out
    }

    /// Equality of classes; fails on a grading mismatch.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_grading(other)?;
        Ok(self.stalks == other.stalks)
    }

    /// The anti-involution `_νR_λ → _λR_ν`: the stalk `W` at `w` becomes
    /// `^{w⁻¹}W` at `w⁻¹`.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(&self.source, &self.target).expect("same sizes");
        for (w, chi) in &self.stalks {
            let winv = w.inverse();
            let moved = chi.twist(&winv).expect("same sizes");
            out.insert_any(winv, moved).expect("transported host matches");
        }
        out
    }

    /// Coordinates in the basis of [`basis`]; zero coordinates omitted.
    pub fn to_basis_coords(&self) -> BTreeMap<BasisIndex, R> {
        let mut out = BTreeMap::new();
        for (w, chi) in &self.stalks {
            for (label, c) in chi.to_permutation_basis() {
                let idx = BasisIndex { target: self.target.clone(), source: self.source.clone(), rep: w.clone(), label };
                out.insert(idx, c);
            }
        }
        out
    }

    /// Inverse of [`Self::to_basis_coords`]; all indices must share a grading.
    pub fn from_basis_coords(target: &SetPartition, source: &SetPartition, coords: &BTreeMap<BasisIndex, R>) -> Result<Self> {
        let mut grouped: BTreeMap<Permutation, BTreeMap<RefinementOrbitLabel, R>> = BTreeMap::new();
        for (idx, c) in coords {
            if &idx.target != target || &idx.source != source {
                return Err(Error::GradingMismatch(idx.to_string()));
            }
            grouped.entry(idx.rep.clone()).or_default().insert(idx.label.clone(), c.clone());
        }
        let table = double_coset_table(target, source, &SetPartition::full(target.n()))?;
        let mut out = Self::zero(target, source)?;
        for (w, labels) in grouped {
            if table.locate(&w).map(|(rep, _)| rep) != Some(&w) {
                return Err(Error::InvalidPermutation(format!("{w} is not a canonical representative")));
            }
            let host = stalk_host(target, &w, source);
            out.add_stalk(w, &VirtualCharacter::from_permutation_basis(&host, &labels)?);
        }
        Ok(out)
    }

    /// The basis element named by `idx`.
    pub fn basis_element(idx: &BasisIndex) -> Result<Self> {
        Self::from_basis_coords(&idx.target, &idx.source, &BTreeMap::from([(idx.clone(), R::one())]))
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> KClass<S> {
        let mut out = KClass::zero(&self.target, &self.source).expect("same sizes");
        for (w, chi) in &self.stalks {
            out.add_stalk(w.clone(), &chi.map_coeffs(f));
        }
        out
    }

    /// `true` iff every permutation in the support lies in `S_τ`.
    pub fn supported_in(&self, ambient: &SetPartition) -> bool {
        self.stalks.keys().all(|w| w.in_young(ambient))
    }
}

/// Serialized form of an integer K-class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClassRecord {
    pub source: SetPartition,
    pub target: SetPartition,
    pub stalks: Vec<StalkRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StalkRecord {
    pub rep: Permutation,
    pub character: CharacterRecord,
}

impl KClass<i64> {
    pub fn to_record(&self) -> KClassRecord {
        KClassRecord {
            source: self.source.clone(),
            target: self.target.clone(),
            stalks: self
                .stalks
                .iter()
                .map(|(w, chi)| StalkRecord { rep: w.clone(), character: chi.to_record() })
                .collect(),
        }
    }

    /// Reads a record; stalk points need not be canonical.
    pub fn from_record(rec: &KClassRecord) -> Result<Self> {
        let mut out = Self::zero(&rec.target, &rec.source)?;
        for s in &rec.stalks {
            let host = stalk_host(&rec.target, &s.rep, &rec.source);
            out.insert_any(s.rep.clone(), VirtualCharacter::from_record(&host, &s.character)?)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let rec: KClassRecord = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_record(&rec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::IrrLabel;
    use crate::partitions::partition_count;

    type K = KClass<i64>;
    type Chi = VirtualCharacter<i64>;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn gen_one_examples() {
        let l = sp("1 2|3");
        let e = K::gen_one(&l, &l).unwrap();
        assert_eq!(e, K::idempotent(&l));
        assert_eq!(e.stalk(&Permutation::identity(3)), Some(&Chi::trivial(&l)));

        let g = K::gen_one(&sp("1 2 3"), &l).unwrap();
        assert_eq!(g.stalks().len(), 1);
        assert_eq!(g.stalk(&Permutation::identity(3)).unwrap(), &Chi::trivial(&l));
        assert_eq!(g.transpose(), K::gen_one(&l, &sp("1 2 3")).unwrap());

        assert!(matches!(K::gen_one(&sp("1 2|3"), &sp("1|2 3")), Err(Error::NotComparable(..))));
    }

    #[test]
    fn gen_perm_examples() {
        for lam in SetPartition::all(3) {
            assert_eq!(K::gen_perm(&Permutation::identity(3), &lam).unwrap(), K::idempotent(&lam));
            for w in crate::permgroup::enumerate_young(&lam) {
                assert_eq!(K::gen_perm(&w, &lam).unwrap(), K::idempotent(&lam));
            }
        }
        let g = K::gen_perm(&perm("2,1,3"), &SetPartition::minimal(3)).unwrap();
        assert_eq!(g.stalks().keys().collect::<Vec<_>>(), vec![&perm("2,1,3")]);
    }

    #[test]
    fn gen_rep_examples() {
        let l = sp("1 2|3");
        assert_eq!(K::gen_rep(&Chi::trivial(&l)), K::idempotent(&l));
        let v = Chi::sign(&l);
        let w = Chi::irreducible(&l, "2|1".parse().unwrap()).unwrap().scale(&3);
        let sum = K::gen_rep(&v).add(&K::gen_rep(&w)).unwrap();
        assert_eq!(sum, K::gen_rep(&v.add(&w).unwrap()));
    }

    #[test]
    fn linear_ops() {
        let l = sp("1 2|3");
        let a = K::gen_rep(&Chi::sign(&l)).add(&K::idempotent(&l)).unwrap();
        let zero = K::zero(&l, &l).unwrap();
        assert_eq!(a.add(&zero).unwrap(), a);
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.scale(&0), zero);
        assert!(a.add(&K::zero(&sp("1 2 3"), &l).unwrap()).is_err());

        // Insertion order of stalks does not matter.
        let min = SetPartition::minimal(3);
        let x = K::gen_perm(&perm("2,1,3"), &min).unwrap();
        let y = K::gen_perm(&perm("3,1,2"), &min).unwrap();
        assert!(x.add(&y).unwrap().equals(&y.add(&x).unwrap()).unwrap());
    }

    #[test]
    fn transpose_examples() {
        for n in 1..=4 {
            for lam in SetPartition::all(n) {
                assert_eq!(K::idempotent(&lam).transpose(), K::idempotent(&lam));
                for w in Permutation::all(n) {
                    let g = K::gen_perm(&w, &lam).unwrap();
                    let expect = K::gen_perm(&w.inverse(), &lam.act(&w).unwrap()).unwrap();
                    assert_eq!(g.transpose(), expect);
                }
            }
        }
    }

    #[test]
    fn transpose_is_involution_on_basis() {
        for n in 1..=4 {
            let parts = SetPartition::all(n);
            for nu in &parts {
                for lam in &parts {
                    for idx in basis(nu, lam).unwrap() {
                        let b = K::basis_element(&idx).unwrap();
                        assert_eq!(b.transpose().transpose(), b);
                    }
                }
            }
        }
    }

    #[test]
    fn basis_coordinates() {
        let l = sp("1 2|3");
        let coords = K::idempotent(&l).to_basis_coords();
        assert_eq!(coords.len(), 1);
        let (idx, c) = coords.iter().next().unwrap();
        assert_eq!(*c, 1);
        assert_eq!(idx.rep, Permutation::identity(3));
        assert_eq!(idx.label, RefinementOrbitLabel::top(&l));

        let s3 = sp("1 2 3");
        let sign = K::gen_rep(&Chi::sign(&s3)).to_basis_coords();
        let got: Vec<(String, i64)> = sign.iter().map(|(i, c)| (i.label.to_string(), *c)).collect();
        let mut expect = vec![("1,1,1".to_string(), 1), ("2,1".to_string(), -2), ("3".to_string(), 1)];
        expect.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, expect);
    }

    #[test]
    fn basis_round_trip() {
        for n in 1..=4 {
            let parts = SetPartition::all(n);
            for nu in &parts {
                for lam in &parts {
                    let idxs = basis(nu, lam).unwrap();
                    let tables = double_coset_table(nu, lam, &SetPartition::full(n)).unwrap();
                    let expected: u64 = tables
                        .reps()
                        .map(|w| stalk_host(nu, w, lam).block_sizes().into_iter().map(partition_count).product::<u64>())
                        .sum();
                    assert_eq!(idxs.len() as u64, expected);
                    for idx in &idxs {
                        let b = K::basis_element(idx).unwrap();
                        assert_eq!(b.to_basis_coords(), BTreeMap::from([(idx.clone(), 1)]));
                    }
                }
            }
        }
    }

    #[test]
    fn basis_stalk_is_induced_trivial() {
        let nu = sp("1 2 3");
        for idx in basis(&nu, &nu).unwrap() {
            let b = K::basis_element(&idx).unwrap();
            let host = idx.host();
            let mu = host.orbit_rep(&idx.label).unwrap();
            assert_eq!(b.stalk(&idx.rep).unwrap(), &Chi::trivial(&mu).induce(&host).unwrap());
        }
    }

    #[test]
    fn json_round_trip() {
        let l = sp("1 3|2");
        let chi = Chi::from_coords(&l, [(IrrLabel::sign(&l), -2), (IrrLabel::trivial(&l), 1)]).unwrap();
        let other = K::from_stalks(&l, &l, [(perm("2,1,3"), Chi::trivial(&SetPartition::minimal(3)).scale(&4))]).unwrap();
        let a = K::gen_rep(&chi).add(&other).unwrap();
        let text = a.to_json();
        assert_eq!(K::from_json(&text).unwrap(), a);
        assert_eq!(K::from_json(&text).unwrap().to_json(), text);
        assert!(text.starts_with("{\"source\":\"1 3|2\",\"target\":\"1 3|2\",\"stalks\":[{\"rep\":\"1,2,3\""));
    }

    #[test]
    fn non_canonical_points_are_moved() {
        // S_{12|3} (1 2) S_{12|3}: inserting at 2,1,3 lands on the identity coset.
        let l = sp("1 2|3");
        let a = K::from_stalks(&l, &l, [(perm("2,1,3"), Chi::sign(&l))]).unwrap();
        assert_eq!(a, K::gen_rep(&Chi::sign(&l)));
        // u = (1 3): coset of S_{12|3} (1 3) S_{12|3} has rep 1,3,2; the stalk lives on S_{1|2|3}.
        let b = K::from_stalks(&l, &l, [(perm("3,2,1"), Chi::trivial(&SetPartition::minimal(3)))]).unwrap();
        assert_eq!(b.stalks().keys().collect::<Vec<_>>(), vec![&perm("1,3,2")]);
    }
}
