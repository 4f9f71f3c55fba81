//! Brute-force multiplication: realize generators as explicit sheaves,
//! convolve, and read characters off the stalks.
//!
//! This module shares nothing with the rewriting engine beyond the data
//! types and the character tables; it exists to referee
//! [`crate::algebra::multiply`].

pub mod matrix;
pub mod models;
pub mod sheaf;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{Atom, Summand};
use crate::charring::{ClassFunction, ClassLabel, IrrLabel, VirtualCharacter};
use crate::error::{Error, Result};
use crate::kclasses::KClass;
use crate::partitions::{IntegerPartition, SetPartition};
use crate::permgroup::{double_coset_table, enumerate_young, Permutation};
use crate::scalar::Field;
use crate::Rational;

pub use matrix::SparseMatrix;
pub use models::{MatrixRep, SymmetricModel};
pub use sheaf::{ConcreteSheaf, ConstantSheaf, Convolution, RepSheaf};

/// Packs a permutation of at most 16 points into a hash key.
pub(crate) fn perm_key(p: &Permutation) -> u64 {
    p.images().fold(p.n() as u64, |acc, i| (acc << 4) | i as u64)
}

/// Reads the class of a sheaf off its stalks: at each canonical `w`, the
/// trace of `z ∈ S_{ν∧wλ}` acting by `v ↦ z · v · (w⁻¹z⁻¹w)`.
pub fn stalk_decompose<F: Field>(sheaf: &dyn ConcreteSheaf<F>) -> Result<KClass<i64>> {
    let (target, source) = (sheaf.target(), sheaf.source());
    let table = double_coset_table(target, source, &SetPartition::full(target.n()))?;
    let mut stalks = Vec::new();
    for w in table.reps() {
        if sheaf.dim(w) == 0 {
            continue;
        }
        let host = target.meet(&source.act(w)?)?;
        let values = ClassLabel::all(&host)
            .into_iter()
            .map(|cl| {
                let z = cl.representative();
                let t = sheaf.twisted_trace(&z, w);
                (cl, t)
            })
            .collect::<Vec<_>>();
        let chi = ClassFunction::new(&host, values)?.decompose()?;
        stalks.push((w.clone(), chi));
    }
    KClass::from_stalks(target, source, stalks)
}

type SummandKey = (SetPartition, SetPartition, Permutation, Vec<(IrrLabel, i64)>);
type RepKey = (SetPartition, Vec<(IrrLabel, i64)>);
type SignedSheaf<F> = (i64, Arc<dyn ConcreteSheaf<F>>);

/// Realizations with their caches. Sheaves built for one product are kept
/// and reused by later ones.
pub struct Oracle<F: Field> {
    blocks: RwLock<HashMap<IntegerPartition, Arc<SymmetricModel<F>>>>,
    reps: RwLock<HashMap<RepKey, Arc<MatrixRep<F>>>>,
    summands: RwLock<HashMap<SummandKey, Arc<dyn ConcreteSheaf<F>>>>,
}

impl<F: Field> Default for Oracle<F> {
    fn default() -> Self {
        Oracle { blocks: Default::default(), reps: Default::default(), summands: Default::default() }
    }
}

/// The stalk split into honest parts: `(+1, P)` and possibly `(-1, N)`.
fn honest_parts(chi: &VirtualCharacter<i64>) -> Vec<(i64, VirtualCharacter<i64>)> {
    if chi.is_honest() {
        return vec![(1, chi.clone())];
    }
    let host = chi.host();
    let pos = VirtualCharacter::from_coords(host, chi.coords().iter().filter(|(_, c)| **c > 0).map(|(l, c)| (l.clone(), *c)))
        .expect("labels fit");
    let neg = VirtualCharacter::from_coords(host, chi.coords().iter().filter(|(_, c)| **c < 0).map(|(l, c)| (l.clone(), -*c)))
        .expect("labels fit");
    [(1, pos), (-1, neg)].into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl<F: Field> Oracle<F> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Drops every cached realization.
    pub fn clear(&self) {
        self.reps.write().expect("oracle cache poisoned").clear();
        self.summands.write().expect("oracle cache poisoned").clear();
    }

    fn block_model(&self, lambda: &IntegerPartition) -> Result<Arc<SymmetricModel<F>>> {
        if let Some(m) = self.blocks.read().expect("oracle cache poisoned").get(lambda) {
            return Ok(Arc::clone(m));
        }
        let m = Arc::new(SymmetricModel::build(lambda)?);
        Ok(Arc::clone(self.blocks.write().expect("oracle cache poisoned").entry(lambda.clone()).or_insert(m)))
    }

    /// Matrices for an honest character: coset modules when its coordinates
    /// in the induced-trivial basis are nonnegative, projected irreducibles
    /// otherwise.
    pub fn realize_character(&self, chi: &VirtualCharacter<i64>) -> Result<Arc<MatrixRep<F>>> {
        if !chi.is_honest() {
            return Err(Error::VirtualNotHonest);
        }
        let key = (chi.host().clone(), chi.to_pairs());
        if let Some(r) = self.reps.read().expect("oracle cache poisoned").get(&key) {
            return Ok(Arc::clone(r));
        }
        let host = chi.host();
        let perm_coords = chi.to_permutation_basis();
        let mut parts = Vec::new();
        if perm_coords.values().all(|c| *c >= 0) {
            for (label, c) in &perm_coords {
                let mu = host.orbit_rep(label)?;
                let m = Arc::new(MatrixRep::permutation_model(host, &mu)?);
                parts.extend(std::iter::repeat_n(m, *c as usize));
            }
        } else {
            for (label, c) in chi.coords() {
                let m = Arc::new(models::irreducible_model(host, label, &|l| self.block_model(l))?);
                parts.extend(std::iter::repeat_n(m, *c as usize));
            }
        }
        let rep = if parts.len() == 1 { parts.pop().expect("one part") } else { Arc::new(MatrixRep::direct_sum(host, &parts)) };
        Ok(Arc::clone(self.reps.write().expect("oracle cache poisoned").entry(key).or_insert(rep)))
    }

    /// The sheaf of one generator; `source` is the grading a `Perm` atom starts from.
    pub fn realize_generator(&self, atom: &Atom<i64>, source: &SetPartition) -> Result<Arc<dyn ConcreteSheaf<F>>> {
        Ok(match atom {
            Atom::One { target, source } => {
                if !target.comparable(source)? {
                    return Err(Error::NotComparable(target.to_string(), source.to_string()));
                }
                let big = if target.refines(source)? { source } else { target };
                Arc::new(ConstantSheaf::new(target, source, enumerate_young(big)))
            }
            Atom::Perm(w) => {
                let target = source.act(w)?;
                let support = enumerate_young(source).into_iter().map(|y| w.mul(&y));
                Arc::new(ConstantSheaf::new(&target, source, support))
            }
            Atom::Rep(v) => Arc::new(RepSheaf::new(self.realize_character(v)?)),
        })
    }

    /// The sheaf `_ν1_κ ∘ ⟨W⟩ ∘ _κ1_{wλ} ∘ w_*` for an honest `W`, built by
    /// convolving its four realized generators.
    pub fn realize_summand(&self, target: &SetPartition, source: &SetPartition, w: &Permutation, chi: &VirtualCharacter<i64>) -> Result<Arc<dyn ConcreteSheaf<F>>> {
        let key = (target.clone(), source.clone(), w.clone(), chi.to_pairs());
        if let Some(s) = self.summands.read().expect("oracle cache poisoned").get(&key) {
            return Ok(Arc::clone(s));
        }
        let word = Summand { target: target.clone(), point: w.clone(), stalk: chi.clone() }.word(source)?;
        let mut sheaf = self.realize_generator(word.last().expect("four atoms"), source)?;
        for atom in word[..word.len() - 1].iter().rev() {
            let g = self.realize_generator(atom, source)?;
            sheaf = Arc::new(Convolution::new(g, sheaf)?);
        }
        Ok(Arc::clone(self.summands.write().expect("oracle cache poisoned").entry(key).or_insert(sheaf)))
    }

    fn parts(&self, a: &KClass<i64>) -> Result<Vec<SignedSheaf<F>>> {
        let mut out = Vec::new();
        for (w, chi) in a.stalks() {
            for (sign, part) in honest_parts(chi) {
                out.push((sign, self.realize_summand(a.target(), a.source(), w, &part)?));
            }
        }
        Ok(out)
    }

    /// `A·B` by convolution of realized sheaves.
    pub fn multiply(&self, a: &KClass<i64>, b: &KClass<i64>) -> Result<KClass<i64>> {
        if a.source() != b.target() {
            return Err(Error::GradingMismatch(format!("{} <- {} times {} <- {}", a.target(), a.source(), b.target(), b.source())));
        }
        let mut out = KClass::zero(a.target(), b.source())?;
        let right = self.parts(b)?;
        for (sa, pa) in self.parts(a)? {
            for (sb, pb) in &right {
                let conv = Convolution::new(Arc::clone(&pa), Arc::clone(pb))?;
                out = out.add(&stalk_decompose(&conv)?.scale(&(sa * sb)))?;
            }
        }
        Ok(out)
    }
}

/// The process-wide rational oracle.
pub fn oracle() -> &'static Oracle<Rational> {
    static ORACLE: OnceLock<Oracle<Rational>> = OnceLock::new();
    ORACLE.get_or_init(Oracle::new)
}

/// `A·B` computed by the rational oracle.
pub fn oracle_multiply(a: &KClass<i64>, b: &KClass<i64>) -> Result<KClass<i64>> {
    oracle().multiply(a, b)
}
