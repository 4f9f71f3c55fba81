//! Multiplication in `R_[n]` by generator rewriting.
//!
//! A product `A·B` is computed by writing every stalk of `A` as the word
//! `_ν1_κ · ⟨W⟩ · _κ1_{wμ} · w_*` and folding its atoms, right to left,
//! onto the summands of `B`. Each atom acts on a summand by one of four
//! local rules (twist, tensor, induce, Mackey sum), so the product never
//! leaves the stalk description.

mod element;
pub mod quiver;
mod relations;
mod table;

use std::collections::BTreeMap;

use crate::charring::VirtualCharacter;
use crate::error::{Error, Result};
use crate::kclasses::{stalk_host, KClass};
use crate::partitions::{partition_count, SetPartition};
use crate::permgroup::{double_coset_table, Permutation};
use crate::scalar::Ring;

pub use element::AlgebraElement;
pub use relations::{verify_relations, RelationReport};
pub use table::{export_presentation, structure_constants, Presentation, ProductEntry, StructureConstants, MAX_FULL_N, MAX_REDUCED_N};

/// A generator of `R_[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom<R: Ring> {
    /// `_σ1_τ` for comparable `σ, τ`.
    One { target: SetPartition, source: SetPartition },
    /// `w_*`, acting on whichever grading it meets.
    Perm(Permutation),
    /// `⟨V⟩` on the host of `V`.
    Rep(VirtualCharacter<R>),
}

/// A word of generators, leftmost first.
pub type GeneratorWord<R> = Vec<Atom<R>>;

/// The class supported on `S_ν u S_λ` whose stalk at `u` is `stalk`
/// (a character of `S_{ν∧uλ}`); `u` need not be canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand<R: Ring> {
    pub target: SetPartition,
    pub point: Permutation,
    pub stalk: VirtualCharacter<R>,
}

impl<R: Ring> Summand<R> {
    /// The summands of a class, one per stalk.
    pub fn of_class(a: &KClass<R>) -> Vec<Summand<R>> {
        a.stalks()
            .iter()
            .map(|(w, chi)| Summand { target: a.target().clone(), point: w.clone(), stalk: chi.clone() })
            .collect()
    }

    /// The canonical word `_ν1_κ · ⟨W⟩ · _κ1_{uλ} · u_*` of this summand.
    pub fn word(&self, source: &SetPartition) -> Result<GeneratorWord<R>> {
        stalk_word(&self.target, source, &self.point, &self.stalk)
    }
}

/// Applies one generator on the left of a summand of `_τR_λ`.
pub fn left_compose_generator<R: Ring>(atom: &Atom<R>, s: &Summand<R>, source: &SetPartition) -> Result<Vec<Summand<R>>> {
    match atom {
        Atom::Perm(z) => Ok(vec![Summand {
            target: s.target.act(z)?,
            point: z.mul(&s.point),
            stalk: s.stalk.twist(z)?,
        }]),
        Atom::Rep(v) => {
            if v.host() != &s.target {
                return Err(Error::GradingMismatch(format!("⟨V⟩ on {} after {}", v.host(), s.target)));
            }
            let res = v.restrict(s.stalk.host())?;
            Ok(vec![Summand { target: s.target.clone(), point: s.point.clone(), stalk: res.tensor(&s.stalk)? }])
        }
        Atom::One { target: sigma, source: tau } => {
            if tau != &s.target {
                return Err(Error::GradingMismatch(format!("1 from {tau} after {}", s.target)));
            }
            if sigma == tau {
                return Ok(vec![s.clone()]);
            }
            if tau.refines(sigma)? {
                let host = stalk_host(sigma, &s.point, source);
                return Ok(vec![Summand { target: sigma.clone(), point: s.point.clone(), stalk: s.stalk.induce(&host)? }]);
            }
            if !sigma.refines(tau)? {
                return Err(Error::NotComparable(sigma.to_string(), tau.to_string()));
            }
            // Mackey: the left action restricted from S_τ to S_σ splits the
            // support into S_σ-double cosets S_σ z u S_λ, z ∈ S_σ\S_τ/S_κ.
            let kappa = s.stalk.host();
            let table = double_coset_table(sigma, kappa, tau)?;
            let mut out = Vec::with_capacity(table.len());
            for z in table.reps() {
                let point = z.mul(&s.point);
                let host = stalk_host(sigma, &point, source);
                let twisted = if z.is_identity() { s.stalk.clone() } else { s.stalk.twist(z)? };
                let stalk = twisted.restrict(&host)?;
                if !stalk.is_zero() {
                    out.push(Summand { target: sigma.clone(), point, stalk });
                }
            }
            Ok(out)
        }
    }
}

/// Folds a word (leftmost first) onto a list of summands of `_τR_λ`.
pub fn apply_word<R: Ring>(word: &[Atom<R>], mut summands: Vec<Summand<R>>, source: &SetPartition) -> Result<Vec<Summand<R>>> {
    for atom in word.iter().rev() {
        let mut next = Vec::with_capacity(summands.len());
        for s in &summands {
            next.extend(left_compose_generator(atom, s, source)?);
        }
        summands = next;
    }
    Ok(summands)
}

/// The four-atom word of a stalk `W` at `w` of a class in `_νR_μ`.
fn stalk_word<R: Ring>(target: &SetPartition, middle: &SetPartition, w: &Permutation, chi: &VirtualCharacter<R>) -> Result<GeneratorWord<R>> {
    let kappa = chi.host().clone();
    let w_mu = middle.act(w)?;
    Ok(vec![
        Atom::One { target: target.clone(), source: kappa.clone() },
        Atom::Rep(chi.clone()),
        Atom::One { target: kappa, source: w_mu },
        Atom::Perm(w.clone()),
    ])
}

fn collect<R: Ring>(target: &SetPartition, source: &SetPartition, summands: Vec<Summand<R>>, ambient: &SetPartition) -> Result<KClass<R>> {
    let table = double_coset_table(target, source, ambient)?;
    let mut stalks: BTreeMap<Permutation, VirtualCharacter<R>> = BTreeMap::new();
    for s in summands {
        if &s.target != target {
            return Err(Error::GradingMismatch(format!("summand lands in {} not {target}", s.target)));
        }
        let (rep, x) = table
            .locate(&s.point)
            .ok_or_else(|| Error::SupportEscapes(format!("{} lies outside S_{{{ambient}}}", s.point)))?;
        let moved = if x.is_identity() { s.stalk } else { s.stalk.twist(&x.inverse())? };
        match stalks.get_mut(rep) {
            Some(acc) => *acc = acc.add(&moved)?,
            None => {
                stalks.insert(rep.clone(), moved);
            }
        }
    }
    KClass::from_stalks(target, source, stalks.into_iter().filter(|(_, c)| !c.is_zero()))
}

/// The product `A·B` of `A ∈ _νR_μ` and `B ∈ _μR_λ`.
pub fn multiply<R: Ring>(a: &KClass<R>, b: &KClass<R>) -> Result<KClass<R>> {
    multiply_in(a, b, &SetPartition::full(a.n()))
}

/// As [`multiply`], with all double-coset bookkeeping done inside the
/// parabolic subgroup `S_τ`; fails if a support leaves it.
pub fn multiply_in<R: Ring>(a: &KClass<R>, b: &KClass<R>, ambient: &SetPartition) -> Result<KClass<R>> {
    if a.source() != b.target() {
        return Err(Error::GradingMismatch(format!("{} <- {} times {} <- {}", a.target(), a.source(), b.target(), b.source())));
    }
    let lambda = b.source();
    let base = Summand::of_class(b);
    let mut out = Vec::new();
    for (w, chi) in a.stalks() {
        let word = stalk_word(a.target(), a.source(), w, chi)?;
        out.extend(apply_word(&word, base.clone(), lambda)?);
    }
    collect(a.target(), lambda, out, ambient)
}

/// Evaluates a word on the idempotent `e_λ`.
pub fn evaluate_word<R: Ring>(word: &[Atom<R>], source: &SetPartition) -> Result<KClass<R>> {
    let e = KClass::idempotent(source);
    let summands = apply_word(word, Summand::of_class(&e), source)?;
    let target = summands.first().map(|s| s.target.clone()).unwrap_or_else(|| word_target(word, source));
    collect(&target, source, summands, &SetPartition::full(source.n()))
}

fn word_target<R: Ring>(word: &[Atom<R>], source: &SetPartition) -> SetPartition {
    let mut t = source.clone();
    for atom in word.iter().rev() {
        t = match atom {
            Atom::One { target, .. } => target.clone(),
            Atom::Perm(z) => t.act(z).expect("sizes checked"),
            Atom::Rep(v) => v.host().clone(),
        };
    }
    t
}

/// `dim _νR_λ = Σ_{S_ν w S_λ} ∏_{blocks of ν∧wλ} p(|block|)`.
pub fn dimension(target: &SetPartition, source: &SetPartition) -> Result<u64> {
    let table = double_coset_table(target, source, &SetPartition::full(target.n()))?;
    Ok(table
        .reps()
        .map(|w| stalk_host(target, w, source).block_sizes().into_iter().map(partition_count).product::<u64>())
        .sum())
}

/// Views a class of the parabolic subalgebra `R_τ` inside `R_[n]`.
pub fn embed_parabolic<R: Ring>(ambient: &SetPartition, a: &KClass<R>) -> Result<KClass<R>> {
    for p in [a.target(), a.source()] {
        if !p.refines(ambient)? {
            return Err(Error::NotRefinement(p.to_string(), ambient.to_string()));
        }
    }
    if !a.supported_in(ambient) {
        return Err(Error::SupportEscapes(format!("class is not supported in S_{{{ambient}}}")));
    }
    Ok(a.clone())
}
