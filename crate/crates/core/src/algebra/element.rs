use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::kclasses::KClass;
use crate::partitions::SetPartition;
use crate::permgroup::Permutation;
use crate::scalar::Ring;

use super::multiply;

/// An element of `R_[n]`: one class per grading `(target, source)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<R: Ring> {
    n: usize,
    pieces: BTreeMap<(SetPartition, SetPartition), KClass<R>>,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, pieces: BTreeMap::new() }
    }

    pub fn from_class(a: KClass<R>) -> Self {
        let mut out = Self::zero(a.n());
        out.add_class(a).expect("sizes agree");
        out
    }

    /// `Σ_λ e_λ`.
    pub fn unit(n: usize) -> Self {
        let mut out = Self::zero(n);
        for lambda in SetPartition::all(n) {
            out.add_class(KClass::idempotent(&lambda)).expect("sizes agree");
        }
        out
    }

    /// `w_* = Σ_λ _{wλ}(w_*)_λ`.
    pub fn w_star(w: &Permutation) -> Self {
        let mut out = Self::zero(w.n());
        for lambda in SetPartition::all(w.n()) {
            out.add_class(KClass::gen_perm(w, &lambda).expect("sizes agree")).expect("sizes agree");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pieces(&self) -> impl Iterator<Item = &KClass<R>> {
        self.pieces.values()
    }

    pub fn piece(&self, target: &SetPartition, source: &SetPartition) -> Option<&KClass<R>> {
        self.pieces.get(&(target.clone(), source.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn add_class(&mut self, a: KClass<R>) -> Result<()> {
        if a.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: a.n() });
        }
        let key = (a.target().clone(), a.source().clone());
        let sum = match self.pieces.remove(&key) {
            Some(old) => old.add(&a)?,
            None => a,
        };
        if !sum.is_zero() {
            self.pieces.insert(key, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for a in other.pieces.values() {
            out.add_class(a.clone())?;
        }
        Ok(out)
    }

    /// Products of pieces whose inner gradings match; all others vanish.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        let mut out = Self::zero(self.n);
        for a in self.pieces.values() {
            for b in other.pieces.values().filter(|b| b.target() == a.source()) {
                out.add_class(multiply(a, b)?)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = AlgebraElement<i64>;

    #[test]
    fn unit_is_two_sided() {
        for n in 0..=3 {
            let one = E::unit(n);
            for w in Permutation::all(n) {
                let ws = E::w_star(&w);
                assert_eq!(one.multiply(&ws).unwrap(), ws);
                assert_eq!(ws.multiply(&one).unwrap(), ws);
            }
            assert_eq!(E::w_star(&Permutation::identity(n)), one);
        }
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let parts = SetPartition::all(3);
        for a in &parts {
            for b in &parts {
                let p = E::from_class(KClass::idempotent(a)).multiply(&E::from_class(KClass::idempotent(b))).unwrap();
                if a == b {
                    assert_eq!(p, E::from_class(KClass::idempotent(a)));
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn w_star_is_a_group_homomorphism() {
        for w in Permutation::all(3) {
            for z in Permutation::all(3) {
                let lhs = E::w_star(&w).multiply(&E::w_star(&z)).unwrap();
                assert_eq!(lhs, E::w_star(&w.mul(&z)));
            }
        }
    }
}
