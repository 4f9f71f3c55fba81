//! The double-coset convolution algebra (the Morita-reduced Schur algebra)
//! and the stalk-dimension homomorphism onto it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kclasses::{basis, KClass};
use crate::partitions::SetPartition;
use crate::permgroup::{double_coset_table, Permutation};
use crate::scalar::Ring;

/// An `(S_left × S_right)`-invariant function on `S_d`, stored by its value
/// at each canonical double-coset representative (zeros omitted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetFunction<R: Ring> {
    left: SetPartition,
    right: SetPartition,
    values: BTreeMap<Permutation, R>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionRecord {
    pub left: String,
    pub right: String,
    pub values: Vec<(String, i64)>,
}

impl<R: Ring> DoubleCosetFunction<R> {
    pub fn zero(left: &SetPartition, right: &SetPartition) -> Result<Self> {
        if left.n() != right.n() {
            return Err(Error::SizeMismatch { expected: left.n(), found: right.n() });
        }
        Ok(DoubleCosetFunction { left: left.clone(), right: right.clone(), values: BTreeMap::new() })
    }

    /// The indicator of the double coset through `u`.
    pub fn indicator(left: &SetPartition, right: &SetPartition, u: &Permutation) -> Result<Self> {
        let mut f = Self::zero(left, right)?;
        let table = double_coset_table(left, right, &SetPartition::full(left.n()))?;
        let (rep, _) = table.locate(u).ok_or_else(|| Error::SizeMismatch { expected: left.n(), found: u.n() })?;
        f.values.insert(rep.clone(), R::one());
        Ok(f)
    }

    /// `δ_[e]`, the unit at `λ`.
    pub fn unit(lambda: &SetPartition) -> Self {
        Self::indicator(lambda, lambda, &Permutation::identity(lambda.n())).expect("same size")
    }

    /// Builds from values at arbitrary points, each standing for its double coset.
    pub fn from_values<I: IntoIterator<Item = (Permutation, R)>>(left: &SetPartition, right: &SetPartition, values: I) -> Result<Self> {
        let mut f = Self::zero(left, right)?;
        let table = double_coset_table(left, right, &SetPartition::full(left.n()))?;
        for (w, v) in values {
            let (rep, _) = table.locate(&w).ok_or_else(|| Error::SizeMismatch { expected: left.n(), found: w.n() })?;
            let s = Ring::add(f.values.get(rep).unwrap_or(&R::zero()), &v);
            if s.is_zero() {
                f.values.remove(rep);
            } else {
                f.values.insert(rep.clone(), s);
            }
        }
        Ok(f)
    }

    pub fn left(&self) -> &SetPartition {
        &self.left
    }

    pub fn right(&self) -> &SetPartition {
        &self.right
    }

    pub fn values(&self) -> &BTreeMap<Permutation, R> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at any `u ∈ S_d`.
    pub fn at(&self, u: &Permutation) -> R {
        let table = double_coset_table(&self.left, &self.right, &SetPartition::full(self.left.n())).expect("same size");
        let (rep, _) = table.locate(u).expect("u ∈ S_d");
        self.values.get(rep).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (&self.left, &self.right) != (&other.left, &other.right) {
            return Err(Error::GradingMismatch(format!("{} <- {} plus {} <- {}", self.left, self.right, other.left, other.right)));
        }
        let mut out = self.clone();
        for (w, v) in &other.values {
            let s = Ring::add(out.values.get(w).unwrap_or(&R::zero()), v);
            if s.is_zero() {
                out.values.remove(w);
            } else {
                out.values.insert(w.clone(), s);
            }
        }
        Ok(out)
    }

    pub fn to_record(&self) -> FunctionRecord {
        FunctionRecord {
            left: self.left.to_string(),
            right: self.right.to_string(),
            values: self.values.iter().map(|(w, v)| (w.to_string(), v.to_i64().expect("fits in i64"))).collect(),
        }
    }
}

/// One `y` per right coset `S_μ y` of `S_d`. The coset is determined by
/// which block of `μ` each `y(i)` lies in.
fn right_coset_reps(mu: &SetPartition) -> Vec<Permutation> {
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    Permutation::all(mu.n())
        .into_iter()
        .filter(|y| seen.insert(y.images().map(|i| mu.block_of(i)).collect(), ()).is_none())
        .collect()
}

/// `(ψ∘φ)(x) = Σ_{S_μ y} ψ(x y⁻¹) φ(y)`.
pub fn convolve_functions<R: Ring>(psi: &DoubleCosetFunction<R>, phi: &DoubleCosetFunction<R>) -> Result<DoubleCosetFunction<R>> {
    if psi.right != phi.left {
        return Err(Error::GradingMismatch(format!("{} <- {} after {} <- {}", psi.left, psi.right, phi.left, phi.right)));
    }
    let mut out = DoubleCosetFunction::zero(&psi.left, &phi.right)?;
    let outer = double_coset_table(&psi.left, &phi.right, &SetPartition::full(psi.left.n()))?;
    let ys: Vec<(Permutation, R)> = right_coset_reps(&psi.right)
        .into_iter()
        .map(|y| {
            let v = phi.at(&y);
            (y, v)
        })
        .filter(|(_, v)| !v.is_zero())
        .collect();
    for x in outer.reps() {
        let mut acc = R::zero();
        for (y, fy) in &ys {
            let a = psi.at(&x.mul(&y.inverse()));
            if !a.is_zero() {
                acc.add_assign(&Ring::mul(&a, fy));
            }
        }
        if !acc.is_zero() {
            out.values.insert(x.clone(), acc);
        }
    }
    Ok(out)
}

/// Stalk dimensions: the value at `[w]` is the virtual dimension of the
/// stalk at `w`.
pub fn quotient_map<R: Ring>(a: &KClass<R>) -> DoubleCosetFunction<R> {
    let values = a
        .stalks()
        .iter()
        .map(|(w, chi)| (w.clone(), chi.dimension()))
        .filter(|(_, d)| !d.is_zero())
        .collect();
    DoubleCosetFunction { left: a.target().clone(), right: a.source().clone(), values }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuotientReport {
    pub pairs: usize,
    pub surjective_gradings: usize,
    pub failures: Vec<String>,
}

impl QuotientReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for QuotientReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} products checked, {} gradings surjective", self.pairs, self.surjective_gradings)?;
        for failure in &self.failures {
            writeln!(f, "FAILED {failure}")?;
        }
        Ok(())
    }
}

/// Checks `quotient_map(AB) = quotient_map(A) ∘ quotient_map(B)` on every
/// composable pair of basis elements, and that every double-coset indicator
/// is the image of a basis element.
pub fn verify_quotient_hom(n: usize) -> Result<QuotientReport> {
    let mut report = QuotientReport::default();
    let parts = SetPartition::all(n);
    let mut elements: HashMap<(SetPartition, SetPartition), Vec<KClass<i64>>> = HashMap::new();
    for t in &parts {
        for s in &parts {
            let els = basis(t, s)?.iter().map(KClass::basis_element).collect::<Result<Vec<_>>>()?;
            let images: Vec<_> = els.iter().map(quotient_map).collect();
            let table = double_coset_table(t, s, &SetPartition::full(n))?;
            let hit = table.reps().all(|w| {
                let delta = DoubleCosetFunction::indicator(t, s, w).expect("same size");
                images.contains(&delta)
            });
            if hit {
                report.surjective_gradings += 1;
            } else {
                report.failures.push(format!("indicators of {t} <- {s} not all hit"));
            }
            elements.insert((t.clone(), s.clone()), els);
        }
    }
    for a in &parts {
        for b in &parts {
            for c in &parts {
                let lefts = &elements[&(a.clone(), b.clone())];
                let rights = &elements[&(b.clone(), c.clone())];
                let rights_q: Vec<_> = rights.iter().map(quotient_map).collect();
                for x in lefts {
                    let qx = quotient_map(x);
                    for (y, qy) in rights.iter().zip(&rights_q) {
                        let lhs = quotient_map(&crate::algebra::multiply(x, y)?);
                        let rhs = convolve_functions(&qx, qy)?;
                        report.pairs += 1;
                        if lhs != rhs {
                            report.failures.push(format!("{a} <- {b} <- {c}: {:?} · {:?}", x.to_record(), y.to_record()));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
