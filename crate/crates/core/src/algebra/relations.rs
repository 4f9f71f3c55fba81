use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::kclasses::KClass;
use crate::partitions::SetPartition;
use crate::permgroup::{double_coset_table, Permutation};

use super::{multiply, AlgebraElement};

type K = KClass<i64>;

/// Outcome of [`verify_relations`]: instance counts per family and the
/// instances that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: BTreeMap<char, usize>,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, family: char, ok: bool, what: impl FnOnce() -> String) {
        *self.checked.entry(family).or_default() += 1;
        if !ok {
            self.failures.push(format!("({family}) {}", what()));
        }
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (family, count) in &self.checked {
            writeln!(f, "({family}) {count} instances")?;
        }
        for failure in &self.failures {
            writeln!(f, "FAILED {failure}")?;
        }
        Ok(())
    }
}

fn mul(a: &K, b: &K) -> Result<K> {
    multiply(a, b)
}

/// Checks every instance of the defining relations (a)–(d) at size `n`.
pub fn verify_relations(n: usize) -> Result<RelationReport> {
    let mut report = RelationReport::default();
    let parts = SetPartition::all(n);
    let perms = Permutation::all(n);
    let one = |t: &SetPartition, s: &SetPartition| K::gen_one(t, s);

    // (a) chains and orthogonality.
    for nu in &parts {
        for mu in &parts {
            for lam in &parts {
                let up = lam.refines(mu)? && mu.refines(nu)?;
                let down = nu.refines(mu)? && mu.refines(lam)?;
                if up || down {
                    let lhs = mul(&one(nu, mu)?, &one(mu, lam)?)?;
                    report.record('a', lhs == one(nu, lam)?, || format!("1[{nu},{mu}]·1[{mu},{lam}]"));
                }
            }
        }
        for mu in &parts {
            let prod = AlgebraElement::from_class(K::idempotent(nu)).multiply(&AlgebraElement::from_class(K::idempotent(mu)))?;
            let ok = if nu == mu { prod == AlgebraElement::from_class(K::idempotent(nu)) } else { prod.is_zero() };
            report.record('a', ok, || format!("e[{nu}]·e[{mu}]"));
        }
    }

    // (b) w_* z_* = (wz)_* gradewise, and e_* = Σ e_λ.
    for lam in &parts {
        for z in &perms {
            let zl = lam.act(z)?;
            let right = K::gen_perm(z, lam)?;
            for w in &perms {
                let lhs = mul(&K::gen_perm(w, &zl)?, &right)?;
                report.record('b', lhs == K::gen_perm(&w.mul(z), lam)?, || format!("{w}·{z} on {lam}"));
            }
        }
    }
    let id = Permutation::identity(n);
    report.record('b', AlgebraElement::<i64>::w_star(&id) == AlgebraElement::unit(n), || "e_* = Σ e_λ".into());

    // (c) w_* · _ν1_μ = _{wν}1_{wμ} · w_*, plus the absorption rules.
    for nu in &parts {
        for mu in parts.iter().filter(|mu| nu.comparable(mu).unwrap_or(false)) {
            let base = one(nu, mu)?;
            for w in &perms {
                let lhs = mul(&K::gen_perm(w, nu)?, &base)?;
                let rhs = mul(&one(&nu.act(w)?, &mu.act(w)?)?, &K::gen_perm(w, mu)?)?;
                report.record('c', lhs == rhs, || format!("{w}·1[{nu},{mu}]"));
                if w.in_young(nu) {
                    report.record('c', lhs == base, || format!("{w} ∈ S_{nu} absorbs on the left"));
                }
                if w.in_young(mu) {
                    let r = mul(&base, &K::gen_perm(w, mu)?)?;
                    report.record('c', r == base, || format!("{w} ∈ S_{mu} absorbs on the right"));
                }
            }
        }
    }

    // (d) Mackey, both displayed forms.
    for nu in &parts {
        let below = nu.refinements();
        for mu in &below {
            for lam in &below {
                let lhs = mul(&one(mu, nu)?, &one(nu, lam)?)?;
                let mut first = K::zero(mu, lam)?;
                let mut second = K::zero(mu, lam)?;
                for z in double_coset_table(mu, lam, nu)?.reps() {
                    let zl = lam.act(z)?;
                    let meet = mu.meet(&zl)?;
                    let pulled = mu.act(&z.inverse())?.meet(lam)?;
                    let t1 = mul(&mul(&one(mu, &meet)?, &K::gen_perm(z, &pulled)?)?, &one(&pulled, lam)?)?;
                    let t2 = mul(&mul(&one(mu, &meet)?, &one(&meet, &zl)?)?, &K::gen_perm(z, lam)?)?;
                    first = first.add(&t1)?;
                    second = second.add(&t2)?;
                }
                report.record('d', lhs == first, || format!("1[{mu},{nu}]·1[{nu},{lam}], first form"));
                report.record('d', lhs == second, || format!("1[{mu},{nu}]·1[{nu},{lam}], second form"));
            }
        }
    }
    Ok(report)
}
