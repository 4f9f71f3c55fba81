//! Concatenation operators on partition-tuple bases.
//!
//! For `λ̂ ⊢ n`, `α_μ` (μ ⊢ n) is sent to the sum of the tuples
//! `α_{ν_1} ⊠ … ⊠ α_{ν_r}` with `ν_i ⊢ λ̂_i` whose concatenation is `μ`;
//! dually a tuple of `ᾱ`'s is sent to `ᾱ` of its concatenation.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partitions::IntegerPartition;

/// Tuples `(ν_1, …, ν_r)` with `ν_i ⊢ λ̂_i`, in lexicographic order of the
/// factors' partition lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartTupleBasis {
    lambda: IntegerPartition,
    tuples: Vec<Vec<IntegerPartition>>,
}

impl PartTupleBasis {
    pub fn new(lambda: &IntegerPartition) -> Self {
        let tuples = lambda
            .parts()
            .iter()
            .map(|&k| IntegerPartition::all(k))
            .multi_cartesian_product()
            .collect_vec();
        // `multi_cartesian_product` of nothing yields nothing; n = 0 has one empty tuple.
        let tuples = if lambda.is_empty() { vec![Vec::new()] } else { tuples };
        PartTupleBasis { lambda: lambda.clone(), tuples }
    }

    pub fn lambda(&self) -> &IntegerPartition {
        &self.lambda
    }

    pub fn tuples(&self) -> &[Vec<IntegerPartition>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn index_of(&self, tuple: &[IntegerPartition]) -> Option<usize> {
        self.tuples.iter().position(|t| t == tuple)
    }
}

fn tuple_label(t: &[IntegerPartition]) -> String {
    t.iter().map(|p| format!("({p})")).join("⊠")
}

/// A dense integer matrix with labelled rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl fmt::Display for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
        writeln!(f, "{:w$}  {}", "", self.cols.join("  "))?;
        for (r, row) in self.rows.iter().zip(&self.entries) {
            let cells = row.iter().zip(&self.cols).map(|(v, c)| format!("{v:>width$}", width = c.chars().count())).join("  ");
            writeln!(f, "{:w$}  {cells}", r)?;
        }
        Ok(())
    }
}

/// Rows `α_μ` for `μ ⊢ n`, columns the tuple basis of `λ̂`; entry 1 where
/// the tuple concatenates to `μ`.
pub fn phi_matrix(lambda: &IntegerPartition) -> LabeledMatrix {
    let basis = PartTupleBasis::new(lambda);
    let mus = IntegerPartition::all(lambda.size());
    let entries = mus
        .iter()
        .map(|mu| basis.tuples().iter().map(|t| i64::from(IntegerPartition::concat(t) == *mu)).collect())
        .collect();
    LabeledMatrix {
        rows: mus.iter().map(|m| format!("α({m})")).collect(),
        cols: basis.tuples().iter().map(|t| tuple_label(t)).collect(),
        entries,
    }
}

/// Rows `ᾱ_μ`, columns the tuple basis; each column is the unit vector of
/// its concatenation.
pub fn dual_phi_matrix(lambda: &IntegerPartition) -> LabeledMatrix {
    let mut m = phi_matrix(lambda);
    m.rows = IntegerPartition::all(lambda.size()).iter().map(|p| format!("ᾱ({p})")).collect();
    m
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriangularityReport {
    pub pairs: usize,
    pub vanishing_rows: usize,
    pub failures: Vec<String>,
}

impl TriangularityReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for TriangularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} pairs (μ, λ̂) checked, {} rows required to vanish", self.pairs, self.vanishing_rows)?;
        for failure in &self.failures {
            writeln!(f, "FAILED {failure}")?;
        }
        Ok(())
    }
}

/// For every `λ̂ ⊢ n ≤ max_n`: the `α_μ` row of `phi_matrix(λ̂)` is zero
/// unless `μ ⪯ λ̂`, and `α_λ̂` goes to the tuple of one-row partitions with
/// coefficient 1.
pub fn verify_triangularity(max_n: usize) -> Result<TriangularityReport> {
    let mut report = TriangularityReport::default();
    for n in 0..=max_n {
        let mus = IntegerPartition::all(n);
        for lambda in &mus {
            let m = phi_matrix(lambda);
            for (mu, row) in mus.iter().zip(&m.entries) {
                report.pairs += 1;
                if !mu.preceq(lambda)? {
                    report.vanishing_rows += 1;
                    if row.iter().any(|&v| v != 0) {
                        report.failures.push(format!("α({mu}) survives at λ̂ = ({lambda})"));
                    }
                }
            }
            let rows: Vec<_> = lambda.parts().iter().map(|&k| IntegerPartition::row(k)).collect();
            let basis = PartTupleBasis::new(lambda);
            let li = mus.iter().position(|m| m == lambda).expect("λ̂ ⊢ n");
            let expect: Vec<i64> = (0..basis.len()).map(|j| i64::from(Some(j) == basis.index_of(&rows))).collect();
            if m.entries[li] != expect {
                report.failures.push(format!("α({lambda}) is not the tuple of rows"));
            }
        }
    }
    Ok(report)
}
