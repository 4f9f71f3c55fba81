//! Explicit matrix representations of Young subgroups.
//!
//! Induced-trivial characters are realized on cosets; an irreducible `χ_λ`
//! of `S_m` is cut out of the coset module `Ind_{S_λ} 1` (which contains it
//! exactly once) by its central idempotent.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::charring::{symmetric, IrrLabel, VirtualCharacter};
use crate::error::{Error, Result};
use crate::partitions::{IntegerPartition, SetPartition};
use crate::permgroup::{enumerate_young, Permutation};
use crate::scalar::{Field, Ring};

use super::matrix::{column_basis, invert, SparseMatrix};
use super::perm_key;

/// A representation of `S_host`: one matrix per group element.
#[derive(Debug)]
pub struct MatrixRep<F: Field> {
    host: SetPartition,
    dim: usize,
    mats: HashMap<u64, Arc<SparseMatrix<F>>>,
}

impl<F: Field> MatrixRep<F> {
    pub fn host(&self) -> &SetPartition {
        &self.host
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `ρ(g)`; panics if `g ∉ S_host`.
    pub fn get(&self, g: &Permutation) -> Arc<SparseMatrix<F>> {
        Arc::clone(self.mats.get(&perm_key(g)).unwrap_or_else(|| panic!("{g} is not in S_{{{}}}", self.host)))
    }

    /// The character, class by class.
    pub fn character(&self) -> Result<VirtualCharacter<i64>> {
        let values = crate::charring::ClassLabel::all(&self.host)
            .into_iter()
            .map(|cl| {
                let t = self.get(&cl.representative()).trace();
                (cl, t)
            })
            .collect_vec();
        crate::charring::ClassFunction::new(&self.host, values)?.decompose()
    }

    /// `ρ_1 ⊕ ρ_2 ⊕ …`.
    pub fn direct_sum(host: &SetPartition, parts: &[Arc<MatrixRep<F>>]) -> Self {
        let dim = parts.iter().map(|p| p.dim).sum();
        let mut mats = HashMap::new();
        for g in enumerate_young(host) {
            let mut m = SparseMatrix::zeros(dim, dim);
            let mut off = 0;
            for p in parts {
                m.place(off, off, &p.get(&g));
                off += p.dim;
            }
            mats.insert(perm_key(&g), Arc::new(m));
        }
        MatrixRep { host: host.clone(), dim, mats }
    }

    /// `Ind_{S_μ}^{S_host} 1` on the cosets `g S_μ`.
    pub fn permutation_model(host: &SetPartition, mu: &SetPartition) -> Result<Self> {
        if !mu.refines(host)? {
            return Err(Error::NotRefinement(mu.to_string(), host.to_string()));
        }
        let elements = enumerate_young(host);
        let coset_of = |g: &Permutation| -> Vec<Vec<usize>> {
            mu.blocks()
                .iter()
                .map(|b| b.iter().map(|&i| g.apply(i as usize)).sorted().collect())
                .collect()
        };
        let mut index: HashMap<Vec<Vec<usize>>, usize> = HashMap::new();
        let mut cosets = Vec::new();
        for g in &elements {
            let c = coset_of(g);
            if !index.contains_key(&c) {
                index.insert(c.clone(), cosets.len());
                cosets.push(c);
            }
        }
        let mut mats = HashMap::new();
        for g in &elements {
            let image = cosets
                .iter()
                .map(|c| {
                    let moved = c.iter().map(|b| b.iter().map(|&i| g.apply(i)).sorted().collect_vec()).collect_vec();
                    index[&moved]
                })
                .collect_vec();
            mats.insert(perm_key(g), Arc::new(SparseMatrix::permutation(&image)));
        }
        Ok(MatrixRep { host: host.clone(), dim: cosets.len(), mats })
    }
}

/// An irreducible representation of `S_m` on `{0, …, m-1}`.
#[derive(Debug)]
pub struct SymmetricModel<F: Field> {
    pub dim: usize,
    mats: HashMap<u64, SparseMatrix<F>>,
}

impl<F: Field> SymmetricModel<F> {
    /// Projects `Ind_{S_λ}^{S_m} 1` onto its `χ_λ`-isotypic part.
    pub fn build(lambda: &IntegerPartition) -> Result<Self> {
        let m = lambda.size();
        let full = SetPartition::full(m);
        let perm = MatrixRep::<F>::permutation_model(&full, &lambda.canonical_section())?;
        let data = symmetric(m);
        let li = data.index_of(lambda);
        let group = enumerate_young(&full);
        let n = perm.dim;

        // E = (d / m!) Σ_g χ(g) P(g); χ is real so χ(g⁻¹) = χ(g).
        let mut e = vec![vec![F::zero(); n]; n];
        for g in &group {
            let ct = IntegerPartition::from_unsorted(g.cycle_type_on(&full).remove(0).parts().to_vec());
            let chi = data.table[li][data.index_of(&ct)];
            if chi == 0 {
                continue;
            }
            for (j, row) in perm.get(g).to_dense().iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        e[j][k].add_assign(&Ring::mul(v, &F::from_i64(chi)));
                    }
                }
            }
        }
        let scale = Field::div(&F::from_i64(data.dimension(lambda)), &F::from_i64(group.len() as i64));
        for row in e.iter_mut() {
            for v in row.iter_mut() {
                *v = Ring::mul(v, &scale);
            }
        }
        let cols = column_basis(&e);
        let dim = cols.len();
        if dim as i64 != data.dimension(lambda) {
            return Err(Error::NotVirtualCharacter(format!("projection for {lambda} has rank {dim}")));
        }
        let basis: Vec<Vec<F>> = (0..n).map(|i| cols.iter().map(|&c| e[i][c].clone()).collect()).collect();
        // Rows where the basis is invertible.
        let transposed: Vec<Vec<F>> = (0..dim).map(|c| (0..n).map(|r| basis[r][c].clone()).collect()).collect();
        let rows = column_basis(&transposed);
        let square: Vec<Vec<F>> = rows.iter().map(|&r| basis[r].clone()).collect();
        let inv = invert(&square).expect("pivot rows are independent");
        let inv = SparseMatrix::from_dense(&inv);
        let basis_sparse = SparseMatrix::from_dense(&basis);

        let mut mats = HashMap::new();
        for g in &group {
            let moved = perm.get(g).mul(&basis_sparse).to_dense();
            let picked: Vec<Vec<F>> = rows.iter().map(|&r| moved[r].clone()).collect();
            mats.insert(perm_key(g), inv.mul(&SparseMatrix::from_dense(&picked)));
        }
        Ok(SymmetricModel { dim, mats })
    }

    pub fn get(&self, g: &Permutation) -> &SparseMatrix<F> {
        &self.mats[&perm_key(g)]
    }
}

/// `g` restricted to a sorted block, as a permutation of `{0, …, |block|-1}`.
fn local(g: &Permutation, block: &[u8]) -> Permutation {
    let images = block
        .iter()
        .map(|&i| block.iter().position(|&j| j as usize == g.apply(i as usize)).expect("g preserves the block"))
        .collect();
    Permutation::from_images(images).expect("bijection on the block")
}

/// The irreducible `⊠_B χ_{λ_B}` of `S_host` from per-block models.
pub fn irreducible_model<F: Field>(
    host: &SetPartition,
    label: &IrrLabel,
    block_model: &dyn Fn(&IntegerPartition) -> Result<Arc<SymmetricModel<F>>>,
) -> Result<MatrixRep<F>> {
    let models = label.0.iter().map(block_model).collect::<Result<Vec<_>>>()?;
    let dim = models.iter().map(|m| m.dim).product();
    let mut mats = HashMap::new();
    for g in enumerate_young(host) {
        let mut m = SparseMatrix::identity(1);
        for (block, model) in host.blocks().iter().zip(&models) {
            m = m.kron(model.get(&local(&g, block)));
        }
        mats.insert(perm_key(&g), Arc::new(m));
    }
    Ok(MatrixRep { host: host.clone(), dim, mats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_model_character() {
        let host = sp("1 2 3");
        let m = MatrixRep::<Q>::permutation_model(&host, &sp("1 2|3")).unwrap();
        assert_eq!(m.dim(), 3);
        let expect = VirtualCharacter::permutation_character(&host, &"2,1".parse().unwrap()).unwrap();
        assert_eq!(m.character().unwrap(), expect);
    }

    #[test]
    fn models_are_homomorphisms() {
        for lam in IntegerPartition::all(4) {
            let model = SymmetricModel::<Q>::build(&lam).unwrap();
            let group = Permutation::all(4);
            for g in &group {
                for h in &group {
                    assert_eq!(model.get(g).mul(model.get(h)), *model.get(&g.mul(h)));
                }
            }
        }
    }

    #[test]
    fn irreducible_models_have_the_right_character() {
        for host in [sp("1 2 3 4"), sp("1 3|2 4"), sp("1 2 3|4"), sp("1 2 3 4 5")] {
            for label in crate::charring::irr_labels(&host) {
                let rep = irreducible_model::<Q>(&host, &label, &|l| Ok(Arc::new(SymmetricModel::build(l)?))).unwrap();
                let chi = VirtualCharacter::<i64>::irreducible(&host, label.clone()).unwrap();
                assert_eq!(rep.character().unwrap(), chi, "{label}");
            }
        }
    }

    #[test]
    fn direct_sums_add_characters() {
        let host = sp("1 2|3");
        let a = Arc::new(MatrixRep::<Q>::permutation_model(&host, &SetPartition::minimal(3)).unwrap());
        let b = Arc::new(MatrixRep::<Q>::permutation_model(&host, &host).unwrap());
        let sum = MatrixRep::direct_sum(&host, &[a.clone(), b.clone()]);
        assert_eq!(sum.dim(), 3);
        assert_eq!(sum.character().unwrap(), a.character().unwrap().add(&b.character().unwrap()).unwrap());
    }
}
