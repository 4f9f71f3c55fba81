use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kclasses::{basis, BasisIndex, KClass};
use crate::partitions::{IntegerPartition, RefinementOrbitLabel, SetPartition};
use crate::permgroup::Permutation;

use super::{dimension, multiply};

/// Largest `n` for which tables are built over all set partitions.
pub const MAX_FULL_N: usize = 4;
/// Largest `n` for the Morita-reduced tables.
pub const MAX_REDUCED_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: usize,
    pub right: usize,
    /// `(basis id, coefficient)`, sorted by id.
    pub coords: Vec<(usize, i64)>,
}

/// Multiplication table of `R_[n]` (or of `R_n` when reduced) in the ℤ-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub n: usize,
    pub reduced: bool,
    pub idempotents: Vec<SetPartition>,
    /// All basis elements; ids are positions in this list.
    pub basis: Vec<BasisIndex>,
    /// One entry per composable pair, sorted by `(left, right)`.
    pub products: Vec<ProductEntry>,
}

impl StructureConstants {
    pub fn id_of(&self, idx: &BasisIndex) -> Option<usize> {
        self.basis.iter().position(|b| b == idx)
    }

    pub fn product(&self, left: usize, right: usize) -> Option<&ProductEntry> {
        self.products.binary_search_by(|p| (p.left, p.right).cmp(&(left, right))).ok().map(|i| &self.products[i])
    }
}

/// The idempotent set: all set partitions, or one canonical section per
/// integer partition.
pub fn idempotents(n: usize, reduced: bool) -> Vec<SetPartition> {
    if reduced {
        IntegerPartition::all(n).iter().map(IntegerPartition::canonical_section).collect()
    } else {
        SetPartition::all(n)
    }
}

/// Multiplies every composable pair of basis elements. Cells are computed in
/// parallel and merged in a fixed order.
pub fn structure_constants(n: usize, reduced: bool) -> Result<StructureConstants> {
    let bound = if reduced { MAX_REDUCED_N } else { MAX_FULL_N };
    if n > bound {
        return Err(Error::SizeMismatch { expected: bound, found: n });
    }
    let idem = idempotents(n, reduced);
    let k = idem.len();
    let mut blocks: Vec<Vec<BasisIndex>> = Vec::with_capacity(k * k);
    for t in &idem {
        for s in &idem {
            blocks.push(basis(t, s)?);
        }
    }
    let mut offsets = Vec::with_capacity(k * k);
    let mut all = Vec::new();
    for b in &blocks {
        offsets.push(all.len());
        all.extend(b.iter().cloned());
    }
    let ids: HashMap<&BasisIndex, usize> = all.iter().enumerate().map(|(i, b)| (b, i)).collect();

    let cells: Vec<(usize, usize, usize)> =
        (0..k).flat_map(|a| (0..k).flat_map(move |b| (0..k).map(move |c| (a, b, c)))).collect();
    let elements: Vec<KClass<i64>> = all.iter().map(KClass::basis_element).collect::<Result<_>>()?;
    let computed: Vec<Vec<ProductEntry>> = cells
        .par_iter()
        .map(|&(a, b, c)| -> Result<Vec<ProductEntry>> {
            let (left_cell, right_cell) = (a * k + b, b * k + c);
            let mut out = Vec::new();
            for i in 0..blocks[left_cell].len() {
                for j in 0..blocks[right_cell].len() {
                    let (li, rj) = (offsets[left_cell] + i, offsets[right_cell] + j);
                    let prod = multiply(&elements[li], &elements[rj])?;
                    let mut coords: Vec<(usize, i64)> = prod.to_basis_coords().into_iter().map(|(idx, c)| (ids[&idx], c)).collect();
                    coords.sort_unstable();
                    out.push(ProductEntry { left: li, right: rj, coords });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut products: Vec<ProductEntry> = computed.into_iter().flatten().collect();
    products.sort_by_key(|p| (p.left, p.right));
    Ok(StructureConstants { n, reduced, idempotents: idem, basis: all, products })
}

/// One basis element in the exported document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub id: usize,
    pub rep: Permutation,
    pub label: RefinementOrbitLabel,
}

/// A named generator with its basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub name: String,
    pub target: SetPartition,
    pub source: SetPartition,
    pub coords: Vec<(usize, i64)>,
}

/// The exported presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub n: usize,
    pub reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub modulus: Option<i64>,
    pub idempotents: Vec<SetPartition>,
    /// `dims[i][j] = dim _{e_i}R_{e_j}`.
    pub dims: Vec<Vec<u64>>,
    pub generators: Vec<GeneratorRecord>,
    /// Keyed by `"target <- source"`.
    pub basis: BTreeMap<String, Vec<BasisRecord>>,
    pub products: Vec<ProductEntry>,
}

impl Presentation {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Builds the exported presentation; with `modulus = Some(p)` every
/// coefficient is reduced into `[0, p)` and zeros are dropped.
pub fn export_presentation(n: usize, reduced: bool, modulus: Option<i64>) -> Result<Presentation> {
    if let Some(p) = modulus {
        if p < 2 {
            return Err(Error::Parse(format!("modulus {p} must be at least 2")));
        }
    }
    let table = structure_constants(n, reduced)?;
    let reduce = |coords: Vec<(usize, i64)>| -> Vec<(usize, i64)> {
        match modulus {
            None => coords,
            Some(p) => coords.into_iter().map(|(i, c)| (i, c.rem_euclid(p))).filter(|(_, c)| *c != 0).collect(),
        }
    };
    let ids: HashMap<&BasisIndex, usize> = table.basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let coords_of = |a: &KClass<i64>| -> Vec<(usize, i64)> {
        let mut v: Vec<(usize, i64)> = a.to_basis_coords().into_iter().map(|(idx, c)| (ids[&idx], c)).collect();
        v.sort_unstable();
        reduce(v)
    };

    let mut generators = Vec::new();
    for t in &table.idempotents {
        for s in &table.idempotents {
            if t != s && t.comparable(s)? {
                let g = KClass::gen_one(t, s)?;
                generators.push(GeneratorRecord { name: format!("1[{t} <- {s}]"), target: t.clone(), source: s.clone(), coords: coords_of(&g) });
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        let w = Permutation::transposition(n, i, i + 1);
        for s in &table.idempotents {
            let t = s.act(&w)?;
            if table.idempotents.contains(&t) && !w.in_young(s) {
                let g = KClass::gen_perm(&w, s)?;
                generators.push(GeneratorRecord { name: format!("({} {})*[{s}]", i + 1, i + 2), target: t, source: s.clone(), coords: coords_of(&g) });
            }
        }
    }

    let mut basis_map: BTreeMap<String, Vec<BasisRecord>> = BTreeMap::new();
    for (id, b) in table.basis.iter().enumerate() {
        basis_map
            .entry(format!("{} <- {}", b.target, b.source))
            .or_default()
            .push(BasisRecord { id, rep: b.rep.clone(), label: b.label.clone() });
    }
    let dims = table
        .idempotents
        .iter()
        .map(|t| table.idempotents.iter().map(|s| dimension(t, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let products = table
        .products
        .into_iter()
        .map(|p| ProductEntry { left: p.left, right: p.right, coords: reduce(p.coords) })
        .collect();
    Ok(Presentation { n, reduced, modulus, idempotents: table.idempotents, dims, generators, basis: basis_map, products })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_is_one_by_one() {
        let p = export_presentation(1, false, None).unwrap();
        assert_eq!(p.idempotents.len(), 1);
        assert_eq!(p.products, vec![ProductEntry { left: 0, right: 0, coords: vec![(0, 1)] }]);
        let q = export_presentation(0, true, None).unwrap();
        assert_eq!(q.products.len(), 1);
    }

    #[test]
    fn n3_reduced_shape() {
        let p = export_presentation(3, true, None).unwrap();
        assert_eq!(p.idempotents.len(), 3);
        let text = p.to_json();
        assert_eq!(Presentation::from_json(&text).unwrap(), p);
        assert_eq!(export_presentation(3, true, None).unwrap().to_json(), text);
        for (i, t) in p.idempotents.iter().enumerate() {
            for (j, s) in p.idempotents.iter().enumerate() {
                let key = format!("{t} <- {s}");
                assert_eq!(p.basis[&key].len() as u64, p.dims[i][j]);
            }
        }
        // (1³) comes last in the integer-partition order.
        assert_eq!(p.dims[2][2], 6);
    }

    #[test]
    fn idempotent_products_are_unit_vectors() {
        let table = structure_constants(3, false).unwrap();
        for (i, b) in table.basis.iter().enumerate() {
            let e_t = KClass::<i64>::idempotent(&b.target).to_basis_coords();
            let e_id = table.id_of(e_t.keys().next().unwrap()).unwrap();
            assert_eq!(table.product(e_id, i).unwrap().coords, vec![(i, 1)]);
            let e_s = KClass::<i64>::idempotent(&b.source).to_basis_coords();
            let e_id = table.id_of(e_s.keys().next().unwrap()).unwrap();
            assert_eq!(table.product(i, e_id).unwrap().coords, vec![(i, 1)]);
        }
    }

    #[test]
    fn modular_view_reduces_coefficients() {
        let p = export_presentation(3, true, Some(2)).unwrap();
        assert!(p.products.iter().all(|e| e.coords.iter().all(|&(_, c)| c == 1)));
        assert!(export_presentation(3, true, Some(1)).is_err());
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(structure_constants(MAX_FULL_N + 1, false).is_err());
        assert!(structure_constants(MAX_REDUCED_N + 1, true).is_err());
    }
}
