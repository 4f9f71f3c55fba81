//! Concrete bi-equivariant sheaves on `S_n` and their convolution.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::SetPartition;
use crate::permgroup::{enumerate_young, Permutation};
use crate::scalar::{Field, Ring};

use super::matrix::SparseMatrix;
use super::models::MatrixRep;
use super::perm_key;

/// A sheaf in `hom(source, target)`: a space `F_x` for every `x ∈ S_n`, a
/// left action of `S_target` (`F_x → F_{gx}`) and a commuting right action
/// of `S_source` (`F_x → F_{xh}`).
pub trait ConcreteSheaf<F: Field>: Send + Sync {
    fn target(&self) -> &SetPartition;
    fn source(&self) -> &SetPartition;
    fn dim(&self, x: &Permutation) -> usize;
    fn left(&self, g: &Permutation, x: &Permutation) -> Arc<SparseMatrix<F>>;
    fn right(&self, h: &Permutation, x: &Permutation) -> Arc<SparseMatrix<F>>;

    /// Trace of `z ∈ S_{ν∧wλ}` on `F_w` acting by `v ↦ z · v · (w⁻¹z⁻¹w)`.
    fn twisted_trace(&self, z: &Permutation, w: &Permutation) -> F {
        let h = w.inverse().mul(&z.inverse()).mul(w);
        let moved = z.inverse().mul(w);
        self.left(z, &moved).trace_of_product(&self.right(&h, w))
    }
}

fn shared_identity<F: Field>(d: usize) -> Arc<SparseMatrix<F>> {
    Arc::new(SparseMatrix::identity(d))
}

/// Rank one on a union of cosets with identity actions: the sheaves of
/// `_σ1_τ` and `w_*`.
pub struct ConstantSheaf<F: Field> {
    target: SetPartition,
    source: SetPartition,
    support: HashSet<u64>,
    one: Arc<SparseMatrix<F>>,
    empty: Arc<SparseMatrix<F>>,
}

impl<F: Field> ConstantSheaf<F> {
    pub fn new(target: &SetPartition, source: &SetPartition, support: impl IntoIterator<Item = Permutation>) -> Self {
        ConstantSheaf {
            target: target.clone(),
            source: source.clone(),
            support: support.into_iter().map(|p| perm_key(&p)).collect(),
            one: shared_identity(1),
            empty: shared_identity(0),
        }
    }
}

impl<F: Field> ConcreteSheaf<F> for ConstantSheaf<F> {
    fn target(&self) -> &SetPartition {
        &self.target
    }

    fn source(&self) -> &SetPartition {
        &self.source
    }

    fn dim(&self, x: &Permutation) -> usize {
        usize::from(self.support.contains(&perm_key(x)))
    }

    fn left(&self, _g: &Permutation, x: &Permutation) -> Arc<SparseMatrix<F>> {
        Arc::clone(if self.dim(x) == 1 { &self.one } else { &self.empty })
    }

    fn right(&self, _h: &Permutation, x: &Permutation) -> Arc<SparseMatrix<F>> {
        Arc::clone(if self.dim(x) == 1 { &self.one } else { &self.empty })
    }
}

/// `⟨V⟩`: `V` on every point of `S_κ`, acted on from the left by `ρ_V`.
pub struct RepSheaf<F: Field> {
    host: SetPartition,
    model: Arc<MatrixRep<F>>,
    identity: Arc<SparseMatrix<F>>,
    empty: Arc<SparseMatrix<F>>,
}

impl<F: Field> RepSheaf<F> {
    pub fn new(model: Arc<MatrixRep<F>>) -> Self {
        RepSheaf { host: model.host().clone(), identity: shared_identity(model.dim()), empty: shared_identity(0), model }
    }
}

impl<F: Field> ConcreteSheaf<F> for RepSheaf<F> {
    fn target(&self) -> &SetPartition {
        &self.host
    }

    fn source(&self) -> &SetPartition {
        &self.host
    }

    fn dim(&self, x: &Permutation) -> usize {
        if x.in_young(&self.host) {
            self.model.dim()
        } else {
            0
        }
    }

    fn left(&self, g: &Permutation, x: &Permutation) -> Arc<SparseMatrix<F>> {
        if self.dim(x) == 0 {
            return Arc::clone(&self.empty);
        }
        self.model.get(g)
    }

    fn right(&self, _h: &Permutation, x: &Permutation) -> Arc<SparseMatrix<F>> {
        Arc::clone(if self.dim(x) == 0 { &self.empty } else { &self.identity })
    }
}

/// Right cosets `S_μ z` of `S_μ` in `S_n`, with `z = t · rep` factorizations.
pub struct RightCosets {
    pub reps: Vec<Permutation>,
    of: HashMap<u64, (usize, Permutation)>,
}

impl RightCosets {
    fn build(mu: &SetPartition) -> Self {
        let group = enumerate_young(mu);
        let mut reps = Vec::new();
        let mut of = HashMap::new();
        for z in Permutation::all(mu.n()) {
            if of.contains_key(&perm_key(&z)) {
                continue;
            }
            for t in &group {
                of.insert(perm_key(&t.mul(&z)), (reps.len(), t.clone()));
            }
            reps.push(z);
        }
        RightCosets { reps, of }
    }

    /// `(i, t)` with `z = t · reps[i]`.
    pub fn locate(&self, z: &Permutation) -> (usize, &Permutation) {
        let (i, t) = &self.of[&perm_key(z)];
        (*i, t)
    }
}

pub fn right_cosets(mu: &SetPartition) -> Arc<RightCosets> {
    static CACHE: OnceLock<RwLock<HashMap<SetPartition, Arc<RightCosets>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.read().expect("coset cache poisoned").get(mu) {
        return Arc::clone(c);
    }
    let built = Arc::new(RightCosets::build(mu));
    Arc::clone(cache.write().expect("coset cache poisoned").entry(mu.clone()).or_insert(built))
}

#[derive(Debug)]
struct Block {
    coset: usize,
    y: Permutation,
    offset: usize,
    db: usize,
}

#[derive(Debug)]
struct Layout {
    blocks: Vec<Block>,
    total: usize,
}

impl Layout {
    fn offset_of(&self, coset: usize) -> usize {
        self.blocks.iter().find(|b| b.coset == coset).expect("block present").offset
    }
}

type Cache<F> = RwLock<HashMap<(u64, u64), Arc<SparseMatrix<F>>>>;

/// `(A∘B)_x = [⊕_{yz=x} A_y ⊗ B_z]^{S_μ}`, with `t ∈ S_μ` acting by
/// `(a ⊗ b) ↦ (a·t⁻¹) ⊗ (t·b)`.
///
/// The action is free on pairs `(y, z)`, so an invariant vector is fixed by
/// its component at one pair per orbit; orbits are indexed by the right
/// cosets `S_μ z₀`, with `y₀ = x z₀⁻¹`. All matrices are written in the
/// basis `⊕_{z₀} A_{y₀} ⊗ B_{z₀}` of those components.
pub struct Convolution<F: Field> {
    a: Arc<dyn ConcreteSheaf<F>>,
    b: Arc<dyn ConcreteSheaf<F>>,
    cosets: Arc<RightCosets>,
    layouts: RwLock<HashMap<u64, Arc<Layout>>>,
    lefts: Cache<F>,
    rights: Cache<F>,
}

impl<F: Field> Convolution<F> {
    pub fn new(a: Arc<dyn ConcreteSheaf<F>>, b: Arc<dyn ConcreteSheaf<F>>) -> crate::Result<Self> {
        if a.source() != b.target() {
            return Err(crate::Error::GradingMismatch(format!("{} <- {} after {} <- {}", a.target(), a.source(), b.target(), b.source())));
        }
        let cosets = right_cosets(a.source());
        Ok(Convolution { a, b, cosets, layouts: Default::default(), lefts: Default::default(), rights: Default::default() })
    }

    fn layout(&self, x: &Permutation) -> Arc<Layout> {
        let key = perm_key(x);
        if let Some(l) = self.layouts.read().expect("layout cache poisoned").get(&key) {
            return Arc::clone(l);
        }
        let mut blocks = Vec::new();
        let mut total = 0;
        for (i, z) in self.cosets.reps.iter().enumerate() {
            let db = self.b.dim(z);
            if db == 0 {
                continue;
            }
            let y = x.mul(&z.inverse());
            let da = self.a.dim(&y);
            if da == 0 {
                continue;
            }
            blocks.push(Block { coset: i, y, offset: total, db });
            total += da * db;
        }
        let l = Arc::new(Layout { blocks, total });
        Arc::clone(self.layouts.write().expect("layout cache poisoned").entry(key).or_insert(l))
    }

    fn cached(cache: &Cache<F>, key: (u64, u64), build: impl FnOnce() -> SparseMatrix<F>) -> Arc<SparseMatrix<F>> {
        if let Some(m) = cache.read().expect("matrix cache poisoned").get(&key) {
            return Arc::clone(m);
        }
        let m = Arc::new(build());
        Arc::clone(cache.write().expect("matrix cache poisoned").entry(key).or_insert(m))
    }

    /// The full space `⊕_{yz=x} A_y ⊗ B_z` (one summand per `z ∈ S_n`) and
    /// the averaging projector onto its `S_μ`-invariants, densely.
    pub fn averaging_projector(&self, x: &Permutation) -> Vec<Vec<F>> {
        let all = Permutation::all(x.n());
        let mut offsets = HashMap::new();
        let mut total = 0;
        for z in &all {
            let d = self.a.dim(&x.mul(&z.inverse())) * self.b.dim(z);
            offsets.insert(perm_key(z), total);
            total += d;
        }
        let group = enumerate_young(self.a.source());
        let mut sum = SparseMatrix::<F>::zeros(total, total);
        for t in &group {
            let mut act = SparseMatrix::zeros(total, total);
            for z in &all {
                let y = x.mul(&z.inverse());
                if self.a.dim(&y) * self.b.dim(z) == 0 {
                    continue;
                }
                let tz = t.mul(z);
                let block = self.a.right(&t.inverse(), &y).kron(&self.b.left(t, z));
                act.place(offsets[&perm_key(&tz)], offsets[&perm_key(z)], &block);
            }
            sum = sum.add(&act);
        }
        let scale = Field::div(&F::one(), &F::from_i64(group.len() as i64));
        sum.scale(&scale).to_dense()
    }
}

impl<F: Field> ConcreteSheaf<F> for Convolution<F> {
    fn target(&self) -> &SetPartition {
        self.a.target()
    }

    fn source(&self) -> &SetPartition {
        self.b.source()
    }

    fn dim(&self, x: &Permutation) -> usize {
        self.layout(x).total
    }

    fn left(&self, g: &Permutation, x: &Permutation) -> Arc<SparseMatrix<F>> {
        Self::cached(&self.lefts, (perm_key(g), perm_key(x)), || {
            let layout = self.layout(x);
            let mut out = SparseMatrix::zeros(layout.total, layout.total);
            for blk in &layout.blocks {
                let m = self.a.left(g, &blk.y).kron(&SparseMatrix::identity(blk.db));
                out.place(blk.offset, blk.offset, &m);
            }
            out
        })
    }

    fn right(&self, h: &Permutation, x: &Permutation) -> Arc<SparseMatrix<F>> {
        Self::cached(&self.rights, (perm_key(h), perm_key(x)), || {
            let layout = self.layout(x);
            let moved = self.layout(&x.mul(h));
            let mut out = SparseMatrix::zeros(moved.total, layout.total);
            for blk in &layout.blocks {
                let z = &self.cosets.reps[blk.coset];
                let zh = z.mul(h);
                let (z1, t) = self.cosets.locate(&zh);
                let ra = self.a.right(t, &blk.y);
                let mb = self.b.left(&t.inverse(), &zh).mul(&self.b.right(h, z));
                out.place(moved.offset_of(z1), blk.offset, &ra.kron(&mb));
            }
            out
        })
    }

    fn twisted_trace(&self, z: &Permutation, w: &Permutation) -> F {
        let h = w.inverse().mul(&z.inverse()).mul(w);
        let layout = self.layout(w);
        let mut acc = F::zero();
        for blk in &layout.blocks {
            let rep = &self.cosets.reps[blk.coset];
            let zh = rep.mul(&h);
            let (z1, t) = self.cosets.locate(&zh);
            if z1 != blk.coset {
                continue;
            }
            let ta = self.a.left(z, &blk.y.mul(t)).trace_of_product(&self.a.right(t, &blk.y));
            if ta.is_zero() {
                continue;
            }
            let tb = self.b.left(&t.inverse(), &zh).trace_of_product(&self.b.right(&h, rep));
            acc.add_assign(&Ring::mul(&ta, &tb));
        }
        acc
    }
}
