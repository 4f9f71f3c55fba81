//! Exact sparse matrices (column-compressed) and the few dense routines the
//! oracle needs: rank, column bases and inversion by row reduction.

use crate::scalar::{Field, Ring};

/// A `rows × cols` matrix stored column by column as `(row, value)` lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(u32, F)>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i as u32, F::one())]).collect() }
    }

    /// The matrix sending basis vector `j` to basis vector `image[j]`.
    pub fn permutation(image: &[usize]) -> Self {
        SparseMatrix { rows: image.len(), cols: image.len(), data: image.iter().map(|&i| vec![(i as u32, F::one())]).collect() }
    }

    pub fn from_dense(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut out = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.data[j].push((i as u32, v.clone()));
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols]; self.rows];
        for (j, col) in self.data.iter().enumerate() {
            for (i, v) in col {
                out[*i as usize][j] = v.clone();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[j].iter().find(|(r, _)| *r as usize == i).map(|(_, v)| v.clone()).unwrap_or_else(F::zero)
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, other.cols);
        let mut acc: Vec<F> = vec![F::zero(); self.rows];
        let mut touched: Vec<u32> = Vec::new();
        for (j, col) in other.data.iter().enumerate() {
            for (k, v) in col {
                for (i, a) in &self.data[*k as usize] {
                    let slot = &mut acc[*i as usize];
                    if slot.is_zero() {
                        touched.push(*i);
                    }
                    slot.add_assign(&Ring::mul(a, v));
                }
            }
            touched.sort_unstable();
            touched.dedup();
            for &i in &touched {
                let v = std::mem::replace(&mut acc[i as usize], F::zero());
                if !v.is_zero() {
                    out.data[j].push((i, v));
                }
            }
            touched.clear();
        }
        out
    }

    /// Kronecker product; row `(i, k)` sits at `i · other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for (ja, ca) in self.data.iter().enumerate() {
            for (jb, cb) in other.data.iter().enumerate() {
                let col = &mut out.data[ja * other.cols + jb];
                for (ia, va) in ca {
                    for (ib, vb) in cb {
                        col.push((*ia * other.rows as u32 + *ib, Ring::mul(va, vb)));
                    }
                }
                col.sort_unstable_by_key(|(i, _)| *i);
            }
        }
        out
    }

    pub fn trace(&self) -> F {
        (0..self.cols.min(self.rows)).fold(F::zero(), |acc, j| Ring::add(&acc, &self.get(j, j)))
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> F {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let mut acc = F::zero();
        for (j, col) in other.data.iter().enumerate() {
            for (k, v) in col {
                for (i, a) in &self.data[*k as usize] {
                    if *i as usize == j {
                        acc.add_assign(&Ring::mul(a, v));
                    }
                }
            }
        }
        acc
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn place(&mut self, row: usize, col: usize, block: &Self) {
        for (j, c) in block.data.iter().enumerate() {
            let dest = &mut self.data[col + j];
            dest.extend(c.iter().map(|(i, v)| (*i + row as u32, v.clone())));
            dest.sort_unstable_by_key(|(i, _)| *i);
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        if k.is_zero() {
            return out;
        }
        for (j, col) in self.data.iter().enumerate() {
            out.data[j] = col.iter().map(|(i, v)| (*i, Ring::mul(v, k))).collect();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut dense = self.to_dense();
        for (j, col) in other.data.iter().enumerate() {
            for (i, v) in col {
                dense[*i as usize][j].add_assign(v);
            }
        }
        let mut out = Self::from_dense(&dense);
        out.rows = self.rows;
        out.cols = self.cols;
        out
    }
}

/// Rank of a dense matrix.
pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    row_reduce(m.to_vec()).1.len()
}

/// Reduced row echelon form and pivot columns.
pub fn row_reduce<F: Field>(mut m: Vec<Vec<F>>) -> (Vec<Vec<F>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Field::div(&F::one(), &m[r][c]);
        for v in m[r].iter_mut() {
            *v = Ring::mul(v, &inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let sub = Ring::mul(&f, &m[r][k]);
                    m[i][k] = Ring::sub(&m[i][k], &sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (m, pivots)
}

/// Indices of a maximal independent set of columns, chosen greedily left to right.
pub fn column_basis<F: Field>(m: &[Vec<F>]) -> Vec<usize> {
    row_reduce(m.to_vec()).1
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert<F: Field>(m: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = m.len();
    let aug: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let (red, pivots) = row_reduce(aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return if n == 0 { Some(Vec::new()) } else { None };
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;
    type M = SparseMatrix<Q>;

    fn q(v: i64) -> Q {
        Q::from_integer(v)
    }

    fn dense(rows: &[&[i64]]) -> M {
        M::from_dense(&rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn product_and_trace() {
        let a = dense(&[&[1, 2], &[0, 3]]);
        let b = dense(&[&[4, 0], &[1, -1]]);
        assert_eq!(a.mul(&b), dense(&[&[6, -2], &[3, -3]]));
        assert_eq!(a.trace_of_product(&b), q(3));
        assert_eq!(a.mul(&b).trace(), q(3));
        assert_eq!(M::identity(2).mul(&a), a);
    }

    #[test]
    fn kron_layout() {
        let a = dense(&[&[1, 2], &[3, 4]]);
        let i = M::identity(2);
        let k = a.kron(&i);
        assert_eq!(k.get(2, 0), q(3));
        assert_eq!(k.get(3, 1), q(3));
        assert_eq!(k.get(1, 0), q(0));
        assert_eq!(a.kron(&a).trace(), q(25));
    }

    #[test]
    fn permutation_matrices_compose() {
        let p = M::permutation(&[1, 2, 0]);
        let p3 = p.mul(&p).mul(&p);
        assert_eq!(p3, M::identity(3));
        assert_eq!(p.trace(), q(0));
    }

    #[test]
    fn row_reduction() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]];
        assert_eq!(rank(&m), 2);
        assert_eq!(column_basis(&m), vec![0, 1]);
        let inv = invert(&[vec![q(2), q(1)], vec![q(1), q(1)]]).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(invert(&[vec![q(1), q(1)], vec![q(1), q(1)]]).is_none());
    }

    #[test]
    fn placement() {
        let mut m = M::zeros(3, 3);
        m.place(1, 1, &dense(&[&[5, 6], &[7, 8]]));
        assert_eq!(m.get(2, 1), q(7));
        assert_eq!(m.get(0, 0), q(0));
        assert_eq!(m.add(&M::identity(3)).get(1, 1), q(6));
        assert_eq!(m.scale(&q(2)).get(2, 2), q(16));
    }
}
