//! Linear algebra over `Z/q`, `q = p^d`.
//!
//! `Z/q` is a local principal ideal ring, so every matrix can be brought to a
//! diagonal shape by picking a pivot of minimal `p`-adic valuation at each
//! step. Only the column transform `Q` (and its inverse) is tracked: row
//! operations preserve both the kernel `{x : A x = 0}` and the row span, which
//! are the two things callers ask for.

use crate::arith::Zq;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ColKind {
    Free,
    /// Column of `A Q` with a single entry of valuation `k`.
    Pivot(u32),
}

/// Result of column-reducing a matrix `A` (rows x `n_cols`) over `Z/q`:
/// `P A Q` has at most one nonzero entry per row and per column.
#[derive(Clone, Debug)]
pub struct ColumnReduction {
    ring: Zq,
    n_cols: usize,
    kinds: Vec<ColKind>,
    /// Columns of `Q`.
    q_cols: Vec<Vec<u32>>,
    /// Rows of `Q^{-1}`.
    q_inv_rows: Vec<Vec<u32>>,
}

impl ColumnReduction {
    pub fn new(ring: Zq, mut rows: Vec<Vec<u32>>, n_cols: usize) -> Self {
        let mut q_cols: Vec<Vec<u32>> = (0..n_cols).map(|c| unit_vec(n_cols, c)).collect();
        let mut q_inv_rows: Vec<Vec<u32>> = (0..n_cols).map(|c| unit_vec(n_cols, c)).collect();
        let mut kinds = vec![ColKind::Free; n_cols];
        let mut col_done = vec![false; n_cols];
        rows.retain(|r| r.iter().any(|&x| x != 0));
        for r in &rows {
            debug_assert_eq!(r.len(), n_cols);
        }
        let prime_field = ring.params.d == 1;

        while !rows.is_empty() {
            // Pivot of minimal valuation; any nonzero entry when q is prime.
            let mut best: Option<(usize, usize, u32)> = None;
            'scan: for (ri, row) in rows.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    if x == 0 || col_done[c] {
                        continue;
                    }
                    let v = if prime_field { 0 } else { ring.valuation(x) };
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((ri, c, v));
                        if v == 0 {
                            break 'scan;
                        }
                    }
                }
            }
            let Some((pr, pc, k)) = best else { break };
            let pivot_row = rows.swap_remove(pr);
            let x = pivot_row[pc];
            let pk = ring.p_pow(k);
            let u_inv = ring.inv(x / pk).expect("unit part is invertible");
            let support: Vec<usize> = (0..n_cols)
                .filter(|&c| pivot_row[c] != 0 && !col_done[c])
                .collect();

            // Row elimination: clear column `pc` in every remaining row.
            for row in rows.iter_mut() {
                let a = row[pc];
                if a == 0 {
                    continue;
                }
                let t = ring.mul(a / pk, u_inv);
                for &c in &support {
                    row[c] = ring.sub(row[c], ring.mul(t, pivot_row[c]));
                }
            }
            rows.retain(|r| r.iter().any(|&x| x != 0));

            // Column clearing: only the pivot row is affected in the matrix,
            // so it suffices to update the transforms.
            for &j in &support {
                if j == pc {
                    continue;
                }
                let t = ring.mul(pivot_row[j] / pk, u_inv);
                // col_j -= t * col_pc
                let (src, dst) = two_mut(&mut q_cols, pc, j);
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d = ring.sub(*d, ring.mul(t, *s));
                }
                // row_pc of Q^{-1} += t * row_j
                let (src, dst) = two_mut(&mut q_inv_rows, j, pc);
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d = ring.add(*d, ring.mul(t, *s));
                }
            }
            col_done[pc] = true;
            kinds[pc] = ColKind::Pivot(k);
        }

        Self {
            ring,
            n_cols,
            kinds,
            q_cols,
            q_inv_rows,
        }
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Number of pivots (rank of the row span over `Z/p` counts unit pivots only).
    pub fn pivot_count(&self) -> usize {
        self.kinds
            .iter()
            .filter(|k| matches!(k, ColKind::Pivot(_)))
            .count()
    }

    /// Generators of the kernel `{x : A x = 0}` with their additive orders.
    /// The generators are independent: the kernel is the direct sum of the
    /// cyclic groups they span.
    pub fn kernel(&self) -> Vec<(Vec<u32>, u32)> {
        let d = self.ring.params.d;
        let mut out = Vec::new();
        for (c, kind) in self.kinds.iter().enumerate() {
            match *kind {
                ColKind::Free => out.push((self.q_cols[c].clone(), self.ring.modulus())),
                ColKind::Pivot(0) => {}
                ColKind::Pivot(k) => {
                    let s = self.ring.p_pow(d - k);
                    let v = self.q_cols[c].iter().map(|&x| self.ring.mul(s, x)).collect();
                    out.push((v, self.ring.p_pow(k)));
                }
            }
        }
        out
    }

    /// Coefficients of a kernel element on the generators returned by
    /// [`kernel`](Self::kernel). The input must lie in the kernel.
    pub fn kernel_coords(&self, x: &[u32]) -> Vec<u32> {
        let d = self.ring.params.d;
        let mut out = Vec::new();
        for (c, kind) in self.kinds.iter().enumerate() {
            let y = dot(&self.ring, &self.q_inv_rows[c], x);
            match *kind {
                ColKind::Free => out.push(y),
                ColKind::Pivot(0) => {}
                ColKind::Pivot(k) => {
                    let s = self.ring.p_pow(d - k);
                    debug_assert_eq!(y % s, 0, "vector is not in the kernel");
                    out.push((y / s) % self.ring.p_pow(k));
                }
            }
        }
        out
    }

    /// The quotient of `(Z/q)^{n_cols}` by the row span of `A`.
    pub fn cokernel(&self) -> Cokernel {
        let mut cols = Vec::new();
        let mut orders = Vec::new();
        for (c, kind) in self.kinds.iter().enumerate() {
            match *kind {
                ColKind::Free => {
                    cols.push(c);
                    orders.push(self.ring.modulus());
                }
                ColKind::Pivot(0) => {}
                ColKind::Pivot(k) => {
                    cols.push(c);
                    orders.push(self.ring.p_pow(k));
                }
            }
        }
        Cokernel {
            ring: self.ring,
            coord_cols: cols.iter().map(|&c| self.q_cols[c].clone()).collect(),
            basis: cols.iter().map(|&c| self.q_inv_rows[c].clone()).collect(),
            orders,
        }
    }
}

/// A finitely generated `Z/q`-module presented as `(Z/q)^n / R`, with
/// a coordinate map onto its cyclic decomposition.
#[derive(Clone, Debug)]
pub struct Cokernel {
    ring: Zq,
    coord_cols: Vec<Vec<u32>>,
    basis: Vec<Vec<u32>>,
    orders: Vec<u32>,
}

impl Cokernel {
    /// Orders of the cyclic summands, in column order.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Coordinates of the class of `v` in the cyclic decomposition.
    pub fn coords(&self, v: &[u32]) -> Vec<u32> {
        self.coord_cols
            .iter()
            .zip(&self.orders)
            .map(|(col, &o)| dot(&self.ring, col, v) % o)
            .collect()
    }

    /// A representative in `(Z/q)^n` of the `i`-th cyclic generator.
    pub fn basis_rep(&self, i: usize) -> &[u32] {
        &self.basis[i]
    }

    /// Number of cyclic factors, i.e. `dim M / pM`.
    pub fn dimension(&self) -> usize {
        self.orders.len()
    }

    /// Number of elements, as a `u128` to survive large ranks.
    pub fn size(&self) -> u128 {
        self.orders.iter().map(|&o| o as u128).product()
    }
}

/// Presents `(Z/q)^n_gens / span(relations)`.
pub fn quotient_module(ring: Zq, n_gens: usize, relations: Vec<Vec<u32>>) -> Cokernel {
    ColumnReduction::new(ring, relations, n_gens).cokernel()
}

/// Some `x` with `A x = b`, if one exists.
pub fn solve(ring: Zq, rows: &[Vec<u32>], n_cols: usize, b: &[u32]) -> Option<Vec<u32>> {
    // A kernel vector of [A | -b] whose last entry is a unit; non-units form
    // an ideal, so one kernel generator must already have a unit there.
    let aug: Vec<Vec<u32>> = rows
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut r = r.clone();
            r.push(ring.neg(bi));
            r
        })
        .collect();
    let red = ColumnReduction::new(ring, aug, n_cols + 1);
    let (v, _) = red.kernel().into_iter().find(|(v, _)| ring.is_unit(v[n_cols]))?;
    let s = ring.inv(v[n_cols]).expect("unit");
    Some(v[..n_cols].iter().map(|&x| ring.mul(x, s)).collect())
}

/// Rows of the `Z/q` matrix whose kernel is the relation module of `gens`
/// inside `Z/o_1 + ... + Z/o_k`: coordinate `i` is scaled by `q / o_i`.
pub fn relation_rows(ring: &Zq, orders: &[u32], gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let q = ring.modulus();
    orders
        .iter()
        .enumerate()
        .map(|(i, &o)| gens.iter().map(|g| ring.mul(g[i] % o, q / o)).collect())
        .collect()
}

/// The submodule spanned by `gens` in `Z/o_1 + ... + Z/o_k`, presented as
/// `(Z/q)^{gens.len()}` modulo the relations among the generators.
pub fn span_module(ring: Zq, orders: &[u32], gens: &[Vec<u32>]) -> Cokernel {
    let rels = ColumnReduction::new(ring, relation_rows(&ring, orders, gens), gens.len()).kernel();
    quotient_module(ring, gens.len(), rels.into_iter().map(|(v, _)| v).collect())
}

pub fn dot(ring: &Zq, a: &[u32], b: &[u32]) -> u32 {
    let q = ring.modulus() as u64;
    let mut acc = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        acc = (acc + x as u64 * y as u64) % q;
    }
    acc as u32
}

fn unit_vec(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Borrow `v[a]` immutably and `v[b]` mutably.
fn two_mut<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}
