//! The universal class-2 group `E(n, q) = F / F^(3)` and its quotients.
//!
//! Normal form: `x_1^{a_1} ... x_n^{a_n} * prod_{i<j} [x_j, x_i]^{c_ij}` with
//! `a_i` in `Z/q^2` and `c_ij` in `Z/q`, where `[a, b] = a^-1 b^-1 a b`. The
//! commutators are central, so collecting `x_j^b x_i^e = x_i^e x_j^b [x_j, x_i]^{be}`
//! gives
//!
//! ```text
//! (a, c) * (a', c') = (a + a', c + c' + (a_j a'_i)_{i<j})
//! ```
//!
//! Every relation that holds in `F / F^(3)` holds here: `x_i^{q^2} = 1`,
//! `[x_i, x_j]^q = 1`, commutators central, hence `[x_i^q, x_j] = 1`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::arith::{rem, SeriesParams};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};

use super::table::FiniteGroupTable;

/// Default bound on group orders handled explicitly.
pub const DEFAULT_ORDER_BOUND: u64 = 512;

/// An element of `E(n, q)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassTwoElement {
    /// Generator exponents in `Z/q^2`.
    pub a: Vec<u64>,
    /// Exponents of `[x_j, x_i]`, `i < j`, in `Z/q`, ordered by `(i, j)`.
    pub c: Vec<u64>,
}

/// Index of the pair `i < j` in the commutator coordinates.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Arithmetic in `E(n, q)`, independent of any order bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Collector {
    pub n: usize,
    pub params: SeriesParams,
}

impl Collector {
    pub fn new(n: usize, params: SeriesParams) -> Self {
        Self { n, params }
    }

    pub fn pairs(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    fn q2(&self) -> u64 {
        self.params.q * self.params.q
    }

    pub fn identity(&self) -> ClassTwoElement {
        ClassTwoElement {
            a: vec![0; self.n],
            c: vec![0; self.pairs()],
        }
    }

    pub fn generator(&self, i: usize) -> ClassTwoElement {
        let mut e = self.identity();
        e.a[i] = 1;
        e
    }

    /// `[x_j, x_i]` for `i < j`.
    pub fn basic_commutator(&self, i: usize, j: usize) -> ClassTwoElement {
        let mut e = self.identity();
        e.c[pair_index(self.n, i, j)] = 1 % self.params.q;
        e
    }

    pub fn check(&self, u: &ClassTwoElement) -> Result<()> {
        if u.a.len() != self.n || u.c.len() != self.pairs() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} + {} coordinates, group needs {} + {}",
                u.a.len(),
                u.c.len(),
                self.n,
                self.pairs()
            )));
        }
        Ok(())
    }

    /// Normal form of `u * v`.
    pub fn collect(&self, u: &ClassTwoElement, v: &ClassTwoElement) -> Result<ClassTwoElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &ClassTwoElement, v: &ClassTwoElement) -> ClassTwoElement {
        let (q, q2, n) = (self.params.q, self.q2(), self.n);
        let a = u.a.iter().zip(&v.a).map(|(x, y)| (x + y) % q2).collect();
        let mut c: Vec<u64> = u.c.iter().zip(&v.c).map(|(x, y)| (x + y) % q).collect();
        let mut k = 0;
        for i in 0..n {
            let vi = v.a[i] % q;
            for j in i + 1..n {
                c[k] = (c[k] + (u.a[j] % q) * vi) % q;
                k += 1;
            }
        }
        ClassTwoElement { a, c }
    }

    pub fn inverse(&self, u: &ClassTwoElement) -> ClassTwoElement {
        let (q, q2, n) = (self.params.q, self.q2(), self.n);
        let a = u.a.iter().map(|&x| (q2 - x) % q2).collect();
        let mut c = vec![0; self.pairs()];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                c[k] = ((q - u.c[k]) + (u.a[i] % q) * (u.a[j] % q)) % q;
                k += 1;
            }
        }
        ClassTwoElement { a, c }
    }

    pub fn pow(&self, u: &ClassTwoElement, k: i128) -> ClassTwoElement {
        // every element has order dividing q^2
        let mut e = rem(k, self.q2());
        let mut base = u.clone();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn commutator(&self, u: &ClassTwoElement, v: &ClassTwoElement) -> ClassTwoElement {
        let x = self.mul(&self.inverse(u), &self.inverse(v));
        self.mul(&self.mul(&x, u), v)
    }

    pub fn is_identity(&self, u: &ClassTwoElement) -> bool {
        u.a.iter().all(|&x| x == 0) && u.c.iter().all(|&x| x == 0)
    }

    /// Image of `w` under `x_i -> images[i]`.
    pub fn evaluate_word(&self, w: &Word, images: &[ClassTwoElement]) -> Result<ClassTwoElement> {
        for img in images {
            self.check(img)?;
        }
        let mut acc = self.identity();
        for &(g, e) in w.letters() {
            let img = images.get(g).ok_or(Error::IndexOutOfRange {
                index: g,
                len: images.len(),
            })?;
            acc = self.mul(&acc, &self.pow(img, e as i128));
        }
        Ok(acc)
    }

    /// Evaluate with `x_i -> x_i`.
    pub fn evaluate_on_generators(&self, w: &Word) -> Result<ClassTwoElement> {
        let gens: Vec<_> = (0..self.n).map(|i| self.generator(i)).collect();
        self.evaluate_word(w, &gens)
    }

    /// `|E(n, q)| = q^(2n + n(n-1)/2)`, `None` on overflow.
    pub fn universal_order(&self) -> Option<u128> {
        let e = 2 * self.n + self.pairs();
        (self.params.q as u128).checked_pow(u32::try_from(e).ok()?)
    }

    /// Dense index of an element in `0..|E|`.
    fn encode(&self, u: &ClassTwoElement) -> usize {
        let (q, q2) = (self.params.q as usize, self.q2() as usize);
        let mut x = 0usize;
        for &c in u.c.iter().rev() {
            x = x * q + c as usize;
        }
        for &a in u.a.iter().rev() {
            x = x * q2 + a as usize;
        }
        x
    }

    fn decode(&self, mut x: usize) -> ClassTwoElement {
        let (q, q2) = (self.params.q as usize, self.q2() as usize);
        let mut e = self.identity();
        for a in e.a.iter_mut() {
            *a = (x % q2) as u64;
            x /= q2;
        }
        for c in e.c.iter_mut() {
            *c = (x % q) as u64;
            x /= q;
        }
        e
    }
}

/// A quotient `E(n, q) / N` by a normal subgroup `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTwoGroup {
    pub params: SeriesParams,
    pub n: usize,
    /// Generators of `N`.
    pub kernel_basis: Vec<ClassTwoElement>,
    pub order_bound: u64,
}

impl ClassTwoGroup {
    pub fn collector(&self) -> Collector {
        Collector::new(self.n, self.params)
    }

    /// Elements of `N`, by breadth-first closure under products.
    pub fn kernel_elements(&self) -> HashSet<ClassTwoElement> {
        let col = self.collector();
        let mut seen: HashSet<ClassTwoElement> = HashSet::new();
        let id = col.identity();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in &self.kernel_basis {
                let y = col.mul(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    pub fn universal_order(&self) -> u128 {
        self.collector().universal_order().expect("checked at construction")
    }

    /// `|E(n, q)| / |N|`.
    pub fn order(&self) -> u128 {
        self.universal_order() / self.kernel_elements().len() as u128
    }
}

/// `E(n, q)` with trivial kernel. Fails if its order exceeds `order_bound`.
pub fn universal_class2(n: usize, params: SeriesParams, order_bound: u64) -> Result<ClassTwoGroup> {
    let col = Collector::new(n, params);
    match col.universal_order() {
        Some(o) if o <= order_bound as u128 => Ok(ClassTwoGroup {
            params,
            n,
            kernel_basis: Vec::new(),
            order_bound,
        }),
        Some(o) => Err(Error::SizeOverflow {
            order: o.to_string(),
            bound: order_bound,
        }),
        None => Err(Error::SizeOverflow {
            order: format!("{}^{}", params.q, 2 * n + col.pairs()),
            bound: order_bound,
        }),
    }
}

/// `G^[3] = E(n, q) / N` where `N` is the normal closure of the relator
/// images. In class 2, `r^x = r [r, x]` with `[r, x]` central, so `N` is
/// generated as a subgroup by the `r` and the `[r, x_i]`.
pub fn third_quotient(pres: &Presentation, params: SeriesParams, order_bound: u64) -> Result<ClassTwoGroup> {
    pres.validate()?;
    let mut g = universal_class2(pres.rank(), params, order_bound)?;
    let col = g.collector();
    let mut basis: Vec<ClassTwoElement> = Vec::new();
    for r in &pres.relators {
        let img = col.evaluate_on_generators(r)?;
        basis.push(img.clone());
        for i in 0..col.n {
            basis.push(col.commutator(&img, &col.generator(i)));
        }
    }
    basis.retain(|e| !col.is_identity(e));
    basis.sort();
    basis.dedup();
    g.kernel_basis = basis;
    Ok(g)
}

/// An explicit table of `E(n, q) / N` together with the coset map.
#[derive(Clone, Debug)]
pub struct QuotientModel {
    pub group: ClassTwoGroup,
    pub table: FiniteGroupTable,
    /// Lexicographically least representative of each table element.
    pub reps: Vec<ClassTwoElement>,
    coset_of: Vec<u32>,
}

impl QuotientModel {
    pub fn new(group: ClassTwoGroup) -> Result<Self> {
        let col = group.collector();
        let total = group.universal_order();
        if total > group.order_bound as u128 {
            return Err(Error::SizeOverflow {
                order: total.to_string(),
                bound: group.order_bound,
            });
        }
        let total = total as usize;
        let kernel: Vec<ClassTwoElement> = {
            let mut k: Vec<_> = group.kernel_elements().into_iter().collect();
            k.sort();
            k
        };
        let mut coset_of = vec![u32::MAX; total];
        let mut reps = Vec::new();
        for x in 0..total {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let g = col.decode(x);
            let id = reps.len() as u32;
            for nk in &kernel {
                coset_of[col.encode(&col.mul(&g, nk))] = id;
            }
            reps.push(g);
        }
        let m = reps.len();
        let mut mult = vec![0u32; m * m];
        for (i, a) in reps.iter().enumerate() {
            for (j, b) in reps.iter().enumerate() {
                mult[i * m + j] = coset_of[col.encode(&col.mul(a, b))];
            }
        }
        let gens = (0..col.n)
            .map(|i| coset_of[col.encode(&col.generator(i))] as usize)
            .collect();
        let table = FiniteGroupTable::new(m, mult, 0, gens)?;
        Ok(Self {
            group,
            table,
            reps,
            coset_of,
        })
    }

    /// Table index of the coset of `u`.
    pub fn locate(&self, u: &ClassTwoElement) -> usize {
        let col = self.group.collector();
        self.coset_of[col.encode(u)] as usize
    }

    pub fn in_kernel(&self, u: &ClassTwoElement) -> bool {
        self.locate(u) == self.table.identity()
    }
}

/// Enumerate coset representatives of `g` and return its table.
pub fn to_table(g: &ClassTwoGroup) -> Result<FiniteGroupTable> {
    Ok(QuotientModel::new(g.clone())?.table)
}

/// Summary record of a computed quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub order: u64,
    pub exponent: u64,
    pub class: Option<u32>,
    pub abelian_invariants: Vec<u64>,
    pub generators: Vec<String>,
    pub kernel_basis: Vec<ClassTwoElement>,
}

impl GroupRecord {
    pub fn from_table(table: &FiniteGroupTable, generators: &[String], kernel_basis: Vec<ClassTwoElement>) -> Self {
        Self {
            order: table.order() as u64,
            exponent: table.exponent(),
            class: table.nilpotency_class(),
            abelian_invariants: table.abelian_invariants(),
            generators: generators.to_vec(),
            kernel_basis,
        }
    }
}

/// Map each element of `E(n1, q)` to `E(n2, q)` under `x_i -> images[i]`.
/// Any such assignment extends to a homomorphism because `E(n2, q)` has
/// trivial third series term.
pub fn extend_to_homomorphism(
    source: &Collector,
    target: &Collector,
    images: &[ClassTwoElement],
    u: &ClassTwoElement,
) -> ClassTwoElement {
    let mut acc = target.identity();
    for (i, &a) in u.a.iter().enumerate() {
        acc = target.mul(&acc, &target.pow(&images[i], a as i128));
    }
    let mut k = 0;
    for i in 0..source.n {
        for j in i + 1..source.n {
            let comm = target.commutator(&images[j], &images[i]);
            acc = target.mul(&acc, &target.pow(&comm, u.c[k] as i128));
            k += 1;
        }
    }
    acc
}
