use std::collections::{BTreeMap, BTreeSet};

use crate::arith::{lcm, prime_factors};
use crate::error::{Error, Result};

/// An explicit finite group given by its multiplication table.
///
/// Elements are `0..order`. Tables built by this crate put the identity at
/// index 0, but any index is accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    mult: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    generators: Vec<usize>,
}

impl FiniteGroupTable {
    /// Build a table, checking identity and inverse laws and that the
    /// listed generators generate. Associativity is checked separately by
    /// [`is_associative`](Self::is_associative).
    pub fn new(order: usize, mult: Vec<u32>, identity: usize, generators: Vec<usize>) -> Result<Self> {
        if order == 0 || mult.len() != order * order || identity >= order {
            return Err(Error::Malformed("table shape".into()));
        }
        if mult.iter().any(|&x| x as usize >= order) || generators.iter().any(|&g| g >= order) {
            return Err(Error::Malformed("table entry out of range".into()));
        }
        for g in 0..order {
            if mult[identity * order + g] as usize != g || mult[g * order + identity] as usize != g {
                return Err(Error::Malformed("identity law fails".into()));
            }
        }
        let mut inverse = vec![u32::MAX; order];
        for g in 0..order {
            for h in 0..order {
                if mult[g * order + h] as usize == identity {
                    inverse[g] = h as u32;
                    break;
                }
            }
            let h = inverse[g] as usize;
            if h >= order || mult[h * order + g] as usize != identity {
                return Err(Error::Malformed("inverse law fails".into()));
            }
        }
        let t = Self {
            order,
            mult,
            identity,
            inverse,
            generators,
        };
        if t.generated_subgroup(&t.generators).len() != order {
            return Err(Error::Malformed("listed generators do not generate".into()));
        }
        Ok(t)
    }

    /// Table of `Z/d_1 x ... x Z/d_k` in mixed radix (first coordinate
    /// fastest), generated by the unit vectors.
    pub fn abelian(orders: &[u64]) -> Result<Self> {
        let order: u64 = orders.iter().product();
        let order = order as usize;
        let decode = |mut x: usize| -> Vec<u64> {
            orders
                .iter()
                .map(|&d| {
                    let v = x as u64 % d;
                    x /= d as usize;
                    v
                })
                .collect()
        };
        let encode = |v: &[u64]| -> usize {
            let mut x = 0usize;
            for (i, &d) in orders.iter().enumerate().rev() {
                x = x * d as usize + v[i] as usize;
            }
            x
        };
        let mut mult = vec![0u32; order * order];
        for i in 0..order {
            let a = decode(i);
            for j in 0..order {
                let b = decode(j);
                let s: Vec<u64> = a.iter().zip(&b).zip(orders).map(|((x, y), d)| (x + y) % d).collect();
                mult[i * order + j] = encode(&s) as u32;
            }
        }
        let gens = (0..orders.len())
            .map(|i| {
                let mut v = vec![0; orders.len()];
                v[i] = 1 % orders[i];
                encode(&v)
            })
            .collect();
        Self::new(order, mult, 0, gens)
    }

    /// Cyclic group `Z/n`.
    pub fn cyclic(n: u64) -> Self {
        Self::abelian(&[n]).expect("cyclic table is valid")
    }

    /// Direct product `self x other`, element `(g, h)` at `g + |G| h`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        let mut mult = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let g = self.mul(a % n1, b % n1);
                let h = other.mul(a / n1, b / n1);
                mult[a * n + b] = (g + n1 * h) as u32;
            }
        }
        let mut gens: Vec<usize> = self.generators.iter().map(|&g| g + n1 * other.identity).collect();
        gens.extend(other.generators.iter().map(|&h| self.identity + n1 * h));
        Self::new(n, mult, self.identity + n1 * other.identity, gens).expect("product is a group")
    }

    /// Same table with a different list of generators.
    pub fn with_generators(&self, generators: Vec<usize>) -> Result<Self> {
        if generators.iter().any(|&g| g >= self.order) {
            return Err(Error::Malformed("table entry out of range".into()));
        }
        if self.generated_subgroup(&generators).len() != self.order {
            return Err(Error::Malformed("listed generators do not generate".into()));
        }
        Ok(Self {
            generators,
            ..self.clone()
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Listed generators without repeats or the identity.
    pub fn effective_generators(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &g in &self.generators {
            if g != self.identity && !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let x = self.mul(self.inv(a), self.inv(b));
        self.mul(self.mul(x, a), b)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut k = 1u64;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.effective_generators();
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1, |e, a| lcm(e, self.element_order(a)))
    }

    pub fn center(&self) -> Vec<usize> {
        let gens = self.effective_generators();
        (0..self.order)
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Subgroup generated by `gens`, as a sorted list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        let mut gens: Vec<usize> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    pub fn is_subgroup(&self, set: &BTreeSet<usize>) -> bool {
        set.contains(&self.identity)
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&h| {
            (0..self.order).all(|g| set.contains(&self.mul(self.mul(self.inv(g), h), g)))
        })
    }

    /// `[A, B]` for subgroups given as element lists.
    pub fn commutator_subgroup_of(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut comms = BTreeSet::new();
        for &x in a {
            for &y in b {
                comms.insert(self.commutator(x, y));
            }
        }
        self.generated_subgroup(&comms.into_iter().collect::<Vec<_>>())
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.order).collect();
        self.commutator_subgroup_of(&all, &all)
    }

    /// Nilpotency class, `None` if the lower central series stalls.
    pub fn nilpotency_class(&self) -> Option<u32> {
        let all: Vec<usize> = (0..self.order).collect();
        let mut term = all.clone();
        let mut class = 0;
        while term.len() > 1 {
            let next = self.commutator_subgroup_of(&term, &all);
            if next.len() == term.len() {
                return None;
            }
            term = next;
            class += 1;
        }
        Some(class)
    }

    /// Invariants of `G / [G, G]` as a sorted list of prime powers.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let derived = self.derived_subgroup();
        let in_derived: Vec<bool> = {
            let mut v = vec![false; self.order];
            for &d in &derived {
                v[d] = true;
            }
            v
        };
        let index = (self.order / derived.len()) as u64;
        let mut out = Vec::new();
        for p in prime_factors(index) {
            // m_k = log_p |{x in G_ab : x^(p^k) = 1}|
            let mut logs = vec![0u32];
            let mut k = 1u32;
            loop {
                let pk = p.pow(k);
                let count = (0..self.order).filter(|&x| in_derived[self.pow(x, pk)]).count()
                    / derived.len();
                let log = ilog_exact(count as u64, p);
                if log == *logs.last().unwrap() {
                    break;
                }
                logs.push(log);
                k += 1;
            }
            // number of cyclic factors of order >= p^k is logs[k] - logs[k-1]
            let ge: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
            for (k, &cnt) in ge.iter().enumerate() {
                let next = ge.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(cnt - next) {
                    out.push(p.pow(k as u32 + 1));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Histogram of element orders, a cheap isomorphism invariant.
    pub fn order_statistics(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for a in 0..self.order {
            *m.entry(self.element_order(a)).or_insert(0) += 1;
        }
        m
    }

    /// Quotient by a normal subgroup; returns the table and the projection.
    pub fn quotient(&self, normal: &BTreeSet<usize>) -> Result<(FiniteGroupTable, GroupHom)> {
        if !self.is_subgroup(normal) {
            return Err(Error::NotSubgroup);
        }
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let mut coset = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        // identity coset first
        let mut order_of_visit: Vec<usize> = vec![self.identity];
        order_of_visit.extend((0..self.order).filter(|&g| g != self.identity));
        for g in order_of_visit {
            if coset[g] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            for &n in normal {
                coset[self.mul(g, n)] = id;
            }
            reps.push(g);
        }
        let m = reps.len();
        let mut mult = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mult[i * m + j] = coset[self.mul(a, b)];
            }
        }
        let gens = self.generators.iter().map(|&g| coset[g] as usize).collect();
        let q = FiniteGroupTable::new(m, mult, 0, gens)?;
        let proj = GroupHom::new(coset.into_iter().map(|c| c as usize).collect());
        Ok((q, proj))
    }

    /// Normal closure of `set`.
    pub fn normal_closure(&self, set: &[usize]) -> Vec<usize> {
        let mut conj = BTreeSet::new();
        for &h in set {
            for g in 0..self.order {
                conj.insert(self.mul(self.mul(self.inv(g), h), g));
            }
        }
        self.generated_subgroup(&conj.into_iter().collect::<Vec<_>>())
    }
}

fn ilog_exact(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        k += 1;
    }
    k
}

/// A map between tables given by the image of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn new(images: Vec<usize>) -> Self {
        Self { images }
    }

    pub fn identity(g: &FiniteGroupTable) -> Self {
        Self::new((0..g.order()).collect())
    }

    /// Extend generator images to a homomorphism, if one exists.
    pub fn from_generator_images(
        src: &FiniteGroupTable,
        dst: &FiniteGroupTable,
        gen_images: &[usize],
    ) -> Result<Self> {
        let gens = src.generators();
        if gen_images.len() != gens.len() {
            return Err(Error::DimensionMismatch("one image per listed generator".into()));
        }
        let mut img = vec![usize::MAX; src.order()];
        img[src.identity()] = dst.identity();
        let mut stack = vec![src.identity()];
        while let Some(x) = stack.pop() {
            for (k, &g) in gens.iter().enumerate() {
                let y = src.mul(x, g);
                let fy = dst.mul(img[x], gen_images[k]);
                if img[y] == usize::MAX {
                    img[y] = fy;
                    stack.push(y);
                } else if img[y] != fy {
                    return Err(Error::NotHomomorphism("generator images are inconsistent".into()));
                }
            }
        }
        Ok(Self::new(img))
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn is_homomorphism(&self, src: &FiniteGroupTable, dst: &FiniteGroupTable) -> bool {
        self.images.len() == src.order()
            && self.images.iter().all(|&x| x < dst.order())
            && (0..src.order()).all(|a| {
                (0..src.order()).all(|b| {
                    self.images[src.mul(a, b)] == dst.mul(self.images[a], self.images[b])
                })
            })
    }

    pub fn check(&self, src: &FiniteGroupTable, dst: &FiniteGroupTable) -> Result<()> {
        if self.is_homomorphism(src, dst) {
            Ok(())
        } else {
            Err(Error::NotHomomorphism("multiplication is not preserved".into()))
        }
    }

    pub fn is_bijective(&self, dst_order: usize) -> bool {
        if self.images.len() != dst_order {
            return false;
        }
        let mut seen = vec![false; dst_order];
        self.images.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_surjective(&self, dst_order: usize) -> bool {
        let mut seen = vec![false; dst_order];
        for &x in &self.images {
            seen[x] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom::new(self.images.iter().map(|&x| other.images[x]).collect())
    }
}
