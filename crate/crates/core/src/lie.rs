//! Free Lie ring ranks, Hall basic commutators up to weight 3, and the mod-p
//! Magnus expansion truncated at degree 3.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, mobius};
use crate::error::{Error, Result};
use crate::linalg::ColumnReduction;
use crate::presentation::{Presentation, Word};
use crate::SeriesParams;

/// Rank of the weight-`w` component of the free Lie ring on `n` generators.
pub fn witt_rank(n: u64, w: u64) -> u64 {
    assert!(w >= 1, "weight starts at 1");
    let mut sum: i128 = 0;
    for d in 1..=w {
        if w % d == 0 {
            sum += mobius(d) as i128 * (n as i128).pow((w / d) as u32);
        }
    }
    (sum / w as i128) as u64
}

/// A bracketing of generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LieTree {
    Gen(usize),
    Bracket(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn bracket(a: LieTree, b: LieTree) -> Self {
        LieTree::Bracket(Box::new(a), Box::new(b))
    }

    pub fn weight(&self) -> usize {
        match self {
            LieTree::Gen(_) => 1,
            LieTree::Bracket(a, b) => a.weight() + b.weight(),
        }
    }

    /// The group commutator word, brackets read as `[a, b] = a^-1 b^-1 a b`.
    pub fn to_word(&self) -> Word {
        match self {
            LieTree::Gen(i) => Word::generator(*i),
            LieTree::Bracket(a, b) => {
                Word::commutator(&a.to_word(), &b.to_word()).expect("short words")
            }
        }
    }
}

impl fmt::Display for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Gen(i) => write!(f, "x{}", i + 1),
            LieTree::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallBasisEntry {
    pub weight: usize,
    pub tree: LieTree,
}

/// Hall basic commutators of weight `w <= 3` on `n` generators, with
/// `x_1 < x_2 < ...`. Weight 2 is `[x_j, x_i]` for `i < j`; weight 3 is
/// `[[x_j, x_i], x_k]` for `i < j` and `k >= i`, ordered by `(i, j, k)`.
pub fn hall_basis(n: usize, w: usize) -> Result<Vec<HallBasisEntry>> {
    let g = LieTree::Gen;
    let entry = |tree: LieTree| HallBasisEntry {
        weight: tree.weight(),
        tree,
    };
    let mut out = Vec::new();
    match w {
        1 => out.extend((0..n).map(|i| entry(g(i)))),
        2 => {
            for i in 0..n {
                for j in i + 1..n {
                    out.push(entry(LieTree::bracket(g(j), g(i))));
                }
            }
        }
        3 => {
            for i in 0..n {
                for j in i + 1..n {
                    for k in i..n {
                        out.push(entry(LieTree::bracket(LieTree::bracket(g(j), g(i)), g(k))));
                    }
                }
            }
        }
        _ => return Err(Error::Unsupported(format!("Hall basis of weight {w}"))),
    }
    Ok(out)
}

/// `F_p`-rank of `R / R^p [R, S]` for `R = [S, [S, S]]` in the free pro-p
/// group `S` of rank `n`, which is `dim H^2(S / R)`.
pub fn relation_rank_free_class2(n: u64) -> u64 {
    witt_rank(n, 3)
}

/// Homogeneous parts of degrees 1 to 3 of the Magnus expansion
/// `x_i -> 1 + X_i` over `F_p`. Monomial `X_a X_b X_c` sits at
/// `a n^2 + b n + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Magnus3 {
    pub n: usize,
    pub p: u64,
    pub deg1: Vec<u64>,
    pub deg2: Vec<u64>,
    pub deg3: Vec<u64>,
}

impl Magnus3 {
    pub fn one(n: usize, p: u64) -> Self {
        Self {
            n,
            p,
            deg1: vec![0; n],
            deg2: vec![0; n * n],
            deg3: vec![0; n * n * n],
        }
    }

    /// `(1 + X_g)^e` truncated.
    pub fn power_of_generator(n: usize, p: u64, g: usize, e: i64) -> Self {
        let mut m = Self::one(n, p);
        m.deg1[g] = binomial_mod_p(e, 1, p);
        m.deg2[g * n + g] = binomial_mod_p(e, 2, p);
        m.deg3[(g * n + g) * n + g] = binomial_mod_p(e, 3, p);
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (n, p) = (self.n, self.p);
        let mut r = Self::one(n, p);
        for i in 0..n {
            r.deg1[i] = (self.deg1[i] + o.deg1[i]) % p;
        }
        for i in 0..n {
            for j in 0..n {
                let k = i * n + j;
                r.deg2[k] = (self.deg2[k] + o.deg2[k] + self.deg1[i] * o.deg1[j]) % p;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let k = (i * n + j) * n + l;
                    let cross = self.deg1[i] * o.deg2[j * n + l] + self.deg2[i * n + j] * o.deg1[l];
                    r.deg3[k] = (self.deg3[k] + o.deg3[k] + cross) % p;
                }
            }
        }
        r
    }

    /// True iff degrees 1 and 2 vanish, i.e. the element lies in the third
    /// term of the mod-p dimension series.
    pub fn in_third_dimension_subgroup(&self) -> bool {
        self.deg1.iter().chain(&self.deg2).all(|&x| x == 0)
    }
}

/// `binom(e, k) mod p` for any integer `e`, via Lucas' theorem.
pub fn binomial_mod_p(e: i64, k: u64, p: u64) -> u64 {
    // binom(-m, k) = (-1)^k binom(m + k - 1, k)
    let (top, negate) = if e >= 0 {
        (e as u128, false)
    } else {
        ((e as i128).unsigned_abs() + k as u128 - 1, k % 2 == 1)
    };
    let mut acc = 1u64;
    let (mut a, mut b) = (top, k as u128);
    let pp = p as u128;
    while b > 0 {
        let (ad, bd) = ((a % pp) as u64, (b % pp) as u64);
        if bd > ad {
            return 0;
        }
        acc = acc * small_binomial(ad, bd) % p;
        a /= pp;
        b /= pp;
    }
    if negate {
        (p - acc) % p
    } else {
        acc % p
    }
}

fn small_binomial(a: u64, b: u64) -> u64 {
    let mut r: u128 = 1;
    for i in 0..b {
        r = r * (a - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

pub fn magnus_expansion(w: &Word, n: usize, p: u64) -> Magnus3 {
    w.letters()
        .iter()
        .fold(Magnus3::one(n, p), |acc, &(g, e)| acc.mul(&Magnus3::power_of_generator(n, p, g, e)))
}

/// `dim H^2` of the pro-p group presented by `pres`, when the relators all
/// lie in the third mod-p dimension subgroup `D_3` of the free group and
/// their degree-3 Magnus parts are independent over `F_p`. Then
/// `R^p [R, S]` lies in `D_4`, so the relators stay independent in
/// `R / R^p [R, S]` and the relation rank is the relator count.
/// Returns `None` when the criterion does not apply.
pub fn relation_rank_in_d3(pres: &Presentation, p: u64) -> Result<Option<usize>> {
    if !is_prime(p) {
        return Err(Error::InvalidParams(format!("{p} is not prime")));
    }
    let n = pres.rank();
    let mut rows = Vec::new();
    for r in &pres.relators {
        let m = magnus_expansion(r, n, p);
        if !m.in_third_dimension_subgroup() {
            return Ok(None);
        }
        rows.push(m.deg3.iter().map(|&x| x as u32).collect());
    }
    let ring = SeriesParams::new(p, 1)?.ring();
    let rank = ColumnReduction::new(ring, rows, n * n * n).pivot_count();
    Ok((rank == pres.relators.len()).then_some(rank))
}
