//! Milnor K-theory mod q in degrees 1 and 2 for finite fields, `Q_l` with
//! `l != p`, and `R`, plus standard presentations of their maximal pro-p
//! Galois groups.
//!
//! `mu_q` is identified with `Z/q` by `zeta = u^((l-1)/q)` for local fields,
//! `u` the least primitive root mod `l`, and by `-1 <-> 1` for `R`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, pow_mod, prime_power_decomposition, SeriesParams, Zq};
use crate::cohom::PairingTensor;
use crate::error::{Error, Result};
use crate::linalg::{quotient_module, ColumnReduction, Cokernel};
use crate::presentation::{Presentation, Word};

/// Largest finite field handled by brute force.
pub const MAX_FINITE_FIELD: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldKind {
    Finite { size: u64 },
    Local { ell: u64 },
    Real,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub kind: FieldKind,
    pub params: SeriesParams,
}

impl FieldDescriptor {
    /// Parse `Fq:<size>`, `Qp:<l>` or `R`.
    pub fn parse(s: &str, params: SeriesParams) -> Result<Self> {
        let kind: FieldKind = s.parse()?;
        let d = Self { kind, params };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let (p, q) = (self.params.p, self.params.q);
        match self.kind {
            FieldKind::Finite { size } => {
                if prime_power_decomposition(size).is_none() {
                    return Err(Error::InvalidParams(format!("{size} is not a prime power")));
                }
                if size > MAX_FINITE_FIELD {
                    return Err(Error::Unsupported(format!("finite field of size {size} is too large")));
                }
                if size % q != 1 {
                    return Err(Error::MissingHypothesis(format!(
                        "F_{size} lacks a primitive {q}th root of unity"
                    )));
                }
            }
            FieldKind::Local { ell } => {
                if !is_prime(ell) {
                    return Err(Error::InvalidParams(format!("{ell} is not prime")));
                }
                if ell == p {
                    return Err(Error::Unsupported(format!("Q_{ell} with residue characteristic p")));
                }
                if (ell - 1) % q != 0 {
                    return Err(Error::MissingHypothesis(format!(
                        "Q_{ell} lacks a primitive {q}th root of unity"
                    )));
                }
            }
            FieldKind::Real => {
                if q != 2 {
                    return Err(Error::Unsupported("R needs q = 2".into()));
                }
            }
        }
        Ok(())
    }
}

impl FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::Malformed(format!("bad field descriptor {s:?}")))
        };
        if s == "R" {
            Ok(FieldKind::Real)
        } else if let Some(t) = s.strip_prefix("Fq:") {
            Ok(FieldKind::Finite { size: num(t)? })
        } else if let Some(t) = s.strip_prefix("Qp:") {
            Ok(FieldKind::Local { ell: num(t)? })
        } else {
            Err(Error::Malformed(format!("bad field descriptor {s:?}")))
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Finite { size } => write!(f, "Fq:{size}"),
            FieldKind::Local { ell } => write!(f, "Qp:{ell}"),
            FieldKind::Real => write!(f, "R"),
        }
    }
}

/// `GF(l^k)` with elements encoded as base-`l` coefficient vectors of a
/// polynomial in a primitive element `t`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    pub char: u64,
    pub degree: u32,
    pub size: u64,
    /// Low coefficients of the monic modulus, degree `degree`.
    modulus: Vec<u64>,
    /// `exp[e] = t^e`.
    exp: Vec<u64>,
    /// `log[x]` for `x != 0`.
    log: Vec<u64>,
}

impl FiniteField {
    pub fn new(size: u64) -> Result<Self> {
        let (l, k) = prime_power_decomposition(size)
            .ok_or_else(|| Error::InvalidParams(format!("{size} is not a prime power")))?;
        if size > MAX_FINITE_FIELD {
            return Err(Error::Unsupported(format!("finite field of size {size} is too large")));
        }
        // Search monic moduli with t of order size - 1: such a modulus is
        // irreducible since a non-field quotient has fewer units.
        for code in 0..size {
            let modulus: Vec<u64> = (0..k).map(|i| code / l.pow(i) % l).collect();
            if modulus[0] == 0 {
                continue;
            }
            let mut f = Self {
                char: l,
                degree: k,
                size,
                modulus,
                exp: Vec::new(),
                log: Vec::new(),
            };
            let t = if k == 1 { None } else { Some(l) };
            let gen = match t {
                Some(t) => t,
                None => match (2..l.max(3)).find(|&g| is_primitive_root(g % l, l)) {
                    Some(g) => g % l,
                    None => 1,
                },
            };
            if f.fill_tables(gen) {
                return Ok(f);
            }
        }
        Err(Error::Malformed(format!("no primitive modulus for size {size}")))
    }

    fn fill_tables(&mut self, gen: u64) -> bool {
        let n = self.size as usize;
        let mut exp = Vec::with_capacity(n - 1);
        let mut log = vec![u64::MAX; n];
        let mut x = 1u64;
        for e in 0..n - 1 {
            if log[x as usize] != u64::MAX {
                return false;
            }
            log[x as usize] = e as u64;
            exp.push(x);
            x = self.mul_poly(x, gen);
        }
        if x != 1 {
            return false;
        }
        self.exp = exp;
        self.log = log;
        true
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        (0..self.degree).map(|i| x / self.char.pow(i) % self.char).collect()
    }

    fn encode(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.char + c)
    }

    fn mul_poly(&self, a: u64, b: u64) -> u64 {
        let l = self.char;
        let k = self.degree as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % l;
            }
        }
        // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for top in (k..2 * k).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for i in 0..k {
                prod[top - k + i] = (prod[top - k + i] + (l - c) * self.modulus[i]) % l;
            }
        }
        self.encode(&prod[..k])
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.size - 1);
        self.exp[e as usize]
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.char).collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let s: Vec<u64> = self.digits(a).iter().map(|&x| (self.char - x) % self.char).collect();
        self.encode(&s)
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// Discrete logarithm to the primitive element, `None` at zero.
    pub fn log(&self, x: u64) -> Option<u64> {
        (x != 0 && x < self.size).then(|| self.log[x as usize])
    }

    /// Canonical name: the integer for prime fields, else a polynomial in `t`.
    pub fn name(&self, x: u64) -> String {
        if self.degree == 1 {
            return x.to_string();
        }
        let d = self.digits(x);
        let mut terms = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}t"),
                _ => format!("{coef}t^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn is_primitive_root(g: u64, l: u64) -> bool {
    if l == 2 {
        return g == 1;
    }
    if g == 0 {
        return false;
    }
    crate::arith::prime_factors(l - 1)
        .into_iter()
        .all(|r| pow_mod(g, (l - 1) / r, l) != 1)
}

/// Least primitive root mod an odd prime `l`.
pub fn least_primitive_root(l: u64) -> u64 {
    (1..l).find(|&g| is_primitive_root(g, l)).expect("primes have primitive roots")
}

/// A field element for symbol evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldElement {
    /// Encoded element of a finite field.
    Finite(u64),
    /// A nonzero rational `num / den` inside `Q_l` or `R`.
    Rational(i128, i128),
}

/// Degree-1 part: `F* / F*^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K1Part {
    pub basis: Vec<String>,
    pub orders: Vec<u32>,
}

/// Degree-2 part as `(k1 ⊗ k1) / relations`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K2Part {
    /// Pairs `(i, j)` standing for `{b_i, b_j}`, ordered by `(i, j)`.
    pub generators: Vec<(usize, usize)>,
    pub relations: Vec<Vec<u32>>,
    pub invariants: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolAlgebra {
    pub field: String,
    pub modulus: u64,
    pub k1_basis: Vec<String>,
    pub k1_orders: Vec<u32>,
    pub k2_presentation: K2Part,
    pub k2_invariants: Vec<u32>,
    /// `pairing[i][j]` = coordinates of `{b_i, b_j}` in `k2`.
    pub pairing: Vec<Vec<Vec<u32>>>,
}

/// Everything needed to evaluate symbols on a concrete field.
pub struct SymbolContext {
    pub descriptor: FieldDescriptor,
    ring: Zq,
    finite: Option<FiniteField>,
    /// Finite fields: log of the basis element mod q, inverted.
    basis_log_inv: u32,
    basis: Vec<FieldElement>,
    /// Local fields: least primitive root.
    root: u64,
    k2: Cokernel,
}

impl SymbolContext {
    pub fn new(descriptor: FieldDescriptor) -> Result<Self> {
        descriptor.validate()?;
        let ring = descriptor.params.ring();
        let q = descriptor.params.q;
        let mut ctx = Self {
            descriptor,
            ring,
            finite: None,
            basis_log_inv: 1,
            basis: Vec::new(),
            root: 0,
            k2: quotient_module(ring, 0, Vec::new()),
        };
        match descriptor.kind {
            FieldKind::Finite { size } => {
                let f = FiniteField::new(size)?;
                // least encoded element generating F*/F*^q
                let b = (1..size)
                    .find(|&x| ring.is_unit((f.log(x).unwrap() % q) as u32))
                    .expect("F* maps onto Z/q");
                ctx.basis_log_inv = ring.inv((f.log(b).unwrap() % q) as u32).unwrap();
                ctx.basis = vec![FieldElement::Finite(b)];
                ctx.finite = Some(f);
            }
            FieldKind::Local { ell } => {
                ctx.root = least_primitive_root(ell);
                let u = if ctx.root == ell - 1 { -1 } else { ctx.root as i128 };
                ctx.basis = vec![FieldElement::Rational(u, 1), FieldElement::Rational(ell as i128, 1)];
            }
            FieldKind::Real => ctx.basis = vec![FieldElement::Rational(-1, 1)],
        }
        let r = ctx.basis.len();
        let relations = ctx.k2_relations()?;
        ctx.k2 = quotient_module(ring, r * r, relations);
        Ok(ctx)
    }

    pub fn basis(&self) -> &[FieldElement] {
        &self.basis
    }

    pub fn name(&self, x: &FieldElement) -> String {
        match (x, &self.finite) {
            (FieldElement::Finite(v), Some(f)) => f.name(*v),
            (FieldElement::Rational(n, 1), _) => n.to_string(),
            (FieldElement::Rational(n, d), _) => format!("{n}/{d}"),
            _ => "?".into(),
        }
    }

    /// Coordinates of the class of `x` in `k1`.
    pub fn k1_coords(&self, x: &FieldElement) -> Result<Vec<u32>> {
        let q = self.descriptor.params.q;
        match (self.descriptor.kind, x) {
            (FieldKind::Finite { .. }, FieldElement::Finite(v)) => {
                let f = self.finite.as_ref().expect("finite context");
                let lg = f.log(*v).ok_or_else(|| Error::InvalidParams("zero has no class".into()))?;
                Ok(vec![self.ring.mul((lg % q) as u32, self.basis_log_inv)])
            }
            (FieldKind::Local { ell }, &FieldElement::Rational(n, d)) => {
                let (v, unit) = split_rational(n, d, ell)?;
                Ok(vec![self.residue_log(unit), self.ring.from_i128(v as i128)])
            }
            (FieldKind::Real, &FieldElement::Rational(n, d)) => {
                if n == 0 || d == 0 {
                    return Err(Error::InvalidParams("zero has no class".into()));
                }
                Ok(vec![u32::from((n < 0) != (d < 0))])
            }
            _ => Err(Error::DimensionMismatch("element of another field".into())),
        }
    }

    /// `k` with `x^((l-1)/q) = zeta^k`, `zeta = u^((l-1)/q)`.
    fn residue_log(&self, unit: u64) -> u32 {
        let FieldKind::Local { ell } = self.descriptor.kind else { unreachable!() };
        let q = self.descriptor.params.q;
        let e = (ell - 1) / q;
        let target = pow_mod(unit, e, ell);
        let zeta = pow_mod(self.root, e, ell);
        let mut acc = 1u64;
        for k in 0..q {
            if acc == target {
                return k as u32;
            }
            acc = acc * zeta % ell;
        }
        unreachable!("x^((l-1)/q) lies in mu_q")
    }

    /// Exponent of the tame symbol `(a, b)` relative to `zeta`.
    pub fn tame_symbol(&self, a: (i128, i128), b: (i128, i128)) -> Result<u32> {
        let FieldKind::Local { ell } = self.descriptor.kind else {
            return Err(Error::Unsupported("tame symbol needs a local field".into()));
        };
        let (va, ua) = split_rational(a.0, a.1, ell)?;
        let (vb, ub) = split_rational(b.0, b.1, ell)?;
        // (-1)^(va vb) a^vb / b^va, on residues
        let pw = |u: u64, e: i64| {
            let m = (e.rem_euclid(ell as i64 - 1)) as u64;
            pow_mod(u, m, ell)
        };
        let mut x = pw(ua, vb) * pw(ub, -va) % ell;
        if (va * vb) % 2 != 0 {
            x = (ell - x) % ell;
        }
        Ok(self.residue_log(x))
    }

    /// Coordinates of `{a, b}` in `k2`, by bilinearity.
    pub fn symbol(&self, a: &FieldElement, b: &FieldElement) -> Result<Vec<u32>> {
        let (ca, cb) = (self.k1_coords(a)?, self.k1_coords(b)?);
        let r = self.basis.len();
        let mut v = vec![0u32; r * r];
        for i in 0..r {
            for j in 0..r {
                v[i * r + j] = self.ring.mul(ca[i], cb[j]);
            }
        }
        Ok(self.k2.coords(&v))
    }

    fn k2_relations(&self) -> Result<Vec<Vec<u32>>> {
        let r = self.basis.len();
        let ring = self.ring;
        match self.descriptor.kind {
            FieldKind::Finite { size } => {
                // Steinberg relations {a, 1 - a}, expanded bilinearly
                let f = self.finite.as_ref().expect("finite context");
                let mut rows = Vec::new();
                for a in 2..size.max(2) {
                    let one_minus = f.add(f.one(), f.neg(a));
                    if a == f.one() || one_minus == 0 {
                        continue;
                    }
                    let ca = self.k1_coords(&FieldElement::Finite(a))?;
                    let cb = self.k1_coords(&FieldElement::Finite(one_minus))?;
                    let mut row = vec![0u32; r * r];
                    for i in 0..r {
                        for j in 0..r {
                            row[i * r + j] = ring.mul(ca[i], cb[j]);
                        }
                    }
                    rows.push(row);
                }
                rows.sort_unstable();
                rows.dedup();
                Ok(rows)
            }
            FieldKind::Local { .. } => {
                // kernel of the tame symbol on basis pairs
                let mut row = vec![0u32; r * r];
                for i in 0..r {
                    for j in 0..r {
                        let (FieldElement::Rational(a, ad), FieldElement::Rational(b, bd)) =
                            (self.basis[i], self.basis[j])
                        else {
                            unreachable!()
                        };
                        row[i * r + j] = self.tame_symbol((a, ad), (b, bd))?;
                    }
                }
                let red = ColumnReduction::new(ring, vec![row], r * r);
                Ok(red.kernel().into_iter().map(|(v, _)| v).collect())
            }
            FieldKind::Real => {
                // Hilbert symbol (-1,-1) = -1: no relations on k1 ⊗ k1 = Z/2
                Ok(Vec::new())
            }
        }
    }

    pub fn algebra(&self) -> SymbolAlgebra {
        let r = self.basis.len();
        let gens: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).collect();
        let mut pairing = vec![vec![Vec::new(); r]; r];
        for (k, &(i, j)) in gens.iter().enumerate() {
            let mut e = vec![0u32; r * r];
            e[k] = 1;
            pairing[i][j] = self.k2.coords(&e);
        }
        let relations = self.k2_relations().expect("computed at construction");
        SymbolAlgebra {
            field: self.descriptor.kind.to_string(),
            modulus: self.descriptor.params.q,
            k1_basis: self.basis.iter().map(|b| self.name(b)).collect(),
            k1_orders: vec![self.descriptor.params.q as u32; r],
            k2_presentation: K2Part {
                generators: gens,
                relations,
                invariants: self.k2.orders().to_vec(),
            },
            k2_invariants: self.k2.orders().to_vec(),
            pairing,
        }
    }

    /// `-x`.
    pub fn negate(&self, x: &FieldElement) -> FieldElement {
        match (x, &self.finite) {
            (FieldElement::Finite(v), Some(f)) => FieldElement::Finite(f.neg(*v)),
            (&FieldElement::Rational(n, d), _) => FieldElement::Rational(-n, d),
            _ => *x,
        }
    }

    /// `1 - x`, `None` when it vanishes.
    pub fn one_minus(&self, x: &FieldElement) -> Option<FieldElement> {
        let y = match (x, &self.finite) {
            (FieldElement::Finite(v), Some(f)) => FieldElement::Finite(f.add(1, f.neg(*v))),
            (&FieldElement::Rational(n, d), _) => FieldElement::Rational(d - n, d),
            _ => return None,
        };
        match y {
            FieldElement::Finite(0) | FieldElement::Rational(0, _) => None,
            _ => Some(y),
        }
    }
}

/// `n / d = l^v * unit`, returning `v` and the unit's residue mod `l`.
fn split_rational(mut n: i128, mut d: i128, ell: u64) -> Result<(i64, u64)> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParams("zero has no class".into()));
    }
    let l = ell as i128;
    let mut v = 0i64;
    while n % l == 0 {
        n /= l;
        v += 1;
    }
    while d % l == 0 {
        d /= l;
        v -= 1;
    }
    let nr = n.rem_euclid(l) as u64;
    let dr = d.rem_euclid(l) as u64;
    let dinv = pow_mod(dr, ell - 2, ell);
    Ok((v, nr * dinv % ell))
}

pub fn k1(field: &FieldDescriptor) -> Result<K1Part> {
    let a = SymbolContext::new(*field)?.algebra();
    Ok(K1Part {
        basis: a.k1_basis,
        orders: a.k1_orders,
    })
}

pub fn k2(field: &FieldDescriptor) -> Result<K2Part> {
    Ok(SymbolContext::new(*field)?.algebra().k2_presentation)
}

pub fn symbol_algebra(field: &FieldDescriptor) -> Result<SymbolAlgebra> {
    Ok(SymbolContext::new(*field)?.algebra())
}

/// The symbol pairing `k1 x k1 -> k2` in the chosen bases.
pub fn milnor_pairing_gram(field: &FieldDescriptor) -> Result<PairingTensor> {
    let a = symbol_algebra(field)?;
    let m = a.k1_basis.len();
    if m > crate::cohom::MAX_PAIRING_RANK {
        return Err(Error::RankBound {
            rank: m,
            bound: crate::cohom::MAX_PAIRING_RANK,
        });
    }
    Ok(PairingTensor {
        modulus: a.modulus,
        m,
        target_dim: a.k2_invariants.len(),
        source_orders: a.k1_orders,
        target_orders: a.k2_invariants,
        values: a.pairing,
    })
}

/// Standard presentation of the maximal pro-p Galois group.
pub fn galois_model(field: &FieldDescriptor) -> Result<Presentation> {
    field.validate()?;
    Ok(match field.kind {
        FieldKind::Finite { size } => Presentation::new(&format!("F{size}"), &["x"], Vec::new()),
        FieldKind::Local { ell } => {
            let rel = Word::from_letters(vec![(0, 1), (1, 1), (0, -1), (1, -(ell as i64))]);
            Presentation::new(&format!("Q{ell}"), &["s", "t"], vec![rel])
        }
        FieldKind::Real => Presentation::new("R", &["x"], vec![Word::power_of(0, 2)]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(s: &str, q: u64) -> FieldDescriptor {
        FieldDescriptor::parse(s, SeriesParams::from_q(q).unwrap()).unwrap()
    }

    #[test]
    fn descriptors() {
        let q2 = SeriesParams::from_q(2).unwrap();
        assert!(FieldDescriptor::parse("Fq:4", q2).is_err());
        assert!(FieldDescriptor::parse("Qp:2", q2).is_err());
        assert!(FieldDescriptor::parse("R", SeriesParams::from_q(3).unwrap()).is_err());
        assert!(FieldDescriptor::parse("Qp:5", SeriesParams::from_q(3).unwrap()).is_err());
        assert!(FieldDescriptor::parse("Zz:5", q2).is_err());
        assert_eq!(field("Qp:7", 3).kind.to_string(), "Qp:7");
    }

    #[test]
    fn finite_fields() {
        let a = symbol_algebra(&field("Fq:5", 2)).unwrap();
        assert_eq!(a.k1_basis, ["2"]);
        assert!(a.k2_invariants.is_empty());
        let f9 = FiniteField::new(9).unwrap();
        let mut seen: Vec<u64> = (0..8).map(|e| f9.exp[e]).collect();
        seen.sort();
        assert_eq!(seen, (1..9).collect::<Vec<_>>());
        assert_eq!(f9.mul(f9.exp[3], f9.exp[6]), f9.exp[1]);
        let a = symbol_algebra(&field("Fq:9", 4)).unwrap();
        assert!(a.k2_invariants.is_empty());
    }

    #[test]
    fn local_and_real() {
        let a = symbol_algebra(&field("Qp:3", 2)).unwrap();
        assert_eq!(a.k1_basis, ["-1", "3"]);
        assert_eq!(a.k2_invariants, vec![2]);
        let val = |i: usize, j: usize| a.pairing[i][j][0];
        assert_eq!((val(0, 0), val(0, 1), val(1, 1)), (0, 1, 1));
        let a = symbol_algebra(&field("Qp:7", 3)).unwrap();
        assert_eq!(a.k1_basis, ["3", "7"]);
        assert_eq!(a.k2_invariants, vec![3]);
        let a = symbol_algebra(&field("R", 2)).unwrap();
        assert_eq!(a.k1_basis, ["-1"]);
        assert_eq!(a.pairing[0][0], vec![1]);
    }

    #[test]
    fn models() {
        let p = galois_model(&field("Qp:3", 2)).unwrap();
        assert_eq!(p.to_string().lines().nth(2).unwrap().trim(), "relators: s t s^-1 t^-3;");
        assert!(galois_model(&field("Fq:5", 2)).unwrap().relators.is_empty());
    }
}
