//! Finite fields GF(p^s), extension towers GF(q) ⊂ GF(q^L), and dense
//! polynomial arithmetic over them.
//!
//! Fields are canonical: the modulus is the lexicographically smallest monic
//! irreducible polynomial of the requested degree over GF(p), where tuples
//! (c_{s-1}, ..., c_0) are compared as base-p integers. Two fields built with
//! the same (p, s) are therefore identical, and an element is just an integer
//! index in [0, q): its base-p digits are the coefficients of the residue
//! polynomial, least significant digit first.

use std::collections::HashMap;

use crate::arith::{self, checked_pow};
use crate::error::{Error, Result};

/// Fields up to this size carry full add/mul/inv lookup tables.
const TABLE_LIMIT: u64 = 512;

/// Largest base-field size for which a tower embedding table is built.
const TOWER_BASE_LIMIT: u64 = 1 << 20;

/// An element of GF(q), tagged with its field size so that cross-field
/// operations can be rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    q: u64,
    index: u64,
}

impl FieldElem {
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn field_size(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// A concrete finite field GF(p^s) with its canonical modulus.
pub struct FieldSpec {
    p: u64,
    s: u32,
    q: u64,
    modulus: Vec<u64>,
    primitive: u64,
    unit_factors: Vec<(u64, u32)>,
    tables: Option<Tables>,
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

// ---- polynomial arithmetic over the prime field GF(p) ----
// Coefficient vectors are little-endian and trimmed.

fn pf_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pf_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + arith::mulmod(ai, bj, p)) % p;
        }
    }
    pf_trim(&mut out);
    out
}

/// Remainder of a modulo the monic polynomial f.
fn pf_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let mut r = a.to_vec();
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (k, &fk) in f.iter().enumerate() {
                let idx = shift + k;
                r[idx] = (r[idx] + (p - arith::mulmod(lead, fk, p))) % p;
            }
        }
        r.pop();
        pf_trim(&mut r);
        if r.len() <= d {
            break;
        }
    }
    r
}

fn pf_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    pf_rem(&pf_mul(a, b, p), f, p)
}

fn pf_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = pf_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = pf_mulmod(&acc, &b, f, p);
        }
        b = pf_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn pf_inv_scalar(a: u64, p: u64) -> u64 {
    arith::powmod(a, p - 2, p)
}

fn pf_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    pf_trim(&mut x);
    pf_trim(&mut y);
    while !y.is_empty() {
        // x mod y, with y made monic on the fly
        let lead_inv = pf_inv_scalar(*y.last().unwrap(), p);
        let monic: Vec<u64> = y.iter().map(|&c| (c * lead_inv) % p).collect();
        let r = pf_rem(&x, &monic, p);
        x = y;
        y = r;
    }
    x
}

/// x^{p^k} mod f, by k applications of the p-power map.
fn pf_frobenius(k: u32, f: &[u64], p: u64) -> Vec<u64> {
    let mut t = pf_rem(&[0, 1], f, p);
    for _ in 0..k {
        t = pf_powmod(&t, p, f, p);
    }
    t
}

fn pf_is_irreducible(f: &[u64], p: u64) -> bool {
    let s = (f.len() - 1) as u32;
    let x = pf_rem(&[0, 1], f, p);
    // x^{p^s} must equal x mod f
    if pf_frobenius(s, f, p) != x {
        return false;
    }
    // gcd(x^{p^(s/r)} - x, f) must be constant for every prime r | s
    for (r, _) in arith::factorize(s as u64) {
        let mut t = pf_frobenius(s / r as u32, f, p);
        // t - x
        while t.len() < x.len() {
            t.push(0);
        }
        for (i, &xi) in x.iter().enumerate() {
            t[i] = (t[i] + p - xi) % p;
        }
        pf_trim(&mut t);
        let g = pf_gcd(&t, f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree s
/// over GF(p). Candidates are ordered by their non-leading coefficient tuple
/// (c_{s-1}, ..., c_0) read as a base-p integer, which is the same as ordering
/// the integer whose i-th base-p digit is c_i.
fn smallest_irreducible(p: u64, s: u32) -> Vec<u64> {
    let total = checked_pow(p, s).expect("candidate space fits");
    for c in 0..total {
        let mut f = index_digits(c, p, s);
        f.push(1);
        if pf_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn index_digits(mut idx: u64, p: u64, s: u32) -> Vec<u64> {
    let mut out = vec![0u64; s as usize];
    for slot in out.iter_mut() {
        *slot = idx % p;
        idx /= p;
    }
    out
}

fn digits_index(digits: &[u64], p: u64) -> u64 {
    let mut idx = 0u64;
    for &d in digits.iter().rev() {
        idx = idx * p + d;
    }
    idx
}

impl FieldSpec {
    /// Builds GF(p^s) with the canonical modulus. Deterministic across runs.
    pub fn new(p: u64, s: u32) -> Result<FieldSpec> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s < 1 {
            return Err(Error::BadDegree);
        }
        let q = checked_pow(p, s).ok_or(Error::FieldBudget { base: p, exp: s })?;
        let modulus = smallest_irreducible(p, s);
        let unit_factors = arith::factorize(q - 1);
        let mut field = FieldSpec {
            p,
            s,
            q,
            modulus,
            primitive: 0,
            unit_factors,
            tables: None,
        };
        field.primitive = field.find_primitive();
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// Builds the field for a prime power q directly.
    pub fn for_order(q: u64) -> Result<FieldSpec> {
        let (p, s) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        FieldSpec::new(p, s)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, little-endian, length s+1, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elem(&self, index: u64) -> Result<FieldElem> {
        if index >= self.q {
            return Err(Error::ElementRange { index, q: self.q });
        }
        Ok(FieldElem { q: self.q, index })
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { q: self.q, index: 0 }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { q: self.q, index: 1 }
    }

    fn check(&self, a: FieldElem) -> Result<()> {
        if a.q != self.q {
            return Err(Error::MixedFields(a.q, self.q));
        }
        Ok(())
    }

    // ---- raw index arithmetic ----

    pub(crate) fn idx_add(&self, a: u64, b: u64) -> u64 {
        if let Some(t) = &self.tables {
            return t.add[(a * self.q + b) as usize] as u64;
        }
        if self.s == 1 {
            return (a + b) % self.p;
        }
        let da = index_digits(a, self.p, self.s);
        let db = index_digits(b, self.p, self.s);
        let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % self.p).collect();
        digits_index(&sum, self.p)
    }

    pub(crate) fn idx_neg(&self, a: u64) -> u64 {
        if let Some(t) = &self.tables {
            return t.neg[a as usize] as u64;
        }
        if self.s == 1 {
            return (self.p - a) % self.p;
        }
        let da = index_digits(a, self.p, self.s);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        digits_index(&neg, self.p)
    }

    pub(crate) fn idx_sub(&self, a: u64, b: u64) -> u64 {
        self.idx_add(a, self.idx_neg(b))
    }

    pub(crate) fn idx_mul(&self, a: u64, b: u64) -> u64 {
        if let Some(t) = &self.tables {
            return t.mul[(a * self.q + b) as usize] as u64;
        }
        self.idx_mul_generic(a, b)
    }

    fn idx_mul_generic(&self, a: u64, b: u64) -> u64 {
        if self.s == 1 {
            return arith::mulmod(a, b, self.p);
        }
        let da = index_digits(a, self.p, self.s);
        let db = index_digits(b, self.p, self.s);
        let mut prod = pf_mul(&da, &db, self.p);
        prod = pf_rem(&prod, &self.modulus, self.p);
        digits_index(&prod, self.p)
    }

    pub(crate) fn idx_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.idx_mul(acc, b);
            }
            b = self.idx_mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn idx_inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        if let Some(t) = &self.tables {
            return t.inv[a as usize] as u64;
        }
        self.idx_pow(a, self.q - 2)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q as u64 {
            if self.s == 1 {
                neg[a as usize] = ((self.p - a) % self.p) as u16;
            } else {
                let da = index_digits(a, self.p, self.s);
                let nd: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
                neg[a as usize] = digits_index(&nd, self.p) as u16;
            }
            for b in 0..q as u64 {
                let s = if self.s == 1 {
                    (a + b) % self.p
                } else {
                    let da = index_digits(a, self.p, self.s);
                    let db = index_digits(b, self.p, self.s);
                    let sum: Vec<u64> =
                        da.iter().zip(&db).map(|(&x, &y)| (x + y) % self.p).collect();
                    digits_index(&sum, self.p)
                };
                add[(a as usize) * q + b as usize] = s as u16;
                let m = self.idx_mul_generic(a, b);
                mul[(a as usize) * q + b as usize] = m as u16;
                if m == 1 {
                    inv[a as usize] = b as u16;
                }
            }
        }
        Tables { add, mul, neg, inv }
    }

    // ---- element API ----

    pub fn add(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElem { q: self.q, index: self.idx_add(a.index, b.index) })
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElem { q: self.q, index: self.idx_sub(a.index, b.index) })
    }

    pub fn neg(&self, a: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        Ok(FieldElem { q: self.q, index: self.idx_neg(a.index) })
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElem { q: self.q, index: self.idx_mul(a.index, b.index) })
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        if a.index == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(FieldElem { q: self.q, index: self.idx_inv(a.index) })
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> Result<FieldElem> {
        self.check(a)?;
        Ok(FieldElem { q: self.q, index: self.idx_pow(a.index, e) })
    }

    fn find_primitive(&self) -> u64 {
        let ord = self.q - 1;
        'cand: for g in 1..self.q {
            for &(r, _) in &self.unit_factors {
                if self.idx_pow(g, ord / r) == 1 {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("every finite field has a generator")
    }

    /// The smallest-index element of multiplicative order q-1.
    pub fn primitive_element(&self) -> FieldElem {
        FieldElem { q: self.q, index: self.primitive }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElem) -> Result<u64> {
        self.check(a)?;
        if a.index == 0 {
            return Err(Error::Domain("order of zero is undefined".into()));
        }
        let mut ord = self.q - 1;
        for &(r, e) in &self.unit_factors {
            for _ in 0..e {
                if self.idx_pow(a.index, ord / r) == 1 {
                    ord /= r;
                } else {
                    break;
                }
            }
        }
        Ok(ord)
    }

    /// A primitive n-th root of unity: primitive^((q-1)/n). Requires n | q-1.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<FieldElem> {
        if n == 0 || !(self.q - 1).is_multiple_of(n) {
            return Err(Error::NotADivisor { a: n, b: self.q - 1 });
        }
        Ok(FieldElem { q: self.q, index: self.idx_pow(self.primitive, (self.q - 1) / n) })
    }
}

/// A dense polynomial over GF(q), stored as coefficient indices with no
/// trailing zeros. The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly {
    q: u64,
    coeffs: Vec<u64>,
}

impl DensePoly {
    pub fn zero(q: u64) -> DensePoly {
        DensePoly { q, coeffs: Vec::new() }
    }

    pub fn one(q: u64) -> DensePoly {
        DensePoly { q, coeffs: vec![1] }
    }

    pub fn from_indices(field: &FieldSpec, mut coeffs: Vec<u64>) -> Result<DensePoly> {
        for &c in &coeffs {
            if c >= field.q() {
                return Err(Error::ElementRange { index: c, q: field.q() });
            }
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(DensePoly { q: field.q(), coeffs })
    }

    /// x^n - 1 over the given field.
    pub fn x_pow_minus_one(field: &FieldSpec, n: u64) -> DensePoly {
        let mut coeffs = vec![0u64; n as usize + 1];
        coeffs[0] = field.idx_neg(1);
        coeffs[n as usize] = 1;
        DensePoly { q: field.q(), coeffs }
    }

    pub fn field_size(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check(&self, field: &FieldSpec, other: &DensePoly) -> Result<()> {
        if self.q != field.q() || other.q != field.q() {
            return Err(Error::MixedFields(self.q, other.q));
        }
        Ok(())
    }

    pub fn add(&self, field: &FieldSpec, other: &DensePoly) -> Result<DensePoly> {
        self.check(field, other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(field.idx_add(self.coeff(i), other.coeff(i)));
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        Ok(DensePoly { q: self.q, coeffs: out })
    }

    pub fn sub(&self, field: &FieldSpec, other: &DensePoly) -> Result<DensePoly> {
        self.check(field, other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(field.idx_sub(self.coeff(i), other.coeff(i)));
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        Ok(DensePoly { q: self.q, coeffs: out })
    }

    /// Schoolbook product.
    pub fn mul(&self, field: &FieldSpec, other: &DensePoly) -> Result<DensePoly> {
        self.check(field, other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(DensePoly::zero(self.q));
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                out[i + j] = field.idx_add(out[i + j], field.idx_mul(a, b));
            }
        }
        Ok(DensePoly { q: self.q, coeffs: out })
    }

    /// Quotient and remainder.
    pub fn divrem(&self, field: &FieldSpec, div: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        self.check(field, div)?;
        if div.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let d = div.coeffs.len() - 1;
        let lead_inv = field.idx_inv(*div.coeffs.last().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - d;
            if lead != 0 {
                let factor = field.idx_mul(lead, lead_inv);
                quot[shift] = factor;
                for (k, &ck) in div.coeffs.iter().enumerate() {
                    rem[shift + k] = field.idx_sub(rem[shift + k], field.idx_mul(factor, ck));
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        while quot.last() == Some(&0) {
            quot.pop();
        }
        Ok((DensePoly { q: self.q, coeffs: quot }, DensePoly { q: self.q, coeffs: rem }))
    }

    pub fn eval(&self, field: &FieldSpec, x: FieldElem) -> Result<FieldElem> {
        field.check(x)?;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = field.idx_add(field.idx_mul(acc, x.index), c);
        }
        field.elem(acc)
    }
}

/// The tower GF(q) = GF(p^s) inside GF(q^L) = GF(p^{sL}), with the canonical
/// embedding sending the base generator to the smallest-index root of the
/// base modulus. The embedding is verified at construction time.
pub struct FieldTower {
    base: FieldSpec,
    ext: FieldSpec,
    degree: u32,
    embed_tab: Vec<u64>,
    project_tab: HashMap<u64, u64>,
}

impl FieldTower {
    pub fn new(p: u64, s: u32, l: u32) -> Result<FieldTower> {
        if l < 1 {
            return Err(Error::BadDegree);
        }
        let base = FieldSpec::new(p, s)?;
        if base.q() > TOWER_BASE_LIMIT {
            return Err(Error::FieldBudget { base: p, exp: s });
        }
        let ext = FieldSpec::new(p, s.checked_mul(l).ok_or(Error::BadDegree)?)?;
        let q = base.q();
        let embed_tab: Vec<u64> = if s == 1 {
            (0..q).collect()
        } else {
            // Subfield of order q: powers of ext_primitive^((Q-1)/(q-1)), plus 0.
            let gamma = ext.idx_pow(ext.primitive, (ext.q() - 1) / (q - 1));
            let mut theta: Option<u64> = None;
            let mut x = 1u64;
            for _ in 0..q - 1 {
                // Evaluate the base modulus (GF(p) coefficients embed as constants).
                let mut acc = 0u64;
                for &c in base.modulus.iter().rev() {
                    acc = ext.idx_add(ext.idx_mul(acc, x), c);
                }
                if acc == 0 {
                    theta = Some(match theta {
                        Some(t) => t.min(x),
                        None => x,
                    });
                }
                x = ext.idx_mul(x, gamma);
            }
            let theta = theta.ok_or_else(|| {
                Error::TowerBroken("base modulus has no root in the extension".into())
            })?;
            (0..q)
                .map(|a| {
                    let mut acc = 0u64;
                    for &d in index_digits(a, p, s).iter().rev() {
                        acc = ext.idx_add(ext.idx_mul(acc, theta), d);
                    }
                    acc
                })
                .collect()
        };
        let mut project_tab = HashMap::with_capacity(q as usize);
        for (a, &img) in embed_tab.iter().enumerate() {
            project_tab.insert(img, a as u64);
        }
        let tower = FieldTower { base, ext, degree: l, embed_tab, project_tab };
        tower.verify()?;
        Ok(tower)
    }

    fn verify(&self) -> Result<()> {
        let q = self.base.q();
        if self.project_tab.len() != q as usize {
            return Err(Error::TowerBroken("embedding is not injective".into()));
        }
        if self.embed_tab[0] != 0 || self.embed_tab[1] != 1 {
            return Err(Error::TowerBroken("embedding does not fix 0 and 1".into()));
        }
        // The image must be the fixed field of x -> x^q.
        for &img in &self.embed_tab {
            if self.ext.idx_pow(img, q) != img {
                return Err(Error::TowerBroken("image not fixed by the q-power map".into()));
            }
        }
        // Ring homomorphism spot checks.
        let pairs: Vec<(u64, u64)> = if q * q <= 4096 {
            (0..q).flat_map(|a| (0..q).map(move |b| (a, b))).collect()
        } else {
            let mut state = 0x243f6a8885a308d3u64;
            (0..4096)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let a = (state >> 33) % q;
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (a, (state >> 33) % q)
                })
                .collect()
        };
        for (a, b) in pairs {
            let add_ok = self.embed_tab[self.base.idx_add(a, b) as usize]
                == self.ext.idx_add(self.embed_tab[a as usize], self.embed_tab[b as usize]);
            let mul_ok = self.embed_tab[self.base.idx_mul(a, b) as usize]
                == self.ext.idx_mul(self.embed_tab[a as usize], self.embed_tab[b as usize]);
            if !add_ok || !mul_ok {
                return Err(Error::TowerBroken("embedding is not a homomorphism".into()));
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn ext(&self) -> &FieldSpec {
        &self.ext
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn embed(&self, a: FieldElem) -> Result<FieldElem> {
        self.base.check(a)?;
        self.ext.elem(self.embed_tab[a.index as usize])
    }

    /// Maps an extension element back into the base field; errors if it does
    /// not lie in the embedded subfield.
    pub fn project(&self, c: FieldElem) -> Result<FieldElem> {
        self.ext.check(c)?;
        match self.project_tab.get(&c.index) {
            Some(&a) => self.base.elem(a),
            None => Err(Error::TowerBroken(format!(
                "coefficient {} is outside the base field",
                c.index
            ))),
        }
    }

    /// The minimal polynomial of beta^i over the base field: the product of
    /// (x - beta^j) over the q-cyclotomic coset of i modulo ord(beta).
    pub fn minimal_polynomial(&self, beta: FieldElem, i: u64) -> Result<DensePoly> {
        self.ext.check(beta)?;
        let n = self.ext.element_order(beta)?;
        let q = self.base.q();
        let start = i % n;
        let mut exps = vec![start];
        let mut j = arith::mulmod(start, q % n, n);
        while j != start {
            exps.push(j);
            j = arith::mulmod(j, q % n, n);
        }
        // Product of linear factors, with coefficients in the extension.
        let mut acc = vec![1u64];
        for &e in &exps {
            let root = self.ext.idx_pow(beta.index, e);
            let mut next = vec![0u64; acc.len() + 1];
            for (k, &c) in acc.iter().enumerate() {
                next[k + 1] = self.ext.idx_add(next[k + 1], c);
                next[k] = self.ext.idx_sub(next[k], self.ext.idx_mul(root, c));
            }
            acc = next;
        }
        let mut coeffs = Vec::with_capacity(acc.len());
        for c in acc {
            coeffs.push(self.project(self.ext.elem(c)?)?.index());
        }
        Ok(DensePoly { q: self.base.q(), coeffs })
    }
}
