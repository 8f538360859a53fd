//! Exact arithmetic in GF(p^m), p an odd prime.
//!
//! Elements are packed as integers `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! where `c_i` are the coordinates in the power basis of the modulus root.
//! The integer order of the packing is therefore the lexicographic order on
//! `(c_{m-1}, ..., c_0)`, which is the canonical order used everywhere in
//! the crate (moduli, enumeration of polynomials, choice of roots).
//!
//! Fields with at most 2^16 elements also carry discrete-log, Zech-log and
//! square-indicator tables built once at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::upoly::Poly;

/// Fields up to this size get log tables.
pub const TABLE_LIMIT: u64 = 1 << 16;
const MAX_ORDER: u64 = 1 << 62;
const MAX_DIGITS: usize = 40;
pub(crate) const NO_LOG: u32 = u32::MAX;

/// An element of some `FieldCtx`, packed as described in the module docs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(pub(crate) u64);

impl Fq {
    pub const ZERO: Fq = Fq(0);

    /// Position of the element in the canonical order.
    pub fn index(self) -> u64 {
        self.0
    }
}

pub(crate) struct Tables {
    /// `log[a]` for packed `a != 0`.
    pub log: Vec<u32>,
    /// `exp[k] = g^k` for `k < 2(q-1)`.
    pub exp: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`, `NO_LOG` when `1 + g^k = 0`.
    pub zech: Vec<u32>,
    pub chi: Vec<i8>,
}

struct Inner {
    p: u64,
    m: usize,
    q: u64,
    /// Monic modulus over GF(p), ascending coefficients, length m + 1.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// Handle to GF(p^m). Cheap to clone; immutable and shareable across threads.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<Inner>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{})", self.p(), self.m())
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds GF(p^m) with the canonical modulus: the first monic irreducible of
/// degree m over GF(p) in lexicographic order on `(c_{m-1}, ..., c_0)`.
/// This is reproducible but not Conway-compatible.
pub fn make_field(p: u64, m: usize) -> Result<FieldCtx> {
    if p == 2 || !is_prime(p) || p >= (1 << 31) {
        return Err(Error::NotOddPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let q = checked_order(p, m)?;
    if m == 1 {
        return Ok(FieldCtx::build(p, vec![0, 1]));
    }
    let prime = FieldCtx::build(p, vec![0, 1]);
    for idx in 0..q {
        let mut coeffs: Vec<Fq> = digits(idx, p, m).into_iter().map(Fq).collect();
        coeffs.push(Fq(1));
        let cand = Poly::new(prime.clone(), coeffs);
        if cand.is_irreducible() {
            let modulus = cand.coeffs().iter().map(|c| c.0).collect();
            return Ok(FieldCtx::build(p, modulus));
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Parses the CLI field literal `"p"` or `"p^m"`.
pub fn parse_field(spec: &str) -> Result<FieldCtx> {
    let spec = spec.trim();
    let (ps, ms) = match spec.split_once('^') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (spec, "1"),
    };
    let p: u64 = ps
        .parse()
        .map_err(|_| Error::Parse(format!("bad field characteristic '{ps}'")))?;
    let m: usize = ms
        .parse()
        .map_err(|_| Error::Parse(format!("bad extension degree '{ms}'")))?;
    make_field(p, m)
}

fn checked_order(p: u64, m: usize) -> Result<u64> {
    let too_large = Error::FieldTooLarge { p, m };
    let q = p.checked_pow(m as u32).ok_or_else(|| too_large.clone())?;
    if q >= MAX_ORDER || m > MAX_DIGITS {
        return Err(too_large);
    }
    Ok(q)
}

fn digits(mut v: u64, p: u64, m: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(v % p);
        v /= p;
    }
    out
}

impl FieldCtx {
    /// GF(p) with the identity modulus.
    pub fn prime(p: u64) -> Result<FieldCtx> {
        make_field(p, 1)
    }

    /// GF(p)[x]/(modulus) for a caller-supplied monic irreducible modulus.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<FieldCtx> {
        if p == 2 || !is_prime(p) || p >= (1 << 31) {
            return Err(Error::NotOddPrime(p));
        }
        let m = modulus.len().saturating_sub(1);
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        if modulus[m] != 1 {
            return Err(Error::InvalidInput("modulus must be monic".into()));
        }
        checked_order(p, m)?;
        let prime = FieldCtx::build(p, vec![0, 1]);
        let cand = Poly::new(prime, modulus.iter().map(|&c| Fq(c % p)).collect());
        if !cand.is_irreducible() {
            return Err(Error::Reducible(format!("{modulus:?}")));
        }
        Ok(FieldCtx::build(p, modulus.iter().map(|c| c % p).collect()))
    }

    fn build(p: u64, modulus: Vec<u64>) -> FieldCtx {
        let m = modulus.len() - 1;
        let q = p.pow(m as u32);
        let mut inner = Inner {
            p,
            m,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        FieldCtx {
            inner: Arc::new(inner),
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn m(&self) -> usize {
        self.inner.m
    }

    /// Number of elements.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.inner.tables.is_some()
    }

    pub(crate) fn tables(&self) -> Option<&Tables> {
        self.inner.tables.as_ref()
    }

    /// Element with the given canonical index.
    pub fn element(&self, idx: u64) -> Result<Fq> {
        if idx >= self.q() {
            return Err(Error::InvalidInput(format!("index {idx} outside {self}")));
        }
        Ok(Fq(idx))
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q()).map(Fq)
    }

    /// The class of x in GF(p)[x]/(modulus); `None` for prime fields.
    pub fn generator(&self) -> Option<Fq> {
        (self.m() > 1).then_some(Fq(self.p()))
    }

    pub fn coords(&self, a: Fq) -> Vec<u64> {
        digits(a.0, self.p(), self.m())
    }

    pub fn from_coords(&self, c: &[u64]) -> Fq {
        let p = self.p();
        let mut v = 0u64;
        for &ci in c.iter().take(self.m()).rev() {
            v = v * p + ci % p;
        }
        Fq(v)
    }

    /// n mod p in the prime subfield.
    pub fn embed_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.p() as i64) as u64)
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p();
        if self.m() == 1 {
            let s = a.0 + b.0;
            return Fq(if s >= p { s - p } else { s });
        }
        if let Some(t) = self.tables() {
            if a.0 == 0 {
                return b;
            }
            if b.0 == 0 {
                return a;
            }
            let q1 = self.q() as u32 - 1;
            let la = t.log[a.0 as usize];
            let lb = t.log[b.0 as usize];
            let d = if lb >= la { lb - la } else { lb + q1 - la };
            let z = t.zech[d as usize];
            if z == NO_LOG {
                return Fq(0);
            }
            return Fq(t.exp[(la + z) as usize] as u64);
        }
        self.add_digits(a, b)
    }

    fn add_digits(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p();
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.m() {
            let s = (x % p + y % p) % p;
            out += s * place;
            place = place.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        Fq(out)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let p = self.p();
        if self.m() == 1 {
            return Fq(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.m() {
            let d = x % p;
            out += ((p - d) % p) * place;
            place = place.wrapping_mul(p);
            x /= p;
        }
        Fq(out)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq(0);
        }
        if self.m() == 1 {
            return Fq(a.0 * b.0 % self.p());
        }
        if let Some(t) = self.tables() {
            let l = t.log[a.0 as usize] + t.log[b.0 as usize];
            return Fq(t.exp[l as usize] as u64);
        }
        mul_raw(&self.inner, a, b)
    }

    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        if let Some(t) = self.tables() {
            if a.0 == 0 {
                return Fq(if e == 0 { 1 } else { 0 });
            }
            let q1 = self.q() - 1;
            let l = (t.log[a.0 as usize] as u128 * (e % q1) as u128 % q1 as u128) as usize;
            return Fq(t.exp[l] as u64);
        }
        let mut base = a;
        let mut acc = Fq(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a.0 == 0 {
            return None;
        }
        if let Some(t) = self.tables() {
            let q1 = self.q() as u32 - 1;
            let l = t.log[a.0 as usize];
            return Some(Fq(t.exp[((q1 - l) % q1) as usize] as u64));
        }
        Some(self.pow(a, self.q() - 2))
    }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
    pub fn quad_char(&self, a: Fq) -> i8 {
        match self.tables() {
            Some(t) => t.chi[a.0 as usize],
            None => self.quad_char_euler(a),
        }
    }

    /// a^((q-1)/2) read as a sign. Independent of the tables.
    pub fn quad_char_euler(&self, a: Fq) -> i8 {
        if a.0 == 0 {
            return 0;
        }
        let r = pow_raw(&self.inner, a, (self.q() - 1) / 2);
        if r == Fq(1) {
            1
        } else {
            debug_assert_eq!(r, self.neg(Fq(1)));
            -1
        }
    }

    /// The unique r with r^p = a, namely a^(q/p).
    pub fn pth_root(&self, a: Fq) -> Fq {
        self.pow(a, self.q() / self.p())
    }

    /// Square root by Tonelli-Shanks; `None` for non-squares.
    pub fn sqrt(&self, a: Fq) -> Option<Fq> {
        if a.0 == 0 {
            return Some(a);
        }
        if self.quad_char(a) != 1 {
            return None;
        }
        let q = self.q();
        let mut s = 0u32;
        let mut t = q - 1;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let z = self
            .elements()
            .skip(1)
            .find(|&z| self.quad_char(z) == -1)
            .expect("odd fields have non-squares");
        let mut m = s;
        let mut c = self.pow(z, t);
        let mut tt = self.pow(a, t);
        let mut r = self.pow(a, t.div_ceil(2));
        while tt != Fq(1) {
            let mut i = 0u32;
            let mut t2 = tt;
            while t2 != Fq(1) {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            tt = self.mul(tt, c);
            r = self.mul(r, b);
        }
        debug_assert_eq!(self.mul(r, r), a);
        Some(r)
    }

    /// Human-readable element: an integer for prime fields, otherwise a
    /// polynomial in the generator `a`.
    pub fn format_elem(&self, x: Fq) -> String {
        if self.m() == 1 {
            return x.0.to_string();
        }
        let c = self.coords(x);
        let mut terms = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            terms.push(match (ci, i) {
                (_, 0) => ci.to_string(),
                (1, _) => mono,
                _ => format!("{ci}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn mul_raw(f: &Inner, a: Fq, b: Fq) -> Fq {
    let (p, m) = (f.p, f.m);
    if m == 1 {
        return Fq(a.0 * b.0 % p);
    }
    let da = digits(a.0, p, m);
    let db = digits(b.0, p, m);
    let mut prod = [0u64; 2 * MAX_DIGITS];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (m..2 * m - 1).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        let neg = p - c;
        for i in 0..m {
            prod[k - m + i] = (prod[k - m + i] + neg * f.modulus[i]) % p;
        }
        prod[k] = 0;
    }
    let mut v = 0u64;
    for i in (0..m).rev() {
        v = v * p + prod[i];
    }
    Fq(v)
}

fn pow_raw(f: &Inner, a: Fq, mut e: u64) -> Fq {
    let mut base = a;
    let mut acc = Fq(1);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_raw(f, acc, base);
        }
        e >>= 1;
        if e > 0 {
            base = mul_raw(f, base, base);
        }
    }
    acc
}

fn add_raw(f: &Inner, a: Fq, b: Fq) -> Fq {
    let p = f.p;
    let (mut x, mut y) = (a.0, b.0);
    let mut out = 0u64;
    let mut place = 1u64;
    for _ in 0..f.m {
        out += ((x % p + y % p) % p) * place;
        place *= p;
        x /= p;
        y /= p;
    }
    Fq(out)
}

fn build_tables(f: &Inner) -> Tables {
    let q = f.q;
    let q1 = q - 1;
    let primes = prime_factors(q1);
    let g = (2..q)
        .chain(std::iter::once(1))
        .map(Fq)
        .find(|&g| primes.iter().all(|&l| pow_raw(f, g, q1 / l) != Fq(1)))
        .expect("multiplicative group is cyclic");
    let mut exp = vec![0u32; 2 * q1 as usize];
    let mut log = vec![NO_LOG; q as usize];
    let mut cur = Fq(1);
    for k in 0..q1 as usize {
        exp[k] = cur.0 as u32;
        log[cur.0 as usize] = k as u32;
        cur = mul_raw(f, cur, g);
    }
    for k in q1 as usize..2 * q1 as usize {
        exp[k] = exp[k - q1 as usize];
    }
    let mut zech = vec![NO_LOG; q1 as usize];
    for (k, z) in zech.iter_mut().enumerate() {
        let s = add_raw(f, Fq(1), Fq(exp[k] as u64));
        if s.0 != 0 {
            *z = log[s.0 as usize];
        }
    }
    let mut chi = vec![0i8; q as usize];
    for k in 0..q1 as usize {
        chi[exp[k] as usize] = if k % 2 == 0 { 1 } else { -1 };
    }
    Tables {
        log,
        exp,
        zech,
        chi,
    }
}

impl Field for FieldCtx {
    type Elem = Fq;

    fn zero(&self) -> Fq {
        Fq(0)
    }
    fn one(&self) -> Fq {
        Fq(1)
    }
    fn from_int(&self, n: i64) -> Fq {
        self.embed_int(n)
    }
    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        FieldCtx::add(self, *a, *b)
    }
    fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        FieldCtx::sub(self, *a, *b)
    }
    fn neg(&self, a: &Fq) -> Fq {
        FieldCtx::neg(self, *a)
    }
    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        FieldCtx::mul(self, *a, *b)
    }
    fn inv(&self, a: &Fq) -> Option<Fq> {
        FieldCtx::inv(self, *a)
    }
    fn is_zero(&self, a: &Fq) -> bool {
        a.0 == 0
    }
    fn is_one(&self, a: &Fq) -> bool {
        a.0 == 1
    }
    fn characteristic(&self) -> u64 {
        self.p()
    }
    fn is_square(&self, a: &Fq) -> bool {
        self.quad_char(*a) >= 0
    }
    fn sqrt(&self, a: &Fq) -> Option<Fq> {
        FieldCtx::sqrt(self, *a)
    }
    fn pow(&self, a: &Fq, e: u64) -> Fq {
        FieldCtx::pow(self, *a, e)
    }
    fn format_elem(&self, a: &Fq) -> String {
        FieldCtx::format_elem(self, *a)
    }

    fn mul_coeffs(&self, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let p = self.p();
        let n = a.len() + b.len() - 1;
        let bound = (p - 1) * (p - 1);
        if self.m() != 1 || bound.saturating_mul(a.len().min(b.len()) as u64) >= u64::MAX / 2 {
            let mut out = vec![Fq(0); n];
            for (i, x) in a.iter().enumerate() {
                if x.0 == 0 {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    out[i + j] = FieldCtx::add(self, out[i + j], FieldCtx::mul(self, *x, *y));
                }
            }
            return out;
        }
        let mut acc = vec![0u64; n];
        for (i, x) in a.iter().enumerate() {
            if x.0 == 0 {
                continue;
            }
            let xv = x.0;
            for (slot, y) in acc[i..i + b.len()].iter_mut().zip(b) {
                *slot += xv * y.0;
            }
        }
        acc.into_iter().map(|v| Fq(v % p)).collect()
    }

    fn rem_monic_coeffs(&self, r: &mut Vec<Fq>, d: &[Fq]) {
        let dl = d.len();
        let p = self.p();
        let bound = (p - 1) * (p - 1);
        if self.m() != 1 || bound.saturating_mul(dl as u64 + 1) >= u64::MAX / 4 {
            // generic path
            while r.len() >= dl {
                let top = r.len() - 1;
                let c = r[top];
                if c.0 != 0 {
                    let shift = top + 1 - dl;
                    for i in 0..dl - 1 {
                        r[shift + i] =
                            FieldCtx::sub(self, r[shift + i], FieldCtx::mul(self, c, d[i]));
                    }
                }
                r.pop();
            }
            return;
        }
        if r.len() < dl {
            return;
        }
        // Lazy reduction: each slot receives at most dl - 1 updates before it
        // is read back as a leading coefficient.
        let mut acc: Vec<u64> = r.iter().map(|c| c.0).collect();
        let dv: Vec<u64> = d.iter().map(|c| c.0).collect();
        while acc.len() >= dl {
            let top = acc.len() - 1;
            let c = acc[top] % p;
            if c != 0 {
                let neg = p - c;
                let shift = top + 1 - dl;
                for (slot, &di) in acc[shift..top].iter_mut().zip(&dv) {
                    *slot += neg * di;
                }
            }
            acc.pop();
        }
        r.clear();
        r.extend(acc.into_iter().map(|v| Fq(v % p)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(f.q(), 3);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.embed_int(4), Fq(1));
        assert_eq!(make_field(5, 1).unwrap().embed_int(-3), Fq(2));
    }

    #[test]
    fn characteristic_two_rejected() {
        assert_eq!(make_field(2, 1).unwrap_err(), Error::NotOddPrime(2));
        assert_eq!(make_field(9, 1).unwrap_err(), Error::NotOddPrime(9));
        assert_eq!(make_field(3, 0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn gf9_canonical_modulus() {
        // Brute force: first monic quadratic over GF(3) in (c1, c0) order
        // with no root.
        let mut expected = None;
        'outer: for c1 in 0..3u64 {
            for c0 in 0..3u64 {
                if (0..3u64).all(|x| (x * x + c1 * x + c0) % 3 != 0) {
                    expected = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        let f = make_field(3, 2).unwrap();
        assert_eq!(f.modulus(), expected.unwrap().as_slice());
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn quad_char_examples() {
        let f3 = make_field(3, 1).unwrap();
        let f5 = make_field(5, 1).unwrap();
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f3.quad_char(f3.embed_int(-1)), -1);
        assert_eq!(f5.quad_char(f5.embed_int(-1)), 1);
        assert_eq!(f9.quad_char(f9.embed_int(-1)), 1);
        assert_eq!(f9.quad_char(Fq::ZERO), 0);
    }

    #[test]
    fn pth_root_examples() {
        let f9 = make_field(3, 2).unwrap();
        for a in f9.elements() {
            let r = f9.pth_root(a);
            assert_eq!(r, f9.pow(a, 3));
            assert_eq!(f9.pow(r, 3), a);
        }
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.pth_root(Fq(2)), Fq(2));
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.pth_root(Fq(2)), Fq(2));
    }

    fn small_fields() -> Vec<FieldCtx> {
        [
            (3, 1),
            (5, 1),
            (7, 1),
            (3, 2),
            (5, 2),
            (3, 3),
            (3, 4),
            (7, 2),
        ]
        .iter()
        .map(|&(p, m)| make_field(p, m).unwrap())
        .collect()
    }

    #[test]
    fn character_is_multiplicative_and_balanced() {
        for f in small_fields() {
            let nonzero: Vec<Fq> = f.elements().skip(1).collect();
            for &a in &nonzero {
                for &b in &nonzero {
                    assert_eq!(f.quad_char(f.mul(a, b)), f.quad_char(a) * f.quad_char(b));
                }
            }
            let squares = nonzero.iter().filter(|&&a| f.quad_char(a) == 1).count() as u64;
            assert_eq!(squares, (f.q() - 1) / 2, "{f}");
        }
    }

    #[test]
    fn table_and_exponent_characters_agree() {
        for f in small_fields() {
            assert!(f.has_tables());
            for a in f.elements() {
                assert_eq!(f.quad_char(a), f.quad_char_euler(a));
            }
        }
    }

    #[test]
    fn inverses_and_roots_exhaustive() {
        for f in small_fields() {
            for a in f.elements() {
                assert_eq!(f.pow(f.pth_root(a), f.p()), a);
                if a != Fq::ZERO {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fq(1));
                }
                match f.sqrt(a) {
                    Some(r) => assert_eq!(f.mul(r, r), a),
                    None => assert_eq!(f.quad_char(a), -1),
                }
            }
        }
    }

    #[test]
    fn table_arithmetic_matches_raw() {
        for f in small_fields() {
            for a in f.elements() {
                for b in f.elements().step_by(3) {
                    assert_eq!(f.mul(a, b), mul_raw(&f.inner, a, b));
                    assert_eq!(f.add(a, b), add_raw(&f.inner, a, b));
                }
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = make_field(3, 11).unwrap();
        assert!(!f.has_tables());
        let a = f.from_coords(&[1, 2, 0, 1]);
        let b = f.inv(a).unwrap();
        assert_eq!(f.mul(a, b), Fq(1));
        assert_eq!(f.pow(f.pth_root(a), 3), a);
        let s = f.mul(a, a);
        assert_eq!(f.quad_char(s), 1);
        let r = f.sqrt(s).unwrap();
        assert_eq!(f.mul(r, r), s);
    }

    #[test]
    fn parse_field_literals() {
        assert_eq!(parse_field("3").unwrap().q(), 3);
        assert_eq!(parse_field("3^2").unwrap().q(), 9);
        assert!(parse_field("2").is_err());
        assert!(parse_field("x").is_err());
    }

    #[test]
    fn element_formatting() {
        let f9 = make_field(3, 2).unwrap();
        let a = f9.generator().unwrap();
        assert_eq!(f9.format_elem(a), "a");
        assert_eq!(f9.format_elem(f9.add(a, Fq(1))), "a+1");
        assert_eq!(f9.format_elem(f9.add(a, a)), "2*a");
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn field_axioms_gf81(a in 0u64..81, b in 0u64..81, c in 0u64..81) {
            let f = make_field(3, 4).unwrap();
            let (a, b, c) = (Fq(a), Fq(b), Fq(c));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
        }
    }
}
