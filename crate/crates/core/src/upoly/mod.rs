//! Dense univariate polynomials over any `Field`, plus the finite-field
//! specific machinery: factorization, irreducibility, Möbius/Liouville,
//! resultants and discriminants, residue fields.

mod disc;
mod factor;
mod residue;

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gf::{FieldCtx, Fq};

pub use disc::{discriminant, resultant};
pub use factor::{count_monic_irreducibles, monic_irreducibles, monic_polys, Factorization};
pub use residue::{residue_field, residue_field_in, ResidueField};

/// A polynomial over a field `K`, coefficients ascending. The zero
/// polynomial has no coefficients and degree `None` (minus infinity).
#[derive(Clone, Debug)]
pub struct Poly<K: Field> {
    field: K,
    coeffs: Vec<K::Elem>,
}

/// Polynomials over a finite field.
pub type FqPoly = Poly<FieldCtx>;

impl<K: Field> PartialEq for Poly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Poly<FieldCtx> {}

impl Hash for Poly<FieldCtx> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

/// Canonical order: by degree (zero first), then coefficients from the top
/// down in the canonical element order.
impl Ord for Poly<FieldCtx> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Poly<FieldCtx> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<K: Field> Poly<K> {
    pub fn new(field: K, mut coeffs: Vec<K::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: K) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: K) -> Self {
        let c = field.one();
        Poly::constant(field, c)
    }

    pub fn constant(field: K, c: K::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    /// The variable.
    pub fn x(field: K) -> Self {
        Poly::monomial(field.clone(), field.one(), 1)
    }

    /// `c * x^n`.
    pub fn monomial(field: K, c: K::Elem, n: usize) -> Self {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = c;
        Poly::new(field, coeffs)
    }

    pub fn from_ints(field: K, cs: &[i64]) -> Self {
        let coeffs = cs.iter().map(|&c| field.from_int(c)).collect();
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K::Elem> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1, for arithmetic on
    /// degrees where minus infinity never matters.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| self.field.is_one(c))
    }

    pub fn lead(&self) -> Option<&K::Elem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> K::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn same(&self, coeffs: Vec<K::Elem>) -> Self {
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        if self.field.is_zero(c) {
            return Poly::zero(self.field.clone());
        }
        self.same(self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        self.same(coeffs)
    }

    /// Returns `(lead, self / lead)`; the zero polynomial is returned as is
    /// with lead 1.
    pub fn monic_parts(&self) -> (K::Elem, Self) {
        match self.lead() {
            None => (self.field.one(), self.clone()),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero lead");
                (l.clone(), self.scale(&inv))
            }
        }
    }

    pub fn monic(&self) -> Self {
        self.monic_parts().1
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let inv = f.inv(dl).expect("nonzero lead");
        let dn = d.coeffs.len();
        if self.coeffs.len() < dn {
            return Ok((Poly::zero(f.clone()), self.clone()));
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![f.zero(); r.len() - dn + 1];
        while r.len() >= dn {
            let top = r.len() - 1;
            let c = f.mul(&r[top], &inv);
            let shift = top + 1 - dn;
            if !f.is_zero(&c) {
                for i in 0..dn - 1 {
                    let t = f.mul(&c, &d.coeffs[i]);
                    r[shift + i] = f.sub(&r[shift + i], &t);
                }
            }
            q[shift] = c;
            r.pop();
        }
        Ok((self.same(q), self.same(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        if d.is_monic() {
            let mut r = self.coeffs.clone();
            self.field.rem_monic_coeffs(&mut r, &d.coeffs);
            return Ok(self.same(r));
        }
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd; zero when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f.clone()), Poly::zero(f.clone()));
        let (mut t0, mut t1) = (Poly::zero(f.clone()), Poly::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = f.inv(l).expect("nonzero lead");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_int(i as i64), c))
            .collect();
        self.same(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &K::Elem) -> K::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// `self(other)`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Poly::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(self.field.clone(), c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mulmod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m).expect("nonzero modulus")
    }

    /// `self^e mod m`; `m` must be nonzero.
    pub fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let m = m.monic();
        let mut base = self.rem(&m).expect("nonzero modulus");
        let mut acc = Poly::one(self.field.clone())
            .rem(&m)
            .expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, &m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, &m);
            }
        }
        acc
    }

    /// Applies `g` to every coefficient, landing in another field.
    pub fn map<L: Field>(&self, field: L, g: impl Fn(&K::Elem) -> L::Elem) -> Poly<L> {
        Poly::new(field, self.coeffs.iter().map(g).collect())
    }

    /// Text form such as `u^4+2*u^2+2`.
    pub fn format(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let cs = f.format_elem(c);
            let atomic = !cs.contains(['+', '-', '/', '*', '^']);
            let cs = if atomic { cs } else { format!("({cs})") };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            terms.push(if i == 0 {
                cs
            } else if f.is_one(c) {
                mono
            } else {
                format!("{cs}*{mono}")
            });
        }
        terms.join("+")
    }
}

impl<K: Field> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.same(coeffs)
    }
}

impl<K: Field> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => f.sub(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => f.neg(b),
                (None, None) => unreachable!(),
            })
            .collect();
        self.same(coeffs)
    }
}

impl<K: Field> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        self.same(self.field.mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        self.same(self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }
}

impl FqPoly {
    /// Monic polynomial of degree `n` whose lower coefficients are the
    /// base-q digits of `idx` (index order = canonical order).
    pub fn monic_from_index(field: &FieldCtx, n: usize, mut idx: u64) -> FqPoly {
        let q = field.q();
        let mut coeffs = Vec::with_capacity(n + 1);
        for _ in 0..n {
            coeffs.push(Fq(idx % q));
            idx /= q;
        }
        coeffs.push(Fq(1));
        Poly::new(field.clone(), coeffs)
    }

    /// Coefficientwise p-th root of a polynomial in `x^p`.
    pub fn pth_root(&self) -> Result<FqPoly> {
        let f = &self.field;
        let p = f.p() as usize;
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                coeffs.push(f.pth_root(*c));
            } else if c.0 != 0 {
                return Err(Error::InvalidInput("not a polynomial in x^p".into()));
            }
        }
        Ok(self.same(coeffs))
    }

    /// Quadratic character of `self mod pi` in the residue field
    /// `κ[u]/(pi)`, via the norm `Res(pi, self)`.
    pub fn chi_mod(&self, pi: &FqPoly) -> i8 {
        let n = resultant(pi, self).expect("nonzero place");
        self.field.quad_char(n)
    }

    /// Same character computed as `g^((Q-1)/2)` inside `κ[u]/(pi)`.
    pub fn chi_mod_euler(&self, pi: &FqPoly) -> i8 {
        let q = self.field.q();
        let n = pi.degree().expect("nonzero place");
        let g = self.rem(pi).expect("nonzero place");
        if g.is_zero() {
            return 0;
        }
        // (q^n - 1)/2 = (q-1)/2 * (1 + q + ... + q^{n-1})
        let mut acc = Poly::one(self.field.clone());
        let mut cur = g;
        for i in 0..n {
            acc = acc.mulmod(&cur, pi);
            if i + 1 < n {
                cur = cur.powmod(q, pi);
            }
        }
        let r = acc.powmod((q - 1) / 2, pi);
        if r.is_one() {
            1
        } else {
            debug_assert!((&r + &Poly::one(self.field.clone())).is_zero());
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn p(f: &FieldCtx, cs: &[i64]) -> FqPoly {
        Poly::from_ints(f.clone(), cs)
    }

    #[test]
    fn gcd_is_monic() {
        let f = make_field(5, 1).unwrap();
        let a = p(&f, &[-1, 0, 1]);
        let b = p(&f, &[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        let b2 = b.scale(&Fq(3));
        assert_eq!(a.gcd(&b2), b);
        assert!(Poly::zero(f.clone()).gcd(&Poly::zero(f)).is_zero());
    }

    #[test]
    fn derivative_of_pth_power_vanishes() {
        let f = make_field(3, 1).unwrap();
        let x3 = Poly::monomial(f.clone(), Fq(1), 3);
        assert!(x3.derivative().is_zero());
    }

    #[test]
    fn evaluation() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(p(&f, &[1, 0, 1]).eval(&Fq(2)), Fq(2));
    }

    #[test]
    fn division_identity() {
        let f = make_field(7, 1).unwrap();
        let a = p(&f, &[3, 1, 4, 1, 5, 9, 2]);
        let d = p(&f, &[2, 0, 3]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree());
        assert_eq!(a.rem(&d.monic()).unwrap(), r.rem(&d.monic()).unwrap());
        assert_eq!(
            a.div_rem(&Poly::zero(f)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn xgcd_bezout() {
        let f = make_field(5, 1).unwrap();
        let a = p(&f, &[1, 2, 3, 4]);
        let b = p(&f, &[2, 0, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, a.gcd(&b));
    }

    #[test]
    fn composition_and_powers() {
        let f = make_field(3, 1).unwrap();
        let x = Poly::x(f.clone());
        let t2 = p(&f, &[1, 1]).pow(2);
        assert_eq!(p(&f, &[0, 0, 1]).compose(&p(&f, &[1, 1])), t2);
        assert_eq!(p(&f, &[1, 1]).pow(3), p(&f, &[1, 0, 0, 1]));
        let m = p(&f, &[1, 0, 1]);
        assert_eq!(x.powmod(9, &m), x.pow(9).rem(&m).unwrap());
    }

    #[test]
    fn canonical_order() {
        let f = make_field(3, 1).unwrap();
        let mut v = vec![
            p(&f, &[2, 1]),
            p(&f, &[0, 0, 1]),
            p(&f, &[1, 1]),
            p(&f, &[1]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                p(&f, &[1]),
                p(&f, &[1, 1]),
                p(&f, &[2, 1]),
                p(&f, &[0, 0, 1])
            ]
        );
        assert_eq!(FqPoly::monic_from_index(&f, 1, 2), p(&f, &[2, 1]));
    }

    #[test]
    fn formatting() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(p(&f, &[2, 0, 2, 0, 1]).format("u"), "u^4+2*u^2+2");
        assert_eq!(p(&f, &[0, 1]).format("T"), "T");
        let f9 = make_field(3, 2).unwrap();
        let a = f9.generator().unwrap();
        let poly = Poly::new(f9.clone(), vec![Fq(0), a, f9.add(a, Fq(1))]);
        assert_eq!(poly.format("u"), "(a+1)*u^2+a*u");
    }

    #[test]
    fn pth_root_of_poly() {
        let f = make_field(3, 1).unwrap();
        let g = p(&f, &[1, 2, 1]);
        assert_eq!(g.pow(3).pth_root().unwrap(), g);
        assert!(p(&f, &[0, 1]).pth_root().is_err());
    }

    #[test]
    fn residue_characters_agree() {
        for f in [
            make_field(3, 1).unwrap(),
            make_field(5, 1).unwrap(),
            make_field(3, 2).unwrap(),
        ] {
            let irr: Vec<FqPoly> = (1..=3).flat_map(|n| monic_irreducibles(&f, n)).collect();
            for pi in irr.iter().take(25) {
                for g in monic_polys(&f, 2).take(20) {
                    let g = g.scale(&Fq(2));
                    assert_eq!(g.chi_mod(pi), g.chi_mod_euler(pi), "{pi:?} {g:?}");
                }
            }
        }
    }
}
