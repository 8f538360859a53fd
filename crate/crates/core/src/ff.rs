//! The rational function field κ(u): reduced fractions, places, valuations,
//! residues and square tests in completions.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gf::{FieldCtx, Fq};
use crate::upoly::{residue_field, FqPoly, Poly};

/// A reduced fraction `num/den` with `den` monic and coprime to `num`.
/// Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: FqPoly,
    den: FqPoly,
}

impl RatFunc {
    pub fn new(num: FqPoly, den: FqPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: FqPoly, den: FqPoly) -> RatFunc {
        let field = den.field().clone();
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(field),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd"),
                den.div_exact(&g).expect("gcd"),
            )
        };
        let (l, den) = den.monic_parts();
        let li = field.inv(l).expect("nonzero");
        RatFunc {
            num: num.scale(&li),
            den,
        }
    }

    pub fn from_poly(p: FqPoly) -> RatFunc {
        let one = Poly::one(p.field().clone());
        RatFunc { num: p, den: one }
    }

    pub fn constant(field: &FieldCtx, c: Fq) -> RatFunc {
        Self::from_poly(Poly::constant(field.clone(), c))
    }

    /// The variable `u`.
    pub fn var(field: &FieldCtx) -> RatFunc {
        Self::from_poly(Poly::x(field.clone()))
    }

    pub fn num(&self) -> &FqPoly {
        &self.num
    }

    pub fn den(&self) -> &FqPoly {
        &self.den
    }

    pub fn base(&self) -> &FieldCtx {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for elements of κ.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Fq> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn as_poly(&self) -> Option<&FqPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// max(deg num, deg den); the height of 0 is 0.
    pub fn height(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// Valuation at `v`; `None` stands for +∞ (x = 0).
    pub fn ord_at(&self, v: &Place) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(match v {
            Place::Finite(pi) => poly_ord(&self.num, pi) as i64 - poly_ord(&self.den, pi) as i64,
            Place::Infinity => self.den.deg_i() - self.num.deg_i(),
        })
    }

    /// Strips the `v`-power: returns `(ord, num', den')` with `num'`, `den'`
    /// prime to `v` (for ∞, only the leading coefficients matter).
    fn unit_part(&self, pi: &FqPoly) -> (i64, FqPoly, FqPoly) {
        let (a, n) = strip(&self.num, pi);
        let (b, d) = strip(&self.den, pi);
        (a as i64 - b as i64, n, d)
    }

    /// Quadratic character of the residue of `x / ϖ^ord` at `v`, for some
    /// uniformizer ϖ (π at finite places, 1/u at ∞). Nonzero x only.
    pub fn unit_chi(&self, v: &Place) -> i8 {
        assert!(!self.is_zero(), "unit part of 0");
        match v {
            Place::Finite(pi) => {
                let (_, n, d) = self.unit_part(pi);
                n.chi_mod(pi) * d.chi_mod(pi)
            }
            Place::Infinity => self.base().quad_char(*self.num.lead().expect("nonzero")),
        }
    }

    /// Whether x is a square in the completion at `v` (odd residue
    /// characteristic, so Hensel applies).
    pub fn is_square_in_completion(&self, v: &Place) -> Result<bool> {
        let ord = self
            .ord_at(v)
            .ok_or(Error::ZeroPolynomial("square test in completion"))?;
        Ok(ord % 2 == 0 && self.unit_chi(v) == 1)
    }

    /// Residue of an element with no pole at `v`, in the residue field.
    pub fn residue_at(&self, v: &Place) -> Result<Fq> {
        match self.ord_at(v) {
            None => return Ok(Fq(0)),
            Some(o) if o < 0 => return Err(Error::Pole(v.format("u"))),
            Some(o) if o > 0 => return Ok(Fq(0)),
            _ => {}
        }
        match v {
            Place::Infinity => {
                let f = self.base();
                Ok(f.mul(
                    *self.num.lead().expect("nonzero"),
                    f.inv(*self.den.lead().expect("nonzero")).expect("nonzero"),
                ))
            }
            Place::Finite(pi) => {
                let r = residue_field(self.base(), pi)?;
                let f = r.field();
                Ok(f.mul(
                    r.reduce(&self.num),
                    f.inv(r.reduce(&self.den)).ok_or(Error::DivisionByZero)?,
                ))
            }
        }
    }

    /// Residue of `x / ϖ^ord` (π at finite places, 1/u at ∞).
    pub fn unit_residue_at(&self, v: &Place) -> Result<Fq> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("unit residue"));
        }
        match v {
            Place::Infinity => self.unit_infinity_residue(),
            Place::Finite(pi) => {
                let (_, n, d) = self.unit_part(pi);
                RatFunc::new(n, d)?.residue_at(v)
            }
        }
    }

    fn unit_infinity_residue(&self) -> Result<Fq> {
        let f = self.base();
        Ok(f.mul(
            *self.num.lead().expect("nonzero"),
            f.inv(*self.den.lead().expect("nonzero")).expect("nonzero"),
        ))
    }

    /// Every place where x has a zero or a pole, plus ∞, each once, finite
    /// places in canonical order followed by ∞.
    pub fn support(&self) -> Vec<Place> {
        let mut out: Vec<FqPoly> = Vec::new();
        for p in [&self.num, &self.den] {
            if p.is_zero() {
                continue;
            }
            out.extend(p.factor(0).factors.into_iter().map(|(g, _)| g));
        }
        out.sort();
        out.dedup();
        let mut places: Vec<Place> = out.into_iter().map(Place::Finite).collect();
        places.push(Place::Infinity);
        places
    }

    /// True iff x = y^p for some y in κ(u) (κ is perfect, so this is a
    /// condition on exponents only).
    pub fn is_pth_power(&self) -> bool {
        let p = self.base().p() as usize;
        [&self.num, &self.den].iter().all(|g| {
            g.coeffs()
                .iter()
                .enumerate()
                .all(|(i, c)| i % p == 0 || c.0 == 0)
        })
    }

    /// Text form `num/den`, or just `num` when the denominator is 1.
    pub fn format(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.format(var);
        }
        let wrap = |s: String, p: &FqPoly| {
            if p.coeffs().iter().filter(|c| c.0 != 0).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(self.num.format(var), &self.num),
            wrap(self.den.format(var), &self.den)
        )
    }
}

/// Multiplicity of `pi` in `g` (g nonzero).
pub fn poly_ord(g: &FqPoly, pi: &FqPoly) -> usize {
    strip(g, pi).0
}

fn strip(g: &FqPoly, pi: &FqPoly) -> (usize, FqPoly) {
    let mut k = 0;
    let mut cur = g.clone();
    if cur.is_zero() {
        return (0, cur);
    }
    loop {
        let (q, r) = cur.div_rem(pi).expect("nonzero place");
        if !r.is_zero() {
            return (k, cur);
        }
        cur = q;
        k += 1;
    }
}

/// A place of κ(u): a monic irreducible π, or ∞. Finite places sort
/// canonically and precede ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(FqPoly),
    Infinity,
}

impl Place {
    pub fn finite(pi: FqPoly) -> Result<Place> {
        if !pi.is_monic() || !pi.is_irreducible() {
            return Err(Error::Reducible(pi.format("u")));
        }
        Ok(Place::Finite(pi))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(pi) => pi.degree().expect("nonzero"),
            Place::Infinity => 1,
        }
    }

    /// Number of elements of the residue field.
    pub fn norm(&self, q: u64) -> u128 {
        (q as u128).pow(self.degree() as u32)
    }

    pub fn format(&self, var: &str) -> String {
        match self {
            Place::Finite(pi) => pi.format(var),
            Place::Infinity => "inf".into(),
        }
    }
}

/// χ_v(a) for a constant a ∈ κ: χ(a)^{deg v}, cross-checked against the
/// norm from the residue field.
pub fn chi_v(field: &FieldCtx, v: &Place, a: Fq) -> i8 {
    let chi = field.quad_char(a);
    let direct = if v.degree().is_multiple_of(2) { chi * chi } else { chi };
    if let Place::Finite(pi) = v {
        let via_norm = Poly::constant(field.clone(), a).chi_mod(pi);
        assert_eq!(direct, via_norm, "χ_v mismatch at {}", v.format("u"));
    }
    direct
}

/// κ(u) as a `Field`. The variable name is only used for printing.
#[derive(Clone, Debug, PartialEq)]
pub struct RatField {
    base: FieldCtx,
    var: &'static str,
}

impl RatField {
    pub fn new(base: FieldCtx, var: &'static str) -> RatField {
        RatField { base, var }
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn var_name(&self) -> &'static str {
        self.var
    }

    pub fn var(&self) -> RatFunc {
        RatFunc::var(&self.base)
    }

    pub fn constant(&self, c: Fq) -> RatFunc {
        RatFunc::constant(&self.base, c)
    }

    pub fn poly(&self, p: FqPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    pub fn from_coeffs(&self, cs: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(self.base.clone(), cs))
    }
}

impl fmt::Display for RatField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.base, self.var)
    }
}

impl Field for RatField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::from_poly(Poly::zero(self.base.clone()))
    }
    fn one(&self) -> RatFunc {
        RatFunc::from_poly(Poly::one(self.base.clone()))
    }
    fn from_int(&self, n: i64) -> RatFunc {
        self.constant(self.base.embed_int(n))
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.den == b.den {
            return RatFunc::reduce(&a.num + &b.num, a.den.clone());
        }
        let g = a.den.gcd(&b.den);
        let bd = b.den.div_exact(&g).expect("gcd");
        let ad = a.den.div_exact(&g).expect("gcd");
        let num = &(&a.num * &bd) + &(&b.num * &ad);
        RatFunc::reduce(num, &a.den * &bd)
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc {
            num: -&a.num,
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        // cross-cancel before multiplying
        let g1 = a.num.gcd(&b.den);
        let g2 = b.num.gcd(&a.den);
        let n1 = a.num.div_exact(&g1).expect("gcd");
        let d2 = b.den.div_exact(&g1).expect("gcd");
        let n2 = b.num.div_exact(&g2).expect("gcd");
        let d1 = a.den.div_exact(&g2).expect("gcd");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let (l, den) = den.monic_parts();
        let li = self.base.inv(l).expect("nonzero");
        RatFunc {
            num: num.scale(&li),
            den,
        }
    }
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.is_zero() {
            return None;
        }
        Some(RatFunc::reduce(a.den.clone(), a.num.clone()))
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &RatFunc) -> bool {
        a.num.is_one() && a.den.is_one()
    }
    fn characteristic(&self) -> u64 {
        self.base.p()
    }
    /// num/den is a square iff num·den is a square polynomial.
    fn is_square(&self, a: &RatFunc) -> bool {
        (&a.num * &a.den).is_square()
    }
    fn sqrt(&self, a: &RatFunc) -> Option<RatFunc> {
        let s = (&a.num * &a.den).sqrt()?;
        Some(RatFunc::reduce(s, a.den.clone()))
    }
    fn format_elem(&self, a: &RatFunc) -> String {
        a.format(self.var)
    }
}

/// Horner evaluation of a polynomial in a second variable (coefficients in
/// κ(u)) at `t`.
pub fn substitute(x: &Poly<RatField>, t: &RatFunc) -> RatFunc {
    x.eval(t)
}

/// `num(t)/den(t)` for a quotient of polynomials over κ(u).
pub fn substitute_quotient(
    num: &Poly<RatField>,
    den: &Poly<RatField>,
    t: &RatFunc,
) -> Result<RatFunc> {
    let k = num.field();
    let d = den.eval(t);
    k.div(&num.eval(t), &d).ok_or(Error::DivisionByZero)
}
