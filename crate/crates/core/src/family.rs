//! The family h(T) = cT^{2p} + du: the curves E_{h(t)} and E_{h(t^2+u)},
//! their root numbers in closed form, the Chowla-type counterexamples,
//! specialization at closed points u = u0, and biquadratic Galois groups.
//!
//! π1 is built from (T^2 + û)^2; this sign is the one compatible with
//! h(T^2+u)|_{u=u0} being the p-th power of π1.

use std::ops::RangeInclusive;

use log::{info, warn};
use rand::Rng;

use crate::ec::{CurveAB, CurveK, Point, Potential, Reduction, ReductionReport};
use crate::error::{Error, Result};
use crate::ff::{Place, RatField, RatFunc};
use crate::field::Field;
use crate::gf::{make_field, FieldCtx, Fq};
use crate::upoly::{monic_irreducibles, residue_field_in, FqPoly, Poly, ResidueField};

#[derive(Clone, Debug)]
pub struct FamilyParams {
    pub field: FieldCtx,
    pub c: Fq,
    pub d: Fq,
}

impl FamilyParams {
    pub fn new(field: FieldCtx, c: Fq, d: Fq) -> Result<FamilyParams> {
        if c.index() == 0 || d.index() == 0 {
            return Err(Error::InvalidInput("c and d must be nonzero".into()));
        }
        if field.p() == 2 {
            return Err(Error::NotOddPrime(2));
        }
        Ok(FamilyParams { field, c, d })
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn rat_field(&self) -> RatField {
        RatField::new(self.field.clone(), "u")
    }

    fn chi_minus_one(&self) -> i8 {
        self.field.quad_char(self.field.embed_int(-1))
    }

    fn u(&self) -> FqPoly {
        Poly::x(self.field.clone())
    }
}

/// Numerator and denominator of h(t) for t = g1/g2:
/// f1 = c g1^{2p} + d u g2^{2p}, f2 = g2^{2p}.
pub fn h_parts(params: &FamilyParams, t: &RatFunc) -> (FqPoly, FqPoly) {
    let e = 2 * params.p();
    let g2e = t.den().pow(e);
    let f1 = &t.num().pow(e).scale(&params.c) + &(&params.u() * &g2e).scale(&params.d);
    (f1, g2e)
}

pub fn h_of(params: &FamilyParams, t: &RatFunc) -> RatFunc {
    let (f1, f2) = h_parts(params, t);
    assert!(
        f1.is_squarefree(),
        "f1 not squarefree for t = {}",
        t.format("u")
    );
    assert!(f1.gcd(&f2).is_one(), "f1 and f2 share a factor");
    let h = RatFunc::new(f1, f2).expect("nonzero denominator");
    assert!(!h.is_constant());
    h
}

/// `y^2 = x^3 + t x^2 - t^3 x`.
pub fn curve_e<K: Field>(k: &K, t: &K::Elem) -> Result<CurveAB<K>> {
    let t3 = k.mul(&k.mul(t, t), t);
    CurveAB::new(k.clone(), t.clone(), k.neg(&t3))
}

/// `Q = (-t, t^2)`.
pub fn point_q<K: Field>(k: &K, t: &K::Elem) -> Point<K::Elem> {
    Point::Affine(k.neg(t), k.mul(t, t))
}

pub fn closed_form_w(t: &RatFunc) -> i8 {
    match t.ord_at(&Place::Infinity) {
        None => -1,
        Some(o) if o >= 0 => -1,
        Some(_) => 1,
    }
}

/// Root number of E_{h(t)} through μ(4c g1^{2p} + (4du+1) g2^{2p}).
pub fn endglobal_w(params: &FamilyParams, t: &RatFunc) -> i8 {
    let e = 2 * params.p();
    let (g1, g2) = (t.num(), t.den());
    let k = &params.field;
    let lin = Poly::new(k.clone(), vec![k.one(), k.mul(k.embed_int(4), params.d)]);
    let f = &g1.pow(e).scale(&k.mul(k.embed_int(4), params.c)) + &(&lin * &g2.pow(e));
    assert!(
        f.is_squarefree(),
        "f not squarefree for t = {}",
        t.format("u")
    );
    let (n1, n2) = (g1.deg_i(), g2.deg_i());
    let n = if n1 <= n2 { n2 } else { n1 };
    sign_pow(params.chi_minus_one(), n) * f.moebius_factor()
}

/// Product of local root numbers of E_{h(t)}.
pub fn product_w(params: &FamilyParams, t: &RatFunc) -> Result<i8> {
    let k = params.rat_field();
    curve_e(&k, &h_of(params, t))?.global_root_number()
}

fn sign_pow(s: i8, n: i64) -> i8 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        s
    }
}

fn chowla_check(a: Fq, b: Fq, g1: &FqPoly, g2: &FqPoly) -> Result<()> {
    if a.index() == 0 || b.index() == 0 {
        return Err(Error::InvalidInput("a and b must be nonzero".into()));
    }
    if g1.is_zero() && g2.is_zero() {
        return Err(Error::InvalidInput("g1 and g2 are both zero".into()));
    }
    if g1.field().p() == 2 {
        return Err(Error::NotOddPrime(2));
    }
    Ok(())
}

/// `a g1^{e} + b u g2^{e}`.
pub fn chowla_poly(a: Fq, b: Fq, g1: &FqPoly, g2: &FqPoly, e: u64) -> FqPoly {
    let u = Poly::x(g1.field().clone());
    &g1.pow(e).scale(&a) + &(&u * &g2.pow(e)).scale(&b)
}

/// Closed form of μ(a g1^{2p} + b u g2^{2p}) for coprime g1, g2.
pub fn chowla_mu_closed_form(a: Fq, b: Fq, g1: &FqPoly, g2: &FqPoly) -> Result<i8> {
    chowla_check(a, b, g1, g2)?;
    if !g1.gcd(g2).is_one() {
        return Err(Error::InvalidInput("g1 and g2 must be coprime".into()));
    }
    let k = g1.field();
    let chi = k.quad_char(k.embed_int(-1));
    let (n1, n2) = (g1.deg_i(), g2.deg_i());
    Ok(if n1 <= n2 {
        -sign_pow(chi, n2)
    } else {
        sign_pow(chi, n1)
    })
}

pub fn chowla_mu_direct(a: Fq, b: Fq, g1: &FqPoly, g2: &FqPoly) -> i8 {
    chowla_poly(a, b, g1, g2, 2 * g1.field().p()).moebius_factor()
}

/// Closed form of λ(a g1^{4p} + b u g2^{4p}): the μ closed form applied
/// to the squares of g1, g2 after removing their gcd (a 4p-th power, which
/// λ ignores).
pub fn chowla_liouville_4p(a: Fq, b: Fq, g1: &FqPoly, g2: &FqPoly) -> Result<i8> {
    chowla_check(a, b, g1, g2)?;
    let g = g1.gcd(g2);
    let h1 = g1.div_exact(&g)?;
    let h2 = g2.div_exact(&g)?;
    chowla_mu_closed_form(a, b, &(&h1 * &h1), &(&h2 * &h2))
}

pub fn chowla_liouville_direct(a: Fq, b: Fq, g1: &FqPoly, g2: &FqPoly) -> i8 {
    chowla_poly(a, b, g1, g2, 4 * g1.field().p()).liouville()
}

/// Random element of κ(u) with numerator and denominator of degree at
/// most `max_height` (zero allowed).
pub fn random_t<R: Rng>(field: &FieldCtx, max_height: usize, rng: &mut R) -> RatFunc {
    let q = field.q();
    let num_deg = rng.gen_range(0..=max_height);
    let den_deg = rng.gen_range(0..=max_height);
    let num: Vec<Fq> = (0..=num_deg).map(|_| Fq(rng.gen_range(0..q))).collect();
    let mut den: Vec<Fq> = (0..den_deg).map(|_| Fq(rng.gen_range(0..q))).collect();
    den.push(Fq(1));
    RatFunc::new(Poly::new(field.clone(), num), Poly::new(field.clone(), den))
        .expect("monic denominator")
}

/// π1, π2 over κ0 = κ[u]/(u0).
#[derive(Clone, Debug)]
pub struct PiPolys {
    pub u0: FqPoly,
    pub kappa0: ResidueField,
    pub u0_hat: Fq,
    pub pi1: FqPoly,
    pub pi2: FqPoly,
    pub pi1_monic: FqPoly,
    pub pi2_monic: FqPoly,
}

pub fn pi_polys(params: &FamilyParams, u0: &FqPoly) -> Result<PiPolys> {
    pi_polys_in(params, u0, None)
}

fn pi_polys_in(params: &FamilyParams, u0: &FqPoly, big: Option<&FieldCtx>) -> Result<PiPolys> {
    let kappa0 = residue_field_in(&params.field, u0, big)?;
    let k0 = kappa0.field().clone();
    let uh = kappa0.root();
    let c0 = kappa0.map_base(params.c);
    let d0 = kappa0.map_base(params.d);
    let s = Poly::new(k0.clone(), vec![uh, Fq(0), Fq(1)]);
    let s2 = &s * &s;
    let pi1 =
        &s2.scale(&k0.pth_root(c0)) + &Poly::constant(k0.clone(), k0.pth_root(k0.mul(d0, uh)));
    let pi2 = &Poly::constant(k0.clone(), Fq(1)) + &pi1.scale(&k0.embed_int(4));
    let p = params.p();
    let spec = &s.pow(2 * p).scale(&c0) + &Poly::constant(k0.clone(), k0.mul(d0, uh));
    assert_eq!(
        pi1.pow(p),
        spec,
        "π1^p differs from h(T^2+u) at u0 = {}",
        u0.format("u")
    );
    Ok(PiPolys {
        u0: u0.clone(),
        u0_hat: uh,
        pi1_monic: pi1.monic(),
        pi2_monic: pi2.monic(),
        pi1,
        pi2,
        kappa0,
    })
}

/// Structural data of the specialized curves over κ0(T).
#[derive(Clone, Debug)]
pub struct SpecializationReport {
    /// Bad places of E'_{u0}: y^2 = x^3 + π1 x^2 - π1^3 x.
    pub bad: Vec<ReductionReport>,
    /// (ord Δ, ord c4) of E_{u0} at π1 and at π2.
    pub eu0_at_pi1: (i64, i64),
    pub eu0_at_pi2: (i64, i64),
}

fn verify_fail(pis: &PiPolys, what: String) -> Error {
    Error::Verification(format!("u0 = {}: {}", pis.u0.format("u"), what))
}

/// Checks the reduction of E'_{u0} and E_{u0} at π1, π2 and ∞ and the
/// identity (0,0) + (-π1, π1^2) = (π1^2, π1^3) on E'_{u0}.
pub fn verify_specialization(params: &FamilyParams, pis: &PiPolys) -> Result<SpecializationReport> {
    let k0 = pis.kappa0.field().clone();
    let kt = RatField::new(k0, "T");
    let pi1 = RatFunc::from_poly(pis.pi1.clone());
    let e1 = curve_e(&kt, &pi1)?;
    let bad = e1.bad_places()?;
    let v1 = Place::Finite(pis.pi1_monic.clone());
    let v2 = Place::Finite(pis.pi2_monic.clone());
    let places: Vec<&Place> = bad.iter().map(|r| &r.place).collect();
    let mut want = vec![&v1, &v2];
    want.sort();
    if places != want {
        let names: Vec<String> = places.iter().map(|v| v.format("T")).collect();
        return Err(verify_fail(pis, format!("bad places {names:?}")));
    }
    for r in &bad {
        let ok = if r.place == v2 {
            matches!(r.reduction, Reduction::Multiplicative { .. }) && r.ord_j == Some(-1)
        } else {
            r.reduction
                == Reduction::Additive {
                    potential: Potential::Multiplicative,
                }
                && r.ord_j == Some(-2)
        };
        if !ok {
            return Err(verify_fail(
                pis,
                format!(
                    "{} at {} with ord j = {:?}",
                    r.reduction.label(),
                    r.place.format("T"),
                    r.ord_j
                ),
            ));
        }
    }

    let p = params.p();
    let eu0 = curve_e(&kt, &RatFunc::from_poly(pis.pi1.pow(p)))?;
    let prm = eu0.params();
    let ords = |v: &Place| -> Result<(i64, i64)> {
        let od = prm.delta.ord_at(v).ok_or(Error::Singular)?;
        let oc = prm
            .c4
            .ord_at(v)
            .ok_or_else(|| verify_fail(pis, "c4 = 0".into()))?;
        Ok((od, oc))
    };
    let eu0_at_pi1 = ords(&v1)?;
    let eu0_at_pi2 = ords(&v2)?;
    let p = p as i64;
    if eu0_at_pi1 != (8 * p, 2 * p) || eu0_at_pi2 != (p, 0) {
        return Err(verify_fail(
            pis,
            format!("E_u0 valuations {eu0_at_pi1:?} at π1, {eu0_at_pi2:?} at π2"),
        ));
    }
    if prm.delta.ord_at(&Place::Infinity) != Some(-36 * p) {
        return Err(verify_fail(pis, "ord Δ at ∞ is not -36p".into()));
    }

    let p0 = Point::Affine(kt.zero(), kt.zero());
    let q0 = point_q(&kt, &pi1);
    let sum = e1.add(&p0, &q0)?;
    let want = Point::Affine(kt.mul(&pi1, &pi1), kt.mul(&kt.mul(&pi1, &pi1), &pi1));
    if sum != want {
        return Err(verify_fail(pis, "P0 + Q0 != (π1^2, π1^3)".into()));
    }
    Ok(SpecializationReport {
        bad,
        eu0_at_pi1,
        eu0_at_pi2,
    })
}

#[derive(Clone, Debug)]
pub struct ScanHit {
    pub pis: PiPolys,
    pub report: SpecializationReport,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeStats {
    pub degree: usize,
    pub candidates: usize,
    pub hits: usize,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub hits: Vec<ScanHit>,
    pub per_degree: Vec<DegreeStats>,
}

impl ScanReport {
    /// Overall hit frequency; logs a warning outside [1/64, 1/4].
    pub fn frequency(&self) -> f64 {
        let cand: usize = self.per_degree.iter().map(|s| s.candidates).sum();
        let hits: usize = self.per_degree.iter().map(|s| s.hits).sum();
        if cand == 0 {
            return 0.0;
        }
        let f = hits as f64 / cand as f64;
        if !(1.0 / 64.0..=0.25).contains(&f) {
            warn!("scan hit frequency {f:.4} outside [1/64, 1/4] (heuristic 1/16)");
        }
        f
    }
}

/// Tests every monic irreducible u0 with degree in `degrees` for
/// irreducibility of π1 and π2 and verifies each hit.
pub fn scan_u0(
    params: &FamilyParams,
    degrees: RangeInclusive<usize>,
    threads: usize,
) -> Result<ScanReport> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    let mut hits = Vec::new();
    let mut per_degree = Vec::new();
    for n in degrees {
        if n == 0 {
            continue;
        }
        let big = if n > 1 {
            Some(make_field(params.p(), params.field.m() * n)?)
        } else {
            None
        };
        let cands: Vec<FqPoly> = monic_irreducibles(&params.field, n).collect();
        let results: Vec<Result<Option<ScanHit>>> = pool.install(|| {
            cands
                .par_iter()
                .map(|u0| {
                    let pis = pi_polys_in(params, u0, big.as_ref())?;
                    if !(pis.pi1_monic.is_irreducible() && pis.pi2_monic.is_irreducible()) {
                        return Ok(None);
                    }
                    let report = verify_specialization(params, &pis)?;
                    Ok(Some(ScanHit { pis, report }))
                })
                .collect()
        });
        let mut count = 0;
        for r in results {
            if let Some(h) = r? {
                hits.push(h);
                count += 1;
            }
        }
        info!("degree {n}: {count} hits among {} u0", cands.len());
        per_degree.push(DegreeStats {
            degree: n,
            candidates: cands.len(),
            hits: count,
        });
    }
    Ok(ScanReport { hits, per_degree })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaloisGroup {
    Reducible,
    C4,
    V4,
    D4,
}

impl GaloisGroup {
    pub fn label(&self) -> &'static str {
        match self {
            GaloisGroup::Reducible => "reducible",
            GaloisGroup::C4 => "C4",
            GaloisGroup::V4 => "V4",
            GaloisGroup::D4 => "D4",
        }
    }
}

/// Galois group of X^4 + aX^2 + b with the radicands of its quadratic
/// subfields (all three for D4, the one through a^2-4b for C4 and V4).
pub fn biquadratic_galois<K: Field>(
    k: &K,
    a: &K::Elem,
    b: &K::Elem,
) -> Result<(GaloisGroup, Vec<K::Elem>)> {
    let disc = k.sub(&k.mul(a, a), &k.mul(&k.from_int(4), b));
    if k.is_zero(b) || k.is_zero(&disc) {
        return Err(Error::InvalidInput("X^4 + aX^2 + b is inseparable".into()));
    }
    if k.is_square(&disc) {
        return Ok((GaloisGroup::Reducible, Vec::new()));
    }
    if let Some(s) = k.sqrt(b) {
        let two_s = k.add(&s, &s);
        if k.is_square(&k.sub(&two_s, a)) || k.is_square(&k.neg(&k.add(&two_s, a))) {
            return Ok((GaloisGroup::Reducible, Vec::new()));
        }
    }
    let bd = k.mul(b, &disc);
    if k.is_square(&bd) {
        Ok((GaloisGroup::C4, vec![disc]))
    } else if k.is_square(b) {
        Ok((GaloisGroup::V4, vec![disc]))
    } else {
        Ok((GaloisGroup::D4, vec![disc, b.clone(), bd]))
    }
}

/// True iff no product over a nonempty subset of `xs` is a square.
pub fn independent_mod_squares<K: Field>(k: &K, xs: &[K::Elem]) -> Result<bool> {
    if xs.iter().any(|x| k.is_zero(x)) {
        return Err(Error::InvalidInput("zero element".into()));
    }
    if xs.len() > 20 {
        return Err(Error::InvalidInput("too many elements".into()));
    }
    for mask in 1u32..(1 << xs.len()) {
        let mut prod = k.one();
        for (i, x) in xs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                prod = k.mul(&prod, x);
            }
        }
        if k.is_square(&prod) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients (A_i, B_i) of the quartics Π_i = T^4 + A_i T^2 + B_i over
/// κ(u) with h(T^2+u) = c Π1(T^p) and 1 + 4h(T^2+u) = 4c Π2(T^p).
pub fn pi12_coeffs(params: &FamilyParams) -> [(RatFunc, RatFunc); 2] {
    let k = params.rat_field();
    let f = &params.field;
    let p = params.p();
    let up = k.pow(&k.var(), p);
    let a = k.mul(&k.from_int(2), &up);
    let dc = f.mul(params.d, f.inv(params.c).expect("c nonzero"));
    let b1 = k.add(&k.mul(&up, &up), &k.mul(&k.constant(dc), &k.var()));
    let quarter_c = f.inv(f.mul(f.embed_int(4), params.c)).expect("nonzero");
    let b2 = k.add(&b1, &k.constant(quarter_c));
    [(a.clone(), b1), (a, b2)]
}

/// E_{h(t^2+u)} together with Q = (-h(t^2+u), h(t^2+u)^2).
pub fn mainfamily_curve(params: &FamilyParams, t: &RatFunc) -> Result<(CurveK, Point<RatFunc>)> {
    let k = params.rat_field();
    let s = k.add(&k.mul(t, t), &k.var());
    let h = h_of(params, &s);
    let e = curve_e(&k, &h)?;
    let q = point_q(&k, &h);
    Ok((e, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn params(p: u64, m: usize, c: i64, d: i64) -> FamilyParams {
        let f = make_field(p, m).unwrap();
        let (c, d) = (f.embed_int(c), f.embed_int(d));
        FamilyParams::new(f, c, d).unwrap()
    }

    fn poly(f: &FieldCtx, cs: &[i64]) -> FqPoly {
        Poly::from_ints(f.clone(), cs)
    }

    fn rf(f: &FieldCtx, n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(poly(f, n), poly(f, d)).unwrap()
    }

    #[test]
    fn h_examples() {
        let pr = params(3, 1, 1, 1);
        let f = pr.field.clone();
        assert_eq!(h_of(&pr, &rf(&f, &[], &[1])), rf(&f, &[0, 1], &[1]));
        let mut want = vec![0; 7];
        want[1] = 1;
        want[6] = 1;
        assert_eq!(h_of(&pr, &rf(&f, &[0, 1], &[1])), rf(&f, &want, &[1]));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let t = random_t(&f, 3, &mut rng);
            let h = h_of(&pr, &t);
            assert!(h.ord_at(&Place::Infinity).unwrap() < 0);
        }
    }

    #[test]
    fn h_agrees_with_polynomial_substitution() {
        let pr = params(5, 1, 2, 3);
        let k = pr.rat_field();
        let mut cs = vec![k.zero(); 11];
        cs[0] = k.mul(&k.constant(pr.d), &k.var());
        cs[10] = k.constant(pr.c);
        let hpoly = Poly::new(k.clone(), cs);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let t = random_t(&pr.field, 2, &mut rng);
            assert_eq!(crate::ff::substitute(&hpoly, &t), h_of(&pr, &t));
        }
    }

    #[test]
    fn curve_e_examples() {
        let f = make_field(5, 1).unwrap();
        let k = RatField::new(f.clone(), "T");
        let t = k.var();
        let e = curve_e(&k, &t).unwrap();
        let want = k.mul(
            &k.from_int(16),
            &k.mul(&k.pow(&t, 8), &k.add(&k.one(), &k.mul(&k.from_int(4), &t))),
        );
        assert_eq!(e.discriminant(), want);
        assert!(e.contains(&point_q(&k, &t)));
        let quarter = f.neg(f.inv(f.embed_int(4)).unwrap());
        assert_eq!(curve_e(&f, &quarter).unwrap_err(), Error::Singular);
        assert!(curve_e(&f, &Fq(0)).is_err());
    }

    #[test]
    fn root_number_examples() {
        let pr = params(3, 1, 1, 1);
        let f = pr.field.clone();
        let cases = [
            (rf(&f, &[0, 1], &[1]), 1),
            (rf(&f, &[1], &[1]), -1),
            (rf(&f, &[0, 1], &[1, 0, 1]), -1),
            (rf(&f, &[1], &[0, 1]), -1),
            (rf(&f, &[], &[1]), -1),
        ];
        for (t, w) in cases {
            assert_eq!(closed_form_w(&t), w, "{}", t.format("u"));
            assert_eq!(endglobal_w(&pr, &t), w, "{}", t.format("u"));
            assert_eq!(product_w(&pr, &t).unwrap(), w, "{}", t.format("u"));
        }
    }

    #[test]
    fn root_numbers_agree_on_random_t() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, c, d) in [(3, 1, 1), (5, 1, 2), (5, 2, 2)] {
            let pr = params(p, 1, c, d);
            for _ in 0..25 {
                let t = random_t(&pr.field, 3, &mut rng);
                let w = closed_form_w(&t);
                assert_eq!(endglobal_w(&pr, &t), w, "t = {}", t.format("u"));
                assert_eq!(product_w(&pr, &t).unwrap(), w, "t = {}", t.format("u"));
            }
        }
    }

    #[test]
    fn chowla_examples() {
        let f = make_field(3, 1).unwrap();
        let one = Fq(1);
        let (p0, p1, pu) = (poly(&f, &[]), poly(&f, &[1]), poly(&f, &[0, 1]));
        for (g1, g2, w) in [(&p1, &p1, -1), (&pu, &p1, -1), (&p0, &p1, -1)] {
            assert_eq!(chowla_mu_closed_form(one, one, g1, g2).unwrap(), w);
            assert_eq!(chowla_mu_direct(one, one, g1, g2), w);
        }
        for (g1, g2, w) in [(&p1, &p1, -1), (&pu, &p1, 1), (&p1, &pu, -1)] {
            assert_eq!(chowla_liouville_4p(one, one, g1, g2).unwrap(), w);
            assert_eq!(chowla_liouville_direct(one, one, g1, g2), w);
        }
        assert!(chowla_mu_closed_form(one, one, &pu, &pu).is_err());
        assert!(chowla_mu_closed_form(one, one, &p0, &p0).is_err());
        assert_eq!(chowla_liouville_4p(one, one, &pu, &pu).unwrap(), -1);
    }

    #[test]
    fn pi_polys_examples() {
        let pr = params(3, 1, 1, 1);
        let f = pr.field.clone();
        let r = pi_polys(&pr, &poly(&f, &[0, 1])).unwrap();
        assert_eq!(r.pi1, poly(&f, &[0, 0, 0, 0, 1]));
        let r = pi_polys(&pr, &poly(&f, &[2, 1])).unwrap();
        assert_eq!(r.u0_hat, Fq(1));
        assert_eq!(r.pi1, poly(&f, &[2, 0, 2, 0, 1]));
        assert!(r.pi1.is_irreducible());
        assert_eq!(r.pi2, poly(&f, &[0, 0, 2, 0, 1]));
        assert!(!r.pi2.is_irreducible());
    }

    #[test]
    fn scan_low_degrees() {
        let pr = params(3, 1, 1, 1);
        let rep = scan_u0(&pr, 1..=1, 1).unwrap();
        assert_eq!(
            rep.per_degree[0],
            DegreeStats {
                degree: 1,
                candidates: 3,
                hits: 0
            }
        );
        let rep = scan_u0(&pr, 1..=5, 2).unwrap();
        for h in &rep.hits {
            assert_eq!(
                h.pis.pi2,
                &Poly::one(h.pis.pi1.field().clone())
                    + &h.pis.pi1.scale(&h.pis.pi1.field().embed_int(4))
            );
            assert_eq!(h.report.bad.len(), 2);
        }
    }

    #[test]
    fn biquadratic_examples() {
        let f = make_field(3, 1).unwrap();
        let (g, subs) = biquadratic_galois(&f, &Fq(1), &Fq(2)).unwrap();
        assert_eq!(g, GaloisGroup::C4);
        assert_eq!(subs, vec![Fq(2)]);
        assert!(poly(&f, &[2, 0, 1, 0, 1]).is_irreducible());
        for (p, m) in [(3, 1), (5, 1), (3, 2), (7, 1)] {
            let f = make_field(p, m).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let disc = f.sub(f.mul(a, a), f.mul(f.embed_int(4), b));
                    if b.index() == 0 || disc.index() == 0 {
                        assert!(biquadratic_galois(&f, &a, &b).is_err());
                        continue;
                    }
                    let quartic = Poly::new(f.clone(), vec![b, Fq(0), a, Fq(0), Fq(1)]);
                    let (g, _) = biquadratic_galois(&f, &a, &b).unwrap();
                    let irreducible = quartic.is_irreducible();
                    assert_eq!(
                        g != GaloisGroup::Reducible,
                        irreducible,
                        "{}",
                        quartic.format("X")
                    );
                    if irreducible {
                        assert_eq!(g, GaloisGroup::C4);
                    }
                }
            }
        }
    }

    #[test]
    fn pi12_is_d4_and_independent() {
        for (p, c, d) in [
            (3, 1, 1),
            (3, 1, 2),
            (3, 2, 1),
            (5, 1, 1),
            (5, 1, 2),
            (5, 2, 1),
        ] {
            let pr = params(p, 1, c, d);
            let k = pr.rat_field();
            let mut xs = Vec::new();
            for (a, b) in pi12_coeffs(&pr) {
                let (g, subs) = biquadratic_galois(&k, &a, &b).unwrap();
                assert_eq!(g, GaloisGroup::D4);
                assert_eq!(subs.len(), 3);
                xs.push(b.clone());
                xs.push(subs[0].clone());
            }
            assert!(independent_mod_squares(&k, &xs).unwrap());
        }
        let pr = params(3, 1, 1, 1);
        let [(a1, b1), (_, b2)] = pi12_coeffs(&pr);
        let f = &pr.field;
        assert_eq!(a1, rf(f, &[0, 0, 0, 2], &[1]));
        assert_eq!(b1, rf(f, &[0, 1, 0, 0, 0, 0, 1], &[1]));
        assert_eq!(b2, rf(f, &[1, 1, 0, 0, 0, 0, 1], &[1]));
        let k = pr.rat_field();
        let u = k.var();
        assert!(!independent_mod_squares(&k, &[u.clone(), u.clone()]).unwrap());
        assert!(independent_mod_squares(&k, &[u]).unwrap());
    }

    #[test]
    fn mainfamily_root_number_is_plus_one() {
        let pr = params(3, 1, 1, 1);
        let f = pr.field.clone();
        for t in [
            rf(&f, &[], &[1]),
            rf(&f, &[0, 1], &[1]),
            rf(&f, &[1], &[0, 1]),
            rf(&f, &[1, 0, 1], &[1]),
        ] {
            let (e, q) = mainfamily_curve(&pr, &t).unwrap();
            assert!(e.contains(&q));
            assert_eq!(e.global_root_number().unwrap(), 1, "t = {}", t.format("u"));
        }
        let pr = params(5, 1, 2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let t = random_t(&pr.field, 2, &mut rng);
            let (e, _) = mainfamily_curve(&pr, &t).unwrap();
            assert_eq!(e.global_root_number().unwrap(), 1, "t = {}", t.format("u"));
        }
    }

    #[test]
    fn mainfamily_point_has_infinite_order() {
        let pr = params(3, 1, 1, 1);
        let (e, q) = mainfamily_curve(&pr, &rf(&pr.field, &[], &[1])).unwrap();
        let cert = e.infinite_order_certificate(&q, 4).unwrap();
        assert!(
            matches!(cert, crate::ec::Certificate::InfiniteOrder { .. }),
            "{cert:?}"
        );
    }
}
