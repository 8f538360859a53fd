//! Small exhaustive oracle suites, runnable from the command line.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ec::{point_count, trace_of_frobenius, Certificate};
use crate::error::Result;
use crate::family::{self, FamilyParams};
use crate::ff::{Place, RatField};
use crate::field::Field;
use crate::gf::{make_field, Fq};
use crate::nagao::{self, Method};
use crate::upoly::{monic_polys, FqPoly, Poly};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

fn check(name: &'static str, f: impl FnOnce() -> Result<(usize, Option<String>)>) -> Check {
    match f() {
        Ok((cases, None)) => Check {
            name,
            passed: true,
            cases,
            detail: String::new(),
        },
        Ok((cases, Some(d))) => Check {
            name,
            passed: false,
            cases,
            detail: d,
        },
        Err(e) => Check {
            name,
            passed: false,
            cases: 0,
            detail: e.to_string(),
        },
    }
}

fn moebius_methods() -> Result<(usize, Option<String>)> {
    let mut n = 0;
    for (p, dmax) in [(3, 5), (5, 3)] {
        let f = make_field(p, 1)?;
        for d in 0..=dmax {
            for g in monic_polys(&f, d) {
                n += 1;
                if g.moebius_factor() != g.moebius_disc() {
                    return Ok((n, Some(format!("GF({p}): {}", g.format("u")))));
                }
            }
        }
    }
    Ok((n, None))
}

fn small_polys(f: &crate::gf::FieldCtx, dmax: usize) -> Vec<FqPoly> {
    let mut out = vec![Poly::zero(f.clone())];
    for d in 0..=dmax {
        for g in monic_polys(f, d) {
            for c in f.elements().skip(1) {
                out.push(g.scale(&c));
            }
        }
    }
    out
}

fn chowla() -> Result<(usize, Option<String>)> {
    let f = make_field(3, 1)?;
    let polys = small_polys(&f, 1);
    let mut n = 0;
    for a in f.elements().skip(1) {
        for b in f.elements().skip(1) {
            for g1 in &polys {
                for g2 in &polys {
                    if g1.is_zero() && g2.is_zero() {
                        continue;
                    }
                    n += 1;
                    let l = family::chowla_liouville_4p(a, b, g1, g2)?;
                    if l != family::chowla_liouville_direct(a, b, g1, g2) {
                        return Ok((
                            n,
                            Some(format!(
                                "λ at g1 = {}, g2 = {}",
                                g1.format("u"),
                                g2.format("u")
                            )),
                        ));
                    }
                    if !g1.gcd(g2).is_one() {
                        continue;
                    }
                    if family::chowla_mu_closed_form(a, b, g1, g2)?
                        != family::chowla_mu_direct(a, b, g1, g2)
                    {
                        return Ok((
                            n,
                            Some(format!(
                                "μ at g1 = {}, g2 = {}",
                                g1.format("u"),
                                g2.format("u")
                            )),
                        ));
                    }
                }
            }
        }
    }
    Ok((n, None))
}

fn root_numbers(seed: u64) -> Result<(usize, Option<String>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 0;
    for p in [3, 5] {
        let f = make_field(p, 1)?;
        let pr = FamilyParams::new(f.clone(), Fq(1), Fq(1))?;
        for _ in 0..10 {
            let t = family::random_t(&f, 2, &mut rng);
            n += 1;
            let w = family::closed_form_w(&t);
            let (e, pw) = (family::endglobal_w(&pr, &t), family::product_w(&pr, &t)?);
            if e != w || pw != w {
                return Ok((n, Some(format!("t = {}: {w} {e} {pw}", t.format("u")))));
            }
            let (curve, _) = family::mainfamily_curve(&pr, &t)?;
            if curve.global_root_number()? != 1 {
                return Ok((
                    n,
                    Some(format!("W(E_h(t^2+u)) != 1 at t = {}", t.format("u"))),
                ));
            }
        }
    }
    Ok((n, None))
}

fn certificate() -> Result<(usize, Option<String>)> {
    for p in [3, 5, 7] {
        let f = make_field(p, 1)?;
        let k = RatField::new(f.clone(), "T");
        let t = k.var();
        let e = family::curve_e(&k, &t)?;
        let cert = e.infinite_order_certificate(&family::point_q(&k, &t), 4)?;
        let want = Certificate::InfiniteOrder {
            place: Place::Finite(Poly::from_ints(f.clone(), &[1, 1])),
            k: 2,
        };
        if cert != want {
            return Ok((p as usize, Some(format!("p = {p}: {cert:?}"))));
        }
    }
    Ok((3, None))
}

fn traces(seed: u64) -> Result<(usize, Option<String>)> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 0;
    for (p, m) in [(3, 1), (5, 1), (3, 2), (5, 2)] {
        let f = make_field(p, m)?;
        let q = f.q();
        let mut done = 0;
        while done < 25 {
            let (a, b) = (Fq(rng.gen_range(0..q)), Fq(rng.gen_range(0..q)));
            let Ok(tr) = trace_of_frobenius(&f, a, b) else {
                continue;
            };
            done += 1;
            n += 1;
            let count = point_count(&f, a, b);
            if tr != q as i64 + 1 - count || tr * tr > 4 * q as i64 {
                return Ok((n, Some(format!("GF({q}): A = {a:?}, B = {b:?}"))));
            }
        }
    }
    Ok((n, None))
}

fn nagao_small() -> Result<(usize, Option<String>)> {
    let f = make_field(3, 1)?;
    let pr = FamilyParams::new(f, Fq(1), Fq(1))?;
    for (n, want) in [(2, 17), (3, 173)] {
        let d = nagao::nagao_left_sum(&pr, n, Method::Direct, 1)?;
        let t = nagao::nagao_left_sum(&pr, n, Method::Tabulated, 1)?;
        if d != want || t != want {
            return Ok((
                n,
                Some(format!(
                    "n = {n}: direct {d}, tabulated {t}, expected {want}"
                )),
            ));
        }
    }
    Ok((2, None))
}

fn scan() -> Result<(usize, Option<String>)> {
    let f = make_field(3, 1)?;
    let pr = FamilyParams::new(f, Fq(1), Fq(1))?;
    let rep = family::scan_u0(&pr, 1..=5, 1)?;
    if rep.hits.is_empty() {
        return Ok((0, Some("no u0 of degree <= 5 found".into())));
    }
    Ok((rep.hits.len(), None))
}

fn galois() -> Result<(usize, Option<String>)> {
    let mut n = 0;
    for p in [3, 5] {
        let f = make_field(p, 1)?;
        let pr = FamilyParams::new(f.clone(), Fq(1), Fq(1))?;
        let k = pr.rat_field();
        for (a, b) in family::pi12_coeffs(&pr) {
            n += 1;
            let (g, _) = family::biquadratic_galois(&k, &a, &b)?;
            if g != family::GaloisGroup::D4 {
                return Ok((n, Some(format!("GF({p}): {}", g.label()))));
            }
        }
        for a in f.elements() {
            for b in f.elements() {
                let Ok((g, _)) = family::biquadratic_galois(&f, &a, &b) else {
                    continue;
                };
                n += 1;
                let quartic = Poly::new(f.clone(), vec![b, Fq(0), a, Fq(0), f.one()]);
                if (g != family::GaloisGroup::Reducible) != quartic.is_irreducible() {
                    return Ok((n, Some(quartic.format("X"))));
                }
            }
        }
    }
    Ok((n, None))
}

pub fn run(seed: u64) -> Vec<Check> {
    vec![
        check("moebius factor = moebius disc", moebius_methods),
        check("chowla closed forms", chowla),
        check(
            "root numbers (closed, endglobal, product, main family)",
            || root_numbers(seed),
        ),
        check("infinite order certificate on E_T", certificate),
        check("trace = point count, Hasse bound", || traces(seed)),
        check("nagao sums q=3, n=2,3", nagao_small),
        check("u0 scan degrees 1..5", scan),
        check("biquadratic galois groups", galois),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_pass() {
        for c in super::run(0) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
            assert!(c.cases > 0, "{}", c.name);
        }
    }
}
