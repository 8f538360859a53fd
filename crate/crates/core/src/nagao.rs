//! Nagao-type sums for the family y^2 = x^3 + h(s^2+u) x^2 - h(s^2+u)^3 x:
//! for every place π of degree n, sum the Legendre symbol of the cubic
//! over all s and x in κ[u]/(π).

use log::info;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilyParams;
use crate::ff::Place;
use crate::gf::{make_field, FieldCtx, Fq};
use crate::upoly::{
    count_monic_irreducibles, monic_irreducibles, residue_field_in, FqPoly, ResidueField,
};

/// How the inner sum over x is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Evaluate the cubic at every (s, x).
    Direct,
    /// Tabulate S(A) = Σ_x χ(x^3 + A x^2 - A^3 x) once per residue field,
    /// then sum S(A(s)) per place. Same integer, far fewer evaluations.
    #[default]
    Tabulated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NagaoRow {
    pub q: u64,
    pub n: usize,
    pub left: i64,
    #[serde(serialize_with = "ser_right")]
    pub right: Ratio<u128>,
    pub ratio: String,
}

fn ser_right<S: serde::Serializer>(r: &Ratio<u128>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_decimal(
        *r.numer() as i128,
        *r.denom() as i128,
        false,
    ))
}

impl NagaoRow {
    pub fn right_str(&self) -> String {
        format_decimal(
            *self.right.numer() as i128,
            *self.right.denom() as i128,
            false,
        )
    }

    pub fn csv_header() -> &'static str {
        "q,n,left,right,ratio"
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.q,
            self.n,
            self.left,
            self.right_str(),
            self.ratio
        )
    }
}

/// `num/den` truncated toward zero to 3 decimals. With `bare`, a zero
/// integer part is dropped (".964").
pub fn format_decimal(num: i128, den: i128, bare: bool) -> String {
    assert!(den != 0);
    let neg = (num < 0) != (den < 0);
    let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
    let scaled = n * 1000 / d;
    let (int, frac) = (scaled / 1000, scaled % 1000);
    let sign = if neg && scaled != 0 { "-" } else { "" };
    if bare && int == 0 {
        format!("{sign}.{frac:03}")
    } else {
        format!("{sign}{int}.{frac:03}")
    }
}

/// A(s) = c(s^2 + û)^{2p} + d û in the residue field.
fn a_of(params: &FamilyParams, rf: &ResidueField, s: Fq) -> Fq {
    let k = rf.field();
    let (c, d, uh) = (rf.map_base(params.c), rf.map_base(params.d), rf.root());
    let base = k.add(k.mul(s, s), uh);
    k.add(k.mul(c, k.pow(base, 2 * params.p())), k.mul(d, uh))
}

/// Σ_x χ(x^3 + A x^2 - A^3 x) over the whole field.
pub fn cubic_sum(k: &FieldCtx, a: Fq) -> i64 {
    let a3 = k.mul(k.mul(a, a), a);
    let mut acc = 0i64;
    for x in k.elements() {
        let t = k.sub(k.mul(x, k.add(x, a)), a3);
        acc += k.quad_char(k.mul(x, t)) as i64;
    }
    acc
}

/// Inner double sum Σ_s Σ_x for one place π.
pub fn place_sum(params: &FamilyParams, rf: &ResidueField, table: Option<&[i64]>) -> i64 {
    let k = rf.field();
    k.elements()
        .map(|s| {
            let a = a_of(params, rf, s);
            match table {
                Some(t) => t[a.index() as usize],
                None => cubic_sum(k, a),
            }
        })
        .sum()
}

fn build_pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))
}

fn residue_big(params: &FamilyParams, n: usize) -> Result<Option<FieldCtx>> {
    Ok(if n > 1 {
        Some(make_field(params.p(), params.field.m() * n)?)
    } else {
        None
    })
}

/// The triple sum over places of degree n, every s and every x.
/// Singular fibres are included.
pub fn nagao_left_sum(
    params: &FamilyParams,
    n: usize,
    method: Method,
    threads: usize,
) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let big = residue_big(params, n)?;
    let places: Vec<FqPoly> = monic_irreducibles(&params.field, n).collect();
    let k = big.clone().unwrap_or_else(|| params.field.clone());
    let qn = k.q();
    let evals = places.len() as u128 * (qn as u128) * (qn as u128);
    info!(
        "q = {}, n = {n}: {} places, {evals} cubic evaluations ({method:?})",
        params.field.q(),
        places.len()
    );
    let pool = build_pool(threads)?;
    let sums: Vec<Result<i64>> = pool.install(|| {
        let table: Option<Vec<i64>> = match method {
            Method::Direct => None,
            Method::Tabulated => Some(
                k.elements()
                    .collect::<Vec<_>>()
                    .par_iter()
                    .map(|&a| cubic_sum(&k, a))
                    .collect(),
            ),
        };
        places
            .par_iter()
            .map(|pi| {
                let rf = residue_field_in(&params.field, pi, big.as_ref())?;
                Ok(place_sum(params, &rf, table.as_deref()))
            })
            .collect()
    });
    sums.into_iter().sum()
}

pub fn nagao_row(
    params: &FamilyParams,
    n: usize,
    method: Method,
    threads: usize,
) -> Result<NagaoRow> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "n must be at least 2: at degree 1 the fibre at infinity is not an elliptic curve"
                .into(),
        ));
    }
    let q = params.field.q();
    let left = nagao_left_sum(params, n, method, threads)?;
    let qq = (q as u128).pow(2 * n as u32);
    let right = Ratio::new(qq, n as u128);
    let ratio = if left == 0 {
        "inf".to_string()
    } else {
        format_decimal(qq as i128, n as i128 * left as i128, true)
    };
    Ok(NagaoRow {
        q,
        n,
        left,
        right,
        ratio,
    })
}

/// Rows for n = 2..=n_max.
pub fn nagao_table(
    params: &FamilyParams,
    n_max: usize,
    method: Method,
    threads: usize,
) -> Result<Vec<NagaoRow>> {
    (2..=n_max)
        .map(|n| nagao_row(params, n, method, threads))
        .collect()
}

/// Pieces of Σ_s a(E_s) at a finite place v, s over P^1(F_v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvParts {
    /// Σ over affine s with a smooth fibre of Σ_x χ(f_s(x)) (that is, -a).
    pub affine_smooth: i64,
    /// The same character sum over affine s with a singular fibre.
    pub affine_singular: i64,
    /// -a of the fibre at s = ∞, which on the model rescaled by
    /// s^{3p} is y^2 = x^3 - c^3 x (always smooth).
    pub infinity: i64,
    pub norm: u64,
}

impl AvParts {
    /// A_v = (1/Nv) Σ a over smooth fibres.
    pub fn a_v(&self) -> Ratio<i64> {
        Ratio::new(-(self.affine_smooth + self.infinity), self.norm as i64)
    }
}

fn fibre_smooth(k: &FieldCtx, a: Fq) -> bool {
    a.index() != 0 && k.add(Fq(1), k.mul(k.embed_int(4), a)).index() != 0
}

pub fn a_v_parts(params: &FamilyParams, v: &Place) -> Result<AvParts> {
    let Place::Finite(pi) = v else {
        return Err(Error::InvalidInput("A_v needs a finite place".into()));
    };
    let big = residue_big(params, pi.degree().expect("nonzero"))?;
    let rf = residue_field_in(&params.field, pi, big.as_ref())?;
    let k = rf.field();
    let (mut affine_smooth, mut affine_singular) = (0, 0);
    for s in k.elements() {
        let a = a_of(params, &rf, s);
        let t = cubic_sum(k, a);
        if fibre_smooth(k, a) {
            affine_smooth += t;
        } else {
            affine_singular += t;
        }
    }
    let c = rf.map_base(params.c);
    let c3 = k.mul(k.mul(c, c), c);
    let infinity = k
        .elements()
        .map(|x| k.quad_char(k.mul(x, k.sub(k.mul(x, x), c3))) as i64)
        .sum();
    Ok(AvParts {
        affine_smooth,
        affine_singular,
        infinity,
        norm: k.q(),
    })
}

pub fn a_v(params: &FamilyParams, v: &Place) -> Result<Ratio<i64>> {
    Ok(a_v_parts(params, v)?.a_v())
}

/// Number of cubic evaluations the direct method performs at degree n.
pub fn evaluation_count(q: u64, n: usize) -> u128 {
    count_monic_irreducibles(q, n) as u128 * (q as u128).pow(2 * n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ec::trace_of_frobenius;
    use crate::upoly::{residue_field, Poly};

    fn params(p: u64, m: usize) -> FamilyParams {
        let f = make_field(p, m).unwrap();
        FamilyParams::new(f, Fq(1), Fq(1)).unwrap()
    }

    #[test]
    fn decimal_format() {
        assert_eq!(format_decimal(81, 2, false), "40.500");
        assert_eq!(format_decimal(81, 34, true), "2.382");
        assert_eq!(format_decimal(177147, 183632, true), ".964");
        assert_eq!(format_decimal(390625, 387208, true), "1.008");
        assert_eq!(format_decimal(-1, 3, true), "-.333");
        assert_eq!(format_decimal(0, 3, true), ".000");
    }

    #[test]
    fn small_rows() {
        let pr = params(3, 1);
        let row = nagao_row(&pr, 2, Method::Direct, 1).unwrap();
        assert_eq!(
            (row.left, row.right_str().as_str(), row.ratio.as_str()),
            (17, "40.500", "2.382")
        );
        assert_eq!(nagao_left_sum(&pr, 3, Method::Direct, 2).unwrap(), 173);
        assert_eq!(nagao_left_sum(&pr, 3, Method::Tabulated, 3).unwrap(), 173);
        let pr5 = params(5, 1);
        assert_eq!(nagao_left_sum(&pr5, 2, Method::Direct, 2).unwrap(), 228);
        assert!(nagao_row(&pr, 1, Method::Direct, 1).is_err());
        assert_eq!(row.csv_line(), "3,2,17,40.500,2.382");
    }

    #[test]
    fn twist_identity_route() {
        // x = A x' turns the cubic into A^3 (x'^3 + x'^2 - A x'), so
        // S(A) = χ(A) Σ_x χ(x^3 + x^2 - A x).
        for (p, n) in [(3, 2), (3, 3), (3, 4), (5, 2)] {
            let pr = params(p, 1);
            let big = residue_big(&pr, n).unwrap();
            let k = big.clone().unwrap();
            let twisted = |a: Fq| -> i64 {
                let s: i64 = k
                    .elements()
                    .map(|x| k.quad_char(k.mul(x, k.sub(k.add(k.mul(x, x), x), a))) as i64)
                    .sum();
                k.quad_char(a) as i64 * s
            };
            let mut total = 0;
            for pi in monic_irreducibles(&pr.field, n) {
                let rf = residue_field_in(&pr.field, &pi, big.as_ref()).unwrap();
                total += k
                    .elements()
                    .map(|s| twisted(a_of(&pr, &rf, s)))
                    .sum::<i64>();
            }
            assert_eq!(
                total,
                nagao_left_sum(&pr, n, Method::Tabulated, 2).unwrap(),
                "p={p} n={n}"
            );
        }
    }

    #[test]
    fn inner_sum_is_minus_trace() {
        let pr = params(3, 1);
        let f = &pr.field;
        for pi in monic_irreducibles(f, 3).take(4) {
            let rf = residue_field(f, &pi).unwrap();
            let k = rf.field();
            for s in k.elements().step_by(4) {
                let a = a_of(&pr, &rf, s);
                if !fibre_smooth(k, a) {
                    continue;
                }
                let b = k.neg(k.mul(k.mul(a, a), a));
                assert_eq!(cubic_sum(k, a), -trace_of_frobenius(k, a, b).unwrap());
            }
        }
    }

    #[test]
    fn a_v_examples() {
        let pr = params(3, 1);
        let f = &pr.field;
        let v = Place::Finite(Poly::from_ints(f.clone(), &[0, 1]));
        let parts = a_v_parts(&pr, &v).unwrap();
        let av = parts.a_v();
        let nv = 3f64;
        let bound = 2.0 * (nv + 1.0) / nv.sqrt();
        assert!((*av.numer() as f64 / *av.denom() as f64).abs() <= bound);
        let mut total = 0;
        for pi in monic_irreducibles(f, 2) {
            let parts = a_v_parts(&pr, &Place::Finite(pi.clone())).unwrap();
            let rf = residue_field(f, &pi).unwrap();
            assert_eq!(
                parts.affine_smooth + parts.affine_singular,
                place_sum(&pr, &rf, None)
            );
            total += parts.affine_smooth + parts.affine_singular;
        }
        assert_eq!(total, 17);
        assert!(a_v(&pr, &Place::Infinity).is_err());
    }

    #[test]
    fn thread_count_does_not_matter() {
        let pr = params(3, 1);
        let a = nagao_left_sum(&pr, 4, Method::Direct, 1).unwrap();
        let b = nagao_left_sum(&pr, 4, Method::Direct, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, 1186);
        assert_eq!(evaluation_count(3, 6), 116 * 531441);
    }
}
