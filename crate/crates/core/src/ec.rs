//! Curves `y^2 = x^3 + A x^2 + B x`: invariants, group law, reduction
//! types and root numbers over κ(u), a torsion certificate, and traces of
//! Frobenius over finite fields.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{chi_v, Place, RatField, RatFunc};
use crate::field::Field;
use crate::gf::{FieldCtx, Fq};
use crate::upoly::FqPoly;

/// `y^2 = x^3 + A x^2 + B x` over `K`, with nonzero discriminant.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveAB<K: Field> {
    field: K,
    a: K::Elem,
    b: K::Elem,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Point<E> {
    Infinity,
    Affine(E, E),
}

impl<E> Point<E> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

/// Δ, c4, c6 and j of the model.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveParams<E> {
    pub delta: E,
    pub c4: E,
    pub c6: E,
    pub j: E,
}

impl<K: Field> CurveAB<K> {
    pub fn new(field: K, a: K::Elem, b: K::Elem) -> Result<Self> {
        let c = CurveAB { field, a, b };
        if c.field.is_zero(&c.discriminant()) {
            return Err(Error::Singular);
        }
        Ok(c)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn a(&self) -> &K::Elem {
        &self.a
    }

    pub fn b(&self) -> &K::Elem {
        &self.b
    }

    /// Δ = 16 B^2 (A^2 - 4B).
    pub fn discriminant(&self) -> K::Elem {
        let f = &self.field;
        let a2 = f.mul(&self.a, &self.a);
        let b2 = f.mul(&self.b, &self.b);
        let t = f.sub(&a2, &f.mul(&f.from_int(4), &self.b));
        f.mul(&f.mul(&f.from_int(16), &b2), &t)
    }

    pub fn params(&self) -> CurveParams<K::Elem> {
        let f = &self.field;
        let a2 = f.mul(&self.a, &self.a);
        let delta = self.discriminant();
        // c4 = 16(A^2 - 3B), c6 = -32 A (2A^2 - 9B)
        let c4 = f.mul(
            &f.from_int(16),
            &f.sub(&a2, &f.mul(&f.from_int(3), &self.b)),
        );
        let inner = f.sub(&f.mul(&f.from_int(2), &a2), &f.mul(&f.from_int(9), &self.b));
        let c6 = f.mul(&f.mul(&f.from_int(-32), &self.a), &inner);
        let c43 = f.mul(&f.mul(&c4, &c4), &c4);
        let j = f.div(&c43, &delta).expect("smooth model");
        CurveParams { delta, c4, c6, j }
    }

    fn rhs(&self, x: &K::Elem) -> K::Elem {
        let f = &self.field;
        // x^3 + A x^2 + B x = x (x (x + A) + B)
        f.mul(x, &f.add(&f.mul(x, &f.add(x, &self.a)), &self.b))
    }

    pub fn contains(&self, p: &Point<K::Elem>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => self.field.mul(y, y) == self.rhs(x),
        }
    }

    pub fn point(&self, x: K::Elem, y: K::Elem) -> Result<Point<K::Elem>> {
        let p = Point::Affine(x, y);
        if !self.contains(&p) {
            return Err(Error::NotOnCurve);
        }
        Ok(p)
    }

    pub fn neg(&self, p: &Point<K::Elem>) -> Point<K::Elem> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), self.field.neg(y)),
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &Point<K::Elem>, q: &Point<K::Elem>) -> Result<Point<K::Elem>> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::NotOnCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &Point<K::Elem>, q: &Point<K::Elem>) -> Point<K::Elem> {
        let f = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        if x1 == x2 {
            if f.is_zero(&f.add(y1, y2)) {
                return Point::Infinity;
            }
            return self.double_unchecked(p);
        }
        let lam = f.div(&f.sub(y2, y1), &f.sub(x2, x1)).expect("distinct x");
        let x3 = f.sub(&f.sub(&f.sub(&f.mul(&lam, &lam), &self.a), x1), x2);
        let y3 = f.sub(&f.mul(&lam, &f.sub(x1, &x3)), y1);
        Point::Affine(x3, y3)
    }

    pub fn double(&self, p: &Point<K::Elem>) -> Result<Point<K::Elem>> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        Ok(self.double_unchecked(p))
    }

    fn double_unchecked(&self, p: &Point<K::Elem>) -> Point<K::Elem> {
        let f = &self.field;
        let Point::Affine(x, y) = p else {
            return Point::Infinity;
        };
        if f.is_zero(y) {
            return Point::Infinity;
        }
        let x2 = f.mul(x, x);
        let num = f.add(
            &f.add(
                &f.mul(&f.from_int(3), &x2),
                &f.mul(&f.from_int(2), &f.mul(&self.a, x)),
            ),
            &self.b,
        );
        let lam = f.div(&num, &f.mul(&f.from_int(2), y)).expect("y != 0");
        let x3 = f.sub(
            &f.sub(&f.mul(&lam, &lam), &self.a),
            &f.mul(&f.from_int(2), x),
        );
        let y3 = f.sub(&f.mul(&lam, &f.sub(x, &x3)), y);
        Point::Affine(x3, y3)
    }

    /// Doubling through the closed form
    /// `x' = ((x^2 - B)/2y)^2`,
    /// `y' = -(3x^2 + 2Ax + B)/(2y) * ((x^2 - B)/2y)^2 + (x^3 - Bx)/2y`.
    pub fn double_closed_form(&self, p: &Point<K::Elem>) -> Result<Point<K::Elem>> {
        let f = &self.field;
        let Point::Affine(x, y) = p else {
            return Ok(Point::Infinity);
        };
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        if f.is_zero(y) {
            return Ok(Point::Infinity);
        }
        let two_y = f.mul(&f.from_int(2), y);
        let x2 = f.mul(x, x);
        let r = f.div(&f.sub(&x2, &self.b), &two_y).expect("y != 0");
        let r2 = f.mul(&r, &r);
        let slope_num = f.add(
            &f.add(
                &f.mul(&f.from_int(3), &x2),
                &f.mul(&f.from_int(2), &f.mul(&self.a, x)),
            ),
            &self.b,
        );
        let slope = f.div(&slope_num, &two_y).expect("y != 0");
        let tail_num = f.sub(&f.mul(&x2, x), &f.mul(&self.b, x));
        let tail = f.div(&tail_num, &two_y).expect("y != 0");
        let y3 = f.add(&f.neg(&f.mul(&slope, &r2)), &tail);
        Ok(Point::Affine(r2, y3))
    }

    /// `[n]P` for n >= 0.
    pub fn mul(&self, p: &Point<K::Elem>, mut n: u64) -> Result<Point<K::Elem>> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        let mut acc = Point::Infinity;
        let mut base = p.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.double_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// The model `y^2 = x^3 + g^2 A x^2 + g^4 B x`, isomorphic via
    /// `(x, y) -> (g^2 x, g^3 y)`.
    pub fn rescale(&self, g: &K::Elem) -> Result<Self> {
        let f = &self.field;
        let g2 = f.mul(g, g);
        let g4 = f.mul(&g2, &g2);
        CurveAB::new(f.clone(), f.mul(&g2, &self.a), f.mul(&g4, &self.b))
    }

    pub fn map_point(&self, p: &Point<K::Elem>, g: &K::Elem) -> Point<K::Elem> {
        let f = &self.field;
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => {
                let g2 = f.mul(g, g);
                Point::Affine(f.mul(&g2, x), f.mul(&f.mul(&g2, g), y))
            }
        }
    }
}

/// Reduction type at a place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reduction {
    Good,
    Multiplicative { split: bool },
    Additive { potential: Potential },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Potential {
    Good,
    Multiplicative,
}

impl Reduction {
    pub fn label(&self) -> &'static str {
        match self {
            Reduction::Good => "good",
            Reduction::Multiplicative { split: true } => "split multiplicative",
            Reduction::Multiplicative { split: false } => "nonsplit multiplicative",
            Reduction::Additive {
                potential: Potential::Good,
            } => "additive (potentially good)",
            Reduction::Additive {
                potential: Potential::Multiplicative,
            } => "additive (potentially multiplicative)",
        }
    }
}

/// Verdict at one place, with the valuations it was derived from.
/// `None` valuations stand for +∞.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub place: Place,
    pub reduction: Reduction,
    pub root_number: i8,
    pub ord_delta: i64,
    pub ord_c4: Option<i64>,
    pub ord_j: Option<i64>,
    /// Order of inertia image in potentially good cases.
    pub e: Option<u32>,
}

/// Outcome of the integrality-based certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `[2^k]P` is non-integral at `place` on an integral model: infinite order.
    InfiniteOrder {
        place: Place,
        k: usize,
    },
    /// `[2^k]P = O`.
    Torsion {
        k: usize,
    },
    Inconclusive,
}

pub type CurveK = CurveAB<RatField>;

impl CurveAB<RatField> {
    /// Classifies the reduction at `v` and computes the local root number.
    pub fn reduction(&self, v: &Place) -> Result<ReductionReport> {
        let params = self.params();
        self.reduction_with(&params, v)
    }

    pub fn reduction_with(
        &self,
        params: &CurveParams<RatFunc>,
        v: &Place,
    ) -> Result<ReductionReport> {
        let base = self.field.base().clone();
        let ord_delta = params.delta.ord_at(v).ok_or(Error::Singular)?;
        let ord_c4 = params.c4.ord_at(v);
        let ord_j = ord_c4.map(|c| 3 * c - ord_delta);
        let minus = |n: i64| base.embed_int(n);
        if ord_j.is_none_or(|j| j >= 0) {
            let r = ord_delta.rem_euclid(12);
            if r == 0 {
                return Ok(ReductionReport {
                    place: v.clone(),
                    reduction: Reduction::Good,
                    root_number: 1,
                    ord_delta,
                    ord_c4,
                    ord_j,
                    e: Some(1),
                });
            }
            let e = 12 / gcd(r as u32, 12);
            if e == 12 {
                return Err(Error::Inconsistent(format!(
                    "e = 12 at {} (ord Δ = {ord_delta})",
                    v.format(self.field.var_name())
                )));
            }
            if base.p() == 3 && e.is_multiple_of(3) {
                return Err(Error::Inconsistent(format!(
                    "3 | e = {e} in characteristic 3 at {}",
                    v.format(self.field.var_name())
                )));
            }
            let w = match e {
                2 | 6 => chi_v(&base, v, minus(-1)),
                3 => chi_v(&base, v, minus(-3)),
                4 => chi_v(&base, v, minus(-2)),
                _ => unreachable!("e divides 12"),
            };
            return Ok(ReductionReport {
                place: v.clone(),
                reduction: Reduction::Additive {
                    potential: Potential::Good,
                },
                root_number: w,
                ord_delta,
                ord_c4,
                ord_j,
                e: Some(e),
            });
        }
        let oc4 = ord_c4.expect("j has a pole, so c4 != 0");
        let (reduction, w) = if oc4.rem_euclid(4) == 0 {
            let minus_c6 = self.field.neg(&params.c6);
            let split = minus_c6.is_square_in_completion(v)?;
            (
                Reduction::Multiplicative { split },
                if split { -1 } else { 1 },
            )
        } else {
            (
                Reduction::Additive {
                    potential: Potential::Multiplicative,
                },
                chi_v(&base, v, minus(-1)),
            )
        };
        Ok(ReductionReport {
            place: v.clone(),
            reduction,
            root_number: w,
            ord_delta,
            ord_c4,
            ord_j,
            e: None,
        })
    }

    /// Places that can be bad: zeros and poles of B and A^2 - 4B, poles of
    /// A, and ∞. Everything else has unit Δ and integral coefficients.
    pub fn candidate_places(&self) -> Vec<Place> {
        let f = &self.field;
        let disc_part = f.sub(&f.mul(&self.a, &self.a), &f.mul(&f.from_int(4), &self.b));
        let mut polys: Vec<FqPoly> = vec![
            self.a.den().clone(),
            self.b.num().clone(),
            self.b.den().clone(),
            disc_part.num().clone(),
            disc_part.den().clone(),
        ];
        polys.retain(|p| !p.is_constant());
        let mut rads: Vec<FqPoly> = polys
            .iter()
            .map(|p| {
                p.squarefree_decomposition()
                    .into_iter()
                    .fold(FqPoly::one(p.field().clone()), |acc, (g, _)| &acc * &g)
            })
            .collect();
        rads.sort();
        rads.dedup();
        let mut irr: Vec<FqPoly> = Vec::new();
        for r in rads {
            irr.extend(r.factor(0).factors.into_iter().map(|(g, _)| g));
        }
        irr.sort();
        irr.dedup();
        let mut out: Vec<Place> = irr.into_iter().map(Place::Finite).collect();
        out.push(Place::Infinity);
        out
    }

    /// Reports at every place of bad reduction, finite places first.
    pub fn bad_places(&self) -> Result<Vec<ReductionReport>> {
        let params = self.params();
        let mut out = Vec::new();
        for v in self.candidate_places() {
            let r = self.reduction_with(&params, &v)?;
            if r.reduction != Reduction::Good {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Product of local root numbers over the bad places.
    pub fn global_root_number(&self) -> Result<i8> {
        Ok(self.bad_places()?.iter().map(|r| r.root_number).product())
    }

    /// Doubles `P` on an integral model until a coordinate acquires a pole
    /// at a finite place (infinite order), the identity appears (torsion),
    /// or `max_doublings` is exhausted. Requires j not to be a p-th power.
    pub fn infinite_order_certificate(
        &self,
        p: &Point<RatFunc>,
        max_doublings: usize,
    ) -> Result<Certificate> {
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        let params = self.params();
        if params.c4.is_zero() || params.j.is_pth_power() {
            return Err(Error::CriterionInapplicable("j is a p-th power".into()));
        }
        let gamma_poly = lcm(self.a.den(), self.b.den());
        let gamma = RatFunc::from_poly(gamma_poly);
        let model = self.rescale(&gamma)?;
        let mut cur = self.map_point(p, &gamma);
        for k in 0..=max_doublings {
            match &cur {
                Point::Infinity => return Ok(Certificate::Torsion { k }),
                Point::Affine(x, y) => {
                    let den = &(x.den() * y.den());
                    if !den.is_constant() {
                        let place = den.factor(0).factors[0].0.clone();
                        return Ok(Certificate::InfiniteOrder {
                            place: Place::Finite(place),
                            k,
                        });
                    }
                }
            }
            if k < max_doublings {
                cur = model.double_unchecked(&cur);
            }
        }
        Ok(Certificate::Inconclusive)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: &FqPoly, b: &FqPoly) -> FqPoly {
    let g = a.gcd(b);
    (a * b).div_exact(&g).expect("gcd divides").monic()
}

/// Trace of Frobenius `q + 1 - #E(GF(q))` of `y^2 = x^3 + Ax^2 + Bx`, via
/// the character sum `-Σ_x χ(f(x))`. Debug builds recount points through a
/// table of square-root counts and compare.
pub fn trace_of_frobenius(field: &FieldCtx, a: Fq, b: Fq) -> Result<i64> {
    let curve = CurveAB::new(field.clone(), a, b)?;
    let s = char_sum(field, a, b);
    let t = -s;
    if cfg!(debug_assertions) && field.q() <= 1 << 16 {
        let count = point_count(field, a, b);
        assert_eq!(
            t,
            field.q() as i64 + 1 - count,
            "trace mismatch on {curve:?}"
        );
    }
    assert!(
        (t as i128) * (t as i128) <= 4 * field.q() as i128,
        "Hasse bound violated"
    );
    Ok(t)
}

/// `Σ_x χ(x^3 + A x^2 + B x)` over the field.
pub fn char_sum(field: &FieldCtx, a: Fq, b: Fq) -> i64 {
    field
        .elements()
        .map(|x| {
            let fx = field.mul(x, field.add(field.mul(x, field.add(x, a)), b));
            field.quad_char(fx) as i64
        })
        .sum()
}

/// Projective point count using the number of square roots of each value.
pub fn point_count(field: &FieldCtx, a: Fq, b: Fq) -> i64 {
    let q = field.q() as usize;
    let mut roots = vec![0i64; q];
    for y in field.elements() {
        roots[field.mul(y, y).index() as usize] += 1;
    }
    1 + field
        .elements()
        .map(|x| {
            let fx = field.mul(x, field.add(field.mul(x, field.add(x, a)), b));
            roots[fx.index() as usize]
        })
        .sum::<i64>()
}
