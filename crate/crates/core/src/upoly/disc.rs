use super::{FqPoly, Poly};
use crate::error::{Error, Result};
use crate::field::Field;

/// `Res(P, Q) = lead(P)^deg Q * prod_{P(g)=0} Q(g)`, computed by the
/// Euclidean recursion. `Res(P, 0)` is 0 for nonconstant P and 1 for
/// constant P.
pub fn resultant<K: Field>(p: &Poly<K>, q: &Poly<K>) -> Result<K::Elem> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    let f = p.field().clone();
    let mut acc = f.one();
    let mut a = p.clone();
    let mut b = q.clone();
    loop {
        let n = a.degree().expect("nonzero");
        let la = a.lead().expect("nonzero").clone();
        let Some(m) = b.degree() else {
            return Ok(if n == 0 { acc } else { f.zero() });
        };
        if n == 0 {
            return Ok(f.mul(&acc, &f.pow(&la, m as u64)));
        }
        if m == 0 {
            let lb = b.lead().expect("nonzero");
            return Ok(f.mul(&acc, &f.pow(lb, n as u64)));
        }
        // Res(A, B) = lead(A)^(m - deg R) Res(A, R) with R = B mod A.
        let r = b.rem(&a)?;
        let Some(dr) = r.degree() else {
            return Ok(f.zero());
        };
        acc = f.mul(&acc, &f.pow(&la, (m - dr) as u64));
        // Res(A, R) = (-1)^(n dr) Res(R, A)
        if (n * dr) % 2 == 1 {
            acc = f.neg(&acc);
        }
        b = a;
        a = r;
    }
}

/// `disc(P) = (-1)^(n(n-1)/2) lead(P)^(n-2) prod_{P(g)=0} P'(g)`, evaluated as
/// `(-1)^(n(n-1)/2) lead^(n-2-deg P') Res(P, P')`. Degrees 0 and 1 give 1;
/// a vanishing derivative gives 0.
pub fn discriminant<K: Field>(p: &Poly<K>) -> Result<K::Elem> {
    let n = p.degree().ok_or(Error::ZeroPolynomial("discriminant"))?;
    let f = p.field();
    if n <= 1 {
        return Ok(f.one());
    }
    let dp = p.derivative();
    let Some(dd) = dp.degree() else {
        return Ok(f.zero());
    };
    let res = resultant(p, &dp)?;
    let lead = p.lead().expect("nonzero");
    let e = n as i64 - 2 - dd as i64;
    let factor = if e >= 0 {
        f.pow(lead, e as u64)
    } else {
        f.inv(&f.pow(lead, (-e) as u64)).expect("nonzero lead")
    };
    let mut out = f.mul(&factor, &res);
    if (n * (n - 1) / 2) % 2 == 1 {
        out = f.neg(&out);
    }
    Ok(out)
}

impl FqPoly {
    /// `(-1)^deg P * χ(disc P)`.
    pub fn moebius_disc(&self) -> i8 {
        let Some(n) = self.degree() else {
            return 0;
        };
        let d = discriminant(self).expect("nonzero");
        let chi = self.field().quad_char(d);
        if n % 2 == 0 {
            chi
        } else {
            -chi
        }
    }
}
