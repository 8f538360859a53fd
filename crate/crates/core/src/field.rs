//! The minimal field interface shared by finite fields and rational function
//! fields. Polynomials and curves are generic over it.

use std::fmt::Debug;

pub trait Field: Clone + Debug + PartialEq {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under Z -> K.
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> u64;
    /// Zero counts as a square.
    fn is_square(&self, a: &Self::Elem) -> bool;
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Text form used when printing polynomials over this field.
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Coefficient convolution; fields with a cheaper representation override it.
    fn mul_coeffs(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = self.mul(x, y);
                out[i + j] = self.add(&out[i + j], &t);
            }
        }
        out
    }

    /// Reduces `r` modulo the monic polynomial `d` in place (coefficients
    /// ascending). On return `r.len() < d.len()` or `r` is already shorter.
    fn rem_monic_coeffs(&self, r: &mut Vec<Self::Elem>, d: &[Self::Elem]) {
        let dl = d.len();
        debug_assert!(dl > 0 && self.is_one(&d[dl - 1]));
        while r.len() >= dl {
            let top = r.len() - 1;
            let c = r[top].clone();
            if !self.is_zero(&c) {
                let shift = top + 1 - dl;
                for (i, di) in d.iter().enumerate().take(dl - 1) {
                    let t = self.mul(&c, di);
                    r[shift + i] = self.sub(&r[shift + i], &t);
                }
            }
            r.pop();
        }
    }
}
