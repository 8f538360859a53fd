use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FqPoly, Poly};
use crate::gf::{prime_factors, FieldCtx, Fq};

/// `unit * prod f_i^{e_i}` with monic irreducible `f_i` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Fq,
    pub factors: Vec<(FqPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self, field: &FieldCtx) -> FqPoly {
        let mut acc = Poly::constant(field.clone(), self.unit);
        for (g, e) in &self.factors {
            acc = &acc * &g.pow(*e as u64);
        }
        acc
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn big_omega(&self) -> usize {
        self.factors.iter().map(|(_, e)| e).sum()
    }
}

impl FqPoly {
    /// Squarefree decomposition of a nonzero polynomial: pairwise coprime
    /// monic squarefree `g_i` with `monic(self) = prod g_i^{e_i}`, distinct
    /// exponents, sorted by exponent.
    pub fn squarefree_decomposition(&self) -> Vec<(FqPoly, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of 0");
        let mut out = Vec::new();
        sqf_into(&self.monic(), 1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(h, d)` where `h` is the product of all irreducible factors of
    /// degree `d`.
    pub fn distinct_degree(&self) -> Vec<(FqPoly, usize)> {
        let field = self.field().clone();
        let q = field.q();
        let x = Poly::x(field.clone());
        let mut f = self.monic();
        let mut out = Vec::new();
        let mut h = x.clone();
        let mut d = 0usize;
        while let Some(n) = f.degree() {
            if n < 2 * (d + 1) {
                if n > 0 {
                    out.push((f.clone(), n));
                }
                break;
            }
            d += 1;
            h = h.powmod(q, &f);
            let g = f.gcd(&(&h - &x));
            if !g.is_one() {
                f = f.div_exact(&g).expect("gcd divides");
                h = h.rem(&f).expect("nonzero");
                out.push((g, d));
            }
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of degree `d`.
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FqPoly>) {
        let n = self.degree().expect("nonzero");
        if n == d {
            out.push(self.clone());
            return;
        }
        let field = self.field().clone();
        let q = field.q();
        loop {
            let coeffs: Vec<Fq> = (0..n).map(|_| Fq(rng.gen_range(0..q))).collect();
            let a = Poly::new(field.clone(), coeffs);
            if a.is_constant() {
                continue;
            }
            // a^((q^d - 1)/2) = (prod_{i<d} a^{q^i})^((q-1)/2)
            let mut acc = Poly::one(field.clone());
            let mut cur = a.rem(self).expect("nonzero");
            for i in 0..d {
                acc = acc.mulmod(&cur, self);
                if i + 1 < d {
                    cur = cur.powmod(q, self);
                }
            }
            let b = acc.powmod((q - 1) / 2, self);
            let g = self.gcd(&(&b - &Poly::one(field.clone())));
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                let rest = self.div_exact(&g).expect("gcd divides");
                g.equal_degree(d, rng, out);
                rest.equal_degree(d, rng, out);
                return;
            }
        }
    }

    /// Complete factorization; equal-degree splitting draws from a ChaCha
    /// stream seeded with `seed`. The result is sorted and therefore does not
    /// depend on the seed.
    pub fn factor(&self, seed: u64) -> Factorization {
        assert!(!self.is_zero(), "factorization of 0");
        let (unit, _) = self.monic_parts();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::new();
        for (g, e) in self.squarefree_decomposition() {
            for (h, d) in g.distinct_degree() {
                let mut parts = Vec::new();
                h.equal_degree(d, &mut rng, &mut parts);
                factors.extend(parts.into_iter().map(|f| (f, e)));
            }
        }
        factors.sort();
        Factorization { unit, factors }
    }

    /// Roots in the coefficient field, ascending in canonical order.
    pub fn roots(&self, seed: u64) -> Vec<Fq> {
        if self.is_constant() {
            return Vec::new();
        }
        let field = self.field().clone();
        let q = field.q();
        let f = self.monic();
        let x = Poly::x(field.clone());
        let lin = f.gcd(&(&x.powmod(q, &f) - &x));
        if lin.is_constant() {
            return Vec::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut parts = Vec::new();
        lin.equal_degree(1, &mut rng, &mut parts);
        let mut roots: Vec<Fq> = parts.iter().map(|g| field.neg(g.coeff(0))).collect();
        roots.sort();
        roots
    }

    /// Rabin's test: `x^{q^n} = x mod P` and `gcd(x^{q^{n/l}} - x, P) = 1`
    /// for each prime `l | n`. Constants are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let field = self.field().clone();
        let q = field.q();
        let f = self.monic();
        let x = Poly::x(field.clone());
        let mut ls = prime_factors(n as u64);
        ls.sort_unstable_by(|a, b| b.cmp(a));
        // powers x^{q^k} for increasing k
        let mut h = x.clone();
        let mut k = 0usize;
        let mut checks: Vec<usize> = ls.iter().map(|&l| n / l as usize).collect();
        checks.sort_unstable();
        for target in checks {
            while k < target {
                h = h.powmod(q, &f);
                k += 1;
            }
            if !f.gcd(&(&h - &x)).is_one() {
                return false;
            }
        }
        while k < n {
            h = h.powmod(q, &f);
            k += 1;
        }
        h == x
    }

    /// μ(P): 0 on non-squarefree input, otherwise (-1)^(number of
    /// irreducible factors). Counts degrees only (no splitting). μ(0) = 0.
    pub fn moebius_factor(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.is_constant() {
            return 1;
        }
        if !self.is_squarefree() {
            return 0;
        }
        let r: usize = self
            .distinct_degree()
            .iter()
            .map(|(h, d)| h.degree().expect("nonzero") / d)
            .sum();
        if r.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// λ(P) = (-1)^Ω(P); λ(0) = 0.
    pub fn liouville(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let mut omega = 0usize;
        for (g, e) in self.squarefree_decomposition() {
            let r: usize = g
                .distinct_degree()
                .iter()
                .map(|(h, d)| h.degree().expect("nonzero") / d)
                .sum();
            omega += r * e;
        }
        if omega.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True iff `P = Q^2` over the coefficient field; 0 is a square.
    pub fn is_square(&self) -> bool {
        let Some(lead) = self.lead() else {
            return true;
        };
        self.field().quad_char(*lead) == 1
            && self
                .squarefree_decomposition()
                .iter()
                .all(|(_, e)| e % 2 == 0)
    }

    /// Some `Q` with `Q^2 = P`, when it exists.
    pub fn sqrt(&self) -> Option<FqPoly> {
        let field = self.field().clone();
        let Some(lead) = self.lead() else {
            return Some(self.clone());
        };
        let mut acc = Poly::constant(field.clone(), field.sqrt(*lead)?);
        for (g, e) in self.squarefree_decomposition() {
            if e % 2 == 1 {
                return None;
            }
            acc = &acc * &g.pow(e as u64 / 2);
        }
        Some(acc)
    }
}

fn sqf_into(f: &FqPoly, mult: usize, out: &mut Vec<(FqPoly, usize)>) {
    if f.is_constant() {
        return;
    }
    let p = f.field().p() as usize;
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1usize;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y).expect("gcd divides");
        if !z.is_one() {
            out.push((z, i * mult));
        }
        i += 1;
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
    }
    if !c.is_one() {
        let root = c.pth_root().expect("remaining part is a p-th power");
        sqf_into(&root, mult * p, out);
    }
}

/// All monic polynomials of degree `n` in canonical order.
pub fn monic_polys(field: &FieldCtx, n: usize) -> impl Iterator<Item = FqPoly> + '_ {
    let count = field.q().pow(n as u32);
    (0..count).map(move |i| FqPoly::monic_from_index(field, n, i))
}

/// All monic irreducibles of degree `n` in canonical order.
pub fn monic_irreducibles(field: &FieldCtx, n: usize) -> impl Iterator<Item = FqPoly> + '_ {
    monic_polys(field, n).filter(|f| f.is_irreducible())
}

/// `(1/n) sum_{d|n} μ(d) q^{n/d}`.
pub fn count_monic_irreducibles(q: u64, n: usize) -> u64 {
    let mut total: i128 = 0;
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let ps = prime_factors(d as u64);
        let sq = ps.iter().any(|&l| (d as u64).is_multiple_of(l * l));
        if sq {
            continue;
        }
        let sign = if ps.len().is_multiple_of(2) { 1 } else { -1 };
        total += sign * (q as i128).pow((n / d) as u32);
    }
    (total / n as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn p(f: &FieldCtx, cs: &[i64]) -> FqPoly {
        Poly::from_ints(f.clone(), cs)
    }

    /// Trial division by every monic polynomial of degree <= deg/2.
    fn brute_factor(a: &FqPoly) -> Vec<(FqPoly, usize)> {
        let f = a.field().clone();
        let mut rest = a.monic();
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree().unwrap() >= 2 * d {
            for g in monic_polys(&f, d) {
                let mut e = 0;
                while rest.rem(&g).unwrap().is_zero() {
                    rest = rest.div_exact(&g).unwrap();
                    e += 1;
                }
                if e > 0 {
                    out.push((g, e));
                }
            }
            d += 1;
        }
        if rest.degree().unwrap() > 0 {
            let pos = out.iter().position(|(g, _)| *g == rest);
            match pos {
                Some(i) => out[i].1 += 1,
                None => out.push((rest, 1)),
            }
        }
        out.sort();
        out
    }

    #[test]
    fn spec_examples() {
        let f3 = make_field(3, 1).unwrap();
        let f5 = make_field(5, 1).unwrap();
        let fac = p(&f3, &[1, 0, 1]).factor(0);
        assert_eq!(fac.factors.len(), 1);
        let fac = p(&f5, &[1, 0, 1]).factor(0);
        assert_eq!(
            fac.factors,
            vec![(p(&f5, &[2, 1]), 1), (p(&f5, &[3, 1]), 1)]
        );
        let a = p(&f3, &[0, 1, 0, 0, 0, 0, 1]);
        let fac = a.factor(0);
        assert_eq!(fac.factors, brute_factor(&a));
        assert_eq!(fac.expand(&f3), a);
        assert_eq!(fac.factors[0].0, p(&f3, &[0, 1]));
        assert_eq!(fac.factors[1].0, p(&f3, &[1, 1]));
    }

    #[test]
    fn factor_matches_trial_division() {
        for f in [
            make_field(3, 1).unwrap(),
            make_field(5, 1).unwrap(),
            make_field(3, 2).unwrap(),
        ] {
            for n in 1..=5 {
                for a in monic_polys(&f, n).step_by(if f.q() == 3 { 1 } else { 37 }) {
                    let a = a.scale(&Fq(2));
                    let fac = a.factor(7);
                    assert_eq!(fac.expand(&f), a);
                    assert_eq!(fac.factors, brute_factor(&a), "{a:?}");
                }
            }
        }
    }

    #[test]
    fn factor_independent_of_seed() {
        let f = make_field(7, 1).unwrap();
        let a = p(&f, &[3, 1, 4, 1, 5, 2, 6, 5, 3, 5, 1]);
        let base = a.factor(0);
        for s in 1..5 {
            assert_eq!(a.factor(s), base);
        }
    }

    #[test]
    fn irreducibility_exhaustive_gf3() {
        let f = make_field(3, 1).unwrap();
        for n in 1..=4 {
            for a in monic_polys(&f, n) {
                let fac = a.factor(0);
                let one_factor = fac.factors.len() == 1 && fac.factors[0].1 == 1;
                assert_eq!(a.is_irreducible(), one_factor, "{a:?}");
            }
        }
        assert!(p(&f, &[2, 0, 2, 0, 1]).is_irreducible());
        assert!(!p(&f, &[0, 0, 0, 0, 1]).is_irreducible());
        assert!(!p(&f, &[2]).is_irreducible());
    }

    #[test]
    fn necklace_counts() {
        let f3 = make_field(3, 1).unwrap();
        for n in 1..=8 {
            let c = monic_irreducibles(&f3, n).count() as u64;
            assert_eq!(c, count_monic_irreducibles(3, n));
        }
        assert_eq!(count_monic_irreducibles(3, 2), 3);
        assert_eq!(count_monic_irreducibles(3, 6), 116);
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(monic_irreducibles(&f5, 4).count(), 150);
    }

    #[test]
    fn moebius_and_liouville_examples() {
        let f3 = make_field(3, 1).unwrap();
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(p(&f3, &[0, 1]).moebius_factor(), -1);
        assert_eq!(p(&f3, &[0, 0, 1]).moebius_factor(), 0);
        assert_eq!(p(&f5, &[1, 0, 1]).moebius_factor(), 1);
        assert_eq!(p(&f3, &[0, 0, 1]).liouville(), 1);
        assert_eq!(p(&f3, &[1, 1]).liouville(), -1);
        assert_eq!(Poly::zero(f3.clone()).liouville(), 0);
        assert_eq!(Poly::zero(f3.clone()).moebius_factor(), 0);
        assert_eq!(p(&f3, &[2]).liouville(), 1);
    }

    #[test]
    fn moebius_from_full_factorization() {
        let f = make_field(3, 1).unwrap();
        for n in 1..=5 {
            for a in monic_polys(&f, n) {
                let fac = a.factor(0);
                let expect = if fac.factors.iter().any(|(_, e)| *e > 1) {
                    0
                } else if fac.factors.len() % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(a.moebius_factor(), expect);
                let lam = if fac.big_omega() % 2 == 0 { 1 } else { -1 };
                assert_eq!(a.liouville(), lam);
            }
        }
    }

    #[test]
    fn square_tests() {
        let f3 = make_field(3, 1).unwrap();
        let f5 = make_field(5, 1).unwrap();
        assert!(p(&f3, &[0, 0, 1]).is_square());
        assert!(!p(&f3, &[0, 0, 2]).is_square());
        assert!(!p(&f5, &[0, 1, 1]).is_square());
        assert!(Poly::zero(f3.clone()).is_square());
        let g = p(&f5, &[1, 2, 3]);
        let sq = (&g * &g).scale(&Fq(4));
        let r = sq.sqrt().unwrap();
        assert_eq!(&r * &r, sq);
    }

    #[test]
    fn roots_found() {
        let f = make_field(7, 1).unwrap();
        let a = &(&p(&f, &[-1, 1]) * &p(&f, &[-5, 1])) * &p(&f, &[1, 0, 1]);
        assert_eq!(a.roots(0), vec![Fq(1), Fq(5)]);
        let f9 = make_field(3, 2).unwrap();
        let b = p(&f9, &[1, 0, 1]);
        let rs = b.roots(0);
        assert_eq!(rs.len(), 2);
        for r in rs {
            assert_eq!(b.eval(&r), Fq(0));
        }
    }

    #[test]
    fn squarefree_decomposition_in_char_p() {
        let f = make_field(3, 1).unwrap();
        let g = p(&f, &[1, 1]);
        let h = p(&f, &[1, 0, 1]);
        let a = &g.pow(3) * &(&h.pow(2) * &p(&f, &[0, 1]));
        let d = a.squarefree_decomposition();
        assert_eq!(d, vec![(p(&f, &[0, 1]), 1), (h, 2), (g, 3)]);
    }
}
