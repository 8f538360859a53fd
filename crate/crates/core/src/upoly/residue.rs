use super::{FqPoly, Poly};
use crate::error::{Error, Result};
use crate::gf::{make_field, FieldCtx, Fq};

/// `κ[u]/(π)` realized as the canonical GF(p^{m n}), with the embedding of
/// κ and the image of `u` (the smallest root of π in canonical order).
#[derive(Clone, Debug)]
pub struct ResidueField {
    base: FieldCtx,
    field: FieldCtx,
    pi: FqPoly,
    gen_image: Fq,
    root: Fq,
}

pub fn residue_field(base: &FieldCtx, pi: &FqPoly) -> Result<ResidueField> {
    residue_field_in(base, pi, None)
}

/// As `residue_field`, reusing an already built GF(q^{deg π}) when given
/// (callers handling many places of one degree build it once).
pub fn residue_field_in(
    base: &FieldCtx,
    pi: &FqPoly,
    big: Option<&FieldCtx>,
) -> Result<ResidueField> {
    if !pi.is_monic() {
        return Err(Error::InvalidInput("place polynomial must be monic".into()));
    }
    if !pi.is_irreducible() {
        return Err(Error::Reducible(pi.format("u")));
    }
    let n = pi.degree().expect("nonzero");
    let m = base.m();
    let (field, gen_image) = if n == 1 {
        (base.clone(), base.generator().unwrap_or(Fq(1)))
    } else {
        let big = match big {
            Some(b) if b.p() == base.p() && b.m() == m * n => b.clone(),
            Some(_) => {
                return Err(Error::InvalidInput(
                    "residue field of the wrong size".into(),
                ))
            }
            None => make_field(base.p(), m * n)?,
        };
        let gen_image = if m == 1 {
            Fq(1)
        } else {
            let modulus = Poly::new(big.clone(), base.modulus().iter().map(|&c| Fq(c)).collect());
            modulus.roots(0)[0]
        };
        (big, gen_image)
    };
    let mut out = ResidueField {
        base: base.clone(),
        field,
        pi: pi.clone(),
        gen_image,
        root: Fq(0),
    };
    let mapped = out.map_poly(pi);
    out.root = mapped.roots(0)[0];
    Ok(out)
}

impl ResidueField {
    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn pi(&self) -> &FqPoly {
        &self.pi
    }

    /// Image of `u`.
    pub fn root(&self) -> Fq {
        self.root
    }

    /// Image of a constant of κ.
    pub fn map_base(&self, a: Fq) -> Fq {
        if self.base.m() == 1 {
            return a;
        }
        let f = &self.field;
        let mut acc = Fq(0);
        for &c in self.base.coords(a).iter().rev() {
            acc = f.add(f.mul(acc, self.gen_image), Fq(c));
        }
        acc
    }

    /// Preimage of an element of the embedded copy of κ (linear search).
    pub fn unmap_base(&self, x: Fq) -> Option<Fq> {
        self.base.elements().find(|&a| self.map_base(a) == x)
    }

    /// The polynomial with coefficients pushed into the residue field.
    pub fn map_poly(&self, g: &FqPoly) -> FqPoly {
        g.map(self.field.clone(), |c| self.map_base(*c))
    }

    /// `g mod π`.
    pub fn reduce(&self, g: &FqPoly) -> Fq {
        self.map_poly(g).eval(&self.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::monic_polys;

    fn p(f: &FieldCtx, cs: &[i64]) -> FqPoly {
        Poly::from_ints(f.clone(), cs)
    }

    #[test]
    fn spec_examples() {
        let f3 = make_field(3, 1).unwrap();
        let r = residue_field(&f3, &p(&f3, &[1, 0, 1])).unwrap();
        assert_eq!(r.field().q(), 9);
        let x = r.root();
        assert_eq!(r.field().add(r.field().mul(x, x), Fq(1)), Fq(0));
        let r = residue_field(&f3, &p(&f3, &[0, 1])).unwrap();
        assert_eq!(r.field().q(), 3);
        assert_eq!(r.root(), Fq(0));
        let f5 = make_field(5, 1).unwrap();
        let r = residue_field(&f5, &p(&f5, &[2, 1])).unwrap();
        assert_eq!(r.root(), Fq(3));
        assert!(residue_field(&f3, &p(&f3, &[0, 0, 1])).is_err());
    }

    #[test]
    fn reduction_is_a_ring_map() {
        let f9 = make_field(3, 2).unwrap();
        let pi = crate::upoly::monic_irreducibles(&f9, 2).nth(3).unwrap();
        let r = residue_field(&f9, &pi).unwrap();
        let big = r.field().clone();
        assert_eq!(big.q(), 81);
        assert_eq!(r.reduce(&pi), Fq(0));
        let polys: Vec<FqPoly> = monic_polys(&f9, 2).step_by(5).collect();
        for a in &polys {
            for b in &polys {
                assert_eq!(r.reduce(&(a * b)), big.mul(r.reduce(a), r.reduce(b)));
                assert_eq!(r.reduce(&(a + b)), big.add(r.reduce(a), r.reduce(b)));
            }
        }
        for a in f9.elements() {
            assert_eq!(r.unmap_base(r.map_base(a)), Some(a));
        }
    }

    #[test]
    fn residue_character_matches_norm() {
        let f5 = make_field(5, 1).unwrap();
        for pi in crate::upoly::monic_irreducibles(&f5, 3).take(10) {
            let r = residue_field(&f5, &pi).unwrap();
            for g in monic_polys(&f5, 2).step_by(3) {
                assert_eq!(r.field().quad_char(r.reduce(&g)), g.chi_mod(&pi));
            }
        }
    }
}
