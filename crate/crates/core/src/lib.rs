pub mod ec;
pub mod error;
pub mod family;
pub mod ff;
pub mod field;
pub mod gf;
pub mod nagao;
pub mod parse;
pub mod selftest;
pub mod upoly;

pub use error::{Error, Result};
pub use field::Field;
pub use gf::{make_field, FieldCtx, Fq};
pub use upoly::{FqPoly, Poly};
