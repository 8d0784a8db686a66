//! Exact valuation-theoretic invariants of plurisubharmonic weights with
//! monomial singularities, on `C^n` and on monomial curve germs.

pub mod arrangement;
pub mod cli;
pub mod curve;
pub mod interp;
pub mod lp;
pub mod numeric;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod trop;
