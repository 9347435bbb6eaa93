//! Exact multiplication in the Kauffman bracket skein algebra of the
//! one-holed torus.

pub mod laurent;
pub mod skein;
pub mod mapping;
pub mod discrepancy;
pub mod closedforms;
pub mod expr;
pub mod oracle;
pub mod bench;
pub mod check;
pub mod cli;
