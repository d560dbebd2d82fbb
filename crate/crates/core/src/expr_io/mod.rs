//! Input language and output serialization.

mod format;
mod parse;
pub mod report;

pub use format::{format_affine_hform, format_implicit, format_mpoly, format_poly, Frame};
pub use parse::{parse_expr, parse_mpoly, parse_poly, parse_poly_in, Expr, ParseError};
