//! Text formats and the composed-instance generator.

mod format;
mod generate;

pub use format::{emit_dimacs, emit_tri, parse, parse_dimacs, parse_tri, Format};
pub use generate::{generate, glue, random_trigraph, GeneratorSpec, PieceKind, PieceSpec, Side, Step};
