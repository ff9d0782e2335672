//! Command-line front end for `homhopf`: the `.struct` file format, export
//! of in-memory structures, and the `homhopf` command surface.

pub mod commands;
pub mod export;
pub mod format;

pub use commands::{run, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
pub use format::{parse, serialize, ParseError, StructureFile};
