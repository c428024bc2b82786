//! Library surface behind the `algkit` binary: the bundled corpus of
//! four-dimensional associative algebra classes, report assembly, and
//! LaTeX rendering. The exact linear algebra lives in `algkit-core`;
//! this crate adds IO, file formats, and presentation.

pub mod corpus;
pub mod latex;
pub mod report;
