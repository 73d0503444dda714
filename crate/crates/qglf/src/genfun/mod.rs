//! Character generating functions, assembly of the factorization generating
//! function, count-table extraction, and distribution statistics.

mod assemble;
mod charseries;
mod stats;

pub use assemble::{a_table, assemble_f, closed_form_series, TablePath};
pub use charseries::{char_zr, f_easy, f_hook, CharKind, CharSeries};
pub use stats::{expected_genus, fulman_series};
