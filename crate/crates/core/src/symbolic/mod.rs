//! Words over `{0,1}` and the combinatorics of tent-map itineraries.

pub mod admissible;
pub mod aux;
pub mod doubling;
pub mod dominance;
pub mod extension;
pub mod itinerary;
pub mod order;
mod word;

pub use admissible::{is_admissible, is_admissible_by_decomposition};
pub use aux::{auxiliary_string, AuxFlavor, AuxString};
pub use dominance::{is_dominant_aux, is_dominant_by_suffixes, is_dominant_word, is_extremal};
pub use doubling::period_double;
pub use extension::{
    concat_admissible, dominant_extensions, extension_len, irreducible_extension, power_tail_word,
    IrreducibleExtension, PowerTail,
};
pub use itinerary::{is_realized, is_realized_at, itinerary, Itinerary, ItineraryStatus};
pub use order::{alt_lex_compare, alt_much_less, finite_twisted_compare, twisted_lex_compare};
pub use word::{cumulative_signs, Sign, SignSeq, Word, WordKind};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SymbolicError {
    #[error("empty word")]
    EmptyWord,
    #[error("invalid letter {0:?}; words are strings of 0 and 1")]
    BadLetter(char),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}
