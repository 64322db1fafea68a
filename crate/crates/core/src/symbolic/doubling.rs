//! Period doubling: a word whose growth rate is the square root of the
//! input's.

use super::admissible::is_admissible;
use super::word::Word;
use super::SymbolicError;

/// Interleaves `1` with the complemented letters: `1 ¬w₁ 1 ¬w₂ …`.
pub fn period_double(w: &Word) -> Result<Word, SymbolicError> {
    if !w.is_periodic() || !is_admissible(w) {
        return Err(SymbolicError::Domain(format!(
            "period doubling needs an admissible periodic word, got {w}"
        )));
    }
    let mut letters = Vec::with_capacity(2 * w.len());
    for l in w.letters() {
        letters.push(1);
        letters.push(1 - l);
    }
    Ok(Word::from_letters(&letters))
}
