//! Auxiliary strings: the run lengths of zeros following each `1`.

use std::fmt;

use super::word::Word;
use super::SymbolicError;

/// Which offset convention the counts use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuxFlavor {
    /// Entry `j` counts the zeros after the `j`-th `1`.
    Zeros,
    /// `Zeros` counts plus one (block lengths including the `1`).
    Blocks,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AuxString {
    counts: Vec<u32>,
    flavor: AuxFlavor,
}

impl AuxString {
    pub fn new(counts: Vec<u32>, flavor: AuxFlavor) -> AuxString {
        AuxString { counts, flavor }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn flavor(&self) -> AuxFlavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Same string in the other convention.
    pub fn to_flavor(&self, flavor: AuxFlavor) -> AuxString {
        let counts = match (self.flavor, flavor) {
            (a, b) if a == b => self.counts.clone(),
            (AuxFlavor::Zeros, AuxFlavor::Blocks) => self.counts.iter().map(|c| c + 1).collect(),
            _ => self.counts.iter().map(|c| c.saturating_sub(1)).collect(),
        };
        AuxString { counts, flavor }
    }

    /// Entries `start..` as a new string of the same flavor.
    pub fn suffix(&self, start: usize) -> AuxString {
        AuxString::new(self.counts[start..].to_vec(), self.flavor)
    }

    /// Rebuilds the word: each entry becomes `1` followed by that many zeros.
    pub fn to_word(&self) -> Word {
        let zeros = self.to_flavor(AuxFlavor::Zeros);
        let mut letters = Vec::new();
        for &c in &zeros.counts {
            letters.push(1);
            letters.extend(std::iter::repeat_n(0, c as usize));
        }
        Word::from_letters(&letters)
    }
}

impl fmt::Display for AuxString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The auxiliary string of the stored letters of `w`.
pub fn auxiliary_string(w: &Word, flavor: AuxFlavor) -> Result<AuxString, SymbolicError> {
    if w.is_empty() || w.letter(0) != 1 {
        return Err(SymbolicError::Domain(format!(
            "auxiliary strings need a word starting with 1, got {w}"
        )));
    }
    let mut counts = Vec::with_capacity(w.count_ones());
    for l in w.letters() {
        if l == 1 {
            counts.push(0);
        } else {
            *counts.last_mut().expect("first letter is 1") += 1;
        }
    }
    Ok(AuxString::new(counts, AuxFlavor::Zeros).to_flavor(flavor))
}
