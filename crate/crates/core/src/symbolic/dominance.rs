//! Extremal and dominant auxiliary strings, and dominant words.

use std::cmp::Ordering;

use super::aux::{auxiliary_string, AuxFlavor, AuxString};
use super::order::{alt_cmp_slices, finite_twisted_compare};
use super::word::{Sign, Word};

/// `XY ≤_alt YX` for every split of `a` into two nonempty parts.
pub fn is_extremal(a: &AuxString) -> bool {
    let c = a.counts();
    let n = c.len();
    let mut rotated = Vec::with_capacity(n);
    (1..n).all(|i| {
        rotated.clear();
        rotated.extend_from_slice(&c[i..]);
        rotated.extend_from_slice(&c[..i]);
        alt_cmp_slices(c, &rotated) != Ordering::Greater
    })
}

/// `S ≪_alt T` for every proper nonempty suffix `T` of `S`.
pub fn is_dominant_aux(a: &AuxString) -> bool {
    let c = a.counts();
    (1..c.len()).all(|i| alt_cmp_slices(c, &c[i..]) == Ordering::Less)
}

/// Starts with 1, has an even number of 1s, and a dominant auxiliary string.
pub fn is_dominant_word(w: &Word) -> bool {
    if !w.is_periodic() || w.is_empty() || w.letter(0) != 1 || w.sign() != Sign::Plus {
        return false;
    }
    match auxiliary_string(w, AuxFlavor::Zeros) {
        Ok(a) => is_dominant_aux(&a),
        Err(_) => false,
    }
}

/// Suffix characterisation: `w` starts with `10`, has positive sign, and for
/// every proper nonempty suffix `b`, the word `b1` is strictly smaller than
/// the prefix of `w` of the same length.
pub fn is_dominant_by_suffixes(w: &Word) -> bool {
    let n = w.len();
    if !w.is_periodic() || n < 2 || w.letter(0) != 1 || w.letter(1) != 0 || w.sign() != Sign::Plus {
        return false;
    }
    let letters = w.to_letters();
    let mut b1 = Vec::with_capacity(n);
    (1..n).all(|i| {
        b1.clear();
        b1.extend_from_slice(&letters[i..]);
        b1.push(1);
        finite_twisted_compare(&b1, &letters[..b1.len()]) == Ordering::Less
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert!(!is_dominant_word(&w("10")));
        assert!(is_dominant_word(&w("101000")) == is_dominant_by_suffixes(&w("101000")));
        assert!(is_dominant_word(&w("1001")));
        assert!(is_dominant_by_suffixes(&w("1001")));
        assert!(is_extremal(&AuxString::new(vec![2], AuxFlavor::Zeros)));
        assert!(!is_extremal(&AuxString::new(vec![1, 2], AuxFlavor::Zeros)));
    }

    #[test]
    fn characterisations_agree_on_short_words() {
        for n in 1..=12usize {
            for bits in 0u32..(1 << n) {
                let letters: Vec<u8> = (0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u8).collect();
                let word = Word::from_letters(&letters);
                assert_eq!(is_dominant_word(&word), is_dominant_by_suffixes(&word), "{word}");
            }
        }
    }
}
