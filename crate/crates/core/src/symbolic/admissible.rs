//! Admissibility: which sequences occur as the itinerary of 1.

use std::cmp::Ordering;

use super::order::twisted_cmp_shifted;
use super::word::Word;

/// Every shift of the sequence is `≤_E` the sequence itself, and the
/// sequence starts with `10`.
///
/// Works for both periodic and preperiodic words; shifts past
/// `preperiod + period` repeat earlier ones. The degenerate `(10)^∞` passes
/// (growth rate 1); downstream code filters it by its leading root.
pub fn is_admissible(w: &Word) -> bool {
    if !starts_with_10(w) {
        return false;
    }
    if w.is_periodic() {
        return is_admissible_periodic_letters(&w.to_letters());
    }
    (1..w.len()).all(|j| twisted_cmp_shifted(w, j, w, 0) != Ordering::Greater)
}

fn starts_with_10(w: &Word) -> bool {
    !w.is_empty() && w.seq_letter(0) == 1 && w.seq_letter(1) == 0
}

/// Shift criterion on a raw periodic word, no allocation.
pub fn is_admissible_periodic_letters(w: &[u8]) -> bool {
    let p = w.len();
    if p < 2 || w[0] != 1 || w[1] != 0 {
        return false;
    }
    (1..p).all(|j| shift_cmp(w, j) != Ordering::Greater)
}

/// `σ^j(w^∞)` against `w^∞`; both have period `p`, so `p` letters decide.
#[inline]
pub(crate) fn shift_cmp(w: &[u8], j: usize) -> Ordering {
    let p = w.len();
    let mut positive = true;
    for n in 0..p {
        let x = w[(j + n) % p];
        let y = w[n];
        if x != y {
            let ord = x.cmp(&y);
            return if positive { ord } else { ord.reverse() };
        }
        if y == 1 {
            positive = !positive;
        }
    }
    Ordering::Equal
}

/// Decomposition criterion: for each split `w = xy` where `y` starts with
/// `10`, `(yx)^∞ ≤_E (xy)^∞`.
pub fn is_admissible_by_decomposition(w: &Word) -> bool {
    if !w.is_periodic() || !starts_with_10(w) || w.len() < 2 {
        return false;
    }
    let xy = w.clone();
    (1..w.len())
        .filter(|&i| w.letter(i) == 1 && i + 1 < w.len() && w.letter(i + 1) == 0)
        .all(|i| {
            let yx = w.slice(i, w.len()).concat(&w.slice(0, i));
            super::order::twisted_lex_compare(&yx, &xy) != Ordering::Greater
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
        assert!(is_admissible(&w("100")));
        assert!(is_admissible(&w("10")));
        assert!(is_admissible(&w("101111")));
        assert!(is_admissible(&w("1000011100(101000)")));
        assert!(is_admissible(&w("1(0)")));
        assert!(is_admissible(&w("10(1)")));
        assert!(!is_admissible(&w("0100")));
        assert!(!is_admissible(&w("11")));
        assert!(!is_admissible(&w("1")));
        assert!(!is_admissible(&w("10100")));
    }

    #[test]
    fn generic_and_slice_paths_agree() {
        for n in 2..=11usize {
            for bits in 0u32..(1 << n) {
                let letters: Vec<u8> = (0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u8).collect();
                let word = Word::from_letters(&letters);
                let generic = starts_with_10(&word)
                    && (1..n).all(|j| twisted_cmp_shifted(&word, j, &word, 0) != Ordering::Greater);
                assert_eq!(generic, is_admissible(&word), "{word}");
                assert_eq!(generic, is_admissible_by_decomposition(&word), "{word}");
            }
        }
    }
}
