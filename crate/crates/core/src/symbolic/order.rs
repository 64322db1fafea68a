//! The twisted lexicographic order on itineraries and the alternating order
//! on auxiliary strings.

use std::cmp::Ordering;

use super::aux::AuxString;
use super::word::{Sign, Word};

/// Compares two infinite sequences letter by letter, flipping the direction
/// of the comparison after every common `1`.
///
/// `a` is read from shift `ja`, `b` from shift `jb`. Two eventually periodic
/// sequences that agree on `max(preperiods) + p_a + p_b` letters agree
/// forever, so the scan is bounded.
pub fn twisted_cmp_shifted(a: &Word, ja: usize, b: &Word, jb: usize) -> Ordering {
    let pre_a = a.preperiod_len().saturating_sub(ja);
    let pre_b = b.preperiod_len().saturating_sub(jb);
    let bound = pre_a.max(pre_b) + a.period_len() + b.period_len();
    let mut sign = Sign::Plus;
    for n in 0..bound {
        let x = a.seq_letter(ja + n);
        let y = b.seq_letter(jb + n);
        if x != y {
            let ord = x.cmp(&y);
            return if sign.is_positive() { ord } else { ord.reverse() };
        }
        if x == 1 {
            sign = sign.flip();
        }
    }
    Ordering::Equal
}

/// `w ≤_E v` on the infinite sequences the words describe; periodic words
/// are compared as `w^∞` and `v^∞`.
pub fn twisted_lex_compare(w: &Word, v: &Word) -> Ordering {
    twisted_cmp_shifted(w, 0, v, 0)
}

/// Twisted comparison of two finite strings over their common length.
///
/// Returns `Equal` when one is a prefix of the other.
pub fn finite_twisted_compare(a: &[u8], b: &[u8]) -> Ordering {
    let mut positive = true;
    for (&x, &y) in a.iter().zip(b) {
        if x != y {
            let ord = x.cmp(&y);
            return if positive { ord } else { ord.reverse() };
        }
        if x == 1 {
            positive = !positive;
        }
    }
    Ordering::Equal
}

/// Alternating lexicographic order, 1-indexed: at the first difference `k`,
/// the larger entry is smaller when `k` is odd and the smaller entry is
/// smaller when `k` is even. So `21 < 11 < 12`.
///
/// Only the common prefix is inspected; strings where one is a prefix of the
/// other compare `Equal`.
pub fn alt_lex_compare(a: &AuxString, b: &AuxString) -> Ordering {
    alt_cmp_slices(a.counts(), b.counts())
}

pub(crate) fn alt_cmp_slices(a: &[u32], b: &[u32]) -> Ordering {
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            let k = i + 1;
            return if k % 2 == 1 { y.cmp(x) } else { x.cmp(y) };
        }
    }
    Ordering::Equal
}

/// `a ≪_alt b`: the strings differ within their common length and `a` is
/// smaller at the first difference.
pub fn alt_much_less(a: &AuxString, b: &AuxString) -> bool {
    alt_cmp_slices(a.counts(), b.counts()) == Ordering::Less
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::aux::{AuxFlavor, AuxString};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn aux(v: &[u32]) -> AuxString {
        AuxString::new(v.to_vec(), AuxFlavor::Zeros)
    }

    /// Reference: unroll both sequences to a long fixed length.
    fn slow(a: &Word, b: &Word) -> Ordering {
        let x: Vec<u8> = a.sequence_from(0).take(400).collect();
        let y: Vec<u8> = b.sequence_from(0).take(400).collect();
        finite_twisted_compare(&x, &y)
    }

    #[test]
    fn small_comparisons() {
        assert_eq!(twisted_lex_compare(&w("101"), &w("100")), Ordering::Less);
        assert_eq!(twisted_lex_compare(&w("100"), &w("101")), Ordering::Greater);
        assert_eq!(twisted_lex_compare(&w("11"), &w("10")), Ordering::Less);
        assert_eq!(twisted_lex_compare(&w("100"), &w("100")), Ordering::Equal);
        assert_eq!(twisted_lex_compare(&w("10"), &w("1010")), Ordering::Equal);
        assert_eq!(twisted_lex_compare(&w("1(0)"), &w("100")), Ordering::Greater);
    }

    #[test]
    fn bounded_scan_matches_long_unrolling() {
        let words: Vec<Word> = (1u32..128)
            .map(|bits| {
                let len = 32 - bits.leading_zeros() as usize;
                let letters: Vec<u8> = (0..len).rev().map(|i| ((bits >> i) & 1) as u8).collect();
                Word::from_letters(&letters)
            })
            .collect();
        for a in &words {
            for b in &words {
                assert_eq!(twisted_lex_compare(a, b), slow(a, b), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn alternating_order_example_chain() {
        assert_eq!(alt_lex_compare(&aux(&[2, 1]), &aux(&[1, 1])), Ordering::Less);
        assert_eq!(alt_lex_compare(&aux(&[1, 1]), &aux(&[1, 2])), Ordering::Less);
        assert_eq!(alt_lex_compare(&aux(&[3, 5]), &aux(&[3, 5])), Ordering::Equal);
        assert!(alt_much_less(&aux(&[2, 1, 7]), &aux(&[1])));
        assert!(!alt_much_less(&aux(&[1, 1, 7]), &aux(&[1])));
    }
}
