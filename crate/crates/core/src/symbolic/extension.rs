//! Constructions that build new admissible or dominant words from old ones.

use std::cmp::Ordering;

use super::admissible::is_admissible;
use super::dominance::is_dominant_word;
use super::order::twisted_lex_compare;
use super::word::{Sign, Word};
use super::SymbolicError;
use crate::poly::{irreducibility_certificate, parry_polynomial, Certificate, IntPoly};

fn ones(n: usize) -> Word {
    Word::from_letters(&vec![1; n])
}

fn lit(s: &str) -> Word {
    Word::periodic(s).expect("literal words are valid")
}

/// Length of each word returned by [`dominant_extensions`].
pub fn extension_len(w_len: usize, kappa: usize) -> usize {
    if kappa % 2 == 1 {
        3 * w_len + kappa + 6
    } else {
        3 * w_len + kappa + 4
    }
}

/// The two dominant extensions of `w` for a given `κ > |w|`.
///
/// Odd `κ`: `w·10·1^κ·10·1^|w|·X·1^|w|`; even `κ`: `w·1^κ·10·1^|w|·X·1^|w|`,
/// with `X = 01` for the first word and `X = 10` for the second.
pub fn dominant_extensions(w: &Word, kappa: usize) -> Result<(Word, Word), SymbolicError> {
    if !is_dominant_word(w) {
        return Err(SymbolicError::Domain(format!("{w} is not dominant")));
    }
    if kappa <= w.len() {
        return Err(SymbolicError::Domain(format!(
            "kappa must exceed |w| = {}, got {kappa}",
            w.len()
        )));
    }
    let n = w.len();
    let mut head = w.clone();
    if kappa % 2 == 1 {
        head = head.concat(&lit("10"));
    }
    head = head.concat(&ones(kappa)).concat(&lit("10")).concat(&ones(n));
    let a = head.concat(&lit("01")).concat(&ones(n));
    let b = head.concat(&lit("10")).concat(&ones(n));
    for x in [&a, &b] {
        if !is_dominant_word(x) {
            return Err(SymbolicError::Internal(format!("extension {x} is not dominant")));
        }
    }
    Ok((a, b))
}

/// `w1 · w2^n`, checking every hypothesis of the concatenation criterion and
/// then re-checking admissibility of the result.
pub fn concat_admissible(w1: &Word, w2: &Word, n: usize) -> Result<Word, SymbolicError> {
    let mut failed = Vec::new();
    if !is_dominant_word(w1) {
        failed.push("w1 is not dominant".to_string());
    }
    if !is_admissible(w2) {
        failed.push("w2 is not admissible".to_string());
    }
    if !w2.is_primitive() {
        failed.push("w2 is a proper power".to_string());
    }
    let (l1, l2) = (w1.len(), w2.len());
    if !(l1 > n * l2) {
        failed.push(format!("|w1| = {l1} must exceed n|w2| = {}", n * l2));
    }
    if !(2 * n * l2 > l1) {
        failed.push(format!("2n|w2| = {} must exceed |w1| = {l1}", 2 * n * l2));
    }
    if twisted_lex_compare(w1, w2) != Ordering::Greater {
        failed.push("w1 must be greater than w2".to_string());
    }
    let tail = w2.repeat(n);
    if tail.sign() != Sign::Plus {
        failed.push("w2^n has negative sign".to_string());
    }
    if !failed.is_empty() {
        return Err(SymbolicError::Precondition(failed.join("; ")));
    }
    let out = w1.concat(&tail);
    if !is_admissible(&out) {
        return Err(SymbolicError::Internal(format!("{out} is not admissible")));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerTail {
    /// `v^n · 1^∞` as a preperiodic word.
    pub word: Word,
    pub admissible: bool,
}

/// `v^n · 1^∞` for dominant `v`.
pub fn power_tail_word(v: &Word, n: usize) -> Result<PowerTail, SymbolicError> {
    if !is_dominant_word(v) {
        return Err(SymbolicError::Domain(format!("{v} is not dominant")));
    }
    if n == 0 {
        return Err(SymbolicError::Domain("n must be at least 1".into()));
    }
    let word = Word::preperiodic(&v.repeat(n), &lit("1"))?;
    let admissible = is_admissible(&word);
    Ok(PowerTail { word, admissible })
}

/// Result of [`irreducible_extension`].
#[derive(Clone, Debug)]
pub struct IrreducibleExtension {
    pub w1_prime: Word,
    pub m_prime: usize,
    /// `w1' · w2^{m'}`, of length `2^n`.
    pub word: Word,
    pub n: u32,
    /// Parry polynomial divided by `z - 1`.
    pub reduced: IntPoly,
}

/// Extends `w1` with one of its dominant extensions and picks `m' ≥ m` so
/// that `w1'·w2^{m'}` is admissible, has length a power of two, and its
/// Parry polynomial divided by `z - 1` carries an irreducibility
/// certificate. Searches lengths up to `2^max_n`.
pub fn irreducible_extension(
    w1: &Word,
    w2: &Word,
    m: usize,
    max_n: u32,
) -> Result<IrreducibleExtension, SymbolicError> {
    let (l1, l2) = (w1.len(), w2.len());
    if !(2 * m * l2 > l1 && l1 > m * l2) {
        return Err(SymbolicError::Precondition(format!(
            "need 2m|w2| > |w1| > m|w2| with m = {m}"
        )));
    }
    for n in 1..=max_n {
        let total = 1usize << n;
        for m_prime in m.max(1).. {
            let tail_len = m_prime * l2;
            if tail_len >= total {
                break;
            }
            let lp = total - tail_len;
            if lp <= tail_len {
                break;
            }
            if 2 * tail_len <= lp {
                continue;
            }
            let extra = if (lp + l1).is_multiple_of(2) { 4 } else { 6 };
            let Some(kappa) = lp.checked_sub(3 * l1 + extra) else { continue };
            if kappa <= l1 {
                continue;
            }
            let Ok((a, b)) = dominant_extensions(w1, kappa) else { continue };
            for w1p in [a, b] {
                debug_assert_eq!(w1p.len(), lp);
                let Ok(word) = concat_admissible(&w1p, w2, m_prime) else { continue };
                let reduced = parry_polynomial(&word)
                    .and_then(|p| p.div_linear(1))
                    .map_err(|e| SymbolicError::Internal(e.to_string()))?;
                if irreducibility_certificate(&reduced) == Certificate::Certified {
                    return Ok(IrreducibleExtension {
                        w1_prime: w1p,
                        m_prime,
                        word,
                        n,
                        reduced,
                    });
                }
            }
        }
    }
    Err(SymbolicError::Domain(format!(
        "no certified extension of length at most 2^{max_n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn extensions_have_expected_shape() {
        let base = w("1001");
        let (a, b) = dominant_extensions(&base, 5).unwrap();
        assert_eq!(a.len(), extension_len(4, 5));
        assert_eq!(a.to_string(), "10011011111101111011111");
        assert_eq!(b.len(), a.len());
        let (c, _) = dominant_extensions(&base, 6).unwrap();
        assert_eq!(c.len(), extension_len(4, 6));
        assert!(dominant_extensions(&base, 4).is_err());
        assert!(dominant_extensions(&w("10"), 5).is_err());
    }

    #[test]
    fn concat_hypotheses_are_reported() {
        let err = concat_admissible(&w("1001"), &w("100100"), 1).unwrap_err();
        assert!(err.to_string().contains("proper power"));
        let err = concat_admissible(&w("1001"), &w("10"), 2).unwrap_err();
        assert!(err.to_string().contains("must exceed n|w2|"));
    }

    #[test]
    fn power_tail_of_dominant_word() {
        let t = power_tail_word(&w("1001"), 3).unwrap();
        assert_eq!(t.word.to_string(), "100110011001(1)");
        assert!(t.admissible);
        assert!(power_tail_word(&w("10"), 1).is_err());
    }
}
