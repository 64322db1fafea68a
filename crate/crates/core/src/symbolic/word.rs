//! Binary words and the eventually periodic sequences they describe.

use std::fmt;
use std::str::FromStr;

use super::SymbolicError;

const CHUNK: usize = 64;

/// How a word's letters unroll into an infinite sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordKind {
    /// The letters are one period: `w^∞`.
    Periodic,
    /// The first `preperiod` letters occur once, the rest repeat forever.
    Preperiodic { preperiod: usize },
}

/// A finite string over `{0,1}`, packed 64 letters per `u64`, tagged with
/// the way it unrolls into an itinerary.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    chunks: Vec<u64>,
    len: usize,
    kind: WordKind,
}

/// Sign of a slope or of a running product of slopes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `E(0) = +1`, `E(1) = -1`.
    pub fn of_letter(letter: u8) -> Sign {
        if letter == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }
}

/// Cumulative signs `s(1), s(2), …` of a word, one longer than the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSeq(Vec<Sign>);

impl SignSeq {
    pub fn as_slice(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sign after the final letter.
    pub fn last(&self) -> Sign {
        *self.0.last().expect("sign sequences always hold s(1)")
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if s.is_positive() { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// `s(1) = +1`, `s(j+1) = E(w_j) s(j)`.
pub fn cumulative_signs(w: &Word) -> SignSeq {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut s = Sign::Plus;
    out.push(s);
    for letter in w.letters() {
        s = s.times(Sign::of_letter(letter));
        out.push(s);
    }
    SignSeq(out)
}

impl Word {
    fn empty(kind: WordKind) -> Word {
        Word {
            chunks: Vec::new(),
            len: 0,
            kind,
        }
    }

    /// Builds a periodic word from letters; any nonzero byte counts as 1.
    pub fn from_letters(letters: &[u8]) -> Word {
        let mut w = Word::empty(WordKind::Periodic);
        for &l in letters {
            w.push(l);
        }
        w
    }

    /// A periodic word from a string of `0`/`1` characters.
    pub fn periodic(s: &str) -> Result<Word, SymbolicError> {
        let letters = parse_letters(s)?;
        if letters.is_empty() {
            return Err(SymbolicError::EmptyWord);
        }
        Ok(Word::from_letters(&letters))
    }

    /// `pre · per^∞`; the period must be nonempty.
    pub fn preperiodic(pre: &Word, per: &Word) -> Result<Word, SymbolicError> {
        if per.is_empty() {
            return Err(SymbolicError::EmptyWord);
        }
        let mut w = Word::empty(WordKind::Preperiodic {
            preperiod: pre.len(),
        });
        for l in pre.letters().chain(per.letters()) {
            w.push(l);
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn kind(&self) -> WordKind {
        self.kind
    }

    pub fn is_periodic(&self) -> bool {
        self.kind == WordKind::Periodic
    }

    pub fn preperiod_len(&self) -> usize {
        match self.kind {
            WordKind::Periodic => 0,
            WordKind::Preperiodic { preperiod } => preperiod,
        }
    }

    pub fn period_len(&self) -> usize {
        self.len - self.preperiod_len()
    }

    /// Letter `i` of the stored string (0-indexed).
    #[inline]
    pub fn letter(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        ((self.chunks[i / CHUNK] >> (i % CHUNK)) & 1) as u8
    }

    /// Letter `i` (0-indexed) of the infinite sequence this word describes.
    #[inline]
    pub fn seq_letter(&self, i: usize) -> u8 {
        if i < self.len {
            return self.letter(i);
        }
        let pre = self.preperiod_len();
        let per = self.len - pre;
        self.letter(pre + (i - pre) % per)
    }

    pub fn push(&mut self, letter: u8) {
        if self.len.is_multiple_of(CHUNK) {
            self.chunks.push(0);
        }
        if letter != 0 {
            self.chunks[self.len / CHUNK] |= 1 << (self.len % CHUNK);
        }
        self.len += 1;
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |i| self.letter(i))
    }

    /// The infinite sequence, starting at shift `j`.
    pub fn sequence_from(&self, j: usize) -> impl Iterator<Item = u8> + '_ {
        (j..).map(move |i| self.seq_letter(i))
    }

    pub fn to_letters(&self) -> Vec<u8> {
        self.letters().collect()
    }

    pub fn count_ones(&self) -> usize {
        self.chunks.iter().map(|c| c.count_ones() as usize).sum()
    }

    /// Cumulative sign of the whole stored string.
    pub fn sign(&self) -> Sign {
        if self.count_ones().is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// The preperiodic part as a periodic-kind word (possibly empty).
    pub fn preperiod(&self) -> Word {
        self.slice(0, self.preperiod_len())
    }

    /// The repeating part as a periodic word.
    pub fn period(&self) -> Word {
        self.slice(self.preperiod_len(), self.len)
    }

    /// Letters `start..end` as a periodic-kind word.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        let mut w = Word::empty(WordKind::Periodic);
        for i in start..end {
            w.push(self.letter(i));
        }
        w
    }

    /// Concatenation of the stored letters; the result is periodic-kind.
    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.slice(0, self.len);
        for l in other.letters() {
            w.push(l);
        }
        w
    }

    /// `self^n` as a periodic-kind word.
    pub fn repeat(&self, n: usize) -> Word {
        let mut w = Word::empty(WordKind::Periodic);
        for _ in 0..n {
            for l in self.letters() {
                w.push(l);
            }
        }
        w
    }

    pub fn starts_with(&self, prefix: &[u8]) -> bool {
        prefix.len() <= self.len && prefix.iter().enumerate().all(|(i, &l)| self.letter(i) == l)
    }

    /// True when the stored letters are not a proper power `u^k`, `k ≥ 2`.
    pub fn is_primitive(&self) -> bool {
        let n = self.len;
        (1..n)
            .filter(|p| n.is_multiple_of(*p))
            .all(|p| (p..n).any(|i| self.letter(i) != self.letter(i - p)))
    }

    /// Stable 64-bit identifier.
    ///
    /// Periodic words map to `(1 << len) | bits` with the first letter as the
    /// most significant bit, so ids sort by length and then lexicographically.
    /// Preperiodic words also carry their preperiod length in the top byte.
    pub fn id(&self) -> u64 {
        assert!(self.len <= 55, "word ids are defined for words of length at most 55");
        let mut bits: u64 = 1;
        for l in self.letters() {
            bits = (bits << 1) | l as u64;
        }
        match self.kind {
            WordKind::Periodic => bits,
            WordKind::Preperiodic { preperiod } => ((preperiod as u64 + 1) << 56) | bits,
        }
    }

    /// Inverse of [`Word::id`].
    pub fn from_id(id: u64) -> Option<Word> {
        let top = id >> 56;
        let bits = id & ((1 << 56) - 1);
        if bits == 0 {
            return None;
        }
        let len = 63 - bits.leading_zeros() as usize;
        let mut w = Word::empty(WordKind::Periodic);
        for i in (0..len).rev() {
            w.push(((bits >> i) & 1) as u8);
        }
        if top > 0 {
            let preperiod = (top - 1) as usize;
            if preperiod >= len {
                return None;
            }
            w.kind = WordKind::Preperiodic { preperiod };
        }
        Some(w)
    }
}

fn parse_letters(s: &str) -> Result<Vec<u8>, SymbolicError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(SymbolicError::BadLetter(other)),
        })
        .collect()
}

impl FromStr for Word {
    type Err = SymbolicError;

    /// Accepts `100` (periodic) or `1000011100(101000)` (preperiodic).
    fn from_str(s: &str) -> Result<Word, SymbolicError> {
        let s = s.trim();
        match s.find('(') {
            None => Word::periodic(s),
            Some(open) => {
                let rest = &s[open + 1..];
                let body = rest
                    .strip_suffix(")^∞")
                    .or_else(|| rest.strip_suffix(")"))
                    .ok_or(SymbolicError::BadLetter('('))?;
                let pre = Word::from_letters(&parse_letters(&s[..open])?);
                let per = Word::from_letters(&parse_letters(body)?);
                if pre.is_empty() {
                    Ok(per)
                } else {
                    Word::preperiodic(&pre, &per)
                }
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre = self.preperiod_len();
        for i in 0..self.len {
            if self.kind != WordKind::Periodic && i == pre {
                f.write_str("(")?;
            }
            f.write_str(if self.letter(i) == 1 { "1" } else { "0" })?;
        }
        if self.kind != WordKind::Periodic {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn signs_of_small_words() {
        assert_eq!(cumulative_signs(&w("1")).to_string(), "+-");
        assert_eq!(cumulative_signs(&w("100")).to_string(), "+---");
    }

    #[test]
    fn signs_of_preperiodic_witness() {
        let s = cumulative_signs(&w("1000011100(101000)")).to_string();
        assert_eq!(&s[..10], "+-----+-++");
        assert_eq!(&s[10..16], "+--+++");
    }

    #[test]
    fn sequence_unrolls_period() {
        let u = w("10(1)");
        let head: Vec<u8> = u.sequence_from(0).take(8).collect();
        assert_eq!(head, vec![1, 0, 1, 1, 1, 1, 1, 1]);
        let v = w("100");
        let head: Vec<u8> = v.sequence_from(1).take(5).collect();
        assert_eq!(head, vec![0, 0, 1, 0, 0]);
    }

    #[test]
    fn long_words_pack_across_chunks() {
        let letters: Vec<u8> = (0..150).map(|i| ((i * 7 + i / 3) % 2) as u8).collect();
        let word = Word::from_letters(&letters);
        assert_eq!(word.to_letters(), letters);
        assert_eq!(word.count_ones(), letters.iter().filter(|&&l| l == 1).count());
    }

    #[test]
    fn display_round_trips() {
        for s in ["100", "1000011100(101000)", "10(1)", "1"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(w("(10)").to_string(), "10");
        assert!("10a".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
    }

    #[test]
    fn ids_round_trip() {
        for s in ["10", "100", "101111", "1000011100(101000)", "1(0)"] {
            let word = w(s);
            assert_eq!(Word::from_id(word.id()).unwrap(), word);
        }
        assert!(w("10").id() < w("100").id());
        assert!(w("100").id() < w("101").id());
    }

    #[test]
    fn primitivity() {
        assert!(w("100").is_primitive());
        assert!(!w("100100").is_primitive());
        assert!(!w("1010").is_primitive());
        assert!(w("1011").is_primitive());
        assert!(w("1").is_primitive());
    }
}
