//! Depth-first enumeration of admissible periodic words.
//!
//! A prefix carries the set of shifts that still agree with the start of the
//! word ("tied" shifts). Appending a letter either keeps a shift tied,
//! settles it as smaller, or shows it is larger, in which case no completion
//! of the prefix is admissible and the subtree is cut.

use std::cmp::Ordering;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::symbolic::admissible::shift_cmp;
use crate::symbolic::{is_dominant_word, Word};

/// Prefix length at which subtrees are handed to the thread pool.
const SPLIT_DEPTH: usize = 12;
pub const MAX_WORD_LEN: usize = 63;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LengthCounts {
    pub len: usize,
    pub admissible: u64,
    pub primitive: u64,
    /// Primitive words ending in 0. Every superattracting map has exactly
    /// one; a small share (renormalization windows) belong to no tent map,
    /// which the cloud builder detects and skips.
    pub maps: u64,
    /// Only filled when dominance counting is requested.
    pub dominant: u64,
}

impl LengthCounts {
    fn add(&mut self, o: &LengthCounts) {
        self.admissible += o.admissible;
        self.primitive += o.primitive;
        self.maps += o.maps;
        self.dominant += o.dominant;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct EnumStats {
    pub max_len: usize,
    /// Indexed by length; entries 0 and 1 are always zero.
    pub per_length: Vec<LengthCounts>,
    pub wall_secs: f64,
}

impl EnumStats {
    pub fn total_admissible(&self) -> u64 {
        self.per_length.iter().map(|c| c.admissible).sum()
    }

    pub fn total_maps(&self) -> u64 {
        self.per_length.iter().map(|c| c.maps).sum()
    }

    /// Cumulative admissible counts: entry `n` counts lengths `≤ n`.
    pub fn cumulative_admissible(&self) -> Vec<u64> {
        self.per_length
            .iter()
            .scan(0, |acc, c| {
                *acc += c.admissible;
                Some(*acc)
            })
            .collect()
    }
}

/// Facts about a word found during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WordInfo {
    pub primitive: bool,
}

/// The one candidate word per map: primitive and ending in 0. Its partner
/// ending in 1 has the same Parry polynomial. See
/// [`crate::symbolic::is_realized`] for the words no tent map realizes.
pub fn is_map_representative(letters: &[u8], info: WordInfo) -> bool {
    info.primitive && letters.last() == Some(&0)
}

#[derive(Clone)]
struct Node {
    buf: [u8; MAX_WORD_LEN + 1],
    par: [u8; MAX_WORD_LEN + 2],
    len: usize,
    tied: u64,
}

impl Node {
    fn root() -> Node {
        let mut n = Node {
            buf: [0; MAX_WORD_LEN + 1],
            par: [0; MAX_WORD_LEN + 2],
            len: 2,
            tied: 0,
        };
        n.buf[0] = 1;
        n.par[1] = 1;
        n.par[2] = 1;
        n
    }

    /// New tied set after appending `a`, or `None` when some shift becomes
    /// larger than the word.
    #[inline]
    fn extend(&self, a: u8) -> Option<u64> {
        let m = self.len;
        let mut out = 0u64;
        let mut t = self.tied;
        while t != 0 {
            let j = t.trailing_zeros() as usize;
            t &= t - 1;
            let b = self.buf[m - j];
            if a == b {
                out |= 1 << j;
            } else {
                let positive = self.par[m - j] == 0;
                if (a > b) == positive {
                    return None;
                }
            }
        }
        if a == 1 {
            out |= 1 << m;
        }
        Some(out)
    }

    fn push(&mut self, a: u8, tied: u64) {
        let m = self.len;
        self.buf[m] = a;
        self.par[m + 1] = self.par[m] ^ a;
        self.len = m + 1;
        self.tied = tied;
    }

    fn pop(&mut self, tied: u64) {
        self.len -= 1;
        self.tied = tied;
    }

    fn letters(&self) -> &[u8] {
        &self.buf[..self.len]
    }

    /// Is the current prefix, read as a whole period, admissible?
    #[inline]
    fn complete(&self) -> Option<WordInfo> {
        let w = self.letters();
        let mut primitive = true;
        let mut t = self.tied;
        while t != 0 {
            let j = t.trailing_zeros() as usize;
            t &= t - 1;
            match shift_cmp(w, j) {
                Ordering::Greater => return None,
                Ordering::Equal => primitive = false,
                Ordering::Less => {}
            }
        }
        Some(WordInfo { primitive })
    }
}

fn walk<F: FnMut(&[u8], WordInfo)>(node: &mut Node, max_len: usize, f: &mut F) {
    if let Some(info) = node.complete() {
        f(node.letters(), info);
    }
    if node.len >= max_len {
        return;
    }
    let saved = node.tied;
    for a in [0u8, 1] {
        if let Some(t) = node.extend(a) {
            node.push(a, t);
            walk(node, max_len, f);
            node.pop(saved);
        }
    }
}

/// Walks to `split`, calling `f` on complete words shorter than `split` and
/// collecting the viable prefixes of length `split`.
fn split_tasks<F: FnMut(&[u8], WordInfo)>(
    node: &mut Node,
    split: usize,
    tasks: &mut Vec<Node>,
    f: &mut F,
) {
    if node.len == split {
        tasks.push(node.clone());
        return;
    }
    if let Some(info) = node.complete() {
        f(node.letters(), info);
    }
    let saved = node.tied;
    for a in [0u8, 1] {
        if let Some(t) = node.extend(a) {
            node.push(a, t);
            split_tasks(node, split, tasks, f);
            node.pop(saved);
        }
    }
}

fn walk_prefixes<F: FnMut(&[u8])>(node: &mut Node, max_len: usize, f: &mut F) {
    f(node.letters());
    if node.len >= max_len {
        return;
    }
    let saved = node.tied;
    for a in [0u8, 1] {
        if let Some(t) = node.extend(a) {
            node.push(a, t);
            walk_prefixes(node, max_len, f);
            node.pop(saved);
        }
    }
}

/// Calls `f` on every prefix of length `2..=max_len` that some admissible
/// sequence can start with, i.e. no shift is already larger.
pub(crate) fn for_each_viable_prefix<F>(max_len: usize, f: F)
where
    F: Fn(&[u8]) + Sync,
{
    check_len(max_len);
    let split = max_len.min(SPLIT_DEPTH);
    let mut tasks = Vec::new();
    let mut root = Node::root();
    split_tasks(&mut root, split, &mut tasks, &mut |_: &[u8], _| {});
    collect_short_prefixes(&mut Node::root(), split, &f);
    tasks.into_par_iter().for_each(|mut node| {
        walk_prefixes(&mut node, max_len, &mut |w: &[u8]| f(w));
    });
}

fn collect_short_prefixes<F: Fn(&[u8])>(node: &mut Node, split: usize, f: &F) {
    if node.len >= split {
        return;
    }
    f(node.letters());
    let saved = node.tied;
    for a in [0u8, 1] {
        if let Some(t) = node.extend(a) {
            node.push(a, t);
            collect_short_prefixes(node, split, f);
            node.pop(saved);
        }
    }
}

fn check_len(max_len: usize) {
    assert!(
        (2..=MAX_WORD_LEN).contains(&max_len),
        "max_len must lie in 2..={MAX_WORD_LEN}"
    );
}

/// Calls `f` on every admissible word of length `2..=max_len`, from worker
/// threads and in no particular order.
pub fn for_each_admissible<F>(max_len: usize, f: F)
where
    F: Fn(&[u8], WordInfo) + Sync,
{
    check_len(max_len);
    let split = max_len.min(SPLIT_DEPTH);
    let mut tasks = Vec::new();
    let mut root = Node::root();
    split_tasks(&mut root, split, &mut tasks, &mut |w: &[u8], i| f(w, i));
    tasks.into_par_iter().for_each(|mut node| {
        walk(&mut node, max_len, &mut |w: &[u8], i| f(w, i));
    });
}

/// Per-length counts. Dominance testing is quadratic per word, so it is
/// only done when asked for.
pub fn count_admissible(max_len: usize, count_dominant: bool) -> EnumStats {
    check_len(max_len);
    let start = Instant::now();
    let totals = Mutex::new(vec![LengthCounts::default(); max_len + 1]);
    let split = max_len.min(SPLIT_DEPTH);
    let mut tasks = Vec::new();
    let mut local = vec![LengthCounts::default(); max_len + 1];
    let tally = |counts: &mut Vec<LengthCounts>, w: &[u8], info: WordInfo| {
        let c = &mut counts[w.len()];
        c.admissible += 1;
        c.primitive += info.primitive as u64;
        c.maps += is_map_representative(w, info) as u64;
        if count_dominant && is_dominant_word(&Word::from_letters(w)) {
            c.dominant += 1;
        }
    };
    let mut root = Node::root();
    split_tasks(&mut root, split, &mut tasks, &mut |w: &[u8], i| tally(&mut local, w, i));
    tasks.into_par_iter().for_each(|mut node| {
        let mut mine = vec![LengthCounts::default(); max_len + 1];
        walk(&mut node, max_len, &mut |w: &[u8], i| tally(&mut mine, w, i));
        let mut all = totals.lock().expect("count mutex poisoned");
        for (a, b) in all.iter_mut().zip(&mine) {
            a.add(b);
        }
    });
    let mut per_length = totals.into_inner().expect("count mutex poisoned");
    for (len, (a, b)) in per_length.iter_mut().zip(&local).enumerate() {
        a.add(b);
        a.len = len;
    }
    EnumStats {
        max_len,
        per_length,
        wall_secs: start.elapsed().as_secs_f64(),
    }
}

/// Every admissible word of length `2..=max_len`, sorted by word id (length,
/// then lexicographic), with counts.
pub fn enumerate_admissible(max_len: usize) -> (Vec<Word>, EnumStats) {
    let stats = count_admissible(max_len, false);
    let ids = Mutex::new(Vec::with_capacity(stats.total_admissible() as usize));
    collect_ids(max_len, &ids, |_, _| true);
    let mut ids = ids.into_inner().expect("id mutex poisoned");
    ids.sort_unstable();
    let words = ids.into_iter().map(word_from_bits).collect();
    (words, stats)
}

/// Candidate map words ([`is_map_representative`]), sorted by word id.
pub fn map_representatives(max_len: usize) -> Vec<Word> {
    let ids = Mutex::new(Vec::new());
    collect_ids(max_len, &ids, is_map_representative);
    let mut ids = ids.into_inner().expect("id mutex poisoned");
    ids.sort_unstable();
    ids.into_iter().map(word_from_bits).collect()
}

fn collect_ids(max_len: usize, out: &Mutex<Vec<u64>>, keep: impl Fn(&[u8], WordInfo) -> bool + Sync) {
    let split = max_len.min(SPLIT_DEPTH);
    let mut tasks = Vec::new();
    let mut root = Node::root();
    let mut head = Vec::new();
    split_tasks(&mut root, split, &mut tasks, &mut |w: &[u8], i| {
        if keep(w, i) {
            head.push(bits_of(w));
        }
    });
    out.lock().expect("id mutex poisoned").extend(head);
    tasks.into_par_iter().for_each(|mut node| {
        let mut mine = Vec::new();
        walk(&mut node, max_len, &mut |w: &[u8], i| {
            if keep(w, i) {
                mine.push(bits_of(w));
            }
        });
        out.lock().expect("id mutex poisoned").extend(mine);
    });
}

/// `(1 << len) | letters`, first letter most significant; equals the word id.
fn bits_of(w: &[u8]) -> u64 {
    w.iter().fold(1u64, |acc, &l| (acc << 1) | l as u64)
}

fn word_from_bits(id: u64) -> Word {
    Word::from_id(id).expect("enumerated ids are valid")
}
