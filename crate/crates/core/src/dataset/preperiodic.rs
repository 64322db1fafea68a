//! Strictly preperiodic admissible itineraries.

use std::sync::Mutex;

use super::enumerate::for_each_viable_prefix;
use crate::symbolic::{is_admissible, Word};

/// Every admissible `pre · per^∞` with `|pre| + |per| ≤ max_total` that is
/// not purely periodic, each in its shortest form: `per` primitive and the
/// last letters of `pre` and `per` different (otherwise both could be
/// rotated back by one). Sorted by word id.
pub fn enumerate_preperiodic(max_total: usize) -> Vec<Word> {
    assert!(max_total >= 3, "max_total must be at least 3");
    let found = Mutex::new(Vec::new());
    for_each_viable_prefix(max_total, |u: &[u8]| {
        let n = u.len();
        let mut mine = Vec::new();
        for k in 1..n {
            if u[k - 1] == u[n - 1] {
                continue;
            }
            let per = Word::from_letters(&u[k..]);
            if !per.is_primitive() {
                continue;
            }
            let w = Word::preperiodic(&Word::from_letters(&u[..k]), &per).expect("period is nonempty");
            if is_admissible(&w) {
                mine.push(w.id());
            }
        }
        if !mine.is_empty() {
            found.lock().expect("mutex poisoned").extend(mine);
        }
    });
    let mut ids = found.into_inner().expect("mutex poisoned");
    ids.sort_unstable();
    ids.into_iter()
        .map(|id| Word::from_id(id).expect("valid id"))
        .collect()
}
