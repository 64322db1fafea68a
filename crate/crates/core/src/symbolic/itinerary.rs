//! The itinerary of 1 under the tent map of slope `β`.

use super::word::Word;
use super::SymbolicError;
use crate::poly::construct_unchecked;
use crate::roots::leading_root;

const STATE_TOL: f64 = 1e-12;
const ROOT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ItineraryStatus {
    Periodic(usize),
    Preperiodic { preperiod: usize, period: usize },
    /// No repetition found within the letter budget; the word holds the
    /// letters computed so far.
    Truncated,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Itinerary {
    pub word: Word,
    pub status: ItineraryStatus,
}

/// One step of the tent map, returning the letter of `x` and its image.
/// Points within `1e-12` of the turning point count as the turning point,
/// which lies in the left lap and maps to exactly 1.
fn step(beta: f64, x: f64) -> (u8, f64) {
    let bx = beta * x;
    if (bx - 1.0).abs() <= STATE_TOL {
        (0, 1.0)
    } else if bx < 1.0 {
        (0, bx)
    } else {
        (1, (2.0 - bx).max(0.0))
    }
}

/// Iterates 1 for up to `max_len` letters. A candidate repetition is found
/// by comparing orbit points to within `1e-12` and is accepted only if the
/// candidate word's polynomial has `β` as leading root to within `1e-9`.
pub fn itinerary(beta: f64, max_len: usize) -> Result<Itinerary, SymbolicError> {
    if !(beta > 1.0 && beta <= 2.0) {
        return Err(SymbolicError::Domain(format!("beta must lie in (1, 2], got {beta}")));
    }
    if max_len == 0 {
        return Err(SymbolicError::Domain("max_len must be at least 1".into()));
    }
    let mut states = Vec::with_capacity(max_len);
    let mut letters = Vec::with_capacity(max_len);
    let mut x = 1.0;
    for _ in 0..max_len {
        let (letter, next) = step(beta, x);
        states.push(x);
        letters.push(letter);
        x = next;
        for (j, &s) in states.iter().enumerate() {
            if (s - x).abs() > STATE_TOL {
                continue;
            }
            let period = Word::from_letters(&letters[j..]);
            let word = if j == 0 {
                period
            } else {
                Word::preperiodic(&Word::from_letters(&letters[..j]), &period)?
            };
            if confirms(&word, beta) {
                let p = letters.len() - j;
                let status = if j == 0 {
                    ItineraryStatus::Periodic(p)
                } else {
                    ItineraryStatus::Preperiodic {
                        preperiod: j,
                        period: p,
                    }
                };
                return Ok(Itinerary { word, status });
            }
        }
    }
    Ok(Itinerary {
        word: Word::from_letters(&letters),
        status: ItineraryStatus::Truncated,
    })
}

/// Orbit points this close to the turning point (as `|βx - 1|`) are checked
/// against the shorter word that would end there.
const HIT_TOL: f64 = 1e-4;
const SAME_ROOT_TOL: f64 = 1e-10;

/// Whether some tent map has `w` as the itinerary of 1, given
/// `beta = leading_root(P_w)`.
///
/// Shift-admissible words inside a renormalization window (for example
/// `100101100`, whose growth rate is that of `100`) pass the shift test but
/// are not tent-map itineraries: at their growth rate the orbit of 1 already
/// returns to the turning point after a shorter word `u`. The orbit is
/// followed along the branches `w` prescribes; wherever it comes within
/// `HIT_TOL` of the turning point or leaves the lap `w` names, the word
/// `u = w_0..w_{k-1} 0` is tested for admissibility and the same leading
/// root.
pub fn is_realized_at(w: &Word, beta: f64) -> bool {
    if !(beta > 1.0 && beta <= 2.0) || w.len() < 2 {
        return false;
    }
    // A periodic orbit sits at the turning point at its last letter.
    let steps = if w.is_periodic() { w.len() - 1 } else { w.len() + w.period_len() };
    let mut x = 1.0f64;
    for k in 0..steps {
        let letter = w.seq_letter(k);
        let t = beta * x - 1.0;
        let wrong_lap = (letter == 0) != (t <= 0.0);
        if k >= 1 && (t.abs() < HIT_TOL || wrong_lap) {
            let mut u: Vec<u8> = (0..k).map(|i| w.seq_letter(i)).collect();
            u.push(0);
            let u = Word::from_letters(&u);
            if super::is_admissible(&u)
                && leading_root(&construct_unchecked(&u)).is_ok_and(|r| (r - beta).abs() <= SAME_ROOT_TOL)
            {
                return false;
            }
        }
        x = if letter == 0 { beta * x } else { 2.0 - beta * x };
    }
    true
}

/// [`is_realized_at`] with the growth rate computed from `w`.
pub fn is_realized(w: &Word) -> bool {
    leading_root(&construct_unchecked(w)).is_ok_and(|beta| is_realized_at(w, beta))
}

fn confirms(word: &Word, beta: f64) -> bool {
    leading_root(&construct_unchecked(word)).is_ok_and(|r| (r - beta).abs() <= ROOT_TOL)
}
