//! Admissibility, cumulative signs, auxiliary strings and the twisted order.
//!
//!     cargo run --example words -- 1001 10100 1011

use teapot::symbolic::{
    auxiliary_string, cumulative_signs, is_admissible, is_dominant_word, twisted_lex_compare,
    AuxFlavor,
};
use teapot::Word;

fn main() -> Result<(), teapot::SymbolicError> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["100".into(), "1001".into(), "10100".into(), "1011".into(), "10(1)".into()];
    }
    let words: Vec<Word> = args.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    for w in &words {
        let signs: String = cumulative_signs(w)
            .as_slice()
            .iter()
            .map(|s| if s.is_positive() { '+' } else { '-' })
            .collect();
        let aux = if w.is_periodic() && w.starts_with(&[1]) {
            auxiliary_string(w, AuxFlavor::Zeros).map(|a| a.to_string()).unwrap_or_default()
        } else {
            String::new()
        };
        println!(
            "{w:>12}  signs {signs:<12} aux {aux:<10} admissible {:<5} dominant {}",
            is_admissible(w),
            w.is_periodic() && is_dominant_word(w)
        );
    }
    let mut sorted = words.clone();
    sorted.sort_by(twisted_lex_compare);
    println!("twisted order: {}", sorted.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" < "));
    Ok(())
}
