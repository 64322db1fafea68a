//! Dominant extensions, admissible concatenations and an extension whose
//! reduced Parry polynomial is certified irreducible.

use teapot::poly::irreducibility_certificate;
use teapot::symbolic::{concat_admissible, dominant_extensions, irreducible_extension, power_tail_word};
use teapot::Word;

fn main() -> Result<(), teapot::Error> {
    let w: Word = "1001".parse()?;
    for kappa in 5..=8 {
        let (a, b) = dominant_extensions(&w, kappa)?;
        println!("κ = {kappa}: {a}\n       {b}");
    }

    let v: Word = "1001".parse()?;
    let t = power_tail_word(&v, 3)?;
    println!("{} admissible: {}", t.word, t.admissible);

    for (a, b, n) in [("10001", "10", 2), ("1011", "100", 3)] {
        let (w1, w2): (Word, Word) = (a.parse()?, b.parse()?);
        match concat_admissible(&w1, &w2, n) {
            Ok(c) => println!("{w1}·{w2}^{n} = {c}"),
            Err(e) => println!("{w1}·{w2}^{n}: {e}"),
        }
    }

    let w1: Word = "101".parse()?;
    let w2: Word = "10".parse()?;
    let ext = irreducible_extension(&w1, &w2, 1, 7)?;
    println!(
        "{}·{w2}^{} has length {} = 2^{}; P/(z-1) {:?}",
        ext.w1_prime,
        ext.m_prime,
        ext.word.len(),
        ext.n,
        irreducibility_certificate(&ext.reduced)
    );
    Ok(())
}
