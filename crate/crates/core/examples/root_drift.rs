//! Root drift when one word is pumped inside a concatenation.

use teapot::roots::root_drift_harness;
use teapot::Word;

fn main() -> Result<(), teapot::Error> {
    let w1: Word = "1001".parse()?;
    let w2: Word = "100".parse()?;
    let r = root_drift_harness(&w1, &w2, 1..=10, None)?;
    println!("z0 = {:.6}, λ(w1) = {:.9}", r.z0, r.leading);
    for s in &r.samples {
        println!(
            "n = {:>2}: interior {:.3e}  leading {:.3e}  admissible {:?}",
            s.n, s.interior_distance, s.leading_distance, s.admissible
        );
    }
    Ok(())
}
