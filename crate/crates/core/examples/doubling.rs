//! Period doubling halves the entropy: the doubled word's growth rate is
//! the square root of the original one.

use teapot::poly::parry_polynomial;
use teapot::roots::leading_root;
use teapot::symbolic::period_double;
use teapot::Word;

fn main() -> Result<(), teapot::Error> {
    let mut w: Word = std::env::args().nth(1).unwrap_or_else(|| "100".into()).parse()?;
    for _ in 0..4 {
        let l = leading_root(&parry_polynomial(&w)?)?;
        println!("{:>32}  λ = {l:.15}", w.to_string());
        w = period_double(&w)?;
    }
    Ok(())
}
