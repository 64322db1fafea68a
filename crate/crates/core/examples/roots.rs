//! All roots and the leading root of a word's polynomial.
//!
//!     cargo run --example roots -- 10010

use teapot::poly::{polynomial_of, remove_trivial_factors};
use teapot::roots::{all_roots, leading_root};
use teapot::Word;

fn main() -> Result<(), teapot::Error> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1000011100(101000)".into());
    let w: Word = arg.parse()?;
    let p = polynomial_of(&w)?;
    let (q, _) = remove_trivial_factors(&p, !w.is_periodic())?;
    println!("{w}: growth rate {:.12}", leading_root(&p)?);
    let rs = all_roots(&q)?;
    println!("{} roots of {q}, scaled residual {:.1e}", rs.count(), rs.residual);
    for r in &rs.roots {
        println!("  {:+.12} {:+.12}i  |z| = {:.6}  x{}", r.z.re, r.z.im, r.z.norm(), r.multiplicity);
    }
    Ok(())
}
