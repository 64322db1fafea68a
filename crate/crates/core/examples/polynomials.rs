//! Parry, kneading and preperiodic polynomials of a word, with the
//! irreducibility certificate of the reduced factor.
//!
//!     cargo run --example polynomials -- 1001 "1000011100(101000)"

use teapot::poly::{
    irreducibility_certificate, kneading_polynomial, polynomial_of, remove_trivial_factors,
};
use teapot::Word;

fn main() -> Result<(), teapot::Error> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["1001".into(), "1011".into(), "1000011100(101000)".into()];
    }
    for s in args {
        let w: Word = s.parse()?;
        let p = polynomial_of(&w)?;
        let (q, t) = remove_trivial_factors(&p, !w.is_periodic())?;
        println!("{w}");
        println!("  P(z)      = {p}");
        println!("  reduced   = {q}   (removed (z-1)^{} (z+1)^{})", t.minus_one, t.plus_one);
        println!("  certified = {:?}", irreducibility_certificate(&q));
        if w.is_periodic() {
            match kneading_polynomial(&w) {
                Ok(k) => println!("  kneading  = {k}"),
                Err(e) => println!("  kneading  : {e}"),
            }
        }
    }
    Ok(())
}
