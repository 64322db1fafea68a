//! Itinerary of 1 under the tent map of a given slope.

use teapot::symbolic::itinerary;

fn main() -> Result<(), teapot::SymbolicError> {
    let betas: Vec<f64> = match std::env::args().nth(1) {
        Some(s) => vec![s.parse().expect("slope as a number")],
        None => vec![(1.0 + 5f64.sqrt()) / 2.0, 2f64.sqrt(), 1.8, 2.0],
    };
    for beta in betas {
        let it = itinerary(beta, 64)?;
        println!("β = {beta:.10}: {} {:?}", it.word, it.status);
    }
    Ok(())
}
