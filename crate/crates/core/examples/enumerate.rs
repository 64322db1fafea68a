//! Counts of admissible words by length.
//!
//!     cargo run --release --example enumerate -- 24

use teapot::dataset::count_admissible;

fn main() {
    let max_len = std::env::args().nth(1).map_or(20, |s| s.parse().expect("length bound"));
    let stats = count_admissible(max_len, true);
    println!("{:>4} {:>12} {:>12} {:>12} {:>12}", "len", "admissible", "primitive", "maps", "dominant");
    for c in stats.per_length.iter().filter(|c| c.admissible > 0) {
        println!("{:>4} {:>12} {:>12} {:>12} {:>12}", c.len, c.admissible, c.primitive, c.maps, c.dominant);
    }
    println!("total maps {} in {:.2}s", stats.total_maps(), stats.wall_secs);
}
