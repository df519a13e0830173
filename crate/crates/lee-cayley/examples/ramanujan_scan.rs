//! Character-sum spectra: scan the odd primes and compare the largest
//! nontrivial eigenvalue against the Ramanujan bound 2*sqrt(deg - 1).
//! Below 100 exactly two primes (17 and 53) exceed the bound, both
//! congruent to 1 mod 4.
//!
//! ```bash
//! cargo run --release --example ramanujan_scan
//! ```

use lee_cayley::spectral::{scan_primes, ResidueFilter};

fn main() {
    let report = scan_primes(100, ResidueFilter::All, false);
    println!(
        "{:>5} {:>7} {:>6} {:>12} {:>10} {:>10}  verdict",
        "p", "p mod 4", "deg", "max |lambda|", "bound", "margin"
    );
    for row in &report.rows {
        println!(
            "{:>5} {:>7} {:>6} {:>12.6} {:>10.6} {:>+10.6}  {}",
            row.p,
            row.p % 4,
            row.degree,
            row.max_nontrivial,
            row.ramanujan_bound,
            row.margin,
            if row.is_ramanujan { "Ramanujan" } else { "NOT Ramanujan" }
        );
    }

    let exceptions: Vec<u64> = report
        .rows
        .iter()
        .filter(|r| !r.is_ramanujan)
        .map(|r| r.p)
        .collect();
    println!("\nexceptions below 100: {exceptions:?}");
    println!("(the only further exception below 1000 is 541; include it with the");
    println!(" `--extended` flag of `lee-cayley spectrum --scan`)");
}
