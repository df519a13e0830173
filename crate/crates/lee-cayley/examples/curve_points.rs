//! Point counts on the cubics P_t(x, y) = y(x+1)^2 - x(y+1)(y+t) over
//! Z/pZ for p = 1 (mod 4). The projective counts stay inside the window
//! p + 1 +- 2*sqrt(p), which keeps the affine counts above
//! p - 2 - 2*sqrt(p) and forces the graph diameter down to 3.
//!
//! ```bash
//! cargo run --example curve_points
//! ```

use lee_cayley::normsets::{curve_affine_lower_bound, curve_point_count};
use lee_cayley::zmod::Residue;
use lee_cayley::Result;

fn main() -> Result<()> {
    for p in [13u64, 17, 29] {
        let lower = curve_affine_lower_bound(p);
        let window = (
            (p + 1) as f64 - 2.0 * (p as f64).sqrt(),
            (p + 1) as f64 + 2.0 * (p as f64).sqrt(),
        );
        println!(
            "p = {p}: affine lower bound {lower:.2}, projective window [{:.2}, {:.2}]",
            window.0, window.1
        );
        let mut min_affine = u64::MAX;
        print!("  |V_t| for t = 2..{}: ", p - 1);
        for t in 2..p {
            let count = curve_point_count(Residue::new(t, p))?;
            min_affine = min_affine.min(count.affine);
            print!("{} ", count.affine);
            assert!((count.projective as f64) >= window.0);
            assert!((count.projective as f64) <= window.1);
        }
        println!("\n  min |V_t| = {min_affine} (>= {lower:.2})\n");
    }
    Ok(())
}
