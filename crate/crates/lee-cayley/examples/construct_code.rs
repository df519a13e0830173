//! Build the Lee code attached to a prime: unit-norm generators,
//! parity-check matrix, code size and classification.
//!
//! ```bash
//! cargo run --example construct_code
//! ```

use lee_cayley::code::build_code;
use lee_cayley::Result;

fn main() -> Result<()> {
    for p in [7u64, 11, 13, 17, 19] {
        let code = build_code(p)?;
        let (correction, covering) = code.classify();
        let [re_row, im_row] = code.parity_check_rows();

        println!("p = {p} (p mod 12 = {})", p % 12);
        println!("  dimension n     : {}", code.dimension());
        println!("  generators      : {:?}", code.representatives());
        println!("  parity check    : {re_row:?}");
        println!("                    {im_row:?}");
        println!("  codewords       : {}", code.codeword_count());
        println!("  classification  : {correction}-correcting, {covering}-covering");
        if (correction, covering) == (2, 3) {
            println!("  -> 2-quasi-perfect");
        } else {
            println!("  -> not 2-quasi-perfect (expected only for p = +-5 mod 12, p >= 7)");
        }
        println!();
    }
    Ok(())
}
