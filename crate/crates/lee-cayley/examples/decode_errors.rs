//! Syndrome decoding in action: corrupt random codewords and decode them
//! back. Errors of Lee weight up to 2 are always recovered exactly; any
//! word at all is decoded to a codeword within the covering radius 3.
//!
//! ```bash
//! cargo run --example decode_errors
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lee_cayley::code::{build_code, lee_distance, lee_weight, Word};
use lee_cayley::Result;

fn main() -> Result<()> {
    let p = 17u64;
    let code = build_code(p)?;
    let n = code.dimension();
    let (capacity, covering) = code.classify();
    println!(
        "p = {p}: n = {n}, {capacity}-correcting, {covering}-covering, {} codewords\n",
        code.codeword_count()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(7);

    for weight_budget in [1u64, 2, 3] {
        let trials = 2000;
        let mut exact = 0u64;
        let mut max_distance = 0u64;
        for _ in 0..trials {
            let sent = code.random_codeword(&mut rng);
            // Random error: `weight_budget` unit steps in random coordinates.
            let mut steps = vec![0i64; n];
            for _ in 0..weight_budget {
                let j = rng.gen_range(0..n);
                steps[j] += if rng.gen_bool(0.5) { 1 } else { -1 };
            }
            let error = Word::from_signed(&steps, p);
            let received = sent.add(&error)?;

            let decoded = code.decode(&received)?;
            if decoded.codeword == sent {
                exact += 1;
            }
            max_distance = max_distance.max(lee_distance(&received, &decoded.codeword)?);

            // Within capacity the decoder must return the exact error.
            if lee_weight(&error) <= capacity as u64 {
                assert_eq!(decoded.codeword, sent);
                assert_eq!(decoded.error, error);
            }
        }
        println!(
            "weight budget {weight_budget}: {exact}/{trials} exact recoveries, \
             max decode distance {max_distance} (covering radius {covering})"
        );
    }

    // A single worked decode.
    let sent = code.random_codeword(&mut rng);
    let error = Word::from_signed(&{
        let mut e = vec![0i64; n];
        e[0] = 1;
        e[3] = -1;
        e
    }, p);
    let received = sent.add(&error)?;
    let decoded = code.decode(&received)?;
    println!("\nworked example:");
    println!("  sent     : {:?}", sent.coords());
    println!("  error    : {:?} (weight {})", error.coords(), lee_weight(&error));
    println!("  received : {:?}", received.coords());
    println!("  syndrome : {}", code.syndrome(&received)?);
    println!("  decoded  : {:?}", decoded.codeword.coords());
    assert_eq!(decoded.codeword, sent);
    Ok(())
}
