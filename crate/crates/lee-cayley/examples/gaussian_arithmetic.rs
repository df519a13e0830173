//! A tour of the underlying arithmetic: norms, units and zero divisors of
//! Z[i]/pZ[i], the unit-norm generator set (computed two ways), cosets
//! identified by norms, and neighbor-norm sets.
//!
//! ```bash
//! cargo run --example gaussian_arithmetic
//! ```

use lee_cayley::normsets::{
    code_dimension, coset, neighbor_norms, neighbor_norms_poly, norm_class, unit_norm_set,
    unit_norm_set_param, zero_divisor_neighbor_norms,
};
use lee_cayley::zmod::{GaussRes, Residue};
use lee_cayley::Result;

fn main() -> Result<()> {
    // p = 13 splits in Z[i], so the quotient has zero divisors.
    let p = 13u64;
    let n = code_dimension(p);
    println!("p = {p}, n = {n}");

    let h = unit_norm_set(p)?;
    println!("unit-norm set H ({} elements): {:?}", h.len(), h.elements());
    assert_eq!(h, unit_norm_set_param(p)?); // O(p) parametrization agrees
    println!("parametrized construction agrees with brute force");

    // Every element of norm 1 is invertible, and its inverse is its conjugate.
    for b in h.iter() {
        assert_eq!(b.inv()?, b.conj());
    }

    // sqrt(-1) exists because p = 1 (mod 4); it pins the zero-divisor lines.
    let r = Residue::from_signed(-1, p).sqrt()?.expect("p = 1 (mod 4)");
    println!("sqrt(-1) mod {p} = {r}");
    let zeta = GaussRes::new(Residue::one(p), r); // 1 + r*i has norm 0
    assert!(zeta.is_zero_divisor()?);
    println!("{zeta:?} is a proper zero divisor");

    // A coset g*H is exactly a norm class; for a zero divisor it is the
    // punctured line of its multiples.
    let g = GaussRes::from_parts(3, 1, p);
    assert_eq!(coset(g, &h)?, norm_class(g.norm())?);
    println!("coset of {g:?} = norm class of N = {}", g.norm());
    let line = coset(zeta, &h)?;
    println!("coset of the zero divisor: {} elements (= p - 1)", line.len());

    // Neighbor norms: n + 1 values when c is a square, n when it is not.
    for c in [1u64, 2] {
        let c = Residue::new(c, p);
        let ns = neighbor_norms(c)?;
        println!(
            "N_{p}({}) has {} values (legendre = {:+}): {:?}",
            c.value(),
            ns.len(),
            c.legendre()?,
            ns.values().collect::<Vec<_>>()
        );
        assert_eq!(ns, neighbor_norms_poly(c)?); // polynomial sweep agrees
    }

    // From a zero divisor every norm except 1 is reachable in one step.
    let seen = zero_divisor_neighbor_norms(zeta)?;
    assert_eq!(seen.len() as u64, p - 1);
    assert!(!seen.contains(1));
    println!("norms seen from the zero divisor: all of Z/{p}Z except 1");
    Ok(())
}
