//! Unit-norm generator sets, cosets, neighbor-norm sets and point counts
//! on the cubic curves that control the graph diameter.
//!
//! The O(p^2) brute-force routines here are kept permanently as oracles
//! next to their O(p) closed-form counterparts ([`unit_norm_set`] vs
//! [`unit_norm_set_param`], [`neighbor_norms`] vs [`neighbor_norms_poly`]);
//! tests cross-check the two routes against each other.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::zmod::{ensure_odd_prime, GaussRes, Residue};

/// The code dimension `n = 2[p/4]` attached to an odd prime, where `[a]`
/// is the nearest integer. Equivalently `(p-1)/2` for `p = 1 (mod 4)` and
/// `(p+1)/2` for `p = 3 (mod 4)`, so `p = 2n -+ 1`.
pub fn code_dimension(p: u64) -> u64 {
    if p % 4 == 1 {
        (p - 1) / 2
    } else {
        (p + 1) / 2
    }
}

/// A symmetric set of nonzero ring elements used as Cayley-graph
/// generators, kept sorted in the canonical lexicographic order on the
/// `(re, im)` representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    modulus: u64,
    elements: Vec<GaussRes>,
}

impl GeneratorSet {
    /// Validates and canonicalizes an explicit element list: duplicates
    /// collapse, 0 is rejected, and every element must come with its
    /// negative.
    pub fn from_elements(
        modulus: u64,
        elements: impl IntoIterator<Item = GaussRes>,
    ) -> Result<Self> {
        let set: BTreeSet<GaussRes> = elements
            .into_iter()
            .inspect(|e| {
                assert_eq!(e.modulus(), modulus, "mixing moduli");
            })
            .collect();
        if set.contains(&GaussRes::zero(modulus)) {
            return Err(Error::ContainsZero);
        }
        for &e in &set {
            if !set.contains(&-e) {
                return Err(Error::NotSymmetric(e));
            }
        }
        Ok(GeneratorSet {
            modulus,
            elements: set.into_iter().collect(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GaussRes] {
        &self.elements
    }

    pub fn contains(&self, e: GaussRes) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = GaussRes> + '_ {
        self.elements.iter().copied()
    }
}

/// The set `H` of all elements of norm 1 in Z[i]/pZ[i], by checking all
/// p^2 pairs. `|H| = 2n` for every odd prime.
pub fn unit_norm_set(p: u64) -> Result<GeneratorSet> {
    ensure_odd_prime(p)?;
    let mut elements = Vec::new();
    for re in 0..p {
        for im in 0..p {
            if (re * re + im * im) % p == 1 {
                elements.push(GaussRes::from_parts(re as i64, im as i64, p));
            }
        }
    }
    // Already lexicographically sorted by construction.
    Ok(GeneratorSet {
        modulus: p,
        elements,
    })
}

/// The same set as [`unit_norm_set`] via the O(p) rational parametrization
/// of the circle x^2 + y^2 = 1: sweeping the slope `s` gives
/// `x = (s^2-1)/(s^2+1)`, `y = -2s/(s^2+1)` (skipping s with s^2 = -1),
/// plus the point (1, 0).
pub fn unit_norm_set_param(p: u64) -> Result<GeneratorSet> {
    ensure_odd_prime(p)?;
    let mut set = BTreeSet::new();
    set.insert(GaussRes::one(p));
    let one = Residue::one(p);
    let two = Residue::new(2, p);
    for s in 0..p {
        let s = Residue::new(s, p);
        let denom = s * s + one;
        if denom.is_zero() {
            continue;
        }
        let dinv = denom.inv()?;
        let x = (s * s - one) * dinv;
        let y = -(two * s) * dinv;
        set.insert(GaussRes::new(x, y));
    }
    Ok(GeneratorSet {
        modulus: p,
        elements: set.into_iter().collect(),
    })
}

/// Expands a seed list by multiplication with the units {1, i, -1, -i}.
/// Generator sets are often quoted as `+-{...}` with the i-multiples
/// implied; this reproduces the full symmetric set.
pub fn closure_under_units(modulus: u64, seeds: &[GaussRes]) -> Result<GeneratorSet> {
    let i = GaussRes::i(modulus);
    let units = [GaussRes::one(modulus), i, -GaussRes::one(modulus), -i];
    let expanded = seeds
        .iter()
        .flat_map(|&s| units.iter().map(move |&u| s * u));
    GeneratorSet::from_elements(modulus, expanded)
}

/// The product set `g*H`, sorted. Has exactly `|H|` elements for every
/// nonzero `g`, including proper zero divisors.
pub fn coset(g: GaussRes, h: &GeneratorSet) -> Result<Vec<GaussRes>> {
    assert_eq!(g.modulus(), h.modulus(), "mixing moduli");
    if g.is_zero() {
        return Err(Error::ZeroElement);
    }
    let set: BTreeSet<GaussRes> = h.iter().map(|b| g * b).collect();
    Ok(set.into_iter().collect())
}

/// All elements of a given norm, by brute force. This is the independent
/// oracle for [`coset`]: for invertible `g`, `coset(g, H)` equals the norm
/// class of `N(g)`.
pub fn norm_class(c: Residue) -> Result<Vec<GaussRes>> {
    let p = c.modulus();
    ensure_odd_prime(p)?;
    let mut elements = Vec::new();
    for re in 0..p {
        for im in 0..p {
            if (re * re + im * im) % p == c.value() {
                elements.push(GaussRes::from_parts(re as i64, im as i64, p));
            }
        }
    }
    Ok(elements)
}

/// A set of norms, i.e. a subset of Z/pZ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormSet {
    modulus: u64,
    values: BTreeSet<u64>,
}

impl NormSet {
    fn collect(modulus: u64, values: impl IntoIterator<Item = Residue>) -> Self {
        NormSet {
            modulus,
            values: values.into_iter().map(|r| r.value()).collect(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.values.contains(&(value % self.modulus))
    }

    pub fn values(&self) -> impl Iterator<Item = u64> + '_ {
        self.values.iter().copied()
    }
}

/// The neighbor-norm set `N_p(c) = { N(1 + b) : N(b) = c }` for `c != 0`,
/// by brute force over the norm class of `c`.
///
/// Its size is `n + 1` when `c` is a nonzero square and `n` otherwise.
pub fn neighbor_norms(c: Residue) -> Result<NormSet> {
    if c.is_zero() {
        return Err(Error::ZeroNormClass);
    }
    let one = GaussRes::one(c.modulus());
    let class = norm_class(c)?;
    Ok(NormSet::collect(
        c.modulus(),
        class.into_iter().map(|b| (one + b).norm()),
    ))
}

/// `N_p(t)` via the polynomial sweep `{ x^-1 (x+1)(x+t) : x != 0 }`,
/// valid for `p = 1 (mod 4)`. Same set as [`neighbor_norms`] in O(p).
pub fn neighbor_norms_poly(t: Residue) -> Result<NormSet> {
    let p = t.modulus();
    ensure_odd_prime(p)?;
    if p % 4 != 1 {
        return Err(Error::WrongResidueClass(p));
    }
    if t.is_zero() {
        return Err(Error::ZeroT);
    }
    let one = Residue::one(p);
    let values = (1..p).map(|x| {
        let x = Residue::new(x, p);
        x.inv().expect("nonzero mod a prime") * (x + one) * (x + t)
    });
    Ok(NormSet::collect(p, values))
}

/// The norms seen from a proper zero divisor across the unit-norm set:
/// `{ N(b + z) : N(b) = 1 }`. This is all of Z/pZ except 1, which is how
/// the zero divisors end up within distance 3 of the origin.
pub fn zero_divisor_neighbor_norms(z: GaussRes) -> Result<NormSet> {
    if !z.is_zero_divisor()? {
        return Err(Error::NotZeroDivisor(z));
    }
    let h = unit_norm_set(z.modulus())?;
    Ok(NormSet::collect(
        z.modulus(),
        h.iter().map(|b| (b + z).norm()),
    ))
}

/// Point counts for the affine curve `P_t(x, y) = 0` over Z/pZ and its
/// projective closure, where
///
/// ```text
/// P_t(x, y) = y(x+1)^2 - x(y+1)(y+t).
/// ```
///
/// The projective closure adds exactly the three points at infinity
/// (0:1:0), (1:0:0), (1:1:0). For `t` outside {0, 1} the cubic is
/// absolutely irreducible and the projective count lies in the window
/// `p + 1 +- 2*sqrt(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveCount {
    pub affine: u64,
    pub projective: u64,
}

/// Exhaustively counts the points of `V_t` (affine) and `X_t` (projective).
/// `t` in {0, 1} is rejected: there the polynomial factors and the window
/// does not apply.
pub fn curve_point_count(t: Residue) -> Result<CurveCount> {
    let p = t.modulus();
    ensure_odd_prime(p)?;
    if t.value() <= 1 {
        return Err(Error::DegenerateT(t.value()));
    }
    let t = t.value();
    let mut affine = 0;
    for x in 0..p {
        for y in 0..p {
            // y(x+1)^2 - x(y+1)(y+t), all mod p
            let lhs = y * ((x + 1) * (x + 1) % p) % p;
            let rhs = x * ((y + 1) * ((y + t) % p) % p) % p;
            if lhs == rhs {
                affine += 1;
            }
        }
    }
    Ok(CurveCount {
        affine,
        projective: affine + 3,
    })
}

/// The affine lower bound `p - 2 - 2*sqrt(p)` implied by the Hasse-Weil
/// window after removing the three points at infinity.
pub fn curve_affine_lower_bound(p: u64) -> f64 {
    p as f64 - 2.0 - 2.0 * (p as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmod::primes_between;

    fn g(re: i64, im: i64, q: u64) -> GaussRes {
        GaussRes::from_parts(re, im, q)
    }

    #[test]
    fn unit_norm_set_small_primes() {
        let h7 = unit_norm_set(7).unwrap();
        let expected: Vec<GaussRes> = [(0, 1), (0, 6), (1, 0), (2, 2), (2, 5), (5, 2), (5, 5), (6, 0)]
            .iter()
            .map(|&(a, b)| g(a, b, 7))
            .collect();
        assert_eq!(h7.elements(), &expected[..]);
        assert_eq!(unit_norm_set(13).unwrap().len(), 12);
        assert_eq!(unit_norm_set(3).unwrap().len(), 4);
        assert_eq!(unit_norm_set(2), Err(Error::EvenPrime));
        assert_eq!(unit_norm_set(15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn unit_norm_set_has_cardinality_two_n() {
        for &p in primes_between(3, 199).iter() {
            let h = unit_norm_set(p).unwrap();
            assert_eq!(h.len() as u64, 2 * code_dimension(p), "p = {p}");
        }
    }

    #[test]
    fn parametrization_matches_brute_force() {
        // s = 0 gives the point (-1, 0).
        let h7 = unit_norm_set_param(7).unwrap();
        assert!(h7.contains(g(-1, 0, 7)));
        for &p in primes_between(3, 200).iter() {
            assert_eq!(unit_norm_set_param(p).unwrap(), unit_norm_set(p).unwrap());
        }
    }

    #[test]
    fn closure_reproduces_sign_and_i_multiples() {
        let h = closure_under_units(13, &[g(1, 0, 13), g(3, 4, 13)]).unwrap();
        let listed = [(1, 0), (3, 4), (0, 1), (-4, 3)];
        let expected: Vec<GaussRes> = listed
            .iter()
            .flat_map(|&(a, b)| [g(a, b, 13), g(-a, -b, 13)])
            .collect();
        assert_eq!(h, GeneratorSet::from_elements(13, expected).unwrap());
    }

    #[test]
    fn generator_set_validation() {
        assert_eq!(
            GeneratorSet::from_elements(7, [g(0, 0, 7)]),
            Err(Error::ContainsZero)
        );
        assert_eq!(
            GeneratorSet::from_elements(7, [g(1, 2, 7)]),
            Err(Error::NotSymmetric(g(1, 2, 7)))
        );
    }

    #[test]
    fn coset_of_identity_is_h() {
        let h = unit_norm_set(7).unwrap();
        assert_eq!(
            coset(GaussRes::one(7), &h).unwrap(),
            h.elements().to_vec()
        );
        assert_eq!(coset(GaussRes::zero(7), &h), Err(Error::ZeroElement));
    }

    #[test]
    fn zero_divisor_coset_is_a_punctured_line() {
        // g = 2+i has norm 0 mod 5; its coset is the nonzero multiples x*(2+i).
        let h = unit_norm_set(5).unwrap();
        let zeta = g(2, 1, 5);
        let got = coset(zeta, &h).unwrap();
        let line: BTreeSet<GaussRes> = (1..5)
            .map(|x| zeta * Residue::new(x, 5))
            .collect();
        assert_eq!(got, line.into_iter().collect::<Vec<_>>());
        assert_eq!(got.len(), 4);
    }

    #[test]
    fn cosets_are_norm_classes_for_invertible_elements() {
        for &p in &[7u64, 13, 17] {
            let h = unit_norm_set(p).unwrap();
            for re in 0..p {
                for im in 0..p {
                    let gamma = g(re as i64, im as i64, p);
                    if gamma.is_zero() || gamma.norm().is_zero() {
                        continue;
                    }
                    assert_eq!(
                        coset(gamma, &h).unwrap(),
                        norm_class(gamma.norm()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn coset_cardinality_always_matches_h() {
        for &p in primes_between(3, 50).iter() {
            let h = unit_norm_set(p).unwrap();
            for re in 0..p {
                for im in 0..p {
                    let gamma = g(re as i64, im as i64, p);
                    if gamma.is_zero() {
                        continue;
                    }
                    assert_eq!(coset(gamma, &h).unwrap().len(), h.len(), "p={p} g={gamma:?}");
                }
            }
        }
    }

    #[test]
    fn norm_class_zero() {
        // Field case: only 0 has norm 0.
        assert_eq!(norm_class(Residue::zero(7)).unwrap(), vec![g(0, 0, 7)]);
        // p = 13: 0 plus 24 proper zero divisors on the two lines y = +-5x.
        let class = norm_class(Residue::zero(13)).unwrap();
        assert_eq!(class.len(), 25);
        assert_eq!(
            class.iter().filter(|e| !e.is_zero()).count(),
            2 * (13 - 1)
        );
    }

    #[test]
    fn neighbor_norm_sizes_follow_legendre() {
        let n7 = neighbor_norms(Residue::one(7)).unwrap();
        assert_eq!(n7.len() as u64, code_dimension(7) + 1);

        // A non-residue mod 11 gives exactly n values.
        let c = (1..11)
            .map(|v| Residue::new(v, 11))
            .find(|c| c.legendre() == Ok(-1))
            .unwrap();
        assert_eq!(neighbor_norms(c).unwrap().len() as u64, code_dimension(11));

        for &p in primes_between(3, 101).iter() {
            let n = code_dimension(p);
            for c in 1..p {
                let c = Residue::new(c, p);
                let expected = if c.legendre().unwrap() == 1 { n + 1 } else { n };
                assert_eq!(
                    neighbor_norms(c).unwrap().len() as u64,
                    expected,
                    "p = {p}, c = {c}"
                );
            }
        }
    }

    #[test]
    fn one_is_not_a_neighbor_norm_of_one_for_pm5_primes() {
        for &p in primes_between(7, 199).iter() {
            if p % 12 == 5 || p % 12 == 7 {
                assert!(
                    !neighbor_norms(Residue::one(p)).unwrap().contains(1),
                    "p = {p}"
                );
            }
        }
    }

    #[test]
    fn neighbor_norms_zero_class_rejected() {
        assert_eq!(neighbor_norms(Residue::zero(7)), Err(Error::ZeroNormClass));
    }

    #[test]
    fn polynomial_sweep_matches_brute_force() {
        for t in [1u64, 2] {
            assert_eq!(
                neighbor_norms_poly(Residue::new(t, 13)).unwrap(),
                neighbor_norms(Residue::new(t, 13)).unwrap()
            );
        }
        for &p in &[5u64, 13, 17, 29, 37] {
            for t in 1..p {
                let t = Residue::new(t, p);
                assert_eq!(neighbor_norms_poly(t).unwrap(), neighbor_norms(t).unwrap());
            }
        }
        // x = -1 zeroes the factor (x+1), so 0 is always in the sweep.
        for t in 1..13 {
            assert!(neighbor_norms_poly(Residue::new(t, 13)).unwrap().contains(0));
        }
        assert_eq!(
            neighbor_norms_poly(Residue::one(7)),
            Err(Error::WrongResidueClass(7))
        );
        assert_eq!(neighbor_norms_poly(Residue::zero(13)), Err(Error::ZeroT));
    }

    #[test]
    fn same_norms_and_same_neighbor_norms_force_conjugates() {
        // If N(g1) = N(g2) and N(1+g1) = N(1+g2) then g1 is g2 or its conjugate.
        for &p in &[3u64, 5, 7, 11, 13] {
            let one = GaussRes::one(p);
            for i in 0..p * p {
                for j in 0..p * p {
                    let g1 = g((i / p) as i64, (i % p) as i64, p);
                    let g2 = g((j / p) as i64, (j % p) as i64, p);
                    if g1.norm() == g2.norm() && (one + g1).norm() == (one + g2).norm() {
                        assert!(g1 == g2 || g1 == g2.conj(), "p={p} {g1:?} {g2:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn one_plus_unit_norm_is_never_a_proper_zero_divisor() {
        for &p in primes_between(3, 100).iter() {
            let one = GaussRes::one(p);
            for b in unit_norm_set(p).unwrap().iter() {
                let s = one + b;
                assert!(
                    s.is_zero() || !s.is_zero_divisor().unwrap(),
                    "p = {p}, b = {b:?}"
                );
            }
        }
    }

    #[test]
    fn zero_divisor_neighbor_norms_miss_exactly_one() {
        let ns = zero_divisor_neighbor_norms(g(2, 1, 5)).unwrap();
        assert_eq!(ns.values().collect::<Vec<_>>(), vec![0, 2, 3, 4]);

        let z = g(5, 1, 13); // norm 26 = 0 (mod 13)
        let ns = zero_divisor_neighbor_norms(z).unwrap();
        assert_eq!(ns.len(), 12);
        assert!(!ns.contains(1));

        // 1 is never reached, for any proper zero divisor.
        for &p in &[5u64, 13, 17, 29] {
            for z in norm_class(Residue::zero(p)).unwrap() {
                if z.is_zero() {
                    continue;
                }
                assert!(!zero_divisor_neighbor_norms(z).unwrap().contains(1));
            }
        }

        assert_eq!(
            zero_divisor_neighbor_norms(g(1, 0, 5)),
            Err(Error::NotZeroDivisor(g(1, 0, 5)))
        );
    }

    #[test]
    fn curve_counts_at_p13() {
        let min = (2..13)
            .map(|t| curve_point_count(Residue::new(t, 13)).unwrap().affine)
            .min()
            .unwrap();
        assert!(min >= 9, "min |V_t| = {min}");
    }

    #[test]
    fn trivial_points_always_on_the_curve() {
        for &p in &[5u64, 13, 17] {
            for t in 2..p {
                for (x, y) in [(0i64, 0i64), (-1, -1), (-1, -(t as i64))] {
                    let x = Residue::from_signed(x, p).value();
                    let y = Residue::from_signed(y, p).value();
                    let lhs = y * ((x + 1) * (x + 1) % p) % p;
                    let rhs = x * ((y + 1) * ((y + t) % p) % p) % p;
                    assert_eq!(lhs, rhs, "p={p} t={t} ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn projective_counts_stay_in_the_hasse_weil_window() {
        let p = 17u64;
        let center = (p + 1) as f64;
        let radius = 2.0 * (p as f64).sqrt();
        for t in 2..p {
            let count = curve_point_count(Residue::new(t, p)).unwrap();
            assert_eq!(count.projective, count.affine + 3);
            let x = count.projective as f64;
            assert!((x - center).abs() <= radius, "t = {t}, |X_t| = {x}");
        }
    }

    #[test]
    fn degenerate_t_rejected() {
        assert_eq!(
            curve_point_count(Residue::zero(13)),
            Err(Error::DegenerateT(0))
        );
        assert_eq!(
            curve_point_count(Residue::one(13)),
            Err(Error::DegenerateT(1))
        );
    }

    #[test]
    fn degenerate_factorizations_hold_pointwise() {
        // P_1(x,y) = (xy - 1)(x - y) and P_0(x,y) = (x^2 - xy + x + 1) y,
        // checked by evaluation everywhere.
        for &p in &[3u64, 5, 7, 11, 13] {
            for x in 0..p {
                for y in 0..p {
                    let xr = Residue::new(x, p);
                    let yr = Residue::new(y, p);
                    let one = Residue::one(p);
                    let pt = |t: Residue| {
                        yr * (xr + one) * (xr + one) - xr * (yr + one) * (yr + t)
                    };
                    let p1 = (xr * yr - one) * (xr - yr);
                    assert_eq!(pt(one), p1, "P_1 at p={p} ({x},{y})");
                    let p0 = (xr * xr - xr * yr + xr + one) * yr;
                    assert_eq!(pt(Residue::zero(p)), p0, "P_0 at p={p} ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn affine_counts_meet_the_lower_bound() {
        for &p in primes_between(13, 101).iter() {
            if p % 4 != 1 {
                continue;
            }
            let bound = curve_affine_lower_bound(p);
            for t in 2..p {
                let affine = curve_point_count(Residue::new(t, p)).unwrap().affine;
                assert!(
                    affine as f64 >= bound,
                    "p = {p}, t = {t}: |V_t| = {affine} < {bound}"
                );
            }
        }
    }
}
