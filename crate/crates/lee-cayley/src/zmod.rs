//! Exact arithmetic in Z/qZ and in the quotient ring Z[i]/qZ[i].
//!
//! [`Residue`] is an element of Z/qZ stored canonically in `[0, q)`;
//! [`GaussRes`] is an element of Z[i]/qZ[i] stored as a pair of residues.
//! Arithmetic between values with different moduli panics; data-dependent
//! failures (inverting a zero divisor, quadratic-residue machinery on a
//! composite modulus) are reported as [`Error`] values.
//!
//! Moduli are capped at [`MAX_MODULUS`] so that a product of two canonical
//! representatives always fits in a `u64`; larger moduli are rejected
//! loudly instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported modulus, 2^31.
///
/// With `q <= 2^31` the product of two values in `[0, q)` is below `2^62`,
/// so all arithmetic stays inside `u64` without intermediate widening.
pub const MAX_MODULUS: u64 = 1 << 31;

fn check_modulus(modulus: u64) {
    assert!(
        (2..=MAX_MODULUS).contains(&modulus),
        "modulus {modulus} outside the supported range [2, 2^31]"
    );
}

/// An element of Z/qZ, stored as its canonical representative in `[0, q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        check_modulus(modulus);
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    /// Reduces a signed integer into `[0, q)`.
    pub fn from_signed(value: i64, modulus: u64) -> Self {
        check_modulus(modulus);
        Residue {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        Residue::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Residue::new(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// The symmetric representative in `(-q/2, q/2]`.
    pub fn symmetric(self) -> i64 {
        if 2 * self.value > self.modulus {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    /// Lee magnitude `min(v, q - v)`, i.e. `|symmetric()|`.
    pub fn lee_magnitude(self) -> u64 {
        self.symmetric().unsigned_abs()
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let q = self.modulus;
        let mut base = self.value;
        let mut acc = 1 % q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            exp >>= 1;
        }
        Residue {
            value: acc,
            modulus: q,
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    ///
    /// Works for any modulus; fails with [`Error::NotInvertible`] when
    /// `gcd(value, q) != 1`.
    pub fn inv(self) -> Result<Self> {
        let (mut old_r, mut r) = (self.value as i64, self.modulus as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let quo = old_r / r;
            (old_r, r) = (r, old_r - quo * r);
            (old_s, s) = (s, old_s - quo * s);
        }
        if old_r != 1 {
            return Err(Error::NotInvertible {
                value: self.value,
                modulus: self.modulus,
            });
        }
        Ok(Residue::from_signed(old_s, self.modulus))
    }

    /// Legendre symbol by Euler's criterion: `+1` for nonzero squares,
    /// `-1` for non-squares, `0` for zero. Requires an odd prime modulus.
    pub fn legendre(self) -> Result<i32> {
        ensure_odd_prime(self.modulus)?;
        if self.value == 0 {
            return Ok(0);
        }
        let e = self.pow((self.modulus - 1) / 2).value;
        Ok(if e == 1 { 1 } else { -1 })
    }

    /// A square root mod an odd prime, or `None` when none exists.
    ///
    /// Deterministic: uses Tonelli–Shanks with the smallest quadratic
    /// non-residue as helper and returns the smaller of the two roots.
    pub fn sqrt(self) -> Result<Option<Self>> {
        let p = self.modulus;
        ensure_odd_prime(p)?;
        if self.value == 0 {
            return Ok(Some(self));
        }
        if self.legendre()? == -1 {
            return Ok(None);
        }
        let root = if p % 4 == 3 {
            self.pow((p + 1) / 4)
        } else {
            self.tonelli_shanks()
        };
        Ok(Some(root.min(-root)))
    }

    // Full Tonelli-Shanks, only reached for p = 1 (mod 4) and a known residue.
    fn tonelli_shanks(self) -> Self {
        let p = self.modulus;
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .map(|v| Residue::new(v, p))
            .find(|v| v.legendre() == Ok(-1))
            .expect("an odd prime has a quadratic non-residue");
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow((q + 1) / 2);
        while t.value != 1 {
            let mut i = 0u32;
            let mut probe = t;
            while probe.value != 1 {
                probe = probe * probe;
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        r
    }
}

macro_rules! check_same_modulus {
    ($a:expr, $b:expr) => {
        assert_eq!(
            $a.modulus(),
            $b.modulus(),
            "mixing moduli {} and {}",
            $a.modulus(),
            $b.modulus()
        );
    };
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        check_same_modulus!(self, rhs);
        let mut v = self.value + rhs.value;
        if v >= self.modulus {
            v -= self.modulus;
        }
        Residue {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        check_same_modulus!(self, rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.modulus - rhs.value + self.value
        };
        Residue {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus - self.value
        };
        Residue {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        check_same_modulus!(self, rhs);
        Residue {
            value: self.value * rhs.value % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// An element `re + im*i` of Z[i]/qZ[i].
///
/// The derived ordering is lexicographic on the canonical pair
/// `(re, im)`; everything downstream that needs a deterministic order
/// (generator sets, matrix columns, BFS tie-breaking) relies on it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRes {
    re: Residue,
    im: Residue,
}

impl GaussRes {
    pub fn new(re: Residue, im: Residue) -> Self {
        check_same_modulus!(re, im);
        GaussRes { re, im }
    }

    pub fn from_parts(re: i64, im: i64, modulus: u64) -> Self {
        GaussRes {
            re: Residue::from_signed(re, modulus),
            im: Residue::from_signed(im, modulus),
        }
    }

    pub fn zero(modulus: u64) -> Self {
        GaussRes::from_parts(0, 0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        GaussRes::from_parts(1, 0, modulus)
    }

    /// The imaginary unit i.
    pub fn i(modulus: u64) -> Self {
        GaussRes::from_parts(0, 1, modulus)
    }

    pub fn re(self) -> Residue {
        self.re
    }

    pub fn im(self) -> Residue {
        self.im
    }

    pub fn modulus(self) -> u64 {
        self.re.modulus
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate `re - im*i`.
    pub fn conj(self) -> Self {
        GaussRes {
            re: self.re,
            im: -self.im,
        }
    }

    /// The norm `re^2 + im^2` as an element of Z/qZ.
    pub fn norm(self) -> Residue {
        self.re * self.re + self.im * self.im
    }

    /// True for a nonzero element of norm 0. Requires a prime modulus
    /// (over a prime these are exactly the proper zero divisors; they
    /// exist only when p = 1 mod 4).
    pub fn is_zero_divisor(self) -> Result<bool> {
        ensure_odd_prime(self.modulus())?;
        Ok(self.norm().is_zero() && !self.is_zero())
    }

    /// Multiplicative inverse `conj / norm`, defined over a prime modulus
    /// whenever the norm is nonzero.
    pub fn inv(self) -> Result<Self> {
        ensure_odd_prime(self.modulus())?;
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroDivisor(self));
        }
        Ok(self.conj() * n.inv()?)
    }

    /// Flat index `re*q + im`, the canonical vertex numbering used by the
    /// graph routines.
    pub fn index(self) -> usize {
        (self.re.value * self.re.modulus + self.im.value) as usize
    }
}

impl Add for GaussRes {
    type Output = GaussRes;
    fn add(self, rhs: GaussRes) -> GaussRes {
        GaussRes {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussRes {
    type Output = GaussRes;
    fn sub(self, rhs: GaussRes) -> GaussRes {
        GaussRes {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for GaussRes {
    type Output = GaussRes;
    fn neg(self) -> GaussRes {
        GaussRes {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussRes {
    type Output = GaussRes;
    fn mul(self, rhs: GaussRes) -> GaussRes {
        GaussRes {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

/// Scalar multiplication by an element of Z/qZ.
impl Mul<Residue> for GaussRes {
    type Output = GaussRes;
    fn mul(self, rhs: Residue) -> GaussRes {
        GaussRes {
            re: self.re * rhs,
            im: self.im * rhs,
        }
    }
}

impl fmt::Display for GaussRes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.value, self.im.value) {
            (_, 0) => write!(f, "{}", self.re.value),
            (0, 1) => write!(f, "i"),
            (0, b) => write!(f, "{b}i"),
            (a, 1) => write!(f, "{a}+i"),
            (a, b) => write!(f, "{a}+{b}i"),
        }
    }
}

impl fmt::Debug for GaussRes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self, self.modulus())
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes in the inclusive range `[lo, hi]`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

pub(crate) fn ensure_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}
