//! Exact dense linear algebra over a prime field.
//!
//! Every space in the crate is a coordinate space `F_p^n`; subspaces are kept
//! as canonical reduced row echelon bases so that coordinates of a member
//! vector can be read off at the pivot columns.

mod intertwine;
mod matrix;
mod subspace;

pub use intertwine::{blocks_from_vector, intertwiner_system, vectorize_blocks, Constraint};
pub use matrix::{FpMatrix, Rref};
pub use subspace::{QuotientSpace, Subspace};

use crate::error::{Error, Result};

/// Default modulus.
pub const DEFAULT_PRIME: u32 = 101;

/// Primes are restricted below this bound so that brute-force root finding
/// and `u64` accumulation stay cheap.
pub const PRIME_BOUND: u32 = 1 << 16;

/// An element of `F_p` together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub value: u32,
    pub p: u32,
}

impl Fp {
    pub fn new(value: i64, p: u32) -> Self {
        Fp { value: reduce(value, p), p }
    }

    pub fn inv(self) -> Result<Fp> {
        if self.value == 0 {
            return Err(Error::Field("division by zero".into()));
        }
        Ok(Fp { value: inv(self.value, self.p), p: self.p })
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: add(self.value, o.value, self.p), p: self.p }
    }
}

impl std::ops::Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: sub(self.value, o.value, self.p), p: self.p }
    }
}

impl std::ops::Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { value: mul(self.value, o.value, self.p), p: self.p }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates a session modulus.
pub fn check_prime(p: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::Field(format!("{p} is not prime")));
    }
    if p >= PRIME_BOUND {
        return Err(Error::Field(format!("{p} exceeds the supported bound {PRIME_BOUND}")));
    }
    Ok(p)
}

#[inline]
pub fn reduce(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero element (Fermat).
pub fn inv(a: u32, p: u32) -> u32 {
    assert!(a % p != 0, "inverse of zero in F_{p}");
    pow(a, p as u64 - 2, p)
}

/// Roots in `F_p` of a polynomial given by coefficients, lowest degree first.
pub fn poly_roots(coeffs: &[u32], p: u32) -> Vec<u32> {
    (0..p)
        .filter(|&x| {
            let mut acc = 0u32;
            for &c in coeffs.iter().rev() {
                acc = add(mul(acc, x, p), c, p);
            }
            acc == 0
        })
        .collect()
}
