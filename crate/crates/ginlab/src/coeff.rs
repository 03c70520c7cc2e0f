//! Exact coefficient arithmetic: arbitrary-precision rationals and odd prime
//! fields.  Floating point is never used anywhere in this crate.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Coefficient field of a polynomial ring: the rationals, or `F_p` for an
/// odd prime `p`.  The prime field exists purely as a performance escape
/// hatch; the theory this crate checks lives in characteristic 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldMode {
    Rational,
    Prime(u64),
}

impl FieldMode {
    /// Validates the mode: primes must be odd, prime, and small enough that
    /// products fit comfortably in 128-bit intermediates.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            FieldMode::Rational => Ok(()),
            FieldMode::Prime(p) => {
                if *p < 3 || *p % 2 == 0 {
                    return Err(format!("prime field modulus must be an odd prime, got {p}"));
                }
                if *p > (1 << 31) {
                    return Err(format!("prime field modulus {p} exceeds 2^31"));
                }
                if !is_prime(*p) {
                    return Err(format!("{p} is not prime"));
                }
                Ok(())
            }
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldMode::Rational => Coeff::Q(BigRational::zero()),
            FieldMode::Prime(p) => Coeff::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            FieldMode::Rational => Coeff::Q(BigRational::one()),
            FieldMode::Prime(p) => Coeff::Fp { v: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            FieldMode::Rational => Coeff::Q(BigRational::from_integer(BigInt::from(n))),
            FieldMode::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Coeff::Fp { v: r, p: *p }
            }
        }
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Rational => write!(f, "Q"),
            FieldMode::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element.  All values inside one polynomial share a mode;
/// mixing modes is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_one(),
            Coeff::Fp { v, .. } => *v == 1,
        }
    }

    pub fn mode(&self) -> FieldMode {
        match self {
            Coeff::Q(_) => FieldMode::Rational,
            Coeff::Fp { p, .. } => FieldMode::Prime(*p),
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "coefficient field mismatch");
                Coeff::Fp { v: (a + b) % p, p: *p }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::Fp { v, p } => Coeff::Fp { v: (p - v) % p, p: *p },
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "coefficient field mismatch");
                Coeff::Fp { v: ((*a as u128 * *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    /// Multiplicative inverse.  Panics on zero.
    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Q(a) => {
                assert!(!a.is_zero(), "division by zero");
                Coeff::Q(a.recip())
            }
            Coeff::Fp { v, p } => {
                assert!(*v != 0, "division by zero");
                Coeff::Fp { v: pow_mod(*v, p - 2, *p), p: *p }
            }
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    /// Reinterprets this value in another field.  `Q -> F_p` reduces mod `p`
    /// and fails when the denominator vanishes mod `p`; `F_p -> F_p` must
    /// keep the modulus.  Lifting out of a prime field is not supported.
    pub fn to_mode(&self, mode: &FieldMode) -> Result<Coeff, String> {
        match (self, mode) {
            (Coeff::Q(r), FieldMode::Rational) => Ok(Coeff::Q(r.clone())),
            (Coeff::Q(r), FieldMode::Prime(p)) => {
                let pb = BigInt::from(*p);
                let den = r.denom().mod_floor_big(&pb);
                if den.is_zero() {
                    return Err(format!("denominator of {r} vanishes mod {p}"));
                }
                let num = r.numer().mod_floor_big(&pb);
                let num_u = big_to_u64(&num);
                let den_u = big_to_u64(&den);
                let inv = pow_mod(den_u, p - 2, *p);
                Ok(Coeff::Fp { v: ((num_u as u128 * inv as u128) % *p as u128) as u64, p: *p })
            }
            (Coeff::Fp { v, p }, FieldMode::Prime(q)) if p == q => {
                Ok(Coeff::Fp { v: *v, p: *p })
            }
            _ => Err("cannot lift a prime-field value".to_string()),
        }
    }
}

trait ModFloorBig {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn big_to_u64(n: &BigInt) -> u64 {
    use num::ToPrimitive;
    n.to_u64().expect("reduced residue fits in u64")
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let m = FieldMode::Prime(32003);
        for n in [1i64, 2, 7, 32000, -5] {
            let c = m.from_i64(n);
            assert!(c.mul(&c.inv()).is_one());
        }
    }

    #[test]
    fn rational_roundtrip_mod_p() {
        let half = Coeff::Q(BigRational::new(BigInt::from(1), BigInt::from(2)));
        let fp = half.to_mode(&FieldMode::Prime(7)).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(fp, Coeff::Fp { v: 4, p: 7 });
    }

    #[test]
    fn mode_validation() {
        assert!(FieldMode::Prime(32003).validate().is_ok());
        assert!(FieldMode::Prime(2).validate().is_err());
        assert!(FieldMode::Prime(32001).validate().is_err()); // 3 * 10667
        assert!(FieldMode::Rational.validate().is_ok());
    }

    #[test]
    fn negative_reduction() {
        let m = FieldMode::Prime(7);
        assert_eq!(m.from_i64(-1), Coeff::Fp { v: 6, p: 7 });
        assert_eq!(m.from_i64(-14), Coeff::Fp { v: 0, p: 7 });
    }
}
