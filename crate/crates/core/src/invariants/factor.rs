//! Integer factorization: trial division, Pollard rho with Brent's cycle
//! detection, Miller-Rabin / BPSW certification.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 1_000_000;

/// Deterministic Miller-Rabin bases; correct for n < 3.317e24.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Signed prime factorization; primes ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mag = self
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        BigInt::from_biguint(if self.sign < 0 { Sign::Minus } else { Sign::Plus }, mag)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }
}

impl fmt::Display for Factorization {
    /// `-2^2 * 3 * 7^3`; the unit factorization prints as `1` or `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

fn small_primes(limit: u32) -> Vec<u32> {
    let mut sieve = vec![true; limit as usize + 1];
    sieve[0] = false;
    if limit >= 1 {
        sieve[1] = false;
    }
    let mut i = 2usize;
    while i * i <= limit as usize {
        if sieve[i] {
            for j in (i * i..=limit as usize).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u32))
        .collect()
}

fn strong_probable_prime(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = base.modpow(&d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u32), n);
        if x == n1 {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    let n = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n);
    let mut n = n;
    let mut result = 1;
    let three = BigInt::from(3);
    let four = BigInt::from(4);
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == BigInt::from(5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameters.
fn strong_lucas(n: &BigUint) -> bool {
    let sqrt = n.sqrt();
    if &sqrt * &sqrt == *n {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0 => return false,
            _ => {}
        }
        let two = BigInt::from(2);
        d = if d.sign() == Sign::Minus { two - d } else { -(d + two) };
    }
    let nn = BigInt::from(n.clone());
    let p = BigInt::one();
    let q = (BigInt::one() - &d) / BigInt::from(4);
    let m = &nn + BigInt::one();
    let s = m.trailing_zeros().unwrap_or(0);
    let k = &m >> s;
    let half = |x: BigInt| -> BigInt {
        let x = if x.is_odd() { x + &nn } else { x };
        (x >> 1usize).mod_floor(&nn)
    };
    // binary Lucas chain for U_k, V_k
    let mut u = BigInt::zero();
    let mut v = BigInt::from(2);
    let mut qk = BigInt::one();
    for bit in (0..k.bits()).rev() {
        u = (&u * &v).mod_floor(&nn);
        v = (&v * &v - &qk * BigInt::from(2)).mod_floor(&nn);
        qk = (&qk * &qk).mod_floor(&nn);
        if k.bit(bit) {
            let nu = half(&p * &u + &v);
            let nv = half(&d * &u + &p * &v);
            u = nu;
            v = nv;
            qk = (&qk * &q).mod_floor(&nn);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * BigInt::from(2)).mod_floor(&nn);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(&nn);
    }
    false
}

/// Primality: deterministic Miller-Rabin below 3.3e24, BPSW above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let bound: BigUint = "3317044064679887385961981".parse().unwrap();
    if *n < bound {
        MR_BASES
            .iter()
            .all(|&b| strong_probable_prime(n, &BigUint::from(b)))
    } else {
        strong_probable_prime(n, &BigUint::from(2u32)) && strong_lucas(n)
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let big = BigUint::from(n);
    MR_BASES[..12]
        .iter()
        .all(|&b| strong_probable_prime(&big, &BigUint::from(b)))
}

/// Pollard rho with Brent's improvement; returns a nontrivial factor of the
/// odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const M: u64 = 128;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..M.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += M;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn push_factor(out: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(slot) => slot.1 += e,
        None => out.push((p, e)),
    }
}

fn split_large(n: BigUint, out: &mut Vec<(BigUint, u32)>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        push_factor(out, n, 1);
        return;
    }
    let d = pollard_brent(&n);
    let other = &n / &d;
    split_large(d, out);
    split_large(other, out);
}

/// Complete signed factorization of a nonzero integer.
pub fn factor_int(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut m = n.magnitude().clone();
    let mut factors = Vec::new();
    let limit = match m.sqrt().to_u32() {
        Some(s) => s.min(TRIAL_LIMIT),
        None => TRIAL_LIMIT,
    };
    for p in small_primes(limit) {
        if m.is_one() {
            break;
        }
        let mut e = 0;
        while (&m % p).is_zero() {
            m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((BigUint::from(p), e));
        }
    }
    split_large(m, &mut factors);
    factors.sort();
    Ok(Factorization { sign, factors })
}
