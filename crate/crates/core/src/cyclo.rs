//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A [`CycNum`] stores coordinates in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}`
//! of the smallest cyclotomic field containing it, so equality is structural.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n as u64) {
        if d == n as u64 {
            continue;
        }
        let den = cyclotomic_poly(d as u32);
        num = exact_monic_div(&num, &den);
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn exact_monic_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// Reduces a dense coefficient vector in powers of `ζ_n` to canonical length φ(n).
fn reduce(mut v: Vec<Rat>, n: u32) -> Vec<Rat> {
    let n_us = n as usize;
    if v.len() > n_us {
        let tail = v.split_off(n_us);
        for (i, c) in tail.into_iter().enumerate() {
            if !c.is_zero() {
                v[i % n_us] += c;
            }
        }
    }
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    for i in (deg..v.len()).rev() {
        let c = std::mem::replace(&mut v[i], Rat::zero());
        if c.is_zero() {
            continue;
        }
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                v[i - deg + j] -= &c * BigInt::from(pj);
            }
        }
    }
    v.resize(deg, Rat::zero());
    v
}

/// Precomputed data for testing membership of `Q(ζ_n)` elements in `Q(ζ_m)`,
/// `n = p·m` with `p` coprime to `m`.
struct Descent {
    m: u32,
    embed: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    inv: Vec<Vec<Rat>>,
}

fn descent(n: u32, p: u32) -> Arc<Descent> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Descent>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&(n, p)) {
        return d.clone();
    }
    let m = n / p;
    let phi_n = euler_phi(n as u64) as usize;
    let phi_m = euler_phi(m as u64) as usize;
    let mut embed = vec![vec![Rat::zero(); phi_m]; phi_n];
    for j in 0..phi_m {
        let mut e = vec![Rat::zero(); n as usize];
        e[(j * p as usize) % n as usize] = Rat::one();
        for (i, c) in reduce(e, n).into_iter().enumerate() {
            embed[i][j] = c;
        }
    }
    let mut pivots = Vec::new();
    let mut chosen: Vec<Vec<Rat>> = Vec::new();
    for (i, row) in embed.iter().enumerate() {
        let mut trial = chosen.clone();
        trial.push(row.clone());
        if linalg::rank(&trial) > chosen.len() {
            chosen.push(row.clone());
            pivots.push(i);
            if chosen.len() == phi_m {
                break;
            }
        }
    }
    let inv = linalg::inverse(&chosen).expect("embedding has full column rank");
    let d = Arc::new(Descent {
        m,
        embed,
        pivots,
        inv,
    });
    cache.lock().unwrap().insert((n, p), d.clone());
    d
}

/// An exact element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    order: u32,
    coeffs: Vec<Rat>,
}

impl CycNum {
    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(q: Rat) -> Self {
        CycNum {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(n.into()))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rat(rat(n, d))
    }

    /// Builds `Σ coeffs[i] ζ_order^i` from any number of coefficients.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rat>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Self::minimize(order, reduce(coeffs, order))
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let mut v = vec![Rat::zero(); n as usize];
        v[k.rem_euclid(n as i64) as usize] = Rat::one();
        Self::from_coeffs(n, v)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    fn minimize(mut order: u32, mut coeffs: Vec<Rat>) -> Self {
        'outer: loop {
            if order == 1 {
                break;
            }
            if coeffs[1..].iter().all(Zero::is_zero) {
                coeffs.truncate(1);
                order = 1;
                break;
            }
            for p in prime_factors(order as u64) {
                let p = p as u32;
                if order % (p * p) == 0 {
                    if coeffs
                        .iter()
                        .enumerate()
                        .all(|(i, c)| i % p as usize == 0 || c.is_zero())
                    {
                        coeffs = coeffs.into_iter().step_by(p as usize).collect();
                        order /= p;
                        continue 'outer;
                    }
                } else {
                    let d = descent(order, p);
                    let c: Vec<Rat> = d
                        .inv
                        .iter()
                        .map(|row| {
                            row.iter()
                                .zip(&d.pivots)
                                .fold(Rat::zero(), |acc, (r, &pi)| acc + r * &coeffs[pi])
                        })
                        .collect();
                    let fits = d.embed.iter().zip(&coeffs).all(|(row, a)| {
                        let s = row
                            .iter()
                            .zip(&c)
                            .filter(|(e, _)| !e.is_zero())
                            .fold(Rat::zero(), |acc, (e, x)| acc + e * x);
                        &s == a
                    });
                    if fits {
                        coeffs = c;
                        order = d.m;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        CycNum { order, coeffs }
    }

    /// Dense coefficients with respect to powers of `ζ_l`; `order` must divide `l`.
    fn lift(&self, l: u32) -> Vec<Rat> {
        let step = (l / self.order) as usize;
        let mut v = vec![Rat::zero(); l as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[i * step] = c.clone();
            }
        }
        v
    }

    fn scale(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.order == other.order {
            let v = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return Self::minimize(self.order, v);
        }
        let l = self.order.lcm(&other.order);
        let v = self
            .lift(l)
            .into_iter()
            .zip(other.lift(l))
            .map(|(a, b)| a + b)
            .collect();
        Self::minimize(l, reduce(v, l))
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        let (l, a, b) = if self.order == other.order {
            (self.order, self.coeffs.clone(), other.coeffs.clone())
        } else {
            let l = self.order.lcm(&other.order);
            (l, self.lift(l), other.lift(l))
        };
        let mut v = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Self::minimize(l, reduce(v, l))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rat(q.recip()));
        }
        let n = self.order;
        let phi = self.coeffs.len();
        let mut m = vec![vec![Rat::zero(); phi]; phi];
        for j in 0..phi {
            let col = self.mul_ref(&Self::root_of_unity(n, j as i64)).lift(n);
            for (i, c) in reduce(col, n).into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        let mut rhs = vec![Rat::zero(); phi];
        rhs[0] = Rat::one();
        let x = linalg::solve(&m, &rhs).ok_or(Error::DivisionByZero)?;
        Ok(Self::minimize(n, x))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The Galois automorphism `ζ ↦ ζ^k`; `k` must be coprime to the order.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.order;
        if n == 1 {
            return Ok(self.clone());
        }
        let kk = k.rem_euclid(n as i64) as u64;
        if kk.gcd(&(n as u64)) != 1 {
            return Err(Error::NonCoprime { k, n: n as u64 });
        }
        let mut v = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[(i as u64 * kk % n as u64) as usize] = c.clone();
            }
        }
        Ok(Self::minimize(n, reduce(v, n)))
    }

    /// Complex conjugation, i.e. `σ_{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit modulo every order")
    }

    /// Approximate value under `ζ_n ↦ exp(2πi/n)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / n;
                Complex64::from_polar(rat_to_f64(c), theta)
            })
            .sum()
    }

    /// True when the first nonzero canonical coordinate is positive.
    pub fn is_canonically_positive(&self) -> bool {
        self.coeffs
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_positive())
    }

    /// A square root inside some cyclotomic field, when one is found.
    ///
    /// Rationals always have one. Other inputs are handled when they are a
    /// rational multiple of a root of unity.
    pub fn sqrt(&self) -> Option<Self> {
        if let Some(q) = self.as_rational() {
            return sqrt_rational(q);
        }
        let n = self.order;
        let big = if n % 2 == 1 { 2 * n } else { n };
        for k in 0..big as i64 {
            let u = self.mul_ref(&Self::root_of_unity(big, -k));
            if let Some(q) = u.as_rational() {
                let r = sqrt_rational(q)?;
                return Some(Self::root_of_unity(2 * big, k).mul_ref(&r));
            }
        }
        None
    }
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            let shift = q.denom().bits() as i64 - 60;
            let scaled = if shift > 0 {
                Rat::new(q.numer() >> shift as usize, q.denom() >> shift as usize)
            } else {
                q.clone()
            };
            scaled.numer().to_f64().unwrap_or(f64::NAN) / scaled.denom().to_f64().unwrap_or(f64::NAN)
        }
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut r = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else if r == 0 {
        0
    } else {
        -1
    }
}

const SQRT_PRIME_LIMIT: u64 = 5000;

fn sqrt_prime(p: u64) -> CycNum {
    if p == 2 {
        return CycNum::root_of_unity(8, 1) + CycNum::root_of_unity(8, 7);
    }
    let v: Vec<Rat> = (0..p)
        .map(|a| Rat::from_integer(legendre(a, p).into()))
        .collect();
    let gauss = CycNum::from_coeffs(p as u32, v);
    if p % 4 == 1 {
        gauss
    } else {
        gauss * CycNum::root_of_unity(4, 1)
    }
}

/// A square root of a rational number built from Gauss sums.
pub fn sqrt_rational(q: &Rat) -> Option<CycNum> {
    if q.is_zero() {
        return Some(CycNum::zero());
    }
    let prod = q.numer() * q.denom();
    let negative = prod.is_negative();
    let mut m = prod.abs();
    let mut square = BigInt::one();
    let mut free = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p * p) <= m {
        if p > SQRT_PRIME_LIMIT {
            return None;
        }
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= &bp;
        }
        if e % 2 == 1 {
            free.push(p);
        }
        p += 1;
    }
    if m > BigInt::one() {
        free.push(m.to_u64()?);
    }
    if free.iter().any(|&p| p > SQRT_PRIME_LIMIT) {
        return None;
    }
    let mut root = CycNum::from_rat(Rat::new(square, q.denom().clone()));
    for p in free {
        root = root * sqrt_prime(p);
    }
    if negative {
        root = root * CycNum::root_of_unity(4, 1);
    }
    Some(root)
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rat> for CycNum {
    fn from(q: Rat) -> Self {
        Self::from_rat(q)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                $body(self, rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                $body(&self, &rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                $body(&self, rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycNum, b: &CycNum| a.add_ref(b));
forward_binop!(Sub, sub, |a: &CycNum, b: &CycNum| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &CycNum, b: &CycNum| a.mul_ref(b));

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = match i {
                0 => String::new(),
                1 => format!("E({})", self.order),
                _ => format!("E({})^{}", self.order, i),
            };
            if unit.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&unit)?;
            } else {
                write!(f, "{abs}*{unit}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CycNumRepr {
    order: u32,
    coeffs: Vec<(String, String)>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycNumRepr {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| (c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CycNumRepr::deserialize(d)?;
        if repr.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for (n, den) in repr.coeffs {
            let n: BigInt = n.trim().parse().map_err(D::Error::custom)?;
            let den: BigInt = den.trim().parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(Rat::new(n, den));
        }
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        Ok(CycNum::from_coeffs(repr.order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> CycNum {
        CycNum::root_of_unity(n, k)
    }

    fn sqrt_m3() -> CycNum {
        z(3, 1) - z(3, 2)
    }

    #[test]
    fn cube_roots_sum_to_minus_one() {
        assert_eq!(z(3, 1) + z(3, 2), CycNum::from_int(-1));
        assert_eq!(z(4, 2), CycNum::from_int(-1));
    }

    #[test]
    fn j_minus_j_squared_squares_to_minus_three() {
        let s = sqrt_m3();
        assert_eq!(&s * &s, CycNum::from_int(-3));
        assert_eq!(s.inv().unwrap() * &s, CycNum::one());
    }

    #[test]
    fn orders_are_minimized() {
        assert_eq!(z(8, 1) * z(8, 1), z(4, 1));
        assert_eq!((z(8, 1) * z(8, 1)).order(), 4);
        assert_eq!(z(6, 2).order(), 3);
        assert_eq!(z(6, 1).order(), 3);
        assert_eq!(z(10, 3).order(), 5);
        assert_eq!((z(5, 1) + z(5, 4) - z(5, 1) - z(5, 4)).order(), 1);
        assert_ne!(z(12, 1).order() % 4, 2);
    }

    #[test]
    fn field_inverse_in_q_zeta5() {
        let a = CycNum::from_int(2) + z(5, 1);
        assert_eq!(&a * &a.inv().unwrap(), CycNum::one());
        assert_eq!(CycNum::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn galois_conjugation() {
        assert_eq!(z(3, 1).galois(-1).unwrap(), z(3, 2));
        assert_eq!(sqrt_m3().conj(), -sqrt_m3());
        let a = CycNum::from_frac(1, 3) + z(7, 2);
        assert_eq!(a.galois(1).unwrap(), a);
        assert!(matches!(z(6, 1).galois(3), Err(Error::NonCoprime { .. })));
    }

    #[test]
    fn float_embedding() {
        assert!((CycNum::one().to_complex() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((z(4, 1).to_complex() - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        let s = sqrt_m3().to_complex();
        assert!((s - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-9);
    }

    #[test]
    fn rational_square_roots() {
        for n in [-12i64, -3, -2, -1, 2, 3, 5, 7, 18, 50] {
            let r = sqrt_rational(&rat(n, 1)).unwrap();
            assert_eq!(&r * &r, CycNum::from_int(n), "sqrt({n})");
        }
        let r = sqrt_rational(&rat(-1, 512)).unwrap();
        assert_eq!(&r * &r, CycNum::from_frac(-1, 512));
        let w = z(3, 1) * CycNum::from_int(5);
        let s = w.sqrt().unwrap();
        assert_eq!(&s * &s, w);
    }

    #[test]
    fn json_round_trip() {
        let a = CycNum::from_frac(-7, 3) + z(12, 5);
        let text = serde_json::to_string(&a).unwrap();
        let back: CycNum = serde_json::from_str(&text).unwrap();
        assert_eq!(a, back);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
        let minus_one: CycNum =
            serde_json::from_str(r#"{"order":4,"coeffs":[["0","1"],["0","1"],["1","1"]]}"#).unwrap();
        assert_eq!(minus_one, CycNum::from_int(-1));
    }

    fn arb_cyc() -> impl Strategy<Value = CycNum> {
        let orders = prop::sample::select(vec![1u32, 3, 4, 5, 8, 12, 15]);
        (orders, prop::collection::vec((-6i64..7, 1i64..4), 1..6)).prop_map(|(n, cs)| {
            let v = cs.into_iter().map(|(a, b)| rat(a, b)).collect();
            CycNum::from_coeffs(n, v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a - &a, CycNum::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), CycNum::one());
            }
        }

        #[test]
        fn galois_composes(a in arb_cyc(), k in prop::sample::select(vec![1i64, 7, 11, 13]), l in prop::sample::select(vec![1i64, -1, 17, 19])) {
            let n = 120i64;
            let lhs = a.galois(k).unwrap().galois(l).unwrap();
            prop_assert_eq!(lhs, a.galois((k * l).rem_euclid(n)).unwrap());
            prop_assert_eq!(a.conj().conj(), a.clone());
        }

        #[test]
        fn galois_is_multiplicative(a in arb_cyc(), b in arb_cyc()) {
            prop_assert_eq!((&a * &b).galois(7).unwrap(), a.galois(7).unwrap() * b.galois(7).unwrap());
            prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
        }

        #[test]
        fn normalization_idempotent(a in arb_cyc()) {
            let again = CycNum::from_coeffs(a.order(), a.coeffs().to_vec());
            prop_assert_eq!(again, a);
        }
    }
}
