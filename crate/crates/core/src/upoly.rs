//! Univariate helpers: exact gcd over a cyclotomic field and numeric roots.

use num_complex::Complex64;

use crate::cyclo::CycNum;

/// Coefficients in increasing degree, trailing zeros trimmed.
pub fn trim(mut p: Vec<CycNum>) -> Vec<CycNum> {
    while p.last().is_some_and(CycNum::is_zero) {
        p.pop();
    }
    p
}

pub fn derivative(p: &[CycNum]) -> Vec<CycNum> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &CycNum::from_int(i as i64))
            .collect(),
    )
}

/// Remainder of `a` by nonzero `b`.
pub fn rem(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let lb_inv = b.last().unwrap().inv().expect("nonzero leading coefficient");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() * &lb_inv;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&q * c);
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic gcd; the empty vector stands for the zero polynomial.
pub fn gcd(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(l) = a.last() {
        let inv = l.inv().expect("nonzero");
        a = a.iter().map(|c| c * &inv).collect();
    }
    a
}

pub fn degree(p: &[CycNum]) -> Option<usize> {
    trim(p.to_vec()).len().checked_sub(1)
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots by Aberth–Ehrlich iteration. `None` if it fails to converge.
pub fn complex_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().checked_sub(1)?;
    if n == 0 {
        return Some(Vec::new());
    }
    let lead = c[n];
    for x in c.iter_mut() {
        *x /= lead;
    }
    let radius = 1.0 + c[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner(&c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[k] -= w;
            delta = delta.max(w.norm() / (1.0 + z[k].norm()));
        }
        if delta < 1e-15 {
            return Some(z);
        }
    }
    // Aberth can stall at the last bits; accept if residuals are tiny.
    let scale: f64 = c.iter().map(|x| x.norm()).sum();
    z.iter()
        .all(|&r| horner(&c, r).0.norm() <= 1e-9 * scale * (1.0 + r.norm()).powi(n as i32))
        .then_some(z)
}

pub fn min_separation(roots: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<CycNum> {
        v.iter().map(|&x| CycNum::from_int(x)).collect()
    }

    #[test]
    fn gcd_detects_repeated_roots() {
        // (t-1)^2 (t+2)
        let p = ints(&[2, -3, 0, 1]);
        let g = gcd(&p, &derivative(&p));
        assert_eq!(g, ints(&[-1, 1]));
        let q = ints(&[-1, 0, 1]);
        assert_eq!(gcd(&q, &derivative(&q)), ints(&[1]));
    }

    #[test]
    fn roots_of_unity_are_found() {
        let mut c = vec![Complex64::new(0.0, 0.0); 8];
        c[0] = Complex64::new(-1.0, 0.0);
        c[7] = Complex64::new(1.0, 0.0);
        let r = complex_roots(&c).unwrap();
        assert_eq!(r.len(), 7);
        for z in &r {
            assert!((z.powu(7) - 1.0).norm() < 1e-10);
        }
        assert!((min_separation(&r) - 2.0 * (std::f64::consts::PI / 7.0).sin()).abs() < 1e-9);
    }
}
