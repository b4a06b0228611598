use std::collections::HashMap;

/// A Coxeter group acting faithfully by permutations of a finite root set.
#[derive(Clone, Debug)]
pub(crate) struct RootSystem {
    /// `gens[s][α]` is the root `s(α)`.
    pub gens: Vec<Vec<u16>>,
    /// Index of the simple root of each generator.
    pub simple: Vec<u16>,
    pub positive: Vec<bool>,
}

impl RootSystem {
    /// Roots given as integer vectors, generators as maps on coordinates.
    fn from_vectors(roots: Vec<Vec<i32>>, gens: &[&dyn Fn(&[i32]) -> Vec<i32>], simple: Vec<Vec<i32>>, height: &[i32]) -> Self {
        let index: HashMap<Vec<i32>, u16> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i as u16))
            .collect();
        let perms = gens
            .iter()
            .map(|g| roots.iter().map(|r| index[&g(r)]).collect())
            .collect();
        let positive = roots
            .iter()
            .map(|r| r.iter().zip(height).map(|(a, b)| a * b).sum::<i32>() > 0)
            .collect();
        let simple = simple.iter().map(|r| index[r]).collect();
        RootSystem {
            gens: perms,
            simple,
            positive,
        }
    }

    pub fn nroots(&self) -> usize {
        self.positive.len()
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// `e_j - e_i` and, when `with_sums`, `±(e_i + e_j)`; when `with_short`, `±e_i`.
    fn classical_roots(n: usize, with_sums: bool, with_short: bool) -> Vec<Vec<i32>> {
        let mut roots = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[j] = -1;
                    roots.push(v);
                }
            }
        }
        if with_sums {
            for i in 0..n {
                for j in i + 1..n {
                    for s in [1, -1] {
                        let mut v = vec![0; n];
                        v[i] = s;
                        v[j] = s;
                        roots.push(v);
                    }
                }
            }
        }
        if with_short {
            for i in 0..n {
                for s in [1, -1] {
                    let mut v = vec![0; n];
                    v[i] = s;
                    roots.push(v);
                }
            }
        }
        roots
    }

    fn unit(n: usize, i: usize, s: i32) -> Vec<i32> {
        let mut v = vec![0; n];
        v[i] = s;
        v
    }

    fn diff(n: usize, j: usize, i: usize) -> Vec<i32> {
        let mut v = Self::unit(n, j, 1);
        v[i] = -1;
        v
    }

    fn swap(a: usize, b: usize) -> impl Fn(&[i32]) -> Vec<i32> {
        move |r: &[i32]| {
            let mut v = r.to_vec();
            v.swap(a, b);
            v
        }
    }

    /// `A_n` on coordinates `0..=n`; `s_k` swaps `k-1, k`.
    pub fn type_a(n: usize) -> Self {
        let dim = n + 1;
        let swaps: Vec<_> = (1..=n).map(|k| Self::swap(k - 1, k)).collect();
        let gens: Vec<&dyn Fn(&[i32]) -> Vec<i32>> = swaps.iter().map(|f| f as &dyn Fn(&[i32]) -> Vec<i32>).collect();
        let simple = (1..=n).map(|k| Self::diff(dim, k, k - 1)).collect();
        let height: Vec<i32> = (0..dim as i32).collect();
        Self::from_vectors(Self::classical_roots(dim, false, false), &gens, simple, &height)
    }

    /// `B_n`: `t` negates coordinate 0, `s_k` swaps `k-2, k-1`.
    pub fn type_b(n: usize) -> Self {
        let negate = |r: &[i32]| {
            let mut v = r.to_vec();
            v[0] = -v[0];
            v
        };
        let swaps: Vec<_> = (2..=n).map(|k| Self::swap(k - 2, k - 1)).collect();
        let mut gens: Vec<&dyn Fn(&[i32]) -> Vec<i32>> = vec![&negate];
        gens.extend(swaps.iter().map(|f| f as &dyn Fn(&[i32]) -> Vec<i32>));
        let mut simple = vec![Self::unit(n, 0, 1)];
        simple.extend((2..=n).map(|k| Self::diff(n, k - 1, k - 2)));
        let height: Vec<i32> = (1..=n as i32).collect();
        Self::from_vectors(Self::classical_roots(n, true, true), &gens, simple, &height)
    }

    /// `D_n`: `s1` swaps `0, 1`, `s1p` sends `e0 ↦ -e1, e1 ↦ -e0`, `s_k` swaps `k-1, k`.
    pub fn type_d(n: usize) -> Self {
        let s1p = |r: &[i32]| {
            let mut v = r.to_vec();
            v[0] = -r[1];
            v[1] = -r[0];
            v
        };
        let s1 = Self::swap(0, 1);
        let swaps: Vec<_> = (2..n).map(|k| Self::swap(k - 1, k)).collect();
        let mut gens: Vec<&dyn Fn(&[i32]) -> Vec<i32>> = vec![&s1, &s1p];
        gens.extend(swaps.iter().map(|f| f as &dyn Fn(&[i32]) -> Vec<i32>));
        let mut e01 = vec![0; n];
        e01[0] = 1;
        e01[1] = 1;
        let mut simple = vec![Self::diff(n, 1, 0), e01];
        simple.extend((2..n).map(|k| Self::diff(n, k, k - 1)));
        let height: Vec<i32> = (0..n as i32).collect();
        Self::from_vectors(Self::classical_roots(n, true, false), &gens, simple, &height)
    }

    /// `I₂(m)`: roots are the `2m` unit vectors at angles `kπ/m`.
    pub fn type_i2(m: usize) -> Self {
        let r = 2 * m;
        let a = (0..r).map(|k| ((m + r - k) % r) as u16).collect();
        let b = (0..r).map(|k| ((3 * m - 2 + r - k) % r) as u16).collect();
        RootSystem {
            gens: vec![a, b],
            simple: vec![0, (m - 1) as u16],
            positive: (0..r).map(|k| k < m).collect(),
        }
    }
}
