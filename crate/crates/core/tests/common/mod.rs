//! Independent oracles shared by the integration tests. Nothing here calls
//! into the crate's counting or sieving code.
#![allow(dead_code)]

/// Primes below `n` by a plain sieve of Eratosthenes.
pub fn sieve(n: usize) -> Vec<u64> {
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// `F_{p^3} = F_p[t]/(t^3 - c1 t - c0)` with the cubic chosen root-free.
#[derive(Clone, Copy)]
pub struct Cubic {
    p: u64,
    c0: u64,
    c1: u64,
}

impl Cubic {
    pub fn new(p: u64) -> Self {
        for c1 in 0..p {
            for c0 in 1..p {
                if (0..p).all(|x| (x * x % p * x + 2 * p * p - c1 * x % p - c0) % p != 0) {
                    return Cubic { p, c0, c1 };
                }
            }
        }
        unreachable!("an irreducible cubic always exists")
    }

    pub fn elements(&self) -> impl Iterator<Item = [u64; 3]> + '_ {
        let p = self.p;
        (0..p * p * p).map(move |i| [i % p, (i / p) % p, i / (p * p)])
    }

    pub fn from_base(&self, a: i64) -> [u64; 3] {
        [a.rem_euclid(self.p as i64) as u64, 0, 0]
    }

    pub fn add(&self, x: [u64; 3], y: [u64; 3]) -> [u64; 3] {
        let p = self.p;
        [(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p]
    }

    pub fn mul(&self, x: [u64; 3], y: [u64; 3]) -> [u64; 3] {
        let p = self.p;
        let mut c = [0u64; 5];
        for i in 0..3 {
            for j in 0..3 {
                c[i + j] = (c[i + j] + x[i] * y[j]) % p;
            }
        }
        // t^3 = c1 t + c0, t^4 = c1 t^2 + c0 t
        let (c0, c1) = (self.c0, self.c1);
        let mut r = [c[0], c[1], c[2]];
        r[2] = (r[2] + c[4] * c1) % p;
        r[1] = (r[1] + c[4] * c0) % p;
        r[1] = (r[1] + c[3] * c1) % p;
        r[0] = (r[0] + c[3] * c0) % p;
        r
    }

    pub fn index(&self, x: [u64; 3]) -> usize {
        (x[0] + self.p * (x[1] + self.p * x[2])) as usize
    }
}

/// `|C(F_{p^3})|` for `y^2 = f(x)` with `deg f = 5`, by counting square roots.
pub fn genus2_n3_brute(f: &[i64], p: u64) -> u64 {
    let k = Cubic::new(p);
    let q = (p * p * p) as usize;
    let mut roots = vec![0u64; q];
    for y in k.elements() {
        roots[k.index(k.mul(y, y))] += 1;
    }
    let mut n = 0;
    for x in k.elements() {
        let v = f.iter().rev().fold([0, 0, 0], |acc, &c| k.add(k.mul(acc, x), k.from_base(c)));
        n += roots[k.index(v)];
    }
    let deg = f.iter().rposition(|&c| c.rem_euclid(p as i64) != 0).unwrap();
    assert_eq!(deg % 2, 1, "only the odd-degree model is handled");
    n + 1
}

/// `|E(F_p)|` for `y^2 = x^3 + a x + b` by enumerating all pairs.
pub fn elliptic_order_brute(a: i64, b: i64, p: u64) -> u64 {
    let (a, b) = (a.rem_euclid(p as i64) as u64, b.rem_euclid(p as i64) as u64);
    let mut n = 1;
    for x in 0..p {
        let rhs = (x * x % p * x + a * x + b) % p;
        n += (0..p).filter(|y| y * y % p == rhs).count() as u64;
    }
    n
}
