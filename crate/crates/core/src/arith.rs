//! Exact integer kernels: extended gcd, CRT, totient, Kronecker symbols,
//! lifting of residue rows to SL2(Z), and Hermite normal form for rank-2
//! lattices. Everything is arbitrary precision; coefficients grow
//! quadratically during level-N enumeration and must never wrap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Extended gcd: returns `(g, x, y)` with `g = gcd(|a|, |b|) >= 0` and
/// `a*x + b*y = g`. The Bezout pair is canonical: among all solutions, `x`
/// has minimal absolute value (ties resolved towards positive `x`), so the
/// output is reproducible. `ext_gcd(0, 0) = (0, 0, 0)`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if a.is_zero() && b.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let x2 = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, x2);
        let y2 = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, y2);
    }
    if r0.is_negative() {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    // Normalize to the representative of x mod |b/g| with minimal |x|.
    if !b.is_zero() && !r0.is_zero() {
        let step = (b / &r0).abs();
        let mut x = x0.mod_floor(&step);
        if BigInt::from(2) * &x > step {
            x -= &step;
        }
        let y = (&r0 - a * &x) / b;
        return (r0, x, y);
    }
    (r0, x0, y0)
}

/// Non-negative gcd of two integers.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Chinese remainder: the unique residue mod `lcm(m1, m2)` congruent to
/// `r1 mod m1` and `r2 mod m2`. Returns `(residue, lcm)` with the residue
/// canonical in `[0, lcm)`. Fails when `gcd(m1, m2)` does not divide
/// `r1 - r2`.
pub fn crt(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Result<(BigInt, BigInt)> {
    assert!(m1.is_positive() && m2.is_positive(), "moduli must be >= 1");
    let (g, p, _) = ext_gcd(m1, m2);
    let diff = r2 - r1;
    let (q, rem) = diff.div_rem(&g);
    if !rem.is_zero() {
        return Err(Error::IncompatibleCongruences {
            r1: r1.clone(),
            m1: m1.clone(),
            r2: r2.clone(),
            m2: m2.clone(),
        });
    }
    let lcm = m1 / &g * m2;
    // r1 + m1 * p * (r2 - r1)/g solves both congruences.
    let value = (r1 + m1 * p * q).mod_floor(&lcm);
    Ok((value, lcm))
}

/// Euler totient by trial division. Inputs are desk scale.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Kronecker symbol `(d/p)` for prime `p`: 0 when `p | d`, otherwise +1/-1
/// according to whether `d` is a square mod `p`. Rejects composite `p`.
pub fn kronecker(d: &BigInt, p: u64) -> Result<i32> {
    if !is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    if p == 2 {
        return Ok(match d.mod_floor(&BigInt::from(8)).to_string().as_str() {
            "1" | "7" => 1,
            "3" | "5" => -1,
            _ => 0, // even d
        });
    }
    let pb = BigInt::from(p);
    let r = d.mod_floor(&pb);
    if r.is_zero() {
        return Ok(0);
    }
    let t = r.modpow(&((&pb - 1) / 2), &pb);
    if t.is_one() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// 2x2 integer matrix, row-major `[[r, s], [u, v]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2Z {
    pub r: BigInt,
    pub s: BigInt,
    pub u: BigInt,
    pub v: BigInt,
}

impl Mat2Z {
    pub fn new<T: Into<BigInt>>(r: T, s: T, u: T, v: T) -> Self {
        Mat2Z {
            r: r.into(),
            s: s.into(),
            u: u.into(),
            v: v.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2Z::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.r * &self.v - &self.s * &self.u
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    pub fn mul(&self, other: &Mat2Z) -> Mat2Z {
        Mat2Z {
            r: &self.r * &other.r + &self.s * &other.u,
            s: &self.r * &other.s + &self.s * &other.v,
            u: &self.u * &other.r + &self.v * &other.u,
            v: &self.u * &other.s + &self.v * &other.v,
        }
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_unimodular(&self) -> Result<Mat2Z> {
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        Ok(Mat2Z {
            r: self.v.clone(),
            s: -self.s.clone(),
            u: -self.u.clone(),
            v: self.r.clone(),
        })
    }

    pub fn neg(&self) -> Mat2Z {
        Mat2Z {
            r: -self.r.clone(),
            s: -self.s.clone(),
            u: -self.u.clone(),
            v: -self.v.clone(),
        }
    }

    /// Entries reduced into `[0, n)`.
    pub fn entries_mod(&self, n: u32) -> [u64; 4] {
        let m = BigInt::from(n);
        let red = |x: &BigInt| -> u64 {
            let r = x.mod_floor(&m);
            u64::try_from(&r).expect("residue fits u64")
        };
        [red(&self.r), red(&self.s), red(&self.u), red(&self.v)]
    }

    /// Does the matrix reduce to `[[1, *], [0, 1]]` mod `n` up to sign?
    pub fn is_gamma1_mod(&self, n: u32) -> bool {
        if n == 1 {
            return true;
        }
        let nn = u64::from(n);
        let [r, _, u, v] = self.entries_mod(n);
        if u != 0 {
            return false;
        }
        (r == 1 && v == 1) || (r == nn - 1 && v == nn - 1)
    }

    /// Does the matrix reduce to `[[*, *], [0, *]]` mod `n`?
    pub fn is_gamma0_mod(&self, n: u32) -> bool {
        if n == 1 {
            return true;
        }
        let [_, _, u, _] = self.entries_mod(n);
        u == 0
    }
}

/// A pair of residues mod `n` identified with its negative, stored as the
/// lexicographically smaller of `(u, v)` and `(-u, -v)` mod `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResiduePair {
    pub u: u64,
    pub v: u64,
    pub modulus: u32,
}

impl ResiduePair {
    pub fn new(u: u64, v: u64, modulus: u32) -> Self {
        assert!(modulus >= 1);
        let n = u64::from(modulus);
        let (u, v) = (u % n, v % n);
        let neg = ((n - u) % n, (n - v) % n);
        let (u, v) = std::cmp::min((u, v), neg);
        ResiduePair { u, v, modulus }
    }

    pub fn from_bigints(u: &BigInt, v: &BigInt, modulus: u32) -> Self {
        let m = BigInt::from(modulus);
        let red = |x: &BigInt| u64::try_from(&x.mod_floor(&m)).expect("residue fits u64");
        ResiduePair::new(red(u), red(v), modulus)
    }
}

/// Lift a residue row `(u, v)` with `gcd(n, u, v) = 1` to a matrix in
/// SL2(Z) whose bottom row is congruent to `(u, v)` mod `n`.
///
/// The output is deterministic: the row is first replaced by a coprime
/// integer pair congruent to it (scanning `u + kn` for `k = 0, 1, -1, 2,
/// -2, ...` against `v` lifted to `[0, n)`, falling back to `v = n` when
/// `v = 0` leaves no coprime candidate), then completed to determinant one
/// through the canonical Bezout pair of [`ext_gcd`].
pub fn sl2_lift(u: &BigInt, v: &BigInt, n: u32) -> Result<Mat2Z> {
    if n == 0 {
        return Err(Error::LevelZero);
    }
    if n == 1 {
        return Ok(Mat2Z::identity());
    }
    let nb = BigInt::from(n);
    let u0 = u.mod_floor(&nb);
    let v0 = v.mod_floor(&nb);
    let g = gcd(&gcd(&u0, &v0), &nb);
    if !g.is_one() {
        return Err(Error::RowNotCoprime(g));
    }
    let (uu, vv) = if v0.is_zero() {
        if u0.is_one() {
            (BigInt::one(), BigInt::zero())
        } else if u0 == &nb - 1 {
            (-BigInt::one(), BigInt::zero())
        } else {
            // gcd(n, u) = 1 here, so (u, n) is already coprime.
            (u0, nb.clone())
        }
    } else {
        let mut k = BigInt::zero();
        loop {
            let cand = &u0 + &k * &nb;
            if gcd(&cand, &v0).is_one() {
                break (cand, v0);
            }
            // 0, 1, -1, 2, -2, ...
            k = if k.is_positive() { -k } else { -k + 1 };
        }
    };
    let (g, x, y) = ext_gcd(&vv, &uu);
    debug_assert!(g.is_one());
    let m = Mat2Z {
        r: x,
        s: -y,
        u: uu,
        v: vv,
    };
    debug_assert!(m.is_unimodular());
    Ok(m)
}

/// Column-style Hermite normal form of a rank-2 sublattice of Z^2.
///
/// The basis is `(d1, 0)` and `(b, d2)` with `d1, d2 > 0` and
/// `0 <= b < d1`; it is the unique such basis, so lattices can be compared
/// by comparing the three integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfBasis {
    pub d1: BigInt,
    pub b: BigInt,
    pub d2: BigInt,
}

impl HnfBasis {
    /// Index of the lattice in Z^2.
    pub fn det(&self) -> BigInt {
        &self.d1 * &self.d2
    }

    /// Is `(x, y)` in the lattice?
    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        let (q, r) = y.div_rem(&self.d2);
        if !r.is_zero() {
            return false;
        }
        (x - q * &self.b).mod_floor(&self.d1).is_zero()
    }
}

/// Hermite normal form of the lattice spanned by `generators`.
/// Fails when the generators span a lattice of rank below 2.
pub fn hnf_lattice(generators: &[(BigInt, BigInt)]) -> Result<HnfBasis> {
    let mut d1 = BigInt::zero();
    let mut b = BigInt::zero();
    let mut d2 = BigInt::zero();
    for (x, y) in generators {
        if y.is_zero() {
            d1 = gcd(&d1, x);
        } else {
            let (g, al, be) = ext_gcd(&d2, y);
            let nb = &al * &b + &be * x;
            let t1 = &b - (&d2 / &g) * &nb;
            let t2 = x - (y / &g) * &nb;
            d1 = gcd(&gcd(&d1, &t1), &t2);
            d2 = g;
            b = nb;
        }
    }
    if d1.is_zero() || d2.is_zero() {
        return Err(Error::RankDeficient);
    }
    b = b.mod_floor(&d1);
    Ok(HnfBasis { d1, b, d2 })
}
