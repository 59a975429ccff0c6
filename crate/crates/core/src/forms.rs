//! Binary quadratic form algebra: validation, the substitution action of
//! SL2(Z), classical reduction with transformation tracking, roots and
//! forms-from-roots, and the equivalence tests for the congruence subgroups
//! (upper unitriangular mod N up to sign, upper triangular mod N, and pure
//! translations) that stratify the class groups by level.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{ext_gcd, gcd, Mat2Z};
use crate::error::{Error, Result};
use crate::quadfield::{Field, QuadNum};

/// A primitive positive-definite integral binary quadratic form
/// `a x^2 + b xy + c y^2` of discriminant equal to the field discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BQF {
    field: Field,
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl BQF {
    /// Validate the triple against the field: discriminant must match,
    /// the form must be positive definite and primitive.
    pub fn new<T: Into<BigInt>>(f: &Field, a: T, b: T, c: T) -> Result<BQF> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        if &disc != f.discriminant() {
            return Err(Error::WrongDiscriminant {
                found: disc,
                expected: f.discriminant().clone(),
            });
        }
        if !a.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        let g = gcd(&gcd(&a, &b), &c);
        if !g.is_one() {
            return Err(Error::Imprimitive(g));
        }
        Ok(BQF { field: f.clone(), a, b, c })
    }

    fn from_raw(f: &Field, a: BigInt, b: BigInt, c: BigInt) -> BQF {
        debug_assert_eq!(&(&b * &b - BigInt::from(4) * &a * &c), f.discriminant());
        debug_assert!(a.is_positive());
        BQF { field: f.clone(), a, b, c }
    }

    /// The principal form: `x^2 - (d/4) y^2` or `x^2 + xy + ((1-d)/4) y^2`.
    pub fn principal(f: &Field) -> BQF {
        let (a, b, c) = f.principal_coeffs();
        BQF::from_raw(f, a, b, c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn coeffs(&self) -> (BigInt, BigInt, BigInt) {
        (self.a.clone(), self.b.clone(), self.c.clone())
    }

    /// Does the form have leading coefficient prime to `n`?
    pub fn in_level(&self, n: u32) -> bool {
        gcd(&BigInt::from(n), &self.a).is_one()
    }

    pub fn require_level(&self, n: u32) -> Result<()> {
        let g = gcd(&BigInt::from(n), &self.a);
        if g.is_one() {
            Ok(())
        } else {
            Err(Error::LevelViolation(g))
        }
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// The substituted form `Q(sigma [x; y])` for unimodular `sigma`.
    /// This is a right action: substituting by `sigma` then `tau` equals
    /// substituting by `sigma * tau`.
    pub fn apply_matrix(&self, sigma: &Mat2Z) -> Result<BQF> {
        if !sigma.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        Ok(self.apply_unchecked(sigma))
    }

    fn apply_unchecked(&self, m: &Mat2Z) -> BQF {
        let a = self.evaluate(&m.r, &m.u);
        let c = self.evaluate(&m.s, &m.v);
        let b = BigInt::from(2) * (&self.a * &m.r * &m.s + &self.c * &m.u * &m.v)
            + &self.b * (&m.r * &m.v + &m.s * &m.u);
        BQF::from_raw(&self.field, a, b, c)
    }

    /// The zero `(-b + sqrt(d)) / 2a` of `Q(x, 1)` in the upper half-plane.
    pub fn root(&self) -> QuadNum {
        let two_a = BigInt::from(2) * &self.a;
        self.field.quadnum(
            BigRational::new(-self.b.clone(), two_a.clone()),
            BigRational::new(BigInt::one(), two_a),
        )
    }

    /// The unique primitive positive-definite integral form with the given
    /// root. Fails when its discriminant differs from the field
    /// discriminant (the root does not span a lattice of the maximal
    /// order), or when the resulting leading coefficient shares a factor
    /// with `n`.
    pub fn from_root(f: &Field, omega: &QuadNum, n: u32) -> Result<BQF> {
        assert!(omega.im_sign() > 0, "root must lie in the upper half-plane");
        // minimal polynomial: X^2 - 2x X + (x^2 - d y^2)
        let tr = BigRational::from(BigInt::from(2)) * omega.x();
        let nm = omega.norm();
        let m = tr.denom().lcm(nm.denom());
        let a = m.clone();
        let b = (-tr * BigRational::from(m.clone())).to_integer();
        let c = (nm * BigRational::from(m.clone())).to_integer();
        let g = gcd(&gcd(&a, &b), &c);
        let (a, b, c) = (&a / &g, &b / &g, &c / &g);
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        if &disc != f.discriminant() {
            return Err(Error::RootNotMaximalOrder);
        }
        if !gcd(&BigInt::from(n), &a).is_one() {
            return Err(Error::RootNotCoprimeToLevel);
        }
        Ok(BQF::from_raw(f, a, b, c))
    }

    pub fn is_reduced(&self) -> bool {
        let babs = self.b.abs();
        if !(babs <= self.a && self.a <= self.c) {
            return false;
        }
        if (babs == self.a || self.a == self.c) && self.b.is_negative() {
            return false;
        }
        true
    }

    /// Classical reduction. Returns the reduced form `R` together with the
    /// unimodular `gamma` such that `apply_matrix(self, gamma) = R`.
    pub fn reduce(&self) -> (BQF, Mat2Z) {
        let mut q = self.clone();
        let mut gamma = Mat2Z::identity();
        let two = BigInt::from(2);
        loop {
            if q.b > q.a || q.b <= -q.a.clone() {
                let s = (&q.a - &q.b).div_floor(&(&two * &q.a));
                let t = Mat2Z {
                    r: BigInt::one(),
                    s,
                    u: BigInt::zero(),
                    v: BigInt::one(),
                };
                q = q.apply_unchecked(&t);
                gamma = gamma.mul(&t);
            }
            if q.a > q.c {
                let sw = Mat2Z::new(0, -1, 1, 0);
                q = q.apply_unchecked(&sw);
                gamma = gamma.mul(&sw);
            } else {
                break;
            }
        }
        if q.b.is_negative() {
            if q.b == -q.a.clone() {
                let t = Mat2Z::new(1, 1, 0, 1);
                q = q.apply_unchecked(&t);
                gamma = gamma.mul(&t);
            } else if q.a == q.c {
                let sw = Mat2Z::new(0, -1, 1, 0);
                q = q.apply_unchecked(&sw);
                gamma = gamma.mul(&sw);
            }
        }
        debug_assert!(q.is_reduced());
        debug_assert_eq!(self.apply_unchecked(&gamma), q);
        (q, gamma)
    }

    /// A matrix `sigma` with `apply_matrix(self, sigma) = other`, or `None`
    /// when the forms are not properly equivalent. Because the stabilizer
    /// of a form is `{I, -I}` for discriminants below -4, the witness is
    /// unique up to sign, so congruence conditions on it are decisive.
    pub fn sl2_witness(&self, other: &BQF) -> Option<Mat2Z> {
        assert_eq!(self.field, other.field, "mixed fields");
        let (r1, g1) = self.reduce();
        let (r2, g2) = other.reduce();
        if r1 != r2 {
            return None;
        }
        let w = g1.mul(&g2.inverse_unimodular().expect("reduction transforms are unimodular"));
        debug_assert_eq!(&self.apply_unchecked(&w), other);
        Some(w)
    }
}

impl fmt::Display for BQF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = |v: &BigInt| -> String {
            if v.is_one() {
                String::new()
            } else {
                v.to_string()
            }
        };
        write!(f, "{}x^2", coeff(&self.a))?;
        if !self.b.is_zero() {
            let sign = if self.b.is_negative() { " - " } else { " + " };
            write!(f, "{}{}xy", sign, coeff(&self.b.abs()))?;
        }
        let sign = if self.c.is_negative() { " - " } else { " + " };
        write!(f, "{}{}y^2", sign, coeff(&self.c.abs()))
    }
}

/// Parse a coefficient triple `a,b,c`, with or without surrounding parens.
pub fn parse_triple(s: &str) -> Result<(BigInt, BigInt, BigInt)> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::FormParse(s.to_string()));
    }
    let parse = |p: &str| p.parse::<BigInt>().map_err(|_| Error::FormParse(s.to_string()));
    Ok((parse(parts[0])?, parse(parts[1])?, parse(parts[2])?))
}

/// Are the forms equivalent under matrices congruent to
/// `[[1, *], [0, 1]]` mod `n` up to sign? Both forms must have leading
/// coefficient prime to `n`.
pub fn gamma1_equivalent(n: u32, q1: &BQF, q2: &BQF) -> Result<bool> {
    q1.require_level(n)?;
    q2.require_level(n)?;
    Ok(match q1.sl2_witness(q2) {
        Some(w) => w.is_gamma1_mod(n),
        None => false,
    })
}

/// Are the forms equivalent under matrices upper triangular mod `n`?
pub fn gamma0_equivalent(n: u32, q1: &BQF, q2: &BQF) -> Result<bool> {
    q1.require_level(n)?;
    q2.require_level(n)?;
    Ok(match q1.sl2_witness(q2) {
        Some(w) => w.is_gamma0_mod(n),
        None => false,
    })
}

/// The unique translation-equivalent form with `b` in the window
/// `(-a, a]`; two forms are translation-equivalent exactly when they share
/// `a` and their `b`s agree mod `2a`.
pub fn t_canonical(q: &BQF) -> BQF {
    let two_a = BigInt::from(2) * q.a();
    let mut b = q.b().mod_floor(&two_a);
    if &b > q.a() {
        b -= &two_a;
    }
    let c = (&b * &b - q.field().discriminant()) / (BigInt::from(4) * q.a());
    BQF::from_raw(q.field(), q.a().clone(), b, c)
}

/// Equivalence under powers of the unit translation (and sign).
pub fn t_equivalent(q1: &BQF, q2: &BQF) -> bool {
    assert_eq!(q1.field(), q2.field(), "mixed fields");
    if q1.a() != q2.a() {
        return false;
    }
    let two_a = BigInt::from(2) * q1.a();
    (q1.b() - q2.b()).mod_floor(&two_a).is_zero()
}

/// Unimodular matrix with prescribed first column `(r, u)`, `gcd(r, u) = 1`,
/// completed through the canonical Bezout pair.
pub fn complete_first_column(r: &BigInt, u: &BigInt) -> Result<Mat2Z> {
    let (g, x, y) = ext_gcd(r, u);
    if !g.is_one() {
        return Err(Error::RowNotCoprime(g));
    }
    // r*x + u*y = 1, so det [[r, -y], [u, x]] = r*x + u*y = 1
    Ok(Mat2Z {
        r: r.clone(),
        s: -y,
        u: u.clone(),
        v: x,
    })
}

/// Coprime integer pairs `(r, u)` ordered by increasing `max(|r|, |u|)`,
/// then lexicographically. Used for the deterministic matrix searches in
/// the enumeration and multiplication algorithms.
pub fn column_candidates() -> impl Iterator<Item = (i64, i64)> {
    (1i64..).flat_map(|m| {
        (-m..=m)
            .flat_map(move |r| (-m..=m).map(move |u| (r, u)))
            .filter(move |&(r, u)| r.abs().max(u.abs()) == m)
            .filter(|&(r, u)| num_integer::gcd(r, u) == 1)
    })
}
