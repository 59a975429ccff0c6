//! Exact arithmetic in an imaginary quadratic field K = Q(sqrt(d)):
//! field elements as rational pairs, oriented fractional-ideal lattices in
//! canonical Hermite form, and the ideal operations (product, conjugate,
//! norm, inverse, membership) that drive the class-group machinery.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd, hnf_lattice, HnfBasis, Mat2Z};
use crate::error::{Error, Result};

/// An imaginary quadratic field, fixed by its fundamental discriminant
/// `d < -4`. Carries the minimal polynomial `x^2 + b_k x + c_k` of the
/// standard generator `tau = (-b_k + sqrt(d))/2` of the ring of integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    d: BigInt,
    b_k: BigInt,
    c_k: BigInt,
}

fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Is `d` the discriminant of the ring of integers of a quadratic field?
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

impl Field {
    /// Validate `d` and build the field. `d` must be a negative fundamental
    /// discriminant below -4; the fields of discriminant -3 and -4 carry
    /// extra roots of unity and are rejected.
    pub fn new(d: i64) -> Result<Field> {
        if d >= 0 {
            return Err(Error::NotNegative(BigInt::from(d)));
        }
        if !is_fundamental(d) {
            return Err(Error::NotFundamental(BigInt::from(d)));
        }
        if d == -3 || d == -4 {
            return Err(Error::ExcludedField(BigInt::from(d)));
        }
        let (b_k, c_k) = if d.rem_euclid(4) == 1 {
            (1i64, (1 - d) / 4)
        } else {
            (0, -d / 4)
        };
        Ok(Field {
            d: BigInt::from(d),
            b_k: BigInt::from(b_k),
            c_k: BigInt::from(c_k),
        })
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.d
    }

    pub fn b_k(&self) -> &BigInt {
        &self.b_k
    }

    pub fn c_k(&self) -> &BigInt {
        &self.c_k
    }

    /// The generator `tau = (-b_k + sqrt(d))/2` with `[tau, 1] = O_K`.
    pub fn tau(&self) -> QuadNum {
        QuadNum {
            d: self.d.clone(),
            x: BigRational::new(-self.b_k.clone(), BigInt::from(2)),
            y: BigRational::new(BigInt::one(), BigInt::from(2)),
        }
    }

    /// Coefficients `(1, b_k, c_k)` of the principal form.
    pub fn principal_coeffs(&self) -> (BigInt, BigInt, BigInt) {
        (BigInt::one(), self.b_k.clone(), self.c_k.clone())
    }

    pub fn quadnum(&self, x: BigRational, y: BigRational) -> QuadNum {
        QuadNum {
            d: self.d.clone(),
            x,
            y,
        }
    }

    pub fn from_int(&self, n: i64) -> QuadNum {
        self.quadnum(BigRational::from(BigInt::from(n)), BigRational::zero())
    }

    /// The ring of integers as a fractional ideal.
    pub fn ring_of_integers(&self) -> FracIdeal {
        FracIdeal {
            field: self.clone(),
            denom: BigInt::one(),
            h: HnfBasis {
                d1: BigInt::one(),
                b: BigInt::zero(),
                d2: BigInt::one(),
            },
        }
    }
}

/// An element `x + y*sqrt(d)` of K with exact rational coordinates.
/// Equality is componentwise on reduced fractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadNum {
    d: BigInt,
    x: BigRational,
    y: BigRational,
}

impl QuadNum {
    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn y(&self) -> &BigRational {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    fn assert_same_field(&self, other: &QuadNum) {
        assert_eq!(self.d, other.d, "mixed fields in QuadNum arithmetic");
    }

    pub fn add(&self, other: &QuadNum) -> QuadNum {
        self.assert_same_field(other);
        QuadNum {
            d: self.d.clone(),
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn sub(&self, other: &QuadNum) -> QuadNum {
        self.assert_same_field(other);
        QuadNum {
            d: self.d.clone(),
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn neg(&self) -> QuadNum {
        QuadNum {
            d: self.d.clone(),
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    pub fn mul(&self, other: &QuadNum) -> QuadNum {
        self.assert_same_field(other);
        let d = BigRational::from(self.d.clone());
        QuadNum {
            d: self.d.clone(),
            x: &self.x * &other.x + &d * &self.y * &other.y,
            y: &self.x * &other.y + &self.y * &other.x,
        }
    }

    pub fn conj(&self) -> QuadNum {
        QuadNum {
            d: self.d.clone(),
            x: self.x.clone(),
            y: -self.y.clone(),
        }
    }

    /// Field norm `x^2 - d y^2`, positive for nonzero elements.
    pub fn norm(&self) -> BigRational {
        &self.x * &self.x - BigRational::from(self.d.clone()) * &self.y * &self.y
    }

    pub fn inv(&self) -> Result<QuadNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(QuadNum {
            d: self.d.clone(),
            x: c.x / &n,
            y: c.y / &n,
        })
    }

    pub fn div(&self, other: &QuadNum) -> Result<QuadNum> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, r: &BigRational) -> QuadNum {
        QuadNum {
            d: self.d.clone(),
            x: &self.x * r,
            y: &self.y * r,
        }
    }

    /// Sign of the imaginary part (sqrt(d) lies on the positive imaginary
    /// axis, so this is the sign of `y`).
    pub fn im_sign(&self) -> i32 {
        if self.y.is_positive() {
            1
        } else if self.y.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Moebius action `(r*z + s)/(u*z + v)` of an integer matrix.
    pub fn mobius(&self, m: &Mat2Z) -> Result<QuadNum> {
        let num = self
            .scale(&BigRational::from(m.r.clone()))
            .add(&self.field_rational(&m.s));
        let den = self
            .scale(&BigRational::from(m.u.clone()))
            .add(&self.field_rational(&m.v));
        num.div(&den)
    }

    /// The automorphy factor `u*z + v` for the bottom row of `m`.
    pub fn j_factor(&self, m: &Mat2Z) -> QuadNum {
        self.scale(&BigRational::from(m.u.clone()))
            .add(&self.field_rational(&m.v))
    }

    fn field_rational(&self, n: &BigInt) -> QuadNum {
        QuadNum {
            d: self.d.clone(),
            x: BigRational::from(n.clone()),
            y: BigRational::zero(),
        }
    }

    /// Coordinates `(X, Y)` over the integral basis `(tau, 1)`:
    /// `self = X*tau + Y`.
    pub fn coords(&self, f: &Field) -> (BigRational, BigRational) {
        assert_eq!(self.d, f.d, "mixed fields");
        let two = BigRational::from(BigInt::from(2));
        let x_coord = &two * &self.y;
        let y_coord = &self.x + BigRational::from(f.b_k.clone()) * &self.y;
        (x_coord, y_coord)
    }

    /// Inverse of [`QuadNum::coords`].
    pub fn from_coords(f: &Field, x_coord: &BigRational, y_coord: &BigRational) -> QuadNum {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let y = x_coord * &half;
        let x = y_coord - BigRational::from(f.b_k.clone()) * &y;
        QuadNum {
            d: f.d.clone(),
            x,
            y,
        }
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        if self.x.is_zero() {
            return write!(f, "{}*sqrt({})", self.y, self.d);
        }
        if self.y.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.x, -self.y.clone(), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.x, self.y, self.d)
        }
    }
}

/// A fractional ideal of O_K as an oriented rank-2 lattice, stored as
/// `(1/m) * L` where `L` has a canonical Hermite basis `(d1*tau, b*tau + d2)`
/// over `(tau, 1)` and `gcd(m, d1, b, d2) = 1`. Two ideals are equal exactly
/// when their stored forms are equal. The canonical basis is oriented:
/// `Im(xi1/xi2) > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracIdeal {
    field: Field,
    denom: BigInt,
    h: HnfBasis,
}

impl FracIdeal {
    /// The lattice `Z*xi1 + Z*xi2`. Fails when the generators are
    /// Q-linearly dependent or the lattice is not an O_K-module.
    pub fn from_pair(f: &Field, xi1: &QuadNum, xi2: &QuadNum) -> Result<FracIdeal> {
        let (x1, y1) = xi1.coords(f);
        let (x2, y2) = xi2.coords(f);
        if (&x1 * &y2 - &x2 * &y1).is_zero() {
            return Err(Error::DependentGenerators);
        }
        FracIdeal::from_generators(f, &[xi1.clone(), xi2.clone()])
    }

    /// The lattice spanned by any finite list of generators.
    pub fn from_generators(f: &Field, gens: &[QuadNum]) -> Result<FracIdeal> {
        let coords: Vec<(BigRational, BigRational)> =
            gens.iter().map(|g| g.coords(f)).collect();
        let mut m = BigInt::one();
        for (x, y) in &coords {
            m = m.lcm(x.denom()).lcm(y.denom());
        }
        let cols: Vec<(BigInt, BigInt)> = coords
            .iter()
            .map(|(x, y)| {
                let xi = (x * BigRational::from(m.clone())).to_integer();
                let yi = (y * BigRational::from(m.clone())).to_integer();
                (xi, yi)
            })
            .collect();
        let h = hnf_lattice(&cols).map_err(|e| match e {
            Error::RankDeficient => Error::DependentGenerators,
            other => other,
        })?;
        let ideal = FracIdeal::normalized(f.clone(), m, h);
        if !ideal.is_module() {
            return Err(Error::NotAnIdeal);
        }
        Ok(ideal)
    }

    fn normalized(field: Field, m: BigInt, h: HnfBasis) -> FracIdeal {
        let g = gcd(&gcd(&m, &h.d1), &gcd(&h.b, &h.d2));
        FracIdeal {
            field,
            denom: &m / &g,
            h: HnfBasis {
                d1: &h.d1 / &g,
                b: &h.b / &g,
                d2: &h.d2 / &g,
            },
        }
    }

    /// Multiplication by tau must map the lattice into itself.
    fn is_module(&self) -> bool {
        // tau * (alpha*tau + beta) = (beta - alpha*b_k)*tau - alpha*c_k
        let map = |alpha: &BigInt, beta: &BigInt| {
            (
                beta - alpha * &self.field.b_k,
                -(alpha * &self.field.c_k),
            )
        };
        let (x1, y1) = map(&self.h.d1, &BigInt::zero());
        let (x2, y2) = map(&self.h.b, &self.h.d2);
        self.h.contains(&x1, &y1) && self.h.contains(&x2, &y2)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn hnf(&self) -> &HnfBasis {
        &self.h
    }

    /// First canonical basis element `d1 * tau / m`.
    pub fn xi1(&self) -> QuadNum {
        self.field
            .tau()
            .scale(&BigRational::new(self.h.d1.clone(), self.denom.clone()))
    }

    /// Second canonical basis element `(b * tau + d2) / m`.
    pub fn xi2(&self) -> QuadNum {
        let t = self
            .field
            .tau()
            .scale(&BigRational::from(self.h.b.clone()));
        t.add(&self.field.quadnum(
            BigRational::from(self.h.d2.clone()),
            BigRational::zero(),
        ))
        .scale(&BigRational::new(BigInt::one(), self.denom.clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.denom.is_one()
    }

    /// Fractional module index `[O_K : I]`, equal to `d1*d2 / m^2`.
    pub fn norm(&self) -> BigRational {
        BigRational::new(&self.h.d1 * &self.h.d2, &self.denom * &self.denom)
    }

    pub fn conj(&self) -> FracIdeal {
        FracIdeal::from_generators(&self.field, &[self.xi1().conj(), self.xi2().conj()])
            .expect("conjugate of an ideal is an ideal")
    }

    /// `I^{-1} = (1/N(I)) * conj(I)`.
    pub fn inverse(&self) -> FracIdeal {
        self.conj().scale_rational(&self.norm().recip())
    }

    pub fn mul(&self, other: &FracIdeal) -> FracIdeal {
        assert_eq!(self.field, other.field, "mixed fields in ideal product");
        let gens = [
            self.xi1().mul(&other.xi1()),
            self.xi1().mul(&other.xi2()),
            self.xi2().mul(&other.xi1()),
            self.xi2().mul(&other.xi2()),
        ];
        FracIdeal::from_generators(&self.field, &gens).expect("ideal product is an ideal")
    }

    /// The scaled lattice `lambda * I` for nonzero `lambda` in K.
    pub fn scale(&self, lambda: &QuadNum) -> Result<FracIdeal> {
        if lambda.is_zero() {
            return Err(Error::DivisionByZero);
        }
        FracIdeal::from_generators(
            &self.field,
            &[lambda.mul(&self.xi1()), lambda.mul(&self.xi2())],
        )
    }

    pub fn scale_rational(&self, r: &BigRational) -> FracIdeal {
        assert!(!r.is_zero());
        let m = &self.denom * r.denom();
        let h = HnfBasis {
            d1: &self.h.d1 * r.numer(),
            b: &self.h.b * r.numer(),
            d2: &self.h.d2 * r.numer(),
        };
        let mut out = FracIdeal::normalized(self.field.clone(), m, h);
        // scaling by a negative rational flips nothing: the lattice is the same
        if out.h.d1.is_negative() || out.h.d2.is_negative() {
            out.h.d1 = out.h.d1.abs();
            out.h.d2 = out.h.d2.abs();
            out.h.b = out.h.b.mod_floor(&out.h.d1);
        }
        if out.denom.is_negative() {
            out.denom = -out.denom;
        }
        out
    }

    /// Coordinates `(u, v)` with `z = u*xi1 + v*xi2`; integral exactly when
    /// `z` lies in the ideal.
    pub fn coords_of(&self, z: &QuadNum) -> (BigRational, BigRational) {
        let (xz, yz) = z.coords(&self.field);
        let m = BigRational::from(self.denom.clone());
        // xi1 = (d1, 0)/m, xi2 = (b, d2)/m over (tau, 1)
        let v = &yz * &m / BigRational::from(self.h.d2.clone());
        let u = (&xz * &m - &v * BigRational::from(self.h.b.clone()))
            / BigRational::from(self.h.d1.clone());
        (u, v)
    }

    pub fn contains(&self, z: &QuadNum) -> bool {
        let (u, v) = self.coords_of(z);
        u.is_integer() && v.is_integer()
    }

    /// Is the ideal prime to `n * O_K`? A fractional ideal qualifies when
    /// its numerator and denominator parts are both coprime to every prime
    /// dividing `n`; this is decided locally at each such prime by comparing
    /// p-parts of the integral lattice `m * I` and of `m * O_K`.
    pub fn is_prime_to(&self, n: u32) -> bool {
        assert!(n >= 1);
        if n == 1 {
            return true;
        }
        let mut rest = u64::from(n);
        let mut p = 2u64;
        while p * p <= rest {
            if rest % p == 0 {
                while rest % p == 0 {
                    rest /= p;
                }
                if !self.prime_part_trivial(p) {
                    return false;
                }
            }
            p += 1;
        }
        if rest > 1 && !self.prime_part_trivial(rest) {
            return false;
        }
        true
    }

    fn prime_part_trivial(&self, p: u64) -> bool {
        // p-adically, I is a unit ideal iff the p-parts of m*I and m*O_K
        // agree; both are captured by adding p^k for k beyond any valuation
        // occurring in either lattice.
        let pb = BigInt::from(p);
        let bound = &self.h.d1 * &self.h.d2 * &self.denom * &self.denom;
        let mut pk = pb.clone();
        while pk <= bound {
            pk *= &pb;
        }
        let j_part = hnf_lattice(&[
            (self.h.d1.clone(), BigInt::zero()),
            (self.h.b.clone(), self.h.d2.clone()),
            (pk.clone(), BigInt::zero()),
            (BigInt::zero(), pk.clone()),
        ])
        .expect("full-rank by construction");
        let g = gcd(&self.denom, &pk);
        j_part.d1 == g && j_part.b.is_zero() && j_part.d2 == g
    }
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "[{}, {}]", self.xi1(), self.xi2())
        } else {
            write!(
                f,
                "(1/{})[{}*tau, {}*tau + {}]",
                self.denom, self.h.d1, self.h.b, self.h.d2
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn field_construction() {
        let f = Field::new(-20).unwrap();
        assert_eq!(f.b_k(), &BigInt::zero());
        assert_eq!(f.c_k(), &BigInt::from(5));
        // tau = sqrt(-5) = (1/2) sqrt(-20)
        assert_eq!(f.tau().x(), &rat(0, 1));
        assert_eq!(f.tau().y(), &rat(1, 2));

        let f8 = Field::new(-8).unwrap();
        assert_eq!(f8.principal_coeffs(), (BigInt::one(), BigInt::zero(), BigInt::from(2)));

        let f7 = Field::new(-7).unwrap();
        assert_eq!(f7.principal_coeffs(), (BigInt::one(), BigInt::one(), BigInt::from(2)));
    }

    #[test]
    fn field_rejects_bad_discriminants() {
        assert!(matches!(Field::new(-4), Err(Error::ExcludedField(_))));
        assert!(matches!(Field::new(-3), Err(Error::ExcludedField(_))));
        assert!(matches!(Field::new(-12), Err(Error::NotFundamental(_))));
        assert!(matches!(Field::new(-5), Err(Error::NotFundamental(_))));
        assert!(matches!(Field::new(20), Err(Error::NotNegative(_))));
    }

    #[test]
    fn quadnum_arithmetic() {
        let f = Field::new(-20).unwrap();
        // omega = (1 + sqrt(-5))/3 = 1/3 + (1/6) sqrt(-20)
        let om = f.quadnum(rat(1, 3), rat(1, 6));
        assert_eq!(om.conj(), f.quadnum(rat(1, 3), rat(-1, 6)));
        // omega * conj(omega) = 2/3
        let prod = om.mul(&om.conj());
        assert_eq!(prod.x(), &rat(2, 3));
        assert!(prod.y().is_zero());
        // trace identity: tau + conj(tau) = -b_k
        let t = f.tau();
        let tr = t.add(&t.conj());
        assert_eq!(tr.x(), &rat(0, 1));
        assert!(tr.y().is_zero());

        let f7 = Field::new(-7).unwrap();
        let t7 = f7.tau();
        assert_eq!(t7.add(&t7.conj()).x(), &rat(-1, 1));
    }

    #[test]
    fn quadnum_division() {
        let f = Field::new(-8).unwrap();
        let a = f.quadnum(rat(3, 2), rat(-5, 7));
        let b = f.quadnum(rat(-1, 3), rat(2, 1));
        let q = a.div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(matches!(
            a.div(&f.from_int(0)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn ideal_of_ring_and_reordering() {
        let f = Field::new(-20).unwrap();
        let ok = f.ring_of_integers();
        let built = FracIdeal::from_pair(&f, &f.tau(), &f.from_int(1)).unwrap();
        assert_eq!(ok, built);
        let reordered = FracIdeal::from_pair(&f, &f.from_int(1), &f.tau()).unwrap();
        assert_eq!(ok, reordered);
        assert!(ok.xi1().div(&ok.xi2()).unwrap().im_sign() > 0);
    }

    #[test]
    fn ideal_from_form_root() {
        let f = Field::new(-20).unwrap();
        // omega of the form (3, -2, 2)
        let om = f.quadnum(rat(1, 3), rat(1, 6));
        let i = FracIdeal::from_pair(&f, &om, &f.from_int(1)).unwrap();
        assert_eq!(i.norm(), rat(1, 3));
        assert!(i.contains(&f.from_int(1)));
        assert!(i.contains(&om));
    }

    #[test]
    fn ideal_product_examples() {
        let f = Field::new(-20).unwrap();
        let ok = f.ring_of_integers();
        assert_eq!(ok.mul(&ok), ok);

        let om = f.quadnum(rat(1, 3), rat(1, 6));
        let i = FracIdeal::from_pair(&f, &om, &f.from_int(1)).unwrap();
        assert_eq!(i.mul(&ok), i);

        // c * conj(c) = N(c) O_K with N = 1/3
        let prod = i.mul(&i.conj());
        let third = ok.scale_rational(&rat(1, 3));
        assert_eq!(prod, third);
    }

    #[test]
    fn ideal_norm_inverse() {
        let f = Field::new(-20).unwrap();
        let ok = f.ring_of_integers();
        assert_eq!(ok.norm(), rat(1, 1));

        let om = f.quadnum(rat(1, 3), rat(1, 6));
        let i = FracIdeal::from_pair(&f, &om, &f.from_int(1)).unwrap();
        assert_eq!(i.norm(), rat(1, 3));
        assert_eq!(i.mul(&i.inverse()), ok);

        let five = ok.scale_rational(&rat(5, 1));
        assert_eq!(five.inverse(), ok.scale_rational(&rat(1, 5)));
    }

    #[test]
    fn coords_and_membership() {
        let f = Field::new(-20).unwrap();
        let ok = f.ring_of_integers();
        assert_eq!(ok.coords_of(&f.from_int(1)), (rat(0, 1), rat(1, 1)));
        assert_eq!(ok.coords_of(&f.tau()), (rat(1, 1), rat(0, 1)));

        let two = ok.scale_rational(&rat(2, 1));
        let (u, v) = two.coords_of(&f.from_int(1));
        assert_eq!((u, v), (rat(0, 1), rat(1, 2)));
        assert!(!two.contains(&f.from_int(1)));
    }

    #[test]
    fn prime_to_level() {
        let f = Field::new(-20).unwrap();
        let ok = f.ring_of_integers();
        // [sqrt(-5), 1] = O_K is prime to 2
        let i = FracIdeal::from_pair(&f, &f.tau(), &f.from_int(1)).unwrap();
        assert!(i.is_prime_to(2));

        let two = ok.scale_rational(&rat(2, 1));
        assert!(!two.is_prime_to(2));

        // [omega, 1] for omega = (1+sqrt(-5))/3 has numerator of norm 3
        let om = f.quadnum(rat(1, 3), rat(1, 6));
        let j = FracIdeal::from_pair(&f, &om, &f.from_int(1)).unwrap();
        assert!(!j.is_prime_to(3));
        assert!(j.is_prime_to(2));
    }

    #[test]
    fn non_module_lattice_rejected() {
        let f = Field::new(-20).unwrap();
        // [2 tau, 1] is a module over the conductor-2 order only
        let twotau = f.tau().scale(&rat(2, 1));
        assert!(matches!(
            FracIdeal::from_pair(&f, &twotau, &f.from_int(1)),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn dependent_generators_rejected() {
        let f = Field::new(-20).unwrap();
        let t = f.tau();
        let t3 = t.scale(&rat(3, 1));
        assert!(matches!(
            FracIdeal::from_pair(&f, &t, &t3),
            Err(Error::DependentGenerators)
        ));
    }
}
