//! The extended form class group `C_N(d)`: enumeration of class
//! representatives, the group law computed through exact ideal arithmetic,
//! inverses, level projections, independent order oracles, invariant
//! factors, and the ring-class quotient induced by the upper-triangular
//! congruence subgroup.
//!
//! A class at level `N` is indexed by a reduced form `Q_i` of the field
//! discriminant together with a residue pair `(u, v)` mod `N` taken up to
//! sign: the representative form is the one whose root is `rho(omega_i)`
//! for the lift `rho` of `(u, v)` to SL2(Z), applied to the root `omega_i`
//! of a fixed transform `Q_i'` of `Q_i` with leading coefficient prime to
//! `N`. Distinct admissible pairs give distinct classes, which makes both
//! the enumeration and the membership test exact and scan-free.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{crt, euler_phi, gcd, kronecker, sl2_lift, Mat2Z, ResiduePair};
use crate::error::{Error, Result};
use crate::forms::{
    column_candidates, complete_first_column, gamma0_equivalent, gamma1_equivalent, BQF,
};
use crate::quadfield::{Field, FracIdeal};

/// One enumerated class of `C_N(d)`: the representative form plus the
/// `(reduced form, residue pair)` coordinates that index the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormClassRep {
    form: BQF,
    reduced_index: usize,
    pair: ResiduePair,
}

impl FormClassRep {
    pub fn form(&self) -> &BQF {
        &self.form
    }

    pub fn reduced_index(&self) -> usize {
        self.reduced_index
    }

    pub fn pair(&self) -> ResiduePair {
        self.pair
    }
}

/// All primitive reduced triples `(a, b, c)` of the given negative
/// discriminant, ordered lexicographically. Brute force by the bound
/// `3a^2 <= |disc|`.
pub fn reduced_triples_of_disc(disc: &BigInt) -> Vec<(BigInt, BigInt, BigInt)> {
    assert!(disc.is_negative());
    let four = BigInt::from(4);
    let mut out = Vec::new();
    let mut a = BigInt::one();
    while BigInt::from(3) * &a * &a <= disc.abs() {
        // b = disc (mod 2), -a < b <= a
        let mut b = BigInt::one() - &a;
        if b.mod_floor(&BigInt::from(2)) != disc.mod_floor(&BigInt::from(2)) {
            b += 1;
        }
        while b <= a {
            let num = &b * &b - disc;
            let den = &four * &a;
            let (c, rem) = num.div_rem(&den);
            if rem.is_zero() && c >= a {
                let primitive = gcd(&gcd(&a, &b), &c).is_one();
                let boundary_ok = !(b.is_negative() && (b == -a.clone() || a == c));
                if primitive && boundary_ok {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
            b += 2;
        }
        a += 1;
    }
    out
}

/// Reduced representatives of the classical class group of the field,
/// principal form first.
pub fn reduced_forms(f: &Field) -> Vec<BQF> {
    reduced_triples_of_disc(f.discriminant())
        .into_iter()
        .map(|(a, b, c)| BQF::new(f, a, b, c).expect("reduced triple is a valid form"))
        .collect()
}

/// The ideal `[omega_Q, 1]` attached to a form with leading coefficient
/// prime to `n`; its norm is `1/a`, so it is prime to `n`.
pub fn ideal_of_form(q: &BQF, n: u32) -> Result<FracIdeal> {
    q.require_level(n)?;
    let f = q.field().clone();
    let one = f.from_int(1);
    FracIdeal::from_pair(&f, &q.root(), &one)
}

/// The form class attached to an integral ideal prime to `n`. The returned
/// form `Q` satisfies: the ray class of `[omega_Q, 1]` is the class of the
/// *inverse* of the input ideal. Writing the inverse on its oriented basis
/// `(xi1, xi2)`, the integer coordinates `(u, v)` of `1` in that basis have
/// `gcd(n, u, v) = 1`; lifting them to SL2(Z) and moving `xi1/xi2` by the
/// lift gives the root of `Q`.
pub fn form_of_ideal(f: &Field, n: u32, ideal: &FracIdeal) -> Result<BQF> {
    if !ideal.is_integral() {
        return Err(Error::NotIntegral);
    }
    if !ideal.is_prime_to(n) {
        return Err(Error::NotPrimeToLevel);
    }
    let inv = ideal.inverse();
    let one = f.from_int(1);
    let (u, v) = inv.coords_of(&one);
    if !u.is_integer() || !v.is_integer() {
        return Err(Error::Internal(
            "1 must lie in the inverse of an integral ideal".into(),
        ));
    }
    let (u, v) = (u.to_integer(), v.to_integer());
    let sigma = sl2_lift(&u, &v, n)?;
    let xi = inv.xi1().div(&inv.xi2())?;
    let omega = xi.mobius(&sigma)?;
    BQF::from_root(f, &omega, n)
}

/// The enumerated extended form class group `C_N(d)`.
#[derive(Debug)]
pub struct ClassGroup {
    field: Field,
    level: u32,
    reduced: Vec<BQF>,
    transformed: Vec<BQF>,
    // gamma with apply_matrix(transformed[i], gamma) = reduced[i]
    reduction_gammas: Vec<Mat2Z>,
    reps: Vec<FormClassRep>,
    index: HashMap<(usize, (u64, u64)), usize>,
    identity: usize,
    table: OnceLock<Vec<Vec<usize>>>,
}

/// Deterministic transform of `q` whose leading coefficient is coprime to
/// `modulus`: scan first columns `(r, u)` in the canonical candidate order
/// and accept the first with `gcd(q(r, u), modulus) = 1`.
fn coprime_transform(q: &BQF, modulus: &BigInt) -> (Mat2Z, BQF) {
    for (r, u) in column_candidates() {
        let (rb, ub) = (BigInt::from(r), BigInt::from(u));
        let val = q.evaluate(&rb, &ub);
        if gcd(&val, modulus).is_one() {
            let m = complete_first_column(&rb, &ub).expect("candidate columns are coprime");
            let qt = q.apply_matrix(&m).expect("completion is unimodular");
            return (m, qt);
        }
    }
    unreachable!("a primitive form represents values coprime to any modulus")
}

/// Admissible residue pairs for a transformed form: canonical `(u, v)` mod
/// `n` (up to sign) with `gcd(n, q(v, -u)) = 1`, in lexicographic order.
fn admissible_pairs(q: &BQF, n: u32) -> Vec<ResiduePair> {
    let nb = BigInt::from(n);
    let mut out = Vec::new();
    for u in 0..u64::from(n) {
        for v in 0..u64::from(n) {
            let p = ResiduePair::new(u, v, n);
            if (p.u, p.v) != (u, v) {
                continue; // keep only canonical representatives
            }
            let val = q.evaluate(&BigInt::from(v), &-BigInt::from(u));
            if gcd(&nb, &val).is_one() {
                out.push(p);
            }
        }
    }
    out
}

impl ClassGroup {
    /// Enumerate all classes of `C_N(d)`: one per `(reduced form, residue
    /// pair)` coordinate.
    pub fn enumerate(f: &Field, n: u32) -> Result<ClassGroup> {
        if n == 0 {
            return Err(Error::LevelZero);
        }
        let reduced = reduced_forms(f);
        let nb = BigInt::from(n);
        let mut transformed = Vec::with_capacity(reduced.len());
        let mut reduction_gammas = Vec::with_capacity(reduced.len());
        let mut reps = Vec::new();
        let mut index = HashMap::new();
        let mut pair_count: Option<usize> = None;
        for (i, qi) in reduced.iter().enumerate() {
            let (_, qt) = coprime_transform(qi, &nb);
            let (back, gamma) = qt.reduce();
            if &back != qi {
                return Err(Error::Internal(
                    "transform of a reduced form must reduce back to it".into(),
                ));
            }
            let pairs = admissible_pairs(&qt, n);
            match pair_count {
                None => pair_count = Some(pairs.len()),
                Some(k) if k == pairs.len() => {}
                Some(k) => {
                    return Err(Error::Internal(format!(
                        "pair count {} for reduced form {} differs from {}",
                        pairs.len(),
                        i,
                        k
                    )))
                }
            }
            let omega = qt.root();
            for p in pairs {
                let rho = sl2_lift(&BigInt::from(p.u), &BigInt::from(p.v), n)?;
                let root = omega.mobius(&rho)?;
                let form = BQF::from_root(f, &root, n)?;
                let k = reps.len();
                index.insert((i, (p.u, p.v)), k);
                reps.push(FormClassRep {
                    form,
                    reduced_index: i,
                    pair: p,
                });
            }
            transformed.push(qt);
            reduction_gammas.push(gamma);
        }
        let mut g = ClassGroup {
            field: f.clone(),
            level: n,
            reduced,
            transformed,
            reduction_gammas,
            reps,
            index,
            identity: 0,
            table: OnceLock::new(),
        };
        g.identity = g.class_index(&BQF::principal(f))?;
        Ok(g)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[FormClassRep] {
        &self.reps
    }

    pub fn rep(&self, k: usize) -> &FormClassRep {
        &self.reps[k]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn reduced_forms(&self) -> &[BQF] {
        &self.reduced
    }

    /// The fixed level-coprime transform of the i-th reduced form.
    pub fn transformed_form(&self, i: usize) -> &BQF {
        &self.transformed[i]
    }

    /// The class of an arbitrary form with leading coefficient prime to the
    /// level. The index is found without scanning: reduce the form, read
    /// off the reduced index, and take the bottom row of the witness back
    /// to the transformed representative; that row mod `N` up to sign is
    /// exactly the residue-pair coordinate of the class.
    pub fn class_index(&self, q: &BQF) -> Result<usize> {
        assert_eq!(q.field(), &self.field, "mixed fields");
        q.require_level(self.level)?;
        let (r, g1) = q.reduce();
        let i = self
            .reduced
            .iter()
            .position(|x| x == &r)
            .ok_or_else(|| Error::Internal("reduced form missing from enumeration".into()))?;
        let w = g1.mul(
            &self.reduction_gammas[i]
                .inverse_unimodular()
                .expect("reduction transforms are unimodular"),
        );
        // apply_matrix(q, w) = transformed[i]
        let p = ResiduePair::from_bigints(&w.u, &w.v, self.level);
        self.index
            .get(&(i, (p.u, p.v)))
            .copied()
            .ok_or_else(|| Error::Internal("witness pair missing from enumeration".into()))
    }

    /// Reference implementation of [`ClassGroup::class_index`]: linear scan
    /// for the unique equivalent representative. Used to cross-check the
    /// witness-based index.
    pub fn class_index_by_scan(&self, q: &BQF) -> Result<usize> {
        q.require_level(self.level)?;
        for (k, rep) in self.reps.iter().enumerate() {
            if gamma1_equivalent(self.level, &rep.form, q)? {
                return Ok(k);
            }
        }
        Err(Error::Internal(
            "enumeration is complete, a level-coprime form must match".into(),
        ))
    }

    /// Group law on arbitrary representative forms. Composes the two ideals
    /// `[omega_1, 1][omega_2, 1]` via a classical composition step: move
    /// `q2` to `q3` with `gcd(a3, a1 N) = 1`, glue `b1, b3` by CRT into a
    /// single `B` mod `2 a1 a3`, and divide out the automorphy factor of
    /// the move. The inverse of `a1 a2 conj(c)` is then realized as a form
    /// class again.
    pub fn compose_forms(&self, q1: &BQF, q2: &BQF) -> Result<usize> {
        let f = &self.field;
        let n = self.level;
        q1.require_level(n)?;
        q2.require_level(n)?;
        let d = f.discriminant();
        let a1 = q1.a().clone();
        let b1 = q1.b().clone();
        let a2 = q2.a().clone();

        let (rho, q3) = coprime_transform(q2, &(&a1 * BigInt::from(n)));
        let a3 = q3.a().clone();
        let b3 = q3.b().clone();
        let two = BigInt::from(2);

        let (big_b, modulus) = crt(&b1, &(&two * &a1), &b3, &(&two * &a3))
            .map_err(|e| Error::Internal(format!("composition congruences: {e}")))?;
        let a13 = &a1 * &a3;
        if modulus != &two * &a13 {
            return Err(Error::Internal("composition moduli must be coprime".into()));
        }
        // composed data must be an integral primitive form of the right
        // discriminant, coprime to the level
        let num = &big_b * &big_b - d;
        let den = BigInt::from(4) * &a13;
        let (c_comp, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::Internal(
                "B^2 = disc (mod 4 a1 a3) must hold after CRT".into(),
            ));
        }
        let composed = BQF::new(f, a13.clone(), big_b, c_comp)
            .map_err(|e| Error::Internal(format!("composed form invalid: {e}")))?;
        composed
            .require_level(n)
            .map_err(|e| Error::Internal(format!("composed form level: {e}")))?;

        let omega3 = q3.root();
        let j = omega3.j_factor(&rho);
        let c_ideal = ideal_of_form(&composed, 1)?.scale(&j.inv()?)?;
        debug_assert_eq!(
            c_ideal,
            ideal_of_form(q1, n)?.mul(&ideal_of_form(q2, n)?),
            "two routes to the product ideal must agree"
        );
        let a_ideal = c_ideal
            .conj()
            .scale_rational(&BigRational::from(&a1 * &a2));
        let q4 = form_of_ideal(f, n, &a_ideal)?;
        self.class_index(&q4)
    }

    /// Product of two enumerated classes.
    pub fn multiply(&self, k1: usize, k2: usize) -> Result<usize> {
        self.compose_forms(&self.reps[k1].form, &self.reps[k2].form)
    }

    /// Inverse of an enumerated class: realize `a^{phi(N)} [omega, 1]` as
    /// an integral ideal in the class, so that its inverse is reached from
    /// `-conj(omega)` moved by a lift of `(0, a^{phi(N)-1})`.
    pub fn inverse(&self, k: usize) -> Result<usize> {
        let q = &self.reps[k].form;
        let n = self.level;
        let e = euler_phi(u64::from(n));
        let nb = BigInt::from(n.max(1));
        let a_pow = q.a().modpow(&BigInt::from(e - 1), &nb);
        let sigma = sl2_lift(&BigInt::zero(), &a_pow, n)?;
        let omega = q.root().conj().neg().mobius(&sigma)?;
        let qi = BQF::from_root(&self.field, &omega, n)?;
        self.class_index(&qi)
    }

    /// Class of the same representative form at a divisor level.
    pub fn project(&self, k: usize, target: &ClassGroup) -> Result<usize> {
        assert_eq!(self.field, target.field, "mixed fields");
        if self.level % target.level != 0 {
            return Err(Error::LevelNotDivisible {
                level: self.level,
                target: target.level,
            });
        }
        target.class_index(&self.reps[k].form)
    }

    /// The full multiplication table (memoized; computed once).
    pub fn table(&self) -> &[Vec<usize>] {
        self.table.get_or_init(|| {
            let k = self.reps.len();
            let mut t = vec![vec![0usize; k]; k];
            for i in 0..k {
                for j in 0..=i {
                    let p = self
                        .multiply(i, j)
                        .expect("group law is total on enumerated classes");
                    t[i][j] = p;
                    t[j][i] = p;
                }
            }
            t
        })
    }

    /// Invariant factors `d1 | d2 | ...` of the group.
    pub fn group_structure(&self) -> Vec<u64> {
        invariant_factors_from_table(self.table(), self.identity)
    }

    /// Quotient of `C_N(d)` by the relation induced from the
    /// upper-triangular congruence subgroup; isomorphic to the class group
    /// of the order of conductor `N`.
    pub fn ring_class_quotient(&self) -> Result<RingClassGroup> {
        let n = self.level;
        let mut member_of = vec![usize::MAX; self.reps.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for k in 0..self.reps.len() {
            let mut found = None;
            for (ci, members) in classes.iter().enumerate() {
                if gamma0_equivalent(n, &self.reps[members[0]].form, &self.reps[k].form)? {
                    found = Some(ci);
                    break;
                }
            }
            match found {
                Some(ci) => {
                    member_of[k] = ci;
                    classes[ci].push(k);
                }
                None => {
                    member_of[k] = classes.len();
                    classes.push(vec![k]);
                }
            }
        }
        let m = classes.len();
        let mut table = vec![vec![0usize; m]; m];
        for i in 0..m {
            for j in 0..=i {
                let p = member_of[self.multiply(classes[i][0], classes[j][0])?];
                table[i][j] = p;
                table[j][i] = p;
            }
        }
        Ok(RingClassGroup {
            member_of: member_of.clone(),
            classes,
            table,
            identity: member_of[self.identity],
        })
    }

    /// Defensive check that enumerated representatives are pairwise
    /// inequivalent; quadratic, intended for tests.
    pub fn assert_distinct_classes(&self) -> Result<()> {
        for i in 0..self.reps.len() {
            for j in (i + 1)..self.reps.len() {
                if gamma1_equivalent(self.level, &self.reps[i].form, &self.reps[j].form)? {
                    return Err(Error::Internal(format!(
                        "classes {i} and {j} are equivalent"
                    )));
                }
            }
        }
        Ok(())
    }

    /// JSON document for the group; the table is optional because it forces
    /// materialization of all pairwise products.
    pub fn to_json(&self, include_table: bool) -> serde_json::Value {
        use serde_json::{Map, Value};
        let mut obj = Map::new();
        obj.insert("d_K".into(), json_int(self.field.discriminant()));
        obj.insert("N".into(), Value::from(self.level));
        obj.insert("order".into(), Value::from(self.reps.len()));
        obj.insert(
            "invariant_factors".into(),
            Value::Array(
                self.group_structure()
                    .into_iter()
                    .map(Value::from)
                    .collect(),
            ),
        );
        obj.insert(
            "classes".into(),
            Value::Array(
                self.reps
                    .iter()
                    .map(|r| {
                        let mut c = Map::new();
                        c.insert("a".into(), json_int(r.form.a()));
                        c.insert("b".into(), json_int(r.form.b()));
                        c.insert("c".into(), json_int(r.form.c()));
                        c.insert("i".into(), Value::from(r.reduced_index));
                        c.insert("u".into(), Value::from(r.pair.u));
                        c.insert("v".into(), Value::from(r.pair.v));
                        Value::Object(c)
                    })
                    .collect(),
            ),
        );
        if include_table {
            obj.insert(
                "table".into(),
                Value::Array(
                    self.table()
                        .iter()
                        .map(|row| {
                            Value::Array(row.iter().map(|&x| Value::from(x)).collect())
                        })
                        .collect(),
                ),
            );
        }
        Value::Object(obj)
    }
}

/// JSON value for an unbounded integer: a plain number within the 53-bit
/// safe range, a decimal string beyond it.
pub(crate) fn json_int(x: &BigInt) -> serde_json::Value {
    const SAFE: i64 = (1 << 53) - 1;
    match i64::try_from(x) {
        Ok(v) if (-SAFE..=SAFE).contains(&v) => serde_json::Value::from(v),
        _ => serde_json::Value::from(x.to_string()),
    }
}

/// The ring-class quotient of a level-N group.
#[derive(Debug, Clone)]
pub struct RingClassGroup {
    /// ambient class index -> quotient class index
    pub member_of: Vec<usize>,
    /// quotient class index -> ambient member indices
    pub classes: Vec<Vec<usize>>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl RingClassGroup {
    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn invariant_factors(&self) -> Vec<u64> {
        invariant_factors_from_table(&self.table, self.identity)
    }
}

/// Number of classes predicted by counting admissible residue pairs against
/// one transformed reduced form: `h(d) * #pairs`.
pub fn order_via_pairs(f: &Field, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::LevelZero);
    }
    let reduced = reduced_forms(f);
    let (_, qt) = coprime_transform(&reduced[0], &BigInt::from(n));
    Ok(reduced.len() as u64 * admissible_pairs(&qt, n).len() as u64)
}

/// Number of classes predicted by the unit counts of the residue rings at
/// the primes dividing `n`, split/inert/ramified according to the Kronecker
/// symbol: `h(d) * |(O/nO)^x| / |{+-1 mod n}|`.
pub fn order_via_units(f: &Field, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::LevelZero);
    }
    let h = reduced_forms(f).len() as u64;
    let mut units: u64 = 1;
    let mut rest = u64::from(n);
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut k = 0u32;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            units *= local_unit_count(f, p, k)?;
        }
        p += 1;
    }
    if rest > 1 {
        units *= local_unit_count(f, rest, 1)?;
    }
    let pm = if n <= 2 { 1 } else { 2 };
    let total = h * units;
    if total % pm != 0 {
        return Err(Error::Internal("unit-count parity".into()));
    }
    Ok(total / pm)
}

fn local_unit_count(f: &Field, p: u64, k: u32) -> Result<u64> {
    let pk1 = p.pow(k - 1);
    Ok(match kronecker(f.discriminant(), p)? {
        1 => (pk1 * (p - 1)).pow(2),
        -1 => pk1 * pk1 * (p * p - 1),
        _ => pk1 * pk1 * p * (p - 1),
    })
}

fn element_order(table: &[Vec<usize>], identity: usize, x: usize) -> u64 {
    let mut cur = x;
    let mut ord = 1u64;
    while cur != identity {
        cur = table[cur][x];
        ord += 1;
    }
    ord
}

/// Invariant factor decomposition of a finite abelian group given by its
/// multiplication table: repeatedly split off a cyclic subgroup of maximal
/// order and recurse on the quotient. Returns `d1 | d2 | ...` ascending.
pub fn invariant_factors_from_table(table: &[Vec<usize>], identity: usize) -> Vec<u64> {
    let size = table.len();
    if size <= 1 {
        return Vec::new();
    }
    let (x, e) = (0..size)
        .map(|g| (g, element_order(table, identity, g)))
        .max_by_key(|&(g, o)| (o, std::cmp::Reverse(g)))
        .expect("nonempty");
    // subgroup generated by x
    let mut subgroup = vec![identity];
    let mut cur = x;
    while cur != identity {
        subgroup.push(cur);
        cur = table[cur][x];
    }
    debug_assert_eq!(subgroup.len() as u64, e);
    // cosets, keyed by their minimal member
    let coset_key = |g: usize| -> usize {
        subgroup.iter().map(|&h| table[g][h]).min().expect("nonempty")
    };
    let mut keys: Vec<usize> = (0..size).map(coset_key).collect();
    let mut reps: Vec<usize> = keys.clone();
    reps.sort_unstable();
    reps.dedup();
    let rep_index: HashMap<usize, usize> =
        reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let m = reps.len();
    let mut qt = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            qt[i][j] = rep_index[&keys[table[reps[i]][reps[j]]]];
        }
    }
    let qid = rep_index[&keys[identity]];
    keys.clear();
    let mut factors = invariant_factors_from_table(&qt, qid);
    if let Some(&last) = factors.last() {
        debug_assert_eq!(e % last, 0, "invariant factors must divide");
    }
    factors.push(e);
    factors
}
