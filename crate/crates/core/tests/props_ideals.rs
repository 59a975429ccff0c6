//! Randomized invariants of the ideal layer: norms, inverses, the scaling
//! identity for Moebius-moved lattice bases, orientation, and Hermite-form
//! canonicality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use formclass::classgroup::{ideal_of_form, reduced_forms};
use formclass::{hnf_lattice, Field, FracIdeal, Mat2Z};

const DISCS: [i64; 5] = [-7, -8, -20, -23, -84];

fn field(idx: usize) -> Field {
    Field::new(DISCS[idx % DISCS.len()]).unwrap()
}

fn word_matrix(steps: &[(bool, i8)]) -> Mat2Z {
    let mut m = Mat2Z::identity();
    for &(swap, s) in steps {
        let step = if swap {
            Mat2Z::new(0, -1, 1, 0)
        } else {
            Mat2Z::new(1, i64::from(s), 0, 1)
        };
        m = m.mul(&step);
    }
    m
}

fn steps() -> impl Strategy<Value = Vec<(bool, i8)>> {
    prop::collection::vec((any::<bool>(), -3i8..=3), 0..8)
}

fn random_ideal(f: &Field, w: &[(bool, i8)], pick: usize) -> FracIdeal {
    let reduced = reduced_forms(f);
    let q = reduced[pick % reduced.len()]
        .apply_matrix(&word_matrix(w))
        .unwrap();
    ideal_of_form(&q, 1).unwrap()
}

proptest! {
    #[test]
    fn norm_is_reciprocal_leading_coefficient(fi in 0usize..5, w in steps(), pick in 0usize..4) {
        let f = field(fi);
        let reduced = reduced_forms(&f);
        let q = reduced[pick % reduced.len()].apply_matrix(&word_matrix(&w)).unwrap();
        let i = ideal_of_form(&q, 1).unwrap();
        prop_assert_eq!(i.norm(), BigRational::new(BigInt::one(), q.a().clone()));
    }

    #[test]
    fn inverse_is_inverse(fi in 0usize..5, w in steps(), pick in 0usize..4) {
        let f = field(fi);
        let i = random_ideal(&f, &w, pick);
        prop_assert_eq!(i.mul(&i.inverse()), f.ring_of_integers());
    }

    #[test]
    fn norm_multiplicative(fi in 0usize..5, w1 in steps(), w2 in steps(), p1 in 0usize..4, p2 in 0usize..4) {
        let f = field(fi);
        let i = random_ideal(&f, &w1, p1);
        let j = random_ideal(&f, &w2, p2);
        prop_assert_eq!(i.mul(&j).norm(), i.norm() * j.norm());
    }

    #[test]
    fn moebius_moves_scale_the_lattice(fi in 0usize..5, w in steps(), pick in 0usize..4, w2 in steps()) {
        // [sigma(omega), 1] = (1/(u*omega + v)) [omega, 1]
        let f = field(fi);
        let reduced = reduced_forms(&f);
        let q = reduced[pick % reduced.len()].apply_matrix(&word_matrix(&w)).unwrap();
        let omega = q.root();
        let sigma = word_matrix(&w2);
        let one = f.from_int(1);
        let lhs = FracIdeal::from_pair(&f, &omega.mobius(&sigma).unwrap(), &one).unwrap();
        let j = omega.j_factor(&sigma);
        let rhs = FracIdeal::from_pair(&f, &omega, &one)
            .unwrap()
            .scale(&j.inv().unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn orientation_always_positive(fi in 0usize..5, w1 in steps(), w2 in steps(), p1 in 0usize..4, p2 in 0usize..4) {
        let f = field(fi);
        let i = random_ideal(&f, &w1, p1);
        let j = random_ideal(&f, &w2, p2);
        for ideal in [i.mul(&j), i.inverse(), j.conj(), i] {
            let ratio = ideal.xi1().div(&ideal.xi2()).unwrap();
            prop_assert!(ratio.im_sign() > 0);
        }
    }

    #[test]
    fn membership_matches_integral_coords(fi in 0usize..5, w in steps(), pick in 0usize..4, a in -4i64..=4, b in -4i64..=4) {
        let f = field(fi);
        let i = random_ideal(&f, &w, pick);
        let z = i.xi1().scale(&BigRational::from(BigInt::from(a)))
            .add(&i.xi2().scale(&BigRational::from(BigInt::from(b))));
        prop_assert!(i.contains(&z));
        let (u, v) = i.coords_of(&z);
        prop_assert_eq!(u, BigRational::from(BigInt::from(a)));
        prop_assert_eq!(v, BigRational::from(BigInt::from(b)));
        // shifting by half a basis vector leaves the lattice
        let half = i.xi1().scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
        prop_assert!(!i.contains(&z.add(&half)));
    }

    #[test]
    fn hnf_invariance(cols in prop::collection::vec((-30i64..=30, -30i64..=30), 2..6), extra in any::<(i8, i8)>()) {
        let gens: Vec<(BigInt, BigInt)> = cols.iter().map(|&(x, y)| (BigInt::from(x), BigInt::from(y))).collect();
        if let Ok(h) = hnf_lattice(&gens) {
            // permutation invariance
            let mut rev = gens.clone();
            rev.reverse();
            prop_assert_eq!(hnf_lattice(&rev).unwrap(), h.clone());
            // appending an integer combination of the first two changes nothing
            let (k1, k2) = (i64::from(extra.0), i64::from(extra.1));
            let comb = (
                BigInt::from(k1) * &gens[0].0 + BigInt::from(k2) * &gens[1].0,
                BigInt::from(k1) * &gens[0].1 + BigInt::from(k2) * &gens[1].1,
            );
            let mut extended = gens.clone();
            extended.push(comb);
            prop_assert_eq!(hnf_lattice(&extended).unwrap(), h);
        }
    }
}
