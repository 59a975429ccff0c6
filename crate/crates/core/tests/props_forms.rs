//! Randomized invariants of the form algebra: action laws, witness
//! round-trips, equivalence-relation axioms, and translation lemmas.

use num_bigint::BigInt;
use proptest::prelude::*;

use formclass::forms::{gamma0_equivalent, gamma1_equivalent, t_canonical, t_equivalent, BQF};
use formclass::{classgroup, Field, Mat2Z};

const DISCS: [i64; 6] = [-7, -8, -20, -23, -84, -163];

fn field(idx: usize) -> Field {
    Field::new(DISCS[idx % DISCS.len()]).unwrap()
}

/// A word in the elementary matrices: translations by `s` and the swap.
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

/// A word in the generators of the level-n congruence subgroup
/// (upper unitriangular mod n up to sign).
fn gamma1_word(n: u32, steps: &[(bool, i8)], flip: bool) -> Mat2Z {
    let mut m = Mat2Z::identity();
    for &(lower, s) in steps {
        let step = if lower {
            Mat2Z::new(
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(i64::from(s)) * BigInt::from(n),
                BigInt::from(1),
            )
        } else {
            Mat2Z::new(1, i64::from(s), 0, 1)
        };
        m = m.mul(&step);
    }
    if flip {
        m = m.neg();
    }
    m
}

fn random_form(f: &Field, word: &[(bool, i8)]) -> BQF {
    let reduced = classgroup::reduced_forms(f);
    let base = reduced[word.len() % reduced.len()].clone();
    base.apply_matrix(&word_matrix(word)).unwrap()
}

fn steps() -> impl Strategy<Value = Vec<(bool, i8)>> {
    prop::collection::vec((any::<bool>(), -3i8..=3), 0..10)
}

proptest! {
    #[test]
    fn action_composes(fi in 0usize..6, w1 in steps(), w2 in steps()) {
        let f = field(fi);
        let q = BQF::principal(&f);
        let a = word_matrix(&w1);
        let b = word_matrix(&w2);
        let lhs = q.apply_matrix(&a.mul(&b)).unwrap();
        let rhs = q.apply_matrix(&a).unwrap().apply_matrix(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluate_commutes_with_action(fi in 0usize..6, w in steps(), x in -9i64..=9, y in -9i64..=9) {
        let f = field(fi);
        let q = random_form(&f, &w);
        let m = word_matrix(&w);
        let qm = q.apply_matrix(&m).unwrap();
        let (xb, yb) = (BigInt::from(x), BigInt::from(y));
        let mapped_x = &m.r * &xb + &m.s * &yb;
        let mapped_y = &m.u * &xb + &m.v * &yb;
        prop_assert_eq!(qm.evaluate(&xb, &yb), q.evaluate(&mapped_x, &mapped_y));
    }

    #[test]
    fn root_covariance(fi in 0usize..6, w in steps(), w2 in steps()) {
        let f = field(fi);
        let q = random_form(&f, &w);
        let m = word_matrix(&w2);
        let qm = q.apply_matrix(&m).unwrap();
        prop_assert_eq!(q.root(), qm.root().mobius(&m).unwrap());
    }

    #[test]
    fn reduction_reaches_fixed_reduced_form(fi in 0usize..6, w in steps()) {
        let f = field(fi);
        let q = random_form(&f, &w);
        let (r, gamma) = q.reduce();
        prop_assert!(r.is_reduced());
        prop_assert!(gamma.is_unimodular());
        prop_assert_eq!(&q.apply_matrix(&gamma).unwrap(), &r);
        // idempotent
        let (r2, _) = r.reduce();
        prop_assert_eq!(r2, r);
    }

    #[test]
    fn witness_round_trip(fi in 0usize..6, w1 in steps(), w2 in steps()) {
        let f = field(fi);
        let q1 = random_form(&f, &w1);
        let q2 = q1.apply_matrix(&word_matrix(&w2)).unwrap();
        let w = q1.sl2_witness(&q2).expect("equivalent by construction");
        prop_assert_eq!(q1.apply_matrix(&w).unwrap(), q2);
    }

    #[test]
    fn gamma1_fuzz_soundness(n in 1u32..=12, w in steps(), flip in any::<bool>(), fi in 0usize..6) {
        let f = field(fi);
        // a form in the level-n set: transform deterministically if needed
        let base = classgroup::reduced_forms(&f)
            .into_iter()
            .find(|q| q.in_level(n))
            .unwrap_or_else(|| BQF::principal(&f));
        let sigma = gamma1_word(n, &w, flip);
        let moved = base.apply_matrix(&sigma).unwrap();
        prop_assert!(gamma1_equivalent(n, &base, &moved).unwrap());
        // refinements: gamma1 implies gamma0 implies proper equivalence
        prop_assert!(gamma0_equivalent(n, &base, &moved).unwrap());
        prop_assert!(base.sl2_witness(&moved).is_some());
    }

    #[test]
    fn gamma1_is_an_equivalence(n in 1u32..=6, w1 in steps(), w2 in steps(), fi in 0usize..6) {
        let f = field(fi);
        let base = classgroup::reduced_forms(&f)
            .into_iter()
            .find(|q| q.in_level(n))
            .unwrap_or_else(|| BQF::principal(&f));
        let q1 = base.apply_matrix(&gamma1_word(n, &w1, false)).unwrap();
        let q2 = base.apply_matrix(&gamma1_word(n, &w2, true)).unwrap();
        // reflexive, symmetric, transitive through the common base
        prop_assert!(gamma1_equivalent(n, &q1, &q1).unwrap());
        prop_assert_eq!(
            gamma1_equivalent(n, &q1, &q2).unwrap(),
            gamma1_equivalent(n, &q2, &q1).unwrap()
        );
        prop_assert!(gamma1_equivalent(n, &base, &q1).unwrap());
        prop_assert!(gamma1_equivalent(n, &base, &q2).unwrap());
        prop_assert!(gamma1_equivalent(n, &q1, &q2).unwrap());
    }

    #[test]
    fn translation_canonical_characterizes(fi in 0usize..6, w in steps(), k in -4i64..=4) {
        let f = field(fi);
        let q = random_form(&f, &w);
        let t = Mat2Z::new(1, k, 0, 1);
        let qt = q.apply_matrix(&t).unwrap();
        prop_assert!(t_equivalent(&q, &qt));
        prop_assert_eq!(t_canonical(&q), t_canonical(&qt));
        // canonical window
        let can = t_canonical(&q);
        prop_assert!(can.b() > &(-can.a().clone()) && can.b() <= can.a());
    }

    #[test]
    fn translation_implies_gamma1_at_all_levels(fi in 0usize..6, w in steps(), k in -4i64..=4) {
        let f = field(fi);
        let q = random_form(&f, &w);
        let t = Mat2Z::new(1, k, 0, 1);
        let qt = q.apply_matrix(&t).unwrap();
        for n in [2u32, 3, 4, 6, 12] {
            if q.in_level(n) {
                prop_assert!(gamma1_equivalent(n, &q, &qt).unwrap());
            }
        }
    }

    #[test]
    fn inequivalent_translation_classes_detected(fi in 0usize..6, w in steps()) {
        let f = field(fi);
        let q = random_form(&f, &w);
        let other = t_canonical(&q);
        // different leading coefficients are never translation equivalent
        let reduced = classgroup::reduced_forms(&f);
        for r in &reduced {
            if r.a() != other.a() {
                prop_assert!(!t_equivalent(r, &other));
            }
        }
    }
}
