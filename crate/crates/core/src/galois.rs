//! Integer-matrix data describing how a form class acts on values of
//! level-N modular functions: the framing matrix expressing the ring of
//! integers in an ideal basis, and the per-class action matrix
//! `[[a, (b - b_K)/2], [0, 1]]` taken mod N up to sign. No modular function
//! is ever evaluated; the matrices and the attached point parameterize the
//! action exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::Mat2Z;
use crate::classgroup::{json_int, FormClassRep};
use crate::error::{Error, Result};
use crate::quadfield::{Field, FracIdeal, QuadNum};

/// The action datum of a class: an element of `GL2(Z/N)/{+-1}` with
/// determinant `a mod N`, plus the root of the representative form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionDatum {
    /// canonical matrix entries mod N, row-major
    pub matrix: [u64; 4],
    pub modulus: u32,
    pub omega: QuadNum,
    pub det_mod: u64,
}

/// Canonical representative of a matrix in `GL2(Z/N)/{+-1}`: the
/// lexicographically smaller, row-major, of the reductions of `M` and `-M`.
/// Its first nonzero entry lies in `[1, ceil(N/2)]`.
fn canonical_mod_pm(m: &Mat2Z, n: u32) -> [u64; 4] {
    let e = m.entries_mod(n);
    let nn = u64::from(n);
    let neg: [u64; 4] = [
        (nn - e[0]) % nn,
        (nn - e[1]) % nn,
        (nn - e[2]) % nn,
        (nn - e[3]) % nn,
    ];
    e.min(neg)
}

/// Attach the action matrix and point to an enumerated class.
pub fn action_datum(rep: &FormClassRep) -> ActionDatum {
    let q = rep.form();
    let f = q.field();
    let n = rep.pair().modulus;
    let two = BigInt::from(2);
    let m = Mat2Z {
        r: q.a().clone(),
        s: (q.b() - f.b_k()) / &two,
        u: BigInt::zero(),
        v: BigInt::from(1),
    };
    let matrix = canonical_mod_pm(&m, n);
    let det_mod = u64::try_from(&q.a().mod_floor(&BigInt::from(n))).expect("residue fits");
    ActionDatum {
        matrix,
        modulus: n,
        omega: q.root(),
        det_mod,
    }
}

impl ActionDatum {
    /// JSON rendering with exact rational coordinates for the point.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::{Map, Value};
        let mut obj = Map::new();
        obj.insert(
            "matrix".into(),
            Value::Array(vec![
                Value::Array(vec![self.matrix[0].into(), self.matrix[1].into()]),
                Value::Array(vec![self.matrix[2].into(), self.matrix[3].into()]),
            ]),
        );
        obj.insert("mod".into(), Value::from(self.modulus));
        let mut om = Map::new();
        let fmt = |r: &num_rational::BigRational| -> Value {
            Value::from(format!("{}/{}", r.numer(), r.denom()))
        };
        om.insert("x".into(), fmt(self.omega.x()));
        om.insert("y".into(), fmt(self.omega.y()));
        obj.insert("omega".into(), Value::Object(om));
        obj.insert("det_mod_N".into(), json_int(&BigInt::from(self.det_mod)));
        Value::Object(obj)
    }
}

/// The integral matrix `A` with `[tau; 1] = A [xi1; xi2]` for an oriented
/// basis of a lattice containing the ring of integers. `det(A)` equals the
/// reciprocal of the lattice norm. Fails when `A` would not be integral,
/// which certifies that the lattice does not contain `O_K`.
pub fn frame_matrix(f: &Field, xi1: &QuadNum, xi2: &QuadNum) -> Result<Mat2Z> {
    let (x1, y1) = xi1.coords(f);
    let (x2, y2) = xi2.coords(f);
    let delta = &x1 * &y2 - &x2 * &y1;
    if delta.is_zero() {
        return Err(Error::DependentGenerators);
    }
    assert!(
        delta.is_positive(),
        "basis must be oriented: Im(xi1/xi2) > 0"
    );
    // Cramer: tau has coordinates (1, 0), 1 has coordinates (0, 1)
    let entries = [&y2 / &delta, -&y1 / &delta, -&x2 / &delta, &x1 / &delta];
    if entries.iter().any(|e| !e.is_integer()) {
        return Err(Error::FrameNotIntegral);
    }
    let m = Mat2Z {
        r: entries[0].to_integer(),
        s: entries[1].to_integer(),
        u: entries[2].to_integer(),
        v: entries[3].to_integer(),
    };
    debug_assert!(m.det().is_positive());
    Ok(m)
}

/// [`frame_matrix`] on the canonical basis of a fractional ideal.
pub fn frame_matrix_of_ideal(ideal: &FracIdeal) -> Result<Mat2Z> {
    frame_matrix(ideal.field(), &ideal.xi1(), &ideal.xi2())
}

/// Are two matrices congruent mod `n` up to sign?
pub fn congruent_mod_pm(a: &Mat2Z, b: &Mat2Z, n: u32) -> bool {
    canonical_mod_pm(a, n) == canonical_mod_pm(b, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classgroup::ClassGroup;
    use crate::forms::BQF;
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn action_matrix_examples() {
        let f = Field::new(-20).unwrap();
        let g = ClassGroup::enumerate(&f, 2).unwrap();
        // identity class: a = 1, b = b_K, matrix = I mod N
        let id = &g.reps()[g.identity()];
        let datum = action_datum(id);
        assert_eq!(datum.matrix, [1, 0, 0, 1]);
        assert_eq!(datum.det_mod, 1);
        assert_eq!(
            datum.omega,
            f.quadnum(
                BigRational::zero(),
                BigRational::new(BigInt::from(1), BigInt::from(2))
            )
        );

        // class of (3, -2, 2): [[3, -1], [0, 1]] = [[1, 1], [0, 1]] mod 2
        let q = BQF::new(&f, 3, -2, 2).unwrap();
        let k = g.class_index(&q).unwrap();
        // the stored representative is equivalent, not necessarily literal;
        // build the datum for the literal form through a singleton group
        let datum = action_datum(&g.reps()[k]);
        assert_eq!(datum.modulus, 2);
        // determinant of the class representative is odd
        assert_eq!(datum.det_mod % 2, 1);

        // directly: matrix of (3, -2, 2) at level 2 and of (7, -6, 2) at 6
        let m32 = Mat2Z::new(3, -1, 0, 1);
        assert_eq!(canonical_mod_pm(&m32, 2), [1, 1, 0, 1]);
        let m76 = Mat2Z::new(7, -3, 0, 1);
        assert_eq!(canonical_mod_pm(&m76, 6), [1, 3, 0, 1]);
    }

    #[test]
    fn frame_matrix_examples() {
        let f = Field::new(-20).unwrap();
        let ok = f.ring_of_integers();
        assert_eq!(frame_matrix_of_ideal(&ok).unwrap(), Mat2Z::identity());

        let third = ok.scale_rational(&BigRational::new(BigInt::from(1), BigInt::from(3)));
        let a = frame_matrix_of_ideal(&third).unwrap();
        assert_eq!(a, Mat2Z::new(3, 0, 0, 3));
        assert_eq!(a.det(), BigInt::from(9));
        assert_eq!(
            BigRational::from(a.det()) * third.norm(),
            BigRational::from(BigInt::from(1))
        );

        // a lattice that does not contain O_K is rejected
        let two = ok.scale_rational(&BigRational::from(BigInt::from(2)));
        assert!(matches!(
            frame_matrix_of_ideal(&two),
            Err(Error::FrameNotIntegral)
        ));
    }

    #[test]
    fn frame_congruence_for_class_ideals() {
        // the ideal built from a class: basis (omega/a^e, 1/a^e) with
        // e = phi(N); its frame matrix is the action matrix times a^e mod N
        let f = Field::new(-20).unwrap();
        let g = ClassGroup::enumerate(&f, 6).unwrap();
        for rep in g.reps() {
            let q = rep.form();
            let e = crate::arith::euler_phi(6);
            let scale = BigRational::new(
                BigInt::one(),
                num_traits::pow::pow(q.a().clone(), e as usize),
            );
            let xi1 = q.root().scale(&scale);
            let xi2 = f.quadnum(scale.clone(), BigRational::zero());
            let a = frame_matrix(&f, &xi1, &xi2).unwrap();
            let expected = Mat2Z {
                r: q.a().clone(),
                s: (q.b() - f.b_k()) / BigInt::from(2),
                u: BigInt::zero(),
                v: BigInt::one(),
            };
            assert!(congruent_mod_pm(&a, &expected, 6), "class {q}");
        }
    }

    #[test]
    fn action_json_shape() {
        let f = Field::new(-20).unwrap();
        let g = ClassGroup::enumerate(&f, 2).unwrap();
        let v = action_datum(&g.reps()[0]).to_json();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["matrix", "mod", "omega", "det_mod_N"]);
        assert_eq!(v["mod"], serde_json::json!(2));
        assert!(v["omega"]["x"].is_string());
        assert!(v["omega"]["y"].is_string());
    }
}
