//! Error type shared by all modules.

use num_bigint::BigInt;
use thiserror::Error;

/// Everything that can go wrong when constructing or combining the
/// exact-arithmetic objects of this crate. Each variant names the violated
/// precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible congruences: gcd({m1}, {m2}) does not divide {r1} - {r2}")]
    IncompatibleCongruences {
        r1: BigInt,
        m1: BigInt,
        r2: BigInt,
        m2: BigInt,
    },
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("gcd(N, u, v) = {0} > 1: residue row cannot be lifted to SL2(Z)")]
    RowNotCoprime(BigInt),
    #[error("generators span a lattice of rank < 2")]
    RankDeficient,
    #[error("discriminant {0} is not negative")]
    NotNegative(BigInt),
    #[error("discriminant {0} is not fundamental")]
    NotFundamental(BigInt),
    #[error("field of discriminant {0} is excluded (extra units)")]
    ExcludedField(BigInt),
    #[error("division by zero in K")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("generators are Q-linearly dependent")]
    DependentGenerators,
    #[error("lattice is not stable under the ring of integers")]
    NotAnIdeal,
    #[error("form has discriminant {found}, field has {expected}")]
    WrongDiscriminant { found: BigInt, expected: BigInt },
    #[error("form is imprimitive: gcd(a, b, c) = {0}")]
    Imprimitive(BigInt),
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is not unimodular (det != 1)")]
    NotUnimodular,
    #[error("form has gcd(N, a) = {0} > 1: not prime to the level")]
    LevelViolation(BigInt),
    #[error("root does not generate a lattice of the maximal order (discriminant mismatch)")]
    RootNotMaximalOrder,
    #[error("root yields a form with gcd(N, a) > 1")]
    RootNotCoprimeToLevel,
    #[error("ideal is not integral")]
    NotIntegral,
    #[error("ideal is not prime to the level")]
    NotPrimeToLevel,
    #[error("target level {target} does not divide {level}")]
    LevelNotDivisible { level: u32, target: u32 },
    #[error("framing matrix is not integral: the lattice does not contain O_K")]
    FrameNotIntegral,
    #[error("level must be >= 1")]
    LevelZero,
    #[error("cannot parse form triple {0:?}")]
    FormParse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
