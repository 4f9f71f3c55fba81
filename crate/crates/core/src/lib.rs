//! K-theoretic convolution algebras of symmetric groups graded by set
//! partitions: exact structure constants, a brute-force convolution oracle,
//! the Schur-algebra quotient and concatenation operators on stalks.

pub mod algebra;
pub mod charring;
pub mod error;
pub mod kclasses;
pub mod oracle;
pub mod partitions;
pub mod permgroup;
pub mod scalar;
pub mod schur;
pub mod stalks;

pub use algebra::{multiply, AlgebraElement};
pub use charring::{ClassFunction, ClassLabel, IrrLabel, VirtualCharacter};
pub use error::{Error, Result};
pub use kclasses::{BasisIndex, KClass};
pub use partitions::{IntegerPartition, RefinementOrbitLabel, SetPartition};
pub use permgroup::{DoubleCoset, Permutation, YoungSubgroup};
pub use schur::DoubleCosetFunction;
pub use scalar::{Field, Ring};

/// Exact rationals for the oracle.
pub type Rational = num_rational::Ratio<i64>;
pub type BigRational = num_rational::Ratio<num_bigint::BigInt>;

/// Integer-coefficient classes, the default everywhere.
pub type Character = VirtualCharacter<i64>;
pub type IntKClass = KClass<i64>;
pub type BigKClass = KClass<num_bigint::BigInt>;
