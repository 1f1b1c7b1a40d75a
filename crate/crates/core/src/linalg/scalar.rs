//! The two exact scalar fields every width computation runs over: GF(2) and
//! arbitrary-precision rationals. Matrices over ℕ are handled as rational
//! matrices whose entries happen to be nonnegative integers.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::elim;
use super::matrix::Matrix;

/// Which exact field a scalar type models.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Gf2,
    Rational,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Gf2 => write!(f, "gf2"),
            Mode::Rational => write!(f, "rational"),
        }
    }
}

/// An exact field element. Equality is decidable and exact; there is no
/// floating point anywhere behind this trait.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    const MODE: Mode;

    fn from_nat(n: u64) -> Self;

    fn from_bigint(n: &BigInt) -> Self;

    /// Multiplicative inverse; `None` exactly for zero.
    fn inverse(&self) -> Option<Self>;

    /// The value as an integer, if it is one.
    fn as_integer(&self) -> Option<BigInt>;

    /// True iff the value is a nonnegative integer (lives in ℕ).
    fn is_natural(&self) -> bool {
        self.as_integer().map(|n| !n.is_negative()).unwrap_or(false)
    }

    /// Rank of a matrix over this field. The default is plain Gaussian
    /// elimination; implementations may substitute a faster exact routine.
    fn rank_of(m: &Matrix<Self>) -> usize {
        elim::dense_rank(m)
    }
}

/// The field with two elements; addition is xor, multiplication is and.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.0 { 1 } else { 0 })
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2(true)
    }
}

impl Scalar for Gf2 {
    const MODE: Mode = Mode::Gf2;

    fn from_nat(n: u64) -> Self {
        Gf2(n % 2 == 1)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Gf2(!(n % BigInt::from(2)).is_zero())
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 {
            Some(*self)
        } else {
            None
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        Some(if self.0 { BigInt::one() } else { BigInt::zero() })
    }

    fn rank_of(m: &Matrix<Self>) -> usize {
        elim::gf2_rank_packed(m)
    }
}

/// Arbitrary-precision rational scalar. Nonnegative integer values play the
/// role of ℕ entries; everything else is flagged by `is_natural`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_i64(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Zero for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rat {
    fn one() -> Self {
        Rat(BigRational::one())
    }
}

impl Scalar for Rat {
    const MODE: Mode = Mode::Rational;

    fn from_nat(n: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Rat(BigRational::from_integer(n.clone()))
    }

    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        if self.0.is_integer() {
            Some(self.0.to_integer())
        } else {
            None
        }
    }

    fn rank_of(m: &Matrix<Self>) -> usize {
        elim::bareiss_rank(m)
    }
}

/// Numerator/denominator view used by the serialization layer.
pub fn rat_parts(r: &Rat) -> (BigInt, BigUint) {
    (
        r.0.numer().clone(),
        r.0.denom().magnitude().clone(),
    )
}
