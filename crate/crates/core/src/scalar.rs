use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer scalar the invariant pipeline is generic over.
///
/// `BigInt` is the production instantiation (see the aliases at the crate
/// root). Fixed-width types such as `i64` or `i128` satisfy the bound too and
/// are handy in tests, but they can overflow once `k` grows along a family
/// `l + 112n·j`; nothing in this crate checks for that.
pub trait Scalar:
    Integer + Signed + Clone + Hash + Debug + Display + FromStr + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Converts a small literal into the scalar type.
    #[inline]
    fn lit(v: i64) -> Self {
        Self::from_i64(v).expect("literal does not fit the scalar type")
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
