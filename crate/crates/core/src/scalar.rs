use std::fmt::Debug;

/// Exact commutative ring arithmetic shared by the generic Laurent ring and
/// the cyclotomic fields. Sparse containers never store zeros, so `is_zero`
/// is the only notion of emptiness they need.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Additive identity of the same ring as `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity of the same ring as `self`.
    fn one_like(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}
