//! Scalar abstraction for the numeric core.

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the statistics and threshold math are generic over.
///
/// `f32` and `f64` both qualify; the pipeline uses [`crate::Sjr`].
pub trait Real: Float + FromPrimitive + std::fmt::Debug {}

impl<T> Real for T where T: Float + FromPrimitive + std::fmt::Debug {}
