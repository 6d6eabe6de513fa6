//! Special functions: scaled modified Bessel functions and the error function.

mod bessel;
mod erf;
mod wide;

pub use bessel::{bessel_ik_scaled, BesselOrders, ScaledBesselPair};
pub use erf::{erf, erfc};
pub use wide::Wide;
