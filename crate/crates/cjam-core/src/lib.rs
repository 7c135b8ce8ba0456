//! Secrecy-rate analysis for a Gaussian MISO wiretap channel assisted by
//! multi-antenna helpers that jam the eavesdropper from the null space of
//! their channel to the legitimate receiver.
//!
//! The crate provides:
//!
//! * small dense complex linear algebra ([`linalg`]),
//! * reproducible channel sampling ([`channel`]),
//! * nulling-jammer construction and instantaneous secrecy rates ([`jamming`]),
//! * a closed form for the eavesdropper SINR tail ([`outage`]),
//! * the outage-constrained rate optimizer ([`optimizer`]),
//! * Monte Carlo estimators that cross-check every closed form ([`monte_carlo`]).
//!
//! All powers are carried as SNRs (transmit power over noise power), so the
//! noise floor never appears as a separate quantity. Rates are in bits per
//! channel use (base-2 logarithms).

pub mod channel;
pub mod error;
pub mod jamming;
pub mod linalg;
pub mod monte_carlo;
pub mod optimizer;
pub mod outage;

pub use channel::{ChannelDraw, HelperSpec, RandomStream, SystemConfig};
pub use error::Error;
pub use jamming::{InputCovariance, JammerState};
pub use linalg::{CMatrix, CVector, HermitianEigen};
pub use monte_carlo::McEstimate;
pub use optimizer::OutageSolution;
pub use outage::{GroupedSpectrum, OutageCurve, OutageQuery};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
