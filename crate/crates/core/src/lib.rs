pub mod dynamics;
pub mod exactalg;
pub mod modp;
pub mod sieve;

pub use dynamics::{classify, is_preperiodic, ClassInfo, EscapeCertificate, OrbitStatus, P1Witness};
pub use exactalg::{BigRat, IntPoly, RatPoly, ResDecomp};
pub use modp::{ElimReason, ModPoly, Outcome, StabilityVerdict};
pub use sieve::{SelbergWeights, WindowSets};
