//! The enveloping algebra `U(g)` and the Hopf-cyclic side.

pub mod chain;
pub mod coaction;
pub mod filtration;
pub mod pbw;
pub mod sample;
pub mod suite;

pub use chain::{ChainTensor, CocyclicModule};
pub use coaction::{extend_coaction, restrict_coaction, Projection, UgCoaction};
pub use filtration::{filtration, Filtration};
pub use pbw::{Enveloping, PbwElement};
