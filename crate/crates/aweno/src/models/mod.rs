pub mod buckley;
pub mod burgers;
pub mod euler1d;
pub mod euler2d;
