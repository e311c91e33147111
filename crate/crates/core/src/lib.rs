//! Exact analysis of 2x2 symmetric games.
//!
//! A game is given by the row player's payoffs `[[a, b], [c, d]]`; the column
//! player's payoffs are the transpose. After removing the mean payoff and the
//! overall scale, a game is a direction `(G_A, G_B, G_AB)`, and this crate
//! maps that direction onto a sphere, a cube, and a planar unfolded map.
//!
//! * [`payoff`]: matrices, the G transform, sphere and cube normalization.
//! * [`equilibria`]: pure and mixed Nash equilibria, relaxed Pareto optima.
//! * [`cartography`]: the 24 elementary regions, canonical vertex matrices,
//!   convex decomposition, the unfolded map, trajectories, Monte Carlo.
//! * [`taxonomy`]: the nine game classes, ordinal census.
//! * [`ordergraph`]: order graphs with Nash and Pareto arrows, DOT output.

pub mod cartography;
pub mod equilibria;
pub mod error;
pub mod ordergraph;
pub mod payoff;
pub mod rational;
pub mod taxonomy;

pub use error::{Error, Result};
pub use payoff::{CubePoint, Direction, GVector, PayoffMatrix, Position, Strategy};
pub use rational::Rational;
