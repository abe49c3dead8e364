//! Exact scalar and series substrate.

mod expand;
pub mod rational;
mod series;
mod tgraded;
mod var;


pub use expand::{pochhammer, theta_product, theta_sum};
pub use rational::{binomial, factorial, Rational};
pub use series::{Kind, MultiSeries, Ring, VarSpec, EXACT};
pub use tgraded::TGraded;
pub use var::{Mono, Term, Var, MAXV};
