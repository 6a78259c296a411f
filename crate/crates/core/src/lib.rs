//! Exact finite combinatorics around Amoeba forcing.
//!
//! * [`cantor`]: clopen subsets of Cantor space with exact dyadic measure.
//! * [`amoeba`]: the Amoeba order, its stem reformulations, the dense
//!   embedding into stem conditions, the A'' windows and the Cohen labels.
//! * [`coding`]: the sequence enumeration and the interval coding of
//!   measure-zero sets, with the finite covering witness.
//! * [`posets`]: Cohen, Hechler, eventually-different and localization
//!   orders at finite scale, plus the covering-hypothesis checker.
//! * [`cli`]: the `amoeba` command-line front end and its report format.
//!
//! Everything is exact: measures are [`Dyadic`] values and no floating point
//! is used anywhere.

pub mod amoeba;
pub mod cantor;
pub mod cli;
pub mod coding;
pub mod dyadic;
pub mod gen;
pub mod posets;
pub mod text;

pub use cantor::{check_star, BitString, ClopenSet, LevelFunction};
pub use dyadic::Dyadic;
