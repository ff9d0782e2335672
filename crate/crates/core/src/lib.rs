//! Exact verification of monoidal Hom-Hopf algebra constructions.
//!
//! Structures are finite-dimensional and given by structure constants over
//! the rationals or a prime field. Every axiom is checked on all basis
//! tuples with exact arithmetic, and failures come with a witness tuple and
//! both evaluated sides.

/// Builds a `'static` formula closure over clones of the listed values.
macro_rules! side {
    ($($v:ident),* => |$w:ident| $body:block) => {{
        $(let $v = $v.clone();)*
        move |$w: &mut $crate::exactlin::Wiring| $body
    }};
}

pub mod exactlin;
pub mod homcore;
pub mod convact;
pub mod constructions;
pub mod admissible;
pub mod corpus;
