//! Exact arithmetic for the octahedron recurrence and its relatives.
//!
//! Everything here is computed over the integers or rationals, with no
//! floating point anywhere: Laurent polynomials with `BigInt` coefficients,
//! T- and Y-fields on the three-dimensional lattice, network matrices for
//! the explicit solution of the recurrence, Dodgson condensation, boundary
//! walls and tubes, the higher pentagram maps in rational coordinates, and
//! quasi-periodic surfaces on torus quotients.
//!
//! The crate is `no_std` (with `alloc`) so the solvers can be embedded; all
//! file formats and random sampling live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boundary;
pub mod condensation;
pub mod lattice;
pub mod network;
pub mod pentagram;
pub mod report;
pub mod ring;
pub mod torus;
