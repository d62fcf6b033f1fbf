//! Exact computer algebra for the line and conic geometry of low-degree
//! Fano threefolds.
//!
//! Everything here is exact: scalars live in cyclotomic fields
//! `Q(zeta_n)` represented on the power basis, polynomials carry those
//! scalars, and every geometric predicate reduces to exact linear algebra
//! or polynomial gcd computations. No floating point is used anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, the command-line interface and
//! serialization live in the companion `fano3lab` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod autgrp;
pub mod exactfield;
pub mod fanodb;
pub mod linalg;
pub mod linalgeom;
pub mod planecurves;
pub mod polyalg;
pub mod quintics;
pub mod v5;
