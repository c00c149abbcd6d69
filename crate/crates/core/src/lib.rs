//! Amalgamated free products of groups, their Bass-Serre trees, and the
//! localization tower `S -> K = M *_N S -> L = E *_Z K` built over a finite
//! group `S` such as the Mathieu group M11.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, reports and
//! the command-line interface live in the `loctower-cli` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod amalgam;
pub mod bstree;
pub mod construction;
pub mod error;
pub mod locring;
pub mod permgroup;
pub mod suites;
pub mod toy;

pub use error::{Error, Result};
