//! Guide chapters compiled as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}

#[doc = include_str!("../../../book/src/kostka.md")]
pub mod kostka {}

#[doc = include_str!("../../../book/src/catalan.md")]
pub mod catalan {}

#[doc = include_str!("../../../book/src/stretched.md")]
pub mod stretched {}

#[doc = include_str!("../../../book/src/internal.md")]
pub mod internal {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
