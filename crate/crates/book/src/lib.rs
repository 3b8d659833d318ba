//! The guide in `book/src`, compiled so its snippets run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/classes.md")]
pub mod classes {}

#[doc = include_str!("../../../book/src/characters.md")]
pub mod characters {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/lie-algebra.md")]
pub mod lie_algebra {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../book/src/fixtures.md")]
pub mod fixtures {}
