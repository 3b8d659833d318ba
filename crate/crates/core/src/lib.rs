pub mod budget;
pub mod character;
pub mod classes;
pub mod counting;
pub mod error;
pub mod families;
pub mod group;
pub mod plesken;
pub mod report;

pub use budget::Budget;
pub use error::{Error, Result};
