pub mod coeff;
pub mod gen;
pub mod group_min;
pub mod lists;
pub mod monoid_min;
pub mod oracle;
pub mod pipeline;
pub mod trace;
pub mod transfer;
pub mod words;
