pub mod catalog;
pub mod cli;
pub mod coeff;
pub mod drinfeld;
pub mod hopf;
pub mod liebialg;
pub mod linalg;
pub mod mpoly;
pub mod ncalg;
pub mod parse;
pub mod report;
