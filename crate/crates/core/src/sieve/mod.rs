//! Sieving engines: plain differences with global selection, and the
//! genetic sieve with projection crossover and elite survival.

mod config;
mod crossover;
mod genetic;
mod init;
mod naive;
mod population;

pub use config::{GenerationReport, SieveConfig, StopReason, StopRule};
pub use crossover::{crossover, crossover_coefficient, fitness, mutated_crossover};
pub use genetic::{evolve, genetic_sieve, SieveOutcome};
pub use init::{explicit_population, init_population, INIT_RESAMPLES};
pub use naive::naive_sieve;
pub use population::{elite_select, pair_stream, Population};
