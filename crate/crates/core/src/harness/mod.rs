//! Corpus ingestion, generators, batch verification and the result cache.

pub mod cache;
pub mod corpus;
pub mod generate;
pub mod verify;
