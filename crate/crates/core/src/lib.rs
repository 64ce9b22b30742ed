//! Table region detection for PDF documents.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod baseline;
pub mod classify;
pub mod cli;
pub mod config;
pub mod corpus;
pub mod eval;
pub mod features;
pub mod ingest;
pub mod jsonl;
pub mod labels;
pub mod layout;
pub mod pdf;
pub mod synth;
pub mod weak;
