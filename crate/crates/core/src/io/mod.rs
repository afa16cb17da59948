//! Graph formats, corpus generation and report records.

pub mod corpus;
pub mod format;
pub mod report;

pub use corpus::{generate_corpus, CorpusKind, Instance};
pub use format::{parse_graph, parse_graph6, parse_edge_list, write_edge_list, write_graph6, FormatError, GraphFormat};
pub use report::{BackendConfig, InputIdentity, Report, Timing};
