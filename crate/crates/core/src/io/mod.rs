//! Input parsing, the synthetic network generator, reports and DOT export.

mod dot;
mod edge_list;
mod generator;
mod payments;
mod report;

pub use dot::export_dot;
pub use edge_list::{parse_edge_list, parse_edge_list_with, parse_vertex_table, to_edge_list, to_vertex_table};
pub use generator::{generate, GeneratedNetwork, GeneratorConfig};
pub use payments::{
    parse_payment_paths, parse_payment_records, payments_to_digraph, PaymentRecord, RECEIVER_SUFFIX,
    SENDER_SUFFIX,
};
pub use report::{
    graph_section, ids, profile_section, removal_section, structure_section, vertex_rows, Report,
    FLOAT_DIGITS,
};
