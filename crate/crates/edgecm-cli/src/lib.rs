//! Library surface of the command line tool: the graph document format.

pub mod document;
