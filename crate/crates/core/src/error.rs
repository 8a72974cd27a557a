use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid identity `{text}`: {message}")]
    InvalidIdentity { text: String, message: String },

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("not associative: ({a}{b}){c} = {left} but {a}({b}{c}) = {right}")]
    NotAssociative {
        a: String,
        b: String,
        c: String,
        left: String,
        right: String,
    },

    #[error("not an ideal: {s}*{a} or {a}*{s} leaves the subset")]
    NotAnIdeal { s: String, a: String },

    #[error("not left legal: {a}{b}{a} != {a}{b}")]
    NotLeftLegal { a: String, b: String },

    #[error("not closed under multiplication: {a}*{b} leaves the subset")]
    NotClosed { a: String, b: String },

    #[error("partition is not compatible with the table: {a} ~ {b} but {left} !~ {right}")]
    NotCompatible {
        a: String,
        b: String,
        left: String,
        right: String,
    },

    #[error("relation is not transitive: {a} ~ {b} and {b} ~ {c} but not {a} ~ {c}")]
    NotAnEquivalence { a: String, b: String, c: String },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
}
