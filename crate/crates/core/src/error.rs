use thiserror::Error;

use crate::gf::{Elem, FieldOp};

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field order {0}: expected 4 or a prime below 65536")]
    UnsupportedField(u32),
    #[error("element code {value} is not valid in GF({order})")]
    InvalidElement { value: u32, order: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation {0:?} needs a second operand")]
    MissingOperand(FieldOp),
    #[error("malformed field token {0:?}")]
    BadToken(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("p and q must be distinct (both are {0})")]
    EqualPrimes(u64),
    #[error("gcd(p−1, q−1) = {gcd} ≠ 2 for p = {p}, q = {q}")]
    BadGcd { p: u64, q: u64, gcd: u64 },
    #[error("n = {0} exceeds the supported modulus limit")]
    ModulusTooLarge(u64),
    #[error("residue {r} out of range for n = {n}")]
    ResidueOutOfRange { r: u64, n: u64 },
    #[error("cyclotomic number index ({0}, {1}) must be in {{0, 1}}")]
    InvalidPair(u8, u8),
    #[error("hypotheses not met: {0}")]
    Hypothesis(String),
    #[error("product not in the basis span: class {class} carries values {values:?}")]
    NotInSpan { class: String, values: Vec<Elem> },
    #[error("constructed code {0} is not self-dual")]
    NotSelfDual(String),
    #[error("distance budget exhausted with {lower} ≤ d ≤ {upper}")]
    BudgetExhausted {
        lower: usize,
        upper: usize,
        certificate: Option<Vec<Elem>>,
    },
    #[error("code has dimension 0")]
    EmptyCode,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
