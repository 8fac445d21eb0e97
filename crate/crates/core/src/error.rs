use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("crossing label 0 is not allowed")]
    ZeroLabel,
    #[error("entry {0} occurs more than once")]
    DuplicateOccurrence(i32),
    #[error("crossing {0} has only one occurrence")]
    MissingPartner(u32),
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("malformed sign block: {0}")]
    MalformedSignBlock(String),
    #[error("operation needs at least one crossing")]
    EmptyCode,
    #[error("crossing {0} is not present")]
    LabelAbsent(u32),
    #[error("move pattern not present at the given positions")]
    PatternNotPresent,
    #[error("position {position} out of range for a code of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("braid word does not close to a knot")]
    NotAKnot,
    #[error("braid generator {generator} invalid on {strands} strands")]
    InvalidGenerator { generator: i32, strands: usize },
    #[error("operation tables must be square and of equal size")]
    ShapeMismatch,
    #[error("table entry {value} outside 1..={order}")]
    OutOfRangeEntry { value: usize, order: usize },
    #[error("element ({x}, {y}) outside 1..={order}")]
    OutOfRange { x: usize, y: usize, order: usize },
    #[error("operation tables violate {violations} axiom instances")]
    InvalidBiquandle { violations: usize },
    #[error("coloring bounds need order at least 2, got {0}")]
    DegenerateOrder(usize),
    #[error("coloring count must be positive")]
    ZeroCount,
    #[error("lower bound {lower} exceeds upper bound {upper}")]
    InconsistentBounds { lower: usize, upper: usize },
}
