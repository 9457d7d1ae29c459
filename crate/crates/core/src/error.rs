use thiserror::Error;

use crate::hfs::HfSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // -- set engine --
    #[error("{0} is not an ordered pair")]
    NotAPair(HfSet),
    #[error("the intersection of the empty family is the universe class, which has no finite model")]
    EmptyIntersection,
    #[error("{0} is not a relation (some member is not an ordered pair)")]
    NotARelation(HfSet),
    #[error("not a function: {0} has more than one image")]
    NotAFunction(HfSet),
    #[error("{0} is outside the domain")]
    OutsideDomain(HfSet),
    #[error("operation requires a nonempty set")]
    EmptyInput,
    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankTooLarge { rank: usize, cap: usize },

    // -- serialization --
    #[error("malformed JSON: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("non-canonical set encoding: {0}")]
    NonCanonical(String),

    // -- classifier language --
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("formula has more than one free variable: {0:?}")]
    TooManyFreeVariables(Vec<String>),
    #[error("expected a {expected}, found a {found}")]
    WrongSort {
        expected: &'static str,
        found: &'static str,
    },

    // -- order theory --
    #[error("empty family has no maximal or minimal member")]
    EmptyFamily,
    #[error("empty carrier has no maximal or minimal element")]
    EmptyCarrier,
    #[error("relation is not a partial order on the carrier ({0})")]
    NotAPartialOrder(String),
    #[error("relation is not a well order on the carrier ({0})")]
    NotAWellOrder(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("family is not of finite character ({0})")]
    NotFiniteCharacter(String),

    // -- constructions --
    #[error("not a choice function: {0}")]
    NotAChoiceFunction(String),
    #[error("{0} is not a member of the family")]
    NotAMember(HfSet),
    #[error("{0} is not a nest")]
    NotANest(HfSet),
    #[error("{0} is not a subfamily")]
    NotASubfamily(HfSet),
    #[error("hypothesis fails at {0}: no bound for it in the family")]
    HypothesisFails(HfSet),
    #[error("the family contains the empty set")]
    EmptyMemberPresent,
    #[error("members {0} and {1} are distinct but not disjoint")]
    NotDisjoint(HfSet, HfSet),
    #[error("{what}: size {size} exceeds guard {limit}")]
    SizeGuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("construction broke an invariant: {0}")]
    Invariant(String),
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("malformed lemma instance: {0}")]
    MalformedInstance(String),
}
