use thiserror::Error;

use crate::parser::ParseError;
use crate::semantics::EvalMode;
use crate::syntax::{Atom, Formula, Rule};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),

    #[error("inconsistent interpretation: {0} and ~{0}")]
    Inconsistent(Atom),

    #[error("here-world is not a subset of the there-world")]
    HereNotSubset,

    #[error("value {0} is outside -2..=2")]
    ValueOutOfRange(i64),

    #[error("not a nested expression (contains an implication): {0}")]
    NotNested(Formula),

    #[error("program is not explicit (contains default negation): {0}")]
    NotExplicit(Rule),

    #[error("signature has {size} atoms, above the limit of {limit}")]
    SignatureTooLarge { size: usize, limit: usize },

    #[error("mode {0} has no five-valued valuation")]
    UnsupportedMode(EvalMode),

    #[error("formulas are weakly equivalent; no discriminating context exists")]
    EquivalentFormulas,

    #[error("formulas are not weakly equivalent")]
    NotWeaklyEquivalent,

    #[error("not in explicit negation normal form: {0}")]
    NotNnf(Formula),

    #[error("rule is not regular: {0}")]
    NotRegular(Rule),

    #[error("the rule `top -> bot` has no regular form over an empty signature")]
    NoRegularForm,

    #[error("rewrite exceeded the limit of {limit} nodes")]
    SizeLimit { limit: usize },
}

impl Error {
    /// True for errors raised by a resource guard (signature size, node count).
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::SignatureTooLarge { .. } | Error::SizeLimit { .. })
    }
}
