use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    PoleAtPoint,
    RankMismatch { expected: usize, found: usize },
    IndexOutOfRange { index: usize, rank: usize },
    InvalidRank,
    NotDominant,
    NonIntegralSecondArgument,
    NotInPositiveCone,
    WrongSide,
    SingularGram,
    TruncationOverflow,
    NotInUb0,
    NotInRootLattice,
    CentralityCheckFailed,
    NoSolution,
    NonUniqueSolution,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::PoleAtPoint => f.write_str("denominator vanishes at the evaluation point"),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "index {index} out of range for rank {rank}")
            }
            Error::InvalidRank => f.write_str("rank must be at least 1"),
            Error::NotDominant => f.write_str("weight is not dominant"),
            Error::NonIntegralSecondArgument => {
                f.write_str("toral pairing needs an integral root-lattice argument")
            }
            Error::NotInPositiveCone => f.write_str("degree is not in the positive root cone"),
            Error::WrongSide => f.write_str("element has letters from the wrong triangular half"),
            Error::SingularGram => f.write_str("Gram matrix is singular"),
            Error::TruncationOverflow => f.write_str("action leaves the truncated module"),
            Error::NotInUb0 => f.write_str("toral part is not balanced"),
            Error::NotInRootLattice => f.write_str("weight is not in the root lattice"),
            Error::CentralityCheckFailed => f.write_str("candidate failed the centrality check"),
            Error::NoSolution => f.write_str("linear system has no solution"),
            Error::NonUniqueSolution => f.write_str("linear system has more than one solution"),
        }
    }
}

impl core::error::Error for Error {}
