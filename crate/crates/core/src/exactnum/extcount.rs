use std::fmt;
use std::iter::Sum;
use std::ops::Add;

/// A natural number or `Infinity`; addition saturates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtCount {
    Finite(u64),
    Infinity,
}

impl ExtCount {
    pub const ZERO: ExtCount = ExtCount::Finite(0);

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtCount::Infinity)
    }

    pub fn finite(&self) -> Option<u64> {
        match *self {
            ExtCount::Finite(n) => Some(n),
            ExtCount::Infinity => None,
        }
    }
}

impl Add for ExtCount {
    type Output = ExtCount;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtCount::Finite(a), ExtCount::Finite(b)) => {
                ExtCount::Finite(a.checked_add(b).expect("count overflow"))
            }
            _ => ExtCount::Infinity,
        }
    }
}

impl Sum for ExtCount {
    fn sum<I: Iterator<Item = ExtCount>>(iter: I) -> Self {
        iter.fold(ExtCount::ZERO, Add::add)
    }
}

impl From<u64> for ExtCount {
    fn from(n: u64) -> Self {
        ExtCount::Finite(n)
    }
}

impl fmt::Display for ExtCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtCount::Finite(n) => write!(f, "{n}"),
            ExtCount::Infinity => f.write_str("infinity"),
        }
    }
}
