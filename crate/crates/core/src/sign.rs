use std::fmt;
use std::ops::{Mul, Neg};

/// An orientation sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Returns `None` for anything other than `1` or `-1`.
    pub const fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub const fn is_plus(self) -> bool {
        matches!(self, Sign::Plus)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+1"),
            Sign::Minus => f.write_str("-1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_table() {
        assert_eq!(Sign::Plus * Sign::Plus, Sign::Plus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(-Sign::Plus, Sign::Minus);
    }

    #[test]
    fn integer_conversion() {
        assert_eq!(Sign::from_i64(1), Some(Sign::Plus));
        assert_eq!(Sign::from_i64(-1), Some(Sign::Minus));
        assert_eq!(Sign::from_i64(0), None);
        assert_eq!(Sign::Minus.to_i64(), -1);
    }
}
