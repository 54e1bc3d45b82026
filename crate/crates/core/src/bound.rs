//! Upper bounds on the minimum distance of self-dual codes.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundRule {
    /// Binary, `N != 22 (mod 24)`: `4 floor(N/24) + 4`.
    BinaryGeneric,
    /// Binary, `N = 22 (mod 24)`: `4 floor(N/24) + 6`.
    BinaryTwentyTwo,
    /// Ternary: `3 floor(N/12) + 3`.
    Ternary,
    /// Quaternary (Euclidean): `4 floor(N/12) + 4`.
    Quaternary,
    /// Any other field: `floor(N/2) + 1`.
    General,
}

impl BoundRule {
    pub fn label(self) -> &'static str {
        match self {
            BoundRule::BinaryGeneric => "(i) l=2, N != 22 mod 24",
            BoundRule::BinaryTwentyTwo => "(i) l=2, N = 22 mod 24",
            BoundRule::Ternary => "(ii) l=3",
            BoundRule::Quaternary => "(iii) l=4",
            BoundRule::General => "(iv) l not in {2,3,4}",
        }
    }
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Largest minimum distance a self-dual code of length `length` over GF(`order`) can have.
pub fn self_dual_bound(order: u32, length: usize) -> (usize, BoundRule) {
    let n = length;
    match order {
        2 if n % 24 == 22 => (4 * (n / 24) + 6, BoundRule::BinaryTwentyTwo),
        2 => (4 * (n / 24) + 4, BoundRule::BinaryGeneric),
        3 => (3 * (n / 12) + 3, BoundRule::Ternary),
        4 => (4 * (n / 12) + 4, BoundRule::Quaternary),
        _ => (n / 2 + 1, BoundRule::General),
    }
}
