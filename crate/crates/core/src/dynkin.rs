//! Irreducible Dynkin types and their admissible ranks.

use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, Serializer};

use crate::error::Error;

/// The seven Cartan-Killing families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(&self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::BadTypeSyntax { input: s.into() }),
        }
    }
}

/// An irreducible Dynkin diagram: a family plus an admissible rank.
///
/// The ordering derived here (family first, then rank) is the stable total
/// order used everywhere table output must be deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    family: Family,
    rank: u32,
}

impl DynkinType {
    /// Validate the (family, rank) pair. Admissible ranks:
    /// A_r r>=1, B_r r>=2, C_r r>=2, D_r r>=4, E_6/E_7/E_8, F_4, G_2.
    pub fn new(family: Family, rank: u32) -> Result<Self, Error> {
        let reject = |reason: &str| {
            Err(Error::InadmissibleType {
                family,
                rank,
                reason: reason.into(),
            })
        };
        match family {
            Family::A if rank >= 1 => {}
            Family::A => return reject("A_r requires r >= 1"),
            Family::B if rank >= 2 => {}
            Family::B => return reject("B_r requires r >= 2"),
            Family::C if rank >= 2 => {}
            Family::C => return reject("C_r requires r >= 2"),
            Family::D if rank >= 4 => {}
            Family::D => {
                return reject("D_r requires r >= 4 (D_3 is A_3, smaller ranks degenerate)")
            }
            Family::E if (6..=8).contains(&rank) => {}
            Family::E => return reject("E_r exists only for r in {6, 7, 8}"),
            Family::F if rank == 4 => {}
            Family::F => return reject("F_r exists only for r = 4"),
            Family::G if rank == 2 => {}
            Family::G => return reject("G_r exists only for r = 2"),
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// B_2 and C_2 name the same group; `C_2` is the canonical spelling
    /// used in enumerations so that isomorphic rows never appear twice.
    pub fn is_canonical(&self) -> bool {
        !(self.family == Family::B && self.rank == 2)
    }

    /// All admissible types of rank at most `rank_cap`, B_2 excluded in
    /// favor of its isomorphic alias C_2, in the stable type order.
    pub fn canonical_types(rank_cap: u32) -> Vec<DynkinType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=rank_cap {
                if let Ok(d) = DynkinType::new(family, rank) {
                    if d.is_canonical() {
                        out.push(d);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Parses the command-line syntax `A_7`, `D_43`, `G_2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadTypeSyntax { input: s.into() };
        let (fam, rank) = s.split_once('_').ok_or_else(bad)?;
        let family: Family = fam.parse().map_err(|_| bad())?;
        let rank: u32 = rank.parse().map_err(|_| bad())?;
        DynkinType::new(family, rank)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
