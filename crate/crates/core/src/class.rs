use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// One of the two indecomposable degree-0 classes.
///
/// `F` is the Tate class, `A` the complement of `F` in the motive of the
/// quadratic extension. They form the cyclic group of order 2 under tensor
/// product. `F` orders before `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ArtinClass {
    F,
    A,
}

impl ArtinClass {
    pub const ALL: [ArtinClass; 2] = [ArtinClass::F, ArtinClass::A];

    pub fn letter(self) -> char {
        match self {
            ArtinClass::F => 'F',
            ArtinClass::A => 'A',
        }
    }

    /// The other class.
    pub fn twisted(self) -> ArtinClass {
        match self {
            ArtinClass::F => ArtinClass::A,
            ArtinClass::A => ArtinClass::F,
        }
    }
}

impl Mul for ArtinClass {
    type Output = ArtinClass;

    fn mul(self, rhs: ArtinClass) -> ArtinClass {
        if self == rhs {
            ArtinClass::F
        } else {
            ArtinClass::A
        }
    }
}

impl fmt::Display for ArtinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for ArtinClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "F" => Ok(ArtinClass::F),
            "A" => Ok(ArtinClass::A),
            other => Err(Error::Parse(format!("unknown Artin class {other:?}"))),
        }
    }
}
