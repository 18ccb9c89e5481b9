//! Affine modes `g_n`, with the index stored doubled so the Ramond sector's
//! half-integer moding stays in integer arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::finite::{AlgebraKind, Gen, Sector};

/// A mode `g_{idx2/2}`.
///
/// `idx2` is twice the mode index. It is even everywhere except for the odd
/// generators in the Ramond sector, which carry odd `idx2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mode {
    pub gen: Gen,
    pub idx2: i64,
}

impl Mode {
    pub fn new(gen: Gen, idx2: i64) -> Self {
        Mode { gen, idx2 }
    }

    /// The mode index as an exact rational.
    pub fn index(&self) -> Rational {
        Rational::new(self.idx2, 2)
    }

    pub fn is_valid(&self, kind: AlgebraKind, sector: Sector) -> bool {
        if !self.gen.valid_for(kind) {
            return false;
        }
        let odd_index = self.idx2.rem_euclid(2) == 1;
        match (sector, self.gen.is_odd()) {
            (Sector::R, true) => odd_index,
            _ => !odd_index,
        }
    }

    pub fn check(&self, kind: AlgebraKind, sector: Sector) -> Result<()> {
        if self.is_valid(kind, sector) {
            Ok(())
        } else {
            Err(Error::InvalidMode {
                kind: kind.to_string(),
                sector: sector.to_string(),
                mode: self.to_string(),
            })
        }
    }
}

impl PartialOrd for Mode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mode {
    /// Total PBW order: primary key `idx2` ascending, ties broken by the
    /// fixed generator order `f < y < h < x < e`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.idx2
            .cmp(&other.idx2)
            .then(self.gen.order_key().cmp(&other.gen.order_key()))
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.idx2 % 2 == 0 {
            write!(f, "{}({})", self.gen, self.idx2 / 2)
        } else {
            write!(f, "{}({}/2)", self.gen, self.idx2)
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        let err = || Error::Parse(format!("invalid mode `{s}`"));
        let open = s.find('(').ok_or_else(err)?;
        if !s.ends_with(')') {
            return Err(err());
        }
        let gen: Gen = s[..open].parse()?;
        let idx: Rational = s[open + 1..s.len() - 1].parse()?;
        let doubled = &idx * &Rational::int(2);
        let idx2 = doubled.to_i64().ok_or_else(err)?;
        Ok(Mode::new(gen, idx2))
    }
}
