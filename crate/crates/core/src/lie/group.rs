use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The four simple groups handled by the crate, in Bourbaki numbering with
/// node 1 short for C2 and G2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    A1,
    A2,
    C2,
    G2,
}

impl GroupId {
    pub const ALL: [GroupId; 4] = [GroupId::A1, GroupId::A2, GroupId::C2, GroupId::G2];

    pub fn rank(self) -> usize {
        match self {
            GroupId::A1 => 1,
            _ => 2,
        }
    }

    pub fn dual_coxeter(self) -> i64 {
        match self {
            GroupId::A1 => 2,
            GroupId::A2 | GroupId::C2 => 3,
            GroupId::G2 => 4,
        }
    }

    /// Colabels a_j^vee, i.e. the coefficients of the level functional.
    pub fn colabels(self) -> &'static [i64] {
        match self {
            GroupId::A1 => &[1],
            GroupId::A2 | GroupId::C2 => &[1, 1],
            GroupId::G2 => &[1, 2],
        }
    }

    /// Cartan matrix `A[i][j] = <alpha_i, alpha_j^vee>`; row i is alpha_i in
    /// Dynkin labels.
    pub fn cartan(self) -> [[i64; 2]; 2] {
        match self {
            GroupId::A1 => [[2, 0], [0, 0]],
            GroupId::A2 => [[2, -1], [-1, 2]],
            GroupId::C2 => [[2, -1], [-2, 2]],
            GroupId::G2 => [[2, -1], [-3, 2]],
        }
    }

    /// Highest root in Dynkin labels.
    pub fn highest_root(self) -> Weight {
        match self {
            GroupId::A1 => Weight::new(&[2]),
            GroupId::A2 => Weight::new(&[1, 1]),
            GroupId::C2 => Weight::new(&[2, 0]),
            GroupId::G2 => Weight::new(&[0, 1]),
        }
    }

    /// Order of the centre of the simply connected group.
    pub fn center_order(self) -> i64 {
        match self {
            GroupId::A1 | GroupId::C2 => 2,
            GroupId::A2 => 3,
            GroupId::G2 => 1,
        }
    }

    /// Centre character of a weight, in `0..center_order`.
    pub fn center_grade(self, w: &Weight) -> i64 {
        match self {
            GroupId::A1 => w[0].rem_euclid(2),
            GroupId::A2 => (w[0] - w[1]).rem_euclid(3),
            GroupId::C2 => w[0].rem_euclid(2),
            GroupId::G2 => 0,
        }
    }

    pub fn fundamental(self, j: usize) -> Weight {
        let mut c = [0i64; 2];
        c[j] = 1;
        Weight::from_parts(c, self.rank())
    }

    pub fn fundamentals(self) -> Vec<Weight> {
        (0..self.rank()).map(|j| self.fundamental(j)).collect()
    }

    pub fn zero(self) -> Weight {
        Weight::from_parts([0, 0], self.rank())
    }

    pub fn rho(self) -> Weight {
        Weight::from_parts([1, if self.rank() == 2 { 1 } else { 0 }], self.rank())
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupId::A1 => "su2",
            GroupId::A2 => "su3",
            GroupId::C2 => "sp4",
            GroupId::G2 => "g2",
        }
    }

    pub fn check_rank(self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                group: self,
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupId::A1 => "A1",
            GroupId::A2 => "A2",
            GroupId::C2 => "C2",
            GroupId::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['(', ')', '_', '-'], "").as_str() {
            "a1" | "su2" => Ok(GroupId::A1),
            "a2" | "su3" => Ok(GroupId::A2),
            "c2" | "sp4" | "b2" | "so5" => Ok(GroupId::C2),
            "g2" => Ok(GroupId::G2),
            other => Err(Error::Parse(format!("unknown group '{other}'"))),
        }
    }
}

/// Integer vector of Dynkin labels (rank 1 or 2). Entries may be negative
/// for intermediate, non-dominant weights.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: [i64; 2],
    rank: usize,
}

impl Weight {
    pub fn new(labels: &[i64]) -> Self {
        assert!(
            (1..=2).contains(&labels.len()),
            "weights have one or two labels"
        );
        let mut coords = [0; 2];
        coords[..labels.len()].copy_from_slice(labels);
        Weight {
            coords,
            rank: labels.len(),
        }
    }

    pub fn from_parts(coords: [i64; 2], rank: usize) -> Self {
        debug_assert!(rank == 2 || coords[1] == 0);
        Weight { coords, rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[i64] {
        &self.coords[..self.rank]
    }

    pub fn coords(&self) -> [i64; 2] {
        self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.labels().iter().all(|&c| c >= 0)
    }

    /// Sum of the labels (the level for A1, A2 and C2).
    pub fn size(&self) -> i64 {
        self.labels().iter().sum()
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            coords: [self.coords[0] * c, self.coords[1] * c],
            rank: self.rank,
        }
    }

    pub fn swapped(&self) -> Weight {
        if self.rank == 1 {
            *self
        } else {
            Weight::new(&[self.coords[1], self.coords[0]])
        }
    }

    /// Key for the ordering used to list simple objects: compare the last
    /// label first.
    pub fn colex_key(&self) -> [i64; 2] {
        [self.coords[1], self.coords[0]]
    }
}

impl std::ops::Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.labels()[i]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        debug_assert_eq!(self.rank, o.rank);
        Weight {
            coords: [self.coords[0] + o.coords[0], self.coords[1] + o.coords[1]],
            rank: self.rank,
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        debug_assert_eq!(self.rank, o.rank);
        Weight {
            coords: [self.coords[0] - o.coords[0], self.coords[1] - o.coords[1]],
            rank: self.rank,
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            1 => write!(f, "({})", self.coords[0]),
            _ => write!(f, "({},{})", self.coords[0], self.coords[1]),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `2,0`, `(2,0)` or `2 0`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let labels: std::result::Result<Vec<i64>, _> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<i64>())
            .collect();
        let labels = labels.map_err(|e| Error::Parse(format!("weight '{s}': {e}")))?;
        if !(1..=2).contains(&labels.len()) {
            return Err(Error::Parse(format!("weight '{s}' needs one or two labels")));
        }
        Ok(Weight::new(&labels))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        if !(1..=2).contains(&v.len()) {
            return Err(serde::de::Error::custom("weights have one or two labels"));
        }
        Ok(Weight::new(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w: Weight = "2,0".parse().unwrap();
        assert_eq!(w, Weight::new(&[2, 0]));
        assert_eq!(w.to_string(), "(2,0)");
        assert_eq!("(3)".parse::<Weight>().unwrap(), Weight::new(&[3]));
        assert!("1,2,3".parse::<Weight>().is_err());
    }

    #[test]
    fn group_names() {
        assert_eq!("sp4".parse::<GroupId>().unwrap(), GroupId::C2);
        assert_eq!("SU(3)".parse::<GroupId>().unwrap(), GroupId::A2);
        assert!("e8".parse::<GroupId>().is_err());
    }

    #[test]
    fn structural_constants() {
        assert_eq!(GroupId::G2.dual_coxeter(), 4);
        assert_eq!(GroupId::G2.colabels(), &[1, 2]);
        assert_eq!(GroupId::A1.rank(), 1);
    }
}
