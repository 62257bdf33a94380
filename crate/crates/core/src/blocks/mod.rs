//! Color sets, admissible triples and conformal-block dimensions.
//!
//! Odd levels use the even colors `{0, 2, …, p-3}` with `a + b + c ≤ 2p - 4`;
//! even levels use all of `{0, 1, …, (p-4)/2}` with `a + b + c ≤ p - 4`.
//! Both also require the triangle inequality and an even sum.

mod count;
mod graph;

pub use count::{
    admissible_colorings, block_dimension, block_dimension_exhaustive, cut_identity_check,
};
pub use graph::ColoredGraph;

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Odd,
    Even,
}

/// A TQFT level `p ≥ 5` together with its color set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Level {
    p: u32,
}

impl Level {
    pub const MIN: u32 = 5;

    pub fn new(p: u32) -> Result<Self> {
        if p < Self::MIN {
            return Err(Error::InvalidLevel {
                p: p as u64,
                reason: "levels below 5 have no usable color set",
            });
        }
        Ok(Level { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn parity(&self) -> Parity {
        if self.p % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Largest color: `p - 3` for odd `p`, `(p - 4) / 2` for even `p`.
    pub fn max_color(&self) -> u32 {
        match self.parity() {
            Parity::Odd => self.p - 3,
            Parity::Even => (self.p - 4) / 2,
        }
    }

    pub fn colors(&self) -> Vec<u32> {
        match self.parity() {
            Parity::Odd => (0..=self.max_color()).step_by(2).collect(),
            Parity::Even => (0..=self.max_color()).collect(),
        }
    }

    pub fn contains(&self, color: u32) -> bool {
        color <= self.max_color() && (self.parity() == Parity::Even || color.is_multiple_of(2))
    }

    /// Upper bound on `a + b + c` at a vertex.
    pub fn sum_bound(&self) -> u32 {
        match self.parity() {
            Parity::Odd => 2 * self.p - 4,
            Parity::Even => self.p - 4,
        }
    }

    pub(crate) fn admits(&self, a: u32, b: u32, c: u32) -> bool {
        let sum = a + b + c;
        sum.is_multiple_of(2) && sum <= self.sum_bound() && a <= b + c && b <= a + c && c <= a + b
    }

    fn check(&self, color: u32) -> Result<()> {
        if self.contains(color) {
            Ok(())
        } else {
            Err(Error::InvalidColor { color, p: self.p })
        }
    }
}

impl Serialize for Level {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Level", 3)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("parity", &self.parity())?;
        s.serialize_field("colors", &self.colors())?;
        s.end()
    }
}

pub fn is_admissible(a: u32, b: u32, c: u32, level: Level) -> Result<bool> {
    for x in [a, b, c] {
        level.check(x)?;
    }
    Ok(level.admits(a, b, c))
}

/// Loop colors of admissible colorings of the tadpole whose tail carries `i`,
/// in increasing order.
pub fn tadpole_basis(i: u32, level: Level) -> Result<Vec<u32>> {
    level.check(i)?;
    Ok(level
        .colors()
        .into_iter()
        .filter(|&a| level.admits(a, a, i))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(p: u32) -> Level {
        Level::new(p).unwrap()
    }

    #[test]
    fn color_sets() {
        assert_eq!(lv(7).colors(), vec![0, 2, 4]);
        assert_eq!(lv(9).colors(), vec![0, 2, 4, 6]);
        assert_eq!(lv(16).colors(), vec![0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(lv(6).colors(), vec![0, 1]);
        assert!(Level::new(4).is_err());
    }

    #[test]
    fn admissibility_examples() {
        assert_eq!(is_admissible(0, 0, 0, lv(7)), Ok(true));
        assert_eq!(is_admissible(2, 2, 2, lv(7)), Ok(true));
        // 6 > 2 + 2 breaks the triangle inequality.
        assert_eq!(is_admissible(2, 2, 6, lv(16)), Ok(false));
        assert_eq!(is_admissible(6, 6, 2, lv(16)), Ok(false));
        assert_eq!(is_admissible(5, 5, 2, lv(16)), Ok(true));
        assert!(matches!(
            is_admissible(1, 1, 0, lv(7)),
            Err(Error::InvalidColor { color: 1, p: 7 })
        ));
    }

    #[test]
    fn tadpole_examples() {
        assert_eq!(tadpole_basis(6, lv(11)), Ok(vec![4, 6]));
        assert_eq!(tadpole_basis(4, lv(9)), Ok(vec![2, 4]));
        assert_eq!(tadpole_basis(0, lv(7)), Ok(vec![0, 2, 4]));
        assert_eq!(tadpole_basis(0, lv(5)), Ok(vec![0, 2]));
        assert_eq!(tadpole_basis(2, lv(16)), Ok(vec![1, 2, 3, 4, 5]));
        assert_eq!(tadpole_basis(4, lv(20)), Ok(vec![2, 3, 4, 5, 6]));
        assert!(tadpole_basis(3, lv(9)).is_err());
    }

    #[test]
    fn odd_tadpole_family() {
        for p in (7..=99).step_by(2) {
            let basis = tadpole_basis(p - 5, lv(p)).unwrap();
            let k = (p - 1) / 4;
            let expected = if p % 4 == 1 {
                vec![2 * k - 2, 2 * k]
            } else {
                vec![2 * k, 2 * k + 2]
            };
            assert_eq!(basis, expected, "p = {p}");
        }
    }

    #[test]
    fn even_tadpole_family() {
        for k in 4..=50 {
            let basis = tadpole_basis(2 * k - 6, lv(4 * k)).unwrap();
            assert_eq!(basis, (k - 3..=k + 1).collect::<Vec<_>>(), "k = {k}");
        }
    }
}
