use num::{One, Zero};

use super::region::RegionId;
use super::unfold::{map_point, MapPoint};
use crate::error::{Error, Result};
use crate::payoff::PayoffMatrix;
use crate::rational::{self, Rational};
use crate::taxonomy::{classify, Classification};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleKind {
    Classified(Box<Classification>),
    /// Tied entries; the regions meeting at this point.
    Boundary(Vec<RegionId>),
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectorySample {
    pub t: Rational,
    pub game: PayoffMatrix,
    /// `None` only for the trivial game.
    pub map_point: Option<MapPoint>,
    pub kind: SampleKind,
}

impl TrajectorySample {
    pub fn classification(&self) -> Option<&Classification> {
        match &self.kind {
            SampleKind::Classified(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self.kind, SampleKind::Boundary(_))
    }
}

/// Samples `t * end + (1 - t) * start` at `n` equally spaced `t` in `[0, 1]`.
pub fn trajectory(
    start: &PayoffMatrix,
    end: &PayoffMatrix,
    n: usize,
) -> Result<Vec<TrajectorySample>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "trajectory needs at least 2 samples, got {n}"
        )));
    }
    let last = rational::int((n - 1) as i64);
    Ok((0..n)
        .map(|k| {
            let t = rational::int(k as i64) / &last;
            debug_assert!(t >= Rational::zero() && t <= Rational::one());
            let game = start.lerp(end, &t);
            let kind = match classify(&game) {
                Ok(c) => SampleKind::Classified(Box::new(c)),
                Err(Error::BoundaryGame { adjacent }) => SampleKind::Boundary(adjacent),
                Err(_) => SampleKind::Trivial,
            };
            TrajectorySample {
                map_point: map_point(&game).ok(),
                t,
                game,
                kind,
            }
        })
        .collect())
}
