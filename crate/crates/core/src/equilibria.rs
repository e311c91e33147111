//! Pure Nash equilibria, the relaxed Pareto-optimal positions (Nash
//! conditions of the transposed game), symmetric mixed equilibria, and a
//! brute-force standard Pareto check.

use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::payoff::{PayoffMatrix, Position, Strategy};
use crate::rational::{self, Rational};

/// A subset of the four positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PositionSet(u8);

impl PositionSet {
    pub const EMPTY: PositionSet = PositionSet(0);
    pub const ALL: PositionSet = PositionSet(0b1111);

    pub fn from_positions<I: IntoIterator<Item = Position>>(positions: I) -> Self {
        positions
            .into_iter()
            .fold(PositionSet::EMPTY, |set, p| set.with(p))
    }

    pub fn with(self, pos: Position) -> Self {
        PositionSet(self.0 | (1 << pos.index()))
    }

    pub fn contains(self, pos: Position) -> bool {
        self.0 & (1 << pos.index()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Position> {
        Position::ALL.into_iter().filter(move |p| self.contains(*p))
    }

    pub fn diagonal(self) -> PositionSet {
        PositionSet::from_positions(self.iter().filter(|p| p.is_diagonal()))
    }

    pub fn off_diagonal(self) -> PositionSet {
        PositionSet::from_positions(self.iter().filter(|p| !p.is_diagonal()))
    }
}

impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Symmetric profile: both players choose strategy 0 with probability `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedProfile {
    p: Rational,
}

impl MixedProfile {
    pub fn new(p: Rational) -> Result<Self> {
        if !rational::is_probability(&p) {
            return Err(Error::ProbabilityOutOfRange {
                value: rational::to_short_string(&p),
            });
        }
        Ok(MixedProfile { p })
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }
}

/// `(-1)^i (G_A + (-1)^j G_AB) >= 0` and `(-1)^j (G_A + (-1)^i G_AB) >= 0`.
///
/// Evaluated on the entries: the row player cannot gain by switching rows,
/// and the column player cannot gain by switching columns.
pub fn is_pure_ne(game: &PayoffMatrix, pos: Position) -> bool {
    let row_dev = Position::new(pos.row.other(), pos.col);
    let col_dev = Position::new(pos.row, pos.col.other());
    game.row_payoff(pos) >= game.row_payoff(row_dev)
        && game.col_payoff(pos) >= game.col_payoff(col_dev)
}

/// Same predicate written directly in `(G_A, G_AB)`; kept as a second route.
pub fn is_pure_ne_by_g(game: &PayoffMatrix, pos: Position) -> bool {
    let g = game.g_transform();
    let si = rational::int(pos.row.sign());
    let sj = rational::int(pos.col.sign());
    let first = &si * (&g.ga + &sj * &g.gab);
    let second = &sj * (&g.ga + &si * &g.gab);
    !first.is_negative() && !second.is_negative()
}

pub fn pure_nash_set(game: &PayoffMatrix) -> PositionSet {
    PositionSet::from_positions(Position::ALL.into_iter().filter(|p| is_pure_ne(game, *p)))
}

/// Positions where each player maximizes the *other* player's payoff.
pub fn relaxed_po_set(game: &PayoffMatrix) -> PositionSet {
    pure_nash_set(&game.transpose_game())
}

/// Symmetric mixed equilibrium in which each player is indifferent.
///
/// Only the stable interior point is reported: it requires `a < c` and
/// `d < b`, i.e. both off-diagonal positions are strict pure equilibria.
pub fn mixed_nash(game: &PayoffMatrix) -> Option<MixedProfile> {
    let a_minus_c = &game.a - &game.c;
    let d_minus_b = &game.d - &game.b;
    if !(a_minus_c.is_negative() && d_minus_b.is_negative()) {
        return None;
    }
    let p = &d_minus_b / (&a_minus_c + &d_minus_b);
    debug_assert!(p > Rational::zero() && p < Rational::one());
    Some(MixedProfile { p })
}

pub fn mixed_po(game: &PayoffMatrix) -> Option<MixedProfile> {
    mixed_nash(&game.transpose_game())
}

fn weights(p: &Rational) -> [Rational; 2] {
    [p.clone(), Rational::one() - p]
}

/// Bilinear expected payoffs `(row, column)` when the row player picks
/// strategy 0 with `p_row` and the column player with `p_col`.
pub fn expected_payoff(
    game: &PayoffMatrix,
    p_row: &Rational,
    p_col: &Rational,
) -> Result<(Rational, Rational)> {
    for p in [p_row, p_col] {
        if !rational::is_probability(p) {
            return Err(Error::ProbabilityOutOfRange {
                value: rational::to_short_string(p),
            });
        }
    }
    let x = weights(p_row);
    let y = weights(p_col);
    let mut row = Rational::zero();
    let mut col = Rational::zero();
    for pos in Position::ALL {
        let w = &x[pos.row.index()] * &y[pos.col.index()];
        row += &w * game.row_payoff(pos);
        col += &w * game.col_payoff(pos);
    }
    Ok((row, col))
}

/// Common payoff of a symmetric profile.
pub fn symmetric_payoff(game: &PayoffMatrix, profile: &MixedProfile) -> Rational {
    let (row, col) = expected_payoff(game, profile.p(), profile.p()).expect("valid profile");
    debug_assert_eq!(row, col);
    row
}

/// Outcome pair `(row payoff, column payoff)` at a position.
pub fn outcome(game: &PayoffMatrix, pos: Position) -> (&Rational, &Rational) {
    (game.row_payoff(pos), game.col_payoff(pos))
}

fn dominates(x: (&Rational, &Rational), y: (&Rational, &Rational)) -> bool {
    x.0 >= y.0 && x.1 >= y.1 && (x.0 > y.0 || x.1 > y.1)
}

/// Positions whose outcome pair no other position Pareto-dominates.
pub fn standard_pareto_set(game: &PayoffMatrix) -> PositionSet {
    PositionSet::from_positions(Position::ALL.into_iter().filter(|&pos| {
        let mine = outcome(game, pos);
        Position::ALL
            .into_iter()
            .filter(|other| *other != pos)
            .all(|other| !dominates(outcome(game, other), mine))
    }))
}

pub fn diagonal(s: Strategy) -> Position {
    Position::new(s, s)
}
