//! Exact 2x2 symmetric games and their invariant-free coordinates.
//!
//! A game is the row player's payoff table
//!
//! ```text
//!         col 0  col 1
//! row 0 [   a      b  ]
//! row 1 [   c      d  ]
//! ```
//!
//! and the column player's table is its transpose. The G transform maps
//! `(a, b, c, d)` through the symmetric Hadamard matrix scaled by 1/2, which
//! is orthogonal and its own inverse.

use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    Zero,
    One,
}

impl Strategy {
    pub const BOTH: [Strategy; 2] = [Strategy::Zero, Strategy::One];

    pub fn index(self) -> usize {
        match self {
            Strategy::Zero => 0,
            Strategy::One => 1,
        }
    }

    pub fn other(self) -> Strategy {
        match self {
            Strategy::Zero => Strategy::One,
            Strategy::One => Strategy::Zero,
        }
    }

    /// `(-1)^i`
    pub fn sign(self) -> i64 {
        match self {
            Strategy::Zero => 1,
            Strategy::One => -1,
        }
    }
}

/// A joint pure choice: `row` is the row player's strategy, `col` the column player's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub row: Strategy,
    pub col: Strategy,
}

impl Position {
    pub const ALL: [Position; 4] = [
        Position::new(Strategy::Zero, Strategy::Zero),
        Position::new(Strategy::Zero, Strategy::One),
        Position::new(Strategy::One, Strategy::Zero),
        Position::new(Strategy::One, Strategy::One),
    ];

    pub const fn new(row: Strategy, col: Strategy) -> Self {
        Position { row, col }
    }

    pub fn from_indices(i: usize, j: usize) -> Self {
        let s = |k| if k == 0 { Strategy::Zero } else { Strategy::One };
        Position::new(s(i), s(j))
    }

    /// Index 0..4 in row-major order.
    pub fn index(self) -> usize {
        2 * self.row.index() + self.col.index()
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }

    /// The same outcome seen with the players swapped.
    pub fn swapped(self) -> Position {
        Position::new(self.col, self.row)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row.index(), self.col.index())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PayoffMatrix {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl PayoffMatrix {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        PayoffMatrix { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        PayoffMatrix::new(
            rational::int(a),
            rational::int(b),
            rational::int(c),
            rational::int(d),
        )
    }

    pub fn from_entries(entries: [Rational; 4]) -> Self {
        let [a, b, c, d] = entries;
        PayoffMatrix::new(a, b, c, d)
    }

    /// The all-ones matrix `J`.
    pub fn ones() -> Self {
        PayoffMatrix::from_ints(1, 1, 1, 1)
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn to_entries(&self) -> [Rational; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    /// `P(i, j)`, the row player's payoff.
    pub fn entry(&self, pos: Position) -> &Rational {
        self.entries()[pos.index()]
    }

    pub fn row_payoff(&self, pos: Position) -> &Rational {
        self.entry(pos)
    }

    /// Column player's payoff at `(i, j)` is `P(j, i)`.
    pub fn col_payoff(&self, pos: Position) -> &Rational {
        self.entry(pos.swapped())
    }

    pub fn is_constant(&self) -> bool {
        self.a == self.b && self.b == self.c && self.c == self.d
    }

    /// True when the four entries are pairwise distinct.
    pub fn is_strict(&self) -> bool {
        let e = self.entries();
        (0..4).all(|i| (i + 1..4).all(|j| e[i] != e[j]))
    }

    pub fn min_entry(&self) -> Rational {
        self.entries().into_iter().min().cloned().expect("four entries")
    }

    pub fn sum(&self) -> Rational {
        &self.a + &self.b + &self.c + &self.d
    }

    pub fn g_transform(&self) -> GVector {
        let two = rational::int(2);
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        GVector {
            g0: (a + b + c + d) / &two,
            ga: (a + b - c - d) / &two,
            gb: (a - b + c - d) / &two,
            gab: (a - b - c + d) / &two,
        }
    }

    /// Subtracts the mean entry, leaving a matrix with `g0 = 0`.
    pub fn center(&self) -> PayoffMatrix {
        let mean = self.sum() / rational::int(4);
        self.shifted(&-mean)
    }

    pub fn shifted(&self, offset: &Rational) -> PayoffMatrix {
        PayoffMatrix::new(
            &self.a + offset,
            &self.b + offset,
            &self.c + offset,
            &self.d + offset,
        )
    }

    pub fn scaled(&self, factor: &Rational) -> PayoffMatrix {
        PayoffMatrix::new(
            &self.a * factor,
            &self.b * factor,
            &self.c * factor,
            &self.d * factor,
        )
    }

    /// `alpha * P + beta * J`.
    pub fn affine(&self, alpha: &Rational, beta: &Rational) -> PayoffMatrix {
        self.scaled(alpha).shifted(beta)
    }

    pub fn add(&self, other: &PayoffMatrix) -> PayoffMatrix {
        PayoffMatrix::new(
            &self.a + &other.a,
            &self.b + &other.b,
            &self.c + &other.c,
            &self.d + &other.d,
        )
    }

    /// `t * other + (1 - t) * self`.
    pub fn lerp(&self, other: &PayoffMatrix, t: &Rational) -> PayoffMatrix {
        let s = Rational::one() - t;
        self.scaled(&s).add(&other.scaled(t))
    }

    /// The game with the players' roles exchanged: swaps `b` and `c`.
    pub fn transpose_game(&self) -> PayoffMatrix {
        PayoffMatrix::new(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.d.clone(),
        )
    }

    /// Renames strategy 0 <-> 1 for both players: `(a, b, c, d) -> (d, c, b, a)`.
    pub fn relabel_strategies(&self) -> PayoffMatrix {
        PayoffMatrix::new(
            self.d.clone(),
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
        )
    }

    /// Unit direction of the centered game on the parameter sphere.
    pub fn normalize_sphere(&self) -> Result<Direction> {
        self.g_transform().direction()
    }

    /// Point on the max-abs unit cube, exact.
    pub fn normalize_cube(&self) -> Result<CubePoint> {
        self.g_transform().cube_point()
    }
}

impl fmt::Display for PayoffMatrix {
    /// Matrix text format `a,b;c,d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = rational::to_short_string;
        write!(
            f,
            "{},{};{},{}",
            s(&self.a),
            s(&self.b),
            s(&self.c),
            s(&self.d)
        )
    }
}

impl FromStr for PayoffMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let rows: Vec<&str> = text.trim().split(';').collect();
        if rows.len() != 2 {
            return Err(Error::parse(
                text,
                format!("expected 2 rows separated by ';', found {}", rows.len()),
            ));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(Error::parse(
                    row,
                    format!("expected 2 entries separated by ',', found {}", cells.len()),
                ));
            }
            for cell in cells {
                entries.push(parse_rational(cell)?);
            }
        }
        let entries: [Rational; 4] = entries.try_into().expect("two rows of two");
        Ok(PayoffMatrix::from_entries(entries))
    }
}

/// `(G_0, G_A, G_B, G_AB)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GVector {
    pub g0: Rational,
    pub ga: Rational,
    pub gb: Rational,
    pub gab: Rational,
}

impl GVector {
    pub fn new(g0: Rational, ga: Rational, gb: Rational, gab: Rational) -> Self {
        GVector { g0, ga, gb, gab }
    }

    pub fn from_ints(g0: i64, ga: i64, gb: i64, gab: i64) -> Self {
        GVector::new(
            rational::int(g0),
            rational::int(ga),
            rational::int(gb),
            rational::int(gab),
        )
    }

    pub fn inverse_g_transform(&self) -> PayoffMatrix {
        let two = rational::int(2);
        let (g0, ga, gb, gab) = (&self.g0, &self.ga, &self.gb, &self.gab);
        PayoffMatrix::new(
            (g0 + ga + gb + gab) / &two,
            (g0 + ga - gb - gab) / &two,
            (g0 - ga + gb - gab) / &two,
            (g0 - ga - gb + gab) / &two,
        )
    }

    /// Swaps `G_A` and `G_B`, the image of [`PayoffMatrix::transpose_game`].
    pub fn swap_ga_gb(&self) -> GVector {
        GVector::new(
            self.g0.clone(),
            self.gb.clone(),
            self.ga.clone(),
            self.gab.clone(),
        )
    }

    /// The three relevant coordinates `(G_A, G_B, G_AB)`.
    pub fn relevant(&self) -> [&Rational; 3] {
        [&self.ga, &self.gb, &self.gab]
    }

    pub fn is_zero_relevant(&self) -> bool {
        self.relevant().iter().all(|g| g.is_zero())
    }

    /// `G_A^2 + G_B^2 + G_AB^2`, exact.
    pub fn relevant_norm_squared(&self) -> Rational {
        self.relevant().iter().map(|g| *g * *g).sum()
    }

    pub fn direction(&self) -> Result<Direction> {
        if self.is_zero_relevant() {
            return Err(Error::TrivialGame);
        }
        let [ga, gb, gab] = self.relevant().map(rational::to_f64);
        let norm = (ga * ga + gb * gb + gab * gab).sqrt();
        Ok(Direction {
            ga: ga / norm,
            gb: gb / norm,
            gab: gab / norm,
        })
    }

    pub fn cube_point(&self) -> Result<CubePoint> {
        if self.is_zero_relevant() {
            return Err(Error::TrivialGame);
        }
        let scale = self
            .relevant()
            .into_iter()
            .map(|g| g.abs())
            .max()
            .expect("three coordinates");
        Ok(CubePoint {
            ga: &self.ga / &scale,
            gb: &self.gb / &scale,
            gab: &self.gab / &scale,
        })
    }
}

/// Unit vector `(G_A, G_B, G_AB)` on the parameter sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub ga: f64,
    pub gb: f64,
    pub gab: f64,
}

impl Direction {
    pub fn norm(&self) -> f64 {
        (self.ga * self.ga + self.gb * self.gb + self.gab * self.gab).sqrt()
    }
}

/// Point on the surface of the cube `max(|G_A|, |G_B|, |G_AB|) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubePoint {
    pub ga: Rational,
    pub gb: Rational,
    pub gab: Rational,
}

impl CubePoint {
    /// Validates the max-abs norm; returns `None` off the cube surface.
    pub fn new(ga: Rational, gb: Rational, gab: Rational) -> Option<Self> {
        let max = [&ga, &gb, &gab]
            .into_iter()
            .map(|g| g.abs())
            .max()
            .expect("three coordinates");
        max.is_one().then_some(CubePoint { ga, gb, gab })
    }

    pub fn from_ratios(ga: (i64, i64), gb: (i64, i64), gab: (i64, i64)) -> Option<Self> {
        CubePoint::new(
            rational::ratio(ga.0, ga.1),
            rational::ratio(gb.0, gb.1),
            rational::ratio(gab.0, gab.1),
        )
    }
}
