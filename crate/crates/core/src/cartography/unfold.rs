//! Planar development of the parameter cube.
//!
//! Cross layout: the `G_AB = +1` face is the central square `|u|, |v| <= 1`,
//! the four side faces are the arms, and the `G_AB = -1` face is cut along
//! its diagonals into four triangles glued to the arm tips. The silhouette
//! spans `u, v` in `[-4, 4]`.

use std::fmt;

use num::{One, Signed};

use crate::error::Result;
use crate::payoff::{CubePoint, PayoffMatrix};
use crate::rational::{self, Rational};

/// Arm of the cross a `G_AB = -1` triangle is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tip {
    GaPlus,
    GaMinus,
    GbPlus,
    GbMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Face {
    GabPlus,
    GaPlus,
    GaMinus,
    GbPlus,
    GbMinus,
    GabMinus(Tip),
}

impl Face {
    pub const ALL: [Face; 9] = [
        Face::GabPlus,
        Face::GaPlus,
        Face::GaMinus,
        Face::GbPlus,
        Face::GbMinus,
        Face::GabMinus(Tip::GaPlus),
        Face::GabMinus(Tip::GaMinus),
        Face::GabMinus(Tip::GbPlus),
        Face::GabMinus(Tip::GbMinus),
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Face::GabPlus => "gab+",
            Face::GaPlus => "ga+",
            Face::GaMinus => "ga-",
            Face::GbPlus => "gb+",
            Face::GbMinus => "gb-",
            Face::GabMinus(Tip::GaPlus) => "gab-/ga+",
            Face::GabMinus(Tip::GaMinus) => "gab-/ga-",
            Face::GabMinus(Tip::GbPlus) => "gab-/gb+",
            Face::GabMinus(Tip::GbMinus) => "gab-/gb-",
        }
    }

    /// Whether the cube point lies on (the closure of) this face piece.
    pub fn contains(self, cp: &CubePoint) -> bool {
        let one = Rational::one();
        let minus = -Rational::one();
        match self {
            Face::GabPlus => cp.gab == one,
            Face::GaPlus => cp.ga == one,
            Face::GaMinus => cp.ga == minus,
            Face::GbPlus => cp.gb == one,
            Face::GbMinus => cp.gb == minus,
            Face::GabMinus(tip) => cp.gab == minus && tip_contains(tip, cp),
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn tip_contains(tip: Tip, cp: &CubePoint) -> bool {
    match tip {
        Tip::GaPlus => cp.ga >= cp.gb.abs(),
        Tip::GaMinus => -&cp.ga >= cp.gb.abs(),
        Tip::GbPlus => cp.gb >= cp.ga.abs(),
        Tip::GbMinus => -&cp.gb >= cp.ga.abs(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MapPoint {
    pub u: Rational,
    pub v: Rational,
    pub face: Face,
}

impl MapPoint {
    pub fn to_f64(&self) -> (f64, f64) {
        (rational::to_f64(&self.u), rational::to_f64(&self.v))
    }
}

/// Face selection for points shared by several faces: `G_AB` faces first,
/// then `G_A`, then `G_B`. Diagonals of the `G_AB = -1` face go to the
/// first matching tip in the order `G_A+`, `G_A-`, `G_B+`, `G_B-`.
pub fn face_of(cp: &CubePoint) -> Face {
    let one = Rational::one();
    if cp.gab == one {
        Face::GabPlus
    } else if cp.gab == -one.clone() {
        let tip = [Tip::GaPlus, Tip::GaMinus, Tip::GbPlus, Tip::GbMinus]
            .into_iter()
            .find(|t| tip_contains(*t, cp))
            .expect("the four diagonal triangles cover the face");
        Face::GabMinus(tip)
    } else if cp.ga == one {
        Face::GaPlus
    } else if cp.ga == -one.clone() {
        Face::GaMinus
    } else if cp.gb == one {
        Face::GbPlus
    } else {
        debug_assert!(cp.gb == -one);
        Face::GbMinus
    }
}

/// Map coordinates of `cp` developed on a given face; `None` when the
/// point is not on that face.
pub fn unfold_on(cp: &CubePoint, face: Face) -> Option<MapPoint> {
    if !face.contains(cp) {
        return None;
    }
    let two = rational::int(2);
    let four = rational::int(4);
    let (ga, gb, gab) = (&cp.ga, &cp.gb, &cp.gab);
    let (u, v) = match face {
        Face::GabPlus => (ga.clone(), gb.clone()),
        Face::GaPlus => (&two - gab, gb.clone()),
        Face::GaMinus => (-&two + gab, gb.clone()),
        Face::GbPlus => (ga.clone(), &two - gab),
        Face::GbMinus => (ga.clone(), -&two + gab),
        Face::GabMinus(Tip::GaPlus) => (&four - ga, gb.clone()),
        Face::GabMinus(Tip::GaMinus) => (-&four - ga, gb.clone()),
        Face::GabMinus(Tip::GbPlus) => (ga.clone(), &four - gb),
        Face::GabMinus(Tip::GbMinus) => (ga.clone(), -&four - gb),
    };
    Some(MapPoint { u, v, face })
}

pub fn unfold(cp: &CubePoint) -> MapPoint {
    unfold_on(cp, face_of(cp)).expect("face_of returns a containing face")
}

pub fn map_point(game: &PayoffMatrix) -> Result<MapPoint> {
    Ok(unfold(&game.normalize_cube()?))
}
