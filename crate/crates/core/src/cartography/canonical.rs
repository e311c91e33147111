//! Canonical vertex matrices and the exact convex decomposition of a game
//! over the triangle of its region.
//!
//! The closed cell of an ordering `x1 >= x2 >= x3 >= x4` is, modulo the
//! all-ones matrix, the cone spanned by the indicator matrices of `{x1}`,
//! `{x1, x2}` and `{x1, x2, x3}`. Those are the three vertices of its
//! triangle: a corner with one high entry, a face center with two high
//! entries, and a corner with one low entry. Canonical matrices scale each
//! indicator so its entries sum to 6, giving `{0,6}`, `{0,3}` and `{0,2}`.

use std::fmt;

use num::{Signed, Zero};

use super::region::{adjacent_regions, region_of, ElementaryRegion, Entry, RegionId};
use crate::error::{Error, Result};
use crate::payoff::{GVector, PayoffMatrix};
use crate::rational::{self, Rational};

/// Entry sum shared by every canonical matrix.
pub const CANONICAL_SUM: i64 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// One entry above three equal ones; corner direction.
    HighCorner,
    /// Two entries above two; face-center (axis) direction.
    Axis,
    /// Three equal entries above one; corner direction.
    LowCorner,
}

impl VertexKind {
    fn top_count(self) -> usize {
        match self {
            VertexKind::HighCorner => 1,
            VertexKind::Axis => 2,
            VertexKind::LowCorner => 3,
        }
    }
}

/// Unit-cube direction with components in {-1, 0, 1}.
pub type VertexDirection = [i8; 3];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalMatrix {
    pub direction: VertexDirection,
    pub kind: VertexKind,
    pub matrix: PayoffMatrix,
}

impl CanonicalMatrix {
    /// Canonical matrix whose high entries are `top`.
    pub fn from_top_entries(top: &[Entry]) -> Self {
        let kind = match top.len() {
            1 => VertexKind::HighCorner,
            2 => VertexKind::Axis,
            3 => VertexKind::LowCorner,
            n => panic!("a vertex has 1 to 3 high entries, got {n}"),
        };
        let height = CANONICAL_SUM / top.len() as i64;
        let mut values = [0i64; 4];
        for e in top {
            values[e.index()] = height;
        }
        let matrix = PayoffMatrix::from_ints(values[0], values[1], values[2], values[3]);
        let direction = sign_direction(&matrix.g_transform());
        CanonicalMatrix {
            direction,
            kind,
            matrix,
        }
    }

    /// Canonical matrix of one of the 14 vertex directions.
    pub fn from_direction(direction: VertexDirection) -> Option<Self> {
        let nonzero = direction.iter().filter(|x| **x != 0).count();
        if !(nonzero == 1 || nonzero == 3) || direction.iter().any(|x| x.abs() > 1) {
            return None;
        }
        let [ga, gb, gab] = direction.map(|x| rational::int(x as i64));
        let raw = GVector::new(Rational::zero(), ga, gb, gab).inverse_g_transform();
        let min = raw.min_entry();
        let lifted = raw.shifted(&-min);
        let factor = rational::int(CANONICAL_SUM) / lifted.sum();
        let matrix = lifted.scaled(&factor);
        let kind = match (nonzero, matrix.entries().iter().filter(|e| e.is_zero()).count()) {
            (1, _) => VertexKind::Axis,
            (_, 3) => VertexKind::HighCorner,
            _ => VertexKind::LowCorner,
        };
        Some(CanonicalMatrix {
            direction,
            kind,
            matrix,
        })
    }

    /// All 14 vertices: 6 axis directions then 8 corners.
    pub fn all() -> Vec<CanonicalMatrix> {
        let mut out = Vec::with_capacity(14);
        for axis in 0..3 {
            for s in [1i8, -1] {
                let mut d = [0i8; 3];
                d[axis] = s;
                out.extend(CanonicalMatrix::from_direction(d));
            }
        }
        for x in [1i8, -1] {
            for y in [1i8, -1] {
                for z in [1i8, -1] {
                    out.extend(CanonicalMatrix::from_direction([x, y, z]));
                }
            }
        }
        out
    }

    pub fn is_axis(&self) -> bool {
        self.kind == VertexKind::Axis
    }
}

impl fmt::Display for CanonicalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

fn sign_direction(g: &GVector) -> VertexDirection {
    g.relevant().map(|x| {
        if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            0
        }
    })
}

/// Vertex triple of a region's spherical triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionTriangle {
    pub high_corner: CanonicalMatrix,
    pub low_corner: CanonicalMatrix,
    pub axis: CanonicalMatrix,
}

impl RegionTriangle {
    /// Vertices in the order high corner, low corner, axis.
    pub fn vertices(&self) -> [&CanonicalMatrix; 3] {
        [&self.high_corner, &self.low_corner, &self.axis]
    }
}

pub fn region_vertices(region: &ElementaryRegion) -> RegionTriangle {
    let ordering = region.ordering();
    let vertex = |kind: VertexKind| CanonicalMatrix::from_top_entries(&ordering[..kind.top_count()]);
    RegionTriangle {
        high_corner: vertex(VertexKind::HighCorner),
        low_corner: vertex(VertexKind::LowCorner),
        axis: vertex(VertexKind::Axis),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub weight: Rational,
    pub vertex: CanonicalMatrix,
}

/// `game = trivial_offset * J + scale * sum(weight_k * vertex_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub region: ElementaryRegion,
    /// Every region whose closure holds the game; more than one on a boundary.
    pub adjacent: Vec<RegionId>,
    pub trivial_offset: Rational,
    pub scale: Rational,
    /// High corner, low corner, axis.
    pub terms: [DecompositionTerm; 3],
}

impl Decomposition {
    pub fn on_boundary(&self) -> bool {
        self.adjacent.len() > 1
    }

    pub fn recompose(&self) -> PayoffMatrix {
        let zero = PayoffMatrix::from_ints(0, 0, 0, 0);
        self.terms
            .iter()
            .fold(zero, |acc, t| acc.add(&t.vertex.matrix.scaled(&t.weight)))
            .scaled(&self.scale)
            .shifted(&self.trivial_offset)
    }
}

/// Exact decomposition over the region's closed triangle.
///
/// Tied games sit on a shared edge of several triangles; the lowest region
/// id is used and the weight of the vertex off that edge is zero.
pub fn decompose(game: &PayoffMatrix) -> Result<Decomposition> {
    let adjacent = adjacent_regions(game);
    let region = match region_of(game) {
        Ok(r) => r,
        Err(Error::BoundaryGame { .. }) => ElementaryRegion::from_id(adjacent[0]),
        Err(e) => return Err(e),
    };
    let triangle = region_vertices(&region);
    let offset = game.min_entry();
    let remainder = game.shifted(&-offset.clone());

    let target = remainder.g_transform();
    let columns = triangle.vertices().map(|v| v.matrix.g_transform());
    let coefficients = solve_3x3(
        columns.each_ref().map(|g| g.relevant().map(Clone::clone)),
        target.relevant().map(Clone::clone),
    )
    .expect("vertex directions of a triangle are independent");
    let scale: Rational = coefficients.iter().sum();
    let weights = coefficients.map(|c| &c / &scale);

    let [hc, lc, ax] = [triangle.high_corner, triangle.low_corner, triangle.axis];
    let [w0, w1, w2] = weights;
    let decomposition = Decomposition {
        region,
        adjacent,
        trivial_offset: offset,
        scale,
        terms: [
            DecompositionTerm {
                weight: w0,
                vertex: hc,
            },
            DecompositionTerm {
                weight: w1,
                vertex: lc,
            },
            DecompositionTerm {
                weight: w2,
                vertex: ax,
            },
        ],
    };
    debug_assert_eq!(&decomposition.recompose(), game);
    Ok(decomposition)
}

/// Solves `sum_k x_k * columns[k] = target` by Cramer's rule.
fn solve_3x3(columns: [[Rational; 3]; 3], target: [Rational; 3]) -> Option<[Rational; 3]> {
    let det = |cols: &[[Rational; 3]; 3]| -> Rational {
        let m = |r: usize, c: usize| &cols[c][r];
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    let base = det(&columns);
    if base.is_zero() {
        return None;
    }
    Some(std::array::from_fn(|k| {
        let mut replaced = columns.clone();
        replaced[k] = target.clone();
        det(&replaced) / &base
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(a: i64, b: i64, c: i64, d: i64) -> PayoffMatrix {
        PayoffMatrix::from_ints(a, b, c, d)
    }

    #[test]
    fn fourteen_vertices_with_expected_entries() {
        let all = CanonicalMatrix::all();
        assert_eq!(all.len(), 14);
        for v in &all {
            let entries: Vec<i64> = v
                .matrix
                .entries()
                .iter()
                .map(|e| {
                    assert!(e.is_integer());
                    e.to_integer().try_into().unwrap()
                })
                .collect();
            assert_eq!(entries.iter().sum::<i64>(), CANONICAL_SUM);
            assert_eq!(*entries.iter().min().unwrap(), 0);
            let mut sorted = entries.clone();
            sorted.sort();
            match v.kind {
                VertexKind::Axis => assert_eq!(sorted, [0, 0, 3, 3]),
                VertexKind::HighCorner => assert_eq!(sorted, [0, 0, 0, 6]),
                VertexKind::LowCorner => assert_eq!(sorted, [0, 2, 2, 2]),
            }
            // g_transform is a positive multiple of the direction
            let g = v.matrix.g_transform();
            let unit = g.cube_point().unwrap();
            assert_eq!(
                [unit.ga, unit.gb, unit.gab],
                v.direction.map(|x| int(x as i64))
            );
        }
    }

    #[test]
    fn printed_vertices_match() {
        assert_eq!(
            CanonicalMatrix::from_direction([1, 0, 0]).unwrap().matrix,
            m(3, 3, 0, 0)
        );
        assert_eq!(
            CanonicalMatrix::from_direction([1, -1, 1]).unwrap().matrix,
            m(2, 2, 0, 2)
        );
        assert_eq!(
            CanonicalMatrix::from_direction([1, -1, -1]).unwrap().matrix,
            m(0, 6, 0, 0)
        );
        assert!(CanonicalMatrix::from_direction([1, 1, 0]).is_none());
        assert!(CanonicalMatrix::from_direction([0, 0, 0]).is_none());
    }

    #[test]
    fn top_entry_and_direction_routes_agree() {
        for r in ElementaryRegion::all() {
            for v in region_vertices(&r).vertices() {
                let again = CanonicalMatrix::from_direction(v.direction).unwrap();
                assert_eq!(&again, v);
            }
        }
    }

    #[test]
    fn healthy_cholesterol_vertices() {
        let r = region_of(&m(9, 15, 5, 7)).unwrap();
        let t = region_vertices(&r);
        assert_eq!(t.high_corner.matrix, m(0, 6, 0, 0));
        assert_eq!(t.low_corner.matrix, m(2, 2, 0, 2));
        assert_eq!(t.axis.matrix, m(3, 3, 0, 0));
    }

    #[test]
    fn unhealthy_cholesterol_vertices() {
        let r = region_of(&m(-9, -3, -1, 1)).unwrap();
        let t = region_vertices(&r);
        assert_eq!(t.high_corner.matrix, m(0, 0, 0, 6));
        assert_eq!(t.axis.matrix, m(0, 0, 3, 3));
        assert_eq!(t.low_corner.matrix, m(0, 2, 2, 2));
    }

    #[test]
    fn triangle_shape() {
        for r in ElementaryRegion::all() {
            let t = region_vertices(&r);
            assert!(t.axis.is_axis());
            assert!(!t.high_corner.is_axis() && !t.low_corner.is_axis());
            let differing = (0..3)
                .filter(|&k| t.high_corner.direction[k] != t.low_corner.direction[k])
                .count();
            assert_eq!(differing, 1, "{r}");
            // shared zero entry: the smallest entry of the ordering
            let bottom = r.ordering()[3];
            for v in t.vertices() {
                assert!(v.matrix.entries()[bottom.index()].is_zero());
            }
        }
    }

    #[test]
    fn decompose_healthy() {
        let d = decompose(&m(9, 15, 5, 7)).unwrap();
        assert_eq!(d.trivial_offset, int(5));
        assert_eq!(d.scale, ratio(16, 6));
        let w: Vec<_> = d.terms.iter().map(|t| t.weight.clone()).collect();
        assert_eq!(w, [ratio(3, 8), ratio(3, 8), ratio(2, 8)]);
        assert_eq!(d.recompose(), m(9, 15, 5, 7));
        assert!(!d.on_boundary());
    }

    #[test]
    fn decompose_unhealthy() {
        let p = m(-9, -3, -1, 1);
        let d = decompose(&p).unwrap();
        assert_eq!(d.trivial_offset, int(-9));
        assert_eq!(d.recompose(), p);
        // remainder [[0,6],[8,10]] sums to 24, so the scale is 24/6
        assert_eq!(d.scale, int(4));
        let w: Vec<_> = d.terms.iter().map(|t| t.weight.clone()).collect();
        assert_eq!(w, [ratio(2, 24), ratio(18, 24), ratio(4, 24)]);
    }

    #[test]
    fn decompose_vertex_is_itself() {
        let d = decompose(&m(3, 3, 0, 0)).unwrap();
        assert_eq!(d.trivial_offset, int(0));
        assert_eq!(d.scale, int(1));
        let live: Vec<_> = d.terms.iter().filter(|t| !t.weight.is_zero()).collect();
        assert_eq!(live.len(), 1);
        assert_eq!(live[0].weight, int(1));
        assert_eq!(live[0].vertex.matrix, m(3, 3, 0, 0));
        assert!(d.on_boundary());
    }

    #[test]
    fn decompose_trivial_fails() {
        assert_eq!(decompose(&m(4, 4, 4, 4)), Err(Error::TrivialGame));
    }
}
