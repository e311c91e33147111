//! Serializable report types. Rationals are emitted as exact `"p/q"`
//! strings with an advisory decimal next to them.

use serde::Serialize;
use symgame::cartography::{
    adjacent_regions, decompose, map_point, CanonicalMatrix, Decomposition, ElementaryRegion,
    MapPoint, MeasureEstimate, RegionId, VertexKind,
};
use symgame::equilibria::{
    mixed_nash, mixed_po, pure_nash_set, relaxed_po_set, standard_pareto_set, symmetric_payoff,
    MixedProfile, PositionSet,
};
use symgame::rational::{self, to_fraction_string};
use symgame::taxonomy::{classify, ClassId, Classification, GameClassRecord};
use symgame::{CubePoint, Error, GVector, PayoffMatrix, Rational};

pub const REPORT_SCHEMA: &str = "report.v1";
pub const DECOMPOSITION_SCHEMA: &str = "decomposition.v1";
pub const FRACTIONS_SCHEMA: &str = "fractions.v1";

#[derive(Debug, Serialize)]
pub struct Num {
    pub exact: String,
    pub approx: f64,
}

impl From<&Rational> for Num {
    fn from(value: &Rational) -> Self {
        Num {
            exact: to_fraction_string(value),
            approx: rational::to_f64(value),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MatrixJson {
    pub payoff: [[Num; 2]; 2],
    pub text: String,
}

impl From<&PayoffMatrix> for MatrixJson {
    fn from(m: &PayoffMatrix) -> Self {
        MatrixJson {
            payoff: [
                [Num::from(&m.a), Num::from(&m.b)],
                [Num::from(&m.c), Num::from(&m.d)],
            ],
            text: m.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GJson {
    pub g0: Num,
    pub ga: Num,
    pub gb: Num,
    pub gab: Num,
}

impl From<&GVector> for GJson {
    fn from(g: &GVector) -> Self {
        GJson {
            g0: (&g.g0).into(),
            ga: (&g.ga).into(),
            gb: (&g.gb).into(),
            gab: (&g.gab).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CubeJson {
    pub ga: Num,
    pub gb: Num,
    pub gab: Num,
}

impl From<&CubePoint> for CubeJson {
    fn from(c: &CubePoint) -> Self {
        CubeJson {
            ga: (&c.ga).into(),
            gb: (&c.gb).into(),
            gab: (&c.gab).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MapJson {
    pub u: Num,
    pub v: Num,
    pub face: &'static str,
}

impl From<&MapPoint> for MapJson {
    fn from(p: &MapPoint) -> Self {
        MapJson {
            u: (&p.u).into(),
            v: (&p.v).into(),
            face: p.face.tag(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MixedJson {
    pub p: Num,
    pub payoff: Num,
}

fn mixed_json(game: &PayoffMatrix, profile: Option<MixedProfile>) -> Option<MixedJson> {
    profile.map(|m| MixedJson {
        p: m.p().into(),
        payoff: (&symmetric_payoff(game, &m)).into(),
    })
}

fn positions(set: PositionSet) -> Vec<String> {
    set.iter().map(|p| p.to_string()).collect()
}

#[derive(Debug, Serialize)]
pub struct RegionJson {
    pub id: usize,
    pub ordering: String,
    pub sign_vector: [bool; 6],
}

impl From<&ElementaryRegion> for RegionJson {
    fn from(r: &ElementaryRegion) -> Self {
        RegionJson {
            id: r.id().index(),
            ordering: r.to_string(),
            sign_vector: r.sign_vector(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassJson {
    pub id: usize,
    pub name: &'static str,
    pub category: &'static str,
    pub po_status: &'static str,
    pub payoff_comparison: &'static str,
    pub fraction: Num,
    pub triangle_count: usize,
}

impl From<&GameClassRecord> for ClassJson {
    fn from(r: &GameClassRecord) -> Self {
        ClassJson {
            id: r.id.index(),
            name: r.display_name,
            category: r.category.label(),
            po_status: r.po_status.label(),
            payoff_comparison: r.payoff_comparison.label(),
            fraction: (&r.fraction()).into(),
            triangle_count: r.triangle_count,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ComparisonJson {
    pub ne_source: String,
    pub ne_value: Num,
    pub po_source: String,
    pub po_value: Num,
    pub outcome: &'static str,
    pub matches_row: bool,
}

fn comparison_json(c: &Classification) -> Option<ComparisonJson> {
    c.comparison.as_ref().map(|v| ComparisonJson {
        ne_source: v.ne_source.to_string(),
        ne_value: (&v.ne_value).into(),
        po_source: v.po_source.to_string(),
        po_value: (&v.po_value).into(),
        outcome: v.outcome().label(),
        matches_row: c.comparison_matches_row(),
    })
}

#[derive(Debug, Serialize)]
pub struct TermJson {
    pub weight: Num,
    pub vertex: String,
    pub kind: &'static str,
    pub direction: [i8; 3],
}

fn kind_label(v: &CanonicalMatrix) -> &'static str {
    match v.kind {
        VertexKind::HighCorner => "high-corner",
        VertexKind::Axis => "axis",
        VertexKind::LowCorner => "low-corner",
    }
}

#[derive(Debug, Serialize)]
pub struct DecompositionJson {
    pub region: RegionJson,
    pub on_boundary: bool,
    pub adjacent_regions: Vec<usize>,
    pub offset: Num,
    pub scale: Num,
    pub terms: Vec<TermJson>,
    pub reconstruction_verified: bool,
}

impl DecompositionJson {
    pub fn new(game: &PayoffMatrix, d: &Decomposition) -> Self {
        DecompositionJson {
            region: (&d.region).into(),
            on_boundary: d.on_boundary(),
            adjacent_regions: d.adjacent.iter().map(|r| r.index()).collect(),
            offset: (&d.trivial_offset).into(),
            scale: (&d.scale).into(),
            terms: d
                .terms
                .iter()
                .map(|t| TermJson {
                    weight: (&t.weight).into(),
                    vertex: t.vertex.to_string(),
                    kind: kind_label(&t.vertex),
                    direction: t.vertex.direction,
                })
                .collect(),
            reconstruction_verified: &d.recompose() == game,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DecompositionReport {
    pub schema: &'static str,
    pub input: MatrixJson,
    #[serde(flatten)]
    pub decomposition: DecompositionJson,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub status: &'static str,
    pub degeneracy: Option<&'static str>,
    pub input: MatrixJson,
    pub g: GJson,
    pub ne_set: Vec<String>,
    pub po_set: Vec<String>,
    pub standard_pareto_set: Vec<String>,
    pub mixed_ne: Option<MixedJson>,
    pub mixed_po: Option<MixedJson>,
    pub region: Option<RegionJson>,
    pub adjacent_regions: Vec<usize>,
    pub class: Option<ClassJson>,
    pub comparison: Option<ComparisonJson>,
    pub cube_point: Option<CubeJson>,
    pub map_point: Option<MapJson>,
    pub decomposition: Option<DecompositionJson>,
}

impl Report {
    pub fn build(game: &PayoffMatrix) -> Report {
        let classification = classify(game);
        let (status, degeneracy) = match &classification {
            Ok(_) => ("classified", None),
            Err(Error::TrivialGame) => ("degenerate", Some("trivial")),
            Err(_) => ("degenerate", Some("boundary")),
        };
        let classification = classification.ok();
        let trivial = game.is_constant();
        Report {
            schema: REPORT_SCHEMA,
            status,
            degeneracy,
            input: game.into(),
            g: (&game.g_transform()).into(),
            ne_set: positions(pure_nash_set(game)),
            po_set: positions(relaxed_po_set(game)),
            standard_pareto_set: positions(standard_pareto_set(game)),
            mixed_ne: mixed_json(game, mixed_nash(game)),
            mixed_po: mixed_json(game, mixed_po(game)),
            region: classification.as_ref().map(|c| (&c.region).into()),
            adjacent_regions: if trivial {
                Vec::new()
            } else {
                adjacent_regions(game).iter().map(|r| r.index()).collect()
            },
            class: classification.as_ref().map(|c| c.record().into()),
            comparison: classification.as_ref().and_then(comparison_json),
            cube_point: game.normalize_cube().ok().as_ref().map(CubeJson::from),
            map_point: map_point(game).ok().as_ref().map(MapJson::from),
            decomposition: decompose(game)
                .ok()
                .map(|d| DecompositionJson::new(game, &d)),
        }
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("game        {}", self.input.text)];
        let g = &self.g;
        lines.push(format!(
            "G           g0={} ga={} gb={} gab={}",
            short(&g.g0), short(&g.ga), short(&g.gb), short(&g.gab)
        ));
        if let Some(kind) = self.degeneracy {
            lines.push(format!("status      degenerate ({kind})"));
        }
        if !self.adjacent_regions.is_empty() && self.region.is_none() {
            lines.push(format!("adjacent    regions {:?}", self.adjacent_regions));
        }
        if let (Some(region), Some(class)) = (&self.region, &self.class) {
            lines.push(format!("region      {} ({})", region.id, region.ordering));
            lines.push(format!(
                "class       {} [{}; {}; NE>PO? {}] fraction {}",
                class.name, class.category, class.po_status, class.payoff_comparison,
                short(&class.fraction)
            ));
        }
        lines.push(format!("NE          {{{}}}", self.ne_set.join(",")));
        lines.push(format!("PO          {{{}}}", self.po_set.join(",")));
        if let Some(m) = &self.mixed_ne {
            lines.push(format!("mixed NE    p={} payoff={}", short(&m.p), short(&m.payoff)));
        }
        if let Some(m) = &self.mixed_po {
            lines.push(format!("mixed PO    p={} payoff={}", short(&m.p), short(&m.payoff)));
        }
        if let Some(c) = &self.comparison {
            lines.push(format!(
                "comparison  {} = {} vs {} = {} ({}{})",
                c.ne_source,
                short(&c.ne_value),
                c.po_source,
                short(&c.po_value),
                c.outcome,
                if c.matches_row { "" } else { ", differs from row label" }
            ));
        }
        if let Some(p) = &self.map_point {
            lines.push(format!("map         u={} v={} face {}", short(&p.u), short(&p.v), p.face));
        }
        lines.join("\n") + "\n"
    }
}

fn short(n: &Num) -> &str {
    n.exact.strip_suffix("/1").unwrap_or(&n.exact)
}

#[derive(Debug, Serialize)]
pub struct FractionRow {
    pub kind: &'static str,
    pub id: usize,
    pub name: String,
    pub exact: Num,
    pub estimate: f64,
    pub abs_error: f64,
    pub std_error: f64,
}

#[derive(Debug, Serialize)]
pub struct FractionsReport {
    pub schema: &'static str,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    pub classes: Vec<FractionRow>,
    pub regions: Vec<FractionRow>,
}

impl FractionsReport {
    pub fn new(est: &MeasureEstimate, seed: u64, workers: usize) -> Self {
        let row = |kind, id, name: String, exact: Rational, estimate: f64| {
            let approx = rational::to_f64(&exact);
            FractionRow {
                kind,
                id,
                name,
                exact: (&exact).into(),
                estimate,
                abs_error: (estimate - approx).abs(),
                std_error: est.std_error(estimate),
            }
        };
        FractionsReport {
            schema: FRACTIONS_SCHEMA,
            samples: est.samples,
            seed,
            workers,
            classes: ClassId::all()
                .map(|c| {
                    row(
                        "class",
                        c.index(),
                        c.record().display_name.to_string(),
                        c.record().fraction(),
                        est.class_fraction(c),
                    )
                })
                .collect(),
            regions: RegionId::all()
                .map(|r| {
                    row(
                        "region",
                        r.index(),
                        ElementaryRegion::from_id(r).to_string(),
                        rational::ratio(1, RegionId::COUNT as i64),
                        est.region_fraction(r),
                    )
                })
                .collect(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,id,name,exact,estimate,abs_error,std_error\n");
        for r in self.classes.iter().chain(&self.regions) {
            out.push_str(&format!(
                "{},{},\"{}\",{},{:.6},{:.6},{:.6}\n",
                r.kind,
                r.id,
                r.name.replace('"', "\"\""),
                r.exact.exact,
                r.estimate,
                r.abs_error,
                r.std_error
            ));
        }
        out
    }
}
