//! SVG rendering of the unfolded map with optional point and trajectory
//! overlays. Output is a pure function of its inputs.

use std::collections::BTreeMap;
use std::fmt::Write;

use symgame::cartography::{
    face_of, map_point, region_vertices, unfold_on, CanonicalMatrix, ElementaryRegion,
    TrajectorySample,
};
use symgame::taxonomy::{class_of_region, ClassId};
use symgame::rational;
use symgame::{CubePoint, PayoffMatrix, Rational};

pub const PALETTE: [&str; ClassId::COUNT] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f",
];

const UNIT: f64 = 60.0;
const MARGIN: f64 = 40.0;
const LEGEND_WIDTH: f64 = 300.0;
const HALF_SPAN: f64 = 4.0;

#[derive(Debug, Default)]
pub struct MapOverlay {
    pub points: Vec<PayoffMatrix>,
    pub trajectory: Option<Vec<TrajectorySample>>,
}

fn px(u: f64, v: f64) -> (f64, f64) {
    (MARGIN + (u + HALF_SPAN) * UNIT, MARGIN + (HALF_SPAN - v) * UNIT)
}

fn vertex_cube(v: &CanonicalMatrix) -> CubePoint {
    let [x, y, z] = v.direction.map(|c| (c as i64, 1));
    CubePoint::from_ratios(x, y, z).expect("vertex directions lie on the cube")
}

fn centroid(points: &[CubePoint; 3]) -> CubePoint {
    let sum = |f: fn(&CubePoint) -> &Rational| points.iter().map(f).sum::<Rational>();
    let (ga, gb, gab) = (sum(|p| &p.ga), sum(|p| &p.gb), sum(|p| &p.gab));
    // Interior to one face, so dividing by the largest component puts it
    // back on the cube.
    let m = [&ga, &gb, &gab]
        .into_iter()
        .map(rational::abs)
        .max()
        .expect("three components");
    CubePoint::new(ga / &m, gb / &m, gab / &m).expect("normalized")
}

struct Triangle {
    class: ClassId,
    corners: [(f64, f64); 3],
    labels: [(f64, f64, String); 3],
}

fn triangles() -> Vec<Triangle> {
    ElementaryRegion::all()
        .map(|region| {
            let tri = region_vertices(&region);
            let verts = tri.vertices();
            let cubes = verts.map(vertex_cube);
            let face = face_of(&centroid(&cubes));
            let mapped = cubes.clone().map(|c| {
                unfold_on(&c, face)
                    .expect("triangle vertices lie on its face")
                    .to_f64()
            });
            let labels = [0, 1, 2].map(|k| (mapped[k].0, mapped[k].1, verts[k].matrix.to_string()));
            Triangle {
                class: class_of_region(region.id()),
                corners: mapped,
                labels,
            }
        })
        .collect()
}

fn point_list(points: &[(f64, f64)]) -> String {
    points
        .iter()
        .map(|(u, v)| {
            let (x, y) = px(*u, *v);
            format!("{x:.3},{y:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_map(overlay: &MapOverlay) -> String {
    let map_size = 2.0 * HALF_SPAN * UNIT + 2.0 * MARGIN;
    let width = map_size + LEGEND_WIDTH;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{map_size:.0}" viewBox="0 0 {width:.0} {map_size:.0}" font-family="sans-serif">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let tris = triangles();
    writeln!(out, r##"<g id="regions" stroke="#333" stroke-width="1">"##).unwrap();
    for (region, t) in ElementaryRegion::all().zip(&tris) {
        writeln!(
            out,
            r#"<polygon class="region" data-region="{}" data-class="{}" fill="{}" points="{}"><title>{}: {}</title></polygon>"#,
            region.id(),
            t.class.index(),
            PALETTE[t.class.index()],
            point_list(&t.corners),
            region,
            escape(t.class.record().display_name)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    // One label per distinct map position; the same vertex can appear at
    // several places once the cube is cut open.
    let mut labels: BTreeMap<(i64, i64), String> = BTreeMap::new();
    for t in &tris {
        for (u, v, text) in &t.labels {
            let key = ((u * 1000.0).round() as i64, (v * 1000.0).round() as i64);
            labels.entry(key).or_insert_with(|| text.clone());
        }
    }
    writeln!(out, r##"<g id="vertex-labels" font-size="9" fill="#111">"##).unwrap();
    for ((u, v), text) in &labels {
        let (x, y) = px(*u as f64 / 1000.0, *v as f64 / 1000.0);
        writeln!(
            out,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="2"/><text x="{:.3}" y="{:.3}">[{}]</text>"#,
            x + 3.0,
            y - 3.0,
            escape(text)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    if let Some(samples) = &overlay.trajectory {
        write_trajectory(&mut out, samples);
    }
    if !overlay.points.is_empty() {
        writeln!(out, r#"<g id="points" stroke="black" stroke-width="1.5">"#).unwrap();
        for game in &overlay.points {
            match map_point(game) {
                Ok(p) => {
                    let (x, y) = px(p.to_f64().0, p.to_f64().1);
                    writeln!(
                        out,
                        r#"<circle class="point" cx="{x:.3}" cy="{y:.3}" r="5" fill="white"><title>{}</title></circle>"#,
                        game
                    )
                    .unwrap();
                }
                Err(_) => {
                    writeln!(out, "<!-- trivial game {game} has no map position -->").unwrap();
                }
            }
        }
        writeln!(out, "</g>").unwrap();
    }

    write_legend(&mut out, map_size);
    writeln!(out, "</svg>").unwrap();
    out
}

fn write_trajectory(out: &mut String, samples: &[TrajectorySample]) {
    writeln!(
        out,
        r#"<g id="trajectory" fill="none" stroke="black" stroke-width="2">"#
    )
    .unwrap();
    let mut runs: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    let mut boundary = Vec::new();
    for s in samples {
        let Some(p) = &s.map_point else {
            if current.len() > 1 {
                runs.push(std::mem::take(&mut current));
            }
            current.clear();
            continue;
        };
        let (u, v) = p.to_f64();
        if s.is_boundary() {
            boundary.push((u, v));
        }
        // A large jump means the path crossed a cut of the development.
        if let Some(&(pu, pv)) = current.last() {
            if (u - pu).abs() + (v - pv).abs() > 1.0 {
                if current.len() > 1 {
                    runs.push(std::mem::take(&mut current));
                }
                current.clear();
            }
        }
        current.push((u, v));
    }
    if current.len() > 1 {
        runs.push(current);
    }
    for run in &runs {
        writeln!(out, r#"<polyline class="trajectory" points="{}"/>"#, point_list(run)).unwrap();
    }
    for (u, v) in boundary {
        let (x, y) = px(u, v);
        writeln!(
            out,
            r#"<circle class="boundary" cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
}

fn write_legend(out: &mut String, map_size: f64) {
    let x0 = map_size;
    writeln!(out, r#"<g id="legend" font-size="12">"#).unwrap();
    writeln!(out, r#"<text x="{x0:.0}" y="{:.0}" font-weight="bold">Classes</text>"#, MARGIN).unwrap();
    for class in ClassId::all() {
        let y = MARGIN + 20.0 + 22.0 * class.index() as f64;
        writeln!(
            out,
            r##"<rect x="{x0:.0}" y="{:.0}" width="14" height="14" fill="{}" stroke="#333"/><text x="{:.0}" y="{:.0}">{}</text>"##,
            y - 11.0,
            PALETTE[class.index()],
            x0 + 20.0,
            y,
            escape(class.record().display_name)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
}
