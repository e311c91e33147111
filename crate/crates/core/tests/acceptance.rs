//! Acceptance criteria. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p symgame --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use num::Zero;
use symgame::cartography::{decompose, mc_region_fractions, region_of, trajectory, RegionId};
use symgame::equilibria::{
    mixed_nash, mixed_po, pure_nash_set, relaxed_po_set, standard_pareto_set, symmetric_payoff,
};
use symgame::ordergraph::{build_order_graph, graph_nash_set, graph_po_set};
use symgame::rational::{int, ratio};
use symgame::taxonomy::{census, class_table, classify, enumerate_ordinal_games, ClassId};
use symgame::{PayoffMatrix, Position, Strategy};

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn m(a: i64, b: i64, c: i64, d: i64) -> PayoffMatrix {
    PayoffMatrix::from_ints(a, b, c, d)
}

const TRIANGLES: [usize; 9] = [4, 2, 2, 3, 1, 6, 1, 1, 4];

fn ac1_ordinal_census() -> Check {
    let start = Instant::now();
    let census = census();
    let elapsed = start.elapsed();
    let counts: Vec<usize> = ClassId::all().map(|c| census.count(c)).collect();
    ensure(counts == TRIANGLES, || format!("counts {counts:?}"))?;
    ensure(census.total() == 24, || format!("total {}", census.total()))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))
}

fn ac2_fraction_table() -> Check {
    let expected = [(1, 6), (1, 12), (1, 12), (1, 8), (1, 24), (1, 4), (1, 24), (1, 24), (1, 6)];
    for (record, (p, q)) in class_table().iter().zip(expected) {
        ensure(record.fraction() == ratio(p, q), || {
            format!("{}: {}", record.display_name, record.fraction())
        })?;
    }
    let total: symgame::Rational = class_table().iter().map(|r| r.fraction()).sum();
    ensure(total == int(1), || format!("sum {total}"))
}

fn ac3_monte_carlo() -> Check {
    let start = Instant::now();
    let est = mc_region_fractions(1_000_000, 20_240_601);
    let elapsed = start.elapsed();
    for region in RegionId::all() {
        let f = est.region_fraction(region);
        ensure((f - 1.0 / 24.0).abs() < 0.0045, || format!("region {region}: {f}"))?;
    }
    for class in ClassId::all() {
        let exact = symgame::rational::to_f64(&class.record().fraction());
        let f = est.class_fraction(class);
        ensure((f - exact).abs() < 0.005, || format!("{class}: {f} vs {exact}"))?;
    }
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))
}

fn ac4_named_games() -> Check {
    let class = |p: &PayoffMatrix| classify(p).map_err(|e| e.to_string());
    ensure(class(&m(3, 1, 4, 2))?.class == ClassId::PRISONERS_DILEMMA, || "PD".into())?;
    ensure(class(&m(3, 4, 1, 2))?.class == ClassId::DEADLOCK, || "Deadlock".into())?;

    let chicken = m(4, 2, 5, 1);
    let c = class(&chicken)?;
    ensure(c.class == ClassId::CHICKEN, || format!("Chicken -> {}", c.class))?;
    let mixed = c.mixed_ne.clone().ok_or("Chicken has no mixed NE")?;
    ensure(mixed.p() == &ratio(1, 2), || format!("p = {}", mixed.p()))?;
    let payoff = symmetric_payoff(&chicken, &mixed);
    let po = chicken.entry(Position::new(Strategy::Zero, Strategy::Zero)).clone();
    ensure(payoff == int(3) && po == int(4) && payoff < po, || {
        format!("mixed {payoff} vs PO {po}")
    })?;
    let v = c.comparison.ok_or("Chicken comparison missing")?;
    ensure(v.ne_value == int(3) && v.po_value == int(4), || "Chicken comparison values".into())?;

    ensure(class(&m(4, 1, 2, 3))?.class == ClassId::BOTH_NE, || "Both NE".into())?;

    let c = class(&m(4, 5, 2, 1))?;
    ensure(c.class == ClassId::TWO_PO_NE_GREATER, || format!("Two PO -> {}", c.class))?;
    let v = c.comparison.ok_or("Two PO comparison missing")?;
    ensure(v.ne_value == int(4) && v.po_value == ratio(7, 2) && v.ne_value > v.po_value, || {
        format!("{} vs {}", v.ne_value, v.po_value)
    })
}

fn ac5_cholesterol_decomposition() -> Check {
    let healthy = m(9, 15, 5, 7);
    let d = decompose(&healthy).map_err(|e| e.to_string())?;
    ensure(d.trivial_offset == int(5), || format!("offset {}", d.trivial_offset))?;
    ensure(d.scale == ratio(16, 6), || format!("scale {}", d.scale))?;
    let expected = [
        (ratio(3, 8), m(0, 6, 0, 0)),
        (ratio(3, 8), m(2, 2, 0, 2)),
        (ratio(2, 8), m(3, 3, 0, 0)),
    ];
    for (term, (w, v)) in d.terms.iter().zip(expected) {
        ensure(term.weight == w && term.vertex.matrix == v, || {
            format!("term {} on {}", term.weight, term.vertex)
        })?;
    }
    ensure(d.recompose() == healthy, || "healthy reconstruction".into())?;

    let unhealthy = m(-9, -3, -1, 1);
    let d = decompose(&unhealthy).map_err(|e| e.to_string())?;
    ensure(d.trivial_offset == int(-9), || format!("offset {}", d.trivial_offset))?;
    ensure(d.recompose() == unhealthy, || "unhealthy reconstruction".into())
}

fn ac6_oracle_equivalence() -> Check {
    let games: Vec<_> = enumerate_ordinal_games()
        .into_iter()
        .chain(common::random_suite(6))
        .collect();
    for p in &games {
        let g = build_order_graph(p);
        ensure(graph_nash_set(&g) == pure_nash_set(p), || format!("NE {p}"))?;
        ensure(graph_po_set(&g) == relaxed_po_set(p), || format!("PO {p}"))?;
    }
    // For strict games a diagonal relaxed-PO position cannot be dominated by
    // an off-diagonal outcome, so it is standard-Pareto exactly when it beats
    // the other diagonal outcome.
    let strict = games.iter().filter(|p| p.is_strict());
    for p in strict {
        let standard = standard_pareto_set(p);
        for pos in relaxed_po_set(p).diagonal().iter() {
            let other = Position::new(pos.row.other(), pos.row.other());
            let expected = p.entry(pos) > p.entry(other);
            ensure(standard.contains(pos) == expected, || format!("{p} at {pos}"))?;
        }
    }
    Ok(())
}

fn ac7_invariance() -> Check {
    let mut rng = common::rng(7);
    for p in common::random_suite(7) {
        let alpha = common::random_positive(&mut rng);
        let beta = common::random_rational(&mut rng);
        let q = p.affine(&alpha, &beta);
        ensure(pure_nash_set(&p) == pure_nash_set(&q), || format!("NE {p}"))?;
        ensure(relaxed_po_set(&p) == relaxed_po_set(&q), || format!("PO {p}"))?;
        ensure(mixed_nash(&p) == mixed_nash(&q), || format!("mixed NE {p}"))?;
        ensure(mixed_po(&p) == mixed_po(&q), || format!("mixed PO {p}"))?;
        if p.is_strict() {
            let (c1, c2) = (classify(&p).unwrap(), classify(&q).unwrap());
            ensure(c1.class == c2.class, || format!("class {p}"))?;
            ensure(region_of(&p).unwrap() == region_of(&q).unwrap(), || format!("region {p}"))?;
        }
        let t = p.transpose_game();
        ensure(pure_nash_set(&t) == relaxed_po_set(&p), || format!("transpose NE {p}"))?;
        ensure(relaxed_po_set(&t) == pure_nash_set(&p), || format!("transpose PO {p}"))?;
        ensure(p.g_transform().inverse_g_transform() == p, || format!("round trip {p}"))?;
    }
    Ok(())
}

fn ac8_existence_and_pairing() -> Check {
    let (p01, p10) = (Position::from_indices(0, 1), Position::from_indices(1, 0));
    for p in common::random_suite(7) {
        let ne = pure_nash_set(&p);
        ensure(!ne.is_empty(), || format!("empty NE {p}"))?;
        ensure(ne.contains(p01) == ne.contains(p10), || format!("pairing {p}"))?;
    }
    Ok(())
}

fn ac9_trajectory() -> Check {
    let unhealthy = m(-9, -3, -1, 1);
    let healthy = m(9, 15, 5, 7);
    let samples = trajectory(&unhealthy, &healthy, 101).map_err(|e| e.to_string())?;
    ensure(samples.len() == 101, || format!("{} samples", samples.len()))?;
    ensure(samples.iter().all(|s| s.map_point.is_some()), || "missing map point".into())?;
    let first = samples[0].classification().ok_or("first sample unclassified")?;
    let last = samples[100].classification().ok_or("last sample unclassified")?;
    ensure(first.class == classify(&unhealthy).unwrap().class, || "start class".into())?;
    ensure(last.class == classify(&healthy).unwrap().class, || "end class".into())?;
    let classes: Vec<_> = samples
        .iter()
        .filter_map(|s| s.classification().map(|c| c.class))
        .collect();
    let changes = classes.windows(2).filter(|w| w[0] != w[1]).count();
    ensure(changes >= 1, || "no class change".into())?;
    ensure(samples[0].t.is_zero() && samples[100].t == int(1), || "t range".into())
}

type Criterion = (&'static str, fn() -> Check);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("AC1 ordinal census equals triangle counts", ac1_ordinal_census),
        ("AC2 class fractions exact and sum to 1", ac2_fraction_table),
        ("AC3 Monte Carlo region/class measure (n=10^6)", ac3_monte_carlo),
        ("AC4 named-game placement", ac4_named_games),
        ("AC5 Cholesterol decomposition", ac5_cholesterol_decomposition),
        ("AC6 order-graph and Pareto oracle equivalence", ac6_oracle_equivalence),
        ("AC7 affine/transpose/round-trip invariance", ac7_invariance),
        ("AC8 NE existence and off-diagonal pairing", ac8_existence_and_pairing),
        ("AC9 Cholesterol trajectory", ac9_trajectory),
    ];
    let mut failures = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
