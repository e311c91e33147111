//! Order graphs: the four outcomes plotted at (column payoff, row payoff),
//! joined by arrows along unilateral deviations.
//!
//! Nash arrows point toward the mover's own higher payoff, so the row
//! player's arrows point up and the column player's point right. Pareto
//! arrows join the same pairs but point toward the *other* player's higher
//! payoff. An equal-payoff edge is double-headed.

use std::fmt::Write;

use crate::equilibria::PositionSet;
use crate::payoff::{PayoffMatrix, Position};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    Row,
    Column,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowKind {
    Nash,
    Pareto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    /// Player whose deviation the edge represents.
    pub mover: Player,
    pub kind: ArrowKind,
    pub tail: Position,
    pub head: Position,
    pub double_headed: bool,
}

impl Arrow {
    pub fn points_at(&self, pos: Position) -> bool {
        self.head == pos || (self.double_headed && self.tail == pos)
    }

    pub fn touches(&self, pos: Position) -> bool {
        self.head == pos || self.tail == pos
    }

    /// Unordered endpoints, smaller position first.
    pub fn endpoints(&self) -> (Position, Position) {
        if self.tail < self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub position: Position,
    /// Column player's payoff.
    pub x: Rational,
    /// Row player's payoff.
    pub y: Rational,
}

impl Node {
    pub fn name(&self) -> String {
        format!(
            "pos_{}{}",
            self.position.row.index(),
            self.position.col.index()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderGraph {
    pub nodes: [Node; 4],
    pub nash_arrows: [Arrow; 4],
    pub pareto_arrows: [Arrow; 4],
}

/// The four deviation edges: two row-player (vertical), two column-player.
fn deviation_edges() -> [(Player, Position, Position); 4] {
    let p = Position::from_indices;
    [
        (Player::Row, p(0, 0), p(1, 0)),
        (Player::Row, p(0, 1), p(1, 1)),
        (Player::Column, p(0, 0), p(0, 1)),
        (Player::Column, p(1, 0), p(1, 1)),
    ]
}

fn orient(
    mover: Player,
    kind: ArrowKind,
    p: Position,
    q: Position,
    value_p: &Rational,
    value_q: &Rational,
) -> Arrow {
    let (tail, head) = if value_p > value_q { (q, p) } else { (p, q) };
    Arrow {
        mover,
        kind,
        tail,
        head,
        double_headed: value_p == value_q,
    }
}

pub fn build_order_graph(game: &PayoffMatrix) -> OrderGraph {
    let nodes = Position::ALL.map(|position| Node {
        position,
        x: game.col_payoff(position).clone(),
        y: game.row_payoff(position).clone(),
    });
    let own = |mover: Player, pos: Position| match mover {
        Player::Row => game.row_payoff(pos),
        Player::Column => game.col_payoff(pos),
    };
    let other = |mover: Player, pos: Position| match mover {
        Player::Row => game.col_payoff(pos),
        Player::Column => game.row_payoff(pos),
    };
    let edges = deviation_edges();
    let nash_arrows =
        edges.map(|(m, p, q)| orient(m, ArrowKind::Nash, p, q, own(m, p), own(m, q)));
    let pareto_arrows =
        edges.map(|(m, p, q)| orient(m, ArrowKind::Pareto, p, q, other(m, p), other(m, q)));
    OrderGraph {
        nodes,
        nash_arrows,
        pareto_arrows,
    }
}

fn sinks(arrows: &[Arrow; 4]) -> PositionSet {
    PositionSet::from_positions(Position::ALL.into_iter().filter(|&pos| {
        arrows
            .iter()
            .filter(|a| a.touches(pos))
            .all(|a| a.points_at(pos))
    }))
}

/// Nodes at which every adjacent Nash arrow points.
pub fn graph_nash_set(graph: &OrderGraph) -> PositionSet {
    sinks(&graph.nash_arrows)
}

/// Nodes at which every adjacent Pareto arrow points.
pub fn graph_po_set(graph: &OrderGraph) -> PositionSet {
    sinks(&graph.pareto_arrows)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Emit only the nodes and equilibrium marks.
    pub simplified: bool,
}

fn coordinate(value: &Rational) -> String {
    format!("{:.4}", rational::to_f64(value))
}

/// Graphviz DOT text. Nodes are pinned at their payoff coordinates (use
/// `neato -n` to honor them); Nash arrows are solid, Pareto arrows dashed,
/// and equilibrium nodes double-circled.
pub fn to_dot(graph: &OrderGraph, options: DotOptions) -> String {
    let ne = graph_nash_set(graph);
    let mut out = String::new();
    out.push_str("digraph order_graph {\n");
    out.push_str("  node [shape=circle];\n");
    for node in &graph.nodes {
        let shape = if ne.contains(node.position) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(
            out,
            "  {} [label=\"{}\\n({}, {})\", pos=\"{},{}!\", shape={}];",
            node.name(),
            node.position,
            rational::to_short_string(&node.x),
            rational::to_short_string(&node.y),
            coordinate(&node.x),
            coordinate(&node.y),
            shape,
        );
    }
    if !options.simplified {
        let name = |pos: Position| format!("pos_{}{}", pos.row.index(), pos.col.index());
        for arrow in graph.nash_arrows.iter().chain(&graph.pareto_arrows) {
            let style = match arrow.kind {
                ArrowKind::Nash => "solid",
                ArrowKind::Pareto => "dashed",
            };
            let dir = if arrow.double_headed { "both" } else { "forward" };
            let _ = writeln!(
                out,
                "  {} -> {} [style={}, dir={}];",
                name(arrow.tail),
                name(arrow.head),
                style,
                dir,
            );
        }
    }
    out.push_str("}\n");
    out
}
