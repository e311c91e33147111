//! The 24 elementary regions cut by the planes `G_A ± G_AB = 0`,
//! `G_B ± G_AB = 0` and `G_A ± G_B = 0`.
//!
//! Each of the six plane functionals equals a pairwise difference of payoff
//! entries, so a region is exactly a strict ordering of `(a, b, c, d)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::payoff::PayoffMatrix;

/// Names an entry of the payoff matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    A,
    B,
    C,
    D,
}

impl Entry {
    pub const ALL: [Entry; 4] = [Entry::A, Entry::B, Entry::C, Entry::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Entry {
        Entry::ALL[i]
    }

    pub fn letter(self) -> char {
        ['a', 'b', 'c', 'd'][self.index()]
    }

    /// Image under swapping both players' strategy labels.
    pub fn relabeled(self) -> Entry {
        Entry::from_index(3 - self.index())
    }
}

/// Entry pairs `(p, q)` whose difference `p - q` equals, in order,
/// `G_A+G_AB, G_A-G_AB, G_B+G_AB, G_B-G_AB, G_A+G_B, G_A-G_B`.
pub const PLANE_PAIRS: [(Entry, Entry); 6] = [
    (Entry::A, Entry::C),
    (Entry::B, Entry::D),
    (Entry::A, Entry::B),
    (Entry::C, Entry::D),
    (Entry::A, Entry::D),
    (Entry::B, Entry::C),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionId(u8);

impl RegionId {
    pub const COUNT: usize = 24;

    pub fn new(id: usize) -> Option<Self> {
        (id < Self::COUNT).then_some(RegionId(id as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = RegionId> {
        (0..Self::COUNT).map(|i| RegionId(i as u8))
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementaryRegion {
    id: RegionId,
    ordering: [Entry; 4],
}

impl ElementaryRegion {
    /// Region of a strict ordering, largest entry first.
    pub fn from_ordering(ordering: [Entry; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for e in ordering {
            if std::mem::replace(&mut seen[e.index()], true) {
                return None;
            }
        }
        Some(ElementaryRegion {
            id: RegionId(lehmer_rank(ordering)),
            ordering,
        })
    }

    pub fn from_id(id: RegionId) -> Self {
        let mut remaining: Vec<Entry> = Entry::ALL.to_vec();
        let mut rest = id.index();
        let mut ordering = [Entry::A; 4];
        for (slot, radix) in ordering.iter_mut().zip([6, 2, 1, 1]) {
            *slot = remaining.remove(rest / radix);
            rest %= radix;
        }
        ElementaryRegion { id, ordering }
    }

    pub fn all() -> impl Iterator<Item = ElementaryRegion> {
        RegionId::all().map(ElementaryRegion::from_id)
    }

    pub fn id(&self) -> RegionId {
        self.id
    }

    /// Entries from largest to smallest.
    pub fn ordering(&self) -> [Entry; 4] {
        self.ordering
    }

    /// 0 for the largest entry, 3 for the smallest.
    pub fn rank(&self, entry: Entry) -> usize {
        self.ordering
            .iter()
            .position(|e| *e == entry)
            .expect("ordering is a permutation")
    }

    pub fn greater(&self, p: Entry, q: Entry) -> bool {
        self.rank(p) < self.rank(q)
    }

    /// Signs of the six plane functionals; `true` is positive.
    pub fn sign_vector(&self) -> [bool; 6] {
        PLANE_PAIRS.map(|(p, q)| self.greater(p, q))
    }

    pub fn relabeled(&self) -> ElementaryRegion {
        ElementaryRegion::from_ordering(self.ordering.map(Entry::relabeled))
            .expect("relabeling preserves a permutation")
    }

    /// Integer game with entries 4 > 3 > 2 > 1 in this ordering.
    pub fn representative(&self) -> PayoffMatrix {
        let mut values = [0i64; 4];
        for (rank, entry) in self.ordering.iter().enumerate() {
            values[entry.index()] = 4 - rank as i64;
        }
        PayoffMatrix::from_ints(values[0], values[1], values[2], values[3])
    }

    /// Whether the closed cell contains the game (ties allowed).
    pub fn contains_weakly(&self, game: &PayoffMatrix) -> bool {
        let e = game.entries();
        self.ordering
            .windows(2)
            .all(|w| e[w[0].index()] >= e[w[1].index()])
    }
}

impl fmt::Display for ElementaryRegion {
    /// e.g. `c>a>d>b`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ordering.iter().map(|e| e.letter().to_string()).collect();
        f.write_str(&parts.join(">"))
    }
}

fn lehmer_rank(ordering: [Entry; 4]) -> u8 {
    let mut rank = 0;
    for (i, radix) in [6u8, 2, 1].into_iter().enumerate() {
        let smaller_later = ordering[i + 1..]
            .iter()
            .filter(|e| **e < ordering[i])
            .count() as u8;
        rank += smaller_later * radix;
    }
    rank
}

/// Every region whose closure contains the game, in id order.
pub fn adjacent_regions(game: &PayoffMatrix) -> Vec<RegionId> {
    ElementaryRegion::all()
        .filter(|r| r.contains_weakly(game))
        .map(|r| r.id())
        .collect()
}

/// The open cell holding a strict-generic game.
pub fn region_of(game: &PayoffMatrix) -> Result<ElementaryRegion> {
    if game.is_constant() {
        return Err(Error::TrivialGame);
    }
    if !game.is_strict() {
        return Err(Error::BoundaryGame {
            adjacent: adjacent_regions(game),
        });
    }
    let e = game.entries();
    let mut ordering = Entry::ALL;
    ordering.sort_by(|p, q| e[q.index()].cmp(e[p.index()]));
    Ok(ElementaryRegion::from_ordering(ordering).expect("sorted permutation"))
}

/// Region of a floating-point centered game, or `None` on an exact tie.
pub fn region_of_f64(entries: [f64; 4]) -> Option<RegionId> {
    let mut ordering = Entry::ALL;
    ordering.sort_by(|p, q| entries[q.index()].total_cmp(&entries[p.index()]));
    let strict = ordering
        .windows(2)
        .all(|w| entries[w[0].index()] > entries[w[1].index()]);
    strict.then(|| RegionId(lehmer_rank(ordering)))
}
