//! Meet-in-the-middle search.
//!
//! Every weave of at most `ceil(L/2)` crossings is a half. Halves are
//! indexed by the quantized first row `(Re a, Im a, Re b, Im b)` of their
//! phase-canonical SU(2) form, under both signs. For a forward half `f`
//! the search looks for a backward half `b` with `M_b ~ U M_f^dagger` by
//! probing the query cell and its 80 neighbours, then scores the complete
//! weave "`f` then `b`". Halves on their own are also scored, so the result
//! is never worse than a brute-force search at the half budget.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::braid::Generator;
use crate::error::SearchError;
use crate::search::brute::PowerTable;
use crate::search::{
    count_weaves, finish, Method, SearchBudget, SearchResult, Selection, TargetGate,
};
use crate::unitary::{distance_unchecked, Unitary2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BidirectionalOptions {
    /// Edge length of a quantization cell in canonical coordinates.
    pub cell_size: f64,
    /// Upper bound on index entries (two per half).
    pub max_index_entries: u64,
}

impl Default for BidirectionalOptions {
    fn default() -> Self {
        Self { cell_size: 0.02, max_index_entries: 50_000_000 }
    }
}

type CellKey = [i64; 4];

#[derive(Debug, Clone)]
struct Half {
    start: Option<Generator>,
    exponents: Vec<i64>,
    crossings: u64,
    matrix: Unitary2,
}

impl Half {
    fn last_generator(&self) -> Option<Generator> {
        let start = self.start?;
        Some(if self.exponents.len() % 2 == 1 { start } else { start.other() })
    }
}

/// All halves within a crossing budget, keyed by quantized canonical
/// coordinates.
pub struct HalfWeaveIndex {
    halves: Vec<Half>,
    cells: HashMap<CellKey, Vec<u32>>,
    cell_size: f64,
}

impl HalfWeaveIndex {
    pub fn build(half_exchanges: u32, max_slots: u32, options: &BidirectionalOptions) -> Result<Self, SearchError> {
        let predicted = 2 * count_weaves(half_exchanges, max_slots);
        if predicted > options.max_index_entries {
            return Err(SearchError::IndexTooLarge {
                entries: predicted,
                limit: options.max_index_entries,
            });
        }
        let halves = collect_halves(half_exchanges, max_slots);
        let mut cells: HashMap<CellKey, Vec<u32>> = HashMap::new();
        for (i, h) in halves.iter().enumerate() {
            let canon = h.matrix.phase_canonicalize();
            let plus = cell_key(&canon, options.cell_size);
            let minus = cell_key(&canon.scale((-1.0).into()), options.cell_size);
            cells.entry(plus).or_default().push(i as u32);
            if minus != plus {
                cells.entry(minus).or_default().push(i as u32);
            }
        }
        Ok(Self { halves, cells, cell_size: options.cell_size })
    }

    /// Number of distinct half-weaves.
    pub fn len(&self) -> usize {
        self.halves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halves.is_empty()
    }

    /// Number of (cell, half) entries.
    pub fn entries(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    /// Halves stored in the cell of `m` or any of its 80 neighbours, sorted
    /// and deduplicated.
    fn probe(&self, m: &Unitary2) -> Vec<u32> {
        let key = cell_key(&m.phase_canonicalize(), self.cell_size);
        let mut found = Vec::new();
        for offset in 0..81i64 {
            let d = [offset % 3 - 1, (offset / 3) % 3 - 1, (offset / 9) % 3 - 1, offset / 27 - 1];
            let probe = [key[0] + d[0], key[1] + d[1], key[2] + d[2], key[3] + d[3]];
            if let Some(ids) = self.cells.get(&probe) {
                found.extend_from_slice(ids);
            }
        }
        found.sort_unstable();
        found.dedup();
        found
    }
}

fn cell_key(canon: &Unitary2, cell: f64) -> CellKey {
    let a = canon.get(0, 0);
    let b = canon.get(0, 1);
    [a.re, a.im, b.re, b.im].map(|x| (x / cell).floor() as i64)
}

fn collect_halves(max_exchanges: u32, max_slots: u32) -> Vec<Half> {
    let powers = PowerTable::new();
    let mut out = vec![Half { start: None, exponents: Vec::new(), crossings: 0, matrix: Unitary2::IDENTITY }];
    for start in [Generator::Sigma1, Generator::Sigma2] {
        let mut path = Vec::new();
        grow(&powers, start, &mut path, Unitary2::IDENTITY, 0, u64::from(max_exchanges), max_slots as usize, &mut out);
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn grow(
    powers: &PowerTable,
    start: Generator,
    path: &mut Vec<i64>,
    m: Unitary2,
    cost: u64,
    max_exchanges: u64,
    max_slots: usize,
    out: &mut Vec<Half>,
) {
    if path.len() >= max_slots {
        return;
    }
    let g = if path.len().is_multiple_of(2) { start } else { start.other() };
    for (k, &e) in crate::braid::WEAVE_EXPONENTS.iter().enumerate() {
        let c = cost + e.unsigned_abs();
        if c > max_exchanges {
            continue;
        }
        let child = *powers.get(g, k) * m;
        path.push(e);
        out.push(Half { start: Some(start), exponents: path.clone(), crossings: c, matrix: child });
        grow(powers, start, path, child, c, max_exchanges, max_slots, out);
        path.pop();
    }
}

pub fn bidirectional(target: &TargetGate, budget: &SearchBudget) -> Result<SearchResult, SearchError> {
    bidirectional_with(target, budget, &BidirectionalOptions::default())
}

pub fn bidirectional_with(
    target: &TargetGate,
    budget: &SearchBudget,
    options: &BidirectionalOptions,
) -> Result<SearchResult, SearchError> {
    budget.validate()?;
    let clock = Instant::now();
    let half_budget = budget.max_exchanges.div_ceil(2);
    let index = HalfWeaveIndex::build(half_budget, budget.max_slots, options)?;
    let max_exchanges = u64::from(budget.max_exchanges);
    let max_slots = budget.max_slots as usize;
    let u = &target.matrix;

    let pool = budget.pool()?;
    let (selection, nodes) = pool.install(|| {
        index
            .halves
            .par_iter()
            .map(|f| {
                let mut selection = Selection::default();
                let mut nodes = 1u64;
                selection.offer(distance_unchecked(&f.matrix, u), f.start, &f.exponents);

                let query = *u * f.matrix.adjoint();
                let mut exponents = f.exponents.clone();
                for id in index.probe(&query) {
                    let b = &index.halves[id as usize];
                    if f.start.is_none() || b.start.is_none() {
                        // already scored on its own
                        continue;
                    }
                    if f.last_generator() == b.start
                        || f.crossings + b.crossings > max_exchanges
                        || f.exponents.len() + b.exponents.len() > max_slots
                    {
                        continue;
                    }
                    nodes += 1;
                    let err = distance_unchecked(&(b.matrix * f.matrix), u);
                    exponents.truncate(f.exponents.len());
                    exponents.extend_from_slice(&b.exponents);
                    selection.offer(err, f.start, &exponents);
                }
                (selection, nodes)
            })
            .reduce(
                || (Selection::default(), 0),
                |(a, na), (b, nb)| (a.merge(b), na + nb),
            )
    });

    let winner = selection.winner().expect("the empty weave is always evaluated");
    Ok(finish(winner, target, nodes, clock.elapsed(), Method::Bidirectional))
}
