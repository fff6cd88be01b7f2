use crate::braid::{Generator, WeaveWord, WEAVE_EXPONENTS};
use crate::search::{weave_from_exponents, SearchBudget};

/// Lazily yields every weave within `budget`: the empty weave, then all
/// weaves starting with `s1` in depth-first pre-order (exponents tried in the
/// order `-4, -2, +2, +4`), then the same for `s2`.
pub fn enumerate_weaves(budget: &SearchBudget) -> WeaveIter {
    WeaveIter {
        max_exchanges: u64::from(budget.max_exchanges),
        max_slots: budget.max_slots as usize,
        start: None,
        path: Vec::new(),
        cost: 0,
        done: false,
    }
}

pub struct WeaveIter {
    max_exchanges: u64,
    max_slots: usize,
    /// `None` until the empty weave has been produced.
    start: Option<Generator>,
    path: Vec<usize>,
    cost: u64,
    done: bool,
}

impl WeaveIter {
    fn fits(&self, k: usize) -> bool {
        self.cost + WEAVE_EXPONENTS[k].unsigned_abs() <= self.max_exchanges
    }

    fn push(&mut self, k: usize) {
        self.cost += WEAVE_EXPONENTS[k].unsigned_abs();
        self.path.push(k);
    }

    /// Moves to the next node of the current tree; false once it is exhausted.
    fn advance(&mut self) -> bool {
        if self.path.len() < self.max_slots {
            if let Some(k) = (0..WEAVE_EXPONENTS.len()).find(|&k| self.fits(k)) {
                self.push(k);
                return true;
            }
        }
        while let Some(k) = self.path.pop() {
            self.cost -= WEAVE_EXPONENTS[k].unsigned_abs();
            if let Some(next) = (k + 1..WEAVE_EXPONENTS.len()).find(|&n| self.fits(n)) {
                self.push(next);
                return true;
            }
        }
        false
    }

    fn current(&self) -> WeaveWord {
        let exponents: Vec<i64> = self.path.iter().map(|&k| WEAVE_EXPONENTS[k]).collect();
        WeaveWord::try_from(weave_from_exponents(self.start, &exponents)).expect("weave")
    }
}

impl Iterator for WeaveIter {
    type Item = WeaveWord;

    fn next(&mut self) -> Option<WeaveWord> {
        if self.done {
            return None;
        }
        let Some(start) = self.start else {
            self.start = Some(Generator::Sigma1);
            return Some(WeaveWord::empty());
        };
        if self.advance() {
            return Some(self.current());
        }
        if start == Generator::Sigma1 {
            self.start = Some(Generator::Sigma2);
            if self.advance() {
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// Number of weaves [`enumerate_weaves`] yields, by dynamic programming over
/// (slots used, crossings used).
pub fn count_weaves(max_exchanges: u32, max_slots: u32) -> u64 {
    let l = max_exchanges as usize;
    // ways[c] = sequences of the current slot count with exactly c crossings
    let mut ways = vec![0u64; l + 1];
    ways[0] = 1;
    let mut nonempty = 0u64;
    for _ in 0..max_slots {
        let mut next = vec![0u64; l + 1];
        for (c, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for e in WEAVE_EXPONENTS {
                let nc = c + e.unsigned_abs() as usize;
                if nc <= l {
                    next[nc] += w;
                }
            }
        }
        let total: u64 = next.iter().sum();
        if total == 0 {
            break;
        }
        nonempty += total;
        ways = next;
    }
    1 + 2 * nonempty
}
