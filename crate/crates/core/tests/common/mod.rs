//! Test-only reference implementation of the weave search.
//!
//! Shares nothing with the library's search path: generators are rebuilt
//! from scratch, every weave is multiplied out in full, and the distance is
//! taken on `W U^dagger` directly.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;

pub type M2 = [[Complex64; 2]; 2];

pub const TIE: f64 = 1e-12;

pub fn mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            for k in 0..2 {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    out
}

pub fn dagger(a: &M2) -> M2 {
    let mut out = *a;
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[c][r].conj();
        }
    }
    out
}

fn inverse(a: &M2) -> M2 {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    [[a[1][1] / det, -a[0][1] / det], [-a[1][0] / det, a[0][0] / det]]
}

/// `[sigma_1, sigma_2]` with `sigma_2 = F^-1 sigma_1 F`.
pub fn generators() -> [M2; 2] {
    let z = Complex64::new(0.0, 0.0);
    let tau = (5f64.sqrt() - 1.0) / 2.0;
    let s1 = [[Complex64::from_polar(1.0, -4.0 * PI / 5.0), z], [z, Complex64::from_polar(1.0, 3.0 * PI / 5.0)]];
    let f = [
        [Complex64::new(tau, 0.0), Complex64::new(tau.sqrt(), 0.0)],
        [Complex64::new(tau.sqrt(), 0.0), Complex64::new(-tau, 0.0)],
    ];
    let s2 = mul(&mul(&inverse(&f), &s1), &f);
    [s1, s2]
}

pub fn identity() -> M2 {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    [[o, z], [z, o]]
}

/// Full product of a temporal word given as `(generator 1|2, exponent)`.
pub fn evaluate(word: &[(usize, i64)]) -> M2 {
    let gens = generators();
    let mut m = identity();
    for &(g, e) in word {
        let base = if e > 0 { gens[g - 1] } else { dagger(&gens[g - 1]) };
        for _ in 0..e.unsigned_abs() {
            m = mul(&base, &m);
        }
    }
    m
}

/// Distance via `V = W U^dagger`: `sqrt(||V - e^{i phi} I||^2 / 2)` with
/// `e^{i phi}` the phase of `tr V`, which equals `sqrt(2 - |tr V|)` for
/// unitaries.
pub fn distance(w: &M2, u: &M2) -> f64 {
    let v = mul(w, &dagger(u));
    let tr = v[0][0] + v[1][1];
    let phase = if tr.norm() > 0.0 { tr / tr.norm() } else { Complex64::new(1.0, 0.0) };
    let mut sq = 0.0;
    for (r, row) in v.iter().enumerate() {
        for (c, z) in row.iter().enumerate() {
            let id = if r == c { phase } else { Complex64::new(0.0, 0.0) };
            sq += (z - id).norm_sqr();
        }
    }
    (0.5 * sq).sqrt()
}

/// Every weave with `sum |e| <= max_exchanges` and at most `max_slots`
/// slots, as temporal `(generator, exponent)` lists.
pub fn all_weaves(max_exchanges: u64, max_slots: usize) -> Vec<Vec<(usize, i64)>> {
    fn rec(seq: &mut Vec<i64>, cost: u64, l: u64, s: usize, out: &mut Vec<Vec<i64>>) {
        if seq.len() == s {
            return;
        }
        for e in [-4i64, -2, 2, 4] {
            if cost + e.unsigned_abs() <= l {
                seq.push(e);
                out.push(seq.clone());
                rec(seq, cost + e.unsigned_abs(), l, s, out);
                seq.pop();
            }
        }
    }
    let mut seqs = Vec::new();
    rec(&mut Vec::new(), 0, max_exchanges, max_slots, &mut seqs);
    let mut words = vec![Vec::new()];
    for start in [1usize, 2] {
        for s in &seqs {
            words.push(s.iter().enumerate().map(|(k, &e)| (if k % 2 == 0 { start } else { 3 - start }, e)).collect());
        }
    }
    words
}

fn tie_key(w: &[(usize, i64)]) -> (u64, usize, Vec<i64>) {
    let crossings = w.iter().map(|(_, e)| e.unsigned_abs()).sum();
    (crossings, w.first().map_or(0, |f| f.0), w.iter().map(|f| f.1).collect())
}

/// Best weave by brute force: smallest error, ties within `TIE` broken by
/// (crossings, starting generator, exponent sequence).
pub fn naive_search(target: &M2, max_exchanges: u64, max_slots: usize) -> (Vec<(usize, i64)>, f64) {
    let scored: Vec<(f64, Vec<(usize, i64)>)> = all_weaves(max_exchanges, max_slots)
        .into_iter()
        .map(|w| (distance(&evaluate(&w), target), w))
        .collect();
    let best = scored.iter().map(|(e, _)| *e).fold(f64::INFINITY, f64::min);
    let (err, word) = scored
        .into_iter()
        .filter(|(e, _)| *e <= best + TIE)
        .min_by(|a, b| tie_key(&a.1).cmp(&tie_key(&b.1)))
        .expect("at least the empty weave");
    (word, err)
}

pub fn to_unitary(m: &M2) -> braidc_core::Unitary2 {
    braidc_core::Unitary2::new(*m).expect("oracle matrices are unitary")
}

pub fn pairs(word: &braidc_core::BraidWord) -> Vec<(usize, i64)> {
    word.factors().iter().map(|f| (usize::from(f.generator.index()), f.exponent)).collect()
}
