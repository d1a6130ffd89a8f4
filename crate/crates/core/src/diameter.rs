//! Exact diameter: the maximum of `d(i)` over `2 <= i <= ⌊n/2⌋`.
//!
//! The scan never divides inside the hot loop. Moving from `i` to `i + 1`
//! bumps every `tn + i` by one and drops every `tn - i` by one, so each
//! quotient/remainder pair is carried forward with a wrap check instead of
//! recomputed. A block of consecutive `i` costs `4 * s/gcd(n,s)` divisions to
//! seed and then only adds, compares and selects, which the compiler
//! vectorizes across `t`.

use serde::Serialize;

use crate::params::CirculantParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Algorithm,
    Formula,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterResult {
    pub value: u64,
    /// Every `i` in `[2, ⌊n/2⌋]` with `d(i) = value`, ascending.
    pub witnesses: Vec<u64>,
    pub method: Method,
}

/// Integer lane for the scanner. `i32` halves memory traffic and doubles the
/// SIMD width whenever every quotient fits.
trait Lane:
    Copy + Ord + From<bool> + TryFrom<u64> + Into<i64>
    + std::ops::Add<Output = Self> + std::ops::Sub<Output = Self>
    + std::ops::AddAssign + std::ops::SubAssign
{
    const ZERO: Self;
    const MAX: Self;
}

impl Lane for i32 {
    const ZERO: Self = 0;
    const MAX: Self = i32::MAX;
}

impl Lane for i64 {
    const ZERO: Self = 0;
    const MAX: Self = i64::MAX;
}

fn lane<T: Lane>(x: u64) -> T {
    T::try_from(x).ok().expect("value fits the chosen lane")
}

/// Incremental state for `d(i)` over a run of consecutive `i`.
struct BlockScanner<T> {
    s: T,
    q: T,
    r: T,
    fwd_q: Vec<T>,
    fwd_r: Vec<T>,
    back_q: Vec<T>,
    back_r: Vec<T>,
}

impl<T: Lane> BlockScanner<T> {
    fn new(p: &CirculantParams, start: u64) -> Self {
        let (n, s) = (p.n(), p.s());
        let t_max = p.t_max() as usize;
        let mut scanner = BlockScanner {
            s: lane(s),
            q: lane(start / s),
            r: lane(start % s),
            fwd_q: Vec::with_capacity(t_max),
            fwd_r: Vec::with_capacity(t_max),
            back_q: Vec::with_capacity(t_max),
            back_r: Vec::with_capacity(t_max),
        };
        for t in 1..=t_max as u64 {
            let fwd = t * n + start;
            let back = t * n - start;
            scanner.fwd_q.push(lane(fwd / s));
            scanner.fwd_r.push(lane(fwd % s));
            scanner.back_q.push(lane(back / s));
            scanner.back_r.push(lane(back % s));
        }
        scanner
    }

    /// `d` at the current vertex, then advance to the next one.
    #[inline]
    fn next(&mut self) -> u64 {
        let s = self.s;
        let s1 = s + T::from(true);
        let s_minus_1 = s - T::from(true);
        // P1 / P2 share q: lengths r + q and 1 + s - r + q.
        let mut best = self.q + self.r.min(s1 - self.r);
        let wrap = self.r == s_minus_1;
        self.r = if wrap { T::ZERO } else { self.r + T::from(true) };
        self.q += T::from(wrap);

        // P1t / P2t on tn + i.
        let mut fwd_best = T::MAX;
        for (q, r) in self.fwd_q.iter_mut().zip(self.fwd_r.iter_mut()) {
            let rv = *r;
            fwd_best = fwd_best.min(*q + rv.min(s1 - rv));
            let wrap = rv == s_minus_1;
            *r = if wrap { T::ZERO } else { rv + T::from(true) };
            *q += T::from(wrap);
        }

        // P3t / P4t on tn - i.
        let mut back_best = T::MAX;
        for (q, r) in self.back_q.iter_mut().zip(self.back_r.iter_mut()) {
            let rv = *r;
            back_best = back_best.min(*q + rv.min(s1 - rv));
            let wrap = rv == T::ZERO;
            *r = if wrap { s_minus_1 } else { rv - T::from(true) };
            *q -= T::from(wrap);
        }

        best = best.min(fwd_best).min(back_best);
        let best: i64 = best.into();
        best as u64
    }
}

/// Whether every quantity the scanner holds fits in an `i32`: the largest
/// is `q_t + s + 1` with `q_t <= (t_max * n + n) / s`.
fn fits_i32(p: &CirculantParams) -> bool {
    let top = (p.t_max() as u128 + 1) * p.n() as u128 / p.s() as u128 + p.s() as u128 + 2;
    top <= i32::MAX as u128
}

/// Calls `visit(i, d(i))` for every `i` in `lo..=hi`.
fn scan_range(p: &CirculantParams, lo: u64, hi: u64, mut visit: impl FnMut(u64, u64)) {
    if lo > hi {
        return;
    }
    if fits_i32(p) {
        let mut scanner = BlockScanner::<i32>::new(p, lo);
        for i in lo..=hi {
            visit(i, scanner.next());
        }
    } else {
        let mut scanner = BlockScanner::<i64>::new(p, lo);
        for i in lo..=hi {
            visit(i, scanner.next());
        }
    }
}

fn block_max(p: &CirculantParams, lo: u64, hi: u64) -> (u64, Vec<u64>) {
    let mut best = 0;
    let mut witnesses = Vec::new();
    scan_range(p, lo, hi, |i, d| {
        if d > best {
            best = d;
            witnesses.clear();
        }
        if d == best {
            witnesses.push(i);
        }
    });
    (best, witnesses)
}

/// Blocks arrive in ascending `i`, so concatenating keeps witnesses sorted.
fn combine(blocks: impl IntoIterator<Item = (u64, Vec<u64>)>) -> DiameterResult {
    let mut value = 0;
    let mut witnesses = Vec::new();
    for (best, w) in blocks {
        if best > value {
            value = best;
            witnesses.clear();
        }
        if best == value {
            witnesses.extend(w);
        }
    }
    DiameterResult { value, witnesses, method: Method::Algorithm }
}

#[cfg(any(feature = "parallel", test))]
fn blocks(p: &CirculantParams, block_len: u64) -> impl Iterator<Item = (u64, u64)> {
    let (lo, hi) = (2, p.half());
    let block_len = block_len.max(1);
    (lo..=hi)
        .step_by(block_len as usize)
        .map(move |start| (start, (start + block_len - 1).min(hi)))
}

/// Single-threaded scan.
pub fn diameter_exact_sequential(p: &CirculantParams) -> DiameterResult {
    combine(std::iter::once(block_max(p, 2, p.half())))
}

/// Scan split into independent index blocks run on the rayon pool.
#[cfg(feature = "parallel")]
pub fn diameter_exact_parallel(p: &CirculantParams) -> DiameterResult {
    use rayon::prelude::*;

    let span = p.half() - 1;
    let pieces = (rayon::current_num_threads() as u64 * 4).max(1);
    // Each block pays t_max divisions to seed, keep blocks long enough to amortize.
    let block_len = span.div_ceil(pieces).max(256);
    let ranges: Vec<(u64, u64)> = blocks(p, block_len).collect();
    let results: Vec<(u64, Vec<u64>)> = ranges
        .into_par_iter()
        .map(|(lo, hi)| block_max(p, lo, hi))
        .collect();
    combine(results)
}

/// Exact diameter with all witnesses in `[2, ⌊n/2⌋]`.
pub fn diameter_exact(p: &CirculantParams) -> DiameterResult {
    #[cfg(feature = "parallel")]
    {
        diameter_exact_parallel(p)
    }
    #[cfg(not(feature = "parallel"))]
    {
        diameter_exact_sequential(p)
    }
}

/// `(i, d(i))` for `0 <= i <= ⌊n/2⌋`.
pub fn eccentricity_profile(p: &CirculantParams) -> Vec<(u64, u64)> {
    let mut out = Vec::with_capacity(p.half() as usize + 1);
    scan_range(p, 0, p.half(), |i, d| out.push((i, d)));
    out
}
