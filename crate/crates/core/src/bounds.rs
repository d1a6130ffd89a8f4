//! Upper bounds on the diameter that hold for every `(n, s)`.

use serde::{Deserialize, Serialize};

use crate::params::CirculantParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// `max{⌊n/s⌋+1, n-⌊n/s⌋s-2, (⌊n/s⌋+1)s-n-1}` (Du, Hsu, Li, Xu).
    pub du: u64,
    /// `⌊(n+2)/4⌋`, the diameter of `C_n(1,2)` (Göbel, Neutel).
    pub gobel_neutel: u64,
    /// `⌊⌊n/2⌋/s⌋ + ⌈s/2⌉`.
    pub new_bound: u64,
    pub combined: u64,
}

pub fn du_bound(p: &CirculantParams) -> u64 {
    let (n, s) = (p.n() as i64, p.s() as i64);
    let lambda = n / s;
    // Only the first term is guaranteed positive; the others may go negative.
    let max = (lambda + 1).max(n - lambda * s - 2).max((lambda + 1) * s - n - 1);
    max as u64
}

pub fn gobel_neutel_bound(p: &CirculantParams) -> u64 {
    (p.n() + 2) / 4
}

pub fn half_ring_bound(p: &CirculantParams) -> u64 {
    p.half() / p.s() + p.s().div_ceil(2)
}

pub fn bounds_report(p: &CirculantParams) -> BoundsReport {
    let du = du_bound(p);
    let gobel_neutel = gobel_neutel_bound(p);
    let new_bound = half_ring_bound(p);
    BoundsReport { du, gobel_neutel, new_bound, combined: du.min(gobel_neutel).min(new_bound) }
}
