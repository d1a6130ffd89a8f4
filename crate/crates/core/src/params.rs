//! Graph parameters and the integer decomposition the diameter theorems consume.

use serde::Serialize;

use crate::{Error, Result};

/// Largest supported vertex count. Every intermediate `t*n + i` stays below
/// `(s + 1) * n <= n^2 / 2`, which fits in 64 bits for this bound.
pub const MAX_N: u64 = 1 << 31;

/// A validated `(n, s)` pair describing the 4-regular circulant `C_n(1, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CirculantParams {
    n: u64,
    s: u64,
}

impl CirculantParams {
    /// Accepts `(n, s)` iff `5 <= n <= 2^31` and `2 <= s <= (n - 1) / 2`.
    pub fn new(n: u64, s: u64) -> Result<Self> {
        if !(5..=MAX_N).contains(&n) {
            return Err(Error::NOutOfRange(n));
        }
        if s < 2 || s > (n - 1) / 2 {
            return Err(Error::SOutOfRange { n, s });
        }
        Ok(CirculantParams { n, s })
    }

    #[inline]
    pub fn n(&self) -> u64 {
        self.n
    }

    #[inline]
    pub fn s(&self) -> u64 {
        self.s
    }

    #[inline]
    pub fn gcd(&self) -> u64 {
        gcd(self.n, self.s)
    }

    /// Upper end of the `t` index range, `s / gcd(n, s)`.
    #[inline]
    pub fn t_max(&self) -> u64 {
        self.s / self.gcd()
    }

    /// `⌊n/2⌋`, the last vertex the diameter scan has to look at.
    #[inline]
    pub fn half(&self) -> u64 {
        self.n / 2
    }

    pub fn check_vertex(&self, i: u64) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { n: self.n, vertex: i })
        }
    }

    /// Circular absolute value `|x|_n = min(x mod n, n - x mod n)`.
    #[inline]
    pub fn circ_abs(&self, x: u64) -> u64 {
        let x = x % self.n;
        x.min(self.n - x)
    }

    pub fn decompose(&self) -> DecompositionContext {
        DecompositionContext::new(self)
    }
}

/// Free-function form of [`CirculantParams::new`].
pub fn validate_params(n: u64, s: u64) -> Result<CirculantParams> {
    CirculantParams::new(n, s)
}

/// Free-function form of [`CirculantParams::decompose`].
pub fn decompose(p: &CirculantParams) -> DecompositionContext {
    DecompositionContext::new(p)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Quantities derived from `n = λs + γ` and, when `γ > 0`, `s = aγ + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecompositionContext {
    pub lambda: u64,
    pub gamma: u64,
    pub g: u64,
    /// `s / γ`; present iff `γ > 0`.
    pub a: Option<u64>,
    /// `s mod γ`; present iff `γ > 0`.
    pub b: Option<u64>,
    /// Present iff `γ > 0` and `b > 0`.
    pub aux: Option<AuxTerms>,
}

/// `p0..p3` and `e1` of the `λ <= γ` theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuxTerms {
    pub p0: u64,
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub e1: u64,
}

impl DecompositionContext {
    fn new(p: &CirculantParams) -> Self {
        let (n, s) = (p.n(), p.s());
        let lambda = n / s;
        let gamma = n % s;
        let (a, b) = if gamma > 0 {
            (Some(s / gamma), Some(s % gamma))
        } else {
            (None, None)
        };
        let aux = match (a, b) {
            (Some(a), Some(b)) if b > 0 => Some(AuxTerms::new(lambda, gamma, a, b)),
            _ => None,
        };
        DecompositionContext {
            lambda,
            gamma,
            g: p.gcd(),
            a,
            b,
            aux,
        }
    }
}

impl AuxTerms {
    fn new(lambda: u64, gamma: u64, a: u64, b: u64) -> Self {
        // b < γ, so γ - b never underflows; (a - 1) is safe since a >= 1.
        let p0 = (lambda + gamma) / 2;
        let p1 = (gamma - b + (a + 1) * lambda + 1) / 2;
        let p2 = (gamma + b + (a - 1) * lambda + 1) / 2;
        let p3 = (b + a * lambda + 1) / 2;
        let e1 = p1.max(p3).min(p0.max(p2));
        AuxTerms { p0, p1, p2, p3, e1 }
    }
}
