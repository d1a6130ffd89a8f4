//! Closed-form diameters.
//!
//! With `n = λs + γ` the covered cases are: `γ = 0`; `λ > γ > 0` split by the
//! parities of `n` and `s`; and `λ <= γ` with `s = aγ + b`, `0 < b < γ`,
//! `b <= aλ + 1`. Everything else is [`FormulaCase::Uncovered`] and callers
//! fall back to the scan in [`crate::diameter`].

use std::fmt;

use serde::Serialize;

use crate::params::{CirculantParams, DecompositionContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaCase {
    GammaZero,
    /// n even, s odd, λ > γ > 0.
    EvenOdd,
    /// n even, s even, λ > γ > 0.
    EvenEven,
    /// n odd, s odd, λ > γ > 0.
    OddOdd,
    /// n odd, s even, λ > γ > 0.
    OddEven,
    LambdaLeGamma,
    Uncovered,
}

impl FormulaCase {
    /// Stable label used in CSV and JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaCase::GammaZero => "gamma_zero",
            FormulaCase::EvenOdd => "even_odd",
            FormulaCase::EvenEven => "even_even",
            FormulaCase::OddOdd => "odd_odd",
            FormulaCase::OddEven => "odd_even",
            FormulaCase::LambdaLeGamma => "lambda_le_gamma",
            FormulaCase::Uncovered => "uncovered",
        }
    }

    pub fn is_parity_case(self) -> bool {
        matches!(
            self,
            FormulaCase::EvenOdd | FormulaCase::EvenEven | FormulaCase::OddOdd | FormulaCase::OddEven
        )
    }
}

impl fmt::Display for FormulaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: u64,
    pub case: FormulaCase,
    /// Which branch of a piecewise formula applied.
    pub subcase: Option<&'static str>,
}

pub fn classify_case(ctx: &DecompositionContext, p: &CirculantParams) -> FormulaCase {
    let (lambda, gamma) = (ctx.lambda, ctx.gamma);
    if gamma == 0 {
        return FormulaCase::GammaZero;
    }
    if lambda > gamma {
        return match (p.n() % 2 == 0, p.s() % 2 == 0) {
            (true, false) => FormulaCase::EvenOdd,
            (true, true) => FormulaCase::EvenEven,
            (false, false) => FormulaCase::OddOdd,
            (false, true) => FormulaCase::OddEven,
        };
    }
    match (ctx.a, ctx.b) {
        (Some(a), Some(b)) if b > 0 && b <= a * lambda + 1 => FormulaCase::LambdaLeGamma,
        _ => FormulaCase::Uncovered,
    }
}

fn ceil_half(x: u64) -> u64 {
    x.div_ceil(2)
}

pub fn diameter_formula(p: &CirculantParams) -> Option<FormulaResult> {
    let ctx = p.decompose();
    let case = classify_case(&ctx, p);
    let s = p.s();
    let (lambda, gamma) = (ctx.lambda, ctx.gamma);
    let (value, subcase) = match case {
        FormulaCase::Uncovered => return None,
        FormulaCase::GammaZero => ((lambda + s - 1) / 2, None),
        FormulaCase::EvenOdd | FormulaCase::OddOdd => {
            // Same shape; the odd-n variant shifts both min arguments by one.
            let shift = u64::from(case == FormulaCase::OddOdd);
            let left = ceil_half(gamma + shift);
            let right = ceil_half(s - gamma + 1 + shift);
            let label = if left <= right { "gamma_term" } else { "complement_term" };
            (ceil_half(lambda) + (s - 1) / 2 - (left.min(right) - 1), Some(label))
        }
        FormulaCase::EvenEven => {
            if gamma <= 2 * (s - 2).div_ceil(4) {
                (ceil_half(lambda) + (s - gamma) / 2, Some("gamma_small"))
            } else {
                (lambda / 2 + gamma / 2, Some("gamma_large"))
            }
        }
        FormulaCase::OddEven => {
            if gamma == 1 || gamma == s - 1 {
                (ceil_half(lambda) + (s - 2) / 2, Some("gamma_extreme"))
            } else if 3 <= gamma && gamma + 1 <= 2 * s.div_ceil(4) {
                (lambda / 2 + (s - gamma + 1) / 2, Some("gamma_middle"))
            } else {
                (ceil_half(lambda) + (gamma - 1) / 2, Some("otherwise"))
            }
        }
        FormulaCase::LambdaLeGamma => {
            let (a, b) = (ctx.a.unwrap(), ctx.b.unwrap());
            let aux = ctx.aux.expect("b > 0 implies aux terms");
            let parity_odd = ((gamma + b) * ((a - 1) * lambda + 1)) % 2 == 1;
            if aux.p1 == aux.p2 && parity_odd {
                (aux.p1 - 1, Some("p1_minus_one"))
            } else {
                (aux.e1, Some("e1"))
            }
        }
    };
    Some(FormulaResult { value, case, subcase })
}

/// A vertex at distance `diam` from `0`, built per sub-case for the four
/// `λ > γ > 0` parity families. `None` for every other case.
pub fn formula_witness(p: &CirculantParams) -> Option<u64> {
    let ctx = p.decompose();
    let case = classify_case(&ctx, p);
    let n = p.n() as i64;
    let s = p.s() as i64;
    let lam = ctx.lambda as i64;
    let gam = ctx.gamma as i64;
    let ceil = |x: i64| (x + 1).div_euclid(2);

    let i = match case {
        FormulaCase::EvenOdd => {
            // λ and γ share parity here.
            let odd_gamma_limit = 2 * ((s + 3) / 4) - 1;
            let even_gamma_limit = 2 * ((s + 3) / 4);
            if gam % 2 == 1 && gam <= odd_gamma_limit {
                if gam == 1 {
                    (lam - 1) / 2 * s + (s + 1) / 2
                } else if s == 5 {
                    ((lam + 1) / 2 + 1) * s
                } else {
                    (lam + 1) / 2 * s + (gam + 1) / 2 + (s + 1) / 2
                }
            } else if gam % 2 == 0 && gam <= even_gamma_limit {
                if 2 * gam == s + 3 {
                    lam / 2 * s + gam / 2
                } else if s == 3 {
                    (lam / 2 + 1) * s
                } else {
                    lam / 2 * s + (s + 1) / 2 + gam / 2
                }
            } else if gam % 2 == 1 {
                ((lam + 1) / 2 - (s - gam + 2) / 2) * s + (s + 1) / 2
            } else {
                (lam / 2 - (s - gam + 1) / 2 + 1) * s + (s - 1) / 2
            }
        }
        FormulaCase::EvenEven => {
            if gam <= 2 * ((s - 2 + 3) / 4) {
                if lam % 2 == 0 {
                    (lam / 2 - gam / 2) * s + s / 2
                } else if gam == 2 {
                    (lam - 1) / 2 * s + s / 2 + 1
                } else {
                    (lam + 1) / 2 * s + gam / 2 + s / 2 + 1
                }
            } else if lam % 2 == 0 {
                n / 2
            } else {
                (lam - 1) / 2 * s + gam / 2
            }
        }
        FormulaCase::OddOdd => {
            // λ and γ have opposite parity here.
            let odd_gamma_limit = 2 * ((s + 3) / 4) - 1;
            let even_gamma_limit = 2 * ((s + 5 + 3) / 4) - 2;
            if gam % 2 == 1 && gam <= odd_gamma_limit {
                (lam / 2 - 1) * s + (s - 1) / 2 + (gam + 1) / 2
            } else if gam % 2 == 0 && gam <= even_gamma_limit {
                if 2 * gam == s + 3 {
                    (lam + 1) / 2 * s + (s - 1) / 4
                } else if s == 3 {
                    (lam + 1) / 2 * s
                } else {
                    (lam - 1) / 2 * s + (s - 1) / 2 + (gam + 2) / 2
                }
            } else if gam % 2 == 1 {
                (lam / 2 - (s - gam + 2) / 2) * s + (s + 1) / 2
            } else {
                // One chord further than the textbook construction, which
                // lands at distance diam - 1 throughout this branch.
                ((lam + 1) / 2 - (s - gam + 3) / 2 + 1) * s + (s - 1) / 2
            }
        }
        FormulaCase::OddEven => {
            // γ is odd here.
            if gam == 1 || gam == s - 1 {
                (ceil(lam) - 1) * s + s / 2
            } else if 3 <= gam && gam <= 2 * ((s + 3) / 4) - 1 {
                if lam % 2 == 0 {
                    (lam / 2 - (gam - 1) / 2) * s + s / 2 + 1
                } else {
                    (lam - 1) / 2 * s + (gam - 1) / 2 + s / 2 + 1
                }
            } else {
                ceil(lam) * s + (gam - 1) / 2
            }
        }
        FormulaCase::GammaZero | FormulaCase::LambdaLeGamma | FormulaCase::Uncovered => {
            return None
        }
    };
    Some(i.rem_euclid(n) as u64)
}
