//! BCH codes over GF(q) of length n = (q^m + 1)/λ: defining sets, dimensions
//! from cosets and from closed forms, generator polynomials, the BCH bound,
//! and the LCD/hull verification pair.

use crate::arith::{self, div_ceil, div_floor};
use crate::cosets::{self, CosetParams};
use crate::error::{Error, Result};
use crate::gf::{DensePoly, FieldSpec, FieldTower};
use crate::mat::{self, Mat};
use crate::wdist::DistanceResult;

/// The defining set T of C_(n,q,δ',b): the union of the cosets of
/// b, b+1, ..., b+δ'-2 modulo n, stored as a membership bitmap.
#[derive(Debug, Clone)]
pub struct DefiningSet {
    pub params: CosetParams,
    pub b: u8,
    pub designed: u64,
    member: Vec<bool>,
    count: u64,
}

impl DefiningSet {
    pub fn new(params: CosetParams, designed: u64, b: u8) -> Result<DefiningSet> {
        if b > 1 {
            return Err(Error::Domain("b must be 0 or 1".into()));
        }
        let n = params.n;
        if designed < 2 || designed > n {
            return Err(Error::DesignedRange { designed, max: n });
        }
        let mut member = vec![false; n as usize];
        let mut count = 0u64;
        let q = params.q % n;
        for e in b as u64..=(b as u64 + designed - 2) {
            let mut x = e % n;
            let start = x;
            loop {
                if !member[x as usize] {
                    member[x as usize] = true;
                    count += 1;
                }
                x = arith::mulmod(x, q, n);
                if x == start {
                    break;
                }
            }
        }
        Ok(DefiningSet { params, b, designed, member, count })
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn contains(&self, t: u64) -> bool {
        t < self.params.n && self.member[t as usize]
    }

    /// Members in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as u64)
    }

    /// Coset leaders of the constituent cosets, ascending.
    pub fn coset_leaders(&self) -> Vec<u64> {
        let n = self.params.n;
        let q = self.params.q % n;
        let mut seen = vec![false; n as usize];
        let mut leaders = Vec::new();
        for t in self.elements() {
            if seen[t as usize] {
                continue;
            }
            // first unvisited member of a coset is its leader
            let mut x = t;
            loop {
                seen[x as usize] = true;
                x = arith::mulmod(x, q, n);
                if x == t {
                    break;
                }
            }
            leaders.push(t);
        }
        leaders
    }

    /// T = T^{-1}, where T^{-1} = {n - t mod n : t in T}.
    pub fn is_self_reciprocal(&self) -> bool {
        let n = self.params.n;
        self.elements().all(|t| self.member[((n - t) % n) as usize])
    }

    /// Hull dimension from the defining sets alone: the hull of the code is
    /// cyclic with defining set T ∪ (Z_n \ T^{-1}), so its dimension is the
    /// number of x outside T whose negation lies in T.
    pub fn hull_dimension(&self) -> u64 {
        let n = self.params.n;
        (0..n)
            .filter(|&x| !self.member[x as usize] && self.member[((n - x) % n) as usize])
            .count() as u64
    }

    /// Length of the longest cyclically consecutive run in T, plus one.
    /// Returns n + 1 for the degenerate full set.
    pub fn bch_bound(&self) -> u64 {
        let n = self.params.n;
        if self.count == n {
            return n + 1;
        }
        let mut best = 0u64;
        let mut run = 0u64;
        // Walk twice around to catch the wrap-around run; the full-set case
        // is already excluded.
        for i in 0..2 * n {
            if self.member[(i % n) as usize] {
                run += 1;
                best = best.max(run.min(n));
            } else {
                run = 0;
            }
        }
        best + 1
    }
}

/// dim C = n - |T|, computed from cosets. Always available, even when the
/// extension field needed for the generator polynomial would be too large.
pub fn dimension(params: CosetParams, designed: u64, b: u8) -> Result<u64> {
    let t = DefiningSet::new(params, designed, b)?;
    Ok(params.n - t.len())
}

/// Which closed dimension statement covered a parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimFormula {
    /// λ = 1, even q, m ≡ 2 (mod 4): dimensions 5 and 2m + 5 near the top.
    FullLengthEvenQ,
    /// λ = 1, odd q, m ≡ 2 (mod 4): dimensions 6 and 2m + 6 near the top.
    FullLengthOddQ,
    /// odd q, 2 ≤ λ < q + 1, odd m ≥ 5: windowed k = n - 2m(...) forms.
    ScaledOddM,
    /// λ = 2, m = 3: k = n - 6ε forms.
    CubicHalfLength,
    /// λ = 2, odd q, even m: k = n - 2m(...) forms.
    HalfLengthEvenM,
    /// λ = q + 1, q ≥ 5, odd m ≥ 5: two windows.
    ExtremalLambda,
    /// λ = 4, q = 3, odd m ≥ 5: dimensions 2m + 1 near the top.
    QuarterLengthTernary,
}

impl std::fmt::Display for DimFormula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DimFormula::FullLengthEvenQ => "full length, even q, top leaders",
            DimFormula::FullLengthOddQ => "full length, odd q, top leaders",
            DimFormula::ScaledOddM => "scaled length, odd m windows",
            DimFormula::CubicHalfLength => "half length, m = 3",
            DimFormula::HalfLengthEvenM => "half length, even m windows",
            DimFormula::ExtremalLambda => "lambda = q + 1 windows",
            DimFormula::QuarterLengthTernary => "quarter length ternary, top leaders",
        };
        f.write_str(s)
    }
}

/// Result of the closed-form dimension dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedDim {
    Covered { k: u64, source: DimFormula },
    NotCovered,
}

impl ClosedDim {
    pub fn value(&self) -> Option<u64> {
        match self {
            ClosedDim::Covered { k, .. } => Some(*k),
            ClosedDim::NotCovered => None,
        }
    }
}

/// ceil((delta - 1) * (1 - 1/q)): the count of exponents in [1, delta-1]
/// coprime to q.
fn epsilon(q: u64, delta: u64) -> u64 {
    ((delta - 1) * (q - 1)).div_ceil(q)
}

/// Closed-form dimension where a published window covers the parameters;
/// NotCovered otherwise. `delta` is the narrow-sense designed distance: the
/// described code is C_(n,q,δ,1) for b = 1 and C_(n,q,δ+1,0) for b = 0, whose
/// dimension is one less.
pub fn closed_dimension(q: u64, m: u32, lambda: u64, delta: u64, b: u8) -> Result<ClosedDim> {
    if b > 1 {
        return Err(Error::Domain("b must be 0 or 1".into()));
    }
    let params = CosetParams::new(q, m, lambda)?;
    if delta < 2 || delta + (b == 0) as u64 > params.n {
        return Err(Error::DesignedRange { designed: delta, max: params.n });
    }
    let narrow = closed_dimension_narrow(&params, delta);
    Ok(match narrow {
        ClosedDim::Covered { k, source } => {
            ClosedDim::Covered { k: k - (1 - b as u64), source }
        }
        ClosedDim::NotCovered => ClosedDim::NotCovered,
    })
}

/// Closed-form dimension for a constructed code with designed distance
/// `designed` and starting index b, mapping b = 0 back to the narrow-sense
/// window at δ = designed - 1.
pub fn closed_dimension_for_code(
    q: u64,
    m: u32,
    lambda: u64,
    designed: u64,
    b: u8,
) -> Result<ClosedDim> {
    let delta = if b == 1 { designed } else { designed - 1 };
    if delta < 2 {
        return Ok(ClosedDim::NotCovered);
    }
    closed_dimension(q, m, lambda, delta, b)
}

fn closed_dimension_narrow(params: &CosetParams, delta: u64) -> ClosedDim {
    let (q, m, lambda, n) = (params.q, params.m, params.lambda, params.n);
    let two_m = 2 * m as u64;
    let eps = epsilon(q, delta);
    let odd_q = q % 2 == 1;

    // Full length, m ≡ 2 (mod 4): dimensions pinned by the top coset leaders.
    if lambda == 1 && m % 4 == 2 {
        let delta_i = |i: u64| cosets::closed_delta(q, m, 1, i).ok().map(|r| r.value);
        if odd_q {
            let (d2, d3, d4) = match (delta_i(2), delta_i(3), delta_i(4)) {
                (Some(a), Some(b), Some(c)) => (a, b, c),
                _ => return ClosedDim::NotCovered,
            };
            if delta > d3 && delta <= d2 {
                return ClosedDim::Covered { k: 6, source: DimFormula::FullLengthOddQ };
            }
            if delta > d4 && delta <= d3 {
                return ClosedDim::Covered { k: two_m + 6, source: DimFormula::FullLengthOddQ };
            }
        } else {
            let (d1, d2, d3) = match (delta_i(1), delta_i(2), delta_i(3)) {
                (Some(a), Some(b), Some(c)) => (a, b, c),
                _ => return ClosedDim::NotCovered,
            };
            if delta > d2 && delta <= d1 {
                return ClosedDim::Covered { k: 5, source: DimFormula::FullLengthEvenQ };
            }
            if delta > d3 && delta <= d2 {
                return ClosedDim::Covered { k: two_m + 5, source: DimFormula::FullLengthEvenQ };
            }
        }
        return ClosedDim::NotCovered;
    }

    if !odd_q || lambda == 1 {
        return ClosedDim::NotCovered;
    }

    // Quarter length over GF(3): top-leader window.
    if lambda == 4 && q == 3 && m % 2 == 1 && m >= 5 {
        let d1 = cosets::closed_delta(q, m, 4, 1).ok().map(|r| r.value);
        let d2 = cosets::closed_delta(q, m, 4, 2).ok().map(|r| r.value);
        if let (Some(d1), Some(d2)) = (d1, d2) {
            if delta > d2 && delta <= d1 {
                return ClosedDim::Covered { k: two_m + 1, source: DimFormula::QuarterLengthTernary };
            }
        }
        // fall through: the scaled odd-m windows below may still apply for
        // lambda = 4 < q + 1 only when q > 3, so for q = 3 we stop here.
        if lambda == q + 1 {
            return ClosedDim::NotCovered;
        }
    }

    // λ = q + 1 windows.
    if lambda == q + 1 {
        if q < 5 || m % 2 == 0 || m < 5 {
            return ClosedDim::NotCovered;
        }
        let t = (m - 1) / 2;
        let qt = arith::checked_pow(q, t).unwrap();
        let qt1 = qt * q;
        let (a_top, b_top) = if t % 2 == 1 {
            ((qt1 + 2 * qt + 1) / (q + 1), 2 * (qt1 - 1) / (q + 1) - 1)
        } else {
            ((qt1 + 2 * qt - 1) / (q + 1), 2 * (qt1 + 1) / (q + 1) - 1)
        };
        if delta >= qt + 2 && delta <= a_top {
            return ClosedDim::Covered { k: n - two_m * (eps - 1), source: DimFormula::ExtremalLambda };
        }
        if delta > a_top && delta <= b_top {
            return ClosedDim::Covered { k: n - two_m * (eps - 2), source: DimFormula::ExtremalLambda };
        }
        return ClosedDim::NotCovered;
    }

    // Half length, m = 3.
    if lambda == 2 && m == 3 {
        let qq = (q * q) as i128;
        let (delta, eps, n) = (delta as i128, eps as i128, n as i128);
        if delta - 1 > (qq - 1) / 2 {
            return ClosedDim::NotCovered;
        }
        let first_top = (qq - 1) / 2 - (q as i128 - 3) / 2;
        let k = if delta <= first_top {
            n - 6 * eps
        } else {
            n - 6 * eps + 6 * (delta - (qq - 1) / 2 + (q as i128 - 2) / 2)
        };
        return ClosedDim::Covered { k: k as u64, source: DimFormula::CubicHalfLength };
    }

    // Scaled length, odd m ≥ 5, 2 ≤ λ < q + 1.
    if m % 2 == 1 && m >= 5 && lambda >= 2 && lambda < q + 1 {
        return scaled_odd_m(params, delta, eps);
    }

    // Half length, even m ≥ 4.
    if lambda == 2 && m % 2 == 0 && m >= 4 {
        return half_length_even_m(params, delta, eps);
    }

    ClosedDim::NotCovered
}

/// The windowed dimensions for n = (q^m + 1)/λ, odd m = 2t + 1 ≥ 5,
/// 2 ≤ λ < q + 1. Anchor and step swap between (q^(t+1)+1, q^t-1) for even t
/// and (q^(t+1)-1, q^t+1) for odd t; both are divisible by λ in their case.
fn scaled_odd_m(params: &CosetParams, delta: u64, eps: u64) -> ClosedDim {
    let (q, m, lambda, n) = (
        params.q as i128,
        params.m,
        params.lambda as i128,
        params.n as i128,
    );
    let two_m = 2 * m as i128;
    let t = (m - 1) / 2;
    let qt = arith::checked_pow(params.q, t).unwrap() as i128;
    let qt1 = qt * q;
    let delta = delta as i128;
    let eps = eps as i128;
    let (anchor, double_step) = if t % 2 == 0 {
        ((qt1 + 1) / lambda, 2 * (qt - 1) / lambda)
    } else {
        ((qt1 - 1) / lambda, 2 * (qt + 1) / lambda)
    };
    // Window boundaries around the anchor, swapping floor terms by t parity.
    let (inner_lo, inner_hi) = if t % 2 == 0 {
        (anchor - div_floor(q, lambda), anchor + div_floor(q - 2, lambda))
    } else {
        (anchor - div_floor(q - 2, lambda), anchor + div_floor(q, lambda))
    };
    let upsilon = div_floor(q - 2, lambda) + div_floor(q, lambda);
    let case1_top = anchor + double_step;
    let source = DimFormula::ScaledOddM;
    let cover = |k: i128| ClosedDim::Covered { k: k as u64, source };
    if delta >= 2 && delta <= case1_top {
        if delta <= inner_lo {
            return cover(n - two_m * eps);
        }
        if delta <= inner_hi {
            return cover(n - two_m * eps + two_m * (delta - inner_lo));
        }
        // For λ = 2 and odd t the step 2(q^t + 1)/λ exceeds q^t, so the top
        // of this window reaches past the first shifted exception at
        // anchor + q^t; it then excludes one more coset than the plain count.
        if delta > anchor + qt {
            return cover(n - two_m * (eps - upsilon - 2));
        }
        return cover(n - two_m * (eps - upsilon - 1));
    }
    let q3_floor = div_floor(q - 3, lambda);
    if q3_floor != 0 && delta > case1_top && delta <= case1_top + q3_floor * qt {
        for a in 0..q3_floor {
            if delta > case1_top + a * qt && delta <= anchor + (a + 1) * qt {
                return cover(n - two_m * (eps - upsilon - 2 * a - 2));
            }
            if delta > anchor + (a + 1) * qt && delta <= case1_top + (a + 1) * qt {
                // Same λ = 2, odd t overlap as in case 1: the very top of the
                // window reaches the next shifted exception.
                if delta > anchor + (a + 2) * qt {
                    return cover(n - two_m * (eps - upsilon - 2 * a - 4));
                }
                return cover(n - two_m * (eps - upsilon - 2 * a - 3));
            }
        }
        return ClosedDim::NotCovered;
    }
    let case3_lo = case1_top + q3_floor * qt;
    let outer_top = div_floor(2 * qt1 + 2 * q - 1, lambda) + 1;
    if delta > case3_lo && delta <= outer_top {
        let kappa = if t % 2 == 0 {
            2 * (qt1 + 1) / lambda - div_floor(2 * q + 1, lambda)
        } else {
            2 * (qt1 - 1) / lambda - div_floor(2 * q - 3, lambda)
        };
        let tau = div_ceil((kappa - 1) * (q - 1), q);
        let q1_floor = div_floor(q - 1, lambda);
        if q1_floor == q3_floor {
            if delta <= kappa {
                return cover(n - two_m * (eps - upsilon - 2 * q1_floor - 2));
            }
            return cover(n - two_m * (tau - upsilon - 2 * q1_floor - 2));
        }
        // q1_floor == q3_floor + 1
        if delta <= anchor + q1_floor * qt {
            return cover(n - two_m * (eps - upsilon - 2 * q1_floor));
        }
        if delta <= kappa {
            return cover(n - two_m * (eps - upsilon - 2 * q1_floor - 1));
        }
        return cover(n - two_m * (tau - upsilon - 2 * q1_floor - 1));
    }
    ClosedDim::NotCovered
}

/// The windowed dimensions for n = (q^m + 1)/2 with even m = 2t.
fn half_length_even_m(params: &CosetParams, delta: u64, eps: u64) -> ClosedDim {
    let (q, m, n) = (params.q, params.m, params.n);
    let two_m = 2 * m as u64;
    let t = m / 2;
    let qt = arith::checked_pow(q, t).unwrap();
    let source = DimFormula::HalfLengthEvenM;
    if delta > qt.div_ceil(2) && delta - 1 <= qt {
        return ClosedDim::Covered { k: n - two_m * (eps - 1), source };
    }
    if q >= 5 && delta > qt + 1 && delta - 1 <= (qt * q - 1) / 2 {
        let half = (q - 1) / 2;
        for a in 1..half {
            let k = if delta > a * (qt + 1) && delta <= a * (qt - 1) + qt.div_ceil(2) {
                n - two_m * (eps - 2 * a * a)
            } else if delta > a * (qt - 1) + qt.div_ceil(2) && delta <= a * (qt + 1) + qt.div_ceil(2) {
                n - two_m * (eps - 2 * a * a) + two_m * (delta - (a * (qt - 1) + qt.div_ceil(2)))
            } else if delta > a * (qt + 1) + qt.div_ceil(2) && delta <= (a + 1) * (qt - 1) + 1 {
                n - two_m * (eps - 2 * a * a - 2 * a - 1)
            } else if delta > (a + 1) * (qt - 1) + 1 && delta <= (a + 1) * qt {
                // k slides with delta: each new exponent here is a coprime
                // non-leader, so the dimension stays put while eps grows.
                n - two_m * (eps + (a + 1) * qt - delta - 2 * a * a - 3 * a - 1)
            } else if delta > (a + 1) * qt && delta <= (a + 1) * (qt + 1) {
                // Past (a+1)q^t the new exponents are multiples of q or the
                // first entries of the next exception block, so the dimension
                // freezes at its value for delta = (a+1)q^t. The sieve
                // confirms this; a literal reading of the sliding formula
                // would keep decreasing.
                let eps0 = epsilon(q, (a + 1) * qt);
                n - two_m * (eps0 - 2 * a * a - 3 * a - 1)
            } else {
                continue;
            };
            return ClosedDim::Covered { k, source };
        }
    }
    ClosedDim::NotCovered
}

/// g = lcm of the minimal polynomials of β^i over i in [b, b+δ'-2]: monic,
/// degree |T|, an exact divisor of x^n - 1.
pub fn generator_polynomial(params: CosetParams, designed: u64, b: u8) -> Result<DensePoly> {
    let t = DefiningSet::new(params, designed, b)?;
    let ext_degree = cosets::ord(params.n, params.q)?;
    arith::checked_pow(params.p, params.s * ext_degree as u32)
        .ok_or(Error::FieldBudget { base: params.q, exp: ext_degree as u32 })?;
    let tower = FieldTower::new(params.p, params.s, ext_degree as u32)?;
    let beta = tower.ext().nth_root_of_unity(params.n)?;
    let field = tower.base();
    let mut g = DensePoly::one(params.q);
    for leader in t.coset_leaders() {
        let mi = tower.minimal_polynomial(beta, leader)?;
        g = g.mul(field, &mi)?;
    }
    if g.degree() != Some(t.len() as usize) {
        return Err(Error::InternalCheck(format!(
            "generator degree {:?} != |T| = {}",
            g.degree(),
            t.len()
        )));
    }
    let xn = DensePoly::x_pow_minus_one(field, params.n);
    let (_, rem) = xn.divrem(field, &g)?;
    if !rem.is_zero() {
        return Err(Error::InternalCheck("generator does not divide x^n - 1".into()));
    }
    Ok(g)
}

/// The k x n generator matrix whose row i holds the coefficients of x^i g(x).
pub fn generator_matrix(g: &DensePoly, n: u64) -> Result<Mat> {
    let deg = g.degree().ok_or(Error::ZeroDivisor)?;
    let k = n as usize - deg;
    let mut m = Mat::zero(k, n as usize);
    for i in 0..k {
        for (j, &c) in g.coeffs().iter().enumerate() {
            m.set(i, i + j, u16::try_from(c).map_err(|_| Error::Domain("entry exceeds u16".into()))?);
        }
    }
    Ok(m)
}

/// Outcome of the two independent LCD checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LcdCheck {
    pub lcd: bool,
    pub hull_dim: u64,
}

/// Runs both LCD checks: the combinatorial T = T^{-1} test with the
/// coset-side hull dimension, and the linear-algebra hull k - rank(G G^T).
/// The two must agree; disagreement is an internal error.
pub fn check_lcd(params: CosetParams, designed: u64, b: u8) -> Result<LcdCheck> {
    let t = DefiningSet::new(params, designed, b)?;
    let combinatorial_lcd = t.is_self_reciprocal();
    let hull_cosets = t.hull_dimension();
    let g = generator_polynomial(params, designed, b)?;
    let field = FieldSpec::new(params.p, params.s)?;
    let k = params.n - t.len();
    let g16: Vec<u16> = g.coeffs().iter().map(|&c| c as u16).collect();
    let hull_matrix = if k == 0 {
        0
    } else {
        let gram = mat::gram_of_shifts(&field, &g16, k as usize)?;
        k - mat::rank(&field, &gram)? as u64
    };
    if hull_matrix != hull_cosets || combinatorial_lcd != (hull_matrix == 0) {
        return Err(Error::InternalCheck(format!(
            "hull disagreement: cosets say {hull_cosets}, matrix says {hull_matrix}"
        )));
    }
    Ok(LcdCheck { lcd: combinatorial_lcd, hull_dim: hull_matrix })
}

/// message(x) * g(x), zero-padded to length n.
pub fn encode(field: &FieldSpec, g: &DensePoly, message: &[u64], n: u64) -> Result<Vec<u64>> {
    let deg = g.degree().ok_or(Error::ZeroDivisor)?;
    let k = n as usize - deg;
    if message.len() != k {
        return Err(Error::LengthMismatch { expected: k, got: message.len() });
    }
    let msg = DensePoly::from_indices(field, message.to_vec())?;
    let prod = msg.mul(field, g)?;
    let mut out = prod.coeffs().to_vec();
    out.resize(n as usize, 0);
    Ok(out)
}

/// Full parameter record of one constructed code.
#[derive(Debug, Clone)]
pub struct BchReport {
    pub params: CosetParams,
    pub b: u8,
    pub designed: u64,
    pub dimension: u64,
    pub closed_dimension: Option<u64>,
    pub bch_bound: u64,
    pub distance: DistanceResult,
    pub lcd: bool,
    pub hull_dim: u64,
    pub generator: Option<DensePoly>,
    pub warnings: Vec<String>,
}

/// Options for `build_report`.
#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    /// Codeword budget for exact distance computation; None skips distance
    /// work entirely and reports the BCH bound.
    pub distance_budget: Option<u128>,
    /// Attach the generator polynomial when the extension field fits.
    pub want_generator: bool,
    /// Run the matrix-rank hull check when k^3 stays below this cap.
    pub matrix_check_cap: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            distance_budget: Some(crate::wdist::DEFAULT_CODEWORD_BUDGET),
            want_generator: true,
            matrix_check_cap: 50_000_000,
        }
    }
}

/// Builds the full report for one code: dimension (coset and closed form),
/// BCH bound, distance per the budget, and the LCD verification pair.
pub fn build_report(
    params: CosetParams,
    designed: u64,
    b: u8,
    opts: ReportOptions,
) -> Result<BchReport> {
    let t = DefiningSet::new(params, designed, b)?;
    let k = params.n - t.len();
    let mut warnings = Vec::new();
    let closed = closed_dimension_for_code(params.q, params.m, params.lambda, designed, b)?;
    if let Some(ck) = closed.value() {
        if ck != k {
            warnings.push(format!(
                "closed-form dimension {ck} differs from coset dimension {k}"
            ));
        }
    }
    let bound = t.bch_bound();
    if bound == params.n + 1 {
        warnings.push("defining set is all of Z_n; the code is trivial".into());
    }
    let lcd_comb = t.is_self_reciprocal();
    let hull_cosets = t.hull_dimension();
    let mut hull = hull_cosets;
    let mut lcd = lcd_comb;
    // Generator polynomial and the independent matrix-side hull check, when
    // affordable.
    let field_fits = cosets::ord(params.n, params.q)
        .ok()
        .and_then(|l| arith::checked_pow(params.p, params.s * l as u32))
        .is_some();
    let mut generator = None;
    if opts.want_generator && field_fits {
        let g = generator_polynomial(params, designed, b)?;
        if k > 0 && k.saturating_pow(3) <= opts.matrix_check_cap {
            let lc = check_lcd(params, designed, b)?;
            hull = lc.hull_dim;
            lcd = lc.lcd;
        }
        generator = Some(g);
    } else if opts.want_generator {
        warnings.push("extension field exceeds the integer budget; generator omitted".into());
    }
    let distance = match opts.distance_budget {
        Some(budget) if field_fits => {
            crate::wdist::min_distance(params, designed, b, budget)?
        }
        _ => DistanceResult {
            value: bound,
            exact: false,
            method: crate::wdist::DistanceMethod::BoundOnly,
            work: 0,
        },
    };
    Ok(BchReport {
        params,
        b,
        designed,
        dimension: k,
        closed_dimension: closed.value(),
        bch_bound: bound,
        distance,
        lcd,
        hull_dim: hull,
        generator,
        warnings,
    })
}
