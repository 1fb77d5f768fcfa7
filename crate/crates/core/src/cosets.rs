//! q-cyclotomic cosets modulo n = (q^m + 1)/λ.
//!
//! The brute-force leader sieve is the ground truth of this module; every
//! closed-form leader value, exception set, and classification below is
//! cross-checked against it in the test suite, never the other way round.

use crate::arith::{self, div_ceil, div_floor, mulmod};
use crate::error::{Error, Result};

/// Default cap on the sieve modulus.
pub const DEFAULT_SIEVE_BUDGET: u64 = 10_000_000;

/// Multiplicative order of q modulo n, by direct iteration.
pub fn ord(n: u64, q: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    if arith::gcd(n, q) != 1 {
        return Err(Error::NotCoprime(n, q));
    }
    if n == 1 {
        return Ok(1);
    }
    let q0 = q % n;
    let mut x = q0;
    let mut k = 1u64;
    while x != 1 {
        x = mulmod(x, q0, n);
        k += 1;
    }
    Ok(k)
}

/// One q-cyclotomic coset modulo n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    leader: u64,
    elements: Vec<u64>,
}

impl Coset {
    pub fn leader(&self) -> u64 {
        self.leader
    }

    pub fn size(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// The coset of s modulo n (any coprime pair n, q).
pub fn coset_mod(n: u64, q: u64, s: u64) -> Result<Coset> {
    if arith::gcd(n, q) != 1 {
        return Err(Error::NotCoprime(n, q));
    }
    if s >= n {
        return Err(Error::ResidueRange { residue: s, modulus: n });
    }
    let mut elements = vec![s];
    let mut x = mulmod(s, q % n, n);
    while x != s {
        elements.push(x);
        x = mulmod(x, q % n, n);
    }
    elements.sort_unstable();
    Ok(Coset { leader: elements[0], elements })
}

/// Leader status and coset size of a in one orbit walk.
pub fn orbit_info(n: u64, q: u64, a: u64) -> (bool, u64) {
    let mut size = 1u64;
    let mut is_leader = true;
    let mut x = mulmod(a, q % n, n);
    while x != a {
        if x < a {
            is_leader = false;
        }
        size += 1;
        x = mulmod(x, q % n, n);
    }
    (is_leader, size)
}

/// True iff a is the smallest element of its coset modulo n.
pub fn is_leader_mod(n: u64, q: u64, a: u64) -> Result<bool> {
    if arith::gcd(n, q) != 1 {
        return Err(Error::NotCoprime(n, q));
    }
    if a >= n {
        return Err(Error::ResidueRange { residue: a, modulus: n });
    }
    let mut x = mulmod(a, q % n, n);
    while x != a {
        if x < a {
            return Ok(false);
        }
        x = mulmod(x, q % n, n);
    }
    Ok(true)
}

/// Every coset leader modulo n with its coset size, ascending, by a single
/// sieve pass. This is the module's oracle.
pub fn leader_sieve(n: u64, q: u64, budget: u64) -> Result<Vec<(u64, u64)>> {
    if arith::gcd(n, q) != 1 {
        return Err(Error::NotCoprime(n, q));
    }
    if n > budget {
        return Err(Error::Budget { need: n as u128, budget: budget as u128 });
    }
    let mut visited = vec![false; n as usize];
    let mut out = Vec::new();
    let q0 = q % n;
    for s in 0..n {
        if visited[s as usize] {
            continue;
        }
        let mut x = s;
        let mut size = 0u64;
        loop {
            visited[x as usize] = true;
            size += 1;
            x = mulmod(x, q0, n);
            if x == s {
                break;
            }
        }
        out.push((s, size));
    }
    Ok(out)
}

/// Parameters of the coset universe modulo n = (q^m + 1)/λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetParams {
    pub q: u64,
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub lambda: u64,
    pub n: u64,
}

impl CosetParams {
    pub fn new(q: u64, m: u32, lambda: u64) -> Result<CosetParams> {
        let (p, s) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if m < 2 {
            return Err(Error::Domain("m must be at least 2".into()));
        }
        let qm = arith::checked_pow(q, m).ok_or(Error::FieldBudget { base: q, exp: m })?;
        let full = qm.checked_add(1).ok_or(Error::FieldBudget { base: q, exp: m })?;
        if lambda == 0 || !(q + 1).is_multiple_of(lambda) {
            return Err(Error::NotADivisor { a: lambda, b: q + 1 });
        }
        if full % lambda != 0 {
            return Err(Error::NotADivisor { a: lambda, b: full });
        }
        Ok(CosetParams { q, p, s, m, lambda, n: full / lambda })
    }

    /// q^m + 1, the full-length modulus this n divides.
    pub fn full_modulus(&self) -> u64 {
        self.n * self.lambda
    }

    pub fn coset(&self, s: u64) -> Result<Coset> {
        coset_mod(self.n, self.q, s)
    }

    pub fn is_leader(&self, a: u64) -> Result<bool> {
        is_leader_mod(self.n, self.q, a)
    }

    /// All coset leaders with sizes, ascending.
    pub fn all_leaders(&self, budget: u64) -> Result<Vec<(u64, u64)>> {
        leader_sieve(self.n, self.q, budget)
    }

    /// The k largest leaders with coset sizes, descending.
    pub fn largest_leaders(&self, k: usize, budget: u64) -> Result<Vec<(u64, u64)>> {
        let mut all = self.all_leaders(budget)?;
        if k > all.len() {
            return Err(Error::Domain(format!(
                "asked for {k} leaders but only {} exist",
                all.len()
            )));
        }
        all.reverse();
        all.truncate(k);
        Ok(all)
    }
}

/// Arithmetic (non-enumerative) leader test modulo q^m + 1: a is a leader iff
/// it does not exceed the parity-dependent cap and no l in the derived open
/// interval (a(q^i - 1)/(q^m + 1), a(q^i + 1)/(q^m + 1)) stays within the
/// stated bound for some 1 <= i < m.
pub fn is_leader_arithmetic(q: u64, m: u32, a: u64) -> Result<bool> {
    if q < 2 || m < 2 {
        return Err(Error::Domain("need q >= 2 and m >= 2".into()));
    }
    let qm = arith::checked_pow(q, m).ok_or(Error::FieldBudget { base: q, exp: m })? as u128;
    if a as u128 > qm {
        return Err(Error::ResidueRange { residue: a, modulus: (qm + 1) as u64 });
    }
    let n = qm + 1;
    let even_q = q.is_multiple_of(2);
    let cap = if even_q {
        (qm * q as u128 + q as u128) / (2 * (q as u128 + 1))
    } else {
        n / 2
    };
    if a as u128 > cap {
        return Ok(false);
    }
    let a = a as u128;
    if a == 0 {
        return Ok(true);
    }
    let mut qi = 1u128;
    for _ in 1..m {
        qi *= q as u128;
        let l_max = if even_q {
            (qi - 1) * q as u128 / (2 * (q as u128 + 1))
        } else {
            (qi - 1) / 2
        };
        if l_max == 0 {
            continue;
        }
        // smallest integer strictly above a(q^i - 1)/n
        let l_first = a * (qi - 1) / n + 1;
        if l_first <= l_max && l_first * n < a * (qi + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the λ-scaling comparison: leader status and coset size of a
/// modulo n = (q^m + 1)/λ against λa modulo q^m + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalingCheck {
    pub leader_scaled: bool,
    pub size_scaled: u64,
    pub leader_full: bool,
    pub size_full: u64,
}

impl ScalingCheck {
    /// The two sides must agree for odd q and λ | q + 1.
    pub fn agrees(&self) -> bool {
        self.leader_scaled == self.leader_full && self.size_scaled == self.size_full
    }
}

/// Compares leader status of a modulo (q^m + 1)/λ with λa modulo q^m + 1.
pub fn lambda_scaling_check(q: u64, m: u32, lambda: u64, a: u64) -> Result<ScalingCheck> {
    if q.is_multiple_of(2) {
        return Err(Error::Domain("the scaling equivalence requires odd q".into()));
    }
    let params = CosetParams::new(q, m, lambda)?;
    if a == 0 || a >= params.n {
        return Err(Error::ResidueRange { residue: a, modulus: params.n });
    }
    let full = params.full_modulus();
    let (leader_scaled, size_scaled) = orbit_info(params.n, q, a);
    let (leader_full, size_full) = orbit_info(full, q, a * lambda);
    Ok(ScalingCheck { leader_scaled, size_scaled, leader_full, size_full })
}

/// Which closed-form family produced a leader value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeaderFormula {
    /// m = 2: the interval structure of leaders modulo q^2 + 1.
    Quadratic,
    /// λ = 1, odd q: the largest leader (q^m + 1)/2.
    FullLargest,
    /// λ = 1, odd q, odd m: second largest (q-1)(q^m+1)/(2(q+1)).
    FullSecondOddM,
    /// λ = 1, odd q, odd m: third and fourth largest.
    FullThirdFourthOddM,
    /// λ = 1, even m: telescoping-product leader (second largest for odd q,
    /// largest for even q).
    FullTelescoping,
    /// λ = 1, even q, m ≡ 2 (mod 4): second and third largest.
    FullEvenQSecondThird,
    /// λ = 1, odd q, m ≡ 2 (mod 4): third and fourth largest.
    FullOddQThirdFourth,
    /// λ = 2, odd q, m ≡ 2 (mod 4): first and second largest.
    HalfLargestPair,
    /// λ = 2, q ≡ 3 (mod 4), odd m: first three largest.
    HalfOddMTriple,
    /// λ = 4, q = 3, odd m: first and second largest.
    QuarterTernaryPair,
}

impl std::fmt::Display for LeaderFormula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LeaderFormula::Quadratic => "quadratic-length interval structure",
            LeaderFormula::FullLargest => "full length, largest leader",
            LeaderFormula::FullSecondOddM => "full length, odd m, second largest",
            LeaderFormula::FullThirdFourthOddM => "full length, odd m, third/fourth largest",
            LeaderFormula::FullTelescoping => "full length, telescoping product",
            LeaderFormula::FullEvenQSecondThird => "full length, even q, second/third largest",
            LeaderFormula::FullOddQThirdFourth => "full length, odd q, third/fourth largest",
            LeaderFormula::HalfLargestPair => "half length, first/second largest",
            LeaderFormula::HalfOddMTriple => "half length, odd m, first three largest",
            LeaderFormula::QuarterTernaryPair => "quarter length ternary, first/second largest",
        };
        f.write_str(s)
    }
}

/// A closed-form i-th largest coset leader with its expected coset size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeaderFormulaResult {
    pub value: u64,
    pub coset_size: u64,
    pub source: LeaderFormula,
    pub applicability: &'static str,
}

fn pow_u128(q: u64, e: u32) -> u128 {
    let mut acc = 1u128;
    for _ in 0..e {
        acc *= q as u128;
    }
    acc
}

/// Writes even m as 2^(r-1) * (2t + 1); returns (r, t) with r >= 2, or None
/// when m is a power of two (t = 0) or odd.
fn even_m_shape(m: u32) -> Option<(u32, u32)> {
    if !m.is_multiple_of(2) {
        return None;
    }
    let r = m.trailing_zeros() + 1;
    let odd = m >> (r - 1);
    let t = (odd - 1) / 2;
    if t == 0 {
        None
    } else {
        Some((r, t))
    }
}

/// Telescoping product (q^{2^x} - 1)(q^{2^(x-1)} - 1) ... (q^{2^0} - 1).
fn telescoping(q: u64, x: u32) -> u128 {
    let mut acc = 1u128;
    for j in 0..=x {
        acc *= pow_u128(q, 1 << j) - 1;
    }
    acc
}

/// Leaders modulo q^2 + 1: union of intervals, plus a singleton for odd q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M2Leaders {
    pub q: u64,
    /// [lo, hi] windows of leaders, ascending; every member has coset size 4.
    pub intervals: Vec<(u64, u64)>,
    /// (q^2 + 1)/2 for odd q, with coset size 1.
    pub singleton: Option<u64>,
}

impl M2Leaders {
    /// Nonzero leaders in descending order with coset sizes.
    pub fn descending(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        if let Some(s) = self.singleton {
            out.push((s, 1));
        }
        for &(lo, hi) in self.intervals.iter().rev() {
            for v in (lo..=hi).rev() {
                out.push((v, 4));
            }
        }
        out
    }
}

/// The leader intervals modulo q^2 + 1.
pub fn m2_leader_intervals(q: u64) -> Result<M2Leaders> {
    if q < 2 {
        return Err(Error::Domain("q must be at least 2".into()));
    }
    let (intervals, singleton) = if q.is_multiple_of(2) {
        let ls = (0..q / 2).map(|l| (l * (q + 1) + 1, (l + 1) * (q - 1))).collect();
        (ls, None)
    } else {
        let ls = (0..=(q - 3) / 2).map(|l| (l * (q + 1) + 1, (l + 1) * (q - 1))).collect();
        (ls, Some((q * q).div_ceil(2)))
    };
    Ok(M2Leaders { q, intervals, singleton })
}

/// The i-th largest coset leader modulo (q^m + 1)/λ in closed form, where one
/// is known. i counts from 1 (the largest).
pub fn closed_delta(q: u64, m: u32, lambda: u64, i: u64) -> Result<LeaderFormulaResult> {
    let not_covered = || Error::NoClosedForm { q, m, lambda, i };
    if i == 0 {
        return Err(not_covered());
    }
    CosetParams::new(q, m, lambda)?;
    let two_m = 2 * m as u64;
    let done = |value: u128, coset_size: u64, source: LeaderFormula, appl: &'static str| {
        Ok(LeaderFormulaResult {
            value: u64::try_from(value).expect("leader fits u64"),
            coset_size,
            source,
            applicability: appl,
        })
    };
    if lambda == 1 && m == 2 {
        let leaders = m2_leader_intervals(q)?.descending();
        // 0 is always the final leader.
        if i as usize == leaders.len() + 1 {
            return done(0, 1, LeaderFormula::Quadratic, "m = 2, any q");
        }
        return match leaders.get(i as usize - 1) {
            Some(&(v, sz)) => done(v as u128, sz, LeaderFormula::Quadratic, "m = 2, any q"),
            None => Err(not_covered()),
        };
    }
    let qm = pow_u128(q, m);
    if lambda == 1 && q % 2 == 1 {
        if m % 2 == 1 && m >= 5 {
            let appl = "lambda = 1, odd q, odd m >= 5, i <= 4";
            let qm2 = pow_u128(q, m - 2);
            return match i {
                1 => done(qm.div_ceil(2), 1, LeaderFormula::FullLargest, appl),
                2 => done(
                    (q as u128 - 1) * (qm + 1) / (2 * (q as u128 + 1)),
                    2,
                    LeaderFormula::FullSecondOddM,
                    appl,
                ),
                3 => done(
                    (q as u128 - 1) * (qm - 2 * qm2 - 1) / (2 * (q as u128 + 1)),
                    two_m,
                    LeaderFormula::FullThirdFourthOddM,
                    appl,
                ),
                4 => done(
                    (q as u128 - 1) * (qm - 2 * qm2 - 1) / (2 * (q as u128 + 1))
                        - (q as u128 - 1) * (q as u128 - 1),
                    two_m,
                    LeaderFormula::FullThirdFourthOddM,
                    appl,
                ),
                _ => Err(not_covered()),
            };
        }
        if let Some((r, _)) = even_m_shape(m) {
            let appl = "lambda = 1, odd q, m = 2^(r-1)(2t+1), t >= 1";
            let denom = pow_u128(q, 1 << (r - 1)) + 1;
            match i {
                1 => return done(qm.div_ceil(2), 1, LeaderFormula::FullLargest, appl),
                2 => {
                    let phi = (q as u128 - 1) / 2 * telescoping(q, r - 2);
                    return done((qm + 1) / denom * phi, 1 << r, LeaderFormula::FullTelescoping, appl);
                }
                3 | 4 if r == 2 && m >= 6 => {
                    let appl34 = "lambda = 1, odd q, m ≡ 2 (mod 4), m >= 6, i in {3, 4}";
                    let qsq = q as u128 * q as u128;
                    let qm4 = pow_u128(q, m - 4);
                    let d3 =
                        (q as u128 - 1) * (q as u128 - 1) * (qm - 2 * qm4 - 1) / (2 * (qsq + 1));
                    if i == 3 {
                        return done(d3, two_m, LeaderFormula::FullOddQThirdFourth, appl34);
                    }
                    let drop = if m == 6 {
                        q as u128 * (q as u128 - 1) * (q as u128 - 1)
                    } else {
                        (q as u128 - 1) * (q as u128 - 1) * (qsq - 1)
                    };
                    return done(d3 - drop, two_m, LeaderFormula::FullOddQThirdFourth, appl34);
                }
                _ => return Err(not_covered()),
            }
        }
        return Err(not_covered());
    }
    if lambda == 1 && q.is_multiple_of(2) {
        if let Some((r, _)) = even_m_shape(m) {
            let appl = "lambda = 1, even q, m = 2^(r-1)(2t+1), t >= 1";
            let denom = pow_u128(q, 1 << (r - 1)) + 1;
            match i {
                1 => {
                    let phi = q as u128 / 2 * telescoping(q, r - 2);
                    let size = 1u64 << r;
                    return done((qm + 1) / denom * phi, size, LeaderFormula::FullTelescoping, appl);
                }
                2 | 3 if r == 2 && m >= 6 => {
                    let appl23 = "lambda = 1, even q, m ≡ 2 (mod 4), m >= 6, i in {2, 3}";
                    let qsq = q as u128 * q as u128;
                    let qm4 = pow_u128(q, m - 4);
                    let d2 = q as u128 * (q as u128 - 1) * (qm - 2 * qm4 - 1) / (2 * (qsq + 1));
                    if i == 2 {
                        return done(d2, two_m, LeaderFormula::FullEvenQSecondThird, appl23);
                    }
                    let drop = if m == 6 {
                        (q as u128 - 1) * qsq
                    } else {
                        q as u128 * (q as u128 - 1) * (qsq - 1)
                    };
                    return done(d2 - drop, two_m, LeaderFormula::FullEvenQSecondThird, appl23);
                }
                _ => return Err(not_covered()),
            }
        }
        return Err(not_covered());
    }
    if lambda == 2 && q % 2 == 1 {
        if m % 4 == 2 && m >= 6 && i <= 2 {
            let appl = "lambda = 2, odd q, m ≡ 2 (mod 4), m >= 6, i <= 2";
            let qsq = q as u128 * q as u128;
            let qq = (q as u128 - 1) * (q as u128 - 1);
            if i == 1 {
                return done(qq * (qm + 1) / (4 * (qsq + 1)), 4, LeaderFormula::HalfLargestPair, appl);
            }
            let qm4 = pow_u128(q, m - 4);
            return done(
                qq * (qm - 2 * qm4 - 1) / (4 * (qsq + 1)),
                two_m,
                LeaderFormula::HalfLargestPair,
                appl,
            );
        }
        if q % 4 == 3 && m % 2 == 1 && m >= 5 && i <= 3 {
            let appl = "lambda = 2, q ≡ 3 (mod 4), odd m >= 5, i <= 3";
            let qm1 = pow_u128(q, m - 1);
            return match i {
                1 => done((qm + 1) / 4, 1, LeaderFormula::HalfOddMTriple, appl),
                2 => done((qm - 2 * qm1 - 1) / 4, two_m, LeaderFormula::HalfOddMTriple, appl),
                _ => done(
                    (qm - 2 * qm1 - 1) / 4 - (q as u128 - 1) / 2,
                    two_m,
                    LeaderFormula::HalfOddMTriple,
                    appl,
                ),
            };
        }
        return Err(not_covered());
    }
    if lambda == 4 && q == 3 && m % 2 == 1 && m >= 5 && i <= 2 {
        let appl = "lambda = 4, q = 3, odd m >= 5, i <= 2";
        let d1 = (pow_u128(3, m - 1) - 1) / 8;
        let v = if i == 1 { d1 } else { d1 - 2 };
        return done(v, two_m, LeaderFormula::QuarterTernaryPair, appl);
    }
    Err(not_covered())
}

/// Families of exceptional non-leaders inside otherwise all-leader ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionFamily {
    /// n = q^m + 1, odd m: the q - 1 values just below q^((m+1)/2).
    BelowMidPower,
    /// n = q^m + 1, odd q, m = 2t + 1 >= 5: q^(t+1) ± γ and q^(t+1) + αq^t ± 1.
    MidPowerSpikes,
    /// n = q^m + 1, odd q, m = 2t >= 4: {q^t + 1, 2q^t - 1, 2q^t + 1, 2q^t + 2}.
    EvenMidPower,
    /// The window [(2q^(t+1) - 2q + 1)/λ, (2q^(t+1) + 2q - 1)/λ] that contains
    /// no leaders at all (odd q, m = 2t + 1 >= 5, λ | q + 1).
    DeadWindow,
    /// λ-scaled spike images T1 ∪ T2 ∪ T3 (odd q, 2 <= λ < q + 1, odd m >= 5).
    SetT,
    /// Full-length mid-range exceptions A1 ∪ A2 ∪ A3 (m = 2t >= 8).
    SetA,
    /// Half-length images X1 ∪ ... ∪ X5 (odd q, λ = 2, even m).
    SetX,
    /// λ = q + 1 images Y1 ∪ Y2 (odd q, odd m >= 5).
    SetY,
    /// λ = q + 1 single exception (q^((m+1)/2) - (-1)^((m+1)/2))/(q + 1).
    QuotientFixedPoint,
}

/// An instantiated exception family: named parts, their union, and the index
/// window the family describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionSet {
    pub family: ExceptionFamily,
    /// [lo, hi] window of the surrounding all-leader (or dead) range.
    pub range: (u64, u64),
    /// Named sub-sets in the order the family defines them.
    pub parts: Vec<(String, Vec<u64>)>,
}

impl ExceptionSet {
    /// Union of all parts, sorted and deduplicated.
    pub fn members(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.parts.iter().flat_map(|(_, v)| v.iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn contains(&self, x: u64) -> bool {
        self.parts.iter().any(|(_, v)| v.contains(&x))
    }
}

fn part(label: &str, mut v: Vec<u64>) -> (String, Vec<u64>) {
    v.sort_unstable();
    v.dedup();
    (label.to_string(), v)
}

/// Instantiates one exception family for (q, m, λ).
pub fn exception_set(q: u64, m: u32, lambda: u64, family: ExceptionFamily) -> Result<ExceptionSet> {
    CosetParams::new(q, m, lambda)?;
    let odd_q = q % 2 == 1;
    let bad = |msg: &str| Err(Error::Domain(msg.to_string()));
    match family {
        ExceptionFamily::BelowMidPower => {
            if lambda != 1 || m.is_multiple_of(2) || m < 3 {
                return bad("below-mid-power family needs lambda = 1 and odd m >= 3");
            }
            let mid = arith::checked_pow(q, m.div_ceil(2)).unwrap();
            let members: Vec<u64> = (1..q).map(|c| mid - c).collect();
            Ok(ExceptionSet {
                family,
                range: (1, mid),
                parts: vec![part("below-mid", members)],
            })
        }
        ExceptionFamily::MidPowerSpikes => {
            if lambda != 1 || !odd_q || m.is_multiple_of(2) || m < 5 {
                return bad("mid-power-spike family needs lambda = 1, odd q, odd m >= 5");
            }
            let t = (m - 1) / 2;
            let qt = arith::checked_pow(q, t).unwrap();
            let qt1 = qt * q;
            let mut near = Vec::new();
            for g in 1..q {
                near.push(qt1 - g);
                near.push(qt1 + g);
            }
            let mut shifted = Vec::new();
            for al in 1..q {
                shifted.push(qt1 + al * qt - 1);
                shifted.push(qt1 + al * qt + 1);
            }
            Ok(ExceptionSet {
                family,
                range: (1, 2 * qt1 - 2 * q),
                parts: vec![part("near-power", near), part("shifted-power", shifted)],
            })
        }
        ExceptionFamily::EvenMidPower => {
            if lambda != 1 || !odd_q || !m.is_multiple_of(2) || m < 4 {
                return bad("even-mid-power family needs lambda = 1, odd q, even m >= 4");
            }
            let qt = arith::checked_pow(q, m / 2).unwrap();
            Ok(ExceptionSet {
                family,
                range: (1, 2 * qt + 2),
                parts: vec![part("edge", vec![qt + 1, 2 * qt - 1, 2 * qt + 1, 2 * qt + 2])],
            })
        }
        ExceptionFamily::DeadWindow => {
            if !odd_q || m.is_multiple_of(2) || m < 5 || lambda == q + 1 {
                return bad("dead-window family needs odd q, odd m >= 5, lambda < q + 1");
            }
            let t = (m - 1) / 2;
            let qt1 = arith::checked_pow(q, t + 1).unwrap() as i128;
            let lo = div_ceil(2 * qt1 - 2 * q as i128 + 1, lambda as i128) as u64;
            let hi = div_floor(2 * qt1 + 2 * q as i128 - 1, lambda as i128) as u64;
            Ok(ExceptionSet {
                family,
                range: (lo, hi),
                parts: vec![part("window", (lo..=hi).collect())],
            })
        }
        ExceptionFamily::SetT => {
            if !odd_q || m.is_multiple_of(2) || m < 5 || lambda < 2 || lambda > q {
                return bad("T family needs odd q, odd m >= 5, 2 <= lambda < q + 1");
            }
            let t = (m - 1) / 2;
            let l = lambda as i128;
            let qt = arith::checked_pow(q, t).unwrap() as i128;
            let qt1 = qt * q as i128;
            // Anchor and step both divisible by λ, by the parity of t.
            let (anchor, step) = if t.is_multiple_of(2) {
                ((qt1 + 1) / l, (qt - 1) / l)
            } else {
                ((qt1 - 1) / l, (qt + 1) / l)
            };
            let (c_lo, c_hi) = if t.is_multiple_of(2) {
                (div_ceil(-(q as i128), l), div_floor(q as i128 - 2, l))
            } else {
                (div_ceil(-(q as i128 - 2), l), div_floor(q as i128, l))
            };
            let t1: Vec<u64> = (c_lo..=c_hi).map(|c| (anchor + c) as u64).collect();
            let b_hi2 = div_floor(q as i128 - 1, l);
            let t2: Vec<u64> = (1..=b_hi2).map(|b| (anchor + b * qt) as u64).collect();
            let b_hi3 = div_floor(q as i128 - 3, l);
            let t3: Vec<u64> = (0..=b_hi3).map(|b| (anchor + 2 * step + b * qt) as u64).collect();
            let top = div_ceil(2 * qt1 - 2 * q as i128 + 1, l) - 1;
            Ok(ExceptionSet {
                family,
                range: (1, top as u64),
                parts: vec![part("T1", t1), part("T2", t2), part("T3", t3)],
            })
        }
        ExceptionFamily::SetA => {
            if lambda != 1 || !m.is_multiple_of(2) || m < 8 {
                return bad("A family needs lambda = 1 and even m >= 8");
            }
            let t = m / 2;
            let qt = arith::checked_pow(q, t).unwrap();
            let qt1 = qt * q;
            let mut a1 = Vec::new();
            let mut a2 = Vec::new();
            for at in 1..q {
                for a0 in 1..=at {
                    a1.push(at * qt + a0);
                }
                for a0 in 1..at {
                    a2.push(at * qt - a0);
                }
            }
            let a3: Vec<u64> =
                (qt1 - q * q + 1..=qt1).filter(|&a| a % q != 0).collect();
            Ok(ExceptionSet {
                family,
                range: (qt, qt1),
                parts: vec![part("A1", a1), part("A2", a2), part("A3", a3)],
            })
        }
        ExceptionFamily::SetX => {
            if !odd_q || lambda != 2 || !m.is_multiple_of(2) || m < 4 {
                return bad("X family needs odd q, lambda = 2, even m >= 4");
            }
            let t = m / 2;
            let qt = arith::checked_pow(q, t).unwrap();
            let qt1 = qt * q;
            let half = (q - 1) / 2;
            let mut x1 = Vec::new();
            let mut x2 = Vec::new();
            let mut x3 = Vec::new();
            for a in 1..=half {
                for b in 1..=a {
                    x1.push(a * qt + b);
                }
                for b in 1..a {
                    x2.push(a * qt - b);
                }
            }
            for a in 1..half {
                for b in 1..=a {
                    x3.push(a * qt + (qt - 1) / 2 + b);
                    x3.push(a * qt + qt.div_ceil(2) - b);
                }
            }
            let x4: Vec<u64> = (0..half).map(|a| a * (qt + 1) + qt.div_ceil(2)).collect();
            let x5: Vec<u64> =
                ((qt1 - q * q) / 2 + 1..=(qt1 - 1) / 2).filter(|&i| i % q != 0).collect();
            Ok(ExceptionSet {
                family,
                range: (qt.div_ceil(2), (qt1 - 1) / 2),
                parts: vec![
                    part("X1", x1),
                    part("X2", x2),
                    part("X3", x3),
                    part("X4", x4),
                    part("X5", x5),
                ],
            })
        }
        ExceptionFamily::SetY => {
            if !odd_q || lambda != q + 1 || m.is_multiple_of(2) || m < 5 {
                return bad("Y family needs odd q, lambda = q + 1, odd m >= 5");
            }
            let t = (m - 1) / 2;
            let qt = arith::checked_pow(q, t).unwrap();
            let qt1 = qt * q;
            let (base, y2) = if t % 2 == 1 {
                (2 * (qt1 - 1) / (q + 1), (qt1 + 2 * qt + 1) / (q + 1))
            } else {
                (2 * (qt1 + 1) / (q + 1), (qt1 + 2 * qt - 1) / (q + 1))
            };
            // For q = 3 the window around 2q^(t+1) holds only two multiples
            // of q + 1; which side of the base they fall on follows the
            // parity of t (the sieve pins this down: modulo (3^7+1)/4 the
            // non-leaders next to the base are 40 and 41, not 39 and 40).
            let y1 = if q == 3 {
                if t % 2 == 1 {
                    vec![base, base + 1]
                } else {
                    vec![base - 1, base]
                }
            } else {
                vec![base - 1, base, base + 1]
            };
            Ok(ExceptionSet {
                family,
                range: (qt + 1, (2 * qt1 + 2 * q - 1) / (q + 1)),
                parts: vec![part("Y1", y1), part("Y2", vec![y2])],
            })
        }
        ExceptionFamily::QuotientFixedPoint => {
            if !odd_q || lambda != q + 1 || m.is_multiple_of(2) || m < 5 {
                return bad("fixed-point family needs odd q, lambda = q + 1, odd m >= 5");
            }
            let h = m.div_ceil(2);
            let qh = arith::checked_pow(q, h).unwrap() as i128;
            let sign: i128 = if h.is_multiple_of(2) { 1 } else { -1 };
            let v = ((qh - sign) / (q as i128 + 1)) as u64;
            Ok(ExceptionSet {
                family,
                range: (1, arith::checked_pow(q, (m - 1) / 2).unwrap()),
                parts: vec![part("fixed-point", vec![v])],
            })
        }
    }
}

/// Classification of a residue by the closed-form leader characterizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeaderClass {
    Leader { size: u64 },
    NonLeader,
    OutsideCoveredRange,
}

/// Classifies i modulo (q^m + 1)/λ without enumeration, where a closed
/// characterization applies. Positive multiples of q are never leaders
/// (i/q lies in the same coset), so they classify immediately.
pub fn classify_leader(q: u64, m: u32, lambda: u64, i: u64) -> Result<LeaderClass> {
    let params = CosetParams::new(q, m, lambda)?;
    if i >= params.n {
        return Err(Error::ResidueRange { residue: i, modulus: params.n });
    }
    if i == 0 {
        return Ok(LeaderClass::Leader { size: 1 });
    }
    if i.is_multiple_of(q) {
        return Ok(LeaderClass::NonLeader);
    }
    let two_m = 2 * m as u64;
    let odd_q = q % 2 == 1;
    if lambda == 1 {
        if m % 2 == 1 {
            if odd_q && m >= 5 {
                let t = (m - 1) / 2;
                let qt1 = arith::checked_pow(q, t + 1).unwrap();
                if i < 2 * qt1 - 2 * q + 1 {
                    let spikes = exception_set(q, m, 1, ExceptionFamily::MidPowerSpikes)?;
                    return Ok(if spikes.contains(i) {
                        LeaderClass::NonLeader
                    } else {
                        LeaderClass::Leader { size: two_m }
                    });
                }
                if i < 2 * qt1 + 2 * q {
                    return Ok(LeaderClass::NonLeader);
                }
                return Ok(LeaderClass::OutsideCoveredRange);
            }
            // odd m >= 3, any q. The exceptional values here are only known
            // to miss the full-orbit claim; some are leaders of a smaller
            // coset (13 modulo 4^3 + 1 has orbit size 2), so they stay
            // unclassified.
            let mid = arith::checked_pow(q, m.div_ceil(2)).unwrap();
            if i <= mid {
                let tail = exception_set(q, m, 1, ExceptionFamily::BelowMidPower)?;
                return Ok(if tail.contains(i) {
                    LeaderClass::OutsideCoveredRange
                } else {
                    LeaderClass::Leader { size: two_m }
                });
            }
            return Ok(LeaderClass::OutsideCoveredRange);
        }
        if odd_q && m >= 4 {
            let qt = arith::checked_pow(q, m / 2).unwrap();
            if i <= 2 * qt + 2 {
                let edge = exception_set(q, m, 1, ExceptionFamily::EvenMidPower)?;
                return Ok(if edge.contains(i) {
                    LeaderClass::NonLeader
                } else {
                    LeaderClass::Leader { size: two_m }
                });
            }
            if m >= 8 && i >= qt && i <= qt * q {
                let a = exception_set(q, m, 1, ExceptionFamily::SetA)?;
                return Ok(if a.contains(i) {
                    LeaderClass::NonLeader
                } else {
                    LeaderClass::Leader { size: two_m }
                });
            }
        }
        return Ok(LeaderClass::OutsideCoveredRange);
    }
    if !odd_q {
        return Ok(LeaderClass::OutsideCoveredRange);
    }
    if lambda == q + 1 {
        if m.is_multiple_of(2) || m < 5 {
            return Ok(LeaderClass::OutsideCoveredRange);
        }
        let qt = arith::checked_pow(q, (m - 1) / 2).unwrap();
        if i <= qt {
            let fp = exception_set(q, m, lambda, ExceptionFamily::QuotientFixedPoint)?;
            return Ok(if fp.contains(i) {
                LeaderClass::NonLeader
            } else {
                LeaderClass::Leader { size: two_m }
            });
        }
        if i <= (2 * qt * q + 2 * q - 1) / (q + 1) {
            let y = exception_set(q, m, lambda, ExceptionFamily::SetY)?;
            return Ok(if y.contains(i) {
                LeaderClass::NonLeader
            } else {
                LeaderClass::Leader { size: two_m }
            });
        }
        return Ok(LeaderClass::OutsideCoveredRange);
    }
    // 2 <= lambda < q + 1
    if m % 2 == 1 {
        if m < 5 {
            return Ok(LeaderClass::OutsideCoveredRange);
        }
        let t = (m - 1) / 2;
        let qt1 = arith::checked_pow(q, t + 1).unwrap() as i128;
        let l = lambda as i128;
        let lo_dead = div_ceil(2 * qt1 - 2 * q as i128 + 1, l) as u64;
        let hi_dead = div_floor(2 * qt1 + 2 * q as i128 - 1, l) as u64;
        if i < lo_dead {
            let t_set = exception_set(q, m, lambda, ExceptionFamily::SetT)?;
            return Ok(if t_set.contains(i) {
                LeaderClass::NonLeader
            } else {
                LeaderClass::Leader { size: two_m }
            });
        }
        if i <= hi_dead {
            return Ok(LeaderClass::NonLeader);
        }
        return Ok(LeaderClass::OutsideCoveredRange);
    }
    if lambda == 2 {
        let t = m / 2;
        let qt = arith::checked_pow(q, t).unwrap();
        if i >= qt.div_ceil(2) && i <= qt + 1 {
            return Ok(if i == qt.div_ceil(2) || i == qt + 1 {
                LeaderClass::NonLeader
            } else {
                LeaderClass::Leader { size: two_m }
            });
        }
        if m >= 8 && i > qt + 1 && i <= (qt * q - 1) / 2 {
            let x = exception_set(q, m, 2, ExceptionFamily::SetX)?;
            return Ok(if x.contains(i) {
                LeaderClass::NonLeader
            } else {
                LeaderClass::Leader { size: two_m }
            });
        }
    }
    Ok(LeaderClass::OutsideCoveredRange)
}

/// The smallest i with i not divisible by q that is not a coset leader
/// modulo (q^m + 1)/λ, for odd m = 2t + 1 >= 5 and 2 <= λ < q + 1.
pub fn smallest_coprime_nonleader(q: u64, m: u32, lambda: u64) -> Result<u64> {
    if q.is_multiple_of(2) || m.is_multiple_of(2) || m < 5 || lambda < 2 || lambda > q {
        return Err(Error::Domain(
            "smallest-gap formula needs odd q, odd m >= 5, 2 <= lambda < q + 1".into(),
        ));
    }
    CosetParams::new(q, m, lambda)?;
    let t = (m - 1) / 2;
    let qt1 = arith::checked_pow(q, t + 1).unwrap();
    Ok(if t.is_multiple_of(2) {
        (qt1 + 1) / lambda - q / lambda
    } else {
        (qt1 - 1) / lambda - (q - 2) / lambda
    })
}
