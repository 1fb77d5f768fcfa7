//! Exact minimum distance and weight enumerators: exhaustive codeword
//! enumeration in minimal-change order, dual-code construction, and the
//! MacWilliams transform for codes whose dual side is small.

use num_bigint::{BigInt, BigUint, Sign};

use crate::arith;
use crate::bch;
use crate::cosets::CosetParams;
use crate::error::{Error, Result};
use crate::gf::{DensePoly, FieldSpec};
use crate::mat::{self, Mat};

/// Default cap on enumerated codewords.
pub const DEFAULT_CODEWORD_BUDGET: u128 = 10_000_000;

/// Raised cap for the long-running verification cases.
pub const LONG_CODEWORD_BUDGET: u128 = 50_000_000;

/// Exact counts A_0..A_n of codeword weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub n: usize,
    pub q: u64,
    pub counts: Vec<BigUint>,
}

impl WeightEnumerator {
    /// The smallest positive index with a nonzero count, i.e. the minimum
    /// distance of the code the enumerator describes.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&i| self.counts[i] != BigUint::ZERO)
    }

    /// Sum of all counts: q^k for a k-dimensional code.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// q^e without overflow concerns.
fn pow_big(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// q^e capped: None means "exceeds any practical budget".
fn pow_capped(q: u64, e: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(q as u128)?;
        if acc > 1 << 100 {
            return None;
        }
    }
    Some(acc)
}

/// Enumerates all q^k codewords of the code spanned by the rows of `gmat`,
/// visiting messages in reflected-Gray order so that each step changes one
/// message symbol by ±1 and the running codeword by one scaled row.
/// Returns (weight counts, minimum positive weight, work).
fn enumerate(field: &FieldSpec, gmat: &Mat, budget: u128) -> Result<(Vec<u64>, u64, u128)> {
    let q = field.q();
    let k = gmat.rows();
    let n = gmat.cols();
    let total = pow_capped(q, k as u64)
        .filter(|&t| t <= budget)
        .ok_or(Error::Budget { need: pow_capped(q, k as u64).unwrap_or(u128::MAX), budget })?;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    if k == 0 {
        return Ok((counts, 0, 1));
    }
    // The message digit at slot j walks 0, 1, ..., q-1 and back in index
    // order; a step from digit d to d' adds (elem(d') - elem(d)) * row_j to
    // the codeword. Precompute every scaled row as a sparse list.
    let scaled: Vec<Vec<Vec<(usize, u64)>>> = (0..k)
        .map(|i| {
            (1..q)
                .map(|c| {
                    gmat.row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, &g)| g != 0)
                        .map(|(j, &g)| (j, field.idx_mul(c, g as u64)))
                        .collect()
                })
                .collect()
        })
        .collect();
    // Field difference between adjacent digits, both directions.
    let delta_up: Vec<u64> = (0..q - 1).map(|d| field.idx_sub(d + 1, d)).collect();
    let delta_down: Vec<u64> = (1..q).map(|d| field.idx_sub(d - 1, d)).collect();
    let mut cw = vec![0u64; n];
    let mut wt: i64 = 0;
    let mut min_wt = u64::MAX;
    let mut work: u128 = 1;
    // Loopless reflected mixed-radix Gray traversal with focus pointers.
    let mut digit = vec![0u64; k];
    let mut dir = vec![1i64; k];
    let mut focus: Vec<usize> = (0..=k).collect();
    loop {
        let j = focus[0];
        focus[0] = 0;
        if j == k {
            break;
        }
        let d = digit[j];
        let (nd, delta) = if dir[j] == 1 {
            (d + 1, delta_up[d as usize])
        } else {
            (d - 1, delta_down[d as usize - 1])
        };
        digit[j] = nd;
        for &(pos, v) in &scaled[j][delta as usize - 1] {
            let old = cw[pos];
            let new = field.idx_add(old, v);
            wt += (new != 0) as i64 - (old != 0) as i64;
            cw[pos] = new;
        }
        let w = wt as u64;
        counts[w as usize] += 1;
        if w > 0 && w < min_wt {
            min_wt = w;
        }
        work += 1;
        // Sampled self-check: the tracked weight matches a recount.
        debug_assert!(
            !work.is_multiple_of(8192) || w == cw.iter().filter(|&&c| c != 0).count() as u64,
            "incremental weight drifted"
        );
        if nd == 0 || nd == q - 1 {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
    }
    debug_assert_eq!(work, total);
    Ok((counts, min_wt, work))
}

/// Exact weight enumerator of the code spanned by `gmat`, by exhaustive
/// enumeration of all q^k codewords.
pub fn exhaustive_weight_enumerator(
    field: &FieldSpec,
    gmat: &Mat,
    budget: u128,
) -> Result<WeightEnumerator> {
    let (counts, _, _) = enumerate(field, gmat, budget)?;
    Ok(WeightEnumerator {
        n: gmat.cols(),
        q: field.q(),
        counts: counts.into_iter().map(BigUint::from).collect(),
    })
}

/// Generator matrix of the dual of C_(n,q,δ',b), of dimension n - k.
pub fn dual_code(params: CosetParams, designed: u64, b: u8) -> Result<Mat> {
    let field = FieldSpec::new(params.p, params.s)?;
    let g = bch::generator_polynomial(params, designed, b)?;
    let dual = dual_generator_polynomial(&field, &g, params.n)?;
    bch::generator_matrix(&dual, params.n)
}

/// Generator polynomial of the dual code: the monic reciprocal of the check
/// polynomial h = (x^n - 1)/g. Verified by G H^T = 0.
pub fn dual_generator_polynomial(field: &FieldSpec, g: &DensePoly, n: u64) -> Result<DensePoly> {
    let xn = DensePoly::x_pow_minus_one(field, n);
    let (h, rem) = xn.divrem(field, g)?;
    if !rem.is_zero() {
        return Err(Error::InternalCheck("g does not divide x^n - 1".into()));
    }
    let mut coeffs: Vec<u64> = h.coeffs().to_vec();
    coeffs.reverse();
    // h(0) is the reciprocal's leading coefficient; h(0) != 0 since x ∤ h.
    let lead_inv = field.idx_inv(*coeffs.last().unwrap());
    for c in coeffs.iter_mut() {
        *c = field.idx_mul(*c, lead_inv);
    }
    let dual = DensePoly::from_indices(field, coeffs)?;
    let k = n as usize - g.degree().unwrap();
    if k > 0 && dual.degree() != Some(k) {
        return Err(Error::InternalCheck("dual generator has wrong degree".into()));
    }
    if k > 0 && (n as usize - k) > 0 {
        let gm = bch::generator_matrix(g, n)?;
        let hm = bch::generator_matrix(&dual, n)?;
        if !mat::product_with_transpose_is_zero(field, &gm, &hm)? {
            return Err(Error::InternalCheck("G * H^T != 0".into()));
        }
    }
    Ok(dual)
}

/// MacWilliams transform: from the exact enumerator of the dual code (of
/// dimension `dual_dim`) to the enumerator of the primal code, expanded with
/// exact big-integer arithmetic. Fails if any coefficient comes out negative
/// or non-integral.
pub fn macwilliams(dual_we: &WeightEnumerator, dual_dim: u64) -> Result<WeightEnumerator> {
    let n = dual_we.n;
    let q = dual_we.q;
    // Binomials up to n.
    let mut binom = vec![vec![BigUint::ZERO; n + 1]; n + 1];
    for (a, row) in binom.iter_mut().enumerate() {
        row[0] = BigUint::from(1u32);
        for b in 1..=a {
            let prev_l = row[b - 1].clone();
            row[b] = &prev_l * (a - b + 1) / b;
        }
    }
    let qm1_pow: Vec<BigInt> = {
        let mut v = vec![BigInt::from(1)];
        for _ in 0..n {
            let last = v.last().unwrap().clone();
            v.push(last * (q as i64 - 1));
        }
        v
    };
    let divisor = BigInt::from_biguint(Sign::Plus, pow_big(q, dual_dim));
    let mut counts = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::from(0);
        for i in 0..=n {
            if dual_we.counts[i] == BigUint::ZERO {
                continue;
            }
            // Krawtchouk K_j(i) = sum_l (-1)^l (q-1)^(j-l) C(i,l) C(n-i,j-l)
            let mut kraw = BigInt::from(0);
            for l in 0..=j.min(i) {
                if j - l > n - i {
                    continue;
                }
                let term = BigInt::from_biguint(Sign::Plus, &binom[i][l] * &binom[n - i][j - l])
                    * &qm1_pow[j - l];
                if l % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += BigInt::from_biguint(Sign::Plus, dual_we.counts[i].clone()) * kraw;
        }
        let (quot, rem) = (acc.clone() / &divisor, acc % &divisor);
        if rem != BigInt::from(0) {
            return Err(Error::InternalCheck(format!("non-integral weight count at {j}")));
        }
        let (sign, mag) = quot.into_parts();
        if sign == Sign::Minus {
            return Err(Error::InternalCheck(format!("negative weight count at {j}")));
        }
        counts.push(mag);
    }
    Ok(WeightEnumerator { n, q, counts })
}

/// How a distance value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMethod {
    Exhaustive,
    MacWilliams,
    BoundOnly,
}

impl DistanceMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            DistanceMethod::Exhaustive => "exhaustive",
            DistanceMethod::MacWilliams => "macwilliams",
            DistanceMethod::BoundOnly => "bound-only",
        }
    }
}

/// A minimum distance and how it was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceResult {
    pub value: u64,
    pub exact: bool,
    pub method: DistanceMethod,
    /// Number of codewords enumerated.
    pub work: u128,
}

/// Minimum distance of C_(n,q,δ',b): exact when the cheaper of q^k and
/// q^(n-k) fits the budget (direct enumeration, or dual enumeration plus
/// MacWilliams), otherwise the BCH bound with exact = false.
pub fn min_distance(params: CosetParams, designed: u64, b: u8, budget: u128) -> Result<DistanceResult> {
    let t = bch::DefiningSet::new(params, designed, b)?;
    let n = params.n;
    let k = n - t.len();
    let bound = t.bch_bound();
    if k == 0 {
        return Ok(DistanceResult { value: 0, exact: true, method: DistanceMethod::Exhaustive, work: 1 });
    }
    let primal_cost = pow_capped(params.q, k);
    let dual_cost = pow_capped(params.q, n - k);
    let field_fits = arith::checked_pow(
        params.p,
        params.s * crate::cosets::ord(n, params.q)? as u32,
    )
    .is_some();
    let pick_primal = match (primal_cost, dual_cost) {
        (Some(p), Some(d)) => p <= d,
        (Some(_), None) => true,
        (None, Some(_)) => false,
        (None, None) => {
            return Ok(DistanceResult { value: bound, exact: false, method: DistanceMethod::BoundOnly, work: 0 })
        }
    };
    let affordable = if pick_primal {
        primal_cost.is_some_and(|c| c <= budget)
    } else {
        dual_cost.is_some_and(|c| c <= budget)
    };
    if !affordable || !field_fits {
        return Ok(DistanceResult { value: bound, exact: false, method: DistanceMethod::BoundOnly, work: 0 });
    }
    let field = FieldSpec::new(params.p, params.s)?;
    let g = bch::generator_polynomial(params, designed, b)?;
    if pick_primal {
        let gm = bch::generator_matrix(&g, n)?;
        let (_, min_wt, work) = enumerate(&field, &gm, budget)?;
        Ok(DistanceResult { value: min_wt, exact: true, method: DistanceMethod::Exhaustive, work })
    } else {
        let dual = dual_generator_polynomial(&field, &g, n)?;
        let hm = bch::generator_matrix(&dual, n)?;
        let dual_we = exhaustive_weight_enumerator(&field, &hm, budget)?;
        let primal_we = macwilliams(&dual_we, n - k)?;
        if primal_we.total() != pow_big(params.q, k) {
            return Err(Error::InternalCheck("transformed enumerator has wrong mass".into()));
        }
        let d = primal_we
            .min_positive_weight()
            .ok_or_else(|| Error::InternalCheck("no positive weight in a nonzero code".into()))?;
        Ok(DistanceResult {
            value: d as u64,
            exact: true,
            method: DistanceMethod::MacWilliams,
            work: dual_cost.unwrap(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, m: u32, lambda: u64) -> CosetParams {
        CosetParams::new(q, m, lambda).unwrap()
    }

    /// Naive re-encoder used as the oracle for the Gray-code enumerator.
    fn naive_counts(field: &FieldSpec, gmat: &Mat) -> Vec<u64> {
        let q = field.q();
        let k = gmat.rows();
        let n = gmat.cols();
        let total = (q as u128).pow(k as u32);
        let mut counts = vec![0u64; n + 1];
        for msg_id in 0..total {
            let mut rem = msg_id;
            let mut cw = vec![0u64; n];
            for i in 0..k {
                let coef = (rem % q as u128) as u64;
                rem /= q as u128;
                if coef != 0 {
                    for (j, &g) in gmat.row(i).iter().enumerate() {
                        cw[j] = field.idx_add(cw[j], field.idx_mul(coef, g as u64));
                    }
                }
            }
            let w = cw.iter().filter(|&&c| c != 0).count();
            counts[w] += 1;
        }
        counts
    }

    #[test]
    fn gray_enumeration_matches_naive() {
        for (q, rows) in [
            (2u64, vec![vec![1u16, 0, 1, 1, 0], vec![0, 1, 1, 0, 1]]),
            (3, vec![vec![1, 2, 0, 1], vec![0, 1, 1, 2]]),
            (4, vec![vec![1, 2, 3, 0], vec![0, 1, 0, 2]]),
            (5, vec![vec![1, 0, 4, 2], vec![0, 1, 3, 3], vec![0, 0, 1, 1]]),
        ] {
            let field = FieldSpec::for_order(q).unwrap();
            let n = rows[0].len();
            let mut gm = Mat::zero(rows.len(), n);
            for (i, r) in rows.iter().enumerate() {
                for (j, &c) in r.iter().enumerate() {
                    gm.set(i, j, c);
                }
            }
            let (counts, _, work) = enumerate(&field, &gm, 1 << 20).unwrap();
            assert_eq!(counts, naive_counts(&field, &gm));
            assert_eq!(work, (q as u128).pow(rows.len() as u32));
        }
    }

    #[test]
    fn zero_dimensional_enumerator() {
        let field = FieldSpec::for_order(3).unwrap();
        let gm = Mat::zero(0, 6);
        let we = exhaustive_weight_enumerator(&field, &gm, 10).unwrap();
        assert_eq!(we.counts[0], BigUint::from(1u32));
        assert!(we.counts[1..].iter().all(|c| *c == BigUint::ZERO));
    }

    #[test]
    fn published_distances_direct() {
        // [17, 4, 12] over GF(4)
        let d = min_distance(params(4, 2, 1), 7, 0, 1 << 20).unwrap();
        assert_eq!((d.value, d.exact, d.method), (12, true, DistanceMethod::Exhaustive));
        assert_eq!(d.work, 256);
        // [41, 8, 22] over GF(3)
        let d = min_distance(params(3, 4, 2), 9, 0, 1 << 20).unwrap();
        assert_eq!((d.value, d.exact, d.method), (22, true, DistanceMethod::Exhaustive));
    }

    #[test]
    fn published_distance_via_dual() {
        // [63, 56, 4] over GF(5): dual side has 5^7 words
        let d = min_distance(params(5, 3, 2), 3, 0, 200_000).unwrap();
        assert_eq!((d.value, d.exact, d.method), (4, true, DistanceMethod::MacWilliams));
        assert_eq!(d.work, 78_125);
    }

    #[test]
    fn bound_only_when_budget_exceeded() {
        // [82, 9, >=62] over GF(9): both sides exceed any desk budget
        let d = min_distance(params(9, 2, 1), 32, 0, DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!((d.value, d.exact, d.method), (62, false, DistanceMethod::BoundOnly));
    }

    #[test]
    fn dual_code_dimensions() {
        let field = FieldSpec::for_order(3).unwrap();
        let p = params(3, 5, 4);
        let g = bch::generator_polynomial(p, 3, 0).unwrap();
        let dual = dual_generator_polynomial(&field, &g, p.n).unwrap();
        // dual of [61, 50] is [61, 11]
        assert_eq!(dual.degree(), Some(50));

        let p = params(5, 3, 2);
        let field = FieldSpec::for_order(5).unwrap();
        let g = bch::generator_polynomial(p, 3, 0).unwrap();
        let dual = dual_generator_polynomial(&field, &g, p.n).unwrap();
        assert_eq!(dual.degree(), Some(56)); // dual of [63, 56] is [63, 7]

        // dual of the full space (g = 1) is the zero code
        let field = FieldSpec::for_order(3).unwrap();
        let g = DensePoly::one(3);
        let dual = dual_generator_polynomial(&field, &g, 8).unwrap();
        assert_eq!(dual.degree(), Some(8));
        assert_eq!(bch::generator_matrix(&dual, 8).unwrap().rows(), 0);

        // params-level wrapper reports the right shapes
        let h = dual_code(params(3, 5, 4), 3, 0).unwrap();
        assert_eq!((h.rows(), h.cols()), (11, 61));
        let h = dual_code(params(5, 3, 2), 3, 0).unwrap();
        assert_eq!((h.rows(), h.cols()), (7, 63));
    }

    #[test]
    fn dual_route_matches_direct_enumeration() {
        // [10, 5] ternary code: both q^k and q^(n-k) fit a small budget, so
        // the two routes to the weight enumerator must agree exactly.
        let p = params(3, 2, 1);
        let field = FieldSpec::for_order(3).unwrap();
        let g = bch::generator_polynomial(p, 3, 0).unwrap();
        let primal = exhaustive_weight_enumerator(
            &field,
            &bch::generator_matrix(&g, p.n).unwrap(),
            1 << 20,
        )
        .unwrap();
        let dual_g = dual_generator_polynomial(&field, &g, p.n).unwrap();
        let dual = exhaustive_weight_enumerator(
            &field,
            &bch::generator_matrix(&dual_g, p.n).unwrap(),
            1 << 20,
        )
        .unwrap();
        let k = p.n - g.degree().unwrap() as u64;
        assert_eq!(macwilliams(&dual, p.n - k).unwrap(), primal);
    }

    #[test]
    fn macwilliams_of_zero_dual_is_full_space() {
        // dual = zero code, W = x^n: the primal is the full space with
        // A_i = C(n,i)(q-1)^i
        let n = 6usize;
        let q = 3u64;
        let mut counts = vec![BigUint::ZERO; n + 1];
        counts[0] = BigUint::from(1u32);
        let dual_we = WeightEnumerator { n, q, counts };
        let full = macwilliams(&dual_we, 0).unwrap();
        let mut expect = Vec::new();
        for i in 0..=n {
            let mut c = BigUint::from(1u32);
            for x in 0..i {
                c = c * (n - x) / (x + 1);
            }
            expect.push(c * BigUint::from(2u32).pow(i as u32));
        }
        assert_eq!(full.counts, expect);
    }

    #[test]
    fn macwilliams_matches_exhaustive_small_code() {
        // [6,3] code over GF(3): both sides enumerable
        let field = FieldSpec::for_order(3).unwrap();
        let mut gm = Mat::zero(3, 6);
        for (i, row) in [[1u16, 0, 0, 1, 2, 1], [0, 1, 0, 2, 1, 1], [0, 0, 1, 1, 1, 2]]
            .iter()
            .enumerate()
        {
            for (j, &c) in row.iter().enumerate() {
                gm.set(i, j, c);
            }
        }
        // dual generator: rows of [-P^T | I]
        let mut hm = Mat::zero(3, 6);
        let neg = |c: u16| ((3 - c as u64) % 3) as u16;
        let p = [[1u16, 2, 1], [2, 1, 1], [1, 1, 2]];
        for (c, prow) in p.iter().enumerate() {
            for (r, &v) in prow.iter().enumerate() {
                hm.set(r, c, neg(v));
            }
        }
        for r in 0..3 {
            hm.set(r, 3 + r, 1);
        }
        assert!(mat::product_with_transpose_is_zero(&field, &gm, &hm).unwrap());
        let primal = exhaustive_weight_enumerator(&field, &gm, 1 << 20).unwrap();
        let dual = exhaustive_weight_enumerator(&field, &hm, 1 << 20).unwrap();
        assert_eq!(macwilliams(&dual, 3).unwrap(), primal);
        assert_eq!(macwilliams(&primal, 3).unwrap(), dual);
    }

    #[test]
    fn macwilliams_involution() {
        let field = FieldSpec::for_order(4).unwrap();
        let mut gm = Mat::zero(2, 5);
        for (j, &c) in [1u16, 2, 0, 3, 1].iter().enumerate() {
            gm.set(0, j, c);
        }
        for (j, &c) in [0u16, 1, 1, 2, 3].iter().enumerate() {
            gm.set(1, j, c);
        }
        let we = exhaustive_weight_enumerator(&field, &gm, 1 << 20).unwrap();
        let twice = macwilliams(&macwilliams(&we, 2).unwrap(), 3).unwrap();
        assert_eq!(twice, we);
    }
}
