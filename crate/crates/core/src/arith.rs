//! Integer helpers: modular arithmetic in 128-bit intermediates, primality,
//! and factorization of 64-bit group orders.

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `a * b mod n` without overflow.
pub fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// `b^e mod n`.
pub fn powmod(mut b: u64, mut e: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, n);
        }
        b = mulmod(b, b, n);
        e >>= 1;
    }
    acc
}

/// `base^exp` if it stays below 2^63.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
        if acc >= (1u128 << 63) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        while n.is_multiple_of(p) {
            push(p, &mut out);
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            push(m, &mut out);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

/// Writes q as p^s for prime p, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// Floor division for i128 (works for negative numerators).
pub fn div_floor(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

/// Ceiling division for i128.
pub fn div_ceil(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(!is_prime(6_700_417u64 * 6_700_417));
    }

    #[test]
    fn factoring() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(9_765_624), vec![(2, 3), (3, 1), (11, 1), (71, 1), (521, 1)]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn floor_ceil_div() {
        assert_eq!(div_floor(-5, 3), -2);
        assert_eq!(div_ceil(-5, 3), -1);
        assert_eq!(div_floor(5, 3), 1);
        assert_eq!(div_ceil(5, 3), 2);
    }
}
