//! Small helpers around arbitrary precision integers and rationals.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Gcd of all entries, always nonnegative; zero for the zero vector.
pub fn gcd_all(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Divides out the content of an integer vector. The sign is kept.
pub fn primitive(values: &[BigInt]) -> Vec<BigInt> {
    let g = gcd_all(values);
    if g.is_zero() || g.is_one() {
        return values.to_vec();
    }
    values.iter().map(|v| v / &g).collect()
}

/// Scales a rational vector by the lcm of its denominators and removes the
/// content, giving the primitive integer vector with the same direction.
pub fn clear_denominators(values: &[Rational]) -> Vec<BigInt> {
    let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<BigInt> = values.iter().map(|v| (v * &lcm).to_integer()).collect();
    primitive(&scaled)
}

/// Flips the sign so that the first nonzero entry is positive.
pub fn normalize_sign(values: &mut [BigInt]) {
    if let Some(first) = values.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in values.iter_mut() {
                *v = -&*v;
            }
        }
    }
}

pub fn to_rationals(values: &[BigInt]) -> Vec<Rational> {
    values.iter().map(|v| Rational::from_integer(v.clone())).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// Lexicographic comparison of integer vectors of equal length.
pub fn lex_cmp(a: &[BigInt], b: &[BigInt]) -> Ordering {
    a.iter().cmp(b.iter())
}

/// Largest integer `s` with `s * s <= value`, for a nonnegative rational.
pub fn floor_sqrt(value: &Rational) -> BigInt {
    if !value.is_positive() {
        return BigInt::zero();
    }
    let mut s = value.floor().to_integer().sqrt();
    // floor(sqrt(floor(t))) == floor(sqrt(t)) for t >= 0, the loop only
    // guards against off-by-one in the integer root.
    while Rational::from_integer(&s * &s) > *value {
        s -= 1;
    }
    while Rational::from_integer((&s + 1) * (&s + 1)) <= *value {
        s += 1;
    }
    s
}

/// Iterates over all `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < n - k + i {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn floor_sqrt_exact_and_fractional() {
        assert_eq!(floor_sqrt(&int(16)), BigInt::from(4));
        assert_eq!(floor_sqrt(&rat(17, 1)), BigInt::from(4));
        assert_eq!(floor_sqrt(&rat(24, 1)), BigInt::from(4));
        assert_eq!(floor_sqrt(&rat(99, 4)), BigInt::from(4));
        assert_eq!(floor_sqrt(&rat(1, 4)), BigInt::zero());
        assert_eq!(floor_sqrt(&rat(-3, 1)), BigInt::zero());
    }

    #[test]
    fn subsets_are_lexicographic() {
        let s = subsets(4, 2);
        assert_eq!(s, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
        assert_eq!(subsets(7, 3).len(), binomial(7, 3));
    }

    #[test]
    fn clear_denominators_is_primitive() {
        let v = vec![rat(1, 2), rat(-3, 4), int(0)];
        assert_eq!(clear_denominators(&v), vec![BigInt::from(2), BigInt::from(-3), BigInt::zero()]);
    }
}
