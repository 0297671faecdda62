//! Exact probabilities with the unreduced `count/total` form kept alongside.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Compares by value: `1/3 == 2/6`.
#[derive(Debug, Clone)]
pub struct Probability {
    count: BigUint,
    total: BigUint,
}

impl Probability {
    /// Panics if `total` is zero or smaller than `count`.
    pub fn new(count: BigUint, total: BigUint) -> Self {
        assert!(!total.is_zero(), "probability over an empty sample space");
        assert!(count <= total, "count exceeds sample space");
        Probability { count, total }
    }

    pub fn count(&self) -> &BigUint {
        &self.count
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn is_zero(&self) -> bool {
        self.count.is_zero()
    }

    pub fn to_ratio(&self) -> Ratio<BigUint> {
        Ratio::new(self.count.clone(), self.total.clone())
    }

    /// `count/total`, not reduced.
    pub fn exact_text(&self) -> String {
        format!("{}/{}", self.count, self.total)
    }

    /// Lowest terms.
    pub fn reduced_text(&self) -> String {
        let g = self.count.gcd(&self.total);
        format!("{}/{}", &self.count / &g, &self.total / &g)
    }

    /// Six significant digits, rounded half up. Labeled approximate by callers.
    pub fn decimal_text(&self) -> String {
        decimal_significant(&self.count, &self.total, 6)
    }
}

impl PartialEq for Probability {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Probability {}

impl PartialOrd for Probability {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Probability {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.count * &other.total).cmp(&(&other.count * &self.total))
    }
}

impl fmt::Display for Probability {
    /// `3744/2598960 (= 6/4165, ~ 0.00144058)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (= {}, \u{2248} {})", self.exact_text(), self.reduced_text(), self.decimal_text())
    }
}

/// Renders `num/den` with `digits` significant digits using integer arithmetic only.
pub fn decimal_significant(num: &BigUint, den: &BigUint, digits: u32) -> String {
    assert!(digits > 0 && !den.is_zero());
    if num.is_zero() {
        return "0".to_string();
    }
    let ten = BigUint::from(10u32);
    let low = ten.pow(digits - 1);
    let high = ten.pow(digits);

    // Find `shift` with low <= num * 10^shift / den < high (shift may be negative).
    let mut shift: i64 = 0;
    let scaled = |shift: i64| -> (BigUint, BigUint) {
        if shift >= 0 {
            (num * ten.pow(shift as u32), den.clone())
        } else {
            (num.clone(), den * ten.pow((-shift) as u32))
        }
    };
    loop {
        let (n, d) = scaled(shift);
        let q = &n / &d;
        if q < low {
            shift += 1;
        } else if q >= high {
            shift -= 1;
        } else {
            break;
        }
    }
    let (n, d) = scaled(shift);
    let (mut q, r) = n.div_rem(&d);
    if &r * 2u32 >= d {
        q += BigUint::one();
    }
    if q >= high {
        q /= 10u32;
        shift -= 1;
    }

    let text = q.to_string();
    // value = q * 10^-shift
    if shift <= 0 {
        let mut s = text;
        s.extend(std::iter::repeat_n('0', (-shift) as usize));
        s
    } else if (shift as usize) < text.len() {
        let split = text.len() - shift as usize;
        format!("{}.{}", &text[..split], &text[split..])
    } else {
        format!("0.{}{}", "0".repeat(shift as usize - text.len()), text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(n: u64, d: u64) -> String {
        decimal_significant(&BigUint::from(n), &BigUint::from(d), 6)
    }

    #[test]
    fn six_significant_digits() {
        assert_eq!(dec(6, 4165), "0.00144058");
        assert_eq!(dec(1, 1), "1.00000");
        assert_eq!(dec(0, 7), "0");
        assert_eq!(dec(1, 3), "0.333333");
        assert_eq!(dec(2, 3), "0.666667");
        assert_eq!(dec(1_302_540, 2_598_960), "0.501177");
        assert_eq!(dec(4, 2_598_960), "0.00000153908");
        assert_eq!(dec(1234567, 1), "1234570");
        assert_eq!(dec(999_9995, 10_000_000), "1.00000");
    }

    #[test]
    fn ordering_is_by_value() {
        let a = Probability::new(BigUint::from(1u32), BigUint::from(3u32));
        let b = Probability::new(BigUint::from(2u32), BigUint::from(6u32));
        let c = Probability::new(BigUint::from(1u32), BigUint::from(2u32));
        assert_eq!(a.cmp(&b), Ordering::Equal);
        assert!(a < c);
        assert_eq!(a.to_string(), "1/3 (= 1/3, \u{2248} 0.333333)");
    }
}
