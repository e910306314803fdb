//! Injections `ι_n` with pairwise disjoint ranges built from one injective
//! pairing `ι` and two distinct tags `b`, `c`:
//! `ι_0(x) = ι(c, ι(c, x))`, `ι_{2s+1}(x) = ι(b, ι_{2s}(x))`,
//! `ι_{2s+2}(x) = ι(c, ι_{2s+1}(x))`.

use num_bigint::BigUint;
use num_traits::One;
use std::fmt;

pub type Pairing = fn(&BigUint, &BigUint) -> BigUint;

/// `(a + b)(a + b + 1)/2 + b` on unbounded naturals.
pub fn cantor_big(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    (&s * (&s + BigUint::one()) >> 1u32) + b
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IotaError {
    #[error("tags must differ, both are {0}")]
    EqualTags(BigUint),
    #[error("pairing is not injective: {0:?} and {1:?} collide")]
    NotInjective((u32, u32), (u32, u32)),
}

#[derive(Clone)]
pub struct IotaChain {
    iota: Pairing,
    b: BigUint,
    c: BigUint,
}

impl fmt::Debug for IotaChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IotaChain").field("b", &self.b).field("c", &self.c).finish()
    }
}

/// Spot-checks injectivity of `iota` on `[0, 16)²`.
pub fn iota_chain(iota: Pairing, b: BigUint, c: BigUint) -> Result<IotaChain, IotaError> {
    if b == c {
        return Err(IotaError::EqualTags(b));
    }
    let mut seen = std::collections::HashMap::new();
    for x in 0..16u32 {
        for y in 0..16u32 {
            if let Some(&prev) = seen.get(&iota(&x.into(), &y.into())) {
                return Err(IotaError::NotInjective(prev, (x, y)));
            }
            seen.insert(iota(&x.into(), &y.into()), (x, y));
        }
    }
    Ok(IotaChain { iota, b, c })
}

impl IotaChain {
    /// Tag sequence applied innermost first.
    fn tags(n: usize) -> Vec<bool> {
        // true = c, false = b
        let mut t = vec![true, true];
        t.extend((1..=n).map(|k| k % 2 == 0));
        t
    }

    pub fn eval(&self, n: usize, x: &BigUint) -> BigUint {
        Self::tags(n).into_iter().fold(x.clone(), |acc, is_c| {
            (self.iota)(if is_c { &self.c } else { &self.b }, &acc)
        })
    }

    /// Literal unfolding such as `ι(c, ι(c, x))`.
    pub fn descriptor(&self, n: usize) -> String {
        Self::tags(n).into_iter().fold("x".to_string(), |acc, is_c| {
            format!("ι({}, {acc})", if is_c { "c" } else { "b" })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn chain() -> IotaChain {
        iota_chain(cantor_big, 0u32.into(), 1u32.into()).unwrap()
    }

    #[test]
    fn unfolding() {
        let ch = chain();
        assert_eq!(ch.descriptor(0), "ι(c, ι(c, x))");
        assert_eq!(ch.descriptor(1), "ι(b, ι(c, ι(c, x)))");
        assert_eq!(ch.descriptor(2), "ι(c, ι(b, ι(c, ι(c, x))))");
        let one = BigUint::one();
        let five = BigUint::from(5u32);
        assert_eq!(ch.eval(0, &five), cantor_big(&one, &cantor_big(&one, &five)));
        // cantor(1, 5) = 26, cantor(1, 26) = 404
        assert_eq!(ch.eval(0, &five), BigUint::from(404u32));
    }

    #[test]
    fn ranges_disjoint_small() {
        let ch = chain();
        let mut seen = HashSet::new();
        for n in 0..6 {
            for x in 0..40u32 {
                assert!(seen.insert(ch.eval(n, &x.into())), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(
            iota_chain(cantor_big, 3u32.into(), 3u32.into()),
            Err(IotaError::EqualTags(_))
        ));
        fn sum(a: &BigUint, b: &BigUint) -> BigUint {
            a + b
        }
        assert!(matches!(iota_chain(sum, 0u32.into(), 1u32.into()), Err(IotaError::NotInjective(..))));
    }
}
