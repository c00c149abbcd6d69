//! The local ring `Z_(q)` of rationals with denominator prime to `q`, used
//! through its additive group as the factor `E` of the top amalgam.

use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::amalgam::{FactorOracle, Order};
use crate::error::{Error, Result};
use crate::permgroup::is_prime;

/// A reduced fraction `num/den` with `den > 0`.
///
/// The type itself only guarantees reduction; coprimality of `den` with `q`
/// is enforced by [`LocalRing`], which is the only public constructor for
/// non-integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LocalizedRational {
    num: BigInt,
    den: BigInt,
}

impl LocalizedRational {
    fn reduced(num: BigInt, den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() || g.is_zero() {
            (num, den)
        } else {
            (num / &g, den / &g)
        };
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            den = BigInt::one();
        }
        LocalizedRational { num, den }
    }

    pub fn zero() -> Self {
        Self::integer(BigInt::zero())
    }

    pub fn one() -> Self {
        Self::integer(BigInt::one())
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        LocalizedRational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::reduced(&self.num + &other.num, self.den.clone());
        }
        Self::reduced(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
    }

    pub fn neg(&self) -> Self {
        LocalizedRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Ring product; the local ring is closed under it.
    pub fn mul(&self, other: &Self) -> Self {
        Self::reduced(&self.num * &other.num, &self.den * &other.den)
    }

    /// `n * self` in the additive group.
    pub fn scale(&self, n: &BigInt) -> Self {
        Self::reduced(&self.num * n, self.den.clone())
    }

    /// Membership in the subgroup `Z`.
    pub fn in_z(&self) -> bool {
        self.den.is_one()
    }

    /// `floor(self)`.
    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&self.den)
    }

    /// `self - floor(self)`, the canonical representative of `self + Z` in `[0, 1)`.
    pub fn coset_rep_mod_z(&self) -> Self {
        LocalizedRational {
            num: self.num.mod_floor(&self.den),
            den: self.den.clone(),
        }
    }
}

impl Ord for LocalizedRational {
    /// Numeric order.
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for LocalizedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LocalizedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for LocalizedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Z_(q)` for a fixed prime `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalRing {
    q: u64,
}

impl LocalRing {
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(LocalRing { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `num/den` in lowest terms; fails when the reduced denominator is a
    /// multiple of `q` or zero.
    pub fn element(
        &self,
        num: impl Into<BigInt>,
        den: impl Into<BigInt>,
    ) -> Result<LocalizedRational> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DenominatorDivisibleByQ {
                den: "0".to_string(),
                q: self.q,
            });
        }
        let x = LocalizedRational::reduced(num.into(), den);
        self.check(&x)?;
        Ok(x)
    }

    /// Whether `x` lies in this ring.
    pub fn contains(&self, x: &LocalizedRational) -> bool {
        self.check(x).is_ok()
    }

    fn check(&self, x: &LocalizedRational) -> Result<()> {
        if (&x.den % BigInt::from(self.q)).is_zero() {
            return Err(Error::DenominatorDivisibleByQ {
                den: x.den.to_string(),
                q: self.q,
            });
        }
        Ok(())
    }

    /// The `y` with `m * y = x`; needs `q` not dividing `m`.
    pub fn divide_exact(&self, x: &LocalizedRational, m: u64) -> Result<LocalizedRational> {
        if m == 0 || m.is_multiple_of(self.q) {
            return Err(Error::DivisibleByQ {
                divisor: m,
                q: self.q,
            });
        }
        Ok(LocalizedRational::reduced(
            x.num.clone(),
            &x.den * BigInt::from(m),
        ))
    }

    /// Exponent of `q` in the numerator of `x != 0`.
    pub fn q_valuation(&self, x: &LocalizedRational) -> Result<u32> {
        if x.is_zero() {
            return Err(Error::ZeroValuation);
        }
        let q = BigInt::from(self.q);
        let mut n = x.num.abs();
        let mut v = 0;
        while (&n % &q).is_zero() {
            n /= &q;
            v += 1;
        }
        Ok(v)
    }

    /// Whether `q^k` divides `x` inside the ring.
    pub fn divisible_by_q_power(&self, x: &LocalizedRational, k: u32) -> bool {
        let qk = num_traits::pow(BigInt::from(self.q), k as usize);
        (&x.num % qk).is_zero()
    }
}

/// The additive group of `Z_(q)` as an amalgam factor over `Z`, with edge
/// carried by integers and the fractional part as coset section.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EFactor {
    ring: LocalRing,
}

impl EFactor {
    pub fn new(ring: LocalRing) -> Self {
        EFactor { ring }
    }

    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }
}

impl FactorOracle for EFactor {
    type Elem = LocalizedRational;
    type Edge = BigInt;

    fn identity(&self) -> LocalizedRational {
        LocalizedRational::zero()
    }
    fn mul(&self, x: &LocalizedRational, y: &LocalizedRational) -> LocalizedRational {
        x.add(y)
    }
    fn inv(&self, x: &LocalizedRational) -> LocalizedRational {
        x.neg()
    }
    fn embed_edge(&self, h: &BigInt) -> LocalizedRational {
        LocalizedRational::integer(h.clone())
    }
    fn edge_split(&self, g: &LocalizedRational) -> (BigInt, LocalizedRational) {
        (g.floor(), g.coset_rep_mod_z())
    }
    fn edge_identity(&self) -> BigInt {
        BigInt::zero()
    }
    fn edge_contains(&self, g: &LocalizedRational) -> bool {
        g.in_z()
    }
    fn order_of(&self, g: &LocalizedRational) -> Order {
        if g.is_zero() {
            Order::Finite(1)
        } else {
            Order::Infinite
        }
    }
    fn conjugate_into_edge(&self, g: &LocalizedRational) -> Option<bool> {
        // abelian: conjugation is trivial
        Some(g.in_z())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z7() -> LocalRing {
        LocalRing::new(7).unwrap()
    }

    fn r(n: i64, d: i64) -> LocalizedRational {
        z7().element(n, d).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(r(1, 3).add(&r(2, 3)), LocalizedRational::one());
        assert_eq!(r(1, 2).add(&r(1, 5)), r(7, 10));
        assert!(z7().contains(&r(7, 10)));
        let x = r(-5, 12);
        assert!(x.add(&x.neg()).is_zero());
        assert_eq!(r(14, 2), LocalizedRational::integer(7));
        assert_eq!(r(3, -6), r(-1, 2));
        assert_eq!(r(0, 5), LocalizedRational::zero());
    }

    #[test]
    fn denominators_prime_to_q() {
        assert!(matches!(
            z7().element(1, 7),
            Err(Error::DenominatorDivisibleByQ { .. })
        ));
        assert!(matches!(
            z7().element(1, 14),
            Err(Error::DenominatorDivisibleByQ { .. })
        ));
        assert!(z7().element(7, 14).is_ok());
        assert!(z7().element(1, 0).is_err());
        assert_eq!(LocalRing::new(8), Err(Error::NotPrime(8)));
    }

    #[test]
    fn integer_cosets() {
        assert!(r(14, 2).in_z());
        assert!(!r(7, 3).in_z());
        assert_eq!(r(7, 3).coset_rep_mod_z(), r(1, 3));
        assert_eq!(r(-7, 3).coset_rep_mod_z(), r(2, 3));
        assert_eq!(r(-7, 3).floor(), BigInt::from(-3));
        assert_eq!(r(5, 1).coset_rep_mod_z(), LocalizedRational::zero());
    }

    #[test]
    fn exact_division() {
        let ring = z7();
        assert_eq!(ring.divide_exact(&r(5, 3), 11).unwrap(), r(5, 33));
        assert_eq!(ring.divide_exact(&r(5, 3), 1).unwrap(), r(5, 3));
        assert_eq!(
            ring.divide_exact(&LocalizedRational::one(), 7),
            Err(Error::DivisibleByQ { divisor: 7, q: 7 })
        );
        // |M11| = 7920 is prime to 7
        let y = ring.divide_exact(&r(3, 4), 7920).unwrap();
        assert_eq!(y.scale(&BigInt::from(7920)), r(3, 4));
        assert!(ring.contains(&y));
    }

    #[test]
    fn valuations() {
        let ring = z7();
        assert_eq!(ring.q_valuation(&r(49, 3)), Ok(2));
        assert_eq!(ring.q_valuation(&r(1, 2)), Ok(0));
        assert_eq!(ring.q_valuation(&r(-343, 5)), Ok(3));
        assert_eq!(
            ring.q_valuation(&LocalizedRational::zero()),
            Err(Error::ZeroValuation)
        );
    }

    #[test]
    fn e_factor_split() {
        let e = EFactor::new(z7());
        let (n, rep) = e.edge_split(&r(-7, 3));
        assert_eq!(n, BigInt::from(-3));
        assert_eq!(rep, r(2, 3));
        assert_eq!(e.mul(&e.embed_edge(&n), &rep), r(-7, 3));
        assert_eq!(e.order_of(&r(1, 2)), Order::Infinite);
        assert_eq!(e.order_of(&LocalizedRational::zero()), Order::Finite(1));
    }

    fn rational() -> impl Strategy<Value = LocalizedRational> {
        (-10_000i64..10_000, 1i64..2_000)
            .prop_filter("den prime to 7", |(_, d)| d % 7 != 0)
            .prop_map(|(n, d)| r(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn coset_rep_is_invariant(x in rational(), n in -1000i64..1000) {
            let shifted = x.add(&LocalizedRational::integer(n));
            prop_assert_eq!(shifted.coset_rep_mod_z(), x.coset_rep_mod_z());
            let rep = x.coset_rep_mod_z();
            prop_assert!(rep >= LocalizedRational::zero() && rep < LocalizedRational::one());
            prop_assert!(x.sub(&rep).in_z());
        }

        #[test]
        fn additive_group_laws(x in rational(), y in rational(), z in rational()) {
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert!(z7().contains(&x.add(&y)));
        }

        #[test]
        fn torsion_free(x in rational(), n in 1i64..500) {
            prop_assert_eq!(x.scale(&BigInt::from(n)).is_zero(), x.is_zero());
        }

        #[test]
        fn multiplication_maps_are_injective(r0 in rational(), x in rational(), y in rational()) {
            prop_assume!(!r0.is_zero() && x != y);
            prop_assert_ne!(r0.mul(&x), r0.mul(&y));
        }

        #[test]
        fn divisible_by_group_order(x in rational()) {
            let y = z7().divide_exact(&x, 7920).unwrap();
            prop_assert_eq!(y.scale(&BigInt::from(7920)), x);
        }

        #[test]
        fn valuation_bounds_divisibility(x in rational(), k in 0u32..5) {
            prop_assume!(!x.is_zero());
            let v = z7().q_valuation(&x).unwrap();
            prop_assert_eq!(z7().divisible_by_q_power(&x, k), k <= v);
        }
    }
}
