use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A permutation of the points `1..=degree`.
///
/// Points are stored zero-based. Products compose as functions:
/// `(g * h)(i) = g(h(i))`. The derived ordering is lexicographic on the
/// image sequence and is used wherever a canonical representative is needed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from zero-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = alloc::vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree || seen[x] {
                return Err(Error::InvalidPermutation { degree });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from one-based images, as in `[2, 3, 1]`.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation {
                degree: images.len(),
            });
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// Builds a permutation from one-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = alloc::vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if x == 0 || x as usize > degree || next == 0 || next as usize > degree {
                    return Err(Error::InvalidPermutation { degree });
                }
                if touched[x as usize - 1] {
                    return Err(Error::InvalidPermutation { degree });
                }
                touched[x as usize - 1] = true;
                images[x as usize - 1] = next - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image sequence.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a zero-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self * x * self^-1`.
    pub fn conjugate(&self, x: &Permutation) -> Permutation {
        self.compose(x).compose(&self.inverse())
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let mut base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `self^k = e`, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Nontrivial cycles as one-based point lists, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32 + 1);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

/// Cycle notation, e.g. `(1,2,3)(4,5)`; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip_through_display() {
        let g = Permutation::from_cycles(6, &[&[1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(alloc::format!("{}", g), "(1,2,3)(4,5)");
        assert_eq!(g.order(), 6);
        assert_eq!(alloc::format!("{}", Permutation::identity(3)), "()");
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let g = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let h = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        // g(h(2)) = g(3) = 3
        assert_eq!(g.compose(&h).apply(1), 2);
        assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(alloc::vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn negative_powers() {
        let g = Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        assert_eq!(g.pow(-1), g.inverse());
        assert!(g.pow(5).is_identity());
        assert_eq!(g.pow(7), g.pow(2));
    }
}
