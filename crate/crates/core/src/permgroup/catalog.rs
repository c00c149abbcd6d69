//! Small named permutation groups used by tests, toy amalgams and the
//! bundled group files.

use alloc::vec::Vec;

use super::group::PermGroup;
use super::perm::Permutation;

fn cycle(degree: usize, points: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

fn generated(degree: usize, gens: &[Permutation]) -> PermGroup {
    PermGroup::generate(degree, gens).expect("small group")
}

/// The two standard generators of M11 on 11 points.
pub fn m11_generators() -> [Permutation; 2] {
    let long: Vec<u32> = (1..=11).collect();
    [
        cycle(11, &long),
        Permutation::from_cycles(11, &[&[3, 7, 11, 8], &[4, 10, 5, 6]]).expect("valid"),
    ]
}

/// The Mathieu group M11, order 7920.
pub fn m11() -> PermGroup {
    generated(11, &m11_generators())
}

pub fn cyclic(n: usize) -> PermGroup {
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let points: Vec<u32> = (1..=n as u32).collect();
    generated(n, &[cycle(n, &points)])
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n.max(1));
    }
    let points: Vec<u32> = (1..=n as u32).collect();
    generated(n, &[cycle(n, &points), cycle(n, &[1, 2])])
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1));
    }
    let gens: Vec<Permutation> = (3..=n as u32).map(|k| cycle(n, &[1, 2, k])).collect();
    generated(n, &gens)
}

/// Dihedral group of order `2n` acting on the `n` vertices of a polygon.
pub fn dihedral(n: usize) -> PermGroup {
    let points: Vec<u32> = (1..=n as u32).collect();
    let mut reflection = Vec::new();
    for i in 2..=(n as u32) {
        let j = n as u32 + 2 - i;
        if i < j {
            reflection.push((i, j));
        }
    }
    let pairs: Vec<[u32; 2]> = reflection.iter().map(|&(i, j)| [i, j]).collect();
    let cycles: Vec<&[u32]> = pairs.iter().map(|p| &p[..]).collect();
    let refl = Permutation::from_cycles(n, &cycles).expect("valid");
    generated(n, &[cycle(n, &points), refl])
}
