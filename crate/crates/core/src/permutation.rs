//! Permutations of `{1..n}`.
//!
//! Composition is right-to-left throughout the crate: `g.compose(&h)` is the
//! permutation `x ↦ g(h(x))`, so `h` acts first. Points are 1-indexed in
//! every textual form and in [`Permutation::image`]; storage is 0-based.

use std::fmt;

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};

/// Default cap on the degree for full group enumeration.
pub const ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Cycles in weakly decreasing length, ties broken by smallest leading
/// point; each cycle starts at its smallest point. Points are 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from one-line notation with 1-indexed values.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation of degree `n` from disjoint 1-indexed cycles.
    /// Points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={n}"
                    )));
                }
                if seen[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears twice"
                    )));
                }
                seen[p - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping 1-indexed points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(n, &[vec![a, b]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Image of a 1-indexed point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// One-line notation, 1-indexed.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Position of `self` in the lexicographic listing of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller_after = self.images[i + 1..]
                .iter()
                .filter(|&&v| v < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_after;
        }
        rank
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i64 {
        let n = self.degree();
        let cycles = self.raw_cycles().len();
        if (n - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn raw_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        // Cycles come out of raw_cycles starting at their minimum point and
        // ordered by that minimum, so a stable sort by length finishes the job.
        let mut cycles = self.raw_cycles();
        cycles.sort_by(|a, b| b.len().cmp(&a.len()));
        CycleDecomposition { cycles }
    }

    pub fn cycle_type(&self) -> YoungDiagram {
        YoungDiagram::from_unsorted(self.raw_cycles().iter().map(Vec::len).collect())
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Permutation) -> Result<Permutation> {
        if self.degree() != h.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: h.degree(),
            });
        }
        Ok(h.compose_unchecked(&self.compose_unchecked(&h.inverse())))
    }

    /// Cycle notation without fixed points; the identity is "()".
    pub fn short_cycle_string(&self) -> String {
        let cycles: Vec<_> = self
            .cycle_decomposition()
            .cycles
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if cycles.is_empty() {
            return "()".to_string();
        }
        format_cycles(&cycles)
    }

    /// Parses cycle notation ("(1 2 4)(5 6)", commas allowed) or one-line
    /// notation ("2 4 3 1"). For cycle notation the degree defaults to the
    /// largest point mentioned.
    pub fn parse(s: &str, degree: Option<usize>) -> Result<Permutation> {
        let s = s.trim();
        let p = if s.starts_with('(') {
            let cycles = parse_cycles(s)?;
            let max = cycles.iter().flatten().copied().max().unwrap_or(0);
            let n = degree.unwrap_or(max);
            Permutation::from_cycles(n, &cycles)?
        } else {
            let images = s
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Permutation::from_one_line(&images)?
        };
        if let Some(n) = degree {
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: p.degree(),
                    right: n,
                });
            }
        }
        Ok(p)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {s:?}")))?;
        let end = body_start
            .find(')')
            .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {s:?}")))?;
        let body = &body_start[..end];
        let cycle = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body_start[end + 1..].trim_start();
    }
    Ok(cycles)
}

fn format_cycles(cycles: &[Vec<usize>]) -> String {
    cycles
        .iter()
        .map(|c| {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            format!("({})", pts.join(" "))
        })
        .collect()
}

impl fmt::Display for Permutation {
    /// Full cycle notation including fixed points.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("()");
        }
        f.write_str(&format_cycles(&self.cycle_decomposition().cycles))
    }
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        Permutation::from_cycles(self.degree(), &self.cycles)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        f.write_str(&format_cycles(&self.cycles))
    }
}

pub fn compose(g: &Permutation, h: &Permutation) -> Result<Permutation> {
    g.compose(h)
}

pub fn sign(g: &Permutation) -> i64 {
    g.sign()
}

pub fn cycle_decomposition(g: &Permutation) -> CycleDecomposition {
    g.cycle_decomposition()
}

pub fn cycle_type(g: &Permutation) -> YoungDiagram {
    g.cycle_type()
}

/// `h ∘ g ∘ h⁻¹`.
pub fn conjugate_perm(g: &Permutation, h: &Permutation) -> Result<Permutation> {
    g.conjugate_by(h)
}

/// All of `S_n` in lexicographic one-line order, with the default cap.
pub fn enumerate_group(n: usize) -> Result<Vec<Permutation>> {
    enumerate_group_capped(n, ENUMERATION_CAP)
}

pub fn enumerate_group_capped(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n > cap {
        return Err(Error::DegreeTooLarge { degree: n, cap });
    }
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation {
        images: current.clone(),
    }];
    while next_lex(&mut current) {
        out.push(Permutation {
            images: current.clone(),
        });
    }
    Ok(out)
}

fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn seven_point_example() -> Permutation {
        Permutation::from_one_line(&[2, 4, 3, 1, 6, 5, 7]).unwrap()
    }

    fn inversion_parity(p: &Permutation) -> i64 {
        let v = p.one_line();
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn compose_examples() {
        let s3 = enumerate_group(3).unwrap();
        let id = Permutation::identity(3);
        for h in &s3 {
            assert_eq!(&id.compose(h).unwrap(), h);
        }
        let t = Permutation::transposition(2, 1, 2).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
        for a in &s3 {
            for b in &s3 {
                for c in &s3 {
                    let l = a.compose(b).unwrap().compose(c).unwrap();
                    let r = a.compose(&b.compose(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
        assert!(matches!(
            id.compose(&Permutation::identity(2)),
            Err(Error::DegreeMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn right_factor_acts_first() {
        let g = Permutation::parse("(1 2)", Some(3)).unwrap();
        let h = Permutation::parse("(2 3)", Some(3)).unwrap();
        // h sends 2 to 3, g fixes 3.
        assert_eq!(g.compose(&h).unwrap().image(2), 3);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        for a in 1..=4 {
            for b in a + 1..=4 {
                assert_eq!(Permutation::transposition(4, a, b).unwrap().sign(), -1);
            }
        }
        let s4 = enumerate_group(4).unwrap();
        for g in &s4 {
            assert_eq!(g.sign(), inversion_parity(g));
            for h in &s4 {
                assert_eq!(g.compose(h).unwrap().sign(), g.sign() * h.sign());
            }
        }
    }

    #[test]
    fn cycle_decomposition_examples() {
        let g = seven_point_example();
        let dec = g.cycle_decomposition();
        assert_eq!(
            dec.cycles,
            vec![vec![1, 2, 4], vec![5, 6], vec![3], vec![7]]
        );
        assert_eq!(dec.to_string(), "(1 2 4)(5 6)(3)(7)");
        assert_eq!(
            Permutation::identity(3).cycle_decomposition().cycles,
            vec![vec![1], vec![2], vec![3]]
        );
        let n = 6;
        let long: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
        let c = Permutation::from_one_line(&long).unwrap().cycle_decomposition();
        assert_eq!(c.cycles, vec![(1..=n).collect::<Vec<_>>()]);
    }

    #[test]
    fn ordering_ties_by_leading_point() {
        let g = Permutation::parse("(4 6)(1 3)(2 5)", Some(6)).unwrap();
        assert_eq!(g.to_string(), "(1 3)(2 5)(4 6)");
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(
            seven_point_example().cycle_type(),
            YoungDiagram::new(vec![3, 2, 1, 1]).unwrap()
        );
        assert_eq!(
            Permutation::identity(4).cycle_type(),
            YoungDiagram::new(vec![1, 1, 1, 1]).unwrap()
        );
    }

    #[test]
    fn cycle_type_is_conjugation_invariant_in_s5() {
        let s5 = enumerate_group(5).unwrap();
        for g in &s5 {
            let t = g.cycle_type();
            for h in &s5 {
                assert_eq!(conjugate_perm(g, h).unwrap().cycle_type(), t);
            }
        }
    }

    #[test]
    fn conjugating_a_transposition_relabels_its_points() {
        let s4 = enumerate_group(4).unwrap();
        assert_eq!(
            conjugate_perm(&s4[5], &Permutation::identity(4)).unwrap(),
            s4[5]
        );
        for a in 1..=4 {
            for b in a + 1..=4 {
                let t = Permutation::transposition(4, a, b).unwrap();
                for h in &s4 {
                    let expected =
                        Permutation::transposition(4, h.image(a), h.image(b)).unwrap();
                    assert_eq!(conjugate_perm(&t, h).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn enumeration() {
        let s0 = enumerate_group(0).unwrap();
        assert_eq!(s0, vec![Permutation::identity(0)]);
        assert_eq!(enumerate_group(3).unwrap().len(), 6);
        let s5 = enumerate_group(5).unwrap();
        assert_eq!(s5.len(), 120);
        for (i, g) in s5.iter().enumerate() {
            assert_eq!(g.lex_rank(), i);
        }
        assert!(s5.windows(2).all(|w| w[0] < w[1]));
        let set: HashSet<_> = s5.iter().cloned().collect();
        for g in &s5 {
            for h in &s5 {
                assert!(set.contains(&g.compose(h).unwrap()));
            }
        }
        assert!(matches!(
            enumerate_group(9),
            Err(Error::DegreeTooLarge { degree: 9, cap: 8 })
        ));
    }

    #[test]
    fn round_trip_and_class_count() {
        for n in 0..=6 {
            for g in enumerate_group(n).unwrap() {
                let back = g.cycle_decomposition().to_permutation().unwrap();
                assert_eq!(back, g);
            }
        }
        for n in 0..=7 {
            let types: HashSet<_> = enumerate_group(n)
                .unwrap()
                .iter()
                .map(|g| g.cycle_type())
                .collect();
            assert_eq!(types.len(), crate::diagram::enumerate_partitions(n).len());
        }
    }

    #[test]
    fn equal_cycle_type_iff_conjugate() {
        for n in 0..=5 {
            let group = enumerate_group(n).unwrap();
            for g in &group {
                for g2 in &group {
                    let conj = group
                        .iter()
                        .any(|h| &conjugate_perm(g, h).unwrap() == g2);
                    assert_eq!(conj, g.cycle_type() == g2.cycle_type());
                }
            }
        }
    }

    #[test]
    fn parsing() {
        let a = Permutation::parse("(1 2 4)(5 6)(3)(7)", None).unwrap();
        let b = Permutation::parse("2 4 3 1 6 5 7", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, seven_point_example());
        assert_eq!(Permutation::parse("(1,2,4)(5,6)", Some(7)).unwrap(), a);
        assert_eq!(Permutation::parse("()", Some(3)).unwrap(), Permutation::identity(3));
        assert!(Permutation::parse("1 1 2", None).is_err());
        assert!(Permutation::parse("(1 2", None).is_err());
        assert!(Permutation::parse("(1 2)(2 3)", None).is_err());
        assert!(matches!(
            Permutation::parse("(1 2)", Some(1)),
            Err(Error::InvalidPermutation(_))
        ));
        assert_eq!(a.short_cycle_string(), "(1 2 4)(5 6)");
        assert_eq!(Permutation::identity(3).short_cycle_string(), "()");
    }
}
