//! The group algebra `Q[S_n]` and the symmetrizers built from tableaux.
//!
//! Products follow the composition convention of [`Permutation::compose`]:
//! in `a · b` the factor `b` acts first. The Young symmetrizer of a shape is
//! `p_S · p_A` on its canonical tableau, so column antisymmetrization happens
//! before row symmetrization. Both symmetrizers are normalized by their
//! subgroup orders, which makes them honest idempotents and leaves `e_Y`
//! quasi-idempotent with a reported constant.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};
use crate::linalg::SparseEchelon;
use crate::permutation::{enumerate_group_capped, Permutation, ENUMERATION_CAP};
use crate::scalar::Field;
use crate::tableaux::Tableau;

/// A finitely supported map from `S_n` to the field `T`. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement<T> {
    degree: usize,
    terms: BTreeMap<Permutation, T>,
}

impl<T: Field> AlgebraElement<T> {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `δ_g`.
    pub fn basis(g: Permutation) -> Self {
        let degree = g.degree();
        let mut terms = BTreeMap::new();
        terms.insert(g, T::one());
        AlgebraElement { degree, terms }
    }

    pub fn identity(degree: usize) -> Self {
        Self::basis(Permutation::identity(degree))
    }

    /// Sums the given terms, merging repeats and dropping zeros.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, T)>,
    {
        let mut out = Self::zero(degree);
        for (g, c) in terms {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, g: Permutation, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, T> {
        &self.terms
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, g: &Permutation) -> T {
        self.terms.get(g).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        AlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(g, a)| (g.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: BTreeMap<Permutation, T> = BTreeMap::new();
        for (g1, a) in &self.terms {
            for (g2, b) in &other.terms {
                let prod = a.clone() * b.clone();
                let g = g1.compose_unchecked(g2);
                acc.entry(g)
                    .and_modify(|c| *c = c.clone() + prod.clone())
                    .or_insert(prod);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            degree: self.degree,
            terms: acc,
        })
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }
}

impl<T: Field> fmt::Display for AlgebraElement<T> {
    /// `"1/2*() + 1/2*(1 2)"`; terms in lexicographic one-line order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            let perm = g.short_cycle_string();
            if k == 0 {
                write!(f, "{c}*{perm}")?;
            } else if c.is_negative() {
                write!(f, " - {}*{perm}", c.abs())?;
            } else {
                write!(f, " + {c}*{perm}")?;
            }
        }
        Ok(())
    }
}

/// Permutations of `1..=n` that map each block onto itself.
pub fn block_stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let local = enumerate_group_capped(block.len(), usize::MAX).expect("uncapped");
        let mut next = Vec::with_capacity(group.len() * local.len());
        for g in &group {
            for l in &local {
                let mut images = g.one_line();
                for (pos, &point) in block.iter().enumerate() {
                    images[point - 1] = block[l.apply(pos)];
                }
                next.push(Permutation::from_one_line(&images).expect("block permutation"));
            }
        }
        group = next;
    }
    group
}

/// Permutations preserving each row of the tableau setwise.
pub fn row_group(t: &Tableau) -> Vec<Permutation> {
    block_stabilizer(t.size(), t.rows())
}

/// Permutations preserving each column of the tableau setwise.
pub fn column_group(t: &Tableau) -> Vec<Permutation> {
    block_stabilizer(t.size(), &t.columns())
}

/// `p_S = (1/|R|) Σ_{σ∈R} σ`.
pub fn row_symmetrizer<T: Field>(t: &Tableau) -> AlgebraElement<T> {
    let group = row_group(t);
    let weight = T::from_frac(1, group.len() as i64);
    AlgebraElement {
        degree: t.size(),
        terms: group.into_iter().map(|g| (g, weight.clone())).collect(),
    }
}

/// `p_A = (1/|C|) Σ_{σ∈C} sgn(σ) σ`.
pub fn column_antisymmetrizer<T: Field>(t: &Tableau) -> AlgebraElement<T> {
    let group = column_group(t);
    let weight = T::from_frac(1, group.len() as i64);
    AlgebraElement {
        degree: t.size(),
        terms: group
            .into_iter()
            .map(|g| {
                let c = if g.sign() > 0 {
                    weight.clone()
                } else {
                    -weight.clone()
                };
                (g, c)
            })
            .collect(),
    }
}

/// `e_Y = p_S · p_A` on the canonical row-major tableau of `y`.
pub fn young_symmetrizer<T: Field>(y: &YoungDiagram) -> AlgebraElement<T> {
    let t = Tableau::canonical(y);
    row_symmetrizer::<T>(&t)
        .multiply(&column_antisymmetrizer(&t))
        .expect("same degree")
}

pub fn multiply<T: Field>(a: &AlgebraElement<T>, b: &AlgebraElement<T>) -> Result<AlgebraElement<T>> {
    a.multiply(b)
}

/// The rational `c` with `e · e = c · e`.
pub fn quasi_idempotent_constant<T: Field>(e: &AlgebraElement<T>) -> Result<T> {
    let (g, a) = e.terms.iter().next().ok_or(Error::ZeroElement)?;
    let square = e.multiply(e)?;
    let c = square.coefficient(g) / a.clone();
    if square == e.scale(&c) {
        Ok(c)
    } else {
        Err(Error::NotQuasiIdempotent)
    }
}

/// Dimension of the left ideal `Q[S_n] · e`, i.e. the rank of the `n! × n!`
/// matrix whose row `g` holds the coefficients of `δ_g · e`.
pub fn left_ideal_dimension<T: Field>(e: &AlgebraElement<T>) -> Result<usize> {
    let n = e.degree;
    if n > ENUMERATION_CAP {
        return Err(Error::DegreeTooLarge {
            degree: n,
            cap: ENUMERATION_CAP,
        });
    }
    let group = enumerate_group_capped(n, ENUMERATION_CAP)?;
    let mut echelon = SparseEchelon::<T>::new(group.len());
    for g in &group {
        let row: BTreeMap<usize, T> = e
            .terms
            .iter()
            .map(|(h, c)| (g.compose_unchecked(h).lex_rank(), c.clone()))
            .collect();
        echelon.insert(row);
    }
    Ok(echelon.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_partitions;
    use crate::permutation::enumerate_group;
    use crate::tableaux::count_standard;
    use crate::Rational;

    type E = AlgebraElement<Rational>;

    fn d(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn q(n: i64, den: i64) -> Rational {
        Rational::from_frac(n, den)
    }

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    fn factorial(n: usize) -> i64 {
        (1..=n as i64).product()
    }

    #[test]
    fn row_symmetrizer_examples() {
        let all: E = E::from_terms(3, enumerate_group(3).unwrap().into_iter().map(|g| (g, q(1, 6)))).unwrap();
        assert_eq!(row_symmetrizer::<Rational>(&Tableau::canonical(&d(&[3]))), all);
        assert_eq!(
            row_symmetrizer::<Rational>(&Tableau::canonical(&d(&[1, 1, 1]))),
            E::identity(3)
        );
        let expected =
            E::from_terms(3, [(p("()", 3), q(1, 2)), (p("(1 2)", 3), q(1, 2))]).unwrap();
        assert_eq!(row_symmetrizer::<Rational>(&Tableau::canonical(&d(&[2, 1]))), expected);
    }

    #[test]
    fn column_antisymmetrizer_examples() {
        let signed: E = E::from_terms(
            3,
            enumerate_group(3)
                .unwrap()
                .into_iter()
                .map(|g| {
                    let s = g.sign();
                    (g, q(s, 6))
                }),
        )
        .unwrap();
        assert_eq!(
            column_antisymmetrizer::<Rational>(&Tableau::canonical(&d(&[1, 1, 1]))),
            signed
        );
        assert_eq!(
            column_antisymmetrizer::<Rational>(&Tableau::canonical(&d(&[3]))),
            E::identity(3)
        );
        let expected =
            E::from_terms(3, [(p("()", 3), q(1, 2)), (p("(1 3)", 3), q(-1, 2))]).unwrap();
        assert_eq!(
            column_antisymmetrizer::<Rational>(&Tableau::canonical(&d(&[2, 1]))),
            expected
        );
    }

    #[test]
    fn young_symmetrizer_extremes() {
        let t3 = Tableau::canonical(&d(&[3]));
        assert_eq!(young_symmetrizer::<Rational>(&d(&[3])), row_symmetrizer(&t3));
        let t111 = Tableau::canonical(&d(&[1, 1, 1]));
        assert_eq!(
            young_symmetrizer::<Rational>(&d(&[1, 1, 1])),
            column_antisymmetrizer(&t111)
        );
    }

    // Expanded by hand: (e + (12))(e - (13)) / 4.
    #[test]
    fn young_symmetrizer_21_by_hand() {
        let e = young_symmetrizer::<Rational>(&d(&[2, 1]));
        let expected = E::from_terms(
            3,
            [
                (p("()", 3), q(1, 4)),
                (p("(1 2)", 3), q(1, 4)),
                (p("(1 3)", 3), q(-1, 4)),
                (p("(1 2)", 3).compose(&p("(1 3)", 3)).unwrap(), q(-1, 4)),
            ],
        )
        .unwrap();
        assert_eq!(e, expected);
        assert_eq!(quasi_idempotent_constant(&e).unwrap(), q(3, 4));
    }

    #[test]
    fn multiply_examples() {
        let s3 = enumerate_group(3).unwrap();
        for g in &s3 {
            for h in &s3 {
                let prod = E::basis(g.clone()).multiply(&E::basis(h.clone())).unwrap();
                assert_eq!(prod, E::basis(g.compose(h).unwrap()));
            }
        }
        let ps = row_symmetrizer::<Rational>(&Tableau::canonical(&d(&[2, 1])));
        assert_eq!(ps.multiply(&ps).unwrap(), ps);
        assert!(matches!(
            E::identity(2).multiply(&E::identity(3)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn multiply_is_associative_on_sampled_triples() {
        use rand::{Rng, SeedableRng};
        let s4 = enumerate_group(4).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let random = |rng: &mut rand_chacha::ChaCha8Rng| {
            let k = rng.gen_range(1..5);
            E::from_terms(
                4,
                (0..k).map(|_| {
                    (
                        s4[rng.gen_range(0..24)].clone(),
                        q(rng.gen_range(-5..6), rng.gen_range(1..4)),
                    )
                }),
            )
            .unwrap()
        };
        for _ in 0..50 {
            let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
            let l = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let r = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn quasi_idempotent_examples() {
        for y in enumerate_partitions(4) {
            let ps = row_symmetrizer::<Rational>(&Tableau::canonical(&y));
            assert_eq!(quasi_idempotent_constant(&ps).unwrap(), q(1, 1));
        }
        let g = E::basis(p("(1 2 3)", 3));
        assert_eq!(quasi_idempotent_constant(&g), Err(Error::NotQuasiIdempotent));
        let t = E::basis(p("(1 2)", 3));
        assert_eq!(quasi_idempotent_constant(&t), Err(Error::NotQuasiIdempotent));
        assert_eq!(quasi_idempotent_constant(&E::zero(3)), Err(Error::ZeroElement));
    }

    #[test]
    fn left_ideal_examples() {
        assert_eq!(left_ideal_dimension(&young_symmetrizer::<Rational>(&d(&[3]))).unwrap(), 1);
        assert_eq!(left_ideal_dimension(&young_symmetrizer::<Rational>(&d(&[1, 1, 1]))).unwrap(), 1);
        assert_eq!(left_ideal_dimension(&young_symmetrizer::<Rational>(&d(&[2, 1]))).unwrap(), 2);
        assert_eq!(left_ideal_dimension(&E::identity(3)).unwrap(), 6);
        let big = E::identity(9);
        assert!(matches!(left_ideal_dimension(&big), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn symmetrizer_constants_match_tableau_counts() {
        for n in 0..=5 {
            for y in enumerate_partitions(n) {
                let t = Tableau::canonical(&y);
                let ps = row_symmetrizer::<Rational>(&t);
                let pa = column_antisymmetrizer::<Rational>(&t);
                assert_eq!(quasi_idempotent_constant(&pa).unwrap(), q(1, 1));
                assert_eq!(quasi_idempotent_constant(&ps).unwrap(), q(1, 1));
                let e = young_symmetrizer::<Rational>(&y);
                assert!(!e.is_zero());
                let c = quasi_idempotent_constant(&e).unwrap();
                assert!(c > q(0, 1));
                let f = count_standard(&y).unwrap() as i64;
                let rc = (row_group(&t).len() * column_group(&t).len()) as i64;
                assert_eq!(c * q(rc, 1), q(factorial(n), f), "shape {y}");
            }
        }
    }

    #[test]
    fn distinct_shapes_are_separated() {
        for n in 1..=4 {
            let group = enumerate_group(n).unwrap();
            let shapes = enumerate_partitions(n);
            for a in &shapes {
                for b in &shapes {
                    if a == b {
                        continue;
                    }
                    let ea = young_symmetrizer::<Rational>(a);
                    let eb = young_symmetrizer::<Rational>(b);
                    for g in &group {
                        let mid = ea.multiply(&E::basis(g.clone())).unwrap();
                        assert!(mid.multiply(&eb).unwrap().is_zero(), "{a} vs {b} at {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn text_form() {
        let ps = row_symmetrizer::<Rational>(&Tableau::canonical(&d(&[2, 1])));
        assert_eq!(ps.to_string(), "1/2*() + 1/2*(1 2)");
        let pa = column_antisymmetrizer::<Rational>(&Tableau::canonical(&d(&[2, 1])));
        assert_eq!(pa.to_string(), "1/2*() - 1/2*(1 3)");
        assert_eq!(E::zero(2).to_string(), "0");
    }
}
