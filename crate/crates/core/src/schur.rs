//! Tensor powers of `Q^N` and the Young-symmetrizer projectors on them.
//!
//! Conventions:
//! - A basis word `(i_1, …, i_n)` with 0-based letters has index
//!   `Σ i_k · N^(n-1-k)`; the first tensor factor is the most significant
//!   digit, so [`monoid_operator`] is the ordinary Kronecker power.
//! - [`permutation_operator`] moves tensor factor `k` to slot `σ(k)`. With the
//!   right-to-left composition of [`Permutation::compose`] this makes
//!   `σ ↦ P(σ)` a homomorphism, which is what lets the normalized Young
//!   symmetrizer act as an idempotent up to its constant.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{column_group, row_group, AlgebraElement};
use crate::diagram::{enumerate_partitions, YoungDiagram};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseEchelon, SparseRow};
use crate::permutation::{enumerate_group, Permutation, ENUMERATION_CAP};
use crate::scalar::Field;
use crate::tableaux::{count_standard, Tableau};

/// Largest `N^n` accepted by rank and basis computations.
pub const SCHUR_SIZE_CAP: usize = 4096;

/// Largest `N^n` accepted by [`commutant_dimension`]; the linear system has
/// `(N^n)^2` unknowns.
pub const COMMUTANT_SIZE_CAP: usize = 64;

/// An operator on `(Q^N)^{⊗n}`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorOperator<T> {
    base_dim: usize,
    factors: usize,
    matrix: Matrix<T>,
}

impl<T: Field> TensorOperator<T> {
    pub fn new(base_dim: usize, factors: usize, matrix: Matrix<T>) -> Result<Self> {
        let side = tensor_dim(base_dim, factors).ok_or(Error::SizeTooLarge {
            dim: usize::MAX,
            cap: SCHUR_SIZE_CAP,
        })?;
        if matrix.rows() != side || matrix.cols() != side {
            return Err(Error::InvalidMatrix(format!(
                "operator on ({base_dim})^{factors} must be {side}x{side}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(TensorOperator {
            base_dim,
            factors,
            matrix,
        })
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn side(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if (self.base_dim, self.factors) != (other.base_dim, other.factors) {
            return Err(Error::DegreeMismatch {
                left: self.factors,
                right: other.factors,
            });
        }
        Ok(TensorOperator {
            base_dim: self.base_dim,
            factors: self.factors,
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        match (self.compose(other), other.compose(self)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

/// A basis of a subspace of `(Q^N)^{⊗n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis<T> {
    pub base_dim: usize,
    pub factors: usize,
    pub vectors: Vec<Vec<T>>,
}

impl<T: Field> SubspaceBasis<T> {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Basis vectors as the columns of an `N^n × dim` matrix.
    pub fn as_matrix(&self) -> Matrix<T> {
        let side = tensor_dim(self.base_dim, self.factors).unwrap_or(0);
        let mut m = Matrix::zeros(side, self.vectors.len());
        for (j, v) in self.vectors.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }
}

/// `N^n`, or `None` on overflow.
pub fn tensor_dim(base_dim: usize, factors: usize) -> Option<usize> {
    base_dim.checked_pow(factors.try_into().ok()?)
}

fn checked_dim(base_dim: usize, factors: usize, cap: usize) -> Result<usize> {
    match tensor_dim(base_dim, factors) {
        Some(d) if d <= cap => Ok(d),
        Some(d) => Err(Error::SizeTooLarge { dim: d, cap }),
        None => Err(Error::SizeTooLarge {
            dim: usize::MAX,
            cap,
        }),
    }
}

#[derive(Debug, Clone, Copy)]
struct WordSpace {
    base: usize,
    len: usize,
}

impl WordSpace {
    fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut d = vec![0; self.len];
        for slot in d.iter_mut().rev() {
            *slot = index % self.base;
            index /= self.base;
        }
        d
    }

    fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &x| acc * self.base + x)
    }

    /// Index of the word obtained by moving factor `k` to slot `σ(k)`.
    fn permute(&self, sigma: &Permutation, digits: &[usize], scratch: &mut [usize]) -> usize {
        for (k, &letter) in digits.iter().enumerate() {
            scratch[sigma.apply(k)] = letter;
        }
        self.index(scratch)
    }
}

/// The permutation matrix moving factor `k` to slot `σ(k)`.
pub fn permutation_operator<T: Field>(sigma: &Permutation, base_dim: usize) -> TensorOperator<T> {
    let n = sigma.degree();
    let words = WordSpace {
        base: base_dim,
        len: n,
    };
    let side = tensor_dim(base_dim, n).expect("tensor dimension overflow");
    let mut m = Matrix::zeros(side, side);
    let mut scratch = vec![0; n];
    for source in 0..side {
        let target = words.permute(sigma, &words.digits(source), &mut scratch);
        m[(target, source)] = T::one();
    }
    TensorOperator {
        base_dim,
        factors: n,
        matrix: m,
    }
}

/// The Kronecker power `A^{⊗n}`.
pub fn monoid_operator<T: Field>(a: &Matrix<T>, factors: usize) -> Result<TensorOperator<T>> {
    if !a.is_square() {
        return Err(Error::InvalidMatrix(format!(
            "expected a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let mut m = Matrix::identity(1);
    for _ in 0..factors {
        m = m.kron(a);
    }
    Ok(TensorOperator {
        base_dim: a.rows(),
        factors,
        matrix: m,
    })
}

/// `Σ_σ a(σ) · P(σ)`.
pub fn algebra_operator<T: Field>(a: &AlgebraElement<T>, base_dim: usize) -> TensorOperator<T> {
    let n = a.degree();
    let words = WordSpace {
        base: base_dim,
        len: n,
    };
    let side = tensor_dim(base_dim, n).expect("tensor dimension overflow");
    let mut m = Matrix::<T>::zeros(side, side);
    let mut scratch = vec![0; n];
    for source in 0..side {
        let digits = words.digits(source);
        for (sigma, c) in a.terms() {
            let target = words.permute(sigma, &digits, &mut scratch);
            m[(target, source)] = m[(target, source)].clone() + c.clone();
        }
    }
    TensorOperator {
        base_dim,
        factors: n,
        matrix: m,
    }
}

/// Applies `A^{⊗n}` to a vector without forming the Kronecker power.
pub fn apply_tensor_power<T: Field>(a: &Matrix<T>, factors: usize, v: &[T]) -> Vec<T> {
    let base = a.rows();
    let mut cur = v.to_vec();
    for slot in 0..factors {
        let stride = base.pow((factors - 1 - slot) as u32);
        let mut next = vec![T::zero(); cur.len()];
        for (idx, x) in cur.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let letter = (idx / stride) % base;
            let rest = idx - letter * stride;
            for out_letter in 0..base {
                let coeff = &a[(out_letter, letter)];
                if !coeff.is_zero() {
                    let target = rest + out_letter * stride;
                    next[target] = next[target].clone() + coeff.clone() * x.clone();
                }
            }
        }
        cur = next;
    }
    cur
}

/// Columns of the Young projector `P = op(e_Y)`, one per basis word,
/// computed as `|R||C| · P e_w = Σ_{r∈R} Σ_{c∈C} sgn(c) e_{rc·w}` in integers.
struct ProjectorColumns {
    words: WordSpace,
    rows: Vec<Permutation>,
    columns: Vec<(Permutation, i64)>,
}

impl ProjectorColumns {
    fn new(y: &YoungDiagram, base_dim: usize) -> Self {
        let t = Tableau::canonical(y);
        ProjectorColumns {
            words: WordSpace {
                base: base_dim,
                len: y.box_count(),
            },
            rows: row_group(&t),
            columns: column_group(&t)
                .into_iter()
                .map(|c| {
                    let s = c.sign();
                    (c, s)
                })
                .collect(),
        }
    }

    fn normalizer(&self) -> i64 {
        (self.rows.len() * self.columns.len()) as i64
    }

    /// `None` when the column is zero or repeats (up to sign) the column of
    /// a smaller word in the same column-group orbit.
    fn column(&self, word: usize) -> Option<BTreeMap<usize, i64>> {
        let digits = self.words.digits(word);
        let mut scratch = vec![0; self.words.len];
        let mut antisym: BTreeMap<usize, i64> = BTreeMap::new();
        for (c, s) in &self.columns {
            let target = self.words.permute(c, &digits, &mut scratch);
            if target < word {
                return None;
            }
            *antisym.entry(target).or_insert(0) += s;
        }
        antisym.retain(|_, v| *v != 0);
        if antisym.is_empty() {
            return None;
        }
        let mut out: BTreeMap<usize, i64> = BTreeMap::new();
        for (&w, &s) in &antisym {
            let wd = self.words.digits(w);
            for r in &self.rows {
                let target = self.words.permute(r, &wd, &mut scratch);
                *out.entry(target).or_insert(0) += s;
            }
        }
        out.retain(|_, v| *v != 0);
        if out.is_empty() {
            None
        } else {
            Some(out)
        }
    }
}

/// Walks the projector's columns in word order and keeps those independent
/// of the earlier ones.
fn projector_column_basis<T: Field>(
    y: &YoungDiagram,
    base_dim: usize,
) -> Result<(usize, Vec<SparseRow<T>>)> {
    let n = y.box_count();
    if n > ENUMERATION_CAP {
        return Err(Error::DegreeTooLarge {
            degree: n,
            cap: ENUMERATION_CAP,
        });
    }
    let side = checked_dim(base_dim, n, SCHUR_SIZE_CAP)?;
    let cols = ProjectorColumns::new(y, base_dim);
    let scale = T::from_frac(1, cols.normalizer());
    let mut echelon = SparseEchelon::<T>::new(side);
    let mut basis = Vec::new();
    for word in 0..side {
        let Some(col) = cols.column(word) else {
            continue;
        };
        let v: SparseRow<T> = col
            .into_iter()
            .map(|(i, c)| (i, T::from_int(c) * scale.clone()))
            .collect();
        if echelon.insert(v.clone()).is_some() {
            basis.push(v);
        }
    }
    Ok((side, basis))
}

/// `dim L_Y`: the rank of the Young projector on `(Q^N)^{⊗n}`.
pub fn schur_dimension(y: &YoungDiagram, base_dim: usize) -> Result<usize> {
    Ok(projector_column_basis::<crate::Rational>(y, base_dim)?.1.len())
}

/// Basis of `L_Y` made of projector columns, chosen greedily in word order.
pub fn schur_subspace_basis<T: Field>(
    y: &YoungDiagram,
    base_dim: usize,
) -> Result<SubspaceBasis<T>> {
    let (side, sparse) = projector_column_basis::<T>(y, base_dim)?;
    let vectors = sparse
        .into_iter()
        .map(|row| {
            let mut v = vec![T::zero(); side];
            for (i, c) in row {
                v[i] = c;
            }
            v
        })
        .collect();
    Ok(SubspaceBasis {
        base_dim,
        factors: y.box_count(),
        vectors,
    })
}

/// The matrix of `A^{⊗n}` restricted to `L_Y`, in the basis from
/// [`schur_subspace_basis`].
pub fn apply_schur_functor<T: Field>(y: &YoungDiagram, a: &Matrix<T>) -> Result<Matrix<T>> {
    if !a.is_square() {
        return Err(Error::InvalidMatrix(format!(
            "expected a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let basis = schur_subspace_basis::<T>(y, a.rows())?;
    let b = basis.as_matrix();
    let mut images = Matrix::zeros(b.rows(), b.cols());
    for (j, v) in basis.vectors.iter().enumerate() {
        for (i, x) in apply_tensor_power(a, basis.factors, v).into_iter().enumerate() {
            images[(i, j)] = x;
        }
    }
    b.solve_full_column_rank(&images)
        .ok_or(Error::BasisSolveFailure)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurWeylEntry {
    pub diagram: YoungDiagram,
    /// `f^Y`, the dimension of the `S_n` irrep.
    pub sn_dimension: usize,
    /// `dim L_Y`.
    pub schur_dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurWeylReport {
    pub base_dim: usize,
    pub factors: usize,
    pub entries: Vec<SchurWeylEntry>,
    /// `Σ f^Y · dim L_Y`.
    pub total: usize,
    /// `N^n`.
    pub expected: usize,
    pub budget_holds: bool,
    /// `dim L_Y = 0` exactly for the diagrams with more than `N` rows.
    pub vanishing_holds: bool,
}

impl SchurWeylReport {
    pub fn holds(&self) -> bool {
        self.budget_holds && self.vanishing_holds
    }
}

pub fn schur_weyl_check(base_dim: usize, factors: usize) -> Result<SchurWeylReport> {
    let expected = checked_dim(base_dim, factors, SCHUR_SIZE_CAP)?;
    let mut entries = Vec::new();
    for y in enumerate_partitions(factors) {
        let sn_dimension = count_standard(&y)?;
        let schur_dimension = schur_dimension(&y, base_dim)?;
        entries.push(SchurWeylEntry {
            diagram: y,
            sn_dimension,
            schur_dimension,
        });
    }
    let total = entries
        .iter()
        .map(|e| e.sn_dimension * e.schur_dimension)
        .sum();
    let vanishing_holds = entries
        .iter()
        .all(|e| (e.schur_dimension == 0) == (e.diagram.row_count() > base_dim));
    Ok(SchurWeylReport {
        base_dim,
        factors,
        entries,
        total,
        expected,
        budget_holds: total == expected,
        vanishing_holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantReport {
    pub base_dim: usize,
    pub factors: usize,
    /// Dimension of the operators commuting with every `A^{⊗n}`.
    pub commutant_dim: usize,
    /// Dimension of the span of the permutation operators.
    pub permutation_span_dim: usize,
    /// `Σ (f^Y)^2` over diagrams with at most `N` rows.
    pub young_count: usize,
}

impl CommutantReport {
    pub fn holds(&self) -> bool {
        self.commutant_dim == self.permutation_span_dim && self.commutant_dim == self.young_count
    }
}

/// Sparse `D × D` matrix of `Σ_k 1 ⊗ … ⊗ E_{ij} ⊗ … ⊗ 1` (slot `k`), given as
/// a list of `(row, col)` unit entries with multiplicity.
fn derived_unit(words: WordSpace, side: usize, i: usize, j: usize) -> Vec<(usize, usize, i64)> {
    let mut entries: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for source in 0..side {
        let mut digits = words.digits(source);
        for k in 0..words.len {
            if digits[k] == j {
                digits[k] = i;
                *entries.entry((words.index(&digits), source)).or_insert(0) += 1;
                digits[k] = j;
            }
        }
    }
    entries.into_iter().map(|((r, c), v)| (r, c, v)).collect()
}

/// Scales an integer equation so its coefficients are coprime and its
/// leading coefficient is positive; `None` for the empty equation.
fn primitive(eq: BTreeMap<usize, i64>) -> Option<Vec<(usize, i64)>> {
    let lead = *eq.values().next()?;
    let g = eq.values().fold(0i64, |acc, &v| num_integer::gcd(acc, v));
    let g = if lead < 0 { -g } else { g };
    Some(eq.into_iter().map(|(k, v)| (k, v / g)).collect())
}

/// Dimension of `{X : X A^{⊗n} = A^{⊗n} X for all A}`.
///
/// The span of `{A^{⊗n}}` is the associative algebra generated by the
/// derived action of the matrix units, `Σ_k 1 ⊗ … ⊗ E_{ij} ⊗ … ⊗ 1`, so the
/// system imposes commutation with those `N^2` operators.
pub fn commutant_dimension(base_dim: usize, factors: usize) -> Result<usize> {
    let side = checked_dim(base_dim, factors, COMMUTANT_SIZE_CAP)?;
    let words = WordSpace {
        base: base_dim,
        len: factors,
    };
    let unknowns = side * side;
    let mut generators: Vec<(usize, usize)> = (0..base_dim).map(|i| (i, i)).collect();
    for i in 0..base_dim {
        for j in 0..base_dim {
            if i != j {
                generators.push((i, j));
            }
        }
    }
    let mut equations: BTreeSet<(usize, Vec<(usize, i64)>)> = BTreeSet::new();
    for (i, j) in generators {
        let entries = derived_unit(words, side, i, j);
        // by_col[c] lists (r, v) with L[r, c] = v; by_row[r] lists (c, v).
        let mut by_col: Vec<Vec<(usize, i64)>> = vec![Vec::new(); side];
        let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); side];
        for &(r, c, v) in &entries {
            by_col[c].push((r, v));
            by_row[r].push((c, v));
        }
        for a in 0..side {
            for b in 0..side {
                // (XL - LX)[a, b] = Σ_c X[a, c] L[c, b] - Σ_c L[a, c] X[c, b]
                let mut eq: BTreeMap<usize, i64> = BTreeMap::new();
                for &(c, v) in &by_col[b] {
                    *eq.entry(a * side + c).or_insert(0) += v;
                }
                for &(c, v) in &by_row[a] {
                    *eq.entry(c * side + b).or_insert(0) -= v;
                }
                eq.retain(|_, v| *v != 0);
                if let Some(eq) = primitive(eq) {
                    equations.insert((eq.len(), eq));
                }
            }
        }
    }
    // Short equations first: the single-term ones from the diagonal units
    // become pivots that strip most unknowns from the longer ones.
    let mut echelon = SparseEchelon::<crate::Rational>::new(unknowns);
    for (_, eq) in equations {
        echelon.insert(
            eq.into_iter()
                .map(|(k, v)| (k, crate::Rational::from_int(v)))
                .collect(),
        );
    }
    Ok(unknowns - echelon.rank())
}

/// Dimension of the span of `{P(σ) : σ ∈ S_n}` inside the `N^n × N^n`
/// matrices.
pub fn permutation_span_dimension(base_dim: usize, factors: usize) -> Result<usize> {
    let side = checked_dim(base_dim, factors, COMMUTANT_SIZE_CAP)?;
    let words = WordSpace {
        base: base_dim,
        len: factors,
    };
    let mut echelon = SparseEchelon::<crate::Rational>::new(side * side);
    let mut scratch = vec![0; factors];
    for sigma in enumerate_group(factors)? {
        let row: SparseRow<crate::Rational> = (0..side)
            .map(|source| {
                let target = words.permute(&sigma, &words.digits(source), &mut scratch);
                (target * side + source, crate::Rational::from_int(1))
            })
            .collect();
        echelon.insert(row);
    }
    Ok(echelon.rank())
}

pub fn commutant_report(base_dim: usize, factors: usize) -> Result<CommutantReport> {
    let commutant_dim = commutant_dimension(base_dim, factors)?;
    let permutation_span_dim = permutation_span_dimension(base_dim, factors)?;
    let young_count = crate::diagram::enumerate_bounded(factors, base_dim)
        .iter()
        .map(|y| count_standard(y).map(|f| f * f))
        .sum::<Result<usize>>()?;
    Ok(CommutantReport {
        base_dim,
        factors,
        commutant_dim,
        permutation_span_dim,
        young_count,
    })
}
