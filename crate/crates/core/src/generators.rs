//! Concrete shapes and decompositions for the Weil transfer of a
//! Severi–Brauer variety of degree `N` and for the associated unitary
//! involution variety.
//!
//! All generators take the degree `N = p^n` directly. Where a brute-force
//! route exists (swap orbits, subset enumeration) it is exposed next to the
//! closed form so the two can be checked against each other.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::combinatorics::{binomial, count_disjoint_subset_pairs, multinomial};
use crate::{ArtinClass, Error, GradedShape, Multiplicity, Result, Shift};

/// Tile label of the upper motive.
pub const UPPER: &str = "U";
/// Tile label of the upper motive twisted by `A`.
pub const UPPER_TWISTED: &str = "U*A";

fn require_degree(degree: u64) -> Result<()> {
    if degree < 1 {
        return Err(Error::DegreeTooSmall { degree, min: 1 });
    }
    Ok(())
}

fn require_odd_degree(degree: u64) -> Result<()> {
    require_degree(degree)?;
    if degree.is_even() {
        return Err(Error::EvenDegree(degree));
    }
    Ok(())
}

/// `F{0} + F{1} + ... + F{N-1}`: the shape of projective space of dimension `N - 1`.
pub fn projective_space_shape<M: Multiplicity>(degree: u64) -> Result<GradedShape<M>> {
    require_degree(degree)?;
    Ok(GradedShape::from_items(
        (0..degree).map(|s| (s, ArtinClass::F, M::one())),
    ))
}

/// Shape of the Weil transfer of `P^{N-1}` in closed form: `F{2i}` for every
/// `i < N`, and `F{i+j} + A{i+j}` for every `i < j < N`.
pub fn weil_transfer_shape<M: Multiplicity>(degree: u64) -> Result<GradedShape<M>> {
    require_odd_degree(degree)?;
    let mut shape = GradedShape::empty();
    for i in 0..degree {
        shape.insert(2 * i, ArtinClass::F, M::one());
    }
    // number of pairs i < j < N with i + j = m
    for m in 1..2 * degree.saturating_sub(1) {
        let lo = m.saturating_sub(degree - 1);
        let hi = (m - 1) / 2;
        if hi < lo {
            continue;
        }
        let pairs = M::from_u64_exact(hi - lo + 1);
        shape.insert(m, ArtinClass::F, pairs.clone());
        shape.insert(m, ArtinClass::A, pairs);
    }
    Ok(shape)
}

/// An orbit of the factor exchange `(i, j) -> (j, i)` on the cells of
/// `P^{N-1} x P^{N-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SwapOrbit {
    /// The diagonal cell `(i, i)`.
    Fixed(u64),
    /// The two cells `(i, j)` and `(j, i)` with `i < j`.
    Pair(u64, u64),
}

impl SwapOrbit {
    /// Codimension of the cells in the orbit.
    pub fn shift(self) -> Shift {
        match self {
            SwapOrbit::Fixed(i) => 2 * i,
            SwapOrbit::Pair(i, j) => i + j,
        }
    }
}

/// Enumerates the swap orbits on the `N x N` cell grid by walking every cell
/// and closing it under the exchange.
pub fn swap_orbits(degree: u64) -> Vec<SwapOrbit> {
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for i in 0..degree {
        for j in 0..degree {
            if seen.contains(&(i, j)) {
                continue;
            }
            let image = (j, i);
            seen.insert((i, j));
            seen.insert(image);
            if image == (i, j) {
                orbits.push(SwapOrbit::Fixed(i));
            } else {
                orbits.push(SwapOrbit::Pair(i.min(j), i.max(j)));
            }
        }
    }
    orbits
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitCensus {
    pub fixed: u64,
    pub pairs: u64,
}

pub fn orbit_census(degree: u64) -> OrbitCensus {
    swap_orbits(degree)
        .into_iter()
        .fold(OrbitCensus { fixed: 0, pairs: 0 }, |mut acc, o| {
            match o {
                SwapOrbit::Fixed(_) => acc.fixed += 1,
                SwapOrbit::Pair(..) => acc.pairs += 1,
            }
            acc
        })
}

/// Weil transfer shape computed from the swap orbits: a fixed cell gives `F`,
/// a free orbit gives the permutation module `F + A`.
pub fn weil_transfer_shape_by_orbits<M: Multiplicity>(degree: u64) -> Result<GradedShape<M>> {
    require_odd_degree(degree)?;
    let mut shape = GradedShape::empty();
    for orbit in swap_orbits(degree) {
        shape.insert(orbit.shift(), ArtinClass::F, M::one());
        if let SwapOrbit::Pair(..) = orbit {
            shape.insert(orbit.shift(), ArtinClass::A, M::one());
        }
    }
    Ok(shape)
}

/// First candidate upper shape: `F F ... F` (`N` letters).
pub fn upper_case1<M: Multiplicity>(degree: u64) -> Result<GradedShape<M>> {
    require_odd_degree(degree)?;
    projective_space_shape(degree)
}

/// Second candidate upper shape: `F A F A ... F`, with `(N+1)/2` copies of
/// `F` at even shifts and `(N-1)/2` copies of `A` at odd shifts.
pub fn upper_case2<M: Multiplicity>(degree: u64) -> Result<GradedShape<M>> {
    require_odd_degree(degree)?;
    Ok(GradedShape::from_items((0..degree).map(|s| {
        let class = if s.is_even() {
            ArtinClass::F
        } else {
            ArtinClass::A
        };
        (s, class, M::one())
    })))
}

/// One shifted summand of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand<M> {
    pub label: String,
    pub tile: GradedShape<M>,
    pub shift: Shift,
}

impl<M: Multiplicity> Summand<M> {
    pub fn new(label: impl Into<String>, tile: GradedShape<M>, shift: Shift) -> Self {
        Summand {
            label: label.into(),
            tile,
            shift,
        }
    }

    pub fn shape(&self) -> GradedShape<M> {
        self.tile.shift(self.shift)
    }
}

/// A list of shifted summands together with their direct sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedDecomposition<M> {
    summands: Vec<Summand<M>>,
    total: GradedShape<M>,
}

impl<M: Multiplicity> NamedDecomposition<M> {
    /// The total is always recomputed from the summands.
    pub fn new(summands: Vec<Summand<M>>) -> Self {
        let total = summands.iter().map(Summand::shape).sum();
        NamedDecomposition { summands, total }
    }

    pub fn summands(&self) -> &[Summand<M>] {
        &self.summands
    }

    pub fn total(&self) -> &GradedShape<M> {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `(label, shift)` pairs sorted by shift then label.
    pub fn placements(&self) -> Vec<(String, Shift)> {
        let mut out: Vec<(String, Shift)> = self
            .summands
            .iter()
            .map(|s| (s.label.clone(), s.shift))
            .collect();
        out.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
        out
    }
}

/// Transfer of a split-from-below algebra: `U{0} + (U*A){1} + U{2} + ... + U{N-1}`,
/// with `U = F F ... F`.
pub fn transfer_decomposition_case1<M: Multiplicity>(degree: u64) -> Result<NamedDecomposition<M>> {
    let upper = upper_case1::<M>(degree)?;
    let twisted = upper.twist();
    let summands = (0..degree)
        .map(|s| {
            if s.is_even() {
                Summand::new(UPPER, upper.clone(), s)
            } else {
                Summand::new(UPPER_TWISTED, twisted.clone(), s)
            }
        })
        .collect();
    Ok(NamedDecomposition::new(summands))
}

/// Transfer of an algebra with unitary involution: `U{0} + U{1} + ... + U{N-1}`,
/// with `U = F A F ... F`.
pub fn transfer_decomposition_case2<M: Multiplicity>(degree: u64) -> Result<NamedDecomposition<M>> {
    let upper = upper_case2::<M>(degree)?;
    Ok(NamedDecomposition::new(
        (0..degree)
            .map(|s| Summand::new(UPPER, upper.clone(), s))
            .collect(),
    ))
}

/// Involution variety: `U{0} + U{1} + ... + U{N-2}` with `U = F A F ... F`.
pub fn involution_variety_decomposition<M: Multiplicity>(
    degree: u64,
) -> Result<NamedDecomposition<M>> {
    let upper = upper_case2::<M>(degree)?;
    Ok(NamedDecomposition::new(
        (0..degree - 1)
            .map(|s| Summand::new(UPPER, upper.clone(), s))
            .collect(),
    ))
}

/// Shape of the involution variety.
pub fn involution_variety_shape<M: Multiplicity>(degree: u64) -> Result<GradedShape<M>> {
    Ok(involution_variety_decomposition(degree)?.total().clone())
}

/// Class counts of the variety of rank-`i` isotropic ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicCounts {
    /// `2^i * C((N-1)/2, i)`: number of split Tate classes.
    pub a: BigUint,
    /// `C(N, i) * C(N-i, i)`: total rank.
    pub b: BigUint,
    pub count_f: BigUint,
    pub count_a: BigUint,
}

fn require_index(degree: u64, index: u64) -> Result<()> {
    let max = (degree - 1) / 2;
    if index < 1 || index > max {
        return Err(Error::IndexOutOfRange { degree, index, max });
    }
    Ok(())
}

/// Counts of `F` and `A` in the shape of the rank-`i` isotropic ideal variety:
/// `countF = (b + a) / 2`, `countA = (b - a) / 2`.
pub fn isotropic_ideal_counts(degree: u64, index: u64) -> Result<IsotropicCounts> {
    require_odd_degree(degree)?;
    if degree < 3 {
        return Err(Error::DegreeTooSmall { degree, min: 3 });
    }
    require_index(degree, index)?;
    let a = binomial((degree - 1) / 2, index) << index;
    let b = binomial(degree, index) * binomial(degree - index, index);
    if a > b {
        return Err(Error::Inconsistent(format!(
            "a = {a} exceeds b = {b} at N = {degree}, i = {index}"
        )));
    }
    let (count_f, rem_f) = (&b + &a).div_rem(&BigUint::from(2u8));
    let (count_a, rem_a) = (&b - &a).div_rem(&BigUint::from(2u8));
    if !rem_f.is_zero() || !rem_a.is_zero() {
        return Err(Error::Inconsistent(format!(
            "(b +- a)/2 not integral at N = {degree}, i = {index}: a = {a}, b = {b}"
        )));
    }
    Ok(IsotropicCounts {
        a,
        b,
        count_f,
        count_a,
    })
}

/// Degrees up to which [`flag_rank_by_enumeration`] walks subsets explicitly.
pub const FLAG_ENUMERATION_LIMIT: u64 = 11;

/// Number of flags `V_i ⊂ V_{N-i}` in general position over a split field,
/// counted as ordered pairs of disjoint `i`-subsets of an `N`-set. Small `N`
/// walks the subsets; larger `N` uses the factorial multinomial
/// `N! / (i! i! (N-2i)!)`.
pub fn flag_rank_by_enumeration(degree: u64, index: u64) -> Result<BigUint> {
    require_degree(degree)?;
    require_index(degree, index)?;
    if degree <= FLAG_ENUMERATION_LIMIT {
        Ok(BigUint::from(count_disjoint_subset_pairs(degree, index)))
    } else {
        Ok(multinomial(degree, &[index, index, degree - 2 * index]))
    }
}

/// The rank-one counts in the alternative closed form `((N+1)(N-1), (N-1)^2)`.
/// These are exactly twice `(b_1 + a_1)/2` and `(b_1 - a_1)/2`; they are kept
/// only so that reports can show the mismatch.
pub fn doubled_rank_one_counts(degree: u64) -> (BigUint, BigUint) {
    let n = BigUint::from(degree);
    let one = BigUint::from(1u8);
    let f = (&n + &one) * (&n - &one);
    let a = (&n - &one) * (&n - &one);
    (f, a)
}

/// Checks that the involution variety plus `U{N-1}` rebuilds the Weil
/// transfer shape.
pub fn closing_identity_holds(degree: u64) -> Result<bool> {
    let involution = involution_variety_shape::<BigUint>(degree)?;
    let upper = upper_case2::<BigUint>(degree)?;
    let lhs = involution.direct_sum(&upper.shift(degree - 1));
    Ok(lhs == weil_transfer_shape(degree)?)
}
