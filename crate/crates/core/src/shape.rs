use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};

use num_rational::Ratio;

use crate::{ArtinClass, Error, Multiplicity, Result};

/// Tate shift of a class. Shapes only live in nonnegative shifts.
pub type Shift = u64;

/// Multiplicities of `F` and `A` at one shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassCounts<M> {
    pub f: M,
    pub a: M,
}

impl<M: Multiplicity> ClassCounts<M> {
    pub fn zero() -> Self {
        ClassCounts {
            f: M::zero(),
            a: M::zero(),
        }
    }

    pub fn get(&self, class: ArtinClass) -> &M {
        match class {
            ArtinClass::F => &self.f,
            ArtinClass::A => &self.a,
        }
    }

    fn get_mut(&mut self, class: ArtinClass) -> &mut M {
        match class {
            ArtinClass::F => &mut self.f,
            ArtinClass::A => &mut self.a,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.a.is_zero()
    }

    pub fn total(&self) -> M {
        self.f.clone() + self.a.clone()
    }
}

/// A finite multiset of shifted Artin classes.
///
/// Stored canonically as `shift -> (mult F, mult A)` with no all-zero
/// entries, so derived equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedShape<M> {
    entries: BTreeMap<Shift, ClassCounts<M>>,
}

impl<M: Multiplicity> Default for GradedShape<M> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<M: Multiplicity> GradedShape<M> {
    pub fn empty() -> Self {
        GradedShape {
            entries: BTreeMap::new(),
        }
    }

    /// `F{0}`, the unit for [`tensor`](Self::tensor).
    pub fn unit() -> Self {
        Self::single(0, ArtinClass::F)
    }

    /// `A{0}`.
    pub fn twist_unit() -> Self {
        Self::single(0, ArtinClass::A)
    }

    /// One copy of `class` at `shift`.
    pub fn single(shift: Shift, class: ArtinClass) -> Self {
        let mut shape = Self::empty();
        shape.insert(shift, class, M::one());
        shape
    }

    /// Aggregates `(shift, class, multiplicity)` items into canonical form.
    pub fn from_items<I>(items: I) -> Self
    where
        I: IntoIterator<Item = (Shift, ArtinClass, M)>,
    {
        let mut shape = Self::empty();
        for (shift, class, mult) in items {
            shape.insert(shift, class, mult);
        }
        shape
    }

    /// Like [`from_items`](Self::from_items) but for signed input, rejecting
    /// negative shifts and multiplicities.
    pub fn try_from_signed<I>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, ArtinClass, i64)>,
    {
        let mut shape = Self::empty();
        for (shift, class, mult) in items {
            let shift = Shift::try_from(shift).map_err(|_| Error::NegativeShift(shift))?;
            let mult_u = u64::try_from(mult).map_err(|_| Error::NegativeMultiplicity(mult))?;
            shape.insert(shift, class, M::from_u64_exact(mult_u));
        }
        Ok(shape)
    }

    /// Adds `mult` copies of `class` at `shift`.
    pub fn insert(&mut self, shift: Shift, class: ArtinClass, mult: M) {
        if mult.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry(shift)
            .or_insert_with(ClassCounts::zero)
            .get_mut(class);
        *slot = slot.clone() + mult;
    }

    pub fn get(&self, shift: Shift, class: ArtinClass) -> M {
        self.entries
            .get(&shift)
            .map(|c| c.get(class).clone())
            .unwrap_or_else(M::zero)
    }

    pub fn counts_at(&self, shift: Shift) -> Option<&ClassCounts<M>> {
        self.entries.get(&shift)
    }

    /// Occupied shifts in ascending order with their counts.
    pub fn entries(&self) -> impl Iterator<Item = (Shift, &ClassCounts<M>)> + '_ {
        self.entries.iter().map(|(s, c)| (*s, c))
    }

    /// Nonzero `(shift, class, mult)` records, sorted by shift then class.
    pub fn records(&self) -> impl Iterator<Item = (Shift, ArtinClass, &M)> + '_ {
        self.entries.iter().flat_map(|(s, c)| {
            ArtinClass::ALL
                .into_iter()
                .filter(move |class| !c.get(*class).is_zero())
                .map(move |class| (*s, class, c.get(class)))
        })
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min_shift(&self) -> Option<Shift> {
        self.entries.keys().next().copied()
    }

    pub fn max_shift(&self) -> Option<Shift> {
        self.entries.keys().next_back().copied()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (shift, counts) in &other.entries {
            self.insert(*shift, ArtinClass::F, counts.f.clone());
            self.insert(*shift, ArtinClass::A, counts.a.clone());
        }
    }

    /// Translates every class up by `k`.
    pub fn shift(&self, k: Shift) -> Self {
        GradedShape {
            entries: self
                .entries
                .iter()
                .map(|(s, c)| (s + k, c.clone()))
                .collect(),
        }
    }

    pub fn try_shift(&self, k: i64) -> Result<Self> {
        let k = Shift::try_from(k).map_err(|_| Error::NegativeShift(k))?;
        Ok(self.shift(k))
    }

    /// Bilinear extension of `(s, c) * (t, d) = (s + t, c * d)`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::empty();
        for (s, x) in &self.entries {
            for (t, y) in &other.entries {
                let ff = x.f.clone() * y.f.clone() + x.a.clone() * y.a.clone();
                let fa = x.f.clone() * y.a.clone() + x.a.clone() * y.f.clone();
                out.insert(s + t, ArtinClass::F, ff);
                out.insert(s + t, ArtinClass::A, fa);
            }
        }
        out
    }

    /// Tensor with `A{0}`: swaps the two classes at every shift.
    pub fn twist(&self) -> Self {
        GradedShape {
            entries: self
                .entries
                .iter()
                .map(|(s, c)| {
                    (
                        *s,
                        ClassCounts {
                            f: c.a.clone(),
                            a: c.f.clone(),
                        },
                    )
                })
                .collect(),
        }
    }

    /// Base change to the quadratic extension, where `A` becomes `F`.
    pub fn restrict_to_l(&self) -> Self {
        GradedShape {
            entries: self
                .entries
                .iter()
                .map(|(s, c)| {
                    (
                        *s,
                        ClassCounts {
                            f: c.total(),
                            a: M::zero(),
                        },
                    )
                })
                .collect(),
        }
    }

    /// `self - other`, or `None` if some multiplicity would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut entries = self.entries.clone();
        for (shift, sub) in &other.entries {
            let counts = entries.get_mut(shift)?;
            counts.f = counts.f.checked_sub(&sub.f)?;
            counts.a = counts.a.checked_sub(&sub.a)?;
            if counts.is_zero() {
                entries.remove(shift);
            }
        }
        Some(GradedShape { entries })
    }

    pub fn count(&self, class: ArtinClass) -> M {
        self.entries
            .values()
            .fold(M::zero(), |acc, c| acc + c.get(class).clone())
    }

    pub fn count_f(&self) -> M {
        self.count(ArtinClass::F)
    }

    pub fn count_a(&self) -> M {
        self.count(ArtinClass::A)
    }

    /// Total number of classes.
    pub fn rank(&self) -> M {
        self.entries
            .values()
            .fold(M::zero(), |acc, c| acc + c.total())
    }

    pub fn stats(&self) -> ShapeStats<M> {
        let count_f = self.count_f();
        let count_a = self.count_a();
        ShapeStats {
            rank: count_f.clone() + count_a.clone(),
            ratio: ShapeRatio::of(count_f.clone(), count_a.clone()),
            count_f,
            count_a,
        }
    }

    /// The compact notation `F A F` used for shapes that have exactly one
    /// class at each shift `0..=max`. `None` for any other shape.
    pub fn letters(&self) -> Option<String> {
        let mut out = Vec::new();
        for (expected, (shift, counts)) in self.entries.iter().enumerate() {
            if *shift != expected as Shift {
                return None;
            }
            let class = if counts.f.is_one() && counts.a.is_zero() {
                ArtinClass::F
            } else if counts.a.is_one() && counts.f.is_zero() {
                ArtinClass::A
            } else {
                return None;
            };
            out.push(class.to_string());
        }
        Some(out.join(" "))
    }
}

impl<M: Multiplicity> fmt::Display for GradedShape<M> {
    /// Sum notation, e.g. `F{0} + A{1} + 2F{2}`; the empty shape prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (shift, class, mult) in self.records() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !mult.is_one() {
                write!(f, "{mult}")?;
            }
            write!(f, "{class}{{{shift}}}")?;
        }
        Ok(())
    }
}

impl<M: Multiplicity> Add for GradedShape<M> {
    type Output = GradedShape<M>;

    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl<'a, M: Multiplicity> Add<&'a GradedShape<M>> for &'a GradedShape<M> {
    type Output = GradedShape<M>;

    fn add(self, rhs: &'a GradedShape<M>) -> GradedShape<M> {
        self.direct_sum(rhs)
    }
}

impl<M: Multiplicity> Mul for GradedShape<M> {
    type Output = GradedShape<M>;

    fn mul(self, rhs: Self) -> Self {
        self.tensor(&rhs)
    }
}

impl<'a, M: Multiplicity> Mul<&'a GradedShape<M>> for &'a GradedShape<M> {
    type Output = GradedShape<M>;

    fn mul(self, rhs: &'a GradedShape<M>) -> GradedShape<M> {
        self.tensor(rhs)
    }
}

impl<M: Multiplicity> Sum for GradedShape<M> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::empty(), |acc, s| acc + s)
    }
}

/// `countF / countA`, exact, with `Infinite` whenever `countA = 0`
/// (including the empty shape).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeRatio<M: Multiplicity> {
    Finite(Ratio<M>),
    Infinite,
}

impl<M: Multiplicity> ShapeRatio<M> {
    pub fn of(count_f: M, count_a: M) -> Self {
        if count_a.is_zero() {
            ShapeRatio::Infinite
        } else {
            ShapeRatio::Finite(Ratio::new(count_f, count_a))
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ShapeRatio::Infinite)
    }
}

impl<M: Multiplicity> fmt::Display for ShapeRatio<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeRatio::Finite(r) => write!(f, "{r}"),
            ShapeRatio::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeStats<M: Multiplicity> {
    pub rank: M,
    pub count_f: M,
    pub count_a: M,
    pub ratio: ShapeRatio<M>,
}

impl<M: Multiplicity> fmt::Display for ShapeStats<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank={} countF={} countA={} ratio={}",
            self.rank, self.count_f, self.count_a, self.ratio
        )
    }
}
