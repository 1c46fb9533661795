//! Exact tiling of a graded shape by shifted copies of grounded tiles.
//!
//! Three tools are provided: a deterministic peeling pass that places tiles
//! at the lowest uncovered shift, a complete backtracking enumeration used as
//! a uniqueness oracle, and two counting obstructions (class ratio and
//! `F`-count divisibility) that rule tile sets out without search.

use std::fmt;

use serde::Serialize;

use crate::generators::{upper_case1, upper_case2, weil_transfer_shape, UPPER, UPPER_TWISTED};
use crate::{ArtinClass, Error, GradedShape, Multiplicity, Result, Shift};

/// A named building block. Its lowest occupied shift is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile<M> {
    name: String,
    shape: GradedShape<M>,
}

impl<M: Multiplicity> Tile<M> {
    pub fn new(name: impl Into<String>, shape: GradedShape<M>) -> Result<Self> {
        let name = name.into();
        match shape.min_shift() {
            None => Err(Error::InvalidTile {
                name,
                reason: "tile shape is empty".into(),
            }),
            Some(0) => Ok(Tile { name, shape }),
            Some(s) => Err(Error::InvalidTile {
                name,
                reason: format!("lowest shift is {s}, tiles must start at shift 0"),
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn shape(&self) -> &GradedShape<M> {
        &self.shape
    }

    /// The class at shift 0 when it is a single class of multiplicity one.
    pub fn lead_class(&self) -> Option<ArtinClass> {
        let counts = self.shape.counts_at(0)?;
        match (counts.f.is_one(), counts.a.is_one()) {
            (true, false) if counts.a.is_zero() => Some(ArtinClass::F),
            (false, true) if counts.f.is_zero() => Some(ArtinClass::A),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Placement {
    pub tile: String,
    pub shift: Shift,
}

/// A multiset of placements, kept sorted by shift then tile name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Tiling {
    placements: Vec<Placement>,
}

impl Tiling {
    pub fn new(placements: impl IntoIterator<Item = Placement>) -> Self {
        let mut placements: Vec<Placement> = placements.into_iter().collect();
        placements.sort_by(|x, y| (x.shift, &x.tile).cmp(&(y.shift, &y.tile)));
        Tiling { placements }
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, Shift)>) -> Self {
        Tiling::new(pairs.into_iter().map(|(tile, shift)| Placement {
            tile: tile.to_string(),
            shift,
        }))
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn shifted(&self, k: Shift) -> Tiling {
        Tiling {
            placements: self
                .placements
                .iter()
                .map(|p| Placement {
                    tile: p.tile.clone(),
                    shift: p.shift + k,
                })
                .collect(),
        }
    }

    /// Direct sum of all placed tiles.
    pub fn assemble<M: Multiplicity>(&self, tiles: &[Tile<M>]) -> Result<GradedShape<M>> {
        let mut total = GradedShape::empty();
        for p in &self.placements {
            let tile = tiles.iter().find(|t| t.name == p.tile).ok_or_else(|| {
                Error::Inconsistent(format!("tiling refers to unknown tile {:?}", p.tile))
            })?;
            total = total + tile.shape.shift(p.shift);
        }
        Ok(total)
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .placements
            .iter()
            .map(|p| format!("{}{{{}}}", p.tile, p.shift))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Stop the exhaustive enumeration after this many tilings.
    pub cap: usize,
    /// Largest target rank the exhaustive enumeration accepts.
    pub rank_bound: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cap: 10_000,
            rank_bound: 200,
        }
    }
}

fn check_sound<M: Multiplicity>(
    target: &GradedShape<M>,
    tiles: &[Tile<M>],
    tiling: &Tiling,
) -> Result<()> {
    let assembled = tiling.assemble(tiles)?;
    if &assembled != target {
        return Err(Error::Inconsistent(format!(
            "tiling {tiling} sums to {assembled}, not to the target {target}"
        )));
    }
    Ok(())
}

/// Places tiles at the lowest uncovered shift until nothing is left.
///
/// Every tile must carry a single class of multiplicity one at shift 0, and
/// no two tiles may share that class; under this condition the lowest
/// uncovered class names the tile to place, so the result is forced. When
/// both classes are uncovered at the same shift the larger multiplicity goes
/// first, `F` on ties.
pub fn greedy_peel<M: Multiplicity>(target: &GradedShape<M>, tiles: &[Tile<M>]) -> Result<Tiling> {
    let mut by_class: [Option<&Tile<M>>; 2] = [None, None];
    for tile in tiles {
        let class = tile.lead_class().ok_or_else(|| {
            Error::Nondeterministic(format!(
                "tile {:?} does not start with a single class of multiplicity one",
                tile.name
            ))
        })?;
        let slot = &mut by_class[class as usize];
        if let Some(other) = slot {
            return Err(Error::Nondeterministic(format!(
                "tiles {:?} and {:?} both start with {class}",
                other.name, tile.name
            )));
        }
        *slot = Some(tile);
    }

    let mut remaining = target.clone();
    let mut placements = Vec::new();
    while let Some(shift) = remaining.min_shift() {
        let counts = remaining.counts_at(shift).expect("occupied shift");
        let class = if counts.a > counts.f {
            ArtinClass::A
        } else {
            ArtinClass::F
        };
        let tile = by_class[class as usize].ok_or_else(|| Error::Stuck {
            shift,
            class,
            detail: format!("no tile starts with {class}"),
        })?;
        remaining = remaining
            .checked_sub(&tile.shape.shift(shift))
            .ok_or_else(|| Error::Stuck {
                shift,
                class,
                detail: format!("tile {:?} does not fit in what is left", tile.name),
            })?;
        placements.push(Placement {
            tile: tile.name.clone(),
            shift,
        });
    }
    let tiling = Tiling::new(placements);
    check_sound(target, tiles, &tiling)?;
    Ok(tiling)
}

fn check_rank_bound<M: Multiplicity>(target: &GradedShape<M>, bound: u64) -> Result<()> {
    let rank = target.rank();
    match rank.to_u64() {
        Some(r) if r <= bound => Ok(()),
        _ => Err(Error::RankBoundExceeded {
            rank: rank.to_string(),
            bound,
        }),
    }
}

struct Search<'a, M> {
    tiles: &'a [Tile<M>],
    cap: usize,
    stack: Vec<(usize, Shift)>,
    found: Vec<Tiling>,
}

impl<M: Multiplicity> Search<'_, M> {
    fn run(&mut self, remaining: &GradedShape<M>) {
        let Some(shift) = remaining.min_shift() else {
            self.found
                .push(Tiling::new(self.stack.iter().map(|(i, s)| Placement {
                    tile: self.tiles[*i].name.clone(),
                    shift: *s,
                })));
            return;
        };
        // placements at one shift are kept in nondecreasing tile order so each
        // multiset is visited once
        let first = match self.stack.last() {
            Some((i, s)) if *s == shift => *i,
            _ => 0,
        };
        for index in first..self.tiles.len() {
            let placed = self.tiles[index].shape.shift(shift);
            if let Some(rest) = remaining.checked_sub(&placed) {
                self.stack.push((index, shift));
                self.run(&rest);
                self.stack.pop();
                if self.found.len() >= self.cap {
                    return;
                }
            }
        }
    }
}

/// Every tiling of `target` by `tiles`, up to `config.cap` of them.
///
/// The search always branches at the lowest uncovered shift and tries tiles
/// in input order, so the output order is deterministic. Tiles with several
/// classes at shift 0 are allowed here.
pub fn exhaustive_tilings<M: Multiplicity>(
    target: &GradedShape<M>,
    tiles: &[Tile<M>],
    config: &SolverConfig,
) -> Result<Vec<Tiling>> {
    check_rank_bound(target, config.rank_bound)?;
    if config.cap == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search {
        tiles,
        cap: config.cap,
        stack: Vec::new(),
        found: Vec::new(),
    };
    search.run(target);
    for tiling in &search.found {
        check_sound(target, tiles, tiling)?;
    }
    Ok(search.found)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatioVerdict {
    Excluded(String),
    NotExcluded,
}

impl RatioVerdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self, RatioVerdict::Excluded(_))
    }
}

fn same_ratio<M: Multiplicity>(f1: &M, a1: &M, f2: &M, a2: &M) -> bool {
    f1.clone() * a2.clone() == f2.clone() * a1.clone()
}

/// Decides whether `tile` can be ruled out of every tiling of `target` that
/// uses `tile` together with `companions`, by counting classes.
///
/// A tile carrying a class the target lacks is excluded. Otherwise, when each
/// companion has exactly the target's `F:A` ratio and `tile` does not, any
/// copy of `tile` would pull the aggregate ratio off the target's, so `tile`
/// is excluded.
pub fn obstruction_ratio<M: Multiplicity>(
    target: &GradedShape<M>,
    tile: &Tile<M>,
    companions: &[Tile<M>],
) -> RatioVerdict {
    let (tf, ta) = (target.count_f(), target.count_a());
    let (f, a) = (tile.shape.count_f(), tile.shape.count_a());
    for (class, have, need) in [(ArtinClass::F, &tf, &f), (ArtinClass::A, &ta, &a)] {
        if have.is_zero() && !need.is_zero() {
            return RatioVerdict::Excluded(format!(
                "target has no {class} but tile {:?} contains {need}",
                tile.name
            ));
        }
    }
    let companions_match = companions
        .iter()
        .all(|c| same_ratio(&c.shape.count_f(), &c.shape.count_a(), &tf, &ta));
    if companions_match && !same_ratio(&f, &a, &tf, &ta) {
        let tile_ratio = crate::ShapeRatio::of(f, a);
        let target_ratio = crate::ShapeRatio::of(tf, ta);
        let side = if tile_ratio < target_ratio {
            "below"
        } else {
            "above"
        };
        return RatioVerdict::Excluded(format!(
            "tile {:?} has F:A ratio {tile_ratio}, {side} the target's {target_ratio}, \
             which every companion matches",
            tile.name
        ));
    }
    RatioVerdict::NotExcluded
}

/// Outcome of the `F`-count divisibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityVerdict<M> {
    pub possible: bool,
    /// `F`-count of the target.
    pub count_f: M,
    /// gcd of the tiles' `F`-counts.
    pub modulus: M,
}

impl<M: Multiplicity> fmt::Display for DivisibilityVerdict<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.possible { "≡" } else { "≢" };
        write!(f, "countF={} {rel} 0 mod {}", self.count_f, self.modulus)
    }
}

/// Every tiling has `F`-count equal to a nonnegative combination of the
/// tiles' `F`-counts, hence a multiple of their gcd. Reports `possible =
/// false` when the target's `F`-count is not such a multiple.
pub fn obstruction_divisibility<M: Multiplicity>(
    target: &GradedShape<M>,
    tiles: &[Tile<M>],
) -> DivisibilityVerdict<M> {
    let modulus = tiles
        .iter()
        .fold(M::zero(), |g, t| g.gcd(&t.shape.count_f()));
    let count_f = target.count_f();
    let possible = if modulus.is_zero() {
        count_f.is_zero()
    } else {
        count_f.is_multiple_of(&modulus)
    };
    DivisibilityVerdict {
        possible,
        count_f,
        modulus,
    }
}

/// Tiles `U = F F ... F` and `U*A`.
pub fn case1_tiles<M: Multiplicity>(degree: u64) -> Result<Vec<Tile<M>>> {
    let upper = upper_case1::<M>(degree)?;
    Ok(vec![
        Tile::new(UPPER, upper.clone())?,
        Tile::new(UPPER_TWISTED, upper.twist())?,
    ])
}

/// The single tile `U = F A F ... F`.
pub fn case2_tiles<M: Multiplicity>(degree: u64) -> Result<Vec<Tile<M>>> {
    Ok(vec![Tile::new(UPPER, upper_case2::<M>(degree)?)?])
}

/// Result of tiling one target with one candidate tile set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseOutcome {
    pub tiling: Option<Tiling>,
    /// Why peeling failed, when it did.
    pub failure: Option<String>,
    /// Whether the exhaustive search found exactly one tiling; `None` when
    /// the target exceeds the rank bound and the search was not run.
    pub unique: Option<bool>,
}

impl CaseOutcome {
    pub fn feasible(&self) -> bool {
        self.tiling.is_some()
    }
}

/// Peels `target` with `tiles`, then cross-checks against the exhaustive
/// enumeration when the target is within the rank bound.
pub fn tile_with<M: Multiplicity>(
    target: &GradedShape<M>,
    tiles: &[Tile<M>],
    config: &SolverConfig,
) -> Result<CaseOutcome> {
    let (tiling, failure) = match greedy_peel(target, tiles) {
        Ok(t) => (Some(t), None),
        Err(e @ Error::Stuck { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let unique = match exhaustive_tilings(target, tiles, &SolverConfig { cap: 2, ..*config }) {
        Ok(all) => {
            if let Some(t) = &tiling {
                if !all.contains(t) {
                    return Err(Error::Inconsistent(format!(
                        "peeled tiling {t} missing from the exhaustive enumeration"
                    )));
                }
            } else if !all.is_empty() {
                return Err(Error::Inconsistent(
                    "peeling failed but the exhaustive enumeration found a tiling".into(),
                ));
            }
            Some(all.len() == 1)
        }
        Err(Error::RankBoundExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(CaseOutcome {
        tiling,
        failure,
        unique,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperShapeReport {
    pub degree: u64,
    pub case1: CaseOutcome,
    pub case2: CaseOutcome,
}

/// Tiles the Weil transfer shape with `{U, U*A}` for `U = F F ... F` and
/// with `{U}` for `U = F A F ... F`. Both candidate upper shapes are
/// expected to tile.
pub fn infer_upper_shape(degree: u64, config: &SolverConfig) -> Result<UpperShapeReport> {
    let target = weil_transfer_shape::<num_bigint::BigUint>(degree)?;
    Ok(UpperShapeReport {
        degree,
        case1: tile_with(&target, &case1_tiles(degree)?, config)?,
        case2: tile_with(&target, &case2_tiles(degree)?, config)?,
    })
}
