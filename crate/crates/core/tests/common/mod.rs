//! Strategies and property bodies shared by the property suite and the
//! acceptance runner.

#![allow(dead_code)]

use motive_shapes::serial::{shape_from_str, shape_to_string};
use motive_shapes::solver::{
    exhaustive_tilings, greedy_peel, obstruction_divisibility, obstruction_ratio, SolverConfig,
    Tile, Tiling,
};
use motive_shapes::{ArtinClass, GradedShape, Multiplicity, Shape, Shift};
use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Items = Vec<(Shift, ArtinClass, u64)>;

pub fn arb_class() -> impl Strategy<Value = ArtinClass> {
    prop_oneof![Just(ArtinClass::F), Just(ArtinClass::A)]
}

/// Shifts up to 20, multiplicities up to 5.
pub fn arb_items() -> impl Strategy<Value = Items> {
    prop::collection::vec((0..=20u64, arb_class(), 0..=5u64), 0..8)
}

pub fn shape_of<M: Multiplicity>(items: &Items) -> GradedShape<M> {
    GradedShape::from_items(
        items
            .iter()
            .map(|(s, c, m)| (*s, *c, M::from_u64_exact(*m))),
    )
}

pub fn arb_shape() -> impl Strategy<Value = Shape> {
    arb_items().prop_map(|i| shape_of(&i))
}

/// Shapes whose multiplicities may exceed `u64`.
pub fn arb_big_shape() -> impl Strategy<Value = Shape> {
    prop::collection::vec((0..=30u64, arb_class(), any::<u128>()), 0..10).prop_map(|items| {
        Shape::from_items(items.into_iter().map(|(s, c, m)| (s, c, BigUint::from(m))))
    })
}

pub fn check_semiring_laws<M: Multiplicity>(
    s: &GradedShape<M>,
    t: &GradedShape<M>,
    v: &GradedShape<M>,
) -> Result<(), TestCaseError> {
    let e = GradedShape::<M>::empty();
    let one = GradedShape::<M>::unit();
    prop_assert_eq!(s + t, t + s);
    prop_assert_eq!(&(s + t) + v, s + &(t + v));
    prop_assert_eq!(&s.direct_sum(&e), s);
    prop_assert_eq!(s * t, t * s);
    prop_assert_eq!(&(s * t) * v, s * &(t * v));
    prop_assert_eq!(&s.tensor(&one), s);
    prop_assert_eq!(s * &(t + v), &(s * t) + &(s * v));
    prop_assert_eq!((s + t).rank(), s.rank() + t.rank());
    prop_assert_eq!((s * t).rank(), s.rank() * t.rank());
    prop_assert!((s * &e).is_empty());
    Ok(())
}

pub fn check_shift_laws<M: Multiplicity>(
    s: &GradedShape<M>,
    t: &GradedShape<M>,
    a: Shift,
    b: Shift,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(&s.shift(0), s);
    prop_assert_eq!(s.shift(a + b), s.shift(a).shift(b));
    prop_assert_eq!(s.shift(a).tensor(&t.shift(b)), s.tensor(t).shift(a + b));
    prop_assert_eq!((s + t).shift(a), &s.shift(a) + &t.shift(a));
    Ok(())
}

pub fn check_restriction_laws<M: Multiplicity>(
    s: &GradedShape<M>,
    t: &GradedShape<M>,
    k: Shift,
) -> Result<(), TestCaseError> {
    let r = |x: &GradedShape<M>| x.restrict_to_l();
    prop_assert_eq!(r(&(s + t)), &r(s) + &r(t));
    prop_assert_eq!(r(&s.shift(k)), r(s).shift(k));
    prop_assert_eq!(r(&(s * t)), &r(s) * &r(t));
    prop_assert_eq!(r(s).rank(), s.rank());
    prop_assert!(r(s).count_a().is_zero());
    let a = GradedShape::<M>::twist_unit();
    prop_assert_eq!(&(s * &a) * &a, s.clone());
    prop_assert_eq!(s * &a, s.twist());
    Ok(())
}

pub fn check_round_trip(s: &Shape, items: &Items) -> Result<(), TestCaseError> {
    let text = shape_to_string(s);
    let back: Shape = shape_from_str(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&back, s);
    // same multiset listed in another order serializes identically
    let mut reversed = items.clone();
    reversed.reverse();
    let again: Shape = shape_of(&reversed);
    prop_assert_eq!(
        shape_to_string(&again),
        shape_to_string(&shape_of::<BigUint>(items))
    );
    Ok(())
}

/// Extra entries of a tile above its lead class.
fn arb_tail() -> impl Strategy<Value = Items> {
    prop::collection::vec((1..=4u64, arb_class(), 0..=2u64), 0..4)
}

/// A deterministic tile set (one or two tiles with distinct single lead
/// classes) and a target assembled from random placements.
#[derive(Debug, Clone)]
pub struct TilingInstance {
    pub tiles: Vec<Tile<BigUint>>,
    pub placed: Tiling,
    pub target: Shape,
}

pub fn arb_deterministic_instance() -> impl Strategy<Value = TilingInstance> {
    (
        arb_tail(),
        prop::option::of(arb_tail()),
        any::<bool>(),
        prop::collection::vec((0..2usize, 0..=6u64), 0..6),
    )
        .prop_map(|(tail_f, tail_a, a_first, raw)| {
            let mut tiles = Vec::new();
            let mut make = |name: &str, lead: ArtinClass, tail: &Items| {
                let mut items = tail.clone();
                items.push((0, lead, 1));
                tiles.push(Tile::new(name, shape_of(&items)).unwrap());
            };
            make("T0", ArtinClass::F, &tail_f);
            if let Some(tail) = &tail_a {
                make("T1", ArtinClass::A, tail);
            }
            if a_first {
                tiles.reverse();
            }
            let placed =
                Tiling::new(
                    raw.into_iter()
                        .map(|(i, shift)| motive_shapes::solver::Placement {
                            tile: tiles[i % tiles.len()].name().to_string(),
                            shift,
                        }),
                );
            let target = placed.assemble(&tiles).unwrap();
            TilingInstance {
                tiles,
                placed,
                target,
            }
        })
}

pub fn check_greedy_exhaustive_agreement(inst: &TilingInstance) -> Result<(), TestCaseError> {
    let cfg = SolverConfig::default();
    let greedy = greedy_peel(&inst.target, &inst.tiles)
        .map_err(|e| TestCaseError::fail(format!("greedy failed on a tilable target: {e}")))?;
    prop_assert_eq!(greedy.assemble(&inst.tiles).unwrap(), inst.target.clone());
    let all = exhaustive_tilings(&inst.target, &inst.tiles, &cfg)
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(all.contains(&greedy));
    prop_assert!(all.contains(&inst.placed));
    for t in &all {
        prop_assert_eq!(t.assemble(&inst.tiles).unwrap(), inst.target.clone());
    }
    Ok(())
}

pub fn check_translation(inst: &TilingInstance, k: Shift) -> Result<(), TestCaseError> {
    let cfg = SolverConfig::default();
    let base = greedy_peel(&inst.target, &inst.tiles).unwrap();
    let moved = greedy_peel(&inst.target.shift(k), &inst.tiles).unwrap();
    prop_assert_eq!(moved, base.shifted(k));
    let all: Vec<Tiling> = exhaustive_tilings(&inst.target, &inst.tiles, &cfg)
        .unwrap()
        .iter()
        .map(|t| t.shifted(k))
        .collect();
    prop_assert_eq!(
        exhaustive_tilings(&inst.target.shift(k), &inst.tiles, &cfg).unwrap(),
        all
    );
    Ok(())
}

/// Arbitrary small tiles (several classes allowed at shift 0) and a small
/// target, either random or assembled from random placements.
pub fn arb_free_instance() -> impl Strategy<Value = (Shape, Vec<Tile<BigUint>>)> {
    let tile_items = (
        prop::collection::vec((0..=0u64, arb_class(), 1..=2u64), 1..3),
        prop::collection::vec((1..=3u64, arb_class(), 0..=2u64), 0..3),
    );
    (
        prop::collection::vec((0..=5u64, arb_class(), 0..=3u64), 0..6),
        prop::collection::vec(tile_items, 1..4),
        any::<bool>(),
        prop::collection::vec((0..4usize, 0..=4u64), 0..5),
    )
        .prop_map(|(target, tiles, assembled, raw)| {
            let tiles: Vec<Tile<BigUint>> = tiles
                .into_iter()
                .enumerate()
                .map(|(i, (mut head, tail))| {
                    head.extend(tail);
                    Tile::new(format!("T{i}"), shape_of(&head)).unwrap()
                })
                .collect();
            let target = if assembled {
                Tiling::new(
                    raw.into_iter()
                        .map(|(i, shift)| motive_shapes::solver::Placement {
                            tile: tiles[i % tiles.len()].name().to_string(),
                            shift,
                        }),
                )
                .assemble(&tiles)
                .unwrap()
            } else {
                shape_of(&target)
            };
            (target, tiles)
        })
}

pub fn check_obstruction_soundness(
    target: &Shape,
    tiles: &[Tile<BigUint>],
) -> Result<(), TestCaseError> {
    let cfg = SolverConfig::default();
    let all = exhaustive_tilings(target, tiles, &cfg).unwrap();
    for t in &all {
        prop_assert_eq!(&t.assemble(tiles).unwrap(), target);
    }
    if !obstruction_divisibility(target, tiles).possible {
        prop_assert!(all.is_empty(), "divisibility excluded a tilable target");
    }
    for (i, tile) in tiles.iter().enumerate() {
        let companions: Vec<_> = tiles
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| t.clone())
            .collect();
        if obstruction_ratio(target, tile, &companions).is_excluded() {
            for t in &all {
                prop_assert!(
                    t.placements().iter().all(|p| p.tile != tile.name()),
                    "ratio-excluded tile {} used in {}",
                    tile.name(),
                    t
                );
            }
        }
    }
    Ok(())
}
