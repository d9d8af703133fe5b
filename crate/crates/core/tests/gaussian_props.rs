use mazic_core::gaussian::*;
use mazic_core::model::sample;
use mazic_core::{gauss_cap as c, GaussianMazic, Polytope3, SplitParams, EPS_CMP, EPS_GEO};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_split(rng: &mut ChaCha8Rng) -> SplitParams {
    SplitParams::new(rng.gen(), rng.gen()).unwrap()
}

/// Inner regions that hold for every channel.
fn inner_family(ch: &GaussianMazic, rng: &mut ChaCha8Rng) -> Vec<Polytope3> {
    vec![
        nosplit_inner(ch).unwrap(),
        inner_bound(ch, random_split(rng)).unwrap(),
        inner_bound(ch, SplitParams::new(1.0, 1.0).unwrap()).unwrap(),
        inner_bound_timeshared(ch, 3).unwrap(),
    ]
}

fn assert_vertices_in(inner: &Polytope3, outer: impl Fn(mazic_core::RatePoint) -> bool, what: &str, ch: &GaussianMazic) {
    for v in inner.vertices() {
        assert!(outer(v), "{what}: {v:?} escapes for {ch:?}");
    }
}

#[test]
fn weak_inner_within_weak_outer() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let ch = sample::weak(&mut rng);
        for p in inner_family(&ch, &mut rng) {
            assert_vertices_in(&p, |v| weak_outer_contains(&ch, v, EPS_CMP).unwrap(), "weak", &ch);
        }
    }
}

#[test]
fn mixed_inner_within_mixed_outer() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..200 {
        let ch = sample::mixed(&mut rng);
        let mut family = inner_family(&ch, &mut rng);
        if ch.b >= 1.0 + ch.a * ch.p1 + ch.p3 {
            family.push(mixed_inner(&ch, rng.gen()).unwrap());
        }
        for p in family {
            assert_vertices_in(&p, |v| mixed_outer_contains(&ch, v, EPS_CMP).unwrap(), "mixed", &ch);
        }
    }
}

#[test]
fn strong_inner_within_strong_outers() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let ch = sample::strong(&mut rng);
        let outer = strong_outer(&ch).unwrap();
        let one = (ch.a <= 1.0 + ch.p3).then(|| one_strong_outer(&ch).unwrap());
        for p in inner_family(&ch, &mut rng) {
            assert!(outer.contains_region(&p, EPS_CMP), "{ch:?}");
            if let Some(o) = &one {
                assert!(o.contains_region(&p, EPS_CMP), "{ch:?}");
            }
        }
    }
}

#[test]
fn very_strong_capacity_is_the_nosplit_region() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..200 {
        let ch = sample::very_strong(&mut rng);
        let cap = very_strong_capacity(&ch).unwrap();
        assert!(cap.region_eq(&nosplit_inner(&ch).unwrap().remove_redundant(), EPS_CMP), "{ch:?}");
        for p in inner_family(&ch, &mut rng) {
            assert!(cap.contains_region(&p, EPS_CMP), "{ch:?}");
        }
    }
}

#[test]
fn b_large_inner_and_outer_coincide() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..200 {
        let ch = sample::b_large(&mut rng);
        let inner = strong_capacity_b_large(&ch).unwrap();
        let outer = one_strong_outer(&ch).unwrap();
        assert!(outer.contains_region(&inner, EPS_CMP), "{ch:?}");
        assert!(inner.contains_region(&outer, EPS_CMP), "{ch:?}");
    }
}

#[test]
fn segment_endpoints_are_achievable() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let mut checked = 0;
    while checked < 50 {
        let ch = sample::strong(&mut rng);
        let seg = boundary_segment(&ch).unwrap();
        if !seg.valid {
            continue;
        }
        checked += 1;
        assert!(seg.on_line(&ch));
        let ts = inner_bound_timeshared(&ch, 6).unwrap();
        assert!(ts.contains_point(seg.endpoint_low, EPS_CMP), "{ch:?}");
        assert!(ts.contains_point(seg.endpoint_high, EPS_CMP), "{ch:?}");
    }
}

#[test]
fn sum_rate_bound_exceeds_grid_inner_sums() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    let grid = unit_grid(6).unwrap();
    for _ in 0..50 {
        let ch = sample::weak_ordered(&mut rng);
        let bound = sum_rate_upper_theorem6(&ch).unwrap().value_bits;
        for &al in &grid {
            for &be in &grid {
                let s = inner_bound(&ch, SplitParams::new(al, be).unwrap()).unwrap().max_sum_rate();
                assert!(bound >= s - EPS_CMP, "{ch:?} at ({al}, {be}): {bound} < {s}");
            }
        }
    }
}

#[test]
fn symmetric_sum_capacity_is_achieved_and_bounded() {
    let mut rng = ChaCha8Rng::seed_from_u64(28);
    for _ in 0..100 {
        let ch = sample::weak_symmetric(&mut rng);
        let cap = sum_capacity_symmetric(&ch).unwrap();
        assert!((sum_rate_upper_theorem6(&ch).unwrap().value_bits - cap).abs() <= EPS_CMP, "{ch:?}");
        let best = unit_grid(11)
            .unwrap()
            .iter()
            .flat_map(|&al| unit_grid(11).unwrap().into_iter().map(move |be| (al, be)))
            .map(|(al, be)| inner_bound(&ch, SplitParams::new(al, be).unwrap()).unwrap().max_sum_rate())
            .fold(0.0f64, f64::max);
        assert!(best <= cap + EPS_CMP, "{ch:?}");
    }
}

#[test]
fn envelope_dominates_profile() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..50 {
        let ch = sample::weak_ordered(&mut rng);
        let prof = weak_sumrate_profile(&ch, 0.0, 10.0, 400).unwrap();
        for r in &prof.rows {
            assert!(r.envelope_bits >= r.f_bits - EPS_GEO, "{ch:?} at {}", r.p1);
        }
    }
}

#[test]
fn valid_zic_triples_reach_the_mac_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let mut valid = 0;
    for _ in 0..2000 {
        let p1 = rng.gen_range(0.5..10.0);
        let p3 = rng.gen_range(0.1..p1);
        let b = rng.gen_range((1.0 + p3) / (1.0 + p1)..=1.0);
        let ch = GaussianMazic::new(0.0, b, p1, rng.gen_range(0.2..10.0), p3).unwrap();
        let t = zic_a0_boundary(&ch, rng.gen()).unwrap();
        if t.valid {
            valid += 1;
            assert!((t.point.r1 + t.point.r2 - c(ch.p1 + ch.p2)).abs() <= EPS_GEO, "{ch:?}");
            assert!((t.point.r3 - c(ch.p3)).abs() <= EPS_GEO);
        }
    }
    assert!(valid > 50, "only {valid} valid draws");
}

#[test]
fn nosplit_is_the_zero_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let ch = sample::any(&mut rng);
        let a = nosplit_inner(&ch).unwrap();
        let b = inner_bound(&ch, SplitParams::NO_SPLIT).unwrap();
        assert!(a.region_eq(&b, EPS_GEO), "{ch:?}");
    }
}

#[test]
fn strong_outer_contains_nosplit() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..100 {
        let ch = sample::strong(&mut rng);
        assert!(strong_outer(&ch).unwrap().contains_region(&nosplit_inner(&ch).unwrap(), EPS_CMP), "{ch:?}");
    }
}

#[test]
fn finer_time_sharing_grid_is_larger() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..20 {
        let ch = sample::any(&mut rng);
        let coarse = inner_bound_timeshared(&ch, 6).unwrap();
        let fine = inner_bound_timeshared(&ch, 11).unwrap();
        assert!(fine.contains_region(&coarse, EPS_CMP), "{ch:?}");
    }
}

#[test]
fn swapping_users_mirrors_regions() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..50 {
        let ch = sample::any(&mut rng);
        let split = random_split(&mut rng);
        let p = inner_bound(&ch, split).unwrap();
        let q = inner_bound(&ch.swapped(), SplitParams::new(split.beta, split.alpha).unwrap()).unwrap();
        for v in p.vertices() {
            let m = mazic_core::RatePoint::new(v.r2, v.r1, v.r3);
            assert!(q.contains_point(m, EPS_GEO), "{ch:?}");
        }
    }
}
