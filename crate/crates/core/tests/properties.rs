use std::f64::consts::PI;

use carleson_core::calculus::{
    invariant_laplacian_fd_extrapolated, laplacian_fd_extrapolated, potential_laplacian_closed, MultiPoly,
};
use carleson_core::extremal::{ratio, search, SearchConfig};
use carleson_core::geometry::{inner, mobius, normalized_kernel, poisson_kernel, pseudo_hyperbolic, szego_kernel};
use carleson_core::interpolation::{carleson_delta, gram_matrix, PointSequence};
use carleson_core::measure::{
    analyze, carleson_potential, embedding_norm_sq, embedding_spectrum, kernel_constant_on_support,
    theorem_bound_constant,
};
use carleson_core::numerics::{extreme_eigs, rng_stream};
use carleson_core::{Complex64, DiscreteMeasure, Space, SpacePoint};
use proptest::prelude::*;

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
}

/// Point of the unit ball of `C^dim` with radius at most `rmax`.
fn point(dim: usize, rmax: f64) -> impl Strategy<Value = SpacePoint> {
    (prop::collection::vec(-1.0f64..1.0, 2 * dim), 0.0f64..1.0).prop_filter_map("zero direction", move |(v, t)| {
        let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len < 1e-3 {
            return None;
        }
        let scale = rmax * t / len;
        let coords = v.chunks_exact(2).map(|c| Complex64::new(c[0] * scale, c[1] * scale)).collect();
        SpacePoint::new(coords).ok()
    })
}

fn space(dim: usize) -> Space {
    if dim == 0 {
        Space::disc()
    } else {
        Space::ball(dim).unwrap()
    }
}

/// `dim = 0` stands for the disc.
fn measure(dim: usize, max_atoms: usize, rmax: f64) -> impl Strategy<Value = DiscreteMeasure> {
    let d = dim.max(1);
    prop::collection::vec((point(d, rmax), -2.0f64..1.0), 1..=max_atoms)
        .prop_map(move |atoms| DiscreteMeasure::new(space(dim), atoms.into_iter().map(|(p, e)| (p, 10f64.powf(e)))).unwrap())
}

fn dims() -> impl Strategy<Value = usize> {
    prop_oneof![Just(0usize), Just(2usize), Just(3usize)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mobius_is_an_involution((dim, l, z) in dims().prop_flat_map(|d| (Just(d), point(d.max(1), 0.99), point(d.max(1), 0.99)))) {
        let s = space(dim);
        let back = mobius(&l, &mobius(&l, &z, &s).unwrap(), &s).unwrap();
        for (a, b) in back.coords().iter().zip(z.coords()) {
            prop_assert!((a - b).norm() <= 1e-12, "{back:?} vs {z:?}");
        }
    }

    #[test]
    fn mobius_identity((dim, l, z) in dims().prop_flat_map(|d| (Just(d), point(d.max(1), 0.99), point(d.max(1), 0.99)))) {
        let s = space(dim);
        let m = mobius(&l, &z, &s).unwrap();
        let den = (Complex64::new(1.0, 0.0) - inner(&z, &l).unwrap()).norm_sqr();
        let expect = (1.0 - l.norm_sq()) * (1.0 - z.norm_sq()) / den;
        prop_assert!(close(1.0 - m.norm_sq(), expect, 1e-12));
        let rho = pseudo_hyperbolic(&l, &z, &s).unwrap();
        prop_assert!((rho * rho - m.norm_sq()).abs() <= 1e-12);
    }

    #[test]
    fn disc_jacobian(l in point(1, 0.95), z in point(1, 0.95)) {
        let s = Space::disc();
        let h = 1e-5;
        let f = |t: Complex64| mobius(&l, &SpacePoint::disc(z.coords()[0] + t).unwrap(), &s).unwrap().coords()[0];
        let d = (f(Complex64::new(h, 0.0)) - f(Complex64::new(-h, 0.0))) / (2.0 * h);
        let lz = (Complex64::new(1.0, 0.0) - l.coords()[0].conj() * z.coords()[0]).norm_sqr();
        let expect = ((1.0 - l.norm_sq()) / lz).powi(2);
        prop_assert!(close(d.norm_sqr(), expect, 1e-6));
    }

    #[test]
    fn kernels((dim, l, z) in dims().prop_flat_map(|d| (Just(d), point(d.max(1), 0.999), point(d.max(1), 0.999)))) {
        let s = space(dim);
        let n = s.dim() as i32;
        let k = szego_kernel(&z, &l, &s).unwrap();
        let kt = szego_kernel(&l, &z, &s).unwrap();
        prop_assert!((k - kt.conj()).norm() <= 1e-12 * k.norm());
        prop_assert!(poisson_kernel(&z, &l, &s).unwrap() > 0.0);
        let diag = normalized_kernel(&l, &l, &s).unwrap();
        prop_assert!(close(diag.re, (1.0 - l.norm_sq()).powf(-(n as f64) / 2.0), 1e-12));
        prop_assert!(diag.im.abs() <= 1e-12 * diag.re);
    }

    #[test]
    fn gram_is_hermitian(mu in dims().prop_flat_map(|d| measure(d, 12, 0.99))) {
        let g = carleson_core::measure::embedding_gram(&mu).unwrap();
        let n = mu.len();
        let mut scale: f64 = 0.0;
        let mut worst: f64 = 0.0;
        for j in 0..n {
            for k in 0..n {
                scale = scale.max(g.get(j, k).norm());
                worst = worst.max((g.get(j, k) - g.get(k, j).conj()).norm());
            }
        }
        prop_assert!(worst <= 1e-12 * scale);
        let (lo, hi) = embedding_spectrum(&mu).unwrap();
        prop_assert!(lo >= -1e-10 * hi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sandwich(mu in dims().prop_flat_map(|d| measure(d, 20, 0.995))) {
        let a = embedding_norm_sq(&mu).unwrap();
        let c = kernel_constant_on_support(&mu).unwrap();
        prop_assert!(c <= a * (1.0 + 1e-9));
        prop_assert!(a <= theorem_bound_constant(mu.space()) * c * (1.0 + 1e-9));
    }

    #[test]
    fn adding_an_atom_never_decreases_a_sq(
        (mu, p, w) in dims().prop_flat_map(|d| (measure(d, 10, 0.99), point(d.max(1), 0.99), 0.01f64..10.0))
    ) {
        let a = embedding_norm_sq(&mu).unwrap();
        let bigger = mu.with_atom(p, w).unwrap();
        prop_assert!(embedding_norm_sq(&bigger).unwrap() >= a * (1.0 - 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn analyze_is_scale_equivariant(mu in prop_oneof![measure(0, 6, 0.99), measure(2, 6, 0.99)], c in 0.01f64..100.0) {
        let r = analyze(&mu, 16).unwrap();
        let rc = analyze(&mu.scaled(c).unwrap(), 16).unwrap();
        prop_assert!(close(rc.a_sq, c * r.a_sq, 1e-10));
        prop_assert!(close(rc.c_supp, c * r.c_supp, 1e-12));
        prop_assert!(close(rc.c_grid, c * r.c_grid, 1e-12));
        if let (Some(i), Some(ic)) = (r.i_box, rc.i_box) {
            prop_assert!(close(ic, c * i, 1e-12));
        }
        prop_assert!(close(rc.ratio, r.ratio, 1e-10));
        prop_assert_eq!(rc.holds, r.holds);
    }

    #[test]
    fn analyze_is_rotation_invariant_on_disc(mu in measure(0, 6, 0.99), theta in 0.0f64..(2.0 * PI)) {
        let u = Complex64::from_polar(1.0, theta);
        let r = analyze(&mu, 16).unwrap();
        let rr = analyze(&mu.rotated(u).unwrap(), 16).unwrap();
        prop_assert!(close(rr.a_sq, r.a_sq, 1e-12));
        prop_assert!(close(rr.c_supp, r.c_supp, 1e-12));
        prop_assert!(close(rr.ratio, r.ratio, 1e-12));
    }

    #[test]
    fn ratio_stays_in_the_sandwich(mu in dims().prop_flat_map(|d| measure(d, 8, 0.999))) {
        let r = ratio(&mu).unwrap();
        prop_assert!(r >= 1.0 - 1e-9);
        prop_assert!(r <= theorem_bound_constant(mu.space()) * (1.0 + 1e-9));
    }

    /// `Δ(e^φ|f|²) ≥ e^φ Δφ |f|²` on the disc and its invariant analogue on the ball.
    #[test]
    fn weighted_modulus_is_subharmonic(
        (mu, z, seed, degree) in prop_oneof![Just(0usize), Just(2usize)]
            .prop_flat_map(|d| (measure(d, 4, 0.9), point(d.max(1), 0.85), any::<u64>(), 0u32..=4))
    ) {
        let s = *mu.space();
        let f = MultiPoly::random(s.dim(), degree, &mut rng_stream(seed, 0));
        let u = |p: &SpacePoint| carleson_potential(&mu, p).unwrap().exp() * f.eval(p.coords()).norm_sqr();
        let h = 1e-3;
        let lhs = if s.is_disc() {
            laplacian_fd_extrapolated(u, &z, h).unwrap()
        } else {
            invariant_laplacian_fd_extrapolated(u, &z, &s, h).unwrap()
        };
        let rhs = potential_laplacian_closed(&mu, &z).unwrap() * u(&z);
        prop_assert!(lhs >= rhs - 1e-6 * (1.0 + lhs.abs()), "lhs {lhs}, rhs {rhs}");
    }
}

fn sequence(max_len: usize) -> impl Strategy<Value = PointSequence> {
    prop::collection::vec(point(1, 0.99), 1..=max_len).prop_filter_map("coincident points", |p| PointSequence::new(p).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delta_decreases_when_points_are_added(seq in sequence(10), p in point(1, 0.99)) {
        let d = carleson_delta(&seq).unwrap();
        let mut pts = seq.points().to_vec();
        pts.push(p);
        if let Ok(more) = PointSequence::new(pts) {
            prop_assert!(carleson_delta(&more).unwrap() <= d * (1.0 + 1e-12));
        }
    }

    #[test]
    fn delta_is_mobius_and_rotation_invariant(seq in sequence(10), a in point(1, 0.9), theta in 0.0f64..(2.0 * PI)) {
        let disc = Space::disc();
        let d = carleson_delta(&seq).unwrap();
        let moved: Vec<SpacePoint> = seq.points().iter().map(|p| mobius(&a, p, &disc).unwrap()).collect();
        let rotated: Vec<SpacePoint> =
            seq.points().iter().map(|p| p.scaled(Complex64::from_polar(1.0, theta)).unwrap()).collect();
        if d > 1e-8 {
            prop_assert!(close(carleson_delta(&PointSequence::new(moved).unwrap()).unwrap(), d, 1e-10));
            prop_assert!(close(carleson_delta(&PointSequence::new(rotated).unwrap()).unwrap(), d, 1e-12));
        }
    }

    #[test]
    fn gram_is_positive_definite_for_separated_sequences(seq in sequence(10)) {
        if carleson_delta(&seq).unwrap() > 0.01 {
            let (lo, _) = extreme_eigs(&gram_matrix(&seq).unwrap()).unwrap();
            prop_assert!(lo > 0.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn search_is_deterministic_and_monotone(seed in any::<u64>(), atoms in 1usize..=3, ball in any::<bool>()) {
        let s = if ball { Space::ball(2).unwrap() } else { Space::disc() };
        let mut cfg = SearchConfig::new(s, atoms);
        cfg.seed = seed;
        cfg.iterations = 200;
        cfg.restarts = 2;
        let a = search(&cfg).unwrap();
        let b = search(&cfg).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.trace.windows(2).all(|w| w[0].best_ratio <= w[1].best_ratio));
        prop_assert!(a.best_ratio >= 1.0 - 1e-9);
        prop_assert!(a.best_ratio <= theorem_bound_constant(&s) * (1.0 + 1e-9));
        prop_assert!(a.violations.is_empty());
    }
}
