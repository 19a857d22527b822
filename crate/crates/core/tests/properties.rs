mod common;

use proptest::prelude::*;
use rand::Rng;

use quiver_cm::degeneration::hom_leq;
use quiver_cm::groebner::{buchberger, Ideal, PolyRing};
use quiver_cm::homogeneity::{is_homogeneous, is_isomorphic_generic};
use quiver_cm::homology::{end_dim, ext1_dim, hom_dim, pd_formula};
use quiver_cm::quiver::{parse_quiver, rep_space_dim};
use quiver_cm::representation::parse_representation_file;
use quiver_cm::roots::{DynkinContext, OrbitLabel};
use quiver_cm::{Field, Matrix, Quiver, Representation};

use common::*;

/// Random invertible base change: unit lower-triangular times a permutation.
fn random_invertible(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Matrix {
    let mut entries = vec![0i64; n * n];
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    for i in 0..n {
        entries[i * n + perm[i]] = 1;
        for j in 0..i {
            entries[i * n + perm[j]] = rng.gen_range(-2..=2);
        }
    }
    Matrix::from_ints(n, n, &entries)
}

fn random_base_change(rng: &mut rand_chacha::ChaCha8Rng, m: &Representation) -> Vec<Matrix> {
    m.dims().0.iter().map(|&n| random_invertible(rng, n)).collect()
}

fn is_nilpotent(f: &Matrix) -> bool {
    let field = Field::Rational;
    let mut p = f.clone();
    for _ in 0..f.rows() {
        p = p.mul(field, f);
    }
    f.rows() == 0 || p.is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ringel_identity_on_dynkin_quivers(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let q = random_dynkin(&mut rng);
        let m = random_rep(&mut rng, &q, 3);
        let l = rep_space_dim(&q, m.dims()) as i64;
        let ext = ext1_dim(&m).unwrap() as i64;
        prop_assert_eq!(ext, l + end_dim(&m) as i64 - m.dims().sum_of_squares() as i64);
        prop_assert_eq!(pd_formula(&m), ext);
        prop_assert_eq!(end_dim(&m), oracle_end_dim(&m));
    }

    #[test]
    fn invariants_are_conjugation_invariant(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let q = random_dynkin(&mut rng);
        let m = random_rep(&mut rng, &q, 3);
        let g = random_base_change(&mut rng, &m);
        let n = m.conjugate(&g).unwrap();
        prop_assert_eq!(end_dim(&m), end_dim(&n));
        prop_assert_eq!(ext1_dim(&m).unwrap(), ext1_dim(&n).unwrap());
        prop_assert_eq!(hom_dim(&m, &n).unwrap(), end_dim(&m));
        prop_assert!(is_isomorphic_generic(&m, &n).unwrap());
        prop_assert!(is_isomorphic_generic(&n, &m).unwrap());
        let ctx = DynkinContext::new(&q, Field::Rational).unwrap();
        prop_assert_eq!(ctx.decompose(&m).unwrap(), ctx.decompose(&n).unwrap());
    }

    #[test]
    fn isomorphism_test_agrees_with_decomposition(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let q = random_dynkin(&mut rng);
        let m = random_rep(&mut rng, &q, 2);
        // another random point with the same dimension vector
        let maps: Vec<Matrix> = m.maps().iter().map(|f| {
            let e: Vec<i64> = (0..f.rows() * f.cols()).map(|_| rng.gen_range(-1..=1)).collect();
            Matrix::from_ints(f.rows(), f.cols(), &e)
        }).collect();
        let n = Representation::new(q.clone(), m.field(), m.dims().clone(), maps).unwrap();
        let ctx = DynkinContext::new(&q, Field::Rational).unwrap();
        let same = ctx.decompose(&m).unwrap() == ctx.decompose(&n).unwrap();
        prop_assert_eq!(is_isomorphic_generic(&m, &n).unwrap(), same);
        if same {
            for x in ctx.indecomposables() {
                prop_assert_eq!(hom_dim(x, &m).unwrap(), hom_dim(x, &n).unwrap());
            }
        }
    }

    #[test]
    fn every_orbit_degenerates_to_zero(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let q = random_dynkin(&mut rng);
        let m = random_rep(&mut rng, &q, 2);
        prop_assert_eq!(is_homogeneous(&m).is_homogeneous(), Some(true));
        let ctx = DynkinContext::new(&q, Field::Rational).unwrap();
        let label = ctx.decompose(&m).unwrap();
        prop_assert!(hom_leq(&ctx, &label, &OrbitLabel::semisimple(m.dims())).unwrap());
    }

    #[test]
    fn text_formats_round_trip(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let q = random_tree(&mut rng, 6);
        prop_assert_eq!(parse_quiver(&q.to_text()).unwrap(), q.clone());
        let m = random_rep(&mut rng, &q, 3);
        let back = parse_representation_file(&m.to_bundle_text(), None).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn homogeneous_two_loop_points_are_nilpotent(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let q = parse_quiver("vertex 1\narrow alpha: 1 -> 1\narrow beta: 1 -> 1\n").unwrap();
        let n = rng.gen_range(1..=3);
        let strict = rng.gen_bool(0.5);
        let maps: Vec<Matrix> = (0..2).map(|_| {
            let e: Vec<i64> = (0..n * n).map(|k| {
                if strict && k / n <= k % n { 0 } else { rng.gen_range(-1..=1) }
            }).collect();
            Matrix::from_ints(n, n, &e)
        }).collect();
        let m = Representation::new(q, Field::Rational, quiver_cm::DimVector(vec![n]), maps).unwrap();
        let verdict = is_homogeneous(&m);
        if verdict.is_homogeneous() == Some(true) {
            prop_assert!(m.maps().iter().all(is_nilpotent));
        }
    }

    #[test]
    fn groebner_basis_ignores_generator_order(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let r = PolyRing::new(vec!["x".into(), "y".into(), "z".into()], Field::Rational);
        let pool = ["x^2 - y*z", "x*y - z^2", "y^2 - x*z", "x*z + y*z", "x^3 - z^3", "x*y*z"];
        let mut picks: Vec<&str> = pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        let gens = |p: &[&str]| Ideal::new(r.field(), p.iter().map(|g| r.parse(g).unwrap()).collect());
        let a = buchberger(&gens(&picks), &r);
        picks.reverse();
        let b = buchberger(&gens(&picks), &r);
        prop_assert_eq!(a, b);
    }
}

#[test]
fn two_loop_is_not_dynkin_but_parses() {
    let m = parse_representation_file(&data("twoloop.rep"), None).unwrap();
    assert_eq!(m.quiver().vertex_count(), 1);
    assert!(DynkinContext::new(m.quiver(), Field::Rational).is_err());
    assert!(m.maps().iter().all(is_nilpotent));
}

#[test]
fn a_quiver_is_its_own_text() {
    let q = Quiver::linear_a(4);
    assert_eq!(parse_quiver(&q.to_text()).unwrap(), q);
}
