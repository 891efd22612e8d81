use quasilin::factor::{
    cl_upper_bound, cl_upper_bound_with_word, dv_decompose, elementary_as_commutator, factor_sl2, factor_sln,
};
use quasilin::matrix::{elementary, ElementaryMatrix, Matrix};
use quasilin::multipoly::QuotientRing;
use quasilin::ring::{PrimeField, Ring, RingSpec};
use quasilin::rng::{random_element, random_sl, seeded_rng, SampleBounds};
use rand::Rng;

fn rings() -> Vec<RingSpec> {
    vec![
        RingSpec::Integers,
        RingSpec::GaussianIntegers,
        RingSpec::PolyOverPrimeField(5),
        RingSpec::PolyOverPrimeField(2),
    ]
}

#[test]
fn round_trip_200_per_ring_and_size() {
    for ring in rings() {
        let mut rng = seeded_rng(400);
        for n in [2, 3] {
            for _ in 0..200 {
                let len = rng.gen_range(0..=20);
                let (m, _) = random_sl(&ring, n, len, &mut rng, SampleBounds::default()).unwrap();
                let f = factor_sln(&m).unwrap();
                // independent product: multiply the dense factor matrices directly
                let mut acc = Matrix::identity(ring, n);
                for e in &f.factors {
                    assert!(e.row != e.col && e.row < n && e.col < n);
                    acc = acc.mul(&e.to_matrix(&ring).unwrap()).unwrap();
                }
                assert_eq!(acc, m, "{ring} n={n}");
            }
        }
    }
}

#[test]
fn rational_polynomial_round_trip() {
    // exact rationals grow quickly along the remainder sequence, so words stay short
    let ring = RingSpec::PolyOverRationals;
    let mut rng = seeded_rng(407);
    for (n, count) in [(2, 200), (3, 60)] {
        for _ in 0..count {
            let len = rng.gen_range(0..=8);
            let (m, _) = random_sl(&ring, n, len, &mut rng, SampleBounds::default()).unwrap();
            assert!(factor_sln(&m).unwrap().verify(), "n={n}");
        }
    }
}

#[test]
fn larger_sizes_round_trip() {
    let mut rng = seeded_rng(401);
    for ring in [RingSpec::Integers, RingSpec::GaussianIntegers] {
        for n in 4..=6 {
            for _ in 0..20 {
                let (m, _) = random_sl(&ring, n, 25, &mut rng, SampleBounds::default()).unwrap();
                assert!(factor_sln(&m).unwrap().verify());
            }
        }
    }
}

#[test]
fn sl2_entry_point_matches() {
    let ring = RingSpec::Integers;
    let mut rng = seeded_rng(402);
    for _ in 0..100 {
        let (m, _) = random_sl(&ring, 2, 12, &mut rng, SampleBounds::default()).unwrap();
        let a = factor_sl2(&m).unwrap();
        assert!(a.verify());
        assert_eq!(a.factors, factor_sln(&m).unwrap().factors);
    }
}

#[test]
fn elementary_input_has_length_one() {
    let mut rng = seeded_rng(403);
    for ring in rings() {
        for n in 2..=5 {
            for _ in 0..5 {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                let mut v = random_element(&ring, &mut rng, SampleBounds::default());
                if v.is_zero() {
                    v = ring.one();
                }
                let e = ElementaryMatrix::new(n, i, j, v).unwrap();
                let f = factor_sln(&e.to_matrix(&ring).unwrap()).unwrap();
                assert_eq!(f.len(), 1, "{ring} n={n} {e}");
                assert_eq!(f.factors[0], e);
            }
        }
    }
}

#[test]
fn non_unimodular_inputs_fail() {
    let m = Matrix::from_i64_rows(RingSpec::Integers, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    assert!(factor_sln(&m).is_err());
    assert!(cl_upper_bound(&m).is_err());
}

#[test]
fn commutator_witnesses_for_every_pair() {
    let mut rng = seeded_rng(404);
    for ring in [RingSpec::GaussianIntegers, RingSpec::PolyOverPrimeField(5)] {
        for n in 3..=6 {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for _ in 0..10 {
                        let v = random_element(&ring, &mut rng, SampleBounds::default());
                        let e = ElementaryMatrix::new(n, i, j, v).unwrap();
                        let w = elementary_as_commutator(&ring, &e).unwrap();
                        // independent check with general inverses
                        let l_inv = w.left.inverse().unwrap();
                        let r_inv = w.right.inverse().unwrap();
                        let c = w.left.mul(&w.right).unwrap().mul(&l_inv).unwrap().mul(&r_inv).unwrap();
                        assert_eq!(c, e.to_matrix(&ring).unwrap());
                        assert!(w.verify());
                    }
                }
            }
        }
    }
}

#[test]
fn cl_bound_is_at_most_the_generating_word() {
    let ring = RingSpec::Integers;
    let mut rng = seeded_rng(405);
    for _ in 0..50 {
        let (m, word) = random_sl(&ring, 3, 20, &mut rng, SampleBounds::default()).unwrap();
        let b = cl_upper_bound_with_word(&m, &word).unwrap();
        assert!(b <= 20);
        assert!(b <= cl_upper_bound(&m).unwrap());
    }
    let (m, mut word) = random_sl(&ring, 3, 5, &mut rng, SampleBounds::default()).unwrap();
    word.pop();
    if elementary::product(&ring, 3, &word).unwrap() != m {
        assert!(cl_upper_bound_with_word(&m, &word).is_err());
    }
}

fn check_dv<R: Ring>(p: &Matrix<R>, q: &Matrix<R>, r: &Matrix<R>) {
    let d = dv_decompose(p, q, r).unwrap();
    assert!(d.l1.is_lower_unitriangular() && d.l2.is_lower_unitriangular());
    assert!(d.u1.is_upper_unitriangular() && d.u2.is_upper_unitriangular());
    let zero = Matrix::zeros(p.ring().clone(), p.rows(), p.rows());
    let diag = Matrix::from_blocks(vec![
        vec![p.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), q.clone(), zero.clone()],
        vec![zero.clone(), zero, r.clone()],
    ])
    .unwrap();
    assert_eq!(d.l1.mul(&d.u1).unwrap().mul(&d.l2).unwrap().mul(&d.u2).unwrap(), diag);
}

#[test]
fn dv_over_integers_and_f7() {
    let z = RingSpec::Integers;
    let mut rng = seeded_rng(406);
    for _ in 0..50 {
        let p = random_sl(&z, 2, 6, &mut rng, SampleBounds::default()).unwrap().0;
        let q = random_sl(&z, 2, 6, &mut rng, SampleBounds::default()).unwrap().0;
        let r = p.mul(&q).unwrap().inverse().unwrap();
        check_dv(&p, &q, &r);
    }
    let f = PrimeField::new(7).unwrap();
    for _ in 0..50 {
        let unit = |rng: &mut rand_chacha::ChaCha8Rng| rng.gen_range(1..7u64);
        let (a, b) = (unit(&mut rng), unit(&mut rng));
        let c = f.mul(&a, &b).unwrap();
        let wrap = |x: u64| Matrix::new(f, 1, 1, vec![x]).unwrap();
        let r = f.unit_inverse(&c).unwrap();
        check_dv(&wrap(a), &wrap(b), &wrap(r));
    }
}

#[test]
fn dv_over_the_symbolic_ring() {
    let ring = QuotientRing::standard();
    let v = |n: &str| ring.var(n).unwrap();
    let one = ring.one();
    let zero = ring.zero();
    let g = Matrix::from_rows(ring.clone(), vec![vec![v("a"), v("b")], vec![v("c"), v("d")]]).unwrap();
    let s = Matrix::from_rows(ring.clone(), vec![vec![one.clone(), v("f")], vec![zero, one]]).unwrap();
    let r = g.mul(&s).unwrap().inverse().unwrap();
    check_dv(&g, &s, &r);
}
