use proptest::prelude::*;
use quasilin::matrix::{determinant_bareiss, determinant_cofactor, BlockView, Matrix};
use quasilin::multipoly::QuotientRing;
use quasilin::ring::{PrimeField, Ring, RingSpec};
use quasilin::rng::{random_element, seeded_rng, SampleBounds};
use rand::Rng;

fn random_matrix(ring: &RingSpec, n: usize, rng: &mut impl Rng) -> Matrix<RingSpec> {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| random_element(ring, rng, SampleBounds::default()))
                .collect()
        })
        .collect();
    Matrix::from_rows(*ring, rows).unwrap()
}

fn random_fp(f: &PrimeField, n: usize, rng: &mut impl Rng) -> Matrix<PrimeField> {
    let p = f.modulus();
    let entries = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
    Matrix::new(*f, n, n, entries).unwrap()
}

/// Leibniz formula over all permutations, as an independent oracle.
fn leibniz(m: &Matrix<RingSpec>) -> quasilin::ring::RingElement {
    let n = m.rows();
    let ring = *m.ring();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = ring.zero();
    fn rec(
        k: usize,
        perm: &mut Vec<usize>,
        m: &Matrix<RingSpec>,
        ring: &RingSpec,
        total: &mut quasilin::ring::RingElement,
    ) {
        let n = perm.len();
        if k == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let mut t = ring.one();
            for (i, &pi) in perm.iter().enumerate() {
                t = ring.mul(&t, m.get(i, pi)).unwrap();
            }
            if inversions % 2 == 1 {
                t = ring.neg(&t);
            }
            *total = ring.add(total, &t);
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            rec(k + 1, perm, m, ring, total);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, m, &ring, &mut total);
    total
}

#[test]
fn associativity_and_distributivity() {
    for ring in [
        RingSpec::Integers,
        RingSpec::GaussianIntegers,
        RingSpec::PolyOverPrimeField(3),
    ] {
        let mut rng = seeded_rng(300);
        for n in 1..=4 {
            for _ in 0..25 {
                let a = random_matrix(&ring, n, &mut rng);
                let b = random_matrix(&ring, n, &mut rng);
                let c = random_matrix(&ring, n, &mut rng);
                assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
                assert_eq!(
                    a.mul(&b.add(&c).unwrap()).unwrap(),
                    a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                );
                assert_eq!(
                    a.add(&b).unwrap().mul(&c).unwrap(),
                    a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn determinant_routes_agree_and_multiply() {
    for ring in [
        RingSpec::Integers,
        RingSpec::GaussianIntegers,
        RingSpec::PolyOverPrimeField(5),
        RingSpec::PolyOverRationals,
    ] {
        let mut rng = seeded_rng(301);
        for n in 1..=6 {
            for _ in 0..8 {
                let a = random_matrix(&ring, n, &mut rng);
                let b = random_matrix(&ring, n, &mut rng);
                let da = determinant_bareiss(&a).unwrap();
                assert_eq!(da, determinant_cofactor(&a).unwrap(), "{ring} n={n}");
                if n <= 5 {
                    assert_eq!(da, leibniz(&a), "{ring} n={n}");
                }
                let dab = a.mul(&b).unwrap().determinant().unwrap();
                let prod = ring.mul(&da, &b.determinant().unwrap()).unwrap();
                assert_eq!(dab, prod, "{ring} n={n}");
            }
        }
    }
}

#[test]
fn determinant_over_prime_fields() {
    let f = PrimeField::new(7).unwrap();
    let mut rng = seeded_rng(302);
    for n in 1..=6 {
        for _ in 0..30 {
            let a = random_fp(&f, n, &mut rng);
            let b = random_fp(&f, n, &mut rng);
            assert_eq!(determinant_bareiss(&a).unwrap(), determinant_cofactor(&a).unwrap());
            let lhs = a.mul(&b).unwrap().determinant().unwrap();
            let rhs = f.mul(&a.determinant().unwrap(), &b.determinant().unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            if f.unit_inverse(&a.determinant().unwrap()).is_some() {
                let inv = a.inverse().unwrap();
                assert!(a.mul(&inv).unwrap().is_identity() && inv.mul(&a).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn block_view_round_trip() {
    let ring = RingSpec::GaussianIntegers;
    let mut rng = seeded_rng(303);
    for (n, b) in [(6, 2), (6, 3), (4, 2), (6, 1), (5, 5)] {
        let m = random_matrix(&ring, n, &mut rng);
        let view = BlockView::from_matrix(&m, b).unwrap();
        assert_eq!(view.to_matrix(), m);
        for i in 0..n / b {
            for j in 0..n / b {
                assert_eq!(view.block(i, j), &m.submatrix(i * b, j * b, b, b));
            }
        }
    }
    assert!(BlockView::from_matrix(&random_matrix(&ring, 5, &mut rng), 2).is_err());
}

fn random_unitriangular<R: Ring>(ring: &R, n: usize, upper: bool, mut entry: impl FnMut() -> R::Elem) -> Matrix<R> {
    let mut m = Matrix::identity(ring.clone(), n);
    for i in 0..n {
        for j in 0..n {
            if (upper && j > i) || (!upper && j < i) {
                m.set(i, j, entry()).unwrap();
            }
        }
    }
    m
}

#[test]
fn unitriangular_inverse_numeric() {
    let ring = RingSpec::PolyOverRationals;
    let mut rng = seeded_rng(304);
    for n in 1..=6 {
        for upper in [true, false] {
            let m = random_unitriangular(&ring, n, upper, || {
                random_element(&ring, &mut rng, SampleBounds::default())
            });
            let inv = m.unitriangular_inverse().unwrap();
            assert!(m.mul(&inv).unwrap().is_identity());
            assert!(inv.mul(&m).unwrap().is_identity());
            assert!(if upper {
                inv.is_upper_unitriangular()
            } else {
                inv.is_lower_unitriangular()
            });
        }
    }
}

#[test]
fn unitriangular_inverse_symbolic() {
    let ring = QuotientRing::standard();
    let names = ["a", "b", "c", "d", "f", "l1", "l2"];
    let mut rng = seeded_rng(305);
    for n in [2, 3, 4, 6] {
        for upper in [true, false] {
            let m = random_unitriangular(&ring, n, upper, || {
                let x = ring.var(names[rng.gen_range(0..names.len())]).unwrap();
                let y = ring.var(names[rng.gen_range(0..names.len())]).unwrap();
                ring.mul(&x, &y).unwrap()
            });
            let inv = m.unitriangular_inverse().unwrap();
            assert!(m.mul(&inv).unwrap().is_identity());
            assert!(inv.mul(&m).unwrap().is_identity());
        }
    }
}

proptest! {
    #[test]
    fn integer_det_is_multiplicative(a in proptest::collection::vec(-9i64..10, 9), b in proptest::collection::vec(-9i64..10, 9)) {
        let ring = RingSpec::Integers;
        let mk = |v: &[i64]| Matrix::new(ring, 3, 3, v.iter().map(|&x| ring.integer(x)).collect()).unwrap();
        let (ma, mb) = (mk(&a), mk(&b));
        let lhs = ma.mul(&mb).unwrap().determinant().unwrap();
        let rhs = ring.mul(&ma.determinant().unwrap(), &mb.determinant().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(ma.transpose().determinant().unwrap(), ma.determinant().unwrap());
    }

    #[test]
    fn adjugate_identity(a in proptest::collection::vec(-9i64..10, 16)) {
        let ring = RingSpec::Integers;
        let m = Matrix::new(ring, 4, 4, a.iter().map(|&x| ring.integer(x)).collect()).unwrap();
        let det = m.determinant().unwrap();
        let lhs = m.mul(&m.adjugate().unwrap()).unwrap();
        prop_assert_eq!(lhs, Matrix::identity(ring, 4).scale(&det).unwrap());
    }
}
