use quasilin::matrix::Matrix;
use quasilin::multipoly::{QuotientContext, QuotientRing};
use quasilin::ring::{PrimeField, Ring, RingSpec};
use quasilin::rng::seeded_rng;
use quasilin::verify::*;
use rand::Rng;

fn symbolic() -> ProofContext<QuotientRing> {
    ProofContext::symbolic(QuotientRing::standard()).unwrap()
}

fn field_instances(p: u64, n: usize, seed: u64) -> Vec<ProofContext<PrimeField>> {
    let f = PrimeField::new(p).unwrap();
    let mut rng = seeded_rng(seed);
    (0..n)
        .map(|_| ProofContext::random_instance(f, &mut rng, |r| r.gen_range(0..p)).unwrap())
        .collect()
}

#[test]
fn symbolic_context_invariants() {
    let ctx = symbolic();
    assert!(ctx.g().mul(ctx.q()).unwrap().is_identity());
    assert!(ctx.p().mul(ctx.q()).unwrap().mul(ctx.r()).unwrap().is_identity());
    let t = Matrix::from_i64_rows(
        RingSpec::Integers,
        &[
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, -1, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0],
            &[0, 0, 1, 0, 1, 0],
            &[0, 0, 0, 1, 0, 1],
        ],
    )
    .unwrap();
    let rendered: Vec<Vec<String>> = t.render_rows();
    assert_eq!(ctx.t().render_rows(), rendered);
}

#[test]
fn every_statement_holds_symbolically() {
    let ctx = symbolic();
    for st in Statement::ALL {
        let c = certify(st, std::slice::from_ref(&ctx), false).unwrap();
        assert!(c.passed && c.residual_is_zero, "{}: {:?}", c.statement_id, c.failure);
        assert_eq!(c.mode, "symbolic");
    }
}

#[test]
fn dv_identity_on_f11_points() {
    for ctx in field_instances(11, 100, 3) {
        assert!(verify_dv_identity(&ctx).unwrap().passed);
    }
}

#[test]
fn zxy_identity_on_f13_points() {
    for ctx in field_instances(13, 100, 4) {
        assert!(verify_zxy_identity(&ctx).unwrap().passed);
    }
}

#[test]
fn shapes_on_integer_points() {
    let ring = RingSpec::Integers;
    let mut rng = seeded_rng(5);
    let mut seen = 0;
    while seen < 100 {
        let vals: Vec<i64> = (0..4).map(|_| rng.gen_range(-10..=10)).collect();
        let (a, b, c, f) = (vals[0], vals[1], vals[2], vals[3]);
        if a == 0 || (b * c + 1) % a != 0 {
            continue;
        }
        let d = (b * c + 1) / a;
        if d.abs() > 10 {
            continue;
        }
        let e = [a, b, c, d, f].map(|v| ring.integer(v));
        let l = (0..N_VARIABLES)
            .map(|_| ring.integer(rng.gen_range(-10..=10)))
            .collect();
        let ctx = ProofContext::from_values(ring, e, l).unwrap();
        // independent oracle: x = -(p - I)(q - I) computed by hand
        let (pa, pb, pc, pd) = (a + f * c, b + f * d, c, d);
        let x21 = -(pc * (d - 1) + (pd - 1) * (-c));
        assert_eq!(x21, 0);
        assert_eq!(ctx.x_block().get(1, 0), &ring.integer(0));
        let x11 = -((pa - 1) * (d - 1) + pb * (-c));
        assert_eq!(ctx.x_block().get(0, 0), &ring.integer(x11));
        assert!(verify_x_z_shapes(&ctx).unwrap().passed);
        assert!(verify_t_conjugation(&ctx).unwrap().passed);
        seen += 1;
    }
}

#[test]
fn identity_point_degenerates() {
    let ring = RingSpec::Integers;
    let e = [1, 0, 0, 1, 0].map(|v| ring.integer(v));
    let ctx = ProofContext::from_values(ring, e, vec![ring.zero(); N_VARIABLES]).unwrap();
    assert!(ctx.x_block().is_zero() && ctx.z_block().is_zero());
    // all l = 0: gamma = I, u = 0
    assert!(ctx.gamma(0).unwrap().is_identity());
    assert!(in_n(&ctx.n_element(0).unwrap()));
    // the W identity reduces to T Y T^-1 = Y^-1
    let t_inv = ctx.t().inverse().unwrap();
    let y_inv = ctx.y().unitriangular_inverse().unwrap();
    assert_eq!(ctx.t().mul(ctx.y()).unwrap().mul(&t_inv).unwrap(), y_inv);
    for st in Statement::ALL {
        assert!(certify(st, std::slice::from_ref(&ctx), false).unwrap().passed);
    }
}

#[test]
fn n_ring_gamma_and_normalizer_on_small_fields() {
    for ctx in field_instances(7, 60, 6) {
        assert!(verify_n_ring(&ctx).unwrap().passed);
        assert!(verify_normalizer(&ctx).unwrap().passed);
    }
    for ctx in field_instances(5, 60, 7) {
        assert!(verify_gamma_n_group(&ctx).unwrap().passed);
    }
}

#[test]
fn power_identity_on_f7() {
    for ctx in field_instances(7, 50, 8) {
        let xy = ctx.x().mul(ctx.y()).unwrap();
        let xy_inv = ctx
            .y()
            .unitriangular_inverse()
            .unwrap()
            .mul(&ctx.x().unitriangular_inverse().unwrap())
            .unwrap();
        verify_gene_power(ctx.z(), &xy, &xy_inv, in_gamma_n, 8).unwrap();
    }
}

#[test]
fn generic_gamma_power_symbolic() {
    let ctx = symbolic();
    let g = ctx.x().clone();
    let g_inv = g.unitriangular_inverse().unwrap();
    verify_gene_power(&ctx.gamma(0).unwrap(), &g, &g_inv, in_gamma_n, 5).unwrap();
}

#[test]
fn elementary_witness_is_an_involution() {
    let ring = RingSpec::Integers;
    let mut rng = seeded_rng(9);
    let d = elementary_conjugate_to_inverse_witness(&ring, 6, 5, 0).unwrap();
    for _ in 0..20 {
        let r = ring.integer(rng.gen_range(-50..=50));
        let mut e = Matrix::identity(ring, 6);
        e.set(5, 0, r.clone()).unwrap();
        let once = d.mul(&e).unwrap().mul(&d).unwrap();
        assert_eq!(once.get(5, 0), &ring.neg(&r));
        assert_eq!(d.mul(&once).unwrap().mul(&d).unwrap(), e);
    }
}

#[test]
fn numeric_only_f101_batch() {
    let config = VerifyConfig {
        numeric_only: true,
        instances: 500,
        sources: vec![InstanceSource::Field(101)],
        seed: 11,
        ..VerifyConfig::default()
    };
    let run = run_all(&config).unwrap();
    assert!(run.passed);
    assert_eq!(run.certificates.len(), Statement::ALL.len());
    assert!(run
        .certificates
        .iter()
        .all(|c| c.instances == 500 && c.mode == "numeric"));
}

#[test]
fn runs_are_byte_identical() {
    let config = VerifyConfig {
        instances: 20,
        seed: 42,
        ..VerifyConfig::default()
    };
    let a = run_all(&config).unwrap().to_json();
    let b = run_all(&config).unwrap().to_json();
    assert_eq!(a, b);
    let parsed = ProofRun::from_json(&a).unwrap();
    assert_eq!(parsed.format, CERTIFICATE_FORMAT);
    assert!(parsed.certificates[0].term_order.as_deref().unwrap().contains("lex"));
}

#[test]
fn every_single_entry_mutation_is_caught() {
    let targets = [
        MutationTarget::X1,
        MutationTarget::X2,
        MutationTarget::X,
        MutationTarget::Z,
        MutationTarget::T,
    ];
    let mut survivors = Vec::new();
    for target in targets {
        for row in 0..6 {
            for col in 0..6 {
                let m = Mutation { target, row, col };
                let config = VerifyConfig {
                    instances: 3,
                    sources: vec![InstanceSource::Field(101)],
                    symbolic_power_depth: 2,
                    numeric_power_depth: 2,
                    mutation: Some(m),
                    seed: 1,
                    ..VerifyConfig::default()
                };
                if run_all(&config).unwrap().passed {
                    survivors.push(m.to_string());
                }
            }
        }
    }
    assert!(survivors.is_empty(), "surviving mutations: {survivors:?}");
}

#[test]
fn resource_guard_propagates() {
    let ring = QuotientRing::new(QuotientContext::standard().with_term_limit(3));
    let err = ProofContext::symbolic(ring)
        .and_then(|ctx| verify_power_identity(&ctx))
        .unwrap_err();
    assert!(err.is_resource_guard(), "{err}");
}
