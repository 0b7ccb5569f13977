#![allow(dead_code)]

use std::collections::BTreeMap;

use partible_core::poly::{parity_support, Parity};
use partible_core::reduction::Scaling;
use partible_core::sequences::{apery_operator, apery_signed_operator, delannoy_operator};
use partible_core::{
    is_partible, partible_reduce, reduce, AlphaRule, Field, FieldElement, Poly, Polynomial,
    ShiftOperator,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_poly(rng: &mut impl Rng, max_deg: usize, bound: i64) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Polynomial::new(
        (0..=deg)
            .map(|_| FieldElement::from(rng.gen_range(-bound..=bound)))
            .collect(),
    )
}

/// Random operator of order `1..=max_order` with coefficients of degree
/// `<= max_deg` and a nonzero leading coefficient.
pub fn random_operator(rng: &mut impl Rng, max_order: usize, max_deg: usize) -> ShiftOperator {
    let order = rng.gen_range(1..=max_order);
    let mut coeffs: Vec<Poly> = (0..=order).map(|_| random_poly(rng, max_deg, 6)).collect();
    while coeffs[order].is_zero() {
        coeffs[order] = random_poly(rng, max_deg, 6);
    }
    ShiftOperator::new(coeffs).expect("nonzero leading coefficient")
}

pub fn fe(n: i64) -> FieldElement {
    FieldElement::from(n)
}

/// `x(k0)` for an integer point.
pub fn at(p: &Poly, k0: i64) -> FieldElement {
    p.eval(&fe(k0))
}

pub fn zero() -> FieldElement {
    <FieldElement as Field>::zero()
}

pub fn partible_builtins() -> Vec<(&'static str, ShiftOperator)> {
    vec![
        ("apery", apery_operator()),
        ("apery_signed", apery_signed_operator()),
        ("delannoy_z1", delannoy_operator(&fe(1))),
        ("delannoy_z", delannoy_operator(&FieldElement::z())),
    ]
}

/// Reassembly on 200 random `(Q, L)` with `deg Q <= 20`, order `<= 3`.
pub fn check_reduction_exactness() {
    let mut r = rng(7);
    for _ in 0..200 {
        let op = random_operator(&mut r, 3, 4);
        let q = random_poly(&mut r, 20, 50);
        let res = reduce(&q, &op);
        assert_eq!(res.reassemble(&op), q, "op {:?}", op.coeffs());
        let prof = op.profile();
        assert!(res.exceptional.keys().all(|s| prof.roots.contains(s)));
        let bound = prof.degree.max(0) as usize;
        assert!(res.remainder.degree().is_none_or(|deg| deg < bound));
    }
}

/// Parity of the remainder of `(k - γ)^m`, `m <= 15`, on the partible built-ins.
pub fn check_parity() {
    for (name, op) in partible_builtins() {
        let cert = is_partible(&op).unwrap_or_else(|| panic!("{name} is partible"));
        let center = Poly::linear(-cert.gamma.clone());
        for m in 0..=15u32 {
            let rem = reduce(&center.pow(m), &op).remainder;
            let parity = parity_support(&rem.expand_in_center(&cert.gamma));
            assert!(
                parity == Parity::Zero || parity == Parity::of(m as i64),
                "{name}, m = {m}: {parity:?}"
            );
            // the parity-preserving reduction lands on the same coset representative
            let scaling = Scaling::default_for(&cert.gamma);
            let pr = partible_reduce(m as usize, &op, &cert, &scaling).unwrap();
            let t = pr.basis_unit_poly();
            let u_poly = pr.u_coeffs.iter().fold(Poly::zero(), |acc, (i, u)| {
                &acc + &t.pow(*i as u32).scale(u)
            });
            let unit_m = scaling.unit.pow(m);
            assert_eq!(u_poly, rem.scale(&unit_m), "{name}, m = {m}");
        }
    }
}

pub fn assert_degree_law(op: &ShiftOperator, r: &mut impl Rng) {
    let prof = op.profile();
    for s in 0..=8usize {
        let mut x = random_poly(r, s, 9);
        let mut c = x.coeffs().to_vec();
        c.resize(s + 1, fe(0));
        c[s] = fe(r.gen_range(1..=9));
        x = Polynomial::new(c);
        let image = op.adjoint_apply(&x);
        let target = prof.degree + s as i64;
        let got = image.degree().map_or(i64::MIN, |d| d as i64);
        if prof.roots.contains(&(s as u64)) {
            assert!(got < target, "{:?}: s = {s}", op.coeffs());
        } else {
            assert_eq!(got, target, "{:?}: s = {s}", op.coeffs());
        }
    }
}

/// Degree law on the built-ins, 50 random operators and `σ - 1`.
pub fn check_degree_law() {
    let mut r = rng(11);
    for (_, op) in partible_builtins() {
        assert_degree_law(&op, &mut r);
    }
    for _ in 0..50 {
        let op = random_operator(&mut r, 3, 4);
        assert_degree_law(&op, &mut r);
    }
    // σ - 1 has d = -1 and R = {0}
    let delta = ShiftOperator::new(vec![Poly::from_ints(&[-1]), Poly::from_ints(&[1])]).unwrap();
    assert_degree_law(&delta, &mut r);
}

/// `u_coeffs` do not depend on the generator scaling.
pub fn check_scaling_irrelevance() {
    let mut r = rng(13);
    for (name, op) in partible_builtins() {
        let cert = is_partible(&op).unwrap();
        let base = Scaling::default_for(&cert.gamma);
        for m in 0..=11usize {
            let custom: BTreeMap<usize, FieldElement> = (0..=m)
                .map(|j| {
                    let mut a = 0;
                    while a == 0 {
                        a = r.gen_range(-20..=20);
                    }
                    (j, fe(a) / fe(r.gen_range(1..=7)))
                })
                .collect();
            let other = Scaling {
                alpha: AlphaRule::Custom(custom),
                unit: base.unit.clone(),
            };
            let a = partible_reduce(m, &op, &cert, &base).unwrap();
            let b = partible_reduce(m, &op, &cert, &other).unwrap();
            assert!(b.verify(&op));
            assert_eq!(a.u_coeffs, b.u_coeffs, "{name}, m = {m}");
            for (j, v) in &a.v_coeffs {
                assert_eq!(
                    v.clone() * &a.alphas[j],
                    b.v_coeffs[j].clone() * &b.alphas[j]
                );
            }
        }
    }
}
