//! Independent group arithmetic and a product-enumeration oracle for
//! commutator length, shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

pub type M2 = [u64; 4];

pub fn m2_mul(x: &M2, y: &M2) -> M2 {
    [
        (x[0] * y[0] + x[1] * y[2]) % 3,
        (x[0] * y[1] + x[1] * y[3]) % 3,
        (x[2] * y[0] + x[3] * y[2]) % 3,
        (x[2] * y[1] + x[3] * y[3]) % 3,
    ]
}

pub fn sl2_f3_elements() -> Vec<M2> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    if (a * d + 9 - (b * c) % 3) % 3 == 1 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

pub type P5 = [u8; 5];

/// `(x * y)(i) = x(y(i))`
pub fn p5_mul(x: &P5, y: &P5) -> P5 {
    let mut out = [0; 5];
    for i in 0..5 {
        out[i] = x[y[i] as usize];
    }
    out
}

pub fn s5_elements() -> Vec<P5> {
    let mut out = Vec::new();
    let mut p = [0u8, 1, 2, 3, 4];
    fn rec(k: usize, p: &mut P5, out: &mut Vec<P5>) {
        if k == 5 {
            out.push(*p);
            return;
        }
        for i in k..5 {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// cl of every element of the commutator subgroup by exhaustive products:
/// `L_0 = {e}`, `L_{k+1} = L_k * C` where `C` is every `x y x^-1 y^-1`.
pub fn oracle_cl<T: Copy + Eq + std::hash::Hash>(elems: &[T], mul: impl Fn(&T, &T) -> T, e: T) -> HashMap<T, u32> {
    let inv = |x: &T| *elems.iter().find(|y| mul(x, y) == e).unwrap();
    let mut comms = HashSet::new();
    for x in elems {
        for y in elems {
            comms.insert(mul(&mul(&mul(x, y), &inv(x)), &inv(y)));
        }
    }
    let mut cl = HashMap::from([(e, 0u32)]);
    let mut level: HashSet<T> = HashSet::from([e]);
    for k in 1.. {
        let next: HashSet<T> = level
            .iter()
            .flat_map(|a| comms.iter().map(|c| mul(a, c)).collect::<Vec<_>>())
            .collect();
        let mut grew = false;
        for g in &next {
            if !cl.contains_key(g) {
                cl.insert(*g, k);
                grew = true;
            }
        }
        if !grew {
            break;
        }
        level = next;
    }
    cl
}
