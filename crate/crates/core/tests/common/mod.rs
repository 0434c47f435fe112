//! Independent oracles shared by the integration and acceptance tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use polyprime_algebra::{GroebnerBasis, Monomial};

/// Every exponent vector in `nvars` variables of total degree `1..=max`.
pub fn monomials_up_to(nvars: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, max, &mut vec![0; nvars], &mut out);
    out.retain(|e| e.iter().any(|&x| x > 0));
    out
}

/// Brute-force kernel completeness: monomials of degree at most `max`
/// with equal images under `image` must share one normal form modulo
/// `gb`. Returns the number of fibres with two or more monomials.
pub fn kernel_completeness(gb: &GroebnerBasis, image: impl Fn(&[u32]) -> Vec<i64>, max: u32) -> Result<usize, String> {
    let n = gb.order.nvars();
    let mut fibres: BTreeMap<Vec<i64>, Vec<Vec<u32>>> = BTreeMap::new();
    for e in monomials_up_to(n, max) {
        fibres.entry(image(&e)).or_default().push(e);
    }
    let mut nontrivial = 0;
    for (img, members) in &fibres {
        if members.len() < 2 {
            continue;
        }
        nontrivial += 1;
        let nf0 = gb.normal_form(&Monomial::new(members[0].clone()));
        for m in &members[1..] {
            if gb.normal_form(&Monomial::new(m.clone())) != nf0 {
                return Err(format!("{:?} and {:?} share image {img:?} but differ modulo the basis", members[0], m));
            }
        }
    }
    Ok(nontrivial)
}

/// The image `A·e` of an exponent vector under an integer matrix.
pub fn matrix_image(rows: &[Vec<i64>]) -> impl Fn(&[u32]) -> Vec<i64> + '_ {
    move |e: &[u32]| {
        rows.iter()
            .map(|r| r.iter().zip(e).map(|(a, &x)| a * x as i64).sum())
            .collect()
    }
}
