//! Textbook Buchberger algorithm with the sugar strategy and naive
//! polynomial division. Slow but simple; kept as a reference engine for
//! cross-checking the matrix engine.

use crate::ff::PrimeField;
use crate::mpoly::{Monomial, Term, TermOrder};

use super::f4::{monic, mul_terms_by, Grading};

fn sub_scaled(field: PrimeField, order: &TermOrder, a: &[Term], b: &[Term], s: u32) -> Vec<Term> {
    let neg = field.neg(s);
    crate::mpoly::poly::merge_add(field, order, a, b, neg)
}

/// Fully reduce `f` by `g` (naive division, every term).
pub(crate) fn reduce_full(field: PrimeField, order: &TermOrder, f: &[Term], g: &[Vec<Term>]) -> Vec<Term> {
    let mut rest = f.to_vec();
    let mut out: Vec<Term> = Vec::new();
    'outer: while let Some(t) = rest.first().copied() {
        for h in g {
            if h.is_empty() {
                continue;
            }
            if h[0].m.divides(&t.m) {
                let q = h[0].m.quotient_of(&t.m);
                let c = field.div(t.c, h[0].c).expect("nonzero lead");
                let prod = mul_terms_by(h, &q);
                rest = sub_scaled(field, order, &rest, &prod, c);
                continue 'outer;
            }
        }
        out.push(t);
        rest.remove(0);
    }
    out
}

fn spoly(field: PrimeField, order: &TermOrder, f: &[Term], g: &[Term]) -> Vec<Term> {
    let l = f[0].m.lcm(&g[0].m);
    let a = mul_terms_by(f, &f[0].m.quotient_of(&l));
    let b = mul_terms_by(g, &g[0].m.quotient_of(&l));
    let s = field.div(f[0].c, g[0].c).unwrap();
    sub_scaled(field, order, &a, &b, s)
}

/// Reduced Groebner basis, ascending by lead.
pub(crate) fn buchberger(
    field: PrimeField,
    order: &TermOrder,
    grading: &Grading,
    gens: &[Vec<Term>],
    module: bool,
) -> Vec<Vec<Term>> {
    let mut g: Vec<Vec<Term>> = Vec::new();
    let mut sugar: Vec<i64> = Vec::new();
    let mut pairs: Vec<(usize, usize, i64)> = Vec::new();
    let mut pending: Vec<(Vec<Term>, i64)> =
        gens.iter().filter(|f| !f.is_empty()).map(|f| (f.clone(), grading.poly_deg(order, f))).collect();
    loop {
        // Add pending polynomials (reduced) to the basis.
        while let Some((f, s)) = pending.pop() {
            let r = reduce_full(field, order, &f, &g);
            if r.is_empty() {
                continue;
            }
            let r = monic(field, &r);
            let h = g.len();
            for (k, gk) in g.iter().enumerate() {
                if gk[0].m.pos() != r[0].m.pos() {
                    continue;
                }
                if !module && gk[0].m.coprime(&r[0].m) {
                    continue;
                }
                let l = gk[0].m.lcm(&r[0].m);
                let sk = sugar[k] + grading.deg(order, &l) - grading.deg(order, &gk[0].m);
                let sh = s + grading.deg(order, &l) - grading.deg(order, &r[0].m);
                pairs.push((k, h, sk.max(sh)));
            }
            g.push(r);
            sugar.push(s);
        }
        if pairs.is_empty() {
            break;
        }
        let best = (0..pairs.len()).min_by_key(|&k| pairs[k].2).unwrap();
        let (i, j, s) = pairs.swap_remove(best);
        let l = g[i][0].m.lcm(&g[j][0].m);
        // Chain criterion: skip if some third element's lead divides the lcm
        // and both companion pairs are already gone.
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k][0].m.divides(&l)
                && !pairs.iter().any(|&(a, b, _)| (a, b) == (i.min(k), i.max(k)))
                && !pairs.iter().any(|&(a, b, _)| (a, b) == (j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let sp = spoly(field, order, &g[i], &g[j]);
        if !sp.is_empty() {
            pending.push((sp, s));
        }
    }
    interreduce(field, order, g)
}

/// Minimalize and tail-reduce a Groebner basis.
pub(crate) fn interreduce(field: PrimeField, order: &TermOrder, mut g: Vec<Vec<Term>>) -> Vec<Vec<Term>> {
    g.retain(|f| !f.is_empty());
    g.sort_by(|a, b| order.cmp(&a[0].m, &b[0].m));
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for f in g {
        let lm: Monomial = f[0].m;
        if minimal.iter().any(|h| h[0].m.divides(&lm)) {
            continue;
        }
        minimal.push(monic(field, &f));
    }
    let n = minimal.len();
    for k in 0..n {
        let others: Vec<Vec<Term>> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, h)| h.clone()).collect();
        let head = minimal[k][0];
        let tail = reduce_full(field, order, &minimal[k][1..], &others);
        let mut f = vec![head];
        f.extend(tail);
        minimal[k] = f;
    }
    minimal
}
