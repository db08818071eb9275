//! F4-style engine: pairs of one degree are reduced together as a
//! Macaulay matrix. Works for ideals and for submodules of free modules
//! (positions live in the monomials).

use rustc_hash::FxHashMap;

use crate::ff::PrimeField;
use crate::mpoly::{Monomial, Term, TermOrder};

/// Sentinel for pairs that stand for an input generator.
const INPUT: usize = usize::MAX;

/// Degree of a (module) monomial: weighted degree plus the position twist.
#[derive(Clone, Debug)]
pub(crate) struct Grading {
    weights: Vec<u32>,
    standard: bool,
}

impl Grading {
    pub fn new(weights: &[u32]) -> Self {
        Grading { weights: weights.to_vec(), standard: weights.iter().all(|&w| w == 1) }
    }

    #[inline]
    pub fn deg(&self, order: &TermOrder, m: &Monomial) -> i64 {
        let d = if self.standard { m.degree() } else { m.weighted_degree(&self.weights) };
        d as i64 + order.twist(m.pos()) as i64
    }

    pub fn poly_deg(&self, order: &TermOrder, terms: &[Term]) -> i64 {
        terms.iter().map(|t| self.deg(order, &t.m)).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: i64,
}

#[derive(Clone, Debug)]
struct Elem {
    terms: Vec<Term>,
    lm: Monomial,
}

pub(crate) struct F4Config<'a> {
    pub field: PrimeField,
    pub order: &'a TermOrder,
    pub grading: Grading,
    /// Drop pairs above this degree (the result is then a truncated basis).
    pub degree_bound: Option<i64>,
    /// Whether elements may live in different positions; disables the
    /// coprime-lead criterion, which only holds in rank one.
    pub module: bool,
}

pub(crate) struct F4Output {
    /// Minimal basis (no lead divides another), monic, ascending by lead.
    pub basis: Vec<Vec<Term>>,
    /// Indices of input generators that were not in the span of
    /// lower-degree data when processed (minimal generators for homogeneous input).
    pub minimal_inputs: Vec<usize>,
    /// False if pairs were dropped by the degree bound.
    pub complete: bool,
}

pub(crate) fn f4(cfg: &F4Config, gens: &[Vec<Term>]) -> F4Output {
    let mut st = State { cfg, basis: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for (k, g) in gens.iter().enumerate() {
        if g.is_empty() {
            continue;
        }
        let d = cfg.grading.poly_deg(cfg.order, g);
        st.pairs.push(Pair { i: k, j: INPUT, lcm: g[0].m, deg: d });
    }
    let mut minimal_inputs = Vec::new();
    let mut complete = true;
    while !st.pairs.is_empty() {
        let d = st.pairs.iter().map(|p| p.deg).min().unwrap();
        if let Some(b) = cfg.degree_bound {
            if d > b {
                complete = false;
                break;
            }
        }
        let (sel, rest): (Vec<Pair>, Vec<Pair>) = st.pairs.drain(..).partition(|p| p.deg == d);
        st.pairs = rest;
        let new_rows = st.reduce_selection(&sel, gens, &mut minimal_inputs);
        for row in new_rows {
            st.add_element(row);
        }
    }
    minimal_inputs.sort_unstable();
    let mut basis: Vec<Vec<Term>> = st
        .basis
        .into_iter()
        .zip(st.active)
        .filter(|(_, a)| *a)
        .map(|(e, _)| e.terms)
        .collect();
    basis.sort_by(|a, b| cfg.order.cmp(&a[0].m, &b[0].m));
    F4Output { basis, minimal_inputs, complete }
}

struct State<'a, 'b> {
    cfg: &'a F4Config<'b>,
    basis: Vec<Elem>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_, '_> {
    fn add_element(&mut self, terms: Vec<Term>) {
        let lm = terms[0].m;
        let h = self.basis.len();
        self.basis.push(Elem { terms, lm });
        self.active.push(true);
        self.update(h);
    }

    /// Gebauer-Moeller installation of the new element `h`.
    fn update(&mut self, h: usize) {
        let order = self.cfg.order;
        let grading = &self.cfg.grading;
        let lh = self.basis[h].lm;
        let deg_h = grading.poly_deg(order, &self.basis[h].terms);
        // Candidate pairs (h, g) with g active and in the same position.
        let mut cands: Vec<(usize, Monomial, bool, i64)> = Vec::new();
        for g in 0..h {
            if !self.active[g] || self.basis[g].lm.pos() != lh.pos() {
                continue;
            }
            let lg = self.basis[g].lm;
            let lcm = lh.lcm(&lg);
            let coprime = !self.cfg.module && lh.coprime(&lg);
            // Sugar of the pair: max over both multiplied halves.
            let dg = grading.poly_deg(order, &self.basis[g].terms);
            let mh = grading.deg(order, &lcm) - grading.deg(order, &lh);
            let mg = grading.deg(order, &lcm) - grading.deg(order, &lg);
            let sugar = (deg_h + mh).max(dg + mg);
            cands.push((g, lcm, coprime, sugar));
        }
        // Chain criterion among the new pairs: keep (h, g) unless some other
        // candidate's lcm properly divides its lcm (or equal lcm seen earlier).
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let (la, lb) = (cands[a].1, cands[b].1);
                if lb.divides(&la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // Old pairs made redundant by h.
        self.pairs.retain(|p| {
            if p.j == INPUT {
                return true;
            }
            let lp = p.lcm;
            if !lh.divides(&lp) {
                return true;
            }
            let li = self.basis[p.i].lm.lcm(&lh);
            let lj = self.basis[p.j].lm.lcm(&lh);
            li == lp || lj == lp
        });
        // Keep chain survivors; the coprime ones are dropped (product criterion)
        // only after they served the chain test above.
        for (k, (g, lcm, coprime, sugar)) in cands.into_iter().enumerate() {
            if keep[k] && !coprime {
                self.pairs.push(Pair { i: g, j: h, lcm, deg: sugar });
            }
        }
        for g in 0..h {
            if self.active[g] && lh.divides(&self.basis[g].lm) {
                self.active[g] = false;
            }
        }
    }

    /// Build and reduce the Macaulay matrix of the selected pairs; return the
    /// new basis elements.
    fn reduce_selection(&mut self, sel: &[Pair], gens: &[Vec<Term>], minimal: &mut Vec<usize>) -> Vec<Vec<Term>> {
        let order = self.cfg.order;
        let mut mat = MacaulayBuilder::new(self.cfg.field, order);
        // Halves of pairs. The first half becomes the reducer of its column.
        let mut seen_rows: FxHashMap<(Monomial, usize), ()> = FxHashMap::default();
        let mut todo_pairs: Vec<Vec<Term>> = Vec::new();
        let mut todo_inputs: Vec<(usize, Vec<Term>)> = Vec::new();
        let mut sorted = sel.to_vec();
        sorted.sort_by(|a, b| order.cmp(&a.lcm, &b.lcm).reverse());
        for p in &sorted {
            if p.j == INPUT {
                todo_inputs.push((p.i, gens[p.i].clone()));
                continue;
            }
            for (idx, first) in [(p.i, true), (p.j, false)] {
                let e = &self.basis[idx];
                let mult = e.lm.quotient_of(&p.lcm);
                if seen_rows.insert((mult, idx), ()).is_some() {
                    continue;
                }
                let row = mul_terms_by(&e.terms, &mult);
                if first && !mat.has_pivot(&p.lcm) {
                    mat.add_pivot(row);
                } else {
                    todo_pairs.push(row);
                }
            }
        }
        todo_inputs.sort_by_key(|(k, _)| *k);
        let n_pair_rows = todo_pairs.len();
        let mut todo: Vec<Vec<Term>> = todo_pairs;
        todo.extend(todo_inputs.iter().map(|(_, r)| r.clone()));
        for r in &todo {
            mat.note_monomials(r);
        }
        mat.preprocess(&self.basis, &self.active);
        let results = mat.reduce(&todo, true, true);
        let mut out = Vec::new();
        for (k, r) in results.into_iter().enumerate() {
            if let Some(row) = r {
                if k >= n_pair_rows {
                    minimal.push(todo_inputs[k - n_pair_rows].0);
                }
                out.push(row);
            }
        }
        out
    }
}

pub(crate) fn mul_terms_by(terms: &[Term], m: &Monomial) -> Vec<Term> {
    if m.is_one() {
        return terms.to_vec();
    }
    terms.iter().map(|t| Term { m: t.m.mul(m), c: t.c }).collect()
}

/// Sparse row over column indices.
struct SparseRow {
    cols: Vec<u32>,
    vals: Vec<u32>,
}

struct MacaulayBuilder<'a> {
    field: PrimeField,
    order: &'a TermOrder,
    /// Pivot rows before column assignment, keyed by lead monomial.
    pivots: FxHashMap<Monomial, Vec<Term>>,
    /// Every monomial that appears; `true` once processed by preprocessing.
    monos: FxHashMap<Monomial, bool>,
    queue: Vec<Monomial>,
}

impl<'a> MacaulayBuilder<'a> {
    fn new(field: PrimeField, order: &'a TermOrder) -> Self {
        MacaulayBuilder { field, order, pivots: FxHashMap::default(), monos: FxHashMap::default(), queue: Vec::new() }
    }

    fn has_pivot(&self, m: &Monomial) -> bool {
        self.pivots.contains_key(m)
    }

    fn note_monomials(&mut self, row: &[Term]) {
        for t in row {
            if let std::collections::hash_map::Entry::Vacant(v) = self.monos.entry(t.m) {
                v.insert(false);
                self.queue.push(t.m);
            }
        }
    }

    fn add_pivot(&mut self, row: Vec<Term>) {
        self.note_monomials(&row);
        let lead = row[0].m;
        self.pivots.insert(lead, row);
    }

    /// Add reducer rows for every monomial divisible by some active lead.
    fn preprocess(&mut self, basis: &[Elem], active: &[bool]) {
        let leads: Vec<(usize, Monomial, usize)> = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| active[*k])
            .map(|(k, e)| (k, e.lm, e.terms.len()))
            .collect();
        while let Some(m) = self.queue.pop() {
            if self.pivots.contains_key(&m) {
                continue;
            }
            let mut best: Option<(usize, usize)> = None;
            for &(k, lm, len) in &leads {
                if lm.divides(&m) && best.is_none_or(|(_, l)| len < l) {
                    best = Some((k, len));
                }
            }
            if let Some((k, _)) = best {
                let row = mul_terms_by(&basis[k].terms, &basis[k].lm.quotient_of(&m));
                self.add_pivot(row);
            }
        }
    }

    /// Reduce `todo` rows against the pivots and, if `chain`, against each
    /// new pivot created from earlier todo rows. Returns the reduced rows
    /// (monic if `normalize`), `None` for rows that became zero.
    fn reduce(mut self, todo: &[Vec<Term>], chain: bool, normalize: bool) -> Vec<Option<Vec<Term>>> {
        debug_assert!(normalize || !chain);
        for r in todo {
            self.note_monomials(r);
        }
        let mut cols: Vec<Monomial> = self.monos.keys().copied().collect();
        let order = self.order;
        cols.sort_unstable_by(|a, b| order.cmp(b, a));
        let index: FxHashMap<Monomial, u32> = cols.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
        let ncols = cols.len();
        let to_sparse = |row: &[Term]| SparseRow {
            cols: row.iter().map(|t| index[&t.m]).collect(),
            vals: row.iter().map(|t| t.c).collect(),
        };
        let mut pivot_of: Vec<Option<SparseRow>> = (0..ncols).map(|_| None).collect();
        for (lead, row) in self.pivots.drain() {
            pivot_of[index[&lead] as usize] = Some(to_sparse(&row));
        }
        let p = self.field.p() as u64;
        let max_adds = (u64::MAX / ((p - 1) * (p - 1)).max(1)).saturating_sub(2).max(1);
        let mut dense = vec![0u64; ncols];
        let mut out = Vec::with_capacity(todo.len());
        for row in todo {
            if row.is_empty() {
                out.push(None);
                continue;
            }
            let sr = to_sparse(row);
            let start = sr.cols[0] as usize;
            for (&c, &v) in sr.cols.iter().zip(&sr.vals) {
                dense[c as usize] = v as u64;
            }
            let mut adds = 0u64;
            let mut res_cols: Vec<u32> = Vec::new();
            let mut res_vals: Vec<u32> = Vec::new();
            for c in start..ncols {
                let v = dense[c] % p;
                dense[c] = 0;
                if v == 0 {
                    continue;
                }
                match &pivot_of[c] {
                    Some(piv) => {
                        if adds >= max_adds {
                            for x in dense[c + 1..].iter_mut() {
                                *x %= p;
                            }
                            adds = 0;
                        }
                        let mult = p - v;
                        for (&cc, &pv) in piv.cols[1..].iter().zip(&piv.vals[1..]) {
                            dense[cc as usize] += mult * pv as u64;
                        }
                        adds += 1;
                    }
                    None => {
                        res_cols.push(c as u32);
                        res_vals.push(v as u32);
                    }
                }
            }
            if res_cols.is_empty() {
                out.push(None);
                continue;
            }
            if normalize {
                let inv = self.field.inv(res_vals[0]).expect("nonzero lead");
                for v in res_vals.iter_mut() {
                    *v = self.field.mul(*v, inv);
                }
            }
            let terms: Vec<Term> =
                res_cols.iter().zip(&res_vals).map(|(&c, &v)| Term { m: cols[c as usize], c: v }).collect();
            if chain {
                let lead = res_cols[0] as usize;
                pivot_of[lead] = Some(SparseRow { cols: res_cols, vals: res_vals });
            }
            out.push(Some(terms));
        }
        out
    }
}

/// Full normal forms of `fs` with respect to `basis` (which need not be a
/// Groebner basis; the result is then some remainder). Every term of the
/// output is divisible by no lead of `basis`. Scale is preserved.
pub(crate) fn normal_forms(field: PrimeField, order: &TermOrder, basis: &[Vec<Term>], fs: &[Vec<Term>]) -> Vec<Vec<Term>> {
    let elems: Vec<Elem> =
        basis.iter().filter(|b| !b.is_empty()).map(|b| Elem { terms: monic(field, b), lm: b[0].m }).collect();
    let active = vec![true; elems.len()];
    let mut mat = MacaulayBuilder::new(field, order);
    for f in fs {
        mat.note_monomials(f);
    }
    mat.preprocess(&elems, &active);
    mat.reduce(fs, false, false).into_iter().map(|r| r.unwrap_or_default()).collect()
}

pub(crate) fn monic(field: PrimeField, terms: &[Term]) -> Vec<Term> {
    match terms.first() {
        None => Vec::new(),
        Some(t) if t.c == 1 => terms.to_vec(),
        Some(t) => {
            let inv = field.inv(t.c).expect("nonzero lead");
            terms.iter().map(|u| Term { m: u.m, c: field.mul(u.c, inv) }).collect()
        }
    }
}
