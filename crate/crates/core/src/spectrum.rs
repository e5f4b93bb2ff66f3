//! Primes relative to a subset `B`, the spectrum topology and the closure
//! `μ = U_* ∘ U` on `B`.

use crate::bits::{bit, has, mask_iter};
use crate::inflator::{Carrier, Inflator};
use crate::lattice::{escape, FiniteLattice, LatticeError};
use crate::quantale::QuasiQuantale;
use crate::report::Witness;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("standing hypothesis fails: {0}")]
    HypothesisFailure(Witness),
    #[error("spectrum law fails: {0}")]
    LawFailure(Witness),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn witness(l: &FiniteLattice, law: &str, idx: &[usize]) -> Witness {
    Witness::new(law, idx.to_vec(), l.names_of(idx))
}

fn check_hypotheses(q: &QuasiQuantale) -> Result<u64, SpectrumError> {
    let l = q.lattice();
    let b = q.b_mask();
    let (bottom, top) = (l.bottom(), l.top());
    for (e, law) in [(bottom, "0 ∈ B"), (top, "1 ∈ B")] {
        if !has(b, e) {
            return Err(SpectrumError::HypothesisFailure(witness(l, law, &[e])));
        }
    }
    for x in mask_iter(b) {
        if !l.leq(q.mul(top, x), x) {
            return Err(SpectrumError::HypothesisFailure(witness(l, "1b ≤ b", &[x])));
        }
        if !l.leq(q.mul(x, top), x) {
            return Err(SpectrumError::HypothesisFailure(witness(l, "b1 ≤ b", &[x])));
        }
    }
    Ok(b)
}

/// Elements `p ≠ 1` with `ab ≤ p ⟹ a ≤ p or b ≤ p` for `a, b ∈ B`.
pub fn relative_primes(q: &QuasiQuantale) -> Result<u64, SpectrumError> {
    let b = check_hypotheses(q)?;
    let l = q.lattice();
    for x in mask_iter(b) {
        for y in mask_iter(b) {
            if !l.leq(q.mul(x, y), l.meet(x, y)) {
                return Err(SpectrumError::LawFailure(witness(l, "ab ≤ a ∧ b", &[x, y])));
            }
        }
    }
    let mut points = 0;
    for p in l.elements().filter(|&p| p != l.top()) {
        let prime = mask_iter(b).all(|x| {
            mask_iter(b).all(|y| !l.leq(q.mul(x, y), p) || l.leq(x, p) || l.leq(y, p))
        });
        if prime {
            points |= bit(p);
        }
    }
    for p in mask_iter(points) {
        for x in mask_iter(b) {
            for y in mask_iter(b) {
                if l.leq(q.mul(x, y), p) != (l.leq(x, p) || l.leq(y, p)) {
                    return Err(SpectrumError::LawFailure(witness(l, "ab ≤ p ⟺ a ≤ p or b ≤ p", &[x, y, p])));
                }
            }
        }
    }
    Ok(points)
}

#[derive(Debug, Clone)]
pub struct SpectrumSpace<'a> {
    carrier: &'a QuasiQuantale,
    b: u64,
    points: u64,
    /// `U(b)` indexed by carrier element; zero outside `B`.
    u: Vec<u64>,
    opens: Vec<u64>,
    frame: FiniteLattice,
}

impl<'a> SpectrumSpace<'a> {
    pub fn carrier(&self) -> &'a QuasiQuantale {
        self.carrier
    }

    pub fn b_mask(&self) -> u64 {
        self.b
    }

    pub fn points(&self) -> u64 {
        self.points
    }

    pub fn u(&self, b: usize) -> u64 {
        self.u[b]
    }

    pub fn v(&self, b: usize) -> u64 {
        self.points & !self.u[b]
    }

    /// Distinct open sets, sorted numerically.
    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    /// The opens ordered by inclusion; element `i` is `opens()[i]`.
    pub fn open_frame(&self) -> &FiniteLattice {
        &self.frame
    }

    pub fn point_names(&self) -> Vec<String> {
        let l = self.carrier.lattice();
        mask_iter(self.points).map(|p| l.name(p).to_string()).collect()
    }

    pub fn dot(&self, title: &str) -> String {
        let l = self.carrier.lattice();
        let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n  subgraph cluster_points {{\n    label=\"points\";\n", escape(title));
        for p in mask_iter(self.points) {
            out.push_str(&format!("    p{} [label=\"{}\", shape=box];\n", p, escape(l.name(p))));
        }
        out.push_str("  }\n");
        for x in self.frame.elements() {
            out.push_str(&format!("  o{} [label=\"{}\"];\n", x, escape(self.frame.name(x))));
        }
        for (lo, hi) in self.frame.covers() {
            out.push_str(&format!("  o{lo} -> o{hi};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn point_set_label(l: &FiniteLattice, set: u64) -> String {
    let names: Vec<&str> = mask_iter(set).map(|i| l.name(i)).collect();
    format!("{{{}}}", names.join(","))
}

pub fn topology(q: &QuasiQuantale) -> Result<SpectrumSpace<'_>, SpectrumError> {
    let points = relative_primes(q)?;
    let b = q.b_mask();
    let l = q.lattice();
    let mut u = vec![0u64; l.len()];
    for x in mask_iter(b) {
        u[x] = mask_iter(points).filter(|&p| !l.leq(x, p)).fold(0, |m, p| m | bit(p));
    }
    let law = |name: &str, idx: &[usize]| Err(SpectrumError::LawFailure(witness(l, name, idx)));
    if u[l.bottom()] != 0 {
        return law("U(0) = ∅", &[l.bottom()]);
    }
    if u[l.top()] != points {
        return law("U(1) = Spec", &[l.top()]);
    }
    for x in mask_iter(b) {
        for y in mask_iter(b) {
            if u[l.join(x, y)] != u[x] | u[y] {
                return law("U(a ∨ b) = U(a) ∪ U(b)", &[x, y]);
            }
            if u[q.mul(x, y)] != u[x] & u[y] {
                return law("U(ab) = U(a) ∩ U(b)", &[x, y]);
            }
        }
    }
    let mut opens: Vec<u64> = mask_iter(b).map(|x| u[x]).collect();
    opens.sort_unstable();
    opens.dedup();
    for &s in &opens {
        for &t in &opens {
            if opens.binary_search(&(s | t)).is_err() || opens.binary_search(&(s & t)).is_err() {
                return Err(SpectrumError::LawFailure(Witness::new(
                    "opens closed under ∪ and ∩",
                    vec![],
                    vec![point_set_label(l, s), point_set_label(l, t)],
                )));
            }
        }
    }
    let names = opens.iter().map(|&s| point_set_label(l, s)).collect();
    let frame = FiniteLattice::from_order(names, |i, j| opens[i] & !opens[j] == 0)?;
    Ok(SpectrumSpace {
        carrier: q,
        b,
        points,
        u,
        opens,
        frame,
    })
}

#[derive(Debug, Clone)]
pub struct MuNucleus<'s, 'a> {
    space: &'s SpectrumSpace<'a>,
    /// `μ(b)` for `b ∈ B`; `usize::MAX` elsewhere.
    table: Vec<usize>,
}

impl<'s, 'a> MuNucleus<'s, 'a> {
    pub fn space(&self) -> &'s SpectrumSpace<'a> {
        self.space
    }

    pub fn apply(&self, b: usize) -> Option<usize> {
        self.table.get(b).copied().filter(|&v| v != usize::MAX)
    }

    /// Fixed points of `μ` in `B`.
    pub fn fixed_mask(&self) -> u64 {
        mask_iter(self.space.b).filter(|&x| self.table[x] == x).fold(0, |m, x| m | bit(x))
    }

    /// `μ` as an inflator on the whole carrier, available when `B = A`.
    pub fn as_inflator(&self) -> Option<Inflator<'a>> {
        let q = self.space.carrier;
        if self.space.b != q.lattice().all_mask() {
            return None;
        }
        Some(Inflator::new(Carrier::Quantale(q), self.table.clone()).expect("μ is an inflator"))
    }
}

/// `μ(b) = ⋁{c ∈ B : U(c) ⊆ U(b)}` with every closure and pre-nucleus law
/// re-checked on `B`.
pub fn mu<'s, 'a>(space: &'s SpectrumSpace<'a>) -> Result<MuNucleus<'s, 'a>, SpectrumError> {
    let q = space.carrier;
    let l = q.lattice();
    let b = space.b;
    let mut table = vec![usize::MAX; l.len()];
    for x in mask_iter(b) {
        let below = mask_iter(b).filter(|&c| space.u[c] & !space.u[x] == 0);
        table[x] = l.join_all(below);
    }
    let fail = |name: &str, idx: &[usize]| Err(SpectrumError::LawFailure(witness(l, name, idx)));
    for x in mask_iter(b) {
        let m = table[x];
        if !l.leq(x, m) {
            return fail("b ≤ μ(b)", &[x]);
        }
        if table[m] != m {
            return fail("μ(μ(b)) = μ(b)", &[x]);
        }
        if space.u[m] != space.u[x] {
            return fail("U(μ(b)) = U(b)", &[x]);
        }
        let v_meet = l.meet_mask(space.v(x));
        if !l.leq(m, v_meet) {
            return fail("μ(b) ≤ ⋀V(b)", &[x]);
        }
        if let Some(c) = mask_iter(b).find(|&c| l.leq(c, v_meet) && !l.leq(c, m)) {
            return fail("c ≤ ⋀V(b) ⟹ c ≤ μ(b)", &[x, c]);
        }
        for y in mask_iter(b) {
            if l.leq(x, y) && !l.leq(m, table[y]) {
                return fail("a ≤ b ⟹ μ(a) ≤ μ(b)", &[x, y]);
            }
            let prod = table[q.mul(x, y)];
            if l.meet(m, table[y]) != prod {
                return fail("μ(a) ∧ μ(b) = μ(ab)", &[x, y]);
            }
            let meet = l.meet(x, y);
            if has(b, meet) {
                if !l.leq(prod, table[meet]) {
                    return fail("μ(ab) ≤ μ(a ∧ b)", &[x, y]);
                }
                if table[meet] != l.meet(m, table[y]) {
                    return fail("μ(a ∧ b) = μ(a) ∧ μ(b)", &[x, y]);
                }
            }
        }
    }
    Ok(MuNucleus { space, table })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub size: usize,
    pub relative: bool,
    pub b: Vec<String>,
    pub points: Vec<String>,
    pub opens: Vec<String>,
    pub open_frame_is_frame: bool,
    pub mu: Vec<(String, String)>,
    pub mu_fixed: Vec<String>,
}

pub fn spectrum_report(space: &SpectrumSpace<'_>, mu: &MuNucleus<'_, '_>) -> SpectrumReport {
    let l = space.carrier.lattice();
    let names = |m: u64| mask_iter(m).map(|i| l.name(i).to_string()).collect::<Vec<_>>();
    SpectrumReport {
        size: l.len(),
        relative: space.b != l.all_mask(),
        b: names(space.b),
        points: space.point_names(),
        opens: space.opens.iter().map(|&s| point_set_label(l, s)).collect(),
        open_frame_is_frame: crate::lattice::structure_report(&space.frame).is_frame,
        mu: mask_iter(space.b)
            .map(|x| (l.name(x).to_string(), l.name(mu.table[x]).to_string()))
            .collect(),
        mu_fixed: names(mu.fixed_mask()),
    }
}
