//! Finite bounded lattices on indexed elements.
//!
//! Elements are indices `0..n` with opaque names. The order is stored as
//! up-set and down-set bitmasks and meet/join are precomputed dense tables,
//! so every law check below is a plain exhaustive loop.

use crate::bits::{bit, full_mask, has, mask_iter};
use crate::report::{Witness, FINITE_RESIDUE_BANNER};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

/// Hard limit on the number of elements of a [`FiniteLattice`].
pub const MAX_LATTICE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice has {0} elements; the limit is {MAX_LATTICE}")]
    TooLarge(usize),
    #[error("element list is empty")]
    Empty,
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("not a partial order: `{0}` and `{1}` lie below each other")]
    NotAPartialOrder(String, String),
    #[error("order has no {0} element")]
    NoBounds(&'static str),
    #[error("not a lattice: `{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    up: Vec<u64>,
    down: Vec<u64>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from `(lo, hi)` index pairs; the pairs may be covers or
    /// any generating relation and are closed reflexively and transitively.
    pub fn from_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let n = names.len();
        check_names(&names)?;
        let mut up: Vec<u64> = (0..n).map(bit).collect();
        for &(lo, hi) in pairs {
            up[lo] |= bit(hi);
        }
        // Warshall closure on bitsets.
        for k in 0..n {
            for i in 0..n {
                if has(up[i], k) {
                    up[i] |= up[k];
                }
            }
        }
        Self::from_up_sets(names, up)
    }

    /// Builds a lattice from an order predicate that must already be a
    /// reflexive, transitive relation.
    pub fn from_order(
        names: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        check_names(&names)?;
        let up = (0..n)
            .map(|i| (0..n).filter(|&j| i == j || leq(i, j)).fold(0, |m, j| m | bit(j)))
            .collect();
        Self::from_up_sets(names, up)
    }

    /// Convenience constructor from element names and name pairs.
    pub fn from_named(names: &[&str], pairs: &[(&str, &str)]) -> Result<Self, LatticeError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for (lo, hi) in pairs {
            let l = *index.get(lo).ok_or_else(|| LatticeError::UnknownElement(lo.to_string()))?;
            let h = *index.get(hi).ok_or_else(|| LatticeError::UnknownElement(hi.to_string()))?;
            idx_pairs.push((l, h));
        }
        Self::from_pairs(names, &idx_pairs)
    }

    /// The chain `names[0] < names[1] < ...`.
    pub fn chain(names: &[&str]) -> Self {
        let pairs: Vec<(usize, usize)> = (1..names.len()).map(|i| (i - 1, i)).collect();
        Self::from_pairs(names.iter().map(|s| s.to_string()).collect(), &pairs)
            .expect("a chain is a lattice")
    }

    fn from_up_sets(names: Vec<String>, up: Vec<u64>) -> Result<Self, LatticeError> {
        let n = names.len();
        let mut down = vec![0u64; n];
        for (i, &u) in up.iter().enumerate() {
            for j in mask_iter(u) {
                down[j] |= bit(i);
            }
        }
        for i in 0..n {
            for j in mask_iter(up[i] & down[i]) {
                if j != i {
                    return Err(LatticeError::NotAPartialOrder(
                        names[i.min(j)].clone(),
                        names[i.max(j)].clone(),
                    ));
                }
            }
        }
        let all = full_mask(n);
        let bottom = (0..n).find(|&i| up[i] == all).ok_or(LatticeError::NoBounds("bottom"))?;
        let top = (0..n).find(|&i| down[i] == all).ok_or(LatticeError::NoBounds("top"))?;

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let lower = down[x] & down[y];
                let m = mask_iter(lower)
                    .find(|&g| down[g] & lower == lower)
                    .ok_or_else(|| {
                        LatticeError::NotALattice(names[x].clone(), names[y].clone(), "meet")
                    })?;
                let upper = up[x] & up[y];
                let j = mask_iter(upper)
                    .find(|&g| up[g] & upper == upper)
                    .ok_or_else(|| {
                        LatticeError::NotALattice(names[x].clone(), names[y].clone(), "join")
                    })?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        Ok(FiniteLattice {
            names,
            up,
            down,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names_of(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.names[i].clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn all_mask(&self) -> u64 {
        full_mask(self.len())
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        has(self.up[x], y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn up_set(&self, x: usize) -> u64 {
        self.up[x]
    }

    pub fn down_set(&self, x: usize) -> u64 {
        self.down[x]
    }

    /// Join of a subset; the empty join is the bottom.
    pub fn join_mask(&self, mask: u64) -> usize {
        mask_iter(mask).fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a subset; the empty meet is the top.
    pub fn meet_mask(&self, mask: u64) -> usize {
        mask_iter(mask).fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Covering pairs `(lo, hi)` in lexicographic index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.elements() {
            let strictly_above = self.up[x] & !bit(x);
            for y in mask_iter(strictly_above) {
                let between = strictly_above & self.down[y] & !bit(y);
                if between == 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Elements sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&x| (self.down[x].count_ones(), x));
        order
    }

    /// Largest `x` with `x ∧ b ≤ a`, if it exists.
    pub fn implication(&self, a: usize, b: usize) -> Option<usize> {
        let candidates = self
            .elements()
            .filter(|&x| self.leq(self.meet(x, b), a))
            .fold(0u64, |m, x| m | bit(x));
        let j = self.join_mask(candidates);
        has(candidates, j).then_some(j)
    }

    /// Largest `x` with `x ∧ a = 0`, if it exists.
    pub fn pseudocomplement(&self, a: usize) -> Option<usize> {
        self.implication(self.bottom, a)
    }

    pub fn complement_exists(&self, a: usize) -> bool {
        self.elements()
            .any(|x| self.meet(x, a) == self.bottom && self.join(x, a) == self.top)
    }

    /// The subset `mask` with the inherited order, if that is a lattice.
    /// Returns the lattice and the map from new indices to old ones.
    pub fn induced(&self, mask: u64) -> Result<(FiniteLattice, Vec<usize>), LatticeError> {
        let members: Vec<usize> = mask_iter(mask).collect();
        let names = members.iter().map(|&i| self.names[i].clone()).collect();
        let lat = FiniteLattice::from_order(names, |a, b| self.leq(members[a], members[b]))?;
        Ok((lat, members))
    }

    /// Graph-description text of the covering relation.
    pub fn hasse_dot(&self, title: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(title));
        for x in self.elements() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", x, escape(&self.names[x])));
        }
        for (lo, hi) in self.covers() {
            out.push_str(&format!("  n{lo} -> n{hi};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn check_names(names: &[String]) -> Result<(), LatticeError> {
    if names.is_empty() {
        return Err(LatticeError::Empty);
    }
    if names.len() > MAX_LATTICE {
        return Err(LatticeError::TooLarge(names.len()));
    }
    let mut seen = HashMap::new();
    for s in names {
        if seen.insert(s.as_str(), ()).is_some() {
            return Err(LatticeError::DuplicateElement(s.clone()));
        }
    }
    Ok(())
}

/// Structural predicates of a finite lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub banner: &'static str,
    pub size: usize,
    pub is_modular: bool,
    pub is_distributive: bool,
    pub is_frame: bool,
    pub is_boolean: bool,
    /// Rows indexed by `a`, columns by `b`: the largest `x` with `x ∧ b ≤ a`.
    pub implication_table: Option<Vec<Vec<String>>>,
    #[serde(skip)]
    pub implication: Option<Vec<usize>>,
    pub witnesses: Vec<Witness>,
}

impl StructureReport {
    /// `(a ≻ b)`, defined when the lattice is a frame.
    pub fn implies(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.size;
        self.implication.as_ref().map(|t| t[a * n + b])
    }

    /// Pseudocomplement `¬a = (0 ≻ a)` on a frame.
    pub fn negation(&self, lattice: &FiniteLattice, a: usize) -> Option<usize> {
        self.implies(lattice.bottom(), a)
    }
}

/// First violation of the modular law `a ≤ b ⟹ (a ∨ c) ∧ b = a ∨ (c ∧ b)`.
pub fn modular_witness(l: &FiniteLattice) -> Option<(usize, usize, usize)> {
    for a in l.elements() {
        for b in mask_iter(l.up_set(a)) {
            for c in l.elements() {
                if l.meet(l.join(a, c), b) != l.join(a, l.meet(c, b)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// First violation of `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
pub fn distributive_witness(l: &FiniteLattice) -> Option<(usize, usize, usize)> {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn structure_report(l: &FiniteLattice) -> StructureReport {
    let mut witnesses = Vec::new();
    let modular = modular_witness(l);
    if let Some((a, b, c)) = modular {
        witnesses.push(Witness::new("modular", vec![a, b, c], l.names_of(&[a, b, c])));
    }
    let distributive = distributive_witness(l);
    if let Some((x, y, z)) = distributive {
        witnesses.push(Witness::new("distributive", vec![x, y, z], l.names_of(&[x, y, z])));
    }
    let is_distributive = distributive.is_none();
    // Finite lattices are complete, so frame = distributive.
    let is_frame = is_distributive;
    let (implication, implication_table) = if is_frame {
        let n = l.len();
        let mut t = vec![0; n * n];
        for a in l.elements() {
            for b in l.elements() {
                t[a * n + b] = l.implication(a, b).expect("distributive lattices have implication");
            }
        }
        let rows = (0..n)
            .map(|a| (0..n).map(|b| l.name(t[a * n + b]).to_string()).collect())
            .collect();
        (Some(t), Some(rows))
    } else {
        (None, None)
    };
    let is_boolean = is_distributive && l.elements().all(|a| l.complement_exists(a));
    if is_distributive && !is_boolean {
        let a = l.elements().find(|&a| !l.complement_exists(a)).unwrap();
        witnesses.push(Witness::new("complemented", vec![a], l.names_of(&[a])));
    }
    StructureReport {
        banner: FINITE_RESIDUE_BANNER,
        size: l.len(),
        is_modular: modular.is_none(),
        is_distributive,
        is_frame,
        is_boolean,
        implication_table,
        implication,
        witnesses,
    }
}

/// Checks that `map` (indices of `a` to indices of `b`) is an order
/// isomorphism.
pub fn is_order_isomorphism(a: &FiniteLattice, b: &FiniteLattice, map: &[usize]) -> bool {
    if a.len() != b.len() || map.len() != a.len() {
        return false;
    }
    let image = map.iter().fold(0u64, |m, &i| m | bit(i));
    if image != b.all_mask() {
        return false;
    }
    a.elements()
        .all(|x| a.elements().all(|y| a.leq(x, y) == b.leq(map[x], map[y])))
}
