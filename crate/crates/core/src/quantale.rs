//! Quasi-quantales: a finite lattice with an associative product that is
//! monotone in each argument, plus the battery of product laws.

use crate::bits::{bit, has, mask_iter};
use crate::lattice::{structure_report, FiniteLattice, StructureReport};
use crate::report::{Witness, FINITE_RESIDUE_BANNER};
use serde::Serialize;
use thiserror::Error;

/// Subset quantification is exhaustive up to this carrier size.
pub const SUBSET_QUANTIFY_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantaleError {
    #[error("product table has {got} entries, expected {expected}")]
    BadTable { got: usize, expected: usize },
    #[error("product is not associative: {0}")]
    NotAssociative(Witness),
    #[error("product is not monotone: {0}")]
    NotMonotone(Witness),
    #[error("designated subset B is not closed: {0}")]
    BadSubB(Witness),
    #[error("`{0}` is not a {1} unit of the product")]
    UnitMismatch(String, &'static str),
}

#[derive(Debug, Clone, Default)]
pub struct QqOptions {
    pub expect_left_unit: Option<usize>,
    pub expect_right_unit: Option<usize>,
    pub sub_b: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiQuantale {
    lattice: FiniteLattice,
    product: Vec<usize>,
    left_units: u64,
    right_units: u64,
    one_dominates: bool,
    commutative: bool,
    sub_b: Option<u64>,
}

impl QuasiQuantale {
    /// Validates `product` (row-major, `product[a * n + b] = a·b`) over `lattice`.
    pub fn new(
        lattice: FiniteLattice,
        product: Vec<usize>,
        options: QqOptions,
    ) -> Result<Self, QuantaleError> {
        let n = lattice.len();
        if product.len() != n * n || product.iter().any(|&p| p >= n) {
            return Err(QuantaleError::BadTable {
                got: product.len(),
                expected: n * n,
            });
        }
        let mul = |a: usize, b: usize| product[a * n + b];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                        return Err(QuantaleError::NotAssociative(Witness::new(
                            "(xy)z = x(yz)",
                            vec![x, y, z],
                            lattice.names_of(&[x, y, z]),
                        )));
                    }
                }
            }
        }
        if let Some(w) = monotone_witness(&lattice, &mul) {
            return Err(QuantaleError::NotMonotone(w));
        }
        let left_units = (0..n)
            .filter(|&e| (0..n).all(|a| mul(e, a) == a))
            .fold(0, |m, e| m | bit(e));
        let right_units = (0..n)
            .filter(|&e| (0..n).all(|a| mul(a, e) == a))
            .fold(0, |m, e| m | bit(e));
        if let Some(e) = options.expect_left_unit {
            if !has(left_units, e) {
                return Err(QuantaleError::UnitMismatch(lattice.name(e).into(), "left"));
            }
        }
        if let Some(e) = options.expect_right_unit {
            if !has(right_units, e) {
                return Err(QuantaleError::UnitMismatch(lattice.name(e).into(), "right"));
            }
        }
        let top = lattice.top();
        let one_dominates = (0..n).all(|a| lattice.leq(mul(top, a), a));
        let commutative = (0..n).all(|a| (0..n).all(|b| mul(a, b) == mul(b, a)));
        if let Some(b) = options.sub_b {
            check_sub_b(&lattice, &mul, b)?;
        }
        Ok(QuasiQuantale {
            lattice,
            product,
            left_units,
            right_units,
            one_dominates,
            commutative,
            sub_b: options.sub_b,
        })
    }

    /// The lattice with `∧` as product.
    pub fn with_meet(lattice: FiniteLattice) -> Self {
        let n = lattice.len();
        let product = (0..n * n).map(|i| lattice.meet(i / n, i % n)).collect();
        QuasiQuantale::new(lattice, product, QqOptions::default()).expect("meet is a quasi-quantale product")
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.lattice.len() + b]
    }

    pub fn product_table(&self) -> &[usize] {
        &self.product
    }

    pub fn left_units(&self) -> u64 {
        self.left_units
    }

    pub fn right_units(&self) -> u64 {
        self.right_units
    }

    pub fn left_unit(&self) -> Option<usize> {
        mask_iter(self.left_units).next()
    }

    pub fn right_unit(&self) -> Option<usize> {
        mask_iter(self.right_units).next()
    }

    /// Whether `1a ≤ a` for all `a`.
    pub fn one_dominates(&self) -> bool {
        self.one_dominates
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn sub_b(&self) -> Option<u64> {
        self.sub_b
    }

    /// `B`, defaulting to the whole carrier.
    pub fn b_mask(&self) -> u64 {
        self.sub_b.unwrap_or_else(|| self.lattice.all_mask())
    }

    pub fn with_sub_b(mut self, b: u64) -> Result<Self, QuantaleError> {
        check_sub_b(&self.lattice, &|x, y| self.mul(x, y), b)?;
        self.sub_b = Some(b);
        Ok(self)
    }

    /// Product table as rows of element names.
    pub fn product_rows(&self) -> Vec<Vec<String>> {
        let l = &self.lattice;
        l.elements()
            .map(|a| l.elements().map(|b| l.name(self.mul(a, b)).to_string()).collect())
            .collect()
    }

    /// Whether `(⋁X)a = ⋁{xa}` for every `X` (binary right distributivity
    /// together with `0a = 0`).
    pub fn right_join_law(&self) -> bool {
        right_join_witness(self, true).is_none()
    }
}

fn monotone_witness(l: &FiniteLattice, mul: &impl Fn(usize, usize) -> usize) -> Option<Witness> {
    for x in l.elements() {
        for y in mask_iter(l.up_set(x)) {
            for z in l.elements() {
                if !l.leq(mul(z, x), mul(z, y)) {
                    return Some(Witness::new("x ≤ y ⟹ zx ≤ zy", vec![x, y, z], l.names_of(&[x, y, z])));
                }
                if !l.leq(mul(x, z), mul(y, z)) {
                    return Some(Witness::new("x ≤ y ⟹ xz ≤ yz", vec![x, y, z], l.names_of(&[x, y, z])));
                }
            }
        }
    }
    None
}

fn check_sub_b(l: &FiniteLattice, mul: &impl Fn(usize, usize) -> usize, b: u64) -> Result<(), QuantaleError> {
    if !has(b, l.bottom()) {
        return Err(QuantaleError::BadSubB(Witness::new(
            "empty join 0 ∈ B",
            vec![l.bottom()],
            l.names_of(&[l.bottom()]),
        )));
    }
    for x in mask_iter(b) {
        for y in mask_iter(b) {
            if !has(b, l.join(x, y)) {
                return Err(QuantaleError::BadSubB(Witness::new("x ∨ y ∈ B", vec![x, y], l.names_of(&[x, y]))));
            }
            if !has(b, mul(x, y)) {
                return Err(QuantaleError::BadSubB(Witness::new("xy ∈ B", vec![x, y], l.names_of(&[x, y]))));
            }
        }
    }
    Ok(())
}

fn right_join_witness(q: &QuasiQuantale, with_zero: bool) -> Option<Witness> {
    let l = q.lattice();
    for a in l.elements() {
        if with_zero && q.mul(l.bottom(), a) != l.bottom() {
            return Some(Witness::new("0a = 0", vec![a], l.names_of(&[a])));
        }
        for x in l.elements() {
            for y in l.elements() {
                if q.mul(l.join(x, y), a) != l.join(q.mul(x, a), q.mul(y, a)) {
                    return Some(Witness::new("(x ∨ y)a = xa ∨ ya", vec![x, y, a], l.names_of(&[x, y, a])));
                }
            }
        }
    }
    None
}

fn left_join_witness(q: &QuasiQuantale, with_zero: bool) -> Option<Witness> {
    let l = q.lattice();
    for a in l.elements() {
        if with_zero && q.mul(a, l.bottom()) != l.bottom() {
            return Some(Witness::new("a0 = 0", vec![a], l.names_of(&[a])));
        }
        for x in l.elements() {
            for y in l.elements() {
                if q.mul(a, l.join(x, y)) != l.join(q.mul(a, x), q.mul(a, y)) {
                    return Some(Witness::new("a(x ∨ y) = ax ∨ ay", vec![a, x, y], l.names_of(&[a, x, y])));
                }
            }
        }
    }
    None
}

/// Distributivity of the product over the join of every subset, quantified
/// subset by subset. Returns `(over nonempty subsets, over all subsets)`.
pub fn subset_distributivity(q: &QuasiQuantale) -> Option<(Option<Witness>, Option<Witness>)> {
    let l = q.lattice();
    let n = l.len();
    if n > SUBSET_QUANTIFY_LIMIT {
        return None;
    }
    let count = 1usize << n;
    let mut joins = vec![l.bottom(); count];
    for mask in 1..count {
        let low = mask.trailing_zeros() as usize;
        joins[mask] = l.join(joins[mask & (mask - 1)], low);
    }
    let mut nonempty = None;
    let mut empty = None;
    let mut left = vec![l.bottom(); count];
    let mut right = vec![l.bottom(); count];
    for a in l.elements() {
        for mask in 1..count {
            let low = mask.trailing_zeros() as usize;
            left[mask] = l.join(left[mask & (mask - 1)], q.mul(a, low));
            right[mask] = l.join(right[mask & (mask - 1)], q.mul(low, a));
        }
        for mask in 0..count {
            let bad_left = q.mul(a, joins[mask]) != left[mask];
            let bad_right = q.mul(joins[mask], a) != right[mask];
            if bad_left || bad_right {
                let law = if bad_left { "a(⋁X) = ⋁aX" } else { "(⋁X)a = ⋁Xa" };
                let mut idx = vec![a];
                idx.extend(mask_iter(mask as u64));
                let w = Witness::new(law, idx.clone(), l.names_of(&idx));
                if mask == 0 {
                    empty.get_or_insert(w);
                } else {
                    nonempty.get_or_insert(w);
                }
            }
        }
    }
    let all = nonempty.clone().or(empty);
    Some((nonempty, all))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorCheck {
    /// `xy = 0 ⟺ x1 ∧ y = 0` for all `x, y`.
    pub product_zero_iff: bool,
    /// `x² = 0 ⟹ x = 0` for all `x`.
    pub square_zero_implies_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameMonoidCheck {
    pub quantale_hypothesis: bool,
    /// The lattice is a frame and the product is `∧`.
    pub frame_side: bool,
    /// `1` is a two-sided unit and every element is idempotent.
    pub monoid_side: bool,
    pub product_is_meet: bool,
    pub commutative: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub banner: &'static str,
    pub size: usize,
    pub is_quasi_quantale: bool,
    pub is_quantale: bool,
    pub binary_distributive: bool,
    pub nonempty_join_distributive: Option<bool>,
    pub full_join_distributive: Option<bool>,
    /// Binary distributivity implies distributivity over every nonempty family.
    pub quantale_upgrade: Option<bool>,
    pub right_join_law: bool,
    pub is_unital_left: bool,
    pub is_unital_right: bool,
    pub left_unit: Option<String>,
    pub right_unit: Option<String>,
    pub is_commutative: bool,
    pub satisfies_one_dominates: bool,
    pub holds_monotone: bool,
    /// `xy ≤ y ∧ x1` and `x0 = 0`; `None` when `1a ≤ a` fails.
    pub holds_one_dominates_bounds: Option<bool>,
    /// `x² ≤ x1`, `x² ≤ x`, `(x∧y)² ≤ xy`, `(x1∧y)² ≤ xy`; `None` when `1a ≤ a` fails.
    pub holds_square: Option<bool>,
    pub zero_divisor: ZeroDivisorCheck,
    pub holds_zero_divisor: bool,
    pub frame_monoid: FrameMonoidCheck,
    pub holds_frame_iff_idempotent_monoid: bool,
    /// Commutative with unit `1` implies the product is `∧`; `None` when the
    /// hypotheses fail.
    pub holds_product_is_meet: Option<bool>,
    pub lattice: StructureReport,
    pub witnesses: Vec<Witness>,
}

impl LawReport {
    pub fn witness(&self, law_prefix: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.law.starts_with(law_prefix))
    }
}

pub fn law_report(q: &QuasiQuantale) -> LawReport {
    let l = q.lattice();
    let top = l.top();
    let bottom = l.bottom();
    let mut witnesses = Vec::new();
    let mut record = |w: Witness| witnesses.push(w);
    let pair = |law: &str, a: usize, b: usize| Witness::new(law, vec![a, b], l.names_of(&[a, b]));
    let triple = |law: &str, a: usize, b: usize, c: usize| Witness::new(law, vec![a, b, c], l.names_of(&[a, b, c]));

    // Monotonicity consequences.
    let mut holds_monotone = true;
    'mono: for x in l.elements() {
        for y in mask_iter(l.up_set(x)) {
            for z in l.elements() {
                if !l.leq(q.mul(z, x), q.mul(z, y)) || !l.leq(q.mul(x, z), q.mul(y, z)) {
                    record(triple("x ≤ y ⟹ zx ≤ zy and xz ≤ yz", x, y, z));
                    holds_monotone = false;
                    break 'mono;
                }
                for v in mask_iter(l.up_set(z)) {
                    if !l.leq(q.mul(x, z), q.mul(y, v)) {
                        record(Witness::new("x ≤ y, z ≤ v ⟹ xz ≤ yv", vec![x, y, z, v], l.names_of(&[x, y, z, v])));
                        holds_monotone = false;
                        break 'mono;
                    }
                }
            }
        }
    }
    if holds_monotone {
        'sub: for x in l.elements() {
            for y in l.elements() {
                for z in l.elements() {
                    let yz = l.join(y, z);
                    if !l.leq(l.join(q.mul(x, y), q.mul(x, z)), q.mul(x, yz))
                        || !l.leq(l.join(q.mul(y, x), q.mul(z, x)), q.mul(yz, x))
                    {
                        record(triple("xy ∨ xz ≤ x(y ∨ z)", x, y, z));
                        holds_monotone = false;
                        break 'sub;
                    }
                }
            }
        }
    }

    let one_dom = q.one_dominates();
    if !one_dom {
        let a = l.elements().find(|&a| !l.leq(q.mul(top, a), a)).unwrap();
        record(Witness::new("1a ≤ a", vec![a], l.names_of(&[a])));
    }

    let mut holds_one_dominates_bounds = None;
    let mut holds_square = None;
    if one_dom {
        let mut bounds = true;
        'b: for x in l.elements() {
            if q.mul(x, bottom) != bottom {
                record(Witness::new("x0 = 0", vec![x], l.names_of(&[x])));
                bounds = false;
                break;
            }
            for y in l.elements() {
                if !l.leq(q.mul(x, y), l.meet(y, q.mul(x, top))) {
                    record(pair("xy ≤ y ∧ x1", x, y));
                    bounds = false;
                    break 'b;
                }
            }
        }
        holds_one_dominates_bounds = Some(bounds);

        let mut square = true;
        's: for x in l.elements() {
            let xx = q.mul(x, x);
            if !l.leq(xx, q.mul(x, top)) || !l.leq(xx, x) {
                record(Witness::new("x² ≤ x1 and x² ≤ x", vec![x], l.names_of(&[x])));
                square = false;
                break;
            }
            for y in l.elements() {
                let m = l.meet(x, y);
                let m1 = l.meet(q.mul(x, top), y);
                let xy = q.mul(x, y);
                if !l.leq(q.mul(m, m), xy) {
                    record(pair("(x∧y)² ≤ xy", x, y));
                    square = false;
                    break 's;
                }
                if !l.leq(q.mul(m1, m1), xy) {
                    record(pair("(x1∧y)² ≤ xy", x, y));
                    square = false;
                    break 's;
                }
            }
        }
        holds_square = Some(square);
    }

    // Zero divisors.
    let zero_iff_pair = l.elements().find_map(|x| {
        l.elements()
            .find(|&y| (q.mul(x, y) == bottom) != (l.meet(q.mul(x, top), y) == bottom))
            .map(|y| (x, y))
    });
    let square_zero = l.elements().find(|&x| q.mul(x, x) == bottom && x != bottom);
    let zero_divisor = ZeroDivisorCheck {
        product_zero_iff: zero_iff_pair.is_none(),
        square_zero_implies_zero: square_zero.is_none(),
    };
    if let Some((x, y)) = zero_iff_pair {
        record(pair("xy = 0 ⟺ x1 ∧ y = 0", x, y));
    }
    if let Some(x) = square_zero {
        record(Witness::new("x² = 0 ⟹ x = 0", vec![x], l.names_of(&[x])));
    }
    let holds_zero_divisor = if one_dom {
        zero_divisor.product_zero_iff == zero_divisor.square_zero_implies_zero
    } else {
        !zero_divisor.product_zero_iff || zero_divisor.square_zero_implies_zero
    };
    if !holds_zero_divisor {
        let x = square_zero.unwrap_or(bottom);
        record(Witness::new("zero-divisor equivalence", vec![x], l.names_of(&[x])));
    }

    // Quantale flags.
    let left = left_join_witness(q, true);
    let right = right_join_witness(q, true);
    let right_join_law = right.is_none();
    let binary_distributive = left_join_witness(q, false).is_none() && right_join_witness(q, false).is_none();
    let is_quantale = left.is_none() && right.is_none();
    if let Some(w) = left.clone().or(right.clone()) {
        record(w);
    }
    let subsets = subset_distributivity(q);
    let (nonempty_join_distributive, full_join_distributive) = match &subsets {
        Some((ne, all)) => (Some(ne.is_none()), Some(all.is_none())),
        None => (None, None),
    };
    let quantale_upgrade = nonempty_join_distributive.map(|ne| !binary_distributive || ne);
    if quantale_upgrade == Some(false) {
        if let Some((Some(w), _)) = subsets.clone() {
            record(Witness::new(format!("binary distributivity ⟹ {}", w.law), w.indices, w.names));
        }
    }

    // Frame versus unital idempotent quantale.
    let meet_pair = l.elements().find_map(|x| l.elements().find(|&y| q.mul(x, y) != l.meet(x, y)).map(|y| (x, y)));
    let product_is_meet = meet_pair.is_none();
    let lattice = structure_report(l);
    let top_unit = has(q.left_units(), top) && has(q.right_units(), top);
    let non_idem = l.elements().find(|&x| q.mul(x, x) != x);
    let frame_monoid = FrameMonoidCheck {
        quantale_hypothesis: is_quantale,
        frame_side: lattice.is_frame && product_is_meet,
        monoid_side: top_unit && non_idem.is_none(),
        product_is_meet,
        commutative: q.is_commutative(),
    };
    let holds_frame_iff_idempotent_monoid =
        !frame_monoid.quantale_hypothesis || frame_monoid.frame_side == frame_monoid.monoid_side;
    if !holds_frame_iff_idempotent_monoid {
        let w = match (meet_pair, non_idem) {
            (Some((x, y)), _) => pair("frame ⟺ unital idempotent: xy ≠ x ∧ y", x, y),
            (None, Some(x)) => Witness::new("frame ⟺ unital idempotent: x² ≠ x", vec![x], l.names_of(&[x])),
            (None, None) => Witness::new("frame ⟺ unital idempotent: lattice", vec![top], l.names_of(&[top])),
        };
        record(w);
    }

    let holds_product_is_meet = (q.is_commutative() && top_unit).then_some(product_is_meet);
    if holds_product_is_meet == Some(false) {
        let (x, y) = meet_pair.unwrap();
        record(pair("commutative with e = 1 ⟹ xy = x ∧ y", x, y));
    }

    LawReport {
        banner: FINITE_RESIDUE_BANNER,
        size: l.len(),
        is_quasi_quantale: true,
        is_quantale,
        binary_distributive,
        nonempty_join_distributive,
        full_join_distributive,
        quantale_upgrade,
        right_join_law,
        is_unital_left: q.left_unit().is_some(),
        is_unital_right: q.right_unit().is_some(),
        left_unit: q.left_unit().map(|e| l.name(e).to_string()),
        right_unit: q.right_unit().map(|e| l.name(e).to_string()),
        is_commutative: q.is_commutative(),
        satisfies_one_dominates: one_dom,
        holds_monotone,
        holds_one_dominates_bounds,
        holds_square,
        zero_divisor,
        holds_zero_divisor,
        frame_monoid,
        holds_frame_iff_idempotent_monoid,
        holds_product_is_meet,
        lattice,
        witnesses,
    }
}
