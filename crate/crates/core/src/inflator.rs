//! Inflators on a finite lattice or quasi-quantale: classification, the
//! pointwise algebra, the closure `d^∞`, quotients and nucleus families.

use crate::bits::{bit, has, mask_iter};
use crate::lattice::{modular_witness, structure_report, FiniteLattice, LatticeError, StructureReport};
use crate::quantale::{QqOptions, QuantaleError, QuasiQuantale};
use crate::report::Witness;
use serde::Serialize;
use thiserror::Error;

/// Default carrier-size cap for the nucleus enumerations.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;
/// Hard limit on `--max-size`; fixed-set candidates number `2^(n-1)`.
pub const MAX_ENUMERATION_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InflatorError {
    #[error("map table has {got} entries, expected {expected}")]
    BadTable { got: usize, expected: usize },
    #[error("map is not inflationary: {0}")]
    NotInflationary(Witness),
    #[error("map is not monotone: {0}")]
    NotMonotone(Witness),
    #[error("flag `{0}` needs a product but the carrier is a bare lattice")]
    NeedsProduct(&'static str),
    #[error("inflators live on different carriers")]
    CarrierMismatch,
    #[error("not a nucleus: {0}")]
    NotNucleus(Witness),
    #[error("not a contextual nucleus: {0}")]
    NotContextualNucleus(Witness),
    #[error("carrier has {size} elements, enumeration cap is {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("inflator algebra sanity check failed: {0}")]
    SanityCheck(Witness),
    #[error("quotient is not a quasi-quantale: {0}")]
    Quotient(#[from] QuantaleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// What an inflator acts on.
#[derive(Debug, Clone, Copy)]
pub enum Carrier<'a> {
    Lattice(&'a FiniteLattice),
    Quantale(&'a QuasiQuantale),
}

impl<'a> Carrier<'a> {
    pub fn lattice(&self) -> &'a FiniteLattice {
        match self {
            Carrier::Lattice(l) => l,
            Carrier::Quantale(q) => q.lattice(),
        }
    }

    pub fn quantale(&self) -> Option<&'a QuasiQuantale> {
        match self {
            Carrier::Lattice(_) => None,
            Carrier::Quantale(q) => Some(q),
        }
    }

    fn same(&self, other: &Carrier<'_>) -> bool {
        std::ptr::eq(self.lattice(), other.lattice())
    }
}

#[derive(Debug, Clone)]
pub struct Inflator<'a> {
    carrier: Carrier<'a>,
    map: Vec<usize>,
}

impl PartialEq for Inflator<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.carrier.same(&other.carrier) && self.map == other.map
    }
}

impl Eq for Inflator<'_> {}

impl<'a> Inflator<'a> {
    pub fn new(carrier: Carrier<'a>, map: Vec<usize>) -> Result<Self, InflatorError> {
        let l = carrier.lattice();
        let n = l.len();
        if map.len() != n || map.iter().any(|&v| v >= n) {
            return Err(InflatorError::BadTable {
                got: map.len(),
                expected: n,
            });
        }
        if let Some(x) = l.elements().find(|&x| !l.leq(x, map[x])) {
            return Err(InflatorError::NotInflationary(Witness::new("x ≤ d(x)", vec![x], l.names_of(&[x]))));
        }
        for x in l.elements() {
            if let Some(y) = mask_iter(l.up_set(x)).find(|&y| !l.leq(map[x], map[y])) {
                return Err(InflatorError::NotMonotone(Witness::new(
                    "x ≤ y ⟹ d(x) ≤ d(y)",
                    vec![x, y],
                    l.names_of(&[x, y]),
                )));
            }
        }
        Ok(Inflator { carrier, map })
    }

    /// Builds the map from element names, one image per carrier element.
    pub fn from_names(carrier: Carrier<'a>, images: &[&str]) -> Result<Self, InflatorError> {
        let l = carrier.lattice();
        let map = images
            .iter()
            .map(|s| l.index_of(s).ok_or_else(|| LatticeError::UnknownElement(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(carrier, map)
    }

    pub fn identity(carrier: Carrier<'a>) -> Self {
        let map = carrier.lattice().elements().collect();
        Inflator { carrier, map }
    }

    pub fn constant_top(carrier: Carrier<'a>) -> Self {
        let l = carrier.lattice();
        Inflator {
            carrier,
            map: vec![l.top(); l.len()],
        }
    }

    /// The closure `a ↦ ⋀{s ∈ S : a ≤ s}` of a fixed set `S`.
    pub fn closure_of_set(carrier: Carrier<'a>, fixed: u64) -> Self {
        let l = carrier.lattice();
        let map = l.elements().map(|a| l.meet_mask(fixed & l.up_set(a))).collect();
        Inflator { carrier, map }
    }

    pub fn carrier(&self) -> Carrier<'a> {
        self.carrier
    }

    pub fn lattice(&self) -> &'a FiniteLattice {
        self.carrier.lattice()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn table_names(&self) -> Vec<String> {
        self.map.iter().map(|&v| self.lattice().name(v).to_string()).collect()
    }

    /// Fixed points as a bitmask.
    pub fn fixed_mask(&self) -> u64 {
        self.lattice().elements().filter(|&x| self.map[x] == x).fold(0, |m, x| m | bit(x))
    }

    /// Pointwise order.
    pub fn leq(&self, other: &Inflator<'_>) -> bool {
        let l = self.lattice();
        l.elements().all(|x| l.leq(self.map[x], other.map[x]))
    }

    pub fn is_idempotent(&self) -> bool {
        self.lattice().elements().all(|x| self.map[self.map[x]] == self.map[x])
    }

    fn pointwise(&self, other: &Inflator<'_>, f: impl Fn(usize, usize) -> usize) -> Inflator<'a> {
        let map = self.lattice().elements().map(|x| f(self.map[x], other.map[x])).collect();
        Inflator {
            carrier: self.carrier,
            map,
        }
    }

    /// `self ∘ other`.
    fn compose_raw(&self, other: &Inflator<'_>) -> Inflator<'a> {
        let map = other.map.iter().map(|&y| self.map[y]).collect();
        Inflator {
            carrier: self.carrier,
            map,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Stable,
    PreNucleusIdiom,
    ContextualStable,
    PreMultiplicative,
    Multiplicative,
    ContextualPreNucleus,
    Idempotent,
    Nucleus,
    ContextualNucleus,
    IdiomaticPreNucleus,
    IdiomaticNucleus,
}

impl Flag {
    pub fn name(self) -> &'static str {
        match self {
            Flag::Stable => "stable",
            Flag::PreNucleusIdiom => "pre_nucleus_idiom",
            Flag::ContextualStable => "contextual_stable",
            Flag::PreMultiplicative => "pre_multiplicative",
            Flag::Multiplicative => "multiplicative",
            Flag::ContextualPreNucleus => "contextual_pre_nucleus",
            Flag::Idempotent => "idempotent",
            Flag::Nucleus => "nucleus",
            Flag::ContextualNucleus => "contextual_nucleus",
            Flag::IdiomaticPreNucleus => "idiomatic_pre_nucleus",
            Flag::IdiomaticNucleus => "idiomatic_nucleus",
        }
    }
}

/// Product-dependent flags are `None` on a bare lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InflatorClass {
    pub stable: bool,
    pub pre_nucleus_idiom: bool,
    pub idempotent: bool,
    pub nucleus: bool,
    pub contextual_stable: Option<bool>,
    pub pre_multiplicative: Option<bool>,
    pub multiplicative: Option<bool>,
    pub contextual_pre_nucleus: Option<bool>,
    pub contextual_nucleus: Option<bool>,
    pub idiomatic_pre_nucleus: Option<bool>,
    pub idiomatic_nucleus: Option<bool>,
    pub witnesses: Vec<Witness>,
}

impl InflatorClass {
    pub fn get(&self, flag: Flag) -> Result<bool, InflatorError> {
        let opt = match flag {
            Flag::Stable => return Ok(self.stable),
            Flag::PreNucleusIdiom => return Ok(self.pre_nucleus_idiom),
            Flag::Idempotent => return Ok(self.idempotent),
            Flag::Nucleus => return Ok(self.nucleus),
            Flag::ContextualStable => self.contextual_stable,
            Flag::PreMultiplicative => self.pre_multiplicative,
            Flag::Multiplicative => self.multiplicative,
            Flag::ContextualPreNucleus => self.contextual_pre_nucleus,
            Flag::ContextualNucleus => self.contextual_nucleus,
            Flag::IdiomaticPreNucleus => self.idiomatic_pre_nucleus,
            Flag::IdiomaticNucleus => self.idiomatic_nucleus,
        };
        opt.ok_or(InflatorError::NeedsProduct(flag.name()))
    }

    pub fn witness(&self, flag: Flag) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.law.starts_with(flag.name()))
    }
}

fn first_pair(l: &FiniteLattice, bad: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    l.elements().find_map(|a| l.elements().find(|&b| bad(a, b)).map(|b| (a, b)))
}

pub fn classify(d: &Inflator<'_>) -> InflatorClass {
    let l = d.lattice();
    let f = |x: usize| d.apply(x);
    let mut witnesses = Vec::new();
    let mut flag = |name: &str, law: &str, hit: Option<(usize, usize)>| {
        if let Some((a, b)) = hit {
            witnesses.push(Witness::new(format!("{name}: {law}"), vec![a, b], l.names_of(&[a, b])));
        }
        hit.is_none()
    };

    let stable = flag("stable", "d(x) ∧ y ≤ d(x ∧ y)", first_pair(l, |x, y| !l.leq(l.meet(f(x), y), f(l.meet(x, y)))));
    let pre_nucleus_idiom = flag(
        "pre_nucleus_idiom",
        "d(x ∧ y) = d(x) ∧ d(y)",
        first_pair(l, |x, y| f(l.meet(x, y)) != l.meet(f(x), f(y))),
    );
    let idem_hit = l.elements().find(|&x| f(f(x)) != f(x)).map(|x| (x, x));
    let idempotent = flag("idempotent", "d(d(x)) = d(x)", idem_hit);
    let nucleus = idempotent && pre_nucleus_idiom;

    let mut class = InflatorClass {
        stable,
        pre_nucleus_idiom,
        idempotent,
        nucleus,
        contextual_stable: None,
        pre_multiplicative: None,
        multiplicative: None,
        contextual_pre_nucleus: None,
        contextual_nucleus: None,
        idiomatic_pre_nucleus: None,
        idiomatic_nucleus: None,
        witnesses: Vec::new(),
    };

    if let Some(q) = d.carrier().quantale() {
        let m = |a: usize, b: usize| q.mul(a, b);
        class.contextual_stable = Some(flag(
            "contextual_stable",
            "s(a)x ≤ s(ax)",
            first_pair(l, |a, x| !l.leq(m(f(a), x), f(m(a, x)))),
        ));
        class.pre_multiplicative = Some(flag(
            "pre_multiplicative",
            "s(a) ∧ b ≤ s(ab)",
            first_pair(l, |a, b| !l.leq(l.meet(f(a), b), f(m(a, b)))),
        ));
        class.multiplicative = Some(flag(
            "multiplicative",
            "s(a) ∧ s(b) = s(ab)",
            first_pair(l, |a, b| l.meet(f(a), f(b)) != f(m(a, b))),
        ));
        let cpn = flag(
            "contextual_pre_nucleus",
            "s(a)s(b) ≤ s(ab)",
            first_pair(l, |a, b| !l.leq(m(f(a), f(b)), f(m(a, b)))),
        );
        class.contextual_pre_nucleus = Some(cpn);
        class.contextual_nucleus = Some(cpn && idempotent);
        let ipn = flag(
            "idiomatic_pre_nucleus",
            "p(a)p(b) ≤ p(ab) = p(a ∧ b) = p(a) ∧ p(b)",
            first_pair(l, |a, b| {
                let pab = f(m(a, b));
                !l.leq(m(f(a), f(b)), pab) || pab != f(l.meet(a, b)) || pab != l.meet(f(a), f(b))
            }),
        );
        class.idiomatic_pre_nucleus = Some(ipn);
        class.idiomatic_nucleus = Some(ipn && idempotent);
    }
    class.witnesses = witnesses;
    class
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraOp {
    Compose,
    Join,
    Meet,
}

/// Composition (`d ∘ d2`) or the pointwise join/meet. Each call re-checks
/// `d ∨ d2 ≤ d d2`, `k d ∨ k d2 ≤ k(d ∨ d2)` and, when `d ≤ d2`, `k d ≤ k d2`
/// and `d k ≤ d2 k`, for `k` ranging over the operands.
pub fn algebra<'a>(d: &Inflator<'a>, d2: &Inflator<'_>, op: AlgebraOp) -> Result<Inflator<'a>, InflatorError> {
    if !d.carrier.same(&d2.carrier) {
        return Err(InflatorError::CarrierMismatch);
    }
    let l = d.lattice();
    let join = d.pointwise(d2, |a, b| l.join(a, b));
    let sanity = |law: &str, lo: &Inflator<'_>, hi: &Inflator<'_>| -> Result<(), InflatorError> {
        match l.elements().find(|&x| !l.leq(lo.apply(x), hi.apply(x))) {
            Some(x) => Err(InflatorError::SanityCheck(Witness::new(law, vec![x], l.names_of(&[x])))),
            None => Ok(()),
        }
    };
    sanity("d ∨ d' ≤ d d'", &join, &d.compose_raw(d2))?;
    sanity("d ∨ d' ≤ d' d", &join, &d2.compose_raw(d))?;
    for k in [d, &Inflator { carrier: d.carrier, map: d2.map.clone() }] {
        let lhs = k.compose_raw(d).pointwise(&k.compose_raw(d2), |a, b| l.join(a, b));
        sanity("k d ∨ k d' ≤ k(d ∨ d')", &lhs, &k.compose_raw(&join))?;
        if d.leq(d2) {
            sanity("d ≤ d' ⟹ k d ≤ k d'", &k.compose_raw(d), &k.compose_raw(d2))?;
            sanity("d ≤ d' ⟹ d k ≤ d' k", &d.compose_raw(k), &d2.compose_raw(k))?;
        }
    }
    let raw = match op {
        AlgebraOp::Compose => d.compose_raw(d2),
        AlgebraOp::Join => join,
        AlgebraOp::Meet => d.pointwise(d2, |a, b| l.meet(a, b)),
    };
    Inflator::new(d.carrier, raw.map)
}

#[derive(Debug, Clone)]
pub struct Closure<'a> {
    pub inflator: Inflator<'a>,
    /// Smallest `k` with `d^k = d^(k+1)`.
    pub stages: usize,
    /// Set when the input was stable or a pre-nucleus: whether `d^∞` is a nucleus.
    pub nucleus_verified: Option<bool>,
}

/// `d^∞`, the least idempotent inflator above `d`.
pub fn closure_of<'a>(d: &Inflator<'a>) -> Closure<'a> {
    let mut current = d.clone();
    let mut stages = 1;
    loop {
        let next = d.compose_raw(&current);
        if next.map == current.map {
            break;
        }
        current = next;
        stages += 1;
    }
    let class = classify(d);
    let nucleus_verified = (class.stable || class.pre_nucleus_idiom).then(|| classify(&current).nucleus);
    Closure {
        inflator: current,
        stages,
        nucleus_verified,
    }
}

/// Fixed-point quotient `A_j` with product `j(ab)`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub quantale: QuasiQuantale,
    /// Quotient index to carrier index.
    pub embed: Vec<usize>,
    pub report: StructureReport,
    /// When the carrier is left-unital with unit `e`: whether `j(e)` is a left unit of `A_j`.
    pub left_unit_check: Option<bool>,
    /// When `j` is multiplicative and the carrier has the full right join
    /// law: whether `A_j` is a frame.
    pub frame_check: Option<bool>,
}

pub fn quotient(q: &QuasiQuantale, j: &Inflator<'_>) -> Result<Quotient, InflatorError> {
    if !j.carrier.same(&Carrier::Quantale(q)) || j.carrier.quantale().is_none() {
        return Err(InflatorError::CarrierMismatch);
    }
    let class = classify(j);
    if class.contextual_nucleus != Some(true) {
        let w = class
            .witness(Flag::ContextualPreNucleus)
            .or_else(|| class.witness(Flag::Idempotent))
            .cloned()
            .expect("failed flag has a witness");
        return Err(InflatorError::NotContextualNucleus(w));
    }
    let l = q.lattice();
    let (lat, embed) = l.induced(j.fixed_mask())?;
    let mut back = vec![usize::MAX; l.len()];
    for (i, &x) in embed.iter().enumerate() {
        back[x] = i;
    }
    let m = embed.len();
    let table = (0..m * m).map(|i| back[j.apply(q.mul(embed[i / m], embed[i % m]))]).collect();
    let quantale = QuasiQuantale::new(lat, table, QqOptions::default())?;
    let left_unit_check = q.left_unit().map(|e| has(quantale.left_units(), back[j.apply(e)]));
    let report = structure_report(quantale.lattice());
    let frame_check = (class.multiplicative == Some(true) && q.right_join_law()).then_some(report.is_frame);
    Ok(Quotient {
        quantale,
        embed,
        report,
        left_unit_check,
        frame_check,
    })
}

/// Fixed-point lattice of a nucleus, with its structure report.
pub fn quotient_lattice(
    j: &Inflator<'_>,
) -> Result<(FiniteLattice, Vec<usize>, StructureReport), InflatorError> {
    let class = classify(j);
    if !class.nucleus {
        let w = class
            .witness(Flag::PreNucleusIdiom)
            .or_else(|| class.witness(Flag::Idempotent))
            .cloned()
            .expect("failed flag has a witness");
        return Err(InflatorError::NotNucleus(w));
    }
    let (lat, embed) = j.lattice().induced(j.fixed_mask())?;
    let report = structure_report(&lat);
    Ok((lat, embed, report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Nuclei,
    Idiomatic,
    Multiplicative,
    Contextual,
}

impl Family {
    fn needs_product(self) -> bool {
        self != Family::Nuclei
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FrameClaim {
    Holds,
    Fails { witnesses: Vec<Witness> },
    /// `N(A)` on a non-modular carrier: reported, not asserted.
    NotAnIdiom { is_frame: bool, witness: Witness },
    /// No frame claim applies to this family.
    Informational { is_frame: bool },
}

impl FrameClaim {
    pub fn passed(&self) -> bool {
        !matches!(self, FrameClaim::Fails { .. })
    }
}

#[derive(Debug, Clone)]
pub struct NucleusFamily<'a> {
    pub family: Family,
    /// Sorted by fixed-point bitset.
    pub members: Vec<Inflator<'a>>,
    pub fixed_sets: Vec<u64>,
    /// `None` when the pointwise order on the family is not a lattice.
    pub lattice: Option<FiniteLattice>,
    pub report: Option<StructureReport>,
    pub frame: FrameClaim,
}

/// Meet-closed subsets containing the top, i.e. the fixed sets of all
/// closure operators. Sorted numerically.
pub fn moore_families(l: &FiniteLattice) -> Vec<u64> {
    let n = l.len();
    let top = l.top();
    let others: Vec<usize> = l.elements().filter(|&x| x != top).collect();
    let mut out = Vec::new();
    for sub in 0u64..(1u64 << others.len()) {
        let mask = mask_iter(sub).fold(bit(top), |m, i| m | bit(others[i]));
        let closed = mask_iter(mask).all(|a| mask_iter(mask).all(|b| has(mask, l.meet(a, b))));
        if closed {
            out.push(mask);
        }
    }
    debug_assert!(out.iter().all(|&m| m >> n == 0));
    out.sort_unstable();
    out
}

fn set_label(l: &FiniteLattice, mask: u64) -> String {
    let names: Vec<&str> = mask_iter(mask).map(|i| l.name(i)).collect();
    format!("{{{}}}", names.join(","))
}

pub fn enumerate_nuclei<'a>(
    carrier: Carrier<'a>,
    family: Family,
    cap: usize,
) -> Result<NucleusFamily<'a>, InflatorError> {
    let l = carrier.lattice();
    if l.len() > cap || l.len() > MAX_ENUMERATION_CAP {
        return Err(InflatorError::TooLarge {
            size: l.len(),
            cap: cap.min(MAX_ENUMERATION_CAP),
        });
    }
    if family.needs_product() && carrier.quantale().is_none() {
        let name = match family {
            Family::Idiomatic => "idiomatic_nucleus",
            Family::Multiplicative => "multiplicative",
            _ => "contextual_nucleus",
        };
        return Err(InflatorError::NeedsProduct(name));
    }
    let mut members = Vec::new();
    let mut fixed_sets = Vec::new();
    for mask in moore_families(l) {
        let j = Inflator::closure_of_set(carrier, mask);
        let c = classify(&j);
        let keep = match family {
            Family::Nuclei => c.nucleus,
            Family::Idiomatic => c.idiomatic_nucleus == Some(true),
            Family::Multiplicative => c.nucleus && c.multiplicative == Some(true),
            Family::Contextual => c.contextual_nucleus == Some(true),
        };
        if keep {
            debug_assert_eq!(j.fixed_mask(), mask);
            members.push(j);
            fixed_sets.push(mask);
        }
    }

    let names: Vec<String> = fixed_sets.iter().map(|&m| set_label(l, m)).collect();
    let ordered = FiniteLattice::from_order(names, |a, b| members[a].leq(&members[b]));
    let (lattice, report, frame) = match ordered {
        Ok(fam) => {
            let report = structure_report(&fam);
            let frame = match family {
                Family::Nuclei => match modular_witness(l) {
                    None => frame_verdict(&report),
                    Some((a, b, c)) => FrameClaim::NotAnIdiom {
                        is_frame: report.is_frame,
                        witness: Witness::new("carrier modular", vec![a, b, c], l.names_of(&[a, b, c])),
                    },
                },
                Family::Idiomatic => frame_verdict(&report),
                _ => FrameClaim::Informational {
                    is_frame: report.is_frame,
                },
            };
            (Some(fam), Some(report), frame)
        }
        Err(e) => {
            let w = Witness::new(format!("family ordered pointwise is a lattice: {e}"), vec![], vec![]);
            let frame = match family {
                Family::Multiplicative | Family::Contextual => FrameClaim::Informational { is_frame: false },
                _ => FrameClaim::Fails { witnesses: vec![w] },
            };
            (None, None, frame)
        }
    };
    Ok(NucleusFamily {
        family,
        members,
        fixed_sets,
        lattice,
        report,
        frame,
    })
}

fn frame_verdict(report: &StructureReport) -> FrameClaim {
    if report.is_frame {
        FrameClaim::Holds
    } else {
        FrameClaim::Fails {
            witnesses: report.witnesses.clone(),
        }
    }
}

/// All inflators on the carrier, or `None` once more than `limit` exist.
pub fn enumerate_inflators<'a>(carrier: Carrier<'a>, limit: usize) -> Option<Vec<Inflator<'a>>> {
    let l = carrier.lattice();
    let order = l.linear_extension();
    let mut map = vec![usize::MAX; l.len()];
    let mut out = Vec::new();
    fn go(
        l: &FiniteLattice,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> bool {
        if depth == order.len() {
            out.push(map.clone());
            return out.len() <= limit;
        }
        let x = order[depth];
        for v in mask_iter(l.up_set(x)) {
            // Elements below x come earlier in the linear extension.
            let ok = mask_iter(l.down_set(x)).all(|y| y == x || map[y] == usize::MAX || l.leq(map[y], v));
            if ok {
                map[x] = v;
                if !go(l, order, depth + 1, map, out, limit) {
                    return false;
                }
                map[x] = usize::MAX;
            }
        }
        true
    }
    if !go(l, &order, 0, &mut map, &mut out, limit) {
        return None;
    }
    Some(out.into_iter().map(|map| Inflator { carrier, map }).collect())
}

pub fn pointwise_join<'a>(d: &Inflator<'a>, d2: &Inflator<'_>) -> Inflator<'a> {
    let l = d.lattice();
    d.pointwise(d2, |a, b| l.join(a, b))
}

pub fn pointwise_meet<'a>(d: &Inflator<'a>, d2: &Inflator<'_>) -> Inflator<'a> {
    let l = d.lattice();
    d.pointwise(d2, |a, b| l.meet(a, b))
}

pub fn compose<'a>(d: &Inflator<'a>, d2: &Inflator<'_>) -> Inflator<'a> {
    d.compose_raw(d2)
}
