//! Named checks over the bundled corpus.
//!
//! Each check quantifies one claim over every applicable corpus instance and
//! fails when any instance violates it or when no instance applies. A run
//! passes only if the corpus is intact, every check passes and the set of
//! checks run is exactly the manifest's `required_checks`.

use crate::bits::{bit, has, mask_iter};
use crate::corpus::{load_corpus, manifest, Corpus, CorpusSource, IntegrityIssue};
use crate::inflator::{
    algebra, classify, closure_of, enumerate_inflators, enumerate_nuclei, quotient, quotient_lattice, AlgebraOp,
    Carrier, Family, FrameClaim, Inflator, MAX_ENUMERATION_CAP,
};
use crate::input::{parse_structure, InputError, Structure};
use crate::lattice::{structure_report, FiniteLattice, LatticeError};
use crate::module::hom::{all_homs, image_sum, preimage_meet};
use crate::module::preradical::{preradical_eval, Preradical};
use crate::module::submodule::{lambda_quasi_quantales, Lambdas, SubmoduleLattice};
use crate::module::theory::{analyze_lattice, semiprime_mask, ModuleAnalysis, HOM_ENUMERATION_LIMIT};
use crate::module::{FiniteModule, ModuleError};
use crate::quantale::{law_report, QqOptions, QuasiQuantale};
use crate::report::Witness;
use crate::spectrum::{mu, relative_primes, topology, SpectrumError};
use serde::Serialize;
use std::fmt::Display;

pub const SCHEMA: &str = "quantlat.verify/1";

/// Inflator enumerations larger than this are skipped.
pub const INFLATOR_SAMPLE_LIMIT: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub claim: &'static str,
    pub status: Status,
    pub instances: usize,
    pub failures: Vec<String>,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRun {
    pub schema: &'static str,
    pub corpus: Vec<String>,
    pub integrity: Vec<IntegrityIssue>,
    pub results: Vec<CheckResult>,
    /// Required checks that did not run.
    pub missing: Vec<String>,
    /// Checks that ran but are not in the manifest.
    pub unlisted: Vec<String>,
    pub passed: bool,
}

impl VerificationRun {
    pub fn exit_status(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn result(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{tag} {} ({} instances): {}\n", r.name, r.instances, r.claim));
            for f in &r.failures {
                out.push_str(&format!("     {f}\n"));
            }
        }
        for i in &self.integrity {
            out.push_str(&format!("FAIL corpus file {}: {}\n", i.file, i.problem));
        }
        for m in &self.missing {
            out.push_str(&format!("FAIL required check {m} did not run\n"));
        }
        for u in &self.unlisted {
            out.push_str(&format!("FAIL check {u} is not in the manifest\n"));
        }
        let failed = self.results.iter().filter(|r| r.status == Status::Fail).count();
        out.push_str(&format!(
            "{} checks, {} failed; verdict: {}\n",
            self.results.len(),
            failed,
            if self.passed { "pass" } else { "FAIL" }
        ));
        out
    }
}

/// Accumulates the instances seen by one check.
#[derive(Debug, Default)]
pub struct Tally {
    instances: usize,
    failures: Vec<String>,
    witnesses: Vec<Witness>,
}

impl Tally {
    fn case(&mut self, label: impl Display, ok: bool) -> bool {
        self.instances += 1;
        if !ok {
            self.failures.push(label.to_string());
        }
        ok
    }

    fn case_w(&mut self, label: impl Display, w: Option<Witness>) {
        self.instances += 1;
        if let Some(w) = w {
            self.failures.push(format!("{label}: {w}"));
            self.witnesses.push(w);
        }
    }

    fn fail(&mut self, label: impl Display) {
        self.case(label, false);
    }
}

#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub claim: &'static str,
    run: fn(&Ctx, &mut Tally),
}

pub struct Named<T> {
    pub name: String,
    pub value: T,
}

pub struct ModuleCtx {
    pub name: String,
    pub certified: bool,
    pub sl: SubmoduleLattice,
    pub lambdas: Result<Lambdas, ModuleError>,
    pub analysis: Result<ModuleAnalysis, ModuleError>,
}

/// Everything the checks quantify over, derived once from the corpus.
pub struct Ctx {
    pub corpus: Corpus,
    pub lattices: Vec<Named<FiniteLattice>>,
    /// Structure files (bare lattices with `∧`) plus `Λ(M)` and `Λ^fi(M)`.
    pub qqs: Vec<Named<QuasiQuantale>>,
    pub modules: Vec<ModuleCtx>,
    pub load_errors: Vec<String>,
}

impl Ctx {
    pub fn new(corpus: Corpus) -> Self {
        let mut lattices = Vec::new();
        let mut qqs = Vec::new();
        let mut modules = Vec::new();
        let mut load_errors = Vec::new();
        for s in &corpus.structures {
            lattices.push(Named {
                name: s.name.clone(),
                value: s.value.lattice().clone(),
            });
            qqs.push(Named {
                name: s.name.clone(),
                value: s.value.clone().into_quantale(),
            });
        }
        for m in &corpus.modules {
            let sl = match SubmoduleLattice::new(m.value.clone()) {
                Ok(sl) => sl,
                Err(e) => {
                    load_errors.push(format!("{}: {e}", m.name));
                    continue;
                }
            };
            let certified = m.value.is_certified();
            let lambdas = lambda_quasi_quantales(&sl);
            let analysis = analyze_lattice(&sl, certified);
            lattices.push(Named {
                name: format!("{}:lambda", m.name),
                value: sl.lattice().clone(),
            });
            if let Ok(lq) = &lambdas {
                qqs.push(Named {
                    name: format!("{}:lambda", m.name),
                    value: lq.lambda.clone(),
                });
                qqs.push(Named {
                    name: format!("{}:lambda_fi", m.name),
                    value: lq.lambda_fi.clone(),
                });
            }
            modules.push(ModuleCtx {
                name: m.name.clone(),
                certified,
                sl,
                lambdas,
                analysis,
            });
        }
        Ctx {
            corpus,
            lattices,
            qqs,
            modules,
            load_errors,
        }
    }

    fn lattice(&self, name: &str) -> Option<&FiniteLattice> {
        self.lattices.iter().find(|l| l.name == name).map(|l| &l.value)
    }

    fn qq(&self, name: &str) -> Option<&QuasiQuantale> {
        self.qqs.iter().find(|q| q.name == name).map(|q| &q.value)
    }

    fn module(&self, name: &str) -> Option<&ModuleCtx> {
        self.modules.iter().find(|m| m.name == name)
    }

    fn small_lattices(&self, max: usize) -> impl Iterator<Item = &Named<FiniteLattice>> {
        self.lattices.iter().filter(move |l| l.value.len() <= max)
    }

    fn small_qqs(&self, max: usize) -> impl Iterator<Item = &Named<QuasiQuantale>> {
        self.qqs.iter().filter(move |q| q.value.len() <= max)
    }

    fn analyses(&self) -> impl Iterator<Item = (&ModuleCtx, &ModuleAnalysis)> {
        self.modules.iter().filter_map(|m| m.analysis.as_ref().ok().map(|a| (m, a)))
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    pairs(n).flat_map(move |(a, b)| (0..n).map(move |c| (a, b, c)))
}

fn missing(t: &mut Tally, what: &str) {
    t.fail(format!("corpus entry {what} is missing"));
}

// Lattice layer.

fn lattice_laws(ctx: &Ctx, t: &mut Tally) {
    for l in &ctx.lattices {
        let x = &l.value;
        let n = x.len();
        let ok = pairs(n).all(|(a, b)| {
            x.meet(a, b) == x.meet(b, a)
                && x.join(a, b) == x.join(b, a)
                && x.meet(a, x.join(a, b)) == a
                && x.join(a, x.meet(a, b)) == a
                && (x.leq(a, b) == (x.meet(a, b) == a))
                && (x.leq(a, b) == (x.join(a, b) == b))
                && (!(x.leq(a, b) && x.leq(b, a)) || a == b)
        }) && (0..n).all(|a| {
            x.meet(a, a) == a && x.join(a, a) == a && x.leq(x.bottom(), a) && x.leq(a, x.top())
        }) && triples(n).all(|(a, b, c)| !(x.leq(a, b) && x.leq(b, c)) || x.leq(a, c));
        t.case(&l.name, ok);
    }
}

fn distributive_implies_modular(ctx: &Ctx, t: &mut Tally) {
    for l in &ctx.lattices {
        let x = &l.value;
        let n = x.len();
        let r = structure_report(x);
        let modular = triples(n).all(|(a, b, c)| !x.leq(a, b) || x.join(a, x.meet(c, b)) == x.meet(x.join(a, c), b));
        let distributive = triples(n).all(|(a, b, c)| x.meet(a, x.join(b, c)) == x.join(x.meet(a, b), x.meet(a, c)));
        let flags_ok = r.is_modular == modular
            && r.is_distributive == distributive
            && r.is_frame == distributive
            && (r.is_modular || !r.witnesses.is_empty())
            && (r.is_distributive || !r.witnesses.is_empty());
        t.case(&l.name, flags_ok && (!r.is_distributive || r.is_modular));
    }
}

fn implication_iff_frame(ctx: &Ctx, t: &mut Tally) {
    for l in &ctx.lattices {
        let x = &l.value;
        let n = x.len();
        let r = structure_report(x);
        let has_implication = pairs(n).all(|(a, b)| x.implication(a, b).is_some());
        let mut ok = r.is_frame == has_implication && r.is_frame == r.implication_table.is_some();
        if r.implication.is_some() {
            ok &= triples(n).all(|(a, b, y)| x.leq(y, r.implies(a, b).unwrap()) == x.leq(x.meet(y, b), a));
            ok &= (0..n).all(|a| {
                let neg = r.negation(x, a).unwrap();
                x.meet(neg, a) == x.bottom() && (0..n).all(|y| x.meet(y, a) != x.bottom() || x.leq(y, neg))
            });
        }
        t.case(&l.name, ok);
    }
}

fn hasse_edges(ctx: &Ctx, t: &mut Tally) {
    for (name, nodes, edges) in [("chain2", 2, 1), ("m3", 5, 6), ("n5", 5, 5)] {
        let Some(l) = ctx.lattice(name) else {
            missing(t, name);
            continue;
        };
        let dot = l.hasse_dot(name);
        let arrows = dot.lines().filter(|s| s.contains("->")).count();
        t.case(
            format!("{name}: {} nodes, {} covers, {arrows} arrows", l.len(), l.covers().len()),
            l.len() == nodes && l.covers().len() == edges && arrows == edges,
        );
    }
}

fn inflators_of<'a>(carrier: Carrier<'a>) -> Option<Vec<Inflator<'a>>> {
    enumerate_inflators(carrier, INFLATOR_SAMPLE_LIMIT)
}

fn inflator_algebra(ctx: &Ctx, t: &mut Tally) {
    for l in ctx.small_lattices(5) {
        let Some(all) = inflators_of(Carrier::Lattice(&l.value)) else { continue };
        let mut failure = None;
        'outer: for d in &all {
            for d2 in &all {
                for op in [AlgebraOp::Compose, AlgebraOp::Join, AlgebraOp::Meet] {
                    if let Err(e) = algebra(d, d2, op) {
                        failure = Some(format!("{:?} {:?} {op:?}: {e}", d.table_names(), d2.table_names()));
                        break 'outer;
                    }
                }
            }
        }
        t.case(format!("{}: {}", l.name, failure.as_deref().unwrap_or("all pairs")), failure.is_none());
    }
}

fn closure_least_idempotent(ctx: &Ctx, t: &mut Tally) {
    for l in ctx.small_lattices(8) {
        let Some(all) = inflators_of(Carrier::Lattice(&l.value)) else { continue };
        let idempotent: Vec<&Inflator> = all.iter().filter(|k| k.is_idempotent()).collect();
        let bad = all.iter().find(|d| {
            let c = closure_of(d).inflator;
            !c.is_idempotent() || !d.leq(&c) || idempotent.iter().any(|k| d.leq(k) && !c.leq(k))
        });
        t.case(format!("{} ({} inflators)", l.name, all.len()), bad.is_none());
    }
}

fn closure_monotone(ctx: &Ctx, t: &mut Tally) {
    for l in ctx.small_lattices(8) {
        let Some(all) = inflators_of(Carrier::Lattice(&l.value)) else { continue };
        let closed: Vec<Inflator> = all.iter().map(|d| closure_of(d).inflator).collect();
        let bad = pairs(all.len()).find(|&(i, j)| all[i].leq(&all[j]) && !closed[i].leq(&closed[j]));
        t.case(format!("{} ({} inflators)", l.name, all.len()), bad.is_none());
    }
}

fn closure_to_nucleus(ctx: &Ctx, t: &mut Tally) {
    for l in ctx.small_lattices(8) {
        let Some(all) = inflators_of(Carrier::Lattice(&l.value)) else { continue };
        for d in &all {
            let c = closure_of(d);
            if let Some(ok) = c.nucleus_verified {
                t.case(format!("{}: {:?}", l.name, d.table_names()), ok);
            }
        }
    }
}

fn nuclei_frame_idioms(ctx: &Ctx, t: &mut Tally) {
    for l in ctx.small_lattices(7) {
        if !structure_report(&l.value).is_modular {
            continue;
        }
        match enumerate_nuclei(Carrier::Lattice(&l.value), Family::Nuclei, 8) {
            Ok(f) => {
                t.case(format!("{}: {} nuclei", l.name, f.members.len()), f.frame == FrameClaim::Holds);
            }
            Err(e) => t.fail(format!("{}: {e}", l.name)),
        }
    }
}

fn nuclei_enumeration(ctx: &Ctx, t: &mut Tally) {
    for l in ctx.small_lattices(8) {
        let Some(all) = inflators_of(Carrier::Lattice(&l.value)) else { continue };
        let mut brute: Vec<Vec<usize>> =
            all.iter().filter(|d| classify(d).nucleus).map(|d| d.table().to_vec()).collect();
        brute.sort();
        let mut listed: Vec<Vec<usize>> = match enumerate_nuclei(Carrier::Lattice(&l.value), Family::Nuclei, 8) {
            Ok(f) => f.members.iter().map(|d| d.table().to_vec()).collect(),
            Err(e) => {
                t.fail(format!("{}: {e}", l.name));
                continue;
            }
        };
        listed.sort();
        t.case(format!("{}: {} nuclei", l.name, listed.len()), brute == listed);
    }
}

fn nuclei_chain3(ctx: &Ctx, t: &mut Tally) {
    let Some(l) = ctx.lattice("chain3") else { return missing(t, "chain3") };
    match enumerate_nuclei(Carrier::Lattice(l), Family::Nuclei, 8) {
        Ok(f) => {
            let boolean = f.report.as_ref().is_some_and(|r| r.is_boolean);
            t.case(format!("{} nuclei, boolean {boolean}", f.members.len()), f.members.len() == 4 && boolean);
        }
        Err(e) => t.fail(e),
    }
}

fn frame_iff_idempotent_monoid(ctx: &Ctx, t: &mut Tally) {
    for q in &ctx.qqs {
        let r = law_report(&q.value);
        t.case_w(&q.name, (!r.holds_frame_iff_idempotent_monoid).then(|| r.witness("frame ⟺").cloned()).flatten());
        if !r.holds_frame_iff_idempotent_monoid && r.witness("frame ⟺").is_none() {
            t.fail(format!("{}: no witness", q.name));
        }
    }
}

// Quasi-quantale layer.

fn quasi_quantale_axioms(ctx: &Ctx, t: &mut Tally) {
    for q in &ctx.qqs {
        let x = &q.value;
        let l = x.lattice();
        let n = x.len();
        let assoc = triples(n).all(|(a, b, c)| x.mul(x.mul(a, b), c) == x.mul(a, x.mul(b, c)));
        let mono = triples(n).all(|(a, b, c)| !l.leq(a, b) || (l.leq(x.mul(c, a), x.mul(c, b)) && l.leq(x.mul(a, c), x.mul(b, c))));
        t.case(&q.name, assoc && mono);
    }
}

fn law_flag(ctx: &Ctx, t: &mut Tally, get: fn(&crate::quantale::LawReport) -> Option<bool>) {
    for q in &ctx.qqs {
        let r = law_report(&q.value);
        match get(&r) {
            Some(true) => {
                t.case(&q.name, true);
            }
            Some(false) => t.case_w(&q.name, Some(r.witnesses.first().cloned().unwrap_or_else(|| {
                Witness::new("flag false without witness", vec![], vec![])
            }))),
            None => {}
        }
    }
}

fn monotone_consequences(ctx: &Ctx, t: &mut Tally) {
    law_flag(ctx, t, |r| Some(r.holds_monotone));
}

fn one_dominates_bounds(ctx: &Ctx, t: &mut Tally) {
    law_flag(ctx, t, |r| r.holds_one_dominates_bounds);
}

fn square_laws(ctx: &Ctx, t: &mut Tally) {
    law_flag(ctx, t, |r| r.holds_square);
}

fn zero_divisor(ctx: &Ctx, t: &mut Tally) {
    law_flag(ctx, t, |r| Some(r.holds_zero_divisor));
}

fn quantale_upgrade(ctx: &Ctx, t: &mut Tally) {
    for q in &ctx.qqs {
        let r = law_report(&q.value);
        let Some(up) = r.quantale_upgrade else { continue };
        let full = !r.binary_distributive || (r.is_quantale && r.full_join_distributive == Some(true));
        t.case(format!("{} (binary distributive {})", q.name, r.binary_distributive), up && full);
    }
}

fn meet_quasi_quantale(ctx: &Ctx, t: &mut Tally) {
    for s in &ctx.corpus.structures {
        let Structure::Lattice(l) = &s.value else { continue };
        let q = QuasiQuantale::with_meet(l.clone());
        let top = l.top();
        let r = law_report(&q);
        t.case(
            &s.name,
            q.is_commutative()
                && has(q.left_units(), top)
                && has(q.right_units(), top)
                && r.holds_product_is_meet == Some(true),
        );
    }
}

fn inflator_classes(ctx: &Ctx, t: &mut Tally) {
    for q in ctx.small_qqs(6) {
        let Some(all) = inflators_of(Carrier::Quantale(&q.value)) else { continue };
        let bad = all.iter().find(|d| {
            let c = classify(d);
            let imp = |a: bool, b: Option<bool>| !a || b == Some(true);
            let (Some(mult), Some(cpn), Some(ipn)) = (c.multiplicative, c.contextual_pre_nucleus, c.idiomatic_pre_nucleus)
            else {
                return true;
            };
            !imp(c.pre_nucleus_idiom, Some(c.stable))
                || !imp(mult, c.pre_multiplicative)
                || !imp(cpn, c.contextual_stable)
                || !imp(ipn, Some(c.pre_nucleus_idiom && cpn))
                || c.nucleus != (c.pre_nucleus_idiom && c.idempotent)
                || c.contextual_nucleus != Some(cpn && c.idempotent)
                || c.idiomatic_nucleus != Some(ipn && c.idempotent)
        });
        t.case(format!("{} ({} inflators)", q.name, all.len()), bad.is_none());
    }
}

fn contextual_quotient(ctx: &Ctx, t: &mut Tally) {
    for q in &ctx.qqs {
        let fam = match enumerate_nuclei(Carrier::Quantale(&q.value), Family::Contextual, MAX_ENUMERATION_CAP) {
            Ok(f) => f,
            Err(e) => {
                t.fail(format!("{}: {e}", q.name));
                continue;
            }
        };
        for j in &fam.members {
            let label = format!("{}: j = {:?}", q.name, j.table_names());
            match quotient(&q.value, j) {
                Ok(qt) => {
                    t.case(label, qt.left_unit_check != Some(false));
                }
                Err(e) => t.fail(format!("{label}: {e}")),
            }
        }
    }
}

fn multiplicative_quotient_frame(ctx: &Ctx, t: &mut Tally) {
    for q in &ctx.qqs {
        if !q.value.right_join_law() {
            continue;
        }
        let fam = match enumerate_nuclei(Carrier::Quantale(&q.value), Family::Multiplicative, MAX_ENUMERATION_CAP) {
            Ok(f) => f,
            Err(e) => {
                t.fail(format!("{}: {e}", q.name));
                continue;
            }
        };
        for j in &fam.members {
            let label = format!("{}: d = {:?}", q.name, j.table_names());
            match quotient_lattice(j) {
                Ok((_, _, rep)) => {
                    let via_quotient = quotient(&q.value, j).ok().and_then(|x| x.frame_check);
                    t.case(label, rep.is_frame && via_quotient != Some(false));
                }
                Err(e) => t.fail(format!("{label}: {e}")),
            }
        }
    }
}

fn idiomatic_nuclei_frame(ctx: &Ctx, t: &mut Tally) {
    for q in ctx.small_qqs(6) {
        match enumerate_nuclei(Carrier::Quantale(&q.value), Family::Idiomatic, 8) {
            Ok(f) => {
                t.case(format!("{}: {} idiomatic nuclei", q.name, f.members.len()), f.frame == FrameClaim::Holds);
            }
            Err(e) => t.fail(format!("{}: {e}", q.name)),
        }
    }
}

/// Quasi-quantales meeting the standing spectrum hypotheses, with their
/// relative primes. Law failures are recorded on the tally.
fn spectral<'c>(ctx: &'c Ctx, t: &mut Tally) -> Vec<(&'c Named<QuasiQuantale>, u64)> {
    let mut out = Vec::new();
    for q in &ctx.qqs {
        match relative_primes(&q.value) {
            Ok(p) => out.push((q, p)),
            Err(SpectrumError::HypothesisFailure(_)) => {}
            Err(e) => t.fail(format!("{}: {e}", q.name)),
        }
    }
    out
}

fn relative_primes_check(ctx: &Ctx, t: &mut Tally) {
    for (q, points) in spectral(ctx, t) {
        let x = &q.value;
        let l = x.lattice();
        let b = x.b_mask();
        let brute = l
            .elements()
            .filter(|&p| p != l.top())
            .filter(|&p| {
                mask_iter(b).all(|a| mask_iter(b).all(|c| !l.leq(x.mul(a, c), p) || l.leq(a, p) || l.leq(c, p)))
            })
            .fold(0, |m, p| m | bit(p));
        let bounded = mask_iter(b).all(|a| mask_iter(b).all(|c| l.leq(x.mul(a, c), l.meet(a, c))));
        t.case(&q.name, brute == points && bounded);
    }
}

fn spectrum_topology(ctx: &Ctx, t: &mut Tally) {
    for (q, points) in spectral(ctx, t) {
        let s = match topology(&q.value) {
            Ok(s) => s,
            Err(e) => {
                t.fail(format!("{}: {e}", q.name));
                continue;
            }
        };
        let l = q.value.lattice();
        let opens = s.opens();
        let closed = opens.iter().all(|&a| opens.iter().all(|&c| opens.contains(&(a | c)) && opens.contains(&(a & c))));
        let ok = s.points() == points
            && s.u(l.bottom()) == 0
            && s.u(l.top()) == points
            && opens.contains(&0)
            && opens.contains(&points)
            && closed
            && structure_report(s.open_frame()).is_frame
            && mask_iter(q.value.b_mask()).all(|b| s.u(b) | s.v(b) == points && s.u(b) & s.v(b) == 0);
        t.case(&q.name, ok);
    }
}

fn adjunction(ctx: &Ctx, t: &mut Tally) {
    for (q, _) in spectral(ctx, t) {
        let Ok(s) = topology(&q.value) else {
            t.fail(format!("{}: topology", q.name));
            continue;
        };
        let l = q.value.lattice();
        let b = q.value.b_mask();
        let u_star = |w: u64| l.join_all(mask_iter(b).filter(|&c| s.u(c) & !w == 0));
        let ok = s.opens().iter().all(|&w| {
            has(b, u_star(w)) && mask_iter(b).all(|c| (s.u(c) & !w == 0) == l.leq(c, u_star(w)))
        });
        t.case(&q.name, ok);
    }
}

fn mu_prenucleus(ctx: &Ctx, t: &mut Tally) {
    for (q, _) in spectral(ctx, t) {
        let Ok(s) = topology(&q.value) else {
            t.fail(format!("{}: topology", q.name));
            continue;
        };
        let nu = match mu(&s) {
            Ok(m) => m,
            Err(e) => {
                t.fail(format!("{}: {e}", q.name));
                continue;
            }
        };
        let l = q.value.lattice();
        let b = q.value.b_mask();
        // Largest element of B below ⋀V(b), found by scanning B.
        let ok = mask_iter(b).all(|x| {
            let bound = l.meet_mask(s.v(x));
            let below: Vec<usize> = mask_iter(b).filter(|&c| l.leq(c, bound)).collect();
            let top = below.iter().copied().find(|&c| below.iter().all(|&d| l.leq(d, c)));
            top.is_some() && nu.apply(x) == top
        });
        let mult = mask_iter(b).all(|x| {
            mask_iter(b).all(|y| l.meet(nu.apply(x).unwrap(), nu.apply(y).unwrap()) == nu.apply(q.value.mul(x, y)).unwrap())
        });
        t.case(&q.name, ok && mult);
    }
}

fn z12_spectrum(ctx: &Ctx, t: &mut Tally) {
    let Some(q) = ctx.qq("z12_ideals") else { return missing(t, "z12_ideals") };
    let l = q.lattice();
    let idx = |s: &str| l.index_of(s).expect("z12 element");
    let s = match topology(q) {
        Ok(s) => s,
        Err(e) => return t.fail(e),
    };
    let pts = bit(idx("(2)")) | bit(idx("(3)"));
    t.case(format!("points {:?}", s.point_names()), s.points() == pts);
    t.case(format!("{} opens", s.opens().len()), s.opens().len() == 4);
    let nu = match mu(&s) {
        Ok(m) => m,
        Err(e) => return t.fail(e),
    };
    t.case("μ(0) = (6)", nu.apply(idx("0")) == Some(idx("(6)")));
    t.case("μ((4)) = (2)", nu.apply(idx("(4)")) == Some(idx("(2)")));
    let fix = ["(2)", "(3)", "(6)", "R"].iter().fold(0, |m, e| m | bit(idx(e)));
    t.case("Fix(μ) = {(2),(3),(6),R}", nu.fixed_mask() == fix);
    let (fl, _) = l.induced(fix).expect("fixed points form a lattice");
    let square = FiniteLattice::from_named(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
        .expect("square");
    let iso = fl.len() == 4 && structure_report(&fl).is_boolean && fl.covers().len() == square.covers().len();
    t.case("Fix(μ) is the Boolean square", iso);
    let Some(j) = nu.as_inflator() else { return t.fail("μ as an inflator") };
    let c = classify(&j);
    t.case(
        "μ inflationary, monotone, idempotent, multiplicative pre-nucleus",
        c.idempotent && c.pre_nucleus_idiom && c.multiplicative == Some(true),
    );
    match quotient(q, &j) {
        Ok(qt) => {
            t.case("A_μ is a 4-element Boolean frame", qt.quantale.len() == 4 && qt.report.is_boolean);
        }
        Err(e) => t.fail(format!("A_μ: {e}")),
    }
}

// Module layer.

fn product_laws_check(ctx: &Ctx, t: &mut Tally) {
    for (m, a) in ctx.analyses() {
        let r = &a.laws;
        t.case_w(&m.name, (!r.all_hold()).then(|| r.witnesses[0].clone()));
    }
}

fn fi_right_unit(ctx: &Ctx, t: &mut Tally) {
    for m in ctx.modules.iter().filter(|m| m.certified) {
        let sl = &m.sl;
        let ok = mask_iter(sl.fi_mask()).all(|n| sl.product(n, sl.top()) == n);
        t.case(&m.name, ok);
    }
}

fn lambda_quasi_quantale(ctx: &Ctx, t: &mut Tally) {
    for m in ctx.modules.iter().filter(|m| m.certified) {
        match &m.lambdas {
            Ok(lq) => {
                t.case(&m.name, lq.lambda_fi.right_unit().is_some() && lq.lambda.sub_b() == Some(m.sl.fi_mask()));
            }
            Err(e) => t.fail(format!("{}: {e}", m.name)),
        }
    }
}

fn nonassociative_example(ctx: &Ctx, t: &mut Tally) {
    let mut found = Vec::new();
    for m in &ctx.modules {
        if let Err(ModuleError::AssociativityFailure(w)) = &m.lambdas {
            found.push(format!("{}: {w}", m.name));
            t.case(format!("{} is uncertified", m.name), !m.certified);
        }
    }
    t.case(format!("non-associative product found: {found:?}"), !found.is_empty());
}

fn generator_sufficiency_check(ctx: &Ctx, t: &mut Tally) {
    for (m, a) in ctx.analyses() {
        let s = &a.sufficiency;
        t.case_w(
            format!("{} ({} pairs)", m.name, s.pairs_checked),
            s.mismatches.first().cloned().or_else(|| {
                (s.pairs_checked == 0).then(|| Witness::new("no pair within the hom limit", vec![], vec![]))
            }),
        );
    }
}

fn preradicals(ctx: &Ctx, t: &mut Tally) {
    let probes: Vec<&FiniteModule> = ctx.corpus.modules.iter().map(|m| &m.value).filter(|m| m.size() <= 12).collect();
    for m in ctx.modules.iter().filter(|m| m.certified && m.sl.module().size() <= 12) {
        let sl = &m.sl;
        let mm = sl.module();
        for &x in &probes {
            let (Some(into), Some(out)) = (all_homs(mm, x, HOM_ENUMERATION_LIMIT), all_homs(x, mm, HOM_ENUMERATION_LIMIT))
            else {
                continue;
            };
            for n in 0..sl.len() {
                let alpha = image_sum(x, &into, sl.set(n));
                let eta = preimage_meet(x, &out, sl.set(n));
                let label = format!("{} at {} on {x}", m.name, sl.name(n));
                let a = preradical_eval(Preradical::Alpha, sl, n, x);
                let e = preradical_eval(Preradical::Eta, sl, n, x);
                let w = preradical_eval(Preradical::Omega, sl, n, x);
                let omega_ok = match w {
                    Ok(v) => sl.is_fi(n) && v == eta,
                    Err(ModuleError::NotFullyInvariant(_)) => !sl.is_fi(n),
                    Err(_) => false,
                };
                t.case(label, a == Ok(alpha) && e == Ok(eta) && omega_ok);
            }
        }
    }
}

fn certified_analyses(ctx: &Ctx, t: &mut Tally) -> Vec<(String, SpectraView)> {
    let mut out = Vec::new();
    for m in ctx.modules.iter().filter(|m| m.certified) {
        match &m.analysis {
            Ok(a) => match (&a.spectra, &a.semiprime, &a.radicals, &a.classification) {
                (Some(_), Some(_), Some(_), Some(_)) => out.push((m.name.clone(), SpectraView(a.clone()))),
                _ => t.fail(format!("{}: analysis incomplete", m.name)),
            },
            Err(e) => t.fail(format!("{}: {e}", m.name)),
        }
    }
    out
}

/// A module analysis whose optional sections are all present.
struct SpectraView(ModuleAnalysis);

impl SpectraView {
    fn spectra(&self) -> &crate::module::theory::SpectraReport {
        self.0.spectra.as_ref().unwrap()
    }
    fn semiprime(&self) -> &crate::module::theory::SemiprimeReport {
        self.0.semiprime.as_ref().unwrap()
    }
    fn radicals(&self) -> &crate::module::theory::RadicalReport {
        self.0.radicals.as_ref().unwrap()
    }
    fn class(&self) -> &crate::module::theory::Classification {
        self.0.classification.as_ref().unwrap()
    }
}

fn large_spectrum(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        let s = v.spectra();
        t.case(name, s.spec_fi_in_lg_spec && s.dense && s.maximal_in_lg_spec && s.eta_largest_prime);
    }
}

fn duo_spectra(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        if v.class().duo {
            let s = v.spectra();
            t.case(&name, s.duo_coincide == Some(true) && s.spec_full.as_ref() == Some(&s.lg_spec) && s.spec_fi == s.lg_spec);
        }
    }
}

fn semiprime_fixed_points(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        t.case(name, v.semiprime().sp_equals_mu_fixed);
    }
}

fn sp_frame(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        let s = v.semiprime();
        t.case(name, s.sp_is_frame && s.sp_iso_opens);
    }
}

fn sp_points(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        t.case(name, v.semiprime().points_equal_spec_fi);
    }
}

fn nil_below_rad(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        t.case(&name, v.radicals().nil_star_below_rad);
    }
}

fn radical_values(ctx: &Ctx, t: &mut Tally) {
    let view = |name: &str| ctx.module(name).and_then(|m| m.analysis.as_ref().ok()).and_then(|a| a.radicals.clone());
    match view("m12") {
        Some(r) => {
            t.case(format!("Nil_*(Z/12) = {}", r.nil_star), r.nil_star == "6Z12");
            t.case(format!("Rad(Z/12) = {}", r.rad), r.rad == "6Z12");
        }
        None => missing(t, "m12"),
    }
    match view("m2_2") {
        Some(r) => {
            t.case(format!("Rad(Klein four) = {}", r.rad), r.rad == "0");
        }
        None => missing(t, "m2_2"),
    }
    match ctx.module("m12").and_then(|m| m.analysis.as_ref().ok()).and_then(|a| a.semiprime.as_ref()) {
        Some(s) => {
            t.case(format!("|SP(Z/12)| = {}", s.sp.len()), s.sp.len() == 4);
        }
        None => missing(t, "m12"),
    }
}

fn max_adjunction(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        let r = v.radicals();
        t.case(name, r.tau_zero_is_rad && r.tau_multiplicative_nucleus && r.r_is_frame && r.r_within_sp);
    }
}

fn co_semisimple_frame(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        let c = v.class();
        if c.co_semisimple {
            t.case(name, c.lambda_fi_frame == Some(true));
        }
    }
}

fn fi_simple_cogenerated(ctx: &Ctx, t: &mut Tally) {
    for (name, v) in certified_analyses(ctx, t) {
        let c = v.class();
        if c.fi_simple {
            t.case(name, c.cogenerated_by_factors == Some(true));
        }
    }
}

fn klein_classification(ctx: &Ctx, t: &mut Tally) {
    let Some(c) = ctx.module("m2_2").and_then(|m| m.analysis.as_ref().ok()).and_then(|a| a.classification.clone())
    else {
        return missing(t, "m2_2");
    };
    t.case(
        format!("{c:?}"),
        c.fi_simple && c.prime && c.co_semisimple && c.lambda_fi_frame == Some(true),
    );
}

// Negative controls.

fn n5_not_modular(ctx: &Ctx, t: &mut Tally) {
    let Some(l) = ctx.lattice("n5") else { return missing(t, "n5") };
    let r = structure_report(l);
    let w = r.witnesses.iter().find(|w| w.law.contains("modular"));
    t.case(format!("witness {w:?}"), !r.is_modular && w.is_some());
}

fn m3_not_distributive(ctx: &Ctx, t: &mut Tally) {
    let Some(l) = ctx.lattice("m3") else { return missing(t, "m3") };
    let r = structure_report(l);
    let w = r.witnesses.iter().find(|w| w.law.contains("distributive"));
    t.case(format!("witness {w:?}"), r.is_modular && !r.is_distributive && w.is_some());
}

fn broken_product_rejected(ctx: &Ctx, t: &mut Tally) {
    if ctx.corpus.rejected.is_empty() {
        return missing(t, "rejected structure");
    }
    for (file, res) in &ctx.corpus.rejected {
        let ok = match res {
            Err(InputError::Quantale { source, .. }) => {
                use crate::quantale::QuantaleError::*;
                matches!(source, NotMonotone(w) | NotAssociative(w) if !w.names.is_empty())
            }
            _ => false,
        };
        t.case(file, ok);
    }
}

fn z4_zero_not_semiprime(ctx: &Ctx, t: &mut Tally) {
    let Some(m) = ctx.module("m4") else { return missing(t, "m4") };
    let sl = &m.sl;
    let semi = semiprime_mask(sl);
    let two = sl.lattice().index_of("2Z4");
    let witness_ok = two.is_some_and(|k| sl.product(k, k) == sl.zero() && k != sl.zero());
    t.case("0 ∉ semiprime(Z/4), witness 2Z4·2Z4 = 0", !has(semi, sl.zero()) && witness_ok);
}

const BOWTIE: &str = r#"{"elements":["a","b","c","d"],"covers":[["a","c"],["a","d"],["b","c"],["b","d"]]}"#;

fn bowtie_no_bounds(_: &Ctx, t: &mut Tally) {
    let res = parse_structure(BOWTIE, "bowtie");
    t.case(
        "bowtie poset",
        matches!(res, Err(InputError::Lattice { source: LatticeError::NoBounds(_), .. })),
    );
}

// Recorded counterexamples to claims that fail as stated.

fn two_chain() -> FiniteLattice {
    FiniteLattice::chain(&["0", "1"])
}

fn zero_divisor_needs_bound(_: &Ctx, t: &mut Tally) {
    let q = QuasiQuantale::new(two_chain(), vec![0; 4], QqOptions::default()).expect("zero product");
    let r = law_report(&q);
    t.case(
        "zero product on the 2-chain: (1) holds, (2) fails",
        r.satisfies_one_dominates
            && r.zero_divisor.product_zero_iff
            && !r.zero_divisor.square_zero_implies_zero
            && !r.holds_zero_divisor,
    );
}

fn unit_top_commutative_not_meet(ctx: &Ctx, t: &mut Tally) {
    let Some(q) = ctx.qq("z12_ideals") else { return missing(t, "z12_ideals") };
    let r = law_report(q);
    let w = r.witness("commutative with e = 1");
    t.case(format!("z12_ideals: {w:?}"), r.holds_product_is_meet == Some(false) && w.is_some());
}

fn sparse_table_valid(ctx: &Ctx, t: &mut Tally) {
    let Some(q) = ctx.qq("chain3_top_idempotent") else { return missing(t, "chain3_top_idempotent") };
    let l = q.lattice();
    let top = l.top();
    let sparse = pairs(3).all(|(a, b)| q.mul(a, b) == if a == top && b == top { top } else { l.bottom() });
    t.case("only 1·1 = 1 is nonzero and the table is a quasi-quantale", sparse);
}

fn binary_without_zero_annihilation(_: &Ctx, t: &mut Tally) {
    let q = QuasiQuantale::new(two_chain(), vec![1; 4], QqOptions::default()).expect("constant top");
    let r = law_report(&q);
    t.case(
        "constant-top product: binary distributive, 0-annihilation fails",
        r.binary_distributive && !r.is_quantale && r.nonempty_join_distributive == Some(true),
    );
}

fn integrity(ctx: &Ctx, t: &mut Tally) {
    for e in &manifest().files {
        let issue = ctx.corpus.issues.iter().find(|i| i.file == e.file);
        t.case(
            format!("{}{}", e.file, issue.map(|i| format!(": {}", i.problem)).unwrap_or_default()),
            issue.is_none(),
        );
    }
    for e in &ctx.load_errors {
        t.fail(e);
    }
}

macro_rules! checks {
    ($($name:literal => $f:ident, $claim:literal;)*) => {
        pub const CHECKS: &[Check] = &[$(Check { name: $name, claim: $claim, run: $f }),*];
    };
}

checks! {
    "corpus.integrity" => integrity, "every corpus file matches its manifest digest and loads";
    "lattice.lattice_laws" => lattice_laws, "partial order, absorption, idempotence and commutativity of meet and join";
    "lattice.distributive_implies_modular" => distributive_implies_modular, "reported flags match brute force and distributive lattices are modular";
    "lattice.implication_iff_frame" => implication_iff_frame, "a lattice is a frame iff every implication exists; x ≤ (a ≻ b) ⟺ x ∧ b ≤ a";
    "lattice.hasse_edges" => hasse_edges, "Hasse diagrams of chain2, M3 and N5 have 1, 6 and 5 edges";
    "lattice.inflator_algebra" => inflator_algebra, "composition, join and meet of inflators satisfy the comparison laws";
    "lattice.closure_least_idempotent" => closure_least_idempotent, "d^∞ is the least idempotent inflator above d";
    "lattice.closure_monotone" => closure_monotone, "d ≤ d' implies d^∞ ≤ d'^∞";
    "lattice.closure_prenucleus_to_nucleus" => closure_to_nucleus, "d^∞ is a nucleus for stable inflators and pre-nuclei";
    "lattice.nuclei_frame" => nuclei_frame_idioms, "N(A) is a frame on every modular corpus lattice up to 7 elements";
    "lattice.nuclei_enumeration" => nuclei_enumeration, "nuclei from meet-closed subsets equal nuclei among all inflators";
    "lattice.nuclei_chain3" => nuclei_chain3, "N(3-chain) has 4 elements and is Boolean";
    "quantale.frame_iff_idempotent_monoid" => frame_iff_idempotent_monoid, "a quantale is a frame with ∧ iff 1 is a unit and every element is idempotent";
    "quantale.quasi_quantale_axioms" => quasi_quantale_axioms, "every corpus product is associative and monotone in each argument";
    "quantale.monotone_consequences" => monotone_consequences, "monotonicity consequences of the product";
    "quantale.one_dominates_bounds" => one_dominates_bounds, "with 1a ≤ a: xy ≤ y ∧ x1 and x0 = 0";
    "quantale.square_laws" => square_laws, "with 1a ≤ a: x² ≤ x1, x² ≤ x, (x∧y)² ≤ xy, (x1∧y)² ≤ xy";
    "quantale.zero_divisor" => zero_divisor, "zero-divisor conditions: equivalent under 1a ≤ a";
    "quantale.quantale_upgrade" => quantale_upgrade, "binary distributivity gives distributivity over every family";
    "quantale.meet_quasi_quantale" => meet_quasi_quantale, "a lattice with ∧ is a commutative quasi-quantale with unit 1";
    "quantale.inflator_classes" => inflator_classes, "implications between inflator classes hold on every inflator";
    "quantale.contextual_quotient" => contextual_quotient, "A_j is a quasi-quantale with left unit j(e) for contextual nuclei j";
    "quantale.multiplicative_quotient_frame" => multiplicative_quotient_frame, "A_d is a frame for multiplicative nuclei under the right join law";
    "quantale.idiomatic_nuclei_frame" => idiomatic_nuclei_frame, "NI(A) is a frame on every corpus quasi-quantale up to 6 elements";
    "spectrum.relative_primes" => relative_primes_check, "relative primes match brute force and ab ≤ a ∧ b on B";
    "spectrum.spectrum_topology" => spectrum_topology, "U(0) = ∅, U(1) = Spec and the opens form a topology";
    "spectrum.adjunction" => adjunction, "U(b) ⊆ W ⟺ b ≤ U_*(W)";
    "spectrum.mu_prenucleus" => mu_prenucleus, "μ(b) is the largest element of B below ⋀V(b) and μ is multiplicative";
    "spectrum.z12_spectrum" => z12_spectrum, "spectrum and μ of the ideals of Z/12";
    "module.product_laws" => product_laws_check, "order, join and fully invariant laws of the product N_M L";
    "module.fi_right_unit" => fi_right_unit, "N_M M = N for fully invariant N";
    "module.lambda_quasi_quantale" => lambda_quasi_quantale, "Λ(M) and Λ^fi(M) are quasi-quantales for certified modules";
    "module.nonassociative_example" => nonassociative_example, "finite search finds a module whose product is not associative";
    "module.generator_sufficiency" => generator_sufficiency_check, "N_M L over hom generators equals the sum over all homomorphisms";
    "module.preradicals" => preradicals, "α, ω and η on probes agree with full hom enumeration";
    "module.large_spectrum" => large_spectrum, "Spec(Λ^fi) is dense in LgSpec, Max ⊆ LgSpec, η^M_P(M) largest fi-prime below P";
    "module.duo_spectra" => duo_spectra, "duo modules have LgSpec = Spec_fi = Spec";
    "module.semiprime_fixed_points" => semiprime_fixed_points, "SP(M) is the fixed-point set of μ";
    "module.sp_frame" => sp_frame, "SP(M) is a frame isomorphic to the opens of LgSpec(M)";
    "module.sp_points" => sp_points, "pt(SP(M)) = Spec(Λ^fi(M))";
    "module.nil_below_rad" => nil_below_rad, "Nil_*(M) ≤ Rad(M)";
    "module.radical_values" => radical_values, "Nil_*(Z/12) = Rad(Z/12) = 6Z12, Rad(Klein four) = 0, |SP(Z/12)| = 4";
    "module.max_adjunction" => max_adjunction, "τ(0) = Rad(M), τ is a multiplicative nucleus and its fixed points form a frame inside SP(M)";
    "module.co_semisimple_frame" => co_semisimple_frame, "co-semisimple modules have Λ^fi(M) a frame";
    "module.fi_simple_cogenerated" => fi_simple_cogenerated, "FI-simple modules are cogenerated by their nonzero factors";
    "module.klein_classification" => klein_classification, "Klein four is FI-simple, prime and co-semisimple with Λ^fi a frame";
    "neg.n5_not_modular" => n5_not_modular, "N5 fails modularity with a witness";
    "neg.m3_not_distributive" => m3_not_distributive, "M3 is modular and fails distributivity with a witness";
    "neg.broken_product_rejected" => broken_product_rejected, "the broken product table is rejected with a witness";
    "neg.z4_zero_not_semiprime" => z4_zero_not_semiprime, "0 is not semiprime in Z/4";
    "neg.bowtie_no_bounds" => bowtie_no_bounds, "the bowtie poset is rejected for lack of bounds";
    "finding.zero_divisor_needs_bound" => zero_divisor_needs_bound, "without x ≤ x1 the first zero-divisor condition does not imply the second";
    "finding.unit_top_commutative_not_meet" => unit_top_commutative_not_meet, "a commutative product with unit 1 need not be ∧";
    "finding.sparse_table_valid" => sparse_table_valid, "the 3-chain table with only 1·1 = 1 is a valid quasi-quantale";
    "finding.binary_without_zero_annihilation" => binary_without_zero_annihilation, "binary distributivity does not force 0-annihilation";
}

pub fn run_checks(ctx: &Ctx, checks: &[Check]) -> VerificationRun {
    let results: Vec<CheckResult> = checks
        .iter()
        .map(|c| {
            let mut t = Tally::default();
            (c.run)(ctx, &mut t);
            if t.instances == 0 {
                t.failures.push("no applicable instance".into());
            }
            CheckResult {
                name: c.name,
                claim: c.claim,
                status: if t.failures.is_empty() { Status::Pass } else { Status::Fail },
                instances: t.instances,
                failures: t.failures,
                witnesses: t.witnesses,
            }
        })
        .collect();
    let required = manifest().required_checks;
    let missing: Vec<String> =
        required.iter().filter(|r| !results.iter().any(|c| c.name == r.as_str())).cloned().collect();
    let unlisted: Vec<String> =
        results.iter().filter(|c| !required.iter().any(|r| r == c.name)).map(|c| c.name.to_string()).collect();
    let passed = ctx.corpus.issues.is_empty()
        && missing.is_empty()
        && unlisted.is_empty()
        && results.iter().all(|r| r.status == Status::Pass);
    VerificationRun {
        schema: SCHEMA,
        corpus: manifest().files.into_iter().map(|f| f.file).collect(),
        integrity: ctx.corpus.issues.clone(),
        results,
        missing,
        unlisted,
        passed,
    }
}

/// Runs every check, minus those named in `omit`.
pub fn run_verification(source: CorpusSource, omit: &[String]) -> VerificationRun {
    let ctx = Ctx::new(load_corpus(source));
    let checks: Vec<Check> = CHECKS
        .iter()
        .filter(|c| !omit.iter().any(|o| o == c.name))
        .copied()
        .collect();
    run_checks(&ctx, &checks)
}
