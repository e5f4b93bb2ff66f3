//! Semiprime submodules, the large spectrum, radicals and module
//! classification, plus the product-law battery for `N_M L`.

use super::hom::{all_homs_into, hom_count_into, hom_generators_into, image_sum, preimage_meet};
use super::preradical::eta_at_m;
use super::submodule::{lambda_quasi_quantales, Lambdas, SubmoduleLattice};
use super::{FiniteModule, ModuleError};
use crate::bits::{bit, has, mask_iter};
use crate::inflator::{classify, enumerate_nuclei, Carrier, Family, Inflator};
use crate::lattice::{structure_report, FiniteLattice};
use crate::quantale::{QqOptions, QuasiQuantale};
use crate::report::Witness;
use crate::spectrum::{mu, relative_primes, topology};
use serde::Serialize;

/// Full hom enumeration is used up to this many homomorphisms.
pub const HOM_ENUMERATION_LIMIT: usize = 64;

/// Collects law outcomes. Strict checks abort with the witness; lenient
/// ones (hypotheses not certified) record it as a finding.
struct Checker {
    strict: bool,
    findings: Vec<Witness>,
}

impl Checker {
    fn check(&mut self, ok: bool, strict: bool, w: impl FnOnce() -> Witness) -> Result<bool, ModuleError> {
        if ok {
            return Ok(true);
        }
        let w = w();
        if strict && self.strict {
            return Err(ModuleError::LawFailure(w));
        }
        self.findings.push(w);
        Ok(false)
    }
}

fn wit(sl: &SubmoduleLattice, law: &str, idx: &[usize]) -> Witness {
    Witness::new(law, idx.to_vec(), sl.lattice().names_of(idx))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductLawReport {
    /// `K ⊆ K' ⟹ K_M X ⊆ K'_M X`.
    pub monotone_left: bool,
    /// `Y ⊆ X ⟹ K_M Y ⊆ K_M X`.
    pub monotone_right: bool,
    /// `M_M X ⊆ X`.
    pub top_left_deflates: bool,
    /// `K_M X = 0 ⟺ f(K) = 0` for every `f ∈ Hom(M, X)`.
    pub zero_iff_homs_kill: bool,
    /// Whether the zero criterion was checked against every homomorphism for all pairs.
    pub zero_iff_homs_exhaustive: bool,
    /// `0_M X = 0`.
    pub zero_left_annihilates: bool,
    /// `Σ K_M Xᵢ ⊆ K_M(Σ Xᵢ)` over every family.
    pub sum_right_subdistributes: bool,
    /// `(Σ Kᵢ)_M N = Σ Kᵢ_M N` over every family.
    pub sum_left_distributes: bool,
    /// `N_M M = N` for every fully invariant `N`.
    pub fi_right_unit: bool,
    /// `N_M L` is associative over all triples.
    pub associative: bool,
    pub witnesses: Vec<Witness>,
}

impl ProductLawReport {
    pub fn all_hold(&self) -> bool {
        self.monotone_left && self.monotone_right && self.top_left_deflates && self.zero_iff_homs_kill && self.zero_left_annihilates && self.sum_right_subdistributes && self.sum_left_distributes
    }
}

pub fn product_laws(sl: &SubmoduleLattice) -> ProductLawReport {
    let l = sl.lattice();
    let n = l.len();
    let p = |a: usize, b: usize| sl.product(a, b);
    let mut witnesses = Vec::new();
    let mut first = |law: &str, hit: Option<Vec<usize>>| match hit {
        Some(idx) => {
            witnesses.push(wit(sl, law, &idx));
            false
        }
        None => true,
    };
    let pairs = || l.elements().flat_map(|a| l.elements().map(move |b| (a, b)));
    let triples = || pairs().flat_map(|(a, b)| l.elements().map(move |c| (a, b, c)));

    let monotone_left = first(
        "K ⊆ K' ⟹ K_M X ⊆ K'_M X",
        triples().find(|&(k, k2, x)| l.leq(k, k2) && !l.leq(p(k, x), p(k2, x))).map(|(a, b, c)| vec![a, b, c]),
    );
    let monotone_right = first(
        "Y ⊆ X ⟹ K_M Y ⊆ K_M X",
        triples().find(|&(k, y, x)| l.leq(y, x) && !l.leq(p(k, y), p(k, x))).map(|(a, b, c)| vec![a, b, c]),
    );
    let top_left_deflates = first("M_M X ⊆ X", l.elements().find(|&x| !l.leq(p(l.top(), x), x)).map(|x| vec![x]));
    let m = sl.module();
    let mut zero_iff_homs_exhaustive = true;
    let zero_iff_hit = pairs().find(|&(k, x)| {
        let kills = match all_homs_into(m, sl.set(x), HOM_ENUMERATION_LIMIT) {
            Some(all) => all.iter().all(|f| f.image(sl.set(k)) == m.trivial()),
            None => {
                zero_iff_homs_exhaustive = false;
                hom_generators_into(m, sl.set(x), &m.trivial())
                    .iter()
                    .all(|f| f.image(sl.set(k)) == m.trivial())
            }
        };
        (p(k, x) == l.bottom()) != kills
    });
    let zero_iff_homs_kill = first("K_M X = 0 ⟺ f(K) = 0 for all f", zero_iff_hit.map(|(a, b)| vec![a, b]));
    let zero_left_annihilates = first("0_M X = 0", l.elements().find(|&x| p(l.bottom(), x) != l.bottom()).map(|x| vec![x]));

    // Families: every subset when small, otherwise pairs and the empty family.
    let families: Vec<u64> = if n <= 12 {
        (0..1u64 << n).collect()
    } else {
        let mut f = vec![0u64];
        f.extend(pairs().map(|(a, b)| bit(a) | bit(b)));
        f
    };
    let sum_right_subdistributes = first(
        "Σ K_M Xᵢ ⊆ K_M(Σ Xᵢ)",
        l.elements().find_map(|k| {
            families.iter().find_map(|&fam| {
                let lhs = l.join_all(mask_iter(fam).map(|x| p(k, x)));
                (!l.leq(lhs, p(k, l.join_mask(fam)))).then(|| {
                    let mut v = vec![k];
                    v.extend(mask_iter(fam));
                    v
                })
            })
        }),
    );
    let sum_left_distributes = first(
        "(Σ Kᵢ)_M N = Σ Kᵢ_M N",
        l.elements().find_map(|x| {
            families.iter().find_map(|&fam| {
                let rhs = l.join_all(mask_iter(fam).map(|k| p(k, x)));
                (p(l.join_mask(fam), x) != rhs).then(|| {
                    let mut v: Vec<usize> = mask_iter(fam).collect();
                    v.push(x);
                    v
                })
            })
        }),
    );
    let fi_right_unit = first(
        "N_M M = N for fully invariant N",
        mask_iter(sl.fi_mask()).find(|&x| p(x, l.top()) != x).map(|x| vec![x]),
    );
    let associative = first(
        "(N_M L)_M K = N_M (L_M K)",
        triples().find(|&(a, b, c)| p(p(a, b), c) != p(a, p(b, c))).map(|(a, b, c)| vec![a, b, c]),
    );
    ProductLawReport {
        monotone_left,
        monotone_right,
        top_left_deflates,
        zero_iff_homs_kill,
        zero_iff_homs_exhaustive,
        zero_left_annihilates,
        sum_right_subdistributes,
        sum_left_distributes,
        fi_right_unit,
        associative,
        witnesses,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SufficiencyReport {
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
    pub mismatches: Vec<Witness>,
}

/// Compares `N_M L` summed over hom generators with the sum over every
/// homomorphism, for all pairs with `|Hom(M, L)| ≤ limit`.
pub fn generator_sufficiency(sl: &SubmoduleLattice, limit: usize) -> SufficiencyReport {
    let m = sl.module();
    let mut report = SufficiencyReport {
        pairs_checked: 0,
        pairs_skipped: 0,
        mismatches: Vec::new(),
    };
    for l in 0..sl.len() {
        if hom_count_into(m, sl.set(l)) > limit as u64 {
            report.pairs_skipped += sl.len();
            continue;
        }
        let all = all_homs_into(m, sl.set(l), limit).expect("count checked");
        for n in 0..sl.len() {
            report.pairs_checked += 1;
            let full = image_sum(m, &all, sl.set(n));
            if full != *sl.set(sl.product(n, l)) {
                report.mismatches.push(wit(sl, "Σ over generators = Σ over Hom(M, L)", &[n, l]));
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectraReport {
    pub lg_spec: Vec<String>,
    pub spec_fi: Vec<String>,
    /// Primes of `Λ(M)` itself; `None` when `N_M M ⊆ N` fails for some `N`.
    pub spec_full: Option<Vec<String>>,
    pub spec_fi_in_lg_spec: bool,
    pub dense: bool,
    pub duo_coincide: Option<bool>,
    pub maximal_in_lg_spec: bool,
    /// `η^M_P(M)` is the largest member of `Spec(Λ^fi(M))` below each large prime `P`.
    pub eta_largest_prime: bool,
    pub opens: usize,
    #[serde(skip)]
    pub lg_mask: u64,
    #[serde(skip)]
    pub fi_spec_mask: u64,
    #[serde(skip)]
    pub mu_table: Vec<usize>,
    #[serde(skip)]
    pub u_table: Vec<u64>,
    #[serde(skip)]
    pub open_sets: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiprimeReport {
    pub semiprime: Vec<String>,
    pub sp: Vec<String>,
    pub sp_equals_mu_fixed: bool,
    pub sp_is_frame: bool,
    pub sp_is_boolean: bool,
    pub sp_points: Vec<String>,
    pub points_equal_spec_fi: bool,
    pub sp_iso_opens: bool,
    /// Booleanness of the nuclei frame of `SP(M)`; reported only.
    pub nuclei_of_sp_boolean: Option<bool>,
    #[serde(skip)]
    pub sp_mask: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub nil_star: String,
    pub rad: String,
    pub maximal: Vec<String>,
    pub nil_star_below_rad: bool,
    pub tau_zero_is_rad: bool,
    pub tau_multiplicative_nucleus: bool,
    pub r_fixed: Vec<String>,
    pub r_is_frame: bool,
    pub r_within_sp: bool,
    /// Closed under the meets and joins of `SP(M)`; reported only.
    pub r_subframe_of_sp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub prime: bool,
    pub fi_simple: bool,
    pub duo: bool,
    pub co_semisimple: bool,
    pub semiprime_module: bool,
    /// Checked when co-semisimple.
    pub lambda_fi_frame: Option<bool>,
    /// `⋂{ker f : f ∈ Hom(M, M/N)} = 0` for every proper `N`; checked when FI-simple.
    pub cogenerated_by_factors: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleAnalysis {
    pub factors: Vec<u64>,
    pub size: usize,
    pub certified: bool,
    pub submodules: Vec<String>,
    pub fully_invariant: Vec<String>,
    pub maximal: Vec<String>,
    pub product_rows: Vec<Vec<String>>,
    pub laws: ProductLawReport,
    pub sufficiency: SufficiencyReport,
    /// Absent when `Λ(M)` fails to be a quasi-quantale (reported in `findings`).
    pub spectra: Option<SpectraReport>,
    pub semiprime: Option<SemiprimeReport>,
    pub radicals: Option<RadicalReport>,
    pub classification: Option<Classification>,
    pub findings: Vec<Witness>,
}

fn spectra_impl(sl: &SubmoduleLattice, lq: &Lambdas, ck: &mut Checker) -> Result<SpectraReport, ModuleError> {
    let l = sl.lattice();
    let space = topology(&lq.lambda)?;
    let nu = mu(&space)?;
    let lg = space.points();
    let fi_pts = relative_primes(&lq.lambda_fi)?;
    let fi_spec = mask_iter(fi_pts).fold(0, |m, i| m | bit(lq.fi_embed[i]));
    let full = QuasiQuantale::new(l.clone(), sl.product_table().to_vec(), QqOptions::default())?;
    let spec_full = relative_primes(&full).ok();

    let spec_fi_in_lg_spec = ck.check(fi_spec & !lg == 0, true, || {
        wit(sl, "Spec(Λ^fi) ⊆ LgSpec", &mask_iter(fi_spec & !lg).collect::<Vec<_>>())
    })?;
    let sparse = mask_iter(sl.fi_mask()).find(|&b| space.u(b) != 0 && space.u(b) & fi_spec == 0);
    let dense = ck.check(sparse.is_none(), true, || wit(sl, "Spec(Λ^fi) dense in LgSpec", &[sparse.unwrap()]))?;
    let duo = sl.fi_mask() == l.all_mask();
    let duo_coincide = if duo {
        let ok = spec_full == Some(lg) && fi_spec == lg;
        Some(ck.check(ok, true, || wit(sl, "duo: Spec(Λ^fi) = LgSpec = Spec(Λ)", &[]))?)
    } else {
        None
    };
    let max = sl.maximal_mask();
    let maximal_in_lg_spec = ck.check(max & !lg == 0, true, || {
        wit(sl, "Max(M) ⊆ LgSpec", &mask_iter(max & !lg).collect::<Vec<_>>())
    })?;
    let bad_eta = mask_iter(lg).find(|&p| {
        let e = eta_at_m(sl, p);
        let below: Vec<usize> = mask_iter(fi_spec).filter(|&q| l.leq(q, p)).collect();
        !has(fi_spec, e) || !l.leq(e, p) || below.iter().any(|&q| !l.leq(q, e))
    });
    let eta_largest_prime = ck.check(bad_eta.is_none(), true, || {
        wit(sl, "η^M_P(M) largest fi-prime below P", &[bad_eta.unwrap()])
    })?;

    let mut mu_table = vec![usize::MAX; l.len()];
    let mut u_table = vec![0u64; l.len()];
    for b in mask_iter(sl.fi_mask()) {
        mu_table[b] = nu.apply(b).expect("μ defined on B");
        u_table[b] = space.u(b);
    }
    Ok(SpectraReport {
        lg_spec: sl.names_of_mask(lg),
        spec_fi: sl.names_of_mask(fi_spec),
        spec_full: spec_full.map(|m| sl.names_of_mask(m)),
        spec_fi_in_lg_spec,
        dense,
        duo_coincide,
        maximal_in_lg_spec,
        eta_largest_prime,
        opens: space.opens().len(),
        lg_mask: lg,
        fi_spec_mask: fi_spec,
        mu_table,
        u_table,
        open_sets: space.opens().to_vec(),
    })
}

/// Semiprime: fully invariant `N ≠ M` with `K_M K ≤ N ⟹ K ≤ N` for fully invariant `K`.
pub fn semiprime_mask(sl: &SubmoduleLattice) -> u64 {
    let l = sl.lattice();
    mask_iter(sl.fi_mask())
        .filter(|&n| n != l.top())
        .filter(|&n| mask_iter(sl.fi_mask()).all(|k| !l.leq(sl.product(k, k), n) || l.leq(k, n)))
        .fold(0, |m, n| m | bit(n))
}

fn meet_irreducible(l: &FiniteLattice) -> u64 {
    l.elements()
        .filter(|&p| p != l.top())
        .filter(|&p| l.elements().all(|x| l.elements().all(|y| !l.leq(l.meet(x, y), p) || l.leq(x, p) || l.leq(y, p))))
        .fold(0, |m, p| m | bit(p))
}

fn semiprime_impl(sl: &SubmoduleLattice, sp: &SpectraReport, ck: &mut Checker) -> Result<SemiprimeReport, ModuleError> {
    let l = sl.lattice();
    let semi = semiprime_mask(sl);
    let sp_mask = semi | bit(l.top());
    let fixed = mask_iter(sl.fi_mask()).filter(|&b| sp.mu_table[b] == b).fold(0, |m, b| m | bit(b));
    let sp_equals_mu_fixed = ck.check(fixed == sp_mask, true, || {
        wit(sl, "SP(M) = Fix(μ)", &mask_iter(fixed ^ sp_mask).collect::<Vec<_>>())
    })?;
    let (sp_lat, embed) = l.induced(sp_mask)?;
    let rep = structure_report(&sp_lat);
    let sp_is_frame = ck.check(rep.is_frame, true, || wit(sl, "SP(M) is a frame", &[]))?;
    let pts = mask_iter(meet_irreducible(&sp_lat)).fold(0, |m, i| m | bit(embed[i]));
    let points_equal_spec_fi = ck.check(pts == sp.fi_spec_mask, true, || {
        wit(sl, "pt(SP(M)) = Spec(Λ^fi(M))", &mask_iter(pts ^ sp.fi_spec_mask).collect::<Vec<_>>())
    })?;
    // N ↦ U(N) must be an order isomorphism SP(M) → O(LgSpec(M)).
    let images: Vec<u64> = embed.iter().map(|&n| sp.u_table[n]).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let bijective = sorted == sp.open_sets;
    let order_ok = (0..embed.len()).all(|i| {
        (0..embed.len()).all(|j| sp_lat.leq(i, j) == (images[i] & !images[j] == 0))
    });
    let sp_iso_opens = ck.check(bijective && order_ok, true, || wit(sl, "SP(M) ≅ O(LgSpec(M))", &[]))?;
    let nuclei_of_sp_boolean = enumerate_nuclei(Carrier::Lattice(&sp_lat), Family::Nuclei, 8)
        .ok()
        .and_then(|f| f.report.map(|r| r.is_boolean));
    Ok(SemiprimeReport {
        semiprime: sl.names_of_mask(semi),
        sp: sl.names_of_mask(sp_mask),
        sp_equals_mu_fixed,
        sp_is_frame,
        sp_is_boolean: rep.is_boolean,
        sp_points: sl.names_of_mask(pts),
        points_equal_spec_fi,
        sp_iso_opens,
        nuclei_of_sp_boolean,
        sp_mask,
    })
}

fn radicals_impl(
    sl: &SubmoduleLattice,
    lq: &Lambdas,
    sp: &SpectraReport,
    semi: &SemiprimeReport,
    ck: &mut Checker,
) -> Result<RadicalReport, ModuleError> {
    let l = sl.lattice();
    let max = sl.maximal_mask();
    let nil = sl.intersect(sp.fi_spec_mask);
    let rad = sl.intersect(max);
    let nil_star_below_rad = ck.check(l.leq(nil, rad), true, || wit(sl, "Nil_*(M) ≤ Rad(M)", &[nil, rad]))?;
    let fi = sl.fi_mask();
    let m_of = |n: usize| mask_iter(max).filter(|&x| !l.leq(n, x)).fold(0u64, |m, x| m | bit(x));
    let tau: Vec<usize> = lq
        .fi_embed
        .iter()
        .map(|&n| l.join_all(mask_iter(fi).filter(|&k| m_of(k) & !m_of(n) == 0)))
        .collect();
    let tau_zero_is_rad = ck.check(tau[0] == rad && lq.fi_embed[0] == l.bottom(), true, || {
        wit(sl, "τ(0) = Rad(M)", &[tau[0], rad])
    })?;
    let mut back = vec![usize::MAX; l.len()];
    for (i, &x) in lq.fi_embed.iter().enumerate() {
        back[x] = i;
    }
    let tau_local: Vec<usize> = tau.iter().map(|&t| back[t]).collect();
    let tau_inflator = Inflator::new(Carrier::Quantale(&lq.lambda_fi), tau_local);
    let class = tau_inflator.as_ref().ok().map(classify);
    let tau_ok = class.as_ref().is_some_and(|c| c.nucleus && c.multiplicative == Some(true));
    let tau_multiplicative_nucleus = ck.check(tau_ok, true, || {
        match class.as_ref().and_then(|c| c.witnesses.first().cloned()) {
            Some(w) => w,
            None => wit(sl, "τ is an inflator", &[]),
        }
    })?;
    let r_mask = lq.fi_embed.iter().zip(&tau).filter(|(n, t)| n == t).fold(0, |m, (&n, _)| m | bit(n));
    let (r_lat, _) = l.induced(r_mask)?;
    let r_is_frame = ck.check(structure_report(&r_lat).is_frame, true, || wit(sl, "R(M) is a frame", &[]))?;
    let r_within_sp = ck.check(r_mask & !semi.sp_mask == 0, true, || {
        wit(sl, "R(M) ⊆ SP(M)", &mask_iter(r_mask & !semi.sp_mask).collect::<Vec<_>>())
    })?;
    let r_subframe_of_sp = mask_iter(r_mask).all(|a| {
        mask_iter(r_mask).all(|b| has(r_mask, l.meet(a, b)) && has(r_mask, sp.mu_table[l.join(a, b)]))
    });
    Ok(RadicalReport {
        nil_star: sl.name(nil).to_string(),
        rad: sl.name(rad).to_string(),
        maximal: sl.names_of_mask(max),
        nil_star_below_rad,
        tau_zero_is_rad,
        tau_multiplicative_nucleus,
        r_fixed: sl.names_of_mask(r_mask),
        r_is_frame,
        r_within_sp,
        r_subframe_of_sp,
    })
}

fn classify_impl(
    sl: &SubmoduleLattice,
    lq: &Lambdas,
    sp: &SpectraReport,
    semi: &SemiprimeReport,
    ck: &mut Checker,
) -> Result<Classification, ModuleError> {
    let l = sl.lattice();
    let m = sl.module();
    let (zero, top) = (l.bottom(), l.top());
    let fi = sl.fi_mask();
    let fi_simple = fi == bit(zero) | bit(top);
    let duo = fi == l.all_mask();
    let max = sl.maximal_mask();
    let co_semisimple = l
        .elements()
        .filter(|&n| n != top)
        .all(|n| sl.intersect(mask_iter(max).filter(|&x| l.leq(n, x)).fold(0, |a, x| a | bit(x))) == n);
    let lambda_fi_frame = if co_semisimple {
        let f = structure_report(lq.lambda_fi.lattice()).is_frame;
        Some(ck.check(f, true, || wit(sl, "co-semisimple ⟹ Λ^fi(M) is a frame", &[]))?)
    } else {
        None
    };
    let cogenerated_by_factors = if fi_simple {
        let bad = l.elements().filter(|&n| n != top).find(|&n| {
            let gens = hom_generators_into(m, &m.all(), sl.set(n));
            preimage_meet(m, &gens, sl.set(n)) != m.trivial()
        });
        Some(ck.check(bad.is_none(), true, || {
            wit(sl, "FI-simple ⟹ ⋂ ker(M → M/N) = 0", &[bad.unwrap()])
        })?)
    } else {
        None
    };
    Ok(Classification {
        prime: has(sp.fi_spec_mask, zero),
        fi_simple,
        duo,
        co_semisimple,
        semiprime_module: has(semi.sp_mask, zero) && zero != top,
        lambda_fi_frame,
        cogenerated_by_factors,
    })
}

/// Runs the whole module suite. Law checks that rest on the projectivity
/// hypothesis abort on certified modules and become findings otherwise.
pub fn analyze_module(module: FiniteModule) -> Result<ModuleAnalysis, ModuleError> {
    let certified = module.is_certified();
    let sl = SubmoduleLattice::new(module)?;
    analyze_lattice(&sl, certified)
}

pub fn analyze_lattice(sl: &SubmoduleLattice, strict: bool) -> Result<ModuleAnalysis, ModuleError> {
    let l = sl.lattice();
    let laws = product_laws(sl);
    let sufficiency = generator_sufficiency(sl, HOM_ENUMERATION_LIMIT);
    let mut ck = Checker {
        strict,
        findings: Vec::new(),
    };
    if !sufficiency.mismatches.is_empty() {
        return Err(ModuleError::LawFailure(sufficiency.mismatches[0].clone()));
    }
    ck.check(laws.all_hold(), true, || laws.witnesses[0].clone())?;
    ck.check(laws.fi_right_unit, true, || laws.witnesses[0].clone())?;
    ck.check(laws.associative, true, || laws.witnesses.last().unwrap().clone())?;

    let n = l.len();
    let product_rows = (0..n)
        .map(|a| (0..n).map(|b| sl.name(sl.product(a, b)).to_string()).collect())
        .collect();
    let mut analysis = ModuleAnalysis {
        factors: sl.module().factors().to_vec(),
        size: sl.module().size(),
        certified: sl.module().is_certified(),
        submodules: l.names().to_vec(),
        fully_invariant: sl.names_of_mask(sl.fi_mask()),
        maximal: sl.names_of_mask(sl.maximal_mask()),
        product_rows,
        laws,
        sufficiency,
        spectra: None,
        semiprime: None,
        radicals: None,
        classification: None,
        findings: Vec::new(),
    };
    let lq = match lambda_quasi_quantales(sl) {
        Ok(lq) => lq,
        Err(ModuleError::AssociativityFailure(_)) if !strict => {
            analysis.findings = ck.findings;
            return Ok(analysis);
        }
        Err(e) => return Err(e),
    };
    let spectra = spectra_impl(sl, &lq, &mut ck)?;
    let semiprime = semiprime_impl(sl, &spectra, &mut ck)?;
    let radicals = radicals_impl(sl, &lq, &spectra, &semiprime, &mut ck)?;
    let classification = classify_impl(sl, &lq, &spectra, &semiprime, &mut ck)?;
    analysis.spectra = Some(spectra);
    analysis.semiprime = Some(semiprime);
    analysis.radicals = Some(radicals);
    analysis.classification = Some(classification);
    analysis.findings = ck.findings;
    Ok(analysis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: &[u64]) -> ModuleAnalysis {
        analyze_module(FiniteModule::new(f).unwrap()).unwrap()
    }

    #[test]
    fn z12_suite() {
        let a = run(&[12]);
        let sp = a.spectra.as_ref().unwrap();
        assert_eq!(sp.lg_spec, vec!["3Z12", "2Z12"]);
        assert_eq!(sp.spec_fi, sp.lg_spec);
        assert_eq!(sp.duo_coincide, Some(true));
        let semi = a.semiprime.as_ref().unwrap();
        assert_eq!(semi.sp, vec!["6Z12", "3Z12", "2Z12", "M"]);
        assert!(semi.sp_is_boolean);
        let r = a.radicals.as_ref().unwrap();
        assert_eq!(r.nil_star, "6Z12");
        assert_eq!(r.rad, "6Z12");
        assert!(a.findings.is_empty());
    }

    #[test]
    fn klein_suite() {
        let a = run(&[2, 2]);
        let sp = a.spectra.as_ref().unwrap();
        assert_eq!(sp.lg_spec, vec!["0", "<(1,0)>", "<(0,1)>", "<(1,1)>"]);
        assert_eq!(sp.spec_fi, vec!["0"]);
        assert!(sp.dense);
        let c = a.classification.as_ref().unwrap();
        assert!(c.fi_simple && c.prime && !c.duo && c.co_semisimple);
        assert_eq!(c.lambda_fi_frame, Some(true));
        assert_eq!(c.cogenerated_by_factors, Some(true));
        let r = a.radicals.as_ref().unwrap();
        assert_eq!((r.nil_star.as_str(), r.rad.as_str()), ("0", "0"));
        assert_eq!(a.semiprime.as_ref().unwrap().sp, vec!["0", "M"]);
    }

    #[test]
    fn z4_suite() {
        let a = run(&[4]);
        assert_eq!(a.semiprime.as_ref().unwrap().sp, vec!["2Z4", "M"]);
        assert_eq!(a.spectra.as_ref().unwrap().lg_spec, vec!["2Z4"]);
        let c = a.classification.as_ref().unwrap();
        assert!(c.duo && !c.co_semisimple && !c.prime);
        let r = a.radicals.as_ref().unwrap();
        assert_eq!((r.nil_star.as_str(), r.rad.as_str()), ("2Z4", "2Z4"));
    }

    #[test]
    fn z6_co_semisimple() {
        let a = analyze_module(FiniteModule::from_cyclic_factors(&[2, 3]).unwrap()).unwrap();
        let c = a.classification.as_ref().unwrap();
        assert!(c.co_semisimple);
        assert_eq!(c.lambda_fi_frame, Some(true));
        assert_eq!(a.fully_invariant.len(), 4);
    }

    #[test]
    fn generator_sufficiency_holds() {
        for f in [&[12][..], &[4], &[2, 2], &[6], &[2, 4], &[2, 2, 2]] {
            let sl = SubmoduleLattice::from_factors(f).unwrap();
            let r = generator_sufficiency(&sl, HOM_ENUMERATION_LIMIT);
            assert!(r.mismatches.is_empty(), "{f:?}");
            assert!(r.pairs_checked > 0);
        }
    }
}
