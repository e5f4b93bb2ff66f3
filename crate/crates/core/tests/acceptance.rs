//! Acceptance criteria 1-8. Each criterion recomputes its claims with the
//! brute-force oracles in `common` and compares them with the library.
//! Runs without the test harness so every criterion prints one line.

mod common;

use common::*;
use quantlat::corpus::{load_corpus, CorpusSource};
use quantlat::inflator::{
    closure_of, enumerate_nuclei, quotient, quotient_lattice, Carrier, Family, FrameClaim, Inflator,
    MAX_ENUMERATION_CAP,
};
use quantlat::input::InputError;
use quantlat::lattice::structure_report;
use quantlat::module::theory::semiprime_mask;
use quantlat::quantale::{law_report, QuantaleError};
use quantlat::spectrum::{mu, topology};
use quantlat::verify::{run_checks, Ctx, ModuleCtx, CHECKS};
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Ctx) -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn boolean(o: &Order) -> bool {
    o.is_lattice()
        && o.distributive()
        && (0..o.n).all(|a| (0..o.n).any(|b| o.meet(a, b) == o.bottom() && o.join(a, b) == o.top()))
}

fn tables<'a>(ds: impl IntoIterator<Item = &'a Inflator<'a>>) -> Vec<Map> {
    let mut v: Vec<Map> = ds.into_iter().map(|d| d.table().to_vec()).collect();
    v.sort();
    v
}

fn law_battery(ctx: &Ctx) -> Outcome {
    let mut count = 0;
    for q in ctx.qqs.iter().filter(|q| q.value.len() <= 8) {
        let t = Table::of(&q.value);
        let o = &t.o;
        let (n, top, zero) = (t.n, o.top(), o.bottom());
        if !(0..n).all(|a| o.le(t.mul(top, a), a)) {
            continue;
        }
        count += 1;
        let name = &q.name;
        ensure(t.monotone(), || format!("{name}: monotonicity"))?;
        for (x, y) in pairs(n) {
            let xy = t.mul(x, y);
            let x1 = t.mul(x, top);
            let sq = |a: usize| t.mul(a, a);
            ensure(o.le(xy, o.meet(y, x1)), || format!("{name}: xy ≤ y ∧ x1 at {x},{y}"))?;
            ensure(o.le(sq(o.meet(x, y)), xy), || format!("{name}: (x∧y)² ≤ xy at {x},{y}"))?;
            ensure(o.le(sq(o.meet(x1, y)), xy), || format!("{name}: (x1∧y)² ≤ xy at {x},{y}"))?;
        }
        for x in 0..n {
            ensure(t.mul(x, zero) == zero, || format!("{name}: x0 = 0 at {x}"))?;
            ensure(o.le(t.mul(x, x), x), || format!("{name}: x² ≤ x at {x}"))?;
            ensure(o.le(t.mul(x, x), t.mul(x, top)), || format!("{name}: x² ≤ x1 at {x}"))?;
        }
        let first = pairs(n).all(|(x, y)| (t.mul(x, y) == zero) == (o.meet(t.mul(x, top), y) == zero));
        let second = (0..n).all(|x| t.mul(x, x) != zero || x == zero);
        ensure(first == second, || format!("{name}: zero-divisor conditions differ ({first} vs {second})"))?;
        let r = law_report(&q.value);
        ensure(
            r.zero_divisor.product_zero_iff == first
                && r.zero_divisor.square_zero_implies_zero == second
                && r.holds_zero_divisor
                && r.holds_one_dominates_bounds == Some(true)
                && r.holds_square == Some(true)
                && r.holds_monotone,
            || format!("{name}: library flags disagree with the oracle"),
        )?;
    }
    ensure(count > 0, || "no structure with 1a ≤ a".into())?;
    Ok(format!("{count} quasi-quantales with 1a ≤ a, 0 counterexamples"))
}

fn quantale_upgrade(ctx: &Ctx) -> Outcome {
    let (mut quantales, mut frames) = (0, 0);
    for q in &ctx.qqs {
        let name = &q.name;
        let t = Table::of(&q.value);
        let o = &t.o;
        ensure(t.associative() && t.monotone(), || format!("{name}: not a quasi-quantale"))?;
        let binary = t.binary_distributive();
        let full = t.full_distributive();
        ensure(!binary || full, || format!("{name}: binary distributive but not distributive over every subset"))?;
        let r = law_report(&q.value);
        ensure(r.binary_distributive == binary, || format!("{name}: binary flag"))?;
        ensure(r.is_quantale == full && (!binary || r.full_join_distributive == Some(true)), || {
            format!("{name}: quantale flag {} vs oracle {full}", r.is_quantale)
        })?;
        if full {
            quantales += 1;
            let top = o.top();
            let idempotent_monoid = t.two_sided_unit(top) && (0..t.n).all(|a| t.mul(a, a) == a);
            let frame_with_meet = o.distributive() && pairs(t.n).all(|(a, b)| t.mul(a, b) == o.meet(a, b));
            ensure(idempotent_monoid == frame_with_meet, || format!("{name}: frame ⟺ idempotent monoid fails"))?;
            frames += usize::from(frame_with_meet);
        }
        ensure(r.holds_frame_iff_idempotent_monoid, || format!("{name}: library frame flag"))?;
    }
    Ok(format!("{} structures, {quantales} quantales, {frames} frames, 0 counterexamples", ctx.qqs.len()))
}

fn nucleus_calculus(ctx: &Ctx) -> Outcome {
    let mut inflators = 0;
    for l in ctx.lattices.iter().filter(|l| l.value.len() <= 8) {
        let name = &l.name;
        let o = Order::of(&l.value);
        let Some(all) = all_inflators(&o, 5000) else { continue };
        inflators += all.len();
        let closed: Vec<Map> = all
            .iter()
            .map(|d| {
                let inf = Inflator::new(Carrier::Lattice(&l.value), d.clone()).expect("oracle inflator");
                closure_of(&inf).inflator.table().to_vec()
            })
            .collect();
        for (d, c) in all.iter().zip(&closed) {
            ensure(*c == iterate_to_fixpoint(d), || format!("{name}: closure of {d:?} is {c:?}"))?;
            ensure(idempotent(c) && map_le(&o, d, c) && is_inflator(&o, c), || format!("{name}: closure {c:?}"))?;
            if stable(&o, d) || preserves_meets(&o, d) {
                ensure(is_nucleus(&o, c), || format!("{name}: closure of {d:?} is not a nucleus"))?;
            }
        }
        for (i, j) in pairs(all.len()) {
            if map_le(&o, &all[i], &all[j]) {
                ensure(map_le(&o, &closed[i], &closed[j]), || format!("{name}: closure not monotone"))?;
            }
        }
        let brute: Vec<Map> = all.iter().filter(|d| is_nucleus(&o, d)).cloned().collect();
        ensure(brute == nuclei_by_fixed_sets(&o), || format!("{name}: nucleus oracles disagree"))?;
    }
    let mut idioms = 0;
    for l in ctx.lattices.iter().filter(|l| l.value.len() <= 7) {
        let o = Order::of(&l.value);
        if !o.modular() {
            continue;
        }
        idioms += 1;
        let nuclei = nuclei_by_fixed_sets(&o);
        let p = pointwise_order(&o, &nuclei);
        ensure(p.is_lattice() && p.distributive(), || format!("{}: N(A) is not a frame", l.name))?;
        let f = enumerate_nuclei(Carrier::Lattice(&l.value), Family::Nuclei, 8).map_err(|e| e.to_string())?;
        ensure(tables(&f.members) == nuclei && f.frame == FrameClaim::Holds, || format!("{}: library N(A)", l.name))?;
    }
    let mut ni = 0;
    for q in ctx.qqs.iter().filter(|q| q.value.len() <= 6) {
        let t = Table::of(&q.value);
        let o = &t.o;
        let family: Vec<Map> = nuclei_by_fixed_sets(o)
            .into_iter()
            .filter(|j| {
                pairs(t.n).all(|(a, b)| {
                    let jab = j[t.mul(a, b)];
                    o.le(t.mul(j[a], j[b]), jab) && jab == j[o.meet(a, b)]
                })
            })
            .collect();
        let p = pointwise_order(o, &family);
        ensure(p.is_lattice() && p.distributive(), || format!("{}: NI(A) is not a frame", q.name))?;
        let f = enumerate_nuclei(Carrier::Quantale(&q.value), Family::Idiomatic, 8).map_err(|e| e.to_string())?;
        ensure(tables(&f.members) == family && f.frame == FrameClaim::Holds, || format!("{}: library NI(A)", q.name))?;
        ni += 1;
    }
    let chain3 = ctx.lattices.iter().find(|l| l.name == "chain3").ok_or("chain3 missing")?;
    let o = Order::of(&chain3.value);
    let n3 = nuclei_by_fixed_sets(&o);
    ensure(n3.len() == 4 && boolean(&pointwise_order(&o, &n3)), || format!("N(3-chain) has {} elements", n3.len()))?;
    ensure(idioms > 0 && ni > 0 && inflators > 0, || "vacuous".into())?;
    Ok(format!("{inflators} inflators closed, N(A) frame on {idioms} idioms, NI(A) frame on {ni}, N(3-chain) Boolean of size 4"))
}

fn quotients(ctx: &Ctx) -> Outcome {
    let (mut contextual, mut multiplicative) = (0, 0);
    for q in &ctx.qqs {
        let name = &q.name;
        let t = Table::of(&q.value);
        let o = &t.o;
        let closures = closures_by_fixed_sets(o);
        let nuclei: Vec<Map> = closures.iter().filter(|j| preserves_meets(o, j)).cloned().collect();
        let ctxl: Vec<Map> = closures
            .iter()
            .filter(|j| pairs(t.n).all(|(a, b)| o.le(t.mul(j[a], j[b]), j[t.mul(a, b)]))).cloned().collect();
        let lib = enumerate_nuclei(Carrier::Quantale(&q.value), Family::Contextual, MAX_ENUMERATION_CAP)
            .map_err(|e| format!("{name}: {e}"))?;
        ensure(tables(&lib.members) == ctxl, || format!("{name}: contextual nuclei differ"))?;
        for j in &ctxl {
            contextual += 1;
            let fixed: Vec<usize> = (0..t.n).filter(|&x| j[x] == x).collect();
            let fo = o.restrict(&fixed);
            let pos = |x: usize| fixed.iter().position(|&f| f == x).unwrap();
            let qt = Table::from_fn(fo.clone(), |a, b| pos(j[t.mul(fixed[a], fixed[b])]));
            ensure(qt.associative() && qt.monotone(), || format!("{name}: A_j for {j:?}"))?;
            if let Some(e) = t.left_unit() {
                let je = pos(j[e]);
                ensure((0..fixed.len()).all(|a| qt.mul(je, a) == a), || format!("{name}: j(e) not a left unit"))?;
            }
            let inf = Inflator::new(Carrier::Quantale(&q.value), j.clone()).unwrap();
            let lq = quotient(&q.value, &inf).map_err(|e| format!("{name}: {e}"))?;
            ensure(
                pairs(fixed.len()).all(|(a, b)| {
                    lq.embed[lq.quantale.mul(a, b)] == j[t.mul(lq.embed[a], lq.embed[b])]
                }) && lq.left_unit_check != Some(false),
                || format!("{name}: library quotient for {j:?}"),
            )?;
        }
        if !t.right_join_law() {
            continue;
        }
        for j in nuclei.iter().filter(|j| pairs(t.n).all(|(a, b)| o.meet(j[a], j[b]) == j[t.mul(a, b)])) {
            multiplicative += 1;
            let fixed: Vec<usize> = (0..t.n).filter(|&x| j[x] == x).collect();
            let fo = o.restrict(&fixed);
            ensure(fo.is_lattice() && fo.distributive(), || format!("{name}: A_d is not a frame for {j:?}"))?;
            let inf = Inflator::new(Carrier::Quantale(&q.value), j.clone()).unwrap();
            let (_, _, rep) = quotient_lattice(&inf).map_err(|e| e.to_string())?;
            ensure(rep.is_frame, || format!("{name}: library frame flag for {j:?}"))?;
        }
    }
    ensure(contextual > 0 && multiplicative > 0, || "vacuous".into())?;
    Ok(format!("{contextual} contextual nuclei, {multiplicative} multiplicative nuclei on join-law carriers"))
}

fn z12_spectrum(ctx: &Ctx) -> Outcome {
    let names = ["0", "(6)", "(4)", "(3)", "(2)", "R"];
    let gen = [12u64, 6, 4, 3, 2, 1];
    let n = gen.len();
    let o = Order::from_fn(n, |a, b| gen[a].is_multiple_of(gen[b]));
    let idx = |g: u64| gen.iter().position(|&x| x == g).unwrap();
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let t = Table::from_fn(o.clone(), |a, b| idx(gcd(gen[a] * gen[b], 12)));
    let top = o.top();
    let points: Vec<usize> = (0..n)
        .filter(|&p| p != top && pairs(n).all(|(a, b)| !o.le(t.mul(a, b), p) || o.le(a, p) || o.le(b, p)))
        .collect();
    let pt_names: Vec<&str> = points.iter().map(|&p| names[p]).collect();
    ensure(pt_names == ["(3)", "(2)"], || format!("points {pt_names:?}"))?;
    let u = |b: usize| points.iter().filter(|&&p| !o.le(b, p)).fold(0u32, |m, &p| m | 1 << p);
    let opens: BTreeSet<u32> = (0..n).map(u).collect();
    ensure(opens.len() == 4, || format!("{} opens", opens.len()))?;
    ensure(opens.iter().all(|&a| opens.iter().all(|&b| opens.contains(&(a | b)) && opens.contains(&(a & b)))), || {
        "opens are not a topology".into()
    })?;
    let nu: Vec<usize> = (0..n).map(|b| o.join_all((0..n).filter(|&c| u(c) & !u(b) == 0))).collect();
    ensure(nu[idx(12)] == idx(6) && nu[idx(4)] == idx(2), || format!("μ = {nu:?}"))?;
    for b in 0..n {
        let bound = o.meet_all(points.iter().copied().filter(|&p| o.le(b, p)));
        let below: Vec<usize> = (0..n).filter(|&c| o.le(c, bound)).collect();
        let largest = below.iter().copied().find(|&c| below.iter().all(|&d| o.le(d, c)));
        ensure(largest == Some(nu[b]), || format!("μ({}) is not the largest below ⋀V", names[b]))?;
    }
    ensure(is_inflator(&o, &nu) && idempotent(&nu), || "μ is not an idempotent inflator".into())?;
    ensure(pairs(n).all(|(a, b)| o.meet(nu[a], nu[b]) == nu[t.mul(a, b)]), || "μ not multiplicative".into())?;
    ensure(preserves_meets(&o, &nu), || "μ not a pre-nucleus".into())?;
    let fixed: Vec<usize> = (0..n).filter(|&b| nu[b] == b).collect();
    let fixed_names: BTreeSet<&str> = fixed.iter().map(|&b| names[b]).collect();
    ensure(fixed_names == BTreeSet::from(["(2)", "(3)", "(6)", "R"]), || format!("Fix(μ) = {fixed_names:?}"))?;
    let fo = o.restrict(&fixed);
    ensure(boolean(&fo) && fo.n == 4, || "Fix(μ) is not the Boolean square".into())?;

    let q = ctx.qqs.iter().find(|q| q.name == "z12_ideals").ok_or("z12_ideals missing")?;
    let lib = q.value.lattice();
    let li = |s: &str| lib.index_of(s).unwrap();
    let space = topology(&q.value).map_err(|e| e.to_string())?;
    let lib_points: BTreeSet<String> = space.point_names().into_iter().collect();
    ensure(lib_points == pt_names.iter().map(|s| s.to_string()).collect(), || "library points".into())?;
    ensure(space.opens().len() == 4, || "library opens".into())?;
    let m = mu(&space).map_err(|e| e.to_string())?;
    for b in 0..n {
        ensure(m.apply(li(names[b])) == Some(li(names[nu[b]])), || format!("library μ({})", names[b]))?;
    }
    let j = m.as_inflator().ok_or("μ as inflator")?;
    let a_mu = quotient(&q.value, &j).map_err(|e| e.to_string())?;
    ensure(a_mu.quantale.len() == 4 && a_mu.report.is_boolean, || "A_μ".into())?;
    Ok("points {(2),(3)}, 4 opens, μ(0) = (6), μ((4)) = (2), Fix(μ) Boolean square".into())
}

fn module_ctx<'a>(ctx: &'a Ctx, name: &str) -> Result<&'a ModuleCtx, String> {
    ctx.modules.iter().find(|m| m.name == name).ok_or_else(|| format!("{name} missing"))
}

fn set_of(o: &ModuleOracle, sl: &quantlat::module::submodule::SubmoduleLattice, names: &[String]) -> BTreeSet<usize> {
    names.iter().map(|s| o.translate_name(sl, s)).collect()
}

fn module_suite(ctx: &Ctx) -> Outcome {
    let mut summary = Vec::new();
    for name in ["m12", "m4", "m2_2", "m2_3", "m2_2_2"] {
        let m = module_ctx(ctx, name)?;
        let sl = &m.sl;
        let a = m.analysis.as_ref().map_err(|e| format!("{name}: {e}"))?;
        let o = ModuleOracle::new(sl.module().factors());
        let k = o.len();
        let ord = &o.order;
        let p = |x: usize, y: usize| o.product(x, y);
        ensure(sl.len() == k, || format!("{name}: {} submodules, oracle {k}", sl.len()))?;
        let tr = |i: usize| o.translate(sl, i);
        ensure(pairs(k).all(|(x, y)| tr(sl.product(x, y)) == p(tr(x), tr(y))), || format!("{name}: product table"))?;

        let (zero, top) = (o.zero(), o.full());
        for (x, y) in pairs(k) {
            for z in 0..k {
                ensure(!ord.le(x, y) || ord.le(p(x, z), p(y, z)), || format!("{name}: K ⊆ K' ⟹ K_M X ⊆ K'_M X"))?;
                ensure(!ord.le(x, y) || ord.le(p(z, x), p(z, y)), || format!("{name}: Y ⊆ X ⟹ K_M Y ⊆ K_M X"))?;
            }
            let kills = o.homs_into(y).iter().all(|f| o.g.image(f, o.subs[x]) == 1);
            ensure((p(x, y) == zero) == kills, || format!("{name}: K_M X = 0 criterion"))?;
        }
        for x in 0..k {
            ensure(ord.le(p(top, x), x) && p(zero, x) == zero, || format!("{name}: M_M X ⊆ X, 0_M X = 0"))?;
        }
        let fams = 1usize << k;
        let mut join = vec![zero; fams];
        for s in 1..fams {
            join[s] = ord.join(join[s & (s - 1)], s.trailing_zeros() as usize);
        }
        for x in 0..k {
            let mut left = vec![zero; fams];
            let mut right = vec![zero; fams];
            for s in 1..fams {
                let low = s.trailing_zeros() as usize;
                left[s] = ord.join(left[s & (s - 1)], p(x, low));
                right[s] = ord.join(right[s & (s - 1)], p(low, x));
                ensure(ord.le(left[s], p(x, join[s])), || format!("{name}: Σ K_M Xᵢ ⊆ K_M(Σ Xᵢ)"))?;
                ensure(right[s] == p(join[s], x), || format!("{name}: (Σ Kᵢ)_M N = Σ (Kᵢ)_M N"))?;
            }
        }
        ensure(a.laws.all_hold(), || format!("{name}: library product laws"))?;
        let fi = o.fi();
        ensure(fi.iter().all(|&n| p(n, top) == n), || format!("{name}: N_M M = N"))?;

        let all: Vec<usize> = (0..k).collect();
        let lg = o.primes(&all, &fi);
        let spec_fi = o.primes(&fi, &fi);
        let spec = o.primes(&all, &all);
        let u = |b: usize| lg.iter().filter(|&&q| !ord.le(b, q)).fold(0u64, |acc, &q| acc | 1 << q);
        let nu = |b: usize| ord.join_all(fi.iter().copied().filter(|&c| u(c) & !u(b) == 0));
        let semi: Vec<usize> =
            fi.iter().copied().filter(|&n| n != top && fi.iter().all(|&c| !ord.le(p(c, c), n) || ord.le(c, n))).collect();
        let sp: BTreeSet<usize> = semi.iter().copied().chain([top]).collect();
        let fixed: BTreeSet<usize> = fi.iter().copied().filter(|&b| nu(b) == b).collect();
        ensure(sp == fixed, || format!("{name}: SP ≠ Fix(μ)"))?;
        let sp_v: Vec<usize> = sp.iter().copied().collect();
        let spo = ord.restrict(&sp_v);
        ensure(spo.is_lattice() && spo.distributive(), || format!("{name}: SP is not a frame"))?;
        let pts: BTreeSet<usize> = (0..spo.n).filter(|&i| spo.meet_prime(i)).map(|i| sp_v[i]).collect();
        ensure(pts == spec_fi.iter().copied().collect(), || format!("{name}: pt(SP) ≠ Spec(Λ^fi)"))?;
        let nil = ord.meet_all(spec_fi.iter().copied());
        let maximal = o.maximal();
        let rad = ord.meet_all(maximal.iter().copied());
        ensure(ord.le(nil, rad), || format!("{name}: Nil_* ≰ Rad"))?;
        if fi.len() == k {
            ensure(lg == spec_fi && spec_fi == spec, || format!("{name}: duo spectra differ"))?;
        }

        let sps = a.spectra.as_ref().ok_or("spectra")?;
        let sem = a.semiprime.as_ref().ok_or("semiprime")?;
        let rads = a.radicals.as_ref().ok_or("radicals")?;
        let class = a.classification.as_ref().ok_or("classification")?;
        ensure(set_of(&o, sl, &sps.lg_spec) == lg.iter().copied().collect(), || format!("{name}: library LgSpec"))?;
        ensure(set_of(&o, sl, &sps.spec_fi) == spec_fi.iter().copied().collect(), || format!("{name}: library Spec_fi"))?;
        ensure(set_of(&o, sl, &sem.sp) == sp, || format!("{name}: library SP"))?;
        ensure(sem.sp_equals_mu_fixed && sem.sp_is_frame && sem.points_equal_spec_fi, || format!("{name}: library SP flags"))?;
        ensure(o.translate_name(sl, &rads.nil_star) == nil && o.translate_name(sl, &rads.rad) == rad, || {
            format!("{name}: library radicals")
        })?;
        ensure(rads.nil_star_below_rad, || format!("{name}: library Nil_* ≤ Rad"))?;
        let fi_simple = fi.len() == 2;
        let prime = spec_fi.contains(&zero);
        let co_semisimple = (0..k)
            .filter(|&n| n != top)
            .all(|n| ord.meet_all(maximal.iter().copied().filter(|&x| ord.le(n, x))) == n);
        let fio = ord.restrict(&fi);
        let fi_frame = fio.distributive();
        ensure(
            class.fi_simple == fi_simple
                && class.prime == prime
                && class.co_semisimple == co_semisimple
                && class.duo == (fi.len() == k)
                && (!co_semisimple || class.lambda_fi_frame == Some(fi_frame)),
            || format!("{name}: library classification"),
        )?;
        if name == "m12" {
            let six = o.index_of(o.g.span(&[o.g.index(&[6])]));
            ensure(nil == six && rad == six, || "Nil_*(Z/12) and Rad(Z/12) must be 6Z12".into())?;
            ensure(rads.nil_star == "6Z12" && rads.rad == "6Z12", || "library names for 6Z12".into())?;
        }
        if name == "m2_2" {
            ensure(rad == zero, || "Rad(Klein four) must be 0".into())?;
            ensure(fi_simple && prime && co_semisimple && fi_frame, || "Klein four classification".into())?;
        }
        summary.push(format!("{name}: {k} submodules, |SP| = {}", sp.len()));
    }
    Ok(summary.join("; "))
}

fn generator_sufficiency(ctx: &Ctx) -> Outcome {
    let (mut checked, mut skipped) = (0, 0);
    for m in &ctx.modules {
        let sl = &m.sl;
        let o = ModuleOracle::new(sl.module().factors());
        let mut here = 0;
        for (n, l) in pairs(sl.len()) {
            let (tn, tl) = (o.translate(sl, n), o.translate(sl, l));
            let homs = o.homs_into(tl);
            if homs.len() > 64 {
                skipped += 1;
                continue;
            }
            let sum = homs.iter().fold(0u64, |acc, f| acc | o.g.image(f, o.subs[tn]));
            ensure(o.g.span_mask(sum) == o.subs[o.translate(sl, sl.product(n, l))], || {
                format!("{}: N_M L at ({}, {})", m.name, sl.name(n), sl.name(l))
            })?;
            here += 1;
        }
        ensure(here > 0, || format!("{}: no pair within the hom limit", m.name))?;
        if let Ok(a) = &m.analysis {
            ensure(a.sufficiency.mismatches.is_empty() && a.sufficiency.pairs_checked == here, || {
                format!("{}: library checked {} pairs, oracle {here}", m.name, a.sufficiency.pairs_checked)
            })?;
        }
        checked += here;
    }
    Ok(format!("{checked} pairs with |Hom(M, L)| ≤ 64 match, {skipped} larger pairs not in scope"))
}

fn negative_controls(ctx: &Ctx) -> Outcome {
    let lat = |n: &str| ctx.lattices.iter().find(|l| l.name == n).map(|l| &l.value).ok_or(format!("{n} missing"));
    let n5 = lat("n5")?;
    let o = Order::of(n5);
    ensure(!o.modular(), || "N5 is modular per oracle".into())?;
    let w = structure_report(n5).witnesses.into_iter().find(|w| w.law.contains("modular")).ok_or("no N5 witness")?;
    let [a, b, c] = w.indices[..] else { return Err("N5 witness arity".into()) };
    ensure(o.le(a, b) && o.meet(o.join(a, c), b) != o.join(a, o.meet(c, b)), || format!("bogus N5 witness {w}"))?;

    let m3 = lat("m3")?;
    let o = Order::of(m3);
    ensure(o.modular() && !o.distributive(), || "M3 oracle".into())?;
    let w = structure_report(m3).witnesses.into_iter().find(|w| w.law.contains("distributive")).ok_or("no M3 witness")?;
    let [x, y, z] = w.indices[..] else { return Err("M3 witness arity".into()) };
    ensure(o.meet(x, o.join(y, z)) != o.join(o.meet(x, y), o.meet(x, z)), || format!("bogus M3 witness {w}"))?;

    let z4 = ModuleOracle::new(&[4]);
    let zero = z4.zero();
    let killer = z4.fi().into_iter().find(|&c| z4.order.le(z4.product(c, c), zero) && c != zero);
    ensure(killer.is_some(), || "0 is semiprime in Z/4 per oracle".into())?;
    let m4 = module_ctx(ctx, "m4")?;
    ensure(semiprime_mask(&m4.sl) >> m4.sl.zero() & 1 == 0, || "library calls 0 semiprime in Z/4".into())?;

    let raw: serde_json::Value =
        serde_json::from_str(include_str!("../corpus/broken_product.json")).map_err(|e| e.to_string())?;
    let elems: Vec<String> = raw["elements"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    let pos = |s: &str| elems.iter().position(|e| e == s).unwrap();
    let chain = Order::from_fn(elems.len(), |a, b| a <= b);
    let rows = raw["product"].as_array().unwrap();
    let bt = Table::from_fn(chain.clone(), |a, b| pos(rows[a][b].as_str().unwrap()));
    ensure(!bt.monotone() || !bt.associative(), || "broken table is valid per oracle".into())?;
    let (_, res) = ctx.corpus.rejected.first().ok_or("no rejected corpus file")?;
    let w = match res {
        Err(InputError::Quantale { source: QuantaleError::NotMonotone(w), .. }) => {
            let [x, y, z] = w.indices[..] else { return Err("witness arity".into()) };
            let bad = chain.le(x, y)
                && (!chain.le(bt.mul(z, x), bt.mul(z, y)) || !chain.le(bt.mul(x, z), bt.mul(y, z)));
            ensure(bad, || format!("bogus monotonicity witness {w}"))?;
            w
        }
        Err(InputError::Quantale { source: QuantaleError::NotAssociative(w), .. }) => {
            let [x, y, z] = w.indices[..] else { return Err("witness arity".into()) };
            ensure(bt.mul(bt.mul(x, y), z) != bt.mul(x, bt.mul(y, z)), || format!("bogus associativity witness {w}"))?;
            w
        }
        other => return Err(format!("broken table not rejected with a witness: {other:?}")),
    };

    let full = run_checks(ctx, CHECKS);
    ensure(full.passed, || "pristine run fails".into())?;
    for c in CHECKS {
        let rest: Vec<_> = CHECKS.iter().filter(|d| d.name != c.name).copied().collect();
        let run = run_checks(ctx, &rest);
        ensure(!run.passed && run.missing == [c.name], || format!("deleting {} leaves the run passing", c.name))?;
    }
    Ok(format!(
        "N5, M3, Z/4 and the broken table fail as expected ({w}); deleting any of {} checks fails the run",
        CHECKS.len()
    ))
}

fn main() {
    let ctx = Ctx::new(load_corpus(CorpusSource::Embedded));
    let criteria: [Criterion; 8] = [
        ("law battery", law_battery),
        ("quantale upgrade", quantale_upgrade),
        ("nucleus calculus", nucleus_calculus),
        ("quotients", quotients),
        ("Z/12 spectrum", z12_spectrum),
        ("module suite", module_suite),
        ("generator sufficiency", generator_sufficiency),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let out = catch_unwind(AssertUnwindSafe(|| f(&ctx))).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match out {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{:.1?}]", i + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({e})", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
