//! The preradicals `α^M_N`, `ω^M_N` and `η^M_P` evaluated on a probe module.

use super::hom::{hom_generators, image_sum, preimage_meet};
use super::submodule::SubmoduleLattice;
use super::{FiniteModule, ModuleError};
use crate::bits::ElemSet;
use crate::report::Witness;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Preradical {
    /// `α^M_N(X) = Σ{f(N) : f ∈ Hom(M, X)}`.
    Alpha,
    /// `ω^M_N(X) = ⋂{f⁻¹(N) : f ∈ Hom(X, M)}`, for fully invariant `N`.
    Omega,
    /// `η^M_P(X) = ⋂{f⁻¹(P) : f ∈ Hom(X, M)}`.
    Eta,
}

fn raw(kind: Preradical, m: &FiniteModule, n: &ElemSet, probe: &FiniteModule) -> ElemSet {
    match kind {
        Preradical::Alpha => image_sum(probe, &hom_generators(m, probe), n),
        // An element lies in every preimage iff it does for a generating set.
        Preradical::Omega | Preradical::Eta => preimage_meet(probe, &hom_generators(probe, m), n),
    }
}

/// Evaluates the preradical at `probe`, where `n` is `sl.set(n)`. Also
/// re-checks the value at `M` itself: `α(M) = ω(M) = N` for fully invariant
/// `N`, `η(M) ≤ P` always and `η(M) = P` for fully invariant `P`.
pub fn preradical_eval(
    kind: Preradical,
    sl: &SubmoduleLattice,
    n: usize,
    probe: &FiniteModule,
) -> Result<ElemSet, ModuleError> {
    let m = sl.module();
    let set = sl.set(n);
    let fi = sl.is_fi(n);
    if kind == Preradical::Omega && !fi {
        return Err(ModuleError::NotFullyInvariant(sl.name(n).to_string()));
    }
    let at_m = raw(kind, m, set, m);
    let ok = match kind {
        Preradical::Alpha => !fi || at_m == *set,
        Preradical::Omega => at_m == *set,
        Preradical::Eta => at_m.is_subset(set) && (!fi || at_m == *set),
    };
    if !ok {
        let law = match kind {
            Preradical::Alpha => "α^M_N(M) = N",
            Preradical::Omega => "ω^M_N(M) = N",
            Preradical::Eta => "η^M_P(M) ≤ P, with equality for fully invariant P",
        };
        return Err(ModuleError::LawFailure(Witness::new(law, vec![n], vec![sl.name(n).to_string()])));
    }
    Ok(raw(kind, m, set, probe))
}

/// `η^M_P(M)` as a lattice index.
pub fn eta_at_m(sl: &SubmoduleLattice, p: usize) -> usize {
    let m = sl.module();
    let s = raw(Preradical::Eta, m, sl.set(p), m);
    sl.index_of(&s).expect("η^M_P(M) is a submodule")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_against_z2() {
        let sl = SubmoduleLattice::from_factors(&[4]).unwrap();
        let z2 = FiniteModule::new(&[2]).unwrap();
        let two = sl.lattice().index_of("2Z4").unwrap();
        let a = preradical_eval(Preradical::Alpha, &sl, two, &z2).unwrap();
        assert_eq!(a, z2.trivial());
        let e = preradical_eval(Preradical::Eta, &sl, two, &z2).unwrap();
        assert_eq!(e, z2.all());
        let w = preradical_eval(Preradical::Omega, &sl, two, &z2).unwrap();
        assert_eq!(w, e);
    }

    #[test]
    fn eta_at_fully_invariant_is_identity() {
        for f in [&[12][..], &[2, 2], &[4], &[2, 2, 2]] {
            let sl = SubmoduleLattice::from_factors(f).unwrap();
            for p in 0..sl.len() {
                let e = eta_at_m(&sl, p);
                assert!(sl.lattice().leq(e, p));
                if sl.is_fi(p) {
                    assert_eq!(e, p);
                }
            }
        }
    }

    #[test]
    fn omega_needs_fully_invariant() {
        let sl = SubmoduleLattice::from_factors(&[2, 2]).unwrap();
        let z2 = FiniteModule::new(&[2]).unwrap();
        assert!(matches!(
            preradical_eval(Preradical::Omega, &sl, 1, &z2),
            Err(ModuleError::NotFullyInvariant(_))
        ));
    }
}
