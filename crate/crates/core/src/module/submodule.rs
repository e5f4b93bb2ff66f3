//! The submodule lattice `Λ(M)` with the product `N_M L` and the fully
//! invariant members `Λ^fi(M)`.

use super::hom::{hom_generators, hom_generators_into, image_sum};
use super::{FiniteModule, ModuleError};
use crate::bits::{bit, has, mask_iter, ElemSet};
use crate::lattice::{modular_witness, FiniteLattice, MAX_LATTICE};
use crate::quantale::{QqOptions, QuantaleError, QuasiQuantale};
use crate::report::Witness;
use std::collections::{HashMap, HashSet};

/// A subgroup of a specific module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Submodule<'m> {
    pub parent: &'m FiniteModule,
    pub members: ElemSet,
}

/// `N_M L = Σ{f(N) : f ∈ Hom(M, L)}`, summed over a generating set of `Hom(M, L)`.
pub fn product_nml<'m>(n: &Submodule<'m>, l: &Submodule<'m>) -> Result<Submodule<'m>, ModuleError> {
    if !std::ptr::eq(n.parent, l.parent) {
        return Err(ModuleError::ParentMismatch);
    }
    let m = n.parent;
    let gens = hom_generators_into(m, &l.members, &m.trivial());
    Ok(Submodule {
        parent: m,
        members: image_sum(m, &gens, &n.members),
    })
}

#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    module: FiniteModule,
    subs: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    lattice: FiniteLattice,
    fi_mask: u64,
    product: Vec<usize>,
}

fn submodule_name(m: &FiniteModule, s: &ElemSet) -> String {
    if s.len() == 1 {
        return "0".into();
    }
    if s.len() == m.size() {
        return "M".into();
    }
    if m.rank() == 1 {
        let n = m.exponent();
        return format!("{}Z{}", n / s.len() as u64, n);
    }
    let gens: Vec<String> = m.generators(s).iter().map(|&g| m.element_name(g)).collect();
    format!("<{}>", gens.join(","))
}

impl SubmoduleLattice {
    pub fn new(module: FiniteModule) -> Result<Self, ModuleError> {
        let m = &module;
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut subs: Vec<ElemSet> = Vec::new();
        for x in 0..m.size() {
            let c = m.span([x]);
            if seen.insert(c) {
                subs.push(c);
            }
        }
        let mut i = 0;
        while i < subs.len() {
            for j in 0..i {
                let s = m.sum(&subs[i], &subs[j]);
                if seen.insert(s) {
                    subs.push(s);
                    if subs.len() > MAX_LATTICE {
                        return Err(ModuleError::TooManySubmodules {
                            count: subs.len(),
                            cap: MAX_LATTICE,
                        });
                    }
                }
            }
            i += 1;
        }
        subs.sort_by_key(|s| (s.len(), s.numeric_key()));
        let index = subs.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let names = subs.iter().map(|s| submodule_name(m, s)).collect();
        let lattice = FiniteLattice::from_order(names, |a, b| subs[a].is_subset(&subs[b]))?;
        if let Some((a, b, c)) = modular_witness(&lattice) {
            return Err(ModuleError::LawFailure(Witness::new(
                "submodule lattice is modular",
                vec![a, b, c],
                lattice.names_of(&[a, b, c]),
            )));
        }
        let ends = hom_generators(m, m);
        let fi_mask = subs
            .iter()
            .enumerate()
            .filter(|(_, s)| ends.iter().all(|f| f.image(s).is_subset(s)))
            .fold(0, |acc, (i, _)| acc | bit(i));
        let mut sl = SubmoduleLattice {
            module,
            subs,
            index,
            lattice,
            fi_mask,
            product: Vec::new(),
        };
        let n = sl.subs.len();
        let mut product = vec![0; n * n];
        for l in 0..n {
            let gens = hom_generators_into(&sl.module, &sl.subs[l], &sl.module.trivial());
            for k in 0..n {
                let s = image_sum(&sl.module, &gens, &sl.subs[k]);
                product[k * n + l] = sl.lookup(&s)?;
            }
        }
        sl.product = product;
        Ok(sl)
    }

    pub fn from_factors(factors: &[u64]) -> Result<Self, ModuleError> {
        Self::new(FiniteModule::new(factors)?)
    }

    fn lookup(&self, s: &ElemSet) -> Result<usize, ModuleError> {
        self.index.get(s).copied().ok_or_else(|| {
            ModuleError::LawFailure(Witness::new("image sum is a listed submodule", vec![], vec![format!("{s:?}")]))
        })
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn set(&self, i: usize) -> &ElemSet {
        &self.subs[i]
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.subs
    }

    pub fn index_of(&self, s: &ElemSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn submodule(&self, i: usize) -> Submodule<'_> {
        Submodule {
            parent: &self.module,
            members: self.subs[i],
        }
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn name(&self, i: usize) -> &str {
        self.lattice.name(i)
    }

    pub fn names_of_mask(&self, mask: u64) -> Vec<String> {
        mask_iter(mask).map(|i| self.name(i).to_string()).collect()
    }

    pub fn fi_mask(&self) -> u64 {
        self.fi_mask
    }

    pub fn is_fi(&self, i: usize) -> bool {
        has(self.fi_mask, i)
    }

    /// `N_M L` by lattice index.
    pub fn product(&self, n: usize, l: usize) -> usize {
        self.product[n * self.subs.len() + l]
    }

    pub fn product_table(&self) -> &[usize] {
        &self.product
    }

    pub fn zero(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// Coatoms of `Λ(M)`.
    pub fn maximal_mask(&self) -> u64 {
        let l = &self.lattice;
        let top = l.top();
        l.elements()
            .filter(|&x| x != top && l.up_set(x) == bit(x) | bit(top))
            .fold(0, |m, x| m | bit(x))
    }

    /// Index of the intersection of the members of `mask` (`M` when empty).
    pub fn intersect(&self, mask: u64) -> usize {
        self.lattice.meet_mask(mask)
    }
}

/// `Λ(M)` with `B = Λ^fi(M)`, and `Λ^fi(M)` as a separate right-unital
/// quasi-quantale together with its embedding into `Λ(M)`.
#[derive(Debug, Clone)]
pub struct Lambdas {
    pub lambda: QuasiQuantale,
    pub lambda_fi: QuasiQuantale,
    pub fi_embed: Vec<usize>,
}

pub fn lambda_quasi_quantales(sl: &SubmoduleLattice) -> Result<Lambdas, ModuleError> {
    let l = sl.lattice();
    let top = l.top();
    for a in l.elements() {
        if !l.leq(sl.product(top, a), a) {
            return Err(ModuleError::LawFailure(Witness::new("M_M X ⊆ X", vec![a], l.names_of(&[a]))));
        }
        for b in l.elements() {
            for c in l.elements() {
                if sl.product(l.join(a, b), c) != l.join(sl.product(a, c), sl.product(b, c)) {
                    return Err(ModuleError::LawFailure(Witness::new(
                        "(K + K')_M N = K_M N + K'_M N",
                        vec![a, b, c],
                        l.names_of(&[a, b, c]),
                    )));
                }
            }
        }
    }
    let opts = QqOptions {
        sub_b: Some(sl.fi_mask()),
        ..Default::default()
    };
    let lambda = QuasiQuantale::new(l.clone(), sl.product_table().to_vec(), opts).map_err(|e| match e {
        QuantaleError::NotAssociative(w) => ModuleError::AssociativityFailure(w),
        other => ModuleError::Quantale(other),
    })?;
    let (fi_lat, fi_embed) = l.induced(sl.fi_mask())?;
    let mut back = vec![usize::MAX; l.len()];
    for (i, &x) in fi_embed.iter().enumerate() {
        back[x] = i;
    }
    let k = fi_embed.len();
    let table = (0..k * k).map(|i| back[sl.product(fi_embed[i / k], fi_embed[i % k])]).collect();
    let fi_top = back[top];
    let lambda_fi = QuasiQuantale::new(
        fi_lat,
        table,
        QqOptions {
            expect_right_unit: Some(fi_top),
            ..Default::default()
        },
    )?;
    Ok(Lambdas {
        lambda,
        lambda_fi,
        fi_embed,
    })
}
