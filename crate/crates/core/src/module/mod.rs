//! Finite abelian groups as modules over the integers.
//!
//! Elements are coordinate tuples over the invariant factors, indexed in
//! mixed radix with the first coordinate varying fastest.

pub mod hom;
pub mod preradical;
pub mod submodule;
pub mod theory;

use crate::bits::{ElemSet, ELEM_CAP};
use crate::quantale::QuantaleError;
use crate::report::Witness;
use crate::spectrum::SpectrumError;
use crate::lattice::LatticeError;
use thiserror::Error;

/// Default cap on the number of group elements.
pub const MODULE_SIZE_CAP: usize = ELEM_CAP;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("module needs at least one invariant factor")]
    NoFactors,
    #[error("invariant factor {0} is less than 2")]
    BadFactor(u64),
    #[error("factors {0:?} do not form a divisibility chain")]
    NotDivisibilityChain(Vec<u64>),
    #[error("module has {size} elements, cap is {cap}")]
    TooLarge { size: u64, cap: usize },
    #[error("module has {count} submodules, cap is {cap}")]
    TooManySubmodules { count: usize, cap: usize },
    #[error("submodules belong to different modules")]
    ParentMismatch,
    #[error("submodule {0} is not fully invariant")]
    NotFullyInvariant(String),
    #[error("product is not associative: {0}")]
    AssociativityFailure(Witness),
    #[error("module law fails: {0}")]
    LawFailure(Witness),
    #[error(transparent)]
    Quantale(#[from] QuantaleError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push((p, q));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

/// Invariant factors of `⊕ Z/cᵢ`, smallest first.
pub fn invariant_factors(cyclic: &[u64]) -> Result<Vec<u64>, ModuleError> {
    if cyclic.is_empty() {
        return Err(ModuleError::NoFactors);
    }
    if let Some(&c) = cyclic.iter().find(|&&c| c < 2) {
        return Err(ModuleError::BadFactor(c));
    }
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
    for &c in cyclic {
        for (p, q) in prime_powers(c) {
            by_prime.entry(p).or_default().push(q);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for powers in by_prime.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in powers.iter().enumerate() {
            factors[len - 1 - i] *= q;
        }
    }
    Ok(factors)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    factors: Vec<u64>,
    coords: Vec<Vec<u64>>,
}

impl FiniteModule {
    /// Builds `Z/n₁ ⊕ … ⊕ Z/n_k` from a divisibility chain `n₁ | … | n_k`.
    pub fn new(factors: &[u64]) -> Result<Self, ModuleError> {
        Self::with_cap(factors, MODULE_SIZE_CAP)
    }

    pub fn with_cap(factors: &[u64], cap: usize) -> Result<Self, ModuleError> {
        if factors.is_empty() {
            return Err(ModuleError::NoFactors);
        }
        if let Some(&c) = factors.iter().find(|&&c| c < 2) {
            return Err(ModuleError::BadFactor(c));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(ModuleError::NotDivisibilityChain(factors.to_vec()));
        }
        let cap = cap.min(ELEM_CAP);
        let size = factors.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n)).unwrap_or(u64::MAX);
        if size > cap as u64 {
            return Err(ModuleError::TooLarge { size, cap });
        }
        let mut coords = Vec::with_capacity(size as usize);
        for mut idx in 0..size {
            let mut c = Vec::with_capacity(factors.len());
            for &n in factors {
                c.push(idx % n);
                idx /= n;
            }
            coords.push(c);
        }
        Ok(FiniteModule {
            factors: factors.to_vec(),
            coords,
        })
    }

    /// Builds `⊕ Z/cᵢ` for arbitrary cyclic orders, normalised to invariant factors.
    pub fn from_cyclic_factors(cyclic: &[u64]) -> Result<Self, ModuleError> {
        Self::new(&invariant_factors(cyclic)?)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn size(&self) -> usize {
        self.coords.len()
    }

    pub fn exponent(&self) -> u64 {
        *self.factors.last().unwrap()
    }

    /// Equal invariant factors: free over `Z/exponent`, hence projective in `σ[M]`.
    pub fn is_certified(&self) -> bool {
        self.factors.iter().all(|&n| n == self.factors[0])
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn coords(&self, x: usize) -> &[u64] {
        &self.coords[x]
    }

    pub fn index(&self, coords: &[u64]) -> usize {
        let mut idx = 0u64;
        for (c, &n) in coords.iter().zip(&self.factors).rev() {
            idx = idx * n + c % n;
        }
        idx as usize
    }

    /// The `i`-th standard generator.
    pub fn basis(&self, i: usize) -> usize {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.index(&c)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let c: Vec<u64> = self.coords[a].iter().zip(&self.coords[b]).map(|(x, y)| x + y).collect();
        self.index(&c)
    }

    pub fn scale(&self, k: u64, a: usize) -> usize {
        let c: Vec<u64> = self.coords[a].iter().zip(&self.factors).map(|(x, n)| (x * (k % n)) % n).collect();
        self.index(&c)
    }

    pub fn order(&self, a: usize) -> u64 {
        self.coords[a]
            .iter()
            .zip(&self.factors)
            .map(|(&x, &n)| n / gcd(x, n))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    pub fn element_name(&self, a: usize) -> String {
        let c = &self.coords[a];
        if c.len() == 1 {
            c[0].to_string()
        } else {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    pub fn trivial(&self) -> ElemSet {
        ElemSet::singleton(0)
    }

    /// Subgroup generated by `gens`.
    pub fn span(&self, gens: impl IntoIterator<Item = usize>) -> ElemSet {
        let mut s = self.trivial();
        for g in gens {
            s = self.extend(&s, g);
        }
        s
    }

    /// `S + ⟨g⟩` for a subgroup `S`.
    pub fn extend(&self, s: &ElemSet, g: usize) -> ElemSet {
        if s.contains(g) {
            return *s;
        }
        let mut out = *s;
        let mut m = g;
        while !s.contains(m) {
            for x in s.iter() {
                out.insert(self.add(x, m));
            }
            m = self.add(m, g);
        }
        out
    }

    /// Sum of two subgroups.
    pub fn sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = *a;
        for g in self.generators(b) {
            out = self.extend(&out, g);
        }
        out
    }

    /// Greedy generating set of a subgroup, in element order.
    pub fn generators(&self, s: &ElemSet) -> Vec<usize> {
        let mut span = self.trivial();
        let mut gens = Vec::new();
        for x in s.iter() {
            if !span.contains(x) {
                span = self.extend(&span, x);
                gens.push(x);
            }
        }
        gens
    }

    pub fn is_subgroup(&self, s: &ElemSet) -> bool {
        s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(self.add(a, b))))
    }

    /// `{y ∈ s : k·y ∈ modulo}`.
    pub fn torsion(&self, s: &ElemSet, k: u64, modulo: &ElemSet) -> ElemSet {
        s.iter().filter(|&y| modulo.contains(self.scale(k, y))).collect()
    }
}

impl std::fmt::Display for FiniteModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
