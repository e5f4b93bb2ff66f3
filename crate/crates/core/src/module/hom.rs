//! Homomorphisms between finite abelian groups, as additive generating sets
//! and (for small cases) full enumerations.

use super::{gcd, FiniteModule};
use crate::bits::ElemSet;

/// A homomorphism determined by the images of the standard generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom<'m> {
    source: &'m FiniteModule,
    target: &'m FiniteModule,
    images: Vec<usize>,
}

impl<'m> Hom<'m> {
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        let t = self.target;
        self.source
            .coords(x)
            .iter()
            .zip(&self.images)
            .fold(t.zero(), |acc, (&c, &y)| t.add(acc, t.scale(c, y)))
    }

    pub fn image(&self, set: &ElemSet) -> ElemSet {
        set.iter().map(|x| self.apply(x)).collect()
    }

    pub fn preimage(&self, set: &ElemSet) -> ElemSet {
        (0..self.source.size()).filter(|&x| set.contains(self.apply(x))).collect()
    }

    pub fn kernel(&self) -> ElemSet {
        self.preimage(&self.target.trivial())
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&y| y == self.target.zero())
    }

    pub fn table(&self) -> Vec<usize> {
        (0..self.source.size()).map(|x| self.apply(x)).collect()
    }
}

/// Generators of `Hom(M, X)`: for each pair of cyclic factors `Z/a → Z/b`
/// with `g = gcd(a, b) > 1`, the map sending the source generator to
/// `(b/g)` times the target generator.
pub fn hom_generators<'m>(m: &'m FiniteModule, x: &'m FiniteModule) -> Vec<Hom<'m>> {
    let mut out = Vec::new();
    for (i, &a) in m.factors().iter().enumerate() {
        for (j, &b) in x.factors().iter().enumerate() {
            let g = gcd(a, b);
            if g == 1 {
                continue;
            }
            let mut images = vec![x.zero(); m.rank()];
            images[i] = x.scale(b / g, x.basis(j));
            out.push(Hom {
                source: m,
                target: x,
                images,
            });
        }
    }
    out
}

/// Generators of `Hom(M, L/K)` for subgroups `K ≤ L ≤ M`, represented by maps
/// `M → L` read modulo `K`: the `i`-th generator image ranges over
/// `{y ∈ L : aᵢ·y ∈ K}`. With `K = 0` this is `Hom(M, L)`.
pub fn hom_generators_into<'m>(m: &'m FiniteModule, l: &ElemSet, modulo: &ElemSet) -> Vec<Hom<'m>> {
    let mut out = Vec::new();
    for (i, &a) in m.factors().iter().enumerate() {
        let t = m.torsion(l, a, modulo);
        let mut span = m.span(m.generators(&modulo.intersection(&t)));
        for y in t.iter() {
            if !span.contains(y) {
                span = m.extend(&span, y);
                let mut images = vec![m.zero(); m.rank()];
                images[i] = y;
                out.push(Hom {
                    source: m,
                    target: m,
                    images,
                });
            }
        }
    }
    out
}

/// `|Hom(M, L)|` for a subgroup `L ≤ M`.
pub fn hom_count_into(m: &FiniteModule, l: &ElemSet) -> u64 {
    m.factors()
        .iter()
        .map(|&a| m.torsion(l, a, &m.trivial()).len() as u64)
        .try_fold(1u64, |acc, c| acc.checked_mul(c))
        .unwrap_or(u64::MAX)
}

fn cartesian<'m>(
    source: &'m FiniteModule,
    target: &'m FiniteModule,
    choices: Vec<Vec<usize>>,
    limit: usize,
) -> Option<Vec<Hom<'m>>> {
    let count = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()))?;
    if count > limit {
        return None;
    }
    let mut out = Vec::with_capacity(count);
    let mut idx = vec![0usize; choices.len()];
    loop {
        out.push(Hom {
            source,
            target,
            images: idx.iter().zip(&choices).map(|(&k, c)| c[k]).collect(),
        });
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Some(out);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Every homomorphism `M → L`, or `None` when there are more than `limit`.
pub fn all_homs_into<'m>(m: &'m FiniteModule, l: &ElemSet, limit: usize) -> Option<Vec<Hom<'m>>> {
    let choices = m
        .factors()
        .iter()
        .map(|&a| m.torsion(l, a, &m.trivial()).iter().collect())
        .collect();
    cartesian(m, m, choices, limit)
}

/// Every homomorphism `M → X`, or `None` when there are more than `limit`.
pub fn all_homs<'m>(m: &'m FiniteModule, x: &'m FiniteModule, limit: usize) -> Option<Vec<Hom<'m>>> {
    let choices = m
        .factors()
        .iter()
        .map(|&a| x.torsion(&x.all(), a, &x.trivial()).iter().collect())
        .collect();
    cartesian(m, x, choices, limit)
}

/// `Σ f(N)` over a family of homomorphisms into `target`.
pub fn image_sum(target: &FiniteModule, homs: &[Hom<'_>], n: &ElemSet) -> ElemSet {
    homs.iter().fold(target.trivial(), |acc, f| target.sum(&acc, &f.image(n)))
}

/// `⋂ f⁻¹(P)` over a family of homomorphisms out of `source`.
pub fn preimage_meet(source: &FiniteModule, homs: &[Hom<'_>], p: &ElemSet) -> ElemSet {
    homs.iter().fold(source.all(), |acc, f| acc.intersection(&f.preimage(p)))
}
