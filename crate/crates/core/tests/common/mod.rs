//! Brute-force oracles shared by the integration tests. Nothing here calls
//! library algorithms beyond reading order relations, product tables and
//! group coordinates.
#![allow(dead_code)]

use quantlat::lattice::FiniteLattice;
use quantlat::module::submodule::SubmoduleLattice;
use quantlat::quantale::QuasiQuantale;

/// A finite order given by its `≤` matrix, with bounds found by search.
#[derive(Clone, Debug)]
pub struct Order {
    pub n: usize,
    le: Vec<bool>,
    glb: Vec<Option<usize>>,
    lub: Vec<Option<usize>>,
    bounds: (Option<usize>, Option<usize>),
}

impl Order {
    pub fn from_fn(n: usize, le: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                m[a * n + b] = le(a, b);
            }
        }
        let mut o = Order { n, le: m, glb: vec![], lub: vec![], bounds: (None, None) };
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        o.glb = pairs.iter().map(|&(a, b)| o.search_glb(a, b)).collect();
        o.lub = pairs.iter().map(|&(a, b)| o.search_lub(a, b)).collect();
        o.bounds = (
            (0..n).find(|&x| (0..n).all(|y| o.le(x, y))),
            (0..n).find(|&x| (0..n).all(|y| o.le(y, x))),
        );
        o
    }

    pub fn of(l: &FiniteLattice) -> Self {
        Order::from_fn(l.len(), |a, b| l.leq(a, b))
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.n + b]
    }

    pub fn glb(&self, a: usize, b: usize) -> Option<usize> {
        self.glb[a * self.n + b]
    }

    pub fn lub(&self, a: usize, b: usize) -> Option<usize> {
        self.lub[a * self.n + b]
    }

    fn search_glb(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.n).filter(|&x| self.le(x, a) && self.le(x, b)).collect();
        lower.iter().copied().find(|&x| lower.iter().all(|&y| self.le(y, x)))
    }

    fn search_lub(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.n).filter(|&x| self.le(a, x) && self.le(b, x)).collect();
        upper.iter().copied().find(|&x| upper.iter().all(|&y| self.le(x, y)))
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.glb(a, b).expect("meet exists")
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lub(a, b).expect("join exists")
    }

    pub fn bottom(&self) -> usize {
        self.bounds.0.expect("bottom")
    }

    pub fn top(&self) -> usize {
        self.bounds.1.expect("top")
    }

    pub fn is_lattice(&self) -> bool {
        self.n > 0 && (0..self.n).all(|a| (0..self.n).all(|b| self.glb(a, b).is_some() && self.lub(a, b).is_some()))
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    pub fn distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))))
        })
    }

    pub fn modular(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| {
                !self.le(a, b) || (0..n).all(|c| self.join(a, self.meet(c, b)) == self.meet(self.join(a, c), b))
            })
        })
    }

    /// The suborder on `keep`, with the original indices.
    pub fn restrict(&self, keep: &[usize]) -> Order {
        Order::from_fn(keep.len(), |i, j| self.le(keep[i], keep[j]))
    }

    /// `x ∧ y ≤ p ⟹ x ≤ p or y ≤ p`, `p ≠ 1`.
    pub fn meet_prime(&self, p: usize) -> bool {
        p != self.top()
            && (0..self.n).all(|x| (0..self.n).all(|y| !self.le(self.meet(x, y), p) || self.le(x, p) || self.le(y, p)))
    }
}

pub type Map = Vec<usize>;

pub fn map_le(o: &Order, f: &Map, g: &Map) -> bool {
    (0..o.n).all(|x| o.le(f[x], g[x]))
}

pub fn compose(f: &Map, g: &Map) -> Map {
    g.iter().map(|&y| f[y]).collect()
}

pub fn is_inflator(o: &Order, f: &Map) -> bool {
    (0..o.n).all(|x| o.le(x, f[x]) && (0..o.n).all(|y| !o.le(x, y) || o.le(f[x], f[y])))
}

pub fn idempotent(f: &Map) -> bool {
    (0..f.len()).all(|x| f[f[x]] == f[x])
}

pub fn preserves_meets(o: &Order, f: &Map) -> bool {
    (0..o.n).all(|x| (0..o.n).all(|y| f[o.meet(x, y)] == o.meet(f[x], f[y])))
}

pub fn stable(o: &Order, f: &Map) -> bool {
    (0..o.n).all(|x| (0..o.n).all(|y| o.le(o.meet(f[x], y), f[o.meet(x, y)])))
}

pub fn is_nucleus(o: &Order, f: &Map) -> bool {
    preserves_meets(o, f) && idempotent(f)
}

/// Iterates `f` until it stops changing.
pub fn iterate_to_fixpoint(f: &Map) -> Map {
    let mut cur = f.clone();
    loop {
        let next = compose(f, &cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// All monotone inflationary maps by backtracking, or `None` past `limit`.
pub fn all_inflators(o: &Order, limit: usize) -> Option<Vec<Map>> {
    fn go(o: &Order, x: usize, cur: &mut Map, out: &mut Vec<Map>, limit: usize) -> bool {
        if x == o.n {
            out.push(cur.clone());
            return out.len() <= limit;
        }
        for y in 0..o.n {
            if !o.le(x, y) {
                continue;
            }
            let ok = (0..x).all(|z| (!o.le(z, x) || o.le(cur[z], y)) && (!o.le(x, z) || o.le(y, cur[z])));
            if ok {
                cur[x] = y;
                if !go(o, x + 1, cur, out, limit) {
                    return false;
                }
            }
        }
        true
    }
    let mut out = Vec::new();
    let mut cur = vec![0; o.n];
    go(o, 0, &mut cur, &mut out, limit).then_some(out)
}

/// Nuclei from their fixed sets: the closure maps that preserve binary meets.
pub fn nuclei_by_fixed_sets(o: &Order) -> Vec<Map> {
    closures_by_fixed_sets(o).into_iter().filter(|j| preserves_meets(o, j)).collect()
}

/// Every idempotent inflator, built from its fixed set: each meet-closed
/// subset containing the top gives one closure map.
pub fn closures_by_fixed_sets(o: &Order) -> Vec<Map> {
    let n = o.n;
    assert!(n <= 20, "subset enumeration");
    let top = o.top();
    let mut out = Vec::new();
    for s in 0u32..(1 << n) {
        if s >> top & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
        if !members.iter().all(|&a| members.iter().all(|&b| s >> o.meet(a, b) & 1 == 1)) {
            continue;
        }
        out.push((0..n).map(|x| o.meet_all(members.iter().copied().filter(|&m| o.le(x, m)))).collect());
    }
    out.sort();
    out
}

pub fn pointwise_order(o: &Order, maps: &[Map]) -> Order {
    Order::from_fn(maps.len(), |i, j| map_le(o, &maps[i], &maps[j]))
}

/// A product table read off a quasi-quantale, with its order.
pub struct Table {
    pub o: Order,
    pub n: usize,
    mul: Vec<usize>,
}

impl Table {
    pub fn of(q: &QuasiQuantale) -> Self {
        let n = q.len();
        let mul = (0..n * n).map(|i| q.mul(i / n, i % n)).collect();
        Table { o: Order::of(q.lattice()), n, mul }
    }

    pub fn from_fn(o: Order, mul: impl Fn(usize, usize) -> usize) -> Self {
        let n = o.n;
        let mul = (0..n * n).map(|i| mul(i / n, i % n)).collect();
        Table { o, n, mul }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn associative(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    pub fn monotone(&self) -> bool {
        let (n, o) = (self.n, &self.o);
        (0..n).all(|x| {
            (0..n).all(|y| {
                !o.le(x, y)
                    || (0..n).all(|z| o.le(self.mul(z, x), self.mul(z, y)) && o.le(self.mul(x, z), self.mul(y, z)))
            })
        })
    }

    pub fn two_sided_unit(&self, e: usize) -> bool {
        (0..self.n).all(|a| self.mul(e, a) == a && self.mul(a, e) == a)
    }

    pub fn left_unit(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|a| self.mul(e, a) == a))
    }

    /// Binary join distributivity on both sides.
    pub fn binary_distributive(&self) -> bool {
        let (n, o) = (self.n, &self.o);
        (0..n).all(|a| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    self.mul(a, o.join(x, y)) == o.join(self.mul(a, x), self.mul(a, y))
                        && self.mul(o.join(x, y), a) == o.join(self.mul(x, a), self.mul(y, a))
                })
            })
        })
    }

    pub fn zero_annihilates(&self) -> bool {
        let z = self.o.bottom();
        (0..self.n).all(|a| self.mul(a, z) == z && self.mul(z, a) == z)
    }

    /// `(⋁X)a = ⋁{xa : x ∈ X}` for every subset `X`, including the empty one.
    pub fn right_join_law(&self) -> bool {
        let (n, o) = (self.n, &self.o);
        let z = o.bottom();
        (0..n).all(|a| self.mul(z, a) == z)
            && (0..n).all(|a| (0..n).all(|x| (0..n).all(|y| self.mul(o.join(x, y), a) == o.join(self.mul(x, a), self.mul(y, a)))))
    }

    /// Two-sided distributivity over the join of every subset.
    pub fn full_distributive(&self) -> bool {
        let (n, o) = (self.n, &self.o);
        assert!(n <= 20, "subset enumeration");
        let mut joins = vec![o.bottom(); 1 << n];
        for s in 1usize..(1 << n) {
            let low = s.trailing_zeros() as usize;
            joins[s] = o.join(joins[s & (s - 1)], low);
        }
        (0..n).all(|a| {
            let mut left = vec![o.bottom(); 1 << n];
            let mut right = vec![o.bottom(); 1 << n];
            (1usize..(1 << n)).all(|s| {
                let low = s.trailing_zeros() as usize;
                left[s] = o.join(left[s & (s - 1)], self.mul(a, low));
                right[s] = o.join(right[s & (s - 1)], self.mul(low, a));
                left[s] == self.mul(a, joins[s]) && right[s] == self.mul(joins[s], a)
            }) && self.zero_annihilates()
        })
    }
}

/// A finite abelian group `⊕ Z/nᵢ` in mixed-radix coordinates.
pub struct Group {
    pub factors: Vec<u64>,
    pub elems: Vec<Vec<u64>>,
}

impl Group {
    pub fn new(factors: &[u64]) -> Self {
        let mut elems = vec![vec![]];
        for &f in factors {
            elems = elems.into_iter().flat_map(|e: Vec<u64>| (0..f).map(move |c| [e.clone(), vec![c]].concat())).collect();
        }
        assert!(elems.len() <= 64, "element sets are u64 masks");
        Group { factors: factors.to_vec(), elems }
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn index(&self, c: &[u64]) -> usize {
        self.elems.iter().position(|e| e == c).expect("coordinates in range")
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let c: Vec<u64> =
            self.factors.iter().enumerate().map(|(i, &f)| (self.elems[a][i] + self.elems[b][i]) % f).collect();
        self.index(&c)
    }

    pub fn scale(&self, k: u64, a: usize) -> usize {
        let c: Vec<u64> = self.factors.iter().enumerate().map(|(i, &f)| (k * self.elems[a][i]) % f).collect();
        self.index(&c)
    }

    pub fn order(&self, a: usize) -> u64 {
        (1..).find(|&k| self.scale(k, a) == 0).unwrap()
    }

    pub fn span(&self, gens: &[usize]) -> u64 {
        let mut s = 1u64;
        loop {
            let mut next = s;
            for x in 0..self.size() {
                if s >> x & 1 == 1 {
                    for &g in gens {
                        next |= 1 << self.add(x, g);
                    }
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn span_mask(&self, m: u64) -> u64 {
        let gens: Vec<usize> = (0..self.size()).filter(|&i| m >> i & 1 == 1).collect();
        self.span(&gens)
    }

    /// Every subgroup, as the span of at most `rank` elements.
    pub fn subgroups(&self) -> Vec<u64> {
        let mut out = vec![];
        let mut tuples: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..self.factors.len() {
            tuples = tuples.into_iter().flat_map(|t| (0..self.size()).map(move |x| [t.clone(), vec![x]].concat())).collect();
        }
        for t in tuples {
            out.push(self.span(&t));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Every endomorphism, indexed by the images of the basis vectors.
    pub fn endomorphisms(&self) -> Vec<Map> {
        let r = self.factors.len();
        let mut choices: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..r {
            let ok: Vec<usize> = (0..self.size()).filter(|&y| self.factors[i].is_multiple_of(self.order(y))).collect();
            choices = choices.into_iter().flat_map(|c| ok.iter().map(move |&y| [c.clone(), vec![y]].concat())).collect();
        }
        choices
            .into_iter()
            .map(|imgs| {
                (0..self.size())
                    .map(|x| {
                        (0..r).fold(0, |acc, i| self.add(acc, self.scale(self.elems[x][i], imgs[i])))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn image(&self, f: &Map, s: u64) -> u64 {
        (0..self.size()).filter(|&x| s >> x & 1 == 1).fold(0, |m, x| m | 1 << f[x])
    }
}

/// The submodule lattice of a group with the product `N_M L`, all by brute force.
pub struct ModuleOracle {
    pub g: Group,
    pub subs: Vec<u64>,
    pub endos: Vec<Map>,
    pub order: Order,
    prod: Vec<usize>,
}

impl ModuleOracle {
    pub fn new(factors: &[u64]) -> Self {
        let g = Group::new(factors);
        let subs = g.subgroups();
        let endos = g.endomorphisms();
        let order = Order::from_fn(subs.len(), |a, b| subs[a] & !subs[b] == 0);
        let k = subs.len();
        let all = subs[order.top()];
        let mut prod = vec![0; k * k];
        for l in 0..k {
            let into: Vec<&Map> = endos.iter().filter(|f| g.image(f, all) & !subs[l] == 0).collect();
            for n in 0..k {
                let sum = into.iter().fold(0u64, |acc, f| acc | g.image(f, subs[n]));
                let s = g.span_mask(sum);
                prod[n * k + l] = subs.iter().position(|&x| x == s).unwrap();
            }
        }
        ModuleOracle { g, subs, endos, order, prod }
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn index_of(&self, s: u64) -> usize {
        self.subs.iter().position(|&x| x == s).expect("subgroup")
    }

    pub fn full(&self) -> usize {
        self.order.top()
    }

    pub fn zero(&self) -> usize {
        self.order.bottom()
    }

    pub fn product(&self, n: usize, l: usize) -> usize {
        self.prod[n * self.len() + l]
    }

    /// Homomorphisms `M → L`, as endomorphisms with image inside `L`.
    pub fn homs_into(&self, l: usize) -> Vec<&Map> {
        let all = self.subs[self.full()];
        self.endos.iter().filter(|f| self.g.image(f, all) & !self.subs[l] == 0).collect()
    }

    pub fn is_fi(&self, n: usize) -> bool {
        self.endos.iter().all(|f| self.g.image(f, self.subs[n]) & !self.subs[n] == 0)
    }

    pub fn fi(&self) -> Vec<usize> {
        (0..self.len()).filter(|&n| self.is_fi(n)).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        let top = self.full();
        (0..self.len())
            .filter(|&n| n != top && (0..self.len()).all(|k| !(self.order.le(n, k) && k != n) || k == top))
            .collect()
    }

    /// Elements `p ≠ M` of `ps` with `ab ≤ p ⟹ a ≤ p or b ≤ p` for `a, b ∈ over`.
    pub fn primes(&self, ps: &[usize], over: &[usize]) -> Vec<usize> {
        let o = &self.order;
        ps.iter()
            .copied()
            .filter(|&p| p != self.full())
            .filter(|&p| {
                over.iter().all(|&a| over.iter().all(|&b| !o.le(self.product(a, b), p) || o.le(a, p) || o.le(b, p)))
            })
            .collect()
    }

    /// Maps a library submodule index to the oracle index.
    pub fn translate(&self, sl: &SubmoduleLattice, i: usize) -> usize {
        let m = sl.module();
        let mask = sl.set(i).iter().fold(0u64, |acc, x| acc | 1 << self.g.index(m.coords(x)));
        self.index_of(mask)
    }

    pub fn translate_name(&self, sl: &SubmoduleLattice, name: &str) -> usize {
        self.translate(sl, sl.lattice().index_of(name).expect("submodule name"))
    }
}
