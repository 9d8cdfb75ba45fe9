//! Subgroup enumeration by cyclic extension.
//!
//! Every subgroup `K` of a solvable group has a normal subgroup `H` of prime
//! index, and then `K = <H, g>` for any `g` in `K \ H`.  Starting from the
//! trivial group, each conjugacy-class representative `H` is extended by
//! elements `g` of its normalizer with `g^p` in `H` for a prime `p`; new
//! groups are deduplicated up to conjugacy in the ambient group.
//!
//! All computations run on a multiplication table indexed by the position of
//! each element in the sorted element list of the ambient group.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use super::element::GroupElement;
use super::finite::Group;
use super::GroupError;

pub const MAX_ENUMERATION_ORDER: usize = 5000;

type Idx = u16;

/// Dense bitset over the ambient group's elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut x = word;
            std::iter::from_fn(move || {
                if x == 0 {
                    return None;
                }
                let t = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(w * 64 + t)
            })
        })
    }
    fn is_subset(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

/// The ambient group with its multiplication table.
pub struct TableGroup<E: GroupElement> {
    pub elems: Vec<E>,
    mul: Vec<Idx>,
    inv: Vec<Idx>,
    ord: Vec<u32>,
    class: Vec<u32>,
    id: usize,
    n: usize,
}

impl<E: GroupElement> TableGroup<E> {
    pub fn new(g: &Group<E>) -> Result<Self, GroupError> {
        let n = g.order();
        if n > MAX_ENUMERATION_ORDER {
            return Err(GroupError::EnumerationBound { order: n, bound: MAX_ENUMERATION_ORDER });
        }
        let elems = g.elements().to_vec();
        let bound = elems[0].code_bound();
        let index: Box<dyn Fn(&E) -> usize> = if bound <= 1 << 26 {
            let mut dense = vec![u32::MAX; bound as usize];
            for (i, x) in elems.iter().enumerate() {
                dense[x.code() as usize] = i as u32;
            }
            Box::new(move |x: &E| dense[x.code() as usize] as usize)
        } else {
            let map: HashMap<E, usize> = elems.iter().enumerate().map(|(i, x)| (*x, i)).collect();
            Box::new(move |x: &E| map[x])
        };
        let mut mul = vec![0 as Idx; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index(&elems[i].op(&elems[j])) as Idx;
            }
        }
        let id = index(&elems[0].identity_like());
        let mut inv = vec![0 as Idx; n];
        let mut ord = vec![0u32; n];
        for i in 0..n {
            inv[i] = index(&elems[i].inverse()) as Idx;
            let (mut x, mut k) = (i, 1);
            while x != id {
                x = mul[x * n + i] as usize;
                k += 1;
            }
            ord[i] = k;
        }
        let mut t = TableGroup { elems, mul, inv, ord, class: vec![u32::MAX; n], id, n };
        t.compute_classes();
        Ok(t)
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    fn conj(&self, h: usize, x: usize) -> usize {
        self.m(self.m(x, h), self.inv[x] as usize)
    }

    fn identity(&self) -> usize {
        self.id
    }

    fn compute_classes(&mut self) {
        let mut next = 0;
        for i in 0..self.n {
            if self.class[i] != u32::MAX {
                continue;
            }
            for x in 0..self.n {
                let c = self.conj(i, x);
                self.class[c] = next;
            }
            next += 1;
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn closure(&self, gens: &[usize]) -> Bits {
        let mut bits = Bits::new(self.n);
        let id = self.identity();
        bits.set(id);
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.m(x, g);
                if !bits.get(y) {
                    bits.set(y);
                    stack.push(y);
                }
            }
        }
        bits
    }

    /// Derived series reaches the trivial group.
    pub fn is_solvable(&self) -> bool {
        let mut cur: Vec<usize> = (0..self.n).collect();
        loop {
            if cur.len() == 1 {
                return true;
            }
            let gens = small_gens(self, &cur);
            let mut comms = Vec::new();
            for &a in &gens {
                for &b in &gens {
                    let c = self.m(self.m(a, b), self.m(self.inv[a] as usize, self.inv[b] as usize));
                    comms.push(c);
                }
            }
            // normal closure of commutators of generators inside cur
            let mut seeds = Vec::new();
            for &c in &comms {
                for &x in &cur {
                    seeds.push(self.conj(c, x));
                }
            }
            seeds.sort_unstable();
            seeds.dedup();
            let next: Vec<usize> = self.closure(&seeds).iter().collect();
            if next.len() == cur.len() {
                return false;
            }
            cur = next;
        }
    }

    pub fn to_group(&self, s: &Subgroup) -> Group<E> {
        let els: Vec<E> = s.bits.iter().map(|i| self.elems[i]).collect();
        let gens: Vec<E> = s.gens.iter().map(|&i| self.elems[i]).collect();
        let g = Group::generate(&gens, self.elems[self.identity()]);
        debug_assert_eq!(g.elements(), &els[..]);
        g
    }

    fn key(&self, bits: &Bits, order: usize) -> Vec<u32> {
        let mut hist: HashMap<u32, u32> = HashMap::new();
        for i in bits.iter() {
            *hist.entry(self.class[i]).or_default() += 1;
        }
        let mut v: Vec<(u32, u32)> = hist.into_iter().collect();
        v.sort_unstable();
        let mut key = vec![order as u32];
        for (c, k) in v {
            key.push(c);
            key.push(k);
        }
        key
    }

    /// Some `x` with `x K x^-1 = K'` (orders equal).
    fn conjugator(&self, k_gens: &[usize], target: &Bits) -> Option<usize> {
        (0..self.n).find(|&x| k_gens.iter().all(|&g| target.get(self.conj(g, x))))
    }

    fn normalizer(&self, s: &Subgroup) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| s.gens.iter().all(|&g| s.bits.get(self.conj(g, x))))
            .collect()
    }
}

fn small_gens<E: GroupElement>(t: &TableGroup<E>, elems: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = elems.to_vec();
    sorted.sort_by(|&a, &b| t.ord[b].cmp(&t.ord[a]).then(a.cmp(&b)));
    let mut gens = Vec::new();
    let mut cur = t.closure(&[]);
    let mut size = 1;
    for x in sorted {
        if size == elems.len() {
            break;
        }
        if cur.get(x) {
            continue;
        }
        gens.push(x);
        cur = t.closure(&gens);
        size = cur.iter().count();
    }
    gens
}

/// A subgroup of a `TableGroup`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub bits: Bits,
    pub order: usize,
    pub gens: Vec<usize>,
}

impl Subgroup {
    pub fn contains(&self, i: usize) -> bool {
        self.bits.get(i)
    }
    pub fn elements(&self) -> Vec<usize> {
        self.bits.iter().collect()
    }
}

/// What to enumerate.
pub struct EnumerationOptions<'a, E: GroupElement> {
    /// A subgroup-closed property; failing groups are not extended.
    pub hereditary: Option<&'a dyn Fn(&TableGroup<E>, &Subgroup) -> bool>,
    /// Final filter on the output.
    pub filter: Option<&'a dyn Fn(&TableGroup<E>, &Subgroup) -> bool>,
    pub up_to_conjugacy: bool,
    pub deadline: Option<Instant>,
}

impl<E: GroupElement> Default for EnumerationOptions<'_, E> {
    fn default() -> Self {
        EnumerationOptions { hereditary: None, filter: None, up_to_conjugacy: true, deadline: None }
    }
}

/// Enumerate subgroups of a solvable group.  Output (one representative per
/// conjugacy class, or every subgroup) is sorted by order and then by
/// element positions, so runs are reproducible.
pub fn enumerate_table<E: GroupElement>(
    t: &TableGroup<E>,
    opts: &EnumerationOptions<'_, E>,
) -> Result<Vec<Subgroup>, GroupError> {
    if !t.is_solvable() {
        return Err(GroupError::NotSolvable);
    }
    let trivial = Subgroup { bits: t.closure(&[]), order: 1, gens: vec![] };
    let mut classes: Vec<Subgroup> = vec![trivial];
    let mut buckets: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    buckets.insert(t.key(&classes[0].bits, 1), vec![0]);
    let mut i = 0;
    while i < classes.len() {
        if let Some(dl) = opts.deadline {
            if Instant::now() > dl {
                return Err(GroupError::BudgetExhausted);
            }
        }
        let h = classes[i].clone();
        i += 1;
        let norm = t.normalizer(&h);
        let mut covered = h.bits.clone();
        for &g in &norm {
            if covered.get(g) {
                continue;
            }
            // order of g modulo H
            let (mut x, mut k) = (g, 1);
            while !h.bits.get(x) {
                x = t.m(x, g);
                k += 1;
            }
            if !is_prime(k) {
                continue;
            }
            let mut bits = h.bits.clone();
            let mut gp = g;
            for _ in 1..k {
                for e in h.bits.iter() {
                    bits.set(t.m(gp, e));
                }
                gp = t.m(gp, g);
            }
            for e in bits.iter() {
                covered.set(e);
            }
            let mut gens = h.gens.clone();
            gens.push(g);
            let cand = Subgroup { bits, order: h.order * k, gens };
            if let Some(pred) = opts.hereditary {
                if !pred(t, &cand) {
                    continue;
                }
            }
            let key = t.key(&cand.bits, cand.order);
            let bucket = buckets.entry(key).or_default();
            if bucket.iter().any(|&j| t.conjugator(&cand.gens, &classes[j].bits).is_some()) {
                continue;
            }
            bucket.push(classes.len());
            classes.push(cand);
        }
    }
    let keep = |s: &Subgroup| opts.filter.is_none_or(|f| f(t, s));
    let mut out: Vec<Subgroup> = if opts.up_to_conjugacy {
        classes.into_iter().filter(|s| keep(s)).collect()
    } else {
        let mut all = Vec::new();
        for s in classes.iter().filter(|s| keep(s)) {
            let mut seen: HashSet<Bits> = HashSet::new();
            for x in 0..t.n {
                let mut bits = Bits::new(t.n);
                for e in s.bits.iter() {
                    bits.set(t.conj(e, x));
                }
                if seen.insert(bits.clone()) {
                    let gens = s.gens.iter().map(|&g| t.conj(g, x)).collect();
                    all.push(Subgroup { bits, order: s.order, gens });
                }
            }
        }
        all
    };
    out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.elements().cmp(&b.elements())));
    Ok(out)
}

/// Enumerate and convert back to explicit groups.
pub fn enumerate_subgroups<E: GroupElement>(
    g: &Group<E>,
    opts: &EnumerationOptions<'_, E>,
) -> Result<Vec<Group<E>>, GroupError> {
    let t = TableGroup::new(g)?;
    Ok(enumerate_table(&t, opts)?.iter().map(|s| t.to_group(s)).collect())
}

fn is_prime(k: usize) -> bool {
    k >= 2 && (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)
}

/// The fast generalized-S3-type test on a table subgroup.
pub fn table_is_s3_type<E: GroupElement>(t: &TableGroup<E>, s: &Subgroup) -> bool {
    if s.bits.iter().any(|i| 6 % t.ord[i] != 0) {
        return false;
    }
    let t3: Vec<usize> = s.bits.iter().filter(|&i| t.ord[i] != 2 && t.ord[i] != 6).collect();
    let mut three = 1;
    let mut m = s.order;
    while m % 3 == 0 {
        m /= 3;
        three *= 3;
    }
    if t3.len() != three {
        return false;
    }
    let mut set = Bits::new(t.n);
    for &i in &t3 {
        set.set(i);
    }
    let gens = small_gens(t, &t3);
    for &a in &gens {
        for &b in &t3 {
            if !set.get(t.m(a, b)) || t.m(a, b) != t.m(b, a) {
                return false;
            }
        }
    }
    true
}

/// `K` is contained in some conjugate of `L`?
pub fn table_conjugate_into<E: GroupElement>(t: &TableGroup<E>, k: &Subgroup, l: &Subgroup) -> bool {
    if l.order % k.order != 0 {
        return false;
    }
    t.conjugator(&k.gens, &l.bits).is_some()
}

pub fn table_subset(a: &Subgroup, b: &Subgroup) -> bool {
    a.bits.is_subset(&b.bits)
}

#[cfg(test)]
mod tests {
    use super::super::element::Perm;
    use super::*;

    fn perm_group(gens: &[&[u8]], deg: u8) -> Group<Perm> {
        let g: Vec<Perm> = gens.iter().map(|x| Perm::new(x)).collect();
        Group::generate(&g, Perm::identity(deg))
    }

    #[test]
    fn s3_has_four_classes_six_subgroups() {
        let g = perm_group(&[&[1, 0, 2], &[1, 2, 0]], 3);
        let classes = enumerate_subgroups(&g, &EnumerationOptions::default()).unwrap();
        assert_eq!(classes.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![1, 2, 3, 6]);
        let all = enumerate_subgroups(&g, &EnumerationOptions { up_to_conjugacy: false, ..Default::default() }).unwrap();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn klein_four_has_five_subgroups() {
        let g = perm_group(&[&[1, 0, 3, 2], &[2, 3, 0, 1]], 4);
        let all = enumerate_subgroups(&g, &EnumerationOptions { up_to_conjugacy: false, ..Default::default() }).unwrap();
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn s4_subgroup_lattice() {
        // S4: 11 conjugacy classes, 30 subgroups
        let g = perm_group(&[&[1, 0, 2, 3], &[1, 2, 3, 0]], 4);
        let classes = enumerate_subgroups(&g, &EnumerationOptions::default()).unwrap();
        assert_eq!(classes.len(), 11);
        let all = enumerate_subgroups(&g, &EnumerationOptions { up_to_conjugacy: false, ..Default::default() }).unwrap();
        assert_eq!(all.len(), 30);
    }

    #[test]
    fn a5_is_rejected() {
        let g = perm_group(&[&[1, 2, 0, 3, 4], &[1, 2, 3, 4, 0]], 5);
        assert_eq!(g.order(), 60);
        assert!(matches!(
            enumerate_subgroups(&g, &EnumerationOptions::default()),
            Err(GroupError::NotSolvable)
        ));
    }
}
