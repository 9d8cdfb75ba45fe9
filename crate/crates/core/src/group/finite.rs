//! Finite groups given by explicit element lists.

use std::collections::{HashMap, HashSet, VecDeque};

use super::element::{GroupElement, Perm};

/// A finite group: generators plus the sorted list of all elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Group<E: GroupElement> {
    gens: Vec<E>,
    elements: Vec<E>,
}

impl<E: GroupElement> Group<E> {
    /// Closure of `gens`; `identity` fixes the ambient family when `gens` is
    /// empty.
    pub fn generate(gens: &[E], identity: E) -> Self {
        let mut seen: HashSet<E> = HashSet::from([identity]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.op(g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<E> = seen.into_iter().collect();
        elements.sort();
        Group { gens: gens.to_vec(), elements }
    }

    /// Build from a full element list already known to be a group.
    pub fn from_elements(mut elements: Vec<E>) -> Self {
        elements.sort();
        elements.dedup();
        let gens = greedy_generators(&elements);
        Group { gens, elements }
    }

    pub fn gens(&self) -> &[E] {
        &self.gens
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> E {
        self.elements[0].identity_like()
    }

    pub fn contains(&self, x: &E) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, x| num_integer::lcm(acc, x.order()))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|a| self.gens.iter().all(|b| a.op(b) == b.op(a)))
    }

    pub fn conjugate(&self, x: &E) -> Self {
        let gens: Vec<E> = self.gens.iter().map(|g| g.conj_by(x)).collect();
        let mut elements: Vec<E> = self.elements.iter().map(|g| g.conj_by(x)).collect();
        elements.sort();
        Group { gens, elements }
    }

    /// Is `self` normalized by every element of `ambient`?
    pub fn is_normal_in(&self, ambient: &Self) -> bool {
        ambient
            .gens
            .iter()
            .all(|x| self.gens.iter().all(|g| self.contains(&g.conj_by(x))))
    }

    pub fn normal_closure(&self, seeds: &[E]) -> Self {
        let mut gens: Vec<E> = Vec::new();
        for s in seeds {
            for x in &self.elements {
                gens.push(s.conj_by(x));
            }
        }
        gens.sort();
        gens.dedup();
        let g = Group::generate(&gens, self.identity());
        Group::from_elements(g.elements)
    }

    /// Intersection with another subgroup of the same ambient group.
    pub fn intersect(&self, other: &Self) -> Self {
        let els: Vec<E> = self.elements.iter().copied().filter(|x| other.contains(x)).collect();
        Group::from_elements(els)
    }
}

/// A short generating set: scan elements by decreasing order and keep those
/// not already generated.
pub fn greedy_generators<E: GroupElement>(elements: &[E]) -> Vec<E> {
    if elements.is_empty() {
        return Vec::new();
    }
    let id = elements[0].identity_like();
    let mut by_order: Vec<(u64, E)> = elements.iter().map(|x| (x.order(), *x)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut gens = Vec::new();
    let mut cur: HashSet<E> = HashSet::from([id]);
    for (_, x) in by_order {
        if cur.len() == elements.len() {
            break;
        }
        if cur.contains(&x) {
            continue;
        }
        gens.push(x);
        cur = Group::generate(&gens, id).elements.into_iter().collect();
    }
    gens
}

fn three_part(n: usize) -> usize {
    let mut t = 1;
    let mut m = n;
    while m % 3 == 0 {
        m /= 3;
        t *= 3;
    }
    t
}

/// Fast test for `G/N` being of generalized S3-type (embedding in a direct
/// power of S3): exponent dividing 6 and the elements of 3-power order
/// forming an abelian subgroup of full 3-part size.  A Sylow 2-subgroup of
/// exponent 2 is automatically abelian.
pub fn is_generalized_s3_quotient<E: GroupElement>(g: &Group<E>, n: &Group<E>) -> bool {
    let in_n = |x: &E| n.contains(x);
    if !g.elements.iter().all(|x| in_n(&x.pow(6))) {
        return false;
    }
    let t3: Vec<E> = g.elements.iter().copied().filter(|x| in_n(&x.pow(3))).collect();
    let q_order = g.order() / n.order();
    if t3.len() != n.order() * three_part(q_order) {
        return false;
    }
    let t3_set: HashSet<E> = t3.iter().copied().collect();
    let gens = greedy_generators(&t3);
    // Closed under products of generators and commuting modulo N.
    for a in &gens {
        for b in &t3 {
            if !t3_set.contains(&a.op(b)) {
                return false;
            }
        }
        for b in &gens {
            let comm = a.op(b).op(&a.inverse()).op(&b.inverse());
            if !in_n(&comm) {
                return false;
            }
        }
    }
    true
}

pub fn is_generalized_s3_type<E: GroupElement>(g: &Group<E>) -> bool {
    let trivial = Group::generate(&[], g.identity());
    is_generalized_s3_quotient(g, &trivial)
}

/// The elements of `S3` acting on three points.
pub fn s3_elements() -> Vec<Perm> {
    Perm::all(3)
}

/// All homomorphisms `G -> S3`, each as the map on `G.gens_for_homs`.
/// Returned as `(generators, images)` pairs sharing one generator list.
pub fn homs_to_s3<E: GroupElement>(g: &Group<E>) -> (Vec<E>, Vec<Vec<Perm>>) {
    let gens = greedy_generators(g.elements());
    let s3 = s3_elements();
    let id = g.identity();
    let mut out = Vec::new();
    let mut images: Vec<Perm> = Vec::new();
    // Depth-first over generator images; a partial assignment survives only
    // if the subgroup it generates in G x S3 projects injectively to G.
    fn rec<E: GroupElement>(
        gens: &[E],
        s3: &[Perm],
        id: E,
        images: &mut Vec<Perm>,
        out: &mut Vec<Vec<Perm>>,
    ) {
        let k = images.len();
        if k == gens.len() {
            out.push(images.clone());
            return;
        }
        let ord = gens[k].order();
        for s in s3 {
            if ord % s.order() != 0 {
                continue;
            }
            images.push(*s);
            let pairs: Vec<(E, Perm)> = gens[..=k].iter().copied().zip(images.iter().copied()).collect();
            if graph_is_function(&pairs, (id, Perm::identity(3))) {
                rec(gens, s3, id, images, out);
            }
            images.pop();
        }
    }
    rec(&gens, &s3, id, &mut images, &mut out);
    (gens, out)
}

fn graph_is_function<E: GroupElement>(pairs: &[(E, Perm)], id: (E, Perm)) -> bool {
    let mut map: HashMap<E, Perm> = HashMap::from([(id.0, id.1)]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in pairs {
            let y = x.op(g);
            match map.get(&y.0) {
                Some(s) if *s != y.1 => return false,
                Some(_) => {}
                None => {
                    map.insert(y.0, y.1);
                    queue.push_back(y);
                }
            }
        }
    }
    true
}

/// Intersection of the kernels of all homomorphisms `G -> S3`.
pub fn s3_residual<E: GroupElement>(g: &Group<E>) -> Group<E> {
    let (gens, homs) = homs_to_s3(g);
    let id = g.identity();
    let mut in_all: HashSet<E> = g.elements.iter().copied().collect();
    for imgs in &homs {
        let pairs: Vec<(E, Perm)> = gens.iter().copied().zip(imgs.iter().copied()).collect();
        let graph = Group::generate(&pairs, (id, Perm::identity(3)));
        let kernel: HashSet<E> = graph
            .elements()
            .iter()
            .filter(|(_, s)| s.is_identity())
            .map(|(x, _)| *x)
            .collect();
        in_all.retain(|x| kernel.contains(x));
    }
    Group::from_elements(in_all.into_iter().collect())
}
