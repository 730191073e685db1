use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::perm::Permutation;
use crate::{Error, Result};

/// Size caps for explicit groups and G-sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub group_order: usize,
    pub points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { group_order: 10_080, points: 2_000_000 }
    }
}

/// Full multiplication tables are kept below this order.
const TABLE_ORDER: usize = 1024;

/// A permutation group stored as its full element set.
///
/// Elements are indexed in breadth-first order from the identity (index 0):
/// element `e > 0` equals `generators[word[e].1] ∘ elements[word[e].0]`.
/// Separately, `rank` gives each element's position in the lexicographic
/// order of image vectors, which depends only on the element set.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    word: Vec<(usize, usize)>,
    rank: Vec<usize>,
    by_rank: Vec<usize>,
    inverse: Vec<usize>,
    /// `gen_left[s][e]` is the index of `generators[s] ∘ elements[e]`.
    gen_left: Vec<Vec<usize>>,
    mul_table: Option<Vec<u32>>,
    limits: Limits,
}

impl PermGroup {
    /// The group generated by `generators`, failing if it has more than
    /// `limits.group_order` elements.
    pub fn closure(degree: usize, generators: Vec<Permutation>, limits: Limits) -> Result<Arc<PermGroup>> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut index: BTreeMap<Permutation, usize> = BTreeMap::new();
        let mut elements = vec![Permutation::identity(degree)];
        let mut word = vec![(0, 0)];
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            for (s, g) in generators.iter().enumerate() {
                let y = g.compose(&elements[head]);
                if !index.contains_key(&y) {
                    if elements.len() == limits.group_order {
                        return Err(Error::GroupCapExceeded { cap: limits.group_order });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                    word.push((head, s));
                }
            }
            head += 1;
        }
        let by_rank: Vec<usize> = index.values().copied().collect();
        let mut rank = vec![0; elements.len()];
        for (r, &e) in by_rank.iter().enumerate() {
            rank[e] = r;
        }
        let lookup = |p: &Permutation| index[p];
        let inverse = elements.iter().map(|p| lookup(&p.inverse())).collect();
        let gen_left = generators.iter().map(|g| elements.iter().map(|e| lookup(&g.compose(e))).collect()).collect();
        let order = elements.len();
        let mul_table = (order <= TABLE_ORDER).then(|| {
            let mut t = Vec::with_capacity(order * order);
            for a in &elements {
                for b in &elements {
                    t.push(lookup(&a.compose(b)) as u32);
                }
            }
            t
        });
        Ok(Arc::new(PermGroup {
            degree,
            generators,
            elements,
            word,
            rank,
            by_rank,
            inverse,
            gen_left,
            mul_table,
            limits,
        }))
    }

    /// `S_n` from `(1 2)` and `(1 2 … n)`.
    pub fn symmetric(n: usize, limits: Limits) -> Result<Arc<PermGroup>> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::cycle_range(n, 1, 2)?);
        }
        if n >= 3 {
            gens.push(Permutation::cycle_range(n, 1, n)?);
        }
        PermGroup::closure(n, gens, limits)
    }

    /// `C_n = ⟨(1 2 … n)⟩`.
    pub fn cyclic(n: usize, limits: Limits) -> Result<Arc<PermGroup>> {
        let gens = if n >= 2 { vec![Permutation::cycle_range(n, 1, n)?] } else { Vec::new() };
        PermGroup::closure(n, gens, limits)
    }

    /// Symmetries of the `n`-gon, of order `2n` for `n ≥ 3`.
    pub fn dihedral(n: usize, limits: Limits) -> Result<Arc<PermGroup>> {
        if n < 3 {
            return PermGroup::symmetric(n, limits);
        }
        let rotation = Permutation::cycle_range(n, 1, n)?;
        let reflection = Permutation::from_images((0..n).map(|x| (n - x) % n).collect())?;
        PermGroup::closure(n, vec![rotation, reflection], limits)
    }

    /// `S_i × S_{n-i}` inside `S_n`: the permutations preserving `{1..i}`.
    pub fn young_pair(i: usize, n: usize, limits: Limits) -> Result<Arc<PermGroup>> {
        assert!(i <= n, "young_pair needs i <= n");
        let mut gens = Vec::new();
        for (lo, hi) in [(1, i), (i + 1, n)] {
            if hi > lo {
                gens.push(Permutation::cycle_range(n, lo, lo + 1)?);
            }
            if hi >= lo + 2 {
                gens.push(Permutation::cycle_range(n, lo, hi)?);
            }
        }
        PermGroup::closure(n, gens, limits)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element(&self, e: usize) -> &Permutation {
        &self.elements[e]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// `(parent, generator)` with `element(e) = generators[generator] ∘ element(parent)`.
    pub fn word_step(&self, e: usize) -> (usize, usize) {
        self.word[e]
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    pub fn by_rank(&self, r: usize) -> usize {
        self.by_rank[r]
    }

    pub fn inverse(&self, e: usize) -> usize {
        self.inverse[e]
    }

    pub fn gen_left(&self, s: usize, e: usize) -> usize {
        self.gen_left[s][e]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        self.by_rank.binary_search_by(|&e| self.elements[e].cmp(p)).ok().map(|r| self.by_rank[r])
    }

    /// Index of `element(a) ∘ element(b)`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul_table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index_of(&self.elements[a].compose(&self.elements[b])).expect("group is closed"),
        }
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inverse[g])
    }

    /// True when element indices agree, i.e. both groups were generated from
    /// the same generator list.
    pub fn same_indexing(self: &Arc<Self>, other: &Arc<PermGroup>) -> bool {
        Arc::ptr_eq(self, other) || (self.degree == other.degree && self.generators == other.generators)
    }

    /// True when both groups have the same degree and element set.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.by_rank.iter().zip(&other.by_rank).all(|(&a, &b)| self.elements[a] == other.elements[b])
    }

    /// Index in `self` of every element of `sub`, or an error if `sub` is
    /// not contained in `self`.
    pub fn embed(&self, sub: &PermGroup) -> Result<Vec<usize>> {
        if sub.degree != self.degree {
            return Err(Error::NotASubgroup(format!("degree {} vs {}", sub.degree, self.degree)));
        }
        sub.elements
            .iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::NotASubgroup(format!("{} is not in the ambient group", p))))
            .collect()
    }

    /// Subgroup given by element indices, checked for closure.
    pub fn subgroup(&self, mut members: Vec<usize>) -> Result<Subgroup> {
        members.sort_unstable_by_key(|&e| self.rank[e]);
        members.dedup();
        let mut flag = vec![false; self.order()];
        for &m in &members {
            flag[m] = true;
        }
        if !flag[0] {
            return Err(Error::NotASubgroup("missing identity".into()));
        }
        for &a in &members {
            for &b in &members {
                if !flag[self.mul(a, b)] {
                    return Err(Error::NotASubgroup("not closed under composition".into()));
                }
            }
        }
        Ok(Subgroup { members })
    }

    /// Materialises a subgroup as a group in its own right.
    pub fn subgroup_as_group(&self, sub: &Subgroup) -> Result<Arc<PermGroup>> {
        let mut gen_idx: Vec<usize> = Vec::new();
        let mut reached = vec![false; self.order()];
        reached[0] = true;
        let mut span = vec![0usize];
        for &m in &sub.members {
            if reached[m] {
                continue;
            }
            gen_idx.push(m);
            let mut head = 0;
            while head < span.len() {
                for &g in &gen_idx {
                    let y = self.mul(g, span[head]);
                    if !reached[y] {
                        reached[y] = true;
                        span.push(y);
                    }
                }
                head += 1;
            }
        }
        let gens = gen_idx.iter().map(|&g| self.elements[g].clone()).collect();
        PermGroup::closure(self.degree, gens, self.limits)
    }
}

/// A subgroup of a [`PermGroup`], as element indices sorted by rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Caller guarantees the indices form a subgroup.
    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        Subgroup { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, e: usize, group: &PermGroup) -> bool {
        self.members.binary_search_by_key(&group.rank(e), |&m| group.rank(m)).is_ok()
    }

    pub fn conjugate_by(&self, g: usize, group: &PermGroup) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&h| group.conjugate(g, h)).collect();
        members.sort_unstable_by_key(|&e| group.rank(e));
        Subgroup { members }
    }
}

/// A homomorphism between explicit groups, stored as the image of every
/// source element.
#[derive(Debug, Clone)]
pub struct GroupHom {
    source: Arc<PermGroup>,
    target: Arc<PermGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    /// Extends `generator_images` (one per source generator) along the
    /// source's words and checks that the result respects every product
    /// `generator ∘ element`.
    pub fn from_generator_images(
        source: Arc<PermGroup>,
        target: Arc<PermGroup>,
        generator_images: &[Permutation],
    ) -> Result<GroupHom> {
        if generator_images.len() != source.generators.len() {
            return Err(Error::NotAHomomorphism(format!(
                "{} generator images for {} generators",
                generator_images.len(),
                source.generators.len()
            )));
        }
        let gen_idx = generator_images
            .iter()
            .map(|p| {
                target.index_of(p).ok_or_else(|| Error::NotAHomomorphism(format!("{} is not in the target group", p)))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut images = vec![0; source.order()];
        for e in 1..source.order() {
            let (parent, s) = source.word[e];
            images[e] = target.mul(gen_idx[s], images[parent]);
        }
        for (s, &gs) in gen_idx.iter().enumerate() {
            for e in 0..source.order() {
                if images[source.gen_left[s][e]] != target.mul(gs, images[e]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "relation violated at {} ∘ {}",
                        source.generators[s], source.elements[e]
                    )));
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    /// Inclusion of a subgroup with the same degree.
    pub fn inclusion(sub: Arc<PermGroup>, ambient: Arc<PermGroup>) -> Result<GroupHom> {
        let gens = sub.generators.clone();
        for g in &gens {
            if ambient.index_of(g).is_none() {
                return Err(Error::NotASubgroup(format!("{} is not in the ambient group", g)));
            }
        }
        GroupHom::from_generator_images(sub, ambient, &gens)
    }

    /// Restriction of each source permutation to its action on the first
    /// `target.degree()` points, which must be an invariant set.
    pub fn truncation(source: Arc<PermGroup>, target: Arc<PermGroup>) -> Result<GroupHom> {
        let k = target.degree;
        let gens = source
            .generators
            .iter()
            .map(|g| {
                let imgs: Vec<usize> = g.images()[..k].to_vec();
                Permutation::from_images(imgs)
                    .map_err(|_| Error::NotAHomomorphism(format!("{} does not preserve the first {} points", g, k)))
            })
            .collect::<Result<Vec<_>>>()?;
        GroupHom::from_generator_images(source, target, &gens)
    }

    pub fn source(&self) -> &Arc<PermGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PermGroup> {
        &self.target
    }

    pub fn image(&self, e: usize) -> usize {
        self.images[e]
    }
}
