use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::group::{GroupHom, PermGroup, Subgroup};
use crate::partitions::{binomial, Partition};
use crate::{Error, Result};

/// Descriptor of a point of a [`GSet`]. Indices inside a descriptor refer to
/// the points of the G-set it was built from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    /// A point of the natural action, 1-based.
    Atom(usize),
    /// The left coset `gH`, named by its least-rank representative.
    Coset(usize),
    Pair(Box<Point>, Box<Point>),
    /// A point of the `k`-th summand of a disjoint union.
    Summand(usize, Box<Point>),
    /// A multiset of base points, sorted.
    Multiset(Vec<u32>),
    /// An ordered tuple of pairwise disjoint blocks of base points.
    Blocks(Vec<Vec<u32>>),
    /// `(transversal index, point)` of an induced set.
    Induced(usize, Box<Point>),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Atom(x) => write!(f, "{}", x),
            Point::Coset(g) => write!(f, "g{}H", g),
            Point::Pair(a, b) => write!(f, "({}, {})", a, b),
            Point::Summand(k, p) => write!(f, "{}:{}", k, p),
            Point::Multiset(xs) => write!(f, "{:?}", xs),
            Point::Blocks(bs) => write!(f, "{:?}", bs),
            Point::Induced(r, p) => write!(f, "[r{}, {}]", r, p),
        }
    }
}

/// A finite set with an action of an explicit permutation group.
///
/// The action is stored as one point permutation per group generator; the
/// action of an arbitrary element follows its word in the generators.
#[derive(Debug, Clone)]
pub struct GSet {
    group: Arc<PermGroup>,
    points: Vec<Point>,
    gen_tables: Vec<Vec<u32>>,
}

impl GSet {
    /// Builds a G-set from the images of every group generator and checks
    /// that they define an action of the group.
    pub fn from_generator_images(group: Arc<PermGroup>, points: Vec<Point>, gen_tables: Vec<Vec<u32>>) -> Result<Self> {
        if gen_tables.len() != group.generators().len() {
            return Err(Error::InvalidAction(format!(
                "{} generator tables for {} generators",
                gen_tables.len(),
                group.generators().len()
            )));
        }
        let set = GSet { group, points, gen_tables };
        set.verify()?;
        Ok(set)
    }

    fn check_size(group: &PermGroup, construction: &'static str, size: u128) -> Result<()> {
        let cap = group.limits().points;
        if size > cap as u128 {
            return Err(Error::PointCapExceeded { construction, size, cap });
        }
        Ok(())
    }

    /// `{1..n}` with the group's own permutation action.
    pub fn natural(group: Arc<PermGroup>) -> GSet {
        let points = (1..=group.degree()).map(Point::Atom).collect();
        let gen_tables = group.generators().iter().map(|g| g.images().iter().map(|&x| x as u32).collect()).collect();
        GSet { group, points, gen_tables }
    }

    pub fn one_point(group: Arc<PermGroup>) -> GSet {
        let gen_tables = vec![vec![0]; group.generators().len()];
        GSet { group, points: vec![Point::Multiset(Vec::new())], gen_tables }
    }

    pub fn empty(group: Arc<PermGroup>) -> GSet {
        let gen_tables = vec![Vec::new(); group.generators().len()];
        GSet { group, points: Vec::new(), gen_tables }
    }

    /// The left cosets `G/H` with `g · xH = gxH`.
    pub fn coset_space(group: Arc<PermGroup>, sub: &Subgroup) -> Result<GSet> {
        Self::check_size(&group, "coset space", (group.order() / sub.order()) as u128)?;
        let mut coset_of = vec![u32::MAX; group.order()];
        let mut points = Vec::new();
        for r in 0..group.order() {
            let g = group.by_rank(r);
            if coset_of[g] != u32::MAX {
                continue;
            }
            let id = points.len() as u32;
            for &h in sub.members() {
                coset_of[group.mul(g, h)] = id;
            }
            points.push(Point::Coset(g));
        }
        let reps: Vec<usize> = points
            .iter()
            .map(|p| match p {
                Point::Coset(g) => *g,
                _ => unreachable!(),
            })
            .collect();
        let gen_tables = (0..group.generators().len())
            .map(|s| reps.iter().map(|&g| coset_of[group.gen_left(s, g)]).collect())
            .collect();
        Ok(GSet { group, points, gen_tables })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn generator_table(&self, s: usize) -> &[u32] {
        &self.gen_tables[s]
    }

    /// Image of `x` under every group element, indexed like the group's
    /// elements.
    pub fn images_of(&self, x: usize) -> Vec<u32> {
        let order = self.group.order();
        let mut img = vec![0u32; order];
        img[0] = x as u32;
        for e in 1..order {
            let (parent, s) = self.group.word_step(e);
            img[e] = self.gen_tables[s][img[parent] as usize];
        }
        img
    }

    /// `g · x`.
    pub fn act(&self, g: usize, x: usize) -> usize {
        let mut chain = Vec::new();
        let mut e = g;
        while e != 0 {
            let (parent, s) = self.group.word_step(e);
            chain.push(s);
            e = parent;
        }
        chain.iter().rev().fold(x, |y, &s| self.gen_tables[s][y] as usize)
    }

    /// Full point permutation of element `g`.
    pub fn element_table(&self, g: usize) -> Vec<u32> {
        let mut chain = Vec::new();
        let mut e = g;
        while e != 0 {
            let (parent, s) = self.group.word_step(e);
            chain.push(s);
            e = parent;
        }
        let mut table: Vec<u32> = (0..self.len() as u32).collect();
        for &s in chain.iter().rev() {
            for y in table.iter_mut() {
                *y = self.gen_tables[s][*y as usize];
            }
        }
        table
    }

    /// Checks that each generator acts bijectively and that the induced
    /// map from group elements to point permutations is a homomorphism.
    pub fn verify(&self) -> Result<()> {
        let n = self.len();
        for (s, table) in self.gen_tables.iter().enumerate() {
            if table.len() != n {
                return Err(Error::InvalidAction(format!("generator {} table has wrong length", s)));
            }
            let mut seen = vec![false; n];
            for &y in table {
                if y as usize >= n || seen[y as usize] {
                    return Err(Error::InvalidAction(format!("generator {} does not act bijectively", s)));
                }
                seen[y as usize] = true;
            }
        }
        for x in 0..n {
            let img = self.images_of(x);
            for (s, table) in self.gen_tables.iter().enumerate() {
                for e in 0..self.group.order() {
                    if img[self.group.gen_left(s, e)] != table[img[e] as usize] {
                        return Err(Error::InvalidAction(format!(
                            "generator tables violate a group relation at point {}",
                            x
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `G`-orbits, each sorted, listed by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                for table in &self.gen_tables {
                    let y = table[x] as usize;
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// `{g : g·x = x}`.
    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let img = self.images_of(x);
        let mut members: Vec<usize> = (0..self.group.order()).filter(|&e| img[e] as usize == x).collect();
        members.sort_unstable_by_key(|&e| self.group.rank(e));
        Subgroup::from_sorted_unchecked(members)
    }

    /// `Σ_g |S^g|`, tallied point by point.
    pub fn fixed_point_total(&self) -> u128 {
        (0..self.len()).map(|x| self.images_of(x).iter().filter(|&&y| y as usize == x).count() as u128).sum()
    }

    /// `|S^g|`.
    pub fn fixed_points_of(&self, g: usize) -> usize {
        self.element_table(g).iter().enumerate().filter(|(x, &y)| *x == y as usize).count()
    }

    fn same_group(&self, other: &GSet) -> Result<()> {
        if self.group.same_indexing(&other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// `S × T` with the diagonal action.
    pub fn product(&self, other: &GSet) -> Result<GSet> {
        self.same_group(other)?;
        let (m, k) = (self.len(), other.len());
        Self::check_size(&self.group, "product", m as u128 * k as u128)?;
        let mut points = Vec::with_capacity(m * k);
        for a in &self.points {
            for b in &other.points {
                points.push(Point::Pair(Box::new(a.clone()), Box::new(b.clone())));
            }
        }
        let gen_tables = self
            .gen_tables
            .iter()
            .zip(&other.gen_tables)
            .map(|(ta, tb)| {
                let mut t = Vec::with_capacity(m * k);
                for &a in ta {
                    t.extend(tb.iter().map(|&b| a * k as u32 + b));
                }
                t
            })
            .collect();
        Ok(GSet { group: self.group.clone(), points, gen_tables })
    }

    /// `S ⊔ T`.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        self.same_group(other)?;
        let m = self.len() as u32;
        Self::check_size(&self.group, "disjoint union", self.len() as u128 + other.len() as u128)?;
        let points = self
            .points
            .iter()
            .map(|p| Point::Summand(0, Box::new(p.clone())))
            .chain(other.points.iter().map(|p| Point::Summand(1, Box::new(p.clone()))))
            .collect();
        let gen_tables = self
            .gen_tables
            .iter()
            .zip(&other.gen_tables)
            .map(|(ta, tb)| ta.iter().copied().chain(tb.iter().map(|&y| y + m)).collect())
            .collect();
        Ok(GSet { group: self.group.clone(), points, gen_tables })
    }

    /// Multisets of size `i` over the points.
    pub fn symmetric_power(&self, i: usize) -> Result<GSet> {
        let m = self.len();
        let size = if m == 0 { u128::from(i == 0) } else { binomial((m + i - 1) as u128, i as u128)? };
        Self::check_size(&self.group, "symmetric power", size)?;
        let mut multisets: Vec<Vec<u32>> = Vec::new();
        let mut current = Vec::new();
        multisets_from(m as u32, i, 0, &mut current, &mut multisets);
        let index: BTreeMap<&[u32], u32> =
            multisets.iter().enumerate().map(|(j, ms)| (ms.as_slice(), j as u32)).collect();
        let gen_tables = self
            .gen_tables
            .iter()
            .map(|table| {
                multisets
                    .iter()
                    .map(|ms| {
                        let mut image: Vec<u32> = ms.iter().map(|&x| table[x as usize]).collect();
                        image.sort_unstable();
                        index[image.as_slice()]
                    })
                    .collect()
            })
            .collect();
        let points = multisets.iter().cloned().map(Point::Multiset).collect();
        Ok(GSet { group: self.group.clone(), points, gen_tables })
    }

    /// `P_μ(S)`: ordered tuples of pairwise disjoint subsets with block `j`
    /// of size `μ_j`. Empty when `|μ| > |S|`.
    pub fn p_mu(&self, mu: &Partition) -> Result<GSet> {
        let m = self.len();
        if mu.weight() > m {
            return Ok(GSet::empty(self.group.clone()));
        }
        let mut size: u128 = 1;
        let mut left = m as u128;
        for &p in mu.parts() {
            size = size.saturating_mul(binomial(left, p as u128)?);
            left -= p as u128;
        }
        Self::check_size(&self.group, "P_mu", size)?;
        let mut tuples = Vec::new();
        let mut used = vec![false; m];
        let mut blocks = Vec::new();
        tuples_from(mu.parts(), &mut used, &mut blocks, &mut tuples);
        let index: BTreeMap<&Vec<Vec<u32>>, u32> = tuples.iter().enumerate().map(|(j, t)| (t, j as u32)).collect();
        let gen_tables = self
            .gen_tables
            .iter()
            .map(|table| {
                tuples
                    .iter()
                    .map(|t| {
                        let image: Vec<Vec<u32>> = t
                            .iter()
                            .map(|block| {
                                let mut b: Vec<u32> = block.iter().map(|&x| table[x as usize]).collect();
                                b.sort_unstable();
                                b
                            })
                            .collect();
                        index[&image]
                    })
                    .collect()
            })
            .collect();
        let points = tuples.iter().cloned().map(Point::Blocks).collect();
        Ok(GSet { group: self.group.clone(), points, gen_tables })
    }

    /// The same points with the source group acting through `hom`.
    pub fn restrict(&self, hom: &GroupHom) -> Result<GSet> {
        if !Arc::ptr_eq(hom.target(), &self.group) && !hom.target().same_elements(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let source = hom.source().clone();
        let gen_tables = (0..source.generators().len())
            .map(|s| {
                let g = hom.target().element(hom.image(source.gen_left(s, 0))).clone();
                let e = self.group.index_of(&g).expect("image lies in the acting group");
                self.element_table(e)
            })
            .collect();
        Ok(GSet { group: source, points: self.points.clone(), gen_tables })
    }

    /// `G ×_H S` realised as `R × S` for a left transversal `R` of `G/H`,
    /// with `g · (r_i, s) = (r_j, h·s)` where `g r_i = r_j h`.
    ///
    /// `self` must be a set over a subgroup `H` of `ambient` (same degree).
    /// When `transversal` is `None` the least-rank coset representatives
    /// are used.
    pub fn induce(&self, ambient: Arc<PermGroup>, transversal: Option<&[usize]>) -> Result<GSet> {
        let sub = &self.group;
        let embedding = ambient.embed(sub)?;
        let mut in_sub = vec![usize::MAX; ambient.order()];
        for (h, &g) in embedding.iter().enumerate() {
            in_sub[g] = h;
        }
        let index = ambient.order() / sub.order();
        let reps: Vec<usize> = match transversal {
            Some(r) => r.to_vec(),
            None => {
                let mut seen = vec![false; ambient.order()];
                let mut reps = Vec::new();
                for r in 0..ambient.order() {
                    let g = ambient.by_rank(r);
                    if seen[g] {
                        continue;
                    }
                    reps.push(g);
                    for &h in &embedding {
                        seen[ambient.mul(g, h)] = true;
                    }
                }
                reps
            }
        };
        if reps.len() != index {
            return Err(Error::InvalidTransversal(format!("{} representatives for index {}", reps.len(), index)));
        }
        // coset id of every element of the ambient group
        let mut coset_of = vec![usize::MAX; ambient.order()];
        for (j, &r) in reps.iter().enumerate() {
            if r >= ambient.order() {
                return Err(Error::InvalidTransversal(format!("element index {} out of range", r)));
            }
            for &h in &embedding {
                let g = ambient.mul(r, h);
                if coset_of[g] != usize::MAX {
                    return Err(Error::InvalidTransversal("two representatives share a coset".into()));
                }
                coset_of[g] = j;
            }
        }
        let m = self.len();
        Self::check_size(&ambient, "induced set", index as u128 * m as u128)?;
        let mut points = Vec::with_capacity(index * m);
        for j in 0..index {
            for p in &self.points {
                points.push(Point::Induced(j, Box::new(p.clone())));
            }
        }
        let mut h_tables: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        let mut gen_tables = Vec::with_capacity(ambient.generators().len());
        for s in 0..ambient.generators().len() {
            let mut table = vec![0u32; index * m];
            for (i, &r) in reps.iter().enumerate() {
                let gr = ambient.gen_left(s, r);
                let j = coset_of[gr];
                let h = ambient.mul(ambient.inverse(reps[j]), gr);
                let h_local = in_sub[h];
                debug_assert!(h_local != usize::MAX);
                let ht = h_tables.entry(h_local).or_insert_with(|| self.element_table(h_local));
                for x in 0..m {
                    table[i * m + x] = (j * m) as u32 + ht[x];
                }
            }
            gen_tables.push(table);
        }
        Ok(GSet { group: ambient, points, gen_tables })
    }
}

fn multisets_from(m: u32, left: usize, min: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if left == 0 {
        out.push(current.clone());
        return;
    }
    for x in min..m {
        current.push(x);
        multisets_from(m, left - 1, x, current, out);
        current.pop();
    }
}

fn tuples_from(sizes: &[usize], used: &mut Vec<bool>, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    let Some((&size, rest)) = sizes.split_first() else {
        out.push(blocks.clone());
        return;
    };
    let mut block = Vec::with_capacity(size);
    subsets_from(size, 0, used, &mut block, &mut |used, block| {
        blocks.push(block.to_vec());
        tuples_from(rest, used, blocks, out);
        blocks.pop();
    });
}

fn subsets_from<F>(size: usize, start: usize, used: &mut Vec<bool>, block: &mut Vec<u32>, emit: &mut F)
where
    F: FnMut(&mut Vec<bool>, &[u32]),
{
    if block.len() == size {
        // mark while the remaining blocks are chosen
        for &x in block.iter() {
            used[x as usize] = true;
        }
        emit(used, block);
        for &x in block.iter() {
            used[x as usize] = false;
        }
        return;
    }
    for x in start..used.len() {
        if !used[x] {
            block.push(x as u32);
            subsets_from(size, x + 1, used, block, emit);
            block.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::group::Limits;
    use crate::engine::perm::Permutation;

    fn s(n: usize) -> Arc<PermGroup> {
        PermGroup::symmetric(n, Limits::default()).unwrap()
    }

    #[test]
    fn natural_orbits() {
        let g = s(5);
        let nat = GSet::natural(g.clone());
        nat.verify().unwrap();
        assert_eq!(nat.orbits().len(), 1);
        let trivial = PermGroup::closure(5, Vec::new(), Limits::default()).unwrap();
        assert_eq!(GSet::natural(trivial).orbits().len(), 5);
        assert_eq!(nat.stabilizer(0).order(), 24);
    }

    #[test]
    fn cyclic_on_ordered_pairs() {
        let c4 = PermGroup::cyclic(4, Limits::default()).unwrap();
        let nat = GSet::natural(c4);
        let pairs = nat.p_mu(&Partition::ones(2)).unwrap();
        assert_eq!(pairs.len(), 12);
        let orbits = pairs.orbits();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.len() == 4));
    }

    #[test]
    fn construction_sizes() {
        let nat = GSet::natural(s(4));
        assert_eq!(nat.symmetric_power(0).unwrap().len(), 1);
        assert_eq!(nat.symmetric_power(2).unwrap().len(), 10);
        assert_eq!(nat.p_mu(&Partition::new(vec![2, 1]).unwrap()).unwrap().len(), 12);
        assert_eq!(nat.p_mu(&Partition::single(4)).unwrap().len(), 1);
        assert!(nat.p_mu(&Partition::single(5)).unwrap().is_empty());
        let prod = nat.product(&nat).unwrap();
        assert_eq!(prod.len(), 16);
        prod.verify().unwrap();
        let union = nat.disjoint_union(&GSet::empty(nat.group().clone())).unwrap();
        assert_eq!(union.len(), 4);
        for set in [nat.symmetric_power(3).unwrap(), nat.p_mu(&Partition::new(vec![2, 1]).unwrap()).unwrap()] {
            set.verify().unwrap();
        }
    }

    #[test]
    fn bad_action_is_rejected() {
        let g = s(3);
        // (1 2) -> identity, (1 2 3) -> swap: does not respect the relations
        let tables = vec![vec![0, 1], vec![1, 0]];
        let res = GSet::from_generator_images(g, vec![Point::Atom(1), Point::Atom(2)], tables);
        assert!(matches!(res, Err(Error::InvalidAction(_))));
    }

    #[test]
    fn point_cap() {
        let g = PermGroup::symmetric(4, Limits { group_order: 100, points: 30 }).unwrap();
        let nat = GSet::natural(g);
        assert!(matches!(nat.symmetric_power(4), Err(Error::PointCapExceeded { .. })));
    }

    #[test]
    fn act_matches_tables() {
        let nat = GSet::natural(s(4));
        let g = nat.group().clone();
        for e in 0..g.order() {
            for x in 0..4 {
                assert_eq!(nat.act(e, x), g.element(e).apply(x));
            }
        }
        let t = g.index_of(&Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap()).unwrap();
        assert_eq!(nat.fixed_points_of(t), 0);
    }

    #[test]
    fn restriction_to_young_pair() {
        let l = Limits::default();
        let g = s(5);
        let h = PermGroup::young_pair(2, 5, l).unwrap();
        let hom = GroupHom::inclusion(h, g.clone()).unwrap();
        let res = GSet::natural(g).restrict(&hom).unwrap();
        res.verify().unwrap();
        assert_eq!(res.orbits(), vec![vec![0, 1], vec![2, 3, 4]]);
    }

    #[test]
    fn induction_sizes_and_transversals() {
        let l = Limits::default();
        let g = s(4);
        let h = PermGroup::young_pair(1, 4, l).unwrap();
        let point = GSet::one_point(h.clone());
        let induced = point.induce(g.clone(), None).unwrap();
        induced.verify().unwrap();
        assert_eq!(induced.len(), 4);
        assert_eq!(induced.orbits().len(), 1);
        assert!(matches!(point.induce(g.clone(), Some(&[0, 1])), Err(Error::InvalidTransversal(_))));
        assert!(matches!(point.induce(g, Some(&[0, 0, 0, 0])), Err(Error::InvalidTransversal(_))));
    }
}
