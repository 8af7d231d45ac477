//! The lattice of subgroups of `H`, grouped into conjugacy classes.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{recognize, Ambient, ElemId, ElemSet, Group, SubgroupLabel};

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupClass {
    /// 1-based row number: decreasing order, non-cyclic before cyclic, and
    /// paired classes numbered so that the lower-numbered member of each pair
    /// sits inside the lower-numbered member of the pair above it.
    pub number: usize,
    pub order: usize,
    pub length: usize,
    pub label: SubgroupLabel,
    pub members: Vec<usize>,
    /// `(class number, count)` of maximal subgroups of one representative.
    pub maximal_subgroups: Vec<(usize, usize)>,
    /// `(class number, count)` of minimal overgroups of one representative.
    pub minimal_overgroups: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupLattice {
    pub subgroups: Vec<ElemSet>,
    pub classes: Vec<SubgroupClass>,
}

impl SubgroupLattice {
    pub fn total(&self) -> usize {
        self.subgroups.len()
    }

    pub fn class_of(&self, idx: usize) -> usize {
        self.classes.iter().find(|c| c.members.contains(&idx)).map(|c| c.number).expect("indexed")
    }
}

struct Found {
    set: ElemSet,
    gens: Vec<ElemId>,
}

/// Every subgroup of `ambient`, built as joins of cyclic subgroups.
fn enumerate(group: &Group, ambient: Ambient) -> Vec<ElemSet> {
    let set = group.set(ambient);
    let mut seen = HashSet::new();
    let mut cyclic: Vec<(ElemSet, ElemId)> = Vec::new();
    for x in set.iter() {
        let c = group.closure(&[x]);
        if seen.insert(c) {
            cyclic.push((c, x));
        }
    }
    let mut found: Vec<Found> = cyclic.iter().map(|&(s, x)| Found { set: s, gens: vec![x] }).collect();
    let mut i = 0;
    while i < found.len() {
        for &(c, x) in &cyclic {
            if c.is_subset(&found[i].set) {
                continue;
            }
            let mut gens = found[i].gens.clone();
            gens.push(x);
            let join = group.closure(&gens);
            if seen.insert(join) {
                found.push(Found { set: join, gens });
            }
        }
        i += 1;
    }
    let mut all: Vec<ElemSet> = found.into_iter().map(|f| f.set).collect();
    all.sort_by_key(|s| (std::cmp::Reverse(s.len()), s.to_vec()));
    all
}

pub fn all_subgroups(group: &Group) -> SubgroupLattice {
    let subs = enumerate(group, Ambient::H);
    let n = subs.len();
    let index: BTreeMap<ElemSet, usize> = subs.iter().enumerate().map(|(i, s)| (*s, i)).collect();

    // conjugacy classes under H
    let mut class_of = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> =
            group.set(Ambient::H).iter().map(|g| index[&group.conjugate_set(g, &subs[i])]).collect();
        members.sort();
        members.dedup();
        for &m in &members {
            class_of[m] = raw.len();
        }
        raw.push(members);
    }

    // maximal-subgroup relation
    let contains = |a: usize, b: usize| a != b && subs[b].is_subset(&subs[a]);
    let mut maximal_in: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            if contains(a, b) && !(0..n).any(|c| contains(a, c) && contains(c, b)) {
                maximal_in[a].push(b);
            }
        }
    }

    let is_cyclic = |s: &ElemSet| s.iter().any(|x| group.order(x) as usize == s.len());
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&c| {
        let s = &subs[raw[c][0]];
        (std::cmp::Reverse(s.len()), is_cyclic(s), raw[c][0])
    });

    // renumber same-order non-cyclic pairs by containment in the pair above
    let mut number = vec![0usize; raw.len()];
    for (pos, &c) in order.iter().enumerate() {
        number[c] = pos + 1;
    }
    let rep = |c: usize| raw[c][0];
    let inside = |small: usize, big: usize| raw[small].iter().any(|&s| maximal_in[rep(big)].contains(&s));
    let mut pos = 0;
    while pos + 1 < order.len() {
        let (a, b) = (order[pos], order[pos + 1]);
        let same = subs[rep(a)].len() == subs[rep(b)].len() && !is_cyclic(&subs[rep(a)]) && !is_cyclic(&subs[rep(b)]);
        if same {
            // the class above with the lowest number that contains exactly one of them
            let parent =
                order[..pos].iter().copied().filter(|&p| inside(a, p) != inside(b, p)).min_by_key(|&p| number[p]);
            if let Some(p) = parent {
                if inside(b, p) {
                    order.swap(pos, pos + 1);
                    number[b] = pos + 1;
                    number[a] = pos + 2;
                }
            }
            pos += 2;
        } else {
            pos += 1;
        }
    }

    let classes = order
        .iter()
        .map(|&c| {
            let r = rep(c);
            let mut maxes: BTreeMap<usize, usize> = BTreeMap::new();
            for &m in &maximal_in[r] {
                *maxes.entry(number[class_of[m]]).or_default() += 1;
            }
            let mut overs: BTreeMap<usize, usize> = BTreeMap::new();
            for (o, subs_of_o) in maximal_in.iter().enumerate() {
                if subs_of_o.contains(&r) {
                    *overs.entry(number[class_of[o]]).or_default() += 1;
                }
            }
            SubgroupClass {
                number: number[c],
                order: subs[r].len(),
                length: raw[c].len(),
                label: recognize(group, &subs[r]).expect("subgroup of H"),
                members: raw[c].clone(),
                maximal_subgroups: maxes.into_iter().collect(),
                minimal_overgroups: overs.into_iter().collect(),
            }
        })
        .collect();

    SubgroupLattice { subgroups: subs, classes }
}
