use serde::Serialize;

use super::{Ambient, ElemId, ElemSet, Group};

#[derive(Clone, Debug, Serialize)]
pub struct ConjClass {
    pub representative: ElemId,
    pub members: Vec<ElemId>,
    pub order: u32,
    pub det: i32,
    pub centralizer_order: usize,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes of `ambient` under its own conjugation, sorted by
/// element order, then determinant, then smallest member id.
pub fn conjugacy_classes(group: &Group, ambient: Ambient) -> Vec<ConjClass> {
    let set = group.set(ambient);
    let mut seen = ElemSet::new();
    let mut classes = Vec::new();
    for x in set.iter() {
        if seen.contains(x) {
            continue;
        }
        let members: ElemSet = set.iter().map(|g| group.conjugate(g, x)).collect();
        seen = seen.union(&members);
        classes.push(ConjClass {
            representative: x,
            members: members.to_vec(),
            order: group.order(x),
            det: group.det_sign(x),
            centralizer_order: group.centralizer(x, ambient).len(),
        });
    }
    classes.sort_by_key(|c| (c.order, -c.det, c.representative));
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_of_h() {
        let g = Group::get();
        let cl = conjugacy_classes(g, Ambient::H);
        let orders: Vec<u32> = cl.iter().map(|c| c.order).collect();
        let sizes: Vec<usize> = cl.iter().map(ConjClass::size).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 7, 7]);
        assert_eq!(sizes, vec![1, 21, 56, 42, 24, 24]);
        for c in &cl {
            assert_eq!(c.size() * c.centralizer_order, 168);
        }
    }

    #[test]
    fn classes_of_g_come_in_sign_pairs() {
        let g = Group::get();
        let cl = conjugacy_classes(g, Ambient::G);
        assert_eq!(cl.len(), 12);
        for c in &cl {
            assert_eq!(c.size() * c.centralizer_order, 336);
            let neg: ElemSet = c.members.iter().map(|&x| g.mul(g.minus_one(), x)).collect();
            let partner = cl.iter().find(|d| d.members.contains(&neg.iter().next().unwrap())).unwrap();
            assert_eq!(partner.size(), c.size());
            assert_eq!(partner.members.iter().copied().collect::<ElemSet>(), neg);
        }
    }
}
