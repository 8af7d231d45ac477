//! The acceptance suite: one outcome per criterion, in a fixed order.

use std::collections::BTreeSet;

use klein_core::group::{all_subgroups, conjugacy_classes, recognize, roots, Ambient, Group};
use klein_core::linalg::{hnf_row_lattice, smith_normal_form, IntMat};
use klein_core::orbits::{
    classify_locus, dissident_on_curve_check, doubling_check, orbit, reflection_generated, singularity_report,
    stabilizer, Curve, Locus, OrbitRecord,
};
use klein_core::torus::registry::PointName;
use klein_core::torus::{
    det_minus_identity, enumerate_fixed_points, fixed_locus_structure, fixed_point_count, TorusPoint,
};
use klein_core::{forms, hermitian, qnum::rat, QNum, Result};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::outcome::{Status, VerifyOutcome};

type Check = fn(&Group, u64) -> Result<VerifyOutcome>;

const CHECKS: [(&str, Check); 14] = [
    ("group-construction", group_construction),
    ("order-spectrum", order_spectrum),
    ("conjugacy-classes", class_sizes),
    ("fixed-point-counts", fixed_point_counts),
    ("fixed-point-sets", fixed_point_sets),
    ("parabolic-structure", parabolic_structure),
    ("seven-torsion", seven_torsion),
    ("beta-table", beta_table),
    ("two-torsion", two_torsion),
    ("subgroup-lattice", subgroup_lattice),
    ("singularity-report", singularities),
    ("generic-curve-stabilizers", generic_stabilizers),
    ("quartic-invariance", quartic_invariance),
    ("property-suites", property_suites),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs every check; an internal error becomes a failed outcome.
pub fn run_suite(group: &Group, seed: u64) -> Vec<VerifyOutcome> {
    CHECKS
        .iter()
        .map(|(name, check)| {
            check(group, seed)
                .unwrap_or_else(|e| VerifyOutcome::new(name, "internal", "no error", format!("error: {e}")))
        })
        .collect()
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn group_construction(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let all = g.set(Ambient::G);
    let refl = all.iter().filter(|&x| g.is_reflection(x)).count();
    let anti = all.iter().filter(|&x| g.is_antireflection(x)).count();
    let rs = roots();
    let two = QNum::from(2);
    let square_two = rs.iter().filter(|r| hermitian(r, r) == two).count();
    let rels = g.relations();
    let holding = rels.iter().filter(|(_, id)| *id == g.identity()).count();
    let fmt = |n: usize, h: usize, r: usize, a: usize, roots: usize, sq: usize, ok: usize, total: usize| {
        format!(
            "|G|={n} |H|={h} reflections={r} antireflections={a} roots={roots} square-2={sq} relations={ok}/{total}"
        )
    };
    Ok(VerifyOutcome::new(
        "group-construction",
        "group order, reflections, root system and presentation",
        fmt(336, 168, 21, 21, 42, 42, 7, 7),
        fmt(all.len(), g.set(Ambient::H).len(), refl, anti, rs.len(), square_two, holding, rels.len()),
    ))
}

fn order_spectrum(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let orders: BTreeSet<u32> = g.set(Ambient::G).iter().map(|x| g.order(x)).collect();
    let coxeter = g.product(&[g.named("r1")?, g.named("r2")?, g.named("r3")?]);
    let minus = g.pow(coxeter, 7) == g.minus_one();
    Ok(VerifyOutcome::new(
        "order-spectrum",
        "element orders and the Coxeter element",
        "orders {1,2,3,4,6,7,14}; (r1r2r3)^7 = -id: true",
        format!("orders {{{}}}; (r1r2r3)^7 = -id: {minus}", list(orders)),
    ))
}

fn class_sizes(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let h = conjugacy_classes(g, Ambient::H);
    let gc = conjugacy_classes(g, Ambient::G);
    let m1 = g.minus_one();
    let paired = gc.iter().all(|c| {
        let neg = g.mul(m1, c.representative);
        gc.iter().any(|d| d.members.contains(&neg) && d.size() == c.size() && d.representative != c.representative)
    });
    let fmt = |n: usize, orders: String, sizes: String, total: usize, gn: usize, pairs: bool| {
        format!("H: {n} classes, orders ({orders}), sizes ({sizes}), total {total}; G: {gn} classes, ± pairs of equal size: {pairs}")
    };
    let actual = fmt(
        h.len(),
        list(h.iter().map(|c| c.order)),
        list(h.iter().map(|c| c.size())),
        h.iter().map(|c| c.size()).sum(),
        gc.len(),
        paired,
    );
    let expected = fmt(6, "1,2,3,4,7,7".into(), "1,21,56,42,24,24".into(), 168, 12, true);
    let o = VerifyOutcome::new(
        "conjugacy-classes",
        "class table of H; the order-4 class is printed with 24 elements, but there are 42 elements of order 4 with determinant 1 and the sizes must sum to 168",
        expected,
        actual,
    );
    Ok(if o.status == Status::Pass { o.with_status(Status::Discrepancy) } else { o })
}

const ELLIPTIC: [&str; 5] = ["m1", "h4p", "c", "g7", "-g7"];

fn element(g: &Group, name: &str) -> Result<usize> {
    match name.strip_prefix('-') {
        Some(n) => Ok(g.mul(g.minus_one(), g.named(n)?)),
        None => g.named(name),
    }
}

fn fixed_point_counts(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let dets = [QNum::from(-8), QNum::from(-4), QNum::from(-2), QNum::i_sqrt7(), QNum::from(-1)];
    let counts = [64, 16, 4, 7, 1];
    let expected: Vec<String> =
        ELLIPTIC.iter().zip(dets.iter().zip(counts)).map(|(n, (d, c))| format!("{n}: det {d}, count {c}")).collect();
    let mut actual = Vec::new();
    for n in ELLIPTIC {
        let id = element(g, n)?;
        actual.push(format!("{n}: det {}, count {}", det_minus_identity(g, id), fixed_point_count(g, id)?));
    }
    Ok(VerifyOutcome::new(
        "fixed-point-counts",
        "det(gamma - id) and fixed-point counts of elliptic elements",
        expected.join("; "),
        actual.join("; "),
    ))
}

fn fixed_point_sets(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let families: [(&str, &str, Vec<PointName>); 4] = [
        ("m1", "xi", (0..64).map(PointName::Xi).collect()),
        ("h4p", "beta", (0..16).map(PointName::Beta).collect()),
        ("c", "omega", (0..4).map(|k| PointName::Omega(k / 2, k % 2)).collect()),
        ("g7", "eta", (0..7).map(PointName::Eta).collect()),
    ];
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for (elem, family, names) in families {
        let registry: BTreeSet<TorusPoint> = names.iter().map(|n| n.point()).collect();
        let found: BTreeSet<TorusPoint> = enumerate_fixed_points(g, g.named(elem)?)?.into_iter().collect();
        expected.push(format!("{elem}: {} points = {family}", registry.len()));
        let rel = if found == registry { "=" } else { "≠" };
        actual.push(format!("{elem}: {} points {rel} {family}", found.len()));
    }
    Ok(VerifyOutcome::new(
        "fixed-point-sets",
        "fixed points of elliptic elements against the named torsion points",
        expected.join("; "),
        actual.join("; "),
    ))
}

fn parabolic_structure(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let expected = [("r2", 1, 2), ("rho2", 4, 1), ("c3", 1, 1), ("h4", 1, 1)];
    let fmt = |n: &str, c: usize, d: usize| format!("{n}: {c} components of dimension {d}");
    let mut actual = Vec::new();
    for (n, _, _) in expected {
        let l = fixed_locus_structure(g, g.named(n)?)?;
        actual.push(fmt(n, l.component_count, l.dimension));
    }
    Ok(VerifyOutcome::new(
        "parabolic-structure",
        "fixed loci of parabolic elements",
        expected.iter().map(|&(n, c, d)| fmt(n, c, d)).collect::<Vec<_>>().join("; "),
        actual.join("; "),
    ))
}

fn seven_torsion(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let points = Locus::T7.points(g)?.len();
    let sizes =
        |q: Ambient| -> Result<String> { Ok(list(classify_locus(g, Locus::T7, q)?.iter().map(|r| r.orbit_size))) };
    let doubling = doubling_check(g)?.h3_doubles_eta1;
    let g7 = g.named("g7")?;
    let normalizer = g.normalizer(&g.closure(&[g7]), Ambient::H).len();
    let stab = stabilizer(g, &PointName::Eta(1).point(), Ambient::H).len();
    let fmt = |p: usize, go: String, ho: String, d: bool, n: usize, s: usize| {
        format!("{p} points; G-orbits [{go}]; H-orbits [{ho}]; h3 eta1 = 2 eta1: {d}; |N_H(<g7>)| = {n}; |Stab_H(eta1)| = {s}")
    };
    Ok(VerifyOutcome::new(
        "seven-torsion",
        "orbits of the 7-torsion points fixed by g7",
        fmt(48, "48".into(), "24,24".into(), true, 21, 7),
        fmt(points, sizes(Ambient::G)?, sizes(Ambient::H)?, doubling, normalizer, stab),
    ))
}

fn beta_table(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let recs = classify_locus(g, Locus::Beta, Ambient::G)?;
    // label, points, images, reflection-generated
    let mut cols: Vec<(String, usize, usize, bool)> = Vec::new();
    for r in &recs {
        match cols.iter_mut().find(|c| c.0 == r.label.to_string()) {
            Some(c) => {
                c.1 += r.locus_points;
                c.2 += 1;
                c.3 &= r.reflection_generated;
            }
            None => cols.push((r.label.to_string(), r.locus_points, 1, r.reflection_generated)),
        }
    }
    let fmt = |cols: &[(String, usize, usize, bool)]| {
        cols.iter()
            .map(|(l, p, i, rg)| {
                format!(
                    "{l}: {p} points, {i} images, {}",
                    if *rg { "reflection-generated" } else { "not reflection-generated" }
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    };
    let expected =
        [("±S4", 2, 2, true), ("S′4", 4, 2, true), ("±D8", 1, 1, true), ("D′8", 4, 2, true), ("C4", 4, 1, false)]
            .map(|(l, p, i, rg)| (l.to_string(), p, i, rg));
    Ok(VerifyOutcome::new("beta-table", "stabilizers of the nonzero fixed points of h4p", fmt(&expected), fmt(&cols)))
}

fn orbit_summary(r: &OrbitRecord) -> String {
    let image = if r.is_smooth() { "smooth".to_string() } else { r.local_type.to_string() };
    format!("{} {} {image}", r.orbit_size, r.label)
}

fn two_torsion(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let recs = classify_locus(g, Locus::T2, Ambient::G)?;
    let total: usize = recs.iter().map(|r| r.orbit_size).sum();
    Ok(VerifyOutcome::new(
        "two-torsion",
        "G-orbits of the nonzero half-periods",
        "7 ±S4 smooth; 7 ±S4 smooth; 21 ±D8 smooth; 28 ±S3 smooth; total 63",
        format!("{}; total {total}", recs.iter().map(orbit_summary).collect::<Vec<_>>().join("; ")),
    ))
}

/// `(order, length, maximal subgroups, minimal overgroups)` per class.
type SubgroupRow = (usize, usize, &'static [(usize, usize)], &'static [(usize, usize)]);

#[rustfmt::skip]
const SUBGROUP_TABLE: [SubgroupRow; 15] = [
    (168, 1, &[(2, 7), (3, 7), (4, 8)], &[]),
    (24, 7, &[(5, 1), (7, 3), (9, 4)], &[(1, 1)]),
    (24, 7, &[(6, 1), (7, 3), (9, 4)], &[(1, 1)]),
    (21, 8, &[(8, 1), (13, 7)], &[(1, 1)]),
    (12, 7, &[(10, 1), (13, 4)], &[(2, 1)]),
    (12, 7, &[(11, 1), (13, 4)], &[(3, 1)]),
    (8, 21, &[(10, 1), (11, 1), (12, 1)], &[(2, 1), (3, 1)]),
    (7, 8, &[(15, 1)], &[(4, 1)]),
    (6, 28, &[(13, 1), (14, 3)], &[(2, 1), (3, 1)]),
    (4, 7, &[(14, 3)], &[(5, 1), (7, 3)]),
    (4, 7, &[(14, 3)], &[(6, 1), (7, 3)]),
    (4, 21, &[(14, 1)], &[(7, 1)]),
    (3, 28, &[(15, 1)], &[(4, 2), (5, 1), (6, 1), (9, 1)]),
    (2, 21, &[(15, 1)], &[(9, 4), (10, 1), (11, 1), (12, 1)]),
    (1, 1, &[], &[(8, 8), (13, 28), (14, 21)]),
];

fn subgroup_lattice(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let lat = all_subgroups(g);
    let shape = |rows: Vec<(usize, usize)>| list(rows.iter().map(|(o, l)| format!("({o};{l})")));
    let mismatched: Vec<usize> = lat
        .classes
        .iter()
        .zip(SUBGROUP_TABLE)
        .filter(|(c, (_, _, maxes, overs))| c.maximal_subgroups != *maxes || c.minimal_overgroups != *overs)
        .map(|(c, _)| c.number)
        .collect();
    let inclusions =
        |bad: &[usize]| if bad.is_empty() { "all match".to_string() } else { format!("differ at [{}]", list(bad)) };
    let fmt = |n: usize, s: String, inc: String| format!("{n} classes {s}; inclusions {inc}");
    Ok(VerifyOutcome::new(
        "subgroup-lattice",
        "conjugacy classes of subgroups of H with maximal subgroups and minimal overgroups",
        fmt(15, shape(SUBGROUP_TABLE.iter().map(|r| (r.0, r.1)).collect()), inclusions(&[])),
        fmt(
            lat.classes.len(),
            shape(lat.classes.iter().map(|c| (c.order, c.length)).collect()),
            inclusions(&mismatched),
        ),
    ))
}

fn singularities(g: &Group, seed: u64) -> Result<VerifyOutcome> {
    let x = singularity_report(g, Ambient::G, seed)?;
    let y = singularity_report(g, Ambient::H, seed)?;
    let types = |recs: &[OrbitRecord]| list(recs.iter().map(|r| r.local_type.to_string()));
    let curves = list(x.curves.iter().map(|c| c.generic_type.to_string()));
    let dissident = list(x.curves.iter().flat_map(|c| c.dissident.iter()).map(|r| r.local_type.to_string()));
    let changes: usize = x.curves.iter().map(|c| c.type_changes().len()).sum();
    let singular = x.special_orbits - x.smooth_special_orbits;
    let others = singular - x.isolated.len() - changes;
    let on_ell = dissident_on_curve_check(g)?.holds();
    let fmt = |iso: String, cur: String, dis: String, q: bool, o: usize, yiso: String| {
        format!("X: isolated [{iso}]; singular curves [{cur}]; dissident on curves [{dis}]; q on the curve: {q}; other singular special orbits: {o}; Y: isolated [{yiso}]")
    };
    Ok(VerifyOutcome::new(
        "singularity-report",
        "singular locus of J/G and isolated singularities of J/H",
        fmt("1/7(1,2,4)".into(), "1/2(0,1,1)".into(), "1/4(1,2,3)".into(), true, 0, "1/7(1,2,4),1/7(1,2,4)".into()),
        fmt(types(&x.isolated), curves, dissident, on_ell, others, types(&y.isolated)),
    ))
}

fn generic_stabilizers(g: &Group, seed: u64) -> Result<VerifyOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let component = |elem: &str, through: &TorusPoint| -> Result<Curve> {
        Curve::components(g, g.named(elem)?)?
            .into_iter()
            .find(|c| c.contains(through))
            .ok_or_else(|| klein_core::Error::Consistency(format!("no component of Fix({elem}) through {through}")))
    };
    let kappa = |i: u8| PointName::Kappa(i).point();
    let zero = TorusPoint::zero();
    let mut stabs = Vec::new();
    for (elem, p) in [("rho2", kappa(1)), ("rho2", kappa(2)), ("rho2", kappa(3)), ("c3", zero.clone()), ("h4", zero)] {
        stabs.push(component(elem, &p)?.generic_stabilizer(g, Ambient::G, &mut rng));
    }
    let describe = |s: &klein_core::group::ElemSet| -> Result<String> {
        let refl = s.iter().filter(|&x| g.is_reflection(x)).count();
        let rg = if reflection_generated(g, s) { ", reflection-generated" } else { "" };
        Ok(format!("{} ({refl} reflections{rg})", recognize(g, s)?))
    };
    let meet = stabs[2] == stabs[0].intersection(&stabs[1]);
    let actual = format!(
        "kappa1: {}; kappa2: {}; kappa3: {}, intersection of the first two: {meet}; c3 axis: {}; h4 axis: {}",
        describe(&stabs[0])?,
        describe(&stabs[1])?,
        recognize(g, &stabs[2])?,
        recognize(g, &stabs[3])?,
        recognize(g, &stabs[4])?,
    );
    Ok(VerifyOutcome::new(
        "generic-curve-stabilizers",
        "stabilizers of generic points of the special curves",
        "kappa1: C2×C2′ (2 reflections, reflection-generated); kappa2: C2×C2′ (2 reflections, reflection-generated); kappa3: C2-antirefl, intersection of the first two: true; c3 axis: S′3; h4 axis: D′8",
        actual,
    ))
}

fn quartic_invariance(g: &Group, _: u64) -> Result<VerifyOutcome> {
    let k = forms::QuarticForm::klein();
    let fixing = g.elements().iter().filter(|el| forms::act(el, &k) == k).count();
    Ok(VerifyOutcome::new(
        "quartic-invariance",
        "invariance of the Klein quartic",
        "336/336 elements fix F",
        format!("{fixing}/{} elements fix F", g.len()),
    ))
}

const COVARIANCE_PAIRS: usize = 100;
const MATRIX_CASES: usize = 1000;
const FIELD_TRIPLES: usize = 1000;

fn property_suites(g: &Group, seed: u64) -> Result<VerifyOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = PointName::all();

    let mut orbit_stab = 0;
    for n in &names {
        let u = n.point();
        for a in [Ambient::G, Ambient::H] {
            if orbit(g, &u, a).len() * stabilizer(g, &u, a).len() == g.set(a).len() {
                orbit_stab += 1;
            }
        }
    }

    let mut covariant = 0;
    for _ in 0..COVARIANCE_PAIRS {
        let gamma = rng.gen_range(0..g.len());
        let u = names[rng.gen_range(0..names.len())].point();
        let v = u.apply(&g.element(gamma).int6);
        let s = stabilizer(g, &u, Ambient::G);
        if stabilizer(g, &v, Ambient::G) == g.conjugate_set(gamma, &s)
            && orbit(g, &v, Ambient::G) == orbit(g, &u, Ambient::G)
        {
            covariant += 1;
        }
    }

    let matrices = (0..MATRIX_CASES).filter(|_| normal_form_contracts(&random_matrix(&mut rng))).count();
    let fields = (0..FIELD_TRIPLES)
        .filter(|_| {
            let t = [random_qnum(&mut rng), random_qnum(&mut rng), random_qnum(&mut rng)];
            field_axioms(&t[0], &t[1], &t[2])
        })
        .count();

    let fmt = |os: usize, cov: usize, m: usize, f: usize| {
        format!("orbit-stabilizer {os}/{}; covariance {cov}/{COVARIANCE_PAIRS}; SNF/HNF {m}/{MATRIX_CASES}; field axioms {f}/{FIELD_TRIPLES}", 2 * names.len())
    };
    Ok(VerifyOutcome::new(
        "property-suites",
        "randomized algebraic contracts",
        fmt(2 * names.len(), COVARIANCE_PAIRS, MATRIX_CASES, FIELD_TRIPLES),
        fmt(orbit_stab, covariant, matrices, fields),
    ))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMat {
    let (m, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
    let rows: Vec<Vec<i128>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    IntMat::from_rows(&rows)
}

fn random_qnum(rng: &mut ChaCha8Rng) -> QNum {
    let mut r = || rat(rng.gen_range(-20..=20), rng.gen_range(1..=10));
    QNum::new(r(), r())
}

/// `v` is an integer combination of the rows of `gens`, decided through the
/// Smith form of the transpose.
fn in_row_span(gens: &IntMat, v: &[i128]) -> bool {
    let snf = smith_normal_form(&gens.transpose());
    let uv = snf.u.apply(v);
    let d = snf.diagonal();
    uv.iter().enumerate().all(|(i, &x)| match d.get(i) {
        Some(&di) if di != 0 => x % di == 0,
        _ => x == 0,
    })
}

fn normal_form_contracts(a: &IntMat) -> bool {
    let snf = smith_normal_form(a);
    let d = snf.diagonal();
    let diagonal = (0..a.rows).all(|i| (0..a.cols).all(|j| i == j || snf.d[(i, j)] == 0));
    let divides =
        d.iter().all(|&x| x >= 0) && d.windows(2).all(|w| if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 });
    let snf_ok =
        snf.u.mul(a).mul(&snf.v) == snf.d && snf.u.det().abs() == 1 && snf.v.det().abs() == 1 && diagonal && divides;

    let rows = a.rows_vec();
    let h = hnf_row_lattice(&rows, a.cols);
    let mut last = None;
    let mut shape = true;
    for i in 0..h.rows {
        let Some(p) = h.row(i).iter().position(|&x| x != 0) else {
            shape = false;
            break;
        };
        let pivot = h[(i, p)];
        shape &= pivot > 0 && last.is_none_or(|l| p > l) && (0..i).all(|k| (0..pivot).contains(&h[(k, p)]));
        last = Some(p);
    }
    let same_lattice = h.rows == snf.rank()
        && rows.iter().all(|r| h.rows > 0 && in_row_span(&h, r))
        && (0..h.rows).all(|i| in_row_span(a, h.row(i)));
    let zero_lattice = h.rows == 0 && a.is_zero();
    snf_ok && shape && (same_lattice || zero_lattice)
}

fn field_axioms(a: &QNum, b: &QNum, c: &QNum) -> bool {
    let zero = QNum::zero();
    let one = QNum::one();
    let inverse = a.is_zero() || a.inv().is_ok_and(|i| &i * a == one);
    &(a + b) + c == a + &(b + c)
        && a + b == b + a
        && &(a * b) * c == a * &(b * c)
        && a * b == b * a
        && a * &(b + c) == &(a * b) + &(a * c)
        && a + &zero == *a
        && a * &one == *a
        && a + &(-a) == zero
        && inverse
        && (a * b).conj() == &a.conj() * &b.conj()
        && (a * b).norm() == a.norm() * b.norm()
}
