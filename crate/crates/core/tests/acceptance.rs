//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `--nocapture`). Every comparison is exact; there are no
//! numeric tolerances anywhere.

use std::collections::BTreeSet;

use gkm::blowup::{blow_up, blowup_cohomology_decompose, reassemble, Weights};
use gkm::builders;
use gkm::cohomology::{
    basis, class_check, complete_decompose, decompose, deformation_space, dimension_formula,
    in_span, random_class, random_polynomial, ThomBasis,
};
use gkm::covector::Covector;
use gkm::polarize::{
    betti, check_noncyclic, flow_out, is_generic, sample_polarizing, Polarization,
};
use gkm::poly::{graded_dim, Polynomial};
use gkm::rational::{rat, rat_int, Rational};
use gkm::reduction::{
    crossing_dims_check, cut, flip_flop, kirwan, kirwan_kernel_dim, reduce, CutSide,
};
use gkm::schubert::{divided_difference, schubert_class, subset_index, top_class};
use gkm::skeleton::{OneSkeleton, SubSkeleton};
use num_traits::{One, Signed};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

fn fixtures() -> Vec<(&'static str, OneSkeleton)> {
    vec![
        ("octahedron", builders::octahedron_skeleton()),
        ("cube", builders::cube_skeleton()),
        ("J(4,2)", builders::johnson(4, 2).unwrap().skeleton),
        ("J(5,2)", builders::johnson(5, 2).unwrap().skeleton),
        ("Gamma8", builders::ramified_cover(2)),
        ("S6", builders::s6()),
    ]
}

fn octahedron_pol() -> (OneSkeleton, Polarization) {
    let oct = builders::octahedron_skeleton();
    let xi = Covector::from_ints(&[1, 2, 4]);
    let pol = Polarization::build(&oct, xi).unwrap();
    (oct, pol)
}

fn johnson_pol() -> (OneSkeleton, Polarization) {
    let j = builders::johnson(4, 2).unwrap().skeleton;
    let xi = Covector::from_ints(&[1, 2, 4, 8]);
    let pol = Polarization::build(&j, xi).unwrap();
    (j, pol)
}

#[test]
fn criterion_01_betti_invariance() {
    for (name, skel) in fixtures() {
        let reference = betti(&skel, &sample_polarizing(&skel, 0)).unwrap();
        for seed in 1..20 {
            let xi = sample_polarizing(&skel, seed);
            assert_eq!(
                betti(&skel, &xi).unwrap(),
                reference,
                "betti changed with the polarization on {}",
                name
            );
        }
    }
    println!("ACCEPT 01 betti-invariance (6 fixtures x 20 polarizations): PASS");
}

#[test]
fn criterion_02_paper_betti_values() {
    let s6 = builders::s6();
    assert_eq!(
        betti(&s6, &sample_polarizing(&s6, 0)).unwrap(),
        vec![0, 1, 1, 0]
    );
    let g8 = builders::ramified_cover(2);
    assert_eq!(
        betti(&g8, &sample_polarizing(&g8, 0)).unwrap(),
        vec![2, 4, 2]
    );
    let oct = builders::octahedron_skeleton();
    let b = betti(&oct, &sample_polarizing(&oct, 0)).unwrap();
    assert_eq!(b[1], 1, "octahedron b_2");
    for (name, skel) in fixtures() {
        let b = betti(&skel, &sample_polarizing(&skel, 0)).unwrap();
        let d = skel.valence();
        for k in 0..=d {
            assert_eq!(b[k], b[d - k], "Poincare duality fails on {}", name);
        }
    }
    println!("ACCEPT 02 paper-betti-values + duality: PASS");
}

#[test]
fn criterion_03_complete_skeleton_cohomology() {
    let pool2 = [
        Covector::from_ints(&[0, 0]),
        Covector::from_ints(&[1, 0]),
        Covector::from_ints(&[0, 1]),
        Covector::from_ints(&[2, 3]),
    ];
    let pool3 = [
        Covector::from_ints(&[0, 0, 0]),
        Covector::from_ints(&[1, 0, 0]),
        Covector::from_ints(&[0, 1, 1]),
        Covector::from_ints(&[2, 3, 1]),
    ];
    for count in [2usize, 3, 4] {
        for n in [2usize, 3] {
            let taus: Vec<Covector> = if n == 2 {
                pool2[..count].to_vec()
            } else {
                pool3[..count].to_vec()
            };
            let skel = builders::complete(&taus).unwrap();
            for m in 0..=4u32 {
                let expect: u64 = (0..count as i64).map(|k| graded_dim(m as i64 - k, n)).sum();
                assert_eq!(
                    basis(&skel, m).len() as u64,
                    expect,
                    "N={} n={} m={}",
                    count,
                    n,
                    m
                );
            }
            // 30 forward-constructed round trips per (N, n)
            let mut rng = ChaCha8Rng::seed_from_u64(3_000 + (count * 10 + n) as u64);
            for trial in 0..30 {
                let m = (trial % 5) as u32;
                let hs: Vec<Polynomial> = (0..count)
                    .map(|k| {
                        if (k as u32) <= m {
                            random_polynomial(n, m - k as u32, &mut rng)
                        } else {
                            Polynomial::zero(n)
                        }
                    })
                    .collect();
                let values: Vec<Polynomial> = (0..count)
                    .map(|i| {
                        let tp = Polynomial::from_covector(&taus[i]);
                        let mut acc = Polynomial::zero(n);
                        for (k, h) in hs.iter().enumerate() {
                            acc = &acc + &(h * &tp.pow(k as u32));
                        }
                        acc
                    })
                    .collect();
                let f = gkm::cohomology::CohomologyClass::new(&skel, m, values).unwrap();
                assert_eq!(complete_decompose(&skel, &taus, &f).unwrap(), hs);
            }
        }
    }
    println!("ACCEPT 03 complete-skeleton cohomology (dims m<=4, 30 round-trips per case): PASS");
}

#[test]
fn criterion_04_dimension_theorem() {
    let lplus = builders::edge_plus();
    let square = builders::product(&lplus, &lplus);
    let cases: Vec<(&str, OneSkeleton)> = vec![
        ("octahedron", builders::octahedron_skeleton()),
        ("cube", builders::cube_skeleton()),
        ("J(4,2)", builders::johnson(4, 2).unwrap().skeleton),
        ("L+xL+", square),
    ];
    for (name, skel) in cases {
        let xi = sample_polarizing(&skel, 0);
        for m in 0..=skel.valence() as u32 {
            let computed = basis(&skel, m).len() as u64;
            let formula = dimension_formula(&skel, &xi, m).unwrap();
            assert_eq!(computed, formula, "{} at m={}", name, m);
        }
    }
    let oct = builders::octahedron_skeleton();
    assert_eq!(basis(&oct, 1).len(), 4, "dim H^2(octahedron)");
    println!("ACCEPT 04 dimension-theorem (4 fixtures, m=0..d, exact): PASS");
}

#[test]
fn criterion_05_thom_classes_and_free_module() {
    for (name, skel, xi) in [
        (
            "octahedron",
            builders::octahedron_skeleton(),
            Covector::from_ints(&[1, 2, 4]),
        ),
        (
            "J(4,2)",
            builders::johnson(4, 2).unwrap().skeleton,
            Covector::from_ints(&[1, 2, 3, 4]),
        ),
    ] {
        let pol = Polarization::build(&skel, xi).unwrap();
        let thom = ThomBasis::build(&skel, &pol).unwrap();
        for p in 0..skel.vertex_count() {
            let tau = &thom.classes[p];
            assert_eq!(tau.degree, pol.index(p) as u32, "{} degree", name);
            assert!(class_check(&skel, tau), "{} compatibility", name);
            let mut down = Polynomial::one(skel.dim());
            for &e in skel.edges_at(p) {
                if !pol.points_up(e) {
                    down = &down * &Polynomial::from_covector(skel.axial(e));
                }
            }
            assert_eq!(tau.values[p], down, "{} top value", name);
            let fp = flow_out(&skel, &pol, p);
            for q in tau.support() {
                assert!(fp.contains(&q), "{} support", name);
            }
        }
        // 30 random module elements per degree m <= 3 round-trip exactly
        let mut rng = ChaCha8Rng::seed_from_u64(500);
        for m in 0..=3u32 {
            for _ in 0..30 {
                let hs: Vec<Polynomial> = (0..skel.vertex_count())
                    .map(|v| {
                        let s = pol.index(v) as u32;
                        if s <= m {
                            random_polynomial(skel.dim(), m - s, &mut rng)
                        } else {
                            Polynomial::zero(skel.dim())
                        }
                    })
                    .collect();
                let mut f = gkm::cohomology::CohomologyClass::zero(&skel, m);
                for (v, h) in hs.iter().enumerate() {
                    f = f.add(&thom.classes[v].mul_poly(h));
                }
                assert_eq!(decompose(&skel, &thom, &f).unwrap(), hs, "{} m={}", name, m);
            }
        }
    }
    println!("ACCEPT 05 thom-classes + free-module round-trips (m<=3, 30 each): PASS");
}

#[test]
fn criterion_06_blowup_cohomology() {
    let oct = builders::octahedron_skeleton();
    let center = SubSkeleton::induced(&oct, &[5]);
    let b = blow_up(&oct, &center, &Weights::Constant(rat_int(1))).unwrap();
    for m in 0..=3u32 {
        let lhs = basis(&b.result, m).len() as u64;
        let rhs = basis(&oct, m).len() as u64
            + (1..=3i64).map(|k| graded_dim(m as i64 - k, 3)).sum::<u64>();
        assert_eq!(lhs, rhs, "m={}", m);
    }
    let mut round_trips = 0;
    for m in 0..=3u32 {
        for seed in 0..5 {
            let f = random_class(&b.result, m, seed).unwrap();
            let (g, fs) = blowup_cohomology_decompose(&oct, &b, &f).unwrap();
            assert_eq!(reassemble(&b, &g, &fs), f);
            round_trips += 1;
        }
    }
    assert_eq!(round_trips, 20);
    println!("ACCEPT 06 blowup-cohomology (dims m<=3 + 20 round-trips): PASS");
}

#[test]
fn criterion_07_reduction() {
    let (oct, pol) = octahedron_pol();
    let mids = pol.regular_midpoints();
    // just above the minimum: the complete one-skeleton on 4 vertices,
    // with generating values alpha_e / alpha_e(xi)
    let red = reduce(&oct, &pol, &mids[0]).unwrap();
    assert_eq!(red.skeleton.vertex_count(), 4);
    assert!(red.skeleton.validate().passes());
    let taus: Vec<Covector> = (0..4)
        .map(|v| {
            let de = red.crossing_down[v];
            let up_edge = oct.reverse(de);
            let alpha = oct.axial(up_edge);
            alpha
                .scale(&(Rational::one() / alpha.pair(&pol.xi)))
                .drop_coord(red.pivot)
        })
        .collect();
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let e = red.skeleton.edge_between(i, j).expect("complete graph");
            let diff = &taus[j] - &taus[i];
            let ratio = diff.ratio_to(red.skeleton.axial(e)).expect("parallel");
            assert!(ratio.is_positive());
        }
    }
    // crossing dimensions across every critical vertex, m <= 2
    for w in mids.windows(2) {
        let rep = crossing_dims_check(&oct, &pol, &w[0], &w[1], 2).unwrap();
        assert!(rep.ok, "{:?}", rep);
    }
    println!("ACCEPT 07 reduction (complete skeleton above min + crossing dims m<=2): PASS");
}

#[test]
fn criterion_08_flip_flop() {
    let (oct, pol) = octahedron_pol();
    let mids = pol.regular_midpoints();
    let rep = flip_flop(&oct, &pol, &mids[0], &mids[1]).unwrap();
    assert_eq!(rep.index, 1);
    assert!(rep.isomorphic, "octahedron: {:?}", rep.mismatches);

    let (j, pol) = johnson_pol();
    let mids = pol.regular_midpoints();
    let rep = flip_flop(&j, &pol, &mids[1], &mids[2]).unwrap();
    assert_eq!(rep.index, 2);
    assert!(rep.isomorphic, "johnson: {:?}", rep.mismatches);
    println!("ACCEPT 08 flip-flop exact isomorphisms (octahedron idx-1, J(4,2) idx-2): PASS");
}

#[test]
fn criterion_09_kirwan() {
    for (name, skel, pol) in [
        ("octahedron", octahedron_pol().0, octahedron_pol().1),
        ("J(4,2)", johnson_pol().0, johnson_pol().1),
    ] {
        assert!(is_generic(&skel, &pol.xi));
        for c in pol.regular_midpoints() {
            let red = reduce(&skel, &pol, &c).unwrap();
            for m in 0..=2u32 {
                for f in basis(&skel, m) {
                    let img = kirwan(&skel, &red, &f).unwrap();
                    assert!(class_check(&red.skeleton, &img), "{} image", name);
                }
                let rep = kirwan_kernel_dim(&skel, &pol, &c, m).unwrap();
                assert_eq!(rep.image_rank, rep.target_dim, "{} surjectivity", name);
                assert_eq!(rep.kernel_dim as u64, rep.formula, "{} kernel", name);
                assert!(rep.splitting_ok, "{} splitting", name);
            }
        }
    }
    println!("ACCEPT 09 kirwan (surjectivity + kernel formula + splitting, m<=2): PASS");
}

#[test]
fn criterion_10_schubert() {
    let j = builders::johnson(4, 2).unwrap();
    let xi = Covector::from_ints(&[1, 2, 3, 4]);
    let pol = Polarization::build(&j.skeleton, xi).unwrap();
    let thom = ThomBasis::build(&j.skeleton, &pol).unwrap();
    for p in 0..j.skeleton.vertex_count() {
        assert_eq!(
            schubert_class(&j, p).unwrap(),
            thom.classes[p],
            "schubert != thom at {}",
            j.skeleton.name(p)
        );
    }
    for seed in 0..10 {
        let f = random_class(&j.skeleton, 2, seed).unwrap();
        for i in 1..4 {
            let d = divided_difference(&j, i, &f).unwrap();
            assert!(divided_difference(&j, i, &d).unwrap().is_zero());
        }
    }
    // top value: product over i <= 2 < jj of (x_i - x_jj)
    let top = top_class(&j);
    let mut delta = Polynomial::one(4);
    for i in 0..2 {
        for jj in 2..4 {
            let root = &Covector::basis(4, i) - &Covector::basis(4, jj);
            delta = &delta * &Polynomial::from_covector(&root);
        }
    }
    let top_id = j
        .vertex_of(&[3, 4].into_iter().collect::<BTreeSet<_>>())
        .unwrap();
    assert_eq!(top.values[top_id], delta);
    // self-indexing: subset sum = index + 3
    for p in 0..j.skeleton.vertex_count() {
        let sum: usize = j.subsets[p].iter().sum();
        assert_eq!(sum, subset_index(&j, p) + 3);
    }
    println!(
        "ACCEPT 10 schubert (= thom at 6 vertices, D^2=0 x10, top value, self-indexing): PASS"
    );
}

#[test]
fn criterion_11_deformations() {
    let oct = deformation_space(&builders::octahedron_polytope()).unwrap();
    assert_eq!(oct.basis.len(), 4);
    let translations = oct.translations();
    assert_eq!(gkm::cohomology::class_rank(&oct.skeleton, &translations), 3);
    let mut family = translations.clone();
    family.push(oct.homothety());
    assert_eq!(gkm::cohomology::class_rank(&oct.skeleton, &family), 4);
    for f in &family {
        assert!(in_span(&oct.skeleton, &oct.basis, f));
    }
    let cube = deformation_space(&builders::cube_polytope()).unwrap();
    assert_eq!(cube.basis.len(), 6);
    // emitted deformation keeps every edge direction a positive multiple
    let shrink = oct.homothety().scale(&rat_int(-1));
    let t0 = oct.safe_t_range(&shrink);
    assert!(t0.is_positive());
    let t = &t0 / rat(2, 1);
    let moved = oct.deform(&shrink, &t).unwrap();
    for (idx, &(a, b)) in oct.input.edges.iter().enumerate() {
        let _ = idx;
        let before = &oct.input.vertices[b] - &oct.input.vertices[a];
        let after = &moved.vertices[b] - &moved.vertices[a];
        let ratio = after.ratio_to(&before).unwrap();
        assert!(ratio.is_positive());
    }
    println!("ACCEPT 11 deformations (octahedron dim 4 = 3+homothety, cube dim 6, ranges): PASS");
}

#[test]
fn criterion_12_validators() {
    let s6 = builders::s6();
    assert!(s6.validate().passes());
    assert_eq!(s6.independence_level(), 2);
    let xi = sample_polarizing(&s6, 0);
    let rep = check_noncyclic(&s6, &xi).unwrap();
    assert!(rep.nca1.is_err(), "S6 must fail NCA1");

    let g8 = builders::ramified_cover(2);
    assert!(g8.validate().passes());
    let xi = sample_polarizing(&g8, 0);
    let rep = check_noncyclic(&g8, &xi).unwrap();
    assert!(rep.nca1.is_ok());
    assert!(!rep.nca2.is_empty(), "Gamma8 must fail NCA2");
    let witness = &rep.nca2[0];
    assert_eq!(witness.b0, 2);
    assert!(!witness.component_vertices.is_empty());

    let fb = builders::football(1, 2);
    let v = fb.validate();
    assert!(
        v.passes(),
        "football must satisfy A1-A3 in multiplicity form"
    );
    assert!(v.a2.is_empty());
    assert!(!fb.mult(0).is_one());
    let (gkm_ok, gr) = fb.is_gkm();
    assert!(!gkm_ok);
    assert!(!gr.non_unit_multiplicity.is_empty());
    println!("ACCEPT 12 validators (S6: A1-A3 ok, 3-indep+NCA1 fail; Gamma8: NCA2 witness; football): PASS");
}

#[test]
fn cut_endpoints_behave() {
    // supporting checks for the reduction criteria: cutting above the
    // maximum recovers the skeleton, cutting above the minimum is the
    // complete skeleton on d+1 vertices
    let (oct, pol) = octahedron_pol();
    let c_hi = pol.phi(*pol.vertices_by_phi().last().unwrap()) + rat(1, 2);
    let whole = cut(&oct, &pol, &c_hi, CutSide::Below).unwrap();
    assert_eq!(whole.reduced.skeleton.vertex_count(), oct.vertex_count());
    assert_eq!(whole.reduced.skeleton.edge_count(), oct.edge_count());
    let c_lo = pol.regular_midpoints()[0].clone();
    let bottom = cut(&oct, &pol, &c_lo, CutSide::Below).unwrap();
    assert_eq!(bottom.reduced.skeleton.vertex_count(), 5);
    assert!(bottom.reduced.skeleton.validate().passes());
}
