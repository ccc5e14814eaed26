mod common;

use common::*;
use convexlab_core::format::{parse_set_system, write_set_system};
use convexlab_core::generators::{
    gen_binary_words, gen_helly_sequence, gen_shatter_family, ShatterOptions,
};
use convexlab_core::harness::{
    check_colorful_clique_hypotheses, check_helly_growth_law, check_phi_below_psi,
    probe_fractional_helly, psi_eval, s_inverse, verify_helly_growth, verify_helly_growth_systems,
    verify_levi, verify_minimal_nonpartitionable, verify_radon_bound, verify_radon_bound_with,
    HellyLawViolation, MinimalVerdict,
};
use convexlab_core::homology::nerve;
use convexlab_core::intersection::{Sampler, TupleFraction};
use convexlab_core::{
    graded, Bits, CorpusSpec, Error, GradedOptions, ParameterKind, PlugTable, PointSet, PsiTables,
    SetSystem,
};
use num_rational::Ratio;

const EXHAUSTIVE: CorpusSpec = CorpusSpec::Exhaustive {
    max_ground: 3,
    max_members: 3,
};

#[test]
fn radon_bound_and_meta_test() {
    let r = verify_radon_bound(&EXHAUSTIVE).unwrap();
    assert!(r.holds());
    assert_eq!(r.checked, 112);

    let r = verify_radon_bound_with(&EXHAUSTIVE, |t| t).unwrap();
    let c = r.counterexample.expect("t + 0 must be violated");
    // The emitted system replays: its graded Radon value exceeds t.
    let replayed = parse_set_system(&write_set_system(&c.system)).unwrap();
    let profile = graded(
        &replayed,
        ParameterKind::Radon,
        c.t,
        GradedOptions::default(),
    )
    .unwrap();
    assert!(profile.value(c.t) > c.t);
    let w = c.witness.unwrap();
    let p = plain(&replayed);
    assert!(
        !naive_partitionable(&p, &(0..replayed.len()).collect::<Vec<_>>(), w.elements())
            || w.len() < 2
    );
}

#[test]
fn radon_bound_is_deterministic_on_random_corpus() {
    let corpus = CorpusSpec::Random {
        count: 200,
        seed: 3,
    };
    let a = verify_radon_bound(&corpus).unwrap();
    assert!(a.holds());
    assert_eq!(a, verify_radon_bound(&corpus).unwrap());
}

#[test]
fn levi_gate_and_pass() {
    let r = verify_levi(&EXHAUSTIVE).unwrap();
    assert!(r.holds());
    assert!(r.skipped > 0);
    assert_eq!(r.checked + r.skipped, r.systems);
    let r = verify_levi(&CorpusSpec::Random {
        count: 200,
        seed: 9,
    })
    .unwrap();
    assert!(r.holds());
}

#[test]
fn helly_growth() {
    assert!(verify_helly_growth(&EXHAUSTIVE).unwrap().holds());
    let systems = [
        vec![1, 2, 2],
        vec![1, 1, 3],
        vec![1, 2, 3, 3, 3],
        vec![1, 1, 1, 4, 4],
        vec![1, 2, 2, 2, 5],
    ]
    .iter()
    .map(|u| gen_helly_sequence(u).unwrap())
    .collect();
    assert!(verify_helly_growth_systems(systems).unwrap().holds());

    assert_eq!(
        check_helly_growth_law(&[1, 2, 2, 3]),
        Err(HellyLawViolation::JumpWithoutEquality { t: 4, value: 3 })
    );
    // Read with the profile starting at t = 1, a jump onto 3 at t = 3 is lawful.
    assert_eq!(check_helly_growth_law(&[1, 1, 3]), Ok(()));
    assert!(check_helly_growth_law(&[1, 1, 2]).is_err());
}

#[test]
fn minimal_nonpartitionable_verdicts() {
    for k in 3..=4 {
        let (s, pts) = gen_binary_words(k).unwrap();
        assert_eq!(
            verify_minimal_nonpartitionable(&s, &pts).unwrap(),
            MinimalVerdict::Minimal
        );
    }
    let (s, pts) = gen_binary_words(3).unwrap();
    let mut extra = s.clone();
    extra.push("F1_0dup", s.set(0).clone()).unwrap();
    match verify_minimal_nonpartitionable(&extra, &pts).unwrap() {
        MinimalVerdict::NotMinimal(members) => {
            assert!(members.contains(&6), "{members:?}");
            let p = plain(&extra);
            let rest: Vec<usize> = (0..6).collect();
            assert!(!naive_partitionable(&p, &rest, pts.elements()));
        }
        other => panic!("{other:?}"),
    }
    let whole = SetSystem::new(4, vec![Bits::ones(4)]).unwrap();
    assert!(matches!(
        verify_minimal_nonpartitionable(&whole, &PointSet::new(vec![0, 3])).unwrap(),
        MinimalVerdict::NotNonpartitionable(_)
    ));
}

fn surrogate() -> PsiTables {
    let r = PlugTable::new("r", (0..=12).map(|b| (b, 1u64 << b))).unwrap();
    let m = PlugTable::new("m", (1..=8192).map(|x| (x, x + 1))).unwrap();
    PsiTables::new(2, r, m)
}

#[test]
fn psi_cases() {
    let t = surrogate();
    assert_eq!(psi_eval(&t, 2, 3).unwrap(), 1);
    assert_eq!(psi_eval(&t, 2, 4).unwrap(), 1);
    assert_eq!(psi_eval(&t, 2, 10).unwrap(), 2);
    assert_eq!(psi_eval(&t, 2, 21).unwrap(), 3);
    for b in 1..=4 {
        let mut prev = 0;
        for x in 1..=64 {
            let v = psi_eval(&t, b, x).unwrap();
            assert!(v >= prev, "b = {b}, t = {x}");
            prev = v;
            if let Some(s) = s_inverse(&t, x).unwrap() {
                assert!(1u64 << (s + 1) <= x && x < 1u64 << (s + 2));
            }
        }
    }
    assert!(matches!(psi_eval(&t, 0, 3), Err(Error::Input(_))));
    let short = PsiTables::new(
        2,
        PlugTable::new("r", [(1, 2), (2, 4)]).unwrap(),
        PlugTable::new("m", [(1, 2)]).unwrap(),
    );
    let e = psi_eval(&short, 2, 5).unwrap_err();
    assert!(matches!(&e, Error::Range(m) if m.contains("m(4)")), "{e}");
    assert!(PlugTable::new("r", [(1, 3), (2, 2)]).is_err());
    assert!(PlugTable::new("r", [(1, 0)]).is_err());
}

#[test]
fn phi_below_psi() {
    let t = surrogate();
    let zero = gen_shatter_family(&[0, 0, 0], ShatterOptions::default()).unwrap();
    assert!(check_phi_below_psi(&zero.system, 0, &t, 2, 3)
        .unwrap()
        .holds());
    let growing = gen_shatter_family(&[1, 1, 2], ShatterOptions::default()).unwrap();
    let r = check_phi_below_psi(&growing.system, 0, &t, 2, 3).unwrap();
    assert_eq!(r.first_violation, Some(3));
    assert_eq!(r.rows, vec![(1, 1, 1), (2, 1, 1), (3, 2, 1)]);
    let r = check_phi_below_psi(&growing.system, 0, &t, 2, 0).unwrap();
    assert!(r.holds() && r.rows.is_empty());
}

fn blocks(count: usize, size: usize) -> SetSystem {
    let sets = (0..count * size)
        .map(|i| Bits::from_indices(count, [i / size]))
        .collect();
    SetSystem::new(count, sets).unwrap()
}

#[test]
fn probe_reports() {
    let common = SetSystem::new(3, vec![Bits::from_indices(3, [1, 2]); 6]).unwrap();
    let r = probe_fractional_helly(&common, 3, 3, Sampler::default(), 20).unwrap();
    assert_eq!(r.alpha, TupleFraction::Exact(Ratio::from_integer(1)));
    assert_eq!(r.beta_emp, Ratio::from_integer(1));

    let b = blocks(4, 5);
    let r = probe_fractional_helly(&b, 2, 2, Sampler::default(), 20).unwrap();
    // m * C(n/m, 2) / C(n, 2) with m = 4, n = 20.
    assert_eq!(r.alpha, TupleFraction::Exact(Ratio::new(4 * 10, 190)));
    assert_eq!(r.beta_emp, Ratio::new(1, 4));
    assert!(r.clique_exact);
    assert!(r.beta_emp <= r.clique_fraction);

    let nv = nerve(&b, 1).unwrap();
    assert_eq!(
        Ratio::new(nv.face_count(1) as u64, 190),
        Ratio::new(40, 190)
    );

    assert!(probe_fractional_helly(&b, 21, 2, Sampler::default(), 20).is_err());
}

#[test]
fn probe_is_consistent_on_random_systems() {
    for seed in 0..20 {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let s = convexlab_core::generators::random_small_system(&mut rng, 6, 8);
        if s.len() < 2 {
            continue;
        }
        let r = probe_fractional_helly(&s, 2, 2, Sampler::default(), 20).unwrap();
        assert!(r.beta_emp <= r.clique_fraction, "seed {seed}");
        let nv = nerve(&s, 1).unwrap();
        let pairs = (s.len() * (s.len() - 1) / 2) as u64;
        assert_eq!(
            r.alpha,
            TupleFraction::Exact(Ratio::new(nv.face_count(1) as u64, pairs))
        );
    }
}

#[test]
fn colorful_clique_hypotheses() {
    let common = SetSystem::new(2, vec![Bits::ones(2); 4]).unwrap();
    let r = check_colorful_clique_hypotheses(&common, 2, 3, 10).unwrap();
    assert!(r.holds);
    assert_eq!((r.colorful_helly, r.helly), (1, 1));

    let seq = gen_helly_sequence(&[1, 2]).unwrap();
    let r = check_colorful_clique_hypotheses(&seq, 2, 2, 10).unwrap();
    let p = plain(&seq);
    assert_eq!(
        r.colorful_helly,
        naive_graded(&p, &Kind::Colorful, seq.len())
    );
    assert_eq!(r.helly, naive_graded(&p, &Kind::Helly, 2));
    assert_eq!(r.holds, r.colorful_helly <= 2 && r.helly <= 2);

    let big = SetSystem::new(2, vec![Bits::ones(2); 12]).unwrap();
    assert!(matches!(
        check_colorful_clique_hypotheses(&big, 3, 4, 10),
        Err(Error::Size(_))
    ));
    assert!(check_colorful_clique_hypotheses(&big, 3, 2, 10).is_err());
}
