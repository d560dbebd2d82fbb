//! Seeded random parametrizations through the full pipelines.

mod support;

use support::*;

const CURVES: u64 = 60;
const SURFACES: u64 = 60;

#[test]
fn random_curves() {
    for seed in 0..CURVES {
        let forms = random_curve_forms(&mut rng(seed), 6);
        if let Err(e) = check_curve(&forms, seed) {
            panic!("seed {seed}: {e}\n{forms:?}");
        }
    }
}

#[test]
fn random_surfaces() {
    let mut checked = 0;
    for seed in 0..SURFACES * 2 {
        let raw = random_surface_raw(&mut rng(1000 + seed), 4);
        match check_surface(&raw, seed) {
            Ok(true) => checked += 1,
            Ok(false) => {}
            Err(e) => panic!("seed {seed}: {e}\n{raw:?}"),
        }
        if checked == SURFACES {
            break;
        }
    }
    assert_eq!(checked, SURFACES);
}

#[test]
fn curve_oracle_equivalence() {
    for seed in 0..40 {
        let forms = random_curve_forms(&mut rng(500 + seed), 5);
        let c = mubasis::CurveParam::new(forms.clone()).unwrap();
        let r = mubasis::curve_implicitize(&c, seed).unwrap();
        let (f, d) = implicit_oracle_curve(&forms);
        assert_eq!(r.hypersurface_degree, d, "seed {seed}");
        assert!(r.implicit.is_scalar_multiple_of(&f), "seed {seed}");
    }
}
