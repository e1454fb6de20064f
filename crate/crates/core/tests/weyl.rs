use slopeforge::exactnum::frac;
use slopeforge::weyl::{build_root_system, check_2m_rho, supported_types, weyl_dim, Family, WeylError};
use slopeforge::{Rational, RootSystem};

fn rs(f: Family, n: usize) -> RootSystem {
    build_root_system(f, n).unwrap()
}

#[test]
fn positive_root_counts() {
    assert_eq!(rs(Family::A, 1).positive_roots().len(), 1);
    assert_eq!(rs(Family::A, 2).positive_roots().len(), 3);
    assert_eq!(rs(Family::G, 2).positive_roots().len(), 6);
    assert_eq!(rs(Family::E, 8).positive_roots().len(), 120);
    assert_eq!(rs(Family::F, 4).positive_roots().len(), 24);
}

#[test]
fn invalid_pairs() {
    assert_eq!(build_root_system::<Rational>(Family::D, 2).unwrap_err(), WeylError::InvalidType(Family::D, 2));
    assert!(build_root_system::<Rational>(Family::E, 5).is_err());
    assert!(build_root_system::<Rational>(Family::G, 3).is_err());
    assert!(build_root_system::<Rational>(Family::A, 0).is_err());
}

#[test]
fn two_m_rho_everywhere() {
    for (f, n) in supported_types(4) {
        let r = rs(f, n);
        for m in 1..=3 {
            assert!(check_2m_rho(&r, m).unwrap(), "{f}{n} m={m}");
        }
        // 3^N and 5^N are coprime
        let d1 = weyl_dim(&r, &r.two_m_rho(1)).unwrap();
        let d2 = weyl_dim(&r, &r.two_m_rho(2)).unwrap();
        let (a, b) = (d1.to_integer(), d2.to_integer());
        assert_eq!(num_integer::Integer::gcd(&a, &b), 1.into());
    }
    for (f, n) in [(Family::E, 6), (Family::E, 7), (Family::E, 8)] {
        assert!(check_2m_rho(&rs(f, n), 1).unwrap());
    }
}

#[test]
fn dimension_examples() {
    let a1 = rs(Family::A, 1);
    assert_eq!(weyl_dim(&a1, &[frac(0, 1), frac(0, 1)]).unwrap(), frac(1, 1));
    assert_eq!(weyl_dim(&a1, &a1.two_m_rho(1)).unwrap(), frac(3, 1));
    assert_eq!(weyl_dim(&a1, &a1.two_m_rho(2)).unwrap(), frac(5, 1));
    let a2 = rs(Family::A, 2);
    assert_eq!(weyl_dim(&a2, &a2.two_m_rho(1)).unwrap(), frac(27, 1));
    assert_eq!(weyl_dim(&rs(Family::B, 2), &rs(Family::B, 2).two_m_rho(1)).unwrap(), frac(81, 1));
    let g2 = rs(Family::G, 2);
    assert_eq!(weyl_dim(&g2, &g2.two_m_rho(2)).unwrap(), frac(15625, 1));
    // fundamental representations
    let highest = a2.positive_roots().iter().max_by_key(|r| a2.form(r, &a2.rho())).unwrap().clone();
    assert_eq!(weyl_dim(&a2, &highest).unwrap(), frac(8, 1));
    let e8 = rs(Family::E, 8);
    let highest = e8.positive_roots().iter().max_by_key(|r| e8.form(r, &e8.rho())).unwrap().clone();
    assert_eq!(weyl_dim(&e8, &highest).unwrap(), frac(248, 1));
}

#[test]
fn rho_pairs_positively() {
    for (f, n) in supported_types(8) {
        let r = rs(f, n);
        assert!(r.positive_roots().iter().all(|a| r.form(a, &r.rho()) > frac(0, 1)));
        assert_eq!(r.simple_roots().len(), n);
    }
}

#[test]
fn rejects_non_dominant_weights() {
    let a2 = rs(Family::A, 2);
    let neg: Vec<Rational> = a2.rho().iter().map(|x| -x.clone()).collect();
    assert_eq!(weyl_dim(&a2, &neg).unwrap_err(), WeylError::NotDominant);
    assert!(matches!(weyl_dim(&a2, &[frac(1, 1)]), Err(WeylError::DimensionMismatch { .. })));
    assert_eq!("E".parse::<Family>().unwrap(), Family::E);
    assert!("X".parse::<Family>().is_err());
}
