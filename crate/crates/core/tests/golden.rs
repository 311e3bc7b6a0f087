use kr_crystals::kr::{highest_left_check, sigma, CoordElement, KrElement};
use kr_crystals::pm::phi;
use kr_crystals::rmatrix::{brute_force_r, closed_form_r, closed_form_rinv};
use kr_crystals::{CartanSpec, Crystal, KNTableau, KRSpec, KrCrystal, Partition};

fn t(cols: &[&[i32]]) -> KNTableau {
    KNTableau::from_ints(cols).unwrap()
}

fn parse_coord(js: &str) -> CoordElement {
    match serde_json::from_str::<KrElement>(js).unwrap() {
        KrElement::Coord(c) => c,
        other => panic!("expected coordinates, got {other:?}"),
    }
}

#[test]
fn remark_through_the_public_api() {
    let d4 = CartanSpec::d(4).unwrap();
    let spec = KRSpec::new(d4, 2, 2).unwrap();
    let big = KrCrystal::build(spec, 10_000).unwrap();
    let row = KrCrystal::build(KRSpec::new(d4, 1, 1).unwrap(), 10_000).unwrap();
    let table = brute_force_r(&big, &row, 1 << 20).unwrap();

    let left: KrElement = serde_json::from_str(r#"{"kind":"tableau","cols":[[1,2]]}"#).unwrap();
    let x = parse_coord(r#"{"kind":"coord","x":[1,0,0,0],"xbar":[0,0,0,0]}"#);
    let src = (big.id_of(&left.to_tableau()).unwrap(), row.id_of_coord(&x).unwrap());
    let (y, b) = table.image(src);
    assert_eq!(row.coord_of(y).unwrap(), x);
    assert_eq!(big.element(b), &t(&[&[1, 2], &[2, -2]]));
    assert_eq!(table.energy(src), -1);

    let (p, h) = closed_form_r(&spec, &left.to_tableau().shape(), &x).unwrap();
    assert_eq!(phi(&d4, &p).unwrap(), t(&[&[1, 2], &[2, -2]]));
    assert_eq!(h, -1);
    assert_eq!(closed_form_rinv(&spec, &p, 1).unwrap(), (Partition::new(vec![1, 1]).unwrap(), x));
}

#[test]
fn documented_small_values() {
    let d4 = CartanSpec::d(4).unwrap();
    let b21 = KrCrystal::build(KRSpec::new(d4, 2, 1).unwrap(), 10_000).unwrap();
    assert_eq!(b21.len(), 29);
    assert_eq!(sigma(&b21, &t(&[&[1, 2]])).unwrap(), t(&[&[2, -1]]));

    let b22 = KrCrystal::build(KRSpec::new(d4, 2, 2).unwrap(), 10_000).unwrap();
    assert_eq!(b22.eps_phi(0, &b22.u0()).0, 4);
    assert_eq!(b22.eps_phi(0, &b22.u0()).1, 0);

    let spec = KRSpec::new(d4, 2, 1).unwrap();
    let lam2 = Partition::new(vec![1, 1]).unwrap();
    let two = parse_coord(r#"{"kind":"coord","x":[0,1,0,0],"xbar":[0,0,0,0]}"#);
    let three = parse_coord(r#"{"kind":"coord","x":[0,0,1,0],"xbar":[0,0,0,0]}"#);
    assert!(!highest_left_check(&spec, &lam2, &two));
    assert!(highest_left_check(&spec, &lam2, &three));
}

#[test]
fn seed_is_swapped_with_zero_energy() {
    for spec in [CartanSpec::b(3).unwrap(), CartanSpec::a2odd(3).unwrap()] {
        let big = KrCrystal::build(KRSpec::new(spec, 2, 1).unwrap(), 10_000).unwrap();
        let row = KrCrystal::build(KRSpec::new(spec, 1, 2).unwrap(), 10_000).unwrap();
        let table = brute_force_r(&big, &row, 1 << 20).unwrap();
        let seed = (big.u0(), row.u0());
        assert_eq!(table.image(seed), (row.u0(), big.u0()));
        assert_eq!(table.energy(seed), 0);
    }
}

#[test]
fn bad_input_is_rejected() {
    let d4 = CartanSpec::d(4).unwrap();
    assert!(KRSpec::new(d4, 3, 1).is_err());
    assert!(CartanSpec::d(3).is_err());
    assert!(serde_json::from_str::<KrElement>(r#"{"kind":"coord","x":[1,0],"xbar":[0]}"#).is_err());
    let c = parse_coord(r#"{"kind":"coord","x":[0,0,0,1],"xbar":[1,0,0,0]}"#);
    assert!(c.validate(&d4).is_err());
    let b21 = KrCrystal::build(KRSpec::new(d4, 2, 1).unwrap(), 10_000).unwrap();
    assert!(sigma(&b21, &t(&[&[1, 3], &[1, 2]])).is_err());
}
