use cfst_core::capacity::{MethodRegistry, Settings};
use cfst_core::dataset::{evaluate_dataset, parse_dataset, Execution};
use cfst_core::materials::{steel_curve_params, ConfinedConcreteParams};
use cfst_core::response::{response_curve, response_curve_with};
use cfst_core::section::{CircularSection, ColumnSpec, ConcreteMaterial, SteelMaterial};
use proptest::prelude::*;

fn column(d: f64, dt: f64, ld: f64, f_y: f64, f_c: f64) -> ColumnSpec {
    ColumnSpec::new(
        CircularSection::new(d, d / dt, d * ld).unwrap(),
        SteelMaterial::new(f_y, None, None).unwrap(),
        ConcreteMaterial::new(f_c, None, None).unwrap(),
    )
    .unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        ((a - b) / b).abs()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn loads_scale_with_area(
        d in 80.0f64..600.0,
        dt in 12.0f64..150.0,
        ld in 1.0f64..8.0,
        f_y in 235.0f64..700.0,
        f_c in 20.0f64..110.0,
        k in 0.5f64..3.0,
    ) {
        let small = column(d, dt, ld, f_y, f_c);
        let big = column(k * d, dt, ld, f_y, f_c);
        let settings = Settings::default();
        for method in MethodRegistry::builtin().iter() {
            let a = method.predict(&small, &settings).unwrap();
            let b = method.predict(&big, &settings).unwrap();
            prop_assert!(rel(b.n_u, k * k * a.n_u) < 1e-9, "{:?}", method.id());
            prop_assert_eq!(a.applicability.applicable, b.applicability.applicable);
        }
        let ra = response_curve(&small, 0.03, 50).unwrap();
        let rb = response_curve(&big, 0.03, 50).unwrap();
        prop_assert!(rel(rb.peak_load, k * k * ra.peak_load) < 1e-9);
    }

    #[test]
    fn removing_confinement_never_raises_the_peak(
        dt in 10.0f64..150.0,
        f_y in 235.0f64..800.0,
        f_c in 20.0f64..150.0,
    ) {
        let col = column(200.0, dt, 3.0, f_y, f_c);
        let steel = steel_curve_params(col.steel()).unwrap();
        let confined = ConfinedConcreteParams::for_column(&col);
        let plain = ConfinedConcreteParams::with_confining_pressure(&col, 0.0);
        let a = response_curve_with(&col, &steel, &confined, 0.03, 200).unwrap();
        let b = response_curve_with(&col, &steel, &plain, 0.03, 200).unwrap();
        prop_assert!(b.peak_load <= a.peak_load * (1.0 + 1e-12));
    }
}

const ROWS: &str =
    "source_id,D_mm,t_mm,L_mm,fy_MPa,fu_MPa,Es_MPa,fc_measured_MPa,fc_kind,dmax_mm,Ntest_kN
A,100,5,300,300,450,200000,30,CYL150,,800
B,150,3,450,350,,,40,CUBE150,,1400
C,219,6,660,420,,,55,CYL100,16,3200
D,114,4,342,235,,,25,CYL150,,900
E,300,5,900,460,,,90,CYL150,,9000
F,165,4.5,500,300,,,120,CUBE100,,2500
";

#[test]
fn evaluation_is_deterministic() {
    let records = parse_dataset(ROWS).unwrap().records;
    let registry = MethodRegistry::builtin();
    let methods: Vec<_> = registry.iter().collect();
    let settings = Settings::default();
    let first = evaluate_dataset(&records, &methods, &settings, None, Execution::Parallel).unwrap();
    for _ in 0..5 {
        let again =
            evaluate_dataset(&records, &methods, &settings, None, Execution::Parallel).unwrap();
        assert_eq!(format!("{first:?}"), format!("{again:?}"));
    }
}

#[test]
fn statistics_ignore_row_order() {
    let records = parse_dataset(ROWS).unwrap().records;
    let mut reversed = records.clone();
    reversed.reverse();
    reversed.swap(0, 3);
    let registry = MethodRegistry::builtin();
    let methods: Vec<_> = registry.iter().collect();
    let settings = Settings::default();
    let a = evaluate_dataset(&records, &methods, &settings, None, Execution::Sequential).unwrap();
    let b = evaluate_dataset(&reversed, &methods, &settings, None, Execution::Sequential).unwrap();
    for (x, y) in a.summaries.iter().zip(&b.summaries) {
        assert_eq!(x.n_applicable, y.n_applicable);
        for (p, q) in [(x.mean, y.mean), (x.std, y.std), (x.cov, y.cov)] {
            match (p, q) {
                (Some(p), Some(q)) => assert!(rel(p, q) < 1e-12, "{:?}", x.method),
                (None, None) => {}
                _ => panic!("{:?} differs in definedness", x.method),
            }
        }
    }
}

#[test]
fn cube_row_for_ultra_high_strength_is_reported_inline() {
    let text =
        "source_id,D_mm,t_mm,L_mm,fy_MPa,fu_MPa,Es_MPa,fc_measured_MPa,fc_kind,dmax_mm,Ntest_kN
ok,100,5,300,300,450,200000,30,CYL150,,800
bad,100,5,300,300,450,200000,150,CUBE150,,800
";
    let parsed = parse_dataset(text).unwrap();
    assert_eq!(parsed.records.len(), 1);
    assert_eq!(parsed.errors.len(), 1);
    assert_eq!(parsed.errors[0].line, 3);
}
