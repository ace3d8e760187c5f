use so21::lie::Mat3;
use so21_cli::input::{parse_element, parse_matrix};
use so21_cli::output::{write_cut_table, write_rows, CutTable, CutTableRow, Format, Violation};

#[test]
fn separators_are_interchangeable() {
    let a = parse_matrix("1 0 0\n0 1 0\n0 0 1").unwrap();
    let b = parse_matrix("1,0,0,0,1,0,0,0,1").unwrap();
    let c = parse_matrix(" 1, 0 ,0 ,\t0 1 0 0 0 1 ").unwrap();
    assert_eq!(a, Mat3::IDENTITY);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn row_major_order() {
    let m = parse_matrix("1 2 3 4 5 6 7 8 9").unwrap();
    assert_eq!(m.0, [[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]]);
}

#[test]
fn rejects_bad_input() {
    assert!(parse_matrix("1 2 3 4 5 6 7 8").is_err());
    assert!(parse_matrix("1 2 3 4 5 6 7 8 9 10").is_err());
    assert!(parse_matrix("1 2 3 4 5 6 7 8 nan").is_err());
    assert!(parse_matrix("1 2 3 4 5 6 7 8 inf").is_err());
    let err = parse_element("1 2 3 4 5 6 7 8 9", 1e-8).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("violated"));
}

#[test]
fn csv_round_trip_is_bit_exact() {
    let values = [
        0.1,
        1.0 / 3.0,
        std::f64::consts::PI,
        1e-300,
        -2.5e17,
        5e-324,
        0.30000000000000004,
    ];
    let rows: Vec<CutTableRow> = values
        .iter()
        .map(|&v| CutTableRow {
            beta: v,
            regime: "II".into(),
            t1: Some(v * 7.0),
            psi: None,
            area_residual: v / 11.0,
        })
        .collect();
    let mut buf = Vec::new();
    write_rows(&mut buf, Format::Csv, &rows).unwrap();
    let back: Vec<CutTableRow> = csv::Reader::from_reader(buf.as_slice())
        .deserialize()
        .map(Result::unwrap)
        .collect();
    assert_eq!(back, rows);

    let mut buf = Vec::new();
    write_rows(&mut buf, Format::Json, &rows).unwrap();
    let back: Vec<CutTableRow> = serde_json::from_slice(&buf).unwrap();
    assert_eq!(back, rows);
}

#[test]
fn cut_table_comment_block() {
    let row = |beta: f64, t1: f64| CutTableRow {
        beta,
        regime: "IVc".into(),
        t1: Some(t1),
        psi: Some(2.0),
        area_residual: 0.0,
    };
    let table = CutTable {
        rows: vec![row(1.2, 5.0), row(1.3, 6.0)],
        violations: vec![Violation {
            i: 0,
            j: 1,
            beta_i: 1.2,
            beta_j: 1.3,
            t1_i: 5.0,
            t1_j: 6.0,
        }],
    };
    let mut buf = Vec::new();
    write_cut_table(&mut buf, Format::Csv, &table).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(
        text,
        "beta,regime,t1,psi,area_residual\n1.2,IVc,5.0,2.0,0.0\n1.3,IVc,6.0,2.0,0.0\n\
         # monotonicity violations: 1\n# i,j,beta_i,beta_j,t1_i,t1_j\n# 0,1,1.2,1.3,5,6\n"
    );
}
