use std::collections::BTreeSet;

use mldeg_core::builders::{cube, POLYGON_NAMES};
use mldeg_core::catalog::*;
use mldeg_core::{Error, LatticeVector, Polytope};
use num_bigint::BigInt;
use num_complex::Complex64 as C;

fn vertex_set(p: &Polytope) -> BTreeSet<LatticeVector> {
    p.vertices().iter().cloned().collect()
}

const CUBE3: &str = "3 8  cube, annotated header
-1  1 -1  1 -1  1 -1  1
-1 -1  1  1 -1 -1  1  1
-1 -1 -1 -1  1  1  1  1
";

#[test]
fn simplex_block() {
    let text = "3 4 M:5 4 N:5 4\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1\n";
    let blocks = parse_ks(text, false).unwrap();
    assert_eq!(blocks.len(), 1);
    let b = &blocks[0];
    assert_eq!((b.index, b.line), (0, 1));
    assert_eq!(b.header, "3 4 M:5 4 N:5 4");
    assert_eq!(b.polytope.dim(), 3);
    assert_eq!(b.polytope.vertices().len(), 4);
    assert_eq!(b.polytope.lattice_points().len(), 5);
    assert_eq!(b.polytope.normalized_volume(), BigInt::from(4));
}

#[test]
fn cube_block_and_its_transpose() {
    let p = &parse_ks(CUBE3, false).unwrap()[0].polytope;
    assert_eq!(p.normalized_volume(), BigInt::from(48));
    assert_eq!(p.lattice_points().len(), 27);
    // Eight rows of three are read as points without being asked.
    let rows = "8 3\n-1 -1 -1\n1 -1 -1\n-1 1 -1\n1 1 -1\n-1 -1 1\n1 -1 1\n-1 1 1\n1 1 1\n";
    let q = &parse_ks(rows, false).unwrap()[0].polytope;
    assert_eq!(vertex_set(p), vertex_set(q));
    assert!(parse_ks(CUBE3, true).is_err());
    // Square blocks are read as columns, so three points in dimension three.
    let square = "3 3\n1 0 0\n0 1 0\n0 0 1\n";
    assert!(matches!(parse_ks(square, false), Err(Error::MalformedBlock { line: 1, .. })));
    let t = &parse_ks("4 3\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n", false).unwrap()[0].polytope;
    let s = &parse_ks("3 4\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1\n", false).unwrap()[0].polytope;
    assert_eq!(vertex_set(t), vertex_set(s));
    let flipped = &parse_ks("3 4\n1 0 0 -1\n0 1 0 -1\n0 0 1 -1\n", true);
    assert!(flipped.is_err());
}

#[test]
fn blocks_are_indexed_in_file_order() {
    let text = format!("\n{CUBE3}\n2 3\n1 0 -1\n0 1 -1\n{CUBE3}");
    let blocks = parse_ks(&text, false).unwrap();
    assert_eq!(blocks.iter().map(|b| b.index).collect::<Vec<_>>(), vec![0, 1, 2]);
    assert_eq!(blocks.iter().map(|b| b.line).collect::<Vec<_>>(), vec![2, 7, 10]);
    assert_eq!(blocks[1].polytope.dim(), 2);
}

#[test]
fn malformed_blocks() {
    let bad_token = "2 3\n1 0 x\n0 1 -1\n";
    assert!(matches!(parse_ks(bad_token, false), Err(Error::MalformedBlock { line: 2, .. })));
    let short = "2 3\n1 0 -1\n";
    assert!(matches!(parse_ks(short, false), Err(Error::MalformedBlock { line: 1, .. })));
    let header = "\n\nfoo 3\n";
    assert!(matches!(parse_ks(header, false), Err(Error::MalformedBlock { line: 3, .. })));
    let width = "2 3\n1 0 -1\n0 1\n";
    assert!(matches!(parse_ks(width, false), Err(Error::DimensionMismatch { expected: 3, got: 2 })));
    let flat = "2 3\n0 1 2\n0 0 0\n";
    assert!(matches!(parse_ks(flat, false), Err(Error::MalformedBlock { line: 1, .. })));
}

#[test]
fn written_polytopes_parse_back() {
    let mut names: Vec<String> = POLYGON_NAMES.iter().map(|s| s.to_string()).collect();
    names.extend(["cube-3", "cross-4", "T-3", "ks-132", "sym-edge-cycle-4", "bg-path-3"].map(String::from));
    for name in names {
        let p = builtin(&name).unwrap();
        let text = write_polytope(&p);
        let header: Vec<usize> = text.lines().next().unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
        assert_eq!(header, vec![p.dim(), p.vertices().len()]);
        let q = &parse_ks(&text, false).unwrap()[0].polytope;
        assert_eq!(vertex_set(&p), vertex_set(q), "{name}");
    }
}

#[test]
fn scaling_and_data_files() {
    let c = parse_scaling("# weights\n2\n4 0\n\n25/1 # center\n1/2 -3\n1\n").unwrap();
    assert_eq!(
        c.weights,
        vec![C::new(2.0, 0.0), C::new(4.0, 0.0), C::new(25.0, 0.0), C::new(0.5, -3.0), C::new(1.0, 0.0)]
    );
    assert!(matches!(parse_scaling("1\n2 3 4\n"), Err(Error::MalformedBlock { line: 2, .. })));
    assert!(matches!(parse_scaling("1\nabc\n"), Err(Error::MalformedBlock { line: 2, .. })));
    assert!(parse_scaling("1\n0\n").is_err());
    let u = parse_data("1 2\n3\t4\n").unwrap();
    assert_eq!(u.total(), 10);
    assert!(parse_data("1 -2").is_err());
    assert!(matches!(parse_data("0 0"), Err(Error::ZeroSampleSize)));
}

#[test]
fn builtin_registry() {
    for name in POLYGON_NAMES {
        assert!(builtin(name).is_ok());
    }
    assert_eq!(vertex_set(&builtin("cube-2").unwrap()), vertex_set(&cube(2).unwrap()));
    for name in ["cross-3", "Q-3", "R-2", "S-2", "T-4", "ks-0", "sym-edge-star-4", "bg-complete-3"] {
        let p = builtin(name).unwrap();
        assert!(p.dim() >= 2, "{name}");
    }
    for name in ["P10", "cube", "cube-x", "hypercube-3", "sym-edge-wheel-4", "bg-"] {
        assert!(builtin(name).is_err(), "{name}");
    }
    assert!(BUILTIN_HELP.contains("P8a") && BUILTIN_HELP.contains("cross-D"));
}

#[test]
fn catalog_records() {
    let rec = CatalogRecord {
        id: "7".into(),
        dim: 3,
        n_lattice_points: 27,
        f_vector: vec![8, 12, 6],
        degree: 48,
        ml_degree: 8,
        drop: 40,
        reflexive: true,
        seeds: 3,
        consistent: true,
        runtime_ms: 0,
    };
    assert_eq!(rec.to_csv(), "7,3,27,8;12;6,48,8,40,true,3,true,0");
    assert_eq!(CatalogRecord::CSV_HEADER.split(',').count(), rec.to_csv().split(',').count());
    let json = serde_json::to_string(&rec).unwrap();
    assert!(json.starts_with(r#"{"id":"7","dim":3,"n_lattice_points":27,"f_vector":[8,12,6],"degree":48"#));
    assert_eq!(serde_json::from_str::<CatalogRecord>(&json).unwrap(), rec);
}
