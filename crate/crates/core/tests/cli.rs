use std::path::PathBuf;
use std::process::{Command, Output};

use ideal_polyhedra::analysis::glue_along_face;
use ideal_polyhedra::enumeration::{antiprism, twisted_antiprism};
use ideal_polyhedra::planar::{
    parse_planar_code, trace_faces, write_json_lines, write_planar_code, PlanarGraph,
};
use ideal_polyhedra::solids;

fn idealpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("idealpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_graphs(name: &str, graphs: &[PlanarGraph], planar_code: bool) -> PathBuf {
    let path = scratch(name);
    let file = std::fs::File::create(&path).unwrap();
    if planar_code {
        write_planar_code(graphs, file).unwrap();
    } else {
        write_json_lines(graphs, file).unwrap();
    }
    path
}

fn summary_counts(text: &str) -> Vec<(usize, usize)> {
    text.lines()
        .filter_map(|l| {
            let rest = l.strip_prefix("faces=")?;
            let (f, c) = rest.split_once(" polyhedra=")?;
            Some((f.parse().ok()?, c.split_whitespace().next()?.parse().ok()?))
        })
        .collect()
}

#[test]
fn enumerate_reports_counts_on_stderr() {
    let o = idealpoly(&["enumerate", "--max-faces", "12"]);
    assert!(o.status.success());
    assert_eq!(
        summary_counts(&stderr(&o)),
        vec![(8, 1), (9, 0), (10, 1), (11, 1), (12, 2)]
    );
    let graphs = parse_planar_code(&o.stdout).unwrap();
    assert_eq!(graphs.len(), 5);
}

#[test]
fn enumerate_to_file_reports_on_stdout() {
    let out = scratch("oct.pc");
    let o = idealpoly(&[
        "enumerate",
        "--max-faces",
        "8",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(summary_counts(&stdout(&o)), vec![(8, 1)]);
    let graphs = parse_planar_code(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(graphs.len(), 1);
    assert_eq!(graphs[0].vertex_count(), 6);
}

#[test]
fn enumerate_rejects_small_limits() {
    let o = idealpoly(&["enumerate", "--max-faces", "7"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("at least 8"));
    let o = idealpoly(&["enumerate", "--max-faces", "8", "--jobs", "0"]);
    assert!(!o.status.success());
}

#[test]
fn enumerate_formats() {
    let o = idealpoly(&["enumerate", "--max-faces", "11", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("code,faces,vertices\n"));
    assert_eq!(text.lines().count(), 1 + 3);
    let o = idealpoly(&["enumerate", "--max-faces", "11", "--format", "json"]);
    assert_eq!(stdout(&o).lines().count(), 3);
    assert!(stdout(&o).contains("\"rotation\""));
}

#[test]
fn volume_of_known_graphs() {
    let input = write_graphs(
        "known.pc",
        &[antiprism(3).unwrap(), twisted_antiprism(4).unwrap()],
        true,
    );
    let o = idealpoly(&["volume", "--in", input.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("code,faces,volume"));
    let rows: Vec<(usize, String)> = lines
        .map(|l| {
            let parts: Vec<&str> = l.split(',').collect();
            (parts[1].parse().unwrap(), parts[2].to_string())
        })
        .collect();
    assert!(rows.contains(&(8, "3.66386238".to_string())));
    assert!(rows.contains(&(11, "7.32772475".to_string())));
}

#[test]
fn volume_reports_unrealizable_records_and_continues() {
    let a4 = antiprism(4).unwrap();
    let fs = trace_faces(&a4);
    let square = (0..fs.face_count())
        .find(|&f| fs.face(f).len() == 4)
        .unwrap();
    let mirror = a4.mirror();
    let mfs = trace_faces(&mirror);
    let msquare = (0..mfs.face_count())
        .find(|&f| {
            let mut a = mfs.face(f).to_vec();
            let mut b = fs.face(square).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        })
        .unwrap();
    // the mirror copy reverses the cyclic order, so the identity pairing is admissible
    let m: Vec<_> = fs.face(square).iter().map(|&v| (v, v)).collect();
    let glued = glue_along_face(&a4, square, &mirror, msquare, &m).unwrap();
    let input = write_graphs(
        "mixed.jsonl",
        &[
            antiprism(3).unwrap(),
            solids::elongated_square_bipyramid(),
            glued,
        ],
        false,
    );
    let o = idealpoly(&["volume", "--in", input.to_str().unwrap()]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("record 2"), "{err}");
    assert!(err.contains("non-facial 4-cycle"), "{err}");
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains(",8,3.66386238"));
    assert!(text.contains(",14,12.0460920"));
}

#[test]
fn volume_output_is_reproducible() {
    let input = write_graphs(
        "repro.pc",
        &[solids::rhombicuboctahedron(), antiprism(9).unwrap()],
        true,
    );
    let run = || {
        idealpoly(&[
            "volume",
            "--in",
            input.to_str().unwrap(),
            "--seed",
            "7",
            "--jobs",
            "2",
        ])
        .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn spectrum_prefix() {
    let o = idealpoly(&["spectrum", "--max-faces", "14"]);
    assert!(o.status.success());
    let values: Vec<f64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let expected = [
        3.663863, 6.023046, 7.327725, 8.137885, 8.612415, 9.686908, 10.149416,
    ];
    for (v, e) in values.iter().zip(expected) {
        assert!((v - e).abs() < 1e-6, "{v} vs {e}");
    }
    assert!(stderr(&o).contains("complete"));
}

#[test]
fn spectrum_refuses_incomplete_cutoff() {
    let o = idealpoly(&["spectrum", "--max-faces", "12", "--cutoff", "12.05"]);
    assert!(!o.status.success());
    assert!(
        stderr(&o).contains("missing face counts [13, 14, 15, 16, 17]"),
        "{}",
        stderr(&o)
    );
    let o = idealpoly(&["spectrum", "--max-faces", "12", "--cutoff", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 3);
}

#[test]
fn census_file_feeds_later_commands() {
    let out = scratch("c13.jsonl");
    let o = idealpoly(&[
        "census",
        "--max-faces",
        "13",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("faces=13 polyhedra=2 distinct=2"));
    let records = std::fs::read_to_string(&out).unwrap();
    assert_eq!(records.lines().count(), 7);
    let side = std::fs::read(format!("{}.planar_code", out.display())).unwrap();
    assert_eq!(parse_planar_code(&side).unwrap().len(), 7);

    let o = idealpoly(&["spectrum", "--in", out.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().count(), 1 + 7);
    let o = idealpoly(&["bounds", "--in", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("violations=0"));
}

#[test]
fn bounds_without_violations() {
    let o = idealpoly(&["bounds", "--max-faces", "12"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("records=5 violations=0"));
    assert!(stdout(&o).starts_with("code,vertices,volume,atkinson_lower"));
}

#[test]
fn no_itr_polyhedra_below_26_faces() {
    let o = idealpoly(&["itr", "--max-faces", "25"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("no ITR-polyhedra found"));
}

#[test]
fn plot_data_classes_and_curves() {
    let o = idealpoly(&["plot-data", "--max-faces", "13"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("vertices,volume,class\n"));
    for class in [
        "antiprism",
        "twisted",
        "other",
        "curve-lower",
        "curve-upper",
    ] {
        assert!(
            text.lines().any(|l| l.ends_with(&format!(",{class}"))),
            "missing {class}"
        );
    }
    // one curve pair per vertex count 6..=11
    assert_eq!(
        text.lines().filter(|l| l.ends_with(",curve-lower")).count(),
        6
    );
}
