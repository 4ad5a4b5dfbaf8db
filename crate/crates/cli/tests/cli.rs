//! The `rk4` binary, driven as a subprocess.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;
use rk4::io::{parse_instance, print_instance, InstanceFile};
use rooted_k4::{Graph, RootedInstance, Vertex};
use serde_json::Value;
use tempfile::TempDir;

const K4: &str = "roots: a b c d\na b\na c\na d\nb c\nb d\nc d\n";
const K23: &str = "roots: a b c d\na x\nb x\nc x\na y\nb y\nc y\nd x\nd y\n";

fn rk4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rk4")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn k4_is_yes_with_singletons() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "k4.txt", K4);
    let out = rk4(&["decide", s(&p)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "YES\na: a\nb: b\nc: c\nd: d\n");
}

#[test]
fn k23_is_no_and_its_certificate_verifies() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "k23.txt", K23);
    let out = rk4(&["decide", "--json", s(&p)]);
    assert_eq!(code(&out), 1);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["verdict"], "no");
    let c = write(&dir, "k23.json", &stdout(&out));
    let v = rk4(&["verify", s(&p), s(&c)]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));
}

#[test]
fn three_roots_and_bad_syntax() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "three.txt", "roots: a b c\na b\nb c\n");
    assert_eq!(code(&rk4(&["decide", s(&p)])), 3);
    let p = write(&dir, "bad.txt", "roots: a b c d\na b c\n");
    let out = rk4(&["decide", s(&p)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&rk4(&["decide", "/nonexistent/file"])), 2);
}

#[test]
fn disconnected_branch_set_is_rejected() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "k4e.txt", &format!("{K4}a e\n"));
    let out = rk4(&["decide", "--json", s(&p)]);
    assert_eq!(code(&out), 0);
    let mut doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    // Hand e, which only touches a, to b's branch set.
    let sets = doc["witness"]["branch_sets"].as_array_mut().unwrap();
    for set in sets.iter_mut() {
        set["branch"].as_array_mut().unwrap().retain(|x| x != 4);
    }
    let b = sets.iter_mut().find(|set| set["root"] == 1).unwrap();
    b["branch"].as_array_mut().unwrap().push(4.into());
    let c = write(&dir, "bad.json", &doc.to_string());
    let v = rk4(&["verify", s(&p), s(&c)]);
    assert_eq!(code(&v), 1);
    assert!(stdout(&v).starts_with("rejected"));
}

/// Moves the first clique vertex into the base, inside its triangle.
fn bury_clique(doc: &Value, mirror: bool) -> Value {
    let mut doc = doc.clone();
    let ob = &mut doc["obstruction"];
    let entry = ob["plus"]["cliques"].as_array_mut().unwrap().remove(0);
    let t: Vec<u64> = entry["triangle"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    let x = entry["clique"][0].as_u64().unwrap();
    let base = &mut ob["plus"]["base"];
    base["vertices"].as_array_mut().unwrap().push(x.into());
    for &c in &t {
        base["edges"].as_array_mut().unwrap().push(serde_json::json!([c.min(x), c.max(x)]));
    }
    let rot = ob["shape"]["embedding"]["rotation"].as_array_mut().unwrap();
    for &c in &t {
        let ring = rot.iter_mut().find(|e| e[0] == c).unwrap()[1].as_array_mut().unwrap();
        let others: Vec<u64> = t.iter().copied().filter(|&y| y != c).collect();
        let k = ring.len();
        let i = (0..k)
            .find(|&i| {
                let (p, q) = (ring[i].as_u64().unwrap(), ring[(i + 1) % k].as_u64().unwrap());
                (p == others[0] && q == others[1]) || (p == others[1] && q == others[0])
            })
            .expect("the triangle is a face around each corner");
        ring.insert(i + 1, x.into());
    }
    let mut ring: Vec<Value> = t.iter().map(|&c| c.into()).collect();
    if mirror {
        ring.reverse();
    }
    rot.push(serde_json::json!([x, ring]));
    doc
}

#[test]
fn non_facial_triangle_is_rejected() {
    let dir = TempDir::new().unwrap();
    let out = rk4(&["atlas", "--class", "D", "--size-budget", "9", "--count", "20", "--seed", "5", "--out", s(dir.path())]);
    assert_eq!(code(&out), 0);
    let mut checked = 0;
    for i in 0..20 {
        let inst = dir.path().join(format!("D-{i:03}.txt"));
        let doc: Value = serde_json::from_str(&fs::read_to_string(dir.path().join(format!("D-{i:03}.json"))).unwrap()).unwrap();
        if doc["obstruction"]["plus"]["cliques"].as_array().unwrap().is_empty() {
            continue;
        }
        // Face numbers move when the embedding grows, so try every outer face.
        let faces = doc["obstruction"]["plus"]["base"]["edges"].as_array().unwrap().len() + 4;
        let mut saw_face_fault = false;
        for mirror in [false, true] {
            for outer in 0..faces {
                let mut m = bury_clique(&doc, mirror);
                m["obstruction"]["shape"]["embedding"]["outer_face"] = outer.into();
                let c = write(&dir, "mutant.json", &m.to_string());
                let v = rk4(&["verify", s(&inst), s(&c)]);
                assert_eq!(code(&v), 1, "{}", stdout(&v));
                saw_face_fault |= stdout(&v).contains("is not a face");
            }
        }
        assert!(saw_face_fault);
        checked += 1;
        if checked == 3 {
            break;
        }
    }
    assert!(checked > 0, "no sampled certificate had a clique");
}

#[test]
fn schema_mismatch_is_exit_two() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "k4.txt", K4);
    let out = rk4(&["decide", "--json", s(&p)]);
    let mut doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    doc["schema_version"] = 99.into();
    let c = write(&dir, "v99.json", &doc.to_string());
    assert_eq!(code(&rk4(&["verify", s(&p), s(&c)])), 2);
    let c = write(&dir, "junk.json", "{\"verdict\": \"maybe\"}");
    assert_eq!(code(&rk4(&["verify", s(&p), s(&c)])), 2);
}

#[test]
fn oracle_and_its_size_guard() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "k4.txt", K4);
    let out = rk4(&["oracle", s(&p)]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["present"], true);
    let guarded = Command::new(env!("CARGO_BIN_EXE_rk4"))
        .args(["oracle", s(&p)])
        .env(rooted_k4::minors::ORACLE_LIMIT_VAR, "3")
        .output()
        .unwrap();
    assert_eq!(code(&guarded), 4);
}

#[test]
fn dot_output_names_every_vertex() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "k23.txt", K23);
    let out = rk4(&["decide", "--dot", s(&p)]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.starts_with("graph"));
    for name in ["a", "b", "c", "d", "x", "y"] {
        assert!(text.contains(&format!("\"{name}\"")), "{text}");
    }
}

#[test]
fn sweeps_agree_and_repeat() {
    let out = rk4(&["sweep", "--max-n", "5"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("disagreements 0"));
    let args = ["sweep", "--mode", "random", "--max-n", "8", "--count", "30", "--seed", "11"];
    let (a, b) = (rk4(&args), rk4(&args));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_reads_graph6_from_stdin() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_rk4"))
        .args(["sweep", "--input", "-", "--max-n", "6"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"C~\nDhc\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("graphs 2"), "{}", stdout(&out));
}

#[test]
fn atlas_pairs_verify_and_repeat() {
    for class in ["A", "B", "C", "D", "E", "F"] {
        let (d1, d2) = (TempDir::new().unwrap(), TempDir::new().unwrap());
        for d in [&d1, &d2] {
            let out = rk4(&["atlas", "--class", class, "--size-budget", "10", "--count", "4", "--seed", "2", "--out", s(d.path())]);
            assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        }
        for i in 0..4 {
            for ext in ["txt", "json"] {
                let name = format!("{class}-{i:03}.{ext}");
                assert_eq!(fs::read(d1.path().join(&name)).unwrap(), fs::read(d2.path().join(&name)).unwrap());
            }
            let inst = d1.path().join(format!("{class}-{i:03}.txt"));
            let cert = d1.path().join(format!("{class}-{i:03}.json"));
            assert_eq!(code(&rk4(&["verify", s(&inst), s(&cert)])), 0);
            assert_eq!(code(&rk4(&["oracle", s(&inst)])), 1);
        }
    }
}

#[test]
fn atlas_small_cases() {
    let out = rk4(&["atlas", "--class", "A", "--size-budget", "5", "--count", "1"]);
    assert_eq!(code(&out), 0);
    let line: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let inst = parse_instance(line["instance"].as_str().unwrap()).unwrap();
    // K_{1,1,3}: two adjacent hubs joined to three more vertices.
    let g = inst.instance.graph();
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort();
    assert_eq!((g.edge_count(), degrees), (7, vec![2, 2, 2, 4, 4]));

    let out = rk4(&["atlas", "--class", "D", "--size-budget", "4", "--count", "8"]);
    assert_eq!(code(&out), 0);
    for l in stdout(&out).lines() {
        let line: Value = serde_json::from_str(l).unwrap();
        let inst = parse_instance(line["instance"].as_str().unwrap()).unwrap();
        assert_eq!(inst.instance.graph().vertex_count(), 4);
    }

    let out = rk4(&["atlas", "--class", "F", "--size-budget", "7", "--count", "1"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn generate_counts() {
    for (family, n, count) in [("connected", 5, 21), ("triangulations", 8, 14), ("planar3", 7, 34)] {
        let out = rk4(&["generate", "--family", family, "--n", &n.to_string()]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).lines().count(), count, "{family} {n}");
    }
}

fn instances() -> impl Strategy<Value = InstanceFile> {
    (4usize..9).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            Just((0..n as u32).map(Vertex).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec("[a-z][a-z0-9_]{0,4}", n),
        )
            .prop_map(move |(bits, order, names)| {
                let mut g = Graph::with_vertices((0..n as u32).map(Vertex));
                let mut k = 0;
                for j in 1..n as u32 {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(Vertex(i), Vertex(j));
                        }
                        k += 1;
                    }
                }
                let roots = [order[0], order[1], order[2], order[3]];
                let mut file = InstanceFile::from_instance(RootedInstance::new(g, roots).unwrap());
                // Distinct names: suffix each with its identifier.
                file.names = names.iter().enumerate().map(|(i, s)| format!("{s}{i}")).collect();
                file
            })
    })
}

proptest! {
    #[test]
    fn parse_inverts_print(file in instances()) {
        let printed = print_instance(&file);
        let back = parse_instance(&printed).unwrap();
        prop_assert_eq!(&back, &file);
        prop_assert_eq!(print_instance(&back), printed);
    }
}
