use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use p5gem::instances::{gallery_g1, gallery_g2};
use p5gem::Graph;
use tempfile::TempDir;

fn p5gem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p5gem")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_edgelist(dir: &Path, name: &str, g: &Graph) -> String {
    let mut text = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        text += &format!("{u} {v}\n");
    }
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn detect_and_classify_the_five_cycle() {
    let dir = TempDir::new().unwrap();
    let c5 = write_edgelist(dir.path(), "c5.txt", &Graph::cycle(5));
    let out = p5gem(&["detect", &c5]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "C5: 0 1 2 3 4\n");
    let out = p5gem(&["classify", &c5]);
    assert_eq!(stdout(&out), "G1; bags: singletons\n");
    let p4 = write_edgelist(dir.path(), "p4.txt", &Graph::path(4));
    assert_eq!(stdout(&p5gem(&["detect", &p4])), "none\n");
    assert_eq!(stdout(&p5gem(&["detect", "--pattern", "p4", &p4])), "P4: 0 1 2 3\n");
    assert_eq!(stdout(&p5gem(&["classify", &p4])), "Perfect\n");
}

#[test]
fn oracle_on_the_gallery() {
    let dir = TempDir::new().unwrap();
    let g1 = write_edgelist(dir.path(), "g1.txt", &gallery_g1());
    assert_eq!(stdout(&p5gem(&["oracle", &g1])), "chi = 8\n");
    let out = p5gem(&["oracle", "--max-oracle-n", "10", &g1]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("oracle cap"));
    let out = Command::new(env!("CARGO_BIN_EXE_p5gem"))
        .args(["oracle", &g1])
        .env("P5GEM_MAX_ORACLE_N", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn color_exit_codes() {
    let dir = TempDir::new().unwrap();
    let g1 = write_edgelist(dir.path(), "g1.txt", &gallery_g1());
    assert_eq!(p5gem(&["color", &g1]).status.code(), Some(4));
    let p5 = write_edgelist(dir.path(), "p5.txt", &Graph::path(5));
    let out = p5gem(&["color", &p5]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("P5: 0 1 2 3 4"));
    let big_clique = write_edgelist(dir.path(), "k9c5.txt", &Graph::complete(9).join(&Graph::empty(1)));
    assert_eq!(p5gem(&["color", &big_clique]).status.code(), Some(5));
    let broken = dir.path().join("broken.txt");
    fs::write(&broken, "3 1\n0 7\n").unwrap();
    assert_eq!(p5gem(&["color", broken.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn gallery_g2_through_the_unchecked_mode() {
    let dir = TempDir::new().unwrap();
    let g2 = write_edgelist(dir.path(), "g2.txt", &gallery_g2(9).unwrap());
    let strict = p5gem(&["color", &g2]);
    assert_eq!(strict.status.code(), Some(3));
    assert!(stderr(&strict).contains("GEM"));
    let out = p5gem(&["color", "--unchecked", &g2]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("palette 8\n"));
    let coloring = dir.path().join("g2.colors");
    fs::write(&coloring, stdout(&out)).unwrap();
    assert!(p5gem(&["verify", &g2, coloring.to_str().unwrap()]).status.success());
}

#[test]
fn formats_agree() {
    let dir = TempDir::new().unwrap();
    let g = gallery_g1();
    let mut dimacs = format!("c gallery\np edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        dimacs += &format!("e {} {}\n", u + 1, v + 1);
    }
    fs::write(dir.path().join("g1.col"), dimacs).unwrap();
    let path = dir.path().join("g1.col");
    assert_eq!(stdout(&p5gem(&["oracle", path.to_str().unwrap()])), "chi = 8\n");
    fs::write(dir.path().join("c5.g6"), "Dhc\n").unwrap();
    let out = p5gem(&["detect", dir.path().join("c5.g6").to_str().unwrap()]);
    assert_eq!(stdout(&out), "C5: 0 1 2 3 4\n");
    let out = p5gem(&["detect", "--format", "graph6", dir.path().join("c5.g6").to_str().unwrap()]);
    assert_eq!(stdout(&out), "C5: 0 1 2 3 4\n");
}

#[test]
fn verify_rejects_bad_colorings() {
    let dir = TempDir::new().unwrap();
    let c5 = write_edgelist(dir.path(), "c5.txt", &Graph::cycle(5));
    let bad = dir.path().join("bad");
    fs::write(&bad, "palette 2\n0 1\n1 2\n2 1\n3 2\n4 1\n").unwrap();
    let out = p5gem(&["verify", &c5, bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "invalid\n");
    let good = dir.path().join("good");
    fs::write(&good, "0 1\n1 2\n2 1\n3 2\n4 3\n").unwrap();
    assert!(p5gem(&["verify", &c5, good.to_str().unwrap()]).status.success());
}

#[test]
fn replay_refuses_other_graphs() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let graph = d.join("g.txt");
    let out = p5gem(&["gen", "--class", "G4", "--seed", "3", "--out", graph.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let trace = d.join("t.json");
    assert!(p5gem(&["color", graph.to_str().unwrap(), "--trace", trace.to_str().unwrap()]).status.success());
    let c5 = write_edgelist(d, "c5.txt", &Graph::cycle(5));
    let out = p5gem(&["replay", &c5, trace.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("different graph"));
}

#[test]
fn gen_rejects_unknown_classes() {
    let dir = TempDir::new().unwrap();
    let out = p5gem(&["gen", "--class", "G12", "--out", dir.path().join("x").to_str().unwrap()]);
    assert!(!out.status.success());
    let out = p5gem(&["gen", "--class", "G1", "--sizes", "1,1", "--out", dir.path().join("x").to_str().unwrap()]);
    assert!(!out.status.success());
}

#[test]
fn gen_color_verify_replay_round_trip() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let classes = ["G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "H"];
    for seed in 0..500u64 {
        let class = classes[seed as usize % classes.len()];
        let mode = if seed % 2 == 0 { "clique" } else { "cograph" };
        let format = ["edgelist", "dimacs", "graph6"][seed as usize % 3];
        let graph = d.join(format!("g{seed}"));
        let bags = d.join(format!("b{seed}.json"));
        let trace = d.join(format!("t{seed}.json"));
        let colors = d.join(format!("c{seed}"));
        let (graph, bags, trace, colors) =
            (graph.to_str().unwrap(), bags.to_str().unwrap(), trace.to_str().unwrap(), colors.to_str().unwrap());
        let seed_text = seed.to_string();
        let out = p5gem(&["gen", "--class", class, "--mode", mode, "--seed", &seed_text, "--format", format, "--out", graph, "--bags", bags]);
        assert!(out.status.success(), "gen {class} {seed}: {}", stderr(&out));
        let out = p5gem(&["color", "--format", format, graph, "--trace", trace]);
        assert!(out.status.success(), "color {class} {seed}: {}", stderr(&out));
        let palette = stdout(&out).lines().next().unwrap().to_string();
        assert!(palette == "palette 8", "{class} {seed}: {palette}");
        fs::write(colors, stdout(&out)).unwrap();
        let out = p5gem(&["verify", "--format", format, graph, colors]);
        assert!(out.status.success(), "verify {class} {seed}: {}", stdout(&out));
        let out = p5gem(&["replay", "--format", format, graph, trace]);
        assert!(out.status.success(), "replay {class} {seed}: {}", stderr(&out));
        assert_eq!(stdout(&out), fs::read_to_string(colors).unwrap());
    }
}
