//! Acceptance suite: one line per criterion, `PASS`, `FAIL` or `SKIPPED`.
//!
//! Runs without the libtest harness so the lines always show. The process
//! exits non-zero if any criterion fails. Criterion 8 needs the external
//! order-9 files and is skipped when they are absent.

use std::collections::VecDeque;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torlink_core::graph::enumerate_cycles;
use torlink_core::io::load_graph6_file;
use torlink_core::oracles::{
    is_nil, is_toroidal, k8_minus_2k2_p3, k8_minus_k23, k8_minus_k3, obstruction_file_name,
    petersen_family, ObstructionDb,
};
use torlink_core::search::{
    census_maxnil, classify_maxnil, extract_obstruction_set_s, find_all_mtn_order9,
    verify_size19_exclusion, MAXNIL_ORDER9_FILE,
};
use torlink_core::torus::{
    k6_minus_e_embedding, torus_link_linking_number, TorusDiagram, K6_MINUS_E_EMBEDDING,
    K6_MINUS_E_LINKED_EMBEDDING,
};
use torlink_core::Graph;

enum Verdict {
    Pass(String),
    Fail(String),
    Skipped(String),
}

use Verdict::*;

fn verdict(ok: bool, detail: String) -> Verdict {
    if ok {
        Pass(detail)
    } else {
        Fail(detail)
    }
}

fn within(limit: Duration, start: Instant, failures: &mut Vec<String>, what: &str) {
    let t = start.elapsed();
    if t > limit {
        failures.push(format!("{what} took {t:.2?} (limit {limit:?})"));
    }
}

// ---- criterion 1 -----------------------------------------------------------

/// Backtracking isomorphism test matching vertices of equal degree.
fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.order() {
            return true;
        }
        for v in 0..b.order() {
            if used[v] || a.degree(i) != b.degree(v) {
                continue;
            }
            if (0..i).all(|j| a.has_edge(i, j) == b.has_edge(v, map[j])) {
                used[v] = true;
                map.push(v);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[v] = false;
            }
        }
        false
    }
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && extend(a, b, &mut Vec::new(), &mut vec![false; b.order()])
}

fn delta_y(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    let mut edges: Vec<(usize, usize)> = g
                        .edges()
                        .filter(|&(u, v)| ![(a, b), (b, c), (a, c)].contains(&(u, v)))
                        .collect();
                    edges.extend([(a, n), (b, n), (c, n)]);
                    out.push(Graph::from_edges(n + 1, &edges).unwrap());
                }
            }
        }
    }
    out
}

fn y_delta(g: &Graph) -> Vec<Graph> {
    let mut out = Vec::new();
    for w in 0..g.order() {
        let nb: Vec<usize> = (0..g.order()).filter(|&u| g.has_edge(w, u)).collect();
        if nb.len() != 3 {
            continue;
        }
        let (a, b, c) = (nb[0], nb[1], nb[2]);
        if g.has_edge(a, b) || g.has_edge(b, c) || g.has_edge(a, c) {
            continue;
        }
        let h = g
            .add_edge(a, b)
            .and_then(|h| h.add_edge(b, c))
            .and_then(|h| h.add_edge(a, c))
            .and_then(|h| h.delete_vertex(w))
            .unwrap();
        out.push(h);
    }
    out
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut family: Vec<Graph> = vec![Graph::complete(6)];
    let mut queue = VecDeque::from([Graph::complete(6)]);
    while let Some(g) = queue.pop_front() {
        for h in delta_y(&g).into_iter().chain(y_delta(&g)) {
            if !family.iter().any(|f| isomorphic_brute(f, &h)) {
                family.push(h);
                queue.push_back(h);
            }
        }
    }
    let oracle_time = start.elapsed();
    let start = Instant::now();
    let lib = petersen_family().graphs();
    let lib_time = start.elapsed();
    let mut failures = Vec::new();
    if lib.len() != 7 {
        failures.push(format!("library closure has {} members", lib.len()));
    }
    if family.len() != 7 {
        failures.push(format!("oracle closure has {} members", family.len()));
    }
    if lib.iter().any(|g| g.size() != 15) {
        failures.push("a member does not have 15 edges".into());
    }
    for (i, a) in lib.iter().enumerate() {
        if lib[i + 1..].iter().any(|b| isomorphic_brute(a, b)) {
            failures.push(format!("duplicate member {}", a.to_graph6()));
        }
        if !family.iter().any(|f| isomorphic_brute(f, a)) {
            failures.push(format!("{} not in oracle closure", a.to_graph6()));
        }
    }
    if lib_time > Duration::from_secs(1) {
        failures.push(format!("closure took {lib_time:.2?}"));
    }
    verdict(
        failures.is_empty(),
        format!(
            "Petersen family: {} members, sizes all 15, pairwise non-isomorphic; library {lib_time:.2?}, oracle {oracle_time:.2?} {}",
            lib.len(),
            failures.join("; ")
        ),
    )
}

// ---- criterion 2 -----------------------------------------------------------

fn criterion_2() -> Verdict {
    let k6e = Graph::complete(6).delete_edge(0, 1).unwrap();
    let cases = [
        ("K5", Graph::complete(5), true),
        ("K6", Graph::complete(6), false),
        ("K6-e", k6e, true),
        ("K8-K2,3", k8_minus_k23(), false),
    ];
    let mut failures = Vec::new();
    let mut shown = Vec::new();
    for (name, g, want) in cases {
        let start = Instant::now();
        let got = is_nil(&g);
        within(Duration::from_secs(1), start, &mut failures, name);
        if got != want {
            failures.push(format!("{name}: got {got}"));
        }
        shown.push(format!("{name}={got}"));
    }
    verdict(
        failures.is_empty(),
        format!("is_nil {} {}", shown.join(" "), failures.join("; ")),
    )
}

// ---- criterion 3 -----------------------------------------------------------

fn criterion_3() -> Verdict {
    let mut failures = Vec::new();
    let start = Instant::now();
    let six = census_maxnil(6).unwrap();
    let seven = census_maxnil(7).unwrap();
    within(
        Duration::from_secs(300),
        start,
        &mut failures,
        "orders 6 and 7",
    );
    let small = start.elapsed();
    let k6e = Graph::complete(6).delete_edge(0, 1).unwrap();
    if six.len() != 1 || !isomorphic_brute(&six[0], &k6e) {
        failures.push(format!("order 6 gave {} graphs", six.len()));
    }
    if seven.len() != 2 {
        failures.push(format!("order 7 gave {} graphs", seven.len()));
    }
    let start = Instant::now();
    let eight = census_maxnil(8).unwrap();
    within(Duration::from_secs(3600), start, &mut failures, "order 8");
    let big = start.elapsed();
    let mut sizes: Vec<usize> = eight.iter().map(Graph::size).collect();
    sizes.sort_unstable();
    if sizes != [21, 22, 22, 22, 22, 22] {
        failures.push(format!("order 8 sizes {sizes:?}"));
    }
    verdict(
        failures.is_empty(),
        format!(
            "maxnIL census: n=6 {} (K6-e), n=7 {}, n=8 {} sizes {sizes:?}; {small:.2?} + {big:.2?} {}",
            six.len(),
            seven.len(),
            eight.len(),
            failures.join("; ")
        ),
    )
}

// ---- criterion 4 -----------------------------------------------------------

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let db = ObstructionDb::builtin();
    let mut failures = Vec::new();
    if !is_toroidal(&Graph::complete(7), &db).unwrap() {
        failures.push("K7 reported non-toroidal".into());
    }
    let mut deletions = 0;
    for (name, h) in [
        ("K8-K3", k8_minus_k3()),
        ("K8-(2K2+P3)", k8_minus_2k2_p3()),
        ("K8-K2,3", k8_minus_k23()),
    ] {
        if is_toroidal(&h, &db).unwrap() {
            failures.push(format!("{name} reported toroidal"));
        }
        for (u, v) in h.edges() {
            deletions += 1;
            if !is_toroidal(&h.delete_edge(u, v).unwrap(), &db).unwrap() {
                failures.push(format!("{name} minus {}-{} non-toroidal", u + 1, v + 1));
            }
        }
    }
    within(Duration::from_secs(300), start, &mut failures, "criterion");
    verdict(
        failures.is_empty(),
        format!(
            "B8 toroidality: K7 toroidal, 3 obstructions non-toroidal, {deletions} edge deletions toroidal; {:.2?} {}",
            start.elapsed(),
            failures.join("; ")
        ),
    )
}

// ---- criterion 5 -----------------------------------------------------------

fn random_diagram(rng: &mut ChaCha8Rng) -> TorusDiagram {
    let n = rng.gen_range(3..=7);
    let mut edges = Vec::new();
    let (mut up, mut right) = (Vec::new(), Vec::new());
    for u in 0..n {
        for v in u + 1..n {
            if !rng.gen_bool(0.6) {
                continue;
            }
            edges.push((u, v));
            for list in [&mut up, &mut right] {
                match rng.gen_range(0..3) {
                    1 => list.push((u, v)),
                    2 => list.push((v, u)),
                    _ => {}
                }
            }
        }
    }
    TorusDiagram::new(Graph::from_edges(n, &edges).unwrap(), up, right).unwrap()
}

fn criterion_5() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let mut failures = Vec::new();
    let (mut diagrams, mut cycles) = (0, 0);
    let fixtures = [
        TorusDiagram::parse(K6_MINUS_E_EMBEDDING).unwrap(),
        TorusDiagram::parse(K6_MINUS_E_LINKED_EMBEDDING).unwrap(),
    ];
    let randoms = (0..1000).map(|_| random_diagram(&mut rng));
    for d in fixtures.into_iter().chain(randoms) {
        diagrams += 1;
        if !d.crossing_matrix().is_antisymmetric() {
            failures.push(format!("crossing matrix not antisymmetric:\n{d}"));
        }
        for c in enumerate_cycles(d.graph(), 3, d.graph().order()) {
            cycles += 1;
            let (p, q) = d.cycle_crossings(&c);
            let rev = c.reversed();
            if d.cycle_crossings(&rev) != (-p, -q) || d.cycle_slope(&rev) != d.cycle_slope(&c) {
                failures.push(format!("orientation changes slope of {c}"));
            }
            if (0..c.len()).any(|k| d.cycle_crossings(&c.rotated(k)) != (p, q)) {
                failures.push(format!("rotation changes slope of {c}"));
            }
        }
    }
    failures.truncate(5);
    verdict(
        failures.is_empty(),
        format!(
            "slope calculus: {diagrams} diagrams, {cycles} cycles, orientation/rotation invariant, antisymmetric; {:.2?} {}",
            start.elapsed(),
            failures.join("; ")
        ),
    )
}

// ---- criterion 6 -----------------------------------------------------------

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    let one_one = TorusDiagram::new(g, vec![(2, 0), (5, 3)], vec![(2, 0), (5, 3)]).unwrap();
    let zero_one = TorusDiagram::new(g, vec![], vec![(2, 0), (5, 3)]).unwrap();
    let a = one_one.find_links().len();
    let b = zero_one.find_links().len();
    let bundled = k6_minus_e_embedding().is_linkless();
    let t = start.elapsed();
    let ok = a == 1 && b == 0 && bundled && t < Duration::from_secs(1);
    verdict(
        ok,
        format!("link detection: (1,1) pair {a} link, (0,1) pair {b} links, bundled K6-e linkless={bundled}; {t:.2?}"),
    )
}

// ---- criterion 7 -----------------------------------------------------------

fn criterion_7() -> Verdict {
    let lk = |m, n| torus_link_linking_number(m, n).unwrap();
    let mut failures = Vec::new();
    if lk(2, 2) != Ratio::from_integer(1) {
        failures.push(format!("T(2,2) gave {}", lk(2, 2)));
    }
    if lk(2, 4) != Ratio::from_integer(2) {
        failures.push(format!("T(2,4) gave {}", lk(2, 4)));
    }
    let mut coprime = 0;
    for m in 1..=30i64 {
        for n in 1..=30i64 {
            if num_gcd(m, n) == 1 {
                coprime += 1;
                if lk(m, n) != Ratio::from_integer(0) {
                    failures.push(format!("T({m},{n}) gave {}", lk(m, n)));
                }
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "linking number: T(2,2)={} T(2,4)={} and 0 on {coprime} coprime pairs {}",
            lk(2, 2),
            lk(2, 4),
            failures.join("; ")
        ),
    )
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}

// ---- criterion 8 -----------------------------------------------------------

fn data_dir() -> Option<PathBuf> {
    let candidates = [
        std::env::var_os("TORLINK_DATA_DIR").map(PathBuf::from),
        Some(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")),
    ];
    candidates
        .into_iter()
        .flatten()
        .find(|d| d.join(MAXNIL_ORDER9_FILE).exists() && d.join(obstruction_file_name(9)).exists())
}

fn criterion_8() -> Verdict {
    let Some(dir) = data_dir() else {
        return Skipped(format!(
            "order-9 census needs {MAXNIL_ORDER9_FILE} and {} (set TORLINK_DATA_DIR)",
            obstruction_file_name(9)
        ));
    };
    let start = Instant::now();
    let run = || -> torlink_core::Result<(Vec<String>, String)> {
        let db = ObstructionDb::load(&dir)?;
        let maxnil = load_graph6_file(&dir.join(MAXNIL_ORDER9_FILE))?;
        let ctx = classify_maxnil(&maxnil, &db)?;
        let s = extract_obstruction_set_s(&ctx)?;
        let size19 = verify_size19_exclusion(&s, &db)?;
        let report = find_all_mtn_order9(&ctx)?;
        let mut failures = Vec::new();
        let (m, n) = (ctx.toroidal_maxnil().len(), ctx.nontoroidal_maxnil().len());
        if (m, n) != (16, 4) {
            failures.push(format!("partition {m}/{n}"));
        }
        if s.graphs.len() != 5 || s.graphs.iter().any(|g| g.size() != 20) {
            failures.push(format!("S has {} graphs", s.graphs.len()));
        }
        if !size19 {
            failures.push("size-19 exclusion failed".into());
        }
        if report.script_m.len() != 11 || report.all_mtn.len() != 27 {
            failures.push(format!(
                "script M {} and all MTN {}",
                report.script_m.len(),
                report.all_mtn.len()
            ));
        }
        let detail = format!(
            "order 9: {m}/{n} split, |S|={}, size-19 exclusion {size19}, |M|={}, all MTN {}",
            s.graphs.len(),
            report.script_m.len(),
            report.all_mtn.len()
        );
        Ok((failures, detail))
    };
    match run() {
        Ok((mut failures, detail)) => {
            within(Duration::from_secs(1800), start, &mut failures, "census");
            verdict(
                failures.is_empty(),
                format!("{detail}; {:.2?} {}", start.elapsed(), failures.join("; ")),
            )
        }
        Err(e) => Fail(format!("order-9 data in {}: {e}", dir.display())),
    }
}

// ---- criterion 9 -----------------------------------------------------------

fn invoke(args: &[&str]) -> (u8, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = torlink::run(
        std::iter::once("torlink").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, out)
}

fn criterion_9() -> Verdict {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let emb_dir = dir.join("emb");
    fs::create_dir(&emb_dir).unwrap();
    let linkless = emb_dir.join("k6e.emb");
    let linked = dir.join("linked.emb");
    fs::write(&linkless, K6_MINUS_E_EMBEDDING).unwrap();
    fs::write(&linked, K6_MINUS_E_LINKED_EMBEDDING).unwrap();
    let mtn = dir.join("mtn.g6");
    let census6: Vec<String> = census_maxnil(6)
        .unwrap()
        .iter()
        .map(Graph::to_graph6)
        .collect();
    fs::write(&mtn, census6.join("\n") + "\n").unwrap();
    let data = dir.join("data");
    fs::create_dir(&data).unwrap();
    let b8: Vec<String> = [k8_minus_k3(), k8_minus_2k2_p3(), k8_minus_k23()]
        .iter()
        .map(Graph::to_graph6)
        .collect();
    fs::write(data.join(obstruction_file_name(8)), b8.join("\n") + "\n").unwrap();

    let p = |path: &Path| path.to_string_lossy().into_owned();
    let (linkless, linked, mtn, emb_dir, data) =
        (p(&linkless), p(&linked), p(&mtn), p(&emb_dir), p(&data));
    let k6e = Graph::complete(6).delete_edge(0, 1).unwrap().to_graph6();
    let commands: Vec<Vec<&str>> = vec![
        vec!["check", &k6e],
        vec!["check", "--nil", &k6e],
        vec!["check", "--file", &mtn, "--mtn"],
        vec!["petersen"],
        vec!["linking-number", "2", "4"],
        vec!["slope", &linked, "1-4-5", "2-3-6"],
        vec!["find-links", &linked],
        vec![
            "find-links",
            &linkless,
            "--min-cycle",
            "3",
            "--max-cycle",
            "4",
        ],
        vec!["verify-embedding", &linkless],
        vec!["verify-embedding", &linked],
        vec!["census-maxnil", "7"],
        vec!["certify", &mtn, &emb_dir],
        vec!["validate-data", "--data-dir", &data],
        vec!["mtn-census", "--data-dir", &data],
    ];
    let mut failures = Vec::new();
    for cmd in &commands {
        let base = invoke(cmd);
        for jobs in [None, Some("1"), Some("4")] {
            let mut args = cmd.clone();
            if let Some(j) = jobs {
                args.extend(["--jobs", j]);
            }
            if invoke(&args) != base {
                failures.push(format!("`{}` differs with {:?}", cmd.join(" "), jobs));
            }
        }
    }
    // expected exit statuses on representative commands
    let expect = [
        (vec!["check", "--nil", k6e.as_str()], 0),
        (vec!["verify-embedding", linked.as_str()], 1),
        (vec!["verify-embedding", linkless.as_str()], 0),
        (vec!["check", "not-graph6!"], 2),
        (vec!["mtn-census", "--data-dir", data.as_str()], 2),
    ];
    for (cmd, want) in &expect {
        let (code, _) = invoke(cmd);
        if code != *want {
            failures.push(format!(
                "`{}` exited {code}, expected {want}",
                cmd.join(" ")
            ));
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "determinism: {} commands byte-identical across runs and --jobs 1/4 {}",
            commands.len(),
            failures.join("; ")
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Verdict); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (i, f) in criteria {
        let line = match f() {
            Pass(d) => format!("PASS    criterion {i}: {}", d.trim_end()),
            Fail(d) => {
                failed += 1;
                format!("FAIL    criterion {i}: {}", d.trim_end())
            }
            Skipped(d) => format!("SKIPPED criterion {i}: {}", d.trim_end()),
        };
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
