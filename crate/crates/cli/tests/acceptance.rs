//! Acceptance run (no test harness): one PASS/FAIL line per criterion and
//! a nonzero exit if any fails. Criteria run one after another so the time
//! budgets are measured without other work in the process.
//!
//! Pinned tolerances: every value comparison is exact (integers or
//! rationals, tolerance 0). Time budgets are wall-clock for the build
//! profile `cargo test` uses.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use p7c4c5::arcs::{bracelet_arcs, bracelet_intervals, canonical_embed, emerald_arcs, Slot};
use p7c4c5::certificate::{verify_certificate, AtomKind};
use p7c4c5::chordal::is_chordal;
use p7c4c5::cutset::{decompose, has_clique_cutset};
use p7c4c5::forge::{self, Family, Instance, InstanceSpec};
use p7c4c5::oracle::{brute_alpha, brute_chromatic, brute_has_clique_cutset, brute_max_clique, brute_mwis, brute_omega, hole_census};
use p7c4c5::recognize::recognize_atom;
use p7c4c5::solve::{greedy_color_lantern, greedy_color_ring, max_weight_clique, min_coloring, mwis};
use p7c4c5::{Graph, Rational};
use rand::Rng;

const CORPUS_SIZE: usize = 500;
const COLOR_MAX_N: usize = 14;
const MWIS_MAX_N: usize = 20;
const CLIQUE_MAX_N: usize = 18;
const WEIGHT_RANGE: (i128, i128) = (-5, 9);
const COLOR_BUDGET: Duration = Duration::from_secs(60);
const MWIS_BUDGET: Duration = Duration::from_secs(120);
const CLIQUE_BUDGET: Duration = Duration::from_secs(60);
const SMOKE_BUDGET: Duration = Duration::from_secs(10);
const SMOKE_N: usize = 2000;
const PER_FAMILY: usize = 50;

type Check = Result<String, String>;

struct Run {
    lines: Vec<(bool, String)>,
}

impl Run {
    fn criterion(&mut self, id: &str, name: &str, budget: Option<Duration>, f: impl FnOnce() -> Check) {
        let start = Instant::now();
        let got = f();
        let took = start.elapsed();
        let (mut ok, mut detail) = match got {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        let timing = match budget {
            Some(b) => {
                if took > b {
                    ok = false;
                }
                format!("{:.2}s of {}s", took.as_secs_f64(), b.as_secs())
            }
            None => format!("{:.2}s", took.as_secs_f64()),
        };
        detail = format!("{detail} [{timing}]");
        let line = format!("{} {id} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        println!("{line}");
        self.lines.push((ok, line));
    }
}

fn weights(n: usize, seed: u64) -> Vec<Rational> {
    let mut rng = forge::rng(seed);
    (0..n).map(|_| Rational::from_integer(rng.gen_range(WEIGHT_RANGE.0..=WEIGHT_RANGE.1))).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family_mix(corpus: &[Instance]) -> String {
    let mut m: BTreeMap<&str, usize> = BTreeMap::new();
    for i in corpus {
        *m.entry(i.cert.as_ref().map_or("glued", |c| c.kind.name())).or_default() += 1;
    }
    m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

/// Random atoms of one family with at most `max_n` vertices, no universal
/// clique, ids scrambled.
fn atoms(family: Family, count: usize, max_n: usize, seed: u64) -> Vec<(Graph, p7c4c5::certificate::AtomCertificate)> {
    let mut rng = forge::rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let spec = forge::random_spec(family, max_n, &mut rng);
        if let Ok((g, c)) = forge::generate(&spec, rng.gen(), 0, true) {
            if g.n() <= max_n {
                out.push((g, c));
            }
        }
    }
    out
}

fn coloring_exact(corpus: &[Instance]) -> Check {
    for inst in corpus {
        let c = min_coloring(&inst.graph).map_err(|e| format!("{}: {e}", inst.name))?;
        let want = brute_chromatic(&inst.graph).map_err(|e| e.to_string())?;
        ensure(c.is_proper(&inst.graph), || format!("{}: improper coloring", inst.name))?;
        ensure(c.count == want, || format!("{}: {} colors, oracle {want}", inst.name, c.count))?;
    }
    Ok(format!("{} instances n<={COLOR_MAX_N} ({})", corpus.len(), family_mix(corpus)))
}

fn mwis_exact() -> Check {
    let corpus = forge::corpus(2, CORPUS_SIZE, MWIS_MAX_N);
    for (i, inst) in corpus.iter().enumerate() {
        let w = weights(inst.graph.n(), i as u64);
        let s = mwis(&inst.graph, &w).map_err(|e| format!("{}: {e}", inst.name))?;
        let want = brute_mwis(&inst.graph, &w).map_err(|e| e.to_string())?;
        ensure(s.is_valid_stable(&inst.graph, &w), || format!("{}: not a stable set", inst.name))?;
        ensure(s.weight == want.weight, || format!("{}: {} vs oracle {}", inst.name, s.weight, want.weight))?;
    }
    Ok(format!("{} instances n<={MWIS_MAX_N}, weights in [{}, {}]", corpus.len(), WEIGHT_RANGE.0, WEIGHT_RANGE.1))
}

fn clique_exact() -> Check {
    let corpus = forge::corpus(3, CORPUS_SIZE, CLIQUE_MAX_N);
    for (i, inst) in corpus.iter().enumerate() {
        let w = if i % 2 == 0 { vec![Rational::from_integer(1); inst.graph.n()] } else { weights(inst.graph.n(), i as u64) };
        let s = max_weight_clique(&inst.graph, &w).map_err(|e| format!("{}: {e}", inst.name))?;
        let want = brute_max_clique(&inst.graph, &w).map_err(|e| e.to_string())?;
        ensure(s.is_valid_clique(&inst.graph, &w), || format!("{}: not a clique", inst.name))?;
        ensure(s.weight == want.weight, || format!("{}: {} vs oracle {}", inst.name, s.weight, want.weight))?;
    }
    Ok(format!("{} instances n<={CLIQUE_MAX_N}, unit and random weights", corpus.len()))
}

fn chi_bound(corpus: &[Instance]) -> Check {
    let mut gap = None;
    for inst in corpus {
        let chi = brute_chromatic(&inst.graph).map_err(|e| e.to_string())?;
        let omega = brute_omega(&inst.graph).map_err(|e| e.to_string())?;
        ensure(chi <= 3 * omega / 2, || format!("{}: chi {chi} > floor(3*{omega}/2)", inst.name))?;
        if chi > omega && gap.is_none() {
            gap = Some(format!("{} has chi {chi} > omega {omega}", inst.name));
        }
    }
    let c7 = Graph::cycle(7);
    let (chi, omega) = (brute_chromatic(&c7).unwrap(), brute_omega(&c7).unwrap());
    ensure(chi == 3 && omega == 2, || "C7 should have chi 3, omega 2".into())?;
    let gap = gap.ok_or("no corpus instance with chi > omega")?;
    Ok(format!("{} instances; {gap}; C7 chi 3 omega 2", corpus.len()))
}

fn round_trips() -> Check {
    let mut atoms_seen = 0;
    let mut small = 0;
    let mut composites = 0;
    let mut leaves = 0;
    for inst in forge::corpus(5, 400, 24) {
        let g = &inst.graph;
        match &inst.cert {
            Some(want) => {
                atoms_seen += 1;
                let cert = recognize_atom(g).map_err(|e| format!("{}: {e}", inst.name))?;
                ensure(cert.kind.name() == want.kind.name(), || format!("{}: recognized as {}", inst.name, cert.kind.name()))?;
                let errs = verify_certificate(g, &cert);
                ensure(errs.is_empty(), || format!("{}: {errs:?}", inst.name))?;
                if g.n() <= 16 {
                    small += 1;
                    ensure(!brute_has_clique_cutset(g), || format!("{}: oracle finds a clique cutset", inst.name))?;
                    ensure(has_clique_cutset(g).is_none(), || format!("{}: clique cutset found", inst.name))?;
                }
            }
            None => {
                composites += 1;
                let tree = decompose(g);
                tree.validate(g).map_err(|e| format!("{}: {e}", inst.name))?;
                for leaf in tree.leaves() {
                    leaves += 1;
                    let h = g.induced_on(leaf).graph;
                    let cert = recognize_atom(&h).map_err(|e| format!("{} leaf {leaf:?}: {e}", inst.name))?;
                    let errs = verify_certificate(&h, &cert);
                    ensure(errs.is_empty(), || format!("{} leaf {leaf:?}: {errs:?}", inst.name))?;
                }
            }
        }
    }
    Ok(format!("{atoms_seen} atoms recognized ({small} with n<=16 cutset-free), {composites} composites -> {leaves} atoms"))
}

fn alpha_three() -> Check {
    let mut total = 0;
    for (family, seed) in [(Family::Bracelet, 61), (Family::Emerald, 62)] {
        for (g, _) in atoms(family, PER_FAMILY, 18, seed) {
            let a = brute_alpha(&g).map_err(|e| e.to_string())?;
            ensure(a == 3, || format!("{family:?} on {} vertices has alpha {a}", g.n()))?;
            total += 1;
        }
    }
    Ok(format!("{total} bracelets and emeralds, alpha = 3"))
}

fn hole_lengths() -> Check {
    let mut seen = BTreeMap::new();
    let rings = [(Family::Wreath, PER_FAMILY / 2, 71), (Family::Crown, PER_FAMILY - PER_FAMILY / 2, 72)];
    for (family, count, seed) in [(Family::Lantern, PER_FAMILY, 70)].into_iter().chain(rings) {
        for (g, _) in atoms(family, count, 16, seed) {
            let census = hole_census(&g).map_err(|e| e.to_string())?;
            ensure(census.keys().all(|&k| k == 6), || format!("{family:?}: holes {census:?}"))?;
            ensure(!census.is_empty(), || format!("{family:?}: no hole at all"))?;
            *seen.entry(format!("{family:?}")).or_insert(0) += 1;
        }
    }
    Ok(format!("only 6-holes in {seen:?}"))
}

fn chordal_non_neighborhoods() -> Check {
    let mut checks = 0;
    for (k, family) in forge::FAMILIES.iter().enumerate() {
        for (g, _) in atoms(*family, PER_FAMILY, 24, 80 + k as u64) {
            for v in 0..g.n() {
                let rest = g.vertices().difference(&g.closed(v));
                let h = g.induced(&rest).map_err(|e| e.to_string())?.graph;
                ensure(is_chordal(&h), || format!("{family:?}: G - N[{v}] has a hole"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{} atoms per class, {checks} vertices", PER_FAMILY))
}

fn same_graph(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edges() == b.edges()
}

fn arc_geometry() -> Check {
    for (g, cert) in atoms(Family::Emerald, PER_FAMILY, 30, 90) {
        let AtomKind::Emerald(e) = &cert.kind else { return Err("not an emerald".into()) };
        let rep = emerald_arcs(&g, e).map_err(|e| e.to_string())?;
        ensure(rep.is_proper(), || "emerald arcs not proper".into())?;
        ensure(same_graph(&rep.realize(), &g), || "emerald arcs realize another graph".into())?;
    }
    for (g, cert) in atoms(Family::Bracelet, PER_FAMILY, 30, 91) {
        let AtomKind::Bracelet(p) = &cert.kind else { return Err("not a bracelet".into()) };
        let rep = bracelet_arcs(&g, p).map_err(|e| e.to_string())?;
        ensure(rep.is_proper(), || "bracelet arcs not proper".into())?;
        ensure(same_graph(&rep.realize(), &g), || "bracelet arcs realize another graph".into())?;
        ensure((0..rep.n()).all(|v| rep.length(v) == rep.length(0)), || "bracelet arcs of unequal length".into())?;
    }
    // the t = 1, s = 1/2 interval family, endpoint by endpoint
    let (g, p) = forge::gen_bracelet(&forge::BraceletSpec::cycle(), 0).map_err(|e| e.to_string())?;
    let canon = canonical_embed(&g, &p).map_err(|e| e.to_string())?;
    ensure(canon.t == 1, || format!("C7 folds to order {}", canon.t))?;
    let s = Rational::new(1, 2);
    let iv = bracelet_intervals(&canon, s).map_err(|e| e.to_string())?;
    let int = Rational::from_integer;
    let expect: [(&str, Rational); 13] = [
        ("a4", int(1)),
        ("a5*", int(3)),
        ("a6*", int(5)),
        ("a0*", int(7)),
        ("a1*", int(9)),
        ("a2*", int(11)),
        ("a3", int(13)),
        ("x1[a5+]", int(3) + s),
        ("x1[a0-]", int(6) + s),
        ("x1[a0+]", int(7) + s),
        ("x1[a2-]", int(10) + s),
        ("x1[a6+]", int(5) + s),
        ("x1[a1-]", int(8) + s),
    ];
    ensure(iv.len() == expect.len(), || format!("{} intervals", iv.len()))?;
    for (name, left) in expect {
        let (_, (a, b)) = iv.iter().find(|(slot, _)| slot.name() == name).ok_or(format!("no slot {name}"))?;
        ensure(*a == left && *b == left + int(3), || format!("{name}: [{a}, {b}], expected [{left}, {}]", left + int(3)))?;
    }
    ensure(iv.iter().any(|(s, _)| matches!(s, Slot::X(..))), || "no staircase slots".into())?;
    Ok(format!("{PER_FAMILY} emeralds, {PER_FAMILY} bracelets n<=30; 13 canonical intervals exact"))
}

fn greedy_exact() -> Check {
    let mut count = 0;
    for (g, cert) in atoms(Family::Lantern, PER_FAMILY, 20, 100) {
        let AtomKind::Lantern(p) = &cert.kind else { return Err("not a lantern".into()) };
        let omega = brute_omega(&g).map_err(|e| e.to_string())?;
        let c = greedy_color_lantern(&g, p, omega).map_err(|e| e.to_string())?;
        ensure(c.is_proper(&g) && c.count == omega, || format!("lantern: {} colors, omega {omega}", c.count))?;
        count += 1;
    }
    for (family, seed) in [(Family::Wreath, 101), (Family::Crown, 102)] {
        for (g, cert) in atoms(family, PER_FAMILY, 20, seed) {
            let ring = match &cert.kind {
                AtomKind::Wreath(p) | AtomKind::Ring6(p) => p.clone(),
                AtomKind::Crown(p) => p.ring(),
                k => return Err(format!("unexpected {}", k.name())),
            };
            let omega = brute_omega(&g).map_err(|e| e.to_string())?;
            let c = greedy_color_ring(&g, &ring, omega).map_err(|e| e.to_string())?;
            ensure(c.is_proper(&g) && c.count == omega, || format!("{family:?}: {} colors, omega {omega}", c.count))?;
            count += 1;
        }
    }
    Ok(format!("{count} lanterns and rings colored with exactly omega colors"))
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_p7c4c5")).args(args).output().map_err(|e| e.to_string())?;
    if !o.status.success() {
        return Err(format!("{args:?} exited {:?}: {}", o.status.code(), String::from_utf8_lossy(&o.stderr)));
    }
    Ok(o.stdout)
}

fn determinism(dir: &Path) -> Check {
    let mut runs = 0;
    for (k, family) in ["wreath", "crown", "lantern", "bracelet", "emerald"].iter().enumerate() {
        let seed = (1000 + k).to_string();
        let out = dir.join(format!("{family}.dimacs"));
        let out = out.to_str().unwrap();
        let gen = ["gen", "--family", family, "--max-n", "20", "--shuffle", "--universal", "1", "--seed", &seed, "-o", out];
        let a = cli(&gen)?;
        let file_a = std::fs::read(out).map_err(|e| e.to_string())?;
        let b = cli(&gen)?;
        ensure(a == b && file_a == std::fs::read(out).map_err(|e| e.to_string())?, || format!("gen {family} differs"))?;
        for cmd in ["check", "decompose", "recognize", "color", "mwis", "clique"] {
            let x = cli(&[cmd, out, "--seed", &seed])?;
            let y = cli(&[cmd, out, "--seed", &seed, "--jobs", "2"])?;
            ensure(x == y, || format!("{cmd} on {family} differs between runs"))?;
            runs += 2;
        }
    }
    Ok(format!("{runs} report pairs byte-identical"))
}

fn smoke() -> Check {
    let spec = forge::BraceletSpec {
        star: [290, 280, 285, 270, 300, 260, 255],
        plus: [20, 0, 0, 0, 0, 0, 0],
        minus: [0, 0, 20, 0, 0, 0, 0],
        i_star: 0,
        stairs: Default::default(),
    };
    // 1980 bracelet vertices plus a universal clique of 20
    let (g, _) = forge::generate(&InstanceSpec::Bracelet(spec), 4, 20, true).map_err(|e| e.to_string())?;
    ensure(g.n() == SMOKE_N, || format!("generated {} vertices", g.n()))?;
    let start = Instant::now();
    let c = min_coloring(&g).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(c.is_proper(&g), || "improper coloring".into())?;
    Ok(format!("n = {}, {} colors, solve {:.2}s", g.n(), c.count, took.as_secs_f64()))
}

fn main() {
    let mut run = Run { lines: Vec::new() };
    let corpus = forge::corpus(1, CORPUS_SIZE, COLOR_MAX_N);
    run.criterion("1", "coloring equals brute-force chromatic number", Some(COLOR_BUDGET), || coloring_exact(&corpus));
    run.criterion("2", "stable set weight equals brute force", Some(MWIS_BUDGET), mwis_exact);
    run.criterion("3", "clique weight equals brute force", Some(CLIQUE_BUDGET), clique_exact);
    run.criterion("4", "chi <= floor(3 omega / 2), with chi > omega witnessed", None, || chi_bound(&corpus));
    run.criterion("5", "atom and decomposition round trips", None, round_trips);
    run.criterion("6", "alpha = 3 on bracelets and emeralds", None, alpha_three);
    run.criterion("7", "lantern and 6-ring holes have length 6", None, hole_lengths);
    run.criterion("8", "G - N[v] chordal in every atom", None, chordal_non_neighborhoods);
    run.criterion("9", "arc models proper, exact, canonical intervals", None, arc_geometry);
    run.criterion("10", "greedy lantern and ring colorings use omega colors", None, greedy_exact);
    let dir = tempfile::tempdir().expect("temp dir");
    run.criterion("11", "CLI reports byte-identical across runs", None, || determinism(dir.path()));
    run.criterion("smoke", "min_coloring on a 2000-vertex bracelet blow-up", Some(SMOKE_BUDGET), smoke);
    let failed = run.lines.iter().filter(|l| !l.0).count();
    println!("acceptance: {} of {} criteria passed", run.lines.len() - failed, run.lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
