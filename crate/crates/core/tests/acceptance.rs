//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use goishi::cli::{cmd_table, parse_fixture, TableFormat};
use goishi::closedform::{block_symmetry_mismatches, in_a, in_b};
use goishi::oracle::{forbidden_nim_graph, GoishiGraph, NimGraph, Solver};
use goishi::{build_table, moves, Convention, Engine, Outcome, Position, SeedSpec, TableBuilder};

const FIXTURES: [(SeedSpec, &str); 4] = [
    (SeedSpec::G0, include_str!("../fixtures/g0.csv")),
    (SeedSpec::G1, include_str!("../fixtures/g1.csv")),
    (SeedSpec::GM1, include_str!("../fixtures/gm1.csv")),
    (SeedSpec::GM1Star, include_str!("../fixtures/gm1star.csv")),
];

type Criterion = (&'static str, Option<Duration>, fn() -> Verdict);

struct Verdict {
    mismatches: usize,
    detail: String,
}

fn table_reproduction() -> Verdict {
    let builder = TableBuilder::default();
    let mut mismatches = 0;
    let mut cells = 0;
    for (spec, text) in FIXTURES {
        let expected = parse_fixture(text);
        let generated = parse_fixture(&cmd_table(&builder, spec, 12, TableFormat::Csv, false).unwrap());
        assert_eq!(generated.len(), 12);
        for x in 0..12 {
            assert_eq!(generated[x].len(), 12);
            for y in 0..12 {
                cells += 1;
                if generated[x][y] != expected[x][y] {
                    mismatches += 1;
                }
            }
        }
    }
    Verdict {
        mismatches,
        detail: format!("{cells} cells"),
    }
}

fn main_theorem(c: Convention) -> Verdict {
    let engine = Engine::new(26).unwrap();
    let mut solver = Solver::new(GoishiGraph::new(25));
    let mut mismatches = 0;
    let mut positions = 0;
    for x in 0..=25 {
        for y in 0..=25 {
            for z in 0..=25 {
                let g = Position::new(x, y, z);
                positions += 1;
                if engine.outcome(g, c).unwrap() != solver.solve(g, c).unwrap() {
                    mismatches += 1;
                }
            }
        }
    }
    Verdict {
        mismatches,
        detail: format!("{positions} positions"),
    }
}

fn closed_forms() -> Verdict {
    let gm1 = build_table(SeedSpec::GM1, 301).unwrap();
    let star = build_table(SeedSpec::GM1Star, 301).unwrap();
    let mut mismatches = 0;
    for x in 0..=300 {
        for y in 0..=300 {
            let a = gm1.value(x, y).unwrap();
            let b = star.value(x, y).unwrap();
            for k in 0..=3u8 {
                mismatches += usize::from(in_a(k, x, y) != (a == k as i32));
                mismatches += usize::from(in_b(k, x, y) != (b == k as i32));
            }
        }
    }
    Verdict {
        mismatches,
        detail: "301x301 cells, k = 0..3, A and B".into(),
    }
}

fn block_symmetry() -> Verdict {
    let star = build_table(SeedSpec::GM1Star, 502).unwrap();
    let mismatches = block_symmetry_mismatches(&star, 250).unwrap().len();
    Verdict {
        mismatches,
        detail: "n, m <= 250".into(),
    }
}

fn g0_law() -> Verdict {
    let g0 = build_table(SeedSpec::G0, 512).unwrap();
    let g1 = build_table(SeedSpec::G1, 512).unwrap();
    let mut mismatches = 0;
    let mut differing = Vec::new();
    for x in 0..512 {
        for y in 0..512 {
            let v0 = g0.value(x, y).unwrap();
            if v0 != (x ^ y) as i32 {
                mismatches += 1;
            }
            if g1.value(x, y).unwrap() != v0 {
                differing.push((x, y));
            }
        }
    }
    if differing != [(0, 0), (0, 1), (1, 0), (1, 1)] {
        mismatches += 1;
    }
    Verdict {
        mismatches,
        detail: format!("G1 differs from G0 at {differing:?}"),
    }
}

fn forbidden_moves() -> Verdict {
    let gm1 = build_table(SeedSpec::GM1, 61).unwrap();
    let star = build_table(SeedSpec::GM1Star, 61).unwrap();
    let mut misere = Solver::new(forbidden_nim_graph(&[(0, 0)], 60));
    let mut starred = Solver::new(forbidden_nim_graph(&[(0, 1), (1, 0)], 60));
    let mut mismatches = 0;
    for x in 0..=60 {
        for y in 0..=60 {
            if (x, y) != (0, 0) && misere.grundy([x, y]).unwrap() as i32 != gm1.value(x, y).unwrap() {
                mismatches += 1;
            }
            if !matches!((x, y), (0, 1) | (1, 0))
                && starred.grundy([x, y]).unwrap() as i32 != star.value(x, y).unwrap()
            {
                mismatches += 1;
            }
        }
    }
    Verdict {
        mismatches,
        detail: "x, y <= 60".into(),
    }
}

fn misere_nim() -> Verdict {
    let gm1 = build_table(SeedSpec::GM1, 41).unwrap();
    let mut plain = Solver::new(NimGraph::<2>::new(40));
    let mut mismatches = 0;
    for x in 0..=40 {
        for y in 0..=40 {
            let is_p = plain.solve([x, y], Convention::Misere).unwrap() == Outcome::P;
            mismatches += usize::from(is_p != (gm1.value(x, y).unwrap() == 0));
        }
    }
    Verdict {
        mismatches,
        detail: "x, y <= 40".into(),
    }
}

/// The engine moves first from an N-position; the adversary picks uniformly
/// among legal moves. Returns whether the engine met its winning condition.
fn play(engine: &Engine, start: Position, c: Convention, rng: &mut ChaCha8Rng) -> bool {
    let mut g = start;
    let mut engine_to_move = true;
    let mut engine_moved_last = false;
    while !g.is_terminal() {
        let m = if engine_to_move {
            engine.engine_move(g, c).unwrap().unwrap()
        } else {
            *moves(g).choose(rng).unwrap()
        };
        g = m.to;
        engine_moved_last = engine_to_move;
        engine_to_move = !engine_to_move;
    }
    match c {
        Convention::Normal => engine_moved_last,
        Convention::Misere => !engine_moved_last,
    }
}

fn engine_never_loses() -> Verdict {
    let engine = Engine::new(26).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6015_4111);
    let mut games = 0;
    let mut losses = 0;
    while games < 500 {
        let c = Convention::BOTH[games % 2];
        let g = Position::new(rng.gen_range(0..=25), rng.gen_range(0..=25), rng.gen_range(0..=25));
        if engine.outcome(g, c).unwrap() != Outcome::N || g.is_terminal() {
            continue;
        }
        games += 1;
        if !play(&engine, g, c, &mut rng) {
            losses += 1;
        }
    }
    Verdict {
        mismatches: losses,
        detail: format!("{games} games, {losses} lost"),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("table reproduction (hand-transcribed 12x12 fixtures)", Some(Duration::from_secs(1)), table_reproduction),
        ("normal-play outcome theorem, x,y,z <= 25", Some(Duration::from_secs(30)), || {
            main_theorem(Convention::Normal)
        }),
        ("misere-play outcome theorem, x,y,z <= 25", Some(Duration::from_secs(30)), || {
            main_theorem(Convention::Misere)
        }),
        ("closed forms A0-A3 and B0-B3, x,y <= 300", Some(Duration::from_secs(10)), closed_forms),
        ("block symmetry of GM1STAR, n,m <= 250", None, block_symmetry),
        ("G0 = x XOR y below 512; G1 swap cells", None, g0_law),
        ("forbidden-move Grundy values, x,y <= 60", None, forbidden_moves),
        ("misere two-pile nim P-positions, x,y <= 40", None, misere_nim),
        ("engine never loses, 500 random games", None, engine_never_loses),
    ];

    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let ok = verdict.mismatches == 0 && in_time;
        if !ok {
            failed += 1;
        }
        let limit = limit.map_or(String::new(), |l| format!(" / limit {:.0?}", l));
        println!(
            "[{}] {name}: {} mismatches, {} ({:.2?}{limit})",
            if ok { "PASS" } else { "FAIL" },
            verdict.mismatches,
            verdict.detail,
            elapsed,
        );
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
