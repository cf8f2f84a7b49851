//! The release gate: seven end-to-end criteria, printed one line each.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use idealtop::format::{parse_space, print_space};
use idealtop::operators::{
    annihilator, ideal_quotient, local_function, sharp_function, tau_sharp, tau_star,
};
use idealtop::theorems::{self, Mode, SearchStatus};
use idealtop::{enumerate, reference};
use idealtop::{GroundSet, Ideal, IdealSpace, SetFamily, Subset, Topology};

fn set(ground: &Arc<GroundSet>, labels: &[&str]) -> Subset {
    ground.subset_of_indices(
        labels.iter().map(|l| ground.index_of(l).expect("label is declared")),
    )
}

fn fam(ground: &Arc<GroundSet>, sets: &[&[&str]]) -> SetFamily {
    SetFamily::new(ground.clone(), sets.iter().map(|s| set(ground, s)).collect())
}

fn expect(ok: bool, why: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

/// Three points, I = I({a}), quotients by two explicit families.
fn quotient_reproduction() -> Result<String, String> {
    let ground = GroundSet::new(["a", "b", "c"]).map_err(|e| e.to_string())?;
    let i = Ideal::generated(ground.clone(), set(&ground, &["a"]));
    let j = fam(&ground, &[&["a"], &["a", "c"]]);
    let j_bigger = fam(&ground, &[&["a"], &["a", "b"], &["a", "c"]]);
    let started = Instant::now();
    let q = ideal_quotient(&i, &j);
    let q_bigger = ideal_quotient(&i, &j_bigger);
    let elapsed = started.elapsed();
    expect(
        q.family() == &fam(&ground, &[&[], &["a"], &["b"], &["a", "b"]]),
        "(I:J) is not {{} {a} {b} {a b}}",
    )?;
    expect(q_bigger.family() == &fam(&ground, &[&[], &["a"]]), "(I:J') is not {{} {a}}")?;
    expect(elapsed < Duration::from_millis(1), &format!("took {elapsed:?}, budget 1 ms"))?;
    Ok(format!("both quotients exact in {elapsed:?}"))
}

/// The worked three-point space: annihilator, both refined topologies, and
/// the four memberships separating them from tau and from each other.
fn operator_reproduction() -> Result<String, String> {
    let ground = GroundSet::new(["a", "b", "c"]).map_err(|e| e.to_string())?;
    let tau = Topology::validate(fam(&ground, &[&[], &["a", "c"], &["a", "b", "c"]]))
        .map_err(|e| format!("{e:?}"))?;
    let ideal = Ideal::generated(ground.clone(), set(&ground, &["a", "b"]));
    let space = IdealSpace::new(tau, ideal).map_err(|e| format!("{e:?}"))?;
    let started = Instant::now();
    let ann = annihilator(space.ideal().family());
    let star = tau_star(&space);
    let sharp = tau_sharp(&space);
    let elapsed = started.elapsed();
    expect(ann.family() == &fam(&ground, &[&[], &["c"]]), "Ann(I) is not {{} {c}}")?;
    expect(
        star.family()
            == &fam(&ground, &[&[], &["c"], &["a", "c"], &["b", "c"], &["a", "b", "c"]]),
        "tau_star is wrong",
    )?;
    expect(
        sharp.family()
            == &fam(&ground, &[&[], &["a"], &["a", "b"], &["a", "c"], &["a", "b", "c"]]),
        "tau_sharp is wrong",
    )?;
    let c = set(&ground, &["c"]);
    let a = set(&ground, &["a"]);
    expect(star.is_open(c) && !space.topology().is_open(c), "{c} should separate tau_star from tau")?;
    expect(sharp.is_open(a) && !space.topology().is_open(a), "{a} should separate tau_sharp from tau")?;
    expect(star.is_open(c) && !sharp.is_open(c), "{c} should separate tau_star from tau_sharp")?;
    expect(sharp.is_open(a) && !star.is_open(a), "{a} should separate tau_sharp from tau_star")?;
    expect(elapsed < Duration::from_millis(1), &format!("took {elapsed:?}, budget 1 ms"))?;
    Ok(format!("annihilator, both topologies, and 4 separating memberships in {elapsed:?}"))
}

/// Every sound registry entry verified exhaustively at its declared bound,
/// on one worker thread, inside ten seconds.
fn theorem_suite() -> Result<String, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    let started = Instant::now();
    let mut entries = 0u32;
    let mut instances: u128 = 0;
    pool.install(|| -> Result<(), String> {
        for t in theorems::theorems() {
            if t.expected_failure {
                continue;
            }
            let outcome = theorems::run_theorem(t.id, t.declared_bound, Mode::Exhaustive, 0)
                .map_err(|e| e.to_string())?;
            match outcome.status {
                SearchStatus::Verified { instances: n } => {
                    entries += 1;
                    instances += n;
                }
                other => return Err(format!("{} at bound {}: {other:?}", t.id, t.declared_bound)),
            }
        }
        Ok(())
    })?;
    let elapsed = started.elapsed();
    expect(elapsed < Duration::from_secs(10), &format!("took {elapsed:?}, budget 10 s"))?;
    Ok(format!("{entries} entries verified over {instances} instances in {elapsed:?}, single-threaded"))
}

/// Each implication known not to reverse is refuted by a replayable
/// counterexample within ground size three.
fn counterexample_search() -> Result<String, String> {
    let pairs = [
        ("tau_star_open", "tau_open"),
        ("tau_sharp_open", "tau_open"),
        ("tau_star_open", "tau_sharp_open"),
        ("tau_sharp_open", "tau_star_open"),
        ("sharp_continuous", "continuous"),
        ("quot_antitone", "subfamily"),
        ("quot_equals_ideal", "family_contains_full"),
    ];
    for (ant, con) in pairs {
        let outcome = theorems::falsify(ant, con, 3, u64::MAX, 0).map_err(|e| e.to_string())?;
        let SearchStatus::Counterexample { document, .. } = &outcome.status else {
            return Err(format!("{ant} => {con}: expected a counterexample, got {:?}", outcome.status));
        };
        let doc = parse_space(document)
            .map_err(|d| format!("{ant} => {con}: document failed to parse: {d:?}"))?;
        let still_fails = theorems::replay_implication(ant, con, &doc).map_err(|e| e.to_string())?;
        expect(still_fails, &format!("{ant} => {con}: replayed document no longer fails"))?;
    }
    Ok(format!("{} implications refuted and replayed", pairs.len()))
}

/// Fast enumerators agree with brute-force family filters.
fn enumeration_oracles() -> Result<String, String> {
    let started = Instant::now();
    let expected_topologies = [1usize, 4, 29, 355];
    for n in 1..=4 {
        let ground = GroundSet::with_size(n).map_err(|e| e.to_string())?;
        let fast = enumerate::enumerate_topologies(&ground).len();
        let brute = reference::topologies_by_family_filter(&ground).len();
        expect(
            fast == expected_topologies[n - 1] && brute == fast,
            &format!("topologies on {n} points: fast {fast}, brute {brute}, expected {}", expected_topologies[n - 1]),
        )?;
    }
    for n in 1..=4 {
        let ground = GroundSet::with_size(n).map_err(|e| e.to_string())?;
        let fast = enumerate::enumerate_ideals(&ground).len();
        expect(fast == 1 << n, &format!("ideals on {n} points: fast {fast}, expected {}", 1 << n))?;
        if n <= 3 {
            let brute = reference::ideals_by_family_filter(&ground).len();
            expect(brute == fast, &format!("ideals on {n} points: fast {fast}, brute {brute}"))?;
        }
    }
    let elapsed = started.elapsed();
    expect(elapsed < Duration::from_secs(5), &format!("took {elapsed:?}, budget 5 s"))?;
    Ok(format!("counts 1, 4, 29, 355 and 2^n all match in {elapsed:?}"))
}

/// Production operator paths against their definitional oracles on random
/// spaces bigger than the enumeration caps.
fn random_cross_checks() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let runs = 10_000;
    for run in 0..runs {
        let n = rng.gen_range(1..=8);
        let ground = GroundSet::with_size(n).map_err(|e| e.to_string())?;
        let random_subset = |rng: &mut ChaCha8Rng| {
            ground
                .subset_from_bits(rng.gen_range(0..(1u32 << n)) as u16)
                .expect("mask is within the powerset")
        };
        let basis: Vec<Subset> =
            (0..rng.gen_range(0..=3)).map(|_| random_subset(&mut rng)).collect();
        let topology = Topology::generate(ground.clone(), &basis);
        let ideal = Ideal::generated(ground.clone(), random_subset(&mut rng));
        let space = IdealSpace::new(topology, ideal).map_err(|e| format!("{e:?}"))?;
        let a = random_subset(&mut rng);
        expect(
            sharp_function(&space, a) == reference::sharp_function_by_witness(&space, a),
            &format!("sharp routes diverge on run {run} (n = {n})"),
        )?;
        expect(
            local_function(&space, a) == reference::local_function_by_neighborhoods(&space, a),
            &format!("local routes diverge on run {run} (n = {n})"),
        )?;
    }
    Ok(format!("{runs} random spaces up to 8 points, both operator routes agree"))
}

/// Round-trip identity on a corpus of valid documents, then a parser fuzz
/// run that must only ever produce diagnostics.
fn parser_robustness() -> Result<String, String> {
    let corpus = [
        "elements: a\ntopology: {} {a}\nideal: {}\n",
        "elements: a b c\ntopology: {} {a c} {a b c}\nideal: {} {a} {b} {a b}\n",
        concat!(
            "# worked space with every directive\n",
            "elements: a b c\n",
            "topology basis: {a c}\n",
            "ideal generated: {a b}\n",
            "set A: {b c}\n",
            "set B: {}\n",
            "family J: {a} {a c}\n",
            "elements other: p q\n",
            "topology other: {} {p} {p q}\n",
            "map f -> other: a:p b:p c:q\n",
            "map g -> self: a:a b:a c:c\n",
        ),
        "elements: x y\ntopology: {} {x} {x y}\nideal: {} {y}\nfamily K: {} {x y}\n",
    ];
    for text in corpus {
        let doc = parse_space(text).map_err(|d| format!("corpus document rejected: {d:?}"))?;
        let printed = print_space(&doc);
        let reparsed =
            parse_space(&printed).map_err(|d| format!("printed form rejected: {d:?}"))?;
        expect(reparsed == doc, "print followed by parse changed the document")?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xF022);
    let pieces = [
        "elements", "topology", "ideal", "set", "family", "map", "basis:", "generated:", "self",
        "->", "{", "}", ":", "#", "{a}", "{}", "a", "b", "q", " ", "\n", "\u{fe0f}", "\t", "::",
    ];
    let inputs = 100_000;
    let mut accepted = 0u32;
    for _ in 0..inputs {
        let mut text = String::new();
        for _ in 0..rng.gen_range(0..24) {
            if rng.gen_bool(0.9) {
                text.push_str(pieces[rng.gen_range(0..pieces.len())]);
            } else {
                text.push(char::from_u32(rng.gen_range(1..0xFFFF)).unwrap_or('?'));
            }
        }
        if parse_space(&text).is_ok() {
            accepted += 1;
        }
    }
    Ok(format!("corpus round-trips; {inputs} fuzz inputs, {accepted} parsed, rest rejected, no crashes"))
}

type Criterion = fn() -> Result<String, String>;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 7] = [
        ("worked quotient example", quotient_reproduction),
        ("worked operator example", operator_reproduction),
        ("exhaustive theorem suite", theorem_suite),
        ("counterexample search", counterexample_search),
        ("enumeration oracles", enumeration_oracles),
        ("random operator cross-checks", random_cross_checks),
        ("parser robustness", parser_robustness),
    ];
    let mut failed = Vec::new();
    for (number, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", number + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", number + 1);
                failed.push(format!("{} ({name}): {why}", number + 1));
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
