//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
//!
//! `cargo test -p lyndon-cli --test acceptance`

use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use lyndon_core::lyndon::{
    enumerate_lyndon_words, first_lyndon_factor, first_lyndon_factor_by_remainder, is_lyndon_by,
    is_lyndon_prefix_omega, last_lyndon_factor, lyndon_factorization, suffix_omega_conditions, LyndonDefinition,
};
use lyndon_core::omega::{
    bergman_chain, fine_wilf_bound, omega_cmp, omega_mismatch_position, six_conditions, OmegaOutcome,
};
use lyndon_core::oracle::{
    all_words, is_lyndon_naive, left_lyndon_tree_naive, lyndon_factorization_naive, omega_cmp_naive,
};
use lyndon_core::pstd::{left_cartesian_tree, left_cartesian_tree_via_prefixes, prefix_standard_permutation};
use lyndon_core::tree::{left_foliage, left_lyndon_tree};
use lyndon_core::{NodeAddress, OrderedAlphabet, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn alphabet(symbols: &str) -> Arc<OrderedAlphabet> {
    OrderedAlphabet::new(symbols).unwrap()
}

fn word(text: &str) -> Word {
    alphabet("abc").word(text).unwrap()
}

fn digits(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect()
}

struct Cli {
    code: Option<i32>,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Cli {
    let out = Command::new(env!("CARGO_BIN_EXE_lyndon"))
        .args(args)
        .output()
        .expect("run lyndon");
    Cli {
        code: out.status.code(),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn pstd_golden() -> Outcome {
    let p = prefix_standard_permutation(&word("aabaacab")).map_err(|e| e.to_string())?;
    ensure(digits(&p.sigma) == "21543768", || {
        format!("library gives {}", digits(&p.sigma))
    })?;
    let out = cli(&["pstd", "aabaacab"]);
    let first = out.stdout.lines().next().unwrap_or_default().to_string();
    ensure(out.code == Some(0) && first == "21543768", || {
        format!("CLI printed {first:?}, exit {:?}", out.code)
    })?;
    Ok("pstd(aabaacab) = 21543768".into())
}

fn left_tree_golden() -> Outcome {
    let w = word("aabaacab");
    let lyndon = left_lyndon_tree(&w).map_err(|e| e.to_string())?;
    let cartesian = left_cartesian_tree(&w).map_err(|e| e.to_string())?;
    let expected = "(((a,(a,b)),(a,(a,c))),(a,b))";
    ensure(lyndon.to_string() == expected, || {
        format!("left Lyndon tree is {lyndon}")
    })?;
    ensure(cartesian == lyndon, || format!("left Cartesian tree is {cartesian}"))?;
    Ok(format!("lst(aabaacab) = T_L(aabaacab) = {expected}"))
}

fn left_foliage_golden() -> Outcome {
    let w = word("aabaacab");
    let t = left_lyndon_tree(&w).map_err(|e| e.to_string())?;
    let expected = [
        (".", "aabaac"),
        ("L", "aab"),
        ("LL", "a"),
        ("LLR", "aa"),
        ("LR", "aaba"),
        ("LRR", "aabaa"),
        ("R", "aabaaca"),
    ];
    let nodes = t.internal_nodes();
    ensure(nodes.len() == expected.len(), || {
        format!("{} internal nodes", nodes.len())
    })?;
    for (address, label) in expected {
        let x: NodeAddress = address.parse().map_err(|e: lyndon_core::Error| e.to_string())?;
        ensure(nodes.contains(&x), || format!("{address} is not an internal node"))?;
        let g = left_foliage(&t, &x).map_err(|e| e.to_string())?;
        ensure(g.to_string() == label, || {
            format!("g({address}) = {g}, expected {label}")
        })?;
    }
    Ok("all 7 internal-node labels placed as expected".into())
}

fn fine_wilf_golden() -> Outcome {
    let (u, v) = (word("abaab"), word("abaababa"));
    let c = omega_cmp(&u, &v).map_err(|e| e.to_string())?;
    let position = omega_mismatch_position(&u, &v).map_err(|e| e.to_string())?;
    let bound = fine_wilf_bound(u.len(), v.len());
    ensure(bound == 12, || format!("bound is {bound}"))?;
    ensure(position == Some(12), || format!("mismatch position {position:?}"))?;
    ensure(c.outcome() == OmegaOutcome::Greater, || {
        format!("outcome {:?}", c.outcome())
    })?;
    let naive = omega_cmp_naive(&u, &v).map_err(|e| e.to_string())?;
    ensure(naive == c, || format!("naive oracle gives {naive:?}"))?;
    Ok("abaab >ω abaababa at 12 = 5 + 8 - gcd(5, 8)".into())
}

fn factorization_golden() -> Outcome {
    let w = word("ababaab");
    let f = lyndon_factorization(&w).map_err(|e| e.to_string())?;
    ensure(f.to_string() == "(ab)(ab)(aab)", || format!("factorization {f}"))?;
    let first = first_lyndon_factor(&w).map_err(|e| e.to_string())?;
    let last = last_lyndon_factor(&w).map_err(|e| e.to_string())?;
    ensure(first.to_string() == "ab", || format!("first factor {first}"))?;
    ensure(last.to_string() == "aab", || format!("last factor {last}"))?;
    let chain: Vec<Word> = ["aab", "abaab", "ababaab", "ab", "baab", "babaab", "b"]
        .iter()
        .map(|s| word(s))
        .collect();
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            let c = omega_cmp(&chain[i], &chain[j]).map_err(|e| e.to_string())?;
            ensure(c.is_less(), || format!("{}^ω < {}^ω fails ({c:?})", chain[i], chain[j]))?;
        }
    }
    Ok("(ab)(ab)(aab), first ab, last aab, 21 chain pairs ordered".into())
}

fn main_theorem_sweep() -> Outcome {
    let mut visited = 0;
    for (symbols, max_len) in [("ab", 14), ("abc", 8)] {
        for w in enumerate_lyndon_words(&alphabet(symbols), max_len) {
            visited += 1;
            let lst = left_lyndon_tree(&w).map_err(|e| format!("{w}: {e}"))?;
            let cartesian = left_cartesian_tree(&w).map_err(|e| format!("{w}: {e}"))?;
            let via_prefixes = left_cartesian_tree_via_prefixes(&w).map_err(|e| format!("{w}: {e}"))?;
            let naive = left_lyndon_tree_naive(&w).map_err(|e| format!("{w}: {e}"))?;
            ensure(lst == cartesian && lst == via_prefixes && lst == naive, || {
                format!("{w}: lst {lst}, T_L {cartesian}, via prefixes {via_prefixes}, naive {naive}")
            })?;
        }
    }
    Ok(format!("{visited} Lyndon words, zero mismatches"))
}

fn characterization_sweep() -> Outcome {
    let ab = alphabet("ab");
    let mut visited = 0;
    for w in all_words(&ab, 12) {
        visited += 1;
        let err = |e: lyndon_core::Error| format!("{w}: {e}");
        let expected = is_lyndon_naive(w.letters());
        for definition in LyndonDefinition::ALL {
            let got = is_lyndon_by(&w, definition).map_err(err)?;
            ensure(got == expected, || {
                format!("{w}: {definition:?} gives {got}, rotations give {expected}")
            })?;
        }
        let (first_suffix, second_suffix) = suffix_omega_conditions(&w).map_err(err)?;
        ensure(first_suffix == expected && second_suffix == expected, || {
            format!("{w}: suffix conditions ({first_suffix}, {second_suffix}), expected {expected}")
        })?;
        let prefix = is_lyndon_prefix_omega(&w).map_err(err)?;
        ensure(prefix == expected, || {
            format!("{w}: prefix condition {prefix}, expected {expected}")
        })?;

        let duval = lyndon_factorization(&w).map_err(err)?;
        let naive = lyndon_factorization_naive(&w).map_err(err)?;
        ensure(duval == naive, || format!("{w}: Duval {duval}, exhaustive {naive}"))?;
        let first = first_lyndon_factor(&w).map_err(err)?;
        let by_remainder = first_lyndon_factor_by_remainder(&w).map_err(err)?;
        let last = last_lyndon_factor(&w).map_err(err)?;
        ensure(&first == naive.first() && &by_remainder == naive.first(), || {
            format!(
                "{w}: first factor scans give {first} and {by_remainder}, expected {}",
                naive.first()
            )
        })?;
        ensure(&last == naive.last(), || {
            format!("{w}: suffix scan gives {last}, expected {}", naive.last())
        })?;
    }
    Ok(format!("{visited} binary words, zero failures"))
}

fn omega_sweep() -> Outcome {
    let words: Vec<Word> = all_words(&alphabet("ab"), 8).collect();
    let mut pairs = 0;
    for u in &words {
        for v in &words {
            pairs += 1;
            let err = |e: lyndon_core::Error| format!("({u}, {v}): {e}");
            let fast = omega_cmp(u, v).map_err(err)?;
            let naive = omega_cmp_naive(u, v).map_err(err)?;
            ensure(fast == naive, || format!("({u}, {v}): {fast:?} vs naive {naive:?}"))?;
            if let Some(p) = fast.mismatch_position() {
                let bound = fine_wilf_bound(u.len(), v.len());
                ensure(p <= bound, || {
                    format!("({u}, {v}): mismatch at {p} beyond bound {bound}")
                })?;
                let six = six_conditions(u, v).map_err(err)?;
                ensure(six.all_equal(), || {
                    format!("({u}, {v}): six conditions {:?}", six.as_array())
                })?;
            }
            if fast.is_less() {
                ensure(bergman_chain(u, v).map_err(err)?, || {
                    format!("({u}, {v}): Bergman chain fails")
                })?;
            }
        }
    }
    Ok(format!("{pairs} pairs, zero failures"))
}

fn enumeration_counts() -> Outcome {
    let ab = alphabet("ab");
    let expected = [2, 1, 2, 3, 6, 9, 18, 30, 56, 99];
    let mut filtered = [0usize; 10];
    for w in all_words(&ab, 10) {
        if is_lyndon_naive(w.letters()) {
            filtered[w.len() - 1] += 1;
        }
    }
    let mut enumerated = [0usize; 10];
    for w in enumerate_lyndon_words(&ab, 10) {
        enumerated[w.len() - 1] += 1;
    }
    ensure(filtered == expected, || {
        format!("brute-force filter gives {filtered:?}")
    })?;
    ensure(enumerated == expected, || format!("enumeration gives {enumerated:?}"))?;
    Ok("2,1,2,3,6,9,18,30,56,99".into())
}

fn cli_contract() -> Outcome {
    let golden: [(&[&str], &str); 6] = [
        (&["pstd", "aabaacab"], "21543768\ninverse: 21543768\n"),
        (
            &["tree", "aabaacab", "--kind", "left"],
            "(((a,(a,b)),(a,(a,c))),(a,b))\nleft Lyndon tree and left Cartesian tree: equal\n",
        ),
        (
            &["tree", "aabaacab", "--kind", "cartesian"],
            "(((a,(a,b)),(a,(a,c))),(a,b))\nleft Lyndon tree and left Cartesian tree: equal\n",
        ),
        (&["compare", "abaab", "abaababa"], "abaab >ω abaababa, mismatch at 12\n"),
        (&["factorize", "ababaab"], "(ab)(ab)(aab)\nfirst: ab\nlast: aab\n"),
        (&["compare", "aab", "abaab"], "aab <ω abaab, mismatch at 2\n"),
    ];
    for (args, expected) in golden {
        let out = cli(args);
        ensure(out.code == Some(0) && out.stdout == expected, || {
            format!("{args:?}: exit {:?}, stdout {:?}", out.code, out.stdout)
        })?;
    }

    let dot = cli(&["--format", "dot", "tree", "aabaacab", "--kind", "left"]);
    let labels: Vec<&str> = dot
        .stdout
        .lines()
        .filter(|l| l.contains("[label=") && !l.contains("plaintext"))
        .filter_map(|l| l.split('"').nth(1))
        .collect();
    ensure(
        dot.code == Some(0) && labels == ["aabaac", "aab", "a", "aa", "aaba", "aabaa", "aabaaca"],
        || format!("DOT internal labels {labels:?}"),
    )?;

    let verify = cli(&["verify", "--alphabet", "ab", "--max-len", "10"]);
    ensure(
        verify.code == Some(0)
            && verify
                .stdout
                .contains("lyndon words per length: 2,1,2,3,6,9,18,30,56,99\n")
            && verify.stdout.ends_with("all checks pass; 226 Lyndon words visited\n"),
        || format!("verify: exit {:?}, stdout {:?}", verify.code, verify.stdout),
    )?;

    let failure = cli(&["verify", "--max-len", "5", "--expect-counts", "2,1,2,3,7"]);
    ensure(failure.code == Some(1), || {
        format!("verification failure fixture exits {:?}", failure.code)
    })?;

    let not_lyndon = cli(&["tree", "ba", "--kind", "left"]);
    ensure(
        not_lyndon.code == Some(2) && not_lyndon.stderr.contains("not Lyndon: split b|a has u ≥ v"),
        || format!("tree ba: exit {:?}, stderr {:?}", not_lyndon.code, not_lyndon.stderr),
    )?;
    for args in [
        &["pstd", "abx", "--alphabet", "ab"][..],
        &["compare", "ab"],
        &["--format", "dot", "pstd", "ab"],
    ] {
        let out = cli(args);
        ensure(out.code == Some(2), || format!("{args:?} exits {:?}", out.code))?;
    }
    Ok("golden outputs byte-exact; exit codes 0/1/2 as specified".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("pstd golden example", pstd_golden),
        ("left Lyndon tree golden example", left_tree_golden),
        ("left foliage labels", left_foliage_golden),
        ("Fine-Wilf tightness", fine_wilf_golden),
        ("factorization golden example", factorization_golden),
        ("main theorem sweep", main_theorem_sweep),
        ("characterization sweep", characterization_sweep),
        ("ω-order sweep", omega_sweep),
        ("enumeration counts", enumeration_counts),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria pass", criteria.len());
}
