//! Acceptance criteria 1-10, each checked against oracles written here
//! rather than against the library's own helpers. One line per criterion.
//!
//! Criterion 6 is known not to hold: some members of A_p(r) have two lifts
//! that both raise the descent count. The run fails only if the set of
//! failing criteria differs from that.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use cellsym::exceptional;
use cellsym::f2_lattice::{
    all_subspaces, covering_check, printed_arrows, printed_catalog, validate_catalog,
    CatalogAnomaly,
};
use cellsym::graphs::{check_solution, solve_left_cell_counts, validate_graph};
use cellsym::lifting::{enumerate_ap_r, lift_pair, lift_pair_r0};
use cellsym::symbols_b::{enumerate_sym, family_with_key, partition_families};
use cellsym::symbols_d::{enumerate_sym_d, family_with_key_d, iota, partition_families_d};
use cellsym::tableaux::{catalan, catalan_big, enumerate_apas_via_tableaux};
use cellsym::{CellGraph, DKind, Limits};
use num_rational::Rational64;

const KNOWN_FAILING: [u32; 1] = [6];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- oracles -------------------------------------------------------------

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

fn binom(n: u32, k: u32) -> u128 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn cat(t: u32) -> u128 {
    factorial(2 * t) / (factorial(t) * factorial(t + 1))
}

fn partitions(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    p
}

fn bipartitions(n: usize) -> u64 {
    let p = partitions(n);
    (0..=n).map(|k| p[k] * p[n - k]).sum()
}

/// Row rules plus "0 at most once" and "nothing three times", checked from
/// scratch on a raw sequence.
fn rows_ok(e: &[u32]) -> bool {
    let odd: Vec<u32> = e.iter().step_by(2).copied().collect();
    let even: Vec<u32> = e.iter().skip(1).step_by(2).copied().collect();
    let inc = |r: &[u32]| r.windows(2).all(|w| w[0] < w[1]);
    inc(&odd) && inc(&even) && e.iter().filter(|&&a| a == 0).count() <= 1
}

fn counts(e: &[u32]) -> BTreeMap<u32, usize> {
    let mut c = BTreeMap::new();
    for &a in e {
        *c.entry(a).or_insert(0) += 1;
    }
    c
}

/// Once-occurring entries of each row, odd row first, interleaved.
fn oracle_singles(e: &[u32]) -> Vec<u32> {
    let c = counts(e);
    let once = |a: &u32| c[a] == 1;
    let odd: Vec<u32> = e.iter().step_by(2).filter(|a| once(a)).copied().collect();
    let even: Vec<u32> = e
        .iter()
        .skip(1)
        .step_by(2)
        .filter(|a| once(a))
        .copied()
        .collect();
    let mut out = Vec::new();
    for i in 0..odd.len().max(even.len()) {
        out.extend(odd.get(i));
        out.extend(even.get(i));
    }
    out
}

fn oracle_descents(e: &[u32]) -> Vec<usize> {
    oracle_singles(e)
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(j, _)| j + 1)
        .collect()
}

/// All type-B symbols of rank n by depth-first search over raw sequences.
fn brute_sym_b(n: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for m in 0..=n {
        let target = n + m * m;
        let len = (2 * m + 1) as usize;
        let mut cur = Vec::with_capacity(len);
        extend(&mut cur, len, target, &mut |e| {
            if rows_ok(e) && counts(e).values().all(|&k| k <= 2) {
                out.insert(e.to_vec());
            }
        });
    }
    out
}

fn extend(cur: &mut Vec<u32>, len: usize, target: u32, emit: &mut dyn FnMut(&[u32])) {
    let used: u32 = cur.iter().sum();
    if cur.len() == len {
        if used == target {
            emit(cur);
        }
        return;
    }
    if cur.len() >= 2 {
        // same-row predecessor must be smaller
        let prev = cur[cur.len() - 2];
        for a in prev + 1..=target - used {
            cur.push(a);
            extend(cur, len, target, emit);
            cur.pop();
        }
    } else {
        for a in 0..=target - used {
            cur.push(a);
            extend(cur, len, target, emit);
            cur.pop();
        }
    }
}

/// Type-D symbols of rank n by the same search; (prime, doubleprime).
fn brute_sym_d(n: u32) -> (BTreeSet<Vec<u32>>, BTreeSet<Vec<u32>>) {
    let mut prime = BTreeSet::new();
    let mut dprime = BTreeSet::new();
    for m in 1..=n + 1 {
        let Some(target) = (n + m * m).checked_sub(m) else {
            continue;
        };
        let len = (2 * m) as usize;
        let mut cur = Vec::new();
        extend(&mut cur, len, target, &mut |e| {
            if !rows_ok(e) || !counts(e).values().all(|&k| k <= 2) {
                return;
            }
            let c = counts(e);
            let largest = e.iter().filter(|a| c[a] == 1).max().copied();
            match largest {
                None => {
                    dprime.insert(e.to_vec());
                }
                Some(v) => {
                    let pos = e.iter().position(|&a| a == v).unwrap();
                    if pos % 2 == 1 {
                        prime.insert(e.to_vec());
                    }
                }
            }
        });
    }
    (prime, dprime)
}

fn texts<T: ToString>(v: impl IntoIterator<Item = T>) -> BTreeSet<String> {
    v.into_iter().map(|s| s.to_string()).collect()
}

fn strs(v: &[&str]) -> BTreeSet<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn fmt(e: &[u32]) -> String {
    let parts: Vec<String> = e.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

// ---- criteria ------------------------------------------------------------

fn criterion_1() -> Outcome {
    let l = Limits::default();
    let b = |n| texts(enumerate_sym(n, &l).unwrap());
    let d = |n, k| texts(enumerate_sym_d(n, k, &l).unwrap());
    ensure(b(1) == strs(&["(1)", "(0,1,1)"]), || {
        format!("Sym_1 = {:?}", b(1))
    })?;
    ensure(
        b(2) == strs(&["(2)", "(0,1,2)", "(1,0,2)", "(0,2,1)", "(0,1,1,2,2)"]),
        || format!("Sym_2 = {:?}", b(2)),
    )?;
    ensure(d(2, DKind::Prime) == strs(&["(0,2)", "(0,1,1,2)"]), || {
        "Sym'_2".into()
    })?;
    ensure(
        d(3, DKind::Prime) == strs(&["(0,3)", "(1,2)", "(0,1,1,3)", "(0,1,2,2)", "(0,1,1,2,2,3)"]),
        || format!("Sym'_3 = {:?}", d(3, DKind::Prime)),
    )?;
    ensure(d(2, DKind::DoublePrime) == strs(&["(1,1)"]), || {
        "Sym''_2".into()
    })?;
    for n in 1..=6 {
        let brute = texts(brute_sym_b(n).iter().map(|e| fmt(e)));
        ensure(b(n) == brute, || {
            format!("Sym_{n} differs from brute force")
        })?;
    }
    for n in 2..=6 {
        let (p, dp) = brute_sym_d(n);
        ensure(
            d(n, DKind::Prime) == texts(p.iter().map(|e| fmt(e))),
            || format!("Sym'_{n} brute"),
        )?;
        ensure(
            d(n, DKind::DoublePrime) == texts(dp.iter().map(|e| fmt(e))),
            || format!("Sym''_{n} brute"),
        )?;
    }
    let part = partitions(10);
    for n in 1..=10u32 {
        let nb = enumerate_sym(n, &l).unwrap().len() as u64;
        ensure(nb == bipartitions(n as usize), || {
            format!("|Sym_{n}| = {nb}")
        })?;
        if n >= 2 {
            let nd = (enumerate_sym_d(n, DKind::Prime, &l).unwrap().len()
                + enumerate_sym_d(n, DKind::DoublePrime, &l).unwrap().len())
                as u64;
            let extra = if n % 2 == 0 { part[n as usize / 2] } else { 0 };
            ensure(nd == (bipartitions(n as usize) + extra) / 2, || {
                format!("|Sym'_{n}|+|Sym''_{n}| = {nd}")
            })?;
        }
    }
    Ok("printed sets match; brute force n<=6; counts n<=10".into())
}

fn criterion_2() -> Outcome {
    let l = Limits::default();
    let mut got = Vec::new();
    for p in 1..=5u32 {
        let key: Vec<u32> = (0..=2 * p).collect();
        let fam = family_with_key(&key, &l).unwrap().ok_or("missing A_p")?;
        let members = fam.members.len() as u128;
        let oracle_as = fam
            .members
            .iter()
            .filter(|s| {
                // entries are distinct, so S is the plain descent set
                s.entries().windows(2).filter(|w| w[0] > w[1]).count() == p as usize
            })
            .count() as u128;
        ensure(members == binom(2 * p + 1, p), || {
            format!("|A_{p}| = {members}")
        })?;
        ensure(fam.antispecial.len() as u128 == cat(p + 1), || {
            format!("A_{p} antispecial {}", fam.antispecial.len())
        })?;
        ensure(oracle_as == cat(p + 1), || {
            format!("oracle antispecial A_{p}: {oracle_as}")
        })?;
        got.push(format!("{members}/{}", fam.antispecial.len()));
    }
    Ok(format!("members/antispecial {}", got.join(" ")))
}

fn criterion_3() -> Outcome {
    let l = Limits::default();
    for p in 0..=5u32 {
        let via_tableaux = texts(enumerate_apas_via_tableaux(p, &l).map_err(|e| e.to_string())?);
        let key: Vec<u32> = (0..=2 * p).collect();
        let fam = family_with_key(&key, &l).unwrap().ok_or("missing A_p")?;
        let oracle = texts(
            fam.members
                .iter()
                .filter(|s| s.entries().windows(2).filter(|w| w[0] > w[1]).count() == p as usize),
        );
        ensure(via_tableaux == oracle, || {
            format!("p={p}: tableaux set differs")
        })?;
        ensure(texts(&fam.antispecial) == oracle, || {
            format!("p={p}: library antispecial differs")
        })?;
    }
    for p in 0..=10u32 {
        let lhs = cat(p + 1);
        let rhs: u128 = (0..=p).map(|t| cat(t) * cat(p - t)).sum();
        ensure(lhs == rhs, || format!("Segner p={p}"))?;
        let generic: u64 = catalan(p + 1).map_err(|e| e.to_string())?;
        ensure(generic as u128 == lhs, || {
            format!("catalan::<u64>({})", p + 1)
        })?;
        ensure(catalan_big(p + 1).to_string() == lhs.to_string(), || {
            "catalan_big".into()
        })?;
    }
    Ok("tableaux = antispecial for p<=5; Segner p<=10".into())
}

fn criterion_4() -> Outcome {
    let l = Limits::default();
    let mut checked = 0;
    for n in 1..=10u32 {
        for fam in partition_families(n, &l).map_err(|e| e.to_string())? {
            let mut specials = 0;
            for s in &fam.members {
                checked += 1;
                let e = s.entries();
                let d = oracle_descents(e);
                let p = (oracle_singles(e).len() - 1) / 2;
                ensure(d.len() <= p, || format!("{s}: |S| > p"))?;
                let nondecreasing = e.windows(2).all(|w| w[0] <= w[1]);
                ensure(d.is_empty() == nondecreasing, || {
                    format!("{s}: special test disagrees")
                })?;
                ensure(s.descent_data().descent_set == d, || {
                    format!("{s}: library S differs")
                })?;
                specials += d.is_empty() as usize;
            }
            ensure(specials == 1, || {
                format!("Sym_{n} family {:?}: {specials} specials", fam.key)
            })?;
        }
        if n < 2 {
            continue;
        }
        for fam in partition_families_d(n, &l).map_err(|e| e.to_string())? {
            let mut specials = 0;
            for s in &fam.members {
                checked += 1;
                let e = s.entries();
                let d = oracle_descents(e);
                let two_p = oracle_singles(e).len();
                ensure(!d.contains(&(two_p - 1)), || format!("{s}: 2p-1 in S"))?;
                ensure(d.len() < two_p / 2, || format!("{s}: |S| > p-1"))?;
                specials += d.is_empty() as usize;
            }
            ensure(specials == 1, || {
                format!("Sym'_{n} family {:?}: {specials} specials", fam.key)
            })?;
        }
    }
    Ok(format!("{checked} symbols, zero violations"))
}

fn criterion_5() -> Outcome {
    let l = Limits::default();
    for p in 1..=4usize {
        let bkey: Vec<u32> = (0..=2 * p as u32 - 2).collect();
        let dkey: Vec<u32> = (0..=2 * p as u32 - 1).collect();
        let bfam = family_with_key(&bkey, &l)
            .unwrap()
            .ok_or("missing B family")?;
        let dfam = family_with_key_d(&dkey, &l)
            .unwrap()
            .ok_or("missing D family")?;
        let mut image = BTreeSet::new();
        let mut as_image = BTreeSet::new();
        let b_as: BTreeSet<String> = texts(&bfam.antispecial);
        for s in &bfam.members {
            let t = iota(s, p).map_err(|e| e.to_string())?;
            let mut appended = s.entries().to_vec();
            appended.push(2 * p as u32 - 1);
            ensure(t.entries() == appended.as_slice(), || {
                format!("iota({s}) = {t}")
            })?;
            ensure(t.rank() as usize == p * p, || format!("rank of {t}"))?;
            ensure(
                oracle_descents(s.entries()) == oracle_descents(t.entries()),
                || format!("iota({s}) changes S"),
            )?;
            if b_as.contains(&s.to_string()) {
                as_image.insert(t.to_string());
            }
            image.insert(t.to_string());
        }
        ensure(image == texts(&dfam.members), || {
            format!("p={p}: iota not onto")
        })?;
        ensure(image.len() == bfam.members.len(), || {
            format!("p={p}: iota not injective")
        })?;
        let d_as_oracle: BTreeSet<String> = texts(
            dfam.members
                .iter()
                .filter(|s| oracle_descents(s.entries()).len() == p - 1),
        );
        ensure(as_image == d_as_oracle, || {
            format!("p={p}: antispecial images differ")
        })?;
        ensure(texts(&dfam.antispecial) == d_as_oracle, || {
            format!("p={p}: library D antispecial")
        })?;
        ensure(as_image.len() as u128 == cat(p as u32), || {
            format!("p={p}: |as| = {}", as_image.len())
        })?;
    }
    Ok("bijection, descent-preserving, antispecial counts 1,2,5,14".into())
}

fn raise(e: &[u32], r: u32, pos: usize) -> Vec<u32> {
    e.iter()
        .enumerate()
        .map(|(i, &a)| if a > r || i == pos { a + 1 } else { a })
        .collect()
}

fn criterion_6() -> Outcome {
    let l = Limits::default();
    let mut failures = Vec::new();
    for p in 1..=4u32 {
        let (mut total, mut bad) = (0, 0);
        for r in 1..2 * p {
            let mut images = BTreeSet::new();
            for s in enumerate_ap_r(p, r, &l).map_err(|e| e.to_string())? {
                total += 1;
                let e = s.entries();
                let copies: Vec<usize> = (0..e.len()).filter(|&i| e[i] == r).collect();
                let lifts = [raise(e, r, copies[0]), raise(e, r, copies[1])];
                for x in &lifts {
                    ensure(rows_ok(x), || format!("lift {} of {s} invalid", fmt(x)))?;
                    let mut sorted = x.clone();
                    sorted.sort_unstable();
                    ensure(sorted == (0..=2 * p).collect::<Vec<_>>(), || {
                        format!("{} not in A_{p}", fmt(x))
                    })?;
                    ensure(images.insert(x.clone()), || format!("{} repeated", fmt(x)))?;
                }
                let src = oracle_descents(e).len();
                let mut got = [
                    oracle_descents(&lifts[0]).len(),
                    oracle_descents(&lifts[1]).len(),
                ];
                got.sort_unstable();
                let holds = got == [src, src + 1];
                ensure(holds == lift_pair(&s, p, r).is_ok(), || {
                    format!("library disagrees at {s}")
                })?;
                bad += !holds as usize;
            }
        }
        if bad > 0 {
            failures.push(format!("p={p}: {bad}/{total} sources"));
        }
    }
    for (p, src) in [(1u32, vec![0u32]), (2, vec![1, 0, 2]), (2, vec![0, 1, 2])] {
        let s = cellsym::symbols_b::validate_b(&src).map_err(|e| e.to_string())?;
        let v = lift_pair_r0(&s, p).map_err(|e| e.to_string())?;
        let pp = (p * p) as i64;
        let cands = [&v.primed, &v.double_primed];
        let oracle_valid: Vec<bool> = cands.iter().map(|c| rows_ok(&c.entries)).collect();
        ensure(
            oracle_valid == cands.iter().map(|c| c.is_valid()).collect::<Vec<_>>(),
            || format!("r=0 verdicts for {s}"),
        )?;
        ensure(oracle_valid.iter().filter(|&&ok| !ok).count() == 1, || {
            format!("r=0 {s}: invalid count")
        })?;
        for c in cands {
            let m = ((c.entries.len() - 1) / 2) as i64;
            let rank = c.entries.iter().map(|&a| a as i64).sum::<i64>() - m * m;
            ensure(rank == pp - p as i64 + 1 && c.computed_rank == rank, || {
                format!("r=0 rank of {}", fmt(&c.entries))
            })?;
        }
        ensure(v.expected_rank == pp - p as i64, || {
            "r=0 target rank".into()
        })?;
    }
    if failures.is_empty() {
        Ok("(s, s+1) bookkeeping holds; r=0 anomalies reproduced".into())
    } else {
        Err(format!(
            "no (s, s+1) labeling, both lifts at s+1: {}; lifts valid and disjoint, r=0 anomalies reproduced",
            failures.join(", ")
        ))
    }
}

fn graph17() -> CellGraph {
    exceptional::lookup(17).unwrap().graph
}

/// Fixed-point iteration N <- dim - (sum over incoming arrows); exact after
/// at most |V| rounds on an acyclic graph.
fn jacobi(g: &CellGraph) -> Vec<i64> {
    let idx: BTreeMap<&str, usize> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.id.as_str(), i))
        .collect();
    let dims: Vec<i64> = g.vertices.iter().map(|v| v.dim.unwrap() as i64).collect();
    let mut n = vec![0i64; dims.len()];
    for _ in 0..=dims.len() {
        let mut next = dims.clone();
        for (from, to) in &g.arrows {
            next[idx[to.as_str()]] -= n[idx[from.as_str()]];
        }
        n = next;
    }
    n
}

fn criterion_7() -> Outcome {
    let g = graph17();
    let dims: Vec<u64> = g.vertices.iter().map(|v| v.dim.unwrap()).collect();
    ensure(dims == [2688, 2016, 448, 1134, 1344, 420, 168], || {
        format!("dims {dims:?}")
    })?;
    let expected = [1092i64, 1596, 70, 378, 756, 420, 168];
    let sol = solve_left_cell_counts::<i64>(&g).map_err(|e| e.to_string())?;
    ensure(sol.in_vertex_order(&g) == expected, || {
        format!("solver {:?}", sol.in_vertex_order(&g))
    })?;
    ensure(jacobi(&g) == expected, || {
        format!("oracle {:?}", jacobi(&g))
    })?;
    ensure(check_solution(&g, &sol), || "re-substitution".into())?;
    let rational = solve_left_cell_counts::<Rational64>(&g).map_err(|e| e.to_string())?;
    ensure(
        rational.in_vertex_order(&g) == expected.map(Rational64::from_integer),
        || "rational solver".into(),
    )?;
    let eleven = exceptional::lookup(11).unwrap().graph;
    ensure(jacobi(&eleven) == [1, 3, 3, 4, 1], || {
        format!("|c|=11 {:?}", jacobi(&eleven))
    })?;
    ensure(expected.iter().sum::<i64>() == 4480, || "sum".into())?;
    Ok("N = 1092,1596,70,378,756,420,168; exact re-substitution".into())
}

fn acyclic(g: &CellGraph) -> bool {
    let mut indeg: BTreeMap<&str, usize> = g.vertices.iter().map(|v| (v.id.as_str(), 0)).collect();
    for (_, to) in &g.arrows {
        *indeg.get_mut(to.as_str()).unwrap() += 1;
    }
    let mut ready: Vec<&str> = indeg
        .iter()
        .filter(|(_, &d)| d == 0)
        .map(|(v, _)| *v)
        .collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for (from, to) in &g.arrows {
            if from == v {
                let d = indeg.get_mut(to.as_str()).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.push(to);
                }
            }
        }
    }
    seen == g.vertices.len()
}

fn criterion_8() -> Outcome {
    let mut graphs: Vec<(String, CellGraph)> = exceptional::all_families()
        .into_iter()
        .map(|f| (format!("|c|={}", f.size), f.graph))
        .collect();
    for p in 1..=4 {
        let cat = validate_catalog(p).map_err(|e| e.to_string())?;
        let arrows = printed_arrows(p).unwrap_or(&[]);
        graphs.push((
            format!("bp{p}"),
            cat.cell_graph(arrows).map_err(|e| e.to_string())?,
        ));
    }
    for (name, g) in &graphs {
        ensure(validate_graph(g).is_ok(), || {
            format!("{name}: {:?}", validate_graph(g).violations)
        })?;
        ensure(acyclic(g), || format!("{name}: cycle"))?;
        let distinct: BTreeSet<_> = g.arrows.iter().collect();
        ensure(distinct.len() == g.arrows.len(), || {
            format!("{name}: repeated arrow")
        })?;
    }
    let isolated = |size| -> Vec<String> {
        let g = exceptional::lookup(size).unwrap().graph;
        g.vertices
            .iter()
            .filter(|v| !g.arrows.iter().any(|(a, b)| *a == v.id || *b == v.id))
            .map(|v| v.id.clone())
            .collect()
    };
    ensure(isolated(5) == ["S_1"], || {
        format!("|c|=5 isolated {:?}", isolated(5))
    })?;
    ensure(isolated(11) == ["S_2×S_2"], || {
        format!("|c|=11 isolated {:?}", isolated(11))
    })?;
    Ok(format!(
        "{} graphs acyclic and multiplicity-free; isolated S_1, S_2×S_2",
        graphs.len()
    ))
}

/// Span of a printed generator list as the full set of vectors; digit d is
/// the basis vector e_d, bit (d-1)/2.
fn span_set(text: &str) -> BTreeSet<u64> {
    let mut span = BTreeSet::from([0u64]);
    if text == "−" || text == "-" {
        return span;
    }
    for g in text.split(',') {
        let v = g.chars().fold(0u64, |acc, c| {
            acc ^ (1 << ((c.to_digit(10).unwrap() - 1) / 2))
        });
        let shifted: Vec<u64> = span.iter().map(|x| x ^ v).collect();
        span.extend(shifted);
    }
    span
}

fn criterion_9() -> Outcome {
    for (p, want) in [(1u32, 2usize), (2, 5), (3, 14)] {
        let texts = printed_catalog(p).map_err(|e| e.to_string())?;
        let distinct: BTreeSet<_> = texts.iter().map(|t| span_set(t)).collect();
        ensure(texts.len() == want && distinct.len() == want, || {
            format!("p={p}: {} distinct", distinct.len())
        })?;
        let cat = validate_catalog(p).map_err(|e| e.to_string())?;
        ensure(cat.anomalies.is_empty(), || {
            format!("p={p}: {:?}", cat.anomalies)
        })?;
    }
    for p in [2u32, 3] {
        let texts = printed_catalog(p).unwrap();
        let cat = validate_catalog(p).unwrap();
        let arrows = printed_arrows(p).map_err(|e| e.to_string())?;
        let verdicts = covering_check(&cat, arrows).map_err(|e| e.to_string())?;
        for ((from, to), v) in arrows.iter().zip(&verdicts) {
            let (a, b) = (span_set(from), span_set(to));
            let (small, big) = if a.is_subset(&b) { (a, b) } else { (b, a) };
            let comparable = small.is_subset(&big) && small != big;
            let between = texts.iter().any(|t| {
                let s = span_set(t);
                small.is_subset(&s) && s.is_subset(&big) && s != small && s != big
            });
            let cover = comparable && !between;
            ensure(cover, || format!("p={p}: {from} -> {to} is not a cover"))?;
            ensure(v.pass == cover, || {
                format!("p={p}: library verdict for {from} -> {to}")
            })?;
        }
    }
    let texts4 = printed_catalog(4).unwrap();
    let mut dupes = Vec::new();
    for i in 0..texts4.len() {
        for j in i + 1..texts4.len() {
            if span_set(texts4[i]) == span_set(texts4[j]) {
                dupes.push((texts4[i], texts4[j]));
            }
        }
    }
    ensure(dupes == [("1,35,7", "1,35,7")], || {
        format!("p=4 duplicates {dupes:?}")
    })?;
    let distinct4: BTreeSet<_> = texts4.iter().map(|t| span_set(t)).collect();
    ensure(distinct4.len() == 41 && cat(5) == 42, || {
        format!("p=4 distinct {}", distinct4.len())
    })?;
    let cat4 = validate_catalog(4).unwrap();
    let dup_reported = cat4
        .anomalies
        .iter()
        .filter(|a| matches!(a, CatalogAnomaly::Duplicate { text, .. } if text == "1,35,7"))
        .count();
    let count_reported = cat4.anomalies.iter().any(|a| {
        matches!(
            a,
            CatalogAnomaly::CountMismatch {
                distinct: 41,
                expected: 42
            }
        )
    });
    ensure(
        dup_reported == 1 && count_reported && cat4.anomalies.len() == 2,
        || format!("p=4 anomalies {:?}", cat4.anomalies),
    )?;
    for (p, want) in [(1u32, 2usize), (2, 5), (3, 16), (4, 67)] {
        let n = all_subspaces(p).map_err(|e| e.to_string())?.len();
        ensure(n == want, || format!("subspaces of F_2^{p}: {n}"))?;
    }
    Ok("p=1,2,3 clean (2,5,14); covers hold; p=4 duplicate ⟨1,35,7⟩ and 41 vs 42 detected".into())
}

fn criterion_10() -> Outcome {
    let table = exceptional::size_table();
    let want = [(1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (11, 5), (17, 7)];
    ensure(table == want, || format!("size table {table:?}"))?;
    let gamma = exceptional::lookup(17).unwrap().gamma.ok_or("no γ table")?;
    let targets: BTreeSet<&str> = gamma.iter().map(|(_, t)| t.as_str()).collect();
    ensure(gamma.len() == 7 && targets.len() == 7, || {
        format!("γ targets {targets:?}")
    })?;
    Ok("size table matches; 7 distinct γ targets".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failing = Vec::new();
    for (n, f) in criteria {
        match f() {
            Ok(detail) => println!("[PASS] criterion {n}: {detail}"),
            Err(detail) => {
                println!("[FAIL] criterion {n}: {detail}");
                failing.push(n);
            }
        }
    }
    if failing == KNOWN_FAILING {
        println!("failing criteria {failing:?} match the documented set");
        ExitCode::SUCCESS
    } else {
        println!("failing criteria {failing:?}, documented {KNOWN_FAILING:?}");
        ExitCode::FAILURE
    }
}
