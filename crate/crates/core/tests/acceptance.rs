//! Acceptance run: prints one `criterion N: PASS/FAIL` line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use minw_core::algebra::{centrality_constant, commutation_identities, rank_two_relations, twist_identities};
use minw_core::cuspidal::{analyse_cuspidal, fiber_w_irreducibility};
use minw_core::glrep::{branch_restriction, build_irreducible, HighestWeight};
use minw_core::rational::{fmt_q, fmt_q_list, frac, is_integer, q};
use minw_core::wstructure::{
    analyse, chain_member, chain_sequence, eta_from_action, eta_invariant, fundamental_sequence, reducibility_exponent,
    singular_vector_test, Flavor, WOperatorSet,
};
use minw_core::Q;

type Outcome = Result<String, String>;

/// Partitions of size at most `max` with at most `parts` parts, padded to `parts`.
fn partitions(parts: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.iter().cloned().chain(std::iter::repeat(0).take(slots)).collect());
        if slots == 0 {
            return;
        }
        for x in (1..=cap.min(left)).rev() {
            cur.push(x);
            go(left - x, x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, max, parts, &mut Vec::new(), &mut out);
    out
}

/// Dominant weights `lambda_bar + c` with `|lambda_bar| <= 6`, n = 2..4.
fn grid() -> Vec<HighestWeight> {
    let shifts = [q(0), frac(-1, 2), frac(1, 3), q(-2)];
    let mut out = Vec::new();
    for n in 2..=4 {
        for p in partitions(n - 1, 6) {
            for c in &shifts {
                let e: Vec<Q> = p.iter().map(|&x| q(x as i64) + c).chain(std::iter::once(c.clone())).collect();
                out.push(HighestWeight::new(e).unwrap());
            }
        }
    }
    out
}

fn weyl(l: &[Q]) -> Q {
    let n = l.len();
    let mut d = q(1);
    for i in 0..n {
        for j in i + 1..n {
            d *= (&l[i] - &l[j] + q((j - i) as i64)) / q((j - i) as i64);
        }
    }
    d
}

fn interlacing_set(l: &[Q]) -> Vec<Vec<Q>> {
    let mut out = vec![vec![]];
    for i in 0..l.len() - 1 {
        let span = (&l[i] - &l[i + 1]).to_integer();
        let span: i64 = span.try_into().unwrap();
        out = out
            .into_iter()
            .flat_map(|p: Vec<Q>| {
                (0..=span).map(move |t| {
                    let mut p = p.clone();
                    p.push(&l[i + 1] + q(t));
                    p
                })
            })
            .collect();
    }
    out.sort();
    out
}

/// Length oracle: 2 exactly when the rho-shifted extended weight is integral
/// and regular and its leading entry `-|lambda|` is neither its largest nor
/// its smallest entry.
fn expected_length(l: &[Q]) -> usize {
    let l0: Q = -l.iter().cloned().sum::<Q>();
    let shifted: Vec<Q> = l.iter().enumerate().map(|(i, x)| x - q(i as i64 + 1)).collect();
    if !is_integer(&(&l0 - &l[0])) || shifted.contains(&l0) {
        return 1;
    }
    let above = shifted.iter().filter(|s| **s > l0).count();
    if above > 0 && above < l.len() {
        2
    } else {
        1
    }
}

fn hw(v: &[i64]) -> HighestWeight {
    HighestWeight::from_ints(v).unwrap()
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for n in 2..=4 {
        let ids = twist_identities(n).map_err(|e| e.to_string())?;
        let comm = commutation_identities(n).map_err(|e| e.to_string())?;
        for id in ids.iter().chain(&comm) {
            if !id.holds() {
                return Err(format!("n = {n}: {} fails", id.id));
            }
            count += 1;
        }
    }
    for id in rank_two_relations().map_err(|e| e.to_string())? {
        if !id.holds() {
            return Err(format!("rank two: {} fails", id.id));
        }
        count += 1;
    }
    Ok(format!("{count} identities"))
}

fn criterion_2(grid: &[HighestWeight]) -> Outcome {
    for l in grid {
        let rep = build_irreducible(l).map_err(|e| e.to_string())?;
        if q(rep.dim() as i64) != weyl(l.entries()) {
            return Err(format!("{l}: dim {} vs Weyl {}", rep.dim(), fmt_q(&weyl(l.entries()))));
        }
        if !rep.bracket_violations().is_empty() {
            return Err(format!("{l}: bracket violations"));
        }
    }
    Ok(format!("{} weights", grid.len()))
}

fn criterion_3(grid: &[HighestWeight]) -> Outcome {
    for l in grid {
        let rep = build_irreducible(l).map_err(|e| e.to_string())?;
        let comps = branch_restriction(&rep);
        let mut found: Vec<Vec<Q>> = comps.iter().map(|c| c.mu.entries().to_vec()).collect();
        found.sort();
        if found != interlacing_set(l.entries()) {
            return Err(format!("{l}: highest-weight vectors differ from the interlacings"));
        }
        let total: usize = comps.iter().map(|c| c.dimension).sum();
        let predicted: Q = found.iter().map(|m| weyl(m)).sum();
        if total != rep.dim() || predicted != q(rep.dim() as i64) {
            return Err(format!("{l}: component dimensions sum to {total}, not {}", rep.dim()));
        }
    }
    Ok(format!("{} weights", grid.len()))
}

fn criterion_4(grid: &[HighestWeight]) -> Outcome {
    let (mut tested, mut corrected_ok) = (0, 0);
    let mut failures = Vec::new();
    for l in grid {
        let rep = build_irreducible(l).map_err(|e| e.to_string())?;
        let ops = WOperatorSet::build(&rep, Flavor::SigmaTau).map_err(|e| e.to_string())?;
        for s in 1..l.n() {
            let Some(k) = reducibility_exponent(l, s) else { continue };
            tested += 1;
            let r = singular_vector_test(&ops, s);
            if r.branch_holds() {
                corrected_ok += 1;
            }
            if !r.holds() {
                failures.push(format!("{l} s={s} k={k}"));
            }
        }
    }
    let summary = format!(
        "{tested} (lambda, s) pairs; e_ns^k v_lambda singular in {}; gl_(n-1)-highest-weight vector of weight \
         (lambda_1, .., s - |lambda|, .., lambda_(n-1)) singular and proper in {corrected_ok}",
        tested - failures.len()
    );
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; not singular: {}", failures.join(", ")))
    }
}

fn criterion_5(grid: &[HighestWeight]) -> Outcome {
    let mut weights: Vec<(HighestWeight, Option<usize>)> = vec![
        (HighestWeight::new(vec![frac(3, 2), frac(1, 2)]).unwrap(), Some(1)),
        (hw(&[1, -1]), Some(1)),
    ];
    for base in [vec![0, -3], vec![0, 0], vec![0, 0, 0], vec![0, 0, -2]] {
        let mu = hw(&base);
        let n = mu.n();
        for i in 0..=n {
            let member = HighestWeight::new(chain_member(&mu, i)).unwrap();
            weights.push((member, Some(if i >= 1 && i < n { 2 } else { 1 })));
        }
    }
    weights.extend(grid.iter().filter(|l| l.n() <= 3 || l.partition().iter().sum::<usize>() <= 3).map(|l| (l.clone(), None)));
    for (l, stated) in &weights {
        let oracle = expected_length(l.entries());
        if let Some(s) = stated {
            if *s != oracle {
                return Err(format!("{l}: length oracle {oracle} disagrees with the stated {s}"));
            }
        }
        let r = analyse(l).map_err(|e| e.to_string())?;
        if r.length != oracle || !r.violations.is_empty() {
            return Err(format!("{l}: length {} vs expected {oracle}; {}", r.length, r.violations.join("; ")));
        }
    }
    Ok(format!("{} weights, zero mismatches", weights.len()))
}

fn criterion_6() -> Outcome {
    for n in 2..=4 {
        let r = fundamental_sequence(n).map_err(|e| e.to_string())?;
        let expect: Vec<usize> = (0..n).map(|k| binom(n - 1, k)).collect();
        if !r.exact() || r.image_dims != expect {
            return Err(format!("n = {n}: image dims {:?}, {}", r.image_dims, r.violations.join("; ")));
        }
    }
    let mut chains = Vec::new();
    for base in [vec![0, -3], vec![0, 0, -2]] {
        let r = chain_sequence(&hw(&base)).map_err(|e| e.to_string())?;
        if !r.exact() || !r.maps.iter().all(|m| m.intertwines) {
            return Err(format!("chain from {base:?}: {}", r.violations.join("; ")));
        }
        chains.push(format!("{:?}", r.dims));
    }
    Ok(format!("fundamental complexes exact for n = 2..4; chains with dims {}", chains.join(" and ")))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_7(grid: &[HighestWeight]) -> Outcome {
    for l in grid {
        let n = l.n();
        let e = l.entries();
        let size: Q = e.iter().cloned().sum();
        let eta = &e[n - 1] * (&size - q(n as i64));
        let k = &e[n - 2] - &e[n - 1] + q(1);
        let head: Q = e[..n - 1].iter().cloned().sum();
        let t = &e[n - 2] + q(1) - &k;
        let inv = eta_invariant(l);
        let rep = build_irreducible(l).map_err(|e| e.to_string())?;
        let ops = WOperatorSet::build(&rep, Flavor::SigmaTau).map_err(|e| e.to_string())?;
        let acted = eta_from_action(&ops);
        if inv.eta != eta || acted.as_ref() != Some(&eta) || q(inv.k as i64) != k {
            return Err(format!("{l}: eta {} / action {:?} / expected {}", fmt_q(&inv.eta), acted, fmt_q(&eta)));
        }
        if eta != &t * (head - q(n as i64) + &t) || !inv.factorization_holds {
            return Err(format!("{l}: factorization fails"));
        }
    }
    Ok(format!("{} weights", grid.len()))
}

fn cuspidal_sets() -> Vec<(HighestWeight, Vec<Q>)> {
    vec![(hw(&[1, 0]), vec![frac(1, 3), frac(1, 5)]), (hw(&[1, 0, 0]), vec![frac(1, 3), frac(1, 5), frac(1, 7)])]
}

fn criterion_8() -> Outcome {
    let mut notes = Vec::new();
    for (l, mu) in cuspidal_sets() {
        let start = Instant::now();
        let r = analyse_cuspidal(&l, &mu, 3).map_err(|e| e.to_string())?;
        let secs = start.elapsed().as_secs_f64();
        if !r.relation_violations.is_empty() || !r.all_injective || !r.weight_spaces_rigid || secs > 120.0 {
            return Err(format!("{l}, mu = {}: {:?} ({secs:.1} s)", fmt_q_list(&mu), r.violations));
        }
        notes.push(format!("{l} in {secs:.2} s"));
    }
    Ok(notes.join(", "))
}

fn criterion_9() -> Outcome {
    let l = hw(&[1, 0]);
    // mu_1 - lambda_1 integral only; then |mu| + lambda_i integral only
    for mu in [vec![q(1), frac(1, 5)], vec![frac(1, 2), frac(1, 2)]] {
        let size: Q = mu.iter().cloned().sum();
        let first = mu.iter().zip(l.entries()).any(|(m, x)| is_integer(&(m - x)));
        let second = l.entries().iter().any(|x| is_integer(&(&size + x)));
        if first == second {
            return Err(format!("mu = {} does not violate exactly one condition", fmt_q_list(&mu)));
        }
        let r = analyse_cuspidal(&l, &mu, 3).map_err(|e| e.to_string())?;
        if r.criterion || r.all_injective {
            return Err(format!("mu = {}: no injectivity failure detected", fmt_q_list(&mu)));
        }
    }
    Ok("both conditions sharp".into())
}

fn criterion_10() -> Outcome {
    for (l, mu) in cuspidal_sets() {
        let r = analyse_cuspidal(&l, &mu, 3).map_err(|e| e.to_string())?;
        match &r.intertwiner {
            Some(i) if i.commutes && i.invertible => {}
            other => return Err(format!("{l}: {other:?}")),
        }
    }
    Ok("commutes on interior(2), invertible on every fiber".into())
}

fn criterion_11(grid: &[HighestWeight]) -> Outcome {
    let mut irreducible = 0;
    for l in grid.iter().filter(|l| l.n() <= 3) {
        if expected_length(l.entries()) != 1 {
            continue;
        }
        let rep = build_irreducible(l).map_err(|e| e.to_string())?;
        if !fiber_w_irreducibility(&rep).irreducible {
            return Err(format!("{l}: fiber has a proper W-stable subspace"));
        }
        irreducible += 1;
    }
    let mut reducible = 0;
    for base in [vec![0, -3], vec![0, 0], vec![0, 0, 0], vec![0, 0, -2]] {
        let mu = hw(&base);
        for i in 1..mu.n() {
            let l = HighestWeight::new(chain_member(&mu, i)).unwrap();
            let rep = build_irreducible(&l).map_err(|e| e.to_string())?;
            let f = fiber_w_irreducibility(&rep);
            if f.irreducible || f.proper_subspace_dim.is_none() {
                return Err(format!("{l}: no proper W-stable fiber subspace found"));
            }
            reducible += 1;
        }
    }
    Ok(format!("{irreducible} irreducible fibers, {reducible} chain fibers with a proper subspace"))
}

fn criterion_12() -> Outcome {
    let c = centrality_constant().map_err(|e| e.to_string())?;
    let stated = format!("stated {} central: {}", fmt_q(&c.stated), c.stated_is_central);
    match c.constant {
        Some(x) => Ok(format!("unique c = {}; {stated}", fmt_q(&x))),
        None => Err(format!("no unique c; {stated}")),
    }
}

fn main() -> ExitCode {
    let grid = grid();
    let criteria: Vec<(u32, Box<dyn Fn() -> Outcome>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(|| criterion_2(&grid))),
        (3, Box::new(|| criterion_3(&grid))),
        (4, Box::new(|| criterion_4(&grid))),
        (5, Box::new(|| criterion_5(&grid))),
        (6, Box::new(criterion_6)),
        (7, Box::new(|| criterion_7(&grid))),
        (8, Box::new(criterion_8)),
        (9, Box::new(criterion_9)),
        (10, Box::new(criterion_10)),
        (11, Box::new(|| criterion_11(&grid))),
        (12, Box::new(criterion_12)),
    ];
    let mut failed = 0;
    for (k, f) in &criteria {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(d) => println!("criterion {k}: PASS  ({secs:.2} s) {d}"),
            Err(d) => {
                failed += 1;
                println!("criterion {k}: FAIL  ({secs:.2} s) {d}");
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
