use minw_core::algebra::{
    apply_sigma, centrality_constant, commutation_identities, preimage_certifies, rank_two_relations, twist_identities,
    AlgebraElement, StGenerator,
};
use minw_core::cuspidal::analyse_cuspidal;
use minw_core::glrep::{
    branch_restriction, build_irreducible, interlacings, shapovalov::weight_multiplicity, weyl_dimension, HighestWeight,
};
use minw_core::linalg::unit_vec;
use minw_core::rational::{fmt_q, fmt_q_list, frac, q};
use minw_core::wstructure::{
    analyse, chain_sequence, composition_structure, dot_orbit_class, eta_invariant, fundamental_sequence, key_lemma_check,
    reducibility_exponent, singular_vector_test, Flavor, OrbitCase, WOperatorSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Recorder, RunConfig, Status};

const RANDOM_TRIALS: usize = 4;

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n);
    for _ in 0..3 {
        let c = q(rng.gen_range(-2i64..=2));
        let mut m = AlgebraElement::scalar(n, c);
        for _ in 0..rng.gen_range(0..=2) {
            let g = AlgebraElement::generator(n, rng.gen_range(1..=n), rng.gen_range(1..=n)).expect("in range");
            m = &m * &g;
        }
        out = &out + &m;
    }
    out
}

pub(crate) fn identities(cfg: &RunConfig, rec: &mut Recorder) {
    let n = cfg.n;
    match twist_identities(n) {
        Ok(ids) => {
            for id in ids {
                rec.check(format!("identities/{}", id.id), "sigma-twist", || Recorder::pass_if(id.holds(), "exact"));
            }
        }
        Err(e) => rec.check("identities/twist", "sigma-twist", || Err(e)),
    }
    match commutation_identities(n) {
        Ok(ids) => {
            for id in ids {
                rec.check(format!("identities/{}", id.id), "commutation-table", || Recorder::pass_if(id.holds(), "exact"));
            }
        }
        Err(e) => rec.check("identities/bracket", "commutation-table", || Err(e)),
    }
    for g in StGenerator::all(n) {
        rec.check(format!("identities/preimage[{g}]"), "sigma-tau-generators", || {
            Recorder::pass_if(preimage_certifies(n, g)?, "sigma of an element of tau(W) reproduces the generator")
        });
    }
    if n == 2 {
        match rank_two_relations() {
            Ok(ids) => {
                for id in ids {
                    rec.check(format!("identities/{}", id.id), "rank-two-presentation", || {
                        Recorder::pass_if(id.holds(), "exact")
                    });
                }
            }
            Err(e) => rec.check("identities/rank-two", "rank-two-presentation", || Err(e)),
        }
        rec.check("identities/centrality", "rank-two-center", || {
            let c = centrality_constant()?;
            let detail = match &c.constant {
                Some(x) => format!(
                    "unique c = {} makes y_2 + e_11^2 + c e_11 central; stated {} is central: {}",
                    fmt_q(x),
                    fmt_q(&c.stated),
                    c.stated_is_central
                ),
                None => "no unique constant".into(),
            };
            Recorder::pass_if(c.constant.is_some(), detail)
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for t in 0..RANDOM_TRIALS {
        let (a, b, c) = (random_element(&mut rng, n), random_element(&mut rng, n), random_element(&mut rng, n));
        rec.check(format!("identities/random.associativity[{t}]"), "pbw-normal-form", || {
            Recorder::pass_if(&(&a * &b) * &c == &a * &(&b * &c), "(ab)c = a(bc)")
        });
        rec.check(format!("identities/random.sigma-multiplicative[{t}]"), "sigma-twist", || {
            let lhs = apply_sigma(&(&a * &b), false)?;
            let rhs = &apply_sigma(&a, false)? * &apply_sigma(&b, false)?;
            let back = apply_sigma(&lhs, true)?;
            Recorder::pass_if(lhs == rhs && back == &a * &b, "sigma(ab) = sigma(a) sigma(b), inverse round trip")
        });
    }
}

pub(crate) fn glrep(cfg: &RunConfig, rec: &mut Recorder) {
    let lambda = cfg.highest_weight();
    let rep = match build_irreducible(&lambda) {
        Ok(r) => r,
        Err(e) => return rec.check("glrep/build", "irreducible-module", || Err(e)),
    };
    rec.check("glrep/weyl-dimension", "irreducible-module", || {
        let w = weyl_dimension(&lambda);
        Recorder::pass_if(rep.dim() == w, format!("dim {} vs Weyl {w}", rep.dim()))
    });
    rec.check("glrep/bracket-relations", "irreducible-module", || {
        let bad = rep.bracket_violations();
        Recorder::pass_if(bad.is_empty(), format!("{} violating pairs", bad.len()))
    });
    rec.check("glrep/weight-structure", "irreducible-module", || {
        Recorder::pass_if(rep.weight_structure_ok(), "e_ii diagonal, e_ij shifts weights by e_i - e_j")
    });
    rec.check("glrep/branching", "multiplicity-free-branching", || {
        let found = branch_restriction(&rep);
        let expect = interlacings(&lambda);
        let same = found.len() == expect.len() && found.iter().zip(&expect).all(|(f, e)| &f.mu == e);
        let total: usize = found.iter().map(|c| c.dimension).sum();
        let pred: usize = expect.iter().map(|m| m.dimension()).sum();
        Recorder::pass_if(
            same && total == rep.dim() && pred == rep.dim(),
            format!("{} components, dimensions sum to {total}", found.len()),
        )
    });
    rec.check("glrep/contravariant-form", "irreducible-module", || {
        // weight multiplicities one and two simple-root steps below the top
        let n = cfg.n;
        let mut depths: Vec<Vec<usize>> = Vec::new();
        for i in 0..n - 1 {
            let mut d = vec![0; n - 1];
            d[i] = 1;
            depths.push(d.clone());
            for j in i..n - 1 {
                let mut e = d.clone();
                e[j] += 1;
                depths.push(e);
            }
        }
        let ok = depths.iter().all(|d| {
            let mut w = lambda.entries().to_vec();
            for (i, c) in d.iter().enumerate() {
                w[i] -= q(*c as i64);
                w[i + 1] += q(*c as i64);
            }
            weight_multiplicity(&lambda, d) == rep.weight_space(&w).len()
        });
        Recorder::pass_if(ok, format!("{} weight spaces compared with Gram ranks", depths.len()))
    });
    rec.check("glrep/determinant-twist", "irreducible-module", || {
        let c = frac(1, 2);
        let other = build_irreducible(&lambda.shifted(&c))?;
        let (a, b) = (rep.twisted(&c).export(), other.export());
        let same = a.weights == b.weights && a.actions == b.actions && a.highest_weight == b.highest_weight;
        Recorder::pass_if(same, "V(lambda + c) = V(lambda) twisted by c, c = 1/2")
    });
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let k = rng.gen_range(0..rep.dim());
    rec.check("glrep/random.irreducibility", "irreducible-module", || {
        let span = rep.gl_closure(&[unit_vec(rep.dim(), k)]);
        Recorder::pass_if(span.is_full(), format!("gl_n-closure of basis vector {} ({})", k, rep.labels()[k]))
    });
}

pub(crate) fn wstructure(cfg: &RunConfig, rec: &mut Recorder) {
    let n = cfg.n;
    let lambda = cfg.highest_weight();
    let rep = match build_irreducible(&lambda) {
        Ok(r) => r,
        Err(e) => return rec.check("wstructure/build", "irreducible-module", || Err(e)),
    };
    rec.check("wstructure/classification", "composition-series", || {
        let r = analyse(&lambda)?;
        let factors: Vec<String> = r.factors.iter().map(|f| format!("{}:{}", f.hw, f.dim)).collect();
        let sub = r.submodule_dim.map(|d| format!(", submodule dim {d}")).unwrap_or_default();
        let detail = format!(
            "case {}, length {} (predicted {}), eta_n = {}, k = {}{sub}, factors [{}]{}",
            r.case,
            r.length,
            r.predicted_length,
            r.eta_n,
            r.k,
            factors.join(" "),
            if r.violations.is_empty() { String::new() } else { format!("; {}", r.violations.join("; ")) }
        );
        Recorder::pass_if(r.violations.is_empty(), detail)
    });
    rec.check("wstructure/tau-flavor-length", "composition-series", || {
        let st = composition_structure(&WOperatorSet::build(&rep, Flavor::SigmaTau)?)?;
        let t = composition_structure(&WOperatorSet::build(&rep, Flavor::Tau)?)?;
        Recorder::pass_if(st.length == t.length, format!("sigma tau length {}, tau length {}", st.length, t.length))
    });
    rec.check("wstructure/eta-factorization", "finite-dimensionality", || {
        let e = eta_invariant(&lambda);
        Recorder::pass_if(e.factorization_holds, format!("eta_n = {}, k = {}", fmt_q(&e.eta), e.k))
    });
    rec.check("wstructure/dot-orbit", "central-character", || {
        let c = dot_orbit_class(&lambda)?;
        let members: Vec<String> = c.members().iter().map(|m| fmt_q_list(m.entries())).collect();
        Ok((Status::Info, format!("case {}, class {{{}}}", c.case.number(), members.join(", "))))
    });
    if let Ok(ops) = WOperatorSet::build(&rep, Flavor::SigmaTau) {
        for s in 1..n {
            if reducibility_exponent(&lambda, s).is_none() {
                continue;
            }
            let r = singular_vector_test(&ops, s);
            let k = r.k.unwrap_or(0);
            rec.check(format!("wstructure/singular[{s}]"), "singular-vector", || {
                Recorder::pass_if(
                    r.holds(),
                    format!(
                        "e_{n}{s}^{k} v_lambda: nonzero {}, killed by the positive part {}, proper {}",
                        r.nonzero, r.killed_by_positive_part, r.proper
                    ),
                )
            });
            rec.check(format!("wstructure/singular-branch[{s}]"), "singular-vector", || {
                let nu = r.nu.as_ref().map(|m| fmt_q_list(m.entries())).unwrap_or_default();
                Recorder::pass_if(r.branch_holds(), format!("gl_{}-highest-weight vector of weight {nu}", n - 1))
            });
        }
    }
    for s in 1..n {
        rec.check(format!("wstructure/key-identity[{s}]"), "key-operator-identity", || {
            let ok = (1..=3).map(|k| key_lemma_check(&rep, s, k)).collect::<minw_core::Result<Vec<bool>>>()?;
            Recorder::pass_if(ok.iter().all(|b| *b), "y_s e_ns^k v for k = 1..3")
        });
    }
    rec.check("wstructure/fundamental-sequence", "exact-sequence", || {
        let r = fundamental_sequence(n)?;
        Recorder::pass_if(r.exact(), format!("image dims {:?}{}", r.image_dims, r.violations.join("; ")))
    });
    if let Ok(c) = dot_orbit_class(&lambda) {
        if c.case == OrbitCase::Chain && c.position == Some(0) {
            rec.check("wstructure/chain-sequence", "exact-sequence", || {
                let r = chain_sequence(&lambda)?;
                let formula: Vec<bool> = r.maps.iter().map(|m| m.formula_image).collect();
                Recorder::pass_if(
                    r.exact(),
                    format!("dims {:?}, closed-form images used {:?}{}", r.dims, formula, r.violations.join("; ")),
                )
            });
        }
    }
}

pub(crate) fn cuspidal(cfg: &RunConfig, rec: &mut Recorder) {
    let lambda: HighestWeight = cfg.highest_weight();
    let mu = cfg.mu.clone().unwrap_or_else(|| crate::default_mu(cfg.n));
    let report = match analyse_cuspidal(&lambda, &mu, cfg.radius) {
        Ok(r) => r,
        Err(e) => return rec.check("cuspidal/build", "cuspidal-module", || Err(e)),
    };
    let r = &report;
    rec.check("cuspidal/criterion", "cuspidality-criterion", || {
        Ok((Status::Info, format!("cuspidal = {} for mu = {}", r.criterion, r.params.mu)))
    });
    rec.check("cuspidal/relations", "induced-module", || {
        Recorder::pass_if(r.relation_violations.is_empty(), format!("{} violations on interior(2)", r.relation_violations.len()))
    });
    rec.check("cuspidal/injectivity", "cuspidality-criterion", || {
        let failing: Vec<String> = r
            .injectivity
            .iter()
            .filter(|i| !i.injective)
            .map(|i| format!("{} at {:?}", i.generator, i.witness.clone().unwrap_or_default()))
            .collect();
        Recorder::pass_if(
            r.all_injective == r.criterion,
            format!("all root vectors injective on interior(1): {}; kernels: [{}]", r.all_injective, failing.join(", ")),
        )
    });
    rec.check("cuspidal/weight-spaces", "induced-module", || {
        Recorder::pass_if(r.weight_spaces_rigid, format!("every weight space has dimension {}", r.fiber.fiber_dim))
    });
    if let Some(ok) = r.intertwiner_ok {
        rec.check("cuspidal/intertwiner", "shen-larsson-isomorphism", || {
            Recorder::pass_if(ok, "commutes with every generator on interior(2), invertible on every fiber")
        });
    }
    rec.check("cuspidal/fiber-w-module", "fiber-irreducibility", || {
        Recorder::pass_if(
            r.fiber.irreducible == r.fiber_expected_irreducible,
            format!(
                "irreducible {} (expected {}), smallest proper subspace {:?}",
                r.fiber.irreducible, r.fiber_expected_irreducible, r.fiber.proper_subspace_dim
            ),
        )
    });
    if r.criterion && r.fiber_expected_irreducible {
        rec.check("cuspidal/spans-interior", "classification", || {
            Recorder::pass_if(r.spans_interior, "closure of v_lambda at the origin fills interior(2)")
        });
    }
    if let Some(v) = r.proper_submodule_visible {
        rec.check("cuspidal/proper-submodule", "classification", || {
            Ok((Status::Info, format!("closure of the proper fiber subspace stays proper on interior(2): {v}")))
        });
    }
    for v in &r.violations {
        rec.check(format!("cuspidal/violation[{}]", v.len()), "cuspidal-module", || Recorder::pass_if(false, v.clone()));
    }
}
