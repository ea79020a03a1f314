use std::str::FromStr;

use serde_json::{json, Value};

use super::{Command, Failure, Reply};
use crate::braid::{
    alpha, b2_mul, check_relations, p2_mul, pp_act, pp_mul, sigma_conj, B2Element, P2Element, PuncturedElement,
};
use crate::classify::{canonical_pair, free_equal, swap_class, unordered_equal, SplitMapClass};
use crate::confmetric::{hausdorff, torus_dist, Configuration, TorusPoint};
use crate::error::Error;
use crate::fixroot::{
    can_deform_fixed_point_free, fixed_to_root, individually_deformable_of, lift_cyclic_special, lift_proportional,
    nielsen, nielsen_of, verify_lift, Certificate, Construction, DeformVerdict, Invariants, PuncturedHom, RootData,
};
use crate::freegroup::{are_conjugate, parse_tokens, primitive_root, tokens_to_word, Alphabet, FreeWord};
use crate::hatcalc::{is_hat_conjugate, solve_e1};

type Outcome = std::result::Result<Reply, Failure>;

fn at<T>(i: usize, r: crate::error::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|err| Failure::Lib { arg: Some(i), err })
}

/// Exactly `n` argv entries.
fn exact(args: &[String], n: usize, what: &str) -> std::result::Result<Vec<String>, Failure> {
    if args.len() != n {
        return Err(Failure::Usage(format!("expected {n} argument(s): {what}; got {}", args.len())));
    }
    Ok(args.to_vec())
}

/// A single literal, possibly split over several argv entries.
fn joined(args: &[String], what: &str) -> std::result::Result<String, Failure> {
    if args.is_empty() {
        return Err(Failure::Usage(format!("expected {what}")));
    }
    Ok(args.join(" "))
}

/// `n` keyed literals, each starting with the token `head`.
fn headed(args: &[String], head: &str, n: usize) -> std::result::Result<Vec<String>, Failure> {
    let mut groups: Vec<Vec<&str>> = Vec::new();
    for token in args.iter().flat_map(|a| a.split_whitespace()) {
        match groups.last_mut() {
            Some(g) if token != head => g.push(token),
            _ => groups.push(vec![token]),
        }
    }
    if groups.len() != n {
        return Err(Failure::Usage(format!(
            "expected {n} '{head} ...' literal(s), found {}",
            groups.len()
        )));
    }
    Ok(groups.into_iter().map(|g| g.join(" ")).collect())
}

fn parse<T: FromStr<Err = Error>>(i: usize, text: &str) -> std::result::Result<T, Failure> {
    at(i, text.parse())
}

/// Words sharing the smallest alphabet containing all their letters.
fn words(texts: &[String]) -> std::result::Result<Vec<FreeWord>, Failure> {
    let tokens = texts
        .iter()
        .enumerate()
        .map(|(i, t)| at(i, parse_tokens(t, 0)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let alphabet = Alphabet::infer(tokens.iter().flatten().map(|t| t.name)).ok_or_else(|| Failure::Lib {
        arg: None,
        err: Error::parse(0, "words mix {u,v,B} with {x,y} letters, or use 's'"),
    })?;
    tokens.iter().enumerate().map(|(i, t)| at(i, tokens_to_word(alphabet, t))).collect()
}

fn word_in(i: usize, alphabet: Alphabet, text: &str) -> std::result::Result<FreeWord, Failure> {
    at(i, FreeWord::parse_in(alphabet, text))
}

pub(super) fn dispatch(cmd: Command, args: &[String], grid: Option<&str>) -> Outcome {
    if grid.is_some() && cmd != Command::Nielsen {
        return Err(Failure::Usage("--grid applies only to the nielsen command".into()));
    }
    match cmd {
        Command::Reduce => Ok(Reply::text(&words(&[joined(args, "a word")?])?[0])),
        Command::Mul => {
            if args.len() < 2 {
                return Err(Failure::Usage("expected at least 2 words".into()));
            }
            let ws = words(args)?;
            Ok(Reply::text(FreeWord::product(ws[0].alphabet(), &ws)?))
        }
        Command::Hat => {
            let w = word_in(0, Alphabet::Uv, &joined(args, "a word over u, v")?)?;
            Ok(Reply::text(w.hat()?))
        }
        Command::Conj => {
            let ws = words(&exact(args, 2, "two words")?)?;
            Ok(match are_conjugate(&ws[0], &ws[1])? {
                Some(g) => Reply::new(format!("conjugate: g = {g}"), json!({ "conjugate": true, "g": g.to_string() })),
                None => Reply::new("not conjugate", json!({ "conjugate": false })),
            })
        }
        Command::Root => {
            let w = &words(&[joined(args, "a word")?])?[0];
            let pr = primitive_root(w)?;
            Ok(Reply::new(
                format!("root={} k={}", pr.root, pr.exponent),
                json!({ "root": pr.root.to_string(), "k": pr.exponent }),
            ))
        }
        Command::Hatdec => {
            let w = word_in(0, Alphabet::Uv, &joined(args, "a word over u, v")?)?;
            Ok(match is_hat_conjugate(&w)? {
                Some(wit) => Reply::new(
                    format!("lambda={} l={}", wit.lambda, wit.l),
                    json!({ "lambda": wit.lambda.to_string(), "l": wit.l }),
                ),
                None => Reply::new("none", Value::Null),
            })
        }
        Command::E1dec => {
            let a = exact(args, 2, "words a and b over u, v")?;
            let (x, y) = (word_in(0, Alphabet::Uv, &a[0])?, word_in(1, Alphabet::Uv, &a[1])?);
            Ok(match solve_e1(&x, &y)? {
                Some(wit) => Reply::new(
                    format!("lambda={} r={} s={}", wit.lambda, wit.r, wit.s),
                    json!({ "lambda": wit.lambda.to_string(), "r": wit.r, "s": wit.s }),
                ),
                None => Reply::new("none", Value::Null),
            })
        }
        Command::P2mul => {
            let a = exact(args, 2, "two elements (w ; x,y)")?;
            Ok(Reply::text(p2_mul(&parse::<P2Element>(0, &a[0])?, &parse(1, &a[1])?)?))
        }
        Command::B2mul => {
            let a = exact(args, 2, "two elements (w ; x,y) s^e")?;
            Ok(Reply::text(b2_mul(&parse::<B2Element>(0, &a[0])?, &parse(1, &a[1])?)?))
        }
        Command::Sigmaconj => {
            let g: P2Element = parse(0, &joined(args, "an element (w ; x,y)")?)?;
            Ok(Reply::text(sigma_conj(&g)?))
        }
        Command::Ppmul => {
            let a = exact(args, 2, "two elements [k | t]")?;
            Ok(Reply::text(pp_mul(&parse::<PuncturedElement>(0, &a[0])?, &parse(1, &a[1])?)?))
        }
        Command::Ppact => {
            let a = exact(args, 2, "a word t over x, y and a word k over u, v, B")?;
            let (t, k) = (word_in(0, Alphabet::Xy, &a[0])?, word_in(1, Alphabet::Uvb, &a[1])?);
            Ok(Reply::text(pp_act(&t, &k)?))
        }
        Command::Alpha => {
            let g: PuncturedElement = parse(0, &joined(args, "an element [k | t]")?)?;
            Ok(Reply::text(alpha(&g)?))
        }
        Command::Relcheck => relcheck(args),
        Command::Canon => {
            let a = exact(args, 2, "two elements (w ; x,y)")?;
            Ok(Reply::text(canonical_pair(&parse(0, &a[0])?, &parse(1, &a[1])?)?))
        }
        Command::Eq | Command::Uneq => {
            let a = headed(args, "class", 2)?;
            let (c1, c2): (SplitMapClass, SplitMapClass) = (parse(0, &a[0])?, parse(1, &a[1])?);
            let same = if cmd == Command::Eq { free_equal(&c1, &c2)? } else { unordered_equal(&c1, &c2)? };
            Ok(Reply::new(same.to_string(), json!(same)))
        }
        Command::Swap => Ok(Reply::text(swap_class(&one_class(args)?)?)),
        Command::Nielsen => match grid {
            Some(bounds) => nielsen_grid(args, bounds),
            None => {
                let n = nielsen(&one_class(args)?)?;
                Ok(Reply::new(n.to_string(), json!(n)))
            }
        },
        Command::Deform => deform(&one_class(args)?),
        Command::Fix2root => Ok(Reply::text(fixed_to_root(&one_class(args)?)?)),
        Command::Liftprop => {
            let rd: RootData = parse(0, &headed(args, "root", 1)?[0])?;
            Ok(certificate_reply(lift_proportional(&rd)?))
        }
        Command::Liftspec => {
            let a = exact(args, 7, "integers p q l1 l2 l3 r s")?;
            let n = a
                .iter()
                .enumerate()
                .map(|(i, t)| at(i, crate::literal::int_at(t, 0)))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(certificate_reply(lift_cyclic_special(n[0], n[1], [n[2], n[3], n[4]], n[5], n[6])?))
        }
        Command::Verify => {
            let a = exact(args, 4, "images [k | t] [k | t] and targets (w ; x,y) (w ; x,y)")?;
            let hom = PuncturedHom {
                image_e1: parse(0, &a[0])?,
                image_e2: parse(1, &a[1])?,
            };
            let target = (parse(2, &a[2])?, parse(3, &a[3])?);
            let ok = verify_lift(&hom, &target)?;
            let mut reply = Reply::new(ok.to_string(), json!(ok));
            reply.status = if ok { 0 } else { 1 };
            Ok(reply)
        }
        Command::Dist => {
            let a = exact(args, 2, "two points (x,y)")?;
            let d = torus_dist(&parse::<TorusPoint>(0, &a[0])?, &parse(1, &a[1])?);
            Ok(Reply::new(format!("{d:?}"), json!(d)))
        }
        Command::Hausdorff => {
            let a = exact(args, 2, "two configurations {(x,y);...}")?;
            let d = hausdorff(&parse::<Configuration>(0, &a[0])?, &parse(1, &a[1])?)?;
            Ok(Reply::new(format!("{d:?}"), json!(d)))
        }
    }
}

fn one_class(args: &[String]) -> std::result::Result<SplitMapClass, Failure> {
    parse(0, &headed(args, "class", 1)?[0])
}

fn relcheck(args: &[String]) -> Outcome {
    exact(args, 0, "none")?;
    let report = check_relations()?;
    let failed = report.iter().filter(|r| !r.passed).count();
    let mut lines: Vec<String> = report
        .iter()
        .map(|r| {
            if r.passed {
                format!("PASS  {}: {}", r.group, r.relation)
            } else {
                format!("FAIL  {}: {}  ({} != {})", r.group, r.relation, r.lhs, r.rhs)
            }
        })
        .collect();
    lines.push(format!("{}/{} relations hold", report.len() - failed, report.len()));
    let items: Vec<Value> = report
        .iter()
        .map(|r| json!({ "group": r.group, "relation": r.relation, "passed": r.passed, "lhs": r.lhs, "rhs": r.rhs }))
        .collect();
    let mut reply = Reply::new(lines.join("\n"), json!({ "relations": items, "failed": failed }));
    reply.status = if failed == 0 { 0 } else { 1 };
    Ok(reply)
}

fn construction_json(c: &Construction) -> Value {
    match c {
        Construction::Proportional { ell, gamma } => {
            json!({ "kind": "proportional", "ell": ell, "gamma": [gamma.0, gamma.1] })
        }
        Construction::CyclicSpecial { p, q, lambda, conjugator } => json!({
            "kind": "cyclic", "p": p, "q": q, "lambda": lambda, "conjugator": conjugator.to_string(),
        }),
    }
}

fn construction_text(c: &Construction) -> String {
    match c {
        Construction::Proportional { ell, gamma } => format!("proportional l={ell} gamma={gamma}"),
        Construction::CyclicSpecial { p, q, lambda, conjugator } => format!(
            "cyclic (p,q)=({p},{q}) lambda=({},{},{}) conjugator={conjugator}",
            lambda[0], lambda[1], lambda[2]
        ),
    }
}

fn certificate_json(cert: &Certificate) -> Value {
    json!({
        "image_e1": cert.hom.image_e1.to_string(),
        "image_e2": cert.hom.image_e2.to_string(),
        "target": [cert.target.0.to_string(), cert.target.1.to_string()],
        "construction": construction_json(&cert.construction),
    })
}

fn certificate_reply(cert: Certificate) -> Reply {
    let mut reply = Reply::new(cert.hom.to_string(), Value::String(cert.hom.to_string()));
    reply.certificate = Some(certificate_json(&cert));
    reply
}

fn deform(c: &SplitMapClass) -> Outcome {
    Ok(match can_deform_fixed_point_free(c)? {
        DeformVerdict::Yes(cert) => {
            let text = format!(
                "yes\ncertificate: {}\nconstruction: {}",
                cert.hom,
                construction_text(&cert.construction)
            );
            let mut reply = Reply::new(text, json!({ "verdict": "yes" }));
            reply.certificate = Some(certificate_json(&cert));
            reply
        }
        DeformVerdict::No { nielsen } => Reply::new(
            format!("no (Nielsen number {nielsen})"),
            json!({ "verdict": "no", "nielsen": nielsen }),
        ),
        DeformVerdict::Unknown => Reply::new(
            "unknown: condition (a) holds but no construction applies",
            json!({ "verdict": "unknown" }),
        ),
    })
}

/// Checks `individually_deformable ⟺ nielsen = 0` over a box of invariants.
fn nielsen_grid(args: &[String], bounds: &str) -> Outcome {
    exact(args, 0, "none (the sweep takes --grid L,R,M)")?;
    let b: Vec<i64> = bounds
        .split(',')
        .map(|t| t.trim().parse::<i64>().ok().filter(|v| (0..=20).contains(v)))
        .collect::<Option<_>>()
        .filter(|v: &Vec<i64>| v.len() == 3)
        .ok_or_else(|| Failure::Usage(format!("--grid expects L,R,M with integers in [0,20], got '{bounds}'")))?;
    let (l, r, m) = (b[0], b[1], b[2]);
    let (mut cases, mut zero, mut deformable, mut mismatches) = (0u64, 0u64, 0u64, 0u64);
    let range = |k: i64| -k..=k;
    for a in range(l) {
        for bb in range(l) {
            for c in range(l) {
                for d in range(l) {
                    for rr in range(r) {
                        for ss in range(r) {
                            if rr == 0 && ss == 0 {
                                continue;
                            }
                            for mm in range(m) {
                                for nn in range(m) {
                                    let inv = Invariants { lattice: [a, bb, c, d], r: rr, s: ss, m: mm, n: nn };
                                    let z = nielsen_of(&inv)? == 0;
                                    let dfm = individually_deformable_of(&inv)?;
                                    cases += 1;
                                    zero += u64::from(z);
                                    deformable += u64::from(dfm);
                                    mismatches += u64::from(z != dfm);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut reply = Reply::new(
        format!("cases={cases} nielsen_zero={zero} deformable={deformable} mismatches={mismatches}"),
        json!({ "cases": cases, "nielsen_zero": zero, "deformable": deformable, "mismatches": mismatches }),
    );
    reply.status = if mismatches == 0 { 0 } else { 1 };
    Ok(reply)
}
