//! The identity engine against the hand-coded deciders.

mod common;

use common::*;
use hombimod::dsl::{algebra_identities, evaluate, module_identities, parse_identity, polarize, verify_identity};
use hombimod::{
    check_algebra, check_module, nth_shift_bimodule, plus_bimodule, twist_bimodule, yau_twist, AlgebraClass, Bimodule,
    HomAlgebra, Identity, Matrix, ModuleClass, ModuleKind, Sort, Vector,
};

fn algebras() -> Vec<(String, HomAlgebra)> {
    let mut out: Vec<(String, HomAlgebra)> = hombimod::corpus::ALGEBRA_NAMES.iter().map(|n| (n.to_string(), alg(n))).collect();
    out.push(("twisted octonion".into(), yau_twist(&alg("octonion"), &map("octonion-flip")).unwrap()));
    let perturbed = HomAlgebra::untwisted(perturb(alg("sym2-jordan").mul(), &mut rng(1), 2)).unwrap();
    out.push(("perturbed sym2-jordan".into(), perturbed));
    out
}

fn bimodules() -> Vec<(String, Bimodule)> {
    let mut out: Vec<(String, Bimodule)> =
        hombimod::corpus::ALGEBRA_NAMES.iter().map(|n| (format!("regular:{n}"), regular(n))).collect();
    let tw = twisted_octonion();
    out.push(("octonion shift 1".into(), nth_shift_bimodule(&tw, 1, ModuleClass::Alternative).unwrap()));
    out.push(("twisted octonion".into(), tw));
    let p = alg("mat2-plus");
    let conj = map("mat2-conj");
    out.push(("twisted mat2-plus".into(), twist_bimodule(&p, &regular("mat2-plus"), &conj, &conj).unwrap()));
    out.push(("plus bimodule of mat2".into(), plus_bimodule(&alg("mat2"), &regular("mat2")).unwrap()));
    let base = regular("octonion");
    let rho_l = perturb(base.rho_l(), &mut rng(2), 1);
    out.push((
        "perturbed octonion".into(),
        Bimodule::new(base.parent().clone(), Matrix::identity(8), rho_l, base.rho_r().clone()).unwrap(),
    ));
    out
}

/// Evaluates the unpolarized identity at random rational points.
fn spot_check(id: &Identity, a: &HomAlgebra, v: Option<&Bimodule>, seed: u64, points: usize) {
    let mut r = rng(seed);
    for _ in 0..points {
        let env: Vec<Vector> = id
            .vars()
            .iter()
            .map(|(_, s)| match s {
                Sort::Alg => random_vector(&mut r, a.dim()),
                Sort::Mod => random_vector(&mut r, v.unwrap().mdim()),
            })
            .collect();
        assert!(evaluate(id, a, v, &env).unwrap().is_zero(), "{id}");
    }
}

#[test]
fn engine_agrees_with_algebra_deciders() {
    for (name, a) in algebras() {
        for class in AlgebraClass::ALL {
            let ids: Vec<Identity> = algebra_identities(class).iter().map(|t| parse_identity(t).unwrap()).collect();
            let verdicts: Vec<bool> = ids.iter().map(|id| verify_identity(id, &a, None).unwrap().ok()).collect();
            assert_eq!(verdicts.iter().all(|&b| b), check_algebra(&a, class).ok(), "{name} {class}");
            for (k, id) in ids.iter().enumerate() {
                if verdicts[k] {
                    spot_check(id, &a, None, k as u64, 100);
                }
            }
        }
    }
}

#[test]
fn engine_agrees_with_module_deciders() {
    for (name, v) in bimodules() {
        for kind in ModuleKind::ALL {
            let ids: Vec<Identity> = module_identities(kind).iter().map(|t| parse_identity(t).unwrap()).collect();
            let verdicts: Vec<bool> = ids.iter().map(|id| verify_identity(id, v.parent(), Some(&v)).unwrap().ok()).collect();
            assert_eq!(verdicts.iter().all(|&b| b), check_module(&v, kind).ok(), "{name} {kind}");
            for (k, id) in ids.iter().enumerate() {
                if verdicts[k] {
                    spot_check(id, v.parent(), Some(&v), k as u64, 100);
                }
            }
        }
    }
}

#[test]
fn polarized_jordan_identity_matches_the_decider() {
    let id = parse_identity("alg x y; as(x.x, a(y), a(x)) = 0").unwrap();
    let parts = polarize(&id);
    assert_eq!(parts.len(), 1);
    assert!(parts[0].poly.is_multilinear());
    assert_eq!(parts[0].poly.vars().len(), 4);
    for (name, a) in algebras() {
        if check_algebra(&a, AlgebraClass::Commutative).ok() {
            assert_eq!(verify_identity(&id, &a, None).unwrap().ok(), check_algebra(&a, AlgebraClass::Jordan).ok(), "{name}");
        }
    }
}

#[test]
fn worked_examples() {
    let o = alg("octonion");
    let left_alt = parse_identity("alg x y; as(x,x,y) = 0").unwrap();
    assert!(verify_identity(&left_alt, &o, None).unwrap().ok());
    let assoc = parse_identity("alg x y z; as(x,y,z) = 0").unwrap();
    let report = verify_identity(&assoc, &o, None).unwrap();
    assert!(!report.ok());
    assert_eq!(report.witnesses()[0].tuple.len(), 3);
    let module = parse_identity("alg x; mod v; as(v,x,x) = 0").unwrap();
    assert!(matches!(verify_identity(&module, &o, None), Err(hombimod::Error::MissingModule)));
    let other = regular("mat2");
    assert!(verify_identity(&module, &o, Some(&other)).is_err());
}

#[test]
fn printing_round_trips() {
    let mut corpus: Vec<String> = AlgebraClass::ALL
        .into_iter()
        .flat_map(algebra_identities)
        .chain(ModuleKind::ALL.into_iter().flat_map(module_identities))
        .collect();
    corpus.extend(
        [
            "alg a b; mod v; (a.b).a(v) = a(a).(b.v)",
            "alg x y; -x.y - 1/2*y.x = 2*x",
            "alg x; x.x = 0",
            "alg x y z; (x + y).z = x.z + y.z",
            "alg x y; 3*as(x, y, x) = -(x.y - y.x)",
            "alg x; mod v; a(a(v)) = v",
            "alg x y; a(x.y) = a(x).a(y)",
            "mod v; a(v) = v",
            "alg x y z; as(x.y, z, x) + as(y.z, x, y) = 0",
            "alg x; -x = 0",
            "alg x y; x.(y.x) = (x.y).x",
            "alg x y; mod v; 2/3*(v.x).a(y) - a(v).(x.y) = 0",
            "alg x; mod v; as(a(x), a(v), x.x) = 0",
            "alg x y; 0 = as(x, y, x) + as(y, x, x)",
        ]
        .map(String::from),
    );
    corpus.sort();
    corpus.dedup();
    assert!(corpus.len() >= 30, "round-trip corpus has {} strings", corpus.len());
    let strip = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
    for text in &corpus {
        let id = parse_identity(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(strip(&id.to_string()), strip(text));
        assert_eq!(parse_identity(&id.to_string()).unwrap(), id);
    }
}
