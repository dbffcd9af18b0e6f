//! The defining identities of each algebra class and module kind, written
//! in the identity language. They state the same axioms the hand-coded
//! deciders check.

use crate::algebra::AlgebraClass;
use crate::bimodule::ModuleKind;

const COMMUTATIVE: &str = "alg x y; x.y = y.x";
const ASSOCIATIVE: &str = "alg x y z; as(x, y, z) = 0";
const LEFT_ALTERNATIVE: &str = "alg x y; as(x, x, y) = 0";
const RIGHT_ALTERNATIVE: &str = "alg x y; as(x, y, y) = 0";
const HOM_JORDAN: &str = "alg x y; as(x.x, a(y), a(x)) = 0";

const LEFT_ASSOC: &str = "alg x y; mod v; as(x, y, v) = 0";
const RIGHT_ASSOC: &str = "alg x y; mod v; as(v, x, y) = 0";
const OPERATOR_COMM: &str = "alg x y; mod v; as(x, v, y) = 0";
const ALT_LEFT: &str = "alg x; mod v; as(x, x, v) = 0";
const ALT_RIGHT: &str = "alg x; mod v; as(v, x, x) = 0";
const ALT_CHAIN: [&str; 3] = [
    "alg x y; mod v; as(x, v, y) = -as(v, x, y)",
    "alg x y; mod v; -as(v, x, y) = as(y, x, v)",
    "alg x y; mod v; as(y, x, v) = -as(x, y, v)",
];
const RIGHT_CYCLIC_LHS: &str = "a(v.x).a(y.z) + a(v.y).a(z.x) + a(v.z).a(x.y)";
const LEFT_CYCLIC_LHS: &str = "a(y.z).a(x.v) + a(z.x).a(y.v) + a(x.y).a(z.v)";

fn jordan_right() -> Vec<String> {
    vec![
        format!("alg x y z; mod v; {RIGHT_CYCLIC_LHS} = (a(v).(y.z)).a(a(x)) + (a(v).(z.x)).a(a(y)) + (a(v).(x.y)).a(a(z))"),
        format!("alg x y z; mod v; {RIGHT_CYCLIC_LHS} = ((v.x).a(y)).a(a(z)) + ((v.z).a(y)).a(a(x)) + a(a(v)).((x.z).a(y))"),
    ]
}

fn jordan_left() -> Vec<String> {
    vec![
        format!("alg x y z; mod v; {LEFT_CYCLIC_LHS} = a(a(x)).((y.z).a(v)) + a(a(y)).((z.x).a(v)) + a(a(z)).((x.y).a(v))"),
        format!("alg x y z; mod v; {LEFT_CYCLIC_LHS} = a(a(z)).(a(y).(x.v)) + a(a(x)).(a(y).(z.v)) + ((x.z).a(y)).a(a(v))"),
    ]
}

fn jordan_bimodule() -> Vec<String> {
    vec![
        "alg x; mod v; v.x = x.v".to_string(),
        jordan_right().swap_remove(0),
        format!("alg x y z; mod v; {RIGHT_CYCLIC_LHS} = ((v.x).a(y)).a(a(z)) + ((v.z).a(y)).a(a(x)) + ((x.z).a(y)).a(a(v))"),
    ]
}

/// Identities whose joint validity defines `class`.
pub fn algebra_identities(class: AlgebraClass) -> Vec<String> {
    let ids: &[&str] = match class {
        AlgebraClass::Associative => &[ASSOCIATIVE],
        AlgebraClass::Alternative => &[LEFT_ALTERNATIVE, RIGHT_ALTERNATIVE],
        AlgebraClass::Commutative => &[COMMUTATIVE],
        AlgebraClass::Jordan => &[COMMUTATIVE, HOM_JORDAN],
    };
    ids.iter().map(|s| s.to_string()).collect()
}

/// Identities whose joint validity defines `kind`.
pub fn module_identities(kind: ModuleKind) -> Vec<String> {
    let owned = |ids: &[&str]| ids.iter().map(|s| s.to_string()).collect();
    match kind {
        ModuleKind::AssocLeft => owned(&[LEFT_ASSOC]),
        ModuleKind::AssocRight => owned(&[RIGHT_ASSOC]),
        ModuleKind::OperatorCommutativity => owned(&[OPERATOR_COMM]),
        ModuleKind::AssocBimodule => owned(&[LEFT_ASSOC, RIGHT_ASSOC, OPERATOR_COMM]),
        ModuleKind::AltLeft => owned(&[ALT_LEFT]),
        ModuleKind::AltRight => owned(&[ALT_RIGHT]),
        ModuleKind::AltBimodule => owned(&ALT_CHAIN),
        ModuleKind::JordanRight => jordan_right(),
        ModuleKind::JordanLeft => jordan_left(),
        ModuleKind::JordanBimodule => jordan_bimodule(),
        ModuleKind::SpecialRight => owned(&["alg x y; mod v; a(v).(x.y) = (v.x).a(y) + (v.y).a(x)"]),
        ModuleKind::SpecialLeft => owned(&["alg x y; mod v; (x.y).a(v) = a(x).(y.v) + a(y).(x.v)"]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_identity;

    #[test]
    fn every_rendering_parses_and_prints_back() {
        let all = AlgebraClass::ALL
            .into_iter()
            .flat_map(algebra_identities)
            .chain(ModuleKind::ALL.into_iter().flat_map(module_identities));
        for text in all {
            let id = parse_identity(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
            let strip = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
            assert_eq!(strip(&id.to_string()), strip(&text));
        }
    }
}
