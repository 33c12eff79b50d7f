//! Built-in commutative Frobenius algebras and single-constant mutations of them.

use super::{validate::Axiom, CInftyAlgebra, CInftyError, Convention};
use crate::linalg::rational;

const CAP: usize = 4;

fn unit_law(a: &mut CInftyAlgebra) {
    let names: Vec<String> = a.basis.iter().map(|g| g.name.clone()).collect();
    for n in &names {
        a.set_op(&["1", n], n, rational(1)).expect("basis name");
        a.set_op(&[n, "1"], n, rational(1)).expect("basis name");
    }
}

fn q() -> CInftyAlgebra {
    let mut a = CInftyAlgebra::new("Q", &[("1", 0)], CAP);
    unit_law(&mut a);
    a.set_pairing("1", "1", rational(1)).expect("basis name");
    a
}

fn power(i: usize) -> String {
    match i {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{i}"),
    }
}

/// `Q[x]/(x^k)` with x in degree 0 and `<x^i, x^j> = 1` iff `i + j = k - 1`.
fn truncated(k: usize) -> CInftyAlgebra {
    let names: Vec<String> = (0..k).map(power).collect();
    let basis: Vec<(&str, i64)> = names.iter().map(|n| (n.as_str(), 0)).collect();
    let mut a = CInftyAlgebra::new(&format!("Q[x]/(x^{k})"), &basis, CAP);
    for i in 0..k {
        for j in 0..k - i {
            a.set_op(&[&names[i], &names[j]], &names[i + j], rational(1))
                .expect("basis name");
        }
        a.set_pairing(&names[i], &names[k - 1 - i], rational(1))
            .expect("basis name");
    }
    a
}

/// Cohomology of a sphere: unit and one generator `g` in degree `d`, `g² = 0`.
fn sphere(d: i64, g: &str) -> CInftyAlgebra {
    let mut a = CInftyAlgebra::new(&format!("H*(S^{d})"), &[("1", 0), (g, d)], CAP)
        .with_convention(Convention::Cohomological);
    unit_law(&mut a);
    a.set_pairing("1", g, rational(1)).expect("basis name");
    a.set_pairing(g, "1", rational(1)).expect("basis name");
    a
}

/// Short names accepted by [`builtin`], in a fixed order.
pub fn builtin_names() -> [&'static str; 5] {
    ["Q", "Qx2", "Qx3", "S2", "S1"]
}

/// Looks a built-in up by short name (case-insensitive) or full name.
pub fn builtin(name: &str) -> Result<CInftyAlgebra, CInftyError> {
    builtin_algebras()
        .into_iter()
        .find(|(short, a)| short.eq_ignore_ascii_case(name) || a.name() == name)
        .map(|(_, a)| a)
        .ok_or_else(|| CInftyError::UnknownBuiltin(name.to_string()))
}

/// Q, Q[x]/(x²), Q[x]/(x³), H*(S²), H*(S¹), keyed by short name.
pub fn builtin_algebras() -> Vec<(&'static str, CInftyAlgebra)> {
    let [a, b, c, d, e] = builtin_names();
    vec![
        (a, q()),
        (b, truncated(2)),
        (c, truncated(3)),
        (d, sphere(2, "x")),
        (e, sphere(1, "a")),
    ]
}

/// A built-in with one structure constant changed, and the axiom that must break.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub name: &'static str,
    pub description: &'static str,
    pub breaks: Axiom,
    pub algebra: CInftyAlgebra,
}

fn mutate(
    base: &str,
    name: &'static str,
    description: &'static str,
    breaks: Axiom,
    change: impl FnOnce(&mut CInftyAlgebra) -> Result<(), CInftyError>,
) -> Mutation {
    let mut algebra = builtin(base).expect("built-in");
    change(&mut algebra).expect("mutation names existing generators");
    let algebra = algebra.with_name(name);
    Mutation {
        name,
        description,
        breaks,
        algebra,
    }
}

/// Ten single-constant mutations, each breaking one axiom.
pub fn mutations() -> Vec<Mutation> {
    use Axiom::*;
    vec![
        mutate(
            "Qx3",
            "Qx3-xx-unit",
            "m_2(x,x) = 1 instead of x^2",
            AInfinity,
            |a| {
                a.set_op(&["x", "x"], "x^2", rational(0))?;
                a.set_op(&["x", "x"], "1", rational(1))
            },
        ),
        mutate("Qx3", "Qx3-x1-zero", "m_2(x,1) = 0", Shuffle, |a| {
            a.set_op(&["x", "1"], "x", rational(0))
        }),
        mutate(
            "Qx3",
            "Qx3-identity-pairing",
            "pairing replaced by the identity matrix",
            Cyclic,
            |a| {
                for (x, y) in [("1", "x^2"), ("x^2", "1")] {
                    a.set_pairing(x, y, rational(0))?;
                }
                a.set_pairing("1", "1", rational(1))?;
                a.set_pairing("x^2", "x^2", rational(1))
            },
        ),
        mutate("Qx2", "Qx2-x1-double", "m_2(x,1) = 2x", Shuffle, |a| {
            a.set_op(&["x", "1"], "x", rational(2))
        }),
        mutate("S2", "S2-x1-zero", "m_2(x,1) = 0", Shuffle, |a| {
            a.set_op(&["x", "1"], "x", rational(0))
        }),
        mutate(
            "S2",
            "S2-asymmetric-pairing",
            "<1,x> = 2 while <x,1> = 1",
            Cyclic,
            |a| a.set_pairing("1", "x", rational(2)),
        ),
        mutate("S1", "S1-a1-negated", "m_2(a,1) = -a", Shuffle, |a| {
            a.set_op(&["a", "1"], "a", rational(-1))
        }),
        mutate("S2", "S2-unit-doubled", "m_2(1,1) = 2", AInfinity, |a| {
            a.set_op(&["1", "1"], "1", rational(2))
        }),
        mutate("S1", "S1-unit-doubled", "m_2(1,1) = 2", AInfinity, |a| {
            a.set_op(&["1", "1"], "1", rational(2))
        }),
        mutate("Qx2", "Qx2-xx-paired", "<x,x> = 1 added", Cyclic, |a| {
            a.set_pairing("x", "x", rational(1))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cinfty::{load_algebra, save_algebra, validate_all};

    #[test]
    fn builtins_are_valid_and_round_trip() {
        for (short, a) in builtin_algebras() {
            a.check_structure().unwrap();
            let r = validate_all(&a, 4);
            assert!(r.passed(), "{short}\n{r}");
            assert_eq!(load_algebra(&save_algebra(&a)).unwrap(), a);
        }
    }

    #[test]
    fn circle_generator_squares_to_zero() {
        let a = builtin("S1").unwrap();
        let i = a.index_of("a").unwrap();
        assert!(a.op(&[i, i]).is_empty());
    }

    #[test]
    fn every_mutation_breaks_its_axiom() {
        let ms = mutations();
        assert_eq!(ms.len(), 10);
        for m in ms {
            m.algebra.check_structure().unwrap();
            let r = validate_all(&m.algebra, 4);
            let f = r
                .failures()
                .find(|c| {
                    c.axiom == m.breaks
                        || (m.breaks == Axiom::Cyclic && c.axiom == Axiom::PairingSymmetry)
                })
                .unwrap_or_else(|| panic!("{} did not fail\n{r}", m.name));
            assert!(f.witness.is_some());
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(builtin("s2").unwrap().name(), "H*(S^2)");
        assert_eq!(builtin("Q[x]/(x^3)").unwrap().dim(), 3);
        assert!(builtin("nope").is_err());
    }
}
