use super::Formula;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Position {
    /// Top level or right operand of `->`.
    Open,
    /// Left operand of `->`.
    ImpLeft,
    /// Operand of a prefix operator.
    Operand,
}

pub(super) fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write(f, Position::Open, &mut out);
    out
}

fn write(f: &Formula, pos: Position, out: &mut String) {
    match f {
        Formula::Var(p) => out.push_str(p),
        Formula::Not(a) => {
            out.push('!');
            write(a, Position::Operand, out);
        }
        Formula::Nec(a) => {
            out.push('N');
            if matches!(**a, Formula::Var(_)) {
                out.push(' ');
            }
            write(a, Position::Operand, out);
        }
        Formula::Blame(c, s, a) => {
            out.push_str(&format!("B[{c}; {s}] "));
            write(a, Position::Operand, out);
        }
        Formula::Implies(a, b) => {
            let wrap = pos != Position::Open;
            if wrap {
                out.push('(');
            }
            write(a, Position::ImpLeft, out);
            out.push_str(" -> ");
            write(b, Position::Open, out);
            if wrap {
                out.push(')');
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_formula, Coalition};
    use super::*;
    use crate::degree::Degree;

    #[test]
    fn canonical_forms() {
        let f = Formula::blame(Coalition::of(["a1"]), Degree::from_integer(1000), Formula::var("dead"));
        assert_eq!(print_formula(&f), "B[{a1}; 1000] dead");

        let (p, q) = (Formula::var("p"), Formula::var("q"));
        let f = Formula::implies(p.clone(), Formula::implies(q, p.clone()));
        assert_eq!(print_formula(&f), "p -> q -> p");

        let f = Formula::not(Formula::nec(Formula::not(p)));
        assert_eq!(print_formula(&f), "!N!p");
    }

    #[test]
    fn parenthesizes_only_where_needed() {
        for text in [
            "(p -> q) -> r",
            "!(p -> q)",
            "N (p -> q)",
            "B[{a1,a2}; 7/2] (p -> q)",
            "N N p",
            "NB[{}; 0] p",
        ] {
            let f = parse_formula(text).unwrap();
            let printed = print_formula(&f);
            assert_eq!(parse_formula(&printed).unwrap(), f, "{text} -> {printed}");
        }
        assert_eq!(print_formula(&parse_formula("(p -> q) -> r").unwrap()), "(p -> q) -> r");
        assert_eq!(print_formula(&parse_formula("N(p -> q)").unwrap()), "N(p -> q)");
        assert_eq!(print_formula(&parse_formula("((p))").unwrap()), "p");
    }

    #[test]
    fn sugar_is_not_reintroduced() {
        assert_eq!(print_formula(&parse_formula("p | q").unwrap()), "!p -> q");
        assert_eq!(print_formula(&parse_formula("p & q").unwrap()), "!(p -> !q)");
        assert_eq!(print_formula(&parse_formula("~N p").unwrap()), "!N!p");
    }
}
