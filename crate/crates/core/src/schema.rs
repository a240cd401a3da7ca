//! The axiom schemata of the blameworthiness logic.
//!
//! Each schema is a formula pattern over metavariables: formula slots `φ`,
//! `ψ`, coalition slots `C`, `D` and degree slots `s`, `t`. The same
//! pattern drives both [`instantiate`] (substitution) and
//! [`match_schema`] (syntactic unification), so the two stay in sync.
//!
//! | schema                  | pattern                                                   | side condition   |
//! |-------------------------|-----------------------------------------------------------|------------------|
//! | `Truth-N`               | `Nφ -> φ`                                                 |                  |
//! | `Truth-B`               | `B[C;s]φ -> φ`                                            |                  |
//! | `Distributivity`        | `N(φ -> ψ) -> Nφ -> Nψ`                                   |                  |
//! | `NegativeIntrospection` | `!Nφ -> N!Nφ`                                             |                  |
//! | `NoneToBlame`           | `!B[{};s]φ`                                               |                  |
//! | `Monotonicity`          | `B[C;s]φ -> B[D;t]φ`                                      | `C ⊆ D`, `s ≤ t` |
//! | `JointResponsibility`   | `~NB[C;s]φ & ~NB[D;t]ψ -> (φ | ψ -> B[C∪D;s+t](φ | ψ))`   | `C ∩ D = ∅`      |
//! | `BlameForCause`         | `N(φ -> ψ) -> B[C;s]ψ -> φ -> B[C;s]φ`                    |                  |
//! | `Fairness`              | `B[C;s]φ -> N(φ -> B[C;s]φ)`                              |                  |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::degree::Degree;
use crate::formula::{Coalition, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomSchema {
    TruthN,
    TruthB,
    Distributivity,
    NegativeIntrospection,
    NoneToBlame,
    Monotonicity,
    JointResponsibility,
    BlameForCause,
    Fairness,
}

impl AxiomSchema {
    pub const ALL: [AxiomSchema; 9] = [
        AxiomSchema::TruthN,
        AxiomSchema::TruthB,
        AxiomSchema::Distributivity,
        AxiomSchema::NegativeIntrospection,
        AxiomSchema::NoneToBlame,
        AxiomSchema::Monotonicity,
        AxiomSchema::JointResponsibility,
        AxiomSchema::BlameForCause,
        AxiomSchema::Fairness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomSchema::TruthN => "Truth-N",
            AxiomSchema::TruthB => "Truth-B",
            AxiomSchema::Distributivity => "Distributivity",
            AxiomSchema::NegativeIntrospection => "NegativeIntrospection",
            AxiomSchema::NoneToBlame => "NoneToBlame",
            AxiomSchema::Monotonicity => "Monotonicity",
            AxiomSchema::JointResponsibility => "JointResponsibility",
            AxiomSchema::BlameForCause => "BlameForCause",
            AxiomSchema::Fairness => "Fairness",
        }
    }

    /// Metavariables the schema mentions.
    pub fn slots(self) -> &'static [Slot] {
        use Slot::*;
        match self {
            AxiomSchema::TruthN | AxiomSchema::NegativeIntrospection => &[Phi],
            AxiomSchema::Distributivity => &[Phi, Psi],
            AxiomSchema::NoneToBlame => &[Phi, S],
            AxiomSchema::TruthB | AxiomSchema::Fairness => &[Phi, C, S],
            AxiomSchema::BlameForCause => &[Phi, Psi, C, S],
            AxiomSchema::Monotonicity => &[Phi, C, D, S, T],
            AxiomSchema::JointResponsibility => &[Phi, Psi, C, D, S, T],
        }
    }

    fn pattern(self) -> Pat {
        use Pat::*;
        let blame_c_s = |body: Pat| Blame(CPat::C, DPat::S, Box::new(body));
        match self {
            AxiomSchema::TruthN => imp(nec(Phi), Phi),
            AxiomSchema::TruthB => imp(blame_c_s(Phi), Phi),
            AxiomSchema::Distributivity => imp(nec(imp(Phi, Psi)), imp(nec(Phi), nec(Psi))),
            AxiomSchema::NegativeIntrospection => imp(not(nec(Phi)), nec(not(nec(Phi)))),
            AxiomSchema::NoneToBlame => not(Blame(CPat::Empty, DPat::S, Box::new(Phi))),
            AxiomSchema::Monotonicity => imp(blame_c_s(Phi), Blame(CPat::D, DPat::T, Box::new(Phi))),
            AxiomSchema::JointResponsibility => imp(
                and(
                    possible(blame_c_s(Phi)),
                    possible(Blame(CPat::D, DPat::T, Box::new(Psi))),
                ),
                imp(or(Phi, Psi), Blame(CPat::Union, DPat::Sum, Box::new(or(Phi, Psi)))),
            ),
            AxiomSchema::BlameForCause => imp(nec(imp(Phi, Psi)), imp(blame_c_s(Psi), imp(Phi, blame_c_s(Phi)))),
            AxiomSchema::Fairness => imp(blame_c_s(Phi), nec(imp(Phi, blame_c_s(Phi)))),
        }
    }

    fn check_side_conditions(self, b: &Bindings) -> Result<(), SchemaError> {
        let fail = |condition| {
            Err(SchemaError::SideCondition {
                schema: self,
                condition,
            })
        };
        match self {
            AxiomSchema::Monotonicity => {
                if !b.c.as_ref().zip(b.d.as_ref()).is_some_and(|(c, d)| c.is_subset(d)) {
                    return fail("C ⊆ D");
                }
                if !b.s.as_ref().zip(b.t.as_ref()).is_some_and(|(s, t)| s <= t) {
                    return fail("s ≤ t");
                }
                Ok(())
            }
            AxiomSchema::JointResponsibility => {
                if !b.c.as_ref().zip(b.d.as_ref()).is_some_and(|(c, d)| c.is_disjoint(d)) {
                    return fail("C ∩ D = ∅");
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomSchema {
    type Err = SchemaError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AxiomSchema::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| SchemaError::UnknownSchema(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Phi,
    Psi,
    C,
    D,
    S,
    T,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::Phi => "φ",
            Slot::Psi => "ψ",
            Slot::C => "C",
            Slot::D => "D",
            Slot::S => "s",
            Slot::T => "t",
        })
    }
}

/// Values for a schema's metavariables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    pub phi: Option<Formula>,
    pub psi: Option<Formula>,
    pub c: Option<Coalition>,
    pub d: Option<Coalition>,
    pub s: Option<Degree>,
    pub t: Option<Degree>,
}

impl Bindings {
    pub fn phi(mut self, f: Formula) -> Self {
        self.phi = Some(f);
        self
    }

    pub fn psi(mut self, f: Formula) -> Self {
        self.psi = Some(f);
        self
    }

    pub fn c(mut self, c: Coalition) -> Self {
        self.c = Some(c);
        self
    }

    pub fn d(mut self, d: Coalition) -> Self {
        self.d = Some(d);
        self
    }

    pub fn s(mut self, s: Degree) -> Self {
        self.s = Some(s);
        self
    }

    pub fn t(mut self, t: Degree) -> Self {
        self.t = Some(t);
        self
    }

    fn is_bound(&self, slot: Slot) -> bool {
        match slot {
            Slot::Phi => self.phi.is_some(),
            Slot::Psi => self.psi.is_some(),
            Slot::C => self.c.is_some(),
            Slot::D => self.d.is_some(),
            Slot::S => self.s.is_some(),
            Slot::T => self.t.is_some(),
        }
    }

    /// Keeps only the slots `schema` uses.
    pub fn restrict_to(&self, schema: AxiomSchema) -> Bindings {
        let keep = |slot| schema.slots().contains(&slot);
        Bindings {
            phi: self.phi.clone().filter(|_| keep(Slot::Phi)),
            psi: self.psi.clone().filter(|_| keep(Slot::Psi)),
            c: self.c.clone().filter(|_| keep(Slot::C)),
            d: self.d.clone().filter(|_| keep(Slot::D)),
            s: self.s.clone().filter(|_| keep(Slot::S)),
            t: self.t.clone().filter(|_| keep(Slot::T)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("unknown axiom schema `{0}`")]
    UnknownSchema(String),
    #[error("{schema}: metavariable {slot} is unbound")]
    MissingBinding { schema: AxiomSchema, slot: Slot },
    #[error("{schema}: side condition {condition} fails")]
    SideCondition {
        schema: AxiomSchema,
        condition: &'static str,
    },
    #[error("formula is not an instance of {schema}")]
    NoMatch { schema: AxiomSchema },
}

#[derive(Debug, Clone)]
enum Pat {
    Phi,
    Psi,
    Not(Box<Pat>),
    Imp(Box<Pat>, Box<Pat>),
    Nec(Box<Pat>),
    Blame(CPat, DPat, Box<Pat>),
}

#[derive(Debug, Clone, Copy)]
enum CPat {
    C,
    D,
    Empty,
    Union,
}

#[derive(Debug, Clone, Copy)]
enum DPat {
    S,
    T,
    Sum,
}

fn imp(a: Pat, b: Pat) -> Pat {
    Pat::Imp(Box::new(a), Box::new(b))
}

fn not(a: Pat) -> Pat {
    Pat::Not(Box::new(a))
}

fn nec(a: Pat) -> Pat {
    Pat::Nec(Box::new(a))
}

fn and(a: Pat, b: Pat) -> Pat {
    not(imp(a, not(b)))
}

fn or(a: Pat, b: Pat) -> Pat {
    imp(not(a), b)
}

fn possible(a: Pat) -> Pat {
    not(nec(not(a)))
}

/// Builds the schema instance for `bindings`, checking side conditions.
pub fn instantiate(schema: AxiomSchema, bindings: &Bindings) -> Result<Formula, SchemaError> {
    let f = instantiate_unchecked(schema, bindings)?;
    schema.check_side_conditions(bindings)?;
    Ok(f)
}

/// Like [`instantiate`] but skips side conditions. Only the metavariables
/// must be bound.
pub fn instantiate_unchecked(schema: AxiomSchema, bindings: &Bindings) -> Result<Formula, SchemaError> {
    if let Some(&slot) = schema.slots().iter().find(|&&s| !bindings.is_bound(s)) {
        return Err(SchemaError::MissingBinding { schema, slot });
    }
    Ok(substitute(&schema.pattern(), bindings))
}

fn substitute(p: &Pat, b: &Bindings) -> Formula {
    let bound = "slots checked before substitution";
    match p {
        Pat::Phi => b.phi.clone().expect(bound),
        Pat::Psi => b.psi.clone().expect(bound),
        Pat::Not(a) => Formula::not(substitute(a, b)),
        Pat::Nec(a) => Formula::nec(substitute(a, b)),
        Pat::Imp(x, y) => Formula::implies(substitute(x, b), substitute(y, b)),
        Pat::Blame(cp, dp, a) => {
            let c = match cp {
                CPat::C => b.c.clone().expect(bound),
                CPat::D => b.d.clone().expect(bound),
                CPat::Empty => Coalition::empty(),
                CPat::Union => b.c.as_ref().expect(bound).union(b.d.as_ref().expect(bound)),
            };
            let s = match dp {
                DPat::S => b.s.clone().expect(bound),
                DPat::T => b.t.clone().expect(bound),
                DPat::Sum => b.s.as_ref().expect(bound) + b.t.as_ref().expect(bound),
            };
            Formula::blame(c, s, substitute(a, b))
        }
    }
}

#[derive(Default)]
struct Unifier<'f> {
    bindings: Bindings,
    unions: Vec<&'f Coalition>,
    sums: Vec<&'f Degree>,
}

impl<'f> Unifier<'f> {
    fn unify(&mut self, p: &Pat, f: &'f Formula) -> bool {
        match (p, f) {
            (Pat::Phi, _) => bind(&mut self.bindings.phi, f),
            (Pat::Psi, _) => bind(&mut self.bindings.psi, f),
            (Pat::Not(a), Formula::Not(x)) | (Pat::Nec(a), Formula::Nec(x)) => self.unify(a, x),
            (Pat::Imp(a, b), Formula::Implies(x, y)) => self.unify(a, x) && self.unify(b, y),
            (Pat::Blame(cp, dp, a), Formula::Blame(c, s, x)) => {
                let coalition_ok = match cp {
                    CPat::C => bind(&mut self.bindings.c, c),
                    CPat::D => bind(&mut self.bindings.d, c),
                    CPat::Empty => c.is_empty(),
                    CPat::Union => {
                        self.unions.push(c);
                        true
                    }
                };
                let degree_ok = match dp {
                    DPat::S => bind(&mut self.bindings.s, s),
                    DPat::T => bind(&mut self.bindings.t, s),
                    DPat::Sum => {
                        self.sums.push(s);
                        true
                    }
                };
                coalition_ok && degree_ok && self.unify(a, x)
            }
            _ => false,
        }
    }

    /// Checks the `C ∪ D` and `s + t` occurrences once all slots are bound.
    fn finish(self) -> Option<Bindings> {
        let b = self.bindings;
        for u in self.unions {
            if *u != b.c.as_ref()?.union(b.d.as_ref()?) {
                return None;
            }
        }
        for sum in self.sums {
            if *sum != b.s.as_ref()? + b.t.as_ref()? {
                return None;
            }
        }
        Some(b)
    }
}

fn bind<T: Clone + PartialEq>(slot: &mut Option<T>, value: &T) -> bool {
    match slot {
        Some(existing) => existing == value,
        None => {
            *slot = Some(value.clone());
            true
        }
    }
}

/// Matches `f` against one schema, returning the bindings when `f` is an
/// instance whose side conditions hold.
pub fn match_schema(schema: AxiomSchema, f: &Formula) -> Result<Bindings, SchemaError> {
    let mut u = Unifier::default();
    if !u.unify(&schema.pattern(), f) {
        return Err(SchemaError::NoMatch { schema });
    }
    let bindings = u.finish().ok_or(SchemaError::NoMatch { schema })?;
    schema.check_side_conditions(&bindings)?;
    Ok(bindings)
}

/// The first schema (in [`AxiomSchema::ALL`] order) that `f` instantiates.
pub fn match_axiom(f: &Formula) -> Option<(AxiomSchema, Bindings)> {
    AxiomSchema::ALL
        .into_iter()
        .find_map(|schema| match_schema(schema, f).ok().map(|b| (schema, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn instantiate_examples() {
        let b = Bindings::default()
            .phi(f("p"))
            .c(Coalition::of(["a1"]))
            .d(Coalition::of(["a1", "a2"]))
            .s(1.into())
            .t(2.into());
        assert_eq!(
            instantiate(AxiomSchema::Monotonicity, &b).unwrap(),
            f("B[{a1};1]p -> B[{a1,a2};2]p")
        );

        let b = Bindings::default()
            .phi(f("p"))
            .psi(f("q"))
            .c(Coalition::of(["a1"]))
            .d(Coalition::of(["a1"]))
            .s(1.into())
            .t(1.into());
        assert_eq!(
            instantiate(AxiomSchema::JointResponsibility, &b),
            Err(SchemaError::SideCondition {
                schema: AxiomSchema::JointResponsibility,
                condition: "C ∩ D = ∅"
            })
        );

        let b = Bindings::default().phi(f("p")).s(0.into());
        assert_eq!(instantiate(AxiomSchema::NoneToBlame, &b).unwrap(), f("!B[{};0]p"));

        let b = Bindings::default().phi(f("p")).c(Coalition::of(["a1"])).s(3.into());
        assert_eq!(
            instantiate(AxiomSchema::Fairness, &b).unwrap(),
            f("B[{a1};3]p -> N(p -> B[{a1};3]p)")
        );

        assert_eq!(
            instantiate(AxiomSchema::Distributivity, &Bindings::default().phi(f("p"))),
            Err(SchemaError::MissingBinding {
                schema: AxiomSchema::Distributivity,
                slot: Slot::Psi
            })
        );
    }

    #[test]
    fn match_examples() {
        let (schema, b) = match_axiom(&f("B[{a1};2]p -> p")).unwrap();
        assert_eq!(schema, AxiomSchema::TruthB);
        assert_eq!(b, Bindings::default().phi(f("p")).c(Coalition::of(["a1"])).s(2.into()));

        assert!(match_axiom(&f("B[{a1};2]p -> B[{a1};1]p")).is_none());
        assert_eq!(
            match_schema(AxiomSchema::Monotonicity, &f("B[{a1};2]p -> B[{a1};1]p")),
            Err(SchemaError::SideCondition {
                schema: AxiomSchema::Monotonicity,
                condition: "s ≤ t"
            })
        );

        let (schema, b) = match_axiom(&f("N(p->q) -> (B[{a1};1]q -> (p -> B[{a1};1]p))")).unwrap();
        assert_eq!(schema, AxiomSchema::BlameForCause);
        assert_eq!((b.phi, b.psi), (Some(f("p")), Some(f("q"))));
    }

    #[test]
    fn joint_responsibility_matching_checks_union_and_sum() {
        let good = f("~NB[{a1};1]q & ~NB[{a2};3/2]r -> (q | r -> B[{a1,a2};5/2](q | r))");
        assert_eq!(match_axiom(&good).unwrap().0, AxiomSchema::JointResponsibility);
        let bad_sum = f("~NB[{a1};1]q & ~NB[{a2};3/2]r -> (q | r -> B[{a1,a2};2](q | r))");
        assert!(match_axiom(&bad_sum).is_none());
        let bad_union = f("~NB[{a1};1]q & ~NB[{a2};1]r -> (q | r -> B[{a1};2](q | r))");
        assert!(match_axiom(&bad_union).is_none());
        let overlap = f("~NB[{a1};1]q & ~NB[{a1};1]r -> (q | r -> B[{a1};2](q | r))");
        assert!(matches!(
            match_schema(AxiomSchema::JointResponsibility, &overlap),
            Err(SchemaError::SideCondition { .. })
        ));
    }

    #[test]
    fn inconsistent_slot_reuse_fails() {
        assert!(match_schema(AxiomSchema::TruthN, &f("N p -> q")).is_err());
        assert!(match_schema(AxiomSchema::Fairness, &f("B[{a1};1]p -> N(p -> B[{a1};2]p)")).is_err());
    }

    #[test]
    fn names_round_trip() {
        for s in AxiomSchema::ALL {
            assert_eq!(s.name().parse::<AxiomSchema>().unwrap(), s);
        }
        assert!("Truth".parse::<AxiomSchema>().is_err());
    }
}
