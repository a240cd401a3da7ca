//! Random formulas, coalitions and schema bindings.

use rand::Rng;

use crate::degree::Degree;
use crate::formula::{AgentId, Coalition, Formula};
use crate::schema::{AxiomSchema, Bindings};

/// Vocabulary and shape limits for random formulas.
#[derive(Debug, Clone)]
pub struct FormulaSampler {
    pub propositions: Vec<String>,
    pub agents: Vec<AgentId>,
    pub degrees: Vec<Degree>,
    /// Maximum nesting of `N` and `B`.
    pub max_modal_depth: usize,
    /// Maximum number of AST nodes, roughly.
    pub max_size: usize,
}

pub fn random_coalition(rng: &mut impl Rng, agents: &[AgentId]) -> Coalition {
    Coalition::from_agents(agents.iter().filter(|_| rng.gen_bool(0.5)).cloned())
}

pub fn random_formula(rng: &mut impl Rng, sampler: &FormulaSampler) -> Formula {
    gen(rng, sampler, sampler.max_modal_depth, sampler.max_size.max(1))
}

fn pick<'a, T>(rng: &mut impl Rng, xs: &'a [T]) -> &'a T {
    &xs[rng.gen_range(0..xs.len())]
}

fn gen(rng: &mut impl Rng, s: &FormulaSampler, depth: usize, size: usize) -> Formula {
    if size <= 1 || rng.gen_bool(0.3) {
        return Formula::var(pick(rng, &s.propositions).clone());
    }
    let modal = depth > 0;
    match rng.gen_range(0..if modal { 5 } else { 2 }) {
        0 => Formula::not(gen(rng, s, depth, size - 1)),
        1 => {
            let left = (size - 1) / 2;
            Formula::implies(
                gen(rng, s, depth, left.max(1)),
                gen(rng, s, depth, (size - 1 - left).max(1)),
            )
        }
        2 => Formula::nec(gen(rng, s, depth - 1, size - 1)),
        _ => Formula::blame(
            random_coalition(rng, &s.agents),
            pick(rng, &s.degrees).clone(),
            gen(rng, s, depth - 1, size - 1),
        ),
    }
}

/// Bindings for `schema` that satisfy its side conditions. With
/// `strict_increase` the degree slots of Monotonicity are drawn with
/// `s < t` (when the degree pool allows it).
pub fn random_bindings(
    rng: &mut impl Rng,
    schema: AxiomSchema,
    sampler: &FormulaSampler,
    strict_increase: bool,
) -> Bindings {
    let mut b = Bindings::default()
        .phi(random_formula(rng, sampler))
        .psi(random_formula(rng, sampler))
        .s(pick(rng, &sampler.degrees).clone())
        .t(pick(rng, &sampler.degrees).clone());
    match schema {
        AxiomSchema::Monotonicity => {
            let c = random_coalition(rng, &sampler.agents);
            let d = c.union(&random_coalition(rng, &sampler.agents));
            let (mut s, mut t) = (b.s.take().unwrap(), b.t.take().unwrap());
            if s > t {
                std::mem::swap(&mut s, &mut t);
            }
            if strict_increase && s == t {
                let larger: Vec<&Degree> = sampler.degrees.iter().filter(|x| **x > s).collect();
                let smaller: Vec<&Degree> = sampler.degrees.iter().filter(|x| **x < s).collect();
                if !larger.is_empty() {
                    t = (*pick(rng, &larger)).clone();
                } else if !smaller.is_empty() {
                    s = (*pick(rng, &smaller)).clone();
                }
            }
            b = b.c(c).d(d).s(s).t(t);
        }
        AxiomSchema::JointResponsibility => {
            let mut c = Vec::new();
            let mut d = Vec::new();
            for a in &sampler.agents {
                match rng.gen_range(0..3) {
                    0 => c.push(a.clone()),
                    1 => d.push(a.clone()),
                    _ => {}
                }
            }
            b = b.c(Coalition::from_agents(c)).d(Coalition::from_agents(d));
        }
        _ => {
            b = b.c(random_coalition(rng, &sampler.agents));
        }
    }
    b.restrict_to(schema)
}
