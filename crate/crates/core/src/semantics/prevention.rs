//! Cheapest preventing profile search.
//!
//! A coalition profile prevents `φ` when no play in `φ`'s extension agrees
//! with it, i.e. it lies outside the projection of that extension onto the
//! coalition. Profiles are enumerated best-first in order of
//! `(cost, action indices in agent order)`; the first one outside the
//! projected set is the answer. Since every popped profile that fails is a
//! member of the projected set, the search pops at most
//! `|extension| + 1` profiles.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use super::Extension;
use crate::degree::Degree;
use crate::formula::Coalition;
use crate::game::{ActionProfile, Game};

/// A cheapest preventing profile and its cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prevention {
    pub cost: Degree,
    pub witness: ActionProfile,
}

struct Node {
    cost: Degree,
    /// Action index chosen for each coalition member.
    actions: Vec<usize>,
    /// Position of each member's choice in its cost-sorted action list.
    ranks: Vec<usize>,
    /// Lowest member position that may still be advanced.
    frontier: usize,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Node {}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.cost, &self.actions).cmp(&(&other.cost, &other.actions))
    }
}

pub(super) fn cheapest_preventing_profile(
    game: &Game,
    coalition: &Coalition,
    extension: &Extension,
    uniform_tax: bool,
) -> Option<Prevention> {
    let mut members: Vec<usize> = coalition
        .iter()
        .map(|a| game.agent_index(a).expect("coalition validated against game"))
        .collect();
    members.sort_unstable();

    let forbidden: HashSet<Vec<usize>> = extension
        .iter()
        .map(|play| members.iter().map(|&k| game.play_action(play, k)).collect())
        .collect();

    let unit = Degree::from_integer(1);
    let costs: Vec<Degree> = game
        .actions()
        .iter()
        .map(|a| if uniform_tax { &a.cost + &unit } else { a.cost.clone() })
        .collect();
    // Every member ranks the same action list.
    let mut order: Vec<usize> = (0..costs.len()).collect();
    order.sort_by(|&x, &y| (&costs[x], x).cmp(&(&costs[y], y)));

    let start = Node {
        cost: members.iter().map(|_| &costs[order[0]]).sum(),
        actions: vec![order[0]; members.len()],
        ranks: vec![0; members.len()],
        frontier: 0,
    };
    let mut heap = BinaryHeap::new();
    heap.push(Reverse(start));
    while let Some(Reverse(node)) = heap.pop() {
        if !forbidden.contains(&node.actions) {
            let witness = members
                .iter()
                .zip(&node.actions)
                .map(|(&k, &d)| (game.agents()[k].clone(), game.actions()[d].name.clone()))
                .collect();
            return Some(Prevention {
                cost: node.cost,
                witness,
            });
        }
        // Advancing only positions >= frontier generates every rank vector once.
        for j in node.frontier..members.len() {
            let next = node.ranks[j] + 1;
            if next >= order.len() {
                continue;
            }
            let mut ranks = node.ranks.clone();
            ranks[j] = next;
            let mut actions = node.actions.clone();
            actions[j] = order[next];
            let cost = Degree::from_rational(
                node.cost.as_rational() - costs[order[next - 1]].as_rational() + costs[order[next]].as_rational(),
            )
            .expect("costs stay nonnegative");
            heap.push(Reverse(Node {
                cost,
                actions,
                ranks,
                frontier: j,
            }));
        }
    }
    None
}
