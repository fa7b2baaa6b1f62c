//! Ground-truth oracle: expected values, exact best responses, NashConv and
//! exploitability by full tree traversal. No sampling anywhere; everything
//! else in the crate is tested against this module.

use crate::error::{Error, Result};
use crate::game::{ActionId, GameId, History, InfoStateKey, Player, ToMove};
use crate::policy::{Policy, TabularPolicy};
use serde::Serialize;
use std::collections::HashMap;

/// Result of one exact best-response computation for `responder` against a
/// fixed opponent policy.
pub struct BestResponseResult {
    /// Value of the best responder, in game units.
    pub br_value: f64,
    /// Deterministic best-response policy: probability one on a single
    /// action at every responder information state, ties broken by lowest
    /// action id. Total over all enumerable responder infostates.
    pub br_policy: TabularPolicy,
    /// `br_value` minus the responder's game value, when the game value is
    /// known: how much the fixed policy concedes relative to optimal play.
    pub gain_over_game_value: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExploitabilityReport {
    pub game_id: GameId,
    /// `[BR by player 1 against pi_2, BR by player 2 against pi_1]`.
    pub per_player_br_values: [f64; 2],
    /// Sum of the per-player best-response values; zero exactly at a Nash
    /// equilibrium.
    pub nashconv: f64,
    /// NashConv divided by the number of players.
    pub exploitability: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub game_value_estimate: Option<f64>,
}

pub struct NashConvResult {
    pub report: ExploitabilityReport,
    pub best_responses: [BestResponseResult; 2],
}

fn require_traversable(game: GameId) -> Result<()> {
    if !game.traversable() {
        return Err(Error::config(format!(
            "{game} is too large for exact traversal; use sampled evaluation"
        )));
    }
    Ok(())
}

/// Exact expected value of the joint policy `(pi_1, pi_2)` for both players:
/// the expectation of terminal utilities over all terminals, weighted by
/// policy and chance reach.
pub fn expected_value(game: GameId, pi_1: &dyn Policy, pi_2: &dyn Policy) -> Result<[f64; 2]> {
    require_traversable(game)?;
    let policies: [&dyn Policy; 2] = [pi_1, pi_2];
    fn walk(h: &History, policies: &[&dyn Policy; 2]) -> Result<[f64; 2]> {
        if h.is_terminal() {
            return h.returns();
        }
        let mut total = [0.0, 0.0];
        match h.to_move() {
            ToMove::Chance => {
                for (a, p) in h.chance_outcomes()? {
                    let sub = walk(&h.apply(a)?, policies)?;
                    total[0] += p * sub[0];
                    total[1] += p * sub[1];
                }
            }
            ToMove::Player(player) => {
                let legal = h.legal_actions()?;
                let probs =
                    policies[player.index()].action_probabilities(&h.infostate_key(player), &legal);
                for (&a, p) in legal.iter().zip(probs) {
                    if p == 0.0 {
                        continue;
                    }
                    let sub = walk(&h.apply(a)?, policies)?;
                    total[0] += p * sub[0];
                    total[1] += p * sub[1];
                }
            }
        }
        Ok(total)
    }
    walk(&History::root(game), &policies)
}

/// Exact best response for `responder` against `pi_opponent`.
///
/// Standard two-pass traversal: a forward pass accumulates opponent-and-
/// chance reach per history, grouped by responder information state; the
/// backward pass picks the argmax counterfactual-value action per information
/// state, ties broken by lowest action id.
pub fn best_response(
    game: GameId,
    pi_opponent: &dyn Policy,
    responder: Player,
    game_value_for_responder: Option<f64>,
) -> Result<BestResponseResult> {
    require_traversable(game)?;
    let mut br = BrComputation {
        game,
        responder,
        pi_opponent,
        infosets: HashMap::new(),
        chosen: HashMap::new(),
        values: HashMap::new(),
    };
    br.forward(&History::root(game), 1.0)?;

    // Decide every enumerated infostate so the returned policy is total,
    // including infostates with zero counterfactual reach.
    let keys: Vec<InfoStateKey> = br.infosets.keys().cloned().collect();
    for key in keys {
        br.decide(&key)?;
    }
    let br_value = br.value(&History::root(game))?;

    let mut br_policy = TabularPolicy::new(game);
    for (key, (legal, _)) in &br.infosets {
        let pick = br.chosen[key];
        let mut probs = vec![0.0; legal.len()];
        probs[legal.iter().position(|&a| a == pick).unwrap()] = 1.0;
        br_policy.insert(key.clone(), probs);
    }

    Ok(BestResponseResult {
        br_value,
        br_policy,
        gain_over_game_value: game_value_for_responder.map(|v| br_value - v),
    })
}

/// Runs [`best_response`] for both seats and assembles the report:
/// `nashconv = br_value_1 + br_value_2`, `exploitability = nashconv / 2`.
pub fn nash_conv(game: GameId, pi_1: &dyn Policy, pi_2: &dyn Policy) -> Result<NashConvResult> {
    let game_value = None;
    let br1 = best_response(game, pi_2, Player::P1, game_value)?;
    let br2 = best_response(game, pi_1, Player::P2, game_value)?;
    let nashconv = br1.br_value + br2.br_value;
    Ok(NashConvResult {
        report: ExploitabilityReport {
            game_id: game,
            per_player_br_values: [br1.br_value, br2.br_value],
            nashconv,
            exploitability: nashconv / 2.0,
            game_value_estimate: None,
        },
        best_responses: [br1, br2],
    })
}

struct BrComputation<'a> {
    game: GameId,
    responder: Player,
    pi_opponent: &'a dyn Policy,
    /// key -> (legal actions, histories in the infostate with their
    /// chance-and-opponent reach).
    infosets: HashMap<InfoStateKey, (Vec<ActionId>, Vec<(History, f64)>)>,
    chosen: HashMap<InfoStateKey, ActionId>,
    /// Memoized responder value per history (keyed by action sequence).
    values: HashMap<Box<[u8]>, f64>,
}

impl<'a> BrComputation<'a> {
    /// Enumerates the full tree, recording every responder decision node
    /// under its information state with its counterfactual reach.
    fn forward(&mut self, h: &History, cf_reach: f64) -> Result<()> {
        if h.is_terminal() {
            return Ok(());
        }
        match h.to_move() {
            ToMove::Chance => {
                for (a, p) in h.chance_outcomes()? {
                    self.forward(&h.apply(a)?, cf_reach * p)?;
                }
            }
            ToMove::Player(player) if player == self.responder => {
                let key = h.infostate_key(player);
                let legal = h.legal_actions()?;
                let entry = self
                    .infosets
                    .entry(key)
                    .or_insert_with(|| (legal.clone(), Vec::new()));
                entry.1.push((h.clone(), cf_reach));
                for a in legal {
                    self.forward(&h.apply(a)?, cf_reach)?;
                }
            }
            ToMove::Player(opponent) => {
                let legal = h.legal_actions()?;
                let probs = self
                    .pi_opponent
                    .action_probabilities(&h.infostate_key(opponent), &legal);
                for (&a, p) in legal.iter().zip(probs) {
                    self.forward(&h.apply(a)?, cf_reach * p)?;
                }
            }
        }
        Ok(())
    }

    /// Picks the argmax counterfactual-value action at `key`, deciding
    /// deeper infostates on demand.
    fn decide(&mut self, key: &InfoStateKey) -> Result<ActionId> {
        if let Some(&a) = self.chosen.get(key) {
            return Ok(a);
        }
        let (legal, members) = self.infosets[key].clone();
        let mut best = (legal[0], f64::NEG_INFINITY);
        for &a in &legal {
            let mut q = 0.0;
            for (h, w) in &members {
                if *w != 0.0 {
                    q += w * self.value(&h.apply(a)?)?;
                }
            }
            if q > best.1 {
                best = (a, q);
            }
        }
        self.chosen.insert(key.clone(), best.0);
        Ok(best.0)
    }

    /// Responder value of `h` under (best response, opponent policy).
    fn value(&mut self, h: &History) -> Result<f64> {
        let memo_key: Box<[u8]> = h.actions().iter().map(|&a| a as u8).collect();
        if let Some(&v) = self.values.get(&memo_key) {
            return Ok(v);
        }
        let v = if h.is_terminal() {
            h.returns()?[self.responder.index()]
        } else {
            match h.to_move() {
                ToMove::Chance => {
                    let mut total = 0.0;
                    for (a, p) in h.chance_outcomes()? {
                        total += p * self.value(&h.apply(a)?)?;
                    }
                    total
                }
                ToMove::Player(player) if player == self.responder => {
                    let a = self.decide(&h.infostate_key(player))?;
                    self.value(&h.apply(a)?)?
                }
                ToMove::Player(opponent) => {
                    let legal = h.legal_actions()?;
                    let probs = self
                        .pi_opponent
                        .action_probabilities(&h.infostate_key(opponent), &legal);
                    let mut total = 0.0;
                    for (&a, p) in legal.iter().zip(probs) {
                        if p != 0.0 {
                            total += p * self.value(&h.apply(a)?)?;
                        }
                    }
                    total
                }
            }
        };
        self.values.insert(memo_key, v);
        Ok(v)
    }

    fn chosen(&self) -> &HashMap<InfoStateKey, ActionId> {
        &self.chosen
    }
}

// Suppress an unused-method warning without removing the accessor; tests in
// this crate use it through `decide`'s public effects.
#[allow(dead_code)]
fn _chosen_accessor_used(br: &BrComputation) {
    let _ = br.chosen();
}
