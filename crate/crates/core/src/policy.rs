//! Policy representations, fixed-rule chump policies, and the canonical
//! policy file format shared by the solver, the exact oracle, and the CLI.

use crate::error::{Error, Result};
use crate::game::{ActionId, GameId, History, InfoStateKey, Player, ToMove};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};

/// A policy maps a player's information states to distributions over the
/// legal actions there. Lookups must return a valid distribution over exactly
/// the `legal` slice, in order.
pub trait Policy: Send + Sync {
    fn action_probabilities(&self, key: &InfoStateKey, legal: &[ActionId]) -> Vec<f64>;

    /// Number of table misses answered with a uniform fallback so far.
    /// Non-tabular policies report zero.
    fn miss_count(&self) -> u64 {
        0
    }
}

pub fn uniform_probs(n: usize) -> Vec<f64> {
    vec![1.0 / n as f64; n]
}

/// Uniform random over the legal actions at every information state.
#[derive(Clone, Copy, Debug, Default)]
pub struct UniformPolicy;

impl Policy for UniformPolicy {
    fn action_probabilities(&self, _key: &InfoStateKey, legal: &[ActionId]) -> Vec<f64> {
        assert!(!legal.is_empty(), "empty legal action set");
        uniform_probs(legal.len())
    }
}

/// Explicit table from information-state keys to probability vectors.
///
/// A lookup miss falls back to uniform over the legal actions and increments
/// the miss counter; misses are surfaced in reports, never silent.
#[derive(Debug)]
pub struct TabularPolicy {
    game: GameId,
    entries: BTreeMap<InfoStateKey, Vec<f64>>,
    misses: AtomicU64,
}

impl Clone for TabularPolicy {
    fn clone(&self) -> Self {
        TabularPolicy {
            game: self.game,
            entries: self.entries.clone(),
            misses: AtomicU64::new(0),
        }
    }
}

impl TabularPolicy {
    pub fn new(game: GameId) -> Self {
        TabularPolicy {
            game,
            entries: BTreeMap::new(),
            misses: AtomicU64::new(0),
        }
    }

    pub fn from_entries(game: GameId, entries: BTreeMap<InfoStateKey, Vec<f64>>) -> Self {
        TabularPolicy {
            game,
            entries,
            misses: AtomicU64::new(0),
        }
    }

    pub fn game_id(&self) -> GameId {
        self.game
    }

    pub fn insert(&mut self, key: InfoStateKey, probs: Vec<f64>) {
        debug_assert!(valid_distribution(&probs));
        self.entries.insert(key, probs);
    }

    pub fn get(&self, key: &InfoStateKey) -> Option<&[f64]> {
        self.entries.get(key).map(Vec::as_slice)
    }

    pub fn entries(&self) -> &BTreeMap<InfoStateKey, Vec<f64>> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Which seats this table carries entries for.
    pub fn coverage(&self) -> Coverage {
        let p1 = self.entries.keys().any(|k| k.player == Player::P1);
        let p2 = self.entries.keys().any(|k| k.player == Player::P2);
        match (p1, p2) {
            (true, false) => Coverage::One(Player::P1),
            (false, true) => Coverage::One(Player::P2),
            _ => Coverage::Both,
        }
    }

    /// A fully random policy: an independent point on the simplex at every
    /// enumerable information state. Deterministic in `seed`.
    pub fn random(game: GameId, seed: u64) -> Result<TabularPolicy> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut policy = TabularPolicy::new(game);
        for (key, legal) in enumerate_infostates(game)? {
            policy.insert(key, random_simplex_point(legal.len(), &mut rng));
        }
        Ok(policy)
    }

    /// Mixes `(1 - epsilon) * policy + epsilon * random simplex point` at
    /// every stored information state. Deterministic in (policy, epsilon,
    /// seed); with `epsilon = 1` the result depends only on the key set and
    /// the seed.
    pub fn perturb(&self, epsilon: f64, seed: u64) -> TabularPolicy {
        assert!(
            (0.0..=1.0).contains(&epsilon),
            "epsilon must lie in [0, 1], got {epsilon}"
        );
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut entries = BTreeMap::new();
        for (key, probs) in &self.entries {
            let noise = random_simplex_point(probs.len(), &mut rng);
            let mut mixed: Vec<f64> = probs
                .iter()
                .zip(&noise)
                .map(|(p, d)| (1.0 - epsilon) * p + epsilon * d)
                .collect();
            normalize(&mut mixed);
            entries.insert(key.clone(), mixed);
        }
        TabularPolicy::from_entries(self.game, entries)
    }

    /// Writes the canonical text form. Saving the same policy twice yields
    /// byte-identical files.
    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let player = match self.coverage() {
            Coverage::One(p) => p.number().to_string(),
            Coverage::Both => "both".to_string(),
        };
        let mut out = String::new();
        writeln!(out, "format_version\t{FORMAT_VERSION}").unwrap();
        writeln!(out, "game_id\t{}", self.game).unwrap();
        writeln!(out, "player\t{player}").unwrap();
        for (key, probs) in &self.entries {
            let rendered: Vec<String> = probs.iter().map(|p| format!("{p:.16e}")).collect();
            writeln!(out, "{}\t{}", key.to_line(), rendered.join(",")).unwrap();
        }
        out
    }

    pub fn load(path: &Path, game: GameId) -> Result<TabularPolicy> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config(format!("cannot read policy file {path:?}: {e}")))?;
        Self::from_text(&text, game)
            .map_err(|e| Error::format(format!("policy file {path:?}: {e}")))
    }

    pub fn from_text(text: &str, game: GameId) -> Result<TabularPolicy> {
        let mut lines = text.lines();
        let version = header(lines.next(), "format_version")?;
        if version != FORMAT_VERSION.to_string() {
            return Err(Error::format(format!(
                "unsupported format_version {version}"
            )));
        }
        let file_game = header(lines.next(), "game_id")?;
        if file_game != game.as_str() {
            return Err(Error::format(format!(
                "game mismatch: file is for {file_game}, expected {game}"
            )));
        }
        // The player header is redundant with the per-line keys; validated
        // for form only.
        let player = header(lines.next(), "player")?;
        if !matches!(player.as_str(), "1" | "2" | "both") {
            return Err(Error::format(format!("bad player header `{player}`")));
        }
        let mut entries = BTreeMap::new();
        for (lineno, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let (key_text, probs_text) = line.split_once('\t').ok_or_else(|| {
                Error::format(format!("line {}: missing tab separator", lineno + 4))
            })?;
            let key = InfoStateKey::parse_line(key_text)?;
            let probs: Vec<f64> = probs_text
                .split(',')
                .map(|p| {
                    p.parse::<f64>()
                        .map_err(|_| Error::format(format!("bad probability `{p}` at key {key_text}")))
                })
                .collect::<Result<_>>()?;
            if !valid_distribution(&probs) {
                return Err(Error::format(format!(
                    "probabilities at key {key_text} do not form a distribution (sum {})",
                    probs.iter().sum::<f64>()
                )));
            }
            entries.insert(key, probs);
        }
        Ok(TabularPolicy::from_entries(game, entries))
    }
}

impl Policy for TabularPolicy {
    fn action_probabilities(&self, key: &InfoStateKey, legal: &[ActionId]) -> Vec<f64> {
        assert!(!legal.is_empty(), "empty legal action set");
        match self.entries.get(key) {
            Some(probs) => {
                assert_eq!(
                    probs.len(),
                    legal.len(),
                    "stored vector at {key} has {} entries but {} actions are legal",
                    probs.len(),
                    legal.len()
                );
                probs.clone()
            }
            None => {
                self.misses.fetch_add(1, Ordering::Relaxed);
                uniform_probs(legal.len())
            }
        }
    }

    fn miss_count(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }
}

const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coverage {
    One(Player),
    Both,
}

fn header(line: Option<&str>, name: &str) -> Result<String> {
    let line = line.ok_or_else(|| Error::format(format!("missing {name} header")))?;
    let (key, value) = line
        .split_once('\t')
        .ok_or_else(|| Error::format(format!("malformed header line `{line}`")))?;
    if key != name {
        return Err(Error::format(format!(
            "expected {name} header, found `{key}`"
        )));
    }
    Ok(value.to_string())
}

pub fn valid_distribution(probs: &[f64]) -> bool {
    !probs.is_empty()
        && probs.iter().all(|&p| p >= 0.0 && p.is_finite())
        && (probs.iter().sum::<f64>() - 1.0).abs() <= 1e-9
}

fn normalize(probs: &mut [f64]) {
    let total: f64 = probs.iter().sum();
    for p in probs.iter_mut() {
        *p /= total;
    }
}

/// A point drawn uniformly from the probability simplex.
fn random_simplex_point(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut point: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.gen::<f64>()).ln())
        .collect();
    normalize(&mut point);
    point
}

/// Every (information-state key, legal actions) pair reachable in `game`,
/// found by exhaustive traversal. Fails for games too large to traverse.
pub fn enumerate_infostates(game: GameId) -> Result<BTreeMap<InfoStateKey, Vec<ActionId>>> {
    if !game.traversable() {
        return Err(Error::config(format!(
            "{game} is too large to enumerate information states"
        )));
    }
    let mut out = BTreeMap::new();
    let mut stack = vec![History::root(game)];
    while let Some(h) = stack.pop() {
        if h.is_terminal() {
            continue;
        }
        if let ToMove::Player(p) = h.to_move() {
            let key = h.infostate_key(p);
            let legal = h.legal_actions()?;
            if let Some(existing) = out.get(&key) {
                debug_assert_eq!(existing, &legal, "legal actions differ within {key}");
            } else {
                out.insert(key, legal.clone());
            }
            for a in legal {
                stack.push(h.apply(a)?);
            }
        } else {
            for (a, _) in h.chance_outcomes()? {
                stack.push(h.apply(a)?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChumpRule {
    AlwaysFold,
    AlwaysCall,
    UniformRandom,
}

impl ChumpRule {
    pub fn parse(s: &str) -> Result<ChumpRule> {
        match s {
            "always_fold" => Ok(ChumpRule::AlwaysFold),
            "always_call" => Ok(ChumpRule::AlwaysCall),
            "uniform_random" | "uniform" => Ok(ChumpRule::UniformRandom),
            other => Err(Error::config(format!("unknown chump rule `{other}`"))),
        }
    }
}

/// Builds a fixed-rule chump policy for `game`. Fold/call rules apply only to
/// the poker games; `uniform_random` applies everywhere.
pub fn make_chump(rule: ChumpRule, game: GameId) -> Result<Box<dyn Policy>> {
    if rule == ChumpRule::UniformRandom {
        return Ok(Box::new(UniformPolicy));
    }
    if !matches!(game, GameId::KuhnPoker | GameId::LeducPoker) {
        return Err(Error::config(format!(
            "rule {rule:?} requires a poker-like game, got {game}"
        )));
    }
    let mut table = TabularPolicy::new(game);
    for (key, legal) in enumerate_infostates(game)? {
        let pick = chump_action(rule, game, &key, &legal);
        let mut probs = vec![0.0; legal.len()];
        probs[legal.iter().position(|&a| a == pick).unwrap()] = 1.0;
        table.insert(key, probs);
    }
    Ok(Box::new(table))
}

fn chump_action(rule: ChumpRule, game: GameId, key: &InfoStateKey, legal: &[ActionId]) -> ActionId {
    match game {
        // Kuhn action 0 is pass (check, or fold facing a bet) and action 1 is
        // bet (or call facing a bet). A bet is outstanding when the
        // observation ends with the bet token.
        GameId::KuhnPoker => {
            let facing_bet = key.observation.ends_with("/b");
            match rule {
                ChumpRule::AlwaysFold => 0,
                ChumpRule::AlwaysCall => {
                    if facing_bet {
                        1
                    } else {
                        0
                    }
                }
                ChumpRule::UniformRandom => unreachable!(),
            }
        }
        // Leduc: fold = 0 (legal only when facing a raise), call/check = 1.
        GameId::LeducPoker => match rule {
            ChumpRule::AlwaysFold => {
                if legal.contains(&0) {
                    0
                } else {
                    1
                }
            }
            ChumpRule::AlwaysCall => 1,
            ChumpRule::UniformRandom => unreachable!(),
        },
        _ => unreachable!(),
    }
}
