//! Extensive-form game abstraction and the five built-in games.
//!
//! A [`History`] is a ground state: the full action sequence from the empty
//! root, chance actions included. Histories are immutable values; applying an
//! action yields a new history and replaying the stored action sequence from
//! the root reproduces the identical state.
//!
//! Information states are exposed two ways: as a canonical text key
//! ([`InfoStateKey`]) used for policy tables and search trees, and as a
//! fixed-length numeric encoding ([`FeatureVector`]) used as evaluator input.
//! Observation strings are append-only along a history: if `h` is a prefix of
//! `h'`, then the observation of `h` is a string prefix of the observation of
//! `h'`. Belief enumeration relies on this.

mod connect_four;
mod kuhn;
mod leduc;
mod liars_dice;
mod tic_tac_toe;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

pub type ActionId = usize;

/// One of the two acting players. Chance is not a `Player`; it appears only
/// through [`ToMove::Chance`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    P1,
    P2,
}

impl Player {
    pub fn index(self) -> usize {
        match self {
            Player::P1 => 0,
            Player::P2 => 1,
        }
    }

    pub fn opponent(self) -> Player {
        match self {
            Player::P1 => Player::P2,
            Player::P2 => Player::P1,
        }
    }

    pub fn from_index(i: usize) -> Player {
        match i {
            0 => Player::P1,
            1 => Player::P2,
            _ => panic!("player index out of range: {i}"),
        }
    }

    /// 1-based seat number, used in file formats and reports.
    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn from_number(n: u8) -> Result<Player> {
        match n {
            1 => Ok(Player::P1),
            2 => Ok(Player::P2),
            _ => Err(Error::format(format!("player must be 1 or 2, got {n}"))),
        }
    }

    pub const BOTH: [Player; 2] = [Player::P1, Player::P2];
}

/// Who acts at a non-terminal history.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ToMove {
    Player(Player),
    Chance,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GameId {
    #[serde(rename = "kuhn_poker")]
    KuhnPoker,
    #[serde(rename = "leduc_poker")]
    LeducPoker,
    #[serde(rename = "liars_dice")]
    LiarsDice,
    #[serde(rename = "tic_tac_toe")]
    TicTacToe,
    #[serde(rename = "connect_four")]
    ConnectFour,
}

pub const ALL_GAMES: [GameId; 5] = [
    GameId::KuhnPoker,
    GameId::LeducPoker,
    GameId::LiarsDice,
    GameId::TicTacToe,
    GameId::ConnectFour,
];

impl GameId {
    pub fn as_str(self) -> &'static str {
        match self {
            GameId::KuhnPoker => "kuhn_poker",
            GameId::LeducPoker => "leduc_poker",
            GameId::LiarsDice => "liars_dice",
            GameId::TicTacToe => "tic_tac_toe",
            GameId::ConnectFour => "connect_four",
        }
    }

    pub fn spec(self) -> GameSpec {
        match self {
            GameId::KuhnPoker => GameSpec {
                game_id: self,
                num_players: 2,
                max_utility: 2.0,
                min_utility: -2.0,
                max_game_length: 5,
                num_distinct_actions: 2,
                tensor_len: kuhn::TENSOR_LEN,
            },
            GameId::LeducPoker => GameSpec {
                game_id: self,
                num_players: 2,
                max_utility: 13.0,
                min_utility: -13.0,
                max_game_length: 11,
                num_distinct_actions: 3,
                tensor_len: leduc::TENSOR_LEN,
            },
            GameId::LiarsDice => GameSpec {
                game_id: self,
                num_players: 2,
                max_utility: 1.0,
                min_utility: -1.0,
                max_game_length: 15,
                num_distinct_actions: 13,
                tensor_len: liars_dice::TENSOR_LEN,
            },
            GameId::TicTacToe => GameSpec {
                game_id: self,
                num_players: 2,
                max_utility: 1.0,
                min_utility: -1.0,
                max_game_length: 9,
                num_distinct_actions: 9,
                tensor_len: tic_tac_toe::TENSOR_LEN,
            },
            GameId::ConnectFour => GameSpec {
                game_id: self,
                num_players: 2,
                max_utility: 1.0,
                min_utility: -1.0,
                max_game_length: 42,
                num_distinct_actions: 7,
                tensor_len: connect_four::TENSOR_LEN,
            },
        }
    }

    /// Whether the full game tree is small enough for exact traversal.
    pub fn traversable(self) -> bool {
        !matches!(self, GameId::ConnectFour)
    }
}

impl FromStr for GameId {
    type Err = Error;

    fn from_str(s: &str) -> Result<GameId> {
        ALL_GAMES
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| {
                Error::config(format!(
                    "unknown game id `{s}` (known: {})",
                    ALL_GAMES.map(|g| g.as_str()).join(", ")
                ))
            })
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Static facts about one game.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GameSpec {
    pub game_id: GameId,
    pub num_players: usize,
    /// Largest terminal utility, in natural game units (chips or +-1).
    pub max_utility: f64,
    pub min_utility: f64,
    /// Upper bound on the length of any playable history, in plies.
    pub max_game_length: usize,
    /// Size of the per-player action id space (policy head width).
    pub num_distinct_actions: usize,
    /// Length of the information-state feature encoding.
    pub tensor_len: usize,
}

/// Canonical identifier of one information state for one player.
///
/// Two histories map to the same key for player `i` exactly when player `i`'s
/// observation sequences along them are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct InfoStateKey {
    pub player: Player,
    pub observation: String,
}

impl InfoStateKey {
    pub fn new(player: Player, observation: String) -> Self {
        debug_assert!(
            !observation.contains('\t') && !observation.contains('\n'),
            "observation strings must not contain tabs or newlines"
        );
        InfoStateKey {
            player,
            observation,
        }
    }

    /// Text form used in policy files: `<seat>:<observation>`.
    pub fn to_line(&self) -> String {
        format!("{}:{}", self.player.number(), self.observation)
    }

    pub fn parse_line(s: &str) -> Result<InfoStateKey> {
        let (seat, obs) = s
            .split_once(':')
            .ok_or_else(|| Error::format(format!("malformed infostate key `{s}`")))?;
        let n: u8 = seat
            .parse()
            .map_err(|_| Error::format(format!("malformed infostate key `{s}`")))?;
        Ok(InfoStateKey::new(Player::from_number(n)?, obs.to_string()))
    }
}

impl fmt::Display for InfoStateKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.player.number(), self.observation)
    }
}

/// Fixed-length numeric encoding of one information state for one player.
/// The length depends only on the game id.
#[derive(Clone, PartialEq, Debug)]
pub struct FeatureVector {
    pub values: Vec<f64>,
}

/// Internal rule set contract each built-in game implements on its state.
///
/// `History` validates preconditions and dispatches here; these methods may
/// assume the call is legal.
pub(crate) trait Rules: Clone {
    fn new() -> Self;
    fn is_terminal(&self) -> bool;
    fn to_move(&self) -> ToMove;
    fn legal_actions(&self) -> Vec<ActionId>;
    fn chance_outcomes(&self) -> Vec<(ActionId, f64)>;
    fn apply(&mut self, action: ActionId);
    fn returns(&self) -> [f64; 2];
    /// Append-only observation string for `player`.
    fn observation(&self, player: Player) -> String;
    fn tensor(&self, player: Player) -> Vec<f64>;
}

#[derive(Clone, PartialEq, Debug)]
enum State {
    Kuhn(kuhn::KuhnState),
    Leduc(leduc::LeducState),
    LiarsDice(liars_dice::DiceState),
    TicTacToe(tic_tac_toe::TttState),
    ConnectFour(connect_four::C4State),
}

macro_rules! dispatch {
    ($state:expr, $s:ident => $e:expr) => {
        match $state {
            State::Kuhn($s) => $e,
            State::Leduc($s) => $e,
            State::LiarsDice($s) => $e,
            State::TicTacToe($s) => $e,
            State::ConnectFour($s) => $e,
        }
    };
}

/// A ground state: the full action sequence from the root, chance included,
/// plus the derived game state it reproduces.
#[derive(Clone, PartialEq, Debug)]
pub struct History {
    game: GameId,
    actions: Vec<ActionId>,
    state: State,
}

impl History {
    /// The empty root history of `game`.
    pub fn root(game: GameId) -> History {
        let state = match game {
            GameId::KuhnPoker => State::Kuhn(kuhn::KuhnState::new()),
            GameId::LeducPoker => State::Leduc(leduc::LeducState::new()),
            GameId::LiarsDice => State::LiarsDice(liars_dice::DiceState::new()),
            GameId::TicTacToe => State::TicTacToe(tic_tac_toe::TttState::new()),
            GameId::ConnectFour => State::ConnectFour(connect_four::C4State::new()),
        };
        History {
            game,
            actions: Vec::new(),
            state,
        }
    }

    pub fn game_id(&self) -> GameId {
        self.game
    }

    pub fn spec(&self) -> GameSpec {
        self.game.spec()
    }

    /// The full action sequence from the root, chance actions included.
    pub fn actions(&self) -> &[ActionId] {
        &self.actions
    }

    pub fn is_terminal(&self) -> bool {
        dispatch!(&self.state, s => s.is_terminal())
    }

    /// Who acts here. Panics on terminal histories; check `is_terminal` first.
    pub fn to_move(&self) -> ToMove {
        assert!(!self.is_terminal(), "to_move called on a terminal history");
        dispatch!(&self.state, s => s.to_move())
    }

    /// Ordered legal actions, sorted by action id.
    pub fn legal_actions(&self) -> Result<Vec<ActionId>> {
        if self.is_terminal() {
            return Err(Error::contract(
                "legal_actions called on a terminal history",
            ));
        }
        let actions = match self.to_move() {
            ToMove::Chance => dispatch!(&self.state, s => s.chance_outcomes())
                .into_iter()
                .map(|(a, _)| a)
                .collect(),
            ToMove::Player(_) => dispatch!(&self.state, s => s.legal_actions()),
        };
        debug_assert!(!actions.is_empty());
        debug_assert!(actions.windows(2).all(|w| w[0] < w[1]));
        Ok(actions)
    }

    /// Applies `action`, returning the successor history. `self` is unchanged.
    pub fn apply(&self, action: ActionId) -> Result<History> {
        let legal = self.legal_actions()?;
        if !legal.contains(&action) {
            return Err(Error::contract(format!(
                "action {action} is illegal here (legal: {legal:?})"
            )));
        }
        let mut next = self.clone();
        dispatch!(&mut next.state, s => s.apply(action));
        next.actions.push(action);
        Ok(next)
    }

    /// Terminal utilities `(u_1, u_2)` in game units; always sums to zero.
    pub fn returns(&self) -> Result<[f64; 2]> {
        if !self.is_terminal() {
            return Err(Error::contract("returns called on a non-terminal history"));
        }
        Ok(dispatch!(&self.state, s => s.returns()))
    }

    /// Chance outcomes `(action, probability)`; probabilities sum to one.
    pub fn chance_outcomes(&self) -> Result<Vec<(ActionId, f64)>> {
        if self.is_terminal() || self.to_move() != ToMove::Chance {
            return Err(Error::contract(
                "chance_outcomes called on a non-chance node",
            ));
        }
        let outcomes = dispatch!(&self.state, s => s.chance_outcomes());
        debug_assert!({
            let total: f64 = outcomes.iter().map(|(_, p)| p).sum();
            (total - 1.0).abs() < 1e-12 && outcomes.iter().all(|&(_, p)| p > 0.0)
        });
        Ok(outcomes)
    }

    /// Player `player`'s observation of this history, as an append-only string.
    pub fn observation(&self, player: Player) -> String {
        dispatch!(&self.state, s => s.observation(player))
    }

    pub fn infostate_key(&self, player: Player) -> InfoStateKey {
        InfoStateKey::new(player, self.observation(player))
    }

    pub fn infostate_tensor(&self, player: Player) -> FeatureVector {
        let values = dispatch!(&self.state, s => s.tensor(player));
        debug_assert_eq!(values.len(), self.spec().tensor_len);
        FeatureVector { values }
    }
}

/// Parses a game id and returns its spec plus the root history.
pub fn new_game(game_id: &str) -> Result<(GameSpec, History)> {
    let id: GameId = game_id.parse()?;
    Ok((id.spec(), History::root(id)))
}
