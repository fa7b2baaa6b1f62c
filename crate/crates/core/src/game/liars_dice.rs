//! Liar's Dice, one six-sided die per player.
//!
//! After the deal, players alternate starting with player 1. A bid names a
//! quantity and a face; bid ids `0..12` decode as `quantity = id / 6 + 1`,
//! `face = id % 6 + 1`, and each bid must exceed the previous id. Action 12
//! ("liar") challenges the last bid and ends the game: the bid stands if at
//! least `quantity` dice show the face, counting the highest face as wild.
//! Payoff is +-1.

use super::{ActionId, Player, Rules, ToMove};

const NUM_FACES: u8 = 6;
const NUM_BIDS: usize = 12;
pub(crate) const LIAR: ActionId = NUM_BIDS;

/// The highest face counts toward every bid, matching the configuration whose
/// uniform-policy NashConv is 1.56.
const HIGH_FACE_WILD: bool = true;

/// player one-hot (2) + own die one-hot (6) + one flag per bid id
pub(crate) const TENSOR_LEN: usize = 2 + 6 + NUM_BIDS;

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct DiceState {
    dice: [Option<u8>; 2],
    bids: Vec<u8>,
    liar_called: bool,
}

impl Rules for DiceState {
    fn new() -> Self {
        DiceState {
            dice: [None, None],
            bids: Vec::new(),
            liar_called: false,
        }
    }

    fn is_terminal(&self) -> bool {
        self.liar_called
    }

    fn to_move(&self) -> ToMove {
        if self.dice[0].is_none() || self.dice[1].is_none() {
            ToMove::Chance
        } else {
            ToMove::Player(Player::from_index(self.bids.len() % 2))
        }
    }

    fn legal_actions(&self) -> Vec<ActionId> {
        let mut actions: Vec<ActionId> = match self.bids.last() {
            None => (0..NUM_BIDS).collect(),
            Some(&last) => (last as usize + 1..NUM_BIDS).collect(),
        };
        if !self.bids.is_empty() {
            actions.push(LIAR);
        }
        actions
    }

    fn chance_outcomes(&self) -> Vec<(ActionId, f64)> {
        (0..NUM_FACES)
            .map(|f| (f as ActionId, 1.0 / NUM_FACES as f64))
            .collect()
    }

    fn apply(&mut self, action: ActionId) {
        if self.dice[0].is_none() {
            self.dice[0] = Some(action as u8);
        } else if self.dice[1].is_none() {
            self.dice[1] = Some(action as u8);
        } else if action == LIAR {
            self.liar_called = true;
        } else {
            self.bids.push(action as u8);
        }
    }

    fn returns(&self) -> [f64; 2] {
        let last_bid = *self.bids.last().expect("liar without a bid") as usize;
        let quantity = last_bid / NUM_FACES as usize + 1;
        let face = (last_bid % NUM_FACES as usize) as u8;
        let count = self
            .dice
            .iter()
            .map(|d| d.expect("undealt die at terminal"))
            .filter(|&d| d == face || (HIGH_FACE_WILD && d == NUM_FACES - 1))
            .count();
        // The caller is the player who said liar; bids.len() bids were made,
        // so the caller is the player at turn index bids.len().
        let caller = self.bids.len() % 2;
        let bidder_wins = count >= quantity;
        let caller_sign = if caller == 0 { 1.0 } else { -1.0 };
        let u1 = if bidder_wins { -caller_sign } else { caller_sign };
        [u1, -u1]
    }

    fn observation(&self, player: Player) -> String {
        let mut obs = String::new();
        if let Some(d) = self.dice[player.index()] {
            obs.push_str("/d");
            obs.push((b'0' + d) as char);
        }
        for &b in &self.bids {
            obs.push_str("/b");
            if b >= 10 {
                obs.push('1');
                obs.push((b'0' + b - 10) as char);
            } else {
                obs.push((b'0' + b) as char);
            }
        }
        if self.liar_called {
            obs.push_str("/L");
        }
        obs
    }

    fn tensor(&self, player: Player) -> Vec<f64> {
        let mut t = vec![0.0; TENSOR_LEN];
        t[player.index()] = 1.0;
        if let Some(d) = self.dice[player.index()] {
            t[2 + d as usize] = 1.0;
        }
        for &b in &self.bids {
            t[8 + b as usize] = 1.0;
        }
        t
    }
}
