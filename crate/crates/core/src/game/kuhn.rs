//! Kuhn poker: 3-card deck (J=0, Q=1, K=2), one ante each, one bet of 1.
//!
//! Player actions: 0 = pass (check, or fold facing a bet), 1 = bet (or call
//! facing a bet). Chance actions 0..3 deal the private cards.

use super::{ActionId, Player, Rules, ToMove};

const PASS: ActionId = 0;
const BET: ActionId = 1;

/// player one-hot (2) + own card one-hot (3) + three betting slots x (pass, bet)
pub(crate) const TENSOR_LEN: usize = 2 + 3 + 3 * 2;

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct KuhnState {
    cards: [Option<u8>; 2],
    seq: Vec<u8>,
}

impl KuhnState {
    fn showdown_sign(&self) -> f64 {
        if self.cards[0] > self.cards[1] {
            1.0
        } else {
            -1.0
        }
    }
}

impl Rules for KuhnState {
    fn new() -> Self {
        KuhnState {
            cards: [None, None],
            seq: Vec::new(),
        }
    }

    fn is_terminal(&self) -> bool {
        matches!(
            self.seq.as_slice(),
            [PASS_U8, PASS_U8]
                | [BET_U8, _]
                | [PASS_U8, BET_U8, _]
        )
    }

    fn to_move(&self) -> ToMove {
        if self.cards[0].is_none() || self.cards[1].is_none() {
            ToMove::Chance
        } else {
            ToMove::Player(Player::from_index(self.seq.len() % 2))
        }
    }

    fn legal_actions(&self) -> Vec<ActionId> {
        vec![PASS, BET]
    }

    fn chance_outcomes(&self) -> Vec<(ActionId, f64)> {
        let dealt = self.cards[0];
        (0..3u8)
            .filter(|c| Some(*c) != dealt)
            .map(|c| (c as ActionId, if dealt.is_none() { 1.0 / 3.0 } else { 0.5 }))
            .collect()
    }

    fn apply(&mut self, action: ActionId) {
        if self.cards[0].is_none() {
            self.cards[0] = Some(action as u8);
        } else if self.cards[1].is_none() {
            self.cards[1] = Some(action as u8);
        } else {
            self.seq.push(action as u8);
        }
    }

    fn returns(&self) -> [f64; 2] {
        let u1 = match self.seq.as_slice() {
            [PASS_U8, PASS_U8] => self.showdown_sign(),
            [BET_U8, PASS_U8] => 1.0,
            [BET_U8, BET_U8] => 2.0 * self.showdown_sign(),
            [PASS_U8, BET_U8, PASS_U8] => -1.0,
            [PASS_U8, BET_U8, BET_U8] => 2.0 * self.showdown_sign(),
            other => unreachable!("returns on non-terminal sequence {other:?}"),
        };
        [u1, -u1]
    }

    fn observation(&self, player: Player) -> String {
        let mut obs = String::new();
        if let Some(c) = self.cards[player.index()] {
            obs.push_str("/c");
            obs.push((b'0' + c) as char);
        }
        for &a in &self.seq {
            obs.push_str(if a == PASS_U8 { "/p" } else { "/b" });
        }
        obs
    }

    fn tensor(&self, player: Player) -> Vec<f64> {
        let mut t = vec![0.0; TENSOR_LEN];
        t[player.index()] = 1.0;
        if let Some(c) = self.cards[player.index()] {
            t[2 + c as usize] = 1.0;
        }
        for (slot, &a) in self.seq.iter().enumerate() {
            t[5 + 2 * slot + a as usize] = 1.0;
        }
        t
    }
}

const PASS_U8: u8 = PASS as u8;
const BET_U8: u8 = BET as u8;
