//! Leduc poker: 6-card deck (2 suits x 3 ranks), ante 1, two betting rounds
//! with bet sizes 2 then 4 and at most two raises per round. One private card
//! each, one public board card between the rounds. At showdown a card pairing
//! the board wins, otherwise the higher rank wins; equal ranks split the pot.
//!
//! Cards are `0..6` with rank `card / 2` (0=J, 1=Q, 2=K) and suit `card % 2`.
//! Player actions: 0 = fold, 1 = call (or check), 2 = raise. Fold is legal
//! only when facing a raise.

use super::{ActionId, Player, Rules, ToMove};

const FOLD: ActionId = 0;
const CALL: ActionId = 1;
const RAISE: ActionId = 2;

const MAX_RAISES_PER_ROUND: u8 = 2;
const RAISE_SIZE: [u32; 2] = [2, 4];

/// player one-hot (2) + own card one-hot (6) + board card one-hot (6)
/// + per round: four action slots x (call, raise)
pub(crate) const TENSOR_LEN: usize = 2 + 6 + 6 + 2 * (4 * 2);

#[derive(Clone, Copy, PartialEq, Debug)]
enum Phase {
    Deal(u8),
    Betting,
    DealBoard,
    Showdown,
    Folded(Player),
}

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct LeducState {
    phase: Phase,
    cards: [Option<u8>; 2],
    board: Option<u8>,
    round: u8,
    raises: u8,
    checks: u8,
    to_act: u8,
    contrib: [u32; 2],
    /// Betting actions per round, for observations and tensors.
    seq: [Vec<u8>; 2],
}

impl LeducState {
    fn facing_bet(&self) -> bool {
        self.contrib[1 - self.to_act as usize] > self.contrib[self.to_act as usize]
    }

    fn dealt(&self, card: u8) -> bool {
        self.cards.contains(&Some(card)) || self.board == Some(card)
    }

    fn end_betting_round(&mut self) {
        if self.round == 0 {
            self.phase = Phase::DealBoard;
        } else {
            self.phase = Phase::Showdown;
        }
    }

    fn showdown_sign(&self) -> f64 {
        let rank = |c: u8| c / 2;
        let board_rank = rank(self.board.expect("showdown without board"));
        let r = [
            rank(self.cards[0].unwrap()),
            rank(self.cards[1].unwrap()),
        ];
        if r[0] == board_rank {
            1.0
        } else if r[1] == board_rank {
            -1.0
        } else if r[0] > r[1] {
            1.0
        } else if r[0] < r[1] {
            -1.0
        } else {
            0.0
        }
    }
}

impl Rules for LeducState {
    fn new() -> Self {
        LeducState {
            phase: Phase::Deal(0),
            cards: [None, None],
            board: None,
            round: 0,
            raises: 0,
            checks: 0,
            to_act: 0,
            contrib: [1, 1],
            seq: [Vec::new(), Vec::new()],
        }
    }

    fn is_terminal(&self) -> bool {
        matches!(self.phase, Phase::Showdown | Phase::Folded(_))
    }

    fn to_move(&self) -> ToMove {
        match self.phase {
            Phase::Deal(_) | Phase::DealBoard => ToMove::Chance,
            Phase::Betting => ToMove::Player(Player::from_index(self.to_act as usize)),
            Phase::Showdown | Phase::Folded(_) => unreachable!("to_move on terminal"),
        }
    }

    fn legal_actions(&self) -> Vec<ActionId> {
        let mut actions = Vec::with_capacity(3);
        if self.facing_bet() {
            actions.push(FOLD);
        }
        actions.push(CALL);
        if self.raises < MAX_RAISES_PER_ROUND {
            actions.push(RAISE);
        }
        actions
    }

    fn chance_outcomes(&self) -> Vec<(ActionId, f64)> {
        let remaining: Vec<u8> = (0..6u8).filter(|&c| !self.dealt(c)).collect();
        let p = 1.0 / remaining.len() as f64;
        remaining
            .into_iter()
            .map(|c| (c as ActionId, p))
            .collect()
    }

    fn apply(&mut self, action: ActionId) {
        match self.phase {
            Phase::Deal(i) => {
                self.cards[i as usize] = Some(action as u8);
                self.phase = if i == 0 { Phase::Deal(1) } else { Phase::Betting };
            }
            Phase::DealBoard => {
                self.board = Some(action as u8);
                self.round = 1;
                self.raises = 0;
                self.checks = 0;
                self.to_act = 0;
                self.phase = Phase::Betting;
            }
            Phase::Betting => {
                let me = self.to_act as usize;
                self.seq[self.round as usize].push(action as u8);
                match action {
                    FOLD => {
                        self.phase = Phase::Folded(Player::from_index(me));
                    }
                    CALL => {
                        if self.facing_bet() {
                            self.contrib[me] = self.contrib[1 - me];
                            self.end_betting_round();
                        } else {
                            self.checks += 1;
                            if self.checks == 2 {
                                self.end_betting_round();
                            } else {
                                self.to_act = 1 - self.to_act;
                            }
                        }
                    }
                    RAISE => {
                        self.contrib[me] =
                            self.contrib[1 - me] + RAISE_SIZE[self.round as usize];
                        self.raises += 1;
                        self.to_act = 1 - self.to_act;
                    }
                    other => unreachable!("illegal leduc action {other}"),
                }
            }
            Phase::Showdown | Phase::Folded(_) => unreachable!("apply on terminal"),
        }
    }

    fn returns(&self) -> [f64; 2] {
        let u1 = match self.phase {
            Phase::Folded(p) => {
                let loser = p.index();
                let stake = self.contrib[loser] as f64;
                if loser == 0 {
                    -stake
                } else {
                    stake
                }
            }
            Phase::Showdown => self.showdown_sign() * self.contrib[0] as f64,
            _ => unreachable!("returns on non-terminal"),
        };
        [u1, -u1]
    }

    fn observation(&self, player: Player) -> String {
        let mut obs = String::new();
        if let Some(c) = self.cards[player.index()] {
            obs.push_str("/c");
            obs.push((b'0' + c) as char);
        }
        for &a in &self.seq[0] {
            obs.push_str(action_token(a));
        }
        if let Some(b) = self.board {
            obs.push_str("/d");
            obs.push((b'0' + b) as char);
        }
        for &a in &self.seq[1] {
            obs.push_str(action_token(a));
        }
        obs
    }

    fn tensor(&self, player: Player) -> Vec<f64> {
        let mut t = vec![0.0; TENSOR_LEN];
        t[player.index()] = 1.0;
        if let Some(c) = self.cards[player.index()] {
            t[2 + c as usize] = 1.0;
        }
        if let Some(b) = self.board {
            t[8 + b as usize] = 1.0;
        }
        for round in 0..2 {
            let base = 14 + round * 8;
            for (slot, &a) in self.seq[round].iter().enumerate() {
                // fold ends the game, so only call/raise appear in
                // non-terminal encodings
                if a != FOLD as u8 {
                    t[base + 2 * slot + (a - 1) as usize] = 1.0;
                }
            }
        }
        t
    }
}

fn action_token(a: u8) -> &'static str {
    match a as ActionId {
        FOLD => "/f",
        CALL => "/c",
        RAISE => "/r",
        other => unreachable!("bad leduc action {other}"),
    }
}
