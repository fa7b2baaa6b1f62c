//! Tic-Tac-Toe on cells 0..9 in row-major order. Player 1 is X and moves
//! first. Payoff +-1 for a win, 0 for a draw.

use super::{ActionId, Player, Rules, ToMove};

const LINES: [[usize; 3]; 8] = [
    [0, 1, 2],
    [3, 4, 5],
    [6, 7, 8],
    [0, 3, 6],
    [1, 4, 7],
    [2, 5, 8],
    [0, 4, 8],
    [2, 4, 6],
];

/// player one-hot (2) + 9 cells x (empty, p1, p2)
pub(crate) const TENSOR_LEN: usize = 2 + 9 * 3;

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct TttState {
    board: [u8; 9],
    moves: Vec<u8>,
    winner: Option<Player>,
}

impl Rules for TttState {
    fn new() -> Self {
        TttState {
            board: [0; 9],
            moves: Vec::new(),
            winner: None,
        }
    }

    fn is_terminal(&self) -> bool {
        self.winner.is_some() || self.moves.len() == 9
    }

    fn to_move(&self) -> ToMove {
        ToMove::Player(Player::from_index(self.moves.len() % 2))
    }

    fn legal_actions(&self) -> Vec<ActionId> {
        (0..9).filter(|&c| self.board[c] == 0).collect()
    }

    fn chance_outcomes(&self) -> Vec<(ActionId, f64)> {
        unreachable!("tic-tac-toe has no chance nodes")
    }

    fn apply(&mut self, action: ActionId) {
        let mark = (self.moves.len() % 2) as u8 + 1;
        self.board[action] = mark;
        self.moves.push(action as u8);
        if LINES
            .iter()
            .any(|line| line.iter().all(|&c| self.board[c] == mark))
        {
            self.winner = Some(Player::from_index(mark as usize - 1));
        }
    }

    fn returns(&self) -> [f64; 2] {
        match self.winner {
            Some(Player::P1) => [1.0, -1.0],
            Some(Player::P2) => [-1.0, 1.0],
            None => [0.0, 0.0],
        }
    }

    fn observation(&self, _player: Player) -> String {
        let mut obs = String::new();
        for &m in &self.moves {
            obs.push_str("/m");
            obs.push((b'0' + m) as char);
        }
        obs
    }

    fn tensor(&self, player: Player) -> Vec<f64> {
        let mut t = vec![0.0; TENSOR_LEN];
        t[player.index()] = 1.0;
        for (c, &v) in self.board.iter().enumerate() {
            t[2 + 3 * c + v as usize] = 1.0;
        }
        t
    }
}
