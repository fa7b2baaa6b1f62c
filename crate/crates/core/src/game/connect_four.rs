//! Connect Four on a 7-column, 6-row board. Actions are column indices; a
//! piece falls to the lowest free row. Player 1 moves first. Payoff +-1 for a
//! win, 0 for a draw.

use super::{ActionId, Player, Rules, ToMove};

const COLS: usize = 7;
const ROWS: usize = 6;

/// player one-hot (2) + 42 cells x (empty, p1, p2)
pub(crate) const TENSOR_LEN: usize = 2 + COLS * ROWS * 3;

#[derive(Clone, PartialEq, Debug)]
pub(crate) struct C4State {
    /// cell(col, row) = board[col * ROWS + row], row 0 at the bottom
    board: [u8; COLS * ROWS],
    heights: [u8; COLS],
    moves: Vec<u8>,
    winner: Option<Player>,
}

impl C4State {
    fn cell(&self, col: isize, row: isize) -> u8 {
        if col < 0 || col >= COLS as isize || row < 0 || row >= ROWS as isize {
            0
        } else {
            self.board[col as usize * ROWS + row as usize]
        }
    }

    fn wins(&self, col: usize, row: usize, mark: u8) -> bool {
        const DIRS: [(isize, isize); 4] = [(1, 0), (0, 1), (1, 1), (1, -1)];
        let (c0, r0) = (col as isize, row as isize);
        DIRS.iter().any(|&(dc, dr)| {
            let mut run = 1;
            for sign in [1isize, -1] {
                let (mut c, mut r) = (c0 + sign * dc, r0 + sign * dr);
                while self.cell(c, r) == mark {
                    run += 1;
                    c += sign * dc;
                    r += sign * dr;
                }
            }
            run >= 4
        })
    }
}

impl Rules for C4State {
    fn new() -> Self {
        C4State {
            board: [0; COLS * ROWS],
            heights: [0; COLS],
            moves: Vec::new(),
            winner: None,
        }
    }

    fn is_terminal(&self) -> bool {
        self.winner.is_some() || self.moves.len() == COLS * ROWS
    }

    fn to_move(&self) -> ToMove {
        ToMove::Player(Player::from_index(self.moves.len() % 2))
    }

    fn legal_actions(&self) -> Vec<ActionId> {
        (0..COLS)
            .filter(|&c| self.heights[c] < ROWS as u8)
            .collect()
    }

    fn chance_outcomes(&self) -> Vec<(ActionId, f64)> {
        unreachable!("connect four has no chance nodes")
    }

    fn apply(&mut self, action: ActionId) {
        let mark = (self.moves.len() % 2) as u8 + 1;
        let row = self.heights[action] as usize;
        self.board[action * ROWS + row] = mark;
        self.heights[action] += 1;
        self.moves.push(action as u8);
        if self.wins(action, row, mark) {
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
