//! Lattice paths over up/down steps, their statistics, exhaustive
//! enumerators, and the dynamic program counting symmetric Dyck paths.

mod counting;
mod enumerate;

use std::fmt;
use std::str::FromStr;

pub use counting::{
    check_major_index_refinement, check_major_index_refinement_range, count_u_dp,
    count_u_enumeration, count_u_recurrence, count_u_recurrence_with, dyck_valley_distribution,
    GgCell, GgTable,
};
pub use enumerate::{
    enumerate_dyck, enumerate_nonnegative, enumerate_symmetric_dyck, DyckPaths, NonNegativePaths,
    SymmetricDyckPaths,
};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A finite word over `{U, D}` starting at height 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `p_0 = 0, p_1, ..., p_len`.
    pub fn heights(&self) -> Vec<i64> {
        heights(&self.steps)
    }

    pub fn end_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        is_nonnegative(&self.steps)
    }

    pub fn is_dyck(&self) -> bool {
        self.steps.len().is_multiple_of(2) && self.end_height() == 0 && self.is_nonnegative()
    }

    /// 1-based indices `i` with `step_i = D` and `step_{i+1} = U`.
    pub fn valleys(&self) -> Vec<usize> {
        valley_positions(&self.steps).collect()
    }

    pub fn valley_count(&self) -> usize {
        valley_count(&self.steps)
    }

    /// Sum of the valley positions.
    pub fn major_index(&self) -> usize {
        major_index(&self.steps)
    }

    /// Reverses the word and swaps `U` and `D`, reflecting the path about
    /// its midpoint.
    pub fn mirror(&self) -> Path {
        Path::new(self.steps.iter().rev().map(|s| s.flipped()).collect())
    }

    /// True iff this is a Dyck path whose height profile is a palindrome.
    pub fn is_symmetric(&self) -> bool {
        if !self.is_dyck() {
            return false;
        }
        let h = self.heights();
        h.iter().eq(h.iter().rev())
    }

    /// The symmetric Dyck path whose first `len` steps are `half`.
    ///
    /// # Panics
    ///
    /// If `half` dips below the axis.
    pub fn complete_half(half: &Path) -> Path {
        assert!(
            half.is_nonnegative(),
            "half-path {half} goes below the axis"
        );
        let mut steps = half.steps.clone();
        steps.extend(half.mirror().steps);
        Path::new(steps)
    }

    /// The first `n` steps.
    pub fn prefix(&self, n: usize) -> Path {
        Path::new(self.steps[..n.min(self.len())].to_vec())
    }

    /// Draws the path with `/` and `\` on a character grid, x-axis on the
    /// bottom row. Empty for paths that never leave the axis.
    pub fn render_ascii(&self) -> String {
        let h = self.heights();
        let top = h.iter().copied().max().unwrap_or(0);
        let bottom = h.iter().copied().min().unwrap_or(0);
        if top == bottom {
            return String::new();
        }
        let rows = (top - bottom) as usize;
        let mut grid = vec![vec![' '; self.len()]; rows];
        for (x, step) in self.steps.iter().enumerate() {
            // the band a step occupies is [min(h_x, h_{x+1}), max)
            let band = h[x].min(h[x + 1]) - bottom;
            let row = rows - 1 - band as usize;
            grid[row][x] = match step {
                Step::Up => '/',
                Step::Down => '\\',
            };
        }
        let mut out = String::new();
        for line in grid {
            let s: String = line.into_iter().collect();
            out.push_str(s.trim_end());
            out.push('\n');
        }
        out
    }
}

pub(crate) fn heights(steps: &[Step]) -> Vec<i64> {
    let mut h = Vec::with_capacity(steps.len() + 1);
    h.push(0);
    let mut cur = 0;
    for s in steps {
        cur += s.delta();
        h.push(cur);
    }
    h
}

pub(crate) fn is_nonnegative(steps: &[Step]) -> bool {
    let mut cur = 0;
    steps.iter().all(|s| {
        cur += s.delta();
        cur >= 0
    })
}

pub(crate) fn valley_positions(steps: &[Step]) -> impl Iterator<Item = usize> + '_ {
    steps
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Step::Down && w[1] == Step::Up)
        .map(|(i, _)| i + 1)
}

pub fn valley_count(steps: &[Step]) -> usize {
    valley_positions(steps).count()
}

pub fn major_index(steps: &[Step]) -> usize {
    valley_positions(steps).sum()
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::InvalidStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Path::new)
    }
}
