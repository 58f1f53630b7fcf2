use super::{Path, Step};

/// Dyck paths of semi-length `n` in lexicographic order with `U < D`,
/// from `U^n D^n` to `(UD)^n`.
#[derive(Clone, Debug)]
pub struct DyckPaths {
    n: usize,
    word: Vec<Step>,
    state: State,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

pub fn enumerate_dyck(n: usize) -> DyckPaths {
    DyckPaths::new(n)
}

impl DyckPaths {
    pub fn new(n: usize) -> Self {
        let mut word = vec![Step::Up; n];
        word.resize(2 * n, Step::Down);
        Self {
            n,
            word,
            state: State::Fresh,
        }
    }

    /// Advances and borrows the next word without allocating.
    pub fn next_word(&mut self) -> Option<&[Step]> {
        match self.state {
            State::Fresh => self.state = State::Running,
            State::Running => {
                if !self.advance() {
                    self.state = State::Done;
                }
            }
            State::Done => {}
        }
        (self.state != State::Done).then_some(self.word.as_slice())
    }

    // Flips the rightmost flippable U to D and completes the suffix with
    // the smallest valid tail (remaining U's, then D's).
    fn advance(&mut self) -> bool {
        let mut height: i64 = self
            .word
            .iter()
            .map(|s| if *s == Step::Up { 1 } else { -1 })
            .sum();
        let mut ups: usize = self.n;
        for i in (0..self.word.len()).rev() {
            // undo step i to get the height before it
            match self.word[i] {
                Step::Up => {
                    height -= 1;
                    ups -= 1;
                    if height >= 1 {
                        self.word[i] = Step::Down;
                        let ups_left = self.n - ups;
                        for (offset, slot) in self.word[i + 1..].iter_mut().enumerate() {
                            *slot = if offset < ups_left {
                                Step::Up
                            } else {
                                Step::Down
                            };
                        }
                        return true;
                    }
                }
                Step::Down => height += 1,
            }
        }
        false
    }
}

impl Iterator for DyckPaths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        self.next_word().map(|w| Path::new(w.to_vec()))
    }
}

/// Paths of length `n` that never go below the axis, lexicographic with
/// `U < D`.
#[derive(Clone, Debug)]
pub struct NonNegativePaths {
    word: Vec<Step>,
    state: State,
}

pub fn enumerate_nonnegative(n: usize) -> NonNegativePaths {
    NonNegativePaths::new(n)
}

impl NonNegativePaths {
    pub fn new(n: usize) -> Self {
        Self {
            word: vec![Step::Up; n],
            state: State::Fresh,
        }
    }

    pub fn next_word(&mut self) -> Option<&[Step]> {
        match self.state {
            State::Fresh => self.state = State::Running,
            State::Running => {
                if !self.advance() {
                    self.state = State::Done;
                }
            }
            State::Done => {}
        }
        (self.state != State::Done).then_some(self.word.as_slice())
    }

    fn advance(&mut self) -> bool {
        let mut height: i64 = self
            .word
            .iter()
            .map(|s| if *s == Step::Up { 1 } else { -1 })
            .sum();
        for i in (0..self.word.len()).rev() {
            match self.word[i] {
                Step::Up => {
                    height -= 1;
                    if height >= 1 {
                        self.word[i] = Step::Down;
                        self.word[i + 1..].fill(Step::Up);
                        return true;
                    }
                }
                Step::Down => height += 1,
            }
        }
        false
    }
}

impl Iterator for NonNegativePaths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        self.next_word().map(|w| Path::new(w.to_vec()))
    }
}

/// Symmetric Dyck paths of semi-length `n`, one per non-negative half-path,
/// in lexicographic order.
#[derive(Clone, Debug)]
pub struct SymmetricDyckPaths {
    halves: NonNegativePaths,
    word: Vec<Step>,
}

pub fn enumerate_symmetric_dyck(n: usize) -> SymmetricDyckPaths {
    SymmetricDyckPaths::new(n)
}

impl SymmetricDyckPaths {
    pub fn new(n: usize) -> Self {
        Self {
            halves: NonNegativePaths::new(n),
            word: vec![Step::Up; 2 * n],
        }
    }

    pub fn next_word(&mut self) -> Option<&[Step]> {
        let half = self.halves.next_word()?;
        let n = half.len();
        self.word[..n].copy_from_slice(half);
        for (slot, step) in self.word[n..].iter_mut().rev().zip(half) {
            *slot = step.flipped();
        }
        Some(&self.word)
    }

    /// The half-path that produced the most recent word.
    pub fn current_half(&self) -> &[Step] {
        &self.word[..self.word.len() / 2]
    }
}

impl Iterator for SymmetricDyckPaths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        self.next_word().map(|w| Path::new(w.to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn words(it: impl Iterator<Item = Path>) -> Vec<String> {
        it.map(|p| p.to_string()).collect()
    }

    // All words of length len over {U, D} filtered by a predicate.
    fn brute(len: usize, keep: impl Fn(&Path) -> bool) -> Vec<String> {
        let mut out = Vec::new();
        for bits in 0u32..(1 << len) {
            let steps = (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 0 {
                        Step::Up
                    } else {
                        Step::Down
                    }
                })
                .collect();
            let p = Path::new(steps);
            if keep(&p) {
                out.push(p.to_string());
            }
        }
        out
    }

    #[test]
    fn small_dyck_sets() {
        assert_eq!(words(enumerate_dyck(0)), vec![""]);
        assert_eq!(words(enumerate_dyck(1)), vec!["UD"]);
        let three = words(enumerate_dyck(3));
        assert_eq!(three.len(), 5);
        assert!(three.contains(&"UUUDDD".to_string()));
        assert!(three.contains(&"UDUDUD".to_string()));
    }

    #[test]
    fn dyck_matches_brute_force_in_order() {
        // bit order makes brute() lexicographic with U < D
        for n in 0..=7 {
            assert_eq!(
                words(enumerate_dyck(n)),
                brute(2 * n, Path::is_dyck),
                "n={n}"
            );
        }
    }

    #[test]
    fn nonnegative_matches_brute_force() {
        for n in 0..=12 {
            assert_eq!(
                words(enumerate_nonnegative(n)),
                brute(n, Path::is_nonnegative),
                "n={n}"
            );
        }
    }

    #[test]
    fn symmetric_matches_filter() {
        for n in 1..=7 {
            assert_eq!(
                words(enumerate_symmetric_dyck(n)),
                brute(2 * n, Path::is_symmetric),
                "n={n}"
            );
        }
    }

    #[test]
    fn symmetric_small_sets() {
        let set = |n| {
            words(enumerate_symmetric_dyck(n))
                .into_iter()
                .collect::<BTreeSet<_>>()
        };
        assert_eq!(set(2), ["UUDD", "UDUD"].map(String::from).into());
        assert_eq!(
            set(3),
            ["UUUDDD", "UUDUDD", "UDUDUD"].map(String::from).into()
        );
        assert_eq!(set(4).len(), 6);
    }

    #[test]
    fn exhausted_iterators_stay_empty() {
        let mut it = enumerate_dyck(2);
        assert_eq!(it.by_ref().count(), 2);
        assert!(it.next().is_none());
        assert!(it.next_word().is_none());
    }

    #[test]
    fn current_half_tracks_the_word() {
        let mut it = enumerate_symmetric_dyck(3);
        it.next_word();
        assert_eq!(it.current_half(), &[Step::Up; 3]);
    }
}
