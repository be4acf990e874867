use crate::automaton::{AutomatonError, SafetyAutomaton, StateId};
use crate::color::{Alphabet, ColorRef};

use super::tree::{Leaf, UniversalTree};

/// Separating automaton for the parity objective over priorities `[0, d]`.
///
/// States are the leaves of `U(n, ⌈d/2⌉)`, numbered left to right; the
/// initial state is the leftmost leaf. Reading priority `p` with
/// `j = ⌈p/2⌉` compares truncations of leaves: an odd `p` keeps the
/// components `x_h..x_j` and moves to the leftmost leaf whose truncation is
/// strictly larger; an even `p` keeps `x_h..x_{j+1}` and moves to the
/// leftmost leaf whose truncation is at least as large. Since every node of
/// the tree spans a contiguous range of leaves, both are a single range
/// lookup.
#[derive(Clone, Debug)]
pub struct ParitySeparator {
    d: u32,
    tree: UniversalTree,
}

/// The parity separator for graphs with at most `n` vertices.
pub fn parity_separator(n: usize, d: u32) -> Result<ParitySeparator, AutomatonError> {
    if n == 0 {
        return Err(AutomatonError::InvalidParameter("parity separator needs n >= 1".into()));
    }
    let height = d.div_ceil(2) as usize;
    let tree = UniversalTree::new(n, height);
    if tree.leaf_count() >= u32::MAX as u64 {
        return Err(AutomatonError::TooLarge(format!("U({n},{height}) has too many leaves")));
    }
    Ok(ParitySeparator { d, tree })
}

impl ParitySeparator {
    pub fn tree(&self) -> &UniversalTree {
        &self.tree
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn leaf(&self, state: StateId) -> Leaf {
        self.tree.leaf(state as u64).expect("state is a leaf number")
    }

    pub fn state_of(&self, leaf: &Leaf) -> Option<StateId> {
        self.tree.index_of(leaf).map(|i| i as usize)
    }

    /// Transition on a priority.
    pub fn step(&self, state: StateId, priority: u32) -> Option<StateId> {
        if priority > self.d {
            return None;
        }
        let h = self.tree.height();
        let j = priority.div_ceil(2) as usize;
        if priority.is_multiple_of(2) {
            let (start, _) = self.tree.node_range(state as u64, h - j);
            Some(start as usize)
        } else {
            let (start, count) = self.tree.node_range(state as u64, h - j + 1);
            let next = start + count;
            (next < self.tree.leaf_count()).then_some(next as usize)
        }
    }
}

impl SafetyAutomaton for ParitySeparator {
    fn alphabet(&self) -> Alphabet {
        Alphabet::Priorities { d: self.d }
    }

    fn state_count(&self) -> usize {
        self.tree.leaf_count() as usize
    }

    fn initial(&self) -> StateId {
        0
    }

    fn delta(&self, state: StateId, letter: ColorRef<'_>) -> Option<StateId> {
        match letter {
            ColorRef::Priority(p) => self.step(state, p),
            _ => None,
        }
    }

    fn describe_state(&self, state: StateId) -> String {
        self.leaf(state).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::run;
    use crate::color::Color;

    fn word(ps: &[u32]) -> Vec<Color> {
        ps.iter().map(|&p| Color::Priority(p)).collect()
    }

    #[test]
    fn two_leaves_two_priorities() {
        let a = parity_separator(2, 2).unwrap();
        assert_eq!(a.state_count(), 2);
        assert_eq!(a.leaf(0), Leaf(vec![0]));
        assert_eq!(a.leaf(1), Leaf(vec![1]));
        for x in 0..2 {
            assert_eq!(a.step(x, 0), Some(x));
            assert_eq!(a.step(x, 2), Some(0));
        }
        assert_eq!(a.step(0, 1), Some(1));
        assert_eq!(a.step(1, 1), None);
    }

    #[test]
    fn two_odd_letters_rejected() {
        let a = parity_separator(2, 2).unwrap();
        assert_eq!(run(&a, &word(&[1, 1])).unwrap(), None);
    }

    #[test]
    fn odd_even_alternation_accepted() {
        let a = parity_separator(2, 2).unwrap();
        for k in 0..20 {
            let w: Vec<u32> = (0..k).flat_map(|_| [1, 2]).collect();
            assert!(run(&a, &word(&w)).unwrap().is_some());
        }
    }

    #[test]
    fn zero_is_identity_and_top_even_resets() {
        let a = parity_separator(5, 6).unwrap();
        for q in 0..a.state_count() {
            assert_eq!(a.step(q, 0), Some(q));
            assert_eq!(a.step(q, 6), Some(0));
        }
    }

    #[test]
    fn odd_top_priority_climbs_the_root_level() {
        // d = 3: h = 2 and priority 3 advances the top component
        let a = parity_separator(3, 3).unwrap();
        let mut q = 0;
        let mut tops = vec![a.leaf(q).component(2)];
        while let Some(next) = a.step(q, 3) {
            q = next;
            tops.push(a.leaf(q).component(2));
        }
        assert!(tops.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(tops.len(), 3);
    }

    #[test]
    fn out_of_range_priority_is_undefined() {
        let a = parity_separator(2, 2).unwrap();
        assert_eq!(a.step(0, 3), None);
        assert!(parity_separator(0, 2).is_err());
    }
}
