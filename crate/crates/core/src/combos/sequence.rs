use std::fmt;

/// A finite sequence of positive integers `(x_1, ..., x_k)`.
///
/// `u` is `n`-universal when every sequence of total size at most `n`
/// embeds into it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniversalSequence(Vec<usize>);

impl UniversalSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for UniversalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `u_0 = ()`, `u_1 = (1)`, `u_n = u_⌊n/2⌋ + (n) + u_(n-1-⌊n/2⌋)`.
pub fn universal_sequence(n: usize) -> UniversalSequence {
    fn build(n: usize, out: &mut Vec<usize>) {
        if n == 0 {
            return;
        }
        let half = n / 2;
        build(half, out);
        out.push(n);
        build(n - 1 - half, out);
    }
    let mut out = Vec::with_capacity(n);
    build(n, &mut out);
    UniversalSequence(out)
}

/// Whether `v` embeds into `u`: some increasing `f` has `v_i <= u_f(i)` for
/// all `i`. Matching each `v_i` to the leftmost unused `u_j >= v_i` is
/// optimal, so one left-to-right scan decides it.
pub fn embeds(v: &[usize], u: &[usize]) -> bool {
    let mut slots = u.iter();
    v.iter().all(|&x| slots.any(|&y| x <= y))
}
