//! Edge colors and the alphabets they are drawn from.
//!
//! Every graph carries a single color variant. Owned colors ([`Color`]) are
//! used when building graphs and words; borrowed colors ([`ColorRef`]) are
//! what graphs hand out and what automata read.

use std::fmt;

use smallvec::SmallVec;

/// Weight vector for the disjunction-of-mean-payoff objective. Dimensions up
/// to four are stored inline.
pub type WeightVector = SmallVec<[i64; 4]>;

/// An owned edge color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    /// The single color of safety games.
    Unit,
    /// A parity priority.
    Priority(u32),
    /// A mean-payoff weight.
    Weight(i64),
    /// A (priority, weight) pair.
    Pair(u32, i64),
    /// One weight per mean-payoff dimension.
    Vector(WeightVector),
}

impl Color {
    pub fn vector(weights: &[i64]) -> Color {
        Color::Vector(SmallVec::from_slice(weights))
    }

    pub fn as_ref(&self) -> ColorRef<'_> {
        match self {
            Color::Unit => ColorRef::Unit,
            Color::Priority(p) => ColorRef::Priority(*p),
            Color::Weight(w) => ColorRef::Weight(*w),
            Color::Pair(p, w) => ColorRef::Pair(*p, *w),
            Color::Vector(v) => ColorRef::Vector(v),
        }
    }

    pub fn kind(&self) -> ColorKind {
        self.as_ref().kind()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_ref().fmt(f)
    }
}

/// A borrowed edge color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColorRef<'a> {
    Unit,
    Priority(u32),
    Weight(i64),
    Pair(u32, i64),
    Vector(&'a [i64]),
}

impl ColorRef<'_> {
    pub fn to_owned(self) -> Color {
        match self {
            ColorRef::Unit => Color::Unit,
            ColorRef::Priority(p) => Color::Priority(p),
            ColorRef::Weight(w) => Color::Weight(w),
            ColorRef::Pair(p, w) => Color::Pair(p, w),
            ColorRef::Vector(v) => Color::vector(v),
        }
    }

    pub fn kind(self) -> ColorKind {
        match self {
            ColorRef::Unit => ColorKind::Unit,
            ColorRef::Priority(_) => ColorKind::Priority,
            ColorRef::Weight(_) => ColorKind::Weight,
            ColorRef::Pair(..) => ColorKind::Pair,
            ColorRef::Vector(v) => ColorKind::Vector(v.len()),
        }
    }

    /// The priority component, if the color has one.
    pub fn priority(self) -> Option<u32> {
        match self {
            ColorRef::Priority(p) | ColorRef::Pair(p, _) => Some(p),
            _ => None,
        }
    }

    /// The scalar weight carried by this color: the weight itself, the weight
    /// of a pair, or the selected component of a vector.
    pub fn weight(self, component: Option<usize>) -> Option<i64> {
        match (self, component) {
            (ColorRef::Weight(w), None) | (ColorRef::Pair(_, w), None) => Some(w),
            (ColorRef::Vector(v), Some(i)) => v.get(i).copied(),
            _ => None,
        }
    }
}

impl fmt::Display for ColorRef<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorRef::Unit => write!(f, "ε"),
            ColorRef::Priority(p) => write!(f, "{p}"),
            ColorRef::Weight(w) => write!(f, "{w}"),
            ColorRef::Pair(p, w) => write!(f, "({p},{w})"),
            ColorRef::Vector(v) => {
                write!(f, "(")?;
                for (i, w) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// The shape of a color, without its bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColorKind {
    Unit,
    Priority,
    Weight,
    Pair,
    /// Weight vectors of the given dimension.
    Vector(usize),
}

/// A finite set of colors: a color kind together with its bounds.
///
/// Alphabets are small enough to enumerate for every objective used at desk
/// scale, which is what DOT export and reachable-graph construction rely on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `{ε}`.
    Unit,
    /// Priorities `[0, d]`.
    Priorities { d: u32 },
    /// Weights `[-N, N]`.
    Weights { max_weight: i64 },
    /// Pairs `[0, d] × [-N, N]`.
    Pairs { d: u32, max_weight: i64 },
    /// Vectors `[-N, N]^dim`.
    Vectors { dim: usize, max_weight: i64 },
}

impl Alphabet {
    pub fn kind(&self) -> ColorKind {
        match *self {
            Alphabet::Unit => ColorKind::Unit,
            Alphabet::Priorities { .. } => ColorKind::Priority,
            Alphabet::Weights { .. } => ColorKind::Weight,
            Alphabet::Pairs { .. } => ColorKind::Pair,
            Alphabet::Vectors { dim, .. } => ColorKind::Vector(dim),
        }
    }

    pub fn contains(&self, color: ColorRef<'_>) -> bool {
        let weight_ok = |w: i64, n: i64| -n <= w && w <= n;
        match (*self, color) {
            (Alphabet::Unit, ColorRef::Unit) => true,
            (Alphabet::Priorities { d }, ColorRef::Priority(p)) => p <= d,
            (Alphabet::Weights { max_weight }, ColorRef::Weight(w)) => weight_ok(w, max_weight),
            (Alphabet::Pairs { d, max_weight }, ColorRef::Pair(p, w)) => {
                p <= d && weight_ok(w, max_weight)
            }
            (Alphabet::Vectors { dim, max_weight }, ColorRef::Vector(v)) => {
                v.len() == dim && v.iter().all(|&w| weight_ok(w, max_weight))
            }
            _ => false,
        }
    }

    /// Number of letters, saturating at `u64::MAX`.
    pub fn size(&self) -> u64 {
        let span = |n: i64| 2 * n as u64 + 1;
        match *self {
            Alphabet::Unit => 1,
            Alphabet::Priorities { d } => d as u64 + 1,
            Alphabet::Weights { max_weight } => span(max_weight),
            Alphabet::Pairs { d, max_weight } => (d as u64 + 1).saturating_mul(span(max_weight)),
            Alphabet::Vectors { dim, max_weight } => {
                let mut size = 1u64;
                for _ in 0..dim {
                    size = size.saturating_mul(span(max_weight));
                }
                size
            }
        }
    }

    /// Position of `color` in [`Alphabet::letters`] order.
    pub fn index_of(&self, color: ColorRef<'_>) -> Option<usize> {
        if !self.contains(color) {
            return None;
        }
        let span = |n: i64| 2 * n + 1;
        let index = match (*self, color) {
            (Alphabet::Unit, _) => 0,
            (Alphabet::Priorities { .. }, ColorRef::Priority(p)) => p as i64,
            (Alphabet::Weights { max_weight }, ColorRef::Weight(w)) => w + max_weight,
            (Alphabet::Pairs { max_weight, .. }, ColorRef::Pair(p, w)) => {
                p as i64 * span(max_weight) + w + max_weight
            }
            (Alphabet::Vectors { max_weight, .. }, ColorRef::Vector(v)) => v
                .iter()
                .fold(0, |acc, &w| acc * span(max_weight) + w + max_weight),
            _ => unreachable!("contains() checked the kind"),
        };
        Some(index as usize)
    }

    /// All letters in a fixed order: priorities ascending, weights ascending,
    /// pairs and vectors lexicographically.
    pub fn letters(&self) -> Vec<Color> {
        match *self {
            Alphabet::Unit => vec![Color::Unit],
            Alphabet::Priorities { d } => (0..=d).map(Color::Priority).collect(),
            Alphabet::Weights { max_weight } => {
                (-max_weight..=max_weight).map(Color::Weight).collect()
            }
            Alphabet::Pairs { d, max_weight } => (0..=d)
                .flat_map(|p| (-max_weight..=max_weight).map(move |w| Color::Pair(p, w)))
                .collect(),
            Alphabet::Vectors { dim, max_weight } => {
                let mut out = vec![WeightVector::new()];
                for _ in 0..dim {
                    out = out
                        .into_iter()
                        .flat_map(|prefix| {
                            (-max_weight..=max_weight).map(move |w| {
                                let mut next = prefix.clone();
                                next.push(w);
                                next
                            })
                        })
                        .collect();
                }
                out.into_iter().map(Color::Vector).collect()
            }
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Alphabet::Unit => write!(f, "{{ε}}"),
            Alphabet::Priorities { d } => write!(f, "[0,{d}]"),
            Alphabet::Weights { max_weight } => write!(f, "[-{max_weight},{max_weight}]"),
            Alphabet::Pairs { d, max_weight } => {
                write!(f, "[0,{d}]×[-{max_weight},{max_weight}]")
            }
            Alphabet::Vectors { dim, max_weight } => {
                write!(f, "[-{max_weight},{max_weight}]^{dim}")
            }
        }
    }
}
