use std::collections::HashMap;

use crate::coxeter::{iter_bits, BruhatIntervals, ElementId, GroupTable};

/// Canonical representative of the orbit of `(x, y)` under
/// `(x, y) -> (x^-1, y^-1)`: the pair whose `y` has the smaller id, and for
/// involutions `y` the pair whose `x` has the smaller id.
#[inline]
pub fn is_inverse_canonical(g: &GroupTable, x: ElementId, y: ElementId) -> bool {
    let yi = g.inverse(y);
    y < yi || (y == yi && x <= g.inverse(x))
}

/// `LR(x) ⊇ LR(y)`.
#[inline]
pub fn is_extremal_for(g: &GroupTable, x: ElementId, y: ElementId) -> bool {
    let (lx, ly) = (g.lr_descents(x), g.lr_descents(y));
    lx & ly == ly
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalCount {
    /// Pairs `x <= y` with `LR(x) ⊇ LR(y)`, diagonal included.
    pub all: u64,
    /// Those pairs with `y <= y^-1`: one `y` per inverse class, every
    /// extremal `x` below it. This is the number of cases a KL run visits.
    pub inverse_reduced: u64,
    /// Orbits of extremal pairs under simultaneous inversion.
    pub orbits: u64,
}

/// Bitset views over the group used to enumerate extremal pairs without
/// testing every `(x, y)` individually.
pub struct ExtremalIndex<'a> {
    g: &'a GroupTable,
    iv: &'a BruhatIntervals,
    supersets: HashMap<u16, Vec<u64>>,
    canonical_x: Vec<u64>,
}

impl<'a> ExtremalIndex<'a> {
    pub fn new(g: &'a GroupTable, iv: &'a BruhatIntervals) -> Self {
        let words = g.size().div_ceil(64);
        let mut supersets: HashMap<u16, Vec<u64>> = HashMap::new();
        for y in g.elements() {
            let mask = g.lr_descents(y);
            supersets.entry(mask).or_insert_with(|| {
                let mut bits = vec![0u64; words];
                for x in g.elements() {
                    if g.lr_descents(x) & mask == mask {
                        bits[x.index() / 64] |= 1 << (x.index() % 64);
                    }
                }
                bits
            });
        }
        let mut canonical_x = vec![0u64; words];
        for x in g.elements() {
            if x <= g.inverse(x) {
                canonical_x[x.index() / 64] |= 1 << (x.index() % 64);
            }
        }
        ExtremalIndex {
            g,
            iv,
            supersets,
            canonical_x,
        }
    }

    /// All `x <= y` with `LR(x) ⊇ LR(y)`.
    pub fn extremal_below(&self, y: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        let sup = &self.supersets[&self.g.lr_descents(y)];
        let lower = self.iv.lower_bits(y);
        let bits: Vec<u64> = lower.iter().zip(sup).map(|(a, b)| a & b).collect();
        iter_bits(&bits).collect::<Vec<_>>().into_iter()
    }

    /// The extremal `x` for `y` when `y <= y^-1`, and nothing otherwise.
    pub fn canonical_extremal_below(&self, y: ElementId) -> Vec<ElementId> {
        if y > self.g.inverse(y) {
            return Vec::new();
        }
        self.extremal_below(y).collect()
    }

    pub fn count(&self) -> ExtremalCount {
        let mut c = ExtremalCount {
            all: 0,
            inverse_reduced: 0,
            orbits: 0,
        };
        for y in self.g.elements() {
            let sup = &self.supersets[&self.g.lr_descents(y)];
            let lower = self.iv.lower_bits(y);
            let n: u64 = lower
                .iter()
                .zip(sup)
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum();
            c.all += n;
            let yi = self.g.inverse(y);
            if y < yi {
                c.inverse_reduced += n;
                c.orbits += n;
            } else if y == yi {
                c.inverse_reduced += n;
                c.orbits += lower
                    .iter()
                    .zip(sup)
                    .zip(&self.canonical_x)
                    .map(|((a, b), c)| (a & b & c).count_ones() as u64)
                    .sum::<u64>();
            }
        }
        c
    }
}

/// Extremal pairs `(x, y)` with `y <= y^-1`, grouped by ascending `y`.
pub fn extremal_pairs<'a>(
    g: &'a GroupTable,
    iv: &'a BruhatIntervals,
) -> impl Iterator<Item = (ElementId, ElementId)> + 'a {
    let index = ExtremalIndex::new(g, iv);
    g.elements().flat_map(move |y| {
        index
            .canonical_extremal_below(y)
            .into_iter()
            .map(move |x| (x, y))
    })
}

pub fn count_extremal_pairs(g: &GroupTable, iv: &BruhatIntervals) -> ExtremalCount {
    ExtremalIndex::new(g, iv).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{bruhat_leq, build_group, CoxeterMatrix};

    fn group(name: &str) -> GroupTable {
        build_group(&CoxeterMatrix::preset(name).unwrap()).unwrap()
    }

    /// Scan of all pairs against the definition: (all, y <= y^-1, orbits).
    fn brute_force(g: &GroupTable) -> (u64, u64, u64) {
        let (mut all, mut reduced, mut orbits) = (0, 0, 0);
        for y in g.elements() {
            for x in g.elements() {
                if bruhat_leq(g, x, y) && is_extremal_for(g, x, y) {
                    all += 1;
                    if y <= g.inverse(y) {
                        reduced += 1;
                    }
                    if is_inverse_canonical(g, x, y) {
                        orbits += 1;
                    }
                }
            }
        }
        (all, reduced, orbits)
    }

    fn triple(c: ExtremalCount) -> (u64, u64, u64) {
        (c.all, c.inverse_reduced, c.orbits)
    }

    #[test]
    fn a1_has_two_extremal_pairs() {
        let g = group("A1");
        let iv = BruhatIntervals::new(&g);
        let c = count_extremal_pairs(&g, &iv);
        assert_eq!(c.all, 2);
        assert_eq!(c.inverse_reduced, 2);
        let pairs: Vec<_> = extremal_pairs(&g, &iv).collect();
        assert_eq!(pairs, vec![(ElementId(0), ElementId(0)), (ElementId(1), ElementId(1))]);
    }

    #[test]
    fn i2_5_count_from_brute_force() {
        // Scan of all 100 pairs: 10 diagonal pairs plus (s, sts) and (st, stst)
        // for both choices of s. Keeping one y per inverse class drops the
        // diagonal pair and the (st, stst) pair of s2s1 and s2s1s2s1.
        let g = group("I2(5)");
        let iv = BruhatIntervals::new(&g);
        assert_eq!(brute_force(&g), (14, 11, 11));
        assert_eq!(triple(count_extremal_pairs(&g, &iv)), (14, 11, 11));
        assert_eq!(extremal_pairs(&g, &iv).count(), 11);
    }

    #[test]
    fn counts_match_brute_force() {
        for name in ["A3", "B3", "H3", "I2(8)", "D4"] {
            let g = group(name);
            let iv = BruhatIntervals::new(&g);
            let expect = brute_force(&g);
            assert_eq!(triple(count_extremal_pairs(&g, &iv)), expect, "{name}");
            assert_eq!(extremal_pairs(&g, &iv).count() as u64, expect.1, "{name}");
        }
    }
}
