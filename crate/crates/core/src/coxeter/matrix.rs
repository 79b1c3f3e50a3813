use std::fmt;
use std::str::FromStr;

use super::CoxeterError;

/// Largest supported rank; descent sets are stored as `u8` bitmasks.
pub const MAX_RANK: usize = 8;

/// Label used for `m(s,t) = infinity` (no relation between `s` and `t`).
pub const INFINITE_LABEL: u32 = 0;

/// Coxeter matrix on generators `0..rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    name: String,
    rank: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    /// Validates symmetry, unit diagonal and off-diagonal labels `>= 2`
    /// (or [`INFINITE_LABEL`]).
    pub fn new(name: impl Into<String>, rank: usize, entries: Vec<u32>) -> Result<Self, CoxeterError> {
        if rank == 0 {
            return Err(CoxeterError::InvalidMatrix("rank must be positive".into()));
        }
        if rank > MAX_RANK {
            return Err(CoxeterError::RankTooLarge {
                rank,
                limit: MAX_RANK,
            });
        }
        if entries.len() != rank * rank {
            return Err(CoxeterError::InvalidMatrix(format!(
                "expected {} entries, found {}",
                rank * rank,
                entries.len()
            )));
        }
        for i in 0..rank {
            if entries[i * rank + i] != 1 {
                return Err(CoxeterError::InvalidMatrix(format!("m({i},{i}) must be 1")));
            }
            for j in 0..rank {
                let m = entries[i * rank + j];
                if m != entries[j * rank + i] {
                    return Err(CoxeterError::InvalidMatrix(format!(
                        "m({i},{j}) != m({j},{i})"
                    )));
                }
                if i != j && m == 1 {
                    return Err(CoxeterError::InvalidMatrix(format!(
                        "m({i},{j}) must be at least 2"
                    )));
                }
            }
        }
        Ok(CoxeterMatrix {
            name: name.into(),
            rank,
            entries,
        })
    }

    /// Builds a matrix from the upper-triangle labels, row by row.
    pub fn from_upper_triangle(
        name: impl Into<String>,
        rank: usize,
        upper: &[u32],
    ) -> Result<Self, CoxeterError> {
        if upper.len() != rank * rank.saturating_sub(1) / 2 {
            return Err(CoxeterError::InvalidMatrix(format!(
                "rank {rank} needs {} upper-triangle labels, found {}",
                rank * rank.saturating_sub(1) / 2,
                upper.len()
            )));
        }
        let mut entries = vec![1; rank * rank];
        let mut it = upper.iter();
        for i in 0..rank {
            for j in i + 1..rank {
                let m = *it.next().unwrap();
                entries[i * rank + j] = m;
                entries[j * rank + i] = m;
            }
        }
        Self::new(name, rank, entries)
    }

    /// Linear diagram `0 - 1 - ... - (rank-1)` with the given edge labels.
    fn linear(name: String, labels: &[u32]) -> Result<Self, CoxeterError> {
        let rank = labels.len() + 1;
        let mut entries = vec![2; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        for (i, &m) in labels.iter().enumerate() {
            entries[i * rank + i + 1] = m;
            entries[(i + 1) * rank + i] = m;
        }
        Self::new(name, rank, entries)
    }

    /// `A_n`, `B_n`, `D_n` (`n <= 6`), `F4`, `H3`, `H4`, or `I2(m)` (`m <= 30`).
    pub fn preset(name: &str) -> Result<Self, CoxeterError> {
        let unknown = || CoxeterError::UnknownType(name.to_string());
        let s = name.trim();
        if let Some(inner) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = inner.trim().parse().map_err(|_| unknown())?;
            if !(2..=30).contains(&m) {
                return Err(unknown());
            }
            return Self::linear(format!("I2({m})"), &[m]);
        }
        match s {
            "H3" => return Self::linear(s.into(), &[5, 3]),
            "H4" => return Self::linear(s.into(), &[5, 3, 3]),
            "F4" => return Self::linear(s.into(), &[3, 4, 3]),
            _ => {}
        }
        let (family, n) = s.split_at(1.min(s.len()));
        let n: usize = n.parse().map_err(|_| unknown())?;
        if !(1..=6).contains(&n) {
            return Err(unknown());
        }
        match family {
            "A" => Self::linear(s.into(), &vec![3; n - 1]),
            "B" if n >= 2 => {
                let mut labels = vec![3; n - 1];
                labels[0] = 4;
                Self::linear(s.into(), &labels)
            }
            "D" if n >= 4 => {
                // Chain 0 - 1 - ... - (n-2), with n-1 attached to n-3.
                let mut m = Self::linear(s.into(), &vec![3; n - 2])?.grow();
                m.set(n - 3, n - 1, 3);
                Ok(m)
            }
            _ => Err(unknown()),
        }
    }

    /// Adds a generator commuting with all others.
    fn grow(self) -> Self {
        let r = self.rank + 1;
        let mut entries = vec![2; r * r];
        for i in 0..r {
            entries[i * r + i] = 1;
        }
        for i in 0..self.rank {
            for j in 0..self.rank {
                entries[i * r + j] = self.entries[i * self.rank + j];
            }
        }
        CoxeterMatrix {
            name: self.name,
            rank: r,
            entries,
        }
    }

    fn set(&mut self, i: usize, j: usize, m: u32) {
        self.entries[i * self.rank + j] = m;
        self.entries[j * self.rank + i] = m;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, s: usize, t: usize) -> u32 {
        self.entries[s * self.rank + t]
    }

    /// Distinct off-diagonal labels.
    pub fn labels(&self) -> Vec<u32> {
        let mut l: Vec<u32> = (0..self.rank)
            .flat_map(|i| (i + 1..self.rank).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        l.sort_unstable();
        l.dedup();
        l
    }

    /// Parses the text form: first line the rank, then the upper triangle of
    /// labels (whitespace separated; `inf` or `0` for infinity).
    pub fn parse_text(name: &str, text: &str) -> Result<Self, CoxeterError> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let rank: usize = tokens
            .next()
            .ok_or_else(|| CoxeterError::Parse("missing rank".into()))?
            .parse()
            .map_err(|_| CoxeterError::Parse("rank is not an integer".into()))?;
        let labels = tokens
            .map(|t| match t {
                "inf" | "oo" => Ok(INFINITE_LABEL),
                _ => t
                    .parse::<u32>()
                    .map_err(|_| CoxeterError::Parse(format!("bad label {t:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_upper_triangle(name, rank, &labels)
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.rank)?;
        for i in 0..self.rank {
            let row: Vec<String> = (i + 1..self.rank)
                .map(|j| match self.get(i, j) {
                    INFINITE_LABEL => "inf".to_string(),
                    m => m.to_string(),
                })
                .collect();
            if !row.is_empty() {
                writeln!(f, "{}", row.join(" "))?;
            }
        }
        Ok(())
    }
}

impl FromStr for CoxeterMatrix {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::preset(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        let h4 = CoxeterMatrix::preset("H4").unwrap();
        assert_eq!(h4.rank(), 4);
        assert_eq!((h4.get(0, 1), h4.get(1, 2), h4.get(2, 3)), (5, 3, 3));
        assert_eq!(h4.get(0, 2), 2);
        let d4 = CoxeterMatrix::preset("D4").unwrap();
        assert_eq!(d4.get(1, 3), 3);
        assert_eq!(d4.get(2, 3), 2);
        assert_eq!(CoxeterMatrix::preset("I2(7)").unwrap().get(0, 1), 7);
        assert!(CoxeterMatrix::preset("D3").is_err());
        assert!(CoxeterMatrix::preset("I2(31)").is_err());
        assert!(CoxeterMatrix::preset("X2").is_err());
        assert!(CoxeterMatrix::preset("A9").is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let h3 = CoxeterMatrix::preset("H3").unwrap();
        let text = h3.to_string();
        assert_eq!(text, "3\n5 2\n3\n");
        let back = CoxeterMatrix::parse_text("H3", &text).unwrap();
        assert_eq!(back, h3);
    }

    #[test]
    fn invalid_matrices() {
        assert!(CoxeterMatrix::from_upper_triangle("x", 2, &[1]).is_err());
        assert!(CoxeterMatrix::from_upper_triangle("x", 3, &[3]).is_err());
        assert!(matches!(
            CoxeterMatrix::from_upper_triangle("x", 9, &[2; 36]),
            Err(CoxeterError::RankTooLarge { .. })
        ));
        assert!(CoxeterMatrix::parse_text("x", "2\nfoo").is_err());
    }
}
