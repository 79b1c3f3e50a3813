use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::ring::{AlgebraicReal, NumberField};

use super::matrix::INFINITE_LABEL;
use super::{CoxeterError, CoxeterMatrix};

/// Positive roots of a finite Coxeter group in the basis of simple roots,
/// together with the permutation each simple reflection induces on them.
#[derive(Debug)]
pub struct RootSystem {
    field: Arc<NumberField>,
    /// Indices `0..rank` are the simple roots.
    positive: Vec<Vec<AlgebraicReal>>,
    /// `reflect[s][i]` is the index of `s(beta_i)`, or `None` for `beta_i = alpha_s`.
    reflect: Vec<Vec<Option<u16>>>,
}

/// Hard bound on the number of positive roots tracked in inversion sets.
pub const MAX_POSITIVE_ROOTS: usize = 128;

impl RootSystem {
    pub fn build(m: &CoxeterMatrix) -> Result<Self, CoxeterError> {
        let n = m.rank();
        if m.labels().contains(&INFINITE_LABEL) {
            return Err(CoxeterError::InfiniteType);
        }
        let field = NumberField::for_labels(m.labels());
        // cartan[i][j] = 2 B(alpha_i, alpha_j) = -2cos(pi/m_ij).
        let cartan: Vec<Vec<AlgebraicReal>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| -&AlgebraicReal::two_cos_pi_over(&field, m.get(i, j)))
                    .collect()
            })
            .collect();
        if !is_positive_definite(&cartan) {
            return Err(CoxeterError::InfiniteType);
        }

        let zero = AlgebraicReal::zero(&field);
        let one = AlgebraicReal::from_integer(&field, 1);
        let mut positive: Vec<Vec<AlgebraicReal>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { one.clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        let mut index: HashMap<Vec<AlgebraicReal>, usize> = positive
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        let mut reflect: Vec<Vec<Option<u16>>> = vec![Vec::new(); n];
        // s permutes the positive roots other than alpha_s.
        let mut next = 0;
        while next < positive.len() {
            for s in 0..n {
                let image = if next == s {
                    None
                } else {
                    let root = reflect_root(&cartan, s, &positive[next]);
                    let idx = match index.get(&root) {
                        Some(&i) => i,
                        None => {
                            if positive.len() == MAX_POSITIVE_ROOTS {
                                return Err(CoxeterError::RankTooLarge {
                                    rank: n,
                                    limit: MAX_POSITIVE_ROOTS,
                                });
                            }
                            index.insert(root.clone(), positive.len());
                            positive.push(root);
                            positive.len() - 1
                        }
                    };
                    Some(idx as u16)
                };
                reflect[s].push(image);
            }
            next += 1;
        }
        for root in &positive {
            assert!(
                root.iter().all(|c| c.signum() != Ordering::Less),
                "root with negative coordinate in a finite root system"
            );
        }
        Ok(RootSystem {
            field,
            positive,
            reflect,
        })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_roots(&self) -> &[Vec<AlgebraicReal>] {
        &self.positive
    }

    pub(crate) fn reflection_image(&self, s: usize, root: usize) -> Option<usize> {
        self.reflect[s][root].map(usize::from)
    }
}

fn reflect_root(cartan: &[Vec<AlgebraicReal>], s: usize, root: &[AlgebraicReal]) -> Vec<AlgebraicReal> {
    let mut pairing = AlgebraicReal::zero(root[0].field());
    for (j, c) in root.iter().enumerate() {
        pairing = &pairing + &(&cartan[s][j] * c);
    }
    let mut out = root.to_vec();
    out[s] = &out[s] - &pairing;
    out
}

/// All leading principal minors positive, via pivots of elimination without row swaps.
fn is_positive_definite(a: &[Vec<AlgebraicReal>]) -> bool {
    let n = a.len();
    let mut a = a.to_vec();
    for k in 0..n {
        if a[k][k].signum() != Ordering::Greater {
            return false;
        }
        let inv = a[k][k].inverse().unwrap();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] = &a[i][j] - &t;
            }
        }
    }
    true
}
