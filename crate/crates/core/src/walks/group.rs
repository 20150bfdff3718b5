//! The hyperoctahedral group acting on `Z^(k-1)` by signed coordinate permutations.

/// `x -> y` with `y_i = ±x_(perm[i])`, the sign negative when `flips[i]`.
///
/// Stored with 0-based coordinate indices: `perm[i]` is the source
/// coordinate of target coordinate `i` (so the permutation acts as
/// `x_(σ^{-1}(i))`), and the negation is applied after permuting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    flips: Vec<bool>,
}

impl SignedPermutation {
    pub fn identity(dim: usize) -> Self {
        SignedPermutation {
            perm: (0..dim).collect(),
            flips: vec![false; dim],
        }
    }

    /// `None` if `perm` is not a permutation of `0..dim` or the lengths differ.
    pub fn new(perm: Vec<usize>, flips: Vec<bool>) -> Option<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        (flips.len() == perm.len()).then_some(SignedPermutation { perm, flips })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.perm
            .iter()
            .zip(&self.flips)
            .map(|(&src, &neg)| if neg { -x[src] } else { x[src] })
            .collect()
    }

    /// Determinant of the signed permutation matrix, `±1`.
    pub fn determinant(&self) -> i32 {
        let mut visited = vec![false; self.perm.len()];
        let mut sign = 1;
        for start in 0..self.perm.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        if self.flips.iter().filter(|&&f| f).count() % 2 == 1 {
            sign = -sign;
        }
        sign
    }
}

fn permutations(dim: usize) -> Vec<Vec<usize>> {
    if dim == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(dim - 1) {
        for pos in 0..dim {
            let mut p = smaller.clone();
            p.insert(pos, dim - 1);
            out.push(p);
        }
    }
    out
}

/// Every element of the group for parameter `k` (acting on `Z^(k-1)`),
/// paired with its sign `det(β) = (-1)^length(β)`.
///
/// # Panics
/// When `k < 2` or `k - 1 > 6`.
pub fn signed_group_elements(k: usize) -> Vec<(SignedPermutation, i32)> {
    assert!((2..=7).contains(&k), "group enumeration needs 2 <= k <= 7, got {k}");
    let dim = k - 1;
    let mut out = Vec::with_capacity((1 << dim) * (1..=dim).product::<usize>());
    for perm in permutations(dim) {
        for mask in 0u32..(1 << dim) {
            let flips = (0..dim).map(|i| mask & (1 << i) != 0).collect();
            let g = SignedPermutation {
                perm: perm.clone(),
                flips,
            };
            let sign = g.determinant();
            out.push((g, sign));
        }
    }
    out
}
