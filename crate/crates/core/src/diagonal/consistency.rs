//! Consistency of the self-referencing diagonal constraints.
//!
//! On the grid `{i/2^d}` the system consists of the diagonal definitions
//! `g(y) = f_y(y) + 1` for every grid point, and — in the self-referencing
//! variant — the pinning constraints `f_{(1+y)/2} = g` pointwise, for every
//! grid y whose image `(1+y)/2` lands back on the grid. The solver treats
//! every table entry as an integer unknown and propagates the equalities
//! through a union-find with additive potentials, reporting the first
//! forced contradiction together with the pair `(y, y')` that produced it.

use serde::Serialize;

use crate::numerics::{rat, rational_string, Rational};

use super::family::{build_g, FunctionFamily};

/// Union-find where every element carries an offset to its parent, so the
/// structure can represent `val(a) − val(b) = w` relations and detect
/// inconsistent cycles.
struct PotentialUf {
    parent: Vec<usize>,
    rank: Vec<u8>,
    /// `val(i) − val(parent[i])`.
    offset: Vec<i64>,
}

impl PotentialUf {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
            rank: vec![0; size],
            offset: vec![0; size],
        }
    }

    /// Root of `x` and `val(x) − val(root)`.
    fn find(&mut self, x: usize) -> (usize, i64) {
        let mut chain = Vec::new();
        let mut node = x;
        while self.parent[node] != node {
            chain.push(node);
            node = self.parent[node];
        }
        let root = node;
        // Path compression, accumulating offsets from the far end.
        let mut total = 0;
        for &link in chain.iter().rev() {
            total += self.offset[link];
            self.parent[link] = root;
            self.offset[link] = total;
        }
        let offset = if let Some(&first) = chain.first() {
            self.offset[first]
        } else {
            0
        };
        (root, offset)
    }

    /// Demands `val(a) = val(b) + w`. Returns the actual difference
    /// `val(a) − val(b)` when it is already fixed to something else.
    fn union(&mut self, a: usize, b: usize, w: i64) -> Result<(), i64> {
        let (root_a, pot_a) = self.find(a);
        let (root_b, pot_b) = self.find(b);
        if root_a == root_b {
            let actual = pot_a - pot_b;
            return if actual == w { Ok(()) } else { Err(actual) };
        }
        // val(root_a) − val(root_b) = pot_b + w − pot_a.
        let delta = pot_b + w - pot_a;
        if self.rank[root_a] < self.rank[root_b] {
            self.parent[root_a] = root_b;
            self.offset[root_a] = delta;
        } else {
            self.parent[root_b] = root_a;
            self.offset[root_b] = -delta;
            if self.rank[root_a] == self.rank[root_b] {
                self.rank[root_a] += 1;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Eq7Witness {
    /// Grid point whose pinning constraint closed the contradiction.
    pub y: String,
    /// Its image `(1 + y)/2`, the row forced to coincide with g.
    pub y_prime: String,
    /// Human-readable form of the forced equation.
    pub forced: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum Eq7Verdict {
    Unsat { witness: Eq7Witness },
    Sat { sample_g: Vec<i64> },
}

impl Eq7Verdict {
    pub fn is_unsat(&self) -> bool {
        matches!(self, Eq7Verdict::Unsat { .. })
    }
}

fn check(depth: u32, pin_diagonal_into_family: bool) -> Eq7Verdict {
    assert!((1..=16).contains(&depth), "grid would be degenerate or huge");
    let grid = FunctionFamily::dyadic_grid(depth);
    let size = grid.len();
    // Variable ids: g(x) at x_index, f_y(x) at size + y_index·size + x_index.
    let g_var = |x: usize| x;
    let f_var = |y: usize, x: usize| size + y * size + x;
    let mut uf = PotentialUf::new(size + size * size);

    for y in 0..size {
        uf.union(g_var(y), f_var(y, y), 1)
            .expect("diagonal definitions touch disjoint variables");
    }

    if pin_diagonal_into_family {
        let half = rat(1, 2);
        for y in grid.iter() {
            let y_prime = (y + rat(1, 1)) * &half;
            let Ok(y_prime_index) = grid.binary_search(&y_prime) else {
                continue;
            };
            for x in 0..size {
                if uf.union(f_var(y_prime_index, x), g_var(x), 0).is_err() {
                    return Eq7Verdict::Unsat {
                        witness: Eq7Witness {
                            y: rational_string(y),
                            y_prime: rational_string(&y_prime),
                            forced: format!(
                                "f_{yp} = g and g({yp}) = f_{yp}({yp}) + 1 force g({yp}) = g({yp}) + 1",
                                yp = rational_string(&y_prime)
                            ),
                        },
                    };
                }
            }
        }
    }

    // No contradiction: exhibit a model. The zero family satisfies the
    // diagonal definitions with g ≡ 1.
    let zero_family =
        FunctionFamily::uniform(grid, 0).expect("dyadic grid is always a valid family grid");
    Eq7Verdict::Sat {
        sample_g: build_g(&zero_family),
    }
}

/// Full system: diagonal definitions plus the pinning constraints. For
/// every depth ≥ 1 the point y = 0 maps to y' = 1/2 on the grid, so the
/// system is unsatisfiable and the witness is the forced `g(y') = g(y') + 1`.
pub fn eq7_consistency_check(depth: u32) -> Eq7Verdict {
    check(depth, true)
}

/// Diagonal definitions alone: always satisfiable, the diagonal function
/// exists for any family.
pub fn diagonal_only_check(depth: u32) -> Eq7Verdict {
    check(depth, false)
}

/// The grid points whose pinning image `(1 + y)/2` lands back on the grid.
/// Exposed for reports.
pub fn pinned_points(depth: u32) -> Vec<(Rational, Rational)> {
    let grid = FunctionFamily::dyadic_grid(depth);
    let half = rat(1, 2);
    grid.iter()
        .filter_map(|y| {
            let y_prime = (y + rat(1, 1)) * &half;
            grid.binary_search(&y_prime)
                .ok()
                .map(|_| (y.clone(), y_prime))
        })
        .collect()
}
