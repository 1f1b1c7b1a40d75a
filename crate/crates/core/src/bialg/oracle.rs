//! Exact monoidal width of tiny matrices by iterative deepening: a matrix is
//! `t`-decomposable iff it is an atom of weight at most `t`, splits as a
//! tensor of `t`-decomposables, or factors through at most `t` wires with
//! both factors `t`-decomposable. Factor enumeration is finite because over
//! ℕ every product term is bounded by the target entry and zero slices can
//! be dropped; memoization keyed on the matrix makes the search terminate.

use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;

use super::Generator;
use crate::decomp::Prop;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Mode, Scalar};

/// Hard caps on the instances the search will accept.
#[derive(Clone, Copy, Debug)]
pub struct OracleCaps {
    pub max_rows: usize,
    pub max_cols: usize,
    pub max_entry: u64,
}

impl OracleCaps {
    pub fn default_for(mode: Mode) -> Self {
        match mode {
            Mode::Gf2 => OracleCaps {
                max_rows: 4,
                max_cols: 4,
                max_entry: 1,
            },
            Mode::Rational => OracleCaps {
                max_rows: 3,
                max_cols: 3,
                max_entry: 3,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Width(usize),
    ExceedsBudget,
}

/// Reusable search state; the memo table persists across queries so sweeps
/// over many small matrices share work.
pub struct MwdOracle<S: Scalar> {
    caps: OracleCaps,
    memo: HashMap<(usize, Matrix<S>), bool>,
}

impl<S: Scalar> MwdOracle<S> {
    pub fn new(caps: OracleCaps) -> Self {
        MwdOracle {
            caps,
            memo: HashMap::new(),
        }
    }

    pub fn with_default_caps() -> Self {
        MwdOracle::new(OracleCaps::default_for(S::MODE))
    }

    /// Exact monoidal width, or `ExceedsBudget` if no decomposition of width
    /// at most `width_budget` exists.
    pub fn width(&mut self, f: &Matrix<S>, width_budget: usize) -> Result<OracleOutcome> {
        if f.rows() > self.caps.max_rows || f.cols() > self.caps.max_cols {
            return Err(Error::CapExceeded(format!(
                "oracle caps matrices at {}x{}, got {}x{}",
                self.caps.max_rows,
                self.caps.max_cols,
                f.rows(),
                f.cols()
            )));
        }
        for e in f.entries() {
            match e.as_integer().and_then(|n| n.to_u64()) {
                Some(v) if v <= self.caps.max_entry => {}
                _ => {
                    return Err(Error::CapExceeded(format!(
                        "oracle caps entries at {}; matrices must stay in ℕ",
                        self.caps.max_entry
                    )))
                }
            }
        }
        for t in 1..=width_budget {
            let mut stack = HashSet::new();
            if self.decomposable(f, t, &mut stack).0 {
                return Ok(OracleOutcome::Width(t));
            }
        }
        Ok(OracleOutcome::ExceedsBudget)
    }

    /// Returns (result, clean). A `false` discovered while the same matrix
    /// was already on the search stack is cycle-cut and must not be cached;
    /// witnesses are always cacheable.
    fn decomposable(
        &mut self,
        f: &Matrix<S>,
        t: usize,
        stack: &mut HashSet<Matrix<S>>,
    ) -> (bool, bool) {
        if let Some(&hit) = self.memo.get(&(t, f.clone())) {
            return (hit, true);
        }
        if stack.contains(f) {
            return (false, false);
        }
        stack.insert(f.clone());
        let (res, clean) = self.explore(f, t, stack);
        stack.remove(f);
        if res || clean {
            self.memo.insert((t, f.clone()), res);
        }
        (res, clean)
    }

    fn explore(&mut self, f: &Matrix<S>, t: usize, stack: &mut HashSet<Matrix<S>>) -> (bool, bool) {
        let (m, n) = (f.rows(), f.cols());
        if m == 0 && n == 0 {
            // the empty identity: create one wire and delete it, width 1
            return (t >= 1, true);
        }
        if Generator::from_matrix(f).is_some_and(|g| {
            let mat = g.matrix::<S>();
            mat.rows().max(mat.cols()) <= t
        }) {
            return (true, true);
        }
        let mut clean = true;

        // tensor splits
        for i in 0..=m {
            for j in 0..=n {
                if (i == 0 && j == 0) || (i == m && j == n) {
                    continue;
                }
                let ok = (0..i).all(|r| (j..n).all(|c| f.get(r, c).is_zero()))
                    && (i..m).all(|r| (0..j).all(|c| f.get(r, c).is_zero()));
                if !ok {
                    continue;
                }
                let f1 = f
                    .submatrix(&(0..i).collect::<Vec<_>>(), &(0..j).collect::<Vec<_>>())
                    .expect("in range");
                let f2 = f
                    .submatrix(&(i..m).collect::<Vec<_>>(), &(j..n).collect::<Vec<_>>())
                    .expect("in range");
                let (a, c1) = self.decomposable(&f1, t, stack);
                clean &= c1;
                if !a {
                    continue;
                }
                let (b, c2) = self.decomposable(&f2, t, stack);
                clean &= c2;
                if b {
                    return (true, true);
                }
            }
        }

        // factor through k <= t wires
        for k in 0..=t {
            if k == 0 {
                if !f.is_zero() {
                    continue;
                }
                let b = Matrix::<S>::zeros(m, 0);
                let c = Matrix::<S>::zeros(0, n);
                let (okb, c1) = self.decomposable(&b, t, stack);
                clean &= c1;
                if okb {
                    let (okc, c2) = self.decomposable(&c, t, stack);
                    clean &= c2;
                    if okc {
                        return (true, true);
                    }
                }
                continue;
            }
            let mut right = FactorIter::new(k, n, self.caps.max_entry);
            while let Some(c) = right.next_candidate::<S>() {
                let Some(choices) = solve_rows(f, &c, self.caps.max_entry) else {
                    continue;
                };
                let mut combo = ComboIter::new(&choices);
                while let Some(rows) = combo.next_combo() {
                    let b = Matrix::from_fn(m, k, |i, j| rows[i][j].clone());
                    let (okb, c1) = self.decomposable(&b, t, stack);
                    clean &= c1;
                    if !okb {
                        continue;
                    }
                    let (okc, c2) = self.decomposable(&c, t, stack);
                    clean &= c2;
                    if okc {
                        return (true, true);
                    }
                }
            }
        }
        (false, clean)
    }
}

/// One-shot convenience over a fresh oracle.
pub fn mwd_oracle<S: Scalar>(
    f: &Matrix<S>,
    width_budget: usize,
    caps: &OracleCaps,
) -> Result<OracleOutcome> {
    MwdOracle::new(*caps).width(f, width_budget)
}

/// Enumerates right factors `c: k x n` with entries in `0..=cap`, no zero
/// rows, and rows in nonincreasing order (slice order is immaterial, so one
/// representative per multiset suffices).
struct FactorIter {
    k: usize,
    n: usize,
    cap: u64,
    state: Vec<u64>,
    done: bool,
}

impl FactorIter {
    fn new(k: usize, n: usize, cap: u64) -> Self {
        FactorIter {
            k,
            n,
            cap,
            state: vec![0; k * n],
            done: k == 0 || n == 0,
        }
    }

    fn next_candidate<S: Scalar>(&mut self) -> Option<Matrix<S>> {
        loop {
            if self.done {
                return None;
            }
            let admissible = self.bump_to_admissible();
            if let Some(state) = admissible {
                let k = self.k;
                let n = self.n;
                let mat = Matrix::from_fn(k, n, |i, j| S::from_nat(state[i * n + j]));
                return Some(mat);
            }
        }
    }

    /// Advance the odometer until the state has no zero row and rows are
    /// nonincreasing; returns the state when admissible.
    fn bump_to_admissible(&mut self) -> Option<Vec<u64>> {
        loop {
            if !self.advance() {
                self.done = true;
                return None;
            }
            let rows: Vec<&[u64]> = self.state.chunks(self.n).collect();
            let no_zero = rows.iter().all(|r| r.iter().any(|&x| x > 0));
            let sorted = rows.windows(2).all(|w| w[0] >= w[1]);
            if no_zero && sorted {
                return Some(self.state.clone());
            }
        }
    }

    fn advance(&mut self) -> bool {
        for x in self.state.iter_mut() {
            if *x < self.cap {
                *x += 1;
                return true;
            }
            *x = 0;
        }
        false
    }
}

/// For each row of `f`, every coefficient row `b_i` with entries in
/// `0..=cap` satisfying `b_i * c = f_i` exactly. `None` if some row has no
/// solution.
fn solve_rows<S: Scalar>(f: &Matrix<S>, c: &Matrix<S>, cap: u64) -> Option<Vec<Vec<Vec<S>>>> {
    let k = c.rows();
    let mut out = Vec::with_capacity(f.rows());
    for i in 0..f.rows() {
        let mut solutions = Vec::new();
        let mut coeffs = vec![0u64; k];
        loop {
            let row: Vec<S> = coeffs.iter().map(|&v| S::from_nat(v)).collect();
            let matches = (0..f.cols()).all(|l| {
                let mut acc = S::zero();
                for (j, b) in row.iter().enumerate() {
                    acc = acc + b.clone() * c.get(j, l).clone();
                }
                acc == *f.get(i, l)
            });
            if matches {
                solutions.push(row);
            }
            if !bump(&mut coeffs, cap) {
                break;
            }
        }
        if solutions.is_empty() {
            return None;
        }
        out.push(solutions);
    }
    Some(out)
}

fn bump(vec: &mut [u64], cap: u64) -> bool {
    for x in vec.iter_mut() {
        if *x < cap {
            *x += 1;
            return true;
        }
        *x = 0;
    }
    false
}

/// Cartesian product over per-row solution sets.
struct ComboIter<'a, S> {
    choices: &'a [Vec<Vec<S>>],
    idx: Vec<usize>,
    done: bool,
}

impl<'a, S: Clone> ComboIter<'a, S> {
    fn new(choices: &'a [Vec<Vec<S>>]) -> Self {
        ComboIter {
            choices,
            idx: vec![0; choices.len()],
            done: false,
        }
    }

    fn next_combo(&mut self) -> Option<Vec<&'a Vec<S>>> {
        if self.done {
            return None;
        }
        let current: Vec<&Vec<S>> = self
            .choices
            .iter()
            .zip(&self.idx)
            .map(|(sols, &i)| &sols[i])
            .collect();
        // advance
        let mut carried = true;
        for (slot, sols) in self.idx.iter_mut().zip(self.choices) {
            if *slot + 1 < sols.len() {
                *slot += 1;
                carried = false;
                break;
            }
            *slot = 0;
        }
        if carried {
            self.done = true;
        }
        Some(current)
    }
}
