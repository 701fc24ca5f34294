//! Exact-rational linear programming for the hyperedge-type density bound.
//!
//! Small dense two-phase simplex with Bland's rule over `BigRational`. No
//! floating point is involved, so optimality and feasibility are decided
//! exactly and the method cannot cycle.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

impl Relation {
    fn flipped(self) -> Self {
        match self {
            Relation::LessEq => Relation::GreaterEq,
            Relation::GreaterEq => Relation::LessEq,
            Relation::Equal => Relation::Equal,
        }
    }

    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::LessEq => lhs <= rhs,
            Relation::GreaterEq => lhs >= rhs,
            Relation::Equal => lhs == rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::LessEq => "<=",
            Relation::GreaterEq => ">=",
            Relation::Equal => "=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `minimize objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    names: Vec<String>,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LpProblem {
    pub fn new(names: &[&str], objective: Vec<Rational>) -> Result<Self> {
        if names.len() != objective.len() {
            return Err(Error::InvalidProgram(format!(
                "{} variable names but {} objective coefficients",
                names.len(),
                objective.len()
            )));
        }
        Ok(LpProblem {
            names: names.iter().map(|s| s.to_string()).collect(),
            objective,
            constraints: Vec::new(),
        })
    }

    pub fn add_constraint(
        &mut self,
        coefficients: Vec<Rational>,
        relation: Relation,
        rhs: Rational,
    ) -> Result<&mut Self> {
        if coefficients.len() != self.names.len() {
            return Err(Error::InvalidProgram(format!(
                "constraint has {} coefficients, expected {}",
                coefficients.len(),
                self.names.len()
            )));
        }
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
        Ok(self)
    }

    /// Adds `x_name ≤ bound`.
    pub fn add_upper_bound(&mut self, name: &str, bound: Rational) -> Result<&mut Self> {
        let j = self.index_of(name)?;
        let mut coefficients = vec![Rational::zero(); self.names.len()];
        coefficients[j] = Rational::one();
        self.add_constraint(coefficients, Relation::LessEq, bound)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidProgram(format!("unknown variable `{name}`")))
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }

    /// Exact substitution check of every constraint and of `x ≥ 0`.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.names.len()
            && x.iter().all(|v| !v.is_negative())
            && self
                .constraints
                .iter()
                .all(|c| c.relation.holds(&dot(&c.coefficients, x), &c.rhs))
    }

    /// If `y` is a feasible dual solution, returns the lower bound `b · y` it
    /// certifies for the minimum.
    ///
    /// Dual feasibility for a minimization with `x ≥ 0`: `y_i ≥ 0` on `≥` rows,
    /// `y_i ≤ 0` on `≤` rows, and `c_j - Σ_i y_i a_ij ≥ 0` for every column.
    pub fn dual_bound(&self, y: &[Rational]) -> Option<Rational> {
        if y.len() != self.constraints.len() {
            return None;
        }
        let signs_ok = self
            .constraints
            .iter()
            .zip(y)
            .all(|(c, yi)| match c.relation {
                Relation::GreaterEq => !yi.is_negative(),
                Relation::LessEq => !yi.is_positive(),
                Relation::Equal => true,
            });
        let columns_ok = (0..self.names.len()).all(|j| {
            let used: Rational = self
                .constraints
                .iter()
                .zip(y)
                .map(|(c, yi)| &c.coefficients[j] * yi)
                .sum();
            !(&self.objective[j] - used).is_negative()
        });
        (signs_ok && columns_ok).then(|| {
            self.constraints
                .iter()
                .zip(y)
                .map(|(c, yi)| &c.rhs * yi)
                .sum()
        })
    }
}

impl fmt::Display for LpProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expr = |coeffs: &[Rational]| {
            let terms: Vec<String> = coeffs
                .iter()
                .zip(&self.names)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, n)| {
                    if c.is_one() {
                        n.clone()
                    } else {
                        format!("{c}*{n}")
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            }
        };
        writeln!(f, "minimize {}", expr(&self.objective))?;
        for c in &self.constraints {
            writeln!(
                f,
                "  {} {} {}",
                expr(&c.coefficients),
                c.relation.symbol(),
                c.rhs
            )?;
        }
        write!(f, "  {} >= 0", self.names.join(", "))
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Minimum objective value; `None` unless optimal.
    pub optimum: Option<Rational>,
    /// Primal optimum in variable order; empty unless optimal.
    pub assignment: Vec<(String, Rational)>,
    /// Structural variables that are basic at the optimum.
    pub basis: Vec<String>,
    /// Dual values, one per constraint, in the sign convention of
    /// [`LpProblem::dual_bound`].
    pub duals: Vec<Rational>,
}

impl LpSolution {
    fn without_optimum(status: LpStatus) -> Self {
        LpSolution {
            status,
            optimum: None,
            assignment: Vec::new(),
            basis: Vec::new(),
            duals: Vec::new(),
        }
    }

    pub fn value(&self, name: &str) -> Option<&Rational> {
        self.assignment
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn values(&self) -> Vec<Rational> {
        self.assignment.iter().map(|(_, v)| v.clone()).collect()
    }
}

impl fmt::Display for LpSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            LpStatus::Infeasible => return write!(f, "status: infeasible"),
            LpStatus::Unbounded => return write!(f, "status: unbounded"),
            LpStatus::Optimal => {}
        }
        let optimum = self
            .optimum
            .as_ref()
            .expect("optimal solutions carry an optimum");
        writeln!(f, "status: optimal")?;
        writeln!(f, "optimum: {optimum}")?;
        writeln!(f, "basis: {}", self.basis.join(", "))?;
        for (name, v) in &self.assignment {
            writeln!(f, "  {name} = {v}")?;
        }
        let duals: Vec<String> = self.duals.iter().map(|d| d.to_string()).collect();
        write!(f, "duals: ({})", duals.join(", "))
    }
}

/// Column kinds of the working tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Column {
    Structural,
    Slack,
    Artificial,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    kinds: Vec<Column>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x /= &p;
        }
        self.rhs[row] /= &p;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for (x, y) in self.rows[r].iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
            self.rhs[r] -= &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        (0..self.kinds.len())
            .map(|j| {
                let used: Rational = self
                    .basis
                    .iter()
                    .enumerate()
                    .map(|(r, &b)| &cost[b] * &self.rows[r][j])
                    .sum();
                &cost[j] - used
            })
            .collect()
    }

    /// Runs simplex iterations for `cost`; `false` means unbounded.
    fn optimize(&mut self, cost: &[Rational], allow_artificial: bool) -> bool {
        loop {
            let reduced = self.reduced_costs(cost);
            // Bland: lowest-index improving column
            let entering = (0..self.kinds.len()).find(|&j| {
                (allow_artificial || self.kinds[j] != Column::Artificial)
                    && reduced[j].is_negative()
            });
            let Some(col) = entering else { return true };
            let mut leaving: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[r] < self.basis[*best])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

/// Two-phase simplex with Bland's rule.
pub fn solve(p: &LpProblem) -> LpSolution {
    let nvars = p.names.len();
    let m = p.constraints.len();

    // normalize to non-negative right-hand sides
    let mut sign = Vec::with_capacity(m);
    let mut rels = Vec::with_capacity(m);
    let mut a_rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for c in &p.constraints {
        if c.rhs.is_negative() {
            sign.push(-Rational::one());
            rels.push(c.relation.flipped());
            a_rows.push(c.coefficients.iter().map(|x| -x).collect::<Vec<_>>());
            rhs.push(-c.rhs.clone());
        } else {
            sign.push(Rational::one());
            rels.push(c.relation);
            a_rows.push(c.coefficients.clone());
            rhs.push(c.rhs.clone());
        }
    }

    let mut kinds = vec![Column::Structural; nvars];
    let mut slack_col = vec![None; m];
    for (i, rel) in rels.iter().enumerate() {
        if *rel != Relation::Equal {
            slack_col[i] = Some(kinds.len());
            kinds.push(Column::Slack);
        }
    }
    let mut identity_col = vec![0; m];
    for (i, rel) in rels.iter().enumerate() {
        if *rel == Relation::LessEq {
            identity_col[i] = slack_col[i].expect("<= rows have a slack");
        } else {
            identity_col[i] = kinds.len();
            kinds.push(Column::Artificial);
        }
    }

    let width = kinds.len();
    let mut rows = vec![vec![Rational::zero(); width]; m];
    for i in 0..m {
        rows[i][..nvars].clone_from_slice(&a_rows[i]);
        if let Some(s) = slack_col[i] {
            rows[i][s] = if rels[i] == Relation::LessEq {
                Rational::one()
            } else {
                -Rational::one()
            };
        }
        rows[i][identity_col[i]] = Rational::one();
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: identity_col.clone(),
        kinds,
    };

    if t.kinds.contains(&Column::Artificial) {
        let phase1: Vec<Rational> = t
            .kinds
            .iter()
            .map(|k| {
                if *k == Column::Artificial {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        t.optimize(&phase1, true);
        let infeasibility: Rational = t
            .basis
            .iter()
            .zip(&t.rhs)
            .filter(|(b, _)| t.kinds[**b] == Column::Artificial)
            .map(|(_, v)| v.clone())
            .sum();
        if infeasibility.is_positive() {
            return LpSolution::without_optimum(LpStatus::Infeasible);
        }
        // drive zero-level artificials out of the basis where possible
        for r in 0..m {
            if t.kinds[t.basis[r]] != Column::Artificial {
                continue;
            }
            if let Some(col) =
                (0..width).find(|&j| t.kinds[j] != Column::Artificial && !t.rows[r][j].is_zero())
            {
                t.pivot(r, col);
            }
        }
    }

    let mut cost = vec![Rational::zero(); width];
    cost[..nvars].clone_from_slice(&p.objective);
    if !t.optimize(&cost, false) {
        return LpSolution::without_optimum(LpStatus::Unbounded);
    }

    let mut x = vec![Rational::zero(); nvars];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < nvars {
            x[b] = t.rhs[r].clone();
        }
    }
    let mut basic: Vec<usize> = t.basis.iter().copied().filter(|&b| b < nvars).collect();
    basic.sort_unstable();

    // y = c_B B^{-1}; column identity_col[i] of the tableau is column i of B^{-1}
    let duals = (0..m)
        .map(|i| {
            let yi: Rational = t
                .basis
                .iter()
                .enumerate()
                .map(|(r, &b)| &cost[b] * &t.rows[r][identity_col[i]])
                .sum();
            yi * &sign[i]
        })
        .collect();

    LpSolution {
        status: LpStatus::Optimal,
        optimum: Some(p.objective_value(&x)),
        assignment: p.names.iter().cloned().zip(x).collect(),
        basis: basic.into_iter().map(|b| p.names[b].clone()).collect(),
        duals,
    }
}

/// Variable names of the hyperedge-type LP, in the order
/// `(5), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1)`.
pub const TYPE_VARIABLES: [&str; 6] = ["x5", "x4", "x32", "x3", "x22", "x2"];

/// The per-`n` density LP for 5-uniform representations of `C_n`.
///
/// Variables are the numbers of hyperedges of each section type divided by
/// `n`. The cycle needs `2n` half-edges, supplied at 4, 3, 3, 2, 2, 1 per
/// hyperedge of the respective type. Each `(5)` hyperedge needs two and each
/// `(4,1)` one separately supplied 2-section for its middle cycle edges, and
/// 2-sections come one each from `(3,2)` and `(2,1,1,1)` and two from `(2,2,1)`.
pub fn half_edge_lp() -> LpProblem {
    let mut p = LpProblem::new(&TYPE_VARIABLES, vec![int(1); 6]).expect("six names, six costs");
    p.add_constraint(
        [4, 3, 3, 2, 2, 1].into_iter().map(int).collect(),
        Relation::GreaterEq,
        int(2),
    )
    .expect("six coefficients");
    p.add_constraint(
        [2, 1, -1, 0, -2, -1].into_iter().map(int).collect(),
        Relation::LessEq,
        int(0),
    )
    .expect("six coefficients");
    p
}
