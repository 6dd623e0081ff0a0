//! Per-signal sparse coding: the supervised elastic-net-type subproblem used
//! during dictionary training and the plain Lasso used to encode signals for
//! the classifier.
//!
//! For a signal `x` with label block `c'` the solver minimizes
//!
//! ```text
//! F(a) = ||x - D a||^2 + mu ||x - D_c' a_c'||^2
//!        + gamma1 (||a||^2 - ||a_c'||^2) + lambda ||a||_1
//! ```
//!
//! by cyclic coordinate descent with exact per-coordinate soft-threshold
//! updates. With curvature `q_j = 2 ||d_j||^2 (1 + mu [j in c']) +
//! 2 gamma1 [j not in c']` and `rho_j` the negative partial gradient of the
//! smooth part at `a_j = 0` (other coordinates fixed), the update is
//! `a_j = soft(rho_j, lambda) / q_j`.

use ndarray::{Array1, Array2, ArrayView1};

use crate::dictionary_learning::DictionarySet;
use crate::error::{Error, Result};

/// Weights and stopping rules for one coding problem.
#[derive(Debug, Clone, PartialEq)]
pub struct CodingParams {
    pub lambda: f64,
    pub mu: f64,
    pub gamma1: f64,
    pub max_sweeps: usize,
    /// KKT tolerance certifying optimality.
    pub tol: f64,
}

impl CodingParams {
    pub fn new(lambda: f64, mu: f64, gamma1: f64) -> Self {
        CodingParams {
            lambda,
            mu,
            gamma1,
            max_sweeps: DEFAULT_MAX_SWEEPS,
            tol: DEFAULT_TOL,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.lambda < 0.0 || self.mu < 0.0 || self.gamma1 < 0.0 {
            return Err(Error::InvalidInput(
                "coding weights must be non-negative".into(),
            ));
        }
        if self.tol <= 0.0 {
            return Err(Error::InvalidInput("coding tol must be positive".into()));
        }
        if self.max_sweeps == 0 {
            return Err(Error::InvalidInput("max_sweeps must be at least 1".into()));
        }
        Ok(())
    }
}

pub const DEFAULT_MAX_SWEEPS: usize = 1000;
pub const DEFAULT_TOL: f64 = 1e-6;

/// Length-K coefficient vector partitioned into C blocks of `block_size`.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseCode {
    pub values: Array1<f64>,
    pub block_size: usize,
}

impl SparseCode {
    pub fn zeros(total: usize, block_size: usize) -> Self {
        debug_assert_eq!(total % block_size, 0);
        SparseCode {
            values: Array1::zeros(total),
            block_size,
        }
    }

    pub fn n_blocks(&self) -> usize {
        self.values.len() / self.block_size
    }

    /// Coefficients over class block `c` (0-based index).
    pub fn block(&self, c: usize) -> ArrayView1<'_, f64> {
        self.values
            .slice(ndarray::s![c * self.block_size..(c + 1) * self.block_size])
    }

    /// Sum of squared coefficients outside the block of `label` (1-based).
    pub fn off_class_energy(&self, label: usize) -> f64 {
        let own = label - 1;
        (0..self.n_blocks())
            .filter(|&c| c != own)
            .map(|c| self.block(c).iter().map(|a| a * a).sum::<f64>())
            .sum()
    }

    pub fn nnz(&self) -> usize {
        self.values.iter().filter(|a| **a != 0.0).count()
    }
}

/// Solver output: the code plus its optimality certificate.
#[derive(Debug, Clone)]
pub struct Coding {
    pub code: SparseCode,
    /// Maximal first-order violation at the returned iterate.
    pub kkt_residual: f64,
    /// False when `max_sweeps` ran out before the tolerance was met.
    pub converged: bool,
    pub sweeps: usize,
}

/// Precomputed per-dictionary state (Gram matrix) shared across the many
/// signals coded against the same dictionary.
pub struct CodingProblem<'a> {
    dict: &'a DictionarySet,
    gram: Array2<f64>,
    atom_sq: Array1<f64>,
}

impl<'a> CodingProblem<'a> {
    pub fn new(dict: &'a DictionarySet) -> Self {
        let atoms = dict.atoms();
        let mut gram = atoms.t().dot(atoms);
        // Mirror the upper triangle so rows equal columns bit-for-bit; the
        // update loop reads rows as columns.
        let k = gram.nrows();
        for i in 0..k {
            for j in 0..i {
                gram[(i, j)] = gram[(j, i)];
            }
        }
        let atom_sq = Array1::from_iter((0..k).map(|j| gram[(j, j)]));
        CodingProblem {
            dict,
            gram,
            atom_sq,
        }
    }

    pub fn dict(&self) -> &DictionarySet {
        self.dict
    }

    /// Solve one coding problem. `label` is the 1-based class of the signal;
    /// `None` drops the class-specific terms regardless of `mu`/`gamma1`.
    pub fn code(
        &self,
        x: ArrayView1<'_, f64>,
        label: Option<usize>,
        p: &CodingParams,
        warm: Option<&SparseCode>,
    ) -> Result<Coding> {
        p.validate()?;
        let k = self.dict.total_atoms();
        let kp = self.dict.atoms_per_class();
        if x.len() != self.dict.signal_dim() {
            return Err(Error::DimensionMismatch(format!(
                "signal has {} entries, dictionary expects {}",
                x.len(),
                self.dict.signal_dim()
            )));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite signal".into()));
        }
        let block = match label {
            Some(l) => {
                if l == 0 || l > self.dict.class_count() {
                    return Err(Error::InvalidInput(format!(
                        "label {l} outside 1..={}",
                        self.dict.class_count()
                    )));
                }
                Some(((l - 1) * kp, l * kp))
            }
            None => None,
        };
        let mu = if block.is_some() { p.mu } else { 0.0 };
        let gamma1 = if block.is_some() { p.gamma1 } else { 0.0 };

        let mut a: Array1<f64> = match warm {
            Some(w) => {
                if w.values.len() != k {
                    return Err(Error::DimensionMismatch(
                        "warm start length differs from dictionary size".into(),
                    ));
                }
                if w.values.iter().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidInput("non-finite warm start".into()));
                }
                w.values.clone()
            }
            None => Array1::zeros(k),
        };

        let dtx = self.dict.atoms().t().dot(&x);
        // u_j = d_j . (x - D a); v_i = d_i . (x - D_c' a_c') over the label block.
        let mut u = &dtx - &self.gram.dot(&a);
        let mut v = block.map(|(lo, hi)| {
            let ab = a.slice(ndarray::s![lo..hi]);
            let mut vb = dtx.slice(ndarray::s![lo..hi]).to_owned();
            for (row, &aj) in (lo..hi).zip(ab.iter()) {
                if aj != 0.0 {
                    let grow = self.gram.row(row);
                    for (i, vv) in vb.iter_mut().enumerate() {
                        *vv -= grow[lo + i] * aj;
                    }
                }
            }
            vb
        });

        let in_block = |j: usize| block.is_some_and(|(lo, hi)| j >= lo && j < hi);

        let mut sweeps = 0;
        let mut converged = false;
        while sweeps < p.max_sweeps {
            for j in 0..k {
                let s = self.atom_sq[j];
                let inb = in_block(j);
                let q = 2.0 * s * (1.0 + if inb { mu } else { 0.0 })
                    + if inb { 0.0 } else { 2.0 * gamma1 };
                let mut rho = 2.0 * (u[j] + s * a[j]);
                if inb {
                    let (lo, _) = block.unwrap();
                    rho += 2.0 * mu * (v.as_ref().unwrap()[j - lo] + s * a[j]);
                }
                let new = if q > 0.0 { soft(rho, p.lambda) / q } else { 0.0 };
                let delta = new - a[j];
                if delta != 0.0 {
                    a[j] = new;
                    let grow = self.gram.row(j);
                    for (uu, g) in u.iter_mut().zip(grow.iter()) {
                        *uu -= delta * g;
                    }
                    if inb {
                        let (lo, hi) = block.unwrap();
                        let vb = v.as_mut().unwrap();
                        for (vv, g) in vb.iter_mut().zip(grow.slice(ndarray::s![lo..hi]).iter()) {
                            *vv -= delta * g;
                        }
                    }
                }
            }
            sweeps += 1;

            let kkt = kkt_from_state(&a, &u, v.as_ref(), block, mu, gamma1, p.lambda);
            if kkt <= p.tol {
                // Incremental state drifts; re-derive it before accepting.
                u = &dtx - &self.gram.dot(&a);
                if let (Some((lo, hi)), Some(vb)) = (block, v.as_mut()) {
                    let ab = a.slice(ndarray::s![lo..hi]);
                    let gb = self.gram.slice(ndarray::s![lo..hi, lo..hi]);
                    *vb = &dtx.slice(ndarray::s![lo..hi]) - &gb.dot(&ab);
                }
                let kkt = kkt_from_state(&a, &u, v.as_ref(), block, mu, gamma1, p.lambda);
                if kkt <= p.tol {
                    converged = true;
                    break;
                }
            }
        }

        let code = SparseCode {
            values: a,
            block_size: kp,
        };
        // Certify against the from-scratch residual definition.
        let certified = kkt_residual_for(x, self.dict, &code, label, p)?;
        if converged && certified > p.tol {
            converged = false;
        }
        Ok(Coding {
            code,
            kkt_residual: certified,
            converged,
            sweeps,
        })
    }
}

fn soft(value: f64, threshold: f64) -> f64 {
    if value > threshold {
        value - threshold
    } else if value < -threshold {
        value + threshold
    } else {
        0.0
    }
}

/// Max first-order violation given u = D^T r and v = D_c'^T r2.
fn kkt_from_state(
    a: &Array1<f64>,
    u: &Array1<f64>,
    v: Option<&Array1<f64>>,
    block: Option<(usize, usize)>,
    mu: f64,
    gamma1: f64,
    lambda: f64,
) -> f64 {
    let mut worst = 0.0f64;
    for j in 0..a.len() {
        let inb = block.is_some_and(|(lo, hi)| j >= lo && j < hi);
        let mut g = -2.0 * u[j];
        if inb {
            g -= 2.0 * mu * v.unwrap()[j - block.unwrap().0];
        } else {
            g += 2.0 * gamma1 * a[j];
        }
        let viol = if a[j] == 0.0 {
            (g.abs() - lambda).max(0.0)
        } else {
            (g + lambda * a[j].signum()).abs()
        };
        worst = worst.max(viol);
    }
    worst
}

fn kkt_residual_for(
    x: ArrayView1<'_, f64>,
    dict: &DictionarySet,
    code: &SparseCode,
    label: Option<usize>,
    p: &CodingParams,
) -> Result<f64> {
    if x.len() != dict.signal_dim() || code.values.len() != dict.total_atoms() {
        return Err(Error::DimensionMismatch(
            "kkt_residual: signal/code sizes do not match the dictionary".into(),
        ));
    }
    let r = &x - &dict.atoms().dot(&code.values);
    let u = dict.atoms().t().dot(&r);
    let (block, mu, gamma1) = match label {
        Some(l) => {
            let kp = dict.atoms_per_class();
            (Some(((l - 1) * kp, l * kp)), p.mu, p.gamma1)
        }
        None => (None, 0.0, 0.0),
    };
    let v = block.map(|(lo, hi)| {
        let b = dict.block(label.unwrap() - 1);
        let ab = code.values.slice(ndarray::s![lo..hi]);
        let r2 = &x - &b.dot(&ab);
        b.t().dot(&r2)
    });
    Ok(kkt_from_state(
        &code.values,
        &u,
        v.as_ref(),
        block,
        mu,
        gamma1,
        p.lambda,
    ))
}

/// Maximal violation of the first-order optimality conditions of the coding
/// problem at `code`; 0 iff the code is exactly optimal.
pub fn kkt_residual(
    x: ArrayView1<'_, f64>,
    dict: &DictionarySet,
    code: &SparseCode,
    label: Option<usize>,
    p: &CodingParams,
) -> Result<f64> {
    kkt_residual_for(x, dict, code, label, p)
}

/// Value of the coding objective F at `code` (the quantity the solver
/// minimizes). With `label = None` this is the plain Lasso objective.
pub fn coding_objective(
    x: ArrayView1<'_, f64>,
    dict: &DictionarySet,
    code: &SparseCode,
    label: Option<usize>,
    p: &CodingParams,
) -> f64 {
    let r = &x - &dict.atoms().dot(&code.values);
    let mut f = r.iter().map(|e| e * e).sum::<f64>();
    if let Some(l) = label {
        let b = dict.block(l - 1);
        let kp = dict.atoms_per_class();
        let ab = code.values.slice(ndarray::s![(l - 1) * kp..l * kp]);
        let r2 = &x - &b.dot(&ab);
        f += p.mu * r2.iter().map(|e| e * e).sum::<f64>();
        let total_sq = code.values.iter().map(|a| a * a).sum::<f64>();
        let own_sq = ab.iter().map(|a| a * a).sum::<f64>();
        f += p.gamma1 * (total_sq - own_sq);
    }
    f + p.lambda * code.values.iter().map(|a| a.abs()).sum::<f64>()
}

/// Solve the supervised coding problem for one labeled signal.
pub fn code_supervised(
    x: ArrayView1<'_, f64>,
    dict: &DictionarySet,
    label: usize,
    p: &CodingParams,
) -> Result<Coding> {
    CodingProblem::new(dict).code(x, Some(label), p, None)
}

/// Plain Lasso coding (mu = 0, gamma1 = 0), used to encode signals for the
/// classifier.
pub fn code_unsupervised(
    x: ArrayView1<'_, f64>,
    dict: &DictionarySet,
    lambda: f64,
    max_sweeps: usize,
    tol: f64,
) -> Result<Coding> {
    let p = CodingParams {
        lambda,
        mu: 0.0,
        gamma1: 0.0,
        max_sweeps,
        tol,
    };
    CodingProblem::new(dict).code(x, None, &p, None)
}
