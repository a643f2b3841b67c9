//! Synthetic odor-discrimination task.
//!
//! An odor is an n-hot binary vector over k odorants. A task consists of one
//! target odor, `m` nontarget odors whose odorant sets are disjoint from the
//! target, and held-out probe odors that share exactly `j` odorants with the
//! target for each requested overlap level `j`. Odors pass through a fixed
//! random projection (the "glomerular" embedding) before reaching any model.
//!
//! Generation is a pure function of the parameters and a seed: the same
//! `TaskParams` always produce a bit-identical `TaskDataset`.

use std::collections::{BTreeMap, HashSet};

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::seeds::stream_rng;

/// Default embedding dimension ("glomerular" space).
pub const DEFAULT_D_EMBED: usize = 50;

#[derive(Debug, Error)]
pub enum TaskError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("capacity exceeded for {what}: requested {requested}, bound {bound}")]
    Capacity {
        what: String,
        requested: usize,
        bound: u128,
    },
    #[error("retry budget exhausted while sampling {what} ({attempts} attempts)")]
    RetryBudget { what: String, attempts: u64 },
    #[error("dimension mismatch: projection expects length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed dataset JSON: {0}")]
    Json(String),
}

/// Attempts allowed per sampled list before giving up (deterministic failure
/// instead of silent bias).
const RETRY_CAP: u64 = 1_000_000;

/// An n-hot stimulus over `k` odorants, stored as the sorted list of active
/// odorant indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OdorVector {
    k: usize,
    active: Vec<usize>,
}

impl OdorVector {
    /// Builds from explicit odorant indices; duplicates are rejected.
    pub fn from_indices(k: usize, mut active: Vec<usize>) -> Result<Self, TaskError> {
        if active.is_empty() || active.len() > k {
            return Err(TaskError::InvalidParameter(format!(
                "need 1 <= n <= k, got n={} k={k}",
                active.len()
            )));
        }
        active.sort_unstable();
        if active.windows(2).any(|w| w[0] == w[1]) {
            return Err(TaskError::InvalidParameter("duplicate odorant index".into()));
        }
        if *active.last().unwrap() >= k {
            return Err(TaskError::InvalidParameter(format!(
                "odorant index {} out of range for k={k}",
                active.last().unwrap()
            )));
        }
        Ok(Self { k, active })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.active.len()
    }

    /// Sorted active odorant indices.
    pub fn indices(&self) -> &[usize] {
        &self.active
    }

    /// Dense 0/1 vector of length k.
    pub fn dense(&self) -> DVector<f64> {
        let mut v = DVector::zeros(self.k);
        for &i in &self.active {
            v[i] = 1.0;
        }
        v
    }

    /// Number of shared odorants with `other`.
    pub fn overlap(&self, other: &OdorVector) -> usize {
        let set: HashSet<usize> = self.active.iter().copied().collect();
        other.active.iter().filter(|i| set.contains(i)).count()
    }

    /// Hamming distance between the dense bit vectors.
    pub fn hamming(&self, other: &OdorVector) -> usize {
        self.n() + other.n() - 2 * self.overlap(other)
    }
}

/// Uniformly random n-hot odor over k odorants.
pub fn gen_odor(k: usize, n: usize, rng: &mut ChaCha8Rng) -> Result<OdorVector, TaskError> {
    if n < 1 || n > k {
        return Err(TaskError::InvalidParameter(format!(
            "need 1 <= n <= k, got n={n} k={k}"
        )));
    }
    let active = sample_subset(k, n, &(0..k).collect::<Vec<_>>(), rng);
    OdorVector::from_indices(k, active)
}

/// n distinct elements of `pool` (which indexes into 0..k), uniformly.
fn sample_subset(_k: usize, n: usize, pool: &[usize], rng: &mut ChaCha8Rng) -> Vec<usize> {
    // Floyd's algorithm over pool positions.
    let mut chosen: HashSet<usize> = HashSet::with_capacity(n);
    let m = pool.len();
    for j in (m - n)..m {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    chosen.into_iter().map(|pos| pool[pos]).collect()
}

/// Fixed random projection from odorant space to embedding space. Entries
/// are i.i.d. Gaussian with mean 0 and variance 1/k, fully determined by the
/// seed; the map is immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionMap {
    matrix: DMatrix<f64>,
    seed: u64,
}

impl ProjectionMap {
    pub fn new(d_embed: usize, k: usize, seed: u64) -> Self {
        let mut rng = stream_rng(seed, 0);
        let scale = (1.0 / k as f64).sqrt();
        let matrix = DMatrix::from_fn(d_embed, k, |_, _| {
            let z: f64 = rng.sample(StandardNormal);
            z * scale
        });
        Self { matrix, seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn d_embed(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn k(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Applies the projection to an arbitrary real vector of length k.
    pub fn apply(&self, v: &DVector<f64>) -> Result<DVector<f64>, TaskError> {
        if v.len() != self.k() {
            return Err(TaskError::DimensionMismatch {
                expected: self.k(),
                got: v.len(),
            });
        }
        Ok(&self.matrix * v)
    }

    /// Embeds an odor: projection times its dense bit vector.
    pub fn embed(&self, odor: &OdorVector) -> Result<DVector<f64>, TaskError> {
        if odor.k() != self.k() {
            return Err(TaskError::DimensionMismatch {
                expected: self.k(),
                got: odor.k(),
            });
        }
        self.apply(&odor.dense())
    }
}

/// Parameters for [`gen_task`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TaskParams {
    pub k: usize,
    pub n: usize,
    pub m_nontargets: usize,
    /// overlap level j -> number of probes at that level
    pub probes_per_level: BTreeMap<usize, usize>,
    pub d_embed: usize,
    pub seed: u64,
}

impl TaskParams {
    /// The main-text configuration: k=100, n=10, 200 nontargets, 20 probes
    /// sharing one odorant with the target.
    pub fn default_synthetic(seed: u64) -> Self {
        Self {
            k: 100,
            n: 10,
            m_nontargets: 200,
            probes_per_level: BTreeMap::from([(1, 20)]),
            d_embed: DEFAULT_D_EMBED,
            seed,
        }
    }
}

/// A generated task: target, disjoint nontargets, overlap-graded probes, and
/// their embeddings. Training examples are the target (label +1) followed by
/// the nontargets (label -1); probes never enter training.
#[derive(Debug, Clone)]
pub struct TaskDataset {
    pub params: TaskParams,
    pub target: OdorVector,
    pub nontargets: Vec<OdorVector>,
    pub probes: BTreeMap<usize, Vec<OdorVector>>,
    pub projection: ProjectionMap,
    /// Training inputs, one row per example: target first, then nontargets.
    pub embedded_inputs: DMatrix<f64>,
    /// +1 for the target row, -1 for nontarget rows.
    pub labels: Vec<f64>,
    /// Embedded probes per overlap level, one row per probe.
    pub embedded_probes: BTreeMap<usize, DMatrix<f64>>,
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Generates a task dataset. Fails with a capacity error naming the violated
/// bound when the requested counts exceed the number of distinct odors, and
/// with a retry error if rejection sampling stalls.
pub fn gen_task(params: &TaskParams) -> Result<TaskDataset, TaskError> {
    let TaskParams {
        k,
        n,
        m_nontargets,
        ref probes_per_level,
        d_embed,
        seed,
    } = *params;
    if n < 1 || n > k {
        return Err(TaskError::InvalidParameter(format!(
            "need 1 <= n <= k, got n={n} k={k}"
        )));
    }
    if d_embed == 0 {
        return Err(TaskError::InvalidParameter("d_embed must be positive".into()));
    }
    if n > k - n {
        // Nontargets need n odorants disjoint from the target's n.
        if m_nontargets > 0 {
            return Err(TaskError::Capacity {
                what: format!("nontargets need n <= k-n odorants, C(k-n={}, n={n})", k - n),
                requested: m_nontargets,
                bound: 0,
            });
        }
    }
    let nontarget_bound = binomial(k - n, n);
    if (m_nontargets as u128) > nontarget_bound {
        return Err(TaskError::Capacity {
            what: format!("nontargets C(k-n={}, n={n})", k - n),
            requested: m_nontargets,
            bound: nontarget_bound,
        });
    }
    for (&j, &count) in probes_per_level {
        if j > n {
            return Err(TaskError::InvalidParameter(format!(
                "probe overlap level {j} exceeds n={n}"
            )));
        }
        let bound = binomial(n, j).saturating_mul(binomial(k - n, n - j));
        if count as u128 > bound {
            return Err(TaskError::Capacity {
                what: format!("probes at level {j}: C(n={n}, {j}) * C(k-n={}, {})", k - n, n - j),
                requested: count,
                bound,
            });
        }
    }

    let mut rng = stream_rng(seed, 0);
    let target = gen_odor(k, n, &mut rng)?;
    let pool: Vec<usize> = (0..k).filter(|i| !target.indices().contains(i)).collect();

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut nontargets = Vec::with_capacity(m_nontargets);
    let mut attempts: u64 = 0;
    while nontargets.len() < m_nontargets {
        attempts += 1;
        if attempts > RETRY_CAP {
            return Err(TaskError::RetryBudget {
                what: "nontargets".into(),
                attempts,
            });
        }
        let mut idx = sample_subset(k, n, &pool, &mut rng);
        idx.sort_unstable();
        if seen.insert(idx.clone()) {
            nontargets.push(OdorVector::from_indices(k, idx)?);
        }
    }

    let mut probes: BTreeMap<usize, Vec<OdorVector>> = BTreeMap::new();
    for (&j, &count) in probes_per_level {
        let mut level = Vec::with_capacity(count);
        let mut level_seen: HashSet<Vec<usize>> = HashSet::new();
        let mut attempts: u64 = 0;
        while level.len() < count {
            attempts += 1;
            if attempts > RETRY_CAP {
                return Err(TaskError::RetryBudget {
                    what: format!("probes at level {j}"),
                    attempts,
                });
            }
            let mut idx: Vec<usize> = if j > 0 {
                sample_subset(n, j, target.indices(), &mut rng)
            } else {
                Vec::new()
            };
            if n - j > 0 {
                idx.extend(sample_subset(k, n - j, &pool, &mut rng));
            }
            idx.sort_unstable();
            if level_seen.insert(idx.clone()) {
                level.push(OdorVector::from_indices(k, idx)?);
            }
        }
        probes.insert(j, level);
    }

    let projection = ProjectionMap::new(d_embed, k, stream_seed_for_projection(seed));
    let mut embedded_inputs = DMatrix::zeros(1 + m_nontargets, d_embed);
    embedded_inputs
        .row_mut(0)
        .copy_from(&projection.embed(&target)?.transpose());
    for (i, odor) in nontargets.iter().enumerate() {
        embedded_inputs
            .row_mut(1 + i)
            .copy_from(&projection.embed(odor)?.transpose());
    }
    let mut labels = vec![-1.0; 1 + m_nontargets];
    labels[0] = 1.0;

    let mut embedded_probes = BTreeMap::new();
    for (&j, level) in &probes {
        let mut m = DMatrix::zeros(level.len(), d_embed);
        for (i, odor) in level.iter().enumerate() {
            m.row_mut(i).copy_from(&projection.embed(odor)?.transpose());
        }
        embedded_probes.insert(j, m);
    }

    Ok(TaskDataset {
        params: params.clone(),
        target,
        nontargets,
        probes,
        projection,
        embedded_inputs,
        labels,
        embedded_probes,
    })
}

/// The projection gets its own stream so odor sampling and embedding draw
/// from unrelated sequences.
fn stream_seed_for_projection(seed: u64) -> u64 {
    crate::seeds::derive_seed(seed, 1)
}

#[derive(Serialize, Deserialize)]
struct DatasetJson {
    k: usize,
    n: usize,
    seed: u64,
    target: Vec<usize>,
    nontargets: Vec<Vec<usize>>,
    probes: BTreeMap<usize, Vec<Vec<usize>>>,
}

impl TaskDataset {
    pub fn n_train(&self) -> usize {
        self.embedded_inputs.nrows()
    }

    /// Serializes the combinatorial structure (odors as sorted index lists).
    pub fn to_json(&self) -> String {
        let doc = DatasetJson {
            k: self.params.k,
            n: self.params.n,
            seed: self.params.seed,
            target: self.target.indices().to_vec(),
            nontargets: self
                .nontargets
                .iter()
                .map(|o| o.indices().to_vec())
                .collect(),
            probes: self
                .probes
                .iter()
                .map(|(&j, v)| (j, v.iter().map(|o| o.indices().to_vec()).collect()))
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("dataset serializes")
    }

    /// Rebuilds a dataset from its JSON export. The embedding is regenerated
    /// deterministically from the stored seed; `d_embed` selects the
    /// embedding dimension (it is not part of the export schema).
    pub fn from_json(text: &str, d_embed: usize) -> Result<Self, TaskError> {
        let doc: DatasetJson =
            serde_json::from_str(text).map_err(|e| TaskError::Json(e.to_string()))?;
        let target = OdorVector::from_indices(doc.k, doc.target)?;
        if target.n() != doc.n {
            return Err(TaskError::Json(format!(
                "target has {} odorants, header says n={}",
                target.n(),
                doc.n
            )));
        }
        let nontargets: Vec<OdorVector> = doc
            .nontargets
            .into_iter()
            .map(|idx| OdorVector::from_indices(doc.k, idx))
            .collect::<Result<_, _>>()?;
        let mut probes = BTreeMap::new();
        for (j, list) in doc.probes {
            let level: Vec<OdorVector> = list
                .into_iter()
                .map(|idx| OdorVector::from_indices(doc.k, idx))
                .collect::<Result<_, _>>()?;
            probes.insert(j, level);
        }

        let projection =
            ProjectionMap::new(d_embed, doc.k, stream_seed_for_projection(doc.seed));
        let mut embedded_inputs = DMatrix::zeros(1 + nontargets.len(), d_embed);
        embedded_inputs
            .row_mut(0)
            .copy_from(&projection.embed(&target)?.transpose());
        for (i, odor) in nontargets.iter().enumerate() {
            embedded_inputs
                .row_mut(1 + i)
                .copy_from(&projection.embed(odor)?.transpose());
        }
        let mut labels = vec![-1.0; 1 + nontargets.len()];
        labels[0] = 1.0;
        let mut embedded_probes = BTreeMap::new();
        for (&j, level) in &probes {
            let mut m = DMatrix::zeros(level.len(), d_embed);
            for (i, odor) in level.iter().enumerate() {
                m.row_mut(i).copy_from(&projection.embed(odor)?.transpose());
            }
            embedded_probes.insert(j, m);
        }
        let probes_per_level = probes.iter().map(|(&j, v)| (j, v.len())).collect();
        Ok(TaskDataset {
            params: TaskParams {
                k: doc.k,
                n: doc.n,
                m_nontargets: nontargets.len(),
                probes_per_level,
                d_embed,
                seed: doc.seed,
            },
            target,
            nontargets,
            probes,
            projection,
            embedded_inputs,
            labels,
            embedded_probes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::map_indexed;

    fn rng(seed: u64) -> ChaCha8Rng {
        stream_rng(seed, 0)
    }

    #[test]
    fn gen_odor_counts() {
        // n=3, k=13 (recording setup) and n=10, k=100 (synthetic model).
        let o = gen_odor(13, 3, &mut rng(1)).unwrap();
        assert_eq!(o.n(), 3);
        assert_eq!(o.dense().sum(), 3.0);
        let o = gen_odor(100, 10, &mut rng(2)).unwrap();
        assert_eq!(o.n(), 10);
        // n = k forces the all-ones vector.
        let o = gen_odor(5, 5, &mut rng(3)).unwrap();
        assert_eq!(o.indices(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn gen_odor_rejects_bad_params() {
        assert!(matches!(
            gen_odor(4, 5, &mut rng(0)),
            Err(TaskError::InvalidParameter(_))
        ));
        assert!(matches!(
            gen_odor(4, 0, &mut rng(0)),
            Err(TaskError::InvalidParameter(_))
        ));
    }

    #[test]
    fn gen_odor_is_uniform_over_supports() {
        // k=4, n=2: six possible odors, each should appear ~1/6 of the time.
        let mut counts = std::collections::HashMap::new();
        let mut r = rng(7);
        let draws = 30_000;
        for _ in 0..draws {
            let o = gen_odor(4, 2, &mut r).unwrap();
            *counts.entry(o.indices().to_vec()).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 6);
        for (_, c) in counts {
            let freq = c as f64 / draws as f64;
            assert!((freq - 1.0 / 6.0).abs() < 0.01, "freq={freq}");
        }
    }

    #[test]
    fn default_task_structure() {
        let ds = gen_task(&TaskParams::default_synthetic(42)).unwrap();
        assert_eq!(ds.nontargets.len(), 200);
        assert_eq!(ds.probes[&1].len(), 20);
        assert_eq!(ds.n_train(), 201);
        assert_eq!(ds.labels[0], 1.0);
        assert!(ds.labels[1..].iter().all(|&y| y == -1.0));
        for nt in &ds.nontargets {
            assert_eq!(ds.target.overlap(nt), 0, "nontarget shares an odorant");
            // disjoint support means dot product zero
            assert_eq!(ds.target.dense().dot(&nt.dense()), 0.0);
        }
        for p in &ds.probes[&1] {
            assert_eq!(ds.target.overlap(p), 1);
        }
    }

    #[test]
    fn probe_at_level_n_is_the_target() {
        let params = TaskParams {
            k: 20,
            n: 4,
            m_nontargets: 5,
            probes_per_level: BTreeMap::from([(4, 1)]),
            d_embed: 8,
            seed: 3,
        };
        let ds = gen_task(&params).unwrap();
        assert_eq!(ds.probes[&4][0], ds.target);
    }

    #[test]
    fn capacity_errors_name_the_bound() {
        // C(k-n, n) = C(3, 3) = 1 but two nontargets requested.
        let params = TaskParams {
            k: 6,
            n: 3,
            m_nontargets: 2,
            probes_per_level: BTreeMap::new(),
            d_embed: 4,
            seed: 0,
        };
        match gen_task(&params) {
            Err(TaskError::Capacity { what, requested, bound }) => {
                assert!(what.contains("C(k-n=3, n=3)"), "{what}");
                assert_eq!((requested, bound), (2, 1));
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
        // Probe level bound: C(n,j)*C(k-n,n-j).
        let params = TaskParams {
            k: 8,
            n: 4,
            m_nontargets: 1,
            probes_per_level: BTreeMap::from([(4, 2)]),
            d_embed: 4,
            seed: 0,
        };
        assert!(matches!(gen_task(&params), Err(TaskError::Capacity { .. })));
    }

    #[test]
    fn no_duplicates_within_lists() {
        let params = TaskParams {
            k: 12,
            n: 3,
            m_nontargets: 30,
            probes_per_level: BTreeMap::from([(1, 15), (2, 15)]),
            d_embed: 6,
            seed: 11,
        };
        let ds = gen_task(&params).unwrap();
        let set: HashSet<_> = ds.nontargets.iter().collect();
        assert_eq!(set.len(), ds.nontargets.len());
        for level in ds.probes.values() {
            let set: HashSet<_> = level.iter().collect();
            assert_eq!(set.len(), level.len());
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let params = TaskParams::default_synthetic(9);
        let a = gen_task(&params).unwrap();
        let b = gen_task(&params).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.embedded_inputs, b.embedded_inputs);
        assert_eq!(a.embedded_probes[&1], b.embedded_probes[&1]);
    }

    #[test]
    fn json_round_trip() {
        let params = TaskParams {
            k: 15,
            n: 3,
            m_nontargets: 10,
            probes_per_level: BTreeMap::from([(1, 4), (2, 4)]),
            d_embed: 7,
            seed: 5,
        };
        let ds = gen_task(&params).unwrap();
        let text = ds.to_json();
        let back = TaskDataset::from_json(&text, params.d_embed).unwrap();
        assert_eq!(back.target, ds.target);
        assert_eq!(back.nontargets, ds.nontargets);
        assert_eq!(back.probes, ds.probes);
        assert_eq!(back.embedded_inputs, ds.embedded_inputs);
    }

    #[test]
    fn projection_is_linear() {
        let proj = ProjectionMap::new(6, 10, 4);
        let zero = DVector::zeros(10);
        assert_eq!(proj.apply(&zero).unwrap(), DVector::zeros(6));
        let a = DVector::from_fn(10, |i, _| i as f64);
        let b = DVector::from_fn(10, |i, _| (i as f64).cos());
        let lhs = proj.apply(&(&a + &b)).unwrap();
        let rhs = proj.apply(&a).unwrap() + proj.apply(&b).unwrap();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn projection_rejects_dimension_mismatch() {
        let proj = ProjectionMap::new(6, 10, 4);
        let v = DVector::zeros(9);
        assert!(matches!(
            proj.apply(&v),
            Err(TaskError::DimensionMismatch { expected: 10, got: 9 })
        ));
    }

    /// Monte Carlo oracle: with projection entries of variance 1/k, the
    /// expected squared embedded distance between two odors equals
    /// d_embed * hamming / k. Checked to 5% relative error over 10^4 seeds.
    #[test]
    fn embedding_isometry_in_expectation() {
        let k = 13;
        let d_embed = 10;
        let a = OdorVector::from_indices(k, vec![0, 1, 2]).unwrap();
        let b = OdorVector::from_indices(k, vec![0, 5, 6]).unwrap();
        let hamming = a.hamming(&b) as f64;
        assert_eq!(hamming, 4.0);
        let expected = d_embed as f64 * hamming / k as f64;
        let n_seeds = 10_000;
        let sq = map_indexed(n_seeds, |s| {
            let proj = ProjectionMap::new(d_embed, k, s as u64);
            let d = proj.embed(&a).unwrap() - proj.embed(&b).unwrap();
            d.norm_squared()
        });
        let mean = sq.iter().sum::<f64>() / n_seeds as f64;
        assert!(
            (mean - expected).abs() / expected < 0.05,
            "mean={mean} expected={expected}"
        );
    }

    /// Over many projections, a level-1 probe lands closer to the target (in
    /// mean squared embedded distance) than a level-0 nontarget does.
    #[test]
    fn probes_embed_closer_than_nontargets() {
        let params = TaskParams {
            k: 100,
            n: 10,
            m_nontargets: 1,
            probes_per_level: BTreeMap::from([(1, 1)]),
            d_embed: 50,
            seed: 21,
        };
        let ds = gen_task(&params).unwrap();
        let (mut to_probe, mut to_nontarget) = (0.0, 0.0);
        let n_seeds = 1000;
        let dists = map_indexed(n_seeds, |s| {
            let proj = ProjectionMap::new(params.d_embed, params.k, 1000 + s as u64);
            let t = proj.embed(&ds.target).unwrap();
            let p = proj.embed(&ds.probes[&1][0]).unwrap();
            let nt = proj.embed(&ds.nontargets[0]).unwrap();
            ((&t - p).norm_squared(), (t - nt).norm_squared())
        });
        for (dp, dn) in dists {
            to_probe += dp;
            to_nontarget += dn;
        }
        assert!(to_probe < to_nontarget);
    }
}
