//! On-disk formats (JSON syntax).
//!
//! Phase files carry the structure table with all products sorted by basis
//! pair, the filtration layers as canonical row-echelon bases, and the
//! optional island witness; matrices and subspaces are arrays of 0/1
//! integers in row-major order. Rep files carry the acted-on phase inline
//! or by file reference. Serialization is bit-exact and round-trips.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::filtrep::{FilteredRep, RepLevel};
use crate::gf2lin::{BitVec, GF2Matrix, GF2Subspace};
use crate::phase::{AlgebraTable, Phase};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid json in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("malformed file: {reason}")]
    Malformed { reason: String },
}

/// The phase file schema.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PhaseFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<u8>,
    /// All products `e_i e_j` as `[i, j, bits]`, sorted by `(i, j)`.
    pub mul: Vec<(usize, usize, Vec<u8>)>,
    /// Filtration layers, each a list of basis rows in canonical
    /// row-echelon form; the first layer is the full space.
    pub filtration: Vec<Vec<Vec<u8>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_island: Option<Vec<Vec<u8>>>,
}

impl PhaseFile {
    pub fn from_phase(p: &Phase) -> Self {
        let n = p.dim();
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mul.push((i, j, p.mul_basis(i, j).to_ints()));
            }
        }
        PhaseFile {
            dim: n,
            labels: p.labels().to_vec(),
            unit: p.unit().to_ints(),
            mul,
            filtration: p
                .filtration()
                .iter()
                .map(|s| s.basis().iter().map(|b| b.to_ints()).collect())
                .collect(),
            witness_island: p
                .witness_island()
                .map(|s| s.basis().iter().map(|b| b.to_ints()).collect()),
        }
    }

    pub fn into_phase(self) -> Result<Phase, FileError> {
        let n = self.dim;
        if self.labels.len() != n {
            return Err(FileError::Malformed {
                reason: format!("{} labels for dimension {n}", self.labels.len()),
            });
        }
        if self.unit.len() != n {
            return Err(FileError::Malformed {
                reason: "unit vector has wrong length".to_string(),
            });
        }
        if self.mul.len() != n * n {
            return Err(FileError::Malformed {
                reason: format!("{} products for dimension {n}", self.mul.len()),
            });
        }
        let mut mul = vec![BitVec::zero(n); n * n];
        let mut seen = vec![false; n * n];
        for (i, j, bits) in &self.mul {
            if *i >= n || *j >= n {
                return Err(FileError::Malformed {
                    reason: format!("product index ({i},{j}) out of range"),
                });
            }
            if bits.len() != n {
                return Err(FileError::Malformed {
                    reason: format!("product ({i},{j}) has wrong length"),
                });
            }
            if seen[i * n + j] {
                return Err(FileError::Malformed {
                    reason: format!("duplicate product entry ({i},{j})"),
                });
            }
            seen[i * n + j] = true;
            mul[i * n + j] = BitVec::from_ints(bits);
        }
        if !seen.iter().all(|&s| s) {
            return Err(FileError::Malformed {
                reason: "missing product entries".to_string(),
            });
        }
        if self.filtration.is_empty() {
            return Err(FileError::Malformed {
                reason: "empty filtration".to_string(),
            });
        }
        let mut layers = Vec::with_capacity(self.filtration.len());
        for (k, rows) in self.filtration.iter().enumerate() {
            let vecs: Vec<BitVec> = rows
                .iter()
                .map(|r| {
                    if r.len() != n {
                        Err(FileError::Malformed {
                            reason: format!("filtration layer {k} has a row of wrong length"),
                        })
                    } else {
                        Ok(BitVec::from_ints(r))
                    }
                })
                .collect::<Result<_, _>>()?;
            let canon = GF2Subspace::from_rows(n, vecs.clone());
            let canon_rows: Vec<Vec<u8>> =
                canon.basis().iter().map(|b| b.to_ints()).collect();
            if &canon_rows != rows {
                return Err(FileError::Malformed {
                    reason: format!("filtration layer {k} is not in canonical form"),
                });
            }
            layers.push(canon);
        }
        let witness = match &self.witness_island {
            Some(rows) => {
                let vecs: Vec<BitVec> = rows
                    .iter()
                    .map(|r| {
                        if r.len() != n {
                            Err(FileError::Malformed {
                                reason: "island witness row of wrong length".to_string(),
                            })
                        } else {
                            Ok(BitVec::from_ints(r))
                        }
                    })
                    .collect::<Result<_, _>>()?;
                Some(GF2Subspace::from_rows(n, vecs))
            }
            None => None,
        };
        let table = AlgebraTable::new(self.labels, BitVec::from_ints(&self.unit), mul);
        Ok(Phase::from_parts(table, layers, witness))
    }
}

/// A rep file names its phase inline or by path.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PhaseRef {
    File { file: String },
    Inline(PhaseFile),
}

/// The representation file schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepFile {
    pub phase: PhaseRef,
    pub mdim: usize,
    /// One matrix per phase basis element, each as rows of 0/1.
    pub action: Vec<Vec<Vec<u8>>>,
    /// Module filtration layers as canonical row bases.
    pub vfilt: Vec<Vec<Vec<u8>>>,
    pub level: String,
}

impl RepFile {
    pub fn from_rep(p: &Phase, r: &FilteredRep, phase_ref: Option<String>) -> Self {
        RepFile {
            phase: match phase_ref {
                Some(path) => PhaseRef::File { file: path },
                None => PhaseRef::Inline(PhaseFile::from_phase(p)),
            },
            mdim: r.mdim,
            action: r.action.iter().map(|a| a.to_ints()).collect(),
            vfilt: r
                .vfilt
                .iter()
                .map(|s| s.basis().iter().map(|b| b.to_ints()).collect())
                .collect(),
            level: match r.level {
                RepLevel::Weak => "weak".to_string(),
                RepLevel::Terminating => "terminating".to_string(),
            },
        }
    }

    /// Resolve into the phase and the rep; `base_dir` anchors file refs.
    pub fn into_rep(self, base_dir: &Path) -> Result<(Phase, FilteredRep), FileError> {
        let phase = match self.phase {
            PhaseRef::Inline(pf) => pf.into_phase()?,
            PhaseRef::File { file } => load_phase(&base_dir.join(file))?,
        };
        let n = phase.dim();
        if self.action.len() != n {
            return Err(FileError::Malformed {
                reason: format!("{} action matrices for phase dimension {n}", self.action.len()),
            });
        }
        let m = self.mdim;
        let action: Vec<GF2Matrix> = self
            .action
            .iter()
            .map(|rows| {
                if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                    Err(FileError::Malformed {
                        reason: "action matrix with wrong shape".to_string(),
                    })
                } else {
                    Ok(GF2Matrix::from_ints(m, m, rows))
                }
            })
            .collect::<Result<_, _>>()?;
        let vfilt: Vec<GF2Subspace> = self
            .vfilt
            .iter()
            .map(|rows| {
                let vecs: Vec<BitVec> = rows
                    .iter()
                    .map(|r| {
                        if r.len() != m {
                            Err(FileError::Malformed {
                                reason: "module layer row of wrong length".to_string(),
                            })
                        } else {
                            Ok(BitVec::from_ints(r))
                        }
                    })
                    .collect::<Result<_, _>>()?;
                Ok(GF2Subspace::from_rows(m, vecs))
            })
            .collect::<Result<_, FileError>>()?;
        let level = match self.level.as_str() {
            "weak" => RepLevel::Weak,
            "terminating" => RepLevel::Terminating,
            other => {
                return Err(FileError::Malformed {
                    reason: format!("unknown level '{other}'"),
                })
            }
        };
        Ok((
            phase,
            FilteredRep {
                phase_dim: n,
                mdim: m,
                action,
                vfilt,
                level,
            },
        ))
    }
}

pub fn save_json<T: Serialize>(value: &T, path: &Path) -> Result<(), FileError> {
    let text = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    fs::write(path, text + "\n").map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FileError> {
    let text = fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| FileError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn save_phase(p: &Phase, path: &Path) -> Result<(), FileError> {
    save_json(&PhaseFile::from_phase(p), path)
}

pub fn load_phase(path: &Path) -> Result<Phase, FileError> {
    read_json::<PhaseFile>(path)?.into_phase()
}

pub fn save_rep(p: &Phase, r: &FilteredRep, path: &Path) -> Result<(), FileError> {
    save_json(&RepFile::from_rep(p, r, None), path)
}

pub fn load_rep(path: &Path) -> Result<(Phase, FilteredRep), FileError> {
    let rf: RepFile = read_json(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    rf.into_rep(base)
}

/// Sniff whether a JSON file holds a rep (has "mdim") or a phase.
pub fn sniff_is_rep(path: &Path) -> Result<bool, FileError> {
    let value: serde_json::Value = read_json(path)?;
    Ok(value.get("mdim").is_some())
}
