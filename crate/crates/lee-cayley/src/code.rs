//! The p-ary Lee code attached to the unit-norm Cayley graph: parity-check
//! matrix, syndrome map, coset-leader decoding, and the code/graph
//! correspondence (graph diameter = covering radius, graph capacity =
//! error correction).
//!
//! Coset leaders are not stored as an explicit table of p^2 words; the
//! BFS tree of the graph *is* the table, and a leader is materialized on
//! demand by walking parent pointers (at most `diameter` steps). With the
//! canonical generator order this makes every decoding choice, including
//! ties among minimal-weight leaders, deterministic.

use num_bigint::BigUint;
use std::str::FromStr;

use crate::cayley::{analyze_distance_map, distance_map, CayleyAnalysis, DistanceMap};
use crate::error::{Error, Result};
use crate::normsets::unit_norm_set;
use crate::zmod::{ensure_odd_prime, GaussRes, Residue};

/// A word in Z_p^n with entries stored canonically in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    coords: Vec<u64>,
    modulus: u64,
}

impl Word {
    pub fn new(coords: Vec<u64>, modulus: u64) -> Self {
        Word {
            coords: coords.into_iter().map(|c| c % modulus).collect(),
            modulus,
        }
    }

    pub fn from_signed(coords: &[i64], modulus: u64) -> Self {
        Word {
            coords: coords
                .iter()
                .map(|&c| Residue::from_signed(c, modulus).value())
                .collect(),
            modulus,
        }
    }

    pub fn zero(len: usize, modulus: u64) -> Self {
        Word {
            coords: vec![0; len],
            modulus,
        }
    }

    /// The j-th unit vector.
    pub fn unit(len: usize, j: usize, modulus: u64) -> Self {
        let mut w = Word::zero(len, modulus);
        w.coords[j] = 1;
        w
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn coord(&self, j: usize) -> Residue {
        Residue::new(self.coords[j], self.modulus)
    }

    fn checked_pair<'a>(&'a self, other: &'a Word) -> Result<()> {
        assert_eq!(self.modulus, other.modulus, "mixing moduli");
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    /// Coordinatewise difference mod p.
    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.checked_pair(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| (self.modulus + a - b) % self.modulus)
            .collect();
        Ok(Word {
            coords,
            modulus: self.modulus,
        })
    }

    /// Coordinatewise sum mod p.
    pub fn add(&self, other: &Word) -> Result<Word> {
        self.checked_pair(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| (a + b) % self.modulus)
            .collect();
        Ok(Word {
            coords,
            modulus: self.modulus,
        })
    }
}

/// Lee weight: the sum of the symmetric-representative magnitudes.
pub fn lee_weight(w: &Word) -> u64 {
    w.coords
        .iter()
        .map(|&c| Residue::new(c, w.modulus()).lee_magnitude())
        .sum()
}

/// Lee distance `|v - w|`.
pub fn lee_distance(v: &Word, w: &Word) -> Result<u64> {
    Ok(lee_weight(&v.sub(w)?))
}

/// Result of decoding: the nearest codeword chosen by the coset-leader
/// rule and the error estimate `received - codeword`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: Word,
    pub error: Word,
}

/// Outcome of checking the distance identity `d_G(phi(x), 0) = d(x, C)`
/// on a batch of words against the brute-force nearest-codeword oracle.
#[derive(Debug, Clone)]
pub struct Lemma1Report {
    pub checked: usize,
    pub failures: Vec<Lemma1Failure>,
    pub all_hold: bool,
}

#[derive(Debug, Clone)]
pub struct Lemma1Failure {
    pub word: Word,
    pub graph_distance: u32,
    pub code_distance: u64,
}

/// Export formats for the parity-check matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Cap on explicit codeword enumeration (p^(n-2) words).
const ENUMERATION_LIMIT: u64 = 100_000;

/// The linear Lee code over Z_p^n with parity-check columns read off the
/// unit-norm set of Z[i]/pZ[i].
#[derive(Debug, Clone)]
pub struct LeeCode {
    p: u64,
    /// One representative per `{b, -b}` pair of the unit-norm set, sorted;
    /// from each pair the lexicographically smaller canonical form is kept.
    representatives: Vec<GaussRes>,
    /// Generator index -> (representative index, sign).
    rep_of_gen: Vec<(usize, i8)>,
    bfs: DistanceMap,
    analysis: CayleyAnalysis,
}

/// Builds the code for an odd prime `p >= 3`: unit-norm generator set,
/// BFS coset-leader tree, and graph analysis.
pub fn build_code(p: u64) -> Result<LeeCode> {
    ensure_odd_prime(p)?;
    let h = unit_norm_set(p)?;
    let bfs = distance_map(&h)?;
    let analysis = analyze_distance_map(&bfs)?;
    let representatives: Vec<GaussRes> =
        h.iter().filter(|&b| b < -b).collect();
    debug_assert_eq!(representatives.len() * 2, h.len());
    let rep_of_gen = h
        .iter()
        .map(|b| {
            let key = b.min(-b);
            let j = representatives
                .binary_search(&key)
                .expect("every generator has a representative");
            (j, if b == key { 1i8 } else { -1i8 })
        })
        .collect();
    Ok(LeeCode {
        p,
        representatives,
        rep_of_gen,
        bfs,
        analysis,
    })
}

impl LeeCode {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Code dimension n (= half the graph degree).
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[GaussRes] {
        &self.representatives
    }

    pub fn analysis(&self) -> &CayleyAnalysis {
        &self.analysis
    }

    /// The 2 x n parity-check matrix: row 0 holds the real parts of the
    /// representatives, row 1 the imaginary parts.
    pub fn parity_check_rows(&self) -> [Vec<u64>; 2] {
        let re = self.representatives.iter().map(|b| b.re().value()).collect();
        let im = self.representatives.iter().map(|b| b.im().value()).collect();
        [re, im]
    }

    /// Number of codewords, `p^(n-2)`.
    pub fn codeword_count(&self) -> BigUint {
        BigUint::from(self.p).pow(self.dimension() as u32 - 2)
    }

    /// The syndrome `phi(w) = sum_j w_j * b_j` in Z[i]/pZ[i].
    pub fn syndrome(&self, w: &Word) -> Result<GaussRes> {
        self.check_len(w)?;
        let mut acc = GaussRes::zero(self.p);
        for (j, &b) in self.representatives.iter().enumerate() {
            acc = acc + b * w.coord(j);
        }
        Ok(acc)
    }

    /// True when `w` lies in the kernel of the syndrome map.
    pub fn contains(&self, w: &Word) -> Result<bool> {
        Ok(self.syndrome(w)?.is_zero())
    }

    /// The coset leader for a syndrome: a minimum-Lee-weight word mapping
    /// to it, materialized from the BFS tree. Deterministic, with
    /// `lee_weight(leader) = d_G(syndrome, 0)`.
    pub fn leader(&self, syndrome: GaussRes) -> Word {
        let mut coords = vec![0i64; self.dimension()];
        for k in self.bfs.path_generators(syndrome) {
            let (j, sign) = self.rep_of_gen[k];
            coords[j] += sign as i64;
        }
        Word::from_signed(&coords, self.p)
    }

    /// Iterates the full coset-leader table: all p^2 (syndrome, leader)
    /// pairs in canonical syndrome order.
    pub fn leaders(&self) -> impl Iterator<Item = (GaussRes, Word)> + '_ {
        let p = self.p;
        (0..p * p).map(move |idx| {
            let s = GaussRes::from_parts((idx / p) as i64, (idx % p) as i64, p);
            (s, self.leader(s))
        })
    }

    /// Coset-leader decoding. Total on words of the right length: every
    /// word decodes to a codeword within the covering radius, and any
    /// error of weight up to the correction capacity is recovered exactly.
    pub fn decode(&self, w: &Word) -> Result<Decoded> {
        let error = self.leader(self.syndrome(w)?);
        let codeword = w.sub(&error)?;
        Ok(Decoded { codeword, error })
    }

    /// `(error correction, covering radius)` of the code, read off the
    /// graph: capacity and diameter.
    pub fn classify(&self) -> (u32, u32) {
        (
            self.analysis.correction_capacity,
            self.analysis.diameter,
        )
    }

    fn check_len(&self, w: &Word) -> Result<()> {
        assert_eq!(w.modulus(), self.p, "mixing moduli");
        if w.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                got: w.len(),
            });
        }
        Ok(())
    }

    /// Positions of the representatives 1 and i, whose parity-check
    /// columns form an identity submatrix. Both are always present.
    fn pivot_columns(&self) -> (usize, usize) {
        let one = self
            .representatives
            .binary_search(&GaussRes::one(self.p))
            .expect("1 has unit norm");
        let i = self
            .representatives
            .binary_search(&GaussRes::i(self.p))
            .expect("i has unit norm");
        (one, i)
    }

    /// Solves the two parity equations for the pivot coordinates given
    /// values for the free coordinates (listed in column order, skipping
    /// the pivots).
    fn complete_kernel_word(&self, free: &[u64]) -> Word {
        let (j_one, j_i) = self.pivot_columns();
        let mut coords = vec![0u64; self.dimension()];
        let mut acc = GaussRes::zero(self.p);
        let mut it = free.iter();
        for (j, &b) in self.representatives.iter().enumerate() {
            if j == j_one || j == j_i {
                continue;
            }
            let v = *it.next().expect("free coordinate count");
            coords[j] = v % self.p;
            acc = acc + b * Residue::new(v, self.p);
        }
        // x_one counters the real part, x_i the imaginary part.
        coords[j_one] = (-acc.re()).value();
        coords[j_i] = (-acc.im()).value();
        Word::new(coords, self.p)
    }

    /// All p^(n-2) codewords, enumerated through the kernel
    /// parametrization. Only feasible for small codes; larger ones are
    /// rejected rather than silently truncated.
    pub fn enumerate_codewords(&self) -> Result<Vec<Word>> {
        let count = self.codeword_count();
        if count > BigUint::from(ENUMERATION_LIMIT) {
            return Err(Error::EnumerationTooLarge {
                codewords: count.to_string(),
                limit: ENUMERATION_LIMIT,
            });
        }
        let free_len = self.dimension() - 2;
        let total: u64 = count.try_into().expect("checked against limit");
        let mut words = Vec::with_capacity(total as usize);
        let mut free = vec![0u64; free_len];
        for mut idx in 0..total {
            for slot in free.iter_mut() {
                *slot = idx % self.p;
                idx /= self.p;
            }
            words.push(self.complete_kernel_word(&free));
        }
        Ok(words)
    }

    /// Draws a uniformly random codeword by assigning the free
    /// coordinates at random and completing the parity equations.
    pub fn random_codeword(&self, rng: &mut impl rand::Rng) -> Word {
        let free: Vec<u64> = (0..self.dimension() - 2)
            .map(|_| rng.gen_range(0..self.p))
            .collect();
        self.complete_kernel_word(&free)
    }

    /// Checks `d_G(phi(x), 0) = d(x, C)` for each given word, with the
    /// right-hand side computed by brute force over all codewords.
    pub fn verify_lemma1(&self, words: &[Word]) -> Result<Lemma1Report> {
        let codewords = self.enumerate_codewords()?;
        let mut failures = Vec::new();
        for w in words {
            let graph_distance = self.bfs.distance(self.syndrome(w)?);
            let code_distance = codewords
                .iter()
                .map(|c| lee_distance(w, c).expect("equal lengths"))
                .min()
                .expect("at least the zero codeword");
            if graph_distance as u64 != code_distance {
                failures.push(Lemma1Failure {
                    word: w.clone(),
                    graph_distance,
                    code_distance,
                });
            }
        }
        Ok(Lemma1Report {
            checked: words.len(),
            all_hold: failures.is_empty(),
            failures,
        })
    }

    /// Serializes the parity-check matrix.
    ///
    /// CSV: two comma-separated lines (row 0 then row 1), newline
    /// terminated. JSON: `{"p", "n", "rows", "representatives"}` with
    /// arrays in canonical column order.
    pub fn export_parity_check(&self, format: ExportFormat) -> String {
        let [re, im] = self.parity_check_rows();
        match format {
            ExportFormat::Csv => {
                let line = |row: &[u64]| {
                    row.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                format!("{}\n{}\n", line(&re), line(&im))
            }
            ExportFormat::Json => {
                let reps: Vec<[u64; 2]> = self
                    .representatives
                    .iter()
                    .map(|b| [b.re().value(), b.im().value()])
                    .collect();
                serde_json::json!({
                    "p": self.p,
                    "n": self.dimension(),
                    "rows": [re, im],
                    "representatives": reps,
                })
                .to_string()
            }
        }
    }
}
