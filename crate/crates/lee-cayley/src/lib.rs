//! Linear quasi-perfect Lee codes from Cayley graphs over the Gaussian
//! integers.
//!
//! For an odd prime `p` let `G_p` be the Cayley graph whose vertices are
//! the elements of the quotient ring Z[i]/pZ[i] and whose generators are
//! the `2n` elements of norm 1, where `n = 2[p/4]`. Reading the real and
//! imaginary parts of one generator per `{b, -b}` pair off as the columns
//! of a `2 x n` matrix over Z/pZ gives the parity-check matrix of a p-ary
//! Lee code of dimension `n`: the graph diameter equals the covering
//! radius of the code, and the graph's sphere-packing capacity equals its
//! error correction. For primes `p = +-5 (mod 12)`, `p >= 7`, the result
//! is a 2-error-correcting, 3-covering ("2-quasi-perfect") code with
//! `p^(n-2)` codewords at density `1/p^2`.
//!
//! The crate builds these codes, decodes with a BFS-derived coset-leader
//! table, and verifies the supporting combinatorics: unit-norm set
//! cardinalities, neighbor-norm sets, point counts on the associated cubic
//! curves, and the character-sum spectra of the graphs (including their
//! Ramanujan classification).
//!
//! # Quick start
//!
//! ```
//! use lee_cayley::code::{build_code, lee_weight, Word};
//!
//! let code = build_code(7)?;
//! assert_eq!(code.classify(), (2, 3)); // corrects 2 errors, covers at radius 3
//!
//! // Flip a codeword coordinate twice and decode it back.
//! let sent = Word::zero(code.dimension(), 7);
//! let received = Word::from_signed(&[0, 2, 0, 0], 7);
//! let decoded = code.decode(&received)?;
//! assert_eq!(decoded.codeword, sent);
//! assert_eq!(lee_weight(&decoded.error), 2);
//! # Ok::<(), lee_cayley::Error>(())
//! ```
//!
//! The `examples/` directory walks through every major capability; the
//! `lee-cayley` binary exposes the same checks as subcommands.

pub mod cayley;
pub mod cli;
pub mod code;
pub mod error;
pub mod normsets;
pub mod spectral;
pub mod zmod;

pub use error::{Error, Result};
pub use zmod::{GaussRes, Residue};
