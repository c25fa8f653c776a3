//! Syntactic complexity scoring and controlled split-and-rephrase
//! simplification for English sentences.
//!
//! The pipeline works on dependency-parsed sentences ([`ParsedSentence`],
//! canonically read from CoNLL-U):
//!
//! 1. [`ingest`] — CoNLL-U parsing, a heuristic fallback tagger for plain
//!    text, and stop-word marking.
//! 2. [`complexity`] — the weighted syntactic-complexity (SC) score over
//!    token/verb/conjunction counts, plus the four-way sentence
//!    classification (simple / compound / complex / compound-complex).
//! 3. [`simplify`] — clause identification over the dependency tree and the
//!    controlled splitting loop that rewrites a compound/complex sentence
//!    into wording-preserving simple sentences.
//! 4. [`metrics`] — bag-of-words cosine and Jaccard similarity between
//!    sentence sets, confusion matrices and accuracy.
//! 5. [`corpus`] — JSONL corpus I/O and the two evaluation runs
//!    (classification accuracy and simplification relevance).
//!
//! ```
//! use synsim::ingest::{read_conllu, StopWordList};
//! use synsim::complexity::{score, ScoringMethod, ScoringWeights};
//!
//! let conllu = "\
//! 1\tDogs\tdog\tNOUN\t_\t_\t2\tnsubj\t_\t_
//! 2\tbark\tbark\tVERB\t_\t_\t0\troot\t_\t_
//! 3\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_
//! ";
//! let mut sentences = read_conllu(conllu.as_bytes()).unwrap();
//! let stops = StopWordList::bundled();
//! let sent = sentences.remove(0).with_stopwords(stops);
//! let report = score(&sent, ScoringMethod::PosBased, &ScoringWeights::default());
//! assert!(!report.is_complex);
//! ```

pub mod complexity;
pub mod corpus;
pub mod ingest;
pub mod metrics;
pub mod simplify;

pub use complexity::{
    classify, count_components, score, ComplexityReport, ScoringMethod, ScoringWeights,
    SentenceClass, SentenceLabel,
};
pub use ingest::{read_conllu, tag_plain_text, ParsedSentence, StopWordList, Token};
pub use metrics::{ConfusionMatrix2x2, EvalReport, SentenceSet};
pub use simplify::{Clause, ClauseKind, SimpleSentence, SimplificationResult, Simplifier};
