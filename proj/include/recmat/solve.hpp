#pragma once

#include <cstdint>
#include <functional>

#include "recmat/presentation.hpp"

namespace recmat::solve {

/// Search bounds for the guess-and-verify loops. CapExceededError is
/// deliberately ambiguous between "the element is not a recurrence matrix"
/// and "the caps are too small".
struct InferenceCaps {
    int max_level = 16;     // deepest truncation level pulled
    int max_word_len = 8;   // longest shift word spanning V(n, m)
    int max_dim = 64;       // largest accepted complexity
};

/// Serves the 2^level x 2^level window of the target sequence; throws
/// InsufficientDataError when no deeper data exists. Pulled lazily and
/// memoized by the engine, so providers may compute on demand.
using TruncationProvider = std::function<DenseMatrix(int level)>;

struct InferredPresentation {
    Presentation pres;
    int stabilized_level = 0;   // N at stabilization
    int stabilized_words = 0;   // M at stabilization
};

/// Stabilization search: grow (N, M) until the spans V(N,M), V(N+1,M) and
/// V(N,M+1) of word-shifted truncations agree in dimension, read off a
/// presentation through the span isomorphisms, then validate it against the
/// data one level past everything that informed the guess (growing N on
/// mismatch).
InferredPresentation infer(const TruncationProvider& provider, const Field& field,
                           const InferenceCaps& caps, int start_level = 1);

/// Inference from a fixed truncated sequence (at least 3 levels).
Presentation infer_from_truncation(const TruncatedSequence& t, const InferenceCaps& caps);

/// Inference from a coefficient oracle; the result is validated entrywise on
/// the full window of size 2^depth (ValidationMismatchError on failure).
Presentation infer_from_oracle(const std::function<Scalar(std::uint64_t, std::uint64_t)>& oracle,
                               int depth, const Field& field, const InferenceCaps& caps);

struct InvertResult {
    Presentation inverse;
    ZeroCertificate left_certificate;   // B A - Id
    ZeroCertificate right_certificate;  // A B - Id
};

/// Inverse in the recurrence-matrix algebra: guess from dense window inverses,
/// then certify A B = B A = Id exactly. SingularAtLevelError when some window
/// is singular; CapExceededError when no certified inverse emerges within caps.
InvertResult invert(const Presentation& a, const InferenceCaps& caps = {});

struct LuResult {
    Presentation lower;           // unit lower triangular
    Presentation diag_or_upper;   // D when symmetric, else U
    ZeroCertificate certificate;  // A - L D L^t (resp. A - L U)
    bool symmetric = false;
};

/// LU (LDL^t when symmetric) of a convergent element: dense factorizations of
/// the windows feed presentation inference for each factor; the identity is
/// then certified exactly. det(A(m)) = prod_{k<m} diag_entry(D, k).
LuResult lu_decompose(const Presentation& a, bool symmetric,
                      const InferenceCaps& caps = {});

}  // namespace recmat::solve
