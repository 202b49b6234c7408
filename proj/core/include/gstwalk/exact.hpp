#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gstwalk/graph.hpp"
#include "gstwalk/vertex_set.hpp"

namespace gstwalk {

/// Exact rational scalar as a decimal "num/den" string pair. The heavy
/// arithmetic lives behind the implementation (GMP); the public surface
/// stays printable and hashable.
struct ExactScalar {
    std::string value;  // canonical "num/den", den > 0, gcd-reduced
    bool operator==(const ExactScalar&) const = default;
};

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Entry as canonical "num/den".
    std::string entry(int r, int c) const;

    bool operator==(const RationalMatrix&) const = default;

    // Opaque payload: index into the implementation-side storage.
    std::vector<std::string> flat;  // row-major canonical strings

private:
    int rows_ = 0;
    int cols_ = 0;
};

/// Element of Q(zeta_q) as the coefficient vector of sum c_j zeta_q^j.
struct CyclotomicNumber {
    long order = 1;                   // q
    std::vector<ExactScalar> coeffs;  // length q
};

enum class CertVerdict { certified_gst, certified_not_gst };

struct Certificate {
    std::uint64_t graph_hash = 0;
    VertexSet source;
    VertexSet target;
    long p = 0;
    long q = 1;
    CertVerdict verdict = CertVerdict::certified_not_gst;
    std::vector<std::pair<int, int>> zero_entries;          // verified-zero (row,col)
    std::optional<std::pair<int, int>> nonzero_witness;     // for not-GST
};

/// FNV-1a over the vertex count and sorted edge list.
std::uint64_t graph_hash(const Graph& x);

/// Exact eigenprojectors E_r = prod_{s != r} (A - theta_s I)/(theta_r - theta_s)
/// for an integer-spectrum graph. The integer spectrum is taken from the
/// numeric eigenvalues (each within 1e-6 of an integer), then verified
/// exactly by the annihilation identity prod_r (A - theta_r I) = 0 over
/// the integers. Throws naming the offending eigenvalue otherwise.
std::vector<std::pair<long, RationalMatrix>> rational_projectors(const Graph& x);

/// Exact U(2*pi*p/q)_{b,a} = sum_r (E_r)_{b,a} zeta_q^{(p theta_r) mod q}.
/// a, b are 0-indexed.
CyclotomicNumber entry_at_rational_time(
    const std::vector<std::pair<long, RationalMatrix>>& projectors, int a, int b,
    long p, long q);

/// True iff the coefficient polynomial is divisible by the q-th cyclotomic
/// polynomial, i.e. the number is exactly zero in Q(zeta_q).
bool is_zero(const CyclotomicNumber& x);

/// Exact certificate for (S,T)-GST at time 2*pi*p/q: every entry (b,a)
/// with a in S, b not in T must vanish in Q(zeta_q).
Certificate certify_gst(const Graph& x, const VertexSet& s, const VertexSet& t,
                        long p, long q);

/// q-th cyclotomic polynomial coefficients (exact integers, ascending
/// degree), by division of X^q - 1 by the proper-divisor cyclotomics.
std::vector<long> cyclotomic_polynomial(long q);

// Exact-arithmetic checks used by the verification suite.
bool projectors_sum_to_identity(const std::vector<std::pair<long, RationalMatrix>>& projs);
bool projectors_orthogonal_idempotent(const std::vector<std::pair<long, RationalMatrix>>& projs);

/// Canonical "num/den" arithmetic helpers for tests and serialization.
ExactScalar exact_add(const ExactScalar& a, const ExactScalar& b);
bool exact_is_zero(const ExactScalar& a);
double exact_to_double(const ExactScalar& a);

} // namespace gstwalk
