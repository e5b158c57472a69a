#ifndef STANLEY_COMBINATORICS_HPP
#define STANLEY_COMBINATORICS_HPP

/**
 * Exact integer calculus on binomial coefficients: Macaulay representations,
 * the Kruskal-Katona shadow function, the threshold xi and ballot-path counts.
 *
 * Everything is unsigned 64-bit with checked arithmetic. Any intermediate that
 * leaves the range raises stanley::Overflow.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace stanley {

using u64 = std::uint64_t;

/// binom(n, k), 0 when k > n.
u64 binomial(u64 n, u64 k);

/// Same as binomial() but returns nullopt instead of throwing on overflow.
std::optional<u64> binomial_checked(u64 n, u64 k);

u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);

/**
 * The k-th Macaulay representation x = C(a_k,k) + ... + C(a_i,i) with
 * a_k > ... > a_i >= i > 0. Coefficients below i are materialized as
 * a_j = j - 1 so that tuples of equal k compare lexicographically.
 */
class MacaulayRep {
public:
    MacaulayRep(u64 value, unsigned k, std::vector<u64> coeffs, unsigned lowest);

    u64 value() const { return value_; }
    unsigned k() const { return k_; }
    /// Index i of the last significant term.
    unsigned lowest() const { return lowest_; }
    /// a_j for 1 <= j <= k (padded below lowest()).
    u64 coeff(unsigned j) const { return coeffs_[k_ - j]; }
    /// (a_k, ..., a_1).
    const std::vector<u64>& coeffs() const { return coeffs_; }

    /// Sum of C(a_j, j) over the significant terms.
    u64 reconstruct() const;

private:
    u64 value_;
    unsigned k_;
    unsigned lowest_;
    std::vector<u64> coeffs_;
};

MacaulayRep macaulay_rep(u64 x, unsigned k);

/// The shadow function: C(a_k,k-1) + ... + C(a_i,i-1). For k = 1 this is 1.
u64 shadow_size(u64 x, unsigned k);

/// xi_delta = sum_{j=1}^{delta} C(2j-1, j).
u64 xi(unsigned delta);

enum class BoundBranch { Xi, Binom };

struct MinBound {
    u64 value;
    BoundBranch which;
};

/// min(xi_delta, C(n, delta-1)) for 1 <= delta < n. Ties report Xi.
MinBound min_bound(unsigned n, unsigned delta);

/// Lexicographic order of the padded k-th Macaulay coefficient tuples.
std::strong_ordering compare_by_macaulay(u64 x, u64 y, unsigned k);

/**
 * Up/down lattice paths from (0, start_height) to (steps, end_height) that
 * never meet the horizontal axis, counted by the reflection principle.
 */
u64 path_count(u64 start_height, u64 steps, u64 end_height);

/// C_n = C(2n,n) - C(2n,n+1).
u64 catalan(u64 n);

struct KeyLemmaReport {
    unsigned k = 0;
    u64 threshold = 0;                      // xi_k
    std::optional<u64> counterexample;      // first x <= xi_k with shadow(x) < x
    u64 shadow_past_threshold = 0;          // shadow_size(xi_k + 1, k)
    bool sharp = false;                     // shadow_past_threshold == xi_k
    std::int64_t telescoping = 0;           // expected to be 1
    bool passed() const { return !counterexample && sharp && telescoping == 1; }
};

/// Exhaustive check of shadow_size(x, k) >= x on 1 <= x <= xi_k, with the
/// sharpness at xi_k + 1 and the telescoping identity.
KeyLemmaReport verify_key_lemma(unsigned k);

}  // namespace stanley

#endif
