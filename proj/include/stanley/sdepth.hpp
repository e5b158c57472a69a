#ifndef STANLEY_SDEPTH_HPP
#define STANLEY_SDEPTH_HPP

/**
 * Stanley depth of squarefree monomial ideals through interval partitions.
 *
 * sdepth(I) >= k exactly when the truncated poset
 *     P_I^k = { A subset of [n] : x^A in I, |A| <= k }
 * splits into disjoint intervals [A, B] with |B| = k. The search below decides
 * that exactly by backtracking, so it is meant for small ground sets (n <= 10
 * or so); the node budget turns runaway searches into ResourceLimit errors.
 */

#include <optional>
#include <unordered_set>
#include <vector>

#include "stanley/collapse.hpp"
#include "stanley/complexes.hpp"
#include "stanley/interval.hpp"

namespace stanley {

class ReducedPoset {
public:
    ReducedPoset(unsigned n, unsigned cap, std::vector<std::vector<VertexSet>> levels);

    unsigned n() const { return n_; }
    unsigned cap() const { return cap_; }
    /// levels()[j] holds the elements of size j in ascending order, 0 <= j <= cap.
    const std::vector<std::vector<VertexSet>>& levels() const { return levels_; }
    std::size_t size() const { return members_.size(); }
    bool contains(VertexSet s) const { return members_.count(s) != 0; }

private:
    unsigned n_;
    unsigned cap_;
    std::vector<std::vector<VertexSet>> levels_;
    std::unordered_set<VertexSet> members_;
};

/// InvalidArgument unless min_degree(I) <= cap <= n; ResourceLimit past 2^22 elements.
ReducedPoset build_reduced_poset(const MonomialIdeal& ideal, unsigned cap);

struct SolverOptions {
    u64 node_budget = 100'000'000;
};

struct PartitionResult {
    bool partitionable = false;
    std::optional<IntervalPartition> witness;
    u64 nodes = 0;
};

PartitionResult is_partitionable(const ReducedPoset& poset, const SolverOptions& options = {});

struct StanleyDepthResult {
    unsigned value = 0;
    IntervalPartition witness;  // partition of P_I^value
};

StanleyDepthResult stanley_depth(const MonomialIdeal& ideal, const SolverOptions& options = {});

/// Direct enumeration: intervals disjoint, union equal to the poset, every
/// top of size cap. Shares no code with the solver.
bool verify_partition(const ReducedPoset& poset, const IntervalPartition& partition);

struct MainTheoremReport {
    unsigned n = 0;
    unsigned d = 0;                      // minimal generator degree
    u64 mu_d = 0;                        // number of degree-d generators
    u64 bound = 0;                       // min(C(n,d+1), xi_{n-d})
    std::optional<BoundBranch> branch;   // for 1 <= d < n
    bool small_case = false;             // n >= 2d + 1
    bool hypothesis_met = false;         // mu_d <= bound
    bool collapsible = false;            // decision for the degree-d part
    CollapseCertificate certificate;
    bool certificate_valid = false;

    /// The theorem predicts collapsible whenever the hypothesis holds.
    bool consistent() const { return !hypothesis_met || collapsible; }
};

MainTheoremReport verify_main_theorem(const MonomialIdeal& ideal);

struct ConjectureReport {
    unsigned n = 0;
    unsigned d = 0;
    unsigned exact = 0;                 // stanley_depth
    unsigned conjectured_lower = 0;     // d + floor(C(n,d+1) / C(n,d))
    std::optional<unsigned> known_upper;  // Veronese only; same expression
    bool meets_lower = false;
    bool witness_valid = false;
};

/// Exact sdepth of I_{n,d} against the conjectured lower bound.
ConjectureReport probe_conjecture(unsigned n, unsigned d, const SolverOptions& options = {});
/// Same comparison for an arbitrary ideal (no upper bound is known).
ConjectureReport probe_conjecture(const MonomialIdeal& ideal, const SolverOptions& options = {});

/**
 * Whether a pure degree-d ideal (n/2 <= d < n) is minimal among the pure
 * degree-d ideals with sdepth exactly d: sdepth(I) = d, yet dropping any one
 * generator raises it to at least d + 1.
 */
bool check_minimal_in_xi(const MonomialIdeal& ideal);

}  // namespace stanley

#endif
