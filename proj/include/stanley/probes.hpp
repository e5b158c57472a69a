#ifndef STANLEY_PROBES_HPP
#define STANLEY_PROBES_HPP

// Exhaustive searches over all pure complexes of a fixed small shape. They
// report what they find and never assert anything.

#include <optional>
#include <vector>

#include "stanley/complexes.hpp"

namespace stanley {

/// Families of delta-subsets of [n] are enumerated as bitmasks; this bounds C(n, delta).
inline constexpr u64 kMaxProbeUniverse = 22;

struct StarProbeReport {
    unsigned n = 0;
    unsigned delta = 0;
    u64 complexes = 0;             // nonempty pure complexes examined
    u64 hypothesis_holds = 0;      // f_{delta-1} <= f_{delta-2}
    u64 violations = 0;            // ... yet not uniformly collapsible
    std::optional<SimplicialComplex> first_violation;
    /// Property: f_{delta-1} <= f_{delta-2} implies uniformly collapsible.
    bool property_holds() const { return violations == 0; }
};

/// Every pure (delta-1)-dimensional complex on [n] with f_{delta-1} <= f_{delta-2}
/// is tested for uniform collapsibility.
StarProbeReport probe_star(unsigned n, unsigned delta);

struct XiMinProbeReport {
    unsigned n = 0;
    unsigned d = 0;
    u64 ideals = 0;                // nonempty pure degree-d ideals examined
    u64 minimal = 0;               // minimal among those with sdepth = d
    std::optional<u64> min_mu;
    std::optional<u64> max_mu;
    std::optional<MonomialIdeal> max_example;
    u64 lower_bound = 0;           // xi_{n-d} + 1
    u64 below_lower_bound = 0;     // minimal ideals with mu < lower_bound (expected 0)
};

/// Enumerates pure degree-d ideals on [n], n/2 <= d < n, and collects the
/// generator counts of those minimal in Xi.
XiMinProbeReport probe_xi_min(unsigned n, unsigned d);

}  // namespace stanley

#endif
