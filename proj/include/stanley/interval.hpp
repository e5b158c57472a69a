#ifndef STANLEY_INTERVAL_HPP
#define STANLEY_INTERVAL_HPP

#include <vector>

#include "stanley/vertex_set.hpp"

namespace stanley {

/// [bottom, top] = { C : bottom <= C <= top }.
struct Interval {
    VertexSet bottom;
    VertexSet top;

    bool operator==(const Interval&) const = default;
};

/// Interval partition of a reduced poset P_I^cap; every top has size cap.
struct IntervalPartition {
    unsigned cap = 0;
    std::vector<Interval> intervals;

    bool operator==(const IntervalPartition&) const = default;
};

}  // namespace stanley

#endif
