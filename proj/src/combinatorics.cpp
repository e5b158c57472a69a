#include "stanley/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

constexpr u64 kMax = std::numeric_limits<u64>::max();

// Largest a >= j with C(a, j) <= r, for r >= 1 and j >= 1.
u64 largest_top(u64 r, unsigned j)
{
    // C(j, j) = 1 <= r and C(r + j, j) >= r + 1 > r.
    u64 lo = j;
    u64 hi = (r > kMax - j) ? kMax : r + j;
    while (hi - lo > 1) {
        u64 mid = lo + (hi - lo) / 2;
        auto c = binomial_checked(mid, j);
        if (c && *c <= r)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

std::optional<u64> binomial_checked(u64 n, u64 k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (u64 i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > kMax)
            return std::nullopt;
    }
    return static_cast<u64>(r);
}

u64 binomial(u64 n, u64 k)
{
    auto r = binomial_checked(n, k);
    if (!r)
        throw Overflow("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
    return *r;
}

u64 checked_add(u64 a, u64 b)
{
    if (a > kMax - b)
        throw Overflow("addition exceeds 64 bits");
    return a + b;
}

u64 checked_mul(u64 a, u64 b)
{
    if (a != 0 && b > kMax / a)
        throw Overflow("multiplication exceeds 64 bits");
    return a * b;
}

MacaulayRep::MacaulayRep(u64 value, unsigned k, std::vector<u64> coeffs, unsigned lowest)
    : value_(value), k_(k), lowest_(lowest), coeffs_(std::move(coeffs))
{
}

u64 MacaulayRep::reconstruct() const
{
    u64 sum = 0;
    for (unsigned j = lowest_; j <= k_; ++j)
        sum = checked_add(sum, binomial(coeff(j), j));
    return sum;
}

MacaulayRep macaulay_rep(u64 x, unsigned k)
{
    if (x < 1)
        throw InvalidArgument("macaulay_rep: x must be positive");
    if (k < 1)
        throw InvalidArgument("macaulay_rep: k must be positive");

    std::vector<u64> coeffs(k);
    u64 remaining = x;
    unsigned lowest = k;
    for (unsigned j = k; j >= 1; --j) {
        if (remaining == 0) {
            coeffs[k - j] = j - 1;
            continue;
        }
        u64 a = largest_top(remaining, j);
        coeffs[k - j] = a;
        remaining -= binomial(a, j);
        lowest = j;
    }
    return MacaulayRep(x, k, std::move(coeffs), lowest);
}

u64 shadow_size(u64 x, unsigned k)
{
    if (k < 1)
        throw InvalidArgument("shadow_size: k must be positive");
    if (x < 1)
        throw InvalidArgument("shadow_size: x must be positive");
    if (k == 1)
        return 1;  // the empty face

    MacaulayRep rep = macaulay_rep(x, k);
    u64 sum = 0;
    for (unsigned j = rep.lowest(); j <= k; ++j)
        sum = checked_add(sum, binomial(rep.coeff(j), j - 1));
    return sum;
}

u64 xi(unsigned delta)
{
    if (delta < 1)
        throw InvalidArgument("xi: delta must be positive");
    u64 sum = 0;
    for (unsigned j = 1; j <= delta; ++j)
        sum = checked_add(sum, binomial(2 * u64{j} - 1, j));
    return sum;
}

MinBound min_bound(unsigned n, unsigned delta)
{
    if (delta < 1 || delta >= n)
        throw InvalidArgument("min_bound: need 1 <= delta < n");
    u64 b = binomial(n, delta - 1);
    u64 x;
    try {
        x = xi(delta);
    } catch (const Overflow&) {
        return {b, BoundBranch::Binom};
    }
    if (x <= b)
        return {x, BoundBranch::Xi};
    return {b, BoundBranch::Binom};
}

std::strong_ordering compare_by_macaulay(u64 x, u64 y, unsigned k)
{
    return macaulay_rep(x, k).coeffs() <=> macaulay_rep(y, k).coeffs();
}

u64 path_count(u64 start_height, u64 steps, u64 end_height)
{
    if (start_height < 1 || end_height < 1)
        throw InvalidArgument("path_count: endpoints must lie strictly above the axis");
    const u64 k = start_height, n = steps, m = end_height;
    if (k > m + n || m > k + n)
        return 0;
    if ((n + k + m) % 2 != 0)
        return 0;
    u64 l2 = (n + k - m) / 2;
    u64 reflected = 0;
    if (n >= k + m)
        reflected = binomial(n, (n - k - m) / 2);
    return binomial(n, l2) - reflected;
}

u64 catalan(u64 n)
{
    u64 twice = checked_mul(2, n);
    return binomial(twice, n) - binomial(twice, n + 1);
}

KeyLemmaReport verify_key_lemma(unsigned k)
{
    if (k < 1)
        throw InvalidArgument("verify_key_lemma: k must be positive");

    KeyLemmaReport report;
    report.k = k;
    report.threshold = xi(k);
    for (u64 x = 1; x <= report.threshold; ++x) {
        if (shadow_size(x, k) < x) {
            report.counterexample = x;
            break;
        }
    }
    report.shadow_past_threshold = shadow_size(checked_add(report.threshold, 1), k);
    report.sharp = report.shadow_past_threshold == report.threshold;

    // C(2k-2,k-1) - C(2k-2,k) - sum_{j=1}^{k-1} (C(k-2+j,j) - C(k-2+j,j-1))
    auto s = [](u64 v) { return static_cast<__int128>(v); };
    const u64 top = 2 * u64{k} - 2;
    __int128 acc = s(binomial(top, k - 1)) - s(binomial(top, k));
    for (u64 j = 1; j + 1 <= k; ++j)
        acc -= s(binomial(k - 2 + j, j)) - s(binomial(k - 2 + j, j - 1));
    report.telescoping = static_cast<std::int64_t>(acc);
    return report;
}

}  // namespace stanley
