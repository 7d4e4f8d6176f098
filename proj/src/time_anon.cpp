#include "loganon/time_anon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace loganon {

namespace {

// Uniform integer in [lo, hi]. mt19937_64 output and modulo reduction
// are both portable; the modulo bias over 2^64 is negligible for the
// interval sizes involved here.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    if (lo >= hi) return lo;
    std::uint64_t span = std::uint64_t(hi - lo) + 1;
    return lo + std::int64_t(rng() % span);
}

std::int64_t scaled_bound(std::int64_t bound, double margin) {
    if (bound <= 0) return 0;
    return std::int64_t(std::floor(margin * double(bound)));
}

}  // namespace

std::vector<std::int64_t> compute_noise_bounds(std::span<const std::int64_t> sorted_micros) {
    const std::size_t n = sorted_micros.size();
    if (n == 0) return {};
    for (std::size_t i = 1; i < n; ++i)
        if (sorted_micros[i] < sorted_micros[i - 1])
            throw std::invalid_argument("compute_noise_bounds: input not sorted");

    std::vector<std::int64_t> bounds(n, 0);
    if (n == 1) return bounds;
    bounds[0] = (sorted_micros[1] - sorted_micros[0]) / 2;
    bounds[n - 1] = (sorted_micros[n - 1] - sorted_micros[n - 2]) / 2;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        std::int64_t left = sorted_micros[i] - sorted_micros[i - 1];
        std::int64_t right = sorted_micros[i + 1] - sorted_micros[i];
        bounds[i] = std::min(left, right) / 2;
    }
    return bounds;
}

std::vector<std::int64_t> sample_noise(std::span<const std::int64_t> bounds,
                                       std::mt19937_64& rng, double margin) {
    const std::size_t n = bounds.size();
    std::vector<std::int64_t> noises(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t m = scaled_bound(bounds[i], margin);
        std::int64_t lo = -m, hi = m;
        if (i == 0) lo = 0;           // first event drifts forward only
        if (i + 1 == n) hi = 0;       // last event drifts backward only
        noises[i] = uniform_int(rng, lo, hi);
    }
    return noises;
}

std::int64_t sample_global_offset(std::mt19937_64& rng, std::int64_t window_micros) {
    if (window_micros < 0) window_micros = 0;
    return uniform_int(rng, -window_micros, window_micros);
}

TimestampPlan build_plan(std::span<const std::int64_t> micros, std::mt19937_64& rng,
                         double margin, std::int64_t offset_window_micros) {
    const std::size_t n = micros.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return micros[a] < micros[b]; });

    std::vector<std::int64_t> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = micros[order[i]];

    auto sorted_bounds = compute_noise_bounds(sorted);
    auto sorted_noises = sample_noise(sorted_bounds, rng, margin);

    TimestampPlan plan;
    plan.bounds.resize(n);
    plan.noises.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        plan.bounds[order[i]] = sorted_bounds[i];
        plan.noises[order[i]] = sorted_noises[i];
    }
    plan.global_offset = sample_global_offset(rng, offset_window_micros);
    return plan;
}

std::vector<std::int64_t> apply_plan(std::span<const std::int64_t> micros,
                                     const TimestampPlan& plan) {
    if (micros.size() != plan.noises.size())
        throw std::invalid_argument("apply_plan: plan built for a different list");
    std::vector<std::int64_t> out(micros.size());
    for (std::size_t i = 0; i < micros.size(); ++i)
        out[i] = micros[i] + plan.noises[i] + plan.global_offset;
    return out;
}

std::int64_t round_to_granularity(std::int64_t micros, std::int64_t granularity) {
    if (granularity < 1) throw std::invalid_argument("granularity must be >= 1");
    if (granularity == 1) return micros;
    std::int64_t rem = micros % granularity;
    if (rem < 0) rem += granularity;  // Euclidean remainder
    std::int64_t down = micros - rem;
    return (rem * 2 >= granularity) ? down + granularity : down;
}

}  // namespace loganon
