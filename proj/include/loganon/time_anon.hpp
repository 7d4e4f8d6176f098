#ifndef LOGANON_TIME_ANON_HPP
#define LOGANON_TIME_ANON_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace loganon {

// Per-session timestamp perturbation: per-event noise bounded by half
// the gap to the nearest neighbor, plus one constant global offset.
struct TimestampPlan {
    std::vector<std::int64_t> bounds;  // max |noise| per original index (us)
    std::vector<std::int64_t> noises;  // sampled noise per original index (us)
    std::int64_t global_offset = 0;    // constant C (us)
};

// Half-gap noise bounds for a chronologically sorted list. Interior
// events take the smaller half-gap; first/last use their only neighbor;
// a single event gets 0. Throws std::invalid_argument on unsorted input.
std::vector<std::int64_t> compute_noise_bounds(std::span<const std::int64_t> sorted_micros);

// Uniform integer noise in [-floor(margin*bound), +floor(margin*bound)],
// one-sided for the first (>= 0) and last (<= 0) events. margin < 1
// keeps adjacent perturbed events from meeting at the shared midpoint,
// so strict input ordering stays strict.
std::vector<std::int64_t> sample_noise(std::span<const std::int64_t> bounds,
                                       std::mt19937_64& rng, double margin = 0.99);

// Uniform offset in [-window_micros, +window_micros].
std::int64_t sample_global_offset(std::mt19937_64& rng, std::int64_t window_micros);

// Plan for a list in arbitrary order: noise is computed over a sorted
// copy and written back to original positions, so file line order is
// untouched even when the input is not time-sorted.
TimestampPlan build_plan(std::span<const std::int64_t> micros, std::mt19937_64& rng,
                         double margin, std::int64_t offset_window_micros);

// T'' = T + noise + C, elementwise.
std::vector<std::int64_t> apply_plan(std::span<const std::int64_t> micros,
                                     const TimestampPlan& plan);

// Nearest multiple of granularity, ties round half-up. granularity 1 is
// the identity. Throws std::invalid_argument for granularity < 1.
std::int64_t round_to_granularity(std::int64_t micros, std::int64_t granularity);

}  // namespace loganon

#endif
