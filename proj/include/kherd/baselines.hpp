#pragma once

#include "kherd/herding.hpp"

namespace kherd {

// Uniform sampling without replacement.
SelectionResult baseline_random(const Dataset& dataset, Index m,
                                std::uint64_t seed);

// Per-class uniform draws, with the budget apportioned across classes by
// largest remainder. Requires labels and m >= number of classes.
SelectionResult baseline_stratified(const Dataset& dataset, Index m,
                                    std::uint64_t seed);

// Seeded k-means++ initialisation, Lloyd iterations to convergence (or the
// iteration cap), then each centroid maps to its nearest not-yet-taken data
// point, so the output is always m distinct indices.
SelectionResult baseline_kmeans(const Dataset& dataset, Index m,
                                std::uint64_t seed, int max_iters = 50,
                                double tol = 1e-6);

}  // namespace kherd
