#pragma once

// Seeded random-corpus classification: one JSON verdict line per instance,
// then a summary line.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "actorkit/algebra.hpp"
#include "actorkit/report.hpp"

namespace actorkit {

struct AtlasOptions {
    Field field = Field::prime(5);
    std::size_t dim = 2;
    Category category = Category::leibniz;
    std::size_t samples = 10;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    int bider_variant = 1;
};

// Instance i draws from its own stream seeded with splitmix64(seed + i), so
// the output does not depend on jobs. Lines are emitted in index order.
void run_atlas(const AtlasOptions& opts, const std::function<void(const std::string&)>& emit);

std::uint64_t splitmix64(std::uint64_t x);

// Random actions B on A (dims 1..max_dim, categories taken in turn): the
// derived-action check must agree with the identity suite of the semidirect
// product on every sample. Seeded the same way as the atlas.
Report crosscheck_corpus(Field f, const std::vector<Category>& cats, std::size_t max_dim, std::size_t samples,
                         std::uint64_t seed);

}  // namespace actorkit
