// Cycle structure of digitized maps: Brent detection and the short-period
// experiment over random (x0, gamma) pairs.

#ifndef BDPRNG_PERIOD_HPP
#define BDPRNG_PERIOD_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bdprng {

// Orbit shape under a deterministic map on a finite set: mu iterations of tail
// before entering a cycle of length lambda.
struct RhoResult {
    std::uint64_t mu = 0;
    std::uint64_t lambda = 0;
    std::uint64_t rho() const { return mu + lambda; }
};

using MapStep = std::function<std::uint64_t(std::uint64_t)>;

// Brent's cycle detection; exact minimal (mu, lambda).
RhoResult brent_cycle(const MapStep& step, std::uint64_t x0);

struct PeriodSummary {
    std::uint32_t word_length = 0;
    std::size_t trials = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t min_rho = 0;
    std::uint64_t max_rho = 0;
    double median_rho = 0.0;
    // histogram[k] = number of trials with floor(log2(rho)) == k
    std::map<std::uint32_t, std::size_t> histogram;
    std::vector<std::uint64_t> rhos;  // sorted

    std::string to_json() const;
};

// Rho statistics of the raw single-gamma logistic map at word length n over
// `trials` random (x0, gamma) pairs expanded from the master seed.
PeriodSummary period_experiment(std::uint32_t n, std::size_t trials,
                                std::uint64_t master_seed);

}  // namespace bdprng

#endif
