#include "bdprng/period.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bdprng/generators.hpp"
#include "bdprng/maps.hpp"

namespace bdprng {

RhoResult brent_cycle(const MapStep& step, std::uint64_t x0) {
    // Phase 1: find the cycle length lambda.
    std::uint64_t power = 1, lambda = 1;
    std::uint64_t tortoise = x0;
    std::uint64_t hare = step(x0);
    while (tortoise != hare) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = step(hare);
        ++lambda;
    }
    // Phase 2: find mu with two pointers lambda apart.
    tortoise = x0;
    hare = x0;
    for (std::uint64_t i = 0; i < lambda; ++i) hare = step(hare);
    std::uint64_t mu = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++mu;
    }
    return {mu, lambda};
}

PeriodSummary period_experiment(std::uint32_t n, std::size_t trials,
                                std::uint64_t master_seed) {
    if (n < 8 || n > 28)
        throw std::out_of_range("period_experiment: word length must be in [8, 28]");
    if (trials < 1) throw std::invalid_argument("period_experiment: trials >= 1");

    PeriodSummary summary;
    summary.word_length = n;
    summary.trials = trials;
    summary.master_seed = master_seed;

    const std::uint64_t mask = state_format(n).raw_mask();
    const ChaoticRange range = chaotic_range(n);
    const std::uint64_t span = range.g_max - range.g_min + 1;
    std::uint64_t sm = master_seed;

    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t x0 = 0;
        while (x0 == 0) x0 = splitmix64_next(sm) & mask;
        const std::uint64_t g = range.g_min + splitmix64_next(sm) % span;
        const RhoResult r = brent_cycle(
            [g, n](std::uint64_t x) { return logistic_step_raw(x, g, n); }, x0);
        summary.rhos.push_back(r.rho());
    }
    std::sort(summary.rhos.begin(), summary.rhos.end());
    summary.min_rho = summary.rhos.front();
    summary.max_rho = summary.rhos.back();
    const std::size_t mid = trials / 2;
    summary.median_rho =
        trials % 2 == 1
            ? double(summary.rhos[mid])
            : (double(summary.rhos[mid - 1]) + double(summary.rhos[mid])) / 2.0;
    for (std::uint64_t rho : summary.rhos)
        ++summary.histogram[std::uint32_t(std::bit_width(rho) - 1)];
    return summary;
}

std::string PeriodSummary::to_json() const {
    nlohmann::json j;
    j["schemaVersion"] = 1;
    j["wordLength"] = word_length;
    j["trials"] = trials;
    j["masterSeed"] = to_hex(master_seed);
    j["minRho"] = min_rho;
    j["maxRho"] = max_rho;
    j["medianRho"] = median_rho;
    auto& h = j["log2Histogram"] = nlohmann::json::object();
    for (const auto& [k, v] : histogram) h[std::to_string(k)] = v;
    return j.dump(2);
}

}  // namespace bdprng
