// Corpus protocol: s sequences of n bits each through all 15 families, with
// per-subtest passing proportions and the aggregate average passing rate.

#ifndef BDPRNG_STS_SUITE_HPP
#define BDPRNG_STS_SUITE_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bdprng/bitstream.hpp"
#include "bdprng/generators.hpp"
#include "bdprng/sts/tests.hpp"

namespace bdprng::sts {

// Minimum acceptable passing proportion: (1-a) - 3*sqrt(a(1-a)/s).
double proportion_threshold(double alpha, std::size_t sequences);

struct SubtestSummary {
    std::string id;
    std::size_t passed = 0;
    std::size_t applicable_count = 0;  // sequences where the sub-test applied
    double proportion() const {
        return applicable_count == 0 ? 0.0
                                     : double(passed) / double(applicable_count);
    }
};

struct FamilySummary {
    std::string name;
    std::vector<SubtestSummary> subtests;
    // Mean proportion over sub-tests that applied to at least one sequence.
    double average() const;
};

struct SuiteReport {
    std::string generator;
    std::string seed_description;
    std::size_t sequences = 0;
    std::size_t bits_per_sequence = 0;
    double alpha = 0.01;
    double threshold = 0.0;
    std::vector<FamilySummary> families;

    double average_passing_rate() const;
    const FamilySummary& family(const std::string& name) const;
    // Fraction of applicable sub-tests whose proportion >= threshold.
    double fraction_subtests_at_threshold() const;
    std::string to_json(const std::string& manifest_json = "") const;
};

// Runs the full battery over s sequences pulled consecutively from the source.
// `progress`, when set, is called after each sequence.
SuiteReport run_suite(BitSource& source, std::size_t sequences,
                      std::size_t bits_per_sequence, double alpha = 0.01,
                      std::size_t jobs = 1,
                      const std::function<void(std::size_t)>& progress = {});

// Same protocol over pre-generated sequences.
SuiteReport run_suite_streams(const std::vector<BitStream>& streams, double alpha = 0.01,
                              std::size_t jobs = 1,
                              const std::function<void(std::size_t)>& progress = {});

}  // namespace bdprng::sts

#endif
