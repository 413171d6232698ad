// The fifteen SP 800-22 test families.
//
// Each family is a pure function of an immutable BitStream returning one
// TestResult with one p-value per sub-test stream. Inapplicable inputs are
// reported, never silently dropped.

#ifndef BDPRNG_STS_TESTS_HPP
#define BDPRNG_STS_TESTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bdprng/bitstream.hpp"

namespace bdprng::sts {

struct TestResult {
    std::string family;
    std::vector<std::string> subtest_ids;
    std::vector<double> p_values;  // parallel to subtest_ids
    bool applicable = true;
    std::string reason;  // set when not applicable
    std::string parameters;

    std::size_t passed_count(double alpha) const;
};

TestResult frequency_test(const BitStream& bits);
TestResult block_frequency_test(const BitStream& bits, std::size_t block_len = 128);
TestResult cumulative_sums_test(const BitStream& bits);
TestResult runs_test(const BitStream& bits);
TestResult longest_run_test(const BitStream& bits);
TestResult rank_test(const BitStream& bits);
TestResult dft_test(const BitStream& bits);
TestResult non_overlapping_template_test(const BitStream& bits,
                                         std::size_t template_len = 9,
                                         std::size_t num_blocks = 8);
TestResult overlapping_template_test(const BitStream& bits);
TestResult universal_test(const BitStream& bits);
TestResult approximate_entropy_test(const BitStream& bits, std::size_t m = 10);
TestResult serial_test(const BitStream& bits, std::size_t m = 16);
TestResult linear_complexity_test(const BitStream& bits, std::size_t block_len = 500);
TestResult random_excursions_test(const BitStream& bits);
TestResult random_excursions_variant_test(const BitStream& bits);

// Registry of the 15 family names in report order; run_test dispatches by
// name with the standard's recommended parameters for 10^6-bit inputs.
const std::vector<std::string>& test_registry();
TestResult run_test(const std::string& family, const BitStream& bits);

// All aperiodic (unbordered) templates of the given length, as bit vectors in
// ascending numeric order; 148 of them for length 9.
std::vector<std::vector<std::uint8_t>> aperiodic_templates(std::size_t m);

}  // namespace bdprng::sts

#endif
