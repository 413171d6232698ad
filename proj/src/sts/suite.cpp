#include "bdprng/sts/suite.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace bdprng::sts {

double proportion_threshold(double alpha, std::size_t sequences) {
    if (sequences < 1) throw std::invalid_argument("need at least one sequence");
    return (1.0 - alpha) -
           3.0 * std::sqrt(alpha * (1.0 - alpha) / double(sequences));
}

double FamilySummary::average() const {
    double sum = 0.0;
    std::size_t used = 0;
    for (const auto& s : subtests)
        if (s.applicable_count > 0) {
            sum += s.proportion();
            ++used;
        }
    return used == 0 ? 0.0 : sum / double(used);
}

double SuiteReport::average_passing_rate() const {
    double sum = 0.0;
    std::size_t used = 0;
    for (const auto& f : families)
        for (const auto& s : f.subtests)
            if (s.applicable_count > 0) {
                sum += s.proportion();
                ++used;
            }
    return used == 0 ? 0.0 : sum / double(used);
}

const FamilySummary& SuiteReport::family(const std::string& name) const {
    for (const auto& f : families)
        if (f.name == name) return f;
    throw std::out_of_range("no such family: " + name);
}

double SuiteReport::fraction_subtests_at_threshold() const {
    std::size_t used = 0, ok = 0;
    for (const auto& f : families)
        for (const auto& s : f.subtests)
            if (s.applicable_count > 0) {
                ++used;
                if (s.proportion() >= threshold) ++ok;
            }
    return used == 0 ? 0.0 : double(ok) / double(used);
}

std::string SuiteReport::to_json(const std::string& manifest_json) const {
    nlohmann::json j;
    j["schemaVersion"] = 1;
    j["corpus"] = {{"generator", generator},
                   {"seeds", seed_description},
                   {"sequences", sequences},
                   {"bitsPerSequence", bits_per_sequence}};
    j["alpha"] = alpha;
    j["threshold"] = threshold;
    auto& fams = j["families"] = nlohmann::json::array();
    for (const auto& f : families) {
        nlohmann::json jf;
        jf["name"] = f.name;
        jf["average"] = f.average();
        auto& subs = jf["subtests"] = nlohmann::json::array();
        for (const auto& s : f.subtests)
            subs.push_back({{"id", s.id},
                            {"proportion", s.proportion()},
                            {"passed", s.passed},
                            {"applicableCount", s.applicable_count}});
        fams.push_back(std::move(jf));
    }
    j["averagePassingRate"] = average_passing_rate();
    if (!manifest_json.empty()) j["manifest"] = nlohmann::json::parse(manifest_json);
    return j.dump(2);
}

namespace {

// Per-sequence results for all families, in registry order.
std::vector<TestResult> run_all_families(const BitStream& bits) {
    std::vector<TestResult> out;
    out.reserve(test_registry().size());
    for (const auto& name : test_registry()) out.push_back(run_test(name, bits));
    return out;
}

SuiteReport reduce(const std::vector<std::vector<TestResult>>& per_sequence,
                   double alpha) {
    SuiteReport report;
    report.alpha = alpha;
    report.sequences = per_sequence.size();
    report.threshold = proportion_threshold(alpha, per_sequence.size());

    for (std::size_t fi = 0; fi < test_registry().size(); ++fi) {
        FamilySummary fam;
        fam.name = test_registry()[fi];
        // Sub-test id universe comes from the first applicable sequence.
        std::map<std::string, std::size_t> index;
        for (const auto& seq : per_sequence) {
            const TestResult& r = seq[fi];
            if (!r.applicable) continue;
            for (std::size_t si = 0; si < r.subtest_ids.size(); ++si) {
                auto [it, inserted] =
                    index.try_emplace(r.subtest_ids[si], fam.subtests.size());
                if (inserted) fam.subtests.push_back({r.subtest_ids[si], 0, 0});
                SubtestSummary& s = fam.subtests[it->second];
                ++s.applicable_count;
                if (r.p_values[si] >= alpha) ++s.passed;
            }
        }
        if (fam.subtests.empty())
            fam.subtests.push_back({fam.name, 0, 0});  // never applicable
        report.families.push_back(std::move(fam));
    }
    return report;
}

}  // namespace

SuiteReport run_suite_streams(const std::vector<BitStream>& streams, double alpha,
                              std::size_t jobs,
                              const std::function<void(std::size_t)>& progress) {
    if (streams.empty()) throw std::invalid_argument("empty corpus");
    std::vector<std::vector<TestResult>> results(streams.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < streams.size(); ++i) {
            results[i] = run_all_families(streams[i]);
            if (progress) progress(i + 1);
        }
    } else {
        std::mutex mu;
        std::size_t next = 0, done = 0;
        auto worker = [&] {
            for (;;) {
                std::size_t i;
                {
                    std::lock_guard lock(mu);
                    if (next >= streams.size()) return;
                    i = next++;
                }
                auto r = run_all_families(streams[i]);
                {
                    std::lock_guard lock(mu);
                    results[i] = std::move(r);
                    if (progress) progress(++done);
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    SuiteReport report = reduce(results, alpha);
    report.bits_per_sequence = streams.front().size();
    return report;
}

SuiteReport run_suite(BitSource& source, std::size_t sequences,
                      std::size_t bits_per_sequence, double alpha,
                      std::size_t jobs,
                      const std::function<void(std::size_t)>& progress) {
    if (sequences < 1) throw std::invalid_argument("need at least one sequence");
    std::vector<BitStream> streams;
    streams.reserve(sequences);
    for (std::size_t i = 0; i < sequences; ++i)
        streams.push_back(fill_bits(source, bits_per_sequence));
    SuiteReport report = run_suite_streams(streams, alpha, jobs, progress);
    report.generator = source.name();
    return report;
}

}  // namespace bdprng::sts
