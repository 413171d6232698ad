// Python bindings for the core operations: generators, the statistical
// battery, and the period experiment. Reports cross the boundary as JSON
// strings; the pure-Python package parses them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <stdexcept>

#include "bdprng/bitstream.hpp"
#include "bdprng/generators.hpp"
#include "bdprng/maps.hpp"
#include "bdprng/period.hpp"
#include "bdprng/sts/berlekamp_massey.hpp"
#include "bdprng/sts/suite.hpp"
#include "bdprng/sts/tests.hpp"

namespace py = pybind11;
using namespace bdprng;

namespace {

std::unique_ptr<BitSource> make_source(const std::string& name,
                                       std::uint64_t master,
                                       const std::string& seed_json,
                                       const std::string& extraction) {
    if (name == "dynamical") {
        const SeedConfig cfg = seed_json.empty()
                                   ? derive_seed(master, 32, 8)
                                   : SeedConfig::from_json(seed_json);
        return std::make_unique<DynamicalGenerator>(cfg);
    }
    if (name == "logistic32" || name == "logistic64") {
        const std::uint32_t n = name == "logistic64" ? 64 : 32;
        const SeedConfig cfg = derive_seed(master, n, 1);
        return std::make_unique<RawLogisticGenerator>(n, cfg.x0.raw,
                                                      cfg.gammas[0].raw);
    }
    if (name == "lfsr32")
        return std::make_unique<Lfsr32>(
            std::uint32_t(derive_nonzero_word(master, 32)));
    if (name == "glibc-lcg")
        return std::make_unique<GlibcLcg>(
            std::uint32_t(derive_nonzero_word(master, 31)),
            parse_extraction(extraction));
    throw std::invalid_argument("unknown generator: " + name);
}

BitStream stream_from_ascii(const std::string& bits) {
    return BitStream::from_ascii(bits);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "chaos-based bitwise dynamical PRNG core";

    py::class_<BitSource>(m, "BitSource")
        .def("next_bit", &BitSource::next_bit)
        .def("reset", &BitSource::reset)
        .def_property_readonly("name", &BitSource::name)
        .def("bits", [](BitSource& self, std::size_t count) {
            return fill_bits(self, count).to_ascii();
        })
        .def("bytes", [](BitSource& self, std::size_t count) {
            const BitStream s = fill_bits(self, count);
            return py::bytes(reinterpret_cast<const char*>(s.bytes().data()),
                             s.bytes().size());
        });

    m.def("make_generator", &make_source, py::arg("name"),
          py::arg("master_seed") = 0x123456789ABCDEF0ull,
          py::arg("seed_json") = std::string(),
          py::arg("extraction") = std::string("lsb"));

    m.def("derive_seed_json",
          [](std::uint64_t master, std::uint32_t n, std::uint32_t gamma_count,
             std::uint32_t k_min, std::uint32_t k_max) {
              return derive_seed(master, n, gamma_count, k_min, k_max).to_json();
          },
          py::arg("master_seed"), py::arg("word_length") = 32,
          py::arg("gamma_count") = 8, py::arg("k_min") = 9,
          py::arg("k_max") = 11);

    m.def("chaotic_range", [](std::uint32_t n) {
        const ChaoticRange r = chaotic_range(n);
        return py::make_tuple(r.g_min, r.g_max);
    });

    m.def("logistic_step_raw", &logistic_step_raw, py::arg("x"), py::arg("gamma"),
          py::arg("word_length"));

    m.def("run_test", [](const std::string& family, const std::string& bits) {
        const sts::TestResult r = sts::run_test(family, stream_from_ascii(bits));
        py::dict d;
        d["family"] = r.family;
        d["applicable"] = r.applicable;
        d["reason"] = r.reason;
        d["subtests"] = r.subtest_ids;
        d["p_values"] = r.p_values;
        return d;
    });

    m.def("test_registry", [] { return sts::test_registry(); });

    m.def("run_suite_json",
          [](BitSource& source, std::size_t sequences, std::size_t length,
             double alpha, std::size_t jobs) {
              sts::SuiteReport r =
                  sts::run_suite(source, sequences, length, alpha, jobs);
              r.generator = source.name();
              return r.to_json();
          },
          py::arg("source"), py::arg("sequences"), py::arg("length"),
          py::arg("alpha") = 0.01, py::arg("jobs") = 1);

    m.def("proportion_threshold", &sts::proportion_threshold, py::arg("alpha"),
          py::arg("sequences"));

    m.def("berlekamp_massey", [](const std::string& bits) {
        std::vector<std::uint8_t> s;
        s.reserve(bits.size());
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("bits must be '0'/'1'");
            s.push_back(std::uint8_t(c - '0'));
        }
        return sts::berlekamp_massey(s);
    });

    m.def("period_experiment_json",
          [](std::uint32_t word_length, std::size_t trials, std::uint64_t master) {
              return period_experiment(word_length, trials, master).to_json();
          },
          py::arg("word_length"), py::arg("trials"),
          py::arg("master_seed") = 0x5EEDull);
}
