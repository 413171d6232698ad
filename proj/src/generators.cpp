#include "bdprng/generators.hpp"

#include <nlohmann/json.hpp>

namespace bdprng {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

PartitionLcg::PartitionLcg(std::uint32_t seed) : state_(seed) {
    if (seed == 0 || seed >= (1u << 31))
        throw std::invalid_argument("PartitionLcg: seed must be in (0, 2^31)");
}

std::uint32_t PartitionLcg::next() {
    state_ = static_cast<std::uint32_t>(
        (1103515245ull * state_ + 12345ull) & 0x7fffffffull);
    return state_;
}

std::uint32_t PartitionLcg::draw_k(std::uint32_t k_min, std::uint32_t k_max) {
    if (k_min > k_max)
        throw std::invalid_argument("draw_k: k_min > k_max");
    const std::uint32_t span = k_max - k_min + 1;
    return k_min + ((next() >> 16) % span);
}

void SeedConfig::validate() const {
    const FxFormat sf = state_format(word_length);
    if (x0.raw == 0)
        throw std::invalid_argument("SeedConfig: x0 must be nonzero");
    if (!(x0.format == sf))
        throw std::invalid_argument("SeedConfig: x0 format does not match wordLength");
    if (gammas.empty())
        throw std::invalid_argument("SeedConfig: at least one gamma required");
    const ChaoticRange range = chaotic_range(word_length);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (!(gammas[i].format == gamma_format(word_length)))
            throw std::invalid_argument("SeedConfig: gamma[" + std::to_string(i) +
                                        "] format does not match wordLength");
        if (gammas[i].raw < range.g_min || gammas[i].raw > range.g_max)
            throw std::invalid_argument("SeedConfig: gamma[" + std::to_string(i) +
                                        "] outside chaotic range [3.57, 4)");
    }
    if (k_min < 1 || k_min > k_max)
        throw std::invalid_argument("SeedConfig: need 1 <= kMin <= kMax");
    if (partition_seed == 0 || partition_seed >= (1u << 31))
        throw std::invalid_argument("SeedConfig: partitionSeed must be in (0, 2^31)");
}

std::string SeedConfig::to_json() const {
    nlohmann::json j;
    j["wordLength"] = word_length;
    j["x0"] = to_hex(x0.raw);
    auto& arr = j["gammas"] = nlohmann::json::array();
    for (const FxWord& g : gammas) arr.push_back(to_hex(g.raw));
    j["kMin"] = k_min;
    j["kMax"] = k_max;
    j["partitionSeed"] = partition_seed;
    return j.dump(2);
}

SeedConfig SeedConfig::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("masterSeed")) {
        const std::uint64_t master = parse_hex(j.at("masterSeed").get<std::string>());
        return derive_seed(master, j.value("wordLength", 32u), j.value("m", 8u),
                           j.value("kMin", 9u), j.value("kMax", 11u));
    }
    SeedConfig cfg;
    cfg.word_length = j.at("wordLength").get<std::uint32_t>();
    cfg.x0 = FxWord(parse_hex(j.at("x0").get<std::string>()),
                    state_format(cfg.word_length));
    for (const auto& g : j.at("gammas"))
        cfg.gammas.emplace_back(parse_hex(g.get<std::string>()),
                                gamma_format(cfg.word_length));
    cfg.k_min = j.value("kMin", 9u);
    cfg.k_max = j.value("kMax", 11u);
    cfg.partition_seed = j.at("partitionSeed").get<std::uint32_t>();
    cfg.validate();
    return cfg;
}

namespace {

constexpr int kMaxRejections = 1000;

std::uint64_t draw_nonzero(std::uint64_t& sm, std::uint64_t mask) {
    for (int i = 0; i < kMaxRejections; ++i) {
        const std::uint64_t v = splitmix64_next(sm) & mask;
        if (v != 0) return v;
    }
    throw std::runtime_error("derive_seed: rejection bound exceeded");
}

}  // namespace

std::uint64_t derive_nonzero_word(std::uint64_t master, std::uint32_t bits) {
    if (bits == 0 || bits > 64)
        throw std::invalid_argument("derive_nonzero_word: bits in [1, 64]");
    std::uint64_t sm = master;
    const std::uint64_t mask =
        bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    return draw_nonzero(sm, mask);
}

SeedConfig derive_seed(std::uint64_t master, std::uint32_t n, std::uint32_t m,
                       std::uint32_t k_min, std::uint32_t k_max) {
    SeedConfig cfg;
    cfg.word_length = n;
    cfg.k_min = k_min;
    cfg.k_max = k_max;
    std::uint64_t sm = master;
    const FxFormat sf = state_format(n);
    cfg.x0 = FxWord(draw_nonzero(sm, sf.raw_mask()), sf);
    const ChaoticRange range = chaotic_range(n);
    const std::uint64_t span = range.g_max - range.g_min + 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        const std::uint64_t draw = splitmix64_next(sm);
        cfg.gammas.emplace_back(range.g_min + (span == 0 ? draw : draw % span),
                                gamma_format(n));
    }
    cfg.partition_seed =
        static_cast<std::uint32_t>(draw_nonzero(sm, 0x7fffffffull));
    cfg.validate();
    return cfg;
}

BitStream fill_bits(BitSource& source, std::size_t count) {
    BitStream out(count);
    for (std::size_t i = 0; i < count; ++i) out.set_bit(i, source.next_bit());
    return out;
}

DynamicalGenerator::DynamicalGenerator(SeedConfig config)
    : config_(std::move(config)), x_(config_.x0), lcg_(1) {
    config_.validate();
    reset();
}

void DynamicalGenerator::reset() {
    x_ = config_.x0;
    gamma_index_ = 0;
    lcg_ = PartitionLcg(config_.partition_seed);
    remaining_ = lcg_.draw_k(config_.k_min, config_.k_max);
    zero_absorbed_ = false;
}

FxWord DynamicalGenerator::next_element() {
    x_ = logistic_step(x_, config_.gammas[gamma_index_]);
    if (x_.raw == 0) zero_absorbed_ = true;
    if (--remaining_ == 0) {
        gamma_index_ = (gamma_index_ + 1) % config_.m();
        remaining_ = lcg_.draw_k(config_.k_min, config_.k_max);
    }
    return x_;
}

RawLogisticGenerator::RawLogisticGenerator(std::uint32_t n, std::uint64_t x0_raw,
                                           std::uint64_t gamma_raw)
    : n_(n),
      seed_x_(x0_raw, state_format(n)),
      gamma_(gamma_raw, gamma_format(n)),
      x_(seed_x_) {
    if (x0_raw == 0)
        throw std::invalid_argument("RawLogisticGenerator: x0 must be nonzero");
}

void RawLogisticGenerator::reset() { x_ = seed_x_; }

FxWord RawLogisticGenerator::next_element() {
    x_ = logistic_step(x_, gamma_);
    return x_;
}

Lfsr32::Lfsr32(std::uint32_t seed) : seed_(seed), state_(seed) {
    if (seed == 0)
        throw std::invalid_argument("Lfsr32: zero state is invalid");
}

void Lfsr32::reset() { state_ = seed_; }

bool Lfsr32::next_bit() {
    const std::uint32_t out = state_ & 1u;
    const std::uint32_t fb = ((state_ >> 31) ^ (state_ >> 21) ^ (state_ >> 1) ^ state_) & 1u;
    state_ = (state_ >> 1) | (fb << 31);
    return out;
}

LcgExtraction parse_extraction(const std::string& text) {
    if (text == "all31") return LcgExtraction::All31;
    if (text == "lsb") return LcgExtraction::Lsb;
    if (text == "bit30") return LcgExtraction::Bit30;
    throw std::invalid_argument("unknown LCG extraction mode: " + text);
}

std::string extraction_name(LcgExtraction mode) {
    switch (mode) {
        case LcgExtraction::All31: return "all31";
        case LcgExtraction::Lsb: return "lsb";
        case LcgExtraction::Bit30: return "bit30";
    }
    return "?";
}

GlibcLcg::GlibcLcg(std::uint32_t seed, LcgExtraction mode)
    : seed_(seed), mode_(mode), lcg_(seed) {}

void GlibcLcg::reset() {
    lcg_ = PartitionLcg(seed_);
    buffer_ = 0;
    buffered_ = 0;
}

bool GlibcLcg::next_bit() {
    switch (mode_) {
        case LcgExtraction::Lsb:
            return lcg_.next() & 1u;
        case LcgExtraction::Bit30:
            return (lcg_.next() >> 30) & 1u;
        case LcgExtraction::All31:
            if (buffered_ == 0) {
                buffer_ = lcg_.next();
                buffered_ = 31;
            }
            return (buffer_ >> --buffered_) & 1u;  // MSB-first
    }
    return false;
}

}  // namespace bdprng
