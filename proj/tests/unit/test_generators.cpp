#include <doctest.h>

#include <array>
#include <string>

#include "bdprng/generators.hpp"
#include "bdprng/sts/berlekamp_massey.hpp"
#include "oracles.hpp"

using namespace bdprng;

namespace {

constexpr std::uint64_t kMaster = 0x123456789ABCDEF0ull;

// Golden fixtures for the documented reference master seed, frozen after the
// first verified run (also reproduced by the oracle replay below).
constexpr const char* kDynPrefix256 =
    "70d87052cff5621ce054dd4301b5470a82b70ce33e4f76cda4213a0271066335";
constexpr const char* kL32Prefix256 =
    "70cda0a5963f4c3cf41202bec136d2d2f1406094e62a9b2ad835a49896e778e9";
constexpr const char* kL64Prefix256 =
    "b80de601035aafeb496e8fefc30927075095b65709e926632ad02bbbfac9bd67";
constexpr const char* kLfsrPrefix256 =
    "170a73a276606f4da218a37cf1257e3366027c13cfaa5e5513971fe88ecf5162";
constexpr const char* kGlibcAll31Prefix256 =
    "21dea60253db569834addf3e8ab939420fa3c7a12aa98c9bfc17c1f5785500d8";
// default (lsb) extraction: strict alternation starting from an even seed
constexpr const char* kGlibcLsbPrefix256 =
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa";
constexpr std::uint64_t kDynDigest1M = 0xabbaafa1e88e697cull;

std::string prefix_hex(BitSource& s, std::size_t nbits) {
    s.reset();
    std::string hex;
    for (std::size_t i = 0; i < nbits; i += 4) {
        int v = 0;
        for (int j = 0; j < 4; ++j) v = (v << 1) | int(s.next_bit());
        hex += "0123456789abcdef"[v];
    }
    return hex;
}

}  // namespace

TEST_CASE("partition LCG recurrence") {
    PartitionLcg lcg(1);
    CHECK(lcg.next() == 1103527590u);
    PartitionLcg lcg2(12345);
    const std::uint64_t expect =
        (oracles::u128(1103515245ull) * 12345ull + 12345ull) % (1ull << 31);
    CHECK(lcg2.next() == expect);
    CHECK_THROWS_AS(PartitionLcg(0), std::invalid_argument);
    CHECK_THROWS_AS(PartitionLcg(1u << 31), std::invalid_argument);
}

TEST_CASE("partition LCG has full period (Hull-Dobell + spot check)") {
    // Modulus 2^31: full period iff c odd and a = 1 mod 4.
    CHECK(12345 % 2 == 1);
    CHECK(1103515245 % 4 == 1);
    PartitionLcg lcg(1);
    bool returned = false;
    for (int i = 0; i < 10000000 && !returned; ++i)
        if (lcg.next() == 1) returned = true;
    CHECK_FALSE(returned);
}

TEST_CASE("draw_k") {
    SUBCASE("degenerate range") {
        PartitionLcg lcg(424242);
        for (int i = 0; i < 50; ++i) CHECK(lcg.draw_k(9, 9) == 9);
    }
    SUBCASE("first draw from state 1") {
        PartitionLcg lcg(1);
        CHECK(lcg.draw_k(9, 11) == 9 + ((1103527590u >> 16) % 3));
    }
    SUBCASE("near-uniform over [9,11]") {
        PartitionLcg lcg(987654321u % (1u << 31));
        std::array<std::size_t, 3> counts{};
        const int draws = 1000000;
        for (int i = 0; i < draws; ++i) ++counts[lcg.draw_k(9, 11) - 9];
        for (std::size_t c : counts) {
            CHECK(double(c) / draws > 1.0 / 3 - 0.01);
            CHECK(double(c) / draws < 1.0 / 3 + 0.01);
        }
    }
}

TEST_CASE("derive_seed reference fixture and determinism") {
    const SeedConfig a = derive_seed(kMaster, 32, 8, 9, 11);
    const SeedConfig b = derive_seed(kMaster, 32, 8, 9, 11);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.x0.raw == 0x45ce50e8ull);
    CHECK(a.partition_seed == 1167384887u);
    REQUIRE(a.gammas.size() == 8);
    CHECK(a.gammas[0].raw == 0xf3d76970ull);
    CHECK(a.gammas[7].raw == 0xeac4ad2bull);
    // Gammas always land in the chaotic range, any master.
    for (std::uint64_t master : std::array<std::uint64_t, 4>{0ull, 1ull, 0xDEADBEEFull, kMaster})
        for (unsigned n : {8u, 16u, 32u, 64u}) {
            const SeedConfig c = derive_seed(master, n, 8, 9, 11);
            const ChaoticRange r = chaotic_range(n);
            CHECK(c.x0.raw != 0);
            for (const FxWord& g : c.gammas) {
                CHECK(g.raw >= r.g_min);
                CHECK(g.raw <= r.g_max);
            }
        }
}

TEST_CASE("seed config validation names the offending field") {
    SeedConfig cfg = derive_seed(kMaster, 32, 8, 9, 11);
    SeedConfig bad = cfg;
    bad.x0 = FxWord(0, state_format(32));
    CHECK_THROWS_WITH_AS(bad.validate(), "SeedConfig: x0 must be nonzero",
                         std::invalid_argument);
    bad = cfg;
    bad.gammas[2] = FxWord(100, gamma_format(32));  // ~0.0000001, not chaotic
    CHECK_THROWS_WITH_AS(bad.validate(),
                         "SeedConfig: gamma[2] outside chaotic range [3.57, 4)",
                         std::invalid_argument);
    bad = cfg;
    bad.partition_seed = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.gammas.clear();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("seed config JSON round trip and master-seed form") {
    const SeedConfig cfg = derive_seed(kMaster, 32, 8, 9, 11);
    const SeedConfig back = SeedConfig::from_json(cfg.to_json());
    CHECK(back.to_json() == cfg.to_json());
    const SeedConfig derived =
        SeedConfig::from_json(R"({"masterSeed": "0x123456789abcdef0"})");
    CHECK(derived.to_json() == cfg.to_json());
}

TEST_CASE("dynamical generator collapses to the raw map when m=1") {
    SeedConfig cfg = derive_seed(kMaster, 32, 1, 9, 11);
    DynamicalGenerator dyn(cfg);
    RawLogisticGenerator raw(32, cfg.x0.raw, cfg.gammas[0].raw);
    for (int i = 0; i < 5000; ++i) CHECK(dyn.next_bit() == raw.next_bit());
    // Any k schedule: same result with a degenerate k range.
    cfg.k_min = cfg.k_max = 1;
    DynamicalGenerator dyn2(cfg);
    raw.reset();
    for (int i = 0; i < 5000; ++i) CHECK(dyn2.next_bit() == raw.next_bit());
}

TEST_CASE("dynamical schedule: switch distances in range, indices cyclic") {
    const SeedConfig cfg = derive_seed(kMaster, 32, 8, 9, 11);
    DynamicalGenerator dyn(cfg);
    std::size_t prev_index = dyn.gamma_index();
    CHECK(prev_index == 0);
    std::size_t since_switch = 0;
    std::size_t switches = 0;
    for (int i = 0; i < 100000 && switches < 2000; ++i) {
        dyn.next_element();
        ++since_switch;
        if (dyn.gamma_index() != prev_index) {
            CHECK(dyn.gamma_index() == (prev_index + 1) % cfg.m());
            CHECK(since_switch >= cfg.k_min);
            CHECK(since_switch <= cfg.k_max);
            prev_index = dyn.gamma_index();
            since_switch = 0;
            ++switches;
        }
    }
    CHECK(switches >= 2000);
}

TEST_CASE("dynamical pipeline matches the independent replay oracle") {
    for (std::uint64_t master : std::array<std::uint64_t, 3>{kMaster, 0x1ull, 0xDEADBEEFull}) {
        const SeedConfig cfg = derive_seed(master, 32, 8, 9, 11);
        DynamicalGenerator dyn(cfg);
        oracles::DynamicalReplay replay;
        replay.n = 32;
        replay.x = cfg.x0.raw;
        for (const FxWord& g : cfg.gammas) replay.gammas.push_back(g.raw);
        replay.k_min = cfg.k_min;
        replay.k_max = cfg.k_max;
        replay.lcg_state = cfg.partition_seed;
        replay.start();
        std::size_t mismatches = 0;
        for (int i = 0; i < 10000; ++i)
            if (int(dyn.next_bit()) != replay.next_bit()) ++mismatches;
        CHECK(mismatches == 0);
    }
}

TEST_CASE("dynamical golden vectors") {
    DynamicalGenerator dyn(derive_seed(kMaster, 32, 8, 9, 11));
    CHECK(dyn.next_element().raw == 0xc17093a6ull);  // first state word
    dyn.reset();
    CHECK(prefix_hex(dyn, 256) == kDynPrefix256);
    dyn.reset();
    CHECK(fill_bits(dyn, 1000000).fnv1a_digest() == kDynDigest1M);
}

TEST_CASE("LSB extraction is state parity") {
    DynamicalGenerator dyn(derive_seed(kMaster, 32, 8, 9, 11));
    DynamicalGenerator dyn2(derive_seed(kMaster, 32, 8, 9, 11));
    for (int i = 0; i < 1000; ++i)
        CHECK(dyn.next_bit() == bool(dyn2.next_element().raw & 1));
}

TEST_CASE("zero state is absorbing and flagged, not masked") {
    SeedConfig cfg = derive_seed(kMaster, 32, 8, 9, 11);
    cfg.x0 = FxWord(1, state_format(32));  // x(1-x) truncates to 0 immediately
    DynamicalGenerator dyn(cfg);
    CHECK(dyn.next_element().raw == 0);
    CHECK(dyn.zero_absorbed());
    for (int i = 0; i < 100; ++i) CHECK(dyn.next_bit() == false);
}

TEST_CASE("raw logistic golden prefixes") {
    const SeedConfig l32 = derive_seed(kMaster, 32, 1);
    RawLogisticGenerator g32(32, l32.x0.raw, l32.gammas[0].raw);
    CHECK(prefix_hex(g32, 256) == kL32Prefix256);
    const SeedConfig l64 = derive_seed(kMaster, 64, 1);
    RawLogisticGenerator g64(64, l64.x0.raw, l64.gammas[0].raw);
    CHECK(prefix_hex(g64, 256) == kL64Prefix256);
    CHECK_THROWS_AS(RawLogisticGenerator(32, 0, l32.gammas[0].raw),
                    std::invalid_argument);
}

namespace {

// GF(2) polynomial arithmetic mod p(x) = x^32 + x^22 + x^2 + x + 1, for the
// primitivity argument behind the full-period claim.
std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t poly =
        (1ull << 32) | (1ull << 22) | (1ull << 2) | (1ull << 1) | 1ull;
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1ull << 32)) a ^= poly;
    }
    return r;
}

std::uint64_t gf2_powmod(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) r = gf2_mulmod(r, base);
        base = gf2_mulmod(base, base);
        exp >>= 1;
    }
    return r;
}

}  // namespace

TEST_CASE("lfsr32 feedback polynomial is primitive") {
    const std::uint64_t order = 0xFFFFFFFFull;  // 2^32 - 1
    CHECK(gf2_powmod(2, order) == 1);           // x^(2^32-1) = 1 mod p
    for (std::uint64_t factor : {3ull, 5ull, 17ull, 257ull, 65537ull})
        CHECK(gf2_powmod(2, order / factor) != 1);
}

TEST_CASE("lfsr32 step, period spot check, linear complexity") {
    SUBCASE("one shift from all-ones by hand") {
        Lfsr32 lfsr(0xFFFFFFFFu);
        CHECK(lfsr.next_bit() == true);  // emits bit that shifts out
        // taps 32,22,2,1 all read 1 -> feedback 0 enters the top bit
        CHECK(lfsr.state() == 0x7FFFFFFFu);
    }
    SUBCASE("no return to seed within 10^7 steps") {
        Lfsr32 lfsr(0x45ce50e8u);
        bool returned = false;
        for (int i = 0; i < 10000000; ++i) {
            lfsr.next_bit();
            if (lfsr.state() == 0x45ce50e8u) { returned = true; break; }
        }
        CHECK_FALSE(returned);
    }
    SUBCASE("any 2000-bit window has linear complexity 32") {
        Lfsr32 lfsr(0xDEADBEEFu);
        for (int skip = 0; skip < 1234; ++skip) lfsr.next_bit();
        std::vector<std::uint8_t> window(2000);
        for (auto& b : window) b = std::uint8_t(lfsr.next_bit());
        CHECK(bdprng::sts::berlekamp_massey(window) == 32);
    }
    SUBCASE("golden prefix") {
        Lfsr32 lfsr(std::uint32_t(derive_nonzero_word(kMaster, 32)));
        CHECK(prefix_hex(lfsr, 256) == kLfsrPrefix256);
    }
    CHECK_THROWS_AS(Lfsr32(0), std::invalid_argument);
}

TEST_CASE("glibc LCG extraction modes") {
    SUBCASE("all31 emits the 31 state bits MSB-first") {
        GlibcLcg g(1, LcgExtraction::All31);
        std::uint32_t word = 0;
        for (int i = 0; i < 31; ++i) word = (word << 1) | std::uint32_t(g.next_bit());
        CHECK(word == 1103527590u);
    }
    SUBCASE("lsb alternates with period 2") {
        GlibcLcg g(1, LcgExtraction::Lsb);
        bool prev = g.next_bit();
        for (int i = 0; i < 100; ++i) {
            const bool cur = g.next_bit();
            CHECK(cur != prev);
            prev = cur;
        }
    }
    SUBCASE("bit30 is near-balanced") {
        GlibcLcg g(1, LcgExtraction::Bit30);
        std::size_t ones = 0;
        const int draws = 1000000;
        for (int i = 0; i < draws; ++i) ones += g.next_bit();
        CHECK(double(ones) / draws > 0.49);
        CHECK(double(ones) / draws < 0.51);
    }
    SUBCASE("golden prefixes") {
        const std::uint32_t seed = std::uint32_t(derive_nonzero_word(kMaster, 31));
        GlibcLcg all31(seed, LcgExtraction::All31);
        CHECK(prefix_hex(all31, 256) == kGlibcAll31Prefix256);
        GlibcLcg lsb(seed);  // default extraction
        CHECK(prefix_hex(lsb, 256) == kGlibcLsbPrefix256);
    }
    CHECK(parse_extraction("all31") == LcgExtraction::All31);
    CHECK_THROWS_AS(parse_extraction("msb"), std::invalid_argument);
}

TEST_CASE("fill_bits stream properties") {
    DynamicalGenerator dyn(derive_seed(kMaster, 32, 8, 9, 11));
    dyn.reset();
    const bool first = dyn.next_bit();
    dyn.reset();
    CHECK(fill_bits(dyn, 1).bit(0) == first);

    // fill(a) then fill(b) from the carried state equals fill(a+b).
    dyn.reset();
    const BitStream a = fill_bits(dyn, 777);
    const BitStream b = fill_bits(dyn, 1223);
    dyn.reset();
    const BitStream ab = fill_bits(dyn, 2000);
    for (std::size_t i = 0; i < 777; ++i) CHECK(ab.bit(i) == a.bit(i));
    for (std::size_t i = 0; i < 1223; ++i) CHECK(ab.bit(777 + i) == b.bit(i));
}

TEST_CASE("determinism: reset reproduces the identical stream") {
    const SeedConfig cfg = derive_seed(kMaster, 32, 8, 9, 11);
    DynamicalGenerator dyn(cfg);
    RawLogisticGenerator raw32(32, cfg.x0.raw, cfg.gammas[0].raw);
    Lfsr32 lfsr(0x45ce50e8u);
    GlibcLcg lcg(12345);
    for (BitSource* src :
         std::array<BitSource*, 4>{&dyn, &raw32, &lfsr, &lcg}) {
        src->reset();
        const std::uint64_t d1 = fill_bits(*src, 1000000).fnv1a_digest();
        src->reset();
        const std::uint64_t d2 = fill_bits(*src, 1000000).fnv1a_digest();
        CHECK(d1 == d2);
    }
}
