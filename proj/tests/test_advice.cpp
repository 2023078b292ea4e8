#include <doctest.h>

#include "advicer/advice.hpp"
#include "advicer/errors.hpp"
#include "advicer/io.hpp"
#include "advicer/separation.hpp"

using namespace advicer;

TEST_CASE("alphabet basics") {
    Alphabet a({"0", "1", "#"});
    CHECK(a.size() == 3);
    CHECK(a.index_of("#") == 2);
    CHECK(a.index_of("x") == -1);
    CHECK(a.name(1) == "1");
    CHECK_THROWS_AS(Alphabet({"a", "a"}), ContractViolation);
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), ContractViolation);
}

TEST_CASE("symbol/text conversion round trips") {
    Alphabet bin = binary_alphabet();
    auto w = to_symbols(bin, "0110");
    CHECK(w == std::vector<Symbol>{0, 1, 1, 0});
    CHECK(to_text(bin, w) == "0110");
    CHECK(to_symbols(bin, "").empty());

    Alphabet wide({"left", "right"});
    auto v = to_symbols(wide, "right,left");
    CHECK(v == std::vector<Symbol>{1, 0});
    CHECK(to_text(wide, v) == "right,left");
    CHECK_THROWS_AS(to_symbols(bin, "012"), ContractViolation);
}

TEST_CASE("ultimately periodic evaluation") {
    Alphabet bin = binary_alphabet();
    auto s = AdviceStream::ultimately_periodic(bin, {}, {0, 1});
    CHECK(s.at(1) == 0);
    CHECK(s.at(2) == 1);
    CHECK(s.at(7) == 0);

    auto t = AdviceStream::ultimately_periodic(bin, {1}, {0});
    CHECK(t.at(1) == 1);
    CHECK(t.at(5) == 0);

    CHECK_THROWS_AS(s.at(0), ContractViolation);
    CHECK_THROWS_AS(AdviceStream::ultimately_periodic(bin, {}, {}), ContractViolation);
    CHECK_THROWS_AS(AdviceStream().at(1), ContractViolation);
}

TEST_CASE("stream prefixes") {
    Alphabet ab({"a", "b"});
    auto s = AdviceStream::ultimately_periodic(ab, {}, {0, 1});
    CHECK(s.prefix(0).empty());
    CHECK(s.prefix_text(5) == "ababa");
}

TEST_CASE("determinism and lasso identity") {
    Alphabet bin = binary_alphabet();
    auto s = AdviceStream::ultimately_periodic(bin, {1, 1, 0}, {0, 1, 1, 0});
    for (std::uint64_t n = 1; n <= 200; ++n) {
        CHECK(s.at(n) == s.at(n));
        CHECK(bin.contains(s.at(n)));
        if (n > 3)
            CHECK(s.at(n) == s.at(n + 4));
    }
}

TEST_CASE("phase bookkeeping matches direct indexing") {
    Alphabet bin = binary_alphabet();
    auto s = AdviceStream::ultimately_periodic(bin, {1, 0}, {0, 1, 1});
    CHECK(s.phase_count() == 5);
    for (std::uint64_t n = 1; n <= 40; ++n) {
        CHECK(s.at_phase(s.phase_of(n)) == s.at(n));
        CHECK(s.phase_of(n + 1) == s.phase_successor(s.phase_of(n)));
    }
    auto gen = AdviceStream::generated(bin, "g", [](std::uint64_t) { return 0; });
    CHECK_THROWS_AS(gen.phase_count(), UnsupportedAdvice);
    CHECK_THROWS_AS(gen.phase_of(3), UnsupportedAdvice);
}

TEST_CASE("champernowne stream prefix") {
    auto a = catalog_stream("champernowne-factorial");
    CHECK(a.prefix_text(8) == "10#11#10");
    CHECK(a.prefix_text(11) == "10#11#100#1");
}

TEST_CASE("diagonal advice first position is the first evading word") {
    auto d = diagonal_advice(1, 1);
    auto machines = enumerate_transducers(1, 1);
    REQUIRE(!machines.empty());
    auto cert = evade_word(machines.front());
    REQUIRE(!cert.word.empty());
    CHECK(d.at(1) == cert.word.front());
}

TEST_CASE("advice tree evaluation") {
    Alphabet cd({"c", "d"});
    auto u = AdviceTree::uniform(cd, 0);
    CHECK(u.at("0110") == 0);
    auto dp = AdviceTree::depth_periodic(cd, {0, 1});
    CHECK(dp.at("01") == 0); // depth 2 mod 2 = 0
    CHECK(dp.at("0") == 1);  // depth parity
    CHECK(dp.at("") == 0);
    CHECK_THROWS_AS(dp.at("02"), ContractViolation);
    CHECK_THROWS_AS(AdviceTree().at(""), ContractViolation);
}

TEST_CASE("descriptors survive parsing") {
    Alphabet bin = binary_alphabet();
    auto s = AdviceStream::ultimately_periodic(bin, {1}, {0, 1});
    auto r = parse_stream_descriptor(bin, s.descriptor());
    for (std::uint64_t n = 1; n <= 20; ++n)
        CHECK(r.at(n) == s.at(n));

    Alphabet cd({"c", "d"});
    auto t = AdviceTree::depth_periodic(cd, {1, 0});
    auto rt = parse_tree_descriptor(cd, t.descriptor());
    for (const char* pos : {"", "0", "01", "110"})
        CHECK(rt.at(pos) == t.at(pos));
}
