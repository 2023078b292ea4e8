#include <doctest.h>

#include "advicer/errors.hpp"
#include "advicer/models.hpp"
#include "advicer/separation.hpp"
#include "helpers.hpp"

using namespace advicer;
using namespace advicer::testing;

TEST_CASE("terminating-to-Muller conversion preserves the language") {
    TermAutomaton parity = parity_machine();
    MullerAutomaton converted = t_to_nt(parity);
    CHECK(converted.advice.descriptor() == parity.advice.descriptor());
    for (const auto& w : words_up_to(2, 8))
        REQUIRE(accepts_terminating(parity, w) == accepts_nonterminating(converted, w));
}

TEST_CASE("terminating-to-Muller edge cases") {
    Alphabet gx({"x"});
    auto trivial = AdviceStream::ultimately_periodic(gx, {}, {0});

    auto none = make_term({"p", "q"}, binary_alphabet(), gx, trivial, 0, {},
                          [](int q, int, int) { return 1 - q; });
    auto none_nt = t_to_nt(none);
    CHECK(none_nt.accept_family.empty());
    for (const auto& w : words_up_to(2, 4))
        CHECK_FALSE(accepts_nonterminating(none_nt, w));

    auto all = make_term({"q"}, binary_alphabet(), gx, trivial, 0, {0},
                         [](int, int, int) { return 0; });
    auto all_nt = t_to_nt(all);
    for (const auto& w : words_up_to(2, 4))
        CHECK(accepts_nonterminating(all_nt, w));
}

TEST_CASE("Muller-to-terminating conversion on the branch-on-blank machine") {
    auto adv = AdviceStream::ultimately_periodic(binary_alphabet(), {}, {1, 0});
    MullerAutomaton m = branch_on_blank_machine(adv);
    TermAutomaton t = nt_to_t(m);
    for (std::size_t n = 0; n <= 12; ++n) {
        std::vector<Symbol> w(n, 0);
        REQUIRE(accepts_terminating(t, w) == (n % 2 == 0));
        REQUIRE(accepts_terminating(t, w) == accepts_nonterminating(m, w));
    }
}

TEST_CASE("Muller-to-terminating conversion on degenerate families") {
    Alphabet gx({"x"});
    auto trivial = AdviceStream::ultimately_periodic(gx, {}, {0});

    auto nothing = make_muller({"p", "q"}, binary_alphabet(), gx, trivial, 0, {},
                               [](int q, int, int) { return 1 - q; });
    auto t0 = nt_to_t(nothing);
    for (const auto& w : words_up_to(2, 8))
        CHECK_FALSE(accepts_terminating(t0, w));

    // every lasso is a self-loop on state q; accepting it accepts everything
    auto everything = make_muller({"q"}, binary_alphabet(), gx, trivial, 0, {{0}},
                                  [](int, int, int) { return 0; });
    auto t1 = nt_to_t(everything);
    for (const auto& w : words_up_to(2, 8))
        CHECK(accepts_terminating(t1, w));
}

TEST_CASE("Muller-to-terminating agrees on random machines") {
    Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        MullerAutomaton m = random_muller_machine(rng, 4, 2, 6);
        TermAutomaton t = nt_to_t(m);
        for (const auto& w : words_up_to(2, 6))
            REQUIRE(accepts_terminating(t, w) == accepts_nonterminating(m, w));
    }
}

TEST_CASE("pair advice stream stays ultimately periodic with the base shape") {
    auto adv = AdviceStream::ultimately_periodic(binary_alphabet(), {1, 1}, {1, 0, 0});
    MullerAutomaton m = branch_on_blank_machine(adv);
    TermAutomaton t = nt_to_t(m);
    CHECK(t.advice.is_ultimately_periodic());
    CHECK(t.advice.stem().size() == 2);
    CHECK(t.advice.cycle().size() == 3);
    // unrolling two more cycles reproduces identical pair symbols
    for (std::uint64_t n = 3; n <= 20; ++n)
        CHECK(t.advice.at(n) == t.advice.at(n + 3));
    // each pair's set component matches a fresh empty-string computation
    for (std::uint64_t n = 1; n <= 10; ++n) {
        const std::string& name = t.advice_alphabet.name(t.advice.at(n));
        CHECK(name.front() == '(');
        CHECK(name[1] == adv.alphabet().name(adv.at(n)).front());
    }
}

TEST_CASE("round trip: terminating through Muller and back") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        TermAutomaton m = random_term_machine(rng, 5, 2, 6);
        TermAutomaton back = nt_to_t(t_to_nt(m));
        for (const auto& w : words_up_to(2, 8))
            REQUIRE(accepts_terminating(m, w) == accepts_terminating(back, w));
    }
}

TEST_CASE("generated advice blocks the pair expansion") {
    auto gen = AdviceStream::generated(binary_alphabet(), "g", [](std::uint64_t) { return 1; });
    CHECK_THROWS_AS(nt_to_t(branch_on_blank_machine(gen)), UnsupportedAdvice);
}

TEST_CASE("prefix recognizer on the alternating stream") {
    // terminating recognizer of {0^n : A_{n+1} = 1} for A = (10)^ω:
    // state tracks the parity of the number of characters read.
    auto adv = AdviceStream::ultimately_periodic(binary_alphabet(), {}, {1, 0});
    auto m = make_term({"even", "odd"}, Alphabet({"0"}), binary_alphabet(), adv, 0, {0},
                       [](int q, int, int) { return 1 - q; });
    // sanity: m accepts 0^n iff A_{n+1} = 1 iff n even
    for (std::size_t n = 0; n <= 9; ++n)
        REQUIRE(accepts_terminating(m, std::vector<Symbol>(n, 0)) == (n % 2 == 0));

    Dfa d = pref_recognizer(m);
    CHECK(d.num_states() == 3);
    auto oracle = pref_oracle(adv);
    for (const auto& w : words_up_to(2, 10))
        REQUIRE(d.accepts(w) == oracle.contains(w));
    CHECK(d.accepts(to_symbols(d.input, "1")));
    CHECK(d.accepts(to_symbols(d.input, "10")));
    CHECK(d.accepts(to_symbols(d.input, "101")));
    CHECK_FALSE(d.accepts(to_symbols(d.input, "0")));
    CHECK_FALSE(d.accepts(to_symbols(d.input, "11")));
}

TEST_CASE("prefix recognizer sink is absorbing") {
    auto adv = AdviceStream::ultimately_periodic(binary_alphabet(), {}, {1, 0});
    auto m = make_term({"even", "odd"}, Alphabet({"0"}), binary_alphabet(), adv, 0, {0},
                       [](int q, int, int) { return 1 - q; });
    Dfa d = pref_recognizer(m);
    int sink = d.num_states() - 1;
    CHECK(d.step(sink, 0) == sink);
    CHECK(d.step(sink, 1) == sink);
    CHECK_FALSE(d.accepting[static_cast<std::size_t>(sink)]);
    // a mismatch never recovers
    for (const auto& w : words_up_to(2, 6)) {
        auto bad = to_symbols(d.input, "11");
        bad.insert(bad.end(), w.begin(), w.end());
        CHECK_FALSE(d.accepts(bad));
    }
}

TEST_CASE("prefix recognizer with no accepting states walks the all-zero case") {
    auto adv = AdviceStream::ultimately_periodic(binary_alphabet(), {}, {0});
    auto m = make_term({"q"}, Alphabet({"0"}), binary_alphabet(), adv, 0, {},
                       [](int, int, int) { return 0; });
    Dfa d = pref_recognizer(m);
    auto oracle = pref_oracle(adv);
    for (const auto& w : words_up_to(2, 8))
        CHECK(d.accepts(w) == oracle.contains(w)); // exactly prefixes of 0^ω
}

TEST_CASE("prefix recognizer shape preconditions") {
    auto adv = AdviceStream::ultimately_periodic(binary_alphabet(), {}, {1});
    auto wide = make_term({"q"}, binary_alphabet(), binary_alphabet(), adv, 0, {0},
                          [](int, int, int) { return 0; });
    CHECK_THROWS_AS(pref_recognizer(wide), ContractViolation);
}
