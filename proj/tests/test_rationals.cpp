#include <doctest.h>

#include <cstdint>
#include <string>

#include "advicer/errors.hpp"
#include "advicer/rationals.hpp"

using namespace advicer;

namespace {

std::string binary_of(std::uint64_t n) {
    std::string s;
    for (; n > 0; n /= 2)
        s.insert(s.begin(), static_cast<char>('0' + n % 2));
    return s;
}

} // namespace

TEST_CASE("rational normalization") {
    CHECK(Rational::make(2, 4) == Rational{1, 2});
    CHECK(Rational::make(0, 7) == Rational{0, 1});
    CHECK(rat_add_mod1(Rational::make(1, 2), Rational::make(5, 6)) == Rational{1, 3});
    CHECK(rat_add_mod1(Rational::make(1, 2), Rational::make(1, 2)) == Rational{0, 1});
    CHECK_THROWS_AS(Rational::make(3, 2), ContractViolation);
    CHECK_THROWS_AS(Rational::make(1, 0), ContractViolation);
}

TEST_CASE("advice tape lists binary representations") {
    auto a = champernowne_advice();
    CHECK(a.prefix_text(11) == "10#11#100#1");
    // block i equals binary(i) for i up to 64
    std::string want;
    for (std::uint64_t i = 2; i <= 64; ++i)
        want += binary_of(i) + "#";
    CHECK(a.prefix_text(want.size()) == want);
}

TEST_CASE("encode produces minimal bounded digit strings") {
    CHECK(encode(Rational::make(1, 2)).text == "01");
    CHECK(encode(Rational::make(1, 3)).text == "00#10");
    CHECK(encode(Rational::make(0, 1)).text == "");
    CHECK(encode(Rational::make(1, 2)).digits == std::vector<int>{1});
    CHECK(encode(Rational::make(1, 3)).digits == std::vector<int>{0, 2});
}

TEST_CASE("decode inverts encode") {
    CHECK(decode("01") == Rational{1, 2});
    CHECK(decode("00#10") == Rational{1, 3});
    CHECK(decode("") == Rational{0, 1});
    // exhaustive round trip over denominators dividing 6!
    for (long long num = 0; num < 720; ++num) {
        Rational q = Rational::make(num, 720);
        auto code = encode(q);
        REQUIRE(decode(code.text) == q);
        REQUIRE(domain_check(code.text));
        // digit bounds and minimality
        for (std::size_t i = 0; i < code.digits.size(); ++i) {
            REQUIRE(code.digits[i] >= 0);
            REQUIRE(code.digits[i] < static_cast<int>(i) + 2);
        }
        if (!code.digits.empty())
            REQUIRE(code.digits.back() != 0);
    }
}

TEST_CASE("domain membership") {
    CHECK(domain_check("01"));
    CHECK(domain_check(""));
    CHECK_FALSE(domain_check("10"));    // a_2 = 2 breaks the digit bound
    CHECK_FALSE(domain_check("01#00")); // trailing zero block breaks minimality
    CHECK_FALSE(domain_check("0"));     // wrong block width
    CHECK_FALSE(domain_check("01#1"));  // block for i=3 must be 2 wide
    CHECK_FALSE(domain_check("0x"));    // alphabet violation
}

TEST_CASE("addition against the tape") {
    CHECK(add_encoded("01", "01") == "");
    CHECK(add_encoded("01", "01#10") == "00#10");
    for (const char* x : {"", "01", "00#10", "01#01#011"})
        CHECK(add_encoded("", x) == x);
    CHECK_THROWS_AS(add_encoded("10", "01"), FormatError);
}

TEST_CASE("addition is a homomorphism onto addition modulo 1") {
    for (long long a = 0; a < 24; ++a)
        for (long long b = 0; b < 24; ++b) {
            Rational x = Rational::make(a, 24);
            Rational y = Rational::make(b, 24);
            auto sum = add_encoded(encode(x).text, encode(y).text);
            REQUIRE(decode(sum) == rat_add_mod1(x, y));
            REQUIRE(domain_check(sum));
        }
}
