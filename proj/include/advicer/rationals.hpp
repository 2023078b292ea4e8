#ifndef ADVICER_RATIONALS_HPP
#define ADVICER_RATIONALS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "advicer/advice.hpp"

namespace advicer {

/// Reduced rational in [0,1).
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    bool operator==(const Rational&) const = default;
};

Rational rat_add_mod1(Rational a, Rational b);

/// Factorial-base code of a rational: digits a_2..a_n with 0 <= a_i < i and
/// a_n != 0, rendered as '#'-separated binary blocks whose widths follow
/// the advice tape.
struct FactorialCode {
    std::vector<int> digits; // a_2.. (empty for 0)
    std::string text;
};

/// The tape 10#11#100#101#... listing binary(i) for i = 2,3,4,...
AdviceStream champernowne_advice();

FactorialCode encode(Rational q);
Rational decode(std::string_view text);
bool domain_check(std::string_view text);

/// Digitwise addition modulo 1, least significant digit first, with block
/// widths and digit bounds read off the advice tape.
std::string add_encoded(std::string_view x, std::string_view y);

} // namespace advicer

#endif
