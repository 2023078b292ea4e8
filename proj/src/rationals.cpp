#include "advicer/rationals.hpp"

#include <bit>
#include <numeric>

namespace advicer {

namespace {

const int kZero = 0, kOne = 1, kHash = 2;

Alphabet tape_alphabet() { return Alphabet({"0", "1", "#"}); }

int block_width(long long i) {
    return std::bit_width(static_cast<unsigned long long>(i));
}

} // namespace

Rational Rational::make(long long num, long long den) {
    if (den <= 0)
        throw ContractViolation("denominator must be positive");
    if (num < 0 || num >= den)
        throw ContractViolation("rational must lie in [0,1)");
    long long g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

Rational rat_add_mod1(Rational a, Rational b) {
    long long den = a.den / std::gcd(a.den, b.den) * b.den;
    long long num = a.num * (den / a.den) + b.num * (den / b.den);
    return Rational::make(num % den, den);
}

AdviceStream champernowne_advice() {
    return AdviceStream::generated(tape_alphabet(), "champernowne-factorial", [](std::uint64_t n) {
        // Walk blocks binary(2)# binary(3)# ... until position n falls inside.
        std::uint64_t pos = 0;
        for (long long i = 2;; ++i) {
            int w = block_width(i);
            if (n <= pos + static_cast<std::uint64_t>(w)) {
                int offset = static_cast<int>(n - pos - 1); // 0-based within the block
                int bit = (i >> (w - 1 - offset)) & 1;
                return bit ? kOne : kZero;
            }
            pos += static_cast<std::uint64_t>(w);
            if (n == pos + 1)
                return kHash;
            pos += 1;
        }
    });
}

namespace {

// Reads the (i-2)nd '#'-delimited block of the tape, which spells i in
// binary; the code's block for digit a_i shares its width. Operand parsing
// and the carry comparison take both the width and the bound i from here.
struct TapeSegment {
    long long value; // i
    int width;
};

TapeSegment tape_segment(long long i) {
    static const AdviceStream tape = champernowne_advice();
    std::uint64_t pos = 1;
    for (long long j = 2; j < i; ++j)
        pos += static_cast<std::uint64_t>(block_width(j)) + 1;
    TapeSegment seg{0, 0};
    for (Symbol s = tape.at(pos); s != kHash; s = tape.at(++pos)) {
        seg.value = seg.value * 2 + (s == kOne ? 1 : 0);
        ++seg.width;
    }
    return seg;
}

std::string render(const std::vector<int>& digits) {
    std::string out;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        long long i = static_cast<long long>(j) + 2;
        int w = tape_segment(i).width;
        if (j > 0)
            out += '#';
        for (int b = w - 1; b >= 0; --b)
            out += ((digits[j] >> b) & 1) ? '1' : '0';
    }
    return out;
}

// Digit vectors, minimality not required; returns false on malformed text.
bool parse_digits(std::string_view text, std::vector<int>& digits) {
    digits.clear();
    if (text.empty())
        return true;
    std::size_t start = 0;
    long long i = 2;
    for (;;) {
        std::size_t hash = text.find('#', start);
        std::string_view block =
            text.substr(start, hash == std::string_view::npos ? hash : hash - start);
        TapeSegment seg = tape_segment(i);
        if (static_cast<int>(block.size()) != seg.width)
            return false;
        long long a = 0;
        for (char c : block) {
            if (c != '0' && c != '1')
                return false;
            a = a * 2 + (c - '0');
        }
        if (a >= seg.value)
            return false; // digit bound 0 <= a_i < i
        digits.push_back(static_cast<int>(a));
        if (hash == std::string_view::npos)
            break;
        start = hash + 1;
        ++i;
    }
    return true;
}

std::vector<int> checked_digits(std::string_view text) {
    std::vector<int> digits;
    if (!parse_digits(text, digits))
        throw FormatError("malformed factorial code: " + std::string(text));
    if (!digits.empty() && digits.back() == 0)
        throw FormatError("factorial code not minimal (trailing zero block)");
    return digits;
}

} // namespace

FactorialCode encode(Rational q) {
    q = Rational::make(q.num, q.den);
    FactorialCode code;
    long long num = q.num;
    const long long den = q.den;
    for (long long i = 2; num != 0; ++i) {
        num *= i;
        code.digits.push_back(static_cast<int>(num / den));
        num %= den;
    }
    code.text = render(code.digits);
    return code;
}

Rational decode(std::string_view text) {
    std::vector<int> digits = checked_digits(text);
    Rational q{0, 1};
    long long fact = 1;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        fact *= static_cast<long long>(j) + 2;
        if (digits[j] != 0)
            q = rat_add_mod1(q, Rational::make(digits[j], fact));
    }
    return q;
}

bool domain_check(std::string_view text) {
    std::vector<int> digits;
    if (!parse_digits(text, digits))
        return false;
    return digits.empty() || digits.back() != 0;
}

std::string add_encoded(std::string_view x, std::string_view y) {
    std::vector<int> a = checked_digits(x);
    std::vector<int> b = checked_digits(y);
    std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0);
    b.resize(n, 0);
    std::vector<int> sum(n, 0);
    int carry = 0;
    for (std::size_t j = n; j-- > 0;) {
        long long i = tape_segment(static_cast<long long>(j) + 2).value;
        long long s = a[j] + b[j] + carry;
        if (s >= i) {
            sum[j] = static_cast<int>(s - i);
            carry = 1;
        } else {
            sum[j] = static_cast<int>(s);
            carry = 0;
        }
    }
    // The carry out of segment i=2 is discarded: addition is modulo 1.
    while (!sum.empty() && sum.back() == 0)
        sum.pop_back();
    return render(sum);
}

} // namespace advicer
