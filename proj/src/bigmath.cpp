#include "wordspace/bigmath.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace wordspace {

BigInt floor_rat(const BigRat& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);  // canonical: den > 0
    BigInt quo = num / den;             // truncates toward zero
    if (num < 0 && quo * den != num) {
        --quo;
    }
    return quo;
}

BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) {
            result *= b;
        }
        exp >>= 1u;
        if (exp > 0) {
            b *= b;
        }
    }
    return result;
}

BigRat pow_rat(const BigRat& base, unsigned exp) {
    return BigRat(pow_int(numerator(base), exp), pow_int(denominator(base), exp));
}

double log2_int(const BigInt& n) {
    if (n <= 0) {
        throw std::domain_error("log2_int: argument must be positive");
    }
    const unsigned bits = msb(n);  // index of the highest set bit
    if (bits < 63) {
        return std::log2(n.convert_to<double>());
    }
    // Keep the top 64 bits; the discarded tail perturbs log2 by < 2^-63.
    const unsigned shift = bits - 63;
    const std::uint64_t top = BigInt(n >> shift).convert_to<std::uint64_t>();
    return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_rational: empty integer part");
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("parse_rational: invalid digit in \"" + std::string(text) + "\"");
        }
    }
    return BigInt(std::string(text));
}

}  // namespace

BigRat parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("parse_rational: empty input");
    }

    BigRat value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash));
        const BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("parse_rational: zero denominator");
        }
        value = BigRat(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            throw std::invalid_argument("parse_rational: bare decimal point");
        }
        BigInt scaled = int_part.empty() ? BigInt(0) : parse_integer(int_part);
        BigInt scale = 1;
        if (!frac_part.empty()) {
            for (char c : frac_part) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    throw std::invalid_argument("parse_rational: invalid decimal \"" + std::string(text) + "\"");
                }
                scaled = scaled * 10 + (c - '0');
                scale *= 10;
            }
        }
        value = BigRat(scaled, scale);
    } else {
        value = BigRat(parse_integer(text));
    }
    return negative ? BigRat(-value) : value;
}

double rat_to_double(const BigRat& q) {
    if (q == 0) {
        return 0.0;
    }
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (msb(abs(num)) < 1020 && msb(den) < 1020) {
        return num.convert_to<double>() / den.convert_to<double>();
    }
    // operands beyond double range: difference the logs instead
    const double sign = num < 0 ? -1.0 : 1.0;
    return sign * std::exp2(log2_int(abs(num)) - log2_int(den));
}

std::string rat_to_string(const BigRat& q) {
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace wordspace
