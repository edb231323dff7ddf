#include "wordspace/entropy.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace wordspace {

double Cardinality::bits() const {
    if (count == 0) {
        return -std::numeric_limits<double>::infinity();
    }
    return log2_int(count);
}

ShrinkFactor::ShrinkFactor(BigRat value) : value_(std::move(value)) {
    if (value_ <= 0 || value_ > 1) {
        throw std::invalid_argument("ShrinkFactor: value must be in (0, 1], got " +
                                    rat_to_string(value_));
    }
}

void require_merged_adverbs(const Lexicon& lexicon) {
    if (lexicon.pool_size_exact(PartOfSpeech::adverb()) != 0) {
        throw std::invalid_argument("adverb pool not merged; call merge_adverbs first");
    }
}

Cardinality search_space_random(const BigInt& vocabulary, unsigned n) {
    if (vocabulary < 1) {
        throw std::invalid_argument("search_space_random: vocabulary must be >= 1");
    }
    return Cardinality{pow_int(vocabulary, n)};
}

BigRat search_space_template_exact(const Lexicon& lexicon, const Template& tmpl,
                                   bool strict_adverbs) {
    if (!strict_adverbs) {
        require_merged_adverbs(lexicon);
    }
    BigRat product = 1;
    std::size_t index = 0;
    for (const PartOfSpeech& slot : tmpl.slots()) {
        ++index;
        const PartOfSpeech pool = resolve_slot_pool(slot, strict_adverbs);
        const BigRat size = lexicon.pool_size_exact(pool);
        if (size == 0) {
            throw std::runtime_error("search_space_template: empty pool for slot " +
                                     std::to_string(index) + " (" + slot.name() + ")");
        }
        product *= size;
    }
    return product;
}

Cardinality search_space_template(const Lexicon& lexicon, const Template& tmpl,
                                  bool strict_adverbs) {
    return Cardinality{floor_rat(search_space_template_exact(lexicon, tmpl, strict_adverbs))};
}

ShrinkFactor weighted_content_fraction(const ContentFractions& freq, const PoolFractions& pools) {
    return ShrinkFactor(freq.noun * pools.noun + freq.adjective * pools.adjective +
                        freq.verb * pools.verb);
}

Cardinality search_space_expected(const BigInt& vocabulary, unsigned n,
                                  const ShrinkFactor& factor) {
    if (vocabulary < 1) {
        throw std::invalid_argument("search_space_expected: vocabulary must be >= 1");
    }
    return Cardinality{floor_rat(pow_rat(factor.value() * BigRat(vocabulary), n))};
}

BigRat shrink_divider(const ShrinkFactor& factor, unsigned n) {
    return pow_rat(BigRat(1) / factor.value(), n);
}

namespace {

// Results past this point would need gigabyte-sized exact powers; refuse
// rather than grind (reachable only with factors within ~1e-5 of 1).
constexpr double kMaxSearchIndex = 1e6;

}  // namespace

unsigned crossover_n(const BigInt& vocabulary, const ShrinkFactor& factor) {
    if (vocabulary < 2) {
        throw std::invalid_argument("crossover_n: vocabulary must be >= 2");
    }
    if (factor.value() >= 1) {
        throw std::invalid_argument("crossover_n: factor must be < 1");
    }
    const BigInt num = numerator(factor.value());
    const BigInt den = denominator(factor.value());

    // factor^n * W > 1  <=>  num^n * W > den^n, strictly decreasing in n
    const auto holds = [&](unsigned n) {
        return pow_int(num, n) * vocabulary > pow_int(den, n);
    };
    if (!holds(1)) {
        return 0;
    }
    // A float estimate seeds the search; every decision below is exact.
    const double slope = log2_int(den) - log2_int(num);
    const double estimate = log2_int(vocabulary) / slope;
    if (!(slope > 0) || !(estimate < kMaxSearchIndex)) {
        throw std::runtime_error("crossover_n: factor too close to 1, result beyond 10^6");
    }
    unsigned n = estimate < 1 ? 1 : static_cast<unsigned>(estimate);
    while (!holds(n)) {
        --n;
    }
    while (holds(n + 1)) {
        ++n;
    }
    return n;
}

unsigned compensation_words(const BigInt& vocabulary, const ShrinkFactor& factor, unsigned n) {
    if (vocabulary < 1) {
        throw std::invalid_argument("compensation_words: vocabulary must be >= 1");
    }
    if (n < 1) {
        throw std::invalid_argument("compensation_words: n must be >= 1");
    }
    if (factor.value() == 1) {
        return 0;
    }
    if (factor.value() * BigRat(vocabulary) <= 1) {
        throw std::domain_error("compensation_words: factor * W <= 1, no finite compensation");
    }
    const BigInt num = numerator(factor.value());
    const BigInt den = denominator(factor.value());

    // factor^(n+k) * W^k >= 1  <=>  num^(n+k) * W^k >= den^(n+k),
    // non-decreasing in k because factor * W > 1
    const auto holds = [&](unsigned k) {
        return pow_int(num, n + k) * pow_int(vocabulary, k) >= pow_int(den, n + k);
    };
    if (holds(0)) {
        return 0;
    }
    const double slope = log2_int(den) - log2_int(num);  // bits lost per constrained word
    const double gain = log2_int(vocabulary) - slope;    // bits gained per extra word
    const double estimate = static_cast<double>(n) * slope / gain;
    if (!(gain > 0) || !(estimate < kMaxSearchIndex)) {
        throw std::runtime_error("compensation_words: result beyond 10^6");
    }
    unsigned k = estimate < 1 ? 1 : static_cast<unsigned>(estimate);
    while (!holds(k)) {
        ++k;
    }
    while (k > 0 && holds(k - 1)) {
        --k;
    }
    return k;
}

double entropy_bits(const Cardinality& c) {
    if (c.count < 1) {
        throw std::domain_error("entropy_bits: empty search space");
    }
    return log2_int(c.count);
}

}  // namespace wordspace
