#include "wordspace/oracle.hpp"

#include <string>
#include <vector>

#include "wordspace/entropy.hpp"

namespace wordspace {

EnumerationLimitError::EnumerationLimitError(BigInt predicted, std::uint64_t limit)
    : std::runtime_error("enumeration refused: predicted " + predicted.str() +
                         " combinations exceed limit " + std::to_string(limit)),
      predicted_(std::move(predicted)) {}

namespace {

std::vector<std::size_t> slot_pool_sizes(const Lexicon& lexicon, const Template& tmpl,
                                         bool strict_adverbs) {
    if (lexicon.is_synthetic()) {
        throw std::runtime_error("oracle: brute-force enumeration needs a real wordlist");
    }
    if (!strict_adverbs) {
        require_merged_adverbs(lexicon);
    }
    std::vector<std::size_t> sizes;
    sizes.reserve(tmpl.size());
    std::size_t index = 0;
    for (const PartOfSpeech& slot : tmpl.slots()) {
        ++index;
        const auto& pool = lexicon.pool_words(resolve_slot_pool(slot, strict_adverbs));
        if (pool.empty()) {
            throw std::runtime_error("oracle: empty pool for slot " + std::to_string(index) +
                                     " (" + slot.name() + ")");
        }
        sizes.push_back(pool.size());
    }
    return sizes;
}

void check_limit(const std::vector<std::size_t>& sizes, std::uint64_t limit) {
    BigInt predicted = 1;
    for (std::size_t s : sizes) {
        predicted *= s;
    }
    if (predicted > limit) {
        throw EnumerationLimitError(std::move(predicted), limit);
    }
}

}  // namespace

std::uint64_t enumerate_template(const Lexicon& lexicon, const Template& tmpl,
                                 std::uint64_t limit, bool strict_adverbs) {
    const std::vector<std::size_t> sizes = slot_pool_sizes(lexicon, tmpl, strict_adverbs);
    check_limit(sizes, limit);

    // Odometer over slot indices; each distinct combination is visited once.
    std::vector<std::size_t> odometer(sizes.size(), 0);
    std::uint64_t count = 0;
    bool done = false;
    while (!done) {
        ++count;
        done = true;
        for (std::size_t i = sizes.size(); i-- > 0;) {
            if (++odometer[i] < sizes[i]) {
                done = false;
                break;
            }
            odometer[i] = 0;
        }
    }
    return count;
}

CardinalityCheck verify_cardinality(const Lexicon& lexicon, const Template& tmpl,
                                    std::uint64_t limit, bool strict_adverbs) {
    CardinalityCheck check;
    check.formula = search_space_template(lexicon, tmpl, strict_adverbs).count;
    check.enumerated = BigInt(enumerate_template(lexicon, tmpl, limit, strict_adverbs));
    check.match = check.formula == check.enumerated;
    return check;
}

AttackReport simulate_guessing(const Lexicon& lexicon, const Template& tmpl,
                               std::uint64_t trials, RandomSource& rng, std::uint64_t limit,
                               AttackOrder order, bool strict_adverbs) {
    if (trials == 0) {
        throw std::invalid_argument("simulate_guessing: trials must be >= 1");
    }
    const std::uint64_t n = enumerate_template(lexicon, tmpl, limit, strict_adverbs);

    // A combination's enumeration rank doubles as its identity: pools are
    // deduplicated, so combination -> phrase is a bijection and the attacker
    // hits the defender exactly at the defender's rank in the walk order.
    std::uint64_t total_guesses = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t defender = rng.next_index(n);
        const std::uint64_t rank =
            order == AttackOrder::Lexicographic ? defender : n - 1 - defender;
        total_guesses += rank + 1;
    }

    AttackReport report;
    report.pool_size = BigInt(n);
    report.trials = trials;
    report.mean_guesses = static_cast<double>(total_guesses) / static_cast<double>(trials);
    report.expected_guesses = BigRat(BigInt(n) + 1, 2);
    return report;
}

}  // namespace wordspace
