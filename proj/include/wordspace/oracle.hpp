#ifndef WORDSPACE_ORACLE_HPP
#define WORDSPACE_ORACLE_HPP

#include <cstdint>
#include <stdexcept>

#include "wordspace/generator.hpp"
#include "wordspace/grammar.hpp"
#include "wordspace/lexicon.hpp"

namespace wordspace {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Refusal to enumerate a space bigger than the caller's limit; carries the
/// predicted cardinality so the caller can report it.
class EnumerationLimitError : public std::runtime_error {
public:
    EnumerationLimitError(BigInt predicted, std::uint64_t limit);

    const BigInt& predicted() const { return predicted_; }

private:
    BigInt predicted_;
};

/// Walks every slot-wise combination exactly once (lexicographic by slot,
/// then pool index) and returns the count. Real-mode lexicons only; refuses
/// when the predicted count exceeds limit.
std::uint64_t enumerate_template(const Lexicon& lexicon, const Template& tmpl,
                                 std::uint64_t limit = kDefaultEnumerationLimit,
                                 bool strict_adverbs = false);

struct CardinalityCheck {
    bool match = false;
    BigInt formula;
    BigInt enumerated;
};

/// Closed-form product vs. brute-force count. Any mismatch is a bug in one
/// of the two routes.
CardinalityCheck verify_cardinality(const Lexicon& lexicon, const Template& tmpl,
                                    std::uint64_t limit = kDefaultEnumerationLimit,
                                    bool strict_adverbs = false);

/// Fixed orders an exhaustive attacker may walk the space in. The expected
/// attack length is order-independent for a uniform defender.
enum class AttackOrder { Lexicographic, ReverseLexicographic };

struct AttackReport {
    BigInt pool_size;
    std::uint64_t trials = 0;
    double mean_guesses = 0.0;
    BigRat expected_guesses;  // (N + 1) / 2 for a uniform pool of N
};

/// Monte Carlo guessing attack: per trial the defender picks a phrase
/// uniformly, the attacker enumerates the whole space in a fixed order, and
/// the guess count to the hit is recorded.
AttackReport simulate_guessing(const Lexicon& lexicon, const Template& tmpl,
                               std::uint64_t trials, RandomSource& rng,
                               std::uint64_t limit = kDefaultEnumerationLimit,
                               AttackOrder order = AttackOrder::Lexicographic,
                               bool strict_adverbs = false);

}  // namespace wordspace

#endif
