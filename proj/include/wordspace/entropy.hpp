#ifndef WORDSPACE_ENTROPY_HPP
#define WORDSPACE_ENTROPY_HPP

#include "wordspace/bigmath.hpp"
#include "wordspace/grammar.hpp"
#include "wordspace/lexicon.hpp"

namespace wordspace {

/// An exact search-space size. All comparisons between strategies happen on
/// the integer; the binary logarithm exists for display only.
struct Cardinality {
    BigInt count;

    /// log2(count); -infinity for an empty space.
    double bits() const;
};

/// Exact rational in (0, 1]: how much a constraint shrinks the effective
/// dictionary per word.
class ShrinkFactor {
public:
    explicit ShrinkFactor(BigRat value);

    const BigRat& value() const { return value_; }

private:
    BigRat value_;
};

/// Throws if the lexicon still carries an unmerged adverb pool. Callers that
/// sample or count per-slot pools in non-strict mode need this to hold,
/// otherwise adverb mass silently drops out of the adjective pool.
void require_merged_adverbs(const Lexicon& lexicon);

/// W^n: all n-word sequences over a dictionary of W words.
Cardinality search_space_random(const BigInt& vocabulary, unsigned n);

/// Product over slots of the slot's pool size, floored once at the end
/// (synthetic pools may be non-integral). Throws when a slot's pool is
/// empty, naming the slot.
Cardinality search_space_template(const Lexicon& lexicon, const Template& tmpl,
                                  bool strict_adverbs = false);

/// Same product kept as an exact rational (no flooring); lets callers form
/// exact divisors against W^n or T^n.
BigRat search_space_template_exact(const Lexicon& lexicon, const Template& tmpl,
                                   bool strict_adverbs = false);

/// Expected per-slot pool fraction when slots follow natural-text class
/// frequencies: sum over {noun, adjective, verb} of frequency * pool share.
ShrinkFactor weighted_content_fraction(const ContentFractions& freq, const PoolFractions& pools);

/// floor((factor * W)^n): the expected search space of an n-word sentence
/// over an effective dictionary of factor * W words.
Cardinality search_space_expected(const BigInt& vocabulary, unsigned n, const ShrinkFactor& factor);

/// (1/factor)^n: by how much the constraint divides W^n.
BigRat shrink_divider(const ShrinkFactor& factor, unsigned n);

/// Largest n >= 1 with (factor*W)^n > W^(n-1), i.e. factor^n * W > 1, by
/// exact rational comparison; 0 when even n = 1 fails. Requires W >= 2 and
/// factor < 1.
unsigned crossover_n(const BigInt& vocabulary, const ShrinkFactor& factor);

/// Smallest k >= 0 with (factor*W)^(n+k) >= W^n: how many extra words a
/// constrained phrase needs to cover the random one. Throws when
/// factor * W <= 1 (no finite k exists).
unsigned compensation_words(const BigInt& vocabulary, const ShrinkFactor& factor, unsigned n);

/// log2 of a non-empty search space, computed from the exact integer.
double entropy_bits(const Cardinality& c);

}  // namespace wordspace

#endif
