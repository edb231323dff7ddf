#ifndef WORDSPACE_LEXICON_HPP
#define WORDSPACE_LEXICON_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wordspace/bigmath.hpp"
#include "wordspace/pos.hpp"

namespace wordspace {

/// Share of the content dictionary held by each content class.
/// Always sums to exactly 1.
struct PoolFractions {
    BigRat noun;
    BigRat adjective;
    BigRat verb;
};

/// Word pools partitioned by part of speech.
///
/// Real mode holds actual word lists (canonical lowercase, sorted, unique
/// within each pool). Synthetic mode holds exact-rational pool sizes only,
/// for dictionary-scale models where no word list exists. Immutable after
/// construction.
class Lexicon {
public:
    enum class Mode { Real, Synthetic };

    static Lexicon real(const std::map<PartOfSpeech, std::vector<std::string>>& pools);
    static Lexicon synthetic(std::map<PartOfSpeech, BigRat> pool_sizes);

    Mode mode() const { return mode_; }
    bool is_real() const { return mode_ == Mode::Real; }
    bool is_synthetic() const { return mode_ == Mode::Synthetic; }

    /// Exact pool size; zero for absent pools. Integral in real mode.
    BigRat pool_size_exact(const PartOfSpeech& pos) const;
    /// floor of the exact size.
    BigInt pool_size(const PartOfSpeech& pos) const;
    /// Real mode only.
    const std::vector<std::string>& pool_words(const PartOfSpeech& pos) const;

    /// W: |noun| + |adjective| + |verb|. Adverbs join via merge_adverbs.
    BigRat content_total_exact() const;
    /// floor(W), projected once from the exact sum.
    BigInt content_total() const;
    /// Sum over every pool, including non-content classes.
    BigRat total_entries_exact() const;

    /// True if any of the noun/adjective/adverb/verb pools is non-empty.
    bool has_content() const;

    const std::map<PartOfSpeech, std::vector<std::string>>& word_pools() const;
    const std::map<PartOfSpeech, BigRat>& size_pools() const { return sizes_; }

private:
    Lexicon() = default;

    Mode mode_ = Mode::Real;
    std::map<PartOfSpeech, std::vector<std::string>> words_;  // real mode
    std::map<PartOfSpeech, BigRat> sizes_;                    // both modes
};

/// Headword count behind the synthetic dictionary model: 171476 current
/// plus 47156 obsolete entries.
inline const BigInt kOedTotal = 218632;

/// Synthetic dictionary-scale lexicon: noun pool T/2, adjective T/4
/// (adverbs already folded in), verb T/7, remainder 3T/28 under "other".
/// floor(W) comes out to 195207.
Lexicon synthetic_oed_lexicon();

enum class WordlistFormat { Tsv, Plain };

struct WordlistStats {
    std::size_t duplicates_dropped = 0;
};

/// Reads a tagged wordlist. Tsv lines are "word<TAB>pos"; Plain lines are
/// bare words, all assigned plain_pos. '#' comment lines and blank lines
/// are skipped. Duplicate (word, pos) pairs are dropped and counted; a word
/// under two tags stays in both pools.
Lexicon load_wordlist(std::istream& in, WordlistFormat format,
                      const PartOfSpeech& plain_pos = PartOfSpeech::noun(),
                      WordlistStats* stats = nullptr);

/// Moves the adverb pool into the adjective pool. Idempotent. In real mode
/// a word tagged both adverb and adjective collapses to one entry.
Lexicon merge_adverbs(const Lexicon& lexicon);

/// Exact |pool|/W for the three content classes. Requires W > 0 and a
/// merged (empty) adverb pool.
PoolFractions pool_fractions(const Lexicon& lexicon);

/// Byte-stable tsv dump: sorted by pool then word. Real mode only.
void serialize_tsv(const Lexicon& lexicon, std::ostream& out);

/// Lowercase (ASCII) and trim surrounding whitespace.
std::string canonicalize_word(std::string_view word);

}  // namespace wordspace

#endif
