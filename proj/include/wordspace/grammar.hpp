#ifndef WORDSPACE_GRAMMAR_HPP
#define WORDSPACE_GRAMMAR_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wordspace/bigmath.hpp"
#include "wordspace/pos.hpp"

namespace wordspace {

/// An ordered sequence of content-class slots modeling a sentence skeleton.
/// Grammar glue (articles, prepositions) is assumed known to an attacker and
/// is deliberately not representable. An empty template is allowed and has
/// search space 1.
class Template {
public:
    Template() = default;
    explicit Template(std::vector<PartOfSpeech> slots, std::string label = {});

    const std::vector<PartOfSpeech>& slots() const { return slots_; }
    std::size_t size() const { return slots_.size(); }
    bool empty() const { return slots_.empty(); }
    const std::string& label() const { return label_; }

    friend bool operator==(const Template& a, const Template& b) { return a.slots_ == b.slots_; }

private:
    std::vector<PartOfSpeech> slots_;
    std::string label_;
};

/// Whitespace-separated slot tokens: noun, adj, adjective, adv, adverb, verb.
Template parse_template(std::string_view text);

/// Canonical short tokens joined by single spaces ("adj noun adv verb ...").
std::string render_template(const Template& tmpl);

/// The fixed subject-action-object-qualifier skeleton:
/// adj noun adv verb adj noun adj noun.
Template default_template();

/// Relative word-class frequencies. Values are exact rationals; a table
/// built by load_frequency_table sums to exactly 1, while the built-in
/// corpus table keeps its published (rounded) percentages as-is.
class FrequencyTable {
public:
    FrequencyTable() = default;
    explicit FrequencyTable(std::map<PartOfSpeech, BigRat> entries);

    const std::map<PartOfSpeech, BigRat>& entries() const { return entries_; }
    /// Zero for absent classes.
    BigRat at(const PartOfSpeech& pos) const;
    BigRat total() const;

private:
    std::map<PartOfSpeech, BigRat> entries_;
};

/// Average word-class frequencies over a mixed nine-book corpus:
/// noun 19%, verb 15%, punctuation 14%, preposition 13%, determiner 10%,
/// pronoun 9%, adverb 7%, adjective 6%, conjunction 4%, other 3%, symbol 1%.
/// The published row sums to 101% (source rounding); kept as-is, since the
/// content refinement renormalizes within its own subset anyway.
FrequencyTable book_corpus_frequency_table();

/// How often each content class appears among content words in running
/// text. Sums to exactly 1.
struct ContentFractions {
    BigRat noun;
    BigRat adjective;
    BigRat verb;
};

/// Merges adverb into adjective, restricts to {noun, adjective, verb} and
/// renormalizes. For the book-corpus table this is (19/47, 13/47, 15/47).
ContentFractions refine_to_content(const FrequencyTable& table);

/// Lines of "class percentage" ('#' comments allowed); percentages are
/// decimal numbers and the table is normalized to sum to exactly 1.
FrequencyTable load_frequency_table(std::istream& in);

}  // namespace wordspace

#endif
