#ifndef WORDSPACE_POS_HPP
#define WORDSPACE_POS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace wordspace {

/// A word class. The four content classes (noun, adjective, adverb, verb)
/// carry search-space weight; every other known class is kept under Other
/// with its canonical name ("preposition", "punctuation", ...).
class PartOfSpeech {
public:
    enum class Tag { Noun, Adjective, Adverb, Verb, Other };

    static PartOfSpeech noun() { return PartOfSpeech(Tag::Noun, "noun"); }
    static PartOfSpeech adjective() { return PartOfSpeech(Tag::Adjective, "adjective"); }
    static PartOfSpeech adverb() { return PartOfSpeech(Tag::Adverb, "adverb"); }
    static PartOfSpeech verb() { return PartOfSpeech(Tag::Verb, "verb"); }
    static PartOfSpeech other(std::string_view name);

    /// Case-insensitive; accepts the adj/adv aliases and the known
    /// non-content class names. Returns nullopt for anything else.
    static std::optional<PartOfSpeech> parse(std::string_view token);

    Tag tag() const { return tag_; }
    /// Canonical lowercase name, e.g. "adjective".
    const std::string& name() const { return name_; }

    /// Noun, adjective, adverb or verb. Adverbs count as content because
    /// they merge into the adjective pool.
    bool is_content() const { return tag_ != Tag::Other; }

    friend bool operator==(const PartOfSpeech& a, const PartOfSpeech& b) {
        return a.tag_ == b.tag_ && a.name_ == b.name_;
    }
    friend std::strong_ordering operator<=>(const PartOfSpeech& a, const PartOfSpeech& b) {
        if (auto c = a.tag_ <=> b.tag_; c != 0) {
            return c;
        }
        return a.name_ <=> b.name_;
    }

private:
    PartOfSpeech(Tag tag, std::string name) : tag_(tag), name_(std::move(name)) {}

    Tag tag_;
    std::string name_;
};

/// Template slot -> sampling pool. Adverb slots use the adjective pool
/// unless strict mode asks for a real adverb pool.
PartOfSpeech resolve_slot_pool(const PartOfSpeech& slot, bool strict_adverbs = false);

}  // namespace wordspace

#endif
