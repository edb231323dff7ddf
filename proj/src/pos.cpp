#include "wordspace/pos.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace wordspace {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Non-content classes the loaders recognize. Anything outside this list and
// the content tags is an unknown tag and gets rejected with its name.
constexpr std::array<std::string_view, 11> kOtherClasses = {
    "pronoun",     "preposition",  "determiner", "conjunction", "punctuation",
    "exclamation", "interjection", "suffix",     "symbol",      "other",
    "article",
};

}  // namespace

PartOfSpeech PartOfSpeech::other(std::string_view name) {
    if (name.empty()) {
        throw std::invalid_argument("PartOfSpeech::other: empty class name");
    }
    return PartOfSpeech(Tag::Other, to_lower(name));
}

std::optional<PartOfSpeech> PartOfSpeech::parse(std::string_view token) {
    const std::string t = to_lower(token);
    if (t == "noun") {
        return noun();
    }
    if (t == "adjective" || t == "adj") {
        return adjective();
    }
    if (t == "adverb" || t == "adv") {
        return adverb();
    }
    if (t == "verb") {
        return verb();
    }
    for (std::string_view cls : kOtherClasses) {
        if (t == cls) {
            return other(t);
        }
    }
    return std::nullopt;
}

PartOfSpeech resolve_slot_pool(const PartOfSpeech& slot, bool strict_adverbs) {
    if (slot.tag() == PartOfSpeech::Tag::Adverb && !strict_adverbs) {
        return PartOfSpeech::adjective();
    }
    return slot;
}

}  // namespace wordspace
