#include "wordspace/grammar.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wordspace {

Template::Template(std::vector<PartOfSpeech> slots, std::string label)
    : slots_(std::move(slots)), label_(std::move(label)) {
    for (const PartOfSpeech& slot : slots_) {
        if (!slot.is_content()) {
            throw std::invalid_argument("Template: slot \"" + slot.name() +
                                        "\" is not a content class");
        }
    }
}

Template parse_template(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<PartOfSpeech> slots;
    std::string token;
    std::size_t position = 0;
    while (in >> token) {
        ++position;
        auto pos = PartOfSpeech::parse(token);
        if (!pos || !pos->is_content()) {
            throw std::runtime_error("parse_template: unknown slot token \"" + token +
                                     "\" at position " + std::to_string(position));
        }
        slots.push_back(*pos);
    }
    if (slots.empty()) {
        throw std::runtime_error("parse_template: empty template");
    }
    return Template(std::move(slots));
}

std::string render_template(const Template& tmpl) {
    std::string out;
    for (const PartOfSpeech& slot : tmpl.slots()) {
        if (!out.empty()) {
            out += ' ';
        }
        switch (slot.tag()) {
            case PartOfSpeech::Tag::Noun: out += "noun"; break;
            case PartOfSpeech::Tag::Adjective: out += "adj"; break;
            case PartOfSpeech::Tag::Adverb: out += "adv"; break;
            case PartOfSpeech::Tag::Verb: out += "verb"; break;
            case PartOfSpeech::Tag::Other: out += slot.name(); break;
        }
    }
    return out;
}

Template default_template() {
    const auto noun = PartOfSpeech::noun();
    const auto adj = PartOfSpeech::adjective();
    const auto adv = PartOfSpeech::adverb();
    const auto verb = PartOfSpeech::verb();
    return Template({adj, noun, adv, verb, adj, noun, adj, noun},
                    "subject-action-object-qualifier");
}

FrequencyTable::FrequencyTable(std::map<PartOfSpeech, BigRat> entries)
    : entries_(std::move(entries)) {
    for (const auto& [pos, freq] : entries_) {
        if (freq < 0) {
            throw std::invalid_argument("FrequencyTable: negative frequency for " + pos.name());
        }
    }
}

BigRat FrequencyTable::at(const PartOfSpeech& pos) const {
    auto it = entries_.find(pos);
    return it == entries_.end() ? BigRat(0) : it->second;
}

BigRat FrequencyTable::total() const {
    BigRat sum = 0;
    for (const auto& [pos, freq] : entries_) {
        sum += freq;
    }
    return sum;
}

FrequencyTable book_corpus_frequency_table() {
    std::map<PartOfSpeech, BigRat> entries;
    entries[PartOfSpeech::noun()] = BigRat(19, 100);
    entries[PartOfSpeech::verb()] = BigRat(15, 100);
    entries[PartOfSpeech::other("punctuation")] = BigRat(14, 100);
    entries[PartOfSpeech::other("preposition")] = BigRat(13, 100);
    entries[PartOfSpeech::other("determiner")] = BigRat(10, 100);
    entries[PartOfSpeech::other("pronoun")] = BigRat(9, 100);
    entries[PartOfSpeech::adverb()] = BigRat(7, 100);
    entries[PartOfSpeech::adjective()] = BigRat(6, 100);
    entries[PartOfSpeech::other("conjunction")] = BigRat(4, 100);
    entries[PartOfSpeech::other("other")] = BigRat(3, 100);
    entries[PartOfSpeech::other("symbol")] = BigRat(1, 100);
    return FrequencyTable(std::move(entries));
}

ContentFractions refine_to_content(const FrequencyTable& table) {
    const BigRat noun = table.at(PartOfSpeech::noun());
    const BigRat adjective = table.at(PartOfSpeech::adjective()) + table.at(PartOfSpeech::adverb());
    const BigRat verb = table.at(PartOfSpeech::verb());
    const BigRat total = noun + adjective + verb;
    if (total == 0) {
        throw std::runtime_error("refine_to_content: no content frequencies");
    }
    return ContentFractions{noun / total, adjective / total, verb / total};
}

FrequencyTable load_frequency_table(std::istream& in) {
    std::map<PartOfSpeech, BigRat> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string tag, value, extra;
        if (!(fields >> tag >> value) || (fields >> extra)) {
            throw std::runtime_error("load_frequency_table: malformed line " +
                                     std::to_string(line_no) + " (expected \"class percentage\")");
        }
        auto pos = PartOfSpeech::parse(tag);
        if (!pos) {
            throw std::runtime_error("load_frequency_table: unknown class \"" + tag +
                                     "\" on line " + std::to_string(line_no));
        }
        BigRat freq;
        try {
            freq = parse_rational(value);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("load_frequency_table: bad percentage on line " +
                                     std::to_string(line_no) + ": " + e.what());
        }
        if (freq < 0) {
            throw std::runtime_error("load_frequency_table: negative frequency on line " +
                                     std::to_string(line_no));
        }
        if (!entries.emplace(*pos, freq).second) {
            throw std::runtime_error("load_frequency_table: duplicate class \"" + pos->name() +
                                     "\" on line " + std::to_string(line_no));
        }
    }
    if (in.bad()) {
        throw std::runtime_error("load_frequency_table: read failure");
    }
    if (entries.empty()) {
        throw std::runtime_error("load_frequency_table: empty table");
    }

    BigRat total = 0;
    for (const auto& [pos, freq] : entries) {
        total += freq;
    }
    if (total == 0) {
        throw std::runtime_error("load_frequency_table: all frequencies are zero");
    }
    for (auto& [pos, freq] : entries) {
        freq /= total;
    }
    return FrequencyTable(std::move(entries));
}

}  // namespace wordspace
