#include "wordspace/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

namespace wordspace {

namespace {

const std::vector<std::string> kEmptyPool;

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

}  // namespace

std::string canonicalize_word(std::string_view word) {
    std::size_t begin = 0;
    std::size_t end = word.size();
    while (begin < end && is_ascii_space(word[begin])) {
        ++begin;
    }
    while (end > begin && is_ascii_space(word[end - 1])) {
        --end;
    }
    std::string out(word.substr(begin, end - begin));
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

Lexicon Lexicon::real(const std::map<PartOfSpeech, std::vector<std::string>>& pools) {
    Lexicon lex;
    lex.mode_ = Mode::Real;
    for (const auto& [pos, words] : pools) {
        std::vector<std::string> canonical;
        canonical.reserve(words.size());
        for (const std::string& w : words) {
            std::string c = canonicalize_word(w);
            if (!c.empty()) {
                canonical.push_back(std::move(c));
            }
        }
        std::sort(canonical.begin(), canonical.end());
        canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
        lex.sizes_[pos] = BigRat(canonical.size());
        lex.words_[pos] = std::move(canonical);
    }
    return lex;
}

Lexicon Lexicon::synthetic(std::map<PartOfSpeech, BigRat> pool_sizes) {
    for (const auto& [pos, size] : pool_sizes) {
        if (size < 0) {
            throw std::invalid_argument("Lexicon: negative pool size for " + pos.name());
        }
    }
    Lexicon lex;
    lex.mode_ = Mode::Synthetic;
    lex.sizes_ = std::move(pool_sizes);
    return lex;
}

BigRat Lexicon::pool_size_exact(const PartOfSpeech& pos) const {
    auto it = sizes_.find(pos);
    return it == sizes_.end() ? BigRat(0) : it->second;
}

BigInt Lexicon::pool_size(const PartOfSpeech& pos) const {
    return floor_rat(pool_size_exact(pos));
}

const std::vector<std::string>& Lexicon::pool_words(const PartOfSpeech& pos) const {
    if (!is_real()) {
        throw std::logic_error("Lexicon: synthetic lexicon has no word lists");
    }
    auto it = words_.find(pos);
    return it == words_.end() ? kEmptyPool : it->second;
}

BigRat Lexicon::content_total_exact() const {
    return pool_size_exact(PartOfSpeech::noun()) + pool_size_exact(PartOfSpeech::adjective()) +
           pool_size_exact(PartOfSpeech::verb());
}

BigInt Lexicon::content_total() const {
    return floor_rat(content_total_exact());
}

BigRat Lexicon::total_entries_exact() const {
    BigRat total = 0;
    for (const auto& [pos, size] : sizes_) {
        total += size;
    }
    return total;
}

bool Lexicon::has_content() const {
    return pool_size_exact(PartOfSpeech::noun()) > 0 ||
           pool_size_exact(PartOfSpeech::adjective()) > 0 ||
           pool_size_exact(PartOfSpeech::adverb()) > 0 ||
           pool_size_exact(PartOfSpeech::verb()) > 0;
}

const std::map<PartOfSpeech, std::vector<std::string>>& Lexicon::word_pools() const {
    if (!is_real()) {
        throw std::logic_error("Lexicon: synthetic lexicon has no word lists");
    }
    return words_;
}

Lexicon synthetic_oed_lexicon() {
    const BigRat total(kOedTotal);
    std::map<PartOfSpeech, BigRat> pools;
    pools[PartOfSpeech::noun()] = total / 2;
    pools[PartOfSpeech::adjective()] = total / 4;
    pools[PartOfSpeech::verb()] = total / 7;
    // exclamations, conjunctions, prepositions and the like
    pools[PartOfSpeech::other("other")] = total * BigRat(3, 28);
    return Lexicon::synthetic(std::move(pools));
}

Lexicon load_wordlist(std::istream& in, WordlistFormat format, const PartOfSpeech& plain_pos,
                      WordlistStats* stats) {
    std::map<PartOfSpeech, std::set<std::string>> pools;
    std::size_t duplicates = 0;
    std::size_t line_no = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }

        std::string word;
        PartOfSpeech pos = plain_pos;
        if (format == WordlistFormat::Tsv) {
            const auto tab = line.find('\t');
            if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
                throw std::runtime_error("load_wordlist: malformed line " + std::to_string(line_no) +
                                         " (expected word<TAB>pos)");
            }
            word = canonicalize_word(line.substr(0, tab));
            const std::string tag = canonicalize_word(line.substr(tab + 1));
            auto parsed = PartOfSpeech::parse(tag);
            if (!parsed) {
                throw std::runtime_error("load_wordlist: unknown PoS tag \"" + tag + "\" on line " +
                                         std::to_string(line_no));
            }
            pos = *parsed;
        } else {
            word = canonicalize_word(line);
        }
        if (word.empty()) {
            throw std::runtime_error("load_wordlist: empty word on line " + std::to_string(line_no));
        }

        if (!pools[pos].insert(std::move(word)).second) {
            ++duplicates;
        }
    }
    if (in.bad()) {
        throw std::runtime_error("load_wordlist: read failure");
    }

    std::map<PartOfSpeech, std::vector<std::string>> as_vectors;
    for (auto& [pos, words] : pools) {
        as_vectors[pos] = std::vector<std::string>(words.begin(), words.end());
    }
    Lexicon lex = Lexicon::real(as_vectors);
    if (!lex.has_content()) {
        throw std::runtime_error("empty lexicon");
    }
    if (stats) {
        stats->duplicates_dropped = duplicates;
    }
    return lex;
}

Lexicon merge_adverbs(const Lexicon& lexicon) {
    const PartOfSpeech adv = PartOfSpeech::adverb();
    const PartOfSpeech adj = PartOfSpeech::adjective();

    if (lexicon.pool_size_exact(adv) == 0) {
        return lexicon;
    }
    if (lexicon.is_synthetic()) {
        std::map<PartOfSpeech, BigRat> pools = lexicon.size_pools();
        pools[adj] += pools[adv];
        pools.erase(adv);
        return Lexicon::synthetic(std::move(pools));
    }

    std::map<PartOfSpeech, std::vector<std::string>> pools = lexicon.word_pools();
    auto& target = pools[adj];
    const auto& source = pools[adv];
    target.insert(target.end(), source.begin(), source.end());
    pools.erase(adv);
    return Lexicon::real(pools);
}

PoolFractions pool_fractions(const Lexicon& lexicon) {
    if (lexicon.pool_size_exact(PartOfSpeech::adverb()) != 0) {
        throw std::invalid_argument("pool_fractions: adverbs not merged");
    }
    const BigRat total = lexicon.content_total_exact();
    if (total == 0) {
        throw std::runtime_error("empty lexicon");
    }
    return PoolFractions{
        lexicon.pool_size_exact(PartOfSpeech::noun()) / total,
        lexicon.pool_size_exact(PartOfSpeech::adjective()) / total,
        lexicon.pool_size_exact(PartOfSpeech::verb()) / total,
    };
}

void serialize_tsv(const Lexicon& lexicon, std::ostream& out) {
    // Map order is pool order (noun < adjective < adverb < verb < other)
    // and pools are sorted, so output is byte-stable.
    for (const auto& [pos, words] : lexicon.word_pools()) {
        for (const std::string& word : words) {
            out << word << '\t' << pos.name() << '\n';
        }
    }
}

}  // namespace wordspace
