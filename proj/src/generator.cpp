#include "wordspace/generator.hpp"

#include <fstream>
#include <stdexcept>

#include "wordspace/entropy.hpp"

namespace wordspace {

// Reads /dev/urandom; falls back to std::random_device where the device
// node is unavailable.
class RandomSource::SystemEntropy {
public:
    SystemEntropy() : stream_("/dev/urandom", std::ios::binary) {}

    std::uint64_t next_u64() {
        if (stream_.is_open()) {
            unsigned char bytes[8];
            stream_.read(reinterpret_cast<char*>(bytes), sizeof(bytes));
            if (stream_.good()) {
                std::uint64_t value = 0;
                for (unsigned char b : bytes) {
                    value = (value << 8) | b;
                }
                return value;
            }
            stream_.close();
        }
        std::uint64_t value = device_();
        value = (value << 32) | device_();
        return value;
    }

private:
    std::ifstream stream_;
    std::random_device device_;
};

RandomSource RandomSource::seeded(std::uint64_t seed) {
    RandomSource rng;
    rng.engine_.emplace(seed);
    return rng;
}

RandomSource RandomSource::system() {
    RandomSource rng;
    rng.system_ = std::make_shared<SystemEntropy>();
    return rng;
}

std::uint64_t RandomSource::next_u64() {
    if (engine_) {
        return (*engine_)();
    }
    return system_->next_u64();
}

std::uint64_t RandomSource::next_index(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("RandomSource: bound must be >= 1");
    }
    if (bound == 1) {
        return 0;
    }
    // arc4random_uniform-style rejection: 2^64 mod bound values are
    // discarded so every residue is equally likely.
    const std::uint64_t min = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= min) {
            return r % bound;
        }
    }
}

namespace {

std::uint64_t pool_count(const Lexicon& lexicon, const PartOfSpeech& pos) {
    return static_cast<std::uint64_t>(lexicon.pool_words(pos).size());
}

PoolSnapshot snapshot(const Lexicon& lexicon) {
    return PoolSnapshot{
        pool_count(lexicon, PartOfSpeech::noun()),
        pool_count(lexicon, PartOfSpeech::adjective()),
        pool_count(lexicon, PartOfSpeech::verb()),
    };
}

}  // namespace

PhraseSample generate_random_words(const Lexicon& lexicon, unsigned n, RandomSource& rng) {
    if (lexicon.is_synthetic()) {
        throw std::runtime_error("cannot sample synthetic pools");
    }
    if (n == 0) {
        throw std::invalid_argument("generate_random_words: n must be >= 1");
    }
    require_merged_adverbs(lexicon);

    const auto& nouns = lexicon.pool_words(PartOfSpeech::noun());
    const auto& adjectives = lexicon.pool_words(PartOfSpeech::adjective());
    const auto& verbs = lexicon.pool_words(PartOfSpeech::verb());
    const std::uint64_t total = nouns.size() + adjectives.size() + verbs.size();
    if (total == 0) {
        throw std::runtime_error("empty lexicon");
    }

    PhraseSample sample;
    sample.strategy = Strategy::RandomWords;
    sample.lexicon_fingerprint = snapshot(lexicon);
    sample.words.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        std::uint64_t idx = rng.next_index(total);
        if (idx < nouns.size()) {
            sample.words.push_back(nouns[idx]);
        } else if (idx -= nouns.size(); idx < adjectives.size()) {
            sample.words.push_back(adjectives[idx]);
        } else {
            sample.words.push_back(verbs[idx - adjectives.size()]);
        }
    }
    sample.claimed_bits = entropy_bits(search_space_random(BigInt(total), n));
    return sample;
}

PhraseSample generate_template_phrase(const Lexicon& lexicon, const Template& tmpl,
                                      RandomSource& rng, bool strict_adverbs) {
    if (lexicon.is_synthetic()) {
        throw std::runtime_error("cannot sample synthetic pools");
    }
    if (tmpl.empty()) {
        throw std::invalid_argument("generate_template_phrase: empty template");
    }
    if (!strict_adverbs) {
        require_merged_adverbs(lexicon);
    }

    PhraseSample sample;
    sample.strategy = Strategy::TemplatePhrase;
    sample.phrase_template = tmpl;
    sample.lexicon_fingerprint = snapshot(lexicon);
    sample.words.reserve(tmpl.size());

    std::size_t index = 0;
    for (const PartOfSpeech& slot : tmpl.slots()) {
        ++index;
        const auto& pool = lexicon.pool_words(resolve_slot_pool(slot, strict_adverbs));
        if (pool.empty()) {
            throw std::runtime_error("generate_template_phrase: empty pool for slot " +
                                     std::to_string(index) + " (" + slot.name() + ")");
        }
        sample.words.push_back(pool[rng.next_index(pool.size())]);
    }
    sample.claimed_bits = entropy_bits(search_space_template(lexicon, tmpl, strict_adverbs));
    return sample;
}

std::string render_phrase(const PhraseSample& sample, std::string_view separator) {
    std::string out;
    for (const std::string& word : sample.words) {
        if (!out.empty()) {
            out += separator;
        }
        out += word;
    }
    return out;
}

}  // namespace wordspace
