#ifndef WORDSPACE_GENERATOR_HPP
#define WORDSPACE_GENERATOR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wordspace/grammar.hpp"
#include "wordspace/lexicon.hpp"

namespace wordspace {

/// Uniform random indices, either reproducible (mt19937_64 under a caller
/// seed) or from the operating system's entropy source. Bounded draws use
/// rejection sampling, so no bound exhibits modulo bias.
class RandomSource {
public:
    static RandomSource seeded(std::uint64_t seed);
    static RandomSource system();

    std::uint64_t next_u64();
    /// Uniform over [0, bound); bound >= 1.
    std::uint64_t next_index(std::uint64_t bound);

    bool is_seeded() const { return engine_.has_value(); }

private:
    RandomSource() = default;

    std::optional<std::mt19937_64> engine_;
    class SystemEntropy;
    std::shared_ptr<SystemEntropy> system_;
};

enum class Strategy { RandomWords, TemplatePhrase };

/// Content-pool sizes at generation time, so a sample's claimed bits stay
/// auditable after the lexicon goes away.
struct PoolSnapshot {
    std::uint64_t noun = 0;
    std::uint64_t adjective = 0;
    std::uint64_t verb = 0;
};

struct PhraseSample {
    std::vector<std::string> words;
    Strategy strategy = Strategy::RandomWords;
    std::optional<Template> phrase_template;  // set for TemplatePhrase
    double claimed_bits = 0.0;
    PoolSnapshot lexicon_fingerprint;
};

/// n independent uniform draws (with replacement) from the union of the
/// content pools. claimed_bits = n * log2(W). Real-mode lexicons only.
PhraseSample generate_random_words(const Lexicon& lexicon, unsigned n, RandomSource& rng);

/// One uniform draw per slot from that slot's pool. claimed_bits is the log
/// of the exact slot-size product.
PhraseSample generate_template_phrase(const Lexicon& lexicon, const Template& tmpl,
                                      RandomSource& rng, bool strict_adverbs = false);

std::string render_phrase(const PhraseSample& sample, std::string_view separator = " ");

}  // namespace wordspace

#endif
