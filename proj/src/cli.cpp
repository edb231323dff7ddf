#include "wordspace/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>

#include "wordspace/entropy.hpp"
#include "wordspace/generator.hpp"
#include "wordspace/grammar.hpp"
#include "wordspace/lexicon.hpp"
#include "wordspace/oracle.hpp"

namespace wordspace {

namespace {

using Json = nlohmann::ordered_json;

// The 8-slot product works out to total/14336, not the divisor figures
// usually quoted next to this template.
constexpr const char* kDivisorNote =
    "the quoted divisors for this template (512*7 = 3584 against total^8, 7294 against W^8) "
    "are inconsistent with the slot product; exact values: 14336 = 4^4 * 2^3 * 7 against "
    "total^8 and 152587890625/26353376 (about 5790.07) against W^8";

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

Json rat_json(const BigRat& q) {
    return Json{{"num", numerator(q).str()},
                {"den", denominator(q).str()},
                {"approx", rat_to_double(q)}};
}

Json cardinality_json(const Cardinality& c) {
    return Json{{"count", c.count.str()}, {"bits", c.bits()}};
}

std::string rat_text(const BigRat& q) {
    if (denominator(q) == 1) {
        return rat_to_string(q);
    }
    return rat_to_string(q) + " (" + fixed6(rat_to_double(q)) + ")";
}

struct LexiconArgs {
    std::string wordlist;
    std::string wordlist_format = "tsv";
    std::string plain_pos = "noun";
    bool synthetic_oed = false;
};

void add_lexicon_options(CLI::App* cmd, LexiconArgs& args) {
    auto* wordlist = cmd->add_option("--wordlist", args.wordlist, "tagged wordlist file");
    cmd->add_option("--wordlist-format", args.wordlist_format, "wordlist layout (default tsv)")
        ->check(CLI::IsMember({"tsv", "plain"}))
        ->needs(wordlist);
    cmd->add_option("--plain-pos", args.plain_pos,
                    "word class assigned to every entry of a plain wordlist")
        ->needs(wordlist);
    auto* synthetic = cmd->add_flag("--synthetic-oed", args.synthetic_oed,
                                    "use the built-in dictionary-scale pool model");
    synthetic->excludes(wordlist);
}

/// Loads and adverb-merges the requested lexicon.
Lexicon load_lexicon(const LexiconArgs& args) {
    if (args.synthetic_oed) {
        return synthetic_oed_lexicon();
    }
    if (args.wordlist.empty()) {
        throw std::runtime_error("no lexicon given: pass --wordlist PATH or --synthetic-oed");
    }
    std::ifstream in(args.wordlist);
    if (!in) {
        throw std::runtime_error("cannot open wordlist: " + args.wordlist);
    }
    const auto format =
        args.wordlist_format == "plain" ? WordlistFormat::Plain : WordlistFormat::Tsv;
    auto pos = PartOfSpeech::parse(args.plain_pos);
    if (!pos) {
        throw std::runtime_error("unknown word class for --plain-pos: " + args.plain_pos);
    }
    return merge_adverbs(load_wordlist(in, format, *pos));
}

FrequencyTable load_frequencies(const std::string& path) {
    if (path.empty()) {
        return book_corpus_frequency_table();
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open frequency file: " + path);
    }
    return load_frequency_table(in);
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    LexiconArgs lexicon;
    std::string template_text;
    std::int64_t n = -1;  // -1: take the template length, or skip
    std::string freq_path;
    std::string factor_text;
    std::string format = "text";
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
    const Lexicon lexicon = load_lexicon(args.lexicon);
    const PoolFractions pools = pool_fractions(lexicon);
    const FrequencyTable freq = load_frequencies(args.freq_path);
    const ContentFractions content = refine_to_content(freq);
    const ShrinkFactor factor = args.factor_text.empty()
                                    ? weighted_content_fraction(content, pools)
                                    : ShrinkFactor(parse_rational(args.factor_text));

    std::optional<Template> tmpl;
    if (!args.template_text.empty()) {
        tmpl = parse_template(args.template_text);
    }
    std::optional<unsigned> n;
    if (args.n >= 0) {
        if (args.n > 1000000) {
            throw std::runtime_error("-n too large (max 1000000)");
        }
        n = static_cast<unsigned>(args.n);
    } else if (tmpl) {
        n = static_cast<unsigned>(tmpl->size());
    }

    const BigInt w = lexicon.content_total();
    const BigRat w_exact = lexicon.content_total_exact();

    Json report;
    report["command"] = "analyze";
    report["lexicon"]["mode"] = lexicon.is_synthetic() ? "synthetic" : "real";
    report["lexicon"]["total_entries"] = rat_json(lexicon.total_entries_exact());
    report["lexicon"]["W"] = w.str();
    report["lexicon"]["W_exact"] = rat_json(w_exact);
    report["lexicon"]["W_bits"] = log2_int(w);
    Json pool_sizes = Json::object();
    for (const auto& [pos, size] : lexicon.size_pools()) {
        pool_sizes[pos.name()] = rat_json(size);
    }
    report["lexicon"]["pools"] = std::move(pool_sizes);
    report["pool_fractions"] = Json{{"noun", rat_json(pools.noun)},
                                    {"adjective", rat_json(pools.adjective)},
                                    {"verb", rat_json(pools.verb)}};
    report["content_fractions"] = Json{{"noun", rat_json(content.noun)},
                                       {"adjective", rat_json(content.adjective)},
                                       {"verb", rat_json(content.verb)}};
    report["weighted_factor"] = rat_json(factor.value());

    std::optional<Cardinality> random_space, expected_space, template_space;
    if (n) {
        random_space = search_space_random(w, *n);
        expected_space = search_space_expected(w, *n, factor);
        Json random = cardinality_json(*random_space);
        random["n"] = *n;
        Json expected = cardinality_json(*expected_space);
        expected["n"] = *n;
        expected["divider"] = rat_json(shrink_divider(factor, *n));
        report["random"] = std::move(random);
        report["expected"] = std::move(expected);
    }

    if (tmpl) {
        template_space = search_space_template(lexicon, *tmpl);
        const BigRat exact = search_space_template_exact(lexicon, *tmpl);
        Json t = cardinality_json(*template_space);
        t["slots"] = render_template(*tmpl);
        t["length"] = tmpl->size();
        Json slot_pools = Json::array();
        for (const PartOfSpeech& slot : tmpl->slots()) {
            const PartOfSpeech pool = resolve_slot_pool(slot);
            slot_pools.push_back(Json{{"slot", slot.name()},
                                      {"pool", pool.name()},
                                      {"size", rat_json(lexicon.pool_size_exact(pool))}});
        }
        t["slot_pools"] = std::move(slot_pools);
        t["exact"] = rat_json(exact);
        const unsigned len = static_cast<unsigned>(tmpl->size());
        t["divisor_vs_total"] = rat_json(pow_rat(lexicon.total_entries_exact(), len) / exact);
        t["divisor_vs_W"] = rat_json(pow_rat(w_exact, len) / exact);
        if (len >= 1) {
            const Cardinality shorter = search_space_random(w, len - 1);
            Json vs = cardinality_json(shorter);
            vs["n"] = len - 1;
            vs["template_exceeds"] = template_space->count > shorter.count;
            vs["ratio"] = rat_to_double(BigRat(template_space->count, shorter.count));
            t["vs_random_one_shorter"] = std::move(vs);
        }
        if (lexicon.is_synthetic() && *tmpl == default_template()) {
            t["divisor_note"] = kDivisorNote;
        }
        report["template"] = std::move(t);
    }

    if (args.format == "json") {
        out << report.dump(2) << "\n";
        return 0;
    }

    out << "lexicon: " << (lexicon.is_synthetic() ? "synthetic model" : "wordlist")
        << " (total entries " << rat_to_string(lexicon.total_entries_exact()) << ")\n";
    out << "content words W = " << w.str();
    if (denominator(w_exact) != 1) {
        out << " (exact " << rat_to_string(w_exact) << ")";
    }
    out << ", " << fixed6(log2_int(w)) << " bits\n";
    out << "pool fractions: noun " << rat_text(pools.noun) << ", adjective "
        << rat_text(pools.adjective) << ", verb " << rat_text(pools.verb) << "\n";
    out << "content fractions: noun " << rat_text(content.noun) << ", adjective "
        << rat_text(content.adjective) << ", verb " << rat_text(content.verb) << "\n";
    out << "weighted factor: " << rat_text(factor.value()) << "\n";
    if (n) {
        out << "S_random(" << *n << ") = " << random_space->count.str() << " ("
            << fixed6(random_space->bits()) << " bits)\n";
        out << "S_expected(" << *n << ") = " << expected_space->count.str() << " ("
            << fixed6(expected_space->bits()) << " bits), divider "
            << rat_text(shrink_divider(factor, *n)) << "\n";
    }
    if (tmpl) {
        const unsigned len = static_cast<unsigned>(tmpl->size());
        out << "S_template(\"" << render_template(*tmpl) << "\") = " << template_space->count.str()
            << " (" << fixed6(template_space->bits()) << " bits)\n";
        out << "  divisor vs total^" << len << ": "
            << rat_text(pow_rat(lexicon.total_entries_exact(), len) /
                        search_space_template_exact(lexicon, *tmpl))
            << "\n";
        out << "  divisor vs W^" << len << ": "
            << rat_text(pow_rat(w_exact, len) / search_space_template_exact(lexicon, *tmpl))
            << "\n";
        if (len >= 1) {
            const Cardinality shorter = search_space_random(w, len - 1);
            out << "  vs W^" << (len - 1) << " = " << shorter.count.str() << " ("
                << fixed6(shorter.bits()) << " bits): template space is "
                << fixed6(rat_to_double(BigRat(template_space->count, shorter.count)))
                << "x as large\n";
        }
        if (lexicon.is_synthetic() && *tmpl == default_template()) {
            out << "  note: " << kDivisorNote << "\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------- generate

struct GenerateArgs {
    LexiconArgs lexicon;
    bool random = false;
    std::int64_t n = -1;
    std::string template_text;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t count = 1;
    bool show_bits = false;
    std::string separator = " ";
    std::string format = "text";
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
    const Lexicon lexicon = load_lexicon(args.lexicon);

    std::optional<Template> tmpl;
    if (!args.template_text.empty()) {
        tmpl = parse_template(args.template_text);
    }
    if (args.random == tmpl.has_value()) {
        throw std::runtime_error("choose exactly one strategy: --random -n N or --template STR");
    }
    if (args.random && args.n < 1) {
        throw std::runtime_error("--random needs -n >= 1");
    }
    if (args.random && args.n > 1000000) {
        throw std::runtime_error("-n too large (max 1000000 words per phrase)");
    }
    if (args.count < 1) {
        throw std::runtime_error("--count must be >= 1");
    }

    RandomSource rng = args.seed_set ? RandomSource::seeded(args.seed) : RandomSource::system();

    Json phrases = Json::array();
    for (std::uint64_t i = 0; i < args.count; ++i) {
        const PhraseSample sample =
            args.random ? generate_random_words(lexicon, static_cast<unsigned>(args.n), rng)
                        : generate_template_phrase(lexicon, *tmpl, rng);
        if (args.format == "json") {
            phrases.push_back(Json{{"words", sample.words},
                                   {"phrase", render_phrase(sample, args.separator)},
                                   {"bits", sample.claimed_bits}});
        } else {
            out << render_phrase(sample, args.separator);
            if (args.show_bits) {
                out << '\t' << fixed6(sample.claimed_bits) << " bits";
            }
            out << '\n';
        }
    }

    if (args.format == "json") {
        Json report;
        report["command"] = "generate";
        report["strategy"] = args.random ? "random" : "template";
        if (tmpl) {
            report["template"] = render_template(*tmpl);
        } else {
            report["n"] = args.n;
        }
        report["seed"] = args.seed_set ? Json(args.seed) : Json(nullptr);
        report["phrases"] = std::move(phrases);
        out << report.dump(2) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- crossover

struct CrossoverArgs {
    LexiconArgs lexicon;
    std::string w_text;
    std::string factor_text;
    std::string freq_path;
    std::string format = "text";
};

Json comparison_json(const BigInt& w, const ShrinkFactor& factor, unsigned n) {
    const BigRat lhs = pow_rat(factor.value() * BigRat(w), n);
    const BigInt rhs = pow_int(w, n - 1);
    return Json{{"n", n},
                {"template_space", floor_rat(lhs).str()},
                {"random_one_shorter", rhs.str()},
                {"holds", lhs > BigRat(rhs)}};
}

/// Largest m >= 1 with factor^m * W >= 1 (non-strict twin of crossover_n).
/// Only called once crossover_n succeeded, so the factor is search-friendly.
unsigned largest_nonstrict_power(const BigInt& w, const ShrinkFactor& factor) {
    const BigInt num = numerator(factor.value());
    const BigInt den = denominator(factor.value());
    const auto holds = [&](unsigned m) { return pow_int(num, m) * w >= pow_int(den, m); };
    if (!holds(1)) {
        return 0;
    }
    const double estimate = log2_int(w) / (log2_int(den) - log2_int(num));
    unsigned m = estimate < 1 ? 1 : static_cast<unsigned>(estimate);
    while (!holds(m)) {
        --m;
    }
    while (holds(m + 1)) {
        ++m;
    }
    return m;
}

int cmd_crossover(const CrossoverArgs& args, std::ostream& out) {
    // validate the factor before anything that needs a lexicon
    std::optional<BigRat> explicit_factor;
    if (!args.factor_text.empty()) {
        explicit_factor = parse_rational(args.factor_text);
        if (*explicit_factor <= 0 || *explicit_factor >= 1) {
            throw std::runtime_error("factor must be strictly between 0 and 1, got " +
                                     rat_to_string(*explicit_factor));
        }
    }

    BigInt w;
    std::optional<Lexicon> lexicon;
    if (args.lexicon.synthetic_oed || !args.lexicon.wordlist.empty()) {
        lexicon = load_lexicon(args.lexicon);
    }
    if (!args.w_text.empty()) {
        try {
            w = BigInt(args.w_text);
        } catch (const std::exception&) {
            throw std::runtime_error("invalid dictionary size: " + args.w_text);
        }
    } else if (lexicon) {
        w = lexicon->content_total();
    } else {
        throw std::runtime_error("no dictionary size: pass -W, --wordlist or --synthetic-oed");
    }
    if (w < 2) {
        throw std::runtime_error("dictionary size must be >= 2");
    }

    BigRat factor_value;
    if (explicit_factor) {
        factor_value = *explicit_factor;
    } else {
        const PoolFractions pools =
            lexicon ? pool_fractions(*lexicon) : pool_fractions(synthetic_oed_lexicon());
        const ContentFractions content = refine_to_content(load_frequencies(args.freq_path));
        factor_value = weighted_content_fraction(content, pools).value();
        if (factor_value >= 1) {
            throw std::runtime_error("degenerate factor 1: nothing to cross over");
        }
    }
    const ShrinkFactor factor{factor_value};

    const unsigned n_star = crossover_n(w, factor);
    const bool finite_compensation = factor.value() * BigRat(w) > 1;
    const unsigned one_word_up_to = finite_compensation ? largest_nonstrict_power(w, factor) - 1 : 0;

    Json report;
    report["command"] = "crossover";
    report["W"] = w.str();
    report["factor"] = rat_json(factor.value());
    report["crossover_n"] = n_star;
    if (n_star >= 1) {
        report["at_crossover"] = comparison_json(w, factor, n_star);
    }
    report["beyond_crossover"] = comparison_json(w, factor, n_star + 1);
    report["compensation"] = Json{{"finite", finite_compensation},
                                  {"one_word_covers_up_to_n", one_word_up_to}};

    if (args.format == "json") {
        out << report.dump(2) << "\n";
        return 0;
    }

    out << "W = " << w.str() << ", factor = " << rat_text(factor.value()) << "\n";
    out << "crossover n = " << n_star << "\n";
    auto print_comparison = [&](unsigned n) {
        const BigRat lhs = pow_rat(factor.value() * BigRat(w), n);
        const BigInt rhs = pow_int(w, n - 1);
        const bool holds = lhs > BigRat(rhs);
        out << "  n = " << n << ": floor((factor*W)^" << n << ") = " << floor_rat(lhs).str()
            << ", W^" << (n - 1) << " = " << rhs.str() << "  -> "
            << (holds ? "exceeds" : "does not exceed") << "\n";
    };
    if (n_star >= 1) {
        print_comparison(n_star);
    }
    print_comparison(n_star + 1);
    if (finite_compensation) {
        out << "one extra word compensates the constraint for phrases of up to " << one_word_up_to
            << " words\n";
    } else {
        out << "no finite compensation: factor * W <= 1\n";
    }
    return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    LexiconArgs lexicon;
    std::string template_text;
    std::uint64_t limit = kDefaultEnumerationLimit;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    const Lexicon lexicon = load_lexicon(args.lexicon);
    const Template tmpl = parse_template(args.template_text);

    const CardinalityCheck check = verify_cardinality(lexicon, tmpl, args.limit);

    std::optional<AttackReport> attack;
    if (args.trials > 0) {
        RandomSource rng = args.seed_set ? RandomSource::seeded(args.seed) : RandomSource::system();
        attack = simulate_guessing(lexicon, tmpl, args.trials, rng, args.limit);
    }

    if (args.format == "json") {
        Json report;
        report["command"] = "verify";
        report["template"] = render_template(tmpl);
        report["formula"] = check.formula.str();
        report["enumerated"] = check.enumerated.str();
        report["match"] = check.match;
        report["limit"] = args.limit;
        if (attack) {
            const double expected = rat_to_double(attack->expected_guesses);
            report["attack"] = Json{{"pool_size", attack->pool_size.str()},
                                    {"trials", attack->trials},
                                    {"mean_guesses", attack->mean_guesses},
                                    {"expected_guesses", rat_json(attack->expected_guesses)},
                                    {"relative_error",
                                     std::abs(attack->mean_guesses - expected) / expected}};
        }
        out << report.dump(2) << "\n";
    } else {
        out << "template \"" << render_template(tmpl) << "\": formula " << check.formula.str()
            << ", enumerated " << check.enumerated.str() << " -> "
            << (check.match ? "match" : "MISMATCH") << "\n";
        if (attack) {
            const double expected = rat_to_double(attack->expected_guesses);
            out << "guessing attack: pool " << attack->pool_size.str() << ", trials "
                << attack->trials << ", mean " << fixed6(attack->mean_guesses) << ", expected "
                << rat_text(attack->expected_guesses) << ", relative error "
                << fixed6(std::abs(attack->mean_guesses - expected) / expected) << "\n";
        }
    }
    return check.match ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"passphrase search-space calculator and generator", "wordspace"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "search-space cardinalities and entropy for a lexicon");
    add_lexicon_options(analyze, analyze_args.lexicon);
    analyze->add_option("--template", analyze_args.template_text, "phrase template slots");
    analyze->add_option("-n,--length", analyze_args.n, "phrase length in words")
        ->check(CLI::NonNegativeNumber);
    analyze->add_option("--freq", analyze_args.freq_path, "word-class frequency file");
    analyze->add_option("--factor", analyze_args.factor_text,
                        "override the effective-dictionary factor (rational or decimal)");
    analyze->add_option("--format", analyze_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "emit passphrases");
    add_lexicon_options(generate, generate_args.lexicon);
    generate->add_flag("--random", generate_args.random, "uniform random words strategy");
    generate->add_option("-n,--length", generate_args.n, "words per phrase (with --random)");
    generate->add_option("--template", generate_args.template_text, "template strategy slots");
    generate->add_option("--seed", generate_args.seed, "deterministic seed (default: system rng)")
        ->trigger_on_parse()
        ->each([&generate_args](const std::string&) { generate_args.seed_set = true; });
    generate->add_option("--count", generate_args.count, "number of phrases");
    generate->add_flag("--show-bits", generate_args.show_bits, "append claimed entropy bits");
    generate->add_option("--separator", generate_args.separator, "word separator");
    generate->add_option("--format", generate_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CrossoverArgs crossover_args;
    auto* crossover = app.add_subcommand(
        "crossover", "largest n where an n-word template beats n-1 random words");
    add_lexicon_options(crossover, crossover_args.lexicon);
    crossover->add_option("-W,--dictionary-size", crossover_args.w_text, "content dictionary size");
    crossover->add_option("--factor", crossover_args.factor_text,
                          "effective-dictionary factor (rational or decimal)");
    crossover->add_option("--freq", crossover_args.freq_path, "word-class frequency file");
    crossover->add_option("--format", crossover_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "brute-force check of the closed-form cardinality, plus attack simulation");
    add_lexicon_options(verify, verify_args.lexicon);
    verify->add_option("--template", verify_args.template_text, "phrase template slots")
        ->required();
    verify->add_option("--limit", verify_args.limit, "enumeration refusal limit");
    verify->add_option("--trials", verify_args.trials, "guessing-attack trials");
    verify->add_option("--seed", verify_args.seed, "deterministic seed")
        ->trigger_on_parse()
        ->each([&verify_args](const std::string&) { verify_args.seed_set = true; });
    verify->add_option("--format", verify_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    int exit_code = 0;
    analyze->callback([&]() { exit_code = cmd_analyze(analyze_args, out); });
    generate->callback([&]() { exit_code = cmd_generate(generate_args, out); });
    crossover->callback([&]() { exit_code = cmd_crossover(crossover_args, out); });
    verify->callback([&]() { exit_code = cmd_verify(verify_args, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace wordspace
