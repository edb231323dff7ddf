#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "wordspace/grammar.hpp"

using namespace wordspace;

TEST_CASE("parse_template") {
    const Template t = parse_template("adj noun adv verb adj noun adj noun");
    REQUIRE(t.size() == 8);
    CHECK(t.slots()[0] == PartOfSpeech::adjective());
    CHECK(t.slots()[2] == PartOfSpeech::adverb());
    CHECK(t.slots()[3] == PartOfSpeech::verb());
    CHECK(t.slots()[7] == PartOfSpeech::noun());

    CHECK(parse_template("noun").size() == 1);
    CHECK(parse_template("adjective noun adverb verb") ==
          parse_template("adj noun adv verb"));
    CHECK(parse_template("  noun\t verb  ").size() == 2);
}

TEST_CASE("parse_template rejections") {
    CHECK_THROWS_WITH_AS(parse_template("noun xyz"), doctest::Contains("position 2"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_template("noun xyz"), doctest::Contains("xyz"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_template(""), std::runtime_error);
    CHECK_THROWS_AS(parse_template("   "), std::runtime_error);
    // non-content classes are not valid slots
    CHECK_THROWS_AS(parse_template("noun pronoun"), std::runtime_error);
}

TEST_CASE("default_template") {
    const Template t = default_template();
    CHECK(t.size() == 8);
    CHECK(t == parse_template("adj noun adv verb adj noun adj noun"));
    CHECK(render_template(t) == "adj noun adv verb adj noun adj noun");
}

TEST_CASE("render is a left inverse of parse on canonical strings") {
    const char* tokens[] = {"noun", "adj", "adv", "verb"};
    std::mt19937_64 gen(5);
    for (int i = 0; i < 40; ++i) {
        std::string text;
        const std::size_t len = 1 + gen() % 8;
        for (std::size_t k = 0; k < len; ++k) {
            if (!text.empty()) {
                text += ' ';
            }
            text += tokens[gen() % 4];
        }
        CHECK(render_template(parse_template(text)) == text);
    }
}

TEST_CASE("Template rejects non-content slots") {
    CHECK_THROWS_AS(Template({PartOfSpeech::other("pronoun")}), std::invalid_argument);
    CHECK(Template{}.empty());
}

TEST_CASE("book corpus frequency table") {
    const FrequencyTable t = book_corpus_frequency_table();
    CHECK(t.at(PartOfSpeech::noun()) == BigRat(19, 100));
    CHECK(t.at(PartOfSpeech::verb()) == BigRat(15, 100));
    CHECK(t.at(PartOfSpeech::adverb()) + t.at(PartOfSpeech::adjective()) == BigRat(13, 100));
    CHECK(t.at(PartOfSpeech::other("punctuation")) == BigRat(14, 100));
    // the published row sums to 101%, kept as-is
    CHECK(t.total() == BigRat(101, 100));
}

TEST_CASE("refine_to_content") {
    SUBCASE("book corpus") {
        const ContentFractions f = refine_to_content(book_corpus_frequency_table());
        CHECK(f.noun == BigRat(19, 47));
        CHECK(f.adjective == BigRat(13, 47));
        CHECK(f.verb == BigRat(15, 47));
        CHECK(f.noun + f.adjective + f.verb == 1);
    }
    SUBCASE("already normalized") {
        std::map<PartOfSpeech, BigRat> entries;
        entries[PartOfSpeech::noun()] = BigRat(1, 3);
        entries[PartOfSpeech::adjective()] = BigRat(1, 3);
        entries[PartOfSpeech::verb()] = BigRat(1, 3);
        const ContentFractions f = refine_to_content(FrequencyTable(std::move(entries)));
        CHECK(f.noun == BigRat(1, 3));
        CHECK(f.adjective == BigRat(1, 3));
        CHECK(f.verb == BigRat(1, 3));
    }
    SUBCASE("adverb merges before renormalizing") {
        std::map<PartOfSpeech, BigRat> entries;
        entries[PartOfSpeech::noun()] = BigRat(1, 2);
        entries[PartOfSpeech::adverb()] = BigRat(1, 4);
        entries[PartOfSpeech::adjective()] = BigRat(0);
        entries[PartOfSpeech::verb()] = BigRat(1, 4);
        const ContentFractions f = refine_to_content(FrequencyTable(std::move(entries)));
        CHECK(f.noun == BigRat(1, 2));
        CHECK(f.adjective == BigRat(1, 4));
        CHECK(f.verb == BigRat(1, 4));
    }
    SUBCASE("no content frequencies") {
        std::map<PartOfSpeech, BigRat> entries;
        entries[PartOfSpeech::other("punctuation")] = BigRat(1);
        CHECK_THROWS_AS(refine_to_content(FrequencyTable(std::move(entries))),
                        std::runtime_error);
    }
}

TEST_CASE("FrequencyTable rejects negative frequencies") {
    std::map<PartOfSpeech, BigRat> entries;
    entries[PartOfSpeech::noun()] = BigRat(-1, 10);
    CHECK_THROWS_AS(FrequencyTable{std::move(entries)}, std::invalid_argument);
}

TEST_CASE("load_frequency_table") {
    SUBCASE("normalizes to exactly 1") {
        std::istringstream in("noun 19\nverb 15\nadjective 13\n");
        const FrequencyTable t = load_frequency_table(in);
        CHECK(t.total() == 1);
        CHECK(t.at(PartOfSpeech::noun()) == BigRat(19, 47));
        const ContentFractions f = refine_to_content(t);
        CHECK(f.noun == BigRat(19, 47));
        CHECK(f.adjective == BigRat(13, 47));
        CHECK(f.verb == BigRat(15, 47));
    }
    SUBCASE("two entries") {
        std::istringstream in("noun 50\nverb 50\n");
        const FrequencyTable t = load_frequency_table(in);
        CHECK(t.at(PartOfSpeech::noun()) == BigRat(1, 2));
        CHECK(t.at(PartOfSpeech::verb()) == BigRat(1, 2));
    }
    SUBCASE("decimal percentages and comments") {
        std::istringstream in("# corpus counts\nnoun 12.5\nverb 37.5\n");
        const FrequencyTable t = load_frequency_table(in);
        CHECK(t.at(PartOfSpeech::noun()) == BigRat(1, 4));
        CHECK(t.at(PartOfSpeech::verb()) == BigRat(3, 4));
    }
    SUBCASE("rejections") {
        std::istringstream negative("noun -1\n");
        CHECK_THROWS_AS(load_frequency_table(negative), std::runtime_error);
        std::istringstream malformed("noun\n");
        CHECK_THROWS_AS(load_frequency_table(malformed), std::runtime_error);
        std::istringstream trailing("noun 19 extra\n");
        CHECK_THROWS_AS(load_frequency_table(trailing), std::runtime_error);
        std::istringstream empty("# nothing\n");
        CHECK_THROWS_WITH_AS(load_frequency_table(empty), doctest::Contains("empty"),
                             std::runtime_error);
        std::istringstream zero("noun 0\nverb 0\n");
        CHECK_THROWS_AS(load_frequency_table(zero), std::runtime_error);
        std::istringstream unknown("gerund 10\n");
        CHECK_THROWS_WITH_AS(load_frequency_table(unknown), doctest::Contains("gerund"),
                             std::runtime_error);
        std::istringstream duplicate("noun 10\nnoun 20\n");
        CHECK_THROWS_WITH_AS(load_frequency_table(duplicate), doctest::Contains("duplicate"),
                             std::runtime_error);
    }
}
