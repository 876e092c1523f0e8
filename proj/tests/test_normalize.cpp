#include <algorithm>
#include <cctype>
#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "termex/normalize.hpp"

using termex::Normalizer;
using termex::NormalizeOptions;
using termex::Token;
using termex::UPos;

namespace {

const Normalizer& norm() {
  static const Normalizer kNorm;
  return kNorm;
}

std::string key_of(const std::string& phrase) {
  auto key = norm().key_for_phrase(phrase);
  return key ? *key : "<none>";
}

std::string random_phrase(std::mt19937& rng) {
  static const std::string kChars =
      "abcdefgh StTHE()[]the of,.-'s  IES xes";
  std::uniform_int_distribution<std::size_t> pick(0, kChars.size() - 1);
  std::uniform_int_distribution<int> len(0, 30);
  std::string out;
  int n = len(rng);
  for (int i = 0; i < n; ++i) out.push_back(kChars[pick(rng)]);
  return out;
}

}  // namespace

TEST_SUITE("normalize") {

TEST_CASE("token spans normalize through lemmas") {
  Token a{1, "semigroup", "semigroup", UPos::NOUN};
  Token b{2, "actions", "action", UPos::NOUN};
  std::vector<Token> span{a, b};
  CHECK(norm().key_for_tokens(span) == "semigroup action");
}

TEST_CASE("edge stop words are dropped from token spans") {
  Token the{1, "the", "the", UPos::DET};
  Token cat{2, "category", "category", UPos::NOUN};
  std::vector<Token> span{the, cat};
  CHECK(norm().key_for_tokens(span) == "category");
}

TEST_CASE("all-stop-word span yields nothing") {
  Token of{1, "of", "of", UPos::ADP};
  Token the{2, "the", "the", UPos::DET};
  std::vector<Token> span{of, the};
  CHECK(!norm().key_for_tokens(span).has_value());
}

TEST_CASE("punctuation tokens are invisible to span keys") {
  Token a{1, "torsor", "torsor", UPos::NOUN};
  Token comma{2, ",", ",", UPos::PUNCT};
  Token b{3, "topos", "topos", UPos::NOUN};
  std::vector<Token> span{a, comma, b};
  CHECK(norm().key_for_tokens(span) == "torsor topos");
}

TEST_CASE("raw phrases are singularized per word") {
  CHECK(key_of("Inverse semigroups") == "inverse semigroup");
  CHECK(key_of("categories") == "category");
  CHECK(key_of("classes") == "class");
  CHECK(key_of("boxes") == "box");
  CHECK(key_of("torsos") == "torso");
  CHECK(key_of("series") == "series");
  CHECK(key_of("topoi") == "topos");
  CHECK(key_of("topos") == "topos");
  CHECK(key_of("matrices") == "matrix");
  CHECK(key_of("sheaves") == "sheaf");
}

TEST_CASE("interior stop words stay") {
  CHECK(key_of("the category of torsors") == "category of torsor");
}

TEST_CASE("unusual formatting is preserved, not decomposed") {
  CHECK(key_of("(co)homology") == "(co)homology");
  CHECK(key_of("(torsor)") == "torsor");  // a wrapping pair still strips
}

TEST_CASE("hyphens are preserved") {
  CHECK(key_of("set-theoretic torsors") == "set-theoretic torsor");
}

TEST_CASE("edge punctuation goes, including around words") {
  CHECK(key_of("  'torsor',") == "torsor");
  CHECK(key_of("torsor.") == "torsor");
}

TEST_CASE("pure stop-word or punctuation phrases yield nothing") {
  CHECK(!norm().key_for_phrase("of the").has_value());
  CHECK(!norm().key_for_phrase("  ,, . ").has_value());
  CHECK(!norm().key_for_phrase("").has_value());
}

TEST_CASE("expand_co produces both variants") {
  NormalizeOptions opts;
  opts.expand_co = true;
  Normalizer expander(opts);
  auto keys = expander.keys_for_phrase("(co)homology");
  REQUIRE(keys.size() == 2);
  CHECK(std::find(keys.begin(), keys.end(), "homology") != keys.end());
  CHECK(std::find(keys.begin(), keys.end(), "cohomology") != keys.end());
  // Without the flag, one opaque key.
  CHECK(norm().keys_for_phrase("(co)homology") ==
        std::vector<std::string>{"(co)homology"});
}

TEST_CASE("stop-word list ships with 175 entries and can be overridden") {
  CHECK(Normalizer::builtin_stopwords().size() == 175);
  NormalizeOptions opts;
  opts.stopword_override = {"torsor"};
  Normalizer custom(opts);
  CHECK(custom.key_for_phrase("the torsor") == "the");
  CHECK(!custom.key_for_phrase("torsor").has_value());
}

TEST_CASE("normalization is idempotent") {
  std::mt19937 rng(42);
  for (int i = 0; i < 2000; ++i) {
    std::string phrase = random_phrase(rng);
    auto once = norm().key_for_phrase(phrase);
    if (!once) continue;
    CHECK(norm().key_for_phrase(*once) == *once);
  }
}

TEST_CASE("normalization is case-invariant") {
  std::mt19937 rng(43);
  for (int i = 0; i < 2000; ++i) {
    std::string phrase = random_phrase(rng);
    std::string upper = phrase;
    for (char& c : upper) c = static_cast<char>(std::toupper(
        static_cast<unsigned char>(c)));
    CHECK(norm().key_for_phrase(phrase) == norm().key_for_phrase(upper));
  }
}

TEST_CASE("keys never start or end with a stop word") {
  std::mt19937 rng(44);
  for (int i = 0; i < 2000; ++i) {
    auto key = norm().key_for_phrase(random_phrase(rng));
    if (!key) continue;
    std::string first = key->substr(0, key->find(' '));
    std::size_t last_space = key->rfind(' ');
    std::string last = last_space == std::string::npos
                           ? *key
                           : key->substr(last_space + 1);
    CHECK(!norm().is_stopword(first));
    CHECK(!norm().is_stopword(last));
  }
}

TEST_CASE("token and raw paths agree when lemmas follow the plural rule") {
  std::mt19937 rng(45);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> plural(0, 1);
  for (int i = 0; i < 500; ++i) {
    int n = len(rng);
    std::vector<Token> span;
    std::string phrase;
    for (int t = 0; t < n; ++t) {
      std::string word = helpers::random_word(rng);
      std::string form = plural(rng) ? word + "s" : word;
      Token tok;
      tok.index = t + 1;
      tok.form = form;
      tok.lemma = Normalizer::singularize(form);
      tok.upos = UPos::NOUN;
      span.push_back(tok);
      if (!phrase.empty()) phrase.push_back(' ');
      phrase += form;
    }
    CHECK(norm().key_for_tokens(span) == norm().key_for_phrase(phrase));
  }
}

}  // TEST_SUITE
