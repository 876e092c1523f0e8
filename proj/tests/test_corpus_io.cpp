#include <string>

#include "doctest.h"
#include "termex/raw_corpus.hpp"

using termex::load_raw_documents;
using termex::ParseError;

TEST_SUITE("corpus_io") {

TEST_CASE("record splits into sentences at period-space-capital") {
  auto result = load_raw_documents(
      R"({"id":"a1","text":"We define torsors. We prove things.","keywords":["torsor"]})"
      "\n");
  REQUIRE(result.corpus.documents.size() == 1);
  const auto& doc = result.corpus.documents[0];
  CHECK(doc.id == "a1");
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[0].id == "a1-s1");
  CHECK(doc.author_keywords == std::vector<std::string>{"torsor"});
  // "We define torsors ." with the period split off.
  REQUIRE(doc.sentences[0].tokens.size() == 4);
  CHECK(doc.sentences[0].tokens[2].form == "torsors");
  CHECK(doc.sentences[0].tokens[2].lemma == "torsors");
  CHECK(doc.sentences[0].tokens[3].form == ".");
  CHECK(doc.sentences[0].tokens[3].upos == termex::UPos::PUNCT);
}

TEST_CASE("abbreviation-like periods do not split") {
  auto result = load_raw_documents(
      R"({"id":"a1","text":"Results are due to Smith. we extend them."})"
      "\n");
  // Lowercase after the period, so no boundary.
  CHECK(result.corpus.documents[0].sentences.size() == 1);
}

TEST_CASE("missing text field is an error naming the field") {
  CHECK_THROWS_WITH_AS(load_raw_documents(R"({"id":"a1"})" "\n"),
                       "line 1: missing string field 'text'", ParseError);
}

TEST_CASE("malformed JSON names the record") {
  CHECK_THROWS_WITH_AS(load_raw_documents("{oops\n"),
                       "line 1: malformed JSON record", ParseError);
}

TEST_CASE("empty input gives an empty corpus") {
  CHECK(load_raw_documents("").corpus.documents.empty());
  CHECK(load_raw_documents("\n\n").corpus.documents.empty());
}

TEST_CASE("duplicate record ids are rejected") {
  const char* two =
      "{\"id\":\"a1\",\"text\":\"One.\"}\n"
      "{\"id\":\"a1\",\"text\":\"Two.\"}\n";
  CHECK_THROWS_AS(load_raw_documents(two), ParseError);
}

TEST_CASE("markup is cleaned before segmentation") {
  auto result = load_raw_documents(
      R"({"id":"a1","text":"Let $x$ be given. We conclude."})"
      "\n");
  const auto& doc = result.corpus.documents[0];
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[0].tokens[0].form == "Let");
  CHECK(doc.sentences[0].tokens[1].form == "be");
}

TEST_CASE("math placeholders never split sentences") {
  termex::CleanOptions opts;
  opts.math = termex::MathMode::Placeholder;
  auto result = load_raw_documents(
      R"({"id":"a1","text":"We fix $x. Y$ and proceed. Then we stop."})"
      "\n",
      opts);
  const auto& doc = result.corpus.documents[0];
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[0].tokens[2].form == "MATH");
}

}  // TEST_SUITE
