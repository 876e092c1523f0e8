// Small fixture builders shared across the test suites.

#ifndef TERMEX_TESTS_HELPERS_HPP_
#define TERMEX_TESTS_HELPERS_HPP_

#include <random>
#include <string>
#include <vector>

#include "termex/corpus.hpp"
#include "termex/termlist.hpp"

namespace helpers {

struct Tok {
  std::string form;
  std::string lemma;
  std::string upos;
};

inline termex::Sentence make_sentence(std::string id,
                                      const std::vector<Tok>& toks) {
  termex::Sentence sent;
  sent.id = std::move(id);
  int index = 0;
  for (const Tok& t : toks) {
    termex::Token tok;
    tok.index = ++index;
    tok.form = t.form;
    tok.lemma = t.lemma.empty() ? termex::ascii_lower(t.form) : t.lemma;
    tok.upos = termex::upos_from_string(t.upos);
    sent.tokens.push_back(std::move(tok));
  }
  return sent;
}

// One document, one sentence per entry.
inline termex::Corpus make_corpus(
    const std::vector<std::vector<Tok>>& sentences) {
  termex::Corpus corpus;
  termex::Document doc;
  doc.id = "d1";
  int n = 0;
  for (const auto& toks : sentences)
    doc.sentences.push_back(make_sentence("d1-s" + std::to_string(++n), toks));
  corpus.documents.push_back(std::move(doc));
  return corpus;
}

inline termex::TermList make_list(const std::string& name,
                                  const std::vector<std::string>& keys) {
  termex::TermList list(name);
  for (const auto& key : keys) list.insert(key, key, name);
  return list;
}

// Deterministic vocabulary of plausible lowercase words.
inline std::string random_word(std::mt19937& rng) {
  static const char* kSyllables[] = {"tor", "cat",  "mon", "oid", "fun",
                                     "ad",  "junc", "sor", "gro", "up",
                                     "co",  "lim",  "she", "af",  "pre"};
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> pick(0, 14);
  std::string word;
  int n = count(rng);
  for (int i = 0; i < n; ++i) word += kSyllables[pick(rng)];
  return word;
}

inline std::vector<std::string> random_keys(std::mt19937& rng,
                                            std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::size_t n = len(rng);
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < n; ++i) keys.push_back(random_word(rng));
  return keys;
}

}  // namespace helpers

#endif  // TERMEX_TESTS_HELPERS_HPP_
