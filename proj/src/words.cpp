#include "ncprob/words.hpp"

#include <stdexcept>

namespace ncprob {

Word::Word(std::string letters) : s_(std::move(letters)) {
  for (char c : s_) {
    if (c != '1' && c != '*') {
      throw std::invalid_argument("word letters must be '1' or '*', got '" +
                                  std::string(1, c) + "'");
    }
  }
}

Word Word::of(std::initializer_list<Letter> ls) {
  std::string s;
  s.reserve(ls.size());
  for (Letter l : ls) s.push_back(static_cast<char>(l));
  return Word(std::move(s), 0);
}

Word Word::alternating(Letter first, int m) {
  if (m <= 0) throw std::invalid_argument("alternating word needs m >= 1");
  Letter second = first == Letter::One ? Letter::Star : Letter::One;
  std::string s;
  s.reserve(2 * static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    s.push_back(static_cast<char>(first));
    s.push_back(static_cast<char>(second));
  }
  return Word(std::move(s), 0);
}

const char* to_string(WordClass c) {
  switch (c) {
    case WordClass::AlternatingOneStar: return "AlternatingOneStar";
    case WordClass::AlternatingStarOne: return "AlternatingStarOne";
    case WordClass::MixedAlternating: return "MixedAlternating";
    case WordClass::Other: return "Other";
  }
  return "?";
}

WordClass classify_word(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("empty word has no class");
  if (n % 2 != 0) return WordClass::Other;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    if (w.at(k) == w.at(k + 1)) return WordClass::Other;
  }
  // Mixed-alternating; alternating iff no doubled letter at pair junctions.
  bool alternating = true;
  for (std::size_t k = 1; k + 1 < n; k += 2) {
    if (w.at(k) == w.at(k + 1)) {
      alternating = false;
      break;
    }
  }
  if (!alternating) return WordClass::MixedAlternating;
  return w.at(0) == Letter::One ? WordClass::AlternatingOneStar
                                : WordClass::AlternatingStarOne;
}

bool is_alternating(const Word& w) {
  if (w.empty()) return false;
  WordClass c = classify_word(w);
  return c == WordClass::AlternatingOneStar || c == WordClass::AlternatingStarOne;
}

bool is_mixed_alternating(const Word& w) {
  if (w.empty()) return false;
  WordClass c = classify_word(w);
  return c != WordClass::Other;
}

std::vector<Word> canonical_factorization(const Word& w) {
  if (!is_mixed_alternating(w)) {
    throw std::invalid_argument("not factorable: word is not mixed-alternating");
  }
  std::vector<Word> factors;
  std::size_t start = 0;
  for (std::size_t k = 1; k + 1 < w.size(); k += 2) {
    if (w.at(k) == w.at(k + 1)) {
      factors.push_back(Word(w.str().substr(start, k + 1 - start)));
      start = k + 1;
    }
  }
  factors.push_back(Word(w.str().substr(start)));
  return factors;
}

Word restrict_word(const Word& w, const std::vector<int>& indices) {
  if (indices.empty()) throw std::invalid_argument("restriction set must be nonempty");
  std::string s;
  s.reserve(indices.size());
  int prev = 0;
  for (int i : indices) {
    if (i < 1 || static_cast<std::size_t>(i) > w.size()) {
      throw std::invalid_argument("restriction index out of range");
    }
    if (i <= prev) throw std::invalid_argument("restriction indices must be increasing");
    prev = i;
    s.push_back(static_cast<char>(w.at(static_cast<std::size_t>(i - 1))));
  }
  return Word(std::move(s));
}

std::vector<Word> all_words(int n) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  std::string s(static_cast<std::size_t>(n), '1');
  // counting in binary, '1' -> '*'
  for (;;) {
    out.push_back(Word(s));
    int k = n - 1;
    while (k >= 0 && s[static_cast<std::size_t>(k)] == '*') {
      s[static_cast<std::size_t>(k)] = '1';
      --k;
    }
    if (k < 0) break;
    s[static_cast<std::size_t>(k)] = '*';
  }
  return out;
}

}  // namespace ncprob
