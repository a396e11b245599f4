#ifndef NCPROB_WORDS_HPP
#define NCPROB_WORDS_HPP

#include <initializer_list>
#include <string>
#include <vector>

namespace ncprob {

enum class Letter : char { One = '1', Star = '*' };

/// A word over the two-letter alphabet {1,*}. Words index the *-moments of a
/// distribution and the coefficients of a two-variable series. Immutable
/// value type; the string form uses the characters '1' and '*'.
///
/// The empty word is representable (it stands for the unit monomial, so that
/// moment maps can state mu(1)=1) but is rejected by the classifier and by
/// series indexing.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);  // validates characters

  static Word of(std::initializer_list<Letter> ls);
  /// (1,*)^m or (*,1)^m.
  static Word alternating(Letter first, int m);

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Letter at(std::size_t i) const { return static_cast<Letter>(s_[i]); }
  const std::string& str() const { return s_; }

  Word concat(const Word& o) const { return Word(s_ + o.s_, 0); }

  /// Graded ordering: by length first, then lexicographic. Gives a stable
  /// term order for series storage and serialization.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.s_.size() != b.s_.size()) return a.s_.size() < b.s_.size();
    return a.s_ < b.s_;
  }
  friend bool operator==(const Word& a, const Word& b) { return a.s_ == b.s_; }
  friend bool operator!=(const Word& a, const Word& b) { return a.s_ != b.s_; }

 private:
  Word(std::string s, int) : s_(std::move(s)) {}  // no validation
  std::string s_;
};

enum class WordClass { AlternatingOneStar, AlternatingStarOne, MixedAlternating, Other };

const char* to_string(WordClass c);

/// Most specific class of a non-empty word: alternating words report their
/// alternating type even though they are also mixed-alternating.
WordClass classify_word(const Word& w);

bool is_alternating(const Word& w);
bool is_mixed_alternating(const Word& w);  // includes alternating words

/// Unique factorization of a mixed-alternating word into alternating words
/// of alternating types; boundaries sit exactly where two consecutive equal
/// letters meet. Throws for words that are not mixed-alternating.
std::vector<Word> canonical_factorization(const Word& w);

/// w restricted to a sorted set of 1-based indices.
Word restrict_word(const Word& w, const std::vector<int>& indices);

/// All 2^n words of length n, in lexicographic order ('1' < '*').
std::vector<Word> all_words(int n);

}  // namespace ncprob

#endif
