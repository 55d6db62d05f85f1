#pragma once

#include "projrigid/field.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace projrigid {

// One syllable g^exp of a word in power form; exp is never 0 in a reduced word.
struct Letter {
    int gen = 0;
    long long exp = 0;
    auto operator<=>(const Letter&) const = default;
};

// Freely reduced word: adjacent syllables always have distinct generators.
using Word = std::vector<Letter>;

Word reduce(Word w);
Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);
Word power(const Word& w, long long n);
// Expansion into single-letter syllables (exponents +1/-1), in order.
std::vector<Letter> letters_of(const Word& w);

struct Cusp {
    Word meridian;
    Word longitude;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::vector<Cusp> cusps;
    bool aspherical = false;

    int generator_index(const std::string& name) const;
    std::size_t cusp_count() const { return cusps.size(); }
};

// Grammar: word := '1' | syllable ('*' syllable)*, syllable := name ('^' int)?.
// Whitespace around tokens is ignored; names must be declared generators.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);
std::string word_to_string(const Word& w, const std::vector<std::string>& generators);

// Integer group-ring element sum_w coeff(w) * w over the free group.
class GroupRingElement {
  public:
    void add(const Word& w, long long coeff);
    const std::map<Word, long long>& terms() const { return terms_; }
    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

  private:
    std::map<Word, long long> terms_;
};

// Fox derivative of w with respect to generator `gen`, satisfying the product
// rule d(uv) = d(u) + u d(v) and d(g^-1) = -g^-1 d(g).
GroupRingElement fox_derivative(const Word& w, int gen);

}  // namespace projrigid
