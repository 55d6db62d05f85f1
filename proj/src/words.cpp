#include "projrigid/words.hpp"

#include <cctype>
#include <cstdlib>

namespace projrigid {

Word reduce(Word w) {
    Word out;
    for (const Letter& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return reduce(std::move(w));
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

Word power(const Word& w, long long n) {
    Word base = n < 0 ? inverse(w) : w;
    long long count = n < 0 ? -n : n;
    Word out;
    for (long long k = 0; k < count; ++k) out = concat(out, base);
    return out;
}

std::vector<Letter> letters_of(const Word& w) {
    std::vector<Letter> out;
    for (const Letter& l : w) {
        long long step = l.exp > 0 ? 1 : -1;
        long long count = l.exp > 0 ? l.exp : -l.exp;
        for (long long k = 0; k < count; ++k) out.push_back({l.gen, step});
    }
    return out;
}

int Presentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] == name) return static_cast<int>(i);
    }
    throw ParseError("undeclared generator '" + name + "'");
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos == text.size()) throw ParseError("empty word (write '1' for the identity)");
    if (text[pos] == '1') {
        ++pos;
        skip_ws(text, pos);
        if (pos != text.size())
            throw ParseError("unexpected input after identity word at position " + std::to_string(pos));
        return {};
    }
    Word w;
    while (true) {
        skip_ws(text, pos);
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected generator name at position " + std::to_string(start));
        std::string name = text.substr(start, pos - start);
        int gen = -1;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (generators[i] == name) {
                gen = static_cast<int>(i);
                break;
            }
        }
        if (gen < 0) throw ParseError("undeclared generator '" + name + "' in word");
        long long exp = 1;
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws(text, pos);
            std::size_t estart = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == estart || (pos == estart + 1 && !std::isdigit(static_cast<unsigned char>(text[estart]))))
                throw ParseError("expected integer exponent at position " + std::to_string(estart));
            exp = std::strtoll(text.substr(estart, pos - estart).c_str(), nullptr, 10);
        }
        w.push_back({gen, exp});
        skip_ws(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != '*')
            throw ParseError("expected '*' between syllables at position " + std::to_string(pos));
        ++pos;
    }
    return reduce(std::move(w));
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generators) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += generators.at(static_cast<std::size_t>(w[i].gen));
        if (w[i].exp != 1) out += "^" + std::to_string(w[i].exp);
    }
    return out;
}

void GroupRingElement::add(const Word& w, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement fox_derivative(const Word& w, int gen) {
    GroupRingElement out;
    Word prefix;
    for (const Letter& l : w) {
        if (l.gen == gen) {
            if (l.exp > 0) {
                // d(g^e) = sum_{k=0}^{e-1} g^k, translated by the prefix.
                for (long long k = 0; k < l.exp; ++k) {
                    out.add(concat(prefix, Word{{l.gen, k}}), 1);
                }
            } else {
                // d(g^-e') = -sum_{k=1}^{e'} g^-k, translated by the prefix.
                for (long long k = 1; k <= -l.exp; ++k) {
                    out.add(concat(prefix, Word{{l.gen, -k}}), -1);
                }
            }
        }
        prefix = concat(prefix, Word{l});
    }
    return out;
}

}  // namespace projrigid
