#ifndef INVOLEX_PRESENTATION_HPP_
#define INVOLEX_PRESENTATION_HPP_

#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "involex/error.hpp"

namespace involex {

// Largest number of generators a presentation may declare.
inline constexpr std::size_t kMaxGenerators = 8;

// A word in free generators. Letter +k stands for generator k-1 and -k for
// its inverse; zero never occurs.
struct Word {
  std::vector<int> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
};

inline Word word_of(std::initializer_list<int> letters) { return Word{letters}; }

// Cancels adjacent pairs x x^-1 until none remain.
inline Word reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (int l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

inline Word word_inverse(const Word& w) {
  Word out;
  out.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (int& l : out.letters) l = -l;
  return out;
}

inline Word word_multiply(const Word& u, const Word& v) {
  Word cat = u;
  cat.letters.insert(cat.letters.end(), v.letters.begin(), v.letters.end());
  return reduce(cat);
}

inline Word word_power(const Word& w, long long k) {
  const Word base = k < 0 ? word_inverse(w) : w;
  Word out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
    out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
  }
  return reduce(out);
}

// [x,y] = x^-1 y^-1 x y
inline Word word_commutator(const Word& x, const Word& y) {
  Word out = word_inverse(x);
  const Word yi = word_inverse(y);
  out.letters.insert(out.letters.end(), yi.letters.begin(), yi.letters.end());
  out.letters.insert(out.letters.end(), x.letters.begin(), x.letters.end());
  out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
  return reduce(out);
}

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;  // freely reduced, never empty
  std::vector<std::string> warnings;

  std::size_t num_generators() const noexcept { return generator_names.size(); }

  // Warnings are diagnostics only and do not take part in comparison.
  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.generator_names == b.generator_names && a.relators == b.relators;
  }
};

// Renders a word as `g^k` runs joined by `*`; the empty word is `1`.
inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    const int gen = std::abs(w.letters[i]);
    long long exp = 0;
    while (i < w.letters.size() && std::abs(w.letters[i]) == gen) {
      exp += w.letters[i] > 0 ? 1 : -1;
      ++i;
    }
    if (exp == 0) continue;
    if (!out.empty()) out += '*';
    out += names[static_cast<std::size_t>(gen - 1)];
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generator_names.size(); ++i) {
    if (i) out += ',';
    out += p.generator_names[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators[i], p.generator_names);
  }
  out += '>';
  return out;
}

namespace detail {

// Recursive-descent parser for
//   presentation := "<" genlist "|" rellist ">"
//   relation     := word ("=" word)?
//   word         := factor ("*"? factor)*
//   factor       := (ident | "1" | "[" word "," word "]" | "(" word ")") ("^" int)?
// An identifier that is not a declared generator is split greedily into
// declared generator names, so `ab` reads as `a*b` when only a and b exist.
class PresentationParser {
 public:
  PresentationParser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  Presentation parse() {
    Presentation p;
    expect('<');
    for (;;) {
      skip_space();
      const std::size_t l = line_, c = column_;
      std::string name = ident();
      if (name.empty()) fail("expected generator name");
      for (const auto& existing : p.generator_names) {
        if (existing == name) throw ParseError("duplicate generator '" + name + "'", l, c);
      }
      p.generator_names.push_back(std::move(name));
      if (p.generator_names.size() > kMaxGenerators) {
        throw ParseError("at most " + std::to_string(kMaxGenerators) + " generators are supported", l, c);
      }
      if (!accept(',')) break;
    }
    names_ = &p.generator_names;
    if (accept('>')) return p;  // free group syntax with no relations
    expect('|');
    std::size_t index = 0;
    for (;;) {
      ++index;
      skip_space();
      if (peek() == '>' && index == 1) break;  // "<a | >"
      Word w = word();
      if (accept('=')) w = word_multiply(w, word_inverse(word()));
      w = reduce(w);
      if (w.empty()) {
        p.warnings.push_back("relation " + std::to_string(index) + " is trivial and was ignored");
      } else {
        p.relators.push_back(std::move(w));
      }
      if (!accept(',')) break;
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool accept(char ch) {
    skip_space();
    if (peek() == ch) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) {
      const char got = peek();
      fail(std::string("expected '") + ch + "' but found " +
           (got ? std::string("'") + got + "'" : std::string("end of input")));
    }
  }

  static bool ident_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }
  static bool ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  }

  std::string ident() {
    skip_space();
    std::string out;
    if (!ident_start(peek())) return out;
    while (ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  long long integer() {
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      advance();
    }
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail("exponent out of range");
      advance();
    }
    return negative ? -value : value;
  }

  // Letters for an identifier token, splitting into declared names if needed.
  Word resolve(const std::string& token, std::size_t l, std::size_t c) const {
    const auto& names = *names_;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == token) return Word{{static_cast<int>(i + 1)}};
    }
    Word out;
    std::size_t at = 0;
    while (at < token.size()) {
      std::size_t best = 0, best_len = 0;
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& n = names[i];
        if (n.size() > best_len && token.compare(at, n.size(), n) == 0) {
          best = i;
          best_len = n.size();
        }
      }
      if (best_len == 0) throw ParseError("undeclared generator '" + token + "'", l, c);
      out.letters.push_back(static_cast<int>(best + 1));
      at += best_len;
    }
    return out;
  }

  bool factor_start() {
    skip_space();
    const char ch = peek();
    return ident_start(ch) || ch == '[' || ch == '(' || ch == '1';
  }

  Word factor() {
    skip_space();
    const std::size_t l = line_, c = column_;
    Word base;
    bool split_ident = false;
    if (accept('[')) {
      Word x = word();
      expect(',');
      Word y = word();
      expect(']');
      base = word_commutator(x, y);
    } else if (accept('(')) {
      base = word();
      expect(')');
    } else if (peek() == '1') {
      advance();
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("unexpected integer in word");
    } else {
      base = resolve(ident(), l, c);
      split_ident = base.size() > 1;
    }
    if (!accept('^')) return base;
    const long long k = integer();
    if (split_ident) {
      // In `ab^2` the exponent binds to the last generator only.
      Word head{std::vector<int>(base.letters.begin(), base.letters.end() - 1)};
      return word_multiply(head, word_power(Word{{base.letters.back()}}, k));
    }
    return word_power(base, k);
  }

  Word word() {
    if (!factor_start()) fail("expected a word");
    Word out = factor();
    for (;;) {
      if (accept('*')) {
        out = word_multiply(out, factor());
      } else if (factor_start()) {
        out = word_multiply(out, factor());
      } else {
        return out;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace detail

// Parses `<gens | relations>`. `line` and `column` locate the first character
// of `text` for error messages when it is embedded in a larger file.
inline Presentation parse_presentation(std::string_view text, std::size_t line = 1,
                                       std::size_t column = 1) {
  return detail::PresentationParser(text, line, column).parse();
}

}  // namespace involex

#endif  // INVOLEX_PRESENTATION_HPP_
