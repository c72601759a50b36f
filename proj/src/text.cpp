#include "pqk/text.hpp"

#include <cctype>
#include <vector>

#include "pqk/error.hpp"

namespace pqk {
namespace {

// Whitespace-free view of the input that remembers original offsets.
struct Stripped {
  std::string chars;
  std::vector<std::size_t> origin;

  explicit Stripped(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i])) != 0) continue;
      chars.push_back(text[i]);
      origin.push_back(i);
    }
    origin.push_back(text.size());
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Paraquaternion parse() {
    if (s_.chars.empty()) fail("empty paraquaternion");
    Paraquaternion result;
    bool first = true;
    while (pos_ < s_.chars.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      Rational coef = 1;
      int basis = 0;
      if (peek() == 'i') {
        basis = parse_basis();
      } else {
        coef = parse_number();
        if (peek() == '*') {
          ++pos_;
          if (peek() != 'i') fail("expected basis element after '*'");
          basis = parse_basis();
        }
      }
      if (negative) coef = -coef;
      result[basis] += coef;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < s_.chars.size() ? s_.chars[pos_] : '\0'; }
  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, s_.origin[pos_]); }

  int parse_basis() {
    ++pos_;  // 'i'
    const char c = peek();
    if (c < '1' || c > '3') fail("unknown basis element");
    ++pos_;
    if (digit(peek())) {
      --pos_;
      fail("unknown basis element");
    }
    return c - '0';
  }

  Rational parse_number() {
    const std::size_t begin = pos_;
    while (digit(peek())) ++pos_;
    if (pos_ == begin) fail("expected number or basis element");
    std::string num = s_.chars.substr(begin, pos_ - begin);
    if (peek() != '/') return Rational(mpz_class(num, 10));
    ++pos_;
    const std::size_t den_begin = pos_;
    while (digit(peek())) ++pos_;
    if (pos_ == den_begin) fail("expected denominator");
    mpz_class den(s_.chars.substr(den_begin, pos_ - den_begin), 10);
    if (den == 0) {
      pos_ = den_begin;
      fail("zero denominator");
    }
    Rational q(mpz_class(num, 10), den);
    q.canonicalize();
    return q;
  }

  Stripped s_;
  std::size_t pos_ = 0;
};

}  // namespace

Paraquaternion parse_paraquaternion(std::string_view text) { return Parser(text).parse(); }

std::string format(const Paraquaternion& x) {
  static constexpr const char* kBasis[] = {"", "i1", "i2", "i3"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = x[k];
    if (c == 0) continue;
    std::string term;
    if (k == 0) {
      term = to_string(c);
    } else if (c == 1) {
      term = kBasis[k];
    } else if (c == -1) {
      term = std::string("-") + kBasis[k];
    } else {
      term = to_string(c) + "*" + kBasis[k];
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace pqk
