#include "equisym/text.hpp"

#include <cctype>
#include <numeric>

#include "equisym/errors.hpp"

namespace equisym::text {

unsigned infer_conductor(const std::string& s, unsigned hint) {
  unsigned m = hint ? hint : 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'z' || i + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 1]))) continue;
    std::size_t j = i + 1;
    unsigned k = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
      k = k * 10 + static_cast<unsigned>(s[j] - '0');
      if (k > 100000) throw ParseError("root of unity index too large", i);
      ++j;
    }
    if (k == 0) throw ParseError("zeta index must be positive", i);
    m = std::lcm(m, k);
    i = j - 1;
  }
  return m;
}

namespace {

class Parser {
 public:
  // zeta_mode: a bare 'z' denotes the field generator instead of a variable.
  Parser(const std::string& s, const CycField& F, int nvars, bool zeta_mode)
      : s_(s), F_(F), nvars_(nvars), zeta_mode_(zeta_mode) {}

  MPoly expr() {
    skip();
    MPoly r = term();
    for (;;) {
      skip();
      if (at('+')) {
        ++pos_;
        r += term();
      } else if (at('-')) {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }
  void expect(char c) {
    skip();
    if (!at(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, pos_); }

 private:
  bool starts_atom() const {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' || c == 'z';
  }

  MPoly term() {
    MPoly r = unary();
    for (;;) {
      skip();
      if (at('*')) {
        ++pos_;
        r = r * unary();
      } else if (at('/')) {
        std::size_t p = ++pos_;
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", p);
        r = r * d.leading_coeff().inverse();
      } else if (starts_atom()) {
        r = r * unary();
      } else {
        return r;
      }
    }
  }

  MPoly unary() {
    skip();
    if (at('-')) {
      ++pos_;
      return -unary();
    }
    if (at('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly b = atom();
    skip();
    if (at('^')) {
      ++pos_;
      skip();
      bool neg = false;
      if (at('-')) {
        neg = true;
        ++pos_;
      }
      std::size_t p = pos_;
      long e = integer();
      if (neg) {
        if (!b.is_constant() || b.is_zero()) throw ParseError("negative power of a non-constant", p);
        return MPoly::constant(b.leading_coeff().pow(-e), nvars_);
      }
      if (e > 10000) throw ParseError("exponent too large", p);
      return b.pow(static_cast<int>(e));
    }
    return b;
  }

  long integer() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) error("integer too large");
      ++pos_;
    }
    return v;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(st, pos_ - st));
      return MPoly::constant(F_.from_rational(Rational(v)), nvars_);
    }
    if (c == 'z' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      std::size_t st = pos_++;
      long k = integer();
      try {
        return MPoly::constant(F_.root_of_unity(static_cast<unsigned>(k), 1), nvars_);
      } catch (const DomainError&) {
        throw ParseError("zeta_" + std::to_string(k) + " is not in the working field", st);
      }
    }
    if (c == 'z' && zeta_mode_) {
      ++pos_;
      return MPoly::constant(F_.gen(), nvars_);
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      int i = c - 'x';
      if (i >= nvars_) error(std::string("variable ") + c + " not allowed with " + std::to_string(nvars_) + " variables");
      ++pos_;
      return MPoly::var(F_, nvars_, i);
    }
    error(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  CycField F_;
  int nvars_;
  bool zeta_mode_;
  std::size_t pos_ = 0;
};

// Splits at top-level separators; returns (offset, piece) pairs.
std::vector<std::pair<std::size_t, std::string>> split_top(const std::string& s, std::size_t begin, std::size_t end,
                                                           const std::string& seps) {
  std::vector<std::pair<std::size_t, std::string>> out;
  int depth = 0;
  std::size_t st = begin;
  for (std::size_t i = begin; i < end; ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && seps.find(c) != std::string::npos) {
      out.emplace_back(st, s.substr(st, i - st));
      st = i + 1;
    }
  }
  out.emplace_back(st, s.substr(st, end - st));
  return out;
}

MPoly parse_piece(const std::string& piece, std::size_t offset, const CycField& F, int nvars, bool zeta_mode) {
  Parser p(piece, F, nvars, zeta_mode);
  try {
    if (p.done()) throw ParseError("empty expression", 0);
    MPoly r = p.expr();
    if (!p.done()) throw ParseError("trailing input", p.pos());
    return r;
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at byte")), offset + e.offset());
  }
}

std::pair<std::size_t, std::size_t> strip_brackets(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (b >= e) throw ParseError("empty input", 0);
  char open = s[b], close = s[e - 1];
  if (!((open == '[' && close == ']') || (open == '(' && close == ')'))) throw ParseError("expected a bracketed tuple", b);
  return {b + 1, e - 1};
}

}  // namespace

MPoly parse_poly(const std::string& s, const CycField& F, int nvars) { return parse_piece(s, 0, F, nvars, false); }

std::vector<MPoly> parse_tuple(const std::string& s, const CycField& F) {
  auto [b, e] = strip_brackets(s);
  auto pieces = split_top(s, b, e, ",:");
  int n = static_cast<int>(pieces.size());
  if (n < 2 || n > 3) throw ParseError("a map needs 2 or 3 coordinates", b);
  std::vector<MPoly> out;
  for (const auto& [off, piece] : pieces) out.push_back(parse_piece(piece, off, F, n, false));
  return out;
}

FMatrix parse_matrix(const std::string& s, const CycField& F) {
  auto [b, e] = strip_brackets(s);
  auto rows = split_top(s, b, e, ",");
  int n = static_cast<int>(rows.size());
  std::vector<CycNum> entries;
  for (const auto& [off, row] : rows) {
    auto [rb, re] = strip_brackets(row);
    auto cells = split_top(row, rb, re, ",");
    if (static_cast<int>(cells.size()) != n) throw ParseError("matrix must be square", off);
    for (const auto& [coff, cell] : cells) {
      MPoly v = parse_piece(cell, off + coff, F, 3, false);
      if (!v.is_constant()) throw ParseError("matrix entries must be constants", off + coff);
      entries.push_back(v.is_zero() ? F.zero() : v.leading_coeff());
    }
  }
  return FMatrix(F, n, entries);
}

CycNum parse_cyc(const std::string& s, const CycField& F) {
  MPoly v = parse_piece(s, 0, F, 3, true);
  return v.is_zero() ? F.zero() : v.leading_coeff();
}

std::string tuple_to_string(const std::vector<MPoly>& f) {
  std::string r = "[";
  for (std::size_t i = 0; i < f.size(); ++i) r += (i ? ", " : "") + f[i].to_string();
  return r + "]";
}

}  // namespace equisym::text
