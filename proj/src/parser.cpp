#include "helixlab/parser.hpp"

#include <cctype>

namespace helixlab {

Variety parse_variety(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'P' && s[0] != 'Q'))
    throw std::invalid_argument("variety must look like P3 or Q5: " + s);
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("variety must look like P3 or Q5: " + s);
  int n = 0;
  try {
    n = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("variety dimension out of range: " + s);
  }
  return s[0] == 'P' ? Variety::projective(n) : Variety::quadric(n);
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Variety& v) : s_(text), v_(v) {}

  Expr run() {
    Expr acc = zero_expr(v_);
    skip_ws();
    acc = direct_sum(acc, term());
    skip_ws();
    while (pos_ < s_.size()) {
      expect('+');
      skip_ws();
      acc = direct_sum(acc, term());
      skip_ws();
    }
    return acc;
  }

 private:
  const std::string& s_;
  const Variety& v_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek_digit() const {
    return pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool try_word(const char* w) {
    size_t len = std::char_traits<char>::length(w);
    if (s_.compare(pos_, len, w) != 0) return false;
    pos_ += len;
    return true;
  }

  Int digits() {
    if (!peek_digit()) fail("expected a number");
    Int v = 0;
    while (peek_digit()) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  long long small_int(const char* what) {
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    Int v = digits();
    if (v > kTwistCap) fail(std::string(what) + " out of range");
    long long r = v.convert_to<long long>();
    return neg ? -r : r;
  }

  // '(' int ')' if present, else 0.
  long long opt_twist() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '(') return 0;
    ++pos_;
    skip_ws();
    long long t = small_int("twist");
    skip_ws();
    expect(')');
    return t;
  }

  Expr term() {
    skip_ws();
    Int mult = 1;
    if (peek_digit()) {
      Int v = digits();
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (v <= 0) fail("multiplicity must be positive");
        mult = v;
      } else if (v == 0) {
        return zero_expr(v_);  // bare 0 = zero sheaf
      } else {
        fail("expected '*' after multiplicity");
      }
    }
    // longest spellings first so 'Omega' is not read as 'O'. The index must
    // be read before the twist, so keep the calls explicitly sequenced.
    if (try_word("Omega^")) return indexed(AtomKind::Omega, mult);
    if (try_word("wT^")) return indexed(AtomKind::WedgeT, mult);
    if (try_word("psidual_")) return indexed(AtomKind::PsiDual, mult);
    if (try_word("psi_")) return indexed(AtomKind::Psi, mult);
    if (try_word("Sigma"))
      return atom_expr(v_, AtomKind::Sigma, 0, opt_twist(), mult);
    if (try_word("O"))
      return atom_expr(v_, AtomKind::Structure, 0, opt_twist(), mult);
    fail("expected an atom");
  }

  Expr indexed(AtomKind kind, const Int& mult) {
    Int v = digits();
    if (v > kTwistCap) fail("atom index out of range");
    long long p = v.convert_to<long long>();
    long long t = opt_twist();
    return atom_expr(v_, kind, p, t, mult);
  }
};

}  // namespace

Expr parse_sheaf_expr(const std::string& text, const Variety& v) {
  return Parser(text, v).run();
}

}  // namespace helixlab
