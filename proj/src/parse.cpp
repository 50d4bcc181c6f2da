#include "uqlat/parse.hpp"

#include <cctype>
#include <optional>

namespace uqlat {

namespace {

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, size_t pos) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, cur_.pos); }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= text_.size()) {
      cur_ = {Token::Kind::End, "", i_};
      return;
    }
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      cur_ = {Token::Kind::Number, text_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < text_.size() && std::isalnum(static_cast<unsigned char>(text_[j]))) ++j;
      cur_ = {Token::Kind::Ident, text_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    static const std::string symbols = "+-*^()[],/";
    if (symbols.find(c) == std::string::npos)
      fail(std::string("unexpected character '") + c + "'", i_);
    cur_ = {Token::Kind::Symbol, std::string(1, c), i_};
    ++i_;
  }

  const std::string& text_;
  size_t i_ = 0;
  Token cur_;
};

// Shared recursive-descent driver; Algebra supplies the value type and the
// atom/arithmetic hooks.
template <class Algebra>
class Parser {
 public:
  Parser(const std::string& text, Algebra& alg) : lex_(text), alg_(alg) {}

  typename Algebra::Value run() {
    auto v = expr();
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("trailing input");
    return v;
  }

 private:
  using Value = typename Algebra::Value;

  bool is_symbol(const char* s) const {
    return lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == s;
  }

  void expect_symbol(const char* s) {
    if (!is_symbol(s)) lex_.fail(std::string("expected '") + s + "'");
    lex_.take();
  }

  Value expr() {
    Value v = term();
    while (is_symbol("+") || is_symbol("-")) {
      bool plus = lex_.peek().text == "+";
      lex_.take();
      Value rhs = term();
      v = plus ? alg_.add(v, rhs) : alg_.sub(v, rhs);
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (is_symbol("*")) {
      lex_.take();
      v = alg_.mul(v, factor());
    }
    return v;
  }

  long integer() {
    bool neg = false;
    bool paren = false;
    if (is_symbol("(")) {
      lex_.take();
      paren = true;
    }
    if (is_symbol("-")) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind != Token::Kind::Number) lex_.fail("expected an integer");
    long v = std::stol(lex_.take().text);
    if (paren) expect_symbol(")");
    return neg ? -v : v;
  }

  Value factor() {
    Value v = atom();
    if (is_symbol("^")) {
      size_t pos = lex_.peek().pos;
      lex_.take();
      v = alg_.pow(v, integer(), pos);
    }
    return v;
  }

  Value atom() {
    const Token& t = lex_.peek();
    if (is_symbol("-")) {
      lex_.take();
      return alg_.negate(atom());
    }
    if (is_symbol("(")) {
      lex_.take();
      Value v = expr();
      expect_symbol(")");
      return v;
    }
    if (t.kind == Token::Kind::Number) {
      Token num = lex_.take();
      if (is_symbol("/")) {
        lex_.take();
        if (lex_.peek().kind != Token::Kind::Number) lex_.fail("expected a denominator");
        Token den = lex_.take();
        return alg_.from_scalar(
            Scalar(mpq_class(mpz_class(num.text), mpz_class(den.text))));
      }
      return alg_.from_scalar(Scalar(mpz_class(num.text)));
    }
    if (t.kind == Token::Kind::Ident) {
      Token id = lex_.take();
      if (id.text == "K") {
        expect_symbol("[");
        std::vector<int> coords;
        coords.push_back(static_cast<int>(integer()));
        while (is_symbol(",")) {
          lex_.take();
          coords.push_back(static_cast<int>(integer()));
        }
        expect_symbol("]");
        return alg_.atom_k(std::move(coords), id.pos);
      }
      return alg_.atom_ident(id.text, id.pos);
    }
    lex_.fail("expected an atom");
  }

  Lexer lex_;
  Algebra& alg_;
};

struct UqAlgebra {
  using Value = WordElement;
  const RootSystem& rs;
  const QSpec& spec;

  [[noreturn]] void fail(const std::string& msg, size_t pos) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  Value from_scalar(const Scalar& c) const { return WordElement::single(Word{}, c); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value negate(const Value& a) const { return a.scaled(Scalar(-1)); }

  std::optional<Scalar> as_scalar(const Value& v) const {
    if (v.is_zero()) return Scalar(0);
    if (v.terms.size() == 1 && v.terms.begin()->first.empty()) return v.terms.begin()->second;
    return std::nullopt;
  }

  Value pow(const Value& v, long e, size_t pos) const {
    if (auto c = as_scalar(v)) return from_scalar(c->pow(e));
    // single K letter: K[lam]^e = K[e*lam]
    if (v.terms.size() == 1 && v.terms.begin()->first.size() == 1 &&
        v.terms.begin()->first[0].kind == Letter::Kind::K) {
      const auto& [w, c] = *v.terms.begin();
      return WordElement::single({Letter::k(w[0].lam.scaled(static_cast<int>(e)))}, c.pow(e));
    }
    if (e < 0) fail("negative exponent is only valid for scalars and K", pos);
    Value r = WordElement::one();
    for (long k = 0; k < e; ++k) r = r * v;
    return r;
  }

  Value atom_k(std::vector<int> coords, size_t pos) const {
    if (static_cast<int>(coords.size()) != rs.rank)
      fail("K needs exactly " + std::to_string(rs.rank) + " coordinates", pos);
    return WordElement::single({Letter::k(Weight(std::move(coords)))});
  }

  Value atom_ident(const std::string& name, size_t pos) const {
    if (name == "q") return from_scalar(spec.q);
    if (name == "qq") return from_scalar(spec.qprime);
    if (name.size() >= 2 && (name[0] == 'E' || name[0] == 'F')) {
      for (size_t k = 1; k < name.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(name[k])))
          fail("unknown identifier '" + name + "'", pos);
      int idx = std::stoi(name.substr(1));
      if (idx < 1 || idx > rs.rank)
        fail("generator index " + std::to_string(idx) + " out of range 1.." +
                 std::to_string(rs.rank),
             pos);
      return WordElement::single({name[0] == 'E' ? Letter::e(idx) : Letter::f(idx)});
    }
    fail("unknown identifier '" + name + "'", pos);
  }
};

struct OqAlgebra {
  using Value = OqElement;
  const QSpec& spec;

  [[noreturn]] void fail(const std::string& msg, size_t pos) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  Value from_scalar(const Scalar& c) const { return OqElement::single(OqMonomial::one(), c); }
  Value add(Value a, const Value& b) const { return a += b; }
  Value sub(Value a, const Value& b) const { return a -= b; }
  Value mul(const Value& a, const Value& b) const { return oq_multiply(spec, a, b); }
  Value negate(const Value& a) const { return a.scaled(Scalar(-1)); }

  std::optional<Scalar> as_scalar(const Value& v) const {
    if (v.is_zero()) return Scalar(0);
    if (v.terms.size() == 1 && v.terms.begin()->first.degree() == 0)
      return v.terms.begin()->second;
    return std::nullopt;
  }

  Value pow(const Value& v, long e, size_t pos) const {
    if (auto c = as_scalar(v)) return from_scalar(c->pow(e));
    if (e < 0) fail("negative exponent is only valid for scalars", pos);
    Value r = OqElement::one();
    for (long k = 0; k < e; ++k) r = oq_multiply(spec, r, v);
    return r;
  }

  Value atom_k(std::vector<int>, size_t pos) const {
    fail("K is not a coordinate-ring generator", pos);
  }

  Value atom_ident(const std::string& name, size_t pos) const {
    if (name == "q") return from_scalar(spec.q);
    if (name == "qq") return from_scalar(spec.qprime);
    if (name.size() == 1 && std::string("abcd").find(name[0]) != std::string::npos)
      return oq_normal_form(spec, name);
    fail("unknown identifier '" + name + "'", pos);
  }
};

}  // namespace

WordElement parse_uq_expression(const std::string& text, const RootSystem& rs,
                                const QSpec& spec) {
  UqAlgebra alg{rs, spec};
  Parser<UqAlgebra> p(text, alg);
  return p.run();
}

OqElement parse_oq_expression(const std::string& text, const QSpec& spec) {
  OqAlgebra alg{spec};
  Parser<OqAlgebra> p(text, alg);
  return p.run();
}

}  // namespace uqlat
