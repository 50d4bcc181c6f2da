#include "uqlat/word.hpp"

#include <sstream>

namespace uqlat {

std::string Letter::str() const {
  switch (kind) {
    case Kind::E:
      return "E" + std::to_string(idx);
    case Kind::F:
      return "F" + std::to_string(idx);
    case Kind::K: {
      std::string s = "K[";
      for (int k = 0; k < lam.rank(); ++k) {
        if (k) s += ",";
        s += std::to_string(lam.c[k]);
      }
      return s + "]";
    }
  }
  return "?";
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += w[k].str();
  }
  return s;
}

WordElement WordElement::single(Word w, Scalar c) {
  WordElement r;
  if (!c.is_zero()) r.terms.emplace(std::move(w), std::move(c));
  return r;
}

WordElement& WordElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

WordElement& WordElement::operator+=(const WordElement& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

WordElement& WordElement::operator-=(const WordElement& o) {
  for (const auto& [w, c] : o.terms) add_term(w, -c);
  return *this;
}

WordElement WordElement::scaled(const Scalar& c) const {
  WordElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, coeff] : terms) r.terms.emplace(w, coeff * c);
  return r;
}

WordElement operator+(WordElement a, const WordElement& b) { return a += b; }
WordElement operator-(WordElement a, const WordElement& b) { return a -= b; }

WordElement operator*(const WordElement& a, const WordElement& b) {
  WordElement r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

WordElement omega_words(const WordElement& x) {
  WordElement r;
  for (const auto& [w, c] : x.terms) {
    Word img;
    img.reserve(w.size());
    for (const Letter& l : w) {
      switch (l.kind) {
        case Letter::Kind::E:
          img.push_back(Letter::f(l.idx));
          break;
        case Letter::Kind::F:
          img.push_back(Letter::e(l.idx));
          break;
        case Letter::Kind::K:
          img.push_back(Letter::k(-l.lam));
          break;
      }
    }
    r.add_term(img, c);
  }
  return r;
}

std::string to_expression(const WordElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (const Letter& l : w) os << "*" << l.str();
  }
  return os.str();
}

}  // namespace uqlat
