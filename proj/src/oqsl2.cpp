#include "uqlat/oqsl2.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace uqlat {

std::string OqMonomial::str() const {
  if (degree() == 0) return "1";
  std::ostringstream os;
  bool first = true;
  auto put = [&](char g, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << g;
    if (e > 1) os << "^" << e;
  };
  put('a', l);
  put('b', m);
  put('c', s);
  put('d', t);
  return os.str();
}

OqElement OqElement::single(OqMonomial mono, Scalar c) {
  OqElement r;
  r.add_term(mono, c);
  return r;
}

OqElement& OqElement::add_term(const OqMonomial& mono, const Scalar& c) {
  if (!mono.valid()) throw InvariantViolation("OqElement: monomial outside the basis");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

OqElement& OqElement::operator+=(const OqElement& o) {
  for (const auto& [mono, c] : o.terms) add_term(mono, c);
  return *this;
}

OqElement& OqElement::operator-=(const OqElement& o) {
  for (const auto& [mono, c] : o.terms) add_term(mono, -c);
  return *this;
}

OqElement OqElement::scaled(const Scalar& c) const {
  OqElement r;
  if (c.is_zero()) return r;
  for (const auto& [mono, coeff] : terms) r.terms.emplace(mono, coeff * c);
  return r;
}

std::string OqElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << mono.str();
  }
  return os.str();
}

OqTensor& OqTensor::add_term(const OqMonomial& a, const OqMonomial& b, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto key = std::make_pair(a, b);
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

// ---------------------------------------------------------------------------
// Normal form: multiply letters onto basis monomials left to right.
// ba = q^{-1}ab, ca = q^{-1}ac, cb = bc, db = q^{-1}bd, dc = q^{-1}cd,
// ad = 1 + q bc, da = 1 + q^{-1} bc.

namespace {

void mul_letter(const QSpec& spec, const OqMonomial& mono, char g, OqElement& out,
                const Scalar& coeff) {
  const Scalar& q = spec.q;
  switch (g) {
    case 'a': {
      if (mono.t == 0) {
        // a^l b^m c^s * a = q^{-m-s} a^{l+1} b^m c^s
        OqMonomial r = mono;
        r.l += 1;
        out.add_term(r, coeff * q.pow(-(mono.m + mono.s)));
      } else {
        // b^m c^s d^t * a = b^m c^s d^{t-1} (da), da = 1 + q^{-1} bc,
        // and bc commutes past d^{t-1} at q^{-2(t-1)}
        OqMonomial drop = mono;
        drop.t -= 1;
        out.add_term(drop, coeff);
        OqMonomial bcterm = drop;
        bcterm.m += 1;
        bcterm.s += 1;
        out.add_term(bcterm, coeff * q.pow(-1 - 2 * (mono.t - 1)));
      }
      return;
    }
    case 'b': {
      OqMonomial r = mono;
      r.m += 1;
      out.add_term(r, coeff * q.pow(-mono.t));  // b past d^t
      return;
    }
    case 'c': {
      OqMonomial r = mono;
      r.s += 1;
      out.add_term(r, coeff * q.pow(-mono.t));  // c past d^t
      return;
    }
    case 'd': {
      if (mono.l == 0) {
        OqMonomial r = mono;
        r.t += 1;
        out.add_term(r, coeff);
      } else {
        // a^l b^m c^s * d = q^{m+s} a^{l-1} (ad) b^m c^s, ad = 1 + q bc
        OqMonomial drop = mono;
        drop.l -= 1;
        Scalar base = coeff * q.pow(mono.m + mono.s);
        out.add_term(drop, base);
        OqMonomial bcterm = drop;
        bcterm.m += 1;
        bcterm.s += 1;
        out.add_term(bcterm, base * q);
      }
      return;
    }
    default:
      throw std::invalid_argument(std::string("O_q word: unknown letter '") + g + "'");
  }
}

}  // namespace

OqElement oq_normal_form(const QSpec& spec, const OqWord& word) {
  OqElement cur = OqElement::one();
  for (char g : word) {
    OqElement next;
    for (const auto& [mono, c] : cur.terms) mul_letter(spec, mono, g, next, c);
    cur = std::move(next);
  }
  return cur;
}

// Local rewriting on raw words. Redexes: the five sorting swaps, adjacent
// ad/da elimination, and -- only while both a and d are present -- the
// bd -> q db / cd -> q dc moves that carry a d leftwards towards an a.
OqElement oq_normal_form_local(const QSpec& spec, const OqWord& word, Rng* rng) {
  const Scalar& q = spec.q;
  OqElement out;
  struct Item {
    Scalar c;
    OqWord w;
  };
  std::vector<Item> stack{{Scalar(1), word}};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const OqWord& w = item.w;

    struct Redex {
      size_t pos;
      int kind;  // 0: plain swap, 1: ad, 2: da, 3: anti-move (bd/cd with a to the left)
      Scalar factor;
    };
    std::vector<Redex> redexes;
    bool has_a = w.find('a') != OqWord::npos;
    bool has_d = w.find('d') != OqWord::npos;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      char x = w[k], y = w[k + 1];
      if ((x == 'b' && y == 'a') || (x == 'c' && y == 'a') || (x == 'd' && y == 'b') ||
          (x == 'd' && y == 'c'))
        redexes.push_back({k, 0, q.inverse()});
      else if (x == 'c' && y == 'b')
        redexes.push_back({k, 0, Scalar(1)});
      else if (x == 'a' && y == 'd')
        redexes.push_back({k, 1, Scalar(1)});
      else if (x == 'd' && y == 'a')
        redexes.push_back({k, 2, Scalar(1)});
      else if (has_a && has_d && (x == 'b' || x == 'c') && y == 'd' &&
               w.find('a') < k)  // pull the d towards the a on its left
        redexes.push_back({k, 3, q});
    }
    if (redexes.empty()) {
      // Terminal word: a^l b^m c^s or b^m c^s d^t.
      OqMonomial mono;
      size_t pos = 0;
      while (pos < w.size() && w[pos] == 'a') ++mono.l, ++pos;
      while (pos < w.size() && w[pos] == 'b') ++mono.m, ++pos;
      while (pos < w.size() && w[pos] == 'c') ++mono.s, ++pos;
      while (pos < w.size() && w[pos] == 'd') ++mono.t, ++pos;
      if (pos != w.size() || !mono.valid())
        throw InvariantViolation("oq_normal_form_local: non-terminal word survived");
      out.add_term(mono, item.c);
      continue;
    }
    // Prefer eliminating mixed ad pairs; sorting alone cannot terminate while
    // both letters are present.
    std::vector<Redex> pool;
    for (const Redex& r : redexes)
      if (r.kind == 1 || r.kind == 2) pool.push_back(r);
    if (pool.empty() && has_a && has_d)
      for (const Redex& r : redexes)
        if (r.kind == 3) pool.push_back(r);
    if (pool.empty())
      for (const Redex& r : redexes)
        if (r.kind == 0) pool.push_back(r);
    if (pool.empty()) pool = redexes;
    const Redex& r = rng ? pool[static_cast<size_t>(rng->range(0, static_cast<long>(pool.size()) - 1))]
                         : pool.front();

    if (r.kind == 0 || r.kind == 3) {
      Item next{item.c * r.factor, w};
      std::swap(next.w[r.pos], next.w[r.pos + 1]);
      stack.push_back(std::move(next));
    } else {
      // ad = 1 + q bc, da = 1 + q^{-1} bc
      OqWord shorter = w.substr(0, r.pos) + w.substr(r.pos + 2);
      stack.push_back({item.c, shorter});
      OqWord bc = w.substr(0, r.pos) + "bc" + w.substr(r.pos + 2);
      stack.push_back({item.c * (r.kind == 1 ? q : q.inverse()), bc});
    }
  }
  return out;
}

namespace {

OqWord monomial_word(const OqMonomial& mono) {
  OqWord w;
  w.append(static_cast<size_t>(mono.l), 'a');
  w.append(static_cast<size_t>(mono.m), 'b');
  w.append(static_cast<size_t>(mono.s), 'c');
  w.append(static_cast<size_t>(mono.t), 'd');
  return w;
}

}  // namespace

OqElement oq_multiply(const QSpec& spec, const OqElement& x, const OqElement& y) {
  OqElement out;
  for (const auto& [mx, cx] : x.terms) {
    for (const auto& [my, cy] : y.terms) {
      OqElement cur = OqElement::single(mx, cx * cy);
      OqWord tail = monomial_word(my);
      for (char g : tail) {
        OqElement next;
        for (const auto& [mono, c] : cur.terms) mul_letter(spec, mono, g, next, c);
        cur = std::move(next);
      }
      out += cur;
    }
  }
  return out;
}

OqTensor oq_coproduct(const QSpec& spec, const OqElement& x) {
  // Delta(a) = a(x)a + b(x)c, Delta(b) = a(x)b + b(x)d,
  // Delta(c) = c(x)a + d(x)c, Delta(d) = c(x)b + d(x)d.
  OqTensor out;
  for (const auto& [mono, c] : x.terms) {
    std::map<std::pair<OqWord, OqWord>, Scalar> acc;
    acc[{"", ""}] = c;
    for (char g : monomial_word(mono)) {
      std::pair<OqWord, OqWord> img1, img2;
      switch (g) {
        case 'a': img1 = {"a", "a"}; img2 = {"b", "c"}; break;
        case 'b': img1 = {"a", "b"}; img2 = {"b", "d"}; break;
        case 'c': img1 = {"c", "a"}; img2 = {"d", "c"}; break;
        default:  img1 = {"c", "b"}; img2 = {"d", "d"}; break;
      }
      std::map<std::pair<OqWord, OqWord>, Scalar> next;
      for (const auto& [pw, pc] : acc)
        for (const auto& img : {img1, img2}) {
          auto key = std::make_pair(pw.first + img.first, pw.second + img.second);
          auto [it, inserted] = next.try_emplace(key, pc);
          if (!inserted) it->second += pc;
        }
      acc = std::move(next);
    }
    for (const auto& [pw, pc] : acc) {
      if (pc.is_zero()) continue;
      OqElement left = oq_normal_form(spec, pw.first);
      OqElement right = oq_normal_form(spec, pw.second);
      for (const auto& [ml, cl] : left.terms)
        for (const auto& [mr, cr] : right.terms) out.add_term(ml, mr, pc * cl * cr);
    }
  }
  return out;
}

Scalar oq_counit(const QSpec& spec, const OqElement& x) {
  // eps(a) = eps(d) = 1, eps(b) = eps(c) = 0.
  (void)spec;
  Scalar r(0);
  for (const auto& [mono, c] : x.terms)
    if (mono.m == 0 && mono.s == 0) r += c;
  return r;
}

OqElement oq_antipode(const QSpec& spec, const OqElement& x) {
  // S(a) = d, S(d) = a, S(b) = -q^{-1} b, S(c) = -q c; anti-multiplicative.
  OqElement out;
  for (const auto& [mono, c] : x.terms) {
    OqWord w = monomial_word(mono);
    OqWord img;
    Scalar coeff = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      switch (*it) {
        case 'a': img += 'd'; break;
        case 'd': img += 'a'; break;
        case 'b': img += 'b'; coeff *= -spec.q.inverse(); break;
        default:  img += 'c'; coeff *= -spec.q; break;
      }
    }
    out += oq_normal_form(spec, img).scaled(coeff);
  }
  return out;
}

NormValue oq_log_norm(const QSpec& spec, const OqElement& x, long n) {
  if (x.is_zero()) return NormValue::of_zero();
  bool first = true;
  long best = 0;
  for (const auto& [mono, c] : x.terms) {
    long v = *c.valuation(spec.p);
    long cand = n * mono.degree() - v;
    if (first || cand > best) best = cand;
    first = false;
  }
  return NormValue::of_log(best);
}

}  // namespace uqlat
