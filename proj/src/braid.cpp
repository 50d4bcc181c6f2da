#include "uqlat/braid.hpp"

#include <sstream>

namespace uqlat {

namespace {

// Divided powers E_i^{(s)} = E_i^s / [s]_{q_i}! are expanded immediately;
// their denominators are p-adic units for the s <= 3 occurring here.
Scalar divided_power_denom(const UqContext& ctx, int i, int s) {
  return qfact(s, ctx.q_i(i));
}

Word repeated(const Letter& l, int count) { return Word(static_cast<size_t>(count), l); }

}  // namespace

WordElement braid_letter_image(const UqContext& ctx, int i, const Letter& l, bool inverse) {
  if (i < 1 || i > ctx.rs.rank) throw std::invalid_argument("braid: bad simple index");
  WordElement out;
  switch (l.kind) {
    case Letter::Kind::K: {
      out.add_term(Word{Letter::k(ctx.rs.simple_reflection(i, l.lam))}, Scalar(1));
      return out;
    }
    case Letter::Kind::E: {
      const int j = l.idx;
      Weight alpha = ctx.rs.alpha_as_weight(i);
      if (j == i) {
        if (!inverse)  // T_i E_i = -F_i K_{a_i}
          out.add_term(Word{Letter::f(i), Letter::k(alpha)}, Scalar(-1));
        else  // T_i^{-1} E_i = -K_{-a_i} F_i
          out.add_term(Word{Letter::k(-alpha), Letter::f(i)}, Scalar(-1));
        return out;
      }
      const int aij = ctx.rs.cartan[i - 1][j - 1];
      const Scalar qi = ctx.q_i(i);
      for (int s = 0; s <= -aij; ++s) {
        Scalar c = qi.pow(-s) /
                   (divided_power_denom(ctx, i, -aij - s) * divided_power_denom(ctx, i, s));
        if ((s - aij) % 2) c = -c;
        Word w;
        if (!inverse) {  // E_i^{(-a_ij - s)} E_j E_i^{(s)}
          w = repeated(Letter::e(i), -aij - s);
          w.push_back(Letter::e(j));
          auto tail = repeated(Letter::e(i), s);
          w.insert(w.end(), tail.begin(), tail.end());
        } else {  // mirror: E_i^{(s)} E_j E_i^{(-a_ij - s)}
          w = repeated(Letter::e(i), s);
          w.push_back(Letter::e(j));
          auto tail = repeated(Letter::e(i), -aij - s);
          w.insert(w.end(), tail.begin(), tail.end());
        }
        out.add_term(w, c);
      }
      return out;
    }
    case Letter::Kind::F: {
      const int j = l.idx;
      Weight alpha = ctx.rs.alpha_as_weight(i);
      if (j == i) {
        if (!inverse)  // T_i F_i = -K_{-a_i} E_i
          out.add_term(Word{Letter::k(-alpha), Letter::e(i)}, Scalar(-1));
        else  // T_i^{-1} F_i = -E_i K_{a_i}
          out.add_term(Word{Letter::e(i), Letter::k(alpha)}, Scalar(-1));
        return out;
      }
      const int aij = ctx.rs.cartan[i - 1][j - 1];
      const Scalar qi = ctx.q_i(i);
      for (int s = 0; s <= -aij; ++s) {
        Scalar c = qi.pow(s) /
                   (divided_power_denom(ctx, i, -aij - s) * divided_power_denom(ctx, i, s));
        if ((s - aij) % 2) c = -c;
        Word w;
        if (!inverse) {  // F_i^{(s)} F_j F_i^{(-a_ij - s)}
          w = repeated(Letter::f(i), s);
          w.push_back(Letter::f(j));
          auto tail = repeated(Letter::f(i), -aij - s);
          w.insert(w.end(), tail.begin(), tail.end());
        } else {  // mirror: F_i^{(-a_ij - s)} F_j F_i^{(s)}
          w = repeated(Letter::f(i), -aij - s);
          w.push_back(Letter::f(j));
          auto tail = repeated(Letter::f(i), s);
          w.insert(w.end(), tail.begin(), tail.end());
        }
        out.add_term(w, c);
      }
      return out;
    }
  }
  throw InvariantViolation("braid_letter_image: unreachable");
}

WordElement braid_word_image(const UqContext& ctx, int i, const WordElement& x, bool inverse) {
  WordElement out;
  for (const auto& [w, c] : x.terms) {
    WordElement cur = WordElement::single(Word{}, c);
    for (const Letter& l : w) cur = cur * braid_letter_image(ctx, i, l, inverse);
    out += cur;
  }
  return out;
}

AlgebraElement braid_T(const AlgebraElement& x, int i) {
  return word_to_pbw(x.ctx, braid_word_image(*x.ctx, i, pbw_to_word(*x.ctx, x)));
}

AlgebraElement braid_T_inverse(const AlgebraElement& x, int i) {
  return word_to_pbw(x.ctx, braid_word_image(*x.ctx, i, pbw_to_word(*x.ctx, x), true));
}

AlgebraElement braid_Tw(const AlgebraElement& x, const ReducedWord& w) {
  if (!x.ctx->rs.is_reduced(w))
    throw std::invalid_argument("braid_Tw: word is not reduced");
  // Normalizes after every operator: letting the raw word expansion of the
  // whole composite accumulate blows up doubly exponentially in the word
  // length, already for B2 at length 4.
  AlgebraElement cur = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    cur = braid_T(cur, *it);
  return cur;
}

Report check_braid_relations(CtxPtr ctx) {
  const RootSystem& rs = ctx->rs;
  if (rs.rank > 3) throw ResourceError("check_braid_relations: rank capped at 3");
  Report rep;
  rep.suite = "braid-relations";
  rep.meta["type"] = rs.type_str();

  std::vector<AlgebraElement> gens;
  std::vector<std::string> gen_names;
  for (int k = 1; k <= rs.rank; ++k) {
    gens.push_back(make_E(ctx, k));
    gen_names.push_back("E" + std::to_string(k));
    gens.push_back(make_F(ctx, k));
    gen_names.push_back("F" + std::to_string(k));
    gens.push_back(make_K(ctx, rs.fundamental(k)));
    gen_names.push_back("Kw" + std::to_string(k));
  }

  auto apply_alternating = [&](int first, int second, int m, const AlgebraElement& x) {
    // T_first T_second T_first ... (m factors), applied right-to-left
    AlgebraElement cur = x;
    for (int t = m - 1; t >= 0; --t) cur = braid_T(cur, (t % 2 == 0) ? first : second);
    return cur;
  };

  for (int i = 1; i <= rs.rank; ++i)
    for (int j = i + 1; j <= rs.rank; ++j) {
      int prod = rs.cartan[i - 1][j - 1] * rs.cartan[j - 1][i - 1];
      int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      for (size_t g = 0; g < gens.size(); ++g) {
        AlgebraElement lhs = apply_alternating(i, j, m, gens[g]);
        AlgebraElement rhs = apply_alternating(j, i, m, gens[g]);
        bool ok = lhs == rhs;
        std::ostringstream inst;
        inst << "T" << i << "T" << j << "... = T" << j << "T" << i << "... (m=" << m
             << ") on " << gen_names[g];
        rep.add("braid-relation", inst.str(), ok, ok ? "" : (lhs - rhs).str());
      }
    }

  // Round trips of the inverse table on all generators.
  for (int i = 1; i <= rs.rank; ++i)
    for (size_t g = 0; g < gens.size(); ++g) {
      bool ok = braid_T_inverse(braid_T(gens[g], i), i) == gens[g] &&
                braid_T(braid_T_inverse(gens[g], i), i) == gens[g];
      rep.add("braid-inverse", "T" + std::to_string(i) + " on " + gen_names[g], ok);
    }

  return rep;
}

}  // namespace uqlat
