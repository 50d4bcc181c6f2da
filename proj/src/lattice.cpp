#include "uqlat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace uqlat {

long height(const UqContext& ctx, const PBWMonomial& m) { return monomial_height(ctx, m); }

int m_threshold(const UqContext& ctx) {
  long m = 0;
  for (int i = 1; i <= ctx.rs.rank; ++i) {
    auto v = ctx.ef_denom(i).valuation(ctx.spec.p);
    if (!v) throw InvariantViolation("m_threshold: q_i - q_i^{-1} = 0");
    m = std::max(m, (*v + 1) / 2);  // ceil(v/2)
  }
  return static_cast<int>(m);
}

static void require_level(const AlgebraElement& x, long n, const char* who) {
  int m = m_threshold(*x.ctx);
  if (n < m)
    throw std::invalid_argument(std::string(who) + ": level n = " + std::to_string(n) +
                                " is below the m-threshold " + std::to_string(m) +
                                "; the lattice description only holds for n >= m");
}

NormValue log_norm(const AlgebraElement& x, long n) {
  require_level(x, n, "log_norm");
  if (x.is_zero()) return NormValue::of_zero();
  bool first = true;
  long best = 0;
  for (const auto& [m, c] : x.terms) {
    long v = *c.valuation(x.ctx->spec.p);
    long cand = n * height(*x.ctx, m) - v;
    if (first || cand > best) best = cand;
    first = false;
  }
  return NormValue::of_log(best);
}

bool in_lattice(const AlgebraElement& x, long n) {
  NormValue nv = log_norm(x, n);
  return nv.zero || nv.log_p <= 0;
}

std::optional<long> lattice_slack(const AlgebraElement& x, long n) {
  require_level(x, n, "lattice_slack");
  if (x.is_zero()) return std::nullopt;
  return -log_norm(x, n).log_p;
}

Report verify_pbw_lattice(CtxPtr ctx, long n, int height_bound, bool check_multiplicities) {
  if (n < m_threshold(*ctx))
    throw std::invalid_argument("verify_pbw_lattice: need n >= m");
  if (height_bound > ctx->height_cap)
    throw ResourceError("verify_pbw_lattice: height bound exceeds the working cap");

  const unsigned long p = ctx->spec.p;
  Report rep;
  rep.suite = "pbw-lattice";
  rep.meta["type"] = ctx->rs.type_str();
  rep.meta["n"] = std::to_string(n);
  rep.meta["height_bound"] = std::to_string(height_bound);

  // (a) The rescaled root vectors lie in the subalgebra generated by the
  // pi^n E_i. Each expansion word has exactly ht(beta_j) letters, so
  // pi^{n ht(beta_j)} E_{beta_j} = sum c_w (pi^n E)-products with the same
  // coefficients; integrality of the c_w is the membership certificate.
  for (int j = 1; j <= ctx->N; ++j) {
    const WordElement& rv = ctx->root_vector_words(j);
    long min_v = 0;
    bool first = true;
    bool words_ok = true;
    for (const auto& [w, c] : rv.terms) {
      long v = *c.valuation(p);
      if (first || v < min_v) min_v = v;
      first = false;
      if (static_cast<long>(w.size()) != ctx->beta_ht[j - 1]) words_ok = false;
      if (check_multiplicities) {
        std::vector<int> mult(ctx->rs.rank, 0);
        for (const Letter& l : w) ++mult[l.idx - 1];
        if (mult != ctx->beta[j - 1].a) words_ok = false;
      }
    }
    rep.add("rescaled-root-vector-in-Un", "beta_" + std::to_string(j),
            words_ok && min_v >= 0, "min_slack=" + std::to_string(min_v));
  }

  // (b) Products of the generators of U_n normalize into the rescaled PBW
  // lattice. K generators carry no pi factor.
  struct Gen {
    Letter l;
    bool scaled;  // carries pi^n
    std::string name;
  };
  std::vector<Gen> gens;
  for (int i = 1; i <= ctx->rs.rank; ++i) {
    gens.push_back({Letter::e(i), true, "pE" + std::to_string(i)});
    gens.push_back({Letter::f(i), true, "pF" + std::to_string(i)});
    gens.push_back({Letter::k(ctx->rs.fundamental(i)), false, "Kw" + std::to_string(i)});
    gens.push_back({Letter::k(-ctx->rs.fundamental(i)), false, "Kw" + std::to_string(i) + "^-1"});
  }

  std::vector<int> pick;
  std::function<void(int)> rec = [&](int len) {
    if (len > 0) {
      Word w;
      int scaled_count = 0;
      std::string name;
      for (int g : pick) {
        w.push_back(gens[g].l);
        if (gens[g].scaled) ++scaled_count;
        if (!name.empty()) name += "*";
        name += gens[g].name;
      }
      AlgebraElement x = word_to_pbw(ctx, WordElement::single(w));
      // slack of pi^{n * scaled_count} * x against the n-th lattice
      long min_slack = 0;
      bool first = true;
      for (const auto& [m, c] : x.terms) {
        long slack = *c.valuation(p) + n * scaled_count - n * height(*ctx, m);
        if (first || slack < min_slack) min_slack = slack;
        first = false;
      }
      rep.add("generator-product-in-lattice", name, min_slack >= 0,
              "min_slack=" + std::to_string(min_slack));
    }
    if (len == height_bound) return;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      pick.push_back(g);
      rec(len + 1);
      pick.pop_back();
    }
  };
  rec(0);

  return rep;
}

Report pbw_word_independence(const RootSystem& rs, const QSpec& spec,
                             const ReducedWord& word1, const ReducedWord& word2,
                             int height_bound) {
  if (!rs.is_reduced(word1) || word1.length() != rs.num_positive)
    throw std::invalid_argument("pbw_word_independence: word1 is not a reduced expression of w_0");
  if (!rs.is_reduced(word2) || word2.length() != rs.num_positive)
    throw std::invalid_argument("pbw_word_independence: word2 is not a reduced expression of w_0");

  CtxPtr c1 = UqContext::create(rs, spec, word1);
  CtxPtr c2 = UqContext::create(rs, spec, word2);
  const unsigned long p = spec.p;

  Report rep;
  rep.suite = "pbw-word-independence";
  rep.meta["type"] = rs.type_str();
  rep.meta["word1"] = word1.str();
  rep.meta["word2"] = word2.str();
  rep.meta["height_bound"] = std::to_string(height_bound);

  auto one_direction = [&](CtxPtr from, CtxPtr to, const std::string& tag) {
    // Every monomial in from's E_beta's of height <= bound must be an
    // R-combination of to's PBW monomials (necessarily of the same weight).
    std::function<void(int, long, std::vector<int>&)> rec = [&](int j, long ht_left,
                                                                std::vector<int>& svec) {
      if (j == from->N) {
        long ht = 0;
        bool nonzero = false;
        for (int k = 0; k < from->N; ++k) {
          ht += static_cast<long>(svec[k]) * from->beta_ht[k];
          if (svec[k]) nonzero = true;
        }
        if (!nonzero) return;
        WordElement expansion = WordElement::one();
        for (int k = 1; k <= from->N; ++k)
          for (int t = 0; t < svec[k - 1]; ++t)
            expansion = expansion * from->root_vector_words(k);
        AlgebraElement img = word_to_pbw(to, expansion);
        long min_v = 0;
        bool first = true;
        for (const auto& [m, c] : img.terms) {
          long v = *c.valuation(p);
          if (first || v < min_v) min_v = v;
          first = false;
        }
        std::ostringstream inst;
        inst << tag << " s=[";
        for (int k = 0; k < from->N; ++k) inst << (k ? "," : "") << svec[k];
        inst << "]";
        rep.add("monomial-R-span", inst.str(), min_v >= 0,
                "min_valuation=" + std::to_string(min_v));
        return;
      }
      for (int e = 0; ht_left - static_cast<long>(e) * from->beta_ht[j] >= 0; ++e) {
        svec[j] = e;
        rec(j + 1, ht_left - static_cast<long>(e) * from->beta_ht[j], svec);
      }
      svec[j] = 0;
    };
    std::vector<int> svec(from->N, 0);
    rec(0, height_bound, svec);
  };

  one_direction(c1, c2, "word1->word2");
  one_direction(c2, c1, "word2->word1");
  return rep;
}

}  // namespace uqlat
