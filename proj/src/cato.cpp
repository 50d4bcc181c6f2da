#include "uqlat/cato.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "uqlat/rng.hpp"

namespace uqlat {

CartanElement CartanElement::one(int rank) { return k(Weight::zero(rank)); }

CartanElement CartanElement::k(const Weight& lam, Scalar c) {
  CartanElement x;
  x.add_term(lam, c);
  return x;
}

CartanElement& CartanElement::add_term(const Weight& lam, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms.try_emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

CartanElement& CartanElement::operator+=(const CartanElement& o) {
  for (const auto& [lam, c] : o.terms) add_term(lam, c);
  return *this;
}

CartanElement CartanElement::scaled(const Scalar& c) const {
  CartanElement r;
  if (c.is_zero()) return r;
  for (const auto& [lam, coeff] : terms) r.terms.emplace(lam, coeff * c);
  return r;
}

CartanElement operator*(const CartanElement& a, const CartanElement& b) {
  CartanElement r;
  for (const auto& [la, ca] : a.terms)
    for (const auto& [lb, cb] : b.terms) r.add_term(la + lb, ca * cb);
  return r;
}

Scalar psi(const RootSystem& rs, const QSpec& spec, const Weight& lambda, const Weight& mu) {
  return spec.qp_pow(rs.pair_ww_d(lambda, mu));
}

Scalar psi_apply(const RootSystem& rs, const QSpec& spec, const CartanElement& x,
                 const Weight& lambda) {
  Scalar r(0);
  for (const auto& [mu, c] : x.terms) r += c * psi(rs, spec, lambda, mu);
  return r;
}

// ---------------------------------------------------------------------------
// Residue finiteness and the separating element.

namespace {

mpz_class ppow(unsigned long p, int a) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(a));
  return r;
}

// Residue of a p-integral rational mod p^a, as an integer in [0, p^a).
mpz_class residue_mod(const Scalar& x, unsigned long p, int a) {
  auto v = x.valuation(p);
  if (v && *v < 0) throw std::invalid_argument("residue_mod: not p-integral");
  mpz_class mod = ppow(p, a);
  if (x.is_zero()) return 0;
  mpz_class den_inv;
  if (!mpz_invert(den_inv.get_mpz_t(), x.den().get_mpz_t(), mod.get_mpz_t()))
    throw std::invalid_argument("residue_mod: denominator not invertible");
  mpz_class r = (x.num() % mod) * den_inv % mod;
  if (sgn(r) < 0) r += mod;
  return r;
}

long qprime_b(const QSpec& spec) {
  auto b = (spec.qprime - Scalar(1)).valuation(spec.p);
  if (!b || *b < 1) throw InvariantViolation("qprime not congruent to 1 mod p");
  return *b;
}

}  // namespace

std::set<mpz_class> residue_classes(const RootSystem& rs, const QSpec& spec, int r,
                                    const std::vector<long>& m_list,
                                    const std::vector<int>& fund_list, int a) {
  if (a < 1) throw std::invalid_argument("residue_classes: need a >= 1");
  if (static_cast<int>(m_list.size()) != r || static_cast<int>(fund_list.size()) != r)
    throw std::invalid_argument("residue_classes: m_list/fund_list must have length r");
  for (int i : fund_list)
    if (i < 1 || i > rs.rank)
      throw std::invalid_argument("residue_classes: fundamental-weight index out of range");

  const long b = qprime_b(spec);
  // X = {k : b|k| < a}, M = {prod ((q')^{k_i} - 1)} U {0}
  long kmax = (a - 1) / b;  // b*|k| < a  <=>  |k| <= ceil(a/b) - 1
  if (b * (kmax + 1) < a) kmax += 1;

  std::set<mpz_class> out;
  out.insert(0);
  std::vector<long> k(static_cast<size_t>(r), -kmax);
  if (r == 0) return out;
  while (true) {
    Scalar prod(1);
    for (long ki : k) prod *= (spec.qp_pow(ki) - Scalar(1));
    out.insert(residue_mod(prod, spec.p, a));
    int pos = 0;
    while (pos < r && k[pos] == kmax) k[pos++] = -kmax;
    if (pos == r) break;
    ++k[pos];
  }
  return out;
}

namespace {

// The product x = prod_{mu in X} (K_{w_{i(mu)}} - q^{<mu, w_{i(mu)}>}) together
// with the data needed to evaluate all later stages by composition.
struct SeparatingPath {
  std::vector<int> fund;    // i(mu), 1-based
  std::vector<long> mexp;   // d<mu, w_{i(mu)}>, so the constant is qprime^mexp
  long shift_n = 0;         // divide by p^N
  std::vector<std::vector<mpz_class>> stages;  // transversal V per g-iteration
  Scalar unit_inverse = Scalar(1);

  Scalar eval(const RootSystem& rs, const QSpec& spec, const Weight& gamma) const {
    Scalar v(1);
    for (size_t t = 0; t < fund.size(); ++t) {
      long n = rs.pair_ww_d(gamma, rs.fundamental(fund[t]));
      v *= spec.qp_pow(n) - spec.qp_pow(mexp[t]);
    }
    v /= Scalar(static_cast<long>(spec.p)).pow(shift_n);
    Scalar pinv = Scalar(1, static_cast<long>(spec.p));
    for (const auto& reps : stages) {
      Scalar prod(1);
      for (const mpz_class& rep : reps) prod *= v - Scalar(rep);
      v = prod * pinv;
    }
    return v * unit_inverse;
  }
};

// Exact N = min_{gamma in P} v_p(x(gamma)), by capped residue grids. Each
// factor contributes b + v_p(l(gamma)) with l an affine integer form, so the
// capped valuation is periodic of period p^c in every coordinate.
long exact_min_valuation(const RootSystem& rs, const QSpec& spec,
                         const SeparatingPath& path, long v_at_lambda, int grid_cap) {
  const long b = qprime_b(spec);
  const unsigned long p = spec.p;
  const int r = static_cast<int>(path.fund.size());
  const int n = rs.rank;

  for (int c = 1; c <= grid_cap; ++c) {
    double points = 1;
    for (int t = 0; t < n; ++t) points *= static_cast<double>(ppow(p, c).get_ui());
    if (points > 4e6)
      throw ResourceError("separating_element: valuation grid exceeds the cap");
    long pc = static_cast<long>(ppow(p, c).get_ui());

    long min_lb = -1;
    bool min_lb_capped = false;
    long min_uncapped = -1;
    std::vector<int> gamma(n, 0);
    std::function<void(int)> visit = [&](int pos) {
      if (pos == n) {
        long total = 0;
        bool capped = false;
        Weight g(std::vector<int>(gamma.begin(), gamma.end()));
        for (int t = 0; t < r; ++t) {
          long l = rs.pair_ww_d(g, rs.fundamental(path.fund[t])) - path.mexp[t];
          long res = ((l % pc) + pc) % pc;
          if (res == 0) {
            total += b + c;
            capped = true;
          } else {
            long v = 0;
            while (res % static_cast<long>(p) == 0) {
              res /= static_cast<long>(p);
              ++v;
            }
            total += b + v;
          }
        }
        if (min_lb < 0 || total < min_lb || (total == min_lb && !capped)) {
          min_lb = total;
          min_lb_capped = capped;
        }
        if (!capped && (min_uncapped < 0 || total < min_uncapped)) min_uncapped = total;
        return;
      }
      for (int t = 0; t < pc; ++t) {
        gamma[pos] = t;
        visit(pos + 1);
      }
    };
    visit(0);

    if (!min_lb_capped) return min_lb;
    // Capped points are worth at least r*b + c; once that exceeds the best
    // exact value they cannot win.
    if (min_uncapped >= 0 && static_cast<long>(r) * b + c > min_uncapped)
      return min_uncapped;
    (void)v_at_lambda;
  }
  throw ResourceError("separating_element: could not certify the exact valuation shift");
}

}  // namespace

CartanElement separating_element(const RootSystem& rs, const QSpec& spec,
                                 const std::vector<Weight>& X_in, const Weight& lambda,
                                 const SeparatingOptions& opts) {
  // Deduplicate X; the empty case is the constant 1.
  std::set<Weight> X(X_in.begin(), X_in.end());
  if (X.count(lambda))
    throw std::invalid_argument("separating_element: lambda must not lie in X");
  if (X.empty()) return CartanElement::one(rs.rank);

  const unsigned long p = spec.p;
  SeparatingPath path;
  CartanElement x = CartanElement::one(rs.rank);
  for (const Weight& mu : X) {
    int pick = 0;
    for (int i = 1; i <= rs.rank; ++i)
      if (rs.pair_ww_d(lambda - mu, rs.fundamental(i)) != 0) {
        pick = i;
        break;
      }
    if (pick == 0) throw InvariantViolation("separating_element: weights not separated by any K_w");
    long mexp = rs.pair_ww_d(mu, rs.fundamental(pick));
    path.fund.push_back(pick);
    path.mexp.push_back(mexp);
    CartanElement factor;
    factor.add_term(rs.fundamental(pick), Scalar(1));
    factor.add_term(Weight::zero(rs.rank), -spec.qp_pow(mexp));
    x = x * factor;
  }
  const int r = static_cast<int>(path.fund.size());

  // Exact valuation shift N and the value at lambda.
  const long b = qprime_b(spec);
  long v_lambda = 0;
  for (int t = 0; t < r; ++t) {
    long l = rs.pair_ww_d(lambda, rs.fundamental(path.fund[t])) - path.mexp[t];
    long al = std::abs(l);
    long v = 0;
    while (al % static_cast<long>(p) == 0) {
      al /= static_cast<long>(p);
      ++v;
    }
    v_lambda += b + v;
  }
  long N = exact_min_valuation(rs, spec, path, v_lambda, opts.valuation_grid_cap);
  if (N < 1) throw InvariantViolation("separating_element: N must be positive");
  path.shift_n = N;

  long v0 = v_lambda - N;
  CartanElement y = x.scaled(Scalar(static_cast<long>(p)).pow(-N));
  Scalar y_lambda = psi_apply(rs, spec, x, lambda) / Scalar(static_cast<long>(p)).pow(N);

  if (v0 > 0) {
    // Residue superset of y(P) mod p^{a0}: the lemma's set M for P_gamma,
    // scaled by the unit (q')^{sum m} and shifted by p^{-N}.
    int a = static_cast<int>(v0) + 1;
    long msum = 0;
    for (long m : path.mexp) msum += m;
    std::vector<int> fund_list = path.fund;
    std::set<mpz_class> M = residue_classes(rs, spec, r, path.mexp, fund_list, a + static_cast<int>(N));
    mpz_class mod_high = ppow(p, a + static_cast<int>(N));
    mpz_class mod_low = ppow(p, a);
    mpz_class unit_res = residue_mod(spec.qp_pow(msum), p, a + static_cast<int>(N));
    std::set<mpz_class> S;
    S.insert(0);
    for (const mpz_class& u : M) {
      mpz_class w = u * unit_res % mod_high;
      if (w == 0) continue;
      long v = valuation_exact(w, p);
      if (v < N) continue;  // a class x(P) never meets
      mpz_class shifted = w;
      for (long t = 0; t < N; ++t) shifted /= static_cast<long>(p);
      S.insert(shifted % mod_low);
    }

    long iter = 0;
    while (true) {
      auto vy = y_lambda.valuation(p);
      if (!vy) throw InvariantViolation("separating_element: value at lambda vanished");
      if (*vy == 0) break;
      if (++iter > v0)
        throw InvariantViolation("separating_element: iteration guard tripped");
      if (a < 1) throw InvariantViolation("separating_element: residue level exhausted");

      // Transversal of residues mod p; the class-0 representative is 0.
      std::map<mpz_class, mpz_class> reps;  // class -> representative
      for (const mpz_class& w : S) {
        mpz_class cls = w % p;
        if (cls == 0)
          reps[cls] = 0;
        else
          reps.try_emplace(cls, w);
      }
      std::vector<mpz_class> V;
      for (const auto& [cls, rep] : reps) V.push_back(rep);
      path.stages.push_back(V);

      // y <- (prod_{v in V} (y - v)) / p, and the same on the residue set.
      Scalar pinv = Scalar(1, static_cast<long>(p));
      CartanElement prod = CartanElement::one(rs.rank);
      for (const mpz_class& rep : V) {
        CartanElement shifted = y;
        shifted.add_term(Weight::zero(rs.rank), -Scalar(rep));
        prod = prod * shifted;
      }
      y = prod.scaled(pinv);
      {
        Scalar prod_l(1);
        for (const mpz_class& rep : V) prod_l *= y_lambda - Scalar(rep);
        Scalar next = prod_l * pinv;
        if (!next.valuation(p) || *next.valuation(p) != *vy - 1)
          throw InvariantViolation("separating_element: valuation did not drop by one");
        y_lambda = next;
      }
      std::set<mpz_class> S_next;
      for (const mpz_class& w : S) {
        Scalar gw(1);
        for (const mpz_class& rep : V) gw *= Scalar(w) - Scalar(rep);
        gw *= pinv;
        S_next.insert(residue_mod(gw, p, a - 1));
      }
      S = std::move(S_next);
      a -= 1;
    }
  }

  // Scale by the unit inverse and run the postcondition checks.
  path.unit_inverse = y_lambda.inverse();
  CartanElement result = y.scaled(path.unit_inverse);

  for (const Weight& mu : X) {
    if (!path.eval(rs, spec, mu).is_zero() || !psi_apply(rs, spec, result, mu).is_zero())
      throw InvariantViolation("separating_element: nonzero value on X");
  }
  if (!(path.eval(rs, spec, lambda) == Scalar(1)) ||
      !(psi_apply(rs, spec, result, lambda) == Scalar(1)))
    throw InvariantViolation("separating_element: value at lambda is not 1");

  // Integrality on the sampled weight grid, via the composition path.
  std::vector<int> gamma(rs.rank, -opts.grid_bound);
  while (true) {
    Weight g(std::vector<int>(gamma.begin(), gamma.end()));
    auto v = path.eval(rs, spec, g).valuation(p);
    if (v && *v < 0)
      throw InvariantViolation("separating_element: non-integral value at " + g.str());
    int pos = 0;
    while (pos < rs.rank && gamma[pos] == opts.grid_bound) gamma[pos++] = -opts.grid_bound;
    if (pos == rs.rank) break;
    ++gamma[pos];
  }

  return result;
}

// ---------------------------------------------------------------------------
// Kostant counts and Verma modules.

long kostant(const RootSystem& rs, const std::vector<int>& mu) {
  if (static_cast<int>(mu.size()) != rs.rank)
    throw std::invalid_argument("kostant: coordinate rank mismatch");
  for (int x : mu)
    if (x < 0) throw std::invalid_argument("kostant: mu must lie in Q+");
  // Count multisets of positive roots summing to mu.
  std::function<long(size_t, std::vector<int>)> count = [&](size_t idx, std::vector<int> rem) -> long {
    if (std::all_of(rem.begin(), rem.end(), [](int v) { return v == 0; })) return 1;
    if (idx == rs.positive_roots.size()) return 0;
    const Root& beta = rs.positive_roots[idx];
    long total = 0;
    std::vector<int> cur = rem;
    while (true) {
      total += count(idx + 1, cur);
      bool ok = true;
      for (int i = 0; i < rs.rank; ++i) {
        cur[i] -= beta.a[i];
        if (cur[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    return total;
  };
  return count(0, mu);
}

long verma_weight_dim(const UqContext& ctx, const Weight& lambda, const Weight& mu) {
  auto nu = ctx.rs.weight_to_root(lambda - mu);
  if (!nu || !nu->is_nonnegative()) return 0;
  return static_cast<long>(ctx.exponents_of_weight(nu->a).size());
}

VermaElement VermaElement::highest(CtxPtr c, Weight hw) {
  VermaElement v(c, std::move(hw));
  v.add_term(std::vector<int>(c->N, 0), Scalar(1));
  return v;
}

VermaElement& VermaElement::add_term(const std::vector<int>& r, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

VermaElement& VermaElement::operator+=(const VermaElement& o) {
  for (const auto& [r, c] : o.terms) add_term(r, c);
  return *this;
}

VermaElement& VermaElement::operator-=(const VermaElement& o) {
  for (const auto& [r, c] : o.terms) add_term(r, -c);
  return *this;
}

VermaElement VermaElement::scaled(const Scalar& c) const {
  VermaElement r(ctx, highest_weight);
  if (c.is_zero()) return r;
  for (const auto& [rv, coeff] : terms) r.terms.emplace(rv, coeff * c);
  return r;
}

VermaElement verma_apply(const AlgebraElement& u, const VermaElement& v) {
  if (u.ctx != v.ctx) throw std::invalid_argument("verma_apply: mismatched contexts");
  const auto& ctx = *v.ctx;
  VermaElement out(v.ctx, v.highest_weight);
  for (const auto& [rvec, c] : v.terms) {
    PBWMonomial f = PBWMonomial::unit(ctx.N, ctx.rs.rank);
    f.r = rvec;
    AlgebraElement prod = multiply(u, make_monomial(v.ctx, f));
    for (const auto& [m, a] : prod.terms) {
      // E part kills v_lambda; K_mu acts by psi_lambda.
      if (std::any_of(m.s.begin(), m.s.end(), [](int x) { return x > 0; })) continue;
      Scalar k_act = psi(ctx.rs, ctx.spec, v.highest_weight, m.lam);
      out.add_term(m.r, c * a * k_act);
    }
  }
  return out;
}

std::vector<std::vector<int>> verma_basis(const UqContext& ctx, const std::vector<int>& nu) {
  for (int x : nu)
    if (x < 0) return {};
  return ctx.exponents_of_weight(nu);
}

std::vector<VermaElement> maximal_vectors(CtxPtr ctx, const Weight& lambda,
                                          const Weight& mu, long dim_cap) {
  auto nu = ctx->rs.weight_to_root(lambda - mu);
  if (!nu || !nu->is_nonnegative()) return {};
  auto basis = verma_basis(*ctx, nu->a);
  const long dim = static_cast<long>(basis.size());
  if (dim == 0) return {};
  if (dim > dim_cap) throw ResourceError("maximal_vectors: weight space dimension exceeds cap");

  if (nu->is_zero()) {
    // mu = lambda: the highest weight line.
    return {VermaElement::highest(ctx, lambda)};
  }

  // Stack the E_i action matrices on the weight-mu basis.
  std::vector<std::vector<Scalar>> rows;
  for (int i = 1; i <= ctx->rs.rank; ++i) {
    std::vector<int> target = nu->a;
    target[i - 1] -= 1;
    std::vector<std::vector<int>> tbasis;
    if (std::all_of(target.begin(), target.end(), [](int x) { return x >= 0; }))
      tbasis = verma_basis(*ctx, target);
    std::map<std::vector<int>, int> index;
    for (size_t k = 0; k < tbasis.size(); ++k) index[tbasis[k]] = static_cast<int>(k);
    std::vector<std::vector<Scalar>> block(tbasis.size(),
                                           std::vector<Scalar>(basis.size(), Scalar(0)));
    AlgebraElement Ei = make_E(ctx, i);
    for (size_t col = 0; col < basis.size(); ++col) {
      VermaElement v(ctx, lambda);
      v.add_term(basis[col], Scalar(1));
      VermaElement img = verma_apply(Ei, v);
      for (const auto& [rvec, c] : img.terms) {
        auto it = index.find(rvec);
        if (it == index.end())
          throw InvariantViolation("maximal_vectors: image outside the expected weight space");
        block[it->second][col] += c;
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }

  // Exact null space.
  const size_t R = rows.size(), C = basis.size();
  std::vector<int> pivot_of_col(C, -1);
  size_t rank = 0;
  for (size_t col = 0; col < C && rank < R; ++col) {
    size_t piv = rank;
    while (piv < R && rows[piv][col].is_zero()) ++piv;
    if (piv == R) continue;
    std::swap(rows[rank], rows[piv]);
    Scalar inv = rows[rank][col].inverse();
    for (size_t c = 0; c < C; ++c) rows[rank][c] *= inv;
    for (size_t r = 0; r < R; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col];
      for (size_t c = 0; c < C; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  std::vector<VermaElement> out;
  for (size_t free_col = 0; free_col < C; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    VermaElement v(ctx, lambda);
    v.add_term(basis[free_col], Scalar(1));
    for (size_t col = 0; col < C; ++col) {
      if (pivot_of_col[col] < 0) continue;
      const Scalar& entry = rows[static_cast<size_t>(pivot_of_col[col])][free_col];
      if (!entry.is_zero()) v.add_term(basis[col], -entry);
    }
    out.push_back(std::move(v));
  }
  return out;
}

IrreducibilityResult verma_irreducible(CtxPtr ctx, const Weight& lambda, int depth_bound) {
  const RootSystem& rs = ctx->rs;
  IrreducibilityResult res;
  res.criterion = true;

  Weight shifted = lambda + rs.rho;
  for (const Root& beta : rs.positive_roots) {
    // <lambda+rho, beta^vee> = 2<lambda+rho, beta> / <beta, beta>
    long num = 2 * rs.pair_wa_d(shifted, beta);
    long den = rs.pair_aa_d(beta, beta);
    if (num > 0 && num % den == 0) {
      long k = num / den;
      res.criterion = false;
      long depth = k * beta.height();
      if (!res.witness_depth || depth < *res.witness_depth) res.witness_depth = depth;
    }
  }

  res.no_maximal_vector_within_depth = true;
  std::vector<int> nu(rs.rank, 0);
  std::function<bool(int, int)> search = [&](int pos, int budget) -> bool {
    if (pos == rs.rank) {
      bool nonzero = std::any_of(nu.begin(), nu.end(), [](int x) { return x != 0; });
      if (!nonzero) return false;
      Weight mu = lambda - rs.root_to_weight(Root(nu));
      return !maximal_vectors(ctx, lambda, mu).empty();
    }
    for (int t = 0; t <= budget; ++t) {
      nu[pos] = t;
      if (search(pos + 1, budget - t)) return true;
    }
    nu[pos] = 0;
    return false;
  };
  if (search(0, depth_bound)) res.no_maximal_vector_within_depth = false;
  return res;
}

bool central_char_equal(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return rs.dominant_representative(lambda).first == rs.dominant_representative(mu).first;
}

AlgebraElement casimir_sl2(CtxPtr ctx) {
  if (ctx->rs.lie_type != 'A' || ctx->rs.rank != 1)
    throw std::invalid_argument("casimir_sl2: requires type A1");
  const Scalar& q = ctx->spec.q;
  Scalar denom = ctx->ef_denom(1) * ctx->ef_denom(1);  // (q - q^{-1})^2
  AlgebraElement c(ctx);
  PBWMonomial fe = PBWMonomial::unit(1, 1);
  fe.r[0] = 1;
  fe.s[0] = 1;
  c.add_term(fe, Scalar(1));
  PBWMonomial kplus = PBWMonomial::unit(1, 1);
  kplus.lam = ctx->rs.alpha_as_weight(1);  // K^2 = K_alpha
  c.add_term(kplus, q / denom);
  PBWMonomial kminus = PBWMonomial::unit(1, 1);
  kminus.lam = -ctx->rs.alpha_as_weight(1);
  c.add_term(kminus, q.inverse() / denom);
  return c;
}

Scalar casimir_eigenvalue(CtxPtr ctx, long n) {
  if (ctx->rs.lie_type != 'A' || ctx->rs.rank != 1)
    throw std::invalid_argument("casimir_eigenvalue: requires type A1");
  const Scalar& q = ctx->spec.q;
  Scalar denom = ctx->ef_denom(1) * ctx->ef_denom(1);
  return (q.pow(n + 1) + q.pow(-n - 1)) / denom;
}

Report verify_sl2_center(CtxPtr ctx, long n_max, int deg_max, int samples, std::uint64_t seed) {
  if (ctx->rs.lie_type != 'A' || ctx->rs.rank != 1)
    throw std::invalid_argument("verify_sl2_center: requires type A1");
  const long m = m_threshold(*ctx);
  if (n_max < 2 * m) throw std::invalid_argument("verify_sl2_center: need n_max >= 2m");
  const unsigned long p = ctx->spec.p;
  const Scalar pp(static_cast<long>(p));

  Report rep;
  rep.suite = "sl2-center";
  rep.meta["seed"] = std::to_string(seed);
  rep.meta["m"] = std::to_string(m);

  AlgebraElement cq = casimir_sl2(ctx);

  // Centrality.
  std::vector<std::pair<std::string, AlgebraElement>> gens;
  gens.emplace_back("E", make_E(ctx, 1));
  gens.emplace_back("F", make_F(ctx, 1));
  gens.emplace_back("Kw", make_K(ctx, ctx->rs.fundamental(1)));
  for (const auto& [name, gen] : gens) {
    bool ok = multiply(cq, gen) == multiply(gen, cq);
    rep.add("casimir-central", "[C_q, " + name + "] = 0", ok);
  }

  // Powers of C_q, for construction and extraction.
  std::vector<AlgebraElement> cq_pow{make_unit(ctx)};
  for (int i = 1; i <= deg_max; ++i) cq_pow.push_back(multiply(cq_pow.back(), cq));

  auto extract_coeffs = [&](const AlgebraElement& z) {
    std::vector<Scalar> out(static_cast<size_t>(deg_max) + 1, Scalar(0));
    AlgebraElement work = z;
    for (int i = deg_max; i >= 1; --i) {
      PBWMonomial lead = PBWMonomial::unit(1, 1);
      lead.r[0] = i;
      lead.s[0] = i;
      auto it = work.terms.find(lead);
      if (it == work.terms.end()) continue;
      out[static_cast<size_t>(i)] = it->second;
      work -= cq_pow[static_cast<size_t>(i)].scaled(it->second);
    }
    for (const auto& [mon, c] : work.terms)
      if (!mon.is_unit())
        throw InvariantViolation("verify_sl2_center: element is not a polynomial in C_q");
    if (!work.is_zero()) out[0] = work.terms.begin()->second;
    return out;
  };

  // (a) p^{2n} C_q lies in U_n for 2m <= n <= n_max.
  for (long n = 2 * m; n <= n_max; ++n) {
    AlgebraElement scaled = cq.scaled(pp.pow(2 * n));
    auto slack = lattice_slack(scaled, n);
    rep.add("rescaled-casimir-in-lattice", "n=" + std::to_string(n),
            slack && *slack >= 0, "min_slack=" + std::to_string(slack ? *slack : 0));
  }

  // Deterministic tight instance: z = p^{2n}C_q + p^{4n}C_q^2.
  if (deg_max >= 2) {
    long n = 2 * m;
    AlgebraElement z = cq.scaled(pp.pow(2 * n)) + cq_pow[2].scaled(pp.pow(4 * n));
    auto coeffs = extract_coeffs(z);
    bool ok = in_lattice(z, n) && coeffs[1] == pp.pow(2 * n) && coeffs[2] == pp.pow(4 * n);
    rep.add("tight-instance", "z = p^{2n}C_q + p^{4n}C_q^2, n=" + std::to_string(n), ok);
  }

  // (b) Random central polynomials in U_n have c_i in p^{2ni} R.
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    long n = rng.range(2 * m, 2 * m + 2);
    int deg = static_cast<int>(rng.range(1, deg_max));
    std::vector<Scalar> c(static_cast<size_t>(deg_max) + 1, Scalar(0));
    AlgebraElement z(ctx);
    static const long units[] = {1, 2, 3, 4, 6, 7, -1, -2, -3};
    for (int i = 0; i <= deg; ++i) {
      if (i < deg && rng.chance(0.2)) continue;  // sparse polynomials too
      Scalar u(units[rng.range(0, 8)], units[rng.range(0, 2)]);
      c[static_cast<size_t>(i)] = u * pp.pow(2 * n * i + rng.range(0, 2));
      z += cq_pow[static_cast<size_t>(i)].scaled(c[static_cast<size_t>(i)]);
    }
    bool member = in_lattice(z, n);
    auto rec = extract_coeffs(z);
    bool coeffs_ok = true;
    for (int i = 0; i <= deg_max; ++i) {
      if (!(rec[static_cast<size_t>(i)] == c[static_cast<size_t>(i)])) coeffs_ok = false;
      if (rec[static_cast<size_t>(i)].is_zero()) continue;
      auto v = rec[static_cast<size_t>(i)].valuation(p);
      if (!v || *v < 2 * n * i) coeffs_ok = false;
    }
    rep.add("central-poly-coefficient-bounds",
            "sample " + std::to_string(s) + " (n=" + std::to_string(n) + ", deg=" +
                std::to_string(deg) + ")",
            member && coeffs_ok);
  }

  // Constructed negative case: z = C_q itself fails for every n >= 1.
  {
    long n = std::max<long>(1, 2 * m);
    bool not_member = !in_lattice(cq, n);
    auto rec = extract_coeffs(cq);
    auto v1 = rec[1].valuation(p);
    bool bound_fails = rec[1] == Scalar(1) && v1 && *v1 < 2 * n;
    rep.add("negative-case", "z = C_q, n=" + std::to_string(n), not_member && bound_fails);
  }

  return rep;
}

}  // namespace uqlat
