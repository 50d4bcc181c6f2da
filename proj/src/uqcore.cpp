#include "uqlat/uqcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "uqlat/braid.hpp"

namespace uqlat {

bool PBWMonomial::is_unit() const { return is_cartan() && lam.is_zero(); }

bool PBWMonomial::is_cartan() const {
  auto zero = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  };
  return zero(r) && zero(s);
}

std::string PBWMonomial::str() const {
  std::ostringstream os;
  os << "{r=[";
  for (size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
  os << "],K=" << lam.str() << ",s=[";
  for (size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k];
  os << "]}";
  return os.str();
}

bool PBWOrder::operator()(const PBWMonomial& x, const PBWMonomial& y) const {
  // Multidegree (r_1..r_N, s_1..s_N) scanned from the last coordinate.
  for (size_t k = x.s.size(); k-- > 0;)
    if (x.s[k] != y.s[k]) return x.s[k] < y.s[k];
  for (size_t k = x.r.size(); k-- > 0;)
    if (x.r[k] != y.r[k]) return x.r[k] < y.r[k];
  return x.lam < y.lam;
}

AlgebraElement& AlgebraElement::add_term(const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement r(ctx);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms) r.terms.emplace(m, coeff * c);
  return r;
}

std::string AlgebraElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")" << m.str();
  }
  return os.str();
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

TensorElement& TensorElement::add_term(const PBWMonomial& a, const PBWMonomial& b,
                                       const Scalar& c) {
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
// Context construction

CtxPtr UqContext::create(RootSystem rs, QSpec spec,
                         std::optional<ReducedWord> word_override, int height_cap) {
  if (rs.lie_type == 'G' && spec.p <= 3)
    throw std::invalid_argument("UqContext: G2 requires p > 3");
  if (rs.d > 1) {
    // q^{1/d} must exist: the configured qprime is that root by definition,
    // nothing to check beyond the QSpec invariants.
  }
  if (height_cap < 1) throw std::invalid_argument("UqContext: height cap must be positive");

  ReducedWord w0 = word_override ? *word_override : rs.longest_word();
  std::vector<Root> beta = rs.beta_sequence(w0);  // validates the word

  auto ctx = std::shared_ptr<UqContext>(new UqContext(std::move(rs), spec));
  ctx->w0 = std::move(w0);
  ctx->beta = std::move(beta);
  ctx->N = static_cast<int>(ctx->beta.size());
  ctx->beta_ht.reserve(ctx->N);
  for (const Root& b : ctx->beta) ctx->beta_ht.push_back(b.height());
  ctx->height_cap = height_cap;
  ctx->root_vectors_.resize(ctx->N);
  ctx->root_vectors_f_.resize(ctx->N);
  ctx->ef_denoms_.reserve(ctx->rs.rank);
  for (int i = 1; i <= ctx->rs.rank; ++i) {
    Scalar qi = spec.qprime.pow(static_cast<long>(spec.d) * ctx->rs.di[i - 1]);
    ctx->ef_denoms_.push_back(qi - qi.inverse());
  }
  return ctx;
}

int UqContext::beta_index_of_simple(int i) const {
  if (i < 1 || i > rs.rank) throw std::invalid_argument("beta_index_of_simple: bad index");
  for (int j = 0; j < N; ++j)
    if (beta_ht[j] == 1 && beta[j].a[i - 1] == 1) return j + 1;
  throw InvariantViolation("beta_index_of_simple: simple root missing from beta-sequence");
}

long UqContext::pair_w_alpha_d(const Weight& mu, int i) const {
  return static_cast<long>(spec.d) * mu.c[i - 1] * rs.di[i - 1];
}

Scalar UqContext::q_i(int i) const { return spec.q_i(rs.di[i - 1]); }

const Scalar& UqContext::ef_denom(int i) const { return ef_denoms_.at(i - 1); }

// ---------------------------------------------------------------------------
// Straightening: rewrite a word into F-block * K_lambda * E-block form using
// the K-commutation rules and [E_i, F_j] = delta_ij (K_i - K_i^{-1})/(q_i - q_i^{-1}).

namespace {

struct WorkItem {
  Scalar c;
  Word w;
};

}  // namespace

const std::map<UqContext::SortedTriple, Scalar>& UqContext::straighten(const Word& start) const {
  {
    std::lock_guard<std::mutex> lock(straighten_mutex_);
    auto it = straighten_cache_.find(start);
    if (it != straighten_cache_.end()) return it->second;
  }

  std::map<SortedTriple, Scalar> out;
  std::vector<WorkItem> stack{{Scalar(1), start}};
  while (!stack.empty()) {
    WorkItem item = std::move(stack.back());
    stack.pop_back();
    Word& w = item.w;

    size_t k = 0;
    bool rewritten = false;
    for (; k < w.size(); ++k) {
      if (w[k].kind == Letter::Kind::K && w[k].lam.is_zero()) {
        w.erase(w.begin() + static_cast<long>(k));
        stack.push_back(std::move(item));
        rewritten = true;
        break;
      }
      if (k + 1 >= w.size()) continue;
      const Letter& x = w[k];
      const Letter& y = w[k + 1];
      if (x.kind == Letter::Kind::K && y.kind == Letter::Kind::K) {
        Weight merged = x.lam + y.lam;
        w[k] = Letter::k(merged);
        w.erase(w.begin() + static_cast<long>(k) + 1);
        stack.push_back(std::move(item));
        rewritten = true;
        break;
      }
      if (x.kind == Letter::Kind::E && y.kind == Letter::Kind::K) {
        // E_i K_mu = q^{-<mu, a_i>} K_mu E_i
        item.c *= spec.qp_pow(-pair_w_alpha_d(y.lam, x.idx));
        std::swap(w[k], w[k + 1]);
        stack.push_back(std::move(item));
        rewritten = true;
        break;
      }
      if (x.kind == Letter::Kind::K && y.kind == Letter::Kind::F) {
        // K_mu F_j = q^{-<mu, a_j>} F_j K_mu
        item.c *= spec.qp_pow(-pair_w_alpha_d(x.lam, y.idx));
        std::swap(w[k], w[k + 1]);
        stack.push_back(std::move(item));
        rewritten = true;
        break;
      }
      if (x.kind == Letter::Kind::E && y.kind == Letter::Kind::F) {
        if (x.idx != y.idx) {
          std::swap(w[k], w[k + 1]);
          stack.push_back(std::move(item));
        } else {
          const int i = x.idx;
          WorkItem swapped{item.c, w};
          std::swap(swapped.w[k], swapped.w[k + 1]);
          stack.push_back(std::move(swapped));
          // commutator term: the pair collapses to (K_{a_i} - K_{-a_i}) / (q_i - q_i^{-1})
          Weight alpha = rs.alpha_as_weight(i);
          Scalar denom_inv = ef_denom(i).inverse();
          WorkItem plus{item.c * denom_inv, w};
          plus.w[k] = Letter::k(alpha);
          plus.w.erase(plus.w.begin() + static_cast<long>(k) + 1);
          stack.push_back(std::move(plus));
          WorkItem minus{-item.c * denom_inv, w};
          minus.w[k] = Letter::k(-alpha);
          minus.w.erase(minus.w.begin() + static_cast<long>(k) + 1);
          stack.push_back(std::move(minus));
        }
        rewritten = true;
        break;
      }
    }
    if (rewritten) continue;

    // Terminal: w = F* K? E*
    SortedTriple t;
    size_t pos = 0;
    while (pos < w.size() && w[pos].kind == Letter::Kind::F) t.f.push_back(w[pos++].idx);
    t.lam = Weight::zero(rs.rank);
    if (pos < w.size() && w[pos].kind == Letter::Kind::K) t.lam = w[pos++].lam;
    while (pos < w.size() && w[pos].kind == Letter::Kind::E) t.e.push_back(w[pos++].idx);
    if (pos != w.size()) throw InvariantViolation("straighten: non-terminal word survived");
    auto [it, inserted] = out.try_emplace(t, item.c);
    if (!inserted) {
      it->second += item.c;
      if (it->second.is_zero()) out.erase(it);
    }
  }

  std::lock_guard<std::mutex> lock(straighten_mutex_);
  return straighten_cache_.try_emplace(start, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// The per-weight linear solver. Expresses a pure E-word in the span of the
// word expansions of the PBW monomials of the same Q+-weight, modulo the
// two-sided span of the quantum Serre relators. The Serre columns are listed
// first so the PBW coordinates returned are the canonical ones.

struct UqContext::WeightSolver {
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> word_row;
  int num_serre_cols = 0;
  std::vector<std::vector<int>> pbw_svec;
  std::vector<std::vector<Scalar>> rref;       // rows x cols
  std::vector<std::vector<Scalar>> transform;  // rows x rows, transform*A = rref
  std::vector<int> pivot_col;                  // per echelon row
  int rank = 0;

  std::vector<std::pair<std::vector<int>, Scalar>> solve_word(
      const std::vector<int>& eword) const {
    auto it = word_row.find(eword);
    if (it == word_row.end())
      throw InvariantViolation("WeightSolver: word not in the weight component");
    const int wi = it->second;
    const int rows = static_cast<int>(words.size());
    std::vector<std::pair<std::vector<int>, Scalar>> result;
    for (int k = 0; k < rows; ++k) {
      const Scalar& yk = transform[k][wi];
      if (k < rank) {
        int c = pivot_col[k];
        if (c >= num_serre_cols && !yk.is_zero())
          result.emplace_back(pbw_svec[c - num_serre_cols], yk);
      } else if (!yk.is_zero()) {
        throw InvariantViolation("PBW normal form: inconsistent linear system");
      }
    }
    return result;
  }
};

UqContext::UqContext(RootSystem rs_, QSpec spec_)
    : rs(std::move(rs_)), spec(std::move(spec_)) {}

UqContext::~UqContext() = default;

namespace {

void gen_multiset_words(std::vector<int>& remaining, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  bool done = true;
  for (size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] > 0) {
      done = false;
      --remaining[i];
      cur.push_back(static_cast<int>(i) + 1);
      gen_multiset_words(remaining, cur, out);
      cur.pop_back();
      ++remaining[i];
    }
  }
  if (done) out.push_back(cur);
}

std::vector<int> eword_indices(const Word& w) {
  std::vector<int> idx;
  idx.reserve(w.size());
  for (const Letter& l : w) {
    if (l.kind != Letter::Kind::E)
      throw InvariantViolation("expected a pure E-word");
    idx.push_back(l.idx);
  }
  return idx;
}

}  // namespace

std::vector<std::vector<int>> UqContext::exponents_of_weight(
    const std::vector<int>& mu) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(N, 0);
  // Recursive bounded enumeration over the beta-sequence.
  std::function<void(int, std::vector<int>)> rec = [&](int j, std::vector<int> rem) {
    if (j == N) {
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; }))
        out.push_back(cur);
      return;
    }
    int cap = std::numeric_limits<int>::max();
    for (int i = 0; i < rs.rank; ++i)
      if (beta[j].a[i] > 0) cap = std::min(cap, rem[i] / beta[j].a[i]);
    for (int e = 0; e <= cap; ++e) {
      cur[j] = e;
      std::vector<int> next = rem;
      bool ok = true;
      for (int i = 0; i < rs.rank; ++i) {
        next[i] -= e * beta[j].a[i];
        if (next[i] < 0) ok = false;
      }
      if (ok) rec(j + 1, next);
    }
    cur[j] = 0;
  };
  for (int x : mu)
    if (x < 0) return out;
  rec(0, mu);
  return out;
}

const UqContext::WeightSolver& UqContext::solver_for(const std::vector<int>& mult) const {
  {
    std::lock_guard<std::mutex> lock(solver_mutex_);
    auto it = solvers_.find(mult);
    if (it != solvers_.end()) return *it->second;
  }

  long ht = 0;
  for (int m : mult) ht += m;
  if (ht > height_cap)
    throw ResourceError("weight component of height " + std::to_string(ht) +
                        " exceeds the working height cap " + std::to_string(height_cap));

  auto sv = std::make_unique<WeightSolver>();

  std::vector<int> rem = mult;
  std::vector<int> cur;
  gen_multiset_words(rem, cur, sv->words);
  std::sort(sv->words.begin(), sv->words.end());
  const int rows = static_cast<int>(sv->words.size());
  for (int k = 0; k < rows; ++k) sv->word_row[sv->words[k]] = k;

  std::vector<std::vector<Scalar>> cols;  // columns of [Serre | PBW]

  // Serre columns: u * S_ij * v over all splits of the weight.
  for (int i = 1; i <= rs.rank; ++i)
    for (int j = 1; j <= rs.rank; ++j) {
      if (i == j) continue;
      std::vector<int> nu(rs.rank, 0);
      nu[i - 1] = 1 - rs.cartan[i - 1][j - 1];
      nu[j - 1] += 1;
      std::vector<int> comp(rs.rank);
      bool fits = true;
      for (int t = 0; t < rs.rank; ++t) {
        comp[t] = mult[t] - nu[t];
        if (comp[t] < 0) fits = false;
      }
      if (!fits) continue;
      // relator as index sequences
      WordElement rel = serre_element(*this, i, j);
      std::vector<std::pair<std::vector<int>, Scalar>> rel_idx;
      for (const auto& [w, c] : rel.terms) rel_idx.emplace_back(eword_indices(w), c);
      // enumerate mu1 <= comp componentwise
      std::vector<int> mu1(rs.rank, 0);
      std::function<void(int)> splits = [&](int pos) {
        if (pos == rs.rank) {
          std::vector<int> mu2(rs.rank);
          for (int t = 0; t < rs.rank; ++t) mu2[t] = comp[t] - mu1[t];
          std::vector<std::vector<int>> us, vs;
          std::vector<int> r1 = mu1, c1;
          gen_multiset_words(r1, c1, us);
          std::vector<int> r2 = mu2, c2;
          gen_multiset_words(r2, c2, vs);
          for (const auto& u : us)
            for (const auto& v : vs) {
              std::vector<Scalar> col(rows, Scalar(0));
              for (const auto& [mid, c] : rel_idx) {
                std::vector<int> full = u;
                full.insert(full.end(), mid.begin(), mid.end());
                full.insert(full.end(), v.begin(), v.end());
                col[sv->word_row.at(full)] += c;
              }
              cols.push_back(std::move(col));
            }
          return;
        }
        for (int t = 0; t <= comp[pos]; ++t) {
          mu1[pos] = t;
          splits(pos + 1);
        }
        mu1[pos] = 0;
      };
      splits(0);
    }
  sv->num_serre_cols = static_cast<int>(cols.size());

  // PBW columns: word expansions of the ordered monomials of this weight.
  sv->pbw_svec = exponents_of_weight(mult);
  for (const auto& svec : sv->pbw_svec) {
    WordElement expansion = WordElement::one();
    for (int j = 1; j <= N; ++j)
      for (int t = 0; t < svec[j - 1]; ++t) expansion = expansion * root_vector_words(j);
    std::vector<Scalar> col(rows, Scalar(0));
    for (const auto& [w, c] : expansion.terms) col[sv->word_row.at(eword_indices(w))] += c;
    cols.push_back(std::move(col));
  }

  // Gauss-Jordan with a row transform, so single-word targets solve fast.
  const int ncols = static_cast<int>(cols.size());
  sv->rref.assign(rows, std::vector<Scalar>(ncols, Scalar(0)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < ncols; ++c) sv->rref[r][c] = cols[c][r];
  sv->transform.assign(rows, std::vector<Scalar>(rows, Scalar(0)));
  for (int r = 0; r < rows; ++r) sv->transform[r][r] = Scalar(1);

  int rank = 0;
  for (int col = 0; col < ncols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!sv->rref[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(sv->rref[rank], sv->rref[piv]);
    std::swap(sv->transform[rank], sv->transform[piv]);
    Scalar inv = sv->rref[rank][col].inverse();
    for (int c = col; c < ncols; ++c) sv->rref[rank][c] *= inv;
    for (int c = 0; c < rows; ++c) sv->transform[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || sv->rref[r][col].is_zero()) continue;
      Scalar f = sv->rref[r][col];
      for (int c = col; c < ncols; ++c) sv->rref[r][c] -= f * sv->rref[rank][c];
      for (int c = 0; c < rows; ++c) sv->transform[r][c] -= f * sv->transform[rank][c];
    }
    sv->pivot_col.push_back(col);
    ++rank;
  }
  sv->rank = rank;

  // The PBW monomials are a basis of the weight component modulo the Serre
  // span, so every PBW column must be a pivot column.
  for (int c = sv->num_serre_cols; c < ncols; ++c)
    if (std::find(sv->pivot_col.begin(), sv->pivot_col.end(), c) == sv->pivot_col.end())
      throw InvariantViolation("WeightSolver: PBW column is not independent modulo Serre");

  std::lock_guard<std::mutex> lock(solver_mutex_);
  return *solvers_.try_emplace(mult, std::move(sv)).first->second;
}

const std::vector<std::pair<std::vector<int>, Scalar>>& UqContext::pbw_of_eword(
    const std::vector<int>& e) const {
  {
    std::lock_guard<std::mutex> lock(eword_mutex_);
    auto it = eword_cache_.find(e);
    if (it != eword_cache_.end()) return it->second;
  }
  std::vector<std::pair<std::vector<int>, Scalar>> result;
  if (e.empty()) {
    result.emplace_back(std::vector<int>(N, 0), Scalar(1));
  } else {
    std::vector<int> mult(rs.rank, 0);
    for (int idx : e) ++mult.at(idx - 1);
    result = solver_for(mult).solve_word(e);
  }
  std::lock_guard<std::mutex> lock(eword_mutex_);
  return eword_cache_.try_emplace(e, std::move(result)).first->second;
}

std::vector<std::pair<std::vector<int>, Scalar>> UqContext::pbw_of_fword(
    const std::vector<int>& f) const {
  // omega maps the F-word to the E-word with the same indices and carries
  // PBW E-monomials to the F-monomials in matching order.
  return pbw_of_eword(f);
}

// ---------------------------------------------------------------------------
// Root vectors E_{beta_j} = T_{i_1}...T_{i_{j-1}}(E_{alpha_{i_j}}).
//
// The raw composite is straightened; terms with a nonempty F-block or a
// nontrivial K-factor cancel in U_q (a nonempty F-word expands over F^r with
// r != 0), so the pure-E part of the sorted form is the element itself.

namespace {

std::string rv_cache_path(const UqContext& ctx, int j) {
  const char* dir = std::getenv("UQLAT_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::ostringstream os;
  os << dir << "/rv_" << ctx.rs.type_str() << "_w";
  for (int l : ctx.w0.letters) os << l;
  os << "_p" << ctx.spec.p << "_d" << ctx.spec.d << "_q" << ctx.spec.qprime.num()
     << "-" << ctx.spec.qprime.den() << "_j" << j << ".json";
  return os.str();
}

WordElement load_rv_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  nlohmann::json doc;
  try {
    in >> doc;
    WordElement we;
    for (const auto& term : doc.at("terms")) {
      Word w;
      for (const auto& idx : term.at("word")) w.push_back(Letter::e(idx.get<int>()));
      we.add_term(w, Scalar::from_string(term.at("coeff").get<std::string>()));
    }
    return we;
  } catch (const std::exception&) {
    return {};  // corrupt cache: recompute
  }
}

void store_rv_cache(const std::string& path, const WordElement& we) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : we.terms) {
    nlohmann::json idx = nlohmann::json::array();
    for (const Letter& l : w) idx.push_back(l.idx);
    terms.push_back({{"word", idx}, {"coeff", c.str()}});
  }
  std::ofstream out(path);
  if (out) out << nlohmann::json{{"terms", terms}}.dump();
}

}  // namespace

const WordElement& UqContext::root_vector_words(int j) const {
  if (j < 1 || j > N) throw std::invalid_argument("root_vector_words: bad index");
  std::lock_guard<std::mutex> lock(rv_mutex_);
  if (root_vectors_[j - 1]) return *root_vectors_[j - 1];

  std::string cache_path = rv_cache_path(*this, j);
  WordElement proj;
  bool from_cache = false;
  if (!cache_path.empty()) {
    proj = load_rv_cache(cache_path);
    from_cache = !proj.is_zero();
  }

  if (!from_cache) {
    // Every partial composite T_{i_k}...T_{i_{j-1}}(E_{alpha_{i_j}}) lies in
    // U_q^+ (the subword keeps alpha_{i_j} positive), so after each operator
    // the sorted form can be projected back onto its pure-E part. Without
    // this the unreduced words grow doubly exponentially in j.
    auto project = [this](const WordElement& raw) {
      WordElement out;
      for (const auto& [w, c] : raw.terms)
        for (const auto& [triple, c2] : straighten(w)) {
          if (!triple.f.empty() || !triple.lam.is_zero()) continue;
          Word ew;
          for (int idx : triple.e) ew.push_back(Letter::e(idx));
          out.add_term(ew, c * c2);
        }
      return out;
    };
    proj = WordElement::single({Letter::e(w0.letters[j - 1])});
    for (int k = j - 2; k >= 0; --k)
      proj = project(braid_word_image(*this, w0.letters[k], proj));
  }

  // Multiplicity law: each word uses the letter E_i exactly m_ij times where
  // beta_j = sum m_ij alpha_i; in particular each word has length ht(beta_j).
  for (const auto& [w, c] : proj.terms) {
    std::vector<int> mult(rs.rank, 0);
    for (const Letter& l : w) ++mult[l.idx - 1];
    if (mult != beta[j - 1].a)
      throw InvariantViolation("root_vector: expansion violates the multiplicity law");
  }
  if (proj.is_zero()) throw InvariantViolation("root_vector: empty expansion");

  if (!from_cache && !cache_path.empty()) store_rv_cache(cache_path, proj);
  root_vectors_[j - 1] = std::make_unique<WordElement>(std::move(proj));
  return *root_vectors_[j - 1];
}

const WordElement& UqContext::root_vector_words_f(int j) const {
  root_vector_words(j);  // ensure computed
  std::lock_guard<std::mutex> lock(rv_mutex_);
  if (!root_vectors_f_[j - 1])
    root_vectors_f_[j - 1] =
        std::make_unique<WordElement>(omega_words(*root_vectors_[j - 1]));
  return *root_vectors_f_[j - 1];
}

// ---------------------------------------------------------------------------
// Element constructors and the public operations.

AlgebraElement make_unit(CtxPtr ctx) {
  AlgebraElement x(ctx);
  x.add_term(PBWMonomial::unit(ctx->N, ctx->rs.rank), Scalar(1));
  return x;
}

AlgebraElement make_monomial(CtxPtr ctx, PBWMonomial m, Scalar c) {
  if (static_cast<int>(m.r.size()) != ctx->N || static_cast<int>(m.s.size()) != ctx->N ||
      m.lam.rank() != ctx->rs.rank)
    throw std::invalid_argument("make_monomial: shape mismatch");
  AlgebraElement x(ctx);
  x.add_term(m, c);
  return x;
}

AlgebraElement make_E(CtxPtr ctx, int i) {
  PBWMonomial m = PBWMonomial::unit(ctx->N, ctx->rs.rank);
  m.s[ctx->beta_index_of_simple(i) - 1] = 1;
  return make_monomial(std::move(ctx), std::move(m));
}

AlgebraElement make_F(CtxPtr ctx, int i) {
  PBWMonomial m = PBWMonomial::unit(ctx->N, ctx->rs.rank);
  m.r[ctx->beta_index_of_simple(i) - 1] = 1;
  return make_monomial(std::move(ctx), std::move(m));
}

AlgebraElement make_K(CtxPtr ctx, const Weight& lam) {
  PBWMonomial m = PBWMonomial::unit(ctx->N, ctx->rs.rank);
  m.lam = lam;
  return make_monomial(std::move(ctx), std::move(m));
}

WordElement serre_element(const UqContext& ctx, int i, int j) {
  if (i == j) throw std::invalid_argument("serre_element: need i != j");
  if (i < 1 || i > ctx.rs.rank || j < 1 || j > ctx.rs.rank)
    throw std::invalid_argument("serre_element: index out of range");
  const int aij = ctx.rs.cartan[i - 1][j - 1];
  const Scalar qi = ctx.q_i(i);
  WordElement rel;
  for (int l = 0; l <= 1 - aij; ++l) {
    Word w;
    for (int t = 0; t < 1 - aij - l; ++t) w.push_back(Letter::e(i));
    w.push_back(Letter::e(j));
    for (int t = 0; t < l; ++t) w.push_back(Letter::e(i));
    Scalar c = qbinom(1 - aij, l, qi);
    if (l % 2) c = -c;
    rel.add_term(w, c);
  }
  return rel;
}

AlgebraElement word_to_pbw(CtxPtr ctx, const WordElement& x) {
  AlgebraElement out(ctx);
  for (const auto& [w, c] : x.terms) {
    for (const auto& [triple, c2] : ctx->straighten(w)) {
      const auto fparts = ctx->pbw_of_fword(triple.f);
      const auto& eparts = ctx->pbw_of_eword(triple.e);
      for (const auto& [rvec, cf] : fparts)
        for (const auto& [svec, ce] : eparts)
          out.add_term(PBWMonomial{rvec, triple.lam, svec}, c * c2 * cf * ce);
    }
  }
  return out;
}

WordElement pbw_to_word(const UqContext& ctx, const AlgebraElement& x) {
  WordElement out;
  for (const auto& [m, c] : x.terms) {
    WordElement cur = WordElement::single(Word{}, c);
    for (int j = 1; j <= ctx.N; ++j)
      for (int t = 0; t < m.r[j - 1]; ++t) cur = cur * ctx.root_vector_words_f(j);
    if (!m.lam.is_zero()) cur = cur * WordElement::single({Letter::k(m.lam)});
    for (int j = 1; j <= ctx.N; ++j)
      for (int t = 0; t < m.s[j - 1]; ++t) cur = cur * ctx.root_vector_words(j);
    out += cur;
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.ctx != y.ctx) throw std::invalid_argument("multiply: mismatched contexts");
  const auto& ctx = *x.ctx;
  if (max_height(x) + max_height(y) > ctx.height_cap)
    throw ResourceError("multiply: combined height exceeds the working cap");
  return word_to_pbw(x.ctx, pbw_to_word(ctx, x) * pbw_to_word(ctx, y));
}

AlgebraElement omega(const AlgebraElement& x) {
  return word_to_pbw(x.ctx, omega_words(pbw_to_word(*x.ctx, x)));
}

namespace {

// Coproduct of a single letter, as a pair-of-words combination.
void delta_letter(const UqContext& ctx, const Letter& l,
                  std::vector<std::pair<std::pair<Word, Word>, Scalar>>& out) {
  out.clear();
  switch (l.kind) {
    case Letter::Kind::E: {
      Weight alpha = ctx.rs.alpha_as_weight(l.idx);
      out.push_back({{Word{l}, Word{}}, Scalar(1)});
      out.push_back({{Word{Letter::k(alpha)}, Word{l}}, Scalar(1)});
      break;
    }
    case Letter::Kind::F: {
      Weight alpha = ctx.rs.alpha_as_weight(l.idx);
      out.push_back({{Word{l}, Word{Letter::k(-alpha)}}, Scalar(1)});
      out.push_back({{Word{}, Word{l}}, Scalar(1)});
      break;
    }
    case Letter::Kind::K:
      out.push_back({{Word{l}, Word{l}}, Scalar(1)});
      break;
  }
}

}  // namespace

TensorElement coproduct(const AlgebraElement& x) {
  const auto& ctx = *x.ctx;
  TensorElement out(x.ctx);
  WordElement we = pbw_to_word(ctx, x);
  std::vector<std::pair<std::pair<Word, Word>, Scalar>> letter_image;
  for (const auto& [w, c] : we.terms) {
    std::map<std::pair<Word, Word>, Scalar> acc;
    acc[{Word{}, Word{}}] = c;
    for (const Letter& l : w) {
      delta_letter(ctx, l, letter_image);
      std::map<std::pair<Word, Word>, Scalar> next;
      for (const auto& [pw, pc] : acc)
        for (const auto& [img, ic] : letter_image) {
          Word left = pw.first;
          left.insert(left.end(), img.first.begin(), img.first.end());
          Word right = pw.second;
          right.insert(right.end(), img.second.begin(), img.second.end());
          auto [it, inserted] = next.try_emplace({std::move(left), std::move(right)}, pc * ic);
          if (!inserted) it->second += pc * ic;
        }
      acc = std::move(next);
    }
    for (const auto& [pw, pc] : acc) {
      if (pc.is_zero()) continue;
      AlgebraElement left = word_to_pbw(x.ctx, WordElement::single(pw.first));
      AlgebraElement right = word_to_pbw(x.ctx, WordElement::single(pw.second));
      for (const auto& [ml, cl] : left.terms)
        for (const auto& [mr, cr] : right.terms) out.add_term(ml, mr, pc * cl * cr);
    }
  }
  return out;
}

Scalar counit(const AlgebraElement& x) {
  // eps kills E and F and sends every K_lambda to 1.
  Scalar r(0);
  for (const auto& [m, c] : x.terms)
    if (m.is_cartan()) r += c;
  return r;
}

AlgebraElement antipode(const AlgebraElement& x) {
  const auto& ctx = *x.ctx;
  WordElement img;
  for (const auto& [w, c] : pbw_to_word(ctx, x).terms) {
    WordElement cur = WordElement::single(Word{}, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      WordElement s;
      switch (it->kind) {
        case Letter::Kind::E: {
          Weight alpha = ctx.rs.alpha_as_weight(it->idx);
          s.add_term(Word{Letter::k(-alpha), *it}, Scalar(-1));
          break;
        }
        case Letter::Kind::F: {
          Weight alpha = ctx.rs.alpha_as_weight(it->idx);
          s.add_term(Word{*it, Letter::k(alpha)}, Scalar(-1));
          break;
        }
        case Letter::Kind::K:
          s.add_term(Word{Letter::k(-it->lam)}, Scalar(1));
          break;
      }
      cur = cur * s;
    }
    img += cur;
  }
  return word_to_pbw(x.ctx, img);
}

std::vector<int> monomial_q_weight(const UqContext& ctx, const PBWMonomial& m) {
  std::vector<int> wt(ctx.rs.rank, 0);
  for (int j = 0; j < ctx.N; ++j)
    for (int i = 0; i < ctx.rs.rank; ++i)
      wt[i] += (m.s[j] - m.r[j]) * ctx.beta[j].a[i];
  return wt;
}

std::map<std::vector<int>, AlgebraElement> weight_components(const AlgebraElement& x) {
  std::map<std::vector<int>, AlgebraElement> out;
  for (const auto& [m, c] : x.terms) {
    auto wt = monomial_q_weight(*x.ctx, m);
    auto it = out.find(wt);
    if (it == out.end()) it = out.emplace(wt, AlgebraElement(x.ctx)).first;
    it->second.add_term(m, c);
  }
  return out;
}

long monomial_height(const UqContext& ctx, const PBWMonomial& m) {
  long h = 0;
  for (int j = 0; j < ctx.N; ++j)
    h += static_cast<long>(m.r[j] + m.s[j]) * ctx.beta_ht[j];
  return h;
}

long max_height(const AlgebraElement& x) {
  long h = 0;
  for (const auto& [m, c] : x.terms) h = std::max(h, monomial_height(*x.ctx, m));
  return h;
}

}  // namespace uqlat
