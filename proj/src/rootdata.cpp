#include "uqlat/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace uqlat {

namespace {

std::string int_vector_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) os << ",";
    os << v[k];
  }
  os << "]";
  return os.str();
}

void check_same_rank(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": rank mismatch");
}

}  // namespace

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  check_same_rank(rank(), o.rank(), "Weight+");
  Weight r = *this;
  for (int k = 0; k < rank(); ++k) r.c[k] += o.c[k];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  check_same_rank(rank(), o.rank(), "Weight-");
  Weight r = *this;
  for (int k = 0; k < rank(); ++k) r.c[k] -= o.c[k];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Weight Weight::scaled(int k) const {
  Weight r = *this;
  for (auto& x : r.c) x *= k;
  return r;
}

std::string Weight::str() const { return int_vector_str(c); }

int Root::height() const { return std::accumulate(a.begin(), a.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool Root::is_nonnegative() const {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

Root Root::operator+(const Root& o) const {
  check_same_rank(rank(), o.rank(), "Root+");
  Root r = *this;
  for (int k = 0; k < rank(); ++k) r.a[k] += o.a[k];
  return r;
}

Root Root::operator-(const Root& o) const {
  check_same_rank(rank(), o.rank(), "Root-");
  Root r = *this;
  for (int k = 0; k < rank(); ++k) r.a[k] -= o.a[k];
  return r;
}

std::string Root::str() const { return int_vector_str(a); }

std::string ReducedWord::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ",";
    os << letters[k];
  }
  os << ")";
  return os.str();
}

namespace {

struct CartanData {
  std::vector<std::vector<int>> a;
  std::vector<int> di;
};

CartanData cartan_data(char type, int n) {
  CartanData cd;
  cd.a.assign(n, std::vector<int>(n, 0));
  cd.di.assign(n, 1);
  for (int i = 0; i < n; ++i) cd.a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) cd.a[i][i + 1] = cd.a[i + 1][i] = -1;
  };
  switch (type) {
    case 'A':
      if (n < 1) throw std::invalid_argument("type A needs rank >= 1");
      chain(n);
      break;
    case 'B':
      // alpha_n short
      if (n < 2) throw std::invalid_argument("type B needs rank >= 2");
      chain(n);
      cd.a[n - 1][n - 2] = -2;
      for (int i = 0; i < n - 1; ++i) cd.di[i] = 2;
      break;
    case 'C':
      // alpha_n long
      if (n < 2) throw std::invalid_argument("type C needs rank >= 2");
      chain(n);
      cd.a[n - 2][n - 1] = -2;
      cd.di[n - 1] = 2;
      break;
    case 'D':
      if (n < 4) throw std::invalid_argument("type D needs rank >= 4");
      chain(n - 1);
      cd.a[n - 3][n - 1] = cd.a[n - 1][n - 3] = -1;
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("type F needs rank 4");
      chain(n);
      cd.a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      cd.di[0] = cd.di[1] = 2;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long
      if (n != 2) throw std::invalid_argument("type G needs rank 2");
      cd.a[0][1] = -3;
      cd.a[1][0] = -1;
      cd.di[1] = 3;
      break;
    case 'E':
      throw std::invalid_argument("type E has rank >= 6, beyond the rank cap");
    default:
      throw std::invalid_argument(std::string("unknown Lie type '") + type + "'");
  }
  return cd;
}

// Exact inverse of a small integer matrix.
std::vector<std::vector<mpq_class>> invert_matrix(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("invert_matrix: singular matrix");
    std::swap(a[col], a[piv]);
    mpq_class inv = 1 / a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootSystem RootSystem::build(char lie_type, int rank, int rank_cap) {
  if (rank < 1 || rank > rank_cap)
    throw std::invalid_argument("RootSystem: rank out of range (cap " +
                                std::to_string(rank_cap) + ")");
  CartanData cd = cartan_data(lie_type, rank);

  RootSystem rs;
  rs.lie_type = lie_type;
  rs.rank = rank;
  rs.cartan = cd.a;
  rs.di = cd.di;

  // Validity: diagonal 2, off-diagonal <= 0, symmetrizable by the d_i.
  for (int i = 0; i < rank; ++i) {
    if (rs.cartan[i][i] != 2) throw InvariantViolation("Cartan diagonal != 2");
    for (int j = 0; j < rank; ++j) {
      if (i != j && rs.cartan[i][j] > 0) throw InvariantViolation("Cartan off-diagonal > 0");
      if (rs.di[i] * rs.cartan[i][j] != rs.di[j] * rs.cartan[j][i])
        throw InvariantViolation("Cartan matrix not symmetrizable by d_i");
    }
  }

  // Pairing of fundamental weights: B = diag(d_i) * A^{-1}; d = lcm of the
  // denominators so that pairing_d = d*B is integral.
  auto ainv = invert_matrix(rs.cartan);
  std::vector<std::vector<mpq_class>> b(rank, std::vector<mpq_class>(rank));
  mpz_class den_lcm = 1;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      b[i][j] = mpq_class(rs.di[i]) * ainv[i][j];
      b[i][j].canonicalize();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), b[i][j].get_den().get_mpz_t());
    }
  if (!den_lcm.fits_sint_p()) throw InvariantViolation("pairing denominator overflow");
  rs.d = static_cast<int>(den_lcm.get_si());
  rs.pairing_d.assign(rank, std::vector<long>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      mpq_class scaled = mpq_class(rs.d) * b[i][j];
      scaled.canonicalize();
      if (scaled.get_den() != 1) throw InvariantViolation("pairing_d not integral");
      rs.pairing_d[i][j] = scaled.get_num().get_si();
      if (b[i][j] != b[j][i]) throw InvariantViolation("pairing not symmetric");
    }

  // Positive roots: close the simple roots under simple reflections.
  std::set<Root> pos;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    pos.insert(Root(e));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Root> cur(pos.begin(), pos.end());
    for (const Root& beta : cur)
      for (int i = 1; i <= rank; ++i) {
        Root img = rs.simple_reflection(i, beta);
        if (img.is_nonnegative() && !img.is_zero() && pos.insert(img).second) grew = true;
      }
  }
  rs.positive_roots.assign(pos.begin(), pos.end());
  rs.num_positive = static_cast<int>(rs.positive_roots.size());

  // rho = sum of fundamental weights; cross-check against half the sum of
  // positive roots.
  rs.rho = Weight(std::vector<int>(rank, 1));
  Root sum = Root::zero(rank);
  for (const Root& beta : rs.positive_roots) sum = sum + beta;
  Weight sum_w = rs.root_to_weight(sum);
  for (int i = 0; i < rank; ++i)
    if (sum_w.c[i] != 2) throw InvariantViolation("rho != (sum of positive roots)/2");

  return rs;
}

std::string RootSystem::type_str() const {
  return std::string(1, lie_type) + std::to_string(rank);
}

long RootSystem::pair_ww_d(const Weight& x, const Weight& y) const {
  check_same_rank(x.rank(), rank, "pair_ww_d");
  check_same_rank(y.rank(), rank, "pair_ww_d");
  long r = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      r += static_cast<long>(x.c[i]) * y.c[j] * pairing_d[i][j];
  return r;
}

long RootSystem::pair_wa_d(const Weight& x, const Root& b) const {
  // <w_i, a_j> = d_j delta_ij
  check_same_rank(x.rank(), rank, "pair_wa_d");
  check_same_rank(b.rank(), rank, "pair_wa_d");
  long r = 0;
  for (int i = 0; i < rank; ++i)
    r += static_cast<long>(x.c[i]) * b.a[i] * di[i];
  return r * d;
}

long RootSystem::pair_aa_d(const Root& b, const Root& g) const {
  // <a_i, a_j> = d_i a_{ij}
  check_same_rank(b.rank(), rank, "pair_aa_d");
  check_same_rank(g.rank(), rank, "pair_aa_d");
  long r = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      r += static_cast<long>(b.a[i]) * g.a[j] * di[i] * cartan[i][j];
  return r * d;
}

Weight RootSystem::alpha_as_weight(int i) const {
  if (i < 1 || i > rank) throw std::invalid_argument("alpha_as_weight: bad index");
  std::vector<int> c(rank);
  for (int k = 0; k < rank; ++k) c[k] = cartan[k][i - 1];
  return Weight(c);
}

Weight RootSystem::fundamental(int i) const {
  if (i < 1 || i > rank) throw std::invalid_argument("fundamental: bad index");
  std::vector<int> c(rank, 0);
  c[i - 1] = 1;
  return Weight(c);
}

Weight RootSystem::root_to_weight(const Root& b) const {
  check_same_rank(b.rank(), rank, "root_to_weight");
  std::vector<int> c(rank, 0);
  for (int k = 0; k < rank; ++k)
    for (int j = 0; j < rank; ++j) c[k] += cartan[k][j] * b.a[j];
  return Weight(c);
}

std::optional<Root> RootSystem::weight_to_root(const Weight& x) const {
  check_same_rank(x.rank(), rank, "weight_to_root");
  auto ainv = invert_matrix(cartan);
  std::vector<int> b(rank, 0);
  for (int j = 0; j < rank; ++j) {
    mpq_class v = 0;
    for (int k = 0; k < rank; ++k) v += ainv[j][k] * x.c[k];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    b[j] = static_cast<int>(v.get_num().get_si());
  }
  return Root(b);
}

Weight RootSystem::simple_reflection(int i, const Weight& x) const {
  if (i < 1 || i > rank) throw std::invalid_argument("simple_reflection: bad index");
  check_same_rank(x.rank(), rank, "simple_reflection");
  // s_i(x) = x - <x, a_i^vee> a_i, and <x, a_i^vee> is the i-th coordinate.
  Weight r = x;
  int coeff = x.c[i - 1];
  for (int k = 0; k < rank; ++k) r.c[k] -= coeff * cartan[k][i - 1];
  return r;
}

Root RootSystem::simple_reflection(int i, const Root& b) const {
  if (i < 1 || i > rank) throw std::invalid_argument("simple_reflection: bad index");
  check_same_rank(b.rank(), rank, "simple_reflection");
  // s_i(a_j) = a_j - a_{ij} a_i
  long coeff = 0;
  for (int j = 0; j < rank; ++j) coeff += static_cast<long>(cartan[i - 1][j]) * b.a[j];
  Root r = b;
  r.a[i - 1] -= static_cast<int>(coeff);
  return r;
}

Weight RootSystem::apply_word(const ReducedWord& w, const Weight& x) const {
  Weight r = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = simple_reflection(*it, r);
  return r;
}

Root RootSystem::apply_word(const ReducedWord& w, const Root& b) const {
  Root r = b;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = simple_reflection(*it, r);
  return r;
}

int RootSystem::coxeter_length(const ReducedWord& w) const {
  int count = 0;
  for (const Root& beta : positive_roots) {
    Root img = apply_word(w, beta);
    if (!img.is_nonnegative()) ++count;
  }
  return count;
}

bool RootSystem::is_reduced(const ReducedWord& w) const {
  for (int l : w.letters)
    if (l < 1 || l > rank) return false;
  return coxeter_length(w) == w.length();
}

ReducedWord RootSystem::longest_word() const {
  // Greedy descent: repeatedly reflect rho by the smallest index with a
  // positive coordinate. The pick sequence, read as a left-to-right product,
  // is a reduced expression for w_0 (using w_0 = w_0^{-1}).
  std::vector<int> word;
  Weight cur = rho;
  while (true) {
    int pick = 0;
    for (int i = 1; i <= rank; ++i)
      if (cur.c[i - 1] > 0) {
        pick = i;
        break;
      }
    if (pick == 0) break;
    cur = simple_reflection(pick, cur);
    word.push_back(pick);
  }
  ReducedWord w(std::move(word));
  if (w.length() != num_positive || cur != -rho)
    throw InvariantViolation("longest_word: greedy descent failed");
  return w;
}

std::vector<Root> RootSystem::beta_sequence(const ReducedWord& w) const {
  if (w.length() != num_positive)
    throw std::invalid_argument("beta_sequence: word length must equal the number of positive roots");
  if (!is_reduced(w))
    throw std::invalid_argument("beta_sequence: word is not reduced");
  std::vector<Root> seq;
  seq.reserve(w.length());
  for (int j = 0; j < w.length(); ++j) {
    std::vector<int> e(rank, 0);
    e[w.letters[j] - 1] = 1;
    Root beta(e);
    for (int k = j - 1; k >= 0; --k) beta = simple_reflection(w.letters[k], beta);
    seq.push_back(beta);
  }
  std::set<Root> as_set(seq.begin(), seq.end());
  std::set<Root> pos(positive_roots.begin(), positive_roots.end());
  if (as_set.size() != seq.size() || as_set != pos)
    throw std::invalid_argument("beta_sequence: word does not express w_0");
  return seq;
}

Weight RootSystem::dot_action(const ReducedWord& w, const Weight& x) const {
  return apply_word(w, x + rho) - rho;
}

std::pair<Weight, ReducedWord> RootSystem::dominant_representative(const Weight& x) const {
  // BFS over the dot orbit, tracking a word back to x for each member.
  std::map<Weight, std::vector<int>> seen;
  seen[x] = {};
  std::vector<Weight> frontier{x};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& y : frontier)
      for (int i = 1; i <= rank; ++i) {
        Weight z = dot_action(ReducedWord({i}), y);
        if (seen.count(z)) continue;
        std::vector<int> path = seen[y];
        path.insert(path.begin(), i);  // prepend: z = s_i . y
        seen[z] = std::move(path);
        next.push_back(z);
      }
    frontier = std::move(next);
  }
  std::optional<std::pair<Weight, ReducedWord>> found;
  for (const auto& [y, path] : seen) {
    Weight shifted = y + rho;
    bool dominant = std::all_of(shifted.c.begin(), shifted.c.end(),
                                [](int v) { return v >= 0; });
    if (!dominant) continue;
    if (found) throw InvariantViolation("dominant_representative: not unique");
    found = {y, ReducedWord(path)};
  }
  if (!found) throw InvariantViolation("dominant_representative: none found");
  return *found;
}

}  // namespace uqlat
