// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is exact; the parameters (types, ranks, levels, depths,
// sample counts) are pinned in the criterion implementations.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <vector>

#include "uqlat/verify.hpp"

using namespace uqlat;

namespace {

struct Criterion {
  int id;
  const char* title;
  Report (*run)();
};

constexpr std::uint64_t kSeed = 12345;

Report run_serre() { return criterion_serre(); }
Report run_braid() { return criterion_braid_relations(); }
Report run_rootvec() { return criterion_root_vectors(); }
Report run_lattice() { return criterion_pbw_lattice(); }
Report run_indep() { return criterion_word_independence(); }
Report run_norms() { return criterion_norms(kSeed); }
Report run_hopf() { return criterion_hopf(kSeed); }
Report run_verma() { return criterion_verma_dims(); }
Report run_irred() { return criterion_irreducibility(); }
Report run_blocks() { return criterion_blocks(); }
Report run_casimir() { return criterion_casimir_center(kSeed); }
Report run_separating() { return criterion_separating(kSeed); }
Report run_oq() { return criterion_oq(kSeed); }
Report run_roundtrip() { return criterion_roundtrip(kSeed); }

const std::vector<Criterion> kCriteria = {
    {1, "Serre relators normalize to 0 (A2, B2, G2, with omega-images)", run_serre},
    {2, "braid relations and operator inverses (A2 3-fold, B2 4-fold)", run_braid},
    {3, "root-vector integrality and multiplicity law (A2, B2)", run_rootvec},
    {4, "PBW lattice theorem, two-sided (A1 n=m..m+2 ht<=6; A2 n=m..m+1 ht<=5)", run_lattice},
    {5, "reduced-word independence (A2 (1,2,1) vs (2,1,2), ht<=4)", run_indep},
    {6, "norm values and submultiplicativity (500 random pairs)", run_norms},
    {7, "Hopf axioms and Delta-lattice compatibility", run_hopf},
    {8, "Verma weight dimensions match the Kostant oracle (A2, ht<=8)", run_verma},
    {9, "irreducibility criterion vs maximal-vector search (A1 depth 8, A2 depth 6)", run_irred},
    {10, "central characters: Casimir eigenvalues and dot-orbit partition", run_blocks},
    {11, "sl2 Casimir centrality and the center of U_n", run_casimir},
    {12, "separating elements (20 random instances, grid |coords|<=10)", run_separating},
    {13, "O_q(SL2): confluence, determinant, Hopf, degree certificates", run_oq},
    {14, "word<->PBW and parse/print round trips", run_roundtrip},
};

}  // namespace

int main() {
  int failures = 0;
  auto total_start = std::chrono::steady_clock::now();
  for (const Criterion& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::size_t nchecks = 0, nfail = 0;
    std::string error;
    try {
      Report rep = c.run();
      pass = rep.passed();
      nchecks = rep.checks.size();
      nfail = rep.failures();
      if (!pass) {
        for (const auto& chk : rep.checks)
          if (!chk.pass) {
            error = chk.check + " @ " + chk.instance +
                    (chk.witness.empty() ? "" : " [" + chk.witness + "]");
            break;
          }
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%zu checks, %lld ms)\n", pass ? "PASS" : "FAIL",
                c.id, c.title, nchecks, static_cast<long long>(ms));
    if (!pass && !error.empty()) std::printf("       first failure: %s\n", error.c_str());
    std::fflush(stdout);
  }
  auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - total_start)
                      .count();
  std::printf("%d/%zu criteria passed (%lld ms total)\n",
              static_cast<int>(kCriteria.size()) - failures, kCriteria.size(),
              static_cast<long long>(total_ms));
  return failures == 0 ? 0 : 1;
}
