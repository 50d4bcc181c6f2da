#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uqlat/braid.hpp"
#include "uqlat/cato.hpp"
#include "uqlat/lattice.hpp"
#include "uqlat/oqsl2.hpp"
#include "uqlat/report.hpp"
#include "uqlat/rng.hpp"
#include "uqlat/uqcore.hpp"

namespace uqlat {

struct SessionConfig {
  unsigned long p = 5;
  char lie_type = 'A';
  int rank = 2;
  std::optional<ReducedWord> word_override;
  int height_cap = 12;
  int depth_cap = 8;
  int rank_cap = 4;
  std::vector<std::string> suites;  // empty = all
  std::string format = "table";     // json | table | csv
  std::uint64_t seed = 12345;
};

// Default q-specialization for a root system: qprime = 1 + p, q = qprime^d.
QSpec standard_spec(const RootSystem& rs, unsigned long p = 5);
CtxPtr make_context(char lie_type, int rank, const SessionConfig& cfg);

// Random element/word generators for property tests (deterministic in rng).
AlgebraElement rand_element(CtxPtr ctx, Rng& rng, int max_height, int max_terms,
                            int lam_bound);
Word rand_word(const RootSystem& rs, Rng& rng, int max_len, int lam_bound, bool allow_k);

// Hopf axiom checks on a single element.
bool hopf_coassociative(const AlgebraElement& x);
bool hopf_counit_ok(const AlgebraElement& x);
bool hopf_antipode_ok(const AlgebraElement& x);
// min over tensor terms of Delta(x) of v_p(c) - n(ht(left) + ht(right)).
std::optional<long> coproduct_lattice_slack(const AlgebraElement& x, long n);

// Acceptance criteria. Each returns a report whose checks all pass exactly
// when the criterion holds.
Report criterion_serre();
Report criterion_braid_relations();
Report criterion_root_vectors();
Report criterion_pbw_lattice();
Report criterion_word_independence();
Report criterion_norms(std::uint64_t seed);
Report criterion_hopf(std::uint64_t seed);
Report criterion_verma_dims();
Report criterion_irreducibility();
Report criterion_blocks();
Report criterion_casimir_center(std::uint64_t seed);
Report criterion_separating(std::uint64_t seed);
Report criterion_oq(std::uint64_t seed);
Report criterion_roundtrip(std::uint64_t seed);

// Suites group the criteria for the CLI runner.
std::vector<std::string> all_suites();
std::vector<Report> run_suite(const std::string& name, const SessionConfig& cfg);
std::vector<Report> run_verify(const SessionConfig& cfg);

}  // namespace uqlat
