#pragma once

#include "uqlat/report.hpp"
#include "uqlat/uqcore.hpp"

namespace uqlat {

// Image of a single letter under T_i (or its inverse), as a word element.
WordElement braid_letter_image(const UqContext& ctx, int i, const Letter& l, bool inverse);

// T_i applied termwise/letterwise to a word element, without normalization.
WordElement braid_word_image(const UqContext& ctx, int i, const WordElement& x,
                             bool inverse = false);

// Lusztig braid operator on canonical elements.
AlgebraElement braid_T(const AlgebraElement& x, int i);
AlgebraElement braid_T_inverse(const AlgebraElement& x, int i);

// T_w = T_{i_1}...T_{i_s} for a reduced word; normalizes once at the end.
AlgebraElement braid_Tw(const AlgebraElement& x, const ReducedWord& w);

// Verifies the defining braid relations T_iT_jT_i... = T_jT_iT_j... (m_ij
// factors) on every generator E_k, F_k, K_{w_k}, and the T_i round trips.
Report check_braid_relations(CtxPtr ctx);

}  // namespace uqlat
