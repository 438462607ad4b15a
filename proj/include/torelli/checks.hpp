#pragma once

// Machine checks of the concrete identities used in the proofs: lifts of the
// generators of S_g(Z), the Luft-group conjugation identity, the IA relation
// f K13 f^{-1} = K12 K13, and sigma-consistency of two lantern relations.

#include <array>
#include <cstdint>

#include "torelli/free_group.hpp"
#include "torelli/report.hpp"
#include "torelli/words.hpp"

namespace torelli {

/// T_{beta_i}^{-1}, whose image is [[Id, 0], [E_ii, Id]].
TorelliWord lift_word_diagonal(int g, int i);
/// T_{beta_i}^{-1} T_{gamma_ij} T_{beta_j}^{-1} with [gamma_ij] = b_i - b_j,
/// whose image is [[Id, 0], [SE_ij, Id]].
TorelliWord lift_word_symmetric(int g, int i, int j);

/// Every E_ii and SE_ij (i < j) lift. Requires g >= 1.
CheckReport verify_sg_lifts(int g);

/// The automorphism f of the free group: alpha_3 -> alpha_3 alpha_2.
FreeAutomorphism ia_f(int rank);
FreeAutomorphism ia_f_inverse(int rank);
/// f K13 f^{-1} = K12 K13 on every generator. Requires g >= 3.
CheckReport verify_ia_relation(int g);
/// Same check with a caller-supplied f and its claimed inverse.
CheckReport verify_ia_relation(int g, const FreeAutomorphism& f, const FreeAutomorphism& f_inv);

/// Psi(f) = gl_embed(Id - E34) = [[Id - E34, 0], [0, Id + E43]].
SpMatrix luft_psi_f(int g);
/// Psi(f) L(SE13) Psi(f)^{-1} = L(SE13) L(SE14) with L(S) = [[Id, 0], [S, Id]].
/// Requires g >= 4.
CheckReport verify_luft_conjugation(int g);
CheckReport verify_luft_conjugation(int g, const SpMatrix& psi_f);

/// Homology data for the curves of the two lantern configurations. Each
/// zeta/xi letter stands for the bounding pair map of the pair (zeta_i,
/// zeta'_i); sigma does not see the orientation of the pair.
struct LanternData {
  int genus = 4;
  GeneratorSpec gamma;
  std::array<GeneratorSpec, 3> zeta;
  std::array<GeneratorSpec, 3> xi;
};

/// The frozen assignment. The zeta configuration sits on handles 1, 2 and the
/// xi configuration on handles 3, 4; gamma separates the two. Requires g >= 4.
///   zeta_1 ~ b2, zeta_2 ~ b1, zeta_3 ~ b1 + b2, each cutting off a genus-1
///   piece spanned by the class of another zeta and a dual crossing the other
///   two zetas once;
///   xi_1 ~ b3, xi_2 ~ b4, xi_3 ~ b3 + b4, each cutting off handles 1, 2.
LanternData lantern_assignment(int g);

/// Both lantern relations and the combined identity in B_3, plus triviality
/// of Psi on both sides. Requires g >= 4.
CheckReport verify_lantern_sigma(int g);
CheckReport verify_lantern_sigma(const LanternData& data);

/// sigma(transport(f, s)) = f . sigma(s) on `cases` random pairs.
CheckReport verify_equivariance(int g, int cases, std::uint64_t seed);

/// Known coinvariant dimensions of B_0..B_3 and Lambda^3 H_2 vs B_3 / B_2.
CheckReport verify_lemma_coinvariants_report(int g);

}  // namespace torelli
