#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/pencil.hpp"

namespace pencil {

/// Tensors of maximal rank for m <= n <= 2m, up to equivalence.
enum class MaxRankForm { even, i, ii, iii, iv, v, vi, vii };

std::string to_string(MaxRankForm f);
std::optional<MaxRankForm> parse_form(const std::string& s);
inline constexpr MaxRankForm kAllForms[] = {MaxRankForm::even, MaxRankForm::i,  MaxRankForm::ii,
                                            MaxRankForm::iii,  MaxRankForm::iv, MaxRankForm::v,
                                            MaxRankForm::vi,   MaxRankForm::vii};

/// The 2x2x2 building block Y: (yE_2 + J_2; E_2), (E_2; J_2) or (C_1(c, s); E_2).
enum class YKind { jordan, infinite, rotation };

struct FormParams {
  MaxRankForm form = MaxRankForm::even;
  int alpha = 0;
  int ell_E = 0;
  YKind y = YKind::infinite;
  Rat y_eigen;   // for YKind::jordan and forms v
  Rat c;         // for YKind::rotation
  Rat s = 1;
  Rat x;         // eigenvalue of the (x; 1) block of form iii
};

/// ((E_m, O); (O E_{n/2}; O O)), requires m <= n <= 2m.
Pencil2 maxrank_example(int m, int n);

/// Direct sum listed for the form: Y blocks, then ((0,1);(1,0)) blocks, then
/// the form's extra block.
Pencil2 classification_form(const FormParams& p);

/// A = [[X11, X12, O], [O, X22, O]], B = [[O, Y], [O, O]] with X11 of size
/// n - l, X22 of size m + l - n and Y of size l. Requires m <= n <= 2m and
/// n - m <= l <= n / 2.
Pencil2 cor_x2mn(int m, int n, int l, const RatMatrix& x11, const RatMatrix& x12, const RatMatrix& x22,
                 const RatMatrix& y);
/// Same with identity X11, X22, Y and zero X12.
Pencil2 cor_x2mn(int m, int n, int l);

/// Diag((E_{n_j}; x E + J_{n_j})_j, (E_{n'}; tail)).
Pencil2 jordan_rank_witness(const std::vector<int>& sizes, const Rat& x, const RatMatrix& tail);

}  // namespace pencil
