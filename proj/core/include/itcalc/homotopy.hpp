#pragma once

// The homotopy category K^b: Hom spaces modulo null-homotopic maps, radical
// minimization, brutal truncations and the relative tilting checks.

#include "itcalc/complex.hpp"
#include "itcalc/itcore.hpp"
#include "itcalc/relstruct.hpp"

#include <string>
#include <vector>

namespace itcalc {

/// dim Hom_K(x, y[shift]).
std::size_t homotopy_hom_dim(const Complex& x, const Complex& y, int shift);

/// Homotopy equivalent complex in which no differential component between
/// indecomposable summands is invertible, with zero end terms dropped.
Complex minimize(const Complex& c, const Settings& settings = {});

/// Width n of the support [-n, 0] of the minimized, shifted complex.
int term_length(const Complex& c, const Settings& settings = {});

enum class Truncation { AtMost, AtLeast };

/// Brutal truncation: keeps the terms in degrees <= n (AtMost) or >= n
/// (AtLeast) together with the differentials between them.
Complex truncate(const Complex& c, Truncation mode, int n);

struct TiltingReport {
  bool self_orthogonal = false;
  int summand_count = 0;
  int simple_count = 0;
  bool generation_heuristic = false;
  int term_length = 0;
  /// dim End_K(T).
  std::size_t endomorphism_dim = 0;
  /// Shifts i with Hom_K(T, T[i]) != 0, i != 0.
  std::vector<int> nonzero_shifts;
};

TiltingReport check_relative_tilting(const RelStructure& f, const Complex& t);

enum class Verdict { Holds, Violated, Inconclusive };

std::string verdict_name(Verdict v);

struct BoundReport {
  PhiResult left;   // phi-dim_F(A)
  PhiResult right;  // phi-dim(B)
  int L = 0;
  int R = 0;
  int n = 0;
  bool holds = false;
  Verdict verdict = Verdict::Inconclusive;
  /// R - (L - n) and (L + n + 2) - R.
  int lower_slack = 0;
  int upper_slack = 0;
  std::size_t endomorphism_dim = 0;
  std::size_t dim_B = 0;
  std::vector<std::string> warnings;
};

/// Checks phi-dim_F(A) - t(T) <= phi-dim(B) <= phi-dim_F(A) + t(T) + 2.
/// `family_a` lives over A, `family_b` over B; B is taken with G = 0.
BoundReport verify_bound(const RelStructure& fA, const Complex& t, const AlgebraPtr& B, const Family& family_a,
                         const Family& family_b, int horizon);

}  // namespace itcalc
