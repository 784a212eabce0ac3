#pragma once

#include <vector>

#include "flagsym/rational.hpp"

namespace flagsym {

/// Kernel of an integer matrix in reduced-row-echelon normalization.
/// basis[b] is the kernel vector with 1 at free_columns[b], the RREF
/// entries negated at the pivot columns, and 0 at the other free columns.
struct KernelBasis {
  int columns = 0;
  int rank = 0;
  std::vector<int> pivot_columns;
  std::vector<int> free_columns;
  std::vector<std::vector<Rational>> basis;
};

/// Fraction-free Gauss-Jordan elimination (Bareiss one-step divisions stay
/// integral). Pivoting is deterministic: leftmost column, first usable row.
KernelBasis kernel_basis(const std::vector<std::vector<int>>& rows, int columns);

}  // namespace flagsym
