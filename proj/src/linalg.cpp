#include "flagsym/linalg.hpp"

#include <stdexcept>

namespace flagsym {

namespace {

Integer exact_div(const Integer& num, const Integer& den) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw std::logic_error("fraction-free elimination produced a non-exact division");
  }
  return q;
}

}  // namespace

KernelBasis kernel_basis(const std::vector<std::vector<int>>& rows, int columns) {
  const int m = static_cast<int>(rows.size());
  std::vector<std::vector<Integer>> a(m, std::vector<Integer>(columns));
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(rows[r].size()) != columns) {
      throw std::invalid_argument("ragged constraint matrix");
    }
    for (int c = 0; c < columns; ++c) a[r][c] = rows[r][c];
  }

  KernelBasis result;
  result.columns = columns;

  // One-step fraction-free Gauss-Jordan: every update divides by the
  // previous pivot and stays integral.
  Integer prev = 1;
  int next_pivot_row = 0;
  int col = 0;
  for (; col < columns && next_pivot_row < m; ++col) {
    int sel = -1;
    for (int r = next_pivot_row; r < m; ++r) {
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) {
      result.free_columns.push_back(col);
      continue;
    }
    std::swap(a[next_pivot_row], a[sel]);
    const std::vector<Integer>& pivot_row = a[next_pivot_row];
    const Integer pivot = pivot_row[col];
    for (int r = 0; r < m; ++r) {
      if (r == next_pivot_row) continue;
      const Integer factor = a[r][col];
      for (int c = 0; c < columns; ++c) {
        a[r][c] = exact_div(pivot * a[r][c] - factor * pivot_row[c], prev);
      }
    }
    prev = pivot;
    result.pivot_columns.push_back(col);
    ++next_pivot_row;
  }
  for (; col < columns; ++col) result.free_columns.push_back(col);
  result.rank = static_cast<int>(result.pivot_columns.size());

  // RREF basis: unit at the free column, -entry/pivot at the pivot columns.
  for (int f : result.free_columns) {
    std::vector<Rational> v(columns, Rational(0));
    v[f] = 1;
    for (int p = 0; p < result.rank; ++p) {
      const int pc = result.pivot_columns[p];
      if (a[p][f] != 0) {
        Rational entry(a[p][f]);
        entry /= Rational(a[p][pc]);
        v[pc] = -entry;
      }
    }
    result.basis.push_back(std::move(v));
  }
  return result;
}

}  // namespace flagsym
