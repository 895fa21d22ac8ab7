#include "dynatomic/cyclotomic.hpp"

#include <utility>

namespace dynatomic::detail {

std::vector<mpq_class> cyclotomic_inverse(const std::vector<mpq_class>& a,
                                          const std::vector<std::vector<std::int64_t>>& power_table,
                                          std::size_t phi) {
  const std::size_t n = phi;
  // m[row][col]: coordinate `row` of a * x^col; augmented with e_0.
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  bool nonzero = false;
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[k]) == 0) continue;
      nonzero = true;
      const auto& red = power_table[k + col];
      for (std::size_t row = 0; row < n; ++row)
        if (red[row] != 0) m[row][col] += a[k] * mpq_class(static_cast<long>(red[row]));
    }
  }
  if (!nonzero) throw DomainError("inverse of zero");
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) throw DomainError("singular multiplication matrix in cyclotomic inverse");
    std::swap(m[c], m[piv]);
    const mpq_class inv = 1 / m[c][c];
    for (std::size_t j = c; j <= n; ++j) m[c][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      const mpq_class f = m[r][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<mpq_class> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n];
  return out;
}

}  // namespace dynatomic::detail
