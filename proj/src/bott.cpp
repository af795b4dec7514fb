#include "helixlab/bott.hpp"

#include <stdexcept>

namespace helixlab {

Table bott(int n, int p, long long t) {
  Table out = table_zero(static_cast<size_t>(n) + 1);
  if (p < 0 || p > n) return out;
  if (t > p) {
    out[0] = RankValue::exact(binomial(t + n - p, t) * binomial(t - 1, p));
  } else if (t == 0) {
    out[static_cast<size_t>(p)] = RankValue::exact(1);
  } else if (t < p - n) {
    out[static_cast<size_t>(n)] =
        RankValue::exact(binomial(-t + p, -t) * binomial(-t - 1, n - p));
  }
  return out;
}

Int h0_line_q(int n, long long t) {
  return binomial(t + n + 1, n + 1) - binomial(t + n - 1, n + 1);
}

Table cohom_line_q(int n, long long t) {
  Table out = table_zero(static_cast<size_t>(n) + 1);
  out[0] = RankValue::exact(h0_line_q(n, t));
  out[static_cast<size_t>(n)] = RankValue::exact(h0_line_q(n, -t - n));
  return out;
}

Int h0_spinor_q(int n, long long t) {
  if (t < 0) return 0;
  // s(j) = 2^((n+1)/2) h0(O(j)) - s(j-1), exact because the middle
  // cohomology of Sigma(j) vanishes for every j.
  const Int r = Int(1) << ((n + 1) / 2);
  Int s = 0;
  for (long long j = 0; j <= t; ++j) s = r * h0_line_q(n, j) - s;
  if (s < 0) throw std::logic_error("spinor section count went negative");
  return s;
}

Table cohom_spinor_q(int n, long long t) {
  Table out = table_zero(static_cast<size_t>(n) + 1);
  out[0] = RankValue::exact(h0_spinor_q(n, t));
  out[static_cast<size_t>(n)] = RankValue::exact(h0_spinor_q(n, -t - n - 1));
  return out;
}

}  // namespace helixlab
