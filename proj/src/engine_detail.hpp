#pragma once

// internal helpers shared by the engine translation units; not installed.

#include "helixlab/bott.hpp"
#include "helixlab/engine.hpp"
#include "helixlab/expr.hpp"

#include <stdexcept>
#include <utility>

namespace helixlab {

struct Engine::DepthGuard {
  Engine& e;
  explicit DepthGuard(Engine& eng) : e(eng) {
    int cap = 16 * (e.variety().n + 2);
    if (++e.depth_ > cap)
      throw std::runtime_error("engine recursion depth cap exceeded");
  }
  ~DepthGuard() { --e.depth_; }
};

namespace detail {

inline Atom twisted(const Atom& a, long long dt) {
  return Atom{a.kind, a.p, a.t + dt};
}

// N_j = sum_{i=0}^{j} C(n+1, i): width of the tautological ladder step
inline Int psi_ladder_width(int n, int j) {
  Int s = 0;
  for (int i = 0; i <= j; ++i) s += binomial(n + 1, i);
  return s;
}

inline Table delta_table(size_t len, size_t q) {
  Table t = table_zero(len);
  t.at(q) = RankValue::exact(1);
  return t;
}

// alternating sum of an exact table
inline Int alt_sum(const Table& t) {
  Int s = 0;
  int sign = 1;
  for (const auto& r : t) {
    s += sign * r.value();
    sign = -sign;
  }
  return s;
}

}  // namespace detail
}  // namespace helixlab
