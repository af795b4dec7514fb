#pragma once

#include <stdexcept>
#include <string>

namespace helixlab {

enum class VarietyKind { Projective, Quadric };

// The two ambient families the catalog lives on: P^n (n >= 1) and the
// smooth odd quadric Q_n in P^(n+1) (n >= 3 odd). dim X = n in both cases.
struct Variety {
  VarietyKind kind = VarietyKind::Projective;
  int n = 1;

  static Variety projective(int n) {
    if (n < 1) throw std::invalid_argument("P^n requires n >= 1");
    return Variety{VarietyKind::Projective, n};
  }
  static Variety quadric(int n) {
    if (n < 3 || n % 2 == 0)
      throw std::invalid_argument("Q^n requires odd n >= 3");
    return Variety{VarietyKind::Quadric, n};
  }

  bool is_projective() const { return kind == VarietyKind::Projective; }
  bool is_quadric() const { return kind == VarietyKind::Quadric; }

  int dim() const { return n; }
  // dimension of the ambient projective space (P^n itself, or P^(n+1)).
  int ambient_dim() const { return is_quadric() ? n + 1 : n; }
  // K_X = O(canonical_twist): -n-1 on P^n, -n on Q_n.
  int canonical_twist() const { return is_quadric() ? -n : -n - 1; }
  // helix period = collection length.
  int period() const { return n + 1; }

  // spinor rank 2^((n-1)/2) and h^0(Sigma) = 2^((n+1)/2) exponents.
  int spinor_rank_log2() const {
    if (!is_quadric()) throw std::logic_error("spinor data on quadrics only");
    return (n - 1) / 2;
  }

  std::string str() const {
    return (is_quadric() ? "Q" : "P") + std::to_string(n);
  }

  bool operator==(const Variety& o) const { return kind == o.kind && n == o.n; }
};

// "P3" / "Q5" spelled the way the CLI accepts them.
Variety parse_variety(const std::string& s);

}  // namespace helixlab
