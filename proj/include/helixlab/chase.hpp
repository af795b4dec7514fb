#pragma once

#include "helixlab/rank.hpp"

#include <cstddef>
#include <vector>

namespace helixlab {

// A finite exact complex 0 -> T_0 -> T_1 -> ... -> T_(m-1) -> 0 of spaces
// with interval-known dimensions. Exactness at T_i says
//     dim T_i = rank(into T_i) + rank(out of T_i),
// so with rk[i] := rank of the map T_(i-1) -> T_i (rk[0] = rk[m] = 0) the
// whole complex is the chain system  d[i] = rk[i] + rk[i+1].  solve() runs
// interval propagation over that system plus any injectivity/surjectivity/
// rank facts until a fixpoint; contradictory constraints throw logic_error
// (an engine bug, not a user error).
class ExactComplex {
 public:
  explicit ExactComplex(size_t len);

  void set_dim(size_t i, const RankValue& v);

  // facts about the map T_i -> T_(i+1):
  void fact_rank(size_t i, const RankValue& v);
  void fact_injective(size_t i);   // rank = dim T_i
  void fact_surjective(size_t i);  // rank = dim T_(i+1)

  void solve();

  const RankValue& dim(size_t i) const { return d_.at(i); }
  RankValue map_rank(size_t i) const { return rk_.at(i + 1); }

 private:
  std::vector<RankValue> d_;
  std::vector<RankValue> rk_;               // rk_[i]: map into T_i; size m+1
  std::vector<std::pair<size_t, size_t>> eq_;  // rk_[first] == d_[second]
};

// Long exact sequence of a short exact sequence 0 -> S0 -> S1 -> S2 -> 0
// under a (co)homological functor: terms X^q(S0), X^q(S1), X^q(S2) for
// q = 0..top_q, connected S2-slot -> next-degree S0-slot. The caller picks
// the slot order (covariant: A,B,C; contravariant: C,B,A).
class LesChase {
 public:
  explicit LesChase(int top_q);

  void set(int slot, int q, const RankValue& v);
  // pads with exact zeros when the table is shorter than top_q+1.
  void set_table(int slot, const Table& t);

  // facts about the map leaving (slot, q); slot 2 leaves via the connecting
  // map into (0, q+1).
  void fact_rank(int slot, int q, const RankValue& v);
  void fact_injective(int slot, int q);
  void fact_surjective(int slot, int q);

  void solve();

  Table table(int slot) const;  // length top_q+1
  RankValue dim(int slot, int q) const;

 private:
  int top_;
  ExactComplex cx_;
  size_t idx(int slot, int q) const;
};

}  // namespace helixlab
