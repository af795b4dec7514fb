#include "helixlab/chase.hpp"

#include <stdexcept>

namespace helixlab {

ExactComplex::ExactComplex(size_t len)
    : d_(len, RankValue::unknown()), rk_(len + 1, RankValue::unknown()) {
  if (len == 0) throw std::logic_error("empty exact complex");
  rk_.front() = RankValue::exact(0);
  rk_.back() = RankValue::exact(0);
}

void ExactComplex::set_dim(size_t i, const RankValue& v) {
  d_.at(i) = meet(d_.at(i), v);
}

void ExactComplex::fact_rank(size_t i, const RankValue& v) {
  rk_.at(i + 1) = meet(rk_.at(i + 1), v);
}

void ExactComplex::fact_injective(size_t i) {
  // out of T_i injective <=> nothing comes in (exactness at T_i)
  rk_.at(i) = meet(rk_.at(i), RankValue::exact(0));
  eq_.emplace_back(i + 1, i);
}

void ExactComplex::fact_surjective(size_t i) { eq_.emplace_back(i + 1, i + 1); }

void ExactComplex::solve() {
  const size_t m = d_.size();
  for (int sweep = 0; sweep < 10000; ++sweep) {
    bool changed = false;
    auto tighten = [&changed](RankValue& x, const RankValue& with) {
      RankValue nv = meet(x, with);
      if (!(nv == x)) {
        x = nv;
        changed = true;
      }
    };
    for (size_t i = 0; i < m; ++i) {
      // exactness at T_i: d[i] = rk[i] + rk[i+1]
      tighten(d_[i], add(rk_[i], rk_[i + 1]));
      tighten(rk_[i], sub_clamped(d_[i], rk_[i + 1]));
      tighten(rk_[i + 1], sub_clamped(d_[i], rk_[i]));
    }
    for (const auto& [a, b] : eq_) {
      tighten(rk_[a], d_[b]);
      tighten(d_[b], rk_[a]);
    }
    if (!changed) return;
  }
  throw std::logic_error("exact-complex propagation did not converge");
}

LesChase::LesChase(int top_q)
    : top_(top_q), cx_(3 * (static_cast<size_t>(top_q) + 1)) {
  if (top_q < 0) throw std::logic_error("LES chase needs top_q >= 0");
}

size_t LesChase::idx(int slot, int q) const {
  if (slot < 0 || slot > 2 || q < 0 || q > top_)
    throw std::logic_error("LES chase slot/degree out of range");
  return 3 * static_cast<size_t>(q) + static_cast<size_t>(slot);
}

void LesChase::set(int slot, int q, const RankValue& v) {
  cx_.set_dim(idx(slot, q), v);
}

void LesChase::set_table(int slot, const Table& t) {
  for (int q = 0; q <= top_; ++q)
    set(slot, q,
        static_cast<size_t>(q) < t.size() ? t[static_cast<size_t>(q)]
                                          : RankValue::exact(0));
}

void LesChase::fact_rank(int slot, int q, const RankValue& v) {
  cx_.fact_rank(idx(slot, q), v);
}

void LesChase::fact_injective(int slot, int q) {
  cx_.fact_injective(idx(slot, q));
}

void LesChase::fact_surjective(int slot, int q) {
  cx_.fact_surjective(idx(slot, q));
}

void LesChase::solve() { cx_.solve(); }

Table LesChase::table(int slot) const {
  Table out;
  out.reserve(static_cast<size_t>(top_) + 1);
  for (int q = 0; q <= top_; ++q) out.push_back(cx_.dim(idx(slot, q)));
  return out;
}

RankValue LesChase::dim(int slot, int q) const { return cx_.dim(idx(slot, q)); }

}  // namespace helixlab
