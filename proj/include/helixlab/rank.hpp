#pragma once

#include "helixlab/ints.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace helixlab {

// A cohomology rank the solver has not fully pinned down is an interval
// [lo, hi], hi possibly infinite. Exact values are intervals with lo == hi.
// All engine arithmetic is monotone in these intervals, so the reported
// range always contains the true value.
struct RankValue {
  Int lo = 0;
  Int hi = 0;        // meaningful only when !hi_inf
  bool hi_inf = false;

  static RankValue exact(Int v) {
    RankValue r;
    r.hi = std::move(v);
    r.lo = r.hi;
    return r;
  }
  static RankValue interval(Int a, Int b) {
    RankValue r;
    r.lo = std::move(a);
    r.hi = std::move(b);
    if (r.lo > r.hi) throw std::logic_error("rank interval: lo > hi");
    return r;
  }
  static RankValue at_least(Int a) {
    RankValue r;
    r.lo = std::move(a);
    r.hi_inf = true;
    return r;
  }
  static RankValue unknown() { return at_least(0); }

  bool exact_p() const { return !hi_inf && lo == hi; }
  bool is_zero() const { return exact_p() && lo == 0; }
  const Int& value() const {
    if (!exact_p()) throw std::logic_error("rank interval is not exact");
    return lo;
  }

  bool operator==(const RankValue& o) const {
    return lo == o.lo && hi_inf == o.hi_inf && (hi_inf || hi == o.hi);
  }

  std::string str() const {
    if (exact_p()) return lo.str();
    return lo.str() + ".." + (hi_inf ? std::string("inf") : hi.str());
  }
};

// Intersection of two intervals known to contain the same true value.
// An empty intersection means two derivations disagree -> engine bug.
inline RankValue meet(const RankValue& a, const RankValue& b) {
  RankValue r;
  r.lo = a.lo > b.lo ? a.lo : b.lo;
  r.hi_inf = a.hi_inf && b.hi_inf;
  if (!r.hi_inf) {
    if (a.hi_inf) r.hi = b.hi;
    else if (b.hi_inf) r.hi = a.hi;
    else r.hi = a.hi < b.hi ? a.hi : b.hi;
    if (r.lo > r.hi)
      throw std::logic_error("rank meet: contradictory intervals " + a.str() +
                             " ^ " + b.str());
  }
  return r;
}

inline RankValue add(const RankValue& a, const RankValue& b) {
  RankValue r;
  r.lo = a.lo + b.lo;
  r.hi_inf = a.hi_inf || b.hi_inf;
  if (!r.hi_inf) r.hi = a.hi + b.hi;
  return r;
}

// Interval difference clamped at 0 (ranks are nonnegative).
inline RankValue sub_clamped(const RankValue& a, const RankValue& b) {
  RankValue r;
  if (b.hi_inf) {
    r.lo = 0;
  } else {
    r.lo = a.lo - b.hi;
    if (r.lo < 0) r.lo = 0;
  }
  r.hi_inf = a.hi_inf;
  if (!r.hi_inf) {
    r.hi = a.hi - b.lo;
    if (r.hi < 0) r.hi = 0;
    if (r.lo > r.hi) r.lo = r.hi;  // cannot happen for consistent inputs
  }
  return r;
}

inline RankValue mul_scalar(const RankValue& a, const Int& m) {
  if (m < 0) throw std::logic_error("rank scale by negative");
  if (m == 0) return RankValue::exact(0);
  RankValue r;
  r.lo = a.lo * m;
  r.hi_inf = a.hi_inf;
  if (!r.hi_inf) r.hi = a.hi * m;
  return r;
}

inline RankValue mul(const RankValue& a, const RankValue& b) {
  RankValue r;
  r.lo = a.lo * b.lo;
  r.hi_inf = (a.hi_inf && !b.is_zero()) || (b.hi_inf && !a.is_zero());
  if (!r.hi_inf) r.hi = a.hi * b.hi;
  return r;
}

// Cohomology table H^0..H^top (or Ext^0..Ext^top).
using Table = std::vector<RankValue>;

inline bool table_exact(const Table& t) {
  for (const auto& v : t)
    if (!v.exact_p()) return false;
  return true;
}

inline Table table_meet(const Table& a, const Table& b) {
  if (a.size() != b.size()) throw std::logic_error("table meet: size");
  Table r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = meet(a[i], b[i]);
  return r;
}

inline Table table_add(const Table& a, const Table& b) {
  if (a.size() != b.size()) throw std::logic_error("table add: size");
  Table r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i]);
  return r;
}

inline Table table_scale(const Table& a, const Int& m) {
  Table r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mul_scalar(a[i], m);
  return r;
}

// H^q(F) -> H^(top-q)(F') flip used by Serre duality.
inline Table table_flip(const Table& a) { return Table(a.rbegin(), a.rend()); }

inline Table table_zero(size_t len) { return Table(len, RankValue::exact(0)); }

// Alternating-sum constraint: sum_q (-1)^q rank_q == chi. Each entry is
// re-solved from the constraint and intersected with its current interval;
// pins the last unknown entry of an otherwise exact table, and generally
// squeezes bounds. Repeats until fixpoint (cheap: tables have <= 9 rows).
inline void chi_tighten(Table& t, const Int& chi) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t q = 0; q < t.size(); ++q) {
      // rest = chi_signed - (-1)^q * r_q  taken over all other entries:
      // bounds for sum_{p != q} (-1)^p r_p.
      Int rest_lo = 0, rest_hi = 0;
      bool lo_inf = false, hi_inf = false;
      for (size_t p = 0; p < t.size(); ++p) {
        if (p == q) continue;
        if (p % 2 == 0) {
          rest_lo += t[p].lo;
          if (t[p].hi_inf) hi_inf = true;
          else rest_hi += t[p].hi;
        } else {
          rest_hi -= t[p].lo;
          if (t[p].hi_inf) lo_inf = true;
          else rest_lo -= t[p].hi;
        }
      }
      // (-1)^q r_q = chi - rest  =>  r_q in +-(chi - [rest_lo, rest_hi]).
      RankValue cons = RankValue::unknown();
      if (q % 2 == 0) {
        if (!hi_inf) {
          Int lo = chi - rest_hi;
          if (lo < 0) lo = 0;
          cons.lo = lo;
        }
        if (!lo_inf) {
          cons.hi = chi - rest_lo;
          cons.hi_inf = false;
          if (cons.hi < 0)
            throw std::logic_error("chi constraint infeasible");
        }
      } else {
        if (!lo_inf) {
          Int lo = rest_lo - chi;
          if (lo < 0) lo = 0;
          cons.lo = lo;
        }
        if (!hi_inf) {
          cons.hi = rest_hi - chi;
          cons.hi_inf = false;
          if (cons.hi < 0)
            throw std::logic_error("chi constraint infeasible");
        }
      }
      RankValue m = meet(t[q], cons);
      if (!(m == t[q])) {
        t[q] = m;
        changed = true;
      }
    }
  }
}

}  // namespace helixlab
