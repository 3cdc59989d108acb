#include "cubic/census.hpp"

#include "cubic/curve.hpp"
#include "cubic/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace cubic {
namespace {

constexpr std::int64_t kMaxEnumerableDegree = 100000;

std::int64_t checked_degree(Integer const& d) {
  if (d <= 0) throw PreconditionError(Errc::NonPositiveDegree, "d = " + d.str());
  if (d > kMaxEnumerableDegree)
    throw PreconditionError(Errc::InvalidRange, "d = " + d.str() + " is too large to enumerate");
  return to_int64(d);
}

// Descending 6-tuples b with sum `remaining`, each entry <= `cap`, b1 + b2 + b3 <= a.
void partitions(std::int64_t a, std::int64_t remaining, std::int64_t cap, int slot,
                std::array<std::int64_t, 6>& b, std::vector<DivisorClass>& out) {
  if (slot == 6) {
    if (remaining == 0 && b[0] + b[1] + b[2] <= a) {
      DivisorClass c(Integer(a), {});
      for (int i = 0; i < 6; ++i) c.b(i + 1) = b[i];
      out.push_back(c);
    }
    return;
  }
  int const left = 6 - slot;
  std::int64_t const hi = std::min(cap, remaining);
  for (std::int64_t v = hi; v >= 0; --v) {
    if (v * left < remaining) break;
    if (slot == 2 && b[0] + b[1] + v > a) continue;
    b[slot] = v;
    partitions(a, remaining - v, v, slot + 1, b, out);
  }
}

}  // namespace

std::vector<DivisorClass> enumerate_degree(Integer const& d) {
  std::int64_t const deg = checked_degree(d);
  std::vector<DivisorClass> out;
  std::array<std::int64_t, 6> b{};
  // sum b_i = 3a - d and sum b_i <= 2a (from a >= b1+b2+b3 >= b4+b5+b6) give a <= d.
  for (std::int64_t a = 1; a <= deg; ++a) {
    std::int64_t const total = 3 * a - deg;
    if (total < 0) continue;
    partitions(a, total, a - 1, 0, b, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> enumerate_families(Integer const& d, Integer const& g) {
  Integer const bound = hodge_genus_bound(d);
  if (g < 0 || g > bound)
    throw PreconditionError(Errc::GenusOutOfHodgeRange,
                            "g = " + g.str() + " outside [0, " + bound.str() + "]");
  std::vector<DivisorClass> out;
  for (auto const& c : enumerate_degree(d))
    if (invariants(c).genus == g) out.push_back(c);
  return out;
}

CensusRecord make_record(DivisorClass const& tuple) {
  CensusRecord r;
  r.tuple = tuple;
  auto const inv = invariants(tuple);
  r.d = inv.degree;
  r.g = inv.genus;
  r.h1_ic3 = abnormality(tuple, Integer(3));
  r.h2 = h0(adjoint(tuple, 4));
  r.normality = 0;
  while (r.normality < 3 && abnormality(tuple, Integer(r.normality + 1)) == 0) ++r.normality;
  r.verdict = classify(tuple);
  if (r.d > 9) r.dim = hilbert_dim(tuple);
  r.kleppe = kleppe_verdict(tuple);
  r.dim_w = r.d + r.g + 18;
  return r;
}

CensusResult census_range(Integer const& d_min, Integer const& d_max, Integer const& g_min,
                          Integer const& g_max, unsigned threads) {
  if (d_min <= 0 || d_max < d_min || g_max < g_min)
    throw PreconditionError(Errc::InvalidRange, "d in [" + d_min.str() + ", " + d_max.str() +
                                                    "], g in [" + g_min.str() + ", " +
                                                    g_max.str() + "]");
  CensusResult result;
  std::vector<DivisorClass> tuples;
  for (Integer d = d_min; d <= d_max; ++d) {
    Integer const lo = std::max(g_min, Integer(0));
    Integer const hi = std::min(g_max, hodge_genus_bound(d));
    std::map<Integer, std::vector<DivisorClass>> by_genus;
    for (auto const& c : enumerate_degree(d)) {
      Integer const g = invariants(c).genus;
      if (g >= lo && g <= hi) by_genus[g].push_back(c);
    }
    for (Integer g = lo; g <= hi; ++g) {
      auto const it = by_genus.find(g);
      if (it == by_genus.end()) {
        result.empty_cells.emplace_back(d, g);
        continue;
      }
      tuples.insert(tuples.end(), it->second.begin(), it->second.end());
    }
  }

  result.records.resize(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++)
      result.records[i] = make_record(tuples[i]);
  };
  unsigned const n = std::max(1u, threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&] {
        try {
          worker();
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = tuples.size();
        }
      });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::stable_sort(result.records.begin(), result.records.end(),
                   [](CensusRecord const& x, CensusRecord const& y) {
                     if (x.d != y.d) return x.d < y.d;
                     if (x.g != y.g) return x.g < y.g;
                     return x.tuple < y.tuple;
                   });
  return result;
}

}  // namespace cubic
