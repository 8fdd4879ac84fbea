#include "awarekit/search.hpp"

#include <omp.h>

#include <atomic>
#include <limits>
#include <stdexcept>
#include <vector>

#include "awarekit/checker.hpp"
#include "awarekit/threads.hpp"

namespace awarekit {

namespace {

CompiledFormula prepare(const Formula& f, const Bounds& b) {
  b.check();
  for (const std::string& a : atoms_of(f)) {
    bool found = false;
    for (const std::string& p : b.props) found = found || p == a;
    if (!found) throw AtomNotInBounds(a);
  }
  return CompiledFormula(f);
}

// Re-checks a witness with the plain satisfaction entry point.
Countermodel confirmed(const Formula& f, EpistemicModel m, Point pt) {
  if (satisfies(m, pt, f)) throw std::logic_error("search produced a witness that does not falsify the formula");
  return Countermodel{std::move(m), pt};
}

struct ShardResult {
  std::uint64_t checked = 0;
  std::optional<Countermodel> witness;
};

ShardResult scan(const CompiledFormula& cf, const Bounds& b, const Shard& shard,
                 EnumerationOptions eo) {
  ShardResult r;
  ModelEnumerator en(b, shard, eo);
  EpistemicModel m;
  while (en.next(m)) {
    ++r.checked;
    Evaluator ev(m);
    if (auto pt = ev.first_failure(cf)) {
      r.witness = Countermodel{m, *pt};
      return r;
    }
  }
  return r;
}

}  // namespace

AtomNotInBounds::AtomNotInBounds(const std::string& atom)
    : std::invalid_argument("atom " + atom + " is not among the bound's props"), atom_(atom) {}

Verdict decide_bounded_serial(const Formula& f, const Bounds& b, SearchOptions opts) {
  const CompiledFormula cf = prepare(f, b);
  const EnumerationOptions eo{opts.symmetry_pruning};
  std::uint64_t checked = 0;
  for (const Shard& s : enumeration_shards(b)) {
    ShardResult r = scan(cf, b, s, eo);
    checked += r.checked;
    if (r.witness) return confirmed(f, std::move(r.witness->model), r.witness->point);
  }
  return ValidUpToBounds{b, checked};
}

Verdict decide_bounded(const Formula& f, const Bounds& b, SearchOptions opts) {
  const CompiledFormula cf = prepare(f, b);
  const EnumerationOptions eo{opts.symmetry_pruning};
  const std::vector<Shard> shards = enumeration_shards(b);
  const long n = static_cast<long>(shards.size());
  std::vector<ShardResult> results(shards.size());
  // Lowest shard index known to hold a witness; later shards can be skipped.
  std::atomic<long> best{std::numeric_limits<long>::max()};
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(opts.threads))
  for (long i = 0; i < n; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    try {
      results[i] = scan(cf, b, shards[i], eo);
      if (results[i].witness) {
        long cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
#pragma omp critical(awarekit_search_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  const long w = best.load();
  if (w != std::numeric_limits<long>::max()) {
    return confirmed(f, std::move(results[w].witness->model), results[w].witness->point);
  }
  std::uint64_t checked = 0;
  for (const ShardResult& r : results) checked += r.checked;
  return ValidUpToBounds{b, checked};
}

std::optional<Countermodel> find_countermodel(const Formula& f, const Bounds& b,
                                              SearchOptions opts) {
  Verdict v = decide_bounded(f, b, opts);
  if (auto* c = std::get_if<Countermodel>(&v)) return std::move(*c);
  return std::nullopt;
}

}  // namespace awarekit
