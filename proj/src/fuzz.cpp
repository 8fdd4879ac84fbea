#include "awarekit/fuzz.hpp"

#include <omp.h>

#include <exception>
#include <random>
#include <stdexcept>

#include "awarekit/checker.hpp"
#include "awarekit/proof.hpp"
#include "awarekit/random_formula.hpp"
#include "awarekit/threads.hpp"

namespace awarekit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void precheck(std::uint64_t trials, const Bounds& b) {
  if (trials == 0) throw std::invalid_argument("fuzzing needs at least one trial");
  b.check();
}

FuzzReport run_trial(std::uint64_t seed, std::uint64_t i, const Bounds& b,
                     std::size_t pool_depth, const FuzzOptions& opts) {
  FuzzReport r;
  r.trials = 1;
  const std::uint64_t ts = trial_seed(seed, i);
  const EpistemicModel m = random_model(ts, b);
  const Evaluator ev(m);
  std::mt19937_64 rng(splitmix64(ts ^ 0xA5A5A5A5A5A5A5A5ULL));
  for (const NamedSchema& ns : opts.schemas) {
    const auto metas = metavariables_of(ns.schema.pattern());
    for (std::size_t k = 0; k < opts.instances_per_schema; ++k) {
      Substitution sigma;
      for (const std::string& mv : metas) sigma.emplace(mv, random_formula(rng, b.props, pool_depth));
      const CompiledFormula cf(instantiate(ns.schema, sigma));
      ++r.schema_instances_checked;
      if (auto pt = ev.first_failure(cf)) {
        r.violations.push_back(FuzzViolation{m, *pt, ns.name, std::move(sigma)});
      }
    }
  }
  return r;
}

void merge(FuzzReport& into, FuzzReport&& from) {
  into.trials += from.trials;
  into.schema_instances_checked += from.schema_instances_checked;
  for (FuzzViolation& v : from.violations) into.violations.push_back(std::move(v));
}

}  // namespace

std::vector<NamedSchema> soundness_schemas() {
  std::vector<NamedSchema> out;
  for (AxiomId id : schematic_axioms()) out.push_back({axiom_keyword(id), axiom_schema(id)});
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) {
  return splitmix64(seed ^ splitmix64(i));
}

FuzzReport fuzz_soundness_serial(std::uint64_t trials, std::uint64_t seed, const Bounds& b,
                                 std::size_t pool_depth, const FuzzOptions& opts) {
  precheck(trials, b);
  FuzzReport total;
  for (std::uint64_t i = 0; i < trials; ++i) merge(total, run_trial(seed, i, b, pool_depth, opts));
  return total;
}

FuzzReport fuzz_soundness(std::uint64_t trials, std::uint64_t seed, const Bounds& b,
                          std::size_t pool_depth, const FuzzOptions& opts) {
  precheck(trials, b);
  std::vector<FuzzReport> parts(trials);
  std::exception_ptr error;
  const long n = static_cast<long>(trials);
#pragma omp parallel for schedule(dynamic, 8) num_threads(resolve_threads(opts.threads))
  for (long i = 0; i < n; ++i) {
    try {
      parts[i] = run_trial(seed, static_cast<std::uint64_t>(i), b, pool_depth, opts);
    } catch (...) {
#pragma omp critical(awarekit_fuzz_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  FuzzReport total;
  for (FuzzReport& p : parts) merge(total, std::move(p));
  return total;
}

}  // namespace awarekit
