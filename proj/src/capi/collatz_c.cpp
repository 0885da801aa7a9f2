#include "collatz/collatz.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "collatz/dynamics.hpp"
#include "collatz/error.hpp"
#include "collatz/format.hpp"
#include "collatz/increasing.hpp"
#include "collatz/odd_tree.hpp"
#include "collatz/parity_stats.hpp"
#include "collatz/stopping_cache.hpp"

struct collatz_numbers {
  std::vector<std::string> items;
};

struct collatz_scan {
  std::vector<collatz::TrajectoryRecord> records;
};

struct collatz_histogram {
  collatz::Histogram h;
};

struct collatz_tree {
  collatz::OddTreeNode root;
};

struct collatz_qseq {
  collatz::QSequence seq;
};

struct collatz_run {
  collatz::RunReport report;
};

namespace {

thread_local std::string g_last_error;

collatz_status status_of(collatz::ErrorCode code) {
  using collatz::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return COLLATZ_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return COLLATZ_ERR_DOMAIN;
    case ErrorCode::Overflow: return COLLATZ_ERR_OVERFLOW;
    case ErrorCode::CapExceeded: return COLLATZ_ERR_CAP_EXCEEDED;
    case ErrorCode::InsufficientData: return COLLATZ_ERR_INSUFFICIENT_DATA;
    case ErrorCode::Verification: return COLLATZ_ERR_VERIFICATION;
    case ErrorCode::Io: return COLLATZ_ERR_IO;
  }
  return COLLATZ_ERR_INTERNAL;
}

collatz_status fail(collatz_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
collatz_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return COLLATZ_OK;
  } catch (const collatz::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COLLATZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COLLATZ_ERR_INTERNAL, e.what());
  }
}

#define REQUIRE_ARG(cond)                                                        \
  do {                                                                           \
    if (!(cond)) return fail(COLLATZ_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

collatz_record to_c(const collatz::TrajectoryRecord& r) {
  return collatz_record{r.x, r.sigma, r.odd_steps, r.p_odd_numerator(), r.p_odd()};
}

template <class T>
collatz_numbers* make_numbers(const std::vector<T>& values) {
  auto* list = new collatz_numbers;
  list->items.reserve(values.size());
  for (const auto& v : values) list->items.push_back(v.to_string());
  return list;
}

}  // namespace

extern "C" {

const char* collatz_last_error(void) { return g_last_error.c_str(); }

const char* collatz_status_name(collatz_status status) {
  switch (status) {
    case COLLATZ_OK: return "ok";
    case COLLATZ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COLLATZ_ERR_DOMAIN: return "domain error";
    case COLLATZ_ERR_OVERFLOW: return "overflow";
    case COLLATZ_ERR_CAP_EXCEEDED: return "step cap exceeded";
    case COLLATZ_ERR_INSUFFICIENT_DATA: return "insufficient data";
    case COLLATZ_ERR_VERIFICATION: return "verification failure";
    case COLLATZ_ERR_IO: return "i/o error";
    case COLLATZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* collatz_version(void) { return "1.0.0"; }

void collatz_string_free(char* s) { std::free(s); }

size_t collatz_numbers_size(const collatz_numbers* list) { return list ? list->items.size() : 0; }

const char* collatz_numbers_at(const collatz_numbers* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return list->items[index].c_str();
}

collatz_status collatz_numbers_join(const collatz_numbers* list, const char* sep, char** out) {
  REQUIRE_ARG(list && sep && out);
  return guarded([&] {
    std::string s;
    for (std::size_t i = 0; i < list->items.size(); ++i) {
      if (i) s += sep;
      s += list->items[i];
    }
    *out = dup_string(s);
  });
}

void collatz_numbers_destroy(collatz_numbers* list) { delete list; }

collatz_status collatz_step(uint64_t x, uint64_t* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = collatz::collatz_step(x); });
}

collatz_status collatz_odd_step(uint64_t x, uint64_t* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = collatz::odd_step(x); });
}

collatz_status collatz_two_adic_valuation(uint64_t x, unsigned* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = collatz::two_adic_valuation(x); });
}

collatz_status collatz_total_stopping_time(uint64_t x, uint64_t cap, collatz_stopping* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    auto r = collatz::total_stopping_time(collatz::FastNat{x}, cap);
    *out = collatz_stopping{r.sigma, r.odd_steps, r.capped ? 1 : 0};
  });
}

collatz_status collatz_total_stopping_time_big(const char* x, uint64_t cap, collatz_stopping* out) {
  REQUIRE_ARG(x && out);
  return guarded([&] {
    auto r = collatz::total_stopping_time(collatz::BigNat::from_string(x), cap);
    *out = collatz_stopping{r.sigma, r.odd_steps, r.capped ? 1 : 0};
  });
}

collatz_status collatz_trajectory(const char* x, uint64_t cap, collatz_numbers** values, int* terminated) {
  REQUIRE_ARG(x && values);
  return guarded([&] {
    auto t = collatz::trajectory(collatz::BigNat::from_string(x), cap);
    *values = make_numbers(t.values);
    if (terminated) *terminated = t.terminated ? 1 : 0;
  });
}

collatz_status collatz_parity_sequence(uint64_t x, char** bits) {
  REQUIRE_ARG(bits);
  return guarded([&] {
    auto seq = collatz::parity_sequence(x);
    std::string s;
    s.reserve(seq.size());
    for (auto b : seq) s += b ? '1' : '0';
    *bits = dup_string(s);
  });
}

collatz_status collatz_p_odd(uint64_t x, collatz_record* out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = to_c(collatz::p_odd(x)); });
}

collatz_status collatz_record_json(const collatz_record* record, char** out) {
  REQUIRE_ARG(record && out);
  return guarded([&] {
    collatz::TrajectoryRecord r{record->x, record->sigma, record->odd_steps};
    *out = dup_string(collatz::format::record_json(r));
  });
}

collatz_status collatz_scan_run(uint64_t lo, uint64_t hi, unsigned workers, const char* cache_path,
                                collatz_scan** out, uint64_t* failing_x) {
  REQUIRE_ARG(out);
  return guarded([&] {
    collatz::ScanOptions options;
    options.workers = workers;
    std::optional<collatz::StoppingCache> cache;
    if (cache_path && *cache_path) {
      if (lo < 1 || lo > hi) throw collatz::InvalidArgument("scan range requires 1 <= lo <= hi");
      const std::uint64_t limit = std::min<std::uint64_t>(hi, std::uint64_t{1} << 26);
      if (std::filesystem::exists(cache_path)) {
        cache.emplace(collatz::StoppingCache::load(cache_path, limit));
      } else {
        cache.emplace(limit);
      }
      options.cache = &*cache;
    }
    try {
      auto records = collatz::scan_range(lo, hi, options);
      if (cache) cache->save(cache_path);
      *out = new collatz_scan{std::move(records)};
    } catch (const collatz::OverflowError& e) {
      if (failing_x) *failing_x = e.start();
      throw;
    } catch (const collatz::CapExceeded& e) {
      if (failing_x) *failing_x = e.start();
      throw;
    }
  });
}

size_t collatz_scan_size(const collatz_scan* scan) { return scan ? scan->records.size() : 0; }

collatz_status collatz_scan_record(const collatz_scan* scan, size_t index, collatz_record* out) {
  REQUIRE_ARG(scan && out);
  if (index >= scan->records.size()) return fail(COLLATZ_ERR_INVALID_ARGUMENT, "record index out of range");
  *out = to_c(scan->records[index]);
  return COLLATZ_OK;
}

collatz_status collatz_scan_max_p_odd(const collatz_scan* scan, uint64_t x_threshold, collatz_record* out) {
  REQUIRE_ARG(scan && out);
  return guarded([&] { *out = to_c(collatz::max_p_odd(scan->records, x_threshold)); });
}

collatz_status collatz_scan_mean_sigma(const collatz_scan* scan, double* out) {
  REQUIRE_ARG(scan && out);
  if (scan->records.empty()) return fail(COLLATZ_ERR_INVALID_ARGUMENT, "empty scan");
  long double total = 0;
  for (const auto& r : scan->records) total += r.sigma;
  *out = static_cast<double>(total / scan->records.size());
  return COLLATZ_OK;
}

collatz_status collatz_scan_csv(const collatz_scan* scan, char** out) {
  REQUIRE_ARG(scan && out);
  return guarded([&] { *out = dup_string(collatz::format::records_csv(scan->records)); });
}

collatz_status collatz_scan_plot(const collatz_scan* scan, char** out) {
  REQUIRE_ARG(scan && out);
  return guarded([&] { *out = dup_string(collatz::format::records_plot(scan->records)); });
}

void collatz_scan_destroy(collatz_scan* scan) { delete scan; }

collatz_status collatz_histogram_from_scan(const collatz_scan* scan, unsigned bins, collatz_histogram** out) {
  REQUIRE_ARG(scan && out);
  return guarded([&] { *out = new collatz_histogram{collatz::histogram(scan->records, bins)}; });
}

collatz_status collatz_histogram_from_values(const double* values, size_t count, unsigned bins,
                                             collatz_histogram** out) {
  REQUIRE_ARG(values && out);
  return guarded([&] {
    *out = new collatz_histogram{collatz::histogram_of_values(std::span<const double>(values, count), bins)};
  });
}

collatz_status collatz_histogram_from_csv(const char* text, collatz_histogram** out) {
  REQUIRE_ARG(text && out);
  return guarded([&] { *out = new collatz_histogram{collatz::format::parse_histogram_csv(text)}; });
}

size_t collatz_histogram_bins(const collatz_histogram* h) { return h ? h->h.bin_count() : 0; }

collatz_status collatz_histogram_bin(const collatz_histogram* h, size_t index, double* lo, double* hi,
                                     double* probability) {
  REQUIRE_ARG(h);
  if (index >= h->h.bin_count()) return fail(COLLATZ_ERR_INVALID_ARGUMENT, "bin index out of range");
  if (lo) *lo = h->h.bin_edges[index];
  if (hi) *hi = h->h.bin_edges[index + 1];
  if (probability) *probability = h->h.probabilities[index];
  return COLLATZ_OK;
}

uint64_t collatz_histogram_sample_count(const collatz_histogram* h) { return h ? h->h.sample_count : 0; }

collatz_status collatz_histogram_csv(const collatz_histogram* h, char** out) {
  REQUIRE_ARG(h && out);
  return guarded([&] { *out = dup_string(collatz::format::histogram_csv(h->h)); });
}

collatz_status collatz_histogram_plot(const collatz_histogram* h, int log10, char** out) {
  REQUIRE_ARG(h && out);
  return guarded([&] { *out = dup_string(collatz::format::histogram_plot(h->h, log10 != 0)); });
}

void collatz_histogram_destroy(collatz_histogram* h) { delete h; }

collatz_status collatz_power_law_fit(const collatz_histogram* h, double window_lo, double window_hi,
                                     collatz_fit* out) {
  REQUIRE_ARG(h && out);
  return guarded([&] {
    auto f = collatz::power_law_fit(h->h, window_lo, window_hi);
    *out = collatz_fit{f.alpha, f.intercept, f.r_squared, f.window_lo, f.window_hi, f.bins_used, f.sample_count};
  });
}

collatz_status collatz_fit_json(const collatz_fit* fit, char** out) {
  REQUIRE_ARG(fit && out);
  return guarded([&] {
    collatz::PowerLawFit f{fit->alpha,     fit->intercept, fit->window_lo,   fit->window_hi,
                           fit->r_squared, fit->bins_used, fit->sample_count};
    *out = dup_string(collatz::format::fit_json(f));
  });
}

collatz_status collatz_classify(uint64_t x, collatz_class* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    auto c = collatz::classify(x);
    *out = collatz_class{static_cast<collatz_odd_kind>(c.kind), c.n, c.root3 ? 1 : 0};
  });
}

collatz_status collatz_predecessors(uint64_t y, size_t count, int include_increasing, collatz_numbers** out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    auto preds = include_increasing ? collatz::predecessors_complete(collatz::BigNat(y), count)
                                    : collatz::predecessors_formula(collatz::BigNat(y), count);
    auto* list = new collatz_numbers;
    for (const auto& p : preds) list->items.push_back(p.value.to_string());
    *out = list;
  });
}

collatz_status collatz_predecessors_direct(uint64_t y, unsigned k_max, collatz_numbers** out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = make_numbers(collatz::predecessors_direct(collatz::BigNat(y), k_max)); });
}

collatz_status collatz_tree_build(uint64_t root, uint64_t max_value, unsigned max_depth, collatz_tree** out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = new collatz_tree{collatz::build_tree(root, max_value, max_depth)}; });
}

size_t collatz_tree_node_count(const collatz_tree* tree) { return tree ? collatz::node_count(tree->root) : 0; }

collatz_status collatz_tree_json(const collatz_tree* tree, char** out) {
  REQUIRE_ARG(tree && out);
  return guarded([&] { *out = dup_string(collatz::format::tree_json(tree->root)); });
}

collatz_status collatz_tree_dot(const collatz_tree* tree, char** out) {
  REQUIRE_ARG(tree && out);
  return guarded([&] { *out = dup_string(collatz::format::tree_dot(tree->root)); });
}

void collatz_tree_destroy(collatz_tree* tree) { delete tree; }

collatz_status collatz_verify_roots(uint64_t n_max, collatz_roots_report* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    auto r = collatz::verify_roots(n_max);
    *out = collatz_roots_report{r.checked, r.counterexamples.size(),
                                r.counterexamples.empty() ? 0 : r.counterexamples.front()};
  });
}

collatz_status collatz_n_terms(unsigned q, collatz_numbers** out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = make_numbers(collatz::n_terms(q)); });
}

collatz_status collatz_n_table_csv(unsigned q_max, char** out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = dup_string(collatz::format::n_table_csv(q_max)); });
}

collatz_multiplier_verdict collatz_validate_multiplier(uint64_t m, int strict) {
  return static_cast<collatz_multiplier_verdict>(collatz::validate_multiplier(m, strict != 0));
}

const char* collatz_multiplier_verdict_name(collatz_multiplier_verdict verdict) {
  return collatz::to_string(static_cast<collatz::MultiplierVerdict>(verdict));
}

collatz_status collatz_qseq_create(unsigned q, uint64_t multiplier, int strict, collatz_qseq** out) {
  REQUIRE_ARG(out);
  return guarded([&] { *out = new collatz_qseq{collatz::q_sequence(q, multiplier, strict != 0)}; });
}

int collatz_qseq_verified(const collatz_qseq* seq) { return seq && seq->seq.verified ? 1 : 0; }

collatz_status collatz_qseq_values(const collatz_qseq* seq, collatz_numbers** out) {
  REQUIRE_ARG(seq && out);
  return guarded([&] { *out = make_numbers(seq->seq.values); });
}

collatz_status collatz_qseq_n_terms(const collatz_qseq* seq, collatz_numbers** out) {
  REQUIRE_ARG(seq && out);
  return guarded([&] { *out = make_numbers(seq->seq.n_terms); });
}

collatz_status collatz_qseq_json(const collatz_qseq* seq, char** out) {
  REQUIRE_ARG(seq && out);
  return guarded([&] { *out = dup_string(collatz::format::sequence_json(seq->seq)); });
}

void collatz_qseq_destroy(collatz_qseq* seq) { delete seq; }

collatz_status collatz_run_seed(unsigned s, uint64_t n, char** x0) {
  REQUIRE_ARG(x0);
  return guarded([&] { *x0 = dup_string(collatz::run_seed(s, n).x0.to_string()); });
}

collatz_status collatz_run_verify(const char* x0, unsigned s, collatz_run** out) {
  REQUIRE_ARG(x0 && out);
  return guarded(
      [&] { *out = new collatz_run{collatz::verify_increasing_run(collatz::BigNat::from_string(x0), s)}; });
}

int collatz_run_passed(const collatz_run* run) { return run && run->report.passed ? 1 : 0; }
unsigned collatz_run_maximal(const collatz_run* run) { return run ? run->report.maximal_run : 0; }

collatz_status collatz_run_values(const collatz_run* run, collatz_numbers** out) {
  REQUIRE_ARG(run && out);
  return guarded([&] { *out = make_numbers(run->report.values); });
}

void collatz_run_destroy(collatz_run* run) { delete run; }

}  // extern "C"
