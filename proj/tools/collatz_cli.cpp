// Command-line front end. Talks to the library only through collatz.h.
//
// Exit codes: 0 success, 1 usage/validation, 2 overflow or step cap,
// 3 verification failure or insufficient fit data.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "collatz/collatz.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitVerify = 3;

struct CString {
  char* p = nullptr;
  ~CString() { collatz_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Destroy)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Destroy(p); }
};

using Numbers = Handle<collatz_numbers, collatz_numbers_destroy>;
using Scan = Handle<collatz_scan, collatz_scan_destroy>;
using Hist = Handle<collatz_histogram, collatz_histogram_destroy>;
using Tree = Handle<collatz_tree, collatz_tree_destroy>;
using QSeq = Handle<collatz_qseq, collatz_qseq_destroy>;
using Run = Handle<collatz_run, collatz_run_destroy>;

int exit_code(collatz_status s) {
  switch (s) {
    case COLLATZ_OK: return kExitOk;
    case COLLATZ_ERR_OVERFLOW:
    case COLLATZ_ERR_CAP_EXCEEDED: return kExitNumeric;
    case COLLATZ_ERR_VERIFICATION:
    case COLLATZ_ERR_INSUFFICIENT_DATA: return kExitVerify;
    default: return kExitUsage;
  }
}

int report(collatz_status s) {
  std::cerr << "error: " << collatz_status_name(s) << ": " << collatz_last_error() << "\n";
  return exit_code(s);
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::string joined(const Numbers& list, const char* sep = " ") {
  CString s;
  collatz_numbers_join(list.p, sep, &s.p);
  return s.str();
}

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct ScanArgs {
  uint64_t from = 1;
  uint64_t to = 0;
  unsigned threads = 1;
  std::string cache;
};

int run_scan(const ScanArgs& a, Scan& scan) {
  if (a.from < 1 || a.from > a.to) {
    std::cerr << "error: need 1 <= --from <= --to\n";
    return kExitUsage;
  }
  if (a.threads < 1) {
    std::cerr << "error: --threads must be >= 1\n";
    return kExitUsage;
  }
  uint64_t failing = 0;
  auto s = collatz_scan_run(a.from, a.to, a.threads, a.cache.empty() ? nullptr : a.cache.c_str(), &scan.p, &failing);
  if (s != COLLATZ_OK) {
    if (failing) std::cerr << "failing start: " << failing << "\n";
    return report(s);
  }
  return kExitOk;
}

void add_scan_flags(CLI::App* cmd, ScanArgs& a) {
  cmd->add_option("--from", a.from, "first x (>= 1)");
  cmd->add_option("--to", a.to, "last x")->required();
  cmd->add_option("--threads", a.threads, "worker threads");
  cmd->add_option("--cache", a.cache, "memoization file, loaded if present and rewritten");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collatz dynamics toolkit: parity statistics, odd-only trees, increasing sequences"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // scan
  ScanArgs scan_args;
  std::string scan_out;
  std::string scan_format = "csv";
  uint64_t scan_threshold = 84;
  auto* scan_cmd = app.add_subcommand("scan", "P_odd record per x over a range");
  add_scan_flags(scan_cmd, scan_args);
  scan_cmd->add_option("--out", scan_out, "output file (default stdout)");
  scan_cmd->add_option("--format", scan_format, "csv or plot")->check(CLI::IsMember({"csv", "plot"}));
  scan_cmd->add_option("--above", scan_threshold, "summary also reports the max P_odd over x > this");
  scan_cmd->callback([&] {
    Scan scan;
    if ((rc = run_scan(scan_args, scan)) != kExitOk) return;
    CString text;
    auto s = scan_format == "csv" ? collatz_scan_csv(scan.p, &text.p) : collatz_scan_plot(scan.p, &text.p);
    if (s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    if (!write_output(scan_out, text.str())) {
      rc = kExitUsage;
      return;
    }
    std::ostream& summary = scan_out.empty() || scan_out == "-" ? std::cerr : std::cout;
    collatz_record best{};
    double mean = 0;
    collatz_scan_max_p_odd(scan.p, 0, &best);
    collatz_scan_mean_sigma(scan.p, &mean);
    summary << "count: " << collatz_scan_size(scan.p) << "\n";
    summary << "max p_odd: " << fmt10(best.p_odd) << " at x=" << best.x << "\n";
    if (collatz_scan_max_p_odd(scan.p, scan_threshold, &best) == COLLATZ_OK) {
      summary << "max p_odd (x > " << scan_threshold << "): " << fmt10(best.p_odd) << " at x=" << best.x << "\n";
    }
    summary << "mean sigma: " << fmt10(mean) << "\n";
  });

  // podd
  uint64_t podd_x = 0;
  std::string podd_format = "csv";
  bool podd_parity = false;
  auto* podd_cmd = app.add_subcommand("podd", "stopping time and P_odd of one x");
  podd_cmd->add_option("x", podd_x, "start value")->required();
  podd_cmd->add_option("--format", podd_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  podd_cmd->add_flag("--parity", podd_parity, "also print the parity sequence");
  podd_cmd->callback([&] {
    collatz_record r{};
    if (auto s = collatz_p_odd(podd_x, &r); s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    if (podd_format == "json") {
      CString j;
      collatz_record_json(&r, &j.p);
      std::cout << j.str() << "\n";
    } else {
      Scan one;
      if ((rc = run_scan(ScanArgs{podd_x, podd_x, 1, {}}, one)) != kExitOk) return;
      CString text;
      collatz_scan_csv(one.p, &text.p);
      std::cout << text.str();
    }
    if (podd_parity) {
      CString bits;
      if (auto s = collatz_parity_sequence(podd_x, &bits.p); s != COLLATZ_OK) {
        rc = report(s);
        return;
      }
      std::cout << "parity: " << bits.str() << "\n";
    }
  });

  // dist
  ScanArgs dist_args;
  unsigned bins = 250;
  double fit_lo = 0.25;
  double fit_hi = 0.365;
  std::string dist_input;
  std::string hist_out;
  std::string fit_out;
  std::string plot_out;
  std::string loglog_out;
  auto* dist_cmd = app.add_subcommand("dist", "P_odd distribution and power-law fit");
  dist_cmd->add_option("--from", dist_args.from, "first x (>= 1)");
  dist_cmd->add_option("--to", dist_args.to, "last x");
  dist_cmd->add_option("--threads", dist_args.threads, "worker threads");
  dist_cmd->add_option("--cache", dist_args.cache, "memoization file");
  dist_cmd->add_option("--input", dist_input, "fit an existing histogram CSV instead of scanning");
  dist_cmd->add_option("--bins", bins, "histogram bins over [0, 0.5] (>= 10)");
  dist_cmd->add_option("--fit-lo", fit_lo, "fit window lower bound");
  dist_cmd->add_option("--fit-hi", fit_hi, "fit window upper bound");
  dist_cmd->add_option("--hist-out", hist_out, "histogram CSV file (default stdout)");
  dist_cmd->add_option("--fit-out", fit_out, "fit JSON file");
  dist_cmd->add_option("--plot-out", plot_out, "two-column bin_center probability file");
  dist_cmd->add_option("--loglog-out", loglog_out, "two-column log10 file");
  dist_cmd->callback([&] {
    if (bins < 10) {
      std::cerr << "error: --bins must be >= 10\n";
      rc = kExitUsage;
      return;
    }
    if (!(0.0 <= fit_lo && fit_lo < fit_hi && fit_hi <= 0.5)) {
      std::cerr << "error: need 0 <= --fit-lo < --fit-hi <= 0.5\n";
      rc = kExitUsage;
      return;
    }
    Hist hist;
    if (!dist_input.empty()) {
      std::ifstream in(dist_input, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot read " << dist_input << "\n";
        rc = kExitUsage;
        return;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      if (auto s = collatz_histogram_from_csv(buf.str().c_str(), &hist.p); s != COLLATZ_OK) {
        rc = report(s);
        return;
      }
    } else {
      if (dist_args.to == 0) {
        std::cerr << "error: --to or --input is required\n";
        rc = kExitUsage;
        return;
      }
      Scan scan;
      if ((rc = run_scan(dist_args, scan)) != kExitOk) return;
      if (auto s = collatz_histogram_from_scan(scan.p, bins, &hist.p); s != COLLATZ_OK) {
        rc = report(s);
        return;
      }
    }
    CString csv;
    collatz_histogram_csv(hist.p, &csv.p);
    if (!write_output(hist_out, csv.str())) {
      rc = kExitUsage;
      return;
    }
    if (!plot_out.empty() || !loglog_out.empty()) {
      CString plot;
      CString loglog;
      collatz_histogram_plot(hist.p, 0, &plot.p);
      collatz_histogram_plot(hist.p, 1, &loglog.p);
      if ((!plot_out.empty() && !write_output(plot_out, plot.str())) ||
          (!loglog_out.empty() && !write_output(loglog_out, loglog.str()))) {
        rc = kExitUsage;
        return;
      }
    }
    collatz_fit fit{};
    if (auto s = collatz_power_law_fit(hist.p, fit_lo, fit_hi, &fit); s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    CString json;
    collatz_fit_json(&fit, &json.p);
    if (!fit_out.empty() && !write_output(fit_out, json.str())) {
      rc = kExitUsage;
      return;
    }
    std::ostream& summary = hist_out.empty() || hist_out == "-" ? std::cerr : std::cout;
    summary << "alpha: " << fmt10(fit.alpha) << "\n";
    summary << "r_squared: " << fmt10(fit.r_squared) << "\n";
    summary << "bins_used: " << fit.bins_used << "\n";
  });

  // preds
  uint64_t preds_y = 0;
  size_t preds_count = 4;
  bool preds_all = false;
  unsigned preds_direct = 0;
  auto* preds_cmd = app.add_subcommand("preds", "odd predecessors of y under the odd-only map");
  preds_cmd->add_option("y", preds_y, "odd target value")->required();
  preds_cmd->add_option("--count", preds_count, "number of predecessors");
  preds_cmd->add_flag("--all", preds_all, "include the 4n-1 predecessor of y = 6n-1");
  preds_cmd->add_option("--direct", preds_direct, "brute-force inversion over 3x+1 = y*2^k, k <= this");
  preds_cmd->callback([&] {
    if (preds_y % 2 == 0) {
      std::cerr << "error: y must be odd\n";
      rc = kExitUsage;
      return;
    }
    Numbers list;
    auto s = preds_direct ? collatz_predecessors_direct(preds_y, preds_direct, &list.p)
                          : collatz_predecessors(preds_y, preds_count, preds_all ? 1 : 0, &list.p);
    if (s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    std::cout << joined(list) << "\n";
    if (preds_y % 3 == 0) std::cerr << "note: " << preds_y << " is a multiple of 3: branch root\n";
  });

  // tree
  uint64_t tree_root = 1;
  uint64_t tree_max_value = 1000;
  unsigned tree_depth = 3;
  std::string tree_format = "json";
  std::string tree_out;
  auto* tree_cmd = app.add_subcommand("tree", "predecessor tree of odd numbers");
  tree_cmd->add_option("--root", tree_root, "odd root")->required();
  tree_cmd->add_option("--max-value", tree_max_value, "largest value kept");
  tree_cmd->add_option("--max-depth", tree_depth, "deepest level kept (root is 0)");
  tree_cmd->add_option("--format", tree_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  tree_cmd->add_option("--out", tree_out, "output file (default stdout)");
  tree_cmd->callback([&] {
    if (tree_root % 2 == 0) {
      std::cerr << "error: --root must be odd\n";
      rc = kExitUsage;
      return;
    }
    Tree tree;
    if (auto s = collatz_tree_build(tree_root, tree_max_value, tree_depth, &tree.p); s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    CString text;
    auto s = tree_format == "dot" ? collatz_tree_dot(tree.p, &text.p) : collatz_tree_json(tree.p, &text.p);
    if (s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    if (!write_output(tree_out, text.str())) rc = kExitUsage;
  });

  // seq
  unsigned seq_q = 0;
  uint64_t seq_m = 1;
  bool seq_permissive = false;
  std::string seq_format = "text";
  int seq_table = -1;
  auto* seq_cmd = app.add_subcommand("seq", "increasing odd sequence of level q");
  seq_cmd->add_option("--q", seq_q, "level q >= 0");
  seq_cmd->add_option("--multiplier", seq_m, "multiplier (1 or a prime >= 5 unless --permissive)");
  seq_cmd->add_flag("--permissive", seq_permissive, "accept any multiplier >= 1");
  seq_cmd->add_option("--format", seq_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  seq_cmd->add_option("--table", seq_table, "emit the n_i table up to this q as CSV and exit");
  seq_cmd->callback([&] {
    if (seq_table >= 0) {
      CString csv;
      if (auto s = collatz_n_table_csv(static_cast<unsigned>(seq_table), &csv.p); s != COLLATZ_OK) {
        rc = report(s);
        return;
      }
      std::cout << csv.str();
      return;
    }
    QSeq seq;
    if (auto s = collatz_qseq_create(seq_q, seq_m, seq_permissive ? 0 : 1, &seq.p); s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    if (seq_format == "json") {
      CString j;
      collatz_qseq_json(seq.p, &j.p);
      std::cout << j.str();
    } else {
      Numbers values;
      collatz_qseq_values(seq.p, &values.p);
      std::cout << joined(values) << "  " << (collatz_qseq_verified(seq.p) ? "verified" : "unverified") << "\n";
    }
    if (!collatz_qseq_verified(seq.p)) rc = kExitVerify;
  });

  // runseed
  unsigned run_s = 1;
  uint64_t run_n = 1;
  auto* run_cmd = app.add_subcommand("runseed", "seed of an s-step increasing run and its check");
  run_cmd->add_option("--s", run_s, "run length s >= 1")->required();
  run_cmd->add_option("--n", run_n, "parameter n >= 1")->required();
  run_cmd->callback([&] {
    CString x0;
    if (auto s = collatz_run_seed(run_s, run_n, &x0.p); s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    Run run;
    if (auto s = collatz_run_verify(x0.p, run_s, &run.p); s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    Numbers values;
    collatz_run_values(run.p, &values.p);
    bool ok = collatz_run_passed(run.p) != 0;
    std::cout << "seed " << x0.str() << "\n";
    std::cout << "run " << joined(values) << "\n";
    std::cout << (ok ? "pass" : "fail") << " (maximal run " << collatz_run_maximal(run.p) << ")\n";
    if (!ok) rc = kExitVerify;
  });

  // verify-roots
  uint64_t roots_max = 0;
  auto* roots_cmd = app.add_subcommand("verify-roots", "check that F never maps onto a multiple of 3");
  roots_cmd->add_option("--max", roots_max, "largest odd x checked")->required();
  roots_cmd->callback([&] {
    collatz_roots_report r{};
    if (auto s = collatz_verify_roots(roots_max, &r); s != COLLATZ_OK) {
      rc = report(s);
      return;
    }
    std::cout << r.counterexamples << " counterexamples / " << r.checked << " odd values checked\n";
    if (r.counterexamples) {
      std::cout << "first counterexample: " << r.first_counterexample << "\n";
      rc = kExitVerify;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return rc;
}
