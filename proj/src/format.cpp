#include "collatz/format.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

#include "collatz/error.hpp"

namespace collatz::format {

using nlohmann::json;

std::string sig10(double v) {
  if (!std::isfinite(v)) throw DomainError("cannot format a non-finite value");
  char buf[64];
  if (v == 0.0) {
    std::snprintf(buf, sizeof buf, "%.9f", 0.0);
    return buf;
  }
  int decimals = 9 - static_cast<int>(std::floor(std::log10(std::fabs(v))));
  if (decimals < 0) decimals = 0;
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string records_csv(std::span<const TrajectoryRecord> records) {
  std::string out = "x,sigma,odd_steps,p_odd\n";
  out.reserve(out.size() + records.size() * 32);
  for (const auto& r : records) {
    out += std::to_string(r.x);
    out += ',';
    out += std::to_string(r.sigma);
    out += ',';
    out += std::to_string(r.odd_steps);
    out += ',';
    out += sig10(r.p_odd());
    out += '\n';
  }
  return out;
}

std::string records_plot(std::span<const TrajectoryRecord> records) {
  std::string out;
  out.reserve(records.size() * 24);
  for (const auto& r : records) {
    out += std::to_string(r.x);
    out += ' ';
    out += sig10(r.p_odd());
    out += '\n';
  }
  return out;
}

std::string record_json(const TrajectoryRecord& r) {
  json j{{"x", r.x},
         {"sigma", r.sigma},
         {"odd_steps", r.odd_steps},
         {"p_odd_numerator", r.p_odd_numerator()},
         {"p_odd_denominator", r.p_odd_denominator()},
         {"p_odd", r.p_odd()}};
  return j.dump();
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "bin_lo,bin_hi,probability\n";
  for (std::size_t i = 0; i < h.bin_count(); ++i) {
    out += sig10(h.bin_edges[i]) + ',' + sig10(h.bin_edges[i + 1]) + ',' + sig10(h.probabilities[i]) + '\n';
  }
  return out;
}

Histogram parse_histogram_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("bin_lo,bin_hi,probability", 0) != 0) {
    throw InvalidArgument("histogram CSV must start with header bin_lo,bin_hi,probability");
  }
  std::vector<double> edges;
  std::vector<double> probs;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    double lo = 0, hi = 0, p = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &lo, &hi, &p) != 3) {
      throw InvalidArgument("malformed histogram row at line " + std::to_string(lineno));
    }
    if (edges.empty()) {
      edges.push_back(lo);
    } else if (std::fabs(edges.back() - lo) > 1e-12) {
      throw InvalidArgument("histogram bins are not contiguous at line " + std::to_string(lineno));
    }
    edges.push_back(hi);
    probs.push_back(p);
  }
  // Ten-digit rounding on the way out means the sum is only close to 1.
  double total = 0;
  for (double p : probs) total += p;
  if (total > 0) {
    for (double& p : probs) p /= total;
  }
  return histogram_from_bins(std::move(edges), std::move(probs), 0);
}

std::string histogram_plot(const Histogram& h, bool log10) {
  std::string out;
  for (std::size_t i = 0; i < h.bin_count(); ++i) {
    double c = h.bin_center(i);
    double p = h.probabilities[i];
    if (log10) {
      if (p <= 0) continue;
      out += sig10(std::log10(c)) + ' ' + sig10(std::log10(p)) + '\n';
    } else {
      out += sig10(c) + ' ' + sig10(p) + '\n';
    }
  }
  return out;
}

std::string fit_json(const PowerLawFit& f) {
  json j{{"alpha", f.alpha},
         {"intercept", f.intercept},
         {"r_squared", f.r_squared},
         {"window_lo", f.window_lo},
         {"window_hi", f.window_hi},
         {"bins_used", f.bins_used},
         {"sample_count", f.sample_count}};
  return j.dump(2) + "\n";
}

namespace {

json node_json(const OddTreeNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(node_json(c));
  return json{{"value", n.value},
              {"class", to_string(n.classification.kind)},
              {"root3", n.classification.root3},
              {"truncated", n.truncated},
              {"children", std::move(children)}};
}

void dot_nodes(const OddTreeNode& n, std::set<std::uint64_t>& seen, std::string& out) {
  if (seen.insert(n.value).second) {
    out += "  n" + std::to_string(n.value) + " [label=\"" + std::to_string(n.value) + "\"";
    if (n.classification.root3) {
      out += ", shape=box, style=filled, fillcolor=red";
    } else if (n.truncated && n.children.empty()) {
      out += ", shape=circle, style=filled, fillcolor=black, fontcolor=white";
    }
    out += "];\n";
  }
  for (const auto& c : n.children) dot_nodes(c, seen, out);
}

void dot_edges(const OddTreeNode& n, std::string& out) {
  for (const auto& c : n.children) {
    out += "  n" + std::to_string(c.value) + " -> n" + std::to_string(n.value) + " [label=\"p=" +
           std::to_string(c.p_exp) + "\"];\n";
  }
  for (const auto& c : n.children) dot_edges(c, out);
}

}  // namespace

std::string tree_json(const OddTreeNode& root) { return node_json(root).dump(2) + "\n"; }

std::string tree_dot(const OddTreeNode& root) {
  std::string out = "digraph odd_tree {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  std::set<std::uint64_t> seen;
  dot_nodes(root, seen, out);
  dot_edges(root, out);
  out += "}\n";
  return out;
}

std::string sequence_json(const QSequence& seq) {
  json n = json::array();
  for (const auto& v : seq.n_terms) n.push_back(v.to_string());
  json values = json::array();
  for (const auto& v : seq.values) values.push_back(v.to_string());
  json j{{"q", seq.q},
         {"multiplier", seq.multiplier},
         {"n_terms", std::move(n)},
         {"values", std::move(values)},
         {"verified", seq.verified}};
  return j.dump() + "\n";
}

std::string n_table_csv(unsigned q_max) {
  std::string out = "q,i,n\n";
  for (unsigned q = 0; q <= q_max; ++q) {
    auto terms = n_terms(q);
    for (unsigned i = 0; i < terms.size(); ++i) {
      out += std::to_string(q) + ',' + std::to_string(i) + ',' + terms[i].to_string() + '\n';
    }
  }
  return out;
}

std::string join(std::span<const BigNat> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].to_string();
  }
  return out;
}

}  // namespace collatz::format
