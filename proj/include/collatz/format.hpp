#pragma once

// Text serializations. All output is byte-stable for identical inputs:
// fixed ordering, fixed float formatting, integers as plain decimal.

#include <span>
#include <string>
#include <string_view>

#include "collatz/increasing.hpp"
#include "collatz/odd_tree.hpp"
#include "collatz/parity_stats.hpp"

namespace collatz::format {

/// Ten significant digits in positional notation, e.g. 0.2000000000.
std::string sig10(double v);

/// Header `x,sigma,odd_steps,p_odd`.
std::string records_csv(std::span<const TrajectoryRecord> records);
/// `x p_odd` per line.
std::string records_plot(std::span<const TrajectoryRecord> records);
std::string record_json(const TrajectoryRecord& record);

/// Header `bin_lo,bin_hi,probability`.
std::string histogram_csv(const Histogram& h);
Histogram parse_histogram_csv(std::string_view text);
/// `bin_center probability` per line; with log10 both columns are log10
/// and empty bins are skipped.
std::string histogram_plot(const Histogram& h, bool log10);

std::string fit_json(const PowerLawFit& fit);

std::string tree_json(const OddTreeNode& root);
std::string tree_dot(const OddTreeNode& root);

std::string sequence_json(const QSequence& seq);
/// Table of n_i by q in long form, header `q,i,n`.
std::string n_table_csv(unsigned q_max);

std::string join(std::span<const BigNat> values, std::string_view sep = " ");

}  // namespace collatz::format
