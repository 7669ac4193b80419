#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "hullchain/evaluator.hpp"
#include "hullchain/network.hpp"
#include "hullchain/peeling.hpp"

namespace hullchain {

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

/// Reads a labeled dataset from CSV with header `x1,...,xn,label`. Label
/// values are pos/neg (case-insensitive) or 1/0; the dimension comes from
/// the header.
Dataset load_dataset(std::istream& in);
Dataset load_dataset(const std::filesystem::path& path);

/// Reads unlabeled query points: same CSV layout, either without the label
/// column or with one that is ignored.
std::vector<std::vector<double>> load_points(std::istream& in);
std::vector<std::vector<double>> load_points(const std::filesystem::path& path);

/// Writes `x1,...,xn,label` rows, one per classified point.
void write_labels_csv(std::ostream& out,
                      const std::vector<std::vector<double>>& points,
                      const std::vector<ClassLabel>& labels);

/// Network JSON, format_version 1. Reals round-trip bit-exactly.
std::string serialize_network(const ChainNetwork& net);
ChainNetwork parse_network(const std::string& json_text);

void save_network(const ChainNetwork& net, const std::filesystem::path& path);
ChainNetwork load_network(const std::filesystem::path& path);

}  // namespace hullchain
