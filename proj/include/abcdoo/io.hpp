#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "abcdoo/ckb.hpp"
#include "abcdoo/generator.hpp"
#include "abcdoo/metrics.hpp"

namespace abcdoo::io {

/// Shortest round-trip decimal text.
std::string format_number(double x);

/// "u<TAB>v" per edge, 1-based.
void write_edges(std::ostream& out, const std::vector<Edge>& edges);
/// "u<TAB>v<TAB>tag"; tag 0 is background, j is community j (1-based).
void write_provenance(std::ostream& out, const std::vector<Edge>& edges);
/// "node<TAB>c1,c2,..." with 1-based ids; "0" for outliers.
void write_memberships(std::ostream& out, const std::vector<std::vector<std::uint32_t>>& node_communities);
/// "node<TAB>x1<TAB>...<TAB>xd" for every non-outlier, by node id.
void write_coordinates(std::ostream& out, const GeneratedNetwork& net);

std::string summary_json(const GeneratedNetwork& net);
std::string timings_json(const PhaseTimings& timings);
std::string ckb_summary_json(const CkbSpec& spec, const CkbResult& result);

/// Reads a membership file. Nodes must be exactly 1..N, each once.
std::vector<std::vector<std::uint32_t>> read_memberships(std::istream& in);

/// Reads an edge or provenance file over node_count nodes. Rejects unknown
/// ids, self-loops and repeated pairs. has_provenance is set when every line
/// carries a third column.
std::vector<Edge> read_edges(std::istream& in, std::size_t node_count, bool& has_provenance);

LabeledNetwork load_labeled_network(const std::filesystem::path& edges, const std::filesystem::path& memberships);

LabeledNetwork to_labeled(const GeneratedNetwork& net);

/// Writes every metrics CSV into dir and returns the file names written.
std::vector<std::string> write_metric_csvs(const LabeledNetwork& net, const std::filesystem::path& dir);

/// Writes text to path, throwing std::runtime_error on failure.
void write_file(const std::filesystem::path& path, const std::string& text);

} // namespace abcdoo::io
