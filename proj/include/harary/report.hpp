#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "harary/clusterer.hpp"
#include "harary/graph.hpp"
#include "harary/metrics.hpp"

namespace harary {

inline constexpr const char* kLabelsHeader = "vertex,cluster";
inline constexpr const char* kTraceHeader =
    "split,label,size,frustration,pos_in,neg_out,overall_loss,clusters,elapsed_s";
inline constexpr const char* kBenchHeader =
    "dataset,param,value,pos_in,neg_out,splits,clusters,time_s";

/// Rows in dense vertex order, keyed by original vertex id.
void write_labels_csv(std::ostream& out, const SignedGraph& g, std::span<const Label> labels);

/// Raised when a labels file does not match its graph.
class LabelFileError : public Error {
 public:
  using Error::Error;
};

/// Reads "vertex,cluster" rows keyed by original id. Cluster ids are
/// remapped to dense labels in order of appearance. Throws LabelFileError
/// on a bad header, unknown or repeated vertex, or an uncovered vertex.
std::vector<Label> read_labels_csv(std::istream& in, const SignedGraph& g);

void write_trace_csv(std::ostream& out, std::span<const SplitTraceEntry> trace);

/// "clusters_ge5=.. clusters_lt5=.. splits=.. pos_in=.. neg_out=.. time_s=.."
std::string summary_line(const ClusterResult& r);

/// One "key=value" line per measure.
void write_metrics(std::ostream& out, const MetricsRecord& m);

}  // namespace harary
