#include "harary/report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace harary {

namespace {

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void write_labels_csv(std::ostream& out, const SignedGraph& g, std::span<const Label> labels) {
  out << kLabelsHeader << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << g.name(v) << ',' << labels[static_cast<std::size_t>(v)] << '\n';
  }
}

std::vector<Label> read_labels_csv(std::istream& in, const SignedGraph& g) {
  std::unordered_map<std::string, Vertex> by_name;
  for (Vertex v = 0; v < g.vertex_count(); ++v) by_name.emplace(g.name(v), v);

  std::string line;
  if (!std::getline(in, line) || trim(line) != kLabelsHeader) {
    throw LabelFileError(std::string("labels file must start with '") + kLabelsHeader + "'");
  }
  std::vector<Label> labels(static_cast<std::size_t>(g.vertex_count()), kNoLabel);
  std::unordered_map<std::string, Label> dense;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) {
      throw LabelFileError("line " + std::to_string(line_no) + ": expected 'vertex,cluster'");
    }
    const std::string vertex = trim(line.substr(0, comma));
    const std::string cluster = trim(line.substr(comma + 1));
    const auto it = by_name.find(vertex);
    if (it == by_name.end()) {
      throw LabelFileError("line " + std::to_string(line_no) + ": unknown vertex '" + vertex + "'");
    }
    auto& slot = labels[static_cast<std::size_t>(it->second)];
    if (slot != kNoLabel) {
      throw LabelFileError("line " + std::to_string(line_no) + ": vertex '" + vertex +
                           "' labeled twice");
    }
    const auto [d, fresh] = dense.emplace(cluster, static_cast<Label>(dense.size()));
    slot = d->second;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (labels[static_cast<std::size_t>(v)] == kNoLabel) {
      throw LabelFileError("vertex '" + g.name(v) + "' has no label");
    }
  }
  return labels;
}

void write_trace_csv(std::ostream& out, std::span<const SplitTraceEntry> trace) {
  out << kTraceHeader << '\n';
  for (const auto& t : trace) {
    out << t.split << ',' << t.label << ',' << t.size << ',' << t.frustration << ','
        << fixed(t.pos_in, 6) << ',' << fixed(t.neg_out, 6) << ',' << fixed(t.overall_loss, 10)
        << ',' << t.clusters << ',' << fixed(t.elapsed_s, 6) << '\n';
  }
}

std::string summary_line(const ClusterResult& r) {
  std::ostringstream os;
  os << "clusters_ge5=" << r.clusters_ge5 << " clusters_lt5=" << r.clusters_lt5
     << " splits=" << r.split_count << " pos_in=" << fixed(r.metrics.pos_in, 4)
     << " neg_out=" << fixed(r.metrics.neg_out, 4) << " time_s=" << fixed(r.elapsed_s, 4);
  return os.str();
}

void write_metrics(std::ostream& out, const MetricsRecord& m) {
  out << "pos_between=" << m.counts.pos_between << '\n'
      << "pos_within=" << m.counts.pos_within << '\n'
      << "neg_within=" << m.counts.neg_within << '\n'
      << "neg_between=" << m.counts.neg_between << '\n'
      << "U=" << fixed(m.unhappy_ratio, 4) << '\n'
      << "US=" << fixed(m.unhappy_score, 4) << '\n'
      << "pos_in=" << fixed(m.pos_in, 4) << '\n'
      << "pos_out=" << fixed(m.pos_out, 4) << '\n'
      << "neg_in=" << fixed(m.neg_in, 4) << '\n'
      << "neg_out=" << fixed(m.neg_out, 4) << '\n'
      << "violating=" << fixed(m.violating, 4) << '\n'
      << "loss=" << fixed(m.loss, 4) << '\n'
      << "alpha=" << fixed(m.alpha, 4) << '\n'
      << "beta=" << fixed(m.beta, 4) << '\n'
      << "isolated=" << m.isolated << '\n'
      << "vertices=" << m.vertices << '\n'
      << "overall_loss=" << fixed(m.overall_loss, 4) << '\n';
}

}  // namespace harary
