#include "harary/clusterer.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace harary {

void Config::validate() const {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0,1]");
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigError("beta must lie in [0,1]");
  if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be >= 0");
  if (gamma < 0) throw ConfigError("gamma must be >= 0");
  if (time_limit_s < -1) throw ConfigError("time limit must be -1 or >= 0");
  if (threads < 0) throw ConfigError("threads must be >= 0");
}

ClusterAssignment::ClusterAssignment(std::vector<Label> labels) : label_of_(std::move(labels)) {
  Label top = -1;
  for (const Label l : label_of_) {
    if (l < 0) throw GraphError("labels must be non-negative");
    top = std::max(top, l);
  }
  counter_ = top + 1;
  members_.resize(static_cast<std::size_t>(counter_));
  processed_.assign(static_cast<std::size_t>(counter_), 0);
  for (std::size_t v = 0; v < label_of_.size(); ++v) {
    members_[static_cast<std::size_t>(label_of_[v])].push_back(static_cast<Vertex>(v));
  }
  for (Label l = 0; l < counter_; ++l) {
    if (members_[static_cast<std::size_t>(l)].empty()) throw GraphError("labels must be dense");
    index_label(l);
  }
  live_ = static_cast<std::size_t>(counter_);
}

bool ClusterAssignment::is_processed(Label l) const {
  return processed_.at(static_cast<std::size_t>(l)) != 0;
}

void ClusterAssignment::index_label(Label l) {
  const auto size = static_cast<std::int64_t>(members_[static_cast<std::size_t>(l)].size());
  if (!is_processed(l)) by_size_.emplace(-size, l);
}

void ClusterAssignment::unindex_label(Label l) {
  const auto size = static_cast<std::int64_t>(members_[static_cast<std::size_t>(l)].size());
  by_size_.erase({-size, l});
}

void ClusterAssignment::mark_processed(Label l) {
  if (is_processed(l)) return;
  unindex_label(l);
  processed_[static_cast<std::size_t>(l)] = 1;
  processed_order_.push_back(l);
}

std::optional<Label> ClusterAssignment::largest_eligible(std::int64_t gamma) const {
  if (by_size_.empty()) return std::nullopt;
  const auto& [neg_size, label] = *by_size_.begin();
  if (-neg_size <= gamma) return std::nullopt;
  return label;
}

ClusterAssignment::SplitToken ClusterAssignment::split(
    Label parent, const std::vector<std::vector<Vertex>>& parts) {
  auto& old = members_.at(static_cast<std::size_t>(parent));
  if (old.empty()) throw GraphError("cannot split retired label " + std::to_string(parent));
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  if (total != old.size()) throw GraphError("split parts do not partition the label");
  std::vector<char> seen(label_of_.size(), 0);
  for (const auto& part : parts) {
    if (part.empty()) throw GraphError("split parts must be non-empty");
    for (const Vertex v : part) {
      const auto i = static_cast<std::size_t>(v);
      if (i >= label_of_.size() || label_of_[i] != parent || seen[i] != 0) {
        throw GraphError("split parts do not partition the label");
      }
      seen[i] = 1;
    }
  }

  SplitToken token;
  token.parent = parent;
  token.counter_before = counter_;
  unindex_label(parent);
  token.parent_members = std::move(old);
  old.clear();
  --live_;

  for (const auto& part : parts) {
    const Label fresh = counter_++;
    members_.emplace_back(part);
    std::sort(members_.back().begin(), members_.back().end());
    processed_.push_back(0);
    for (const Vertex v : part) label_of_[static_cast<std::size_t>(v)] = fresh;
    index_label(fresh);
    ++live_;
  }
  return token;
}

void ClusterAssignment::undo(SplitToken token) {
  for (Label l = counter_ - 1; l >= token.counter_before; --l) {
    unindex_label(l);
    --live_;
  }
  members_.resize(static_cast<std::size_t>(token.counter_before));
  processed_.resize(static_cast<std::size_t>(token.counter_before));
  counter_ = token.counter_before;
  for (const Vertex v : token.parent_members) label_of_[static_cast<std::size_t>(v)] = token.parent;
  members_[static_cast<std::size_t>(token.parent)] = std::move(token.parent_members);
  index_label(token.parent);
  ++live_;
}

ClusterAssignment initial_labels(const SignedGraph& g) {
  const auto cc = connected_components(g);
  return ClusterAssignment(cc.component_of);
}

std::optional<Label> select_component(const ClusterAssignment& a, std::int64_t gamma) {
  return a.largest_eligible(gamma);
}

std::vector<Label> densify_labels(std::span<const Label> labels) {
  struct Group {
    Label label;
    std::int64_t size = 0;
    std::size_t first = 0;
  };
  std::vector<Group> groups;
  std::vector<Label> slot;  // label -> index in groups
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const auto l = static_cast<std::size_t>(labels[v]);
    if (l >= slot.size()) slot.resize(l + 1, kNoLabel);
    if (slot[l] == kNoLabel) {
      slot[l] = static_cast<Label>(groups.size());
      groups.push_back({labels[v], 0, v});
    }
    ++groups[static_cast<std::size_t>(slot[l])].size;
  }
  std::vector<std::size_t> order(groups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&groups](std::size_t a, std::size_t b) {
    if (groups[a].size != groups[b].size) return groups[a].size > groups[b].size;
    return groups[a].first < groups[b].first;
  });
  std::vector<Label> rank(groups.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<Label>(r);
  std::vector<Label> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    out[v] = rank[static_cast<std::size_t>(slot[static_cast<std::size_t>(labels[v])])];
  }
  return out;
}

ClusterResult run(const SignedGraph& g, const Config& config, RunObserver* observer) {
  config.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  ClusterResult result;
  auto& a = result.assignment;
  a = initial_labels(g);
  EdgeCounts counts = edge_counts(g, a.labels());
  double current = overall_loss(counts);

  BestCutOptions cut_options;
  cut_options.iterations = config.iterations;
  cut_options.alpha = config.alpha;
  cut_options.beta = config.beta;
  cut_options.method = config.tree_method;
  cut_options.threads = config.threads;
  cut_options.refine = config.refine;

  while (true) {
    if (config.time_limit_s >= 0 && elapsed() >= static_cast<double>(config.time_limit_s)) {
      result.timed_out = true;
      break;
    }
    const auto selected = select_component(a, config.gamma);
    if (!selected) break;
    const Label label = *selected;

    // Always cut the component under its original signs.
    const auto sub = induced_subgraph(g, a.members(label));
    cut_options.seed = mix_seed(config.seed, static_cast<std::uint64_t>(result.attempts));
    ++result.attempts;
    const auto cut = best_harary_cut(sub.graph, cut_options);

    // Only edges inside the component can change from within to between.
    EdgeCounts next = counts;
    for (const auto& e : sub.graph.edges()) {
      if (cut.components.component_of[static_cast<std::size_t>(e.u)] ==
          cut.components.component_of[static_cast<std::size_t>(e.v)]) {
        continue;
      }
      if (e.sign > 0) {
        --next.pos_within;
        ++next.pos_between;
      } else {
        --next.neg_within;
        ++next.neg_between;
      }
    }
    std::vector<std::vector<Vertex>> parts;
    parts.reserve(cut.components.size());
    for (const auto& comp : cut.components.components) {
      auto& part = parts.emplace_back();
      part.reserve(comp.size());
      for (const Vertex v : comp) part.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    }

    std::optional<ClusterAssignment> before;
    if (observer != nullptr) before = a;
    auto token = a.split(label, parts);
    const double proposed = overall_loss(next);

    if (current - proposed <= config.epsilon) {
      a.undo(std::move(token));
      if (observer != nullptr) {
        observer->on_reject(*before, a, current, overall_loss(edge_counts(g, a.labels())));
      }
      a.mark_processed(label);
      continue;
    }

    counts = next;
    current = proposed;
    const auto f = fractions(counts);
    SplitTraceEntry entry;
    entry.split = static_cast<std::int64_t>(result.trace.size()) + 1;
    entry.label = label;
    entry.size = static_cast<std::int64_t>(sub.to_parent.size());
    entry.frustration = cut.state.frustration;
    entry.pos_in = f.pos_in;
    entry.neg_out = f.neg_out;
    entry.overall_loss = current;
    entry.clusters = static_cast<std::int64_t>(a.live_label_count());
    entry.elapsed_s = elapsed();
    result.trace.push_back(entry);
    if (observer != nullptr) observer->on_commit(entry);
  }

  result.labels = densify_labels(a.labels());
  result.metrics = evaluate(g, result.labels, config.alpha, config.beta);
  std::vector<std::int64_t> sizes;
  for (const Label l : result.labels) {
    if (static_cast<std::size_t>(l) >= sizes.size()) sizes.resize(static_cast<std::size_t>(l) + 1, 0);
    ++sizes[static_cast<std::size_t>(l)];
  }
  result.clusters = static_cast<std::int64_t>(sizes.size());
  for (const auto s : sizes) ++(s >= 5 ? result.clusters_ge5 : result.clusters_lt5);
  result.split_count = static_cast<std::int64_t>(result.trace.size());
  result.elapsed_s = elapsed();
  return result;
}

}  // namespace harary
