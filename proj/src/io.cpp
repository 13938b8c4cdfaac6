#include "harary/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

namespace harary {

namespace {

std::vector<std::string_view> split_fields(std::string_view line, bool commas_only) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [&](char c) {
    return c == ',' || (!commas_only && (c == ' ' || c == '\t'));
  };
  while (i <= line.size()) {
    if (!commas_only) {
      while (i < line.size() && is_sep(line[i])) ++i;
      if (i == line.size()) break;
    }
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    out.push_back(line.substr(i, j - i));
    if (j == line.size()) break;
    i = j + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "invalid vertex id '" + std::string(tok) + "'");
  }
  return v;
}

double parse_real(std::string_view tok, std::size_t line) {
  // std::from_chars for double is unavailable on older libstdc++.
  const std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError(line, "invalid number '" + s + "'");
  }
  return v;
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "konect") return InputFormat::konect;
  if (name == "amazon-ratings") return InputFormat::amazon_ratings;
  throw ConfigError("unknown input format '" + std::string(name) + "'");
}

std::string_view to_string(InputFormat f) {
  return f == InputFormat::konect ? "konect" : "amazon-ratings";
}

Sign map_rating(int rating) {
  if (rating < 1 || rating > 5) {
    throw Error("rating " + std::to_string(rating) + " outside [1,5]");
  }
  if (rating >= 4) return 1;
  if (rating == 3) return 0;
  return -1;
}

EdgeList parse_edge_list(std::istream& in, InputFormat format) {
  EdgeList out;
  std::unordered_map<std::string, std::uint64_t> users;
  std::unordered_map<std::string, std::uint64_t> items;
  auto intern = [&out](std::unordered_map<std::string, std::uint64_t>& table,
                       std::string_view tok, std::string_view prefix) {
    const auto [it, fresh] = table.emplace(std::string(tok), out.names.size());
    if (fresh) out.names.push_back(std::string(prefix) + std::string(tok));
    return it->second;
  };

  std::string buf;
  std::size_t line_no = 0;
  while (std::getline(in, buf)) {
    ++line_no;
    const std::string_view line = trim(buf);
    if (line.empty() || line.front() == '%' || line.front() == '#') continue;

    if (format == InputFormat::konect) {
      const auto f = split_fields(line, false);
      if (f.size() < 2) throw ParseError(line_no, "expected 'u v [w]'");
      RawEdge e;
      e.src = parse_id(f[0], line_no);
      e.dst = parse_id(f[1], line_no);
      e.weight = f.size() >= 3 ? parse_real(f[2], line_no) : 1.0;
      out.edges.push_back(e);
    } else {
      const auto f = split_fields(line, true);
      if (f.size() < 3 || f.size() > 4) {
        throw ParseError(line_no, "expected 'user,item,rating[,timestamp]'");
      }
      const auto user = trim(f[0]);
      const auto item = trim(f[1]);
      if (user.empty() || item.empty()) throw ParseError(line_no, "empty user or item id");
      const double r = parse_real(trim(f[2]), line_no);
      if (r != std::floor(r) || r < 1.0 || r > 5.0) {
        throw ParseError(line_no, "rating outside [1,5]");
      }
      RawEdge e;
      e.src = intern(users, user, "u:");
      e.dst = intern(items, item, "i:");
      e.weight = static_cast<double>(map_rating(static_cast<int>(r)));
      out.edges.push_back(e);
    }
  }
  if (in.bad()) throw Error("read error");
  return out;
}

EdgeList read_edge_list(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return parse_edge_list(in, format);
}

SignedGraph load_graph(const std::filesystem::path& path, InputFormat format) {
  return preprocess(read_edge_list(path, format));
}

}  // namespace harary
