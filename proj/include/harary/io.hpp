#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "harary/graph.hpp"

namespace harary {

enum class InputFormat {
  konect,          // "u v [w ...]", whitespace or comma separated
  amazon_ratings,  // "user,item,rating[,timestamp]"
};

InputFormat parse_input_format(std::string_view name);
std::string_view to_string(InputFormat f);

/// Rating 4-5 -> +1, 3 -> 0 (neutral), 1-2 -> -1. Throws Error otherwise.
Sign map_rating(int rating);

/// Reads edges in file order. Konect lines default to weight +1; comment
/// lines start with '%' or '#'. Amazon users and items share one dense id
/// space with disjoint ids and are named "u:<token>" / "i:<token>".
/// Throws ParseError carrying the 1-based line number.
EdgeList parse_edge_list(std::istream& in, InputFormat format);

/// Opens and parses a file. Throws Error if the file cannot be read.
EdgeList read_edge_list(const std::filesystem::path& path, InputFormat format);

/// Convenience: read + preprocess.
SignedGraph load_graph(const std::filesystem::path& path, InputFormat format);

}  // namespace harary
