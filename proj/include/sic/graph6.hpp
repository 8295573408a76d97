#pragma once

#include "sic/graph.hpp"

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <string_view>

namespace sic {

/// Decodes one graph6 record (no trailing newline). Accepts the one-byte size
/// header (n <= 62) and the four-byte form (n <= 258047). An optional
/// ">>graph6<<" prefix is skipped. Throws ParseError naming the byte offset.
Graph parse_graph6(std::string_view record);

/// Encodes with zero padding to the 6-bit boundary.
std::string write_graph6(const Graph& g);

/// Line-oriented graph6 reader; blank lines are skipped, malformed records are
/// counted and handed to the error callback instead of aborting the stream.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  /// Next well-formed record, or false at end of stream. `record` receives the
  /// raw text, `graph` the decoded graph.
  bool next(std::string& record, Graph& graph);

  std::size_t records_read() const { return good_; }
  std::size_t malformed() const { return bad_; }

  void on_error(std::function<void(std::size_t line, const std::string& what)> cb) { error_cb_ = std::move(cb); }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::size_t good_ = 0;
  std::size_t bad_ = 0;
  std::function<void(std::size_t, const std::string&)> error_cb_;
};

}  // namespace sic
