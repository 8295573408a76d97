#include "sic/graph6.hpp"

#include "sic/errors.hpp"

namespace sic {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > 126) {
    throw ParseError("byte value " + std::to_string(c) + " outside printable graph6 range 63..126", base + pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  std::size_t base = 0;
  if (record.starts_with(kHeader)) {
    record.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!record.empty() && (record.back() == '\r' || record.back() == '\n')) record.remove_suffix(1);
  if (record.empty()) throw ParseError("empty graph6 record", base);

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(record[0]) == 126) {
    if (record.size() >= 2 && static_cast<unsigned char>(record[1]) == 126) {
      throw ParseError("eight-byte size header is not supported", base + 1);
    }
    if (record.size() < 4) throw ParseError("truncated size header", base + record.size());
    n = (static_cast<long>(sextet(record, 1, base)) << 12) | (sextet(record, 2, base) << 6) | sextet(record, 3, base);
    pos = 4;
  } else {
    n = sextet(record, 0, base);
    pos = 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (record.size() - pos < body) {
    throw ParseError("truncated bit body: expected " + std::to_string(body) + " bytes, got " +
                         std::to_string(record.size() - pos),
                     base + record.size());
  }
  if (record.size() - pos > body) {
    throw ParseError("trailing bytes after bit body", base + pos + body);
  }

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(record, pos + k / 6, base);
      if (byte & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  }
  // validate the padding bytes' range too
  for (std::size_t b = k / 6; b < body; ++b) sextet(record, pos + b, base);
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    throw CapacityError("graph6 writer supports at most 258047 vertices");
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

bool Graph6Reader::next(std::string& record, Graph& graph) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      graph = parse_graph6(line);
    } catch (const ParseError& e) {
      ++bad_;
      if (error_cb_) error_cb_(line_, e.what());
      continue;
    }
    ++good_;
    record = std::move(line);
    return true;
  }
  return false;
}

}  // namespace sic
