#include "sic/datasets.hpp"
#include "sic/errors.hpp"

#include <charconv>

namespace sic::datasets {

std::vector<std::vector<int>> parse_int_table(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<int> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc()) throw ParseError("expected an integer in data table", pos + i);
      i = static_cast<std::size_t>(ptr - line.data());
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
    pos = eol + 1;
  }
  return rows;
}

}  // namespace sic::datasets
