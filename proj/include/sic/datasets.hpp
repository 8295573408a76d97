#pragma once

#include <string_view>

// Raw text of the bundled data tables (see data/ in the source tree).
namespace sic::datasets {

std::string_view kp40_rays();
std::string_view toh_pairs();
std::string_view toh_cliques();
std::string_view yu_oh_rays();

}  // namespace sic::datasets

#include <vector>

namespace sic::datasets {

/// Whitespace-separated integer rows; '#' starts a comment. Throws ParseError.
std::vector<std::vector<int>> parse_int_table(std::string_view text);

}  // namespace sic::datasets
