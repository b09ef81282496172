#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratcat/set_partition.hpp"

namespace ratcat {

// "1,3|2|4,6,7|5". The ground set is [n] for n the number of elements
// listed unless n > 0 is given. Throws ParseError / InvalidPartition.
SetPartition parse_partition(std::string_view text, int n = 0);
std::string format_partition(const SetPartition& p);

// "1,0,2,0"; whitespace is ignored. Throws ParseError.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const int> xs, std::string_view sep = ",");
std::string format_block(std::span<const int> block);

}  // namespace ratcat
