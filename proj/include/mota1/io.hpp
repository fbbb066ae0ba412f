#pragma once

#include "mota1/module.hpp"

#include <string>

namespace mota1 {

// Module definition format (.a1mod): UTF-8, line-based, '#' comments.
//   module <name>
//   gen <id> <s> <w>
//   sq1 <src> <dst> [<dst>...]
//   sq2 <src> <dst> [<dst>...]
// Each <dst> contributes tau^k·dst with k forced by the degrees; edges with
// an ill-graded target are rejected with the offending edge named.  Omitted
// sources act by zero.
A1Module parse_module(const std::string& text);

// Canonical form: generators sorted by (s, w, id); edges sorted by source
// then target, one line per source.
std::string serialize_module(const A1Module& m);

A1Module read_module_file(const std::string& path);
void write_module_file(const A1Module& m, const std::string& path);

}  // namespace mota1
