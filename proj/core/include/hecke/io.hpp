// Loading root data from JSON configuration files. The schema:
//   {
//     "name":    "affine_a1",
//     "matrix":  [[2,-2],[-2,2]],
//     "labels":  ["0","1"],           (optional)
//     "rank":    3,
//     "coroots": [[1,0,0],[0,1,0]],
//     "roots":   [[2,-2,1],[-2,2,0]],
//     "ht":      ["1","1","0"],       (rationals as "p/q" strings)
//     "delta":   ["0","0","1"]        (optional; marks the datum affine)
//   }
// Rationals are written as strings "p/q" or "p" to keep the files exact.

#pragma once

#include "hecke/root_datum.hpp"

#include <string>

namespace hecke {

Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

RootDatum load_datum_string(const std::string& json_text);
RootDatum load_datum_file(const std::string& path);

}  // namespace hecke
