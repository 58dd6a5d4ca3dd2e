#pragma once

#include "polycauchy/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polycauchy {

/// One "index value" line of an OEIS b-file.
struct BFileEntry {
    long long index = 0;
    BigInt value;
};

struct BFile {
    std::vector<BFileEntry> entries;
};

/// Parses b-file text: one "index value" pair per line, '#' starts a
/// comment line, blank lines are skipped, indices must be strictly
/// increasing. Errors carry the 1-based line number.
BFile parse_bfile(std::istream& in);

/// Opens and parses; errors mention the path.
BFile load_bfile(const std::string& path);

}  // namespace polycauchy
