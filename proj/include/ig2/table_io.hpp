// table_io.hpp -- versioned text serialization of structure tables and the
// on-disk cache (expensive oracle runs are reusable across processes)
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ig2/bgg.hpp"

namespace ig2 {

// Bumped whenever the oracle's semantics or the file layout change; cache
// files from other versions are ignored.
extern const char* const kOracleVersion;

void save_table(std::ostream& os, const StructureTable& tab, const MatchResult& match);
// Throws std::runtime_error on malformed or version-mismatched input.
StructureTable load_table(std::istream& is, MatchResult& match_out);

// Cache path for one family table: <dir>/<family><n>.<hash>.tbl
std::string cache_file_path(const std::string& dir, Family f, int n);

// Loads both family tables from the cache if present (and complete enough),
// otherwise builds and, when a directory is given, saves.
TableSet load_or_build_tables(int n, const std::optional<std::string>& cache_dir,
                              bool need_full_products);

}  // namespace ig2
