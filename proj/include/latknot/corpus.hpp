#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latknot/grid.hpp"
#include "latknot/laurent.hpp"

namespace latknot {

struct CorpusEntry {
  std::string name;
  std::string knot; // table name, e.g. 3_1
  GridDiagram grid;
  int crossings = 0;
  bool nonalternating_prime = false;
  std::optional<std::int64_t> known_min_len;
  LaurentPoly alexander;
};

/// Parses the `|`-separated corpus format; `#` starts a comment.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// The corpus shipped with the library.
const std::vector<CorpusEntry> &builtin_corpus();
std::string_view builtin_corpus_text();

/// Looks up by entry name or knot name. Returns nullptr if absent.
const CorpusEntry *find_corpus_entry(std::string_view name);

} // namespace latknot
