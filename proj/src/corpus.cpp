#include "latknot/corpus.hpp"

#include <sstream>

#include "latknot/errors.hpp"

namespace latknot {

namespace detail {
extern const std::string_view corpus_text;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool parse_flag(const std::string &s, int line_no) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw KnotError(ErrorCode::MalformedInput, "corpus line " + std::to_string(line_no) + ": expected yes or no");
}

} // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto f = split(body, '|');
    if (f.size() != 7)
      throw KnotError(ErrorCode::MalformedInput, "corpus line " + std::to_string(line_no) + ": expected 7 fields");
    CorpusEntry e;
    e.name = f[0];
    e.knot = f[1];
    try {
      e.crossings = std::stoi(f[2]);
      if (f[4] != "-") e.known_min_len = std::stoll(f[4]);
    } catch (const std::logic_error &) {
      throw KnotError(ErrorCode::MalformedInput, "corpus line " + std::to_string(line_no) + ": bad number");
    }
    e.nonalternating_prime = parse_flag(f[3], line_no);
    e.alexander = LaurentPoly::parse(f[5]);
    e.grid = parse_grid(f[6]);
    out.push_back(std::move(e));
  }
  return out;
}

std::string_view builtin_corpus_text() { return detail::corpus_text; }

const std::vector<CorpusEntry> &builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = parse_corpus(detail::corpus_text);
  return corpus;
}

const CorpusEntry *find_corpus_entry(std::string_view name) {
  for (const auto &e : builtin_corpus())
    if (e.name == name || e.knot == name) return &e;
  return nullptr;
}

} // namespace latknot
