#include "latknot/grid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

namespace latknot {

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    if (!comment) out.push_back(ch);
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<int> parse_int_list(const std::string &body) {
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    std::string t = trim(token);
    token.clear();
    if (t.empty()) throw KnotError(ErrorCode::MalformedInput, "empty entry in list");
    for (char ch : t)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw KnotError(ErrorCode::MalformedInput, "non-integer entry '" + t + "'");
    if (t.size() > 6) throw KnotError(ErrorCode::MalformedInput, "entry too large '" + t + "'");
    values.push_back(std::stoi(t));
  };
  // Commas separate entries; without commas, whitespace does.
  const bool commas = body.find(',') != std::string::npos;
  bool pending = false;
  for (char ch : body) {
    const bool space = std::isspace(static_cast<unsigned char>(ch)) != 0;
    if (ch == ',' || (!commas && space)) {
      if (commas || pending) flush();
      pending = false;
    } else {
      token.push_back(ch);
      pending = pending || !space;
    }
  }
  if (commas || pending) flush();
  return values;
}

GridDiagram parse_lists(const std::string &text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '/', '\n');
  std::istringstream in(normalized);
  std::string line;
  bool have_x = false, have_o = false;
  GridDiagram d;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) throw KnotError(ErrorCode::MalformedInput, "expected 'X:' or 'O:' in '" + t + "'");
    std::string label = trim(std::string_view(t).substr(0, colon));
    std::string body = t.substr(colon + 1);
    if (label == "X" || label == "x") {
      if (have_x) throw KnotError(ErrorCode::MalformedInput, "duplicate X list");
      d.x_col = parse_int_list(body);
      have_x = true;
    } else if (label == "O" || label == "o") {
      if (have_o) throw KnotError(ErrorCode::MalformedInput, "duplicate O list");
      d.o_col = parse_int_list(body);
      have_o = true;
    } else {
      throw KnotError(ErrorCode::MalformedInput, "unknown label '" + label + "'");
    }
  }
  if (!have_x || !have_o) throw KnotError(ErrorCode::MalformedInput, "both X and O lists are required");
  if (d.x_col.size() != d.o_col.size())
    throw KnotError(ErrorCode::MalformedInput, "X and O lists differ in length");
  d.size = static_cast<int>(d.x_col.size());
  return d;
}

GridDiagram parse_matrix(const std::string &text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string row;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) row.push_back(ch);
    if (!row.empty()) rows.push_back(row);
  }
  if (rows.empty()) throw KnotError(ErrorCode::MalformedInput, "empty grid");
  const int g = static_cast<int>(rows.size());
  GridDiagram d;
  d.size = g;
  d.x_col.assign(g, 0);
  d.o_col.assign(g, 0);
  // First text line is the top row (row g).
  for (int i = 0; i < g; ++i) {
    const std::string &row = rows[i];
    if (static_cast<int>(row.size()) != g)
      throw KnotError(ErrorCode::MalformedInput, "grid is not square");
    const int r = g - 1 - i;
    int nx = 0, no = 0;
    for (int c = 0; c < g; ++c) {
      switch (row[c]) {
      case 'X': case 'x': d.x_col[r] = c + 1; ++nx; break;
      case 'O': case 'o': d.o_col[r] = c + 1; ++no; break;
      case '.': break;
      default: throw KnotError(ErrorCode::MalformedInput, std::string("unexpected character '") + row[c] + "'");
      }
    }
    if (nx != 1 || no != 1)
      throw KnotError(ErrorCode::NotAPermutation, "row " + std::to_string(r + 1) + " needs exactly one X and one O");
  }
  return d;
}

bool is_permutation_of(const std::vector<int> &v, int g) {
  std::vector<bool> seen(g + 1, false);
  for (int c : v) {
    if (c < 1 || c > g || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

int sgn(int v) { return (v > 0) - (v < 0); }

} // namespace

int GridDiagram::x_row(int column) const {
  for (int r = 0; r < size; ++r)
    if (x_col[r] == column) return r + 1;
  return 0;
}

int GridDiagram::o_row(int column) const {
  for (int r = 0; r < size; ++r)
    if (o_col[r] == column) return r + 1;
  return 0;
}

int count_components(const GridDiagram &d) {
  // Row r continues to column o_col[r], whose X sits in row next[r].
  const int g = d.size;
  std::vector<int> row_of_x(g + 1, -1);
  for (int r = 0; r < g; ++r) row_of_x[d.x_col[r]] = r;
  std::vector<bool> seen(g, false);
  int cycles = 0;
  for (int start = 0; start < g; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int r = start; !seen[r]; r = row_of_x[d.o_col[r]]) seen[r] = true;
  }
  return cycles;
}

GridReport validate_grid(const GridDiagram &d) {
  GridReport report;
  const int g = d.size;
  if (g < 1 || static_cast<int>(d.x_col.size()) != g || static_cast<int>(d.o_col.size()) != g) {
    report.push_back({GridViolation::BadSize, "grid size must be positive and match both permutations"});
    return report;
  }
  bool perms = true;
  if (!is_permutation_of(d.x_col, g)) {
    report.push_back({GridViolation::NotAPermutation, "X columns are not a permutation of 1.." + std::to_string(g)});
    perms = false;
  }
  if (!is_permutation_of(d.o_col, g)) {
    report.push_back({GridViolation::NotAPermutation, "O columns are not a permutation of 1.." + std::to_string(g)});
    perms = false;
  }
  for (int r = 0; r < g; ++r)
    if (d.x_col[r] == d.o_col[r])
      report.push_back({GridViolation::SameCellXO, "row " + std::to_string(r + 1) + " has X and O in one cell"});
  if (perms) {
    const int k = count_components(d);
    if (k != 1) report.push_back({GridViolation::MultiComponent, std::to_string(k) + " components"});
  }
  return report;
}

GridDiagram parse_grid(std::string_view text) {
  const std::string body = strip_comments(text);
  const bool lists = body.find(':') != std::string::npos;
  GridDiagram d = lists ? parse_lists(body) : parse_matrix(body);
  const GridReport report = validate_grid(d);
  for (GridViolation kind : {GridViolation::BadSize, GridViolation::NotAPermutation, GridViolation::SameCellXO,
                             GridViolation::MultiComponent}) {
    for (const auto &issue : report) {
      if (issue.kind != kind) continue;
      switch (kind) {
      case GridViolation::BadSize: throw KnotError(ErrorCode::MalformedInput, issue.detail);
      case GridViolation::NotAPermutation: throw KnotError(ErrorCode::NotAPermutation, issue.detail);
      case GridViolation::SameCellXO: throw KnotError(ErrorCode::SameCellXO, issue.detail);
      case GridViolation::MultiComponent: throw KnotError(ErrorCode::MultiComponent, issue.detail);
      }
    }
  }
  return d;
}

std::string serialize_grid(const GridDiagram &d, GridFormat format) {
  std::ostringstream out;
  if (format == GridFormat::Lists) {
    auto list = [&](const std::vector<int> &v) {
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    };
    out << "X: ";
    list(d.x_col);
    out << "\nO: ";
    list(d.o_col);
    out << '\n';
  } else {
    for (int r = d.size - 1; r >= 0; --r) {
      std::string row(d.size, '.');
      row[d.x_col[r] - 1] = 'X';
      row[d.o_col[r] - 1] = 'O';
      out << row << '\n';
    }
  }
  return out.str();
}

GridDiagram random_grid(int g, std::uint64_t seed) {
  if (g < 2) throw KnotError(ErrorCode::SizeTooSmall, "grid size must be at least 2");
  std::mt19937_64 rng(seed);
  GridDiagram d;
  d.size = g;
  d.x_col.resize(g);
  d.o_col.resize(g);
  while (true) {
    std::iota(d.x_col.begin(), d.x_col.end(), 1);
    std::iota(d.o_col.begin(), d.o_col.end(), 1);
    std::shuffle(d.x_col.begin(), d.x_col.end(), rng);
    std::shuffle(d.o_col.begin(), d.o_col.end(), rng);
    if (validate_grid(d).empty()) return d;
  }
}

std::vector<PlanarDiagram::Crossing> PlanarDiagram::crossings() const {
  const int n = crossing_count();
  const int m = static_cast<int>(passes.size());
  std::vector<int> over_at(n, -1), under_at(n, -1);
  for (int i = 0; i < m; ++i) (passes[i].over ? over_at : under_at)[passes[i].crossing] = i;
  std::vector<Crossing> out(n);
  for (int k = 0; k < n; ++k) {
    const int oi = (over_at[k] + m - 1) % m, oo = over_at[k];
    const int ui = (under_at[k] + m - 1) % m, uo = under_at[k];
    out[k].sign = signs[k];
    if (signs[k] > 0) {
      int e[4] = {ui, oo, uo, oi};
      std::copy(e, e + 4, out[k].edges);
    } else {
      int e[4] = {ui, oi, uo, oo};
      std::copy(e, e + 4, out[k].edges);
    }
  }
  return out;
}

PlanarDiagram grid_to_planar(const GridDiagram &d) {
  const int g = d.size;
  // Column c spans rows lo_row[c]..hi_row[c]; row r spans lo_col[r]..hi_col[r].
  std::vector<int> x_row(g + 1), o_row(g + 1);
  for (int r = 1; r <= g; ++r) {
    x_row[d.x_col[r - 1]] = r;
    o_row[d.o_col[r - 1]] = r;
  }
  auto row_crosses_column = [&](int r, int c) {
    const int a = std::min(d.x_col[r - 1], d.o_col[r - 1]), b = std::max(d.x_col[r - 1], d.o_col[r - 1]);
    const int lo = std::min(x_row[c], o_row[c]), hi = std::max(x_row[c], o_row[c]);
    return a < c && c < b && lo < r && r < hi;
  };

  PlanarDiagram pd;
  std::vector<std::vector<int>> id(g + 1, std::vector<int>(g + 1, -1)); // [row][col]
  auto crossing_id = [&](int r, int c) {
    if (id[r][c] < 0) {
      id[r][c] = static_cast<int>(pd.signs.size());
      const int dv = sgn(x_row[c] - o_row[c]);             // vertical runs O -> X
      const int dh = sgn(d.o_col[r - 1] - d.x_col[r - 1]); // horizontal runs X -> O
      pd.signs.push_back(-dv * dh);
    }
    return id[r][c];
  };

  int r = 1;
  do {
    const int from = d.x_col[r - 1], to = d.o_col[r - 1], step = sgn(to - from);
    for (int c = from + step; c != to; c += step)
      if (row_crosses_column(r, c)) pd.passes.push_back({crossing_id(r, c), false});
    const int c = to;
    const int next = x_row[c], vstep = sgn(next - r);
    for (int rr = r + vstep; rr != next; rr += vstep)
      if (row_crosses_column(rr, c)) pd.passes.push_back({crossing_id(rr, c), true});
    r = next;
  } while (r != 1);
  return pd;
}

} // namespace latknot
