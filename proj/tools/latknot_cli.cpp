#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "latknot/bounds.hpp"
#include "latknot/corpus.hpp"
#include "latknot/fold.hpp"
#include "latknot/invariant.hpp"
#include "latknot/rope.hpp"

using namespace latknot;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0, kCertFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string label;
  GridDiagram grid;
  const CorpusEntry *entry = nullptr;
};

struct Options {
  std::vector<std::string> corpus;
  std::vector<std::string> inputs;
  std::string random;
  std::vector<std::string> lattices;
  std::string steps = "1-2-3";
  std::string out;
  std::string format = "text";
  std::string geometry = "polyline";
  int density = 32;
  std::string table;
  double thickness_tolerance = 1e-9;
};

int parse_steps(const std::string &s) {
  if (s == "1") return 1;
  if (s == "1-2") return 2;
  if (s == "1-2-3") return 3;
  throw UsageError("--steps must be 1, 1-2 or 1-2-3");
}

std::map<std::string, std::string> parse_spec(const std::string &spec) {
  std::map<std::string, std::string> kv;
  std::istringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value in '" + part + "'");
    kv[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return kv;
}

long long to_int(const std::string &s, const std::string &what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error &) {
    throw UsageError("bad integer for " + what + ": '" + s + "'");
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path &path, const std::string &text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

std::vector<Input> collect_inputs(const Options &o) {
  std::vector<Input> inputs;
  for (const auto &name : o.corpus) {
    if (name == "all") {
      for (const auto &e : builtin_corpus()) inputs.push_back({e.name, e.grid, &e});
      continue;
    }
    const CorpusEntry *e = find_corpus_entry(name);
    if (!e) throw UsageError("unknown corpus entry '" + name + "'");
    inputs.push_back({e->name, e->grid, e});
  }
  for (const auto &path : o.inputs)
    inputs.push_back({fs::path(path).stem().string(), parse_grid(read_file(path)), nullptr});
  if (!o.random.empty()) {
    auto kv = parse_spec(o.random);
    for (const auto &[k, v] : kv)
      if (k != "g" && k != "seed" && k != "count") throw UsageError("unknown random key '" + k + "'");
    if (!kv.count("g")) throw UsageError("--random needs g=");
    const int g = static_cast<int>(to_int(kv["g"], "g"));
    const auto seed = static_cast<std::uint64_t>(kv.count("seed") ? to_int(kv["seed"], "seed") : 0);
    const long long count = kv.count("count") ? to_int(kv["count"], "count") : 1;
    if (g < 2) throw UsageError("random grids need g >= 2");
    if (count < 1) throw UsageError("count must be positive");
    for (long long i = 0; i < count; ++i) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
      inputs.push_back({"random_g" + std::to_string(g) + "_seed" + std::to_string(s), random_grid(g, s), nullptr});
    }
  }
  return inputs;
}

Provenance provenance_for(const Input &in, int step) {
  Provenance p;
  p.step = step;
  p.g = in.grid.size;
  if (in.entry) {
    p.crossings = in.entry->crossings;
    p.nonalternating_prime = in.entry->nonalternating_prime;
    p.known_min_len = in.entry->known_min_len;
  }
  return p;
}

LatticeHeader header_for(const Input &in, const PipelineResult &r, int step) {
  LatticeHeader h;
  h.fields["source"] = in.label;
  h.fields["step"] = std::to_string(step);
  h.fields["grid_size"] = std::to_string(in.grid.size);
  std::string grid = serialize_grid(in.grid);
  while (!grid.empty() && grid.back() == '\n') grid.pop_back();
  for (std::size_t pos; (pos = grid.find('\n')) != std::string::npos;) grid.replace(pos, 1, " / ");
  h.fields["grid"] = grid;
  if (in.entry) {
    h.fields["crossings"] = std::to_string(in.entry->crossings);
    h.fields["nap"] = in.entry->nonalternating_prime ? "yes" : "no";
    if (in.entry->known_min_len) h.fields["known_min"] = std::to_string(*in.entry->known_min_len);
  }
  if (step == 2) h.fields["side"] = to_string(r.horizontal.report.side);
  if (step == 3) {
    h.fields["side"] = to_string(r.vertical.report.side);
    h.fields["parent_side"] = to_string(r.vertical_parent_side);
  }
  return h;
}

std::string report_text(const FoldReport &f) {
  std::ostringstream out;
  auto census = [&](const char *tag, const EdgeCensus &c) {
    out << tag << " edges x=" << c.x_edges << " y=" << c.y_edges << " z=" << c.z_edges << " total=" << c.total_edges()
        << " corners=" << c.corners << '\n';
  };
  out << "side " << to_string(f.side) << " fold_at " << f.fold_at << '\n';
  out << "removed_overlap_edges " << f.removed_overlap_edges << '\n';
  out << "broken_sticks_reconnected " << f.broken_sticks_reconnected << '\n';
  out << "added_y_edges " << f.added_y_edges << " added_z_edges " << f.added_z_edges << '\n';
  out << "lowered_sticks " << f.lowered_sticks << " raised_sticks " << f.raised_sticks << '\n';
  out << "removed x=" << f.removed[0] << " y=" << f.removed[1] << " z=" << f.removed[2] << '\n';
  out << "added x=" << f.added[0] << " y=" << f.added[1] << " z=" << f.added[2] << '\n';
  census("pre", f.pre);
  census("post", f.post);
  return out.str();
}

json certificate_json(const std::string &label, const Certificate &c) {
  json items = json::array();
  for (const auto &i : c.items)
    items.push_back({{"check", i.check}, {"lhs", i.lhs}, {"relation", i.relation}, {"rhs", i.rhs}, {"pass", i.pass}});
  const auto &e = c.census;
  return {{"input", label},
          {"step", c.provenance.step},
          {"grid_size", c.provenance.g},
          {"crossings", c.provenance.crossings},
          {"nonalternating_prime", c.provenance.nonalternating_prime},
          {"census",
           {{"x_edges", e.x_edges},
            {"y_edges", e.y_edges},
            {"z_edges", e.z_edges},
            {"x_sticks", e.x_sticks},
            {"y_sticks", e.y_sticks},
            {"z_sticks", e.z_sticks},
            {"corners", e.corners},
            {"total_edges", e.total_edges()}}},
          {"items", items},
          {"pass", c.pass()}};
}

void add_invariant_items(Certificate &cert, const LatticeKnot &k, const LaurentPoly &reference,
                         const std::string &reference_name) {
  if (!cert.items.empty() && !cert.items.front().pass) return; // invalid lattice
  try {
    const LaurentPoly a = alexander(project(k));
    cert.items.push_back({"Alexander polynomial preserved", a.to_string(), "==",
                          reference.to_string() + " (" + reference_name + ")",
                          same_knot_certificate(a, reference) == Consistency::Consistent});
  } catch (const KnotError &e) {
    cert.items.push_back({"Alexander polynomial preserved", e.what(), "==", reference.to_string(), false});
  }
}

void certify_rope_items(Certificate &cert, const LatticeKnot &k, double tolerance) {
  if (!cert.items.empty() && !cert.items.front().pass) return;
  try {
    certify_rope(cert, rope_metrics(smooth(k)), tolerance);
  } catch (const KnotError &e) {
    cert.items.push_back({"smoothing", e.what(), "==", "ok", false});
  }
}

class Emitter {
public:
  explicit Emitter(const Options &o) : o_(o) {}

  void certificate(const std::string &name, const Certificate &c) {
    if (o_.format == "json") {
      const std::string text = certificate_json(name, c).dump(2) + "\n";
      if (o_.out.empty())
        std::cout << text;
      else
        write_file(fs::path(o_.out) / (name + ".cert.json"), text);
    } else {
      const std::string text = name + " " + c.to_text();
      if (o_.out.empty())
        std::cout << text;
      else
        write_file(fs::path(o_.out) / (name + ".cert.txt"), text);
    }
    std::cout << (c.pass() ? "PASS " : "FAIL ") << name << '\n';
  }

private:
  const Options &o_;
};

int cmd_build(const Options &o) {
  const int steps = parse_steps(o.steps);
  const fs::path out = o.out.empty() ? fs::path("out") : fs::path(o.out);
  const auto inputs = collect_inputs(o);
  if (inputs.empty()) throw UsageError("no inputs; use --corpus, --input or --random");
  int status = kOk;
  for (const Input &in : inputs) {
    try {
      const PipelineResult r = run_pipeline(in.grid, steps);
      std::ostringstream summary;
      summary << in.label << " g=" << in.grid.size;
      for (int s = 1; s <= steps; ++s) {
        const LatticeKnot &k = r.stage(s);
        const std::string stem = in.label + ".step" + std::to_string(s);
        write_file(out / (stem + ".lattice"), serialize_lattice(k, header_for(in, r, s)));
        if (s == 2) write_file(out / (stem + ".report.txt"), report_text(r.horizontal.report));
        if (s == 3) write_file(out / (stem + ".report.txt"), report_text(r.vertical.report));
        const EdgeCensus c = edge_census(k);
        summary << " step" << s << "=" << c.total_edges() << "e/" << c.corners << "c";
      }
      std::cout << summary.str() << '\n';
    } catch (const KnotError &e) {
      std::cerr << in.label << ": " << e.what() << " (partial output)\n";
      status = kUsage;
    }
  }
  return status;
}

int certify_table(const std::string &spec) {
  const auto eq = spec.find('=');
  const auto dots = spec.find("..");
  if (spec.substr(0, eq) != "c" || eq == std::string::npos || dots == std::string::npos)
    throw UsageError("--table expects c=LO..HI");
  const long long lo = to_int(spec.substr(eq + 1, dots - eq - 1), "table start");
  const long long hi = to_int(spec.substr(dots + 2), "table end");
  if (lo < 3 || hi < lo) throw UsageError("table range must satisfy 3 <= LO <= HI");
  std::cout << "c | Len general (a, b) | Len nap (a, b) | Rop general (a, b) | Rop nap (a, b) | Rop decimal a | "
               "Cantarella | Diao Rop | prior Len\n";
  std::cout << std::fixed << std::setprecision(4);
  for (long long c = lo; c <= hi; ++c) {
    const int ci = static_cast<int>(c);
    const auto lg = theorem_len_bound(ci, false), ln = theorem_len_bound(ci, true);
    const auto rg = theorem_rop_bound(ci, false), rn = theorem_rop_bound(ci, true);
    const auto dec = theorem_rop_decimal(ci);
    const auto comp = comparator_bounds(ci);
    auto pair = [](const TheoremBound &t) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(4) << t.min.value.approx() << " (" << t.form_a.value.approx() << ", "
        << t.form_b.value.approx() << ")";
      return s.str();
    };
    std::cout << c << " | " << lg.min.value.to_string() << " (" << lg.form_a.value.to_string() << ", "
              << lg.form_b.value.to_string() << ") | " << ln.min.value.to_string() << " ("
              << ln.form_a.value.to_string() << ", " << ln.form_b.value.to_string() << ") | " << pair(rg) << " | "
              << pair(rn) << " | " << dec.form_a.value.approx() << " | " << comp[2].value.approx() << " | "
              << comp[1].value.approx() << " | " << comp[3].value.to_string() << '\n';
  }
  return kOk;
}

Provenance provenance_from_header(const LatticeHeader &h) {
  Provenance p;
  auto get = [&](const char *key) -> const std::string * {
    auto it = h.fields.find(key);
    return it == h.fields.end() ? nullptr : &it->second;
  };
  if (auto v = get("step")) p.step = static_cast<int>(to_int(*v, "step"));
  if (auto v = get("grid_size")) p.g = static_cast<int>(to_int(*v, "grid_size"));
  if (auto v = get("crossings")) p.crossings = static_cast<int>(to_int(*v, "crossings"));
  if (auto v = get("nap")) p.nonalternating_prime = *v == "yes";
  if (auto v = get("known_min")) p.known_min_len = to_int(*v, "known_min");
  return p;
}

int cmd_certify(const Options &o) {
  if (!o.table.empty()) return certify_table(o.table);
  if (o.format != "text" && o.format != "json") throw UsageError("--format must be text or json");
  const int steps = parse_steps(o.steps);
  const auto inputs = collect_inputs(o);
  if (inputs.empty() && o.lattices.empty()) throw UsageError("no inputs; use --corpus, --input, --random or --lattice");
  Emitter emit(o);
  bool all_pass = true;
  int status = kOk;
  for (const Input &in : inputs) {
    try {
      const PipelineResult r = run_pipeline(in.grid, steps);
      const LaurentPoly reference = alexander(grid_to_planar(in.grid));
      for (int s = 1; s <= steps; ++s) {
        const LatticeKnot &k = r.stage(s);
        Certificate cert = certify(k, provenance_for(in, s));
        if (in.entry && s == 1)
          cert.items.push_back({"grid Alexander polynomial matches table", reference.to_string(), "==",
                                in.entry->alexander.to_string(),
                                same_knot_certificate(reference, in.entry->alexander) == Consistency::Consistent});
        add_invariant_items(cert, k, reference, "grid diagram");
        certify_rope_items(cert, k, o.thickness_tolerance);
        all_pass = all_pass && cert.pass();
        emit.certificate(in.label + ".step" + std::to_string(s), cert);
      }
    } catch (const KnotError &e) {
      std::cerr << in.label << ": " << e.what() << '\n';
      status = kUsage;
    }
  }
  for (const auto &path : o.lattices) {
    LatticeHeader header;
    LatticeKnot k;
    try {
      k = parse_lattice(read_file(path), &header);
    } catch (const KnotError &e) {
      std::cerr << path << ": " << e.what() << '\n';
      status = kUsage;
      continue;
    }
    const std::string name = fs::path(path).filename().string();
    Certificate cert = certify(k, provenance_from_header(header));
    auto grid = header.fields.find("grid");
    if (grid != header.fields.end()) {
      try {
        add_invariant_items(cert, k, alexander(grid_to_planar(parse_grid(grid->second))), "source grid");
      } catch (const KnotError &e) {
        cert.items.push_back({"source grid", e.what(), "==", "valid", false});
      }
    }
    certify_rope_items(cert, k, o.thickness_tolerance);
    all_pass = all_pass && cert.pass();
    emit.certificate(name, cert);
  }
  if (status != kOk) return status;
  return all_pass ? kOk : kCertFail;
}

int cmd_export(const Options &o) {
  ExportFormat format;
  if (o.geometry == "polyline")
    format = ExportFormat::Polyline;
  else if (o.geometry == "arc")
    format = ExportFormat::ArcExact;
  else
    throw UsageError("--geometry must be polyline or arc");
  if (format == ExportFormat::Polyline && o.density < 8) throw UsageError("--density must be at least 8");
  const int steps = parse_steps(o.steps);
  const fs::path out = o.out.empty() ? fs::path("out") : fs::path(o.out);
  const std::string suffix = format == ExportFormat::Polyline ? ".polyline.txt" : ".arcs.txt";

  std::vector<std::pair<std::string, std::pair<LatticeKnot, Provenance>>> jobs;
  for (const Input &in : collect_inputs(o)) {
    const PipelineResult r = run_pipeline(in.grid, steps);
    for (int s = 1; s <= steps; ++s)
      jobs.push_back({in.label + ".step" + std::to_string(s), {r.stage(s), provenance_for(in, s)}});
  }
  for (const auto &path : o.lattices) {
    LatticeHeader header;
    LatticeKnot k = parse_lattice(read_file(path), &header);
    jobs.push_back({fs::path(path).stem().string(), {k, provenance_from_header(header)}});
  }
  if (jobs.empty()) throw UsageError("no inputs; use --corpus, --input, --random or --lattice");

  std::cout << std::setprecision(12);
  for (const auto &[name, job] : jobs) {
    const SmoothKnot s = smooth(job.first);
    const RopeMetrics m = rope_metrics(s);
    write_file(out / (name + suffix), export_geometry(s, format, o.density));
    std::cout << name << " length=" << m.length << " corners=" << m.corner_count
              << " thickness=" << m.thickness_radius << " ropelength=" << m.ropelength;
    if (job.second.step >= 1 && job.second.step <= 3 && job.second.g >= 2)
      std::cout << " step_bound=" << rop_step_bound(job.second.step, job.second.g).value.approx();
    std::cout << '\n';
  }
  return kOk;
}

int cmd_table(const Options &o) { return certify_table(o.table.empty() ? "c=3..16" : o.table); }

void add_input_flags(CLI::App *cmd, Options &o) {
  cmd->add_option("--corpus", o.corpus, "Corpus entry names, or 'all'");
  cmd->add_option("--input", o.inputs, "Grid diagram files");
  cmd->add_option("--random", o.random, "Random grids as g=G,seed=S,count=N");
  cmd->add_option("--steps", o.steps, "Pipeline prefix: 1, 1-2 or 1-2-3");
  cmd->add_option("--out", o.out, "Output directory");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Lattice knot construction, certification and smoothing"};
  app.require_subcommand(1);
  Options o;

  auto *build = app.add_subcommand("build", "Write lattice knots for each pipeline step");
  add_input_flags(build, o);

  auto *certify_cmd = app.add_subcommand("certify", "Check constructions against the bounds");
  add_input_flags(certify_cmd, o);
  certify_cmd->add_option("--lattice", o.lattices, "Lattice knot files to certify");
  certify_cmd->add_option("--format", o.format, "Certificate format: text or json");
  certify_cmd->add_option("--table", o.table, "Print the bound table for c=LO..HI instead");
  certify_cmd->add_option("--thickness-tolerance", o.thickness_tolerance, "Allowed thickness deficit")
      ->check(CLI::PositiveNumber);

  auto *export_cmd = app.add_subcommand("export", "Write smoothed geometry and rope metrics");
  add_input_flags(export_cmd, o);
  export_cmd->add_option("--lattice", o.lattices, "Lattice knot files to smooth");
  export_cmd->add_option("--geometry", o.geometry, "polyline or arc");
  export_cmd->add_option("--density", o.density, "Polyline samples per arc (at least 8)");

  auto *table = app.add_subcommand("table", "Print the bound table");
  table->add_option("--range", o.table, "c=LO..HI (default c=3..16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(o);
    if (*certify_cmd) return cmd_certify(o);
    if (*export_cmd) return cmd_export(o);
    if (*table) return cmd_table(o);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const KnotError &e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
