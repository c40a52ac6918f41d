#include "triblock/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triblock/characterization.hpp"
#include "triblock/constructions.hpp"
#include "triblock/core.hpp"
#include "triblock/document.hpp"
#include "triblock/enumeration.hpp"
#include "triblock/svg.hpp"

namespace triblock {

namespace {

using nlohmann::json;

struct ReportRow {
  int n = 0;
  int t = 0;
  bool blocker = false;
  bool saturated = false;
  std::string classification;
  std::optional<int> stability;
  double ms = 0.0;
};

const char* variant_name(Nm1Variant v) {
  switch (v) {
    case Nm1Variant::kSeagull:
      return "seagull";
    case Nm1Variant::kButterfly:
      return "butterfly";
    case Nm1Variant::kBouquet:
      return "bouquet";
  }
  return "unknown";
}

// Full verdict for one edge set: blocking, saturation, and (for the two
// structured sizes) the template parse plus the edit distance to size n-2.
ReportRow analyze(const EdgeSet& b) {
  auto start = std::chrono::steady_clock::now();
  ReportRow row;
  row.n = b.polygon_size();
  row.t = b.size();
  row.blocker = is_blocker(b);
  row.saturated = row.blocker && is_saturated_blocker(b);
  if (row.saturated) {
    if (row.t == row.n - 2) {
      if (recognize_min_blocker(b)) row.classification = "minimum";
    } else if (row.t == row.n - 1 && row.n > 5) {
      try {
        Nm1Classification c = classify_nm1(b);
        row.classification = variant_name(c.variant);
        row.stability = stability_distance(b).second;
      } catch (const ConstraintError&) {
      }
    }
  }
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

int verdict_exit_code(const ReportRow& row) {
  if (row.saturated) return 0;
  if (!row.blocker) return 1;
  return 2;
}

// Streams rows in JSON-lines or CSV; `stable` drops the timing column so two
// runs compare byte-identically.
class RowEmitter {
 public:
  RowEmitter(std::ostream& out, std::string format, bool stable) : out_(out), format_(std::move(format)), stable_(stable) {}

  void emit(const ReportRow& row) {
    if (format_ == "csv") {
      if (!header_done_) {
        out_ << "n,t,is_blocker,is_saturated,classification,stability_distance";
        if (!stable_) out_ << ",ms";
        out_ << "\n";
        header_done_ = true;
      }
      out_ << row.n << "," << row.t << "," << (row.blocker ? "true" : "false") << "," << (row.saturated ? "true" : "false") << "," << row.classification << ",";
      if (row.stability) out_ << *row.stability;
      if (!stable_) out_ << "," << row.ms;
      out_ << "\n";
      return;
    }
    json j;
    j["n"] = row.n;
    j["t"] = row.t;
    j["is_blocker"] = row.blocker;
    j["is_saturated"] = row.saturated;
    j["classification"] = row.classification;
    if (row.stability) {
      j["stability_distance"] = *row.stability;
    } else {
      j["stability_distance"] = nullptr;
    }
    if (!stable_) j["ms"] = row.ms;
    out_ << j.dump() << "\n";
  }

  void note(const std::string& key, const json& value) {
    if (format_ == "csv") {
      out_ << "# " << key << "=" << value.dump() << "\n";
    } else {
      json j;
      j[key] = value;
      out_ << j.dump() << "\n";
    }
  }

  void summary(int passed, int failed) {
    if (format_ == "csv") {
      out_ << "# passed=" << passed << " failed=" << failed << "\n";
    } else {
      json j;
      j["summary"] = {{"passed", passed}, {"failed", failed}};
      out_ << j.dump() << "\n";
    }
  }

 private:
  std::ostream& out_;
  std::string format_;
  bool stable_ = false;
  bool header_done_ = false;
};

std::pair<int, int> parse_range(const std::string& text) {
  auto bad = [&] { return ConstraintError("range \"" + text + "\" must look like N or A..B"); };
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      int single = std::stoi(text);
      return {single, single};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw bad();
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string read_text(const std::string& path) {
  if (path.empty()) {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot open output file: " + path);
  file << text;
}

// Names the construction family the size-spectrum dispatcher picks for
// (n, t); mirrors build_spectrum_blocker's band order.
std::string spectrum_family_name(int n, int t) {
  SpectrumBands bands = spectrum_bands(n);
  if (t <= bands.quad_end) return "quadrilateral";
  if (bands.bridge_enabled && t <= bands.bridge_end) return "bridge";
  if (bands.balanced_enabled && t <= bands.balanced_end) return "balanced";
  return "nested";
}

SymmetryGroup group_from_name(const std::string& name) {
  return name == "dihedral" ? SymmetryGroup::kDihedral : SymmetryGroup::kRotation;
}

struct CheckOptions {
  std::string in_path;
  std::string format = "json";
  bool stable = false;
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  BlockerDocument doc;
  try {
    doc = parse_document(read_text(opt.in_path));
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  ReportRow row = analyze(doc.edges);
  RowEmitter emitter(out, opt.format, opt.stable);
  emitter.emit(row);
  return verdict_exit_code(row);
}

struct ConstructOptions {
  std::vector<int> spectrum;  // n t
  int min_n = 0;
  int quad_n = 0;
  int matrioshka_n = 0;
  int seagull_n = 0;
  int butterfly_n = 0;
  int bouquet_n = 0;
  int m = -1;
  int ell = -1;
  int k = -1;
  int t = -1;
  int cut_a = -1;
  int cut_b = -1;
  int cut_c = -1;
  std::vector<int> beams;
  std::vector<int> beams_left;
  std::vector<int> beams_right;
  std::string top_path;
  std::string bottom_path;
  std::string out_path;
  bool no_verify = false;
};

int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err) {
  BlockerDocument doc;
  try {
    if (!opt.spectrum.empty()) {
      int n = opt.spectrum[0], t = opt.spectrum[1];
      doc.edges = build_spectrum_blocker(n, t);
      doc.metadata = {{"family", spectrum_family_name(n, t)}, {"n", std::to_string(n)}, {"t", std::to_string(t)}};
    } else if (opt.min_n > 0) {
      if (opt.m < 0) throw ConstraintError("--min requires --m (net length)");
      doc.edges = build_min_blocker(opt.min_n, opt.m, opt.beams);
      doc.metadata = {{"family", "minimum"}, {"m", std::to_string(opt.m)}, {"beams", join_ints(opt.beams)}};
    } else if (opt.quad_n > 0) {
      doc.edges = build_quadrilateral(QuadPartition{opt.quad_n, opt.cut_a, opt.cut_b, opt.cut_c});
      doc.metadata = {{"family", "quadrilateral"}, {"cuts", join_ints({opt.cut_a, opt.cut_b, opt.cut_c})}};
    } else if (opt.matrioshka_n > 0) {
      BlockerDocument top = parse_document(read_text(opt.top_path));
      BlockerDocument bottom = parse_document(read_text(opt.bottom_path));
      doc.edges = build_matrioshka(QuadPartition{opt.matrioshka_n, opt.cut_a, opt.cut_b, opt.cut_c}, top.edges, bottom.edges);
      doc.metadata = {{"family", "matrioshka"}, {"cuts", join_ints({opt.cut_a, opt.cut_b, opt.cut_c})}};
    } else if (opt.seagull_n > 0) {
      doc.edges = build_seagull_blocker(opt.seagull_n, opt.ell, opt.m, opt.beams);
      doc.metadata = {{"family", "seagull"}, {"ell", std::to_string(opt.ell)}, {"m", std::to_string(opt.m)}, {"beams", join_ints(opt.beams)}};
    } else if (opt.butterfly_n > 0) {
      doc.edges = build_butterfly_blocker(opt.butterfly_n, opt.ell, opt.m, opt.beams);
      doc.metadata = {{"family", "butterfly"}, {"ell", std::to_string(opt.ell)}, {"m", std::to_string(opt.m)}, {"beams", join_ints(opt.beams)}};
    } else if (opt.bouquet_n > 0) {
      doc.edges = build_bouquet_blocker(opt.bouquet_n, opt.ell, opt.m, opt.k, opt.t, opt.beams_left, opt.beams_right);
      doc.metadata = {{"family", "bouquet"}, {"ell", std::to_string(opt.ell)}, {"m", std::to_string(opt.m)}, {"k", std::to_string(opt.k)}, {"t", std::to_string(opt.t)}, {"beams_left", join_ints(opt.beams_left)}, {"beams_right", join_ints(opt.beams_right)}};
    } else {
      err << "error: choose a construction family (--spectrum, --min, --quadrilateral, --matrioshka, --seagull, --butterfly, --bouquet)\n";
      return 3;
    }
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  if (!opt.no_verify && !is_saturated_blocker(doc.edges)) {
    err << "error: self-check failed: construction is not a saturated blocker\n";
    return 4;
  }
  try {
    write_text(opt.out_path, serialize_document(doc), out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

struct SweepOptions {
  std::string spectrum_range;
  int exhaustive_n = 0;
  std::string coefficient_range;
  std::string format = "json";
  bool stable = false;
  std::string group = "rotation";
};

int sweep_spectrum(const std::string& range_text, RowEmitter& emitter, std::ostream& err) {
  auto [lo, hi] = parse_range(range_text);
  int passed = 0, failed = 0;
  for (int n = lo; n <= hi; ++n) {
    int reach = max_reachable(n);
    for (int t = n - 2; t <= reach; ++t) {
      try {
        EdgeSet b = build_spectrum_blocker(n, t);
        ReportRow row = analyze(b);
        emitter.emit(row);
        if (row.saturated && row.t == t) {
          ++passed;
        } else {
          ++failed;
          err << "sweep failure: n=" << n << " t=" << t << " built size " << row.t << " saturated=" << row.saturated << "\n";
        }
      } catch (const std::runtime_error& e) {
        ++failed;
        err << "sweep failure: n=" << n << " t=" << t << ": " << e.what() << "\n";
      }
    }
  }
  emitter.summary(passed, failed);
  return failed == 0 ? 0 : 4;
}

int sweep_exhaustive(int n, SymmetryGroup group, RowEmitter& emitter, std::ostream& err) {
  std::vector<EdgeSet> found = all_saturated_blockers(n);
  std::map<int, std::vector<EdgeSet>> by_size;
  int passed = 0, failed = 0;
  for (const EdgeSet& b : found) {
    ReportRow row = analyze(b);
    emitter.emit(row);
    if (row.saturated) {
      ++passed;
    } else {
      ++failed;
      err << "sweep failure: exhaustive candidate of size " << b.size() << " is not saturated\n";
    }
    by_size[b.size()].push_back(b);
  }
  for (const auto& [size, sets] : by_size) {
    emitter.note("sizes", json{{"size", size}, {"count", sets.size()}, {"orbits", canonical_orbits(sets, group).size()}});
  }
  emitter.summary(passed, failed);
  return failed == 0 ? 0 : 4;
}

int sweep_coefficients(const std::string& range_text, const std::string& format, std::ostream& out, std::ostream& err) {
  auto [lo, hi] = parse_range(range_text);
  if (lo < 0) throw ConstraintError("coefficient indices start at 0");
  int passed = 0, failed = 0;
  bool csv = format == "csv";
  if (csv) out << "i,a,b,c,matches_closed_form\n";
  for (int i = lo; i <= hi; ++i) {
    RecursionCoefficients rc = recursion_coefficients(i);
    bool match = rc.a == nested_growth_a_closed(i) && rc.b == nested_growth_b_closed(i) && rc.c == nested_growth_c_closed(i);
    (match ? passed : failed) += 1;
    if (!match) err << "coefficient mismatch at i=" << i << "\n";
    if (csv) {
      out << i << "," << rc.a.str() << "," << rc.b.str() << "," << rc.c.str() << "," << (match ? "true" : "false") << "\n";
    } else {
      json j{{"i", i}, {"a", rc.a.str()}, {"b", rc.b.str()}, {"c", rc.c.str()}, {"matches_closed_form", match}};
      out << j.dump() << "\n";
    }
  }
  if (csv) {
    out << "# passed=" << passed << " failed=" << failed << "\n";
  } else {
    json j;
    j["summary"] = {{"passed", passed}, {"failed", failed}};
    out << j.dump() << "\n";
  }
  return failed == 0 ? 0 : 4;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  int modes = (!opt.spectrum_range.empty() ? 1 : 0) + (opt.exhaustive_n > 0 ? 1 : 0) + (!opt.coefficient_range.empty() ? 1 : 0);
  if (modes != 1) {
    err << "error: choose exactly one sweep mode (--spectrum, --exhaustive, --coefficients)\n";
    return 3;
  }
  RowEmitter emitter(out, opt.format, opt.stable);
  try {
    if (!opt.spectrum_range.empty()) return sweep_spectrum(opt.spectrum_range, emitter, err);
    if (opt.exhaustive_n > 0) return sweep_exhaustive(opt.exhaustive_n, group_from_name(opt.group), emitter, err);
    return sweep_coefficients(opt.coefficient_range, opt.format, out, err);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

struct RenderOptions {
  std::string in_path;
  std::string out_path;
  bool witness = false;
};

int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    BlockerDocument doc = parse_document(read_text(opt.in_path));
    std::optional<EdgeSet> overlay;
    if (opt.witness) {
      int n = doc.edges.polygon_size();
      overlay = witness_triangulation(EdgeSet::all_diagonals(n) - doc.edges);
      if (!overlay) err << "note: no witness triangulation exists (the set blocks every triangulation); rendering without overlay\n";
    }
    write_text(opt.out_path, render_svg(doc.edges, overlay), out);
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saturated blockers of convex-polygon triangulations: verify, construct, sweep, render"};
  app.require_subcommand(1);

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "Verify a blocker document and report its structure");
  check_cmd->add_option("--in", check.in_path, "Input document (default: stdin)");
  check_cmd->add_option("--format", check.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  check_cmd->add_flag("--stable", check.stable, "Omit timing fields");

  ConstructOptions construct;
  CLI::App* construct_cmd = app.add_subcommand("construct", "Build a blocker from a named family");
  construct_cmd->add_option("--spectrum", construct.spectrum, "n t: saturated blocker of size t on the n-gon")->expected(2);
  construct_cmd->add_option("--min", construct.min_n, "n: minimum-sized blocker (with --m, --beams)");
  construct_cmd->add_option("--quadrilateral", construct.quad_n, "n: four-block bipartite blocker (with --cut-a/b/c)");
  construct_cmd->add_option("--matrioshka", construct.matrioshka_n, "n: shell with nested sub-blockers (with cuts, --top, --bottom)");
  construct_cmd->add_option("--seagull", construct.seagull_n, "n: size n-1 blocker with a seagull motif");
  construct_cmd->add_option("--butterfly", construct.butterfly_n, "n: size n-1 blocker with a butterfly motif");
  construct_cmd->add_option("--bouquet", construct.bouquet_n, "n: size n-1 blocker with a bouquet motif");
  construct_cmd->add_option("--m", construct.m, "Net length parameter");
  construct_cmd->add_option("--ell", construct.ell, "Pivot vertex");
  construct_cmd->add_option("--k", construct.k, "Bouquet anchor vertex");
  construct_cmd->add_option("--t", construct.t, "Bouquet width");
  construct_cmd->add_option("--cut-a", construct.cut_a, "First partition cut");
  construct_cmd->add_option("--cut-b", construct.cut_b, "Second partition cut");
  construct_cmd->add_option("--cut-c", construct.cut_c, "Third partition cut");
  construct_cmd->add_option("--beams", construct.beams, "Beam targets")->delimiter(',');
  construct_cmd->add_option("--beams-left", construct.beams_left, "Left beam targets")->delimiter(',');
  construct_cmd->add_option("--beams-right", construct.beams_right, "Right beam targets")->delimiter(',');
  construct_cmd->add_option("--top", construct.top_path, "Top sub-blocker document");
  construct_cmd->add_option("--bottom", construct.bottom_path, "Bottom sub-blocker document");
  construct_cmd->add_option("--out", construct.out_path, "Output path (default: stdout)");
  construct_cmd->add_flag("--no-verify", construct.no_verify, "Skip the saturation self-check");

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Batch verification reports");
  sweep_cmd->add_option("--spectrum", sweep.spectrum_range, "n range (A..B): construct and verify every realizable size");
  sweep_cmd->add_option("--exhaustive", sweep.exhaustive_n, "n: search every saturated blocker (capacity-guarded)");
  sweep_cmd->add_option("--coefficients", sweep.coefficient_range, "index range (A..B): recursion coefficient table");
  sweep_cmd->add_option("--format", sweep.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_flag("--stable", sweep.stable, "Omit timing fields");
  sweep_cmd->add_option("--group", sweep.group, "Orbit symmetry group")->check(CLI::IsMember({"rotation", "dihedral"}));

  RenderOptions render;
  CLI::App* render_cmd = app.add_subcommand("render", "Draw a blocker document as SVG");
  render_cmd->add_option("--in", render.in_path, "Input document (default: stdin)");
  render_cmd->add_option("--out", render.out_path, "Output path (default: stdout)");
  render_cmd->add_flag("--witness", render.witness, "Overlay a witness triangulation when one exists");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  if (app.got_subcommand(check_cmd)) return cmd_check(check, out, err);
  if (app.got_subcommand(construct_cmd)) return cmd_construct(construct, out, err);
  if (app.got_subcommand(sweep_cmd)) return cmd_sweep(sweep, out, err);
  return cmd_render(render, out, err);
}

}  // namespace triblock
