#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "tridisc/constructor.hpp"
#include "tridisc/developer.hpp"
#include "tridisc/enumerator.hpp"
#include "tridisc/flat_metric.hpp"
#include "tridisc/isomorphism.hpp"
#include "tridisc/svg.hpp"
#include "tridisc/tri_format.hpp"

namespace tridisc::cli {

namespace {

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_word(const BoundaryWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer list");
  return out;
}

std::string describe_type(const CombinatorialDisc& disc) {
  try {
    const TypeClassification t = classify_type(disc);
    return t.regular() ? "type regular" : "type (6," + std::to_string(t.valence) + ")";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MultipleIrregular) throw;
    return "type mixed (several irregular interior vertices)";
  }
}

std::string describe_disc(const CombinatorialDisc& disc) {
  return "V=" + std::to_string(disc.num_vertices()) + " E=" + std::to_string(disc.num_edges()) +
         " F=" + std::to_string(disc.num_faces()) + ", " + describe_type(disc);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

std::string format_point(const EisensteinPoint& p) { return std::to_string(p.a) + " " + std::to_string(p.b); }

int cmd_validate(const std::string& file, std::ostream& out) {
  const CombinatorialDisc disc = read_tri_file(file);
  out << "disc: " << describe_disc(disc) << '\n';
  return 0;
}

int cmd_analyze(const std::string& file, std::ostream& out) {
  const CombinatorialDisc disc = read_tri_file(file);
  out << "vertex\tinterior\tdegree\twedges\tdefect\torder\n";
  for (VertexId v = 0; v < disc.num_vertices(); ++v) {
    const ConeData c = cone_data(disc, v);
    out << v << '\t' << (c.interior ? "yes" : "no") << '\t' << disc.degree(v) << '\t' << c.wedges << '\t' << c.defect
        << '\t' << format_rational(c.order) << '\n';
  }
  const Divisor d = divisor(disc);
  out << "divisor_support\t" << d.terms.size() << '\n';
  out << "divisor_degree\t" << format_rational(d.degree) << '\n';
  out << "weighted_euler\t" << format_rational(weighted_euler(disc).chi_weighted) << '\n';
  out << "gauss_bonnet_residual\t" << check_gauss_bonnet(disc) << '\n';
  return 0;
}

struct Developed {
  CombinatorialDisc disc;
  Development dev;
  std::optional<CutDisc> cut;
  TypeClassification type;
};

Developed develop_file(const std::string& file) {
  const CombinatorialDisc disc = read_tri_file(file);
  const TypeClassification type = classify_type(disc);
  if (type.regular()) return {disc, develop(disc), std::nullopt, type};
  CutDisc cut = cut_along_shortest_path(disc);
  Development dev = develop(cut);
  return {cut.cut, std::move(dev), std::move(cut), type};
}

int cmd_develop(const std::string& file, const std::string& svg, std::ostream& out) {
  const Developed d = develop_file(file);
  out << "disc: " << describe_disc(d.cut ? d.cut->base : d.disc) << '\n';
  if (d.cut) {
    out << "cut_path";
    for (VertexId v : d.cut->path) out << ' ' << v;
    out << '\n';
  }
  out << "seed " << d.dev.seed[0] << ' ' << d.dev.seed[1] << ' ' << d.dev.seed[2] << '\n';
  for (VertexId v = 0; v < d.disc.num_vertices(); ++v) {
    out << "v " << v;
    if (d.cut) out << ' ' << d.cut->to_base[v];
    out << ' ' << format_point(d.dev.position[v]) << '\n';
  }
  if (d.cut) {
    out << "p1 " << format_point(*d.dev.p1) << '\n';
    out << "p2 " << format_point(*d.dev.p2) << '\n';
    out << "holonomy " << holonomy_rotation(d.dev) << '\n';
    const auto apex = locate_singularity(d.dev, d.type.valence);
    out << "singularity " << (apex ? format_point(*apex) : std::string("degenerate")) << '\n';
  } else {
    out << "boundary_closes " << (boundary_closes(d.disc) ? "yes" : "no") << '\n';
  }
  if (!svg.empty()) write_text(svg, render_svg(d.disc, d.dev), out);
  return 0;
}

int cmd_render(const std::string& file, const std::string& svg, std::ostream& out) {
  const Developed d = develop_file(file);
  write_text(svg, render_svg(d.disc, d.dev), out);
  return 0;
}

std::string describe_cover(const BranchedCover& c) {
  std::string s = "cover: " + describe_disc(c.disc) + ", branch " + std::to_string(c.branch_vertex) +
                  " over base vertex " + std::to_string(c.base_branch_vertex);
  if (!corners(c.disc).empty()) s += ", corner distance " + std::to_string(distance_invariant(c.disc));
  return s;
}

int cmd_isocheck(const std::string& a, const std::string& b, const std::string& mode_text, bool witness,
                 std::ostream& out) {
  const IsoMode mode = parse_iso_mode(mode_text);
  const CombinatorialDisc d1 = read_tri_file(a);
  const CombinatorialDisc d2 = read_tri_file(b);
  const auto w = is_isomorphic(d1, d2, mode);
  out << (w ? "isomorphic" : "not isomorphic") << " (" << to_string(mode) << ")\n";
  if (w && witness) {
    if (w->reverses_orientation) out << "orientation reversed\n";
    for (VertexId v = 0; v < d1.num_vertices(); ++v) out << "map " << v << ' ' << w->mapping[v] << '\n';
  }
  return w ? 0 : 1;
}

std::string report_status(const UniquenessReport& r) {
  if (!r.complete) return "incomplete";
  if (!r.theorem_applies) return "no-claim";
  return r.falsified ? "FALSIFIED" : "ok";
}

std::string format_n(const std::optional<int>& n) { return n ? std::to_string(*n) : std::string("none"); }

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disc triangulations with one irregular interior vertex", "tridisc"};
  app.require_subcommand(1);

  std::string file, file_b, svg, output, base_text = "rhombus:6", mode_text = "fix-start", word_text, entries_text = "2,3,4,5";
  std::optional<int> branch_vertex, branch_distance, n;
  int sheets = 2, d1 = 0, d2 = 0, cap = 30, threads = 1, sweep_max = 0, sweep_min = 3;
  bool witness = false, timing = false, summary_only = false;
  std::string out_dir;

  auto* validate = app.add_subcommand("validate", "Validate a .tri file and report its type");
  validate->add_option("file", file, "input .tri")->required();

  auto* analyze = app.add_subcommand("analyze", "Cone table, divisor and Gauss-Bonnet residual");
  analyze->add_option("file", file, "input .tri")->required();

  auto* develop_cmd = app.add_subcommand("develop", "Exact lattice development (cut at the irregular vertex)");
  develop_cmd->add_option("file", file, "input .tri")->required();
  develop_cmd->add_option("--svg", svg, "also write an SVG rendering");

  auto* render = app.add_subcommand("render", "SVG rendering of the development");
  render->add_option("file", file, "input .tri")->required();
  render->add_option("-o,--output", svg, "output .svg ('-' for stdout)")->required();

  auto* cover = app.add_subcommand("build-cover", "Branched cover of a regular lattice patch");
  cover->add_option("--base", base_text, "patch: triangle:S, rhombus:S, hexagon:S, parallelogram:AxB")
      ->capture_default_str();
  auto* bv = cover->add_option("--branch-vertex", branch_vertex, "branch at this base vertex");
  auto* bd = cover->add_option("--branch-distance", branch_distance, "branch at the first vertex this far from a corner");
  bv->excludes(bd);
  cover->add_option("-k,--sheets", sheets, "number of sheets")->capture_default_str();
  cover->add_option("-o,--output", output, "output .tri ('-' for stdout)")->required();

  auto* pair = app.add_subcommand("build-pair", "Two non-isomorphic covers with the same boundary");
  pair->add_option("--base", base_text, "patch spec")->capture_default_str();
  pair->add_option("--d1", d1, "corner distance of the first branch vertex")->required();
  pair->add_option("--d2", d2, "corner distance of the second branch vertex")->required();
  pair->add_option("-k,--sheets", sheets, "number of sheets")->capture_default_str();
  pair->add_option("-o,--output", output, "output prefix; writes <prefix>-a.tri and <prefix>-b.tri")->required();

  auto* iso = app.add_subcommand("isocheck", "Decide equivalence of two discs");
  iso->add_option("a", file, "first .tri")->required();
  iso->add_option("b", file_b, "second .tri")->required();
  iso->add_option("--mode", mode_text, "fix-start | rotate-start | allow-reflection")->capture_default_str();
  iso->add_flag("--witness", witness, "print the vertex map");

  auto* enumerate = app.add_subcommand("enumerate", "All fillings of a boundary word");
  enumerate->add_option("--word", word_text, "boundary degrees, e.g. 3,3,3,3,3")->required();
  enumerate->add_option("--n", n, "irregular valence (omit for regular fillings)");
  enumerate->add_option("--cap", cap, "maximum number of triangles")->capture_default_str();
  enumerate->add_option("--out-dir", out_dir, "write each filling as a .tri file here");
  enumerate->add_flag("--timing", timing, "append wall time (makes output run-dependent)");

  auto* verify = app.add_subcommand("verify-uniqueness", "Check that a word has at most one filling");
  verify->add_option("--word", word_text, "boundary degrees");
  verify->add_option("--n", n, "irregular valence (defaults to the one forced by the word)");
  verify->add_option("--cap", cap, "maximum number of triangles")->capture_default_str();
  verify->add_option("--sweep-max-length", sweep_max, "sweep all words up to this length instead of --word");
  verify->add_option("--sweep-min-length", sweep_min, "shortest swept word")->capture_default_str();
  verify->add_option("--entries", entries_text, "degrees allowed in swept words")->capture_default_str();
  verify->add_option("--threads", threads, "worker threads for the sweep")->capture_default_str();
  verify->add_flag("--summary-only", summary_only, "print only the sweep summary");
  verify->add_flag("--timing", timing, "append wall time");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  const auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  };

  try {
    if (*validate) return cmd_validate(file, out);
    if (*analyze) return cmd_analyze(file, out);
    if (*develop_cmd) return cmd_develop(file, svg, out);
    if (*render) return cmd_render(file, svg, out);

    if (*cover) {
      if (!branch_vertex && !branch_distance) throw Error(ErrorCode::InvalidArgument, "need --branch-vertex or --branch-distance");
      CoverSpec spec{PatchSpec::parse(base_text), BranchAtVertex{}, sheets};
      if (branch_vertex) {
        spec.branch = BranchAtVertex{*branch_vertex};
      } else {
        spec.branch = BranchAtCornerDistance{*branch_distance};
      }
      const BranchedCover c = branched_cover(spec);
      write_text(output, write_tri(c.disc), out);
      if (output != "-") out << describe_cover(c) << '\n';
      return 0;
    }

    if (*pair) {
      const auto [a, b] = counterexample_pair(PatchSpec::parse(base_text), d1, d2, sheets);
      write_text(output + "-a.tri", write_tri(a.disc), out);
      write_text(output + "-b.tri", write_tri(b.disc), out);
      out << "a: " << describe_cover(a) << '\n';
      out << "b: " << describe_cover(b) << '\n';
      out << "boundary words equal: " << (boundary_word(a.disc) == boundary_word(b.disc) ? "yes" : "no") << '\n';
      return 0;
    }

    if (*iso) return cmd_isocheck(file, file_b, mode_text, witness, out);

    if (*enumerate) {
      const BoundaryWord word = parse_int_list(word_text);
      const FillingResult res = enumerate_fillings(word, n, cap);
      out << "word\tn\tcap\tcount\tcomplete" << (timing ? "\twall_ms" : "") << '\n';
      out << format_word(word) << '\t' << format_n(n) << '\t' << cap << '\t' << res.discs.size() << '\t'
          << (res.complete ? "yes" : "no");
      if (timing) out << '\t' << elapsed_ms();
      out << '\n';
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < res.discs.size(); ++i) {
          std::ostringstream name;
          name << "filling-" << std::setw(3) << std::setfill('0') << i << ".tri";
          write_tri_file(res.discs[i], std::filesystem::path(out_dir) / name.str());
        }
      }
      if (!res.complete) err << "warning: cap " << cap << " too small, search incomplete\n";
      return 0;
    }

    if (*verify) {
      std::vector<UniquenessReport> reports;
      if (sweep_max > 0) {
        SweepOptions opts;
        opts.min_length = sweep_min;
        opts.max_length = sweep_max;
        opts.entries = parse_int_list(entries_text);
        opts.cap = cap;
        opts.threads = threads;
        reports = sweep_uniqueness(opts);
      } else {
        if (word_text.empty()) throw Error(ErrorCode::InvalidArgument, "need --word or --sweep-max-length");
        const BoundaryWord word = parse_int_list(word_text);
        const int forced = irregular_valence_from_boundary(word);
        reports.push_back(verify_uniqueness(word, n ? *n : forced, cap));
      }
      int complete = 0, falsified = 0, found = 0;
      if (!summary_only) out << "word\tn\tcap\tcount\tfix_start_count\tforced_faces\tstatus\n";
      for (const auto& r : reports) {
        complete += r.complete;
        falsified += r.falsified;
        found += r.count;
        if (summary_only) continue;
        out << format_word(r.word) << '\t' << format_n(r.n) << '\t' << r.cap << '\t' << r.count << '\t'
            << r.fix_start_count << '\t' << (r.forced_faces ? std::to_string(*r.forced_faces) : "-") << '\t'
            << report_status(r) << '\n';
      }
      out << "# words=" << reports.size() << " complete=" << complete << " fillings=" << found
          << " falsified=" << falsified;
      if (timing) out << " wall_ms=" << elapsed_ms();
      out << '\n';
      if (falsified > 0) {
        err << "UNIQUENESS FALSIFIED on " << falsified << " word(s)\n";
        return 1;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace tridisc::cli
