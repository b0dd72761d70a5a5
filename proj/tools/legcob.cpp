// legcob: command-line front end for the Legendrian cobordism library.
//
// Exit protocol: 0 on success (including Consistent verdicts), 1 when a
// check fails on well-formed input (Violation, NonCollarable, a script
// that does not verify, a search that finds nothing, a symplectomorphism
// deviation above tolerance), 2 on usage, syntax, or file errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "legcob/braid.hpp"
#include "legcob/errors.hpp"
#include "legcob/front.hpp"
#include "legcob/genfam.hpp"
#include "legcob/moves.hpp"
#include "legcob/obstruct.hpp"
#include "legcob/planar.hpp"
#include "legcob/polys.hpp"
#include "legcob/render.hpp"

namespace {

// File problems are usage errors (exit 2), distinct from failed checks.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int crossing_cap = 16;
  int threads = 1;
  std::string fixtures;
};

std::string slurp(const std::string& path, const Globals& g) {
  namespace fs = std::filesystem;
  fs::path p = path;
  if (!fs::exists(p) && p.is_relative() && !g.fixtures.empty()) {
    fs::path alt = fs::path(g.fixtures) / p;
    if (fs::exists(alt)) p = alt;
  }
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FileError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

void print_poly(const legcob::Laurent1& p) {
  for (const auto& [e, c] : p.c) std::cout << e << ':' << c << '\n';
}

int verdict_exit(const legcob::Verdict& v) {
  std::cout << "STATUS " << legcob::status_name(v.status) << '\n';
  for (const auto& r : v.reasons) std::cout << "REASON " << r << '\n';
  return v.status == legcob::Status::Consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace legcob;

  Globals g;
  int rc = 0;

  CLI::App app{"Legendrian fronts, moves, cobordisms, and obstructions"};
  app.require_subcommand(1);
  app.add_option("--crossing-cap", g.crossing_cap,
                 "Abort polynomial state sums past this many crossings")
      ->capture_default_str();
  app.add_option("--threads", g.threads,
                 "Worker threads for polynomial state sums")
      ->capture_default_str();
  app.add_option("--fixtures", g.fixtures,
                 "Directory searched for data files not found as given");

  // ---- front words ----
  std::string word_arg;
  auto* tb_cmd = app.add_subcommand("tb", "Thurston-Bennequin number of a front word");
  tb_cmd->add_option("front", word_arg, "front word, e.g. \"L1 R1\"")->required();
  tb_cmd->callback([&] {
    std::cout << "tb " << invariants(parse_front(word_arg)).tb << '\n';
  });

  auto* inv_cmd = app.add_subcommand("invariants", "Classical invariants of a front word");
  inv_cmd->add_option("front", word_arg)->required();
  inv_cmd->callback([&] {
    Invariants i = invariants(parse_front(word_arg));
    std::cout << "TB " << i.tb << '\n'
              << "ROT " << i.rot << '\n'
              << "WRITHE " << i.writhe << '\n'
              << "CUSPS " << i.cusps << '\n'
              << "COMPONENTS " << i.components << '\n';
  });

  std::string render_format = "ascii";
  RenderSpec rspec;
  auto* render_cmd = app.add_subcommand("render", "Draw a front word");
  render_cmd->add_option("front", word_arg)->required();
  render_cmd->add_option("--format", render_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  render_cmd->add_option("--width", rspec.width)->capture_default_str();
  render_cmd->add_option("--height", rspec.height)->capture_default_str();
  render_cmd->add_flag("--orient", rspec.show_orientations,
                       "Mark strand directions");
  render_cmd->callback([&] {
    rspec.format = render_format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
    std::string doc = render_front(parse_front(word_arg), rspec);
    std::cout << doc;
    if (!doc.empty() && doc.back() != '\n') std::cout << '\n';
  });

  // ---- moves ----
  auto* moves_cmd = app.add_subcommand("moves", "Legendrian move sites");
  moves_cmd->require_subcommand(1);

  auto* mlist = moves_cmd->add_subcommand("list", "Enumerate applicable move sites");
  mlist->add_option("front", word_arg)->required();
  mlist->callback([&] {
    for (const MoveSite& s : enumerate_moves(parse_front(word_arg)))
      std::cout << kind_name(s.kind) << ' ' << s.index << ' ' << s.variant << '\n';
  });

  std::string kind_arg;
  int index_arg = 0, variant_arg = 0;
  auto* mapply = moves_cmd->add_subcommand("apply", "Apply one move to a front");
  mapply->add_option("front", word_arg)->required();
  mapply->add_option("kind", kind_arg, "move name, e.g. R1a or SaddleUp")->required();
  mapply->add_option("index", index_arg)->required();
  mapply->add_option("variant", variant_arg)->capture_default_str();
  mapply->callback([&] {
    MoveSite site{parse_kind(kind_arg), index_arg, variant_arg};
    std::cout << serialize_front(apply_move(parse_front(word_arg), site).word)
              << '\n';
  });

  // ---- cobordisms ----
  auto* cob_cmd = app.add_subcommand("cobordism", "Cobordism scripts");
  cob_cmd->require_subcommand(1);

  std::string script_path;
  bool allow_caps = false;
  auto* cverify = cob_cmd->add_subcommand("verify", "Replay and check a script file");
  cverify->add_option("script", script_path, "FRONT/MOVE script file")->required();
  cverify->add_flag("--allow-caps", allow_caps, "Permit Death steps");
  cverify->callback([&] {
    CobordismReport r = verify_script(parse_script(slurp(script_path, g)), allow_caps);
    std::cout << "TOP " << serialize_front(r.top) << '\n'
              << "CHI " << r.chi << '\n'
              << "BIRTHS " << r.births << '\n'
              << "SADDLES " << r.saddles << '\n'
              << "DEATHS " << r.deaths << '\n'
              << "TB_BOTTOM " << r.tb_bottom << '\n'
              << "TB_TOP " << r.tb_top << '\n'
              << "ORIENTED " << (r.oriented ? 1 : 0) << '\n'
              << "CAPPED " << (r.capped ? 1 : 0) << '\n';
    if (r.genus)
      std::cout << "GENUS " << *r.genus << '\n';
    else
      std::cout << "GENUS non-surface\n";
    std::cout << "OK " << (r.ok ? 1 : 0) << '\n';
    if (!r.diagnostics.empty()) std::cout << "DIAG " << r.diagnostics << '\n';
    rc = r.ok ? 0 : 1;
  });

  std::string from_arg, to_arg;
  SearchBudget budget;
  auto* csearch = cob_cmd->add_subcommand("search", "Search for a move script");
  csearch->add_option("from", from_arg, "bottom front word")->required();
  csearch->add_option("to", to_arg, "top front word")->required();
  csearch->add_option("--max-depth", budget.max_depth)->capture_default_str();
  csearch->add_option("--max-states", budget.max_states)->capture_default_str();
  csearch->add_option("--max-events", budget.max_events)->capture_default_str();
  csearch->callback([&] {
    SearchResult r =
        search_cobordism(parse_front(from_arg), parse_front(to_arg), budget);
    std::cout << "FOUND " << (r.found ? 1 : 0) << '\n'
              << "DEPTH " << r.depth << '\n'
              << "STATES " << r.states << '\n'
              << "BUDGET_EXCEEDED " << (r.budget_exceeded ? 1 : 0) << '\n';
    if (r.found) std::cout << serialize_script(r.script);
    rc = r.found ? 0 : 1;
  });

  // ---- braids and quasipositive factorizations ----
  auto* braid_cmd = app.add_subcommand("braid", "Braid words and band factorizations");
  braid_cmd->require_subcommand(1);

  std::string file_arg;
  auto* bexpand = braid_cmd->add_subcommand(
      "expand", "Expand a quasipositive factorization into a braid word");
  bexpand->add_option("qp-file", file_arg)->required();
  bexpand->callback([&] {
    std::cout << serialize_braid(qp_expand(parse_qp(slurp(file_arg, g))));
  });

  auto* bsurface = braid_cmd->add_subcommand(
      "surface", "Bennequin surface data of a factorization");
  bsurface->add_option("qp-file", file_arg)->required();
  bsurface->callback([&] {
    SurfaceData s = surface_data(parse_qp(slurp(file_arg, g)));
    std::cout << "STRANDS " << s.strands << '\n'
              << "BANDS " << s.bands << '\n'
              << "CHI " << s.chi << '\n'
              << "EXPONENT_SUM " << s.exponent_sum << '\n'
              << "SELF_LINKING " << s.self_linking << '\n'
              << "COMPONENTS " << s.components << '\n'
              << "IS_KNOT " << (s.is_knot ? 1 : 0) << '\n'
              << "IS_DISK " << (s.is_disk ? 1 : 0) << '\n';
    if (s.is_knot) std::cout << "SLICE_GENUS " << s.slice_genus << '\n';
  });

  auto* bclosure = braid_cmd->add_subcommand(
      "closure-pd", "Planar diagram of a braid closure");
  bclosure->add_option("braid-file", file_arg)->required();
  bclosure->callback([&] {
    std::cout << serialize_pd(braid_closure_pd(parse_braid(slurp(file_arg, g))));
  });

  // ---- polynomials ----
  auto* poly_cmd = app.add_subcommand("poly", "Link polynomials from planar diagrams");
  poly_cmd->require_subcommand(1);

  auto* pjones = poly_cmd->add_subcommand("jones", "Jones polynomial (variable A)");
  pjones->add_option("pd-file", file_arg)->required();
  pjones->callback([&] {
    print_poly(jones(parse_pd(slurp(file_arg, g)), g.crossing_cap, std::nullopt,
                     g.threads));
  });

  auto* pkauff = poly_cmd->add_subcommand(
      "kauffman", "Kauffman two-variable polynomial, Dubrovnik form (a, z)");
  pkauff->add_option("pd-file", file_arg)->required();
  pkauff->callback([&] {
    std::cout << to_string(f_poly(parse_pd(slurp(file_arg, g)), g.crossing_cap));
  });

  auto* pbound = poly_cmd->add_subcommand(
      "tb-bound", "Kauffman-polynomial upper bound for tb");
  pbound->add_option("pd-file", file_arg)->required();
  pbound->callback([&] {
    std::cout << "tb-bound "
              << tb_upper_bound(parse_pd(slurp(file_arg, g)), g.crossing_cap)
              << '\n';
  });

  // ---- obstructions ----
  auto* obs_cmd = app.add_subcommand("obstruct", "Filling and collar obstructions");
  obs_cmd->require_subcommand(1);

  FillingClaim claim;
  int gs_arg = 0, tbmax_arg = 0;
  auto* ofill = obs_cmd->add_subcommand("filling", "Check exact-filling equalities");
  ofill->add_option("--tb", claim.tb)->required();
  ofill->add_option("--rot", claim.rot)->required();
  ofill->add_option("--genus", claim.genus)->required();
  auto* gs_opt = ofill->add_option("--gs", gs_arg, "smooth 4-ball genus");
  auto* tbmax_opt = ofill->add_option("--tbmax", tbmax_arg, "sharp tb upper bound");
  ofill->callback([&] {
    if (gs_opt->count()) claim.slice_genus = gs_arg;
    if (tbmax_opt->count()) claim.tb_bound = tbmax_arg;
    rc = verdict_exit(check_filling(claim));
  });

  CollarScenario scen;
  int cg_arg = 0, ctb_arg = 0;
  auto* ocollar = obs_cmd->add_subcommand("collar", "Collar obstruction for a slice surface");
  ocollar->add_option("--filling-genus", scen.filling_genus)->required();
  auto* cg_opt = ocollar->add_option("--concave-genus", cg_arg,
                                     "genus forced from the concave side");
  auto* ctb_opt = ocollar->add_option("--tbmax", ctb_arg,
                                      "Kauffman-polynomial tb bound");
  ocollar->callback([&] {
    if (cg_opt->count()) scen.concave_genus = cg_arg;
    if (ctb_opt->count()) scen.tb_bound = ctb_arg;
    rc = verdict_exit(collar_obstruction(scen));
  });

  auto* odisk = obs_cmd->add_subcommand(
      "qp-disk", "Run a quasipositive disk certificate end to end");
  odisk->add_option("qp-file", file_arg)->required();
  odisk->callback([&] {
    DiskSliceReport r =
        certify_disk_slice(parse_qp(slurp(file_arg, g)), g.crossing_cap);
    for (const auto& [k, v] : r.lines) std::cout << k << ' ' << v << '\n';
    rc = r.verdict.status == Status::Consistent ? 0 : 1;
  });

  // ---- generating family ----
  auto* gen_cmd = app.add_subcommand("genfam", "Generating-family slices and checks");
  gen_cmd->require_subcommand(1);

  double s_arg = 0;
  CutoffProfile profile;
  GridSpec grid;
  std::string csv_path;
  auto* gslice = gen_cmd->add_subcommand("slice", "Front slice of the family at s");
  gslice->add_option("--s", s_arg, "family parameter")->required();
  gslice->add_option("--delta", profile.delta, "profile collar width")
      ->capture_default_str();
  gslice->add_option("--grid", grid.points, "t-grid point count")
      ->capture_default_str();
  auto* csv_opt = gslice->add_option("--csv", csv_path, "write points here as CSV");
  gslice->callback([&] {
    FrontSlice fs = front_slice(s_arg, profile, grid);
    std::ostringstream csv;
    csv << "t,z,branch\n";
    for (const SlicePoint& p : fs.points)
      csv << fmt(p.t) << ',' << fmt(p.z) << ',' << p.branch << '\n';
    if (csv_opt->count()) {
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) throw FileError("cannot write file '" + csv_path + "'");
      out << csv.str();
      std::cout << "POINTS " << fs.points.size() << '\n';
      if (!fs.cusp_ts.empty()) {
        std::cout << "CUSPS";
        for (double t : fs.cusp_ts) std::cout << ' ' << fmt(t);
        std::cout << '\n';
      }
      std::cout << "BIRTH_MOMENT " << (fs.birth_moment ? 1 : 0) << '\n';
    } else {
      std::cout << csv.str();
    }
  });

  int samples_arg = 100;
  double h_arg = 1e-5, tol_arg = 1e-6;
  unsigned seed_arg = 20240817u;
  auto* gsymp = gen_cmd->add_subcommand(
      "sympcheck", "Test the coordinate map against the symplectisation form");
  // The step option is spelled --h, so help keeps only its long form here.
  gsymp->set_help_flag("--help", "Print this help message and exit");
  gsymp->add_option("--samples", samples_arg)->capture_default_str();
  gsymp->add_option("--h", h_arg, "central-difference step")->capture_default_str();
  gsymp->add_option("--seed", seed_arg)->capture_default_str();
  gsymp->add_option("--tol", tol_arg, "pass threshold on the deviation")
      ->capture_default_str();
  gsymp->callback([&] {
    SympCheckResult r =
        symplecto_check(symplecto_samples(samples_arg, seed_arg), h_arg);
    std::ostringstream os;
    os.precision(6);
    os << std::scientific << r.deviation;
    std::cout << "DEVIATION " << os.str() << '\n' << "ORDERING";
    for (int i : r.ordering) std::cout << ' ' << i;
    std::cout << '\n';
    rc = r.deviation < tol_arg ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const StepError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
