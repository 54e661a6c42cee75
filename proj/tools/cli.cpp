#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "steinersurf/coloring.hpp"
#include "steinersurf/complex.hpp"
#include "steinersurf/embedding.hpp"
#include "steinersurf/error.hpp"
#include "steinersurf/gf2d.hpp"
#include "steinersurf/io.hpp"
#include "steinersurf/isomorphism.hpp"
#include "steinersurf/runlog.hpp"
#include "steinersurf/sphere.hpp"
#include "steinersurf/steiner.hpp"

namespace steinersurf {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kUndecided = 3;

// Default wall-clock budget for searches without --allow-long.
constexpr double kDefaultBudget = 120.0;
// Embeddings of systems larger than this need --allow-long.
constexpr int kLongEmbedding = 200;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return read_text_file(path);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

std::uint32_t parse_modulus(const std::string& text) {
  std::string t = text;
  int base = 10;
  if (t.rfind("0b", 0) == 0 || t.rfind("0B", 0) == 0) {
    base = 2;
    t = t.substr(2);
  } else if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0) {
    base = 16;
    t = t.substr(2);
  }
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(t, &used, base);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw UsageError("bad modulus '" + text + "'");
  return static_cast<std::uint32_t>(v);
}

// "1,3,4" or "1 3 4" or "[1,3,4]"
Facet parse_facet_arg(const std::string& text) {
  Facet f;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      f.push_back(static_cast<Vertex>(std::stol(cur)));
    } catch (const std::exception&) {
      throw UsageError("bad vertex '" + cur + "' in '" + text + "'");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-')
      cur += ch;
    else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']')
      flush();
    else
      throw UsageError("bad facet '" + text + "'");
  }
  flush();
  if (f.empty()) throw UsageError("empty facet '" + text + "'");
  std::sort(f.begin(), f.end());
  return f;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "steinersurf";
  for (const auto& a : args) s += " " + a;
  return s;
}

std::string fixed3(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << x;
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_manifold(const ManifoldReport& r, std::ostream& out) {
  out << "dimension: " << r.dimension << "\n";
  out << "f: " << format_fvector(r.f) << "\n";
  out << "euler: " << r.euler << "\n";
  out << "orientable: " << yes_no(r.orientable) << "\n";
  if (r.surface) out << "genus: " << r.surface->genus << "\n";
}

int exit_for(SearchStatus s) {
  switch (s) {
    case SearchStatus::Colorable: return kYes;
    case SearchStatus::NotColorable: return kNo;
    case SearchStatus::Unknown: return kUndecided;
  }
  return kUndecided;
}

struct SearchFlags {
  int threads = 1;
  std::string start;
  std::uint64_t max_nodes = 0;
  double time_limit = 0;
  bool allow_long = false;
  bool no_backjump = false;
  std::string engine = "auto";
  std::string log;

  void add_to(CLI::App* app) {
    app->add_option("--threads", threads, "worker threads for the backtracking engine")->check(CLI::Range(1, 256));
    app->add_option("--start-facet", start, "constraint triple whose colors seed the search, e.g. 1,2,4");
    app->add_option("--max-nodes", max_nodes, "node budget (0 = none)");
    app->add_option("--time-limit", time_limit, "seconds (0 = default budget)")->check(CLI::NonNegativeNumber);
    app->add_flag("--allow-long", allow_long, "lift the default time budget");
    app->add_flag("--no-backjump", no_backjump, "chronological backtracking");
    app->add_option("--engine", engine, "auto, backtrack or clause")
        ->check(CLI::IsMember({"auto", "backtrack", "clause"}));
    app->add_option("--log", log, "append a run record to this file (default: $STEINERSURF_RUNLOG)");
  }

  SearchOptions options() const {
    SearchOptions o;
    o.threads = threads;
    if (!start.empty()) o.start_triple = parse_facet_arg(start);
    o.node_limit = max_nodes;
    o.time_limit = time_limit > 0 ? time_limit : (allow_long ? 0 : kDefaultBudget);
    o.backjumping = !no_backjump;
    o.engine = engine == "backtrack" ? SearchEngine::Backtrack
               : engine == "clause"  ? SearchEngine::Clause
                                     : SearchEngine::Auto;
    return o;
  }

  std::string parameters() const {
    std::ostringstream os;
    os << "threads=" << threads << ";engine=" << engine << ";backjump=" << (no_backjump ? 0 : 1);
    if (!start.empty()) os << ";start=" << start;
    if (max_nodes) os << ";max_nodes=" << max_nodes;
    os << ";time_limit=" << options().time_limit;
    return os.str();
  }

  std::string log_path() const {
    if (!log.empty()) return log;
    const char* env = std::getenv("STEINERSURF_RUNLOG");
    return env ? env : "";
  }
};

void write_record(const SearchFlags& flags, const std::vector<std::string>& args, const std::string& input,
                  const std::string& params, const std::string& outcome, std::uint64_t nodes, double seconds) {
  auto path = flags.log_path();
  if (path.empty()) return;
  RunRecord r;
  r.timestamp = utc_timestamp();
  r.command = join_args(args);
  r.input_digest = digest_hex(input);
  r.parameters = params;
  r.outcome = outcome;
  r.nodes = nodes;
  r.seconds = seconds;
  append_run_record(path, r);
}

std::vector<std::string> search_summary(const SearchOutcome& r, int k, int s) {
  return {"status: " + std::string(to_string(r.status)),
          "k: " + std::to_string(k) + " s: " + std::to_string(s),
          "engine: " + r.stats.engine,
          "nodes: " + std::to_string(r.stats.nodes) + " dead_ends: " + std::to_string(r.stats.dead_ends) +
              " unreachable_branches: " + std::to_string(r.stats.unreachable_branches),
          "seconds: " + fixed3(r.stats.seconds)};
}

FieldGF2d field_from(int d, const std::string& modulus) {
  if (modulus.empty()) return make_field(d);
  return make_field(d, parse_modulus(modulus));
}

Permutation field_transversal(const FieldGF2d& f, const std::string& poly, std::int64_t monomial) {
  if (!poly.empty() && monomial > 0) throw UsageError("give either --poly or --monomial");
  if (!poly.empty()) return eval_permutation_polynomial(f, parse_polynomial(f, poly));
  return eval_permutation_monomial(f, static_cast<std::uint32_t>(monomial));
}

TransversalKind kind_from(const std::string& text) {
  if (text == "orientable") return TransversalKind::Orientable;
  if (text == "nonorientable") return TransversalKind::Nonorientable;
  throw UsageError("transversal kind must be orientable or nonorientable");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner triple system surfaces, 3-spheres and (k,2)-colorings", "steinersurf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  std::string out_path;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a complex in facet format");
  gen->require_subcommand(1);
  gen->add_option("--out", out_path, "output file (default stdout)");

  int bose_s = 0;
  std::string bose_surface;
  auto* g_bose = gen->add_subcommand("bose", "Bose STS(6s+3), or its Steiner surface");
  g_bose->add_option("--s", bose_s, "parameter s >= 1")->required();
  g_bose->add_option("--surface", bose_surface, "orientable or nonorientable: emit B(s) with its transversal");

  int pg_d = 0;
  std::string pg_modulus, pg_poly;
  std::int64_t pg_monomial = 0;
  auto* g_pg = gen->add_subcommand("pg", "projective STS(2^d-1), or a Steiner surface with --poly/--monomial");
  g_pg->add_option("--d", pg_d, "field degree")->required()->check(CLI::Range(2, 16));
  g_pg->add_option("--modulus", pg_modulus, "primitive polynomial as 0b..., 0x... or decimal");
  g_pg->add_option("--poly", pg_poly, "surface polynomial, e.g. \"a*X^11 + X^6 + X\"");
  g_pg->add_option("--monomial", pg_monomial, "surface monomial exponent r (X^r)");

  int ag_k = 0;
  auto* g_ag = gen->add_subcommand("ag", "affine STS(3^k)");
  g_ag->add_option("--k", ag_k, "dimension")->required()->check(CLI::Range(1, 8));

  int cp_m = 0, cp_dim = 4;
  auto* g_cp = gen->add_subcommand("cp", "boundary of the cyclic polytope C(m,dim)");
  g_cp->add_option("--m", cp_m, "number of vertices")->required();
  g_cp->add_option("--dim", cp_dim, "polytope dimension");

  bool emb_orientable = true;
  auto* g_emb = gen->add_subcommand("sts7-embedding", "completed triangulation from the STS(7) cycle embedding");
  g_emb->add_option("--orientable", emb_orientable, "true or false");

  auto* g_sphere = gen->add_subcommand("sphere167", "the 167-vertex 3-sphere with no (4,2)-coloring");
  auto* g_torus = gen->add_subcommand("torus7", "the 7-vertex torus");
  auto* g_rp2 = gen->add_subcommand("rp2-6", "the 6-vertex projective plane");
  auto* g_ball = gen->add_subcommand("ball-b15", "the 15-vertex 3-ball");
  auto* g_fano = gen->add_subcommand("fano", "the Fano plane STS(7)");
  auto* g_cyc13 = gen->add_subcommand("cyclic13", "cyclic STS(13)");
  for (auto* sub : gen->get_subcommands({})) sub->fallthrough();

  // color
  std::string color_file, color_out;
  int color_k = 0, color_s = 2;
  std::vector<std::string> removed;
  SearchFlags color_flags;
  auto* color = app.add_subcommand("color", "search for a (k,s)-coloring");
  color->add_option("FILE", color_file, "facet file (default stdin)");
  color->add_option("--k", color_k, "number of colors")->required();
  color->add_option("--s", color_s, "s (only 2 is searched)");
  color->add_option("--remove-facet", removed, "drop a facet before coloring, e.g. 1,3,4 (repeatable)");
  color->add_option("--out", color_out, "write the coloring here instead of stdout");
  color_flags.add_to(color);

  // chi
  std::string chi_file;
  int chi_s = 2, chi_max = 8;
  SearchFlags chi_flags;
  auto* chi = app.add_subcommand("chi", "compute the s-chromatic number");
  chi->add_option("FILE", chi_file, "facet file (default stdin)");
  chi->add_option("--s", chi_s, "s (only 2 is searched)");
  chi->add_option("--max-k", chi_max, "largest k tried")->check(CLI::Range(2, 63));
  chi_flags.add_to(chi);

  // verify
  auto* verify = app.add_subcommand("verify", "check a property");
  verify->require_subcommand(1);

  std::string vm_file;
  auto* v_manifold = verify->add_subcommand("manifold", "closed connected manifold check and classification");
  v_manifold->add_option("FILE", vm_file, "facet file (default stdin)");

  std::string vc_file, vc_coloring;
  int vc_k = 0, vc_s = 2;
  std::vector<std::string> vc_removed;
  auto* v_coloring = verify->add_subcommand("coloring", "check a coloring file against a complex");
  v_coloring->add_option("FILE", vc_file, "facet file")->required();
  v_coloring->add_option("COLORING", vc_coloring, "coloring file (vertex<TAB>color)")->required();
  v_coloring->add_option("--k", vc_k, "number of colors")->required();
  v_coloring->add_option("--s", vc_s, "s");
  v_coloring->add_option("--remove-facet", vc_removed, "facet excluded from the check (repeatable)");

  std::string vs_file;
  auto* v_sts = verify->add_subcommand("sts", "check that a 2-complex is a Steiner triple system");
  v_sts->add_option("FILE", vs_file, "facet file (default stdin)");

  int vt_pg = 0, vt_bose = 0;
  std::string vt_modulus, vt_poly, vt_perm, vt_kind, vt_sts;
  std::int64_t vt_monomial = 0;
  auto* v_trans = verify->add_subcommand("transversal", "check a transversal and report orientability");
  v_trans->add_option("--pg", vt_pg, "projective system over GF(2^d)")->check(CLI::Range(2, 16));
  v_trans->add_option("--modulus", vt_modulus, "primitive polynomial for --pg");
  v_trans->add_option("--bose", vt_bose, "Bose system B(s)");
  v_trans->add_option("--sts", vt_sts, "STS facet file");
  v_trans->add_option("--poly", vt_poly, "permutation polynomial (with --pg)");
  v_trans->add_option("--monomial", vt_monomial, "monomial exponent (with --pg)");
  v_trans->add_option("--perm", vt_perm, "permutation \"T: [t1, ..., tn]\" of the points");
  v_trans->add_option("--kind", vt_kind, "orientable or nonorientable (built-in Bose transversals)");

  std::string vo_file;
  auto* v_obst = verify->add_subcommand("obstruction", "per-edge (3,2) obstruction of the 167-vertex sphere");
  v_obst->add_option("FILE", vo_file, "facet file (default: build the sphere)");

  // embed
  std::string emb_sts, emb_out, emb_coloring, emb_coloring_out;
  bool emb_orient = true, emb_trace = false, emb_allow_long = false;
  int emb_star = 1;
  auto* embed = app.add_subcommand("embed", "cycle embedding of an STS, completed to a triangulated surface");
  embed->add_option("--sts", emb_sts, "STS facet file (- for stdin)")->required();
  embed->add_option("--orientable", emb_orient, "true or false")->required();
  embed->add_option("--star-vertex", emb_star, "vertex whose triples start the cycle");
  embed->add_option("--out", emb_out, "output file (default stdout)");
  embed->add_flag("--trace", emb_trace, "print the boundary word after every insertion");
  embed->add_option("--coloring", emb_coloring, "coloring of the STS to extend over the collar");
  embed->add_option("--coloring-out", emb_coloring_out, "where the extended coloring goes (default stdout)");
  embed->add_flag("--allow-long", emb_allow_long, "allow systems with more than 200 points");

  // census
  auto* census = app.add_subcommand("census", "transversal searches");
  census->require_subcommand(1);
  auto* c_pg8 = census->add_subcommand("pg8-cosets", "double cosets of 0-fixing permutations of F_8 under GL(3,2)");
  bool pg16_allow = false;
  auto* c_pg16 = census->add_subcommand("pg16-cosets", "the same census over F_16");
  c_pg16->add_flag("--allow-long", pg16_allow, "acknowledge the run time");
  int singer_d = 0;
  std::string singer_modulus;
  auto* c_singer = census->add_subcommand("singer", "transversal monomials modulo the Singer normalizer");
  c_singer->add_option("--d", singer_d, "field degree")->required()->check(CLI::Range(2, 16));
  c_singer->add_option("--modulus", singer_modulus, "primitive polynomial");

  // compare
  std::string cmp_a, cmp_b;
  auto* compare = app.add_subcommand("compare", "combinatorial isomorphism test");
  compare->add_option("A", cmp_a, "facet file")->required();
  compare->add_option("B", cmp_b, "facet file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (*gen) {
      std::optional<SimplicialComplex> k;
      std::vector<std::string> header;
      if (*g_bose) {
        auto sts = bose(bose_s);
        if (bose_surface.empty()) {
          k = sts.to_complex();
          header.push_back("Bose STS(" + std::to_string(sts.order()) + "), s=" + std::to_string(bose_s));
        } else {
          auto t = bose_transversal(bose_s, kind_from(bose_surface));
          k = steiner_surface(quasigroup_of(sts), t, "bose" + std::to_string(bose_s) + "_" + bose_surface);
          header.push_back("Bose B(" + std::to_string(bose_s) + ") with its " + bose_surface + " transversal");
          header.push_back(format_permutation(t));
        }
        header.push_back("point (x,y) of Z_{2s+1} x Z_3 has label 1 + x + (2s+1) y");
      } else if (*g_pg) {
        auto f = field_from(pg_d, pg_modulus);
        auto sts = projective_sts(f);
        header.push_back("PG(" + std::to_string(f.size()) + "), modulus " + format_modulus(f.modulus()));
        header.push_back("point label = field element as an integer (bit i = coefficient of a^i)");
        if (pg_poly.empty() && pg_monomial == 0) {
          k = sts.to_complex();
        } else {
          auto t = field_transversal(f, pg_poly, pg_monomial);
          k = steiner_surface(quasigroup_of(sts), t, sts.name() + "_surface");
          header.push_back(format_permutation(t));
        }
      } else if (*g_ag) {
        auto sts = affine_sts(ag_k);
        k = sts.to_complex();
        header.push_back("AG(" + std::to_string(ag_k) + ",3), point label 1 + base-3 digits");
      } else if (*g_cp) {
        k = cyclic_polytope_boundary(cp_m, cp_dim);
        header.push_back("boundary of C(" + std::to_string(cp_m) + "," + std::to_string(cp_dim) + ")");
      } else if (*g_emb) {
        auto sts = fano_sts();
        EmbedOptions opts;
        opts.orientable = emb_orientable;
        auto st = embed_max_genus(sts, opts);
        auto done = complete_to_triangulation(st, "sts7_embedding");
        k = done.complex;
        header.push_back("STS(7) cycle embedding, " + std::string(emb_orientable ? "orientable" : "nonorientable"));
        header.push_back("final cycle " + cycle_word(st.cycle));
      } else if (*g_sphere) {
        auto c = build_non_4_2_colorable_sphere();
        k = c.sphere;
        std::string k5;
        for (auto v : c.k5) k5 += (k5.empty() ? "" : ",") + std::to_string(v);
        header.push_back("3-sphere with no (4,2)-coloring; K5 on " + k5);
      } else if (*g_torus) {
        k = torus_7();
      } else if (*g_rp2) {
        k = rp2_6();
      } else if (*g_ball) {
        k = ball_b15();
      } else if (*g_fano) {
        k = fano_sts().to_complex();
      } else if (*g_cyc13) {
        k = cyclic_sts_13().to_complex();
      }
      emit(out_path, format_facet_text(*k, header), out);
      return kYes;
    }

    if (*color) {
      auto text = slurp(color_file, in);
      auto k = parse_facet_text(text);
      std::vector<Facet> rm;
      for (const auto& r : removed) rm.push_back(parse_facet_arg(r));
      auto p = make_coloring_problem(k, color_k, color_s, rm);
      auto r = search_coloring(p, color_flags.options());
      std::string params = "k=" + std::to_string(color_k) + ";s=" + std::to_string(color_s);
      for (const auto& f : removed) params += ";remove=" + f;
      write_record(color_flags, args, text, params + ";" + color_flags.parameters(), to_string(r.status),
                   r.stats.nodes, r.stats.seconds);
      auto summary = search_summary(r, color_k, color_s);
      if (r.witness) {
        if (color_out.empty()) {
          out << format_coloring_text(r.witness->assignment, summary);
        } else {
          emit(color_out, format_coloring_text(r.witness->assignment, summary), out);
          for (const auto& l : summary) out << "# " << l << "\n";
        }
      } else {
        for (const auto& l : summary) out << "# " << l << "\n";
        if (r.status == SearchStatus::Unknown)
          err << "search limit reached; raise --time-limit/--max-nodes or pass --allow-long\n";
      }
      return exit_for(r.status);
    }

    if (*chi) {
      auto text = slurp(chi_file, in);
      auto k = parse_facet_text(text);
      auto r = chromatic_number(k, chi_s, chi_max, chi_flags.options());
      std::uint64_t nodes = 0;
      double seconds = 0;
      for (const auto& run : r.runs) {
        int kk = 2 + static_cast<int>(&run - r.runs.data());
        out << "# k=" << kk << " " << to_string(run.status) << " nodes=" << run.stats.nodes
            << " seconds=" << fixed3(run.stats.seconds) << "\n";
        nodes += run.stats.nodes;
        seconds += run.stats.seconds;
      }
      std::string outcome;
      int code;
      if (r.value) {
        outcome = "chi=" + std::to_string(*r.value);
        out << "chi_" << chi_s << " = " << *r.value << "\n";
        code = kYes;
      } else if (r.undecided) {
        outcome = "unknown";
        out << "chi_" << chi_s << " undecided\n";
        code = kUndecided;
      } else {
        outcome = "chi>" + std::to_string(chi_max);
        out << "chi_" << chi_s << " > " << chi_max << "\n";
        code = kNo;
      }
      write_record(chi_flags, args, text,
                   "s=" + std::to_string(chi_s) + ";max_k=" + std::to_string(chi_max) + ";" + chi_flags.parameters(),
                   outcome, nodes, seconds);
      return code;
    }

    if (*verify) {
      if (*v_manifold) {
        auto k = parse_facet_text(slurp(vm_file, in));
        try {
          auto r = classify_closed_manifold(k);
          out << "closed manifold: yes\n";
          print_manifold(r, out);
          return kYes;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotClosed && e.code() != ErrorCode::NotManifold &&
              e.code() != ErrorCode::Disconnected)
            throw;
          out << "closed manifold: no\n" << "reason: " << e.what() << "\n";
          return kNo;
        }
      }
      if (*v_coloring) {
        auto k = parse_facet_text(slurp(vc_file, in));
        auto assignment = parse_coloring_text(slurp(vc_coloring, in));
        std::vector<Facet> rm;
        for (const auto& r : vc_removed) rm.push_back(parse_facet_arg(r));
        auto p = make_coloring_problem(k, vc_k, vc_s, rm);
        auto r = verify_coloring(p, Coloring{assignment, vc_k});
        if (r.valid) {
          out << "valid: yes\n";
          return kYes;
        }
        out << "valid: no\nmonochromatic:";
        for (auto v : *r.violation) out << " " << v;
        out << "\n";
        return kNo;
      }
      if (*v_sts) {
        auto k = parse_facet_text(slurp(vs_file, in));
        try {
          auto sts = sts_from_complex(k);
          out << "sts: yes\norder: " << sts.order() << "\ntriples: " << sts.triples().size() << "\n";
          return kYes;
        } catch (const Error& e) {
          out << "sts: no\nreason: " << e.what() << "\n";
          return kNo;
        }
      }
      if (*v_trans) {
        int sources = (vt_pg > 0) + (vt_bose > 0) + !vt_sts.empty();
        if (sources != 1) throw UsageError("give exactly one of --pg, --bose, --sts");
        SteinerQuasigroup mu = [&] {
          if (vt_pg) return quasigroup_of(projective_sts(field_from(vt_pg, vt_modulus)));
          if (vt_bose) return quasigroup_of(bose(vt_bose));
          return quasigroup_of(sts_from_complex(parse_facet_text(slurp(vt_sts, in))));
        }();
        Permutation t;
        int given = !vt_poly.empty() + (vt_monomial > 0) + !vt_perm.empty() + !vt_kind.empty();
        if (given != 1) throw UsageError("give exactly one of --poly, --monomial, --perm, --kind");
        if (!vt_perm.empty()) {
          t = parse_permutation(vt_perm);
        } else if (!vt_kind.empty()) {
          if (!vt_bose) throw UsageError("--kind needs --bose");
          t = bose_transversal(vt_bose, kind_from(vt_kind));
        } else {
          if (!vt_pg) throw UsageError("--poly and --monomial need --pg");
          t = field_transversal(field_from(vt_pg, vt_modulus), vt_poly, vt_monomial);
        }
        auto r = analyze_transversal(mu, t);
        out << format_permutation(t) << "\n";
        out << "disjoint: " << yes_no(r.disjoint) << "\n";
        out << "transversal: " << yes_no(r.is_transversal) << "\n";
        if (!r.is_transversal) {
          for (const auto& pc : r.points) {
            if (pc.ok) continue;
            out << "bad point: " << pc.point << " cycle type";
            for (auto [len, mult] : pc.type) out << " " << len << "^" << mult;
            out << "\n";
            break;
          }
          return kNo;
        }
        out << "orientable: " << yes_no(r.orientable.value_or(false)) << "\n";
        auto m = classify_closed_manifold(steiner_surface(mu, t));
        print_manifold(m, out);
        return kYes;
      }
      if (*v_obst) {
        auto c = build_non_4_2_colorable_sphere();
        SimplicialComplex k = vo_file.empty() ? c.sphere : parse_facet_text(slurp(vo_file, in));
        auto r = verify_k5_obstruction(k, c.k5, c.balls);
        for (const auto& e : r.entries) {
          out << "edge " << e.edge.first << "-" << e.edge.second << ": triangles " << yes_no(e.triangles_present)
              << ", ball (3,2)-colorable " << yes_no(e.ball_3_2_colorable) << ", nodes " << e.nodes << "\n";
        }
        out << "obstruction: " << yes_no(r.all_obstructed) << "\n";
        return r.all_obstructed ? kYes : kNo;
      }
    }

    if (*embed) {
      auto sts = sts_from_complex(parse_facet_text(slurp(emb_sts, in)));
      if (sts.order() > kLongEmbedding && !emb_allow_long)
        throw UsageError("STS(" + std::to_string(sts.order()) + ") embedding is long-running; pass --allow-long");
      EmbedOptions opts;
      opts.star_vertex = emb_star;
      opts.orientable = emb_orient;
      auto st = embed_max_genus(sts, opts);
      if (emb_trace)
        for (const auto& h : st.history) out << "# " << cycle_word(h) << "\n";
      auto done = complete_to_triangulation(st, "embedding_" + std::to_string(sts.order()));
      std::vector<std::string> header = {
          "cycle embedding of STS(" + std::to_string(sts.order()) + "), " +
              (emb_orient ? "orientable" : "nonorientable") + ", star vertex " + std::to_string(emb_star),
          "expected genus " + std::to_string(done.expected_genus) + ", f " + format_fvector(done.expected_f),
          "apex " + std::to_string(done.apex)};
      if (sts.order() <= 15) header.push_back("final cycle " + cycle_word(st.cycle));
      emit(emb_out, format_facet_text(done.complex, header), out);
      if (!emb_coloring.empty()) {
        Coloring base{parse_coloring_text(slurp(emb_coloring, in)), 0};
        for (const auto& [v, c] : base.assignment) base.k = std::max(base.k, c);
        auto col = collar_coloring(done, sts, base);
        emit(emb_coloring_out, format_coloring_text(col.assignment, {"collar extension, k=" + std::to_string(col.k)}),
             out);
      }
      return kYes;
    }

    if (*census) {
      if (*c_pg16) {
        err << "census pg16-cosets is not available in this build (out of scope)";
        if (!pg16_allow) err << "; it would also need --allow-long";
        err << "\n";
        return kUsage;
      }
      if (*c_pg8) {
        auto c = enumerate_transversal_cosets_d3();
        std::size_t transversal = 0;
        out << "permutations: " << c.permutations << "\ngroup order: " << c.group_order << "\n";
        out << "classes: " << c.classes.size() << "\n";
        for (const auto& cl : c.classes) {
          transversal += cl.transversal;
          out << format_permutation(cl.representative) << " size " << cl.size
              << (cl.contains_identity ? " identity" : "") << " transversal " << yes_no(cl.transversal);
          if (cl.orientable) out << " orientable " << yes_no(*cl.orientable);
          out << "\n";
        }
        out << "transversal classes: " << transversal << "\n";
        return kYes;
      }
      if (*c_singer) {
        auto f = field_from(singer_d, singer_modulus);
        auto classes = singer_normalizer_search(f);
        std::size_t transversal = 0;
        for (const auto& cl : classes) {
          transversal += cl.transversal;
          out << "r in {";
          for (std::size_t i = 0; i < cl.exponents.size(); ++i) out << (i ? "," : "") << cl.exponents[i];
          out << "} size " << cl.size << " transversal " << yes_no(cl.transversal);
          if (cl.orientable) out << " orientable " << yes_no(*cl.orientable);
          out << "\n";
        }
        out << "classes: " << classes.size() << "\ntransversal classes: " << transversal << "\n";
        return kYes;
      }
    }

    if (*compare) {
      auto a = parse_facet_text(slurp(cmp_a, in));
      auto b = parse_facet_text(slurp(cmp_b, in));
      auto iso = find_isomorphism(a, b);
      if (!iso) {
        out << "isomorphic: no\n";
        return kNo;
      }
      out << "isomorphic: yes\n";
      for (auto [x, y] : *iso) out << x << "\t" << y << "\n";
      return kYes;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace steinersurf
