#pragma once

// Command-line front end. run() is kept separate from main() so the test
// suite can drive every verb in-process.

#include "trisect/trisect.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace trisect::cli {

using Json = nlohmann::ordered_json;

inline auto to_json(const Int &v) -> Json {
  if (v >= Int(std::numeric_limits<std::int64_t>::min()) &&
      v <= Int(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline auto to_json(const IntMatrix &m) -> Json {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline auto params_json(const TrisectionParams &p) -> Json {
  return {{"genus", p.genus}, {"k", p.k}, {"boundary", p.boundary}, {"text", p.str()}};
}

inline auto shape_json(const StarShape &s) -> Json {
  return {{"genus", s.genus}, {"boundary", s.boundary}, {"curves", s.curves}};
}

inline auto shape_str(const StarShape &s) -> std::string {
  return "genus=" + std::to_string(s.genus) + " boundary=" + std::to_string(s.boundary) +
         " curves=" + std::to_string(s.curves[0]) + "," + std::to_string(s.curves[1]) + "," +
         std::to_string(s.curves[2]);
}

inline auto read_file(const std::string &path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline auto parse_counts(const std::string &text, const char *what) -> std::array<std::int64_t, 3> {
  auto c = detail::parse_triple(text, what);
  for (auto v : c)
    if (v < 0) throw Error(ErrorCode::InvalidParams, std::string(what) + " must be >= 0");
  return c;
}

inline auto plan_json(const SurgeryPlan &plan) -> Json {
  Json blocks = Json::array();
  for (const auto &b : plan.blocks) blocks.push_back(b.str());
  return {{"blocks", blocks}, {"composite", to_json(plan.composite)}};
}

inline auto slide_state_json(const SlideState &s) -> Json {
  return {{"w1", pretty_word(s.w1)}, {"w2", pretty_word(s.w2)}, {"w3", pretty_word(s.w3)},
          {"t3", s.t3},             {"t1", s.t1}};
}

inline auto default_max_den() -> std::size_t {
  if (const char *env = std::getenv("TRISECT_MAX_DEN")) {
    auto v = detail::parse_i64(env, "TRISECT_MAX_DEN");
    if (v < 0) throw Error(ErrorCode::InvalidParams, "TRISECT_MAX_DEN must be >= 0");
    return static_cast<std::size_t>(v);
  }
  return 10;
}

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 invalid input, 2 failed precondition.
inline auto run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int {
  CLI::App app{"Trisection calculus engine"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  // validate
  std::string validate_file;
  auto *validate = app.add_subcommand("validate", "check a diagram file");
  validate->add_option("file", validate_file)->required();

  // invariants
  std::string inv_file, inv_params;
  auto *invariants = app.add_subcommand("invariants", "H1 of a diagram and/or Euler data of (g;k)");
  invariants->add_option("file", inv_file);
  invariants->add_option("--params", inv_params, "g;k1,k2,k3");

  // farey-classify
  std::vector<std::string> triple_text;
  bool show_qx = false;
  auto *farey = app.add_subcommand("farey-classify", "classify D(x, y, z)");
  farey->add_option("slopes", triple_text)->expected(3)->required();
  farey->add_flag("--qx", show_qx, "print the intersection form of the triple as given");

  // farey-atlas
  std::optional<std::int64_t> atlas_den;
  std::string atlas_out;
  auto *atlas = app.add_subcommand("farey-atlas", "CSV table of all valid triples");
  atlas->add_option("--max-den", atlas_den);
  atlas->add_option("--out", atlas_out);

  // paste
  std::string paste_left, paste_right, paste_k;
  std::optional<std::int64_t> page_genus, circles;
  auto *paste_cmd = app.add_subcommand("paste", "genus of a pasted trisection");
  paste_cmd->add_option("left", paste_left)->required();
  paste_cmd->add_option("right", paste_right)->required();
  auto *page_opt = paste_cmd->add_option("--page-genus", page_genus);
  auto *circ_opt = paste_cmd->add_option("--circles", circles);
  page_opt->excludes(circ_opt);
  paste_cmd->add_option("--k", paste_k, "sector genera of the result, if known")->needs(circ_opt);

  // fiber-sum
  std::string fs_left, fs_right, fs_bridge, fs_right_bridge;
  auto *fs = app.add_subcommand("fiber-sum", "fiber sum along surfaces in bridge position");
  fs->add_option("left", fs_left)->required();
  fs->add_option("right", fs_right)->required();
  fs->add_option("--bridge", fs_bridge, "b;c1,c2,c3")->required();
  fs->add_option("--right-bridge", fs_right_bridge, "defaults to --bridge");

  // destab
  std::string destab_params;
  int destab_sector = 0;
  std::int64_t destab_times = 0;
  auto *destab = app.add_subcommand("destab", "destabilize a parameter tuple");
  destab->add_option("params", destab_params)->required();
  destab->add_option("--sector", destab_sector)->required();
  destab->add_option("--times", destab_times)->required();

  // poke
  std::string poke_file, poke_counts;
  auto *poke_cmd = app.add_subcommand("poke", "puncture the surface near each system");
  poke_cmd->add_option("file", poke_file)->required();
  poke_cmd->add_option("--counts", poke_counts, "a,b,c")->required();

  // complement
  std::string comp_file, comp_arcs;
  auto *comp = app.add_subcommand("complement", "complement of a decomposed curve");
  comp->add_option("file", comp_file)->required();
  comp->add_option("--arcs", comp_arcs, "a1,a2,a3")->required();

  // plan
  auto *plan = app.add_subcommand("plan", "torus surgery plans");
  plan->require_subcommand(1);
  std::string lut_m = "0", lut_n = "0", log_a, gen_matrix;
  auto *lut = plan->add_subcommand("luttinger", "Luttinger surgery (m, n)");
  lut->add_option("--m", lut_m);
  lut->add_option("--n", lut_n);
  auto *logt = plan->add_subcommand("log", "A-logarithmic transform");
  logt->add_option("--a", log_a, "a11,a12,a21,a22")->required();
  auto *general = plan->add_subcommand("general", "arbitrary SL3(Z) gluing");
  general->add_option("--matrix", gen_matrix, "9 integers, row-major")
      ->required();

  // slide
  std::int64_t slide_m = 0, slide_n = 0;
  std::string slide_word;
  bool slide_full = false, slide_trace = false;
  auto *slide = app.add_subcommand("slide", "reduce a decomposed curve on a genus-one surface");
  slide->add_option("--m", slide_m)->required();
  slide->add_option("--n", slide_n)->required();
  slide->add_option("--word", slide_word, "initial w3, letters m/l or Greek; default mu^m lambda^n");
  slide->add_flag("--full", slide_full, "also unwind a2 over beta");
  slide->add_flag("--trace", slide_trace, "print every move");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*validate) {
      const auto d = parse_diagram(read_file(validate_file));
      const auto violations = validate_diagram(d);
      const bool ok = !has_errors(violations);
      if (json) {
        Json v = Json::array();
        for (const auto &x : violations)
          v.push_back({{"severity", x.severity == Severity::Error ? "error" : "advisory"},
                       {"kind", x.kind},
                       {"where", x.where},
                       {"message", x.message}});
        out << Json{{"valid", ok}, {"violations", v}}.dump(2) << "\n";
      } else {
        for (const auto &x : violations)
          out << (x.severity == Severity::Error ? "error" : "advisory") << " " << x.kind << " "
              << x.where << ": " << x.message << "\n";
        out << (ok ? "valid" : "invalid") << "\n";
      }
      return ok ? 0 : 1;
    }

    if (*invariants) {
      if (inv_file.empty() && inv_params.empty())
        throw Error(ErrorCode::Parse, "give a diagram file, --params, or both");
      Json j = Json::object();
      if (!inv_file.empty()) {
        const auto h = first_homology(parse_diagram(read_file(inv_file)));
        Json torsion = Json::array();
        for (const auto &t : h.h1_torsion) torsion.push_back(to_json(t));
        j["h1"] = {{"free_rank", h.h1_free_rank}, {"torsion", torsion}, {"text", h.h1_str()}};
        if (!json) out << "H1 = " << h.h1_str() << "\n";
      }
      if (!inv_params.empty()) {
        const auto p = TrisectionParams::parse(inv_params);
        const auto chi = euler_char(p);
        const auto h = handle_counts(p);
        j["params"] = p.str();
        j["euler_characteristic"] = chi;
        j["handles"] = h;
        if (!json)
          out << "euler = " << chi << "\nhandles = (" << h[0] << "," << h[1] << "," << h[2] << ","
              << h[3] << "," << h[4] << ")\n";
      }
      if (json) out << j.dump(2) << "\n";
      return 0;
    }

    if (*farey) {
      const FareyTriple t{Fraction::parse(triple_text[0]), Fraction::parse(triple_text[1]),
                          Fraction::parse(triple_text[2])};
      const auto c = classify(t);
      std::optional<IntMatrix> q;
      if (show_qx) q = qx(t);
      if (json) {
        Json j{{"triple", t.str()},
               {"kind", to_string(c.kind)},
               {"manifold", c.manifold_name()},
               {"refined", c.refined ? Json(c.refined_name()) : Json(nullptr)},
               {"form", {{"rank", c.form.rank},
                         {"signature", c.form.signature},
                         {"parity", to_string(c.form.parity)},
                         {"name", c.form.label()}}}};
        if (q) j["qx"] = to_json(*q);
        out << j.dump(2) << "\n";
      } else {
        out << "triple: " << t.str() << "\nkind: " << to_string(c.kind)
            << "\nmanifold: " << c.manifold_name() << "\n";
        if (c.refined) out << "refined: " << c.refined_name() << "\n";
        out << "form: " << c.form.label() << "\n";
        if (q) out << "qx: " << *q << "\n";
      }
      return 0;
    }

    if (*atlas) {
      std::size_t max_den = default_max_den();
      if (atlas_den) {
        if (*atlas_den < 0) throw Error(ErrorCode::InvalidParams, "--max-den must be >= 0");
        max_den = static_cast<std::size_t>(*atlas_den);
      }
      const auto rows = enumerate_triples(max_den);
      if (atlas_out.empty()) {
        write_atlas_csv(out, rows);
      } else {
        std::ofstream f(atlas_out, std::ios::binary);
        if (!f) throw Error(ErrorCode::Parse, "cannot write '" + atlas_out + "'");
        write_atlas_csv(f, rows);
        if (json)
          out << Json{{"rows", rows.size()}, {"max_den", max_den}, {"out", atlas_out}}.dump(2)
              << "\n";
        else
          out << "wrote " << rows.size() << " triples to " << atlas_out << "\n";
      }
      return 0;
    }

    if (*paste_cmd) {
      if (!page_genus && !circles)
        throw Error(ErrorCode::Parse, "paste needs --page-genus or --circles");
      PastingInput in{TrisectionParams::parse(paste_left), TrisectionParams::parse(paste_right),
                      ClosedPage{}};
      if (page_genus) {
        in.mode = ClosedPage{*page_genus};
      } else {
        BoundaryCircles bc{*circles, std::nullopt};
        if (!paste_k.empty()) bc.sector_genera = parse_counts(paste_k, "--k");
        in.mode = bc;
      }
      const auto r = paste(in);
      if (json)
        out << Json{{"genus", r.genus}, {"k", r.k ? Json(*r.k) : Json(nullptr)}, {"text", r.str()}}
                   .dump(2)
            << "\n";
      else
        out << r.str() << "\n";
      return 0;
    }

    if (*fs) {
      auto l = TrisectionParams::parse(fs_left);
      auto r = TrisectionParams::parse(fs_right);
      l.bridge = parse_bridge(fs_bridge);
      r.bridge = fs_right_bridge.empty() ? l.bridge : parse_bridge(fs_right_bridge);
      const auto s = fiber_sum(l, r);
      out << (json ? params_json(s).dump(2) : s.str()) << "\n";
      return 0;
    }

    if (*destab) {
      const auto s = destabilize(TrisectionParams::parse(destab_params), destab_sector, destab_times);
      out << (json ? params_json(s).dump(2) : s.str()) << "\n";
      return 0;
    }

    if (*poke_cmd) {
      const auto d = parse_diagram(read_file(poke_file));
      out << serialize_diagram(poke(d, parse_counts(poke_counts, "--counts")));
      return 0;
    }

    if (*comp) {
      const auto d = parse_diagram(read_file(comp_file));
      const auto s = curve_complement(shape_of(d), parse_counts(comp_arcs, "--arcs"));
      out << (json ? shape_json(s).dump(2) : shape_str(s)) << "\n";
      return 0;
    }

    if (*plan) {
      SurgeryPlan p;
      if (*lut) {
        p = luttinger_plan(Int(detail::parse_i64(lut_m, "--m")), Int(detail::parse_i64(lut_n, "--n")));
      } else if (*logt) {
        auto parts = detail::split(log_a, ',');
        if (parts.size() != 4) throw Error(ErrorCode::Parse, "--a needs a11,a12,a21,a22");
        std::vector<Int> v;
        for (auto s : parts) v.emplace_back(detail::parse_i64(s, "--a"));
        p = log_transform_plan(IntMatrix{{v[0], v[1]}, {v[2], v[3]}});
      } else {
        std::string text = gen_matrix;
        std::replace(text.begin(), text.end(), ',', ' ');
        std::istringstream ss(text);
        std::vector<Int> v;
        for (std::string tok; ss >> tok;) v.emplace_back(detail::parse_i64(tok, "--matrix"));
        if (v.size() != 9) throw Error(ErrorCode::Parse, "--matrix needs 9 integers");
        p = surgery_plan_general(IntMatrix{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}});
      }
      out << (json ? plan_json(p).dump(2) + "\n" : p.str());
      return 0;
    }

    if (*slide) {
      std::string word = slide_word;
      if (word.empty()) {
        if (slide_m < 0 || slide_n < 0)
          throw Error(ErrorCode::MalformedWord, "m and n must be non-negative");
        word = std::string(static_cast<std::size_t>(slide_m), kMu) +
               std::string(static_cast<std::size_t>(slide_n), kLambda);
      }
      const auto start = initial_state(word, slide_m, slide_n);
      const auto result = slide_full ? reduce_full(start) : reduce_mu(start);
      if (json) {
        Json trace = Json::array();
        for (const auto &st : result.trace) trace.push_back(format_step(st));
        Json j{{"initial", slide_state_json(result.initial)},
               {"final", slide_state_json(result.final_state())},
               {"moves", result.trace.size()}};
        if (slide_trace) j["trace"] = trace;
        out << j.dump(2) << "\n";
      } else {
        if (slide_trace)
          for (const auto &st : result.trace) out << format_step(st) << "\n";
        const auto &f = result.final_state();
        out << "w1=" << pretty_word(f.w1) << " w2=" << pretty_word(f.w2)
            << " w3=" << pretty_word(f.w3) << " t3=" << f.t3 << " t1=" << f.t1 << "\n";
      }
      return 0;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.category() == ErrorCategory::InvalidInput ? 1 : 2;
  }
  return 1;
}

} // namespace trisect::cli
