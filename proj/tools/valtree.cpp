// Batch front end: one subcommand per probe, scenario JSON in, report files out.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "valtree/error.hpp"
#include "valtree/length.hpp"
#include "valtree/scenario.hpp"
#include "valtree/tracerep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace valtree;

namespace {

struct Options {
  fs::path scenario;
  fs::path out = ".";
  unsigned threads = 1;
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

json words_of(const GeneratorSet& s, const std::vector<BallElement>& elems) {
  json out = json::array();
  for (const auto& e : elems)
    out.push_back({{"matrix", to_json(e.element)}, {"length", e.length}, {"word", word_str(s, e.word)}});
  return out;
}

json run_valuate(const GroupScenario& sc) {
  json rows = json::array();
  for (const auto& x : sc.elements) {
    json vals = json::array();
    for (const auto& v : sc.valuations) {
      if (!v.applies_to(x.kind()) && x.kind() != FieldKind::rational) continue;
      const FieldElem y = v.natural_field().coerce(x);
      vals.push_back({{"valuation", v.str()},
                      {"value", valuate(v, y).str()},
                      {"integral", is_integral(v, y)},
                      {"uniformizer", uniformizer(v).str()}});
    }
    rows.push_back({{"element", x.str()}, {"valuations", vals}});
  }
  json gens = json::array();
  for (std::size_t i = 0; i < sc.gens.size(); ++i) {
    json ls = json::array();
    for (const auto& v : sc.valuations) ls.push_back({{"valuation", v.str()}, {"length", length(v, sc.gens.gens()[i]).str()}});
    gens.push_back({{"label", sc.gens.labels()[i]}, {"lengths", ls}});
  }
  return {{"elements", rows}, {"generator_lengths", gens}};
}

json run_ball(const GroupScenario& sc) {
  const WordBall ball = word_ball(sc.gens, sc.r_max, sc.element_cap);
  json sizes = json::array();
  for (int r = 0; r <= sc.r_max; ++r) sizes.push_back({{"R", r}, {"size", ball.count_within(r)}});
  return {{"radius", sc.r_max}, {"size", ball.size()}, {"sizes", sizes}, {"elements", words_of(sc.gens, ball.elements())}};
}

json run_profile(const GroupScenario& sc, const Options& o) {
  const Profile p = displacement_profile(sc, o.threads);
  write_file(o.out / "profile.csv", profile_csv(p));
  json rows = json::array();
  for (const auto& r : p.rows) rows.push_back(to_json(r));
  json stable = json::array();
  for (std::size_t c = 0; c < sc.thresholds.size(); ++c)
    stable.push_back({{"C", sc.thresholds[c].str()}, {"stable", bool(p.stable[c])}});
  json vals = json::array();
  for (const auto& v : sc.valuations) vals.push_back(v.str());
  json out = {{"ball_size", p.ball_size}, {"valuations", vals}, {"rows", rows}, {"stable", stable}};
  if (sc.sym.enabled) {
    const std::string col = sc.field.kind() == FieldKind::ratfunc ? "sym-proxy@" + sc.sym.t0.str() : "sym-proxy";
    out["sym_proxy"] = {{"column", col}, {"bound", sc.sym.bound.str()}};
  }
  return out;
}

json run_census(const GroupScenario& sc, const Options& o) {
  const int R = sc.census_radius >= 0 ? sc.census_radius : sc.r_max;
  const auto elems = stabilizer_census(sc, R, o.threads);
  json rows = words_of(sc.gens, elems);
  bool all_certified = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const bool cert = isotropy_certificate(elems[i].element, sc.valuations);
    all_certified = all_certified && cert;
    rows[i]["isotropy_certificate"] = cert;
  }
  return {{"radius", R}, {"count", elems.size()}, {"all_certified", all_certified}, {"stabilizers", rows}};
}

json run_cover(const GroupScenario& sc) {
  if (!sc.cover) raise(Errc::invalid_argument, "scenario has no cover section");
  const CoverResult res = ultrametric_cover(sc.cover->points, *sc.cover->valuation, sc.cover->d);
  json parts = json::array();
  for (const auto& part : res.parts) {
    json p = json::array();
    for (std::size_t i : part) p.push_back(sc.cover->points[i].str());
    parts.push_back(p);
  }
  return {{"valuation", sc.cover->valuation->str()},
          {"d", sc.cover->d.str()},
          {"parts", parts},
          {"certificate", {{"diameter", res.diameter_ok}, {"separated", res.separated_ok}, {"single_ball", res.multiplicity_ok}}}};
}

json run_rank(const GroupScenario& sc) {
  const RankBounds rb = composition_rank_bounds(sc.gens, sc.rank_length, sc.element_cap);
  json out = to_json(rb);
  out["word_length"] = sc.rank_length;
  json witnesses = json::array();
  for (const auto& l : rb.per_layer)
    for (const auto& span : l.upper_spans) {
      if (span.basis.empty()) continue;
      try {
        const auto w = boundedness_witness(span, Rational(1));
        json pts = json::array();
        for (const auto& p : w.points) pts.push_back(p.str());
        witnesses.push_back({{"position", {span.position.first + 1, span.position.second + 1}},
                             {"points", pts},
                             {"determinant", w.determinant.str()},
                             {"determinant_consistent", w.determinant_consistent},
                             {"box_bound_per_unit", w.box_bound.str()}});
      } catch (const Error& e) {
        if (e.code() != Errc::incompatible_field) throw;
      }
    }
  out["boundedness"] = witnesses;
  return out;
}

json run_trace_rep(const GroupScenario& sc) {
  const TraceBasis tb = burnside_basis(sc.gens, sc.trace_word_len);
  json words = json::array();
  for (const auto& w : tb.words) words.push_back(word_str(sc.gens, w));
  json images = json::array();
  for (std::size_t i = 0; i < sc.gens.size(); ++i)
    images.push_back({{"label", sc.gens.labels()[i]},
                      {"alpha", to_json(alpha(sc.gens.gens()[i], tb))},
                      {"integral_characteristic", integral_characteristic(sc.gens.gens()[i])}});
  return {{"basis_words", words}, {"found_at_length", tb.found_at}, {"gram_determinant", tb.gram_det.str()}, {"alpha", images}};
}

json run_alperin_shalen(const GroupScenario& sc) {
  json out;
  out["ring"] = sc.ring ? sc.ring->str() : "none";
  json vals = json::array();
  for (const auto& v : sc.valuations) vals.push_back(v.str());
  out["valuations"] = vals;
  json elems = json::array();
  for (const auto& x : sc.elements) elems.push_back({{"element", x.str()}, {"integral", integrality_filter(x, sc.valuations)}});
  out["elements"] = elems;
  json gens = json::array();
  for (std::size_t i = 0; i < sc.gens.size(); ++i) {
    const Mat& g = sc.gens.gens()[i];
    json disp = json::array();
    for (const auto& v : sc.valuations) disp.push_back(displacement(g, base_vertex(sc.field, sc.n, v)));
    gens.push_back({{"label", sc.gens.labels()[i]},
                    {"char_poly", char_poly_str(char_poly(g))},
                    {"isotropy_certificate", isotropy_certificate(g, sc.valuations)},
                    {"base_displacements", disp}});
  }
  out["generators"] = gens;
  return out;
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::ball_too_large:
      return 2;
    case Errc::parse_error:
    case Errc::invalid_argument:
    case Errc::dimension_mismatch:
    case Errc::not_special_linear:
    case Errc::incompatible_field:
    case Errc::incompatible_valuation:
    case Errc::not_prime:
    case Errc::not_irreducible_modulus:
    case Errc::division_by_zero:
    case Errc::singular_matrix:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valtree: valuations, Bruhat-Tits trees and word-ball probes"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> names = {"valuate", "ball", "profile", "census", "cover", "rank", "trace-rep", "alperin-shalen"};
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--scenario", o.scenario, "scenario JSON file")->required();
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--threads", o.threads, "worker threads for displacement evaluation");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    const GroupScenario sc = load_scenario(o.scenario);
    fs::create_directories(o.out);
    json result;
    if (cmd == "valuate") result = run_valuate(sc);
    else if (cmd == "ball") result = run_ball(sc);
    else if (cmd == "profile") result = run_profile(sc, o);
    else if (cmd == "census") result = run_census(sc, o);
    else if (cmd == "cover") result = run_cover(sc);
    else if (cmd == "rank") result = run_rank(sc);
    else if (cmd == "trace-rep") result = run_trace_rep(sc);
    else result = run_alperin_shalen(sc);
    const json report = {{"command", cmd}, {"scenario", sc.name}, {"status", "ok"}, {"result", result}};
    write_file(o.out / "report.json", report.dump(2) + "\n");
    std::cout << cmd << " " << sc.name << ": ok\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "valtree " << cmd << ": " << e.what() << "\n";
    try {
      fs::create_directories(o.out);
      const json report = {{"command", cmd}, {"status", "error"}, {"error", errc_name(e.code())}, {"message", e.what()}};
      write_file(o.out / "report.json", report.dump(2) + "\n");
    } catch (...) {
    }
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "valtree " << cmd << ": " << e.what() << "\n";
    return 1;
  }
}
