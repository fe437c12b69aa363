#include "valtree/scenario.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "valtree/error.hpp"

namespace valtree {

using nlohmann::json;

namespace {

std::string literal_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  raise(Errc::parse_error, "expected an element literal, got " + j.dump());
}

Rational rational_of(const json& j) { return Rational::parse(literal_of(j)); }

Field field_of(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "rational") return Field::rationals();
    if (s == "ratfunc") return Field::rational_functions();
    if (s == "polynomial") return Field::polynomials();
    raise(Errc::parse_error, "unknown field '" + s + "'");
  }
  if (j.is_object() && j.contains("algebraic")) {
    const json& a = j.at("algebraic");
    const std::string symbol = a.value("symbol", "a");
    // The modulus is written in the field's own symbol.
    if (!std::regex_match(symbol, std::regex("[A-Za-z][A-Za-z0-9_]*")))
      raise(Errc::parse_error, "bad field symbol '" + symbol + "'");
    const std::string text = std::regex_replace(a.at("modulus").get<std::string>(),
                                                std::regex("\\b" + symbol + "\\b"), "t1");
    const FieldElem m = parse_literal(text, Field::polynomials());
    std::vector<Rational> coeffs;
    for (const auto& [mono, c] : m.kind() == FieldKind::multipoly ? m.as_multipoly().terms()
                                                                  : MultiPoly(m.as_rational()).terms()) {
      if (mono.size() > 1) raise(Errc::parse_error, "modulus must be univariate");
      const std::size_t k = mono.empty() ? 0 : mono[0];
      if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
      coeffs[k] = c;
    }
    return Field::number_field(NumberField::make(UniPoly(coeffs), symbol));
  }
  raise(Errc::parse_error, "unrecognised field " + j.dump());
}

Mat matrix_of(const json& j, const Field& f) {
  if (!j.is_array() || j.empty()) raise(Errc::parse_error, "matrix must be a non-empty array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != j.size()) raise(Errc::dimension_mismatch, "matrix must be square");
    std::vector<std::string> row;
    for (const auto& e : r) row.push_back(literal_of(e));
    rows.push_back(std::move(row));
  }
  return Mat::from_literals(f, rows);
}

}  // namespace

Valuation parse_valuation(const std::string& text) {
  if (text == "order_at_zero") return Valuation::order_at_zero();
  if (text == "order_at_infinity") return Valuation::order_at_infinity();
  auto inner = [&](std::string_view prefix) -> std::optional<std::string> {
    if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 && text.back() == ')')
      return text.substr(prefix.size(), text.size() - prefix.size() - 1);
    return std::nullopt;
  };
  if (auto p = inner("padic(")) {
    try {
      return Valuation::padic(std::stoul(*p));
    } catch (const std::logic_error&) {
      raise(Errc::parse_error, "bad prime in '" + text + "'");
    }
  }
  if (auto q = inner("order_at(")) {
    const FieldElem poly = parse_literal(*q, Field::rational_functions());
    const RatFunc& r = poly.kind() == FieldKind::ratfunc ? poly.as_ratfunc() : RatFunc(poly.as_rational());
    if (!r.is_polynomial()) raise(Errc::parse_error, "order_at needs a polynomial");
    return Valuation::order_at_irreducible(r.num());
  }
  raise(Errc::parse_error, "unknown valuation '" + text + "'");
}

GroupScenario scenario_from_json(const json& j) {
  try {
    GroupScenario sc;
    sc.name = j.value("name", "unnamed");
    sc.field = j.contains("field") ? field_of(j.at("field")) : Field::rationals();
    sc.n = j.value("n", std::size_t{2});
    if (sc.n == 0) raise(Errc::invalid_argument, "n must be positive");

    std::vector<Mat> gens;
    std::vector<std::string> labels;
    for (const auto& g : j.value("generators", json::array())) {
      const json& m = g.is_object() ? g.at("matrix") : g;
      Mat mat = matrix_of(m, sc.field);
      if (mat.dim() != sc.n) raise(Errc::dimension_mismatch, "generator is not " + std::to_string(sc.n) + "x" + std::to_string(sc.n));
      if (!mat.is_special_linear()) raise(Errc::not_special_linear, "generator " + mat.key() + " is not in SL(n)");
      gens.push_back(std::move(mat));
      labels.push_back(g.is_object() ? g.value("label", "g" + std::to_string(labels.size() + 1))
                                     : "g" + std::to_string(labels.size() + 1));
    }
    if (j.contains("conjugator")) {
      Mat c = matrix_of(j.at("conjugator"), sc.field);
      const Mat ci = c.inverse();
      for (auto& g : gens) g = ci * g * c;
      sc.conjugator = std::move(c);
    }
    sc.gens = GeneratorSet::symmetrize(sc.field, sc.n, gens, labels);

    if (j.contains("ring")) {
      const json& r = j.at("ring");
      const std::string fam = r.at("family").get<std::string>();
      if (fam == "ZInvS") {
        sc.ring = RingFamily::z_inv_s(r.at("s").get<unsigned long>());
      } else if (fam == "LaurentZ") {
        sc.ring = RingFamily::laurent_z();
      } else {
        raise(Errc::parse_error, "unknown ring family '" + fam + "'");
      }
      sc.valuations = synthesize_valuations(*sc.ring);
    }
    if (j.contains("valuations")) {
      sc.valuations.clear();
      for (const auto& v : j.at("valuations")) sc.valuations.push_back(parse_valuation(v.get<std::string>()));
    }
    for (const auto& v : sc.valuations)
      if (!v.applies_to(sc.field.kind()))
        raise(Errc::incompatible_valuation, v.str() + " does not apply over " + sc.field.str());

    if (j.contains("sym_proxy")) {
      const json& s = j.at("sym_proxy");
      sc.sym.enabled = s.value("enabled", true);
      if (s.contains("bound")) sc.sym.bound = rational_of(s.at("bound"));
      if (s.contains("t0")) sc.sym.t0 = rational_of(s.at("t0"));
    }
    for (const auto& c : j.value("thresholds", json::array())) sc.thresholds.push_back(rational_of(c));
    if (j.contains("radius")) {
      sc.r_min = j.at("radius").value("min", 0);
      sc.r_max = j.at("radius").value("max", 0);
    }
    if (sc.r_min < 0 || sc.r_max < sc.r_min) raise(Errc::invalid_argument, "radius range must satisfy 0 <= min <= max");
    sc.element_cap = j.value("element_cap", kDefaultBallCap);
    sc.rank_length = j.value("rank_length", 4);
    sc.trace_word_len = j.value("trace_word_len", 4);
    sc.census_radius = j.value("census_radius", -1);

    const Field elem_field = sc.field;
    for (const auto& e : j.value("elements", json::array())) sc.elements.push_back(parse_literal(literal_of(e), elem_field));

    if (j.contains("cover")) {
      const json& c = j.at("cover");
      CoverSpec cs;
      cs.valuation = parse_valuation(c.at("valuation").get<std::string>());
      const Field pf = cs.valuation->natural_field();
      for (const auto& p : c.at("points")) cs.points.push_back(parse_literal(literal_of(p), pf));
      cs.d = rational_of(c.at("d"));
      if (cs.d.sign() <= 0) raise(Errc::invalid_argument, "cover scale d must be positive");
      sc.cover = std::move(cs);
    }
    return sc;
  } catch (const json::exception& e) {
    raise(Errc::parse_error, std::string("scenario JSON: ") + e.what());
  }
}

GroupScenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) raise(Errc::parse_error, "cannot open " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(Errc::parse_error, file.string() + ": " + e.what());
  }
  return scenario_from_json(j);
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Vertex& x) { return {{"basis", to_json(x.basis())}, {"valuation", x.valuation().str()}}; }

namespace {

json positions_json(const std::vector<Position>& ps) {
  json out = json::array();
  for (const auto& [i, k] : ps) out.push_back({i + 1, k + 1});
  return out;
}

json spans_json(const std::vector<EntrySpan>& spans) {
  json out = json::array();
  for (const auto& s : spans) {
    json basis = json::array();
    for (const auto& b : s.basis) basis.push_back(b.str());
    out.push_back({{"position", {s.position.first + 1, s.position.second + 1}}, {"basis", basis}});
  }
  return out;
}

}  // namespace

json to_json(const RankBounds& rb) {
  json layers = json::array();
  for (const auto& l : rb.per_layer) {
    layers.push_back({{"layer", l.layer.residual ? json("residual") : json(l.layer.k)},
                      {"superdiagonal", l.layer.k},
                      {"positions", positions_json(l.layer.positions)},
                      {"lower", l.lower},
                      {"upper", l.upper},
                      {"basis_printed", spans_json(l.upper_spans)},
                      {"observed_basis", spans_json(l.lower_spans)}});
  }
  return {{"lower", rb.lower},
          {"upper", rb.upper},
          {"closed", rb.closed()},
          {"saturation_length", rb.saturation_length},
          {"layers", layers}};
}

json to_json(const ProfileRow& row) {
  return {{"R", row.R},
          {"C", row.C.str()},
          {"count", row.count},
          {"min_disp", row.min_disp.str()},
          {"max_disp", row.max_disp.str()}};
}

std::string profile_csv(const Profile& p) {
  std::ostringstream out;
  out << "R,C,count,min_disp,max_disp\n";
  for (const auto& r : p.rows) out << r.R << ',' << r.C << ',' << r.count << ',' << r.min_disp << ',' << r.max_disp << '\n';
  return out.str();
}

}  // namespace valtree
