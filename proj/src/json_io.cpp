#include "dhecke/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dhecke {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

Int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<Int>();
}

std::vector<Int> as_int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "/" + std::to_string(i)));
  return out;
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // the library message already names line and column
    throw InputError(origin + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Json to_json(const CohClass& a) {
  Json out = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json x = Json::array();
    for (int i = 0; i < 32; ++i)
      if (m.x >> i & 1u) x.push_back(i);
    out.push_back({{"x", x}, {"y", m.y}, {"c", c}});
  }
  return out;
}

CohClass coh_class_from_json(const Json& j, const AbelianLGroup& t, const CoeffRing& s, const std::string& where) {
  CohClass out(t, s);
  const auto& arr = as_array(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    Monomial m;
    m.y.assign(static_cast<std::size_t>(t.rank()), 0);
    if (arr[i].contains("x")) {
      for (Int k : as_int_list(arr[i]["x"], w + "/x")) {
        if (k < 0 || k >= t.rank()) bad(w + "/x", "factor index " + std::to_string(k) + " out of range");
        if (m.x >> k & 1u) bad(w + "/x", "repeated factor index " + std::to_string(k));
        m.x |= 1u << k;
      }
    }
    if (arr[i].contains("y")) {
      auto y = as_int_list(arr[i]["y"], w + "/y");
      if (y.size() != m.y.size()) bad(w + "/y", "needs one exponent per factor of T");
      for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] < 0) bad(w + "/y", "negative exponent");
        m.y[k] = static_cast<int>(y[k]);
      }
    }
    out.add_term(m, as_int(field(arr[i], "c", w), w + "/c"));
  }
  return out;
}

Json to_json(const ToralElement& f) {
  Json terms = Json::array();
  for (const auto& [l, v] : f.support()) terms.push_back({{"lambda", l}, {"value", to_json(v)}});
  return {{"terms", terms}};
}

ToralElement toral_element_from_json(const Json& j, const ToralContext& ctx) {
  ToralElement out(ctx);
  const auto& terms = as_array(field(j, "terms", ""), "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = "/terms/" + std::to_string(i);
    auto l = as_int_list(field(terms[i], "lambda", w), w + "/lambda");
    if (l.size() != static_cast<std::size_t>(ctx.rd->rank())) bad(w + "/lambda", "wrong number of coordinates");
    out.add(l, coh_class_from_json(field(terms[i], "value", w), ctx.t, ctx.s, w + "/value"));
  }
  return out;
}

Json to_json(const IwahoriElement& a) {
  Json terms = Json::array();
  for (const auto& [sigma, c] : a.terms())
    terms.push_back({{"translation", sigma.translation}, {"w", sigma.w}, {"c", c}});
  return {{"terms", terms}};
}

IwahoriElement iwahori_element_from_json(const Json& j, RootDatumPtr rd, const CoeffRing& s) {
  IwahoriElement out(rd, s);
  const auto& terms = as_array(field(j, "terms", ""), "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = "/terms/" + std::to_string(i);
    auto l = as_int_list(field(terms[i], "translation", w), w + "/translation");
    if (l.size() != static_cast<std::size_t>(rd->rank())) bad(w + "/translation", "wrong number of coordinates");
    Int wi = as_int(field(terms[i], "w", w), w + "/w");
    if (wi < 0 || wi >= static_cast<Int>(rd->weyl_order())) bad(w + "/w", "Weyl index out of range");
    out.add({l, static_cast<int>(wi)}, as_int(field(terms[i], "c", w), w + "/c"));
  }
  return out;
}

TorusManifold manifold_from_json(const Json& j) {
  Int delta = as_int(field(j, "delta", ""), "/delta");
  if (delta < 0 || delta > 20) bad("/delta", "must lie in [0, 20]");
  std::vector<Place> places;
  const auto& arr = as_array(field(j, "places", ""), "/places");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = "/places/" + std::to_string(i);
    const auto& lab = field(arr[i], "label", w);
    if (!lab.is_string()) bad(w + "/label", "expected a string");
    auto orders = as_int_list(field(arr[i], "orders", w), w + "/orders");
    Int ell = 0;
    std::vector<int> exps;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      auto pp = orders[k] > 1 ? prime_power(orders[k]) : std::nullopt;
      if (!pp) bad(w + "/orders/" + std::to_string(k), "order must be a prime power > 1");
      if (ell != 0 && pp->first != ell) bad(w + "/orders/" + std::to_string(k), "orders must share one prime");
      ell = pp->first;
      exps.push_back(pp->second);
    }
    const auto& rows = as_array(field(arr[i], "matrix", w), w + "/matrix");
    std::vector<std::vector<Int>> matrix;
    for (std::size_t k = 0; k < rows.size(); ++k)
      matrix.push_back(as_int_list(rows[k], w + "/matrix/" + std::to_string(k)));
    try {
      places.push_back(Place{lab.get<std::string>(), AbelianLGroup(ell == 0 ? 2 : ell, exps), matrix});
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      bad(w, e.what());
    }
  }
  try {
    return TorusManifold(static_cast<int>(delta), std::move(places));
  } catch (const Error& e) {
    bad("/places", e.what());
  }
}

Json to_json(const TorusManifold& m) {
  Json places = Json::array();
  for (const auto& p : m.places()) {
    std::vector<Int> orders;
    for (int i = 0; i < p.target.rank(); ++i) orders.push_back(p.target.factor_order(i));
    places.push_back({{"label", p.label}, {"orders", orders}, {"matrix", p.matrix}});
  }
  return {{"delta", m.delta()}, {"places", places}};
}

}  // namespace dhecke
