#include "jset/json_io.hpp"

#include <string>

#include "jset/errors.hpp"

namespace jset {

namespace {

template <class T>
T need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing JSON key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError(std::string("bad JSON value for \"") + key + "\"");
  }
}

i64 parse_int_key(const std::string& s) {
  size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw DomainError("bad integer key \"" + s + "\"");
  }
  if (pos != s.size()) throw DomainError("bad integer key \"" + s + "\"");
  return v;
}

}  // namespace

json shift_to_json(const Shift& s) {
  json j;
  switch (s.kind()) {
    case Shift::Kind::RhoEp:
      j["kind"] = "rho_ep";
      j["p"] = s.p();
      j["e"] = s.e();
      break;
    case Shift::Kind::RhoInf:
      j["kind"] = "rho_inf";
      j["p"] = s.p();
      break;
    case Shift::Kind::Abstract:
      j["kind"] = "abstract";
      j["table"] = s.table();
      j["tail"] = s.tail();
      break;
  }
  return j;
}

Shift shift_from_json(const json& j) {
  auto kind = need<std::string>(j, "kind");
  if (kind == "rho_ep") return Shift::rho_ep(need<int>(j, "p"), need<i64>(j, "e"));
  if (kind == "rho_inf") return Shift::rho_inf(need<int>(j, "p"));
  if (kind == "abstract") return Shift::abstract(need<std::vector<i64>>(j, "table"), need<i64>(j, "tail"));
  throw DomainError("unknown shift kind \"" + kind + "\"");
}

json jumpset_to_json(const JumpSet& js) {
  json j;
  j["shift"] = shift_to_json(js.shift);
  j["extended"] = js.extended;
  json e = json::array();
  for (const auto& en : js.entries) e.push_back({en.i, en.beta});
  j["entries"] = e;
  return j;
}

static JumpSet jumpset_with(const json& j, const Shift& s) {
  bool extended = j.contains("extended") ? need<bool>(j, "extended") : true;
  std::vector<Entry> entries;
  const json list = need<json>(j, "entries");
  for (const auto& pr : list) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer())
      throw DomainError("jump set entries must be [i, beta] integer pairs");
    entries.push_back({pr[0].get<i64>(), pr[1].get<int>()});
  }
  return make_jumpset(s, extended, std::move(entries));
}

JumpSet jumpset_from_json(const json& j) { return jumpset_with(j, shift_from_json(need<json>(j, "shift"))); }

JumpSet jumpset_from_json(const json& j, const Shift& fallback) {
  return jumpset_with(j, j.contains("shift") ? shift_from_json(j.at("shift")) : fallback);
}

json vector_to_json(const ValuationVector& v) {
  json j;
  j["shift"] = shift_to_json(v.shift);
  j["f"] = v.f;
  j["extended"] = v.extended;
  json c = json::object();
  for (const auto& [key, val] : v.coords) {
    std::string k = std::to_string(key.first);
    if (key.second != 1) k += ":" + std::to_string(key.second);
    c[k] = val;
  }
  j["coords"] = c;
  j["inf_default"] = true;
  return j;
}

ValuationVector vector_from_json(const json& j, const Shift& fallback) {
  ValuationVector v;
  v.shift = j.contains("shift") ? shift_from_json(j.at("shift")) : fallback;
  v.f = j.contains("f") ? need<int>(j, "f") : 1;
  if (v.f < 1) throw DomainError("f must be >= 1");
  v.extended = j.contains("extended") ? need<bool>(j, "extended") : true;
  bool inf_default = j.contains("inf_default") ? need<bool>(j, "inf_default") : true;
  if (!inf_default) {
    for (i64 i : v.indices()) {
      int slots = (v.extended && i == v.shift.e_star()) ? 1 : v.f;
      for (int s = 1; s <= slots; ++s) v.set(i, s, 1);
    }
  }
  const json coords = need<json>(j, "coords");
  for (const auto& [k, val] : coords.items()) {
    auto colon = k.find(':');
    i64 i = parse_int_key(k.substr(0, colon));
    int slot = colon == std::string::npos ? 1 : static_cast<int>(parse_int_key(k.substr(colon + 1)));
    if (val.is_null()) {
      v.set(i, slot, kInfVal);
      continue;
    }
    if (!val.is_number_integer() || val.get<i64>() < 1) throw DomainError("coordinate valuations must be integers >= 1");
    v.set(i, slot, val.get<int>());
  }
  return v;
}

json shape_to_json(const EisensteinShape& s) {
  json j;
  j["p"] = s.p;
  j["f"] = s.f;
  j["j"] = s.j;
  j["n"] = s.n;
  json c = json::object();
  for (const auto& [i, v] : s.coeff_vals) c[std::to_string(i)] = v;
  j["coeff_vals"] = c;
  return j;
}

EisensteinShape shape_from_json(const json& j) {
  EisensteinShape s;
  s.p = need<int>(j, "p");
  s.f = j.contains("f") ? need<int>(j, "f") : 1;
  s.j = j.contains("j") ? need<int>(j, "j") : 0;
  s.n = need<int>(j, "n");
  const json vals = need<json>(j, "coeff_vals");
  for (const auto& [k, val] : vals.items()) {
    if (!val.is_number_integer()) throw DomainError("coeff_vals values must be integers");
    s.coeff_vals[static_cast<int>(parse_int_key(k))] = val.get<i64>();
  }
  validate_shape(s);
  return s;
}

json belem_to_json(const BaseRing& b, const Tower::BElem& a) {
  json out = json::array();
  for (u64 c : a) {
    json digits = json::array();
    do {
      digits.push_back(c % b.p());
      c /= b.p();
    } while (c != 0);
    out.push_back(digits);
  }
  return out;
}

Tower::BElem belem_from_json(const BaseRing& b, const json& j) {
  if (j.is_number_integer()) return b.from_int(j.get<i64>());
  if (!j.is_array() || j.size() > b.zero().size())
    throw DomainError("base element must be an integer or an array of at most D*f coordinates");
  Tower::BElem a = b.zero();
  for (size_t k = 0; k < j.size(); ++k) {
    const json& c = j[k];
    if (c.is_number_integer()) {
      a[k] = b.reduce(c.get<i64>());
      continue;
    }
    if (!c.is_array()) throw DomainError("coordinate must be a digit array or an integer");
    u64 v = 0, w = 1;
    for (size_t d = 0; d < c.size() && d < static_cast<size_t>(b.precision()); ++d) {
      if (!c[d].is_number_integer() || c[d].get<i64>() < 0 || c[d].get<i64>() >= b.p())
        throw DomainError("digits must lie in [0, p)");
      v = b.addmod(v, b.mulmod(w, static_cast<u64>(c[d].get<i64>())));
      w = b.mulmod(w, static_cast<u64>(b.p()));
    }
    a[k] = v;
  }
  return a;
}

json polynomial_to_json(const BaseRing& b, const std::vector<Tower::BElem>& g) {
  json j;
  j["p"] = b.p();
  j["f"] = b.f();
  j["j"] = b.j();
  j["precision"] = b.precision();
  json c = json::array();
  for (const auto& a : g) c.push_back(belem_to_json(b, a));
  j["g"] = c;
  return j;
}

std::vector<Tower::BElem> polynomial_from_json(const BaseRing& b, const json& j) {
  const json arr = j.is_array() ? j : need<json>(j, "g");
  if (!arr.is_array() || arr.empty()) throw DomainError("polynomial needs at least one lower coefficient");
  std::vector<Tower::BElem> g;
  for (const auto& c : arr) g.push_back(belem_from_json(b, c));
  return g;
}

json polygon_to_json(const Polygon& poly) {
  json j = json::array();
  for (const auto& [x, y] : poly.vertices) j.push_back({x, y});
  return j;
}

std::string rational_string(const Rational& r) { return r.get_str(); }

json distribution_to_json(const Distribution& d) {
  json j;
  j["shift"] = shift_to_json(d.params.shift);
  j["q"] = d.params.q;
  j["start"] = d.r;
  json rows = json::array();
  for (const auto& [js, m] : d.mass)
    rows.push_back({{"jumpset", to_string(js)}, {"entries", jumpset_to_json(js)["entries"]}, {"mass", rational_string(m)}});
  j["classes"] = rows;
  j["total"] = rational_string(d.total());
  return j;
}

}  // namespace jset
