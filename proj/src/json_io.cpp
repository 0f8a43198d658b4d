#include "difinv/json_io.hpp"

#include <stdexcept>

namespace difinv {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    malformed("rational must be [\"num\", \"den\"]");
  }
  try {
    Integer num(j[0].get<std::string>()), den(j[1].get<std::string>());
    if (den == 0) malformed("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    malformed("rational digits");
  }
}

Json to_json(const DiffPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json vars = Json::array();
    for (const auto& f : t.mono.factors()) vars.push_back(Json::array({f.var.name(), f.exp}));
    terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"vars", std::move(vars)}});
  }
  return Json{{"terms", std::move(terms)}};
}

DiffPoly poly_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) malformed("\"terms\" must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    std::vector<Monomial::Factor> fs;
    for (const auto& v : field(t, "vars")) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_number_unsigned()) {
        malformed("variable entry must be [\"name\", exponent]");
      }
      auto var = jet_var_from_name(v[0].get<std::string>());
      if (!var) malformed("unknown variable " + v[0].get<std::string>());
      unsigned e = v[1].get<unsigned>();
      if (e == 0) malformed("zero exponent");
      fs.push_back({*var, e});
    }
    out.push_back({Monomial::from_factors(std::move(fs)), rational_from_json(field(t, "coeff"))});
  }
  return DiffPoly::from_terms(std::move(out));
}

Json to_json(const RatFunc& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RatFunc ratfunc_from_json(const Json& j) {
  DiffPoly den = poly_from_json(field(j, "den"));
  if (den.is_zero()) malformed("zero denominator");
  return RatFunc(poly_from_json(field(j, "num")), std::move(den));
}

Json to_json(const PowerProduct& p) {
  Json factors = Json::array();
  for (const auto& f : p.factors) {
    factors.push_back(Json{{"name", f.name},
                           {"base", to_json(f.base)},
                           {"exponent", to_json(f.exponent)},
                           {"index", to_json(f.index)}});
  }
  return Json{{"constant", to_json(p.constant)}, {"factors", std::move(factors)}};
}

PowerProduct power_product_from_json(const Json& j) {
  PowerProduct p;
  p.constant = rational_from_json(field(j, "constant"));
  for (const auto& f : field(j, "factors")) {
    const Json& name = field(f, "name");
    if (!name.is_string()) malformed("factor name must be a string");
    p.factors.push_back({name.get<std::string>(), poly_from_json(field(f, "base")),
                         rational_from_json(field(f, "exponent")),
                         rational_from_json(field(f, "index"))});
  }
  return p;
}

Json to_json(const Invariant& inv) {
  Json j{{"name", inv.name}, {"kind", std::string(to_string(inv.kind))}};
  std::visit(
      [&](const auto& e) {
        Json fields = to_json(e);
        for (auto& [key, value] : fields.items()) j[key] = value;
      },
      inv.expr);
  j["index"] = to_json(inv.index);
  j["weight"] = inv.weight ? Json(*inv.weight) : Json(nullptr);
  j["order"] = inv.order;
  j["provenance"] = std::string(to_string(inv.provenance));
  return j;
}

Invariant invariant_from_json(const Json& j) {
  Invariant inv;
  const Json& name = field(j, "name");
  if (!name.is_string()) malformed("name must be a string");
  inv.name = name.get<std::string>();
  auto kind = kind_from_string(field(j, "kind").get<std::string>());
  if (!kind) malformed("unknown kind");
  inv.kind = *kind;
  if (j.contains("terms")) {
    inv.expr = poly_from_json(j);
  } else if (j.contains("num")) {
    inv.expr = ratfunc_from_json(j);
  } else if (j.contains("factors")) {
    inv.expr = power_product_from_json(j);
  } else {
    malformed("record has no expression");
  }
  inv.index = rational_from_json(field(j, "index"));
  const Json& w = field(j, "weight");
  if (!w.is_null()) inv.weight = w.get<int>();
  inv.order = field(j, "order").get<int>();
  auto prov = provenance_from_string(field(j, "provenance").get<std::string>());
  if (!prov) malformed("unknown provenance");
  inv.provenance = *prov;
  return inv;
}

}  // namespace difinv
