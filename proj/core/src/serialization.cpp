#include "hypermoment/serialization.hpp"

#include <string>

#include "hypermoment/errors.hpp"
#include "hypermoment/recurrence.hpp"

namespace hypermoment {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw UsageError("malformed input: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<Rational> rationals(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    malformed(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  malformed("rationals are written as \"p/q\" strings");
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_real()) return rational_to_json(s.re());
  return Json{{"re", rational_to_json(s.re())}, {"im", rational_to_json(s.im())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_object()) {
    Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return Scalar(rational_from_json(field(j, "re")), std::move(im));
  }
  return Scalar(rational_from_json(j));
}

Json index_to_json(const MultiIndex& x) {
  Json out = Json::array();
  for (auto e : x) out.push_back(e);
  return out;
}

MultiIndex index_from_json(const Json& j) {
  if (!j.is_array()) malformed("elements are arrays of nonnegative integers");
  MultiIndex x(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    x[i] = static_cast<MultiIndex::value_type>(count(j[i], "element entry"));
  }
  return x;
}

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& s : p) out.push_back(scalar_to_json(s));
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) malformed("points are arrays of scalars");
  Point p;
  for (const auto& e : j) p.push_back(scalar_from_json(e));
  return p;
}

Hypergroup hypergroup_from_json(const Json& j, std::size_t certify_up_to) {
  const auto kind = field(j, "kind");
  if (!kind.is_string()) malformed("\"kind\" must be a string");
  const auto name = kind.get<std::string>();
  if (name == "chebyshev") {
    const std::size_t d = count(field(j, "dim"), "dim");
    if (d == 0) malformed("dim must be positive");
    return Hypergroup::chebyshev(d);
  }
  if (name == "recurrence1d") {
    std::optional<Recurrence1D::Tail> tail;
    if (j.contains("tail") && !j.at("tail").is_null()) {
      const auto& t = j.at("tail");
      tail = Recurrence1D::Tail{rational_from_json(field(t, "a")), rational_from_json(field(t, "b")),
                                rational_from_json(field(t, "c")), count(field(t, "from"), "from")};
    }
    Recurrence1D r(rationals(field(j, "a"), "a"), rationals(field(j, "b"), "b"),
                   rationals(field(j, "c"), "c"), std::move(tail));
    return Hypergroup::from_recurrence(std::move(r), certify_up_to);
  }
  if (name == "product") {
    const auto& factors = field(j, "factors");
    if (!factors.is_array() || factors.empty()) malformed("\"factors\" must be a nonempty array");
    std::vector<Hypergroup> parts;
    for (const auto& f : factors) parts.push_back(hypergroup_from_json(f, certify_up_to));
    return Hypergroup::product(parts);
  }
  malformed("unknown hypergroup kind \"" + name + "\"");
}

Json hypergroup_to_json(const Hypergroup& h) {
  switch (h.kind()) {
    case Hypergroup::Kind::chebyshev:
      return Json{{"kind", "chebyshev"}, {"dim", h.dimension()}};
    case Hypergroup::Kind::recurrence1d: {
      const auto& r = h.recurrence();
      auto list = [](const std::vector<Rational>& v) {
        Json out = Json::array();
        for (const auto& q : v) out.push_back(rational_to_json(q));
        return out;
      };
      Json out{{"kind", "recurrence1d"},
               {"a", list(r.prefix_a())},
               {"b", list(r.prefix_b())},
               {"c", list(r.prefix_c())}};
      if (r.tail()) {
        const auto& t = *r.tail();
        out["tail"] = Json{{"a", rational_to_json(t.a)},
                           {"b", rational_to_json(t.b)},
                           {"c", rational_to_json(t.c)},
                           {"from", t.from}};
      }
      return out;
    }
    case Hypergroup::Kind::product: {
      Json factors = Json::array();
      for (const auto& f : h.operands()) factors.push_back(hypergroup_to_json(f));
      return Json{{"kind", "product"}, {"factors", std::move(factors)}};
    }
  }
  return Json();
}

Json measure_to_json(const Measure& mu) {
  Json out = Json::array();
  for (const auto& [x, w] : mu.weights()) {
    out.push_back(Json{{"point", index_to_json(x)},
                       {"re", rational_to_json(w.re())},
                       {"im", rational_to_json(w.im())}});
  }
  return out;
}

Measure measure_from_json(const Json& j, const Hypergroup& h) {
  if (!j.is_array()) malformed("a measure is an array of weighted points");
  Measure mu(h);
  for (const auto& e : j) {
    const MultiIndex x = index_from_json(field(e, "point"));
    h.check_element(x);
    Rational im = e.contains("im") ? rational_from_json(e.at("im")) : Rational(0);
    mu.add(x, Scalar(rational_from_json(field(e, "re")), std::move(im)));
  }
  return mu;
}

Json hfunction_to_json(const HFunction& f) {
  Json out = Json::array();
  for (const auto& [atom, c] : f.terms()) {
    out.push_back(Json{{"coeff", scalar_to_json(c)},
                       {"alpha", index_to_json(atom.order)},
                       {"lambda", point_to_json(atom.point)}});
  }
  return out;
}

HFunction hfunction_from_json(const Json& j, const Hypergroup& h) {
  if (!j.is_array()) malformed("a function is an array of terms");
  HFunction f(h);
  for (const auto& e : j) {
    const MultiIndex alpha = index_from_json(field(e, "alpha"));
    const Point lambda = point_from_json(field(e, "lambda"));
    if (alpha.size() != h.dimension() || lambda.size() != h.dimension()) {
      malformed("term dimension does not match the hypergroup");
    }
    f.add_term(Atom{alpha, lambda}, scalar_from_json(field(e, "coeff")));
  }
  return f;
}

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) {
    terms.push_back(Json{{"alpha", index_to_json(alpha)}, {"coeff", scalar_to_json(c)}});
  }
  return Json{{"dim", p.dimension()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j) {
  const std::size_t d = count(field(j, "dim"), "dim");
  if (d == 0) malformed("dim must be positive");
  MultiPoly p(d);
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) malformed("\"terms\" must be an array");
  for (const auto& t : terms) {
    const MultiIndex alpha = index_from_json(field(t, "alpha"));
    if (alpha.size() != d) malformed("term dimension does not match \"dim\"");
    p.add_term(alpha, scalar_from_json(field(t, "coeff")));
  }
  return p;
}

Json rejection_to_json(const RejectionError& e) {
  return Json{{"x", index_to_json(e.x())},
              {"y", index_to_json(e.y())},
              {"w", index_to_json(e.w())},
              {"value", rational_to_json(e.value())}};
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"passed", c.passed},
                          {"checked", c.checked},
                          {"detail", c.detail}});
  }
  return Json{{"box", r.box}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json equation_report_to_json(const EquationReport& r) {
  Json out{{"kind", r.kind},
           {"mode", r.mode == Mode::exact ? "exact" : "float"},
           {"passed", r.passed},
           {"checked", r.checked},
           {"max_residual", r.max_residual}};
  if (r.witness) {
    Json ys = Json::array();
    for (const auto& y : r.witness->ys) ys.push_back(index_to_json(y));
    out["witness"] = Json{{"equation", r.witness->equation},
                          {"x", index_to_json(r.witness->x)},
                          {"ys", std::move(ys)},
                          {"lhs", r.witness->lhs},
                          {"rhs", r.witness->rhs}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json degree_to_json(const DegreeResult& r) {
  Json witness = Json::array();
  for (const auto& y : r.lower_witness) witness.push_back(index_to_json(y));
  Json out;
  if (r.degree) {
    out["degree"] = *r.degree;
  } else {
    out["degree"] = nullptr;
  }
  out["symbolic_upper"] = r.symbolic_upper;
  out["lower_witness"] = std::move(witness);
  return out;
}

Json decomposition_to_json(const Decomposition& d, std::optional<std::size_t> sine_dim,
                           std::optional<std::size_t> degree) {
  Json atoms = Json::array();
  Json coefficients = Json::array();
  for (std::size_t j = 0; j < d.atoms.size(); ++j) {
    atoms.push_back(Json{{"alpha", index_to_json(d.atoms[j])},
                         {"lambda", point_to_json(d.point)},
                         {"in_variety", static_cast<bool>(d.in_variety[j])}});
    coefficients.push_back(scalar_to_json(d.coefficients[j]));
  }
  Json out{{"seed", hfunction_to_json(d.seed)},
           {"atoms", std::move(atoms)},
           {"coefficients", std::move(coefficients)},
           {"residual", rational_to_json(d.residual)},
           {"unique", d.unique},
           {"variety_dim", d.variety.dim}};
  out["sine_dim"] = sine_dim ? Json(*sine_dim) : Json(nullptr);
  out["degree"] = degree ? Json(*degree) : Json(nullptr);
  out["box"] = d.variety.box;
  out["stable"] = d.variety.stable;
  return out;
}

}  // namespace hypermoment
