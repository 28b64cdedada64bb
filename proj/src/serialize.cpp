#include "galstab/serialize.hpp"

namespace galstab {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

BigRational parse_rational(const Json& j) {
  if (j.is_number_integer()) return BigRational(j.get<long>());
  if (j.is_string()) {
    BigRational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) parse_error("bad rational " + j.dump());
    if (q.get_den() == 0) parse_error("zero denominator");
    q.canonicalize();
    return q;
  }
  if (j.is_array() && j.size() == 2) {
    BigInt num, den;
    if (!j[0].is_string() || !j[1].is_string() || num.set_str(j[0].get<std::string>(), 10) != 0 ||
        den.set_str(j[1].get<std::string>(), 10) != 0 || den == 0)
      parse_error("bad coefficient " + j.dump());
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }
  parse_error("bad coefficient " + j.dump());
}

long get_long(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) parse_error(std::string("missing integer ") + key);
  return j[key].get<long>();
}

}  // namespace

Json to_json(const CycElement& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
  return Json{{"m", x.field().conductor()}, {"coeffs", coeffs}};
}

CycElement element_from_json(const Json& j) {
  const long m = get_long(j, "m");
  if (m < 1) parse_error("conductor must be positive");
  const CyclotomicField field(m);
  if (!j["coeffs"].is_array() || static_cast<long>(j["coeffs"].size()) != field.degree())
    parse_error("expected " + std::to_string(field.degree()) + " coefficients");
  std::vector<BigRational> c;
  for (const auto& x : j["coeffs"]) c.push_back(parse_rational(x));
  return CycElement::from_polynomial(field, c);
}

Json to_json(const CycMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

CycMatrix matrix_from_json(const Json& j, const CyclotomicField& field) {
  if (!j.is_array() || j.empty()) parse_error("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  CycMatrix a(field, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) parse_error("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      CycElement x = element_from_json(j[r][c]);
      if (!(x.field() == field)) parse_error("entry conductor differs from the group's");
      a(r, c) = x;
    }
  }
  return a;
}

Json to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Level& level) {
  if (level.is_infinite()) return "inf";
  return level.value();
}

Json to_json(const SubfieldHandle& k) {
  return Json{{"m", k.field().conductor()},
              {"fixing", k.fixing_subgroup()},
              {"degree", k.degree()},
              {"conductor", k.conductor()}};
}

Json to_json(const PrimeIdeal& beta) {
  return Json{{"p", beta.p()}, {"gen_poly", beta.gen_poly()}, {"e", beta.e()}, {"f_res", beta.f_res()}};
}

Json to_json(const FiniteMatrixGroup& g) {
  Json elems = Json::array();
  for (const auto& x : g.elements()) elems.push_back(to_json(x));
  Json gens = Json::array();
  for (const auto& x : g.generators()) gens.push_back(to_json(x));
  return Json{{"n", g.dim()},
              {"m", g.field().conductor()},
              {"order", g.order()},
              {"elements", elems},
              {"generators", gens}};
}

FiniteMatrixGroup group_from_json(const Json& j, std::size_t cap) {
  const long n = get_long(j, "n");
  const long m = get_long(j, "m");
  if (n < 1 || m < 1) parse_error("group needs positive n and m");
  const CyclotomicField field(m);
  auto read_list = [&](const char* key) {
    std::vector<CycMatrix> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) parse_error(std::string(key) + " must be an array");
    for (const auto& x : j[key]) {
      out.push_back(matrix_from_json(x, field));
      if (static_cast<long>(out.back().dim()) != n) parse_error("matrix dimension differs from n");
    }
    return out;
  };
  std::vector<CycMatrix> gens = read_list("generators");
  std::vector<CycMatrix> elems = read_list("elements");
  if (gens.empty() && elems.empty()) parse_error("group needs generators or elements");

  if (!gens.empty()) {
    FiniteMatrixGroup g = close_group(field, static_cast<std::size_t>(n), gens, cap);
    if (!elems.empty()) {
      if (elems.size() != g.order()) parse_error("element list does not match the generated group");
      for (const auto& x : elems)
        if (!g.contains(x)) parse_error("element list does not match the generated group");
    }
    if (j.contains("order") && get_long(j, "order") != static_cast<long>(g.order())) parse_error("order mismatch");
    return g;
  }
  FiniteMatrixGroup g(field, static_cast<std::size_t>(n), elems, elems);
  if (g.order() != elems.size()) parse_error("duplicate elements");
  if (!g.verify_closed()) parse_error("element list is not closed under products");
  if (j.contains("order") && get_long(j, "order") != static_cast<long>(g.order())) parse_error("order mismatch");
  return g;
}

Json to_json(const ATypeCertificate& cert) {
  Json pi = Json::array();
  Json eps = Json::array();
  for (std::size_t g = 0; g < cert.pi.size(); ++g) {
    pi.push_back(Json::array({g, cert.pi[g]}));
    for (std::size_t i = 0; i < cert.eps[g].size(); ++i) eps.push_back(Json::array({g, i, cert.eps[g][i]}));
  }
  return Json{{"root_order", cert.root_order}, {"pi", pi}, {"eps", eps}};
}

Json to_json(const DiagonalizationResult& r) {
  Json chars = Json::array();
  for (const auto& c : r.characters) {
    Json row = Json::array();
    for (const auto& x : c) row.push_back(to_json(x));
    chars.push_back(row);
  }
  Json out{{"ok", r.ok}, {"characters", chars}};
  if (r.ok)
    out["conjugator"] = to_json(r.conjugator);
  else
    out["index"] = r.index.get_str();
  return out;
}

Json to_json(const EmbeddingMatrix& e) {
  Json basis = Json::array();
  for (const auto& u : e.basis) basis.push_back(to_json(u));
  return Json{{"V", to_json(e.v)}, {"basis", basis}, {"L", to_json(e.l)}, {"K", to_json(e.k)},
              {"embeddings", e.embeddings}};
}

Json to_json(const PUReport& r) {
  Json psi_table = Json::array();
  for (const auto& [a, perm] : r.psi_table) psi_table.push_back(Json::array({a, perm}));
  return Json{{"p", r.p},
              {"order", r.group.order()},
              {"generators", [&] {
                 Json g = Json::array();
                 for (const auto& x : r.group.generators()) g.push_back(to_json(x));
                 return g;
               }()},
              {"psi_table", psi_table},
              {"field_of_definition", to_json(r.field_of_definition)},
              {"predicted_field", to_json(r.predicted_field)},
              {"field_of_definition_matches", r.field_of_definition == r.predicted_field},
              {"integral", r.integral},
              {"stability_verified", r.stability_verified},
              {"stability_checks", r.stability_checks}};
}

Json to_json(const WitnessAudit& w) {
  return Json{{"witness", w.index}, {"order", w.order}, {"s", w.s},        {"level", to_json(w.level)},
              {"bound", w.bound},   {"in_kernel", w.in_kernel},           {"pass", w.pass}};
}

Json to_json(const TorsionAuditReport& r) {
  Json entries = Json::array();
  for (const auto& w : r.entries) entries.push_back(to_json(w));
  return Json{{"entries", entries}, {"pass", r.pass}, {"sharp", r.sharp}};
}

Json to_json(const Corollary1Report& r) {
  return Json{{"n", r.n},
              {"trials", r.trials},
              {"seed", r.seed},
              {"congruent_mod2", r.congruent_mod2},
              {"congruent_mod3", r.congruent_mod3},
              {"congruent_mod4", r.congruent_mod4},
              {"violations", r.violations},
              {"orders", r.orders},
              {"pass", r.pass}};
}

}  // namespace galstab
