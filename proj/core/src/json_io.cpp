#include "scf/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace scf {

Json to_json(const GenMode& g) { return Json{{"gen", gen_name(g.gen)}, {"mode2", g.mode2}}; }

GenMode genmode_from_json(const Json& j) {
  auto g = parse_gen(j.at("gen").get<std::string>());
  if (!g) throw std::invalid_argument("unknown generator " + j.at("gen").dump());
  return {*g, j.at("mode2").get<int>()};
}

Json to_json(const AlgElement& x) {
  Json out = Json::array();
  for (const auto& [g, c] : x.terms()) {
    Json t = to_json(g);
    t["coeff"] = c.str();
    out.push_back(std::move(t));
  }
  return out;
}

AlgElement algelement_from_json(const Json& j) {
  AlgElement x;
  for (const auto& t : j) x.add(genmode_from_json(t), parse_scalar(t.at("coeff").get<std::string>()));
  return x;
}

Json vector_to_json(const VermaModule& m, const VermaVector& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) {
    Json odd = Json::array();
    for (int a = 0; a < m.n_odd(); ++a)
      if (k.mask & (1u << a)) odd.push_back(gen_name(m.odd_negative()[a].gen));
    Json t{{"dpow", k.dpow}, {"odd", odd}, {"f0", k.j}};
    if (m.algebra().has_bar_sl2()) t["f0bar"] = k.k;
    t["wt"] = to_json(m.weight_of(k));
    t["coeff"] = c.str();
    out.push_back(std::move(t));
  }
  return out;
}

VermaVector vector_from_json(const VermaModule& m, const Json& j) {
  VermaVector v;
  for (const auto& t : j) {
    PBWKey k;
    k.dpow = t.at("dpow").get<int>();
    for (const auto& name : t.at("odd")) {
      bool found = false;
      for (int a = 0; a < m.n_odd(); ++a)
        if (name.get<std::string>() == gen_name(m.odd_negative()[a].gen)) {
          k.mask |= static_cast<std::uint8_t>(1u << a);
          found = true;
        }
      if (!found) throw std::invalid_argument("unknown odd generator " + name.dump());
    }
    k.j = t.value("f0", 0);
    k.k = t.value("f0bar", 0);
    axpy(v, parse_scalar(t.at("coeff").get<std::string>()), m.basis_vector(k));
  }
  return v;
}

Json to_json(const WeightKey& w) { return Json{{"level2", w.level2}, {"h", w.h}, {"hbar", w.hbar}}; }

Json to_json(const VermaModule& m, const SingularReport& r) {
  Json basis = Json::array();
  for (const auto& v : r.basis) {
    SingularCheck c = is_singular(m, v);
    basis.push_back(Json{{"name", describe_vector(m, v)},
                         {"vector", vector_to_json(m, v)},
                         {"certificate", Json{{"singular", c.singular}, {"checked", c.checked.size()}}}});
  }
  Json checked = Json::array();
  for (const auto& g : r.checked) checked.push_back(to_json(g));
  return Json{{"weight", to_json(r.weight)}, {"l0", r.l0.str()}, {"basis", basis}, {"checked", checked}};
}

Json to_json(const LocusReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x{{"weight", to_json(e.weight)}, {"condition", e.condition.str()}};
    x["delta"] = e.delta ? Json(rational_str(*e.delta)) : Json(nullptr);
    x["family_dim"] = e.family.size();
    entries.push_back(std::move(x));
  }
  Json residual = Json::array();
  for (const auto& p : r.residual) residual.push_back(p.str());
  return Json{{"entries", entries}, {"residual", residual}};
}

Json to_json(const RankResult& r) {
  return Json{{"stabilized", r.stabilized}, {"rank", r.rank}, {"rank_even", r.rank_even}, {"rank_odd", r.rank_odd}};
}

Json to_json(const ClassRow& r) {
  Json j{{"alg", algebra_name(r.alg)}, {"delta", rational_str(r.delta)}, {"lambda", r.lambda}};
  j["lambda_bar"] = r.lambda_bar ? Json(*r.lambda_bar) : Json(nullptr);
  j["case"] = r.case_label;
  j["singular"] = r.singular;
  j["torsion"] = r.torsion;
  j["rank"] = to_json(r.rank);
  j["reachable"] = r.reachable;
  j["clean"] = r.clean;
  j["cutoff2"] = r.cutoff2;
  return j;
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  if (xs.empty()) return "-";
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

}  // namespace

std::string rows_markdown(const std::vector<ClassRow>& rows) {
  std::ostringstream os;
  os << "| algebra | Delta | Lambda | Lambda-bar | case | singular | torsion | rank | even/odd | reachable | clean |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << algebra_name(r.alg) << " | " << rational_str(r.delta) << " | " << r.lambda << " | "
       << (r.lambda_bar ? std::to_string(*r.lambda_bar) : "-") << " | " << r.case_label << " | " << join(r.singular)
       << " | " << join(r.torsion) << " | " << (r.rank.stabilized ? std::to_string(r.rank.rank) : "?") << " | "
       << r.rank.rank_even << "/" << r.rank.rank_odd << " | " << (r.reachable ? "yes" : "no") << " | "
       << (r.clean ? "yes" : "no") << " |\n";
  }
  return os.str();
}

Json to_json(const LambdaPoly& p, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json t{{"d", k.dpow}, {"lambda", k.lpow}, {"mu", k.mpow}};
    t["gen"] = k.label >= 0 ? Json(labels.at(k.label)) : Json(nullptr);
    t["coeff"] = c.str();
    out.push_back(std::move(t));
  }
  return out;
}

Json to_json(const ConformalAlgebraSpec& r) {
  Json table = Json::array();
  for (const auto& [ab, p] : r.table)
    table.push_back(Json{{"a", r.labels[ab.first]}, {"b", r.labels[ab.second]}, {"bracket", to_json(p, r.labels)}});
  return Json{{"schema", kSchemaVersion}, {"name", r.name}, {"labels", r.labels}, {"parity", r.parity}, {"table", table}};
}

Json to_json(const ConformalModuleSpec& m) {
  Json action = Json::array();
  for (const auto& [av, p] : m.action)
    action.push_back(Json{{"a", av.first}, {"v", m.labels[av.second]}, {"action", to_json(p, m.labels)}});
  return Json{{"schema", kSchemaVersion}, {"name", m.name}, {"labels", m.labels}, {"parity", m.parity}, {"action", action}};
}

Json to_json(const AxiomReport& r) { return Json{{"checks", r.checks}, {"failures", r.failures}, {"ok", r.ok()}}; }

Json to_json(const AdjointReport& r) {
  return Json{{"algebra", r.algebra},       {"vector", r.vector},
              {"delta", rational_str(r.delta)}, {"lambda", r.lambda},
              {"highest_weight", r.highest_weight}, {"generates", r.generates},
              {"adjoint_rank", r.adjoint_rank},     {"irreducible_rank", r.irreducible_rank},
              {"ok", r.ok()}};
}

Json to_json(const IdentityResult& r) {
  Json j{{"group", r.spec->group}, {"lhs", r.spec->lhs}, {"rhs", r.spec->rhs}, {"where", r.where}, {"holds", r.holds}};
  if (!r.holds) j["difference"] = r.difference;
  if (!r.spec->correction.empty()) j["correction"] = r.spec->correction;
  return j;
}

}  // namespace scf
