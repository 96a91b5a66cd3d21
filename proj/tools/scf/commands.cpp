#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

namespace scf::cli {

namespace fs = std::filesystem;

int default_cutoff2() {
  if (const char* env = std::getenv("SCF_CUTOFF2")) {
    try {
      int v = std::stoi(env);
      if (v >= 4) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("SCF_CUTOFF2 must be an integer >= 4");
  }
  return kDefaultCutoff2;
}

AlgebraId parse_alg(const std::string& text) {
  try {
    return parse_algebra(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Scalar parse_delta(const std::string& text) {
  if (text == "sym") return Scalar::param(Param::Delta);
  return Scalar(parse_rational_delta(text));
}

Rational parse_rational_delta(const std::string& text) {
  try {
    Scalar s = parse_scalar(text);
    if (!s.is_rational()) throw UsageError("Delta must be rational: " + text);
    return s.rational_value();
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

namespace {

HighestWeight weight_for(const Options& o, AlgebraId id) {
  HighestWeight hw{parse_delta(o.delta), Scalar(static_cast<long>(o.lambda)), std::nullopt};
  if (id.kind == AlgebraKind::BigN4) hw.lambda_bar = Scalar(static_cast<long>(o.lambda_bar.value_or(o.lambda)));
  else if (o.lambda_bar) throw UsageError("--lambda-bar applies to bign4 only");
  if (id.kind != AlgebraKind::N2 && o.lambda < 0) throw UsageError("Lambda must be a nonnegative integer");
  if (o.lambda_bar && *o.lambda_bar < 0) throw UsageError("Lambda-bar must be a nonnegative integer");
  return hw;
}

GenMode parse_mode(const Algebra& alg, const std::string& text) {
  try {
    GenMode g = parse_genmode(text);
    alg.validate(g);
    return g;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Json with_schema(Json body) {
  Json j{{"schema", kSchemaVersion}};
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

// ------------------------------------------------------------------ bracket, realize

int cmd_bracket(const Options& o, std::ostream& out) {
  if (o.positional.size() != 2) throw UsageError("bracket takes two generator modes, e.g. J:1 Gp:-1/2");
  Algebra alg(parse_alg(o.alg));
  GenMode a = parse_mode(alg, o.positional[0]), b = parse_mode(alg, o.positional[1]);
  AlgElement r = alg.bracket(AlgElement(a), AlgElement(b));
  if (o.format == Format::Json)
    print_json(out, with_schema({{"alg", alg.name()}, {"a", to_json(a)}, {"b", to_json(b)}, {"bracket", to_json(r)}}));
  else
    out << r.str() << "\n";
  return 0;
}

int cmd_realize(const Options& o, std::ostream& out) {
  if (o.positional.empty()) throw UsageError("realize takes one or more generator modes");
  Algebra alg(parse_alg(o.alg));
  Json arr = Json::array();
  for (const auto& text : o.positional) {
    GenMode g = parse_mode(alg, text);
    std::string f = alg.realize(g).str();
    if (o.format == Format::Json) arr.push_back(Json{{"mode", to_json(g)}, {"realization", f}});
    else out << g.str() << " = " << f << "\n";
  }
  if (o.format == Format::Json) print_json(out, with_schema({{"alg", alg.name()}, {"realizations", arr}}));
  return 0;
}

// ------------------------------------------------------------------ singular, locus

int cmd_singular(const Options& o, std::ostream& out) {
  AlgebraId id = parse_alg(o.alg);
  VermaModule m(id, weight_for(o, id));
  if (!o.vector.empty()) {
    VermaVector v;
    try {
      v = named_vector(m, o.vector);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    SingularCheck c = is_singular(m, v);
    if (o.format == Format::Json) {
      Json j{{"alg", algebra_name(id)}, {"vector", o.vector}, {"expansion", vector_to_json(m, v)}, {"singular", c.singular}};
      if (!c.singular) j["reason"] = c.reason;
      if (c.witness) j["witness"] = to_json(*c.witness);
      print_json(out, with_schema(j));
    } else {
      out << o.vector << " = " << m.vector_str(v) << "\n";
      out << (c.singular ? "singular" : "not singular: " + c.reason) << "\n";
    }
    return c.singular ? 0 : 1;
  }
  if (m.weight().delta.uses(Param::Delta)) throw UsageError("symbolic Delta needs --vector; use `locus` for a search");
  auto reports = find_singular(m, o.dpow);
  if (o.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(m, r));
    print_json(out, with_schema({{"alg", algebra_name(id)}, {"delta", o.delta}, {"lambda", o.lambda}, {"reports", arr}}));
    return 0;
  }
  if (reports.empty()) out << "no proper singular vectors up to dpow " << o.dpow << "\n";
  for (const auto& r : reports) {
    out << "weight level=" << half_str(r.weight.level2) << " h=" << r.weight.h;
    if (id.kind == AlgebraKind::BigN4) out << " hbar=" << r.weight.hbar;
    out << " L0=" << r.l0.str() << "\n";
    for (const auto& v : r.basis) out << "  " << describe_vector(m, v) << " = " << m.vector_str(v) << "\n";
  }
  return 0;
}

int cmd_locus(const Options& o, std::ostream& out) {
  AlgebraId id = parse_alg(o.alg);
  HighestWeight hw = weight_for(o, id);
  LocusReport r = singular_locus(id, hw.lambda, hw.lambda_bar, o.dpow);
  if (o.format == Format::Json) {
    Json j = to_json(r);
    print_json(out, with_schema({{"alg", algebra_name(id)}, {"lambda", o.lambda}, {"entries", j["entries"]}, {"residual", j["residual"]}}));
    return 0;
  }
  for (const auto& e : r.entries) {
    out << "level=" << half_str(e.weight.level2) << " h=" << e.weight.h;
    if (id.kind == AlgebraKind::BigN4) out << " hbar=" << e.weight.hbar;
    out << "  " << e.condition.str() << " = 0";
    if (e.delta) out << "  (Delta=" << rational_str(*e.delta) << ", dim " << e.family.size() << ")";
    out << "\n";
  }
  for (const auto& p : r.residual) out << "residual factor " << p.str() << "\n";
  return 0;
}

// ------------------------------------------------------------------ rank, row, tables

int expected_rank(AlgebraId id, const std::string& c, int l, std::optional<int> lb) {
  if (c == "trivial") return 0;
  switch (id.kind) {
    case AlgebraKind::N2: return c == "generic" ? 4 : 2;
    case AlgebraKind::N3:
      if (c == "4D-L=0") return 4 * l;
      if (c == "4D+L+2=0") return 4 * l + 8;
      return 8 * l + 8;
    case AlgebraKind::SmallN4:
      if (c == "2D-L=0") return 4 * l;
      if (c == "2D+L+2=0") return 4 * l + 8;
      return 16 * l + 16;
    case AlgebraKind::BigN4:
      if (c == "2D-L=0") return 8 * l * (l + 1);
      if (c == "2D+L+2=0") return 8 * (l + 1) * (l + 2);
      return 16 * (l + 1) * (lb.value_or(l) + 1);
  }
  return -1;
}

namespace {

ClassRow row_for(const Options& o) {
  AlgebraId id = parse_alg(o.alg);
  weight_for(o, id);
  std::optional<int> lb;
  if (id.kind == AlgebraKind::BigN4) lb = o.lambda_bar.value_or(o.lambda);
  return classification_row(id, parse_rational_delta(o.delta), o.lambda, lb, o.cutoff2);
}

}  // namespace

int cmd_rank(const Options& o, std::ostream& out) {
  ClassRow r = row_for(o);
  if (o.format == Format::Json) {
    Json j{{"alg", algebra_name(r.alg)}, {"delta", rational_str(r.delta)}, {"lambda", r.lambda}, {"case", r.case_label}};
    j["rank"] = to_json(r.rank);
    j["cutoff2"] = r.cutoff2;
    print_json(out, with_schema(j));
  } else {
    out << Json{{"rank", r.rank.rank}, {"case", r.case_label}}.dump() << "\n";
  }
  return r.rank.stabilized ? 0 : 1;
}

int cmd_row(const Options& o, std::ostream& out) {
  ClassRow r = row_for(o);
  switch (o.format) {
    case Format::Json: print_json(out, with_schema({{"row", to_json(r)}})); break;
    case Format::Markdown: out << rows_markdown({r}); break;
    case Format::Text: {
      out << algebra_name(r.alg) << " Delta=" << rational_str(r.delta) << " Lambda=" << r.lambda;
      if (r.lambda_bar) out << " Lambda-bar=" << *r.lambda_bar;
      out << "  case " << r.case_label << "\n";
      auto list = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s.empty() ? std::string("-") : s;
      };
      out << "  singular: " << list(r.singular) << "\n";
      out << "  torsion:  " << list(r.torsion) << "\n";
      out << "  rank " << r.rank.rank << " (even " << r.rank.rank_even << ", odd " << r.rank.rank_odd << ")"
          << (r.rank.stabilized ? "" : " NOT STABILIZED") << "\n";
      out << "  reachable " << (r.reachable ? "yes" : "no") << ", clean " << (r.clean ? "yes" : "no") << "\n";
    }
  }
  bool ok = r.rank.stabilized && r.reachable && r.clean;
  return ok ? 0 : 1;
}

std::vector<GridPoint> standard_grid() {
  std::vector<GridPoint> g;
  const Rational generic = make_rational(7, 3);
  const AlgebraId n2{AlgebraKind::N2, 1}, n3{AlgebraKind::N3, 1}, n4{AlgebraKind::SmallN4, 1}, big{AlgebraKind::BigN4, 1};
  auto push = [&](AlgebraId id, Rational d, int l, std::optional<int> lb = std::nullopt) {
    d.canonicalize();
    for (const auto& p : g)
      if (p.alg == id && p.delta == d && p.lambda == l && p.lambda_bar == lb) return;
    g.push_back({id, d, l, lb});
  };
  for (int l = -1; l <= 3; ++l) {
    push(n2, make_rational(l, 2), l);
    push(n2, make_rational(-l, 2), l);
    push(n2, make_rational(-1, 2), l);
    push(n2, generic, l);
  }
  for (int l = 0; l <= 4; ++l) {
    push(n3, make_rational(l, 4), l);
    if (l >= 1) push(n3, make_rational(-(l + 2), 4), l);
    push(n3, generic, l);
  }
  for (int l = 0; l <= 3; ++l) {
    push(n4, make_rational(l, 2), l);
    push(n4, make_rational(-(l + 2), 2), l);
    push(n4, generic, l);
  }
  for (int l = 0; l <= 2; ++l)
    for (int lb = 0; lb <= 2; ++lb) {
      push(big, make_rational(l, 2), l, lb);
      if (l >= 1) push(big, make_rational(-(l + 2), 2), l, lb);
      push(big, generic, l, lb);
    }
  return g;
}

std::vector<ClassRow> compute_rows(const std::vector<GridPoint>& grid, int cutoff2, int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<ClassRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < grid.size();) {
      const auto& p = grid[i];
      rows[i] = classification_row(p.alg, p.delta, p.lambda, p.lambda_bar, cutoff2);
    }
  };
  std::vector<std::future<void>> pool;
  for (int t = 0; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return rows;
}

namespace {

std::map<std::string, std::string> table_files(const std::vector<ClassRow>& rows) {
  std::map<std::string, std::string> files;
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  files["classification.json"] = Json{{"schema", kSchemaVersion}, {"rows", arr}}.dump(2) + "\n";
  files["classification.md"] = rows_markdown(rows);
  files["lambda_n3.json"] = to_json(generated_algebra_spec({AlgebraKind::N3, 1})).dump(2) + "\n";
  files["lambda_n4.json"] = to_json(generated_algebra_spec({AlgebraKind::SmallN4, 1})).dump(2) + "\n";
  return files;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int cmd_tables(const Options& o, std::ostream& out) {
  auto rows = compute_rows(standard_grid(), o.cutoff2, o.jobs);
  auto files = table_files(rows);
  if (!o.check_dir.empty()) {
    int bad = 0;
    for (const auto& [name, content] : files) {
      bool same = read_file(fs::path(o.check_dir) / name) == content;
      out << (same ? "same    " : "DIFFERS ") << name << "\n";
      bad += !same;
    }
    return bad ? 1 : 0;
  }
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    for (const auto& [name, content] : files) {
      std::ofstream f(fs::path(o.out_dir) / name, std::ios::binary);
      f << content;
      out << "wrote " << (fs::path(o.out_dir) / name).string() << "\n";
    }
    return 0;
  }
  out << (o.format == Format::Markdown ? files["classification.md"] : files["classification.json"]);
  return 0;
}

// ------------------------------------------------------------------ axioms

namespace {

struct AxiomRun {
  std::string name;
  AxiomReport report;
};

std::vector<AxiomRun> axiom_runs() {
  std::vector<AxiomRun> runs;
  runs.push_back({"virasoro", check_conformal_axioms(virasoro_spec())});
  runs.push_back({"current-sl2", check_conformal_axioms(current_sl2_spec())});
  runs.push_back({"virasoro-semidirect-current-sl2", check_conformal_axioms(semidirect_sl2_spec())});
  runs.push_back({"n2", check_conformal_axioms(n2_spec())});
  runs.push_back({"virasoro-F(alpha,Delta)", check_module_axioms(virasoro_spec(), virasoro_module_spec())});
  runs.push_back({"n2-module-generic", check_module_axioms(n2_spec(), n2_module_generic_spec())});
  runs.push_back({"n2-module-2D+L=0", check_module_axioms(n2_spec(), n2_module_minus_spec())});
  runs.push_back({"n2-module-2D-L=0", check_module_axioms(n2_spec(), n2_module_plus_spec())});
  runs.push_back({"n3-generated", check_conformal_axioms(generated_algebra_spec({AlgebraKind::N3, 1}))});
  runs.push_back({"n4-generated", check_conformal_axioms(generated_algebra_spec({AlgebraKind::SmallN4, 1}))});
  runs.push_back({"n2-algebra-table-vs-realization", compare_n2_algebra_tables()});
  runs.push_back({"n2-module-table-vs-pbw", compare_n2_tables()});
  return runs;
}

}  // namespace

int cmd_axioms(const Options& o, std::ostream& out) {
  auto runs = axiom_runs();
  std::vector<AdjointReport> adj;
  for (auto k : {AlgebraKind::N2, AlgebraKind::N3, AlgebraKind::SmallN4}) adj.push_back(check_adjoint_identification({k, 1}));
  bool ok = true;
  for (const auto& r : runs) ok = ok && r.report.ok();
  for (const auto& a : adj) ok = ok && a.ok();
  if (o.format == Format::Json) {
    Json checks = Json::array();
    for (const auto& r : runs) {
      Json j = to_json(r.report);
      j["name"] = r.name;
      checks.push_back(j);
    }
    Json adjs = Json::array();
    for (const auto& a : adj) adjs.push_back(to_json(a));
    print_json(out, with_schema({{"ok", ok}, {"checks", checks}, {"adjoint", adjs}}));
  } else {
    for (const auto& r : runs) {
      out << (r.report.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.report.checks << " checks)\n";
      for (const auto& f : r.report.failures) out << "    " << f << "\n";
    }
    for (const auto& a : adj)
      out << (a.ok() ? "PASS " : "FAIL ") << "adjoint " << a.algebra << " = L(0," << rational_str(a.delta) << ","
          << a.lambda << ") via " << a.vector << " (rank " << a.adjoint_rank << " vs " << a.irreducible_rank << ")\n";
  }
  return ok ? 0 : 1;
}

}  // namespace scf::cli
