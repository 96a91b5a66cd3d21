#include "scf/identities.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace scf {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// splits at top-level + and -, keeping the sign with the term
std::vector<std::pair<int, std::string>> split_terms(std::string_view s) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  std::string cur;
  char prev = 0;  // previous non-space character
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    bool binary = prev != 0 && prev != '*' && prev != '/' && prev != '(' && prev != ':' && prev != '^' && prev != '[';
    if (depth == 0 && (c == '+' || c == '-') && (binary || prev == 0)) {
      if (!trim(cur).empty()) out.push_back({sign, trim(cur)});
      else if (prev != 0) throw ParseError("cannot parse vector expression \"" + std::string(s) + "\"");
      sign = c == '-' ? (prev == 0 ? -1 : -1) : 1;
      if (prev == 0 && !out.empty()) sign = c == '-' ? -sign : sign;
      cur.clear();
      prev = c;
      continue;
    }
    cur += c;
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  if (depth != 0) throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
  if (trim(cur).empty()) throw ParseError("cannot parse vector expression \"" + std::string(s) + "\"");
  out.push_back({sign, trim(cur)});
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

VectorExprEvaluator::VectorExprEvaluator(const VermaModule& m) : m_(m) {
  vars_["L"] = m.weight().lambda;
  vars_["Lb"] = m.weight().lambda_bar.value_or(Scalar(0));
  vars_["Delta"] = m.weight().delta;
}

Scalar VectorExprEvaluator::coef(std::string_view text) const { return parse_scalar(text, vars_); }

const VermaVector& VectorExprEvaluator::named(const std::string& name) {
  auto it = cache_.find(name);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(name, named_vector(m_, name)).first->second;
}

VermaVector VectorExprEvaluator::eval(std::string_view expr) {
  VermaVector out;
  for (const auto& [sign, t] : split_terms(expr)) axpy(out, Scalar(static_cast<long>(sign)), term(t));
  return out;
}

VermaVector VectorExprEvaluator::term(std::string_view text) {
  // the coefficient is everything before the last top-level '*'
  int depth = 0;
  std::size_t star = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '*' && depth == 0) star = i;
  }
  Scalar c(1);
  std::string_view rest = text;
  if (star != std::string_view::npos) {
    c = coef(text.substr(0, star));
    rest = text.substr(star + 1);
  }
  auto ws = words(rest);
  if (ws.empty()) throw ParseError("missing vector in term \"" + std::string(text) + "\"");
  if (ws.back() == "0") return {};
  VermaVector v = named(ws.back());
  const AlgebraId id = m_.algebra().id();
  for (auto it = ws.rbegin() + 1; it != ws.rend(); ++it) {
    const std::string& op = *it;
    if (op.size() > 1 && op[0] == 'u' && std::isdigit(static_cast<unsigned char>(op[1]))) {
      auto lb = op.find('['), rb = op.rfind(']');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError("u operator needs a weight, e.g. u3[L+2]: " + op);
      int i = std::stoi(op.substr(1, lb - 1));
      Scalar lam = coef(op.substr(lb + 1, rb - lb - 1));
      v = apply_u(m_, i, lam, v);
    } else if (op.find(':') != std::string::npos) {
      v = m_.act(m_.algebra().canonical(parse_genmode(op)), v);
    } else {
      v = m_.apply_word(parse_word(id, op), v);
    }
  }
  return scaled(v, c);
}

// ------------------------------------------------------------------ catalog

namespace {

const AlgebraId kN3{AlgebraKind::N3, 1};
const AlgebraId kN4{AlgebraKind::SmallN4, 1};
const AlgebraId kBig{AlgebraKind::BigN4, 1};

void add_table(std::vector<IdentitySpec>& out, const std::string& group, AlgebraId alg, const std::string& delta,
               const std::string& lhs_fmt, const std::vector<std::pair<int, std::string>>& rows, bool generic,
               const std::vector<int>& lambdas) {
  for (const auto& [i, rhs] : rows) {
    std::string lhs = lhs_fmt;
    auto p = lhs.find('#');
    while (p != std::string::npos) {
      lhs.replace(p, 1, std::to_string(i));
      p = lhs.find('#');
    }
    out.push_back({group, alg, delta, lhs, rhs, generic, lambdas, ""});
  }
}

std::vector<IdentitySpec> build_catalog() {
  std::vector<IdentitySpec> c;
  const std::vector<int> l25{2, 3, 4, 5};

  // N3, 4 Delta - Lambda = 0
  add_table(c, "n3.4D-L=0.u-table", kN3, "L/4", "u#[L+2] a2",
            {{1, "a2"},
             {2, "0"},
             {3, "-(L+4)*a5"},
             {4, "-(L+3)*a6 - 4*(L+1)*(L+3)*d a1"},
             {5, "0"},
             {6, "-4*(L+3)*d a2"},
             {7, "(L+3)*(L+2)*a8 + 2*(L+3)*d a3"},
             {8, "-2*d a5"}},
            true, l25);
  c.push_back({"n3.4D-L=0.lowering", kN3, "L/4", "Psi:1/2 a3", "-L*(L+2)*a1", true, l25, ""});
  c.push_back({"n3.4D-L=0.lowering", kN3, "L/4", "f:1/2 a4", "(2*L+2)*F0 F0 a1", true, l25, ""});
  c.push_back({"n3.4D-L=0.lowering", kN3, "L/4", "E:1 a7", "2*L*(L-1)*(2*L+2)*a1", true, l25, ""});

  // N3, 4 Delta + Lambda + 2 = 0
  add_table(c, "n3.4D+L+2=0.u-table", kN3, "-(L+2)/4", "u#[L-2] a4",
            {{1, "a4"},
             {2, "(L-1)*a6"},
             {3, "(L-2)*a7"},
             {4, "0"},
             {5, "L*(L-1)*a8 + 2*(L-1)*d a3"},
             {6, "0"},
             {7, "0"},
             {8, "-2*d a7"}},
            true, {4, 5});
  c.push_back({"n3.4D+L+2=0.lowering", kN3, "-(L+2)/4", "f:1/2 a2", "2*(L+1)*a1", true, l25, ""});
  c.push_back({"n3.4D+L+2=0.lowering", kN3, "-(L+2)/4", "Psi:1/2 a3", "-L*(L+2)*a1", true, l25, ""});
  c.push_back({"n3.4D+L+2=0.lowering", kN3, "-(L+2)/4", "F:1 a5", "-4*(L+1)*a1", true, l25, ""});
  c.push_back({"n3.4D+L+2=0.L=2", kN3, "-(L+2)/4", "F:2 d a1", "-24*a1", false, {2}, "F:2 d a5 = -24*a1"});
  add_table(c, "n3.4D+L+2=0.L=1.u-table", kN3, "-(L+2)/4", "u#[L] a6",
            {{1, "a6"}, {2, "0"}, {3, "-3*a8 - 6*d a3"}, {5, "0"}, {6, "-8*d a6"}, {8, "-2*d a8 - 4*d d a3"}}, false,
            {1});

  // small N4, 2 Delta - Lambda = 0
  add_table(c, "n4.2D-L=0.u-table.a2", kN4, "L/2", "u#[L+1] a2",
            {{1, "a2"},
             {2, "0"},
             {3, "-a8"},
             {4, "(L+2)*a6"},
             {5, "-a9 - a10 + 2*(L+2)*d a1"},
             {6, "0"},
             {7, "a13 - 2*d a3"},
             {8, "0"},
             {9, "-a12 + 2*d a2"},
             {10, "a12 + 2*(L+2)*d a2"},
             {11, "2*(L+2)*d a4 - (L+2)*a14"},
             {12, "0"},
             {13, "-2*d a8"},
             {14, "2*(L+2)*d a6"},
             {15, "-(L+2)*a16 + 2*(L+1)*d a9 - 2*d a10"},
             {16, "-2*d a12"}},
            true, l25);
  add_table(c, "n4.2D-L=0.u-table.a3", kN4, "L/2", "u#[L+1] a3",
            {{1, "a3"},
             {2, "a8"},
             {3, "0"},
             {4, "(L+1)*a9 - a10"},
             {5, "(L+2)*a7"},
             {6, "a12"},
             {7, "0"},
             {8, "0"},
             {9, "a13"},
             {10, "(L+2)*a13"},
             {11, "-(L+2)*a15"},
             {12, "-a16"},
             {13, "0"},
             {14, "(L+2)*a16"},
             {15, "0"},
             {16, "0"}},
            true, l25);
  c.push_back({"n4.2D-L=0.lowering", kN4, "L/2", "Gpp:1/2 a4", "0", true, l25, ""});
  c.push_back({"n4.2D-L=0.lowering", kN4, "L/2", "Gpp:1/2 a5", "L*(2*L+2)*a1", true, l25, ""});
  c.push_back({"n4.2D-L=0.lowering", kN4, "L/2", "Gmm:1/2 a4", "(2*L+2)*F0 a1", true, l25, ""});
  c.push_back({"n4.2D-L=0.lowering", kN4, "L/2", "E:1 a11", "L*(L-1)*(2*L+2)*a1", true, l25, ""});

  // small N4, 2 Delta + Lambda + 2 = 0
  add_table(c, "n4.2D+L+2=0.u-table.a4", kN4, "-(L+2)/2", "u#[L-1] a4",
            {{1, "a4"},
             {2, "-L*a6"},
             {3, "2*L*d a1 - L*a9 + a10"},
             {4, "0"},
             {5, "-a11"},
             {6, "0"},
             {7, "-a15 + 2*d a5"},
             {8, "2*L*d a2 + L*a12"},
             {9, "a14 + 2*d a4"},
             {10, "(L-1)*a14"},
             {11, "0"},
             {12, "2*L*d a6"},
             {13, "-L*a16 + 2*d a10"},
             {14, "0"},
             {15, "-2*d a11"},
             {16, "2*d a14"}},
            true, {3, 4, 5});
  add_table(c, "n4.2D+L+2=0.u-table.a5", kN4, "-(L+2)/2", "u#[L-1] a5",
            {{1, "a5"},
             {2, "a10"},
             {3, "-a7"},
             {4, "a11"},
             {5, "0"},
             {6, "a14"},
             {7, "0"},
             {8, "-L*a13"},
             {9, "a15"},
             {10, "0"},
             {11, "0"},
             {12, "-a16"},
             {13, "0"},
             {14, "0"},
             {15, "0"},
             {16, "0"}},
            true, {3, 4, 5});
  c.push_back({"n4.2D+L+2=0.lowering", kN4, "-(L+2)/2", "Gmm:1/2 a2", "2*(L+1)*a1", true, l25, ""});
  c.push_back({"n4.2D+L+2=0.lowering", kN4, "-(L+2)/2", "Gmm:1/2 a3", "0", true, l25, ""});
  c.push_back({"n4.2D+L+2=0.lowering", kN4, "-(L+2)/2", "Gmp:1/2 a3", "-2*(L+1)*a1", true, l25, ""});
  c.push_back({"n4.2D+L+2=0.lowering", kN4, "-(L+2)/2", "F:1 a8", "-2*(L+1)*a1", true, l25, ""});
  add_table(c, "n4.2D+L+2=0.L=0.u-table.a6", kN4, "-(L+2)/2", "u#[L] a6",
            {{1, "a6"},
             {2, "0"},
             {3, "2*d a2 + a12"},
             {6, "0"},
             {7, "4*d d a1 - 2*d a9 + a16"},
             {8, "0"},
             {9, "4*d a6"},
             {12, "0"},
             {13, "4*d d a2 + 2*d a12"},
             {16, "4*d d a6"}},
            false, {0});
  add_table(c, "n4.2D+L+2=0.L=0.u-table.a7", kN4, "-(L+2)/2", "u#[L] a7",
            {{1, "a7"},
             {2, "a13"},
             {3, "0"},
             {6, "a16"},
             {7, "0"},
             {8, "0"},
             {9, "0"},
             {12, "0"},
             {13, "0"},
             {16, "0"}},
            false, {0});
  add_table(c, "n4.2D+L+2=0.L=0.u-table.a9", kN4, "-(L+2)/2", "u#[L] a9 - 2*u#[L] d a1",
            {{1, "a9 - 2*d a1"},
             {2, "-a12 - 2*d a2"},
             {3, "a13"},
             {6, "-2*d a6"},
             {7, "2*d a7"},
             {8, "0"},
             {9, "2*a16"},
             {12, "0"},
             {13, "2*d a13"},
             {16, "2*d a16"}},
            false, {0});
  c.push_back({"n4.2D+L+2=0.L=0", kN4, "-(L+2)/2", "F:2 d a8", "-4*(L+1)*a1", false, {0}, ""});

  // big N4, Lambda-bar = Lambda
  add_table(c, "bign4.2D-L=0.u-table", kBig, "L/2", "u#[L+1] b2",
            {{1, "b2"},
             {2, "0"},
             {3, "-(L+2)*b9"},
             {4, "-(L+2)*b6"},
             {5, "-(L+2)/2*b7 - (L+2)/2*b10 - 2*(L+2)*(L+1)*d b1"},
             {6, "0"},
             {7, "-(L+3)*b12"},
             {8, "-(L+2)*b13 + 2*(L+2)*d b3"},
             {9, "0"},
             {10, "(L+3)*b12 - 4*(L+1)*d b2"},
             {11, "-(L+2)*b14 + 2*(L+2)*d b4"},
             {12, "0"},
             {13, "-2*(L+2)*d b9"},
             {14, "-2*(L+2)*d b6"},
             {15, "-4*(L+1)*d d b1 - (L+2)^2*b16 + (L+2)*d b7"},
             {16, "-4*d b12"}},
            true, {2, 3, 4});
  const std::string lo1 = "bign4.2D-L=0.lowering";
  c.push_back({lo1, kBig, "L/2", "Gmm:1/2 b3", "2*(L+1)*F0 b1", true, {2, 3, 4}, ""});
  c.push_back({lo1, kBig, "L/2", "Gmm_bar:1/2 b4", "2*(L+1)*Fb0 b1", true, {2, 3, 4}, ""});
  c.push_back({lo1, kBig, "L/2", "Gpp:1/2 b5", "-2*L^2*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({lo1, kBig, "L/2", "E:1 b8", "2*L*(L-1)*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({lo1, kBig, "L/2", "F_bar:1 b10 + 2*L*F_bar:1 d b1", "-2*(L+2)*Fb0 b1", true, {2, 3, 4}, ""});
  c.push_back({lo1, kBig, "L/2", "E_bar:1 b11", "2*L*(L-1)*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({lo1, kBig, "L/2", "Gpp_bar:3/2 b15", "-2*L^2*(L+1)*b1", true, {2, 3, 4}, ""});
  add_table(c, "bign4.2D+L+2=0.u-table", kBig, "-(L+2)/2", "u#[L-1] b5",
            {{1, "b5"},
             {2, "1/2*b7 + 1/2*b10"},
             {3, "-L*b8"},
             {4, "-L*b11"},
             {5, "0"},
             {6, "L*b14"},
             {7, "-(L-1)*b15"},
             {8, "0"},
             {9, "L*b13"},
             {10, "(L-1)*b15"},
             {11, "0"},
             {12, "L^2*b16 + L*d b7"},
             {13, "0"},
             {14, "0"},
             {15, "0"},
             {16, "d b15"}},
            true, {2, 3, 4});
  const std::string lo2 = "bign4.2D+L+2=0.lowering";
  c.push_back({lo2, kBig, "-(L+2)/2", "Gmm:1/2 b2", "2*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({lo2, kBig, "-(L+2)/2", "Gpm_bar:1/2 b3", "-2*L*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({lo2, kBig, "-(L+2)/2", "Gmp:1/2 b4", "-2*L*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({lo2, kBig, "-(L+2)/2", "F:1 b6", "-2*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({lo2, kBig, "-(L+2)/2", "F_bar:1 b9", "-2*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({lo2, kBig, "-(L+2)/2", "F_bar:1 b10 + 2*L*F_bar:1 d b1", "2*L*Fb0 b1", true, {2, 3, 4}, ""});
  c.push_back({lo2, kBig, "-(L+2)/2", "Gmm_bar:3/2 b12", "8*(L+1)*b1", true, {2, 3, 4}, ""});
  c.push_back({"bign4.2D+L+2=0.L=1", kBig, "-(L+2)/2", "Gmm_bar:5/2 d b12", "24*(L+1)*d b1", false, {1},
               "Gmm_bar:5/2 d b12 = 24*(L+1)*b1"});

  // misprinted lines: the equation that holds in place of the printed one
  const std::vector<std::array<std::string, 3>> fixes{
      {"n3.4D-L=0.u-table", "u7[L+2] a2", "u7[L+2] a2 = (L+3)*(L+2)*a8 - 2*(L+3)*d a3"},
      {"n4.2D-L=0.u-table.a3", "u12[L+1] a3", "u12[L+1] a3 = 0"},
      {"n4.2D+L+2=0.u-table.a5", "u3[L-1] a5", "u3[L-1] a5 = -L*a7"},
      {"n4.2D+L+2=0.u-table.a5", "u12[L-1] a5", "u12[L-1] a5 = -L*a16"},
      {"bign4.2D-L=0.u-table", "u10[L+1] b2", "u10[L+1] b2 = (L+3)*b12 - 4*(L+2)*d b2"},
      {"bign4.2D-L=0.u-table", "u15[L+1] b2", "u15[L+1] b2 = -(L+2)^2*b16 + (L+2)*d b7"},
      {"bign4.2D-L=0.u-table", "u16[L+1] b2", "u16[L+1] b2 = -d b12"},
      {"bign4.2D-L=0.lowering", "Gpp_bar:3/2 b15", "Gpp_bar:3/2 b15 = 8*L^2*(L+1)*b1"},
      {"bign4.2D+L+2=0.u-table", "u2[L-1] b5", "u2[L-1] b5 = L/2*b7 + L/2*b10"},
  };
  for (const auto& [group, lhs, eq] : fixes)
    for (auto& s : c)
      if (s.group == group && s.lhs == lhs) s.correction = eq;
  return c;
}

}  // namespace

const std::vector<IdentitySpec>& identity_catalog() {
  static const std::vector<IdentitySpec> c = build_catalog();
  return c;
}

std::vector<std::string> identity_groups() {
  std::vector<std::string> out;
  for (const auto& s : identity_catalog())
    if (out.empty() || out.back() != s.group) out.push_back(s.group);
  return out;
}

std::shared_ptr<VermaModule> identity_module(const IdentitySpec& spec, std::optional<int> lambda) {
  Scalar lam = lambda ? Scalar(static_cast<long>(*lambda)) : Scalar::param(Param::LambdaSym);
  Scalar delta = parse_scalar(spec.delta, ScalarVars{{"L", lam}});
  std::optional<Scalar> lb;
  if (spec.alg.kind == AlgebraKind::BigN4) lb = lam;
  return std::make_shared<VermaModule>(spec.alg, HighestWeight{delta, lam, lb});
}

namespace {

std::vector<IdentityResult> run(const IdentitySpec& spec, const std::string& lhs, const std::string& rhs) {
  std::vector<IdentityResult> out;
  std::vector<std::optional<int>> points;
  if (spec.generic) points.push_back(std::nullopt);
  for (int l : spec.lambdas) points.push_back(l);
  for (const auto& p : points) {
    auto m = identity_module(spec, p);
    VectorExprEvaluator ev(*m);
    VermaVector diff = ev.eval(lhs);
    axpy(diff, Scalar(-1), ev.eval(rhs));
    IdentityResult r;
    r.spec = &spec;
    r.where = p ? "Lambda=" + std::to_string(*p) : "generic";
    r.holds = diff.empty();
    if (!r.holds) r.difference = m->vector_str(diff);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<IdentityResult> check_identity(const IdentitySpec& spec) { return run(spec, spec.lhs, spec.rhs); }

std::vector<IdentityResult> check_equation(const IdentitySpec& spec, std::string_view equation) {
  auto eq = equation.find('=');
  if (eq == std::string_view::npos) throw ParseError("equation needs '=': " + std::string(equation));
  return run(spec, trim(equation.substr(0, eq)), trim(equation.substr(eq + 1)));
}

}  // namespace scf
