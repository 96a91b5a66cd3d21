#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "scf/json_io.hpp"

namespace scf::cli {

// thrown for bad flag values; mapped to exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Markdown };

struct Options {
  std::string alg = "n2";
  std::string delta = "0";
  int lambda = 0;
  std::optional<int> lambda_bar;
  int dpow = 3;
  int cutoff2 = kDefaultCutoff2;
  int jobs = 0;
  Format format = Format::Text;
  std::string out_dir;
  std::string check_dir;
  std::string vector;
  std::string suite = "all";
  bool allow_known_misprints = false;
  std::vector<std::string> positional;
};

// SCF_CUTOFF2 or the default
int default_cutoff2();
AlgebraId parse_alg(const std::string& text);
// "p/q" or "sym"
Scalar parse_delta(const std::string& text);
Rational parse_rational_delta(const std::string& text);

int cmd_bracket(const Options& o, std::ostream& out);
int cmd_realize(const Options& o, std::ostream& out);
int cmd_singular(const Options& o, std::ostream& out);
int cmd_locus(const Options& o, std::ostream& out);
int cmd_rank(const Options& o, std::ostream& out);
int cmd_row(const Options& o, std::ostream& out);
int cmd_tables(const Options& o, std::ostream& out);
int cmd_axioms(const Options& o, std::ostream& out);
int cmd_verify(const Options& o, std::ostream& out);

struct GridPoint {
  AlgebraId alg;
  Rational delta;
  int lambda = 0;
  std::optional<int> lambda_bar;
};
// the rows emitted by `tables`
std::vector<GridPoint> standard_grid();
std::vector<ClassRow> compute_rows(const std::vector<GridPoint>& grid, int cutoff2, int jobs);
// expected ranks per case
int expected_rank(AlgebraId id, const std::string& case_label, int lambda, std::optional<int> lambda_bar);

}  // namespace scf::cli
