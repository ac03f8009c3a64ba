// Batch front end: read a job description, evaluate the family dimension
// formulas and the mapping-cone resolution for each s, and print a report.

#include <gorfam/gorfam.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitSchemaError = 2;
constexpr int kExitMathError = 3;
constexpr int kExitIoError = 4;

int default_width()
{
  if (const char* env = std::getenv("GORFAM_OUTPUT_WIDTH")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 100;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"dimensions and resolutions of families of graded Gorenstein quotients"};

  std::string input_path;
  app.add_option("input", input_path, "job description (JSON)")->required();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  std::optional<long long> s_single, s_lo, s_hi;
  app.add_option("--s", s_single, "evaluate a single s (overrides the input range)");
  app.add_option("--s-lo", s_lo, "override the lower end of the s range");
  app.add_option("--s-hi", s_hi, "override the upper end of the s range");
  bool assume_ext2_zero = false;
  app.add_flag("--assume-ext2-zero", assume_ext2_zero,
               "assert Ext^2_B(N_B, N_B)_0 = 0 for the small-s normal-module path");
  bool char_not_2 = false;
  app.add_flag("--char-not-2", char_not_2, "assert char(k) != 2");
  std::optional<int> lci_codim;
  app.add_option("--lci-codim", lci_codim, "assert depth_{I(Z)} B >= this value");
  int width = default_width();
  app.add_option("--width", width, "output width hint for the text format");

  CLI11_PARSE(app, argc, argv);

  std::ifstream file(input_path);
  if (!file) {
    std::cerr << "error: cannot open " << input_path << "\n";
    return kExitIoError;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  gorfam::JobInput job;
  try {
    job = gorfam::parse_input(buffer.str());
  } catch (const gorfam::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == gorfam::InputErrorKind::schema ? kExitSchemaError : kExitMathError;
  }

  if (s_single) {
    job.s_lo = job.s_hi = *s_single;
  } else {
    if (s_lo) job.s_lo = *s_lo;
    if (s_hi) job.s_hi = *s_hi;
  }
  if (job.s_lo > job.s_hi) {
    std::cerr << "error: s range must satisfy s_lo <= s_hi\n";
    return kExitSchemaError;
  }
  if (assume_ext2_zero) job.assumptions.assume_ext2_zero = true;
  if (char_not_2) job.assumptions.char_not_2 = true;
  if (lci_codim) job.assumptions.lci_outside_codim = lci_codim;

  const gorfam::JobReport report = gorfam::run(job);
  const auto fmt = format == "json" ? gorfam::EmitFormat::json : gorfam::EmitFormat::text;
  std::cout << gorfam::emit(report, fmt, width) << "\n";
  return 0;
}
