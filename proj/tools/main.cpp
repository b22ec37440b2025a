#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rootval/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("--input", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of plane-curve singularities and their "
               "root-valuation data"};
  app.require_subcommand(1);

  rootval::Request req;
  std::string input_path;
  long precision = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--precision", precision, "working precision override (>= 4)");
    return sub;
  };

  auto* inv = add_common(app.add_subcommand(
      "invariants", "mu, tau, delta and branch count of a germ f(x, y)"));
  inv->add_option("--poly", req.poly, "the germ, e.g. \"y^2 - x^3\"");
  inv->add_option("--input", input_path, "read the germ from a file");

  auto* br = add_common(app.add_subcommand(
      "branch", "characteristic data of one parametrized branch"));
  br->add_option("--branch", req.branch, "e.g. \"x = t^4; y = t^6 + t^7\"");
  br->add_option("--input", input_path, "read the branch from a file");

  auto* rv = add_common(app.add_subcommand(
      "rootval", "root valuation datum of a matrix over Laurent series"));
  rv->add_option("--matrix", req.matrix, "e.g. \"d=2; trunc=6; 0; 1; e^3; 0\"");
  rv->add_option("--input", input_path, "read the matrix from a file");

  auto* eq = add_common(app.add_subcommand(
      "equising", "decide equisingularity of two branch configurations"));
  eq->add_option("--a", req.a, "branches of the first germ (repeatable)");
  eq->add_option("--b", req.b, "branches of the second germ (repeatable)");

  auto* it = add_common(app.add_subcommand(
      "intersect", "intersection number of two distinct branches"));
  it->add_option("--a", req.a, "first branch");
  it->add_option("--b", req.b, "second branch");

  auto* gkm = add_common(app.add_subcommand(
      "gkm-check", "equal root valuation data force equisingular spectral curves"));
  gkm->add_option("--a", req.a, "first matrix");
  gkm->add_option("--b", req.b, "second matrix");

  auto* dd = add_common(app.add_subcommand(
      "disc-demo", "discriminant of the y^2 - x^n family and its Nash checks"));
  dd->add_option("--n", req.n, "family index, 2..9");
  dd->add_option("--samples", req.samples, "comma-separated rational x-samples");

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  req.command = sub->get_name();
  if (precision != 0) req.precision = precision;
  if (!input_path.empty()) {
    std::string text = slurp(input_path);
    if (req.command == "invariants") req.poly = text;
    if (req.command == "branch") req.branch = text;
    if (req.command == "rootval") req.matrix = text;
  }
  return rootval::run(req, std::cout);
}
