// afschur: exact products, basis conversions, basis enumeration, and
// verification suites for the periodic-matrix convolution algebras, their
// divided-power integral forms, and the characteristic-p subalgebras.
//
// Every subcommand assembles a JSON request and hands it to the shared
// library through the C interface; the tool itself does no arithmetic.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "afschur.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Args {
  json req;
  std::string format = "json";
};

// Element arguments travel as raw strings; the library decides whether they
// are inline JSON or file paths.
void add_element(CLI::App* c, Args& a, const char* key, const char* what) {
  auto cb = [&a, key](const std::string& v) { a.req[key] = v; };
  c->add_option_function<std::string>(std::string("--") + key, cb, what)
      ->required();
}

void add_int(CLI::App* c, Args& a, const char* key, const char* what,
             bool required = true) {
  auto cb = [&a, key](long long v) { a.req[key] = v; };
  auto* o = c->add_option_function<long long>(std::string("--") + key, cb, what);
  if (required) o->required();
}

void add_ring(CLI::App* c, Args& a) {
  auto cb = [&a](const std::string& v) { a.req["ring"] = v; };
  c->add_option_function<std::string>("--ring", cb,
                                      "coefficient ring: Z, Q, or Fp:<p>");
}

void add_window(CLI::App* c, Args& a) {
  auto cb = [&a](long long v) { a.req["window"] = v; };
  c->add_option_function<long long>(
      "--window", cb,
      "column-support radius (default 2, or AFSCHUR_WINDOW)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computations in periodic-matrix convolution algebras, "
      "divided-power integral forms, and their characteristic-p "
      "subalgebras"};
  app.require_subcommand(1);

  Args a;
  app.add_option("--format", a.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // --h is a context flag (the level exponent), so subcommands offer help
  // only under --help.
  auto sub = [&app](const char* name, const char* what) {
    CLI::App* c = app.add_subcommand(name, what);
    c->set_help_flag("--help", "print help");
    c->fallthrough();
    return c;
  };

  auto* schur_mul = sub(
      "schur-mul", "multiply two elements of the degree-r convolution algebra");
  add_int(schur_mul, a, "n", "rank");
  add_int(schur_mul, a, "r", "degree");
  add_ring(schur_mul, a);
  add_element(schur_mul, a, "left", "left factor (JSON or path)");
  add_element(schur_mul, a, "right", "right factor (JSON or path)");

  auto* schur_oracle = sub(
      "schur-oracle",
      "multiply via the double-coset convolution oracle (reference path)");
  add_int(schur_oracle, a, "n", "rank");
  add_int(schur_oracle, a, "r", "degree");
  add_ring(schur_oracle, a);
  add_element(schur_oracle, a, "left", "left factor (JSON or path)");
  add_element(schur_oracle, a, "right", "right factor (JSON or path)");

  auto* hyper_mul = sub(
      "hyper-mul", "multiply two elements of the divided-power integral form");
  add_int(hyper_mul, a, "n", "rank");
  add_ring(hyper_mul, a);
  add_element(hyper_mul, a, "left", "left factor (JSON or path)");
  add_element(hyper_mul, a, "right", "right factor (JSON or path)");

  auto* hyper_convert = sub(
      "hyper-convert", "rewrite an element between the five standard bases");
  add_ring(hyper_convert, a);
  {
    auto cb_from = [&a](const std::string& v) { a.req["from"] = v; };
    auto cb_to = [&a](const std::string& v) { a.req["to"] = v; };
    hyper_convert
        ->add_option_function<std::string>("--from", cb_from,
                                           "source basis: B|M|Bp|C|G")
        ->required();
    hyper_convert
        ->add_option_function<std::string>("--to", cb_to,
                                           "target basis: B|M|Bp|C|G")
        ->required();
  }
  add_element(hyper_convert, a, "input", "element (JSON or path)");

  auto* hall_mul = sub(
      "hall-mul",
      "closed-form product of two upper-strict basis matrices");
  add_ring(hall_mul, a);
  add_element(hall_mul, a, "left", "left index matrix (JSON or path)");
  add_element(hall_mul, a, "right", "right index matrix (JSON or path)");

  auto* garland_lambda = sub(
      "garland-lambda",
      "k-th imaginary divided-power polynomial in the power sums");
  add_int(garland_lambda, a, "k", "degree");

  auto* garland_verify = sub(
      "garland-verify",
      "check the row evaluation against the closed partition sum");
  add_int(garland_verify, a, "n", "rank");
  add_int(garland_verify, a, "k", "degree");
  add_int(garland_verify, a, "i", "row index");
  add_int(garland_verify, a, "l", "loop exponent");

  auto* modp_basis = sub(
      "modp-basis", "enumerate a windowed basis of the level subalgebra");
  add_int(modp_basis, a, "n", "rank");
  add_int(modp_basis, a, "p", "prime");
  add_int(modp_basis, a, "h", "level");
  add_window(modp_basis, a);
  {
    auto cb = [&a](const std::string& v) { a.req["kind"] = v; };
    modp_basis
        ->add_option_function<std::string>("--kind", cb,
                                           "basis kind: Bh|Mh|Ch|Gh|Mh0")
        ->required();
  }

  auto* modp_member = sub(
      "modp-member", "test membership in the level subalgebra span");
  add_int(modp_member, a, "n", "rank");
  add_int(modp_member, a, "p", "prime");
  add_int(modp_member, a, "h", "level");
  add_element(modp_member, a, "input", "element (JSON or path)");

  auto* little_basis = sub(
      "little-basis", "enumerate a windowed basis of a degree-r quotient");
  add_int(little_basis, a, "n", "rank");
  add_int(little_basis, a, "r", "degree");
  add_int(little_basis, a, "p", "prime");
  add_int(little_basis, a, "h", "level");
  add_window(little_basis, a);
  {
    auto cb = [&a](const std::string& v) { a.req["kind"] = v; };
    little_basis
        ->add_option_function<std::string>(
            "--kind", cb, "basis kind: Phr|Mhr|Bhr|PPhr|MPhr")
        ->required();
  }

  auto* k_mul = sub(
      "k-mul", "multiply two elements of the stabilized algebra");
  add_int(k_mul, a, "n", "rank");
  add_ring(k_mul, a);
  add_element(k_mul, a, "left", "left factor (JSON or path)");
  add_element(k_mul, a, "right", "right factor (JSON or path)");

  auto* kbar_mul = sub(
      "kbar-mul", "multiply two elements of the residue quotient");
  add_int(kbar_mul, a, "p", "prime");
  add_int(kbar_mul, a, "h", "level");
  add_element(kbar_mul, a, "left", "left factor (JSON or path)");
  add_element(kbar_mul, a, "right", "right factor (JSON or path)");

  auto* phi = sub(
      "phi", "realization map from the level subalgebra to the quotient");
  add_int(phi, a, "p", "prime");
  add_int(phi, a, "h", "level");
  add_element(phi, a, "input", "element (JSON or path)");

  auto* verify = sub(
      "verify", "run verification suites (default: all)");
  std::string suite = "all";
  verify->add_option("suite", suite,
                     "suite name from `verify list`, or \"all\"");
  {
    auto cb_seed = [&a](unsigned long long v) { a.req["seed"] = v; };
    verify->add_option_function<unsigned long long>(
        "--seed", cb_seed,
        "seed for randomized checks (default AFSCHUR_SUITE_SEED)");
  }
  add_int(verify, a, "n", "restrict to one rank where applicable", false);
  add_int(verify, a, "r", "restrict to one degree where applicable", false);

  auto* independence = sub(
      "independence",
      "rank test for a family of divided-power basis indices");
  add_int(independence, a, "n", "rank");
  add_int(independence, a, "p", "prime");
  add_int(independence, a, "h", "level");
  add_element(independence, a, "indices",
              "JSON array of basis indices (JSON or path)");

  CLI11_PARSE(app, argc, argv);

  for (auto* c : app.get_subcommands()) {
    a.req["command"] = c->get_name();
    if (c == verify) a.req["suite"] = suite;
  }
  if (a.format == "text") a.req["format"] = "text";

  afs_session* s = afs_session_new();
  if (!s) {
    std::fputs("session allocation failed\n", stderr);
    return AFS_INTERNAL;
  }
  char* response = nullptr;
  int code = afs_run_json(s, a.req.dump().c_str(), &response);
  if (response) {
    std::fputs(response, code == AFS_OK ? stdout : stderr);
    afs_free(response);
  }
  afs_session_free(s);
  return code;
}
