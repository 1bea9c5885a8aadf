// Copyright 2026 The orbitvol Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitvol/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "orbitvol/eigdensity.hpp"
#include "orbitvol/ensemble.hpp"
#include "orbitvol/errors.hpp"
#include "orbitvol/json_io.hpp"
#include "orbitvol/liegeom.hpp"
#include "orbitvol/twoqubit.hpp"

namespace orbitvol::cli {

namespace {

using io::json;

struct Options {
  int m = 0;
  int n = 0;
  int d = 0;
  std::int64_t samples = 0;
  std::optional<std::uint64_t> seed;
  double tol = kDefaultLuTolerance;
  std::vector<double> spectrum;
  std::vector<double> grid;
  std::optional<double> lambda_a;
  std::optional<double> lambda_b;
  bool exact = false;
  bool mc = false;
  int max_vars = ExpansionLimits{}.max_vars;
  int threads = 0;
  std::string input;
  std::string json_text;
};

struct Context {
  Options opt;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
};

using Handler = std::function<void(Context&)>;

struct Subcommand {
  std::string name;
  std::string description;
  std::function<void(CLI::App&, Options&)> flags;
  Handler handler;
};

// ---------------------------------------------------------------------------
// Flag helpers

void add_m_n(CLI::App& app, Options& o) {
  app.add_option("--m", o.m, "dimension of subsystem A")->required()->check(CLI::PositiveNumber);
  app.add_option("--n", o.n, "dimension of subsystem B")->required()->check(CLI::PositiveNumber);
}

void add_input(CLI::App& app, Options& o) {
  app.add_option("--input", o.input, "JSON input file ('-' for stdin)");
  app.add_option("--json", o.json_text, "inline JSON input");
}

void add_seed(CLI::App& app, Options& o) {
  app.add_option("--seed", o.seed, "random seed (required)");
}

json read_input(Context& ctx) {
  const auto& o = ctx.opt;
  if (!o.input.empty() && !o.json_text.empty()) {
    throw InputError("give exactly one of --input and --json");
  }
  std::string text;
  if (!o.json_text.empty()) {
    text = o.json_text;
  } else if (!o.input.empty() && o.input != "-") {
    std::ifstream file(o.input);
    if (!file) throw InputError("cannot open input file '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  } else {
    text.assign(std::istreambuf_iterator<char>(*ctx.in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON input: ") + e.what());
  }
}

std::uint64_t require_seed(const Options& o) {
  if (!o.seed) throw InputError("--seed is required for stochastic subcommands");
  return *o.seed;
}

void emit(Context& ctx, const json& j) { *ctx.out << j.dump() << '\n'; }

// ---------------------------------------------------------------------------
// Subcommand table. Handlers only translate between JSON and library calls.

std::vector<Subcommand> make_table() {
  std::vector<Subcommand> t;

  t.push_back({"hc-volume", "Harish-Chandra volumes of U(n), its torus and flag manifold",
               [](CLI::App& a, Options& o) {
                 a.add_option("--n", o.n, "group rank")->required()->check(CLI::PositiveNumber);
               },
               [](Context& c) {
                 emit(c, json{{"n", c.opt.n},
                              {"flag", io::to_json(hc_flag_volume_un(c.opt.n))},
                              {"torus", io::to_json(vol_torus(c.opt.n))},
                              {"group", io::to_json(vol_un(c.opt.n))}});
               }});

  t.push_back({"tensor-volume", "volumes of U(m)(x)U(n), its torus and flag manifold", add_m_n,
               [](Context& c) {
                 const int m = c.opt.m, n = c.opt.n;
                 json j = io::to_json(vol_tensor_group(m, n));
                 j["flag"] = io::to_json(vol_tensor_flag(m, n));
                 j["torus"] = io::to_json(vol_tensor_torus(m, n));
                 emit(c, j);
               }});

  t.push_back({"symp-orbit", "symplectic volume of a U(n) adjoint orbit",
               [](CLI::App& a, Options& o) {
                 a.add_option("--spectrum", o.spectrum, "comma-separated eigenvalues")
                     ->required()
                     ->delimiter(',');
               },
               [](Context& c) { emit(c, io::to_json(symp_volume_un_orbit(c.opt.spectrum))); }});

  t.push_back({"lu-orbit", "symplectic volume of a local unitary orbit",
               [](CLI::App& a, Options& o) {
                 add_m_n(a, o);
                 a.add_option("--grid", o.grid, "row-major eigenvalue grid")
                     ->required()
                     ->delimiter(',');
               },
               [](Context& c) {
                 emit(c, io::to_json(symp_volume_lu_orbit(EigGrid(c.opt.m, c.opt.n, c.opt.grid))));
               }});

  t.push_back({"lu-volume", "HS volume of the locally diagonalizable states",
               [](CLI::App& a, Options& o) {
                 add_m_n(a, o);
                 auto* exact = a.add_flag("--exact", o.exact, "exact rational x pi^k");
                 auto* mc = a.add_flag("--mc", o.mc, "Monte Carlo estimate");
                 exact->excludes(mc);
                 a.add_option("--samples", o.samples, "Monte Carlo samples");
                 add_seed(a, o);
                 a.add_option("--max-vars", o.max_vars, "expansion limit on m*n");
                 a.add_option("--threads", o.threads, "worker threads (0: auto)");
               },
               [](Context& c) {
                 const auto& o = c.opt;
                 if (o.exact == o.mc) throw InputError("give exactly one of --exact and --mc");
                 if (o.exact) {
                   emit(c, io::to_json(lu_set_volume_exact(o.m, o.n, {o.max_vars})));
                   return;
                 }
                 const auto seed = require_seed(o);
                 if (o.samples <= 0) throw InputError("--samples is required with --mc");
                 emit(c, io::to_json(lu_set_volume_mc(o.m, o.n, o.samples, seed, {o.threads})));
               }});

  t.push_back({"density", "unnormalized eigenvalue density of a locally diagonal state",
               [](CLI::App& a, Options& o) {
                 add_m_n(a, o);
                 a.add_option("--grid", o.grid, "row-major eigenvalue grid")
                     ->required()
                     ->delimiter(',');
               },
               [](Context& c) {
                 emit(c, json{{"value", density_unnormalized(EigGrid(c.opt.m, c.opt.n, c.opt.grid))}});
               }});

  t.push_back({"lu-invariants", "the twelve two-qubit local unitary invariants", add_input,
               [](Context& c) {
                 const auto rho = io::density_from_json(read_input(c));
                 emit(c, json{{"invariants", lu_invariants(rho)}});
               }});

  t.push_back({"lu-equivalent", "local unitary equivalence of two two-qubit states",
               [](CLI::App& a, Options& o) {
                 add_input(a, o);
                 a.add_option("--tol", o.tol, "relative tolerance");
               },
               [](Context& c) {
                 const json input = read_input(c);
                 if (!input.is_object() || !input.contains("a") || !input.contains("b")) {
                   throw InputError("lu-equivalent expects {\"a\": state, \"b\": state}");
                 }
                 const auto a = io::density_from_json(input["a"]);
                 const auto b = io::density_from_json(input["b"]);
                 emit(c, json{{"lu_equivalent", lu_equivalent(a, b, c.opt.tol)}});
               }});

  t.push_back({"is-locally-diag", "decide local diagonalizability of a two-qubit state",
               [](CLI::App& a, Options& o) {
                 add_input(a, o);
                 a.add_option("--tol", o.tol, "relative tolerance");
               },
               [](Context& c) {
                 const auto rho = io::density_from_json(read_input(c));
                 emit(c, io::to_json(is_locally_diagonalizable(rho, c.opt.tol)));
               }});

  t.push_back({"xstate-eigs", "closed-form eigenvalues of a two-qubit X state", add_input,
               [](Context& c) {
                 const auto x = XState::from_matrix(io::matrix_from_json(read_input(c)));
                 emit(c, json{{"eigenvalues", xstate_eigenvalues(x)}});
               }});

  t.push_back({"bravyi", "two-qubit marginal spectrum inequalities",
               [](CLI::App& a, Options& o) {
                 add_input(a, o);
                 a.add_option("--spectrum", o.spectrum, "descending 4-spectrum")->delimiter(',');
                 a.add_option("--lambda-a", o.lambda_a, "minimal eigenvalue of rho_A");
                 a.add_option("--lambda-b", o.lambda_b, "minimal eigenvalue of rho_B");
               },
               [](Context& c) {
                 const auto& o = c.opt;
                 std::vector<double> spec = o.spectrum;
                 double la = 0.0, lb = 0.0;
                 if (!spec.empty()) {
                   if (!o.lambda_a || !o.lambda_b) {
                     throw InputError("--spectrum needs --lambda-a and --lambda-b");
                   }
                   la = *o.lambda_a;
                   lb = *o.lambda_b;
                 } else {
                   const auto rho = io::density_from_json(read_input(c));
                   spec = spectrum(rho);
                   const auto minima = marginal_min_eigenvalues(rho);
                   la = minima.lambda_a;
                   lb = minima.lambda_b;
                 }
                 emit(c, json{{"pass", bravyi_check(spec, la, lb)},
                              {"spectrum", spec},
                              {"lambda_a", la},
                              {"lambda_b", lb}});
               }});

  t.push_back({"weyl", "discrete Weyl (clock-and-shift) unitary basis",
               [](CLI::App& a, Options& o) {
                 a.add_option("--d", o.d, "dimension")->required()->check(CLI::PositiveNumber);
               },
               [](Context& c) {
                 const auto basis = weyl_basis(c.opt.d);
                 json list = json::array();
                 for (int a = 0; a < basis.d; ++a) {
                   for (int b = 0; b < basis.d; ++b) {
                     json w = io::to_json(basis(a, b));
                     w["a"] = a;
                     w["b"] = b;
                     list.push_back(std::move(w));
                   }
                 }
                 emit(c, json{{"d", basis.d}, {"unitaries", list}});
               }});

  t.push_back({"mix-marginals", "global unitary making both marginals maximally mixed",
               add_input,
               [](Context& c) {
                 const auto rho = io::density_from_json(read_input(c));
                 const auto mixed = mix_marginals(rho);
                 emit(c, json{{"state", io::to_json(mixed.state)},
                              {"v", io::to_json(mixed.v)},
                              {"mutual_information", mutual_information(mixed.state)}});
               }});

  t.push_back({"haar", "Haar-random unitaries as JSON lines",
               [](CLI::App& a, Options& o) {
                 a.add_option("--n", o.n, "matrix size")->required()->check(CLI::PositiveNumber);
                 a.add_option("--samples", o.samples, "number of unitaries (default 1)");
                 add_seed(a, o);
               },
               [](Context& c) {
                 RngStream rng(require_seed(c.opt), 0);
                 const std::int64_t count = c.opt.samples > 0 ? c.opt.samples : 1;
                 for (std::int64_t k = 0; k < count; ++k) emit(c, io::to_json(haar_unitary(c.opt.n, rng)));
               }});

  t.push_back({"dims", "dimension of the locally diagonalizable set", add_m_n,
               [](Context& c) { emit(c, json{{"dim_dlu", dim_dlu(c.opt.m, c.opt.n)}}); }});

  return t;
}

const std::vector<Subcommand>& table() {
  static const std::vector<Subcommand> t = make_table();
  return t;
}

void print_usage(std::ostream& err) {
  err << "usage: orbitvol <subcommand> [flags]\n\nsubcommands:\n";
  for (const auto& s : table()) err << "  " << s.name << "  " << s.description << '\n';
  err << "\nrun 'orbitvol <subcommand> --help' for the flags of one subcommand\n";
}

void emit_error(std::ostream& out, const std::string& message) {
  out << json{{"error", message}}.dump() << '\n';
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : table()) out.push_back(s.name);
    return out;
  }();
  return names;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  if (args.empty()) {
    print_usage(err);
    return kExitUsage;
  }
  const auto it = std::find_if(table().begin(), table().end(),
                               [&](const Subcommand& s) { return s.name == args.front(); });
  if (it == table().end()) {
    if (args.front() == "--help" || args.front() == "-h") {
      print_usage(err);
      return kExitOk;
    }
    err << "unknown subcommand '" << args.front() << "'\n\n";
    print_usage(err);
    return kExitUsage;
  }

  Context ctx;
  ctx.in = &in;
  ctx.out = &out;
  CLI::App app(it->description, "orbitvol " + it->name);
  it->flags(app, ctx.opt);

  // CLI11 parses argv in reverse order from a vector.
  std::vector<std::string> rest(args.rbegin(), std::prev(args.rend()));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, e.what());
    return kExitValidation;
  }

  try {
    it->handler(ctx);
  } catch (const InputError& e) {
    emit_error(out, e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    emit_error(out, std::string("internal error: ") + e.what());
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace orbitvol::cli
