#include "relinv/cli.hpp"

#include "relinv/expr_parser.hpp"
#include "relinv/hilbert.hpp"
#include "relinv/oracle.hpp"
#include "relinv/reynolds.hpp"
#include "relinv/spec_file.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <ostream>

namespace relinv::cli {

namespace {

// Raised for input problems that map to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LoadedSpec load_validated(const std::string& path, std::ostream& err, bool& valid) {
  LoadedSpec spec = load_spec(path);
  const ValidationReport report = validate_spec(spec.group, spec.h_basis, spec.basis_names);
  valid = report.ok();
  if (!valid) err << report.to_string();
  return spec;
}

Poly parse_user_expr(const std::string& src, const LoadedSpec& spec) {
  try {
    return parse_poly(src, spec.group.table);
  } catch (const ParseError& e) {
    throw UsageError(std::string("expression: ") + e.what());
  }
}

GeneratorSet build_generators(const LoadedSpec& spec, const std::string& method, std::string& used) {
  used = method == "auto" ? (spec.group.m == 2 ? "main1" : "main2") : method;
  if (used == "main1") {
    if (spec.group.m != 2) {
      throw UsageError("method main1 needs m = 2 but the spec has m = " + std::to_string(spec.group.m) +
                       "; use --method main2");
    }
    return main1_generators(spec.group, spec.h_basis, spec.basis_names);
  }
  return main2_generators(spec.group, spec.h_basis, spec.basis_names);
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const LoadedSpec spec = load_spec(path);
  const ValidationReport report = validate_spec(spec.group, spec.h_basis, spec.basis_names);
  out << report.to_string();
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_reynolds(const std::string& path, long j, const std::string& expr, std::ostream& out,
                 std::ostream& err) {
  bool valid = false;
  const LoadedSpec spec = load_validated(path, err, valid);
  if (!valid) return kExitFailure;
  if (j < 0 || j >= static_cast<long>(spec.group.m)) {
    throw UsageError("--j must satisfy 0 <= j < m = " + std::to_string(spec.group.m));
  }
  out << print_poly(reynolds(spec.group, j, parse_user_expr(expr, spec))) << '\n';
  return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& expr, std::ostream& out,
                  std::ostream& err) {
  bool valid = false;
  const LoadedSpec spec = load_validated(path, err, valid);
  if (!valid) return kExitFailure;
  const Decomposition d = decompose(spec.group, parse_user_expr(expr, spec));
  for (std::size_t j = 0; j < d.components.size(); ++j) {
    out << "j=" << j << ": " << print_poly(d.components[j]) << '\n';
  }
  return kExitOk;
}

int cmd_gamma_basis(const std::string& path, const std::string& method, std::ostream& out,
                    std::ostream& err) {
  bool valid = false;
  const LoadedSpec spec = load_validated(path, err, valid);
  if (!valid) return kExitFailure;
  std::string used;
  const GeneratorSet gens = build_generators(spec, method, used);
  out << "# method " << used << ", m = " << spec.group.m << ", " << gens.elements.size()
      << " generators\n";
  for (const auto& e : gens.elements) out << print_poly(e.poly) << "  # " << e.provenance << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& method, std::uint64_t degree,
               const std::vector<std::string>& drops, std::ostream& out, std::ostream& err) {
  bool valid = false;
  const LoadedSpec spec = load_validated(path, err, valid);
  if (!valid) return kExitFailure;
  std::string used;
  GeneratorSet gens = build_generators(spec, method, used);
  for (const auto& name : drops) {
    auto it = std::find_if(gens.elements.begin(), gens.elements.end(), [&](const auto& e) {
      return print_poly(e.poly) == name || e.provenance == name;
    });
    if (it == gens.elements.end()) throw UsageError("--drop: no generator named '" + name + "'");
    gens.elements.erase(it);
  }

  const CertReport report = certify(spec.group, gens.polys(), degree);
  out << "# method " << used << ", " << gens.elements.size() << " generators, degree <= " << degree
      << '\n';
  out << "degree  oracle  span  status\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(8) << row.degree << std::setw(8) << row.dim_oracle << std::setw(6)
        << row.dim_span << (row.equal ? "ok" : "MISMATCH") << '\n';
  }
  if (report.pass()) {
    out << "PASS through degree " << degree << '\n';
    return kExitOk;
  }
  out << "FAIL at degree " << *report.first_failure << '\n';
  if (report.witness) {
    out << (report.witness_outside_oracle ? "non-invariant product: " : "witness: ")
        << print_poly(*report.witness) << '\n';
  }
  return kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Reynolds operators and invariant-ring generators for finite-index subgroups",
               "relinv"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string expr;
  std::string method = "auto";
  long j = 0;
  std::uint64_t degree = 6;
  std::vector<std::string> drops;

  auto* validate = app.add_subcommand("validate", "Check the group spec and H-basis");
  validate->add_option("spec", spec_path, "Spec file (JSON)")->required();

  auto* reyn = app.add_subcommand("reynolds", "Apply the relative Reynolds operator R_j");
  reyn->add_option("spec", spec_path, "Spec file (JSON)")->required();
  reyn->add_option("--j", j, "Index 0 <= j < m")->required();
  reyn->add_option("expr", expr, "Polynomial expression")->required();

  auto* decomp = app.add_subcommand("decompose", "Split a polynomial into its m relative-invariant parts");
  decomp->add_option("spec", spec_path, "Spec file (JSON)")->required();
  decomp->add_option("expr", expr, "Polynomial expression")->required();

  const std::vector<std::string> methods{"auto", "main1", "main2"};
  auto* basis = app.add_subcommand("gamma-basis", "Generators of the Gamma-invariant ring");
  basis->add_option("spec", spec_path, "Spec file (JSON)")->required();
  basis->add_option("--method", method, "auto | main1 | main2")->check(CLI::IsMember(methods));

  auto* verify = app.add_subcommand("verify", "Certify the generators against brute-force invariants");
  verify->add_option("spec", spec_path, "Spec file (JSON)")->required();
  verify->add_option("--degree", degree, "Degree bound")->capture_default_str();
  verify->add_option("--drop", drops, "Remove a generator (printed form or provenance label)");
  verify->add_option("--method", method, "auto | main1 | main2")->check(CLI::IsMember(methods));

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("relinv");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(spec_path, out);
    if (*reyn) return cmd_reynolds(spec_path, j, expr, out, err);
    if (*decomp) return cmd_decompose(spec_path, expr, out, err);
    if (*basis) return cmd_gamma_basis(spec_path, method, out, err);
    if (*verify) return cmd_verify(spec_path, method, degree, drops, out, err);
  } catch (const SpecError& e) {
    err << spec_path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace relinv::cli
