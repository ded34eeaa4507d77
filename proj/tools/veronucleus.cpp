// Command-line front end: Pascal's triangle mod p, nuclei of normal rational
// curves, invariant-subspace lattices, Veronese hyperplane nuclei, and the
// formula-versus-oracle verification suites.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include <veronucleus/report.hpp>
#include <veronucleus/verify.hpp>
#include <veronucleus/veronucleus.hpp>

namespace vn = veronucleus;

namespace {

std::uint64_t field_cap() {
  if (const char* env = std::getenv("VERONUCLEUS_FIELD_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("VERONUCLEUS_FIELD_CAP", "not an integer: " + std::string(env));
    }
  }
  return vn::kDefaultFieldCap;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

std::string dump(const vn::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nuclei and invariant subspaces of Veronese varieties over finite fields"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write to this file instead of stdout");

  // pascal
  auto* pascal = app.add_subcommand("pascal", "Pascal's triangle mod p with zero-class statistics");
  std::size_t rows = 16;
  std::uint32_t pascal_p = 2;
  std::string pascal_format = "ascii";
  pascal->add_option("--rows", rows, "Number of rows")->required()->check(CLI::PositiveNumber);
  pascal->add_option("--p", pascal_p, "Prime")->required();
  pascal->add_option("--format", pascal_format)->check(CLI::IsMember({"ascii", "json", "table"}));

  // nuclei
  auto* nuclei = app.add_subcommand("nuclei", "k-nuclei of the normal rational curve of degree n");
  std::size_t nuc_n = 0;
  std::uint32_t nuc_p = 2;
  std::optional<std::uint32_t> nuc_e;
  std::string nuc_format = "table";
  bool no_bruteforce = false;
  nuclei->add_option("--n", nuc_n, "Degree (ambient projective dimension)")->required();
  nuclei->add_option("--p", nuc_p, "Characteristic")->required();
  nuclei->add_option("--e", nuc_e, "Extension degree; default: smallest with p^e >= n + 2");
  nuclei->add_option("--format", nuc_format)->check(CLI::IsMember({"json", "table"}));
  nuclei->add_flag("--no-bruteforce", no_bruteforce, "Only evaluate the closed forms");

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Lattice of invariant subspaces of the degree-n curve");
  std::size_t lat_n = 0;
  std::uint32_t lat_p = 2;
  std::string lat_format = "json";
  lattice->add_option("--n", lat_n, "Degree")->required();
  lattice->add_option("--p", lat_p, "Characteristic")->required();
  lattice->add_option("--format", lat_format)->check(CLI::IsMember({"json", "dot", "table"}));

  // veronese
  auto* veronese = app.add_subcommand("veronese", "Intersection of the osculating hyperplanes of V_m^t");
  std::size_t ver_m = 2;
  std::uint64_t ver_t = 2;
  std::uint32_t ver_p = 2;
  std::uint32_t ver_e = 1;
  std::string ver_format = "table";
  veronese->add_option("--m", ver_m)->required();
  veronese->add_option("--t", ver_t)->required();
  veronese->add_option("--p", ver_p)->required();
  veronese->add_option("--e", ver_e)->required();
  veronese->add_option("--format", ver_format)->check(CLI::IsMember({"json", "table"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run the formula-versus-oracle suites");
  vn::VerifyOptions vopt;
  std::vector<std::string> only;
  std::string fault;
  verify->add_option("--only", only, "Suites to run")->check(CLI::IsMember({"base_p", "nrc", "lattice", "veronese"}));
  verify->add_option("--n-max", vopt.nrc_n_max, "Largest curve degree for the nucleus grid");
  verify->add_option("--closure-n-max", vopt.closure_n_max, "Largest n for the subset-closure oracle");
  verify->add_option("--invariance-n-max", vopt.invariance_n_max, "Largest n for the collineation oracle");
  verify->add_option("--chain-n-max", vopt.chain_n_max, "Largest n for the chain criterion");
  verify->add_option("--pascal-rows", vopt.pascal_rows, "Rows of Pascal's triangle to scan");
  verify->add_option("--inject-fault", fault, "Perturb one formula in this suite (harness self-test)")
      ->check(CLI::IsMember({"base_p", "nrc", "lattice", "veronese"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*pascal) {
      vn::require_prime(pascal_p);
      if (pascal_format == "ascii")
        emit(vn::render_triangle(rows, pascal_p), output);
      else if (pascal_format == "json")
        emit(dump(vn::pascal_json(rows, pascal_p)), output);
      else
        emit(vn::pascal_table(rows, pascal_p), output);
      return 0;
    }
    if (*nuclei) {
      const auto e = nuc_e.value_or(vn::minimal_degree(nuc_p, nuc_n + 2));
      const vn::NrcSpec spec(nuc_n, vn::make_field(nuc_p, e, field_cap()));
      const auto table = vn::nuclei_rows(spec, !no_bruteforce);
      emit(nuc_format == "json" ? dump(vn::nuclei_json(spec, table)) : vn::nuclei_table(spec, table), output);
      for (const auto& r : table)
        if (r.in_hypothesis && r.dim_bruteforce && (*r.dim_bruteforce != r.formula.dim || !*r.basis_matches)) return 1;
      return 0;
    }
    if (*lattice) {
      const auto lat = vn::build_lattice(lat_n, lat_p);
      if (lat_format == "json")
        emit(dump(vn::lattice_json(lat)), output);
      else if (lat_format == "dot")
        emit(vn::lattice_dot(lat), output);
      else
        emit(vn::lattice_table(lat), output);
      return 0;
    }
    if (*veronese) {
      const vn::VeroneseSpec spec(ver_m, ver_t, vn::make_field(ver_p, ver_e, field_cap()));
      const auto r = vn::veronese_report(spec);
      emit(ver_format == "json" ? dump(vn::veronese_json(spec, r)) : vn::veronese_table(spec, r), output);
      return 0;
    }
    if (*verify) {
      vopt.only.insert(only.begin(), only.end());
      if (!fault.empty()) vopt.inject_fault = fault;
      const auto rep = vn::run_verification(vopt);
      emit(dump(rep.to_json()), output);
      for (const auto& f : rep.failures())
        std::cerr << "mismatch [" << f.suite << "/" << f.check << "] " << f.instance << ": expected " << f.expected
                  << ", got " << f.actual << "\n";
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
