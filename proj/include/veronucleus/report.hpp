#ifndef VERONUCLEUS_REPORT_HPP
#define VERONUCLEUS_REPORT_HPP

// JSON, DOT and text renderings of the computations. Every output is a pure
// function of its inputs; orderings are fixed so repeated runs are
// byte-identical.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "base_p.hpp"
#include "gf.hpp"
#include "invariant_lattice.hpp"
#include "linalg.hpp"
#include "nrc.hpp"
#include "veronese.hpp"

namespace veronucleus {

using nlohmann::json;

inline constexpr const char* kSchemaPrefix = "veronucleus";

inline json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json to_json(const FieldSpec& f) {
  return {{"descriptor", f.name()}, {"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus()}};
}

inline json to_json(const FieldElement& a) {
  return {{"field", a.field().name()}, {"coefficients", a.coefficients()}};
}

inline json to_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.rank(); ++r) {
    json row = json::array();
    for (auto v : s.basis().row(r)) row.push_back(s.field().coefficients(v));
    rows.push_back(std::move(row));
  }
  return {{"ambient_dim", s.ambient_dim()},
          {"field", s.field().name()},
          {"basis", std::move(rows)},
          {"projective_dim", s.projective_dim()}};
}

// ---------------------------------------------------------------------------
// Pascal's triangle

struct PascalRowStats {
  std::uint64_t n;
  std::uint64_t zeros;  // counted directly
  std::vector<BigInt> phi;    // phi[i-1] = Φ(i, n)
  std::vector<BigInt> sigma;  // sigma[i-1] = Σ(i, n)
};

inline std::vector<PascalRowStats> pascal_stats(std::size_t rows, std::uint32_t p) {
  std::vector<PascalRowStats> out;
  for (std::uint64_t n = 0; n < rows; ++n) {
    PascalRowStats st{n, 0, {}, {}};
    for (std::uint64_t j = 0; j <= n; ++j) st.zeros += binom_mod_p(n, j, p) == 0;
    const std::size_t len = std::max<std::size_t>(Digits(n, p).size(), 1);
    for (std::size_t i = 1; i <= len; ++i) {
      st.phi.push_back(phi(i, n, p));
      st.sigma.push_back(sigma(i, n, p));
    }
    out.push_back(std::move(st));
  }
  return out;
}

inline json pascal_json(std::size_t rows, std::uint32_t p) {
  json out{{"schema", std::string(kSchemaPrefix) + "/pascal/v1"}, {"p", p}, {"rows", json::array()}};
  for (const auto& st : pascal_stats(rows, p)) {
    json classes = json::array();
    for (std::size_t i = 0; i < st.phi.size(); ++i)
      classes.push_back({{"class", i + 1}, {"phi", big_to_json(st.phi[i])}, {"sigma", big_to_json(st.sigma[i])}});
    json entries = json::array();
    for (std::uint64_t j = 0; j <= st.n; ++j) entries.push_back(binom_mod_p(st.n, j, p));
    out["rows"].push_back({{"n", st.n},
                           {"digits", Digits(st.n, p).to_string()},
                           {"entries", std::move(entries)},
                           {"zero_entries", st.zeros},
                           {"classes", std::move(classes)}});
  }
  return out;
}

inline std::string pascal_table(std::size_t rows, std::uint32_t p) {
  std::ostringstream os;
  os << "row  digits       zeros  Φ(1..)  Σ(1..)\n";
  for (const auto& st : pascal_stats(rows, p)) {
    os << st.n << "  " << Digits(st.n, p).to_string() << "  " << st.zeros << " ";
    for (const auto& v : st.phi) os << ' ' << v;
    os << " |";
    for (const auto& v : st.sigma) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Nuclei of a normal rational curve

struct NucleusRow {
  long k;
  NucleusDimension formula;
  IndexSet basis;
  std::optional<long> dim_bruteforce;
  /// Brute-force subspace equals the span of the formula's base points.
  std::optional<bool> basis_matches;
  bool in_hypothesis;
};

inline std::vector<NucleusRow> nuclei_rows(const NrcSpec& s, bool bruteforce) {
  std::vector<NucleusRow> out;
  for (long k = -1; k <= static_cast<long>(s.n()) - 1; ++k) {
    NucleusRow row{k, nucleus_dim_formula(s, k), nucleus_basis_formula(s, k).indices, std::nullopt, std::nullopt,
                   s.formula_applies(k)};
    if (bruteforce) {
      const auto nuc = nucleus_bruteforce(s, k);
      row.dim_bruteforce = nuc.projective_dim();
      row.basis_matches = nuc == Subspace::coordinate(s.field(), s.n() + 1, row.basis.members());
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline json nuclei_json(const NrcSpec& s, const std::vector<NucleusRow>& rows) {
  json table = json::object();
  for (const auto& r : rows) {
    json entry{{"dim_formula", r.formula.dim},
               {"R", r.formula.R},
               {"basis_indices", r.basis.members()},
               {"in_hypothesis", r.in_hypothesis},
               {"dim_bruteforce", r.dim_bruteforce ? json(*r.dim_bruteforce) : json(nullptr)},
               {"basis_matches", r.basis_matches ? json(*r.basis_matches) : json(nullptr)}};
    table[std::to_string(r.k)] = std::move(entry);
  }
  const auto point = point_nucleus_predicate(s.n(), s.p());
  return {{"schema", std::string(kSchemaPrefix) + "/nuclei/v1"},
          {"n", s.n()},
          {"p", s.p()},
          {"field", to_json(s.field())},
          {"b", Digits(s.n() + 1, s.p()).to_string()},
          {"count_nuclei", count_nuclei(s.n(), s.p())},
          {"count_in_hypothesis", s.count_applies()},
          {"point_nucleus_index", point ? json(*point) : json(nullptr)},
          {"arc_regime", s.is_arc_regime()},
          {"k", std::move(table)}};
}

namespace detail {

inline std::string k_range(long lo, long hi) {
  if (lo == hi) return std::to_string(lo);
  if (hi == lo + 1) return std::to_string(lo) + "," + std::to_string(hi);
  return std::to_string(lo) + ".." + std::to_string(hi);
}

inline std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  auto visible = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0U) != 0x80U;
    return n;
  };
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], visible(r[c]));
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c != 0) line += " | ";
      line += r[c] + std::string(width[c] - visible(r[c]), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace detail

/// Table with consecutive k collapsed into one column while all reported
/// values coincide.
inline std::string nuclei_table(const NrcSpec& s, const std::vector<NucleusRow>& rows) {
  std::vector<std::string> ks{"k"}, formula{"dim (formula)"}, brute{"dim (brute force)"};
  std::size_t start = 0;
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    const bool split = i == rows.size() || rows[i].formula.dim != rows[start].formula.dim ||
                       rows[i].dim_bruteforce != rows[start].dim_bruteforce;
    if (!split) continue;
    ks.push_back(detail::k_range(rows[start].k, rows[i - 1].k));
    formula.push_back(std::to_string(rows[start].formula.dim));
    brute.push_back(rows[start].dim_bruteforce ? std::to_string(*rows[start].dim_bruteforce) : "-");
    start = i;
  }
  std::ostringstream os;
  os << "n = " << s.n() << ", p = " << s.p() << ", field " << s.field().name() << ", n+1 = "
     << Digits(s.n() + 1, s.p()).to_string() << ", distinct nuclei: " << count_nuclei(s.n(), s.p()) << "\n";
  std::vector<std::vector<std::string>> table{ks, formula};
  if (!rows.empty() && rows.front().dim_bruteforce) table.push_back(brute);
  os << detail::render_columns(table);
  return os.str();
}

// ---------------------------------------------------------------------------
// Invariant-subspace lattice

inline json lattice_json(const Lattice& lat) {
  json nodes = json::array();
  for (const auto& node : lat.nodes) {
    json ds = json::array();
    for (const auto& d : node.descriptors) {
      json ivs = json::array();
      for (const auto& iv : d.intervals)
        if (iv) ivs.push_back({iv->low, iv->high});
      ds.push_back({{"i", d.i}, {"intervals", std::move(ivs)}, {"label", d.label()}});
    }
    nodes.push_back({{"indices", node.indices.members()},
                     {"irreducible", node.irreducible},
                     {"nucleus", node.nucleus},
                     {"descriptors", std::move(ds)}});
  }
  json edges = json::array();
  for (const auto& [lo, hi] : lat.cover_edges) edges.push_back({lo, hi});
  return {{"schema", std::string(kSchemaPrefix) + "/lattice/v1"},
          {"n", lat.n},
          {"p", lat.p},
          {"b", Digits(lat.n + 1, lat.p).to_string()},
          {"nodes", std::move(nodes)},
          {"cover_edges", std::move(edges)},
          {"is_chain", is_totally_ordered(lat)},
          {"chain_criterion", is_chain_criterion(lat.n, lat.p)}};
}

/// Hasse diagram, bottom to top. Filled nodes are irreducible, double circles
/// are nuclei.
inline std::string lattice_dot(const Lattice& lat) {
  std::ostringstream os;
  os << "digraph lattice_n" << lat.n << "_p" << lat.p << " {\n"
     << "  rankdir=BT;\n"
     << "  node [label=\"\", width=0.2, height=0.2, fixedsize=true];\n"
     << "  edge [arrowhead=none];\n";
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const auto& node = lat.nodes[i];
    os << "  v" << i << " [shape=" << (node.nucleus ? "doublecircle" : "circle");
    if (node.irreducible) os << ", style=filled, fillcolor=black";
    os << ", tooltip=\"" << node.indices.to_string() << "\"";
    if (!node.descriptors.empty()) os << ", xlabel=\"" << node.descriptors.front().label() << "\"";
    os << "];\n";
  }
  for (const auto& [lo, hi] : lat.cover_edges) os << "  v" << lo << " -> v" << hi << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string lattice_table(const Lattice& lat) {
  std::vector<std::vector<std::string>> rows{{"node", "size", "irreducible", "nucleus", "label", "indices"}};
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const auto& node = lat.nodes[i];
    rows.push_back({std::to_string(i), std::to_string(node.indices.size()), node.irreducible ? "yes" : "no",
                    node.nucleus ? "yes" : "no", node.descriptors.empty() ? "" : node.descriptors.front().label(),
                    node.indices.to_string()});
  }
  std::ostringstream os;
  os << "n = " << lat.n << ", p = " << lat.p << ", n+1 = " << Digits(lat.n + 1, lat.p).to_string() << ", "
     << lat.nodes.size() << " invariant subspaces, chain: " << (is_totally_ordered(lat) ? "yes" : "no") << "\n"
     << detail::render_columns(rows);
  return os.str();
}

// ---------------------------------------------------------------------------
// Veronese hyperplane nucleus

struct VeroneseReport {
  BigInt dim_formula;
  long dim_bruteforce;
  std::vector<Exponents> basis;
  bool basis_contained;  // every formula base point lies in the brute-force nucleus
  bool basis_spans;      // and spans it
  bool in_hypothesis;
  Subspace nucleus;
};

inline VeroneseReport veronese_report(const VeroneseSpec& s) {
  auto nucleus = hyperplane_nucleus_bruteforce(s);
  const auto idx = hyperplane_nucleus_basis_indices(s);
  const auto span = Subspace::coordinate(s.field(), s.ambient_dim(), idx);
  return {hyperplane_nucleus_dim(s),
          nucleus.projective_dim(),
          hyperplane_nucleus_basis(s),
          subspace_leq(span, nucleus),
          span == nucleus,
          s.in_hypothesis(),
          std::move(nucleus)};
}

inline json veronese_json(const VeroneseSpec& s, const VeroneseReport& r) {
  return {{"schema", std::string(kSchemaPrefix) + "/veronese/v1"},
          {"m", s.m()},
          {"t", s.t()},
          {"field", to_json(s.field())},
          {"ambient_dim", s.ambient_dim()},
          {"nucleus",
           {{"dim_formula", big_to_json(r.dim_formula)},
            {"dim_bruteforce", r.dim_bruteforce},
            {"basis_tuples", r.basis},
            {"basis_contained", r.basis_contained},
            {"basis_spans", r.basis_spans},
            {"in_hypothesis", r.in_hypothesis},
            {"subspace", to_json(r.nucleus)}}}};
}

inline std::string veronese_table(const VeroneseSpec& s, const VeroneseReport& r) {
  std::ostringstream os;
  os << "V_" << s.m() << "^" << s.t() << " over " << s.field().name() << " (ambient dim " << s.ambient_dim()
     << ")\n";
  std::vector<std::vector<std::string>> rows{
      {"dim (formula)", r.dim_formula.str() + (r.in_hypothesis ? "" : " (q < t: out of hypothesis)")},
      {"dim (brute force)", std::to_string(r.dim_bruteforce)},
      {"base points contained", r.basis_contained ? "yes" : "no"},
      {"base points span", r.basis_spans ? "yes" : "no"}};
  std::string tuples;
  for (const auto& e : r.basis) {
    if (!tuples.empty()) tuples += ' ';
    tuples += '(';
    for (std::size_t i = 0; i < e.size(); ++i) tuples += (i ? "," : "") + std::to_string(e[i]);
    tuples += ')';
  }
  rows.push_back({"vanishing tuples", tuples.empty() ? "none" : tuples});
  os << detail::render_columns(rows);
  return os.str();
}

}  // namespace veronucleus

#endif  // VERONUCLEUS_REPORT_HPP
