#ifndef VERONUCLEUS_VERIFY_HPP
#define VERONUCLEUS_VERIFY_HPP

// Formula-versus-oracle suites. Each suite compares a closed form with an
// independent computation (recurrence, enumeration, brute-force geometry)
// over a bounded grid and records every comparison.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "base_p.hpp"
#include "invariant_lattice.hpp"
#include "nrc.hpp"
#include "report.hpp"
#include "veronese.hpp"

namespace veronucleus {

struct VerifyOptions {
  /// Suites to run; empty means all of base_p, nrc, lattice, veronese.
  std::set<std::string> only;
  std::size_t pascal_rows = 512;
  std::size_t multinomial_t_max = 30;
  std::size_t nrc_n_max = 10;
  std::size_t closure_n_max = 16;
  std::size_t invariance_n_max = 8;
  std::size_t chain_n_max = 40;
  std::size_t veronese_t_max = 4;
  std::size_t timmermann_t_max = 64;
  /// Test hook: perturbs one formula value in the named suite so the harness
  /// can be shown to fail.
  std::optional<std::string> inject_fault;
};

struct Comparison {
  std::string suite;
  std::string check;
  std::string instance;
  std::string expected;
  std::string actual;
  bool pass;
};

class VerifyReport {
 public:
  void record(std::string suite, std::string check, std::string instance, const std::string& expected,
              const std::string& actual) {
    const bool pass = expected == actual;
    if (pass) {
      ++passed_[suite];
    } else {
      failures_.push_back({suite, std::move(check), std::move(instance), expected, actual, false});
    }
    ++total_[std::move(suite)];
  }

  [[nodiscard]] bool ok() const noexcept { return failures_.empty(); }
  [[nodiscard]] const std::vector<Comparison>& failures() const noexcept { return failures_; }

  [[nodiscard]] nlohmann::json to_json() const {
    nlohmann::json suites = nlohmann::json::object();
    for (const auto& [name, total] : total_) {
      const auto it = passed_.find(name);
      suites[name] = {{"comparisons", total}, {"passed", it == passed_.end() ? 0 : it->second}};
    }
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures_)
      fails.push_back({{"suite", f.suite},
                       {"check", f.check},
                       {"instance", f.instance},
                       {"expected", f.expected},
                       {"actual", f.actual}});
    return {{"schema", std::string(kSchemaPrefix) + "/verify/v1"},
            {"ok", ok()},
            {"suites", std::move(suites)},
            {"failures", std::move(fails)}};
  }

 private:
  std::map<std::string, std::size_t> total_;
  std::map<std::string, std::size_t> passed_;
  std::vector<Comparison> failures_;
};

namespace detail {

inline std::string str(const BigInt& v) { return v.str(); }
inline std::string str(long v) { return std::to_string(v); }
inline std::string str(std::uint64_t v) { return std::to_string(v); }
inline std::string str(bool v) { return v ? "true" : "false"; }

inline bool suite_enabled(const VerifyOptions& o, const std::string& s) { return o.only.empty() || o.only.contains(s); }
inline long fault(const VerifyOptions& o, const std::string& s) { return o.inject_fault == s ? 1 : 0; }

inline void verify_base_p(const VerifyOptions& o, VerifyReport& rep) {
  const std::string suite = "base_p";
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    std::vector<std::uint32_t> row{1};
    for (std::uint64_t n = 0; n < o.pascal_rows; ++n) {
      std::uint64_t zeros = 0;
      std::vector<std::size_t> per_class(70, 0);
      for (std::uint64_t j = 0; j <= n; ++j) {
        const auto lucas = binom_mod_p(n, j, p);
        if (lucas != row[j])
          rep.record(suite, "lucas", "n=" + str(n) + ",j=" + str(j) + ",p=" + str(std::uint64_t{p}),
                     std::to_string(row[j]), std::to_string(lucas));
        if (row[j] == 0) {
          ++zeros;
          const auto cls = zero_class(n, j, p);
          if (!cls) {
            rep.record(suite, "zero_class", "n=" + str(n) + ",j=" + str(j), "class", "absent");
            continue;
          }
          ++per_class[cls->class_index];
          // The zero triangle reaches up to row T(i, n+1) and no further.
          const auto top = top_line(cls->class_index, n + 1, p);
          bool chain = top <= n && (top == 0 || binom_mod_p(top - 1, j, p) != 0);
          for (std::uint64_t r = top; r <= n && chain; ++r) chain = binom_mod_p(r, j, p) == 0;
          if (!chain)
            rep.record(suite, "top_line", "n=" + str(n) + ",j=" + str(j) + ",p=" + str(std::uint64_t{p}), "true",
                       "false");
        }
      }
      if (n % 8 == 0 || n + 1 == o.pascal_rows) {
        const std::size_t len = Digits(n, p).size();
        BigInt total = 0;
        for (std::size_t i = len + 1; i-- > 1;) {
          const auto ph = phi(i, n, p);
          total += ph;
          rep.record(suite, "phi", "i=" + str(std::uint64_t{i}) + ",n=" + str(n) + ",p=" + str(std::uint64_t{p}),
                     str(std::uint64_t{per_class[i]}), str(ph));
          rep.record(suite, "sigma", "i=" + str(std::uint64_t{i}) + ",n=" + str(n) + ",p=" + str(std::uint64_t{p}),
                     str(total), str(sigma(i, n, p) + fault(o, suite)));
        }
        rep.record(suite, "fine", "n=" + str(n) + ",p=" + str(std::uint64_t{p}), str(zeros),
                   str(len == 0 ? BigInt(0) : sigma(1, n, p)));
      }
      std::vector<std::uint32_t> next(row.size() + 1, 0);
      next.front() = next.back() = 1;
      for (std::size_t j = 1; j < row.size(); ++j) next[j] = (row[j - 1] + row[j]) % p;
      row = std::move(next);
    }
  }
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::uint64_t t = 0; t <= o.multinomial_t_max; ++t) {
        std::uint64_t direct = 0;
        for (const auto& e : exponent_tuples(m, t)) {
          // Exact multinomial by successive binomials.
          BigInt c = 1;
          std::uint64_t left = t;
          for (auto x : e) {
            c *= binomial(left, x);
            left -= x;
          }
          direct += (c % p) == 0;
        }
        rep.record(suite, "howard_volodin",
                   "m=" + str(std::uint64_t{m}) + ",t=" + str(t) + ",p=" + str(std::uint64_t{p}), str(direct),
                   str(count_vanishing_multinomials(m, t, p)));
      }
}

inline void verify_nrc(const VerifyOptions& o, VerifyReport& rep) {
  const std::string suite = "nrc";
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t n = 2; n <= o.nrc_n_max; ++n) {
      const auto field = make_field(p, minimal_degree(p, n + 2));
      const NrcSpec spec(n, field);
      const std::string inst = "p=" + str(std::uint64_t{p}) + ",e=" + str(std::uint64_t{field.degree()}) +
                               ",n=" + str(std::uint64_t{n});
      std::vector<Subspace> nuclei;
      for (long k = -1; k <= static_cast<long>(n) - 1; ++k) {
        const auto nuc = nucleus_bruteforce(spec, k);
        const auto basis = nucleus_basis_formula(spec, k).indices;
        const auto dim = nucleus_dim_formula(spec, k).dim + fault(o, suite);
        rep.record(suite, "dimension", inst + ",k=" + str(k), str(nuc.projective_dim()), str(dim));
        rep.record(suite, "base_points", inst + ",k=" + str(k), "true",
                   str(nuc == Subspace::coordinate(field, n + 1, basis.members())));
        if (!nuclei.empty())
          rep.record(suite, "nested", inst + ",k=" + str(k), "true", str(subspace_leq(nuclei.back(), nuc)));
        nuclei.push_back(nuc);
      }
      std::size_t distinct = 0;
      for (std::size_t i = 0; i < nuclei.size(); ++i) distinct += i == 0 || !(nuclei[i] == nuclei[i - 1]);
      rep.record(suite, "count_nuclei", inst, str(std::uint64_t{distinct}),
                 str(std::uint64_t{count_nuclei(n, p)}));
      if (const auto pt = point_nucleus_predicate(n, p)) {
        const Subspace* smallest = nullptr;
        for (const auto& s : nuclei)
          if (!s.is_zero()) {
            smallest = &s;
            break;
          }
        const std::size_t idx = *pt;
        rep.record(suite, "point_nucleus", inst, "true",
                   str(smallest != nullptr && *smallest == Subspace::coordinate(field, n + 1, std::span(&idx, 1))));
      }
    }
}

inline void verify_lattice(const VerifyOptions& o, VerifyReport& rep) {
  const std::string suite = "lattice";
  for (std::uint32_t p : {2U, 3U})
    for (std::size_t n = 1; n <= o.closure_n_max; ++n) {
      auto lat = build_lattice(n, p);
      std::vector<IndexSet> nodes;
      for (const auto& node : lat.nodes) nodes.push_back(node.indices);
      if (o.inject_fault == suite && n == o.closure_n_max) nodes.pop_back();
      const auto brute = closure_bruteforce(n, p, o.closure_n_max);
      rep.record(suite, "closure_oracle", "n=" + str(std::uint64_t{n}) + ",p=" + str(std::uint64_t{p}), "true",
                 str(nodes == brute));
    }
  for (std::uint32_t p : {2U, 3U})
    for (std::size_t n = 2; n <= o.invariance_n_max; ++n) {
      const auto field = make_field(p, minimal_degree(p, n + 2));
      const auto lat = build_lattice(n, p);
      const std::string inst = "n=" + str(std::uint64_t{n}) + ",p=" + str(std::uint64_t{p});
      bool all_invariant = true;
      for (const auto& node : lat.nodes) all_invariant = all_invariant && invariance_oracle(field, node.indices).invariant;
      rep.record(suite, "nodes_invariant", inst, "true", str(all_invariant));
      bool some_fails = false;
      for (std::size_t j = 0; j <= n && !some_fails; ++j) {
        IndexSet single(n, {j});
        if (!lat.find(single)) some_fails = !invariance_oracle(field, single).invariant;
      }
      rep.record(suite, "non_node_moves", inst, "true", str(some_fails));
    }
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::size_t n = 1; n <= o.chain_n_max; ++n)
      rep.record(suite, "chain_criterion", "n=" + str(std::uint64_t{n}) + ",p=" + str(std::uint64_t{p}),
                 str(is_totally_ordered(build_lattice(n, p))), str(is_chain_criterion(n, p)));
}

inline void verify_veronese(const VerifyOptions& o, VerifyReport& rep) {
  const std::string suite = "veronese";
  for (std::uint32_t p : {2U, 3U})
    for (std::uint64_t t = 2; t <= o.veronese_t_max; ++t) {
      const auto field = make_field(p, minimal_degree(p, t));
      const VeroneseSpec spec(2, t, field);
      const auto r = veronese_report(spec);
      const std::string inst = "m=2,t=" + str(t) + ",p=" + str(std::uint64_t{p}) + ",e=" +
                               str(std::uint64_t{field.degree()});
      rep.record(suite, "dimension", inst, str(r.dim_bruteforce), str(r.dim_formula + fault(o, suite)));
      rep.record(suite, "base_points", inst, "true", str(r.basis_spans));
      const auto gf_p = make_field(p, 1);
      rep.record(suite, "containment", "m=2,t=" + str(t) + ",GF(" + str(std::uint64_t{p}) + ")", "true",
                 str(veronese_report(VeroneseSpec(2, t, gf_p)).basis_contained));
    }
  for (std::uint32_t p : {2U, 3U, 5U})
    for (std::uint64_t t = 2; t <= o.timmermann_t_max; ++t) {
      BigInt prod = 1;
      const Digits td(t, p);
      for (std::size_t s = 0; s < td.size(); ++s) prod *= td[s] + 1;
      rep.record(suite, "timmermann", "t=" + str(t) + ",p=" + str(std::uint64_t{p}), str(BigInt(t) - prod),
                 str(hyperplane_nucleus_dim(1, t, p)));
      if (t >= 2)
        rep.record(suite, "nrc_specialization", "t=" + str(t) + ",p=" + str(std::uint64_t{p}),
                   str(nucleus_dim_formula(t, p, static_cast<long>(t) - 1).dim), str(hyperplane_nucleus_dim(1, t, p)));
    }
}

}  // namespace detail

[[nodiscard]] inline VerifyReport run_verification(const VerifyOptions& o) {
  VerifyReport rep;
  if (detail::suite_enabled(o, "base_p")) detail::verify_base_p(o, rep);
  if (detail::suite_enabled(o, "nrc")) detail::verify_nrc(o, rep);
  if (detail::suite_enabled(o, "lattice")) detail::verify_lattice(o, rep);
  if (detail::suite_enabled(o, "veronese")) detail::verify_veronese(o, rep);
  return rep;
}

}  // namespace veronucleus

#endif  // VERONUCLEUS_VERIFY_HPP
