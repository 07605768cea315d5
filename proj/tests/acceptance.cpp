// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "support.hpp"
#include "wilson/wilson.hpp"

using namespace wilson;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

bool gauss_form(std::uint64_t A) {
  if (A == 4) return true;
  if (A % 2 == 0) A /= 2;
  if (A < 3 || A % 2 == 0) return false;
  std::uint64_t q = 3;
  while (A % q) q += 2;
  while (A % q == 0) A /= q;
  return A == 1;
}

FactoredIdeal prime_power(const PrimeIdealData& P, int n) { return FactoredIdeal{{{P, n}}}; }

// 1. Gauss sweep over Z/A.
Outcome gauss_sweep() {
  Outcome out;
  const auto z = make_order("x");
  for (std::uint64_t A = 2; A <= 2000; ++A) {
    const auto R = build_residue_ring(z, factor_element(z, z.from_integer(static_cast<long>(A))));
    const auto prod = unit_product(R);
    const bool minus = A > 2 && prod == R.from_integer(-1);
    const bool one = prod == R.one();
    out.require(minus || one, "A = " + std::to_string(A) + ": product is neither 1 nor -1");
    out.require(minus == gauss_form(A), "A = " + std::to_string(A) + ": brute force disagrees with the rule");
    out.require((classify_gauss(A) == -1) == minus, "A = " + std::to_string(A) + ": classify_gauss disagrees");
  }
  return out;
}

// 2. d2 of (Z/p^n)^x.
Outcome prime_power_table() {
  Outcome out;
  const auto z = make_order("x");
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    const auto P = factor_prime(z, p)[0];
    std::uint64_t size = p;
    for (int n = 1; size <= kDefaultEnumerationCap; ++n, size *= p) {
      const int d2 = order2_census(build_residue_ring(z, prime_power(P, n))).d2;
      const int expect = p != 2 ? 1 : n == 1 ? 0 : n == 2 ? 1 : 2;
      out.require(d2 == expect, std::to_string(p) + "^" + std::to_string(n) + ": d2 = " + std::to_string(d2));
    }
  }
  return out;
}

// 3. Local d2 at the even primes of the catalog, every n within the cap.
Outcome local_catalog(int& hasse_cases) {
  Outcome out;
  for (const auto& field : testing::catalog()) {
    const auto o = make_order(field.poly);
    for (const auto& P : factor_prime(o, 2)) {
      for (int n = 1; prime_power(P, n).norm() <= kDefaultEnumerationCap; ++n) {
        const auto R = build_residue_ring(o, prime_power(P, n));
        const int d2 = order2_census(R).d2;
        const D2Class c = d2_local(2, P.ram_index, P.res_degree, n);
        if (n > 2 * P.ram_index) {
          ++hasse_cases;
          out.require(c.is_exact(1 + P.ram_index * P.res_degree), field.name + ": Hasse value not exact");
        }
        out.require(c.admits(d2), field.name + " n = " + std::to_string(n) + ": census d2 = " + std::to_string(d2));
      }
    }
  }
  return out;
}

// 4. Evaluated witness against the brute-force product for every small ideal.
Outcome global_oracle(std::size_t& cases) {
  Outcome out;
  for (const auto& field : testing::catalog()) {
    const auto o = make_order(field.poly);
    const auto en = cli::enumerate_ideals(o, 13, kDefaultEnumerationCap, 8);
    out.require(en.skipped_primes.empty(), field.name + ": order not maximal below 13");
    for (const auto& a : en.ideals) {
      const auto R = build_residue_ring(o, a);
      const auto w = classify_global(o, a);
      out.require(w.witness.has_value(), field.name + " " + a.label() + ": no witness");
      if (!w.witness) continue;
      out.require(*w.witness == unit_product(R), field.name + " " + a.label() + ": witness != oracle");
      ++cases;
    }
  }
  return out;
}

// 5. Cyclotomic pattern 1, 1+pi, 1+pi^2, 1, ...
Outcome cyclotomic() {
  Outcome out;
  for (auto [t, n_max] : {std::pair{2, 8}, std::pair{3, 5}}) {
    cli::RunConfig cfg;
    cfg.command = "cyclo-demo";
    cfg.t = t;
    cfg.n_max = n_max;
    const auto r = cli::run(cfg);
    out.require(r.exit_code == 0 && r.json["pattern_ok"] == true, "t = " + std::to_string(t) + ": pattern broken");
    out.require(r.json["rows"].size() == static_cast<std::size_t>(n_max), "t = " + std::to_string(t) + ": rows");
  }
  return out;
}

// 6. 1+pi = -1 in Z/4, 1+pi^2 = -1 in Z[sqrt2]/p^3, -1 = 1 iff even and n <= e.
Outcome coincidences() {
  Outcome out;
  const auto z = make_order("x");
  const auto z4 = build_residue_ring(z, parse_ideal(z, "2^2"));
  out.require(z4.reduce(symbol_element(z, Order2Symbol::OnePlusPi, z.from_integer(2))) == z4.from_integer(-1),
              "Z/4");
  const auto r2 = make_order("x^2-2");
  const auto P = factor_prime(r2, 2)[0];
  const auto R = build_residue_ring(r2, prime_power(P, 3));
  out.require(R.reduce(symbol_element(r2, Order2Symbol::OnePlusPiSquared, uniformizer(r2, P))) == R.from_integer(-1),
              "Z[sqrt2]/p^3");
  out.require(R.reduce(symbol_element(r2, Order2Symbol::OnePlusPiSquared, r2.theta())) == R.from_integer(-1),
              "Z[sqrt2]/p^3 with pi = sqrt2");

  for (const auto& field : testing::extended_catalog()) {
    const auto o = make_order(field.poly);
    for (auto p : primes_up_to(13))
      for (const auto& Q : factor_prime(o, p))
        for (int n = 1; n <= 8 && prime_power(Q, n).norm() <= kDefaultEnumerationCap; ++n) {
          const auto S = build_residue_ring(o, prime_power(Q, n));
          const bool coincide = S.from_integer(-1) == S.one();
          out.require(coincide == (Q.is_even() && n <= Q.ram_index),
                      field.name + " " + Q.label() + "^" + std::to_string(n));
        }
  }
  return out;
}

// 7. Group sum of order-2 elements on random abelian groups.
Outcome random_group_sums() {
  Outcome out;
  std::mt19937_64 rng(20260);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> orders(1 + rng() % 4);
    for (auto& n : orders) n = 2 + static_cast<int>(rng() % 15);
    out.require(group_sum({orders}) == testing::enumerated_group_sum(orders), "trial " + std::to_string(trial));
  }
  return out;
}

// 8. Fundamental identity, unit counts, census shape, U1/U3 and U1/U4.
Outcome structure() {
  Outcome out;
  for (const auto& field : testing::extended_catalog()) {
    const auto o = make_order(field.poly);
    for (auto p : primes_up_to(50)) {
      int sum = 0;
      for (const auto& P : factor_prime(o, p)) sum += P.ram_index * P.res_degree;
      out.require(sum == o.degree(), field.name + ": sum ef at " + std::to_string(p));
    }
    for (const auto& a : cli::enumerate_ideals(o, 13, 1 << 14, 8).ideals) {
      const auto R = build_residue_ring(o, a);
      const auto census = order2_census(R);
      out.require(units(R).size() == R.unit_count_formula(), field.name + " " + a.label() + ": unit count");
      out.require(census.order2_count + 1 == (std::uint64_t{1} << census.d2),
                  field.name + " " + a.label() + ": census not 2^k - 1");
    }
    for (const auto& P : factor_prime(o, 2)) {
      if (P.res_degree != 1 || P.ram_index < 2) continue;
      const auto pi = uniformizer(o, P);
      const auto R3 = build_residue_ring(o, prime_power(P, 3));
      const std::vector<ResidueElement> gen{R3.reduce(add(o, o.one(), pi))};
      out.require(generated_subgroup(R3, gen).size() == principal_units(R3, 1).size(),
                  field.name + ": 1+pi does not generate U1/U3");
      const auto R4 = build_residue_ring(o, prime_power(P, 4));
      const auto U1 = principal_units(R4, 1);
      out.require(U1.size() == 8, field.name + ": |U1/U4| != 8");
      for (const auto& x : U1) out.require(4 % element_order(R4, x) == 0, field.name + ": U1/U4 is cyclic");
    }
  }
  return out;
}

}  // namespace

int main() {
  int hasse = 0;
  std::size_t prop2_cases = 0;
  struct Criterion {
    std::string name;
    double budget;  // seconds; 0 means no bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Gauss sweep 2 <= A <= 2000", 10, gauss_sweep},
      {"d2 table for (Z/p^n)^x", 5, prime_power_table},
      {"local d2 over the catalog at 2", 60, [&] { return local_catalog(hasse); }},
      {"global witness equals brute force", 300, [&] { return global_oracle(prop2_cases); }},
      {"2-power cyclotomic pattern", 30, cyclotomic},
      {"coincidence identities", 0, coincidences},
      {"group sum on 500 random groups", 10, random_group_sums},
      {"structural checks", 0, structure},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget > 0 && secs > criteria[i].budget)
      r.require(false, "over the " + std::to_string(static_cast<int>(criteria[i].budget)) + " s budget");
    std::string note;
    if (i == 2) note = ", " + std::to_string(hasse) + " deep-range cases";
    if (i == 3) note = ", " + std::to_string(prop2_cases) + " ideals";
    std::printf("CRITERION %zu: %s  %s (%.2f s%s)%s%s\n", i + 1, r.ok ? "PASS" : "FAIL", criteria[i].name.c_str(),
                secs, note.c_str(), r.ok ? "" : " -- ", r.detail.c_str());
    std::fflush(stdout);
    failures += !r.ok;
  }
  return failures == 0 ? 0 : 1;
}
