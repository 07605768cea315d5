#include "commands.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "wilson/error.hpp"
#include "wilson/serialize.hpp"
#include "wilson/wilson.hpp"

namespace wilson::cli {

namespace {

using nlohmann::json;

std::string show(const ResidueElement& x, int degree) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < degree; ++i) os << (i ? "," : "") << x.coeffs[i];
  os << ")";
  return os.str();
}

std::string show(const D2Class& c) {
  return c.kind == D2Class::Kind::Exact ? std::to_string(c.value) : std::string(">1");
}

FactoredIdeal resolve_ideal(const NumberFieldOrder& o, const RunConfig& cfg) {
  if (cfg.ideal && cfg.gen)
    throw Error(ErrorCode::InvalidArgument, "give either --ideal or --gen, not both");
  if (cfg.ideal) return parse_ideal(o, *cfg.ideal);
  if (cfg.gen) {
    const IntPoly c = parse_polynomial(*cfg.gen);
    std::vector<Integer> coeffs(static_cast<std::size_t>(o.degree()));
    if (c.size() > coeffs.size())
      throw Error(ErrorCode::DegreeMismatch, "generator has more coordinates than the degree");
    std::copy(c.begin(), c.end(), coeffs.begin());
    return factor_element(o, o.element(coeffs));
  }
  throw Error(ErrorCode::InvalidArgument, "an ideal is required: --ideal or --gen");
}

struct Verification {
  WilsonProduct closed;
  ResidueElement witness;
  ResidueElement oracle;
  Order2Census census;
  bool match = false;
};

Verification verify_one(const NumberFieldOrder& o, const FactoredIdeal& a, std::uint64_t cap) {
  const ResidueRing R = build_residue_ring(o, a, cap);
  Verification v;
  v.closed = classify_global(o, a, 0);
  v.witness = evaluate_witness(R, v.closed);
  v.closed.witness = v.witness;
  v.oracle = unit_product(R);
  v.census = order2_census(R);
  v.match = v.witness == v.oracle && v.closed.d2.admits(v.census.d2);
  return v;
}

json verification_json(const NumberFieldOrder& o, const FactoredIdeal& a, const Verification& v, bool full_census) {
  const int d = o.degree();
  json census = {{"d2", v.census.d2}, {"order2_count", v.census.order2_count}};
  if (full_census) census = to_json(v.census, d);
  return {{"ideal", a.label()},
          {"factors", to_json(a)},
          {"norm", a.norm().get_ui()},
          {"closed_form", to_json(v.closed, d)},
          {"d2_closed_form", to_json(v.closed.d2)},
          {"oracle", to_json(v.oracle, d)},
          {"census", census},
          {"match", v.match},
          {"verdict", v.match ? "MATCH" : "MISMATCH"}};
}

std::string verification_text(const NumberFieldOrder& o, const FactoredIdeal& a, const Verification& v) {
  const int d = o.degree();
  std::ostringstream os;
  os << "ideal      " << a.label() << "  (norm " << a.norm() << ")\n"
     << "class      " << v.closed.class_name();
  if (v.closed.prime) os << " at " << v.closed.prime->label();
  os << "\nwitness    " << show(v.witness, d) << "\n"
     << "oracle     " << show(v.oracle, d) << "\n"
     << "d2         closed form " << show(v.closed.d2) << ", census " << v.census.d2 << "\n"
     << (v.match ? "MATCH" : "MISMATCH") << "\n";
  if (!v.match) {
    os << "order-2 elements:";
    for (const auto& x : v.census.elements) os << " " << show(x, d);
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::uint64_t default_cap() {
  if (const char* env = std::getenv("WILSON_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return v;
    throw Error(ErrorCode::InvalidArgument, std::string("WILSON_CAP must be an integer >= 2, got '") + env + "'");
  }
  return kDefaultEnumerationCap;
}

IntPoly cyclotomic_2power(int t) {
  if (t < 2 || t > 4) throw Error(ErrorCode::InvalidArgument, "t must be in 2..4 (degree <= 8)");
  IntPoly f(static_cast<std::size_t>(1) << (t - 1), Integer(0));
  f[0] = 1;
  f.push_back(1);
  return f;
}

CommandResult cmd_factor(const RunConfig& cfg) {
  const NumberFieldOrder o = make_order(cfg.poly);
  const bool maximal = dedekind_maximal(o, cfg.prime);
  const auto primes = factor_prime(o, cfg.prime);  // throws NonMaximalOrder

  CommandResult r;
  json factors = json::array();
  int sum = 0;
  std::ostringstream os;
  os << "f = " << format_polynomial(o.defining_poly()) << ", p = " << cfg.prime
     << ", maximal = " << (maximal ? "true" : "false") << "\n";
  for (const auto& P : primes) {
    factors.push_back(to_json(P));
    sum += P.ram_index * P.res_degree;
    os << "  [" << P.index << "] g = " << format_polynomial(P.gen_lift()) << "  e = " << P.ram_index
       << "  f = " << P.res_degree << "\n";
  }
  os << "sum e*f = " << sum << "\n";
  r.json = {{"command", "factor"},
            {"poly", to_json(o.defining_poly())},
            {"prime", cfg.prime},
            {"maximal", maximal},
            {"factors", factors},
            {"sum_ef", sum}};
  r.text = os.str();
  return r;
}

CommandResult cmd_classify(const RunConfig& cfg) {
  const NumberFieldOrder o = make_order(cfg.poly);
  const FactoredIdeal a = resolve_ideal(o, cfg);
  const WilsonProduct w = classify_global(o, a, cfg.cap);

  CommandResult r;
  r.json = {{"command", "classify"},
            {"poly", to_json(o.defining_poly())},
            {"ideal", a.label()},
            {"factors", to_json(a)},
            {"d2", to_json(w.d2)},
            {"result", to_json(w, o.degree())}};
  std::ostringstream os;
  os << "ideal   " << a.label() << "\nd2      " << show(w.d2) << "\nclass   " << w.class_name();
  if (w.prime) os << " at " << w.prime->label();
  os << "\nwitness " << (w.witness ? show(*w.witness, o.degree()) : std::string("(ring above cap)")) << "\n";
  r.text = os.str();
  return r;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const NumberFieldOrder o = make_order(cfg.poly);
  const FactoredIdeal a = resolve_ideal(o, cfg);
  const Verification v = verify_one(o, a, cfg.cap);

  CommandResult r;
  r.json = verification_json(o, a, v, !v.match);
  r.json["command"] = "verify";
  r.json["poly"] = to_json(o.defining_poly());
  if (cfg.dump) r.json["dump"] = ring_dump(build_residue_ring(o, a, cfg.cap));
  r.text = verification_text(o, a, v);
  if (cfg.dump) r.text += r.json["dump"].dump(2) + "\n";
  r.exit_code = v.match ? 0 : 1;
  return r;
}

IdealEnumeration enumerate_ideals(const NumberFieldOrder& o, std::uint64_t prime_bound,
                                  std::uint64_t max_norm, int max_exponent) {
  IdealEnumeration out;
  std::vector<PrimeIdealData> primes;
  for (std::uint64_t p : primes_up_to(std::min(prime_bound, max_norm))) {
    if (!dedekind_maximal(o, p)) {
      out.skipped_primes.push_back(p);
      continue;
    }
    for (auto& P : factor_prime(o, p))
      if (P.norm() <= Integer(static_cast<unsigned long>(max_norm))) primes.push_back(std::move(P));
  }

  FactoredIdeal current;
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t start, std::uint64_t norm) {
    for (std::size_t i = start; i < primes.size(); ++i) {
      const std::uint64_t q = primes[i].norm().get_ui();
      std::uint64_t n = norm;
      for (int m = 1; m <= max_exponent && n <= max_norm / q; ++m) {
        n *= q;
        current.factors.push_back({primes[i], m});
        out.ideals.push_back(current);
        walk(i + 1, n);
        current.factors.pop_back();
      }
    }
  };
  walk(0, 1);
  return out;
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  const NumberFieldOrder o = make_order(cfg.poly);
  const IdealEnumeration en = enumerate_ideals(o, cfg.max_norm, cfg.max_norm);

  std::map<std::string, int> classes;
  json mismatches = json::array();
  json nontrivial_norms = json::array();
  std::size_t matches = 0;
  bool gauss_agrees = true;
  std::ostringstream os;
  for (const auto& a : en.ideals) {
    const Verification v = verify_one(o, a, cfg.cap);
    ++classes[std::string(v.closed.class_name())];
    if (v.match) ++matches;
    else {
      mismatches.push_back(verification_json(o, a, v, true));
      os << verification_text(o, a, v);
    }
    if (v.closed.kind != WilsonProduct::Kind::One) nontrivial_norms.push_back(a.norm().get_ui());
    if (o.degree() == 1) {
      const ResidueRing R = build_residue_ring(o, a, cfg.cap);
      const int oracle_sign = v.oracle == R.neg(R.one()) && R.size() > 2 ? -1 : 1;
      gauss_agrees = gauss_agrees && classify_gauss(a.norm().get_ui()) == oracle_sign;
    }
  }
  std::sort(nontrivial_norms.begin(), nontrivial_norms.end());

  CommandResult r;
  r.json = {{"command", "sweep"},
            {"poly", to_json(o.defining_poly())},
            {"max_norm", cfg.max_norm},
            {"cases", en.ideals.size()},
            {"matches", matches},
            {"mismatches", mismatches},
            {"classes", classes},
            {"nontrivial_norms", nontrivial_norms},
            {"skipped_primes", en.skipped_primes}};
  if (o.degree() == 1) r.json["gauss_agrees"] = gauss_agrees;
  os << "cases " << en.ideals.size() << ", matches " << matches << ", mismatches "
     << en.ideals.size() - matches << "\n";
  for (const auto& [name, count] : classes) os << "  " << name << ": " << count << "\n";
  if (!en.skipped_primes.empty()) {
    os << "skipped non-maximal primes:";
    for (auto p : en.skipped_primes) os << " " << p;
    os << "\n";
  }
  if (o.degree() == 1) os << "gauss rule agrees: " << (gauss_agrees ? "yes" : "no") << "\n";
  r.text = os.str();
  r.exit_code = matches == en.ideals.size() && gauss_agrees ? 0 : 1;
  return r;
}

CommandResult cmd_gauss(const RunConfig& cfg) {
  const IntPoly x{0, 1};
  const NumberFieldOrder z = make_order(std::span<const Integer>(x));
  json rows = json::array();
  std::size_t agree = 0;
  std::ostringstream os;
  for (std::uint64_t A = 2; A <= cfg.max_A; ++A) {
    const OrderElement gen = z.from_integer(static_cast<unsigned long>(A));
    const ResidueRing R = build_residue_ring(z, factor_element(z, gen), cfg.cap);
    const ResidueElement prod = unit_product(R);
    // In Z/2 the classes of 1 and -1 coincide; report +1 there.
    const int brute = prod == R.neg(R.one()) && A > 2 ? -1 : 1;
    const int rule = classify_gauss(A);
    agree += brute == rule;
    rows.push_back({{"A", A}, {"product", prod.coeffs[0]}, {"brute_force", brute}, {"gauss", rule}});
    if (brute != rule) os << "A = " << A << ": brute force " << brute << ", rule " << rule << "\n";
  }
  const std::size_t total = cfg.max_A >= 2 ? cfg.max_A - 1 : 0;
  CommandResult r;
  r.json = {{"command", "gauss"}, {"max_A", cfg.max_A}, {"cases", total}, {"agree", agree}, {"rows", rows}};
  os << "A in [2, " << cfg.max_A << "]: " << agree << " of " << total << " agree with Gauss's rule\n";
  r.text = os.str();
  r.exit_code = agree == total ? 0 : 1;
  return r;
}

CommandResult cmd_cyclo_demo(const RunConfig& cfg) {
  const IntPoly f = cyclotomic_2power(cfg.t);
  const NumberFieldOrder o = make_order(std::span<const Integer>(f));
  const auto above2 = factor_prime(o, 2);
  const PrimeIdealData& P = above2.at(0);
  // pi = 1 - zeta
  const OrderElement pi = sub(o, o.one(), o.theta());

  json rows = json::array();
  bool pattern_ok = true;
  std::ostringstream os;
  os << "Q(zeta_" << (1 << cfg.t) << "), f = " << format_polynomial(f) << ", e = " << P.ram_index
     << ", f = " << P.res_degree << ", pi = 1 - zeta\n";
  for (int n = 1; n <= cfg.n_max; ++n) {
    const FactoredIdeal a{{{P, n}}};
    const ResidueRing R = build_residue_ring(o, a, cfg.cap);
    const WilsonProduct w = classify_global(o, a, 0);
    const ResidueElement closed = evaluate_witness(R, w, pi);
    const ResidueElement oracle = unit_product(R);

    const ResidueElement one = R.one();
    const ResidueElement one_pi = R.reduce(add(o, o.one(), pi));
    const ResidueElement one_pi2 = R.reduce(add(o, o.one(), mul(o, pi, pi)));
    auto symbol = [&](const ResidueElement& x) -> std::string {
      if (x == one) return "1";
      if (x == one_pi) return "1+pi";
      if (x == one_pi2) return "1+pi^2";
      return show(x, o.degree());
    };
    const std::string expected = n == 2 ? "1+pi" : n == 3 ? "1+pi^2" : "1";
    const bool ok = closed == oracle && symbol(oracle) == expected;
    pattern_ok = pattern_ok && ok;
    rows.push_back({{"n", n},
                    {"class", w.class_name()},
                    {"closed_form", symbol(closed)},
                    {"oracle", symbol(oracle)},
                    {"expected", expected},
                    {"witness", to_json(oracle, o.degree())},
                    {"match", ok}});
    os << "n = " << n << ": closed form " << symbol(closed) << ", oracle " << symbol(oracle)
       << (ok ? "" : "  <-- expected " + expected) << "\n";
  }
  CommandResult r;
  r.json = {{"command", "cyclo-demo"},
            {"t", cfg.t},
            {"poly", to_json(f)},
            {"e", P.ram_index},
            {"f", P.res_degree},
            {"rows", rows},
            {"pattern_ok", pattern_ok}};
  os << (pattern_ok ? "pattern 1, 1+pi, 1+pi^2, 1, ... confirmed" : "pattern MISMATCH") << "\n";
  r.text = os.str();
  r.exit_code = pattern_ok ? 0 : 1;
  return r;
}

CommandResult run(const RunConfig& cfg) {
  try {
    if (cfg.cap < 2) throw Error(ErrorCode::InvalidArgument, "--cap must be at least 2");
    if (cfg.command == "factor") return cmd_factor(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "gauss") return cmd_gauss(cfg);
    if (cfg.command == "cyclo-demo") return cmd_cyclo_demo(cfg);
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    CommandResult r;
    r.json = to_json(e);
    r.text = std::string("error: ") + std::string(error_name(e.code())) + ": " + e.what() + "\n";
    r.exit_code = 2;
    return r;
  }
}

}  // namespace wilson::cli
