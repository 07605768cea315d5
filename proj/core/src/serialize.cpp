#include "wilson/serialize.hpp"

namespace wilson {

namespace {

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();  // out of range for JSON numbers we rely on
}

}  // namespace

nlohmann::json to_json(const IntPoly& coeffs) {
  auto out = nlohmann::json::array();
  for (const auto& c : coeffs) out.push_back(integer_json(c));
  return out;
}

nlohmann::json to_json(const fp::Poly& coeffs) {
  auto out = nlohmann::json::array();
  for (auto c : coeffs) out.push_back(c);
  return out;
}

nlohmann::json to_json(const OrderElement& a) { return to_json(a.coeffs); }

nlohmann::json to_json(const ResidueElement& x, int degree) {
  auto out = nlohmann::json::array();
  for (int i = 0; i < degree; ++i) out.push_back(x.coeffs[i]);
  return out;
}

nlohmann::json to_json(const PrimeIdealData& P) {
  return {{"prime", P.rational_prime},
          {"gen", to_json(P.gen_poly)},
          {"e", P.ram_index},
          {"f", P.res_degree},
          {"index", P.index}};
}

nlohmann::json to_json(const FactoredIdeal& a) {
  auto out = nlohmann::json::array();
  for (const auto& [P, m] : a.factors)
    out.push_back({{"prime", P.rational_prime},
                   {"gen", to_json(P.gen_poly)},
                   {"e", P.ram_index},
                   {"f", P.res_degree},
                   {"m", m}});
  return out;
}

nlohmann::json to_json(const WilsonProduct& w, int degree) {
  return {{"class", w.class_name()},
          {"prime", w.prime ? to_json(*w.prime) : nlohmann::json(nullptr)},
          {"witness", w.witness ? to_json(*w.witness, degree) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const D2Class& c) {
  if (c.kind == D2Class::Kind::Exact) return {{"kind", "exact"}, {"value", c.value}};
  return {{"kind", "more_than_one"}, {"value", nullptr}};
}

nlohmann::json to_json(const Order2Census& c, int degree) {
  auto elems = nlohmann::json::array();
  for (const auto& x : c.elements) elems.push_back(to_json(x, degree));
  return {{"solutions", c.solutions}, {"order2_count", c.order2_count}, {"d2", c.d2}, {"elements", elems}};
}

nlohmann::json ring_dump(const ResidueRing& R, bool with_elements) {
  const int d = R.degree();
  nlohmann::json out;
  out["modulus"] = to_json(R.modulus());
  out["size"] = R.size();
  out["diag"] = R.diag();
  if (with_elements) {
    auto elems = nlohmann::json::array();
    ResidueElement x = R.zero();
    do elems.push_back(to_json(x, d));
    while (R.next(x));
    out["elements"] = std::move(elems);
  }
  auto us = nlohmann::json::array();
  for (const auto& u : units(R)) us.push_back(to_json(u, d));
  out["units"] = std::move(us);
  out["census"] = to_json(order2_census(R), d);
  return out;
}

nlohmann::json to_json(const Error& e) {
  return {{"error", {{"code", error_name(e.code())}, {"message", e.what()}}}};
}

}  // namespace wilson
