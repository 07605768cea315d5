#pragma once

#include <nlohmann/json.hpp>

#include "wilson/error.hpp"
#include "wilson/prime_factor.hpp"
#include "wilson/residue_ring.hpp"
#include "wilson/wilson.hpp"

namespace wilson {

nlohmann::json to_json(const IntPoly& coeffs);
nlohmann::json to_json(const fp::Poly& coeffs);
nlohmann::json to_json(const OrderElement& a);
nlohmann::json to_json(const ResidueElement& x, int degree);

// {"prime": p, "gen": [c0..], "e": e, "f": f, "index": i}
nlohmann::json to_json(const PrimeIdealData& P);
// [{"prime": p, "gen": [c0..], "e": e, "f": f, "m": m}, ...]
nlohmann::json to_json(const FactoredIdeal& a);
// {"class": ..., "prime": {...}|null, "witness": [c0..]|null}
nlohmann::json to_json(const WilsonProduct& w, int degree);
nlohmann::json to_json(const D2Class& c);
nlohmann::json to_json(const Order2Census& c, int degree);

/// Elements (when `with_elements`), units and census of a ring.
nlohmann::json ring_dump(const ResidueRing& R, bool with_elements = true);

// {"error": {"code": "NonMaximalOrder", "message": "..."}}
nlohmann::json to_json(const Error& e);

}  // namespace wilson
