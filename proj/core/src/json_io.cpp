#include "lopq/json_io.hpp"

#include <stdexcept>
#include <string>

namespace lopq {

Json to_json(const Scalar& value) { return to_string(value); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(std::to_string(j.get<long long>()));
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Json to_json(const Poly& poly) {
  Json out = Json::array();
  for (const Scalar& c : poly.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Lattice& lattice) {
  Json out;
  if (lattice.is_q()) {
    const auto& q = lattice.q_params();
    out["type"] = "q";
    out["p"] = to_json(q.p);
    out["c3"] = to_json(q.c3);
    out["m"] = to_json(q.m);
  } else {
    const auto& r = lattice.quadratic_params();
    out["type"] = "quadratic";
    out["c4"] = to_json(r.c4);
    out["c5"] = to_json(r.c5);
    out["c6"] = to_json(r.c6);
  }
  out["kind"] = to_string(lattice.kind());
  out["alpha"] = to_json(lattice.alpha());
  out["beta"] = to_json(lattice.beta());
  out["delta"] = to_json(lattice.delta());
  return out;
}

Json to_json(const PearsonPair& pair) {
  Json out;
  out["a"] = to_json(pair.a);
  out["b"] = to_json(pair.b);
  out["c"] = to_json(pair.c);
  out["d"] = to_json(pair.d);
  out["e"] = to_json(pair.e);
  return out;
}

Json to_json(const MomentSeq& u) {
  Json out = Json::array();
  for (const Scalar& m : u.moments()) out.push_back(to_json(m));
  return out;
}

Json to_json(const TTRRCoeffs& ttrr) {
  Json out;
  Json b = Json::array();
  for (const Scalar& x : ttrr.B) b.push_back(to_json(x));
  Json c = Json::array();
  for (const Scalar& x : ttrr.C) c.push_back(to_json(x));
  out["B"] = std::move(b);
  out["C"] = std::move(c);
  return out;
}

Json to_json(const Failure& failure) {
  Json out;
  out["n"] = failure.n;
  out["kind"] = to_string(failure.kind);
  return out;
}

namespace {

Json up_to(const std::optional<long>& v) {
  if (v) return *v;
  return "all";
}

Json scalars(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const Scalar& x : xs) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const RegularityReport& report) {
  Json out;
  out["N"] = report.N;
  out["d_seq"] = scalars(report.d_seq);
  out["e_seq"] = scalars(report.e_seq);
  out["phi_values"] = scalars(report.phi_values);
  out["admissible_up_to"] = up_to(report.admissible_up_to);
  out["regular_up_to"] = up_to(report.regular_up_to);
  out["first_failure"] = report.first_failure ? to_json(*report.first_failure) : Json(nullptr);
  return out;
}

Json to_json(const RodriguesVerdict& verdict) {
  Json out;
  out["n"] = verdict.n;
  out["M"] = verdict.M;
  out["equal"] = verdict.equal;
  out["first_mismatch"] = verdict.first_mismatch ? Json(*verdict.first_mismatch) : Json(nullptr);
  out["lhs"] = scalars(verdict.lhs);
  out["rhs"] = scalars(verdict.rhs);
  return out;
}

namespace {

Scalar required(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("lattice: missing key \"") + key + "\"");
  return scalar_from_json(j.at(key));
}

Scalar optional_key(const Json& j, const char* key) {
  return j.contains(key) ? scalar_from_json(j.at(key)) : Scalar(0);
}

}  // namespace

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("lattice: expected an object");
  const std::string type = j.value("type", "");
  if (type == "q") {
    return Lattice::q_lattice(required(j, "p"), optional_key(j, "c3"), optional_key(j, "m"));
  }
  if (type == "quadratic") {
    return Lattice::quadratic(optional_key(j, "c4"), optional_key(j, "c5"), optional_key(j, "c6"));
  }
  throw std::invalid_argument("lattice: \"type\" must be \"q\" or \"quadratic\"");
}

PearsonPair pair_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("pair: expected an object");
  return PearsonPair::make(optional_key(j, "a"), optional_key(j, "b"), optional_key(j, "c"),
                           optional_key(j, "d"), optional_key(j, "e"));
}

}  // namespace lopq
